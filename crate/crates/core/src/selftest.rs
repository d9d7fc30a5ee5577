//! The acceptance suite: thirteen exact checks over seeded random samples.

use crate::classify::is_spherical;
use crate::complex::{coset_poset_ball, derive, Kind};
use crate::coxeter::Coxeter;
use crate::error::Result;
use crate::euclid::Euclid;
use crate::even::{even_intersect_reduce, example_graph};
use crate::fc::Amalgam;
use crate::garside::{Garside, GarsideElement, Order};
use crate::graph::{families, CoxeterGraph};
use crate::oracle::NoOracle;
use crate::parabolic::{closure, intersect, parabolic_ball, Parabolic};
use crate::salvetti::{convexity_scan, retract_word};
use crate::word::{ArtinWord, Gen, GenSet, Letter};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;
use std::sync::Arc;

pub const DEFAULT_SEED: u64 = 20_240_611;

/// Sample sizes and radii fixed by the suite.
pub mod pinned {
    pub const RANDOM_ELEMENTS: usize = 500;
    pub const MAX_RANK: usize = 3;
    pub const MAX_WORD_LEN: usize = 10;
    pub const CLOSURE_CANONICAL_LEN: usize = 2;
    pub const CLOSURE_CONJUGATOR_LEN: usize = 2;
    pub const INTERSECTION_PAIRS: usize = 50;
    pub const INTERSECTION_CONJUGATOR_LEN: usize = 3;
    pub const INTERSECTION_BALL: usize = 5;
    pub const CONVEXITY_LEN: usize = 6;
    pub const RETRACTION_WORDS: usize = 1000;
    pub const RETRACTION_WORD_LEN: usize = 12;
    pub const EVEN_PAIRS: usize = 40;
    pub const EVEN_BALL: usize = 4;
    pub const FC_WORDS: usize = 500;
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const NAMES: [&str; 13] = [
    "h3-garside-element",
    "center-table",
    "inverse-formula",
    "mixed-forms",
    "swap-recurrence",
    "closure-minimality",
    "intersection-ball-consistency",
    "convexity-scan",
    "salvetti-retraction",
    "even-worked-example",
    "euclidean-embedding",
    "fc-word-problem",
    "complex-export",
];

/// Runs one criterion; errors count as failures.
pub fn run(id: u8, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let res = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(&mut rng),
        4 => c4(&mut rng),
        5 => c5(&mut rng),
        6 => c6(),
        7 => c7(&mut rng),
        8 => c8(),
        9 => c9(&mut rng),
        10 => c10(&mut rng),
        11 => c11(&mut rng),
        12 => c12(&mut rng),
        13 => c13(),
        _ => Ok(Err(format!("no criterion {id}"))),
    };
    let (passed, detail) = match res {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    let name = NAMES.get(id.wrapping_sub(1) as usize).copied().unwrap_or("unknown");
    Outcome { id, name, passed, detail }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    (1..=13).map(|id| run(id, seed)).collect()
}

impl Outcome {
    pub fn line(&self) -> String {
        format!("criterion {:>2} {} {}: {}", self.id, if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

type Check = Result<std::result::Result<String, String>>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

macro_rules! check {
    ($cond:expr, $($fmt:tt)*) => {
        if let Err(m) = ensure($cond, || format!($($fmt)*)) {
            return Ok(Err(m));
        }
    };
}

fn parse(text: &str) -> Arc<CoxeterGraph> {
    Arc::new(CoxeterGraph::parse(text).expect("static graph"))
}

fn random_word<R: Rng>(rng: &mut R, gens: &[Gen], max_len: usize) -> ArtinWord {
    let len = rng.gen_range(0..=max_len);
    ArtinWord((0..len).map(|_| Letter { gen: *gens.choose(rng).unwrap(), inv: rng.gen_bool(0.5) }).collect())
}

fn small_ambients() -> Vec<Arc<Garside>> {
    let graphs = vec![
        families::type_a(1),
        families::type_a(2),
        families::type_a(3),
        families::type_b(2),
        families::type_b(3),
        families::dihedral(5),
        families::dihedral(6),
        families::type_h(3),
        CoxeterGraph::parse("generators: a b c\ndefault: 2\na b 3\n").unwrap(),
    ];
    graphs
        .into_iter()
        .map(|g| {
            let g = Arc::new(g);
            Garside::shared(&g, g.all()).expect("spherical")
        })
        .collect()
}

fn random_element<R: Rng>(rng: &mut R, ambients: &[Arc<Garside>]) -> Result<GarsideElement> {
    let gs = ambients.choose(rng).unwrap();
    let gens: Vec<Gen> = gs.subset().iter().collect();
    debug_assert!(gens.len() <= pinned::MAX_RANK);
    gs.normalize(&random_word(rng, &gens, pinned::MAX_WORD_LEN))
}

fn first_simple(e: &GarsideElement) -> crate::garside::Simple {
    let gs = e.garside();
    if e.power() > 0 {
        gs.delta()
    } else {
        e.factors().first().copied().unwrap_or(gs.identity_simple())
    }
}

fn c1() -> Check {
    let g = parse("generators: a b c\ndefault: 2\na b 3\nb c 5\n");
    let gs = Garside::shared(&g, g.all())?;
    let hand = g.parse_word("b a b c b a c b c b a b c b c")?;
    let reduced = Coxeter::new(g.clone()).theta(&hand)?.len() == hand.len();
    let delta = gs.delta_element(g.all())?;
    let as_elem = gs.normalize(&hand)?;
    let abc5 = gs.normalize(&g.parse_word("a b c")?.pow(5))?;
    check!(reduced, "hand word is not reduced");
    check!(hand.len() == 15 && gs.delta_len() == 15, "length {} / {}", hand.len(), gs.delta_len());
    check!(as_elem == delta, "hand word differs from Δ");
    check!(abc5 == delta, "(abc)^5 differs from Δ");
    Ok(Ok(format!(
        "babcbacbcbabcbc is reduced, 15 letters, equals Δ and (abc)^5; canonical word {}",
        g.format_word(&delta.to_word())
    )))
}

fn c2() -> Check {
    let mut cases: Vec<(String, CoxeterGraph)> = Vec::new();
    for n in 1..=4 {
        cases.push((format!("A{n}"), families::type_a(n)));
    }
    for n in 2..=3 {
        cases.push((format!("B{n}"), families::type_b(n)));
    }
    cases.push(("D4".into(), families::type_d(4)));
    for p in 5..=8 {
        cases.push((format!("I2({p})"), families::dihedral(p)));
    }
    cases.push(("H3".into(), families::type_h(3)));
    let mut summary = Vec::new();
    for (name, g) in cases {
        let g = Arc::new(g);
        let gs = Garside::shared(&g, g.all())?;
        let k = gs.types()[0].k_delta;
        let z = gs.center_generator(g.all())?;
        let cox: Vec<Gen> = (0..g.rank() as Gen).collect();
        let expected = gs.normalize(&ArtinWord::positive(&cox).pow(k as i64))?;
        check!(z == expected, "{name}: z differs from (s1⋯sn)^{k}");
        let d = gs.delta_power(1);
        check!(z == d || z == gs.delta_power(2), "{name}: z is neither Δ nor Δ²");
        for s in g.all().iter() {
            let a = gs.from_simple(gs.atom(s)?);
            check!(z.mul(&a)? == a.mul(&z)?, "{name}: z does not commute with {}", g.name(s));
        }
        summary.push(format!("{name}:{k}"));
    }
    Ok(Ok(format!("k_Δ {}", summary.join(" "))))
}

fn c3(rng: &mut ChaCha8Rng) -> Check {
    let ambients = small_ambients();
    for i in 0..pinned::RANDOM_ELEMENTS {
        let g = random_element(rng, &ambients)?;
        let inv = g.inverse();
        check!(inv.is_left_weighted(), "sample {i}: inverse {} is not left-weighted", inv.display());
        check!(g.mul(&inv)?.is_identity(), "sample {i}: g·g⁻¹ ≠ 1");
    }
    Ok(Ok(format!("{} samples", pinned::RANDOM_ELEMENTS)))
}

fn c4(rng: &mut ChaCha8Rng) -> Check {
    let ambients = small_ambients();
    let mut checked_sup = 0;
    for i in 0..pinned::RANDOM_ELEMENTS {
        let g = random_element(rng, &ambients)?;
        let gs = g.garside();
        let (a, b) = g.mixed_np();
        check!(a.is_positive() && b.is_positive(), "sample {i}: a or b not positive");
        check!(a.inverse().mul(&b)? == g, "sample {i}: a⁻¹b ≠ g");
        check!(
            gs.meet(first_simple(&a), first_simple(&b), Order::Prefix) == gs.identity_simple(),
            "sample {i}: a ∧ b ≠ 1"
        );
        if g.inf() < 0 && g.sup() >= 0 {
            checked_sup += 1;
            check!(a.sup() == -g.inf() && b.sup() == g.sup(), "sample {i}: sup identities fail");
        } else if g.sup() < 0 {
            check!(b.is_identity(), "sample {i}: negative element has b ≠ 1");
        }
    }
    Ok(Ok(format!("{} samples, sup identities on {checked_sup}", pinned::RANDOM_ELEMENTS)))
}

fn c5(rng: &mut ChaCha8Rng) -> Check {
    let ambients = small_ambients();
    let mut longest = 0;
    for i in 0..pinned::RANDOM_ELEMENTS {
        let g = random_element(rng, &ambients)?;
        let rec = g.recurrent()?;
        longest = longest.max(rec.trace.len());
        for w in rec.trace.windows(2) {
            check!(w[1].inf() >= w[0].inf(), "sample {i}: inf decreased");
            check!(w[1].sup() <= w[0].sup(), "sample {i}: sup increased");
        }
        for x in &rec.trace {
            let (y, a) = x.swap();
            check!(y == x.conjugate_by(&a)?, "sample {i}: swap ≠ a·g·a⁻¹");
        }
        check!(rec.witness == g.conjugate_by(&rec.conjugator)?, "sample {i}: witness is not c·g·c⁻¹");
    }
    Ok(Ok(format!("{} samples, longest trace {longest}", pinned::RANDOM_ELEMENTS)))
}

/// Left-weighted factor sequences of length at most `len`, with `Δ`-powers in `powers`.
fn canonical_elements(gs: &Arc<Garside>, len: usize, powers: &[i64]) -> Vec<GarsideElement> {
    let proper: Vec<_> = gs.simples().filter(|&x| x != gs.identity_simple() && x != gs.delta()).collect();
    let mut seqs: Vec<Vec<crate::garside::Simple>> = vec![Vec::new()];
    let mut layer = seqs.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &layer {
            for &x in &proper {
                if s.last().is_none_or(|&l| gs.is_left_weighted(l, x)) {
                    let mut t = s.clone();
                    t.push(x);
                    next.push(t);
                }
            }
        }
        seqs.extend(next.iter().cloned());
        layer = next;
    }
    let mut out = Vec::new();
    for &p in powers {
        for s in &seqs {
            out.push(gs.from_factors(p, s.clone()));
        }
    }
    out
}

fn small_parabolics(gs: &Arc<Garside>, conj_len: usize) -> Result<Vec<Parabolic>> {
    let gens: Vec<Gen> = gs.subset().iter().collect();
    let conjs = crate::parabolic::ball(gs, gs.subset(), conj_len)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u64..(1 << gens.len()) {
        let base: GenSet = gens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &g)| g).collect();
        for c in &conjs {
            let p = Parabolic::new(c.clone(), base)?;
            if seen.insert(p.z().clone()) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn c6() -> Check {
    let mut detail = Vec::new();
    for n in 2..=3 {
        let g = Arc::new(families::type_a(n));
        let gs = Garside::shared(&g, g.all())?;
        let parabolics = small_parabolics(&gs, pinned::CLOSURE_CONJUGATOR_LEN)?;
        let elements = canonical_elements(&gs, pinned::CLOSURE_CANONICAL_LEN, &[-1, 0]);
        let mut pairs = 0usize;
        for e in &elements {
            let c = closure(e)?;
            check!(c.contains(e)?, "A{n}: {} not in its closure", e.display());
            for p in &parabolics {
                if p.contains(e)? {
                    pairs += 1;
                    check!(c.is_subgroup_of(p)?, "A{n}: closure of {} escapes {}", e.display(), p.display());
                }
            }
        }
        detail.push(format!("A{n}: {} elements, {} parabolics, {pairs} containing pairs", elements.len(), parabolics.len()));
    }
    Ok(Ok(detail.join("; ")))
}

fn c7(rng: &mut ChaCha8Rng) -> Check {
    let g = Arc::new(families::type_a(3));
    let gs = Garside::shared(&g, g.all())?;
    let gens: Vec<Gen> = g.all().iter().collect();
    let subsets: Vec<GenSet> = (1u64..8).map(GenSet).collect();
    for &x in std::iter::once(&GenSet::EMPTY).chain(&subsets) {
        for &y in std::iter::once(&GenSet::EMPTY).chain(&subsets) {
            let r = intersect(&Parabolic::standard(&gs, x)?, &Parabolic::standard(&gs, y)?, 1)?;
            check!(r.subgroup == Parabolic::standard(&gs, x.intersection(y))?, "A_X ∩ A_Y ≠ A_(X∩Y) for {x:?}, {y:?}");
        }
    }
    let r = pinned::INTERSECTION_BALL;
    let mut uncertified = 0;
    let (mut common, mut nontrivial) = (0usize, 0usize);
    for i in 0..pinned::INTERSECTION_PAIRS {
        let mk = |rng: &mut ChaCha8Rng| -> Result<Parabolic> {
            let c = gs.normalize(&random_word(rng, &gens, pinned::INTERSECTION_CONJUGATOR_LEN))?;
            Parabolic::new(c, *subsets.choose(rng).unwrap())
        };
        let (p, q) = (mk(rng)?, mk(rng)?);
        let res = intersect(&p, &q, r)?;
        let z = res.subgroup.z();
        check!(p.contains(z)? && q.contains(z)?, "pair {i}: z_R not in both");
        let bp: HashSet<GarsideElement> = parabolic_ball(&p, r)?.into_iter().collect();
        for e in parabolic_ball(&q, r)? {
            if bp.contains(&e) {
                common += 1;
                check!(res.subgroup.contains(&e)?, "pair {i}: common element {} outside R", e.display());
            }
        }
        if !res.certified {
            uncertified += 1;
        }
        nontrivial += !res.subgroup.is_trivial() as usize;
    }
    Ok(Ok(format!(
        "standard pairs exact; {} random pairs at radius {r}: {nontrivial} nontrivial, {common} common elements, {uncertified} uncertified",
        pinned::INTERSECTION_PAIRS
    )))
}

fn c8() -> Check {
    let cases = [
        ("A2", families::type_a(2), "s1"),
        ("B2", families::type_b(2), "s1"),
        ("A3", families::type_a(3), "s1,s2"),
    ];
    let mut detail = Vec::new();
    for (name, g, x) in cases {
        let g = Arc::new(g);
        let gs = Garside::shared(&g, g.all())?;
        let rep = convexity_scan(&gs, g.parse_subset(x)?, pinned::CONVEXITY_LEN)?;
        check!(rep.passed(), "{name}: violations {:?}", rep.violations);
        detail.push(format!("{name}: {} elements, {} members", rep.elements, rep.members));
    }
    Ok(Ok(detail.join("; ")))
}

fn c9(rng: &mut ChaCha8Rng) -> Check {
    let fig = parse("generators: a b c\ndefault: 2\na b 3\na c 4\n");
    let k = Coxeter::new(fig.clone());
    let out = retract_word(&k, &fig.parse_word("a b^-1 c")?, fig.parse_subset("a,c")?)?.output;
    check!(fig.format_word(&out) == "ac", "figure example gave {}", fig.format_word(&out));
    let graphs = [
        fig.clone(),
        Arc::new(families::type_a(3)),
        Arc::new(families::type_b(3)),
        parse("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n"),
        Arc::new(families::affine_a(2)),
    ];
    let per = pinned::RETRACTION_WORDS / graphs.len();
    for g in &graphs {
        let k = Coxeter::new(g.clone());
        let gens: Vec<Gen> = g.all().iter().collect();
        for _ in 0..per {
            let w = random_word(rng, &gens, pinned::RETRACTION_WORD_LEN);
            let x = GenSet(rng.gen_range(0..(1u64 << g.rank())));
            let once = retract_word(&k, &w, x)?.output;
            let twice = retract_word(&k, &once, x)?.output;
            check!(twice == once, "not idempotent on {}", g.format_word(&w));
            check!(once.len() <= w.len(), "length grew on {}", g.format_word(&w));
            check!(once.support().is_subset(x), "output leaves X");
        }
    }
    Ok(Ok(format!("figure word gives ac; {} random words over {} graphs", per * graphs.len(), graphs.len())))
}

fn c10(rng: &mut ChaCha8Rng) -> Check {
    let g = Arc::new(example_graph());
    let x = g.parse_subset("a,c,d,e,f")?;
    let y = g.parse_subset("b,c,d")?;
    let cd = g.parse_subset("c,d")?;
    let all: Vec<Gen> = g.all().iter().collect();
    let abcd = g.parse_subset("a,b,c,d")?;
    let small: Vec<Gen> = abcd.iter().collect();
    let gs = Garside::shared(&g, abcd)?;
    let mut crossed = 0;
    for i in 0..pinned::EVEN_PAIRS {
        let spherical = i % 2 == 0;
        let pool = if spherical { &small } else { &all };
        let f = random_word(rng, pool, 4);
        let h = random_word(rng, pool, 4);
        let red = even_intersect_reduce(&g, (&f, x), (&h, y))?;
        check!(red.x == f.inverse().concat(&h).filter(x).free_reduce(), "pair {i}: x witness mismatch");
        let Some((conj, base)) = red.resolved else {
            return Ok(Err(format!("pair {i}: reduction left unresolved")));
        };
        check!(base == cd, "pair {i}: base {:?} is not {{c,d}}", g.subset_names(base));
        if spherical {
            // Inside A_{a,b,c,d}: f A_X f⁻¹ ∩ A_{abcd} = f A_{a,c,d} f⁻¹.
            let p = Parabolic::new(gs.normalize(&f)?, x.intersection(abcd))?;
            let q = Parabolic::new(gs.normalize(&h)?, y)?;
            let r = intersect(&p, &q, pinned::EVEN_BALL)?;
            let ours = Parabolic::new(gs.normalize(&conj)?, base)?;
            check!(r.subgroup == ours, "pair {i}: spherical cross-check gave {}", r.subgroup.display());
            crossed += 1;
        }
    }
    Ok(Ok(format!("{} pairs resolved over {{c,d}}, {crossed} cross-checked in B2×I2(6) at radius {}", pinned::EVEN_PAIRS, pinned::EVEN_BALL)))
}

fn c11(rng: &mut ChaCha8Rng) -> Check {
    for n in 2..=3 {
        let e = Euclid::new(n)?;
        let src = e.source().clone();
        for s in 0..=n as Gen {
            for t in s + 1..=n as Gen {
                let m = src.m(s, t).expect("finite labels");
                let alt = |a: Gen, b: Gen| ArtinWord((0..m).map(|i| Letter::pos(if i % 2 == 0 { a } else { b })).collect());
                let rel = alt(s, t).concat(&alt(t, s).inverse());
                check!(e.embed_element(&rel)?.is_identity(), "n={n}: relation ({s},{t}) not preserved");
            }
        }
        check!(e.xi(&e.rho()) == 1, "n={n}: ξ(ρ) ≠ 1");
        let gens: Vec<Gen> = src.all().iter().collect();
        for _ in 0..100 {
            let w = random_word(rng, &gens, 8);
            check!(e.xi(&e.embed(&w)) == 0, "n={n}: ξ∘φ ≠ 0 on {}", src.format_word(&w));
        }
    }
    Ok(Ok("Ã2 and Ã3 relations hold in B3 and B4; ξ∘φ = 0 on 200 words; ξ(ρ) = 1".into()))
}

fn c12(rng: &mut ChaCha8Rng) -> Check {
    let free = parse("generators: s t\ndefault: inf\n");
    let fa = Amalgam::new(free.clone())?;
    check!(!fa.is_trivial_word(&free.parse_word("s t")?)?, "st reported trivial");
    let graphs = [
        parse("generators: a b c\ndefault: 2\na b 3\nb c 3\na c inf\n"),
        parse("generators: a b c d\ndefault: 2\na b 3\nb c 4\nc d 3\na d inf\nb d inf\n"),
        parse("generators: a b c\ndefault: inf\nb c 5\n"),
    ];
    let mut trivial = 0;
    for i in 0..pinned::FC_WORDS {
        let g = &graphs[i % graphs.len()];
        let a = Amalgam::new(g.clone())?;
        let leaves: Vec<GenSet> = (1u64..(1 << g.rank())).map(GenSet).filter(|&x| is_spherical(g, x)).collect();
        let leaf = *leaves.choose(rng).unwrap();
        let gens: Vec<Gen> = leaf.iter().collect();
        let gs = Garside::shared(g, leaf)?;
        let u = random_word(rng, &gens, 8);
        let w = if rng.gen_bool(0.5) {
            // Same element, different word.
            u.concat(&gs.normalize(&u)?.to_word().inverse())
        } else {
            u.concat(&random_word(rng, &gens, 8).inverse())
        };
        let expect = gs.normalize(&w)?.is_identity();
        trivial += expect as usize;
        check!(a.is_trivial_word(&w)? == expect, "word {} disagrees", g.format_word(&w));
    }
    Ok(Ok(format!("{} leaf words agree ({trivial} trivial); st nontrivial", pinned::FC_WORDS)))
}

fn c13() -> Check {
    let fig = parse("generators: a b c d\ndefault: 2\na b 3\na c 3\na d 4\nc d 3\nb d inf\n");
    let p = coset_poset_ball(&fig, Kind::Deligne, 0, &NoOracle)?;
    check!(p.is_strict_order(), "Figure-6 poset is not a strict order");
    let f = derive(&p.without_subset(GenSet::EMPTY)).f_vector();
    check!(f == vec![10, 16, 6], "Figure-6 f-vector {f:?}");
    let graphs = [
        fig.clone(),
        Arc::new(families::type_a(4)),
        Arc::new(families::type_d(4)),
        Arc::new(families::type_b(3)),
        parse("generators: a b c d\ndefault: 2\na b 3\nc d 5\n"),
    ];
    let mut intervals = 0;
    for g in &graphs {
        let p = coset_poset_ball(g, Kind::Deligne, 0, &NoOracle)?;
        for (i, a) in p.elements.iter().enumerate() {
            for (j, b) in p.elements.iter().enumerate() {
                if a.subset.is_subset(b.subset) {
                    let size = p.interval(i, j).len();
                    let want = 1usize << b.subset.difference(a.subset).len();
                    check!(size == want, "interval {:?}..{:?} has {size}, expected {want}", a.subset, b.subset);
                    intervals += 1;
                }
            }
        }
    }
    Ok(Ok(format!("Figure-6 derives to 10/16/6; {intervals} Deligne intervals are cubes")))
}
