//! `garsidekit`: batch front end emitting JSON on standard output.

use clap::{Args, Parser, Subcommand};
use garsidekit::classify::is_spherical;
use garsidekit::complex::{self, Kind};
use garsidekit::coxeter::Coxeter;
use garsidekit::error::Error;
use garsidekit::euclid::{AffineParabolic, Euclid};
use garsidekit::even::{self, Containment};
use garsidekit::fc::{Amalgam, FcStatus};
use garsidekit::garside::{Garside, GarsideElement};
use garsidekit::graph::CoxeterGraph;
use garsidekit::oracle::oracle_for;
use garsidekit::parabolic::{self, Parabolic};
use garsidekit::salvetti;
use garsidekit::selftest;
use garsidekit::word::{ArtinWord, GenSet};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

const EXIT_USAGE: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "garsidekit", version, about = "Artin groups, Garside normal forms and parabolic subgroups")]
struct Cli {
    /// Coxeter graph file.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Print JSON on several lines.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Ball {
    /// Radius of the certification ball.
    #[arg(long, default_value_t = 5)]
    ball: usize,
    /// Exit 3 when the answer is not certified.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct Pair {
    /// First parabolic, `conjugator|s,t,…`.
    #[arg(long)]
    p: String,
    /// Second parabolic, `conjugator|s,t,…`.
    #[arg(long)]
    q: String,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form of a word.
    Nf {
        #[arg(long)]
        word: String,
    },
    /// Garside element of the graph or of a standard parabolic.
    Delta {
        #[arg(long)]
        subset: Option<String>,
    },
    /// Generator of the center of `A_X` for irreducible `X`.
    Center {
        #[arg(long)]
        subset: Option<String>,
    },
    /// Parabolic closure of an element.
    Closure {
        #[arg(long)]
        word: String,
    },
    /// Intersection of two parabolics of a spherical-type group.
    Intersect {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        ball: Ball,
    },
    /// Rewrites `P ⊆ A_X` as `α A_Y α⁻¹` with `α ∈ A_X`.
    Restandardise {
        #[arg(long)]
        p: String,
        #[arg(long)]
        x: String,
    },
    /// Salvetti word retraction onto `A_X`.
    Retract {
        #[arg(long)]
        word: String,
        #[arg(long)]
        x: String,
        /// Include the per-letter bookkeeping.
        #[arg(long)]
        trace: bool,
    },
    /// Membership of a word in the standard parabolic `A_X`.
    Member {
        #[arg(long)]
        word: String,
        #[arg(long)]
        x: String,
    },
    /// Equality of two words as group elements.
    Wordeq {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Intersection with a spherical parabolic in an FC-type group.
    FcIntersect {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        ball: Ball,
    },
    /// Intersection of parabolics of the affine braid group on a 3-cycle or longer.
    EuclidIntersect {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        ball: Ball,
    },
    /// Reduction of an intersection in an even Artin group.
    EvenIntersect {
        #[command(flatten)]
        pair: Pair,
    },
    /// Compares `g A_X g⁻¹` with `h A_X h⁻¹` in an even Artin group.
    EvenContainment {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        x: String,
    },
    /// Finite portion of a coset poset and its derived complex.
    Complex {
        #[arg(long, default_value = "deligne")]
        kind: String,
        #[arg(long, default_value_t = 0)]
        radius: usize,
        #[arg(long, default_value = "json", value_parser = ["json", "dot"])]
        format: String,
    },
    /// One vertex, one loop per generator, one 2-cell per finite label.
    Skeleton,
    /// Adjacency of two irreducible parabolics.
    Adjacent {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        ball: Ball,
    },
    /// FC decomposition tree.
    Tree,
    /// Runs the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        /// Run a single criterion.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=13))]
        only: Option<u8>,
    },
}

enum Body {
    Json(Value),
    Text(String),
}

/// An answer plus an exit status.
struct Reply {
    body: Body,
    code: u8,
}

impl Reply {
    fn ok(body: Value) -> Self {
        Reply { body: Body::Json(body), code: 0 }
    }

    fn undecided_if(body: Value, undecided: bool) -> Self {
        Reply { body: Body::Json(body), code: if undecided { EXIT_UNDECIDED } else { 0 } }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(reply) => {
            let text = match reply.body {
                Body::Json(v) => {
                    let text = if cli.pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) };
                    text.expect("JSON values always serialize") + "\n"
                }
                Body::Text(t) => t,
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(reply.code)
        }
        Err(e) => {
            let code = match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                Error::NoOracle => EXIT_UNDECIDED,
                _ => EXIT_USAGE,
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}

fn load_graph(path: Option<&PathBuf>) -> garsidekit::Result<Arc<CoxeterGraph>> {
    let path = path.ok_or_else(|| Error::Invalid("--graph FILE is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(Arc::new(CoxeterGraph::parse(&text)?))
}

/// `conjugator|s,t` into a word and a subset.
fn parse_parabolic(g: &CoxeterGraph, text: &str) -> garsidekit::Result<(ArtinWord, GenSet)> {
    let (conj, base) = text
        .split_once('|')
        .ok_or_else(|| Error::Invalid(format!("expected `conjugator|generators`, got `{text}`")))?;
    Ok((g.parse_word(conj)?, g.parse_subset(base)?))
}

fn subset_or_all(g: &CoxeterGraph, text: Option<&str>) -> garsidekit::Result<GenSet> {
    match text {
        Some(t) => g.parse_subset(t),
        None => Ok(g.all()),
    }
}

fn element_json(g: &CoxeterGraph, e: &GarsideElement) -> Value {
    let gs = e.garside();
    let factors: Vec<String> = e.factors().iter().map(|&x| g.format_gens(gs.simple_word(x))).collect();
    let (n, p) = e.mixed_np();
    let rnf = e.right_normal_form();
    let right: Vec<String> = rnf.factors.iter().map(|&x| g.format_gens(gs.simple_word(x))).collect();
    json!({
        "word": g.format_word(&e.to_word()),
        "identity": e.is_identity(),
        "power": e.power(),
        "factors": factors,
        "display": e.display(),
        "inf": e.inf(),
        "sup": e.sup(),
        "canonicalLength": e.canonical_len(),
        "np": { "n": g.format_word(&n.to_word()), "p": g.format_word(&p.to_word()) },
        "rightNormalForm": { "factors": right, "power": rnf.power },
    })
}

fn spherical_parabolic(gs: &Arc<Garside>, (w, x): (ArtinWord, GenSet)) -> garsidekit::Result<Parabolic> {
    Parabolic::new(gs.normalize(&w)?, x)
}

fn run(cli: &Cli) -> garsidekit::Result<Reply> {
    if let Command::Selftest { seed, only } = cli.command {
        let outcomes = match only {
            Some(id) => vec![selftest::run(id, seed)],
            None => selftest::run_all(seed),
        };
        for o in &outcomes {
            eprintln!("{}", o.line());
        }
        let passed = outcomes.iter().all(|o| o.passed);
        let body = json!({ "seed": seed, "criteria": outcomes, "passed": passed });
        return Ok(Reply { body: Body::Json(body), code: if passed { 0 } else { EXIT_USAGE } });
    }
    let g = load_graph(cli.graph.as_ref())?;
    let names = |x: GenSet| g.subset_names(x);
    match &cli.command {
        Command::Selftest { .. } => unreachable!("handled above"),
        Command::Nf { word } => {
            let gs = Garside::shared(&g, g.all())?;
            let e = gs.normalize(&g.parse_word(word)?)?;
            Ok(Reply::ok(element_json(&g, &e)))
        }
        Command::Delta { subset } => {
            let x = subset_or_all(&g, subset.as_deref())?;
            let gs = Garside::shared(&g, x)?;
            let w = gs.delta_element(x)?.to_word();
            Ok(Reply::ok(json!({ "word": g.format_word(&w), "length": w.len() })))
        }
        Command::Center { subset } => {
            let x = subset_or_all(&g, subset.as_deref())?;
            let gs = Garside::shared(&g, x)?;
            let z = gs.center_generator(x)?;
            let types: Vec<String> = gs.types().iter().map(|t| t.to_string()).collect();
            Ok(Reply::ok(json!({
                "subset": names(x),
                "types": types,
                "word": g.format_word(&z.to_word()),
                "display": z.display(),
            })))
        }
        Command::Closure { word } => {
            let gs = Garside::shared(&g, g.all())?;
            let p = parabolic::closure(&gs.normalize(&g.parse_word(word)?)?)?;
            Ok(Reply::ok(json!({ "closure": p.record(), "display": p.display() })))
        }
        Command::Intersect { pair, ball } => {
            let gs = Garside::shared(&g, g.all())?;
            let p = spherical_parabolic(&gs, parse_parabolic(&g, &pair.p)?)?;
            let q = spherical_parabolic(&gs, parse_parabolic(&g, &pair.q)?)?;
            let r = parabolic::intersect(&p, &q, ball.ball)?;
            let body = serde_json::to_value(r.record()).expect("record serializes");
            Ok(Reply::undecided_if(body, ball.strict && !r.certified))
        }
        Command::Restandardise { p, x } => {
            let (w, z) = parse_parabolic(&g, p)?;
            let x = g.parse_subset(x)?;
            let (alpha, y) = if is_spherical(&g, g.all()) {
                let gs = Garside::shared(&g, g.all())?;
                let (a, y) = parabolic::restandardise(&spherical_parabolic(&gs, (w, z))?, x)?;
                (a.to_word(), y)
            } else {
                Amalgam::new(g.clone())?.restandardise(&w, z, x)?
            };
            Ok(Reply::ok(json!({ "alpha": g.format_word(&alpha), "base": names(y) })))
        }
        Command::Retract { word, x, trace } => {
            let w = g.parse_word(word)?;
            let x = g.parse_subset(x)?;
            let t = salvetti::retract_word(&Coxeter::new(g.clone()), &w, x)?;
            let body = if *trace {
                serde_json::to_value(t.record(&g)).expect("trace serializes")
            } else {
                json!({ "input": g.format_word(&t.input), "subset": names(x), "output": g.format_word(&t.output) })
            };
            Ok(Reply::ok(body))
        }
        Command::Member { word, x } => {
            let w = g.parse_word(word)?;
            let x = g.parse_subset(x)?;
            let oracle = oracle_for(&g)?;
            let m = salvetti::member_standard_general(&Coxeter::new(g.clone()), &w, x, &*oracle)?;
            let body = json!({ "member": m, "oracle": oracle.name() });
            Ok(Reply::undecided_if(body, m.is_none()))
        }
        Command::Wordeq { u, v } => {
            let (u, v) = (g.parse_word(u)?, g.parse_word(v)?);
            let oracle = oracle_for(&g)?;
            let eq = oracle.equal(&u, &v)?;
            let body = json!({ "equal": eq, "oracle": oracle.name() });
            Ok(Reply::undecided_if(body, eq.is_none()))
        }
        Command::FcIntersect { pair, ball } => {
            let a = Amalgam::new(g.clone())?;
            let (p, q) = (parse_parabolic(&g, &pair.p)?, parse_parabolic(&g, &pair.q)?);
            let r = a.intersect_spherical_any((&p.0, p.1), (&q.0, q.1), ball.ball)?;
            let undecided = match r.status {
                FcStatus::Exact | FcStatus::BallCertified => false,
                FcStatus::Uncertified => ball.strict,
                FcStatus::UndecidedAtRadius => true,
            };
            let body = json!({
                "conjugator": g.format_word(&r.conj),
                "base": names(r.base),
                "status": r.status,
                "radius": r.radius,
            });
            Ok(Reply::undecided_if(body, undecided))
        }
        Command::EuclidIntersect { pair, ball } => {
            let e = Euclid::for_graph(&g)?;
            let affine = |t: &str| -> garsidekit::Result<AffineParabolic> {
                let (conj, base) = parse_parabolic(&g, t)?;
                Ok(AffineParabolic { conj, base })
            };
            let (r, cert) = e.intersect(&affine(&pair.p)?, &affine(&pair.q)?, ball.ball)?;
            let body = json!({
                "conjugator": g.format_word(&r.conj),
                "base": names(r.base),
                "certificate": cert.record(),
            });
            Ok(Reply::undecided_if(body, ball.strict && !cert.certified))
        }
        Command::EvenIntersect { pair } => {
            let (f, x) = parse_parabolic(&g, &pair.p)?;
            let (h, y) = parse_parabolic(&g, &pair.q)?;
            let r = even::even_intersect_reduce(&g, (&f, x), (&h, y))?;
            let resolved = r
                .resolved
                .as_ref()
                .map(|(c, b)| json!({ "conjugator": g.format_word(c), "base": names(*b) }));
            let body = json!({
                "h": g.format_word(&r.h),
                "x": g.format_word(&r.x),
                "y": g.format_word(&r.y),
                "z": names(r.z),
                "reason": r.reason,
                "intersection": resolved,
            });
            Ok(Reply::undecided_if(body, r.resolved.is_none()))
        }
        Command::EvenContainment { g: gw, h, x } => {
            let (gw, h, x) = (g.parse_word(gw)?, g.parse_word(h)?, g.parse_subset(x)?);
            let oracle = oracle_for(&g)?;
            let c = even::conjugate_containment_check(&g, &gw, &h, x, &*oracle)?;
            let body = json!({ "verdict": c, "oracle": oracle.name() });
            Ok(Reply::undecided_if(body, c == Containment::Undecided))
        }
        Command::Complex { kind, radius, format } => {
            let kind = Kind::parse(kind)?;
            let oracle = oracle_for(&g)?;
            let p = complex::coset_poset_ball(&g, kind, *radius, &*oracle)?;
            if format == "dot" {
                return Ok(Reply { body: Body::Text(complex::to_dot(&g, &p)), code: 0 });
            }
            Ok(Reply::ok(complex::to_json(&g, &p)))
        }
        Command::Skeleton => {
            let s = complex::salvetti_two_skeleton(&g);
            Ok(Reply::ok(serde_json::to_value(s).expect("skeleton serializes")))
        }
        Command::Adjacent { pair, ball } => {
            let (p, q) = (parse_parabolic(&g, &pair.p)?, parse_parabolic(&g, &pair.q)?);
            let adjacent = if is_spherical(&g, g.all()) {
                let gs = Garside::shared(&g, g.all())?;
                let (p, q) = (spherical_parabolic(&gs, p)?, spherical_parabolic(&gs, q)?);
                complex::irreducible_parabolic_adjacent(&p, &q, ball.ball)?
            } else {
                let a = Amalgam::new(g.clone())?;
                Some(complex::fc_adjacent(&a, (&p.0, p.1), (&q.0, q.1))?)
            };
            Ok(Reply::undecided_if(json!({ "adjacent": adjacent }), adjacent.is_none()))
        }
        Command::Tree => {
            let a = Amalgam::new(g.clone())?;
            Ok(Reply::ok(serde_json::to_value(a.tree_record()).expect("tree serializes")))
        }
    }
}
