//! Coxeter graphs: generators, labels and the text file format.
//!
//! ```text
//! generators: a b c
//! default: 2
//! a b 3
//! b c 5
//! ```
//!
//! Unlisted pairs take the `default:` label (`2` or `inf`), which is mandatory.

use crate::error::{Error, Result};
use crate::word::{ArtinWord, Gen, GenSet, Letter, MAX_GENS};
use std::fmt::Write as _;

/// Label of an edge; `None` stands for ∞.
pub type Label = Option<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    names: Vec<String>,
    labels: Vec<Label>,
}

impl CoxeterGraph {
    /// Every pair gets `default`.
    pub fn new<S: AsRef<str>>(names: &[S], default: Label) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.len() > MAX_GENS {
            return Err(Error::Invalid(format!("at most {MAX_GENS} generators are supported")));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(|c: char| c.is_whitespace() || c == ',' || c == '|' || c == '^') {
                return Err(Error::Invalid(format!("bad generator name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate generator `{n}`")));
            }
        }
        let n = names.len();
        let mut labels = vec![default; n * n];
        for i in 0..n {
            labels[i * n + i] = Some(1);
        }
        Ok(CoxeterGraph { names, labels })
    }

    /// Builds a graph from `(s, t, m)` triples over named generators.
    pub fn from_edges<S: AsRef<str>>(names: &[S], edges: &[(&str, &str, Label)], default: Label) -> Result<Self> {
        let mut g = CoxeterGraph::new(names, default)?;
        for &(a, b, m) in edges {
            let (a, b) = (g.gen(a)?, g.gen(b)?);
            g.set(a, b, m)?;
        }
        Ok(g)
    }

    pub fn set(&mut self, s: Gen, t: Gen, m: Label) -> Result<()> {
        if s == t {
            return Err(Error::Invalid("a generator cannot be paired with itself".into()));
        }
        if matches!(m, Some(k) if k < 2) {
            return Err(Error::Invalid("labels must be at least 2".into()));
        }
        let n = self.rank();
        self.labels[s as usize * n + t as usize] = m;
        self.labels[t as usize * n + s as usize] = m;
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    /// `m_{s,t}`; `None` is ∞.
    pub fn m(&self, s: Gen, t: Gen) -> Label {
        self.labels[s as usize * self.rank() + t as usize]
    }

    pub fn gen(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Gen)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Parses the text format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<CoxeterGraph> = None;
        let mut default: Option<Label> = None;
        let mut edges: Vec<(usize, Gen, Gen, Label)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: line_no, msg };
            if let Some(rest) = line.strip_prefix("generators:") {
                if graph.is_some() {
                    return Err(perr("repeated `generators:` line".into()));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                graph = Some(CoxeterGraph::new(&names, Some(2)).map_err(|e| perr(e.to_string()))?);
            } else if let Some(rest) = line.strip_prefix("default:") {
                if default.is_some() {
                    return Err(perr("repeated `default:` line".into()));
                }
                default = Some(match rest.trim() {
                    "2" => Some(2),
                    "inf" | "∞" => None,
                    other => return Err(perr(format!("default must be `2` or `inf`, got `{other}`"))),
                });
            } else {
                let g = graph.as_ref().ok_or_else(|| perr("`generators:` must come first".into()))?;
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(perr(format!("expected `s t label`, got `{line}`")));
                }
                let s = g.gen(parts[0]).map_err(|e| perr(e.to_string()))?;
                let t = g.gen(parts[1]).map_err(|e| perr(e.to_string()))?;
                if s == t {
                    return Err(perr("a generator cannot be paired with itself".into()));
                }
                let m = parse_label(parts[2]).ok_or_else(|| perr(format!("bad label `{}`", parts[2])))?;
                edges.push((line_no, s, t, m));
            }
        }
        let mut graph = graph.ok_or(Error::Parse { line: 0, msg: "missing `generators:` line".into() })?;
        let default = default.ok_or(Error::Parse { line: 0, msg: "missing `default:` line".into() })?;
        let n = graph.rank();
        for s in 0..n {
            for t in 0..n {
                if s != t {
                    graph.labels[s * n + t] = default;
                }
            }
        }
        let mut seen: Vec<Option<Label>> = vec![None; n * n];
        for (line, s, t, m) in edges {
            let idx = s as usize * n + t as usize;
            if let Some(prev) = seen[idx] {
                if prev != m {
                    return Err(Error::Parse { line, msg: "conflicting labels for the same pair".into() });
                }
            }
            seen[idx] = Some(m);
            seen[t as usize * n + s as usize] = Some(m);
            graph.set(s, t, m).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        }
        Ok(graph)
    }

    /// Serializes in the text format, listing every pair whose label is not 2.
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\ndefault: 2\n", self.names.join(" "));
        for s in 0..self.rank() as Gen {
            for t in s + 1..self.rank() as Gen {
                match self.m(s, t) {
                    Some(2) => {}
                    Some(k) => writeln!(out, "{} {} {k}", self.name(s), self.name(t)).unwrap(),
                    None => writeln!(out, "{} {} inf", self.name(s), self.name(t)).unwrap(),
                }
            }
        }
        out
    }

    /// Parses whitespace-separated letters, `x^-1` for inverses; `1` is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<ArtinWord> {
        let mut w = ArtinWord::new();
        for tok in text.split_whitespace() {
            if tok == "1" && self.gen("1").is_err() {
                continue;
            }
            let (name, inv) = match tok.strip_suffix("^-1") {
                Some(base) => (base, true),
                None => (tok, false),
            };
            match self.gen(name) {
                Ok(g) => w.push(Letter { gen: g, inv }),
                Err(e) if !self.is_compact() => return Err(e),
                Err(_) => self.parse_compact(tok, &mut w)?,
            }
        }
        Ok(w)
    }

    fn is_compact(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Reads `ab^-1c` when every name is one character.
    fn parse_compact(&self, tok: &str, w: &mut ArtinWord) -> Result<()> {
        let chars: Vec<char> = tok.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let gen = self.gen(&chars[i].to_string()).map_err(|_| Error::UnknownGenerator(tok.to_string()))?;
            let inv = chars[i + 1..].starts_with(&['^', '-', '1']);
            w.push(Letter { gen, inv });
            i += if inv { 4 } else { 1 };
        }
        Ok(())
    }

    /// Letters are concatenated when every name is one character, space separated otherwise.
    /// The empty word prints as `1`.
    pub fn format_word(&self, w: &ArtinWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let compact = self.is_compact();
        let mut out = String::new();
        for (i, l) in w.letters().iter().enumerate() {
            if i > 0 && !compact {
                out.push(' ');
            }
            out.push_str(self.name(l.gen));
            if l.inv {
                out.push_str("^-1");
            }
        }
        out
    }

    pub fn format_gens(&self, gens: &[Gen]) -> String {
        self.format_word(&ArtinWord::positive(gens))
    }

    /// Parses a comma-separated generator list; empty text is the empty set.
    pub fn parse_subset(&self, text: &str) -> Result<GenSet> {
        let mut s = GenSet::EMPTY;
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            s.insert(self.gen(tok)?);
        }
        Ok(s)
    }

    pub fn subset_names(&self, x: GenSet) -> Vec<String> {
        x.iter().map(|g| self.name(g).to_string()).collect()
    }

    /// Connected components of the subgraph on `x`, edges being labels other than 2.
    pub fn components(&self, x: GenSet) -> Vec<GenSet> {
        let mut left = x;
        let mut comps = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = GenSet::single(start);
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for t in left.iter() {
                    if !comp.contains(t) && self.m(s, t) != Some(2) {
                        comp.insert(t);
                        stack.push(t);
                    }
                }
            }
            left = left.difference(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self, x: GenSet) -> bool {
        self.components(x).len() <= 1
    }

    /// Every label is even or ∞.
    pub fn even_check(&self) -> Result<()> {
        for s in 0..self.rank() as Gen {
            for t in s + 1..self.rank() as Gen {
                if let Some(k) = self.m(s, t) {
                    if k % 2 == 1 {
                        return Err(Error::OddLabel(self.name(s).into(), self.name(t).into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Pairs `(s, t)`, `s < t`, inside `x` with `m_{s,t} = ∞`.
    pub fn infinite_pairs(&self, x: GenSet) -> Vec<(Gen, Gen)> {
        let mut out = Vec::new();
        for s in x.iter() {
            for t in x.iter().filter(|&t| t > s) {
                if self.m(s, t).is_none() {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// Graph with generators renamed.
    pub fn renamed<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        if names.len() != self.rank() {
            return Err(Error::Invalid("rename needs one name per generator".into()));
        }
        let mut g = CoxeterGraph::new(names, Some(2))?;
        g.labels.clone_from(&self.labels);
        Ok(g)
    }
}

fn parse_label(s: &str) -> Option<Label> {
    match s {
        "inf" | "∞" => Some(None),
        _ => s.parse::<u32>().ok().filter(|&k| k >= 2).map(Some),
    }
}

/// Standard irreducible graphs, generators `s1 … sn` along the diagram.
pub mod families {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("s{i}")).collect()
    }

    fn path(labels: &[u32]) -> CoxeterGraph {
        let n = labels.len() + 1;
        let mut g = CoxeterGraph::new(&names(n), Some(2)).unwrap();
        for (i, &m) in labels.iter().enumerate() {
            g.set(i as Gen, i as Gen + 1, Some(m)).unwrap();
        }
        g
    }

    pub fn type_a(n: usize) -> CoxeterGraph {
        if n == 1 {
            return CoxeterGraph::new(&names(1), Some(2)).unwrap();
        }
        path(&vec![3; n - 1])
    }

    /// `m_{s_{n-1}, s_n} = 4`.
    pub fn type_b(n: usize) -> CoxeterGraph {
        let mut l = vec![3; n - 1];
        l[n - 2] = 4;
        path(&l)
    }

    /// Path `s1 … s_{n-1}` with `s_n` attached to `s_{n-2}`.
    pub fn type_d(n: usize) -> CoxeterGraph {
        let mut g = CoxeterGraph::new(&names(n), Some(2)).unwrap();
        for i in 0..n as Gen - 2 {
            g.set(i, i + 1, Some(3)).unwrap();
        }
        g.set(n as Gen - 3, n as Gen - 1, Some(3)).unwrap();
        g
    }

    /// Path `s1 … s_{n-1}` with `s_n` attached to `s3`.
    pub fn type_e(n: usize) -> CoxeterGraph {
        let mut g = CoxeterGraph::new(&names(n), Some(2)).unwrap();
        for i in 0..n as Gen - 2 {
            g.set(i, i + 1, Some(3)).unwrap();
        }
        g.set(2, n as Gen - 1, Some(3)).unwrap();
        g
    }

    pub fn type_f4() -> CoxeterGraph {
        path(&[3, 4, 3])
    }

    /// `m_{s1,s2} = 5`.
    pub fn type_h(n: usize) -> CoxeterGraph {
        let mut l = vec![3; n - 1];
        l[0] = 5;
        path(&l)
    }

    pub fn dihedral(p: u32) -> CoxeterGraph {
        path(&[p])
    }

    /// The cycle `t0 … tn` with labels 3 (n ≥ 2).
    pub fn affine_a(n: usize) -> CoxeterGraph {
        let names: Vec<String> = (0..=n).map(|i| format!("t{i}")).collect();
        let mut g = CoxeterGraph::new(&names, Some(2)).unwrap();
        for i in 0..=n {
            g.set(i as Gen, ((i + 1) % (n + 1)) as Gen, Some(3)).unwrap();
        }
        g
    }
}
