//! Unit interval graphs encoded as area sequences, the equivalent
//! Hessenberg functions, and the triples entering the three-term relation.
//!
//! All public indices are 1-based, matching the usual conventions for these
//! objects; an area sequence serializes as comma-separated values, `0,0,1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::tableaux::Composition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("area sequence must satisfy 0 <= e(i) < i and be weakly increasing")]
    BadAreaSequence,
    #[error("hessenberg function must satisfy i <= h(i) <= n and be weakly increasing")]
    BadHessenberg,
    #[error("parse error: {0}")]
    Parse(String),
}

/// An area sequence `e(1..n)`: weakly increasing with `0 <= e(i) < i`.
/// Each such sequence encodes one unit interval graph on `n` vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AreaSequence {
    values: Vec<usize>,
}

impl AreaSequence {
    pub fn new(values: Vec<usize>) -> Result<Self, GraphError> {
        let increasing = values.windows(2).all(|w| w[0] <= w[1]);
        let bounded = values.iter().enumerate().all(|(idx, &v)| v <= idx);
        if !increasing || !bounded {
            return Err(GraphError::BadAreaSequence);
        }
        Ok(AreaSequence { values })
    }

    /// The all-zero sequence of length `n`: the complete graph.
    pub fn complete(n: usize) -> Self {
        AreaSequence { values: vec![0; n] }
    }

    /// The concatenation rule for disjoint unions applied to the parts of a
    /// composition: block `k` contributes `mu_k` copies of the offset
    /// `mu_1 + ... + mu_(k-1)`, so the graph is a disjoint union of
    /// complete graphs of the part sizes.
    pub fn of_composition(mu: &Composition) -> Self {
        let mut values = Vec::with_capacity(mu.size());
        let mut offset = 0;
        for &part in mu.parts() {
            values.extend(std::iter::repeat_n(offset, part));
            offset += part;
        }
        AreaSequence { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `e(i)` for 1-based `i`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The statistic `e(1) + ... + e(n)`.
    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    /// The matching Hessenberg function, `h(i) = n - e(n+1-i)`.
    pub fn hessenberg(&self) -> HessenbergFunction {
        let n = self.len();
        let values = (1..=n).map(|i| n - self.value(n + 1 - i)).collect();
        HessenbergFunction::new(values).expect("bijection preserves validity")
    }

    /// The oriented unit interval graph with edges `i -> j` for
    /// `i < j <= h(i)`.
    pub fn graph(&self) -> OrientedGraph {
        let n = self.len();
        let h = self.hessenberg();
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=h.value(i) {
                edges.push((i, j));
            }
        }
        OrientedGraph { n, edges }
    }

    /// All area sequences of length `n`, lexicographically. There are
    /// Catalan-many of them.
    pub fn enumerate(n: usize) -> Vec<AreaSequence> {
        fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<AreaSequence>) {
            if prefix.len() == n {
                out.push(AreaSequence {
                    values: prefix.clone(),
                });
                return;
            }
            let idx = prefix.len();
            let lo = prefix.last().copied().unwrap_or(0);
            for v in lo..=idx {
                prefix.push(v);
                rec(n, prefix, out);
                prefix.pop();
            }
        }
        assert!(n >= 1, "enumeration requires n >= 1");
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for AreaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for AreaSequence {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(AreaSequence { values: Vec::new() });
        }
        let values = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| GraphError::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        AreaSequence::new(values)
    }
}

/// A Hessenberg function `h(1..n)`: weakly increasing with `i <= h(i) <= n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, GraphError> {
        let n = values.len();
        let increasing = values.windows(2).all(|w| w[0] <= w[1]);
        let bounded = values.iter().enumerate().all(|(idx, &v)| idx < v && v <= n);
        if !increasing || !bounded {
            return Err(GraphError::BadHessenberg);
        }
        Ok(HessenbergFunction { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `h(i)` for 1-based `i`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The inverse of [`AreaSequence::hessenberg`].
    pub fn area(&self) -> AreaSequence {
        let n = self.len();
        let values = (1..=n).map(|i| n - self.value(n + 1 - i)).collect();
        AreaSequence::new(values).expect("bijection preserves validity")
    }
}

/// An oriented graph on `1..=n` whose edges `(u, v)` all satisfy `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl OrientedGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// For each vertex `v`, the list of `u < v` with an edge `u -> v`;
    /// index 0 is unused. This is the pruning structure for coloring
    /// enumeration in vertex order.
    pub fn earlier_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[v].push(u);
        }
        adj
    }
}

/// Which of the two admissibility patterns produced a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleKind {
    /// One entry moves by one: at the pivot `i` the sequence steps strictly
    /// up on both sides and `e(e(i)) = e(e(i)+1)`; the raised and lowered
    /// sequences change `e(i)` by `+1` / `-1`.
    Single,
    /// Two entries level out: `e(i+1) = e(i)+1` with the value `i` absent
    /// from the sequence; the raised and lowered sequences set both entries
    /// to the larger / smaller value.
    Double,
}

impl fmt::Display for TripleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleKind::Single => write!(f, "single"),
            TripleKind::Double => write!(f, "double"),
        }
    }
}

/// A triple of area sequences subject to the three-term relation, tagged
/// with the pattern kind and the pivot index that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularTriple {
    pub base: AreaSequence,
    pub raised: AreaSequence,
    pub lowered: AreaSequence,
    pub kind: TripleKind,
    pub pivot: usize,
}

/// All admissible triples over every `e` of length `n`, each tagged with
/// its kind and pivot; distinct `(base, pivot, kind)` combinations are
/// emitted once. The raised/lowered sequences always satisfy
/// `|raised| = |base| + 1` and `|lowered| = |base| - 1`.
pub fn modular_triples(n: usize) -> Vec<ModularTriple> {
    assert!(n >= 1, "triples require n >= 1");
    let mut out = Vec::new();
    for base in AreaSequence::enumerate(n) {
        let e = base.values();
        for i in 2..=n {
            // Entry at the pivot steps strictly up on both sides; at i = n
            // the right bound is the convention value n - 1.
            let right = if i < n { e[i] } else { n - 1 };
            if !(e[i - 2] < e[i - 1] && e[i - 1] < right) {
                continue;
            }
            let v = e[i - 1];
            if e[v - 1] != e[v] {
                continue;
            }
            let mut raised = e.to_vec();
            let mut lowered = e.to_vec();
            raised[i - 1] += 1;
            lowered[i - 1] -= 1;
            out.push(ModularTriple {
                base: base.clone(),
                raised: AreaSequence::new(raised).expect("raised triple stays valid"),
                lowered: AreaSequence::new(lowered).expect("lowered triple stays valid"),
                kind: TripleKind::Single,
                pivot: i,
            });
        }
        for i in 1..n {
            if e[i] != e[i - 1] + 1 || e.contains(&i) {
                continue;
            }
            let mut raised = e.to_vec();
            let mut lowered = e.to_vec();
            raised[i - 1] = e[i];
            lowered[i] = e[i - 1];
            out.push(ModularTriple {
                base: base.clone(),
                raised: AreaSequence::new(raised).expect("raised triple stays valid"),
                lowered: AreaSequence::new(lowered).expect("lowered triple stays valid"),
                kind: TripleKind::Double,
                pivot: i,
            });
        }
    }
    out
}
