//! The coloring generating function of a unit interval graph and its exact
//! basis conversions.
//!
//! `monomial_expansion` enumerates proper colorings by backtracking and
//! tallies `q^(ascents)` per color multiset; `elementary_expansion` converts
//! the result to the elementary basis by solving an exact integer linear
//! system. Brute force is deliberate here: this module is the oracle the
//! growth process is checked against.

use std::collections::{BTreeMap, HashMap};

use num::bigint::BigInt;
use num::{One, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::graphs::{AreaSequence, OrientedGraph};
use crate::linalg::{binomial, solve_int_system};
use crate::qalg::QPoly;
use crate::tableaux::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsfError {
    #[error("coloring is not proper for the graph")]
    ImproperColoring,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// An assignment of colors to the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color of the 1-based vertex `v`.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v - 1]
    }
}

/// Number of edges `u -> v` with `color(u) < color(v)`. Errors when the
/// coloring assigns equal colors across an edge or has the wrong length.
pub fn ascent_count(graph: &OrientedGraph, coloring: &Coloring) -> Result<usize, CsfError> {
    if coloring.colors().len() != graph.vertex_count() {
        return Err(CsfError::ImproperColoring);
    }
    let mut ascents = 0;
    for &(u, v) in graph.edges() {
        if coloring.color(u) == coloring.color(v) {
            return Err(CsfError::ImproperColoring);
        }
        if coloring.color(u) < coloring.color(v) {
            ascents += 1;
        }
    }
    Ok(ascents)
}

/// Which symmetric-function basis an [`ExpansionTable`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Elementary,
}

impl Basis {
    fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
        }
    }
}

/// Coefficients of a degree-`n` symmetric function on the partitions of
/// `n`, in one fixed basis. Zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTable {
    n: usize,
    basis: Basis,
    entries: BTreeMap<Partition, QPoly>,
}

impl ExpansionTable {
    fn new(n: usize, basis: Basis) -> Self {
        ExpansionTable {
            n,
            basis,
            entries: BTreeMap::new(),
        }
    }

    fn insert(&mut self, shape: Partition, coeff: QPoly) {
        debug_assert_eq!(shape.size(), self.n);
        if !coeff.is_zero() {
            self.entries.insert(shape, coeff);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Coefficient of the given partition; zero when absent.
    pub fn coefficient(&self, shape: &Partition) -> QPoly {
        self.entries.get(shape).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Stored (nonzero) entries.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.entries.iter()
    }

    /// True when every stored coefficient has nonnegative integer
    /// coefficients.
    pub fn coefficients_nonnegative(&self) -> bool {
        self.entries.values().all(|c| c.coeffs_nonnegative())
    }

    /// JSON form, e.g.
    /// `{"n":3,"basis":"e","coefficients":{"2,1":"q","3":"1+q+q^2"}}`.
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (shape, poly) in &self.entries {
            coeffs.insert(shape.to_string(), Value::String(poly.to_string()));
        }
        json!({"n": self.n, "basis": self.basis.tag(), "coefficients": Value::Object(coeffs)})
    }
}

/// The full monomial table of the coloring generating function in `n`
/// variables: for every exponent vector (count of each color `1..=n`), the
/// tally of `q^(ascents)` over the proper colorings realizing it.
///
/// A degree-`n` symmetric function is determined by its restriction to `n`
/// variables, so `n` colors suffice.
pub fn monomial_table(e: &AreaSequence) -> BTreeMap<Vec<usize>, QPoly> {
    let n = e.len();
    let adj = e.graph().earlier_neighbors();
    let mut raw: HashMap<Vec<usize>, Vec<BigInt>> = HashMap::new();
    let mut colors = vec![0usize; n + 1];
    let mut counts = vec![0usize; n + 1];

    fn rec(
        v: usize,
        n: usize,
        ascents: usize,
        adj: &[Vec<usize>],
        colors: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        raw: &mut HashMap<Vec<usize>, Vec<BigInt>>,
    ) {
        if v > n {
            let key = counts[1..].to_vec();
            let coeffs = raw.entry(key).or_default();
            if coeffs.len() <= ascents {
                coeffs.resize(ascents + 1, BigInt::zero());
            }
            coeffs[ascents] += 1;
            return;
        }
        'colors: for color in 1..=n {
            let mut rising = 0;
            for &u in &adj[v] {
                if colors[u] == color {
                    continue 'colors;
                }
                if colors[u] < color {
                    rising += 1;
                }
            }
            colors[v] = color;
            counts[color] += 1;
            rec(v + 1, n, ascents + rising, adj, colors, counts, raw);
            counts[color] -= 1;
        }
        colors[v] = 0;
    }

    rec(1, n, 0, &adj, &mut colors, &mut counts, &mut raw);
    raw.into_iter()
        .map(|(key, coeffs)| (key, QPoly::from_coeffs(coeffs)))
        .collect()
}

/// Monomial-basis expansion: the coefficient of each `m_lambda` is the
/// entry of [`monomial_table`] at the exponent vector `lambda` itself.
pub fn monomial_expansion(e: &AreaSequence) -> ExpansionTable {
    let n = e.len();
    let table = monomial_table(e);
    let mut out = ExpansionTable::new(n, Basis::Monomial);
    for shape in Partition::all(n) {
        let mut key = shape.parts().to_vec();
        key.resize(n, 0);
        if let Some(coeff) = table.get(&key) {
            out.insert(shape, coeff.clone());
        }
    }
    out
}

/// The product of elementary symmetric polynomials for `shape`, expanded
/// in `nvars` variables as a map from exponent vector to coefficient.
pub(crate) fn elementary_monomials(shape: &Partition, nvars: usize) -> HashMap<Vec<usize>, BigInt> {
    let mut acc: HashMap<Vec<usize>, BigInt> = HashMap::new();
    acc.insert(vec![0; nvars], BigInt::one());
    for &part in shape.parts() {
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for mask in 0u32..(1 << nvars) {
            if mask.count_ones() as usize != part {
                continue;
            }
            for (key, coeff) in &acc {
                let mut bumped = key.clone();
                for (i, slot) in bumped.iter_mut().enumerate() {
                    if mask & (1 << i) != 0 {
                        *slot += 1;
                    }
                }
                *next.entry(bumped).or_default() += coeff;
            }
        }
        acc = next;
    }
    acc
}

/// Convert a monomial-basis table of a symmetric function to the
/// elementary basis by exact fraction-free elimination.
///
/// The coefficients must come out in `Z[q]`; a singular system or a
/// non-polynomial solution means the input was not the monomial table of a
/// genuine symmetric function and is reported as an inconsistency.
pub fn elementary_expansion(table: &ExpansionTable) -> Result<ExpansionTable, CsfError> {
    if table.basis() != Basis::Monomial {
        return Err(CsfError::Inconsistent(
            "elementary conversion expects a monomial-basis table".into(),
        ));
    }
    let n = table.n();
    let shapes = Partition::all(n);
    let count = shapes.len();
    let mut matrix = vec![vec![BigInt::zero(); count]; count];
    let mut rhs = vec![QPoly::zero(); count];
    for (col, shape) in shapes.iter().enumerate() {
        let expanded = elementary_monomials(shape, n);
        for (row, target) in shapes.iter().enumerate() {
            let mut key = target.parts().to_vec();
            key.resize(n, 0);
            if let Some(c) = expanded.get(&key) {
                matrix[row][col] = c.clone();
            }
        }
    }
    for (row, target) in shapes.iter().enumerate() {
        rhs[row] = table.coefficient(target);
    }
    let solution = solve_int_system(matrix, rhs).ok_or_else(|| {
        CsfError::Inconsistent("elementary coefficients did not land in Z[q]".into())
    })?;
    let mut out = ExpansionTable::new(n, Basis::Elementary);
    for (shape, coeff) in shapes.into_iter().zip(solution) {
        out.insert(shape, coeff);
    }
    Ok(out)
}

/// Number of proper colorings of the graph of `e` with colors `1..=k`.
pub fn proper_coloring_count(e: &AreaSequence, k: usize) -> BigInt {
    let n = e.len();
    let adj = e.graph().earlier_neighbors();
    let mut colors = vec![0usize; n + 1];

    fn rec(v: usize, n: usize, k: usize, adj: &[Vec<usize>], colors: &mut Vec<usize>) -> BigInt {
        if v > n {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        'colors: for color in 1..=k {
            for &u in &adj[v] {
                if colors[u] == color {
                    continue 'colors;
                }
            }
            colors[v] = color;
            total += rec(v + 1, n, k, adj, colors);
        }
        colors[v] = 0;
        total
    }

    rec(1, n, k, &adj, &mut colors)
}

/// Sanity tie to chromatic counting at `q = 1`: evaluating the
/// elementary expansion on `k` equal variables must count the proper
/// colorings with `k` colors, since each `e_m` evaluates to `binomial(k,m)`
/// there.
pub fn coloring_count_check(e: &AreaSequence, k: usize) -> bool {
    let n = e.len();
    assert!((1..=n).contains(&k), "requires 1 <= k <= n");
    let table = elementary_expansion(&monomial_expansion(e))
        .expect("coloring table converts to the elementary basis");
    let mut lhs = BigInt::zero();
    for (shape, coeff) in table.entries() {
        let mut product = coeff.eval_at_one();
        for &part in shape.parts() {
            product *= binomial(k, part);
        }
        lhs += product;
    }
    lhs == proper_coloring_count(e, k)
}
