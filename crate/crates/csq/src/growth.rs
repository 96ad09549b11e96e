//! The growth process on standard Young tableaux.
//!
//! Fix a tableau `T` of size `n` and a threshold `0 <= r <= n`. Reading the
//! columns `1..=n+1` of `T`, mark a column 1 when it is nonempty and its top
//! label exceeds `r`, else 0; this length-`n+1` bit string is the *color
//! sequence* of `(T, r)`. Its run form
//!
//! ```text
//! (1^b0, 0^a1, 1^b1, ..., 0^al, 1^bl, 0^a(l+1))
//! ```
//!
//! has `b0 >= 0` and all interior runs positive; the final zero run is
//! nonempty because column `n+1` is always empty. A new box labeled `n+1`
//! may land exactly at the leftmost column of each zero run, positions
//! `c_0 < c_1 < ... < c_l`, and the transition to the `k`-th landing site
//! carries the `Q(q)`-weight [`transition_prob`]. The weights over
//! `k = 0..=l` sum to 1 exactly, so one growth step is a probability
//! transition and composing steps along an area sequence yields a
//! probability distribution on tableaux of size `n`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::csf::ExpansionTable;
use crate::graphs::AreaSequence;
use crate::qalg::{qfact, qint, QPoly, QRat};
use crate::tableaux::{Partition, Tableau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrowthError {
    #[error("a color sequence must end with 0")]
    TrailingColor,
    #[error("interior runs of a color sequence must be positive")]
    EmptyRun,
}

/// The color pattern of the column tops of a tableau at some threshold,
/// stored both as raw bits and in run form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSequence {
    bits: Vec<bool>,
    lead: usize,
    runs: Vec<(usize, usize)>,
    tail: usize,
}

impl ColorSequence {
    /// Decompose raw bits into the run form. The last bit must be 0.
    pub fn from_bits(bits: Vec<bool>) -> Result<Self, GrowthError> {
        if bits.last() != Some(&false) {
            return Err(GrowthError::TrailingColor);
        }
        let lead = bits.iter().take_while(|&&b| b).count();
        let mut runs = Vec::new();
        let mut pos = lead;
        loop {
            let zeros = bits[pos..].iter().take_while(|&&b| !b).count();
            let ones = bits[pos + zeros..].iter().take_while(|&&b| b).count();
            pos += zeros + ones;
            if ones == 0 {
                return Ok(ColorSequence {
                    bits,
                    lead,
                    runs,
                    tail: zeros,
                });
            }
            runs.push((zeros, ones));
        }
    }

    /// Assemble from the run form `(1^lead, 0^a1, 1^b1, ..., 0^tail)`.
    pub fn from_runs(
        lead: usize,
        runs: Vec<(usize, usize)>,
        tail: usize,
    ) -> Result<Self, GrowthError> {
        if tail == 0 {
            return Err(GrowthError::TrailingColor);
        }
        if runs.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(GrowthError::EmptyRun);
        }
        let mut bits = vec![true; lead];
        for &(a, b) in &runs {
            bits.extend(std::iter::repeat_n(false, a));
            bits.extend(std::iter::repeat_n(true, b));
        }
        bits.extend(std::iter::repeat_n(false, tail));
        Ok(ColorSequence {
            bits,
            lead,
            runs,
            tail,
        })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Length of the leading 1-run (`b0`).
    pub fn lead(&self) -> usize {
        self.lead
    }

    /// The interior runs `(a_i, b_i)` for `i = 1..=l`.
    pub fn interior_runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    /// Length of the trailing 0-run.
    pub fn tail(&self) -> usize {
        self.tail
    }

    /// The number `l` of landing sites beyond the first.
    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    /// The columns where a new box may land: the leftmost position of each
    /// zero run, `c_k = a_1 + ... + a_k + b_0 + ... + b_k + 1`.
    pub fn positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.runs.len() + 1);
        let mut c = self.lead + 1;
        out.push(c);
        for &(a, b) in &self.runs {
            c += a + b;
            out.push(c);
        }
        out
    }
}

impl fmt::Display for ColorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// The color sequence of `(T, r)`: bit `i` is set when column `i` is
/// nonempty with top label exceeding `r`. Panics unless `0 <= r <= n`.
pub fn color_sequence(tableau: &Tableau, r: usize) -> ColorSequence {
    let n = tableau.size();
    assert!(
        r <= n,
        "threshold {r} out of range for a tableau of size {n}"
    );
    let bits = (1..=n + 1)
        .map(|c| tableau.top_of_column(c).is_some_and(|label| label > r))
        .collect();
    ColorSequence::from_bits(bits).expect("column n+1 of a size-n tableau is empty")
}

/// The transition weight of landing at position `c_k`:
///
/// ```text
///   q^(a_1 + ... + a_k)
///   * prod_{i=1..k}   [a_(i+1)+..+a_k + b_i+..+b_k]   / [a_i+..+a_k + b_i+..+b_k]
///   * prod_{i=k+1..l} [a_(k+1)+..+a_i + b_(k+1)+..+b_(i-1)] / [a_(k+1)+..+a_i + b_(k+1)+..+b_i]
/// ```
///
/// with `[.]` the q-integer; empty sums are 0 and empty products 1, so
/// `l = 0` forces the single weight 1. The value depends only on the
/// interior runs, never on the leading 1-run or the trailing 0-run.
pub fn transition_prob(seq: &ColorSequence, k: usize) -> QRat {
    let l = seq.run_count();
    assert!(k <= l, "landing index {k} out of range (l = {l})");
    let a = |i: usize| seq.runs[i - 1].0;
    let b = |i: usize| seq.runs[i - 1].1;
    let span_a = |from: usize, to: usize| (from..=to).map(a).sum::<usize>();
    let span_b = |from: usize, to: usize| (from..=to).map(b).sum::<usize>();

    let exponent = if k >= 1 { span_a(1, k) } else { 0 };
    let mut numerator = QPoly::monomial(1.into(), exponent);
    let mut denominator = QPoly::one();
    for i in 1..=k {
        let top = if i < k { span_a(i + 1, k) } else { 0 } + span_b(i, k);
        let bottom = span_a(i, k) + span_b(i, k);
        numerator = &numerator * &qint(top as i64);
        denominator = &denominator * &qint(bottom as i64);
    }
    for i in k + 1..=l {
        let top = span_a(k + 1, i) + if i >= k + 2 { span_b(k + 1, i - 1) } else { 0 };
        let bottom = span_a(k + 1, i) + span_b(k + 1, i);
        numerator = &numerator * &qint(top as i64);
        denominator = &denominator * &qint(bottom as i64);
    }
    QRat::new(numerator, denominator)
}

/// The tableau obtained by adding the box labeled `n+1` at the `k`-th
/// landing site of `(T, r)`.
pub fn grow(tableau: &Tableau, r: usize, k: usize) -> Tableau {
    let seq = color_sequence(tableau, r);
    let column = seq.positions()[k];
    tableau
        .add_box(column)
        .expect("landing sites of a color sequence are addable columns")
}

/// A sparse `Q(q)`-linear combination of standard Young tableaux of one
/// size. Zero coefficients are never stored, so the coefficient of an
/// absent tableau is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauDistribution {
    size: usize,
    terms: BTreeMap<Tableau, QRat>,
}

impl TableauDistribution {
    pub fn zero(size: usize) -> Self {
        TableauDistribution {
            size,
            terms: BTreeMap::new(),
        }
    }

    /// The single tableau with coefficient 1.
    pub fn singleton(tableau: Tableau) -> Self {
        let mut dist = TableauDistribution::zero(tableau.size());
        dist.add_term(tableau, QRat::one());
        dist
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, &QRat)> {
        self.terms.iter()
    }

    /// Coefficient extraction; zero for tableaux not present.
    pub fn coefficient(&self, tableau: &Tableau) -> QRat {
        self.terms.get(tableau).cloned().unwrap_or_else(QRat::zero)
    }

    /// Add `coeff * tableau`, merging and dropping exact zeros eagerly.
    pub fn add_term(&mut self, tableau: Tableau, coeff: QRat) {
        debug_assert_eq!(tableau.size(), self.size);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(tableau);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let merged = slot.get() + &coeff;
                if merged.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = merged;
                }
            }
        }
    }

    pub fn scaled(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return TableauDistribution::zero(self.size);
        }
        TableauDistribution {
            size: self.size,
            terms: self
                .terms
                .iter()
                .map(|(t, coeff)| (t.clone(), coeff * c))
                .collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "sizes must agree");
        let mut out = self.clone();
        for (t, coeff) in &other.terms {
            out.add_term(t.clone(), coeff.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "sizes must agree");
        let mut out = self.clone();
        for (t, coeff) in &other.terms {
            out.add_term(t.clone(), -coeff);
        }
        out
    }

    /// One growth step at threshold `r`: each tableau spreads over its
    /// landing sites with the matching transition weights, linearly
    /// extended. Requires `r <= size`.
    pub fn step(&self, r: usize) -> Self {
        assert!(
            r <= self.size,
            "threshold {r} out of range for size {}",
            self.size
        );
        let mut out = TableauDistribution::zero(self.size + 1);
        for (tableau, coeff) in &self.terms {
            let seq = color_sequence(tableau, r);
            let positions = seq.positions();
            for (k, &column) in positions.iter().enumerate() {
                let grown = tableau
                    .add_box(column)
                    .expect("landing sites are addable columns");
                out.add_term(grown, coeff * &transition_prob(&seq, k));
            }
        }
        out
    }

    /// Sum of all coefficients; 1 for a distribution produced by
    /// [`growth_distribution`].
    pub fn total_mass(&self) -> QRat {
        let mut acc = QRat::zero();
        for coeff in self.terms.values() {
            acc = &acc + coeff;
        }
        acc
    }

    /// Sum of the coefficients over the tableaux of one shape.
    pub fn shape_mass(&self, shape: &Partition) -> QRat {
        let mut acc = QRat::zero();
        for (tableau, coeff) in &self.terms {
            if &tableau.shape() == shape {
                acc = &acc + coeff;
            }
        }
        acc
    }
}

/// The distribution grown from the empty tableau along `e`: step `i`
/// applies the threshold `e(i)` to the size-`i-1` distribution, which is
/// legal since `e(i) <= i - 1`.
pub fn growth_distribution(e: &AreaSequence) -> TableauDistribution {
    let mut dist = TableauDistribution::singleton(Tableau::empty());
    for i in 1..=e.len() {
        dist = dist.step(e.value(i));
    }
    dist
}

/// The probability of reaching exactly `T` when growing along `e`: the
/// product of the transition weights along the truncation chain of `T`,
/// or zero as soon as some step of the chain is not a legal landing.
///
/// Agrees with the coefficient of `T` in [`growth_distribution`] — the two
/// routes are computed independently and cross-checked in the tests.
pub fn tableau_probability(e: &AreaSequence, tableau: &Tableau) -> QRat {
    let n = tableau.size();
    assert_eq!(n, e.len(), "tableau size must match the sequence length");
    let mut acc = QRat::one();
    for i in 1..=n {
        let prev = tableau.truncated(i - 1);
        let seq = color_sequence(&prev, e.value(i));
        let (column, _) = tableau
            .position_of(i)
            .expect("labels 1..=n are present in a standard tableau");
        let Some(k) = seq.positions().iter().position(|&c| c == column) else {
            return QRat::zero();
        };
        acc = &acc * &transition_prob(&seq, k);
    }
    acc
}

/// The probability that the growth along `e` ends in shape `lambda`:
/// the total mass of the shape in the grown distribution.
pub fn shape_probability(e: &AreaSequence, shape: &Partition) -> QRat {
    growth_distribution(e).shape_mass(shape)
}

/// The same probability computed from the elementary expansion
/// coefficients: `q^(|e| - |e_lambda|) * c_lambda / prod [lambda_i]!`,
/// where `|e_lambda| = sum_{i<j} lambda_i lambda_j`. When `|e|` is smaller
/// than `|e_lambda|` the power of `q` is a genuine rational function.
pub fn shape_probability_from_expansion(
    e: &AreaSequence,
    shape: &Partition,
    table: &ExpansionTable,
) -> QRat {
    debug_assert_eq!(table.n(), e.len());
    let exponent = e.sum() as i64 - shape.pair_product_sum() as i64;
    let mut denominator = QPoly::one();
    for &part in shape.parts() {
        denominator = &denominator * &qfact(part as i64);
    }
    &QRat::q_pow(exponent) * &QRat::new(table.coefficient(shape), denominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csf::{elementary_expansion, monomial_expansion};
    use crate::tableaux::standard_tableaux_of_size;
    use num::rational::BigRational;
    use num::BigInt;
    use num::Zero;

    fn seq(values: &[usize]) -> AreaSequence {
        AreaSequence::new(values.to_vec()).unwrap()
    }

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn qr(s: &str) -> QRat {
        s.parse().unwrap()
    }

    /// Bottom row 1 2 3 6, top row 4 5 — the running example.
    fn example_tableau() -> Tableau {
        tab("1 2 3 6/4 5")
    }

    fn bits(pattern: &str) -> ColorSequence {
        ColorSequence::from_bits(pattern.chars().map(|c| c == '1').collect()).unwrap()
    }

    #[test]
    fn color_sequence_of_the_example() {
        let seq = color_sequence(&example_tableau(), 4);
        assert_eq!(seq.to_string(), "0101000");
        assert_eq!(seq.lead(), 0);
        assert_eq!(seq.interior_runs(), &[(1, 1), (1, 1)]);
        assert_eq!(seq.tail(), 3);
        assert_eq!(seq.positions(), vec![1, 3, 5]);
    }

    #[test]
    fn color_sequence_extremes() {
        let t = example_tableau();
        // r = 0 paints everything: bits are 1 on the first row length.
        let seq = color_sequence(&t, 0);
        assert_eq!(seq.to_string(), "1111000");
        assert_eq!(seq.positions(), vec![5]);
        // r = n paints nothing.
        let seq = color_sequence(&t, 6);
        assert_eq!(seq.to_string(), "0000000");
        assert_eq!(seq.positions(), vec![1]);
    }

    #[test]
    fn positions_of_tiny_sequences() {
        assert_eq!(bits("10").positions(), vec![2]);
        assert_eq!(bits("00").positions(), vec![1]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn color_sequence_rejects_large_threshold() {
        color_sequence(&example_tableau(), 7);
    }

    #[test]
    fn transition_probs_of_the_example() {
        let seq = color_sequence(&example_tableau(), 4);
        let three = qint(3);
        let four = &qint(2) * &qint(4);
        assert_eq!(
            transition_prob(&seq, 0),
            QRat::new(three.clone(), four.clone())
        );
        assert_eq!(
            transition_prob(&seq, 1),
            QRat::new(QPoly::q(), &qint(2) * &qint(2))
        );
        assert_eq!(
            transition_prob(&seq, 2),
            QRat::new(&QPoly::monomial(1.into(), 2) * &three, four)
        );
        let total = (0..=2)
            .map(|k| transition_prob(&seq, k))
            .fold(QRat::zero(), |acc, w| &acc + &w);
        assert!(total.is_one());
    }

    #[test]
    fn weights_ignore_lead_and_tail() {
        let base = ColorSequence::from_runs(0, vec![(2, 1), (1, 3)], 1).unwrap();
        let padded = ColorSequence::from_runs(4, vec![(2, 1), (1, 3)], 6).unwrap();
        for k in 0..=2 {
            assert_eq!(transition_prob(&base, k), transition_prob(&padded, k));
        }
    }

    /// The run form reconstructs the raw bits exactly.
    #[test]
    fn run_form_roundtrips_bits() {
        for n in 0..=5 {
            for t in standard_tableaux_of_size(n) {
                for r in 0..=n {
                    let seq = color_sequence(&t, r);
                    let rebuilt = ColorSequence::from_runs(
                        seq.lead(),
                        seq.interior_runs().to_vec(),
                        seq.tail(),
                    )
                    .unwrap();
                    assert_eq!(rebuilt, seq);
                }
            }
        }
        assert!(ColorSequence::from_bits(vec![false, true]).is_err());
        assert!(ColorSequence::from_runs(1, vec![(0, 2)], 1).is_err());
        assert!(ColorSequence::from_runs(0, vec![], 0).is_err());
    }

    /// The weights of every `(T, r)` with `|T| <= 7` sum to exactly 1.
    #[test]
    fn weights_sum_to_one_over_tableaux() {
        for n in 0..=7 {
            for t in standard_tableaux_of_size(n) {
                for r in 0..=n {
                    let seq = color_sequence(&t, r);
                    let total = (0..=seq.run_count())
                        .map(|k| transition_prob(&seq, k))
                        .fold(QRat::zero(), |acc, w| &acc + &w);
                    assert!(total.is_one(), "T={t} r={r}");
                }
            }
        }
    }

    /// Every run form with interior mass up to 12 has weights summing to 1,
    /// each positive at sampled points.
    #[test]
    fn weights_sum_to_one_over_run_forms() {
        fn run_forms(budget: usize) -> Vec<Vec<(usize, usize)>> {
            let mut out = vec![Vec::new()];
            fn rec(
                budget: usize,
                prefix: &mut Vec<(usize, usize)>,
                out: &mut Vec<Vec<(usize, usize)>>,
            ) {
                for a in 1..=budget {
                    for b in 1..=budget - a {
                        prefix.push((a, b));
                        out.push(prefix.clone());
                        if budget - a - b >= 2 {
                            rec(budget - a - b, prefix, out);
                        }
                        prefix.pop();
                    }
                }
            }
            rec(budget, &mut Vec::new(), &mut out);
            out
        }

        let samples: Vec<BigRational> = [(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)]
            .iter()
            .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        let forms = run_forms(12);
        assert!(forms.len() > 500);
        for runs in forms {
            let seq = ColorSequence::from_runs(0, runs, 1).unwrap();
            let mut total = QRat::zero();
            for k in 0..=seq.run_count() {
                let w = transition_prob(&seq, k);
                for x in &samples {
                    assert!(
                        w.eval(x).unwrap() > BigRational::zero(),
                        "weight not positive"
                    );
                }
                total = &total + &w;
            }
            assert!(total.is_one(), "weights of {seq} do not sum to 1");
        }
    }

    /// Flipping one 1-bit to 0 rescales the weights by explicit q-integer
    /// ratios. With the bit inside interior run `m` at offset `beta`, the
    /// low landing sites rescale by `[c - c_k + 1]/[c - c_k]` and the high
    /// ones by `q[c' - c - 1]/[c' - c]` against the matching weight of the
    /// original sequence, where `c'` is the original landing site indexed
    /// per the four run-splitting cases.
    #[test]
    fn single_bit_flip_rescales_weights() {
        let qi = |k: usize| QRat::from(qint(k as i64));
        let forms: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (0, vec![(1, 3), (2, 2)]),
            (1, vec![(2, 1), (1, 2)]),
            (2, vec![(1, 2), (2, 1), (1, 1)]),
            (0, vec![(3, 1)]),
            (1, vec![(1, 1), (1, 1)]),
        ];
        for (lead, runs) in forms {
            let original = ColorSequence::from_runs(lead, runs.clone(), 2).unwrap();
            let positions = original.positions();
            let l = original.run_count();
            // Flip each set bit in each interior run (m >= 1).
            let mut prefix = lead;
            for m in 1..=l {
                let (a_m, b_m) = runs[m - 1];
                prefix += a_m;
                for beta in 1..=b_m {
                    let c = prefix + beta;
                    let mut flipped_bits = original.bits().to_vec();
                    assert!(flipped_bits[c - 1]);
                    flipped_bits[c - 1] = false;
                    let flipped = ColorSequence::from_bits(flipped_bits).unwrap();

                    // Low sites: k < m, same index in both sequences.
                    for (k, &position) in positions.iter().enumerate().take(m) {
                        let gap = c - position;
                        let expected = &(&qi(gap + 1) / &qi(gap)) * &transition_prob(&original, k);
                        assert_eq!(transition_prob(&flipped, k), expected);
                    }
                    // High sites: index pairing depends on how the run splits.
                    let q = QRat::from(QPoly::q());
                    let pairs: Vec<(usize, usize)> = if 1 < beta && beta < b_m {
                        (m + 1..=l + 1).map(|k| (k, k - 1)).collect()
                    } else if beta == 1 && b_m > 1 {
                        (m..=l).map(|k| (k, k)).collect()
                    } else if beta == b_m && b_m > 1 {
                        (m + 1..=l).map(|k| (k, k)).collect()
                    } else {
                        (m..=l - 1).map(|k| (k, k + 1)).collect()
                    };
                    for (flipped_k, original_k) in pairs {
                        let gap = positions[original_k] - c;
                        let expected = &(&q * &(&qi(gap - 1) / &qi(gap)))
                            * &transition_prob(&original, original_k);
                        assert_eq!(
                            transition_prob(&flipped, flipped_k),
                            expected,
                            "flip at {c} in {original}, site {flipped_k}"
                        );
                    }
                }
                prefix += b_m;
            }
        }
    }

    #[test]
    fn grow_matches_the_example_figures() {
        let t = example_tableau();
        assert_eq!(grow(&t, 4, 0).to_string(), "1 2 3 6/4 5/7");
        assert_eq!(grow(&t, 4, 1).to_string(), "1 2 3 6/4 5 7");
        assert_eq!(grow(&t, 4, 2).to_string(), "1 2 3 6 7/4 5");
        assert_eq!(grow(&Tableau::empty(), 0, 0).to_string(), "1");
    }

    #[test]
    fn step_examples() {
        let row2 = TableauDistribution::singleton(tab("1 2"));
        let grown = row2.step(0);
        assert_eq!(grown.term_count(), 1);
        assert!(grown.coefficient(&tab("1 2 3")).is_one());

        let grown = row2.step(1);
        assert_eq!(grown.term_count(), 2);
        assert_eq!(grown.coefficient(&tab("1 2/3")), qr("1/(1+q)"));
        assert_eq!(grown.coefficient(&tab("1 2 3")), qr("q/(1+q)"));

        let empty = TableauDistribution::zero(2);
        assert!(empty.step(1).is_zero());
    }

    #[test]
    fn growth_along_small_sequences() {
        let dist = growth_distribution(&seq(&[0, 0, 0, 0]));
        assert_eq!(dist.term_count(), 1);
        assert!(dist.coefficient(&tab("1 2 3 4")).is_one());

        let dist = growth_distribution(&seq(&[0, 1]));
        assert_eq!(dist.term_count(), 1);
        assert!(dist.coefficient(&tab("1/2")).is_one());

        let dist = growth_distribution(&seq(&[0, 0, 1]));
        assert_eq!(dist.term_count(), 2);
        assert_eq!(dist.coefficient(&tab("1 2 3")), qr("q/(1+q)"));
        assert_eq!(dist.coefficient(&tab("1 2/3")), qr("1/(1+q)"));
        assert!(dist.total_mass().is_one());
    }

    #[test]
    fn chain_probability_examples() {
        let e = seq(&[0, 0, 1]);
        assert_eq!(tableau_probability(&e, &tab("1 2 3")), qr("q/(1+q)"));
        assert!(tableau_probability(&e, &tab("1/2/3")).is_zero());
        assert!(tableau_probability(&seq(&[0, 1]), &tab("1/2")).is_one());
    }

    #[test]
    fn shape_probability_examples() {
        let e = seq(&[0, 0, 1]);
        assert_eq!(shape_probability(&e, &shape(&[3])), qr("q/(1+q)"));
        assert_eq!(shape_probability(&e, &shape(&[2, 1])), qr("1/(1+q)"));
        assert!(shape_probability(&e, &shape(&[1, 1, 1])).is_zero());
        assert!(shape_probability(&AreaSequence::complete(5), &shape(&[5])).is_one());
    }

    #[test]
    fn expansion_probability_examples() {
        let e = seq(&[0, 0, 1]);
        let table = elementary_expansion(&monomial_expansion(&e)).unwrap();
        assert_eq!(
            shape_probability_from_expansion(&e, &shape(&[3]), &table),
            qr("q/(1+q)")
        );
        assert_eq!(
            shape_probability_from_expansion(&e, &shape(&[2, 1]), &table),
            qr("1/(1+q)")
        );
        // A rearrangement case: both routes give exactly 1.
        let mu = crate::tableaux::Composition::new(vec![1, 2]).unwrap();
        let e = AreaSequence::of_composition(&mu);
        let table = elementary_expansion(&monomial_expansion(&e)).unwrap();
        assert!(shape_probability_from_expansion(&e, &shape(&[2, 1]), &table).is_one());
    }

    #[test]
    fn chain_and_distribution_routes_agree() {
        for n in 1..=5 {
            let tableaux = standard_tableaux_of_size(n);
            for e in AreaSequence::enumerate(n) {
                let dist = growth_distribution(&e);
                assert!(dist.total_mass().is_one(), "mass off for {e}");
                for t in &tableaux {
                    assert_eq!(
                        tableau_probability(&e, t),
                        dist.coefficient(t),
                        "routes disagree for {e} at {t}"
                    );
                }
            }
        }
    }

    /// The expansion-side probabilities also sum to 1 over the shapes:
    /// `sum_lambda q^(|e|-|e_lambda|) c_lambda / prod [lambda_i]! = 1`.
    #[test]
    fn expansion_probabilities_sum_to_one() {
        for n in 1..=5 {
            let shapes = Partition::all(n);
            for e in AreaSequence::enumerate(n) {
                let table = elementary_expansion(&monomial_expansion(&e)).unwrap();
                let total = shapes
                    .iter()
                    .map(|s| shape_probability_from_expansion(&e, s, &table))
                    .fold(QRat::zero(), |acc, p| &acc + &p);
                assert!(total.is_one(), "linear relation fails for {e}");
            }
        }
    }

    #[test]
    fn probabilities_nonnegative_at_one() {
        let one = BigRational::new(BigInt::from(1), BigInt::from(1));
        for n in 1..=5 {
            for e in AreaSequence::enumerate(n) {
                for (_, coeff) in growth_distribution(&e).terms() {
                    assert!(coeff.eval(&one).unwrap() >= BigRational::zero());
                }
            }
        }
    }
}
