//! Executable verification: exact subspace membership over `Q(q)` and the
//! suites that check the identities the rest of the crate claims.
//!
//! Every suite returns a [`VerificationReport`]; a failing instance always
//! carries the serialized inputs that reproduce it together with both exact
//! values. The verifier only drives public operations of the other modules,
//! so a failure localizes upstream.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::csf::{elementary_expansion, monomial_expansion};
use crate::graphs::{modular_triples, AreaSequence};
use crate::growth::{
    color_sequence, growth_distribution, shape_probability_from_expansion, transition_prob,
    TableauDistribution,
};
use crate::qalg::{gcd, lcm, qfact, qint, QPoly, QRat};
use crate::tableaux::{standard_tableaux_of_size, Composition, Partition, Tableau};

/// Which spanned subspace of the tableau space a membership query targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceKind {
    /// Spanned by `T + q[L-1]/[L+1] * swap(T)` over the tableaux whose
    /// labels `m` and `m+1` top their columns, `m+1` exactly `L` columns to
    /// the right; for `L = 1` the generator degenerates to `T` alone.
    WeightedSwap,
    /// Spanned by `T - swap(T)` over the tableaux where exchanging `m` and
    /// `m+1` is defined.
    SwapDifference,
}

/// A subspace query: the kind, the label index `m`, and the tableau size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceSpec {
    pub kind: SubspaceKind,
    pub m: usize,
    pub n: usize,
}

impl SubspaceSpec {
    pub fn weighted(m: usize, n: usize) -> Self {
        SubspaceSpec {
            kind: SubspaceKind::WeightedSwap,
            m,
            n,
        }
    }

    pub fn difference(m: usize, n: usize) -> Self {
        SubspaceSpec {
            kind: SubspaceKind::SwapDifference,
            m,
            n,
        }
    }
}

/// The generator of the weighted-swap subspace attached to `t`, if `t` is
/// eligible: `m` tops a column and `m+1` tops a column further right.
pub fn weighted_generator(t: &Tableau, m: usize) -> Option<TableauDistribution> {
    let (c1, r1) = t.position_of(m)?;
    let (c2, r2) = t.position_of(m + 1)?;
    if r1 != t.column_height(c1) || r2 != t.column_height(c2) || c2 <= c1 {
        return None;
    }
    let gap = c2 - c1;
    let mut dist = TableauDistribution::singleton(t.clone());
    if gap > 1 {
        let swapped = t
            .swap_labels(m)
            .expect("tops of distinct columns and rows always swap");
        dist.add_term(
            swapped,
            QRat::new(&QPoly::q() * &qint(gap as i64 - 1), qint(gap as i64 + 1)),
        );
    }
    Some(dist)
}

/// The generator `t - swap(t)` of the difference subspace, if defined.
pub fn difference_generator(t: &Tableau, m: usize) -> Option<TableauDistribution> {
    let swapped = t.swap_labels(m)?;
    let mut dist = TableauDistribution::singleton(t.clone());
    dist.add_term(swapped, -QRat::one());
    Some(dist)
}

/// All spanning vectors of a subspace, one per eligible tableau (swap pairs
/// of the difference kind are emitted once).
pub fn subspace_generators(spec: &SubspaceSpec) -> Vec<TableauDistribution> {
    let all = standard_tableaux_of_size(spec.n);
    match spec.kind {
        SubspaceKind::WeightedSwap => all
            .iter()
            .filter_map(|t| weighted_generator(t, spec.m))
            .collect(),
        SubspaceKind::SwapDifference => all
            .iter()
            .filter_map(|t| {
                let swapped = t.swap_labels(spec.m)?;
                if *t < swapped {
                    difference_generator(t, spec.m)
                } else {
                    None
                }
            })
            .collect(),
    }
}

/// A sparse vector over `Z[q]`, sorted by tableau; the first entry leads.
type SparseRow = Vec<(Tableau, QPoly)>;

/// Clear denominators of a distribution into a primitive `Z[q]` row.
fn to_row(dist: &TableauDistribution) -> SparseRow {
    let mut common = QPoly::one();
    for (_, coeff) in dist.terms() {
        common = lcm(&common, coeff.denom());
    }
    let row: SparseRow = dist
        .terms()
        .map(|(t, coeff)| {
            let scale = common
                .div_exact(coeff.denom())
                .expect("lcm of denominators divides exactly");
            (t.clone(), coeff.numer() * &scale)
        })
        .collect();
    make_primitive(row)
}

fn make_primitive(mut row: SparseRow) -> SparseRow {
    row.retain(|(_, c)| !c.is_zero());
    if row.is_empty() {
        return row;
    }
    let mut g = QPoly::zero();
    for (_, c) in &row {
        g = gcd(&g, c);
    }
    if !g.is_one() {
        for (_, c) in &mut row {
            *c = c.div_exact(&g).expect("gcd of row entries divides exactly");
        }
    }
    row
}

/// `lead(pivot) * row - lead(row) * pivot`, kept primitive. The leading
/// entries must refer to the same tableau, which the combination cancels.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let lp = &pivot[0].1;
    let lr = &row[0].1;
    let mut merged: BTreeMap<&Tableau, QPoly> = BTreeMap::new();
    for (t, c) in row {
        merged.insert(t, c * lp);
    }
    for (t, c) in pivot {
        let sub = c * lr;
        match merged.get_mut(t) {
            Some(entry) => *entry = &*entry - &sub,
            None => {
                merged.insert(t, -sub);
            }
        }
    }
    make_primitive(
        merged
            .into_iter()
            .map(|(t, c)| (t.clone(), c))
            .collect::<Vec<_>>(),
    )
}

/// A subspace with its echelon basis precomputed, for repeated membership
/// queries. Decisions are exact: rows are fraction-free `Z[q]` vectors and
/// elimination never divides.
pub struct Subspace {
    spec: SubspaceSpec,
    echelon: BTreeMap<Tableau, SparseRow>,
}

impl Subspace {
    pub fn new(spec: SubspaceSpec) -> Self {
        let mut space = Subspace {
            spec,
            echelon: BTreeMap::new(),
        };
        for generator in subspace_generators(&spec) {
            let reduced = space.reduce(to_row(&generator));
            if !reduced.is_empty() {
                space.echelon.insert(reduced[0].0.clone(), reduced);
            }
        }
        space
    }

    pub fn spec(&self) -> &SubspaceSpec {
        &self.spec
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, _)) = row.first() {
            let Some(pivot) = self.echelon.get(lead) else {
                return row;
            };
            row = eliminate(&row, pivot);
        }
        row
    }

    /// Exact membership of the distribution in the spanned subspace.
    pub fn contains(&self, dist: &TableauDistribution) -> bool {
        assert_eq!(dist.size(), self.spec.n, "sizes must agree");
        self.reduce(to_row(dist)).is_empty()
    }
}

/// One-off membership query; builds the echelon basis and discards it.
pub fn member(dist: &TableauDistribution, spec: &SubspaceSpec) -> bool {
    Subspace::new(*spec).contains(dist)
}

/// Independent decider for the difference subspace: membership holds iff
/// every tableau with the swap undefined carries coefficient zero and the
/// coefficients of each swap pair cancel.
pub fn difference_member_paircheck(dist: &TableauDistribution, m: usize) -> bool {
    for (t, coeff) in dist.terms() {
        match t.swap_labels(m) {
            None => return false, // stored coefficients are never zero
            Some(u) => {
                if !(coeff + &dist.coefficient(&u)).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// A failing instance: the serialized inputs that reproduce it and the two
/// exact values that were compared.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one suite at one size.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn collect(suite: &str, n: usize, results: Vec<(usize, Vec<Failure>)>) -> Self {
        let mut report = VerificationReport {
            suite: suite.to_string(),
            n,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        };
        for (checked, failures) in results {
            report.checked += checked;
            report.failed += failures.len();
            report.failures.extend(failures);
        }
        report
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Merge sub-suites into one report under a new name.
    pub fn merged(suite: &str, n: usize, parts: Vec<VerificationReport>) -> Self {
        VerificationReport::collect(
            suite,
            n,
            parts.into_iter().map(|r| (r.checked, r.failures)).collect(),
        )
    }
}

/// The central identity: for every shape and every sequence, the
/// probability computed from the elementary expansion equals the one from
/// the growth process, and the expansion coefficient is nonnegative at
/// `q = 1`. One check per `(lambda, e)` pair.
pub fn verify_main(n: usize) -> VerificationReport {
    assert!(n >= 1, "verification requires n >= 1");
    let shapes = Partition::all(n);
    let one = BigRational::new(BigInt::from(1), BigInt::from(1));
    let results = AreaSequence::enumerate(n)
        .par_iter()
        .map(|e| {
            let mut failures = Vec::new();
            let table = elementary_expansion(&monomial_expansion(e))
                .expect("coloring table converts exactly");
            let dist = growth_distribution(e);
            for shape in &shapes {
                let lhs = shape_probability_from_expansion(e, shape, &table);
                let rhs = dist.shape_mass(shape);
                if lhs != rhs {
                    failures.push(Failure {
                        instance: format!("e={e} lambda={shape}"),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                    continue;
                }
                let at_one = table.coefficient(shape).eval(&one);
                if at_one < BigRational::zero() {
                    failures.push(Failure {
                        instance: format!("e={e} lambda={shape} at q=1"),
                        lhs: at_one.to_string(),
                        rhs: "nonnegative".to_string(),
                    });
                }
            }
            (shapes.len(), failures)
        })
        .collect();
    VerificationReport::collect("main", n, results)
}

/// Which function the three-term relation is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModularTarget {
    /// The elementary expansion coefficients from the coloring side:
    /// `(1+q) c(e) = q c(e') + c(e'')`.
    Expansion,
    /// The growth-side probabilities, where the factor `q` sits on the
    /// other term: `(1+q) p(e) = p(e') + q p(e'')`.
    Probability,
}

/// Check the three-term relation over every generated triple and every
/// shape. One check per `(triple, lambda)`.
pub fn verify_modular(n: usize, target: ModularTarget) -> VerificationReport {
    assert!(n >= 1, "verification requires n >= 1");
    let suite = match target {
        ModularTarget::Expansion => "modular-chi",
        ModularTarget::Probability => "modular-p",
    };
    let triples = modular_triples(n);
    let shapes = Partition::all(n);
    let mut sequences = BTreeSet::new();
    for t in &triples {
        sequences.insert(t.base.clone());
        sequences.insert(t.raised.clone());
        sequences.insert(t.lowered.clone());
    }
    let sequences: Vec<AreaSequence> = sequences.into_iter().collect();
    let one_plus_q = QRat::from(qint(2));
    let q = QRat::from(QPoly::q());

    let values: BTreeMap<AreaSequence, BTreeMap<Partition, QRat>> = sequences
        .par_iter()
        .map(|e| {
            let by_shape: BTreeMap<Partition, QRat> = match target {
                ModularTarget::Expansion => {
                    let table = elementary_expansion(&monomial_expansion(e))
                        .expect("coloring table converts exactly");
                    shapes
                        .iter()
                        .map(|s| (s.clone(), QRat::from(table.coefficient(s))))
                        .collect()
                }
                ModularTarget::Probability => {
                    let dist = growth_distribution(e);
                    shapes
                        .iter()
                        .map(|s| (s.clone(), dist.shape_mass(s)))
                        .collect()
                }
            };
            (e.clone(), by_shape)
        })
        .collect();

    let results = triples
        .par_iter()
        .map(|triple| {
            let mut failures = Vec::new();
            for shape in &shapes {
                let base = &values[&triple.base][shape];
                let raised = &values[&triple.raised][shape];
                let lowered = &values[&triple.lowered][shape];
                let lhs = &one_plus_q * base;
                let rhs = match target {
                    ModularTarget::Expansion => &(&q * raised) + lowered,
                    ModularTarget::Probability => raised + &(&q * lowered),
                };
                if lhs != rhs {
                    failures.push(Failure {
                        instance: format!(
                            "kind={} pivot={} e={} e'={} e''={} lambda={shape}",
                            triple.kind, triple.pivot, triple.base, triple.raised, triple.lowered
                        ),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
            (shapes.len(), failures)
        })
        .collect();
    VerificationReport::collect(suite, n, results)
}

/// Growth along the sequence of a composition must end in the sorted shape
/// with probability one, and the expansion coefficient there must be the
/// product of q-factorials. One check per `(mu, lambda)` pair.
pub fn verify_normalization(n: usize) -> VerificationReport {
    assert!(n >= 1, "verification requires n >= 1");
    let shapes = Partition::all(n);
    let results = Composition::all(n)
        .par_iter()
        .map(|mu| {
            let mut failures = Vec::new();
            let e = AreaSequence::of_composition(mu);
            let dist = growth_distribution(&e);
            let table = elementary_expansion(&monomial_expansion(&e))
                .expect("coloring table converts exactly");
            let sorted = mu.sorted_partition();
            for shape in &shapes {
                let rearranged = *shape == sorted;
                let chi = dist.shape_mass(shape);
                let chi_expected = if rearranged {
                    QRat::one()
                } else {
                    QRat::zero()
                };
                if chi != chi_expected {
                    failures.push(Failure {
                        instance: format!("mu={mu} lambda={shape} (growth)"),
                        lhs: chi.to_string(),
                        rhs: chi_expected.to_string(),
                    });
                    continue;
                }
                let c = table.coefficient(shape);
                let c_expected = if rearranged {
                    let mut prod = QPoly::one();
                    for &part in shape.parts() {
                        prod = &prod * &qfact(part as i64);
                    }
                    prod
                } else {
                    QPoly::zero()
                };
                if c != c_expected {
                    failures.push(Failure {
                        instance: format!("mu={mu} lambda={shape} (expansion)"),
                        lhs: c.to_string(),
                        rhs: c_expected.to_string(),
                    });
                }
            }
            (shapes.len(), failures)
        })
        .collect();
    VerificationReport::collect("normalization", n, results)
}

/// At threshold 0 a growth step is deterministic: the box lands at the end
/// of the first row with weight one. One check per tableau of size `n`.
pub fn verify_first_row_growth(n: usize) -> VerificationReport {
    let results = standard_tableaux_of_size(n)
        .par_iter()
        .map(|t| {
            let mut failures = Vec::new();
            let grown = TableauDistribution::singleton(t.clone()).step(0);
            let first_row = t.shape().parts().first().copied().unwrap_or(0);
            let expected = t
                .add_box(first_row + 1)
                .expect("the end of the first row is always addable");
            let ok = grown.term_count() == 1 && grown.coefficient(&expected).is_one();
            if !ok {
                let rendered: Vec<String> =
                    grown.terms().map(|(u, c)| format!("{c}*[{u}]")).collect();
                failures.push(Failure {
                    instance: format!("T={t} r=0"),
                    lhs: rendered.join(" + "),
                    rhs: format!("1*[{expected}]"),
                });
            }
            (1, failures)
        })
        .collect();
    VerificationReport::collect("first-row-growth", n, results)
}

/// How the structural membership suite picks its instances.
#[derive(Clone, Copy, Debug)]
pub enum SampleMode {
    /// Every admissible `(check, T, r, m)` combination.
    Exhaustive,
    /// `count` seeded random instances, uniformly over the five checks.
    Sampled { count: usize, seed: u64 },
}

/// The five membership statements about growth steps, named by what they
/// assert.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum StructuralCheck {
    /// Applying the same step twice lands in the weighted-swap span of the
    /// two new labels.
    DoubleStep,
    /// A step below `m` maps the weighted-swap span into the next size.
    WeightedStable,
    /// A step away from `m` maps the difference span into the next size.
    DifferenceStable,
    /// `[2] step_r - step_(r+1) - q step_(r-1)` kills the weighted span
    /// into the difference span.
    RecurrenceSingle,
    /// `[2] step_(r+1) step_r - step_(r+1)^2 - q step_r^2` lands in the
    /// difference span of the two new labels.
    RecurrenceDouble,
}

impl StructuralCheck {
    fn name(self) -> &'static str {
        match self {
            StructuralCheck::DoubleStep => "double-step",
            StructuralCheck::WeightedStable => "weighted-stable",
            StructuralCheck::DifferenceStable => "difference-stable",
            StructuralCheck::RecurrenceSingle => "recurrence-single",
            StructuralCheck::RecurrenceDouble => "recurrence-double",
        }
    }
}

#[derive(Clone, Debug)]
struct StructuralInstance {
    check: StructuralCheck,
    t: Tableau,
    r: usize,
    m: usize,
}

impl StructuralInstance {
    /// The membership the instance asserts: the vector and the subspace.
    fn evaluate(&self) -> (TableauDistribution, SubspaceSpec) {
        let n = self.t.size();
        let two = QRat::from(qint(2));
        let q = QRat::from(QPoly::q());
        match self.check {
            StructuralCheck::DoubleStep => {
                let vector = TableauDistribution::singleton(self.t.clone())
                    .step(self.r)
                    .step(self.r);
                (vector, SubspaceSpec::weighted(n + 1, n + 2))
            }
            StructuralCheck::WeightedStable => {
                let generator =
                    weighted_generator(&self.t, self.m).expect("instance built from eligible T");
                (
                    generator.step(self.r),
                    SubspaceSpec::weighted(self.m, n + 1),
                )
            }
            StructuralCheck::DifferenceStable => {
                let generator =
                    difference_generator(&self.t, self.m).expect("instance built from eligible T");
                (
                    generator.step(self.r),
                    SubspaceSpec::difference(self.m, n + 1),
                )
            }
            StructuralCheck::RecurrenceSingle => {
                let generator =
                    weighted_generator(&self.t, self.r).expect("instance built from eligible T");
                let vector = generator
                    .step(self.r)
                    .scaled(&two)
                    .minus(&generator.step(self.r + 1))
                    .minus(&generator.step(self.r - 1).scaled(&q));
                (vector, SubspaceSpec::difference(self.r, n + 1))
            }
            StructuralCheck::RecurrenceDouble => {
                let base = TableauDistribution::singleton(self.t.clone());
                let vector = base
                    .step(self.r)
                    .step(self.r + 1)
                    .scaled(&two)
                    .minus(&base.step(self.r + 1).step(self.r + 1))
                    .minus(&base.step(self.r).step(self.r).scaled(&q));
                (vector, SubspaceSpec::difference(n + 1, n + 2))
            }
        }
    }
}

fn structural_instances_exhaustive(n: usize) -> Vec<StructuralInstance> {
    let all = standard_tableaux_of_size(n);
    let mut out = Vec::new();
    for t in &all {
        for r in 0..=n {
            out.push(StructuralInstance {
                check: StructuralCheck::DoubleStep,
                t: t.clone(),
                r,
                m: 0,
            });
        }
    }
    for m in 2..n {
        for r in 1..m {
            for t in all.iter().filter(|t| weighted_generator(t, m).is_some()) {
                out.push(StructuralInstance {
                    check: StructuralCheck::WeightedStable,
                    t: t.clone(),
                    r,
                    m,
                });
            }
        }
    }
    for m in 1..n {
        for r in (1..=n).filter(|&r| r != m) {
            for t in all
                .iter()
                .filter(|t| t.swap_labels(m).is_some_and(|u| **t < u))
            {
                out.push(StructuralInstance {
                    check: StructuralCheck::DifferenceStable,
                    t: t.clone(),
                    r,
                    m,
                });
            }
        }
    }
    for r in 1..n {
        for t in all.iter().filter(|t| weighted_generator(t, r).is_some()) {
            out.push(StructuralInstance {
                check: StructuralCheck::RecurrenceSingle,
                t: t.clone(),
                r,
                m: r,
            });
        }
    }
    for r in 1..n {
        for t in &all {
            out.push(StructuralInstance {
                check: StructuralCheck::RecurrenceDouble,
                t: t.clone(),
                r,
                m: 0,
            });
        }
    }
    out
}

fn structural_instances_sampled(n: usize, count: usize, seed: u64) -> Vec<StructuralInstance> {
    let all = standard_tableaux_of_size(n);
    let mut eligible_weighted: Vec<Vec<Tableau>> = vec![Vec::new(); n];
    let mut eligible_difference: Vec<Vec<Tableau>> = vec![Vec::new(); n];
    for m in 1..n {
        for t in &all {
            if weighted_generator(t, m).is_some() {
                eligible_weighted[m].push(t.clone());
            }
            if t.swap_labels(m).is_some_and(|u| *t < u) {
                eligible_difference[m].push(t.clone());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let check = match rng.gen_range(0..5) {
            0 => StructuralCheck::DoubleStep,
            1 => StructuralCheck::WeightedStable,
            2 => StructuralCheck::DifferenceStable,
            3 => StructuralCheck::RecurrenceSingle,
            _ => StructuralCheck::RecurrenceDouble,
        };
        let instance = match check {
            StructuralCheck::DoubleStep => StructuralInstance {
                check,
                t: all[rng.gen_range(0..all.len())].clone(),
                r: rng.gen_range(0..=n),
                m: 0,
            },
            StructuralCheck::WeightedStable => {
                if n < 3 {
                    continue;
                }
                let m = rng.gen_range(2..n);
                if eligible_weighted[m].is_empty() {
                    continue;
                }
                StructuralInstance {
                    check,
                    t: eligible_weighted[m][rng.gen_range(0..eligible_weighted[m].len())].clone(),
                    r: rng.gen_range(1..m),
                    m,
                }
            }
            StructuralCheck::DifferenceStable => {
                if n < 2 {
                    continue;
                }
                let m = rng.gen_range(1..n);
                if eligible_difference[m].is_empty() {
                    continue;
                }
                let mut r = rng.gen_range(1..=n - 1);
                if r >= m {
                    r += 1; // uniform over 1..=n minus m
                }
                StructuralInstance {
                    check,
                    t: eligible_difference[m][rng.gen_range(0..eligible_difference[m].len())]
                        .clone(),
                    r,
                    m,
                }
            }
            StructuralCheck::RecurrenceSingle => {
                if n < 2 {
                    continue;
                }
                let r = rng.gen_range(1..n);
                if eligible_weighted[r].is_empty() {
                    continue;
                }
                StructuralInstance {
                    check,
                    t: eligible_weighted[r][rng.gen_range(0..eligible_weighted[r].len())].clone(),
                    r,
                    m: r,
                }
            }
            StructuralCheck::RecurrenceDouble => {
                if n < 2 {
                    continue;
                }
                StructuralInstance {
                    check,
                    t: all[rng.gen_range(0..all.len())].clone(),
                    r: rng.gen_range(1..n),
                    m: 0,
                }
            }
        };
        out.push(instance);
    }
    out
}

/// The structural membership suite over the five step/subspace statements.
/// `Exhaustive` runs every admissible instance (sizes up to 4 are cheap);
/// `Sampled` draws seeded random instances for larger sizes.
pub fn verify_structural(n: usize, mode: SampleMode) -> VerificationReport {
    assert!(n >= 1, "verification requires n >= 1");
    let instances = match mode {
        SampleMode::Exhaustive => structural_instances_exhaustive(n),
        SampleMode::Sampled { count, seed } => structural_instances_sampled(n, count, seed),
    };
    // Evaluate the vectors in parallel, then build each needed subspace
    // once before deciding memberships.
    let evaluated: Vec<(TableauDistribution, SubspaceSpec)> =
        instances.par_iter().map(|i| i.evaluate()).collect();
    let specs: BTreeSet<(u8, usize, usize)> = evaluated
        .iter()
        .map(|(_, spec)| {
            (
                matches!(spec.kind, SubspaceKind::SwapDifference) as u8,
                spec.m,
                spec.n,
            )
        })
        .collect();
    let subspaces: HashMap<(u8, usize, usize), Subspace> = specs
        .into_iter()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(kind, m, n)| {
            let spec = if kind == 0 {
                SubspaceSpec::weighted(m, n)
            } else {
                SubspaceSpec::difference(m, n)
            };
            ((kind, m, n), Subspace::new(spec))
        })
        .collect();
    let results = instances
        .par_iter()
        .zip(evaluated.par_iter())
        .map(|(instance, (vector, spec))| {
            let key = (
                matches!(spec.kind, SubspaceKind::SwapDifference) as u8,
                spec.m,
                spec.n,
            );
            let ok = subspaces[&key].contains(vector);
            let failures = if ok {
                Vec::new()
            } else {
                vec![Failure {
                    instance: format!(
                        "check={} T={} r={} m={}",
                        instance.check.name(),
                        instance.t,
                        instance.r,
                        instance.m
                    ),
                    lhs: "vector outside subspace".to_string(),
                    rhs: format!("membership in {:?} m={} n={}", spec.kind, spec.m, spec.n),
                }]
            };
            (1, failures)
        })
        .collect();
    VerificationReport::collect("structural", n, results)
}

/// The first-row and structural statements together, as one suite.
pub fn verify_lemmas(n: usize, mode: SampleMode) -> VerificationReport {
    VerificationReport::merged(
        "lemmas",
        n,
        vec![verify_first_row_growth(n), verify_structural(n, mode)],
    )
}

/// Probability axioms: per `(T, r)` the transition weights sum to one, and
/// per sequence the grown distribution has total mass one with every
/// coefficient nonnegative at sampled positive points.
pub fn verify_probability(n: usize) -> VerificationReport {
    assert!(n >= 1, "verification requires n >= 1");
    let samples: Vec<BigRational> = [(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)]
        .iter()
        .map(|&(num, den)| BigRational::new(BigInt::from(num), BigInt::from(den)))
        .collect();
    let tableau_results: Vec<(usize, Vec<Failure>)> = standard_tableaux_of_size(n)
        .par_iter()
        .map(|t| {
            let mut failures = Vec::new();
            for r in 0..=n {
                let seq = color_sequence(t, r);
                let mut total = QRat::zero();
                for k in 0..=seq.run_count() {
                    total = &total + &transition_prob(&seq, k);
                }
                if !total.is_one() {
                    failures.push(Failure {
                        instance: format!("T={t} r={r}"),
                        lhs: total.to_string(),
                        rhs: "1".to_string(),
                    });
                }
            }
            (n + 1, failures)
        })
        .collect();
    let sequence_results: Vec<(usize, Vec<Failure>)> = AreaSequence::enumerate(n)
        .par_iter()
        .map(|e| {
            let mut checked = 0;
            let mut failures = Vec::new();
            let dist = growth_distribution(e);
            checked += 1;
            if !dist.total_mass().is_one() {
                failures.push(Failure {
                    instance: format!("e={e} total mass"),
                    lhs: dist.total_mass().to_string(),
                    rhs: "1".to_string(),
                });
            }
            for (t, coeff) in dist.terms() {
                checked += 1;
                for x in &samples {
                    let value = coeff.eval(x).expect("weights have positive denominators");
                    if value < BigRational::zero() {
                        failures.push(Failure {
                            instance: format!("e={e} T={t} at q={x}"),
                            lhs: value.to_string(),
                            rhs: "nonnegative".to_string(),
                        });
                        break;
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    let mut results = tableau_results;
    results.extend(sequence_results);
    VerificationReport::collect("prob", n, results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::TripleKind;
    use crate::growth::tableau_probability;
    use crate::growth::ColorSequence;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn seq(values: &[usize]) -> AreaSequence {
        AreaSequence::new(values.to_vec()).unwrap()
    }

    #[test]
    fn membership_basics() {
        for n in 2..=4 {
            for m in 1..n {
                let zero = TableauDistribution::zero(n);
                assert!(member(&zero, &SubspaceSpec::difference(m, n)));
                assert!(member(&zero, &SubspaceSpec::weighted(m, n)));
            }
        }
        // A spanning vector is a member; a lone tableau of the pair is not.
        let t = tab("1 2/3");
        let g = difference_generator(&t, 2).unwrap();
        assert!(member(&g, &SubspaceSpec::difference(2, 3)));
        let lone = TableauDistribution::singleton(t);
        assert!(!member(&lone, &SubspaceSpec::difference(2, 3)));
    }

    #[test]
    fn weighted_generator_shapes() {
        // Adjacent tops (gap 1) degenerate to the tableau alone.
        let t = tab("1 2 3");
        let g = weighted_generator(&t, 1).unwrap();
        assert_eq!(g.term_count(), 1);
        assert!(g.coefficient(&t).is_one());
        // Ineligible when m is not a column top.
        assert!(weighted_generator(&tab("1 2/3"), 1).is_none());
        // Tops adjacent (gap 1) with the swap defined still degenerate.
        let g = weighted_generator(&tab("1 3/2"), 2).unwrap();
        assert_eq!(g.term_count(), 1);
        // Gap 2 carries the q[1]/[3] weight on the swap.
        let t = tab("1 2 4/3");
        let g = weighted_generator(&t, 3).unwrap();
        assert_eq!(g.term_count(), 2);
        assert_eq!(
            g.coefficient(&tab("1 2 3/4")),
            QRat::new(QPoly::q(), qint(3))
        );
    }

    #[test]
    fn deciders_agree_on_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC5F_0002);
        let n = 4;
        let all = standard_tableaux_of_size(n);
        for m in 1..n {
            let spec = SubspaceSpec::difference(m, n);
            let space = Subspace::new(spec);
            let generators = subspace_generators(&spec);
            for round in 0..30 {
                let dist = if round % 2 == 0 {
                    // A genuine member: random combination of generators.
                    let mut acc = TableauDistribution::zero(n);
                    for g in &generators {
                        let c = QRat::from(rng.gen_range(-2i64..=2));
                        acc = acc.plus(&g.scaled(&c));
                    }
                    acc
                } else {
                    let mut acc = TableauDistribution::zero(n);
                    for t in &all {
                        if rng.gen_range(0..3) == 0 {
                            acc.add_term(t.clone(), QRat::from(rng.gen_range(-2i64..=2)));
                        }
                    }
                    acc
                };
                assert_eq!(
                    space.contains(&dist),
                    difference_member_paircheck(&dist, m),
                    "deciders disagree at m={m}"
                );
                if round % 2 == 0 {
                    assert!(space.contains(&dist));
                }
            }
        }
    }

    #[test]
    fn main_suite_small_sizes() {
        let report = verify_main(1);
        assert!(report.passed());
        assert_eq!(report.checked, 1);
        let report = verify_main(3);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.checked, 15);
    }

    #[test]
    fn modular_suites_small_sizes() {
        for target in [ModularTarget::Expansion, ModularTarget::Probability] {
            let report = verify_modular(2, target);
            assert!(report.passed());
            assert_eq!(report.checked, 0, "no triples exist at n=2");
            let report = verify_modular(4, target);
            assert!(report.passed(), "{:?}", report.failures);
        }
    }

    #[test]
    fn modular_example_instance() {
        // The double-kind triple at n=3 forces probability 1 on the raised
        // sequence at shape 2,1.
        let triples = modular_triples(3);
        let triple = triples
            .iter()
            .find(|t| t.kind == TripleKind::Double)
            .unwrap();
        let shape = Partition::new(vec![2, 1]).unwrap();
        assert!(growth_distribution(&triple.raised)
            .shape_mass(&shape)
            .is_one());
        assert!(growth_distribution(&triple.lowered)
            .shape_mass(&shape)
            .is_zero());
    }

    #[test]
    fn normalization_suite_small_sizes() {
        for n in 1..=4 {
            let report = verify_normalization(n);
            assert!(report.passed(), "{:?}", report.failures);
        }
    }

    #[test]
    fn first_row_growth_small_sizes() {
        for n in 0..=4 {
            let report = verify_first_row_growth(n);
            assert!(report.passed(), "{:?}", report.failures);
        }
    }

    #[test]
    fn structural_suite_small_sizes() {
        for n in 1..=3 {
            let report = verify_structural(n, SampleMode::Exhaustive);
            assert!(report.passed(), "{:?}", report.failures);
        }
        let report = verify_structural(
            4,
            SampleMode::Sampled {
                count: 25,
                seed: 42,
            },
        );
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.checked, 25);
    }

    #[test]
    fn sampled_mode_handles_tiny_sizes() {
        for n in 1..=2 {
            let report = verify_structural(n, SampleMode::Sampled { count: 10, seed: 1 });
            assert!(report.passed(), "{:?}", report.failures);
            assert_eq!(report.checked, 10);
        }
    }

    #[test]
    fn probability_suite_small_sizes() {
        for n in 1..=4 {
            let report = verify_probability(n);
            assert!(report.passed(), "{:?}", report.failures);
        }
    }

    #[test]
    fn report_json_shape() {
        let report = verify_main(1);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"suite":"main","n":1,"checked":1,"failed":0,"failures":[]}"#
        );
    }

    /// Bumping the exponent of a transition weight must break the
    /// sum-to-one axiom somewhere at small size.
    #[test]
    fn fault_injection_weight_exponent() {
        let q = QRat::from(QPoly::q());
        let mut broken = 0;
        for n in 1..=4 {
            for t in standard_tableaux_of_size(n) {
                for r in 0..=n {
                    let seq = color_sequence(&t, r);
                    let mut total = QRat::zero();
                    for k in 0..=seq.run_count() {
                        let weight = transition_prob(&seq, k);
                        // Mutation: one extra factor of q on every landing
                        // site right of the first.
                        let mutated = if k >= 1 { &q * &weight } else { weight };
                        total = &total + &mutated;
                    }
                    if !total.is_one() {
                        broken += 1;
                    }
                }
            }
        }
        assert!(broken > 0, "mutated weights must fail the sum-to-one check");
    }

    /// Recoloring with `>= r` instead of `> r` must break the central
    /// identity somewhere at small size.
    #[test]
    fn fault_injection_color_rule() {
        fn mutated_color_sequence(t: &Tableau, r: usize) -> ColorSequence {
            let n = t.size();
            let bits = (1..=n + 1)
                .map(|c| t.top_of_column(c).is_some_and(|label| label >= r))
                .collect();
            ColorSequence::from_bits(bits).unwrap()
        }

        fn mutated_probability(e: &AreaSequence, t: &Tableau) -> QRat {
            let n = t.size();
            let mut acc = QRat::one();
            for i in 1..=n {
                let prev = t.truncated(i - 1);
                let seq = mutated_color_sequence(&prev, e.value(i));
                let (column, _) = t.position_of(i).unwrap();
                let Some(k) = seq.positions().iter().position(|&c| c == column) else {
                    return QRat::zero();
                };
                acc = &acc * &transition_prob(&seq, k);
            }
            acc
        }

        let mut broken = 0;
        for n in 1..=4 {
            let shapes = Partition::all(n);
            let tableaux = standard_tableaux_of_size(n);
            for e in AreaSequence::enumerate(n) {
                let table = elementary_expansion(&monomial_expansion(&e)).unwrap();
                for shape in &shapes {
                    let lhs = shape_probability_from_expansion(&e, shape, &table);
                    let mut rhs = QRat::zero();
                    for t in tableaux.iter().filter(|t| &t.shape() == shape) {
                        rhs = &rhs + &mutated_probability(&e, t);
                    }
                    if lhs != rhs {
                        broken += 1;
                    }
                }
            }
        }
        assert!(broken > 0, "mutated coloring must fail the main identity");
    }

    /// Swapping the placement of the factor q in either three-term
    /// relation must fail on some triple at small size.
    #[test]
    fn fault_injection_modular_placement() {
        let one_plus_q = QRat::from(qint(2));
        let q = QRat::from(QPoly::q());
        let mut broken_probability = 0;
        let mut broken_expansion = 0;
        for n in 3..=4 {
            let shapes = Partition::all(n);
            for triple in modular_triples(n) {
                let base_dist = growth_distribution(&triple.base);
                let raised_dist = growth_distribution(&triple.raised);
                let lowered_dist = growth_distribution(&triple.lowered);
                let base_table = elementary_expansion(&monomial_expansion(&triple.base)).unwrap();
                let raised_table =
                    elementary_expansion(&monomial_expansion(&triple.raised)).unwrap();
                let lowered_table =
                    elementary_expansion(&monomial_expansion(&triple.lowered)).unwrap();
                for shape in &shapes {
                    // Probability side with the q moved to the raised term.
                    let lhs = &one_plus_q * &base_dist.shape_mass(shape);
                    let rhs =
                        &(&q * &raised_dist.shape_mass(shape)) + &lowered_dist.shape_mass(shape);
                    if lhs != rhs {
                        broken_probability += 1;
                    }
                    // Expansion side with the q moved to the lowered term.
                    let lhs = &one_plus_q * &QRat::from(base_table.coefficient(shape));
                    let rhs = &QRat::from(raised_table.coefficient(shape))
                        + &(&q * &QRat::from(lowered_table.coefficient(shape)));
                    if lhs != rhs {
                        broken_expansion += 1;
                    }
                }
            }
        }
        assert!(
            broken_probability > 0,
            "misplaced q must break the p relation"
        );
        assert!(
            broken_expansion > 0,
            "misplaced q must break the c relation"
        );
    }

    #[test]
    fn chain_route_feeds_the_distribution_route() {
        // Spot-check that suite inputs agree with the chain product.
        let e = seq(&[0, 0, 1]);
        let dist = growth_distribution(&e);
        for (t, coeff) in dist.terms() {
            assert_eq!(tableau_probability(&e, t), coeff.clone());
        }
    }
}
