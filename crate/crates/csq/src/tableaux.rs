//! Partitions, compositions and standard Young tableaux.
//!
//! Diagrams use the French convention: rows are listed bottom to top, the
//! bottom-left cell is `(column 1, row 1)`, and labels strictly increase
//! along each row and up each column. The canonical text form of a tableau
//! is its row word, bottom row first, rows separated by `/` — the tableau
//! with bottom row `1 2 3 6` and top row `4 5` prints as `1 2 3 6/4 5`.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("parts must be positive and weakly decreasing")]
    BadPartition,
    #[error("parts must be positive")]
    BadComposition,
    #[error("labels must be exactly 1..=n, each used once")]
    BadLabels,
    #[error("row lengths must weakly decrease from bottom to top")]
    BadShape,
    #[error("labels must increase along rows and up columns")]
    NotStandard,
    #[error("cannot add a box on top of column {0}")]
    InvalidColumn(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A partition: weakly decreasing positive parts. The empty partition is
/// the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::BadPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The size `n` the partition sums to.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `sum_{i<j} parts[i] * parts[j]`.
    pub fn pair_product_sum(&self) -> usize {
        let total: usize = self.size();
        let squares: usize = self.parts.iter().map(|p| p * p).sum();
        (total * total - squares) / 2
    }

    /// All partitions of `n` in decreasing lexicographic order:
    /// `(n), (n-1,1), ..., (1,...,1)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| TableauError::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A composition: positive parts in any order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.contains(&0) {
            return Err(TableauError::BadComposition);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The partition with the same parts sorted decreasingly.
    pub fn sorted_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// All `2^(n-1)` compositions of `n`, in lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if remaining == 0 {
                out.push(Composition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in 1..=remaining {
                prefix.push(part);
                rec(remaining - part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// A standard Young tableau, stored column-major: `columns[c]` holds the
/// labels of column `c+1` from bottom to top.
///
/// Color sequences and box additions are column operations, so columns are
/// the primary representation; rows are derived.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau {
            columns: Vec::new(),
        }
    }

    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let t = Tableau { columns };
        t.check_invariants()?;
        Ok(t)
    }

    /// Build from rows listed bottom to top.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableauError> {
        let width = rows.first().map_or(0, |r| r.len());
        let mut columns: Vec<Vec<usize>> = vec![Vec::new(); width];
        for row in rows {
            if row.len() > width {
                return Err(TableauError::BadShape);
            }
            for (c, &label) in row.iter().enumerate() {
                columns[c].push(label);
            }
        }
        Tableau::from_columns(columns)
    }

    /// Validates all structural invariants; constructors call this, and
    /// enumeration tests call it directly.
    pub fn check_invariants(&self) -> Result<(), TableauError> {
        let n = self.size();
        // Column heights weakly decrease left to right.
        for w in self.columns.windows(2) {
            if w[0].len() < w[1].len() {
                return Err(TableauError::BadShape);
            }
        }
        if self.columns.last().is_some_and(|c| c.is_empty()) {
            return Err(TableauError::BadShape);
        }
        // Labels are exactly 1..=n.
        let mut seen = vec![false; n + 1];
        for col in &self.columns {
            for &label in col {
                if label == 0 || label > n || seen[label] {
                    return Err(TableauError::BadLabels);
                }
                seen[label] = true;
            }
        }
        // Strictly increasing up each column and along each row.
        for col in &self.columns {
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::NotStandard);
            }
        }
        for w in self.columns.windows(2) {
            if w[0].iter().zip(&w[1]).any(|(left, right)| left >= right) {
                return Err(TableauError::NotStandard);
            }
        }
        Ok(())
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Height of the 1-based column `c` (0 when the column is empty).
    pub fn column_height(&self, c: usize) -> usize {
        self.columns.get(c - 1).map_or(0, |col| col.len())
    }

    /// Top label of the 1-based column `c`, if the column is nonempty.
    pub fn top_of_column(&self, c: usize) -> Option<usize> {
        self.columns.get(c - 1).and_then(|col| col.last()).copied()
    }

    /// 1-based `(column, row)` of a label.
    pub fn position_of(&self, label: usize) -> Option<(usize, usize)> {
        for (c, col) in self.columns.iter().enumerate() {
            for (r, &l) in col.iter().enumerate() {
                if l == label {
                    return Some((c + 1, r + 1));
                }
            }
        }
        None
    }

    /// Rows listed bottom to top.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let height = self.columns.first().map_or(0, |c| c.len());
        (0..height)
            .map(|r| {
                self.columns
                    .iter()
                    .take_while(|col| col.len() > r)
                    .map(|col| col[r])
                    .collect()
            })
            .collect()
    }

    /// Row lengths, bottom row first.
    pub fn shape(&self) -> Partition {
        let height = self.columns.first().map_or(0, |c| c.len());
        let parts = (0..height)
            .map(|r| self.columns.iter().take_while(|col| col.len() > r).count())
            .collect();
        Partition::new(parts).expect("row lengths of a tableau weakly decrease")
    }

    /// Add a box labeled `n+1` on top of the 1-based column `c`. Fails when
    /// the result would not be a Young diagram.
    pub fn add_box(&self, c: usize) -> Result<Tableau, TableauError> {
        if c == 0 || c > self.columns.len() + 1 {
            return Err(TableauError::InvalidColumn(c));
        }
        let ok = c == 1 || self.column_height(c - 1) > self.column_height(c);
        if !ok {
            return Err(TableauError::InvalidColumn(c));
        }
        let label = self.size() + 1;
        let mut columns = self.columns.clone();
        if c == columns.len() + 1 {
            columns.push(vec![label]);
        } else {
            columns[c - 1].push(label);
        }
        Ok(Tableau { columns })
    }

    /// The sub-tableau on the labels `1..=i`. Labels above `i` form the top
    /// of each column, so this keeps a prefix of every column.
    pub fn truncated(&self, i: usize) -> Tableau {
        debug_assert!(i <= self.size());
        let columns: Vec<Vec<usize>> = self
            .columns
            .iter()
            .map(|col| col.iter().take_while(|&&l| l <= i).copied().collect())
            .take_while(|col: &Vec<usize>| !col.is_empty())
            .collect();
        Tableau { columns }
    }

    /// Exchange the labels `m` and `m+1`, or `None` when they share a row
    /// or a column (the swap would break monotonicity there).
    pub fn swap_labels(&self, m: usize) -> Option<Tableau> {
        let (c1, r1) = self.position_of(m)?;
        let (c2, r2) = self.position_of(m + 1)?;
        if c1 == c2 || r1 == r2 {
            return None;
        }
        let mut columns = self.columns.clone();
        columns[c1 - 1][r1 - 1] = m + 1;
        columns[c2 - 1][r2 - 1] = m;
        let swapped = Tableau { columns };
        debug_assert!(swapped.check_invariants().is_ok());
        Some(swapped)
    }
}

impl fmt::Display for Tableau {
    /// Row word, bottom row first, rows separated by `/`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, label) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{label}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|e| TableauError::Parse(e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(TableauError::Parse("empty row".into()));
        }
        Tableau::from_rows(&rows)
    }
}

impl Serialize for Tableau {
    /// Serializes as an array of rows, bottom row first.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Tableau::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// All standard Young tableaux of the given shape, ordered lexicographically
/// by their row-word serialization.
///
/// Generated by recursively removing the maximal label from a corner cell.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(
        remaining: &mut Vec<usize>,
        label: usize,
        grid: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if label == 0 {
            out.push(Tableau::from_rows(grid).expect("generated tableau is standard"));
            return;
        }
        for j in 0..remaining.len() {
            let len = remaining[j];
            let is_corner = len > 0 && remaining.get(j + 1).copied().unwrap_or(0) < len;
            if is_corner {
                grid[j][len - 1] = label;
                remaining[j] -= 1;
                rec(remaining, label - 1, grid, out);
                remaining[j] += 1;
            }
        }
    }

    let n = shape.size();
    if n == 0 {
        return vec![Tableau::empty()];
    }
    let mut remaining = shape.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    rec(&mut remaining, n, &mut grid, &mut out);
    out.sort_by_key(|t| t.to_string());
    out
}

/// All standard Young tableaux of size `n`, over every shape; shapes in
/// decreasing lexicographic order, tableaux ordered as in
/// [`standard_tableaux`]. For `n = 0` this is just the empty tableau.
pub fn standard_tableaux_of_size(n: usize) -> Vec<Tableau> {
    Partition::all(n)
        .iter()
        .flat_map(standard_tableaux)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The Figure-style running example: bottom row 1 2 3 6, top row 4 5.
    fn example_tableau() -> Tableau {
        Tableau::from_rows(&[vec![1, 2, 3, 6], vec![4, 5]]).unwrap()
    }

    /// Hook length formula, used as an independent count oracle.
    fn hook_length_count(shape: &Partition) -> u64 {
        let parts = shape.parts();
        let n = shape.size() as u64;
        let mut numerator = 1u64;
        for k in 1..=n {
            numerator *= k;
        }
        let col_height = |c: usize| parts.iter().filter(|&&len| len > c).count();
        let mut hooks = 1u64;
        for (r, &len) in parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = col_height(c) - r - 1;
                hooks *= (arm + leg + 1) as u64;
            }
        }
        numerator / hooks
    }

    /// Involution counts via I(n) = I(n-1) + (n-1) I(n-2).
    fn involutions(n: usize) -> u64 {
        let (mut prev, mut cur) = (1u64, 1u64);
        for k in 2..=n {
            let next = cur + (k as u64 - 1) * prev;
            prev = cur;
            cur = next;
        }
        if n == 0 {
            1
        } else {
            cur
        }
    }

    #[test]
    fn shape_examples() {
        assert_eq!(
            example_tableau().shape(),
            Partition::new(vec![4, 2]).unwrap()
        );
        let single = Tableau::from_rows(&[vec![1]]).unwrap();
        assert_eq!(single.shape(), Partition::new(vec![1]).unwrap());
        assert_eq!(Tableau::empty().shape(), Partition::empty());
    }

    #[test]
    fn enumeration_counts_match_hook_lengths() {
        assert_eq!(
            standard_tableaux(&Partition::new(vec![1]).unwrap()).len(),
            1
        );
        assert_eq!(
            standard_tableaux(&Partition::new(vec![2, 1]).unwrap()).len(),
            2
        );
        assert_eq!(
            standard_tableaux(&Partition::new(vec![4, 2]).unwrap()).len(),
            9
        );
        for n in 0..=8 {
            for shape in Partition::all(n) {
                let tableaux = standard_tableaux(&shape);
                assert_eq!(
                    tableaux.len() as u64,
                    hook_length_count(&shape),
                    "count mismatch for {shape}"
                );
                for t in &tableaux {
                    t.check_invariants().unwrap();
                    assert_eq!(t.shape(), shape);
                }
            }
        }
    }

    #[test]
    fn enumeration_by_size_counts_involutions() {
        assert_eq!(standard_tableaux_of_size(0), vec![Tableau::empty()]);
        assert_eq!(standard_tableaux_of_size(3).len(), 4);
        assert_eq!(standard_tableaux_of_size(4).len(), 10);
        for n in 0..=8 {
            assert_eq!(
                standard_tableaux_of_size(n).len() as u64,
                involutions(n),
                "size {n}"
            );
        }
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let words: Vec<String> = standard_tableaux(&shape)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(words, vec!["1 2/3", "1 3/2"]);
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn add_box_examples() {
        let single = Tableau::empty().add_box(1).unwrap();
        assert_eq!(single.to_string(), "1");

        let grown = example_tableau().add_box(1).unwrap();
        assert_eq!(grown.to_string(), "1 2 3 6/4 5/7");

        assert_eq!(
            example_tableau().add_box(2),
            Err(TableauError::InvalidColumn(2))
        );
        assert_eq!(
            example_tableau().add_box(7),
            Err(TableauError::InvalidColumn(7))
        );
    }

    #[test]
    fn truncate_examples() {
        let t = example_tableau();
        assert_eq!(t.truncated(6), t);
        assert_eq!(t.truncated(0), Tableau::empty());
        let t4 = t.truncated(4);
        assert_eq!(t4.to_string(), "1 2 3/4");
        t4.check_invariants().unwrap();
        assert_eq!(t4.shape(), Partition::new(vec![3, 1]).unwrap());
    }

    #[test]
    fn swap_labels_examples() {
        let row: Tableau = "1 2 3".parse().unwrap();
        assert_eq!(row.swap_labels(1), None);

        let t: Tableau = "1 2/3".parse().unwrap();
        let swapped = t.swap_labels(2).unwrap();
        assert_eq!(swapped.to_string(), "1 3/2");
        swapped.check_invariants().unwrap();
        assert_eq!(swapped.swap_labels(2).unwrap(), t);
    }

    #[test]
    fn serialization_golden() {
        assert_eq!(example_tableau().to_string(), "1 2 3 6/4 5");
        assert_eq!("1 2 3 6/4 5".parse::<Tableau>().unwrap(), example_tableau());
        assert_eq!("".parse::<Tableau>().unwrap(), Tableau::empty());
        assert!("1 1".parse::<Tableau>().is_err());
        assert!("2 1".parse::<Tableau>().is_err());
        assert!("1 2/3 4/5 6 7".parse::<Tableau>().is_err());
    }

    #[test]
    fn json_rows_roundtrip() {
        let t = example_tableau();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[[1,2,3,6],[4,5]]");
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Tableau>("[[2,1]]").is_err());
    }

    #[test]
    fn partition_parsing() {
        assert_eq!("2,1".parse::<Partition>().unwrap().parts(), &[2, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn partition_order_and_statistics() {
        let all = Partition::all(3);
        let rendered: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["3", "2,1", "1,1,1"]);
        assert_eq!(Partition::new(vec![2, 1]).unwrap().pair_product_sum(), 2);
        assert_eq!(Partition::new(vec![3]).unwrap().pair_product_sum(), 0);
        assert_eq!(Partition::new(vec![2, 2, 1]).unwrap().pair_product_sum(), 8);
    }

    #[test]
    fn compositions_of_small_n() {
        assert_eq!(Composition::all(3).len(), 4);
        assert_eq!(Composition::all(6).len(), 32);
        let c = Composition::new(vec![1, 2]).unwrap();
        assert_eq!(c.sorted_partition().parts(), &[2, 1]);
    }

    fn arb_size_tableau() -> impl Strategy<Value = Tableau> {
        (1usize..=6).prop_flat_map(|n| {
            let all = standard_tableaux_of_size(n);
            let count = all.len();
            (Just(all), 0..count).prop_map(|(all, i)| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn add_box_then_truncate_is_identity(t in arb_size_tableau(), c in 1usize..=7) {
            let n = t.size();
            if let Ok(grown) = t.add_box(c) {
                prop_assert_eq!(grown.truncated(n), t);
            }
        }

        #[test]
        fn swap_is_a_shape_preserving_involution(t in arb_size_tableau(), m in 1usize..=5) {
            prop_assume!(m < t.size());
            if let Some(s) = t.swap_labels(m) {
                prop_assert_eq!(s.shape(), t.shape());
                prop_assert_eq!(s.swap_labels(m), Some(t));
            }
        }

        #[test]
        fn row_word_roundtrip(t in arb_size_tableau()) {
            let back: Tableau = t.to_string().parse().unwrap();
            prop_assert_eq!(back, t);
        }
    }
}
