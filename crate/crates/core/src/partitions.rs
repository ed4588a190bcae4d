//! Partitions and the combinatorics of the `d x (n-d)` box.
//!
//! Indexing convention used throughout the crate: partition parts are
//! 1-based (`lambda_1 >= lambda_2 >= ...`, exposed as `part(1)`, `part(2)`,
//! ...), jump sequences are 0-based (`a_0 < a_1 < ... < a_{d-1}` with
//! `a_i = lambda_{d-i} + i`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction so equal partitions compare
/// equal regardless of how many zeros the caller padded with.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::contract(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `rows x width` rectangle.
    pub fn rectangle(rows: u32, width: u32) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition(vec![width; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 1-based part access, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "partition parts are 1-based");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts zero-padded (or truncated) to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        (1..=len).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// `true` iff `other` fits inside `self` (`other_i <= self_i` for all `i`).
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    pub fn fits(&self, shape: BoxShape) -> bool {
        self.len() <= shape.rows as usize && self.0.first().is_none_or(|&p| p <= shape.width)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The `rows x width` box; for `Gr_d(n)` this is `d x (n-d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxShape {
    pub rows: u32,
    pub width: u32,
}

impl BoxShape {
    pub fn new(rows: u32, width: u32) -> Result<Self> {
        if rows == 0 || width == 0 {
            return Err(Error::contract(format!("degenerate {rows}x{width} box")));
        }
        Ok(BoxShape { rows, width })
    }

    /// The box of `Gr_d(n)`.
    pub fn grassmannian(d: u32, n: u32) -> Result<Self> {
        if d == 0 || d >= n {
            return Err(Error::contract(format!("Gr_{d}({n}) needs 1 <= d <= n-1")));
        }
        Self::new(d, n - d)
    }

    pub fn area(&self) -> u32 {
        self.rows * self.width
    }

    pub fn transpose(&self) -> BoxShape {
        BoxShape {
            rows: self.width,
            width: self.rows,
        }
    }

    pub fn full(&self) -> Partition {
        Partition::rectangle(self.rows, self.width)
    }

    fn check(&self, p: &Partition) -> Result<()> {
        if p.fits(*self) {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "{p} does not fit in the {}x{} box",
                self.rows, self.width
            )))
        }
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner)
}

/// Box complement `(w - mu_d, ..., w - mu_1)`.
pub fn dual_in_box(mu: &Partition, shape: BoxShape) -> Result<Partition> {
    shape.check(mu)?;
    let d = shape.rows as usize;
    let parts = (1..=d).map(|i| shape.width - mu.part(d + 1 - i)).collect();
    Partition::new(parts)
}

/// Jump sequence `a_i = lambda_{d-i} + i`, `i = 0..d-1`.
pub fn jumps(lambda: &Partition, shape: BoxShape) -> Result<Vec<i64>> {
    shape.check(lambda)?;
    Ok(jump_sequence(lambda, shape.rows as usize))
}

/// Jump sequence with `d` entries and no width bound (used for tableau
/// shapes, which live in an unbounded strip).
pub(crate) fn jump_sequence(lambda: &Partition, d: usize) -> Vec<i64> {
    (0..d)
        .map(|i| i64::from(lambda.part(d - i)) + i as i64)
        .collect()
}

/// Inverse of [`jumps`].
pub fn from_jumps(a: &[i64], shape: BoxShape) -> Result<Partition> {
    let d = shape.rows as usize;
    if a.len() != d {
        return Err(Error::Dimension(format!(
            "{} jumps for a box with {d} rows",
            a.len()
        )));
    }
    if a.first().is_some_and(|&x| x < 0) || a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::contract(format!("{a:?} is not a jump sequence")));
    }
    if a[d - 1] > (d as i64 - 1) + i64::from(shape.width) {
        return Err(Error::contract(format!("{a:?} leaves the box")));
    }
    let parts = (1..=d).map(|i| (a[d - i] - (d - i) as i64) as u32).collect();
    Partition::new(parts)
}

/// All partitions of `weight` fitting in `shape`, largest first part first.
pub fn enumerate_partitions(weight: u32, shape: BoxShape) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(weight, shape.width, shape.rows, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, rows_left: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if rows_left == 0 || u64::from(max_part) * u64::from(rows_left) < u64::from(remaining) {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, rows_left - 1, current, out);
        current.pop();
    }
}

/// All partitions in `shape`, ordered by weight then as in [`enumerate_partitions`].
pub fn all_in_box(shape: BoxShape) -> Vec<Partition> {
    (0..=shape.area())
        .flat_map(|w| enumerate_partitions(w, shape))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_drops_zeros() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).weight(), 4);
        assert!(Partition::new(vec![1, 3]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dual_examples() {
        let b = BoxShape::new(2, 3).unwrap();
        assert_eq!(dual_in_box(&Partition::empty(), b).unwrap(), p(&[3, 3]));
        assert_eq!(dual_in_box(&p(&[2, 1]), b).unwrap(), p(&[2, 1]));
        assert!(dual_in_box(&p(&[4]), b).is_err());
        assert!(dual_in_box(&p(&[1, 1, 1]), b).is_err());
        let b34 = BoxShape::new(3, 4).unwrap();
        for mu in all_in_box(b34) {
            let dual = dual_in_box(&mu, b34).unwrap();
            assert_eq!(dual.weight(), b34.area() - mu.weight());
            assert_eq!(dual_in_box(&dual, b34).unwrap(), mu);
        }
    }

    #[test]
    fn dual_commutes_with_conjugate() {
        let b = BoxShape::new(3, 4).unwrap();
        for mu in all_in_box(b) {
            assert_eq!(
                dual_in_box(&mu, b).unwrap().conjugate(),
                dual_in_box(&mu.conjugate(), b.transpose()).unwrap()
            );
        }
    }

    #[test]
    fn jumps_examples() {
        let b = BoxShape::new(2, 3).unwrap();
        assert_eq!(jumps(&Partition::empty(), b).unwrap(), vec![0, 1]);
        assert_eq!(jumps(&p(&[2, 1]), b).unwrap(), vec![1, 3]);
        assert!(jumps(&p(&[4]), b).is_err());
    }

    #[test]
    fn jumps_of_dual_match_codimension_indexing() {
        // a_i = n - d + i - mu_{i+1} for the dual partition.
        let (d, n) = (2u32, 5u32);
        let b = BoxShape::grassmannian(d, n).unwrap();
        for mu in all_in_box(b) {
            let a = jumps(&dual_in_box(&mu, b).unwrap(), b).unwrap();
            let expected: Vec<i64> = (0..d as usize)
                .map(|i| i64::from(n - d) + i as i64 - i64::from(mu.part(i + 1)))
                .collect();
            assert_eq!(a, expected);
        }
    }

    #[test]
    fn jumps_bijection() {
        let b = BoxShape::new(3, 4).unwrap();
        let all = all_in_box(b);
        let mut seen = std::collections::BTreeSet::new();
        for lambda in &all {
            let a = jumps(lambda, b).unwrap();
            assert!(a.windows(2).all(|w| w[0] < w[1]));
            assert!(a[2] <= 2 + 4);
            let dim: i64 = a.iter().enumerate().map(|(i, x)| x - i as i64).sum();
            assert_eq!(dim, i64::from(lambda.weight()));
            assert_eq!(&from_jumps(&a, b).unwrap(), lambda);
            seen.insert(a);
        }
        // C(7, 3) increasing triples in 0..=6
        assert_eq!(seen.len(), 35);
    }

    #[test]
    fn enumeration_examples() {
        let b = BoxShape::new(2, 2).unwrap();
        assert_eq!(enumerate_partitions(2, b), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(0, b), vec![Partition::empty()]);
        assert!(enumerate_partitions(5, b).is_empty());
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[3, 2]).contains(&p(&[2, 2, 1])));
        assert!(p(&[3, 2]).contains(&Partition::empty()));
        assert!(Partition::new(vec![1, 3]).is_err());
    }

    #[test]
    fn serialization_is_decreasing_array() {
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    fn partition_strategy() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u32..12, 0..8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn conjugate_is_weight_preserving_involution(lambda in partition_strategy()) {
            let c = lambda.conjugate();
            prop_assert_eq!(c.weight(), lambda.weight());
            prop_assert_eq!(c.conjugate(), lambda);
        }
    }
}
