//! Young tableau counts and the identities built on them.
//!
//! Closed forms come from jump sequences `l_{d-i} = xi_i + d - i`:
//!
//! * semistandard tableaux with entries `<= d`: `det(C(l_i, j)) = D_l / (0! 1! ... (d-1)!)`
//! * standard tableaux: `m! D_l / (l_0! ... l_{d-1}!)`
//!
//! Explicit enumeration is kept alongside as an oracle, bounded by an
//! [`EnumerationBudget`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial_determinant, factorial, is_prime, superfactorial, vandermonde};
use crate::partitions::{enumerate_partitions, jump_sequence, BoxShape, Partition};

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "SBMOTIVE_ENUM_BUDGET";

/// Largest tableau weight that explicit enumeration will attempt.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_weight: u32,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_weight: 10 }
    }
}

impl EnumerationBudget {
    /// Default budget, overridden by [`BUDGET_ENV`] when it parses.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_weight| EnumerationBudget { max_weight })
            .unwrap_or_default()
    }

    fn check(&self, shape: &Partition) -> Result<()> {
        if shape.weight() > self.max_weight {
            return Err(Error::Resource(format!(
                "shape {shape} has weight {} above the enumeration budget {}",
                shape.weight(),
                self.max_weight
            )));
        }
        Ok(())
    }
}

/// A filled Young diagram, rows top to bottom.
pub type Tableau = Vec<Vec<u32>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    ClosedForm,
    Enumeration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauCountReport {
    pub shape: Partition,
    pub alphabet_size: u32,
    pub ssyt_count: BigInt,
    pub syt_count: BigInt,
    pub method: CountMethod,
}

impl TableauCountReport {
    pub fn closed_form(shape: &Partition, d: u32) -> Result<Self> {
        Ok(TableauCountReport {
            shape: shape.clone(),
            alphabet_size: d,
            ssyt_count: count_ssyt(shape, d)?,
            syt_count: count_syt(shape),
            method: CountMethod::ClosedForm,
        })
    }

    pub fn enumerated(shape: &Partition, d: u32, budget: EnumerationBudget) -> Result<Self> {
        Ok(TableauCountReport {
            shape: shape.clone(),
            alphabet_size: d,
            ssyt_count: enumerate_ssyt(shape, d, budget)?.len().into(),
            syt_count: enumerate_syt(shape, budget)?.len().into(),
            method: CountMethod::Enumeration,
        })
    }
}

/// Number of semistandard tableaux of shape `xi` with entries in `1..=d`.
///
/// Computed as the binomial determinant `|C(l_i, j)|` and checked against
/// `D_l / (0! 1! ... (d-1)!)`.
pub fn count_ssyt(xi: &Partition, d: u32) -> Result<BigInt> {
    if xi.len() > d as usize {
        return Err(Error::contract(format!(
            "shape {xi} has more than {d} rows"
        )));
    }
    let d = d as usize;
    let l = jump_sequence(xi, d);
    let cols: Vec<i64> = (0..d as i64).collect();
    let det = binomial_determinant(&l, &cols)?;
    let (q, r) = vandermonde(&l).div_rem(&superfactorial(d));
    if !r.is_zero() || q != det {
        return Err(Error::invariant(format!(
            "SSYT count of {xi} over {d} letters: determinant {det} disagrees with Vandermonde form"
        )));
    }
    Ok(det)
}

/// Number of standard tableaux of shape `xi`, via `m! D_l / prod l_i!`.
pub fn count_syt(xi: &Partition) -> BigInt {
    let d = xi.len();
    let l = jump_sequence(xi, d);
    let num = factorial(u64::from(xi.weight())) * vandermonde(&l);
    let den: BigInt = l.iter().map(|&x| factorial(x as u64)).product();
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "hook-length quotient for {xi} is not integral");
    q
}

/// All semistandard tableaux of shape `xi` with entries in `1..=d`, in
/// lexicographic order of the row-by-row reading word.
pub fn enumerate_ssyt(xi: &Partition, d: u32, budget: EnumerationBudget) -> Result<Vec<Tableau>> {
    budget.check(xi)?;
    let mut out = Vec::new();
    let mut t: Tableau = xi.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let cells = cells(xi);
    fill_ssyt(&cells, 0, d, &mut t, &mut out);
    Ok(out)
}

/// All standard tableaux of shape `xi`, in lexicographic order of the
/// row-by-row reading word.
pub fn enumerate_syt(xi: &Partition, budget: EnumerationBudget) -> Result<Vec<Tableau>> {
    budget.check(xi)?;
    let mut out = Vec::new();
    let mut t: Tableau = xi.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let cells = cells(xi);
    let mut used = vec![false; cells.len() + 1];
    fill_syt(&cells, 0, &mut used, &mut t, &mut out);
    Ok(out)
}

fn cells(xi: &Partition) -> Vec<(usize, usize)> {
    xi.parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect()
}

fn fill_ssyt(cells: &[(usize, usize)], k: usize, d: u32, t: &mut Tableau, out: &mut Vec<Tableau>) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(t.clone());
        return;
    };
    let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=d {
        t[r][c] = v;
        fill_ssyt(cells, k + 1, d, t, out);
    }
    t[r][c] = 0;
}

fn fill_syt(cells: &[(usize, usize)], k: usize, used: &mut [bool], t: &mut Tableau, out: &mut Vec<Tableau>) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(t.clone());
        return;
    };
    let lo_row = if c > 0 { t[r][c - 1] + 1 } else { 1 };
    let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=cells.len() as u32 {
        if used[v as usize] {
            continue;
        }
        used[v as usize] = true;
        t[r][c] = v;
        fill_syt(cells, k + 1, used, t, out);
        used[v as usize] = false;
    }
    t[r][c] = 0;
}

/// Shapes of weight `m` with at most `d` rows.
pub fn shapes(d: u32, m: u32) -> Vec<Partition> {
    if m == 0 {
        return vec![Partition::empty()];
    }
    // width m never binds
    enumerate_partitions(m, BoxShape { rows: d, width: m })
}

/// `sum_{|xi| = m, <= d rows} d_xi(d) f^xi`; holds iff it equals `d^m`.
pub fn rs_identity(d: u32, m: u32) -> Result<(BigInt, bool)> {
    if d == 0 {
        return Err(Error::contract("alphabet size must be positive"));
    }
    let mut lhs = BigInt::zero();
    for xi in shapes(d, m) {
        lhs += count_ssyt(&xi, d)? * count_syt(&xi);
    }
    let holds = lhs == BigInt::from(d).pow(m);
    Ok((lhs, holds))
}

/// Same sum as [`rs_identity`] but with both counts taken by enumeration.
pub fn rs_identity_enumerated(d: u32, m: u32, budget: EnumerationBudget) -> Result<(BigInt, bool)> {
    let mut lhs = BigInt::zero();
    for xi in shapes(d, m) {
        let ssyt = enumerate_ssyt(&xi, d, budget)?.len();
        let syt = enumerate_syt(&xi, budget)?.len();
        lhs += BigInt::from(ssyt) * BigInt::from(syt);
    }
    let holds = lhs == BigInt::from(d).pow(m);
    Ok((lhs, holds))
}

/// Checks the overflow terms of the RS sum modulo a prime `n`.
///
/// For every shape of weight `m` with at most `d` rows whose largest jump
/// `l_{d-1}` reaches `n`: only `l_{d-1}` exceeds `n - 1`, `l_{d-1} < 2n`, and
/// `n` divides `d_xi(d) f^xi`.
pub fn overflow_terms_divisible(n: u32, d: u32, m: u32) -> Result<bool> {
    if !is_prime(u64::from(n)) {
        return Err(Error::contract(format!("{n} is not prime")));
    }
    if d < 2 || d > n / 2 || m > n - 1 {
        return Err(Error::contract(format!(
            "need 2 <= d <= n/2 and m <= n-1, got n={n} d={d} m={m}"
        )));
    }
    let n64 = i64::from(n);
    let du = d as usize;
    for xi in shapes(d, m) {
        let l = jump_sequence(&xi, du);
        let top = l[du - 1];
        if top < n64 {
            continue;
        }
        if l[du - 2] > n64 - 1 || top >= 2 * n64 {
            return Ok(false);
        }
        let x = count_ssyt(&xi, d)? * count_syt(&xi);
        if !(x % BigInt::from(n)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hook-product form of `f^xi`, used as an independent oracle.
pub fn hook_length_count(xi: &Partition) -> BigInt {
    let conj = xi.conjugate();
    let mut hooks = BigInt::one();
    for (r, &len) in xi.parts().iter().enumerate() {
        for c in 0..len as usize {
            let arm = len as usize - c - 1;
            let leg = conj.part(c + 1) as usize - r - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(u64::from(xi.weight())) / hooks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_in_box;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn ssyt_examples() {
        for d in 1..6 {
            assert_eq!(count_ssyt(&p(&[1]), d).unwrap(), big(d.into()));
        }
        assert_eq!(count_ssyt(&p(&[2]), 2).unwrap(), big(3));
        assert_eq!(count_ssyt(&p(&[1, 1]), 2).unwrap(), big(1));
        assert_eq!(count_ssyt(&Partition::empty(), 3).unwrap(), big(1));
        assert!(matches!(count_ssyt(&p(&[1, 1, 1]), 2), Err(Error::Contract(_))));
    }

    #[test]
    fn syt_examples() {
        for m in 0..8 {
            assert_eq!(count_syt(&Partition::rectangle(1, m)), big(1));
        }
        assert_eq!(count_syt(&p(&[2, 1])), big(2));
        assert_eq!(count_syt(&p(&[2, 2])), big(2));
        assert_eq!(count_syt(&p(&[3, 2, 1])), big(16));
    }

    #[test]
    fn enumeration_examples() {
        let b = EnumerationBudget::default();
        assert_eq!(
            enumerate_ssyt(&p(&[2]), 2, b).unwrap(),
            vec![vec![vec![1, 1]], vec![vec![1, 2]], vec![vec![2, 2]]]
        );
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2, b).unwrap().is_empty());
        assert_eq!(enumerate_ssyt(&Partition::empty(), 2, b).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&Partition::empty(), b).unwrap().len(), 1);
        assert_eq!(
            enumerate_syt(&p(&[2, 1]), b).unwrap(),
            vec![vec![vec![1, 2], vec![3]], vec![vec![1, 3], vec![2]]]
        );
        let tight = EnumerationBudget { max_weight: 3 };
        assert!(matches!(enumerate_syt(&p(&[2, 2]), tight), Err(Error::Resource(_))));
    }

    #[test]
    fn closed_forms_match_enumeration_in_3x5_box() {
        let budget = EnumerationBudget { max_weight: 15 };
        for xi in all_in_box(BoxShape::new(3, 5).unwrap()) {
            for d in (xi.len() as u32).max(1)..=4 {
                let enumerated = enumerate_ssyt(&xi, d, budget).unwrap().len();
                assert_eq!(count_ssyt(&xi, d).unwrap(), enumerated.into(), "{xi} d={d}");
            }
        }
    }

    #[test]
    fn syt_forms_agree_up_to_weight_8() {
        let budget = EnumerationBudget::default();
        for m in 0..=8 {
            for xi in shapes(m.max(1), m) {
                let e = enumerate_syt(&xi, budget).unwrap().len();
                assert_eq!(count_syt(&xi), e.into());
                assert_eq!(hook_length_count(&xi), e.into());
            }
        }
    }

    #[test]
    fn rs_identity_examples() {
        assert_eq!(rs_identity(2, 2).unwrap(), (big(4), true));
        for m in 0..10 {
            assert_eq!(rs_identity(1, m).unwrap(), (big(1), true));
        }
        assert_eq!(rs_identity(3, 3).unwrap(), (big(27), true));
        assert_eq!(
            rs_identity_enumerated(3, 3, EnumerationBudget::default()).unwrap(),
            (big(27), true)
        );
    }

    #[test]
    fn overflow_examples() {
        assert!(overflow_terms_divisible(5, 2, 4).unwrap());
        // shape (4) over 2 letters: jumps (0, 5), product 5 * 1
        let xi = p(&[4]);
        assert_eq!(jump_sequence(&xi, 2), vec![0, 5]);
        assert_eq!(count_ssyt(&xi, 2).unwrap() * count_syt(&xi), big(5));
        for m in 0..=6 {
            assert!(overflow_terms_divisible(7, 3, m).unwrap());
        }
        assert!(overflow_terms_divisible(7, 2, 1).unwrap());
        assert!(overflow_terms_divisible(9, 2, 1).is_err());
        assert!(overflow_terms_divisible(7, 4, 1).is_err());
        assert!(overflow_terms_divisible(7, 2, 7).is_err());
    }

    #[test]
    fn budget_from_env_defaults() {
        // absent or unparsable values fall back to the default
        assert_eq!(EnumerationBudget::default().max_weight, 10);
    }
}
