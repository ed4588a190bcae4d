//! Poincare polynomials of Grassmannians and exact polynomial division.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `1 - t^k`.
    pub fn one_minus_power(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] -= 1;
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    /// `t^k * self`.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    /// Long division over `Z`: `Some((q, r))` with `self = q * divisor + r`,
    /// `deg r < deg divisor`, or `None` if some step needs a non-integral quotient.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }
}

impl TryFrom<Vec<String>> for IntPolynomial {
    type Error = Error;

    fn try_from(c: Vec<String>) -> Result<Self> {
        c.iter()
            .map(|s| crate::serial::parse_decimal(s))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl From<IntPolynomial> for Vec<String> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `P(Gr_d(n), t) = prod_{i=1}^{d} (1 - t^{n-d+i}) / (1 - t^i)`.
///
/// Multiplies and divides alternately so each intermediate is itself a
/// Gaussian binomial and every division is exact.
pub fn gaussian_binomial(n: u32, d: u32) -> Result<IntPolynomial> {
    if d > n {
        return Err(Error::contract(format!("Gaussian binomial ({n} choose {d})")));
    }
    let mut acc = IntPolynomial::one();
    for i in 1..=d as usize {
        let num = acc.mul(&IntPolynomial::one_minus_power((n - d) as usize + i));
        let (q, r) = num
            .div_rem(&IntPolynomial::one_minus_power(i))
            .ok_or_else(|| Error::invariant("Gaussian binomial division left Z[t]"))?;
        if !r.is_zero() {
            return Err(Error::invariant(format!(
                "Gaussian binomial ({n} choose {d}): division by 1 - t^{i} not exact"
            )));
        }
        acc = q;
    }
    Ok(acc)
}

/// Exact quotient `q / p` if `p` divides `q` in `Z[t]`.
pub fn divides(p: &IntPolynomial, q: &IntPolynomial) -> Result<Option<IntPolynomial>> {
    if p.is_zero() {
        return Err(Error::contract("division by the zero polynomial"));
    }
    Ok(match q.div_rem(p) {
        Some((quot, rem)) if rem.is_zero() => Some(quot),
        _ => None,
    })
}

/// Coefficients `a_i` of `P(Gr_d(n), t) / P(P^{n-1}, t)`.
pub fn modn_multiplicities(n: u32, d: u32) -> Result<Vec<BigInt>> {
    if n.gcd(&d) != 1 {
        return Err(Error::Divisibility(format!(
            "P(P^{}) does not divide P(Gr_{d}({n})) since gcd({d}, {n}) > 1",
            n.saturating_sub(1)
        )));
    }
    let grass = gaussian_binomial(n, d)?;
    let proj = gaussian_binomial(n, 1)?;
    divides(&proj, &grass)?
        .map(|q| q.coeffs)
        .ok_or_else(|| Error::invariant(format!("coprime ({n}, {d}) but quotient not integral")))
}
