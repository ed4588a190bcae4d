//! Chow rings of `P^{n-1}`, `Gr_d(n)` and their products in the Schubert basis.
//!
//! Conventions:
//!
//! * `H^i` is the `i`-th power of the hyperplane class on `P^{n-1}`.
//! * `omega_mu` is the Schubert class of codimension `|mu|` on `Gr_d(n)`,
//!   `mu` in the `d x (n-d)` box, identified with `Delta_mu(c(kappa_d))`
//!   (Giambelli); in particular `c_i(kappa_d) = omega_(i)`.
//! * `c_1(tau_1) = -H`, so `c_1(tau_1^r) = -r H` and `c_1(Lambda^d tau_d) = -omega_1`.
//!
//! Only the products needed for correspondence composition are implemented
//! (see [`multiply`]); anything else is reported as unsupported.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::binomial_determinant;
use crate::partitions::{dual_in_box, enumerate_partitions, BoxShape, Partition};

/// One irreducible factor: `P^{n-1}` or `Gr_d(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Factor {
    /// `P^{n-1}`, the projective space of lines in an `n`-dimensional space.
    Projective { n: u32 },
    Grassmannian { d: u32, n: u32 },
}

impl Factor {
    pub fn projective(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::contract(format!("P^(n-1) needs n >= 2, got {n}")));
        }
        Ok(Factor::Projective { n })
    }

    pub fn grassmannian(d: u32, n: u32) -> Result<Self> {
        BoxShape::grassmannian(d, n)?;
        Ok(Factor::Grassmannian { d, n })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Factor::Projective { n } => Factor::projective(n).map(drop),
            Factor::Grassmannian { d, n } => Factor::grassmannian(d, n).map(drop),
        }
    }

    pub fn dimension(&self) -> u32 {
        match *self {
            Factor::Projective { n } => n - 1,
            Factor::Grassmannian { d, n } => d * (n - d),
        }
    }

    /// The Schubert box of a Grassmannian factor.
    pub fn box_shape(&self) -> Option<BoxShape> {
        match *self {
            Factor::Projective { .. } => None,
            Factor::Grassmannian { d, n } => Some(BoxShape {
                rows: d,
                width: n - d,
            }),
        }
    }

    /// The point class.
    pub fn top(&self) -> Basis {
        match *self {
            Factor::Projective { n } => Basis::H(n - 1),
            Factor::Grassmannian { d, n } => Basis::Omega(Partition::rectangle(d, n - d)),
        }
    }

    pub fn unit(&self) -> Basis {
        match self {
            Factor::Projective { .. } => Basis::H(0),
            Factor::Grassmannian { .. } => Basis::Omega(Partition::empty()),
        }
    }

    pub fn admits(&self, b: &Basis) -> bool {
        match (self, b) {
            (Factor::Projective { n }, Basis::H(i)) => *i < *n,
            (Factor::Grassmannian { .. }, Basis::Omega(mu)) => mu.fits(self.box_shape().unwrap()),
            _ => false,
        }
    }

    /// All basis elements of codimension `k`.
    pub fn basis_in_codim(&self, k: u32) -> Vec<Basis> {
        match *self {
            Factor::Projective { n } => {
                if k < n {
                    vec![Basis::H(k)]
                } else {
                    vec![]
                }
            }
            Factor::Grassmannian { .. } => enumerate_partitions(k, self.box_shape().unwrap())
                .into_iter()
                .map(Basis::Omega)
                .collect(),
        }
    }

    /// The Poincare dual basis element: the unique `b'` with `deg(b * b') = 1`.
    pub fn dual(&self, b: &Basis) -> Result<Basis> {
        match (self, b) {
            (Factor::Projective { n }, Basis::H(i)) if *i < *n => Ok(Basis::H(n - 1 - i)),
            (Factor::Grassmannian { .. }, Basis::Omega(mu)) => {
                Ok(Basis::Omega(dual_in_box(mu, self.box_shape().unwrap())?))
            }
            _ => Err(Error::contract(format!("{b} is not a basis element of {self}"))),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Projective { n } => write!(f, "P^{}", n - 1),
            Factor::Grassmannian { d, n } => write!(f, "Gr_{d}({n})"),
        }
    }
}

/// A variety whose Chow ring is handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Single(Factor),
    Product(Factor, Factor),
}

impl Space {
    pub fn dimension(&self) -> u32 {
        match self {
            Space::Single(f) => f.dimension(),
            Space::Product(a, b) => a.dimension() + b.dimension(),
        }
    }

    pub fn factors(&self) -> Vec<Factor> {
        match *self {
            Space::Single(f) => vec![f],
            Space::Product(a, b) => vec![a, b],
        }
    }

    pub fn top(&self) -> Monomial {
        match self {
            Space::Single(f) => Monomial::Single(f.top()),
            Space::Product(a, b) => Monomial::Pair(a.top(), b.top()),
        }
    }

    pub fn unit(&self) -> Monomial {
        match self {
            Space::Single(f) => Monomial::Single(f.unit()),
            Space::Product(a, b) => Monomial::Pair(a.unit(), b.unit()),
        }
    }

    pub fn transposed(&self) -> Space {
        match *self {
            Space::Single(f) => Space::Single(f),
            Space::Product(a, b) => Space::Product(b, a),
        }
    }

    fn admits(&self, m: &Monomial) -> bool {
        match (self, m) {
            (Space::Single(f), Monomial::Single(b)) => f.admits(b),
            (Space::Product(f, g), Monomial::Pair(a, b)) => f.admits(a) && g.admits(b),
            _ => false,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Single(a) => write!(f, "{a}"),
            Space::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// Additive generator of the Chow ring of a single factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    H(u32),
    Omega(Partition),
}

impl Basis {
    pub fn codim(&self) -> u32 {
        match self {
            Basis::H(i) => *i,
            Basis::Omega(mu) => mu.weight(),
        }
    }

    pub fn omega(parts: &[u32]) -> Result<Basis> {
        Ok(Basis::Omega(Partition::new(parts.to_vec())?))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::H(i) => write!(f, "H^{i}"),
            Basis::Omega(mu) => write!(f, "w{mu}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    Single(Basis),
    Pair(Basis, Basis),
}

impl Monomial {
    pub fn codim(&self) -> u32 {
        match self {
            Monomial::Single(b) => b.codim(),
            Monomial::Pair(a, b) => a.codim() + b.codim(),
        }
    }

    pub fn swapped(&self) -> Monomial {
        match self {
            Monomial::Single(b) => Monomial::Single(b.clone()),
            Monomial::Pair(a, b) => Monomial::Pair(b.clone(), a.clone()),
        }
    }

    pub fn pair(a: Basis, b: Basis) -> Monomial {
        Monomial::Pair(a, b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Single(b) => write!(f, "{b}"),
            Monomial::Pair(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// A homogeneous integer combination of basis monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleClass {
    space: Space,
    codim: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl CycleClass {
    pub fn zero(space: Space, codim: u32) -> Self {
        CycleClass {
            space,
            codim,
            terms: BTreeMap::new(),
        }
    }

    /// The fundamental class `1`.
    pub fn one(space: Space) -> Self {
        let mut c = CycleClass::zero(space, 0);
        c.terms.insert(space.unit(), BigInt::one());
        c
    }

    pub fn from_terms(
        space: Space,
        codim: u32,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        let mut c = CycleClass::zero(space, codim);
        for (m, k) in terms {
            c.add_term(m, k)?;
        }
        Ok(c)
    }

    /// Adds `coeff * m`, rejecting monomials outside the space or of the wrong codimension.
    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) -> Result<()> {
        if !self.space.admits(&m) {
            return Err(Error::contract(format!("{m} is not a basis monomial of {}", self.space)));
        }
        if m.codim() != self.codim {
            return Err(Error::contract(format!(
                "{m} has codimension {} in a class of codimension {}",
                m.codim(),
                self.codim
            )));
        }
        self.add_unchecked(m, coeff);
        Ok(())
    }

    fn add_unchecked(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: &BigInt) -> CycleClass {
        let mut out = CycleClass::zero(self.space, self.codim);
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        }
        out
    }

    pub fn add(&self, other: &CycleClass) -> Result<CycleClass> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_unchecked(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CycleClass) -> Result<CycleClass> {
        self.add(&other.scaled(&-BigInt::one()))
    }

    fn check_compatible(&self, other: &CycleClass) -> Result<()> {
        if self.space != other.space {
            return Err(Error::contract(format!(
                "classes on {} and {}",
                self.space, other.space
            )));
        }
        if self.codim != other.codim && !self.is_zero() && !other.is_zero() {
            return Err(Error::contract(format!(
                "classes of codimension {} and {}",
                self.codim, other.codim
            )));
        }
        Ok(())
    }

    /// Swaps the two factors of a class on a product.
    pub fn transposed(&self) -> CycleClass {
        CycleClass {
            space: self.space.transposed(),
            codim: self.codim,
            terms: self.terms.iter().map(|(m, c)| (m.swapped(), c.clone())).collect(),
        }
    }

    /// `true` iff every coefficient is divisible by `n`.
    pub fn divisible_by(&self, n: &BigInt) -> bool {
        self.terms.values().all(|c| c.is_multiple_of(n))
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
                write!(f, "{}*{m}", c.abs())?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

type SchubertMap = BTreeMap<Partition, BigInt>;

fn pieri_step(classes: &SchubertMap, shape: BoxShape) -> SchubertMap {
    let mut out = SchubertMap::new();
    for (mu, c) in classes {
        let parts = mu.padded(shape.rows as usize);
        for i in 0..parts.len() {
            let grows = parts[i] < shape.width && (i == 0 || parts[i - 1] > parts[i]);
            if grows {
                let mut next = parts.clone();
                next[i] += 1;
                let nu = Partition::new(next).expect("adding a corner keeps a partition");
                *out.entry(nu).or_insert_with(BigInt::zero) += c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn grassmannian_class(d: u32, n: u32, codim: u32, map: SchubertMap) -> CycleClass {
    let space = Space::Single(Factor::Grassmannian { d, n });
    CycleClass {
        space,
        codim,
        terms: map
            .into_iter()
            .map(|(mu, c)| (Monomial::Single(Basis::Omega(mu)), c))
            .collect(),
    }
}

/// `omega_1 * omega_mu`: the sum of `omega_nu` over `nu` obtained from `mu`
/// by adding one box inside the `d x (n-d)` box.
pub fn pieri_omega1(mu: &Partition, d: u32, n: u32) -> Result<CycleClass> {
    let shape = BoxShape::grassmannian(d, n)?;
    if !mu.fits(shape) {
        return Err(Error::contract(format!("{mu} does not fit in Gr_{d}({n})")));
    }
    let start = SchubertMap::from([(mu.clone(), BigInt::one())]);
    Ok(grassmannian_class(d, n, mu.weight() + 1, pieri_step(&start, shape)))
}

fn omega1_power_map(m: u32, shape: BoxShape) -> SchubertMap {
    let mut acc = SchubertMap::from([(Partition::empty(), BigInt::one())]);
    for _ in 0..m {
        acc = pieri_step(&acc, shape);
    }
    acc
}

/// `omega_1^m` in the Schubert basis; the coefficient of `omega_rho` is
/// `deg(omega_1^m * omega_{rho'})`, the number of standard tableaux of shape `rho`.
pub fn omega1_power(m: u32, d: u32, n: u32) -> Result<CycleClass> {
    let shape = BoxShape::grassmannian(d, n)?;
    if m > shape.area() {
        return Err(Error::contract(format!(
            "omega_1^{m} exceeds dim Gr_{d}({n}) = {}",
            shape.area()
        )));
    }
    Ok(grassmannian_class(d, n, m, omega1_power_map(m, shape)))
}

/// Coefficient of the point class.
pub fn degree(c: &CycleClass) -> BigInt {
    c.coefficient(&c.space.top())
}

/// `deg(a * b)` for two basis elements of one factor.
pub fn degree_pairing(factor: &Factor, a: &Basis, b: &Basis) -> Result<BigInt> {
    if !factor.admits(a) || !factor.admits(b) {
        return Err(Error::contract(format!("{a} or {b} not on {factor}")));
    }
    if a.codim() + b.codim() != factor.dimension() {
        return Ok(BigInt::zero());
    }
    Ok(if factor.dual(a)? == *b {
        BigInt::one()
    } else {
        BigInt::zero()
    })
}

/// If `omega_1^{|mu|} = c * omega_mu` for a single partition, returns `c`.
fn omega1_power_multiple(mu: &Partition, shape: BoxShape) -> Option<BigInt> {
    let power = omega1_power_map(mu.weight(), shape);
    if power.len() == 1 {
        power.get(mu).cloned()
    } else {
        None
    }
}

fn multiply_basis(factor: &Factor, x: &Basis, y: &Basis) -> Result<Vec<(Basis, BigInt)>> {
    let total = x.codim() + y.codim();
    if total > factor.dimension() {
        return Ok(vec![]);
    }
    match (factor, x, y) {
        (Factor::Projective { .. }, Basis::H(i), Basis::H(j)) => Ok(vec![(Basis::H(i + j), BigInt::one())]),
        (Factor::Grassmannian { d, n }, Basis::Omega(mu), Basis::Omega(nu)) => {
            if total == factor.dimension() {
                let k = degree_pairing(factor, x, y)?;
                return Ok(if k.is_zero() { vec![] } else { vec![(factor.top(), k)] });
            }
            let shape = factor.box_shape().unwrap();
            for (power_side, other) in [(mu, nu), (nu, mu)] {
                if let Some(c) = omega1_power_multiple(power_side, shape) {
                    let mut acc = SchubertMap::from([(other.clone(), BigInt::one())]);
                    for _ in 0..power_side.weight() {
                        acc = pieri_step(&acc, shape);
                    }
                    let mut out = Vec::with_capacity(acc.len());
                    for (rho, k) in acc {
                        let (q, r) = k.div_rem(&c);
                        if !r.is_zero() {
                            return Err(Error::invariant(format!(
                                "omega_1 power division by {c} inexact in Gr_{d}({n})"
                            )));
                        }
                        out.push((Basis::Omega(rho), q));
                    }
                    return Ok(out);
                }
            }
            Err(Error::unsupported(format!(
                "product {x} * {y} on {factor} needs Littlewood-Richardson coefficients"
            )))
        }
        _ => Err(Error::contract(format!("{x} * {y} mixes factor types on {factor}"))),
    }
}

/// `a = c * omega_1^k` on a Grassmannian: returns `c`.
fn as_omega1_power(a: &CycleClass, d: u32, n: u32) -> Option<BigInt> {
    if a.is_zero() {
        return None;
    }
    let shape = BoxShape { rows: d, width: n - d };
    let power = omega1_power_map(a.codim, shape);
    if power.len() != a.terms.len() {
        return None;
    }
    let (first_mono, first_coeff) = a.terms.iter().next()?;
    let Monomial::Single(Basis::Omega(first)) = first_mono else {
        return None;
    };
    let base = power.get(first)?;
    let (c, r) = first_coeff.div_rem(base);
    if !r.is_zero() {
        return None;
    }
    let matches = a.terms.iter().all(|(m, k)| match m {
        Monomial::Single(Basis::Omega(mu)) => power.get(mu).is_some_and(|p| &(p * &c) == k),
        _ => false,
    });
    matches.then_some(c)
}

/// Product in the Chow ring.
///
/// Supported: `H^i * H^j` on projective factors; on a Grassmannian, products
/// of complementary codimension (Poincare duality), products where either
/// factor is an integer multiple of a power of `omega_1`, and monomial
/// products where one side is a `omega_1`-power basis element. Products on a
/// two-factor space are taken monomial by monomial. Anything else returns
/// [`Error::Unsupported`].
pub fn multiply(a: &CycleClass, b: &CycleClass) -> Result<CycleClass> {
    if a.space != b.space {
        return Err(Error::contract(format!("product of classes on {} and {}", a.space, b.space)));
    }
    let space = a.space;
    let codim = a.codim + b.codim;
    let mut out = CycleClass::zero(space, codim);
    if codim > space.dimension() || a.is_zero() || b.is_zero() {
        return Ok(out);
    }
    match space {
        Space::Single(factor) => {
            if let Factor::Grassmannian { d, n } = factor {
                if codim < factor.dimension() {
                    for (power, other) in [(a, b), (b, a)] {
                        if let Some(c) = as_omega1_power(power, d, n) {
                            let shape = factor.box_shape().unwrap();
                            let mut acc = SchubertMap::new();
                            for (m, k) in &other.terms {
                                if let Monomial::Single(Basis::Omega(mu)) = m {
                                    acc.insert(mu.clone(), k * &c);
                                }
                            }
                            for _ in 0..power.codim {
                                acc = pieri_step(&acc, shape);
                            }
                            return Ok(grassmannian_class(d, n, codim, acc));
                        }
                    }
                }
            }
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    let (Monomial::Single(x), Monomial::Single(y)) = (ma, mb) else {
                        return Err(Error::invariant("pair monomial on a single space"));
                    };
                    for (z, k) in multiply_basis(&factor, x, y)? {
                        out.add_unchecked(Monomial::Single(z), k * ca * cb);
                    }
                }
            }
        }
        Space::Product(f, g) => {
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    let (Monomial::Pair(x1, x2), Monomial::Pair(y1, y2)) = (ma, mb) else {
                        return Err(Error::invariant("single monomial on a product space"));
                    };
                    let left = multiply_basis(&f, x1, y1)?;
                    if left.is_empty() {
                        continue;
                    }
                    let right = multiply_basis(&g, x2, y2)?;
                    let scale = ca * cb;
                    for (z1, k1) in &left {
                        for (z2, k2) in &right {
                            out.add_unchecked(Monomial::Pair(z1.clone(), z2.clone()), k1 * k2 * &scale);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `Delta_lambda(c(tau_1^r (x) kappa_d))` on `P^{n-1} x Gr_d(n)`:
///
/// `sum_{mu in lambda} (-r)^{k-|mu|} H^{k-|mu|} x d_{~lambda,~mu} omega_mu`,
/// with `d_{~lambda,~mu} = det C(~lambda_i + n-d-i, ~mu_j + n-d-j)`,
/// `1 <= i, j <= n-d`, conjugates padded with zeros. Terms with
/// `H`-exponent above `n-1` vanish and are dropped.
pub fn twisted_schur(lambda: &Partition, r: i64, d: u32, n: u32) -> Result<CycleClass> {
    let shape = BoxShape::grassmannian(d, n)?;
    if !lambda.fits(shape) {
        return Err(Error::contract(format!("{lambda} does not fit in Gr_{d}({n})")));
    }
    let k = lambda.weight();
    let e = (n - d) as usize;
    let space = Space::Product(Factor::Projective { n }, Factor::Grassmannian { d, n });
    let indices = |p: &Partition| -> Vec<i64> {
        p.conjugate()
            .padded(e)
            .iter()
            .enumerate()
            .map(|(i, &x)| i64::from(x) + e as i64 - (i as i64 + 1))
            .collect()
    };
    let rows = indices(lambda);
    let neg_r = BigInt::from(-r);
    let mut out = CycleClass::zero(space, k);
    let lowest = k.saturating_sub(n - 1);
    for weight in lowest..=k {
        let h = k - weight;
        let sign = Pow::pow(&neg_r, h);
        if sign.is_zero() {
            continue;
        }
        for mu in enumerate_partitions(weight, shape) {
            if !lambda.contains(&mu) {
                continue;
            }
            let det = binomial_determinant(&rows, &indices(&mu))?;
            out.add_unchecked(Monomial::Pair(Basis::H(h), Basis::Omega(mu)), &sign * det);
        }
    }
    Ok(out)
}

/// The twisted Schur class of the full box: the generator of rational cycles
/// in top Grassmannian codimension.
pub fn g_cycle(d: u32, n: u32, r: i64) -> Result<CycleClass> {
    let shape = BoxShape::grassmannian(d, n)?;
    twisted_schur(&shape.full(), r, d, n)
}

/// Which twist class `r d` represents modulo `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignCase {
    /// `r d = 1 mod n`: `f = c_{n-1}(kappa_1 (x) Lambda^d tau_d)`.
    PlusOne,
    /// `r d = -1 mod n`: `f = c_{n-1}(kappa_1 (x) Lambda^{n-d} kappa_d)`.
    MinusOne,
}

impl SignCase {
    /// Sign `s` in `f = sum_m s^m H^{n-1-m} x omega_1^m`.
    pub fn step_sign(self) -> i64 {
        match self {
            SignCase::PlusOne => -1,
            SignCase::MinusOne => 1,
        }
    }
}

/// `f = sum_{m=0}^{n-1} s^m H^{n-1-m} x omega_1^m`.
pub fn f_cycle(d: u32, n: u32, sign: SignCase) -> Result<CycleClass> {
    let shape = BoxShape::grassmannian(d, n)?;
    let space = Space::Product(Factor::Projective { n }, Factor::Grassmannian { d, n });
    let mut out = CycleClass::zero(space, n - 1);
    let s = sign.step_sign();
    let mut power = SchubertMap::from([(Partition::empty(), BigInt::one())]);
    for m in 0..n {
        let sgn = if s < 0 && m % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        for (rho, c) in &power {
            out.add_unchecked(
                Monomial::Pair(Basis::H(n - 1 - m), Basis::Omega(rho.clone())),
                c * &sgn,
            );
        }
        power = pieri_step(&power, shape);
    }
    Ok(out)
}
