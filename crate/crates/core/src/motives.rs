//! Correspondences between `P^{n-1}` and `Gr_d(n)` and decomposition certificates.
//!
//! A certificate for `(n, d, r)` is a pair of integral cycles
//!
//! * `alpha` on `P^{n-1} x Gr_d(n)` of codimension `n - 1`, congruent mod `n`
//!   to `f = c_{n-1}(kappa_1 (x) Lambda^d tau_d)` (or its `Lambda^{n-d} kappa_d`
//!   variant), and
//! * `beta` on `Gr_d(n) x P^{n-1}` of codimension `N = d(n-d)`, congruent mod
//!   `n` to the transpose of `g = Delta_{(n-d)^d}(c(tau_1^r (x) kappa_d))`,
//!
//! with `beta o alpha` exactly the diagonal of `P^{n-1}`. Then `alpha o beta`
//! is an idempotent on `Gr_d(n)` and splits off a copy of `P^{n-1}`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::{degree_pairing, f_cycle, g_cycle, multiply, omega1_power, twisted_schur, Basis, CycleClass, Factor, Monomial, Space};
pub use crate::chow::SignCase;
use crate::error::{Error, Result};
use crate::exactmath::{extended_gcd_list, factorial, gcd_all, is_prime, superfactorial, vandermonde};
use crate::partitions::{dual_in_box, enumerate_partitions, BoxShape, Partition};
use crate::serial::{CycleRecord, SCHEMA_VERSION};

/// A cycle on `source x target`, read as a morphism `M(source) -> M(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence {
    source: Factor,
    target: Factor,
    cycle: CycleClass,
}

impl Correspondence {
    pub fn new(source: Factor, target: Factor, cycle: CycleClass) -> Result<Self> {
        if cycle.space() != Space::Product(source, target) {
            return Err(Error::contract(format!(
                "cycle on {} used as a correspondence {source} -> {target}",
                cycle.space()
            )));
        }
        Ok(Correspondence { source, target, cycle })
    }

    /// Wraps a class on a two-factor space.
    pub fn from_cycle(cycle: CycleClass) -> Result<Self> {
        match cycle.space() {
            Space::Product(source, target) => Correspondence::new(source, target, cycle),
            s => Err(Error::contract(format!("correspondence on single space {s}"))),
        }
    }

    pub fn source(&self) -> Factor {
        self.source
    }

    pub fn target(&self) -> Factor {
        self.target
    }

    pub fn cycle(&self) -> &CycleClass {
        &self.cycle
    }

    pub fn codim(&self) -> u32 {
        self.cycle.codim()
    }

    /// Codimension shift relative to a degree-zero morphism, `codim - dim(source)`.
    pub fn twist(&self) -> i64 {
        i64::from(self.codim()) - i64::from(self.source.dimension())
    }

    pub fn is_zero(&self) -> bool {
        self.cycle.is_zero()
    }
}

/// Swaps the two factors.
pub fn transpose(c: &Correspondence) -> Correspondence {
    Correspondence {
        source: c.target,
        target: c.source,
        cycle: c.cycle.transposed(),
    }
}

/// `beta o alpha` for `alpha: X -> Y`, `beta: Y -> Z`, extended bilinearly from
/// `(f_b x g_b) o (f_a x g_a) = deg(g_a * f_b) (f_a x g_b)`.
pub fn compose(beta: &Correspondence, alpha: &Correspondence) -> Result<Correspondence> {
    if alpha.target != beta.source {
        return Err(Error::contract(format!(
            "cannot compose {} -> {} after {} -> {}",
            beta.source, beta.target, alpha.source, alpha.target
        )));
    }
    let middle = alpha.target;
    let codim = i64::from(alpha.codim()) + i64::from(beta.codim()) - i64::from(middle.dimension());
    let codim = u32::try_from(codim)
        .map_err(|_| Error::contract("composition has negative codimension"))?;

    let mut by_source: HashMap<&Basis, Vec<(&Basis, &BigInt)>> = HashMap::new();
    for (m, c) in beta.cycle.terms() {
        if let Monomial::Pair(y, z) = m {
            by_source.entry(y).or_default().push((z, c));
        }
    }
    let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    for (m, a) in alpha.cycle.terms() {
        let Monomial::Pair(x, y) = m else { continue };
        // Schubert bases are self-dual: only the dual element pairs nontrivially.
        let partner = middle.dual(y)?;
        let Some(row) = by_source.get(&partner) else { continue };
        let k = degree_pairing(&middle, y, &partner)?;
        if k.is_zero() {
            continue;
        }
        let ak = a * &k;
        for (z, b) in row {
            *out.entry(Monomial::Pair(x.clone(), (*z).clone())).or_insert_with(BigInt::zero) += &ak * *b;
        }
    }
    let space = Space::Product(alpha.source, beta.target);
    let cycle = CycleClass::from_terms(space, codim, out)?;
    Correspondence::new(alpha.source, beta.target, cycle)
}

/// `sum_i H^{n-1-i} x H^i` on `P^{n-1} x P^{n-1}`.
pub fn diagonal_projective(n: u32) -> Result<Correspondence> {
    let p = Factor::projective(n)?;
    let terms = (0..n).map(|i| (Monomial::Pair(Basis::H(n - 1 - i), Basis::H(i)), BigInt::one()));
    let cycle = CycleClass::from_terms(Space::Product(p, p), n - 1, terms)?;
    Correspondence::new(p, p, cycle)
}

/// `d r = +-1 (mod n)`.
pub fn criterion(n: u32, d: u32, r: i64) -> bool {
    if n < 2 {
        return false;
    }
    let n = i64::from(n);
    let x = (i64::from(d) * r).rem_euclid(n);
    x == 1 || x == n - 1
}

fn pg_factors(d: u32, n: u32) -> Result<(Factor, Factor)> {
    Ok((Factor::projective(n)?, Factor::grassmannian(d, n)?))
}

/// One generator of rational cycles modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub lambda: Partition,
    /// Integer multiplier in front of `H^{k-|lambda|} x 1 * Delta_lambda`.
    pub scale: BigInt,
    pub cycle: CycleClass,
    /// Nonzero mod `n` on `1 x omega_N` or `H x omega_{N-1}`.
    pub touches_top: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModNGeneratorSet {
    pub n: u32,
    pub d: u32,
    pub r: i64,
    pub codim: u32,
    pub generators: Vec<Generator>,
    /// Partitions whose generators were dropped because they vanish mod `n`.
    pub excluded: Vec<Partition>,
}

impl ModNGeneratorSet {
    pub fn cycles(&self) -> impl Iterator<Item = &CycleClass> {
        self.generators.iter().map(|g| &g.cycle)
    }
}

/// `H^0 x omega_N` and `H^1 x omega_{N-1}`: the two monomials of `P x Gr` whose
/// `beta`-coefficients are forced to be units.
fn top_monomials(d: u32, n: u32) -> Result<(Monomial, Monomial)> {
    let shape = BoxShape::grassmannian(d, n)?;
    let full = shape.full();
    let mut corner = full.padded(d as usize);
    corner[d as usize - 1] -= 1;
    Ok((
        Monomial::Pair(Basis::H(0), Basis::Omega(full)),
        Monomial::Pair(Basis::H(1), Basis::Omega(Partition::new(corner)?)),
    ))
}

fn touches_top(c: &CycleClass, d: u32, n: u32) -> Result<bool> {
    let (m0, m1) = top_monomials(d, n)?;
    let n = BigInt::from(n);
    Ok(!c.coefficient(&m0).is_multiple_of(&n) || !c.coefficient(&m1).is_multiple_of(&n))
}

/// Generators mod a prime `n` of rational cycles of codimension `k` on
/// `P^{n-1} x Gr_d(n)`: the twisted Schur classes `Delta_lambda`, `|lambda| = k`.
pub fn rational_generators(n: u32, d: u32, r: i64, k: u32) -> Result<ModNGeneratorSet> {
    if !is_prime(n.into()) {
        return Err(Error::unsupported(format!(
            "{n} is composite; use composite_generators_d2"
        )));
    }
    let shape = BoxShape::grassmannian(d, n)?;
    let mut generators = Vec::new();
    for lambda in enumerate_partitions(k, shape) {
        let cycle = twisted_schur(&lambda, r, d, n)?;
        generators.push(Generator {
            touches_top: k == shape.area() && touches_top(&cycle, d, n)?,
            lambda,
            scale: BigInt::one(),
            cycle,
        });
    }
    Ok(ModNGeneratorSet {
        n,
        d,
        r,
        codim: k,
        generators,
        excluded: vec![],
    })
}

/// Generators mod an odd `n >= 5` of rational cycles of codimension `N` on
/// `P^{n-1} x Gr_2(n)`: `n/(n, N-|lambda|) * H^{N-|lambda|} x 1 * Delta_lambda`
/// for `N-(n-1) <= |lambda| <= N`. The layer `|lambda| = N-1` is a multiple of
/// `n` and is listed under `excluded`; other layers whose scale is a multiple
/// of `n` are kept.
pub fn composite_generators_d2(n: u32, r: i64) -> Result<ModNGeneratorSet> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::unsupported(format!(
            "the Gr_2 generator set needs odd n >= 5, got {n}"
        )));
    }
    let d = 2;
    let (p, g) = pg_factors(d, n)?;
    let shape = BoxShape::grassmannian(d, n)?;
    let top = shape.area();
    let space = Space::Product(p, g);
    let mut generators = Vec::new();
    let mut excluded = Vec::new();
    for weight in (top + 1 - n)..=top {
        let j = top - weight;
        let scale = BigInt::from(n / n.gcd(&j));
        for lambda in enumerate_partitions(weight, shape) {
            if j == 1 {
                excluded.push(lambda);
                continue;
            }
            let shift = CycleClass::from_terms(
                space,
                j,
                [(Monomial::Pair(Basis::H(j), g.unit()), scale.clone())],
            )?;
            let cycle = multiply(&shift, &twisted_schur(&lambda, r, d, n)?)?;
            generators.push(Generator {
                touches_top: touches_top(&cycle, d, n)?,
                lambda,
                scale: scale.clone(),
                cycle,
            });
        }
    }
    Ok(ModNGeneratorSet {
        n,
        d,
        r,
        codim: top,
        generators,
        excluded,
    })
}

/// Witness of the unit scan on the two top coefficients of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionWitness {
    /// Coefficient of `1 x omega_N` in `g`.
    pub g0: String,
    /// Coefficient of `H x omega_{N-1}` in `g`.
    pub g1: String,
    /// A multiplier `c` making both coefficients `+-1` mod `n`, if any.
    pub unit_multiplier: Option<u32>,
}

fn obstruction_witness(n: u32, d: u32, r: i64) -> Result<ObstructionWitness> {
    let supported = is_prime(n.into()) || (d == 2 && n >= 5 && n % 2 == 1);
    if !supported {
        return Err(Error::unsupported(format!(
            "no generator description of rational cycles for n={n}, d={d}"
        )));
    }
    let g = g_cycle(d, n, r)?;
    let (m0, m1) = top_monomials(d, n)?;
    let (g0, g1) = (g.coefficient(&m0), g.coefficient(&m1));
    let modulus = BigInt::from(n);
    let is_unit = |x: BigInt| {
        let x = x.mod_floor(&modulus);
        x == BigInt::one() % &modulus || x == &modulus - 1u32
    };
    let unit_multiplier = (0..n).find(|&c| {
        let c = BigInt::from(c);
        is_unit(&c * &g0) && is_unit(&c * &g1)
    });
    Ok(ObstructionWitness {
        g0: g0.to_string(),
        g1: g1.to_string(),
        unit_multiplier,
    })
}

/// Scans `c in Z/n` for a multiple of `g^t` whose coefficients on
/// `omega_N x 1` and `omega_{N-1} x H` are both `+-1` mod `n`.
pub fn obstruction_scan(n: u32, d: u32, r: i64) -> Result<bool> {
    Ok(obstruction_witness(n, d, r)?.unit_multiplier.is_some())
}

/// Groups the terms of a `P x Gr` correspondence by the codimension of the
/// Grassmannian factor.
fn layers(c: &Correspondence) -> BTreeMap<u32, Vec<(Monomial, BigInt)>> {
    let mut out: BTreeMap<u32, Vec<(Monomial, BigInt)>> = BTreeMap::new();
    for (m, k) in c.cycle.terms() {
        if let Monomial::Pair(_, y) = m {
            out.entry(y.codim()).or_default().push((m.clone(), k.clone()));
        }
    }
    out
}

/// Makes a list of coefficients, all prime to `n`, have gcd 1 by adding the
/// smallest `t >= 0` multiple `t n` to the first entry. A single coefficient
/// congruent to `+-1` is replaced by `+-1`.
pub fn normalize_layer(coeffs: &[BigInt], n: u32) -> Result<Vec<BigInt>> {
    if gcd_all(coeffs).is_one() {
        return Ok(coeffs.to_vec());
    }
    let modulus = BigInt::from(n);
    if coeffs.is_empty() || coeffs.iter().any(|c| c.is_multiple_of(&modulus)) {
        return Err(Error::contract(format!(
            "layer {coeffs:?} has a coefficient divisible by {n}; cannot normalize"
        )));
    }
    let mut out = coeffs.to_vec();
    if coeffs.len() == 1 {
        let residue = coeffs[0].mod_floor(&modulus);
        out[0] = if residue.is_one() {
            BigInt::one()
        } else if residue == &modulus - 1u32 {
            -BigInt::one()
        } else {
            return Err(Error::contract(format!(
                "single coefficient {} is not +-1 mod {n}",
                coeffs[0]
            )));
        };
        return Ok(out);
    }
    let rest = gcd_all(&coeffs[1..]);
    // one good residue class of t exists modulo every prime factor of `rest`
    let mut t = BigInt::zero();
    while t <= rest {
        let candidate = &coeffs[0] + &t * &modulus;
        if candidate.gcd(&rest).is_one() {
            out[0] = candidate;
            return Ok(out);
        }
        t += 1;
    }
    Err(Error::invariant(format!("no normalizing shift for {coeffs:?} mod {n}")))
}

/// Adjusts `f` modulo `n`, layer by layer, so each layer's coefficients have gcd 1.
pub fn normalize_alpha(f: &Correspondence, n: u32) -> Result<Correspondence> {
    let mut cycle = CycleClass::zero(f.cycle.space(), f.codim());
    for (_, layer) in layers(f) {
        let coeffs: Vec<BigInt> = layer.iter().map(|(_, c)| c.clone()).collect();
        let adjusted = normalize_layer(&coeffs, n)?;
        for ((m, _), c) in layer.into_iter().zip(adjusted) {
            cycle.add_term(m, c)?;
        }
    }
    Correspondence::new(f.source, f.target, cycle)
}

/// Lifts `gt` (a cycle `Gr -> P`) modulo `n` so that every layer of
/// `gt o alpha` is exactly `H^{n-1-m} x H^m`.
///
/// Per layer, with `a` the coefficients of `alpha` (gcd 1), `b` the matching
/// coefficients of `gt` and `S = sum a_i b_i = 1 + k n`, Bezout gives
/// `sum a_i x_i = 1` and `b'_i = b_i - k n x_i`.
pub fn lift_beta(gt: &Correspondence, alpha: &Correspondence, n: u32) -> Result<Correspondence> {
    let (Factor::Projective { .. }, Factor::Projective { .. }) = (alpha.source, gt.target) else {
        return Err(Error::contract("lift_beta expects alpha: P -> Gr and beta: Gr -> P"));
    };
    if alpha.target != gt.source {
        return Err(Error::contract("alpha and beta do not share the Grassmannian"));
    }
    let middle = alpha.target;
    let modulus = BigInt::from(n);
    let mut cycle = gt.cycle.clone();
    for (m, layer) in layers(alpha) {
        let beta_codim = gt
            .codim()
            .checked_sub(middle.dimension() - m)
            .ok_or_else(|| Error::contract("beta codimension below the Grassmannian layer"))?;
        let mut a = Vec::with_capacity(layer.len());
        let mut keys = Vec::with_capacity(layer.len());
        for (mono, coeff) in &layer {
            let Monomial::Pair(_, y) = mono else { unreachable!() };
            let key = Monomial::Pair(middle.dual(y)?, Basis::H(beta_codim));
            a.push(coeff.clone());
            keys.push(key);
        }
        let b: Vec<BigInt> = keys.iter().map(|k| cycle.coefficient(k)).collect();
        let s: BigInt = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        let excess = &s - 1u32;
        if !excess.is_multiple_of(&modulus) {
            return Err(Error::contract(format!(
                "layer {m} pairs to {s}, not 1 mod {n}"
            )));
        }
        if excess.is_zero() {
            continue;
        }
        let k = excess / &modulus;
        let (g, x) = extended_gcd_list(&a)?;
        if !g.is_one() {
            return Err(Error::contract(format!("layer {m} of alpha has gcd {g}")));
        }
        for ((key, old), xi) in keys.into_iter().zip(b).zip(x) {
            let new = &old - &k * &modulus * xi;
            cycle.add_term(key, new - old)?;
        }
    }
    Correspondence::new(gt.source, gt.target, cycle)
}

/// How a certificate was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Prime `n`, `1 < d < n-1`.
    Prime,
    /// Prime `n` with `d = 1` or `d = n-1`: an isomorphism of Severi-Brauer varieties.
    SeveriBrauer,
    /// Odd composite `n`, `d = 2`.
    CompositeD2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    CriterionFailed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub n: u32,
    pub d: u32,
    pub r: i64,
    pub route: Route,
    pub sign_case: Option<SignCase>,
    pub alpha: Option<Correspondence>,
    pub beta: Option<Correspondence>,
    pub composition: Option<CycleClass>,
    pub projector: Option<Correspondence>,
    pub witness: ObstructionWitness,
    pub verdict: Verdict,
}

fn route_for(n: u32, d: u32) -> Result<Route> {
    if n < 2 || d == 0 || d >= n {
        return Err(Error::contract(format!("need n >= 2 and 1 <= d <= n-1, got n={n} d={d}")));
    }
    if is_prime(n.into()) {
        Ok(if d == 1 || d == n - 1 { Route::SeveriBrauer } else { Route::Prime })
    } else if n % 2 == 1 && n >= 5 && d == 2 {
        Ok(Route::CompositeD2)
    } else {
        Err(Error::unsupported(format!(
            "composite n={n} is handled only for odd n and d=2"
        )))
    }
}

/// Builds and checks `alpha`, `beta` for `(n, d, r)`.
///
/// When `d r = +-1 mod n` the result is [`Verdict::Verified`] and carries the
/// exact composition `beta o alpha` (the diagonal) and the projector
/// `alpha o beta` (checked idempotent). Otherwise the verdict is
/// [`Verdict::CriterionFailed`] with the obstruction scan as witness.
pub fn build_decomposition(n: u32, d: u32, r: i64) -> Result<DecompositionCertificate> {
    let route = route_for(n, d)?;
    let holds = match route {
        Route::SeveriBrauer => sb_iso_criterion(n, r)?,
        Route::Prime | Route::CompositeD2 => criterion(n, d, r),
    };
    let witness = obstruction_witness(n, d, r)?;
    if witness.unit_multiplier.is_some() != holds {
        return Err(Error::invariant(format!(
            "obstruction scan disagrees with the criterion at ({n}, {d}, {r})"
        )));
    }
    let mut cert = DecompositionCertificate {
        n,
        d,
        r,
        route,
        sign_case: None,
        alpha: None,
        beta: None,
        composition: None,
        projector: None,
        witness,
        verdict: Verdict::CriterionFailed,
    };
    if !holds {
        return Ok(cert);
    }
    let sign = if (i64::from(d) * r).rem_euclid(i64::from(n)) == 1 {
        SignCase::PlusOne
    } else {
        SignCase::MinusOne
    };
    let (p, g) = pg_factors(d, n)?;
    let f = Correspondence::new(p, g, f_cycle(d, n, sign)?)?;
    let alpha = normalize_alpha(&f, n)?;
    let gt = transpose(&Correspondence::new(p, g, g_cycle(d, n, r)?)?);
    let beta = lift_beta(&gt, &alpha, n).map_err(|e| {
        Error::invariant(format!("lifting beta failed although d r = +-1 mod n: {e}"))
    })?;
    let composition = compose(&beta, &alpha)?;
    if composition != diagonal_projective(n)? {
        return Err(Error::invariant(format!(
            "beta o alpha is not the diagonal for ({n}, {d}, {r})"
        )));
    }
    let projector = compose(&alpha, &beta)?;
    if compose(&projector, &projector)? != projector {
        return Err(Error::invariant(format!(
            "alpha o beta is not idempotent for ({n}, {d}, {r})"
        )));
    }
    cert.sign_case = Some(sign);
    cert.alpha = Some(alpha);
    cert.beta = Some(beta);
    cert.composition = Some(composition.cycle);
    cert.projector = Some(projector);
    cert.verdict = Verdict::Verified;
    Ok(cert)
}

fn unit_multiple_exists(coeffs: &[BigInt], n: u32) -> bool {
    let modulus = BigInt::from(n);
    (0..n).any(|c| {
        coeffs.iter().all(|x| {
            let y = (x * c).mod_floor(&modulus);
            y == BigInt::one() % &modulus || y == &modulus - 1u32
        })
    })
}

/// Coefficients of `Delta_{n-1} = c_{n-1}(tau_1^r (x) kappa_1)` on `H^i x H^{n-1-i}`.
fn delta_generator(n: u32, r: i64) -> Result<Vec<BigInt>> {
    let cycle = twisted_schur(&Partition::rectangle(1, n - 1), r, 1, n)?;
    (0..n)
        .map(|i| {
            let mu = Partition::rectangle(1, n - 1 - i);
            Ok(cycle.coefficient(&Monomial::Pair(Basis::H(i), Basis::Omega(mu))))
        })
        .collect()
}

/// `M(SB(A)) = M(SB(B^op))` for `[B] = r [A]`, `n` prime: some cycle
/// `sum +-H^i x H^{n-1-i}` is a multiple of `Delta_{n-1}` mod `n`, which
/// happens iff `r = +-1 mod n`.
pub fn sb_iso_criterion(n: u32, r: i64) -> Result<bool> {
    if !is_prime(n.into()) {
        return Err(Error::contract(format!("{n} is not prime")));
    }
    let coeffs = delta_generator(n, r)?;
    for (i, c) in coeffs.iter().enumerate() {
        if *c != Pow::pow(&BigInt::from(-r), i) {
            return Err(Error::invariant(format!(
                "Delta_{{n-1}} coefficient {i} is {c}, expected (-r)^{i}"
            )));
        }
    }
    Ok(unit_multiple_exists(&coeffs, n))
}

/// Scans every signed-subset cycle `p = sum_{i in S} +-H^i x H^{n-1-i}` on
/// `P^{n-1} x P^{n-1}`, keeps those that are projectors and congruent mod `n`
/// to a multiple of `Delta_{n-1}` for `r = n-1`, and returns `true` iff only
/// `0` and `+-Delta` survive.
pub fn sb_indecomposable(n: u32) -> Result<bool> {
    if !is_prime(n.into()) {
        return Err(Error::contract(format!("{n} is not prime")));
    }
    let generator = delta_generator(n, i64::from(n) - 1)?;
    let modulus = BigInt::from(n);
    let p = Factor::projective(n)?;
    let diagonal = diagonal_projective(n)?;
    let minus_diagonal = Correspondence::new(p, p, diagonal.cycle.scaled(&-BigInt::one()))?;
    let total = 3usize.pow(n);
    for code in 0..total {
        let mut signs = Vec::with_capacity(n as usize);
        let mut rest = code;
        for _ in 0..n {
            signs.push(BigInt::from((rest % 3) as i64 - 1));
            rest /= 3;
        }
        let is_multiple = (0..n).any(|c| {
            signs
                .iter()
                .zip(&generator)
                .all(|(s, g)| (s - g * c).is_multiple_of(&modulus))
        });
        if !is_multiple {
            continue;
        }
        let terms = signs
            .iter()
            .enumerate()
            .map(|(i, s)| (Monomial::Pair(Basis::H(i as u32), Basis::H(n - 1 - i as u32)), s.clone()));
        let candidate = Correspondence::new(p, p, CycleClass::from_terms(Space::Product(p, p), n - 1, terms)?)?;
        if compose(&candidate, &candidate)? != candidate {
            continue;
        }
        if !(candidate.is_zero() || candidate == diagonal || candidate == minus_diagonal) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of the key congruence for one `(n, d, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceCheck {
    /// `m!/(0!...(d-1)!) * sum_a D_a^2 / (a_0! ... a_{d-1}!)`, summed directly.
    pub lhs: BigInt,
    /// `sum_rho c_rho d_rho` with `c` from `omega_1^m` and `d` from `g`.
    pub schubert_sum: BigInt,
    pub holds: bool,
}

fn increasing_sets(len: usize, max: i64, sum: i64) -> Vec<Vec<i64>> {
    fn go(start: i64, len: usize, max: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let len_i = len as i64;
        // smallest possible remainder: start + (start+1) + ... (len terms)
        for v in start..=max {
            let min_rest = len_i * v + len_i * (len_i - 1) / 2;
            if min_rest > sum {
                break;
            }
            cur.push(v);
            go(v + 1, len - 1, max, sum - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, max, sum, &mut Vec::new(), &mut out);
    out
}

/// Evaluates `m!/(0!...(d-1)!) sum_a D_a^2/(a_0!...a_{d-1}!)` over
/// `0 <= a_0 < ... < a_{d-1} <= n-1` with `sum a_i = m + d(d-1)/2`, checks it
/// against `sum_rho c_rho d_rho` computed from Schubert calculus, and tests
/// `lhs = d^m (mod n)`.
pub fn verify_congruence(n: u32, d: u32, m: u32) -> Result<CongruenceCheck> {
    if d < 2 || d > n / 2 || m > n - 1 {
        return Err(Error::contract(format!(
            "need 2 <= d <= n/2 and m <= n-1, got n={n} d={d} m={m}"
        )));
    }
    let du = d as usize;
    let target = i64::from(m) + i64::from(d * (d - 1) / 2);
    let mut sum = BigRational::zero();
    for a in increasing_sets(du, i64::from(n) - 1, target) {
        let den: BigInt = a.iter().map(|&x| factorial(x as u64)).product();
        let v = vandermonde(&a);
        sum += BigRational::new(&v * &v, den);
    }
    let lhs = sum * BigRational::new(factorial(m.into()), superfactorial(du));
    if !lhs.is_integer() {
        return Err(Error::invariant(format!("congruence sum for ({n}, {d}, {m}) is not integral")));
    }
    let lhs = lhs.to_integer();

    let shape = BoxShape::grassmannian(d, n)?;
    let power = omega1_power(m, d, n)?;
    let g = g_cycle(d, n, 1)?;
    let sign = if m.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut schubert_sum = BigInt::zero();
    for rho in enumerate_partitions(m, shape) {
        let c = power.coefficient(&Monomial::Single(Basis::Omega(rho.clone())));
        let mu = dual_in_box(&rho, shape)?;
        let dcoef = g.coefficient(&Monomial::Pair(Basis::H(m), Basis::Omega(mu))) * &sign;
        schubert_sum += c * dcoef;
    }
    if schubert_sum != lhs {
        return Err(Error::invariant(format!(
            "congruence routes disagree at ({n}, {d}, {m}): {lhs} vs {schubert_sum}"
        )));
    }
    let modulus = BigInt::from(n);
    let holds = (&lhs - Pow::pow(&BigInt::from(d), m)).is_multiple_of(&modulus);
    Ok(CongruenceCheck {
        lhs,
        schubert_sum,
        holds,
    })
}

/// `m!/2 * sum_{x_1 + x_2 = m+1} (x_1 - x_2)^2 / (x_1! x_2!)`, checked equal to `2^m`.
pub fn cong2_exact(m: u32) -> Result<BigInt> {
    let mut sum = BigRational::zero();
    for x1 in 0..=m + 1 {
        let x2 = m + 1 - x1;
        let diff = BigInt::from(i64::from(x1) - i64::from(x2));
        sum += BigRational::new(&diff * &diff, factorial(x1.into()) * factorial(x2.into()));
    }
    let value = sum * BigRational::new(factorial(m.into()), BigInt::from(2));
    let expected = BigInt::one() << m;
    if !value.is_integer() || value.to_integer() != expected {
        return Err(Error::invariant(format!("cong2 sum for m={m} is {value}, not 2^{m}")));
    }
    Ok(expected)
}

/// JSON form of a correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceRecord {
    pub schema: u32,
    pub source: Factor,
    pub target: Factor,
    pub codim: u32,
    pub terms: Vec<crate::serial::TermRecord>,
}

impl From<&Correspondence> for CorrespondenceRecord {
    fn from(c: &Correspondence) -> Self {
        CorrespondenceRecord {
            schema: SCHEMA_VERSION,
            source: c.source,
            target: c.target,
            codim: c.codim(),
            terms: crate::serial::terms_of(&c.cycle),
        }
    }
}

impl TryFrom<&CorrespondenceRecord> for Correspondence {
    type Error = Error;

    fn try_from(r: &CorrespondenceRecord) -> Result<Self> {
        if r.schema != SCHEMA_VERSION {
            return Err(Error::contract(format!("unknown schema version {}", r.schema)));
        }
        r.source.validate()?;
        r.target.validate()?;
        let space = Space::Product(r.source, r.target);
        let cycle = crate::serial::cycle_from_terms(space, r.codim, &r.terms)?;
        Correspondence::new(r.source, r.target, cycle)
    }
}

/// JSON form of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub schema: u32,
    pub n: u32,
    pub d: u32,
    pub r: i64,
    pub route: Route,
    pub sign_case: Option<SignCase>,
    pub verdict: Verdict,
    pub witness: ObstructionWitness,
    pub alpha: Option<CorrespondenceRecord>,
    pub beta: Option<CorrespondenceRecord>,
    pub composition: Option<CycleRecord>,
    pub projector: Option<CorrespondenceRecord>,
}

impl From<&DecompositionCertificate> for CertificateRecord {
    fn from(c: &DecompositionCertificate) -> Self {
        CertificateRecord {
            schema: SCHEMA_VERSION,
            n: c.n,
            d: c.d,
            r: c.r,
            route: c.route,
            sign_case: c.sign_case,
            verdict: c.verdict,
            witness: c.witness.clone(),
            alpha: c.alpha.as_ref().map(Into::into),
            beta: c.beta.as_ref().map(Into::into),
            composition: c.composition.as_ref().map(Into::into),
            projector: c.projector.as_ref().map(Into::into),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{count_ssyt, count_syt, rs_identity, shapes};
    use crate::partitions::jump_sequence;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        let g = Correspondence::from_cycle(g_cycle(2, 5, 3).unwrap()).unwrap();
        let gt = transpose(&g);
        assert_eq!(gt.source(), g.target());
        assert_eq!(transpose(&gt), g);
        let m = Monomial::Pair(Basis::H(1), Basis::Omega(p(&[3, 2])));
        assert_eq!(gt.cycle().coefficient(&m.swapped()), g.cycle().coefficient(&m));
        // g^t = sum (-1)^m (r^m d_{mu'}) omega_mu x H^m
        for (mono, c) in gt.cycle().terms() {
            let Monomial::Pair(Basis::Omega(_), Basis::H(h)) = mono else { panic!() };
            let dcoef = c * Pow::pow(&big(-1), *h) / Pow::pow(&big(3), *h);
            assert!(dcoef > BigInt::zero());
        }
    }

    #[test]
    fn diagonal_is_identity() {
        for n in 2..8 {
            let delta = diagonal_projective(n).unwrap();
            assert_eq!(compose(&delta, &delta).unwrap(), delta);
            assert_eq!(transpose(&delta), delta);
        }
        let two = diagonal_projective(2).unwrap();
        assert_eq!(two.cycle().len(), 2);
        assert_eq!(two.cycle().coefficient(&Monomial::Pair(Basis::H(1), Basis::H(0))), BigInt::one());

        let f = Correspondence::from_cycle(f_cycle(2, 5, SignCase::PlusOne).unwrap()).unwrap();
        assert_eq!(compose(&f, &diagonal_projective(5).unwrap()).unwrap(), f);
    }

    #[test]
    fn single_term_composition() {
        let (pf, gf) = pg_factors(2, 5).unwrap();
        let a = Correspondence::new(
            pf,
            gf,
            CycleClass::from_terms(Space::Product(pf, gf), 3, [(Monomial::Pair(Basis::H(1), Basis::Omega(p(&[2]))), big(1))]).unwrap(),
        )
        .unwrap();
        let mu = dual_in_box(&p(&[2]), BoxShape::grassmannian(2, 5).unwrap()).unwrap();
        let b = Correspondence::new(
            gf,
            pf,
            CycleClass::from_terms(Space::Product(gf, pf), 6, [(Monomial::Pair(Basis::Omega(mu), Basis::H(2)), big(1))]).unwrap(),
        )
        .unwrap();
        let c = compose(&b, &a).unwrap();
        assert_eq!(c.cycle().len(), 1);
        assert_eq!(c.cycle().coefficient(&Monomial::Pair(Basis::H(1), Basis::H(2))), big(1));
        assert!(matches!(compose(&a, &a), Err(Error::Contract(_))));
    }

    #[test]
    fn criterion_examples() {
        assert!(criterion(5, 2, 3));
        assert!(!criterion(5, 2, 1));
        assert!(criterion(7, 3, 2));
        assert!(criterion(7, 3, -2));
    }

    #[test]
    fn obstruction_examples() {
        assert!(!obstruction_scan(5, 2, 1).unwrap());
        let w = obstruction_witness(5, 2, 3).unwrap();
        assert_eq!(w.unit_multiplier, Some(1));
        assert_eq!((w.g0.as_str(), w.g1.as_str()), ("1", "-6"));
        assert!(matches!(obstruction_scan(9, 3, 1), Err(Error::Unsupported(_))));
        for n in [5u32, 7, 11, 13] {
            for d in 1..n {
                for r in 0..n as i64 {
                    assert_eq!(obstruction_scan(n, d, r).unwrap(), criterion(n, d, r), "({n},{d},{r})");
                }
            }
        }
    }

    #[test]
    fn rational_generator_examples() {
        let top = rational_generators(5, 2, 3, 6).unwrap();
        assert_eq!(top.generators.len(), 1);
        assert_eq!(top.generators[0].cycle, g_cycle(2, 5, 3).unwrap());
        assert!(top.generators[0].touches_top);
        let sb = rational_generators(5, 1, 2, 4).unwrap();
        assert_eq!(sb.generators.len(), 1);
        let zero = rational_generators(5, 2, 3, 0).unwrap();
        assert_eq!(zero.cycles().cloned().collect::<Vec<_>>(), vec![CycleClass::one(zero.generators[0].cycle.space())]);
        assert!(matches!(rational_generators(9, 2, 4, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn composite_generator_examples() {
        let set = composite_generators_d2(9, 4).unwrap();
        let shape = BoxShape::grassmannian(2, 9).unwrap();
        let top = shape.area();
        // partitions (a, b), 7 >= a >= b >= 0, a + b = w
        let count = |w: u32| (0..=7u32).filter(|&b| w >= 2 * b && w - b <= 7).count();
        let expected: usize = (top - 8..=top).filter(|&w| w != top - 1).map(count).sum();
        assert_eq!(set.generators.len(), expected);
        assert_eq!(set.excluded.len(), count(top - 1));
        let touching: Vec<_> = set.generators.iter().filter(|g| g.touches_top).collect();
        assert_eq!(touching.len(), 1);
        assert_eq!(touching[0].cycle, g_cycle(2, 9, 4).unwrap());
        assert_eq!(touching[0].scale, BigInt::one());
        assert!(set.generators.iter().all(|g| g.cycle.codim() == top));
        assert!(matches!(composite_generators_d2(8, 1), Err(Error::Unsupported(_))));
        assert!(matches!(composite_generators_d2(3, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn normalize_layer_examples() {
        assert_eq!(normalize_layer(&[big(3), big(3)], 5).unwrap(), vec![big(8), big(3)]);
        assert_eq!(normalize_layer(&[big(1)], 5).unwrap(), vec![big(1)]);
        assert_eq!(normalize_layer(&[big(6)], 5).unwrap(), vec![big(1)]);
        assert_eq!(normalize_layer(&[big(-6)], 5).unwrap(), vec![big(-1)]);
        assert!(normalize_layer(&[big(10), big(4)], 5).is_err());
        assert!(normalize_layer(&[big(3)], 5).is_err());
        assert_eq!(normalize_layer(&[big(6), big(10), big(15)], 7).unwrap(), vec![big(6), big(10), big(15)]);
    }

    #[test]
    fn normalize_alpha_properties() {
        let f = Correspondence::from_cycle(f_cycle(2, 7, SignCase::PlusOne).unwrap()).unwrap();
        assert_eq!(normalize_alpha(&f, 7).unwrap(), f);
        for (n, d) in [(7u32, 3u32), (11, 3), (11, 4), (11, 5), (13, 4), (13, 6)] {
            let f = Correspondence::from_cycle(f_cycle(d, n, SignCase::MinusOne).unwrap()).unwrap();
            let alpha = normalize_alpha(&f, n).unwrap();
            let modulus = big(n.into());
            let diff = alpha.cycle().sub(f.cycle()).unwrap();
            assert!(diff.divisible_by(&modulus));
            for (m, layer) in layers(&alpha) {
                let g = gcd_all(layer.iter().map(|(_, c)| c));
                assert_eq!(g, BigInt::one());
                if m <= 1 {
                    assert_eq!(layer, layers(&f)[&m]);
                }
            }
        }
    }

    #[test]
    fn lift_beta_layer_example() {
        // a = (2, 3), b = (3, 0), n = 5: S = 6, k = 1, x = (-1, 1) -> b' = (8, -5)
        let (g, x) = extended_gcd_list(&[big(2), big(3)]).unwrap();
        assert_eq!(g, big(1));
        let b: Vec<BigInt> = [3, 0].iter().zip(&x).map(|(b, xi)| big(*b) - big(5) * xi).collect();
        assert_eq!(b, vec![big(8), big(-5)]);
        assert_eq!(big(2) * &b[0] + big(3) * &b[1], big(1));
    }

    #[test]
    fn lift_beta_properties() {
        for (n, d, r) in [(5u32, 2u32, 3i64), (7, 3, 5), (11, 4, 3)] {
            let sign = if (i64::from(d) * r).rem_euclid(n.into()) == 1 { SignCase::PlusOne } else { SignCase::MinusOne };
            let f = Correspondence::from_cycle(f_cycle(d, n, sign).unwrap()).unwrap();
            let alpha = normalize_alpha(&f, n).unwrap();
            let gt = transpose(&Correspondence::from_cycle(g_cycle(d, n, r).unwrap()).unwrap());
            let beta = lift_beta(&gt, &alpha, n).unwrap();
            assert!(beta.cycle().sub(gt.cycle()).unwrap().divisible_by(&big(n.into())));
            let comp = compose(&beta, &alpha).unwrap();
            for m in 0..n {
                assert_eq!(comp.cycle().coefficient(&Monomial::Pair(Basis::H(n - 1 - m), Basis::H(m))), BigInt::one());
            }
        }
        // failing congruence is reported
        let f = Correspondence::from_cycle(f_cycle(2, 5, SignCase::PlusOne).unwrap()).unwrap();
        let gt = transpose(&Correspondence::from_cycle(g_cycle(2, 5, 1).unwrap()).unwrap());
        assert!(matches!(lift_beta(&gt, &f, 5), Err(Error::Contract(_))));
    }

    #[test]
    fn certificate_examples() {
        let c = build_decomposition(5, 2, 2).unwrap();
        assert_eq!(c.verdict, Verdict::Verified);
        assert_eq!(c.sign_case, Some(SignCase::MinusOne));
        let c = build_decomposition(7, 3, 5).unwrap();
        assert_eq!(c.verdict, Verdict::Verified);
        assert_eq!(c.sign_case, Some(SignCase::PlusOne));
        let c = build_decomposition(5, 2, 1).unwrap();
        assert_eq!(c.verdict, Verdict::CriterionFailed);
        assert!(c.alpha.is_none());
        assert!(matches!(build_decomposition(6, 3, 1), Err(Error::Unsupported(_))));
        assert!(matches!(build_decomposition(9, 3, 1), Err(Error::Unsupported(_))));
        assert!(matches!(build_decomposition(5, 0, 1), Err(Error::Contract(_))));
        assert!(matches!(build_decomposition(5, 5, 1), Err(Error::Contract(_))));
    }

    #[test]
    fn certificate_composition_is_diagonal() {
        let c = build_decomposition(5, 2, 3).unwrap();
        let comp = c.composition.unwrap();
        assert_eq!(comp, diagonal_projective(5).unwrap().cycle().clone());
    }

    #[test]
    fn all_prime_cases_up_to_13_certify() {
        for n in [2u32, 3, 5, 7, 11, 13] {
            for d in 1..n {
                for r in 1..n as i64 {
                    let cert = build_decomposition(n, d, r).unwrap();
                    let expected = if criterion(n, d, r) { Verdict::Verified } else { Verdict::CriterionFailed };
                    assert_eq!(cert.verdict, expected, "({n},{d},{r})");
                }
            }
        }
    }

    #[test]
    fn sb_examples() {
        assert!(sb_iso_criterion(5, 4).unwrap());
        assert!(!sb_iso_criterion(5, 2).unwrap());
        assert!(sb_iso_criterion(7, 1).unwrap());
        assert!(sb_iso_criterion(6, 1).is_err());
        for n in [2u32, 3, 5, 7] {
            assert!(sb_indecomposable(n).unwrap());
        }
        assert!(sb_indecomposable(9).is_err());
    }

    #[test]
    fn congruence_examples() {
        let c = verify_congruence(5, 2, 3).unwrap();
        assert_eq!(c.lhs, big(8));
        assert!(c.holds);
        let c = verify_congruence(5, 2, 4).unwrap();
        assert_eq!(c.lhs, big(11));
        assert!(c.holds);
        for n in [5u32, 7, 9, 11, 15] {
            for m in 0..n - 1 {
                assert_eq!(verify_congruence(n, 2, m).unwrap().lhs, big(1) << m);
            }
            assert_eq!(verify_congruence(n, 2, n - 1).unwrap().lhs, (big(1) << (n - 1)) - big(n.into()));
        }
        assert!(verify_congruence(5, 3, 1).is_err());
        assert!(verify_congruence(5, 2, 5).is_err());
    }

    #[test]
    fn cong2_examples() {
        assert_eq!(cong2_exact(0).unwrap(), big(1));
        assert_eq!(cong2_exact(3).unwrap(), big(8));
        assert_eq!(cong2_exact(20).unwrap(), big(1 << 20));
    }

    #[test]
    fn rs_sum_reduces_to_congruence_mod_n() {
        // the shapes dropped when restricting the RS sum to the box contribute
        // a multiple of n
        for n in [5u32, 7, 11, 13] {
            for d in 2..=n / 2 {
                for m in 0..n {
                    let (full, _) = rs_identity(d, m).unwrap();
                    let mut restricted = BigInt::zero();
                    for xi in shapes(d, m) {
                        if jump_sequence(&xi, d as usize)[d as usize - 1] < i64::from(n) {
                            restricted += count_ssyt(&xi, d).unwrap() * count_syt(&xi);
                        }
                    }
                    assert!((full - &restricted).is_multiple_of(&big(n.into())));
                    assert_eq!(restricted, verify_congruence(n, d, m).unwrap().lhs);
                }
            }
        }
    }

    #[test]
    fn certificate_record_round_trip() {
        let cert = build_decomposition(5, 2, 3).unwrap();
        let rec = CertificateRecord::from(&cert);
        let text = serde_json::to_string(&rec).unwrap();
        let back: CertificateRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
        let alpha = Correspondence::try_from(back.alpha.as_ref().unwrap()).unwrap();
        assert_eq!(Some(alpha), cert.alpha);
        assert_eq!(serde_json::to_string(&CertificateRecord::from(&build_decomposition(5, 2, 3).unwrap())).unwrap(), text);
    }

    #[test]
    fn increasing_set_enumeration() {
        assert_eq!(increasing_sets(2, 4, 4), vec![vec![0, 4], vec![1, 3]]);
        assert_eq!(increasing_sets(3, 3, 3), vec![vec![0, 1, 2]]);
        assert!(increasing_sets(2, 2, 6).is_empty());
    }
}
