//! Root location for integer polynomials.
//!
//! Complex roots come from a simultaneous (Aberth) iteration in double
//! precision followed by polishing sweeps whose Newton ratios are computed
//! from exact evaluations at the current dyadic iterates. Before iterating,
//! the polynomial is split into exact square-free factors, so every factor
//! has simple roots and multiplicities are read off the factorisation, and
//! each factor is recentred at `x = -1` where the roots of total domination
//! polynomials accumulate.
//!
//! Real roots are counted exactly with Sturm sequences; integer roots are
//! found by exact evaluation.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::enumeration::{total_domination_polynomial, EnumerationConfig};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::verify::{CheckReport, Level};

/// Iteration stops once every correction is below `STEP_TOLERANCE * (1 + |z|)`.
pub const STEP_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1000;
/// Largest accepted relative backward error `|p(z)| / Σ |a_i| |z|^i`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;
/// Coefficients beyond this magnitude are not converted to floating point.
pub const MAX_COEFFICIENT: f64 = 1e300;
/// Absolute slack allowed on disc-bound checks.
pub const DISC_SLACK: f64 = 1e-6;

const POLISH_SWEEPS: usize = 40;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    pub residual: f64,
    pub converged: bool,
}

impl Root {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Roots of a polynomial: the power of `x` split off first, then the
/// remaining roots with multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub zero_multiplicity: usize,
    pub roots: Vec<Root>,
}

impl RootSet {
    /// `zero_multiplicity + Σ multiplicities`.
    pub fn degree(&self) -> usize {
        self.zero_multiplicity + self.roots.iter().map(|r| r.multiplicity).sum::<usize>()
    }

    pub fn all_converged(&self) -> bool {
        self.roots.iter().all(|r| r.converged)
    }

    /// Nonzero roots repeated by multiplicity.
    pub fn nonzero_points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.z(), r.multiplicity))
    }
}

/// Square-free factors `(f_i, i)` with `p = c · Π f_i^i`, each `f_i`
/// primitive with positive leading coefficient. Factors of degree zero are
/// omitted.
pub fn square_free_factors(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut g = p.gcd(&p.derivative());
    let mut w = p.exact_quotient_primitive(&g);
    let mut out = Vec::new();
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&g);
        let factor = w.exact_quotient_primitive(&y);
        if factor.degree().unwrap_or(0) > 0 {
            out.push((factor, i));
        }
        g = g.exact_quotient_primitive(&y);
        w = y;
        i += 1;
    }
    out
}

/// `p / gcd(p, p')`, primitive.
pub fn square_free_part(p: &Polynomial) -> Polynomial {
    if p.degree().unwrap_or(0) == 0 {
        return p.primitive_part();
    }
    p.exact_quotient_primitive(&p.gcd(&p.derivative()))
}

/// `x · 2^e` without intermediate overflow.
fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

/// `num / den` rounded to `f64`, for `den > 0`.
fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let shift = 64 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    ldexp(q.to_f64().unwrap_or(f64::NAN), -shift)
}

/// A complex number `(re + i·im) / 2^scale` with integer parts.
struct Dyadic {
    re: BigInt,
    im: BigInt,
    scale: u64,
}

impl Dyadic {
    fn from_complex(z: Complex64) -> Self {
        let parts = [z.re, z.im].map(|v| {
            let (mant, exp, sign) = v.integer_decode();
            (
                BigInt::from(mant) * i64::from(sign),
                i64::from(exp),
                mant == 0,
            )
        });
        let scale = parts
            .iter()
            .filter(|p| !p.2)
            .map(|p| -p.1)
            .max()
            .unwrap_or(0)
            .max(0);
        let lift = |(m, e, zero): &(BigInt, i64, bool)| {
            if *zero {
                BigInt::zero()
            } else {
                m << (e + scale) as u64
            }
        };
        Dyadic {
            re: lift(&parts[0]),
            im: lift(&parts[1]),
            scale: scale as u64,
        }
    }
}

/// Exact Horner evaluation: returns `(H_re, H_im)` with
/// `p(z) = H / 2^(scale · deg p)`.
fn eval_dyadic(coeffs: &[BigInt], z: &Dyadic) -> (BigInt, BigInt) {
    let Some((lead, rest)) = coeffs.split_last() else {
        return (BigInt::zero(), BigInt::zero());
    };
    let (mut hr, mut hi) = (lead.clone(), BigInt::zero());
    for (step, c) in rest.iter().rev().enumerate() {
        let nr = &hr * &z.re - &hi * &z.im;
        let ni = &hr * &z.im + &hi * &z.re;
        hr = nr + (c << (z.scale * (step as u64 + 1)));
        hi = ni;
    }
    (hr, hi)
}

/// Newton ratio `p(z) / p'(z)` from exact evaluations, rounded once.
fn exact_newton_ratio(p: &[BigInt], dp: &[BigInt], z: Complex64) -> Option<Complex64> {
    let d = Dyadic::from_complex(z);
    let (hr, hi) = eval_dyadic(p, &d);
    let (gr, gi) = eval_dyadic(dp, &d);
    // p/p' = H / (G 2^scale) = H conj(G) / (|G|^2 2^scale)
    let den = (&gr * &gr + &gi * &gi) << d.scale;
    if den.is_zero() {
        return None;
    }
    let nr = &hr * &gr + &hi * &gi;
    let ni = &hi * &gr - &hr * &gi;
    Some(Complex64::new(
        ratio_to_f64(&nr, &den),
        ratio_to_f64(&ni, &den),
    ))
}

/// `|p(z)| / Σ |a_i| |z|^i` with the numerator evaluated exactly.
fn relative_residual(p: &Polynomial, z: Complex64) -> f64 {
    let coeffs = p.coeffs();
    let deg = coeffs.len().saturating_sub(1) as u64;
    let d = Dyadic::from_complex(z);
    let (hr, hi) = eval_dyadic(coeffs, &d);
    let bits = coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(60);
    let magnitude_sq = &hr * &hr + &hi * &hi;
    let num = ratio_to_f64(
        &magnitude_sq,
        &(BigInt::one() << (2 * (d.scale * deg + shift))),
    )
    .sqrt();
    let r = z.norm();
    let den = coeffs.iter().rev().fold(0.0, |acc, c| {
        acc * r + ratio_to_f64(&c.abs(), &(BigInt::one() << shift))
    });
    if den == 0.0 {
        return if num == 0.0 { 0.0 } else { f64::INFINITY };
    }
    num / den
}

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn aberth_correction(ratio: Complex64, i: usize, roots: &[Complex64]) -> Complex64 {
    let zi = roots[i];
    let repulsion: Complex64 = roots
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &zj)| (zi - zj).inv())
        .sum();
    let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
    if step.is_finite() {
        step
    } else {
        ratio
    }
}

fn initial_guesses(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d].abs();
    let tail = coeffs[0].abs();
    let mut radius = (tail / lead).powf(1.0 / d as f64);
    if !radius.is_finite() || radius == 0.0 {
        radius = 1.0;
    }
    (0..d)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / d as f64 + PI / (2.0 * d as f64) + 0.1;
            Complex64::from_polar(radius * (1.0 + 0.01 * (k % 3) as f64), theta)
        })
        .collect()
}

fn within_tolerance(step: Complex64, z: Complex64) -> bool {
    step.norm() <= STEP_TOLERANCE * (1.0 + z.norm())
}

/// Roots of a square-free integer polynomial of degree >= 1, with
/// convergence flags.
fn solve_square_free(p: &Polynomial) -> Vec<(Complex64, bool)> {
    let coeffs = p.coeffs();
    let deg = coeffs.len() - 1;
    if deg == 1 {
        let mut num = -coeffs[0].clone();
        let mut den = coeffs[1].clone();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        return vec![(Complex64::new(ratio_to_f64(&num, &den), 0.0), true)];
    }

    let bits = coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
    let unit = BigInt::one() << bits.saturating_sub(900);
    let floats: Vec<f64> = coeffs.iter().map(|c| ratio_to_f64(c, &unit)).collect();

    let mut roots = initial_guesses(&floats);
    for _ in 0..MAX_ITERATIONS {
        let mut done = true;
        for i in 0..deg {
            let (pv, dpv) = horner_with_derivative(&floats, roots[i]);
            if pv == Complex64::new(0.0, 0.0) {
                continue;
            }
            let step = aberth_correction(pv / dpv, i, &roots);
            let next = roots[i] - step;
            if next.is_finite() {
                roots[i] = next;
            }
            done &= within_tolerance(step, roots[i]);
        }
        if done {
            break;
        }
    }

    let derivative = p.derivative();
    let (pc, dc) = (coeffs, derivative.coeffs());
    let mut converged = vec![false; deg];
    for _ in 0..POLISH_SWEEPS {
        let ratios: Vec<Option<Complex64>> = roots
            .iter()
            .map(|&z| exact_newton_ratio(pc, dc, z))
            .collect();
        for i in 0..deg {
            let Some(ratio) = ratios[i] else {
                converged[i] = false;
                continue;
            };
            let step = aberth_correction(ratio, i, &roots);
            converged[i] = within_tolerance(step, roots[i]);
            let next = roots[i] - step;
            if next.is_finite() {
                roots[i] = next;
            }
        }
        if converged.iter().all(|&c| c) {
            break;
        }
    }
    roots.into_iter().zip(converged).collect()
}

/// All complex roots of `p` with multiplicities and per-root residuals.
pub fn find_roots(p: &Polynomial) -> Result<RootSet> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return invalid("root finding needs degree >= 1");
    }
    if p.max_abs_coeff_f64() > MAX_COEFFICIENT {
        return Err(Error::CoefficientOverflow);
    }
    let (zero_multiplicity, q) = p.deflate_zero()?;
    let mut roots = Vec::new();
    let recentre = BigInt::from(-1);
    for (factor, multiplicity) in square_free_factors(&q) {
        // Solve s(y) = factor(y - 1), then x = y - 1.
        let shifted = factor.taylor_shift(&recentre);
        for (y, converged) in solve_square_free(&shifted) {
            let x = y - 1.0;
            let residual = relative_residual(&q, x);
            roots.push(Root {
                re: x.re,
                im: x.im,
                multiplicity,
                residual,
                converged: converged && residual <= RESIDUAL_TOLERANCE,
            });
        }
    }
    roots.sort_by(|a, b| {
        a.re.total_cmp(&b.re)
            .then(a.im.total_cmp(&b.im))
            .then(a.multiplicity.cmp(&b.multiplicity))
    });
    Ok(RootSet {
        zero_multiplicity,
        roots,
    })
}

/// Integer roots `z` of `p` with `|z + 1| <= ceil(radius)`, ascending.
///
/// Nonzero integer roots divide the constant term of `p / x^k`, which
/// filters the scan before any exact evaluation.
pub fn integer_roots(p: &Polynomial, radius: f64) -> Result<Vec<i64>> {
    let (k, q) = p.deflate_zero()?;
    if !(0.0..=1e15).contains(&radius) {
        return invalid(format!("integer-root radius {radius} out of range"));
    }
    let r = radius.ceil() as i64;
    let c0 = q.coeff(0);
    let small = c0.to_i128();
    let mut out = Vec::new();
    for z in (-1 - r)..=(-1 + r) {
        if z == 0 {
            if k > 0 {
                out.push(0);
            }
            continue;
        }
        let divides = match small {
            Some(c) => c % i128::from(z) == 0,
            None => (&c0 % BigInt::from(z)).is_zero(),
        };
        if divides && q.eval_int(&BigInt::from(z)).is_zero() {
            out.push(z);
        }
    }
    Ok(out)
}

/// One end of a real interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Bound {
    pub fn finite(num: i64, den: i64) -> Self {
        Bound::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn rank(&self) -> (i8, Option<&BigRational>) {
        match self {
            Bound::NegInfinity => (-1, None),
            Bound::Finite(q) => (0, Some(q)),
            Bound::PosInfinity => (1, None),
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b) = (self.rank(), other.rank());
        Some(a.0.cmp(&b.0).then_with(|| match (a.1, b.1) {
            (Some(x), Some(y)) => x.cmp(y),
            _ => Ordering::Equal,
        }))
    }
}

/// Sturm sequence of a square-free polynomial: `s_0 = p`, `s_1 = p'`,
/// `s_{k+1} = -rem(s_{k-1}, s_k)`, each term rescaled by a positive
/// constant to stay primitive.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let a = &chain[chain.len() - 2];
        let b = &chain[chain.len() - 1];
        let (_, r) = a.pseudo_divrem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^e · rem; undo the sign of lc(b)^e.
        let e = a.degree().unwrap() - b.degree().unwrap() + 1;
        let flips = b.leading_coeff().unwrap().is_negative() && e % 2 == 1;
        let content = r.content();
        let scaled = Polynomial::new(r.coeffs().iter().map(|c| c / &content).collect());
        chain.push(if flips { scaled } else { -&scaled });
    }
    chain
}

fn sign_at_bound(p: &Polynomial, at: &Bound) -> Sign {
    let lc = p.leading_coeff().map_or(Sign::NoSign, BigInt::sign);
    match at {
        Bound::PosInfinity => lc,
        Bound::NegInfinity if p.degree().unwrap_or(0) % 2 == 1 => -lc,
        Bound::NegInfinity => lc,
        Bound::Finite(q) => p.sign_at(q),
    }
}

fn sign_variations(chain: &[Polynomial], at: &Bound) -> usize {
    let signs: Vec<Sign> = chain
        .iter()
        .map(|p| sign_at_bound(p, at))
        .filter(|&s| s != Sign::NoSign)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn count_real_roots(p: &Polynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return invalid("interval must satisfy lo < hi");
    }
    for b in [lo, hi] {
        if let Bound::Finite(q) = b {
            if p.sign_at(q) == Sign::NoSign {
                return Err(Error::RootAtEndpoint(q.to_string()));
            }
        }
    }
    let sf = square_free_part(p);
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&sf);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

/// Number of distinct nonzero real roots of `p`.
pub fn count_nonzero_real_roots(p: &Polynomial) -> Result<usize> {
    let (_, q) = p.deflate_zero()?;
    count_real_roots(&q, &Bound::NegInfinity, &Bound::PosInfinity)
}

/// `(2^n - 1)^(1/δ)`: every total domination root `z` has `|z + 1|` at most
/// this.
pub fn disc_bound_radius(g: &Graph) -> Result<f64> {
    let delta = g.min_degree()?;
    if delta == 0 {
        return invalid("disc bound needs minimum degree >= 1");
    }
    let n = g.order() as f64;
    let log = n * std::f64::consts::LN_2 + (-(2f64.powf(-n))).ln_1p();
    Ok((log / delta as f64).exp())
}

/// Checks `|z + 1| <= (2^n - 1)^(1/δ)` for every computed root of `D_t(G)`.
pub fn check_disc_bound(g: &Graph, cfg: &EnumerationConfig) -> Result<CheckReport> {
    if g.order() > cfg.cap {
        return Ok(
            CheckReport::new("disc_bound", Level::Theorem, crate::verify::describe(g))
                .skip("order exceeds enumeration cap"),
        );
    }
    check_disc_bound_for(g, &total_domination_polynomial(g, cfg)?)
}

/// [`check_disc_bound`] with `D_t(G)` supplied, e.g. from a closed form.
pub fn check_disc_bound_for(g: &Graph, dt: &Polynomial) -> Result<CheckReport> {
    let mut report = CheckReport::new("disc_bound", Level::Theorem, crate::verify::describe(g));
    let radius = disc_bound_radius(g)?;
    let roots = find_roots(dt)?;
    let mut max_dist: f64 = if roots.zero_multiplicity > 0 {
        1.0
    } else {
        0.0
    };
    let mut violations = Vec::new();
    let mut unconverged = 0;
    for r in &roots.roots {
        if !r.converged {
            unconverged += 1;
            continue;
        }
        let dist = (r.z() + 1.0).norm();
        max_dist = max_dist.max(dist);
        if dist > radius + DISC_SLACK {
            violations.push(serde_json::json!({"re": r.re, "im": r.im, "distance": dist}));
        }
    }
    report = report
        .metric("radius", radius)
        .metric("max_distance", max_dist)
        .metric("unconverged_roots", unconverged);
    Ok(if !violations.is_empty() {
        report.fail(serde_json::json!({
            "polynomial": dt,
            "roots": violations,
        }))
    } else if unconverged > 0 {
        report.unconverged()
    } else {
        report
    })
}
