//! Truncated series in one parameter `t` with coefficients in `T(M)`:
//! exponentials, the series `α(tx)`, the flow `Y′ = Y.α`, and the
//! Grossman–Larson Magnus expansion.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::report::CheckLine;
use crate::tensor::{
    antipode_star, gl_lie_bracket, gl_star, is_primitive, kmap_tensor, scalar, triangle, Generators, MagmaTree,
    Scalar, TensorError, TensorPoly,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagnusError {
    #[error("series has a nonzero constant term")]
    ConstantTerm,
    #[error("series must start with the unit")]
    NotUnitStart,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// `Σ_{k ≤ order} c_k t^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<TensorPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![TensorPoly::zero(); order + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<TensorPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &TensorPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[TensorPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, p: TensorPoly) {
        self.coeffs[k] = p;
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, TensorPoly::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, TensorPoly::sub)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&TensorPoly, &TensorPoly) -> TensorPoly) -> Self {
        assert_eq!(self.order(), other.order(), "series orders differ");
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect() }
    }

    /// Cauchy product through a bilinear operation, dropping `t^{>order}`.
    pub fn product_with(&self, other: &Self, op: impl Fn(&TensorPoly, &TensorPoly) -> TensorPoly) -> Self {
        let n = self.order().min(other.order());
        let mut out = TruncatedSeries::zero(n);
        for k in 0..=n {
            let mut c = TensorPoly::zero();
            for i in 0..=k {
                if self.coeffs[i].is_zero() || other.coeffs[k - i].is_zero() {
                    continue;
                }
                c = c.add(&op(&self.coeffs[i], &other.coeffs[k - i]));
            }
            out.coeffs[k] = c;
        }
        out
    }

    pub fn concat(&self, other: &Self) -> Self {
        self.product_with(other, TensorPoly::concat)
    }

    pub fn star(&self, other: &Self) -> Self {
        self.product_with(other, gl_star)
    }

    pub fn triangle(&self, other: &Self) -> Self {
        self.product_with(other, triangle)
    }

    /// Applies a linear map to every coefficient.
    pub fn map(&self, f: impl Fn(&TensorPoly) -> TensorPoly) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// `d/dt`, losing the top order.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return TruncatedSeries::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=self.order()).map(|k| self.coeffs[k].scale(&scalar(k as i64))).collect(),
        }
    }

    /// `∫₀ᵗ`, truncated back to the same order.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![TensorPoly::zero()];
        for k in 0..self.order() {
            coeffs.push(self.coeffs[k].scale(&Scalar::new(BigInt::one(), BigInt::from(k + 1))));
        }
        TruncatedSeries { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Prints `t^k: <poly>` lines.
    pub fn format(&self, gens: &Generators) -> Vec<String> {
        self.coeffs.iter().enumerate().map(|(k, p)| format!("t^{k}: {}", gens.format_poly(p))).collect()
    }
}

fn factorial(n: usize) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| acc * scalar(k as i64))
}

/// `exp^.(tx) = Σ t^k x^k / k!`.
pub fn exp_dot_series(x: &MagmaTree, order: usize) -> TruncatedSeries {
    let letter = TensorPoly::letter(x.clone());
    let mut power = TensorPoly::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        coeffs.push(power.scale(&(Scalar::one() / factorial(k))));
        power = power.concat(&letter);
    }
    TruncatedSeries { coeffs }
}

/// `exp^*(Z) = Σ Z^{*n} / n!` for `Z` without constant term.
pub fn exp_star_series(z: &TruncatedSeries) -> Result<TruncatedSeries, MagnusError> {
    exp_with(z, TruncatedSeries::star)
}

/// `exp^.(Z)` with the concatenation product.
pub fn exp_dot_of(z: &TruncatedSeries) -> Result<TruncatedSeries, MagnusError> {
    exp_with(z, TruncatedSeries::concat)
}

fn exp_with(
    z: &TruncatedSeries,
    mul: impl Fn(&TruncatedSeries, &TruncatedSeries) -> TruncatedSeries,
) -> Result<TruncatedSeries, MagnusError> {
    if !z.coeff(0).is_zero() {
        return Err(MagnusError::ConstantTerm);
    }
    let n = z.order();
    let mut one = TruncatedSeries::zero(n);
    one.set_coeff(0, TensorPoly::one());
    let mut out = one.clone();
    let mut power = one;
    // Z has no constant term, so Z^{n+1} vanishes through order n.
    for k in 1..=n {
        power = mul(&power, z);
        out = out.add(&power.scale(&(Scalar::one() / factorial(k))));
    }
    Ok(out)
}

/// `log^.(Y) = Σ (−1)^{n+1} (Y − 𝟏)^n / n` for `Y(0) = 𝟏`.
pub fn log_dot(y: &TruncatedSeries) -> Result<TruncatedSeries, MagnusError> {
    if *y.coeff(0) != TensorPoly::one() {
        return Err(MagnusError::NotUnitStart);
    }
    let mut z = y.clone();
    z.set_coeff(0, TensorPoly::zero());
    let mut out = TruncatedSeries::zero(y.order());
    let mut power = z.clone();
    for k in 1..=y.order() {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&Scalar::new(BigInt::from(sign), BigInt::from(k))));
        power = power.concat(&z);
    }
    Ok(out)
}

/// Bernoulli numbers with `B̃₁ = +1/2`.
pub fn bernoulli_modified(n: usize) -> Scalar {
    // Σ_{k<m+1} C(m+1,k) B_k = 0 gives the convention B₁ = −1/2.
    let mut b: Vec<Scalar> = vec![Scalar::one()];
    for m in 1..=n {
        let mut binom = BigInt::one();
        let mut sum = Scalar::zero();
        for (k, bk) in b.iter().enumerate() {
            sum += Scalar::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-sum / Scalar::from_integer(BigInt::from(m + 1)));
    }
    let v = b[n].clone();
    if n == 1 {
        -v
    } else {
        v
    }
}

/// `α(tx) = S_*(exp^.(tx)) ▷ x`.
pub fn alpha_series(x: &MagmaTree, order: usize) -> TruncatedSeries {
    let letter = TensorPoly::letter(x.clone());
    exp_dot_series(x, order).map(|c| triangle(&antipode_star(c), &letter))
}

/// Checks `(k+1) α_{k+1} = −Σ_{i+j=k} α_i ▷ α_j`; reports the first failing `k`.
pub fn check_alpha_ode(alpha: &TruncatedSeries) -> Result<(), usize> {
    let sq = alpha.triangle(alpha);
    for k in 0..alpha.order() {
        if alpha.coeff(k + 1).scale(&scalar(k as i64 + 1)) != sq.coeff(k).neg() {
            return Err(k);
        }
    }
    Ok(())
}

/// Solves `Y′ = Y.α(tx)`, `Y(0) = 𝟏` order by order.
pub fn solve_right_flow(x: &MagmaTree, order: usize) -> TruncatedSeries {
    let alpha = alpha_series(x, order);
    let mut y = TruncatedSeries::zero(order);
    y.set_coeff(0, TensorPoly::one());
    for k in 0..order {
        let mut c = TensorPoly::zero();
        for i in 0..=k {
            c = c.add(&y.coeff(i).concat(alpha.coeff(k - i)));
        }
        y.set_coeff(k + 1, c.scale(&Scalar::new(BigInt::one(), BigInt::from(k + 1))));
    }
    y
}

/// `Ω_*` from `Ω_* = ∫ Σ_n B̃_n/n! ad^{*n}_{Ω_*}(α)`, solved order by order.
pub fn magnus_gl(x: &MagmaTree, order: usize) -> Result<TruncatedSeries, MagnusError> {
    let alpha = alpha_series(x, order);
    let mut omega = TruncatedSeries::zero(order);
    for k in 0..order {
        // The t^k coefficient of the integrand only involves Ω_1..Ω_k, and
        // ad^{*n} has valuation ≥ n, so n ≤ k suffices.
        let mut rhs = alpha.coeff(k).clone();
        let mut ad = alpha.truncate(k);
        let om = omega.truncate(k);
        for n in 1..=k {
            ad = bracket_series(&om, &ad)?;
            let b = bernoulli_modified(n);
            if !b.is_zero() {
                rhs = rhs.add(&ad.coeff(k).scale(&(b / factorial(n))));
            }
        }
        omega.set_coeff(k + 1, rhs.scale(&Scalar::new(BigInt::one(), BigInt::from(k + 1))));
    }
    Ok(omega)
}

fn bracket_series(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, MagnusError> {
    let n = a.order().min(b.order());
    let mut out = TruncatedSeries::zero(n);
    for k in 0..=n {
        let mut c = TensorPoly::zero();
        for i in 0..=k {
            if a.coeff(i).is_zero() || b.coeff(k - i).is_zero() {
                continue;
            }
            c = c.add(&gl_lie_bracket(a.coeff(i), b.coeff(k - i))?);
        }
        out.set_coeff(k, c);
    }
    Ok(out)
}

/// Computes `log^.(Y)` and returns the first order whose coefficient is not
/// primitive.
pub fn check_primitivity_of_log(y: &TruncatedSeries) -> Result<Result<TruncatedSeries, usize>, MagnusError> {
    let log = log_dot(y)?;
    for (k, c) in log.coeffs().iter().enumerate().skip(1) {
        if !c.is_zero() && !is_primitive(c) {
            return Ok(Err(k));
        }
    }
    Ok(Ok(log))
}

/// Reference values of `B̃₀..B̃₆`.
pub const LISTED_BERNOULLI: [(i64, i64); 7] = [(1, 1), (1, 2), (1, 6), (0, 1), (-1, 30), (0, 1), (1, 42)];

/// All series for one generator through `t^order`, plus one check line per
/// identity.
pub struct MagnusReport {
    pub alpha: TruncatedSeries,
    pub flow: TruncatedSeries,
    pub omega_star: TruncatedSeries,
    pub checks: Vec<CheckLine>,
}

pub fn magnus_report(order: usize) -> Result<MagnusReport, MagnusError> {
    let x = MagmaTree::leaf(0);
    let exp = exp_dot_series(&x, order);
    let alpha = alpha_series(&x, order);
    let flow = solve_right_flow(&x, order);
    let omega_star = magnus_gl(&x, order)?;
    let mut checks = Vec::new();

    let bern = LISTED_BERNOULLI
        .iter()
        .enumerate()
        .find(|(n, (p, q))| bernoulli_modified(*n) != Scalar::new(BigInt::from(*p), BigInt::from(*q)))
        .map(|(n, _)| format!("B̃_{n} = {}", bernoulli_modified(n)));
    checks.push(CheckLine::new("B̃₀..B̃₆ = 1, 1/2, 1/6, 0, −1/30, 0, 1/42", bern.map_or(Ok(()), Err)));

    let letter = TruncatedSeries::from_coeffs(
        std::iter::once(TensorPoly::letter(x.clone())).chain((1..=order).map(|_| TensorPoly::zero())).collect(),
    );
    let dexp = exp.derivative() == exp.concat(&letter).truncate(order.saturating_sub(1));
    checks.push(CheckLine::new(
        "d/dt exp^.(tx) = exp^.(tx).x",
        if dexp || order == 0 { Ok(()) } else { Err("coefficient mismatch".into()) },
    ));
    checks.push(CheckLine::new(
        "α′ = −α▷α",
        check_alpha_ode(&alpha).map_err(|k| format!("first failure at k = {k}")),
    ));
    let k_exp = exp.map(kmap_tensor);
    let flow_ok = (0..=order).find(|&k| flow.coeff(k) != k_exp.coeff(k));
    checks.push(CheckLine::new(
        "Y′ = Y.α solves to K(exp^.(tx))",
        flow_ok.map_or(Ok(()), |k| Err(format!("coefficient t^{k} differs"))),
    ));
    checks.push(CheckLine::new(
        "log^.(Y) primitive in every order",
        check_primitivity_of_log(&flow)?.map(|_| ()).map_err(|k| format!("t^{k} not primitive")),
    ));
    let omega_prim = (1..=order).find(|&k| !omega_star.coeff(k).is_zero() && !is_primitive(omega_star.coeff(k)));
    let exp_omega = exp_star_series(&omega_star)?;
    let mismatch = (0..=order).find(|&k| exp_omega.coeff(k) != exp.coeff(k));
    checks.push(CheckLine::new(
        "exp^*(Ω_*(α(tx))) = exp^.(tx)",
        match (omega_prim, mismatch) {
            (Some(k), _) => Err(format!("Ω_* coefficient t^{k} not primitive")),
            (None, Some(k)) => Err(format!("coefficient t^{k} differs")),
            (None, None) => Ok(()),
        },
    ));
    Ok(MagnusReport { alpha, flow, omega_star, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::ratio;

    fn x() -> MagmaTree {
        MagmaTree::leaf(0)
    }

    fn g() -> Generators {
        Generators::standard(1).unwrap()
    }

    fn p(text: &str) -> TensorPoly {
        g().parse_poly(text).unwrap()
    }

    #[test]
    fn bernoulli_values() {
        let expected = [ratio(1, 1), ratio(1, 2), ratio(1, 6), ratio(0, 1), ratio(-1, 30), ratio(0, 1), ratio(1, 42)];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(bernoulli_modified(n), *e, "n = {n}");
        }
        assert_eq!(bernoulli_modified(8), ratio(-1, 30));
        assert_eq!(bernoulli_modified(7), ratio(0, 1));
    }

    #[test]
    fn exponentials() {
        assert_eq!(exp_dot_series(&x(), 0).coeffs(), [TensorPoly::one()]);
        let e = exp_dot_series(&x(), 3);
        assert_eq!(*e.coeff(2), p("1/2*x.x"));
        assert_eq!(*e.coeff(3), p("1/6*x.x.x"));
        // exp^. of the series t·x reproduces exp_dot_series
        let mut tx = TruncatedSeries::zero(4);
        tx.set_coeff(1, p("x"));
        assert_eq!(exp_dot_of(&tx).unwrap(), exp_dot_series(&x(), 4));
        assert_eq!(log_dot(&exp_dot_series(&x(), 4)).unwrap(), tx);
        let mut bad = TruncatedSeries::zero(2);
        bad.set_coeff(0, p("x"));
        assert_eq!(exp_star_series(&bad), Err(MagnusError::ConstantTerm));
        assert_eq!(log_dot(&bad), Err(MagnusError::NotUnitStart));
    }

    #[test]
    fn series_calculus() {
        let e = exp_dot_series(&x(), 5);
        assert_eq!(e.derivative().integrate().add(&{
            let mut c = TruncatedSeries::zero(4);
            c.set_coeff(0, TensorPoly::one());
            c
        }), e.truncate(4));
    }

    #[test]
    fn alpha_low_orders() {
        let a = alpha_series(&x(), 3);
        assert_eq!(*a.coeff(0), p("x"));
        assert_eq!(*a.coeff(1), p("-(x>x)"));
        // The reduced coproduct of x.x is 2·x⊗x, so S_*(x.x) = −x.x + 2·x*x
        // = x.x + 2·x▷x; then α₂ = (x.x)▷x/2 + (x▷x)▷x with
        // (x.x)▷x = x▷(x▷x) − (x▷x)▷x.
        assert_eq!(antipode_star(&p("1/2*x.x")), p("(x>x) + 1/2*x.x"));
        assert_eq!(*a.coeff(2), p("1/2*(x>(x>x)) + 1/2*((x>x)>x)"));
        for k in 0..=3 {
            assert!(a.coeff(k).is_homogeneous(k + 1));
        }
    }

    #[test]
    fn alpha_ode() {
        let a = alpha_series(&x(), 5);
        assert_eq!(check_alpha_ode(&a), Ok(()));
        let mut bad = a.clone();
        bad.set_coeff(2, a.coeff(2).add(&p("(x>(x>x))")));
        assert_eq!(check_alpha_ode(&bad), Err(1));
    }

    #[test]
    fn flow_matches_kmap() {
        let y = solve_right_flow(&x(), 5);
        assert_eq!(*y.coeff(0), TensorPoly::one());
        assert_eq!(*y.coeff(1), p("x"));
        assert_eq!(*y.coeff(2), p("1/2*x.x - 1/2*(x>x)"));
        assert_eq!(y, exp_dot_series(&x(), 5).map(kmap_tensor));
        assert!(check_primitivity_of_log(&y).unwrap().is_ok());
        let mut bad = y.clone();
        bad.set_coeff(2, p("x.x"));
        assert_eq!(check_primitivity_of_log(&bad).unwrap(), Err(2));
    }

    #[test]
    fn magnus_gl_expansion() {
        let om = magnus_gl(&x(), 5).unwrap();
        assert_eq!(*om.coeff(0), TensorPoly::zero());
        assert_eq!(*om.coeff(1), p("x"));
        // (1/2)(α₁ + (1/2)⟦Ω₁, α₀⟧) with ⟦x, x⟧ = 0
        assert_eq!(*om.coeff(2), p("-1/2*(x>x)"));
        assert_eq!(exp_star_series(&om).unwrap(), exp_dot_series(&x(), 5));
    }

    #[test]
    fn report_passes() {
        let r = magnus_report(5).unwrap();
        for line in &r.checks {
            assert!(line.passed(), "{line}");
        }
        assert_eq!(r.alpha.order(), 5);
        assert_eq!(r.flow.order(), 5);
        assert_eq!(r.omega_star.order(), 5);
    }
}
