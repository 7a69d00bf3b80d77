//! Closed forms for complete multipartite graphs `K_{p_1,…,p_r}` and joins
//! `G_1 ∨ ⋯ ∨ G_r`.
//!
//! With `n = Σ p_i` every vertex of part `i` has degree `d_i = n − p_i`, and
//! for a vertex set `A` meeting part `k` in `t_k` vertices the Laplacian
//! minor `L(A|A)` has
//!
//! ```text
//! det(L(A|A) − xI) = (1 + Σ_k (t_k − p_k)/(n − t_k − x)) · Π_k (n − t_k − x)(n − p_k − x)^{p_k − t_k − 1}
//! ```
//!
//! Resistances, spanning-tree counts and both Kirchhoff indices all fall out
//! of evaluating this at `x = 0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{PartitionSpec, VertexLocator};
use crate::linalg::{rank_one_plus_diag_det, RatMatrix, RatPolynomial};
use crate::rational::{from_usize, int, to_exact_string, Rational};

fn pow_int(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        Rational::one() / num_traits::pow(base.clone(), (-exp) as usize)
    }
}

fn require_connected(spec: &PartitionSpec) -> Result<()> {
    if spec.r() < 2 {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Factored characteristic polynomial `det(L(A|A) − xI)` of a Laplacian minor
/// of `K_{p_1,…,p_r}`, keyed by the intersection counts `t_k = |A ∩ V_k|`.
///
/// Parts with `t_k = p_k` are dropped from both the rational factor and the
/// linear factors: their `(n − t_k − x)` factor cancels the exponent `−1` on
/// `(n − p_k − x)`, and their term in the sum is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredMinorPoly {
    spec: PartitionSpec,
    t: Vec<usize>,
    /// `(t_k − p_k, n − t_k)`: the term `(t_k − p_k)/(n − t_k − x)`.
    rational_factor: Vec<(i64, usize)>,
    /// `(root, multiplicity)` for factors `(root − x)^multiplicity`.
    linear_factors: Vec<(usize, usize)>,
}

impl FactoredMinorPoly {
    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    pub fn rational_factor(&self) -> &[(i64, usize)] {
        &self.rational_factor
    }

    pub fn linear_factors(&self) -> &[(usize, usize)] {
        &self.linear_factors
    }

    /// Dimension of the minor, `n − Σ t_k`.
    pub fn dimension(&self) -> usize {
        self.spec.n() - self.t.iter().sum::<usize>()
    }

    /// Expanded polynomial, computed on the denominator-cleared form
    /// `[Π_k (c_k − x) + Σ_k s_k Π_{j≠k} (c_j − x)] · Π_k (n − p_k − x)^{p_k − t_k − 1}`.
    pub fn expand(&self) -> RatPolynomial {
        let factors: Vec<RatPolynomial> = self
            .rational_factor
            .iter()
            .map(|&(_, root)| RatPolynomial::root_minus_x(from_usize(root)))
            .collect();

        let product_except = |skip: Option<usize>| -> RatPolynomial {
            factors
                .iter()
                .enumerate()
                .filter(|(k, _)| Some(*k) != skip)
                .fold(RatPolynomial::one(), |acc, (_, f)| &acc * f)
        };

        let mut bracket = product_except(None);
        for (k, &(coef, _)) in self.rational_factor.iter().enumerate() {
            let term = product_except(Some(k)).scale(&int(coef));
            bracket = &bracket + &term;
        }

        let n = self.spec.n();
        self.spec
            .parts()
            .iter()
            .zip(&self.t)
            .filter(|(&p, &t)| p > t)
            .fold(bracket, |acc, (&p, &t)| {
                &acc * &RatPolynomial::root_minus_x(from_usize(n - p)).pow(p - t - 1)
            })
    }

    /// Evaluates the polynomial directly from the factored form. Points where
    /// a rational-factor denominator vanishes fall back to the expansion.
    pub fn eval(&self, x: &Rational) -> Rational {
        let shifted: Vec<Rational> = self
            .rational_factor
            .iter()
            .map(|&(_, root)| from_usize(root) - x)
            .collect();
        if shifted.iter().any(Zero::is_zero) {
            return self.expand().eval(x);
        }
        let sum: Rational = self
            .rational_factor
            .iter()
            .zip(&shifted)
            .map(|(&(coef, _), c)| int(coef) / c)
            .sum();
        let linear: Rational = self
            .linear_factors
            .iter()
            .map(|&(root, mult)| num_traits::pow(from_usize(root) - x, mult))
            .product();
        (Rational::one() + sum) * linear
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            spec: String,
            t: &'a [usize],
            rational_factor: &'a [(i64, usize)],
            linear_factors: &'a [(usize, usize)],
            expanded: Vec<String>,
        }
        serde_json::to_value(Repr {
            spec: self.spec.to_string(),
            t: &self.t,
            rational_factor: &self.rational_factor,
            linear_factors: &self.linear_factors,
            expanded: self.expand().to_strings(),
        })
        .expect("serializable")
    }
}

impl std::fmt::Display for FactoredMinorPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(1")?;
        for &(coef, root) in &self.rational_factor {
            let sign = if coef < 0 { '-' } else { '+' };
            write!(f, " {sign} {}/({root} - x)", coef.abs())?;
        }
        f.write_str(")")?;
        for &(root, mult) in &self.linear_factors {
            if mult == 1 {
                write!(f, "({root} - x)")?;
            } else {
                write!(f, "({root} - x)^{mult}")?;
            }
        }
        Ok(())
    }
}

fn check_t(spec: &PartitionSpec, t: &[usize]) -> Result<()> {
    if t.len() != spec.r() {
        return Err(Error::InvalidArgument(format!(
            "expected {} intersection counts, got {}",
            spec.r(),
            t.len()
        )));
    }
    if let Some((k, (&tk, &pk))) = t.iter().zip(spec.parts()).enumerate().find(|(_, (tk, pk))| tk > pk) {
        return Err(Error::InvalidArgument(format!(
            "t_{} = {tk} exceeds part size {pk}",
            k + 1
        )));
    }
    Ok(())
}

/// Intersection counts `t_k = |A ∩ V_k|` of a vertex set with each part.
pub fn intersection_counts(spec: &PartitionSpec, subset: &[usize]) -> Result<Vec<usize>> {
    let mut t = vec![0; spec.r()];
    let mut seen = Vec::new();
    for &v in subset {
        if seen.contains(&v) {
            continue;
        }
        seen.push(v);
        t[spec.locate(v)?.part] += 1;
    }
    Ok(t)
}

pub fn minor_charpoly(spec: &PartitionSpec, t: &[usize]) -> Result<FactoredMinorPoly> {
    check_t(spec, t)?;
    let n = spec.n();
    let mut rational_factor = Vec::new();
    let mut linear_factors = Vec::new();
    for (&p, &tk) in spec.parts().iter().zip(t) {
        if p == tk {
            continue;
        }
        rational_factor.push((tk as i64 - p as i64, n - tk));
        linear_factors.push((n - tk, 1));
        if p - tk > 1 {
            linear_factors.push((n - p, p - tk - 1));
        }
    }
    Ok(FactoredMinorPoly {
        spec: spec.clone(),
        t: t.to_vec(),
        rational_factor,
        linear_factors,
    })
}

/// Quotient matrix of the equitable partition `{V_k − T_k}` of `L(A|A)`:
/// diagonal `d_i`, entry `t_j − p_j` off the diagonal in column `j`.
pub fn quotient_matrix(spec: &PartitionSpec, t: &[usize]) -> Result<RatMatrix> {
    check_t(spec, t)?;
    let r = spec.r();
    Ok(RatMatrix::from_fn(r, r, |i, j| {
        if i == j {
            from_usize(spec.part_degree(i))
        } else {
            int(t[j] as i64 - spec.parts()[j] as i64)
        }
    }))
}

/// `det(B − xI)` through the rank-one-plus-diagonal identity, with
/// `c_k = d_k + p_k − t_k − x` and rank-one part `1 · (t − p)ᵀ`.
pub fn quotient_det_shifted(spec: &PartitionSpec, t: &[usize], x: &Rational) -> Result<Rational> {
    check_t(spec, t)?;
    let ones = vec![Rational::one(); spec.r()];
    let b: Vec<Rational> = spec
        .parts()
        .iter()
        .zip(t)
        .map(|(&p, &tk)| int(tk as i64 - p as i64))
        .collect();
    let c: Vec<Rational> = spec
        .parts()
        .iter()
        .zip(t)
        .enumerate()
        .map(|(k, (&p, &tk))| from_usize(spec.part_degree(k) + p - tk) - x)
        .collect();
    rank_one_plus_diag_det(&ones, &b, &c)
}

/// `Π (n − p_i)^{p_i − 1}`.
fn degree_product(spec: &PartitionSpec) -> Rational {
    let n = spec.n();
    spec.parts()
        .iter()
        .map(|&p| num_traits::pow(from_usize(n - p), p - 1))
        .product()
}

fn check_vertex(spec: &PartitionSpec, loc: VertexLocator) -> Result<()> {
    spec.vertex_id(loc).map(|_| ())
}

/// `det(L(u,v|u,v))` for distinct vertices `u`, `v`.
pub fn minor_det_two_vertices(spec: &PartitionSpec, u: VertexLocator, v: VertexLocator) -> Result<Rational> {
    check_vertex(spec, u)?;
    check_vertex(spec, v)?;
    if u == v {
        return Err(Error::InvalidArgument("vertices must be distinct".into()));
    }
    require_connected(spec)?;
    let n = spec.n();
    let r = spec.r() as i64;
    let nr = from_usize(n);
    let prod = degree_product(spec);
    if u.part == v.part {
        let d = from_usize(n - spec.parts()[u.part]);
        Ok(pow_int(&nr, r - 2) * int(2) / d * prod)
    } else {
        let (pl, plp) = (spec.parts()[u.part], spec.parts()[v.part]);
        let num = from_usize((n - 1) * (2 * n - pl - plp));
        let den = from_usize((n - pl) * (n - plp));
        Ok(pow_int(&nr, r - 3) * num / den * prod)
    }
}

/// `n^{r−2} Π (n − p_i)^{p_i − 1}`. A single vertex has one (empty) tree;
/// any other one-part spec is edgeless and rejected as disconnected.
pub fn spanning_trees(spec: &PartitionSpec) -> Result<BigInt> {
    if spec.r() == 1 {
        return if spec.n() == 1 {
            Ok(BigInt::one())
        } else {
            Err(Error::Disconnected)
        };
    }
    let value = pow_int(&from_usize(spec.n()), spec.r() as i64 - 2) * degree_product(spec);
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}

/// Effective resistance between two vertices of `K_{p_1,…,p_r}`.
pub fn resistance_closed(spec: &PartitionSpec, u: VertexLocator, v: VertexLocator) -> Result<Rational> {
    check_vertex(spec, u)?;
    check_vertex(spec, v)?;
    require_connected(spec)?;
    let n = spec.n();
    if u == v {
        return Ok(Rational::zero());
    }
    let pi = spec.parts()[u.part];
    if u.part == v.part {
        return Ok(Rational::new(BigInt::from(2), BigInt::from(n - pi)));
    }
    let pj = spec.parts()[v.part];
    Ok(Rational::new(
        BigInt::from((n - 1) * (2 * n - pi - pj)),
        BigInt::from(n) * BigInt::from(n - pi) * BigInt::from(n - pj),
    ))
}

/// Full resistance matrix with vertices numbered by part in spec order.
pub fn resistance_matrix_closed(spec: &PartitionSpec) -> Result<RatMatrix> {
    require_connected(spec)?;
    let n = spec.n();
    let locs: Vec<VertexLocator> = (0..n).map(|v| spec.locate(v)).collect::<Result<_>>()?;
    let mut out = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = resistance_closed(spec, locs[i], locs[j])?;
        }
    }
    Ok(out)
}

/// The three algebraic routes to `Kf(K_{p_1,…,p_r})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KfForms {
    /// `−1 − r(n−1) + n(n−1) Σ 1/(n − p_i)`
    pub reciprocal_sum: Rational,
    /// `r − 1 + n Σ (p_i − 1)/(n − p_i)`
    pub join_spectrum: Rational,
    /// `−1 + (n−1) Σ p_i/(n − p_i)`, the trace-of-pseudoinverse route
    pub trace: Rational,
}

pub fn kf_forms(spec: &PartitionSpec) -> Result<KfForms> {
    require_connected(spec)?;
    let n = spec.n();
    let r = spec.r();
    let nr = from_usize(n);
    let n1 = from_usize(n - 1);
    let recip: Rational = spec.parts().iter().map(|&p| Rational::one() / from_usize(n - p)).sum();
    let reciprocal_sum = int(-1) - from_usize(r * (n - 1)) + &nr * &n1 * recip;
    let join_spectrum = from_usize(r - 1)
        + &nr
            * spec
                .parts()
                .iter()
                .map(|&p| Rational::new(BigInt::from(p - 1), BigInt::from(n - p)))
                .sum::<Rational>();
    let trace = int(-1)
        + &n1
            * spec
                .parts()
                .iter()
                .map(|&p| Rational::new(BigInt::from(p), BigInt::from(n - p)))
                .sum::<Rational>();
    Ok(KfForms {
        reciprocal_sum,
        join_spectrum,
        trace,
    })
}

/// `Kf(K_{p_1,…,p_r})`, computed every closed-form way and required to agree.
pub fn kf_closed(spec: &PartitionSpec) -> Result<Rational> {
    let forms = kf_forms(spec)?;
    if forms.reciprocal_sum != forms.join_spectrum || forms.reciprocal_sum != forms.trace {
        return Err(Error::Internal(format!(
            "Kirchhoff closed forms disagree for {spec}: {} / {} / {}",
            to_exact_string(&forms.reciprocal_sum),
            to_exact_string(&forms.join_spectrum),
            to_exact_string(&forms.trace)
        )));
    }
    Ok(forms.reciprocal_sum)
}

/// `Kf′(K_{p_1,…,p_r}) = 2m(n − 1) − (1/n) Σ_i p_i (n − p_i)²`.
///
/// Expanding `Σ d_u d_v Ω(u,v)` as `2m·tr(D L⁺) − dᵀ L⁺ d` with
/// `L⁺ = M⁻¹ − J/n²`, `M` block diagonal with blocks `d_i I + J_{p_i}`.
pub fn dkf_closed(spec: &PartitionSpec) -> Result<Rational> {
    require_connected(spec)?;
    let n = spec.n();
    let two_m = from_usize(2 * spec.edge_count());
    let weighted: usize = spec.parts().iter().map(|&p| p * (n - p) * (n - p)).sum();
    Ok(two_m * from_usize(n - 1) - from_usize(weighted) / from_usize(n))
}

/// `−(2m/n)² + 2m(n − 1)`, which is `2m·tr(D L⁺)`.
///
/// Depends on the edge count only. Equals the degree Kirchhoff index when
/// all parts have the same size and overestimates it otherwise, since
/// `tr(D^{1/2} L⁺ D^{1/2})` and `tr(𝓛⁺)` differ on non-regular graphs.
pub fn dkf_edge_count_form(spec: &PartitionSpec) -> Result<Rational> {
    require_connected(spec)?;
    let n = spec.n();
    let two_m = from_usize(2 * spec.edge_count());
    let ratio = &two_m / from_usize(n);
    Ok(-(&ratio * &ratio) + two_m * from_usize(n - 1))
}

/// Laplacian spectrum of one join operand: its order and eigenvalues.
pub type PartSpectrum = (usize, Vec<Rational>);

/// Checks one operand spectrum and returns it with a single zero removed.
fn reduced_spectrum(order: usize, eigenvalues: &[Rational]) -> Result<Vec<Rational>> {
    if eigenvalues.len() != order {
        return Err(Error::DimensionMismatch(format!(
            "part of order {order} has {} eigenvalues",
            eigenvalues.len()
        )));
    }
    if order == 0 {
        return Err(Error::InvalidArgument("join operands must be nonempty".into()));
    }
    if eigenvalues.iter().any(Signed::is_negative) {
        return Err(Error::InvalidArgument("Laplacian eigenvalues are nonnegative".into()));
    }
    let zero = eigenvalues
        .iter()
        .position(Zero::is_zero)
        .ok_or_else(|| Error::InvalidArgument("a Laplacian spectrum always contains 0".into()))?;
    let mut rest = eigenvalues.to_vec();
    rest.remove(zero);
    Ok(rest)
}

/// Laplacian spectrum of a join `G_1 ∨ ⋯ ∨ G_r`: `0`, `n` with multiplicity
/// `r − 1`, and `n − p_i + λ^i_j` for all but one zero eigenvalue of each
/// operand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinSpectrum {
    n: usize,
    r: usize,
    #[serde(serialize_with = "serialize_rationals")]
    shifted: Vec<Rational>,
}

fn serialize_rationals<S: serde::Serializer>(values: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<String> = values.iter().map(to_exact_string).collect();
    strings.serialize(s)
}

impl JoinSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The shifted eigenvalues `n − p_i + λ^i_j`.
    pub fn shifted(&self) -> &[Rational] {
        &self.shifted
    }

    /// All `n` eigenvalues, sorted descending.
    pub fn eigenvalues(&self) -> Vec<Rational> {
        let mut all = Vec::with_capacity(self.n);
        all.push(Rational::zero());
        all.extend(std::iter::repeat_n(from_usize(self.n), self.r - 1));
        all.extend(self.shifted.iter().cloned());
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }

    /// Distinct eigenvalues, descending, with multiplicities.
    pub fn multiplicities(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for ev in self.eigenvalues() {
            match out.last_mut() {
                Some((v, m)) if *v == ev => *m += 1,
                _ => out.push((ev, 1)),
            }
        }
        out
    }

    pub fn sum(&self) -> Rational {
        self.eigenvalues().iter().sum()
    }

    /// `n Σ 1/λ` over the nonzero eigenvalues; fails if zero has
    /// multiplicity above one (the join would be disconnected).
    pub fn kirchhoff(&self) -> Result<Rational> {
        let evs = self.eigenvalues();
        let zeros = evs.iter().filter(|v| v.is_zero()).count();
        if zeros != 1 {
            return Err(Error::Disconnected);
        }
        let sum: Rational = evs.iter().filter(|v| !v.is_zero()).map(|v| Rational::one() / v).sum();
        Ok(from_usize(self.n) * sum)
    }

    /// `(Π nonzero λ) / n`, the spanning-tree count by Kirchhoff's theorem.
    pub fn spanning_trees(&self) -> Rational {
        let prod: Rational = self.eigenvalues().into_iter().filter(|v| !v.is_zero()).product();
        prod / from_usize(self.n)
    }
}

pub fn join_spectrum(spectra: &[PartSpectrum]) -> Result<JoinSpectrum> {
    if spectra.is_empty() {
        return Err(Error::InvalidArgument("at least one join operand is required".into()));
    }
    let n: usize = spectra.iter().map(|(p, _)| p).sum();
    let mut shifted = Vec::with_capacity(n);
    for (p, evs) in spectra {
        let base = from_usize(n - p);
        shifted.extend(reduced_spectrum(*p, evs)?.into_iter().map(|l| &base + l));
    }
    Ok(JoinSpectrum {
        n,
        r: spectra.len(),
        shifted,
    })
}

/// Laplacian spectrum of `K_{p_1,…,p_r}` (every operand edgeless).
pub fn multipartite_spectrum(spec: &PartitionSpec) -> JoinSpectrum {
    let spectra: Vec<PartSpectrum> = spec.parts().iter().map(|&p| (p, vec![Rational::zero(); p])).collect();
    join_spectrum(&spectra).expect("edgeless spectra are valid")
}

/// `Kf(G_1 ∨ ⋯ ∨ G_r) = r − 1 + n Σ_i Σ_j 1/(n − p_i + λ^i_j)`, the inner sum
/// running over all but one zero eigenvalue of each operand.
pub fn kf_join(spectra: &[PartSpectrum]) -> Result<Rational> {
    if spectra.is_empty() {
        return Err(Error::InvalidArgument("at least one join operand is required".into()));
    }
    let n: usize = spectra.iter().map(|(p, _)| p).sum();
    let r = spectra.len();
    let mut sum = Rational::zero();
    for (p, evs) in spectra {
        let base = from_usize(n - p);
        for l in reduced_spectrum(*p, evs)? {
            let denom = &base + l;
            if denom.is_zero() {
                return Err(Error::Disconnected);
            }
            sum += Rational::one() / denom;
        }
    }
    Ok(from_usize(r - 1) + from_usize(n) * sum)
}

/// `Σ d_i d_j Ω(i,j)` over unordered pairs, from an already computed
/// resistance matrix and degree list.
pub fn degree_weighted_sum(resistance: &RatMatrix, degrees: &[usize]) -> Rational {
    let mut total = Rational::zero();
    for i in 0..degrees.len() {
        for j in (i + 1)..degrees.len() {
            total += from_usize(degrees[i] * degrees[j]) * &resistance[(i, j)];
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn spec(parts: &[usize]) -> PartitionSpec {
        PartitionSpec::new(parts.to_vec()).unwrap()
    }

    fn loc(part: usize, offset: usize) -> VertexLocator {
        VertexLocator { part, offset }
    }

    #[test]
    fn minor_poly_spanning_tree_value() {
        let p = minor_charpoly(&spec(&[2, 3, 4]), &[1, 0, 0]).unwrap();
        assert_eq!(p.eval(&int(0)), int(283500));
        assert_eq!(p.expand().eval(&int(0)), int(283500));
        assert_eq!(p.dimension(), 8);
        assert_eq!(p.expand().degree(), Some(8));
    }

    #[test]
    fn minor_poly_empty_minor() {
        let p = minor_charpoly(&spec(&[1, 1]), &[1, 1]).unwrap();
        assert_eq!(p.expand(), RatPolynomial::one());
        assert!(p.linear_factors().is_empty());
    }

    #[test]
    fn minor_poly_rejects_bad_t() {
        assert!(minor_charpoly(&spec(&[2, 3]), &[3, 0]).is_err());
        assert!(minor_charpoly(&spec(&[2, 3]), &[0]).is_err());
    }

    #[test]
    fn quotient_matrix_examples() {
        let b = quotient_matrix(&spec(&[2, 3, 4]), &[0, 0, 0]).unwrap();
        assert_eq!(b, RatMatrix::from_integers(&[[7, -3, -4], [-2, 6, -4], [-2, -3, 5]]));
        let b1 = quotient_matrix(&spec(&[3]), &[0]).unwrap();
        assert_eq!(b1, RatMatrix::from_integers(&[[0]]));
        let b = quotient_matrix(&spec(&[2, 3, 4]), &[1, 0, 0]).unwrap();
        assert_eq!(b.det().unwrap(), int(63));
        assert_eq!(quotient_det_shifted(&spec(&[2, 3, 4]), &[1, 0, 0], &int(0)).unwrap(), int(63));
    }

    #[test]
    fn two_vertex_minors() {
        let s = spec(&[2, 3, 4]);
        assert_eq!(minor_det_two_vertices(&s, loc(0, 0), loc(0, 1)).unwrap(), int(81000));
        assert_eq!(minor_det_two_vertices(&s, loc(0, 0), loc(1, 2)).unwrap(), int(78000));
        assert_eq!(minor_det_two_vertices(&spec(&[1, 1]), loc(0, 0), loc(1, 0)).unwrap(), int(1));
        assert!(minor_det_two_vertices(&s, loc(0, 0), loc(0, 0)).is_err());
        assert_eq!(
            minor_det_two_vertices(&spec(&[4]), loc(0, 0), loc(0, 1)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn spanning_tree_counts() {
        for n in 2..8usize {
            let cayley = BigInt::from(n).pow((n - 2) as u32);
            assert_eq!(spanning_trees(&spec(&vec![1; n])).unwrap(), cayley);
        }
        assert_eq!(spanning_trees(&spec(&[2, 2])).unwrap(), BigInt::from(4));
        assert_eq!(spanning_trees(&spec(&[2, 3, 4])).unwrap(), BigInt::from(283500));
        assert_eq!(spanning_trees(&spec(&[1])).unwrap(), BigInt::from(1));
        assert_eq!(spanning_trees(&spec(&[3])), Err(Error::Disconnected));
    }

    #[test]
    fn resistance_examples() {
        let s = spec(&[2, 3, 4]);
        assert_eq!(resistance_closed(&s, loc(2, 0), loc(2, 3)).unwrap(), ratio(2, 5));
        assert_eq!(resistance_closed(&s, loc(0, 1), loc(1, 0)).unwrap(), ratio(52, 189));
        assert_eq!(resistance_closed(&s, loc(1, 1), loc(1, 1)).unwrap(), int(0));
        assert_eq!(
            resistance_closed(&spec(&[5]), loc(0, 0), loc(0, 1)),
            Err(Error::Disconnected)
        );
        for n in 2..9 {
            let kn = spec(&vec![1; n]);
            assert_eq!(resistance_closed(&kn, loc(0, 0), loc(n - 1, 0)).unwrap(), ratio(2, n as i64));
        }
        let k2 = resistance_matrix_closed(&spec(&[1, 1])).unwrap();
        assert_eq!(k2, RatMatrix::from_integers(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn kirchhoff_examples() {
        let expected = int(-1)
            + int(23) * (ratio(6, 22) + ratio(6, 21) + ratio(5, 19) + ratio(7, 17));
        assert_eq!(kf_closed(&PartitionSpec::parse("2^3,3^2,5,7").unwrap()).unwrap(), expected);
        assert_eq!(kf_closed(&spec(&[7, 1, 1])).unwrap(), int(29));
        assert_eq!(kf_closed(&spec(&[3, 3, 3])).unwrap(), int(11));
        assert_eq!(kf_closed(&spec(&[4, 1])).unwrap(), int(16));
        assert_eq!(kf_closed(&spec(&[2])), Err(Error::Disconnected));
    }

    #[test]
    fn degree_kirchhoff_examples() {
        assert_eq!(dkf_closed(&spec(&[7, 1, 1])).unwrap(), ratio(668, 3));
        assert_eq!(dkf_closed(&spec(&[2, 3, 4])).unwrap(), int(382));
        assert_eq!(dkf_closed(&spec(&[3, 3, 3])).unwrap(), int(396));
        assert_eq!(dkf_closed(&spec(&[1])), Err(Error::Disconnected));
        for r in 2..=20i64 {
            let cocktail = spec(&vec![2; r as usize]);
            let expected = int(4 * (2 * r * r * r - 4 * r * r + 3 * r - 1));
            assert_eq!(dkf_closed(&cocktail).unwrap(), expected, "r = {r}");
            assert_eq!(dkf_edge_count_form(&cocktail).unwrap(), expected, "r = {r}");
        }
    }

    #[test]
    fn edge_count_form_only_exact_for_equal_parts() {
        assert_eq!(dkf_edge_count_form(&spec(&[7, 1, 1])).unwrap(), ratio(2060, 9));
        assert_eq!(dkf_edge_count_form(&spec(&[2, 3, 4])).unwrap(), ratio(30992, 81));
        assert_eq!(dkf_edge_count_form(&spec(&[3, 3, 3])).unwrap(), int(396));
        let resistance = resistance_matrix_closed(&spec(&[2, 1])).unwrap();
        assert_eq!(degree_weighted_sum(&resistance, &[1, 1, 2]), int(6));
        assert_eq!(dkf_closed(&spec(&[2, 1])).unwrap(), int(6));
        assert_eq!(dkf_edge_count_form(&spec(&[2, 1])).unwrap(), ratio(56, 9));
    }

    #[test]
    fn join_formulas() {
        let empty = |p: usize| (p, vec![Rational::zero(); p]);
        assert_eq!(
            kf_join(&[empty(2), empty(3), empty(4)]).unwrap(),
            kf_closed(&spec(&[2, 3, 4])).unwrap()
        );
        assert_eq!(kf_join(&[empty(1), empty(1)]).unwrap(), int(1));
        let k2 = (2, vec![int(2), int(0)]);
        assert_eq!(kf_join(&[k2.clone(), k2]).unwrap(), int(3));

        let js = multipartite_spectrum(&spec(&[2, 3, 4]));
        let expected: Vec<Rational> = [9, 9, 7, 6, 6, 5, 5, 5, 0].iter().map(|&v| int(v)).collect();
        assert_eq!(js.eigenvalues(), expected);
        assert_eq!(js.sum(), int(52));
        assert_eq!(js.spanning_trees(), int(283500));

        let single = join_spectrum(&[(3, vec![int(3), int(1), int(0)])]).unwrap();
        assert_eq!(single.eigenvalues(), vec![int(3), int(1), int(0)]);

        assert!(join_spectrum(&[(2, vec![int(1)])]).is_err());
        assert!(join_spectrum(&[(2, vec![int(1), int(2)])]).is_err());
        assert!(kf_join(&[(2, vec![int(0), int(0)])]).is_err());
    }
}
