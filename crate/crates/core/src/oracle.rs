//! Formula-free invariants of arbitrary connected graphs, computed straight
//! from Laplacian minors and the pseudoinverse. Every closed form in
//! [`crate::multipartite`] is checked against these.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, PartitionSpec};
use crate::linalg::{laplacian, random_walk_laplacian, Limits, RatMatrix};
use crate::multipartite;
use crate::rational::{from_usize, to_decimal_string, to_exact_string, Rational};

/// Largest graph the oracle builds full resistance matrices for by default.
pub const DEFAULT_ORACLE_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n: usize,
    pub limits: Limits,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n: DEFAULT_ORACLE_MAX_N,
            limits: Limits::default(),
        }
    }
}

impl OracleConfig {
    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_n {
            return Err(Error::TooLarge {
                dim: g.n(),
                limit: self.max_n,
            });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if g.n() < 2 {
            return Err(Error::InvalidArgument("resistance needs at least two vertices".into()));
        }
        Ok(())
    }
}

/// `Ω(u,v) = det(L(u,v|u,v)) / det(L(u|u))` for every pair.
pub fn resistance_by_minors(g: &Graph, cfg: &OracleConfig) -> Result<RatMatrix> {
    cfg.check(g)?;
    let n = g.n();
    let l = laplacian(g);
    let trees = l.delete(&[0], &[0])?.det_with(&cfg.limits)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let values: Vec<Rational> = pairs
        .par_iter()
        .map(|&(u, v)| {
            let minor = l.delete(&[u, v], &[u, v])?;
            Ok(minor.det_with(&cfg.limits)? / &trees)
        })
        .collect::<Result<_>>()?;
    let mut out = RatMatrix::zeros(n, n);
    for (&(u, v), value) in pairs.iter().zip(values) {
        out[(u, v)] = value.clone();
        out[(v, u)] = value;
    }
    Ok(out)
}

/// `Ω(u,v) = L⁺_uu + L⁺_vv − 2 L⁺_uv`.
pub fn resistance_by_pinv(g: &Graph, cfg: &OracleConfig) -> Result<RatMatrix> {
    cfg.check(g)?;
    let pinv = crate::linalg::laplacian_pinv(g)?;
    Ok(resistance_from_pinv(&pinv))
}

fn resistance_from_pinv(pinv: &RatMatrix) -> RatMatrix {
    let n = pinv.rows();
    let two = from_usize(2);
    RatMatrix::from_fn(n, n, |u, v| {
        if u == v {
            Rational::zero()
        } else {
            &pinv[(u, u)] + &pinv[(v, v)] - &two * &pinv[(u, v)]
        }
    })
}

/// Resistance matrix by both routes, required to agree exactly.
pub fn resistance_matrix(g: &Graph) -> Result<RatMatrix> {
    resistance_matrix_with(g, &OracleConfig::default())
}

pub fn resistance_matrix_with(g: &Graph, cfg: &OracleConfig) -> Result<RatMatrix> {
    let by_minors = resistance_by_minors(g, cfg)?;
    let by_pinv = resistance_by_pinv(g, cfg)?;
    if by_minors != by_pinv {
        return Err(Error::Internal("determinant-ratio and pseudoinverse resistances differ".into()));
    }
    Ok(by_minors)
}

/// Half the sum of all resistance entries.
pub fn half_resistance_sum(resistance: &RatMatrix) -> Rational {
    let total: Rational = resistance.iter_rows().flatten().sum();
    total / from_usize(2)
}

/// `Kf(G)`, as both `n · trace(L⁺)` and half the total resistance.
pub fn kirchhoff_index(g: &Graph) -> Result<Rational> {
    kirchhoff_index_with(g, &OracleConfig::default())
}

pub fn kirchhoff_index_with(g: &Graph, cfg: &OracleConfig) -> Result<Rational> {
    cfg.check(g)?;
    let pinv = crate::linalg::laplacian_pinv(g)?;
    let by_trace = from_usize(g.n()) * pinv.trace()?;
    let by_sum = half_resistance_sum(&resistance_matrix_with(g, cfg)?);
    if by_trace != by_sum {
        return Err(Error::Internal(format!(
            "n·trace(L⁺) = {} but half resistance sum = {}",
            to_exact_string(&by_trace),
            to_exact_string(&by_sum)
        )));
    }
    Ok(by_trace)
}

/// `Kf′(G) = Σ_{i<j} d_i d_j Ω(i,j)`.
pub fn degree_kirchhoff_index(g: &Graph) -> Result<Rational> {
    degree_kirchhoff_index_with(g, &OracleConfig::default())
}

pub fn degree_kirchhoff_index_with(g: &Graph, cfg: &OracleConfig) -> Result<Rational> {
    let resistance = resistance_matrix_with(g, cfg)?;
    Ok(multipartite::degree_weighted_sum(&resistance, &g.degrees()))
}

/// `Σ 1/μ` over the nonzero normalized-Laplacian eigenvalues, exactly.
///
/// `D⁻¹L` is similar to the normalized Laplacian, so writing its
/// characteristic polynomial as `x·q(x)` gives the sum as `−q′(0)/q(0)`.
pub fn normalized_inverse_trace(g: &Graph) -> Result<Rational> {
    normalized_inverse_trace_with(g, &OracleConfig::default())
}

pub fn normalized_inverse_trace_with(g: &Graph, cfg: &OracleConfig) -> Result<Rational> {
    cfg.check(g)?;
    let p = random_walk_laplacian(g)?.char_poly_with(&cfg.limits)?;
    if !p.coeff(0).is_zero() {
        return Err(Error::Internal("D⁻¹L is unexpectedly nonsingular".into()));
    }
    let q0 = p.coeff(1);
    let q1 = p.coeff(2);
    if q0.is_zero() {
        return Err(Error::Disconnected);
    }
    Ok(-q1 / q0)
}

/// Matrix-tree theorem: `det(L(0|0))`. Zero exactly when `g` is disconnected.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt> {
    spanning_tree_count_deleting(g, 0)
}

/// `det(L(u|u))` for a chosen vertex `u`.
pub fn spanning_tree_count_deleting(g: &Graph, u: usize) -> Result<BigInt> {
    if g.n() == 0 {
        return Ok(BigInt::zero());
    }
    if u >= g.n() {
        return Err(Error::IndexOutOfRange { index: u, size: g.n() });
    }
    let det = laplacian(g).delete(&[u], &[u])?.det()?;
    debug_assert!(det.is_integer());
    Ok(det.to_integer())
}

/// Where a report's numbers came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Oracle,
    ClosedForm,
}

/// All resistance-based invariants of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub resistance: RatMatrix,
    pub kf: Rational,
    pub dkf: Rational,
    pub spanning_trees: BigInt,
    pub normalized_inverse_trace: Rational,
    pub source: Source,
}

impl InvariantReport {
    pub fn oracle(g: &Graph) -> Result<Self> {
        let cfg = OracleConfig::default();
        let resistance = resistance_matrix_with(g, &cfg)?;
        let kf = kirchhoff_index_with(g, &cfg)?;
        let dkf = multipartite::degree_weighted_sum(&resistance, &g.degrees());
        let normalized_inverse_trace = normalized_inverse_trace_with(g, &cfg)?;
        if from_usize(2 * g.edge_count()) * &normalized_inverse_trace != dkf {
            return Err(Error::Internal("2m·Σ1/μ differs from the degree Kirchhoff index".into()));
        }
        Ok(InvariantReport {
            resistance,
            kf,
            dkf,
            spanning_trees: spanning_tree_count(g)?,
            normalized_inverse_trace,
            source: Source::Oracle,
        })
    }

    pub fn closed_form(spec: &PartitionSpec) -> Result<Self> {
        let dkf = multipartite::dkf_closed(spec)?;
        let two_m = from_usize(2 * spec.edge_count());
        Ok(InvariantReport {
            resistance: multipartite::resistance_matrix_closed(spec)?,
            kf: multipartite::kf_closed(spec)?,
            normalized_inverse_trace: &dkf / two_m,
            dkf,
            spanning_trees: multipartite::spanning_trees(spec)?,
            source: Source::ClosedForm,
        })
    }

    /// Same numbers regardless of provenance.
    pub fn agrees_with(&self, other: &InvariantReport) -> bool {
        self.resistance == other.resistance
            && self.kf == other.kf
            && self.dkf == other.dkf
            && self.spanning_trees == other.spanning_trees
            && self.normalized_inverse_trace == other.normalized_inverse_trace
    }

    /// JSON with exact `p/q` strings next to decimal renderings.
    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let pair = |v: &Rational| {
            serde_json::json!({
                "exact": to_exact_string(v),
                "decimal": to_decimal_string(v, digits),
            })
        };
        let trees = Rational::from_integer(self.spanning_trees.clone());
        serde_json::json!({
            "schema": 1,
            "source": self.source,
            "kirchhoff": pair(&self.kf),
            "degree_kirchhoff": pair(&self.dkf),
            "spanning_trees": {
                "exact": self.spanning_trees.to_string(),
                "decimal": to_decimal_string(&trees, digits),
            },
            "normalized_inverse_trace": pair(&self.normalized_inverse_trace),
            "resistance": self.resistance,
        })
    }
}

/// `true` when `Ω(u,w) ≤ Ω(u,v) + Ω(v,w)` for every triple, compared exactly.
pub fn satisfies_triangle_inequality(resistance: &RatMatrix) -> bool {
    let n = resistance.rows();
    (0..n).all(|u| {
        (0..n).all(|v| (0..n).all(|w| resistance[(u, w)] <= &resistance[(u, v)] + &resistance[(v, w)]))
    })
}

/// Non-negative, symmetric, zero diagonal and the triangle inequality.
pub fn is_metric(resistance: &RatMatrix) -> bool {
    let n = resistance.rows();
    resistance.is_symmetric()
        && (0..n).all(|i| resistance[(i, i)].is_zero())
        && resistance.iter_rows().flatten().all(|x| *x >= Rational::zero())
        && satisfies_triangle_inequality(resistance)
}
