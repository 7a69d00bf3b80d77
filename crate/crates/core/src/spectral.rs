//! Floating-point symmetric eigenvalues by cyclic Jacobi rotations.
//!
//! Only used to cross-check exact results; nothing in the public exact API
//! returns these floats as a primary answer.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::RatMatrix;
use crate::rational::to_f64;

/// Off-diagonal Frobenius norm target, relative to `‖m‖_F`.
pub const CONVERGENCE_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Eigenvalues below this (in absolute value) are treated as zero.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-7;

/// Dense square matrix of `f64`, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RealMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn from_fn<F: FnMut(usize, usize) -> f64>(n: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        RealMatrix { n, data }
    }

    pub fn from_rational(m: &RatMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        Ok(Self::from_fn(m.rows(), |i, j| to_f64(&m[(i, j)])))
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        Self::from_fn(entries.len(), |i, j| if i == j { entries[i] } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }

    /// Same matrix with rows and columns reordered by `perm`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.n, |i, j| self.get(perm[i], perm[j]))
    }
}

/// Eigenvalues sorted descending, with the worst `|Av − λv|` (max norm) over
/// the computed eigenpairs.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSpectrum {
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
}

impl FloatSpectrum {
    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn near_zero_count(&self) -> usize {
        self.eigenvalues.iter().filter(|v| v.abs() < ZERO_EIGENVALUE_TOL).count()
    }

    /// `Σ 1/λ` over the eigenvalues that are not near zero, after checking
    /// that exactly one is.
    pub fn inverse_sum_nonzero(&self) -> Result<f64> {
        let zeros = self.near_zero_count();
        if zeros != 1 {
            return Err(Error::ZeroEigenvalueCount(zeros));
        }
        Ok(self
            .eigenvalues
            .iter()
            .filter(|v| v.abs() >= ZERO_EIGENVALUE_TOL)
            .map(|v| 1.0 / v)
            .sum())
    }
}

pub fn symmetric_eigenvalues(m: &RealMatrix) -> Result<FloatSpectrum> {
    let n = m.n;
    let scale = m.data.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    for i in 0..n {
        for j in 0..i {
            if (m.get(i, j) - m.get(j, i)).abs() > 1e-12 * scale {
                return Err(Error::NotSymmetric);
            }
        }
    }

    let norm = m.frobenius();
    let mut a = m.clone();
    let mut v = RealMatrix::diagonal(&vec![1.0; n]);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if a.off_diagonal_norm() <= CONVERGENCE_TOL * norm {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && a.off_diagonal_norm() > CONVERGENCE_TOL * norm {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut residual = 0.0f64;
    for k in 0..n {
        let lambda = a.get(k, k);
        for i in 0..n {
            let av: f64 = (0..n).map(|j| m.get(i, j) * v.get(j, k)).sum();
            residual = residual.max((av - lambda * v.get(i, k)).abs());
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(FloatSpectrum { eigenvalues, residual })
}

/// One Jacobi rotation zeroing `a[p][q]`, accumulated into `v`.
fn rotate(a: &mut RealMatrix, v: &mut RealMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let app = a.get(p, p);
    let aqq = a.get(q, q);
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);
    for r in 0..a.n {
        if r != p && r != q {
            let arp = a.get(r, p);
            let arq = a.get(r, q);
            let new_rp = c * arp - s * arq;
            let new_rq = s * arp + c * arq;
            a.set(r, p, new_rp);
            a.set(p, r, new_rp);
            a.set(r, q, new_rq);
            a.set(q, r, new_rq);
        }
        let vrp = v.get(r, p);
        let vrq = v.get(r, q);
        v.set(r, p, c * vrp - s * vrq);
        v.set(r, q, s * vrp + c * vrq);
    }
}

pub fn laplacian_matrix(g: &Graph) -> RealMatrix {
    RealMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    })
}

pub fn laplacian_spectrum(g: &Graph) -> Result<FloatSpectrum> {
    symmetric_eigenvalues(&laplacian_matrix(g))
}

/// `Kf(G) = n Σ 1/λ` over the nonzero Laplacian eigenvalues.
pub fn kf_from_spectrum(g: &Graph) -> Result<f64> {
    let spectrum = laplacian_spectrum(g)?;
    Ok(g.n() as f64 * spectrum.inverse_sum_nonzero()?)
}

/// Laplacian spectrum of `G_1 ∨ ⋯ ∨ G_r` from the operands' spectra: `0`,
/// `n` with multiplicity `r − 1`, and `n − p_i + λ` for all but one zero
/// eigenvalue of each operand. Sorted descending.
pub fn join_spectrum_float(spectra: &[Vec<f64>]) -> Result<Vec<f64>> {
    if spectra.is_empty() {
        return Err(Error::InvalidArgument("at least one join operand is required".into()));
    }
    let n: usize = spectra.iter().map(Vec::len).sum();
    let mut out = vec![0.0];
    out.extend(std::iter::repeat_n(n as f64, spectra.len() - 1));
    for evs in spectra {
        let zero = evs
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .filter(|(_, v)| v.abs() < ZERO_EIGENVALUE_TOL)
            .map(|(i, _)| i)
            .ok_or(Error::ZeroEigenvalueCount(0))?;
        let shift = (n - evs.len()) as f64;
        out.extend(evs.iter().enumerate().filter(|&(i, _)| i != zero).map(|(_, l)| shift + l));
    }
    out.sort_by(|x, y| y.total_cmp(x));
    Ok(out)
}

/// Spectrum of `D^{-1/2} L D^{-1/2}`.
pub fn normalized_spectrum(g: &Graph) -> Result<FloatSpectrum> {
    let degrees = g.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let inv_sqrt: Vec<f64> = degrees.iter().map(|&d| 1.0 / (d as f64).sqrt()).collect();
    let l = laplacian_matrix(g);
    symmetric_eigenvalues(&RealMatrix::from_fn(g.n(), |i, j| inv_sqrt[i] * l.get(i, j) * inv_sqrt[j]))
}

/// `Kf′(G) = 2m Σ 1/μ` over the nonzero normalized-Laplacian eigenvalues.
pub fn dkf_from_normalized_spectrum(g: &Graph) -> Result<f64> {
    let spectrum = normalized_spectrum(g)?;
    Ok(2.0 * g.edge_count() as f64 * spectrum.inverse_sum_nonzero()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartitionSpec;

    fn assert_close(got: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(got.len(), expected.len());
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() < tol, "{got:?} vs {expected:?}");
        }
    }

    #[test]
    fn diagonal_input() {
        let s = symmetric_eigenvalues(&RealMatrix::diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(s.eigenvalues, vec![3.0, 2.0, 1.0]);
        assert_eq!(s.residual, 0.0);
    }

    #[test]
    fn multipartite_laplacian() {
        let g = Graph::complete_multipartite(&PartitionSpec::new(vec![2, 3, 4]).unwrap());
        let s = laplacian_spectrum(&g).unwrap();
        assert_close(&s.eigenvalues, &[9.0, 9.0, 7.0, 6.0, 6.0, 5.0, 5.0, 5.0, 0.0], 1e-9);
        assert!(s.residual < 1e-9);
    }

    #[test]
    fn cycle_laplacian() {
        let s = laplacian_spectrum(&Graph::cycle(4)).unwrap();
        assert_close(&s.eigenvalues, &[4.0, 2.0, 2.0, 0.0], 1e-9);
    }

    #[test]
    fn kirchhoff_from_eigenvalues() {
        assert!((kf_from_spectrum(&Graph::complete(4)).unwrap() - 3.0).abs() < 1e-9);
        let g = Graph::complete_multipartite(&PartitionSpec::new(vec![2, 3, 4]).unwrap());
        let kf = kf_from_spectrum(&g).unwrap();
        assert!((kf - 409.0 / 35.0).abs() < 1e-6);
        assert_eq!(kf_from_spectrum(&Graph::empty(3)), Err(Error::ZeroEigenvalueCount(3)));
    }

    #[test]
    fn normalized_examples() {
        let s = normalized_spectrum(&Graph::complete(2)).unwrap();
        assert_close(&s.eigenvalues, &[2.0, 0.0], 1e-12);
        let g = Graph::complete_multipartite(&PartitionSpec::new(vec![3, 3, 3]).unwrap());
        assert!((dkf_from_normalized_spectrum(&g).unwrap() - 396.0).abs() < 1e-3);
        let iso = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(normalized_spectrum(&iso), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn join_of_path_and_edge() {
        let p3 = laplacian_spectrum(&Graph::path(3)).unwrap().eigenvalues;
        let k2 = laplacian_spectrum(&Graph::complete(2)).unwrap().eigenvalues;
        let joined = join_spectrum_float(&[p3, k2]).unwrap();
        let direct = laplacian_spectrum(&Graph::path(3).join(&Graph::complete(2))).unwrap();
        assert_close(&joined, &direct.eigenvalues, 1e-9);
        assert_eq!(join_spectrum_float(&[vec![1.0]]), Err(Error::ZeroEigenvalueCount(0)));
        assert!(join_spectrum_float(&[]).is_err());
    }

    #[test]
    fn rejects_asymmetric() {
        let m = RealMatrix::from_fn(2, |i, j| if i == 0 && j == 1 { 1.0 } else { 0.0 });
        assert_eq!(symmetric_eigenvalues(&m), Err(Error::NotSymmetric));
    }

    #[test]
    fn zero_and_empty_matrices() {
        let s = symmetric_eigenvalues(&RealMatrix::diagonal(&[0.0, 0.0])).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0, 0.0]);
        let s = symmetric_eigenvalues(&RealMatrix::diagonal(&[])).unwrap();
        assert!(s.eigenvalues.is_empty());
    }
}
