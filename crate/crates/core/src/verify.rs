//! Cross-checks of the closed forms against the brute-force oracle.

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::extremal::enumerate_partitions;
use crate::graph::{Graph, PartitionSpec};
use crate::linalg::laplacian;
use crate::multipartite::{kf_closed, kf_join, minor_charpoly, multipartite_spectrum, PartSpectrum};
use crate::oracle::InvariantReport;
use crate::rational::{to_exact_string, to_f64, Rational};
use crate::spectral;

/// Above this order only a few intersection patterns are tried per spec.
pub const EXHAUSTIVE_MINOR_N: usize = 8;
pub const SPECTRAL_REL_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub specs: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: String, passed: bool, detail: String) {
        self.checks.push(Check { name, passed, detail });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{tag} {} {}\n", c.name, c.detail));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} specs, {} checks, {} failed\n",
            self.specs,
            self.checks.len(),
            failed
        ));
        out
    }
}

/// All intersection patterns when `n` is small, otherwise the empty set,
/// single vertices and whole parts.
fn patterns(spec: &PartitionSpec) -> Vec<Vec<usize>> {
    let r = spec.r();
    if spec.n() <= EXHAUSTIVE_MINOR_N {
        let mut out = vec![vec![]];
        for &p in spec.parts() {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=p).map(move |t| {
                        let mut next = prefix.clone();
                        next.push(t);
                        next
                    })
                })
                .collect();
        }
        return out;
    }
    let mut out = vec![vec![0; r]];
    for k in 0..r {
        let mut single = vec![0; r];
        single[k] = 1;
        out.push(single);
        let mut whole = vec![0; r];
        whole[k] = spec.parts()[k];
        out.push(whole);
    }
    out
}

/// First `t_k` vertices of each part.
fn deleted_vertices(spec: &PartitionSpec, t: &[usize]) -> Vec<usize> {
    (0..spec.r()).flat_map(|k| spec.part_range(k).take(t[k])).collect()
}

fn check_minor_polys(spec: &PartitionSpec, g: &Graph) -> Result<(bool, String)> {
    let l = laplacian(g);
    let mut tried = 0;
    for t in patterns(spec) {
        let removed = deleted_vertices(spec, &t);
        if removed.len() == spec.n() {
            continue;
        }
        let minor = l.delete(&removed, &removed)?;
        let expected = minor.char_poly()?;
        let got = minor_charpoly(spec, &t)?.expand();
        if got != expected {
            return Ok((false, format!("t = {t:?}: {got} vs {expected}")));
        }
        tried += 1;
    }
    Ok((true, format!("{tried} patterns")))
}

fn check_spectral(spec: &PartitionSpec, g: &Graph, exact: &Rational) -> Result<(bool, String)> {
    let kf = spectral::kf_from_spectrum(g)?;
    let target = to_f64(exact);
    let ok = (kf - target).abs() <= SPECTRAL_REL_TOL * target.abs().max(1.0);
    Ok((ok, format!("{spec}: {kf} vs {target}")))
}

/// Runs every cross-check on each canonical spec with `2 ≤ r ≤ n ≤ max_n`.
pub fn verify(max_n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        max_n,
        ..VerifyReport::default()
    };
    for n in 2..=max_n {
        for r in 2..=n {
            for spec in enumerate_partitions(n, r)? {
                report.specs += 1;
                let g = Graph::complete_multipartite(&spec);
                let closed = InvariantReport::closed_form(&spec)?;
                let oracle = InvariantReport::oracle(&g)?;
                report.push(
                    format!("closed-vs-oracle {spec}"),
                    closed.agrees_with(&oracle),
                    format!("kf {}", to_exact_string(&closed.kf)),
                );

                let (ok, detail) = check_minor_polys(&spec, &g)?;
                report.push(format!("minor-poly {spec}"), ok, detail);

                let (ok, detail) = check_spectral(&spec, &g, &closed.kf)?;
                report.push(format!("spectral-kf {spec}"), ok, detail);

                let spectra: Vec<PartSpectrum> =
                    spec.parts().iter().map(|&p| (p, vec![Rational::zero(); p])).collect();
                let joined = kf_join(&spectra)?;
                let via_spectrum = multipartite_spectrum(&spec).kirchhoff()?;
                let expected = kf_closed(&spec)?;
                report.push(
                    format!("join-kf {spec}"),
                    joined == expected && via_spectrum == expected,
                    to_exact_string(&joined),
                );
            }
        }
    }
    Ok(report)
}
