//! Search over all complete `r`-partite graphs on `n` vertices: extremal
//! Kirchhoff and degree-Kirchhoff indices, and the comparison tables.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::PartitionSpec;
use crate::multipartite::{dkf_closed, kf_closed};
use crate::rational::{from_usize, int, to_decimal_string, to_exact_string, Rational};

/// Streams the partitions of `n` into exactly `r` positive parts.
///
/// Partitions are produced in lexicographic order of their non-decreasing
/// form (`1,1,7` < `1,2,6` < … < `3,3,3`) and yielded in canonical
/// non-increasing form. Nothing is materialized beyond the current partition.
#[derive(Clone, Debug)]
pub struct PartitionEnumeration {
    n: usize,
    /// Current partition, non-decreasing; `None` once exhausted.
    current: Option<Vec<usize>>,
}

pub fn enumerate_partitions(n: usize, r: usize) -> Result<PartitionEnumeration> {
    if r < 1 || r > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let mut first = vec![1; r];
    first[r - 1] = n - r + 1;
    Ok(PartitionEnumeration {
        n,
        current: Some(first),
    })
}

impl PartitionEnumeration {
    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let r = cur.len();
        // Rightmost position (excluding the last) that can be bumped while
        // the tail is refilled with the bumped value and the remainder.
        for i in (0..r.saturating_sub(1)).rev() {
            let v = cur[i] + 1;
            let head: usize = cur[..i].iter().sum();
            let fill = v * (r - 1 - i);
            if head + fill > self.n {
                continue;
            }
            let last = self.n - head - fill;
            if last >= v {
                for slot in cur[i..r - 1].iter_mut() {
                    *slot = v;
                }
                cur[r - 1] = last;
                return;
            }
        }
        self.current = None;
    }
}

impl Iterator for PartitionEnumeration {
    type Item = PartitionSpec;

    fn next(&mut self) -> Option<PartitionSpec> {
        let mut parts = self.current.clone()?;
        self.advance();
        parts.reverse();
        Some(PartitionSpec::new(parts).expect("enumerated parts are positive"))
    }
}

/// Which invariant an extremal search ranks by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    Kirchhoff,
    DegreeKirchhoff,
}

impl IndexKind {
    pub fn evaluate(self, spec: &PartitionSpec) -> Result<Rational> {
        match self {
            IndexKind::Kirchhoff => kf_closed(spec),
            IndexKind::DegreeKirchhoff => dkf_closed(spec),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IndexKind::Kirchhoff => "Kf",
            IndexKind::DegreeKirchhoff => "Kf'",
        }
    }
}

/// `(n − r + 1, 1^{r−1})`.
pub fn predicted_unbalanced(n: usize, r: usize) -> PartitionSpec {
    let mut parts = vec![1; r];
    parts[0] = n - r + 1;
    PartitionSpec::new(parts).expect("positive parts")
}

/// `(p^k, (p−1)^{r−k})` with `p = ⌊n/r⌋ + 1`, `k = n − r⌊n/r⌋`.
pub fn predicted_balanced(n: usize, r: usize) -> PartitionSpec {
    let (p, k) = balanced_parameters(n, r);
    let mut parts = vec![p; k];
    parts.extend(std::iter::repeat_n(p - 1, r - k));
    PartitionSpec::new(parts).expect("positive parts")
}

fn balanced_parameters(n: usize, r: usize) -> (usize, usize) {
    (n / r + 1, n - r * (n / r))
}

/// Theorem values of the maximal and minimal Kirchhoff index.
pub fn predicted_kf_extremes(n: usize, r: usize) -> (Rational, Rational) {
    let base = int(-1) - from_usize(r * (n - 1));
    let scale = from_usize(n * (n - 1));
    let max_f = Rational::one() / from_usize(r - 1) + from_usize(r - 1) / from_usize(n - 1);
    let (p, k) = balanced_parameters(n, r);
    let mut min_f = from_usize(r - k) / from_usize(n - p + 1);
    if k > 0 {
        min_f += from_usize(k) / from_usize(n - p);
    }
    (&base + &scale * min_f, base + scale * max_f)
}

/// Outcome of a brute-force extremal search over one `(n, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub index: IndexKind,
    pub n: usize,
    pub r: usize,
    pub candidates: usize,
    pub minimizer: PartitionSpec,
    pub min_value: Rational,
    /// Another candidate shares the minimum value.
    pub min_tie: bool,
    pub maximizer: PartitionSpec,
    pub max_value: Rational,
    pub max_tie: bool,
    pub predicted_min: PartitionSpec,
    pub predicted_max: PartitionSpec,
    pub min_agrees: bool,
    pub max_agrees: bool,
    /// For Kf′ only: whether the minimizer has the fewest edges and the
    /// maximizer the most.
    pub edge_extremes_agree: Option<bool>,
}

struct Extremes {
    candidates: usize,
    min: (PartitionSpec, Rational, bool),
    max: (PartitionSpec, Rational, bool),
}

/// Lexicographically smaller canonical spec wins a tie.
fn update(best: &mut (PartitionSpec, Rational, bool), spec: &PartitionSpec, value: &Rational, better: bool) {
    if better {
        *best = (spec.clone(), value.clone(), false);
    } else if *value == best.1 {
        best.2 = true;
        if spec.parts() < best.0.parts() {
            best.0 = spec.clone();
        }
    }
}

fn search<F>(n: usize, r: usize, mut value_of: F) -> Result<Extremes>
where
    F: FnMut(&PartitionSpec) -> Result<Rational>,
{
    let mut specs = enumerate_partitions(n, r)?;
    let first = specs.next().expect("at least one partition");
    let v = value_of(&first)?;
    let mut ext = Extremes {
        candidates: 1,
        min: (first.clone(), v.clone(), false),
        max: (first, v, false),
    };
    for spec in specs {
        let v = value_of(&spec)?;
        ext.candidates += 1;
        let lower = v < ext.min.1;
        update(&mut ext.min, &spec, &v, lower);
        let higher = v > ext.max.1;
        update(&mut ext.max, &spec, &v, higher);
    }
    Ok(ext)
}

fn check_extremal_args(n: usize, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Disconnected);
    }
    if r > n {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds n = {n}")));
    }
    Ok(())
}

/// Brute-force extremes of `Kf` over all `K_{p_1,…,p_r}` on `n` vertices,
/// compared with the predicted `(n−r+1, 1^{r−1})` maximizer and balanced
/// minimizer.
pub fn extremal_kf(n: usize, r: usize) -> Result<ExtremalResult> {
    check_extremal_args(n, r)?;
    let ext = search(n, r, kf_closed)?;
    let predicted_min = predicted_balanced(n, r);
    let predicted_max = predicted_unbalanced(n, r);
    let (pred_min_value, pred_max_value) = predicted_kf_extremes(n, r);
    let min_agrees = ext.min.0 == predicted_min;
    let max_agrees = ext.max.0 == predicted_max;
    if min_agrees && ext.min.1 != pred_min_value {
        return Err(Error::Internal(format!("minimal Kf at {predicted_min} differs from the theorem value")));
    }
    if max_agrees && ext.max.1 != pred_max_value {
        return Err(Error::Internal(format!("maximal Kf at {predicted_max} differs from the theorem value")));
    }
    Ok(ExtremalResult {
        index: IndexKind::Kirchhoff,
        n,
        r,
        candidates: ext.candidates,
        minimizer: ext.min.0,
        min_value: ext.min.1,
        min_tie: ext.min.2,
        maximizer: ext.max.0,
        max_value: ext.max.1,
        max_tie: ext.max.2,
        predicted_min,
        predicted_max,
        min_agrees,
        max_agrees,
        edge_extremes_agree: None,
    })
}

/// Brute-force extremes of `Kf′`; the unbalanced spec is predicted minimal
/// and the balanced one maximal, matching the fewest and most edges.
pub fn extremal_dkf(n: usize, r: usize) -> Result<ExtremalResult> {
    check_extremal_args(n, r)?;
    let ext = search(n, r, dkf_closed)?;
    let edges = search(n, r, |s| Ok(from_usize(s.edge_count())))?;
    let predicted_min = predicted_unbalanced(n, r);
    let predicted_max = predicted_balanced(n, r);
    let edge_extremes_agree = ext.min.0.edge_count() == edges.min.0.edge_count()
        && ext.max.0.edge_count() == edges.max.0.edge_count();
    Ok(ExtremalResult {
        index: IndexKind::DegreeKirchhoff,
        n,
        r,
        candidates: ext.candidates,
        min_agrees: ext.min.0 == predicted_min,
        max_agrees: ext.max.0 == predicted_max,
        minimizer: ext.min.0,
        min_value: ext.min.1,
        min_tie: ext.min.2,
        maximizer: ext.max.0,
        max_value: ext.max.1,
        max_tie: ext.max.2,
        predicted_min,
        predicted_max,
        edge_extremes_agree: Some(edge_extremes_agree),
    })
}

/// A triple satisfying `x ≥ y > α > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeSample {
    x: Rational,
    y: Rational,
    alpha: Rational,
}

impl ExchangeSample {
    /// `None` unless `x ≥ y > α > 0`.
    pub fn new(x: Rational, y: Rational, alpha: Rational) -> Option<Self> {
        (x >= y && y > alpha && alpha > Rational::zero()).then_some(ExchangeSample { x, y, alpha })
    }

    /// `1/(x+α) + 1/(y−α) ≥ 1/x + 1/y`.
    pub fn spread_increases(&self) -> bool {
        let one = Rational::one();
        let lhs = &one / (&self.x + &self.alpha) + &one / (&self.y - &self.alpha);
        lhs >= self.base()
    }

    /// `1/(x−α) + 1/(y+α) ≤ 1/x + 1/y`, applicable when `x − y ≥ α`.
    pub fn squeeze_decreases(&self) -> Option<bool> {
        if &self.x - &self.y < self.alpha {
            return None;
        }
        let one = Rational::one();
        let lhs = &one / (&self.x - &self.alpha) + &one / (&self.y + &self.alpha);
        Some(lhs <= self.base())
    }

    fn base(&self) -> Rational {
        Rational::one() / &self.x + Rational::one() / &self.y
    }
}

/// Both exchange inequalities hold on every sample (the second only where
/// `x − y ≥ α`).
pub fn check_exchange_lemma(samples: &[ExchangeSample]) -> bool {
    samples
        .iter()
        .all(|s| s.spread_increases() && s.squeeze_decreases().unwrap_or(true))
}

/// Direction to the next table row; equal values count as `Up`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Trend {
    Up,
    Down,
}

impl Trend {
    fn between(current: &Rational, next: &Rational) -> Trend {
        if next >= current {
            Trend::Up
        } else {
            Trend::Down
        }
    }

    pub fn arrow(self) -> &'static str {
        match self {
            Trend::Up => "↗",
            Trend::Down => "↘",
        }
    }

    pub fn sign(self) -> &'static str {
        match self {
            Trend::Up => "+",
            Trend::Down => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub spec: PartitionSpec,
    pub edges: usize,
    pub dkf: Rational,
    pub kf: Rational,
    /// Trend to the next row; `None` on the last row.
    pub dkf_trend: Option<Trend>,
    pub kf_trend: Option<Trend>,
}

impl TableRow {
    /// `K_{1^8,7}`-style label with parts ascending.
    pub fn label(&self) -> String {
        let runs: Vec<String> = self
            .spec
            .compressed()
            .into_iter()
            .map(|(p, a)| if a > 1 { format!("{p}^{a}") } else { p.to_string() })
            .collect();
        format!("K_{{{}}}", runs.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub n: usize,
    pub r: usize,
    pub rows: Vec<TableRow>,
}

/// Every complete `r`-partite graph on `n` vertices with its edge count and
/// both Kirchhoff indices, sorted by edge count. Equal edge counts keep the
/// enumeration order (lexicographic on ascending parts).
pub fn generate_table(n: usize, r: usize) -> Result<Table> {
    check_extremal_args(n, r)?;
    let mut rows = Vec::new();
    for spec in enumerate_partitions(n, r)? {
        rows.push(TableRow {
            edges: spec.edge_count(),
            dkf: dkf_closed(&spec)?,
            kf: kf_closed(&spec)?,
            spec,
            dkf_trend: None,
            kf_trend: None,
        });
    }
    rows.sort_by_key(|row| row.edges);
    for i in 1..rows.len() {
        let (head, tail) = rows.split_at_mut(i);
        let (prev, next) = (&mut head[i - 1], &tail[0]);
        prev.dkf_trend = Some(Trend::between(&prev.dkf, &next.dkf));
        prev.kf_trend = Some(Trend::between(&prev.kf, &next.kf));
    }
    Ok(Table { n, r, rows })
}

impl Table {
    /// Column layout: one column per graph, rows for `m`, `Kf′`, `Kf`.
    pub fn render_text(&self, digits: usize) -> String {
        let with_arrow = |v: &Rational, t: Option<Trend>| match t {
            Some(t) => format!("{}{}", to_decimal_string(v, digits), t.arrow()),
            None => to_decimal_string(v, digits),
        };
        let grid: Vec<Vec<String>> = vec![
            std::iter::once(format!("n={}, r={}", self.n, self.r))
                .chain(self.rows.iter().map(TableRow::label))
                .collect(),
            std::iter::once("m=|E|".to_string())
                .chain(self.rows.iter().map(|row| row.edges.to_string()))
                .collect(),
            std::iter::once("Kf'".to_string())
                .chain(self.rows.iter().map(|row| with_arrow(&row.dkf, row.dkf_trend)))
                .collect(),
            std::iter::once("Kf".to_string())
                .chain(self.rows.iter().map(|row| with_arrow(&row.kf, row.kf_trend)))
                .collect(),
        ];
        let columns = grid[0].len();
        let widths: Vec<usize> = (0..columns)
            .map(|c| grid.iter().map(|line| line[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &grid {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (cell, &w))| {
                    let pad = w - cell.chars().count();
                    if c == 0 {
                        format!("{cell}{}", " ".repeat(pad))
                    } else {
                        format!("{}{cell}", " ".repeat(pad))
                    }
                })
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// One line per graph with exact and decimal values; trends as `+`/`-`.
    pub fn render_csv(&self, digits: usize) -> String {
        let mut out = String::from("graph,parts,m,kf_prime,kf_prime_exact,kf_prime_trend,kf,kf_exact,kf_trend\n");
        for row in &self.rows {
            let parts: Vec<String> = row.spec.parts().iter().rev().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "\"{}\",\"{}\",{},{},{},{},{},{},{}",
                row.label(),
                parts.join(" "),
                row.edges,
                to_decimal_string(&row.dkf, digits),
                to_exact_string(&row.dkf),
                row.dkf_trend.map_or("", Trend::sign),
                to_decimal_string(&row.kf, digits),
                to_exact_string(&row.kf),
                row.kf_trend.map_or("", Trend::sign),
            );
        }
        out
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let value = |v: &Rational| {
            serde_json::json!({
                "exact": to_exact_string(v),
                "decimal": to_decimal_string(v, digits),
            })
        };
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                serde_json::json!({
                    "graph": row.label(),
                    "parts": row.spec.parts(),
                    "m": row.edges,
                    "kf_prime": value(&row.dkf),
                    "kf_prime_trend": row.dkf_trend,
                    "kf": value(&row.kf),
                    "kf_trend": row.kf_trend,
                })
            })
            .collect();
        serde_json::json!({
            "schema": 1,
            "n": self.n,
            "r": self.r,
            "rows": rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn parts(specs: impl Iterator<Item = PartitionSpec>) -> Vec<Vec<usize>> {
        specs.map(|s| s.parts().to_vec()).collect()
    }

    #[test]
    fn enumerate_nine_into_three() {
        let got = parts(enumerate_partitions(9, 3).unwrap());
        let expected = vec![
            vec![7, 1, 1],
            vec![6, 2, 1],
            vec![5, 3, 1],
            vec![4, 4, 1],
            vec![5, 2, 2],
            vec![4, 3, 2],
            vec![3, 3, 3],
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerate_edges() {
        assert_eq!(parts(enumerate_partitions(5, 5).unwrap()), vec![vec![1; 5]]);
        assert_eq!(parts(enumerate_partitions(4, 1).unwrap()), vec![vec![4]]);
        assert_eq!(enumerate_partitions(15, 9).unwrap().count(), 11);
        assert!(enumerate_partitions(3, 4).is_err());
        assert!(enumerate_partitions(3, 0).is_err());
    }

    #[test]
    fn predicted_specs() {
        assert_eq!(predicted_balanced(24, 7).parts(), &[4, 4, 4, 3, 3, 3, 3]);
        assert_eq!(predicted_unbalanced(24, 7).parts(), &[18, 1, 1, 1, 1, 1, 1]);
        assert_eq!(predicted_balanced(9, 3).parts(), &[3, 3, 3]);
        assert_eq!(predicted_balanced(2, 2).parts(), &[1, 1]);
        assert_eq!(predicted_kf_extremes(24, 7), (ratio(908, 35), int(74)));
    }

    #[test]
    fn extremal_kf_examples() {
        let res = extremal_kf(24, 7).unwrap();
        assert_eq!(res.minimizer.parts(), &[4, 4, 4, 3, 3, 3, 3]);
        assert_eq!(res.maximizer.parts(), &[18, 1, 1, 1, 1, 1, 1]);
        assert_eq!(res.max_value, int(74));
        assert_eq!(to_decimal_string(&res.min_value, 5), "25.943");
        assert!(res.min_agrees && res.max_agrees);

        let res = extremal_kf(9, 3).unwrap();
        assert_eq!((res.min_value.clone(), res.max_value.clone()), (int(11), int(29)));

        let res = extremal_kf(6, 6).unwrap();
        assert_eq!(res.candidates, 1);
        assert_eq!(res.min_value, int(5));
        assert_eq!(res.max_value, int(5));

        assert_eq!(extremal_kf(5, 1), Err(Error::Disconnected));
    }

    #[test]
    fn extremal_dkf_examples() {
        let res = extremal_dkf(9, 3).unwrap();
        assert_eq!(res.minimizer.parts(), &[7, 1, 1]);
        assert_eq!(res.min_value, ratio(668, 3));
        assert_eq!(res.maximizer.parts(), &[3, 3, 3]);
        assert_eq!(res.max_value, int(396));
        assert_eq!(res.edge_extremes_agree, Some(true));

        let res = extremal_dkf(15, 9).unwrap();
        assert_eq!(res.min_value, ratio(11088, 5));
        assert_eq!(res.max_value, ratio(12988, 5));
        assert_eq!(res.maximizer.parts(), &[2, 2, 2, 2, 2, 2, 1, 1, 1]);
        assert!(res.min_agrees && res.max_agrees);

        assert_eq!(extremal_dkf(4, 4).unwrap().candidates, 1);
    }

    #[test]
    fn exchange_lemma_examples() {
        let s = ExchangeSample::new(int(2), int(2), int(1)).unwrap();
        assert!(s.spread_increases());
        assert_eq!(s.squeeze_decreases(), None);
        let s = ExchangeSample::new(int(5), int(3), int(2)).unwrap();
        assert_eq!(s.squeeze_decreases(), Some(true));
        assert!(check_exchange_lemma(&[s]));
        assert!(ExchangeSample::new(int(1), int(2), int(1)).is_none());
        assert!(ExchangeSample::new(int(3), int(2), int(2)).is_none());
        assert!(ExchangeSample::new(int(3), int(2), int(0)).is_none());
    }

    #[test]
    fn table_single_row() {
        let t = generate_table(2, 2).unwrap();
        assert_eq!(t.rows.len(), 1);
        let row = &t.rows[0];
        assert_eq!((row.edges, row.kf.clone(), row.dkf.clone()), (1, int(1), int(1)));
        assert_eq!(row.kf_trend, None);
        assert_eq!(row.label(), "K_{1^2}");
    }

    #[test]
    fn table_one_ordering_and_trends() {
        let t = generate_table(9, 3).unwrap();
        let labels: Vec<String> = t.rows.iter().map(TableRow::label).collect();
        assert_eq!(
            labels,
            ["K_{1^2,7}", "K_{1,2,6}", "K_{1,3,5}", "K_{1,4^2}", "K_{2^2,5}", "K_{2,3,4}", "K_{3^3}"]
        );
        let kf: Vec<Option<Trend>> = t.rows.iter().map(|r| r.kf_trend).collect();
        use Trend::*;
        assert_eq!(kf, [Some(Down), Some(Down), Some(Down), Some(Up), Some(Down), Some(Down), None]);
        // equal edge counts, different Kf′
        let dkf: Vec<Option<Trend>> = t.rows.iter().map(|r| r.dkf_trend).collect();
        assert_eq!(dkf, [Some(Up), Some(Up), Some(Up), Some(Down), Some(Up), Some(Up), None]);
    }

    #[test]
    fn table_formats() {
        let t = generate_table(9, 3).unwrap();
        let csv = t.render_csv(5);
        assert!(csv.lines().nth(1).unwrap().starts_with("\"K_{1^2,7}\",\"1 1 7\",15,222.67,668/3,+,29,29,-"));
        let json = t.to_json(5);
        assert_eq!(json["schema"], 1);
        assert_eq!(json["rows"][5]["kf"]["decimal"], "11.686");
        assert_eq!(json["rows"][6]["kf_trend"], serde_json::Value::Null);
        let text = t.render_text(5);
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains("382↗"));
    }
}
