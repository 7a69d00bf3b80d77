//! Simple undirected graphs and the constructions used throughout the crate:
//! complete multipartite graphs, joins, complements and disjoint unions.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`, stored as a dense adjacency
/// relation. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.set(u - 1, u);
        }
        g
    }

    /// The cycle `C_n`; for `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.set(0, n - 1);
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// tolerated; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, size: n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, size: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Parses the edge-list text format: first line `n`, then one `u v` pair
    /// per line (0-based, whitespace separated). Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: first_line,
            message: format!("expected vertex count, got {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line: first_line,
                message: "vertex count must be positive".into(),
            });
        }

        let mut g = Graph::empty(n);
        for (line, text) in lines {
            let mut fields = text.split_whitespace();
            let mut endpoint = || -> Result<usize> {
                let field = fields.next().ok_or(Error::Parse {
                    line,
                    message: "expected two endpoints".into(),
                })?;
                let v: usize = field.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad vertex id {field:?}"),
                })?;
                if v >= n {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex {v} out of range for n = {n}"),
                    });
                }
                Ok(v)
            };
            let u = endpoint()?;
            let v = endpoint()?;
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line,
                    message: "trailing fields".into(),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Erdős–Rényi `G(n, p)` sample.
    pub fn gnp_random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// A random connected graph: a random spanning tree plus `G(n, p)` noise.
    pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Graph::gnp_random(n, p, rng);
        for v in 1..n {
            let u = rng.random_range(0..v);
            g.set(u, v);
        }
        g
    }

    /// `K_{p_1,…,p_r}` with vertices numbered consecutively by part, in the
    /// order the parts appear in `spec`.
    pub fn complete_multipartite(spec: &PartitionSpec) -> Self {
        spec.parts()
            .iter()
            .map(|&p| Graph::empty(p))
            .reduce(|acc, part| acc.join(&part))
            .expect("partition specs are never empty")
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// Number of connected components (0 for the graph on no vertices).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `G ∨ H`: disjoint union plus every edge between the two vertex sets.
    /// Vertices of `other` are renumbered to follow those of `self`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        for (u, v) in other.edges() {
            g.set(self.n + u, self.n + v);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Part sizes `p_1,…,p_r` of a complete multipartite graph.
///
/// The order given at construction is kept, since it fixes vertex numbering;
/// every invariant formula is symmetric in the parts, and [`canonical`]
/// returns the non-increasing form used for comparisons.
///
/// [`canonical`]: PartitionSpec::canonical
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

/// Position of a vertex of `K_{p_1,…,p_r}`: its part (0-based) and the offset
/// inside that part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexLocator {
    pub part: usize,
    pub offset: usize,
}

impl PartitionSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSpec("at least one part is required".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("part sizes must be positive".into()));
        }
        Ok(PartitionSpec { parts })
    }

    /// Parses the `p` / `p^a` grammar, e.g. `2^3,3^2,5,7`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for term in text.split(',') {
            let term = term.trim();
            let (size, mult) = match term.split_once('^') {
                Some((p, a)) => (p.trim(), a.trim()),
                None => (term, "1"),
            };
            let size: usize = size
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad part size in term {term:?}")))?;
            let mult: usize = mult
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad multiplicity in term {term:?}")))?;
            if mult == 0 {
                return Err(Error::InvalidSpec(format!("zero multiplicity in term {term:?}")));
            }
            parts.extend(std::iter::repeat_n(size, mult));
        }
        PartitionSpec::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of vertices `n = Σ p_i`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `r`.
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn canonical(&self) -> PartitionSpec {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PartitionSpec { parts }
    }

    pub fn is_canonical(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `(p̄_i, a_i)` pairs with distinct sizes `p̄_i` strictly increasing and
    /// `a_i` their multiplicities.
    pub fn compressed(&self) -> Vec<(usize, usize)> {
        let mut sorted = self.parts.clone();
        sorted.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for p in sorted {
            match out.last_mut() {
                Some((size, mult)) if *size == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Degree of each vertex in part `i`: `n - p_i`.
    pub fn part_degree(&self, part: usize) -> usize {
        self.n() - self.parts[part]
    }

    /// `m = (n² − Σ p_i²) / 2`.
    pub fn edge_count(&self) -> usize {
        let n = self.n();
        (n * n - self.parts.iter().map(|p| p * p).sum::<usize>()) / 2
    }

    pub fn locate(&self, vertex: usize) -> Result<VertexLocator> {
        let mut start = 0;
        for (part, &p) in self.parts.iter().enumerate() {
            if vertex < start + p {
                return Ok(VertexLocator {
                    part,
                    offset: vertex - start,
                });
            }
            start += p;
        }
        Err(Error::IndexOutOfRange {
            index: vertex,
            size: self.n(),
        })
    }

    pub fn vertex_id(&self, loc: VertexLocator) -> Result<usize> {
        let p = *self.parts.get(loc.part).ok_or(Error::IndexOutOfRange {
            index: loc.part,
            size: self.r(),
        })?;
        if loc.offset >= p {
            return Err(Error::IndexOutOfRange {
                index: loc.offset,
                size: p,
            });
        }
        Ok(self.parts[..loc.part].iter().sum::<usize>() + loc.offset)
    }

    /// Vertex ids belonging to part `i`.
    pub fn part_range(&self, part: usize) -> std::ops::Range<usize> {
        let start: usize = self.parts[..part].iter().sum();
        start..start + self.parts[part]
    }
}

impl fmt::Display for PartitionSpec {
    /// Run-length form in stored order, e.g. `4^3,3^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for PartitionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartitionSpec::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spec(parts: &[usize]) -> PartitionSpec {
        PartitionSpec::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn multipartite_basics() {
        let k2 = Graph::complete_multipartite(&spec(&[1, 1]));
        assert_eq!(k2, Graph::complete(2));
        assert_eq!(Graph::complete_multipartite(&spec(&[2, 3, 4])).edge_count(), 26);
        assert_eq!(Graph::complete_multipartite(&spec(&[7, 1, 1])).edge_count(), 15);

        let g = Graph::complete_multipartite(&spec(&[2, 3, 4]));
        assert!(g.is_connected());
        assert_eq!(g.degrees(), vec![7, 7, 6, 6, 6, 5, 5, 5, 5]);

        let s = PartitionSpec::parse("1^7,2,6").unwrap();
        assert_eq!(Graph::complete_multipartite(&s).edge_count(), 89);
        assert_eq!(s.edge_count(), 89);
    }

    #[test]
    fn single_part_is_disconnected() {
        let g = Graph::complete_multipartite(&spec(&[3]));
        assert_eq!(g.edge_count(), 0);
        assert!(!g.is_connected());
        assert!(Graph::complete_multipartite(&spec(&[1])).is_connected());
    }

    #[test]
    fn join_examples() {
        let k23 = Graph::empty(2).join(&Graph::empty(3));
        assert_eq!(k23, Graph::complete_multipartite(&spec(&[2, 3])));
        let star = Graph::empty(1).join(&Graph::empty(5));
        assert_eq!(star.edge_count(), 5);
        assert_eq!(star.degree(0), 5);
    }

    #[test]
    fn join_edge_count_and_induced_pieces() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = Graph::gnp_random(6, 0.4, &mut rng);
            let h = Graph::gnp_random(6, 0.4, &mut rng);
            let j = g.join(&h);
            // count edges of the constructed graph directly
            let mut counted = 0;
            for u in 0..j.n() {
                for v in (u + 1)..j.n() {
                    if j.has_edge(u, v) {
                        counted += 1;
                    }
                }
            }
            assert_eq!(counted, g.edge_count() + h.edge_count() + 36);
            assert_eq!(j.induced(&(0..6).collect::<Vec<_>>()), g);
            assert_eq!(j.induced(&(6..12).collect::<Vec<_>>()), h);
            assert!(j.is_connected());
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let g = Graph::gnp_random(8, 0.5, &mut rng);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(Graph::complete(1).disjoint_union(&Graph::complete(1)), Graph::empty(2));
        let u = Graph::complete(2).disjoint_union(&Graph::complete(3));
        assert_eq!(u.complement(), Graph::complete_multipartite(&spec(&[2, 3])));

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let g = Graph::gnp_random(5, 0.3, &mut rng);
            let h = Graph::gnp_random(4, 0.3, &mut rng);
            let u = g.disjoint_union(&h);
            assert_eq!(u.component_count(), g.component_count() + h.component_count());
        }
    }

    #[test]
    fn spec_parsing_and_display() {
        let s = PartitionSpec::parse("2^3,3^2,5,7").unwrap();
        assert_eq!(s.parts(), &[2, 2, 2, 3, 3, 5, 7]);
        assert_eq!(s.to_string(), "2^3,3^2,5,7");
        assert_eq!(s.canonical().to_string(), "7,5,3^2,2^3");
        assert_eq!(s.compressed(), vec![(2, 3), (3, 2), (5, 1), (7, 1)]);
        let (r, n) = s
            .compressed()
            .iter()
            .fold((0, 0), |(r, n), &(p, a)| (r + a, n + a * p));
        assert_eq!((r, n), (s.r(), s.n()));

        assert!(PartitionSpec::parse("").is_err());
        assert!(PartitionSpec::parse("2,0").is_err());
        assert!(PartitionSpec::parse("2^0").is_err());
        assert!(PartitionSpec::parse("2,x").is_err());
        assert!(PartitionSpec::parse("3^").is_err());
    }

    #[test]
    fn locator_round_trip() {
        let s = spec(&[2, 3, 4]);
        for v in 0..9 {
            let loc = s.locate(v).unwrap();
            assert!(loc.offset < s.parts()[loc.part]);
            assert_eq!(s.vertex_id(loc).unwrap(), v);
        }
        assert!(s.locate(9).is_err());
        assert!(s.vertex_id(VertexLocator { part: 0, offset: 2 }).is_err());
        assert_eq!(s.part_range(2), 5..9);
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::parse_edge_list("4\n0 1\n1 2\n2 1\n\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(4));
        assert!(matches!(
            Graph::parse_edge_list("3\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Graph::parse_edge_list("3\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("3\n0\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("0\n").is_err());
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1))));
    }
}
