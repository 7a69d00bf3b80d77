use num_traits::{One, Zero};

use super::matrix::{Limits, RatMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{from_usize, Rational};

/// `L = D − A`.
pub fn laplacian(g: &Graph) -> RatMatrix {
    let degrees = g.degrees();
    RatMatrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            from_usize(degrees[i])
        } else if g.has_edge(i, j) {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `D⁻¹L`, similar to the normalized Laplacian `D^{-1/2} L D^{-1/2}` but with
/// rational entries.
pub fn random_walk_laplacian(g: &Graph) -> Result<RatMatrix> {
    let degrees = g.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let l = laplacian(g);
    Ok(RatMatrix::from_fn(g.n(), g.n(), |i, j| {
        &l[(i, j)] / from_usize(degrees[i])
    }))
}

/// Moore–Penrose inverse of the Laplacian of a connected graph, through
/// `L⁺ = (L + J)⁻¹ − J/n²`.
pub fn laplacian_pinv(g: &Graph) -> Result<RatMatrix> {
    laplacian_pinv_with(g, &Limits::default())
}

pub fn laplacian_pinv_with(g: &Graph, limits: &Limits) -> Result<RatMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let j = RatMatrix::ones(n, n);
    let shifted = &laplacian(g) + &j;
    let inv = shifted.inverse_with(limits)?;
    let n2 = from_usize(n * n);
    Ok(&inv - &j.scale(&(Rational::one() / n2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartitionSpec;
    use crate::rational::{int, ratio};

    #[test]
    fn laplacian_k2() {
        let l = laplacian(&Graph::complete(2));
        assert_eq!(l, RatMatrix::from_integers(&[[1, -1], [-1, 1]]));
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = Graph::complete_multipartite(&PartitionSpec::new(vec![2, 3, 4]).unwrap());
        let l = laplacian(&g);
        assert!(l.row_sums().iter().all(Zero::is_zero));
        assert!(l.is_symmetric());
    }

    #[test]
    fn multipartite_laplacian_block_form() {
        // L(K_{2,3}) = (3I + J_2) ⊕ (2I + J_3) − J_5
        let spec = PartitionSpec::new(vec![2, 3]).unwrap();
        let l = laplacian(&Graph::complete_multipartite(&spec));
        let mut expected = &RatMatrix::zeros(5, 5) - &RatMatrix::ones(5, 5);
        for part in 0..spec.r() {
            let d = from_usize(spec.part_degree(part));
            for i in spec.part_range(part) {
                for j in spec.part_range(part) {
                    expected[(i, j)] += int(1);
                }
                expected[(i, i)] += &d;
            }
        }
        assert_eq!(l, expected);
    }

    #[test]
    fn pinv_k2() {
        let x = laplacian_pinv(&Graph::complete(2)).unwrap();
        assert_eq!(
            x,
            RatMatrix::from_rows(vec![
                vec![ratio(1, 4), ratio(-1, 4)],
                vec![ratio(-1, 4), ratio(1, 4)],
            ])
            .unwrap()
        );
    }

    #[test]
    fn pinv_rejects_disconnected() {
        assert_eq!(laplacian_pinv(&Graph::empty(3)), Err(Error::Disconnected));
    }

    #[test]
    fn random_walk_rejects_isolated() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(random_walk_laplacian(&g), Err(Error::IsolatedVertex(2)));
    }
}
