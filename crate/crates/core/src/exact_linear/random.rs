//! Seeded random matrices, unimodular changes of basis and complexes.

use num_bigint::BigInt;
use rand::Rng;

use super::coeff::CoeffRing;
use super::complex::{BoundedComplex, ChainMap};
use super::matrix::Matrix;

/// Entries uniform in `[-3, 3]`.
pub fn random_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-3i64..=3)))
}

/// A random product of elementary row operations, with its inverse.
pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> (Matrix, Matrix) {
    let mut u = Matrix::identity(n);
    let mut inv = Matrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            u.negate_row(0);
            inv.negate_row(0);
        }
        return (u, inv);
    }
    for _ in 0..3 * n {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        u.add_row_multiple(a, b, &c);
        // (E u)⁻¹ = u⁻¹ E⁻¹: column operation on the inverse
        inv.add_col_multiple(b, a, &-c);
    }
    (u, inv)
}

/// A complex in degrees `0..=top` with ranks `≤ max_rank`: a sum of
/// spheres and pieces `Z --m--> Z` (`m ∈ {1,2,3}`), in a random basis.
pub fn random_complex<R: Rng>(ring: CoeffRing, top: usize, max_rank: usize, rng: &mut R) -> BoundedComplex {
    let ranks: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..=max_rank)).collect();
    let mut used = vec![0usize; top + 1];
    let mut d: Vec<Matrix> = (0..top).map(|k| Matrix::zeros(ranks[k + 1], ranks[k])).collect();
    for k in 0..=top {
        while used[k] < ranks[k] {
            let slot = used[k];
            used[k] += 1;
            if k < top && used[k + 1] < ranks[k + 1] && rng.gen_bool(0.6) {
                d[k][(used[k + 1], slot)] = BigInt::from(rng.gen_range(1i64..=3));
                used[k + 1] += 1;
            }
        }
    }
    let changes: Vec<(Matrix, Matrix)> = ranks.iter().map(|&r| random_unimodular(r, rng)).collect();
    let d = (0..top)
        .map(|k| changes[k + 1].0.dot(&d[k]).dot(&changes[k].1).reduce(ring))
        .collect();
    BoundedComplex::from_ranks(ring, &ranks, d).expect("d² = 0 by construction")
}

/// `c·1 + ds + sd` for a random `s` of degree −1 and `c ∈ [-2, 2]`.
pub fn random_endomorphism<R: Rng>(a: &BoundedComplex, rng: &mut R) -> ChainMap {
    let top = a.top();
    let s: Vec<Matrix> = (0..=top)
        .map(|k| {
            if k == 0 {
                Matrix::zeros(0, a.rank(0))
            } else {
                random_matrix(a.rank(k - 1), a.rank(k), rng)
            }
        })
        .collect();
    let c = BigInt::from(rng.gen_range(-2i64..=2));
    let maps = (0..=top)
        .map(|k| {
            let mut m = Matrix::identity(a.rank(k)).scale(&c);
            if k > 0 {
                m = m.plus(&a.differential(k - 1).dot(&s[k]));
            }
            if k < top {
                m = m.plus(&s[k + 1].dot(&a.differential(k)));
            }
            m.reduce(a.ring())
        })
        .collect();
    ChainMap { maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unimodular_pairs_are_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 0..5 {
            let (u, v) = random_unimodular(n, &mut rng);
            assert!(u.dot(&v).is_identity());
        }
    }

    #[test]
    fn random_complexes_and_maps_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let a = random_complex(CoeffRing::Integers, 4, 3, &mut rng);
            assert!(a.ranks().iter().all(|&r| r <= 3));
            random_endomorphism(&a, &mut rng).check(&a, &a).unwrap();
        }
    }
}
