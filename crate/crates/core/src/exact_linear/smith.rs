//! Smith normal form and the integer linear algebra built on it.
//!
//! Large operators in this crate are very sparse and usually block diagonal
//! after a permutation, so rank, kernel and invariant-factor computations
//! first split a matrix into the connected components of its nonzero pattern.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coeff::CoeffRing;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub rank: usize,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

pub fn smith(m: &Matrix) -> Smith {
    smith_impl(m, true)
}

fn smith_impl(m: &Matrix, track: bool) -> Smith {
    let (r, c) = m.shape();
    let mut a = m.clone();
    let mut u = if track { Matrix::identity(r) } else { Matrix::zeros(0, 0) };
    let mut v = if track { Matrix::identity(c) } else { Matrix::zeros(0, 0) };
    let mut rank = 0;
    for k in 0..r.min(c) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => x.abs() < a[(bi, bj)].abs(),
                    };
                    if better {
                        best = Some((i, j));
                        if x.abs().is_one() {
                            break;
                        }
                    }
                }
                if let Some((bi, bj)) = best {
                    if a[(bi, bj)].abs().is_one() {
                        break;
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v, rank);
            };
            a.swap_rows(k, pi);
            a.swap_cols(k, pj);
            if track {
                u.swap_rows(k, pi);
                v.swap_cols(k, pj);
            }
            let pivot = a[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..r {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, k)] / &pivot);
                a.add_row_multiple(i, k, &q);
                if track {
                    u.add_row_multiple(i, k, &q);
                }
                if !a[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..c {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(k, j)] / &pivot);
                a.add_col_multiple(j, k, &q);
                if track {
                    v.add_col_multiple(j, k, &q);
                }
                if !a[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row k and retry
            let mut offending = None;
            'scan: for i in k + 1..r {
                for j in k + 1..c {
                    if !a[(i, j)].is_zero() && !a[(i, j)].is_multiple_of(&pivot) {
                        offending = Some(i);
                        break 'scan;
                    }
                }
            }
            match offending {
                Some(i) => {
                    a.add_row_multiple(k, i, &BigInt::one());
                    if track {
                        u.add_row_multiple(k, i, &BigInt::one());
                    }
                }
                None => break,
            }
        }
        if a[(k, k)].is_negative() {
            a.negate_row(k);
            if track {
                u.negate_row(k);
            }
        }
        rank += 1;
    }
    finish(a, u, v, rank)
}

fn finish(d: Matrix, u: Matrix, v: Matrix, rank: usize) -> Smith {
    Smith { u, d, v, rank }
}

/// Connected components of the nonzero pattern: `(rows, cols)` pairs.
/// Zero rows and zero columns come back as components with an empty side.
pub fn components(m: &Matrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (r, c) = m.shape();
    let mut parent: Vec<usize> = (0..r + c).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..r {
        for j in 0..c {
            if !m[(i, j)].is_zero() {
                let a = find(&mut parent, i);
                let b = find(&mut parent, r + j);
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
    for i in 0..r {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().0.push(i);
    }
    for j in 0..c {
        let root = find(&mut parent, r + j);
        groups.entry(root).or_default().1.push(j);
    }
    groups.into_values().collect()
}

/// Rank and the invariant factors greater than one, as a divisibility chain.
pub fn invariant_factors(m: &Matrix) -> (usize, Vec<BigInt>) {
    let mut rank = 0;
    let mut torsion = Vec::new();
    for (rows, cols) in components(m) {
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let block = m.select(&rows, &cols);
        let s = smith_impl(&block, false);
        rank += s.rank;
        torsion.extend(s.diagonal().into_iter().filter(|d| !d.is_one()));
    }
    (rank, normalize_chain(torsion))
}

/// Rewrites a multiset of positive integers as the divisibility chain of
/// the same finite abelian group.
pub fn normalize_chain(mut entries: Vec<BigInt>) -> Vec<BigInt> {
    entries.retain(|d| !d.is_one());
    if entries.len() <= 1 {
        return entries;
    }
    let s = smith_impl(&Matrix::diagonal(&entries), false);
    s.diagonal().into_iter().filter(|d| !d.is_one()).collect()
}

pub fn rank(ring: CoeffRing, m: &Matrix) -> Result<usize> {
    match ring {
        CoeffRing::Integers => Ok(invariant_factors(m).0),
        _ => {
            let p = ring.require_field()?;
            Ok(ModP::from_matrix(m, p).rank())
        }
    }
}

/// A basis of `ker m` (columns of the returned matrix). Over the integers
/// the kernel lattice is saturated, so the basis spans it exactly.
pub fn kernel(ring: CoeffRing, m: &Matrix) -> Result<Matrix> {
    let cols = m.cols();
    let mut vectors: Vec<Vec<BigInt>> = Vec::new();
    match ring {
        CoeffRing::Integers => {
            for (rows, cs) in components(m) {
                if cs.is_empty() {
                    continue;
                }
                if rows.is_empty() {
                    for &j in &cs {
                        let mut e = vec![BigInt::zero(); cols];
                        e[j] = BigInt::one();
                        vectors.push(e);
                    }
                    continue;
                }
                let s = smith(&m.select(&rows, &cs));
                for k in s.rank..cs.len() {
                    let mut e = vec![BigInt::zero(); cols];
                    for (t, &j) in cs.iter().enumerate() {
                        e[j] = s.v[(t, k)].clone();
                    }
                    vectors.push(e);
                }
            }
        }
        _ => {
            let p = ring.require_field()?;
            vectors = ModP::from_matrix(m, p).kernel();
        }
    }
    vectors.sort();
    Ok(Matrix::from_columns(cols, &vectors))
}

/// Solves `a * x = b` for `x`, or reports that no solution exists.
pub fn solve(ring: CoeffRing, a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.rows() != b.rows() {
        return Err(Error::Dimension("solve: row mismatch".into()));
    }
    match ring {
        CoeffRing::Integers => solve_integers(a, b),
        _ => {
            let p = ring.require_field()?;
            ModP::solve(a, b, p)
        }
    }
}

fn solve_integers(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let s = smith(a);
    let ub = s.u.dot(b);
    let mut y = Matrix::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            let rhs = &ub[(i, j)];
            if i < s.rank {
                let d = &s.d[(i, i)];
                if !rhs.is_multiple_of(d) {
                    return Err(Error::NoSolution(format!(
                        "column {j}: {rhs} not divisible by invariant factor {d}"
                    )));
                }
                y[(i, j)] = rhs / d;
            } else if !rhs.is_zero() {
                return Err(Error::NoSolution(format!("column {j}: inconsistent system")));
            }
        }
    }
    Ok(s.v.dot(&y))
}

/// Row Hermite normal form of the lattice spanned by `rows`: echelon form,
/// positive pivots, entries above each pivot reduced into `0..pivot`.
/// Zero rows are dropped, so the result is a canonical basis.
pub fn hermite_rows(m: &Matrix) -> Matrix {
    let mut a = m.clone();
    let (r, c) = a.shape();
    let mut prow = 0;
    let mut pivots = Vec::new();
    for j in 0..c {
        if prow == r {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in prow..r {
                if !a[(i, j)].is_zero() && best.is_none_or(|b| a[(i, j)].abs() < a[(b, j)].abs()) {
                    best = Some(i);
                }
            }
            let Some(bi) = best else { break };
            a.swap_rows(prow, bi);
            let pivot = a[(prow, j)].clone();
            let mut clean = true;
            for i in prow + 1..r {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, j)] / &pivot);
                a.add_row_multiple(i, prow, &q);
                if !a[(i, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                if a[(prow, j)].is_negative() {
                    a.negate_row(prow);
                }
                pivots.push((prow, j));
                prow += 1;
                break;
            }
        }
    }
    for &(pr, pc) in &pivots {
        let pivot = a[(pr, pc)].clone();
        for i in 0..pr {
            let q = -a[(i, pc)].div_floor(&pivot);
            a.add_row_multiple(i, pr, &q);
        }
    }
    let keep: Vec<usize> = (0..prow).collect();
    let cols: Vec<usize> = (0..c).collect();
    a.select(&keep, &cols)
}

/// The canonical row basis of the row space of `m`: Hermite normal form
/// over the integers, reduced row echelon form over `Z/p`.
pub fn echelon_rows(ring: CoeffRing, m: &Matrix) -> Result<Matrix> {
    match ring {
        CoeffRing::Integers => Ok(hermite_rows(m)),
        _ => {
            let p = ring.require_field()?;
            let mut a = ModP::from_matrix(m, p);
            let rank = a.rref().len();
            let data = a.data[..rank * a.cols].iter().map(|&x| BigInt::from(x)).collect();
            Matrix::from_rows(rank, a.cols, data)
        }
    }
}

/// Dense matrices over `Z/p`, `p` prime and small.
struct ModP {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModP {
    fn from_matrix(m: &Matrix, p: u64) -> Self {
        let pb = BigInt::from(p);
        let data = m
            .entries()
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().expect("reduced entry fits"))
            .collect();
        ModP {
            p,
            rows: m.rows(),
            cols: m.cols(),
            data,
        }
    }

    fn inv(&self, x: u64) -> u64 {
        pow_mod(x, self.p - 2, self.p)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&i| self.data[i * self.cols + col] != 0) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(row * self.cols + j, pr * self.cols + j);
            }
            let inv = self.inv(self.data[row * self.cols + col]);
            for j in 0..self.cols {
                let v = &mut self.data[row * self.cols + j];
                *v = *v * inv % p;
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let f = self.data[i * self.cols + col];
                if f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let s = self.data[row * self.cols + j];
                    if s != 0 {
                        let v = &mut self.data[i * self.cols + j];
                        *v = (*v + p - f * s % p) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn rank(mut self) -> usize {
        self.rref().len()
    }

    fn kernel(mut self) -> Vec<Vec<BigInt>> {
        let pivots = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigInt::zero(); self.cols];
                v[f] = BigInt::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    let x = self.data[r * self.cols + f];
                    v[pc] = BigInt::from((p - x) % p);
                }
                v
            })
            .collect()
    }

    fn solve(a: &Matrix, b: &Matrix, p: u64) -> Result<Matrix> {
        let aug = a.hstack(b)?;
        let mut m = ModP::from_matrix(&aug, p);
        let pivots = m.rref();
        let n = a.cols();
        if pivots.iter().any(|&c| c >= n) {
            return Err(Error::NoSolution("inconsistent system over Z/p".into()));
        }
        let mut x = Matrix::zeros(n, b.cols());
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols() {
                x[(pc, j)] = BigInt::from(m.data[r * m.cols + n + j]);
            }
        }
        Ok(x)
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Determinant by fraction-free elimination (Bareiss).
pub fn determinant(m: &Matrix) -> BigInt {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

/// True when `m` is square and invertible over `ring`.
pub fn is_invertible(ring: CoeffRing, m: &Matrix) -> Result<bool> {
    if m.rows() != m.cols() {
        return Ok(false);
    }
    match ring {
        CoeffRing::Integers => {
            let (r, t) = invariant_factors(m);
            Ok(r == m.rows() && t.is_empty())
        }
        _ => Ok(rank(ring, m)? == m.rows()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_i64_rows(rows).unwrap()
    }

    fn check(mat: &Matrix) -> Smith {
        let s = smith(mat);
        assert_eq!(s.u.dot(mat).dot(&s.v), s.d, "U M V = D");
        assert!(determinant(&s.u).abs().is_one());
        assert!(determinant(&s.v).abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j || i >= s.rank {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn smith_examples() {
        let s = check(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = check(&m(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        let z = Matrix::zeros(2, 3);
        let s = check(&z);
        assert_eq!(s.rank, 0);
        assert!(s.u.is_identity() && s.v.is_identity());
    }

    #[test]
    fn elementary_operation_oracle() {
        // [[2,4],[6,8]]: gcd of entries is 2, |det| = 8, so d1 = 2 and d2 = 8/2
        let a = m(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(determinant(&a), BigInt::from(-8));
        let (r, t) = invariant_factors(&a);
        assert_eq!(r, 2);
        assert_eq!(t, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = kernel(CoeffRing::Integers, &a).unwrap();
        assert_eq!(k.cols(), 2);
        assert!(a.dot(&k).is_zero());
        let b = m(&[vec![5], vec![10]]);
        let x = solve(CoeffRing::Integers, &a, &b).unwrap();
        assert_eq!(a.dot(&x), b);
        let bad = m(&[vec![1], vec![1]]);
        assert!(solve(CoeffRing::Integers, &a, &bad).is_err());
        let two = m(&[vec![2]]);
        assert!(solve(CoeffRing::Integers, &two, &m(&[vec![1]])).is_err());
        assert!(solve(CoeffRing::Modular(3), &two, &m(&[vec![1]])).is_ok());
    }

    #[test]
    fn hermite_is_canonical() {
        let a = m(&[vec![0, 2, 4], vec![0, 1, 1]]);
        let b = m(&[vec![0, 1, 3], vec![0, 0, 2], vec![0, 3, 5]]);
        assert_eq!(hermite_rows(&a), hermite_rows(&b));
    }

    #[test]
    fn mod_p_rank_and_kernel() {
        let a = m(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(rank(CoeffRing::Modular(2), &a).unwrap(), 1);
        let k = kernel(CoeffRing::Modular(2), &a).unwrap();
        assert!(a.dot(&k).is_zero_in(CoeffRing::Modular(2)));
        assert!(rank(CoeffRing::Modular(4), &a).is_err());
    }

    proptest! {
        #[test]
        fn smith_invariants_hold(entries in proptest::collection::vec(-6i64..6, 12), cols in 1usize..5) {
            let rows = 12 / cols;
            let data: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..(i + 1) * cols].to_vec()).collect();
            let mat = m(&data);
            let s = check(&mat);
            let (r, t) = invariant_factors(&mat);
            prop_assert_eq!(r, s.rank);
            let nontrivial: Vec<BigInt> = s.diagonal().into_iter().filter(|d| !d.is_one()).collect();
            prop_assert_eq!(t, nontrivial);
            let k = kernel(CoeffRing::Integers, &mat).unwrap();
            prop_assert_eq!(k.cols(), mat.cols() - r);
            prop_assert!(mat.dot(&k).is_zero());
        }
    }
}
