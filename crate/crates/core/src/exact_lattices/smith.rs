//! Smith normal form with unimodular transforms.

use crate::error::Result;
use crate::exact_lattices::matrix::Matrix;
use crate::scalar::Scalar;

/// `u * a * v = d`, with `u`, `v` unimodular and `d` diagonal in canonical
/// form: nonnegative entries `d_0 | d_1 | ...` followed by zeros.
/// `u_inv` is maintained alongside `u`; its leading `rank` columns span the
/// saturation of the column space of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    rank: usize,
}

impl<T: Scalar> SmithDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Computes the Smith decomposition of `a`. Total on all shapes.
pub fn snf<T: Scalar>(a: &Matrix<T>) -> Result<SmithDecomposition<T>> {
    let mut w = Worker::new(a.clone(), true);
    w.run()?;
    let rank = w.rank;
    let Worker { d, u, u_inv, v, .. } = w;
    Ok(SmithDecomposition { u: u.unwrap(), u_inv: u_inv.unwrap(), d, v: v.unwrap(), rank })
}

/// Diagonal only; skips the transform bookkeeping.
pub fn smith_diagonal<T: Scalar>(a: &Matrix<T>) -> Result<Vec<T>> {
    let mut w = Worker::new(a.clone(), false);
    w.run()?;
    Ok((0..w.rank).map(|i| w.d.get(i, i).clone()).collect())
}

struct Worker<T> {
    d: Matrix<T>,
    u: Option<Matrix<T>>,
    u_inv: Option<Matrix<T>>,
    v: Option<Matrix<T>>,
    rank: usize,
}

impl<T: Scalar> Worker<T> {
    fn new(a: Matrix<T>, track: bool) -> Self {
        let (m, n) = a.shape();
        Self {
            d: a,
            u: track.then(|| Matrix::identity(m)),
            u_inv: track.then(|| Matrix::identity(m)),
            v: track.then(|| Matrix::identity(n)),
            rank: 0,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    /// row[target] += c * row[source]
    fn row_op(&mut self, target: usize, source: usize, c: &T) -> Result<()> {
        self.d.add_row_multiple(target, source, c)?;
        if let Some(u) = &mut self.u {
            u.add_row_multiple(target, source, c)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.add_col_multiple(source, target, &c.neg_c()?)?;
        }
        Ok(())
    }

    /// col[target] += c * col[source]
    fn col_op(&mut self, target: usize, source: usize, c: &T) -> Result<()> {
        self.d.add_col_multiple(target, source, c)?;
        if let Some(v) = &mut self.v {
            v.add_col_multiple(target, source, c)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        self.d.negate_row(i)?;
        if let Some(u) = &mut self.u {
            u.negate_row(i)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i)?;
        }
        Ok(())
    }

    /// Position of a nonzero entry of minimal absolute value in the trailing block.
    fn min_pivot(&self, t: usize) -> Result<Option<(usize, usize)>> {
        let (m, n) = self.d.shape();
        let mut best: Option<(T, usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = self.d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs_c()?;
                if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                    let one = a.is_one();
                    best = Some((a, i, j));
                    if one {
                        return Ok(best.map(|(_, i, j)| (i, j)));
                    }
                }
            }
        }
        Ok(best.map(|(_, i, j)| (i, j)))
    }

    fn run(&mut self) -> Result<()> {
        let (m, n) = self.d.shape();
        let mut t = 0;
        while t < m.min(n) {
            let Some((pi, pj)) = self.min_pivot(t)? else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                if self.clear_cross(t)? {
                    continue;
                }
                // Row and column t are clear; enforce divisibility of the rest.
                let p = self.d.get(t, t).clone();
                let mut offender = None;
                'scan: for i in t + 1..m {
                    for j in t + 1..n {
                        if !self.d.get(i, j).is_multiple_of(&p) {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(i) => self.row_op(t, i, &T::one())?,
                    None => break,
                }
            }
            if self.d.get(t, t).is_negative() {
                self.negate_row(t)?;
            }
            t += 1;
        }
        self.rank = t;
        Ok(())
    }

    /// One elimination sweep over row and column `t`. Returns true when a
    /// smaller remainder was moved into the pivot and another sweep is needed.
    fn clear_cross(&mut self, t: usize) -> Result<bool> {
        let (m, n) = self.d.shape();
        let p = self.d.get(t, t).clone();
        for i in t + 1..m {
            let x = self.d.get(i, t);
            if x.is_zero() {
                continue;
            }
            let q = x.div_c(&p)?;
            self.row_op(i, t, &q.neg_c()?)?;
        }
        for j in t + 1..n {
            let x = self.d.get(t, j);
            if x.is_zero() {
                continue;
            }
            let q = x.div_c(&p)?;
            self.col_op(j, t, &q.neg_c()?)?;
        }
        // Remainders are strictly smaller than the pivot; promote the smallest.
        let mut best: Option<(T, bool, usize)> = None;
        for i in t + 1..m {
            let x = self.d.get(i, t);
            if !x.is_zero() {
                let a = x.abs_c()?;
                if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                    best = Some((a, true, i));
                }
            }
        }
        for j in t + 1..n {
            let x = self.d.get(t, j);
            if !x.is_zero() {
                let a = x.abs_c()?;
                if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                    best = Some((a, false, j));
                }
            }
        }
        match best {
            None => Ok(false),
            Some((_, true, i)) => {
                self.swap_rows(t, i);
                Ok(true)
            }
            Some((_, false, j)) => {
                self.swap_cols(t, j);
                Ok(true)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn check<T: Scalar>(a: &Matrix<T>) -> SmithDecomposition<T> {
        let s = snf(a).unwrap();
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.mul(&s.u_inv).unwrap().is_identity());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(f.iter().all(|x| x.is_positive()));
        s
    }

    #[test]
    fn identity_case() {
        let s = check(&Matrix::<i64>::identity(2));
        assert!(s.d.is_identity());
        assert!(s.u.is_identity());
        assert!(s.v.is_identity());
    }

    #[test]
    fn coprime_diagonal_merges() {
        let s = check(&Matrix::<i64>::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariant_factors(), vec![1, 6]);
    }

    #[test]
    fn gcd_and_determinant() {
        let s = check(&Matrix::<i64>::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.invariant_factors(), vec![2, 4]);
    }

    #[test]
    fn empty_shapes() {
        for (m, n) in [(0, 0), (0, 3), (2, 0)] {
            let s = check(&Matrix::<i64>::zeros(m, n));
            assert_eq!(s.rank(), 0);
            assert_eq!(s.u.shape(), (m, m));
            assert_eq!(s.v.shape(), (n, n));
        }
    }

    #[test]
    fn rank_deficient_bigint() {
        let a = Matrix::<BigInt>::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = check(&a);
        // Classic example: diag(2, 6, 12).
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let z = Matrix::<BigInt>::from_i64(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(check(&z).rank(), 1);
    }

    #[test]
    fn diagonal_only_matches() {
        let a = Matrix::<i64>::from_i64(&[&[4, 6, 0], &[6, 4, 2], &[0, 2, 8]]);
        assert_eq!(smith_diagonal(&a).unwrap(), snf(&a).unwrap().invariant_factors());
    }
}
