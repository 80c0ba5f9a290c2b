//! Cartan matrices: standard families, finite-type validation and Dynkin
//! classification.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_lattices::Matrix;
use crate::scalar::Scalar;

fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Matrix<i64> {
    Matrix::from_fn(n, n, f)
}

/// `A_l` with nodes in a path.
pub fn cartan_a(l: usize) -> Matrix<i64> {
    from_fn(l, |i, j| if i == j { 2 } else if i.abs_diff(j) == 1 { -1 } else { 0 })
}

/// `B_m`; the last node is the short root.
pub fn cartan_b(m: usize) -> Matrix<i64> {
    let mut a = cartan_a(m);
    if m >= 2 {
        a.set(m - 1, m - 2, -2);
    }
    a
}

/// `C_m`; the last node is the long root.
pub fn cartan_c(m: usize) -> Matrix<i64> {
    cartan_b(m).transpose()
}

/// `D_m` for `m >= 2`: a path `0..m-2` with nodes `m-2` and `m-1` both
/// attached to `m-3`. `D_2 = A_1 × A_1` and `D_3 = A_3`.
pub fn cartan_d(m: usize) -> Matrix<i64> {
    assert!(m >= 2);
    let adjacent = |i: usize, j: usize| {
        let (a, b) = (i.min(j), i.max(j));
        if b < m - 1 {
            b == a + 1 && b <= m - 2
        } else {
            // b = m - 1 hangs off m - 3
            m >= 3 && a == m - 3
        }
    };
    from_fn(m, |i, j| if i == j { 2 } else if adjacent(i, j) { -1 } else { 0 })
}

/// Checks the generalized-Cartan conditions and finiteness (the symmetrized
/// matrix is positive definite). Errors name the offending indices.
pub fn validate_cartan<T: Scalar>(a: &Matrix<T>) -> Result<()> {
    let n = a.rows();
    let v = |i: usize, j: usize| a.get(i, j).to_big();
    for i in 0..n {
        if v(i, i) != BigInt::from(2) {
            return Err(Error::InvalidRootDatum(format!("<alpha_{i}, alpha_{i}^v> = {} instead of 2", v(i, i))));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if v(i, j).is_positive() {
                return Err(Error::InvalidRootDatum(format!("Cartan entry ({i},{j}) = {} is positive", v(i, j))));
            }
            if v(i, j).is_zero() != v(j, i).is_zero() {
                return Err(Error::InvalidRootDatum(format!("Cartan entries ({i},{j}) and ({j},{i}) are not both zero")));
            }
            let prod = v(i, j) * v(j, i);
            if prod > BigInt::from(3) {
                return Err(Error::InvalidRootDatum(format!("Cartan product at ({i},{j}) is {prod}, above 3")));
            }
        }
    }
    let d = symmetrizer(a)?;
    let b: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| d[i].clone() * BigRational::from_integer(v(i, j))).collect())
        .collect();
    if !is_positive_definite(b) {
        return Err(Error::InvalidRootDatum("Cartan matrix is not of finite type".into()));
    }
    Ok(())
}

/// Positive `d` with `d_i A_ij = d_j A_ji`, normalized to 1 on one node per component.
fn symmetrizer<T: Scalar>(a: &Matrix<T>) -> Result<Vec<BigRational>> {
    let n = a.rows();
    let v = |i: usize, j: usize| BigRational::from_integer(a.get(i, j).to_big());
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || v(i, j).is_zero() {
                    continue;
                }
                let want = d[i].clone().unwrap() * v(i, j) / v(j, i);
                match &d[j] {
                    None => {
                        d[j] = Some(want);
                        stack.push(j);
                    }
                    Some(x) if *x != want => {
                        return Err(Error::InvalidRootDatum(format!("Cartan matrix is not symmetrizable at ({i},{j})")));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}

/// Symmetric Gaussian elimination: positive definite iff every pivot is positive.
fn is_positive_definite(mut b: Vec<Vec<BigRational>>) -> bool {
    let n = b.len();
    for k in 0..n {
        if !b[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = b[i][k].clone() / b[k][k].clone();
            for j in k..n {
                let t = f.clone() * b[k][j].clone();
                b[i][j] -= t;
            }
        }
    }
    true
}

/// Connected components of the Dynkin diagram, each sorted.
pub fn components<T: Scalar>(a: &Matrix<T>) -> Vec<Vec<usize>> {
    let n = a.rows();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && !a.get(i, j).is_zero() {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Dynkin type of a validated finite-type Cartan matrix, e.g. `"A2"`,
/// `"B3"`, `"A1xA1"`; the empty string for rank 0.
pub fn classify<T: Scalar>(a: &Matrix<T>) -> String {
    let mut names: Vec<String> = components(a).iter().map(|c| classify_component(a, c)).collect();
    names.sort();
    names.join("x")
}

fn classify_component<T: Scalar>(a: &Matrix<T>, nodes: &[usize]) -> String {
    let n = nodes.len();
    let entry = |i: usize, j: usize| a.get(nodes[i], nodes[j]).to_i64().unwrap_or(0);
    let neighbours = |i: usize| (0..n).filter(|&j| j != i && entry(i, j) != 0).collect::<Vec<_>>();
    let mut multiple = None;
    for i in 0..n {
        for j in i + 1..n {
            let p = entry(i, j) * entry(j, i);
            if p > 1 {
                multiple = Some((i, j, p));
            }
        }
    }
    if let Some((i, j, p)) = multiple {
        if p == 3 {
            return "G2".into();
        }
        if n == 2 {
            return "B2".into();
        }
        let (end, other) = if neighbours(i).len() == 1 { (i, j) } else if neighbours(j).len() == 1 { (j, i) } else {
            return format!("F{n}");
        };
        // The end node is short exactly when <alpha_other, alpha_end^v> = -2.
        return if entry(end, other) == -2 { format!("B{n}") } else { format!("C{n}") };
    }
    let Some(branch) = (0..n).find(|&i| neighbours(i).len() == 3) else {
        return format!("A{n}");
    };
    let mut arms: Vec<usize> = neighbours(branch)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [x] => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => return len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => format!("D{n}"),
        _ => format!("E{n}"),
    }
}

/// Permutations of the nodes preserving the Cartan matrix.
pub fn is_diagram_automorphism<T: Scalar>(a: &Matrix<T>, sigma: &[usize]) -> bool {
    let n = a.rows();
    let mut seen = vec![false; n];
    if sigma.len() != n || sigma.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
        return false;
    }
    (0..n).all(|i| (0..n).all(|j| a.get(sigma[i], sigma[j]) == a.get(i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families_are_finite_type() {
        for l in 1..6 {
            validate_cartan(&cartan_a(l)).unwrap();
            assert_eq!(classify(&cartan_a(l)), format!("A{l}"));
        }
        for m in 2..5 {
            validate_cartan(&cartan_b(m)).unwrap();
            validate_cartan(&cartan_c(m)).unwrap();
        }
        assert_eq!(classify(&cartan_b(3)), "B3");
        assert_eq!(classify(&cartan_c(3)), "C3");
        assert_eq!(classify(&cartan_b(2)), "B2");
        assert_eq!(classify(&cartan_d(2)), "A1xA1");
        assert_eq!(classify(&cartan_d(3)), "A3");
        assert_eq!(classify(&cartan_d(4)), "D4");
        assert_eq!(classify(&cartan_d(5)), "D5");
        let g2 = Matrix::<i64>::from_i64(&[&[2, -1], &[-3, 2]]);
        validate_cartan(&g2).unwrap();
        assert_eq!(classify(&g2), "G2");
    }

    #[test]
    fn rejections() {
        let bad_diag = Matrix::<i64>::from_i64(&[&[3]]);
        assert!(validate_cartan(&bad_diag).is_err());
        let affine = Matrix::<i64>::from_i64(&[&[2, -2], &[-2, 2]]);
        assert!(validate_cartan(&affine).is_err());
        let cycle = Matrix::<i64>::from_i64(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert!(validate_cartan(&cycle).is_err());
        let asym = Matrix::<i64>::from_i64(&[&[2, -1], &[0, 2]]);
        assert!(validate_cartan(&asym).is_err());
    }

    #[test]
    fn automorphisms() {
        assert!(is_diagram_automorphism(&cartan_a(3), &[2, 1, 0]));
        assert!(!is_diagram_automorphism(&cartan_a(3), &[1, 0, 2]));
        assert!(is_diagram_automorphism(&cartan_d(4), &[2, 1, 3, 0]));
        assert!(!is_diagram_automorphism(&cartan_b(3), &[2, 1, 0]));
    }
}
