use crate::error::{Error, Result};
use crate::poly::{Polynomial, Scalar};

/// Gauss-Jordan on a constant matrix, replaying every row operation on the
/// polynomial right-hand side. With `A` parameter-free each solution entry is
/// a constant-coefficient combination of the `b_j`, so no denominators appear.
pub fn solve_param_rhs<C: Scalar>(a: &[Vec<C>], b: &[Polynomial<C>]) -> Result<Vec<Polynomial<C>>> {
    let n = b.len();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Usage(format!("matrix must be {n}x{n}")));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    for m in 0..n {
        let r = (m..n).find(|&r| !a[r][m].is_zero()).ok_or(Error::Singular)?;
        a.swap(m, r);
        b.swap(m, r);
        let inv = C::one() / a[m][m].clone();
        for j in m..n {
            a[m][j] = a[m][j].clone() * inv.clone();
        }
        b[m] = b[m].scale(&inv);
        for i in 0..n {
            if i == m || a[i][m].is_zero() {
                continue;
            }
            let f = a[i][m].clone();
            for j in m..n {
                let v = a[i][j].clone() - f.clone() * a[m][j].clone();
                a[i][j] = v;
            }
            b[i] = &b[i] - &b[m].scale(&f);
        }
    }
    Ok(b)
}

/// Plain Gaussian elimination over a field. Used for instantiated
/// (parameter-free) chains and as an independent numeric reference.
pub fn solve_dense<C: Scalar>(a: &[Vec<C>], b: &[C]) -> Result<Vec<C>> {
    let n = b.len();
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    for m in 0..n {
        let r = (m..n).find(|&r| !a[r][m].is_zero()).ok_or(Error::Singular)?;
        a.swap(m, r);
        b.swap(m, r);
        for i in m + 1..n {
            if a[i][m].is_zero() {
                continue;
            }
            let f = a[i][m].clone() / a[m][m].clone();
            for j in m..n {
                let v = a[i][j].clone() - f.clone() * a[m][j].clone();
                a[i][j] = v;
            }
            let v = b[i].clone() - f * b[m].clone();
            b[i] = v;
        }
    }
    let mut x = vec![C::zero(); n];
    for m in (0..n).rev() {
        let mut acc = b[m].clone();
        for i in m + 1..n {
            acc = acc - a[m][i].clone() * x[i].clone();
        }
        x[m] = acc / a[m][m].clone();
    }
    Ok(x)
}
