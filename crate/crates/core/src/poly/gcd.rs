use super::{Monomial, Polynomial, Scalar};
use crate::error::{Error, Result};

/// The single variable shared by `a` and `b`, `Ok(None)` if both are constant.
pub fn common_univariate_var<C: Scalar>(
    a: &Polynomial<C>,
    b: &Polynomial<C>,
) -> Result<Option<usize>> {
    let mut vars = a.vars_used();
    for v in b.vars_used() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    match vars.as_slice() {
        [] => Ok(None),
        [v] => Ok(Some(*v)),
        _ => Err(Error::Unsupported(
            "gcd of multivariate polynomials".to_string(),
        )),
    }
}

/// Remainder of univariate division, both operands over variable `var`.
fn rem_univariate<C: Scalar>(a: &Polynomial<C>, b: &Polynomial<C>, var: usize) -> Polynomial<C> {
    let db = b.degree_in(var);
    let lc = b.leading_coeff();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let q = r.leading_coeff() / lc.clone();
        let shift = Monomial::var(a.arena().len(), var, dr - db);
        let sub = b.mul_monomial(&shift).scale(&q);
        r = &r - &sub;
    }
    r
}

fn monic<C: Scalar>(p: &Polynomial<C>) -> Polynomial<C> {
    if p.is_zero() {
        return p.clone();
    }
    p.scale(&(C::one() / p.leading_coeff()))
}

/// Monic gcd of two univariate polynomials (Euclid over the coefficient field).
/// `gcd(a, 0) = monic(a)`, `gcd(0, 0) = 0`.
pub fn gcd_univariate<C: Scalar>(a: &Polynomial<C>, b: &Polynomial<C>) -> Result<Polynomial<C>> {
    if !super::VarArena::same(a.arena(), b.arena()) {
        return Err(Error::ArenaMismatch);
    }
    let Some(var) = common_univariate_var(a, b)? else {
        // Both constant: gcd is 1 unless both vanish.
        if a.is_zero() && b.is_zero() {
            return Ok(Polynomial::zero(a.arena()));
        }
        return Ok(Polynomial::one(a.arena()));
    };
    let (mut x, mut y) = (monic(a), monic(b));
    while !y.is_zero() {
        let r = monic(&rem_univariate(&x, &y, var));
        x = y;
        y = r;
    }
    if x.is_zero() {
        return Ok(x);
    }
    let lc = x.leading_coeff();
    if !lc.is_one() && !lc.is_zero() {
        x = monic(&x);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarArena;
    use crate::Poly;

    #[test]
    fn gcd_examples() {
        let a = VarArena::new(["x"]).unwrap();
        let p = |s: &str| Poly::parse(&a, s).unwrap();
        assert_eq!(gcd_univariate(&p("x^2 - 1"), &p("x^2 - 2*x + 1")).unwrap(), p("x - 1"));
        assert_eq!(gcd_univariate(&p("3*x + 3"), &p("0")).unwrap(), p("x + 1"));
        assert_eq!(gcd_univariate(&p("x"), &p("x + 1")).unwrap(), p("1"));
    }

    #[test]
    fn multivariate_refused() {
        let a = VarArena::new(["x", "y"]).unwrap();
        let p = |s: &str| Poly::parse(&a, s).unwrap();
        assert!(matches!(
            gcd_univariate(&p("x"), &p("y")),
            Err(Error::Unsupported(_))
        ));
        // Same single variable in a bigger arena is fine.
        assert_eq!(gcd_univariate(&p("y^2"), &p("y")).unwrap(), p("y"));
    }
}
