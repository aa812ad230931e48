use std::fmt;
use std::sync::Arc;

use super::{gcd_univariate, Polynomial, Scalar, VarArena};
use crate::error::{Error, Result};

/// Quotient of two polynomials. Numerator and denominator need not be
/// coprime; equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFunction<C> {
    num: Polynomial<C>,
    den: Polynomial<C>,
}

impl<C: Scalar> RationalFunction<C> {
    pub fn new(num: Polynomial<C>, den: Polynomial<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !VarArena::same(num.arena(), den.arena()) {
            return Err(Error::ArenaMismatch);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial<C>) -> Self {
        let den = Polynomial::one(p.arena());
        RationalFunction { num: p, den }
    }

    pub fn zero(arena: &Arc<VarArena>) -> Self {
        Self::from_poly(Polynomial::zero(arena))
    }

    pub fn one(arena: &Arc<VarArena>) -> Self {
        Self::from_poly(Polynomial::one(arena))
    }

    pub fn num(&self) -> &Polynomial<C> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<C> {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial<C>, Polynomial<C>) {
        (self.num, self.den)
    }

    pub fn arena(&self) -> &Arc<VarArena> {
        self.num.arena()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Semantic equality by cross-multiplication.
    pub fn cross_eq(&self, other: &Self) -> bool {
        VarArena::same(self.arena(), other.arena())
            && &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFunction {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        if let Some(q) = cofactor(&self.den, &other.den) {
            return RationalFunction {
                num: &(&self.num * &q) + &other.num,
                den: other.den.clone(),
            };
        }
        if let Some(q) = cofactor(&other.den, &self.den) {
            return RationalFunction {
                num: &self.num + &(&other.num * &q),
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den == other.num {
            return RationalFunction {
                num: self.num.clone(),
                den: other.den.clone(),
            };
        }
        if self.num == other.den {
            return RationalFunction {
                num: other.num.clone(),
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn mul_poly(&self, p: &Polynomial<C>) -> Self {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inverse = RationalFunction {
            num: other.den.clone(),
            den: other.num.clone(),
        };
        Ok(self.mul(&inverse))
    }

    /// Exact value at a point in arena order.
    pub fn eval(&self, point: &[C]) -> Result<C> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::EvalPole);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Cheap normalisation: strip the common monomial factor and the
    /// coefficient content, cancel the full gcd when everything is
    /// univariate, and make the denominator's leading coefficient positive.
    /// Multivariate gcds are never attempted.
    pub fn simplify(&self) -> Self {
        let arena = self.arena().clone();
        if self.num.is_zero() {
            return Self::zero(&arena);
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();

        let common = num.monomial_content().gcd(&den.monomial_content());
        if !common.is_one() {
            num = num.div_monomial(&common);
            den = den.div_monomial(&common);
        }

        if let Ok(Some(_)) = super::gcd::common_univariate_var(&num, &den) {
            if let Ok(g) = gcd_univariate(&num, &den) {
                if g.degree() > 0 {
                    num = num.div_exact(&g).expect("gcd divides numerator");
                    den = den.div_exact(&g).expect("gcd divides denominator");
                }
            }
        }

        let (cn, cd) = (num.content(), den.content());
        let (rn, rd) = (cn.clone() / cd.clone()).split_ratio();
        num = num.scale(&(rn / cn));
        den = den.scale(&(rd / cd));

        if den.leading_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        if let Some(c) = den.constant_value() {
            if !c.is_one() {
                num = num.scale(&(C::one() / c));
                den = Polynomial::one(&arena);
            }
        }
        RationalFunction { num, den }
    }

    /// Divides numerator and denominator by every candidate factor that
    /// divides both, as often as it does.
    pub fn cancel_factors(&self, factors: &[Polynomial<C>]) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for f in factors {
            if f.is_constant() {
                continue;
            }
            loop {
                let fits = |p: &Polynomial<C>| {
                    f.degree() <= p.degree() && (0..f.arena().len()).all(|v| f.degree_in(v) <= p.degree_in(v))
                };
                if num.is_zero() || !fits(&num) || !fits(&den) {
                    break;
                }
                match (den.div_exact(f), num.div_exact(f)) {
                    (Ok(d), Ok(n)) => {
                        num = n;
                        den = d;
                    }
                    _ => break,
                }
            }
        }
        RationalFunction { num, den }
    }

    /// Re-express over a larger arena.
    pub fn embed(&self, target: &Arc<VarArena>) -> Result<Self> {
        Ok(RationalFunction {
            num: self.num.embed(target)?,
            den: self.den.embed(target)?,
        })
    }
}

/// `q` with `big = q·small`, when `small` visibly divides `big`.
fn cofactor<C: Scalar>(small: &Polynomial<C>, big: &Polynomial<C>) -> Option<Polynomial<C>> {
    if small.is_constant() || small.degree() >= big.degree() {
        return None;
    }
    big.div_exact(small).ok()
}

impl<C: Scalar> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.cross_eq(other)
    }
}

impl<C: Scalar> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<C: Scalar> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, RatFun, Rational};

    fn setup(vars: &[&str]) -> impl Fn(&str) -> Poly {
        let a = VarArena::new(vars.iter().copied()).unwrap();
        move |s| Poly::parse(&a, s).unwrap()
    }

    fn rf(n: Poly, d: Poly) -> RatFun {
        RatFun::new(n, d).unwrap()
    }

    #[test]
    fn simplify_content_and_monomial() {
        let p = setup(&["x"]);
        let s = rf(p("2*x"), p("4*x^2")).simplify();
        assert_eq!(s.num(), &p("1"));
        assert_eq!(s.den(), &p("2*x"));
    }

    #[test]
    fn simplify_univariate_gcd() {
        let p = setup(&["x"]);
        let s = rf(p("x^2 - 1"), p("x - 1")).simplify();
        assert_eq!(s.num(), &p("x + 1"));
        assert!(s.den().is_one());
    }

    #[test]
    fn simplify_leaves_multivariate_alone() {
        let p = setup(&["x1", "x2"]);
        let r = rf(p("x1*x2 + x1"), p("x2 + 1"));
        let s = r.simplify();
        assert_eq!(s.num(), r.num());
        assert_eq!(s.den(), r.den());
    }

    #[test]
    fn simplify_normalises_sign() {
        let p = setup(&["x"]);
        let s = rf(p("-x"), p("-x - 1")).simplify();
        assert_eq!(s.num(), &p("x"));
        assert_eq!(s.den(), &p("x + 1"));
    }

    #[test]
    fn evaluation() {
        let p = setup(&["x"]);
        let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(rf(p("x"), p("2 - x")).eval(&[q(1, 1)]).unwrap(), q(1, 1));
        assert_eq!(rf(p("3/4"), p("1")).eval(&[q(7, 3)]).unwrap(), q(3, 4));
        assert_eq!(rf(p("1"), p("2 - x")).eval(&[q(1, 2)]).unwrap(), q(2, 3));
        assert_eq!(rf(p("1"), p("2 - x")).eval(&[q(2, 1)]), Err(Error::EvalPole));
    }

    #[test]
    fn zero_denominator_rejected() {
        let p = setup(&["x"]);
        assert_eq!(RatFun::new(p("x"), p("0")).unwrap_err(), Error::DivisionByZero);
    }
}
