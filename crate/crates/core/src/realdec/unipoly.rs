use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarArena};
use crate::{Poly, Rational};

/// Dense univariate polynomial, coefficients from the constant term upwards,
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - q`.
    pub fn linear_root(q: &Rational) -> Self {
        UniPoly(vec![-q.clone(), Rational::one()])
    }

    /// Reads a polynomial with at most one variable in use. Returns the
    /// variable index alongside (None for constants).
    pub fn from_poly(p: &Poly) -> Result<(Self, Option<usize>)> {
        let vars = p.vars_used();
        let var = match vars.as_slice() {
            [] => None,
            [v] => Some(*v),
            _ => return Err(Error::NotUnivariate(p.to_string())),
        };
        let deg = var.map_or(0, |v| p.degree_in(v)) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in p.terms() {
            let e = var.map_or(0, |v| m.exponents()[v]) as usize;
            coeffs[e] = c.clone();
        }
        Ok((Self::new(coeffs), var))
    }

    /// Like [`from_poly`](Self::from_poly) but the variable (if any) must be `var`.
    pub fn from_poly_in(p: &Poly, var: usize) -> Result<Self> {
        let (u, v) = Self::from_poly(p)?;
        match v {
            Some(v) if v != var => Err(Error::NotUnivariate(p.to_string())),
            _ => Ok(u),
        }
    }

    pub fn to_poly(&self, arena: &Arc<VarArena>, var: usize) -> Poly {
        Polynomial::from_terms(
            arena,
            self.0
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(arena.len(), var, e as u32), c.clone())),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at `x` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign(&self.eval(x))
    }

    /// Sign as `x → +∞` (`positive == true`) or `x → -∞`.
    pub fn sign_at_infinity(&self, positive: bool) -> i32 {
        let s = sign(&self.leading_coeff());
        if !positive && self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(e, c)| c * Rational::from_integer(e.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.leading_coeff()))
    }

    pub fn neg(&self) -> Self {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder; `other` must be nonzero.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by the zero polynomial");
        let mut r = self.0.clone();
        let db = other.degree();
        let lc = other.leading_coeff();
        if r.len() <= db {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db] / &lc;
            if !c.is_zero() {
                for (j, b) in other.0.iter().enumerate() {
                    r[k + j] -= &c * b;
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, other: &Self) -> Self {
        self.div_rem(other).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn square_free(&self) -> Self {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

pub(crate) fn sign(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arena = VarArena::new(["x"]).expect("single name");
        write!(f, "{}", self.to_poly(&arena, 0))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
