use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sturm::{count_with, simplest_between, sturm_count, sturm_sequence, Endpoint};
use super::unipoly::sign;
use super::UniPoly;
use crate::Rational;

/// Real algebraic number: either an exact rational or the unique root of a
/// square-free polynomial inside an open rational interval whose endpoints
/// are not roots.
#[derive(Clone)]
pub struct AlgebraicNumber(Repr);

#[derive(Clone)]
enum Repr {
    Rational(Rational),
    Root {
        poly: UniPoly,
        lo: Rational,
        hi: Rational,
    },
}

impl AlgebraicNumber {
    pub fn rational(q: Rational) -> Self {
        AlgebraicNumber(Repr::Rational(q))
    }

    /// Root of square-free `poly` isolated by `(lo, hi]`. Rational roots are
    /// always recognised and stored exactly: a root `n/d` in lowest terms
    /// has `d` dividing the leading coefficient `c` of the integer multiple
    /// of `poly`, and once the interval is shorter than `1/c²` the simplest
    /// rational inside is the only candidate.
    pub fn from_isolating(poly: UniPoly, mut lo: Rational, mut hi: Rational) -> Self {
        debug_assert_eq!(
            sturm_count(&poly, &Endpoint::At(lo.clone()), &Endpoint::At(hi.clone())),
            1
        );
        if poly.degree() == 1 {
            let c = poly.coeffs();
            return Self::rational(-&c[0] / &c[1]);
        }
        if poly.eval(&hi).is_zero() {
            return Self::rational(hi);
        }
        let lead = integer_leading_coeff(&poly);
        let width = Rational::new(1.into(), &lead * &lead);
        let slo = poly.sign_at(&lo);
        while &hi - &lo >= width {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            match poly.sign_at(&mid) {
                0 => return Self::rational(mid),
                sm if sm == slo => lo = mid,
                _ => hi = mid,
            }
        }
        let s = simplest_between(&lo, &hi);
        if s.denom() <= &lead && poly.eval(&s).is_zero() {
            return Self::rational(s);
        }
        AlgebraicNumber(Repr::Root { poly, lo, hi })
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Root { .. } => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Square-free defining polynomial; `x - q` for a rational `q`.
    pub fn defining(&self) -> UniPoly {
        match &self.0 {
            Repr::Rational(q) => UniPoly::linear_root(q),
            Repr::Root { poly, .. } => poly.clone(),
        }
    }

    /// Isolating interval; degenerate `(q, q)` for rationals.
    pub fn interval(&self) -> (Rational, Rational) {
        (self.lower(), self.upper())
    }

    pub fn lower(&self) -> Rational {
        match &self.0 {
            Repr::Rational(q) => q.clone(),
            Repr::Root { lo, .. } => lo.clone(),
        }
    }

    pub fn upper(&self) -> Rational {
        match &self.0 {
            Repr::Rational(q) => q.clone(),
            Repr::Root { hi, .. } => hi.clone(),
        }
    }

    /// Halves the isolating interval (no-op on rationals).
    pub fn refine(&self) -> Self {
        match &self.0 {
            Repr::Rational(_) => self.clone(),
            Repr::Root { poly, lo, hi } => {
                let mid = (lo + hi) / Rational::from_integer(2.into());
                match poly.sign_at(&mid) {
                    0 => Self::rational(mid),
                    s if s == poly.sign_at(lo) => AlgebraicNumber(Repr::Root {
                        poly: poly.clone(),
                        lo: mid,
                        hi: hi.clone(),
                    }),
                    _ => AlgebraicNumber(Repr::Root {
                        poly: poly.clone(),
                        lo: lo.clone(),
                        hi: mid,
                    }),
                }
            }
        }
    }

    /// Compares against a rational without refinement.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        match &self.0 {
            Repr::Rational(r) => r.cmp(q),
            Repr::Root { poly, lo, hi } => {
                if q <= lo {
                    Ordering::Greater
                } else if q >= hi {
                    Ordering::Less
                } else {
                    match poly.sign_at(q) {
                        0 => Ordering::Equal,
                        s if s == poly.sign_at(lo) => Ordering::Greater,
                        _ => Ordering::Less,
                    }
                }
            }
        }
    }

    /// Exact sign of `f` at this number.
    pub fn sign_of(&self, f: &UniPoly) -> i32 {
        if f.degree() == 0 {
            return sign(&f.leading_coeff());
        }
        let (poly, lo, hi) = match &self.0 {
            Repr::Rational(q) => return f.sign_at(q),
            Repr::Root { poly, lo, hi } => (poly, lo, hi),
        };
        let g = f.gcd(poly);
        if g.degree() > 0
            && sturm_count(&g, &Endpoint::At(lo.clone()), &Endpoint::At(hi.clone())) > 0
        {
            return 0;
        }
        let seq = sturm_sequence(&f.square_free());
        let mut cur = self.clone();
        loop {
            match &cur.0 {
                Repr::Rational(q) => return f.sign_at(q),
                Repr::Root { lo, hi, .. } => {
                    let n = count_with(&seq, &Endpoint::At(lo.clone()), &Endpoint::At(hi.clone()));
                    if n == 0 {
                        return f.sign_at(hi);
                    }
                }
            }
            cur = cur.refine();
        }
    }

    /// A rational strictly between `self` and a larger `other`.
    pub fn rational_between(&self, other: &Self) -> Rational {
        debug_assert!(self < other);
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            let (ua, lb) = (a.upper(), b.lower());
            if ua < lb {
                return (ua + lb) / Rational::from_integer(2.into());
            }
            a = a.refine();
            b = b.refine();
        }
    }

    fn cmp_alg(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (_, Repr::Rational(b)) => self.cmp_rational(b),
            (Repr::Rational(a), _) => other.cmp_rational(a).reverse(),
            (Repr::Root { poly: pa, .. }, Repr::Root { poly: pb, .. }) => {
                let g = pa.gcd(pb);
                let (mut a, mut b) = (self.clone(), other.clone());
                loop {
                    if a.is_rational() || b.is_rational() {
                        return a.cmp_alg(&b);
                    }
                    let (la, ha, lb, hb) = (a.lower(), a.upper(), b.lower(), b.upper());
                    if ha <= lb {
                        return Ordering::Less;
                    }
                    if hb <= la {
                        return Ordering::Greater;
                    }
                    if g.degree() > 0 {
                        let lo = la.max(lb);
                        let hi = ha.min(hb);
                        if sturm_count(&g, &Endpoint::At(lo), &Endpoint::At(hi)) > 0 {
                            return Ordering::Equal;
                        }
                    }
                    a = a.refine();
                    b = b.refine();
                }
            }
        }
    }
}

/// `|c|` for the primitive integer multiple of `poly` with leading coefficient `c`.
fn integer_leading_coeff(poly: &UniPoly) -> BigInt {
    let l = poly.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let g = poly
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    (poly.leading_coeff().numer() * (&l / poly.leading_coeff().denom()) / g).abs()
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_alg(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_alg(other)
    }
}

impl From<Rational> for AlgebraicNumber {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => write!(f, "{q}"),
            Repr::Root { poly, lo, hi } => write!(f, "root({poly}, {lo}, {hi})"),
        }
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::realdec::isolate_roots;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&v| rat(v, 1)).collect())
    }

    fn sqrt2() -> AlgebraicNumber {
        isolate_roots(&u(&[-2, 0, 1])).pop().unwrap()
    }

    #[test]
    fn signs() {
        let a = sqrt2();
        assert!(!a.is_rational());
        assert_eq!(a.sign_of(&u(&[-1, 1])), 1);
        assert_eq!(a.sign_of(&u(&[-2, 0, 1])), 0);
        assert_eq!(a.sign_of(&u(&[7])), 1);
        // x^4 - 4 vanishes at sqrt 2 though it is not the defining polynomial.
        assert_eq!(a.sign_of(&u(&[-4, 0, 0, 0, 1])), 0);
        assert_eq!(a.sign_of(&u(&[-3, 0, 0, 0, 1])), 1);
    }

    #[test]
    fn ordering() {
        let a = sqrt2();
        let twice = isolate_roots(&u(&[-8, 0, 0, 0, 0, 0, 1])).pop().unwrap(); // 8^(1/6) = sqrt 2
        assert_eq!(a, twice);
        assert!(a > AlgebraicNumber::rational(rat(7, 5)));
        assert!(a < AlgebraicNumber::rational(rat(3, 2)));
        let cbrt3 = isolate_roots(&u(&[-3, 0, 0, 1])).pop().unwrap();
        assert!(a < cbrt3);
        let q = a.rational_between(&cbrt3);
        assert!(a.cmp_rational(&q).is_lt() && cbrt3.cmp_rational(&q).is_gt());
    }

    #[test]
    fn display() {
        assert_eq!(AlgebraicNumber::rational(rat(1, 2)).to_string(), "1/2");
        assert!(sqrt2().to_string().starts_with("root(x^2 - 2, "));
    }
}
