use num_traits::{One, Signed, Zero};

use super::{AlgebraicNumber, UniPoly};
use crate::Rational;

/// Point at which a Sturm sequence is evaluated.
#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint {
    NegInf,
    At(Rational),
    PosInf,
}

/// Sturm sequence of `f`: `f, f', -rem(f, f'), ...`. Each member is
/// scaled by a positive constant, which leaves sign variations unchanged.
pub fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![f.clone()];
    if f.degree() == 0 {
        return seq;
    }
    let mut next = f.derivative();
    while !next.is_zero() {
        let lc = next.leading_coeff().abs();
        next = next.scale(&(Rational::one() / lc));
        let r = seq.last().expect("non-empty").rem(&next).neg();
        seq.push(next);
        next = r;
    }
    seq
}

fn variations(seq: &[UniPoly], at: &Endpoint) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in seq {
        let s = match at {
            Endpoint::NegInf => p.sign_at_infinity(false),
            Endpoint::PosInf => p.sign_at_infinity(true),
            Endpoint::At(x) => p.sign_at(x),
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Distinct real roots of `f` in `(lo, hi]`. `f` must be nonzero.
pub fn sturm_count(f: &UniPoly, lo: &Endpoint, hi: &Endpoint) -> usize {
    assert!(!f.is_zero(), "root count of the zero polynomial");
    let seq = sturm_sequence(&f.square_free());
    count_with(&seq, lo, hi)
}

pub(crate) fn count_with(seq: &[UniPoly], lo: &Endpoint, hi: &Endpoint) -> usize {
    variations(seq, lo).saturating_sub(variations(seq, hi))
}

/// Bound `B` with every real root strictly inside `(-B, B)`.
pub fn cauchy_bound(f: &UniPoly) -> Rational {
    let lc = f.leading_coeff();
    let m = f.coeffs()[..f.degree()]
        .iter()
        .map(|c| (c / &lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// All distinct real roots of `f`, ascending. The square-free part of `f`
/// serves as defining polynomial.
pub fn isolate_roots(f: &UniPoly) -> Vec<AlgebraicNumber> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let sf = f.square_free();
    if sf.degree() == 0 {
        return Vec::new();
    }
    if sf.degree() == 1 {
        let c = sf.coeffs();
        return vec![AlgebraicNumber::rational(-&c[0] / &c[1])];
    }
    let seq = sturm_sequence(&sf);
    let b = cauchy_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    // Invariant: endpoints of stacked intervals are never roots.
    while let Some((lo, hi)) = stack.pop() {
        let n = count_with(&seq, &Endpoint::At(lo.clone()), &Endpoint::At(hi.clone()));
        match n {
            0 => {}
            1 => out.push(AlgebraicNumber::from_isolating(sf.clone(), lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if sf.eval(&mid).is_zero() {
                    out.push(AlgebraicNumber::rational(mid.clone()));
                    // Shift the split point off the root for both halves.
                    let (l, h) = separate(&seq, &sf, &lo, &mid, &hi);
                    stack.push((lo, l));
                    stack.push((h, hi));
                } else {
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    out.sort();
    out
}

/// Given a rational root `r` in `(lo, hi)`, returns `l < r < h`, both
/// non-roots, with no other root in `[l, h]`.
fn separate(seq: &[UniPoly], sf: &UniPoly, lo: &Rational, r: &Rational, hi: &Rational) -> (Rational, Rational) {
    let two = Rational::from_integer(2.into());
    let mut l = (lo + r) / &two;
    let mut h = (r + hi) / &two;
    loop {
        let lz = sf.eval(&l).is_zero();
        let hz = sf.eval(&h).is_zero();
        if !lz && !hz && count_with(seq, &Endpoint::At(l.clone()), &Endpoint::At(h.clone())) == 1 {
            return (l, h);
        }
        l = (&l + r) / &two;
        h = (r + &h) / &two;
    }
}

/// Simplest rational (smallest denominator, then smallest magnitude)
/// strictly between `lo` and `hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !hi.is_positive() {
        return -simplest_above(&-hi, Some(&-lo));
    }
    simplest_above(lo, Some(hi))
}

/// Simplest rational in `(lo, hi)` for `lo >= 0`; `hi = None` is `+∞`.
fn simplest_above(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let k = lo.floor();
    let next = &k + Rational::one();
    if hi.is_none_or(|h| &next < h) {
        return next;
    }
    let hi = hi.expect("bounded");
    // Both ends within [k, k + 1]: recurse on reciprocals of the fractional parts.
    let inv_hi = Rational::one() / (hi - &k);
    let inv_lo = if *lo == k {
        None
    } else {
        Some(Rational::one() / (lo - &k))
    };
    k + Rational::one() / simplest_above(&inv_hi, inv_lo.as_ref())
}
