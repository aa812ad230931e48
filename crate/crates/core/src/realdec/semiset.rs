use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use rand::Rng;

use super::{isolate_roots, AlgebraicNumber, Rel, UniPoly};
use crate::error::Result;
use crate::{Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bound {
    NegInf,
    Fin(AlgebraicNumber),
    PosInf,
}

impl Bound {
    pub fn rational(q: Rational) -> Self {
        Bound::Fin(AlgebraicNumber::rational(q))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-∞"),
            Bound::Fin(a) => write!(f, "{a}"),
            Bound::PosInf => f.write_str("+∞"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Point(AlgebraicNumber),
    /// Open interval with `lo < hi`.
    Open(Bound, Bound),
}

/// Finite union of points and open intervals on the real line, kept sorted,
/// disjoint and maximal (no `(a, b) ∪ {b} ∪ (b, c)` pieces).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SemiSet1D {
    comps: Vec<Component>,
}

/// A rational strictly inside the open interval `(lo, hi)`, `lo < hi`.
/// Midpoints for rational ends, one unit away from a single finite end.
pub fn rational_inside(lo: &Bound, hi: &Bound) -> Rational {
    match (lo, hi) {
        (Bound::Fin(l), Bound::Fin(h)) => l.rational_between(h),
        (Bound::NegInf, Bound::Fin(h)) => h.lower() - Rational::one(),
        (Bound::Fin(l), Bound::PosInf) => l.upper() + Rational::one(),
        _ => Rational::from_integer(0.into()),
    }
}

impl SemiSet1D {
    pub fn empty() -> Self {
        SemiSet1D { comps: Vec::new() }
    }

    pub fn full() -> Self {
        SemiSet1D {
            comps: vec![Component::Open(Bound::NegInf, Bound::PosInf)],
        }
    }

    pub fn point(a: AlgebraicNumber) -> Self {
        SemiSet1D {
            comps: vec![Component::Point(a)],
        }
    }

    pub fn open(lo: Bound, hi: Bound) -> Self {
        if lo < hi {
            SemiSet1D {
                comps: vec![Component::Open(lo, hi)],
            }
        } else {
            Self::empty()
        }
    }

    /// Interval with chosen closedness; closed flags are ignored at infinite ends.
    pub fn interval(lo: Bound, lo_closed: bool, hi: Bound, hi_closed: bool) -> Self {
        let mut out = Self::open(lo.clone(), hi.clone());
        if lo_closed && lo <= hi {
            if let Bound::Fin(a) = &lo {
                out = out.union(&Self::point(a.clone()));
            }
        }
        if hi_closed && lo <= hi {
            if let Bound::Fin(b) = &hi {
                out = out.union(&Self::point(b.clone()));
            }
        }
        out
    }

    /// `(lo, hi)` with rational ends.
    pub fn open_rat(lo: Rational, hi: Rational) -> Self {
        Self::open(Bound::rational(lo), Bound::rational(hi))
    }

    pub fn components(&self) -> &[Component] {
        &self.comps
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full()
    }

    pub fn contains(&self, x: &AlgebraicNumber) -> bool {
        self.comps.iter().any(|c| match c {
            Component::Point(p) => p == x,
            Component::Open(lo, hi) => {
                let b = Bound::Fin(x.clone());
                lo < &b && &b < hi
            }
        })
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.comps.iter().any(|c| match c {
            Component::Point(p) => p.cmp_rational(q).is_eq(),
            Component::Open(lo, hi) => {
                let above_lo = match lo {
                    Bound::NegInf => true,
                    Bound::Fin(a) => a.cmp_rational(q) == Ordering::Less,
                    Bound::PosInf => false,
                };
                let below_hi = match hi {
                    Bound::PosInf => true,
                    Bound::Fin(b) => b.cmp_rational(q) == Ordering::Greater,
                    Bound::NegInf => false,
                };
                above_lo && below_hi
            }
        })
    }

    /// All finite endpoints, ascending.
    pub fn endpoints(&self) -> Vec<AlgebraicNumber> {
        let mut out = Vec::new();
        for c in &self.comps {
            match c {
                Component::Point(p) => out.push(p.clone()),
                Component::Open(lo, hi) => {
                    for b in [lo, hi] {
                        if let Bound::Fin(a) = b {
                            out.push(a.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// Membership of the elementary cells cut out by the sorted, distinct
    /// breakpoints `bps` (which must include this set's endpoints). Cell
    /// `2i` is the open gap before `bps[i]`, cell `2i + 1` is `bps[i]`
    /// itself, and cell `2m` is the gap after the last breakpoint.
    pub fn cell_mask(&self, bps: &[AlgebraicNumber]) -> Vec<bool> {
        let m = bps.len();
        let mut mask = vec![false; 2 * m + 1];
        let find = |a: &AlgebraicNumber| {
            bps.binary_search(a)
                .expect("breakpoints must include every endpoint")
        };
        for c in &self.comps {
            match c {
                Component::Point(p) => mask[2 * find(p) + 1] = true,
                Component::Open(lo, hi) => {
                    let first = match lo {
                        Bound::Fin(a) => 2 * find(a) + 2,
                        _ => 0,
                    };
                    let last = match hi {
                        Bound::Fin(b) => 2 * find(b),
                        _ => 2 * m,
                    };
                    for cell in &mut mask[first..=last] {
                        *cell = true;
                    }
                }
            }
        }
        mask
    }

    /// Inverse of [`cell_mask`](Self::cell_mask): canonical set from cell membership.
    pub fn from_cells(bps: &[AlgebraicNumber], mask: &[bool]) -> Self {
        let m = bps.len();
        assert_eq!(mask.len(), 2 * m + 1, "one flag per elementary cell");
        let mut comps = Vec::new();
        let mut k = 0;
        while k < mask.len() {
            if !mask[k] {
                k += 1;
                continue;
            }
            let mut s = k;
            let mut e = k;
            while e + 1 < mask.len() && mask[e + 1] {
                e += 1;
            }
            k = e + 1;
            if s == e && s % 2 == 1 {
                comps.push(Component::Point(bps[s / 2].clone()));
                continue;
            }
            let mut trailing = None;
            if s % 2 == 1 {
                comps.push(Component::Point(bps[s / 2].clone()));
                s += 1;
            }
            if e % 2 == 1 {
                trailing = Some(Component::Point(bps[e / 2].clone()));
                e -= 1;
            }
            let lo = if s == 0 {
                Bound::NegInf
            } else {
                Bound::Fin(bps[s / 2 - 1].clone())
            };
            let hi = if e == 2 * m {
                Bound::PosInf
            } else {
                Bound::Fin(bps[e / 2].clone())
            };
            comps.push(Component::Open(lo, hi));
            comps.extend(trailing);
        }
        SemiSet1D { comps }
    }

    /// Sorted distinct union of the endpoints of several sets.
    pub fn common_breakpoints(sets: &[&SemiSet1D]) -> Vec<AlgebraicNumber> {
        let mut all: Vec<AlgebraicNumber> = sets.iter().flat_map(|s| s.endpoints()).collect();
        all.sort();
        all.dedup();
        all
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let bps = Self::common_breakpoints(&[self, other]);
        let a = self.cell_mask(&bps);
        let b = other.cell_mask(&bps);
        let mask: Vec<bool> = a.iter().zip(&b).map(|(&x, &y)| op(x, y)).collect();
        Self::from_cells(&bps, &mask)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn diff(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> Self {
        Self::full().diff(self)
    }

    /// The leftmost member that is rational (a rational point or a rational
    /// inside an interval); an irrational point only when nothing else exists.
    pub fn sample(&self) -> Option<AlgebraicNumber> {
        self.comps
            .iter()
            .find_map(|c| match c {
                Component::Open(lo, hi) => Some(AlgebraicNumber::rational(rational_inside(lo, hi))),
                Component::Point(p) => p.is_rational().then(|| p.clone()),
            })
            .or_else(|| match self.comps.first()? {
                Component::Point(p) => Some(p.clone()),
                Component::Open(..) => None,
            })
    }

    /// Up to `count` random rational members. Rational points are included
    /// as they are; irrational points cannot be sampled and are skipped.
    pub fn random_rationals<R: Rng>(&self, rng: &mut R, count: usize) -> Vec<Rational> {
        let usable: Vec<&Component> = self
            .comps
            .iter()
            .filter(|c| !matches!(c, Component::Point(p) if !p.is_rational()))
            .collect();
        if usable.is_empty() {
            return Vec::new();
        }
        (0..count)
            .map(|_| match usable[rng.gen_range(0..usable.len())] {
                Component::Point(p) => p.as_rational().expect("filtered").clone(),
                Component::Open(lo, hi) => {
                    let (l, h) = rational_window(lo, hi);
                    let t = Rational::new(rng.gen_range(1..1000).into(), 1000.into());
                    &l + (&h - &l) * t
                }
            })
            .collect()
    }
}

/// Rational `[l, h]` strictly inside `(lo, hi)` for sampling.
fn rational_window(lo: &Bound, hi: &Bound) -> (Rational, Rational) {
    let ten = Rational::from_integer(10.into());
    match (lo, hi) {
        (Bound::Fin(a), Bound::Fin(b)) => {
            let (mut a, mut b) = (a.clone(), b.clone());
            while a.upper() >= b.lower() {
                a = a.refine();
                b = b.refine();
            }
            (a.upper(), b.lower())
        }
        (Bound::NegInf, Bound::Fin(b)) => {
            let r = b.refine().lower();
            (&r - ten, r)
        }
        (Bound::Fin(a), Bound::PosInf) => {
            let r = a.refine().upper();
            (r.clone(), r + ten)
        }
        _ => (-ten.clone(), ten),
    }
}

impl fmt::Display for SemiSet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return f.write_str("∅");
        }
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            match c {
                Component::Point(p) => write!(f, "{{{p}}}")?,
                Component::Open(lo, hi) => write!(f, "({lo}, {hi})")?,
            }
        }
        Ok(())
    }
}

/// `{ξ ∈ domain : f(ξ) rel 0}` for univariate `f`.
pub fn solve_constraint_uni(f: &UniPoly, rel: Rel, domain: &SemiSet1D) -> SemiSet1D {
    if f.degree() == 0 {
        return if rel.holds_sign(super::unipoly::sign(&f.leading_coeff())) {
            domain.clone()
        } else {
            SemiSet1D::empty()
        };
    }
    let roots = isolate_roots(f);
    let m = roots.len();
    let mut mask = vec![false; 2 * m + 1];
    for (k, cell) in mask.iter_mut().enumerate() {
        let s = if k % 2 == 1 {
            0
        } else {
            let lo = if k == 0 {
                Bound::NegInf
            } else {
                Bound::Fin(roots[k / 2 - 1].clone())
            };
            let hi = if k == 2 * m {
                Bound::PosInf
            } else {
                Bound::Fin(roots[k / 2].clone())
            };
            f.sign_at(&rational_inside(&lo, &hi))
        };
        *cell = rel.holds_sign(s);
    }
    SemiSet1D::from_cells(&roots, &mask).intersect(domain)
}

/// `{ξ ∈ domain : f(ξ) rel 0}`; `f` may use at most one variable.
pub fn solve_constraint(f: &Poly, rel: Rel, domain: &SemiSet1D) -> Result<SemiSet1D> {
    let (u, _) = UniPoly::from_poly(f)?;
    Ok(solve_constraint_uni(&u, rel, domain))
}
