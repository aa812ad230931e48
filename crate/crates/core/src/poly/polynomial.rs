use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Packing;
use super::{Monomial, Scalar, VarArena};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial. Terms are kept sorted in descending
/// graded-lexicographic order with no zero coefficients, so structural
/// equality is mathematical equality.
#[derive(Clone)]
pub struct Polynomial<C> {
    arena: Arc<VarArena>,
    terms: Vec<(Monomial, C)>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(arena: &Arc<VarArena>) -> Self {
        Polynomial {
            arena: arena.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(arena: &Arc<VarArena>) -> Self {
        Self::constant(arena, C::one())
    }

    pub fn constant(arena: &Arc<VarArena>, c: C) -> Self {
        if c.is_zero() {
            return Self::zero(arena);
        }
        Polynomial {
            arena: arena.clone(),
            terms: vec![(Monomial::one(arena.len()), c)],
        }
    }

    /// The variable with index `i`.
    pub fn var(arena: &Arc<VarArena>, i: usize) -> Self {
        Polynomial {
            arena: arena.clone(),
            terms: vec![(Monomial::var(arena.len(), i, 1), C::one())],
        }
    }

    pub fn var_named(arena: &Arc<VarArena>, name: &str) -> Result<Self> {
        let i = arena
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(arena, i))
    }

    /// Builds the canonical form from arbitrary (possibly repeated, possibly
    /// zero) terms.
    pub fn from_terms<I>(arena: &Arc<VarArena>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), arena.len());
            match acc.get_mut(&m) {
                Some(v) => *v = v.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial {
            arena: arena.clone(),
            terms,
        }
    }

    fn from_sorted(arena: &Arc<VarArena>, terms: Vec<(Monomial, C)>) -> Self {
        Polynomial {
            arena: arena.clone(),
            terms,
        }
    }

    pub fn arena(&self) -> &Arc<VarArena> {
        &self.arena
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Value of a constant polynomial, `None` otherwise.
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> C {
        self.terms.first().map_or_else(C::zero, |(_, c)| c.clone())
    }

    /// Indices of variables with a nonzero exponent somewhere.
    pub fn vars_used(&self) -> Vec<usize> {
        let mut used = vec![false; self.arena.len()];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| u.then_some(i))
            .collect()
    }

    fn check_arena(&self, other: &Self) -> Result<()> {
        if VarArena::same(&self.arena, &other.arena) {
            Ok(())
        } else {
            Err(Error::ArenaMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arena(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arena(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arena(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        C::sub_ref(&a[i].1, &b[j].1)
                    } else {
                        C::add_ref(&a[i].1, &b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((m.clone(), if negate { -c.clone() } else { c.clone() }));
        }
        Self::from_sorted(&self.arena, out)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.arena);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if let Some(p) = Packing::new(self.arena.len(), self.degree() + other.degree()) {
            return self.product_packed(other, p);
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(v) => v.add_mul_assign(ca, cb),
                    None => {
                        acc.insert(m, C::mul_ref(ca, cb));
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        Self::from_sorted(&self.arena, terms)
    }

    fn product_packed(&self, other: &Self, p: Packing) -> Self {
        let kb: Vec<u128> = other.terms.iter().map(|(m, _)| p.pack(m)).collect();
        let mut acc: HashMap<u128, C> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            let ka = p.pack(ma);
            for (k, (_, cb)) in kb.iter().zip(&other.terms) {
                match acc.get_mut(&(ka + k)) {
                    Some(v) => v.add_mul_assign(ca, cb),
                    None => {
                        acc.insert(ka + k, C::mul_ref(ca, cb));
                    }
                }
            }
        }
        let mut terms: Vec<(u128, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        let terms = terms.into_iter().map(|(k, c)| (p.unpack(k), c)).collect();
        Self::from_sorted(&self.arena, terms)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.arena);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), C::mul_ref(v, c)))
            .collect();
        Self::from_sorted(&self.arena, terms)
    }

    /// Multiply by a monomial (no reordering needed: grlex is a monomial order).
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| (t.mul(m), c.clone()))
            .collect();
        Self::from_sorted(&self.arena, terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.arena);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / den`; fails with [`Error::InexactDivision`] when
    /// the multivariate long division leaves a remainder.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        self.check_arena(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = den.constant_value() {
            return Ok(self.scale(&(C::one() / c)));
        }
        if let Some(p) = Packing::new(self.arena.len(), self.degree()) {
            return self.div_exact_packed(den, p);
        }
        let (lm, lc) = den.terms[0].clone();
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return Err(inexact(rem.len() + 1));
            }
            let qm = lm.quotient_of(&m);
            let qc = c / lc.clone();
            for (dm, dc) in &den.terms[1..] {
                let tm = dm.mul(&qm);
                match rem.get_mut(&tm) {
                    Some(v) => {
                        v.sub_mul_assign(dc, &qc);
                        if v.is_zero() {
                            rem.remove(&tm);
                        }
                    }
                    None => {
                        rem.insert(tm, -C::mul_ref(dc, &qc));
                    }
                }
            }
            quot.push((qm, qc));
        }
        Ok(Self::from_sorted(&self.arena, quot))
    }

    fn div_exact_packed(&self, den: &Self, p: Packing) -> Result<Self> {
        let (lm, lc) = (p.pack(&den.terms[0].0), den.terms[0].1.clone());
        let rest: Vec<(u128, &C)> = den.terms[1..].iter().map(|(m, c)| (p.pack(m), c)).collect();
        let mut rem: BTreeMap<u128, C> = self.terms.iter().map(|(m, c)| (p.pack(m), c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((k, c)) = rem.pop_last() {
            if !p.divides(lm, k) {
                return Err(inexact(rem.len() + 1));
            }
            let qk = k - lm;
            let qc = c / lc.clone();
            for (dk, dc) in &rest {
                let tk = dk + qk;
                match rem.get_mut(&tk) {
                    Some(v) => {
                        v.sub_mul_assign(dc, &qc);
                        if v.is_zero() {
                            rem.remove(&tk);
                        }
                    }
                    None => {
                        rem.insert(tk, -C::mul_ref(dc, &qc));
                    }
                }
            }
            quot.push((p.unpack(qk), qc));
        }
        Ok(Self::from_sorted(&self.arena, quot))
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            Some((
                Monomial::from_exponents(exps),
                c.clone() * C::from_i64(e as i64),
            ))
        });
        Self::from_terms(&self.arena, terms.collect::<Vec<_>>())
    }

    /// Evaluate at a point given in arena order.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.arena.len(), "point dimension");
        let mut powers: HashMap<(usize, u32), C> = HashMap::new();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| num_traits::pow(point[i].clone(), e as usize))
                    .clone();
                t = t * p;
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitute a constant for one variable, keeping the arena.
    pub fn substitute(&self, var: usize, value: &C) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponents()[var];
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            (
                Monomial::from_exponents(exps),
                c.clone() * num_traits::pow(value.clone(), e as usize),
            )
        });
        Self::from_terms(&self.arena, terms.collect::<Vec<_>>())
    }

    /// Re-express over `target`, which must contain every variable this
    /// polynomial uses.
    pub fn embed(&self, target: &Arc<VarArena>) -> Result<Self> {
        if VarArena::same(&self.arena, target) {
            return Ok(self.clone());
        }
        let used = self.vars_used();
        let mut map = vec![0usize; self.arena.len()];
        for i in 0..self.arena.len() {
            match target.index_of(self.arena.name(i)) {
                Some(j) => map[i] = j,
                None if used.contains(&i) => {
                    return Err(Error::UnknownVariable(self.arena.name(i).to_string()))
                }
                None => {}
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(&map, target.len()), c.clone()));
        Ok(Self::from_terms(target, terms.collect::<Vec<_>>()))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.arena.len()),
            Some((m, _)) => it.fold(m.clone(), |g, (t, _)| g.gcd(t)),
        }
    }

    /// Divide every term by the monomial `m`, which must divide all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| (m.quotient_of(t), c.clone()))
            .collect();
        Self::from_sorted(&self.arena, terms)
    }

    pub fn content(&self) -> C {
        C::content(self.terms.iter().map(|(_, c)| c))
    }
}

fn inexact(left: usize) -> Error {
    Error::InexactDivision(format!("leading remainder term not divisible ({left} terms left)"))
}

impl<C: Scalar> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        VarArena::same(&self.arena, &other.arena) && self.terms == other.terms
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if m.is_one() || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.arena.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, C: Scalar> $tr<&'a Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            /// Panics when the operands live in different arenas; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("polynomial arena mismatch")
            }
        }

        impl<C: Scalar> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Polynomial::from_sorted(&self.arena, terms)
    }
}

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}
