use std::cmp::Ordering;

/// Exponent vector over a [`VarArena`](super::VarArena).
///
/// Ordering is graded lexicographic: higher total degree first, ties broken
/// lexicographically with the first arena variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = exp;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(self.0.iter())
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub(crate) fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut e = vec![0; nvars];
        for (i, &x) in self.0.iter().enumerate() {
            e[map[i]] = x;
        }
        Monomial(e.into_boxed_slice())
    }
}

/// Monomials packed into one integer: total degree in the top byte, then one
/// byte per exponent with the first variable most significant. Integer order
/// is graded-lexicographic order and multiplication is addition, as long as
/// every degree involved stays below 256.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Packing {
    nvars: usize,
}

impl Packing {
    const FIELD: u32 = 8;

    /// A packing able to hold monomials of total degree up to `max_degree`.
    pub fn new(nvars: usize, max_degree: u32) -> Option<Self> {
        (nvars < 16 && max_degree < 1 << Self::FIELD).then_some(Packing { nvars })
    }

    pub fn pack(self, m: &Monomial) -> u128 {
        m.0.iter()
            .fold(u128::from(m.degree()), |k, &e| (k << Self::FIELD) | u128::from(e))
    }

    pub fn unpack(self, mut key: u128) -> Monomial {
        let mut e = vec![0u32; self.nvars];
        for x in e.iter_mut().rev() {
            *x = (key & 0xff) as u32;
            key >>= Self::FIELD;
        }
        Monomial(e.into_boxed_slice())
    }

    /// Whether the monomial packed in `a` divides the one packed in `b`.
    pub fn divides(self, a: u128, b: u128) -> bool {
        (0..self.nvars).all(|i| {
            let shift = i as u32 * Self::FIELD;
            (a >> shift) & 0xff <= (b >> shift) & 0xff
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x = Monomial::from_exponents(vec![1, 0]);
        let y = Monomial::from_exponents(vec![0, 1]);
        let y2 = Monomial::from_exponents(vec![0, 2]);
        let one = Monomial::one(2);
        assert!(x > y);
        assert!(y2 > x);
        assert!(y > one);
    }

    #[test]
    fn packing_preserves_order_and_products() {
        let p = Packing::new(3, 20).unwrap();
        let ms = [vec![1, 0, 2], vec![0, 3, 0], vec![2, 2, 2], vec![0, 0, 0], vec![0, 0, 1]];
        for a in &ms {
            let a = Monomial::from_exponents(a.clone());
            assert_eq!(p.unpack(p.pack(&a)), a);
            for b in &ms {
                let b = Monomial::from_exponents(b.clone());
                assert_eq!(p.pack(&a).cmp(&p.pack(&b)), a.cmp(&b));
                assert_eq!(p.unpack(p.pack(&a) + p.pack(&b)), a.mul(&b));
                assert_eq!(p.divides(p.pack(&a), p.pack(&b)), a.divides(&b));
            }
        }
        assert!(Packing::new(16, 1).is_none());
        assert!(Packing::new(2, 256).is_none());
    }
}
