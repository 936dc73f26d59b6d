//! Finite formal integer combinations of ordered basis keys.
//!
//! Every element type in the crate (tensor words, `A ⊠ TV` elements, forms,
//! tensor powers, free-product words) is a `Combo` over some key type. Zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combo<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for Combo<K> {
    fn default() -> Self {
        Combo {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combo<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, BigInt::one())
    }

    pub fn term(key: K, coeff: BigInt) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (K, BigInt)>>(it: I) -> Self {
        let mut c = Self::zero();
        for (k, v) in it {
            c.add_term(k, v);
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Combo<K>, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * scale);
        }
    }

    pub fn add_assign(&mut self, other: &Combo<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Combo<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), -v);
        }
    }

    pub fn scaled(&self, scale: &BigInt) -> Self {
        let mut c = Self::zero();
        c.add_scaled(self, scale);
        c
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-BigInt::one())
    }

    pub fn plus(&self, other: &Combo<K>) -> Self {
        let mut c = self.clone();
        c.add_assign(other);
        c
    }

    pub fn minus(&self, other: &Combo<K>) -> Self {
        let mut c = self.clone();
        c.sub_assign(other);
        c
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L: Ord + Clone, F: FnMut(&K) -> Combo<L>>(&self, mut f: F) -> Combo<L> {
        let mut out = Combo::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    /// Relabels keys; colliding images are summed.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> Combo<L> {
        let mut out = Combo::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Bilinear extension of a product given on pairs of basis keys.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone, F: FnMut(&K, &L) -> Combo<M>>(
        &self,
        other: &Combo<L>,
        mut f: F,
    ) -> Combo<M> {
        let mut out = Combo::zero();
        for (k, v) in &self.terms {
            for (l, w) in other.iter() {
                out.add_scaled(&f(k, l), &(v * w));
            }
        }
        out
    }

    pub fn retain<F: FnMut(&K) -> bool>(&mut self, mut f: F) {
        self.terms.retain(|k, _| f(k));
    }

    pub fn filtered<F: FnMut(&K) -> bool>(&self, mut f: F) -> Self {
        let mut c = self.clone();
        c.retain(|k| f(k));
        c
    }

    /// Reduces every coefficient into `0..m` and prunes zeros.
    pub fn reduce_mod(&mut self, m: &BigInt) {
        for v in self.terms.values_mut() {
            *v = ((&*v % m) + m) % m;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn into_terms(self) -> BTreeMap<K, BigInt> {
        self.terms
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Combo<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{v}*{k:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_pruned() {
        let mut c = Combo::basis(3u32);
        c.add_term(3, BigInt::from(-1));
        assert!(c.is_zero());
        assert_eq!(c.len(), 0);
    }

    #[test]
    fn bilinear_expands() {
        let a = Combo::from_terms([(1u32, BigInt::from(2)), (2, BigInt::from(1))]);
        let b = Combo::from_terms([(10u32, BigInt::from(3))]);
        let p = a.bilinear(&b, |x, y| Combo::basis(x + y));
        assert_eq!(p.coeff(&11), BigInt::from(6));
        assert_eq!(p.coeff(&12), BigInt::from(3));
    }

    #[test]
    fn reduce_mod_handles_negatives() {
        let mut c = Combo::from_terms([(0u8, BigInt::from(-3)), (1, BigInt::from(4))]);
        c.reduce_mod(&BigInt::from(2));
        assert_eq!(c.coeff(&0), BigInt::one());
        assert_eq!(c.coeff(&1), BigInt::zero());
    }
}
