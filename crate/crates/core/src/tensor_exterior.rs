//! The graded Fin-modules `TV` and `ΛV`.
//!
//! `V^n` is free on `v_1, …, v_n` with `v_0 = 0`, and a map `α: [n] → [m]`
//! acts by `α v_i = v_{α(i)} − v_{α(0)}`. Tensor words are letter lists,
//! exterior monomials are strictly increasing letter lists.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::fin_maps::FinMap;

/// Letters are `1..=n`; the empty word is the unit.
pub type Word = Vec<u8>;

/// An element of `T V^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElt {
    pub codim: usize,
    pub terms: Combo<Word>,
}

/// An element of `Λ V^n`, keyed by strictly increasing letter lists.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtElt {
    pub codim: usize,
    pub terms: Combo<Word>,
}

impl TensorElt {
    pub fn new(codim: usize, terms: Combo<Word>) -> Result<Self> {
        for w in terms.keys() {
            check_letters(w, codim)?;
        }
        Ok(TensorElt { codim, terms })
    }

    pub fn word(codim: usize, letters: &[u8]) -> Result<Self> {
        Self::new(codim, Combo::basis(letters.to_vec()))
    }

    pub fn one(codim: usize) -> Self {
        TensorElt {
            codim,
            terms: Combo::basis(vec![]),
        }
    }

    pub fn mul(&self, other: &TensorElt) -> Result<TensorElt> {
        if self.codim != other.codim {
            return Err(Error::Dimension("tensor product of different codims".into()));
        }
        Ok(TensorElt {
            codim: self.codim,
            terms: self.terms.bilinear(&other.terms, |x, y| Combo::basis(concat(x, y))),
        })
    }
}

impl ExtElt {
    pub fn new(codim: usize, terms: Combo<Word>) -> Result<Self> {
        for w in terms.keys() {
            check_letters(w, codim)?;
            if w.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidStructure(format!("exterior monomial {w:?} not increasing")));
            }
        }
        Ok(ExtElt { codim, terms })
    }

    pub fn wedge(&self, other: &ExtElt) -> Result<ExtElt> {
        if self.codim != other.codim {
            return Err(Error::Dimension("wedge of different codims".into()));
        }
        Ok(ExtElt {
            codim: self.codim,
            terms: self.terms.bilinear(&other.terms, |x, y| project_word(&concat(x, y))),
        })
    }
}

fn check_letters(w: &[u8], codim: usize) -> Result<()> {
    if w.iter().any(|&l| l == 0 || l as usize > codim) {
        return Err(Error::Index(format!("letters {w:?} outside 1..={codim}")));
    }
    Ok(())
}

pub fn concat(x: &[u8], y: &[u8]) -> Word {
    let mut w = Vec::with_capacity(x.len() + y.len());
    w.extend_from_slice(x);
    w.extend_from_slice(y);
    w
}

/// `v_i − v_j` with `v_0 = 0`, as a combination of one-letter words.
pub fn letter_difference(i: usize, j: usize) -> Combo<Word> {
    let mut c = Combo::zero();
    if i != 0 {
        c.add_term(vec![i as u8], BigInt::one());
    }
    if j != 0 {
        c.add_term(vec![j as u8], -BigInt::one());
    }
    c
}

/// `α v_i`.
pub fn act_letter(alpha: &FinMap, i: u8) -> Combo<Word> {
    letter_difference(alpha.apply(i as usize), alpha.apply(0))
}

/// `α` applied to a word: the product of the letter images.
pub fn act_word(alpha: &FinMap, word: &[u8]) -> Combo<Word> {
    let mut acc: Combo<Word> = Combo::basis(vec![]);
    for &l in word {
        let img = act_letter(alpha, l);
        if img.is_zero() {
            return Combo::zero();
        }
        acc = acc.bilinear(&img, |x, y| Combo::basis(concat(x, y)));
    }
    acc
}

pub fn act_words(alpha: &FinMap, x: &Combo<Word>) -> Combo<Word> {
    x.map_linear(|w| act_word(alpha, w))
}

pub fn fin_action_t(alpha: &FinMap, x: &TensorElt) -> Result<TensorElt> {
    if alpha.source() != x.codim {
        return Err(Error::Dimension(format!(
            "map from [{}] applied to an element of codim {}",
            alpha.source(),
            x.codim
        )));
    }
    Ok(TensorElt {
        codim: alpha.target(),
        terms: act_words(alpha, &x.terms),
    })
}

pub fn fin_action_ext(alpha: &FinMap, x: &ExtElt) -> Result<ExtElt> {
    if alpha.source() != x.codim {
        return Err(Error::Dimension("exterior action dimension mismatch".into()));
    }
    Ok(ExtElt {
        codim: alpha.target(),
        terms: x.terms.map_linear(|w| act_word(alpha, w).map_linear(|u| project_word(u))),
    })
}

/// The derivation with `θ(v_i) = v_i v_i`, of degree +1.
pub fn theta_word(word: &[u8]) -> Combo<Word> {
    let mut out = Combo::zero();
    for k in 0..word.len() {
        let mut w = Vec::with_capacity(word.len() + 1);
        w.extend_from_slice(&word[..=k]);
        w.extend_from_slice(&word[k..]);
        out.add_term(w, if k % 2 == 0 { BigInt::one() } else { -BigInt::one() });
    }
    out
}

pub fn theta(x: &TensorElt) -> TensorElt {
    TensorElt {
        codim: x.codim,
        terms: x.terms.map_linear(|w| theta_word(w)),
    }
}

/// Sign of the permutation sorting `w`, or `None` if a letter repeats.
pub fn sort_sign(w: &[u8]) -> Option<(i32, Word)> {
    let mut inversions = 0usize;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            match w[i].cmp(&w[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, sorted))
}

/// The canonical projection `p: TV → ΛV` on a single word.
pub fn project_word(w: &[u8]) -> Combo<Word> {
    match sort_sign(w) {
        Some((s, sorted)) => Combo::term(sorted, BigInt::from(s)),
        None => Combo::zero(),
    }
}

pub fn project_p(x: &TensorElt) -> ExtElt {
    ExtElt {
        codim: x.codim,
        terms: x.terms.map_linear(|w| project_word(w)),
    }
}

/// All permutations of `1..=n` as words, with their signs, lexicographically.
pub fn permutations(n: usize) -> Vec<(Word, i32)> {
    let mut out = Vec::new();
    let mut cur: Word = (1..=n as u8).collect();
    loop {
        let sign = sort_sign(&cur).expect("permutation").0;
        out.push((cur.clone(), sign));
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// `ε_n = Σ_σ sign(σ) v_{σ1} … v_{σn}`.
pub fn epsilon(n: usize) -> TensorElt {
    TensorElt {
        codim: n,
        terms: Combo::from_terms(permutations(n).into_iter().map(|(w, s)| (w, BigInt::from(s)))),
    }
}

/// All words of length `r` in letters `1..=n`, lexicographically.
pub fn words(r: usize, n: usize) -> Vec<Word> {
    if r == 0 {
        return vec![vec![]];
    }
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut cur = vec![1u8; r];
    loop {
        out.push(cur.clone());
        let mut k = r;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if (cur[k] as usize) < n {
                cur[k] += 1;
                for c in cur.iter_mut().skip(k + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}

pub fn is_surjective(w: &[u8], n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    for &l in w {
        seen[l as usize] = true;
    }
    seen[1..].iter().all(|&b| b)
}

/// Surjections `{1..r} → {1..n}` as words, lexicographically.
pub fn surjections(r: usize, n: usize) -> Vec<Word> {
    if r < n {
        return vec![];
    }
    words(r, n).into_iter().filter(|w| is_surjective(w, n)).collect()
}

/// Strictly increasing words of length `r` in `1..=n`.
pub fn subsets(r: usize, n: usize) -> Vec<Word> {
    words(r, n)
        .into_iter()
        .filter(|w| w.windows(2).all(|p| p[0] < p[1]))
        .collect()
}

/// The basis `sur_{r,n}` of `T^rV^n / Σ_j T^rV^n_j`, the quotient by words
/// missing some letter.
#[derive(Clone, Debug)]
pub struct SurjectionBasis {
    pub r: usize,
    pub n: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl SurjectionBasis {
    pub fn new(r: usize, n: usize) -> Self {
        let words = surjections(r, n);
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        SurjectionBasis { r, n, words, index }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn position(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of the class of `x`; words of other lengths or missing a
    /// letter are dropped.
    pub fn reduce(&self, x: &Combo<Word>) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.words.len()];
        for (w, c) in x.iter() {
            if let Some(&i) = self.index.get(w) {
                v[i] += c;
            }
        }
        v
    }
}

pub fn format_word(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|l| format!("v{l}")).collect::<Vec<_>>().join(".")
}

pub fn format_monomial(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|l| format!("v{l}")).collect::<Vec<_>>().join("^")
}

pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "1" || s.is_empty() {
        return Ok(vec![]);
    }
    s.split(['.', '^'])
        .map(|t| {
            t.trim()
                .strip_prefix('v')
                .and_then(|d| d.parse::<u8>().ok())
                .filter(|&l| l > 0)
                .ok_or_else(|| Error::Parse(format!("bad letter {t:?} in {s:?}")))
        })
        .collect()
}

fn fmt_combo(f: &mut fmt::Formatter<'_>, c: &Combo<Word>, show: fn(&[u8]) -> String) -> fmt::Result {
    if c.is_zero() {
        return write!(f, "0");
    }
    for (i, (w, k)) in c.iter().enumerate() {
        let neg = k < &BigInt::zero();
        let mag = if neg { -k } else { k.clone() };
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        if mag.is_one() {
            write!(f, "{}", show(w))?;
        } else {
            write!(f, "{mag}*{}", show(w))?;
        }
    }
    Ok(())
}

impl fmt::Display for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combo(f, &self.terms, format_word)
    }
}

impl fmt::Debug for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T[{}]({self})", self.codim)
    }
}

impl fmt::Display for ExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combo(f, &self.terms, format_monomial)
    }
}

impl fmt::Debug for ExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ[{}]({self})", self.codim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(codim: usize, letters: &[u8]) -> TensorElt {
        TensorElt::word(codim, letters).unwrap()
    }

    #[test]
    fn action_examples() {
        let d0 = FinMap::coface(1, 0).unwrap();
        assert_eq!(fin_action_t(&d0, &w(1, &[1])).unwrap().to_string(), "-v1 + v2");
        let x = w(2, &[2, 1]);
        assert_eq!(fin_action_t(&FinMap::identity(2), &x).unwrap(), x);
        let mu0 = FinMap::codegeneracy(2, 0).unwrap();
        assert!(fin_action_t(&mu0, &w(2, &[1, 2])).unwrap().terms.is_zero());
        assert!(fin_action_t(&mu0, &w(1, &[1])).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&w(1, &[1])), w(1, &[1, 1]));
        assert_eq!(theta(&w(2, &[1, 2])).to_string(), "v1.v1.v2 - v1.v2.v2");
        assert!(theta(&theta(&w(2, &[1, 2]))).terms.is_zero());
        assert!(theta(&TensorElt::one(3)).terms.is_zero());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project_p(&w(2, &[2, 1])).to_string(), "-v1^v2");
        assert!(project_p(&w(1, &[1, 1])).terms.is_zero());
        for n in 0..=6 {
            let p = project_p(&epsilon(n));
            let full: Word = (1..=n as u8).collect();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(p.terms.len(), 1);
            assert_eq!(p.terms.coeff(&full), BigInt::from(fact));
        }
    }

    #[test]
    fn epsilon_and_surjections() {
        assert_eq!(epsilon(2).to_string(), "v1.v2 - v2.v1");
        assert_eq!(SurjectionBasis::new(3, 2).len(), 2usize.pow(3) - 2);
        assert!(surjections(1, 2).is_empty());
        // ε_n is killed by every codegeneracy
        for n in 1..=4 {
            for j in 0..n {
                let mu = FinMap::codegeneracy(n, j).unwrap();
                assert!(fin_action_t(&mu, &epsilon(n)).unwrap().terms.is_zero());
            }
        }
    }

    #[test]
    fn surjection_counts_by_inclusion_exclusion() {
        fn binom(n: i64, k: i64) -> i64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for r in 0..=6 {
            for n in 0..=r {
                let expected: i64 = (0..=n as i64)
                    .map(|k| (if k % 2 == 0 { 1 } else { -1 }) * binom(n as i64, k) * (n as i64 - k).pow(r as u32))
                    .sum();
                assert_eq!(surjections(r, n).len() as i64, expected, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for word in [vec![], vec![1u8], vec![3, 1, 2]] {
            assert_eq!(parse_word(&format_word(&word)).unwrap(), word);
        }
        assert!(parse_word("v0").is_err());
    }

    #[test]
    fn wedge_matches_projection_of_products() {
        let a = w(3, &[2]);
        let b = w(3, &[1, 3]);
        let lhs = project_p(&a).wedge(&project_p(&b)).unwrap();
        assert_eq!(lhs, project_p(&a.mul(&b).unwrap()));
    }

    fn arb_word(n: u8) -> impl Strategy<Value = Word> {
        proptest::collection::vec(1..=n, 0..4)
    }

    proptest! {
        #[test]
        fn action_is_functorial(x in arb_word(2), a in proptest::collection::vec(0usize..=3, 3), b in proptest::collection::vec(0usize..=2, 4)) {
            let alpha = FinMap::new(2, 3, a).unwrap();
            let beta = FinMap::new(3, 2, b).unwrap();
            let elt = w(2, &x);
            let two = fin_action_t(&beta, &fin_action_t(&alpha, &elt).unwrap()).unwrap();
            let once = fin_action_t(&alpha.then(&beta).unwrap(), &elt).unwrap();
            prop_assert_eq!(two, once);
        }

        #[test]
        fn theta_is_a_derivation(x in arb_word(3), y in arb_word(3)) {
            let (a, b) = (w(3, &x), w(3, &y));
            let lhs = theta(&a.mul(&b).unwrap());
            let sign = if x.len() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let rhs = theta(&a).mul(&b).unwrap().terms.plus(&a.mul(&theta(&b)).unwrap().terms.scaled(&sign));
            prop_assert_eq!(lhs.terms, rhs);
        }

        #[test]
        fn projection_is_natural(x in arb_word(2), a in proptest::collection::vec(0usize..=2, 3)) {
            let alpha = FinMap::new(2, 2, a).unwrap();
            let elt = w(2, &x);
            let lhs = project_p(&fin_action_t(&alpha, &elt).unwrap());
            let rhs = fin_action_ext(&alpha, &project_p(&elt)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
