//! Transformations of a small vertex set and words of elementary collapsings.
//!
//! Maps act on the right: `x·(st) = (x·s)·t`, so a word is evaluated letter
//! by letter from the left.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a packed transformation can hold.
pub const MAX_POINTS: usize = 16;

const NIBBLE: u64 = 0xF;

/// A total self-map of `{0, .., n-1}` with `n <= 16`, packed four bits per point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    len: u8,
    packed: u64,
}

impl Transformation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        let packed = (0..n).fold(0u64, |acc, i| acc | ((i as u64) << (4 * i)));
        Transformation { len: n as u8, packed }
    }

    pub fn from_image(image: &[usize]) -> Result<Self> {
        let n = image.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyVertices { n, max: MAX_POINTS });
        }
        let mut packed = 0u64;
        for (i, &x) in image.iter().enumerate() {
            if x >= n {
                return Err(Error::Precondition(format!("image entry {x} out of range 0..{n}")));
            }
            packed |= (x as u64) << (4 * i);
        }
        Ok(Transformation { len: n as u8, packed })
    }

    /// The elementary collapsing `u -> v`: sends `u` to `v`, fixes the rest.
    pub fn collapsing(n: usize, u: usize, v: usize) -> Self {
        assert!(u < n && v < n);
        let mut t = Self::identity(n);
        t.packed = (t.packed & !(NIBBLE << (4 * u))) | ((v as u64) << (4 * u));
        t
    }

    pub(crate) fn from_packed(len: usize, packed: u64) -> Self {
        Transformation { len: len as u8, packed }
    }

    pub(crate) fn packed(&self) -> u64 {
        self.packed
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        ((self.packed >> (4 * x)) & NIBBLE) as usize
    }

    pub fn image(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.apply(i)).collect()
    }

    /// First `self`, then `other`.
    #[inline]
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut packed = 0u64;
        for i in 0..self.len() {
            let x = (self.packed >> (4 * i)) & NIBBLE;
            packed |= ((other.packed >> (4 * x)) & NIBBLE) << (4 * i);
        }
        Transformation { len: self.len, packed }
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(e >= 1, "semigroup elements have no zeroth power");
        let mut acc = *self;
        for _ in 1..e {
            acc = acc.then(self);
        }
        acc
    }

    /// Bitmask of the image set.
    pub fn image_mask(&self) -> u32 {
        (0..self.len()).fold(0u32, |m, i| m | (1 << self.apply(i)))
    }

    pub fn rank(&self) -> usize {
        self.image_mask().count_ones() as usize
    }

    /// `n - |image|`.
    pub fn defect(&self) -> usize {
        self.len() - self.rank()
    }

    pub fn is_idempotent(&self) -> bool {
        self.then(self) == *self
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{:?}", self.image())
    }
}

/// A product of elementary collapsings, one directed edge per letter.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CollapsingWord {
    pub letters: Vec<(usize, usize)>,
}

impl CollapsingWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letter(u: usize, v: usize) -> Self {
        CollapsingWord { letters: vec![(u, v)] }
    }

    /// `e_{p0 p1} e_{p1 p2} ...`: pushes the start of the path along it.
    pub fn along(path: &[usize]) -> Self {
        CollapsingWord { letters: path.windows(2).map(|w| (w[0], w[1])).collect() }
    }

    pub fn push(&mut self, u: usize, v: usize) {
        self.letters.push((u, v));
    }

    pub fn extend(&mut self, other: &CollapsingWord) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a CollapsingWord>) -> Self {
        let mut w = CollapsingWord::new();
        for p in parts {
            w.extend(p);
        }
        w
    }

    pub fn repeat(&self, times: usize) -> Self {
        CollapsingWord { letters: self.letters.repeat(times) }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Value of the word on `n` points; the empty word is the identity.
    pub fn evaluate(&self, n: usize) -> Transformation {
        self.letters
            .iter()
            .fold(Transformation::identity(n), |acc, &(u, v)| {
                acc.then(&Transformation::collapsing(n, u, v))
            })
    }

    /// `e(a,b) e(b,c) ...` with vertex labels.
    pub fn render(&self, label: impl Fn(usize) -> String) -> String {
        self.letters
            .iter()
            .map(|&(u, v)| format!("e({},{})", label(u), label(v)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn collapsing_maps_u_to_v_only() {
        let e = Transformation::collapsing(3, 0, 1);
        assert_eq!(e.image(), vec![1, 1, 2]);
        assert!(e.is_idempotent());
        assert_eq!(e.defect(), 1);
    }

    #[test]
    fn composition_acts_on_the_right() {
        // e_ab then e_ba on {a, b}: both go to a.
        let ab = Transformation::collapsing(2, 0, 1);
        let ba = Transformation::collapsing(2, 1, 0);
        assert_eq!(ab.then(&ba).image(), vec![0, 0]);
        assert_eq!(ba.then(&ab).image(), vec![1, 1]);
    }

    #[test]
    fn word_evaluation_matches_folded_product() {
        let w = CollapsingWord { letters: vec![(0, 1), (1, 2), (2, 0)] };
        let t = w.evaluate(4);
        // 0 -> 1 -> 2 -> 0, 1 -> 2 -> 0, 2 -> 0, 3 fixed
        assert_eq!(t.image(), vec![0, 0, 0, 3]);
        assert_eq!(CollapsingWord::new().evaluate(3), Transformation::identity(3));
    }

    #[test]
    fn rejects_bad_images() {
        assert!(Transformation::from_image(&[0, 3]).is_err());
        assert!(matches!(
            Transformation::from_image(&[0; 17]),
            Err(Error::TooManyVertices { n: 17, max: 16 })
        ));
    }

    fn transformation(n: usize) -> impl Strategy<Value = Transformation> {
        proptest::collection::vec(0..n, n).prop_map(|img| Transformation::from_image(&img).unwrap())
    }

    proptest! {
        #[test]
        fn composition_is_associative(
            (a, b, c) in (1usize..=16).prop_flat_map(|n| (transformation(n), transformation(n), transformation(n)))
        ) {
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
            for x in 0..a.len() {
                prop_assert_eq!(a.then(&b).apply(x), b.apply(a.apply(x)));
            }
        }

        #[test]
        fn defect_never_decreases_under_products(
            (a, b) in (1usize..=8).prop_flat_map(|n| (transformation(n), transformation(n)))
        ) {
            let ab = a.then(&b);
            prop_assert!(ab.defect() >= a.defect().max(b.defect()));
        }
    }
}
