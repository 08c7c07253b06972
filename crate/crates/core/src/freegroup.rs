//! Freely reduced words in the free group of rank two.
//!
//! The two generators are written `a` and `b`, their inverses `A` and `B`.
//! Letters are ordered `a < A < b < B`, and words are ordered first by
//! length and then lexicographically. That order is what every canonical
//! form downstream is built on.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    G1,
    G2,
}

/// A generator or its inverse.
///
/// The derived order (generator first, then sign) gives `a < A < b < B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverted: bool,
}

impl Letter {
    pub const A: Letter = Letter { generator: Generator::G1, inverted: false };
    pub const A_INV: Letter = Letter { generator: Generator::G1, inverted: true };
    pub const B: Letter = Letter { generator: Generator::G2, inverted: false };
    pub const B_INV: Letter = Letter { generator: Generator::G2, inverted: true };

    /// All four letters in the module-wide order.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];

    pub fn inverse(self) -> Letter {
        Letter { generator: self.generator, inverted: !self.inverted }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverted != other.inverted
    }

    pub fn to_char(self) -> char {
        match (self.generator, self.inverted) {
            (Generator::G1, false) => 'a',
            (Generator::G1, true) => 'A',
            (Generator::G2, false) => 'b',
            (Generator::G2, true) => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::A_INV),
            'b' => Some(Letter::B),
            'B' => Some(Letter::B_INV),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid character {ch:?} at position {position} in word {input:?}")]
pub struct ParseWordError {
    pub input: String,
    pub position: usize,
    pub ch: char,
}

/// Exponent sums of `a` and `b`: the image of a word in `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AbelianImage {
    pub p: i64,
    pub q: i64,
}

impl AbelianImage {
    pub fn new(p: i64, q: i64) -> Self {
        AbelianImage { p, q }
    }

    /// `p * q' - q * p'`.
    pub fn det(self, other: AbelianImage) -> i128 {
        self.p as i128 * other.q as i128 - self.q as i128 * other.p as i128
    }
}

impl Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        AbelianImage { p: self.p + rhs.p, q: self.q + rhs.q }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    pub fn a() -> Self {
        FreeWord { letters: vec![Letter::A] }
    }

    pub fn b() -> Self {
        FreeWord { letters: vec![Letter::B] }
    }

    pub fn from_letter(letter: Letter) -> Self {
        FreeWord { letters: vec![letter] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut k = 0;
        let (u, v) = (&self.letters, &other.letters);
        while k < u.len() && k < v.len() && u[u.len() - 1 - k].cancels(v[k]) {
            k += 1;
        }
        let mut letters = Vec::with_capacity(u.len() + v.len() - 2 * k);
        letters.extend_from_slice(&u[..u.len() - k]);
        letters.extend_from_slice(&v[k..]);
        FreeWord { letters }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Splits `self` as `conjugator * core * conjugator^-1` with `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let w = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < w.len() && w[k].cancels(w[w.len() - 1 - k]) {
            k += 1;
        }
        let core = FreeWord { letters: w[k..w.len() - k].to_vec() };
        let conjugator = FreeWord { letters: w[..k].to_vec() };
        (core, conjugator)
    }

    /// Whether `core` is cyclically reduced (first letter is not the inverse of the last).
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(f), Some(l)) if self.letters.len() > 1 => !f.cancels(*l),
            _ => true,
        }
    }

    pub fn is_conjugate(&self, other: &FreeWord) -> bool {
        let (u, _) = self.cyclic_reduce();
        let (v, _) = other.cyclic_reduce();
        if u.len() != v.len() {
            return false;
        }
        if u.is_empty() {
            return true;
        }
        let n = u.len();
        (0..n).any(|shift| (0..n).all(|i| u.letters[(i + shift) % n] == v.letters[i]))
    }

    pub fn abelianize(&self) -> AbelianImage {
        let mut img = AbelianImage::default();
        for l in &self.letters {
            let d = if l.inverted { -1 } else { 1 };
            match l.generator {
                Generator::G1 => img.p += d,
                Generator::G2 => img.q += d,
            }
        }
        img
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(u: &FreeWord, v: &FreeWord) -> FreeWord {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    /// Whether `(u, v)` generates the free group.
    ///
    /// In rank two a pair is a basis exactly when its commutator is
    /// conjugate to `[a, b]` or to its inverse.
    pub fn is_basis(u: &FreeWord, v: &FreeWord) -> bool {
        let c = FreeWord::commutator(u, v);
        if c.len() < 4 {
            return false;
        }
        let std = FreeWord::commutator(&FreeWord::a(), &FreeWord::b());
        c.is_conjugate(&std) || c.is_conjugate(&std.inverse())
    }

    /// Image of `self` under the endomorphism `a -> images.0`, `b -> images.1`.
    pub fn substitute(&self, images: (&FreeWord, &FreeWord)) -> FreeWord {
        let (ia, ib) = (images.0, images.1);
        let (ia_inv, ib_inv) = (ia.inverse(), ib.inverse());
        let mut out = FreeWord::identity();
        for l in &self.letters {
            let piece = match (l.generator, l.inverted) {
                (Generator::G1, false) => ia,
                (Generator::G1, true) => &ia_inv,
                (Generator::G2, false) => ib,
                (Generator::G2, true) => &ib_inv,
            };
            out = out.concat(piece);
        }
        out
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = ParseWordError;

    /// Parses `a`, `A`, `b`, `B` strings. Input need not be reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            match Letter::from_char(ch) {
                Some(l) => letters.push(l),
                None => {
                    return Err(ParseWordError { input: s.to_string(), position, ch });
                }
            }
        }
        Ok(FreeWord::reduce(letters))
    }
}

/// Parses a word literal. Panics on bad input; for tests and constants.
pub fn word(s: &str) -> FreeWord {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
