//! Point-push automorphisms and their action on tri-arcs.
//!
//! Each push generator acts on the free group as an automorphism fixing one
//! generator and conjugating the other. A push word `t1 t2 ... tn` acts by
//! applying the generator automorphism of `t1` first and `tn` last.

use std::fmt;
use std::str::FromStr;

use crate::freegroup::{FreeWord, Generator, Letter, ParseWordError};
use crate::triarc::TriArc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PushGen {
    AlongG1,
    AlongG1Inverse,
    AlongG2,
    AlongG2Inverse,
}

impl PushGen {
    pub const ALL: [PushGen; 4] =
        [PushGen::AlongG1, PushGen::AlongG1Inverse, PushGen::AlongG2, PushGen::AlongG2Inverse];

    pub fn inverse(self) -> PushGen {
        match self {
            PushGen::AlongG1 => PushGen::AlongG1Inverse,
            PushGen::AlongG1Inverse => PushGen::AlongG1,
            PushGen::AlongG2 => PushGen::AlongG2Inverse,
            PushGen::AlongG2Inverse => PushGen::AlongG2,
        }
    }

    fn from_letter(l: Letter) -> PushGen {
        match (l.generator, l.inverted) {
            (Generator::G1, false) => PushGen::AlongG1,
            (Generator::G1, true) => PushGen::AlongG1Inverse,
            (Generator::G2, false) => PushGen::AlongG2,
            (Generator::G2, true) => PushGen::AlongG2Inverse,
        }
    }

    fn to_char(self) -> char {
        match self {
            PushGen::AlongG1 => 'a',
            PushGen::AlongG1Inverse => 'A',
            PushGen::AlongG2 => 'b',
            PushGen::AlongG2Inverse => 'B',
        }
    }

    /// Every generator push is an inner automorphism: conjugation by `a`,
    /// `a^-1`, `b^-1` or `b` respectively.
    pub fn conjugator(self) -> FreeWord {
        match self {
            PushGen::AlongG1 => FreeWord::a(),
            PushGen::AlongG1Inverse => FreeWord::a().inverse(),
            PushGen::AlongG2 => FreeWord::b().inverse(),
            PushGen::AlongG2Inverse => FreeWord::b(),
        }
    }

    pub fn automorphism(self) -> Automorphism {
        Automorphism::conjugation(&self.conjugator())
    }

    /// The same push read in the frame of `t` itself.
    ///
    /// With `(x, y)` the decomposition of the largest arc of `t`, the
    /// generators `a` and `b` are taken to be `x` and `y`, so the push
    /// conjugates every arc by the matching arc of `t`.
    pub fn apply_local(self, t: &TriArc) -> TriArc {
        let (x, y) = t.frame();
        let g = self.conjugator().substitute((&x, &y));
        Automorphism::conjugation(&g).apply_to_triarc(t)
    }
}

/// A sequence of push generators, kept exactly as written.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PushWord {
    pub gens: Vec<PushGen>,
}

impl PushWord {
    pub fn new(gens: Vec<PushGen>) -> Self {
        PushWord { gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reverse-inverse: the push word undoing `self`.
    pub fn inverse(&self) -> PushWord {
        PushWord { gens: self.gens.iter().rev().map(|g| g.inverse()).collect() }
    }

    pub fn then(&self, other: &PushWord) -> PushWord {
        PushWord { gens: self.gens.iter().chain(&other.gens).copied().collect() }
    }

    /// `theta = t1 ... tn` acts as `Push(tn) o ... o Push(t1)`.
    pub fn automorphism(&self) -> Automorphism {
        self.gens
            .iter()
            .fold(Automorphism::identity(), |acc, g| g.automorphism().compose(&acc))
    }

    pub fn apply(&self, t: &TriArc) -> TriArc {
        self.automorphism().apply_to_triarc(t)
    }
}

impl fmt::Display for PushWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gens {
            write!(f, "{}", g.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PushWord {
    type Err = ParseWordError;

    /// Same alphabet as words, but no free reduction.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, ch)| {
                Letter::from_char(ch)
                    .map(PushGen::from_letter)
                    .ok_or_else(|| ParseWordError { input: s.to_string(), position, ch })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PushWord::new)
    }
}

/// An automorphism of the free group, given by the images of `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    image_g1: FreeWord,
    image_g2: FreeWord,
}

impl Automorphism {
    /// `None` unless the images form a basis.
    pub fn new(image_g1: FreeWord, image_g2: FreeWord) -> Option<Self> {
        FreeWord::is_basis(&image_g1, &image_g2).then_some(Automorphism { image_g1, image_g2 })
    }

    fn new_unchecked(image_g1: FreeWord, image_g2: FreeWord) -> Self {
        Automorphism { image_g1, image_g2 }
    }

    pub fn identity() -> Self {
        Automorphism::new_unchecked(FreeWord::a(), FreeWord::b())
    }

    /// `w -> g w g^-1`.
    pub fn conjugation(g: &FreeWord) -> Self {
        let conj = |w: FreeWord| g.concat(&w).concat(&g.inverse());
        Automorphism::new_unchecked(conj(FreeWord::a()), conj(FreeWord::b()))
    }

    pub fn image_g1(&self) -> &FreeWord {
        &self.image_g1
    }

    pub fn image_g2(&self) -> &FreeWord {
        &self.image_g2
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute((&self.image_g1, &self.image_g2))
    }

    /// `self o inner`: apply `inner` first.
    pub fn compose(&self, inner: &Automorphism) -> Automorphism {
        Automorphism::new_unchecked(self.apply(&inner.image_g1), self.apply(&inner.image_g2))
    }

    pub fn apply_to_triarc(&self, t: &TriArc) -> TriArc {
        t.substitute((&self.image_g1, &self.image_g2))
            .expect("automorphisms map tri-arcs to tri-arcs")
    }

    /// Whether the induced map on `Z^2` is the identity.
    pub fn forget_check(&self) -> bool {
        let (g1, g2) = (self.image_g1.abelianize(), self.image_g2.abelianize());
        (g1.p, g1.q, g2.p, g2.q) == (1, 0, 0, 1)
    }
}
