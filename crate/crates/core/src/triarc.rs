//! Tri-arcs and the flip moves between them.
//!
//! A tri-arc is an unordered triple of unoriented arc classes, each stored
//! as the smaller of a word and its inverse. Every valid tri-arc has the
//! shape `{x, y, xy}` for some basis `(x, y)`, up to orientation of each
//! arc. Replacing one arc `c = x y` gives the three elementary moves:
//!
//! * big flip: `c -> y x`
//! * first small flip: `c -> x y^-1`
//! * second small flip: `c -> x^-1 y`

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::freegroup::{FreeWord, ParseWordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriArcError {
    #[error("the identity word is not an arc")]
    IdentityWord,
    #[error("arcs are not pairwise distinct")]
    NotDistinct,
    #[error("no arc of {0} is a product of the other two")]
    NoDecomposition(String),
    #[error("arcs {0} and {1} do not form a basis")]
    NotBasis(String, String),
    #[error("arc {arc} is not in tri-arc {triarc}")]
    ArcNotInTriple { arc: String, triarc: String },
    #[error("expected three comma-separated words, got {0:?}")]
    WrongArity(String),
    #[error("unknown move kind {0:?}")]
    UnknownMoveKind(String),
    #[error(transparent)]
    Word(#[from] ParseWordError),
}

impl TriArcError {
    /// Variant name, used in command-line diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            TriArcError::IdentityWord => "IdentityWord",
            TriArcError::NotDistinct => "NotDistinct",
            TriArcError::NoDecomposition(_) => "NoDecomposition",
            TriArcError::NotBasis(..) => "NotBasis",
            TriArcError::ArcNotInTriple { .. } => "ArcNotInTriple",
            TriArcError::WrongArity(_) => "WrongArity",
            TriArcError::UnknownMoveKind(_) => "UnknownMoveKind",
            TriArcError::Word(_) => "Word",
        }
    }
}

/// An unoriented arc: the canonical element of `{w, w^-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcClass(FreeWord);

impl ArcClass {
    pub fn new(w: FreeWord) -> Result<Self, TriArcError> {
        if w.is_identity() {
            return Err(TriArcError::IdentityWord);
        }
        let inv = w.inverse();
        Ok(ArcClass(if inv < w { inv } else { w }))
    }

    pub fn canon(&self) -> &FreeWord {
        &self.0
    }

    /// The two oriented representatives, canonical one first.
    pub fn orientations(&self) -> [FreeWord; 2] {
        [self.0.clone(), self.0.inverse()]
    }

    pub fn contains(&self, w: &FreeWord) -> bool {
        *w == self.0 || w.inverse() == self.0
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ArcClass {
    type Err = TriArcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ArcClass::new(s.trim().parse()?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    Big,
    SmallFirst,
    SmallSecond,
}

impl MoveKind {
    pub const ALL: [MoveKind; 3] = [MoveKind::Big, MoveKind::SmallFirst, MoveKind::SmallSecond];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Big => "big",
            MoveKind::SmallFirst => "small1",
            MoveKind::SmallSecond => "small2",
        }
    }

    pub fn is_big(self) -> bool {
        self == MoveKind::Big
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = TriArcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "big" => Ok(MoveKind::Big),
            "small1" => Ok(MoveKind::SmallFirst),
            "small2" => Ok(MoveKind::SmallSecond),
            other => Err(TriArcError::UnknownMoveKind(other.to_string())),
        }
    }
}

/// One elementary move: which arc is replaced and how.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveLabel {
    pub arc: ArcClass,
    pub kind: MoveKind,
}

impl fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.arc)
    }
}

impl FromStr for MoveLabel {
    type Err = TriArcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arc) = s
            .split_once(':')
            .ok_or_else(|| TriArcError::UnknownMoveKind(s.to_string()))?;
        Ok(MoveLabel { arc: arc.parse()?, kind: kind.parse()? })
    }
}

/// A tri-arc, stored as three distinct arc classes in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriArc {
    arcs: [ArcClass; 3],
}

impl TriArc {
    /// `{a, b, ab}`.
    pub fn base() -> Self {
        TriArc::from_sorted_unchecked([
            ArcClass(FreeWord::a()),
            ArcClass(FreeWord::b()),
            ArcClass(FreeWord::a().concat(&FreeWord::b())),
        ])
    }

    /// Builds and validates a tri-arc from three words in any orientation.
    pub fn new(w1: FreeWord, w2: FreeWord, w3: FreeWord) -> Result<Self, TriArcError> {
        let arcs = [ArcClass::new(w1)?, ArcClass::new(w2)?, ArcClass::new(w3)?];
        TriArc::from_arcs(arcs)
    }

    pub fn from_arcs(mut arcs: [ArcClass; 3]) -> Result<Self, TriArcError> {
        arcs.sort();
        if arcs[0] == arcs[1] || arcs[1] == arcs[2] {
            return Err(TriArcError::NotDistinct);
        }
        let t = TriArc { arcs };
        for i in 0..3 {
            if t.find_decomposition(i).is_none() {
                return Err(TriArcError::NoDecomposition(t.to_string()));
            }
        }
        if !FreeWord::is_basis(t.arcs[0].canon(), t.arcs[1].canon()) {
            return Err(TriArcError::NotBasis(t.arcs[0].to_string(), t.arcs[1].to_string()));
        }
        Ok(t)
    }

    fn from_sorted_unchecked(arcs: [ArcClass; 3]) -> Self {
        debug_assert!(arcs[0] < arcs[1] && arcs[1] < arcs[2]);
        TriArc { arcs }
    }

    fn replaced(&self, index: usize, arc: ArcClass) -> TriArc {
        let mut arcs = self.arcs.clone();
        arcs[index] = arc;
        arcs.sort();
        TriArc::from_sorted_unchecked(arcs)
    }

    pub fn arcs(&self) -> &[ArcClass; 3] {
        &self.arcs
    }

    pub fn contains(&self, arc: &ArcClass) -> bool {
        self.arcs.contains(arc)
    }

    fn index_of(&self, arc: &ArcClass) -> Result<usize, TriArcError> {
        self.arcs
            .iter()
            .position(|a| a == arc)
            .ok_or_else(|| TriArcError::ArcNotInTriple {
                arc: arc.to_string(),
                triarc: self.to_string(),
            })
    }

    /// Indices of the two arcs other than `index`, in sorted order.
    fn others(index: usize) -> (usize, usize) {
        match index {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        }
    }

    /// First `(x, y)` with `x * y == canon` in the fixed enumeration order:
    /// both compositions of the other pair, signs `+` before `-`.
    fn find_decomposition(&self, index: usize) -> Option<(FreeWord, FreeWord)> {
        let target = self.arcs[index].canon();
        let (i, j) = TriArc::others(index);
        for (first, second) in [(i, j), (j, i)] {
            for x in self.arcs[first].orientations() {
                for y in self.arcs[second].orientations() {
                    if x.len() + y.len() >= target.len() && x.concat(&y) == *target {
                        return Some((x, y));
                    }
                }
            }
        }
        None
    }

    /// Oriented representatives `(x, y)` of the other two arcs with `x y`
    /// equal to the canonical word of `target`.
    pub fn decompose(&self, target: &ArcClass) -> Result<(FreeWord, FreeWord), TriArcError> {
        let index = self.index_of(target)?;
        self.find_decomposition(index)
            .ok_or_else(|| TriArcError::NoDecomposition(self.to_string()))
    }

    /// The basis `(x, y)` with `x y` equal to the largest arc.
    pub fn frame(&self) -> (FreeWord, FreeWord) {
        self.find_decomposition(2).expect("validated tri-arcs decompose on every arc")
    }

    fn moved(&self, index: usize, kind: MoveKind) -> (TriArc, ArcClass) {
        let (x, y) = self
            .find_decomposition(index)
            .expect("validated tri-arcs decompose on every arc");
        let new_word = match kind {
            MoveKind::Big => y.concat(&x),
            MoveKind::SmallFirst => x.concat(&y.inverse()),
            MoveKind::SmallSecond => x.inverse().concat(&y),
        };
        let arc = ArcClass::new(new_word).expect("flip of a basis product is never trivial");
        (self.replaced(index, arc.clone()), arc)
    }

    /// Replaces `target = x y` by `y x`. Returns the new tri-arc and the new arc.
    pub fn big_flip(&self, target: &ArcClass) -> Result<(TriArc, ArcClass), TriArcError> {
        let index = self.index_of(target)?;
        Ok(self.moved(index, MoveKind::Big))
    }

    /// The two small flips on `target = x y`: `x y^-1` and `x^-1 y`.
    pub fn small_flips(&self, target: &ArcClass) -> Result<(TriArc, TriArc), TriArcError> {
        let index = self.index_of(target)?;
        Ok((
            self.moved(index, MoveKind::SmallFirst).0,
            self.moved(index, MoveKind::SmallSecond).0,
        ))
    }

    pub fn apply(&self, label: &MoveLabel) -> Result<TriArc, TriArcError> {
        let index = self.index_of(&label.arc)?;
        Ok(self.moved(index, label.kind).0)
    }

    /// The nine neighbours: per arc (in sorted order) big, small1, small2.
    pub fn neighbors(&self) -> Vec<(TriArc, MoveLabel)> {
        let mut out = Vec::with_capacity(9);
        for index in 0..3 {
            for kind in MoveKind::ALL {
                out.push((
                    self.moved(index, kind).0,
                    MoveLabel { arc: self.arcs[index].clone(), kind },
                ));
            }
        }
        out
    }

    /// Neighbours reached by one move kind class only.
    pub fn neighbors_where(&self, keep: impl Fn(MoveKind) -> bool) -> Vec<(TriArc, MoveLabel)> {
        let mut out = Vec::with_capacity(9);
        for index in 0..3 {
            for kind in MoveKind::ALL.into_iter().filter(|k| keep(*k)) {
                out.push((
                    self.moved(index, kind).0,
                    MoveLabel { arc: self.arcs[index].clone(), kind },
                ));
            }
        }
        out
    }

    /// Image under the endomorphism `a -> images.0`, `b -> images.1`.
    ///
    /// The result is re-validated, so a non-automorphism fails here.
    pub fn substitute(&self, images: (&FreeWord, &FreeWord)) -> Result<TriArc, TriArcError> {
        let [x, y, z] = self.arcs.clone().map(|a| a.canon().substitute(images));
        TriArc::new(x, y, z)
    }
}

impl fmt::Display for TriArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.arcs[0], self.arcs[1], self.arcs[2])
    }
}

impl FromStr for TriArc {
    type Err = TriArcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(',').collect();
        if parts.len() != 3 {
            return Err(TriArcError::WrongArity(s.to_string()));
        }
        let mut words = Vec::with_capacity(3);
        for p in parts {
            words.push(p.trim().parse::<FreeWord>()?);
        }
        let [w1, w2, w3]: [FreeWord; 3] = words.try_into().expect("three words");
        TriArc::new(w1, w2, w3)
    }
}
