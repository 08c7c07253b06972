//! Slopes, Farey triangles and the dual tree.
//!
//! A slope `p/q` is kept reduced with `q > 0`, or as `1/0` for infinity.
//! Two slopes span a Farey edge when `|p q' - p' q| = 1`; three pairwise
//! adjacent slopes form a triangle, which is a vertex of the dual tree.
//! All arithmetic is exact on big integers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::freegroup::FreeWord;
use crate::triarc::TriArc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    #[error("abelianization ({p}, {q}) is not a primitive vector")]
    NotPrimitive { p: String, q: String },
    #[error("slopes {0} do not form a Farey triangle")]
    NotATriangle(String),
    #[error("edge {edge} is not an edge of triangle {triangle}")]
    EdgeNotInTriangle { edge: String, triangle: String },
    #[error("{0} is not a Farey edge")]
    NotAnEdge(String),
    #[error("source and target are the same triangle")]
    SameTriangle,
    #[error("cannot parse slope {0:?}")]
    Parse(String),
}

impl FareyError {
    /// Variant name, used in command-line diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            FareyError::NotPrimitive { .. } => "NotPrimitive",
            FareyError::NotATriangle(_) => "NotATriangle",
            FareyError::EdgeNotInTriangle { .. } => "EdgeNotInTriangle",
            FareyError::NotAnEdge(_) => "NotAnEdge",
            FareyError::SameTriangle => "SameTriangle",
            FareyError::Parse(_) => "Parse",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    pub fn infinity() -> Self {
        Slope { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn integer(n: i64) -> Self {
        Slope { p: BigInt::from(n), q: BigInt::one() }
    }

    /// Normalizes any nonzero homogeneous pair `(p, q)` to a slope.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, FareyError> {
        let (p, q) = (p.into(), q.into());
        let g = p.gcd(&q);
        if g.is_zero() {
            return Err(FareyError::NotPrimitive { p: p.to_string(), q: q.to_string() });
        }
        Ok(Slope::normalized(p / &g, q / g))
    }

    /// Like [`Slope::new`] but requires `gcd(p, q) = 1`.
    pub fn primitive(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, FareyError> {
        let (p, q) = (p.into(), q.into());
        if !p.gcd(&q).is_one() {
            return Err(FareyError::NotPrimitive { p: p.to_string(), q: q.to_string() });
        }
        Ok(Slope::normalized(p, q))
    }

    fn normalized(p: BigInt, q: BigInt) -> Self {
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            Slope { p: -p, q: -q }
        } else {
            Slope { p, q }
        }
    }

    /// Slope of a word's abelianization.
    pub fn of_word(w: &FreeWord) -> Result<Self, FareyError> {
        let img = w.abelianize();
        Slope::primitive(img.p, img.q)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    /// `p q' - p' q` on the normalized representatives.
    pub fn det(&self, other: &Slope) -> BigInt {
        &self.p * &other.q - &other.p * &self.q
    }

    pub fn is_farey_neighbor(&self, other: &Slope) -> bool {
        self.det(other).abs().is_one()
    }

    fn mediant(&self, other: &Slope) -> Slope {
        Slope::normalized(&self.p + &other.p, &self.q + &other.q)
    }

    fn difference(&self, other: &Slope) -> Slope {
        Slope::normalized(&self.p - &other.p, &self.q - &other.q)
    }
}

/// Infinity first, then finite slopes by value.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    /// Accepts `inf`, `p/q` and bare integers. Fractions are reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Slope::infinity());
        }
        let bad = || FareyError::Parse(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (
                p.trim().parse::<BigInt>().map_err(|_| bad())?,
                q.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        Slope::new(p, q).map_err(|_| bad())
    }
}

/// Strict cyclic order of three distinct points of the projective line,
/// given `x < y`, `y < z` and `z < x` in the direction order.
///
/// Slopes are embedded as directions in `[0, pi)` via the vector `(p, q)`;
/// `det > 0` means the first direction comes first.
fn cyclically_ordered(xy: bool, yz: bool, zx: bool) -> bool {
    (xy && yz) || (yz && zx) || (zx && xy)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FareyEdge {
    endpoints: [Slope; 2],
}

impl FareyEdge {
    pub fn new(s1: Slope, s2: Slope) -> Result<Self, FareyError> {
        if !s1.is_farey_neighbor(&s2) {
            return Err(FareyError::NotAnEdge(format!("{s1},{s2}")));
        }
        let mut endpoints = [s1, s2];
        endpoints.sort();
        Ok(FareyEdge { endpoints })
    }

    pub fn endpoints(&self) -> &[Slope; 2] {
        &self.endpoints
    }
}

impl fmt::Display for FareyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.endpoints[0], self.endpoints[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FareyTriangle {
    vertices: [Slope; 3],
}

impl FareyTriangle {
    /// `{inf, 0/1, 1/1}`.
    pub fn base() -> Self {
        FareyTriangle {
            vertices: [Slope::infinity(), Slope::integer(0), Slope::integer(1)],
        }
    }

    pub fn new(s1: Slope, s2: Slope, s3: Slope) -> Result<Self, FareyError> {
        let ok = s1.is_farey_neighbor(&s2) && s2.is_farey_neighbor(&s3) && s1.is_farey_neighbor(&s3);
        if !ok {
            return Err(FareyError::NotATriangle(format!("{s1},{s2},{s3}")));
        }
        let mut vertices = [s1, s2, s3];
        vertices.sort();
        Ok(FareyTriangle { vertices })
    }

    /// Projection of a tri-arc: the slopes of its three arcs.
    pub fn project(t: &TriArc) -> Self {
        let [s1, s2, s3] = t
            .arcs()
            .clone()
            .map(|a| Slope::of_word(a.canon()).expect("arcs of a tri-arc are primitive"));
        FareyTriangle::new(s1, s2, s3).expect("tri-arc arcs pairwise form bases")
    }

    pub fn vertices(&self) -> &[Slope; 3] {
        &self.vertices
    }

    pub fn contains(&self, s: &Slope) -> bool {
        self.vertices.contains(s)
    }

    /// Edges in vertex-index order: opposite vertex 0, 1, 2.
    pub fn edges(&self) -> [FareyEdge; 3] {
        let v = &self.vertices;
        let edge = |i: usize, j: usize| FareyEdge { endpoints: [v[i].clone(), v[j].clone()] };
        [edge(1, 2), edge(0, 2), edge(0, 1)]
    }

    fn opposite(&self, e: &FareyEdge) -> Result<&Slope, FareyError> {
        let [u, v] = &e.endpoints;
        if !(self.contains(u) && self.contains(v)) {
            return Err(FareyError::EdgeNotInTriangle {
                edge: e.to_string(),
                triangle: self.to_string(),
            });
        }
        Ok(self.vertices.iter().find(|s| *s != u && *s != v).expect("three distinct vertices"))
    }

    /// The other triangle sharing `e`.
    pub fn neighbor_across(&self, e: &FareyEdge) -> Result<FareyTriangle, FareyError> {
        self.opposite(e)?;
        let k = (0..3).find(|k| !e.endpoints.contains(&self.vertices[*k])).expect("checked");
        Ok(self.neighbor_opposite(k))
    }

    /// The other triangle sharing the edge opposite vertex `k`.
    fn neighbor_opposite(&self, k: usize) -> FareyTriangle {
        let v = &self.vertices;
        let (u, w, x) = (&v[(k + 1) % 3], &v[k], &v[(k + 2) % 3]);
        let mediant = u.mediant(x);
        let third = if mediant == *w { u.difference(x) } else { mediant };
        let mut vertices = [u.clone(), x.clone(), third];
        vertices.sort();
        FareyTriangle { vertices }
    }

    pub fn dual_neighbors(&self) -> [FareyTriangle; 3] {
        [0, 1, 2].map(|k| self.neighbor_opposite(k))
    }

    /// The edge of `self` whose far side contains `target`.
    pub fn separating_edge(&self, target: &FareyTriangle) -> Result<FareyEdge, FareyError> {
        let k = self.separating_index(target).ok_or(FareyError::SameTriangle)?;
        Ok(self.edges()[k].clone())
    }

    /// Index of the vertex opposite the separating edge.
    fn separating_index(&self, target: &FareyTriangle) -> Option<usize> {
        let outside = target.vertices.iter().find(|s| !self.contains(s))?;
        let v = &self.vertices;
        let before = |x: &Slope, y: &Slope| x.det(y).is_positive();
        let to_outside = [0, 1, 2].map(|i| before(&v[i], outside));
        // Sorted vertices run against the direction order, so for i < j the
        // later vertex comes first unless the earlier one is infinity, and
        // the opposite vertex lies between v[i] and v[j] unless k = 1.
        (0..3).find(|&k| {
            let (i, j) = if k == 0 { (1, 2) } else { (0, 3 - k) };
            let ji = !v[i].is_infinity();
            let across = cyclically_ordered(to_outside[i], !to_outside[j], ji);
            across == (k == 1)
        })
    }

    /// Distance in the dual tree, by walking across separating edges.
    pub fn dual_distance(&self, target: &FareyTriangle) -> usize {
        let mut steps = 0;
        let mut cur = self.clone();
        while let Some(k) = cur.separating_index(target) {
            cur = cur.neighbor_opposite(k);
            steps += 1;
        }
        steps
    }

    /// Triangles along the dual-tree geodesic, both ends included.
    pub fn dual_path(&self, target: &FareyTriangle) -> Vec<FareyTriangle> {
        let mut path = vec![self.clone()];
        let mut cur = self.clone();
        while let Some(k) = cur.separating_index(target) {
            cur = cur.neighbor_opposite(k);
            path.push(cur.clone());
        }
        path
    }
}

impl fmt::Display for FareyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.vertices[0], self.vertices[1], self.vertices[2])
    }
}

impl FromStr for FareyTriangle {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(',').collect();
        if parts.len() != 3 {
            return Err(FareyError::Parse(s.to_string()));
        }
        FareyTriangle::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::word;
    use std::collections::{HashMap, VecDeque};

    fn slope(s: &str) -> Slope {
        s.parse().unwrap()
    }

    fn triangle(s: &str) -> FareyTriangle {
        s.parse().unwrap()
    }

    fn edge(a: &str, b: &str) -> FareyEdge {
        FareyEdge::new(slope(a), slope(b)).unwrap()
    }

    #[test]
    fn slope_normalization() {
        assert_eq!(Slope::new(-1, -2).unwrap().to_string(), "1/2");
        assert_eq!(Slope::new(1, -1).unwrap().to_string(), "-1/1");
        assert_eq!(Slope::new(-1, 0).unwrap(), Slope::infinity());
        assert_eq!(Slope::new(2, 4).unwrap(), slope("1/2"));
        assert!(Slope::new(0, 0).is_err());
        assert!(Slope::primitive(2, 4).is_err());
        assert_eq!(slope("inf").to_string(), "inf");
        assert_eq!(slope("-3").to_string(), "-3/1");
        assert!("x/2".parse::<Slope>().is_err());
        assert!("0/0".parse::<Slope>().is_err());
    }

    #[test]
    fn slope_of_examples() {
        assert_eq!(Slope::of_word(&word("a")).unwrap(), Slope::infinity());
        assert_eq!(Slope::of_word(&word("ab")).unwrap(), slope("1/1"));
        assert!(matches!(
            Slope::of_word(&word("abAB")),
            Err(FareyError::NotPrimitive { .. })
        ));
        assert!(Slope::of_word(&word("aa")).is_err());
        assert_eq!(Slope::of_word(&word("BA")).unwrap(), slope("1/1"));
    }

    #[test]
    fn farey_edge_examples() {
        assert!(slope("0/1").is_farey_neighbor(&Slope::infinity()));
        assert!(slope("1/3").is_farey_neighbor(&slope("1/2")));
        assert!(!slope("1/3").is_farey_neighbor(&slope("2/3")));
    }

    #[test]
    fn make_triangle_examples() {
        let t = FareyTriangle::new(slope("0"), slope("1"), Slope::infinity()).unwrap();
        assert_eq!(t, FareyTriangle::base());
        assert_eq!(t.to_string(), "inf,0/1,1/1");
        // det(1/2,1/3) = 2-3, det(1/3,2/5) = 5-6, det(1/2,2/5) = 5-4.
        assert!(FareyTriangle::new(slope("1/2"), slope("1/3"), slope("2/5")).is_ok());
        assert!(matches!(
            FareyTriangle::new(slope("0"), slope("1"), slope("2")),
            Err(FareyError::NotATriangle(_))
        ));
        assert!(FareyTriangle::new(slope("0"), slope("0"), slope("inf")).is_err());
    }

    #[test]
    fn project_examples() {
        assert_eq!(FareyTriangle::project(&TriArc::base()), FareyTriangle::base());
        let flipped: TriArc = "a,b,ba".parse().unwrap();
        assert_eq!(FareyTriangle::project(&flipped), FareyTriangle::base());
        let small: TriArc = "a,b,aB".parse().unwrap();
        assert_eq!(FareyTriangle::project(&small), triangle("inf,0/1,-1/1"));
    }

    #[test]
    fn neighbor_across_examples() {
        let base = FareyTriangle::base();
        let left = base.neighbor_across(&edge("0", "inf")).unwrap();
        assert_eq!(left, triangle("0,inf,-1"));
        let below = base.neighbor_across(&edge("0", "1")).unwrap();
        assert_eq!(below, triangle("0,1,1/2"));
        assert_eq!(left.neighbor_across(&edge("0", "inf")).unwrap(), base);
        assert!(matches!(
            base.neighbor_across(&edge("0", "-1")),
            Err(FareyError::EdgeNotInTriangle { .. })
        ));
    }

    #[test]
    fn dual_neighbors_of_base() {
        let base = FareyTriangle::base();
        let mut ns = base.dual_neighbors().to_vec();
        ns.sort();
        let mut expected = vec![triangle("0,inf,-1"), triangle("0,1,1/2"), triangle("1,inf,2")];
        expected.sort();
        assert_eq!(ns, expected);
        for n in &ns {
            assert!(n.dual_neighbors().contains(&base));
        }
    }

    #[test]
    fn separating_edge_examples() {
        let base = FareyTriangle::base();
        assert_eq!(base.separating_edge(&triangle("0,inf,-1")).unwrap(), edge("0", "inf"));
        assert_eq!(base.separating_edge(&triangle("1/2,1/3,2/5")).unwrap(), edge("0", "1"));
        assert_eq!(base.separating_edge(&triangle("1,inf,2")).unwrap(), edge("1", "inf"));
        assert_eq!(base.separating_edge(&base), Err(FareyError::SameTriangle));
    }

    /// Triangles within `radius` of `center`, with BFS depth.
    fn dual_ball(center: &FareyTriangle, radius: usize) -> HashMap<FareyTriangle, usize> {
        let mut depth = HashMap::from([(center.clone(), 0)]);
        let mut queue = VecDeque::from([center.clone()]);
        while let Some(t) = queue.pop_front() {
            let d = depth[&t];
            if d == radius {
                continue;
            }
            for n in t.dual_neighbors() {
                if !depth.contains_key(&n) {
                    depth.insert(n.clone(), d + 1);
                    queue.push_back(n);
                }
            }
        }
        depth
    }

    #[test]
    fn dual_distance_examples() {
        let base = FareyTriangle::base();
        assert_eq!(base.dual_distance(&base), 0);
        assert_eq!(base.dual_distance(&triangle("0,inf,-1")), 1);
        let far = triangle("1/2,1/3,2/5");
        assert_eq!(base.dual_distance(&far), 3);
        assert_eq!(
            base.dual_path(&far),
            vec![base.clone(), triangle("0,1,1/2"), triangle("0,1/2,1/3"), far.clone()]
        );
        assert_eq!(dual_ball(&base, 3)[&far], 3);
    }

    #[test]
    fn dual_ball_is_a_trivalent_tree() {
        // Sphere sizes 1, 3, 6, 12, ... confirm no identifications.
        let ball = dual_ball(&FareyTriangle::base(), 6);
        for r in 1..=6 {
            let n = ball.values().filter(|d| **d == r).count();
            assert_eq!(n, 3 << (r - 1));
        }
    }

    #[test]
    fn walk_strictly_approaches_target() {
        let base = FareyTriangle::base();
        let ball = dual_ball(&base, 6);
        for (t, d) in &ball {
            let path = base.dual_path(t);
            assert_eq!(path.len() - 1, *d);
            for (i, step) in path.iter().enumerate() {
                assert_eq!(ball[step], i);
            }
        }
    }
}
