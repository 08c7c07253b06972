//! Breadth-first exploration of the tri-pants graph.
//!
//! The graph is infinite and only ever materialized locally: balls around a
//! base vertex, bidirectional searches between two vertices, and
//! constructive paths that follow the dual-tree geodesic between
//! projections and then close the gap inside the final fiber.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::farey::{FareyTriangle, Slope};
use crate::triarc::{MoveKind, MoveLabel, TriArc, TriArcError};

pub const DEFAULT_RADIUS_CAP: usize = 6;

/// Largest search radius accepted by [`exact_distance`].
pub const DISTANCE_RADIUS_CAP: usize = 2 * DEFAULT_RADIUS_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExploreError {
    #[error("radius {requested} exceeds the cap of {cap}")]
    RadiusCap { requested: usize, cap: usize },
    #[error("fiber search gave up after {expansions} expansions")]
    FiberSearchExhausted { expansions: usize },
    #[error("path replay failed: {0}")]
    Replay(String),
    #[error(transparent)]
    TriArc(#[from] TriArcError),
}

impl ExploreError {
    /// Variant name, used in command-line diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            ExploreError::RadiusCap { .. } => "RadiusCap",
            ExploreError::FiberSearchExhausted { .. } => "FiberSearchExhausted",
            ExploreError::Replay(_) => "Replay",
            ExploreError::TriArc(e) => e.name(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EdgeFilter {
    #[default]
    All,
    BigOnly,
    SmallOnly,
}

impl EdgeFilter {
    pub fn keeps(self, kind: MoveKind) -> bool {
        match self {
            EdgeFilter::All => true,
            EdgeFilter::BigOnly => kind.is_big(),
            EdgeFilter::SmallOnly => !kind.is_big(),
        }
    }

    pub fn neighbors(self, t: &TriArc) -> Vec<(TriArc, MoveLabel)> {
        match self {
            EdgeFilter::All => t.neighbors(),
            _ => t.neighbors_where(|k| self.keeps(k)),
        }
    }
}

impl FromStr for EdgeFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(EdgeFilter::All),
            "big" => Ok(EdgeFilter::BigOnly),
            "small" => Ok(EdgeFilter::SmallOnly),
            other => Err(format!("unknown filter {other:?} (expected all, big or small)")),
        }
    }
}

/// An edge of a ball, by vertex index. `label` is the move from `from`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallEdge {
    pub from: usize,
    pub to: usize,
    pub label: MoveLabel,
}

/// The induced subgraph on all vertices within `radius` of `base`.
///
/// Vertices are stored level by level, each level in canonical order, so
/// index 0 is the base. Each undirected edge is stored once, from its
/// lower-index endpoint.
#[derive(Debug, Clone)]
pub struct ExplorationBall {
    base: TriArc,
    radius: usize,
    filter: EdgeFilter,
    vertices: Vec<(TriArc, usize)>,
    index: HashMap<TriArc, usize>,
    edges: Vec<BallEdge>,
}

impl ExplorationBall {
    pub fn explore(base: &TriArc, radius: usize, filter: EdgeFilter) -> Result<Self, ExploreError> {
        ExplorationBall::explore_with_cap(base, radius, filter, DEFAULT_RADIUS_CAP)
    }

    pub fn explore_with_cap(
        base: &TriArc,
        radius: usize,
        filter: EdgeFilter,
        cap: usize,
    ) -> Result<Self, ExploreError> {
        if radius > cap {
            return Err(ExploreError::RadiusCap { requested: radius, cap });
        }
        let mut vertices = vec![(base.clone(), 0)];
        let mut index = HashMap::from([(base.clone(), 0)]);
        let mut level = vec![base.clone()];
        for depth in 1..=radius {
            let expanded: Vec<Vec<(TriArc, MoveLabel)>> =
                level.par_iter().map(|t| filter.neighbors(t)).collect();
            let fresh: BTreeSet<TriArc> = expanded
                .into_iter()
                .flatten()
                .map(|(t, _)| t)
                .filter(|t| !index.contains_key(t))
                .collect();
            level = fresh.into_iter().collect();
            for t in &level {
                index.insert(t.clone(), vertices.len());
                vertices.push((t.clone(), depth));
            }
        }

        let edges: Vec<BallEdge> = vertices
            .par_iter()
            .enumerate()
            .map(|(from, (t, _))| {
                filter
                    .neighbors(t)
                    .into_iter()
                    .filter_map(|(n, label)| match index.get(&n) {
                        Some(&to) if to > from => Some(BallEdge { from, to, label }),
                        _ => None,
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();

        Ok(ExplorationBall { base: base.clone(), radius, filter, vertices, index, edges })
    }

    pub fn base(&self) -> &TriArc {
        &self.base
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn filter(&self) -> EdgeFilter {
        self.filter
    }

    /// `(vertex, depth)` in storage order.
    pub fn vertices(&self) -> &[(TriArc, usize)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[BallEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, t: &TriArc) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn depth_of(&self, t: &TriArc) -> Option<usize> {
        self.index_of(t).map(|i| self.vertices[i].1)
    }

    pub fn vertex(&self, i: usize) -> &TriArc {
        &self.vertices[i].0
    }

    /// Undirected adjacency lists by vertex index.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Graphviz rendering. Vertex labels are tri-arc encodings.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tripants {\n");
        for (i, (t, depth)) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{t}\", depth={depth}];\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  v{} -- v{} [kind={}, arc=\"{}\"];\n",
                e.from, e.to, e.label.kind, e.label.arc
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Graph distance if it is at most `max_radius`, by bidirectional BFS.
pub fn exact_distance(
    t1: &TriArc,
    t2: &TriArc,
    max_radius: usize,
) -> Result<Option<usize>, ExploreError> {
    if max_radius > DISTANCE_RADIUS_CAP {
        return Err(ExploreError::RadiusCap { requested: max_radius, cap: DISTANCE_RADIUS_CAP });
    }
    let found = bidirectional(t1, t2, EdgeFilter::All, max_radius, usize::MAX).unwrap_or(None);
    Ok(found.map(|p| p.len()))
}

/// Distance using big flips only, if at most `max_radius`.
pub fn fiber_distance(t1: &TriArc, t2: &TriArc, max_radius: usize) -> Option<usize> {
    bidirectional(t1, t2, EdgeFilter::BigOnly, max_radius, usize::MAX)
        .ok()
        .flatten()
        .map(|p| p.len())
}

/// Dual-tree distance between projections; never exceeds the graph distance.
pub fn lower_bound_distance(t1: &TriArc, t2: &TriArc) -> usize {
    FareyTriangle::project(t1).dual_distance(&FareyTriangle::project(t2))
}

/// Search depth and parent link for each visited vertex.
type Parents = HashMap<TriArc, (usize, Option<(TriArc, MoveLabel)>)>;

/// Shortest move sequence from `from` to `to` under `filter`.
///
/// `Ok(None)` when no path of length `<= max_len` exists; `Err(n)` when
/// the expansion budget ran out after `n` vertex expansions.
fn bidirectional(
    from: &TriArc,
    to: &TriArc,
    filter: EdgeFilter,
    max_len: usize,
    budget: usize,
) -> Result<Option<Vec<MoveLabel>>, usize> {
    if from == to {
        return Ok(Some(Vec::new()));
    }
    // Each side records, per vertex, the vertex it was reached from and
    // the move that was taken *from the parent*.
    let mut fwd: Parents = HashMap::from([(from.clone(), (0, None))]);
    let mut bwd: Parents = HashMap::from([(to.clone(), (0, None))]);
    let mut fwd_level = vec![from.clone()];
    let mut bwd_level = vec![to.clone()];
    let (mut fwd_depth, mut bwd_depth) = (0usize, 0usize);
    let mut expansions = 0usize;

    while fwd_depth + bwd_depth < max_len {
        if fwd_level.is_empty() || bwd_level.is_empty() {
            return Ok(None);
        }
        let forward = fwd_level.len() <= bwd_level.len();
        let (level, seen, other) = if forward {
            (&mut fwd_level, &mut fwd, &bwd)
        } else {
            (&mut bwd_level, &mut bwd, &fwd)
        };
        let depth = if forward { fwd_depth + 1 } else { bwd_depth + 1 };
        let mut next = BTreeSet::new();
        // Meeting vertices can sit at different depths on the other side;
        // keep the one giving the shortest total.
        let mut meet: Option<(usize, TriArc)> = None;
        for t in level.iter() {
            expansions += 1;
            if expansions > budget {
                return Err(expansions - 1);
            }
            for (n, label) in filter.neighbors(t) {
                if seen.contains_key(&n) {
                    continue;
                }
                seen.insert(n.clone(), (depth, Some((t.clone(), label))));
                if let Some((d, _)) = other.get(&n) {
                    if meet.as_ref().is_none_or(|(best, _)| d < best) {
                        meet = Some((*d, n.clone()));
                    }
                }
                next.insert(n);
            }
        }
        *level = next.into_iter().collect();
        if forward {
            fwd_depth += 1;
        } else {
            bwd_depth += 1;
        }
        if let Some((_, m)) = meet {
            return Ok(Some(splice(&fwd, &bwd, &m)));
        }
    }
    Ok(None)
}

/// Joins the two half-paths at `meet` into one forward move list.
fn splice(fwd: &Parents, bwd: &Parents, meet: &TriArc) -> Vec<MoveLabel> {
    let mut moves = Vec::new();
    let mut cur = meet.clone();
    while let Some((_, Some((parent, label)))) = fwd.get(&cur) {
        moves.push(label.clone());
        cur = parent.clone();
    }
    moves.reverse();
    // Backward parents point towards `to`; each stored label is the move
    // from the parent, so the forward move is its reverse.
    let mut cur = meet.clone();
    while let Some((_, Some((parent, _)))) = bwd.get(&cur) {
        moves.push(reverse_move(&cur, parent));
        cur = parent.clone();
    }
    moves
}

/// The move taking `from` to its neighbour `to`.
fn reverse_move(from: &TriArc, to: &TriArc) -> MoveLabel {
    from.neighbors()
        .into_iter()
        .find(|(n, _)| n == to)
        .map(|(_, label)| label)
        .expect("flip moves are symmetric")
}

/// Simple cycles of length `3..=max_len` through the ball's base.
///
/// Each cycle starts at the base and is listed in the direction whose
/// second vertex has the smaller index.
pub fn find_cycles(ball: &ExplorationBall, max_len: usize) -> Vec<Vec<TriArc>> {
    let adj = ball.adjacency();
    let depth: Vec<usize> = ball.vertices.iter().map(|(_, d)| *d).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut path = vec![0usize];
    let mut on_path = vec![false; adj.len()];
    on_path[0] = true;

    fn dfs(
        adj: &[Vec<usize>],
        depth: &[usize],
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        let last = *path.last().expect("non-empty path");
        for &n in &adj[last] {
            if n == 0 {
                if path.len() >= 3 && path[1] < last {
                    found.insert(path.clone());
                }
                continue;
            }
            // Closing the cycle from `n` needs at least depth[n] more edges.
            if on_path[n] || path.len() + depth[n] > max_len {
                continue;
            }
            path.push(n);
            on_path[n] = true;
            dfs(adj, depth, max_len, path, on_path, found);
            on_path[n] = false;
            path.pop();
        }
    }

    if max_len >= 3 && !adj.is_empty() {
        dfs(&adj, &depth, max_len, &mut path, &mut on_path, &mut found);
    }
    let mut cycles: Vec<Vec<usize>> = found.into_iter().collect();
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cycles
        .into_iter()
        .map(|c| c.into_iter().map(|i| ball.vertex(i).clone()).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathReport {
    pub start: TriArc,
    pub end: TriArc,
    pub moves: Vec<MoveLabel>,
}

impl PathReport {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every vertex along the path, starting with `start`.
    pub fn replay(&self) -> Result<Vec<TriArc>, TriArcError> {
        let mut cur = self.start.clone();
        let mut out = vec![cur.clone()];
        for m in &self.moves {
            cur = cur.apply(m)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn verify(&self) -> bool {
        matches!(self.replay(), Ok(vs) if vs.last() == Some(&self.end))
    }
}

impl fmt::Display for PathReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "length\t{}", self.len())?;
        let vertices = self.replay().map_err(|_| fmt::Error)?;
        writeln!(f, "start\t{}", self.start)?;
        for (m, v) in self.moves.iter().zip(vertices.iter().skip(1)) {
            writeln!(f, "{m}\t{v}")?;
        }
        Ok(())
    }
}

/// A move sequence from `t1` to `t2`, not necessarily shortest.
///
/// Small flips carry `t1` along the dual-tree geodesic to the fiber of
/// `t2`; a big-flip-only bidirectional search of at most `fiber_cap`
/// expansions then finishes inside that fiber.
pub fn find_path(t1: &TriArc, t2: &TriArc, fiber_cap: usize) -> Result<PathReport, ExploreError> {
    let (cur, mut moves) = walk_to_fiber(t1, &FareyTriangle::project(t2));
    let tail = bidirectional(&cur, t2, EdgeFilter::BigOnly, usize::MAX, fiber_cap)
        .map_err(|expansions| ExploreError::FiberSearchExhausted { expansions })?
        .ok_or(ExploreError::FiberSearchExhausted { expansions: fiber_cap })?;
    moves.extend(tail);

    let report = PathReport { start: t1.clone(), end: t2.clone(), moves };
    if !report.verify() {
        return Err(ExploreError::Replay(format!("{} -> {}", t1, t2)));
    }
    Ok(report)
}

/// Small flips carrying `start` along the dual geodesic into the fiber over
/// `target`. Returns the endpoint and the moves taken.
pub fn walk_to_fiber(start: &TriArc, target: &FareyTriangle) -> (TriArc, Vec<MoveLabel>) {
    let mut cur = start.clone();
    let mut moves = Vec::new();
    for next in FareyTriangle::project(start).dual_path(target).into_iter().skip(1) {
        let dropped = cur
            .arcs()
            .iter()
            .find(|a| !next.contains(&Slope::of_word(a.canon()).expect("primitive arc")))
            .expect("adjacent triangles differ in one vertex")
            .clone();
        let label = MoveLabel { arc: dropped, kind: MoveKind::SmallFirst };
        cur = cur.apply(&label).expect("arc taken from the current tri-arc");
        debug_assert_eq!(FareyTriangle::project(&cur), next);
        moves.push(label);
    }
    (cur, moves)
}

/// Some tri-arc projecting onto `target`.
pub fn lift(target: &FareyTriangle) -> TriArc {
    walk_to_fiber(&TriArc::base(), target).0
}

/// The vertex set of a ball.
pub fn vertex_set(ball: &ExplorationBall) -> HashSet<TriArc> {
    ball.vertices.iter().map(|(t, _)| t.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pushmap::{PushGen, PushWord};

    fn tri(s: &str) -> TriArc {
        s.parse().unwrap()
    }

    #[test]
    fn ball_radius_zero_and_one() {
        let base = TriArc::base();
        let b0 = ExplorationBall::explore(&base, 0, EdgeFilter::All).unwrap();
        assert_eq!((b0.len(), b0.edges().len()), (1, 0));
        let b1 = ExplorationBall::explore(&base, 1, EdgeFilter::All).unwrap();
        assert_eq!(b1.len(), 10);
        let among_neighbors = b1.edges().iter().filter(|e| e.from != 0).count();
        assert!(among_neighbors >= 3, "{among_neighbors}");
        assert_eq!(b1.edges().iter().filter(|e| e.from == 0).count(), 9);
    }

    #[test]
    fn radius_cap_is_enforced() {
        let err = ExplorationBall::explore(&TriArc::base(), 7, EdgeFilter::All).unwrap_err();
        assert_eq!(err, ExploreError::RadiusCap { requested: 7, cap: 6 });
        assert!(exact_distance(&TriArc::base(), &TriArc::base(), 13).is_err());
    }

    #[test]
    fn ball_is_deterministic_and_induced() {
        let base = TriArc::base();
        let b = ExplorationBall::explore(&base, 2, EdgeFilter::All).unwrap();
        let again = ExplorationBall::explore(&base, 2, EdgeFilter::All).unwrap();
        assert_eq!(b.vertices(), again.vertices());
        assert_eq!(b.edges(), again.edges());
        let set = vertex_set(&b);
        let stored: HashSet<(usize, usize)> = b.edges().iter().map(|e| (e.from, e.to)).collect();
        for (i, (t, _)) in b.vertices().iter().enumerate() {
            for (n, _) in t.neighbors() {
                if set.contains(&n) {
                    let j = b.index_of(&n).unwrap();
                    assert!(stored.contains(&(i.min(j), i.max(j))));
                }
            }
        }
    }

    #[test]
    fn exact_distance_examples() {
        let base = TriArc::base();
        assert_eq!(exact_distance(&base, &base, 3).unwrap(), Some(0));
        assert_eq!(exact_distance(&base, &tri("a,b,ba"), 2).unwrap(), Some(1));
        // Two small flips on the same arc are one big flip apart.
        assert_eq!(exact_distance(&tri("a,b,aB"), &tri("a,b,Ab"), 2).unwrap(), Some(1));
        let far = PushWord::new(vec![PushGen::AlongG1; 3]).apply(&base);
        assert_eq!(exact_distance(&base, &far, 1).unwrap(), None);
    }

    #[test]
    fn lower_bound_examples() {
        let base = TriArc::base();
        assert_eq!(lower_bound_distance(&base, &tri("a,b,ba")), 0);
        assert_eq!(lower_bound_distance(&base, &tri("a,b,aB")), 1);
    }

    #[test]
    fn three_cycle_through_base() {
        let base = TriArc::base();
        let ball = ExplorationBall::explore(&base, 2, EdgeFilter::All).unwrap();
        let cycles = find_cycles(&ball, 3);
        let want = [base.clone(), tri("a,b,aB"), tri("a,b,Ab")];
        assert!(cycles.iter().any(|c| {
            c.len() == 3 && want.iter().all(|w| c.contains(w))
        }));
        assert!(cycles.iter().all(|c| c.len() == 3 && c[0] == base));
        assert!(find_cycles(&ball, 2).is_empty());
    }

    #[test]
    fn path_to_push_image_is_two_big_flips() {
        let base = TriArc::base();
        let target = PushWord::new(vec![PushGen::AlongG1]).apply(&base);
        let report = find_path(&base, &target, 1000).unwrap();
        assert_eq!(report.len(), 2);
        assert!(report.moves.iter().all(|m| m.kind.is_big()));
        assert!(report.verify());
        assert!(find_path(&base, &base, 0).unwrap().is_empty());
    }

    #[test]
    fn fiber_cap_exhaustion_is_reported() {
        let base = TriArc::base();
        let target = PushWord::new(vec![PushGen::AlongG1; 4]).apply(&base);
        assert!(matches!(
            find_path(&base, &target, 3),
            Err(ExploreError::FiberSearchExhausted { .. })
        ));
    }

    #[test]
    fn dot_output_shape() {
        let ball = ExplorationBall::explore(&TriArc::base(), 1, EdgeFilter::BigOnly).unwrap();
        let dot = ball.to_dot();
        assert!(dot.starts_with("graph tripants {"));
        assert!(dot.contains("label=\"a,b,ab\""));
        assert_eq!(dot.matches("kind=big").count(), 3);
    }
}
