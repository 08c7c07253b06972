//! Verification suites behind `tripants verify`.
//!
//! Each suite checks one group of structural properties at desk scale and
//! returns a [`Report`]. Randomized checks draw from a ChaCha stream seeded
//! by `--seed`, so reports are reproducible.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tripants::explorer::{self, lift, EdgeFilter, ExplorationBall};
use tripants::freegroup::Letter;
use tripants::{
    ArcClass, Automorphism, FareyTriangle, FreeWord, MoveKind, PushGen, PushWord, Slope, TriArc,
};

pub const SUITES: &[&str] = &[
    "freegroup",
    "triarc",
    "degree",
    "farey",
    "projection",
    "push",
    "fiber",
    "explorer",
    "worked",
    "cycles",
    "diameter",
];

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub radius: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), checks: Vec::new() }
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn render(&self) -> String {
        let mut s = format!("suite\t{}\n", self.suite);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status}\t{}\t{}", c.name, c.detail);
        }
        let _ = writeln!(s, "summary\t{} passed\t{} failed", self.passed(), self.failed());
        s
    }
}

/// Runs one suite by name, or every suite for `all`.
pub fn run(suite: &str, config: &VerifyConfig) -> Result<Vec<Report>, String> {
    if suite == "all" {
        return Ok(SUITES.iter().map(|s| run_one(s, config).expect("known suite")).collect());
    }
    run_one(suite, config)
        .map(|r| vec![r])
        .ok_or_else(|| format!("unknown suite {suite:?}; expected one of {} or all", SUITES.join(", ")))
}

fn run_one(suite: &str, config: &VerifyConfig) -> Option<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let r = config.radius;
    Some(match suite {
        "freegroup" => freegroup(&mut rng),
        "triarc" => triarc(r, &mut rng),
        "degree" => degree(r),
        "farey" => farey(r, &mut rng),
        "projection" => projection(r),
        "push" => push(r, &mut rng),
        "fiber" => fiber(r),
        "explorer" => explorer_suite(r, &mut rng),
        "worked" => worked(),
        "cycles" => cycles(),
        "diameter" => diameter(),
        _ => return None,
    })
}

fn random_letters(rng: &mut ChaCha8Rng, max: usize) -> Vec<Letter> {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect()
}

fn random_word(rng: &mut ChaCha8Rng, max: usize) -> FreeWord {
    FreeWord::reduce(random_letters(rng, max))
}

/// Endpoint of a random walk of `steps` moves from the base tri-arc.
pub fn random_reachable(rng: &mut ChaCha8Rng, steps: usize) -> TriArc {
    let mut t = TriArc::base();
    for _ in 0..steps {
        let mut ns = t.neighbors();
        t = ns.swap_remove(rng.gen_range(0..ns.len())).0;
    }
    t
}

fn random_push_word(rng: &mut ChaCha8Rng, max: usize) -> PushWord {
    let n = rng.gen_range(0..=max);
    PushWord::new((0..n).map(|_| PushGen::ALL[rng.gen_range(0..4)]).collect())
}

fn all_words(max_len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity()];
    let mut layer = vec![FreeWord::identity()];
    for _ in 0..max_len {
        let next: Vec<FreeWord> = layer
            .iter()
            .flat_map(|w| Letter::ALL.iter().map(move |l| w.concat(&FreeWord::from_letter(*l))))
            .filter(|w| !w.is_empty() && out.iter().all(|o| o != w))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn ball(r: usize, filter: EdgeFilter) -> ExplorationBall {
    ExplorationBall::explore(&TriArc::base(), r, filter).expect("radius within cap")
}

fn freegroup(rng: &mut ChaCha8Rng) -> Report {
    let mut rep = Report::new("freegroup");

    let ok = (0..1000).all(|_| {
        let once = FreeWord::reduce(random_letters(rng, 40));
        FreeWord::reduce(once.letters().to_vec()) == once
    });
    rep.check("reduce-idempotent", ok, "1000 random sequences");

    let ok = (0..1000).all(|_| {
        let (u, v) = (random_word(rng, 20), random_word(rng, 20));
        u.inverse().inverse() == u && u.concat(&v).inverse() == v.inverse().concat(&u.inverse())
    });
    rep.check("invert-antihomomorphic-involution", ok, "1000 random pairs");

    let ok = (0..10_000).all(|_| {
        let (u, v, w) = (random_word(rng, 15), random_word(rng, 15), random_word(rng, 15));
        u.concat(&v).concat(&w) == u.concat(&v.concat(&w))
    });
    rep.check("concat-associative", ok, "10000 random triples");

    let words = all_words(6);
    let mut mismatches = 0;
    for u in words.iter().filter(|w| w.len() <= 3) {
        let class: HashSet<FreeWord> = words
            .iter()
            .map(|g| g.concat(u).concat(&g.inverse()))
            .filter(|c| c.len() <= 6)
            .collect();
        mismatches += words.iter().filter(|v| u.is_conjugate(v) != class.contains(*v)).count();
    }
    rep.check(
        "conjugacy-brute-force",
        mismatches == 0,
        format!("words <= 3 against words <= 6, conjugators <= 6; {mismatches} mismatches"),
    );

    let ok = (0..1000).all(|_| {
        let (u, v) = (random_word(rng, 20), random_word(rng, 20));
        u.concat(&v).abelianize() == u.abelianize() + v.abelianize()
    });
    rep.check("abelianize-homomorphism", ok, "1000 random pairs");

    let short: Vec<&FreeWord> = words.iter().filter(|w| w.len() <= 3).collect();
    let mut bases = 0;
    let ok = short.iter().all(|u| {
        short.iter().all(|v| {
            if !FreeWord::is_basis(u, v) {
                return true;
            }
            bases += 1;
            u.abelianize().det(v.abelianize()).abs() == 1
        })
    });
    rep.check("basis-unimodular", ok, format!("{bases} bases among pairs of words <= 3"));

    let ok = (0..200).all(|_| {
        let auto = random_push_word(rng, 6).automorphism();
        let steps = rng.gen_range(0..8);
        let (x, y) = (0..steps).fold((FreeWord::a(), FreeWord::b()), |(x, y), _| {
            match rng.gen_range(0..4) {
                0 => (x.concat(&y), y),
                1 => {
                    let y = y.concat(&x);
                    (x, y)
                }
                2 => (x.inverse(), y),
                _ => (y, x),
            }
        });
        FreeWord::is_basis(&auto.apply(&x), &auto.apply(&y))
    });
    rep.check("substitute-preserves-basis", ok, "200 random bases");
    rep
}

/// Every `(x, y)` among the sixteen oriented products with `x y = c^{+-1}`.
fn decomposition_matches(t: &TriArc, c: &ArcClass) -> Vec<(FreeWord, FreeWord)> {
    let others: Vec<&ArcClass> = t.arcs().iter().filter(|a| *a != c).collect();
    let mut found = Vec::new();
    for (p, q) in [(others[0], others[1]), (others[1], others[0])] {
        for x in p.orientations() {
            for y in q.orientations() {
                if c.contains(&x.concat(&y)) {
                    found.push((x.clone(), y));
                }
            }
        }
    }
    found
}

fn triarc(r: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut rep = Report::new("triarc");
    let b = ball(r, EdgeFilter::All);
    let n = b.len();

    let ok = b.vertices().iter().all(|(t, _)| {
        t.arcs().iter().all(|c| {
            let m = decomposition_matches(t, c);
            m.len() == 2 && m.contains(&(m[0].1.inverse(), m[0].0.inverse()))
        })
    });
    rep.check("decomposition-multiplicity", ok, format!("{n} vertices of the radius-{r} ball"));

    let involutive = |t: &TriArc| {
        t.arcs().iter().all(|c| {
            let (u, new_arc) = t.big_flip(c).expect("own arc");
            u.big_flip(&new_arc).expect("new arc").0 == *t
        })
    };
    let ok = b.vertices().iter().all(|(t, _)| involutive(t))
        && (0..1000).all(|_| {
            let steps = rng.gen_range(0..8);
            involutive(&random_reachable(rng, steps))
        });
    rep.check("big-flip-involution", ok, "ball plus 1000 random walks");

    let base = TriArc::base();
    let arc = |s: &str| s.parse::<ArcClass>().expect("arc literal");
    let ab_then_b = base.big_flip(&arc("ab")).unwrap().0.big_flip(&arc("b")).unwrap().0;
    let b_then_ab = base.big_flip(&arc("b")).unwrap().0.big_flip(&arc("ab")).unwrap().0;
    rep.check(
        "big-flips-do-not-commute",
        ab_then_b != b_then_ab,
        format!("{ab_then_b} vs {b_then_ab}"),
    );

    let ok = b.vertices().iter().all(|(t, _)| {
        t.arcs().iter().all(|c| {
            let (s1, s2) = t.small_flips(c).expect("own arc");
            let new_arc = s1.arcs().iter().find(|a| !t.contains(a)).expect("one new arc");
            s1 != s2 && s1.big_flip(new_arc).expect("own arc").0 == s2
        })
    });
    rep.check("small-flip-pairing", ok, format!("{n} vertices"));

    let ok = b.vertices().iter().all(|(t, _)| {
        let a = t.arcs();
        (0..3).all(|i| FreeWord::is_basis(a[i].canon(), a[(i + 1) % 3].canon()))
    });
    rep.check("basis-preservation", ok, format!("{n} vertices, all arc pairs"));

    let ok = b.vertices().iter().all(|(t, _)| {
        t.neighbors()
            .iter()
            .all(|(m, _)| matches!(TriArc::from_arcs(m.arcs().clone()), Ok(x) if x == *m))
    });
    rep.check("flip-closure", ok, format!("neighbours of {n} vertices revalidate"));
    rep
}

fn degree(r: usize) -> Report {
    let mut rep = Report::new("degree");
    let b = ball(r, EdgeFilter::All);
    let adj = b.adjacency();
    let interior: Vec<usize> = (0..b.len()).filter(|i| b.vertices()[*i].1 < r).collect();
    let ok = interior.iter().all(|&i| {
        let t = b.vertex(i);
        let distinct: HashSet<TriArc> = t.neighbors().into_iter().map(|(n, _)| n).collect();
        distinct.len() == 9 && adj[i].len() == 9 && !distinct.contains(t)
    });
    rep.check("degree-nine", ok, format!("{} interior vertices of the radius-{r} ball", interior.len()));

    let ok = interior.iter().all(|&i| {
        let t = b.vertex(i);
        t.neighbors().iter().all(|(n, label)| {
            n.neighbors().iter().any(|(m, back)| m == t && back.kind.is_big() == label.kind.is_big())
        })
    });
    rep.check("moves-reversible", ok, "each move undone by a move of the same class");
    rep
}

/// Dual triangles within `radius` of `center`, with depth.
pub fn dual_ball(center: &FareyTriangle, radius: usize) -> HashMap<FareyTriangle, usize> {
    dual_ball_within(center, radius, None)
}

/// Like [`dual_ball`], never leaving `within` when given.
fn dual_ball_within(
    center: &FareyTriangle,
    radius: usize,
    within: Option<&HashMap<FareyTriangle, usize>>,
) -> HashMap<FareyTriangle, usize> {
    let mut depth = HashMap::from([(center.clone(), 0)]);
    let mut queue = VecDeque::from([center.clone()]);
    while let Some(t) = queue.pop_front() {
        let d = depth[&t];
        if d == radius {
            continue;
        }
        for n in t.dual_neighbors() {
            if depth.contains_key(&n) || within.is_some_and(|w| !w.contains_key(&n)) {
                continue;
            }
            depth.insert(n.clone(), d + 1);
            queue.push_back(n);
        }
    }
    depth
}

fn dual_bfs(from: &FareyTriangle, to: &FareyTriangle, limit: usize) -> Option<usize> {
    let ball = dual_ball(from, limit);
    ball.get(to).copied()
}

fn farey(r: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut rep = Report::new("farey");
    let base = FareyTriangle::base();
    let radius = (2 * r).min(8);
    let dual = dual_ball(&base, radius);
    let triangles: Vec<&FareyTriangle> = dual.keys().collect();

    let mut mismatches = 0;
    for _ in 0..50 {
        let s = triangles[rng.gen_range(0..triangles.len())];
        // A ball in a tree is a subtree, so geodesics between its members stay inside.
        let from_s = dual_ball_within(s, 2 * radius, Some(&dual));
        for t in &triangles {
            if s.dual_distance(t) != from_s[*t] {
                mismatches += 1;
            }
        }
    }
    rep.check(
        "dual-distance-matches-bfs",
        mismatches == 0,
        format!("50 sources x {} targets within radius {radius}", triangles.len()),
    );

    let ok = (0..500).all(|_| {
        let pick = |rng: &mut ChaCha8Rng| triangles[rng.gen_range(0..triangles.len())];
        let (x, y, z) = (pick(rng), pick(rng), pick(rng));
        let (dxy, dyz, dxz) = (x.dual_distance(y), y.dual_distance(z), x.dual_distance(z));
        dxy == y.dual_distance(x) && x.dual_distance(x) == 0 && dxz <= dxy + dyz && (dxy == 0) == (x == y)
    });
    rep.check("dual-distance-metric", ok, "500 sampled triples");

    let ok = triangles.iter().all(|t| {
        base.dual_path(t).iter().enumerate().all(|(i, step)| dual[step] == i)
    });
    rep.check("walk-strictly-approaches", ok, "every step lowers the BFS distance by one");

    let b = ball(r, EdgeFilter::All);
    let ok = b.vertices().iter().all(|(t, _)| {
        let [s1, s2, s3] = t.arcs().clone().map(|a| Slope::of_word(a.canon()).expect("primitive"));
        FareyTriangle::new(s1, s2, s3).is_ok()
    });
    rep.check("projection-is-a-triangle", ok, format!("{} vertices", b.len()));

    let images: HashSet<FareyTriangle> =
        b.vertices().iter().map(|(t, _)| FareyTriangle::project(t)).collect();
    let local = dual_ball(&base, r);
    let ok = local.keys().all(|t| images.contains(t));
    rep.check(
        "local-surjectivity",
        ok,
        format!("{} dual vertices within radius {r} all hit", local.len()),
    );

    let ok = local.keys().all(|t| FareyTriangle::project(&lift(t)) == *t);
    rep.check("lift-projects-back", ok, format!("{} triangles", local.len()));
    rep
}

fn projection(r: usize) -> Report {
    let mut rep = Report::new("projection");
    let b = ball(r, EdgeFilter::All);
    let (mut big, mut small) = (0, 0);
    let mut ok_big = true;
    let mut ok_small = true;
    for e in b.edges() {
        let (p, q) = (FareyTriangle::project(b.vertex(e.from)), FareyTriangle::project(b.vertex(e.to)));
        if e.label.kind == MoveKind::Big {
            big += 1;
            ok_big &= p == q;
        } else {
            small += 1;
            let shared = p.vertices().iter().filter(|s| q.contains(s)).count();
            ok_small &= shared == 2 && p.dual_neighbors().contains(&q);
        }
    }
    rep.check("big-flip-collapses", ok_big, format!("{big} big edges"));
    rep.check("small-flip-is-dual-edge", ok_small, format!("{small} small edges"));
    rep
}

fn push(r: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut rep = Report::new("push");
    let ok = (0..1000).all(|_| random_push_word(rng, 12).automorphism().forget_check());
    rep.check("forget-kills-push", ok, "1000 random push words of length <= 12");

    let ok = (0..1000).all(|_| {
        let (t1, t2) = (random_push_word(rng, 6), random_push_word(rng, 6));
        t1.then(&t2).automorphism() == t2.automorphism().compose(&t1.automorphism())
    });
    rep.check("composition-order", ok, "Push(t1 t2) = Push(t2) o Push(t1), 1000 pairs");

    let ok = (0..1000).all(|_| {
        let t = random_push_word(rng, 12);
        t.then(&t.inverse()).automorphism() == Automorphism::identity()
            && t.inverse().then(&t).automorphism() == Automorphism::identity()
    });
    rep.check("inverse-push-is-identity", ok, "1000 push words");

    let ok = (0..1000).all(|_| {
        let a = random_push_word(rng, 12).automorphism();
        FreeWord::is_basis(a.image_g1(), a.image_g2())
    });
    rep.check("images-are-bases", ok, "1000 push words");

    let small_ball = ball(r.min(2), EdgeFilter::All);
    let mut thetas = vec![PushWord::default()];
    let mut layer = vec![PushWord::default()];
    for _ in 0..6 {
        layer = layer
            .iter()
            .flat_map(|w| PushGen::ALL.map(|g| w.then(&PushWord::new(vec![g]))))
            .collect();
        thetas.extend(layer.iter().cloned());
    }
    let autos: Vec<Automorphism> = thetas.iter().map(|t| t.automorphism()).collect();
    let ok = small_ball.vertices().iter().all(|(t, _)| {
        let p = FareyTriangle::project(t);
        autos.iter().all(|a| FareyTriangle::project(&a.apply_to_triarc(t)) == p)
    });
    rep.check(
        "push-preserves-fiber",
        ok,
        format!("{} push words of length <= 6 on {} vertices", thetas.len(), small_ball.len()),
    );

    let mut ok_local = true;
    let mut ok_global = true;
    for (t, _) in small_ball.vertices() {
        for g in PushGen::ALL {
            ok_local &= explorer::fiber_distance(t, &g.apply_local(t), 4) == Some(2);
            let image = PushWord::new(vec![g]).apply(t);
            ok_global &= matches!(explorer::fiber_distance(t, &image, 8), Some(d) if d % 2 == 0);
        }
    }
    rep.check("generator-push-two-big-flips", ok_local, "push read in each tri-arc's own frame");
    rep.check("push-even-big-flips", ok_global, "fixed-frame generator pushes, fiber distance even");
    rep
}

fn fiber(r: usize) -> Report {
    let mut rep = Report::new("fiber");
    let radius = (r + 2).min(6);
    let b = ball(radius, EdgeFilter::BigOnly);
    let adj = b.adjacency();
    let ok = (0..b.len())
        .filter(|i| b.vertices()[*i].1 < radius)
        .all(|i| adj[i].len() == 3);
    rep.check("fiber-three-regular", ok, format!("big-only ball of radius {radius}, {} vertices", b.len()));

    let p = FareyTriangle::project(b.base());
    let ok = b.vertices().iter().all(|(t, _)| FareyTriangle::project(t) == p);
    rep.check("fiber-single-projection", ok, format!("all project to {p}"));

    let cycles = explorer::find_cycles(&b, 2 * radius + 1);
    rep.check(
        "fiber-ball-acyclic",
        cycles.is_empty(),
        format!("experiment: {} cycles through the base", cycles.len()),
    );
    rep
}

fn explorer_suite(r: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut rep = Report::new("explorer");
    let base = TriArc::base();
    let b = ball(r, EdgeFilter::All);

    let ok = b
        .vertices()
        .iter()
        .all(|(t, depth)| explorer::lower_bound_distance(&base, t) <= *depth);
    rep.check("lower-bound-below-depth", ok, format!("{} vertices", b.len()));

    let sizes: Vec<usize> = (0..=r.min(4)).map(|k| ball(k, EdgeFilter::All).len()).collect();
    let ok = sizes.windows(2).all(|w| w[0] < w[1]);
    rep.check("monotone-growth", ok, format!("sizes {sizes:?}"));

    let mut ok_sym = true;
    let mut ok_lb = true;
    for _ in 0..200 {
        let (s1, s2) = (rng.gen_range(0..4), rng.gen_range(0..4));
        let (t1, t2) = (random_reachable(rng, s1), random_reachable(rng, s2));
        let d = explorer::exact_distance(&t1, &t2, 8).expect("within cap");
        ok_sym &= d == explorer::exact_distance(&t2, &t1, 8).expect("within cap");
        ok_lb &= matches!(d, Some(d) if d >= explorer::lower_bound_distance(&t1, &t2));
    }
    rep.check("distance-symmetric", ok_sym, "200 random pairs");
    rep.check("distance-above-lower-bound", ok_lb, "200 random pairs");

    let ok = b.vertices().iter().all(|(t, depth)| {
        matches!(explorer::find_path(&base, t, 10_000), Ok(p) if p.verify() && p.len() >= *depth)
    });
    rep.check("path-soundness", ok, format!("base to all {} ball vertices", b.len()));
    rep
}

fn worked() -> Report {
    let mut rep = Report::new("worked");
    let base = TriArc::base();
    let tri = |s: &str| s.parse::<TriArc>().expect("tri-arc literal");
    let arc = |s: &str| s.parse::<ArcClass>().expect("arc literal");

    let flipped = base.big_flip(&arc("ab")).unwrap().0;
    rep.check("big-flip-on-c", flipped == tri("a,b,ba"), flipped.to_string());

    let one = base.big_flip(&arc("ab")).unwrap().0.big_flip(&arc("b")).unwrap().0;
    let two = base.big_flip(&arc("b")).unwrap().0.big_flip(&arc("ab")).unwrap().0;
    rep.check(
        "non-commutation-triples",
        one == tri("ba,Aba,a") && two == tri("aabA,abA,a") && one != two,
        format!("{one} / {two}"),
    );

    let pushed = PushWord::new(vec![PushGen::AlongG1]).apply(&base);
    rep.check("push-along-a", pushed == tri("a,abA,aabA"), pushed.to_string());

    let ns: HashSet<TriArc> = base.neighbors().into_iter().map(|(n, _)| n).collect();
    let listed = [
        "a,b,ba", "a,b,aB", "a,b,Ab", "a,abA,ab", "a,aba,ab", "a,aab,ab", "Bab,b,ab", "abb,b,ab",
        "bab,b,ab",
    ];
    rep.check(
        "nine-neighbours-of-base",
        ns.len() == 9 && listed.iter().all(|s| ns.contains(&tri(s))),
        "listed neighbours, up to orientation",
    );
    rep
}

fn cycles() -> Report {
    let mut rep = Report::new("cycles");
    let b = ball(2, EdgeFilter::All);
    let found = explorer::find_cycles(&b, 3);
    let base = TriArc::base();
    let s1: TriArc = "a,b,aB".parse().unwrap();
    let s2: TriArc = "a,b,Ab".parse().unwrap();
    let hit = found.iter().any(|c| c.len() == 3 && c.contains(&s1) && c.contains(&s2) && c[0] == base);
    rep.check("small-big-small-triangle", hit, format!("{} 3-cycles through the base", found.len()));
    rep.check("no-2-cycles", explorer::find_cycles(&b, 2).is_empty(), "simple graph");
    rep
}

/// `{x, y, xy}` after `k` steps of `(x, y) -> (y, x y)` from `(a, b)`.
pub fn fibonacci_triarc(k: usize) -> TriArc {
    let (mut x, mut y) = (FreeWord::a(), FreeWord::b());
    for _ in 0..k {
        let xy = x.concat(&y);
        x = y;
        y = xy;
    }
    let xy = x.concat(&y);
    TriArc::new(x, y, xy).expect("Nielsen basis")
}

fn diameter() -> Report {
    let mut rep = Report::new("diameter");
    let base = TriArc::base();
    for n in [5usize, 10, 15, 20] {
        let t = fibonacci_triarc(n);
        let lb = explorer::lower_bound_distance(&base, &t);
        rep.check(&format!("lower-bound-at-least-{n}"), lb >= n, format!("bound {lb}"));
    }
    let t = fibonacci_triarc(9);
    let has = FareyTriangle::project(&t).contains(&Slope::new(55, 89).unwrap());
    let lb = explorer::lower_bound_distance(&base, &t);
    rep.check("slope-55-89", has && lb >= 9, format!("bound {lb}"));
    let oracle = dual_bfs(&FareyTriangle::base(), &FareyTriangle::project(&fibonacci_triarc(6)), 8);
    rep.check("bfs-cross-check", oracle == Some(6), format!("{oracle:?}"));
    rep
}
