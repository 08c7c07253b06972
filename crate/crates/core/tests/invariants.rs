use std::collections::{HashMap, HashSet, VecDeque};

use proptest::prelude::*;

use tripants::explorer::{exact_distance, fiber_distance, find_cycles, lift, lower_bound_distance, vertex_set};
use tripants::freegroup::Letter;
use tripants::{
    ArcClass, Automorphism, EdgeFilter, ExplorationBall, FareyTriangle, FreeWord, MoveKind, PushGen,
    PushWord, TriArc,
};

fn walk(choices: &[usize]) -> TriArc {
    choices.iter().fold(TriArc::base(), |t, c| {
        let ns = t.neighbors();
        ns[c % ns.len()].0.clone()
    })
}

fn reachable(max_steps: usize) -> impl Strategy<Value = TriArc> {
    prop::collection::vec(0usize..9, 0..=max_steps).prop_map(|c| walk(&c))
}

fn push_word(max_len: usize) -> impl Strategy<Value = PushWord> {
    prop::collection::vec(prop::sample::select(PushGen::ALL.to_vec()), 0..=max_len).prop_map(PushWord::new)
}

fn ball(r: usize, filter: EdgeFilter) -> ExplorationBall {
    ExplorationBall::explore(&TriArc::base(), r, filter).unwrap()
}

/// Oriented products `x y` of the other two arcs landing in the class of `c`.
fn decompositions(t: &TriArc, c: &ArcClass) -> Vec<(FreeWord, FreeWord)> {
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_is_unique_up_to_inversion(t in reachable(10)) {
        for c in t.arcs() {
            let found = decompositions(&t, c);
            prop_assert_eq!(found.len(), 2);
            let (x, y) = &found[0];
            prop_assert!(found.contains(&(y.inverse(), x.inverse())));
            let (dx, dy) = t.decompose(c).unwrap();
            prop_assert_eq!(&dx.concat(&dy), c.canon());
        }
    }

    #[test]
    fn small_flips_are_big_flip_related(t in reachable(10)) {
        for c in t.arcs() {
            let (s1, s2) = t.small_flips(c).unwrap();
            prop_assert_ne!(&s1, &s2);
            let fresh = s1.arcs().iter().find(|a| !t.contains(a)).unwrap().clone();
            prop_assert_eq!(s1.big_flip(&fresh).unwrap().0, s2);
        }
    }

    #[test]
    fn arcs_pairwise_form_bases(t in reachable(12)) {
        let a = t.arcs();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            prop_assert!(FreeWord::is_basis(a[i].canon(), a[j].canon()));
        }
    }

    #[test]
    fn flips_stay_valid_and_round_trip_text(t in reachable(10)) {
        for (n, label) in t.neighbors() {
            prop_assert_eq!(n.to_string().parse::<TriArc>().unwrap(), n.clone());
            prop_assert_eq!(label.to_string().parse::<tripants::MoveLabel>().unwrap(), label.clone());
            prop_assert_eq!(t.apply(&label).unwrap(), n);
        }
    }

    #[test]
    fn big_flip_is_an_involution(t in reachable(15)) {
        for c in t.arcs() {
            let (u, fresh) = t.big_flip(c).unwrap();
            prop_assert_eq!(u.big_flip(&fresh).unwrap().0, t.clone());
        }
    }

    #[test]
    fn projection_respects_move_kinds(t in reachable(10)) {
        let p = FareyTriangle::project(&t);
        for (n, label) in t.neighbors() {
            let q = FareyTriangle::project(&n);
            if label.kind == MoveKind::Big {
                prop_assert_eq!(&q, &p);
            } else {
                prop_assert!(p.dual_neighbors().contains(&q));
            }
        }
    }

    #[test]
    fn push_composition(t1 in push_word(6), t2 in push_word(6)) {
        prop_assert_eq!(
            t1.then(&t2).automorphism(),
            t2.automorphism().compose(&t1.automorphism())
        );
        prop_assert_eq!(t1.then(&t1.inverse()).automorphism(), Automorphism::identity());
    }

    #[test]
    fn push_kernel_of_forget(theta in push_word(12)) {
        let auto = theta.automorphism();
        prop_assert!(auto.forget_check());
        prop_assert!(FreeWord::is_basis(auto.image_g1(), auto.image_g2()));
    }

    #[test]
    fn distance_symmetric_and_bounded_below(t1 in reachable(3), t2 in reachable(3)) {
        let d = exact_distance(&t1, &t2, 8).unwrap();
        prop_assert_eq!(d, exact_distance(&t2, &t1, 8).unwrap());
        let d = d.expect("walks of length <= 3 meet within 6");
        prop_assert!(d >= lower_bound_distance(&t1, &t2));
        prop_assert_eq!(d == 0, t1 == t2);
    }

    #[test]
    fn pushes_preserve_conjugacy_classes(
        w in prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..20),
        theta in push_word(6),
    ) {
        let w = FreeWord::reduce(w);
        prop_assert!(theta.automorphism().apply(&w).is_conjugate(&w));
    }
}

#[test]
fn pushes_preserve_fibers_on_small_ball() {
    let b = ball(2, EdgeFilter::All);
    let mut thetas = vec![PushWord::default()];
    let mut layer = vec![PushWord::default()];
    for _ in 0..6 {
        layer = layer.iter().flat_map(|w| PushGen::ALL.map(|g| w.then(&PushWord::new(vec![g])))).collect();
        thetas.extend(layer.iter().cloned());
    }
    let autos: Vec<Automorphism> = thetas.iter().map(PushWord::automorphism).collect();
    for (t, _) in b.vertices() {
        let p = FareyTriangle::project(t);
        for a in &autos {
            assert_eq!(FareyTriangle::project(&a.apply_to_triarc(t)), p);
        }
    }
}

#[test]
fn generator_pushes_in_own_frame_are_two_big_flips() {
    for (t, _) in ball(2, EdgeFilter::All).vertices() {
        for g in PushGen::ALL {
            assert_eq!(fiber_distance(t, &g.apply_local(t), 4), Some(2), "{g:?} on {t}");
        }
    }
}

#[test]
fn fixed_frame_pushes_stay_in_fiber_at_even_distance() {
    for (t, _) in ball(2, EdgeFilter::All).vertices() {
        for g in PushGen::ALL {
            let image = PushWord::new(vec![g]).apply(t);
            let d = fiber_distance(t, &image, 8).expect("same fiber");
            assert!(d.is_multiple_of(2) && d >= 2, "{g:?} on {t}: {d}");
        }
    }
}

fn dual_ball(radius: usize) -> HashSet<FareyTriangle> {
    let base = FareyTriangle::base();
    let mut seen = HashMap::from([(base.clone(), 0)]);
    let mut queue = VecDeque::from([base]);
    while let Some(t) = queue.pop_front() {
        let d = seen[&t];
        if d < radius {
            for n in t.dual_neighbors() {
                if !seen.contains_key(&n) {
                    seen.insert(n.clone(), d + 1);
                    queue.push_back(n);
                }
            }
        }
    }
    seen.into_keys().collect()
}

#[test]
fn projection_is_locally_surjective() {
    for r in 0..=4 {
        let images: HashSet<FareyTriangle> =
            ball(r, EdgeFilter::All).vertices().iter().map(|(t, _)| FareyTriangle::project(t)).collect();
        let near = dual_ball(r);
        assert!(near.is_subset(&images), "radius {r}");
        for t in &near {
            assert_eq!(FareyTriangle::project(&lift(t)), *t);
        }
    }
}

#[test]
fn balls_grow_monotonically_and_nest() {
    let balls: Vec<ExplorationBall> = (0..=4).map(|r| ball(r, EdgeFilter::All)).collect();
    let sizes: Vec<usize> = balls.iter().map(ExplorationBall::len).collect();
    assert_eq!(sizes[..2], [1, 10]);
    assert_eq!(sizes[4], 1012);
    for w in balls.windows(2) {
        assert!(w[0].len() < w[1].len());
        assert!(vertex_set(&w[0]).is_subset(&vertex_set(&w[1])));
    }
    assert_eq!(balls[4].edges().len(), 2700);
}

#[test]
fn big_only_ball_has_no_cycles() {
    let b = ball(5, EdgeFilter::BigOnly);
    assert_eq!(b.len(), 94);
    assert!(find_cycles(&b, 11).is_empty());
    assert_eq!(b.edges().len(), b.len() - 1);
}
