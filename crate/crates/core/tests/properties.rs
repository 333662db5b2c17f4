use num_traits::Zero;
use proptest::prelude::*;
use proptest::sample::Index;

use multitree::algebra::{Polynomial, Rational, Var};
use multitree::bijection::{classify, classify_and_apply, phi_unitype, MarkedTree};
use multitree::cactus::{cactus_phi, cactus_psi, enumerate_cacti, in_marked_class, Cactus};
use multitree::enumerate::{enumerate_trees, enumerate_unrooted};
use multitree::formulas::{count_by_edge_types, count_by_indegree_vector};
use multitree::model::TreeJson;
use multitree::{Bounds, Profile, RootedMultitypeTree, VertexId};

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec((1u32..=3, 1u32..=3), 0..3), -5i64..=5);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (powers, c) in terms {
            let mut t = Polynomial::from_int(c);
            for (v, e) in powers {
                t = t * Polynomial::var(Var::Plain(v)).pow(e);
            }
            p = p + t;
        }
        p
    })
}

fn profile(max_d: usize, max_n: u32) -> impl Strategy<Value = Profile> {
    prop::collection::vec(1..=max_n, 1..=max_d).prop_map(|c| Profile::new(c).unwrap())
}

/// A uniformly chosen tree of a small random profile.
fn tree() -> impl Strategy<Value = RootedMultitypeTree> {
    (profile(3, 3), any::<Index>(), any::<Index>())
        .prop_filter("at most six vertices", |(p, _, _)| p.num_vertices() <= 6)
        .prop_map(|(p, root, pick)| {
            let rho = root.index(p.d()) as u32 + 1;
            let trees: Vec<_> = enumerate_trees(&p, rho, &Bounds::default()).unwrap().collect();
            trees[pick.index(trees.len())].clone()
        })
}

fn cactus() -> impl Strategy<Value = Cactus> {
    let profiles = [vec![2, 2], vec![3, 1], vec![2, 3], vec![3, 2], vec![1, 1, 1], vec![2, 2, 1]];
    (prop::sample::select(profiles.to_vec()), any::<Index>()).prop_map(|(counts, pick)| {
        let all = enumerate_cacti(&Profile::new(counts).unwrap(), &Bounds::default()).unwrap();
        all[pick.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.clone() + q.clone(), q.clone() + p.clone());
        prop_assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
        prop_assert_eq!((p.clone() * q.clone()) * r.clone(), p.clone() * (q.clone() * r.clone()));
        prop_assert_eq!(p.clone() * (q.clone() + r.clone()), p.clone() * q.clone() + p.clone() * r.clone());
        prop_assert!((p.clone() - p.clone()).is_zero());
        prop_assert_eq!(p.clone() * Polynomial::one(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), a in -3i64..=3, b in -3i64..=3, c in 1i64..=4) {
        let at = |v: Var| match v {
            Var::Plain(1) => Rational::from_integer(a.into()),
            Var::Plain(2) => Rational::new(b.into(), c.into()),
            _ => Rational::from_integer(2.into()),
        };
        prop_assert_eq!((p.clone() * q.clone()).evaluate(at), p.evaluate(at) * q.evaluate(at));
        prop_assert_eq!((p.clone() + q.clone()).evaluate(at), p.evaluate(at) + q.evaluate(at));
    }

    #[test]
    fn polynomial_records_round_trip(p in poly()) {
        let back = Polynomial::from_records(&p.to_records()).unwrap();
        prop_assert_eq!(&back, &p);
        let text = serde_json::to_string(&p.to_records()).unwrap();
        let parsed: Vec<multitree::algebra::TermRecord> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(Polynomial::from_records(&parsed).unwrap(), p);
    }

    #[test]
    fn tree_json_round_trip(t in tree()) {
        prop_assert!(t.validate().is_ok());
        prop_assert_eq!(TreeJson::from(&t).to_tree().unwrap(), t);
    }

    #[test]
    fn every_tree_is_counted(t in tree()) {
        let gamma = t.indegree_vector();
        let rho = t.root_type();
        prop_assert!(gamma.is_consistent(rho));
        prop_assert!(count_by_indegree_vector(&gamma, rho).unwrap() >= 1u32.into());
        prop_assert!(count_by_edge_types(&gamma.edge_type_counts(), t.profile(), rho).unwrap() >= 1u32.into());
    }

    #[test]
    fn marked_move_round_trips(t in tree(), edge in any::<Index>(), target in any::<Index>()) {
        let edges = t.edges();
        prop_assume!(!edges.is_empty());
        let (child, parent) = edges[edge.index(edges.len())];
        let (s, tt, i) = (child.ty, parent.ty, parent.label);
        let n_t = t.profile().count(tt);
        prop_assume!(n_t >= 2);
        let j = (1..=n_t).filter(|&j| j != i).nth(target.index(n_t as usize - 1)).unwrap();
        let m = MarkedTree::from_edge(t.clone(), (child, parent)).unwrap();
        let case = classify(&m, s, tt, i, j).unwrap();
        let img = classify_and_apply(&m, s, tt, i, j).unwrap();
        prop_assert!(img.tree().validate().is_ok());
        prop_assert_eq!(img.marked_parent(), VertexId::new(tt, j));
        prop_assert_eq!(classify(&img, s, tt, j, i).unwrap(), case);
        let (g, h) = (m.tree().indegree_vector(), img.tree().indegree_vector());
        prop_assert_eq!(h.get(s, VertexId::new(tt, i)) + 1, g.get(s, VertexId::new(tt, i)));
        prop_assert_eq!(h.get(s, VertexId::new(tt, j)), g.get(s, VertexId::new(tt, j)) + 1);
        prop_assert_eq!(classify_and_apply(&img, s, tt, j, i).unwrap(), m);
    }

    #[test]
    fn unitype_move_round_trips(n in 2usize..=7, pick in any::<Index>(), edge in any::<Index>(), flip: bool, j in 1u32..=7) {
        let trees: Vec<_> = enumerate_unrooted(n, &Bounds::default()).unwrap().collect();
        let tree = &trees[pick.index(trees.len())];
        let (a, b) = tree.edges()[edge.index(tree.edges().len())];
        let i = if flip { b } else { a };
        prop_assume!(j as usize <= n);
        if let Ok((img, mark)) = phi_unitype(tree, (a, b), i, j) {
            let (deg, img_deg) = (tree.degrees(), img.degrees());
            prop_assert_eq!(img_deg[i as usize - 1] + 1, deg[i as usize - 1]);
            prop_assert_eq!(img_deg[j as usize - 1], deg[j as usize - 1] + 1);
            let (back, _) = phi_unitype(&img, mark, j, i).unwrap();
            prop_assert_eq!(&back, tree);
        }
    }

    #[test]
    fn cactus_phi_round_trips(c in cactus(), s in 1u32..=3, j in 1u32..=3, k in 1u32..=3) {
        prop_assume!(s as usize <= c.d() && j != k);
        let n_s = c.profile().count(s);
        prop_assume!(j <= n_s && k <= n_s);
        if let Ok(img) = cactus_phi(&c, s, j, k) {
            prop_assert!(img.validate().is_ok());
            let (g, h) = (c.degree_vector(), img.degree_vector());
            prop_assert_eq!(h.get(VertexId::new(s, j)) + 1, g.get(VertexId::new(s, j)));
            prop_assert_eq!(h.get(VertexId::new(s, k)), g.get(VertexId::new(s, k)) + 1);
            prop_assert_eq!(cactus_phi(&img, s, k, j).unwrap(), c);
        }
    }

    #[test]
    fn cactus_psi_lands_in_the_bigger_profile(c in cactus(), r in 1u32..=3, s in 1u32..=3) {
        prop_assume!(r != s && (r as usize) <= c.d() && (s as usize) <= c.d());
        if in_marked_class(&c, r, s) {
            let img = cactus_psi(&c, r, s).unwrap();
            prop_assert!(img.validate().is_ok());
            prop_assert_eq!(img.size(), c.size());
            prop_assert_eq!(img.profile().count(r) + 1, c.profile().count(r));
            prop_assert_eq!(img.profile().count(s), c.profile().count(s) + 1);
        } else {
            prop_assert!(cactus_psi(&c, r, s).is_err());
        }
    }
}

#[test]
fn zero_polynomial_is_additive_identity() {
    let p = Polynomial::var(Var::Root(1)) + Polynomial::from_int(3);
    assert_eq!(p.clone() + Polynomial::zero(), p);
    assert!(Polynomial::zero().constant_term().is_zero());
}
