//! Property tests for the exact-arithmetic invariants.

use dimdata::lattice::{AmbientSpace, Weight};
use dimdata::lp::{LpKind, MultiPoly, Monomial};
use dimdata::rat::q;
use dimdata::roots::{RootSystem, TypeLabel};
use dimdata::weyl::{self, SymmetrySpec};
use proptest::prelude::*;
use std::sync::Arc;

fn rational() -> impl Strategy<Value = dimdata::Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| dimdata::rat::qr(n, d))
}

fn weight(dim: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(rational(), dim).prop_map(Weight::new)
}

fn sparse_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u16..4, 0..4), rational()),
        0..6,
    )
    .prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (exps, c) in terms {
            p = &p + &MultiPoly::from_term(Monomial::from_exponents(exps), c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Reflection is an involution and an isometry on rational inputs.
    #[test]
    fn reflect_involution_and_isometry(
        lambda in weight(3),
        mu in weight(3),
        alpha in weight(3).prop_filter("nonzero", |w| !w.is_zero()),
    ) {
        let space = AmbientSpace::euclidean(3);
        let once = space.reflect(&lambda, &alpha).unwrap();
        let twice = space.reflect(&once, &alpha).unwrap();
        prop_assert_eq!(&twice, &lambda);
        let mu_r = space.reflect(&mu, &alpha).unwrap();
        prop_assert_eq!(
            space.pairing(&once, &mu_r).unwrap(),
            space.pairing(&lambda, &mu).unwrap()
        );
    }

    /// σ is an involutive ring map.
    #[test]
    fn sigma_involution(p in sparse_poly(), r in sparse_poly()) {
        prop_assert_eq!(p.sigma().sigma(), p.clone());
        let prod = &p * &r;
        prop_assert_eq!(prod.sigma(), &p.sigma() * &r.sigma());
    }

    /// Ring distributivity for the sparse polynomials.
    #[test]
    fn poly_distributivity(a in sparse_poly(), b in sparse_poly(), c in sparse_poly()) {
        let left = &(&a + &b) * &c;
        let right = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(left, right);
    }

    /// The dominant representative is idempotent and stays in the orbit:
    /// replaying the reflection word sends the input to the representative.
    #[test]
    fn dominant_rep_word_replay(coords in prop::collection::vec(-8i64..=8, 4)) {
        let f4 = RootSystem::build(TypeLabel::parse("F4").unwrap()).unwrap();
        let lambda = Weight::new(coords.iter().map(|&c| q(c)).collect());
        let (rep, word) = weyl::dominant_rep_with_word(&f4, &lambda);
        prop_assert_eq!(weyl::dominant_rep(&f4, &lambda), rep.clone());
        prop_assert_eq!(weyl::dominant_rep(&f4, &rep), rep.clone());
        let mut v = lambda;
        for i in word {
            v = f4.space.reflect(&v, &f4.simple_roots()[i]).unwrap();
        }
        prop_assert_eq!(v, rep);
    }

    /// Canonical representatives are constant along reflection orbits.
    #[test]
    fn canonical_rep_orbit_constant(coords in prop::collection::vec(-6i64..=6, 4), root_idx in 0usize..24) {
        let d4 = RootSystem::build(TypeLabel::parse("D4").unwrap()).unwrap();
        let spec = SymmetrySpec::aut(Arc::clone(&d4)).unwrap();
        let lambda = Weight::new(coords.iter().map(|&c| q(c)).collect());
        let alpha = d4.root(root_idx as u32);
        let reflected = d4.space.reflect(&lambda, alpha).unwrap();
        prop_assert_eq!(
            weyl::canonical_rep(&spec, &lambda),
            weyl::canonical_rep(&spec, &reflected)
        );
    }

    /// The determinant polynomials are σ-symmetric in the documented pattern
    /// for arbitrary small sizes.
    #[test]
    fn lp_poly_sigma_pattern(n in 1usize..=4) {
        prop_assert_eq!(lp_sigma_fixed(LpKind::A, n), true);
        prop_assert_eq!(lp_sigma_fixed(LpKind::C, n), true);
        prop_assert_eq!(lp_sigma_fixed(LpKind::D, n), true);
        prop_assert_eq!(lp_sigma_fixed(LpKind::B, n), false);
    }
}

fn lp_sigma_fixed(kind: LpKind, n: usize) -> bool {
    let p = dimdata::lp::lp_poly(kind, n);
    p.sigma() == p
}

/// Sign parity of a signed orbit is path independent: a BFS over any
/// generator order reproduces the same weight-to-sign map.
#[test]
fn signed_orbit_generator_order_independent() {
    let b3 = RootSystem::build(TypeLabel::parse("B3").unwrap()).unwrap();
    let full = b3.full_subsystem();
    let delta = dimdata::characters::half_sum(&full).unwrap();
    let orbit = weyl::signed_orbit(&delta, &full, 10_000).unwrap();
    // Reference BFS with reversed generator order.
    let simples: Vec<Weight> = full
        .simple_ids()
        .iter()
        .rev()
        .map(|&i| b3.root(i).clone())
        .collect();
    let mut seen: std::collections::HashMap<Weight, i8> = std::collections::HashMap::new();
    seen.insert(delta.clone(), 1);
    let mut queue = vec![delta];
    while let Some(w) = queue.pop() {
        let sign = seen[&w];
        for a in &simples {
            let img = b3.space.reflect(&w, a).unwrap();
            if !seen.contains_key(&img) {
                seen.insert(img.clone(), -sign);
                queue.push(img);
            }
        }
    }
    assert_eq!(orbit.len(), seen.len());
    for el in orbit {
        assert_eq!(seen[&el.weight], el.sign);
    }
}

/// An outer automorphism stabilizing Φ fixes the character `F_{Φ,W_Ψ}`.
#[test]
fn outer_stabilizer_fixes_character() {
    let d4 = RootSystem::build(TypeLabel::parse("D4").unwrap()).unwrap();
    let sym = SymmetrySpec::weyl(Arc::clone(&d4));
    let flip = weyl::diagram_automorphisms(&d4)
        .into_iter()
        .find(|g| {
            // the flip swapping the last two simple roots
            g.apply(&d4.simple_roots()[0]) == d4.simple_roots()[0]
                && g.apply(&d4.simple_roots()[2]) == d4.simple_roots()[3]
        })
        .unwrap();
    // D_2 = <e1-e2, e1+e2> is stable under the flip (it only moves e_4).
    let phi = dimdata::subsystems::named_subsystem(&d4, "D2").unwrap();
    let stable: Vec<Weight> = phi.roots().map(|r| flip.apply(r)).collect();
    let mut sorted = stable.clone();
    sorted.sort();
    let mut original: Vec<Weight> = phi.roots().cloned().collect();
    original.sort();
    assert_eq!(sorted, original, "flip stabilizes the subsystem");
    let f = dimdata::characters::character_f(&phi, &sym, 10_000).unwrap();
    assert_eq!(f.map_keys(&flip).terms, f.terms);
}
