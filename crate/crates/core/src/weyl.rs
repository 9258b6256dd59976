//! Orbit algorithms for finite reflection groups: dominant representatives,
//! signed orbits of regular vectors, symmetry groups between `W_Ψ` and
//! `Aut(Ψ)`, and permutation realizations of those groups on the roots.

use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::linalg::{self, Mat};
use crate::rat::Q;
use crate::roots::{Family, RootSystem, SubRootSystem, TypeLabel};
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// Default cap on the size of any explicitly enumerated orbit or group.
pub const DEFAULT_ORBIT_CAP: u64 = 10_000_000;

/// Default cap on the size of a fully materialized permutation group.
pub const DEFAULT_PERM_CAP: u64 = 400_000;

/// An exact linear isometry of the ambient space, `v ↦ M v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Isometry {
    pub matrix: Mat,
}

impl Isometry {
    pub fn identity(dim: usize) -> Self {
        Isometry {
            matrix: linalg::identity(dim),
        }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::new(linalg::mat_vec(&self.matrix, &w.coords))
    }

    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
        }
    }

    /// Check that the map permutes the roots of `psi` and preserves its form.
    pub fn normalizes(&self, psi: &RootSystem) -> bool {
        let g = psi.space.gram();
        let mt = linalg::transpose(&self.matrix);
        let mgm = linalg::mat_mul(&mt, &linalg::mat_mul(g, &self.matrix));
        if &mgm != g {
            return false;
        }
        psi.roots().iter().all(|r| psi.index_of(&self.apply(r)).is_some())
    }

    /// The root permutation induced on `psi`.
    fn root_permutation(&self, psi: &RootSystem) -> Vec<u16> {
        psi.roots()
            .iter()
            .map(|r| psi.index_of(&self.apply(r)).expect("normalizing isometry") as u16)
            .collect()
    }
}

/// A finite group `W` with `W_Ψ ⊆ W ⊆ Aut(Ψ)`, presented as the Weyl group
/// of `base` extended by explicit outer isometries.
#[derive(Clone)]
pub struct SymmetrySpec {
    pub base: Arc<RootSystem>,
    outer: Vec<Isometry>,
    outer_closure: Vec<Isometry>,
    perms: Arc<OnceLock<Arc<PermGroup>>>,
}

impl SymmetrySpec {
    /// The plain Weyl group `W_Ψ`.
    pub fn weyl(base: Arc<RootSystem>) -> Self {
        SymmetrySpec {
            base,
            outer: Vec::new(),
            outer_closure: Vec::new(),
            perms: Arc::new(OnceLock::new()),
        }
    }

    /// `W_Ψ` extended by explicit outer generators.
    pub fn with_outer(base: Arc<RootSystem>, outer: Vec<Isometry>) -> Result<Self> {
        for g in &outer {
            if !g.normalizes(&base) {
                return Err(Error::BadOuterGenerator);
            }
        }
        let outer_closure = close_isometries(base.space.dim(), &outer)?;
        Ok(SymmetrySpec {
            base,
            outer,
            outer_closure,
            perms: Arc::new(OnceLock::new()),
        })
    }

    /// The full automorphism group `Aut(Ψ) = W_Ψ ⋊ (diagram automorphisms)`.
    pub fn aut(base: Arc<RootSystem>) -> Result<Self> {
        let gens = diagram_automorphisms(&base);
        SymmetrySpec::with_outer(base, gens)
    }

    pub fn outer_generators(&self) -> &[Isometry] {
        &self.outer
    }

    /// The finite group generated by the outer isometries (with identity).
    pub fn outer_group(&self) -> Vec<Isometry> {
        let mut v = vec![Isometry::identity(self.base.space.dim())];
        v.extend(self.outer_closure.iter().cloned());
        v
    }

    pub fn has_outer(&self) -> bool {
        !self.outer.is_empty()
    }

    /// Structural identity of the group: base roots plus outer matrices.
    pub fn same_context(&self, other: &SymmetrySpec) -> bool {
        (Arc::ptr_eq(&self.base, &other.base) || self.base.roots() == other.base.roots())
            && self.outer == other.outer
    }

    /// Materialize the group as permutations of the base roots.
    pub fn permutations(&self, cap: u64) -> Result<Arc<PermGroup>> {
        if let Some(g) = self.perms.get() {
            return Ok(Arc::clone(g));
        }
        let g = Arc::new(PermGroup::generate(self, cap)?);
        let _ = self.perms.set(Arc::clone(&g));
        Ok(g)
    }
}

fn close_isometries(dim: usize, gens: &[Isometry]) -> Result<Vec<Isometry>> {
    let id = Isometry::identity(dim);
    let mut seen: Vec<Isometry> = vec![id];
    let mut queue: Vec<usize> = vec![0];
    while let Some(i) = queue.pop() {
        let cur = seen[i].clone();
        for g in gens {
            let next = g.compose(&cur);
            if !seen.contains(&next) {
                seen.push(next);
                queue.push(seen.len() - 1);
                if seen.len() > 4096 {
                    return Err(Error::BudgetExceeded {
                        what: "outer group closure",
                        needed: seen.len() as u64,
                        cap: 4096,
                    });
                }
            }
        }
    }
    seen.remove(0);
    Ok(seen)
}

/// Isometries permuting the simple roots and preserving all inner products:
/// the diagram automorphisms, acting trivially on the orthocomplement of the
/// span. Identity excluded.
pub fn diagram_automorphisms(psi: &Arc<RootSystem>) -> Vec<Isometry> {
    let r = psi.rank();
    let simple = psi.simple_roots();
    let gram: Vec<Vec<Q>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| psi.space.pairing(a, b).unwrap()).collect())
        .collect();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current = vec![usize::MAX; r];
    let mut used = vec![false; r];
    search_simple_perms(0, r, &gram, &mut current, &mut used, &mut perms);
    perms
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &pi)| i != pi))
        .filter_map(|p| {
            let m = simple_permutation_matrix(psi, &p);
            let iso = Isometry { matrix: m };
            iso.normalizes(psi).then_some(iso)
        })
        .collect()
}

fn search_simple_perms(
    i: usize,
    r: usize,
    gram: &Mat,
    current: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == r {
        out.push(current.clone());
        return;
    }
    for cand in 0..r {
        if used[cand] || gram[cand][cand] != gram[i][i] {
            continue;
        }
        if (0..i).any(|j| gram[current[j]][cand] != gram[j][i]) {
            continue;
        }
        current[i] = cand;
        used[cand] = true;
        search_simple_perms(i + 1, r, gram, current, used, out);
        used[cand] = false;
        current[i] = usize::MAX;
    }
}

/// Matrix of the map `α_i ↦ α_{p(i)}`, identity on the orthocomplement.
fn simple_permutation_matrix(psi: &RootSystem, p: &[usize]) -> Mat {
    let dim = psi.space.dim();
    let simple = psi.simple_roots();
    let mut m = linalg::identity(dim);
    for k in 0..dim {
        let e = Weight::basis(dim, k);
        let c = psi.simple_coords(&e); // projection coordinates
        let mut col: Vec<Q> = e.coords.clone();
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (d, (pi_c, a_c)) in simple[p[i]].coords.iter().zip(&simple[i].coords).enumerate() {
                col[d] += ci * (pi_c - a_c);
            }
        }
        for (d, v) in col.into_iter().enumerate() {
            m[d][k] = v;
        }
    }
    m
}

/// Order of the Weyl group of one irreducible label.
pub fn weyl_order_label(label: &TypeLabel) -> u64 {
    let n = label.rank as u64;
    let fact = |m: u64| (1..=m).product::<u64>();
    match label.family {
        Family::A => fact(n + 1),
        Family::B | Family::C | Family::BC => (1u64 << n) * fact(n),
        Family::D => (1u64 << (n - 1)) * fact(n),
        Family::G => 12,
        Family::F => 1152,
        Family::E => match label.rank {
            6 => 51840,
            7 => 2903040,
            _ => 696729600,
        },
    }
}

/// Order of the Weyl group of an orthogonal sum of labels.
pub fn weyl_order(labels: &[TypeLabel]) -> u64 {
    labels.iter().map(weyl_order_label).product()
}

/// `|W_Φ|` of a sub-root system, from its embedded components.
pub fn weyl_order_sub(phi: &SubRootSystem) -> u64 {
    phi.components()
        .iter()
        .map(|c| {
            let label = TypeLabel::new(c.embedded.family, c.embedded.rank)
                .expect("components carry valid labels");
            weyl_order_label(&label)
        })
        .product()
}

/// The unique dominant representative of the `W_Ψ`-orbit of `lambda`:
/// repeatedly reflect at the simple root with the most negative coroot
/// pairing (lowest index breaking ties).
///
/// The walk runs in coroot-pairing coordinates: reflecting at `α_i` maps
/// the pairing vector `p` to `p_j − p_i·⟨α_i, α_j^∨⟩`, so each step costs
/// one Cartan row instead of an ambient reflection. The component of
/// `lambda` orthogonal to the span of the simple roots is untouched.
pub fn dominant_rep(psi: &RootSystem, lambda: &Weight) -> Weight {
    let (fw, cartan) = psi.dominance_data();
    let simple = psi.simple_roots();
    let r = simple.len();
    let mut p: Vec<Q> = (0..r)
        .map(|j| psi.space.coroot_pairing(lambda, &simple[j]).unwrap())
        .collect();
    // λ_⊥ = λ − Σ p_j ω_j is fixed by every reflection.
    let mut orth = lambda.clone();
    for (pj, w) in p.iter().zip(fw) {
        if !pj.is_zero() {
            orth = orth.sub(&w.scale(pj));
        }
    }
    loop {
        let mut worst: Option<usize> = None;
        for (i, pi) in p.iter().enumerate() {
            if pi.is_negative() && worst.is_none_or(|w| *pi < p[w]) {
                worst = Some(i);
            }
        }
        let Some(i) = worst else { break };
        let pi = p[i].clone();
        for j in 0..r {
            if !cartan[i][j].is_zero() {
                let sub = &pi * &cartan[i][j];
                p[j] -= sub;
            }
        }
    }
    let mut out = orth;
    for (pj, w) in p.iter().zip(fw) {
        if !pj.is_zero() {
            out = out.add(&w.scale(pj));
        }
    }
    out
}

/// Dominant representative together with the sequence of simple reflections
/// applied (as simple-root indices, in application order).
pub fn dominant_rep_with_word(psi: &RootSystem, lambda: &Weight) -> (Weight, Vec<usize>) {
    let simple = psi.simple_roots();
    let mut cur = lambda.clone();
    let mut word = Vec::new();
    loop {
        let mut worst: Option<(usize, Q)> = None;
        for (i, a) in simple.iter().enumerate() {
            let p = psi.space.coroot_pairing(&cur, a).unwrap();
            if p.is_negative() {
                match &worst {
                    Some((_, w)) if *w <= p => {}
                    _ => worst = Some((i, p)),
                }
            }
        }
        match worst {
            None => return (cur, word),
            Some((i, _)) => {
                cur = psi.space.reflect(&cur, &simple[i]).unwrap();
                word.push(i);
            }
        }
    }
}

pub fn is_dominant(psi: &RootSystem, lambda: &Weight) -> bool {
    psi.simple_roots()
        .iter()
        .all(|a| !psi.space.coroot_pairing(lambda, a).unwrap().is_negative())
}

/// Canonical representative of the orbit of `lambda` under the full group of
/// `spec`: the lexicographically smallest element of
/// `{dominant_rep(g λ) : g ∈ ⟨outer⟩}`.
pub fn canonical_rep(spec: &SymmetrySpec, lambda: &Weight) -> Weight {
    let d = dominant_rep(&spec.base, lambda);
    if !spec.has_outer() {
        return d;
    }
    let mut best = d.clone();
    for g in &spec.outer_closure {
        let cand = dominant_rep(&spec.base, &g.apply(&d));
        if cand < best {
            best = cand;
        }
    }
    best
}

/// One element of a signed Weyl orbit: the image weight and `(-1)^{ℓ(w)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedOrbitElement {
    pub weight: Weight,
    pub sign: i8,
}

/// The signed orbit `{(w δ, sign(w)) : w ∈ W_Φ}` of a `Φ`-regular weight,
/// by breadth-first closure under the simple reflections of `Φ`, tracking
/// sign parity per edge. Output is sorted by weight.
pub fn signed_orbit(
    delta: &Weight,
    phi: &SubRootSystem,
    cap: u64,
) -> Result<Vec<SignedOrbitElement>> {
    let psi = &phi.parent;
    let simple_ids = phi.simple_ids();
    let simples: Vec<&Weight> = simple_ids.iter().map(|&i| psi.root(i)).collect();
    // Regularity: strictly positive pairing with every positive root of Φ.
    for &p in &phi.positive_ids() {
        let v = psi.space.coroot_pairing(delta, psi.root(p))?;
        if !v.is_positive() {
            return Err(Error::NotRegular);
        }
    }
    let mut seen: HashMap<Weight, i8> = HashMap::new();
    seen.insert(delta.clone(), 1);
    let mut frontier = vec![delta.clone()];
    while let Some(w) = frontier.pop() {
        let sign = seen[&w];
        for a in &simples {
            let img = psi.space.reflect(&w, a)?;
            match seen.get(&img) {
                Some(&s) => debug_assert_eq!(s, -sign, "sign parity is path independent"),
                None => {
                    if seen.len() as u64 >= cap {
                        return Err(Error::BudgetExceeded {
                            what: "signed orbit",
                            needed: cap + 1,
                            cap,
                        });
                    }
                    seen.insert(img.clone(), -sign);
                    frontier.push(img);
                }
            }
        }
    }
    let mut out: Vec<SignedOrbitElement> = seen
        .into_iter()
        .map(|(weight, sign)| SignedOrbitElement { weight, sign })
        .collect();
    out.sort_by(|a, b| a.weight.cmp(&b.weight));
    Ok(out)
}

/// A finite group materialized as permutations of the parent's roots.
pub struct PermGroup {
    pub perms: Vec<Vec<u16>>,
}

impl PermGroup {
    fn generate(spec: &SymmetrySpec, cap: u64) -> Result<PermGroup> {
        let psi = &spec.base;
        let n = psi.num_roots();
        let mut gens: Vec<Vec<u16>> = Vec::new();
        for a in psi.simple_roots() {
            let id = psi.index_of(a).expect("simple roots are roots");
            gens.push((0..n as u32).map(|b| psi.reflect_root(id, b) as u16).collect());
        }
        for g in spec.outer_generators() {
            gens.push(g.root_permutation(psi));
        }
        let identity: Vec<u16> = (0..n as u16).collect();
        let mut seen: HashMap<Vec<u16>, u32> = HashMap::new();
        seen.insert(identity.clone(), 0);
        let mut elems = vec![identity];
        let mut head = 0usize;
        while head < elems.len() {
            let cur = elems[head].clone();
            head += 1;
            for g in &gens {
                let next: Vec<u16> = cur.iter().map(|&x| g[x as usize]).collect();
                if !seen.contains_key(&next) {
                    if elems.len() as u64 >= cap {
                        return Err(Error::BudgetExceeded {
                            what: "permutation group",
                            needed: cap + 1,
                            cap,
                        });
                    }
                    seen.insert(next.clone(), elems.len() as u32);
                    elems.push(next);
                }
            }
        }
        Ok(PermGroup { perms: elems })
    }

    pub fn order(&self) -> u64 {
        self.perms.len() as u64
    }

    /// Apply a permutation to a sorted id set.
    pub fn apply_to_ids(&self, perm: &[u16], ids: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = ids.iter().map(|&i| perm[i as usize] as u32).collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qr};
    use crate::roots::TypeLabel;

    fn build(s: &str) -> Arc<RootSystem> {
        RootSystem::build(TypeLabel::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_order_label(&TypeLabel::parse("A2").unwrap()), 6);
        assert_eq!(weyl_order_label(&TypeLabel::parse("F4").unwrap()), 1152);
        assert_eq!(weyl_order_label(&TypeLabel::parse("D4").unwrap()), 192);
        assert_eq!(weyl_order_label(&TypeLabel::parse("E8").unwrap()), 696729600);
        assert_eq!(
            weyl_order(&[TypeLabel::parse("A1").unwrap(), TypeLabel::parse("B2").unwrap()]),
            16
        );
    }

    #[test]
    fn dominant_rep_examples() {
        let a2 = build("A2");
        let fw = a2.fundamental_weights().unwrap();
        // A dominant vector is fixed.
        assert_eq!(dominant_rep(&a2, &fw[0]), fw[0]);
        // dominant_rep(-ω_1) = ω_2 in A_2.
        assert_eq!(dominant_rep(&a2, &fw[0].neg()), fw[1]);
        // The word replays to the representative.
        let (rep, word) = dominant_rep_with_word(&a2, &fw[0].neg());
        let mut v = fw[0].neg();
        for i in word {
            v = a2.space.reflect(&v, &a2.simple_roots()[i]).unwrap();
        }
        assert_eq!(v, rep);
    }

    #[test]
    fn dominant_rep_d4_table_row() {
        // 2δ of A_2 = ⟨e_1-e_2, e_2-e_3⟩ inside D_4 is dominant-equivalent to 2ω_2.
        let d4 = build("D4");
        let e = |i: usize| Weight::basis(4, i);
        let a2 = d4
            .generated_subsystem(&[e(0).sub(&e(1)), e(1).sub(&e(2))])
            .unwrap();
        let two_delta: Weight = {
            let mut s = Weight::zero(4);
            for &p in &a2.positive_ids() {
                s = s.add(d4.root(p));
            }
            s
        };
        let fw = d4.fundamental_weights().unwrap();
        assert_eq!(dominant_rep(&d4, &two_delta), fw[1].scale(&q(2)));
    }

    #[test]
    fn signed_orbit_examples() {
        // Φ = A_1: orbit of α/2 is [(−α/2, −1), (α/2, +1)].
        let a1 = build("A1");
        let alpha = a1.simple_roots()[0].clone();
        let half = alpha.scale(&qr(1, 2));
        let orbit = signed_orbit(&half, &a1.full_subsystem(), 100).unwrap();
        assert_eq!(orbit.len(), 2);
        assert_eq!(orbit[0].weight, half.neg());
        assert_eq!(orbit[0].sign, -1);
        assert_eq!(orbit[1].weight, half);
        assert_eq!(orbit[1].sign, 1);

        // Φ = A_2: 6 elements, signs summing to 0.
        let a2 = build("A2");
        let full = a2.full_subsystem();
        let delta = {
            let mut s = Weight::zero(3);
            for &p in &full.positive_ids() {
                s = s.add(a2.root(p));
            }
            s.scale(&qr(1, 2))
        };
        let orbit = signed_orbit(&delta, &full, 100).unwrap();
        assert_eq!(orbit.len(), 6);
        assert_eq!(orbit.iter().map(|e| e.sign as i64).sum::<i64>(), 0);

        // Non-regular weight rejected.
        assert!(matches!(
            signed_orbit(&Weight::zero(3), &full, 100),
            Err(Error::NotRegular)
        ));
    }

    #[test]
    fn signed_orbit_sizes_match_weyl_order() {
        for s in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let rs = build(s);
            let full = rs.full_subsystem();
            let delta = {
                let mut acc = Weight::zero(rs.space.dim());
                for &p in &full.positive_ids() {
                    acc = acc.add(rs.root(p));
                }
                acc
            };
            let orbit = signed_orbit(&delta, &full, 10_000).unwrap();
            assert_eq!(orbit.len() as u64, weyl_order_sub(&full), "{s}");
        }
    }

    #[test]
    fn diagram_automorphism_counts() {
        assert_eq!(diagram_automorphisms(&build("A1")).len(), 0);
        assert_eq!(diagram_automorphisms(&build("A2")).len(), 1);
        assert_eq!(diagram_automorphisms(&build("D4")).len(), 5);
        assert_eq!(diagram_automorphisms(&build("D5")).len(), 1);
        assert_eq!(diagram_automorphisms(&build("E6")).len(), 1);
        assert_eq!(diagram_automorphisms(&build("E7")).len(), 0);
        assert_eq!(diagram_automorphisms(&build("G2")).len(), 0);
        assert_eq!(diagram_automorphisms(&build("F4")).len(), 0);
        assert_eq!(diagram_automorphisms(&build("BC3")).len(), 0);
    }

    #[test]
    fn canonical_rep_flip_identifies_mirror_weights() {
        let a2 = build("A2");
        let spec = SymmetrySpec::aut(Arc::clone(&a2)).unwrap();
        let fw = a2.fundamental_weights().unwrap();
        assert_eq!(canonical_rep(&spec, &fw[0]), canonical_rep(&spec, &fw[1]));
        // Without the flip they differ.
        let plain = SymmetrySpec::weyl(Arc::clone(&a2));
        assert_ne!(canonical_rep(&plain, &fw[0]), canonical_rep(&plain, &fw[1]));
    }

    #[test]
    fn perm_group_orders() {
        let d4 = build("D4");
        let w = SymmetrySpec::weyl(Arc::clone(&d4)).permutations(10_000).unwrap();
        assert_eq!(w.order(), 192);
        let aut = SymmetrySpec::aut(Arc::clone(&d4))
            .unwrap()
            .permutations(10_000)
            .unwrap();
        assert_eq!(aut.order(), 1152);
        let g2 = build("G2");
        let w = SymmetrySpec::weyl(Arc::clone(&g2)).permutations(100).unwrap();
        assert_eq!(w.order(), 12);
    }

    #[test]
    fn perm_group_budget_error() {
        let f4 = build("F4");
        let err = SymmetrySpec::weyl(Arc::clone(&f4)).permutations(100);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }
}
