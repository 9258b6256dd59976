//! Construction of classical and exceptional root systems with fixed
//! (Bourbaki-ordered) simple systems, positive systems, fundamental weights,
//! sub-root systems, reflection closure, components and embedded type labels.
//!
//! Normalization: every irreducible system is realized so that its short
//! roots have squared length 1, except `C_1` which keeps the `C`-family
//! metric so that the rank formulas of the reference tables hold at `n = 1`.

use crate::error::{Error, Result};
use crate::lattice::{AmbientSpace, Weight};
use crate::linalg::{self, Mat};
use crate::rat::{q, qr, Q};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// Families of irreducible (possibly non-reduced) root systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        write!(f, "{s}")
    }
}

/// An irreducible type label such as `A3`, `BC2`, `E8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C | Family::BC => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { family, rank })
        } else {
            Err(Error::InvalidLabel(format!("{family}{rank}")))
        }
    }

    /// Parse labels like "A3", "A_3", "BC2", "E8", "G2".
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| *c != '_' && *c != ' ').collect();
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::InvalidLabel(s.clone()))?;
        let (fam, rank) = s.split_at(split);
        let rank: usize = rank.parse().map_err(|_| Error::InvalidLabel(s.clone()))?;
        let family = match fam {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "BC" => Family::BC,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            _ => return Err(Error::InvalidLabel(s.clone())),
        };
        TypeLabel::new(family, rank)
    }

    /// Number of roots of the standard realization.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::BC => 2 * n * n + 2 * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.family != Family::BC
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl fmt::Debug for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Label of a root system: one irreducible type or an orthogonal sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    Simple(TypeLabel),
    Composite(Vec<TypeLabel>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Simple(t) => write!(f, "{t}"),
            Label::Composite(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

/// A root system with a fixed simple system and the positive system it
/// determines. Immutable after construction.
pub struct RootSystem {
    pub space: AmbientSpace,
    pub label: Label,
    roots: Vec<Weight>,
    root_index: HashMap<Weight, u32>,
    norms: Vec<Q>,
    simple: Vec<Weight>,
    positive: Vec<bool>,
    simple_solver: SimpleSolver,
    dominance: std::sync::OnceLock<DominanceData>,
}

/// Cached data for the fast dominance walk: fundamental weights and the
/// Cartan pairings `⟨α_i, α_j^∨⟩`.
struct DominanceData {
    fw: Vec<Weight>,
    cartan: Vec<Vec<Q>>,
}

/// Solves coordinates of span vectors in the simple-root basis.
struct SimpleSolver {
    gram_inv: Mat,
    sg: Mat,
}

impl SimpleSolver {
    fn new(space: &AmbientSpace, simple: &[Weight]) -> Self {
        let s: Mat = simple.iter().map(|w| w.coords.clone()).collect();
        let sg = linalg::mat_mul(&s, space.gram());
        let gram = linalg::mat_mul(&sg, &linalg::transpose(&s));
        let gram_inv = linalg::inverse(&gram).expect("simple roots are independent");
        SimpleSolver { gram_inv, sg }
    }

    fn coords(&self, v: &Weight) -> Vec<Q> {
        let rhs = linalg::mat_vec(&self.sg, &v.coords);
        linalg::mat_vec(&self.gram_inv, &rhs)
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}, {} roots)", self.label, self.roots.len())
    }
}

impl RootSystem {
    /// Build the standard realization of an irreducible type, with a global
    /// cache so repeated lookups share one instance.
    pub fn build(label: TypeLabel) -> Result<Arc<RootSystem>> {
        use std::sync::Mutex;
        static CACHE: Mutex<Vec<(TypeLabel, Arc<RootSystem>)>> = Mutex::new(Vec::new());
        {
            let cache = CACHE.lock().unwrap();
            if let Some((_, rs)) = cache.iter().find(|(l, _)| *l == label) {
                return Ok(Arc::clone(rs));
            }
        }
        let built = RootSystem::build_uncached(label)?;
        let mut cache = CACHE.lock().unwrap();
        if let Some((_, rs)) = cache.iter().find(|(l, _)| *l == label) {
            return Ok(Arc::clone(rs));
        }
        cache.push((label, Arc::clone(&built)));
        Ok(built)
    }

    fn build_uncached(label: TypeLabel) -> Result<Arc<RootSystem>> {
        let n = label.rank;
        let (space, roots, simple) = match label.family {
            Family::A => {
                let dim = n + 1;
                let space = AmbientSpace::scaled_euclidean(dim, qr(1, 2))?;
                let mut roots = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            roots.push(ei(dim, i).sub(&ei(dim, j)));
                        }
                    }
                }
                let simple = (0..n).map(|i| ei(dim, i).sub(&ei(dim, i + 1))).collect();
                (space, roots, simple)
            }
            Family::B | Family::BC => {
                let space = AmbientSpace::euclidean(n);
                let mut roots = Vec::new();
                for i in 0..n {
                    roots.push(ei(n, i));
                    roots.push(ei(n, i).neg());
                    if label.family == Family::BC {
                        roots.push(ei(n, i).scale(&q(2)));
                        roots.push(ei(n, i).scale(&q(-2)));
                    }
                    for j in i + 1..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(ei(n, i).scale(&q(si)).add(&ei(n, j).scale(&q(sj))));
                        }
                    }
                }
                let mut simple: Vec<Weight> =
                    (0..n - 1).map(|i| ei(n, i).sub(&ei(n, i + 1))).collect();
                simple.push(ei(n, n - 1));
                (space, roots, simple)
            }
            Family::C => {
                let space = AmbientSpace::scaled_euclidean(n, qr(1, 2))?;
                let mut roots = Vec::new();
                for i in 0..n {
                    roots.push(ei(n, i).scale(&q(2)));
                    roots.push(ei(n, i).scale(&q(-2)));
                    for j in i + 1..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(ei(n, i).scale(&q(si)).add(&ei(n, j).scale(&q(sj))));
                        }
                    }
                }
                let mut simple: Vec<Weight> =
                    (0..n - 1).map(|i| ei(n, i).sub(&ei(n, i + 1))).collect();
                simple.push(ei(n, n - 1).scale(&q(2)));
                (space, roots, simple)
            }
            Family::D => {
                let space = AmbientSpace::scaled_euclidean(n, qr(1, 2))?;
                let mut roots = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(ei(n, i).scale(&q(si)).add(&ei(n, j).scale(&q(sj))));
                        }
                    }
                }
                let mut simple: Vec<Weight> =
                    (0..n - 1).map(|i| ei(n, i).sub(&ei(n, i + 1))).collect();
                simple.push(ei(n, n - 2).add(&ei(n, n - 1)));
                (space, roots, simple)
            }
            Family::G => {
                // Realized in the plane x_1+x_2+x_3 = 0. The first simple root
                // is the long one, matching the reference-table numbering.
                let space = AmbientSpace::scaled_euclidean(3, qr(1, 2))?;
                let mut roots = Vec::new();
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            roots.push(ei(3, i).sub(&ei(3, j)));
                        }
                    }
                }
                for (i, j, k) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
                    let v = ei(3, i).scale(&q(2)).sub(&ei(3, j)).sub(&ei(3, k));
                    roots.push(v.neg());
                    roots.push(v);
                }
                let long = ei(3, 0).scale(&q(-2)).add(&ei(3, 1)).add(&ei(3, 2));
                let short = ei(3, 0).sub(&ei(3, 1));
                (space, roots, vec![long, short])
            }
            Family::F => {
                let space = AmbientSpace::euclidean(4);
                let mut roots = Vec::new();
                for i in 0..4 {
                    roots.push(ei(4, i));
                    roots.push(ei(4, i).neg());
                    for j in i + 1..4 {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(ei(4, i).scale(&q(si)).add(&ei(4, j).scale(&q(sj))));
                        }
                    }
                }
                for signs in 0..16u32 {
                    let coords: Vec<Q> = (0..4)
                        .map(|b| if signs >> b & 1 == 1 { qr(-1, 2) } else { qr(1, 2) })
                        .collect();
                    roots.push(Weight::new(coords));
                }
                let simple = vec![
                    ei(4, 1).sub(&ei(4, 2)),
                    ei(4, 2).sub(&ei(4, 3)),
                    ei(4, 3),
                    Weight::new(vec![qr(1, 2), qr(-1, 2), qr(-1, 2), qr(-1, 2)]),
                ];
                (space, roots, simple)
            }
            Family::E => {
                let space = AmbientSpace::scaled_euclidean(8, qr(1, 2))?;
                let mut all = Vec::new();
                for i in 0..8 {
                    for j in i + 1..8 {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            all.push(ei(8, i).scale(&q(si)).add(&ei(8, j).scale(&q(sj))));
                        }
                    }
                }
                for signs in 0..256u32 {
                    if (signs.count_ones() % 2) != 0 {
                        continue;
                    }
                    let coords: Vec<Q> = (0..8)
                        .map(|b| if signs >> b & 1 == 1 { qr(-1, 2) } else { qr(1, 2) })
                        .collect();
                    all.push(Weight::new(coords));
                }
                let alpha1 = Weight::new(vec![
                    qr(1, 2),
                    qr(-1, 2),
                    qr(-1, 2),
                    qr(-1, 2),
                    qr(-1, 2),
                    qr(-1, 2),
                    qr(-1, 2),
                    qr(1, 2),
                ]);
                let mut simple = vec![
                    alpha1,
                    ei(8, 0).add(&ei(8, 1)),
                    ei(8, 1).sub(&ei(8, 0)),
                    ei(8, 2).sub(&ei(8, 1)),
                    ei(8, 3).sub(&ei(8, 2)),
                    ei(8, 4).sub(&ei(8, 3)),
                    ei(8, 5).sub(&ei(8, 4)),
                    ei(8, 6).sub(&ei(8, 5)),
                ];
                simple.truncate(n);
                if n == 8 {
                    (space, all, simple)
                } else {
                    // E6/E7 are the reflection closures of their simple
                    // systems inside the E8 root set.
                    let roots = reflection_closure_in(&space, &all, &simple);
                    (space, roots, simple)
                }
            }
        };
        let rs = RootSystem::from_parts(space, roots, simple, Label::Simple(label))?;
        debug_assert_eq!(rs.roots.len(), label.root_count(), "root count for {label}");
        Ok(Arc::new(rs))
    }

    /// Orthogonal sum of standard realizations, in the product space.
    pub fn orthogonal_sum(labels: &[TypeLabel]) -> Result<Arc<RootSystem>> {
        let parts: Vec<Arc<RootSystem>> = labels
            .iter()
            .map(|&l| RootSystem::build(l))
            .collect::<Result<_>>()?;
        let dim: usize = parts.iter().map(|p| p.space.dim()).sum();
        let mut gram = vec![vec![Q::zero(); dim]; dim];
        let mut offset = 0;
        for p in &parts {
            let g = p.space.gram();
            for i in 0..p.space.dim() {
                for j in 0..p.space.dim() {
                    gram[offset + i][offset + j] = g[i][j].clone();
                }
            }
            offset += p.space.dim();
        }
        let space = AmbientSpace::new(gram)?;
        let mut roots = Vec::new();
        let mut simple = Vec::new();
        let mut off = 0;
        for p in &parts {
            let lift = |w: &Weight| {
                let mut coords = vec![Q::zero(); dim];
                for (i, c) in w.coords.iter().enumerate() {
                    coords[off + i] = c.clone();
                }
                Weight::new(coords)
            };
            roots.extend(p.roots.iter().map(&lift));
            simple.extend(p.simple.iter().map(&lift));
            off += p.space.dim();
        }
        let rs = RootSystem::from_parts(space, roots, simple, Label::Composite(labels.to_vec()))?;
        Ok(Arc::new(rs))
    }

    /// Root system from explicit data living in a given space. The roots
    /// must be reflection-closed and every root a signed combination of the
    /// simple roots.
    pub fn in_space(
        space: AmbientSpace,
        roots: Vec<Weight>,
        simple: Vec<Weight>,
        label: Label,
    ) -> Result<Arc<RootSystem>> {
        let rs = RootSystem::from_parts(space, roots, simple, label)?;
        let full = Arc::new(rs);
        if !full.full_subsystem().is_reflection_closed() {
            return Err(Error::NotReflectionClosed);
        }
        Ok(full)
    }

    fn from_parts(
        space: AmbientSpace,
        mut roots: Vec<Weight>,
        simple: Vec<Weight>,
        label: Label,
    ) -> Result<RootSystem> {
        roots.sort();
        roots.dedup();
        let root_index: HashMap<Weight, u32> = roots
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let norms = roots.iter().map(|r| space.norm2(r)).collect();
        let solver = SimpleSolver::new(&space, &simple);
        let mut positive = vec![false; roots.len()];
        for (i, r) in roots.iter().enumerate() {
            let c = solver.coords(r);
            let mut sign = 0i8;
            for x in &c {
                if x.is_positive() {
                    if sign < 0 {
                        return Err(Error::InvalidLabel(
                            "root has mixed-sign simple coordinates".into(),
                        ));
                    }
                    sign = 1;
                } else if x.is_negative() {
                    if sign > 0 {
                        return Err(Error::InvalidLabel(
                            "root has mixed-sign simple coordinates".into(),
                        ));
                    }
                    sign = -1;
                }
            }
            positive[i] = sign > 0;
        }
        Ok(RootSystem {
            space,
            label,
            roots,
            root_index,
            norms,
            simple,
            positive,
            simple_solver: solver,
            dominance: std::sync::OnceLock::new(),
        })
    }

    /// Fundamental weights and Cartan pairings for the dominance walk.
    pub(crate) fn dominance_data(&self) -> (&[Weight], &[Vec<Q>]) {
        let data = self.dominance.get_or_init(|| {
            let fw = self
                .fundamental_weights_unchecked()
                .expect("simple roots are independent");
            let cartan: Vec<Vec<Q>> = self
                .simple
                .iter()
                .map(|a| {
                    self.simple
                        .iter()
                        .map(|b| self.space.coroot_pairing(a, b).unwrap())
                        .collect()
                })
                .collect();
            DominanceData { fw, cartan }
        });
        (&data.fw, &data.cartan)
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn root(&self, id: u32) -> &Weight {
        &self.roots[id as usize]
    }

    pub fn norm2_of(&self, id: u32) -> &Q {
        &self.norms[id as usize]
    }

    pub fn index_of(&self, w: &Weight) -> Option<u32> {
        self.root_index.get(w).copied()
    }

    pub fn is_positive(&self, id: u32) -> bool {
        self.positive[id as usize]
    }

    pub fn positive_ids(&self) -> Vec<u32> {
        (0..self.roots.len() as u32).filter(|&i| self.positive[i as usize]).collect()
    }

    /// Coordinates of a span vector in the simple-root basis.
    pub fn simple_coords(&self, v: &Weight) -> Vec<Q> {
        self.simple_solver.coords(v)
    }

    /// Index of the reflected root `s_{roots[a]}(roots[b])`.
    pub fn reflect_root(&self, a: u32, b: u32) -> u32 {
        let w = self
            .space
            .reflect(self.root(b), self.root(a))
            .expect("roots are nonzero");
        *self
            .root_index
            .get(&w)
            .expect("root systems are reflection-closed")
    }

    /// The whole system as a sub-root system of itself.
    pub fn full_subsystem(self: &Arc<Self>) -> SubRootSystem {
        SubRootSystem {
            parent: Arc::clone(self),
            ids: (0..self.roots.len() as u32).collect(),
        }
    }

    /// Sub-root system from explicit member weights (must be reflection-closed).
    pub fn subsystem_from_roots(self: &Arc<Self>, roots: &[Weight]) -> Result<SubRootSystem> {
        let mut ids = Vec::with_capacity(roots.len());
        for r in roots {
            let id = self
                .index_of(r)
                .ok_or_else(|| Error::NotARoot(format!("{r:?}")))?;
            ids.push(id);
        }
        ids.sort_unstable();
        ids.dedup();
        let sub = SubRootSystem {
            parent: Arc::clone(self),
            ids,
        };
        if !sub.is_reflection_closed() {
            return Err(Error::NotReflectionClosed);
        }
        Ok(sub)
    }

    /// Smallest reflection-closed subset containing `x`.
    pub fn generated_subsystem(self: &Arc<Self>, x: &[Weight]) -> Result<SubRootSystem> {
        let mut ids: Vec<u32> = Vec::with_capacity(x.len());
        for r in x {
            let id = self
                .index_of(r)
                .ok_or_else(|| Error::NotARoot(format!("{r:?}")))?;
            ids.push(id);
        }
        Ok(self.close_ids(ids))
    }

    pub(crate) fn close_ids(self: &Arc<Self>, seed: Vec<u32>) -> SubRootSystem {
        let mut in_set = vec![false; self.roots.len()];
        let mut queue: Vec<u32> = Vec::new();
        for id in seed {
            if !in_set[id as usize] {
                in_set[id as usize] = true;
                queue.push(id);
            }
        }
        let mut members: Vec<u32> = queue.clone();
        while let Some(a) = queue.pop() {
            // Reflect every current member by a, and a by every member.
            let snapshot = members.clone();
            for &b in &snapshot {
                for id in [self.reflect_root(a, b), self.reflect_root(b, a)] {
                    if !in_set[id as usize] {
                        in_set[id as usize] = true;
                        members.push(id);
                        queue.push(id);
                    }
                }
            }
        }
        members.sort_unstable();
        SubRootSystem {
            parent: Arc::clone(self),
            ids: members,
        }
    }

    /// Fundamental weights `ω_i` with `⟨ω_i, α_j^∨⟩ = δ_ij`, solved in the
    /// span of the simple roots. Requires an irreducible system.
    pub fn fundamental_weights(self: &Arc<Self>) -> Result<Vec<Weight>> {
        if !self.full_subsystem().is_irreducible_abstract() {
            return Err(Error::Reducible);
        }
        self.fundamental_weights_unchecked()
    }

    pub(crate) fn fundamental_weights_unchecked(&self) -> Result<Vec<Weight>> {
        let r = self.rank();
        // Cartan matrix C[k][j] = <alpha_k, alpha_j^vee>.
        let cartan: Mat = (0..r)
            .map(|k| {
                (0..r)
                    .map(|j| {
                        self.space
                            .coroot_pairing(&self.simple[k], &self.simple[j])
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let ct = linalg::transpose(&cartan);
        let mut out = Vec::with_capacity(r);
        for i in 0..r {
            let e: Vec<Q> = (0..r).map(|j| if i == j { q(1) } else { q(0) }).collect();
            let c = linalg::solve(&ct, &e).ok_or(Error::DependentBasis)?;
            let mut w = Weight::zero(self.space.dim());
            for (ck, alpha) in c.iter().zip(&self.simple) {
                w = w.add(&alpha.scale(ck));
            }
            out.push(w);
        }
        Ok(out)
    }

    /// Express a weight in fundamental-weight coordinates
    /// `(⟨λ, α_1^∨⟩, …, ⟨λ, α_r^∨⟩)`.
    pub fn fw_coords(&self, lambda: &Weight) -> Vec<Q> {
        self.simple
            .iter()
            .map(|a| self.space.coroot_pairing(lambda, a).unwrap())
            .collect()
    }
}

fn ei(dim: usize, i: usize) -> Weight {
    Weight::basis(dim, i)
}

fn reflection_closure_in(
    space: &AmbientSpace,
    universe: &[Weight],
    seed: &[Weight],
) -> Vec<Weight> {
    let set: HashSet<Weight> = universe.iter().cloned().collect();
    let mut members: HashSet<Weight> = seed.iter().cloned().collect();
    let mut queue: Vec<Weight> = seed.to_vec();
    while let Some(a) = queue.pop() {
        let snapshot: Vec<Weight> = members.iter().cloned().collect();
        for b in snapshot {
            for w in [space.reflect(&b, &a).unwrap(), space.reflect(&a, &b).unwrap()] {
                debug_assert!(set.contains(&w));
                if members.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }
    members.into_iter().collect()
}

/// A reflection-closed subset of a parent root system.
#[derive(Clone)]
pub struct SubRootSystem {
    pub parent: Arc<RootSystem>,
    ids: Vec<u32>,
}

impl fmt::Debug for SubRootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubRootSystem({} roots of {})", self.ids.len(), self.parent.label)
    }
}

impl PartialEq for SubRootSystem {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.ids == other.ids
    }
}
impl Eq for SubRootSystem {}

impl SubRootSystem {
    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn roots(&self) -> impl Iterator<Item = &Weight> + '_ {
        self.ids.iter().map(|&i| self.parent.root(i))
    }

    pub fn contains_id(&self, id: u32) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.parent.index_of(w).is_some_and(|id| self.contains_id(id))
    }

    /// Positive part `Φ⁺ = Φ ∩ Ψ⁺`.
    pub fn positive_ids(&self) -> Vec<u32> {
        self.ids
            .iter()
            .copied()
            .filter(|&i| self.parent.is_positive(i))
            .collect()
    }

    pub fn is_reflection_closed(&self) -> bool {
        self.ids.iter().all(|&a| {
            self.ids
                .iter()
                .all(|&b| self.contains_id(self.parent.reflect_root(a, b)))
        })
    }

    /// Reduced: no root together with its double.
    pub fn is_reduced(&self) -> bool {
        self.ids.iter().all(|&i| {
            let doubled = self.parent.root(i).scale(&q(2));
            !self.contains(&doubled)
        })
    }

    /// Simple roots of `Φ` with respect to `Φ⁺ = Φ ∩ Ψ⁺`: positive roots that
    /// are not sums of two positive roots of `Φ`.
    pub fn simple_ids(&self) -> Vec<u32> {
        let pos = self.positive_ids();
        let pos_set: HashSet<u32> = pos.iter().copied().collect();
        pos.iter()
            .copied()
            .filter(|&a| {
                let wa = self.parent.root(a);
                !pos.iter().any(|&b| {
                    if a == b {
                        return false;
                    }
                    let diff = wa.sub(self.parent.root(b));
                    self.parent
                        .index_of(&diff)
                        .is_some_and(|d| pos_set.contains(&d) && d != a)
                })
            })
            .collect()
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive_ids().len()
    }

    /// The short-vector sub-root system `Φ°`: roots with no shorter
    /// non-orthogonal partner in `Φ`.
    pub fn short_subsystem(&self) -> SubRootSystem {
        let ids: Vec<u32> = self
            .ids
            .iter()
            .copied()
            .filter(|&a| {
                let na = self.parent.norm2_of(a);
                self.ids.iter().all(|&b| {
                    let nb = self.parent.norm2_of(b);
                    nb >= na
                        || self
                            .parent
                            .space
                            .pairing(self.parent.root(a), self.parent.root(b))
                            .unwrap()
                            .is_zero()
                })
            })
            .collect();
        SubRootSystem {
            parent: Arc::clone(&self.parent),
            ids,
        }
    }

    /// Sum of the positive roots `Σ_{α ∈ Φ⁺} α = 2δ_Φ`.
    pub fn two_delta(&self) -> Weight {
        let mut s = Weight::zero(self.parent.space.dim());
        for &p in &self.positive_ids() {
            s = s.add(self.parent.root(p));
        }
        s
    }

    /// Cusp product `⟨β, α⟩ = 2(β,α)/(α,α)` for roots of this subsystem.
    pub fn cusp_product(&self, beta: &Weight, alpha: &Weight) -> Result<Q> {
        if !self.contains(beta) {
            return Err(Error::NotARoot(format!("{beta:?}")));
        }
        if !self.contains(alpha) {
            return Err(Error::NotARoot(format!("{alpha:?}")));
        }
        self.parent.space.coroot_pairing(beta, alpha)
    }

    /// Root-string value `k_2 - k_1` with `k_1 = max{k : β + kα ∈ Φ}` and
    /// `k_2 = max{k : β - kα ∈ Φ}`. Independent oracle for [`Self::cusp_product`].
    pub fn cusp_product_by_strings(&self, beta: &Weight, alpha: &Weight) -> Result<i64> {
        if !self.contains(beta) {
            return Err(Error::NotARoot(format!("{beta:?}")));
        }
        if !self.contains(alpha) {
            return Err(Error::NotARoot(format!("{alpha:?}")));
        }
        let max_norm = self
            .ids
            .iter()
            .map(|&i| self.parent.norm2_of(i))
            .max()
            .cloned()
            .unwrap_or_else(Q::zero);
        // max{k ≥ 0 : β + k·dir·α ∈ Φ}; the string may pass through gaps
        // (e.g. through 0 when β = α), so scan until |β + k·dir·α|² exceeds
        // every root norm past the parabola vertex.
        let walk = |dir: i64| {
            let step = alpha.scale(&q(dir));
            let vertex = -self.parent.space.pairing(beta, &step).unwrap()
                / self.parent.space.norm2(alpha);
            let mut best = 0i64;
            let mut k = 1i64;
            let mut cur = beta.add(&step);
            loop {
                if self.contains(&cur) {
                    best = k;
                }
                let past_vertex = Q::from_integer(k.into()) >= vertex;
                if past_vertex && self.parent.space.norm2(&cur) > max_norm {
                    break;
                }
                k += 1;
                cur = cur.add(&step);
            }
            best
        };
        Ok(walk(-1) - walk(1))
    }

    /// Connected components under non-orthogonality, each with an embedded
    /// type label. For classical parents the decomposition is by coordinate
    /// blocks, so `D_2`, `D_3`, `B_1`, `C_1` keep their embedded identities.
    pub fn components(&self) -> Vec<Component> {
        match &self.parent.label {
            Label::Simple(t)
                if matches!(
                    t.family,
                    Family::A | Family::B | Family::C | Family::D | Family::BC
                ) =>
            {
                self.classical_block_components()
            }
            _ => self.orthogonal_components(),
        }
    }

    fn classical_block_components(&self) -> Vec<Component> {
        let n = self.parent.space.dim();
        // Union-find over coordinates: i ~ j when e_i ± e_j ∈ Φ.
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut Vec<usize>, i: usize) -> usize {
            if uf[i] != i {
                let r = find(uf, uf[i]);
                uf[i] = r;
            }
            uf[i]
        }
        let support = |w: &Weight| -> Vec<usize> {
            w.coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, _)| i)
                .collect()
        };
        for &id in &self.ids {
            let s = support(self.parent.root(id));
            if s.len() == 2 {
                let (a, b) = (find(&mut uf, s[0]), find(&mut uf, s[1]));
                if a != b {
                    uf[a] = b;
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut uf, i);
            blocks.entry(r).or_default().push(i);
        }
        let mut out = Vec::new();
        for (_, block) in blocks {
            let ids: Vec<u32> = self
                .ids
                .iter()
                .copied()
                .filter(|&id| {
                    let s = support(self.parent.root(id));
                    !s.is_empty() && s.iter().all(|i| block.contains(i))
                })
                .collect();
            if ids.is_empty() {
                continue;
            }
            let sub = SubRootSystem {
                parent: Arc::clone(&self.parent),
                ids,
            };
            let mut has_e = false;
            let mut has_2e = false;
            for rid in &sub.ids {
                let w = self.parent.root(*rid);
                let s = support(w);
                if s.len() == 1 {
                    let c = &w.coords[s[0]];
                    if c.abs() == q(1) {
                        has_e = true;
                    } else {
                        has_2e = true;
                    }
                }
            }
            let size = block.len();
            let count = sub.ids.len();
            // Blocks without coordinate roots are either full D blocks
            // (2m(m-1) roots) or possibly sign-twisted A chains (m(m-1)).
            let family_rank = if has_e && has_2e {
                (Family::BC, size)
            } else if has_e {
                (Family::B, size)
            } else if has_2e {
                (Family::C, size)
            } else if count == 2 * size * (size - 1) {
                (Family::D, size)
            } else {
                debug_assert_eq!(count, size * (size - 1), "block is a twisted A chain");
                (Family::A, size - 1)
            };
            let embedded = EmbeddedType {
                family: family_rank.0,
                rank: family_rank.1,
                k: self.length_ratio(&sub),
            };
            out.push(Component { sub, embedded });
        }
        out
    }

    /// Connected components under non-orthogonality with abstract labels,
    /// regardless of the parent family.
    pub fn orthogonal_components(&self) -> Vec<Component> {
        let m = self.ids.len();
        let mut uf: Vec<usize> = (0..m).collect();
        fn find(uf: &mut Vec<usize>, i: usize) -> usize {
            if uf[i] != i {
                let r = find(uf, uf[i]);
                uf[i] = r;
            }
            uf[i]
        }
        for i in 0..m {
            for j in i + 1..m {
                let p = self
                    .parent
                    .space
                    .pairing(self.parent.root(self.ids[i]), self.parent.root(self.ids[j]))
                    .unwrap();
                if !p.is_zero() {
                    let (a, b) = (find(&mut uf, i), find(&mut uf, j));
                    if a != b {
                        uf[a] = b;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for i in 0..m {
            let r = find(&mut uf, i);
            groups.entry(r).or_default().push(self.ids[i]);
        }
        let mut out: Vec<Component> = groups
            .into_values()
            .map(|ids| {
                let sub = SubRootSystem {
                    parent: Arc::clone(&self.parent),
                    ids,
                };
                let embedded = EmbeddedType {
                    family: sub.abstract_irreducible_family().0,
                    rank: sub.abstract_irreducible_family().1,
                    k: self.length_ratio(&sub),
                };
                Component { sub, embedded }
            })
            .collect();
        out.sort_by(|a, b| a.sub.ids.cmp(&b.sub.ids));
        out
    }

    /// Squared-length ratio of the component's short roots to the parent's
    /// short roots.
    fn length_ratio(&self, sub: &SubRootSystem) -> Q {
        let parent_short = (0..self.parent.num_roots() as u32)
            .map(|i| self.parent.norm2_of(i))
            .min()
            .expect("nonempty parent")
            .clone();
        let sub_short = sub
            .ids
            .iter()
            .map(|&i| self.parent.norm2_of(i))
            .min()
            .expect("nonempty component")
            .clone();
        sub_short / parent_short
    }

    /// Abstract irreducible family and rank from the root count, rank,
    /// and norm census. `B_2`-vs-`C_2` and `D_3`-vs-`A_3` collapse to the
    /// canonical members (`B_2`, `A_3`) of their abstract isomorphism class.
    fn abstract_irreducible_family(&self) -> (Family, usize) {
        let count = self.ids.len();
        let rank = self.span_rank();
        if !self.is_reduced() {
            debug_assert_eq!(count, 2 * rank * rank + 2 * rank);
            return (Family::BC, rank);
        }
        let norms: Vec<&Q> = self.ids.iter().map(|&i| self.parent.norm2_of(i)).collect();
        let min = norms.iter().min().unwrap();
        let short_count = norms.iter().filter(|n| *n == min).count();
        let distinct: HashSet<&Q> = norms.iter().copied().collect();
        match (rank, count, distinct.len()) {
            (r, c, 1) if c == r * (r + 1) => (Family::A, r),
            (r, c, 1) if c == 2 * r * (r - 1) => (Family::D, r),
            (6, 72, 1) => (Family::E, 6),
            (7, 126, 1) => (Family::E, 7),
            (8, 240, 1) => (Family::E, 8),
            (2, 12, 2) => (Family::G, 2),
            (4, 48, 2) => (Family::F, 4),
            (r, c, 2) if c == 2 * r * r => {
                if short_count == 2 * r {
                    (Family::B, r)
                } else {
                    (Family::C, r)
                }
            }
            _ => panic!("unrecognized irreducible component: rank {rank}, {count} roots"),
        }
    }

    /// Rank of the rational span of the subsystem.
    pub fn span_rank(&self) -> usize {
        let m: Mat = self.roots().map(|w| w.coords.clone()).collect();
        if m.is_empty() {
            0
        } else {
            linalg::rank(&m)
        }
    }

    pub fn is_irreducible_abstract(&self) -> bool {
        !self.is_empty() && self.orthogonal_components().len() == 1
    }

    /// Abstract type as a sorted multiset of (family, rank, k) labels.
    pub fn embedded_type(&self) -> Vec<EmbeddedType> {
        let mut ts: Vec<EmbeddedType> = self.components().into_iter().map(|c| c.embedded).collect();
        ts.sort();
        ts
    }

    /// Isometry-invariant signature: abstract component labels collapsed
    /// onto canonical members of their isomorphism classes, with the
    /// squared-length ratio of each component.
    pub fn abstract_signature(&self) -> Vec<(Family, usize, Q)> {
        let mut v: Vec<(Family, usize, Q)> = self
            .orthogonal_components()
            .into_iter()
            .map(|c| {
                let (f, r) = canonical_abstract(c.embedded.family, c.embedded.rank);
                (f, r, c.embedded.k)
            })
            .collect();
        v.sort();
        v
    }
}

/// Collapse abstractly isomorphic irreducible labels onto a canonical
/// member. `D_2` is reducible and never appears as an irreducible component.
pub fn canonical_abstract(family: Family, rank: usize) -> (Family, usize) {
    match (family, rank) {
        (Family::B, 1) | (Family::C, 1) => (Family::A, 1),
        (Family::C, 2) => (Family::B, 2),
        (Family::D, 3) => (Family::A, 3),
        other => other,
    }
}

/// One irreducible (or classical-block) component with its embedded label.
#[derive(Clone, Debug)]
pub struct Component {
    pub sub: SubRootSystem,
    pub embedded: EmbeddedType,
}

/// Embedded type of a component inside its parent: family, rank, and the
/// squared-length ratio `k` of its short roots to the parent's short roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EmbeddedType {
    pub family: Family,
    pub rank: usize,
    pub k: Q,
}

impl fmt::Display for EmbeddedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}[k={}]", self.family, self.rank, crate::rat::fmt_q(&self.k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> TypeLabel {
        TypeLabel::parse(s).unwrap()
    }

    #[test]
    fn root_counts_and_short_lengths() {
        for s in [
            "A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4", "C2", "C3", "C4", "BC1", "BC2",
            "BC3", "D2", "D3", "D4", "D5", "G2", "F4", "E6", "E7", "E8",
        ] {
            let l = label(s);
            let rs = RootSystem::build(l).unwrap();
            assert_eq!(rs.num_roots(), l.root_count(), "{s}");
            let min = (0..rs.num_roots() as u32)
                .map(|i| rs.norm2_of(i).clone())
                .min()
                .unwrap();
            assert_eq!(min, q(1), "short length of {s}");
            // positive system is half of the roots for reduced systems
            if l.is_reduced() {
                assert_eq!(rs.positive_ids().len() * 2, rs.num_roots(), "{s}");
            }
        }
        // The C-family keeps its metric at rank one: the lone root has norm 4·(1/2) = 2.
        let c1 = RootSystem::build(label("C1")).unwrap();
        assert_eq!(c1.num_roots(), 2);
        assert_eq!(c1.norm2_of(0), &q(2));
    }

    #[test]
    fn g2_length_census() {
        let g2 = RootSystem::build(label("G2")).unwrap();
        let mut short = 0;
        let mut long = 0;
        for i in 0..g2.num_roots() as u32 {
            match g2.norm2_of(i) {
                n if *n == q(1) => short += 1,
                n if *n == q(3) => long += 1,
                n => panic!("unexpected G2 norm {n}"),
            }
        }
        assert_eq!((short, long), (6, 6));
        // First simple root is long, second short.
        assert_eq!(g2.space.norm2(&g2.simple_roots()[0]), q(3));
        assert_eq!(g2.space.norm2(&g2.simple_roots()[1]), q(1));
    }

    #[test]
    fn bc2_roots_match_catalog() {
        let bc2 = RootSystem::build(label("BC2")).unwrap();
        assert_eq!(bc2.num_roots(), 12);
        for v in [
            vec![q(1), q(0)],
            vec![q(2), q(0)],
            vec![q(1), q(1)],
            vec![q(1), q(-1)],
        ] {
            assert!(bc2.index_of(&Weight::new(v)).is_some());
        }
    }

    #[test]
    fn fundamental_weight_samples() {
        // A_1: ω_1 = α_1 / 2.
        let a1 = RootSystem::build(label("A1")).unwrap();
        let fw = a1.fundamental_weights().unwrap();
        assert_eq!(fw[0], a1.simple_roots()[0].scale(&qr(1, 2)));

        // F_4: |ω_4|² = 1 under the short-length-1 normalization.
        let f4 = RootSystem::build(label("F4")).unwrap();
        let fw = f4.fundamental_weights().unwrap();
        assert_eq!(f4.space.norm2(&fw[3]), q(1));

        // E_8: |2(ω_1 + … + ω_8)|² = 1240.
        let e8 = RootSystem::build(label("E8")).unwrap();
        let fw = e8.fundamental_weights().unwrap();
        let mut s = Weight::zero(8);
        for w in &fw {
            s = s.add(w);
        }
        let twice = s.scale(&q(2));
        assert_eq!(e8.space.norm2(&twice), q(1240));
    }

    #[test]
    fn generated_subsystem_examples() {
        let g2 = RootSystem::build(label("G2")).unwrap();
        assert_eq!(g2.generated_subsystem(&[]).unwrap().len(), 0);
        let alpha = g2.simple_roots()[0].clone(); // long
        let beta = g2.simple_roots()[1].clone(); // short
        let single = g2.generated_subsystem(&[alpha.clone()]).unwrap();
        assert_eq!(single.len(), 2);
        // ⟨α, α+3β⟩ is the long A_2.
        let a2l = g2
            .generated_subsystem(&[alpha.clone(), alpha.add(&beta.scale(&q(3)))])
            .unwrap();
        assert_eq!(a2l.len(), 6);
        assert!(a2l.roots().all(|r| g2.space.norm2(r) == q(3)));
        // idempotence
        let again = g2
            .generated_subsystem(&a2l.roots().cloned().collect::<Vec<_>>())
            .unwrap();
        assert_eq!(again.ids(), a2l.ids());
    }

    #[test]
    fn short_subsystem_examples() {
        let g2 = RootSystem::build(label("G2")).unwrap();
        let short = g2.full_subsystem().short_subsystem();
        assert_eq!(short.len(), 6);
        assert!(short.is_reflection_closed());

        let a3 = RootSystem::build(label("A3")).unwrap();
        assert_eq!(a3.full_subsystem().short_subsystem().len(), a3.num_roots());

        // (BC_n)° = {±e_i}.
        let bc3 = RootSystem::build(label("BC3")).unwrap();
        let short = bc3.full_subsystem().short_subsystem();
        assert_eq!(short.len(), 6);
        assert!(short.roots().all(|r| bc3.space.norm2(r) == q(1)));
    }

    #[test]
    fn cusp_product_examples() {
        let a2 = RootSystem::build(label("A2")).unwrap();
        let full = a2.full_subsystem();
        let a = &a2.simple_roots()[0];
        let b = &a2.simple_roots()[1];
        assert_eq!(full.cusp_product(a, a).unwrap(), q(2));
        assert_eq!(full.cusp_product(a, b).unwrap(), q(-1));
        assert_eq!(full.cusp_product_by_strings(a, b).unwrap(), -1);

        // G_2 asymmetric pair: β short simple, α long simple.
        let g2 = RootSystem::build(label("G2")).unwrap();
        let full = g2.full_subsystem();
        let alpha = &g2.simple_roots()[0];
        let beta = &g2.simple_roots()[1];
        assert_eq!(full.cusp_product(beta, alpha).unwrap(), q(-1));
        assert_eq!(full.cusp_product(alpha, beta).unwrap(), q(-3));
        assert_eq!(full.cusp_product_by_strings(beta, alpha).unwrap(), -1);
        assert_eq!(full.cusp_product_by_strings(alpha, beta).unwrap(), -3);
    }

    #[test]
    fn cusp_product_string_oracle_exhaustive_rank_le_3() {
        for s in ["A1", "A2", "A3", "B2", "B3", "C3", "BC2", "D3", "G2"] {
            let rs = RootSystem::build(label(s)).unwrap();
            let full = rs.full_subsystem();
            for a in rs.roots() {
                for b in rs.roots() {
                    let formula = full.cusp_product(b, a).unwrap();
                    let string = full.cusp_product_by_strings(b, a).unwrap();
                    assert_eq!(formula, q(string), "{s}: ⟨{b:?},{a:?}⟩");
                }
            }
        }
    }

    #[test]
    fn components_examples() {
        // D_2 ⊂ D_4 is one block component of embedded type D_2.
        let d4 = RootSystem::build(label("D4")).unwrap();
        let e = |i: usize| Weight::basis(4, i);
        let d2 = d4
            .generated_subsystem(&[e(0).sub(&e(1)), e(0).add(&e(1))])
            .unwrap();
        let comps = d2.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].embedded.family, Family::D);
        assert_eq!(comps[0].embedded.rank, 2);
        assert_eq!(comps[0].embedded.k, q(1));

        // {±e_1} ⊂ BC_3 is embedded B_1 with k = 1; {±2e_1} is C_1 with k = 4.
        let bc3 = RootSystem::build(label("BC3")).unwrap();
        let e = |i: usize| Weight::basis(3, i);
        let b1 = bc3.generated_subsystem(&[e(0)]).unwrap();
        let c = b1.components();
        assert_eq!((c[0].embedded.family, c[0].embedded.rank, c[0].embedded.k.clone()),
                   (Family::B, 1, q(1)));
        let c1 = bc3.generated_subsystem(&[e(0).scale(&q(2))]).unwrap();
        let c = c1.components();
        assert_eq!((c[0].embedded.family, c[0].embedded.rank, c[0].embedded.k.clone()),
                   (Family::C, 1, q(4)));
    }

    #[test]
    fn orthogonal_sum_builds() {
        let s = RootSystem::orthogonal_sum(&[label("A1"), label("A1")]).unwrap();
        assert_eq!(s.num_roots(), 4);
        assert_eq!(s.rank(), 2);
        let comps = s.full_subsystem().components();
        assert_eq!(comps.len(), 2);
    }
}
