//! The character ring in the orbit-sum basis: half-sums `δ_Φ`, the
//! characters `F_{Φ,W}`, leading terms `2δ'_Φ` and `e(Φ)`, products over
//! orthogonal components, exact equality tests, and exact linear-relation
//! discovery by integer-preserving elimination.

use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::linalg;
use crate::rat::{qr, Q};
use crate::roots::{Family, Label, RootSystem, SubRootSystem};
use crate::weyl::{self, Isometry, SymmetrySpec};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

/// A character stored sparsely in the basis of normalized orbit sums
/// `χ*_{λ,W}`, keyed by the canonical representative of each orbit.
#[derive(Clone)]
pub struct Character {
    pub sym: SymmetrySpec,
    pub terms: BTreeMap<Weight, Q>,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({} terms over {})", self.terms.len(), self.sym.base.label)
    }
}

impl Character {
    /// The constant character `1`.
    pub fn one(sym: SymmetrySpec) -> Character {
        let dim = sym.base.space.dim();
        let mut terms = BTreeMap::new();
        terms.insert(Weight::zero(dim), Q::one());
        Character { sym, terms }
    }

    pub fn constant_term(&self) -> Q {
        let zero = Weight::zero(self.sym.base.space.dim());
        self.terms.get(&zero).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, key: &Weight) -> Q {
        let canon = weyl::canonical_rep(&self.sym, key);
        self.terms.get(&canon).cloned().unwrap_or_else(Q::zero)
    }

    /// Keys sorted by (squared length, coordinates).
    pub fn sorted_keys(&self) -> Vec<&Weight> {
        let mut keys: Vec<&Weight> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let na = self.sym.base.space.norm2(a);
            let nb = self.sym.base.space.norm2(b);
            na.cmp(&nb).then_with(|| a.cmp(b))
        });
        keys
    }

    /// The keys of maximal squared length.
    pub fn longest_keys(&self) -> Vec<&Weight> {
        let max = self
            .terms
            .keys()
            .map(|k| self.sym.base.space.norm2(k))
            .max();
        match max {
            None => Vec::new(),
            Some(m) => self
                .terms
                .keys()
                .filter(|k| self.sym.base.space.norm2(k) == m)
                .collect(),
        }
    }

    /// Apply an ambient isometry to every key and re-canonicalize.
    pub fn map_keys(&self, gamma: &Isometry) -> Character {
        let mut terms: BTreeMap<Weight, Q> = BTreeMap::new();
        for (k, c) in &self.terms {
            let key = weyl::canonical_rep(&self.sym, &gamma.apply(k));
            let entry = terms.entry(key).or_insert_with(Q::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Character {
            sym: self.sym.clone(),
            terms,
        }
    }
}

/// Half the sum of the positive roots, `δ_Φ`. Rejects non-reduced systems.
pub fn half_sum(phi: &SubRootSystem) -> Result<Weight> {
    if !phi.is_reduced() {
        return Err(Error::NotReduced);
    }
    Ok(phi.two_delta().scale(&qr(1, 2)))
}

/// Leading data of a sub-root system: the dominant weight `2δ'_Φ`, its
/// fundamental-weight coordinates, and `e(Φ) = |2δ'_Φ|²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub two_delta_prime: Weight,
    pub fw_coords: Option<Vec<BigInt>>,
    pub e: Q,
}

pub fn leading_term(phi: &SubRootSystem) -> Result<LeadingData> {
    if !phi.is_reduced() {
        return Err(Error::NotReduced);
    }
    let psi = &phi.parent;
    let two_delta_prime = weyl::dominant_rep(psi, &phi.two_delta());
    let e = psi.space.norm2(&two_delta_prime);
    let coords = psi.fw_coords(&two_delta_prime);
    let fw_coords: Option<Vec<BigInt>> = coords
        .iter()
        .map(crate::rat::as_integer)
        .collect::<Option<Vec<_>>>();
    Ok(LeadingData {
        two_delta_prime,
        fw_coords,
        e,
    })
}

/// The character `F_{Φ,W} = Σ_{w∈W_Φ} sign(w) χ*_{δ_Φ − wδ_Φ, W}`, stored by
/// canonical orbit representatives.
pub fn character_f(phi: &SubRootSystem, sym: &SymmetrySpec, cap: u64) -> Result<Character> {
    if !Arc::ptr_eq(&phi.parent, &sym.base) && phi.parent.roots() != sym.base.roots() {
        return Err(Error::ContextMismatch);
    }
    let delta = half_sum(phi)?;
    let orbit = weyl::signed_orbit(&delta, phi, cap)?;
    let mut terms: BTreeMap<Weight, Q> = BTreeMap::new();
    for el in orbit {
        let key = weyl::canonical_rep(sym, &delta.sub(&el.weight));
        let entry = terms.entry(key).or_insert_with(Q::zero);
        *entry += crate::rat::q(el.sign as i64);
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(Character {
        sym: sym.clone(),
        terms,
    })
}

/// Realize a sub-root system as a root system in its own right (same space,
/// simple system inherited from the parent's positive system).
pub fn restriction(phi: &SubRootSystem) -> Result<Arc<RootSystem>> {
    if !phi.is_reflection_closed() {
        return Err(Error::NotReflectionClosed);
    }
    let parent = &phi.parent;
    let roots: Vec<Weight> = phi.roots().cloned().collect();
    let simple: Vec<Weight> = phi
        .simple_ids()
        .iter()
        .map(|&i| parent.root(i).clone())
        .collect();
    let labels: Vec<_> = phi
        .components()
        .iter()
        .map(|c| crate::roots::TypeLabel::new(c.embedded.family, c.embedded.rank))
        .collect::<Result<_>>()?;
    RootSystem::in_space(parent.space.clone(), roots, simple, Label::Composite(labels))
}

/// Pointwise product of characters over pairwise-orthogonal sub-parents:
/// coefficients multiply, keys add, then re-canonicalize under the union
/// context (Weyl group of the union extended by the parts' outer maps).
pub fn product_character(parts: &[Character]) -> Result<Character> {
    let first = parts.first().ok_or_else(|| Error::Usage("empty product".into()))?;
    let space = first.sym.base.space.clone();
    for p in parts {
        if p.sym.base.space != space {
            return Err(Error::ContextMismatch);
        }
    }
    // Pairwise orthogonality of the parents.
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            for a in p.sym.base.roots() {
                for b in q.sym.base.roots() {
                    if !space.pairing(a, b)?.is_zero() {
                        return Err(Error::Usage("parents are not orthogonal".into()));
                    }
                }
            }
        }
    }
    let mut roots: Vec<Weight> = Vec::new();
    let mut simple: Vec<Weight> = Vec::new();
    let mut labels = Vec::new();
    let mut outer: Vec<Isometry> = Vec::new();
    for p in parts {
        roots.extend(p.sym.base.roots().iter().cloned());
        simple.extend(p.sym.base.simple_roots().iter().cloned());
        match &p.sym.base.label {
            Label::Simple(t) => labels.push(*t),
            Label::Composite(ts) => labels.extend(ts.iter().copied()),
        }
        outer.extend(p.sym.outer_generators().iter().cloned());
    }
    let union = RootSystem::in_space(space, roots, simple, Label::Composite(labels))?;
    let sym = SymmetrySpec::with_outer(union, outer)?;
    let mut acc: BTreeMap<Weight, Q> = BTreeMap::new();
    acc.insert(Weight::zero(sym.base.space.dim()), Q::one());
    for p in parts {
        let mut next: BTreeMap<Weight, Q> = BTreeMap::new();
        for (k1, c1) in &acc {
            for (k2, c2) in &p.terms {
                let key = weyl::canonical_rep(&sym, &k1.add(k2));
                let entry = next.entry(key).or_insert_with(Q::zero);
                *entry += c1 * c2;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    Ok(Character { sym, terms: acc })
}

/// Exact equality in the orbit-sum basis. Contexts must agree.
pub fn characters_equal(c1: &Character, c2: &Character) -> Result<bool> {
    if !c1.sym.same_context(&c2.sym) {
        return Err(Error::ContextMismatch);
    }
    Ok(c1.terms == c2.terms)
}

/// A basis of the rational nullspace of the span of the given characters:
/// every returned vector `v` satisfies `Σ v_i·cs[i] = 0`. Vectors are
/// primitive integers with the first nonzero entry positive, in a
/// deterministic order.
pub fn linear_relations(cs: &[Character]) -> Result<Vec<Vec<BigInt>>> {
    if cs.is_empty() {
        return Ok(Vec::new());
    }
    for c in &cs[1..] {
        if !c.sym.same_context(&cs[0].sym) {
            return Err(Error::ContextMismatch);
        }
    }
    let mut keys: BTreeSet<&Weight> = BTreeSet::new();
    for c in cs {
        keys.extend(c.terms.keys());
    }
    let mut keys: Vec<&Weight> = keys.into_iter().collect();
    let space = &cs[0].sym.base.space;
    keys.sort_by(|a, b| {
        space
            .norm2(a)
            .cmp(&space.norm2(b))
            .then_with(|| a.cmp(b))
    });
    // Rows = keys, columns = characters; nullspace vectors combine columns.
    let matrix: Vec<Vec<Q>> = keys
        .iter()
        .map(|k| {
            cs.iter()
                .map(|c| c.terms.get(*k).cloned().unwrap_or_else(Q::zero))
                .collect()
        })
        .collect();
    Ok(linalg::nullspace(&matrix))
}

/// Factor counts of a reduced sub-root system of a `BC_n` or `C_n` parent:
/// `counts.a[m]` is the number of `A_{m-1}` block factors, etc.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorCounts {
    pub a: BTreeMap<usize, i64>,
    pub b: BTreeMap<usize, i64>,
    pub c: BTreeMap<usize, i64>,
    pub d: BTreeMap<usize, i64>,
}

pub fn factor_counts(phi: &SubRootSystem) -> Result<FactorCounts> {
    if !phi.is_reduced() {
        return Err(Error::NotReduced);
    }
    let mut out = FactorCounts::default();
    for comp in phi.components() {
        // A-blocks are keyed by block size: an A_{m-1} factor counts under m.
        let (map, key) = match comp.embedded.family {
            Family::A => (&mut out.a, comp.embedded.rank + 1),
            Family::B => (&mut out.b, comp.embedded.rank),
            Family::C => (&mut out.c, comp.embedded.rank),
            Family::D => (&mut out.d, comp.embedded.rank),
            other => {
                return Err(Error::UnsupportedParent(format!(
                    "unexpected factor family {other}"
                )))
            }
        };
        *map.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

/// The counting criterion for equality of `F_{Φ_1,W_n}` and `F_{Φ_2,W_n}`
/// inside a `BC_n` or `C_n` parent: for every `m ≥ 1`,
/// `b_m(Φ_1) = b_m(Φ_2)`, `a_{2m}(Φ_1) = a_{2m}(Φ_2)`, and
/// `a_{2m+1}(Φ_1) − a_{2m+1}(Φ_2) = c_m(Φ_2) − c_m(Φ_1) = d_{m+1}(Φ_2) − d_{m+1}(Φ_1)`.
pub fn classical_equal_criterion(phi1: &SubRootSystem, phi2: &SubRootSystem) -> Result<bool> {
    if !Arc::ptr_eq(&phi1.parent, &phi2.parent) && phi1.parent.roots() != phi2.parent.roots() {
        return Err(Error::ContextMismatch);
    }
    let n = match &phi1.parent.label {
        Label::Simple(t) if matches!(t.family, Family::BC | Family::C) => t.rank,
        other => {
            return Err(Error::UnsupportedParent(format!("{other}")));
        }
    };
    let c1 = factor_counts(phi1)?;
    let c2 = factor_counts(phi2)?;
    let get = |m: &BTreeMap<usize, i64>, k: usize| m.get(&k).copied().unwrap_or(0);
    for m in 1..=n {
        if get(&c1.b, m) != get(&c2.b, m) {
            return Ok(false);
        }
        // a_{2m}: A-blocks of size 2m.
        if get(&c1.a, 2 * m) != get(&c2.a, 2 * m) {
            return Ok(false);
        }
        let da = get(&c1.a, 2 * m + 1) - get(&c2.a, 2 * m + 1);
        let dc = get(&c2.c, m) - get(&c1.c, m);
        let dd = get(&c2.d, m + 1) - get(&c1.d, m + 1);
        if da != dc || dc != dd {
            return Ok(false);
        }
    }
    Ok(true)
}
