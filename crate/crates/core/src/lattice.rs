//! Ambient metric spaces, weights, lattices, and the maximal root system of
//! a lattice.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::rat::{floor_sqrt_q, Q};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

/// A rational vector space of fixed dimension with an exact symmetric
/// positive definite inner product.
#[derive(Clone, PartialEq, Eq)]
pub struct AmbientSpace {
    dim: usize,
    gram: Mat,
}

impl AmbientSpace {
    pub fn new(gram: Mat) -> Result<Self> {
        let dim = gram.len();
        for row in &gram {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotPositiveDefinite);
                }
            }
        }
        if !linalg::is_positive_definite(&gram) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(AmbientSpace { dim, gram })
    }

    /// Standard Euclidean space: identity Gram matrix.
    pub fn euclidean(dim: usize) -> Self {
        AmbientSpace {
            dim,
            gram: linalg::identity(dim),
        }
    }

    /// Euclidean space with every inner product scaled by `s`.
    pub fn scaled_euclidean(dim: usize, s: Q) -> Result<Self> {
        if !s.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        let mut gram = linalg::identity(dim);
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = s.clone();
        }
        AmbientSpace::new(gram)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    /// The inner product `(v, w)` of two weights.
    pub fn pairing(&self, v: &Weight, w: &Weight) -> Result<Q> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        if w.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: w.dim(),
            });
        }
        let gw = linalg::mat_vec(&self.gram, &w.coords);
        Ok(v.coords.iter().zip(&gw).map(|(a, b)| a * b).sum())
    }

    /// Squared length `(v, v)`.
    pub fn norm2(&self, v: &Weight) -> Q {
        self.pairing(v, v).expect("dimension checked by caller")
    }

    /// Reflection of `lambda` in the hyperplane orthogonal to `alpha`:
    /// `λ − (2(λ,α)/(α,α)) α`.
    pub fn reflect(&self, lambda: &Weight, alpha: &Weight) -> Result<Weight> {
        let aa = self.pairing(alpha, alpha)?;
        if aa.is_zero() {
            return Err(Error::ZeroVector);
        }
        let la = self.pairing(lambda, alpha)?;
        let f = Q::from_integer(BigInt::from(2)) * la / aa;
        Ok(Weight::new(
            lambda
                .coords
                .iter()
                .zip(&alpha.coords)
                .map(|(l, a)| l - &f * a)
                .collect(),
        ))
    }

    /// `2(λ,α)/(α,α)`, the pairing of `λ` with the coroot of `α`.
    pub fn coroot_pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<Q> {
        let aa = self.pairing(alpha, alpha)?;
        if aa.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Q::from_integer(BigInt::from(2)) * self.pairing(lambda, alpha)? / aa)
    }
}

impl fmt::Debug for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AmbientSpace(dim={})", self.dim)
    }
}

/// A vector with exact rational coordinates in the ambient basis.
///
/// Coordinates are stored reduced, so equality and hashing are canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Weight {
            coords: vec![Q::zero(); dim],
        }
    }

    /// Standard basis vector `e_i` (0-indexed).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![Q::zero(); dim];
        coords[i] = Q::from_integer(BigInt::from(1));
        Weight { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Q) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * s).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rat::fmt_q(c))?;
        }
        write!(f, ")")
    }
}

/// A finite-rank free abelian group inside an ambient space, given by an
/// independent basis.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub space: AmbientSpace,
    pub basis: Vec<Weight>,
}

impl Lattice {
    pub fn new(space: AmbientSpace, basis: Vec<Weight>) -> Result<Self> {
        for b in &basis {
            if b.dim() != space.dim() {
                return Err(Error::DimensionMismatch {
                    expected: space.dim(),
                    got: b.dim(),
                });
            }
        }
        let m: Mat = basis.iter().map(|b| b.coords.clone()).collect();
        if linalg::rank(&m) != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Lattice { space, basis })
    }

    /// Standard lattice `Z^n` in the given space.
    pub fn standard(space: AmbientSpace) -> Self {
        let basis = (0..space.dim()).map(|i| Weight::basis(space.dim(), i)).collect();
        Lattice { space, basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the lattice basis, if `v` lies in the rational
    /// span of the basis.
    pub fn span_coordinates(&self, v: &Weight) -> Option<Vec<Q>> {
        // Solve B^T c = v restricted to the span: use the Gram system
        // (B G B^T) c = B G v, then verify.
        let b: Mat = self.basis.iter().map(|w| w.coords.clone()).collect();
        let g = self.space.gram();
        let bg = linalg::mat_mul(&b, g);
        let bgbt = linalg::mat_mul(&bg, &linalg::transpose(&b));
        let rhs = linalg::mat_vec(&bg, &v.coords);
        let c = linalg::solve(&bgbt, &rhs)?;
        // Verify exactly: sum c_i b_i == v.
        let mut acc = Weight::zero(self.space.dim());
        for (ci, bi) in c.iter().zip(&self.basis) {
            acc = acc.add(&bi.scale(ci));
        }
        (acc == *v).then_some(c)
    }

    /// Membership test: `v` is an integer combination of the basis.
    pub fn contains(&self, v: &Weight) -> bool {
        match self.span_coordinates(v) {
            Some(c) => c.iter().all(|x| x.is_integer()),
            None => false,
        }
    }

    /// All nonzero lattice vectors `v` with `(v,v) ≤ bound`, enumerated by a
    /// Cholesky-style bounded coordinate search. Output is sorted.
    pub fn vectors_with_norm_at_most(&self, bound: &Q) -> Vec<Weight> {
        let r = self.rank();
        if r == 0 || !bound.is_positive() {
            return Vec::new();
        }
        // Gram matrix of the basis and its LDL^T decomposition.
        let g: Mat = self
            .basis
            .iter()
            .map(|bi| self.basis.iter().map(|bj| self.space.pairing(bi, bj).unwrap()).collect())
            .collect();
        // q(c) = sum_i d[i] (c_i + sum_{j>i} l[i][j] c_j)^2
        let mut d = vec![Q::zero(); r];
        let mut l = linalg::identity(r);
        let mut a = g.clone();
        for i in 0..r {
            d[i] = a[i][i].clone();
            for j in i + 1..r {
                l[i][j] = &a[i][j] / &d[i];
            }
            for j in i + 1..r {
                for k in j..r {
                    let sub = &l[i][j] * &l[i][k] * &d[i];
                    a[j][k] -= sub;
                    if j != k {
                        a[k][j] = a[j][k].clone();
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut coeffs = vec![BigInt::zero(); r];
        enumerate_level(
            r,
            &d,
            &l,
            bound,
            &mut coeffs,
            &mut |c: &[BigInt]| {
                if c.iter().all(|x| x.is_zero()) {
                    return;
                }
                let mut v = Weight::zero(self.space.dim());
                for (ci, bi) in c.iter().zip(&self.basis) {
                    v = v.add(&bi.scale(&Q::from_integer(ci.clone())));
                }
                out.push(v);
            },
        );
        out.sort();
        out
    }
}

/// Recursive Fincke–Pohst style enumeration over coordinates
/// `level-1, level-2, ..., 0` of the quadratic form described by `(d, l)`.
fn enumerate_level(
    level: usize,
    d: &[Q],
    l: &Mat,
    remaining: &Q,
    coeffs: &mut Vec<BigInt>,
    emit: &mut impl FnMut(&[BigInt]),
) {
    if remaining.is_negative() {
        return;
    }
    if level == 0 {
        emit(coeffs);
        return;
    }
    let i = level - 1;
    // center = -sum_{j>i} l[i][j] c_j
    let mut center = Q::zero();
    for j in i + 1..coeffs.len() {
        center -= &l[i][j] * Q::from_integer(coeffs[j].clone());
    }
    // |c_i - center| ≤ sqrt(remaining / d_i)
    let radius2 = remaining / &d[i];
    let s = floor_sqrt_q(&radius2);
    // integer range [ceil(center - s'), floor(center + s')] with s' = exact sqrt bound;
    // use s+1 margin and filter by the exact form value.
    let lo = (&center - Q::from_integer(&s + 1)).ceil().to_integer();
    let hi = (&center + Q::from_integer(&s + 1)).floor().to_integer();
    let mut c = lo;
    while c <= hi {
        let diff = Q::from_integer(c.clone()) - &center;
        let used = &d[i] * &diff * &diff;
        if &used <= remaining {
            coeffs[i] = c.clone();
            let rest = remaining - &used;
            enumerate_level(i, d, l, &rest, coeffs, emit);
        }
        c += 1;
    }
    coeffs[i] = BigInt::zero();
}

/// The set `Ψ_L` of all roots of the lattice: nonzero `α ∈ L` such that
/// `2(λ,α)/(α,α)` is an integer for every `λ ∈ L`.
///
/// Every root satisfies `|α| ≤ 2·max_i |b_i|` over the basis, so a bounded
/// enumeration is exhaustive.
pub fn maximal_root_system(l: &Lattice) -> Vec<Weight> {
    let bound: Q = l
        .basis
        .iter()
        .map(|b| l.space.norm2(b))
        .max()
        .map(|m| m * Q::from_integer(BigInt::from(4)))
        .unwrap_or_else(Q::zero);
    let mut roots = Vec::new();
    for v in l.vectors_with_norm_at_most(&bound) {
        let strong_integral = l
            .basis
            .iter()
            .all(|b| l.space.coroot_pairing(b, &v).unwrap().is_integer());
        if strong_integral {
            roots.push(v);
        }
    }
    roots
}

/// Decide whether `phi` is a root system in `L`: reflection-closed and
/// strongly integral against every lattice vector. Cross-checked against the
/// sandwich criterion `ZΦ ⊆ L ⊆ Λ_Φ(V)`.
pub fn is_root_system_in_lattice(phi: &[Weight], l: &Lattice) -> Result<bool> {
    for a in phi {
        if a.dim() != l.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: l.space.dim(),
                got: a.dim(),
            });
        }
    }
    if phi.iter().any(|a| a.is_zero()) {
        return Ok(false);
    }
    let set: std::collections::HashSet<&Weight> = phi.iter().collect();
    let reflection_closed = phi.iter().all(|a| {
        phi.iter()
            .all(|b| set.contains(&l.space.reflect(b, a).unwrap()))
    });
    let strong_integrality = phi.iter().all(|a| {
        l.basis
            .iter()
            .all(|b| l.space.coroot_pairing(b, a).unwrap().is_integer())
    });
    let direct = reflection_closed && strong_integrality;

    // Sandwich criterion: ZΦ ⊆ L and L ⊆ Λ_Φ(V). The first needs each root in L
    // (integrality of Φ against Φ is implied by strong integrality); the second
    // is strong integrality of the basis. Reflection closure within the span is
    // the root-system-in-V condition.
    let sandwich =
        reflection_closed && phi.iter().all(|a| l.contains(a)) && strong_integrality;
    debug_assert_eq!(direct && phi.iter().all(|a| l.contains(a)), sandwich);
    Ok(direct && phi.iter().all(|a| l.contains(a)))
}

/// The integral-weight lattice of `phi` relative to a reference lattice `l`:
/// `{λ ∈ span_Q(l) : 2(λ,α)/(α,α) ∈ Z for all α ∈ phi}`, returned as the
/// direct sum of the dual lattice of the coroot lattice of `phi` inside
/// `span(phi)` and the sublattice of `l` orthogonal to `phi`.
pub fn integral_weight_lattice(phi: &[Weight], l: &Lattice) -> Result<Lattice> {
    if phi.is_empty() {
        return Ok(l.clone());
    }
    let space = &l.space;
    // Reflection closure sanity.
    let set: std::collections::HashSet<&Weight> = phi.iter().collect();
    for a in phi {
        for b in phi {
            if !set.contains(&space.reflect(b, a)?) {
                return Err(Error::NotReflectionClosed);
            }
        }
    }
    // Coroots 2α/(α,α).
    let two = Q::from_integer(BigInt::from(2));
    let coroots: Vec<Weight> = phi
        .iter()
        .map(|a| {
            let aa = space.norm2(a);
            a.scale(&(&two / &aa))
        })
        .collect();
    // An independent spanning subset of the coroots.
    let mut span_basis: Vec<Weight> = Vec::new();
    for c in &coroots {
        let mut m: Mat = span_basis.iter().map(|w| w.coords.clone()).collect();
        m.push(c.coords.clone());
        if linalg::rank(&m) == span_basis.len() + 1 {
            span_basis.push(c.clone());
        }
    }
    let r = span_basis.len();
    // Z-basis of the coroot lattice: express all coroots in the spanning
    // subset, clear denominators, and column-reduce.
    let sb: Mat = span_basis.iter().map(|w| w.coords.clone()).collect();
    let g = space.gram();
    let sbg = linalg::mat_mul(&sb, g);
    let gram_sb = linalg::mat_mul(&sbg, &linalg::transpose(&sb));
    let coords: Vec<Vec<Q>> = coroots
        .iter()
        .map(|c| {
            let rhs = linalg::mat_vec(&sbg, &c.coords);
            linalg::solve(&gram_sb, &rhs).expect("independent spanning subset")
        })
        .collect();
    let coroot_lattice = integer_span(&coords);
    // Dual basis inside span(phi): vectors v_j with (v_j, c_i) = δ_ij over the
    // coroot lattice basis.
    let clat_vectors: Vec<Weight> = coroot_lattice
        .iter()
        .map(|c| {
            let mut v = Weight::zero(space.dim());
            for (ci, bi) in c.iter().zip(&span_basis) {
                v = v.add(&bi.scale(ci));
            }
            v
        })
        .collect();
    let cb: Mat = clat_vectors.iter().map(|w| w.coords.clone()).collect();
    let cbg = linalg::mat_mul(&cb, g);
    let gram_c = linalg::mat_mul(&cbg, &linalg::transpose(&cb));
    let ginv = linalg::inverse(&gram_c).ok_or(Error::DependentBasis)?;
    let mut result_basis: Vec<Weight> = Vec::new();
    for j in 0..r {
        let mut v = Weight::zero(space.dim());
        for (i, ci) in clat_vectors.iter().enumerate() {
            v = v.add(&ci.scale(&ginv[i][j]));
        }
        result_basis.push(v);
    }
    // Sublattice of l orthogonal to phi: integer kernel of the pairing matrix.
    let pairings: Vec<Vec<Q>> = span_basis
        .iter()
        .map(|c| l.basis.iter().map(|b| space.pairing(b, c).unwrap()).collect())
        .collect();
    if !pairings.is_empty() {
        let int_rows: Vec<Vec<BigInt>> = pairings
            .iter()
            .map(|row| {
                let cleared = linalg::primitive_integer(row);
                if cleared.iter().all(|x| x.is_zero()) {
                    vec![BigInt::zero(); row.len()]
                } else {
                    cleared
                }
            })
            .collect();
        for k in linalg::integer_kernel(&int_rows) {
            let mut v = Weight::zero(space.dim());
            for (ci, bi) in k.iter().zip(&l.basis) {
                v = v.add(&bi.scale(&Q::from_integer(ci.clone())));
            }
            if !v.is_zero() {
                result_basis.push(v);
            }
        }
    }
    Lattice::new(space.clone(), result_basis)
}

/// Z-basis of the integer span of rational vectors (as coordinate rows).
fn integer_span(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    // Clear a common denominator D over all entries, column-reduce the integer
    // matrix transposed, and rescale back by 1/D.
    use num_integer::Integer;
    let mut denom = BigInt::from(1);
    for row in rows {
        for x in row {
            denom = denom.lcm(x.denom());
        }
    }
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|x| x.numer() * (&denom / x.denom())).collect())
        .collect();
    let basis = hermite_row_basis(&int_rows);
    basis
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| Q::new(x, denom.clone()))
                .collect()
        })
        .collect()
}

/// Row-style Hermite reduction: returns a Z-basis of the row span.
fn hermite_row_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    use num_integer::Integer;
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    if a.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut pivot_row = 0usize;
    for c in 0..cols {
        loop {
            let piv = (pivot_row..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by_key(|&i| a[i][c].magnitude().clone());
            let Some(piv) = piv else { break };
            a.swap(pivot_row, piv);
            let mut all_clear = true;
            for i in pivot_row + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[pivot_row][c]);
                for j in 0..cols {
                    let sub = &f * &a[pivot_row][j];
                    a[i][j] -= sub;
                }
                if !a[i][c].is_zero() {
                    all_clear = false;
                }
            }
            if all_clear {
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == a.len() {
            break;
        }
    }
    a.truncate(pivot_row);
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qr};

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn pairing_examples() {
        let e2 = AmbientSpace::euclidean(2);
        let e1 = Weight::basis(2, 0);
        assert_eq!(e2.pairing(&e1, &e1).unwrap(), q(1));
        assert_eq!(e2.pairing(&e1, &Weight::zero(2)).unwrap(), q(0));

        // A_2 with short roots of squared length 1.
        let a2 = AmbientSpace::new(vec![vec![q(1), qr(-1, 2)], vec![qr(-1, 2), q(1)]]).unwrap();
        let a = Weight::basis(2, 0);
        let b = Weight::basis(2, 1);
        assert_eq!(a2.pairing(&a, &b).unwrap(), qr(-1, 2));
    }

    #[test]
    fn pairing_dimension_error() {
        let e2 = AmbientSpace::euclidean(2);
        let bad = Weight::basis(3, 0);
        assert!(e2.pairing(&bad, &bad).is_err());
    }

    #[test]
    fn reflect_examples() {
        let e2 = AmbientSpace::euclidean(2);
        let alpha = w(&[1, -1]);
        assert_eq!(e2.reflect(&alpha, &alpha).unwrap(), alpha.neg());
        // reflect(e_1, e_1 - e_2) = e_2
        assert_eq!(e2.reflect(&w(&[1, 0]), &alpha).unwrap(), w(&[0, 1]));
        // fixed hyperplane
        let ortho = w(&[1, 1]);
        assert_eq!(e2.reflect(&ortho, &alpha).unwrap(), ortho);
        // zero root rejected
        assert!(e2.reflect(&alpha, &Weight::zero(2)).is_err());
    }

    #[test]
    fn maximal_root_system_rank_one() {
        // L = Z e_1 with (e_1,e_1) = 1 → {±e_1, ±2e_1}
        let l = Lattice::standard(AmbientSpace::euclidean(1));
        let psi = maximal_root_system(&l);
        assert_eq!(psi, vec![w(&[-2]), w(&[-1]), w(&[1]), w(&[2])]);

        // Scale invariance: (e_1,e_1) = 3 gives the same answer.
        let l3 = Lattice::standard(AmbientSpace::scaled_euclidean(1, q(3)).unwrap());
        let psi3 = maximal_root_system(&l3);
        assert_eq!(psi3, vec![w(&[-2]), w(&[-1]), w(&[1]), w(&[2])]);
    }

    #[test]
    fn maximal_root_system_hexagonal() {
        // The A_2 root lattice (short length² = 1) supports the full G_2:
        // the six norm-3 vectors also satisfy strong integrality.
        let a2 = AmbientSpace::new(vec![vec![q(1), qr(-1, 2)], vec![qr(-1, 2), q(1)]]).unwrap();
        let l = Lattice::standard(a2.clone());
        let psi = maximal_root_system(&l);
        assert_eq!(psi.len(), 12);
        let mut short = 0;
        let mut long = 0;
        for v in &psi {
            match a2.norm2(v) {
                n if n == q(1) => short += 1,
                n if n == q(3) => long += 1,
                other => panic!("unexpected norm {other}"),
            }
        }
        assert_eq!((short, long), (6, 6));
        let l2 = Lattice::standard(a2);
        assert!(is_root_system_in_lattice(&psi, &l2).unwrap());
    }

    #[test]
    fn root_system_in_lattice_examples() {
        let l = Lattice::standard(AmbientSpace::euclidean(1));
        assert!(is_root_system_in_lattice(&[w(&[1]), w(&[-1])], &l).unwrap());
        assert!(!is_root_system_in_lattice(&[w(&[3]), w(&[-3])], &l).unwrap());
        assert!(is_root_system_in_lattice(&[], &l).unwrap());
    }

    #[test]
    fn integral_weight_lattice_examples() {
        // Φ = A_1 = {±e_1}, |e_1|² = 1: Λ_Φ = (1/2)Z e_1.
        let l = Lattice::standard(AmbientSpace::euclidean(1));
        let lam = integral_weight_lattice(&[w(&[1]), w(&[-1])], &l).unwrap();
        assert_eq!(lam.basis.len(), 1);
        let half = Weight::new(vec![qr(1, 2)]);
        assert!(lam.contains(&half));
        assert!(!lam.contains(&Weight::new(vec![qr(1, 4)])));

        // Φ = ∅ returns the reference lattice itself.
        let triv = integral_weight_lattice(&[], &l).unwrap();
        assert_eq!(triv.basis, l.basis);
    }

    #[test]
    fn integral_weight_lattice_a2_index_three() {
        let a2 = AmbientSpace::new(vec![vec![q(1), qr(-1, 2)], vec![qr(-1, 2), q(1)]]).unwrap();
        let l = Lattice::standard(a2);
        let roots: Vec<Weight> = vec![
            w(&[1, 0]),
            w(&[-1, 0]),
            w(&[0, 1]),
            w(&[0, -1]),
            w(&[1, 1]),
            w(&[-1, -1]),
        ];
        let lam = integral_weight_lattice(&roots, &l).unwrap();
        // Index of the root lattice in the weight lattice is det of the
        // change of basis = 3 for A_2.
        let c1 = lam.span_coordinates(&w(&[1, 0])).unwrap();
        let c2 = lam.span_coordinates(&w(&[0, 1])).unwrap();
        let idx = linalg::det(&vec![c1, c2]);
        assert_eq!(idx.abs(), q(3));
        // ZΦ ⊆ result.
        for r in &roots {
            assert!(lam.contains(r));
        }
    }

    #[test]
    fn short_vector_enumeration_counts() {
        // Hexagonal lattice: kissing number 6 at norm 1.
        let a2 = AmbientSpace::new(vec![vec![q(1), qr(-1, 2)], vec![qr(-1, 2), q(1)]]).unwrap();
        let l = Lattice::standard(a2);
        assert_eq!(l.vectors_with_norm_at_most(&q(1)).len(), 6);
        assert_eq!(l.vectors_with_norm_at_most(&q(3)).len(), 12);
    }
}
