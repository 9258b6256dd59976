//! The polynomial calculus attached to sub-root systems of `BC_n`: the
//! determinant polynomials `a_n, b_n, b'_n, c_n, d_n`, the involution `σ`,
//! the specialization `ψ`, the generating functions `f_{Φ,Ψ}`, and the
//! batch verification of the identity families relating them.

use crate::characters::Character;
use crate::error::{Error, Result};
use crate::rat::{fmt_q, Q};
use crate::roots::{Family, Label, SubRootSystem};
use crate::weyl;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector for `x_0, x_1, …` with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Monomial(v)
    }

    pub fn from_exponents(v: Vec<u16>) -> Self {
        Monomial::trim(v)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn trim(mut v: Vec<u16>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![0u16; n];
        for (i, &e) in self.0.iter().enumerate() {
            v[i] += e;
        }
        for (i, &e) in other.0.iter().enumerate() {
            v[i] += e;
        }
        Monomial::trim(v)
    }

    /// Parity of the total exponent of odd-indexed variables.
    fn odd_exponent_parity(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == 1)
            .map(|(_, &e)| e as u32)
            .sum::<u32>()
            % 2
            == 1
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                match a.cmp(&b) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

/// A sparse exact polynomial in `x_0, x_1, …`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        MultiPoly::from_term(Monomial::var(i), Q::one())
    }

    pub fn from_term(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Q) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// The involution `σ`: negate every odd-indexed variable.
    pub fn sigma(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.odd_exponent_parity() { -c } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// The specialization `ψ(x_n) = t^{n²}`.
    pub fn specialize_psi(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (m, c) in &self.terms {
            let e: u64 = m
                .exponents()
                .iter()
                .enumerate()
                .map(|(i, &k)| (i as u64) * (i as u64) * k as u64)
                .sum();
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Q::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", fmt_q(c))?;
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// A sparse exact polynomial in one variable `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u64, Q>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        let mut p = UniPoly::zero();
        p.add_term(0, Q::one());
        p
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: u64) -> Self {
        let mut p = UniPoly::one();
        p.add_term(k, -Q::one());
        p
    }

    pub fn add_term(&mut self, exp: u64, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, exp: u64) -> Q {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u64, &Q)> {
        self.coeffs.iter()
    }

    /// Top `count` coefficients as (exponent, coefficient), descending.
    pub fn top_terms(&self, count: usize) -> Vec<(u64, Q)> {
        self.coeffs
            .iter()
            .rev()
            .take(count)
            .map(|(e, c)| (*e, c.clone()))
            .collect()
    }

    pub fn scale(&self, c: &Q) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitute `t ↦ t^k`.
    pub fn rescale_exponents(&self, k: u64) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (e * k, v.clone())).collect(),
        }
    }

    /// `t^{deg} p(1/t)`, the coefficient-reversed polynomial.
    pub fn reversed(&self, deg: u64) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (deg - e, v.clone())).collect(),
        }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", fmt_q(c))?,
                1 => write!(f, "{}*t", fmt_q(c))?,
                _ => write!(f, "{}*t^{e}", fmt_q(c))?,
            }
        }
        Ok(())
    }
}

/// The five determinant-polynomial kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpKind {
    A,
    B,
    BPrime,
    C,
    D,
}

impl LpKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(LpKind::A),
            "b" => Ok(LpKind::B),
            "b'" | "bp" => Ok(LpKind::BPrime),
            "c" => Ok(LpKind::C),
            "d" => Ok(LpKind::D),
            _ => Err(Error::Usage(format!("unknown polynomial kind `{s}`"))),
        }
    }
}

impl fmt::Display for LpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LpKind::A => "a",
            LpKind::B => "b",
            LpKind::BPrime => "b'",
            LpKind::C => "c",
            LpKind::D => "d",
        };
        write!(f, "{s}")
    }
}

/// Hard cap on the banded-determinant size.
pub const DEFAULT_DEGREE_CAP: usize = 8;

fn x(i: i64) -> MultiPoly {
    debug_assert!(i >= 0);
    MultiPoly::var(i as usize)
}

/// The determinant polynomial of the given kind and size, with the
/// conventions `a_0 = b_0 = b'_0 = c_0 = d_0 = 1`.
pub fn lp_poly(kind: LpKind, n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let entry = |i: i64, j: i64| -> MultiPoly {
        // 1-indexed banded symbol matrices.
        let band = x((i - j).abs());
        match kind {
            LpKind::A => band,
            LpKind::B => &band - &x(i + j - 1),
            LpKind::BPrime => &band + &x(i + j - 1),
            LpKind::C => &band - &x(i + j),
            LpKind::D => &band + &x(i + j - 2),
        }
    };
    let m: Vec<Vec<MultiPoly>> = (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| entry(i, j)).collect())
        .collect();
    let det = poly_det(&m);
    if kind == LpKind::D {
        det.scale(&crate::rat::qr(1, 2))
    } else {
        det
    }
}

/// Determinant of a small polynomial matrix by dynamic programming over
/// column subsets (Laplace expansion along the last row of each minor).
fn poly_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(n <= 16, "determinant size capped");
    let full: u32 = ((1u64 << n) - 1) as u32;
    let mut minors: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    minors[0] = Some(MultiPoly::one());
    for mask in 1..=full {
        let k = mask.count_ones() as usize; // rows 0..k
        let mut acc = MultiPoly::zero();
        let mut pos = 0;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let sub = minors[(mask ^ (1 << j)) as usize]
                .as_ref()
                .expect("processed in mask order");
            let term = &m[k - 1][j] * sub;
            if (k - 1 + pos) % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
            pos += 1;
        }
        minors[mask as usize] = Some(acc);
    }
    minors[full as usize].take().expect("full mask computed")
}

/// Generating function `f_{Φ,Ψ}` by the positive-root product formula,
/// componentwise: `∏_i ∏_{α ∈ Φ_i⁺} (1 − t^{(2δ_{Φ_i}, α)})`.
pub fn genfun(phi: &SubRootSystem) -> Result<UniPoly> {
    if !phi.is_reduced() {
        return Err(Error::NotReduced);
    }
    let psi = &phi.parent;
    let mut out = UniPoly::one();
    for comp in phi.components() {
        let two_delta = comp.sub.two_delta();
        for &p in &comp.sub.positive_ids() {
            let e = psi.space.pairing(&two_delta, psi.root(p))?;
            let e = crate::rat::as_integer(&e)
                .ok_or_else(|| Error::NotIntegral(format!("exponent {}", fmt_q(&e))))?;
            let e: u64 = e
                .try_into()
                .map_err(|_| Error::NotIntegral("negative exponent".into()))?;
            out = &out * &UniPoly::one_minus_t_pow(e);
        }
    }
    Ok(out)
}

/// Generating function by the signed-orbit definition
/// `Σ_{w ∈ W_Φ} ε(w) t^{|δ_Φ − w δ_Φ|²}`. Independent of [`genfun`].
pub fn genfun_sum(phi: &SubRootSystem, cap: u64) -> Result<UniPoly> {
    if !phi.is_reduced() {
        return Err(Error::NotReduced);
    }
    let psi = &phi.parent;
    let delta = phi.two_delta().scale(&crate::rat::qr(1, 2));
    let orbit = weyl::signed_orbit(&delta, phi, cap)?;
    let mut out = UniPoly::zero();
    for el in orbit {
        let diff = delta.sub(&el.weight);
        let norm = psi.space.norm2(&diff);
        let e = crate::rat::as_integer(&norm)
            .ok_or_else(|| Error::NotIntegral(format!("exponent {}", fmt_q(&norm))))?;
        let e: u64 = e.try_into().expect("norms are nonnegative");
        out.add_term(e, crate::rat::q(el.sign as i64));
    }
    Ok(out)
}

/// The algebra embedding `E`: a character over `BC_n` with `W = W_n` maps
/// termwise by `χ*_{(a_1,…,a_n)} ↦ x_{a_1}⋯x_{a_n}` (zero coordinates
/// contribute `x_0` factors, so images are homogeneous of degree `n`).
pub fn embed_e(c: &Character) -> Result<MultiPoly> {
    let n = match &c.sym.base.label {
        Label::Simple(t) if t.family == Family::BC => t.rank,
        other => return Err(Error::UnsupportedParent(format!("{other}"))),
    };
    if c.sym.has_outer() {
        return Err(Error::ContextMismatch);
    }
    let mut out = MultiPoly::zero();
    for (key, coeff) in &c.terms {
        let mut exps: Vec<u16> = Vec::new();
        for x in &key.coords {
            let i = crate::rat::as_integer(x)
                .filter(|v| !num_traits::Signed::is_negative(v))
                .ok_or_else(|| Error::NotIntegral(format!("character key entry {}", fmt_q(x))))?;
            let i: usize = i.try_into().expect("nonnegative");
            if exps.len() <= i {
                exps.resize(i + 1, 0);
            }
            exps[i] += 1;
        }
        debug_assert_eq!(
            exps.iter().map(|&e| e as usize).sum::<usize>(),
            n,
            "keys of a BC_n character have n coordinates"
        );
        out = &out + &MultiPoly::from_term(Monomial::from_exponents(exps), coeff.clone());
    }
    Ok(out)
}

/// The linear specialization `E'`: `χ*_λ ↦ t^{|λ|²}` on characters over the
/// plain Weyl group of the parent.
pub fn eprime(c: &Character) -> Result<UniPoly> {
    if c.sym.has_outer() {
        return Err(Error::ContextMismatch);
    }
    let space = &c.sym.base.space;
    let mut out = UniPoly::zero();
    for (key, coeff) in &c.terms {
        let norm = space.norm2(key);
        let e = crate::rat::as_integer(&norm)
            .ok_or_else(|| Error::NotIntegral(format!("|λ|² = {}", fmt_q(&norm))))?;
        let e: u64 = e.try_into().expect("norms are nonnegative");
        out.add_term(e, coeff.clone());
    }
    Ok(out)
}

/// Packed integer polynomials for the identity engine: monomials over
/// `x_0..x_11` with 5 exponent bits per variable packed into a `u64`, so a
/// monomial product is a key addition. Coefficients are checked `i128`.
/// These never leave this module; the public polynomial type stays exact
/// rational.
#[derive(Clone, Default)]
struct Packed {
    terms: PackMap,
}

type PackMap = std::collections::HashMap<u64, i128, std::hash::BuildHasherDefault<PackHasher>>;

/// Multiplicative hasher for the packed monomial keys.
#[derive(Default)]
struct PackHasher(u64);

impl std::hash::Hasher for PackHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }
    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(26);
    }
}

const PACK_BITS: u32 = 5;
const PACK_VARS: usize = 12;
const PACK_MASK: u64 = (1 << PACK_BITS) - 1;

impl Packed {
    fn one() -> Self {
        let mut p = Packed::default();
        p.terms.insert(0, 1);
        p
    }

    fn var(i: usize) -> Self {
        assert!(i < PACK_VARS);
        let mut p = Packed::default();
        p.terms.insert(1u64 << (PACK_BITS * i as u32), 1);
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|&k| {
                (0..PACK_VARS)
                    .map(|i| ((k >> (PACK_BITS * i as u32)) & PACK_MASK) as u32)
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    fn add_scaled(&mut self, other: &Packed, scale: i128) {
        for (&m, &c) in &other.terms {
            let entry = self.terms.entry(m).or_insert(0);
            *entry = entry.checked_add(c.checked_mul(scale).expect("coefficient overflow"))
                .expect("coefficient overflow");
            if *entry == 0 {
                self.terms.remove(&m);
            }
        }
    }

    /// Fieldwise maximum exponent per variable, for overflow checks.
    fn max_exponents(&self) -> [u64; PACK_VARS] {
        let mut out = [0u64; PACK_VARS];
        for &m in self.terms.keys() {
            for (i, slot) in out.iter_mut().enumerate() {
                let e = (m >> (PACK_BITS * i as u32)) & PACK_MASK;
                *slot = (*slot).max(e);
            }
        }
        out
    }

    fn mul(&self, other: &Packed) -> Packed {
        // Key addition can never carry between fields as long as the
        // fieldwise exponent maxima sum within the mask.
        let ma = self.max_exponents();
        let mb = other.max_exponents();
        assert!(
            ma.iter().zip(&mb).all(|(a, b)| a + b <= PACK_MASK),
            "packed exponent overflow"
        );
        let mut out = Packed::default();
        out.terms.reserve(self.terms.len().max(other.terms.len()));
        for (&m1, &c1) in &self.terms {
            for (&m2, &c2) in &other.terms {
                let m = m1 + m2;
                let c = c1.checked_mul(c2).expect("coefficient overflow");
                let entry = out.terms.entry(m).or_insert(0);
                *entry = entry.checked_add(c).expect("coefficient overflow");
                if *entry == 0 {
                    out.terms.remove(&m);
                }
            }
        }
        out
    }

    fn halved(mut self) -> Packed {
        for c in self.terms.values_mut() {
            assert!(*c % 2 == 0, "halving is exact");
            *c /= 2;
        }
        self
    }
}

fn packed_lp(kind: LpKind, n: usize) -> Packed {
    if n == 0 {
        return Packed::one();
    }
    let x = |i: i64| -> Packed {
        debug_assert!(i >= 0);
        Packed::var(i as usize)
    };
    let entry = |i: i64, j: i64| -> Packed {
        let mut band = x((i - j).abs());
        match kind {
            LpKind::A => {}
            LpKind::B => band.add_scaled(&x(i + j - 1), -1),
            LpKind::BPrime => band.add_scaled(&x(i + j - 1), 1),
            LpKind::C => band.add_scaled(&x(i + j), -1),
            LpKind::D => band.add_scaled(&x(i + j - 2), 1),
        }
        band
    };
    let m: Vec<Vec<Packed>> = (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| entry(i, j)).collect())
        .collect();
    let det = packed_det(&m);
    if kind == LpKind::D {
        det.halved()
    } else {
        det
    }
}

fn packed_det(m: &[Vec<Packed>]) -> Packed {
    let n = m.len();
    assert!(n <= 16);
    let full: u32 = ((1u64 << n) - 1) as u32;
    let mut minors: Vec<Option<Packed>> = vec![None; 1 << n];
    minors[0] = Some(Packed::one());
    for mask in 1..=full {
        let k = mask.count_ones() as usize;
        let mut acc = Packed::default();
        let mut pos = 0;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let sub = minors[(mask ^ (1 << j)) as usize]
                .as_ref()
                .expect("processed in mask order");
            let term = m[k - 1][j].mul(sub);
            acc.add_scaled(&term, if (k - 1 + pos) % 2 == 0 { 1 } else { -1 });
            pos += 1;
        }
        minors[mask as usize] = Some(acc);
    }
    minors[full as usize].take().expect("full mask computed")
}

/// One verified identity in the report.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub n: i64,
    pub degree: u32,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verify the catalogued polynomial identities up to the given size:
///
/// * the four product families `a_{2n} = b_n b'_n`, `a_{2n+1} = c_n d_{n+1}`,
///   `2a_{2n} = c_n d_n + c_{n-1} d_{n+1}`, `2a_{2n+1} = b_n b'_{n+1} + b'_n b_{n+1}`
///   for `1 ≤ n ≤ n_max`;
/// * the quadratic relation families of the `BC`, `B` and `C` rows, with the
///   convention `c_{-1} = x_0^{-1}` handled by clearing to polynomial form;
/// * the degree-6 relation and the two seed relations used by the relation
///   catalog.
pub fn verify_identities(n_max: usize) -> Result<IdentityReport> {
    if n_max > DEFAULT_DEGREE_CAP {
        return Err(Error::BudgetExceeded {
            what: "identity verification degree",
            needed: n_max as u64,
            cap: DEFAULT_DEGREE_CAP as u64,
        });
    }
    // Precompute exactly the determinant polynomials the identities use;
    // the largest variable index is then x_11, which fits the packing.
    let av: Vec<Packed> = (0..=2 * n_max + 1).map(|n| packed_lp(LpKind::A, n)).collect();
    let bv: Vec<Packed> = (0..=n_max + 1).map(|n| packed_lp(LpKind::B, n)).collect();
    let bpv: Vec<Packed> = (0..=n_max + 1).map(|n| packed_lp(LpKind::BPrime, n)).collect();
    let cv: Vec<Packed> = (0..=n_max.max(3)).map(|n| packed_lp(LpKind::C, n)).collect();
    let dv: Vec<Packed> = (0..=(n_max + 1).max(3)).map(|n| packed_lp(LpKind::D, n)).collect();
    let a = |n: usize| &av[n];
    let b = |n: usize| &bv[n];
    let bp = |n: usize| &bpv[n];
    let c = |n: usize| &cv[n];
    let d = |n: usize| &dv[n];
    let x0 = Packed::var(0);

    let mut checks: Vec<IdentityCheck> = Vec::new();
    let mut push = |name: &'static str, n: i64, p: Packed| {
        checks.push(IdentityCheck {
            name,
            n,
            degree: p.degree(),
            pass: p.is_zero(),
        });
    };

    for n in 1..=n_max {
        let mut lhs = a(2 * n).clone();
        lhs.add_scaled(&b(n).mul(bp(n)), -1);
        push("a_2n = b_n b'_n", n as i64, lhs);

        let mut lhs = a(2 * n + 1).clone();
        lhs.add_scaled(&c(n).mul(d(n + 1)), -1);
        push("a_2n+1 = c_n d_n+1", n as i64, lhs);

        let mut lhs = Packed::default();
        lhs.add_scaled(a(2 * n), 2);
        lhs.add_scaled(&c(n).mul(d(n)), -1);
        lhs.add_scaled(&c(n - 1).mul(d(n + 1)), -1);
        push("2a_2n = c_n d_n + c_n-1 d_n+1", n as i64, lhs);

        let mut lhs = Packed::default();
        lhs.add_scaled(a(2 * n + 1), 2);
        lhs.add_scaled(&b(n).mul(bp(n + 1)), -1);
        lhs.add_scaled(&bp(n).mul(b(n + 1)), -1);
        push("2a_2n+1 = b_n b'_n+1 + b'_n b_n+1", n as i64, lhs);
    }

    // BC family, cleared of c_{-1} by multiplying through by x_0:
    // b_{n+1}²(c_n d_n + c_{n-1} d_{n+1}) + b_n²(c_{n+1} d_{n+1} + c_n d_{n+2})
    //   - 4 b_{n+1} b_n c_n d_{n+1} = 0.
    for n in 0..=n_max.saturating_sub(2) {
        let b1sq = b(n + 1).mul(b(n + 1));
        let bsq = b(n).mul(b(n));
        let x0_cm1 = if n == 0 { Packed::one() } else { x0.mul(c(n - 1)) };
        let mut inner = x0.mul(&c(n).mul(d(n)));
        inner.add_scaled(&x0_cm1.mul(d(n + 1)), 1);
        let mut lhs = b1sq.mul(&inner);
        let mut inner2 = c(n + 1).mul(d(n + 1));
        inner2.add_scaled(&c(n).mul(d(n + 2)), 1);
        lhs.add_scaled(&bsq.mul(&x0).mul(&inner2), 1);
        lhs.add_scaled(&x0.mul(&b(n + 1).mul(b(n))).mul(&c(n).mul(d(n + 1))), -4);
        push("(BC): x_0-cleared", n as i64, lhs);
    }

    // (B1): a_{2n+2} b_n² + a_{2n} b_{n+1}² - 2 a_{2n+1} b_n b_{n+1} = 0.
    for n in 0..=n_max.saturating_sub(1) {
        let mut lhs = a(2 * n + 2).mul(&b(n).mul(b(n)));
        lhs.add_scaled(&a(2 * n).mul(&b(n + 1).mul(b(n + 1))), 1);
        lhs.add_scaled(&a(2 * n + 1).mul(&b(n).mul(b(n + 1))), -2);
        push("(B1)", n as i64, lhs);
    }
    // (B2): a_{2n+1} d_n² + a_{2n-1} d_{n+1}² - 2 a_{2n} d_n d_{n+1} = 0.
    for n in 1..=n_max.saturating_sub(1) {
        let mut lhs = a(2 * n + 1).mul(&d(n).mul(d(n)));
        lhs.add_scaled(&a(2 * n - 1).mul(&d(n + 1).mul(d(n + 1))), 1);
        lhs.add_scaled(&a(2 * n).mul(&d(n).mul(d(n + 1))), -2);
        push("(B2)", n as i64, lhs);
    }
    // (C1): a_{2n+1} - c_n d_{n+1} = 0.
    for n in 0..=n_max.saturating_sub(1) {
        let mut lhs = a(2 * n + 1).clone();
        lhs.add_scaled(&c(n).mul(d(n + 1)), -1);
        push("(C1)", n as i64, lhs);
    }
    // (C2): 2a_{2n+2} - c_{n+1} d_{n+1} - c_n d_{n+2} = 0.
    for n in 0..=n_max.saturating_sub(2) {
        let mut lhs = Packed::default();
        lhs.add_scaled(a(2 * n + 2), 2);
        lhs.add_scaled(&c(n + 1).mul(d(n + 1)), -1);
        lhs.add_scaled(&c(n).mul(d(n + 2)), -1);
        push("(C2)", n as i64, lhs);
    }

    // Degree-6 relation:
    // 2b_1b_2²c_1 + 4b_1²c_2d_2 + 4b_1²c_1d_3 + 4b_2c_1²d_2 + 4b_2²d_2
    //   - b_1c_1c_2d_2 - b_1c_1²d_3 - 16b_1b_2c_1d_2 = 0.
    {
        let b1 = b(1);
        let b2 = b(2);
        let c1 = c(1);
        let c2 = c(2);
        let d2 = d(2);
        let d3 = d(3);
        let b1sq = b1.mul(b1);
        let b2sq = b2.mul(b2);
        let c1sq = c1.mul(c1);
        let mut lhs = Packed::default();
        lhs.add_scaled(&b1.mul(&b2sq).mul(c1), 2);
        lhs.add_scaled(&b1sq.mul(&c2.mul(d2)), 4);
        lhs.add_scaled(&b1sq.mul(&c1.mul(d3)), 4);
        lhs.add_scaled(&b2.mul(&c1sq).mul(d2), 4);
        lhs.add_scaled(&b2sq.mul(d2), 4);
        lhs.add_scaled(&b1.mul(c1).mul(&c2.mul(d2)), -1);
        lhs.add_scaled(&b1.mul(&c1sq).mul(d3), -1);
        lhs.add_scaled(&b1.mul(b2).mul(&c1.mul(d2)), -16);
        push("degree-6", 0, lhs);
    }

    // Seed relations: a_3 d_1 + d_2² - 2 a_2 d_2 = 0 and
    // 2 a_2 c_1 - a_1 c_1² - a_3 = 0.
    {
        let mut lhs = a(3).mul(d(1));
        lhs.add_scaled(&d(2).mul(d(2)), 1);
        lhs.add_scaled(&a(2).mul(d(2)), -2);
        push("seed: a_3 d_1 + d_2² = 2 a_2 d_2", 0, lhs);

        let mut lhs = Packed::default();
        lhs.add_scaled(&a(2).mul(c(1)), 2);
        lhs.add_scaled(&a(1).mul(&c(1).mul(c(1))), -1);
        lhs.add_scaled(a(3), -1);
        push("seed: 2 a_2 c_1 = a_1 c_1² + a_3", 0, lhs);
    }

    Ok(IdentityReport { checks })
}

/// The packed identity engine must agree with the exact-rational
/// determinants; exposed for the test suite.
pub fn packed_matches_rational(kind: LpKind, n: usize) -> bool {
    let packed = packed_lp(kind, n);
    let rational = lp_poly(kind, n);
    if packed.terms.len() != rational.num_terms() {
        return false;
    }
    let mut ok = true;
    for (m, c) in rational.terms() {
        let mut key = 0u64;
        let mut packable = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if i >= PACK_VARS || e as u64 > PACK_MASK {
                packable = false;
                break;
            }
            key |= (e as u64) << (PACK_BITS * i as u32);
        }
        ok &= packable
            && packed.terms.get(&key).map(|&pc| crate::rat::q(pc as i64) == *c) == Some(true);
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;
    use crate::roots::{RootSystem, TypeLabel};

    fn mono(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn small_closed_forms() {
        // b_1 = x_0 - x_1
        let b1 = lp_poly(LpKind::B, 1);
        assert_eq!(b1, &MultiPoly::var(0) - &MultiPoly::var(1));
        // c_1 = x_0 - x_2
        assert_eq!(lp_poly(LpKind::C, 1), &MultiPoly::var(0) - &MultiPoly::var(2));
        // a_1 = d_1 = x_0
        assert_eq!(lp_poly(LpKind::A, 1), MultiPoly::var(0));
        assert_eq!(lp_poly(LpKind::D, 1), MultiPoly::var(0));
        // a_2 = x_0² - x_1²
        let a2 = lp_poly(LpKind::A, 2);
        assert_eq!(a2.coeff(&mono(&[2])), q(1));
        assert_eq!(a2.coeff(&mono(&[0, 2])), q(-1));
        assert_eq!(a2.num_terms(), 2);
        // d_2 = x_0² - 2x_1² + x_0 x_2
        let d2 = lp_poly(LpKind::D, 2);
        assert_eq!(d2.coeff(&mono(&[2])), q(1));
        assert_eq!(d2.coeff(&mono(&[0, 2])), q(-2));
        assert_eq!(d2.coeff(&mono(&[1, 0, 1])), q(1));
        assert_eq!(d2.num_terms(), 3);
        // a_3 = x_0³ - 2x_0x_1² + 2x_1²x_2 - x_0x_2²
        let a3 = lp_poly(LpKind::A, 3);
        assert_eq!(a3.coeff(&mono(&[3])), q(1));
        assert_eq!(a3.coeff(&mono(&[1, 2])), q(-2));
        assert_eq!(a3.coeff(&mono(&[0, 2, 1])), q(2));
        assert_eq!(a3.coeff(&mono(&[1, 0, 2])), q(-1));
        assert_eq!(a3.num_terms(), 4);
    }

    #[test]
    fn b2_c2_closed_forms() {
        // b_2 = x_0² - x_0x_1 - x_0x_3 + x_1x_3 - x_1² + 2x_1x_2 - x_2²
        let b2 = lp_poly(LpKind::B, 2);
        assert_eq!(b2.coeff(&mono(&[2])), q(1));
        assert_eq!(b2.coeff(&mono(&[1, 1])), q(-1));
        assert_eq!(b2.coeff(&mono(&[1, 0, 0, 1])), q(-1));
        assert_eq!(b2.coeff(&mono(&[0, 1, 0, 1])), q(1));
        assert_eq!(b2.coeff(&mono(&[0, 2])), q(-1));
        assert_eq!(b2.coeff(&mono(&[0, 1, 1])), q(2));
        assert_eq!(b2.coeff(&mono(&[0, 0, 2])), q(-1));
        assert_eq!(b2.num_terms(), 7);
        // c_2 = x_0² - x_0x_2 - x_0x_4 + x_2x_4 - x_1² + 2x_1x_3 - x_3²
        let c2 = lp_poly(LpKind::C, 2);
        assert_eq!(c2.coeff(&mono(&[2])), q(1));
        assert_eq!(c2.coeff(&mono(&[1, 0, 1])), q(-1));
        assert_eq!(c2.coeff(&mono(&[1, 0, 0, 0, 1])), q(-1));
        assert_eq!(c2.coeff(&mono(&[0, 0, 1, 0, 1])), q(1));
        assert_eq!(c2.coeff(&mono(&[0, 2])), q(-1));
        assert_eq!(c2.coeff(&mono(&[0, 1, 0, 1])), q(2));
        assert_eq!(c2.coeff(&mono(&[0, 0, 0, 2])), q(-1));
        assert_eq!(c2.num_terms(), 7);
    }

    #[test]
    fn homogeneity_and_unit_leading_term() {
        for kind in [LpKind::A, LpKind::B, LpKind::BPrime, LpKind::C, LpKind::D] {
            for n in 1..=5usize {
                let p = lp_poly(kind, n);
                assert!(p.is_homogeneous(), "{kind} {n}");
                assert_eq!(p.total_degree(), n as u32);
                let x0n = mono(&[n as u16]);
                assert_eq!(p.coeff(&x0n), q(1), "{kind} {n} has unit x_0^n");
            }
        }
    }

    #[test]
    fn sigma_properties() {
        // σ(b_1) = x_0 + x_1
        assert_eq!(lp_poly(LpKind::B, 1).sigma(), lp_poly(LpKind::BPrime, 1));
        // σ fixes a_n, c_n, d_n and is an involution; it moves b_n.
        for n in 1..=4usize {
            for kind in [LpKind::A, LpKind::C, LpKind::D] {
                let p = lp_poly(kind, n);
                assert_eq!(p.sigma(), p, "{kind} {n}");
            }
            let b = lp_poly(LpKind::B, n);
            assert_eq!(b.sigma(), lp_poly(LpKind::BPrime, n));
            assert_eq!(b.sigma().sigma(), b);
            assert_ne!(b.sigma(), b);
        }
    }

    #[test]
    fn psi_specialization() {
        assert_eq!(MultiPoly::var(0).specialize_psi(), UniPoly::one());
        // ψ(b_1) = 1 - t
        assert_eq!(
            lp_poly(LpKind::B, 1).specialize_psi(),
            UniPoly::one_minus_t_pow(1)
        );
        // ψ(a_2) = 1 - t²
        assert_eq!(
            lp_poly(LpKind::A, 2).specialize_psi(),
            UniPoly::one_minus_t_pow(2)
        );
    }

    #[test]
    fn genfun_closed_forms() {
        let f = |s: &str| {
            let rs = RootSystem::build(TypeLabel::parse(s).unwrap()).unwrap();
            genfun(&rs.full_subsystem()).unwrap()
        };
        // f_{A_1} = 1 - t
        assert_eq!(f("A1"), UniPoly::one_minus_t_pow(1));
        // f_{A_2} = (1-t)²(1-t²)
        let expected = &(&UniPoly::one_minus_t_pow(1) * &UniPoly::one_minus_t_pow(1))
            * &UniPoly::one_minus_t_pow(2);
        assert_eq!(f("A2"), expected);
        // f_{B_2} = (1-t)(1-t²)(1-t³)(1-t⁴)
        let mut expected = UniPoly::one();
        for k in 1..=4 {
            expected = &expected * &UniPoly::one_minus_t_pow(k);
        }
        assert_eq!(f("B2"), expected);
        // f_{G_2} = (1-t)(1-t³)(1-t⁴)(1-t⁵)(1-t⁶)(1-t⁹)
        let mut expected = UniPoly::one();
        for k in [1, 3, 4, 5, 6, 9] {
            expected = &expected * &UniPoly::one_minus_t_pow(k);
        }
        assert_eq!(f("G2"), expected);
        // f_{A_3} = (1-t)³(1-t²)²(1-t³)
        let mut expected = UniPoly::one();
        for k in [1, 1, 1, 2, 2, 3] {
            expected = &expected * &UniPoly::one_minus_t_pow(k);
        }
        assert_eq!(f("A3"), expected);
    }

    #[test]
    fn genfun_paths_agree() {
        for s in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
            let rs = RootSystem::build(TypeLabel::parse(s).unwrap()).unwrap();
            let full = rs.full_subsystem();
            let prod = genfun(&full).unwrap();
            let sum = genfun_sum(&full, 100_000).unwrap();
            assert_eq!(prod, sum, "{s}");
        }
    }

    #[test]
    fn genfun_palindromy() {
        for s in ["A3", "B3", "G2", "D4"] {
            let rs = RootSystem::build(TypeLabel::parse(s).unwrap()).unwrap();
            let full = rs.full_subsystem();
            let f = genfun(&full).unwrap();
            let two_delta = full.two_delta();
            let deg: u64 = crate::rat::as_integer(&rs.space.norm2(&two_delta))
                .unwrap()
                .try_into()
                .unwrap();
            assert_eq!(f.degree(), deg, "{s}");
            let sign = if full.num_positive() % 2 == 0 { q(1) } else { q(-1) };
            assert_eq!(f.reversed(deg).scale(&sign), f, "{s}");
        }
    }

    #[test]
    fn genfun_rejects_non_reduced() {
        let bc2 = RootSystem::build(TypeLabel::parse("BC2").unwrap()).unwrap();
        assert!(matches!(
            genfun(&bc2.full_subsystem()),
            Err(Error::NotReduced)
        ));
    }

    #[test]
    fn identities_hold_at_small_degree() {
        let report = verify_identities(3).unwrap();
        assert!(report.checks.len() > 10);
        for c in &report.checks {
            assert!(c.pass, "{} at n = {}", c.name, c.n);
        }
        assert!(verify_identities(9).is_err());
    }

    #[test]
    fn embed_e_and_eprime_small_cases() {
        use crate::characters::{character_f, Character};
        use crate::weyl::SymmetrySpec;
        use std::sync::Arc;

        // E(F_{B_1 ⊂ BC_1, W_1}) = b_1 = x_0 - x_1.
        let bc1 = RootSystem::build(TypeLabel::parse("BC1").unwrap()).unwrap();
        let sym = SymmetrySpec::weyl(Arc::clone(&bc1));
        let e0 = crate::lattice::Weight::basis(1, 0);
        let b1sub = bc1.generated_subsystem(&[e0]).unwrap();
        let f = character_f(&b1sub, &sym, 100).unwrap();
        assert_eq!(embed_e(&f).unwrap(), lp_poly(LpKind::B, 1));

        // E(1 over BC_2) = x_0².
        let bc2 = RootSystem::build(TypeLabel::parse("BC2").unwrap()).unwrap();
        let sym2 = SymmetrySpec::weyl(Arc::clone(&bc2));
        let one = Character::one(sym2.clone());
        let expected = &MultiPoly::var(0) * &MultiPoly::var(0);
        assert_eq!(embed_e(&one).unwrap(), expected);

        // E(F_{A_2 ⊂ BC_3}) = a_3.
        let bc3 = RootSystem::build(TypeLabel::parse("BC3").unwrap()).unwrap();
        let sym3 = SymmetrySpec::weyl(Arc::clone(&bc3));
        let e = |i: usize| crate::lattice::Weight::basis(3, i);
        let a2 = bc3
            .generated_subsystem(&[e(0).sub(&e(1)), e(1).sub(&e(2))])
            .unwrap();
        let f = character_f(&a2, &sym3, 1000).unwrap();
        assert_eq!(embed_e(&f).unwrap(), lp_poly(LpKind::A, 3));

        // E'(1) = 1; E'(F_{A_1 ⊂ A_2}) = 1 - t.
        let a2p = RootSystem::build(TypeLabel::parse("A2").unwrap()).unwrap();
        let syma = SymmetrySpec::weyl(Arc::clone(&a2p));
        assert_eq!(eprime(&Character::one(syma.clone())).unwrap(), UniPoly::one());
        let alpha = a2p.simple_roots()[0].clone();
        let a1 = a2p.generated_subsystem(&[alpha]).unwrap();
        let f = character_f(&a1, &syma, 100).unwrap();
        assert_eq!(eprime(&f).unwrap(), UniPoly::one_minus_t_pow(1));

        // E'(F_{G_2}) = f_{G_2}.
        let g2 = RootSystem::build(TypeLabel::parse("G2").unwrap()).unwrap();
        let symg = SymmetrySpec::weyl(Arc::clone(&g2));
        let f = character_f(&g2.full_subsystem(), &symg, 100).unwrap();
        assert_eq!(eprime(&f).unwrap(), genfun(&g2.full_subsystem()).unwrap());
    }

    #[test]
    fn poly_det_matches_direct_2x2() {
        let m = vec![
            vec![MultiPoly::var(0), MultiPoly::var(1)],
            vec![MultiPoly::var(1), MultiPoly::var(0)],
        ];
        let det = poly_det(&m);
        let expected =
            &(&MultiPoly::var(0) * &MultiPoly::var(0)) - &(&MultiPoly::var(1) * &MultiPoly::var(1));
        assert_eq!(det, expected);
    }
}
