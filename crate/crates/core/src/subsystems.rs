//! The catalog of sub-root systems: classical index-tuple constructions,
//! named representatives for the exceptional parents, exhaustive
//! conjugacy-class enumeration at desk scale, and conjugacy testing.

use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::lp::{self, UniPoly};
use crate::rat::{q, Q};
use crate::roots::{canonical_abstract, EmbeddedType, Family, Label, RootSystem, SubRootSystem, TypeLabel};
use crate::weyl::{self, SymmetrySpec, DEFAULT_PERM_CAP};
use num_traits::Zero;
use std::collections::HashSet;
use std::sync::Arc;

/// Index data for a sub-root system of a classical parent: multisets of
/// block sizes for the `BC`, `B`, `C`, `D` and `A` factors, plus the primed
/// flag selecting the second class in the ambiguous type-`D` case.
///
/// An `A` entry `q` stands for an `A_{q-1}` factor on a block of `q`
/// coordinates, so `q ≥ 2`; `D` entries are `≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassicalIndex {
    pub bc: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    pub a: Vec<usize>,
    pub primed: bool,
}

impl ClassicalIndex {
    pub fn new(
        bc: Vec<usize>,
        b: Vec<usize>,
        c: Vec<usize>,
        d: Vec<usize>,
        a: Vec<usize>,
    ) -> Result<Self> {
        let idx = ClassicalIndex {
            bc,
            b,
            c,
            d,
            a,
            primed: false,
        };
        idx.validate()?;
        Ok(idx)
    }

    pub fn primed(mut self) -> Self {
        self.primed = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.bc.iter().any(|&r| r == 0)
            || self.b.iter().any(|&s| s == 0)
            || self.c.iter().any(|&t| t == 0)
        {
            return Err(Error::BadIndex("zero block size".into()));
        }
        if self.d.iter().any(|&p| p < 2) {
            return Err(Error::BadIndex("D factor needs block size ≥ 2".into()));
        }
        if self.a.iter().any(|&a| a < 2) {
            return Err(Error::BadIndex(
                "A factor needs block size ≥ 2 (A_0 blocks are empty)".into(),
            ));
        }
        Ok(())
    }

    pub fn total(&self) -> usize {
        self.bc.iter().sum::<usize>()
            + self.b.iter().sum::<usize>()
            + self.c.iter().sum::<usize>()
            + self.d.iter().sum::<usize>()
            + self.a.iter().sum::<usize>()
    }

    /// Split type-`D` indices admit a primed twin: no `D` factors, every `A`
    /// block even, blocks filling all coordinates.
    pub fn is_split_for_d(&self, n: usize) -> bool {
        self.bc.is_empty()
            && self.b.is_empty()
            && self.c.is_empty()
            && self.d.is_empty()
            && !self.a.is_empty()
            && self.a.iter().all(|&t| t % 2 == 0)
            && self.a.iter().sum::<usize>() == n
    }

    /// Canonical multiset form (sorted descending per family).
    pub fn normalized(mut self) -> Self {
        self.bc.sort_unstable_by(|x, y| y.cmp(x));
        self.b.sort_unstable_by(|x, y| y.cmp(x));
        self.c.sort_unstable_by(|x, y| y.cmp(x));
        self.d.sort_unstable_by(|x, y| y.cmp(x));
        self.a.sort_unstable_by(|x, y| y.cmp(x));
        self
    }
}

/// The concrete block-diagonal realization of a classical index tuple.
pub fn classical_subsystem(
    parent: &Arc<RootSystem>,
    idx: &ClassicalIndex,
) -> Result<SubRootSystem> {
    idx.validate()?;
    let family = match &parent.label {
        Label::Simple(t) => t.family,
        other => return Err(Error::UnsupportedParent(format!("{other}"))),
    };
    let allowed = |idx: &ClassicalIndex| -> bool {
        match family {
            Family::A => idx.bc.is_empty() && idx.b.is_empty() && idx.c.is_empty() && idx.d.is_empty(),
            Family::B => idx.bc.is_empty() && idx.c.is_empty(),
            Family::C => idx.bc.is_empty() && idx.b.is_empty(),
            Family::D => idx.bc.is_empty() && idx.b.is_empty() && idx.c.is_empty(),
            Family::BC => true,
            _ => false,
        }
    };
    if !allowed(idx) {
        return Err(Error::BadIndex(format!(
            "factor kinds not available in a {family} parent"
        )));
    }
    let n = parent.space.dim();
    if idx.total() > n {
        return Err(Error::BadIndex(format!(
            "blocks need {} coordinates, parent has {n}",
            idx.total()
        )));
    }
    if idx.primed {
        if family != Family::D {
            return Err(Error::BadIndex("primed flag only applies to D parents".into()));
        }
        if !idx.is_split_for_d(n) {
            return Err(Error::BadIndex(
                "primed flag on a non-ambiguous D index".into(),
            ));
        }
    }
    let e = |i: usize| Weight::basis(n, i);
    let mut roots: Vec<Weight> = Vec::new();
    let mut offset = 0usize;
    let block = |size: usize,
                     kind: Family,
                     roots: &mut Vec<Weight>,
                     offset: &mut usize| {
        let o = *offset;
        for i in o..o + size {
            match kind {
                Family::B => {
                    roots.push(e(i));
                    roots.push(e(i).neg());
                }
                Family::C => {
                    roots.push(e(i).scale(&q(2)));
                    roots.push(e(i).scale(&q(-2)));
                }
                Family::BC => {
                    roots.push(e(i));
                    roots.push(e(i).neg());
                    roots.push(e(i).scale(&q(2)));
                    roots.push(e(i).scale(&q(-2)));
                }
                _ => {}
            }
            for j in i + 1..o + size {
                roots.push(e(i).sub(&e(j)));
                roots.push(e(j).sub(&e(i)));
                if kind != Family::A {
                    roots.push(e(i).add(&e(j)));
                    roots.push(e(i).add(&e(j)).neg());
                }
            }
        }
        *offset += size;
    };
    for &r in &idx.bc {
        block(r, Family::BC, &mut roots, &mut offset);
    }
    for &s in &idx.b {
        block(s, Family::B, &mut roots, &mut offset);
    }
    for &t in &idx.c {
        block(t, Family::C, &mut roots, &mut offset);
    }
    for &p in &idx.d {
        block(p, Family::D, &mut roots, &mut offset);
    }
    for &a in &idx.a {
        block(a, Family::A, &mut roots, &mut offset);
    }
    if idx.primed {
        for r in roots.iter_mut() {
            let mut coords = r.coords.clone();
            coords[0] = -coords[0].clone();
            *r = Weight::new(coords);
        }
    }
    parent.subsystem_from_roots(&roots)
}

/// Recover the index tuple of a subsystem of a classical parent.
pub fn index_of_subsystem(phi: &SubRootSystem) -> Result<ClassicalIndex> {
    match &phi.parent.label {
        Label::Simple(t)
            if matches!(
                t.family,
                Family::A | Family::B | Family::C | Family::D | Family::BC
            ) => {}
        other => return Err(Error::UnsupportedParent(format!("{other}"))),
    }
    let mut idx = ClassicalIndex::default();
    for comp in phi.components() {
        match comp.embedded.family {
            Family::BC => idx.bc.push(comp.embedded.rank),
            Family::B => idx.b.push(comp.embedded.rank),
            Family::C => idx.c.push(comp.embedded.rank),
            Family::D => idx.d.push(comp.embedded.rank),
            Family::A => idx.a.push(comp.embedded.rank + 1),
            other => {
                return Err(Error::UnsupportedParent(format!(
                    "unexpected factor family {other}"
                )))
            }
        }
    }
    Ok(idx.normalized())
}

/// Generator encodings for named representatives.
enum GenSpec {
    /// Rows of simple-root coefficients.
    Simple(&'static [&'static [i64]]),
    /// Rows of ambient coordinates.
    Coord(&'static [&'static [i64]]),
    /// All roots of maximal squared length.
    LongRoots,
    /// The short-root subsystem `Ψ°`.
    ShortRoots,
    /// The whole parent.
    Full,
}

const E7_BETA: &[i64] = &[2, 2, 3, 4, 3, 2, 1];
const E7_BETA_P: &[i64] = &[0, 1, 1, 2, 1, 0, 0];

const E7_NAMED: &[(&str, GenSpec)] = &[
    (
        "A5",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A5'",
        GenSpec::Simple(&[
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "3A1",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "3A1'",
        GenSpec::Simple(&[
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "4A1",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "4A1'",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            E7_BETA_P,
        ]),
    ),
    (
        "A3+A1",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A3+A1'",
        GenSpec::Simple(&[
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A3+2A1",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A3+2A1'",
        GenSpec::Simple(&[
            E7_BETA,
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A5+A1",
        GenSpec::Simple(&[
            E7_BETA,
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A5+A1'",
        GenSpec::Simple(&[
            E7_BETA,
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
];

const E8_BETA_P: &[i64] = &[1, 2, 2, 4, 4, 3, 2, 1];
const E8_BETA_PP: &[i64] = &[2, 2, 4, 5, 4, 3, 2, 1];

const E8_NAMED: &[(&str, GenSpec)] = &[
    // The published generator list pairs the highest root with the α_1…α_7
    // chain; those are orthogonal, so the closure is A_6+A_1 rather than an
    // A_7. The class distinct from (A_7)' is the coordinate chain inside
    // D_8 = {±e_i±e_j}; its leading term matches the table row.
    (
        "A7",
        GenSpec::Coord(&[
            &[1, -1, 0, 0, 0, 0, 0, 0],
            &[0, 1, -1, 0, 0, 0, 0, 0],
            &[0, 0, 1, -1, 0, 0, 0, 0],
            &[0, 0, 0, 1, -1, 0, 0, 0],
            &[0, 0, 0, 0, 1, -1, 0, 0],
            &[0, 0, 0, 0, 0, 1, -1, 0],
            &[0, 0, 0, 0, 0, 0, 1, -1],
        ]),
    ),
    (
        "A7'",
        GenSpec::Simple(&[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "4A1",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 1, 1, 2, 1, 0, 0, 0],
        ]),
    ),
    (
        "4A1'",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A3+2A1",
        GenSpec::Simple(&[
            E8_BETA_P,
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A3+2A1'",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "2A3",
        GenSpec::Simple(&[
            E8_BETA_P,
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "2A3'",
        GenSpec::Simple(&[
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A5+A1",
        GenSpec::Simple(&[
            E8_BETA_PP,
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
    (
        "A5+A1'",
        GenSpec::Simple(&[
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ]),
    ),
];

const D4_NAMED: &[(&str, GenSpec)] = &[
    ("A1", GenSpec::Coord(&[&[1, -1, 0, 0]])),
    ("A2", GenSpec::Coord(&[&[1, -1, 0, 0], &[0, 1, -1, 0]])),
    (
        "A3",
        GenSpec::Coord(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1]]),
    ),
    (
        "A3'",
        GenSpec::Coord(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, 1]]),
    ),
    (
        "D3",
        GenSpec::Coord(&[&[0, 1, -1, 0], &[0, 0, 1, -1], &[0, 0, 1, 1]]),
    ),
    ("2A1", GenSpec::Coord(&[&[1, -1, 0, 0], &[0, 0, 1, -1]])),
    ("2A1'", GenSpec::Coord(&[&[1, -1, 0, 0], &[0, 0, 1, 1]])),
    ("D2", GenSpec::Coord(&[&[1, -1, 0, 0], &[1, 1, 0, 0]])),
    (
        "3A1",
        GenSpec::Coord(&[&[1, -1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, -1]]),
    ),
    (
        "D2+A1",
        GenSpec::Coord(&[&[1, -1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, -1]]),
    ),
    (
        "2D2",
        GenSpec::Coord(&[
            &[1, -1, 0, 0],
            &[1, 1, 0, 0],
            &[0, 0, 1, -1],
            &[0, 0, 1, 1],
        ]),
    ),
    (
        "4A1",
        GenSpec::Coord(&[
            &[1, -1, 0, 0],
            &[1, 1, 0, 0],
            &[0, 0, 1, -1],
            &[0, 0, 1, 1],
        ]),
    ),
    ("D4", GenSpec::Full),
];

const G2_NAMED: &[(&str, GenSpec)] = &[
    ("A1^L", GenSpec::Simple(&[&[1, 0]])),
    ("A1^S", GenSpec::Simple(&[&[0, 1]])),
    ("A2^L", GenSpec::Simple(&[&[1, 0], &[1, 3]])),
    ("A2^S", GenSpec::Simple(&[&[1, 1], &[0, 1]])),
    ("A1^L+A1^S", GenSpec::Simple(&[&[1, 0], &[1, 2]])),
    ("G2", GenSpec::Full),
];

const F4_NAMED: &[(&str, GenSpec)] = &[
    (
        "B4",
        GenSpec::Simple(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 1, 2, 0], &[0, 0, 0, 1]]),
    ),
    (
        "C4",
        GenSpec::Simple(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 1, 0], &[1, 0, 0, 0]]),
    ),
    ("D4^L", GenSpec::LongRoots),
    ("D4^S", GenSpec::ShortRoots),
    ("F4", GenSpec::Full),
];

fn explicit_table(parent: &RootSystem) -> &'static [(&'static str, GenSpec)] {
    match &parent.label {
        Label::Simple(t) => match (t.family, t.rank) {
            (Family::D, 4) => D4_NAMED,
            (Family::G, 2) => G2_NAMED,
            (Family::F, 4) => F4_NAMED,
            (Family::E, 7) => E7_NAMED,
            (Family::E, 8) => E8_NAMED,
            _ => &[],
        },
        _ => &[],
    }
}

fn resolve_genspec(parent: &Arc<RootSystem>, spec: &GenSpec) -> Result<SubRootSystem> {
    match spec {
        GenSpec::Full => Ok(parent.full_subsystem()),
        GenSpec::ShortRoots => Ok(parent.full_subsystem().short_subsystem()),
        GenSpec::LongRoots => {
            let maxn = (0..parent.num_roots() as u32)
                .map(|i| parent.norm2_of(i).clone())
                .max()
                .ok_or(Error::ZeroVector)?;
            let ids: Vec<Weight> = (0..parent.num_roots() as u32)
                .filter(|&i| parent.norm2_of(i) == &maxn)
                .map(|i| parent.root(i).clone())
                .collect();
            parent.subsystem_from_roots(&ids)
        }
        GenSpec::Simple(rows) => {
            let simple = parent.simple_roots();
            let gens: Vec<Weight> = rows
                .iter()
                .map(|row| {
                    let mut w = Weight::zero(parent.space.dim());
                    for (c, alpha) in row.iter().zip(simple) {
                        w = w.add(&alpha.scale(&q(*c)));
                    }
                    w
                })
                .collect();
            parent.generated_subsystem(&gens)
        }
        GenSpec::Coord(rows) => {
            let gens: Vec<Weight> = rows
                .iter()
                .map(|row| Weight::new(row.iter().map(|&c| q(c)).collect()))
                .collect();
            parent.generated_subsystem(&gens)
        }
    }
}

/// One parsed summand of a type name: count, label, and length decoration.
#[derive(Clone, Debug, PartialEq, Eq)]
struct NamePart {
    count: usize,
    label: TypeLabel,
    deco: Option<char>, // 'S' or 'L'
}

/// Normalize a subsystem name: strip spaces, underscores and parentheses,
/// move primes to a trailing marker, sort summands canonically.
pub fn normalize_name(raw: &str) -> Result<String> {
    let mut s = String::new();
    let mut primes = 0usize;
    for ch in raw.chars() {
        match ch {
            ' ' | '_' | '(' | ')' => {}
            '\'' | '′' => primes += 1,
            _ => s.push(ch),
        }
    }
    if s.is_empty() || s == "0" || s == "∅" || s.eq_ignore_ascii_case("empty") {
        return Ok("∅".into());
    }
    let mut parts = parse_parts(&s)?;
    parts.sort_by(|x, y| {
        y.label
            .rank
            .cmp(&x.label.rank)
            .then_with(|| x.label.family.cmp(&y.label.family))
            .then_with(|| x.deco.cmp(&y.deco))
    });
    // Merge identical summands.
    let mut merged: Vec<NamePart> = Vec::new();
    for p in parts {
        match merged.last_mut() {
            Some(last) if last.label == p.label && last.deco == p.deco => last.count += p.count,
            _ => merged.push(p),
        }
    }
    let mut out = String::new();
    for (i, p) in merged.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        if p.count > 1 {
            out.push_str(&p.count.to_string());
        }
        out.push_str(&p.label.to_string());
        if let Some(d) = p.deco {
            out.push('^');
            out.push(d);
        }
    }
    if primes > 0 {
        out.push('\'');
    }
    Ok(out)
}

fn parse_parts(s: &str) -> Result<Vec<NamePart>> {
    s.split('+')
        .map(|part| {
            let part = part.trim();
            let digits_end = part.chars().take_while(|c| c.is_ascii_digit()).count();
            let (count_str, rest) = part.split_at(digits_end);
            let count = if count_str.is_empty() {
                1
            } else {
                count_str
                    .parse()
                    .map_err(|_| Error::InvalidLabel(part.into()))?
            };
            let (body, deco) = match rest.split_once('^') {
                Some((b, d)) if d == "S" || d == "L" => (b, Some(d.chars().next().unwrap())),
                Some(_) => return Err(Error::InvalidLabel(part.into())),
                None => (rest, None),
            };
            let label = TypeLabel::parse(body)?;
            Ok(NamePart { count, label, deco })
        })
        .collect()
}

/// Render the canonical name of a subsystem from its embedded components,
/// decorating single-length factors with `^S`/`^L` when the parent has two
/// root lengths.
pub fn canonical_type_name(phi: &SubRootSystem) -> String {
    if phi.is_empty() {
        return "∅".into();
    }
    let parent = &phi.parent;
    let norms: HashSet<Q> = (0..parent.num_roots() as u32)
        .map(|i| parent.norm2_of(i).clone())
        .collect();
    let two_lengths = norms.len() == 2;
    let long_k = norms.iter().max().cloned().unwrap_or_else(|| q(1));
    let mut parts: Vec<NamePart> = phi
        .components()
        .iter()
        .map(|c| {
            let deco = if two_lengths
                && matches!(c.embedded.family, Family::A | Family::D)
            {
                if c.embedded.k == q(1) {
                    Some('S')
                } else if c.embedded.k == long_k {
                    Some('L')
                } else {
                    None
                }
            } else {
                None
            };
            NamePart {
                count: 1,
                label: TypeLabel::new(c.embedded.family, c.embedded.rank)
                    .expect("component labels are valid"),
                deco,
            }
        })
        .collect();
    parts.sort_by(|x, y| {
        y.label
            .rank
            .cmp(&x.label.rank)
            .then_with(|| x.label.family.cmp(&y.label.family))
            .then_with(|| x.deco.cmp(&y.deco))
    });
    let mut merged: Vec<NamePart> = Vec::new();
    for p in parts {
        match merged.last_mut() {
            Some(last) if last.label == p.label && last.deco == p.deco => last.count += p.count,
            _ => merged.push(p),
        }
    }
    let mut out = String::new();
    for (i, p) in merged.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        if p.count > 1 {
            out.push_str(&p.count.to_string());
        }
        out.push_str(&p.label.to_string());
        if let Some(d) = p.deco {
            out.push('^');
            out.push(d);
        }
    }
    out
}

/// Resolve a named sub-root system of an exceptional or classical parent.
///
/// Explicitly catalogued names (including all primed representatives) take
/// precedence; any other name is interpreted as an embedded type and looked
/// up by backtracking search (exceptional parents) or as an index tuple
/// (classical parents). Types whose conjugacy class is not unique must be
/// catalogued, so the search path never resolves an ambiguous name.
pub fn named_subsystem(parent: &Arc<RootSystem>, name: &str) -> Result<SubRootSystem> {
    let norm = normalize_name(name)?;
    if norm == "∅" {
        return parent.generated_subsystem(&[]);
    }
    if let Label::Simple(t) = &parent.label {
        if norm == t.to_string() {
            return Ok(parent.full_subsystem());
        }
    }
    for (key, spec) in explicit_table(parent) {
        if *key == norm {
            return resolve_genspec(parent, spec);
        }
    }
    if norm.ends_with('\'') {
        return Err(Error::UnknownName {
            parent: format!("{}", parent.label),
            name: name.into(),
        });
    }
    let parts = parse_parts(&norm)?;
    match &parent.label {
        Label::Simple(t)
            if matches!(
                t.family,
                Family::A | Family::B | Family::C | Family::D | Family::BC
            ) =>
        {
            let mut idx = ClassicalIndex::default();
            for p in &parts {
                for _ in 0..p.count {
                    match p.label.family {
                        Family::BC => idx.bc.push(p.label.rank),
                        Family::B => idx.b.push(p.label.rank),
                        Family::C => idx.c.push(p.label.rank),
                        Family::D => idx.d.push(p.label.rank),
                        Family::A => idx.a.push(p.label.rank + 1),
                        _ => {
                            return Err(Error::UnknownName {
                                parent: format!("{}", parent.label),
                                name: name.into(),
                            })
                        }
                    }
                }
            }
            classical_subsystem(parent, &idx.normalized())
        }
        _ => {
            let targets = targets_from_parts(parent, &parts)?;
            find_subsystem_of_type(parent, &targets)
        }
    }
}

/// Translate name parts into embedded-type search targets for the parent.
fn targets_from_parts(
    parent: &Arc<RootSystem>,
    parts: &[NamePart],
) -> Result<Vec<(TypeLabel, Q)>> {
    let norms: HashSet<Q> = (0..parent.num_roots() as u32)
        .map(|i| parent.norm2_of(i).clone())
        .collect();
    let long_k = norms.iter().max().cloned().unwrap_or_else(|| q(1));
    let mut out = Vec::new();
    for p in parts {
        let k = match p.deco {
            Some('L') => long_k.clone(),
            Some('S') | None => q(1),
            _ => unreachable!(),
        };
        for _ in 0..p.count {
            out.push((p.label, k.clone()));
        }
    }
    Ok(out)
}

/// Simple-system Gram matrix of the standard realization, rescaled so that
/// the factor's short roots have squared length `k`.
fn target_gram(label: TypeLabel, k: &Q) -> Result<Vec<Vec<Q>>> {
    let rs = RootSystem::build(label)?;
    let min_norm = (0..rs.num_roots() as u32)
        .map(|i| rs.norm2_of(i).clone())
        .min()
        .ok_or(Error::ZeroVector)?;
    let simple = rs.simple_roots();
    let scale = k / &min_norm;
    Ok(simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| rs.space.pairing(a, b).unwrap() * &scale)
                .collect()
        })
        .collect())
}

/// Find one sub-root system of the given embedded type by backtracking over
/// root tuples realizing the block-diagonal simple-system Gram matrix.
pub fn find_subsystem_of_type(
    parent: &Arc<RootSystem>,
    targets: &[(TypeLabel, Q)],
) -> Result<SubRootSystem> {
    find_subsystem_of_type_orth(parent, targets, &[])
}

/// As [`find_subsystem_of_type`], requiring every chosen root to be
/// orthogonal to the given root ids; returns only the found part.
pub fn find_subsystem_of_type_orth(
    parent: &Arc<RootSystem>,
    targets: &[(TypeLabel, Q)],
    orth_ids: &[u32],
) -> Result<SubRootSystem> {
    if targets.is_empty() {
        return parent.generated_subsystem(&[]);
    }
    // Stitch the per-factor Gram blocks together, remembering factor starts.
    let mut gram_blocks = Vec::new();
    let mut factor_start = Vec::new();
    let mut total = 0usize;
    for (label, k) in targets {
        let g = target_gram(*label, k)?;
        factor_start.push(total);
        total += g.len();
        gram_blocks.push(g);
    }
    let pairing_target = |i: usize, j: usize| -> Q {
        // block-diagonal lookup
        let fi = factor_start.iter().rposition(|&s| s <= i).unwrap();
        let fj = factor_start.iter().rposition(|&s| s <= j).unwrap();
        if fi != fj {
            Q::zero()
        } else {
            gram_blocks[fi][i - factor_start[fi]][j - factor_start[fj]].clone()
        }
    };
    let n = parent.num_roots() as u32;
    let mut chosen: Vec<u32> = Vec::with_capacity(total);
    let mut nodes = 0u64;
    const NODE_CAP: u64 = 50_000_000;

    fn search(
        parent: &Arc<RootSystem>,
        total: usize,
        n: u32,
        pairing_target: &dyn Fn(usize, usize) -> Q,
        factor_start: &[usize],
        targets: &[(TypeLabel, Q)],
        orth_ids: &[u32],
        chosen: &mut Vec<u32>,
        nodes: &mut u64,
    ) -> Result<bool> {
        if chosen.len() == total {
            return Ok(true);
        }
        let pos = chosen.len();
        // Symmetry breaking: identical factors are chosen with increasing
        // first-root ids.
        let mut min_id = 0u32;
        if let Some(f) = factor_start.iter().position(|&s| s == pos) {
            if f > 0 && targets[f] == targets[f - 1] {
                min_id = chosen[factor_start[f - 1]] + 1;
            }
        }
        for cand in min_id..n {
            *nodes += 1;
            if *nodes > NODE_CAP {
                return Err(Error::BudgetExceeded {
                    what: "type search",
                    needed: *nodes,
                    cap: NODE_CAP,
                });
            }
            if parent.norm2_of(cand) != &pairing_target(pos, pos) {
                continue;
            }
            let cw = parent.root(cand);
            if orth_ids
                .iter()
                .any(|&o| !parent.space.pairing(cw, parent.root(o)).unwrap().is_zero())
            {
                continue;
            }
            let ok = chosen.iter().enumerate().all(|(j, &prev)| {
                parent.space.pairing(parent.root(prev), cw).unwrap() == pairing_target(j, pos)
            });
            if !ok {
                continue;
            }
            chosen.push(cand);
            if search(
                parent,
                total,
                n,
                pairing_target,
                factor_start,
                targets,
                orth_ids,
                chosen,
                nodes,
            )? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    let found = search(
        parent,
        total,
        n,
        &pairing_target,
        &factor_start,
        targets,
        orth_ids,
        &mut chosen,
        &mut nodes,
    )?;
    if !found {
        return Err(Error::UnknownName {
            parent: format!("{}", parent.label),
            name: targets
                .iter()
                .map(|(l, k)| format!("{l}[k={}]", crate::rat::fmt_q(k)))
                .collect::<Vec<_>>()
                .join("+"),
        });
    }
    let gens: Vec<Weight> = chosen.iter().map(|&i| parent.root(i).clone()).collect();
    let sub = parent.generated_subsystem(&gens)?;
    // The chosen tuple realizes the Gram matrix; confirm the closure has the
    // requested embedded type before trusting it.
    let mut expected: Vec<(Family, usize, Q)> = targets
        .iter()
        .map(|(l, k)| (canonical_abstract(l.family, l.rank).0, canonical_abstract(l.family, l.rank).1, k.clone()))
        .collect();
    expected.sort();
    let mut got: Vec<(Family, usize, Q)> = sub
        .embedded_type()
        .into_iter()
        .map(|EmbeddedType { family, rank, k }| {
            let (f, r) = canonical_abstract(family, rank);
            (f, r, k)
        })
        .collect();
    got.sort();
    if expected != got {
        return Err(Error::UnknownName {
            parent: format!("{}", parent.label),
            name: "type search produced a different closure".into(),
        });
    }
    Ok(sub)
}

/// Conjugacy-class fingerprint: component types, the canonical
/// representative of `2δ_Φ` under the symmetry group, and the generating
/// function (reduced subsystems only).
///
/// Under the plain Weyl group the coordinate-block structure is preserved
/// and embedded labels are used; outer automorphisms can reshape blocks
/// (triality turns a `D_2` block into two `A_1` blocks), so extended groups
/// fall back to the isometry-invariant abstract signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fingerprint {
    pub embedded: Option<Vec<EmbeddedType>>,
    pub abstract_sig: Vec<(Family, usize, Q)>,
    pub delta_key: Weight,
    pub genfun: Option<UniPoly>,
}

pub fn fingerprint(phi: &SubRootSystem, spec: &SymmetrySpec) -> Fingerprint {
    let embedded = if spec.has_outer() {
        None
    } else {
        Some(phi.embedded_type())
    };
    let abstract_sig = phi.abstract_signature();
    let delta_key = weyl::canonical_rep(spec, &phi.two_delta());
    let genfun = if phi.is_reduced() {
        lp::genfun(phi).ok()
    } else {
        None
    };
    Fingerprint {
        embedded,
        abstract_sig,
        delta_key,
        genfun,
    }
}

/// Decide whether some element of the group of `spec` maps `phi1` onto
/// `phi2`: a fingerprint filter followed by an exact transporter scan over
/// the materialized permutation group.
pub fn are_conjugate(
    phi1: &SubRootSystem,
    phi2: &SubRootSystem,
    spec: &SymmetrySpec,
    perm_cap: u64,
) -> Result<bool> {
    if !Arc::ptr_eq(&phi1.parent, &spec.base) && phi1.parent.roots() != spec.base.roots() {
        return Err(Error::ContextMismatch);
    }
    if !Arc::ptr_eq(&phi1.parent, &phi2.parent) && phi1.parent.roots() != phi2.parent.roots() {
        return Err(Error::ContextMismatch);
    }
    if phi1.ids() == phi2.ids() {
        return Ok(true);
    }
    if phi1.len() != phi2.len() {
        return Ok(false);
    }
    if fingerprint(phi1, spec) != fingerprint(phi2, spec) {
        return Ok(false);
    }
    let group = spec.permutations(perm_cap)?;
    let target = RootMask::from_ids(phi2.ids());
    let src = phi1.ids();
    Ok(group
        .perms
        .iter()
        .any(|p| RootMask::from_mapped(src, p) == target))
}

/// Fixed-size bitmask over root ids (parents here have ≤ 256 roots).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootMask([u64; 4]);

impl RootMask {
    pub fn from_ids(ids: &[u32]) -> Self {
        let mut m = [0u64; 4];
        for &i in ids {
            m[(i >> 6) as usize] |= 1u64 << (i & 63);
        }
        RootMask(m)
    }

    pub fn from_mapped(ids: &[u32], perm: &[u16]) -> Self {
        let mut m = [0u64; 4];
        for &i in ids {
            let j = perm[i as usize] as u32;
            m[(j >> 6) as usize] |= 1u64 << (j & 63);
        }
        RootMask(m)
    }

    pub fn to_ids(self) -> Vec<u32> {
        let mut out = Vec::new();
        for (w, word) in self.0.iter().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let b = bits.trailing_zeros();
                out.push((w as u32) * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }
}

/// Budget for class enumeration.
#[derive(Clone, Debug)]
pub struct EnumerationBudget {
    pub perm_cap: u64,
    pub max_classes: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            perm_cap: DEFAULT_PERM_CAP,
            max_classes: 4096,
        }
    }
}

/// Exhaustively enumerate conjugacy classes of sub-root systems under the
/// group of `spec`, by closing class representatives with one more positive
/// root at a time and deduplicating canonical forms. The empty subsystem is
/// included. Output is deterministic, sorted by (size, canonical ids).
pub fn enumerate_subsystems(
    spec: &SymmetrySpec,
    budget: &EnumerationBudget,
) -> Result<Vec<SubRootSystem>> {
    let parent = &spec.base;
    let group = spec.permutations(budget.perm_cap)?;
    let canonical = |ids: &[u32]| -> RootMask {
        group
            .perms
            .iter()
            .map(|p| RootMask::from_mapped(ids, p))
            .min()
            .expect("group contains the identity")
    };
    let positives = parent.positive_ids();
    let mut seen: HashSet<RootMask> = HashSet::new();
    let empty = RootMask::from_ids(&[]);
    seen.insert(empty);
    let mut classes: Vec<Vec<u32>> = vec![Vec::new()];
    let mut head = 0usize;
    while head < classes.len() {
        let current = classes[head].clone();
        head += 1;
        for &p in &positives {
            if current.binary_search(&p).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(p);
            let closed = parent.close_ids(seed);
            let mask = canonical(closed.ids());
            if seen.insert(mask) {
                if classes.len() >= budget.max_classes {
                    return Err(Error::BudgetExceeded {
                        what: "class enumeration",
                        needed: classes.len() as u64 + 1,
                        cap: budget.max_classes as u64,
                    });
                }
                classes.push(mask.to_ids());
            }
        }
    }
    classes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    classes
        .into_iter()
        .map(|ids| {
            let weights: Vec<Weight> = ids.iter().map(|&i| parent.root(i).clone()).collect();
            parent.subsystem_from_roots(&weights)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Arc<RootSystem> {
        RootSystem::build(TypeLabel::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn name_normalization() {
        assert_eq!(normalize_name("(A_5)'").unwrap(), "A5'");
        assert_eq!(normalize_name("2A'_1").unwrap(), "2A1'");
        assert_eq!(normalize_name("2A_1+A_3").unwrap(), "A3+2A1");
        assert_eq!(normalize_name("A_1^S+A_1^L").unwrap(), "A1^L+A1^S");
        assert_eq!(normalize_name("A1^S + A1^S").unwrap(), "2A1^S");
        assert_eq!(normalize_name("").unwrap(), "∅");
    }

    #[test]
    fn classical_subsystem_examples() {
        // Φ_{3,2} in A_4 (n = 5): A_2 ⊔ A_1 on blocks {1,2,3}, {4,5}.
        let a4 = build("A4");
        let idx = ClassicalIndex::new(vec![], vec![], vec![], vec![], vec![3, 2]).unwrap();
        let phi = classical_subsystem(&a4, &idx).unwrap();
        assert_eq!(phi.len(), 8);
        assert_eq!(index_of_subsystem(&phi).unwrap(), idx.normalized());

        // B_1 + C_1 in BC_3.
        let bc3 = build("BC3");
        let idx = ClassicalIndex::new(vec![], vec![1], vec![1], vec![], vec![]).unwrap();
        let phi = classical_subsystem(&bc3, &idx).unwrap();
        assert_eq!(phi.len(), 4);
        let rec = index_of_subsystem(&phi).unwrap();
        assert_eq!(rec, idx.normalized());

        // 2D_2 in D_4.
        let d4 = build("D4");
        let idx = ClassicalIndex::new(vec![], vec![], vec![], vec![2, 2], vec![]).unwrap();
        let phi = classical_subsystem(&d4, &idx).unwrap();
        assert_eq!(phi.len(), 8);

        // Errors: rank overflow, short D factor, bad primed flag.
        assert!(classical_subsystem(
            &d4,
            &ClassicalIndex::new(vec![], vec![], vec![], vec![2, 2, 2], vec![]).unwrap()
        )
        .is_err());
        assert!(ClassicalIndex::new(vec![], vec![], vec![], vec![1], vec![]).is_err());
        let non_split = ClassicalIndex::new(vec![], vec![], vec![], vec![2], vec![2]).unwrap().primed();
        assert!(classical_subsystem(&d4, &non_split).is_err());
    }

    #[test]
    fn classical_roundtrip_small_ranks() {
        // classical_subsystem ∘ index_of_subsystem is the identity on
        // index data, exhaustively for BC_3.
        let bc3 = build("BC3");
        let mut count = 0;
        for idx in all_indices_bc(3) {
            let phi = classical_subsystem(&bc3, &idx).unwrap();
            assert_eq!(index_of_subsystem(&phi).unwrap(), idx);
            count += 1;
        }
        assert!(count > 10);
    }

    fn all_indices_bc(n: usize) -> Vec<ClassicalIndex> {
        // All multiset tuples with total ≤ n, A/D blocks ≥ 2.
        let mut out = Vec::new();
        let sizes: Vec<Vec<usize>> = partitions_upto(n);
        for bc in &sizes {
            for b in &sizes {
                for c in &sizes {
                    for d in &sizes {
                        for a in &sizes {
                            if d.iter().any(|&x| x < 2) || a.iter().any(|&x| x < 2) {
                                continue;
                            }
                            let idx = ClassicalIndex {
                                bc: bc.clone(),
                                b: b.clone(),
                                c: c.clone(),
                                d: d.clone(),
                                a: a.clone(),
                                primed: false,
                            };
                            if idx.total() <= n {
                                out.push(idx.normalized());
                            }
                        }
                    }
                }
            }
        }
        out.sort_by_key(|i| format!("{i:?}"));
        out.dedup();
        out
    }

    fn partitions_upto(n: usize) -> Vec<Vec<usize>> {
        // All descending multisets with sum ≤ n (including the empty one).
        fn rec(max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(cur.clone());
            for k in (1..=max.min(left)).rev() {
                cur.push(k);
                rec(k, left - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn named_g2_and_f4() {
        let g2 = build("G2");
        let a2s = named_subsystem(&g2, "A2^S").unwrap();
        assert_eq!(a2s.len(), 6);
        assert!(a2s.roots().all(|r| g2.space.norm2(r) == q(1)));
        let a2l = named_subsystem(&g2, "A2^L").unwrap();
        assert!(a2l.roots().all(|r| g2.space.norm2(r) == q(3)));
        let mixed = named_subsystem(&g2, "A1^L+A1^S").unwrap();
        assert_eq!(mixed.len(), 4);

        let f4 = build("F4");
        let b4 = named_subsystem(&f4, "B4").unwrap();
        assert_eq!(b4.len(), 32);
        let c4 = named_subsystem(&f4, "C4").unwrap();
        assert_eq!(c4.len(), 32);
        let d4l = named_subsystem(&f4, "D4^L").unwrap();
        assert_eq!(d4l.len(), 24);
        assert!(d4l.roots().all(|r| f4.space.norm2(r) == q(2)));
        let d4s = named_subsystem(&f4, "D4^S").unwrap();
        assert_eq!(d4s.len(), 24);
        // Searched names resolve too.
        let b2 = named_subsystem(&f4, "B2").unwrap();
        assert_eq!(b2.len(), 8);
        let a2la2s = named_subsystem(&f4, "A2^L+A2^S").unwrap();
        assert_eq!(a2la2s.len(), 12);
    }

    #[test]
    fn named_e7_primed_pairs_differ() {
        let e7 = build("E7");
        let a5 = named_subsystem(&e7, "A5").unwrap();
        let a5p = named_subsystem(&e7, "(A5)'").unwrap();
        assert_eq!(a5.len(), 30);
        assert_eq!(a5p.len(), 30);
        assert_ne!(a5.ids(), a5p.ids());
        let spec = SymmetrySpec::weyl(Arc::clone(&e7));
        let f1 = fingerprint(&a5, &spec);
        let f2 = fingerprint(&a5p, &spec);
        assert_eq!(f1.embedded, f2.embedded);
        assert_ne!(f1.delta_key, f2.delta_key);
    }

    #[test]
    fn named_unknown_errors() {
        let g2 = build("G2");
        assert!(matches!(
            named_subsystem(&g2, "B17"),
            Err(Error::InvalidLabel(_)) | Err(Error::UnknownName { .. })
        ));
        let e7 = build("E7");
        assert!(matches!(
            named_subsystem(&e7, "(A4)'"),
            Err(Error::UnknownName { .. })
        ));
    }

    #[test]
    fn conjugacy_d4_pairs() {
        let d4 = build("D4");
        let w = SymmetrySpec::weyl(Arc::clone(&d4));
        let aut = SymmetrySpec::aut(Arc::clone(&d4)).unwrap();
        let x = named_subsystem(&d4, "2A1").unwrap();
        let y = named_subsystem(&d4, "2A1'").unwrap();
        let z = named_subsystem(&d4, "D2").unwrap();
        assert!(!are_conjugate(&x, &y, &w, 10_000).unwrap());
        assert!(!are_conjugate(&x, &z, &w, 10_000).unwrap());
        assert!(are_conjugate(&x, &y, &aut, 10_000).unwrap());
        assert!(are_conjugate(&x, &z, &aut, 10_000).unwrap());
        assert!(are_conjugate(&x, &x, &w, 10_000).unwrap());
    }

    #[test]
    fn conjugacy_f4_length_fingerprint() {
        let f4 = build("F4");
        let aut = SymmetrySpec::aut(Arc::clone(&f4)).unwrap();
        let a3l = named_subsystem(&f4, "A3^L").unwrap();
        let a3s = named_subsystem(&f4, "A3^S").unwrap();
        assert!(!are_conjugate(&a3l, &a3s, &aut, 10_000).unwrap());
    }

    #[test]
    fn enumerate_g2_classes() {
        let g2 = build("G2");
        let spec = SymmetrySpec::weyl(Arc::clone(&g2));
        let classes = enumerate_subsystems(&spec, &EnumerationBudget::default()).unwrap();
        assert_eq!(classes.len(), 7);
        let names: Vec<String> = classes.iter().map(canonical_type_name).collect();
        let expected: HashSet<&str> =
            ["∅", "A1^L", "A1^S", "A2^L", "A2^S", "A1^L+A1^S", "G2"]
                .into_iter()
                .collect();
        assert_eq!(names.iter().map(String::as_str).collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn enumerate_d4_classes() {
        let d4 = build("D4");
        let spec = SymmetrySpec::weyl(Arc::clone(&d4));
        let classes = enumerate_subsystems(&spec, &EnumerationBudget::default()).unwrap();
        assert_eq!(classes.len(), 12);
        // Under the full automorphism group the triples collapse: 12 → 8.
        let aut = SymmetrySpec::aut(Arc::clone(&d4)).unwrap();
        let classes = enumerate_subsystems(&aut, &EnumerationBudget::default()).unwrap();
        assert_eq!(classes.len(), 8);
    }

    #[test]
    fn enumerate_a_series_matches_partitions() {
        // Classes of A_{n-1} ↔ partitions of n with at least one part ≥ 2,
        // plus the empty class.
        for n in 2..=5usize {
            let parent = build(&format!("A{}", n - 1));
            let spec = SymmetrySpec::weyl(Arc::clone(&parent));
            let classes = enumerate_subsystems(&spec, &EnumerationBudget::default()).unwrap();
            let partitions = partitions_exact(n)
                .into_iter()
                .filter(|p| p.iter().any(|&x| x >= 2))
                .count();
            assert_eq!(classes.len(), partitions + 1, "A{}", n - 1);
        }
    }

    fn partitions_exact(n: usize) -> Vec<Vec<usize>> {
        fn rec(max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for k in (1..=max.min(left)).rev() {
                cur.push(k);
                rec(k, left - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn enumeration_budget_error() {
        let g2 = build("G2");
        let spec = SymmetrySpec::weyl(Arc::clone(&g2));
        let budget = EnumerationBudget {
            perm_cap: 10_000,
            max_classes: 3,
        };
        assert!(matches!(
            enumerate_subsystems(&spec, &budget),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn find_type_in_e6() {
        let e6 = build("E6");
        let a2 = TypeLabel::parse("A2").unwrap();
        let found =
            find_subsystem_of_type(&e6, &[(a2, q(1)), (a2, q(1)), (a2, q(1))]).unwrap();
        assert_eq!(found.len(), 18);
        assert_eq!(canonical_type_name(&found), "3A2");
    }
}
