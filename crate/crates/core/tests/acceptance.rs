//! Acceptance suite: every criterion is exercised at its stated tolerance
//! (all exact) and prints one pass/fail line. Run with
//! `cargo test -p dimdata --test acceptance -- --nocapture` to see the lines.

use dimdata::characters::{self, Character};
use dimdata::golden;
use dimdata::lattice::{AmbientSpace, Lattice, Weight};
use dimdata::lp;
use dimdata::rat::{fmt_q, q, qr};
use dimdata::reports::{self, RowStatus};
use dimdata::roots::{canonical_abstract, RootSystem, SubRootSystem, TypeLabel};
use dimdata::subsystems::{self, EnumerationBudget};
use dimdata::weyl::{self, SymmetrySpec};
use dimdata::Q;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

const ORBIT_CAP: u64 = 10_000_000;

fn build(s: &str) -> Arc<RootSystem> {
    RootSystem::build(TypeLabel::parse(s).unwrap()).unwrap()
}

fn verdict(criterion: &str, pass: bool, detail: &str, started: Instant) {
    let line = format!(
        "{criterion}: {} — {detail} ({:.2?})",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed()
    );
    println!("{line}");
    assert!(pass, "{line}");
}

#[test]
fn criterion_01_e_value_table() {
    let t = Instant::now();
    let rows = reports::table1().unwrap();
    let all = rows.iter().all(|r| r.pass());
    let within_budget = t.elapsed().as_secs() < 5;
    verdict(
        "criterion 1",
        all && within_budget,
        &format!("e values for {} classical and exceptional labels", rows.len()),
        t,
    );
}

#[test]
fn criterion_02_leading_term_tables() {
    let t = Instant::now();
    let mut ok = true;
    let mut total = 0;
    let mut reported = 0;
    for parent in ["D4", "E6", "F4", "G2", "E7", "E8"] {
        let rows = reports::verify_tables(TypeLabel::parse(parent).unwrap()).unwrap();
        for r in &rows {
            total += 1;
            match r.status {
                RowStatus::Ok => {}
                RowStatus::PaperInconsistent => reported += 1,
                RowStatus::Mismatch => {
                    println!("  mismatch: {} {}", r.parent, r.name);
                    ok = false;
                }
            }
        }
    }
    let within_budget = t.elapsed().as_secs() < 120;
    verdict(
        "criterion 2",
        ok && within_budget,
        &format!("{total} table rows verified, {reported} source-inconsistent rows reported"),
        t,
    );
}

#[test]
fn criterion_03_polynomial_identities() {
    let t = Instant::now();
    let report = lp::verify_identities(5).unwrap();
    let within_budget = t.elapsed().as_secs() < 30;
    for c in &report.checks {
        assert!(c.pass, "{} at n = {}", c.name, c.n);
    }
    verdict(
        "criterion 3",
        report.all_pass() && within_budget,
        &format!("{} polynomial identities evaluate to zero", report.checks.len()),
        t,
    );
}

#[test]
fn criterion_04_f4_equalities() {
    let t = Instant::now();
    let f4 = build("F4");
    let sym = SymmetrySpec::weyl(Arc::clone(&f4));
    let f = |name: &str| {
        let phi = subsystems::named_subsystem(&f4, name).unwrap();
        characters::character_f(&phi, &sym, ORBIT_CAP).unwrap()
    };
    let eq1 = characters::characters_equal(&f("A2^S"), &f("A1^L+2A1^S")).unwrap();
    let eq2 = characters::characters_equal(&f("A1^L+A2^S"), &f("2A1^L+2A1^S")).unwrap();
    let neq = !characters::characters_equal(&f("2A1^S+B2"), &f("A1^L+A3^S")).unwrap();
    // Expansions must equal the displayed characters term by term.
    let expansions = reports::verify_expansions(TypeLabel::parse("F4").unwrap()).unwrap();
    let disp = expansions.iter().all(|e| e.matches);
    verdict(
        "criterion 4",
        eq1 && eq2 && neq && disp,
        "F4 character equalities and displayed expansions",
        t,
    );
}

#[test]
fn criterion_05_relation_catalog() {
    let t = Instant::now();
    let mut count = 0;
    let mut ok = true;
    for parent in ["D4", "G2", "E6", "E7", "E8", "F4"] {
        let label = TypeLabel::parse(parent).unwrap();
        let rs = RootSystem::build(label).unwrap();
        let sym = SymmetrySpec::weyl(Arc::clone(&rs));
        for spec in golden::RELATIONS.iter().filter(|s| s.parent == parent) {
            count += 1;
            let resolved = reports::resolve_relation(spec).unwrap();
            let mut sum: BTreeMap<Weight, Q> = BTreeMap::new();
            let mut perturbed: BTreeMap<Weight, Q> = BTreeMap::new();
            for (i, (coeff, sub)) in resolved.iter().enumerate() {
                assert!(
                    weyl::weyl_order_sub(sub) <= 10_000,
                    "{}: |W_Phi| cap",
                    spec.id
                );
                let f = characters::character_f(sub, &sym, ORBIT_CAP).unwrap();
                let pcoeff = if i == 0 { coeff + 1 } else { *coeff };
                for (k, v) in &f.terms {
                    *sum.entry(k.clone()).or_insert_with(Q::zero) += v * q(*coeff);
                    *perturbed.entry(k.clone()).or_insert_with(Q::zero) += v * q(pcoeff);
                }
            }
            sum.retain(|_, v| !v.is_zero());
            perturbed.retain(|_, v| !v.is_zero());
            if !sum.is_empty() {
                println!("  relation {} does not vanish", spec.id);
                ok = false;
            }
            if perturbed.is_empty() {
                println!("  perturbed relation {} still vanishes", spec.id);
                ok = false;
            }
        }
    }
    let within_budget = t.elapsed().as_secs() < 600;
    verdict(
        "criterion 5",
        ok && count == 31 && within_budget,
        &format!("{count} catalogued relations vanish exactly (and fail when perturbed)"),
        t,
    );
}

#[test]
fn criterion_06_nullspace_uniqueness() {
    let t = Instant::now();
    let budget = EnumerationBudget::default();
    let g2 = reports::relation_nullspace(TypeLabel::parse("G2").unwrap(), &budget).unwrap();
    let d4 = reports::relation_nullspace(TypeLabel::parse("D4").unwrap(), &budget).unwrap();
    let f4 = reports::relation_nullspace(TypeLabel::parse("F4").unwrap(), &budget).unwrap();
    let ok = g2.nullspace_dim == 1
        && g2.class_count == 7
        && g2.catalog_inside
        && d4.nullspace_dim == 1
        && d4.class_count == 12
        && d4.catalog_inside
        && f4.class_count == 37
        && f4.nullspace_dim == f4.catalog_rank
        && f4.catalog_rank == 12
        && f4.catalog_inside;
    verdict(
        "criterion 6",
        ok,
        &format!(
            "nullspace dims: G2 {} (7 classes), D4 {} (12 classes), F4 {} = catalog rank over 37 classes",
            g2.nullspace_dim, d4.nullspace_dim, f4.nullspace_dim
        ),
        t,
    );
}

#[test]
fn criterion_07_generating_functions() {
    let t = Instant::now();
    // Closed forms.
    let f = |s: &str| {
        let rs = build(s);
        lp::genfun(&rs.full_subsystem()).unwrap()
    };
    let prod = |ks: &[u64]| {
        let mut p = lp::UniPoly::one();
        for &k in ks {
            p = &p * &lp::UniPoly::one_minus_t_pow(k);
        }
        p
    };
    let closed = f("A1") == prod(&[1])
        && f("A2") == prod(&[1, 1, 2])
        && f("B2") == prod(&[1, 2, 3, 4])
        && f("G2") == prod(&[1, 3, 4, 5, 6, 9])
        && f("A3") == prod(&[1, 1, 1, 2, 2, 3]);
    // Quoted leading coefficients.
    let samples = reports::verify_genfun_samples().unwrap();
    let sampled = samples.iter().all(|s| s.matches);
    verdict(
        "criterion 7",
        closed && sampled,
        &format!("closed forms and {} quoted coefficient runs", samples.len()),
        t,
    );
}

#[test]
fn criterion_08_triangle_identities() {
    let t = Instant::now();
    let parents = [
        "A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4", "C1", "C2", "C3", "C4", "BC1", "BC2",
        "BC3", "BC4", "D2", "D3", "D4", "G2", "F4",
    ];
    let mut checked = 0;
    let mut ok = true;
    for parent in parents {
        let label = TypeLabel::parse(parent).unwrap();
        let rs = RootSystem::build(label).unwrap();
        let sym = SymmetrySpec::weyl(Arc::clone(&rs));
        let classes =
            subsystems::enumerate_subsystems(&sym, &EnumerationBudget::default()).unwrap();
        for phi in classes.iter().filter(|c| c.is_reduced()) {
            let f = characters::character_f(phi, &sym, ORBIT_CAP).unwrap();
            let genfun = lp::genfun(phi).unwrap();
            if lp::eprime(&f).unwrap() != genfun {
                println!("  E'(F) != f for {} in {}", subsystems::canonical_type_name(phi), parent);
                ok = false;
            }
            if label.family == dimdata::roots::Family::BC
                && lp::embed_e(&f).unwrap().specialize_psi() != genfun
            {
                println!("  psi(E(F)) != f for {} in {}", subsystems::canonical_type_name(phi), parent);
                ok = false;
            }
            checked += 1;
        }
    }
    verdict(
        "criterion 8",
        ok && checked > 100,
        &format!("E'(F) = f and psi(E(F)) = f over {checked} classes in rank <= 4 parents"),
        t,
    );
}

#[test]
fn criterion_09_small_norm_lemmas() {
    let t = Instant::now();
    let e6 = reports::verify_small_norm(TypeLabel::parse("E6").unwrap()).unwrap();
    let f4 = reports::verify_small_norm(TypeLabel::parse("F4").unwrap()).unwrap();
    for f in &e6.flagged {
        println!("  E6 lemma entry reported: {f}");
    }
    verdict(
        "criterion 9",
        e6.pass && f4.pass && f4.flagged.is_empty(),
        &format!(
            "orbit data verified (E6: {} norms, {} source entries reported; F4: {} norms)",
            e6.counts.len(),
            e6.flagged.len(),
            f4.counts.len()
        ),
        t,
    );
}

#[test]
fn criterion_10_oracle_equivalence() {
    let t = Instant::now();
    // Counting criterion agrees with direct character equality on BC_n, n <= 4.
    let mut pairs = 0;
    let mut ok = true;
    for n in 1..=4usize {
        let bc = build(&format!("BC{n}"));
        let sym = SymmetrySpec::weyl(Arc::clone(&bc));
        let classes = subsystems::enumerate_subsystems(&sym, &EnumerationBudget::default())
            .unwrap()
            .into_iter()
            .filter(|c| c.is_reduced())
            .collect::<Vec<_>>();
        let chars: Vec<Character> = classes
            .iter()
            .map(|c| characters::character_f(c, &sym, ORBIT_CAP).unwrap())
            .collect();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let direct = characters::characters_equal(&chars[i], &chars[j]).unwrap();
                let criterion =
                    characters::classical_equal_criterion(&classes[i], &classes[j]).unwrap();
                if direct != criterion {
                    println!(
                        "  disagreement in BC{n}: {} vs {}",
                        subsystems::canonical_type_name(&classes[i]),
                        subsystems::canonical_type_name(&classes[j])
                    );
                    ok = false;
                }
                pairs += 1;
            }
        }
    }
    // Type-D dichotomy: the four conditions are mutually equivalent.
    let mut d_classes = 0;
    for n in [5usize, 6] {
        let dn = build(&format!("D{n}"));
        let sym = SymmetrySpec::weyl(Arc::clone(&dn));
        let flip = weyl::diagram_automorphisms(&dn)
            .into_iter()
            .next()
            .expect("D_n has the last-coordinate flip");
        let classes =
            subsystems::enumerate_subsystems(&sym, &EnumerationBudget::default()).unwrap();
        for phi in &classes {
            if phi.is_empty() {
                continue;
            }
            d_classes += 1;
            let f = characters::character_f(phi, &sym, ORBIT_CAP).unwrap();
            // (1) F_{Phi,W_Dn} != F_{Phi,W_n}  <=>  F is not flip-invariant.
            let c1 = f.map_keys(&flip).terms != f.terms;
            // (2) 2delta' is not invariant under the full signed group.
            let two_delta_prime = weyl::dominant_rep(&dn, &phi.two_delta());
            let c2 = weyl::dominant_rep(&dn, &flip.apply(&two_delta_prime)) != two_delta_prime;
            // (3) all blocks are even A blocks filling the rank.
            let idx = subsystems::index_of_subsystem(phi).unwrap();
            let c3 = idx.is_split_for_d(n);
            // (4) phi is not W_{D_n}-conjugate to its flip.
            let flipped: Vec<Weight> = phi.roots().map(|r| flip.apply(r)).collect();
            let flipped = dn.subsystem_from_roots(&flipped).unwrap();
            let c4 = !subsystems::are_conjugate(phi, &flipped, &sym, 100_000).unwrap();
            if !(c1 == c2 && c2 == c3 && c3 == c4) {
                println!(
                    "  dichotomy failure in D{n} for {}: ({c1},{c2},{c3},{c4})",
                    subsystems::canonical_type_name(phi)
                );
                ok = false;
            }
        }
    }
    verdict(
        "criterion 10",
        ok && pairs > 100,
        &format!("{pairs} BC pairs agree with the counting criterion; dichotomy equivalent on {d_classes} D5/D6 classes"),
        t,
    );
}

#[test]
fn criterion_11_core_invariants() {
    let t = Instant::now();
    let mut ok = true;
    let mut chars = 0;
    for parent in ["A3", "BC3", "D4", "G2", "F4"] {
        let label = TypeLabel::parse(parent).unwrap();
        let rs = RootSystem::build(label).unwrap();
        let sym = SymmetrySpec::weyl(Arc::clone(&rs));
        let classes =
            subsystems::enumerate_subsystems(&sym, &EnumerationBudget::default()).unwrap();
        for phi in classes.iter().filter(|c| c.is_reduced() && !c.is_empty()) {
            chars += 1;
            let f = characters::character_f(phi, &sym, ORBIT_CAP).unwrap();
            if f.constant_term() != q(1) {
                println!("  constant term != 1 for {parent}");
                ok = false;
            }
            let longest = f.longest_keys();
            let expected_key = weyl::canonical_rep(&sym, &phi.two_delta());
            let sign = if phi.num_positive() % 2 == 0 { q(1) } else { q(-1) };
            if longest.len() != 1 || longest[0] != &expected_key || f.terms[longest[0]] != sign {
                println!("  longest-term invariant fails for {parent}");
                ok = false;
            }
            // Palindromy of f with sign (-1)^{|Phi^+|}.
            let genfun = lp::genfun(phi).unwrap();
            let deg = genfun.degree();
            if genfun.reversed(deg).scale(&sign) != genfun {
                println!("  palindromy fails for {parent}");
                ok = false;
            }
            // e additivity over components against the closed forms.
            let ld = characters::leading_term(phi).unwrap();
            let mut additive = Q::zero();
            for comp in phi.components() {
                let (fam, rank) = canonical_abstract(comp.embedded.family, comp.embedded.rank);
                let e_abstract = golden::table1_formula(fam, rank).unwrap();
                additive += comp.embedded.k.clone() * q(e_abstract);
            }
            if ld.e != additive {
                println!(
                    "  e additivity fails for {} in {parent}: {} vs {}",
                    subsystems::canonical_type_name(phi),
                    fmt_q(&ld.e),
                    fmt_q(&additive)
                );
                ok = false;
            }
        }
    }
    // Maximal root systems contain every independently built root system in
    // the same lattice.
    for parent in ["A2", "B2", "G2", "C3"] {
        let rs = build(parent);
        let lattice = Lattice::standard(rs.space.clone());
        let psi_l = dimdata::lattice::maximal_root_system(&lattice);
        // Roots with integer coordinates lie in the standard lattice and must
        // be found by the enumeration.
        for r in rs.roots() {
            if r.coords.iter().all(|c| c.is_integer()) && !psi_l.contains(r) {
                println!("  maximal root system of {parent}-lattice misses a root");
                ok = false;
            }
        }
    }
    // The hexagonal lattice supports the 12-root maximal system.
    let a2gram = AmbientSpace::new(vec![
        vec![q(1), qr(-1, 2)],
        vec![qr(-1, 2), q(1)],
    ])
    .unwrap();
    let hex = Lattice::standard(a2gram);
    if dimdata::lattice::maximal_root_system(&hex).len() != 12 {
        println!("  hexagonal maximal root system size wrong");
        ok = false;
    }
    verdict(
        "criterion 11",
        ok && chars > 50,
        &format!("constant terms, leading terms, palindromy and e-additivity over {chars} characters"),
        t,
    );
}
