// Scratch probes for heavy paths; removed before release.

use dimdata::rat::fmt_q;
use dimdata::reports::{self, RowStatus};
use dimdata::roots::TypeLabel;
use dimdata::subsystems::EnumerationBudget;

#[test]
#[ignore]
fn probe_f4_table() {
    let results = reports::verify_tables(TypeLabel::parse("F4").unwrap()).unwrap();
    for r in &results {
        println!(
            "{:>14}  expected {:?} e={}  computed {:?} e={}  {:?}",
            r.name, r.expected_fw, r.expected_e, r.computed_fw, fmt_q(&r.computed_e), r.status
        );
    }
}

#[test]
#[ignore]
fn probe_e6_table() {
    let results = reports::verify_tables(TypeLabel::parse("E6").unwrap()).unwrap();
    for r in &results {
        println!(
            "{:>14}  expected {:?} e={}  computed {:?} e={}  {:?}",
            r.name, r.expected_fw, r.expected_e, r.computed_fw, fmt_q(&r.computed_e), r.status
        );
    }
}

#[test]
#[ignore]
fn probe_e7_table() {
    let results = reports::verify_tables(TypeLabel::parse("E7").unwrap()).unwrap();
    for r in &results {
        println!(
            "{:>14}  expected {:?} e={}  computed {:?} e={}  {:?}",
            r.name, r.expected_fw, r.expected_e, r.computed_fw, fmt_q(&r.computed_e), r.status
        );
    }
}

#[test]
#[ignore]
fn probe_e8_table() {
    let results = reports::verify_tables(TypeLabel::parse("E8").unwrap()).unwrap();
    for r in &results {
        println!(
            "{:>14}  expected {:?} e={}  computed {:?} e={}  {:?}",
            r.name, r.expected_fw, r.expected_e, r.computed_fw, fmt_q(&r.computed_e), r.status
        );
    }
}

#[test]
#[ignore]
fn probe_f4_relations() {
    for o in reports::relation_catalog(TypeLabel::parse("F4").unwrap()).unwrap() {
        println!(
            "{}: holds={} residual={} terms={:?}",
            o.id,
            o.holds,
            o.residual_terms,
            o.terms.iter().map(|t| format!("{}*{} [{}]", t.coeff, t.name, t.leading_fw)).collect::<Vec<_>>()
        );
    }
}

#[test]
#[ignore]
fn probe_e_relations() {
    for parent in ["E6", "E7", "E8"] {
        for o in reports::relation_catalog(TypeLabel::parse(parent).unwrap()).unwrap() {
            println!(
                "{}: holds={} residual={} terms={:?}",
                o.id,
                o.holds,
                o.residual_terms,
                o.terms.iter().map(|t| format!("{}*{} [{}]", t.coeff, t.name, t.leading_fw)).collect::<Vec<_>>()
            );
        }
    }
}

#[test]
#[ignore]
fn probe_f4_nullspace() {
    let check = reports::relation_nullspace(
        TypeLabel::parse("F4").unwrap(),
        &EnumerationBudget::default(),
    )
    .unwrap();
    println!(
        "F4 classes={} dim={} rank={} inside={} names={:?}",
        check.class_count, check.nullspace_dim, check.catalog_rank, check.catalog_inside, check.class_names
    );
}

#[test]
#[ignore]
fn probe_d4_nullspace() {
    let check = reports::relation_nullspace(
        TypeLabel::parse("D4").unwrap(),
        &EnumerationBudget::default(),
    )
    .unwrap();
    println!(
        "D4 classes={} dim={} rank={} inside={}",
        check.class_count, check.nullspace_dim, check.catalog_rank, check.catalog_inside
    );
}

#[test]
#[ignore]
fn probe_expansions() {
    for parent in ["F4", "D4"] {
        for r in reports::verify_expansions(TypeLabel::parse(parent).unwrap()).unwrap() {
            println!(
                "{} {}: matches={} ({} vs {})",
                r.parent, r.name, r.matches, r.computed_terms, r.expected_terms
            );
        }
    }
}

#[test]
#[ignore]
fn probe_genfun_samples() {
    for r in reports::verify_genfun_samples().unwrap() {
        println!("{} {}: matches={} deg={}", r.parent, r.name, r.matches, r.degree);
    }
}

#[test]
#[ignore]
fn probe_e6_small_norm() {
    let got = reports::small_norm_weights(TypeLabel::parse("E6").unwrap(), 11).unwrap();
    for (norm, reps) in &got {
        println!("norm {norm}: {} reps: {reps:?}", reps.len());
    }
}
