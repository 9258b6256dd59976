//! Command-line interface for the exact root-system and character toolkit.
//!
//! Exit codes: 0 = success (including "relations found"), 1 = usage or
//! budget error, 2 = verification failure (computed value disagrees with an
//! asserted reference value).

use dimdata::characters::{self, Character};
use dimdata::json;
use dimdata::lattice::{AmbientSpace, Lattice, Weight};
use dimdata::lp::{self, LpKind};
use dimdata::rat::{fmt_q, parse_q};
use dimdata::reports::{self, RowStatus};
use dimdata::roots::{RootSystem, TypeLabel};
use dimdata::subsystems::{self, EnumerationBudget};
use dimdata::weyl::{SymmetrySpec, DEFAULT_ORBIT_CAP, DEFAULT_PERM_CAP};
use serde_json::Value;
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;

const USAGE: &str = "\
dimdata — exact root systems, Weyl orbits, characters and their identities

USAGE:
    dimdata <command> <subcommand> [options]

COMMANDS:
    rootsys build          --label <L>
    rootsys maximal-lattice --gram <rows> [--basis <rows>]
    subsys  enumerate      --parent <L> [--w weyl|aut]
    subsys  named          --parent <L> --name <N>
    subsys  conjugate      --parent <L> --name1 <N> --name2 <N> [--w weyl|aut]
    char    compute        --parent <L> --name <N> [--w weyl|aut]
    char    equal          --parent <L> --name1 <N> --name2 <N> [--w weyl|aut]
    char    relations      --parent <L> (--all | --names <N,N,...>) [--w weyl|aut]
    char    leading        --parent <L> --name <N>
    poly    lp             --kind a|b|b'|c|d --n <N>
    poly    identities     [--n <N>]
    poly    genfun         --parent <L> --name <N>
    report  table1
    report  tables         --parent <L>
    report  relations      --parent <L> [--nullspace]
    report  small-weights  --parent E6|F4 [--bound <N>]

OPTIONS:
    --format json|csv|text     output format (default text)
    --orbit-cap <N>            signed-orbit enumeration cap (default 10000000)
    --perm-cap <N>             permutation-group cap (default 400000)
    --max-classes <N>          class-enumeration cap (default 4096)
    Matrix rows are semicolon-separated, entries comma-separated rationals:
    --gram \"1,0;0,1\".
    Budgets also read DIMDATA_BUDGET_ORBIT, DIMDATA_BUDGET_PERM and
    DIMDATA_BUDGET_CLASSES from the environment.
";

struct Options {
    format: String,
    orbit_cap: u64,
    perm_cap: u64,
    max_classes: usize,
    flags: BTreeMap<String, String>,
    positional: Vec<String>,
}

fn parse_args(argv: &[String]) -> Result<Options, String> {
    let mut flags = BTreeMap::new();
    let mut positional = Vec::new();
    let mut i = 0;
    while i < argv.len() {
        let arg = &argv[i];
        if let Some(name) = arg.strip_prefix("--") {
            if name == "all" || name == "nullspace" {
                flags.insert(name.to_string(), "true".to_string());
                i += 1;
                continue;
            }
            let value = argv
                .get(i + 1)
                .ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.insert(name.to_string(), value.clone());
            i += 2;
        } else {
            positional.push(arg.clone());
            i += 1;
        }
    }
    let env_or = |key: &str, flag: &str, default: u64| -> Result<u64, String> {
        if let Some(v) = flags.get(flag) {
            return v.parse().map_err(|_| format!("bad --{flag} value"));
        }
        match std::env::var(key) {
            Ok(v) => v.parse().map_err(|_| format!("bad {key} value")),
            Err(_) => Ok(default),
        }
    };
    let orbit_cap = env_or("DIMDATA_BUDGET_ORBIT", "orbit-cap", DEFAULT_ORBIT_CAP)?;
    let perm_cap = env_or("DIMDATA_BUDGET_PERM", "perm-cap", DEFAULT_PERM_CAP)?;
    let max_classes = env_or("DIMDATA_BUDGET_CLASSES", "max-classes", 4096)? as usize;
    Ok(Options {
        format: flags.get("format").cloned().unwrap_or_else(|| "text".into()),
        orbit_cap,
        perm_cap,
        max_classes,
        flags,
        positional,
    })
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&argv) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(argv: &[String]) -> Result<ExitCode, String> {
    if argv.is_empty() || argv[0] == "--help" || argv[0] == "help" {
        print!("{USAGE}");
        return Ok(ExitCode::SUCCESS);
    }
    let opts = parse_args(argv)?;
    let cmd: Vec<&str> = opts.positional.iter().map(String::as_str).collect();
    match cmd.as_slice() {
        ["rootsys", "build"] => rootsys_build(&opts),
        ["rootsys", "maximal-lattice"] => rootsys_maximal(&opts),
        ["subsys", "enumerate"] => subsys_enumerate(&opts),
        ["subsys", "named"] => subsys_named(&opts),
        ["subsys", "conjugate"] => subsys_conjugate(&opts),
        ["char", "compute"] => char_compute(&opts),
        ["char", "equal"] => char_equal(&opts),
        ["char", "relations"] => char_relations(&opts),
        ["char", "leading"] => char_leading(&opts),
        ["poly", "lp"] => poly_lp(&opts),
        ["poly", "identities"] => poly_identities(&opts),
        ["poly", "genfun"] => poly_genfun(&opts),
        ["report", "table1"] => report_table1(&opts),
        ["report", "tables"] => report_tables(&opts),
        ["report", "relations"] => report_relations(&opts),
        ["report", "small-weights"] => report_small_weights(&opts),
        _ => {
            print!("{USAGE}");
            Err("unknown subcommand".into())
        }
    }
}

fn flag<'a>(opts: &'a Options, name: &str) -> Result<&'a str, String> {
    opts.flags
        .get(name)
        .map(String::as_str)
        .ok_or_else(|| format!("missing --{name}"))
}

fn parent_of(opts: &Options) -> Result<Arc<RootSystem>, String> {
    let label = TypeLabel::parse(flag(opts, "parent")?).map_err(|e| e.to_string())?;
    RootSystem::build(label).map_err(|e| e.to_string())
}

fn sym_of(opts: &Options, parent: &Arc<RootSystem>) -> Result<SymmetrySpec, String> {
    match opts.flags.get("w").map(String::as_str).unwrap_or("weyl") {
        "weyl" => Ok(SymmetrySpec::weyl(Arc::clone(parent))),
        "aut" => SymmetrySpec::aut(Arc::clone(parent)).map_err(|e| e.to_string()),
        other => Err(format!("unknown group selector `{other}` (use weyl or aut)")),
    }
}

fn emit(opts: &Options, value: Value, text: impl FnOnce() -> String) -> Result<(), String> {
    match opts.format.as_str() {
        "json" => {
            println!("{}", serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?);
            Ok(())
        }
        "text" | "csv" => {
            print!("{}", text());
            Ok(())
        }
        other => Err(format!("unknown format `{other}`")),
    }
}

fn parse_matrix(s: &str) -> Result<Vec<Vec<dimdata::Q>>, String> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|e| parse_q(e).ok_or_else(|| format!("bad rational `{e}`")))
                .collect()
        })
        .collect()
}

fn rootsys_build(opts: &Options) -> Result<ExitCode, String> {
    let label = TypeLabel::parse(flag(opts, "label")?).map_err(|e| e.to_string())?;
    let rs = RootSystem::build(label).map_err(|e| e.to_string())?;
    emit(opts, json::rootsystem_value(&rs), || {
        let mut out = format!(
            "{}: {} roots, rank {}, dim {}\nsimple roots:\n",
            rs.label,
            rs.num_roots(),
            rs.rank(),
            rs.space.dim()
        );
        for (i, a) in rs.simple_roots().iter().enumerate() {
            out += &format!("  a{} = {:?}\n", i + 1, a);
        }
        out
    })?;
    Ok(ExitCode::SUCCESS)
}

fn rootsys_maximal(opts: &Options) -> Result<ExitCode, String> {
    let gram = parse_matrix(flag(opts, "gram")?)?;
    let space = AmbientSpace::new(gram).map_err(|e| e.to_string())?;
    let lattice = match opts.flags.get("basis") {
        Some(b) => {
            let rows = parse_matrix(b)?;
            let basis = rows.into_iter().map(Weight::new).collect();
            Lattice::new(space, basis).map_err(|e| e.to_string())?
        }
        None => Lattice::standard(space),
    };
    let psi = dimdata::lattice::maximal_root_system(&lattice);
    let value = Value::Array(psi.iter().map(json::weight_value).collect());
    emit(opts, value, || {
        let mut out = format!("{} roots:\n", psi.len());
        for r in &psi {
            out += &format!("  {r:?}\n");
        }
        out
    })?;
    Ok(ExitCode::SUCCESS)
}

fn subsys_enumerate(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let sym = sym_of(opts, &parent)?;
    let budget = EnumerationBudget {
        perm_cap: opts.perm_cap,
        max_classes: opts.max_classes,
    };
    let classes = subsystems::enumerate_subsystems(&sym, &budget).map_err(|e| e.to_string())?;
    let items: Vec<Value> = classes
        .iter()
        .map(|c| {
            serde_json::json!({
                "type": subsystems::canonical_type_name(c),
                "num_roots": c.len(),
                "leading": characters::leading_term(c).ok().map(|ld| reports::fw_string(&ld.fw_coords)),
            })
        })
        .collect();
    emit(opts, Value::Array(items), || {
        let mut out = format!("{} classes of {}\n", classes.len(), parent.label);
        for c in &classes {
            out += &format!(
                "  {:<16} {:>3} roots\n",
                subsystems::canonical_type_name(c),
                c.len()
            );
        }
        out
    })?;
    Ok(ExitCode::SUCCESS)
}

fn subsys_named(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let phi = subsystems::named_subsystem(&parent, flag(opts, "name")?).map_err(|e| e.to_string())?;
    emit(opts, json::subsystem_value(&phi), || {
        format!(
            "{} in {}: {} roots\n",
            subsystems::canonical_type_name(&phi),
            parent.label,
            phi.len()
        )
    })?;
    Ok(ExitCode::SUCCESS)
}

fn subsys_conjugate(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let sym = sym_of(opts, &parent)?;
    let a = subsystems::named_subsystem(&parent, flag(opts, "name1")?).map_err(|e| e.to_string())?;
    let b = subsystems::named_subsystem(&parent, flag(opts, "name2")?).map_err(|e| e.to_string())?;
    let conj = subsystems::are_conjugate(&a, &b, &sym, opts.perm_cap).map_err(|e| e.to_string())?;
    emit(opts, serde_json::json!({ "conjugate": conj }), || {
        format!("{conj}\n")
    })?;
    Ok(ExitCode::SUCCESS)
}

fn char_compute(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let sym = sym_of(opts, &parent)?;
    let phi = subsystems::named_subsystem(&parent, flag(opts, "name")?).map_err(|e| e.to_string())?;
    let f = characters::character_f(&phi, &sym, opts.orbit_cap).map_err(|e| e.to_string())?;
    emit(opts, json::character_value(&f), || character_text(&f))?;
    Ok(ExitCode::SUCCESS)
}

fn character_text(f: &Character) -> String {
    let psi = &f.sym.base;
    let mut out = String::new();
    for k in f.sorted_keys() {
        let fw = psi.fw_coords(k);
        let fw_int: Option<Vec<dimdata::BigInt>> =
            fw.iter().map(dimdata::rat::as_integer).collect();
        let label = reports::fw_string(&fw_int);
        out += &format!("  {:>4} * chi[{label}]\n", fmt_q(&f.terms[k]));
    }
    out
}

fn char_equal(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let sym = sym_of(opts, &parent)?;
    let a = subsystems::named_subsystem(&parent, flag(opts, "name1")?).map_err(|e| e.to_string())?;
    let b = subsystems::named_subsystem(&parent, flag(opts, "name2")?).map_err(|e| e.to_string())?;
    let fa = characters::character_f(&a, &sym, opts.orbit_cap).map_err(|e| e.to_string())?;
    let fb = characters::character_f(&b, &sym, opts.orbit_cap).map_err(|e| e.to_string())?;
    let equal = characters::characters_equal(&fa, &fb).map_err(|e| e.to_string())?;
    emit(opts, serde_json::json!({ "equal": equal }), || format!("{equal}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn char_relations(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let sym = sym_of(opts, &parent)?;
    let subs: Vec<(String, dimdata::roots::SubRootSystem)> = if opts.flags.contains_key("all") {
        let budget = EnumerationBudget {
            perm_cap: opts.perm_cap,
            max_classes: opts.max_classes,
        };
        subsystems::enumerate_subsystems(&sym, &budget)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|c| (subsystems::canonical_type_name(&c), c))
            .collect()
    } else {
        flag(opts, "names")?
            .split(',')
            .map(|n| {
                subsystems::named_subsystem(&parent, n)
                    .map(|s| (n.to_string(), s))
                    .map_err(|e| e.to_string())
            })
            .collect::<Result<_, _>>()?
    };
    let chars: Vec<Character> = subs
        .iter()
        .map(|(_, s)| characters::character_f(s, &sym, opts.orbit_cap).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let rels = characters::linear_relations(&chars).map_err(|e| e.to_string())?;
    let names: Vec<String> = subs.iter().map(|(n, _)| n.clone()).collect();
    emit(opts, json::relation_vectors_value(&names, &rels), || {
        let mut out = format!("characters: {}\n", names.join(", "));
        if rels.is_empty() {
            out += "linearly independent\n";
        }
        for v in &rels {
            let terms: Vec<String> = v
                .iter()
                .zip(&names)
                .filter(|(c, _)| **c != dimdata::BigInt::from(0))
                .map(|(c, n)| format!("{c}*F[{n}]"))
                .collect();
            out += &format!("  {} = 0\n", terms.join(" + "));
        }
        out
    })?;
    Ok(ExitCode::SUCCESS)
}

fn char_leading(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let phi = subsystems::named_subsystem(&parent, flag(opts, "name")?).map_err(|e| e.to_string())?;
    let ld = characters::leading_term(&phi).map_err(|e| e.to_string())?;
    let value = serde_json::json!({
        "two_delta_prime": json::weight_value(&ld.two_delta_prime),
        "fw": reports::fw_string(&ld.fw_coords),
        "e": fmt_q(&ld.e),
    });
    emit(opts, value, || {
        format!("2d' = {}   e = {}\n", reports::fw_string(&ld.fw_coords), fmt_q(&ld.e))
    })?;
    Ok(ExitCode::SUCCESS)
}

fn poly_lp(opts: &Options) -> Result<ExitCode, String> {
    let kind = LpKind::parse(flag(opts, "kind")?).map_err(|e| e.to_string())?;
    let n: usize = flag(opts, "n")?.parse().map_err(|_| "bad --n".to_string())?;
    if n > lp::DEFAULT_DEGREE_CAP {
        return Err(format!("--n exceeds the degree cap {}", lp::DEFAULT_DEGREE_CAP));
    }
    let p = lp::lp_poly(kind, n);
    emit(opts, json::multipoly_value(&p), || format!("{p:?}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn poly_identities(opts: &Options) -> Result<ExitCode, String> {
    let n: usize = match opts.flags.get("n") {
        Some(v) => v.parse().map_err(|_| "bad --n".to_string())?,
        None => 5,
    };
    let report = lp::verify_identities(n).map_err(|e| e.to_string())?;
    emit(opts, json::identity_report_value(&report), || {
        let mut out = String::new();
        for c in &report.checks {
            out += &format!(
                "  {:<34} n={:<2} deg={:<2} {}\n",
                c.name,
                c.n,
                c.degree,
                if c.pass { "pass" } else { "FAIL" }
            );
        }
        out
    })?;
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn poly_genfun(opts: &Options) -> Result<ExitCode, String> {
    let parent = parent_of(opts)?;
    let phi = subsystems::named_subsystem(&parent, flag(opts, "name")?).map_err(|e| e.to_string())?;
    let f = lp::genfun(&phi).map_err(|e| e.to_string())?;
    emit(opts, json::unipoly_value(&f), || format!("{f:?}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn report_table1(opts: &Options) -> Result<ExitCode, String> {
    let rows = reports::table1().map_err(|e| e.to_string())?;
    let all = rows.iter().all(|r| r.pass());
    emit(opts, json::table1_value(&rows), || {
        let mut out = String::new();
        if opts.format == "csv" {
            out += "label,expected,computed,status\n";
            for r in &rows {
                out += &format!(
                    "{},{},{},{}\n",
                    r.label,
                    r.expected,
                    fmt_q(&r.computed),
                    if r.pass() { "pass" } else { "fail" }
                );
            }
        } else {
            for r in &rows {
                out += &format!(
                    "  {:<4} expected {:<6} computed {:<6} {}\n",
                    r.label,
                    r.expected,
                    fmt_q(&r.computed),
                    if r.pass() { "pass" } else { "FAIL" }
                );
            }
        }
        out
    })?;
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn report_tables(opts: &Options) -> Result<ExitCode, String> {
    let label = TypeLabel::parse(flag(opts, "parent")?).map_err(|e| e.to_string())?;
    let rows = reports::verify_tables(label).map_err(|e| e.to_string())?;
    let ok = rows.iter().all(|r| r.status != RowStatus::Mismatch);
    emit(opts, json::table_report_value(&rows), || {
        let mut out = String::new();
        if opts.format == "csv" {
            out += "parent,name,expected_fw,expected_e,computed_fw,computed_e,status\n";
            for r in &rows {
                out += &format!(
                    "{},{},{:?},{},{:?},{},{:?}\n",
                    r.parent, r.name, r.expected_fw, r.expected_e, r.computed_fw,
                    fmt_q(&r.computed_e), r.status
                );
            }
        } else {
            for r in &rows {
                out += &format!(
                    "  {:<14} expected e={:<5} computed e={:<5} {:?}\n",
                    r.name,
                    r.expected_e,
                    fmt_q(&r.computed_e),
                    r.status
                );
            }
        }
        out
    })?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn report_relations(opts: &Options) -> Result<ExitCode, String> {
    let label = TypeLabel::parse(flag(opts, "parent")?).map_err(|e| e.to_string())?;
    let outcomes = reports::relation_catalog(label).map_err(|e| e.to_string())?;
    let mut ok = outcomes.iter().all(|o| o.holds);
    let mut nullspace_value = Value::Null;
    let mut nullspace_text = String::new();
    if opts.flags.contains_key("nullspace") {
        let budget = EnumerationBudget {
            perm_cap: opts.perm_cap,
            max_classes: opts.max_classes,
        };
        let check = reports::relation_nullspace(label, &budget).map_err(|e| e.to_string())?;
        ok &= check.catalog_inside && check.nullspace_dim == check.catalog_rank;
        nullspace_text = format!(
            "nullspace over {} classes: dim {} (catalog rank {}, inside: {})\n",
            check.class_count, check.nullspace_dim, check.catalog_rank, check.catalog_inside
        );
        nullspace_value = json::nullspace_value(&check);
    }
    let value = serde_json::json!({
        "catalog": json::relation_report_value(&outcomes),
        "nullspace": nullspace_value,
    });
    emit(opts, value, || {
        let mut out = String::new();
        for o in &outcomes {
            let terms: Vec<String> = o
                .terms
                .iter()
                .map(|t| format!("{}*F[{}]", t.coeff, t.name))
                .collect();
            out += &format!(
                "  {:<6} {} = 0  {}\n",
                o.id,
                terms.join(" + "),
                if o.holds { "pass" } else { "FAIL" }
            );
        }
        out + &nullspace_text
    })?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn report_small_weights(opts: &Options) -> Result<ExitCode, String> {
    let label = TypeLabel::parse(flag(opts, "parent")?).map_err(|e| e.to_string())?;
    let outcome = reports::verify_small_norm(label).map_err(|e| e.to_string())?;
    emit(opts, json::small_norm_value(&outcome), || {
        let mut out = String::new();
        for (norm, count) in &outcome.counts {
            out += &format!("  |λ|² = {:<3} orbits: {}\n", norm, count);
        }
        for f in &outcome.flagged {
            out += &format!("  reported: {f}\n");
        }
        out += &format!("{}\n", if outcome.pass { "pass" } else { "FAIL" });
        out
    })?;
    Ok(if outcome.pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
}
