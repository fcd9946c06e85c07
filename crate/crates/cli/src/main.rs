//! `wdr` — command-line front end for the circulant association-scheme
//! toolkit.
//!
//! Exit codes: 0 = success / verified, 1 = negative mathematical verdict
//! (not weakly distance-regular, census discrepancy, violated identity),
//! 2 = usage or input error. Identical inputs produce byte-identical
//! JSON.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use wdr_core::classifier::{classify_with, verify_theorem2_with, ClassifyOptions};
use wdr_core::constructions::{cyclotomic_scheme, paley_digraph};
use wdr_core::digraph::Digraph;
use wdr_core::json::{
    CensusJson, ClassificationJson, ClassesInput, DigraphJson, SchemeJson, SkewScanJson,
    SpectraJson, SCHEMA_VERSION,
};
use wdr_core::scheme::{attached_scheme, AssociationScheme};
use wdr_core::spectra::eigenmatrix;
use wdr_core::theorems::{
    circuit_lemma_check, find_theorem1_assignments, skew_feasibility_scan, theorem1_identities,
    CircuitLemmaVerdict,
};
use wdr_core::Error;

#[derive(Parser)]
#[command(
    name = "wdr",
    version,
    about = "Association schemes over Z_n and the census of primitive weakly distance-regular circulant digraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Attached scheme of Cay(Z_n, S); fails with a witness when the
    /// digraph is not weakly distance-regular
    Attached {
        /// Modulus n
        n: usize,
        /// Connection set, e.g. "1,3,9"
        set: String,
        /// Emit JSON only
        #[arg(long)]
        json: bool,
    },
    /// The cyclotomic scheme Cyc(p, d)
    Cyclotomic {
        p: usize,
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// The Paley digraph of prime order p ≡ 3 (mod 4) and its attached scheme
    Paley {
        p: usize,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive census of canonical circulant candidates at prime p
    Classify {
        p: usize,
        /// Worker threads (1 forces the sequential path)
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the census as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Census over all primes in [pmin, pmax], checked against the three
    /// expected families
    VerifyTheorem2 {
        p_min: usize,
        p_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Feasible point counts for a skew-symmetric pseudocyclic 4-class
    /// scheme with a vanishing corner intersection number
    ScanSkew {
        n_max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Search Cyc(p, d) for labellings satisfying the 4-class theorem's
    /// hypotheses and verify the implied identities
    CheckTheorem1 {
        p: usize,
        #[arg(default_value_t = 4)]
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// Midpoint-set equalities on q-circuits of Cay(Z_p, S)
    CheckCircuitLemma {
        p: usize,
        set: String,
        q: usize,
        #[arg(long)]
        json: bool,
    },
    /// Multiplicities and pseudocyclicity from difference classes
    /// (a JSON list of lists, or a scheme object; "-" reads stdin)
    Spectra {
        p: usize,
        #[arg(long, value_name = "PATH")]
        classes: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.cmd));
}

fn input_error(err: &dyn std::fmt::Display) -> i32 {
    eprintln!("error: {err}");
    2
}

fn parse_set(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| format!("bad element {s:?}: {e}")))
        .collect()
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("value serializes")
    );
}

fn class_table(s: &AssociationScheme) {
    let diffs = s.partition().difference_classes();
    println!("class  label    valency  difference set");
    for i in 0..=s.d() {
        let label = match s.partition().label(i) {
            Some((a, b)) => format!("({a},{b})"),
            None => "-".into(),
        };
        let diff = match (&diffs, i) {
            (_, 0) => "{0}".to_string(),
            (Some(d), _) => format!("{:?}", d[i - 1]),
            (None, _) => "-".into(),
        };
        println!("R_{i:<4} {label:<8} {:<8} {diff}", s.valency(i));
    }
}

fn scheme_summary(s: &AssociationScheme) {
    let report = s.report();
    println!(
        "d = {}, valencies {:?}, commutative: {}, symmetric: {}, skew-symmetric: {}, primitive: {}",
        report.d, report.valencies, report.commutative, report.symmetric,
        report.skew_symmetric, report.primitive
    );
    if let (Some(pc), Some(m)) = (report.pseudocyclic, &report.multiplicities) {
        println!("pseudocyclic: {pc}, multiplicities {m:?}");
    }
}

fn run(cmd: Cmd) -> i32 {
    match cmd {
        Cmd::Attached { n, set, json } => attached_cmd(n, &set, json),
        Cmd::Cyclotomic { p, d, json } => cyclotomic_cmd(p, d, json),
        Cmd::Paley { p, json } => paley_cmd(p, json),
        Cmd::Classify { p, jobs, json } => classify_cmd(p, jobs, json),
        Cmd::VerifyTheorem2 {
            p_min,
            p_max,
            jobs,
            json,
        } => verify_cmd(p_min, p_max, jobs, json),
        Cmd::ScanSkew { n_max, json } => scan_skew_cmd(n_max, json),
        Cmd::CheckTheorem1 { p, d, json } => check_theorem1_cmd(p, d, json),
        Cmd::CheckCircuitLemma { p, set, q, json } => circuit_lemma_cmd(p, &set, q, json),
        Cmd::Spectra { p, classes, json } => spectra_cmd(p, &classes, json),
    }
}

fn attached_cmd(n: usize, set_text: &str, json: bool) -> i32 {
    let set = match parse_set(set_text) {
        Ok(s) => s,
        Err(e) => return input_error(&e),
    };
    let g = match Digraph::cayley(n, &set) {
        Ok(g) => g,
        Err(e) => return input_error(&e),
    };
    match attached_scheme(&g) {
        Ok(s) => {
            if json {
                print_json(&SchemeJson::from(&s));
            } else {
                println!("attached scheme of Cay(Z_{n}, {set:?})");
                scheme_summary(&s);
                class_table(&s);
                print_json(&SchemeJson::from(&s));
            }
            0
        }
        Err(Error::NotWdr(inner)) => {
            if json {
                print_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "verdict": "not-weakly-distance-regular",
                    "detail": inner.to_string(),
                }));
            } else {
                println!("Cay(Z_{n}, {set:?}) is not weakly distance-regular");
                println!("  {inner}");
            }
            1
        }
        Err(e) => input_error(&e),
    }
}

fn cyclotomic_cmd(p: usize, d: usize, json: bool) -> i32 {
    match cyclotomic_scheme(p, d) {
        Ok(s) => {
            if json {
                print_json(&SchemeJson::from(&s));
            } else {
                println!("Cyc({p}, {d})");
                scheme_summary(&s);
                class_table(&s);
                print_json(&SchemeJson::from(&s));
            }
            0
        }
        Err(e) => input_error(&e),
    }
}

fn paley_cmd(p: usize, json: bool) -> i32 {
    let g = match paley_digraph(p) {
        Ok(g) => g,
        Err(e) => return input_error(&e),
    };
    let s = attached_scheme(&g).expect("Paley digraphs are weakly distance-regular");
    if json {
        print_json(&SchemeJson::from(&s));
    } else {
        let dj = DigraphJson::from(&g);
        println!(
            "Paley digraph of order {p}: S = {:?}",
            dj.s.as_deref().unwrap_or(&[])
        );
        scheme_summary(&s);
        class_table(&s);
        print_json(&SchemeJson::from(&s));
    }
    0
}

fn classify_cmd(p: usize, jobs: Option<usize>, json_path: Option<PathBuf>) -> i32 {
    let opts = ClassifyOptions { jobs };
    let result = match classify_with(p, &opts) {
        Ok(r) => r,
        Err(e) => return input_error(&e),
    };
    println!(
        "p = {p}: {} candidates examined, {} primitive weakly distance-regular hits ({:.3} s)",
        result.candidates_examined,
        result.hits.len(),
        result.wall_time.as_secs_f64()
    );
    println!("S                      d  valencies           pseudocyclic  family");
    for hit in &result.hits {
        println!(
            "{:<22} {:<2} {:<19} {:<13} {}",
            format!("{:?}", hit.connection_set),
            hit.d,
            format!("{:?}", hit.valencies),
            hit.pseudocyclic,
            hit.family.map(|f| f.to_string()).unwrap_or_else(|| "none".into()),
        );
    }
    if !result.imprimitive_wdr.is_empty() {
        println!(
            "FINDING: imprimitive weakly distance-regular circulants at prime modulus: {:?}",
            result.imprimitive_wdr
        );
    }
    if let Some(path) = json_path {
        let payload = ClassificationJson::from(&result);
        let text = serde_json::to_string_pretty(&payload).expect("census serializes");
        if let Err(e) = std::fs::write(&path, text + "\n") {
            return input_error(&format!("cannot write {}: {e}", path.display()));
        }
        println!("census written to {}", path.display());
    }
    if result.imprimitive_wdr.is_empty() {
        0
    } else {
        1
    }
}

fn verify_cmd(p_min: usize, p_max: usize, jobs: Option<usize>, json: bool) -> i32 {
    let opts = ClassifyOptions { jobs };
    let verdict = match verify_theorem2_with(p_min, p_max, &opts) {
        Ok(v) => v,
        Err(e) => return input_error(&e),
    };
    if json {
        print_json(&CensusJson::from(&verdict));
    } else {
        for entry in &verdict.primes {
            let hits: Vec<String> = entry
                .result
                .hits
                .iter()
                .map(|h| {
                    format!(
                        "{:?} {}",
                        h.connection_set,
                        h.family.map(|f| f.to_string()).unwrap_or_else(|| "none".into())
                    )
                })
                .collect();
            println!(
                "p = {:<3} {} hits: {}  ({} candidates)",
                entry.p,
                if entry.ok { "ok " } else { "BAD" },
                hits.join(", "),
                entry.result.candidates_examined,
            );
        }
        for d in &verdict.discrepancies {
            println!("discrepancy: {d}");
        }
        println!("{}", if verdict.pass { "PASS" } else { "FAIL" });
    }
    if verdict.pass {
        0
    } else {
        1
    }
}

fn scan_skew_cmd(n_max: u64, json: bool) -> i32 {
    let witnesses = skew_feasibility_scan(n_max);
    let payload = SkewScanJson::new(n_max, witnesses);
    if json {
        print_json(&payload);
    } else {
        println!("feasible point counts up to {n_max}: {:?}", payload.feasible);
        for w in &payload.witnesses {
            println!("  n = {}: u = {}, v = {}", w.n, w.u, w.v);
        }
    }
    0
}

fn check_theorem1_cmd(p: usize, d: usize, json: bool) -> i32 {
    let s = match cyclotomic_scheme(p, d) {
        Ok(s) => s,
        Err(e) => return input_error(&e),
    };
    let assignments = find_theorem1_assignments(&s);
    let identities: Vec<_> = assignments
        .iter()
        .map(|a| theorem1_identities(&s, a.r1, a.r2).expect("hypotheses were just verified"))
        .collect();

    let verdict = if assignments.is_empty() {
        "no-satisfying-assignment"
    } else if assignments.iter().all(|a| a.concludes_d4())
        && identities.iter().all(|i| i.pass)
    {
        "satisfied"
    } else {
        "counterexample"
    };

    if json {
        print_json(&json!({
            "schema": SCHEMA_VERSION,
            "p": p,
            "d": d,
            "assignments": assignments,
            "identities": identities,
            "verdict": verdict,
        }));
    } else {
        println!("Cyc({p}, {d}): {} satisfying labelling(s)", assignments.len());
        for a in &assignments {
            println!(
                "  (r1, r2) = ({}, {}): I = {:?}, J = {:?}, d = {}",
                a.r1, a.r2, a.i_set, a.j_set, a.d
            );
        }
        for i in &identities {
            let failing: Vec<&str> = i
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.name.as_str())
                .collect();
            if failing.is_empty() {
                println!("  identities at ({}, {}): all hold", i.r1, i.r2);
            } else {
                println!("  identities at ({}, {}): FAILING {:?}", i.r1, i.r2, failing);
            }
        }
        println!("{verdict}");
    }
    if verdict == "satisfied" {
        0
    } else {
        1
    }
}

fn circuit_lemma_cmd(p: usize, set_text: &str, q: usize, json: bool) -> i32 {
    let set = match parse_set(set_text) {
        Ok(s) => s,
        Err(e) => return input_error(&e),
    };
    let g = match Digraph::cayley(p, &set) {
        Ok(g) => g,
        Err(e) => return input_error(&e),
    };
    let verdict = match circuit_lemma_check(&g, q) {
        Ok(v) => v,
        Err(Error::NotWdr(inner)) => {
            eprintln!("error: digraph is not weakly distance-regular: {inner}");
            return 1;
        }
        Err(e) => return input_error(&e),
    };
    if json {
        print_json(&json!({
            "schema": SCHEMA_VERSION,
            "p": p,
            "S": set,
            "q": q,
            "result": verdict,
        }));
    } else {
        match &verdict {
            CircuitLemmaVerdict::Pass {
                circuits_checked,
                truncated,
            } => println!(
                "pass: {circuits_checked} circuit(s) checked{}",
                if *truncated { " (cap reached)" } else { "" }
            ),
            CircuitLemmaVerdict::NotApplicable { reason } => {
                println!("not applicable: {reason}")
            }
            CircuitLemmaVerdict::Violation { circuit, detail } => {
                println!("violation on circuit {circuit:?}: {detail}")
            }
        }
    }
    match verdict {
        CircuitLemmaVerdict::Violation { .. } => 1,
        _ => 0,
    }
}

fn spectra_cmd(p: usize, classes_path: &str, json: bool) -> i32 {
    let text = if classes_path == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            return input_error(&format!("cannot read stdin: {e}"));
        }
        buf
    } else {
        match std::fs::read_to_string(classes_path) {
            Ok(t) => t,
            Err(e) => return input_error(&format!("cannot read {classes_path}: {e}")),
        }
    };
    let parsed: ClassesInput = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => return input_error(&format!("cannot parse classes: {e}")),
    };
    if let ClassesInput::Scheme(ref s) = parsed {
        if s.n != p {
            return input_error(&format!("scheme is over Z_{}, but p = {p} was given", s.n));
        }
    }
    let classes = match parsed.into_classes() {
        Some(c) => c,
        None => {
            return input_error(
                &"scheme object carries no difference classes (not a translation scheme)",
            )
        }
    };
    let eig = match eigenmatrix(p, &classes) {
        Ok(e) => e,
        Err(e) => return input_error(&e),
    };
    let payload = SpectraJson::from(&eig);
    if json {
        print_json(&payload);
    } else {
        println!(
            "multiplicities: {:?}, pseudocyclic: {}",
            payload.multiplicities, payload.pseudocyclic
        );
        print_json(&payload);
    }
    0
}
