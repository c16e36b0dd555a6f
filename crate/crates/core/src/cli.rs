//! The `smm` command line: batch checks, enumeration, proofs and reports.
//!
//! Exit codes: 0 when everything passes, 1 on a failed check or an
//! unproved equation, 2 on unreadable input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bgd::{
    bialgebroid_dump, build_f, build_g, check_bialgebroid, check_smm_iso, g_round_trip, grouplike_bijection_check,
    inclusion, invariants_check, pairing_property_check, reconstruct_smm, reconstruction_iso,
};
use crate::error::SmmError;
use crate::finmon::{
    check_axioms, find_countermodel, instance_universe, mimosa_report, structure_properties, SmmInstance, Violation,
};
use crate::modcat::{
    category_dump, classify_source_regular, comonoid_check, monoid_check, representable_check, strict_monoidal_check,
    ElementCategory,
};
use crate::skewset::skewset_report;
use crate::term::{
    identity_suite, parse_word, prove_equal, Budget, Derivation, Presentation, ProofOutcome, RuleSet, Verdict,
};

pub const SCHEMA: u32 = 1;

/// Largest `|A|` on which `suite` runs the skew-set family.
pub const SKEWSET_INSTANCE_BOUND: usize = 2;
/// Largest `|A|` on which `suite` runs the source-regular classification.
pub const REGULAR_INSTANCE_BOUND: usize = 2;

#[derive(Debug, Parser)]
#[command(
    name = "smm",
    version,
    about = "Skew monoidal monoids: finite models, proofs and derived structures"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an instance file against both axiom presentations.
    Check { path: PathBuf },
    /// Enumerate every SMM on monoids up to the given size.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Search for a derivation between two terms.
    Prove {
        lhs: String,
        rhs: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 1_000_000)]
        states: usize,
        /// Look for a finite countermodel when no proof is found.
        #[arg(long)]
        countermodel: bool,
        /// Size bound for the countermodel search.
        #[arg(long, default_value_t = 3)]
        max: usize,
        /// Write the derivation here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a derivation file.
    Verify { path: PathBuf },
    /// Run every check family on one instance or on all enumerated ones.
    Suite {
        path: Option<PathBuf>,
        #[arg(long)]
        all_enumerated: bool,
        #[arg(long, default_value_t = 2)]
        max: usize,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 1_000_000)]
        states: usize,
    },
    /// Dump the derived structures of an instance.
    Report {
        path: PathBuf,
        /// Largest `A`-set in the skew-set checks.
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
}

/// Parses `args` (program name first) and runs the command, writing to
/// `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // help and version requests go to stdout with exit 0
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(std::io::Error),
    Input(SmmError),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Input(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<SmmError> for CliError {
    fn from(e: SmmError) -> Self {
        CliError::Input(e)
    }
}

type CliResult = Result<i32, CliError>;

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Check { path } => cmd_check(&load_instance(path)?, fmt, out),
        Command::Enumerate { max } => cmd_enumerate(*max, fmt, out),
        Command::Prove {
            lhs,
            rhs,
            depth,
            states,
            countermodel,
            max,
            out: file,
        } => {
            let budget = budget(*depth, *states);
            cmd_prove(
                lhs,
                rhs,
                budget,
                countermodel.then_some(*max),
                file.as_deref(),
                fmt,
                out,
            )
        }
        Command::Verify { path } => cmd_verify(path, fmt, out),
        Command::Suite {
            path,
            all_enumerated,
            max,
            depth,
            states,
        } => {
            let instances = match (path, all_enumerated) {
                (Some(p), false) => vec![load_instance(p)?],
                (None, true) => instance_universe(*max)?,
                _ => {
                    return Err(CliError::Input(SmmError::InvalidInstance(
                        "suite takes either an instance path or --all-enumerated".into(),
                    )))
                }
            };
            cmd_suite(&instances, budget(*depth, *states), fmt, out)
        }
        Command::Report { path, max } => cmd_report(&load_instance(path)?, *max, fmt, out),
    }
}

fn budget(depth: usize, states: usize) -> Budget {
    Budget {
        max_depth: depth,
        max_states: states,
        ..Budget::default()
    }
}

pub fn load_instance(path: &Path) -> Result<SmmInstance, SmmError> {
    let text = std::fs::read_to_string(path).map_err(|e| SmmError::Parse {
        offset: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_instance(&text)
}

/// Parses instance JSON; errors carry the line and column.
pub fn parse_instance(text: &str) -> Result<SmmInstance, SmmError> {
    serde_json::from_str(text).map_err(|e| {
        // errors raised while validating the tables carry no position
        let message = if e.line() == 0 {
            e.to_string()
        } else {
            format!("line {} column {}: {e}", e.line(), e.column())
        };
        SmmError::Parse {
            offset: e.column(),
            message,
        }
    })
}

fn show(v: &Violation) -> String {
    if v.witness.is_empty() {
        return v.axiom.to_string();
    }
    let w: Vec<String> = v.witness.iter().map(|(k, x)| format!("{k}={x}")).collect();
    format!("{} [{}]", v.axiom, w.join(", "))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("json values serialize"))
}

fn cmd_check(inst: &SmmInstance, fmt: Format, out: &mut dyn Write) -> CliResult {
    let results: Vec<(Presentation, Vec<Violation>)> = [Presentation::MuDelta, Presentation::Gamma]
        .into_iter()
        .map(|p| (p, check_axioms(inst, p)))
        .collect();
    let pass = results.iter().all(|(_, v)| v.is_empty());
    match fmt {
        Format::Json => {
            let pres: BTreeMap<String, Vec<String>> = results
                .iter()
                .map(|(p, v)| (p.to_string(), v.iter().map(show).collect()))
                .collect();
            emit_json(
                out,
                &json!({"schema": SCHEMA, "command": "check", "pass": pass, "violations": pres}),
            )?;
        }
        Format::Text => {
            for (p, v) in &results {
                if v.is_empty() {
                    writeln!(out, "{p}: pass")?;
                } else {
                    writeln!(out, "{p}: FAIL")?;
                    for x in v {
                        writeln!(out, "  {}", show(x))?;
                    }
                }
            }
        }
    }
    Ok(if pass { 0 } else { 1 })
}

fn cmd_enumerate(max: usize, fmt: Format, out: &mut dyn Write) -> CliResult {
    let instances = instance_universe(max)?;
    let mut per_size = vec![0usize; max + 1];
    let mut non_trivial = 0;
    let mut findings = 0;
    for inst in &instances {
        let rep = mimosa_report(inst);
        per_size[inst.size()] += 1;
        non_trivial += usize::from(!rep.trivial);
        findings += usize::from(!rep.consistent());
        match fmt {
            Format::Json => emit_json(out, &json!({"schema": SCHEMA, "instance": inst, "mimosa": rep}))?,
            Format::Text => writeln!(
                out,
                "|A|={} T={:?} Q={:?} mu={} eta={} delta={} eps={} trivial={}",
                inst.size(),
                inst.t.images,
                inst.q.images,
                inst.mu,
                inst.eta,
                inst.delta,
                inst.eps,
                rep.trivial
            )?,
        }
    }
    let by_size: BTreeMap<usize, usize> = (1..=max).map(|n| (n, per_size[n])).collect();
    match fmt {
        Format::Json => emit_json(
            out,
            &json!({"schema": SCHEMA, "summary": {"total": instances.len(), "by_size": by_size, "non_trivial": non_trivial, "findings": findings}}),
        )?,
        Format::Text => {
            let sizes: Vec<String> = by_size.iter().map(|(n, c)| format!("{n}:{c}")).collect();
            writeln!(
                out,
                "total {} instances (by size {}); non-trivial {non_trivial}; findings {findings}",
                instances.len(),
                sizes.join(" ")
            )?;
        }
    }
    Ok(if non_trivial == 0 && findings == 0 { 0 } else { 1 })
}

fn cmd_prove(
    lhs: &str,
    rhs: &str,
    budget: Budget,
    countermodel_max: Option<usize>,
    file: Option<&Path>,
    fmt: Format,
    out: &mut dyn Write,
) -> CliResult {
    let (l, r) = (parse_word(lhs)?, parse_word(rhs)?);
    let outcome = prove_equal(&l, &r, &RuleSet::mu_delta(), budget);
    let stats = outcome.stats();
    match outcome {
        ProofOutcome::Proved { derivation, .. } => {
            let text = derivation.to_text();
            if let Some(p) = file {
                std::fs::write(p, &text)?;
            }
            match fmt {
                Format::Json => emit_json(
                    out,
                    &json!({"schema": SCHEMA, "status": "proved", "steps": derivation.len(), "stats": stats, "derivation": text}),
                )?,
                Format::Text => {
                    if let Some(p) = file {
                        writeln!(
                            out,
                            "proved in {} steps; derivation written to {}",
                            derivation.len(),
                            p.display()
                        )?;
                    } else {
                        write!(out, "{text}")?;
                    }
                }
            }
            Ok(0)
        }
        ProofOutcome::Unknown { reason, .. } => {
            let counter = match countermodel_max {
                Some(max) => Some(find_countermodel(&l, &r, &instance_universe(max)?)?),
                None => None,
            };
            let counter_note = match &counter {
                None => "countermodel search not requested".to_string(),
                Some(None) => "no countermodel found within bound, proof not found".to_string(),
                Some(Some(c)) => format!(
                    "refuted on an instance of size {}: lhs = {}, rhs = {} under {:?}",
                    c.instance.size(),
                    c.lhs,
                    c.rhs,
                    c.assignment
                ),
            };
            match fmt {
                Format::Json => {
                    let cm = counter.flatten().map(
                        |c| json!({"instance": c.instance, "assignment": c.assignment, "lhs": c.lhs, "rhs": c.rhs}),
                    );
                    emit_json(
                        out,
                        &json!({"schema": SCHEMA, "status": "unknown", "reason": reason, "stats": stats, "countermodel": cm, "note": counter_note}),
                    )?
                }
                Format::Text => writeln!(
                    out,
                    "unknown ({reason:?}) after {} states, depths {}/{}; {counter_note}",
                    stats.states, stats.forward_depth, stats.backward_depth
                )?,
            }
            Ok(1)
        }
    }
}

fn cmd_verify(path: &Path, fmt: Format, out: &mut dyn Write) -> CliResult {
    let text = std::fs::read_to_string(path).map_err(|e| SmmError::Parse {
        offset: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    let d = Derivation::parse(&text)?;
    let verdict = d.check();
    let (pass, detail) = match &verdict {
        Verdict::Accept => (true, format!("accepted: {} = {} in {} steps", d.start, d.end, d.len())),
        Verdict::Reject { step, reason } => (false, format!("rejected at step {step}: {reason}")),
    };
    match fmt {
        Format::Json => emit_json(out, &json!({"schema": SCHEMA, "accepted": pass, "detail": detail}))?,
        Format::Text => writeln!(out, "{detail}")?,
    }
    Ok(if pass { 0 } else { 1 })
}

/// One check family on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyResult {
    pub family: &'static str,
    pub pass: bool,
    /// Set when the family does not apply at this size.
    pub skipped: bool,
    pub failures: Vec<String>,
}

impl FamilyResult {
    fn from_violations(family: &'static str, vs: impl IntoIterator<Item = String>) -> Self {
        let failures: Vec<String> = vs.into_iter().collect();
        FamilyResult {
            family,
            pass: failures.is_empty(),
            skipped: false,
            failures,
        }
    }

    fn skipped(family: &'static str) -> Self {
        FamilyResult {
            family,
            pass: true,
            skipped: true,
            failures: vec![],
        }
    }

    fn from_result(family: &'static str, r: Result<Vec<String>, SmmError>) -> Self {
        match r {
            Ok(v) => FamilyResult::from_violations(family, v),
            Err(e) => FamilyResult::from_violations(family, [e.to_string()]),
        }
    }
}

fn shown(vs: &[Violation]) -> Vec<String> {
    vs.iter().map(show).collect()
}

/// Every per-instance check family, in a fixed order.
pub fn instance_suite(inst: &SmmInstance) -> Vec<FamilyResult> {
    let mut out = Vec::new();
    let mut axioms = shown(&check_axioms(inst, Presentation::MuDelta));
    axioms.extend(shown(&check_axioms(inst, Presentation::Gamma)));
    out.push(FamilyResult::from_violations("axioms", axioms));
    let mimosa = mimosa_report(inst);
    let mut triv: Vec<String> = mimosa
        .findings
        .iter()
        .map(|f| format!("{f} on a non-trivial instance"))
        .collect();
    if !mimosa.trivial {
        triv.push("instance is not trivial".into());
    }
    out.push(FamilyResult::from_violations("triviality", triv));
    out.push(FamilyResult::from_violations(
        "structure",
        shown(&structure_properties(inst)),
    ));
    out.push(FamilyResult::from_result(
        "bialgebroid",
        (|| {
            let mut v = shown(&check_bialgebroid(&build_g(inst)?));
            v.extend(shown(&check_bialgebroid(&build_f(inst)?)));
            let pairing = pairing_property_check(inst)?;
            v.extend(shown(&pairing.violations));
            if !pairing.non_degenerate {
                v.push("pairing-non-degenerate".into());
            }
            let inv = invariants_check(inst)?;
            if !inv.passes() {
                v.push("invariants-equal-T(A)".into());
            }
            v.extend(shown(&grouplike_bijection_check(inst)?.violations));
            Ok(v)
        })(),
    ));
    let modules = ElementCategory::modules(inst);
    let comodules = ElementCategory::comodules(inst);
    let mut cat = shown(&strict_monoidal_check(&modules));
    cat.extend(shown(&strict_monoidal_check(&comodules)));
    cat.extend(shown(&comonoid_check(inst)));
    cat.extend(shown(&monoid_check(inst)));
    cat.extend(shown(&representable_check(inst)));
    out.push(FamilyResult::from_violations("modcat", cat));
    out.push(if inst.size() <= REGULAR_INSTANCE_BOUND {
        FamilyResult::from_result("regular", classify_source_regular(inst).map(|r| shown(&r.violations)))
    } else {
        FamilyResult::skipped("regular")
    });
    out.push(FamilyResult::from_result("reconstruction", reconstruction_family(inst)));
    out.push(if inst.size() <= SKEWSET_INSTANCE_BOUND {
        FamilyResult::from_result(
            "skewset",
            skewset_report(inst, crate::skewset::MAX_ASET_SIZE).map(|r| {
                let mut v: Vec<String> = r
                    .violations()
                    .iter()
                    .map(|(tag, x)| format!("{tag}: {}", show(x)))
                    .collect();
                if r.embedding_isos == 0 {
                    v.push("embedding: no isomorphism to the input".into());
                }
                v
            }),
        )
    } else {
        FamilyResult::skipped("skewset")
    });
    out
}

fn reconstruction_family(inst: &SmmInstance) -> Result<Vec<String>, SmmError> {
    let g = build_g(inst)?;
    let adj = inclusion(&g, inst);
    let rec = reconstruct_smm(&g, &adj)?;
    let mut v = Vec::new();
    match reconstruction_iso(&g, &adj, inst) {
        Some(iso) => v.extend(shown(&check_smm_iso(&iso, &rec.instance, inst))),
        None => v.push("no comparison isomorphism".into()),
    }
    v.extend(shown(&g_round_trip(&g, &adj)?));
    Ok(v)
}

fn cmd_suite(instances: &[SmmInstance], budget: Budget, fmt: Format, out: &mut dyn Write) -> CliResult {
    let records = identity_suite(budget);
    let proved = records.iter().filter(|r| r.proved()).count();
    let identities_pass = proved == records.len();
    let mut all_pass = identities_pass;
    let mut rows = Vec::new();
    for inst in instances {
        let fams = instance_suite(inst);
        all_pass &= fams.iter().all(|f| f.pass);
        rows.push((inst, fams));
    }
    match fmt {
        Format::Json => {
            let ids: Vec<Value> = records
                .iter()
                .map(|r| json!({"name": r.name, "status": r.status, "depth": r.depth, "states": r.states}))
                .collect();
            let inst_rows: Vec<Value> = rows
                .iter()
                .map(|(i, f)| json!({"instance": i, "families": f}))
                .collect();
            emit_json(
                out,
                &json!({"schema": SCHEMA, "pass": all_pass, "identities": ids, "instances": inst_rows}),
            )?;
        }
        Format::Text => {
            writeln!(
                out,
                "identities: {} ({proved}/{} proved)",
                if identities_pass { "pass" } else { "FAIL" },
                records.len()
            )?;
            for r in records.iter().filter(|r| !r.proved()) {
                writeln!(out, "  {}: {:?}", r.name, r.status)?;
            }
            for (k, (inst, fams)) in rows.iter().enumerate() {
                let cells: Vec<String> = fams
                    .iter()
                    .map(|f| {
                        let mark = if f.skipped {
                            "skip"
                        } else if f.pass {
                            "pass"
                        } else {
                            "FAIL"
                        };
                        format!("{}={mark}", f.family)
                    })
                    .collect();
                writeln!(out, "instance {k} (|A|={}): {}", inst.size(), cells.join(" "))?;
                for f in fams.iter().filter(|f| !f.pass) {
                    for x in &f.failures {
                        writeln!(out, "  {}: {x}", f.family)?;
                    }
                }
            }
            writeln!(out, "suite: {}", if all_pass { "pass" } else { "FAIL" })?;
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_report(inst: &SmmInstance, max: usize, fmt: Format, out: &mut dyn Write) -> CliResult {
    let skew = skewset_report(inst, max)?;
    let report = json!({
        "schema": SCHEMA,
        "instance": inst,
        "axioms": {
            "mu-delta": shown(&check_axioms(inst, Presentation::MuDelta)),
            "gamma": shown(&check_axioms(inst, Presentation::Gamma)),
        },
        "mimosa": mimosa_report(inst),
        "structure": shown(&structure_properties(inst)),
        "bialgebroids": bialgebroid_dump(inst)?,
        "modules": category_dump(&ElementCategory::modules(inst)),
        "comodules": category_dump(&ElementCategory::comodules(inst)),
        "skewset": {
            "pass": skew.passes(),
            "closedness": skew.closedness,
            "hopf": skew.hopf,
            "left_skew": skew.hopf.left_skew_status(),
            "alpha": skew.rank1.alpha,
            "violations": skew.violations().iter().map(|(t, v)| format!("{t}: {}", show(v))).collect::<Vec<_>>(),
        },
    });
    match fmt {
        Format::Json => emit_json(out, &report)?,
        Format::Text => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("json values serialize")
        )?,
    }
    Ok(if skew.passes() { 0 } else { 1 })
}
