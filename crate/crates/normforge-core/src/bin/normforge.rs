//! Command-line driver for the normforge library.
//!
//! Subcommands cover the whole workflow: enumerate the transfer systems of a
//! finite group, saturate generator pairs into a system, realize systems as
//! fixed-point suboperads and verify the round trip, scan graph subgroups
//! for admissibility, re-run the pinned worked examples, exercise the
//! algebraic laws on seeded random samples, and export groups, lattices, and
//! drawings. Every report records its seed, and identical configuration plus
//! seed produces byte-identical output files.
//!
//! Exit codes: 0 when every assertion passed, 1 on an assertion or
//! configuration failure, 2 when any verdict came back unknown.

use clap::{Args, Parser, Subcommand, ValueEnum};
use normforge_core::coinduced::FixedPointOutcome;
use normforge_core::dot::{transfer_lattice_dot, transfer_system_dot};
use normforge_core::group::{preset, FiniteGroup, SubgroupLattice};
use normforge_core::monoid::{Dyadic, FatDyadic, IntersectionMonoid, RationalCubes, Trivial};
use normforge_core::realize::{
    admissible_sets, outcome_json, pi_is_operad_morphism_check, realized_transfer_system,
    reproduce_appendix_b, reproduce_warning,
};
use normforge_core::report::Certificate;
use normforge_core::suites::{closure_suite, graph_law_suite, laxness_suite, table_law_suite};
use normforge_core::transfer::{
    enumerate_transfer_systems, parse_transfer_system, TransferSystem,
};
use normforge_core::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "normforge",
    version,
    about = "Equivariant suboperads of coinduced operads, realized and checked exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand that works over one group.
#[derive(Args, Clone)]
struct CommonOpts {
    /// Group preset (C1..C16, S3, products like C2xC2) or a path to a JSON
    /// multiplication table
    #[arg(long, default_value = "C4")]
    group: String,
    /// Directory that receives JSON reports and DOT drawings
    #[arg(long, default_value = "out")]
    output: PathBuf,
    /// Seed recorded in every report and driving all randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// List every transfer system on a group and draw their refinement lattice
    Enumerate {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Saturate generator pairs into the least transfer system containing them
    Generate {
        #[command(flatten)]
        common: CommonOpts,
        /// Generator pairs such as "e->C2, C2->C4"
        #[arg(long)]
        tau: String,
    },
    /// Realize transfer systems as suboperad fixed points and check each one
    /// comes back unchanged
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Which systems to realize: "all", "trivial", "complete", or
        /// generator pairs such as "e->C2"
        #[arg(long, default_value = "all")]
        tau: String,
        /// Intersection monoid whose tables realize the systems
        #[arg(long, value_enum, default_value_t = MonoidKind::Dyadic)]
        monoid: MonoidKind,
        /// Word-length bound for the corroborating bounded scan
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Decide fixed-point nonemptiness for every graph subgroup at one arity
    Admissibles {
        #[command(flatten)]
        common: CommonOpts,
        /// Transfer systems to test against: "all", "trivial", "complete",
        /// or generator pairs
        #[arg(long, default_value = "complete")]
        tau: String,
        /// Intersection monoid whose tables realize the systems
        #[arg(long, value_enum, default_value_t = MonoidKind::Dyadic)]
        monoid: MonoidKind,
        /// Number of operad inputs to scan
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// Largest arity this run accepts; defaults to the group order plus two
        #[arg(long)]
        n_max: Option<usize>,
        /// Word-length bound for the corroborating bounded scan
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Re-run a pinned worked example as a machine-checked certificate
    Reproduce {
        /// Which example to replay
        #[arg(value_enum)]
        which: ReproduceTarget,
        #[arg(long, default_value = "out")]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the randomized law suites and write one combined certificate
    Laws {
        #[command(flatten)]
        common: CommonOpts,
        /// Instances per suite
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Label monoid for the operad-law suite; the laxness and closure
        /// suites always label with dyadic words
        /// Intersection monoid whose tables realize the systems
        #[arg(long, value_enum, default_value_t = MonoidKind::Dyadic)]
        monoid: MonoidKind,
    },
    /// Write the group, its subgroup lattice, and all transfer systems to disk
    Export {
        #[command(flatten)]
        common: CommonOpts,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MonoidKind {
    /// Words over two letters; distinct words intersect when one extends the other
    Dyadic,
    /// Affine self-embeddings of the rationals; intersection is interval overlap
    RationalEmbedding,
    /// Weighted words reduced by deleting zero weights
    FatDyadic,
    /// A single point, so everything intersects and no disjoint pair exists
    Trivial,
}

impl MonoidKind {
    fn label(self) -> &'static str {
        match self {
            MonoidKind::Dyadic => "dyadic",
            MonoidKind::RationalEmbedding => "rational-embedding",
            MonoidKind::FatDyadic => "fat-dyadic",
            MonoidKind::Trivial => "trivial",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReproduceTarget {
    /// The four-edge graph whose fixedness needs every edge
    Warning,
    /// The worked rational-embedding composition and its support checks
    AppendixB,
}

/// Runs the chosen monoid through a generic body. Keeps the dispatch in one
/// place so every subcommand accepts the same four names.
macro_rules! with_monoid {
    ($kind:expr, $m:ident, $body:expr) => {
        match $kind {
            MonoidKind::Dyadic => {
                let $m = Dyadic;
                $body
            }
            MonoidKind::RationalEmbedding => {
                let $m = RationalCubes;
                $body
            }
            MonoidKind::FatDyadic => {
                let $m = FatDyadic;
                $body
            }
            MonoidKind::Trivial => {
                let $m = Trivial;
                $body
            }
        }
    };
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Enumerate { common } => cmd_enumerate(&common),
        Command::Generate { common, tau } => cmd_generate(&common, &tau),
        Command::Verify {
            common,
            tau,
            monoid,
            bound,
        } => {
            require_bound(bound)?;
            let lattice = load_lattice(&common.group)?;
            let taus = resolve_taus(&lattice, &tau)?;
            with_monoid!(monoid, m, {
                run_verify(&m, monoid.label(), &taus, bound, common.seed, &common.output)
            })
        }
        Command::Admissibles {
            common,
            tau,
            monoid,
            arity,
            n_max,
            bound,
        } => {
            require_bound(bound)?;
            let lattice = load_lattice(&common.group)?;
            let cap = n_max.unwrap_or(lattice.group().order() + 2);
            if arity == 0 || arity > cap {
                return Err(Error::Parse(format!(
                    "arity {arity} outside the accepted range 1..={cap}"
                )));
            }
            let taus = resolve_taus(&lattice, &tau)?;
            with_monoid!(monoid, m, {
                run_admissibles(&m, monoid.label(), &taus, arity, bound, common.seed, &common.output)
            })
        }
        Command::Reproduce {
            which,
            output,
            seed,
        } => cmd_reproduce(which, &output, seed),
        Command::Laws {
            common,
            samples,
            monoid,
        } => cmd_laws(&common, samples, monoid),
        Command::Export { common } => cmd_export(&common),
    }
}

/// Caps the rayon pool when NORMFORGE_THREADS is set to a positive integer.
fn configure_threads() {
    if let Ok(raw) = std::env::var("NORMFORGE_THREADS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn require_bound(bound: usize) -> Result<()> {
    if bound == 0 {
        return Err(Error::Parse("--bound must be at least 1".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Configuration parsing
// ---------------------------------------------------------------------------

/// Loads a preset by name, or a JSON multiplication table when the argument
/// names an existing file.
fn load_group(source: &str) -> Result<Arc<FiniteGroup>> {
    if source.ends_with(".json") || Path::new(source).is_file() {
        let text = fs::read_to_string(source)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        FiniteGroup::from_json(&value)
    } else {
        preset(source)
    }
}

fn load_lattice(source: &str) -> Result<Arc<SubgroupLattice>> {
    Ok(SubgroupLattice::new(load_group(source)?))
}

/// Resolves a `--tau` argument to the systems it denotes.
fn resolve_taus(lattice: &Arc<SubgroupLattice>, expr: &str) -> Result<Vec<TransferSystem>> {
    match expr.trim() {
        "all" => Ok(enumerate_transfer_systems(lattice)),
        other => Ok(vec![parse_transfer_system(lattice, other)?]),
    }
}

// ---------------------------------------------------------------------------
// Report files
// ---------------------------------------------------------------------------

fn write_text(dir: &Path, name: &str, text: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, text)?;
    Ok(path)
}

fn write_json(dir: &Path, name: &str, value: &serde_json::Value) -> Result<PathBuf> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_text(dir, name, &text)
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_enumerate(common: &CommonOpts) -> Result<u8> {
    let lattice = load_lattice(&common.group)?;
    let systems = enumerate_transfer_systems(&lattice);
    let value = serde_json::json!({
        "group": lattice.group().name(),
        "seed": common.seed,
        "count": systems.len(),
        "systems": systems.iter().map(TransferSystem::to_json).collect::<Vec<_>>(),
    });
    let json_path = write_json(&common.output, "systems.json", &value)?;
    let dot_path = write_text(
        &common.output,
        "transfer_lattice.dot",
        &transfer_lattice_dot(&systems),
    )?;
    println!(
        "{} transfer systems on {}",
        systems.len(),
        lattice.group().name()
    );
    for t in &systems {
        println!("  {}", t.describe());
    }
    println!("wrote {} and {}", json_path.display(), dot_path.display());
    Ok(0)
}

fn cmd_generate(common: &CommonOpts, tau: &str) -> Result<u8> {
    let lattice = load_lattice(&common.group)?;
    let system = parse_transfer_system(&lattice, tau)?;
    let value = serde_json::json!({
        "group": lattice.group().name(),
        "seed": common.seed,
        "seeds": tau,
        "system": system.to_json(),
    });
    let json_path = write_json(&common.output, "generated.json", &value)?;
    write_text(&common.output, "generated.dot", &transfer_system_dot(&system))?;
    println!("{}", system.describe());
    println!("wrote {}", json_path.display());
    Ok(0)
}

fn run_verify<M>(
    monoid: &M,
    monoid_name: &str,
    taus: &[TransferSystem],
    bound: usize,
    seed: u64,
    output: &Path,
) -> Result<u8>
where
    M: IntersectionMonoid + Send + Sync,
    M::Elem: Send + Sync,
{
    let mut any_fail = false;
    let mut any_unknown = false;
    for (idx, tau) in taus.iter().enumerate() {
        let outcome = realized_transfer_system(tau, monoid, bound)?;
        let cert = outcome.to_certificate(monoid_name, bound).with_seed(seed);
        let path = write_json(output, &format!("verify_{idx:03}.json"), &cert.to_json())?;
        let status = if outcome.unknown > 0 {
            any_unknown = true;
            "UNKNOWN"
        } else if cert.passed() {
            "pass"
        } else {
            any_fail = true;
            "FAIL"
        };
        println!(
            "[{status}] {} realizes as {} ({})",
            tau.describe(),
            outcome.realized.describe(),
            path.display()
        );
    }
    Ok(if any_unknown {
        2
    } else if any_fail {
        1
    } else {
        0
    })
}

fn run_admissibles<M>(
    monoid: &M,
    monoid_name: &str,
    taus: &[TransferSystem],
    arity: usize,
    bound: usize,
    seed: u64,
    output: &Path,
) -> Result<u8>
where
    M: IntersectionMonoid + Send + Sync,
    M::Elem: Send + Sync,
{
    let mut any_unknown = false;
    for (idx, tau) in taus.iter().enumerate() {
        let lattice = tau.lattice();
        let verdicts = admissible_sets(tau, arity, monoid, bound)?;
        let mut rows = Vec::with_capacity(verdicts.len());
        let mut admissible = 0usize;
        let mut unknown = 0usize;
        for v in &verdicts {
            let gamma = &v.gamma;
            let action: serde_json::Map<String, serde_json::Value> = gamma
                .subgroup()
                .elements()
                .iter()
                .map(|&h| {
                    let image = gamma.perm(h).map(|p| p.one_line().to_vec()).unwrap_or_default();
                    (lattice.group().elem_name(h).to_string(), serde_json::json!(image))
                })
                .collect();
            if v.outcome.is_nonempty() {
                admissible += 1;
            }
            if matches!(v.outcome, FixedPointOutcome::Unknown) {
                unknown += 1;
            }
            rows.push(serde_json::json!({
                "subgroup": lattice.name(gamma.h_index(lattice)?),
                "action": action,
                "predicted": v.predicted,
                "admissible": v.outcome.is_nonempty(),
                "certificate": outcome_json(lattice, &v.outcome),
            }));
        }
        let value = serde_json::json!({
            "group": lattice.group().name(),
            "tau": tau.to_json(),
            "arity": arity,
            "monoid": monoid_name,
            "bound": bound,
            "seed": seed,
            "verdicts": rows,
        });
        let path = write_json(output, &format!("admissibles_{idx:03}.json"), &value)?;
        println!(
            "{}: {} graph subgroups at arity {arity}, {admissible} admissible, {} obstructed, {unknown} unknown ({})",
            tau.describe(),
            verdicts.len(),
            verdicts.len() - admissible - unknown,
            path.display()
        );
        any_unknown |= unknown > 0;
    }
    Ok(if any_unknown { 2 } else { 0 })
}

fn cmd_reproduce(which: ReproduceTarget, output: &Path, seed: u64) -> Result<u8> {
    let (name, cert) = match which {
        ReproduceTarget::Warning => ("warning.json", reproduce_warning()?),
        ReproduceTarget::AppendixB => ("appendix_b.json", reproduce_appendix_b()?),
    };
    let cert = cert.with_seed(seed);
    let path = write_json(output, name, &cert.to_json())?;
    print!("{}", cert.to_pretty_string());
    println!("wrote {}", path.display());
    Ok(if cert.passed() { 0 } else { 1 })
}

fn cmd_export(common: &CommonOpts) -> Result<u8> {
    let lattice = load_lattice(&common.group)?;
    let group = lattice.group();
    write_json(&common.output, "group.json", &group.to_json())?;
    let subgroups: Vec<serde_json::Value> = (0..lattice.count())
        .map(|k| {
            let s = lattice.subgroup(k);
            serde_json::json!({
                "index": k,
                "name": lattice.name(k),
                "order": s.order(),
                "elements": s
                    .elements()
                    .iter()
                    .map(|&a| group.elem_name(a).to_string())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    write_json(
        &common.output,
        "subgroups.json",
        &serde_json::json!({
            "group": group.name(),
            "seed": common.seed,
            "subgroups": subgroups,
        }),
    )?;
    let systems = enumerate_transfer_systems(&lattice);
    write_json(
        &common.output,
        "systems.json",
        &serde_json::json!({
            "group": group.name(),
            "seed": common.seed,
            "count": systems.len(),
            "systems": systems.iter().map(TransferSystem::to_json).collect::<Vec<_>>(),
        }),
    )?;
    write_text(
        &common.output,
        "transfer_lattice.dot",
        &transfer_lattice_dot(&systems),
    )?;
    for (idx, t) in systems.iter().enumerate() {
        write_text(
            &common.output,
            &format!("system_{idx:03}.dot"),
            &transfer_system_dot(t),
        )?;
    }
    println!(
        "exported {} with {} subgroups and {} transfer systems to {}",
        group.name(),
        lattice.count(),
        systems.len(),
        common.output.display()
    );
    Ok(0)
}

// ---------------------------------------------------------------------------
// Law suites
// ---------------------------------------------------------------------------

fn cmd_laws(common: &CommonOpts, samples: usize, monoid: MonoidKind) -> Result<u8> {
    if samples == 0 {
        return Err(Error::Parse("--samples must be at least 1".into()));
    }
    let lattice = load_lattice(&common.group)?;
    let group = Arc::clone(lattice.group());
    let mut rng = ChaCha8Rng::seed_from_u64(common.seed);

    let mut cert = Certificate::new("randomized law suites")
        .with_inputs(serde_json::json!({
            "group": group.name(),
            "samples": samples,
            "monoid": monoid.label(),
        }))
        .with_seed(common.seed);

    with_monoid!(monoid, m, {
        table_law_suite(&m, &group, samples, &mut rng, &mut cert)
    })?;
    graph_law_suite(&group, samples, &mut rng, &mut cert)?;
    laxness_suite(&group, samples, &mut rng, &mut cert)?;
    closure_suite(&lattice, samples, samples, &mut rng, &mut cert)?;

    let morphism = pi_is_operad_morphism_check(samples, common.seed)?;
    cert.check_with(
        "order map is an operad morphism",
        morphism.passed(),
        format!("failed checks: {:?}", morphism.failed_names()),
    );

    let value = serde_json::json!({
        "report": cert.to_json(),
        "morphism_suite": morphism.to_json(),
    });
    let path = write_json(&common.output, "laws.json", &value)?;
    print!("{}", cert.to_pretty_string());
    println!("wrote {}", path.display());
    Ok(if cert.passed() { 0 } else { 1 })
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::TempDir;

    fn lattice_for(name: &str) -> Arc<SubgroupLattice> {
        SubgroupLattice::new(preset(name).expect("preset"))
    }

    #[test]
    fn tau_expressions_resolve_to_systems() {
        assert_eq!(resolve_taus(&lattice_for("C4"), "all").unwrap().len(), 5);
        assert_eq!(resolve_taus(&lattice_for("C2"), "all").unwrap().len(), 2);
        assert_eq!(resolve_taus(&lattice_for("C1"), "all").unwrap().len(), 1);

        let lattice = lattice_for("C4");
        let single = resolve_taus(&lattice, "e->C2").unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].pairs().len(), 1);
        assert!(resolve_taus(&lattice, "nonsense").is_err());
    }

    #[test]
    fn verify_round_trips_and_is_deterministic() {
        let lattice = lattice_for("C2");
        let taus = resolve_taus(&lattice, "all").unwrap();
        let dir = TempDir::new().unwrap();
        let code = run_verify(&Dyadic, "dyadic", &taus, 2, 7, dir.path()).unwrap();
        assert_eq!(code, 0);
        let first = fs::read(dir.path().join("verify_001.json")).unwrap();
        let code = run_verify(&Dyadic, "dyadic", &taus, 2, 7, dir.path()).unwrap();
        assert_eq!(code, 0);
        let second = fs::read(dir.path().join("verify_001.json")).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn trivial_monoid_is_rejected() {
        let lattice = lattice_for("C4");
        let taus = resolve_taus(&lattice, "e->C2").unwrap();
        let dir = TempDir::new().unwrap();
        let err = run_verify(&Trivial, "trivial", &taus, 3, 0, dir.path()).unwrap_err();
        assert!(matches!(err, Error::TrivialMonoid));
    }

    #[test]
    fn admissibles_report_counts() {
        let lattice = lattice_for("C2");
        let taus = resolve_taus(&lattice, "complete").unwrap();
        let dir = TempDir::new().unwrap();
        let code = run_admissibles(&Dyadic, "dyadic", &taus, 2, 3, 0, dir.path()).unwrap();
        assert_eq!(code, 0);
        let report: serde_json::Value = serde_json::from_str(
            &fs::read_to_string(dir.path().join("admissibles_000.json")).unwrap(),
        )
        .unwrap();
        let verdicts = report["verdicts"].as_array().unwrap();
        assert!(!verdicts.is_empty());
        assert!(verdicts
            .iter()
            .all(|v| v["admissible"] == v["predicted"] && v["certificate"]["verdict"] != "unknown"));
    }

    #[test]
    fn law_suites_pass_on_small_samples() {
        let dir = TempDir::new().unwrap();
        let common = CommonOpts {
            group: "C2".into(),
            output: dir.path().to_path_buf(),
            seed: 11,
        };
        assert_eq!(cmd_laws(&common, 12, MonoidKind::Dyadic).unwrap(), 0);
        assert_eq!(cmd_laws(&common, 8, MonoidKind::Trivial).unwrap(), 0);
    }

    #[test]
    fn reproductions_write_passing_reports() {
        let dir = TempDir::new().unwrap();
        assert_eq!(
            cmd_reproduce(ReproduceTarget::Warning, dir.path(), 0).unwrap(),
            0
        );
        assert_eq!(
            cmd_reproduce(ReproduceTarget::AppendixB, dir.path(), 0).unwrap(),
            0
        );
        assert!(dir.path().join("warning.json").is_file());
        assert!(dir.path().join("appendix_b.json").is_file());
    }

    #[test]
    fn enumerate_and_export_write_expected_files() {
        let dir = TempDir::new().unwrap();
        let common = CommonOpts {
            group: "C4".into(),
            output: dir.path().to_path_buf(),
            seed: 0,
        };
        assert_eq!(cmd_enumerate(&common).unwrap(), 0);
        let systems: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(dir.path().join("systems.json")).unwrap())
                .unwrap();
        assert_eq!(systems["count"], 5);

        assert_eq!(cmd_export(&common).unwrap(), 0);
        assert!(dir.path().join("group.json").is_file());
        assert!(dir.path().join("subgroups.json").is_file());
        assert!(dir.path().join("system_004.dot").is_file());
        assert!(!dir.path().join("system_005.dot").exists());
    }

    #[test]
    fn groups_load_from_json_files() {
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("klein.json");
        let text = serde_json::to_string(&preset("C2xC2").unwrap().to_json()).unwrap();
        fs::write(&path, text).unwrap();
        let group = load_group(path.to_str().unwrap()).unwrap();
        assert_eq!(group.order(), 4);
        assert!(load_group("C999").is_err());
    }
}
