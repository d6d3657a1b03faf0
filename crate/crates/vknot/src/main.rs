use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::process::ExitCode;
use vknot::catalog::{compute_table, knot_json, load_catalog, to_appendix_tables, to_csv};
use vknot::diagram::GaussDiagram;
use vknot::intersect::IntersectionData;
use vknot::invariants::{
    all_invariants, crossing_bound_candidates, symmetry_distinctness,
    virtual_crossing_bound_candidates, InvariantSet,
};
use vknot::moves::{apply, random_move, Move, DEFAULT_MAX_CHORDS};

#[derive(Parser)]
#[command(
    name = "vknot",
    version,
    about = "Gauss-diagram invariants of virtual knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Appendix,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of one diagram
    Compute {
        /// Gauss code such as "O1+U2+O3+U1+O2+U3+"; empty for the unknot
        code: String,
        /// Emit one JSON object instead of the human-readable table
        #[arg(long)]
        json: bool,
    },
    /// Compute invariants for every diagram in a catalog file
    Table {
        /// File of "name<TAB>gauss code" lines; # starts a comment
        catalog: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Report which of W, I, II, III tell two diagrams apart
    Distinguish { code1: String, code2: String },
    /// Invariants of the eight symmetry variants plus a distinctness verdict
    Symmetries { code: String },
    /// Lower bounds for the crossing and virtual crossing numbers
    Bounds { code: String },
    /// Walk random Reidemeister moves and fail if any invariant changes
    Verify {
        code: String,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Growth cap: moves that add chords are skipped beyond this size
        #[arg(long, env = "VKNOT_MAX_CHORDS", default_value_t = DEFAULT_MAX_CHORDS)]
        max_chords: usize,
    },
    /// Run the built-in sanity suites
    Selftest,
}

fn main() -> ExitCode {
    // die quietly when downstream closes the pipe, like any filter
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type CliResult = Result<(), Box<dyn std::error::Error>>;

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Compute { code, json } => compute_cmd(&code, json),
        Command::Table { catalog, format } => table_cmd(&catalog, format),
        Command::Distinguish { code1, code2 } => distinguish_cmd(&code1, &code2),
        Command::Symmetries { code } => symmetries_cmd(&code),
        Command::Bounds { code } => bounds_cmd(&code),
        Command::Verify {
            code,
            steps,
            seed,
            max_chords,
        } => verify_cmd(&code, steps, seed, max_chords),
        Command::Selftest => selftest_cmd(),
    }
}

fn compute_cmd(code: &str, json: bool) -> CliResult {
    let d: GaussDiagram = code.parse()?;
    if json {
        println!("{}", serde_json::to_string(&knot_json(code.trim(), &d))?);
        return Ok(());
    }
    let s = all_invariants(&d);
    let data = IntersectionData::build(&d);
    println!("gauss code: {}", d.code());
    println!("chords: {}   writhe: {}", d.n(), s.writhe);
    println!("index: {:?}", data.index());
    print!("{}", data.table_dump());
    println!("W    = {}", s.w);
    println!("Wbar = {}", s.wbar);
    println!("f01  = {}", s.f01);
    println!("f10  = {}", s.f10);
    println!("f00  = {}", s.f00);
    println!("f11  = {}", s.f11);
    println!("I    = {}", s.first);
    println!("II   = {}", s.second);
    println!(
        "III  = {}  (mod {})",
        s.third.canonical_representative(),
        s.third.modulus()
    );
    print_bounds(&s);
    println!(
        "eight symmetry variants certified distinct: {}",
        symmetry_distinctness(&s).distinct
    );
    Ok(())
}

fn table_cmd(catalog: &PathBuf, format: Format) -> CliResult {
    let records = load_catalog(catalog).map_err(|e| format!("{}: {e}", catalog.display()))?;
    match format {
        Format::Json => {
            for row in compute_table(&records) {
                println!("{}", serde_json::to_string(&row)?);
            }
        }
        Format::Csv => print!("{}", to_csv(&compute_table(&records))),
        Format::Appendix => print!("{}", to_appendix_tables(&records)?),
    }
    Ok(())
}

fn distinguish_cmd(code1: &str, code2: &str) -> CliResult {
    let a = all_invariants(&code1.parse()?);
    let b = all_invariants(&code2.parse()?);
    println!("{}", distinguish_line(&a, &b));
    Ok(())
}

fn distinguish_line(a: &InvariantSet, b: &InvariantSet) -> String {
    let third_equal = a.third.same_relation(&b.third) && a.third.class_equal(&b.third);
    let verdicts = [
        ("W", a.w == b.w),
        ("I", a.first == b.first),
        ("II", a.second == b.second),
        ("III", third_equal),
    ];
    let pick = |want| {
        verdicts
            .iter()
            .filter(|(_, same)| *same == want)
            .map(|(n, _)| *n)
            .collect::<Vec<_>>()
    };
    let differing = pick(false);
    let equal = pick(true);
    let differ_verb = if differing.len() == 1 {
        "differs"
    } else {
        "differ"
    };
    match (differing.is_empty(), equal.is_empty()) {
        (true, _) => format!("{} equal", equal.join(", ")),
        (_, true) => format!("{} {}", differing.join(", "), differ_verb),
        _ => format!(
            "{} {}; {} equal",
            differing.join(", "),
            differ_verb,
            equal.join(", ")
        ),
    }
}

fn symmetries_cmd(code: &str) -> CliResult {
    let d: GaussDiagram = code.parse()?;
    let variants: [(&str, GaussDiagram); 8] = [
        ("K", d.clone()),
        ("-K", d.reverse()),
        ("K#", d.vertical_mirror()),
        ("K*", d.horizontal_mirror()),
        ("-K#", d.reverse().vertical_mirror()),
        ("-K*", d.reverse().horizontal_mirror()),
        ("K#*", d.vertical_mirror().horizontal_mirror()),
        ("-K#*", d.reverse().vertical_mirror().horizontal_mirror()),
    ];
    for (label, v) in &variants {
        let s = all_invariants(v);
        println!(
            "{label:5} W = {}; I = {}; II = {}; III = {} (mod {})",
            s.w,
            s.first,
            s.second,
            s.third.canonical_representative(),
            s.third.modulus()
        );
    }
    let report = symmetry_distinctness(&all_invariants(&d));
    for (label, holds) in report.conditions() {
        println!("condition {label}: {holds}");
    }
    println!(
        "eight symmetry variants certified distinct: {}",
        report.distinct
    );
    Ok(())
}

fn bounds_cmd(code: &str) -> CliResult {
    let s = all_invariants(&code.parse()?);
    print_bounds(&s);
    Ok(())
}

fn print_bounds(s: &InvariantSet) {
    let line = |tag: &str, cands: Vec<(&'static str, i64)>| {
        // first maximum wins so ties report the earlier polynomial
        let best = cands
            .iter()
            .fold(None::<(&str, i64)>, |acc, &(n, b)| match acc {
                Some((_, cur)) if cur >= b => acc,
                _ => Some((n, b)),
            });
        match best {
            Some((name, bound)) => println!("{tag} >= {bound} (from {name})"),
            None => println!("{tag} >= 0 (no contributing polynomial)"),
        }
    };
    line("c(K)", crossing_bound_candidates(s));
    line("vc(K)", virtual_crossing_bound_candidates(s));
}

fn verify_cmd(code: &str, steps: usize, seed: u64, max_chords: usize) -> CliResult {
    let start: GaussDiagram = code.parse()?;
    let base = all_invariants(&start);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = start;
    let mut log: Vec<Move> = Vec::new();
    for _ in 0..steps {
        let Some(mv) = random_move(&d, &mut rng, max_chords) else {
            println!("stalled: no applicable move after {} steps", log.len());
            break;
        };
        let next = apply(&d, &mv)?;
        log.push(mv);
        let s = all_invariants(&next);
        let preserved = s.w == base.w
            && s.first == base.first
            && s.second == base.second
            && s.third.same_relation(&base.third)
            && s.third.class_equal(&base.third);
        if !preserved {
            println!("move log:");
            for m in &log {
                println!("  {m}");
            }
            println!("final diagram: {}", next.code_as_stored());
            return Err(format!("invariant changed after move {}", log.len()).into());
        }
        d = next;
    }
    println!(
        "ok: {} moves applied, W, I, II and III all preserved",
        log.len()
    );
    Ok(())
}

fn selftest_cmd() -> CliResult {
    use vknot::intersect::{direct_pairing_oracle, ArcRef};
    use vknot::invariants::symmetry_identity_check;

    let mut failures = 0usize;
    let mut suite = |name: &str, ok: bool| {
        println!("{name}: {}", if ok { "ok" } else { "FAILED" });
        if !ok {
            failures += 1;
        }
    };

    let trefoil: GaussDiagram = "O1+U2+O3+U1+O2+U3+".parse().unwrap();
    let s = all_invariants(&trefoil);
    suite(
        "classical trefoil has vanishing invariants",
        s.w.is_zero() && s.first.is_zero() && s.second.is_zero() && s.third.is_zero_class(),
    );

    let mut linearity_ok = true;
    for seed in 0..40 {
        let d = GaussDiagram::random_from_seed(6, seed);
        let data = IntersectionData::build(&d);
        for i in 0..d.n() {
            for j in 0..d.n() {
                if i == j {
                    continue;
                }
                for (a, b) in [
                    (ArcRef::gamma(i), ArcRef::gamma(j)),
                    (ArcRef::gamma(i), ArcRef::gamma_bar(j)),
                    (ArcRef::gamma_bar(i), ArcRef::gamma(j)),
                    (ArcRef::gamma_bar(i), ArcRef::gamma_bar(j)),
                ] {
                    if data.pairing(a, b) != direct_pairing_oracle(&d, a, b) {
                        linearity_ok = false;
                    }
                }
            }
        }
    }
    suite("pairing linearity matches the direct count", linearity_ok);

    let mut identities_ok = true;
    for seed in 0..40 {
        let d = GaussDiagram::random_from_seed(5, seed);
        if !symmetry_identity_check(&d).is_ok() {
            identities_ok = false;
        }
    }
    suite("symmetry identities hold on random diagrams", identities_ok);

    if failures > 0 {
        return Err(format!("{failures} selftest suite(s) failed").into());
    }
    Ok(())
}
