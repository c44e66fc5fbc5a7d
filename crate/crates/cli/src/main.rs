//! Command line surface for the toolkit: validate structures, print
//! operator quotients, classify subsets, apply transfers and extensions,
//! run the check suite, search for counterexamples, and enumerate
//! instances.
//!
//! Exit codes: 0 for success (classification answers are data, whichever
//! way they come out), 1 when `verify` fails or `search` finds a witness,
//! 2 for input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gsg::enumerate::{enumerate, EnumerateOptions, Filter};
use gsg::extension::{extend, extend_op};
use gsg::format::{parse_gsg, parse_ifs, serialize_gsg, serialize_ifs};
use gsg::fuzzy::{classify_fuzzy, CarrierKind, IFSubset};
use gsg::operator::{Context, Side, TransferMap};
use gsg::transfer::transfer_fuzzy;
use gsg::verify::{
    parse_lattice, render_failure, render_json, render_text, run_suite, search_counterexample,
    CheckFilter, Population, RunConfig, SearchOutcome, SubsetParams,
};
use gsg::{GammaSemigroup, InputError};

#[derive(Parser)]
#[command(name = "gsg", version, about = "Finite gamma-semigroup toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Witness-population knobs shared by `verify` and `search`.
#[derive(Args)]
struct SubsetFlags {
    /// Comma-separated grade lattice for generated witnesses.
    #[arg(long, default_value = "0,1/4,1/2,3/4,1")]
    lattice: String,
    /// Largest witness population generated exhaustively.
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
    /// Witnesses drawn when a population is sampled instead.
    #[arg(long, default_value_t = 4096)]
    sample: u64,
    /// Most families evaluated per check and instance.
    #[arg(long, default_value_t = 4096)]
    family_cap: u64,
    /// Most witness pairs evaluated per check and instance.
    #[arg(long, default_value_t = 4096)]
    pair_cap: u64,
    /// Base seed for every sampling decision.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Negate the named catalog assertion (self-test fixture).
    #[arg(long, value_name = "ID")]
    mutated: Option<String>,
}

impl SubsetFlags {
    fn config(&self) -> Result<RunConfig, InputError> {
        Ok(RunConfig {
            subsets: SubsetParams {
                lattice: parse_lattice(&self.lattice)?,
                cap: self.cap,
                sample: self.sample,
                family_cap: self.family_cap,
                pair_cap: self.pair_cap,
                seed: self.seed,
            },
            mutated: self.mutated.clone(),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure file against the axioms and print its sizes.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print one operator semigroup: classes, Cayley table, unities.
    Operators {
        file: PathBuf,
        /// Which quotient to print: left or right.
        #[arg(long, value_parser = parse_side)]
        side: Side,
        /// List every class and the Cayley table, not just the summary.
        #[arg(long)]
        print_classes: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify a fuzzy subset under one predicate.
    Check {
        file: PathBuf,
        /// Fuzzy subset file over a carrier of the structure.
        #[arg(long)]
        subset: PathBuf,
        /// One of: ifli, ifri, ifi, ifpi, ifspi.
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        json: bool,
    },
    /// Move a fuzzy subset across one transfer map.
    Transfer {
        file: PathBuf,
        #[arg(long)]
        subset: PathBuf,
        /// One of: star, star-prime, plus, plus-prime.
        #[arg(long, value_parser = parse_map)]
        map: TransferMap,
        /// Output file; stdout when omitted.
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Extend a fuzzy subset by an element or quotient class.
    Extend {
        file: PathBuf,
        #[arg(long)]
        subset: PathBuf,
        /// Element index over the base carrier; class index over a quotient.
        #[arg(long)]
        by: usize,
        /// Output file; stdout when omitted.
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Run catalog checks over a file or an enumerated population.
    Verify {
        /// Structure file; omit when using --enumerate.
        #[arg(required_unless_present = "enumerate")]
        file: Option<PathBuf>,
        /// Bounds `s,g`: run over every instance up to these sizes.
        #[arg(long, value_name = "S,G", conflicts_with = "file")]
        enumerate: Option<String>,
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Cap the enumerated population size.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        subsets: SubsetFlags,
        #[arg(long)]
        json: bool,
    },
    /// Scan small instances for a counterexample to one check.
    Search {
        /// Catalog check id.
        id: String,
        /// Also run on instances outside the check's hypothesis.
        #[arg(long)]
        drop_hypothesis: bool,
        /// Bounds `s,g` for the scanned enumeration.
        #[arg(long, value_name = "S,G")]
        bounds: String,
        /// Most instances scanned before reporting inconclusive.
        #[arg(long)]
        limit: Option<u64>,
        #[command(flatten)]
        subsets: SubsetFlags,
        #[arg(long)]
        json: bool,
    },
    /// Count (or print) every instance of the given sizes.
    Enumerate {
        s: usize,
        g: usize,
        /// Keep only instances passing this filter; repeatable.  One of:
        /// commutative, has-left-unity, has-right-unity, has-both-unities.
        #[arg(long = "filter", value_name = "NAME")]
        filters: Vec<Filter>,
        /// Stop after this many instances.
        #[arg(long)]
        limit: Option<usize>,
        /// Print each instance in the structure format.
        #[arg(long)]
        print: bool,
        #[arg(long)]
        json: bool,
    },
}

fn parse_side(text: &str) -> Result<Side, String> {
    match text {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(format!("unknown side `{other}`; use left or right")),
    }
}

fn parse_map(text: &str) -> Result<TransferMap, String> {
    TransferMap::parse(text).map_err(|e| e.to_string())
}

fn parse_bounds(text: &str) -> Result<(usize, usize), InputError> {
    let parts: Vec<&str> = text.split(',').collect();
    let [s, g] = parts.as_slice() else {
        return Err(InputError::Other(format!(
            "expected bounds `s,g`, found `{text}`"
        )));
    };
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| InputError::Other(format!("size `{t}` is not a number")))
    };
    Ok((parse(s)?, parse(g)?))
}

fn read_file(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError::Other(format!("{}: {e}", path.display())))
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), InputError> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| InputError::Other(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_context(path: &Path) -> Result<Context, InputError> {
    Context::new(parse_gsg(&read_file(path)?)?)
}

/// Binds a parsed subset to the matching carrier of the context.
fn bind_subset(ctx: &Context, a: IFSubset) -> Result<IFSubset, InputError> {
    let want = ctx.carrier(a.carrier().kind());
    if a.carrier() != want {
        return Err(InputError::Other(format!(
            "subset over {} with {} entries does not fit the structure's {} of size {}",
            a.carrier().kind(),
            a.carrier().size(),
            a.carrier().kind(),
            want.size()
        )));
    }
    Ok(a)
}

/// Uniform product access over any carrier of the context.
struct CarrierOps<'a> {
    ctx: &'a Context,
    kind: CarrierKind,
}

impl CarrierOps<'_> {
    fn size(&self) -> usize {
        self.ctx.carrier(self.kind).size()
    }

    fn middle(&self) -> usize {
        match self.kind {
            CarrierKind::S => self.ctx.s().g_size(),
            CarrierKind::L | CarrierKind::R => 1,
        }
    }

    fn product(&self, x: usize, g: usize, y: usize) -> usize {
        match self.kind {
            CarrierKind::S => self.ctx.s().product(x, g, y),
            CarrierKind::L => self.ctx.left().mul(x, y),
            CarrierKind::R => self.ctx.right().mul(x, y),
        }
    }
}

/// A predicate answer with the first failing product triple, if any.
struct PredicateAnswer {
    holds: bool,
    witness: Option<(usize, usize, usize)>,
}

fn first_ideal_witness(
    ops: &CarrierOps,
    a: &IFSubset,
    left: bool,
    right: bool,
) -> Option<(usize, usize, usize)> {
    for x in 0..ops.size() {
        for g in 0..ops.middle() {
            for y in 0..ops.size() {
                let p = ops.product(x, g, y);
                let left_ok = !left || (a.mu(p) >= a.mu(y) && a.nu(p) <= a.nu(y));
                let right_ok = !right || (a.mu(p) >= a.mu(x) && a.nu(p) <= a.nu(x));
                if !left_ok || !right_ok {
                    return Some((x, g, y));
                }
            }
        }
    }
    None
}

fn answer_predicate(
    ctx: &Context,
    a: &IFSubset,
    predicate: &str,
) -> Result<PredicateAnswer, InputError> {
    let ops = CarrierOps {
        ctx,
        kind: a.carrier().kind(),
    };
    let flags = classify_fuzzy(a, ctx);
    let (holds, ideal_premise) = match predicate {
        "ifli" => (flags.left_ideal, (true, false)),
        "ifri" => (flags.right_ideal, (false, true)),
        "ifi" => (flags.ideal, (true, true)),
        "ifpi" => (flags.prime, (true, true)),
        "ifspi" => (flags.semiprime, (true, true)),
        other => {
            return Err(InputError::Other(format!(
                "unknown predicate `{other}`; one of ifli, ifri, ifi, ifpi, ifspi"
            )))
        }
    };
    if holds {
        return Ok(PredicateAnswer {
            holds,
            witness: None,
        });
    }
    let (need_left, need_right) = ideal_premise;
    let mut witness = first_ideal_witness(&ops, a, need_left, need_right);
    if witness.is_none() && predicate == "ifpi" {
        'scan: for x in 0..ops.size() {
            for g in 0..ops.middle() {
                for y in 0..ops.size() {
                    let p = ops.product(x, g, y);
                    if a.mu(p) != a.mu(x).max(a.mu(y)) || a.nu(p) != a.nu(x).min(a.nu(y)) {
                        witness = Some((x, g, y));
                        break 'scan;
                    }
                }
            }
        }
    }
    if witness.is_none() && predicate == "ifspi" {
        'squares: for x in 0..ops.size() {
            for g in 0..ops.middle() {
                let mu_floor = (0..ops.middle())
                    .map(|h| a.mu(ops.product(x, h, x)))
                    .min()
                    .expect("carriers are nonempty");
                let nu_ceil = (0..ops.middle())
                    .map(|h| a.nu(ops.product(x, h, x)))
                    .max()
                    .expect("carriers are nonempty");
                if a.mu(x) < mu_floor || a.nu(x) > nu_ceil {
                    witness = Some((x, g, x));
                    break 'squares;
                }
            }
        }
    }
    Ok(PredicateAnswer { holds, witness })
}

fn run_validate(file: &Path, json: bool) -> Result<ExitCode, InputError> {
    let s = parse_gsg(&read_file(file)?)?;
    let report = s.validate();
    if json {
        let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        let doc = serde_json::json!({
            "valid": report.is_valid(),
            "s": s.s_size(),
            "g": s.g_size(),
            "violations": violations,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("document serializes")
        );
    } else if report.is_valid() {
        println!("VALID S={} G={}", s.s_size(), s.g_size());
    } else {
        println!("INVALID S={} G={}", s.s_size(), s.g_size());
        for violation in &report.violations {
            println!("{violation}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_operators(
    file: &Path,
    side: Side,
    print_classes: bool,
    json: bool,
) -> Result<ExitCode, InputError> {
    let ctx = load_context(file)?;
    let op = match side {
        Side::Left => ctx.left(),
        Side::Right => ctx.right(),
    };
    if json {
        let unities = ctx.unities();
        let classes: Vec<String> = (0..op.class_count()).map(|c| op.class_display(c)).collect();
        let cayley: Vec<Vec<usize>> = (0..op.class_count())
            .map(|row| (0..op.class_count()).map(|col| op.mul(row, col)).collect())
            .collect();
        let doc = serde_json::json!({
            "side": side.name(),
            "classes": op.class_count(),
            "class_list": classes,
            "cayley": cayley,
            "left_unity": unities.left.map(|c| ctx.left().class_display(c)),
            "right_unity": unities.right.map(|c| ctx.right().class_display(c)),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("report serializes")
        );
        return Ok(ExitCode::SUCCESS);
    }
    println!("side={} classes={}", side.name(), op.class_count());
    if print_classes {
        for class in 0..op.class_count() {
            println!("{}", op.class_display(class));
        }
        for row in 0..op.class_count() {
            let cells: Vec<String> = (0..op.class_count())
                .map(|col| op.mul(row, col).to_string())
                .collect();
            println!("{}", cells.join(" "));
        }
    }
    let unities = ctx.unities();
    match unities.left {
        Some(class) => println!("left unity: {}", ctx.left().class_display(class)),
        None => println!("left unity: absent"),
    }
    match unities.right {
        Some(class) => println!("right unity: {}", ctx.right().class_display(class)),
        None => println!("right unity: absent"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_predicate(
    file: &Path,
    subset: &Path,
    predicate: &str,
    json: bool,
) -> Result<ExitCode, InputError> {
    let ctx = load_context(file)?;
    let a = bind_subset(&ctx, parse_ifs(&read_file(subset)?)?)?;
    let answer = answer_predicate(&ctx, &a, predicate)?;
    if json {
        let witness = answer
            .witness
            .map(|(x, g, y)| serde_json::json!({ "x": x, "g": g, "y": y }));
        let doc = serde_json::json!({
            "predicate": predicate,
            "holds": answer.holds,
            "witness": witness,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("document serializes")
        );
    } else {
        println!("{predicate}: {}", answer.holds);
        if let Some((x, g, y)) = answer.witness {
            println!("witness: x={x} g={g} y={y}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_transfer(
    file: &Path,
    subset: &Path,
    map: TransferMap,
    output: Option<&Path>,
) -> Result<ExitCode, InputError> {
    let ctx = load_context(file)?;
    let a = bind_subset(&ctx, parse_ifs(&read_file(subset)?)?)?;
    let image = transfer_fuzzy(&a, map, &ctx)?;
    write_output(output, &serialize_ifs(&image))?;
    Ok(ExitCode::SUCCESS)
}

fn run_extend(
    file: &Path,
    subset: &Path,
    by: usize,
    output: Option<&Path>,
) -> Result<ExitCode, InputError> {
    let ctx = load_context(file)?;
    let a = bind_subset(&ctx, parse_ifs(&read_file(subset)?)?)?;
    let size = a.carrier().size();
    if by >= size {
        return Err(InputError::Other(format!(
            "index {by} is out of range for a carrier of size {size}"
        )));
    }
    let image = match a.carrier().kind() {
        CarrierKind::S => extend(&a, by, &ctx),
        CarrierKind::L | CarrierKind::R => extend_op(&a, by, &ctx),
    };
    write_output(output, &serialize_ifs(&image))?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    file: Option<&Path>,
    bounds: Option<&str>,
    checks: &str,
    limit: Option<usize>,
    subsets: &SubsetFlags,
    json: bool,
) -> Result<ExitCode, InputError> {
    let cfg = subsets.config()?;
    let population = match (file, bounds) {
        (Some(path), None) => Population::single(parse_gsg(&read_file(path)?)?, &cfg)?,
        (None, Some(text)) => {
            let (s_max, g_max) = parse_bounds(text)?;
            Population::enumerate_to(s_max, g_max, limit, &cfg)?
        }
        _ => {
            return Err(InputError::Other(
                "give a structure file or --enumerate s,g".to_string(),
            ))
        }
    };
    let filter = if checks == "all" {
        CheckFilter::All
    } else {
        CheckFilter::Ids(checks.split(',').map(|t| t.trim().to_string()).collect())
    };
    let report = run_suite(&population, &cfg, &filter)?;
    if json {
        print!("{}", render_json(&report));
    } else {
        print!("{}", render_text(&report));
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_search(
    id: &str,
    drop_hypothesis: bool,
    bounds: &str,
    limit: Option<u64>,
    subsets: &SubsetFlags,
    json: bool,
) -> Result<ExitCode, InputError> {
    let cfg = subsets.config()?;
    let (s_max, g_max) = parse_bounds(bounds)?;
    let report = search_counterexample(id, drop_hypothesis, s_max, g_max, limit, &cfg)?;
    let (outcome, witness) = match &report.outcome {
        SearchOutcome::Witness(w) => ("WITNESS", Some(w)),
        SearchOutcome::Exhausted => ("EXHAUSTED", None),
        SearchOutcome::Inconclusive => ("INCONCLUSIVE", None),
    };
    if json {
        let doc = serde_json::json!({
            "id": id,
            "outcome": outcome.to_lowercase(),
            "scanned": report.scanned,
            "witness": witness,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("document serializes")
        );
    } else {
        println!("SEARCH {id} {outcome} scanned={}", report.scanned);
        if let Some(w) = witness {
            print!("{}", render_failure(id, w));
        }
    }
    Ok(if witness.is_some() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_enumerate(
    s: usize,
    g: usize,
    filters: &[Filter],
    limit: Option<usize>,
    print: bool,
    json: bool,
) -> Result<ExitCode, InputError> {
    let options = EnumerateOptions {
        filters: filters.to_vec(),
        limit,
    };
    let found = enumerate(s, g, &options)?;
    if json {
        let instances: Option<Vec<String>> = print.then(|| {
            found
                .instances
                .iter()
                .map(|i: &GammaSemigroup| serialize_gsg(i))
                .collect()
        });
        let doc = serde_json::json!({
            "s": s,
            "g": g,
            "count": found.instances.len(),
            "truncated": found.truncated,
            "instances": instances,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("document serializes")
        );
    } else {
        println!(
            "ENUMERATED s={s} g={g} count={} truncated={}",
            found.instances.len(),
            found.truncated
        );
        if print {
            for instance in &found.instances {
                println!();
                print!("{}", serialize_gsg(instance));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match &cli.command {
        Command::Validate { file, json } => run_validate(file, *json),
        Command::Operators {
            file,
            side,
            print_classes,
            json,
        } => run_operators(file, *side, *print_classes, *json),
        Command::Check {
            file,
            subset,
            predicate,
            json,
        } => run_predicate(file, subset, predicate, *json),
        Command::Transfer {
            file,
            subset,
            map,
            output,
        } => run_transfer(file, subset, *map, output.as_deref()),
        Command::Extend {
            file,
            subset,
            by,
            output,
        } => run_extend(file, subset, *by, output.as_deref()),
        Command::Verify {
            file,
            enumerate,
            checks,
            limit,
            subsets,
            json,
        } => run_verify(
            file.as_deref(),
            enumerate.as_deref(),
            checks,
            *limit,
            subsets,
            *json,
        ),
        Command::Search {
            id,
            drop_hypothesis,
            bounds,
            limit,
            subsets,
            json,
        } => run_search(id, *drop_hypothesis, bounds, *limit, subsets, *json),
        Command::Enumerate {
            s,
            g,
            filters,
            limit,
            print,
            json,
        } => run_enumerate(*s, *g, filters, *limit, *print, *json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
