use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lascoux_core::lattice::{Flavor, Model};
use lascoux_core::operators::{grothendieck_ddo, grothendieck_det, lascoux, lascoux_atom};
use lascoux_core::skyline::{enumerate_skyline, skyline_sum};
use lascoux_core::tableaux::{enumerate_ssyt, enumerate_svt, grothendieck_svt, KeyClasses};
use lascoux_core::verify::{run_suite, VerifyOptions, SUITES};
use lascoux_core::yangbaxter::{check_flavor, Mutation};
use lascoux_core::{BigInt, MPoly, Partition, Permutation, Poly};

#[derive(Parser)]
#[command(name = "lascoux", version, about = "Grothendieck polynomials, Lascoux polynomials and atoms")]
struct Cli {
    /// Number of variables; defaults to the number of parts given.
    #[arg(short = 'n', global = true)]
    n: Option<usize>,
    /// Grid width for lattice models; defaults to the minimal one.
    #[arg(short = 'm', global = true)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for the randomized relation checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// The Grothendieck polynomial of a partition.
    Groth {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
    },
    /// The Lascoux polynomial of w·λ.
    Lascoux(PolyArgs),
    /// The Lascoux atom of w·λ.
    Atom(PolyArgs),
    /// Enumerate the states of a lattice model.
    States {
        #[arg(long, value_enum)]
        flavor: FlavorName,
        #[arg(long)]
        lambda: String,
        #[arg(short = 'w', long = "w", default_value = "e")]
        w: String,
    },
    /// Tableau enumeration.
    Tableaux {
        #[command(subcommand)]
        command: TableauxCommand,
    },
    /// Enumerate set-valued skyline tableaux of shape w·λ.
    Skyline {
        #[arg(long)]
        lambda: String,
        #[arg(short = 'w', long = "w", default_value = "e")]
        w: String,
    },
    /// Check the RLL relation for one model.
    Ybe {
        #[arg(long, value_enum)]
        flavor: FlavorName,
        /// Replace one weight, e.g. `a2=1` or `R(0,1,0,1)=z2`.
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Skip partitions with more cells.
        #[arg(long)]
        max_cells: Option<usize>,
        /// Bounding partition replacing the suite default, e.g. 2,2,1.
        #[arg(long = "box")]
        bound: Option<String>,
        /// Random polynomials for the relation checks.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    lambda: String,
    #[arg(short = 'w', long = "w", default_value = "e")]
    w: String,
    #[arg(long, value_enum, default_value_t = Method::Ddo)]
    method: Method,
}

#[derive(Subcommand)]
enum TableauxCommand {
    Enumerate {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Kind::Svt)]
        kind: Kind,
        #[arg(short = 'w', long = "w", default_value = "e")]
        w: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Det,
    Ddo,
    Lattice,
    Svt,
    Skyline,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Svt,
    Ssyt,
    KeyClass,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorName {
    Uncolored,
    Atom,
    Lascoux,
    LascouxPrime,
}

impl FlavorName {
    fn as_str(self) -> &'static str {
        match self {
            FlavorName::Uncolored => "uncolored",
            FlavorName::Atom => "atom",
            FlavorName::Lascoux => "lascoux",
            FlavorName::LascouxPrime => "lascoux-prime",
        }
    }

    fn with(self, w: Permutation) -> Flavor {
        match self {
            FlavorName::Uncolored => Flavor::Uncolored,
            FlavorName::Atom => Flavor::Atom(w),
            FlavorName::Lascoux => Flavor::Lascoux(w),
            FlavorName::LascouxPrime => Flavor::LascouxPrime(w),
        }
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    n: Option<usize>,
    m: Option<usize>,
    format: Format,
    seed: u64,
}

impl Ctx {
    fn partition(&self, s: &str) -> Result<Partition, Failure> {
        let count = s.split(',').filter(|t| !t.trim().is_empty()).count();
        Ok(Partition::parse(s, self.n.unwrap_or(count.max(1)))?)
    }

    fn permutation(&self, s: &str, n: usize) -> Result<Permutation, Failure> {
        Ok(Permutation::parse(s, n)?)
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn print_poly(ctx: &Ctx, kind: &str, lambda: &Partition, w: Option<&Permutation>, method: Method, p: &Poly) {
    if ctx.json() {
        print_json(&json!({
            "kind": kind,
            "lambda": lambda.parts(),
            "n": lambda.n(),
            "w": w.map(|w| w.one_line().to_vec()),
            "method": method.to_possible_value().map(|v| v.get_name().to_string()),
            "polynomial": p.to_string(),
        }));
    } else {
        println!("{p}");
    }
}

fn unsupported(method: Method, what: &str) -> Failure {
    let name = method.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure::Usage(format!("method {name} does not compute {what}"))
}

fn groth(ctx: &Ctx, lambda: &str, method: Method) -> Outcome {
    let lambda = ctx.partition(lambda)?;
    let p: Poly = match method {
        Method::Det => grothendieck_det(&lambda),
        Method::Ddo => grothendieck_ddo(&lambda),
        Method::Lattice => Model::new(Flavor::Uncolored, &lambda, ctx.m)?.partition_function(),
        Method::Svt => grothendieck_svt(&lambda),
        Method::Skyline => return Err(unsupported(method, "Grothendieck polynomials")),
    };
    print_poly(ctx, "grothendieck", &lambda, None, method, &p);
    Ok(())
}

fn lascoux_poly(ctx: &Ctx, args: &PolyArgs, atom: bool) -> Outcome {
    let lambda = ctx.partition(&args.lambda)?;
    let w = ctx.permutation(&args.w, lambda.n())?;
    let p: Poly = match (args.method, atom) {
        (Method::Ddo, false) => lascoux(&w, &lambda),
        (Method::Ddo, true) => lascoux_atom(&w, &lambda),
        (Method::Lattice, false) => Model::new(Flavor::Lascoux(w.clone()), &lambda, ctx.m)?.partition_function(),
        (Method::Lattice, true) => Model::new(Flavor::Atom(w.clone()), &lambda, ctx.m)?.partition_function(),
        (Method::Svt, false) => KeyClasses::new(&lambda).filtered_sum(&w),
        (Method::Svt, true) if w.is_min_rep(&lambda) => KeyClasses::new(&lambda).class_sum(&w),
        (Method::Skyline, true) if w.is_min_rep(&lambda) => skyline_sum(&w, &lambda),
        (Method::Svt | Method::Skyline, true) => MPoly::zero(lambda.n()),
        (m, _) => return Err(unsupported(m, if atom { "atoms" } else { "Lascoux polynomials" })),
    };
    print_poly(ctx, if atom { "atom" } else { "lascoux" }, &lambda, Some(&w), args.method, &p);
    Ok(())
}

fn states(ctx: &Ctx, flavor: FlavorName, lambda: &str, w: &str) -> Outcome {
    let lambda = ctx.partition(lambda)?;
    let w = ctx.permutation(w, lambda.n())?;
    let model = Model::new(flavor.with(w), &lambda, ctx.m)?;
    let states = model.states();
    if ctx.json() {
        print_json(&Value::Array(states.iter().map(|s| s.to_json()).collect()));
        return Ok(());
    }
    for st in &states {
        println!("{}weight: {}\n", st.to_ascii(), st.weight::<BigInt>());
    }
    println!("{} states, Z = {}", states.len(), model.partition_function::<BigInt>());
    Ok(())
}

fn tableaux(ctx: &Ctx, lambda: &str, kind: Kind, w: &str) -> Outcome {
    let lambda = ctx.partition(lambda)?;
    let n = lambda.n();
    let list = match kind {
        Kind::Svt => enumerate_svt(&lambda, n),
        Kind::Ssyt => enumerate_ssyt(&lambda, n),
        Kind::KeyClass => {
            let w = ctx.permutation(w, n)?;
            KeyClasses::new(&lambda).class(&w).to_vec()
        }
    };
    if ctx.json() {
        print_json(&Value::Array(list.iter().map(|t| t.to_json()).collect()));
    } else {
        for t in &list {
            println!("{t}");
        }
    }
    Ok(())
}

fn skyline(ctx: &Ctx, lambda: &str, w: &str) -> Outcome {
    let lambda = ctx.partition(lambda)?;
    let w = ctx.permutation(w, lambda.n())?;
    let list = enumerate_skyline(&w.act_on(lambda.parts()), lambda.n());
    if ctx.json() {
        print_json(&Value::Array(list.iter().map(|t| t.to_json()).collect()));
    } else {
        for t in &list {
            println!("{t}");
        }
    }
    Ok(())
}

fn ybe(ctx: &Ctx, flavor: FlavorName, mutate: Option<&str>) -> Outcome {
    let mutation = mutate.map(str::parse::<Mutation>).transpose()?;
    let reports = check_flavor(flavor.as_str(), mutation.as_ref()).expect("flavor names are fixed");
    let passed = reports.iter().all(|r| r.passed());
    if ctx.json() || !passed {
        let out: Vec<Value> = reports.iter().filter(|r| ctx.json() || !r.passed()).map(|r| r.to_json()).collect();
        print_json(&Value::Array(out));
    }
    if !ctx.json() {
        for r in &reports {
            let crossing: Vec<String> = r.crossing.iter().map(|(a, b)| format!("{a}{b}")).collect();
            println!(
                "{} crossing [{}]: {} boundaries, {}",
                r.flavor.name(),
                crossing.join(" "),
                r.checked,
                if r.passed() { "pass" } else { "FAIL" }
            );
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify(ctx: &Ctx, suite: &str, max_cells: Option<usize>, bound: Option<&str>, samples: usize) -> Outcome {
    let n = ctx.n.unwrap_or(3);
    let bound = bound.map(|b| Partition::parse(b, n)).transpose()?;
    let opts = VerifyOptions {
        n,
        bound,
        max_cells,
        seed: ctx.seed,
        samples,
    };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for name in names {
        let report = run_suite(name, &opts).ok_or_else(|| {
            Failure::Usage(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", ")))
        })?;
        if !ctx.json() {
            println!(
                "{}: {} ({} checks)",
                report.suite,
                if report.passed() { "pass" } else { "FAIL" },
                report.checks
            );
            if let Some(w) = &report.witness {
                print_json(w);
            }
        }
        reports.push(report);
    }
    if ctx.json() {
        print_json(&Value::Array(reports.iter().map(|r| r.to_json()).collect()));
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        n: cli.n,
        m: cli.m,
        format: cli.format,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Groth { lambda, method } => groth(&ctx, lambda, *method),
        Command::Lascoux(args) => lascoux_poly(&ctx, args, false),
        Command::Atom(args) => lascoux_poly(&ctx, args, true),
        Command::States { flavor, lambda, w } => states(&ctx, *flavor, lambda, w),
        Command::Tableaux {
            command: TableauxCommand::Enumerate { lambda, kind, w },
        } => tableaux(&ctx, lambda, *kind, w),
        Command::Skyline { lambda, w } => skyline(&ctx, lambda, w),
        Command::Ybe { flavor, mutate } => ybe(&ctx, *flavor, mutate.as_deref()),
        Command::Verify {
            suite,
            max_cells,
            bound,
            samples,
        } => verify(&ctx, suite, *max_cells, bound.as_deref(), *samples),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}
