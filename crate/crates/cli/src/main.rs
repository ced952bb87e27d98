//! `cp2q`: runs verification suites and individual computations and prints
//! deterministic reports. Exit code 0 when every check passes, 1 when a
//! check fails, 2 on invalid input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cp2q::expr::{parse_poly, parse_uq};
use cp2q::haar;
use cp2q::holo;
use cp2q::ncpoly::{load_cache, save_cache, NCPoly};
use cp2q::qalgebras::{self, act_left, act_right, actions::act_left_s5, embed_s5, s5q, suq3, Alg, Side};
use cp2q::qcoeff::{q_binomial, q_factorial, q_int, q_trinomial, RatV};
use cp2q::report::{Check, SuiteReport};
use cp2q::suite::{self, Level};
use cp2q::uqsu3::{self, Gen, UqElement, WeightLabel};
use rand::SeedableRng;

#[derive(Parser)]
#[command(name = "cp2q", version, about = "Exact verification engine for SU_q(3), S^5_q and CP^2_q")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory holding completed rewrite systems; created and filled on
    /// first use.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Include wall time in the JSON report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    S5q,
    Suq3,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum QnumKind {
    Int,
    Fact,
    Binom,
    Trinom,
}

#[derive(Subcommand)]
enum Command {
    /// Exact q-number: `int n`, `fact n`, `binom n m`, `trinom j k l`.
    Qnum {
        #[arg(value_enum)]
        kind: QnumKind,
        #[arg(allow_negative_numbers = true)]
        args: Vec<i64>,
    },
    /// Normal form of a generator expression.
    Reduce {
        #[arg(long, value_enum)]
        alg: AlgArg,
        expr: String,
    },
    /// Representation checks.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// Apply a Hopf action `h |> x` or `x <| h`.
    Act {
        #[arg(long, value_enum)]
        side: SideArg,
        /// U_q(su(3)) expression, e.g. "E1 K2i".
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value_t = AlgArg::Suq3)]
        alg: AlgArg,
        expr: String,
    },
    /// Peter-Weyl element with labels `j1,j2,2m` and `l1,l2,2k`.
    Pw {
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
        #[arg(long, allow_hyphen_values = true)]
        lower: String,
        #[arg(long, allow_hyphen_values = true)]
        upper: String,
    },
    /// Holomorphic sections of L_N on the slice of total degree D.
    H0 {
        #[arg(long = "N", allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        degree: usize,
    },
    /// Frame identities and flatness.
    Frame {
        #[command(subcommand)]
        action: FrameAction,
    },
    /// Coordinate-ring checks.
    Ring {
        #[command(subcommand)]
        action: RingAction,
    },
    /// Haar state on the (D, D) slice with twisted trace and positivity probes.
    Haar {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        probe: usize,
        /// Numeric evaluation point; defaults to $CP2Q_Q0 or 0.5.
        #[arg(long, env = "CP2Q_Q0", default_value_t = 0.5)]
        q: f64,
    },
    /// The acceptance battery: `all`, or a criterion number 1..13.
    Suite {
        which: String,
        #[arg(long, value_parser = ["smoke", "full"], default_value = "smoke")]
        level: String,
    },
}

#[derive(Subcommand)]
enum RepAction {
    Verify {
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
    },
}

#[derive(Subcommand)]
enum FrameAction {
    Verify {
        #[arg(long = "N", allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Subcommand)]
enum RingAction {
    Verify {
        #[arg(long = "maxN")]
        max_n: i64,
    },
}

/// Invalid input; exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res = Result<SuiteReport, InputError>;

fn alg_of(a: AlgArg) -> Alg {
    match a {
        AlgArg::S5q => Alg::S5q,
        AlgArg::Suq3 => Alg::Suq3,
    }
}

fn triple(s: &str) -> Result<[i64; 3], InputError> {
    let v: Vec<i64> = s.split(',').map(|x| x.trim().parse::<i64>()).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| InputError(format!("expected three comma-separated integers, got `{s}`")))
}

fn load_or_build(dir: &Path) -> Result<(), InputError> {
    std::fs::create_dir_all(dir)?;
    for alg in [Alg::Suq3, Alg::S5q] {
        let (names, watermark) = match alg {
            Alg::Suq3 => (qalgebras::presentations::suq3_names(), qalgebras::SUQ3_WATERMARK),
            Alg::S5q => (qalgebras::presentations::s5q_names(), qalgebras::S5Q_WATERMARK),
        };
        let path = dir.join(format!("{}.cache", alg.name()));
        let sys = match std::fs::read_to_string(&path) {
            Ok(text) => load_cache(&text, alg.name(), &names)?,
            Err(_) => {
                let sys = qalgebras::build_system(alg, watermark)?;
                std::fs::write(&path, save_cache(&sys))?;
                sys
            }
        };
        qalgebras::install(alg, sys)?;
    }
    Ok(())
}

fn qnum(kind: QnumKind, args: &[i64]) -> Res {
    let need = match kind {
        QnumKind::Int | QnumKind::Fact => 1,
        QnumKind::Binom => 2,
        QnumKind::Trinom => 3,
    };
    if args.len() != need {
        return Err(InputError(format!("expected {need} integer arguments, got {}", args.len())));
    }
    let value: RatV = match kind {
        QnumKind::Int => q_int(args[0]),
        QnumKind::Fact => q_factorial(args[0])?,
        QnumKind::Binom => q_binomial(args[0], args[1])?,
        QnumKind::Trinom => q_trinomial(args[0], args[1], args[2])?,
    };
    let mut r = SuiteReport::new("qnum").param("args", args);
    r.result("value", value.to_string());
    Ok(r)
}

fn reduce(alg: AlgArg, expr: &str) -> Res {
    let pres = qalgebras::Presentation::get(alg_of(alg));
    let x = parse_poly(pres, expr)?;
    let mut r = SuiteReport::new("reduce").param("alg", alg_of(alg).name()).param("expr", expr);
    r.result("normal_form", pres.display(&x));
    Ok(r)
}

fn rep_verify(n1: i64, n2: i64) -> Res {
    let rep = uqsu3::verify_relations(n1, n2)?;
    let mut r = SuiteReport::new("rep-verify").param("n1", n1).param("n2", n2);
    r.result("dimension", rep.dim);
    r.push(Check::eq("dimension formula", uqsu3::dim_formula(n1, n2), rep.dim));
    for c in rep.checks {
        let mut k = Check::new(c.name, true, c.pass, c.pass);
        k.witness = c.witness;
        r.push(k);
    }
    Ok(r)
}

fn act(side: SideArg, h: &str, alg: AlgArg, expr: &str) -> Res {
    let hh = parse_uq(h)?;
    let pres = qalgebras::Presentation::get(alg_of(alg));
    let x = parse_poly(pres, expr)?;
    let (out, shown_in) = match (side, alg) {
        (SideArg::Left, AlgArg::S5q) => (s5q().display(&act_left_s5(&hh, &x)), "s5q"),
        (SideArg::Left, AlgArg::Suq3) => (suq3().display(&act_left(&hh, &x)), "suq3"),
        (SideArg::Right, AlgArg::S5q) => (suq3().display(&act_right(&embed_s5(&x), &hh)), "suq3"),
        (SideArg::Right, AlgArg::Suq3) => (suq3().display(&act_right(&x, &hh)), "suq3"),
    };
    let side_name = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let mut r = SuiteReport::new("act").param("side", format!("{side_name:?}").to_lowercase()).param("h", h).param("expr", expr);
    r.result("algebra", shown_in);
    r.result("image", out);
    Ok(r)
}

fn pw(n1: i64, n2: i64, lower: &str, upper: &str) -> Res {
    let [j1, j2, m2] = triple(lower)?;
    let [l1, l2, k2] = triple(upper)?;
    let lo = WeightLabel::new(n1, n2, j1, j2, m2)?;
    let up = WeightLabel::new(n1, n2, l1, l2, k2)?;
    let t = qalgebras::pw_element(&lo, &up)?;
    let mut r = SuiteReport::new("pw").param("n1", n1).param("n2", n2).param("lower", lower).param("upper", upper);
    r.result("element", suq3().display(&t));
    for g in [Gen::E1, Gen::E2, Gen::F1, Gen::F2, Gen::K1, Gen::K2] {
        let h = UqElement::gen(g);
        let right = qalgebras::q_equivariance_check(&lo, &up, &h)?;
        r.push(Check::new(format!("right equivariance {g}"), true, right.pass, right.pass));
        let left = qalgebras::peter_weyl::left_equivariance_check(&lo, &up, &h)?;
        r.push(Check::new(format!("left equivariance {g}"), true, left.pass, left.pass));
    }
    Ok(r)
}

fn h0(n: i64, degree: usize) -> Res {
    let s = holo::h0_solve(n, degree)?;
    let cert = s.certificate();
    let mut r = SuiteReport::new("h0").param("N", n).param("D", degree);
    r.push(Check::eq(format!("dim H0(L{n})"), cert.expected, cert.dimension));
    r.result("certificate", &cert);
    Ok(r)
}

fn frame_verify(n: i64) -> Res {
    let f = holo::frame(n)?;
    let mut r = SuiteReport::new("frame-verify").param("N", n);
    let weights: Vec<(String, String)> = f.components.iter().map(|c| (format!("{:?}", c.index), c.weight.to_string())).collect();
    r.result("weights", weights);
    r.extend(holo::verify_frame_identities(n)?);
    r.extend(holo::flatness_check(n)?);
    Ok(r)
}

fn ring_verify(max_n: i64) -> Res {
    let mut r = SuiteReport::new("ring-verify").param("maxN", max_n);
    r.extend(holo::ring_relations_check(max_n)?);
    Ok(r)
}

fn haar_cmd(degree: usize, probes: usize, q0: f64) -> Res {
    if !(0.0 < q0 && q0 < 1.0) {
        return Err(InputError(format!("q must lie in (0, 1), got {q0}")));
    }
    let s5 = s5q();
    let mut r = SuiteReport::new("haar").param("D", degree).param("probes", probes).param("q0", q0);
    let table = match haar::haar_table(degree) {
        Ok(t) => t,
        Err(e) => {
            r.push(Check::new("unique invariant state", true, e.to_string(), false));
            return Ok(r);
        }
    };
    r.push(Check::new("unique invariant state", true, true, true));
    let values: Vec<(String, String)> = table.values.iter().map(|(w, v)| (s5.system().word_to_string(w), v.to_string())).collect();
    r.result("values", values);
    let (count, bad) = haar::twisted_trace_exhaustive(degree)?;
    let mut c = Check::new(format!("h(xy) = h(sigma(y) x), {count} pairs"), true, bad.is_none(), bad.is_none());
    c.witness = bad.map(|(x, y)| format!("x = {}, y = {}", s5.system().word_to_string(&x), s5.system().word_to_string(&y)));
    r.push(c);
    if degree >= 1 {
        let mut sum = RatV::zero();
        for j in 1..=3 {
            let x = s5.mul(&NCPoly::letter(qalgebras::z_letter(j)), &NCPoly::letter(qalgebras::zstar_letter(j)));
            sum = &sum + &table.eval(&x)?;
        }
        r.push(Check::eq("sum h(z_i z_i*)", RatV::one(), sum));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(degree as u64);
    let mut values = Vec::new();
    for _ in 0..probes {
        let a = haar::random_element(&mut rng, degree.max(1), 3);
        values.push(haar::positivity_probe(&a, q0)?);
    }
    if probes > 0 {
        let worst = values.iter().copied().fold(f64::INFINITY, f64::min);
        r.push(Check::new("min h(aa*) >= -1e-12", ">= -1e-12", worst, worst >= -1e-12));
        r.result("probe_values", values);
    }
    Ok(r)
}

fn suite_cmd(which: &str, level: &str) -> Res {
    let level = Level::parse(level).ok_or_else(|| InputError(format!("unknown level `{level}`")))?;
    if which == "all" {
        return Ok(suite::run_all(level).0);
    }
    let k: usize = which.parse().map_err(|_| InputError(format!("expected `all` or a criterion number, got `{which}`")))?;
    suite::run_criterion(k, level).ok_or_else(|| InputError(format!("no criterion {k}")))
}

fn run(cli: &Cli) -> Res {
    if let Some(dir) = &cli.cache {
        load_or_build(dir)?;
    }
    match &cli.command {
        Command::Qnum { kind, args } => qnum(*kind, args),
        Command::Reduce { alg, expr } => reduce(*alg, expr),
        Command::Rep { action: RepAction::Verify { n1, n2 } } => rep_verify(*n1, *n2),
        Command::Act { side, h, alg, expr } => act(*side, h, *alg, expr),
        Command::Pw { n1, n2, lower, upper } => pw(*n1, *n2, lower, upper),
        Command::H0 { n, degree } => h0(*n, *degree),
        Command::Frame { action: FrameAction::Verify { n } } => frame_verify(*n),
        Command::Ring { action: RingAction::Verify { max_n } } => ring_verify(*max_n),
        Command::Haar { degree, probe, q } => haar_cmd(*degree, *probe, *q),
        Command::Suite { which, level } => suite_cmd(which, level),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match run(&cli) {
        Ok(r) => r,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    report.wall_time_ms = start.elapsed().as_millis();
    let text = match cli.format {
        Format::Json if cli.timing => report.to_json(),
        Format::Json => report.body_json(),
        Format::Tsv => report.to_tsv(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            use std::io::Write;
            // A closed pipe (e.g. `| head`) is not an error of the computation.
            let _ = writeln!(std::io::stdout(), "{text}");
        }
    }
    ExitCode::from(if report.pass { 0 } else { 1 })
}
