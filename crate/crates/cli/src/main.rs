use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use torsion_core::constructors::{generate, GeneratorSpec, CATALOG};
use torsion_core::experiments::{
    conjecture, conjecture_csv, er_sweep, extremal, sequence, sweep_csv, ConjectureTarget, SequenceTarget,
};
use torsion_core::io::{parse_complex, parse_graph, write_graph, Input};
use torsion_core::serial::{parse_rational, sig12};
use torsion_core::spectral::{
    barycentric_limit, barycentric_operator, dirac_zeta, dirac_zeta_complex, zeta_csv, zeta_torsion, Complex64,
};
use torsion_core::topology::{classify, DEFAULT_BUDGET};
use torsion_core::torsion::torsion_report;
use torsion_core::trees::{parity_tree_products, tree_counts, von_staudt_check};
use torsion_core::wu::{f_matrix, wu_chain, wu_characteristic, wu_torsion_report};
use torsion_core::{build_chain, BigRational, Error, ExactMatrix};

#[derive(Parser)]
#[command(name = "torsion", version, about = "Exact squared analytic torsion of graphs and simplicial complexes")]
struct Cli {
    /// Graph file: {"vertices": [...], "edges": [[a, b], ...]}
    #[arg(long, global = true, conflicts_with = "complex")]
    graph: Option<PathBuf>,
    /// Complex file: {"facets": [[...], ...]}
    #[arg(long, global = true)]
    complex: Option<PathBuf>,
    /// Seed for random generators and sampled experiments
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Print tables as CSV
    #[arg(long, global = true)]
    csv: bool,
    /// Node budget of the topology searches
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a catalog graph as a graph file
    Gen {
        /// One of the catalog names; `list` prints them
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Torsion by both formulas, Betti and f-vectors, tree products
    Torsion,
    /// Spanning-tree counts and the dual-graph check for 2-spheres
    Trees,
    /// Betti numbers and Euler characteristic
    Betti,
    /// Contractibility and sphere recognition
    Check,
    /// f-matrix, Wu characteristic and Wu torsion
    Wu,
    /// Dirac zeta function
    Zeta(ZetaArgs),
    /// Barycentric refinement operator and limits
    Bary(BaryArgs),
    /// Dump an operator as an integer grid
    Matrix {
        /// dirac, hodge, kirchhoff, d (with --k), dirac-block or hodge-block (with --k)
        kind: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Random sweeps, sequences, conjecture grids and extremal scans
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Args)]
struct ZetaArgs {
    /// Evaluate at s (real part)
    #[arg(long, allow_negative_numbers = true)]
    at: Option<f64>,
    /// Imaginary part of s
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    im: f64,
    /// exp(-zeta'(0)) against the exact torsion
    #[arg(long)]
    torsion: bool,
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    to: f64,
    #[arg(long, default_value_t = 0.25)]
    step: f64,
}

#[derive(Args)]
struct BaryArgs {
    /// Torsions along refinement of an even-dimensional sphere of this dimension
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    /// Print the operator of this dimension
    #[arg(long)]
    operator: Option<usize>,
}

#[derive(Subcommand)]
enum Experiment {
    /// Mean torsion over G(n, p) for a grid of p
    Er {
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Comma-separated rationals
        #[arg(long, default_value = "0,1/10,1/5,3/10,2/5,1/2,3/5,7/10,4/5,9/10,1")]
        p: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Torsions of complements of cycles or paths
    Sequence {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 15)]
        n_max: usize,
    },
    /// Exact torsion of strong products against a closed form
    Conjecture {
        /// shannon_tori, cylinders, wheels or linear
        #[arg(long)]
        target: String,
        /// Range of n as a..b
        #[arg(long)]
        n: Option<String>,
        /// Range of m as a..b
        #[arg(long)]
        m: Option<String>,
    },
    /// Largest and smallest torsion among connected graphs on n vertices
    Extremal {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

enum Failure {
    Input(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn load(cli: &Cli) -> Result<Input, Failure> {
    let read = |p: &PathBuf| fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())));
    match (&cli.graph, &cli.complex) {
        (Some(p), _) => Ok(Input::Graph(parse_graph(&read(p)?)?)),
        (_, Some(p)) => Ok(Input::Complex(parse_complex(&read(p)?)?)),
        _ => Err(Failure::Input("this command needs --graph FILE or --complex FILE".into())),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("expected a range a..b, got {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn gen(cli: &Cli, name: &str, params: &[i64], out: &Option<PathBuf>) -> Outcome {
    if name == "list" {
        return Ok(CATALOG.iter().map(|n| format!("{n}\n")).collect());
    }
    let g = generate(&GeneratorSpec { name: name.to_string(), params: params.to_vec(), seed: cli.seed })?;
    let text = write_graph(&g);
    match out {
        Some(p) => {
            fs::write(p, &text).map_err(|e| Failure::Compute(format!("{}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn torsion(cli: &Cli) -> Outcome {
    let input = load(cli)?;
    let cd = build_chain(&input.complex())?;
    let report = torsion_report(&cd.chain)?;
    report.verify()?;
    let parity = parity_tree_products(&cd.chain)?;
    let betti = cd.chain.betti();
    let f = cd.complex.f_vector();
    if !cli.json {
        return Ok(format!(
            "A = {}\nf = {:?}\nbetti = {:?}\n|Det D| = {}\nSDet(L) = {}\n",
            report.a_dirac, f.0, betti.0, report.det_dirac_abs, report.sdet_hodge
        ));
    }
    Ok(pretty(&json!({
        "a": report.a_dirac.to_string(),
        "report": report,
        "f_vector": f,
        "betti": betti,
        "euler_characteristic": f.euler_characteristic(),
        "parity_products": parity,
        "mckean_singer": report.sdet_hodge.to_string(),
    })))
}

fn trees(cli: &Cli) -> Outcome {
    let g = load(cli)?.graph();
    let counts = tree_counts(&g)?;
    let duality = match von_staudt_check(&g, cli.budget) {
        Ok(d) => Some(d),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e.into()),
    };
    if !cli.json {
        let mut s = format!("rooted = {}\nunrooted = {}\n", counts.rooted, counts.unrooted);
        if let Some(d) = &duality {
            s += &format!("dual trees = {}\nduality holds = {}\n", d.dual_trees, d.holds());
        }
        return Ok(s);
    }
    let duality = duality.map(|d| json!({ "holds": d.holds(), "check": d }));
    Ok(pretty(&json!({ "counts": counts, "duality": duality })))
}

fn betti(cli: &Cli) -> Outcome {
    let cd = build_chain(&load(cli)?.complex())?;
    let (f, b) = (cd.complex.f_vector(), cd.chain.betti());
    if !cli.json {
        return Ok(format!("f = {:?}\nbetti = {:?}\neuler = {}\n", f.0, b.0, b.euler_characteristic()));
    }
    Ok(pretty(&json!({ "f_vector": f, "betti": b, "euler_characteristic": b.euler_characteristic() })))
}

fn check(cli: &Cli) -> Outcome {
    let v = classify(&load(cli)?.graph(), cli.budget);
    if !cli.json {
        return Ok(format!(
            "contractible = {:?}\nsphere dimension = {}\nbudget exhausted = {}\n",
            v.contractible,
            v.sphere_dim.map_or("none".into(), |d| d.to_string()),
            v.search_budget_exhausted
        ));
    }
    Ok(pretty(&json!(v)))
}

fn wu(cli: &Cli) -> Outcome {
    let c = load(cli)?.complex();
    let w = wu_chain(&c)?;
    let t = wu_torsion_report(&w)?;
    let fm = f_matrix(&c);
    let omega = wu_characteristic(&c);
    if !cli.json {
        return Ok(format!("f-matrix = {:?}\nomega = {omega}\nA2 = {}\n", fm.0, t.dirac));
    }
    Ok(pretty(&json!({ "f_matrix": fm, "omega": omega, "a2": t.dirac.to_string(), "torsion": t })))
}

fn zeta(cli: &Cli, a: &ZetaArgs) -> Outcome {
    let cd = build_chain(&load(cli)?.complex())?;
    if a.torsion {
        let z = zeta_torsion(&cd.chain)?;
        let exact = torsion_report(&cd.chain)?.a_dirac;
        if !cli.json {
            return Ok(format!("exp(-zeta'(0)) = {}\nA = {exact}\n", sig12(z)));
        }
        return Ok(pretty(&json!({ "zeta_torsion": sig12(z), "a": exact.to_string() })));
    }
    if let Some(s) = a.at {
        if a.im != 0.0 {
            let z = dirac_zeta_complex(&cd.chain, Complex64::new(s, a.im))?;
            return Ok(if cli.json {
                pretty(&json!({ "s": [sig12(s), sig12(a.im)], "zeta": [sig12(z.re), sig12(z.im)] }))
            } else {
                format!("zeta({s}+{}i) = {} + {}i\n", a.im, sig12(z.re), sig12(z.im))
            });
        }
        let z = dirac_zeta(&cd.chain, s)?;
        return Ok(if cli.json {
            pretty(&json!({ "s": sig12(s), "zeta": sig12(z) }))
        } else {
            format!("zeta({s}) = {}\n", sig12(z))
        });
    }
    if a.step <= 0.0 || a.to < a.from {
        return Err(Failure::Input("need --from <= --to and a positive --step".into()));
    }
    let count = ((a.to - a.from) / a.step + 1e-9).floor() as usize + 1;
    let points: Vec<f64> = (0..count).map(|i| a.from + i as f64 * a.step).collect();
    Ok(zeta_csv(&cd.chain, &points)?)
}

fn bary(cli: &Cli, a: &BaryArgs) -> Outcome {
    if let Some(d) = a.operator {
        let op = barycentric_operator(d);
        return Ok(if cli.json { pretty(&json!(matrix_rows(&op.0))) } else { op.0.to_string() });
    }
    let input = load(cli)?;
    match a.limit {
        Some(d) => {
            let lim = barycentric_limit(&input.graph(), d, a.steps)?;
            if !cli.json {
                let ts: Vec<String> = lim.torsions.iter().map(|t| t.to_string()).collect();
                return Ok(format!("torsions = [{}]\nlimit = {}\n", ts.join(", "), sig12(lim.perron_ratio)));
            }
            Ok(pretty(&json!(lim)))
        }
        None => {
            let c = input.complex();
            let f = c.f_vector();
            let op = barycentric_operator(f.0.len().saturating_sub(1));
            let refined: Vec<String> = op.apply(&f.0)?.iter().map(|x| x.to_string()).collect();
            if !cli.json {
                return Ok(format!("f = {:?}\nrefined f = [{}]\n", f.0, refined.join(", ")));
            }
            Ok(pretty(&json!({ "f_vector": f, "refined": refined })))
        }
    }
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

fn matrix(cli: &Cli, kind: &str, k: usize) -> Outcome {
    let input = load(cli)?;
    let m = if kind == "kirchhoff" {
        ExactMatrix::from_rows(&input.graph().kirchhoff())
    } else {
        let cd = build_chain(&input.complex())?;
        match kind {
            "dirac" => cd.chain.dirac(),
            "hodge" => cd.chain.hodge()?,
            "d" => cd.chain.d(k)?.clone(),
            "dirac-block" => cd.chain.dirac_block(k)?,
            "hodge-block" => cd.chain.hodge_block(k)?,
            _ => return Err(Failure::Input(format!("unknown matrix kind {kind:?}"))),
        }
    };
    Ok(if cli.json { pretty(&json!(matrix_rows(&m))) } else { m.to_string() })
}

fn experiment(cli: &Cli, e: &Experiment) -> Outcome {
    let seed = cli.seed.unwrap_or(0);
    match e {
        Experiment::Er { n, p, samples } => {
            let grid = p.split(',').map(parse_rational).collect::<Result<Vec<BigRational>, Error>>()?;
            let zero = BigRational::from_integer(0.into());
            let one = BigRational::from_integer(1.into());
            if grid.iter().any(|p| *p < zero || *p > one) {
                return Err(Failure::Input("probabilities must lie in [0, 1]".into()));
            }
            let rows = er_sweep(*n, &grid, *samples, seed)?;
            Ok(if cli.json { pretty(&json!(rows)) } else { sweep_csv(&rows) })
        }
        Experiment::Sequence { target, n_max } => {
            let t: SequenceTarget = target.parse()?;
            let values = sequence(t, *n_max)?;
            if cli.json {
                let v: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                return Ok(pretty(&json!({ "target": target, "values": v })));
            }
            Ok(std::iter::once("n,a\n".to_string())
                .chain(values.iter().enumerate().map(|(i, a)| format!("{},{a}\n", i + 1)))
                .collect())
        }
        Experiment::Conjecture { target, n, m } => {
            let t: ConjectureTarget = target.parse()?;
            let (dn, dm) = t.default_ranges();
            let ns = n.as_deref().map(range).transpose()?.unwrap_or(dn);
            let ms = m.as_deref().map(range).transpose()?.unwrap_or(dm);
            let cells = conjecture(t, ns, ms)?;
            Ok(if cli.json { pretty(&json!(cells)) } else { conjecture_csv(&cells) })
        }
        Experiment::Extremal { n, samples } => {
            let r = extremal(*n, *samples, seed)?;
            if cli.json {
                return Ok(pretty(&json!(r)));
            }
            let mut s = String::from("role,torsion,edges\n");
            let mut row = |role: &str, c: &torsion_core::experiments::Candidate| {
                let edges: Vec<String> = c.graph.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                s += &format!("{role},{},{}\n", c.torsion, edges.join(" "));
            };
            row("max", &r.max);
            row("min", &r.min);
            if let Some(c) = &r.balanced_bipartite {
                row("balanced_bipartite", c);
            }
            Ok(s)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen { name, params, out } => gen(cli, name, params, out),
        Command::Torsion => torsion(cli),
        Command::Trees => trees(cli),
        Command::Betti => betti(cli),
        Command::Check => check(cli),
        Command::Wu => wu(cli),
        Command::Zeta(a) => zeta(cli, a),
        Command::Bary(a) => bary(cli, a),
        Command::Matrix { kind, k } => matrix(cli, kind, *k),
        Command::Experiment(e) => experiment(cli, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
