//! `tourlab`: command-line front end for the tournament toolkit.
//!
//! Exit codes: 0 success, 1 domain error (bad input data, violated
//! preconditions), 2 usage error, 3 verification failure (a claim found a
//! counterexample; its `.trn` is written next to the working directory).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use tourlab::classify::{classify, BlowupCertificate};
use tourlab::verify::{self, census, run_claim, ClaimConfig, ClaimReport};
use tourlab::{
    blowup_det_formula, determinant, diamond_census, ln_det, make_ln, pfaffian, psi, q_value,
    six_profile, skew_matrix, switch, switching_equivalent_labeled, transitive_blowup, Error,
    Tournament, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "tourlab",
    version,
    about = "Exact tournament determinants, diamonds and switching classes"
)]
struct Cli {
    /// Seed for randomized populations.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for exhaustive sweeps (defaults to all cores).
    #[arg(long, global = true, env = "TOURLAB_THREADS")]
    threads: Option<usize>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Report elapsed wall time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArg {
    /// Path to a `.trn` file.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of the skew-adjacency matrix.
    Det(FileArg),
    /// Pfaffian of the skew-adjacency matrix (even order).
    Pfaffian(FileArg),
    /// Diamond census: delta and optional witnesses.
    Diamonds {
        #[command(flatten)]
        file: FileArg,
        /// List the witnessing 4-subsets.
        #[arg(long)]
        witnesses: bool,
    },
    /// Dominance pattern of a vertex against a transitive subset.
    Psi {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        vertex: usize,
        /// Comma-separated vertex list, e.g. 1,2,3,4,5.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Reverse all arcs between a vertex set and its complement.
    Switch {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a switch set mapping the first tournament onto the second.
    SwitchEquiv { a: PathBuf, b: PathBuf },
    /// Transitive blowup of a base tournament.
    Blowup {
        /// Base `.trn` file.
        base: PathBuf,
        /// Part sizes, one per base vertex, e.g. 2,1,1,1,1,1.
        #[arg(long, value_delimiter = ',')]
        counts: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Determinant of a transitive blowup, from the base alone.
    BlowupDet {
        base: PathBuf,
        #[arg(long, value_delimiter = ',')]
        counts: Vec<usize>,
    },
    /// Build the alternating extension L_n.
    Ln {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// det(L_n) = (n-1)^2 for even n, with internal cross-checks.
    LnDet { n: usize },
    /// The bordered determinant Q_m.
    Q { m: usize },
    /// Level, extremal witness, and blowup certificate.
    Classify {
        #[command(flatten)]
        file: FileArg,
        /// Print the switch set and partition when the level is at most 5.
        #[arg(long)]
        certificate: bool,
    },
    /// (delta, det) of a 6-tournament, checked against the feasible table.
    SixProfile(FileArg),
    /// Replay registered claims (all by default).
    Verify {
        /// A claim id, e.g. lemma-fzt; omit for all claims.
        claim: Option<String>,
        /// Replay every claim (the default when no claim is given).
        #[arg(long)]
        all: bool,
        /// Override the sample count of randomized populations.
        #[arg(long)]
        samples: Option<usize>,
        /// Skip exhaustive sweeps above this order.
        #[arg(long, default_value_t = 7)]
        max_exhaustive: usize,
    },
    /// Frequency table of (det, delta, level) over n-tournaments.
    Census {
        n: usize,
        /// Sample count for n = 8, 9 (n <= 7 is exhaustive).
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
    /// Translate between .trn and a 0/±1 matrix text form.
    Convert {
        #[command(flatten)]
        file: FileArg,
        /// Target form; inferred from the input when omitted.
        #[arg(long, value_parser = ["trn", "matrix"])]
        to: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // Ignore failure: the global pool may already exist in tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let started = Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    }
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &PathBuf) -> Result<Tournament, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::format(format!("cannot read {}: {e}", path.display())))?;
    Tournament::parse_trn(&text)
}

fn emit_tournament(t: &Tournament, out: &Option<PathBuf>, json: bool) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, t.to_trn())
            .map_err(|e| Error::format(format!("cannot write {}: {e}", path.display()))),
        None => {
            if json {
                println!("{}", json!({"n": t.order(), "bits": t.to_bit_string()}));
            } else {
                print!("{}", t.to_trn());
            }
            Ok(())
        }
    }
}

fn vertex_list(set: &VertexSet) -> Vec<usize> {
    set.to_vec()
}

fn csv(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn certificate_json(cert: &BlowupCertificate) -> serde_json::Value {
    json!({
        "base": cert.base_kind.name(),
        "switch_set": vertex_list(&cert.switch_set),
        "parts": cert.parts,
    })
}

fn print_certificate(cert: &BlowupCertificate) {
    println!("certificate:");
    println!("  base: {}", cert.base_kind.name());
    let w = vertex_list(&cert.switch_set);
    println!(
        "  switch-set: {}",
        if w.is_empty() {
            "(empty)".into()
        } else {
            csv(&w)
        }
    );
    for (i, part) in cert.parts.iter().enumerate() {
        println!(
            "  part {}: {}",
            i + 1,
            part.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
}

fn as_i64(v: i128) -> i64 {
    i64::try_from(v).expect("determinants at these orders fit 64 bits")
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Det(f) => {
            let det = determinant(&load(&f.file)?)?;
            if cli.json {
                println!("{}", json!({"det": as_i64(det)}));
            } else {
                println!("{det}");
            }
        }
        Command::Pfaffian(f) => {
            let pf = pfaffian(&load(&f.file)?)?;
            if cli.json {
                println!("{}", json!({"pfaffian": as_i64(pf)}));
            } else {
                println!("{pf}");
            }
        }
        Command::Diamonds { file, witnesses } => {
            let census = diamond_census(&load(&file.file)?)?;
            if cli.json {
                let mut value = json!({"delta": census.delta});
                if *witnesses {
                    value["witnesses"] =
                        json!(census.witnesses.iter().map(vertex_list).collect::<Vec<_>>());
                }
                println!("{value}");
            } else {
                println!("delta: {}", census.delta);
                if *witnesses {
                    for w in &census.witnesses {
                        println!(
                            "{}",
                            vertex_list(w)
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                }
            }
        }
        Command::Psi { file, vertex, set } => {
            let t = load(&file.file)?;
            let x = VertexSet::from_vertices(set.iter().copied());
            let pattern = psi(&t, *vertex, x)?;
            if cli.json {
                println!(
                    "{}",
                    json!({"alphas": pattern.alphas, "blocks": pattern.blocks})
                );
            } else {
                println!("{}", pattern.display());
            }
        }
        Command::Switch { file, set, out } => {
            let t = load(&file.file)?;
            let w = VertexSet::from_vertices(set.iter().copied());
            if !w.is_subset_of(t.full_set()) {
                return Err(Error::argument(format!(
                    "switch set {w:?} is not a subset of 1..={}",
                    t.order()
                )));
            }
            emit_tournament(&switch(&t, w), out, cli.json)?;
        }
        Command::SwitchEquiv { a, b } => {
            let (ta, tb) = (load(a)?, load(b)?);
            match switching_equivalent_labeled(&ta, &tb) {
                Some(w) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({"equivalent": true, "switch_set": vertex_list(&w)})
                        );
                    } else {
                        let vs = vertex_list(&w);
                        println!(
                            "switch-set: {}",
                            if vs.is_empty() {
                                "(empty)".into()
                            } else {
                                csv(&vs)
                            }
                        );
                    }
                }
                None => {
                    if cli.json {
                        println!("{}", json!({"equivalent": false}));
                    } else {
                        println!("not switching equivalent");
                    }
                }
            }
        }
        Command::Blowup { base, counts, out } => {
            let t = transitive_blowup(&load(base)?, counts)?;
            emit_tournament(&t, out, cli.json)?;
        }
        Command::BlowupDet { base, counts } => {
            let det = blowup_det_formula(&load(base)?, counts)?;
            if cli.json {
                println!("{}", json!({"det": as_i64(det)}));
            } else {
                println!("{det}");
            }
        }
        Command::Ln { n, out } => emit_tournament(&make_ln(*n)?, out, cli.json)?,
        Command::LnDet { n } => {
            let det = ln_det(*n)?;
            if cli.json {
                println!("{}", json!({"det": as_i64(det)}));
            } else {
                println!("{det}");
            }
        }
        Command::Q { m } => {
            let v = q_value(*m)?;
            if cli.json {
                println!("{}", json!({"q": as_i64(v)}));
            } else {
                println!("{v}");
            }
        }
        Command::Classify { file, certificate } => {
            let result = classify(&load(&file.file)?)?;
            if cli.json {
                let mut value = json!({
                    "level": result.level,
                    "max_even_det": as_i64(result.max_det),
                    "witness": vertex_list(&result.witness),
                });
                if *certificate {
                    value["certificate"] = match &result.certificate {
                        Some(c) => certificate_json(c),
                        None => serde_json::Value::Null,
                    };
                }
                println!("{value}");
            } else {
                println!("level: {}", result.level);
                println!("max-even-det: {}", result.max_det);
                println!("witness: {}", csv(&vertex_list(&result.witness)));
                if *certificate {
                    match &result.certificate {
                        Some(c) => print_certificate(c),
                        None => println!("certificate: none (level above 5)"),
                    }
                }
            }
        }
        Command::SixProfile(f) => {
            let (delta, det) = six_profile(&load(&f.file)?)?;
            if cli.json {
                println!("{}", json!({"delta": delta, "det": as_i64(det)}));
            } else {
                println!("delta: {delta}");
                println!("det: {det}");
            }
        }
        Command::Verify {
            claim,
            all,
            samples,
            max_exhaustive,
        } => {
            let cfg = ClaimConfig {
                seed: cli.seed,
                samples: *samples,
                max_exhaustive_n: *max_exhaustive,
            };
            let ids: Vec<String> = match (claim, all) {
                (Some(id), _) => vec![id.clone()],
                (None, _) => verify::claim_ids().iter().map(|s| s.to_string()).collect(),
            };
            let mut reports: Vec<ClaimReport> = Vec::new();
            for id in &ids {
                reports.push(run_claim(id, &cfg)?);
            }
            let mut failed = None;
            for r in &reports {
                if !cli.json {
                    let verdict = if r.passed() { "PASS" } else { "FAIL" };
                    println!(
                        "{verdict} {} ({}; {} checked, {} ms)",
                        r.claim_id, r.population, r.population_count, r.elapsed_ms
                    );
                }
                if !r.passed() && failed.is_none() {
                    failed = Some(r.clone());
                }
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            }
            if let Some(r) = failed {
                let path = format!("counterexample-{}.trn", r.claim_id);
                if let Some(cex) = &r.counterexample {
                    fs::write(&path, cex)
                        .map_err(|e| Error::format(format!("cannot write counterexample: {e}")))?;
                    eprintln!("counterexample written to {path}");
                }
                return Ok(ExitCode::from(3));
            }
        }
        Command::Census { n, samples } => {
            let c = census(*n, *samples, cli.seed)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&c).expect("census serializes")
                );
            } else {
                println!(
                    "# n={} population={}{}",
                    c.n,
                    c.population,
                    if c.exhaustive {
                        " (exhaustive)"
                    } else {
                        " (sampled)"
                    }
                );
                println!("{:>5} {:>5} {:>5} {:>10}", "det", "delta", "level", "count");
                for row in &c.rows {
                    println!(
                        "{:>5} {:>5} {:>5} {:>10}",
                        row.det, row.delta, row.level, row.count
                    );
                }
            }
        }
        Command::Convert { file, to } => {
            let text = fs::read_to_string(&file.file)
                .map_err(|e| Error::format(format!("cannot read {}: {e}", file.file.display())))?;
            let looks_like_matrix = text
                .lines()
                .next()
                .is_some_and(|l| l.split_whitespace().count() > 1);
            let target = to
                .clone()
                .unwrap_or_else(|| if looks_like_matrix { "trn" } else { "matrix" }.to_string());
            match target.as_str() {
                "matrix" => {
                    let t = Tournament::parse_trn(&text)?;
                    let s = skew_matrix(&t);
                    for i in 0..t.order() {
                        let row: Vec<String> =
                            (0..t.order()).map(|j| s.entry(i, j).to_string()).collect();
                        println!("{}", row.join(" "));
                    }
                }
                "trn" => {
                    let t = parse_matrix(&text)?;
                    print!("{}", t.to_trn());
                }
                _ => unreachable!("clap restricts the value"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_matrix(text: &str) -> Result<Tournament, Error> {
    let rows: Vec<Vec<i32>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<i32>()
                        .map_err(|_| Error::format(format!("bad matrix entry {tok:?}")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::format("matrix must be square and non-empty"));
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for (i, row) in rows.iter().enumerate() {
        if row[i] != 0 {
            return Err(Error::format("matrix diagonal must be zero"));
        }
        for j in i + 1..n {
            match (row[j], rows[j][i]) {
                (1, -1) => bits.push(true),
                (-1, 1) => bits.push(false),
                _ => {
                    return Err(Error::format(format!(
                        "entries ({},{}) must be opposite signs in {{-1,1}}",
                        i + 1,
                        j + 1
                    )))
                }
            }
        }
    }
    Tournament::from_bits(n, &bits)
}
