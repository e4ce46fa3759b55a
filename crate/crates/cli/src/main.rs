use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cudlab::bijections::*;
use cudlab::matchings::render_arc_diagram;
use cudlab::oracle::verify::verify_all;
use cudlab::oracle::{distribution_capped, enumerate_capped, Caps};
use cudlab::series::catalog::{catalog_with_cap, CatalogSeries, DEFAULT_ORDER_CAP};
use cudlab::series::format_rational;
use cudlab::series::formulas::{expected_ud_cycles, no_ud_cycles_ratio, to_f64};
use cudlab::stats::stats;
use cudlab::{CudError, CycleDecomposition, Family, MinMaxPattern, Permutation, SequenceId, Stat};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cudlab", version, about = "Up-down and cycle-up-down permutations: sequences, bijections, verification")]
struct Cli {
    /// Output format; csv applies to distribution tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for Monte Carlo sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest n for exhaustive enumeration.
    #[arg(long, global = true, env = "CUDLAB_CAP")]
    cap: Option<usize>,

    /// Largest truncation order for series.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms 0..=n (or 1..=n) of a catalog sequence.
    Seq {
        id: String,
        #[arg(long)]
        n: usize,
    },
    /// List a family, or tabulate statistics over it.
    Enumerate {
        family: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated statistics, e.g. `lrm,st`.
        #[arg(long)]
        stats: Option<String>,
    },
    /// Apply a bijection or helper map to a permutation.
    Map {
        /// g, g-inv, f, f-inv, phi, phi-inv, jbij, jbij-inv, h, ell, ell-inv,
        /// foata, foata-inv, rotate, rotate-inv, switch, cycles, stats
        name: String,
        /// Space-separated one-line word, or cycle notation starting with `(`.
        input: String,
        /// Min-max pattern for `h`.
        #[arg(long, default_value = "min,max,...")]
        pattern: String,
        /// Bit word for `ell`.
        #[arg(long)]
        bits: Option<String>,
        /// Rotation index for `rotate`.
        #[arg(long)]
        index: Option<usize>,
        /// Order cycles by increasing first entry in `foata`.
        #[arg(long)]
        ascending: bool,
    },
    /// Run every identity against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Expected values over uniform random permutations of [n].
    Expect {
        /// `ud-cycles` (mean number of up-down cycles) or `no-ud-cycles`
        /// (probability of none).
        quantity: String,
        #[arg(long)]
        n: usize,
        /// Exact rational value.
        #[arg(long)]
        exact: bool,
        /// Exact value as a float.
        #[arg(long)]
        float: bool,
        /// Monte Carlo sample count, used when neither --exact nor --float.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Arc diagram of an even-cycle CUD permutation as SVG.
    Diagram { input: String },
}

enum Failure {
    Error(CudError),
    Verify(String),
}

impl From<CudError> for Failure {
    fn from(e: CudError) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<String, Failure>;

fn bad(msg: impl Into<String>) -> Failure {
    Failure::Error(CudError::Domain(msg.into()))
}

fn caps(cli: &Cli) -> Result<Caps, Failure> {
    match cli.cap {
        Some(0) => Err(bad("--cap must be positive")),
        Some(c) => Ok(Caps::uniform(c)),
        None => Ok(Caps::default()),
    }
}

fn seq(cli: &Cli, id: &str, n: usize) -> Outcome {
    let id: SequenceId = id.parse()?;
    let series = catalog_with_cap(id, n, cli.order_cap)?;
    let start = id.first_index().min(n);
    let terms: Vec<String> = match &series {
        CatalogSeries::Plain(s) => s.egf_terms().iter().map(format_rational).collect(),
        CatalogSeries::Marked { series, .. } => {
            series.egf_terms().iter().map(|p| p.to_string()).collect()
        }
    };
    let terms = &terms[start..=n];
    Ok(match cli.format {
        Format::Json => {
            let values: Vec<_> = terms.iter().map(|t| t.parse::<i64>().map(|v| json!(v)).unwrap_or(json!(t))).collect();
            json!({ "id": id.name(), "formula": id.formula(), "first_index": start, "terms": values }).to_string() + "\n"
        }
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (i, t) in terms.iter().enumerate() {
                writeln!(s, "{},\"{t}\"", start + i).unwrap();
            }
            s
        }
        Format::Text if id.is_marked() => {
            terms.iter().enumerate().map(|(i, t)| format!("{}\t{t}\n", start + i)).collect()
        }
        Format::Text => terms.join(" ") + "\n",
    })
}

fn enumerate(cli: &Cli, family: &str, n: usize, stat_list: Option<&str>) -> Outcome {
    let family: Family = family.parse()?;
    let caps = caps(cli)?;
    if let Some(list) = stat_list {
        let table = distribution_capped(family, n, &Stat::parse_list(list)?, &caps)?;
        return Ok(match cli.format {
            Format::Json => table.to_json().to_string() + "\n",
            Format::Csv => table.to_csv(),
            Format::Text => {
                let mut s = String::new();
                for (key, count) in &table.rows {
                    let cells: Vec<String> = table.stats.iter().zip(key).map(|(st, v)| format!("{}={v}", st.name())).collect();
                    writeln!(s, "{}: {count}", cells.join(" ")).unwrap();
                }
                s
            }
        });
    }
    let perms = enumerate_capped(family, n, &caps)?;
    Ok(match cli.format {
        Format::Json => {
            let rows: Vec<_> = perms
                .iter()
                .map(|p| json!({ "word": p.word(), "cycles": p.to_cycles().to_string() }))
                .collect();
            serde_json::Value::Array(rows).to_string() + "\n"
        }
        Format::Csv => {
            let mut s = String::from("word,cycles\n");
            for p in &perms {
                writeln!(s, "{p},\"{}\"", p.to_cycles()).unwrap();
            }
            s
        }
        Format::Text => perms.iter().map(|p| format!("{p}\n")).collect(),
    })
}

fn cycles(input: &str) -> Result<CycleDecomposition, Failure> {
    Ok(Permutation::parse_any(input)?.to_cycles())
}

#[allow(clippy::too_many_arguments)]
fn map(cli: &Cli, name: &str, input: &str, pattern: &str, bits: Option<&str>, index: Option<usize>, ascending: bool) -> Outcome {
    let word = || Permutation::parse_any(input);
    let out = match name {
        "g" => g_even(&word()?)?.to_string(),
        "g-inv" => g_even_inverse(&cycles(input)?)?.to_string(),
        "f" => f_odd(&word()?)?.to_string(),
        "f-inv" => f_odd_inverse(&cycles(input)?)?.to_string(),
        "phi" => phi(&word()?)?.to_string(),
        "phi-inv" => phi_inverse(&cycles(input)?)?.to_string(),
        "jbij" => jbij(&word()?)?.to_string(),
        "jbij-inv" => jbij_inverse(&cycles(input)?)?.to_string(),
        "h" => h_map(&word()?, &pattern.parse::<MinMaxPattern>()?).to_string(),
        "ell" => {
            let bits = bits.ok_or_else(|| bad("`ell` needs --bits"))?;
            ell_map(&word()?, &bits.parse()?)?.to_string()
        }
        "ell-inv" => {
            let (p, s) = ell_inverse(&word()?)?;
            format!("{p} / {s}")
        }
        "foata" => foata_word(&cycles(input)?, !ascending).to_string(),
        "foata-inv" => foata_cycles(&word()?).to_string(),
        "rotate" => {
            let i = index.ok_or_else(|| bad("`rotate` needs --index"))?;
            rotate_ud(&word()?, i)?.to_string()
        }
        "rotate-inv" => {
            let (p, i) = rotate_ud_inverse(&word()?)?;
            format!("{p} / {i}")
        }
        "switch" => word()?.switch().to_string(),
        "cycles" => word()?.to_cycles().to_string(),
        "stats" => {
            let v = stats(&word()?);
            let list: Vec<String> = Stat::ALL.iter().map(|s| format!("{}={}", s.name(), s.of(&v))).collect();
            list.join(" ")
        }
        other => return Err(Failure::Error(CudError::UnknownName(other.to_string()))),
    };
    Ok(match cli.format {
        Format::Json => json!({ "map": name, "input": input, "output": out }).to_string() + "\n",
        _ => out + "\n",
    })
}

fn verify(cli: &Cli, n: usize, as_json: bool) -> Outcome {
    let report = verify_all(n)?;
    let text = if as_json || cli.format == Format::Json {
        serde_json::to_string_pretty(&report.to_json()).unwrap() + "\n"
    } else {
        report.to_text()
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verify(text))
    }
}

fn expect(cli: &Cli, quantity: &str, n: usize, exact: bool, float: bool, samples: u64) -> Outcome {
    let value = match quantity {
        "ud-cycles" => expected_ud_cycles(n),
        "no-ud-cycles" => no_ud_cycles_ratio(n),
        other => return Err(Failure::Error(CudError::UnknownName(other.to_string()))),
    };
    if exact || float {
        let f = to_f64(&value);
        let r = format_rational(&value);
        return Ok(match cli.format {
            Format::Json => json!({ "quantity": quantity, "n": n, "exact": r, "float": f }).to_string() + "\n",
            _ if !exact => format!("{f}\n"),
            _ => format!("{r} {f}\n"),
        });
    }
    if samples < 2 {
        return Err(bad("Monte Carlo needs at least 2 samples"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let (mut sum, mut sum_sq) = (0f64, 0f64);
    for _ in 0..samples {
        word.shuffle(&mut rng);
        let ud = stats(&Permutation::new(word.clone())?).ud;
        let x = match quantity {
            "ud-cycles" => ud as f64,
            _ => f64::from(u8::from(ud == 0)),
        };
        sum += x;
        sum_sq += x * x;
    }
    let m = samples as f64;
    let mean = sum / m;
    let stderr = ((sum_sq - m * mean * mean) / (m - 1.0)).max(0.0).sqrt() / m.sqrt();
    Ok(match cli.format {
        Format::Json => json!({
            "quantity": quantity, "n": n, "samples": samples, "seed": cli.seed,
            "estimate": mean, "stderr": stderr,
        })
        .to_string()
            + "\n",
        _ => format!("{mean:.6} ± {stderr:.6} ({samples} samples, seed {})\n", cli.seed),
    })
}

fn diagram(input: &str) -> Outcome {
    Ok(render_arc_diagram(&Permutation::parse_any(input)?)?)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Seq { id, n } => seq(cli, id, *n),
        Command::Enumerate { family, n, stats } => enumerate(cli, family, *n, stats.as_deref()),
        Command::Map { name, input, pattern, bits, index, ascending } => {
            map(cli, name, input, pattern, bits.as_deref(), *index, *ascending)
        }
        Command::Verify { n, json } => verify(cli, *n, *json),
        Command::Expect { quantity, n, exact, float, samples } => expect(cli, quantity, *n, *exact, *float, *samples),
        Command::Diagram { input } => diagram(input),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CudError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CudError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Verify(text)) => (text, 1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            let code = if matches!(e, CudError::CapExceeded { .. }) { 3 } else { 2 };
            return ExitCode::from(code);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
