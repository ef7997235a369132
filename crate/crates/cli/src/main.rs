use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use clusterw::{
    bwt, clustering_census, clustering_report, inverse_bwt, sturmian_word,
    verify_injectivity, verify_nonsurjectivity, verify_theorem1, ContinuousIet, DiscreteIet,
    ExactReal, InverseResult, KeaneVerdict, OrderedAlphabet, Permutation, VerificationReport,
    Word,
};

/// Burrows-Wheeler clustering words and interval exchange transformations.
#[derive(Parser)]
#[command(name = "clusterw", version, disable_help_subcommand = true)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Comma-separated alphabet tokens, e.g. `a,b,c`. Word arguments and
    /// outputs then use comma-separated tokens instead of digits.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Burrows-Wheeler transform of a word.
    Bwt { word: String },
    /// Antecedents of a word under the transform.
    Unbwt { word: String },
    /// Clustering verdict, permutation and perfectness of a word.
    Cluster { word: String },
    /// Analyze a discrete interval exchange (lengths and permutation).
    Iet {
        /// Comma-separated block lengths, e.g. `4,2,3`.
        lengths: String,
        /// Comma-separated permutation images, e.g. `3,2,1`.
        permutation: String,
        /// Report only minimality.
        #[arg(long)]
        minimal: bool,
        /// Report only the clustering word (requires minimality).
        #[arg(long)]
        word: bool,
        /// Report only the orbit cycle words.
        #[arg(long)]
        orbits: bool,
        /// Report only a non-minimality witness word.
        #[arg(long)]
        witness: bool,
    },
    /// Trajectory of a continuous interval exchange from a starting point.
    Cont {
        /// Comma-separated interval lengths summing to 1, e.g. `4/9,2/9,3/9`
        /// or `1/2,1/2-1/4*sqrt(2),1/4*sqrt(2)` forms.
        alphas: String,
        /// Comma-separated permutation images.
        permutation: String,
        /// Starting point in [0,1).
        start: String,
        /// Number of letters to emit.
        len: usize,
    },
    /// Sturmian coding of a rotation with the given slope.
    Sturmian {
        /// A slope in (0,1), or `golden` for (3-sqrt(5))/2.
        slope: String,
        len: usize,
    },
    /// Search the forward orbits of the cut points for a collision.
    Keane {
        alphas: String,
        permutation: String,
        depth: usize,
    },
    /// Run an exhaustive verification suite.
    Verify {
        /// One of `theorem1`, `injectivity`, `nonsurjectivity`.
        suite: String,
        #[arg(long, default_value_t = 3)]
        r: u8,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// List the clustering conjugacy classes of length N over R letters.
    Census { r: u8, n: usize },
}

struct WordIo {
    alphabet: Option<OrderedAlphabet>,
}

impl WordIo {
    fn parse(&self, s: &str) -> Result<Word, String> {
        match &self.alphabet {
            Some(alpha) => {
                let tokens: Vec<&str> = s.split(',').collect();
                Word::normalize(&tokens, alpha).map_err(|e| e.to_string())
            }
            None => s.parse().map_err(|e: clusterw::Error| e.to_string()),
        }
    }

    fn show(&self, w: &Word) -> String {
        match &self.alphabet {
            Some(alpha) => match w.to_tokens(alpha) {
                Ok(tokens) => tokens.join(","),
                Err(_) => w.to_string(),
            },
            None => w.to_string(),
        }
    }
}

fn parse_lengths(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad length {p:?}: {e}")))
        .collect()
}

fn parse_alphas(s: &str) -> Result<Vec<ExactReal>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<ExactReal>().map_err(|e| e.to_string()))
        .collect()
}

fn parse_permutation(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: clusterw::Error| e.to_string())
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let io = WordIo {
        alphabet: match &cli.alphabet {
            Some(spec) => Some(
                OrderedAlphabet::new(spec.split(',')).map_err(|e| e.to_string())?,
            ),
            None => None,
        },
    };

    match &cli.command {
        Command::Bwt { word } => {
            let w = io.parse(word)?;
            let image = bwt(&w);
            if cli.json {
                emit(json!({ "input": io.show(&w), "bwt": io.show(&image) }));
            } else {
                println!("{}", io.show(&image));
            }
        }
        Command::Unbwt { word } => {
            let w = io.parse(word)?;
            let result = inverse_bwt(&w);
            let cycles: Vec<String> = result.cycle_words().iter().map(|u| io.show(u)).collect();
            match &result {
                InverseResult::PrimitiveAntecedent { antecedent, .. } => {
                    if cli.json {
                        emit(json!({
                            "input": io.show(&w),
                            "status": "primitive",
                            "antecedent": io.show(antecedent),
                            "cycle_words": cycles,
                        }));
                    } else {
                        println!("primitive: {}", io.show(antecedent));
                    }
                }
                InverseResult::NonPrimitiveAntecedent { root, power, .. } => {
                    if cli.json {
                        emit(json!({
                            "input": io.show(&w),
                            "status": "non-primitive",
                            "root": io.show(root),
                            "power": power,
                            "cycle_words": cycles,
                        }));
                    } else {
                        println!("non-primitive: ({})^{power}", io.show(root));
                    }
                }
                InverseResult::NoAntecedent { .. } => {
                    if cli.json {
                        emit(json!({
                            "input": io.show(&w),
                            "status": "no-antecedent",
                            "cycle_words": cycles,
                        }));
                    } else {
                        println!("no antecedent");
                    }
                }
            }
        }
        Command::Cluster { word } => {
            let w = io.parse(word)?;
            let report = clustering_report(&w);
            if cli.json {
                emit(json!({
                    "input": io.show(&w),
                    "clustering": report.is_clustering,
                    "permutation": report.permutation.as_ref().map(|p| p.to_string()),
                    "perfect": report.perfect,
                    "bwt": bwt(&w).to_string(),
                    "occurring_letters": report.occurring_letters,
                }));
            } else if report.is_clustering {
                let pi = report.permutation.unwrap();
                let kind = if report.perfect { "perfect" } else { "not perfect" };
                println!("clustering, pi={pi}, {kind}");
            } else {
                println!("not clustering");
            }
        }
        Command::Iet { lengths, permutation, minimal, word, orbits, witness } => {
            let t = DiscreteIet::new(parse_lengths(lengths)?, parse_permutation(permutation)?)
                .map_err(|e| e.to_string())?;
            return run_iet(cli, &io, &t, *minimal, *word, *orbits, *witness);
        }
        Command::Cont { alphas, permutation, start, len } => {
            let t = ContinuousIet::new(parse_alphas(alphas)?, parse_permutation(permutation)?)
                .map_err(|e| e.to_string())?;
            let x: ExactReal = start.parse().map_err(|e: clusterw::Error| e.to_string())?;
            let coding = t.trajectory_word(&x, *len).map_err(|e| e.to_string())?;
            if cli.json {
                emit(json!({ "start": start, "trajectory": io.show(&coding) }));
            } else {
                println!("{}", io.show(&coding));
            }
        }
        Command::Sturmian { slope, len } => {
            let value = if slope == "golden" {
                clusterw::golden_slope()
            } else {
                slope.parse().map_err(|e: clusterw::Error| e.to_string())?
            };
            let coding = sturmian_word(&value, *len).map_err(|e| e.to_string())?;
            if cli.json {
                emit(json!({ "slope": value.to_string(), "word": io.show(&coding) }));
            } else {
                println!("{}", io.show(&coding));
            }
        }
        Command::Keane { alphas, permutation, depth } => {
            let t = ContinuousIet::new(parse_alphas(alphas)?, parse_permutation(permutation)?)
                .map_err(|e| e.to_string())?;
            let verdict = t.keane_check(*depth).map_err(|e| e.to_string())?;
            match verdict {
                KeaneVerdict::CollisionFound { from, to, steps } => {
                    if cli.json {
                        emit(json!({
                            "collision": true,
                            "from_cut": from,
                            "to_cut": to,
                            "steps": steps,
                        }));
                    } else {
                        println!("collision: T^{steps} gamma_{from} = gamma_{to}");
                    }
                }
                KeaneVerdict::NoCollisionUpTo(d) => {
                    if cli.json {
                        emit(json!({ "collision": false, "depth": d }));
                    } else {
                        println!("no collision up to depth {d}");
                    }
                }
            }
        }
        Command::Verify { suite, r, nmax } => {
            let report: VerificationReport = match suite.as_str() {
                "theorem1" => verify_theorem1(*r, *nmax),
                "injectivity" => verify_injectivity(*r, *nmax),
                "nonsurjectivity" => verify_nonsurjectivity(*r, *nmax),
                other => return Err(format!("unknown suite {other:?}")),
            };
            if cli.json {
                emit(serde_json::to_value(&report).expect("report serializes"));
            } else {
                println!("{}", report.render_text());
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Census { r, n } => {
            let classes = clustering_census(*r, *n).map_err(|e| e.to_string())?;
            if cli.json {
                let entries: Vec<_> = classes
                    .iter()
                    .map(|(w, pi)| json!({ "word": io.show(w), "permutation": pi.to_string() }))
                    .collect();
                emit(json!({ "r": r, "n": n, "classes": entries }));
            } else {
                for (w, pi) in &classes {
                    println!("{}\tpi={pi}", io.show(w));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_iet(
    cli: &Cli,
    io: &WordIo,
    t: &DiscreteIet,
    minimal: bool,
    word: bool,
    orbits: bool,
    witness: bool,
) -> Result<ExitCode, String> {
    if [minimal, word, orbits, witness].iter().filter(|&&f| f).count() > 1 {
        return Err("choose at most one of --minimal, --word, --orbits, --witness".into());
    }
    if minimal {
        let is_minimal = t.is_minimal();
        if cli.json {
            emit(json!({ "minimal": is_minimal }));
        } else {
            println!("{}", if is_minimal { "minimal" } else { "non-minimal" });
        }
    } else if word {
        match t.clustering_word() {
            Some(w) => {
                if cli.json {
                    emit(json!({ "word": io.show(&w) }));
                } else {
                    println!("{}", io.show(&w));
                }
            }
            None => return Err("not minimal: no clustering word".into()),
        }
    } else if orbits {
        let decomposition = t.orbit_decomposition();
        if cli.json {
            let words: Vec<String> = decomposition.words.iter().map(|w| io.show(w)).collect();
            emit(json!({ "cycles": decomposition.cycles, "words": words }));
        } else {
            for (cycle, w) in decomposition.cycles.iter().zip(&decomposition.words) {
                let points: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
                println!("{}\t({})", io.show(w), points.join(" "));
            }
        }
    } else if witness {
        match t.nonminimality_witness() {
            Some(w) => {
                if cli.json {
                    emit(json!({ "witness": io.show(&w) }));
                } else {
                    println!("{}", io.show(&w));
                }
            }
            None => return Err("minimal: no witness".into()),
        }
    } else {
        let is_minimal = t.is_minimal();
        let clustering = t.clustering_word();
        if cli.json {
            emit(json!({
                "lengths": t.lengths(),
                "permutation": t.permutation().to_string(),
                "offsets": t.offsets(),
                "minimal": is_minimal,
                "word": clustering.as_ref().map(|w| io.show(w)),
            }));
        } else {
            let offsets: Vec<String> = t.offsets().iter().map(|s| s.to_string()).collect();
            println!("offsets: {}", offsets.join(","));
            println!("{}", if is_minimal { "minimal" } else { "non-minimal" });
            if let Some(w) = clustering {
                println!("word: {}", io.show(&w));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
