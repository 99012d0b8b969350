//! `nakajima`: crystal graphs, membership tests and tableau maps for `sl_{n+1}`.
//!
//! Exit codes: 0 success or member, 1 non-member or failed check,
//! 2 parse or configuration error, 3 node limit exceeded.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nakajima_core::correspondence::{phi_map, psi, psi_inverse, varphi_inverse};
use nakajima_core::membership::{is_member, x_factorize};
use nakajima_core::verify::{fuzz_statistics, test_matrix, verify};
use nakajima_core::{
    generate, CartanDatum, Crystal, CrystalGraph, Error, Execution, GenerateOptions, Monomial,
    MonomialCrystal, Orientation, Tableau, TableauCrystal, Weight,
};

#[derive(Parser)]
#[command(
    name = "nakajima",
    version,
    about = "Crystal bases of sl(n+1) via monomials and tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Rank n of sl(n+1).
    #[arg(long)]
    rank: usize,
    /// Dominant highest weight as comma-separated coefficients a_1,...,a_n.
    #[arg(long)]
    weight: Option<String>,
    /// Stop generation after this many nodes.
    #[arg(long, env = "CRYSTAL_MAX_NODES", default_value_t = 1_000_000)]
    max_nodes: usize,
    /// Disable data-parallel evaluation.
    #[arg(long)]
    sequential: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum Model {
    Monomial,
    Tableau,
    ReverseTableau,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Ascii,
}

#[derive(Copy, Clone, ValueEnum)]
enum Target {
    Psi,
    Phi,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the crystal graph of the highest weight element.
    Graph {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "monomial")]
        model: Model,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Highest weight monomial to start from (monomial model only).
        #[arg(long)]
        seed: Option<String>,
    },
    /// Test whether a monomial lies in the component of the given weight.
    Member {
        #[command(flatten)]
        common: Common,
        monomial: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Map a member to its reverse tableau (psi) or tableau (phi).
    Map {
        #[command(flatten)]
        common: Common,
        /// A monomial, or tableau JSON with --inverse.
        input: String,
        #[arg(long, value_enum, default_value = "phi")]
        target: Target,
        /// Map a tableau back to its monomial.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Weyl dimension of the irreducible module.
    Dim {
        #[command(flatten)]
        common: Common,
    },
    /// Run the invariant suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run the whole built-in weight matrix instead of --weight.
        #[arg(long)]
        all: bool,
        /// Also fuzz this many random monomials.
        #[arg(long, default_value_t = 0)]
        fuzz: usize,
        #[arg(long, default_value_t = 1)]
        fuzz_seed: u64,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NodeLimit { .. } => 3,
            Error::Range { .. } | Error::Domain(_) | Error::Parse { .. } => 2,
            Error::NotRepresentable(_) | Error::Iso(_) | Error::Internal(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn config_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<(String, u8), Failure>;

impl Common {
    fn cartan(&self) -> Result<CartanDatum, Failure> {
        Ok(CartanDatum::new(self.rank)?)
    }

    fn weight(&self) -> Result<Weight, Failure> {
        let text = self
            .weight
            .as_deref()
            .ok_or_else(|| config_error("--weight is required"))?;
        let lambda: Weight = text.parse()?;
        self.cartan()?.check_weight(&lambda)?;
        if !lambda.is_dominant() {
            return Err(config_error(format!("weight {lambda} is not dominant")));
        }
        Ok(lambda)
    }

    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }

    fn options(&self) -> Result<GenerateOptions, Failure> {
        if self.max_nodes == 0 {
            return Err(config_error("--max-nodes must be at least 1"));
        }
        Ok(GenerateOptions {
            max_nodes: self.max_nodes,
            execution: self.execution(),
        })
    }
}

fn render_graph<E>(g: &CrystalGraph<E>, format: Format) -> String
where
    E: Clone + Eq + std::hash::Hash + std::fmt::Display,
{
    match format {
        Format::Dot => g.to_dot(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&g.to_json()).expect("graph serializes");
            s.push('\n');
            s
        }
        Format::Ascii => {
            let mut s = String::new();
            writeln!(s, "nodes: {}", g.len()).unwrap();
            for (id, b) in g.nodes().iter().enumerate() {
                writeln!(s, "  {id:>4}  {b}  wt ({})", g.weight_of(id)).unwrap();
            }
            writeln!(s, "edges: {}", g.edges().len()).unwrap();
            for e in g.edges() {
                writeln!(s, "  {:>4} --{}--> {}", e.from, e.color, e.to).unwrap();
            }
            s
        }
    }
}

fn cmd_graph(common: &Common, model: Model, format: Format, seed: Option<&str>) -> Outcome {
    let lambda = common.weight()?;
    let opts = common.options()?;
    let out = match model {
        Model::Monomial => {
            let c = MonomialCrystal::new(common.rank)?;
            let start = match seed {
                Some(text) => {
                    let m = c.parse(text)?;
                    if c.weight(&m) != lambda {
                        return Err(config_error(format!(
                            "seed {m} does not have weight {lambda}"
                        )));
                    }
                    m
                }
                None => c.highest_weight_monomial(&lambda)?,
            };
            render_graph(&generate(&c, start, opts)?, format)
        }
        Model::Tableau | Model::ReverseTableau => {
            if seed.is_some() {
                return Err(config_error("--seed applies to the monomial model only"));
            }
            let orientation = match model {
                Model::Tableau => Orientation::Standard,
                _ => Orientation::Reverse,
            };
            let c = TableauCrystal::new(common.rank, orientation);
            let g = generate(&c, c.highest(&lambda)?, opts)?;
            if format == Format::Ascii {
                let mut s = render_graph(&g, format);
                for (id, t) in g.nodes().iter().enumerate() {
                    writeln!(s, "\nnode {id}:").unwrap();
                    s.push_str(&t.render_ascii());
                }
                s
            } else {
                render_graph(&g, format)
            }
        }
    };
    Ok((out, 0))
}

fn cmd_member(common: &Common, text: &str, format: Format) -> Outcome {
    let lambda = common.weight()?;
    let m = Monomial::parse(text, common.rank)?;
    if !is_member(&m, &lambda)? {
        return Ok((format!("{m} is not in the component of ({lambda})\n"), 1));
    }
    let x = x_factorize(&m, common.rank)?;
    let out = match format {
        Format::Json => serde_json::to_string(&x).expect("grid serializes") + "\n",
        _ => format!("{m} is in the component of ({lambda})\nX exponents (rows i = 1..n+1, columns j = 0..n-1):\n{x}"),
    };
    Ok((out, 0))
}

fn render_tableau(t: &Tableau, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(t).expect("tableau serializes") + "\n",
        _ => t.render_ascii(),
    }
}

fn cmd_map(common: &Common, input: &str, target: Target, inverse: bool, format: Format) -> Outcome {
    let rank = common.rank;
    common.cartan()?;
    if inverse {
        let t: Tableau = serde_json::from_str(input)
            .map_err(|e| config_error(format!("invalid tableau JSON: {e}")))?;
        let m = match target {
            Target::Psi => psi_inverse(&t, rank)?,
            Target::Phi => psi_inverse(&varphi_inverse(&t, rank)?, rank)?,
        };
        let out = match format {
            Format::Json => serde_json::to_string(&m).expect("monomial serializes") + "\n",
            _ => format!("{m}\n"),
        };
        return Ok((out, 0));
    }
    let lambda = common.weight()?;
    let m = Monomial::parse(input, rank)?;
    if !is_member(&m, &lambda)? {
        return Ok((format!("{m} is not in the component of ({lambda})\n"), 1));
    }
    let t = match target {
        Target::Psi => psi(&m, &lambda)?,
        Target::Phi => phi_map(&m, &lambda)?,
    };
    Ok((render_tableau(&t, format), 0))
}

fn cmd_dim(common: &Common) -> Outcome {
    let lambda = common.weight()?;
    Ok((format!("{}\n", common.cartan()?.weyl_dim(&lambda)?), 0))
}

fn cmd_verify(common: &Common, all: bool, fuzz: usize, fuzz_seed: u64) -> Outcome {
    let weights = if all {
        test_matrix()
    } else {
        vec![common.weight()?]
    };
    let exec = common.execution();
    let mut out = String::new();
    let mut ok = true;
    for lambda in &weights {
        let report = verify(lambda, exec)?;
        ok &= report.passed();
        write!(out, "{report}").unwrap();
    }
    if fuzz > 0 {
        let f = fuzz_statistics(fuzz, fuzz_seed, exec);
        ok &= f.failures == 0;
        let tag = if f.failures == 0 { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "[{tag}] fuzzed statistics      checked={} failures={}",
            f.checked, f.failures
        )
        .unwrap();
        if let Some(msg) = f.first_failure {
            writeln!(out, "  first: {msg}").unwrap();
        }
    }
    writeln!(
        out,
        "{}",
        if ok {
            "all checks passed"
        } else {
            "some checks FAILED"
        }
    )
    .unwrap();
    Ok((out, if ok { 0 } else { 1 }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Graph {
            common,
            model,
            format,
            seed,
        } => cmd_graph(common, *model, *format, seed.as_deref()),
        Command::Member {
            common,
            monomial,
            format,
        } => cmd_member(common, monomial, *format),
        Command::Map {
            common,
            input,
            target,
            inverse,
            format,
        } => cmd_map(common, input, *target, *inverse, *format),
        Command::Dim { common } => cmd_dim(common),
        Command::Verify {
            common,
            all,
            fuzz,
            fuzz_seed,
        } => cmd_verify(common, *all, *fuzz, *fuzz_seed),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
