use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use superchar::charlib::{self, Mode};
use superchar::diagrams::{bar_reduce, tail_length};
use superchar::{Algebra, Block, Diagram, Family, Oracle, Weight};

mod verify;

#[derive(Parser)]
#[command(name = "superchar", version, about = "Weight diagrams, K/D matrices and characters of osp(m,2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight diagram, atypicality and bar reduction of a weight.
    Diagram(WeightArgs),
    /// Members, edges and matrices of the block below a weight.
    Block(WeightArgs),
    /// K matrix of the block (entry (i,j) = K^{member j, member i}).
    Kmatrix(WeightArgs),
    /// D matrix of the block, the inverse of K.
    Dmatrix(WeightArgs),
    /// Ch(L_λ) as a combination of Euler characteristics or as a Laurent polynomial.
    Character {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Expr)]
        mode: ModeArg,
    },
    /// K^{λ,μ}(z) at the first parabolic level from the recursion.
    Oracle {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        weight_is_lambda: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Randomized agreement checks between the independent evaluators.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_position: usize,
        #[arg(long, default_value_t = 40)]
        cases: usize,
    },
    /// The block's move graph in DOT.
    ExportDot(WeightArgs),
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    algebra: Algebra,
    /// "a1,...|b1,..." as λ+ρ, halves written 3/2 or 1.5
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// read --weight as λ instead of λ+ρ
    #[arg(long)]
    weight_is_lambda: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Expr,
    Laurent,
}

fn parse_weight(alg: &Algebra, s: &str, is_lambda: bool) -> superchar::Result<Weight> {
    let w = if is_lambda { alg.parse_lambda(s)? } else { alg.parse_weight(s)? };
    alg.require_dominant(&w)?;
    Ok(w)
}

impl WeightArgs {
    fn weight(&self) -> superchar::Result<Weight> {
        parse_weight(&self.algebra, &self.weight, self.weight_is_lambda)
    }

    /// The block of the bar reduction, with σ applied to negative
    /// osp(2k,2k) weights.
    fn block(&self) -> superchar::Result<(Block, usize)> {
        let (ralg, rw) = bar_reduce(&self.algebra, &self.weight()?)?;
        let rw = if ralg.family == Family::OspEven && rw.a.last().is_some_and(|&x| x < 0) {
            ralg.sigma_flip(&rw)?
        } else {
            rw
        };
        Block::of_weight(&ralg, &rw)
    }
}

fn emit<T: Serialize>(format: Format, text: impl FnOnce() -> String, value: &T) -> superchar::Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(value).map_err(|e| superchar::Error::Internal(e.to_string()))?,
        _ => text(),
    })
}

fn run(cmd: Command) -> superchar::Result<String> {
    match cmd {
        Command::Diagram(a) => {
            let w = a.weight()?;
            let f = Diagram::of_weight(&a.algebra, &w)?;
            let (ralg, rw) = bar_reduce(&a.algebra, &w)?;
            let rf = Diagram::of_weight(&ralg, &rw)?;
            let value = json!({
                "algebra": a.algebra.to_string(),
                "weight": w.to_string(),
                "diagram": f.to_string(),
                "atypicality": f.total_crosses(),
                "tail_length": tail_length(&a.algebra, &w)?,
                "reduced": { "algebra": ralg.to_string(), "weight": rw.to_string(), "diagram": rf.to_string() },
            });
            emit(a.format, || f.to_string(), &value)
        }
        Command::Block(a) => {
            let (b, _) = a.block()?;
            let report = b.report()?;
            emit(
                a.format,
                || {
                    let mut s = format!("{}\n", report.algebra);
                    for (i, (w, f)) in report.order.iter().zip(&b.members).enumerate() {
                        s += &format!("{i}: {w}  {f}\n");
                    }
                    for e in &report.edges {
                        s += &format!("{} -> {} {}\n", e.from, e.to, e.label);
                    }
                    s += &format!("K\n{}D\n{}", superchar::IntMatrix::from_rows(report.k.clone()), superchar::IntMatrix::from_rows(report.d.clone()));
                    s.trim_end().to_string()
                },
                &report,
            )
        }
        Command::Kmatrix(a) => {
            let k = a.block()?.0.k_matrix();
            emit(a.format, || k.to_string().trim_end().to_string(), &k.rows)
        }
        Command::Dmatrix(a) => {
            let d = a.block()?.0.d_matrix()?;
            emit(a.format, || d.to_string().trim_end().to_string(), &d.rows)
        }
        Command::Character { w: a, mode } => {
            let w = a.weight()?;
            let mode = match mode {
                ModeArg::Expr => Mode::Expr,
                ModeArg::Laurent => Mode::Laurent,
            };
            let ch = charlib::simple_character(&a.algebra, &w, mode)?;
            let value = match &ch {
                charlib::Character::Expr(e) => json!({
                    "terms": e.terms.iter().map(|(c, w)| json!({"coefficient": c, "weight": w.to_string()})).collect::<Vec<_>>()
                }),
                charlib::Character::Laurent(p) => json!({
                    "dimension": p.dimension(),
                    "terms": p.terms.iter().rev().map(|(e, c)| json!({"exponent": e, "coefficient": c})).collect::<Vec<_>>()
                }),
            };
            emit(a.format, || ch.to_string(), &value)
        }
        Command::Oracle { algebra, lambda, mu, weight_is_lambda, format } => {
            let l = parse_weight(&algebra, &lambda, weight_is_lambda)?;
            let m = parse_weight(&algebra, &mu, weight_is_lambda)?;
            let p = Oracle::new().k_poly(&algebra, &l, &m)?;
            emit(format, || p.to_string(), &json!({ "polynomial": p.to_string(), "coefficients": p.coeffs() }))
        }
        Command::Verify { seed, max_position, cases } => verify::run(seed, max_position, cases),
        Command::ExportDot(a) => {
            let (b, _) = a.block()?;
            match a.format {
                Format::Json => emit(a.format, String::new, &b.report()?),
                _ => Ok(b.to_dot()?.trim_end().to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            // a closed pipe (`| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("superchar: {e}");
            ExitCode::FAILURE
        }
    }
}
