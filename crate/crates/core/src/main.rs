use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use weylpop::cvmod::{cv_dim, dim_status, fusion_dim, verify_filtration};
use weylpop::partitions::{lemma_bound, minimal_relations, CVIndex, Partition};
use weylpop::qalgebra::GradedCharacter;
use weylpop::superpop::{enumerate_superpops, superpop_to_tuple, superpop_word, word_weight_grade};
use weylpop::verify::{self, VerifyConfig};
use weylpop::weylchar::{character_closed, character_from_superpops, character_from_tuples};
use weylpop::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;
const EXIT_UNCOVERED: u8 = 4;

/// Default ceiling on `n` for enumeration commands (4^n objects).
const N_CAP: u32 = 10;

#[derive(Parser)]
#[command(name = "weylpop", version, about = "Super POPs, graded Weyl characters and CV-module dimensions for sl(1|2)[t]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every super POP with its basis tuple, word, weight and grade.
    Superpops {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Allow n above the default cap.
        #[arg(long)]
        force: bool,
    },
    /// Print the graded character of the local Weyl module.
    Character {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = CharFormat::Json)]
        format: CharFormat,
        #[arg(long)]
        force: bool,
    },
    /// CV-module computations for a partition such as "3,2".
    Cv {
        #[arg(long)]
        xi: Partition,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        lambda1_offset: i64,
        #[arg(value_enum)]
        action: CvAction,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, default_value_t = 12)]
        max_size: u32,
        #[arg(long, default_value_t = 5)]
        max_parts: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Tuples,
    Superpops,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum CvAction {
    Dim,
    Relations,
    Filtration,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}

fn check_cap(n: u32, force: bool) -> Result<(), u8> {
    if n > N_CAP && !force {
        eprintln!("error: n = {n} exceeds the default cap {N_CAP}; pass --force to override");
        return Err(EXIT_USAGE);
    }
    Ok(())
}

fn write_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn run<W: Write>(command: Command, out: &mut W) -> io::Result<u8> {
    match command {
        Command::Superpops { n, format, force } => {
            if let Err(code) = check_cap(n, force) {
                return Ok(code);
            }
            superpops(n, format, out)
        }
        Command::Character {
            n,
            method,
            format,
            force,
        } => {
            if let Err(code) = check_cap(n, force) {
                return Ok(code);
            }
            character(n, method, format, out)
        }
        Command::Cv {
            xi,
            lambda1_offset,
            action,
        } => cv(CVIndex::new(lambda1_offset, xi), action, out),
        Command::Verify {
            max_n,
            max_size,
            max_parts,
            inject_fault,
        } => {
            let cfg = VerifyConfig {
                max_n,
                max_size,
                max_parts,
                inject_fault,
            };
            let report = verify::run(&cfg);
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
            if let Some(f) = report.first_failure() {
                eprintln!(
                    "verify failed in {}: {}",
                    f.name,
                    f.counterexample.as_deref().unwrap_or("")
                );
                return Ok(EXIT_INVARIANT);
            }
            Ok(0)
        }
    }
}

fn superpops<W: Write>(n: u32, format: Format, out: &mut W) -> io::Result<u8> {
    let all = enumerate_superpops(n as usize);
    if let Format::Table = format {
        writeln!(out, "{:<12} {:<12} {:>3} {:<10} {:<28} {:>4} {:>4} {:>5}  word", "row1", "row2", "m", "overlay", "tuple (a;b;c)", "du1", "du2", "grade")?;
    }
    for p in &all {
        let tuple = superpop_to_tuple(p);
        let word = superpop_word(p);
        let ww = word_weight_grade(&word);
        let du2 = i64::from(n) + ww.du2;
        match format {
            Format::Json => write_json(
                out,
                &json!({
                    "superpop": p,
                    "tuple": tuple,
                    "word": word.to_string(),
                    "du1": ww.du1,
                    "du2": du2,
                    "grade": ww.grade,
                }),
            )?,
            Format::Table => {
                let list = |v: &[u32]| {
                    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                };
                let t = format!("({};{};{})", list(&tuple.a), list(&tuple.b), list(&tuple.c));
                writeln!(
                    out,
                    "{:<12} {:<12} {:>3} {:<10} {:<28} {:>4} {:>4} {:>5}  {}",
                    p.matrix().row1_string(),
                    p.matrix().row2_string(),
                    p.pop().m(),
                    p.pop().overlay().to_string(),
                    t,
                    ww.du1,
                    du2,
                    ww.grade,
                    word
                )?;
            }
        }
    }
    match format {
        Format::Json => write_json(out, &json!({ "count": all.len() }))?,
        Format::Table => writeln!(out, "count: {}", all.len())?,
    }
    Ok(0)
}

fn write_character<W: Write>(c: &GradedCharacter, format: CharFormat, out: &mut W) -> io::Result<()> {
    match format {
        CharFormat::Json => write_json(out, c),
        CharFormat::Csv => {
            writeln!(out, "du1,du2,q_exponent,coefficient")?;
            for ((du1, du2), p) in c.terms() {
                for (e, coeff) in p.terms() {
                    writeln!(out, "{du1},{du2},{e},{coeff}")?;
                }
            }
            Ok(())
        }
    }
}

fn character<W: Write>(n: u32, method: Method, format: CharFormat, out: &mut W) -> io::Result<u8> {
    let c = match method {
        Method::Closed => character_closed(n),
        Method::Tuples => character_from_tuples(n),
        Method::Superpops => character_from_superpops(n),
        Method::All => {
            let closed = character_closed(n);
            let agree =
                closed == character_from_tuples(n) && closed == character_from_superpops(n);
            write_character(&closed, format, out)?;
            writeln!(out, "agree: {agree}")?;
            if !agree {
                eprintln!("error: the three character computations disagree at n = {n}");
                return Ok(EXIT_INVARIANT);
            }
            return Ok(0);
        }
    };
    write_character(&c, format, out)?;
    Ok(0)
}

fn cv<W: Write>(idx: CVIndex, action: CvAction, out: &mut W) -> io::Result<u8> {
    let xi = &idx.xi;
    match action {
        CvAction::Dim => {
            let v = json!({
                "xi": xi,
                "lambda1_offset": idx.lambda1_offset,
                "cv_dim": cv_dim(&idx).to_string(),
                "fusion_dim": fusion_dim(xi).to_string(),
                "status": dim_status(xi),
            });
            serde_json::to_writer_pretty(&mut *out, &v)?;
            writeln!(out)?;
            Ok(0)
        }
        CvAction::Relations => {
            let relations: Vec<_> = minimal_relations(xi)
                .into_iter()
                .map(|(r, s)| json!({ "r": r, "s": s }))
                .collect();
            let bounds: Vec<_> = (1..=xi.largest())
                .map(|r| json!({ "r": r, "bound": lemma_bound(xi, r) }))
                .collect();
            let v = json!({ "xi": xi, "relations": relations, "lemma_bounds": bounds });
            serde_json::to_writer_pretty(&mut *out, &v)?;
            writeln!(out)?;
            Ok(0)
        }
        CvAction::Filtration => match verify_filtration(&idx) {
            Ok(report) => {
                serde_json::to_writer_pretty(&mut *out, &report)?;
                writeln!(out)?;
                if report.balanced {
                    Ok(0)
                } else {
                    eprintln!("error: dimensions do not balance for xi = {xi}");
                    Ok(EXIT_INVARIANT)
                }
            }
            Err(e @ Error::UncoveredCase(_)) => {
                eprintln!("{e}");
                Ok(EXIT_UNCOVERED)
            }
            Err(e) => {
                eprintln!("error: {e}");
                Ok(EXIT_USAGE)
            }
        },
    }
}
