//! Command-line front end. The `hurwitz` binary only forwards to [`run`].
//!
//! Everything printed on stdout is JSON unless `--pretty` is given.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cache::{cached_count_report, Cache};
use crate::dessin::dessins_for;
use crate::error::{Error, Result};
use crate::formulas;
use crate::partition::{zieve_status, BranchDatum};
use crate::report::CountMode;
use crate::scanner::{conjecture_report, scan_degree, write_json_lines, ScanConfig};
use crate::text::{parse_datum, parse_partitions};

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Realizability and weak Hurwitz numbers of branch data over the sphere")]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Riemann-Hurwitz compatibility, genus and Zieve status of a datum.
    Check {
        datum: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Weak or strong Hurwitz number of a three-point datum.
    Count {
        datum: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Weak)]
        mode: ModeArg,
        /// Include one representative per class.
        #[arg(long)]
        classes: bool,
        /// JSON-lines cache file (default: $HURWITZ_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Expected degree; only validated.
        #[arg(long)]
        degree: Option<usize>,
        /// Expected covering genus; only validated.
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
    /// Evaluate a closed formula.
    Formula {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        p: Option<u64>,
        /// Three comma-separated parts, for `g0h2`.
        #[arg(long)]
        pqr: Option<String>,
    },
    /// Weak counts of every compatible three-point datum of a degree.
    Scan {
        #[arg(long)]
        degree: usize,
        /// Scan every degree from `--degree` up to this one.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        genus_max: Option<usize>,
        /// Restrict to data with a `[d]` or `[2,...,2,x]` partition (cap 11).
        #[arg(long)]
        deep: bool,
        /// Lift the degree cap.
        #[arg(long)]
        force: bool,
        /// Write the JSON lines here and print only the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export one dessin per weak class.
    Dessin {
        datum: String,
        #[arg(long, value_enum, default_value_t = EmitArg::Dot)]
        emit: EmitArg,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Weak,
    Strong,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    G0h2,
    G1h2,
    G1h3,
    G2h4,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EmitArg {
    Dot,
    Json,
}

/// Exit codes: 0 success or compatible, 1 incompatible or failure,
/// 2 unparsable input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let result = pool.install(|| {
        let mut buf = Vec::new();
        dispatch(cli.command, &mut buf).map(|code| (code, buf))
    });
    match result {
        Ok((code, buf)) => match out.write_all(&buf) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn print_json(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Result<i32> {
    match command {
        Command::Check { datum, pretty } => check(&datum, pretty, out),
        Command::Count {
            datum,
            mode,
            classes,
            cache,
            degree,
            genus,
            pretty,
        } => {
            let datum = parse_datum(&datum)?;
            validate(&datum, degree, genus)?;
            let mode = match mode {
                ModeArg::Weak => CountMode::Weak,
                ModeArg::Strong => CountMode::Strong,
            };
            let mut cache = cache.or_else(Cache::env_path).map(Cache::open).transpose()?;
            let report = cached_count_report(cache.as_mut(), &datum, mode, classes)?;
            if pretty {
                write!(out, "{}", report.pretty())?;
            } else {
                print_json(out, &report)?;
            }
            Ok(0)
        }
        Command::Formula { family, k, p, pqr } => {
            print_json(out, &formula(family, k, p, pqr.as_deref())?)?;
            Ok(0)
        }
        Command::Scan {
            degree,
            max_degree,
            genus_max,
            deep,
            force,
            out: path,
        } => {
            let config = ScanConfig {
                genus_max,
                deep,
                ignore_cap: force,
            };
            let mut entries = Vec::new();
            for d in degree..=max_degree.unwrap_or(degree) {
                entries.extend(scan_degree(d, &config)?);
            }
            let report = conjecture_report(&entries);
            match path {
                Some(path) => {
                    write_json_lines(&entries, std::io::BufWriter::new(fs::File::create(path)?))?;
                    print_json(out, &report)?;
                }
                None => write_json_lines(&entries, &mut *out)?,
            }
            Ok(if report.holds() { 0 } else { 1 })
        }
        Command::Dessin { datum, emit, out_dir } => {
            let datum = parse_datum(&datum).map_err(|e| match e {
                Error::Parse(m) => Error::MalformedDatum(m),
                other => other,
            })?;
            let dessins = dessins_for(&datum)?;
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    let mut files = Vec::new();
                    for (i, d) in dessins.iter().enumerate() {
                        let dot = dir.join(format!("dessin_{i}.dot"));
                        let side = dir.join(format!("dessin_{i}.json"));
                        if matches!(emit, EmitArg::Dot) {
                            fs::write(&dot, d.to_dot(&format!("dessin_{i}")))?;
                            files.push(dot.display().to_string());
                        }
                        fs::write(&side, d.to_json()?)?;
                        files.push(side.display().to_string());
                    }
                    print_json(out, &json!({ "datum": datum.to_string(), "dessins": dessins.len(), "files": files }))?;
                }
                None => match emit {
                    EmitArg::Dot => {
                        for (i, d) in dessins.iter().enumerate() {
                            write!(out, "{}", d.to_dot(&format!("dessin_{i}")))?;
                        }
                    }
                    EmitArg::Json => print_json(out, &dessins)?,
                },
            }
            Ok(0)
        }
    }
}

fn check(text: &str, pretty: bool, out: &mut dyn Write) -> Result<i32> {
    let partitions = parse_partitions(text)?;
    let n = partitions.len();
    let degree = partitions[0].degree();
    let (code, value) = match BranchDatum::from_partitions(partitions) {
        Ok(datum) => (
            0,
            json!({
                "datum": datum.to_string(),
                "compatible": true,
                "degree": degree,
                "branch_points": n,
                "genus": datum.cover_genus(),
                "zieve": zieve_status(&datum),
            }),
        ),
        Err(Error::Incompatible(reason)) => (
            1,
            json!({
                "datum": text.split_whitespace().collect::<String>(),
                "compatible": false,
                "degree": degree,
                "branch_points": n,
                "reason": reason,
            }),
        ),
        Err(e) => return Err(e),
    };
    if pretty {
        match value.get("genus") {
            Some(g) => writeln!(out, "compatible, genus {g}, zieve {}", value["zieve"].as_str().unwrap_or(""))?,
            None => writeln!(out, "incompatible: {}", value["reason"].as_str().unwrap_or(""))?,
        }
    } else {
        print_json(out, &value)?;
    }
    Ok(code)
}

fn validate(datum: &BranchDatum, degree: Option<usize>, genus: Option<usize>) -> Result<()> {
    if let Some(d) = degree.filter(|&d| d != datum.degree()) {
        return Err(Error::MalformedDatum(format!("datum has degree {}, not {d}", datum.degree())));
    }
    if let Some(g) = genus.filter(|&g| g != datum.cover_genus()) {
        return Err(Error::MalformedDatum(format!("datum has genus {}, not {g}", datum.cover_genus())));
    }
    Ok(())
}

fn formula(family: FamilyArg, k: u64, p: Option<u64>, pqr: Option<&str>) -> Result<serde_json::Value> {
    let need_p = || p.ok_or_else(|| Error::InvalidParams("--p is required".into()));
    Ok(match family {
        FamilyArg::G0h2 => {
            let parts: Vec<u64> = pqr
                .ok_or_else(|| Error::InvalidParams("--pqr is required".into()))?
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
                .collect::<Result<_>>()?;
            let [a, b, c] = parts[..] else {
                return Err(Error::Parse("--pqr needs three parts".into()));
            };
            let (i, ii) = formulas::claim_counts_g0_h2(k, a, b, c)?;
            json!({ "family": "g0h2", "k": k, "pqr": [a, b, c], "value": formulas::nu_g0_h2(k, a, b, c)?,
                    "case": formulas::case_tag(k, a, b, c)?, "claims": [i, ii] })
        }
        FamilyArg::G1h2 => json!({ "family": "g1h2", "k": k, "value": formulas::nu_g1_h2(k)? }),
        FamilyArg::G1h3 => {
            let p = need_p()?;
            json!({ "family": "g1h3", "k": k, "p": p, "value": formulas::nu_g1_h3(k, p)?,
                    "uncorrected": formulas::nu_g1_h3_uncorrected(k, p)?,
                    "claims": formulas::claim_counts_g1_h3(k, p)?.as_array() })
        }
        FamilyArg::G2h4 => {
            let (asym, sym) = formulas::nu_g2_decomposition(k);
            json!({ "family": "g2h4", "k": k, "value": formulas::nu_g2_h4(k)?,
                    "uncorrected": formulas::nu_g2_h4_uncorrected(k)?, "decomposition": [asym, sym] })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hurwitz").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn check_exit_codes() {
        let (code, out) = call(&["check", "[2,2,1],[2,3],[2,3]"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["genus"], 0);
        assert_eq!(v["compatible"], true);
        assert_eq!(call(&["check", "[3]"]).0, 1);
        assert_eq!(call(&["check", "[2,2,x]"]).0, 2);
    }

    #[test]
    fn formulas() {
        let value = |args: &[&str]| {
            let (code, out) = call(args);
            assert_eq!(code, 0, "{args:?}");
            serde_json::from_str::<serde_json::Value>(&out).unwrap()["value"].as_u64().unwrap()
        };
        assert_eq!(value(&["formula", "g1h2", "--k", "4"]), 4);
        assert_eq!(value(&["formula", "g2h4", "--k", "4"]), 10);
        assert_eq!(value(&["formula", "g0h2", "--k", "4", "--pqr", "3,3,3"]), 0);
        assert_eq!(value(&["formula", "g1h3", "--k", "4", "--p", "7"]), 5);
        assert_eq!(call(&["formula", "g1h3", "--k", "4"]).0, 1);
    }

    #[test]
    fn count_and_validation() {
        let (code, out) = call(&["count", "[2,1],[2,1],[3]", "--mode", "strong", "--threads", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 1);
        assert_eq!(call(&["count", "[2,1],[2,1],[3]", "--degree", "4"]).0, 1);
        assert_eq!(call(&["count", "[2,1],[2,1],[3]", "--genus", "0"]).0, 0);
    }

    #[test]
    fn dessin_rejects_invalid_data() {
        assert_eq!(call(&["dessin", "[2,2,x]"]).0, 1);
        assert_eq!(call(&["dessin", "[3]"]).0, 1);
        let (code, out) = call(&["dessin", "[2,1],[2,1],[3]"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("graph ").count(), 1);
    }
}
