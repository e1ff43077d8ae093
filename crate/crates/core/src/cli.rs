//! Command-line front end: enumeration, statistics, polynomial tables,
//! the bounce-to-area bijection, and the theorem-verification harness.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijections;
use crate::dyck;
use crate::error::Error;
use crate::parking::para_poly;
use crate::polyomino::{
    enumerate_area_words, enumerate_polyominoes, nara_enum, narayana_count, tilde_nara_enum,
    AreaWord,
};
use crate::qtpoly::QTPolynomial;
use crate::recursion::{
    nabla_pairing, nara_rs, nara_total, para_rs_rec, tilde_nara_rs, tilde_nara_total, Method,
};

#[derive(Parser)]
#[command(
    name = "narayana",
    about = "q,t-Narayana polynomials of parallelogram polyominoes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the area words of all polyominoes in an m x n box.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute area, dinv, and bounce of one area word.
    Stats {
        /// Area word, e.g. "0b 1 1b 2".
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a generating polynomial, optionally (r,s)-refined.
    Poly {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Box width (nara / tilde-nara families).
        #[arg(long, required_if_eq_any([("family", "nara"), ("family", "tilde-nara")]))]
        m: Option<u32>,
        /// Box height (nara / tilde-nara families).
        #[arg(long, required_if_eq_any([("family", "nara"), ("family", "tilde-nara")]))]
        n: Option<u32>,
        /// Count of small letters (para family).
        #[arg(long, required_if_eq("family", "para"))]
        a: Option<u32>,
        /// Count of large letters (para family).
        #[arg(long, required_if_eq("family", "para"))]
        b: Option<u32>,
        /// Refinement r (requires --s).
        #[arg(long, requires = "s")]
        r: Option<u32>,
        /// Refinement s (requires --r).
        #[arg(long, requires = "r")]
        s: Option<u32>,
        #[arg(long, value_enum, default_value_t = MethodArg::Enumerate)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Apply the bounce-to-area bijection to an area word.
    Digamma {
        /// Area word of the source polyomino.
        word: String,
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
    },
    /// Re-verify the theorems over all boxes with m + n <= --max-total.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        max_total: u32,
        /// Comma-separated subset of checks; defaults to all.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Check>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Nara,
    #[value(name = "tilde-nara")]
    TildeNara,
    Para,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enumerate,
    Recursion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Debug)]
enum Check {
    Count,
    Adinba,
    #[value(name = "symmetry-qt")]
    SymmetryQt,
    #[value(name = "symmetry-mn")]
    SymmetryMn,
    Recursion,
    Haglund,
    Digamma,
    Dyck,
}

const ALL_CHECKS: [Check; 8] = [
    Check::Count,
    Check::Adinba,
    Check::SymmetryQt,
    Check::SymmetryMn,
    Check::Recursion,
    Check::Haglund,
    Check::Digamma,
    Check::Dyck,
];

#[derive(Serialize)]
struct PolynomialDocument {
    context: DocumentContext,
    terms: Vec<(u32, u32, String)>,
}

#[derive(Serialize)]
struct DocumentContext {
    family: String,
    m: u32,
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    rs: Option<(u32, u32)>,
}

#[derive(Serialize)]
struct StatsRecord {
    m: u32,
    n: u32,
    area: u64,
    dinv: u64,
    bounce: u64,
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with success status.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> crate::Result<i32> {
    match cli.command {
        Command::Enumerate { m, n, format } => cmd_enumerate(m, n, format),
        Command::Stats { word, format } => cmd_stats(&word, format),
        Command::Poly {
            family,
            m,
            n,
            a,
            b,
            r,
            s,
            method,
            format,
        } => {
            let rs = r.zip(s);
            let (first, second) = match family {
                FamilyArg::Para => (a.unwrap(), b.unwrap()),
                _ => (m.unwrap(), n.unwrap()),
            };
            cmd_poly(family, first, second, rs, method, format)
        }
        Command::Digamma { word, direction } => cmd_digamma(&word, direction),
        Command::Verify { max_total, checks } => {
            let checks = if checks.is_empty() {
                ALL_CHECKS.to_vec()
            } else {
                checks
            };
            cmd_verify(max_total, &checks)
        }
    }
}

fn cmd_enumerate(m: u32, n: u32, format: Format) -> crate::Result<i32> {
    let words = enumerate_area_words(m, n)?;
    match format {
        Format::Text => {
            for w in &words {
                println!("{w}");
            }
        }
        Format::Json => {
            let strings: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            println!("{}", serde_json::to_string(&strings).expect("serializable"));
        }
        Format::Latex => {
            return Err(Error::Parse("latex format applies to poly only".into()))
        }
    }
    Ok(0)
}

fn cmd_stats(word: &str, format: Format) -> crate::Result<i32> {
    let w: AreaWord = word.parse()?;
    let p = dyck::word_to_polyomino(&w)?;
    let record = StatsRecord {
        m: w.m(),
        n: w.n(),
        area: w.area(),
        dinv: w.dinv(),
        bounce: p.bounce(),
    };
    match format {
        Format::Text => println!(
            "m={} n={} area={} dinv={} bounce={}",
            record.m, record.n, record.area, record.dinv, record.bounce
        ),
        Format::Json => println!("{}", serde_json::to_string(&record).expect("serializable")),
        Format::Latex => {
            return Err(Error::Parse("latex format applies to poly only".into()))
        }
    }
    Ok(0)
}

fn cmd_poly(
    family: FamilyArg,
    first: u32,
    second: u32,
    rs: Option<(u32, u32)>,
    method: MethodArg,
    format: Format,
) -> crate::Result<i32> {
    let poly = match (family, method, rs) {
        (FamilyArg::Nara, MethodArg::Enumerate, _) => nara_enum(first, second, rs)?,
        (FamilyArg::Nara, MethodArg::Recursion, Some((r, s))) => nara_rs(first, second, r, s)?,
        (FamilyArg::Nara, MethodArg::Recursion, None) => {
            nara_total(first, second, Method::Recursion)?
        }
        (FamilyArg::TildeNara, MethodArg::Enumerate, _) => tilde_nara_enum(first, second, rs)?,
        (FamilyArg::TildeNara, MethodArg::Recursion, Some((r, s))) => {
            tilde_nara_rs(first, second, r, s)?
        }
        (FamilyArg::TildeNara, MethodArg::Recursion, None) => {
            tilde_nara_total(first, second, Method::Recursion)?
        }
        (FamilyArg::Para, MethodArg::Enumerate, _) => para_poly(first, second, rs)?,
        (FamilyArg::Para, MethodArg::Recursion, Some((r, s))) => {
            para_rs_rec(first, second, r, s)?
        }
        (FamilyArg::Para, MethodArg::Recursion, None) => {
            let mut acc = QTPolynomial::zero();
            for r in 0..=first {
                for s in 0..=second {
                    acc = acc.add(&para_rs_rec(first, second, r, s)?);
                }
            }
            acc
        }
    };
    let doc = PolynomialDocument {
        context: DocumentContext {
            family: match family {
                FamilyArg::Nara => "nara".into(),
                FamilyArg::TildeNara => "tilde-nara".into(),
                FamilyArg::Para => "para".into(),
            },
            m: first,
            n: second,
            rs,
        },
        terms: poly
            .terms()
            .map(|(&(q, t), c)| (q, t, c.to_string()))
            .collect(),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&doc).expect("serializable")),
        Format::Text => println!("{poly}"),
        Format::Latex => println!("{}", poly.to_latex()),
    }
    Ok(0)
}

fn cmd_digamma(word: &str, direction: Direction) -> crate::Result<i32> {
    let w: AreaWord = word.parse()?;
    let p = dyck::word_to_polyomino(&w)?;
    let image = match direction {
        Direction::Forward => bijections::digamma(&p)?,
        Direction::Inverse => bijections::digamma_inverse(&p)?,
    };
    println!("{}", image.area_word());
    Ok(0)
}

struct CellReport {
    m: u32,
    n: u32,
    check: Check,
    pass: bool,
    detail: String,
}

fn cmd_verify(max_total: u32, checks: &[Check]) -> crate::Result<i32> {
    let mut cells: Vec<(u32, u32)> = Vec::new();
    for total in 2..=max_total {
        for m in 1..total {
            cells.push((m, total - m));
        }
    }
    cells.sort_by_key(|&(m, n)| (m + n, m));

    let jobs: Vec<((u32, u32), Check)> = cells
        .iter()
        .flat_map(|&cell| checks.iter().map(move |&c| (cell, c)))
        .collect();

    let threads: usize = std::env::var("NARAYANA_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0);
    let reports: Vec<CellReport> = if threads >= 2 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        pool.install(|| {
            use rayon::prelude::*;
            jobs.par_iter()
                .map(|&((m, n), c)| run_check(m, n, c))
                .collect()
        })
    } else {
        jobs.iter().map(|&((m, n), c)| run_check(m, n, c)).collect()
    };

    let mut failures = 0u32;
    for r in &reports {
        let status = if r.pass { "ok" } else { "FAIL" };
        let check = format!("{:?}", r.check).to_lowercase();
        if r.pass {
            println!("m={} n={} check={check} {status}", r.m, r.n);
        } else {
            println!("m={} n={} check={check} {status}: {}", r.m, r.n, r.detail);
            failures += 1;
        }
    }
    println!(
        "{} checks over {} boxes: {} failed",
        reports.len(),
        cells.len(),
        failures
    );
    Ok(if failures > 0 { 1 } else { 0 })
}

fn run_check(m: u32, n: u32, check: Check) -> CellReport {
    let result = std::panic::catch_unwind(|| check_cell(m, n, check));
    let (pass, detail) = match result {
        Ok(Ok(())) => (true, String::new()),
        Ok(Err(msg)) => (false, msg),
        Err(_) => (false, "internal panic".into()),
    };
    CellReport {
        m,
        n,
        check,
        pass,
        detail,
    }
}

type CheckResult = std::result::Result<(), String>;

fn expect_eq<T: PartialEq + std::fmt::Display>(lhs: T, rhs: T, what: &str) -> CheckResult {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn check_cell(m: u32, n: u32, check: Check) -> CheckResult {
    let fail = |e: Error| e.to_string();
    match check {
        Check::Count => {
            let words = enumerate_area_words(m, n).map_err(fail)?;
            let expected = narayana_count(m + n - 1, m).map_err(fail)?;
            expect_eq(
                num_bigint::BigInt::from(words.len()),
                expected.clone(),
                "|Polyo| vs Narayana number",
            )?;
            let total = nara_total(m, n, Method::Enumeration).map_err(fail)?;
            expect_eq(total.eval_ones(), expected, "Nara(1,1) vs Narayana number")
        }
        Check::Adinba => {
            expect_eq(
                nara_enum(m, n, None).map_err(fail)?,
                tilde_nara_enum(n, m, None).map_err(fail)?,
                "Nara_{m,n} vs tildeNara_{n,m}",
            )?;
            for r in 1..=m {
                for s in 0..n {
                    expect_eq(
                        nara_enum(m, n, Some((r, s))).map_err(fail)?,
                        tilde_nara_enum(n, m, Some((r, s))).map_err(fail)?,
                        &format!("refined ADinBA at ({r},{s})"),
                    )?;
                }
            }
            Ok(())
        }
        Check::SymmetryQt => {
            let p = nara_enum(m, n, None).map_err(fail)?;
            expect_eq(p.swap_qt(), p, "q,t swap invariance")
        }
        Check::SymmetryMn => expect_eq(
            nara_enum(m, n, None).map_err(fail)?,
            nara_enum(n, m, None).map_err(fail)?,
            "m,n swap invariance",
        ),
        Check::Recursion => {
            for r in 1..=m {
                for s in 0..n {
                    expect_eq(
                        nara_rs(m, n, r, s).map_err(fail)?,
                        nara_enum(m, n, Some((r, s))).map_err(fail)?,
                        &format!("nara recursion at ({r},{s})"),
                    )?;
                    expect_eq(
                        nara_rs(m, n, r, s).map_err(fail)?,
                        tilde_nara_rs(n, m, r, s).map_err(fail)?,
                        &format!("nara vs tilde recursion at ({r},{s})"),
                    )?;
                }
            }
            for r in 1..=n {
                for s in 0..m {
                    expect_eq(
                        tilde_nara_rs(m, n, r, s).map_err(fail)?,
                        tilde_nara_enum(m, n, Some((r, s))).map_err(fail)?,
                        &format!("tilde recursion at ({r},{s})"),
                    )?;
                }
            }
            for r in 0..n {
                for s in 0..m {
                    expect_eq(
                        para_rs_rec(n - 1, m - 1, r, s).map_err(fail)?,
                        para_poly(n - 1, m - 1, Some((r, s))).map_err(fail)?,
                        &format!("para recursion at ({r},{s})"),
                    )?;
                }
            }
            Ok(())
        }
        Check::Haglund => expect_eq(
            nara_total(m, n, Method::Enumeration).map_err(fail)?,
            nabla_pairing(m, n)
                .map_err(fail)?
                .monomial_shift(m + n - 1, m + n - 1),
            "Nara vs (qt)^{m+n-1} Para",
        ),
        Check::Digamma => {
            let mut images = std::collections::HashSet::new();
            for p in enumerate_polyominoes(m, n).map_err(fail)? {
                let q = bijections::digamma(&p).map_err(fail)?;
                let qw = q.area_word();
                expect_eq(qw.area(), p.bounce(), "area of image vs bounce")?;
                expect_eq(qw.dinv(), p.area_word().area(), "dinv of image vs area")?;
                if !images.insert(qw.letters().to_vec()) {
                    return Err("digamma image collision".into());
                }
                if bijections::digamma_inverse(&q).map_err(fail)? != p {
                    return Err("digamma inverse mismatch".into());
                }
            }
            Ok(())
        }
        Check::Dyck => {
            for p in enumerate_polyominoes(m, n).map_err(fail)? {
                let d = dyck::ptd(&p);
                expect_eq(
                    dyck::dyck_to_area_word(&d).map_err(fail)?,
                    p.area_word(),
                    "row reading vs sweep",
                )?;
                if dyck::dtp(&d).map_err(fail)? != p {
                    return Err("dtp round trip mismatch".into());
                }
            }
            Ok(())
        }
    }
}
