mod args;
mod output;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use lucasforge::identities::{
    run_suite_on, search_fib_analogue, Family, SearchError, SuiteConfig, SuiteReport, Template,
    Workbench,
};
use lucasforge::lucas::DEFAULT_MAX_INDEX;
use lucasforge::{factorial_quotient_report, LucasError, NumericError};

use args::{Cli, Command, Format, LucasCommand, RangeArgs};
use output::{emit_structured, Record};

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A computation that should have succeeded did not: exit code 1.
    Compute(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<LucasError> for Failure {
    fn from(e: LucasError) -> Self {
        match e {
            LucasError::InternalInconsistency(_) => Failure::Compute(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<NumericError> for Failure {
    fn from(e: NumericError) -> Self {
        match e {
            NumericError::NotDivisible(_) | NumericError::Overflow => {
                Failure::Compute(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n");
            eprintln!("{}", Cli::command().render_usage());
            eprintln!("\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn int(v: usize) -> i64 {
    v as i64
}

/// Runs the command; `Ok(false)` means some verdict was not as expected.
fn run(cli: &Cli, out: &mut impl Write) -> Result<bool, Failure> {
    let wb = Workbench::new(cli.max_index.unwrap_or(DEFAULT_MAX_INDEX));
    let single = |op: &str, params: &[(&str, usize)], value: String| {
        let params: Vec<(&str, i64)> = params.iter().map(|(k, v)| (*k, int(*v))).collect();
        Record::new(op, &params, value)
    };
    let record = match &cli.command {
        Command::Fib { n } => single("fib", &[("n", *n)], wb.fib.fib(*n)?.to_string()),
        Command::Lucas(LucasCommand::Poly { n }) => single(
            "lucas-poly",
            &[("n", *n)],
            wb.lucas.lucas_poly(*n)?.to_string(),
        ),
        Command::Lucas(LucasCommand::Factorial { n, k: None }) => single(
            "lucas-factorial",
            &[("n", *n)],
            wb.lucas.lucas_factorial(*n)?.to_string(),
        ),
        Command::Lucas(LucasCommand::Factorial { n, k: Some(k) }) => {
            let k = *k as usize;
            single(
                "lucas-factorial",
                &[("n", *n), ("k", k)],
                wb.lucas.kdiv_lucas_factorial(*n, k)?.to_string(),
            )
        }
        Command::Lucas(LucasCommand::Atom { d }) => single(
            "lucas-atom",
            &[("d", *d)],
            wb.lucas.lucas_atom(*d)?.to_string(),
        ),
        Command::Lucanomial { n, k } => single(
            "lucanomial",
            &[("n", *n), ("k", *k)],
            wb.lucas.lucanomial(*n, *k)?.to_string(),
        ),
        Command::Catalan {
            n, classical: true, ..
        } => single("catalan", &[("n", *n)], wb.fib.catalan(*n)?.to_string()),
        Command::Catalan { n, .. } => single(
            "lucas-catalan",
            &[("n", *n)],
            wb.lucas.lucas_catalan(*n)?.to_string(),
        ),
        Command::Fibocatalan { n } => single(
            "fibocatalan",
            &[("n", *n)],
            wb.fib.fibocatalan(*n)?.to_string(),
        ),
        Command::Super {
            m,
            n,
            classical,
            fib,
            k,
            ..
        } => {
            let (m, n) = (*m, *n);
            match (*classical, *fib, k.map(|k| k as usize)) {
                (true, _, Some(_)) => {
                    return Err(Failure::Usage(
                        "-k applies to --fib and --lucas only".into(),
                    ))
                }
                (true, _, None) => single(
                    "super-catalan",
                    &[("m", m), ("n", n)],
                    wb.fib.super_catalan(m, n)?.to_string(),
                ),
                (_, true, None) => single(
                    "super-fib",
                    &[("m", m), ("n", n)],
                    wb.fib.super_fibocatalan(m, n)?.to_string(),
                ),
                (_, true, Some(k)) => single(
                    "super-fib",
                    &[("m", m), ("n", n), ("k", k)],
                    wb.fib.super_fibocatalan_kdiv(m, n, k)?.to_string(),
                ),
                (_, _, None) => single(
                    "super-lucas",
                    &[("m", m), ("n", n)],
                    wb.lucas.super_lucas(m, n)?.to_string(),
                ),
                (_, _, Some(k)) => single(
                    "super-lucas",
                    &[("m", m), ("n", n), ("k", k)],
                    wb.lucas.super_lucas_kdiv(m, n, k)?.to_string(),
                ),
            }
        }
        Command::Gencat {
            r, n, fib: true, ..
        } => single(
            "gencat-fib",
            &[("r", *r), ("n", *n)],
            wb.fib.generalized_fibocatalan(*r, *n)?.to_string(),
        ),
        Command::Gencat { r, n, .. } => single(
            "gencat-lucas",
            &[("r", *r), ("n", *n)],
            wb.lucas.generalized_lucas_cat(*r, *n)?.to_string(),
        ),
        Command::Ratcat {
            a,
            b,
            classical: true,
            ..
        } => single(
            "ratcat",
            &[("a", *a), ("b", *b)],
            wb.fib.rational_catalan(*a, *b)?.to_string(),
        ),
        Command::Ratcat { a, b, .. } => single(
            "ratcat-lucas",
            &[("a", *a), ("b", *b)],
            wb.lucas.rational_lucas_catalan(*a, *b)?.to_string(),
        ),
        Command::Valuation { num, den, k, check } => {
            return valuation(cli.format, &wb, num, den, *k as usize, *check, out)
        }
        Command::Verify {
            family,
            ranges,
            parallelism,
        } => {
            let family: Family = family
                .parse()
                .map_err(|e| Failure::Usage(format!("{e}; known families: {}", family_ids())))?;
            let ranges = family_ranges(family.id(), family.params(), ranges, |_| {
                family.default_grid()
            })?;
            let config = SuiteConfig {
                families: vec![(family, ranges)],
                parallelism: *parallelism,
                max_index: wb.lucas.max_index(),
            };
            return suite_output(cli.format, &run_suite_on(&wb, &config), out);
        }
        Command::Search {
            template,
            weights,
            ranges,
        } => return search(cli.format, &wb, template, weights, ranges, out),
        Command::Suite {
            families,
            parallelism,
        } => {
            let families = if families.is_empty() {
                Family::ALL.to_vec()
            } else {
                families
                    .iter()
                    .map(|f| f.parse::<Family>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Failure::Usage(format!("{e}; known families: {}", family_ids())))?
            };
            let config = SuiteConfig {
                parallelism: *parallelism,
                max_index: wb.lucas.max_index(),
                ..SuiteConfig::of(&families)
            };
            return suite_output(cli.format, &run_suite_on(&wb, &config), out);
        }
    };
    emit_structured(out, cli.format, &[record])?;
    Ok(true)
}

fn family_ids() -> String {
    Family::ALL
        .iter()
        .map(|f| f.id())
        .collect::<Vec<_>>()
        .join(", ")
}

/// One range per parameter, from the flags or the fallback; flags the
/// target does not take are a usage error.
fn family_ranges(
    target: &str,
    params: &[&str],
    given: &RangeArgs,
    fallback: impl Fn(usize) -> Vec<RangeInclusive<usize>>,
) -> Result<Vec<RangeInclusive<usize>>, Failure> {
    if let Some(extra) = given.given().into_iter().find(|g| !params.contains(g)) {
        return Err(Failure::Usage(format!(
            "--{extra} is not a parameter of {target} (parameters: {})",
            params
                .iter()
                .map(|p| format!("--{p}"))
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let defaults = fallback(params.len());
    Ok(params
        .iter()
        .zip(defaults)
        .map(|(p, d)| given.get(p).unwrap_or(d))
        .collect())
}

fn suite_output(
    format: Format,
    report: &SuiteReport,
    out: &mut impl Write,
) -> Result<bool, Failure> {
    for (family, elapsed) in &report.timings {
        eprintln!("{family}: {:.3}s", elapsed.as_secs_f64());
    }
    match format {
        Format::Text => {
            for r in &report.reports {
                writeln!(out, "{r}")?;
            }
            writeln!(
                out,
                "{} passed, {} failed, {} informational",
                report.passed, report.failed, report.informational
            )?;
        }
        _ => {
            let records: Vec<Record> = report
                .reports
                .iter()
                .map(|r| Record {
                    op: r.id.clone(),
                    params: r.params.iter().map(|(k, v)| (k.clone(), int(*v))).collect(),
                    result: r.lhs.clone(),
                    rhs: Some(r.rhs.clone()),
                    verdict: Some(r.verdict),
                    expected: r.expected.verdict(),
                })
                .collect();
            emit_structured(out, format, &records)?;
        }
    }
    Ok(report.all_passed())
}

fn valuation(
    format: Format,
    wb: &Workbench,
    num: &[usize],
    den: &[usize],
    k: usize,
    check: bool,
    out: &mut impl Write,
) -> Result<bool, Failure> {
    let report = factorial_quotient_report(num, den, k);
    let exact = if check {
        Some(wb.lucas.try_factorial_quotient(num, den, k)?)
    } else {
        None
    };
    let word = |poly: bool| {
        if poly {
            "polynomial"
        } else {
            "not a polynomial"
        }
    };
    let agrees = exact.as_ref().map(|e| e.is_some() == report.verdict);

    if format == Format::Text {
        writeln!(out, "{:>4} {:>8} {:>8}", "d", "num", "den")?;
        for row in &report.rows {
            writeln!(
                out,
                "{:>4} {:>8} {:>8}{}",
                row.d,
                row.numerator,
                row.denominator,
                if row.holds() { "" } else { "  short" }
            )?;
        }
        writeln!(out, "valuation: {}", word(report.verdict))?;
        if let Some(exact) = &exact {
            writeln!(out, "exact division: {}", word(exact.is_some()))?;
            if let Some(p) = exact {
                writeln!(out, "quotient: {p}")?;
            }
        }
        return Ok(agrees.unwrap_or(true));
    }

    let mut records: Vec<Record> = report
        .rows
        .iter()
        .map(|row| {
            Record::new(
                "valuation-row",
                &[
                    ("d", int(row.d)),
                    ("num", row.numerator as i64),
                    ("den", row.denominator as i64),
                ],
                if row.holds() { "ok" } else { "short" },
            )
        })
        .collect();
    let mut params: Vec<(String, i64)> = num
        .iter()
        .enumerate()
        .map(|(i, v)| (format!("num{i}"), int(*v)))
        .collect();
    params.extend(
        den.iter()
            .enumerate()
            .map(|(i, v)| (format!("den{i}"), int(*v))),
    );
    params.push(("k".into(), int(k)));
    let mut summary = Record::new("valuation", &[], word(report.verdict));
    summary.params = params;
    if let Some(exact) = &exact {
        summary.rhs = Some(
            exact
                .as_ref()
                .map_or_else(|| word(false).to_string(), |p| p.to_string()),
        );
        summary.verdict = agrees;
        summary.expected = Some(true);
    }
    records.push(summary);
    emit_structured(out, format, &records)?;
    Ok(agrees.unwrap_or(true))
}

fn search(
    format: Format,
    wb: &Workbench,
    template: &str,
    weights: &str,
    ranges: &RangeArgs,
    out: &mut impl Write,
) -> Result<bool, Failure> {
    let t: Template = template.parse()?;
    let ranges = family_ranges(t.id(), t.params(), ranges, |len| vec![0..=6; len])?;
    let outcome = search_fib_analogue(wb, template, weights, &ranges)?;
    let names = t.params();
    let point_text = |p: &[usize]| {
        names
            .iter()
            .zip(p)
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    };

    if format == Format::Text {
        let spans: Vec<String> = outcome
            .ranges
            .iter()
            .map(|(n, r)| format!("{n} in {}..{}", r.start(), r.end()))
            .collect();
        writeln!(
            out,
            "{} with weights {} over {}: holds at {} of {} points",
            outcome.template,
            outcome.weights.formula(),
            spans.join(", "),
            outcome.holding.len(),
            outcome.tested()
        )?;
        for p in &outcome.holding {
            writeln!(out, "  holds   [{}]", point_text(p))?;
        }
        for (p, res) in &outcome.residuals {
            writeln!(out, "  residual [{}]: {res}", point_text(p))?;
        }
        return Ok(true);
    }

    let op = format!("search:{}:{}", outcome.template, outcome.weights);
    let params = |p: &[usize]| {
        names
            .iter()
            .zip(p)
            .map(|(n, v)| (n.to_string(), int(*v)))
            .collect::<Vec<_>>()
    };
    let mut records: Vec<(Vec<usize>, Record)> = Vec::new();
    for p in &outcome.holding {
        let mut r = Record::new(&op, &[], "0");
        r.params = params(p);
        r.verdict = Some(true);
        records.push((p.clone(), r));
    }
    for (p, res) in &outcome.residuals {
        let mut r = Record::new(&op, &[], res);
        r.params = params(p);
        r.verdict = Some(false);
        records.push((p.clone(), r));
    }
    records.sort_by(|a, b| a.0.cmp(&b.0));
    let records: Vec<Record> = records.into_iter().map(|(_, r)| r).collect();
    emit_structured(out, format, &records)?;
    Ok(true)
}
