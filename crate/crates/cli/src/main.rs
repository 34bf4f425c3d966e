use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use distspec::census::{
    cospectral_search, recover_forbidden_fixtures, recovered_fixtures, thm31_members_bounded,
    verify_forbidden, CensusReport, RecoveryStatus, TablesReport, TheoremSection,
};
use distspec::families::{enumerate_members, Catalog, EigenBucket, FamilyDescriptor, Theorem};
use distspec::graph::graph6::{parse_graph6, read_graph6_stream, write_graph6, Graph6Error};
use distspec::graph::{enumerate_connected, Graph, MAX_ENUMERATION_ORDER};
use distspec::spectral::{distance_char_poly, threshold_pair, Root, SpectralError, Spectrum};
use serde::Serialize;
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "distspec",
    version,
    about = "Exact distance spectra of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for census work
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GraphInput {
    /// graph6 strings; ignored when --input is given
    graphs: Vec<String>,
    /// graph6 file, one graph per line, or `-` for stdin (the default when no graphs are given)
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact distance spectrum of each graph
    Spectrum(GraphInput),
    /// Threshold predicates, multiplicity bucket and family descriptors of each graph
    Classify(GraphInput),
    /// Print the graph6 encoding of family descriptors such as I3[2,3,4]
    Build {
        #[arg(required = true)]
        descriptors: Vec<String>,
    },
    /// Check the three characterization theorems over a graph collection
    Census {
        /// graph6 file or `-`; without it the built-in enumerator is used
        #[arg(long)]
        input: Option<String>,
        /// Orders to enumerate (at most 6); defaults to 4, 5 and 6
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=MAX_ENUMERATION_ORDER as i64))]
        order: Vec<u8>,
    },
    /// Reproduce the eigenvalue tables and closed-form polynomials
    VerifyTables {
        /// Largest family parameter for the polynomial identities
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=8))]
        max_param: u8,
    },
    /// Search family members for non-isomorphic cospectral pairs
    Cospectral {
        /// Descriptors; ignored when --input or --order is given
        descriptors: Vec<String>,
        /// File of descriptors, one per line, or `-`
        #[arg(long)]
        input: Option<String>,
        /// Use every admissible threshold-family member of these orders
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=16))]
        order: Vec<u8>,
    },
    /// Recover the forbidden subgraphs from their printed statistics and check them against family members
    RecoverFixtures {
        /// Largest family parameter of the members checked
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=6))]
        max_param: u8,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Graph6(#[from] Graph6Error),
    #[error("argument {index}: {source}")]
    Graph6Arg { index: usize, source: Graph6Error },
    #[error("{context}: {source}")]
    Descriptor {
        context: String,
        source: distspec::families::DescriptorError,
    },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Pool(String),
}

fn open(path: &str) -> Result<Box<dyn BufRead>, CliError> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    Ok(Box::new(BufReader::new(f)))
}

fn read_graphs(input: &GraphInput) -> Result<Vec<Graph>, CliError> {
    if input.input.is_none() && !input.graphs.is_empty() {
        return input
            .graphs
            .iter()
            .enumerate()
            .map(|(i, s)| {
                parse_graph6(s).map_err(|source| CliError::Graph6Arg {
                    index: i + 1,
                    source,
                })
            })
            .collect();
    }
    read_graph_file(input.input.as_deref().unwrap_or("-"))
}

fn read_graph_file(path: &str) -> Result<Vec<Graph>, CliError> {
    Ok(read_graph6_stream(open(path)?).collect::<Result<_, _>>()?)
}

fn parse_descriptor(s: &str, context: String) -> Result<FamilyDescriptor, CliError> {
    s.trim()
        .parse()
        .map_err(|source| CliError::Descriptor { context, source })
}

fn print_json<T: Serialize>(out: &mut impl Write, v: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

#[derive(Serialize)]
struct SpectrumItem {
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Spectrum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct ClassifyItem {
    graph6: String,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    third_largest_le_minus1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second_least_ge_minus2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bucket: Option<EigenBucket>,
    #[serde(skip_serializing_if = "Option::is_none")]
    descriptor: Option<FamilyDescriptor>,
    matches: Vec<FamilyDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn spectrum_text(s: &Spectrum) -> String {
    s.entries
        .iter()
        .map(|e| {
            let v = match &e.root {
                Root::Exact(k) => k.to_string(),
                Root::Interval(..) => format!("{:.4}", e.approx),
            };
            if e.mult > 1 {
                format!("{v}^{}", e.mult)
            } else {
                v
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_spectrum(
    input: &GraphInput,
    format: Format,
    out: &mut impl Write,
) -> Result<bool, CliError> {
    let mut ok = true;
    let mut items = Vec::new();
    for g in read_graphs(input)? {
        let graph6 = write_graph6(&g);
        match distance_char_poly(&g)
            .map_err(SpectralError::from)
            .and_then(|p| Ok(Spectrum::of_poly(&p)?))
        {
            Ok(s) => items.push(SpectrumItem {
                graph6,
                spectrum: Some(s),
                error: None,
            }),
            Err(e) => {
                ok = false;
                items.push(SpectrumItem {
                    graph6,
                    spectrum: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    let io = |e| CliError::Io {
        path: "stdout".into(),
        source: e,
    };
    match format {
        Format::Json => print_json(out, &items).map_err(io)?,
        Format::Text => {
            for it in &items {
                match (&it.spectrum, &it.error) {
                    (Some(s), _) => writeln!(out, "{}: {}", it.graph6, spectrum_text(s)),
                    (_, e) => writeln!(
                        out,
                        "{}: error: {}",
                        it.graph6,
                        e.as_deref().unwrap_or_default()
                    ),
                }
                .map_err(io)?;
            }
        }
    }
    Ok(ok)
}

fn classify_one(g: &Graph, catalog: &Catalog) -> ClassifyItem {
    let graph6 = write_graph6(g);
    let matches = catalog.recognize_all(g);
    let base = ClassifyItem {
        graph6,
        order: g.order(),
        third_largest_le_minus1: None,
        second_least_ge_minus2: None,
        bucket: None,
        descriptor: matches.first().cloned(),
        matches,
        error: None,
    };
    let p = match distance_char_poly(g) {
        Ok(p) => p,
        Err(e) => {
            return ClassifyItem {
                error: Some(e.to_string()),
                ..base
            }
        }
    };
    let m = |r: i64| p.deflate_at(&r.into()).expect("nonzero polynomial").1;
    let pair = (g.order() >= 3).then(|| threshold_pair(&p));
    ClassifyItem {
        third_largest_le_minus1: pair.map(|t| t.0),
        second_least_ge_minus2: pair.map(|t| t.1),
        bucket: Some(EigenBucket::from_counts(g.order(), m(-1), m(-2))),
        ..base
    }
}

fn cmd_classify(
    input: &GraphInput,
    format: Format,
    out: &mut impl Write,
) -> Result<bool, CliError> {
    let graphs = read_graphs(input)?;
    let mut catalogs: Vec<Catalog> = Vec::new();
    let mut items = Vec::new();
    for g in &graphs {
        if !catalogs.iter().any(|c| c.order() == g.order()) {
            catalogs.push(Catalog::of_order(g.order()));
        }
        let c = catalogs
            .iter()
            .find(|c| c.order() == g.order())
            .expect("just added");
        items.push(classify_one(g, c));
    }
    let ok = items.iter().all(|i| i.error.is_none());
    let io = |e| CliError::Io {
        path: "stdout".into(),
        source: e,
    };
    match format {
        Format::Json => print_json(out, &items).map_err(io)?,
        Format::Text => {
            let flag = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
            for it in &items {
                if let Some(e) = &it.error {
                    writeln!(out, "{}: error: {e}", it.graph6).map_err(io)?;
                    continue;
                }
                let names: Vec<String> = it.matches.iter().map(|d| d.to_string()).collect();
                writeln!(
                    out,
                    "{}: d3<=-1 {}, d(n-1)>=-2 {}, bucket {}, descriptor {}, matches [{}]",
                    it.graph6,
                    flag(it.third_largest_le_minus1),
                    flag(it.second_least_ge_minus2),
                    it.bucket.map_or("n/a", EigenBucket::name),
                    it.descriptor
                        .as_ref()
                        .map_or("none".to_string(), |d| d.to_string()),
                    names.join(", ")
                )
                .map_err(io)?;
            }
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct BuildItem {
    descriptor: FamilyDescriptor,
    order: usize,
    graph6: String,
}

fn cmd_build(
    descriptors: &[String],
    format: Format,
    out: &mut impl Write,
) -> Result<bool, CliError> {
    let items: Vec<BuildItem> = descriptors
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let fd = parse_descriptor(s, format!("argument {}", i + 1))?;
            let g = fd.build();
            Ok(BuildItem {
                order: g.order(),
                graph6: write_graph6(&g),
                descriptor: fd,
            })
        })
        .collect::<Result<_, CliError>>()?;
    let io = |e| CliError::Io {
        path: "stdout".into(),
        source: e,
    };
    match format {
        Format::Json => print_json(out, &items).map_err(io)?,
        Format::Text => {
            for it in &items {
                writeln!(out, "{}", it.graph6).map_err(io)?;
            }
        }
    }
    Ok(true)
}

fn section_text(name: &str, s: &TheoremSection) -> String {
    let mut line = format!(
        "{name}: checked {}, agreements {}, skipped {}, disagreements {}, errors {}",
        s.checked,
        s.agreements,
        s.skipped,
        s.disagreements.len(),
        s.errors.len()
    );
    for d in &s.disagreements {
        let fams: Vec<String> = d.families.iter().map(|f| f.to_string()).collect();
        line.push_str(&format!(
            "\n  {} spectral {} structural {} bucket {} families [{}]",
            d.graph6,
            d.spectral,
            d.structural,
            d.bucket.name(),
            fams.join(", ")
        ));
    }
    for e in &s.errors {
        line.push_str(&format!("\n  item {}: {}", e.index, e.message));
    }
    line
}

fn report_text(r: &CensusReport) -> String {
    let mut lines = Vec::new();
    if let Some(s) = &r.scope {
        lines.push(format!(
            "scope: {} ({} graphs, orders {:?})",
            s.source, s.graphs, s.orders
        ));
    }
    for (name, s) in [
        ("thm31", &r.theorem31),
        ("thm41", &r.theorem41),
        ("thm42", &r.theorem42),
    ] {
        if let Some(s) = s {
            lines.push(section_text(name, s));
        }
    }
    if let Some(t) = &r.tables {
        for row in &t.table1 {
            let matched = row.matched_statistic.as_deref().unwrap_or("none");
            lines.push(format!(
                "table1 {} {} (matched {matched}) expected {:.4} computed {:.4}: {}",
                row.label,
                row.printed_statistic,
                row.expected,
                row.computed,
                pass_word(row.pass)
            ));
        }
        for row in &t.table2 {
            lines.push(format!(
                "table2 {:?} expected {:.4} computed {:.4}: {}",
                row.border,
                row.expected,
                row.computed,
                pass_word(row.pass)
            ));
        }
        for row in &t.table3 {
            let bad: Vec<String> = row.mismatches.iter().map(|d| d.to_string()).collect();
            lines.push(format!(
                "table3 {} checked {}: {} [{}]",
                row.family,
                row.checked,
                pass_word(row.pass),
                bad.join(", ")
            ));
        }
    }
    if let Some(fx) = &r.fixtures {
        for f in fx {
            let status = match f.status {
                RecoveryStatus::Unique => "unique",
                RecoveryStatus::Ambiguous => "ambiguous",
                RecoveryStatus::Missing => "missing",
            };
            lines.push(format!(
                "{} order {} {} = {:.4}: {status} [{}]{}",
                f.label,
                f.order,
                f.statistic,
                f.printed,
                f.candidates.join(", "),
                match f.pinned {
                    Some(p) => format!(" pinned {p}"),
                    None => String::new(),
                }
            ));
        }
    }
    if let Some(fb) = &r.forbidden {
        lines.push(format!(
            "forbidden: {} members against [{}], violations {}: {}",
            fb.checked,
            fb.fixtures.join(", "),
            fb.violations.len(),
            pass_word(fb.pass)
        ));
    }
    if let Some(pairs) = &r.cospectral {
        lines.push(format!("cospectral pairs: {}", pairs.len()));
        for p in pairs {
            lines.push(format!("  {} {} (order {})", p.first, p.second, p.order));
        }
    }
    lines.push(format!("result: {}", pass_word(r.passed())));
    lines.join("\n")
}

fn pass_word(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn emit_report(r: &CensusReport, format: Format, out: &mut impl Write) -> Result<(), CliError> {
    let io = |e| CliError::Io {
        path: "stdout".into(),
        source: e,
    };
    match format {
        Format::Json => print_json(out, r).map_err(io),
        Format::Text => writeln!(out, "{}", report_text(r)).map_err(io),
    }
}

fn cmd_census(
    input: Option<&str>,
    orders: &[u8],
    format: Format,
    out: &mut impl Write,
) -> Result<bool, CliError> {
    let (source, graphs) = match input {
        Some(path) => (format!("graph6:{path}"), read_graph_file(path)?),
        None => {
            let mut orders: Vec<usize> = orders.iter().map(|&n| n as usize).collect();
            if orders.is_empty() {
                orders = vec![4, 5, 6];
            }
            orders.sort_unstable();
            orders.dedup();
            let graphs = orders
                .iter()
                .flat_map(|&n| enumerate_connected(n).expect("order range checked"))
                .collect();
            let names: Vec<String> = orders.iter().map(|n| n.to_string()).collect();
            (format!("enumerated:{}", names.join(",")), graphs)
        }
    };
    let report = CensusReport::theorems(source, &graphs);
    emit_report(&report, format, out)?;
    Ok(report.passed())
}

fn cmd_verify_tables(
    max_param: u8,
    format: Format,
    out: &mut impl Write,
) -> Result<bool, CliError> {
    let report = CensusReport {
        tables: Some(TablesReport::run(max_param as usize)),
        ..CensusReport::default()
    };
    emit_report(&report, format, out)?;
    Ok(report.passed())
}

fn cmd_cospectral(
    descriptors: &[String],
    input: Option<&str>,
    orders: &[u8],
    format: Format,
    out: &mut impl Write,
) -> Result<bool, CliError> {
    let fds: Vec<FamilyDescriptor> = if !orders.is_empty() {
        orders
            .iter()
            .flat_map(|&n| enumerate_members(n as usize, Theorem::T31))
            .collect()
    } else if let Some(path) = input {
        let mut fds = Vec::new();
        for (i, line) in open(path)?.lines().enumerate() {
            let line = line.map_err(|source| CliError::Io {
                path: path.to_string(),
                source,
            })?;
            if !line.trim().is_empty() {
                fds.push(parse_descriptor(&line, format!("line {}", i + 1))?);
            }
        }
        fds
    } else {
        descriptors
            .iter()
            .enumerate()
            .map(|(i, s)| parse_descriptor(s, format!("argument {}", i + 1)))
            .collect::<Result<_, _>>()?
    };
    let report = CensusReport {
        cospectral: Some(cospectral_search(&fds)),
        ..CensusReport::default()
    };
    emit_report(&report, format, out)?;
    Ok(true)
}

fn cmd_recover(max_param: u8, format: Format, out: &mut impl Write) -> Result<bool, CliError> {
    let fixtures = recover_forbidden_fixtures();
    let members = thm31_members_bounded(max_param as usize);
    let forbidden = verify_forbidden(&members, &recovered_fixtures(&fixtures));
    let report = CensusReport {
        fixtures: Some(fixtures),
        forbidden: Some(forbidden),
        ..CensusReport::default()
    };
    emit_report(&report, format, out)?;
    Ok(report.passed())
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<bool, CliError> {
    let format = cli.common.format;
    match &cli.command {
        Command::Spectrum(input) => cmd_spectrum(input, format, out),
        Command::Classify(input) => cmd_classify(input, format, out),
        Command::Build { descriptors } => cmd_build(descriptors, format, out),
        Command::Census { input, order } => cmd_census(input.as_deref(), order, format, out),
        Command::VerifyTables { max_param } => cmd_verify_tables(*max_param, format, out),
        Command::Cospectral {
            descriptors,
            input,
            order,
        } => cmd_cospectral(descriptors, input.as_deref(), order, format, out),
        Command::RecoverFixtures { max_param } => cmd_recover(*max_param, format, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.common.jobs as usize)
        .build()
        .map_err(|e| CliError::Pool(e.to_string()));
    let stdout = io::stdout();
    let result = pool.and_then(|pool| pool.install(|| run(&cli, &mut stdout.lock())));
    let _ = io::stdout().flush();
    match result {
        Ok(passed) => {
            if matches!(
                cli.command,
                Command::Census { .. }
                    | Command::VerifyTables { .. }
                    | Command::RecoverFixtures { .. }
            ) {
                eprintln!("elapsed {:.2?}", start.elapsed());
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
