//! Command-line front end: parses Java variant sources into code models,
//! builds identifier maps with their concept diagrams, classifies identifier
//! evolution between two variants, and evaluates maps against ground truths.
//!
//! Exit codes: 0 on success (warnings included), 1 on runtime failures
//! (unreadable inputs, malformed files, metrics below threshold), 2 on
//! command-line usage errors.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use idmap::{
    build_aoc_poset, build_context, classify_evolution, corpus_stats, evaluate_map,
    evolution_to_json, extract_map, extract_variant, metrics_to_json, read_xml, to_dot, to_json,
    to_text_report, write_xml, CodeModel, Diagnostic, GroundTruth, KindFilter, MetricsReport,
    RenderOptions,
};

/// Extracts and compares identifier maps of Java software variants.
#[derive(Debug, Parser)]
#[command(name = "idmap", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse variant sources and write one XML code model per variant.
    Parse(ParseArgs),
    /// Build the five identifier maps and write diagrams, JSON, and a report.
    Map(MapArgs),
    /// Classify identifier evolution between an initial and a current variant.
    Evolve(EvolveArgs),
    /// Evaluate extracted identifier maps against ground-truth files.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Variant input as NAME=PATH. PATH is either a directory of Java
    /// sources or a previously written XML code model file. Repeatable.
    #[arg(long = "variant", value_name = "NAME=PATH", required = true)]
    variants: Vec<String>,

    /// Directory receiving the output files (created if missing).
    #[arg(long, value_name = "DIR", default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ParseArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Debug, Args)]
struct MapArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Label diagram nodes with simple names instead of tagged qualified names.
    #[arg(long)]
    simple_names: bool,

    /// Longest label list printed per diagram compartment; 0 disables elision.
    #[arg(long, value_name = "N", default_value_t = 20)]
    max_labels: usize,

    /// Print per-map wall-clock build times to standard output.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct EvolveArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Variant name taken as the starting point of the comparison.
    #[arg(long, value_name = "NAME")]
    initial: String,

    /// Variant name taken as the end point of the comparison.
    #[arg(long, value_name = "NAME")]
    current: String,

    /// Identifier kind to classify: packages, classes, attributes, methods, or all.
    #[arg(long, value_name = "KIND", default_value = "all")]
    kind: KindFilter,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Ground-truth file to evaluate against; its header names the map kind.
    /// Repeatable.
    #[arg(long = "truth", value_name = "FILE", required = true)]
    truths: Vec<PathBuf>,

    /// Fail (exit 1) when any precision, recall, or f-measure drops below
    /// this threshold.
    #[arg(long, value_name = "VALUE", default_value_t = 0.0)]
    min: f64,
}

/// A command-line mistake, as opposed to a failure while doing the work.
/// Reported with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(message.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Parse(args) => cmd_parse(args),
        Command::Map(args) => cmd_map(args),
        Command::Evolve(args) => cmd_evolve(args),
        Command::Eval(args) => cmd_eval(args),
    }
}

/// One `--variant NAME=PATH` occurrence, validated.
struct VariantInput {
    name: String,
    path: PathBuf,
}

fn parse_variant_spec(spec: &str) -> Result<VariantInput> {
    let (name, path) = spec
        .split_once('=')
        .ok_or_else(|| usage(format!("variant `{spec}` is not of the form NAME=PATH")))?;
    if name.is_empty() {
        return Err(usage(format!("variant `{spec}` has an empty name")));
    }
    if name.contains(['/', '\\']) {
        return Err(usage(format!(
            "variant name `{name}` cannot contain path separators"
        )));
    }
    if path.is_empty() {
        return Err(usage(format!("variant `{spec}` has an empty path")));
    }
    Ok(VariantInput {
        name: name.to_string(),
        path: PathBuf::from(path),
    })
}

fn collect_variants(specs: &[String], at_least: usize) -> Result<Vec<VariantInput>> {
    let inputs: Vec<VariantInput> = specs
        .iter()
        .map(|spec| parse_variant_spec(spec))
        .collect::<Result<_>>()?;
    if inputs.len() < at_least {
        return Err(usage(format!(
            "at least {at_least} --variant inputs are required, got {}",
            inputs.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for input in &inputs {
        if !seen.insert(&input.name) {
            return Err(usage(format!(
                "variant name `{}` is given more than once",
                input.name
            )));
        }
    }
    Ok(inputs)
}

fn report_diagnostics(diagnostics: &[Diagnostic]) {
    for diagnostic in diagnostics {
        eprintln!("{diagnostic}");
    }
}

/// Loads a variant from either a source directory (parsed) or an XML code
/// model file (deserialized). The command-line name wins over the name
/// stored in the file, so renamed inputs stay consistent.
fn load_model(input: &VariantInput) -> Result<CodeModel> {
    if input.path.is_file() {
        let text = fs::read_to_string(&input.path)
            .with_context(|| format!("reading `{}`", input.path.display()))?;
        let model = read_xml(&text)
            .with_context(|| format!("parsing code model `{}`", input.path.display()))?;
        if model.variant_name() == input.name {
            return Ok(model);
        }
        let renamed = CodeModel::new(
            &input.name,
            model.identifiers().iter().cloned(),
            model.inheritance().iter().cloned(),
            model.source_stats().loc,
        )?;
        Ok(renamed)
    } else {
        let (model, diagnostics) = extract_variant(&input.path, &input.name)?;
        report_diagnostics(&diagnostics);
        Ok(model)
    }
}

fn load_models(inputs: &[VariantInput]) -> Result<Vec<CodeModel>> {
    inputs.iter().map(load_model).collect()
}

fn ensure_out_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)
        .with_context(|| format!("creating output directory `{}`", dir.display()))
}

fn write_output(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).with_context(|| format!("writing `{}`", path.display()))
}

fn cmd_parse(args: ParseArgs) -> Result<()> {
    let inputs = collect_variants(&args.input.variants, 1)?;
    ensure_out_dir(&args.input.out)?;
    for input in &inputs {
        let (model, diagnostics) = extract_variant(&input.path, &input.name)?;
        report_diagnostics(&diagnostics);
        if model.identifiers().is_empty() {
            eprintln!(
                "warning: no Java sources found under `{}`; the model is empty",
                input.path.display()
            );
        }
        let file = args
            .input
            .out
            .join(format!("{}.codemodel.xml", input.name));
        write_output(&file, &write_xml(&model))?;
        println!("wrote {}", file.display());
    }
    Ok(())
}

fn cmd_map(args: MapArgs) -> Result<()> {
    let inputs = collect_variants(&args.input.variants, 2)?;
    let models = load_models(&inputs)?;
    ensure_out_dir(&args.input.out)?;
    let names: Vec<String> = models
        .iter()
        .map(|m| m.variant_name().to_string())
        .collect();
    let max_labels = (args.max_labels > 0).then_some(args.max_labels);

    let mut maps = Vec::new();
    for filter in KindFilter::ALL_MAPS {
        let started = Instant::now();
        let ctx = build_context(&models, filter)?;
        let poset = build_aoc_poset(&ctx);
        let map = extract_map(&poset, filter, &names)?;
        if args.timing {
            println!(
                "{}: {:.1} ms",
                filter.name(),
                started.elapsed().as_secs_f64() * 1000.0
            );
        }
        let options = RenderOptions {
            show_qualified_names: !args.simple_names,
            max_labels_per_concept: max_labels,
            kind: filter,
        };
        write_output(
            &args.input.out.join(format!("{}.dot", filter.name())),
            &to_dot(&poset, &options),
        )?;
        write_output(
            &args.input.out.join(format!("{}.json", filter.name())),
            &to_json(&map),
        )?;
        maps.push(map);
    }

    let evolution = (models.len() == 2)
        .then(|| classify_evolution(&models[0], &models[1], KindFilter::All));
    let stats = corpus_stats(&models, &maps);
    write_output(
        &args.input.out.join("report.txt"),
        &to_text_report(&maps, evolution.as_ref(), &stats, &[]),
    )?;
    Ok(())
}

fn cmd_evolve(args: EvolveArgs) -> Result<()> {
    let inputs = collect_variants(&args.input.variants, 2)?;
    if inputs.len() != 2 {
        return Err(usage(format!(
            "evolve compares exactly two variants, got {}",
            inputs.len()
        )));
    }
    if args.initial == args.current {
        return Err(usage(
            "--initial and --current must name different variants",
        ));
    }
    let find = |name: &str| {
        inputs
            .iter()
            .position(|input| input.name == name)
            .ok_or_else(|| usage(format!("`{name}` is not one of the --variant names")))
    };
    let initial_idx = find(&args.initial)?;
    let _ = find(&args.current)?;

    let mut models = load_models(&inputs)?;
    if initial_idx != 0 {
        models.swap(0, 1);
    }
    let report = classify_evolution(&models[0], &models[1], args.kind);

    ensure_out_dir(&args.input.out)?;
    write_output(
        &args.input.out.join("evolution.json"),
        &evolution_to_json(&report),
    )?;
    let stats = corpus_stats(&models, &[]);
    write_output(
        &args.input.out.join("evolution.txt"),
        &to_text_report(&[], Some(&report), &stats, &[]),
    )?;
    println!(
        "{}: {} added, {} removed, {} unchanged",
        report.kind,
        report.added.len(),
        report.removed.len(),
        report.unchanged.len()
    );
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let inputs = collect_variants(&args.input.variants, 2)?;
    let models = load_models(&inputs)?;
    let names: Vec<String> = models
        .iter()
        .map(|m| m.variant_name().to_string())
        .collect();

    let mut maps = Vec::new();
    for filter in KindFilter::ALL_MAPS {
        let ctx = build_context(&models, filter)?;
        let poset = build_aoc_poset(&ctx);
        maps.push(extract_map(&poset, filter, &names)?);
    }

    let mut reports: Vec<MetricsReport> = Vec::new();
    for truth_path in &args.truths {
        let text = fs::read_to_string(truth_path)
            .with_context(|| format!("reading `{}`", truth_path.display()))?;
        let truth = GroundTruth::parse(&text)
            .map_err(|err| anyhow!("{}: {err}", truth_path.display()))?;
        let map = maps
            .iter()
            .find(|m| m.kind == truth.kind)
            .expect("every map kind is built");
        let report = evaluate_map(map, &truth)
            .map_err(|err| anyhow!("{}: {err}", truth_path.display()))?;
        println!(
            "map {}: precision {:.3}, recall {:.3}, f-measure {:.3}",
            report.kind, report.precision, report.recall, report.f_measure
        );
        reports.push(report);
    }

    ensure_out_dir(&args.input.out)?;
    write_output(
        &args.input.out.join("metrics.json"),
        &metrics_to_json(&reports),
    )?;

    let mut below = Vec::new();
    for report in &reports {
        for (metric, value) in [
            ("precision", report.precision),
            ("recall", report.recall),
            ("f-measure", report.f_measure),
        ] {
            if value < args.min {
                below.push(format!("{} {metric} {value:.3}", report.kind));
            }
        }
    }
    if !below.is_empty() {
        bail!(
            "metrics below threshold {:.3}: {}",
            args.min,
            below.join(", ")
        );
    }
    Ok(())
}
