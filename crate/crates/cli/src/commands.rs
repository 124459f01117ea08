use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use smellwatt::catalog::{catalog, SmellKind};
use smellwatt::detector::{self, LanguageFlavor, SmellInstance};
use smellwatt::impact::{
    additivity_report, export_impact_csv, ingest_batch_csv, ingest_impact_csv, parse_batch_csv,
    parse_impact_csv, validate_batches, AppCategory, ImpactDataset, ImpactRecord,
};
use smellwatt::plan::{plan_batch, DatasetSource, ImpactSource, ModelSource, Objective};
use smellwatt::predictor::{
    evaluate, ga_select, ingest_examples_csv, train_with_features, FeatureVector, ModelKind,
    Resource, TrainedModel,
};
use smellwatt::profiler::{
    self, measure_repetitions, normalize_per_instance, relative_change, summarize, RunSeries,
    RunSpec,
};
use smellwatt::report::{emit_report, ReportFormat, Reportable};
use smellwatt::{fixtures, predictor};

use crate::args::{
    AdditivityArgs, BenchArgs, CatalogAction, CatalogArgs, Cli, Command, DetectArgs, EvaluateArgs,
    PlanArgs, PredictArgs, ProfileArgs, ReportArgs, TrainArgs,
};
use crate::config::{self, pick, FileConfig};
use crate::subject;

/// Marker carried in an error chain when a subject failed while being
/// profiled, as opposed to the invocation itself being invalid.
#[derive(Debug)]
pub struct SubjectFailure;

impl fmt::Display for SubjectFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("subject profiling failed")
    }
}

impl std::error::Error for SubjectFailure {}

/// 2 for an invalid invocation, 3 when a subject failed under measurement.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    // downcast_ref sees through context layers; chain() reaches the root
    // cause when the marker or profiler error sits below other contexts.
    if err.downcast_ref::<SubjectFailure>().is_some() {
        return 3;
    }
    for cause in err.chain() {
        if let Some(p) = cause.downcast_ref::<profiler::ProfilerError>() {
            return match p {
                profiler::ProfilerError::BadSpec(_) | profiler::ProfilerError::NoInstances => 2,
                _ => 3,
            };
        }
    }
    2
}

struct Globals {
    seed: u64,
    out: Option<PathBuf>,
    format: Option<String>,
}

pub fn dispatch(cli: Cli) -> Result<()> {
    let cfg = config::load(cli.config.as_deref())?;
    let globals = Globals {
        seed: pick(cli.seed, cfg.seed).unwrap_or(0),
        out: pick(cli.out, cfg.out.clone()),
        format: pick(cli.format, cfg.format.clone()),
    };
    match cli.command {
        Command::Detect(args) => cmd_detect(args, &cfg, &globals),
        Command::Profile(args) => cmd_profile(args, &cfg, &globals),
        Command::Bench(args) => cmd_bench(args, &cfg, &globals),
        Command::Additivity(args) => cmd_additivity(args, &cfg, &globals),
        Command::Train(args) => cmd_train(args, &cfg, &globals),
        Command::Predict(args) => cmd_predict(args, &cfg, &globals),
        Command::Evaluate(args) => cmd_evaluate(args, &cfg, &globals),
        Command::Plan(args) => cmd_plan(args, &cfg, &globals),
        Command::Report(args) => cmd_report(args, &cfg, &globals),
        Command::Catalog(args) => cmd_catalog(args, &globals),
        Command::Subject(args) => subject::run(&args),
    }
}

/// Writes the primary output to `--out` when given, else to stdout.
fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text)
                .with_context(|| format!("cannot write {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {what} {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("invalid {what} in {}", path.display()))
}

fn to_pretty_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Rejects `--format` values other than json for commands with one shape.
fn json_only(format: Option<&str>, command: &str) -> Result<()> {
    match format {
        None | Some("json") => Ok(()),
        Some(other) => bail!("`{command}` emits json only, not `{other}`"),
    }
}

fn report_format(format: Option<&str>) -> Result<ReportFormat> {
    match format {
        None => Ok(ReportFormat::Json),
        Some(name) => Ok(name.parse::<ReportFormat>()?),
    }
}

fn parse_flavor(name: &str) -> Result<LanguageFlavor> {
    match name {
        "java" => Ok(LanguageFlavor::JavaLike),
        "python" => Ok(LanguageFlavor::PythonLike),
        other => bail!("unknown language `{other}` (expected java or python)"),
    }
}

fn cmd_detect(args: DetectArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    json_only(globals.format.as_deref(), "detect")?;
    let paths = if args.paths.is_empty() {
        cfg.detect.path.clone()
    } else {
        args.paths
    };
    if paths.is_empty() {
        bail!("no input paths; pass --path or set [detect] path in the config");
    }
    let lang = pick(args.lang, cfg.detect.lang.clone()).unwrap_or_else(|| "java".to_string());
    let flavor = parse_flavor(&lang)?;
    let rules = cfg.rules.clone().unwrap_or_default();

    let corpus = detector::ingest_corpus(&paths, flavor)?;
    for skipped in &corpus.skipped {
        eprintln!("skipped {}: {}", skipped.path, skipped.reason);
    }
    let smells = detector::detect_smells(&corpus, &rules)?;
    eprintln!(
        "{} units scanned, {} smell instances",
        corpus.units.len(),
        smells.len()
    );

    let emit = pick(args.emit, cfg.detect.emit.clone()).unwrap_or_else(|| "instances".to_string());
    let json = match emit.as_str() {
        "instances" => to_pretty_json(&smells)?,
        "features" => {
            let category = pick(args.category, cfg.detect.category.clone())
                .context("--category is required when emitting features")?
                .parse::<AppCategory>()?;
            let metrics = detector::compute_metrics(&corpus);
            let features = predictor::build_feature_vector(&metrics, &smells, category);
            to_pretty_json(&features)?
        }
        other => bail!("unknown emit target `{other}` (expected instances or features)"),
    };
    write_output(globals.out.as_deref(), &json)
}

fn build_run_spec(
    cmd: &str,
    interval_ms: Option<u64>,
    reps: Option<usize>,
    duration: Option<f64>,
    warmup: Option<f64>,
) -> Result<RunSpec> {
    let argv: Vec<String> = cmd.split_whitespace().map(String::from).collect();
    if argv.is_empty() {
        bail!("subject command is empty");
    }
    let mut spec = RunSpec::new(argv);
    if let Some(v) = interval_ms {
        spec.sample_interval_ms = v;
    }
    if let Some(v) = reps {
        spec.repetitions = v;
    }
    if let Some(v) = duration {
        spec.duration_limit = v;
    }
    if let Some(v) = warmup {
        spec.warmup_discard = v;
    }
    spec.validate()?;
    Ok(spec)
}

fn samples_csv(series: &[RunSeries]) -> String {
    let mut out = String::from("run_id,t_ms,cpu_pct,rss_bytes\n");
    for (index, run) in series.iter().enumerate() {
        for sample in &run.samples {
            out.push_str(&format!(
                "{},{},{},{}\n",
                index + 1,
                sample.t_ms,
                sample.cpu_pct,
                sample.rss_bytes
            ));
        }
    }
    out
}

/// Fails with the subject-failure marker when any repetition exited nonzero.
fn check_subject_exits(series: &[RunSeries]) -> Result<()> {
    if let Some(bad) = series.iter().find(|s| s.exit_status != 0) {
        return Err(anyhow!("run {} exited with status {}", bad.spec_id, bad.exit_status)
            .context(SubjectFailure));
    }
    Ok(())
}

fn cmd_profile(args: ProfileArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    json_only(globals.format.as_deref(), "profile")?;
    let cmd = pick(args.cmd, cfg.profile.cmd.clone())
        .context("--cmd is required (the subject command line)")?;
    let spec = build_run_spec(
        &cmd,
        pick(args.interval_ms, cfg.profile.interval_ms),
        pick(args.reps, cfg.profile.reps),
        pick(args.duration, cfg.profile.duration),
        pick(args.warmup, cfg.profile.warmup),
    )?;

    eprintln!(
        "profiling `{cmd}`: {} runs, {} ms sampling",
        spec.repetitions, spec.sample_interval_ms
    );
    let series = measure_repetitions(&spec)?;
    for run in &series {
        eprintln!(
            "  {}: {} samples, exit {}",
            run.spec_id,
            run.samples.len(),
            run.exit_status
        );
    }

    // Samples are persisted even when a run failed, so the evidence survives.
    if let Some(path) = globals.out.as_deref() {
        fs::write(path, samples_csv(&series))
            .with_context(|| format!("cannot write {}", path.display()))?;
        eprintln!("wrote {}", path.display());
    }
    check_subject_exits(&series)?;

    let summary = summarize(&series)?;
    print!("{}", to_pretty_json(&summary)?);
    Ok(())
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct BenchManifest {
    interval_ms: Option<u64>,
    reps: Option<usize>,
    duration: Option<f64>,
    warmup: Option<f64>,
    #[serde(rename = "pair")]
    pairs: Vec<BenchPair>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BenchPair {
    app: String,
    category: String,
    kind: String,
    instances: u64,
    before: String,
    after: String,
}

fn cmd_bench(args: BenchArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    let manifest_path = pick(args.manifest, cfg.bench.manifest.clone())
        .context("--manifest is required (TOML listing before/after pairs)")?;
    let text = fs::read_to_string(&manifest_path)
        .with_context(|| format!("cannot read manifest {}", manifest_path.display()))?;
    let manifest: BenchManifest = toml::from_str(&text)
        .with_context(|| format!("invalid manifest {}", manifest_path.display()))?;
    if manifest.pairs.is_empty() {
        bail!("manifest lists no [[pair]] entries");
    }

    let mut records = Vec::with_capacity(manifest.pairs.len());
    for pair in &manifest.pairs {
        let category: AppCategory = pair.category.parse()?;
        let kind: SmellKind = pair.kind.parse()?;

        let measure = |label: &str, cmd: &str| -> Result<_> {
            let spec = build_run_spec(
                cmd,
                manifest.interval_ms,
                manifest.reps,
                manifest.duration,
                manifest.warmup,
            )?;
            eprintln!("{} / {}: measuring {label} `{cmd}`", pair.app, pair.kind);
            let series = measure_repetitions(&spec)?;
            check_subject_exits(&series)?;
            Ok(summarize(&series)?)
        };
        let before = measure("before", &pair.before)?;
        let after = measure("after", &pair.after)?;
        let delta = relative_change(&before, &after)?;
        let per_instance = if pair.instances > 0 {
            Some(normalize_per_instance(&delta, pair.instances as usize)?)
        } else {
            None
        };
        records.push(ImpactRecord {
            app: pair.app.clone(),
            category,
            kind,
            instance_count: Some(pair.instances),
            dcpu_total_pct: Some(delta.dcpu_pct),
            dmem_total_pct: Some(delta.dmem_pct),
            dcpu_per_instance: per_instance.as_ref().map(|p| p.dcpu_per_instance),
            dmem_per_instance: per_instance.as_ref().map(|p| p.dmem_per_instance),
        });
    }

    let dataset = ImpactDataset::from_records(records)?;
    let text = match globals.format.as_deref() {
        None => export_impact_csv(&dataset),
        Some(name) => emit_report(Reportable::Dataset(&dataset), name.parse::<ReportFormat>()?)?,
    };
    write_output(globals.out.as_deref(), &text)
}

fn cmd_additivity(args: AdditivityArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    let dataset = match pick(args.individual, cfg.additivity.individual.clone()) {
        Some(path) => ingest_impact_csv(&path)?,
        None => parse_impact_csv(fixtures::individual_impacts_csv())?,
    };
    let batches = match pick(args.batches, cfg.additivity.batches.clone()) {
        Some(path) => ingest_batch_csv(&path)?,
        None => parse_batch_csv(fixtures::batch_impacts_csv())?,
    };
    let batches = validate_batches(batches)?;
    let report = additivity_report(&dataset, &batches)?;
    eprintln!(
        "{} batches checked: mean |deviation| CPU {:.2} pp, memory {:.2} pp",
        report.rows.len(),
        report.cpu.mean,
        report.mem.mean
    );
    let text = emit_report(
        Reportable::Additivity(&report),
        report_format(globals.format.as_deref())?,
    )?;
    write_output(globals.out.as_deref(), &text)
}

fn cmd_train(args: TrainArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    json_only(globals.format.as_deref(), "train")?;
    let family: ModelKind = pick(args.model, cfg.train.model.clone())
        .context("--model is required (linear, polynomial, lasso, random-forest, or ann)")?
        .parse()?;
    let dataset_path = pick(args.dataset, cfg.train.dataset.clone())
        .context("--dataset is required (labeled impact-prediction CSV)")?;
    let target: Resource = pick(args.target, cfg.train.target.clone())
        .unwrap_or_else(|| "cpu".to_string())
        .parse()?;
    let data = ingest_examples_csv(&dataset_path)?;
    let training = cfg.training.clone().unwrap_or_default();

    let explicit = pick(args.features, cfg.train.features.clone());
    let ga_requested = args.ga_select || cfg.train.ga_select.unwrap_or(false);
    let features: Vec<String> = if ga_requested {
        let candidates = explicit.unwrap_or_else(FeatureVector::feature_names);
        let ga_cfg = cfg.ga.unwrap_or_default();
        let subset = ga_select(&data, &candidates, family, &training, &ga_cfg, globals.seed)?;
        eprintln!(
            "selected {} of {} candidate features (cv score {:.6})",
            subset.features.len(),
            candidates.len(),
            subset.fitness
        );
        subset.features
    } else {
        explicit.unwrap_or_else(FeatureVector::feature_names)
    };

    let model =
        train_with_features(&data, &features, family, &training, globals.seed).map_err(|e| {
            let hint = matches!(e, predictor::PredictError::RankDeficient);
            let err = anyhow!(e);
            if hint {
                err.context(
                    "feature set is collinear on this dataset; \
                     pass --features with a smaller set or use --ga-select",
                )
            } else {
                err
            }
        })?;

    let mut predictions = Vec::with_capacity(data.len());
    let mut truths = Vec::with_capacity(data.len());
    for example in &data {
        let p = model.predict(&example.features)?;
        predictions.push(match target {
            Resource::Cpu => p.dcpu_pct,
            Resource::Mem => p.dmem_pct,
        });
        truths.push(match target {
            Resource::Cpu => example.target_dcpu_pct,
            Resource::Mem => example.target_dmem_pct,
        });
    }
    let metrics = evaluate(&predictions, &truths)?;
    eprintln!(
        "trained {family} on {} examples, {} features; training {target} mse {:.6}, rmse {:.6}",
        data.len(),
        features.len(),
        metrics.mse,
        metrics.rmse
    );

    write_output(globals.out.as_deref(), &to_pretty_json(&model)?)
}

fn cmd_predict(args: PredictArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    json_only(globals.format.as_deref(), "predict")?;
    let model_path = pick(args.model, cfg.predict.model.clone())
        .context("--model is required (model JSON from `train`)")?;
    let features_path = pick(args.features, cfg.predict.features.clone())
        .context("--features is required (feature-vector JSON)")?;
    let model: TrainedModel = read_json(&model_path, "model")?;
    let features: FeatureVector = read_json(&features_path, "feature vector")?;
    let prediction = model.predict(&features)?;
    write_output(globals.out.as_deref(), &to_pretty_json(&prediction)?)
}

fn cmd_evaluate(args: EvaluateArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    json_only(globals.format.as_deref(), "evaluate")?;
    let model_path = pick(args.model, cfg.evaluate.model.clone())
        .context("--model is required (model JSON from `train`)")?;
    let dataset_path = pick(args.dataset, cfg.evaluate.dataset.clone())
        .context("--dataset is required (labeled holdout CSV)")?;
    let target: Resource = pick(args.target, cfg.evaluate.target.clone())
        .unwrap_or_else(|| "cpu".to_string())
        .parse()?;
    let model: TrainedModel = read_json(&model_path, "model")?;
    let data = ingest_examples_csv(&dataset_path)?;

    let mut predictions = Vec::with_capacity(data.len());
    let mut truths = Vec::with_capacity(data.len());
    for example in &data {
        let p = model.predict(&example.features)?;
        predictions.push(match target {
            Resource::Cpu => p.dcpu_pct,
            Resource::Mem => p.dmem_pct,
        });
        truths.push(match target {
            Resource::Cpu => example.target_dcpu_pct,
            Resource::Mem => example.target_dmem_pct,
        });
    }
    let metrics = evaluate(&predictions, &truths)?;
    eprintln!("{} holdout examples, target {target}", data.len());
    write_output(globals.out.as_deref(), &to_pretty_json(&metrics)?)
}

fn cmd_plan(args: PlanArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    let inventory_path = pick(args.inventory, cfg.plan.inventory.clone())
        .context("--inventory is required (smell instances JSON from `detect`)")?;
    let inventory: Vec<SmellInstance> = read_json(&inventory_path, "smell inventory")?;

    let mut objective: Objective = pick(args.objective, cfg.plan.objective.clone())
        .context(
            "--objective is required (minimize-both, cpu-only, memory-only, \
             or maintainability-first)",
        )?
        .parse()?;
    if let Some(budget) = pick(args.budget, cfg.plan.budget) {
        match objective {
            Objective::CpuOnly { .. } => objective = Objective::CpuOnly { budget: Some(budget) },
            _ => bail!("--budget applies only to the cpu-only objective"),
        }
    }

    let category = pick(args.category, cfg.plan.category.clone())
        .map(|s| s.parse::<AppCategory>())
        .transpose()?;
    let dataset: Option<ImpactDataset> = pick(args.dataset, cfg.plan.dataset.clone())
        .map(|p| ingest_impact_csv(&p))
        .transpose()?;
    if category.is_some() && dataset.is_none() {
        bail!("--category requires --dataset");
    }

    let model_path = pick(args.model, cfg.plan.model.clone());
    let features_path = pick(args.features, cfg.plan.features.clone());
    let model_pair: Option<(TrainedModel, FeatureVector)> = match (model_path, features_path) {
        (Some(m), Some(f)) => Some((read_json(&m, "model")?, read_json(&f, "feature vector")?)),
        (None, None) => None,
        _ => bail!("--model and --features must be given together"),
    };

    let source = ImpactSource {
        dataset: dataset
            .as_ref()
            .map(|d| DatasetSource { dataset: d, category }),
        model: model_pair
            .as_ref()
            .map(|(model, base)| ModelSource { model, base }),
    };
    let plan = plan_batch(&inventory, &source, objective)?;
    eprintln!(
        "objective {}: include {} kinds, exclude {}",
        plan.objective.mode_name(),
        plan.include.len(),
        plan.exclude.len()
    );
    let text = emit_report(
        Reportable::Plan(&plan),
        report_format(globals.format.as_deref())?,
    )?;
    write_output(globals.out.as_deref(), &text)
}

fn cmd_report(args: ReportArgs, cfg: &FileConfig, globals: &Globals) -> Result<()> {
    let input = pick(args.input, cfg.report.input.clone()).context("--input is required")?;
    let input_type = pick(args.input_type, cfg.report.input_type.clone())
        .context("--input-type is required (plan, dataset, or additivity)")?;
    let format = report_format(globals.format.as_deref())?;
    let text = match input_type.as_str() {
        "plan" => {
            let plan: smellwatt::plan::RefactoringPlan = read_json(&input, "plan")?;
            emit_report(Reportable::Plan(&plan), format)?
        }
        "dataset" => {
            let dataset = ingest_impact_csv(&input)?;
            emit_report(Reportable::Dataset(&dataset), format)?
        }
        "additivity" => {
            let report: smellwatt::impact::AdditivityReport =
                read_json(&input, "additivity report")?;
            emit_report(Reportable::Additivity(&report), format)?
        }
        other => bail!("unknown input type `{other}` (expected plan, dataset, or additivity)"),
    };
    write_output(globals.out.as_deref(), &text)
}

fn catalog_markdown() -> String {
    let mut text = String::from(
        "# Smell catalog\n\n\
         | kind | property | refactoring technique | CPU | memory |\n\
         | --- | --- | --- | --- | --- |\n",
    );
    for entry in catalog() {
        text.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            entry.kind, entry.property, entry.refactoring_technique, entry.cpu_direction,
            entry.mem_direction
        ));
    }
    text
}

fn cmd_catalog(args: CatalogArgs, globals: &Globals) -> Result<()> {
    match args.action {
        CatalogAction::Export => {
            let text = match globals.format.as_deref() {
                None | Some("json") => to_pretty_json(&catalog())?,
                Some("markdown") | Some("md") => catalog_markdown(),
                Some(other) => bail!("catalog export supports json and markdown, not `{other}`"),
            };
            write_output(globals.out.as_deref(), &text)
        }
    }
}
