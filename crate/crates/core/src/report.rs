//! Report emission: one entry point that renders a plan, an impact
//! dataset, or an additivity report as JSON, Markdown, or scatter-plot CSV.
//!
//! Output is deterministic — same object, same format, same bytes — so
//! emitted documents diff cleanly across runs.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::impact::{AdditivityReport, ImpactDataset};
use crate::plan::RefactoringPlan;

/// Supported output formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
    /// Scatter rows `dcpu,dmem,kind,app` — change in CPU usage (%) against
    /// change in memory usage (%), one point per labeled pair.
    CsvPlotdata,
}

impl ReportFormat {
    pub fn name(self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Markdown => "markdown",
            ReportFormat::CsvPlotdata => "csv-plotdata",
        }
    }
}

impl std::fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Report emission failures.
#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unsupported report format `{0}` (expected json, markdown, or csv-plotdata)")]
    UnsupportedFormat(String),
    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
    #[error("CSV writing failed: {0}")]
    Csv(#[from] csv::Error),
}

impl FromStr for ReportFormat {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            "csv-plotdata" => Ok(ReportFormat::CsvPlotdata),
            other => Err(ReportError::UnsupportedFormat(other.to_string())),
        }
    }
}

/// The objects a report can be built from.
#[derive(Debug, Clone, Copy)]
pub enum Reportable<'a> {
    Plan(&'a RefactoringPlan),
    Dataset(&'a ImpactDataset),
    Additivity(&'a AdditivityReport),
}

/// Renders the subject in the requested format. Every subject supports
/// every format; an unrecognized format name fails already in
/// [`ReportFormat::from_str`].
pub fn emit_report(subject: Reportable<'_>, format: ReportFormat) -> Result<String, ReportError> {
    match format {
        ReportFormat::Json => emit_json(subject),
        ReportFormat::Markdown => Ok(emit_markdown(subject)),
        ReportFormat::CsvPlotdata => emit_plotdata(subject),
    }
}

fn emit_json(subject: Reportable<'_>) -> Result<String, ReportError> {
    let mut text = match subject {
        Reportable::Plan(plan) => serde_json::to_string_pretty(plan)?,
        Reportable::Dataset(dataset) => serde_json::to_string_pretty(dataset)?,
        Reportable::Additivity(report) => serde_json::to_string_pretty(report)?,
    };
    text.push('\n');
    Ok(text)
}

/// Fixed-precision percent cell; absent values render as a dash.
fn cell(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.4}"),
        None => "—".to_string(),
    }
}

fn emit_markdown(subject: Reportable<'_>) -> String {
    let mut doc = String::new();
    match subject {
        Reportable::Plan(plan) => {
            let _ = writeln!(doc, "# Batch refactoring plan\n");
            let _ = writeln!(doc, "Objective: `{}`\n", plan.objective);
            let _ = writeln!(doc, "## Include\n");
            let _ = writeln!(
                doc,
                "| kind | instances | additive ΔCPU % | additive Δmem % | model ΔCPU % | model Δmem % | rationale |"
            );
            let _ = writeln!(doc, "|---|---|---|---|---|---|---|");
            for entry in &plan.include {
                let _ = writeln!(
                    doc,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    entry.kind,
                    entry.instance_count,
                    cell(entry.additive.and_then(|a| a.dcpu_total_pct)),
                    cell(entry.additive.and_then(|a| a.dmem_total_pct)),
                    cell(entry.model_delta.map(|d| d.dcpu_pct)),
                    cell(entry.model_delta.map(|d| d.dmem_pct)),
                    entry.rationale,
                );
            }
            let _ = writeln!(doc, "\n## Exclude\n");
            let _ = writeln!(doc, "| kind | instances | reason |");
            let _ = writeln!(doc, "|---|---|---|");
            for entry in &plan.exclude {
                let _ = writeln!(
                    doc,
                    "| {} | {} | {} |",
                    entry.kind, entry.instance_count, entry.rationale,
                );
            }
            let _ = writeln!(doc, "\n## Predicted impact\n");
            match plan.predicted.additive {
                Some(additive) => {
                    let _ = writeln!(
                        doc,
                        "- additive estimate: ΔCPU {} %, Δmem {} %",
                        cell(additive.dcpu_total_pct),
                        cell(additive.dmem_total_pct),
                    );
                }
                None => {
                    let _ = writeln!(doc, "- additive estimate: no impact dataset supplied");
                }
            }
            match plan.predicted.model {
                Some(model) => {
                    let _ = writeln!(
                        doc,
                        "- model prediction (per-instance normalized): ΔCPU {} %, Δmem {} %",
                        cell(Some(model.dcpu_pct)),
                        cell(Some(model.dmem_pct)),
                    );
                }
                None => {
                    let _ = writeln!(doc, "- model prediction: no model supplied");
                }
            }
        }
        Reportable::Dataset(dataset) => {
            let _ = writeln!(doc, "# Per-smell impact dataset\n");
            let _ = writeln!(doc, "{} records\n", dataset.len());
            let _ = writeln!(
                doc,
                "| app | category | kind | instances | ΔCPU total % | Δmem total % | ΔCPU/instance % | Δmem/instance % |"
            );
            let _ = writeln!(doc, "|---|---|---|---|---|---|---|---|");
            for record in dataset.records() {
                let _ = writeln!(
                    doc,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    record.app,
                    record.category,
                    record.kind,
                    record
                        .instance_count
                        .map_or("—".to_string(), |c| c.to_string()),
                    cell(record.dcpu_total_pct),
                    cell(record.dmem_total_pct),
                    cell(record.dcpu_per_instance),
                    cell(record.dmem_per_instance),
                );
            }
        }
        Reportable::Additivity(report) => {
            let _ = writeln!(doc, "# Additivity check\n");
            let _ = writeln!(
                doc,
                "| app | mode | predicted ΔCPU % | observed ΔCPU % | CPU deviation | predicted Δmem % | observed Δmem % | mem deviation |"
            );
            let _ = writeln!(doc, "|---|---|---|---|---|---|---|---|");
            for row in &report.rows {
                let _ = writeln!(
                    doc,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    row.app,
                    row.mode,
                    cell(Some(row.predicted_cpu_pct)),
                    cell(Some(row.observed_cpu_pct)),
                    cell(Some(row.cpu_deviation)),
                    cell(Some(row.predicted_mem_pct)),
                    cell(Some(row.observed_mem_pct)),
                    cell(Some(row.mem_deviation)),
                );
            }
            let _ = writeln!(doc, "\n## Deviation summary\n");
            let _ = writeln!(doc, "| resource | mean | min | max |");
            let _ = writeln!(doc, "|---|---|---|---|");
            for (name, summary) in [("cpu", &report.cpu), ("mem", &report.mem)] {
                let _ = writeln!(
                    doc,
                    "| {} | {} | {} | {} |",
                    name,
                    cell(Some(summary.mean)),
                    cell(Some(summary.min)),
                    cell(Some(summary.max)),
                );
            }
        }
    }
    doc
}

/// One scatter point: CPU delta against memory delta, labeled.
struct PlotRow {
    dcpu: f64,
    dmem: f64,
    kind: String,
    app: String,
}

fn emit_plotdata(subject: Reportable<'_>) -> Result<String, ReportError> {
    let rows: Vec<PlotRow> = match subject {
        // Dataset: one point per (app, kind) with both totals recorded.
        Reportable::Dataset(dataset) => dataset
            .records()
            .iter()
            .filter_map(|record| {
                Some(PlotRow {
                    dcpu: record.dcpu_total_pct?,
                    dmem: record.dmem_total_pct?,
                    kind: record.kind.to_string(),
                    app: record.app.clone(),
                })
            })
            .collect(),
        // Plan: one point per assessed kind with a full additive estimate;
        // the app column marks which list the kind landed in.
        Reportable::Plan(plan) => plan
            .include
            .iter()
            .map(|entry| (entry, "include"))
            .chain(plan.exclude.iter().map(|entry| (entry, "exclude")))
            .filter_map(|(entry, list)| {
                let additive = entry.additive?;
                Some(PlotRow {
                    dcpu: additive.dcpu_total_pct?,
                    dmem: additive.dmem_total_pct?,
                    kind: entry.kind.to_string(),
                    app: list.to_string(),
                })
            })
            .collect(),
        // Additivity: one point per (app, mode) at the observed batch
        // deltas; the kind column carries the batch mode.
        Reportable::Additivity(report) => report
            .rows
            .iter()
            .map(|row| PlotRow {
                dcpu: row.observed_cpu_pct,
                dmem: row.observed_mem_pct,
                kind: row.mode.to_string(),
                app: row.app.clone(),
            })
            .collect(),
    };

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["dcpu", "dmem", "kind", "app"])?;
    for row in rows {
        writer.write_record([
            row.dcpu.to_string(),
            row.dmem.to_string(),
            row.kind,
            row.app,
        ])?;
    }
    let bytes = writer.into_inner().expect("vec writer cannot fail");
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::SmellKind;
    use crate::fixtures;
    use crate::impact::{
        additivity_report, parse_batch_csv, parse_impact_csv, validate_batches,
    };
    use crate::plan::{Objective, PlanPrediction};

    fn fixture_dataset() -> ImpactDataset {
        parse_impact_csv(fixtures::individual_impacts_csv()).unwrap()
    }

    fn empty_plan() -> RefactoringPlan {
        RefactoringPlan {
            objective: Objective::MinimizeBoth,
            include: Vec::new(),
            exclude: Vec::new(),
            predicted: PlanPrediction {
                additive: None,
                model: None,
            },
        }
    }

    fn contract_plan() -> RefactoringPlan {
        use crate::detector::SmellInstance;
        use crate::plan::{plan_batch, DatasetSource, ImpactSource};
        let dataset = fixture_dataset();
        let inventory: Vec<SmellInstance> = [
            (SmellKind::GodClass, 3),
            (SmellKind::CyclicDependency, 10),
        ]
        .iter()
        .flat_map(|&(kind, n)| {
            (0..n).map(move |i| SmellInstance {
                kind,
                unit_path: "src/App.java".to_string(),
                entity_name: format!("e{i}"),
                line_span: (1, 1),
                evidence: std::collections::BTreeMap::new(),
            })
        })
        .collect();
        plan_batch(
            &inventory,
            &ImpactSource {
                dataset: Some(DatasetSource {
                    dataset: &dataset,
                    category: None,
                }),
                model: None,
            },
            Objective::MinimizeBoth,
        )
        .unwrap()
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
        assert_eq!("md".parse::<ReportFormat>().unwrap(), ReportFormat::Markdown);
        assert_eq!(
            "csv-plotdata".parse::<ReportFormat>().unwrap(),
            ReportFormat::CsvPlotdata
        );
        assert!(matches!(
            "yaml".parse::<ReportFormat>(),
            Err(ReportError::UnsupportedFormat(name)) if name == "yaml"
        ));
    }

    #[test]
    fn empty_plan_renders_in_every_format() {
        let plan = empty_plan();
        let json = emit_report(Reportable::Plan(&plan), ReportFormat::Json).unwrap();
        assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
        let markdown = emit_report(Reportable::Plan(&plan), ReportFormat::Markdown).unwrap();
        assert!(markdown.contains("## Include"));
        assert!(markdown.contains("## Exclude"));
        let plot = emit_report(Reportable::Plan(&plan), ReportFormat::CsvPlotdata).unwrap();
        assert_eq!(plot, "dcpu,dmem,kind,app\n");
    }

    #[test]
    fn plan_markdown_carries_the_exclusion_reason() {
        let plan = contract_plan();
        let markdown = emit_report(Reportable::Plan(&plan), ReportFormat::Markdown).unwrap();
        assert!(markdown.contains("worsens CPU and memory"));
        assert!(markdown.contains("| god-class | 3 |"));
        assert!(markdown.contains("| cyclic-dependency | 10 |"));
    }

    #[test]
    fn dataset_plotdata_projects_each_record_with_both_totals() {
        let dataset = fixture_dataset();
        let plot = emit_report(Reportable::Dataset(&dataset), ReportFormat::CsvPlotdata).unwrap();
        let lines: Vec<&str> = plot.lines().collect();
        assert_eq!(lines[0], "dcpu,dmem,kind,app");
        let with_both = dataset
            .records()
            .iter()
            .filter(|r| r.dcpu_total_pct.is_some() && r.dmem_total_pct.is_some())
            .count();
        assert_eq!(lines.len() - 1, with_both);
        // Spot-check one quoted pair: jstock cyclic-dependency (5.89, 6.16).
        assert!(lines.contains(&"5.89,6.16,cyclic-dependency,jstock"));
    }

    #[test]
    fn additivity_report_renders_summary_and_scatter() {
        let dataset = fixture_dataset();
        let batches =
            validate_batches(parse_batch_csv(fixtures::batch_impacts_csv()).unwrap()).unwrap();
        let report = additivity_report(&dataset, &batches).unwrap();
        let markdown =
            emit_report(Reportable::Additivity(&report), ReportFormat::Markdown).unwrap();
        assert!(markdown.contains("## Deviation summary"));
        assert!(markdown.contains("| app | mode |"));
        let plot =
            emit_report(Reportable::Additivity(&report), ReportFormat::CsvPlotdata).unwrap();
        assert_eq!(plot.lines().count(), report.rows.len() + 1);
        let json = emit_report(Reportable::Additivity(&report), ReportFormat::Json).unwrap();
        assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
    }

    #[test]
    fn emission_is_deterministic() {
        let dataset = fixture_dataset();
        for format in [ReportFormat::Json, ReportFormat::Markdown, ReportFormat::CsvPlotdata] {
            let a = emit_report(Reportable::Dataset(&dataset), format).unwrap();
            let b = emit_report(Reportable::Dataset(&dataset), format).unwrap();
            assert_eq!(a, b);
        }
    }
}
