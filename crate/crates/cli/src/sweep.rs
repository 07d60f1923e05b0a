//! `ucx verify` and `ucx scan`.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use ucx_core::cube::family_to_function;
use ucx_core::families::theorem2_quantities;
use ucx_core::format::write_family;
use ucx_core::spectral::transform;
use ucx_core::verify::{conjecture2_margin, run_sweep, Property, SweepMode, SweepPlan};
use ucx_core::{Dyadic, SetFamily};

use crate::{write_file, CliError, CliResult, Outcome, ScanArgs, ScanKind, VerifyArgs};

#[derive(Serialize)]
struct WitnessRecord<'a> {
    property: &'a str,
    n: usize,
    mode: SweepMode,
    seed: u64,
    instance_index: u64,
    detail: &'a str,
    family: &'a str,
}

fn write_witness(dir: &Path, stem: &str, record: &WitnessRecord) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })?;
    write_file(&dir.join(format!("{stem}.fam")), record.family)?;
    let json = serde_json::to_string_pretty(record).expect("witness serializes");
    write_file(&dir.join(format!("{stem}.json")), &(json + "\n"))
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn verify(property: Property, args: &VerifyArgs) -> CliResult<Outcome> {
    let plan = match (args.exhaustive, args.random) {
        (true, false) => {
            if args.samples.is_some() {
                return Err(CliError::Usage("--samples only applies to --random".into()));
            }
            SweepPlan::exhaustive(property, args.n)
        }
        (false, true) => {
            let samples = args.samples.expect("clap requires --samples with --random");
            SweepPlan::random(property, args.n, samples, args.seed)
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --exhaustive or --random is required".into(),
            ))
        }
    };
    let plan = plan.with_workers(args.workers.unwrap_or_else(default_workers));
    let report = run_sweep(&plan)?;
    println!("{}", report.summary_line());
    if let Some(path) = &args.report {
        write_file(path, &(report.to_json() + "\n"))?;
    }
    if report.passed {
        return Ok(Outcome::Clean);
    }

    for w in &report.violations {
        eprintln!("violation at instance {}: {}", w.instance_index, w.detail);
        if let Some(dir) = &args.witness_dir {
            let record = WitnessRecord {
                property: property.name(),
                n: plan.n,
                mode: plan.mode,
                seed: plan.seed,
                instance_index: w.instance_index,
                detail: &w.detail,
                family: &w.family,
            };
            let stem = format!("{}-n{}-{}", property.name(), plan.n, w.instance_index);
            write_witness(dir, &stem, &record)?;
        }
    }
    if report.violation_count > report.violations.len() as u64 {
        eprintln!(
            "{} further violations not recorded",
            report.violation_count - report.violations.len() as u64
        );
    }
    Ok(Outcome::Violated)
}

#[derive(Debug, Serialize)]
struct ScanRow {
    instance_index: u64,
    size: usize,
    mean_coefficient: Dyadic,
    quantity: Option<Dyadic>,
    bound: Option<Dyadic>,
    margin: Option<Dyadic>,
}

fn scan_row(kind: ScanKind, index: u64, family: &SetFamily) -> CliResult<ScanRow> {
    let mut row = ScanRow {
        instance_index: index,
        size: family.len(),
        mean_coefficient: transform(&family_to_function(family)).mean(),
        quantity: None,
        bound: None,
        margin: None,
    };
    match kind {
        // Empty when the family is empty or the mean coefficient is positive.
        ScanKind::Conjecture2 => {
            if !family.is_empty() {
                let c = conjecture2_margin(family)?;
                row.quantity = Some(c.positive_influence);
                row.bound = c.bound;
                row.margin = c.margin;
            }
        }
        ScanKind::Theorem2Deficiency => {
            let (deficiency, _) = theorem2_quantities(family)?;
            let cap = 1i64 << (family.n() - 1);
            row.quantity = Some(Dyadic::from_int(deficiency as i64));
            row.bound = Some(Dyadic::from_int(cap));
            row.margin = Some(Dyadic::from_int(cap - deficiency as i64));
        }
    }
    Ok(row)
}

pub fn scan(args: &ScanArgs) -> CliResult<Outcome> {
    let (property, label) = match args.kind {
        ScanKind::Conjecture2 => (Property::Conjecture2, "conjecture2"),
        ScanKind::Theorem2Deficiency => (Property::Theorem2, "theorem2-deficiency"),
    };
    let plan = SweepPlan::random(property, args.n, args.samples, args.seed);
    plan.validate()?;

    let sink: Box<dyn Write> = match &args.csv {
        Some(path) => Box::new(fs::File::create(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?),
        None => Box::new(io::stdout().lock()),
    };
    let mut writer = csv::Writer::from_writer(sink);
    let mut negative = 0u64;
    for index in 0..args.samples {
        let family = plan.instance(index);
        let row = scan_row(args.kind, index, &family)?;
        writer.serialize(&row)?;
        if row.margin.is_some_and(Dyadic::is_negative) {
            negative += 1;
            let text = write_family(&family);
            eprintln!(
                "negative margin at instance {index}: {}",
                row.margin.unwrap()
            );
            if let Some(dir) = &args.witness_dir {
                let detail = format!(
                    "quantity {} exceeds bound {}",
                    row.quantity.unwrap(),
                    row.bound.unwrap()
                );
                let record = WitnessRecord {
                    property: label,
                    n: args.n,
                    mode: SweepMode::Random,
                    seed: args.seed,
                    instance_index: index,
                    detail: &detail,
                    family: &text,
                };
                write_witness(dir, &format!("scan-{label}-n{}-{index}", args.n), &record)?;
            }
        }
    }
    writer.flush().map_err(|source| CliError::Io {
        path: args.csv.clone().unwrap_or_else(|| "<stdout>".into()),
        source,
    })?;
    Ok(if negative == 0 {
        Outcome::Clean
    } else {
        Outcome::Violated
    })
}
