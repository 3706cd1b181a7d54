use std::io::Write;
use std::path::Path;

use daa_core::spectra::SpectralReport;
use daa_core::{
    check_full_cover, check_latin, check_magic, check_pandiagonal, check_semi_magic, compound,
    conjugate, fixture, fixture_names, gap_table, shuffle_permutation, CompoundRecipe, IntTensor,
    PropertyReport, Variant,
};
use num_bigint::BigInt;
use serde::Serialize;

use crate::document::{resolve, write_document, RecipeEcho, TensorDocument};
use crate::error::CliError;

pub type Outcome = Result<(), CliError>;

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Outcome {
    writeln!(out, "{text}").map_err(|e| CliError::Input(format!("cannot write output: {e}")))
}

fn store(out: &mut dyn Write, path: Option<&Path>, doc: &TensorDocument) -> Outcome {
    match path {
        Some(p) => {
            write_document(p, doc)?;
            emit(out, format!("wrote {}", p.display()))
        }
        None => emit(out, doc.to_json()),
    }
}

/// `D` when both seeds cover `0..n^D`, otherwise 1.
fn default_k(a: &IntTensor, b: &IntTensor) -> Result<u32, CliError> {
    let d = a.dims();
    let full = check_full_cover(a, d)?.holds() && check_full_cover(b, d)?.holds();
    Ok(if full { d as u32 } else { 1 })
}

fn require_cover(seed: &IntTensor, k: u32, label: &str) -> Outcome {
    let report = check_full_cover(seed, k as usize)?;
    match report.witness() {
        None => Ok(()),
        Some(w) => Err(CliError::Failed(format!(
            "seed {label} is not a class-{k} full cover: {w}"
        ))),
    }
}

pub struct GenArgs<'a> {
    pub seed_a: &'a str,
    pub seed_b: &'a str,
    pub variant: Variant,
    pub k: Option<u32>,
    pub out: Option<&'a Path>,
}

pub fn gen(args: &GenArgs, out: &mut dyn Write) -> Outcome {
    let a = resolve(args.seed_a)?.tensor()?;
    let b = resolve(args.seed_b)?.tensor()?;
    if a.dims() != b.dims() {
        return Err(CliError::Input(format!(
            "seeds have {} and {} axes",
            a.dims(),
            b.dims()
        )));
    }
    let k = if args.variant.is_isda() {
        let k = match args.k {
            Some(k) => k,
            None => default_k(&a, &b)?,
        };
        require_cover(&a, k, "A")?;
        require_cover(&b, k, "B")?;
        k
    } else {
        args.k.unwrap_or(0)
    };
    let c = compound(&a, &b, k, args.variant)?;
    let recipe = CompoundRecipe::for_seeds(&a, &b, k, args.variant)?
        .with_seed_names(args.seed_a, args.seed_b);
    let mut doc = TensorDocument::new(&c);
    doc.recipe = Some(RecipeEcho::from(&recipe));
    store(out, args.out, &doc)
}

pub struct AnalyzeArgs<'a> {
    pub input: &'a str,
    pub variant: Option<Variant>,
    pub k: Option<u32>,
    pub seed_a: Option<&'a str>,
    pub seed_b: Option<&'a str>,
    pub json: bool,
}

/// Recipe and seeds for a prediction check: flags first, then the echo.
fn prediction_inputs(
    args: &AnalyzeArgs,
    doc: &TensorDocument,
) -> Result<Option<(CompoundRecipe, IntTensor, IntTensor)>, CliError> {
    let echo = doc.recipe.as_ref();
    let echoed = echo.map(RecipeEcho::to_recipe).transpose()?;
    let variant = match (args.variant, &echoed) {
        (Some(v), _) => v,
        (None, Some(r)) => r.variant,
        (None, None) => return Ok(None),
    };
    let seed_a = args.seed_a.or(echo.and_then(|e| e.seed_a.as_deref()));
    let seed_b = args.seed_b.or(echo.and_then(|e| e.seed_b.as_deref()));
    let (Some(seed_a), Some(seed_b)) = (seed_a, seed_b) else {
        return Err(CliError::Input(
            "a prediction check needs both seeds (--seed-a, --seed-b)".into(),
        ));
    };
    let a = resolve(seed_a)?.tensor()?;
    let b = resolve(seed_b)?.tensor()?;
    let k = match (args.k, &echoed) {
        (Some(k), _) => k,
        (None, Some(r)) if args.variant.is_none() => r.k,
        _ if variant.is_isda() => default_k(&a, &b)?,
        _ => 0,
    };
    let recipe = CompoundRecipe::for_seeds(&a, &b, k, variant)?.with_seed_names(seed_a, seed_b);
    Ok(Some((recipe, a, b)))
}

#[derive(Serialize)]
struct PredictionJson {
    variant: String,
    k: u32,
    m: usize,
    n: usize,
    eigen_match: bool,
    singular_match: bool,
}

#[derive(Serialize)]
struct AnalyzeJson {
    order: usize,
    line_sum: Option<i128>,
    rank: usize,
    /// Ascending coefficients, as decimal strings.
    charpoly: Vec<String>,
    gramian_charpoly: Vec<String>,
    squared_singular_values: Option<Vec<String>>,
    r_index: Option<String>,
    prediction: Option<PredictionJson>,
}

fn decimal(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn joined(values: &[BigInt]) -> String {
    decimal(values).join(" ")
}

fn approx(re: f64, im: f64) -> String {
    let clean = |x: f64| if x.abs() < 1e-9 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.4}")
    } else {
        format!("{re:.4}{:+.4}i", im)
    }
}

fn report_text(report: &SpectralReport) -> String {
    let mut lines = vec![format!("order: {}", report.order)];
    lines.push(match report.line_sum {
        Some(s) => format!("line sum: {s}"),
        None => "line sum: none (not semi-magic)".into(),
    });
    lines.push(format!("rank: {}", report.rank));
    lines.push(format!("charpoly: {}", report.charpoly));
    lines.push(format!(
        "charpoly coefficients (ascending): {}",
        joined(report.charpoly.coeffs())
    ));
    let eigen: Vec<String> = report
        .charpoly
        .approximate_roots()
        .iter()
        .map(|z| approx(z.re, z.im))
        .collect();
    lines.push(format!("eigenvalues (approx.): {}", eigen.join(", ")));
    lines.push(format!("Gramian charpoly: {}", report.gramian_charpoly));
    lines.push(match &report.squared_singular_values {
        Some(v) => format!("squared singular values: {}", joined(v)),
        None => "squared singular values: Gramian charpoly does not split over the integers".into(),
    });
    lines.push(match &report.r_index {
        Some(r) => format!("R index: {r}"),
        None => "R index: unavailable".into(),
    });
    if let Some((recipe, verdict)) = &report.prediction {
        let word = |ok: bool| if ok { "match" } else { "MISMATCH" };
        lines.push(format!(
            "prediction ({}, k={}, m={}, n={}): eigenvalues {}, singular values {}",
            recipe.variant,
            recipe.k,
            recipe.m,
            recipe.n,
            word(verdict.eigen_match),
            word(verdict.singular_match)
        ));
    }
    lines.join("\n")
}

fn report_json(report: &SpectralReport) -> String {
    let json = AnalyzeJson {
        order: report.order,
        line_sum: report.line_sum,
        rank: report.rank,
        charpoly: decimal(report.charpoly.coeffs()),
        gramian_charpoly: decimal(report.gramian_charpoly.coeffs()),
        squared_singular_values: report.squared_singular_values.as_deref().map(decimal),
        r_index: report.r_index.as_ref().map(BigInt::to_string),
        prediction: report.prediction.as_ref().map(|(r, v)| PredictionJson {
            variant: r.variant.name().to_string(),
            k: r.k,
            m: r.m,
            n: r.n,
            eigen_match: v.eigen_match,
            singular_match: v.singular_match,
        }),
    };
    serde_json::to_string_pretty(&json).expect("report serializes")
}

pub fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Outcome {
    let doc = resolve(args.input)?;
    let m = doc.tensor()?;
    let mut report = SpectralReport::analyze(&m)?;
    if let Some((recipe, a, b)) = prediction_inputs(args, &doc)? {
        report = report.with_prediction(&m, &a, &b, &recipe)?;
    }
    if args.json {
        emit(out, report_json(&report))?;
    } else {
        emit(out, report_text(&report))?;
    }
    if report.r_index.is_none() {
        return Err(CliError::Input(
            "R index needs a non-negative semi-magic matrix".into(),
        ));
    }
    match &report.prediction {
        Some((_, verdict)) if !verdict.holds() => Err(CliError::Failed(
            "spectra do not match the prediction".into(),
        )),
        _ => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PropertyArg {
    #[value(name = "semimagic")]
    SemiMagic,
    Magic,
    Latin,
    DiagonalLatin,
    #[value(name = "fullcover")]
    FullCover,
    Pandiagonal,
}

pub fn verify(input: &str, property: PropertyArg, k: Option<u32>, out: &mut dyn Write) -> Outcome {
    let t = resolve(input)?.tensor()?;
    let report: PropertyReport = match property {
        PropertyArg::SemiMagic => check_semi_magic(&t),
        PropertyArg::Magic => check_magic(&t),
        PropertyArg::Latin => check_latin(&t, false),
        PropertyArg::DiagonalLatin => check_latin(&t, true),
        PropertyArg::FullCover => check_full_cover(&t, k.map_or(t.dims(), |k| k as usize))?,
        PropertyArg::Pandiagonal => check_pandiagonal(&t)?,
    };
    emit(out, &report)?;
    if report.holds() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{} does not hold",
            report.property()
        )))
    }
}

pub fn catalog(order: Option<usize>, dump: Option<&str>, out: &mut dyn Write) -> Outcome {
    if let Some(name) = dump {
        let entry = fixture(name)?;
        let mut doc = TensorDocument::new(&entry.tensor);
        doc.name = Some(entry.name.to_string());
        return emit(out, doc.to_json());
    }
    let fixtures: Vec<_> = fixture_names()
        .into_iter()
        .map(|n| fixture(n).expect("listed fixture"))
        .filter(|e| order.is_none_or(|o| e.tensor.side() == o))
        .collect();
    let rows: Vec<_> = gap_table()
        .into_iter()
        .filter(|r| order.is_none_or(|o| r.order == o))
        .collect();
    if fixtures.is_empty() && rows.is_empty() {
        return emit(out, format!("no entries for order {}", order.unwrap_or(0)));
    }
    if !fixtures.is_empty() {
        emit(out, "fixtures:")?;
        for e in &fixtures {
            emit(
                out,
                format!(
                    "  {:<16} {}-D order {:<3} {:<12} {}",
                    e.name,
                    e.tensor.dims(),
                    e.tensor.side(),
                    e.profile,
                    e.provenance
                ),
            )?;
        }
    }
    if !rows.is_empty() {
        emit(out, "GAP pairs:")?;
        for row in &rows {
            emit(
                out,
                format!(
                    "  order {}: C_mn={}, {} pair(s)",
                    row.order,
                    row.compound_count,
                    row.pairs.len()
                ),
            )?;
            for entry in &row.pairs {
                emit(out, format!("    {} + {}", entry.pair.0, entry.pair.1))?;
            }
        }
    }
    Ok(())
}

pub fn shuffle(input: &str, m: usize, dest: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let t = resolve(input)?.tensor()?;
    if m == 0 || t.side() % m != 0 {
        return Err(CliError::Input(format!(
            "group size {m} does not divide side {}",
            t.side()
        )));
    }
    let sigma = shuffle_permutation(m, t.side() / m)?;
    store(out, dest, &TensorDocument::new(&conjugate(&t, &sigma)?))
}
