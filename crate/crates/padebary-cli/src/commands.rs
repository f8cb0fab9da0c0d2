//! Implementations of the six subcommands.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;

use padebary::barycentric::{bpa_form1, bpa_form2, bpta_form1, bpta_form2};
use padebary::pade::{pade, pade_type};
use padebary::prony::pfpa;
use padebary::series::FormalPowerSeries;
use padebary::{Approximant, EvalValue};

use crate::parse::{self, RefSpec};
use crate::wire;
use crate::{ApproxKind, CliError, Command, Example, GenFunction};

/// Relative tolerance (scaled by `max|c|`) for the contact order a command
/// reports after construction.
const CONTACT_REL_TOL: f64 = 1e-8;

/// Stricter per-coefficient tolerance used when checking that a rebuilt
/// approximant still matches its own (perturbed) series.
const REBUILD_CONTACT_REL_TOL: f64 = 1e-9;

/// Error intervals reported for the original run of the perturbed tangent
/// experiment, echoed next to the achieved values for comparison.
const REFERENCE_INTERVAL_PADE: (f64, f64) = (3.5528e-5, 2.8663e4);
const REFERENCE_INTERVAL_BARY: (f64, f64) = (4.8921e-8, 1.8136e3);

fn r(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// First poles of tan(4t)/(4t): odd multiples of pi/8.
fn example1_pnodes() -> Vec<Complex64> {
    let w = std::f64::consts::PI / 8.0;
    [1.0, -1.0, 3.0, -3.0, 5.0].iter().map(|&k| r(k * w)).collect()
}

/// First zeros of tan(4t)/(4t): nonzero multiples of pi/4.
fn example1_znodes() -> Vec<Complex64> {
    let w = std::f64::consts::PI / 4.0;
    [1.0, -1.0, 3.0, -3.0, 5.0].iter().map(|&k| r(k * w)).collect()
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    let step = (b - a) / (n - 1) as f64;
    (0..n).map(|i| a + step * i as f64).collect()
}

fn reciprocals(nodes: &[Complex64]) -> Vec<Complex64> {
    nodes.iter().map(|&z| r(1.0) / z).collect()
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

fn write_file(path: &str, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Input(format!("cannot write {path}: {e}")))
}

/// Loads a series from a path, or parses it inline when the flag value
/// itself is JSON (starts with `[` or `{`).
fn load_series(arg: &str) -> Result<FormalPowerSeries, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        wire::series_from_json(arg)
    } else {
        wire::series_from_json(&read_file(arg)?)
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

/// One evaluated grid point.
struct EvalRow {
    t: f64,
    reference: Complex64,
    value: EvalValue,
}

impl EvalRow {
    fn abs_err(&self) -> f64 {
        match self.value {
            EvalValue::Finite(v) => (v - self.reference).norm(),
            EvalValue::Pole => f64::INFINITY,
        }
    }

    /// The five value columns `ref_re,ref_im,val_re,val_im,abs_err` plus the
    /// pole flag.
    fn columns(&self) -> String {
        let v = self.value.to_complex();
        format!(
            "{},{},{},{},{},{}",
            fmt(self.reference.re),
            fmt(self.reference.im),
            fmt(v.re),
            fmt(v.im),
            fmt(self.abs_err()),
            u8::from(self.value.is_pole())
        )
    }
}

fn sweep(approx: &Approximant, grid: &[f64], reference: &RefSpec) -> Vec<EvalRow> {
    grid.iter()
        .map(|&t| EvalRow {
            t,
            reference: reference.eval(t),
            value: approx.eval(r(t)),
        })
        .collect()
}

/// Smallest and largest finite absolute error over a sweep.
fn error_range(rows: &[EvalRow]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for row in rows {
        if row.value.is_pole() {
            continue;
        }
        let e = row.abs_err();
        lo = lo.min(e);
        hi = hi.max(e);
    }
    (lo, hi)
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen { function, omega, ratio, file, order, out } => {
            gen(function, omega, &ratio, file.as_deref(), order, &out)
        }
        Command::Approx { kind, series, p, q, k, b, poles, zeros, weights, out } => approx(
            kind,
            &series,
            p,
            q,
            k,
            b.as_deref(),
            poles.as_deref(),
            zeros.as_deref(),
            weights.as_deref(),
            &out,
        ),
        Command::Eval { approx, grid, reference, out } => eval(&approx, &grid, &reference, &out),
        Command::Expand { approx, order } => expand(&approx, order),
        Command::Perturb { eps, seeds, out } => perturb(eps, &seeds, &out),
        Command::Reproduce { example, out, seed, eps } => reproduce(example, &out, seed, eps),
    }
}

fn gen(
    function: GenFunction,
    omega: f64,
    ratio: &str,
    file: Option<&str>,
    order: Option<usize>,
    out: &str,
) -> Result<(), CliError> {
    let need_order =
        || order.ok_or_else(|| CliError::Input("--order is required for this function".into()));
    let series = match function {
        GenFunction::TanOverT => {
            if !omega.is_finite() {
                return Err(CliError::Input("--omega must be finite".into()));
            }
            FormalPowerSeries::tan_over_t(omega, need_order()?)
        }
        GenFunction::Log1pOverT => FormalPowerSeries::log1p_over_t(need_order()?),
        GenFunction::Exp => FormalPowerSeries::exp(need_order()?),
        GenFunction::Geometric => {
            let ratio = parse::complex_scalar(ratio)?;
            if !ratio.re.is_finite() || !ratio.im.is_finite() {
                return Err(CliError::Input("--ratio must be finite".into()));
            }
            FormalPowerSeries::geometric(ratio, need_order()?)
        }
        GenFunction::File => {
            let path = file
                .ok_or_else(|| CliError::Input("--file is required for --function file".into()))?;
            let series = wire::series_from_json(&read_file(path)?)?;
            match order {
                None => series,
                Some(n) => series.truncated(n)?,
            }
        }
    };
    write_file(out, &wire::series_to_json(&series))?;
    println!("wrote {out} (order {})", series.order());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn approx(
    kind: ApproxKind,
    series: &str,
    p: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    b: Option<&str>,
    poles: Option<&str>,
    zeros: Option<&str>,
    weights: Option<&str>,
    out: &str,
) -> Result<(), CliError> {
    let c = load_series(series)?;
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| CliError::Input(format!("--{flag} is required for this kind")))
    };
    let list = |value: Option<&str>, flag: &str| -> Result<Vec<Complex64>, CliError> {
        parse::complex_list(
            value.ok_or_else(|| CliError::Input(format!("--{flag} is required for this kind")))?,
        )
    };
    // Node counts determine the grades; explicit --p/--q must agree.
    let check_grade = |given: Option<usize>, len: usize, flag: &str| -> Result<(), CliError> {
        match given {
            Some(g) if g + 1 != len => Err(CliError::Input(format!(
                "--{flag} {g} disagrees with the supplied family of {len} entries"
            ))),
            _ => Ok(()),
        }
    };

    let approx: Approximant = match kind {
        ApproxKind::Pade => pade(&c, need(p, "p")?, need(q, "q")?)?.into(),
        ApproxKind::Pta => {
            let b = list(b, "b")?;
            check_grade(q, b.len(), "q")?;
            pade_type(&c, &b, need(p, "p")?)?.into()
        }
        ApproxKind::Bpa1 | ApproxKind::Bpa2 => {
            let pn = list(poles, "poles")?;
            let zn = list(zeros, "zeros")?;
            check_grade(p, pn.len(), "p")?;
            check_grade(q, zn.len(), "q")?;
            match kind {
                ApproxKind::Bpa1 => bpa_form1(&c, &pn, &zn)?.into(),
                _ => bpa_form2(&c, &pn, &zn)?.into(),
            }
        }
        ApproxKind::Bpta1 | ApproxKind::Bpta2 => {
            let pn = list(poles, "poles")?;
            let zn = list(zeros, "zeros")?;
            let w = list(weights, "weights")?;
            check_grade(p, pn.len(), "p")?;
            check_grade(q, zn.len(), "q")?;
            match kind {
                ApproxKind::Bpta1 => bpta_form1(&c, &w, &pn, &zn)?.into(),
                _ => bpta_form2(&c, &w, &pn, &zn)?.into(),
            }
        }
        ApproxKind::Pfpa => pfpa(&c, need(k, "k")?)?.into(),
    };

    let contact = approx.contact_order(&c, CONTACT_REL_TOL)?;
    println!("contact order: {contact}");
    write_file(out, &wire::approximant_to_json(&approx))?;
    println!("wrote {out}");
    Ok(())
}

fn eval(approx_path: &str, grid: &str, reference: &str, out: &str) -> Result<(), CliError> {
    let approx = wire::approximant_from_json(&read_file(approx_path)?)?;
    let grid = parse::grid(grid)?;
    let reference = RefSpec::parse(reference)?;
    let rows = sweep(&approx, &grid, &reference);

    let mut text = String::from("t,ref_re,ref_im,val_re,val_im,abs_err,is_pole\n");
    for row in &rows {
        let _ = writeln!(text, "{},{}", fmt(row.t), row.columns());
    }
    write_file(out, &text)?;
    println!("wrote {out} ({} rows)", rows.len());
    Ok(())
}

fn expand(approx_path: &str, order: usize) -> Result<(), CliError> {
    let approx = wire::approximant_from_json(&read_file(approx_path)?)?;
    let d = approx.expand(order)?;
    for k in 0..=order {
        let v = d.coeff(k as isize);
        println!("{} {}", fmt(v.re), fmt(v.im));
    }
    Ok(())
}

/// Median of an unsorted nonempty list (mean of the middle pair for even
/// lengths).
fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

struct SeedOutcome {
    seed: u64,
    /// `None` when a rebuild failed for this seed.
    ranges: Option<(f64, f64, f64, f64)>,
    contact_ok: bool,
}

fn perturb(eps: f64, seeds: &str, out: &str) -> Result<(), CliError> {
    if !eps.is_finite() || eps < 0.0 {
        return Err(CliError::Input("--eps must be finite and nonnegative".into()));
    }
    let seeds = parse::seeds(seeds)?;

    let base = FormalPowerSeries::tan_over_t(4.0, 8);
    let pnodes = example1_pnodes();
    let znodes = example1_znodes();
    let grid = linspace(-1.5, 1.5, 601);
    let reference = RefSpec::TanOverT(4.0);
    let full_contact = base.order() + 1;

    let mut outcomes = Vec::with_capacity(seeds.len());
    for &seed in &seeds {
        let perturbed = base.perturbed(eps, seed);
        let rebuilt = (|| -> padebary::Result<(Approximant, Approximant)> {
            Ok((
                pade(&perturbed, 4, 4)?.into(),
                bpa_form1(&perturbed, &pnodes, &znodes)?.into(),
            ))
        })();
        match rebuilt {
            Err(_) => outcomes.push(SeedOutcome { seed, ranges: None, contact_ok: false }),
            Ok((classic, bary)) => {
                let contact_ok = [&classic, &bary].iter().all(|a| {
                    a.contact_order(&perturbed, REBUILD_CONTACT_REL_TOL)
                        .map(|m| m >= full_contact)
                        .unwrap_or(false)
                });
                let (p_lo, p_hi) = error_range(&sweep(&classic, &grid, &reference));
                let (b_lo, b_hi) = error_range(&sweep(&bary, &grid, &reference));
                outcomes.push(SeedOutcome {
                    seed,
                    ranges: Some((p_lo, p_hi, b_lo, b_hi)),
                    contact_ok,
                });
            }
        }
    }

    let ok: Vec<&SeedOutcome> = outcomes.iter().filter(|o| o.ranges.is_some()).collect();
    let column = |pick: fn(&(f64, f64, f64, f64)) -> f64| -> Vec<f64> {
        ok.iter().map(|o| pick(o.ranges.as_ref().unwrap())).collect()
    };
    let pade_max = column(|r| r.1);
    let bary_max = column(|r| r.3);

    let mut text = String::new();
    let _ = writeln!(
        text,
        "# perturbed rebuild of the tangent experiment: tan(4t)/(4t), p=q=4, eps={:e}, grid=-1.5:1.5:601",
        eps
    );
    let _ = writeln!(
        text,
        "# per-seed rows: smallest/largest |R(t)-f(t)| over the grid for the polynomial quotient (pade) and the barycentric form (bary)"
    );
    let _ = writeln!(
        text,
        "# reference intervals: pade [{:e}, {:e}], bary [{:e}, {:e}]",
        REFERENCE_INTERVAL_PADE.0,
        REFERENCE_INTERVAL_PADE.1,
        REFERENCE_INTERVAL_BARY.0,
        REFERENCE_INTERVAL_BARY.1
    );
    if !pade_max.is_empty() {
        let span = |v: &[f64]| {
            (
                v.iter().copied().fold(f64::INFINITY, f64::min),
                v.iter().copied().fold(0.0f64, f64::max),
            )
        };
        let (pl, ph) = span(&pade_max);
        let (bl, bh) = span(&bary_max);
        let _ = writeln!(
            text,
            "# achieved per-seed max error spans: pade [{:e}, {:e}], bary [{:e}, {:e}]",
            pl, ph, bl, bh
        );
        println!("pade max-error span over seeds: [{pl:e}, {ph:e}] (reference [{:e}, {:e}])",
            REFERENCE_INTERVAL_PADE.0, REFERENCE_INTERVAL_PADE.1);
        println!("bary max-error span over seeds: [{bl:e}, {bh:e}] (reference [{:e}, {:e}])",
            REFERENCE_INTERVAL_BARY.0, REFERENCE_INTERVAL_BARY.1);
    }
    text.push_str("seed,pade_min,pade_max,bary_min,bary_max,contact_ok,status\n");
    for o in &outcomes {
        match o.ranges {
            Some((p_lo, p_hi, b_lo, b_hi)) => {
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{},ok",
                    o.seed,
                    fmt(p_lo),
                    fmt(p_hi),
                    fmt(b_lo),
                    fmt(b_hi),
                    u8::from(o.contact_ok)
                );
            }
            None => {
                let _ = writeln!(text, "{},nan,nan,nan,nan,0,failed", o.seed);
            }
        }
    }
    if !ok.is_empty() {
        let all_ok = outcomes.iter().all(|o| o.ranges.is_some());
        let _ = writeln!(
            text,
            "median,{},{},{},{},{},{}",
            fmt(median(&column(|r| r.0))),
            fmt(median(&pade_max)),
            fmt(median(&column(|r| r.2))),
            fmt(median(&bary_max)),
            u8::from(outcomes.iter().all(|o| o.contact_ok)),
            if all_ok { "ok" } else { "failed" }
        );
    }
    write_file(out, &text)?;
    println!("wrote {out} ({} seeds)", outcomes.len());

    let failures = outcomes.len() - ok.len();
    if failures > 0 {
        return Err(CliError::Numerical(format!(
            "{failures} of {} seeds failed to rebuild",
            outcomes.len()
        )));
    }
    Ok(())
}

/// Writes a two-method error report with columns for the polynomial
/// quotient and the barycentric build side by side.
fn write_two_method_csv(
    path: &str,
    grid: &[f64],
    reference: &RefSpec,
    classic: &Approximant,
    bary: &Approximant,
) -> Result<(), CliError> {
    let classic_rows = sweep(classic, grid, reference);
    let bary_rows = sweep(bary, grid, reference);
    let mut text = String::from(
        "t,ref_re,ref_im,pade_re,pade_im,pade_abs_err,pade_is_pole,bary_re,bary_im,bary_abs_err,bary_is_pole\n",
    );
    for (c_row, b_row) in classic_rows.iter().zip(&bary_rows) {
        let cv = c_row.value.to_complex();
        let bv = b_row.value.to_complex();
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{},{},{},{},{}",
            fmt(c_row.t),
            fmt(c_row.reference.re),
            fmt(c_row.reference.im),
            fmt(cv.re),
            fmt(cv.im),
            fmt(c_row.abs_err()),
            u8::from(c_row.value.is_pole()),
            fmt(bv.re),
            fmt(bv.im),
            fmt(b_row.abs_err()),
            u8::from(b_row.value.is_pole())
        );
    }
    write_file(path, &text)
}

fn reproduce(example: Example, out_dir: &str, seed: u64, eps: f64) -> Result<(), CliError> {
    if !eps.is_finite() || eps < 0.0 {
        return Err(CliError::Input("--eps must be finite and nonnegative".into()));
    }
    std::fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Input(format!("cannot create {out_dir}: {e}")))?;
    let path = |name: &str| -> String {
        Path::new(out_dir).join(name).to_string_lossy().into_owned()
    };

    match example {
        Example::Example1 => {
            let c = FormalPowerSeries::tan_over_t(4.0, 10);
            let pnodes = example1_pnodes();
            let znodes = example1_znodes();
            let grid = linspace(-1.5, 1.5, 601);
            let reference = RefSpec::TanOverT(4.0);

            let classic: Approximant = pade(&c, 4, 4)?.into();
            let bary: Approximant = bpa_form1(&c, &pnodes, &znodes)?.into();
            println!("pade contact order: {}", classic.contact_order(&c, CONTACT_REL_TOL)?);
            println!("barycentric contact order: {}", bary.contact_order(&c, CONTACT_REL_TOL)?);

            // The same build in form 2 (reciprocal nodes) must agree with
            // form 1 wherever both are finite.
            let form2: Approximant =
                bpa_form2(&c, &reciprocals(&pnodes), &reciprocals(&znodes))?.into();
            let mut worst = 0.0f64;
            for &t in &grid {
                if let (Some(v1), Some(v2)) =
                    (bary.eval(r(t)).finite(), form2.eval(r(t)).finite())
                {
                    worst = worst.max((v1 - v2).norm() / (1.0 + v1.norm()));
                }
            }
            println!("form-2 cross-check: max relative deviation {worst:.3e}");

            let figure1 = path("figure1.csv");
            write_two_method_csv(&figure1, &grid, &reference, &classic, &bary)?;
            println!("wrote {figure1}");

            let perturbed = c.perturbed(eps, seed);
            let classic_p: Approximant = pade(&perturbed, 4, 4)?.into();
            let bary_p: Approximant = bpa_form1(&perturbed, &pnodes, &znodes)?.into();
            let figure2 = path("figure2.csv");
            write_two_method_csv(&figure2, &grid, &reference, &classic_p, &bary_p)?;
            println!("wrote {figure2} (eps {eps:e}, seed {seed})");
        }
        Example::Example2 => {
            let c = FormalPowerSeries::log1p_over_t(10);
            let pnodes: Vec<Complex64> = linspace(-10.0, -1.0, 5).into_iter().map(r).collect();
            let znodes: Vec<Complex64> = linspace(-10.0, -2.0, 5).into_iter().map(r).collect();
            let grid = linspace(-0.95, 0.95, 601);
            let reference = RefSpec::Log1pOverT;

            let classic: Approximant = pade(&c, 4, 4)?.into();
            let bary: Approximant = bpa_form1(&c, &pnodes, &znodes)?.into();
            println!("pade contact order: {}", classic.contact_order(&c, CONTACT_REL_TOL)?);
            println!("barycentric contact order: {}", bary.contact_order(&c, CONTACT_REL_TOL)?);

            let figure3 = path("figure3.csv");
            write_two_method_csv(&figure3, &grid, &reference, &classic, &bary)?;
            println!("wrote {figure3}");
        }
    }
    Ok(())
}
