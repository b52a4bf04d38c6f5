mod args;
mod report;

use args::{BundleCmd, Cli, CohomologyCmd, Command, RealCurveCmd};
use clap::Parser;
use crosscap::bundles::{fredholm_index, klein_eqw2, klein_top, KleinTorusPair, RealBundlePair};
use crosscap::clutching::{
    check_involution, check_reality, classify_disk, det_winding, klein_class, REALITY_TOL,
};
use crosscap::cohomology::{
    cup_pair, ring_of, square_class_cokernel, square_pairing, whitney_w2, H1Presentation,
};
use crosscap::holonomy::{decompose, holonomy};
use crosscap::realcurves::{build, check_equivariance_seeded, in_delta};
use crosscap::spectral::{
    boundary_recurrence_kernel, contour_integral, numerical_kernel, DiskProblem, DEFAULT_TOL,
};
use crosscap::{OperatorLoop, RealMapParams, SampledLoop};
use report::{Failure, Inputs, Outcome};
use serde_json::json;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let mut inputs = Inputs::new(&argv[1..]);
    match run(&cli, &mut inputs) {
        Ok(outcome) => {
            let pass = outcome.passed();
            emit(&report::render(
                &cli.command.name(),
                &inputs,
                outcome,
                start.elapsed(),
            ));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("computation failed: {msg}");
            let outcome = Outcome::new(json!({ "error": msg })).check("completed", false);
            emit(&report::render(
                &cli.command.name(),
                &inputs,
                outcome,
                start.elapsed(),
            ));
            ExitCode::from(1)
        }
    }
}

// A closed pipe on stdout is not an error worth a panic.
fn emit(report: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{report}");
}

fn run(cli: &Cli, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Surface { surface } => {
            let s = args::parse_surface(surface, inputs)?;
            let double = s.double();
            let quotient = s.quotient();
            Ok(Outcome::new(json!({
                "surface": s,
                "euler_char": s.euler_char(),
                "standard": s.standard_count(),
                "crosscaps": s.crosscap_count(),
                "double": double,
                "quotient": quotient,
            }))
            .check(
                "quotient_preserves_euler_char",
                quotient.euler_char() == s.euler_char(),
            ))
        }
        Command::Cohomology { cmd } => cohomology(cmd),
        Command::Bundle { cmd } => bundle(cmd, inputs),
        Command::Holonomy { loop_file } => {
            let lp: OperatorLoop = inputs.read_json(loop_file)?;
            let w1 = holonomy(&lp);
            let (reduced, disks) = decompose(&lp);
            let split = disks.iter().fold(holonomy(&reduced), |a, b| a ^ b);
            Ok(Outcome::new(json!({
                "w1_det": w1 as u8,
                "standard_part": holonomy(&reduced) as u8,
                "crosscap_bits": disks.iter().map(|b| *b as u8).collect::<Vec<_>>(),
            }))
            .check("decomposition", split == w1))
        }
        Command::Clutch { loop_file } => {
            let l: SampledLoop = inputs.read_json(loop_file)?;
            let tol = cli.tol.unwrap_or(REALITY_TOL);
            let winding = det_winding(&l).map_err(Failure::compute)?;
            let real = check_reality(&l, tol).map_err(Failure::input)?;
            let involution = check_involution(&l, tol).map_err(Failure::input)?;
            let mut out = json!({
                "samples": l.len(),
                "rank": l.dim(),
                "winding": winding,
                "reality": real,
                "involution": involution,
            });
            if involution {
                let c = classify_disk(&l, tol).map_err(Failure::compute)?;
                out["d"] = json!(c.d);
                out["maslov"] = json!(c.maslov);
            }
            if real {
                let k = klein_class(&l).map_err(Failure::compute)?;
                out["klein_class"] = json!(k as u8);
            }
            Ok(Outcome::new(out).check("classified", real || involution))
        }
        Command::Spectral { d, trunc, colloc } => {
            let tol = cli.tol.unwrap_or(DEFAULT_TOL);
            let p = DiskProblem::new(*d, *trunc, *colloc, tol).map_err(Failure::input)?;
            let est = numerical_kernel(&p).map_err(Failure::compute)?;
            let expected = boundary_recurrence_kernel(*d);
            Ok(Outcome::new(json!({
                "dim": est.dim,
                "expected": expected.dim,
                "relations": expected.relations,
                "gap": est.gap,
                "pass": est.dim == expected.dim,
            }))
            .check("dim_matches_recurrence", est.dim == expected.dim))
        }
        Command::Quadrature { k, m, points } => {
            let v = contour_integral(*k, *m, *points).map_err(Failure::input)?;
            let expected = if *m == 2 * *k {
                -(1..=*m).map(f64::from).product::<f64>() / 2.0
            } else {
                0.0
            };
            let tol = cli.tol.unwrap_or(1e-12);
            let pass = (v - expected).abs() <= tol;
            Ok(
                Outcome::new(json!({ "value": v, "expected": expected, "pass": pass }))
                    .check("matches_closed_form", pass),
            )
        }
        Command::Realcurve { cmd } => realcurve(cmd, cli, inputs),
        Command::VerifyAll => {
            let results = crosscap::verify::run_all(cli.seed);
            let mut outcome = Outcome::new(json!({ "criteria": results }));
            for r in &results {
                outcome = outcome.check(&format!("criterion_{}", r.id), r.pass);
            }
            Ok(outcome)
        }
    }
}

fn cohomology(cmd: &CohomologyCmd) -> Result<Outcome, Failure> {
    match cmd {
        CohomologyCmd::Cup { closed, a, b } => {
            let ring = ring_of(&args::parse_closed(closed)?).map_err(Failure::input)?;
            let v = cup_pair(&args::parse_class(a)?, &args::parse_class(b)?, &ring)
                .map_err(Failure::input)?;
            Ok(Outcome::new(json!({ "cup": v as u8 })))
        }
        CohomologyCmd::Square { closed, class } => {
            let ring = ring_of(&args::parse_closed(closed)?).map_err(Failure::input)?;
            let kappa = args::parse_class(class)?;
            let v = square_pairing(&kappa, &ring);
            let torsion = kappa.dot(ring.torsion_class());
            match v {
                Ok(v) => Ok(Outcome::new(
                    json!({ "square": v as u8, "torsion_pairing": torsion as u8 }),
                )
                .check("square_equals_torsion_pairing", v == torsion)),
                Err(crosscap::cohomology::CohomologyError::DimensionMismatch { expected, got }) => {
                    Err(Failure::Input(format!(
                        "class has {got} entries, surface needs {expected}"
                    )))
                }
                Err(e) => Err(Failure::compute(e)),
            }
        }
        CohomologyCmd::Whitney { closed, lines } => {
            let ring = ring_of(&args::parse_closed(closed)?).map_err(Failure::input)?;
            let lines = lines
                .split(',')
                .map(args::parse_class)
                .collect::<Result<Vec<_>, _>>()?;
            let v = whitney_w2(&lines, &ring).map_err(Failure::input)?;
            Ok(Outcome::new(json!({ "w2": v as u8 })))
        }
        CohomologyCmd::Cokernel { free, torsion } => {
            let t = args::parse_torsion(torsion)?;
            let h = H1Presentation::new(*free, t).map_err(Failure::input)?;
            Ok(Outcome::new(json!({
                "ext_z2_rank": h.ext_z2_rank(),
                "square_image_rank": h.square_image_rank(),
                "cokernel": square_class_cokernel(&h),
            })))
        }
    }
}

fn bundle(cmd: &BundleCmd, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match cmd {
        BundleCmd::Index {
            rank,
            maslov,
            std_w1,
            surface,
        } => {
            let s = args::parse_surface(surface, inputs)?;
            let w1 = match std_w1 {
                Some(bits) => args::parse_class(bits)?.0,
                None => vec![false; s.standard_count()],
            };
            let p = RealBundlePair::new(*rank, *maslov, w1).map_err(Failure::input)?;
            let index = fredholm_index(&p, &s).map_err(Failure::input)?;
            Ok(Outcome::new(
                json!({ "index": index, "double_genus": s.double().genus_or_crosscap_number }),
            ))
        }
        BundleCmd::Klein { rank, twist } => {
            let k = KleinTorusPair::new(*rank, *twist).map_err(Failure::input)?;
            Ok(Outcome::new(json!({
                "eqw2": klein_eqw2(&k) as u8,
                "top_twist": klein_top(&k).twist as u8,
            })))
        }
    }
}

fn realcurve(cmd: &RealCurveCmd, cli: &Cli, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    let (RealCurveCmd::Build { params }
    | RealCurveCmd::Check { params, .. }
    | RealCurveCmd::Delta { params }) = cmd;
    let p: RealMapParams = inputs.read_json(params)?;
    match cmd {
        RealCurveCmd::Build { .. } => {
            let t = build(&p);
            Ok(Outcome::new(json!({ "polys": t })))
        }
        RealCurveCmd::Check { samples, .. } => {
            let tol = cli.tol.unwrap_or(1e-9);
            if in_delta(&p, 1e-8) {
                return Err(Failure::Compute(
                    "parameters lie in the degenerate locus".into(),
                ));
            }
            let r = check_equivariance_seeded(&build(&p), *samples, tol, cli.seed)
                .map_err(Failure::compute)?;
            Ok(
                Outcome::new(json!({ "max_deviation": r.max_deviation, "samples": r.samples }))
                    .check("equivariant", r.pass),
            )
        }
        RealCurveCmd::Delta { .. } => {
            let tol = cli.tol.unwrap_or(1e-8);
            Ok(Outcome::new(json!({ "in_delta": in_delta(&p, tol) as u8 })))
        }
    }
}
