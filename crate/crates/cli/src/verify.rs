//! The `verify` subcommand: operator-oracle identities per structure
//! constant, then the finite-difference cross-checks of the analytic
//! series. One pass/fail line per check; exit 1 on any failure.

use halfspin_core::{
    compare_series_vs_fd, fd, joint_spectrum, operators, spectrum, validate, Constants, Error,
    HalfInteger,
};

use crate::fmt::sig12;
use crate::{CliError, VerifyArgs};

struct Report {
    failures: usize,
}

impl Report {
    fn check(&mut self, name: &str, value: f64, threshold: f64) {
        let ok = value <= threshold;
        if !ok {
            self.failures += 1;
        }
        println!(
            "{} {name} value={} threshold={}",
            if ok { "ok  " } else { "FAIL" },
            sig12(value),
            sig12(threshold)
        );
    }

    fn check_flag(&mut self, name: &str, ok: bool, detail: &str) {
        if !ok {
            self.failures += 1;
        }
        println!("{} {name} {detail}", if ok { "ok  " } else { "FAIL" });
    }
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    if args.nmax < 4 {
        return Err(CliError::from(Error::CutoffTooSmall {
            nmax: args.nmax,
            min: 4,
        }));
    }
    let gammas: Vec<f64> = args
        .gamma
        .split(',')
        .map(|s| {
            s.trim().parse::<f64>().map_err(|_| CliError {
                code: 2,
                message: format!("BadGamma: cannot parse {s:?} as a number"),
            })
        })
        .collect::<Result<_, _>>()?;
    let grid = args.grid.grid()?;
    let hbar = args.hbar;
    let hbar2 = hbar * hbar;

    let mut report = Report { failures: 0 };

    for &gamma in &gammas {
        let constants = Constants::new(hbar, gamma, 1.0).ok_or_else(|| CliError {
            code: 2,
            message: format!("BadGamma: gamma = {gamma} must be positive and finite"),
        })?;
        let ops = operators::build(args.nmax, &constants)?;
        let tag = format!("[gamma={gamma}]");

        report.check(
            &format!("hermiticity{tag}"),
            ops.hermiticity_defect(),
            1e-12 * hbar2.max(hbar),
        );
        report.check(
            &format!("s0-s3-commutator{tag}"),
            ops.commutator_defect(),
            1e-12 * hbar2,
        );
        report.check(
            &format!("s2-identity{tag}"),
            ops.verify_identity(),
            1e-10 * hbar2,
        );

        let modes = joint_spectrum(&ops)?;
        // interior shells n give lambda = n + 1 repeated n + 1 times
        let mut expected = Vec::new();
        for n in 0..=(args.nmax - 2) as u32 {
            for _ in 0..=n {
                expected.push(f64::from(n + 1));
            }
        }
        let spectrum_defect = modes
            .iter()
            .zip(&expected)
            .map(|(mode, want)| (mode.lambda - want).abs() / want)
            .fold(
                if modes.len() == expected.len() {
                    0.0
                } else {
                    f64::INFINITY
                },
                f64::max,
            );
        report.check(&format!("s0-spectrum{tag}"), spectrum_defect, 1e-10);

        let relation_defect = modes
            .iter()
            .map(|mode| (mode.s2 - (mode.lambda * mode.lambda - 1.0) / 4.0).abs())
            .fold(0.0, f64::max);
        report.check(
            &format!("s2-eigenvalue-relation{tag}"),
            relation_defect,
            1e-9,
        );

        // odd-2m content of each even interior sector matches the table rows
        let mut content_ok = true;
        let mut detail = String::from("even sectors match the table");
        for lambda in (2..args.nmax as u32).step_by(2) {
            let mut twice_m: Vec<i64> = modes
                .iter()
                .filter(|mode| (mode.lambda - f64::from(lambda)).abs() < 1e-6)
                .map(|mode| (2.0 * mode.m).round() as i64)
                .collect();
            twice_m.sort_unstable();
            let expected_m: Vec<i64> = (0..lambda as i64)
                .map(|j| 2 * j - (lambda as i64 - 1))
                .collect();
            if twice_m != expected_m || twice_m.iter().any(|m2| m2 % 2 == 0) {
                content_ok = false;
                detail = format!("sector lambda={lambda} holds 2m values {twice_m:?}");
                break;
            }
        }
        report.check_flag(&format!("table-content{tag}"), content_ok, &detail);
    }

    // finite-difference oracle against the analytic spectrum
    let fd_err = fd::max_eigenvalue_error(HalfInteger::from_twice(1), &grid, 3)?;
    report.check("fd-eigenvalues[m2=1,count=3]", fd_err, 1e-3);

    // pointwise series vs finite-difference eigenvectors
    let constants = Constants::new(hbar, 1.0, 1.0).expect("unit constants");
    let mut lambda = 2;
    while lambda <= args.lambda_max {
        for m2 in (1..=lambda as i64 - 1).step_by(2) {
            let qn = validate(lambda, HalfInteger::from_twice(m2), &constants)?;
            let deviation = compare_series_vs_fd(&qn, &grid)?;
            report.check(
                &format!("series-vs-fd[lambda={lambda},m2={m2}]"),
                deviation,
                1e-3,
            );
        }
        lambda += 2;
    }

    // the spectral gap comes out of the enumeration, not a constant
    let gap_ok = spectrum::lambda_min() == 2;
    report.check_flag("lambda-min", gap_ok, "enumeration yields lambda_min = 2");

    if report.failures > 0 {
        println!("verification failed: {} check(s)", report.failures);
        return Err(CliError {
            code: 1,
            message: format!("VerificationFailed: {} check(s) failed", report.failures),
        });
    }
    println!("verification passed");
    Ok(())
}
