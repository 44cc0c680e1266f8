use std::fs;
use std::io::Write;
use std::path::Path;

use halfspin_core::{
    compare_series_vs_fd, density_profile, fd, laguerre_agreement, mean_radius,
    mean_radius_closed_form_half_spin, quadrature_norm, recursion_coefficients, spectrum, validate,
    Constants, Eigenfunction, HalfInteger, Multiplicity, QuantumNumbers, SpectrumRow,
};
use serde_json::{json, Value};

use crate::fmt::{round12, sig12};
use crate::{
    CliError, DensityArgs, EigfnArgs, Format, OracleArgs, OracleKind, OutputArgs, RadiusArgs,
    TableArgs,
};

fn write_output(out: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &out.output {
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError {
                code: 2,
                message: format!("WriteFailed: {e}"),
            }),
        Some(path) => fs::write(path, text).map_err(|e| CliError {
            code: 2,
            message: format!("WriteFailed: {}: {e}", path.display()),
        }),
    }
}

fn json_doc(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json serializes");
    text.push('\n');
    text
}

fn validated(lambda: u32, m2: i64, constants: &Constants) -> Result<QuantumNumbers, CliError> {
    validate(lambda, HalfInteger::from_twice(m2), constants).map_err(CliError::from)
}

pub fn table(args: &TableArgs) -> Result<(), CliError> {
    if args.lambda_max > 1000 {
        return Err(CliError {
            code: 2,
            message: format!(
                "BadBound: lambda_max = {} exceeds the supported table size (1000)",
                args.lambda_max
            ),
        });
    }
    let rows = spectrum::enumerate_table(args.lambda_max)?;
    let text = match args.out.format {
        Format::Csv => table_csv(&rows),
        Format::Json => json_doc(&json!({
            "schema_version": 1,
            "lambda_max": args.lambda_max,
            "rows": rows,
        })),
    };
    write_output(&args.out, &text)?;
    if args.golden_check {
        if args.lambda_max != 10 {
            return Err(CliError {
                code: 2,
                message: format!(
                    "GoldenCheckBound: the bundled table covers lambda_max = 10, got {}",
                    args.lambda_max
                ),
            });
        }
        if rows != spectrum::golden_table() {
            return Err(CliError {
                code: 3,
                message: "GoldenMismatch: enumeration differs from the bundled table".into(),
            });
        }
    }
    Ok(())
}

fn table_csv(rows: &[SpectrumRow]) -> String {
    let mut text = String::from("lambda,ell_times2,absM_times2,bigN,multiplicity\n");
    for row in rows {
        let mult = match row.multiplicity {
            Multiplicity::Count(n) => n.to_string(),
            Multiplicity::Infinite => "inf".to_owned(),
            Multiplicity::Unset => String::new(),
        };
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            row.lambda,
            row.ell.twice(),
            row.abs_m.twice(),
            row.big_n,
            mult
        ));
    }
    text
}

pub fn radius(args: &RadiusArgs) -> Result<(), CliError> {
    let constants = args.constants.constants()?;
    let qn = validated(args.lambda, args.m2, &constants)?;
    let physical = mean_radius(&qn, &constants);
    let value = if args.dimensionless {
        physical / constants.length_scale()
    } else {
        physical
    };
    // the closed form covers the lowest state (l = 1/2, |m| = 1/2)
    let closed = (qn.lambda() == 2).then(|| {
        let c = mean_radius_closed_form_half_spin(&constants);
        if args.dimensionless {
            c / constants.length_scale()
        } else {
            c
        }
    });
    let deviation = closed.map(|c| ((value - c) / c).abs());

    let text = match args.out.format {
        Format::Csv => {
            let mut line = String::from("mean_radius,closed_form,rel_deviation\n");
            line.push_str(&sig12(value));
            line.push(',');
            line.push_str(&closed.map(sig12).unwrap_or_default());
            line.push(',');
            line.push_str(&deviation.map(sig12).unwrap_or_default());
            line.push('\n');
            line
        }
        Format::Json => json_doc(&json!({
            "schema_version": 1,
            "lambda": qn.lambda(),
            "m2": args.m2,
            "gamma": round12(constants.gamma),
            "hbar": round12(constants.hbar),
            "dimensionless": args.dimensionless,
            "mean_radius": round12(value),
            "closed_form": closed.map(round12),
            "rel_deviation": deviation.map(round12),
        })),
    };
    write_output(&args.out, &text)
}

pub fn density(args: &DensityArgs) -> Result<(), CliError> {
    let constants = args.constants.constants()?;
    let qn = validated(args.lambda, args.m2, &constants)?;
    let grid = args.grid.grid()?;
    let profile = density_profile(&qn, &constants, &grid)?;
    let eig = Eigenfunction::normalized(recursion_coefficients(&qn), constants);
    let scale = if args.dimensionless {
        1.0
    } else {
        constants.length_scale()
    };
    let axis = if args.dimensionless { "rho" } else { "r" };

    let meta = json!({
        "schema_version": 1,
        "lambda": qn.lambda(),
        "m2": args.m2,
        "gamma": round12(constants.gamma),
        "hbar": round12(constants.hbar),
        "dimensionless": args.dimensionless,
        "norm_constant": round12(eig.norm_constant()),
        "ring_count": profile.ring_count(),
        "peak_radii": profile
            .peak_radii()
            .iter()
            .map(|rho| round12(rho * scale))
            .collect::<Vec<_>>(),
    });

    match args.out.format {
        Format::Csv => {
            let mut text = format!("{axis},density\n");
            for &(rho, d) in profile.samples() {
                text.push_str(&format!("{},{}\n", sig12(rho * scale), sig12(d)));
            }
            write_output(&args.out, &text)?;
            // sidecar with the diagnostics, next to the sample file
            if let Some(path) = &args.out.output {
                let sidecar = sidecar_path(path);
                fs::write(&sidecar, json_doc(&meta)).map_err(|e| CliError {
                    code: 2,
                    message: format!("WriteFailed: {}: {e}", sidecar.display()),
                })?;
            }
            Ok(())
        }
        Format::Json => {
            let mut doc = meta;
            doc["samples"] = Value::Array(
                profile
                    .samples()
                    .iter()
                    .map(|&(rho, d)| json!([round12(rho * scale), round12(d)]))
                    .collect(),
            );
            write_output(&args.out, &json_doc(&doc))
        }
    }
}

fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    std::path::PathBuf::from(name)
}

pub fn eigfn(args: &EigfnArgs) -> Result<(), CliError> {
    if !args.theta.is_finite() {
        return Err(CliError {
            code: 2,
            message: format!("BadAngle: theta = {} must be finite", args.theta),
        });
    }
    let constants = args.constants.constants()?;
    let qn = validated(args.lambda, args.m2, &constants)?;
    let eig = Eigenfunction::normalized(recursion_coefficients(&qn), constants);
    let scale = if args.dimensionless {
        1.0
    } else {
        constants.length_scale()
    };
    let axis = if args.dimensionless { "rho" } else { "r" };

    if let Some(r) = args.r {
        if !(r.is_finite() && r >= 0.0) {
            return Err(CliError {
                code: 2,
                message: format!("BadRadius: r = {r} must be finite and nonnegative"),
            });
        }
        // --r is on the reported axis: physical by default, rho when
        // --dimensionless is set
        let r_phys = r * if args.dimensionless {
            constants.length_scale()
        } else {
            1.0
        };
        let psi = eig.eval_psi(r_phys, args.theta);
        let text = match args.out.format {
            Format::Csv => format!(
                "{axis},theta,psi_re,psi_im,density\n{},{},{},{},{}\n",
                sig12(r),
                sig12(args.theta),
                sig12(psi.re),
                sig12(psi.im),
                sig12(psi.norm_sqr())
            ),
            Format::Json => json_doc(&json!({
                "schema_version": 1,
                "lambda": qn.lambda(),
                "m2": args.m2,
                "gamma": round12(constants.gamma),
                "hbar": round12(constants.hbar),
                "dimensionless": args.dimensionless,
                "norm_constant": round12(eig.norm_constant()),
                axis: round12(r),
                "theta": round12(args.theta),
                "psi_re": round12(psi.re),
                "psi_im": round12(psi.im),
                "density": round12(psi.norm_sqr()),
            })),
        };
        return write_output(&args.out, &text);
    }

    let grid = args.grid.grid()?;
    match args.out.format {
        Format::Csv => {
            let mut text = format!("{axis},psi_re,psi_im,density\n");
            for rho in std::iter::once(0.0).chain(grid.nodes()) {
                let psi = eig.eval_psi(rho * constants.length_scale(), args.theta);
                text.push_str(&format!(
                    "{},{},{},{}\n",
                    sig12(rho * scale),
                    sig12(psi.re),
                    sig12(psi.im),
                    sig12(psi.norm_sqr())
                ));
            }
            write_output(&args.out, &text)
        }
        Format::Json => {
            let samples: Vec<Value> = std::iter::once(0.0)
                .chain(grid.nodes())
                .map(|rho| {
                    let psi = eig.eval_psi(rho * constants.length_scale(), args.theta);
                    json!([round12(rho * scale), round12(psi.re), round12(psi.im)])
                })
                .collect();
            write_output(
                &args.out,
                &json_doc(&json!({
                    "schema_version": 1,
                    "lambda": qn.lambda(),
                    "m2": args.m2,
                    "gamma": round12(constants.gamma),
                    "hbar": round12(constants.hbar),
                    "dimensionless": args.dimensionless,
                    "theta": round12(args.theta),
                    "norm_constant": round12(eig.norm_constant()),
                    "samples": samples,
                })),
            )
        }
    }
}

pub fn oracle(args: &OracleArgs) -> Result<(), CliError> {
    let constants = args.constants.constants()?;
    let grid = args.grid.grid()?;
    match args.kind {
        OracleKind::Fd => {
            if args.count == 0 {
                return Err(CliError {
                    code: 2,
                    message: "BadCount: --count must be at least 1".into(),
                });
            }
            let abs_m = HalfInteger::from_twice(args.m2).abs();
            if abs_m.is_integer() {
                return Err(CliError::from(halfspin_core::Error::NotHalfInteger {
                    m2: args.m2,
                }));
            }
            let solved = fd::fd_eigensolve(abs_m, &grid, args.count)?;
            match args.out.format {
                Format::Csv => {
                    let mut text = String::from("k,lambda_fd,lambda_exact,abs_error\n");
                    for (k, (lambda, _)) in solved.iter().enumerate() {
                        let exact = fd::analytic_lambda(abs_m, k);
                        text.push_str(&format!(
                            "{k},{},{},{}\n",
                            sig12(*lambda),
                            sig12(exact),
                            sig12((lambda - exact).abs())
                        ));
                    }
                    write_output(&args.out, &text)
                }
                Format::Json => {
                    let rows: Vec<Value> = solved
                        .iter()
                        .enumerate()
                        .map(|(k, (lambda, _))| {
                            let exact = fd::analytic_lambda(abs_m, k);
                            json!({
                                "k": k,
                                "lambda_fd": round12(*lambda),
                                "lambda_exact": round12(exact),
                                "abs_error": round12((lambda - exact).abs()),
                            })
                        })
                        .collect();
                    write_output(
                        &args.out,
                        &json_doc(&json!({
                            "schema_version": 1,
                            "m2": args.m2,
                            "rows": rows,
                        })),
                    )
                }
            }
        }
        OracleKind::Series => {
            let lambda = args.lambda.ok_or_else(|| CliError {
                code: 2,
                message: "MissingLambda: the series oracle needs --lambda".into(),
            })?;
            let qn = validated(lambda, args.m2, &constants)?;
            let series = recursion_coefficients(&qn);
            let laguerre_residual =
                laguerre_agreement(&qn, &series, &[0.25, 0.5, 1.0, 1.5, 2.5, 3.5]);
            let fd_deviation = compare_series_vs_fd(&qn, &grid)?;
            let norm = quadrature_norm(&series);
            let norm_closed = halfspin_core::norm_closed_form(&qn);
            let norm_residual = ((norm - norm_closed) / norm_closed).abs();
            match args.out.format {
                Format::Csv => {
                    let text = format!(
                        "check,value\nlaguerre_residual,{}\nfd_deviation,{}\nnorm_residual,{}\n",
                        sig12(laguerre_residual),
                        sig12(fd_deviation),
                        sig12(norm_residual)
                    );
                    write_output(&args.out, &text)
                }
                Format::Json => write_output(
                    &args.out,
                    &json_doc(&json!({
                        "schema_version": 1,
                        "lambda": lambda,
                        "m2": args.m2,
                        "laguerre_residual": round12(laguerre_residual),
                        "fd_deviation": round12(fd_deviation),
                        "norm_residual": round12(norm_residual),
                    })),
                ),
            }
        }
    }
}
