use std::path::PathBuf;

use clap::Args;
use lppqs::lpp::Geometry;
use lppqs::probability::{factorization_monte_carlo, parse_rational, sample_lpp, GeometricSpec};

use crate::error::CliError;
use crate::{emit, Format, GeometryArg};

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value_t = GeometryArg::P2hlr)]
    geometry: GeometryArg,
    #[arg(long)]
    n: usize,
    /// Off-diagonal geometric parameter; diagonal squares use `√q`.
    #[arg(long, conflicts_with = "y", required_unless_present = "y")]
    q: Option<f64>,
    /// `√q` as an exact rational, e.g. `1/2`.
    #[arg(long)]
    y: Option<String>,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0, env = "LPPQS_SEED")]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Simulate all three geometries and compare the p2hlr distribution
    /// function with the product of the other two (JSON output).
    #[arg(long)]
    factorization: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

pub fn run(args: &SimulateArgs) -> Result<(), CliError> {
    let geometry = Geometry::new(args.geometry.into(), args.n)?;
    let spec = match (&args.y, args.q) {
        (Some(y), _) => GeometricSpec::new(geometry, parse_rational(y)?, args.seed)?,
        (None, Some(q)) => GeometricSpec::from_q(geometry, q, args.seed)?,
        (None, None) => return Err(CliError::Usage("one of --q or --y is required".into())),
    };

    if args.factorization {
        let report = factorization_monte_carlo(args.n, &spec.y, args.samples, args.seed)?;
        return emit(args.output.as_ref(), &(serde_json::to_string_pretty(&report)? + "\n"));
    }

    let report = sample_lpp(&spec, args.samples)?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => {
            let z = &report.normalized;
            let mut out = format!(
                "geometry {} n={} q={} samples={} seed={}\n",
                report.geometry, report.n, report.q, report.samples, report.seed
            );
            out.push_str(&format!("mean {:.6}  variance {:.6}\n", report.mean, report.variance));
            out.push_str(&format!(
                "normalized: c1 {:.6}  c2 {:.6}  mean {:.6}  variance {:.6}  skewness {:.6}\n",
                z.c1, z.c2, z.mean, z.variance, z.skewness
            ));
            for (v, p) in &report.cdf {
                out.push_str(&format!("{v}\t{p:.6}\n"));
            }
            out
        }
    };
    emit(args.output.as_ref(), &text)
}
