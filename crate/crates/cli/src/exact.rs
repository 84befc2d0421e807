use clap::Args;
use lppqs::lpp::Geometry;
use lppqs::probability::{exact_cdf_with_budget, parse_rational};
use num_rational::BigRational;
use serde::Serialize;

use crate::error::CliError;
use crate::{Format, GeometryArg};

#[derive(Args, Debug)]
pub struct CdfArgs {
    #[arg(long, value_enum)]
    geometry: GeometryArg,
    #[arg(long)]
    n: usize,
    /// Geometric parameter `y = √q` as an exact rational, e.g. `1/2` or `0.3`.
    #[arg(long)]
    y: String,
    /// Largest bound `u`; the table covers `0..=u-max`.
    #[arg(long, default_value_t = 4)]
    u_max: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct CdfTable {
    geometry: String,
    n: usize,
    y: String,
    cdf: Vec<(u64, String)>,
}

pub fn run(args: &CdfArgs, budget: u64) -> Result<(), CliError> {
    let y: BigRational = parse_rational(&args.y)?;
    let geometry = Geometry::new(args.geometry.into(), args.n)?;
    let cdf = (0..=args.u_max)
        .map(|u| Ok((u, exact_cdf_with_budget(geometry, u, &y, budget)?.to_string())))
        .collect::<Result<Vec<_>, CliError>>()?;
    let table = CdfTable { geometry: geometry.kind.to_string(), n: args.n, y: y.to_string(), cdf };
    match args.format {
        Format::Text => {
            for (u, p) in &table.cdf {
                println!("{u}\t{p}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&table)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["u", "probability"])?;
            for (u, p) in &table.cdf {
                w.write_record([u.to_string(), p.clone()])?;
            }
            w.flush().map_err(|e| CliError::Usage(e.to_string()))?;
        }
    }
    Ok(())
}
