//! CSV output for single density queries and rectangular grids.

use wronskian_core::spectral::{density, DensityQuery, KilledBMModel, SpectralError};

use crate::CliError;

pub const HEADER: [&str; 6] = ["t", "x", "y", "value", "terms_used", "tail_bound"];

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

fn config_error(e: SpectralError) -> CliError {
    CliError::Config(e.to_string())
}

pub fn model(mu: Option<f64>, nu: Option<f64>) -> Result<KilledBMModel, CliError> {
    match (mu, nu) {
        (_, Some(nu)) => KilledBMModel::from_nu(nu),
        (mu, None) => KilledBMModel::new(mu.unwrap_or(0.0)),
    }
    .map_err(config_error)
}

/// One CSV table with a row per `(t, x, y)`.
pub fn table(model: &KilledBMModel, points: &[(f64, f64, f64)], tol: f64) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for &(t, x, y) in points {
        let q = DensityQuery::new(t, x, y, tol).map_err(config_error)?;
        let r = density(model, &q).map_err(config_error)?;
        w.write_record([sci(t), sci(x), sci(y), sci(r.value), r.terms_used.to_string(), sci(r.tail_bound)])
            .expect("in-memory write");
    }
    Ok(w.into_inner().expect("in-memory flush"))
}

/// `points × points` interior grid `x_i = i/(points+1)` for every time.
pub fn grid_points(times: &[f64], points: usize) -> Vec<(f64, f64, f64)> {
    let step = 1.0 / (points + 1) as f64;
    let mut out = Vec::with_capacity(times.len() * points * points);
    for &t in times {
        for i in 1..=points {
            for j in 1..=points {
                out.push((t, i as f64 * step, j as f64 * step));
            }
        }
    }
    out
}
