use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use wronskian_core::darboux::{self, chain_report, norm_identity_check, norm_sq, norm_sq_closed_form};
use wronskian_core::orthopoly::{
    gegenbauer_orthogonality_integral, orthogonality_norm_closed_form, verify_cnk_recurrence,
};
use wronskian_core::spectral::{ck_check, density, density_mass, mu0_oracle, DensityQuery, KilledBMModel};
use wronskian_core::wronskian::{
    self, check_prop1_factorization, consecutive_sines_closed, first_shift_closed, random_factorization_instance,
    recurrence_grid, shift_recurrence_holds, w_bruteforce, w_closed,
};
use wronskian_core::{FourierPoly, UPoly};

use crate::config::{Suite, SuiteConfig};
use crate::report::{CellRecord, SuiteReport};
use crate::CliError;

pub const FACTORIZATION_INSTANCES: usize = 100;
const DENSITY_TIMES: [f64; 3] = [0.05, 0.2, 1.0];
const DENSITY_ORDERS: [f64; 3] = [1.0, 2.0, 3.7];
const CK_QUAD_TOL: f64 = 1e-6;
const CK_LIMIT: f64 = 1e-6;

/// Shared, precomputed inputs for one suite run.
enum Prepared {
    None,
    Recurrence(Vec<Vec<FourierPoly>>),
    Instances(Vec<(FourierPoly, Vec<UPoly>)>),
}

/// Runs the configured suite (or every suite for `all`) and writes the table to
/// `output_path` when one is set.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<SuiteReport>, CliError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let mut reports = Vec::new();
    for suite in config.suite.members() {
        reports.push(pool.install(|| run_one(suite, config))?);
    }
    if let Some(path) = &config.output_path {
        let bytes = crate::report::emit_table(&reports, config.format);
        std::fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(reports)
}

fn grid(n_lo: usize, n_max: usize, k_max: usize) -> Vec<(usize, usize)> {
    (n_lo..=n_max).flat_map(|n| (0..k_max).map(move |k| (n, k))).collect()
}

fn cells_for(suite: Suite, config: &SuiteConfig) -> Vec<(usize, usize)> {
    let (n_max, k_max) = (config.n_max, config.k_max);
    match suite {
        Suite::Theorem1 | Suite::Orthogonality | Suite::Darboux | Suite::Prop3 | Suite::Norms => {
            grid(1, n_max, k_max)
        }
        Suite::Lemma2 | Suite::Cnk => grid(2, n_max, k_max),
        Suite::Base => (1..=n_max).map(|n| (n, 0)).collect(),
        Suite::Lemma1 => (1..=n_max).map(|n| (n, 1)).collect(),
        Suite::Factorization => (0..FACTORIZATION_INSTANCES).map(|i| (0, i)).collect(),
        // Interior points x = i/10, y = j/10.
        Suite::Density => (1..=9).flat_map(|i| (1..=9).map(move |j| (i, j))).collect(),
        Suite::All => unreachable!("expanded by members()"),
    }
}

fn prepare(suite: Suite, config: &SuiteConfig) -> Prepared {
    match suite {
        Suite::Theorem1 if config.n_max >= 1 && config.k_max >= 1 => {
            Prepared::Recurrence(recurrence_grid(config.n_max, config.k_max - 1))
        }
        Suite::Factorization => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            Prepared::Instances(
                (0..FACTORIZATION_INSTANCES)
                    .map(|_| random_factorization_instance(&mut rng))
                    .collect(),
            )
        }
        _ => Prepared::None,
    }
}

fn run_one(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport, CliError> {
    let start = Instant::now();
    let prepared = prepare(suite, config);
    let cells = cells_for(suite, config);
    let records: Result<Vec<CellRecord>, CliError> = cells
        .par_iter()
        .enumerate()
        .map(|(i, &(n, k))| {
            let fault = config.inject_fault && i == 0;
            run_cell(suite, n, k, config, &prepared, fault)
        })
        .collect();
    let mut records = records?;
    if suite == Suite::Factorization {
        // Cells are keyed by instance; report the instance size as n.
        if let Prepared::Instances(list) = &prepared {
            for r in records.iter_mut() {
                r.n = list[r.k].1.len() + 1;
            }
        }
    }
    Ok(SuiteReport::new(suite, records, start.elapsed().as_millis()))
}

fn internal<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Internal(e.to_string())
}

fn record(n: usize, k: usize, pass: bool, detail: String) -> CellRecord {
    CellRecord { n, k, pass, detail }
}

fn run_cell(
    suite: Suite,
    n: usize,
    k: usize,
    config: &SuiteConfig,
    prepared: &Prepared,
    fault: bool,
) -> Result<CellRecord, CliError> {
    match suite {
        Suite::Theorem1 => {
            let Prepared::Recurrence(induced) = prepared else {
                unreachable!("theorem1 runs with a recurrence grid")
            };
            let brute = w_bruteforce(n, k).map_err(internal)?;
            let mut closed = w_closed(n, k);
            if fault {
                closed = &closed + &FourierPoly::sin(1);
            }
            let rec = &induced[n][k];
            let detail = match (brute == *rec, brute == closed) {
                (true, true) => format!("degree={} terms={}", brute.degree(), brute.term_count()),
                (false, _) => "brute force differs from recurrence".to_string(),
                (true, false) => "brute force differs from closed form".to_string(),
            };
            Ok(record(n, k, brute == *rec && brute == closed, detail))
        }
        Suite::Base => {
            let brute = w_bruteforce(n, 0).map_err(internal)?;
            let ok = brute == consecutive_sines_closed(n);
            Ok(record(n, k, ok, format!("leading={}", wronskian::leading_constant(n))))
        }
        Suite::Lemma1 => {
            let brute = w_bruteforce(n, 1).map_err(internal)?;
            let ok = brute == first_shift_closed(n);
            Ok(record(n, k, ok, format!("degree={}", brute.degree())))
        }
        Suite::Lemma2 => {
            let ok = shift_recurrence_holds(n, k).map_err(internal)?;
            Ok(record(n, k, ok, format!("factor={}", wronskian::recurrence_factor(n, k))))
        }
        Suite::Cnk => Ok(record(n, k, verify_cnk_recurrence(n, k), "exact".into())),
        Suite::Orthogonality => {
            let nu = n as u32;
            let norm = gegenbauer_orthogonality_integral(k, k, nu);
            let mut ok = norm == orthogonality_norm_closed_form(k, nu);
            for l in (0..config.k_max).filter(|&l| l != k) {
                ok &= gegenbauer_orthogonality_integral(k, l, nu).is_zero();
            }
            Ok(record(n, k, ok, format!("norm={norm}")))
        }
        Suite::Darboux => {
            let r = chain_report(n, k).map_err(internal)?;
            let detail = format!(
                "residual_zero={} C={}pi^{} norm={}",
                r.residual_zero,
                if r.c_sign < 0 { "-" } else { "+" },
                r.c_pi_power,
                r.norm_sq
            );
            Ok(record(n, k, r.passed(), detail))
        }
        Suite::Prop3 => {
            let c = norm_identity_check(n, k).map_err(internal)?;
            Ok(record(n, k, c.holds(), format!("lhs={} boundary={}", c.lhs, c.boundary)))
        }
        Suite::Norms => {
            let g = darboux::crum_ratio(n, k).map_err(internal)?;
            let norm = norm_sq(&g);
            let mut ok = norm == norm_sq_closed_form(n, k);
            if k >= 1 {
                ok &= darboux::verify_norm_recurrence(n, k).map_err(internal)?;
            }
            Ok(record(n, k, ok, format!("norm={norm}")))
        }
        Suite::Factorization => {
            let Prepared::Instances(list) = prepared else {
                unreachable!("factorization runs with instances")
            };
            let (f, gs) = &list[k];
            let ok = check_prop1_factorization(f, gs).map_err(internal)?;
            Ok(record(n, k, ok, format!("seed={} f_degree={}", config.seed, f.degree())))
        }
        Suite::Density => density_cell(n, k, config.tol),
        Suite::All => unreachable!("expanded by members()"),
    }
}

fn density_cell(i: usize, j: usize, tol: f64) -> Result<CellRecord, CliError> {
    let (x, y) = (i as f64 / 10.0, j as f64 / 10.0);
    let brownian = KilledBMModel::new(0.0).map_err(internal)?;
    let mut oracle_gap = 0f64;
    let mut asymmetry = 0f64;
    let mut ck_gap = 0f64;
    let mut max_mass = 0f64;
    // Series truncation well below the comparison tolerance.
    let series_tol = (tol * 1e-3).max(1e-15);
    for &t in &DENSITY_TIMES {
        let d = density(&brownian, &DensityQuery::new(t, x, y, series_tol).map_err(internal)?).map_err(internal)?;
        oracle_gap = oracle_gap.max((d.value - mu0_oracle(t, x, y)).abs());
        for &nu in &DENSITY_ORDERS {
            let m = KilledBMModel::from_nu(nu).map_err(internal)?;
            let a = density(&m, &DensityQuery::new(t, x, y, series_tol).map_err(internal)?).map_err(internal)?;
            let b = density(&m, &DensityQuery::new(t, y, x, series_tol).map_err(internal)?).map_err(internal)?;
            asymmetry = asymmetry.max((a.value - b.value).abs());
            ck_gap = ck_gap.max(ck_check(&m, t, t, x, y, CK_QUAD_TOL).map_err(internal)?);
            if i == j {
                max_mass = max_mass.max(density_mass(&m, t, x, tol).map_err(internal)?);
            }
        }
    }
    let pass = oracle_gap < tol && asymmetry < 1e-14 && ck_gap < CK_LIMIT && max_mass <= 1.0 + tol;
    let detail = format!("oracle_gap={oracle_gap:.3e} asymmetry={asymmetry:.3e} ck_gap={ck_gap:.3e} mass={max_mass:.6}");
    Ok(record(i, j, pass, detail))
}
