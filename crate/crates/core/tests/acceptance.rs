//! Acceptance gate. Runs every criterion at its stated range and tolerance, prints one
//! PASS/FAIL line each and exits non-zero if any fails.

use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wronskian_core::darboux::{
    constant_c, crum_ratio, eigen_residual, norm_sq, norm_sq_closed_form, verify_intertwining,
    verify_norm_recurrence, verify_prop3,
};
use wronskian_core::orthopoly::{
    gegenbauer_orthogonality_integral, orthogonality_norm_closed_form, verify_cnk_recurrence,
};
use wronskian_core::scalar::int;
use wronskian_core::spectral::{
    ck_check, density, density_mass, exact_eigen_check_integer_nu, mu0_oracle, DensityQuery, KilledBMModel,
};
use wronskian_core::trig::sin_power;
use wronskian_core::wronskian::{
    check_prop1_factorization, consecutive_sines_closed, first_shift_closed, random_factorization_instance,
    recurrence_grid, shift_recurrence_holds, w_bruteforce, w_closed,
};

/// Failing cells, described, from evaluating `check` on every item in parallel.
fn failures<T: Sync, F: Fn(&T) -> Result<(), String> + Sync>(items: &[T], check: F) -> Vec<String> {
    let next = AtomicUsize::new(0);
    let out = Mutex::new(Vec::new());
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = items.get(i) else { break };
                if let Err(e) = check(item) {
                    out.lock().unwrap().push((i, e));
                }
            });
        }
    });
    let mut fails = out.into_inner().unwrap();
    fails.sort();
    fails.into_iter().map(|(_, e)| e).collect()
}

fn grid(n: std::ops::RangeInclusive<usize>, k: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
    n.flat_map(|n| k.clone().map(move |k| (n, k))).collect()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

struct Gate {
    failed: usize,
}

impl Gate {
    fn run(&mut self, label: &str, body: impl FnOnce() -> (usize, Vec<String>)) {
        let start = Instant::now();
        let (checks, fails) = body();
        let secs = start.elapsed().as_secs_f64();
        let status = if fails.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} {label}: {} of {checks} checks ok ({secs:.1}s)", checks - fails.len());
        for f in fails.iter().take(5) {
            println!("    {f}");
        }
        if !fails.is_empty() {
            self.failed += 1;
        }
    }
}

fn three_way() -> (usize, Vec<String>) {
    let cells = grid(1..=8, 0..=12);
    let induced = recurrence_grid(8, 12);
    let fails = failures(&cells, |&(n, k)| {
        let brute = w_bruteforce(n, k).map_err(|e| e.to_string())?;
        ensure(brute == induced[n][k], || format!("n={n} k={k}: brute force != recurrence"))?;
        ensure(brute == w_closed(n, k), || format!("n={n} k={k}: brute force != closed form"))
    });
    (cells.len(), fails)
}

fn base_case() -> (usize, Vec<String>) {
    let ns: Vec<usize> = (1..=9).collect();
    let mut fails = failures(&ns, |&n| {
        let brute = w_bruteforce(n, 0).map_err(|e| e.to_string())?;
        ensure(brute == consecutive_sines_closed(n), || format!("n={n}"))
    });
    let spots = [(2usize, -2i64, 3u32), (3, -16, 6)];
    for (n, c, p) in spots {
        if w_bruteforce(n, 0).unwrap() != sin_power(p).scale_rational(&int(c)) {
            fails.push(format!("spot value n={n}"));
        }
    }
    (ns.len() + spots.len(), fails)
}

fn shift_identities() -> (usize, Vec<String>) {
    let ns: Vec<usize> = (1..=8).collect();
    let mut fails = failures(&ns, |&n| {
        let brute = w_bruteforce(n, 1).map_err(|e| e.to_string())?;
        ensure(brute == first_shift_closed(n), || format!("first shift n={n}"))
    });
    let shift_cells = grid(2..=8, 0..=10);
    fails.extend(failures(&shift_cells, |&(n, k)| {
        let ok = shift_recurrence_holds(n, k).map_err(|e| e.to_string())?;
        ensure(ok, || format!("shift recurrence n={n} k={k}"))
    }));
    let cnk_cells = grid(2..=12, 0..=20);
    fails.extend(failures(&cnk_cells, |&(n, k)| {
        ensure(verify_cnk_recurrence(n, k), || format!("Gegenbauer identity n={n} k={k}"))
    }));
    (ns.len() + shift_cells.len() + cnk_cells.len(), fails)
}

fn factorization() -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let instances: Vec<_> = (0..100).map(|_| random_factorization_instance(&mut rng)).collect();
    let indexed: Vec<(usize, _)> = instances.into_iter().enumerate().collect();
    let fails = failures(&indexed, |(i, (f, gs))| {
        let ok = check_prop1_factorization(f, gs).map_err(|e| e.to_string())?;
        ensure(ok, || format!("instance {i} (n={})", gs.len() + 1))
    });
    (indexed.len(), fails)
}

fn chain() -> (usize, Vec<String>) {
    let mut checks = 0;
    let mut fails = Vec::new();
    let residual_cells = grid(2..=6, 0..=6);
    checks += residual_cells.len();
    fails.extend(failures(&residual_cells, |&(n, k)| {
        let r = eigen_residual(n, k).map_err(|e| e.to_string())?;
        ensure(r.is_zero(), || format!("eigen-residual n={n} k={k}"))
    }));
    let intertwine_cells = grid(1..=5, 1..=6);
    checks += intertwine_cells.len();
    fails.extend(failures(&intertwine_cells, |&(n, k)| {
        let ok = verify_intertwining(n, k).map_err(|e| e.to_string())?;
        ensure(ok, || format!("intertwining n={n} k={k}"))
    }));
    let recurrence_cells = grid(2..=5, 1..=5);
    checks += recurrence_cells.len();
    fails.extend(failures(&recurrence_cells, |&(n, k)| {
        let ok = verify_norm_recurrence(n, k).map_err(|e| e.to_string())?;
        ensure(ok, || format!("norm recurrence n={n} k={k}"))
    }));
    let wide = grid(1..=6, 0..=6);
    checks += 3 * wide.len();
    fails.extend(failures(&wide, |&(n, k)| {
        let g = crum_ratio(n, k).map_err(|e| e.to_string())?;
        ensure(norm_sq(&g) == norm_sq_closed_form(n, k), || format!("closed-form norm n={n} k={k}"))?;
        let c = constant_c(n, k).map_err(|e| e.to_string())?;
        let unit = c.sign_and_pi_power().is_some_and(|(_, e)| e == n as i32 - 1);
        ensure(unit, || format!("|C| != pi^{} at n={n} k={k}: {}", n - 1, c.value))?;
        let ok = verify_prop3(n, k).map_err(|e| e.to_string())?;
        ensure(ok, || format!("energy identity n={n} k={k}"))
    }));
    (checks, fails)
}

fn integer_order() -> (usize, Vec<String>) {
    let eigen_cells = grid(1..=6, 0..=8);
    let mut fails = failures(&eigen_cells, |&(n, k)| {
        let c = exact_eigen_check_integer_nu(n, k);
        ensure(c.residual_zero, || format!("eigen-equation n={n} k={k}"))?;
        ensure(c.norm_matches, || format!("norm n={n} k={k}: {}", c.norm_sq))
    });
    let triples: Vec<(u32, usize, usize)> = (1..=6)
        .flat_map(|nu| (0..=8).flat_map(move |k| (0..=8).map(move |l| (nu, k, l))))
        .collect();
    fails.extend(failures(&triples, |&(nu, k, l)| {
        let value = gegenbauer_orthogonality_integral(k, l, nu);
        let ok = if k == l {
            value == orthogonality_norm_closed_form(k, nu)
        } else {
            value.is_zero()
        };
        ensure(ok, || format!("orthogonality nu={nu} k={k} l={l}: {value}"))
    }));
    (eigen_cells.len() + triples.len(), fails)
}

fn spectral() -> (usize, Vec<String>) {
    let points: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let times = [0.05, 0.2, 1.0];
    let orders = [1.0, 2.0, 3.7];
    let mut checks = 0;
    let mut fails = Vec::new();

    let brownian = KilledBMModel::new(0.0).unwrap();
    let mut oracle_cells = Vec::new();
    let mut model_cells = Vec::new();
    let mut mass_cells = Vec::new();
    for &t in &times {
        for &x in &points {
            for &y in &points {
                oracle_cells.push((t, x, y));
                for &nu in &orders {
                    model_cells.push((nu, t, x, y));
                }
            }
            for &nu in &orders {
                mass_cells.push((nu, t, x));
            }
        }
    }
    checks += oracle_cells.len();
    fails.extend(failures(&oracle_cells, |&(t, x, y)| {
        let r = density(&brownian, &DensityQuery::new(t, x, y, 1e-14).unwrap()).map_err(|e| e.to_string())?;
        let o = mu0_oracle(t, x, y);
        ensure((r.value - o).abs() < 1e-10, || format!("image oracle t={t} x={x} y={y}: {} vs {o}", r.value))
    }));

    checks += model_cells.len();
    fails.extend(failures(&model_cells, |&(nu, t, x, y)| {
        let m = KilledBMModel::from_nu(nu).unwrap();
        let a = density(&m, &DensityQuery::new(t, x, y, 1e-12).unwrap()).map_err(|e| e.to_string())?;
        let b = density(&m, &DensityQuery::new(t, y, x, 1e-12).unwrap()).map_err(|e| e.to_string())?;
        ensure((a.value - b.value).abs() < 1e-14, || format!("symmetry nu={nu} t={t} x={x} y={y}"))
    }));

    checks += 2 * mass_cells.len();
    fails.extend(failures(&mass_cells, |&(nu, t, x)| {
        let m = KilledBMModel::from_nu(nu).unwrap();
        let mass = density_mass(&m, t, x, 1e-10).map_err(|e| e.to_string())?;
        ensure(mass <= 1.0 + 1e-10, || format!("mass nu={nu} t={t} x={x}: {mass}"))?;
        let y = 1.0 - x;
        let gap = ck_check(&m, t, t, x, y, 1e-6).map_err(|e| e.to_string())?;
        ensure(gap < 1e-6, || format!("Chapman-Kolmogorov nu={nu} t={t} x={x} y={y}: {gap:e}"))
    }));
    (checks, fails)
}

fn truncation() -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let queries: Vec<(f64, DensityQuery)> = (0..20)
        .map(|_| {
            let nu = rng.gen_range(1.0..6.0);
            let t = rng.gen_range(0.01..1.0);
            let x = rng.gen_range(0.02..0.98);
            let y = rng.gen_range(0.02..0.98);
            let tol = 10f64.powi(-rng.gen_range(4..=10));
            (nu, DensityQuery::new(t, x, y, tol).unwrap())
        })
        .collect();
    let fails = failures(&queries, |(nu, q)| {
        let m = KilledBMModel::from_nu(*nu).unwrap();
        let mut prev = density(&m, q).map_err(|e| e.to_string())?;
        let mut tol = q.tol;
        for _ in 0..2 {
            tol /= 2.0;
            let next = density(&m, &DensityQuery { tol, ..*q }).map_err(|e| e.to_string())?;
            let change = (next.raw_value - prev.raw_value).abs();
            ensure(change < prev.tail_bound, || {
                format!("nu={nu:.3} {q:?}: change {change:e} >= bound {:e}", prev.tail_bound)
            })?;
            prev = next;
        }
        Ok(())
    });
    (queries.len(), fails)
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };
    gate.run("three-way Wronskian agreement, n 1..8, k 0..12 (exact)", three_way);
    gate.run("consecutive-sine base case, n 1..9 (exact)", base_case);
    gate.run("first-shift closed form, shift recurrence, Gegenbauer identity (exact)", shift_identities);
    gate.run("Wronskian factorization, 100 seeded instances (exact)", factorization);
    gate.run("Crum chain residuals, intertwining, norms, |C|, energy identity (exact)", chain);
    gate.run("integer-order eigenfunctions and Gegenbauer orthogonality (exact)", integer_order);
    gate.run("density: image oracle 1e-10, symmetry 1e-14, mass, Chapman-Kolmogorov 1e-6", spectral);
    gate.run("truncation honesty, 20 seeded queries, tol halved twice", truncation);
    if gate.failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", gate.failed);
        ExitCode::FAILURE
    }
}
