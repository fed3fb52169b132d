//! The acceptance suite: one report per criterion, shared by the `selftest`
//! subcommand and the `acceptance` test target.

use super::{sci_list, contour_determinants, dt_logdet_check, interval_determinants, Check, SweepConfig, TOL_LIMIT, TOL_RADIUS};
use crate::chfparam::parametrix::{Endpoint, Parametrix, ParametrixForm, BOUNDARY_ANGLES, DEFAULT_DISK_RADIUS};
use crate::chfparam::{asymptotic_u, principal_u, series_u, tricomi_psi_arg};
use crate::error::Result;
use crate::fredholm::{self, determinant_with_estimate, Support};
use crate::kernels::{k_kt, u_kt, KernelHandle, SupportTag, VtKernel};
use crate::l2half::HalfLineGrid;
use crate::quadgrid::gauss_interval;
use crate::rhpcore::{
    beta_diagnostics, chi_diagnostics, factorization_diagnostics, oscillation_nodes, solve_beta_default, solve_chi,
    DiagnosticRow, ProbeSet,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::sync::Arc;
use std::time::Instant;

/// Interval/contour determinant agreement (relative).
pub const TOL_INTERVAL_CONTOUR: f64 = 1e-7;
/// Runtime budget per `x` of the headline sweep, seconds.
pub const RUNTIME_BUDGET_S: f64 = 120.0;
pub const TOL_MONODROMY: f64 = 1e-9;
pub const TOL_ODE: f64 = 1e-6;
pub const TOL_OVERLAP: f64 = 1e-7;
pub const TOL_EI: f64 = 1e-10;
pub const TOL_PARAMETRIX_JUMP: f64 = 1e-5;
pub const TOL_RANK_ONE: f64 = 1e-12;

/// `e E_1(1) = Ψ(1,1;1)` (the Gompertz constant).
pub const GOMPERTZ: f64 = 0.596_347_362_323_194_074_341_078_499_369_279_376_074;

/// Result of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
    /// Informational lines, not part of pass/fail.
    pub info: Vec<String>,
    pub runtime_s: f64,
}

impl CriterionReport {
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    /// One line: `criterion N PASS|FAIL title (detail; detail)`.
    pub fn line(&self) -> String {
        let details: Vec<String> = self.checks.iter().map(|c| c.line()).collect();
        format!(
            "criterion {} {} {} [{:.1}s] ({})",
            self.id,
            if self.pass() { "PASS" } else { "FAIL" },
            self.title,
            self.runtime_s,
            details.join("; ")
        )
    }
}

fn timed(id: usize, title: &'static str, f: impl FnOnce() -> Result<(Vec<Check>, Vec<String>)>) -> CriterionReport {
    let t0 = Instant::now();
    let (checks, info) = match f() {
        Ok(v) => v,
        Err(e) => (vec![Check::new("evaluation", false, format!("error: {e}"))], Vec::new()),
    };
    CriterionReport { id, title, checks, info, runtime_s: t0.elapsed().as_secs_f64() }
}

/// Large-`x` limit of `det(I+V)/det(I+V0)` against `det(I+U_+)det(I+U_-)`.
pub fn criterion_1() -> CriterionReport {
    timed(1, "large-x determinant ratio limit", || {
        let cfg = SweepConfig::headline();
        let cd = contour_determinants(&cfg)?;
        let rows: Vec<(f64, Complex64, f64)> = cfg
            .x_list
            .par_iter()
            .map(|&x| {
                let t0 = Instant::now();
                let pd = cfg.problem(x)?;
                let (dv, dv0) = interval_determinants(&pd, cfg.interval_nodes(&pd)?)?;
                Ok((x, dv / dv0, t0.elapsed().as_secs_f64()))
            })
            .collect::<Result<_>>()?;
        let rel = |p: Complex64| -> Vec<f64> { rows.iter().map(|r| (r.1 / p - 1.0).norm()).collect() };
        let e = rel(cd.product());
        let ef = rel(cd.product_factorized());
        let ef_s = sci_list(&ef);
        let e_s = sci_list(&e);
        let last = e.len() - 1;
        let slowest = rows.iter().map(|r| r.2).fold(0.0, f64::max);
        let checks = vec![
            Check::new(
                "U+ U- product",
                e[last] < TOL_LIMIT && e[last] < e[0],
                format!("relative errors {e_s} at x = {:?}, need < {TOL_LIMIT} at the last x and decreasing", cfg.x_list),
            ),
            Check::new("runtime", slowest < RUNTIME_BUDGET_S, format!("slowest x took {slowest:.2}s")),
        ];
        let info = vec![
            format!(
                "det(I+U+) = {:.13}, det(I+U-) = {:.13}, det(I+U_11) = {:.13}, det(I+U_21) = {:.13}",
                cd.det_u_plus, cd.det_u_minus, cd.det_u1, cd.det_u2
            ),
            format!(
                "factorized route det(I+U_11)det(I+U_21): relative errors {ef_s} ({})",
                if ef[last] < TOL_LIMIT && ef[last] < ef[0] { "within tolerance and decreasing" } else { "not within tolerance" }
            ),
            format!("ratios {:?}", rows.iter().map(|r| format!("{:.10}", r.1)).collect::<Vec<_>>()),
        ];
        Ok((checks, info))
    })
}

/// Parameter sets of criterion 2: `(γ, t)`.
pub const INTERVAL_CONTOUR_CASES: [(f64, f64, f64); 3] = [(0.2, 1.0, 0.0), (0.5, 0.7, 0.0), (0.1, 0.3, 0.05)];

fn case_config(gamma: f64, t: Complex64) -> SweepConfig {
    let mut cfg = SweepConfig::headline();
    cfg.f.params = vec![gamma];
    cfg.t_re = t.re;
    cfg.t_im = t.im;
    cfg.x_list = vec![10.0];
    cfg
}

/// `det(I+K_{k;t})` on the interval against `det(I+U_{k;t})` on a contour.
pub fn criterion_2() -> CriterionReport {
    timed(2, "interval/contour determinant identity", || {
        let mut checks = Vec::new();
        for (g, tr, ti) in INTERVAL_CONTOUR_CASES {
            let t = Complex64::new(tr, ti);
            let cfg = case_config(g, t);
            let pd = cfg.problem(10.0)?;
            for k in [1usize, 2] {
                let dk = fredholm::determinant(&k_kt(&pd, k)?, Support::graded(60, pd.a, pd.b, 3)?)?.value;
                let r = (0.2f64).min(pd.c / (4.0 * t.norm()));
                let du = fredholm::determinant(&u_kt(&pd, k)?, Support::stadium(pd.a, pd.b, r, 60.0, pd.c / (2.0 * t.norm()))?)?.value;
                let rel = (dk - du).norm() / du.norm();
                checks.push(Check::new(
                    &format!("gamma={g} t={t} k={k}"),
                    rel < TOL_INTERVAL_CONTOUR,
                    format!("det(I+K) = {dk:.12}, det(I+U) = {du:.12}, relative {rel:.2e}"),
                ));
            }
        }
        Ok((checks, Vec::new()))
    })
}

fn rows_check(name: &str, rows: &[DiagnosticRow]) -> Check {
    let bad = rows.iter().filter(|r| !r.pass).count();
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let tol = rows.first().map(|r| r.tolerance).unwrap_or(f64::NAN);
    Check::new(name, !rows.is_empty() && bad == 0, format!("{} probes, worst {worst:.2e} (tolerance {tol:.0e})", rows.len()))
}

/// Solvability of the `χ` and `β_k` problems.
pub fn criterion_3() -> CriterionReport {
    timed(3, "operator-valued solvability", || {
        let cfg = SweepConfig::headline();
        let pd = cfg.problem(10.0)?;
        let grid = HalfLineGrid::new(&pd, cfg.ns)?;
        let probes = ProbeSet::seeded(pd.a, pd.b, cfg.seed);
        let chi = solve_chi(&pd, &gauss_interval(oscillation_nodes(&pd), pd.a, pd.b)?, &grid)?;
        let rows = chi_diagnostics(&chi, &probes)?;
        let b1 = solve_beta_default(&pd, &grid, 1)?;
        let b2 = solve_beta_default(&pd, &grid, 2)?;
        let mut brows = beta_diagnostics(&b1, &probes)?;
        brows.extend(beta_diagnostics(&b2, &probes)?);
        let pick = |rows: &[DiagnosticRow], name: &str| -> Vec<DiagnosticRow> {
            rows.iter().filter(|r| r.object.starts_with(name)).cloned().collect()
        };
        let bjump: Vec<DiagnosticRow> = brows.iter().filter(|r| r.object.ends_with("_jump")).cloned().collect();
        let checks = vec![
            rows_check("det chi = 1", &pick(&rows, "det_chi")),
            rows_check("chi jump", &pick(&rows, "chi_jump")),
            rows_check("beta_k jump", &bjump),
            rows_check("det G_chi = 1", &pick(&rows, "det_g_chi")),
        ];
        let mut others: Vec<DiagnosticRow> = rows
            .iter()
            .filter(|r| ["chi_times_inverse", "chi_plemelj", "fr_reconstruction"].contains(&r.object.as_str()))
            .cloned()
            .collect();
        others.extend(pick(&brows, "det_beta"));
        others.extend(factorization_diagnostics(&b1, &b2, &probes)?);
        let info = vec![format!("supplementary: {}", rows_check("inverse, Plemelj, reconstruction, det beta, factorization", &others).line())];
        Ok((checks, info))
    })
}

/// `∂_t ln det(I+V_t)` by finite differences against the contour-trace formula.
pub fn criterion_4() -> CriterionReport {
    timed(4, "t-derivative identity", || {
        let mut cfg = SweepConfig::headline();
        cfg.x_list = vec![100.0];
        let r = dt_logdet_check(&cfg, Complex64::new(0.5, 0.0), 1e-4)?;
        let row = &r.rows[0];
        let checks = vec![Check::new(
            "finite difference vs contour trace",
            row.pass,
            format!(
                "{:.14} vs {:.14}, difference {:.2e} (tolerance {:.0e})",
                row.finite_difference, row.contour_trace, row.fd_vs_trace, row.tolerance
            ),
        )];
        let info = vec![format!("reduced form {:.12}, gap to finite difference {:.2e}", row.reduced, row.fd_vs_reduced)];
        Ok((checks, info))
    })
}

/// Largest monodromy residual over `count` seeded `(a, z)`, `|a| ≤ 1`, `1 ≤ |z| ≤ 10`.
/// The continued-sheet value from the recursion is compared with the
/// logarithmic series evaluated directly at the shifted argument.
pub fn monodromy_residual(seed: u64, count: usize) -> Result<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut up, mut dn): (f64, f64) = (0.0, 0.0);
    for _ in 0..count {
        let a = Complex64::from_polar(rng.gen_range(0.0..1.0), rng.gen_range(-PI..PI));
        let r = rng.gen_range(1.0..10.0);
        let th = rng.gen_range(-PI..PI);
        for (shift, acc) in [(2.0 * PI, &mut up), (-2.0 * PI, &mut dn)] {
            let (v, _) = tricomi_psi_arg(a, r, th + shift)?;
            let (s, _) = series_u(a, 1, r, th + shift);
            *acc = acc.max((v - s).norm() / s.norm());
        }
    }
    Ok((up, dn))
}

/// Largest relative residual of `z y'' + (1-z) y' - a y` with `y' = -a U(a+1,2,z)`,
/// `y'' = a(a+1) U(a+2,3,z)`.
pub fn ode_residual(seed: u64, count: usize) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let a = Complex64::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(-PI..PI));
        let r = rng.gen_range(0.5..40.0);
        let th = rng.gen_range(-0.95 * PI..0.95 * PI);
        let z = Complex64::from_polar(r, th);
        let y = principal_u(a, 1, r, th)?.0;
        let y1 = -a * principal_u(a + 1.0, 2, r, th)?.0;
        let y2 = a * (a + 1.0) * principal_u(a + 2.0, 3, r, th)?.0;
        let terms = [z * y2, (1.0 - z) * y1, a * y];
        let scale = terms.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if scale > 0.0 {
            worst = worst.max((terms[0] + terms[1] - terms[2]).norm() / scale);
        }
    }
    Ok(worst)
}

/// Largest relative gap between the series and the asymptotic expansion on
/// `15 ≤ |z| ≤ 25`.
pub fn overlap_residual() -> f64 {
    let mut worst: f64 = 0.0;
    for a in [Complex64::new(0.3, 0.0), Complex64::new(-0.4, 0.2), Complex64::new(0.1, -0.35), Complex64::new(1.0, 0.5)] {
        for r in [15.0, 20.0, 25.0] {
            for th in [-2.8, -1.5, 0.0, 1.2, 2.9] {
                let (s, _) = series_u(a, 1, r, th);
                let (v, _) = asymptotic_u(a, 1, r, th);
                worst = worst.max((s - v).norm() / s.norm());
            }
        }
    }
    worst
}

/// Tricomi function suite.
pub fn criterion_5() -> CriterionReport {
    timed(5, "confluent hypergeometric suite", || {
        let (up, dn) = monodromy_residual(0, 20)?;
        let ode = ode_residual(0, 40)?;
        let ov = overlap_residual();
        let ei = (tricomi_psi_arg(Complex64::new(1.0, 0.0), 1.0, 0.0)?.0 - GOMPERTZ).norm();
        let checks = vec![
            Check::new("monodromy", up.max(dn) < TOL_MONODROMY, format!("+2pi {up:.2e}, -2pi {dn:.2e} over 20 draws")),
            Check::new("ODE", ode < TOL_ODE, format!("relative residual {ode:.2e}")),
            Check::new("series/asymptotic overlap", ov < TOL_OVERLAP, format!("{ov:.2e} on 15 <= |z| <= 25")),
            Check::new("exponential integral", ei < TOL_EI, format!("|Psi(1,1;1) - e E1(1)| = {ei:.2e}")),
        ];
        Ok((checks, Vec::new()))
    })
}

/// Endpoint parametrices: jumps at `x = 100` and the boundary decay from 100 to 200.
pub fn criterion_6() -> CriterionReport {
    timed(6, "endpoint parametrices", || {
        let cfg = SweepConfig::headline();
        let pd = cfg.problem(100.0)?;
        let grid = HalfLineGrid::new(&pd, 32)?;
        let b1 = Arc::new(solve_beta_default(&pd, &grid, 1)?);
        let b2 = Arc::new(solve_beta_default(&pd, &grid, 2)?);
        let delta = DEFAULT_DISK_RADIUS;
        let mut checks = Vec::new();
        let mut info = Vec::new();
        for end in [Endpoint::A, Endpoint::B] {
            let p = Parametrix::new(end, &pd, b1.clone(), b2.clone(), delta, ParametrixForm::Consistent)?;
            let mut jump: f64 = 0.0;
            for y in [0.05 * delta, 0.2 * delta] {
                for upper in [true, false] {
                    jump = jump.max(p.jump_residual(y, upper)?);
                }
            }
            checks.push(Check::new(&format!("{end:?} jumps"), jump < TOL_PARAMETRIX_JUMP, format!("max residual {jump:.2e}")));
            let r1 = p.boundary_residual(&BOUNDARY_ANGLES)?;
            let r2 = p.with_x(200.0).boundary_residual(&BOUNDARY_ANGLES)?;
            let e = p.epsilon(&BOUNDARY_ANGLES)?;
            let expected = 2f64.powf(e - 1.0);
            let ratio = r2 / r1;
            checks.push(Check::new(
                &format!("{end:?} boundary decay"),
                ratio > 0.5 * expected && ratio < 2.0 * expected,
                format!("sup|P - I| {r1:.3e} -> {r2:.3e}, ratio {ratio:.3} vs 2^(eps-1) = {expected:.3}"),
            ));
            info.push(format!("{end:?} cut continuity {:.2e}", p.cut_residual(1e-7)?));
            let q = Parametrix::new(end, &pd, b1.clone(), b2.clone(), delta, ParametrixForm::Alternate)?;
            let mut jq: f64 = 0.0;
            for upper in [true, false] {
                jq = jq.max(q.jump_residual(0.05 * delta, upper)?);
            }
            info.push(format!("{end:?} alternative sector matrices: jump {jq:.2e}, cut {:.2e}", q.cut_residual(1e-7)?));
        }
        Ok((checks, info))
    })
}

#[derive(Debug)]
struct Separable;

impl KernelHandle for Separable {
    fn eval(&self, l: Complex64, m: Complex64) -> Result<Complex64> {
        Ok(0.3 * (0.7 * l).exp() * (1.0 + m * m))
    }
    fn diag(&self, l: Complex64) -> Result<Complex64> {
        self.eval(l, l)
    }
    fn support(&self) -> SupportTag {
        SupportTag::Interval
    }
}

/// Engine sanity: closed forms, refinement, contour-radius invariance.
pub fn criterion_7() -> CriterionReport {
    timed(7, "engine sanity", || {
        // det(I + 0.3 e^{0.7λ}(1+μ²)) on [0,1] = 1 + 0.3 ∫ e^{0.7m}(1+m²) dm
        let a: f64 = 0.7;
        let prim = |m: f64| (a * m).exp() * (1.0 / a + m * m / a - 2.0 * m / (a * a) + 2.0 / (a * a * a));
        let exact = 1.0 + 0.3 * (prim(1.0) - prim(0.0));
        let d = fredholm::determinant(&Separable, Support::gauss(24, 0.0, 1.0)?)?.value;
        let rank_one = (d - exact).norm();

        let cfg = SweepConfig::headline();
        let pd = cfg.problem(50.0)?;
        let v = VtKernel::new(&pd);
        let est: Vec<f64> = [24usize, 48, 96]
            .iter()
            .map(|&n| Ok(determinant_with_estimate(&v, Support::gauss(n, pd.a, pd.b)?)?.estimate))
            .collect::<Result<_>>()?;
        // an estimate already at the roundoff floor cannot halve again
        let floor = 1e-13;
        let halves = est.windows(2).all(|w| w[1] <= 0.5 * w[0] || w[1] < floor);
        let est_s = sci_list(&est);

        let cd = contour_determinants(&cfg)?;
        let mut gap = cd.radius_gap;
        for (g, tr, ti) in INTERVAL_CONTOUR_CASES {
            let t = Complex64::new(tr, ti);
            let pd = case_config(g, t).problem(10.0)?;
            let r = (0.2f64).min(pd.c / (4.0 * t.norm()));
            let bound = pd.c / (2.0 * t.norm());
            for k in [1usize, 2] {
                let u = u_kt(&pd, k)?;
                let d1 = fredholm::determinant(&u, Support::stadium(pd.a, pd.b, r, 60.0, bound)?)?.value;
                let d2 = fredholm::determinant(&u, Support::stadium(pd.a, pd.b, 0.5 * r, 60.0, bound)?)?.value;
                gap = gap.max((d1 - d2).norm());
            }
        }
        let checks = vec![
            Check::new("rank-one closed form", rank_one < TOL_RANK_ONE, format!("|det - closed form| = {rank_one:.2e}")),
            Check::new("refinement halves estimates", halves, format!("estimates at n = 24, 48, 96 on x = 50: {est_s}")),
            Check::new("contour-radius invariance", gap < TOL_RADIUS, format!("max |det(r) - det(r/2)| = {gap:.2e}")),
        ];
        Ok((checks, Vec::new()))
    })
}

/// Every criterion, in order.
pub fn all() -> Vec<CriterionReport> {
    vec![criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6(), criterion_7()]
}
