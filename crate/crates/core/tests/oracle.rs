//! Fock-space oracle: sector examples, conservation laws, determinism and
//! agreement with the closed forms at moderate χ′.

use approx::assert_relative_eq;
use num_complex::Complex64;
use trilin_core::closed_forms::{ModelParams, MomentId, Quantity, VarianceId};
use trilin_core::fock::{build_sector, evolve_sector, oracle_moments, DEFAULT_TAIL_TOL};
use trilin_core::report::{analytic_report, MomentReport};

#[test]
fn small_sectors() {
    assert!(build_sector(0, 0.3, 1).is_empty());
    let s = evolve_sector(0, 0.3).unwrap();
    assert_eq!(s.amplitudes, vec![Complex64::new(1.0, 0.0)]);

    let off = build_sector(2, 0.1, 3);
    assert_relative_eq!(off[0], 0.1 * 2f64.sqrt(), max_relative = 1e-15);
    assert_relative_eq!(off[1], 0.2, max_relative = 1e-15);

    let chi = 0.37;
    let s = evolve_sector(1, chi).unwrap();
    let n_a = s.amp(1).norm_sqr();
    assert!((n_a - chi.sin().powi(2)).abs() < 1e-14);
}

#[test]
fn sectors_are_unitary_and_conserve_pairs() {
    for (m, chi) in [(5, 0.4), (60, 0.1), (500, 0.05), (1200, 0.02)] {
        let s = evolve_sector(m, chi).unwrap();
        let norm: f64 = s.amplitudes.iter().map(|u| u.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12, "m = {m}: {norm}");
        // n_a + n_c = m on every basis state, so the sector mean is m·norm.
        let total: f64 = (0..s.dim()).map(|k| s.amp(k).norm_sqr() * (k + (m - k)) as f64).sum();
        assert!((total - m as f64).abs() < 1e-12 * m as f64);
    }
}

#[test]
fn energy_is_conserved() {
    for (alpha, chi) in [(5.0, 0.1), (20.0, 0.025), (20.0, 0.05), (40.0, 0.0125)] {
        let r = oracle_moments(alpha, chi, DEFAULT_TAIL_TOL).unwrap();
        let t = r.truncation.as_ref().unwrap();
        assert!(r.energy_residual <= 1e-10 * alpha * alpha + t.tail_mass * alpha * alpha, "α = {alpha}: {}", r.energy_residual);
        assert!((t.norm - (1.0 - t.tail_mass)).abs() < 1e-12);
        assert_eq!(r.moments[&MomentId::NSignal], r.moments[&MomentId::NIdler]);
        assert_eq!(r.aa, Some(Complex64::new(0.0, 0.0)));
    }
}

fn bits(r: &MomentReport) -> Vec<u64> {
    let mut out: Vec<u64> = r.moments.values().flat_map(|z| [z.re.to_bits(), z.im.to_bits()]).collect();
    out.extend(r.variances.values().map(|v| v.to_bits()));
    out.push(r.energy_residual.to_bits());
    out
}

#[test]
fn identical_bits_for_any_thread_count() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| oracle_moments(15.0, 0.04, DEFAULT_TAIL_TOL).unwrap())
    };
    let (one, four) = (run(1), run(4));
    assert_eq!(bits(&one), bits(&four));
    assert_eq!(one.to_json(), four.to_json());
}

#[test]
fn squeezing_directions() {
    for chi_prime in [0.25, 0.5, 1.0, 2.0] {
        for chi in [0.05, 0.025] {
            if chi_prime / chi > 40.0 {
                continue;
            }
            let r = oracle_moments(chi_prime / chi, chi, DEFAULT_TAIL_TOL).unwrap();
            let v = |id| r.variances[&id];
            assert!(v(VarianceId::Vpc) < v(VarianceId::Vxc), "χ′ = {chi_prime}, χ = {chi}");
            assert!(v(VarianceId::VxpPlus) < 1.0 && 1.0 < v(VarianceId::VxpMinus), "χ′ = {chi_prime}, χ = {chi}");
        }
    }
}

#[test]
fn closed_forms_agree_at_moderate_coupling() {
    // At α = 20, χ′ = 0.5 every residual was measured below 0.25·χ³; the
    // frozen tolerance is χ³.
    let (alpha, chi) = (20.0, 0.025);
    let o = oracle_moments(alpha, chi, DEFAULT_TAIL_TOL).unwrap();
    let a = analytic_report(&ModelParams::new(alpha, chi).unwrap());
    for q in Quantity::all() {
        let err = (o.quantity(q) - a.quantity(q)).norm();
        assert!(err <= chi.powi(3), "{q}: {err:e}");
    }
    let n = o.quantity(Quantity::Moment(MomentId::NSignal)).re;
    assert!((n - 0.2714691242754).abs() < 1e-12);
}

#[test]
fn rejects_out_of_range_inputs() {
    assert!(oracle_moments(70.0, 0.01, DEFAULT_TAIL_TOL).is_err());
    assert!(oracle_moments(-1.0, 0.01, DEFAULT_TAIL_TOL).is_err());
    assert!(oracle_moments(10.0, 0.01, 0.0).is_err());
}
