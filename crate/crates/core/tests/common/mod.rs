//! Independent references for the integrator, used only by tests.
//!
//! The fine-step reference advances the amplitudes with Strang splitting:
//! exact diagonal decay for half a step, the exact rotation generated by the
//! coupling over a full step, and another half-step of decay. It shares no
//! code with the RK4 propagator.

#![allow(dead_code)]

use fuzzy_rabi::{FuzzinessSchedule, PhysicsConfig, ReadoutCurve, TrajectoryResult};

pub const REFINEMENT: usize = 64;

/// Amplitude factor `exp(-κ·gap²·t)` of a decoupled damped level.
pub fn closed_form_decay(kappa: f64, e_gap_sq: f64, t: f64) -> f64 {
    (-kappa * e_gap_sq * t).exp()
}

/// Fine-step reference trajectory with `REFINEMENT × n_steps` splitting steps,
/// recorded on the same grid as the production integrator.
pub fn tiny_step_reference(
    curve: &ReadoutCurve,
    schedule: &FuzzinessSchedule,
    phys: &PhysicsConfig,
    n_steps: usize,
    record_stride: usize,
) -> TrajectoryResult {
    let fine = n_steps * REFINEMENT;
    let h = phys.t_total / fine as f64;
    // (re, im) pairs to stay clear of the library's complex arithmetic.
    let (mut a_re, mut a_im, mut b_re, mut b_im) = (1.0f64, 0.0f64, 0.0f64, 0.0f64);
    let pop = |a_re: f64, a_im: f64, b_re: f64, b_im: f64| {
        let n1 = a_re * a_re + a_im * a_im;
        let n2 = b_re * b_re + b_im * b_im;
        (n2 / (n1 + n2), n1 + n2)
    };
    let mut c2sq_series = vec![0.0];
    let mut norm_series = vec![1.0];
    let every = REFINEMENT * record_stride;
    for k in 0..fine {
        let tm = (k as f64 + 0.5) * h;
        let e = curve.eval(tm);
        let kappa = schedule.kappa_at(tm, e, phys);
        let d1 = (-0.5 * h * kappa * (phys.e1 - e).powi(2)).exp();
        let d2 = (-0.5 * h * kappa * (phys.e2 - e).powi(2)).exp();
        let theta = 0.5 * phys.v0 * phys.pulse_envelope(tm) * h;
        let (s, c) = theta.sin_cos();

        a_re *= d1;
        a_im *= d1;
        b_re *= d2;
        b_im *= d2;
        // c1' = cos θ c1 - i sin θ c2 ; c2' = cos θ c2 - i sin θ c1
        let (na_re, na_im) = (c * a_re + s * b_im, c * a_im - s * b_re);
        let (nb_re, nb_im) = (c * b_re + s * a_im, c * b_im - s * a_re);
        a_re = na_re * d1;
        a_im = na_im * d1;
        b_re = nb_re * d2;
        b_im = nb_im * d2;

        if (k + 1) % every == 0 {
            let (p, n) = pop(a_re, a_im, b_re, b_im);
            c2sq_series.push(p);
            norm_series.push(n);
        }
    }
    let (final_c2sq, weight) = pop(a_re, a_im, b_re, b_im);
    TrajectoryResult {
        weight,
        c2sq_series,
        norm_series,
        final_c2sq,
        underflow: false,
    }
}

/// Envelope area `∫₀ᵗ env` by composite Simpson with `n` (even) panels.
pub fn pulse_area(phys: &PhysicsConfig, t: f64, n: usize) -> f64 {
    let h = t / n as f64;
    let mut acc = phys.pulse_envelope(0.0) + phys.pulse_envelope(t);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * phys.pulse_envelope(i as f64 * h);
    }
    acc * h / 3.0
}
