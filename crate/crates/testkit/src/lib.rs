//! Test-only numerical oracles.
//!
//! The solver here integrates the constant-coefficient Helmholtz ODE
//! `u'' = -q u` step by step with an adaptive Runge-Kutta scheme. It shares
//! no code with the closed-form propagators it is used to check.

/// State vector (u, u') advanced over `length` by adaptive Dormand-Prince 5(4).
///
/// `q` is the coefficient in `u'' = -q u`; it may be negative (evanescent
/// layer) or zero. `tol` is used as both absolute and relative tolerance.
pub fn integrate_helmholtz(q: f64, length: f64, state: [f64; 2], tol: f64) -> [f64; 2] {
    assert!(length >= 0.0, "layer length must be non-negative");
    assert!(tol > 0.0, "tolerance must be positive");
    if length == 0.0 {
        return state;
    }

    let f = |y: [f64; 2]| [y[1], -q * y[0]];

    // Dormand-Prince 5(4) tableau.
    const A21: f64 = 1.0 / 5.0;
    const A31: f64 = 3.0 / 40.0;
    const A32: f64 = 9.0 / 40.0;
    const A41: f64 = 44.0 / 45.0;
    const A42: f64 = -56.0 / 15.0;
    const A43: f64 = 32.0 / 9.0;
    const A51: f64 = 19372.0 / 6561.0;
    const A52: f64 = -25360.0 / 2187.0;
    const A53: f64 = 64448.0 / 6561.0;
    const A54: f64 = -212.0 / 729.0;
    const A61: f64 = 9017.0 / 3168.0;
    const A62: f64 = -355.0 / 33.0;
    const A63: f64 = 46732.0 / 5247.0;
    const A64: f64 = 49.0 / 176.0;
    const A65: f64 = -5103.0 / 18656.0;
    // Fifth-order solution weights (also the a7j row).
    const B1: f64 = 35.0 / 384.0;
    const B3: f64 = 500.0 / 1113.0;
    const B4: f64 = 125.0 / 192.0;
    const B5: f64 = -2187.0 / 6784.0;
    const B6: f64 = 11.0 / 84.0;
    // Embedded fourth-order weights.
    const E1: f64 = 5179.0 / 57600.0;
    const E3: f64 = 7571.0 / 16695.0;
    const E4: f64 = 393.0 / 640.0;
    const E5: f64 = -92097.0 / 339200.0;
    const E6: f64 = 187.0 / 2100.0;
    const E7: f64 = 1.0 / 40.0;

    let axpy = |y: [f64; 2], h: f64, terms: &[(f64, [f64; 2])]| {
        let mut out = y;
        for &(c, k) in terms {
            out[0] += h * c * k[0];
            out[1] += h * c * k[1];
        }
        out
    };

    let mut y = state;
    let mut x = 0.0_f64;
    let freq = q.abs().sqrt().max(1.0);
    let mut h = (length / 16.0).min(0.1 / freq);
    let mut steps = 0_u64;

    while x < length {
        assert!(steps < 10_000_000, "oracle integration failed to converge");
        steps += 1;
        if x + h > length {
            h = length - x;
        }

        let k1 = f(y);
        let k2 = f(axpy(y, h, &[(A21, k1)]));
        let k3 = f(axpy(y, h, &[(A31, k1), (A32, k2)]));
        let k4 = f(axpy(y, h, &[(A41, k1), (A42, k2), (A43, k3)]));
        let k5 = f(axpy(y, h, &[(A51, k1), (A52, k2), (A53, k3), (A54, k4)]));
        let k6 = f(axpy(
            y,
            h,
            &[(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)],
        ));
        let y5 = axpy(y, h, &[(B1, k1), (B3, k3), (B4, k4), (B5, k5), (B6, k6)]);
        let k7 = f(y5);
        let y4 = axpy(
            y,
            h,
            &[(E1, k1), (E3, k3), (E4, k4), (E5, k5), (E6, k6), (E7, k7)],
        );

        let mut err: f64 = 0.0;
        for d in 0..2 {
            let scale = tol + tol * y5[d].abs().max(y[d].abs());
            err = err.max(((y5[d] - y4[d]) / scale).abs());
        }

        if err <= 1.0 {
            x += h;
            y = y5;
        }
        let factor = if err > 0.0 {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h = (h * factor).min(length);
        if h < 1e-14 {
            h = 1e-14;
        }
    }
    y
}

/// Numerically integrated 2x2 state propagator over one layer: each column is
/// the result of advancing a unit initial condition.
pub fn numeric_propagator(q: f64, length: f64, tol: f64) -> [[f64; 2]; 2] {
    let col0 = integrate_helmholtz(q, length, [1.0, 0.0], tol);
    let col1 = integrate_helmholtz(q, length, [0.0, 1.0], tol);
    // Row-major [[m11, m12], [m21, m22]].
    [[col0[0], col1[0]], [col0[1], col1[1]]]
}

/// State advanced across one unit cell: material A over `theta`, then
/// material B over `1 - theta`, with per-layer coefficients `q_a`, `q_b`.
pub fn advance_cell(q_a: f64, q_b: f64, theta: f64, state: [f64; 2], tol: f64) -> [f64; 2] {
    assert!((0.0..=1.0).contains(&theta), "theta must lie in [0, 1]");
    let mid = integrate_helmholtz(q_a, theta, state, tol);
    integrate_helmholtz(q_b, 1.0 - theta, mid, tol)
}
