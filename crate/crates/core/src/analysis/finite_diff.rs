//! Central finite differences used as independent oracles for analytic
//! derivatives.

/// Step for first derivatives.
pub const FIRST_DERIVATIVE_STEP: f64 = 1e-5;
/// Step for second derivatives.
pub const SECOND_DERIVATIVE_STEP: f64 = 1e-4;

/// `(f(x + h) − f(x − h)) / 2h`
pub fn central_first<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// `(f(x + h) − 2 f(x) + f(x − h)) / h²`
pub fn central_second<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
}

/// Richardson extrapolation of [`central_second`] over steps `h` and `h/2`.
///
/// The plain stencil's `h²f⁗/12` truncation term dominates near the poles of
/// `cot`; eliminating it leaves an `O(h⁴)` error.
pub fn richardson_second<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (4.0 * central_second(&f, x, 0.5 * h) - central_second(&f, x, h)) / 3.0
}

/// Relative discrepancy `|a − b| / max(|a|, 1)`.
///
/// The unit floor keeps the measure meaningful where the derivative itself
/// vanishes (e.g. at symmetric points).
pub fn relative_error(analytic: f64, numeric: f64) -> f64 {
    (analytic - numeric).abs() / analytic.abs().max(1.0)
}

/// Discrepancy of a second-difference estimate, relative to
/// `max(|a|, |f(x)|, 1)`.
///
/// The stencil divides values of size `|f|` by `h²`, so its rounding error
/// scales with `|f(x)|` rather than with the derivative.
pub fn second_difference_error(analytic: f64, numeric: f64, value: f64) -> f64 {
    (analytic - numeric).abs() / analytic.abs().max(value.abs()).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_quadratics() {
        let f = |x: f64| 3.0 * x * x - 2.0 * x + 1.0;
        assert!((central_first(f, 0.7, FIRST_DERIVATIVE_STEP) - 2.2).abs() < 1e-9);
        assert!((central_second(f, 0.7, SECOND_DERIVATIVE_STEP) - 6.0).abs() < 1e-6);
    }

    #[test]
    fn richardson_beats_plain_stencil_near_a_pole() {
        let f = |x: f64| 1.0 / x.tan();
        let x: f64 = 0.2;
        let exact = 2.0 * (1.0 / x.tan()) / x.sin().powi(2);
        let plain = relative_error(exact, central_second(f, x, SECOND_DERIVATIVE_STEP));
        let extrapolated = relative_error(exact, richardson_second(f, x, SECOND_DERIVATIVE_STEP));
        assert!(extrapolated < plain);
        assert!(extrapolated < 1e-8);
    }

    #[test]
    fn transcendental_first_derivative() {
        let d = central_first(f64::sin, 1.0, FIRST_DERIVATIVE_STEP);
        assert!(relative_error(1f64.cos(), d) < 1e-9);
    }
}
