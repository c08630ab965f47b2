//! Small numeric helpers shared by the analysis modules.

use statrs::function::gamma::ln_gamma;

/// ln C(n, k) as a difference of log-gamma values.
///
/// Direct factorials overflow long before n = 250; the log-space form does
/// not.
pub(crate) fn ln_choose(n: u32, k: u32) -> f64 {
    debug_assert!(k <= n, "ln_choose: k = {k} > n = {n}");
    ln_gamma(f64::from(n) + 1.0) - ln_gamma(f64::from(k) + 1.0) - ln_gamma(f64::from(n - k) + 1.0)
}

/// `k * ln(x)` with the convention `0 * ln(0) = 0`, i.e. `x^0 = 1` even at
/// `x = 0`. Keeps boundary cases like p = 1 or q = 1 continuous.
pub(crate) fn xlogy(k: f64, x: f64) -> f64 {
    if k == 0.0 {
        0.0
    } else {
        k * x.ln()
    }
}

/// Compensated (Kahan) accumulator for sums whose terms span many orders of
/// magnitude.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub(crate) fn add(&mut self, value: f64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}

/// Compensated dot product of two equal-length slices.
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = KahanSum::default();
    for (x, y) in a.iter().zip(b) {
        acc.add(x * y);
    }
    acc.value()
}

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Golden-section refinement of a local maximum of `f` on `[a, b]`.
///
/// Returns `(argmax, max)`. Convergence to the global maximum is guaranteed
/// only when `f` is unimodal on the interval; callers bracket the incumbent
/// of a grid scan first.
pub(crate) fn golden_max(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, width_tol: f64) -> (f64, f64) {
    debug_assert!(a <= b);
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_GOLDEN * (hi - lo);
    let mut x2 = lo + INV_GOLDEN * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > width_tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_GOLDEN * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_GOLDEN * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Golden-section refinement of a local minimum of `f` on `[a, b]`.
pub(crate) fn golden_min(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, width_tol: f64) -> (f64, f64) {
    let (x, neg) = golden_max(|r| -f(r), a, b, width_tol);
    (x, -neg)
}
