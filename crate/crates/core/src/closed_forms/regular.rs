//! Evaluation of functions of χ′ with removable singularities at zero.
//!
//! Below [`FALLBACK_THRESHOLD`] a singular form is summed from its exact
//! Taylor expansion instead of the direct formula, which loses roughly
//! `m·|log10 χ′|` digits to cancellation for a `1/χ′^m` singularity.

use std::sync::OnceLock;

use crate::taylor::PowerSeries;

/// χ′ below which singular forms switch to their Taylor series.
pub const FALLBACK_THRESHOLD: f64 = 1.0;

/// Degree of the fallback series. At χ′ = 1 the first omitted term of the
/// fastest-growing building block, `sinh 4χ′`, is below 1e-20.
pub const FALLBACK_DEGREE: usize = 40;

/// A real function of χ′ with a direct closed form and an exact Taylor series.
pub trait RegularFunction: Copy + 'static {
    /// Every variant, indexable by [`RegularFunction::index`].
    fn all() -> &'static [Self];
    fn index(self) -> usize;
    fn direct(self, x: f64) -> f64;
    /// Exact Taylor coefficients through `degree`.
    fn taylor(self, degree: usize) -> PowerSeries;
    /// Whether the direct formula divides by a power of χ′.
    fn is_singular(self) -> bool;
    /// Lazily-built table of fallback coefficients, read-only once built.
    fn fallback_table() -> &'static OnceLock<Vec<Vec<f64>>>;

    fn fallback_coeffs(self) -> &'static [f64] {
        let table = Self::fallback_table()
            .get_or_init(|| Self::all().iter().map(|f| f.taylor(FALLBACK_DEGREE).to_f64()).collect());
        &table[self.index()]
    }

    fn series_value(self, x: f64) -> f64 {
        self.fallback_coeffs().iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    fn eval(self, x: f64) -> f64 {
        if self.is_singular() && x.abs() < FALLBACK_THRESHOLD {
            self.series_value(x)
        } else {
            self.direct(x)
        }
    }
}
