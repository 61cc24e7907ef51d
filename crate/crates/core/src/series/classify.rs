use std::collections::BTreeMap;

use serde::Serialize;

use super::expand::ExpandedPolynomial;
use crate::algebra::BosonMonomial;
use crate::closed_forms::pattern_label;
use crate::scalar::GaussianRational;

/// All terms sharing one operator pattern and suborder `s`. Entry `n`
/// carries `χ^n α^{n−s}`, so the series is `χ^s Σ_n coeff_n χ′^{n−s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSeries {
    pub pattern: BosonMonomial,
    pub suborder: i32,
    /// Strictly increasing in χ-order.
    pub entries: Vec<(u32, GaussianRational)>,
}

impl PatternSeries {
    pub fn label(&self) -> String {
        pattern_label(&self.pattern)
    }

    pub fn coefficient(&self, chi_order: u32) -> GaussianRational {
        self.entries
            .iter()
            .find(|(n, _)| *n == chi_order)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    #[serde(skip)]
    pub series: Vec<PatternSeries>,
    /// Number of terms with suborder above the requested maximum.
    pub discarded_terms: usize,
}

/// Group terms with `s ≤ max_suborder` by `(s, pattern)`; the rest are
/// counted and dropped.
pub fn classify(e: &ExpandedPolynomial, max_suborder: i32) -> Classification {
    let mut groups: BTreeMap<(i32, BosonMonomial), Vec<(u32, GaussianRational)>> = BTreeMap::new();
    let mut discarded_terms = 0;
    for (k, c) in e.iter() {
        let s = k.suborder();
        if s > max_suborder {
            discarded_terms += 1;
            continue;
        }
        groups.entry((s, k.monomial.ops)).or_default().push((k.chi_order, c.clone()));
    }
    let series = groups
        .into_iter()
        .map(|((suborder, pattern), mut entries)| {
            entries.sort_by_key(|(n, _)| *n);
            PatternSeries { pattern, suborder, entries }
        })
        .collect();
    Classification { series, discarded_terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{heisenberg, Mode};
    use crate::series::expand::substitute_pump;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn undepleted_signal_series() {
        let c = classify(&substitute_pump(&heisenberg(Mode::A, 8).unwrap()), 0);
        let a = c.series.iter().find(|s| s.label() == "a").unwrap();
        let expected: Vec<_> = [(0, 1), (2, 2), (4, 24), (6, 720), (8, 40320)]
            .into_iter()
            .map(|(n, f)| (n, q(1, f)))
            .collect();
        assert_eq!(a.entries, expected);
        assert!(c.discarded_terms > 0);
    }

    #[test]
    fn first_order_patterns_of_signal() {
        let c = classify(&substitute_pump(&heisenberg(Mode::A, 8).unwrap()), 1);
        let mut labels: Vec<_> = c.series.iter().map(|s| (s.suborder, s.label())).collect();
        labels.sort();
        let want = [(0, "a"), (0, "b†"), (1, "a δc"), (1, "a δc†"), (1, "b† δc"), (1, "b† δc†")];
        assert_eq!(labels, want.map(|(s, l)| (s, l.to_string())));
    }

    #[test]
    fn depletion_of_pump() {
        let c = classify(&substitute_pump(&heisenberg(Mode::C, 8).unwrap()), 1);
        let id = c.series.iter().find(|s| s.label() == "1" && s.suborder == 1).unwrap();
        assert_eq!(id.entries, vec![(2, q(-1, 2)), (4, q(-4, 24)), (6, q(-16, 720)), (8, q(-64, 40320))]);
    }

    #[test]
    fn single_term() {
        let p = crate::algebra::OperatorPolynomial::monomial(BosonMonomial::annihilator(Mode::A));
        let c = classify(&substitute_pump(&p), 2);
        assert_eq!(c.series.len(), 1);
        assert_eq!(c.series[0].entries, vec![(0, GaussianRational::one())]);
    }
}
