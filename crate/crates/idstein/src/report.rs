//! Structured bound reports: named terms, parameters, a recomputable total.

use std::collections::BTreeMap;

#[derive(Debug, Clone, Default)]
pub struct BoundReport {
    pub terms: Vec<(String, f64)>,
    pub params: BTreeMap<String, f64>,
    pub total: f64,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_term(&mut self, name: &str, value: f64) {
        self.terms.push((name.to_string(), value));
        self.total += value;
    }

    pub fn set_param(&mut self, name: &str, value: f64) {
        self.params.insert(name.to_string(), value);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn term(&self, name: &str) -> Option<f64> {
        self.terms.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// Invariant check: the stored total is the sum of the terms.
    pub fn total_recomputes(&self) -> bool {
        let sum: f64 = self.terms.iter().map(|&(_, v)| v).sum();
        (sum - self.total).abs() <= 1e-12 * (1.0 + sum.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_tracks_terms() {
        let mut r = BoundReport::new();
        r.push_term("a", 1.5);
        r.push_term("b", 0.25);
        r.set_param("n", 64.0);
        assert_eq!(r.total, 1.75);
        assert!(r.total_recomputes());
        assert_eq!(r.term("b"), Some(0.25));
    }
}
