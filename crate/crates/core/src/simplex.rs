//! Weakly monotone maps `[p] → [q]` between finite ordinals.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A weakly monotone map `[p] → [q]`, stored as its values `σ(0), …, σ(p)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonotoneMap {
    q: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(q: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidMorphism(
                "a map out of [p] needs p+1 values".into(),
            ));
        }
        if values.iter().any(|&v| v > q) {
            return Err(Error::InvalidMorphism(
                "value outside the target ordinal".into(),
            ));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMorphism(
                "values are not weakly increasing".into(),
            ));
        }
        Ok(MonotoneMap { q, values })
    }

    pub fn identity(p: usize) -> Self {
        MonotoneMap {
            q: p,
            values: (0..=p).collect(),
        }
    }

    /// The coface `δ_i: [p-1] → [p]` skipping `i`.
    pub fn coface(p: usize, i: usize) -> Self {
        assert!(p >= 1 && i <= p);
        MonotoneMap {
            q: p,
            values: (0..p).map(|k| if k < i { k } else { k + 1 }).collect(),
        }
    }

    /// The codegeneracy `σ_i: [p+1] → [p]` repeating `i`.
    pub fn codegeneracy(p: usize, i: usize) -> Self {
        assert!(i <= p);
        MonotoneMap {
            q: p,
            values: (0..=p + 1)
                .map(|k| if k <= i { k } else { k - 1 })
                .collect(),
        }
    }

    pub fn p(&self) -> usize {
        self.values.len() - 1
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &MonotoneMap) -> Result<MonotoneMap> {
        if self.q != g.p() {
            return Err(Error::Incomposable);
        }
        Ok(MonotoneMap {
            q: g.q,
            values: self.values.iter().map(|&v| g.values[v]).collect(),
        })
    }

    /// Preserves minimum and maximum.
    pub fn is_active(&self) -> bool {
        self.values[0] == 0 && self.values[self.p()] == self.q
    }

    /// Inclusion of a convex sub-interval.
    pub fn is_closed(&self) -> bool {
        self.values.windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// Every step is at most one.
    pub fn is_idle(&self) -> bool {
        self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// The unique factorization `self = closed ∘ active`, returned as
    /// `(active, closed)`.
    pub fn factor_active_closed(&self) -> (MonotoneMap, MonotoneMap) {
        let lo = self.values[0];
        let hi = self.values[self.p()];
        let active = MonotoneMap {
            q: hi - lo,
            values: self.values.iter().map(|&v| v - lo).collect(),
        };
        let closed = MonotoneMap {
            q: self.q,
            values: (lo..=hi).collect(),
        };
        (active, closed)
    }
}

/// All monotone maps `[p] → [q]` in lexicographic order of their values.
pub fn all_monotone_maps(p: usize, q: usize) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    let mut values = alloc::vec![0usize; p + 1];
    loop {
        out.push(MonotoneMap {
            q,
            values: values.clone(),
        });
        // Next non-decreasing sequence.
        let mut i = p + 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if values[i] < q {
                values[i] += 1;
                let v = values[i];
                for w in &mut values[i + 1..] {
                    *w = v;
                }
                break;
            }
        }
    }
}

/// `C(p+q+1, p+1)`, the number of monotone maps `[p] → [q]`.
pub fn monotone_count(p: usize, q: usize) -> u64 {
    let (n, k) = ((p + q + 1) as u64, (p + 1) as u64);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
