use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::Rational;

use super::{akiyama_tanigawa, tangent};

/// Memo of even-index Bernoulli numbers `𝔅_0, 𝔅_2, …`.
///
/// Lookups past the cached prefix recompute the tangent triangle up to at
/// least twice the previous bound. A table built with [`BernoulliTable::uncached`]
/// recomputes on every lookup and returns identical values.
#[derive(Debug)]
pub struct BernoulliTable {
    even: RwLock<Vec<Rational>>,
    oracle: RwLock<Vec<Rational>>,
    caching: bool,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            even: RwLock::new(Vec::new()),
            oracle: RwLock::new(Vec::new()),
            caching: true,
        }
    }

    pub fn uncached() -> Self {
        BernoulliTable { caching: false, ..Self::new() }
    }

    /// `𝔅_{2·half}` from the tangent-number route.
    pub fn even(&self, half: usize) -> Rational {
        if !self.caching {
            return tangent::even_bernoulli(half).pop().unwrap();
        }
        if let Some(v) = self.even.read().unwrap().get(half) {
            return v.clone();
        }
        let mut guard = self.even.write().unwrap();
        if guard.len() <= half {
            let target = half.max(2 * guard.len()).max(16);
            *guard = tangent::even_bernoulli(target);
        }
        guard[half].clone()
    }

    /// `𝔅_n` for any `n ≥ 0`.
    pub fn nt(&self, n: usize) -> Rational {
        match n {
            1 => Rational::new((-1).into(), 2.into()),
            n if n % 2 == 1 => Rational::default(),
            n => self.even(n / 2),
        }
    }

    fn oracle_value(&self, n: usize) -> Rational {
        if !self.caching {
            return akiyama_tanigawa::bernoulli_upto(n).pop().unwrap();
        }
        if let Some(v) = self.oracle.read().unwrap().get(n) {
            return v.clone();
        }
        let mut guard = self.oracle.write().unwrap();
        if guard.len() <= n {
            let target = n.max(2 * guard.len()).max(16);
            *guard = akiyama_tanigawa::bernoulli_upto(target);
        }
        guard[n].clone()
    }

    /// `𝔅_n`, cross-checked against the Akiyama–Tanigawa oracle.
    pub fn nt_audited(&self, n: usize) -> Result<Rational> {
        let primary = self.nt(n);
        let oracle = self.oracle_value(n);
        if primary != oracle {
            return Err(Error::Internal(format!(
                "Bernoulli algorithms disagree at n = {n}: tangent {primary}, Akiyama-Tanigawa {oracle}"
            )));
        }
        Ok(primary)
    }
}

/// Process-wide table behind the free functions of this module.
pub fn global() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(BernoulliTable::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use std::thread;

    #[test]
    fn cache_is_observationally_pure() {
        let cached = BernoulliTable::new();
        let plain = BernoulliTable::uncached();
        // out-of-order lookups exercise the growth path
        for n in [40usize, 2, 100, 0, 1, 3, 38, 250, 64] {
            assert_eq!(cached.nt(n), plain.nt(n), "n = {n}");
        }
    }

    #[test]
    fn concurrent_lookups_agree() {
        let table = Arc::new(BernoulliTable::new());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let t = Arc::clone(&table);
                thread::spawn(move || (0..60).map(|h| t.even(h * (i + 1) % 120)).collect::<Vec<_>>())
            })
            .collect();
        let reference = BernoulliTable::uncached();
        for (i, h) in handles.into_iter().enumerate() {
            for (h_idx, v) in h.join().unwrap().into_iter().enumerate() {
                assert_eq!(v, reference.even(h_idx * (i + 1) % 120));
            }
        }
    }

    #[test]
    fn audited_lookup() {
        let table = BernoulliTable::new();
        for n in 0..=60 {
            assert_eq!(table.nt_audited(n).unwrap(), table.nt(n));
        }
    }
}
