//! 9j symbols through the single sum over triple products of 6j symbols.

use crate::half::HalfInt;
use crate::sixj::{phase_times_multiplicity, ExactEngine, SymbolEngine, SymbolValue};
use crate::surd::SurdSum;

/// `{a b c; d e f; g h i}` in twice-integer labels, generic over backend.
pub fn ninej_t<E: SymbolEngine>(engine: &E, tj: [i32; 9]) -> E::Value {
    let [ta, tb, tc, td, te, tf, tg, th, ti] = tj;
    let lo = (ta - ti).abs().max((tb - tf).abs()).max((td - th).abs());
    let hi = (ta + ti).min(tb + tf).min(td + th);
    let mut acc = E::Value::zero();
    let mut tx = lo;
    while tx <= hi {
        let w1 = engine.sixj_t([ta, tb, tc, tf, ti, tx]);
        if !w1.is_zero() {
            let w2 = engine.sixj_t([td, te, tf, tb, tx, th]);
            if !w2.is_zero() {
                let w3 = engine.sixj_t([tg, th, ti, tx, ta, td]);
                let prod = w1.mul(&w2).mul(&w3);
                acc.add_assign(prod.scale_int(phase_times_multiplicity(2 * tx, tx)));
            }
        }
        tx += 2;
    }
    acc
}

impl ExactEngine {
    /// Wigner 9j in the 3x3 layout, rows and columns both triads.
    /// Memoized; exact zero when any of the six triangles fails.
    #[allow(clippy::too_many_arguments)]
    pub fn wigner9j(
        &self,
        a: HalfInt,
        b: HalfInt,
        c: HalfInt,
        d: HalfInt,
        e: HalfInt,
        f: HalfInt,
        g: HalfInt,
        h: HalfInt,
        i: HalfInt,
    ) -> SurdSum {
        self.ninej_cached([
            a.twice(),
            b.twice(),
            c.twice(),
            d.twice(),
            e.twice(),
            f.twice(),
            g.twice(),
            h.twice(),
            i.twice(),
        ])
    }

    pub(crate) fn ninej_cached(&self, tj: [i32; 9]) -> SurdSum {
        if let Some(v) = self.ninej_cache.read().unwrap().get(&tj) {
            return v.clone();
        }
        let v = ninej_t(self, tj);
        self.ninej_cache
            .write()
            .unwrap()
            .entry(tj)
            .or_insert_with(|| v.clone());
        v
    }
}
