//! Exact 6j symbols via the Racah single sum, with a shared memo cache.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bigfloat::{BigF, MIN_PRECISION_BITS};
use crate::factorial::{FactTable, PrimeExp};
use crate::half::HalfInt;
use crate::surd::SurdSum;

#[inline]
fn tri_t(ta: i32, tb: i32, tc: i32) -> bool {
    ta >= 0
        && tb >= 0
        && tc >= 0
        && (ta + tb + tc) % 2 == 0
        && tc >= (ta - tb).abs()
        && tc <= ta + tb
}

/// Canonical representative of the 24 classical 6j symmetries
/// (column permutations and upper/lower swaps of any two columns).
pub fn canonical_6j(tj: [i32; 6]) -> [i32; 6] {
    let cols = [[tj[0], tj[3]], [tj[1], tj[4]], [tj[2], tj[5]]];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    // row-swap masks with an even number of swapped columns
    let masks = [0b000u8, 0b011, 0b101, 0b110];
    let mut best: Option<[i32; 6]> = None;
    for p in perms {
        for m in masks {
            let mut cand = [0i32; 6];
            for (slot, &ci) in p.iter().enumerate() {
                let flip = (m >> slot) & 1 == 1;
                let col = cols[ci];
                cand[slot] = if flip { col[1] } else { col[0] };
                cand[slot + 3] = if flip { col[0] } else { col[1] };
            }
            if best.map_or(true, |b| cand < b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Backend-independent core of the Racah sum.
///
/// Returns `None` when a triangle fails (symbol is zero); otherwise the
/// triangle-coefficient product as a prime-exponent vector plus the
/// alternating sum as an exact integer over the common denominator.
pub(crate) struct SixjCore {
    pub delta: PrimeExp,
    pub sum: BigInt,
    pub denom: BigInt,
}

pub(crate) fn sixj_core(tj: [i32; 6], facts: &FactTable) -> Option<SixjCore> {
    let [ta, tb, tc, td, te, tf] = tj;
    if !(tri_t(ta, tb, tc) && tri_t(ta, te, tf) && tri_t(td, tb, tf) && tri_t(td, te, tc)) {
        return None;
    }
    let delta_of = |x: i32, y: i32, z: i32| -> PrimeExp {
        let mut pe = facts.prime_exp(((x + y - z) / 2) as i64);
        pe.mul_assign(&facts.prime_exp(((x - y + z) / 2) as i64));
        pe.mul_assign(&facts.prime_exp(((-x + y + z) / 2) as i64));
        pe.div_assign(&facts.prime_exp(((x + y + z) / 2 + 1) as i64));
        pe
    };
    let mut delta = delta_of(ta, tb, tc);
    delta.mul_assign(&delta_of(ta, te, tf));
    delta.mul_assign(&delta_of(td, tb, tf));
    delta.mul_assign(&delta_of(td, te, tc));

    let alphas = [
        ((ta + tb + tc) / 2) as i64,
        ((ta + te + tf) / 2) as i64,
        ((td + tb + tf) / 2) as i64,
        ((td + te + tc) / 2) as i64,
    ];
    let betas = [
        ((ta + tb + td + te) / 2) as i64,
        ((tb + tc + te + tf) / 2) as i64,
        ((ta + tc + td + tf) / 2) as i64,
    ];
    let tmin = *alphas.iter().max().unwrap();
    let tmax = *betas.iter().min().unwrap();
    if tmax < tmin {
        return Some(SixjCore {
            delta,
            sum: BigInt::zero(),
            denom: BigInt::from(1),
        });
    }

    // common denominator D = prod_i (tmax - a_i)! * prod_j (b_j - tmin)!
    let mut denom = BigInt::from(1);
    for &a in &alphas {
        denom *= facts.big(tmax - a);
    }
    for &b in &betas {
        denom *= facts.big(b - tmin);
    }

    // term(tmin) * D, then the exact integer recurrence in t
    let mut term = facts.big(tmin + 1);
    for &a in &alphas {
        term *= facts.range_product(tmin - a, tmax - a);
    }
    if tmin % 2 == 1 {
        term = -term;
    }
    let mut sum = term.clone();
    for t in tmin..tmax {
        let mut num = t + 2;
        for &b in &betas {
            num *= b - t;
        }
        let mut den = 1i64;
        for &a in &alphas {
            den *= t + 1 - a;
        }
        term = -(term * BigInt::from(num)) / BigInt::from(den);
        sum += &term;
    }
    Some(SixjCore { delta, sum, denom })
}

/// Arithmetic needed by the generic 9j/12j contraction sums.
pub trait SymbolValue: Clone {
    fn zero() -> Self;
    fn add_assign(&mut self, rhs: Self);
    fn mul(&self, rhs: &Self) -> Self;
    fn scale_int(&self, k: i64) -> Self;
    fn is_zero(&self) -> bool;
}

impl SymbolValue for SurdSum {
    fn zero() -> Self {
        SurdSum::zero()
    }
    fn add_assign(&mut self, rhs: Self) {
        *self += rhs;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale_int(&self, k: i64) -> Self {
        self.clone() * k
    }
    fn is_zero(&self) -> bool {
        SurdSum::is_zero(self)
    }
}

impl SymbolValue for BigF {
    fn zero() -> Self {
        BigF::zero()
    }
    fn add_assign(&mut self, rhs: Self) {
        *self += rhs;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale_int(&self, k: i64) -> Self {
        // precision carried by self
        self * &BigF::from_i64(k, 128)
    }
    fn is_zero(&self) -> bool {
        BigF::is_zero(self)
    }
}

/// A 6j provider; 9j and 12j evaluation is generic over this.
pub trait SymbolEngine: Sync {
    type Value: SymbolValue;
    fn sixj_t(&self, tj: [i32; 6]) -> Self::Value;
}

/// Exact engine: surd-valued symbols with a concurrent 6j/9j memo cache.
pub struct ExactEngine {
    pub(crate) facts: FactTable,
    sixj_cache: RwLock<HashMap<[i32; 6], SurdSum>>,
    pub(crate) ninej_cache: RwLock<HashMap<[i32; 9], SurdSum>>,
}

impl Default for ExactEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl ExactEngine {
    pub fn new() -> Self {
        ExactEngine {
            facts: FactTable::new(),
            sixj_cache: RwLock::new(HashMap::new()),
            ninej_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Wigner 6j `{a b c; d e f}`; exact zero for non-triangular inputs.
    pub fn wigner6j(&self, a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt) -> SurdSum {
        self.sixj_t([a.twice(), b.twice(), c.twice(), d.twice(), e.twice(), f.twice()])
    }

    pub fn sixj_cache_len(&self) -> usize {
        self.sixj_cache.read().unwrap().len()
    }

    pub fn export_sixj_cache(&self) -> Vec<([i32; 6], SurdSum)> {
        let g = self.sixj_cache.read().unwrap();
        let mut v: Vec<_> = g.iter().map(|(k, val)| (*k, val.clone())).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    pub fn import_sixj_cache(&self, entries: Vec<([i32; 6], SurdSum)>) {
        let mut g = self.sixj_cache.write().unwrap();
        for (k, v) in entries {
            g.insert(k, v);
        }
    }
}

impl SymbolEngine for ExactEngine {
    type Value = SurdSum;

    fn sixj_t(&self, tj: [i32; 6]) -> SurdSum {
        let key = canonical_6j(tj);
        if let Some(v) = self.sixj_cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let value = match sixj_core(key, &self.facts) {
            None => SurdSum::zero(),
            Some(core) => {
                let (coeff, rad) = core.delta.sqrt_split();
                let s = BigRational::new(core.sum, core.denom);
                SurdSum::from_surd_squarefree(coeff * s, rad)
            }
        };
        let mut g = self.sixj_cache.write().unwrap();
        g.entry(key).or_insert_with(|| value.clone());
        value
    }
}

/// Float engine: same sums evaluated in fixed-precision binary floats.
pub struct FloatEngine {
    pub(crate) facts: FactTable,
    precision: usize,
    cache: RwLock<HashMap<[i32; 6], BigF>>,
}

impl FloatEngine {
    /// Precision below 113 bits is bumped up to 113.
    pub fn new(precision_bits: usize) -> Self {
        FloatEngine {
            facts: FactTable::new(),
            precision: precision_bits.max(MIN_PRECISION_BITS),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn precision_bits(&self) -> usize {
        self.precision
    }

    pub fn wigner6j(&self, a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt) -> BigF {
        self.sixj_t([a.twice(), b.twice(), c.twice(), d.twice(), e.twice(), f.twice()])
    }
}

impl SymbolEngine for FloatEngine {
    type Value = BigF;

    fn sixj_t(&self, tj: [i32; 6]) -> BigF {
        let key = canonical_6j(tj);
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let value = match sixj_core(key, &self.facts) {
            None => BigF::zero(),
            Some(core) => {
                let rat = core.delta.to_rational();
                let delta = BigF::from_bigint(rat.numer(), self.precision)
                    / BigF::from_bigint(rat.denom(), self.precision);
                let s = BigF::from_bigint(&core.sum, self.precision)
                    / BigF::from_bigint(&core.denom, self.precision);
                delta.sqrt() * s
            }
        };
        let mut g = self.cache.write().unwrap();
        g.entry(key).or_insert_with(|| value.clone());
        value
    }
}

/// `(-1)^(tsum/2) * (t + 1)` helper used by contraction sums: multiplicity
/// of the summation label with its phase, in twice-integer convention.
#[inline]
pub(crate) fn phase_times_multiplicity(tsum: i32, tx: i32) -> i64 {
    debug_assert!(tsum % 2 == 0);
    let w = (tx + 1) as i64;
    if (tsum / 2).rem_euclid(2) == 0 {
        w
    } else {
        -w
    }
}
