//! Optional binary persistence for the 6j memo cache.
//!
//! Format: magic `W6JC`, version u32, entry count u64, then per entry the
//! canonical twice-integer key, the term count, and each term as
//! length-prefixed little-endian magnitudes (radicand, numerator with sign
//! byte, denominator). Files with a different version are ignored.

use std::io::{Read, Write};
use std::path::Path;

use angmom_exact::{ExactEngine, SurdSum};
use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;

const MAGIC: &[u8; 4] = b"W6JC";
const VERSION: u32 = 1;

pub fn save_cache(engine: &ExactEngine, path: &Path) -> std::io::Result<()> {
    let entries = engine.export_sixj_cache();
    let mut out: Vec<u8> = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for (key, value) in entries {
        for k in key {
            out.extend_from_slice(&k.to_le_bytes());
        }
        let terms: Vec<_> = value.terms().collect();
        out.extend_from_slice(&(terms.len() as u32).to_le_bytes());
        for (rad, coeff) in terms {
            put_bytes(&mut out, &rad.to_bytes_le());
            let (sign, mag) = coeff.numer().to_bytes_le();
            out.push(if sign == Sign::Minus { 1 } else { 0 });
            put_bytes(&mut out, &mag);
            let (_, den) = coeff.denom().to_bytes_le();
            put_bytes(&mut out, &den);
        }
    }
    std::fs::write(path, out)
}

/// Load a previously saved cache; silently ignores missing files and files
/// with a stale version header.
pub fn load_cache(engine: &ExactEngine, path: &Path) -> std::io::Result<usize> {
    let data = match std::fs::read(path) {
        Ok(d) => d,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e),
    };
    let mut r = &data[..];
    let mut magic = [0u8; 4];
    if r.read_exact(&mut magic).is_err() || &magic != MAGIC {
        return Ok(0);
    }
    let version = match read_u32(&mut r) {
        Some(v) => v,
        None => return Ok(0),
    };
    if version != VERSION {
        return Ok(0);
    }
    let count = match read_u64(&mut r) {
        Some(c) => c,
        None => return Ok(0),
    };
    let mut entries = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let mut key = [0i32; 6];
        for k in &mut key {
            *k = match read_i32(&mut r) {
                Some(v) => v,
                None => return Ok(0),
            };
        }
        let nterms = match read_u32(&mut r) {
            Some(v) => v,
            None => return Ok(0),
        };
        let mut terms = Vec::with_capacity(nterms as usize);
        for _ in 0..nterms {
            let rad = BigUint::from_bytes_le(&match get_bytes(&mut r) {
                Some(b) => b,
                None => return Ok(0),
            });
            let mut signb = [0u8; 1];
            if r.read_exact(&mut signb).is_err() {
                return Ok(0);
            }
            let num_mag = match get_bytes(&mut r) {
                Some(b) => b,
                None => return Ok(0),
            };
            let den = match get_bytes(&mut r) {
                Some(b) => b,
                None => return Ok(0),
            };
            let sign = if signb[0] == 1 { Sign::Minus } else { Sign::Plus };
            let numer = BigInt::from_bytes_le(sign, &num_mag);
            let denom = BigInt::from_bytes_le(Sign::Plus, &den);
            terms.push((rad, BigRational::new(numer, denom)));
        }
        entries.push((key, SurdSum::from_squarefree_terms(terms)));
    }
    let n = entries.len();
    engine.import_sixj_cache(entries);
    Ok(n)
}

fn put_bytes(out: &mut Vec<u8>, bytes: &[u8]) {
    out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(bytes);
}

fn get_bytes(r: &mut &[u8]) -> Option<Vec<u8>> {
    let len = read_u32(r)? as usize;
    if r.len() < len {
        return None;
    }
    let (head, tail) = r.split_at(len);
    let v = head.to_vec();
    *r = tail;
    Some(v)
}

fn read_u32(r: &mut &[u8]) -> Option<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b).ok()?;
    Some(u32::from_le_bytes(b))
}

fn read_i32(r: &mut &[u8]) -> Option<i32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b).ok()?;
    Some(i32::from_le_bytes(b))
}

fn read_u64(r: &mut &[u8]) -> Option<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b).ok()?;
    Some(u64::from_le_bytes(b))
}
