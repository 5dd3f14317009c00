//! Finite nimbers: the field of characteristic 2 on the natural numbers with
//! mex-defined sum and product.
//!
//! Values are stored in a `u128`, which is the closed subfield `L(2^128)`; every
//! sum, product, power and inverse of stored values stays inside it.

mod genetic;
mod mex;
mod poly;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use genetic::{nim_builtin, NimGeneticDefinition, NimOption};
pub use mex::{mex_add_table, mex_mul_table, nim_add_mex, nim_mul_mex, MexTable};
pub use poly::{compare_nim_poly, simplest_irreducible, zero_set, NimFunction, NimPolynomial};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Nimber(pub u128);

impl Nimber {
    pub const ZERO: Nimber = Nimber(0);
    pub const ONE: Nimber = Nimber(1);

    pub fn value(self) -> u128 {
        self.0
    }
}

impl fmt::Display for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Nimber {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<u128>()
            .map(Nimber)
            .map_err(|_| Error::Parse(format!("not a nimber literal: `{s}`")))
    }
}

impl From<u128> for Nimber {
    fn from(v: u128) -> Self {
        Nimber(v)
    }
}

/// Least natural number not in `s`.
pub fn mex<'a>(s: impl IntoIterator<Item = &'a Nimber>) -> Nimber {
    let set: BTreeSet<u128> = s.into_iter().map(|n| n.0).collect();
    let mut m = 0u128;
    for v in set {
        if v != m {
            break;
        }
        m += 1;
    }
    Nimber(m)
}

pub fn nim_add(a: Nimber, b: Nimber) -> Nimber {
    Nimber(a.0 ^ b.0)
}

/// Smallest `k` with `v < 2^(2^k)`.
fn level(v: u128) -> u32 {
    let bits = 128 - v.leading_zeros();
    let mut k = 0;
    while (1u32 << k) < bits {
        k += 1;
    }
    k
}

/// Size exponent `2^k` of the smallest subfield `L(2^(2^k))` containing `v`.
pub fn subfield_bits(v: Nimber) -> u32 {
    1 << level(v.0)
}

fn byte_table() -> &'static [[u8; 256]; 256] {
    static TABLE: OnceLock<Box<[[u8; 256]; 256]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Box::new([[0u8; 256]; 256]);
        for a in 0..256u128 {
            for b in 0..256u128 {
                t[a as usize][b as usize] = mul_split(a, b, 3, None) as u8;
            }
        }
        t
    })
}

/// Product of `a, b < 2^(2^k)` by splitting at the Fermat 2-power `F = 2^(2^(k-1))`:
/// with `a = a1 F + a0` and `b = b1 F + b0`,
/// `a b = (a1 b1 + a1 b0 + a0 b1) F + a0 b0 + a1 b1 (F/2)`.
fn mul_split(a: u128, b: u128, k: u32, table: Option<&[[u8; 256]; 256]>) -> u128 {
    if k == 0 {
        return a & b;
    }
    if k == 3 {
        if let Some(t) = table {
            return u128::from(t[a as usize][b as usize]);
        }
    }
    let half = 1u32 << (k - 1);
    let mask = (1u128 << half) - 1;
    let (a1, a0) = (a >> half, a & mask);
    let (b1, b0) = (b >> half, b & mask);
    let low = mul_split(a0, b0, k - 1, table);
    if a1 == 0 && b1 == 0 {
        return low;
    }
    let top = mul_split(a1, b1, k - 1, table);
    let cross = mul_split(a0 ^ a1, b0 ^ b1, k - 1, table);
    let hi = cross ^ low;
    let lo = low ^ mul_split(top, 1u128 << (half - 1), k - 1, table);
    (hi << half) | lo
}

pub fn nim_mul(a: Nimber, b: Nimber) -> Nimber {
    let k = level(a.0.max(b.0)).max(3);
    Nimber(mul_split(a.0, b.0, k, Some(byte_table())))
}

pub fn nim_pow(a: Nimber, mut e: u128) -> Nimber {
    let mut base = a;
    let mut acc = Nimber::ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc = nim_mul(acc, base);
        }
        base = nim_mul(base, base);
        e >>= 1;
    }
    acc
}

/// `a^(F-2)` in the smallest subfield `L(F)` containing `a`.
pub fn nim_inverse(a: Nimber) -> Result<Nimber> {
    if a.0 == 0 {
        return Err(Error::DivisionByZero);
    }
    let bits = subfield_bits(a);
    let e = if bits == 128 {
        u128::MAX - 1
    } else {
        (1u128 << bits) - 2
    };
    Ok(nim_pow(a, e))
}

/// The ordinal successor `x + 1`.
pub fn successor(x: Nimber) -> Result<Nimber> {
    x.0.checked_add(1).map(Nimber).ok_or(Error::NimberOverflow)
}

/// Whether `{0, …, n−1}` is closed under sum, product and inverses of nonzero elements.
pub fn is_closed_field_segment(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for a in 0..n {
        for b in a..n {
            let (x, y) = (Nimber(a), Nimber(b));
            if nim_add(x, y).0 >= n || nim_mul(x, y).0 >= n {
                return false;
            }
        }
    }
    (1..n).all(|a| (1..n).any(|b| nim_mul(Nimber(a), Nimber(b)) == Nimber::ONE))
}

/// `S = {0, …, |S| − 1}`.
pub fn is_initial_nim(s: &BTreeSet<Nimber>) -> bool {
    s.iter().enumerate().all(|(i, v)| v.0 == i as u128)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NimOp {
    Add,
    Mul,
    Inverse,
}

impl FromStr for NimOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "add" => Ok(NimOp::Add),
            "mul" => Ok(NimOp::Mul),
            "inv" | "inverse" => Ok(NimOp::Inverse),
            other => Err(Error::Parse(format!("unknown nimber operation `{other}`"))),
        }
    }
}

/// Least superset of `seed` closed under `ops`; every element must stay below `cap`.
pub fn nim_closure(seed: &BTreeSet<Nimber>, ops: &[NimOp], cap: u128) -> Result<BTreeSet<Nimber>> {
    let escape = |v: Nimber| Error::CapTooSmall { cap, value: v.0 };
    if let Some(v) = seed.iter().find(|v| v.0 >= cap) {
        return Err(escape(*v));
    }
    let mut set = seed.clone();
    loop {
        let items: Vec<Nimber> = set.iter().copied().collect();
        let mut fresh = BTreeSet::new();
        let mut take = |v: Nimber| -> Result<()> {
            if v.0 >= cap {
                return Err(escape(v));
            }
            if !set.contains(&v) {
                fresh.insert(v);
            }
            Ok(())
        };
        for (i, &x) in items.iter().enumerate() {
            if ops.contains(&NimOp::Inverse) && x.0 != 0 {
                take(nim_inverse(x)?)?;
            }
            for &y in &items[i..] {
                if ops.contains(&NimOp::Add) {
                    take(nim_add(x, y))?;
                }
                if ops.contains(&NimOp::Mul) {
                    take(nim_mul(x, y))?;
                }
            }
        }
        if fresh.is_empty() {
            return Ok(set);
        }
        set.extend(fresh);
    }
}
