//! Reference nimber arithmetic computed straight from the mex recursions
//! `a + b = mex{a' + b, a + b'}` and `a b = mex{a' b + a b' + a' b'}`.

use std::sync::OnceLock;

use super::Nimber;

/// A dense `size × size` table of nimber values, row-major.
#[derive(Clone, Debug)]
pub struct MexTable {
    size: usize,
    data: Vec<u32>,
}

impl MexTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: usize, b: usize) -> Nimber {
        Nimber(u128::from(self.data[a * self.size + b]))
    }
}

/// Marks seen values with a per-cell stamp and returns the least unmarked one.
struct Stamps {
    seen: Vec<u32>,
    id: u32,
}

impl Stamps {
    fn new(len: usize) -> Self {
        Stamps {
            seen: vec![0; len],
            id: 0,
        }
    }

    fn next(&mut self) -> u32 {
        self.id += 1;
        self.id
    }

    fn mex(&self, id: u32) -> u32 {
        let mut m = 0;
        while self.seen[m] == id {
            m += 1;
        }
        m as u32
    }
}

/// Sum table for `a, b < size` from the mex recursion alone.
pub fn mex_add_table(size: usize) -> MexTable {
    let mut t = vec![0u32; size * size];
    let mut st = Stamps::new(2 * size + 1);
    for a in 0..size {
        for b in 0..size {
            let id = st.next();
            for ap in 0..a {
                st.seen[t[ap * size + b] as usize] = id;
            }
            for bp in 0..b {
                st.seen[t[a * size + bp] as usize] = id;
            }
            t[a * size + b] = st.mex(id);
        }
    }
    MexTable { size, data: t }
}

/// Product table for `a, b < size ≤ 2^16` from the mex recursion, with sums
/// of options taken as XOR.
pub fn mex_mul_table(size: usize) -> MexTable {
    assert!(
        size <= 1 << 16,
        "reference product tables are limited to 2^16 rows"
    );
    let mut field = 2usize;
    while field < size {
        field *= field;
    }
    let mut t = vec![0u32; size * size];
    let mut st = Stamps::new(field + 1);
    for a in 0..size {
        for b in a..size {
            let id = st.next();
            let (row_a, _) = t.split_at(a * size + b);
            let row_a = &row_a[a * size..];
            for ap in 0..a {
                let col = t[ap * size + b];
                let row_ap = &t[ap * size..ap * size + b];
                for (x, y) in row_a.iter().zip(row_ap) {
                    st.seen[(col ^ x ^ y) as usize] = id;
                }
            }
            let v = st.mex(id);
            t[a * size + b] = v;
            t[b * size + a] = v;
        }
    }
    MexTable { size, data: t }
}

fn cached(
    slot: &'static OnceLock<MexTable>,
    size: usize,
    build: fn(usize) -> MexTable,
) -> &'static MexTable {
    slot.get_or_init(|| build(size))
}

static SMALL_ADD: OnceLock<MexTable> = OnceLock::new();
static SMALL_MUL: OnceLock<MexTable> = OnceLock::new();
const SMALL: usize = 64;

/// `a + b` by the mex recursion; small arguments read a shared table.
pub fn nim_add_mex(a: Nimber, b: Nimber) -> Nimber {
    let m = a.0.max(b.0) as usize;
    if m < SMALL {
        return cached(&SMALL_ADD, SMALL, mex_add_table).get(a.0 as usize, b.0 as usize);
    }
    mex_add_table(m + 1).get(a.0 as usize, b.0 as usize)
}

/// `a b` by the mex recursion; small arguments read a shared table.
pub fn nim_mul_mex(a: Nimber, b: Nimber) -> Nimber {
    let m = a.0.max(b.0) as usize;
    if m < SMALL {
        return cached(&SMALL_MUL, SMALL, mex_mul_table).get(a.0 as usize, b.0 as usize);
    }
    mex_mul_table(m + 1).get(a.0 as usize, b.0 as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nimber::{nim_add, nim_mul};

    #[test]
    fn reference_examples() {
        let n = Nimber;
        assert_eq!(nim_add_mex(n(2), n(3)), n(1));
        assert_eq!(nim_add_mex(n(5), n(5)), n(0));
        assert_eq!(nim_mul_mex(n(2), n(2)), n(3));
        assert_eq!(nim_mul_mex(n(2), n(3)), n(1));
        assert_eq!(nim_mul_mex(n(9), n(1)), n(9));
    }

    #[test]
    fn reference_matches_fast_below_64() {
        let add = mex_add_table(64);
        let mul = mex_mul_table(64);
        for a in 0..64 {
            for b in 0..64 {
                let (x, y) = (Nimber(a as u128), Nimber(b as u128));
                assert_eq!(add.get(a, b), nim_add(x, y));
                assert_eq!(mul.get(a, b), nim_mul(x, y));
            }
        }
    }
}
