//! Prime-field specialization of the span builder.
//!
//! Reduction against the basis accumulates `acc += m * row` in `u64` without
//! reducing modulo p; the pivot coordinate is reduced on demand, and the
//! whole accumulator only when the overflow budget `lazy_limit` runs out.
//! For p = 32003 the budget is never reached.

use super::field::{inv_mod, PrimeField};
use super::span::{Echelon, SpanBuilder};

pub(crate) struct FpSpan {
    field: PrimeField,
    p: u64,
    len: usize,
    reduced: bool,
    lazy_limit: u64,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    acc: Vec<u64>,
}

impl FpSpan {
    pub(crate) fn new(field: PrimeField, len: usize, reduced: bool) -> Self {
        let p = field.modulus() as u64;
        let lazy_limit = ((u64::MAX - p) / ((p - 1) * (p - 1))).max(1);
        Self {
            field,
            p,
            len,
            reduced,
            lazy_limit,
            rows: Vec::new(),
            pivots: Vec::new(),
            acc: Vec::with_capacity(len),
        }
    }
}

#[inline]
fn axpy(acc: &mut [u64], m: u32, row: &[u32]) {
    let m = m as u64;
    for (a, &r) in acc.iter_mut().zip(row) {
        *a = a.wrapping_add(m * r as u64);
    }
}

impl SpanBuilder<PrimeField> for FpSpan {
    fn len(&self) -> usize {
        self.len
    }

    fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.len);
        if self.rows.len() == self.len {
            return false;
        }
        let p = self.p;
        let mut acc = std::mem::take(&mut self.acc);
        acc.clear();
        acc.extend(v.iter().map(|&x| x as u64));
        let mut pending = 0u64;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let x = acc[pc] % p;
            if x == 0 {
                continue;
            }
            axpy(&mut acc[pc..], (p - x) as u32, &row[pc..]);
            pending += 1;
            if pending >= self.lazy_limit {
                for a in acc[pc..].iter_mut() {
                    *a %= p;
                }
                pending = 0;
            }
        }
        let mut pivot = None;
        for (j, a) in acc.iter_mut().enumerate() {
            *a %= p;
            if pivot.is_none() && *a != 0 {
                pivot = Some(j);
            }
        }
        let Some(pc) = pivot else {
            self.acc = acc;
            return false;
        };
        let inv = inv_mod(acc[pc], p);
        let mut w = vec![0u32; self.len];
        for j in pc..self.len {
            w[j] = (acc[j] * inv % p) as u32;
        }
        self.acc = acc;
        if self.reduced {
            for row in self.rows.iter_mut() {
                let y = row[pc] as u64;
                if y == 0 {
                    continue;
                }
                let m = p - y;
                for j in pc..self.len {
                    if w[j] != 0 {
                        row[j] = ((row[j] as u64 + m * w[j] as u64) % p) as u32;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, w);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn finish(self: Box<Self>) -> Echelon<PrimeField> {
        let s = *self;
        Echelon::from_parts(s.field, s.len, s.reduced, s.rows, s.pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::span::GenericSpan;
    use rand::{Rng, SeedableRng};

    // The lazy path must agree with the straightforward implementation,
    // including for a modulus close to 2^31 where the overflow budget is tiny.
    #[test]
    fn agrees_with_generic_span() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for &p in &[7u64, 32003, 2147483647] {
            let f = PrimeField::new(p).unwrap();
            for trial in 0..20 {
                let len = 3 + trial % 9;
                let count = 2 + (trial * 7) % 13;
                let mut fast = FpSpan::new(f, len, true);
                let mut slow = GenericSpan::new(f, len, true);
                for _ in 0..count {
                    let v: Vec<u32> = (0..len)
                        .map(|_| {
                            if rng.gen_bool(0.4) {
                                0
                            } else {
                                rng.gen_range(0..f.modulus())
                            }
                        })
                        .collect();
                    assert_eq!(fast.insert(&v), slow.insert(&v));
                }
                let a = Box::new(fast).finish();
                let b = Box::new(slow).finish();
                assert_eq!(a.pivots(), b.pivots());
                assert_eq!(a.rows(), b.rows());
            }
        }
    }
}
