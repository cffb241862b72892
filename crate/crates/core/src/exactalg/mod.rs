//! Exact field arithmetic and dense linear algebra.

mod field;
mod matrix;
mod span;
mod span_fp;

pub use field::{Field, PrimeField, Rationals};
pub use matrix::DenseMatrix;
pub use span::{Echelon, SpanBuilder};

/// Rank of the span of `vectors`, each of length `len`.
pub fn rank_of<F: Field, I>(field: F, len: usize, vectors: I) -> usize
where
    I: IntoIterator,
    I::Item: AsRef<[F::Elem]>,
{
    let mut span = field.span_builder(len, false);
    for v in vectors {
        if span.is_full() {
            break;
        }
        span.insert(v.as_ref());
    }
    span.rank()
}
