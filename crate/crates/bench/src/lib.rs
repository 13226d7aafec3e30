//! Fixtures shared by the criterion benches.

use weil_core::{exponent_classes, is_degenerate, Field};

/// A field together with its first nondegenerate exponent class, if any.
pub fn fixture(q: u32) -> (Field, u64) {
    let field = Field::parse(&q.to_string()).expect("valid field order");
    let (q, p) = (field.q() as u64, field.p() as u64);
    let s = exponent_classes(q, p).into_iter().find(|&s| !is_degenerate(q, p, s)).unwrap_or(1);
    (field, s)
}
