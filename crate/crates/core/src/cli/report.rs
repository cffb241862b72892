use serde_json::{Map, Value};

/// Flat key/value document; keys serialize in sorted order, so output is deterministic.
pub type Report = Map<String, Value>;

/// Exact integer as a JSON number when it fits in `i64`, otherwise as a decimal string.
pub fn int(x: i128) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

pub fn render(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn big(x: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}
