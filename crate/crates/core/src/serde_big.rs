//! Serialize big integers as decimal strings so JSON consumers never lose
//! precision.

use num_bigint::BigUint;
use serde::Serializer;

pub fn as_string<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn option_as_string<S: Serializer>(value: &Option<BigUint>, serializer: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => serializer.collect_str(v),
        None => serializer.serialize_none(),
    }
}
