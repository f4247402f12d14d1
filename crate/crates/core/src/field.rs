use crate::error::Error;

/// Coefficient field for homology and Betti numbers: the rationals or a
/// prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Build from a characteristic, validating primality of nonzero values.
    pub fn from_characteristic(c: u64) -> Result<Self, Error> {
        match c {
            0 => Ok(FieldSpec::Rationals),
            p if is_prime(p) => Ok(FieldSpec::Prime(p)),
            other => Err(Error::InvalidCharacteristic(other)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "FF_{p}"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
