//! Values on the half-integer grid ½ℤ₊ ∪ {∞}, the codomain of every
//! distance in this workspace.

use std::fmt;

/// A non-negative half-integer or infinity, stored in half-units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HalfValue {
    Finite(u32),
    Infinite,
}

impl HalfValue {
    pub const ZERO: HalfValue = HalfValue::Finite(0);

    pub fn from_halves(halves: u32) -> Self {
        HalfValue::Finite(halves)
    }

    pub fn from_integer(n: u32) -> Self {
        HalfValue::Finite(2 * n)
    }

    pub fn halves(self) -> Option<u32> {
        match self {
            HalfValue::Finite(h) => Some(h),
            HalfValue::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, HalfValue::Finite(_))
    }

    pub fn max(self, other: Self) -> Self {
        match (self, other) {
            (HalfValue::Finite(a), HalfValue::Finite(b)) => HalfValue::Finite(a.max(b)),
            _ => HalfValue::Infinite,
        }
    }

    /// Parse `"3/2"`, `"2"`, or `"inf"`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text == "inf" {
            return Some(HalfValue::Infinite);
        }
        if let Some((num, den)) = text.split_once('/') {
            let n: u32 = num.trim().parse().ok()?;
            let d: u32 = den.trim().parse().ok()?;
            if d == 2 {
                return Some(HalfValue::Finite(n));
            }
            if d == 1 {
                return Some(HalfValue::Finite(2 * n));
            }
            return None;
        }
        let n: u32 = text.parse().ok()?;
        Some(HalfValue::Finite(2 * n))
    }
}

impl fmt::Display for HalfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfValue::Infinite => write!(f, "inf"),
            HalfValue::Finite(h) if h % 2 == 0 => write!(f, "{}", h / 2),
            HalfValue::Finite(h) => write!(f, "{h}/2"),
        }
    }
}
