use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

/// The eigenvalue `exp(2πi·k/L)` stored as the reduced fraction `k/L`,
/// `0 ≤ k < L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EigenvalueAngle {
    num: u64,
    den: u64,
}

impl EigenvalueAngle {
    pub fn new(k: u64, l: u64) -> Self {
        assert!(l > 0, "angle denominator must be positive");
        let k = k % l;
        if k == 0 {
            return EigenvalueAngle { num: 0, den: 1 };
        }
        let g = k.gcd(&l);
        EigenvalueAngle {
            num: k / g,
            den: l / g,
        }
    }

    pub fn zero() -> Self {
        EigenvalueAngle { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    /// Order of the eigenvalue as a root of unity.
    pub fn denominator(&self) -> u64 {
        self.den
    }
}

impl Ord for EigenvalueAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for EigenvalueAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EigenvalueAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_merges_equal_angles() {
        assert_eq!(EigenvalueAngle::new(2, 6), EigenvalueAngle::new(1, 3));
        assert_eq!(EigenvalueAngle::new(0, 7), EigenvalueAngle::zero());
        assert_eq!(EigenvalueAngle::new(9, 7), EigenvalueAngle::new(2, 7));
        assert_eq!(EigenvalueAngle::new(2, 6).to_string(), "1/3");
    }

    #[test]
    fn ordering_is_by_value() {
        let mut v = [
            EigenvalueAngle::new(2, 3),
            EigenvalueAngle::new(1, 2),
            EigenvalueAngle::new(0, 5),
            EigenvalueAngle::new(1, 3),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|a| a.to_string()).collect();
        assert_eq!(s, ["0/1", "1/3", "1/2", "2/3"]);
    }
}
