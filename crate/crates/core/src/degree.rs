use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// An exact rational degree in `[0,1]`.
///
/// Degrees are stored as a reduced fraction `numer/denom` with
/// `0 <= numer <= denom` and `denom > 0`. Parsing a decimal literal keeps
/// it exact (`"0.3"` becomes `3/10`), and the only arithmetic the algebra
/// ever performs (minimum, maximum and `1 - x`) never grows the
/// denominator, so no rounding can occur anywhere downstream.
///
/// Literals may carry at most 18 fractional digits and fraction
/// denominators must fit in 64 bits; anything beyond that is rejected
/// with [`Error::DegreePrecision`] instead of being rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Degree {
    numer: i64,
    denom: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Degree {
    /// The degree 0.
    pub const ZERO: Degree = Degree { numer: 0, denom: 1 };
    /// The degree 1.
    pub const ONE: Degree = Degree { numer: 1, denom: 1 };

    /// Builds the degree `numer/denom`, reduced to lowest terms.
    pub fn from_ratio(numer: i64, denom: i64) -> Result<Degree, Error> {
        if denom <= 0 {
            return Err(Error::DegreeSyntax(format!("{numer}/{denom}")));
        }
        if numer < 0 || numer > denom {
            return Err(Error::DegreeRange(format!("{numer}/{denom}")));
        }
        let g = gcd(numer, denom).max(1);
        Ok(Degree {
            numer: numer / g,
            denom: denom / g,
        })
    }

    /// Numerator of the reduced fraction.
    pub fn numer(&self) -> i64 {
        self.numer
    }

    /// Denominator of the reduced fraction.
    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// `1 - self`. Stays in `[0,1]` and keeps the denominator.
    pub fn complement(&self) -> Degree {
        // gcd(d - n, d) == gcd(n, d) == 1, so the result is already reduced.
        Degree {
            numer: self.denom - self.numer,
            denom: self.denom,
        }
    }

    /// The smaller of two degrees.
    pub fn min(self, other: Degree) -> Degree {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// The larger of two degrees.
    pub fn max(self, other: Degree) -> Degree {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiply in i128: |numer|, |denom| < 2^63 so the products
        // cannot overflow.
        let left = self.numer as i128 * other.denom as i128;
        let right = other.numer as i128 * self.denom as i128;
        left.cmp(&right)
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parses `"0"`, `"1"`, `"0.35"`, `".5"` or `"p/q"` exactly.
impl FromStr for Degree {
    type Err = Error;

    fn from_str(text: &str) -> Result<Degree, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::DegreeSyntax(String::new()));
        }
        if let Some((numer, denom)) = text.split_once('/') {
            let numer = parse_whole(numer.trim(), text)?;
            let denom = parse_whole(denom.trim(), text)?;
            if denom == 0 {
                return Err(Error::DegreeSyntax(text.to_owned()));
            }
            if numer > denom {
                return Err(Error::DegreeRange(text.to_owned()));
            }
            return Degree::from_ratio(numer, denom);
        }
        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(Error::DegreeSyntax(text.to_owned()));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::DegreeSyntax(text.to_owned()));
        }
        if frac_part.len() > 18 {
            return Err(Error::DegreePrecision(text.to_owned()));
        }
        let int_value: i64 = if int_part.is_empty() {
            0
        } else {
            int_part
                .parse()
                .map_err(|_| Error::DegreePrecision(text.to_owned()))?
        };
        let scale = 10i64.pow(frac_part.len() as u32);
        let frac_value: i64 = if frac_part.is_empty() {
            0
        } else {
            frac_part
                .parse()
                .map_err(|_| Error::DegreePrecision(text.to_owned()))?
        };
        let numer = int_value
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac_value))
            .ok_or_else(|| Error::DegreePrecision(text.to_owned()))?;
        if numer > scale {
            return Err(Error::DegreeRange(text.to_owned()));
        }
        Degree::from_ratio(numer, scale)
    }
}

/// Renders the shortest exact decimal when the denominator is of the form
/// `2^a * 5^b` (`"0"`, `"1"`, `"0.3"`, `"0.25"`), and `"p/q"` otherwise.
impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            return write!(f, "{}", self.numer);
        }
        match decimal_scale(self.denom) {
            Some(scale) => {
                let factor = pow10(scale) / self.denom as u128;
                let digits = self.numer as u128 * factor;
                let mut frac = format!("{digits:0width$}", width = scale as usize);
                while frac.ends_with('0') {
                    frac.pop();
                }
                write!(f, "0.{frac}")
            }
            None => write!(f, "{}/{}", self.numer, self.denom),
        }
    }
}

fn parse_whole(text: &str, literal: &str) -> Result<i64, Error> {
    if text.is_empty() || !text.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::DegreeSyntax(literal.to_owned()));
    }
    text.parse()
        .map_err(|_| Error::DegreePrecision(literal.to_owned()))
}

/// Smallest `s` with `denom | 10^s`, when the denominator is `2^a * 5^b`
/// and `10^s` fits in `u128`.
fn decimal_scale(denom: i64) -> Option<u32> {
    let mut rest = denom;
    let mut twos = 0;
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    let mut fives = 0;
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    let scale = twos.max(fives);
    (rest == 1 && scale <= 38).then_some(scale)
}

fn pow10(exp: u32) -> u128 {
    10u128.pow(exp)
}

/// The (membership, indeterminacy, non-membership) degrees of one universe
/// element. The three components are independent: nothing ties their sum
/// or any other combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NeutrosophicTriple {
    membership: Degree,
    indeterminacy: Degree,
    nonmembership: Degree,
}

impl NeutrosophicTriple {
    pub fn new(membership: Degree, indeterminacy: Degree, nonmembership: Degree) -> Self {
        NeutrosophicTriple {
            membership,
            indeterminacy,
            nonmembership,
        }
    }

    pub fn membership(&self) -> Degree {
        self.membership
    }

    pub fn indeterminacy(&self) -> Degree {
        self.indeterminacy
    }

    pub fn nonmembership(&self) -> Degree {
        self.nonmembership
    }

    /// Componentwise complement: `(m, i, n)` becomes `(n, 1 - i, m)`.
    pub fn complement(&self) -> Self {
        NeutrosophicTriple {
            membership: self.nonmembership,
            indeterminacy: self.indeterminacy.complement(),
            nonmembership: self.membership,
        }
    }

    /// Componentwise join: `(max, max, min)`.
    pub(crate) fn join(&self, other: &Self) -> Self {
        NeutrosophicTriple {
            membership: self.membership.max(other.membership),
            indeterminacy: self.indeterminacy.max(other.indeterminacy),
            nonmembership: self.nonmembership.min(other.nonmembership),
        }
    }

    /// Componentwise meet: `(min, min, max)`.
    pub(crate) fn meet(&self, other: &Self) -> Self {
        NeutrosophicTriple {
            membership: self.membership.min(other.membership),
            indeterminacy: self.indeterminacy.min(other.indeterminacy),
            nonmembership: self.nonmembership.max(other.nonmembership),
        }
    }

    /// Subset comparison: `m <= m'`, `i <= i'` and `n >= n'`.
    pub(crate) fn le(&self, other: &Self) -> bool {
        self.membership <= other.membership
            && self.indeterminacy <= other.indeterminacy
            && self.nonmembership >= other.nonmembership
    }
}
