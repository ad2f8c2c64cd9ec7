//! Arithmetic of the additive group `Z_n`: totient, divisors, element orders,
//! the unit / involution / remainder split, and the partition of `Z_n` by
//! additive order.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order of the cyclic group `Z_n`. Always at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Modulus(n))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn check_residue(self, a: u64) -> Result<()> {
        if a >= self.0 {
            return Err(Error::ResidueOutOfRange { a, n: self.0 });
        }
        Ok(())
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        Modulus::new(n)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Prime factorization `n = Π p^e`, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Trial division. Worst case is `O(sqrt(n))`, about 2^32 steps at `u64::MAX`;
    /// for the sizes this crate targets (up to ~10^12) that is well under a second.
    pub fn of(n: u64) -> Self {
        let mut factors = Vec::new();
        let mut rest = n;
        if rest > 1 {
            for p in [2u64, 3] {
                let e = strip(&mut rest, p);
                if e > 0 {
                    factors.push((p, e));
                }
            }
            // 6k ± 1 wheel
            let mut p = 5u64;
            while p <= rest / p {
                for q in [p, p + 2] {
                    let e = strip(&mut rest, q);
                    if e > 0 {
                        factors.push((q, e));
                    }
                }
                p += 6;
            }
            if rest > 1 {
                factors.push((rest, 1));
            }
        }
        Factorization { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    /// Every divisor `d` of `n` paired with `φ(d)`, sorted by `d`.
    pub fn divisors_with_phi(&self) -> Vec<(u64, u64)> {
        let mut out = vec![(1u64, 1u64)];
        for &(p, e) in &self.factors {
            let base = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                let phi_pk = pk - pk / p;
                for i in 0..base {
                    let (d, phi) = out[i];
                    out.push((d * pk, phi * phi_pk));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn divisors(&self) -> Vec<u64> {
        self.divisors_with_phi().into_iter().map(|(d, _)| d).collect()
    }

    /// `d(n)`, the number of positive divisors.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

fn strip(rest: &mut u64, p: u64) -> u32 {
    let mut e = 0;
    while (*rest).is_multiple_of(p) {
        *rest /= p;
        e += 1;
    }
    e
}

/// Euler's totient. `euler_phi(0)` is 0 by convention.
pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    Factorization::of(n).phi()
}

/// Positive divisors of `n`, ascending. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    Factorization::of(n).divisors()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && Factorization::of(n).is_prime()
}

/// Additive order of `a` in `Z_n`: `n / gcd(a, n)`.
pub fn element_order(a: u64, n: Modulus) -> Result<u64> {
    n.check_residue(a)?;
    Ok(n.get() / a.gcd(&n.get()))
}

/// Number of solutions of `2a ≡ 0 (mod n)`.
pub fn involution_count(n: Modulus) -> u64 {
    2u64.gcd(&n.get())
}

/// The split of `Z_n` into units `U_n`, additive involutions `S_n` (including 0)
/// and the remainder `N_n`. Each list is ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialSets {
    pub units: Vec<u64>,
    pub involutions: Vec<u64>,
    pub neither: Vec<u64>,
    /// Set when `U_n ∩ S_n` is nonempty, which happens only for `n = 2`.
    pub overlap_flag: bool,
}

/// Which part of the `U_n / S_n / N_n` split an element is assigned to.
///
/// Involutions take precedence over units, so at `n = 2` the element 1 is an
/// involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElementClass {
    Involution,
    Unit,
    Neither,
}

/// Classify an element by its additive order alone.
pub fn classify_order(order: u64, n: Modulus) -> ElementClass {
    if order <= 2 {
        ElementClass::Involution
    } else if order == n.get() {
        ElementClass::Unit
    } else {
        ElementClass::Neither
    }
}

pub fn classify(a: u64, n: Modulus) -> Result<ElementClass> {
    Ok(classify_order(element_order(a, n)?, n))
}

pub fn special_sets(n: Modulus) -> SpecialSets {
    let m = n.get();
    let mut sets = SpecialSets {
        units: Vec::new(),
        involutions: Vec::new(),
        neither: Vec::new(),
        overlap_flag: false,
    };
    for a in 0..m {
        let unit = a.gcd(&m) == 1;
        let involution = (2 * u128::from(a)) % u128::from(m) == 0;
        if unit {
            sets.units.push(a);
        }
        if involution {
            sets.involutions.push(a);
        }
        if unit && involution {
            sets.overlap_flag = true;
        }
        if !unit && !involution {
            sets.neither.push(a);
        }
    }
    sets
}

/// `Z_n` partitioned by additive order: `classes[d]` holds every residue of order `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDecomposition {
    pub modulus: Modulus,
    pub classes: BTreeMap<u64, Vec<u64>>,
}

impl OrderDecomposition {
    pub fn class(&self, d: u64) -> Option<&[u64]> {
        self.classes.get(&d).map(Vec::as_slice)
    }

    /// Number of parts, which is `d(n)`.
    pub fn part_count(&self) -> usize {
        self.classes.len()
    }

    /// For each residue, the order-class key it belongs to.
    pub fn labels(&self) -> Vec<u64> {
        let mut out = vec![0; self.modulus.get() as usize];
        for (&d, members) in &self.classes {
            for &a in members {
                out[a as usize] = d;
            }
        }
        out
    }
}

/// Enumerates all `n` residues, so memory is linear in `n`.
pub fn order_decomposition(n: Modulus) -> OrderDecomposition {
    let m = n.get();
    let mut classes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for a in 0..m {
        classes.entry(m / a.gcd(&m)).or_default().push(a);
    }
    OrderDecomposition { modulus: n, classes }
}
