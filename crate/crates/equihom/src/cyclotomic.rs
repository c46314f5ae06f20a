//! Exact arithmetic in cyclotomic fields: elements of Q(zeta_N) in the
//! power basis modulo the N-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};
use serde::Serialize;

use crate::linalg::{rat, rat_to_string, Rat};

pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Coefficients of the N-th cyclotomic polynomial, ascending degree.
/// Computed by dividing x^N - 1 by the cyclotomic polynomials of the
/// proper divisors.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    if n == 1 {
        return vec![-1, 1];
    }
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_polynomial(d);
            p = poly_div_exact(&p, &q);
        }
    }
    p
}

/// Exact division of integer polynomials (ascending coefficients) with a
/// monic-up-to-sign divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem: Vec<i64> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    assert!(lead == 1 || lead == -1, "divisor must be monic up to sign");
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k] / lead;
        quot[k - dd] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k - dd + i] -= c * dc;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division not exact");
    quot
}

/// Power-basis coordinates of x^j modulo the N-th cyclotomic polynomial,
/// for j in 0..N. Built once per conductor and shared.
fn power_table(n: usize) -> Arc<Vec<Vec<Rat>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<Vec<Vec<Rat>>>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("power table lock poisoned");
    if let Some(t) = guard.get(&n) {
        return t.clone();
    }
    let phi = euler_phi(n);
    let cyc = cyclotomic_polynomial(n);
    let mut table: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for j in 0..n {
        if j < phi {
            let mut row = vec![Rat::zero(); phi];
            row[j] = rat(1);
            table.push(row);
        } else {
            // x^j = x * x^(j-1), then reduce the degree-phi overflow.
            let prev = &table[j - 1];
            let mut row = vec![Rat::zero(); phi + 1];
            for (i, c) in prev.iter().enumerate() {
                row[i + 1] = c.clone();
            }
            let top = row[phi].clone();
            if !top.is_zero() {
                for (i, &cc) in cyc.iter().take(phi).enumerate() {
                    row[i] -= &top * rat(cc);
                }
            }
            row.truncate(phi);
            table.push(row);
        }
    }
    let table = Arc::new(table);
    guard.insert(n, table.clone());
    table
}

/// An element of Q(zeta_N) with exact rational coordinates in the power
/// basis 1, zeta, .., zeta^(phi(N)-1).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![rat(1)],
        }
    }

    pub fn from_rational(q: Rat) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(rat(v))
    }

    /// zeta_n^k, reduced into the power basis.
    pub fn root_of_unity(n: usize, k: i64) -> Self {
        assert!(n >= 1);
        let j = k.rem_euclid(n as i64) as usize;
        let table = power_table(n);
        Cyclotomic {
            conductor: n,
            coeffs: table[j].clone(),
        }
        .reduced()
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value when all non-constant coordinates vanish.
    pub fn to_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        let q = self.to_rational()?;
        if q.denom().is_one() {
            Some(q.numer().clone())
        } else {
            None
        }
    }

    /// Drops to conductor 1 when the element is rational.
    fn reduced(mut self) -> Self {
        if self.conductor > 1 {
            if let Some(q) = self.to_rational() {
                self.conductor = 1;
                self.coeffs = vec![q];
            }
        }
        self
    }

    /// Re-embeds into Q(zeta_m) for a multiple m of the conductor.
    pub fn promoted(&self, m: usize) -> Self {
        assert!(m % self.conductor == 0, "not a conductor multiple");
        if m == self.conductor {
            return self.clone();
        }
        let stretch = m / self.conductor;
        let table = power_table(m);
        let phi = euler_phi(m);
        let mut coeffs = vec![Rat::zero(); phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = (j * stretch) % m;
            for (i, t) in table[target].iter().enumerate() {
                if !t.is_zero() {
                    coeffs[i] += c * t;
                }
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs,
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self, usize) {
        let m = num::integer::lcm(a.conductor, b.conductor);
        (a.promoted(m), b.promoted(m), m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b, m) = Self::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        Cyclotomic {
            conductor: m,
            coeffs: a.coeffs,
        }
        .reduced()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, m) = Self::common(self, other);
        let phi = euler_phi(m);
        let table = power_table(m);
        let mut coeffs = vec![Rat::zero(); phi];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let prod = x * y;
                let e = (i + j) % m;
                for (t, tc) in table[e].iter().enumerate() {
                    if !tc.is_zero() {
                        coeffs[t] += &prod * tc;
                    }
                }
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs,
        }
        .reduced()
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
        .reduced()
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&rat(s))
    }

    /// Complex conjugation: zeta |-> zeta^(N-1).
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let table = power_table(n);
        let phi = euler_phi(n);
        let mut coeffs = vec![Rat::zero(); phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (n - j) % n;
            for (t, tc) in table[e].iter().enumerate() {
                if !tc.is_zero() {
                    coeffs[t] += c * tc;
                }
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs,
        }
        .reduced()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return f.write_str(&rat_to_string(&q));
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if j == 0 {
                f.write_str(&rat_to_string(c))?;
            } else {
                write!(f, "{}*z{}^{}", rat_to_string(c), self.conductor, j)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        if let Some(q) = self.to_rational() {
            ser.serialize_str(&rat_to_string(&q))
        } else {
            let mut map = ser.serialize_map(Some(2))?;
            map.serialize_entry("conductor", &self.conductor)?;
            map.serialize_entry(
                "coeffs",
                &self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
            )?;
            map.end()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    #[test]
    fn phi_values() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (n, &e) in (1..=12).zip(expected.iter()) {
            assert_eq!(euler_phi(n), e, "phi({n})");
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_powers_wrap() {
        for n in 1..=12 {
            let z = Cyclotomic::root_of_unity(n, 1);
            let mut acc = Cyclotomic::one();
            for _ in 0..n {
                acc = acc.mul(&z);
            }
            assert_eq!(acc, Cyclotomic::one(), "zeta_{n}^{n}");
        }
    }

    #[test]
    fn root_sums_vanish() {
        for n in 2..=12 {
            let mut acc = Cyclotomic::zero();
            for j in 0..n {
                acc = acc.add(&Cyclotomic::root_of_unity(n, j as i64));
            }
            assert!(acc.is_zero(), "sum of all zeta_{n} powers");
        }
    }

    #[test]
    fn rational_round_trip() {
        let q = ratio(-7, 3);
        let c = Cyclotomic::from_rational(q.clone());
        assert_eq!(c.to_rational(), Some(q));
        // zeta_4^2 = -1 collapses to a rational.
        let m1 = Cyclotomic::root_of_unity(4, 2);
        assert_eq!(m1.to_rational(), Some(rat(-1)));
        assert_eq!(m1.conductor(), 1);
    }

    #[test]
    fn conjugation_fixes_rationals_and_inverts_roots() {
        let z = Cyclotomic::root_of_unity(5, 1);
        assert_eq!(z.conj(), Cyclotomic::root_of_unity(5, 4));
        assert_eq!(z.mul(&z.conj()), Cyclotomic::one());
        let q = Cyclotomic::from_rational(ratio(3, 7));
        assert_eq!(q.conj(), q);
    }

    #[test]
    fn promotion_is_consistent() {
        // zeta_2 = -1 seen inside conductor 6.
        let z2 = Cyclotomic::root_of_unity(2, 1);
        let promoted = z2.promoted(6);
        assert_eq!(promoted.to_rational(), Some(rat(-1)));
        // zeta_3 promoted to conductor 6 equals zeta_6^2.
        let z3 = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(z3.promoted(6), Cyclotomic::root_of_unity(6, 2));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
        assert_eq!(i.mul(&i).mul(&i).mul(&i), Cyclotomic::one());
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        // zeta_6 = -zeta_3^2, so zeta_3 + zeta_6 has conductor 6 but the sum
        // zeta_3 + zeta_3^2 = -1 stays rational.
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z3sq = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(z3.add(&z3sq), Cyclotomic::from_integer(-1));
        let z6 = Cyclotomic::root_of_unity(6, 1);
        assert_eq!(z6.mul(&z6).mul(&z6), Cyclotomic::from_integer(-1));
    }
}
