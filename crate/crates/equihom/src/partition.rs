//! Integer partitions, symmetric-group class data, and the border-strip
//! recursion for irreducible character values.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest symmetric group whose character table we build on demand.
pub const MAX_TABLE_DEGREE: usize = 9;

/// An integer partition, stored with parts in descending order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Comma-joined descending parts, e.g. "2,1,1"; the empty partition is "-".
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            "-".to_string()
        } else {
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return None;
            }
            parts.push(tok.parse::<usize>().ok()?);
        }
        Some(Partition::new(parts))
    }

    /// Number of even parts; determines the sign-character value of the class.
    pub fn even_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 0).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All partitions of `m` in descending lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let hi = rest.min(max);
        for part in (1..=hi).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(m: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for k in 2..=m as u64 {
        acc = acc.checked_mul(k)?;
    }
    Some(acc)
}

/// Size of the conjugacy class of cycle type `mu` in the symmetric group on
/// `mu.sum()` letters: m! / prod(k^{m_k} m_k!).
pub fn class_size(mu: &Partition) -> u64 {
    let m = mu.sum();
    let mut centralizer: u64 = 1;
    let mut mult: HashMap<usize, u64> = HashMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (k, cnt) in mult {
        centralizer *= (k as u64).pow(cnt as u32);
        for j in 2..=cnt {
            centralizer *= j;
        }
    }
    factorial(m).expect("class size overflow") / centralizer
}

/// Irreducible character value chi^lambda(mu) by border-strip removal.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.sum() != mu.sum() {
        return Err(Error::PartitionMismatch {
            left: lambda.sum(),
            right: mu.sum(),
        });
    }
    Ok(mn_rec(lambda.parts(), mu.parts()))
}

fn mn_rec(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let strip = mu[0];
    let rest = &mu[1..];
    // Beta-set of lambda: distinct markers lambda_i + (l - 1 - i).
    let l = lambda.len().max(1);
    let mut beta: Vec<usize> = (0..l)
        .map(|i| lambda.get(i).copied().unwrap_or(0) + (l - 1 - i))
        .collect();
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if beta.contains(&target) {
            continue;
        }
        // Removing the strip moves marker b down to target; the height is the
        // number of markers strictly between them.
        let height = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut nb = beta.clone();
        nb[pos] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let next: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&x| x > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&next, rest);
    }
    total
}

/// The full character table of the symmetric group on `m` letters: one row
/// per partition (irreducible), one column per partition (cycle type), both
/// in the order of `partitions_of(m)`.
#[derive(Debug)]
pub struct SymmetricCharacterTable {
    pub m: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<u64>,
}

impl SymmetricCharacterTable {
    pub fn class_index(&self, mu: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == mu)
    }
}

/// Memoized character tables, built once per degree.
pub fn character_table(m: usize) -> Result<Arc<SymmetricCharacterTable>> {
    if m == 0 || m > MAX_TABLE_DEGREE {
        return Err(Error::OrderCapExceeded {
            cap: MAX_TABLE_DEGREE,
        });
    }
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<SymmetricCharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("character table lock poisoned");
    if let Some(t) = guard.get(&m) {
        return Ok(t.clone());
    }
    let partitions = partitions_of(m);
    let mut values = Vec::with_capacity(partitions.len());
    for lambda in &partitions {
        let row: Vec<i64> = partitions
            .iter()
            .map(|mu| mn_character(lambda, mu).expect("partition sizes match"))
            .collect();
        values.push(row);
    }
    let class_sizes = partitions.iter().map(class_size).collect();
    let table = Arc::new(SymmetricCharacterTable {
        m,
        partitions,
        values,
        class_sizes,
    });
    guard.insert(m, table.clone());
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_in_descending_lex_order() {
        let p3 = partitions_of(3);
        let labels: Vec<String> = p3.iter().map(|p| p.label()).collect();
        assert_eq!(labels, vec!["3", "2,1", "1,1,1"]);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(9).len(), 30);
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for m in 1..=7 {
            let total: u64 = partitions_of(m).iter().map(class_size).sum();
            assert_eq!(total, factorial(m).unwrap());
        }
    }

    #[test]
    fn trivial_row_is_all_ones() {
        let m = 6;
        let lambda = Partition::new(vec![m]);
        for mu in partitions_of(m) {
            assert_eq!(mn_character(&lambda, &mu).unwrap(), 1);
        }
    }

    #[test]
    fn sign_row_counts_even_parts() {
        let m = 6;
        let lambda = Partition::new(vec![1; m]);
        for mu in partitions_of(m) {
            let expected = if mu.even_parts() % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&lambda, &mu).unwrap(), expected);
        }
    }

    #[test]
    fn standard_character_of_s3() {
        let lambda = Partition::new(vec![2, 1]);
        let vals: Vec<i64> = partitions_of(3)
            .iter()
            .map(|mu| mn_character(&lambda, mu).unwrap())
            .collect();
        // classes in order 3, 21, 111
        assert_eq!(vals, vec![-1, 0, 2]);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = Partition::new(vec![2, 1]);
        let b = Partition::new(vec![2, 2]);
        assert!(matches!(
            mn_character(&a, &b),
            Err(Error::PartitionMismatch { .. })
        ));
    }

    #[test]
    fn dimensions_match_hook_length_products() {
        // chi^lambda(1^m) against the hook length formula.
        for m in 1..=7 {
            let ones = Partition::new(vec![1; m]);
            for lambda in partitions_of(m) {
                let dim = mn_character(&lambda, &ones).unwrap();
                assert_eq!(dim, hook_dimension(&lambda) as i64, "lambda {lambda}");
            }
        }
    }

    fn hook_dimension(lambda: &Partition) -> u64 {
        let parts = lambda.parts();
        let m = lambda.sum();
        let mut hooks: u64 = 1;
        for (i, &row) in parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = parts[i + 1..].iter().filter(|&&r| r > j).count();
                hooks *= (arm + leg + 1) as u64;
            }
        }
        factorial(m).unwrap() / hooks
    }
}
