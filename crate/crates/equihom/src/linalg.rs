//! Exact sparse linear algebra over the rationals: rank, nullspace,
//! and solving inside a column span. Elimination is fraction-free on
//! gcd-reduced integer rows, with pivots chosen from the shortest rows
//! to limit fill-in.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, Signed, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Parses "p/q", "p", or a plain integer string into an exact rational.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: Int = num.trim().parse().ok()?;
            let d: Int = den.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Renders an exact rational as "p" or "p/q".
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A sparse matrix over exact rationals. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    /// Dense test constructor from integer rows.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::new(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, rat(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rat) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rat {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            t.entries.insert((j, i), v.clone());
        }
        t
    }

    pub fn column(&self, col: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.rows];
        for (&(i, j), v) in &self.entries {
            if j == col {
                out[i] = v.clone();
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        let mut out = vec![Rat::zero(); self.rows];
        for (&(i, j), v) in &self.entries {
            if !x[j].is_zero() {
                out[i] += v * &x[j];
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::new(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            for (&(k2, j), b) in &other.entries {
                if k2 == k {
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        Echelon::rank_only(self).rank()
    }

    /// Basis of the right nullspace; for each free column in ascending
    /// order, the vector with that coordinate set to 1.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rat>> {
        Echelon::rank_only(self).nullspace_basis()
    }

    /// Solves A x = b, returning None when b is outside the column span.
    pub fn solve_in_span(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        Echelon::new(self).solve(b)
    }

    /// Ascending indices of a maximal independent set of columns.
    pub fn column_space_basis(&self) -> Vec<usize> {
        Echelon::rank_only(self).pivot_columns()
    }
}

/// One gcd-reduced integer row; column-sorted, no zero coefficients.
/// Columns >= `cols` hold the row-combination bookkeeping.
type IntRow = Vec<(usize, Int)>;

fn row_gcd_reduce(row: &mut IntRow) {
    let mut g = Int::zero();
    for (_, c) in row.iter() {
        g = num::integer::gcd(g, c.abs());
        if g == Int::from(1) {
            break;
        }
    }
    if g > Int::from(1) {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
    if let Some((_, lead)) = row.first() {
        if lead.is_negative() {
            for (_, c) in row.iter_mut() {
                *c = -c.clone();
            }
        }
    }
}

/// dst = a*dst - b*src, merged on sorted column lists.
fn row_combine(dst: &IntRow, src: &IntRow, a: &Int, b: &Int) -> IntRow {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let mut i = 0;
    let mut j = 0;
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                let v = a * vi - b * vj;
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                out.push((*ci, a * vi));
                i += 1;
            }
            (Some(_), Some((cj, vj))) => {
                out.push((*cj, -(b * vj)));
                j += 1;
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, a * vi));
                i += 1;
            }
            (None, Some((cj, vj))) => {
                out.push((*cj, -(b * vj)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn real_nnz(row: &IntRow, cols: usize) -> usize {
    row.iter().take_while(|(c, _)| *c < cols).count()
}

fn coeff_at(row: &IntRow, col: usize) -> Option<&Int> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// Row-echelon data from one elimination pass. Pivot columns are cleared
/// from every other row, so each pivot equation involves its pivot and
/// free columns only.
pub struct Echelon {
    rows: usize,
    cols: usize,
    tracked: bool,
    /// Finished pivot rows together with their pivot column.
    pivot_rows: Vec<(usize, IntRow)>,
    /// Rows that vanished on the real columns; with tracking on, their
    /// bookkeeping part spans the left nullspace.
    zero_rows: Vec<IntRow>,
}

impl Echelon {
    /// Factors with row-combination tracking, enabling `solve`.
    pub fn new(matrix: &RationalMatrix) -> Self {
        Self::eliminate(matrix, true)
    }

    /// Factors without tracking; rank, nullspace and pivot columns only.
    pub fn rank_only(matrix: &RationalMatrix) -> Self {
        Self::eliminate(matrix, false)
    }

    fn eliminate(matrix: &RationalMatrix, tracked: bool) -> Self {
        let rows = matrix.rows();
        let cols = matrix.cols();
        // Scale each row to integers; the bookkeeping entry starts as the
        // scale factor so real parts stay exact multiples of original rows.
        let mut slab: Vec<Option<IntRow>> = Vec::with_capacity(rows);
        let mut rat_rows: Vec<Vec<(usize, &Rat)>> = vec![Vec::new(); rows];
        for (&(i, j), v) in &matrix.entries {
            rat_rows[i].push((j, v));
        }
        for (i, rr) in rat_rows.into_iter().enumerate() {
            let mut scale = Int::from(1);
            for (_, v) in &rr {
                scale = num::integer::lcm(scale, v.denom().clone());
            }
            let mut row: IntRow = rr
                .into_iter()
                .map(|(j, v)| (j, v.numer() * (&scale / v.denom())))
                .collect();
            if tracked {
                row.push((cols + i, scale));
            }
            row_gcd_reduce(&mut row);
            if !row.is_empty() {
                slab.push(Some(row));
            } else {
                slab.push(None);
            }
        }

        let mut occ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
        let mut agenda: BTreeSet<(usize, usize, usize)> = BTreeSet::new(); // (nnz, lead, id)
        let mut zero_rows: Vec<IntRow> = Vec::new();
        for (id, slot) in slab.iter().enumerate() {
            if let Some(row) = slot {
                let nnz = real_nnz(row, cols);
                if nnz == 0 {
                    if tracked {
                        zero_rows.push(row.clone());
                    }
                } else {
                    agenda.insert((nnz, row[0].0, id));
                    for (c, _) in row.iter().take_while(|(c, _)| *c < cols) {
                        occ[*c].insert(id);
                    }
                }
            }
        }
        for slot in slab.iter_mut() {
            if let Some(row) = slot {
                if real_nnz(row, cols) == 0 {
                    *slot = None;
                }
            }
        }

        let mut pivot_rows: Vec<(usize, IntRow)> = Vec::new();
        let mut done_with_col: Vec<(usize, usize)> = Vec::new(); // (pivot col, index into pivot_rows)

        while let Some(&(nnz, lead, id)) = agenda.iter().next() {
            let _ = (nnz, lead);
            agenda.remove(&(nnz, lead, id));
            let pivot_row = slab[id].take().expect("agenda row present");
            for (c, _) in pivot_row.iter().take_while(|(c, _)| *c < cols) {
                occ[*c].remove(&id);
            }
            // Pivot on the least-occupied column of the shortest row.
            let pcol = pivot_row
                .iter()
                .take_while(|(c, _)| *c < cols)
                .map(|(c, _)| (occ[*c].len(), *c))
                .min()
                .expect("nonempty row")
                .1;
            let pcoef = coeff_at(&pivot_row, pcol).expect("pivot coefficient").clone();

            let victims: Vec<usize> = occ[pcol].iter().copied().collect();
            for vid in victims {
                let row = slab[vid].take().expect("occupied row present");
                agenda.remove(&(real_nnz(&row, cols), row[0].0, vid));
                for (c, _) in row.iter().take_while(|(c, _)| *c < cols) {
                    occ[*c].remove(&vid);
                }
                let vcoef = coeff_at(&row, pcol).expect("victim coefficient").clone();
                let mut combined = row_combine(&row, &pivot_row, &pcoef, &vcoef);
                row_gcd_reduce(&mut combined);
                let new_nnz = real_nnz(&combined, cols);
                if new_nnz == 0 {
                    if tracked && !combined.is_empty() {
                        zero_rows.push(combined);
                    }
                } else {
                    agenda.insert((new_nnz, combined[0].0, vid));
                    for (c, _) in combined.iter().take_while(|(c, _)| *c < cols) {
                        occ[*c].insert(vid);
                    }
                    slab[vid] = Some(combined);
                }
            }
            // Also clear the pivot column from earlier pivot rows.
            for &(dcol, didx) in &done_with_col {
                let _ = dcol;
                let drow = &pivot_rows[didx].1;
                if let Some(vcoef) = coeff_at(drow, pcol) {
                    let vcoef = vcoef.clone();
                    let mut combined = row_combine(drow, &pivot_row, &pcoef, &vcoef);
                    row_gcd_reduce(&mut combined);
                    pivot_rows[didx].1 = combined;
                }
            }
            done_with_col.push((pcol, pivot_rows.len()));
            pivot_rows.push((pcol, pivot_row));
        }

        Echelon {
            rows,
            cols,
            tracked,
            pivot_rows,
            zero_rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.pivot_rows.iter().map(|(c, _)| *c).collect();
        cols.sort_unstable();
        cols
    }

    fn is_pivot(&self, col: usize) -> bool {
        self.pivot_rows.iter().any(|(c, _)| *c == col)
    }

    /// Solves A x = b with free variables set to zero; None when b is not
    /// in the column span.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert!(self.tracked, "solve needs a tracked factorization");
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let transform_dot = |row: &IntRow| -> Rat {
            let mut acc = Rat::zero();
            for (c, v) in row.iter() {
                if *c >= self.cols {
                    let i = *c - self.cols;
                    if !b[i].is_zero() {
                        acc += Rat::from_integer(v.clone()) * &b[i];
                    }
                }
            }
            acc
        };
        for zrow in &self.zero_rows {
            if !transform_dot(zrow).is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (pcol, prow) in &self.pivot_rows {
            let c = transform_dot(prow);
            let pcoef = coeff_at(prow, *pcol).expect("pivot coefficient");
            x[*pcol] = c / Rat::from_integer(pcoef.clone());
        }
        // Pivot rows may still mention free columns, all pinned at zero,
        // so the pivot equations above are complete.
        Some(x)
    }

    pub fn nullspace_basis(&self) -> Vec<Vec<Rat>> {
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if self.is_pivot(free) {
                continue;
            }
            let mut x = vec![Rat::zero(); self.cols];
            x[free] = rat(1);
            for (pcol, prow) in &self.pivot_rows {
                if let Some(w) = coeff_at(prow, free) {
                    let pcoef = coeff_at(prow, *pcol).expect("pivot coefficient");
                    x[*pcol] = -Rat::new(w.clone(), pcoef.clone());
                }
            }
            basis.push(x);
        }
        basis
    }
}

/// Incremental column-span builder used to pick cycles that are
/// independent modulo a boundary space.
pub struct SpanBuilder {
    dim: usize,
    reduced: Vec<(usize, Vec<Rat>)>, // (pivot position, reduced vector)
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        SpanBuilder {
            dim,
            reduced: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Returns true when the vector enlarges the span.
    pub fn add(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut w = v.to_vec();
        for (pos, basis) in &self.reduced {
            if !w[*pos].is_zero() {
                let factor = w[*pos].clone() / &basis[*pos];
                for (wi, bi) in w.iter_mut().zip(basis.iter()) {
                    *wi -= &factor * bi;
                }
            }
        }
        match w.iter().position(|c| !c.is_zero()) {
            Some(pos) => {
                self.reduced.push((pos, w));
                true
            }
            None => false,
        }
    }
}

/// Convenience check used throughout the tests.
pub fn is_zero_vector(v: &[Rat]) -> bool {
    v.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::new(2, 5).rank(), 0);
        // Boundary of the full triangle on 3 vertices: rows {1},{2},{3},
        // columns {1,2},{1,3},{2,3} with the two-term signs.
        let d1 = RationalMatrix::from_rows(vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d1.rank(), 2);
    }

    #[test]
    fn nullspace_examples() {
        assert!(RationalMatrix::identity(2).nullspace_basis().is_empty());
        let m = RationalMatrix::from_rows(vec![vec![1, 1]]);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        // 1 at the free column, so (-1, 1) up to scaling.
        assert_eq!(basis[0], vec![rat(-1), rat(1)]);
        let aug = RationalMatrix::from_rows(vec![vec![1, 1, 1]]);
        assert_eq!(aug.nullspace_basis().len(), 2);
        for v in aug.nullspace_basis() {
            assert!(is_zero_vector(&aug.mul_vec(&v)));
        }
    }

    #[test]
    fn solve_examples() {
        let id = RationalMatrix::identity(3);
        let b = vec![rat(4), rat(-1), ratio(1, 2)];
        assert_eq!(id.solve_in_span(&b).unwrap(), b);

        let col = RationalMatrix::from_rows(vec![vec![1], vec![1]]);
        assert_eq!(
            col.solve_in_span(&[rat(2), rat(2)]).unwrap(),
            vec![rat(2)]
        );

        let col2 = RationalMatrix::from_rows(vec![vec![1], vec![0]]);
        assert!(col2.solve_in_span(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn solve_respects_free_columns() {
        // Wide system: solution must satisfy A x = b exactly.
        let a = RationalMatrix::from_rows(vec![vec![1, 2, 3], vec![0, 1, 1]]);
        let b = vec![rat(5), rat(1)];
        let x = a.solve_in_span(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
        let mut m = RationalMatrix::new(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if rng.gen_bool(0.6) {
                    m.set(i, j, rat(rng.gen_range(-3..=3)));
                }
            }
        }
        m
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let (rows, cols) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let (rows, cols) = (rng.gen_range(1..8), rng.gen_range(1..8));
            let m = random_matrix(&mut rng, rows, cols);
            let basis = m.nullspace_basis();
            assert_eq!(m.rank() + basis.len(), m.cols());
            for v in basis {
                assert!(is_zero_vector(&m.mul_vec(&v)));
            }
        }
    }

    #[test]
    fn solve_round_trip_on_random_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let (rows, cols) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let m = random_matrix(&mut rng, rows, cols);
            let x: Vec<Rat> = (0..m.cols()).map(|_| rat(rng.gen_range(-2..=2))).collect();
            let b = m.mul_vec(&x);
            let solved = m.solve_in_span(&b).expect("b is in the span");
            assert_eq!(m.mul_vec(&solved), b);
        }
    }

    #[test]
    fn column_space_basis_is_independent_and_spanning() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let (rows, cols) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let m = random_matrix(&mut rng, rows, cols);
            let basis = m.column_space_basis();
            assert_eq!(basis.len(), m.rank());
            let mut span = SpanBuilder::new(m.rows());
            for &j in &basis {
                assert!(span.add(&m.column(j)));
            }
            for j in 0..m.cols() {
                span.add(&m.column(j));
            }
            assert_eq!(span.rank(), m.rank());
        }
    }

    #[test]
    fn fractional_entries_are_exact() {
        let mut m = RationalMatrix::new(2, 2);
        m.set(0, 0, ratio(1, 3));
        m.set(0, 1, ratio(1, 6));
        m.set(1, 0, ratio(2, 3));
        m.set(1, 1, ratio(1, 3));
        // Second row is twice the first: rank 1.
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace_basis();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vector(&m.mul_vec(&ns[0])));
    }
}
