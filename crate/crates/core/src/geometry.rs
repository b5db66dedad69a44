//! Points, hyperplanes and linear subspaces of F_q^n.
//!
//! A point `x = (x_1, ..., x_n)` is encoded as `Σ code(x_i) q^(i-1)`, so
//! `x_1` is the least significant digit. Every enumeration in this crate is
//! sorted by this encoding. A projective point is represented by the vector
//! of its line whose first nonzero coordinate (lowest index) is 1.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Echelon;

/// Membership bitmap over point encodings `[0, q^n)`.
pub type PointSet = BitSet;

/// Affine (all nonzero vectors) or projective (one vector per line) frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Affine,
    Projective,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Affine => "affine",
            Mode::Projective => "projective",
        }
    }
}

/// Upper bound on `q^n` for any ambient space.
pub const MAX_POINTS: u64 = 1 << 32;

/// The vector space F_q^n with its canonical point encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    field: Field,
    n: usize,
    size: usize,
}

impl Space {
    pub fn new(field: &Field, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionOutOfRange { d: 0, n });
        }
        let q = field.q() as u64;
        let size = (0..n)
            .try_fold(1u64, |acc, _| acc.checked_mul(q).filter(|&s| s <= MAX_POINTS))
            .ok_or(Error::SpaceTooLarge { q: field.q(), n })?;
        Ok(Space {
            field: field.clone(),
            n,
            size: size as usize,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// `q^n`, the number of vectors including the origin.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn projective_size(&self) -> usize {
        (self.size - 1) / (self.q() as usize - 1)
    }

    pub fn coords_into(&self, mut idx: usize, out: &mut [Elem]) {
        let q = self.q() as usize;
        for c in out.iter_mut().take(self.n) {
            *c = (idx % q) as Elem;
            idx /= q;
        }
    }

    pub fn coords(&self, idx: usize) -> Vec<Elem> {
        let mut v = vec![0; self.n];
        self.coords_into(idx, &mut v);
        v
    }

    pub fn index(&self, x: &[Elem]) -> Result<usize> {
        if x.len() != self.n {
            return Err(Error::WrongArity {
                expected: self.n,
                got: x.len(),
            });
        }
        if let Some(&bad) = x.iter().find(|&&c| !self.field.contains(c)) {
            return Err(Error::ElementOutOfRange(bad as u64));
        }
        Ok(self.index_unchecked(x))
    }

    #[inline]
    pub(crate) fn index_unchecked(&self, x: &[Elem]) -> usize {
        let q = self.q() as usize;
        x.iter().rev().fold(0, |acc, &c| acc * q + c as usize)
    }

    /// Encoding of the canonical basis vector `e_{i+1}` (0-based `i`).
    pub fn unit(&self, i: usize) -> usize {
        (self.q() as usize).pow(i as u32)
    }

    /// All nonzero vectors in encoding order.
    pub fn affine_points(&self) -> Vec<usize> {
        (1..self.size).collect()
    }

    /// First nonzero coordinate of the vector with encoding `idx`.
    fn leading(&self, mut idx: usize) -> Option<Elem> {
        let q = self.q() as usize;
        while idx != 0 {
            let d = idx % q;
            if d != 0 {
                return Some(d as Elem);
            }
            idx /= q;
        }
        None
    }

    pub fn is_normalized(&self, idx: usize) -> bool {
        self.leading(idx) == Some(1)
    }

    /// Canonical projective representatives in encoding order.
    pub fn projective_points(&self) -> Vec<usize> {
        (1..self.size).filter(|&i| self.is_normalized(i)).collect()
    }

    /// `λ · x` as an encoding.
    pub fn scale(&self, idx: usize, lambda: Elem) -> usize {
        let mut x = self.coords(idx);
        for c in x.iter_mut() {
            *c = self.field.mul(*c, lambda);
        }
        self.index_unchecked(&x)
    }

    /// Splits a nonzero vector as `λ · r` with `r` normalized.
    pub fn normalize(&self, idx: usize) -> Option<(usize, Elem)> {
        let lead = self.leading(idx)?;
        let inv = self.field.inv(lead).expect("leading coordinate is nonzero");
        Some((self.scale(idx, inv), lead))
    }

    pub fn dot(&self, u: &[Elem], v: &[Elem]) -> Elem {
        let f = &self.field;
        u.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::new(self.size)
    }

    /// `H(v)` (or `H(v)* = H(v) ∖ {0}`): the vectors orthogonal to `v`.
    pub fn hyperplane(&self, v: &[Elem], include_origin: bool) -> Result<PointSet> {
        let vi = self.index(v)?;
        if vi == 0 {
            return Err(Error::ZeroNormal);
        }
        let mut set = self.empty_set();
        let mut x = vec![0; self.n];
        let start = if include_origin { 0 } else { 1 };
        for idx in start..self.size {
            self.coords_into(idx, &mut x);
            if self.dot(v, &x) == 0 {
                set.insert(idx);
            }
        }
        Ok(set)
    }

    /// The union of the lines through the points of `set`, minus the origin.
    pub fn cone(&self, set: &PointSet) -> PointSet {
        let mut out = self.empty_set();
        for idx in set.iter().filter(|&i| i != 0) {
            for lambda in self.field.nonzero() {
                out.insert(self.scale(idx, lambda));
            }
        }
        out
    }

    /// Dimension of the span of the given points.
    pub fn span_dim(&self, points: impl IntoIterator<Item = usize>) -> usize {
        let mut e = Echelon::new(&self.field, self.n);
        let mut x = vec![0; self.n];
        for idx in points {
            self.coords_into(idx, &mut x);
            e.insert(&x);
            if e.rank() == self.n {
                break;
            }
        }
        e.rank()
    }

    /// All `d`-dimensional subspaces, `1 <= d <= n - 1`, in canonical order:
    /// pivot sets lexicographically, then free entries in counter order.
    pub fn subspaces(&self, d: usize) -> Result<Vec<Subspace>> {
        if d == 0 || d >= self.n {
            return Err(Error::DimensionOutOfRange { d, n: self.n });
        }
        Ok(self.subspaces_unchecked(d))
    }

    pub(crate) fn subspaces_unchecked(&self, d: usize) -> Vec<Subspace> {
        let n = self.n;
        if d == n {
            return vec![Subspace::whole(n)];
        }
        let q = self.q();
        let mut out = Vec::new();
        for pivots in combinations(n, d) {
            // (row, column) slots that are free in RREF with these pivots
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    let pivots = &pivots;
                    (p + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let mut counter = vec![0 as Elem; free.len()];
            loop {
                let mut rows = vec![vec![0 as Elem; n]; d];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = 1;
                }
                for (&(r, c), &val) in free.iter().zip(&counter) {
                    rows[r][c] = val;
                }
                out.push(Subspace { rows });
                if !advance(&mut counter, q) {
                    break;
                }
            }
        }
        out
    }
}

/// Increments a base-`q` counter (least significant first); `false` on wrap.
pub(crate) fn advance(counter: &mut [Elem], q: u32) -> bool {
    for c in counter.iter_mut() {
        *c += 1;
        if *c < q {
            return true;
        }
        *c = 0;
    }
    false
}

/// `d`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..d).rev().find(|&i| cur[i] < n - d + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..d {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Number of `d`-dimensional subspaces of F_q^n.
pub fn gaussian_binomial(q: u64, n: u32, d: u32) -> u128 {
    if d > n {
        return 0;
    }
    let q = q as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..d {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// A linear subspace given by its canonical basis: reduced row-echelon form,
/// leading entries 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Subspace {
    rows: Vec<Vec<Elem>>,
}

impl Subspace {
    pub fn spanned_by(field: &Field, n: usize, vectors: &[Vec<Elem>]) -> Self {
        Subspace {
            rows: crate::linalg::rref(field, n, vectors),
        }
    }

    pub fn whole(n: usize) -> Self {
        Subspace {
            rows: (0..n)
                .map(|i| (0..n).map(|j| (i == j) as Elem).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    fn pivot(row: &[Elem]) -> usize {
        row.iter().position(|&c| c != 0).expect("basis rows are nonzero")
    }

    pub fn contains(&self, space: &Space, x: &[Elem]) -> bool {
        let f = space.field();
        let mut acc = vec![0; space.n()];
        for row in &self.rows {
            let c = x[Self::pivot(row)];
            if c != 0 {
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = f.add(*a, f.mul(c, r));
                }
            }
        }
        acc == x
    }

    /// Encodings of all `q^dim` vectors of the subspace, origin first.
    pub fn point_indices(&self, space: &Space) -> Vec<usize> {
        let f = space.field();
        let q = f.q();
        let mut counter = vec![0 as Elem; self.dim()];
        let mut out = Vec::with_capacity((q as usize).pow(self.dim() as u32));
        let mut x = vec![0; space.n()];
        loop {
            x.iter_mut().for_each(|c| *c = 0);
            for (row, &c) in self.rows.iter().zip(&counter) {
                if c != 0 {
                    for (a, &r) in x.iter_mut().zip(row) {
                        *a = f.add(*a, f.mul(c, r));
                    }
                }
            }
            out.push(space.index_unchecked(&x));
            if !advance(&mut counter, q) {
                return out;
            }
        }
    }

    pub fn points(&self, space: &Space, include_origin: bool) -> PointSet {
        let mut set = space.empty_set();
        for i in self.point_indices(space) {
            if include_origin || i != 0 {
                set.insert(i);
            }
        }
        set
    }

    /// A different subspace of the same dimension containing `inner`, which
    /// must be a proper subspace of `self`. `None` if `self` is the whole space.
    pub fn other_containing(&self, space: &Space, inner: &[Vec<Elem>]) -> Option<Subspace> {
        let f = space.field();
        let n = space.n();
        let mut e = Echelon::new(f, n);
        for v in inner {
            e.insert(v);
        }
        debug_assert!(e.rank() < self.dim());
        // extend the inner basis by rows of self, leaving one slot
        for row in &self.rows {
            if e.rank() + 1 == self.dim() {
                break;
            }
            e.insert(row);
        }
        // fill the last slot with a vector outside self
        let outside = (0..n)
            .map(|i| {
                let mut u = vec![0; n];
                u[i] = 1;
                u
            })
            .find(|u| !self.contains(space, u))?;
        e.insert(&outside);
        Some(Subspace {
            rows: e.into_rows(),
        })
    }
}
