//! Functions `f: F_q^n -> F_q` and their zero sets.
//!
//! Every variant can be materialized into a dense table indexed by point
//! encoding; code construction only ever reads that table. The value at the
//! origin is stored but no code column uses it.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::geometry::{PointSet, Space};

/// Which zero set to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroSetMode {
    /// `V(f)* = {x != 0 : f(x) = 0}`.
    AffineStar,
    /// `V(f)`, origin included when `f(0) = 0`.
    AffineWithOrigin,
    /// `V_p(f)`, as the set of canonical projective representatives.
    Projective,
}

/// A polynomial in `n` variables, used as a function on F_q^n.
///
/// Exponents are reduced with `x^q = x` at construction, and like monomials
/// are merged, so two polynomials defining the same monomial content compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    monomials: Vec<(Elem, Vec<u32>)>,
}

fn reduce_exponent(e: u64, q: u32) -> u32 {
    if e == 0 {
        0
    } else {
        ((e - 1) % (q as u64 - 1) + 1) as u32
    }
}

impl Polynomial {
    pub fn new(field: &Field, n: usize, terms: &[(Elem, Vec<u64>)]) -> Result<Self> {
        let mut monomials: Vec<(Elem, Vec<u32>)> = Vec::new();
        for (coef, exps) in terms {
            if *coef == 0 || !field.contains(*coef) {
                return Err(Error::InvalidFunction(format!(
                    "monomial coefficient {coef} must be a nonzero field element"
                )));
            }
            if exps.len() != n {
                return Err(Error::WrongArity {
                    expected: n,
                    got: exps.len(),
                });
            }
            let exps: Vec<u32> = exps.iter().map(|&e| reduce_exponent(e, field.q())).collect();
            match monomials.iter_mut().find(|(_, e)| *e == exps) {
                Some((c, _)) => *c = field.add(*c, *coef),
                None => monomials.push((*coef, exps)),
            }
        }
        monomials.retain(|(c, _)| *c != 0);
        monomials.sort_by(|a, b| a.1.cmp(&b.1));
        Ok(Polynomial { n, monomials })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> &[(Elem, Vec<u32>)] {
        &self.monomials
    }

    pub fn evaluate(&self, field: &Field, x: &[Elem]) -> Elem {
        self.monomials.iter().fold(0, |acc, (c, exps)| {
            let term = x
                .iter()
                .zip(exps)
                .fold(*c, |t, (&xi, &e)| field.mul(t, field.pow(xi, e as u64)));
            field.add(acc, term)
        })
    }

    /// True if every monomial has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.monomials.iter().map(|(_, e)| e.iter().sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionKind {
    /// `q^n` values indexed by point encoding.
    Table(Vec<Elem>),
    /// `f_{r,k}(x) = Σ_{j<k} x_{jr+1} ⋯ x_{jr+r}` on `n = rk` variables.
    MonomialBlocks { r: usize, k: usize },
    /// `f(x) = α_{wt(x)}` for `1 <= wt(x) <= k`, and 0 otherwise.
    WeightStaircase { k: usize, alphas: Vec<Elem> },
    /// Indicator of the zero set of a polynomial.
    PolyZeroIndicator(Polynomial),
}

#[derive(Clone, Debug)]
pub struct FunctionSpec {
    space: Space,
    kind: FunctionKind,
}

impl FunctionSpec {
    pub fn table(space: &Space, values: Vec<Elem>) -> Result<Self> {
        if values.len() != space.size() {
            return Err(Error::InvalidFunction(format!(
                "table has {} entries, expected q^n = {}",
                values.len(),
                space.size()
            )));
        }
        if let Some(&bad) = values.iter().find(|&&v| !space.field().contains(v)) {
            return Err(Error::ElementOutOfRange(bad as u64));
        }
        Ok(FunctionSpec {
            space: space.clone(),
            kind: FunctionKind::Table(values),
        })
    }

    pub fn constant(space: &Space, c: Elem) -> Result<Self> {
        Self::table(space, vec![c; space.size()])
    }

    /// `f_{r,k}` over `field`, on `n = r·k` variables.
    pub fn monomial_blocks(field: &Field, r: usize, k: usize) -> Result<Self> {
        if r == 0 || k == 0 {
            return Err(Error::InvalidFunction("r and k must be at least 1".into()));
        }
        Ok(FunctionSpec {
            space: Space::new(field, r * k)?,
            kind: FunctionKind::MonomialBlocks { r, k },
        })
    }

    pub fn staircase(space: &Space, k: usize, alphas: Vec<Elem>) -> Result<Self> {
        let n = space.n();
        if n <= 3 || k < 2 || k > n - 2 {
            return Err(Error::InvalidFunction(format!(
                "staircase needs n > 3 and 2 <= k <= n-2 (n = {n}, k = {k})"
            )));
        }
        if alphas.len() != k {
            return Err(Error::InvalidFunction(format!(
                "staircase needs {k} values, got {}",
                alphas.len()
            )));
        }
        if alphas.iter().any(|&a| a == 0 || !space.field().contains(a)) {
            return Err(Error::InvalidFunction("staircase values must be nonzero field elements".into()));
        }
        if space.q().is_multiple_of(2) {
            log::warn!(
                "staircase function over even q = {}: the cutting property is only guaranteed for odd q",
                space.q()
            );
        }
        Ok(FunctionSpec {
            space: space.clone(),
            kind: FunctionKind::WeightStaircase { k, alphas },
        })
    }

    pub fn poly_zero(space: &Space, poly: Polynomial) -> Result<Self> {
        if poly.n() != space.n() {
            return Err(Error::WrongArity {
                expected: space.n(),
                got: poly.n(),
            });
        }
        Ok(FunctionSpec {
            space: space.clone(),
            kind: FunctionKind::PolyZeroIndicator(poly),
        })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn field(&self) -> &Field {
        self.space.field()
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    pub fn evaluate(&self, x: &[Elem]) -> Elem {
        let f = self.space.field();
        match &self.kind {
            FunctionKind::Table(t) => t[self.space.index_unchecked(x)],
            FunctionKind::MonomialBlocks { r, .. } => x
                .chunks(*r)
                .map(|block| block.iter().fold(1, |p, &xi| f.mul(p, xi)))
                .fold(0, |acc, m| f.add(acc, m)),
            FunctionKind::WeightStaircase { k, alphas } => {
                let wt = x.iter().filter(|&&c| c != 0).count();
                if wt >= 1 && wt <= *k {
                    alphas[wt - 1]
                } else {
                    0
                }
            }
            FunctionKind::PolyZeroIndicator(p) => (p.evaluate(f, x) == 0) as Elem,
        }
    }

    pub fn eval_index(&self, idx: usize) -> Elem {
        match &self.kind {
            FunctionKind::Table(t) => t[idx],
            _ => self.evaluate(&self.space.coords(idx)),
        }
    }

    /// Dense table of all `q^n` values.
    pub fn to_table(&self) -> Vec<Elem> {
        if let FunctionKind::Table(t) = &self.kind {
            return t.clone();
        }
        let mut x = vec![0; self.space.n()];
        (0..self.space.size())
            .map(|idx| {
                self.space.coords_into(idx, &mut x);
                self.evaluate(&x)
            })
            .collect()
    }

    /// The same function as a `Table` variant.
    pub fn materialize(&self) -> FunctionSpec {
        FunctionSpec {
            space: self.space.clone(),
            kind: FunctionKind::Table(self.to_table()),
        }
    }

    pub fn zero_set(&self, mode: ZeroSetMode) -> Result<PointSet> {
        let table = self.to_table();
        let mut set = self.space.empty_set();
        match mode {
            ZeroSetMode::AffineStar | ZeroSetMode::AffineWithOrigin => {
                let start = if mode == ZeroSetMode::AffineStar { 1 } else { 0 };
                for (idx, &v) in table.iter().enumerate().skip(start) {
                    if v == 0 {
                        set.insert(idx);
                    }
                }
            }
            ZeroSetMode::Projective => {
                if scalar_degree_of_table(&self.space, &table).is_none() {
                    return Err(Error::NotScalarCompatible);
                }
                for idx in self.space.projective_points() {
                    if table[idx] == 0 {
                        set.insert(idx);
                    }
                }
            }
        }
        Ok(set)
    }

    /// The least `d >= 0` with `f(λx) = λ^d f(x)` for every `λ != 0` and every
    /// `x`, checked exhaustively. Since `λ^(q-1) = 1`, such a `d` is only
    /// determined modulo `q - 1`; the least representative is returned.
    pub fn scalar_degree(&self) -> Option<u32> {
        scalar_degree_of_table(&self.space, &self.to_table())
    }

    /// True if `f(x) = v·x` on every nonzero `x`, with `v_i = f(e_i)`.
    pub fn is_linear(&self) -> bool {
        let table = self.to_table();
        let s = &self.space;
        let v: Vec<Elem> = (0..s.n()).map(|i| table[s.unit(i)]).collect();
        let mut x = vec![0; s.n()];
        (1..s.size()).all(|idx| {
            s.coords_into(idx, &mut x);
            s.dot(&v, &x) == table[idx]
        })
    }
}

fn scalar_degree_of_table(space: &Space, table: &[Elem]) -> Option<u32> {
    let f = space.field();
    let q = f.q();
    let scaled: Vec<Vec<usize>> = f
        .nonzero()
        .map(|l| (0..space.size()).map(|i| space.scale(i, l)).collect())
        .collect();
    (0..q - 1).find(|&d| {
        f.nonzero().zip(&scaled).all(|(l, map)| {
            let ld = f.pow(l, d as u64);
            (0..space.size()).all(|i| table[map[i]] == f.mul(ld, table[i]))
        })
    })
}

/// Closed form for `#V(f_{r,k})`, origin included:
/// `(q-1) q^(k-1) (q^(r-1) - (q-1)^(r-1))^k + q^(rk-1)`.
/// `None` on overflow.
pub fn cardinality_formula(q: u64, r: u32, k: u32) -> Option<u128> {
    if q < 2 || r == 0 || k == 0 {
        return None;
    }
    let q = q as u128;
    let inner = q.checked_pow(r - 1)? - (q - 1).checked_pow(r - 1)?;
    (q - 1)
        .checked_mul(q.checked_pow(k - 1)?)?
        .checked_mul(inner.checked_pow(k)?)?
        .checked_add(q.checked_pow(r.checked_mul(k)? - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::with_order(q, None).unwrap()
    }

    fn frk(q: u64, r: usize, k: usize) -> FunctionSpec {
        FunctionSpec::monomial_blocks(&gf(q), r, k).unwrap()
    }

    /// Counts zeros of f_{r,k} by direct nested evaluation over all tuples.
    fn brute_zero_count(q: u64, r: usize, k: usize) -> u128 {
        let f = gf(q);
        let n = r * k;
        let mut x = vec![0u32; n];
        let mut count = 0;
        loop {
            let mut total = 0;
            for j in 0..k {
                let mut m = 1;
                for i in 0..r {
                    m = f.mul(m, x[j * r + i]);
                }
                total = f.add(total, m);
            }
            if total == 0 {
                count += 1;
            }
            if !crate::geometry::advance(&mut x, q as u32) {
                return count;
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(frk(2, 2, 2).evaluate(&[1, 1, 0, 0]), 1);
        assert_eq!(frk(2, 2, 2).evaluate(&[1, 1, 1, 1]), 0);
        assert_eq!(frk(3, 2, 2).evaluate(&[1, 2, 2, 2]), 0);
    }

    #[test]
    fn zero_set_examples() {
        let f = frk(2, 2, 2);
        assert_eq!(brute_zero_count(2, 2, 2), 10);
        assert_eq!(f.zero_set(ZeroSetMode::AffineWithOrigin).unwrap().count(), 10);
        assert_eq!(f.zero_set(ZeroSetMode::AffineStar).unwrap().count(), 9);
        let s = Space::new(&gf(3), 3).unwrap();
        let zero = FunctionSpec::constant(&s, 0).unwrap();
        assert_eq!(zero.zero_set(ZeroSetMode::AffineStar).unwrap().count(), 26);
        let f = frk(3, 2, 2);
        assert_eq!(brute_zero_count(3, 2, 2), 33);
        assert_eq!(f.zero_set(ZeroSetMode::Projective).unwrap().count(), 16);
    }

    #[test]
    fn scalar_degree_examples() {
        for (q, r, k) in [(3u64, 2usize, 2usize), (5, 3, 2), (4, 2, 2), (2, 3, 2), (5, 2, 1)] {
            let d = frk(q, r, k).scalar_degree().expect("f_rk is homogeneous");
            assert_eq!(d as usize % (q as usize - 1), r % (q as usize - 1), "q={q} r={r}");
        }
        let field = gf(3);
        let s = Space::new(&field, 2).unwrap();
        // P = x1^2 - x2^2, homogeneous
        let p = Polynomial::new(&field, 2, &[(1, vec![2, 0]), (2, vec![0, 2])]).unwrap();
        assert_eq!(FunctionSpec::poly_zero(&s, p).unwrap().scalar_degree(), Some(0));
        // x1 + x1 x2: check by hand that no d works
        let p = Polynomial::new(&field, 2, &[(1, vec![1, 0]), (1, vec![1, 1])]).unwrap();
        let table: Vec<Elem> = (0..9).map(|i| p.evaluate(&field, &s.coords(i))).collect();
        let f = FunctionSpec::table(&s, table.clone()).unwrap();
        assert_eq!(f.scalar_degree(), None);
        // independent check: for each d in {0,1} find a violating (λ, x)
        for d in 0..2u64 {
            let violated = (1..9).any(|i| {
                let x = s.coords(i);
                let lx: Vec<Elem> = x.iter().map(|&c| field.mul(2, c)).collect();
                table[s.index(&lx).unwrap()] != field.mul(field.pow(2, d), table[i])
            });
            assert!(violated);
        }
        assert_eq!(f.zero_set(ZeroSetMode::Projective), Err(Error::NotScalarCompatible));
    }

    #[test]
    fn cardinality_formula_matches_brute_force() {
        assert_eq!(cardinality_formula(2, 2, 2), Some(10));
        assert_eq!(cardinality_formula(3, 2, 2), Some(33));
        for q in [2u64, 3, 4, 5] {
            for r in 1..=3u32 {
                assert_eq!(
                    cardinality_formula(q, r, 1),
                    Some((q as u128).pow(r) - (q as u128 - 1).pow(r))
                );
                for k in 1..=3u32 {
                    if (q as u128).pow(r * k) > 20_000 {
                        continue;
                    }
                    assert_eq!(
                        cardinality_formula(q, r, k),
                        Some(brute_zero_count(q, r as usize, k as usize)),
                        "q={q} r={r} k={k}"
                    );
                }
            }
        }
        assert_eq!(cardinality_formula(1, 2, 2), None);
        assert_eq!(cardinality_formula(1 << 20, 10, 10), None);
    }

    #[test]
    fn linearity() {
        let field = gf(2);
        let s = Space::new(&field, 2).unwrap();
        let x1: Vec<Elem> = (0..4).map(|i| s.coords(i)[0]).collect();
        assert!(FunctionSpec::table(&s, x1).unwrap().is_linear());
        assert!(FunctionSpec::constant(&s, 0).unwrap().is_linear());
        assert!(!FunctionSpec::constant(&s, 1).unwrap().is_linear());
        for q in [2, 3, 4] {
            assert!(!frk(q, 2, 2).is_linear());
        }
        assert!(frk(3, 1, 3).is_linear());
    }

    #[test]
    fn staircase_zero_iff_heavy() {
        let field = gf(3);
        let s = Space::new(&field, 5).unwrap();
        let f = FunctionSpec::staircase(&s, 3, vec![1, 2, 1]).unwrap();
        for idx in 1..s.size() {
            let x = s.coords(idx);
            let wt = x.iter().filter(|&&c| c != 0).count();
            assert_eq!(f.evaluate(&x) == 0, wt > 3);
        }
        assert!(FunctionSpec::staircase(&s, 4, vec![1; 4]).is_err());
        assert!(FunctionSpec::staircase(&s, 2, vec![1, 0]).is_err());
        let small = Space::new(&field, 3).unwrap();
        assert!(FunctionSpec::staircase(&small, 2, vec![1, 1]).is_err());
    }

    #[test]
    fn polynomial_exponent_reduction() {
        let field = gf(3);
        let p = Polynomial::new(&field, 2, &[(1, vec![5, 0]), (1, vec![1, 0])]).unwrap();
        // x^5 = x over GF(3), so the two monomials merge into 2·x1
        assert_eq!(p.monomials(), &[(2, vec![1, 0])]);
        let s = Space::new(&field, 2).unwrap();
        for i in 0..9 {
            let x = s.coords(i);
            assert_eq!(p.evaluate(&field, &x), field.mul(2, x[0]));
        }
        assert!(Polynomial::new(&field, 2, &[(0, vec![1, 0])]).is_err());
    }

    #[test]
    fn frk_scaling_law() {
        for (q, r) in [(3u64, 2usize), (5, 2), (4, 3)] {
            let f = frk(q, r, 2);
            let s = f.space().clone();
            let field = s.field().clone();
            for idx in (1..s.size()).step_by(7) {
                for l in field.nonzero() {
                    assert_eq!(
                        f.eval_index(s.scale(idx, l)),
                        field.mul(field.pow(l, r as u64), f.eval_index(idx))
                    );
                }
            }
        }
    }
}
