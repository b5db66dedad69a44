//! The codes `C_f` and `C̃_f`, their weights, and minimality checks.
//!
//! `C_f` has one column per nonzero vector of F_q^n (affine mode) or per
//! canonical projective representative (projective mode), in encoding order.
//! Its generator matrix has `n + 1` rows: the values of `f` on the columns,
//! followed by the `n` coordinate rows. A codeword with coefficients
//! `(u, v_1, ..., v_n)` is `c(u, v) = (u f(x) + v·x)_x`.
//!
//! Minimality is decided exhaustively over pairs of scalar classes of
//! codewords (one representative per line of the code), either by support
//! containment or by the weight identity
//! `Σ_{a≠0} wt(c' - a c) = (q-1) wt(c') - wt(c)`, which holds exactly when
//! `supp(c) ⊆ supp(c')`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::blocking::theorem_hypotheses;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::funcspec::{cardinality_formula, FunctionSpec, ZeroSetMode};
use crate::geometry::{Mode, Space};
use crate::linalg::independent_rows;

/// Work limits for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Ordered class pairs times code length, for the minimality checkers.
    pub pair_compares: u128,
    /// Codewords times code length, for weight enumeration.
    pub enumeration: u128,
    /// Largest `q^n` for which a function is evaluated everywhere.
    pub max_points: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            pair_compares: 10_000_000_000,
            enumeration: 1_000_000_000,
            max_points: 10_000_000,
        }
    }
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// How a code was obtained from a function.
#[derive(Clone, Debug)]
pub struct Construction {
    pub space: Space,
    pub mode: Mode,
    /// Column labels: point encodings.
    pub columns: Vec<usize>,
    /// `#V(f)*` (affine) or `#V_p(f)` (projective).
    pub zero_count: usize,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    length: usize,
    generator: Vec<Vec<Elem>>,
    basis_rows: Vec<usize>,
    construction: Option<Construction>,
}

/// A codeword with the generator coefficients that produced it. For a code
/// built from a function, `coeffs = (u, v_1, ..., v_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codeword {
    pub coeffs: Vec<Elem>,
    pub values: Vec<Elem>,
    pub weight: usize,
    #[serde(skip)]
    pub support: BitSet,
}

impl Codeword {
    fn new(coeffs: Vec<Elem>, values: Vec<Elem>) -> Self {
        let support = BitSet::from_indices(
            values.len(),
            values.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i),
        );
        Codeword {
            coeffs,
            weight: support.count(),
            values,
            support,
        }
    }

    pub fn u(&self) -> Elem {
        self.coeffs[0]
    }

    pub fn v(&self) -> &[Elem] {
        &self.coeffs[1..]
    }
}

impl LinearCode {
    /// A code spanned by arbitrary rows (possibly dependent).
    pub fn from_generator(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let length = rows.first().map_or(0, |r| r.len());
        if length == 0 {
            return Err(Error::InvalidFunction("generator rows must be nonempty".into()));
        }
        if rows.iter().any(|r| r.len() != length) {
            return Err(Error::InvalidFunction("generator rows differ in length".into()));
        }
        if let Some(&bad) = rows.iter().flatten().find(|&&x| !field.contains(x)) {
            return Err(Error::ElementOutOfRange(bad as u64));
        }
        Ok(Self::assemble(field, rows, None))
    }

    fn assemble(field: &Field, generator: Vec<Vec<Elem>>, construction: Option<Construction>) -> Self {
        let length = generator[0].len();
        let basis_rows = independent_rows(field, length, &generator);
        LinearCode {
            field: field.clone(),
            length,
            generator,
            basis_rows,
            construction,
        }
    }

    fn from_function(f: &FunctionSpec, mode: Mode, columns: Vec<usize>, zero_count: usize) -> Self {
        let space = f.space();
        let table = f.to_table();
        let n = space.n();
        let mut rows = vec![Vec::with_capacity(columns.len()); n + 1];
        let mut x = vec![0; n];
        for &c in &columns {
            rows[0].push(table[c]);
            space.coords_into(c, &mut x);
            for i in 0..n {
                rows[i + 1].push(x[i]);
            }
        }
        let code = Self::assemble(
            space.field(),
            rows,
            Some(Construction {
                space: space.clone(),
                mode,
                columns,
                zero_count,
            }),
        );
        if code.is_degenerate() {
            log::warn!(
                "degenerate code: dimension {} below n + 1 = {}",
                code.dim(),
                n + 1
            );
        }
        code
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.basis_rows.len()
    }

    /// The rows as constructed (for `C_f`: `n + 1` rows, possibly dependent).
    pub fn generator(&self) -> &[Vec<Elem>] {
        &self.generator
    }

    /// An independent subset of the generator rows spanning the code.
    pub fn basis(&self) -> impl Iterator<Item = &Vec<Elem>> + '_ {
        self.basis_rows.iter().map(|&i| &self.generator[i])
    }

    pub fn construction(&self) -> Option<&Construction> {
        self.construction.as_ref()
    }

    pub fn mode(&self) -> Option<Mode> {
        self.construction.as_ref().map(|c| c.mode)
    }

    /// True for a function code whose dimension is below `n + 1`.
    pub fn is_degenerate(&self) -> bool {
        self.generator.len() > self.dim() && self.construction.is_some()
    }

    /// Linear combination of the generator rows.
    pub fn combine(&self, coeffs: &[Elem]) -> Result<Codeword> {
        if coeffs.len() != self.generator.len() {
            return Err(Error::WrongArity {
                expected: self.generator.len(),
                got: coeffs.len(),
            });
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| !self.field.contains(c)) {
            return Err(Error::ElementOutOfRange(bad as u64));
        }
        let f = &self.field;
        let mut values = vec![0; self.length];
        for (row, &c) in self.generator.iter().zip(coeffs) {
            if c != 0 {
                for (x, &g) in values.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(c, g));
                }
            }
        }
        Ok(Codeword::new(coeffs.to_vec(), values))
    }

    /// `c(u, v) = (u f(x) + v·x)_x`.
    pub fn codeword(&self, u: Elem, v: &[Elem]) -> Result<Codeword> {
        let mut coeffs = vec![u];
        coeffs.extend_from_slice(v);
        self.combine(&coeffs)
    }

    fn class_count(&self) -> u128 {
        let q = self.q() as u128;
        (q.pow(self.dim() as u32) - 1) / (q - 1)
    }

    /// One codeword per scalar class of nonzero codewords: messages over the
    /// basis whose first nonzero entry is 1, in encoding order.
    pub fn class_representatives(&self) -> Vec<Codeword> {
        let dim = self.dim();
        if dim == 0 {
            return Vec::new();
        }
        let msg_space = Space::new(&self.field, dim).expect("message space fits");
        msg_space
            .projective_points()
            .into_par_iter()
            .map(|m| {
                let msg = msg_space.coords(m);
                let mut coeffs = vec![0; self.generator.len()];
                for (&row, &c) in self.basis_rows.iter().zip(&msg) {
                    coeffs[row] = c;
                }
                self.combine(&coeffs).expect("valid coefficients")
            })
            .collect()
    }

    /// Number of codewords of each weight; index = weight.
    fn weight_counts(&self) -> Vec<u64> {
        let f = &self.field;
        let q = f.q();
        let len = self.length;
        let basis: Vec<&Vec<Elem>> = self.basis().collect();
        let mut counts = vec![0u64; len + 1];
        let Some((top_row, lower)) = basis.split_last() else {
            counts[0] = 1;
            return counts;
        };
        let partial_counts: Vec<Vec<u64>> = (0..q)
            .into_par_iter()
            .map(|t| {
                let mut counts = vec![0u64; len + 1];
                let start: Vec<Elem> = top_row.iter().map(|&g| f.mul(t, g)).collect();
                // partial[i] = start + Σ_{j >= i} digit_j row_j over the lower rows
                let mut partial = vec![start; lower.len() + 1];
                let mut digits = vec![0 as Elem; lower.len()];
                loop {
                    counts[partial[0].iter().filter(|&&x| x != 0).count()] += 1;
                    let Some(i) = digits.iter().position(|&d| d + 1 < q) else {
                        break;
                    };
                    digits[..i].iter_mut().for_each(|d| *d = 0);
                    digits[i] += 1;
                    let mut next = std::mem::take(&mut partial[i]);
                    for (x, &g) in next.iter_mut().zip(lower[i]) {
                        *x = f.add(*x, g);
                    }
                    for p in partial[..i].iter_mut() {
                        p.clone_from(&next);
                    }
                    partial[i] = next;
                }
                counts
            })
            .collect();
        for pc in partial_counts {
            for (c, p) in counts.iter_mut().zip(pc) {
                *c += p;
            }
        }
        counts
    }

    /// Weight distribution over all `q^dim` codewords, the zero word included.
    pub fn weight_distribution(&self, budgets: &Budgets) -> Result<BTreeMap<usize, u64>> {
        let words = (self.q() as u128).pow(self.dim() as u32);
        check_budget(words * self.length as u128, budgets.enumeration)?;
        Ok(self
            .weight_counts()
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .collect())
    }

    /// The code with columns reordered: new column `t` is old column `perm[t]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<LinearCode> {
        let mut seen = vec![false; self.length];
        if perm.len() != self.length || perm.iter().any(|&p| p >= self.length || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidFunction("not a permutation of the columns".into()));
        }
        let generator = self
            .generator
            .iter()
            .map(|row| perm.iter().map(|&p| row[p]).collect())
            .collect();
        let construction = self.construction.as_ref().map(|c| Construction {
            columns: perm.iter().map(|&p| c.columns[p]).collect(),
            ..c.clone()
        });
        Ok(LinearCode {
            field: self.field.clone(),
            length: self.length,
            generator,
            basis_rows: self.basis_rows.clone(),
            construction,
        })
    }
}

/// `C_f`: columns are all nonzero vectors of F_q^n.
pub fn build_affine_code(f: &FunctionSpec) -> Result<LinearCode> {
    let zero_count = f.zero_set(ZeroSetMode::AffineStar)?.count();
    Ok(LinearCode::from_function(
        f,
        Mode::Affine,
        f.space().affine_points(),
        zero_count,
    ))
}

/// `C̃_f`: columns are the canonical projective representatives. Requires
/// `f(λx) = λ^d f(x)` for some `d`.
pub fn build_projective_code(f: &FunctionSpec) -> Result<LinearCode> {
    let zero_count = f.zero_set(ZeroSetMode::Projective)?.count();
    Ok(LinearCode::from_function(
        f,
        Mode::Projective,
        f.space().projective_points(),
        zero_count,
    ))
}

pub fn build_code(f: &FunctionSpec, mode: Mode) -> Result<LinearCode> {
    match mode {
        Mode::Affine => build_affine_code(f),
        Mode::Projective => build_projective_code(f),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Hdz,
    Theorem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimalityWitness {
    /// `supp(covered) ⊆ supp(covering)`, the two not proportional.
    Cover { covering: Codeword, covered: Codeword },
    /// `Σ_{a≠0} wt(c' - a c) = (q-1) wt(c') - wt(c)` for independent `c, c'`.
    Hdz {
        c: Codeword,
        c_prime: Codeword,
        sum: i64,
        rhs: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub method: Method,
    pub witness: Option<MinimalityWitness>,
}

/// Checks every ordered pair of distinct scalar classes for support
/// containment (equal supports included).
pub fn is_minimal_bruteforce(code: &LinearCode, budgets: &Budgets) -> Result<MinimalityReport> {
    let n = code.class_count();
    check_budget(n * n.saturating_sub(1) * code.length() as u128, budgets.pair_compares)?;
    let words = code.class_representatives();
    let hit = (0..words.len()).into_par_iter().find_map_first(|i| {
        let c = &words[i];
        (0..words.len())
            .find(|&j| j != i && words[j].weight <= c.weight && words[j].support.is_subset(&c.support))
            .map(|j| (i, j))
    });
    Ok(MinimalityReport {
        minimal: hit.is_none(),
        method: Method::Brute,
        witness: hit.map(|(i, j)| MinimalityWitness::Cover {
            covering: words[i].clone(),
            covered: words[j].clone(),
        }),
    })
}

/// `(Σ_{a≠0} wt(c' - a c), (q-1) wt(c') - wt(c))`.
pub fn hdz_sides(field: &Field, c: &[Elem], c_prime: &[Elem]) -> (i64, i64) {
    let wt = |v: &[Elem]| v.iter().filter(|&&x| x != 0).count() as i64;
    let sum = field
        .nonzero()
        .map(|a| {
            c.iter()
                .zip(c_prime)
                .filter(|&(&x, &y)| field.sub(y, field.mul(a, x)) != 0)
                .count() as i64
        })
        .sum();
    (sum, (field.q() as i64 - 1) * wt(c_prime) - wt(c))
}

/// Evaluates the weight identity on every ordered pair of distinct scalar
/// classes; the code is minimal iff equality never occurs.
pub fn is_minimal_hdz(code: &LinearCode, budgets: &Budgets) -> Result<MinimalityReport> {
    let n = code.class_count();
    let q = code.q() as u128;
    check_budget(
        n * n.saturating_sub(1) * (q - 1) * code.length() as u128,
        budgets.pair_compares,
    )?;
    let words = code.class_representatives();
    let field = code.field();
    // c' - a c vanishes exactly where c' = a c, so tabulate the multiples once
    let multiples: Vec<Vec<Vec<Elem>>> = words
        .par_iter()
        .map(|w| {
            field
                .nonzero()
                .map(|a| w.values.iter().map(|&x| field.mul(a, x)).collect())
                .collect()
        })
        .collect();
    let qm1 = q as i64 - 1;
    let hit = (0..words.len()).into_par_iter().find_map_first(|i| {
        (0..words.len()).filter(|&j| j != i).find_map(|j| {
            let cp = &words[j].values;
            let sum: i64 = multiples[i]
                .iter()
                .map(|ac| cp.iter().zip(ac).filter(|(y, x)| y != x).count() as i64)
                .sum();
            let rhs = qm1 * words[j].weight as i64 - words[i].weight as i64;
            (sum == rhs).then_some((i, j, sum, rhs))
        })
    });
    Ok(MinimalityReport {
        minimal: hit.is_none(),
        method: Method::Hdz,
        witness: hit.map(|(i, j, sum, rhs)| MinimalityWitness::Hdz {
            c: words[i].clone(),
            c_prime: words[j].clone(),
            sum,
            rhs,
        }),
    })
}

/// One representative per scalar class of minimal codewords.
pub fn minimal_codewords(code: &LinearCode, budgets: &Budgets) -> Result<Vec<Codeword>> {
    let n = code.class_count();
    check_budget(n * n.saturating_sub(1) * code.length() as u128, budgets.pair_compares)?;
    let words = code.class_representatives();
    let keep: Vec<bool> = (0..words.len())
        .into_par_iter()
        .map(|j| {
            let c = &words[j];
            !(0..words.len())
                .any(|i| i != j && words[i].weight <= c.weight && words[i].support.is_subset(&c.support))
        })
        .collect();
    Ok(words
        .into_iter()
        .zip(keep)
        .filter_map(|(w, k)| k.then_some(w))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbReport {
    pub w_min: usize,
    pub w_max: usize,
    /// `w_max / w_min < q / (q - 1)`, compared as `w_max (q-1) < w_min q`.
    pub satisfies_ab: bool,
    /// Zero count at or above the threshold that forces the ratio up, with
    /// `c(1,0)` nonzero (the argument compares its weight to `wt(c(0,v))`);
    /// `None` for codes not built from a function.
    pub zero_count_threshold_hit: Option<bool>,
}

pub fn ab_satisfied(q: u32, w_min: usize, w_max: usize) -> bool {
    (w_max as u128) * (q as u128 - 1) < (w_min as u128) * q as u128
}

/// `2q^(n-1) - q^(n-2) - 1`, divided by `q - 1` in projective mode (the
/// division is exact). `None` for `n < 2` or on overflow.
pub fn ab_zero_threshold(q: u64, n: u32, mode: Mode) -> Option<u128> {
    if n < 2 || q < 2 {
        return None;
    }
    let q = q as u128;
    let t = 2u128
        .checked_mul(q.checked_pow(n - 1)?)?
        .checked_sub(q.checked_pow(n - 2)?)?
        .checked_sub(1)?;
    Some(match mode {
        Mode::Affine => t,
        Mode::Projective => t / (q - 1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RThreshold {
    /// `2 + log_{1-1/q}((q - √q)/(q - 1))`.
    pub value: f64,
    /// Least integer `r >= value`.
    pub min_r: u32,
}

pub fn ab_r_threshold(q: u64) -> RThreshold {
    let qf = q as f64;
    let value = 2.0 + ((qf - qf.sqrt()) / (qf - 1.0)).ln() / (1.0 - 1.0 / qf).ln();
    let nearest = value.round();
    let min_r = if (value - nearest).abs() < 1e-9 {
        nearest
    } else {
        value.ceil()
    };
    RThreshold {
        value,
        min_r: min_r as u32,
    }
}

pub fn ab_check(code: &LinearCode, budgets: &Budgets) -> Result<AbReport> {
    let dist = code.weight_distribution(budgets)?;
    let mut nonzero = dist.keys().copied().filter(|&w| w > 0);
    let w_min = nonzero.next().ok_or(Error::EmptyCode)?;
    let w_max = nonzero.next_back().unwrap_or(w_min);
    let zero_count_threshold_hit = code.construction().map(|c| {
        ab_zero_threshold(code.q() as u64, c.space.n() as u32, c.mode)
            .is_some_and(|t| c.zero_count as u128 >= t && c.zero_count < code.length())
    });
    Ok(AbReport {
        w_min,
        w_max,
        satisfies_ab: ab_satisfied(code.q(), w_min, w_max),
        zero_count_threshold_hit,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Brute,
    Weights,
    Threshold,
    Theorem,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub q: u32,
    pub r: usize,
    pub k: usize,
    pub n: usize,
    pub mode: Mode,
    pub length: u128,
    pub dim: usize,
    /// `#V(f_{r,k})` from the closed form, origin included.
    pub zero_count: u128,
    /// `#V(f)*` (affine) or `#V_p(f)` (projective), the count code weights use.
    pub code_zero_count: u128,
    /// Brute-force recount agrees with the closed form; `None` when skipped.
    pub zero_count_checked: Option<bool>,
    pub ab_threshold: u128,
    pub ab_threshold_hit: bool,
    /// `r >= 2` and `k >= 2`, where the family is known to satisfy the
    /// minimality theorem.
    pub theorem_applies: bool,
    /// The theorem's hypotheses checked exhaustively; `None` when skipped.
    pub hypotheses_verified: Option<bool>,
    pub minimal_verified: Option<bool>,
    pub minimality_source: Source,
    pub ab_satisfied: Option<bool>,
    pub ab_source: Source,
    pub w_min: Option<usize>,
    pub w_max: Option<usize>,
}

fn survey_row(field: &Field, r: usize, k: usize, mode: Mode, budgets: &Budgets) -> Result<SurveyRow> {
    let q = field.q();
    let qq = q as u128;
    let n = r * k;
    let total = qq.checked_pow(n as u32);
    let formula = cardinality_formula(q as u64, r as u32, k as u32)
        .ok_or_else(|| Error::InvalidFunction("zero count overflows".into()))?;
    let total = total.ok_or_else(|| Error::InvalidFunction("q^n overflows".into()))?;
    let (length, code_zero_count) = match mode {
        Mode::Affine => (total - 1, formula - 1),
        Mode::Projective => ((total - 1) / (qq - 1), (formula - 1) / (qq - 1)),
    };
    let ab_threshold = ab_zero_threshold(q as u64, n as u32, mode).unwrap_or(0);
    let ab_threshold_hit = n >= 2 && code_zero_count >= ab_threshold && code_zero_count < length;
    let theorem_applies = r >= 2 && k >= 2;

    let mut row = SurveyRow {
        q,
        r,
        k,
        n,
        mode,
        length,
        dim: if r >= 2 { n + 1 } else { n },
        zero_count: formula,
        code_zero_count,
        zero_count_checked: None,
        ab_threshold,
        ab_threshold_hit,
        theorem_applies,
        hypotheses_verified: None,
        minimal_verified: None,
        minimality_source: if theorem_applies { Source::Theorem } else { Source::None },
        ab_satisfied: ab_threshold_hit.then_some(false),
        ab_source: if ab_threshold_hit { Source::Threshold } else { Source::None },
        w_min: None,
        w_max: None,
    };

    if total > budgets.max_points || n < 2 {
        return Ok(row);
    }
    let f = FunctionSpec::monomial_blocks(field, r, k)?.materialize();
    let brute_zero = f.zero_set(ZeroSetMode::AffineWithOrigin)?.count() as u128;
    row.zero_count_checked = Some(brute_zero == formula);

    let code = build_code(&f, mode)?;
    row.dim = code.dim();

    if total * total <= budgets.enumeration {
        row.hypotheses_verified = Some(theorem_hypotheses(&f, mode)?.theorem_applies);
    }
    match is_minimal_bruteforce(&code, budgets) {
        Ok(rep) => {
            row.minimal_verified = Some(rep.minimal);
            row.minimality_source = Source::Brute;
        }
        Err(Error::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    match ab_check(&code, budgets) {
        Ok(ab) => {
            row.ab_satisfied = Some(ab.satisfies_ab);
            row.ab_source = Source::Weights;
            row.w_min = Some(ab.w_min);
            row.w_max = Some(ab.w_max);
        }
        Err(Error::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    Ok(row)
}

/// One row per `r` for the family `f_{r,k}` over `field`.
pub fn survey(
    field: &Field,
    r_range: RangeInclusive<usize>,
    k: usize,
    mode: Mode,
    budgets: &Budgets,
) -> Result<Vec<SurveyRow>> {
    r_range
        .map(|r| survey_row(field, r, k, mode, budgets))
        .collect()
}
