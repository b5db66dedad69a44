//! Blocking-set checks over subspaces through the origin.
//!
//! Sets are membership bitmaps over point encodings. In the projective
//! flavor a set is given by projective representatives; its projective
//! subspaces of dimension `t` are the vector subspaces of dimension `t + 1`,
//! so every projective check runs on the cone over the set.
//!
//! All loops over subspaces run in parallel but report the witness that comes
//! first in canonical subspace order.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::funcspec::{FunctionSpec, ZeroSetMode};
use crate::geometry::{Mode, PointSet, Space, Subspace};
use crate::linalg::Echelon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Vectorial,
    Projective,
}

impl Flavor {
    fn dim_offset(self) -> usize {
        match self {
            Flavor::Vectorial => 0,
            Flavor::Projective => 1,
        }
    }
}

/// Outcome of a single check, with a witness whenever it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: W) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }

    fn from_witness(w: Option<W>) -> Self {
        match w {
            Some(w) => Self::fail(w),
            None => Self::pass(),
        }
    }
}

/// `subspace ∩ B` lies inside `other`, a second subspace of the same dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuttingFailure {
    pub subspace: Subspace,
    pub other: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "subspace", rename_all = "snake_case")]
pub enum KsFailure {
    /// A subspace the set does not meet.
    Missed(Subspace),
    /// A punctured subspace of the forbidden dimension inside the set.
    Contains(Subspace),
}

/// Turns the user-facing set into the cone the checks run on.
fn prepare(space: &Space, set: &PointSet, flavor: Flavor) -> Result<PointSet> {
    if set.contains(0) {
        return Err(Error::OriginInSet);
    }
    Ok(match flavor {
        Flavor::Vectorial => set.clone(),
        Flavor::Projective => space.cone(set),
    })
}

/// Subspaces of vector dimension `n - k`, the ones a k-blocking set must meet.
fn blocked_subspaces(space: &Space, k: usize) -> Result<Vec<Subspace>> {
    let n = space.n();
    if k == 0 || k >= n {
        return Err(Error::DimensionOutOfRange { d: k, n });
    }
    space.subspaces(n - k)
}

fn first_missed(space: &Space, cone: &PointSet, subs: &[Subspace]) -> Option<Subspace> {
    subs.par_iter()
        .find_first(|s| !s.point_indices(space).iter().any(|&i| cone.contains(i)))
        .cloned()
}

/// Vectorial k-blocking: `B` meets every `(n-k)`-dimensional subspace.
pub fn is_vectorial_blocking(space: &Space, set: &PointSet, k: usize) -> Result<Verdict<Subspace>> {
    is_blocking(space, set, k, Flavor::Vectorial)
}

pub fn is_blocking(space: &Space, set: &PointSet, k: usize, flavor: Flavor) -> Result<Verdict<Subspace>> {
    let cone = prepare(space, set, flavor)?;
    let subs = blocked_subspaces(space, k)?;
    Ok(Verdict::from_witness(first_missed(space, &cone, &subs)))
}

fn cutting_failure(space: &Space, cone: &PointSet, s: &Subspace) -> Option<CuttingFailure> {
    let mut e = Echelon::new(space.field(), space.n());
    let mut x = vec![0; space.n()];
    for i in s.point_indices(space) {
        if cone.contains(i) {
            space.coords_into(i, &mut x);
            e.insert(&x);
            if e.rank() == s.dim() {
                return None;
            }
        }
    }
    let other = s.other_containing(space, e.rows())?;
    Some(CuttingFailure {
        subspace: s.clone(),
        other,
    })
}

/// Cutting: for every `(n-k)`-dimensional subspace `S`, `B ∩ S` spans `S`.
pub fn is_cutting(space: &Space, set: &PointSet, k: usize, flavor: Flavor) -> Result<Verdict<CuttingFailure>> {
    let cone = prepare(space, set, flavor)?;
    let subs = blocked_subspaces(space, k)?;
    let w = subs.par_iter().find_map_first(|s| cutting_failure(space, &cone, s));
    Ok(Verdict::from_witness(w))
}

/// Cutting checked literally: no `B ∩ S` lies in a second subspace `S'`.
/// Quadratic in the number of subspaces; kept as a cross-check.
pub fn is_cutting_pairwise(
    space: &Space,
    set: &PointSet,
    k: usize,
    flavor: Flavor,
) -> Result<Verdict<CuttingFailure>> {
    let cone = prepare(space, set, flavor)?;
    let subs = blocked_subspaces(space, k)?;
    let members: Vec<PointSet> = subs.par_iter().map(|s| s.points(space, true)).collect();
    let w = (0..subs.len()).into_par_iter().find_map_first(|i| {
        let meet = members[i].intersection(&cone);
        (0..subs.len())
            .find(|&j| j != i && meet.is_subset(&members[j]))
            .map(|j| CuttingFailure {
                subspace: subs[i].clone(),
                other: subs[j].clone(),
            })
    });
    Ok(Verdict::from_witness(w))
}

/// `(k, s)`-blocking: k-blocking and containing no punctured subspace of
/// dimension `s` (vector dimension `s`, or `s + 1` projectively).
pub fn is_ks_blocking(
    space: &Space,
    set: &PointSet,
    k: usize,
    s: usize,
    flavor: Flavor,
) -> Result<Verdict<KsFailure>> {
    let n = space.n();
    let vdim = s + flavor.dim_offset();
    if vdim == 0 || vdim > n || k >= n {
        return Err(Error::DimensionOutOfRange { d: s, n });
    }
    let blocking = is_blocking(space, set, k, flavor)?;
    if let Some(w) = blocking.witness {
        return Ok(Verdict::fail(KsFailure::Missed(w)));
    }
    let cone = prepare(space, set, flavor)?;
    let subs = space.subspaces_unchecked(vdim);
    let w = subs
        .par_iter()
        .find_first(|sub| sub.point_indices(space).iter().all(|&i| i == 0 || cone.contains(i)))
        .cloned();
    Ok(Verdict::from_witness(w.map(KsFailure::Contains)))
}

/// Dimension of the set: vector span, or projective dimension (span - 1).
pub fn set_dimension(space: &Space, set: &PointSet, flavor: Flavor) -> usize {
    space.span_dim(set.iter()).saturating_sub(flavor.dim_offset())
}

/// Nonzero `f` values as `(encoding, value)` pairs.
fn support_of(f: &FunctionSpec) -> Vec<(usize, Elem)> {
    f.to_table()
        .into_iter()
        .enumerate()
        .filter(|&(_, v)| v != 0)
        .collect()
}

/// Condition (b): every `v != 0` has an `x` with `f(x) != 0` and
/// `f(x) + v·x = 0`. The witness on failure is the offending `v`.
pub fn condition_b(f: &FunctionSpec) -> Verdict<Vec<Elem>> {
    condition_b_over(f, |_| true)
}

/// Condition (b) with `x` restricted to canonical projective
/// representatives, the columns of `C̃_f`. Unless `f(λx) = λ f(x)`, the zeros
/// of `f(x) + v·x` are not closed under scaling, so this is stronger than
/// [`condition_b`] and is the form the projective minimality argument uses.
pub fn condition_b_projective(f: &FunctionSpec) -> Verdict<Vec<Elem>> {
    let space = f.space();
    condition_b_over(f, |i| space.is_normalized(i))
}

fn condition_b_over(f: &FunctionSpec, keep: impl Fn(usize) -> bool) -> Verdict<Vec<Elem>> {
    let space = f.space();
    let field = space.field();
    let nz: Vec<(Vec<Elem>, Elem)> = support_of(f)
        .into_iter()
        .filter(|&(i, _)| keep(i))
        .map(|(i, val)| (space.coords(i), val))
        .collect();
    let w = (1..space.size()).into_par_iter().find_first(|&vi| {
        let v = space.coords(vi);
        !nz.iter()
            .any(|(x, fx)| field.add(*fx, space.dot(&v, x)) == 0)
    });
    Verdict::from_witness(w.map(|vi| space.coords(vi)))
}

/// Condition (c): every `v != 0` has an `x` with `v·x != 0` and `f(x) != 0`,
/// i.e. `H(v) ∪ V(f)` is not the whole space.
pub fn condition_c(f: &FunctionSpec) -> Verdict<Vec<Elem>> {
    let space = f.space();
    let nz: Vec<Vec<Elem>> = support_of(f)
        .into_iter()
        .map(|(i, _)| space.coords(i))
        .collect();
    let w = (1..space.size())
        .into_par_iter()
        .find_first(|&vi| {
            let v = space.coords(vi);
            !nz.iter().any(|x| space.dot(&v, x) != 0)
        });
    Verdict::from_witness(w.map(|vi| space.coords(vi)))
}

/// Literal form of the hyperplane-pair criterion: some `x != 0` satisfies
/// `u f(x) + v·x = 0` and `u' f(x) + v'·x != 0` for every `u, u'`.
pub fn lemma_blocking_oracle(f: &FunctionSpec, v: &[Elem], v2: &[Elem]) -> Result<bool> {
    let space = f.space();
    let field = space.field();
    let vi = space.index(v)?;
    let v2i = space.index(v2)?;
    if vi == 0 || v2i == 0 {
        return Err(Error::ZeroNormal);
    }
    if space.normalize(vi).map(|p| p.0) == space.normalize(v2i).map(|p| p.0) {
        return Err(Error::SameHyperplane);
    }
    let table = f.to_table();
    let mut x = vec![0; space.n()];
    Ok((1..space.size()).any(|xi| {
        space.coords_into(xi, &mut x);
        let (fx, dv, dv2) = (table[xi], space.dot(v, &x), space.dot(v2, &x));
        field.elements().all(|u| {
            field.add(field.mul(u, fx), dv) == 0
                && field.elements().all(|u2| field.add(field.mul(u2, fx), dv2) != 0)
        })
    }))
}

/// Hypotheses of the minimality theorems for `C_f` (affine) or `C̃_f`
/// (projective).
#[derive(Clone, Debug, Serialize)]
pub struct HypothesesReport {
    pub mode: Mode,
    pub n: usize,
    /// Dimension of `V(f)*` (vector span) or of `V_p(f)` (projective).
    pub dimension: usize,
    pub dimension_ok: bool,
    pub blocking: Verdict<Subspace>,
    pub cutting: Verdict<CuttingFailure>,
    /// `(1, n-1)` vectorial or `(1, n-2)` projective.
    pub ks: Verdict<KsFailure>,
    pub ks_s: usize,
    /// Over all of F_q^n (affine) or over the projective representatives.
    pub condition_b: Verdict<Vec<Elem>>,
    pub condition_c: Verdict<Vec<Elem>>,
    /// All of the above hold, so the code is minimal.
    pub theorem_applies: bool,
}

pub fn theorem_hypotheses(f: &FunctionSpec, mode: Mode) -> Result<HypothesesReport> {
    let space = f.space();
    let n = space.n();
    if n < 2 {
        return Err(Error::DimensionOutOfRange { d: n, n });
    }
    let f = f.materialize();
    let (set, flavor, want_dim, s) = match mode {
        Mode::Affine => (f.zero_set(ZeroSetMode::AffineStar)?, Flavor::Vectorial, n, n - 1),
        Mode::Projective => (f.zero_set(ZeroSetMode::Projective)?, Flavor::Projective, n - 1, n - 2),
    };
    let dimension = set_dimension(space, &set, flavor);
    let blocking = is_blocking(space, &set, 1, flavor)?;
    let cutting = is_cutting(space, &set, 1, flavor)?;
    let ks = is_ks_blocking(space, &set, 1, s, flavor)?;
    let condition_b = match mode {
        Mode::Affine => condition_b(&f),
        Mode::Projective => condition_b_projective(&f),
    };
    let condition_c = condition_c(&f);
    let theorem_applies = dimension == want_dim
        && blocking.holds
        && cutting.holds
        && ks.holds
        && condition_b.holds;
    Ok(HypothesesReport {
        mode,
        n,
        dimension,
        dimension_ok: dimension == want_dim,
        blocking,
        cutting,
        ks,
        ks_s: s,
        condition_b,
        condition_c,
        theorem_applies,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockingWitness {
    MissedSubspace { subspace: Subspace },
    ForbiddenSubspace { subspace: Subspace },
    CuttingFailure { subspace: Subspace, other: Subspace },
}

/// Combined verdict for a point set, as emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockingReport {
    pub flavor: Flavor,
    pub k: usize,
    pub s: Option<usize>,
    #[serde(rename = "blocking")]
    pub is_blocking: bool,
    #[serde(rename = "cutting")]
    pub is_cutting: Option<bool>,
    /// `(k, s)` verdict, when `s` was given.
    #[serde(rename = "ks_blocking")]
    pub is_ks_blocking: Option<bool>,
    #[serde(rename = "dimension")]
    pub set_dimension: usize,
    pub witnesses: Vec<BlockingWitness>,
}

impl BlockingReport {
    pub fn missed_subspace(&self) -> Option<&Subspace> {
        self.witnesses.iter().find_map(|w| match w {
            BlockingWitness::MissedSubspace { subspace } => Some(subspace),
            _ => None,
        })
    }

    pub fn contains_forbidden_subspace(&self) -> Option<&Subspace> {
        self.witnesses.iter().find_map(|w| match w {
            BlockingWitness::ForbiddenSubspace { subspace } => Some(subspace),
            _ => None,
        })
    }

    pub fn failing_subspace_pair(&self) -> Option<(&Subspace, &Subspace)> {
        self.witnesses.iter().find_map(|w| match w {
            BlockingWitness::CuttingFailure { subspace, other } => Some((subspace, other)),
            _ => None,
        })
    }
}

pub fn blocking_report(
    space: &Space,
    set: &PointSet,
    flavor: Flavor,
    k: usize,
    s: Option<usize>,
    check_cutting: bool,
) -> Result<BlockingReport> {
    let mut witnesses = Vec::new();
    let blocking = is_blocking(space, set, k, flavor)?;
    if let Some(w) = &blocking.witness {
        witnesses.push(BlockingWitness::MissedSubspace { subspace: w.clone() });
    }
    let is_cutting = if check_cutting {
        let c = is_cutting(space, set, k, flavor)?;
        if let Some(w) = c.witness {
            witnesses.push(BlockingWitness::CuttingFailure {
                subspace: w.subspace,
                other: w.other,
            });
        }
        Some(c.holds)
    } else {
        None
    };
    let is_ks_blocking = match s {
        Some(s) => {
            let v = is_ks_blocking(space, set, k, s, flavor)?;
            if let Some(KsFailure::Contains(sub)) = v.witness {
                witnesses.push(BlockingWitness::ForbiddenSubspace { subspace: sub });
            }
            Some(v.holds)
        }
        None => None,
    };
    Ok(BlockingReport {
        flavor,
        k,
        s,
        is_blocking: blocking.holds,
        is_cutting,
        is_ks_blocking,
        set_dimension: set_dimension(space, set, flavor),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn space(q: u64, n: usize) -> Space {
        Space::new(&Field::with_order(q, None).unwrap(), n).unwrap()
    }

    fn frk(q: u64, r: usize, k: usize) -> FunctionSpec {
        FunctionSpec::monomial_blocks(&Field::with_order(q, None).unwrap(), r, k).unwrap()
    }

    fn all_nonzero(s: &Space) -> PointSet {
        let mut b = PointSet::full(s.size());
        b.remove(0);
        b
    }

    #[test]
    fn vectorial_blocking_examples() {
        let s = space(2, 3);
        assert!(is_vectorial_blocking(&s, &all_nonzero(&s), 1).unwrap().holds);
        let h = s.hyperplane(&[1, 0, 0], false).unwrap();
        assert!(is_vectorial_blocking(&s, &h, 1).unwrap().holds);

        let s = space(2, 2);
        let b = PointSet::from_indices(4, [s.index(&[1, 0]).unwrap()]);
        let v = is_vectorial_blocking(&s, &b, 1).unwrap();
        assert!(!v.holds);
        // <(1,1)> precedes <e_2> in canonical order; both are missed
        assert_eq!(v.witness.unwrap().rows(), &[vec![1, 1]]);
        let e2 = Subspace::spanned_by(s.field(), 2, &[vec![0, 1]]);
        assert!(e2.points(&s, false).intersection(&b).is_empty());

        let mut with_origin = b.clone();
        with_origin.insert(0);
        assert_eq!(is_vectorial_blocking(&s, &with_origin, 1), Err(Error::OriginInSet));
        assert!(is_vectorial_blocking(&s, &b, 2).is_err());
    }

    #[test]
    fn hyperplanes_in_three_space_meet() {
        // oracle: every pair of planes through the origin in F_2^3 shares a nonzero point
        let s = space(2, 3);
        let planes: Vec<PointSet> = (1..8)
            .map(|v| s.hyperplane(&s.coords(v), false).unwrap())
            .collect();
        for a in &planes {
            for b in &planes {
                assert!(!a.intersection(b).is_empty());
            }
        }
    }

    #[test]
    fn cutting_examples() {
        let s = space(2, 3);
        assert!(is_cutting(&s, &all_nonzero(&s), 1, Flavor::Vectorial).unwrap().holds);
        let h = s.hyperplane(&[1, 0, 0], false).unwrap();
        let v = is_cutting(&s, &h, 1, Flavor::Vectorial).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        // re-verify: meet lies in `other`, other != subspace
        assert_ne!(w.subspace, w.other);
        let meet = w.subspace.points(&s, false).intersection(&h);
        assert!(meet.is_subset(&w.other.points(&s, false)));
        let pw = is_cutting_pairwise(&s, &h, 1, Flavor::Vectorial).unwrap();
        assert!(!pw.holds);

        let f = frk(2, 2, 2);
        let b = f.zero_set(ZeroSetMode::AffineStar).unwrap();
        assert!(is_cutting(f.space(), &b, 1, Flavor::Vectorial).unwrap().holds);
        assert!(is_cutting_pairwise(f.space(), &b, 1, Flavor::Vectorial).unwrap().holds);
    }

    #[test]
    fn ks_examples() {
        let f = frk(2, 2, 2);
        let b = f.zero_set(ZeroSetMode::AffineStar).unwrap();
        assert!(is_ks_blocking(f.space(), &b, 1, 3, Flavor::Vectorial).unwrap().holds);

        let s = space(2, 3);
        let v = is_ks_blocking(&s, &all_nonzero(&s), 1, 2, Flavor::Vectorial).unwrap();
        match v.witness {
            Some(KsFailure::Contains(sub)) => assert_eq!(sub.dim(), 2),
            other => panic!("unexpected {other:?}"),
        }
        let h = s.hyperplane(&[0, 1, 1], false).unwrap();
        let v = is_ks_blocking(&s, &h, 1, 2, Flavor::Vectorial).unwrap();
        match v.witness {
            Some(KsFailure::Contains(sub)) => assert_eq!(sub.points(&s, false), h),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn conditions_examples() {
        let s = space(3, 3);
        let zero = FunctionSpec::constant(&s, 0).unwrap();
        let one = FunctionSpec::constant(&s, 1).unwrap();
        assert!(!condition_b(&zero).holds);
        assert_eq!(condition_b(&zero).witness, Some(vec![1, 0, 0]));
        assert!(!condition_c(&zero).holds);
        assert!(condition_c(&one).holds);
        for (q, r, k) in [(2, 2, 2), (3, 2, 2), (2, 3, 2), (4, 2, 2)] {
            let f = frk(q, r, k);
            assert!(condition_b(&f).holds, "q={q}");
            assert!(condition_c(&f).holds);
        }
    }

    #[test]
    fn condition_c_exhaustive_f22() {
        // independent loop: for each v != 0 look for x with v·x != 0, f(x) != 0
        let f = frk(2, 2, 2);
        let s = f.space();
        let ok = (1..16).all(|v| {
            (1..16).any(|x| s.dot(&s.coords(v), &s.coords(x)) != 0 && f.eval_index(x) != 0)
        });
        assert!(ok);
        assert!(condition_c(&f).holds);
    }

    #[test]
    fn hyperplane_pair_oracle_examples() {
        let f = frk(2, 2, 2);
        assert_eq!(lemma_blocking_oracle(&f, &[1, 0, 0, 0], &[0, 1, 0, 0]), Ok(true));
        let g = frk(3, 2, 2);
        assert_eq!(
            lemma_blocking_oracle(&g, &[1, 2, 0, 0], &[2, 1, 0, 0]),
            Err(Error::SameHyperplane)
        );
        assert_eq!(lemma_blocking_oracle(&g, &[0; 4], &[2, 1, 0, 0]), Err(Error::ZeroNormal));

        // V(f)* = {e1, e2} in F_2^3, both inside H(e3); then V* ∩ H(e1) = {e2} ⊆ H(e3)
        let s = space(2, 3);
        let mut table = vec![1; 8];
        table[s.index(&[1, 0, 0]).unwrap()] = 0;
        table[s.index(&[0, 1, 0]).unwrap()] = 0;
        let f = FunctionSpec::table(&s, table).unwrap();
        assert_eq!(lemma_blocking_oracle(&f, &[1, 0, 0], &[0, 0, 1]), Ok(false));
        assert_eq!(lemma_blocking_oracle(&f, &[0, 0, 1], &[1, 0, 0]), Ok(true));
    }

    #[test]
    fn hypotheses_examples() {
        let r = theorem_hypotheses(&frk(2, 2, 2), Mode::Affine).unwrap();
        assert!(r.theorem_applies && r.dimension_ok && r.condition_c.holds);

        let s = space(2, 4);
        let zero = FunctionSpec::constant(&s, 0).unwrap();
        let r = theorem_hypotheses(&zero, Mode::Affine).unwrap();
        assert!(r.blocking.holds && r.cutting.holds);
        assert!(!r.ks.holds && !r.condition_b.holds && !r.theorem_applies);

        let r = theorem_hypotheses(&frk(3, 2, 2), Mode::Projective).unwrap();
        assert!(r.theorem_applies, "{r:?}");
        assert_eq!(r.dimension, 3);
    }

    #[test]
    fn projective_condition_b_uses_representatives() {
        // indicator of x1^2 + x2 x3 + x4^2 = 0 over GF(3): f(λx) = f(x)
        let s = space(3, 4);
        let p = crate::funcspec::Polynomial::new(
            s.field(),
            4,
            &[(1, vec![2, 0, 0, 0]), (1, vec![0, 1, 1, 0]), (1, vec![0, 0, 0, 2])],
        )
        .unwrap();
        let f = FunctionSpec::poly_zero(&s, p).unwrap();
        assert!(condition_b(&f).holds);
        // representatives have x1 in {0, 1}, so f(x) + x1 = 1 + x1 never vanishes on V(P)
        let b = condition_b_projective(&f);
        assert_eq!(b.witness, Some(vec![1, 0, 0, 0]));
        assert!(theorem_hypotheses(&f, Mode::Affine).unwrap().theorem_applies);
        assert!(!theorem_hypotheses(&f, Mode::Projective).unwrap().theorem_applies);
        // for f_{r,k} both forms hold
        assert!(condition_b_projective(&frk(3, 2, 2)).holds);
    }

    #[test]
    fn projective_flavor_agrees_with_cone() {
        let f = frk(3, 2, 2);
        let s = f.space();
        let vp = f.zero_set(ZeroSetMode::Projective).unwrap();
        let vstar = f.zero_set(ZeroSetMode::AffineStar).unwrap();
        assert_eq!(s.cone(&vp), vstar);
        let a = blocking_report(s, &vp, Flavor::Projective, 1, Some(2), true).unwrap();
        let b = blocking_report(s, &vstar, Flavor::Vectorial, 1, Some(3), true).unwrap();
        assert_eq!((a.is_blocking, a.is_cutting, a.is_ks_blocking), (b.is_blocking, b.is_cutting, b.is_ks_blocking));
        assert_eq!(a.set_dimension + 1, b.set_dimension);
    }

    #[test]
    fn general_k() {
        // k = 2 in F_2^4: blocking means meeting every 2-dimensional subspace
        let s = space(2, 4);
        let full = all_nonzero(&s);
        assert!(is_cutting(&s, &full, 2, Flavor::Vectorial).unwrap().holds);
        let h = s.hyperplane(&[1, 0, 0, 0], false).unwrap();
        let v = is_vectorial_blocking(&s, &h, 2).unwrap();
        assert!(v.holds); // a plane and a hyperplane in 4-space meet
        let pw = is_cutting_pairwise(&s, &h, 2, Flavor::Vectorial).unwrap();
        let sp = is_cutting(&s, &h, 2, Flavor::Vectorial).unwrap();
        assert_eq!(pw.holds, sp.holds);
    }
}
