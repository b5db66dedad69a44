//! Plain-text file formats.
//!
//! Every format starts with a header line naming the field order `q`, and
//! for extension fields optionally the modulus coefficients (constant term
//! first). Blank lines and lines starting with `#` are ignored. Entries are
//! integer element codes separated by whitespace.
//!
//! * point set: `q n [modulus]`, then one point `x_1 … x_n` per line;
//! * function table: `q n [modulus]`, then `x_1 … x_n value`; unlisted
//!   points map to 0;
//! * polynomial: `q n [modulus]`, then `coef e_1 … e_n` per monomial;
//! * generator matrix: `q length dim mode [modulus]`, then `dim` rows.

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::funcspec::{FunctionSpec, Polynomial};
use crate::geometry::{Mode, PointSet, Space};

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, s: &str) -> Result<Vec<u64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, found {t:?}")))
        })
        .collect()
}

fn make_field(line: usize, q: u64, modulus: &[u64]) -> Result<Field> {
    let modulus: Vec<u32> = modulus
        .iter()
        .map(|&c| u32::try_from(c).map_err(|_| Error::parse(line, "modulus coefficient too large")))
        .collect::<Result<_>>()?;
    let m = (!modulus.is_empty()).then_some(modulus.as_slice());
    Field::with_order(q, m).map_err(|e| Error::parse(line, e.to_string()))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    fixed: usize,
) -> Result<(usize, Vec<u64>, Field)> {
    let (ln, text) = lines.next().ok_or_else(|| Error::parse(1, "missing header line"))?;
    let nums = numbers(ln, text)?;
    if nums.len() < fixed {
        return Err(Error::parse(ln, format!("header needs at least {fixed} fields")));
    }
    let field = make_field(ln, nums[0], &nums[fixed..])?;
    Ok((ln, nums[..fixed].to_vec(), field))
}

fn elements(field: &Field, line: usize, nums: &[u64]) -> Result<Vec<Elem>> {
    nums.iter()
        .map(|&x| {
            if x < field.q() as u64 {
                Ok(x as Elem)
            } else {
                Err(Error::parse(line, format!("element {x} out of range for {field}")))
            }
        })
        .collect()
}

fn space_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Space> {
    let (ln, nums, field) = header(lines, 2)?;
    let n = usize::try_from(nums[1]).map_err(|_| Error::parse(ln, "n too large"))?;
    Space::new(&field, n).map_err(|e| Error::parse(ln, e.to_string()))
}

fn header_line(field: &Field, fixed: &[String]) -> String {
    let mut parts = vec![field.q().to_string()];
    parts.extend(fixed.iter().cloned());
    if let Some(m) = field.modulus() {
        parts.extend(m.iter().map(|c| c.to_string()));
    }
    parts.join(" ")
}

fn join(xs: &[Elem]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Reads a point set. Duplicate points are an error; the origin is accepted
/// here and rejected by the checks that forbid it.
pub fn parse_point_set(text: &str) -> Result<(Space, PointSet)> {
    let mut lines = content_lines(text);
    let space = space_header(&mut lines)?;
    let mut set = space.empty_set();
    for (ln, l) in lines {
        let nums = numbers(ln, l)?;
        if nums.len() != space.n() {
            return Err(Error::parse(ln, format!("expected {} coordinates, found {}", space.n(), nums.len())));
        }
        let x = elements(space.field(), ln, &nums)?;
        if !set.insert(space.index(&x)?) {
            return Err(Error::parse(ln, "duplicate point"));
        }
    }
    Ok((space, set))
}

pub fn write_point_set(space: &Space, set: &PointSet) -> String {
    let mut out = header_line(space.field(), &[space.n().to_string()]) + "\n";
    for p in set.iter() {
        out += &join(&space.coords(p));
        out.push('\n');
    }
    out
}

/// Reads a function table. Points may appear at most once.
pub fn parse_function_table(text: &str) -> Result<FunctionSpec> {
    let mut lines = content_lines(text);
    let space = space_header(&mut lines)?;
    let mut values = vec![0; space.size()];
    let mut seen = space.empty_set();
    for (ln, l) in lines {
        let nums = numbers(ln, l)?;
        if nums.len() != space.n() + 1 {
            return Err(Error::parse(ln, format!("expected {} coordinates and a value", space.n())));
        }
        let entry = elements(space.field(), ln, &nums)?;
        let idx = space.index(&entry[..space.n()])?;
        if !seen.insert(idx) {
            return Err(Error::parse(ln, "duplicate point"));
        }
        values[idx] = entry[space.n()];
    }
    FunctionSpec::table(&space, values)
}

/// Writes the nonzero entries of `f`.
pub fn write_function_table(f: &FunctionSpec) -> String {
    let space = f.space();
    let mut out = header_line(space.field(), &[space.n().to_string()]) + "\n";
    for (i, v) in f.to_table().into_iter().enumerate() {
        if v != 0 {
            out += &format!("{} {v}\n", join(&space.coords(i)));
        }
    }
    out
}

pub fn parse_polynomial(text: &str) -> Result<(Space, Polynomial)> {
    let mut lines = content_lines(text);
    let space = space_header(&mut lines)?;
    let mut terms = Vec::new();
    for (ln, l) in lines {
        let nums = numbers(ln, l)?;
        if nums.len() != space.n() + 1 {
            return Err(Error::parse(ln, format!("expected a coefficient and {} exponents", space.n())));
        }
        let coef = elements(space.field(), ln, &nums[..1])?[0];
        if coef == 0 {
            return Err(Error::parse(ln, "zero coefficient"));
        }
        terms.push((coef, nums[1..].to_vec()));
    }
    let poly = Polynomial::new(space.field(), space.n(), &terms)?;
    Ok((space, poly))
}

fn mode_name(mode: Option<Mode>) -> &'static str {
    mode.map_or("generic", Mode::as_str)
}

/// Writes an independent set of generator rows.
pub fn write_generator(code: &LinearCode) -> String {
    let fixed = [
        code.length().to_string(),
        code.dim().to_string(),
        mode_name(code.mode()).to_string(),
    ];
    let mut out = header_line(code.field(), &fixed) + "\n";
    for row in code.basis() {
        out += &join(row);
        out.push('\n');
    }
    out
}

/// Reads a generator matrix. The returned code carries no column labels;
/// the mode tag is returned separately.
pub fn parse_generator(text: &str) -> Result<(LinearCode, Option<Mode>)> {
    let mut lines = content_lines(text);
    let (ln, l) = lines.next().ok_or_else(|| Error::parse(1, "missing header line"))?;
    let tokens: Vec<&str> = l.split_whitespace().collect();
    if tokens.len() < 4 {
        return Err(Error::parse(ln, "header must be `q length dim mode [modulus]`"));
    }
    let head = numbers(ln, &tokens[..3].join(" "))?;
    let mode = match tokens[3] {
        "affine" => Some(Mode::Affine),
        "projective" => Some(Mode::Projective),
        "generic" => None,
        other => return Err(Error::parse(ln, format!("unknown mode {other:?}"))),
    };
    let field = make_field(ln, head[0], &numbers(ln, &tokens[4..].join(" "))?)?;
    let (length, dim) = (head[1] as usize, head[2] as usize);
    if length == 0 {
        return Err(Error::parse(ln, "length must be positive"));
    }
    let mut rows = Vec::with_capacity(dim);
    for (ln, l) in lines {
        let nums = numbers(ln, l)?;
        if nums.len() != length {
            return Err(Error::parse(ln, format!("row has {} entries, expected {length}", nums.len())));
        }
        rows.push(elements(&field, ln, &nums)?);
    }
    if rows.len() != dim {
        return Err(Error::parse(ln, format!("header announces {dim} rows, found {}", rows.len())));
    }
    if dim == 0 {
        rows.push(vec![0; length]);
    }
    let code = LinearCode::from_generator(&field, rows)?;
    if code.dim() != dim {
        return Err(Error::parse(ln, "rows are linearly dependent"));
    }
    Ok((code, mode))
}
