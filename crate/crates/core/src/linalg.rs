//! Row reduction over GF(q).

use crate::field::{Elem, Field};

/// Incrementally built echelon basis. Rows are kept in reduced row-echelon
/// form with leading entries 1, sorted by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, width: usize) -> Self {
        Echelon {
            field: field.clone(),
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Vec<Elem>> {
        self.rows
    }

    /// Reduces `v` against the basis in place.
    fn reduce(&self, v: &mut [Elem]) {
        let f = &self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span. Returns `false` if it was already in it.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let f = &self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = f.inv(w[piv]).expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = f.mul(*x, s);
        }
        // clear the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.rows.insert(at, w);
        self.pivots.insert(at, piv);
        true
    }
}

/// Reduced row-echelon form of the span of `rows` (zero rows dropped).
pub fn rref(field: &Field, width: usize, rows: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut e = Echelon::new(field, width);
    for r in rows {
        e.insert(r);
    }
    e.into_rows()
}

pub fn rank(field: &Field, width: usize, rows: &[Vec<Elem>]) -> usize {
    let mut e = Echelon::new(field, width);
    rows.iter().filter(|r| e.insert(r)).count()
}

/// Indices of the first maximal independent subset of `rows`, in order.
pub fn independent_rows(field: &Field, width: usize, rows: &[Vec<Elem>]) -> Vec<usize> {
    let mut e = Echelon::new(field, width);
    (0..rows.len()).filter(|&i| e.insert(&rows[i])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small_cases() {
        let f = Field::prime(3).unwrap();
        assert_eq!(rank(&f, 2, &[]), 0);
        assert_eq!(rank(&f, 2, &[vec![1, 0], vec![2, 0]]), 1);
        assert_eq!(rank(&f, 3, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]), 2);
        assert_eq!(
            rref(&f, 3, &[vec![0, 2, 2], vec![2, 1, 0]]),
            vec![vec![1, 0, 1], vec![0, 1, 1]]
        );
    }

    #[test]
    fn independent_subset_is_first_fit() {
        let f = Field::prime(2).unwrap();
        let rows = vec![vec![1, 1, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(independent_rows(&f, 3, &rows), vec![0, 1, 3]);
    }
}
