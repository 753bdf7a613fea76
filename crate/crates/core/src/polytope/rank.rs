//! Exact incremental row spaces over the rationals, using fraction-free
//! integer rows normalized by their gcd.

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub(crate) struct RowSpace {
    rows: Vec<(Vec<i128>, usize)>,
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

impl RowSpace {
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis. Returns the reduced vector and its
    /// pivot, or `None` if `v` lies in the span.
    fn reduce(&self, mut v: Vec<i128>) -> Result<Option<(Vec<i128>, usize)>> {
        for (row, p) in &self.rows {
            let b = v[*p];
            if b == 0 {
                continue;
            }
            let a = row[*p];
            for (x, r) in v.iter_mut().zip(row) {
                *x = a
                    .checked_mul(*x)
                    .and_then(|ax| b.checked_mul(*r).and_then(|br| ax.checked_sub(br)))
                    .ok_or(Error::Overflow("exact rank"))?;
            }
            normalize(&mut v);
        }
        Ok(v.iter().position(|&x| x != 0).map(|p| (v, p)))
    }

    /// Adds `v` if it is independent of the rows so far; reports whether it was.
    pub(crate) fn insert(&mut self, v: &[i64]) -> Result<bool> {
        let v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        match self.reduce(v)? {
            Some(r) => {
                self.rows.push(r);
                Ok(true)
            }
            None => Ok(false),
        }
    }
}

/// Affine rank of a point set: rank of the differences to the first point.
pub(crate) fn affine_rank<'a, I: IntoIterator<Item = &'a [i64]>>(points: I) -> Result<usize> {
    let mut it = points.into_iter();
    let Some(first) = it.next() else {
        return Ok(0);
    };
    let first = first.to_vec();
    let mut space = RowSpace::default();
    for p in it {
        let d: Vec<i64> = p.iter().zip(&first).map(|(a, b)| a - b).collect();
        space.insert(&d)?;
    }
    Ok(space.rank())
}
