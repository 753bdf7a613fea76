//! Facets of the convex hull of integer points by the double description
//! method.
//!
//! Points `p` are lifted to `(1, p)`; the facets of the hull are the extreme
//! rays `(y0, y)` of the polar cone `{(y0, y) : y0 + y · p >= 0 for all p}`,
//! read as `-y · x <= y0`. Rays are kept as gcd-normalized `i128` vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rank::RowSpace;
use super::LinearInequality;
use crate::error::{Error, Result};

/// Bitset over point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    y: Vec<i128>,
    zeros: Bits,
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

fn dot(a: &[i64], y: &[i128]) -> Result<i128> {
    a.iter()
        .zip(y)
        .try_fold(0i128, |acc, (&x, &w)| {
            (x as i128).checked_mul(w).and_then(|t| acc.checked_add(t))
        })
        .ok_or(Error::Overflow("hull"))
}

/// Solves `a y = e_j` for every `j` over the rationals; returns the columns
/// of `a^{-1}` scaled to primitive integer vectors.
fn inverse_columns(a: &[Vec<i64>]) -> Result<Vec<Vec<i128>>> {
    let d = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect();
            r.extend((0..d).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&r| !m[r][c].is_zero()).expect("rows are independent");
        m.swap(c, p);
        let inv = m[c][c].recip();
        m[c].iter_mut().for_each(|x| *x *= &inv);
        for r in 0..d {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot = m[c].clone();
                m[r].iter_mut().zip(&pivot).for_each(|(x, p)| *x -= &f * p);
            }
        }
    }
    (0..d)
        .map(|j| {
            let col: Vec<BigRational> = (0..d).map(|i| m[i][d + j].clone()).collect();
            let l = col.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = col
                .iter()
                .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                .collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            ints.iter()
                .map(|x| (x / &g).to_i128().ok_or(Error::Overflow("hull")))
                .collect::<Result<Vec<i128>>>()
                .map(|mut v| {
                    normalize(&mut v);
                    debug_assert!(v.iter().any(|x| !x.is_zero()) && g.is_positive());
                    v
                })
        })
        .collect()
}

/// Facets of `conv(points)` together with the indices of the points on each
/// facet. The points must affinely span their whole space.
pub(crate) fn hull_with_incidence(points: &[Vec<i64>]) -> Result<Vec<(LinearInequality, Vec<usize>)>> {
    let k = points.len();
    let Some(d) = points.first().map(|p| p.len() + 1) else {
        return Err(Error::InvalidArgument("empty point set".into()));
    };
    let rows: Vec<Vec<i64>> = points
        .iter()
        .map(|p| std::iter::once(1).chain(p.iter().copied()).collect())
        .collect();

    let mut space = RowSpace::default();
    let mut basis = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if space.insert(r)? {
            basis.push(i);
        }
    }
    if basis.len() < d {
        return Err(Error::InvalidArgument("points are not full-dimensional".into()));
    }
    let cols = inverse_columns(&basis.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>())?;
    let mut rays: Vec<Ray> = cols
        .into_iter()
        .enumerate()
        .map(|(j, y)| {
            let mut zeros = Bits::new(k);
            for (i, &b) in basis.iter().enumerate() {
                if i != j {
                    zeros.set(b);
                }
            }
            Ray { y, zeros }
        })
        .collect();

    let mut in_basis = vec![false; k];
    basis.iter().for_each(|&b| in_basis[b] = true);
    for i in (0..k).filter(|&i| !in_basis[i]) {
        let vals: Vec<i128> = rays.iter().map(|r| dot(&rows[i], &r.y)).collect::<Result<_>>()?;
        let pos: Vec<usize> = (0..rays.len()).filter(|&r| vals[r] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&r| vals[r] < 0).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if *v == 0 {
                    r.zeros.set(i);
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if (common.count() as usize) + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|r| r == p || r == n || !common.subset_of(&rays[r].zeros));
                if !adjacent {
                    continue;
                }
                let (sp, sn) = (vals[p], -vals[n]);
                let mut y: Vec<i128> = rays[p]
                    .y
                    .iter()
                    .zip(&rays[n].y)
                    .map(|(&a, &b)| {
                        sn.checked_mul(a)
                            .and_then(|x| sp.checked_mul(b).and_then(|z| x.checked_add(z)))
                    })
                    .collect::<Option<_>>()
                    .ok_or(Error::Overflow("hull"))?;
                normalize(&mut y);
                let mut zeros = common;
                zeros.set(i);
                fresh.push(Ray { y, zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, v) in rays.into_iter().zip(&vals) {
            if *v > 0 {
                next.push(r);
            } else if *v == 0 {
                let mut r = r;
                r.zeros.set(i);
                next.push(r);
            }
        }
        next.extend(fresh);
        rays = next;
    }

    rays.into_iter()
        .map(|r| {
            let coeffs = r.y[1..]
                .iter()
                .map(|&c| (-c).to_i64().ok_or(Error::Overflow("hull")))
                .collect::<Result<Vec<i64>>>()?;
            let rhs = r.y[0].to_i64().ok_or(Error::Overflow("hull"))?;
            let tight = (0..k).filter(|&i| r.zeros.get(i)).collect();
            Ok((LinearInequality::new(coeffs, rhs)?, tight))
        })
        .collect()
}
