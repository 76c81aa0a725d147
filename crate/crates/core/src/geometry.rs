//! Exact polyhedral helpers: row reduction, affine hulls, facet enumeration
//! and Wolfe's minimum-norm-point algorithm.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::lp::dot;
use crate::scalar::{primitive_integer_vector, Scalar};

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<C: Scalar>(rows: &[Vec<C>], ncols: usize) -> (Vec<Vec<C>>, Vec<usize>) {
    let mut a: Vec<Vec<C>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = C::one() / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                let mut d = p.clone();
                d *= &f;
                *v -= &d;
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<C: Scalar>(rows: &[Vec<C>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : row . x = 0 for every row}`.
pub fn null_space<C: Scalar>(rows: &[Vec<C>], ncols: usize) -> Vec<Vec<C>> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![C::zero(); ncols];
            v[f] = C::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solves a square system `a x = b`; `None` if singular.
pub fn solve<C: Scalar>(a: &[Vec<C>], b: &[C]) -> Option<Vec<C>> {
    let n = b.len();
    let aug: Vec<Vec<C>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, n + 1);
    if pivots.len() != n || pivots.iter().any(|&p| p == n) {
        return None;
    }
    Some(r.iter().map(|row| row[n].clone()).collect())
}

fn sub<C: Scalar>(a: &[C], b: &[C]) -> Vec<C> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// Affine hull of a point set, stored as a base point and an echelon basis
/// of the direction space.
#[derive(Clone, Debug)]
pub struct AffineHull<C: Scalar> {
    pub base: Vec<C>,
    pub directions: Vec<Vec<C>>,
    pub pivots: Vec<usize>,
}

impl<C: Scalar> AffineHull<C> {
    pub fn of(points: &[Vec<C>]) -> Self {
        assert!(!points.is_empty());
        let base = points[0].clone();
        let n = base.len();
        let diffs: Vec<Vec<C>> = points[1..].iter().map(|p| sub(p, &base)).collect();
        let (directions, pivots) = rref(&diffs, n);
        AffineHull {
            base,
            directions,
            pivots,
        }
    }

    pub fn dimension(&self) -> usize {
        self.directions.len()
    }

    /// Coordinates of `p - base` on the echelon basis; exact when `p` lies in the hull.
    pub fn local(&self, p: &[C]) -> Vec<C> {
        let d = sub(p, &self.base);
        self.pivots.iter().map(|&c| d[c].clone()).collect()
    }

    pub fn contains(&self, p: &[C]) -> bool {
        let d = sub(p, &self.base);
        let mut rows = self.directions.clone();
        rows.push(d);
        rank(&rows, self.base.len()) == self.dimension()
    }

    /// Vectors orthogonal to every direction.
    pub fn normal_space(&self) -> Vec<Vec<C>> {
        null_space(&self.directions, self.base.len())
    }

    /// Ambient weight `w` with `w . (p - base) = normal . local(p)` on the hull.
    pub fn lift(&self, normal: &[C]) -> Vec<C> {
        let mut w = vec![C::zero(); self.base.len()];
        for (v, &c) in normal.iter().zip(&self.pivots) {
            w[c] = v.clone();
        }
        w
    }
}

/// A facet of a full-dimensional point configuration in local coordinates:
/// `normal . y <= offset` for every point, with equality on the facet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

/// Facets of the convex hull of points that affinely span `R^d`, by
/// enumerating affinely independent `d`-subsets.
pub fn facets<C: Scalar>(points: &[Vec<C>], d: usize) -> Vec<Facet> {
    if d == 0 || points.len() <= d {
        return Vec::new();
    }
    let mut found: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        let p0 = &points[subset[0]];
        let rows: Vec<Vec<C>> = subset[1..].iter().map(|&i| sub(&points[i], p0)).collect();
        let ns = null_space(&rows, d);
        if ns.len() == 1 {
            let n = &ns[0];
            let base = dot(n, p0);
            let mut above = false;
            let mut below = false;
            for p in points {
                let v = dot(n, p);
                if v > base {
                    above = true;
                } else if v < base {
                    below = true;
                }
                if above && below {
                    break;
                }
            }
            if !(above && below) {
                let oriented: Vec<C> = if above { n.iter().map(|x| -x.clone()).collect() } else { n.clone() };
                let normal = primitive_integer_vector(&oriented);
                let nc: Vec<C> = normal.iter().map(|x| C::from_bigint(x).expect("integer")).collect();
                let offset = dot(&nc, p0).to_rational().to_integer();
                found.insert(normal, offset);
            }
        }
        // Next combination.
        let n = points.len();
        let mut k = d;
        loop {
            if k == 0 {
                return found.into_iter().map(|(normal, offset)| Facet { normal, offset }).collect();
            }
            k -= 1;
            if subset[k] < n - d + k {
                subset[k] += 1;
                for j in k + 1..d {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Minimum-norm point of the convex hull of `points`, with its convex weights.
pub fn min_norm_point<C: Scalar>(points: &[Vec<C>]) -> (Vec<C>, Vec<C>) {
    assert!(!points.is_empty());
    let k = points.len();
    let start = (0..k)
        .min_by(|&a, &b| dot(&points[a], &points[a]).cmp(&dot(&points[b], &points[b])))
        .expect("nonempty");
    let mut support = vec![start];
    let mut lambda = vec![C::one()];
    let mut x = points[start].clone();
    loop {
        let xx = dot(&x, &x);
        let j = (0..k)
            .min_by(|&a, &b| dot(&x, &points[a]).cmp(&dot(&x, &points[b])).then(a.cmp(&b)))
            .expect("nonempty");
        if dot(&x, &points[j]) >= xx || support.contains(&j) {
            break;
        }
        support.push(j);
        lambda.push(C::zero());
        loop {
            let alpha = affine_min_norm(points, &support);
            if alpha.iter().all(|a| a.is_positive()) {
                x = combine(points, &support, &alpha);
                lambda = alpha;
                break;
            }
            let mut theta: Option<C> = None;
            for (l, a) in lambda.iter().zip(&alpha) {
                if !a.is_positive() {
                    let t = l.clone() / (l.clone() - a.clone());
                    if theta.as_ref().is_none_or(|th| t < *th) {
                        theta = Some(t);
                    }
                }
            }
            let theta = theta.expect("some coefficient is non-positive");
            let one_minus = C::one() - theta.clone();
            lambda = lambda
                .iter()
                .zip(&alpha)
                .map(|(l, a)| theta.clone() * a.clone() + one_minus.clone() * l.clone())
                .collect();
            let mut keep_support = Vec::new();
            let mut keep_lambda = Vec::new();
            for (s, l) in support.iter().zip(&lambda) {
                if l.is_positive() {
                    keep_support.push(*s);
                    keep_lambda.push(l.clone());
                }
            }
            support = keep_support;
            lambda = keep_lambda;
        }
    }
    let mut weights = vec![C::zero(); k];
    for (s, l) in support.iter().zip(lambda) {
        weights[*s] = l;
    }
    (x, weights)
}

fn combine<C: Scalar>(points: &[Vec<C>], support: &[usize], coeffs: &[C]) -> Vec<C> {
    let n = points[0].len();
    let mut x = vec![C::zero(); n];
    for (s, c) in support.iter().zip(coeffs) {
        for (xi, pi) in x.iter_mut().zip(&points[*s]) {
            let mut t = pi.clone();
            t *= c;
            *xi += &t;
        }
    }
    x
}

/// Affine coefficients (summing to one) of the min-norm point of the affine
/// hull of the supporting points.
fn affine_min_norm<C: Scalar>(points: &[Vec<C>], support: &[usize]) -> Vec<C> {
    let s = support.len();
    let mut a = vec![vec![C::zero(); s + 1]; s + 1];
    for i in 0..s {
        for j in 0..s {
            a[i][j] = dot(&points[support[i]], &points[support[j]]);
        }
        a[i][s] = C::one();
        a[s][i] = C::one();
    }
    let mut b = vec![C::zero(); s + 1];
    b[s] = C::one();
    let sol = solve(&a, &b).expect("Wolfe keeps the support affinely independent");
    sol[..s].to_vec()
}
