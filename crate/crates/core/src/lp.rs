//! Exact linear programming: a dense two-phase simplex method with Bland's
//! rule, plus the convex-geometry queries built on it.

use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint<C: Scalar> {
    pub coeffs: Vec<C>,
    pub relation: Relation,
    pub rhs: C,
}

impl<C: Scalar> Constraint<C> {
    pub fn new(coeffs: Vec<C>, relation: Relation, rhs: C) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<C: Scalar> {
    Optimal { x: Vec<C>, value: C },
    Infeasible,
    Unbounded,
}

/// Maximise `objective . x` subject to `constraints`, `x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram<C: Scalar> {
    nvars: usize,
    objective: Vec<C>,
    constraints: Vec<Constraint<C>>,
}

impl<C: Scalar> LinearProgram<C> {
    pub fn new(nvars: usize) -> Self {
        LinearProgram {
            nvars,
            objective: vec![C::zero(); nvars],
            constraints: Vec::new(),
        }
    }

    pub fn maximize(mut self, objective: Vec<C>) -> Self {
        assert_eq!(objective.len(), self.nvars);
        self.objective = objective;
        self
    }

    pub fn constraint(&mut self, coeffs: Vec<C>, relation: Relation, rhs: C) {
        assert_eq!(coeffs.len(), self.nvars);
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
    }

    pub fn solve(&self) -> LpOutcome<C> {
        let n = self.nvars;
        let slack_count = self
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let m = self.constraints.len();
        let art_start = n + slack_count;
        let ncols = art_start + m;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut slack = n;
        for (i, con) in self.constraints.iter().enumerate() {
            let mut row = vec![C::zero(); ncols];
            row[..n].clone_from_slice(&con.coeffs);
            match con.relation {
                Relation::Le => {
                    row[slack] = C::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -C::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            let mut b = con.rhs.clone();
            if b.is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
                b = -b;
            }
            row[art_start + i] = C::one();
            rows.push(row);
            rhs.push(b);
        }
        let mut t = Tableau {
            rows,
            rhs,
            basis: (art_start..art_start + m).collect(),
            ncols,
        };

        // Phase 1: maximise -(sum of artificials).
        let mut phase1 = vec![C::zero(); ncols];
        for c in phase1.iter_mut().skip(art_start) {
            *c = -C::one();
        }
        t.optimize(&phase1, |_| true)
            .expect("phase one is bounded");
        let infeasibility: C = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(b, _)| **b >= art_start)
            .fold(C::zero(), |mut acc, (_, v)| {
                acc += v;
                acc
            });
        if !infeasibility.is_zero() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_start {
                match (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => {
                        t.pivot(r, j);
                        r += 1;
                    }
                    None => {
                        t.rows.remove(r);
                        t.rhs.remove(r);
                        t.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }

        let mut cost = vec![C::zero(); ncols];
        cost[..n].clone_from_slice(&self.objective);
        if t.optimize(&cost, |j| j < art_start).is_err() {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![C::zero(); n];
        for (row, &b) in t.basis.iter().enumerate() {
            if b < n {
                x[b] = t.rhs[row].clone();
            }
        }
        let value = dot(&self.objective, &x);
        LpOutcome::Optimal { x, value }
    }
}

struct Tableau<C: Scalar> {
    rows: Vec<Vec<C>>,
    rhs: Vec<C>,
    basis: Vec<usize>,
    ncols: usize,
}

#[derive(Debug)]
struct Unbounded;

impl<C: Scalar> Tableau<C> {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = C::one() / self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    let mut d = p.clone();
                    d *= &f;
                    *v -= &d;
                }
            }
            let mut d = prhs.clone();
            d *= &f;
            self.rhs[i] -= &d;
        }
        self.basis[r] = c;
    }

    fn optimize(&mut self, cost: &[C], allowed: impl Fn(usize) -> bool) -> Result<(), Unbounded> {
        loop {
            // Bland: lowest-index improving column.
            let entering = (0..self.ncols).filter(|&j| allowed(j)).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    let mut t = cost[b].clone();
                    t *= &self.rows[i][j];
                    d -= &t;
                }
                d.is_positive()
            });
            let Some(j) = entering else {
                return Ok(());
            };
            let mut best: Option<(usize, C)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((i, _)) => self.pivot(i, j),
                None => return Err(Unbounded),
            }
        }
    }
}

pub fn dot<C: Scalar>(a: &[C], b: &[C]) -> C {
    a.iter().zip(b).fold(C::zero(), |mut acc, (x, y)| {
        let mut t = x.clone();
        t *= y;
        acc += &t;
        acc
    })
}

/// Convex weights `lambda >= 0`, `sum lambda = 1` with `sum lambda_i p_i = target`,
/// or `None` when `target` lies outside the convex hull.
pub fn convex_combination<C: Scalar>(points: &[Vec<C>], target: &[C]) -> Option<Vec<C>> {
    if points.is_empty() {
        return None;
    }
    let k = points.len();
    let mut lp = LinearProgram::new(k);
    for (d, t) in target.iter().enumerate() {
        let row = points.iter().map(|p| p[d].clone()).collect();
        lp.constraint(row, Relation::Eq, t.clone());
    }
    lp.constraint(vec![C::one(); k], Relation::Eq, C::one());
    match lp.solve() {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

/// A direction `w` with `w . (target - p) > 0` for every point `p`, normalised
/// to the box `[-1, 1]^n` and maximising the worst margin. With `traceless`,
/// `w` additionally sums to zero. `None` if no strict separation exists.
pub fn separating_direction<C: Scalar>(points: &[Vec<C>], target: &[C], traceless: bool) -> Option<Vec<C>> {
    let n = target.len();
    // Variables: u_i = w_i + 1 in [0, 2], then the margin t >= 0.
    let mut lp = LinearProgram::new(n + 1);
    for p in points {
        let diff: Vec<C> = target.iter().zip(p).map(|(t, x)| t.clone() - x.clone()).collect();
        let mut row = diff.clone();
        row.push(-C::one());
        let rhs = diff.iter().fold(C::zero(), |mut acc, v| {
            acc += v;
            acc
        });
        lp.constraint(row, Relation::Ge, rhs);
    }
    for i in 0..n {
        let mut row = vec![C::zero(); n + 1];
        row[i] = C::one();
        lp.constraint(row, Relation::Le, C::from_i64(2));
    }
    if traceless {
        let mut row = vec![C::one(); n + 1];
        row[n] = C::zero();
        lp.constraint(row, Relation::Eq, C::from_i64(n as i64));
    }
    // Cap the margin so the program stays bounded even for an empty point set.
    let mut cap = vec![C::zero(); n + 1];
    cap[n] = C::one();
    lp.constraint(cap, Relation::Le, C::from_i64(1_000_000));
    let mut objective = vec![C::zero(); n + 1];
    objective[n] = C::one();
    match lp.maximize(objective).solve() {
        LpOutcome::Optimal { x, value } if value.is_positive() => {
            Some(x[..n].iter().map(|u| u.clone() - C::one()).collect())
        }
        _ => None,
    }
}
