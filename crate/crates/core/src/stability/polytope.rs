use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{facets, rank, AffineHull, Facet};
use crate::groebner::buchberger_truncated;
use crate::order::MonomialOrder;
use crate::poly::{Ideal, OneParamSubgroup};
use crate::scalar::{primitive_integer_vector, Scalar};

/// Degree-`m` state polytope in the ideal-side convention: each vertex is the
/// exponent sum of the degree-`m` part of one initial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatePolytope {
    pub m: u32,
    pub vertices: BTreeSet<Vec<i64>>,
    /// A weight vector whose initial ideal realises each vertex.
    pub representatives: BTreeMap<Vec<i64>, OneParamSubgroup>,
    pub dimension: usize,
    /// Number of Gröbner computations spent.
    pub queries: usize,
}

impl StatePolytope {
    /// Common coordinate sum `m (T(m) - HF(m))` of the vertices.
    pub fn coordinate_sum(&self) -> Option<i64> {
        self.vertices.iter().next().map(|v| v.iter().sum())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraversalOptions {
    pub seed: u64,
    /// Random starting weights queried before the facet search.
    pub restarts: usize,
    pub threads: usize,
}

impl Default for TraversalOptions {
    fn default() -> Self {
        TraversalOptions {
            seed: 0x5eed,
            restarts: 4,
            threads: 1,
        }
    }
}

/// Vertex of the state polytope maximising `w` (ties broken by graded lex).
pub fn extreme_vertex<C: Scalar>(ideal: &Ideal<C>, m: u32, w: &OneParamSubgroup) -> Result<Vec<i64>> {
    let gb = buchberger_truncated(ideal.nvars(), ideal.generators(), &MonomialOrder::weighted(w.clone()), m)?;
    Ok(gb.initial_exponent_sum(m))
}

fn query_all<C: Scalar>(ideal: &Ideal<C>, m: u32, weights: &[OneParamSubgroup], threads: usize) -> Result<Vec<Vec<i64>>> {
    if threads <= 1 || weights.len() <= 1 {
        return weights.iter().map(|w| extreme_vertex(ideal, m, w)).collect();
    }
    let chunk = weights.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = weights
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|w| extreme_vertex(ideal, m, w)).collect::<Result<Vec<_>>>()))
            .collect();
        let mut out = Vec::with_capacity(weights.len());
        for h in handles {
            out.extend(h.join().expect("traversal worker panicked")?);
        }
        Ok(out)
    })
}

fn to_weight(v: &[BigInt]) -> Result<OneParamSubgroup> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| Error::InvalidArgument("weight vector out of range".into())))
        .collect::<Result<Vec<_>>>()
        .map(OneParamSubgroup::new)
}

fn as_scalars<C: Scalar>(v: &[i64]) -> Vec<C> {
    v.iter().map(|&x| C::from_i64(x)).collect()
}

struct Traversal<'a, C: Scalar> {
    ideal: &'a Ideal<C>,
    m: u32,
    threads: usize,
    points: BTreeMap<Vec<i64>, OneParamSubgroup>,
    queries: usize,
}

impl<C: Scalar> Traversal<'_, C> {
    /// Queries every weight, recording new points with the weight that found them.
    fn run(&mut self, weights: Vec<OneParamSubgroup>) -> Result<Vec<Vec<i64>>> {
        let found = query_all(self.ideal, self.m, &weights, self.threads)?;
        self.queries += weights.len();
        for (v, w) in found.iter().zip(weights) {
            self.points.entry(v.clone()).or_insert(w);
        }
        Ok(found)
    }

    fn hull(&self) -> AffineHull<C> {
        let pts: Vec<Vec<C>> = self.points.keys().map(|p| as_scalars(p)).collect();
        AffineHull::of(&pts)
    }
}

/// State polytope of `ideal` in degree `m`.
///
/// Each query computes one weighted initial ideal. The search first grows the
/// affine hull until no normal direction leaves it, then checks every facet of
/// the current hull against the vertex maximising its outer normal; it stops
/// once no facet is violated, at which point the hull is the whole polytope.
pub fn state_polytope<C: Scalar>(ideal: &Ideal<C>, m: u32, opts: &TraversalOptions) -> Result<StatePolytope> {
    if m == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let n = ideal.nvars();
    let mut t = Traversal {
        ideal,
        m,
        threads: opts.threads.max(1),
        points: BTreeMap::new(),
        queries: 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut start = vec![OneParamSubgroup::trivial(n)];
    for _ in 0..opts.restarts {
        start.push(OneParamSubgroup::new((0..n).map(|_| rng.gen_range(-16..=16)).collect()));
    }
    t.run(start)?;

    loop {
        // Grow the affine hull.
        loop {
            let hull = t.hull();
            let mut weights = Vec::new();
            for u in hull.normal_space() {
                let w = primitive_integer_vector(&u);
                weights.push(to_weight(&w)?);
                weights.push(to_weight(&w)?.inverse());
            }
            if weights.is_empty() {
                break;
            }
            let found = t.run(weights)?;
            if found.iter().all(|p| hull.contains(&as_scalars::<C>(p))) {
                break;
            }
        }
        let hull = t.hull();
        let d = hull.dimension();
        let local: Vec<Vec<C>> = t.points.keys().map(|p| hull.local(&as_scalars::<C>(p))).collect();
        let fs = facets(&local, d);
        if fs.is_empty() {
            break;
        }
        let weights = fs
            .iter()
            .map(|f| {
                let normal: Vec<C> = f.normal.iter().map(|x| C::from_bigint(x).expect("integer")).collect();
                to_weight(&primitive_integer_vector(&hull.lift(&normal)))
            })
            .collect::<Result<Vec<_>>>()?;
        let found = t.run(weights)?;
        let violated = fs.iter().zip(&found).any(|(f, p)| {
            if !hull.contains(&as_scalars::<C>(p)) {
                return true;
            }
            let y = hull.local(&as_scalars::<C>(p));
            let normal: Vec<C> = f.normal.iter().map(|x| C::from_bigint(x).expect("integer")).collect();
            crate::lp::dot(&normal, &y) > C::from_bigint(&f.offset).expect("integer")
        });
        if !violated {
            break;
        }
    }

    let hull = t.hull();
    let d = hull.dimension();
    let keys: Vec<Vec<i64>> = t.points.keys().cloned().collect();
    let local: Vec<Vec<C>> = keys.iter().map(|p| hull.local(&as_scalars::<C>(p))).collect();
    let extreme = extreme_points(&local, d);
    let mut vertices = BTreeSet::new();
    let mut representatives = BTreeMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        if extreme[i] {
            representatives.insert(k.clone(), t.points[&k].clone());
            vertices.insert(k);
        }
    }
    Ok(StatePolytope {
        m,
        vertices,
        representatives,
        dimension: d,
        queries: t.queries,
    })
}

/// Flags the points that are vertices of their convex hull in `R^d`.
fn extreme_points<C: Scalar>(points: &[Vec<C>], d: usize) -> Vec<bool> {
    if d == 0 {
        return vec![true; points.len()];
    }
    let fs: Vec<Facet> = facets(points, d);
    let normals: Vec<Vec<C>> = fs
        .iter()
        .map(|f| f.normal.iter().map(|x| C::from_bigint(x).expect("integer")).collect())
        .collect();
    points
        .iter()
        .map(|p| {
            let tight: Vec<Vec<C>> = fs
                .iter()
                .zip(&normals)
                .filter(|(f, nv)| crate::lp::dot(nv, p) == C::from_bigint(&f.offset).expect("integer"))
                .map(|(_, nv)| nv.clone())
                .collect();
            rank(&tight, d) == d
        })
        .collect()
}
