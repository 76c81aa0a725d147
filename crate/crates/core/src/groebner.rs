//! Buchberger's algorithm with the Gebauer–Möller criteria, reduced Gröbner
//! bases, initial ideals and standard monomials.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{monomials_of_degree, Ideal, Monomial, OneParamSubgroup, Polynomial};
use crate::scalar::Scalar;

type Key = Vec<i64>;

/// A polynomial with its terms sorted by decreasing order key.
#[derive(Clone, Debug)]
struct Sorted<C: Scalar> {
    terms: Vec<(Key, Monomial, C)>,
}

impl<C: Scalar> Sorted<C> {
    fn from_poly(p: &Polynomial<C>, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Key, Monomial, C)> = p
            .terms()
            .map(|(m, c)| (order.key(m), m.clone(), c.clone()))
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Sorted { terms }
    }

    fn from_map(map: BTreeMap<Key, (Monomial, C)>) -> Self {
        Sorted {
            terms: map.into_iter().rev().map(|(k, (m, c))| (k, m, c)).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    fn make_monic(&mut self) {
        let lc = self.terms[0].2.clone();
        if lc.is_one() {
            return;
        }
        let inv = C::one() / lc;
        for t in &mut self.terms {
            t.2 *= &inv;
        }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial<C> {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(_, m, c)| (m.clone(), c.clone())))
    }
}

fn add_scaled_shifted<C: Scalar>(
    acc: &mut BTreeMap<Key, (Monomial, C)>,
    g: &Sorted<C>,
    factor: &C,
    shift: &Monomial,
    order: &MonomialOrder,
) {
    for (_, m, c) in &g.terms {
        let mono = m.mul(shift);
        let key = order.key(&mono);
        let mut delta = c.clone();
        delta *= factor;
        match acc.get_mut(&key) {
            Some(slot) => {
                slot.1 += &delta;
                if slot.1.is_zero() {
                    acc.remove(&key);
                }
            }
            None => {
                acc.insert(key, (mono, delta));
            }
        }
    }
}

/// Full reduction of `f` modulo the monic polynomials `basis`.
fn normal_form<C: Scalar>(
    f: BTreeMap<Key, (Monomial, C)>,
    basis: &[&Sorted<C>],
    order: &MonomialOrder,
) -> Sorted<C> {
    let mut work = f;
    let mut rem: BTreeMap<Key, (Monomial, C)> = BTreeMap::new();
    while let Some((key, (m, c))) = work.pop_last() {
        let divisor = basis.iter().find(|g| g.lm().divides(&m));
        match divisor {
            Some(g) => {
                let shift = g.lm().quotient_of(&m).expect("divides");
                // g is monic: subtract c * shift * g, whose leading term cancels (key, m).
                let factor = -c;
                let tail = Sorted {
                    terms: g.terms[1..].to_vec(),
                };
                add_scaled_shifted(&mut work, &tail, &factor, &shift, order);
            }
            None => {
                rem.insert(key, (m, c));
            }
        }
    }
    Sorted::from_map(rem)
}

fn to_map<C: Scalar>(s: &Sorted<C>) -> BTreeMap<Key, (Monomial, C)> {
    s.terms
        .iter()
        .map(|(k, m, c)| (k.clone(), (m.clone(), c.clone())))
        .collect()
}

fn s_polynomial<C: Scalar>(f: &Sorted<C>, g: &Sorted<C>, order: &MonomialOrder) -> BTreeMap<Key, (Monomial, C)> {
    let lcm = f.lm().lcm(g.lm());
    let sf = f.lm().quotient_of(&lcm).expect("lcm");
    let sg = g.lm().quotient_of(&lcm).expect("lcm");
    let mut acc = BTreeMap::new();
    // Both monic; leading terms cancel.
    let tf = Sorted {
        terms: f.terms[1..].to_vec(),
    };
    let tg = Sorted {
        terms: g.terms[1..].to_vec(),
    };
    add_scaled_shifted(&mut acc, &tf, &C::one(), &sf, order);
    add_scaled_shifted(&mut acc, &tg, &-C::one(), &sg, order);
    acc
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: Key,
}

/// Gebauer–Möller update of the active basis and the pair list with the new element `h`.
fn update<C: Scalar>(
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    polys: &[Sorted<C>],
    h: usize,
    order: &MonomialOrder,
) {
    let lm_h = polys[h].lm().clone();
    let mut candidates: Vec<(usize, Monomial)> = active
        .iter()
        .map(|&g| (g, lm_h.lcm(polys[g].lm())))
        .collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    while !candidates.is_empty() {
        let (g1, lcm1) = candidates.remove(0);
        let coprime = lm_h.is_coprime(polys[g1].lm());
        let dominated = candidates.iter().any(|(_, l)| l.divides(&lcm1))
            || kept.iter().any(|(_, l)| l.divides(&lcm1));
        if coprime || !dominated {
            kept.push((g1, lcm1));
        }
    }
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|(g, _)| !lm_h.is_coprime(polys[*g].lm()))
        .map(|(g, lcm)| Pair {
            i: g,
            j: h,
            key: order.key(&lcm),
            lcm,
        })
        .collect();
    pairs.retain(|p| {
        let l1 = polys[p.i].lm().lcm(&lm_h);
        let l2 = polys[p.j].lm().lcm(&lm_h);
        !(lm_h.divides(&p.lcm) && l1 != p.lcm && l2 != p.lcm)
    });
    pairs.extend(new_pairs);
    active.retain(|&g| !lm_h.divides(polys[g].lm()));
    active.push(h);
}

/// Buchberger's algorithm over any term order. `max_degree` truncates the
/// computation to pairs whose lcm has degree at most that bound, which is
/// exact in degrees up to the bound for homogeneous input and graded orders.
fn buchberger_core<C: Scalar>(
    nvars: usize,
    generators: &[Polynomial<C>],
    order: &MonomialOrder,
    max_degree: Option<u32>,
) -> Vec<Sorted<C>> {
    let mut polys: Vec<Sorted<C>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Sorted<C>> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .filter(|g| match max_degree {
            Some(d) => g.degree().unwrap_or(0) <= d,
            None => true,
        })
        .map(|g| Sorted::from_poly(g, order))
        .collect();
    // Smallest leading terms first keeps the initial interreduction cheap.
    inputs.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
    for f in inputs {
        let basis: Vec<&Sorted<C>> = active.iter().map(|&i| &polys[i]).collect();
        let mut h = normal_form(to_map(&f), &basis, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        polys.push(h);
        let idx = polys.len() - 1;
        update(&mut active, &mut pairs, &polys, idx, order);
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.key.cmp(&b.key).then((a.i, a.j).cmp(&(b.i, b.j))))
            .map(|(k, _)| k)
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        if let Some(d) = max_degree {
            if pair.lcm.degree() > d {
                continue;
            }
        }
        let s = s_polynomial(&polys[pair.i], &polys[pair.j], order);
        let basis: Vec<&Sorted<C>> = active.iter().map(|&i| &polys[i]).collect();
        let mut h = normal_form(s, &basis, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        polys.push(h);
        let idx = polys.len() - 1;
        update(&mut active, &mut pairs, &polys, idx, order);
    }

    // `active` is a minimal basis; reduce the tails.
    let minimal: Vec<Sorted<C>> = active.iter().map(|&i| polys[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Sorted<C>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p)
            .collect();
        let tail = Sorted {
            terms: g.terms[1..].to_vec(),
        };
        let mut rest = normal_form(to_map(&tail), &others, order);
        let mut terms = vec![g.terms[0].clone()];
        terms.append(&mut rest.terms);
        reduced.push(Sorted { terms });
    }
    reduced.sort_by(|a, b| b.terms[0].0.cmp(&a.terms[0].0));
    let _ = nvars;
    reduced
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C: Scalar> {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial<C>>,
    sorted: Vec<Sorted<C>>,
    truncated_at: Option<u32>,
}

fn check_inputs<C: Scalar>(nvars: usize, generators: &[Polynomial<C>], order: &MonomialOrder) -> Result<()> {
    if nvars == 0 {
        return Err(Error::EmptyRing);
    }
    order.check(nvars)?;
    for (index, g) in generators.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(Error::LengthMismatch {
                expected: nvars,
                found: g.nvars(),
            });
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous { index });
        }
    }
    if !order.is_graded() {
        return Err(Error::InvalidArgument(
            "homogeneous Gröbner bases are computed for graded orders only".into(),
        ));
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `generators`.
pub fn buchberger<C: Scalar>(
    nvars: usize,
    generators: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<GroebnerBasis<C>> {
    check_inputs(nvars, generators, order)?;
    Ok(GroebnerBasis::from_sorted(
        order.clone(),
        nvars,
        buchberger_core(nvars, generators, order, None),
        None,
    ))
}

/// Gröbner basis that is correct up to degree `max_degree` only.
pub fn buchberger_truncated<C: Scalar>(
    nvars: usize,
    generators: &[Polynomial<C>],
    order: &MonomialOrder,
    max_degree: u32,
) -> Result<GroebnerBasis<C>> {
    check_inputs(nvars, generators, order)?;
    Ok(GroebnerBasis::from_sorted(
        order.clone(),
        nvars,
        buchberger_core(nvars, generators, order, Some(max_degree)),
        Some(max_degree),
    ))
}

/// Reduced Gröbner basis for an arbitrary term order and possibly
/// inhomogeneous input. Used for elimination.
pub(crate) fn buchberger_unchecked<C: Scalar>(
    nvars: usize,
    generators: &[Polynomial<C>],
    order: &MonomialOrder,
) -> GroebnerBasis<C> {
    GroebnerBasis::from_sorted(
        order.clone(),
        nvars,
        buchberger_core(nvars, generators, order, None),
        None,
    )
}

pub fn groebner_basis<C: Scalar>(ideal: &Ideal<C>, order: &MonomialOrder) -> Result<GroebnerBasis<C>> {
    buchberger(ideal.nvars(), ideal.generators(), order)
}

impl<C: Scalar> GroebnerBasis<C> {
    fn from_sorted(order: MonomialOrder, nvars: usize, sorted: Vec<Sorted<C>>, truncated_at: Option<u32>) -> Self {
        let elements = sorted.iter().map(|s| s.to_poly(nvars)).collect();
        GroebnerBasis {
            order,
            nvars,
            elements,
            sorted,
            truncated_at,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Degree bound up to which the basis is valid, if truncated.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|s| s.lm().clone()).collect()
    }

    /// Normal form of `p`.
    pub fn reduce(&self, p: &Polynomial<C>) -> Polynomial<C> {
        let basis: Vec<&Sorted<C>> = self.sorted.iter().collect();
        let s = Sorted::from_poly(p, &self.order);
        normal_form(to_map(&s), &basis, &self.order).to_poly(self.nvars)
    }

    /// Ideal membership.
    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn in_initial_ideal(&self, m: &Monomial) -> bool {
        self.sorted.iter().any(|s| s.lm().divides(m))
    }

    /// Degree-`m` monomials lying in the initial ideal.
    pub fn initial_ideal_degree(&self, m: u32) -> BTreeSet<Monomial> {
        self.debug_check_degree(m);
        monomials_of_degree(self.nvars, m)
            .into_iter()
            .filter(|x| self.in_initial_ideal(x))
            .collect()
    }

    /// Degree-`m` monomials outside the initial ideal.
    pub fn standard_monomials(&self, m: u32) -> Vec<Monomial> {
        self.debug_check_degree(m);
        monomials_of_degree(self.nvars, m)
            .into_iter()
            .filter(|x| !self.in_initial_ideal(x))
            .collect()
    }

    /// Sum of `rho`-weights over the degree-`m` standard monomials.
    pub fn standard_monomial_weight_sum(&self, m: u32, rho: &OneParamSubgroup) -> Result<i64> {
        rho.check_len(self.nvars)?;
        Ok(self
            .standard_monomials(m)
            .iter()
            .map(|x| x.dot(rho.weights()))
            .sum())
    }

    /// Componentwise sum of the exponent vectors of the degree-`m` initial monomials.
    pub fn initial_exponent_sum(&self, m: u32) -> Vec<i64> {
        let mut sum = vec![0i64; self.nvars];
        for x in self.initial_ideal_degree(m) {
            for (s, &e) in sum.iter_mut().zip(x.exponents()) {
                *s += e as i64;
            }
        }
        sum
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let basis: Vec<&Sorted<C>> = self.sorted.iter().collect();
        for i in 0..self.sorted.len() {
            for j in (i + 1)..self.sorted.len() {
                let (a, b) = (&self.sorted[i], &self.sorted[j]);
                if let Some(d) = self.truncated_at {
                    if a.lm().lcm(b.lm()).degree() > d {
                        continue;
                    }
                }
                let s = s_polynomial(a, b, &self.order);
                if !normal_form(s, &basis, &self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic, no leading monomial divides any term of another element.
    pub fn is_reduced(&self) -> bool {
        for (i, a) in self.sorted.iter().enumerate() {
            if !a.terms[0].2.is_one() {
                return false;
            }
            for (j, b) in self.sorted.iter().enumerate() {
                if i != j && b.terms.iter().any(|(_, m, _)| a.lm().divides(m)) {
                    return false;
                }
            }
        }
        true
    }

    fn debug_check_degree(&self, m: u32) {
        if let Some(d) = self.truncated_at {
            debug_assert!(m <= d, "degree {m} beyond truncation {d}");
        }
    }
}
