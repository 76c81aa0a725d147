//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hilbstab::curves::{named_example, tail_curve_spec, tail_weight_sum_formula, lattice_ideal};
use hilbstab::groebner::{buchberger, buchberger_truncated};
use hilbstab::hilbert::HilbertPolynomial;
use hilbstab::moduli::{
    alpha_of_m, chamber_decomposition, m_of_alpha, tail_characters, tail_index_assembled, tail_index_closed_form,
    DeformationChart, TailParams,
};
use hilbstab::poly::{monomials_of_degree, Ideal, Ring};
use hilbstab::stability::json::semistability_json;
use hilbstab::stability::{
    basis_weight_sum, complement_basis, hilbert_mumford_index, hilbert_mumford_index_with, ideal_side_index,
    is_torus_semistable, monomial_basis_index_bound, state_polytope, BasisBound, SemistabilityCertificate,
    TraversalOptions,
};
use hilbstab::{Monomial, MonomialOrder, OneParamSubgroup, Scalar, TieBreak, Q};

type Outcome = Result<String, String>;

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bicuspidal() -> (Ideal<Q>, HilbertPolynomial<Q>) {
    let ex = named_example::<Q>("bicuspidal-g2-tricanonical").unwrap();
    (ex.ideal, ex.hilbert_polynomial)
}

fn mono(e: [u32; 5]) -> Monomial {
    Monomial::new(e.to_vec())
}

/// Quadratic monomial `x_i x_j` in five variables.
fn x(i: usize, j: usize) -> Monomial {
    let mut e = [0u32; 5];
    e[i] += 1;
    e[j] += 1;
    mono(e)
}

fn bicuspidal_bases() -> Vec<Vec<Monomial>> {
    vec![
        complement_basis(5, 2, &[x(1, 1), x(2, 2), x(3, 3), x(0, 4)]),
        complement_basis(5, 2, &[x(1, 4), x(0, 4), x(0, 3), x(1, 3)]),
        complement_basis(5, 2, &[x(1, 4), x(0, 4), x(0, 3), x(2, 2)]),
    ]
}

fn c1_state_polytope() -> Outcome {
    let (ideal, _) = bicuspidal();
    let start = Instant::now();
    let p = state_polytope(&ideal, 2, &TraversalOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected: BTreeSet<Vec<i64>> = [
        [1, 3, 0, 3, 1],
        [1, 4, 0, 1, 2],
        [2, 1, 0, 4, 1],
        [2, 2, 0, 2, 2],
        [1, 1, 2, 4, 0],
        [2, 0, 2, 3, 1],
        [2, 1, 2, 1, 2],
        [0, 3, 2, 3, 0],
        [0, 4, 2, 1, 1],
        [1, 3, 2, 0, 2],
    ]
    .iter()
    .map(|v| v.to_vec())
    .collect();
    ensure(p.vertices == expected, || format!("vertex set differs: {:?}", p.vertices))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("10 vertices in {elapsed:.2?}"))
}

fn c2_semistable() -> Outcome {
    let (ideal, _) = bicuspidal();
    let r = is_torus_semistable(&ideal, 2, &TraversalOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.semistable, || "reported unstable".into())?;
    ensure(r.barycenter == vec![qr(8, 5); 5], || format!("barycenter {:?}", r.barycenter))?;
    let SemistabilityCertificate::ConvexCombination(combo) = &r.certificate else {
        return Err("missing convex-combination certificate".into());
    };
    // Re-check the certificate by hand.
    let mut total = Q::zero();
    let mut point = vec![Q::zero(); 5];
    for (v, l) in combo {
        ensure(!l.is_negative(), || "negative convex weight".into())?;
        ensure(r.polytope.vertices.contains(v), || "certificate uses a non-vertex".into())?;
        total += l;
        for (p, c) in point.iter_mut().zip(v) {
            *p += &(Q::from_i64(*c) * l.clone());
        }
    }
    ensure(total.is_one() && point == r.barycenter, || "certificate does not reproduce barycenter".into())?;
    Ok(format!("semistable, barycenter (8/5)^5, {} vertices in certificate", combo.len()))
}

fn c3_monomial_bases() -> Outcome {
    let (ideal, _) = bicuspidal();
    let bases = bicuspidal_bases();
    let rep = monomial_basis_index_bound(&ideal, 2, &bases).map_err(|e| e.to_string())?;
    let BasisBound::Holds { multipliers, value } = &rep.outcome else {
        return Err(format!("bound fails: {:?}", rep.outcome));
    };
    // Certificate check: sum y_i c_i is constant across coordinates.
    let mut combo = vec![Q::zero(); 5];
    for (y, c) in multipliers.iter().zip(&rep.exponent_sums) {
        ensure(!y.is_negative(), || "negative multiplier".into())?;
        for (t, &ci) in combo.iter_mut().zip(c) {
            *t += &(y.clone() * Q::from_i64(ci));
        }
    }
    ensure(combo.iter().all(|t| t == value), || format!("combination {combo:?} is not constant"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    for trial in 0..1000 {
        let mut w: Vec<i64> = (0..4).map(|_| rng.gen_range(-50..=50)).collect();
        w.push(-w.iter().sum::<i64>());
        let rho = OneParamSubgroup::new(w);
        let min = bases
            .iter()
            .map(|b| basis_weight_sum(b, &rho).unwrap())
            .min()
            .unwrap();
        ensure(min <= 0, || format!("trial {trial}: rho {rho} gives every basis weight > 0"))?;
    }
    let ys: Vec<String> = multipliers.iter().map(|y| y.to_string()).collect();
    Ok(format!("LP infeasible, multipliers ({}); 1000 random weights ok", ys.join(", ")))
}

fn c4_stabilizer() -> Outcome {
    let (ideal, p) = bicuspidal();
    let rho = OneParamSubgroup::new(vec![6, 4, 3, 2, 0]);
    for r in [rho.clone(), rho.inverse()] {
        let rep = hilbert_mumford_index(&ideal, &q(2), &r, &p).map_err(|e| e.to_string())?;
        ensure(rep.index.is_zero(), || format!("index {} against {r}", rep.index))?;
    }
    Ok("index 0 against (6,4,3,2,0) and its inverse".into())
}

fn c5_tail_weight_sums() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for b in 2..=4u32 {
        let (spec, rho) = tail_curve_spec(b).map_err(|e| e.to_string())?;
        let ideal: Ideal<Q> = lattice_ideal(&spec).map_err(|e| e.to_string())?;
        let order = MonomialOrder::weighted(rho.clone());
        for m in 1..=5u32 {
            let gb = buchberger_truncated(ideal.nvars(), ideal.generators(), &order, m).map_err(|e| e.to_string())?;
            let w = gb.standard_monomial_weight_sum(m, &rho).map_err(|e| e.to_string())?;
            let expected = tail_weight_sum_formula(b as i64, m as i64);
            ensure(w == expected, || format!("b={b} m={m}: {w} != {expected}"))?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{count} equalities in {elapsed:.2?}"))
}

fn c6_tail_dual_path() -> Outcome {
    let mut count = 0;
    for b in 2..=4i64 {
        let (spec, rho) = tail_curve_spec(b as u32).map_err(|e| e.to_string())?;
        let ideal: Ideal<Q> = lattice_ideal(&spec).map_err(|e| e.to_string())?;
        let order = MonomialOrder::weighted(rho.clone());
        for m in 1..=5i64 {
            let gb = buchberger_truncated(ideal.nvars(), ideal.generators(), &order, m as u32)
                .map_err(|e| e.to_string())?;
            let w_r = gb.standard_monomial_weight_sum(m as u32, &rho).map_err(|e| e.to_string())?;
            // Closed form written out independently of the library.
            let closed = qr((m - 1) * ((4 * b * b - 8 * b + 2) * m - 3 * b * b), 3);
            for g in b + 2..=b + 4 {
                let p = TailParams::new(g, b, q(m)).map_err(|e| e.to_string())?;
                let assembled = tail_index_assembled(&p, w_r).map_err(|e| e.to_string())?;
                ensure(assembled == closed, || format!("b={b} g={g} m={m}: {assembled} != {closed}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} grid points agree"))
}

fn c7_weierstrass_threshold() -> Outcome {
    for m in 2..=5 {
        let v = tail_index_closed_form(2, &q(m));
        ensure(v.is_negative(), || format!("m={m}: {v} not negative"))?;
    }
    let v = tail_index_closed_form(2, &q(6));
    ensure(v.is_zero(), || format!("m=6: {v}"))?;
    Ok("negative for m=2..5, zero at m=6".into())
}

fn c8_characters() -> Outcome {
    for b in 2..=50 {
        let t = tail_characters(b).map_err(|e| e.to_string())?;
        ensure(t.chi_k == 13 * t.chi_lambda - 2 * t.chi_delta, || format!("b={b}: K relation"))?;
        ensure(t.chi_lambda2 == 13 * t.chi_lambda - t.chi_delta, || format!("b={b}: lambda_2 relation"))?;
        ensure(
            t.as_tuple() == (b * b, 5 * b * b - 4 * b + 1, 8 * b * b + 4 * b - 1, -3 * b * b - 8 * b + 2),
            || format!("b={b}: table {:?}", t.as_tuple()),
        )?;
    }
    let t = tail_characters(2).unwrap().as_tuple();
    ensure(t == (4, 13, 39, -26), || format!("b=2 gives {t:?}"))?;
    Ok("relations hold for b=2..50; b=2 -> (4, 13, 39, -26)".into())
}

/// Weight sum of degree-`m` monomials in `k[x0,x1,x2]` with `x0`-exponent at
/// most one, under `(0,1,1)`: every such monomial has weight `m - a`.
fn double_line_oracle(m: i64) -> Q {
    let mut sum = 0;
    for a in 0..=1 {
        sum += (m - a + 1) * (m - a);
    }
    let hf = 2 * m + 1;
    qr(m * hf * 2, 3) - q(sum)
}

fn c9_instability() -> Outcome {
    let ex = named_example::<Q>("thickened-line:2:2").map_err(|e| e.to_string())?;
    let rho = OneParamSubgroup::new(vec![0, 1, 1]);
    for m in 4..=12 {
        let rep = hilbert_mumford_index(&ex.ideal, &q(m), &rho, &ex.hilbert_polynomial).map_err(|e| e.to_string())?;
        ensure(rep.index.is_negative(), || format!("m={m}: index {}", rep.index))?;
        ensure(rep.index == double_line_oracle(m), || format!("m={m}: index {} differs from enumeration", rep.index))?;
        if m == 4 {
            ensure(rep.index == q(-8), || format!("m=4 index {}", rep.index))?;
        }
    }
    Ok("negative for m=4..12, -8 at m=4".into())
}

fn c10_alpha_m() -> Outcome {
    for (m, a) in [(qr(6, 1), qr(2, 3)), (qr(9, 2), qr(19, 29)), (qr(9, 4), qr(17, 28))] {
        let got = alpha_of_m(&m).map_err(|e| e.to_string())?;
        ensure(got == a, || format!("alpha({m}) = {got}"))?;
        let back = m_of_alpha(&a).map_err(|e| e.to_string())?;
        ensure(back == m, || format!("m({a}) = {back}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut samples = Vec::new();
    while samples.len() < 100 {
        let m = qr(rng.gen_range(-400..=400), rng.gen_range(1..=60));
        if m == qr(3, 20) {
            continue;
        }
        let a = alpha_of_m(&m).map_err(|e| e.to_string())?;
        let back = m_of_alpha(&a).map_err(|e| e.to_string())?;
        ensure(back == m, || format!("round trip {m} -> {a} -> {back}"))?;
        samples.push(m);
    }
    let mut valid: Vec<Q> = samples.into_iter().filter(|m| *m > qr(3, 20)).collect();
    valid.sort();
    for w in valid.windows(2) {
        ensure(alpha_of_m(&w[0]).unwrap() <= alpha_of_m(&w[1]).unwrap(), || format!("not monotone at {}", w[0]))?;
    }
    Ok("reference values match; 100 round trips exact".into())
}

fn c11_chambers() -> Outcome {
    let d = chamber_decomposition(&DeformationChart::tacnode());
    ensure(d.negative_chamber_complement == ["s0", "s1", "s2"], || format!("{:?}", d.negative_chamber_complement))?;
    ensure(d.positive_chamber_complement == ["n1", "n2"], || format!("{:?}", d.positive_chamber_complement))?;
    for b in 2..=6 {
        let chart = DeformationChart::cusp(b);
        let d = chamber_decomposition(&chart);
        for i in 0..2 * b {
            let name = format!("c{i}");
            ensure(d.attracted.contains(&name), || format!("b={b}: {name} not attracted"))?;
        }
        ensure(!d.attracted.contains(&"node".to_string()), || format!("b={b}: node attracted"))?;
    }
    Ok("tacnode complements V(s0,s1,s2), V(n1,n2); cusp directions attracted, node not".into())
}

fn random_ideal(rng: &mut ChaCha8Rng) -> Ideal<Q> {
    let n = 3 + rng.gen_range(0..2usize);
    let ring = Ring::indexed("x", n);
    let monos = monomials_of_degree(n, 2);
    let gens = (0..rng.gen_range(1..=3))
        .map(|_| {
            let terms = (0..3).map(|_| (monos[rng.gen_range(0..monos.len())].clone(), q(rng.gen_range(-3..=3))));
            hilbstab::poly::Polynomial::from_terms(n, terms)
        })
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(ring, gens).unwrap()
}

fn c12_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut ideals: Vec<Ideal<Q>> = (0..25).map(|_| random_ideal(&mut rng)).collect();
    ideals.push(bicuspidal().0);
    for name in ["a2b-tail:2", "a2b-tail:3", "thickened-line:2:2", "thickened-line:3:3"] {
        ideals.push(named_example::<Q>(name).map_err(|e| e.to_string())?.ideal);
    }
    let mut bases = 0;
    let mut checks = 0;
    for (k, ideal) in ideals.iter().enumerate() {
        let n = ideal.nvars();
        let rho = OneParamSubgroup::new((0..n).map(|_| rng.gen_range(-5..=5)).collect());
        for order in [
            MonomialOrder::GradedLex,
            MonomialOrder::GradedRevLex,
            MonomialOrder::weighted(rho.clone()),
        ] {
            let gb = buchberger(n, ideal.generators(), &order).map_err(|e| e.to_string())?;
            ensure(gb.satisfies_buchberger_criterion(), || format!("ideal {k}: S-pair criterion fails"))?;
            ensure(gb.is_reduced(), || format!("ideal {k}: basis not reduced"))?;
            bases += 1;
        }
        let p = {
            let gb = buchberger(n, ideal.generators(), &MonomialOrder::GradedRevLex).unwrap();
            let hf = hilbstab::hilbert::hilbert_function(&gb, 3);
            HilbertPolynomial::constant(q(hf as i64))
        };
        let m = q(3);
        let base = hilbert_mumford_index(ideal, &m, &rho, &p).map_err(|e| e.to_string())?.index;
        let c = rng.gen_range(-7..=7);
        let translated = hilbert_mumford_index(ideal, &m, &rho.translate(c), &p).unwrap().index;
        ensure(translated == base, || format!("ideal {k}: translation by {c} changes index"))?;
        let s = rng.gen_range(1..=4);
        let scaled = hilbert_mumford_index(ideal, &m, &rho.scale(s), &p).unwrap().index;
        ensure(scaled == base.clone() * q(s), || format!("ideal {k}: scaling by {s}"))?;
        let revlex = hilbert_mumford_index_with(ideal, &m, &rho, &p, TieBreak::GradedRevLex).unwrap().index;
        ensure(revlex == base, || format!("ideal {k}: tie-break changes index"))?;
        let side = ideal_side_index(ideal, &m, &rho, &p).unwrap();
        ensure(side == base, || format!("ideal {k}: ideal-side index {side} != {base}"))?;
        checks += 4;
    }

    let (ideal, _) = bicuspidal();
    let render = |threads: usize| {
        let opts = TraversalOptions {
            threads,
            ..TraversalOptions::default()
        };
        serde_json::to_string(&semistability_json(&is_torus_semistable(&ideal, 2, &opts).unwrap())).unwrap()
    };
    let first = render(1);
    for threads in [1, 2, 4] {
        ensure(render(threads) == first, || format!("JSON differs with {threads} threads"))?;
    }
    Ok(format!("{bases} bases pass the S-pair check; {checks} index identities; JSON stable across runs and threads"))
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("1 state polytope golden", c1_state_polytope),
        ("2 semistability golden", c2_semistable),
        ("3 monomial-basis argument", c3_monomial_bases),
        ("4 stabilizer fixed point", c4_stabilizer),
        ("5 tail weight-sum lemma", c5_tail_weight_sums),
        ("6 tail index dual path", c6_tail_dual_path),
        ("7 genus-2 Weierstrass threshold", c7_weierstrass_threshold),
        ("8 character table", c8_characters),
        ("9 thickening instability", c9_instability),
        ("10 alpha <-> m calculus", c10_alpha_m),
        ("11 chamber decomposition", c11_chambers),
        ("12 property suites", c12_properties),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL  criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
