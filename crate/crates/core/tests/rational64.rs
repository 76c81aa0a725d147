//! The same computations over 64-bit rationals agree with the big-rational ones.

use hilbstab::curves::{named_example, BICUSPIDAL_GENERATORS};
use hilbstab::poly::Ideal;
use hilbstab::stability::{hilbert_mumford_index, is_torus_semistable, state_polytope, TraversalOptions};
use hilbstab::{OneParamSubgroup, Ring, Scalar, Q, Q64};

#[test]
fn bicuspidal_polytope_agrees() {
    let small: Ideal<Q64> = Ideal::from_strings(Ring::indexed("x", 5), &BICUSPIDAL_GENERATORS).unwrap();
    let big = named_example::<Q>("bicuspidal-g2-tricanonical").unwrap().ideal;
    let opts = TraversalOptions::default();
    let a = state_polytope(&small, 2, &opts).unwrap();
    let b = state_polytope(&big, 2, &opts).unwrap();
    assert_eq!(a.vertices, b.vertices);
    let r = is_torus_semistable(&small, 2, &opts).unwrap();
    assert!(r.semistable);
    assert_eq!(r.barycenter, vec![Q64::new(8, 5); 5]);
}

#[test]
fn double_line_index() {
    let ex = named_example::<Q64>("thickened-line:2:2").unwrap();
    let rho = OneParamSubgroup::new(vec![0, 1, 1]);
    let r = hilbert_mumford_index(&ex.ideal, &Q64::from_i64(4), &rho, &ex.hilbert_polynomial).unwrap();
    assert_eq!(r.index, Q64::from_i64(-8));
}
