//! Reconstructed pairwise linking against the geometric winding oracle.

use freebraid::geometry::{
    compile, geometric_linking, random_closed_program, MoveProgram, Rational,
};
use freebraid::reconstruction::{annular_invariants, reconstruct_axis};
use num::{BigInt, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Twice the expected half-sum: 2 W(i,j) - W(i,axis) - W(j,axis).
fn expected_twice(p: &MoveProgram, axis: usize, i: usize, j: usize) -> i64 {
    let w = |a, b| geometric_linking(p, a, b).unwrap();
    let v: Rational = w(i, j) * Rational::from_integer(BigInt::from(2)) - w(i, axis) - w(j, axis);
    assert!(v.is_integer());
    v.to_integer().to_i64().unwrap()
}

#[test]
fn random_closed_motions_match_winding_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x11ce);
    for n in [4, 5, 6] {
        for _ in 0..60 {
            let p = random_closed_program(n, 10, &mut rng).unwrap();
            let word = compile(&p).unwrap().word;
            for axis in 1..=n {
                let inv = annular_invariants(&reconstruct_axis(&word, axis).unwrap());
                assert!(inv.is_identity());
                for i in (1..=n).filter(|&i| i != axis) {
                    for j in (i + 1..=n).filter(|&j| j != axis) {
                        assert_eq!(
                            inv.linking_of(i, j).twice(),
                            expected_twice(&p, axis, i, j),
                            "n={n} axis={axis} pair=({i},{j}) program={}",
                            p.to_json()
                        );
                    }
                }
            }
        }
    }
}
