//! Bottleneck distance: hand-checked values, oracle agreement on random
//! inputs, and pseudometric properties.

use distances::{bottleneck, bottleneck_brute_force, HalfValue, Interval};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn iv(b: u32, d: Option<u32>) -> Interval {
    Interval { birth: b, death: d }
}

#[test]
fn hopf_degree_three_computation() {
    // {[1,2), [3,∞)} vs {[1,∞)}: match the immortal bars at cost 2, delete
    // [1,2) at cost ½ — bottleneck 2.
    let a = vec![iv(1, Some(2)), iv(3, None)];
    let b = vec![iv(1, None)];
    let (value, witness) = bottleneck(&a, &b);
    assert_eq!(value, HalfValue::from_integer(2));
    let witness = witness.unwrap();
    assert_eq!(witness.pairs, vec![(1, 0)]);
    assert_eq!(witness.deleted_left, vec![0]);
}

#[test]
fn identical_multisets_are_at_distance_zero() {
    let a = vec![iv(0, Some(3)), iv(2, None), iv(1, Some(5))];
    let (value, _) = bottleneck(&a, &a);
    assert_eq!(value, HalfValue::ZERO);
}

#[test]
fn mismatched_immortal_bars_give_infinity() {
    let a = vec![iv(0, None)];
    let b = vec![];
    let (value, witness) = bottleneck(&a, &b);
    assert_eq!(value, HalfValue::Infinite);
    assert!(witness.is_none());
}

#[test]
fn half_integer_values_appear_from_deletions() {
    // Deleting [0,3) costs 3/2.
    let a = vec![iv(0, Some(3))];
    let b = vec![];
    let (value, _) = bottleneck(&a, &b);
    assert_eq!(value, HalfValue::from_halves(3));
    assert_eq!(value.to_string(), "3/2");
}

fn random_intervals(rng: &mut StdRng, max_len: usize) -> Vec<Interval> {
    let n = rng.gen_range(0..=max_len);
    (0..n)
        .map(|_| {
            let b = rng.gen_range(0u32..6);
            if rng.gen_bool(0.2) {
                iv(b, None)
            } else {
                iv(b, Some(b + rng.gen_range(1u32..5)))
            }
        })
        .collect()
}

#[test]
fn matches_brute_force_oracle() {
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..200 {
        let a = random_intervals(&mut rng, 6);
        let b = random_intervals(&mut rng, 6);
        let fast = bottleneck(&a, &b).0;
        let slow = bottleneck_brute_force(&a, &b);
        assert_eq!(fast, slow, "a = {a:?}, b = {b:?}");
    }
}

#[test]
fn symmetry_and_triangle_inequality() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..80 {
        let a = random_intervals(&mut rng, 5);
        let b = random_intervals(&mut rng, 5);
        let c = random_intervals(&mut rng, 5);
        let ab = bottleneck(&a, &b).0;
        let ba = bottleneck(&b, &a).0;
        assert_eq!(ab, ba);
        let bc = bottleneck(&b, &c).0;
        let ac = bottleneck(&a, &c).0;
        match (ab, bc, ac) {
            (HalfValue::Finite(x), HalfValue::Finite(y), HalfValue::Finite(z)) => {
                assert!(z <= x + y, "triangle violated: {x} + {y} < {z}");
            }
            (HalfValue::Finite(_), HalfValue::Finite(_), HalfValue::Infinite) => {
                panic!("finite legs with infinite hypotenuse")
            }
            _ => {}
        }
    }
}

#[test]
fn adding_a_bar_changes_distance_boundedly() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..60 {
        let a = random_intervals(&mut rng, 4);
        let b = random_intervals(&mut rng, 4);
        let before = bottleneck(&a, &b).0;
        let extra_b = rng.gen_range(0u32..5);
        let extra_len = rng.gen_range(1u32..5);
        let mut b2 = b.clone();
        b2.push(iv(extra_b, Some(extra_b + extra_len)));
        let after = bottleneck(&a, &b2).0;
        if let (HalfValue::Finite(x), HalfValue::Finite(y)) = (before, after) {
            // The new bar can always be deleted at cost len/2 halves = len.
            assert!(y <= x.max(extra_len));
            assert!(y + extra_len >= x.min(x), "sanity");
            assert!(x <= y + extra_len, "removal bound violated");
        }
    }
}
