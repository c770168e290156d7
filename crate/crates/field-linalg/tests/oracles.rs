//! Randomized cross-checks of the elimination code against independent
//! brute-force oracles (minor expansion, multiply-back).

use field_linalg::matrix::oracle;
use field_linalg::{solve_in_span, Matrix, Rational, Scalar, SpanSolution};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Matrix<Rational> {
    let mut m = Matrix::zero(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let num = rng.gen_range(-4i64..=4);
            let den = rng.gen_range(1i64..=3);
            m.set(r, c, Rational::from_ratio(num, den));
        }
    }
    m
}

#[test]
fn rank_matches_minor_expansion_oracle() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..60 {
        let m = random_matrix(&mut rng, 4, 4);
        assert_eq!(m.rank(), oracle::rank_by_minors(&m));
    }
}

#[test]
fn rank_of_product_bounded_by_factors() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let a = random_matrix(&mut rng, 3, 4);
        let b = random_matrix(&mut rng, 4, 3);
        let ab = a.matmul(&b);
        assert!(ab.rank() <= a.rank().min(b.rank()));
    }
}

#[test]
fn solve_in_span_multiply_back() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..40 {
        // Build a consistent 5-dimensional system: the target is a known
        // combination of the basis vectors.
        let basis: Vec<Vec<Rational>> = (0..3)
            .map(|_| random_matrix(&mut rng, 5, 1).column(0))
            .collect();
        let weights: Vec<Rational> = (0..3)
            .map(|_| Rational::from_integer(rng.gen_range(-3i64..=3)))
            .collect();
        let mut target = vec![Rational::zero(); 5];
        for (v, w) in basis.iter().zip(&weights) {
            for (t, x) in target.iter_mut().zip(v) {
                *t = t.add(&x.mul(w));
            }
        }
        match solve_in_span(&basis, &target) {
            SpanSolution::Coordinates(coords) => {
                // Multiply back and compare exactly.
                let mut rebuilt = vec![Rational::zero(); 5];
                for (v, c) in basis.iter().zip(&coords) {
                    for (t, x) in rebuilt.iter_mut().zip(v) {
                        *t = t.add(&x.mul(c));
                    }
                }
                assert_eq!(rebuilt, target);
            }
            SpanSolution::NotInSpan => panic!("consistent system reported as not-in-span"),
        }
    }
}
