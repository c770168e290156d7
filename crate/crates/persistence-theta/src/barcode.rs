//! Interval decomposition of an integer-indexed persistence module by
//! exact column reduction with the elder rule: when classes merge, the
//! younger one dies.

use crate::module::PersistenceModule;
use field_linalg::{solve_in_span, Matrix, Scalar, SpanSolution};
use std::fmt::Write as _;

/// One bar: `[birth, death)` in a fixed cohomological degree, `death = None`
/// meaning the class survives forever.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bar {
    pub degree: usize,
    pub birth: u32,
    pub death: Option<u32>,
}

/// A multiset of bars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Barcode {
    pub bars: Vec<Bar>,
    /// Propagated truncation marker: deaths and lifetimes beyond the cutoff
    /// are not determined.
    pub truncated_at: Option<u32>,
}

impl Barcode {
    /// Bars of one degree.
    pub fn in_degree(&self, n: usize) -> Vec<&Bar> {
        self.bars.iter().filter(|b| b.degree == n).collect()
    }

    /// Number of bars alive at a stage in a degree.
    pub fn alive(&self, degree: usize, stage: u32) -> usize {
        self.bars
            .iter()
            .filter(|b| {
                b.degree == degree && b.birth <= stage && b.death.map_or(true, |d| stage < d)
            })
            .count()
    }

    /// Stable text form: one `degree birth death` line per bar, `inf` for
    /// immortal bars, sorted.
    pub fn serialize(&self) -> String {
        let mut bars = self.bars.clone();
        bars.sort();
        let mut out = String::new();
        for bar in &bars {
            match bar.death {
                Some(d) => writeln!(out, "{} {} {}", bar.degree, bar.birth, d).unwrap(),
                None => writeln!(out, "{} {} inf", bar.degree, bar.birth).unwrap(),
            }
        }
        out
    }
}

/// Decompose a persistence module into its barcode.
///
/// Per degree, live classes are tracked as coordinate vectors at the
/// current stage, oldest births first. Pushing through a transition, each
/// class vector is reduced against the (strictly older) classes already
/// kept at the new stage; a vector falling into their span means the class
/// dies entering that stage. New basis directions found at the new stage
/// are born there.
pub fn barcode<S: Scalar>(module: &PersistenceModule<S>) -> Barcode {
    let mut bars = Vec::new();
    let n_stages = module.stages();
    for (degree, dm) in module.degrees.iter().enumerate() {
        // Live classes: (birth, coordinate vector at the current stage).
        let mut live: Vec<(u32, Vec<S>)> = Vec::new();
        for i in 0..dm.dims[0] {
            let mut v = vec![S::zero(); dm.dims[0]];
            v[i] = S::one();
            live.push((0, v));
        }
        for s in 0..n_stages - 1 {
            let t = &dm.transitions[s];
            let next_dim = dm.dims[s + 1];
            let mut survivors: Vec<(u32, Vec<S>)> = Vec::new();
            let mut kept: Vec<Vec<S>> = Vec::new();
            // Oldest first; insertion order breaks ties (it reflects the
            // order classes were created).
            live.sort_by_key(|(birth, _)| *birth);
            for (birth, v) in live {
                let image = t.apply(&v);
                let dies = if image.iter().all(|c| c.is_zero()) {
                    true
                } else {
                    matches!(solve_in_span(&kept, &image), SpanSolution::Coordinates(_))
                };
                if dies {
                    bars.push(Bar {
                        degree,
                        birth,
                        death: Some(s as u32 + 1),
                    });
                } else {
                    kept.push(image.clone());
                    survivors.push((birth, image));
                }
            }
            // New directions at stage s+1.
            let survivor_vectors: Vec<Vec<S>> =
                survivors.iter().map(|(_, v)| v.clone()).collect();
            let basis: Vec<Vec<S>> = (0..next_dim)
                .map(|i| Matrix::identity(next_dim).column(i))
                .collect();
            let fresh =
                sullivan_models::independent_modulo(&survivor_vectors, &basis, next_dim);
            for i in fresh {
                survivors.push((s as u32 + 1, basis[i].clone()));
            }
            debug_assert_eq!(survivors.len(), next_dim);
            live = survivors;
        }
        for (birth, _) in live {
            bars.push(Bar {
                degree,
                birth,
                death: None,
            });
        }
    }
    bars.sort();
    Barcode {
        bars,
        truncated_at: module.truncated_at,
    }
}
