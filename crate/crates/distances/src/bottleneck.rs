//! Exact bottleneck distance between finite multisets of integer-endpoint
//! intervals, with a witness matching.

use crate::halfvalue::HalfValue;
use persistence_theta::Bar;

/// An interval `[birth, death)`; `death = None` is ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub birth: u32,
    pub death: Option<u32>,
}

impl Interval {
    pub fn from_bar(bar: &Bar) -> Self {
        Interval {
            birth: bar.birth,
            death: bar.death,
        }
    }
}

/// Cost of matching two intervals, in half-units: 2·max(|b−b′|, |d−d′|);
/// ∞-endpoints match only each other, at 2·|b−b′|.
pub fn match_cost(a: Interval, b: Interval) -> HalfValue {
    match (a.death, b.death) {
        (None, None) => HalfValue::Finite(2 * a.birth.abs_diff(b.birth)),
        (Some(da), Some(db)) => {
            HalfValue::Finite(2 * a.birth.abs_diff(b.birth).max(da.abs_diff(db)))
        }
        _ => HalfValue::Infinite,
    }
}

/// Cost of deleting an interval, in half-units: (d − b)/2, so d − b halves;
/// ∞-bars cannot be deleted.
pub fn deletion_cost(a: Interval) -> HalfValue {
    match a.death {
        Some(d) => HalfValue::Finite(d - a.birth),
        None => HalfValue::Infinite,
    }
}

/// The witness of an optimal bottleneck value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Index pairs (into the two input lists) that are matched.
    pub pairs: Vec<(usize, usize)>,
    pub deleted_left: Vec<usize>,
    pub deleted_right: Vec<usize>,
}

/// Test whether a partial matching of total cost ≤ eps exists; on success
/// return a witness.
fn feasible(a: &[Interval], b: &[Interval], eps: u32) -> Option<Matching> {
    let ok = |c: HalfValue| matches!(c, HalfValue::Finite(h) if h <= eps);
    // Symmetric diagonal-augmented bipartite graph. Left nodes: a-bars,
    // then one diagonal slot per b-bar. Right nodes: b-bars, then one
    // diagonal slot per a-bar. A bar may pair with the diagonal only when
    // its deletion cost fits; diagonal slots pair with each other freely.
    // The bottleneck is feasible at eps iff a perfect matching exists.
    let n = a.len() + b.len();
    let neighbor = |i: usize, j: usize| -> bool {
        match (i < a.len(), j < b.len()) {
            (true, true) => ok(match_cost(a[i], b[j])),
            (true, false) => j - b.len() == i && ok(deletion_cost(a[i])),
            (false, true) => i - a.len() == j && ok(deletion_cost(b[j])),
            (false, false) => true,
        }
    };
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    fn augment(
        i: usize,
        neighbor: &dyn Fn(usize, usize) -> bool,
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for j in 0..match_right.len() {
            if neighbor(i, j) && !seen[j] {
                seen[j] = true;
                if match_right[j].is_none()
                    || augment(match_right[j].unwrap(), neighbor, seen, match_right)
                {
                    match_right[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, &neighbor, &mut seen, &mut match_right) {
            return None;
        }
    }
    let mut pairs = Vec::new();
    let mut deleted_left = Vec::new();
    let mut deleted_right = Vec::new();
    for (j, owner) in match_right.iter().enumerate() {
        let i = owner.expect("perfect matching");
        match (i < a.len(), j < b.len()) {
            (true, true) => pairs.push((i, j)),
            (true, false) => deleted_left.push(i),
            (false, true) => deleted_right.push(j),
            (false, false) => {}
        }
    }
    Some(Matching {
        pairs,
        deleted_left,
        deleted_right,
    })
}

/// Exact bottleneck distance with witness; `None` value means the two
/// multisets cannot be matched at any finite cost (mismatched ∞-bars).
pub fn bottleneck(a: &[Interval], b: &[Interval]) -> (HalfValue, Option<Matching>) {
    // Candidate values: all finite match costs and deletion costs.
    let mut candidates: Vec<u32> = vec![0];
    for &x in a {
        if let HalfValue::Finite(h) = deletion_cost(x) {
            candidates.push(h);
        }
        for &y in b {
            if let HalfValue::Finite(h) = match_cost(x, y) {
                candidates.push(h);
            }
        }
    }
    for &y in b {
        if let HalfValue::Finite(h) = deletion_cost(y) {
            candidates.push(h);
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    // Binary search for the smallest feasible candidate.
    let mut lo = 0usize;
    let mut hi = candidates.len();
    let mut best: Option<(u32, Matching)> = None;
    while lo < hi {
        let mid = (lo + hi) / 2;
        match feasible(a, b, candidates[mid]) {
            Some(witness) => {
                best = Some((candidates[mid], witness));
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    match best {
        Some((value, witness)) => (HalfValue::Finite(value), Some(witness)),
        None => (HalfValue::Infinite, None),
    }
}

/// Exhaustive reference implementation for small inputs (≤ ~6 bars per
/// side): minimum over all partial matchings of the maximum cost.
pub fn bottleneck_brute_force(a: &[Interval], b: &[Interval]) -> HalfValue {
    fn go(a: &[Interval], b: &[Interval], used: &mut Vec<bool>, i: usize) -> HalfValue {
        if i == a.len() {
            let mut worst = HalfValue::ZERO;
            for (j, &u) in used.iter().enumerate() {
                if !u {
                    worst = worst.max(deletion_cost(b[j]));
                }
            }
            return worst;
        }
        // Delete a[i].
        let mut best = deletion_cost(a[i]).max(go(a, b, used, i + 1));
        // Or match it to any unused b[j].
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                let candidate = match_cost(a[i], b[j]).max(go(a, b, used, i + 1));
                used[j] = false;
                if candidate < best {
                    best = candidate;
                }
            }
        }
        best
    }
    let mut used = vec![false; b.len()];
    go(a, b, &mut used, 0)
}
