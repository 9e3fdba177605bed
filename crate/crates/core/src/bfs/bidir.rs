//! Meet-in-the-middle search for a single distance.

use rustc_hash::FxHashMap;

use super::packed::Packer;
use super::{check_bfs_degree, check_budget, generators, SearchLimits, MAX_BIDIR_DEGREE};
use crate::error::Result;
use crate::perm::Permutation;

/// Hash map slot plus frontier storage, per visited state.
const BYTES_PER_STATE: u64 = 32;

struct Side {
    seen: FxHashMap<u64, u32>,
    frontier: Vec<u64>,
    depth: u32,
}

impl Side {
    fn new(start: u64) -> Self {
        let mut seen = FxHashMap::default();
        seen.insert(start, 0);
        Side {
            seen,
            frontier: vec![start],
            depth: 0,
        }
    }
}

/// `dist(id, target)`, growing whichever ball has the smaller frontier.
///
/// A path of length `D` has a vertex within `a` of one end and `D - a` of
/// the other, so once the two completed depths sum to at least the best
/// meeting found, nothing shorter remains.
pub(super) fn distance_from_identity(target: &Permutation, limits: &SearchLimits) -> Result<u32> {
    let n = target.degree();
    check_bfs_degree(n, MAX_BIDIR_DEGREE)?;
    let packer = Packer::new(n);
    let start = packer.pack(&Permutation::identity(n)?);
    let goal = packer.pack(target);
    if start == goal {
        return Ok(0);
    }
    let gens = generators(n);
    let mut sides = [Side::new(start), Side::new(goal)];
    let mut best = u32::MAX;

    while best > sides[0].depth + sides[1].depth {
        let grow = usize::from(sides[1].frontier.len() < sides[0].frontier.len());
        let (a, b) = sides.split_at_mut(1);
        let (this, other) = if grow == 0 {
            (&mut a[0], &b[0])
        } else {
            (&mut b[0], &a[0])
        };

        let next_depth = this.depth + 1;
        let mut next = Vec::new();
        for &code in &this.frontier {
            for &g in gens {
                let v = packer.apply(code, g);
                if this.seen.contains_key(&v) {
                    continue;
                }
                this.seen.insert(v, next_depth);
                if let Some(&d) = other.seen.get(&v) {
                    best = best.min(next_depth + d);
                }
                next.push(v);
            }
        }
        this.frontier = next;
        this.depth = next_depth;

        let states = (sides[0].seen.len() + sides[1].seen.len()) as u64;
        check_budget(
            &format!("bidirectional search for n={n}"),
            states * BYTES_PER_STATE,
            limits,
        )?;
        if sides[grow].frontier.is_empty() {
            // The whole component was exhausted without meeting; the graph is
            // connected, so this only happens once `best` is final.
            break;
        }
    }
    Ok(best)
}
