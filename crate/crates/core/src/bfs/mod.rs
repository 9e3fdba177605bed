//! Exact distances in the Cayley graph by breadth-first search over `S_n`,
//! with states indexed by lexicographic rank.
//!
//! The full search keeps one byte per permutation. Levels are expanded
//! synchronously: workers scan disjoint rank ranges for the current level
//! and claim unreached neighbours with a compare-and-swap. A claim only ever
//! writes `level + 1`, so the finished table does not depend on scheduling.

mod bidir;
mod dump;
mod packed;

use std::sync::atomic::{AtomicU64, AtomicU8, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{factorial, rank, Generator, Permutation};
use crate::words::GenWord;
use packed::Packer;

pub use dump::{TABLE_MAGIC, TABLE_VERSION};

/// Marks a rank the search has not reached.
pub const UNREACHED: u8 = u8::MAX;

/// Largest degree for a full distance table.
pub const MAX_BFS_DEGREE: usize = 12;

/// Largest degree for a bidirectional pair query.
pub const MAX_BIDIR_DEGREE: usize = 13;

pub const DEFAULT_MEMORY_BUDGET: u64 = 2 << 30;

/// Ranks handed to a worker at a time.
const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub memory_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            memory_budget: DEFAULT_MEMORY_BUDGET,
        }
    }
}

impl SearchLimits {
    pub fn with_budget(memory_budget: u64) -> Self {
        SearchLimits { memory_budget }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMethod {
    FullBfs,
    Bidirectional,
}

/// Bytes a full table of degree `n` needs: the distance array plus one
/// visited bit per state of headroom.
pub fn table_bytes(n: usize) -> Option<u64> {
    let states = factorial(n)?;
    states.checked_add(states.div_ceil(8))
}

fn generators(n: usize) -> &'static [Generator] {
    if n >= 2 {
        &Generator::ALL
    } else {
        &Generator::ALL[1..]
    }
}

/// Single-source distances to every permutation of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    source: Permutation,
    dist: Vec<u8>,
    max_distance: u8,
    witnesses: Vec<u64>,
}

impl DistanceTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn max_distance(&self) -> u32 {
        self.max_distance as u32
    }

    /// Ranks at maximum distance, ascending.
    pub fn witnesses(&self) -> &[u64] {
        &self.witnesses
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.dist
    }

    pub fn distance_by_rank(&self, r: u64) -> Option<u32> {
        self.dist.get(r as usize).map(|&d| d as u32)
    }

    /// Distance from the source to `target`.
    pub fn distance_to(&self, target: &Permutation) -> Result<u32> {
        self.check(target)?;
        Ok(self.dist[rank(target)? as usize] as u32)
    }

    /// Distance between two arbitrary permutations. Only meaningful for a
    /// table sourced at the identity: `dist(a, b) = dist(id, a⁻¹·b)`.
    pub fn distance_between(&self, a: &Permutation, b: &Permutation) -> Result<u32> {
        if !self.source.is_identity() {
            return Err(Error::OutOfRange(
                "distance_between needs an identity-sourced table".into(),
            ));
        }
        self.distance_to(&a.inverse().compose(b)?)
    }

    /// `dist(π, Orb(ξ))` and the smallest rotation `k` attaining it.
    pub fn distance_to_orbit(&self, pi: &Permutation, xi: &Permutation) -> Result<(u32, usize)> {
        let mut best = (u32::MAX, 0);
        for k in 0..xi.degree() {
            let d = self.distance_between(pi, &xi.rotate(k as i64))?;
            if d < best.0 {
                best = (d, k);
            }
        }
        Ok(best)
    }

    /// Counts of states at each distance `0..=max_distance`.
    pub fn histogram(&self) -> Vec<u64> {
        let mut hist = vec![0u64; self.max_distance as usize + 1];
        for &d in &self.dist {
            hist[d as usize] += 1;
        }
        hist
    }

    /// A shortest word from the source to `target`.
    pub fn geodesic(&self, target: &Permutation) -> Result<GenWord> {
        self.check(target)?;
        let mut current = target.clone();
        let mut d = self.distance_to(&current)?;
        let mut tokens = Vec::with_capacity(d as usize);
        while d > 0 {
            let (g, prev) = generators(self.n)
                .iter()
                .map(|&g| (g, current.apply(g.inverse()).expect("degree checked")))
                .find(|(_, prev)| self.dist[rank(prev).unwrap() as usize] as u32 + 1 == d)
                .ok_or_else(|| Error::BadTable("no predecessor one level closer".into()))?;
            tokens.push(g);
            current = prev;
            d -= 1;
        }
        tokens.reverse();
        GenWord::new(self.n, tokens)
    }

    fn check(&self, target: &Permutation) -> Result<()> {
        if target.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: target.degree(),
                right: self.n,
            });
        }
        Ok(())
    }

    fn from_parts(n: usize, source: Permutation, dist: Vec<u8>) -> Self {
        let max_distance = dist.par_iter().copied().max().unwrap_or(0);
        let witnesses = dist
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == max_distance)
            .map(|(r, _)| r as u64)
            .collect();
        DistanceTable {
            n,
            source,
            dist,
            max_distance,
            witnesses,
        }
    }
}

fn check_bfs_degree(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::InvalidDegree { n, min: 1, max });
    }
    Ok(())
}

fn check_budget(what: &str, needed: u64, limits: &SearchLimits) -> Result<()> {
    if needed > limits.memory_budget {
        return Err(Error::ResourceLimit {
            what: what.to_string(),
            needed,
            budget: limits.memory_budget,
        });
    }
    Ok(())
}

/// Exact distances from `source` to all of `S_n`.
///
/// Fails with [`Error::ResourceLimit`] before allocating if the table does
/// not fit the budget. The budget is checked before the degree cap, so an
/// oversized request under a normal budget is reported as a resource refusal.
pub fn bfs_all_distances(source: &Permutation, limits: &SearchLimits) -> Result<DistanceTable> {
    let n = source.degree();
    check_budget(
        &format!("distance table for n={n}"),
        table_bytes(n).unwrap_or(u64::MAX),
        limits,
    )?;
    check_bfs_degree(n, MAX_BFS_DEGREE)?;

    let states = factorial(n).expect("n <= 12");
    let dist: Vec<AtomicU8> = (0..states).map(|_| AtomicU8::new(UNREACHED)).collect();
    dist[rank(source)? as usize].store(0, Ordering::Relaxed);

    let packer = Packer::new(n);
    let gens = generators(n);
    let chunks = states.div_ceil(CHUNK);
    let mut level: u8 = 0;
    loop {
        let claimed = AtomicU64::new(0);
        (0..chunks).into_par_iter().for_each(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(states);
            let mut local = 0u64;
            for r in lo..hi {
                if dist[r as usize].load(Ordering::Relaxed) != level {
                    continue;
                }
                let code = unrank_packed(n, r);
                for &g in gens {
                    let next = crate::perm::rank_values(packer.values(packer.apply(code, g)), n);
                    let cell = &dist[next as usize];
                    if cell.load(Ordering::Relaxed) == UNREACHED
                        && cell
                            .compare_exchange(
                                UNREACHED,
                                level + 1,
                                Ordering::Relaxed,
                                Ordering::Relaxed,
                            )
                            .is_ok()
                    {
                        local += 1;
                    }
                }
            }
            claimed.fetch_add(local, Ordering::Relaxed);
        });
        if claimed.into_inner() == 0 {
            break;
        }
        level += 1;
        assert!(level < UNREACHED, "distance overflowed the byte table");
    }

    let dist: Vec<u8> = dist.into_iter().map(AtomicU8::into_inner).collect();
    debug_assert!(!dist.contains(&UNREACHED));
    Ok(DistanceTable::from_parts(n, source.clone(), dist))
}

fn unrank_packed(n: usize, r: u64) -> u64 {
    let mut code = 0u64;
    crate::perm::unrank_values(n, r, |pos, v| code |= (v as u64) << (4 * pos));
    code
}

/// The diameter, computed as the eccentricity of the identity (Cayley
/// graphs are vertex-transitive), with the lowest-rank farthest permutation.
pub fn diameter(n: usize, limits: &SearchLimits) -> Result<(u32, Permutation)> {
    let table = bfs_all_distances(&Permutation::identity(n)?, limits)?;
    let witness = crate::perm::unrank(n, table.witnesses[0])?;
    Ok((table.max_distance(), witness))
}

/// Exact `dist(a, b)`.
pub fn pair_distance(
    a: &Permutation,
    b: &Permutation,
    method: PairMethod,
    limits: &SearchLimits,
) -> Result<u32> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let target = a.inverse().compose(b)?;
    match method {
        PairMethod::FullBfs => {
            let table = bfs_all_distances(&Permutation::identity(a.degree())?, limits)?;
            table.distance_to(&target)
        }
        PairMethod::Bidirectional => bidir::distance_from_identity(&target, limits),
    }
}

/// `dist(π, Orb(ξ))` and the smallest minimizing rotation of `ξ`.
pub fn dist_to_orbit(
    pi: &Permutation,
    xi: &Permutation,
    limits: &SearchLimits,
) -> Result<(u32, usize)> {
    if pi.degree() != xi.degree() {
        return Err(Error::DegreeMismatch {
            left: pi.degree(),
            right: xi.degree(),
        });
    }
    let table = bfs_all_distances(&Permutation::identity(pi.degree())?, limits)?;
    table.distance_to_orbit(pi, xi)
}
