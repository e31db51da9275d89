//! Enumeration of constellations realizing a three-point datum and their
//! decomposition into strong equivalence classes.
//!
//! One slot is frozen to the canonical representative of its cycle type
//! (largest class), a second slot runs over its whole conjugacy class
//! (smallest class) and the third slot is forced by the product condition.
//! Hits are then grouped into orbits of the centralizer of the frozen slot.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::constellation::{CanonicalKey, Constellation};
use crate::error::{Error, Result};
use crate::partition::{is_compatible, BranchDatum, Partition};
use crate::perm::{transitive_pair, Permutation};
use crate::union_find::UnionFind;

/// Above this centralizer order, orbits are merged by canonical form rather
/// than by walking centralizer generators.
pub const CENTRALIZER_WALK_LIMIT: u128 = 10_000;

/// Depth of the decision prefix used to split a class into parallel chunks.
const CHUNK_DEPTH: usize = 3;

#[derive(Clone, Copy, Debug)]
struct OpenCycle {
    start: u32,
    len: usize,
    placed: usize,
    last: u32,
}

#[derive(Clone, Copy, Debug)]
enum Choice {
    Open { point: u32, length_idx: usize },
    Extend { point: u32 },
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    before: Option<OpenCycle>,
    choice: Choice,
}

/// Iterator over every permutation of a given cycle type, each exactly once.
///
/// Permutations are built point by point: a new cycle always opens at the
/// least unused point (so it is written from its minimum), the open step
/// chooses the cycle length and each extend step chooses the next point.
/// The walk is a depth-first backtrack over these choices.
#[derive(Clone, Debug)]
pub struct ClassIter {
    lengths: Vec<usize>,
    remaining: Vec<usize>,
    images: Vec<u32>,
    used: Vec<bool>,
    cycle: Option<OpenCycle>,
    stack: Vec<Frame>,
    floor: usize,
    target: usize,
    started: bool,
    done: bool,
}

impl ClassIter {
    fn with_target(t: &Partition, target: usize) -> Self {
        let mults = t.multiplicities();
        let d = t.degree();
        Self {
            lengths: mults.iter().map(|&(m, _)| m).collect(),
            remaining: mults.iter().map(|&(_, c)| c).collect(),
            images: vec![0; d],
            used: vec![false; d],
            cycle: None,
            stack: Vec::with_capacity(d),
            floor: 0,
            target: target.min(d),
            started: false,
            done: false,
        }
    }

    pub fn new(t: &Partition) -> Self {
        Self::with_target(t, t.degree())
    }

    /// Splits the class into disjoint chunks, each fixing the first `depth`
    /// construction choices. Concatenating the chunks in order yields exactly
    /// the sequence produced by [`ClassIter::new`].
    pub fn chunks(t: &Partition, depth: usize) -> Vec<ClassIter> {
        let d = t.degree();
        let mut walker = Self::with_target(t, depth);
        let mut out = Vec::new();
        while walker.step() {
            let mut chunk = walker.clone();
            chunk.floor = chunk.stack.len();
            chunk.target = d;
            chunk.started = false;
            chunk.done = false;
            out.push(chunk);
        }
        out
    }

    fn first_option(&self) -> Option<Choice> {
        match self.cycle {
            None => {
                let point = self.used.iter().position(|u| !u)? as u32;
                let length_idx = self.remaining.iter().position(|&c| c > 0)?;
                Some(Choice::Open { point, length_idx })
            }
            Some(_) => {
                let point = self.used.iter().position(|u| !u)? as u32;
                Some(Choice::Extend { point })
            }
        }
    }

    fn next_option(&self, after: Choice) -> Option<Choice> {
        match after {
            Choice::Open { point, length_idx } => {
                let next = (length_idx + 1..self.remaining.len()).find(|&i| self.remaining[i] > 0)?;
                Some(Choice::Open {
                    point,
                    length_idx: next,
                })
            }
            Choice::Extend { point } => {
                let next = (point as usize + 1..self.used.len()).find(|&i| !self.used[i])?;
                Some(Choice::Extend { point: next as u32 })
            }
        }
    }

    fn apply(&mut self, choice: Choice) {
        self.stack.push(Frame {
            before: self.cycle,
            choice,
        });
        match choice {
            Choice::Open { point, length_idx } => {
                self.used[point as usize] = true;
                self.remaining[length_idx] -= 1;
                let len = self.lengths[length_idx];
                if len == 1 {
                    self.images[point as usize] = point;
                    self.cycle = None;
                } else {
                    self.cycle = Some(OpenCycle {
                        start: point,
                        len,
                        placed: 1,
                        last: point,
                    });
                }
            }
            Choice::Extend { point } => {
                let mut c = self.cycle.expect("extend needs an open cycle");
                self.used[point as usize] = true;
                self.images[c.last as usize] = point;
                c.placed += 1;
                c.last = point;
                if c.placed == c.len {
                    self.images[point as usize] = c.start;
                    self.cycle = None;
                } else {
                    self.cycle = Some(c);
                }
            }
        }
    }

    fn undo(&mut self) -> Frame {
        let frame = self.stack.pop().expect("undo on empty stack");
        match frame.choice {
            Choice::Open { point, length_idx } => {
                self.used[point as usize] = false;
                self.remaining[length_idx] += 1;
            }
            Choice::Extend { point } => {
                self.used[point as usize] = false;
            }
        }
        self.cycle = frame.before;
        frame
    }

    fn descend(&mut self) {
        while self.stack.len() < self.target {
            let choice = self
                .first_option()
                .expect("a partial permutation of the right type always extends");
            self.apply(choice);
        }
    }

    fn advance(&mut self) -> bool {
        loop {
            if self.stack.len() <= self.floor {
                return false;
            }
            let frame = self.undo();
            if let Some(choice) = self.next_option(frame.choice) {
                self.apply(choice);
                self.descend();
                return true;
            }
        }
    }

    /// Moves to the next complete state; `false` once exhausted.
    fn step(&mut self) -> bool {
        if self.done {
            return false;
        }
        let ok = if self.started {
            self.advance()
        } else {
            self.started = true;
            self.descend();
            true
        };
        if !ok {
            self.done = true;
        }
        ok
    }

    /// Image array of the current permutation (valid after a successful step).
    fn current(&self) -> &[u32] {
        &self.images
    }

    /// Calls `f` on each remaining permutation's image array without
    /// allocating.
    pub fn for_each_images(mut self, mut f: impl FnMut(&[u32])) {
        while self.step() {
            f(self.current());
        }
    }
}

impl Iterator for ClassIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.step() {
            Some(Permutation::from_raw(self.images.clone()))
        } else {
            None
        }
    }
}

/// Every permutation of cycle type `t`, each once; there are
/// `d! / prod(m^{c_m} c_m!)` of them.
pub fn iterate_class(t: &Partition) -> ClassIter {
    ClassIter::new(t)
}

/// One strong equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongClass {
    /// Representative in datum order.
    pub representative: Constellation,
    /// Order of the automorphism group (centralizer of the triple in `S_d`).
    pub automorphism_order: u128,
}

/// Strong equivalence classes of a datum, with tuple counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongClassSet {
    pub datum: BranchDatum,
    pub classes: Vec<StrongClass>,
    /// Ordered transitive triples with product identity and the datum's types.
    pub tuple_count: u128,
    /// Same without the transitivity requirement.
    pub raw_tuple_count: u128,
}

impl StrongClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `sum d!/|Aut|` over the classes; equals `tuple_count`.
    pub fn orbit_sum(&self) -> u128 {
        let fact = crate::partition::factorial(self.datum.degree());
        self.classes.iter().map(|c| fact / c.automorphism_order).sum()
    }
}

/// How the three slots are used by the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct SlotPlan {
    pub fixed: usize,
    pub iterated: usize,
    pub forced: usize,
}

impl SlotPlan {
    pub(crate) fn for_datum(datum: &BranchDatum) -> Self {
        let sizes: Vec<u128> = datum.partitions().iter().map(|p| p.class_size()).collect();
        let fixed = (0..3).fold(0, |best, i| if sizes[i] > sizes[best] { i } else { best });
        let others: Vec<usize> = (0..3).filter(|&i| i != fixed).collect();
        let iterated = if sizes[others[1]] < sizes[others[0]] {
            others[1]
        } else {
            others[0]
        };
        let forced = 3 - fixed - iterated;
        Self {
            fixed,
            iterated,
            forced,
        }
    }

    /// Whether the iterated slot directly follows the fixed one cyclically.
    fn iterated_follows(&self) -> bool {
        self.iterated == (self.fixed + 1) % 3
    }
}

/// Hits of the inner loop for one chunk: iterated-slot image arrays of
/// transitive hits, plus the raw (transitivity-free) hit count.
struct ChunkHits {
    transitive: Vec<Vec<u32>>,
    raw: u128,
}

fn scan_chunk(chunk: ClassIter, fixed: &[u32], target: &[usize], follows: bool) -> ChunkHits {
    let d = fixed.len();
    let mut product = vec![0u32; d];
    let mut seen = vec![false; d];
    let mut stack = Vec::with_capacity(d);
    let mut hist = vec![0usize; d + 1];
    let mut out = ChunkHits {
        transitive: Vec::new(),
        raw: 0,
    };
    chunk.for_each_images(|y| {
        // The forced slot is the inverse of fixed·y (or y·fixed); inverses
        // share the cycle type, so test the product directly.
        if follows {
            for i in 0..d {
                product[i] = y[fixed[i] as usize];
            }
        } else {
            for i in 0..d {
                product[i] = fixed[y[i] as usize];
            }
        }
        hist.iter_mut().for_each(|h| *h = 0);
        for i in 0..d {
            seen[i] = false;
        }
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = product[x] as usize;
            }
            hist[len] += 1;
        }
        if hist != target {
            return;
        }
        out.raw += 1;
        if transitive_pair(fixed, y, &mut stack, &mut seen) {
            out.transitive.push(y.to_vec());
        }
    });
    out
}

fn histogram(t: &Partition) -> Vec<usize> {
    let mut h = vec![0; t.degree() + 1];
    for &p in t.parts() {
        h[p] += 1;
    }
    h
}

fn assemble(plan: SlotPlan, fixed: &Permutation, y: &[u32]) -> Constellation {
    let y = Permutation::from_raw(y.to_vec());
    let forced = if plan.iterated_follows() {
        fixed.then(&y).inverse()
    } else {
        y.then(fixed).inverse()
    };
    let mut slots: [Option<Permutation>; 3] = [None, None, None];
    slots[plan.fixed] = Some(fixed.clone());
    slots[plan.iterated] = Some(y);
    slots[plan.forced] = Some(forced);
    Constellation::from_parts_unchecked(slots.map(|s| s.expect("all slots filled")))
}

/// Checks the datum is a compatible three-point datum.
pub(crate) fn require_three_point(datum: &BranchDatum) -> Result<()> {
    if datum.branch_points() != 3 {
        return Err(Error::Unsupported(format!(
            "enumeration needs exactly 3 branching points, got {}",
            datum.branch_points()
        )));
    }
    if !is_compatible(datum) {
        return Err(Error::Incompatible(format!(
            "{datum} with genus {} fails Riemann–Hurwitz",
            datum.cover_genus()
        )));
    }
    Ok(())
}

/// Strategy used to merge hits into centralizer orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitStrategy {
    /// Pick by centralizer order (walk below [`CENTRALIZER_WALK_LIMIT`]).
    Auto,
    /// Union hits related by a centralizer generator.
    CentralizerWalk,
    /// Group hits by canonical form of the whole triple.
    CanonicalForm,
}

/// Enumerates the strong classes of a compatible three-point datum.
pub fn enumerate_strong(datum: &BranchDatum) -> Result<StrongClassSet> {
    enumerate_strong_with(datum, OrbitStrategy::Auto)
}

pub fn enumerate_strong_with(datum: &BranchDatum, strategy: OrbitStrategy) -> Result<StrongClassSet> {
    require_three_point(datum)?;
    let plan = SlotPlan::for_datum(datum);
    let parts = datum.partitions();
    let fixed_type = &parts[plan.fixed];
    let fixed = Permutation::canonical_of_type(fixed_type);
    let target = histogram(&parts[plan.forced]);
    let follows = plan.iterated_follows();

    let chunks = ClassIter::chunks(&parts[plan.iterated], CHUNK_DEPTH);
    let results: Vec<ChunkHits> = chunks
        .into_par_iter()
        .map(|chunk| scan_chunk(chunk, fixed.images(), &target, follows))
        .collect();
    let raw_hits: u128 = results.iter().map(|r| r.raw).sum();
    let hits: Vec<Vec<u32>> = results.into_iter().flat_map(|r| r.transitive).collect();

    let centralizer_order = fixed_type.centralizer_order();
    let use_walk = match strategy {
        OrbitStrategy::Auto => centralizer_order <= CENTRALIZER_WALK_LIMIT,
        OrbitStrategy::CentralizerWalk => true,
        OrbitStrategy::CanonicalForm => false,
    };
    let labels = if use_walk {
        orbits_by_walk(&fixed, &hits)?
    } else {
        orbits_by_canonical_form(plan, &fixed, &hits)
    };

    let class_count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); class_count];
    for (i, &l) in labels.iter().enumerate() {
        members[l].push(i);
    }
    let mut classes: Vec<StrongClass> = members
        .into_iter()
        .map(|idx| {
            let representative = idx
                .iter()
                .map(|&i| assemble(plan, &fixed, &hits[i]))
                .min_by(|a, b| a.image_key().cmp(&b.image_key()))
                .expect("orbits are non-empty");
            StrongClass {
                representative,
                automorphism_order: centralizer_order / idx.len() as u128,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.representative.image_key().cmp(&b.representative.image_key()));

    let class_size = fixed_type.class_size();
    let set = StrongClassSet {
        datum: datum.clone(),
        classes,
        tuple_count: class_size * hits.len() as u128,
        raw_tuple_count: class_size * raw_hits,
    };
    debug_assert_eq!(set.orbit_sum(), set.tuple_count);
    if cfg!(debug_assertions) {
        for c in &set.classes {
            check_constellation(datum, &c.representative)?;
        }
    }
    Ok(set)
}

/// Every transitive hit of the search as a constellation: one per element of
/// the iterated class that completes the fixed canonical representative.
pub fn transitive_hits(datum: &BranchDatum) -> Result<Vec<Constellation>> {
    require_three_point(datum)?;
    let plan = SlotPlan::for_datum(datum);
    let parts = datum.partitions();
    let fixed = Permutation::canonical_of_type(&parts[plan.fixed]);
    let target = histogram(&parts[plan.forced]);
    let follows = plan.iterated_follows();
    Ok(ClassIter::chunks(&parts[plan.iterated], CHUNK_DEPTH)
        .into_par_iter()
        .map(|chunk| scan_chunk(chunk, fixed.images(), &target, follows).transitive)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .map(|y| assemble(plan, &fixed, &y))
        .collect())
}

/// Product-one triples with the given cycle types, transitive or not. Unlike
/// [`enumerate_strong`] this needs no compatibility, so it also counts the
/// disconnected covers of incompatible type triples.
pub fn count_product_one_triples(types: [&Partition; 3]) -> Result<u128> {
    let d = types[0].degree();
    let datum = BranchDatum::new(0, d, types.iter().map(|&t| t.clone()).collect())?;
    let plan = SlotPlan::for_datum(&datum);
    let parts = datum.partitions();
    let fixed = Permutation::canonical_of_type(&parts[plan.fixed]);
    let target = histogram(&parts[plan.forced]);
    let follows = plan.iterated_follows();
    let raw: u128 = ClassIter::chunks(&parts[plan.iterated], CHUNK_DEPTH)
        .into_par_iter()
        .map(|chunk| scan_chunk(chunk, fixed.images(), &target, follows).raw)
        .sum();
    Ok(raw * parts[plan.fixed].class_size())
}

fn orbits_by_walk(fixed: &Permutation, hits: &[Vec<u32>]) -> Result<Vec<usize>> {
    let gens = fixed.centralizer_generators()?;
    let index: HashMap<&[u32], usize> = hits.iter().enumerate().map(|(i, h)| (h.as_slice(), i)).collect();
    let mut uf = UnionFind::new(hits.len());
    for (i, h) in hits.iter().enumerate() {
        let y = Permutation::from_raw(h.clone());
        for g in &gens {
            let conj = y.conjugate(g);
            let j = *index.get(conj.images()).ok_or_else(|| {
                Error::Inconsistent("conjugate of a hit by a centralizer element is not a hit".into())
            })?;
            uf.union(i, j);
        }
    }
    Ok(uf.labels())
}

fn orbits_by_canonical_form(plan: SlotPlan, fixed: &Permutation, hits: &[Vec<u32>]) -> Vec<usize> {
    let keys: Vec<CanonicalKey> = hits
        .par_iter()
        .map(|h| assemble(plan, fixed, h).canonical_key())
        .collect();
    let mut label_of: HashMap<&CanonicalKey, usize> = HashMap::new();
    keys.iter()
        .map(|k| {
            let next = label_of.len();
            *label_of.entry(k).or_insert(next)
        })
        .collect()
}

/// Verifies every constellation invariant against the datum.
pub fn check_constellation(datum: &BranchDatum, c: &Constellation) -> Result<()> {
    let rebuilt = Constellation::new(c.get(0).clone(), c.get(1).clone(), c.get(2).clone())?;
    for (slot, (got, want)) in rebuilt.cycle_types().iter().zip(datum.partitions()).enumerate() {
        if got != want {
            return Err(Error::Inconsistent(format!(
                "slot {} has type {got}, expected {want}",
                slot + 1
            )));
        }
    }
    let g = c.genus()?;
    if g != datum.cover_genus() {
        return Err(Error::Inconsistent(format!(
            "constellation has genus {g}, datum says {}",
            datum.cover_genus()
        )));
    }
    Ok(())
}
