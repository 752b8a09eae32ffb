//! Permutations and permutation groups.
//!
//! Conventions used throughout the crate:
//!
//! * Points are `0..degree` (`u32`).
//! * Groups act on the **right**: `compose(p, q)` means "apply `p`, then
//!   `q`", so `x^(pq) = (x^p)^q` and composition matches group
//!   multiplication in every regular representation built by
//!   [`crate::coset`].
//! * All searches and enumerations are deterministic: base points are
//!   chosen as the smallest moved point (after any caller-supplied
//!   priority prefix), orbits are explored breadth-first with generators
//!   in listed order, and element iteration follows a fixed odometer
//!   order over the stabilizer chain.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::{Error, Result};

/// A permutation of `0..degree`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]({})", self.degree(), self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl Permutation {
    /// The identity on `0..degree`.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from an image vector, checking that it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n || seen[im as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "images of length {n} do not form a bijection (offending image {im})"
                )));
            }
            seen[im as usize] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Build from disjoint cycles on `0..degree` (points absent from all
    /// cycles are fixed). Intended for tests and frozen constants.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                let q = cyc[(k + 1) % cyc.len()];
                if (p as usize) >= degree || touched[p as usize] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {p} out of range or repeated"
                    )));
                }
                touched[p as usize] = true;
                images[p as usize] = q;
            }
        }
        Permutation::from_images(images)
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point.
    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// The underlying image vector.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other` (right-action composition).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&im| other.images[im as usize])
                .collect(),
        }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (p, &im) in self.images.iter().enumerate() {
            images[im as usize] = p as u32;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Conjugate `self^by = by^{-1} · self · by`.
    pub fn conjugate_by(&self, by: &Permutation) -> Permutation {
        by.inverse().compose(self).compose(by)
    }

    /// Commutator `self^{-1} other^{-1} self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &im)| p as u32 == im)
    }

    /// Multiplicative order (least common multiple of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start as u32;
            while !seen[p as usize] {
                seen[p as usize] = true;
                p = self.image(p);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Smallest point moved by this permutation, if any.
    pub fn smallest_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(p, &im)| *p as u32 != im)
            .map(|(p, _)| p as u32)
    }

    /// All moved points, ascending.
    pub fn moved_points(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|(p, &im)| *p as u32 != im)
            .map(|(p, _)| p as u32)
            .collect()
    }

    /// Non-trivial cycles, each rotated to start at its smallest point,
    /// ordered by that smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() as u32 {
            if seen[start as usize] || self.image(start) == start {
                seen[start as usize] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p as usize] {
                seen[p as usize] = true;
                cyc.push(p);
                p = self.image(p);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle notation with 0-based points, e.g. `(0 1 2)(4 5)`; the
    /// identity renders as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|cyc| {
                let body = cyc
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                format!("({body})")
            })
            .collect::<Vec<_>>()
            .concat()
    }

    /// Integer power (negative exponents use the inverse).
    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

// ---------------------------------------------------------------------------
// Stabilizer chains
// ---------------------------------------------------------------------------

/// One level of a stabilizer chain: a base point, the generators of the
/// group at this level, and a transversal for the base orbit.
#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    /// Orbit of `base`, ascending.
    orbit_sorted: Vec<u32>,
    /// `transversal[&p]` maps `base` to `p`.
    transversal: HashMap<u32, Permutation>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut transversal = HashMap::new();
        transversal.insert(base, Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit_sorted: vec![base],
            transversal,
        }
    }
}

/// A deterministic stabilizer chain (Schreier–Sims).
#[derive(Clone, Debug)]
struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Build a chain for the group generated by `gens`. Base points are
    /// taken from `hint` in order (each hint point becomes a base even if
    /// its orbit is trivial), then by the smallest-moved-point rule.
    fn build(degree: usize, gens: &[Permutation], hint: &[u32]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let nontrivial: Vec<Permutation> = gens
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if nontrivial.is_empty() {
            return chain;
        }
        chain.ensure_level(0, &nontrivial[0], hint);
        for g in nontrivial {
            chain.levels[0].gens.push(g);
        }
        chain.close(0, hint);
        chain
    }

    /// Select a base for a new level at index `level`: the next unused
    /// hint point if any remain, otherwise the smallest point moved by
    /// `witness`.
    fn pick_base(&self, level: usize, witness: &Permutation, hint: &[u32]) -> u32 {
        if level < hint.len() {
            return hint[level];
        }
        witness
            .smallest_moved()
            .expect("witness for a new level must move a point")
    }

    fn ensure_level(&mut self, level: usize, witness: &Permutation, hint: &[u32]) {
        if level == self.levels.len() {
            let base = self.pick_base(level, witness, hint);
            self.levels.push(Level::new(self.degree, base));
        }
    }

    /// Recompute the orbit/transversal of `level` and push every Schreier
    /// generator that is not yet a member of the subchain below it down
    /// into the chain, closing recursively.
    fn close(&mut self, level: usize, hint: &[u32]) {
        // Orbit closure (breadth-first, generators in listed order).
        {
            let lvl = &mut self.levels[level];
            let mut queue: VecDeque<u32> = lvl.transversal.keys().copied().collect();
            let mut queue_sorted: Vec<u32> = queue.iter().copied().collect();
            queue_sorted.sort_unstable();
            queue = queue_sorted.into();
            while let Some(p) = queue.pop_front() {
                let rep = lvl.transversal[&p].clone();
                for g in lvl.gens.clone() {
                    let q = g.image(p);
                    if !lvl.transversal.contains_key(&q) {
                        lvl.transversal.insert(q, rep.compose(&g));
                        queue.push_back(q);
                    }
                }
            }
            let mut orbit: Vec<u32> = lvl.transversal.keys().copied().collect();
            orbit.sort_unstable();
            lvl.orbit_sorted = orbit;
        }
        // Schreier generators.
        let orbit = self.levels[level].orbit_sorted.clone();
        let gens = self.levels[level].gens.clone();
        for &p in &orbit {
            let rep = self.levels[level].transversal[&p].clone();
            for g in &gens {
                let q = g.image(p);
                let rep_q = self.levels[level].transversal[&q].clone();
                let schreier = rep.compose(g).compose(&rep_q.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stuck) = self.strip(schreier, level + 1);
                if !residue.is_identity() {
                    // The residue fixes every base point above `stuck`, so it
                    // is a generator of every intermediate stabilizer: add it
                    // to each level it belongs to, then re-close the subchain
                    // from the shallowest level whose generating set grew.
                    self.ensure_level(stuck, &residue, hint);
                    for k in (level + 1)..=stuck {
                        self.levels[k].gens.push(residue.clone());
                    }
                    self.close(level + 1, hint);
                }
            }
        }
    }

    /// Sift `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (idx, lvl) in self.levels.iter().enumerate().skip(from) {
            if g.is_identity() {
                return (g, idx);
            }
            let beta = g.image(lvl.base);
            match lvl.transversal.get(&beta) {
                Some(rep) => g = g.compose(&rep.inverse()),
                None => return (g, idx),
            }
        }
        (g, self.levels.len())
    }

    fn is_member(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.strip(g.clone(), 0);
        residue.is_identity()
    }

    fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.orbit_sorted.len() as u64)
            .product()
    }
}

// ---------------------------------------------------------------------------
// Permutation groups
// ---------------------------------------------------------------------------

/// A finitely generated permutation group on `0..degree`, with a lazily
/// built deterministic stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    base_hint: Vec<u32>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            base_hint: self.base_hint.clone(),
            chain: match self.chain.get() {
                Some(c) => {
                    let cell = OnceLock::new();
                    let _ = cell.set(c.clone());
                    cell
                }
                None => OnceLock::new(),
            },
        }
    }
}

impl PermGroup {
    /// Group generated by `gens` on `0..degree`. Identity generators are
    /// dropped; duplicates are kept only once (first occurrence wins).
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_base_hint(degree, gens, Vec::new())
    }

    /// Like [`PermGroup::new`] but the stabilizer chain will use the given
    /// points (in order) as its first base points. Useful for extracting
    /// point stabilizers and transporters deterministically.
    pub fn with_base_hint(degree: usize, gens: Vec<Permutation>, hint: Vec<u32>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut generators = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
            if g.is_identity() {
                continue;
            }
            if seen.insert(g.clone()) {
                generators.push(g);
            }
        }
        for &p in &hint {
            if (p as usize) >= degree {
                return Err(Error::InvalidPermutation(format!(
                    "base hint point {p} out of range for degree {degree}"
                )));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            base_hint: hint,
            chain: OnceLock::new(),
        })
    }

    /// The trivial group on `0..degree`.
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            base_hint: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &self.base_hint))
    }

    /// Group order.
    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    /// Membership test via the stabilizer chain.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().is_member(g)
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.contains(g))
    }

    /// Orbit of a point, ascending.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(point);
        queue.push_back(point);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.image(p);
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        let mut orbit: Vec<u32> = seen.into_iter().collect();
        orbit.sort_unstable();
        orbit
    }

    /// All orbits on `0..degree`, each ascending, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if assigned[p as usize] {
                continue;
            }
            let orb = self.orbit(p);
            for &q in &orb {
                assigned[q as usize] = true;
            }
            out.push(orb);
        }
        out
    }

    /// Whether the group maps `omega` into itself and acts transitively on it.
    pub fn is_transitive_on(&self, omega: &[u32]) -> bool {
        if omega.is_empty() {
            return true;
        }
        let set: HashSet<u32> = omega.iter().copied().collect();
        if !self
            .generators
            .iter()
            .all(|g| omega.iter().all(|&p| set.contains(&g.image(p))))
        {
            return false;
        }
        let orbit = self.orbit(omega[0]);
        orbit.len() == set.len() && orbit.iter().all(|p| set.contains(p))
    }

    /// Whether the group acts regularly (transitively with trivial point
    /// stabilizers) on `omega`.
    pub fn is_regular_on(&self, omega: &[u32]) -> bool {
        !omega.is_empty() && self.is_transitive_on(omega) && self.order() == omega.len() as u64
    }

    /// Generators of the pointwise stabilizer of `prefix`, as a group.
    ///
    /// Builds a dedicated chain whose first base points are exactly
    /// `prefix` (in order); the generators stored at level `prefix.len()`
    /// then generate the stabilizer. If the chain ends earlier the
    /// stabilizer is trivial.
    pub fn pointwise_stabilizer(&self, prefix: &[u32]) -> Result<PermGroup> {
        for &p in prefix {
            if (p as usize) >= self.degree {
                return Err(Error::InvalidPermutation(format!(
                    "stabilizer point {p} out of range for degree {}",
                    self.degree
                )));
            }
        }
        let chain = StabChain::build(self.degree, &self.generators, prefix);
        let gens = chain
            .levels
            .get(prefix.len())
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        PermGroup::new(self.degree, gens)
    }

    /// Some element mapping `from` to `to`, or `None` if none exists.
    ///
    /// Cheap when the group's chain already has `from` as its first base
    /// (construct with [`PermGroup::with_base_hint`] for repeated queries).
    pub fn transporter(&self, from: u32, to: u32) -> Option<Permutation> {
        if from == to {
            return Some(Permutation::identity(self.degree));
        }
        let chain = self.chain();
        if let Some(first) = chain.levels.first() {
            if first.base == from {
                return first.transversal.get(&to).cloned();
            }
        }
        // Fall back to a temporary chain based at `from`.
        let tmp = StabChain::build(self.degree, &self.generators, &[from]);
        tmp.levels
            .first()
            .filter(|l| l.base == from)
            .and_then(|l| l.transversal.get(&to).cloned())
    }

    /// Deterministic iterator over all group elements (do not call on huge
    /// groups without need; cost is one composition per element).
    pub fn elements(&self) -> Elements<'_> {
        Elements::new(self.chain(), self.degree)
    }

    /// All elements by breadth-first closure, failing if the group has more
    /// than `cap` elements. Deterministic order (closure from the identity,
    /// generators in listed order).
    pub fn closure_elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let id = Permutation::identity(self.degree);
        seen.insert(id.clone());
        out.push(id.clone());
        queue.push_back(id);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = p.compose(g);
                if seen.insert(q.clone()) {
                    if out.len() >= cap {
                        return Err(Error::BoundExceeded(format!(
                            "group closure exceeds cap {cap}"
                        )));
                    }
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(out)
    }

    /// Sorted element list; canonical key for deduplicating subgroups.
    pub fn canonical_elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let mut elems = self.closure_elements(cap)?;
        elems.sort_unstable();
        Ok(elems)
    }

    /// Multiset of element orders as sorted `(order, count)` pairs.
    pub fn element_order_profile(&self, cap: usize) -> Result<Vec<(u64, u64)>> {
        let mut counts: HashMap<u64, u64> = HashMap::new();
        for e in self.closure_elements(cap)? {
            *counts.entry(e.order()).or_insert(0) += 1;
        }
        let mut out: Vec<(u64, u64)> = counts.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// One representative per conjugacy class, each the smallest element of
    /// its class, ordered ascending.
    pub fn conjugacy_class_reps(&self, cap: usize) -> Result<Vec<Permutation>> {
        let elems = self.canonical_elements(cap)?;
        let index: HashMap<&Permutation, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut cls = vec![usize::MAX; elems.len()];
        let mut reps = Vec::new();
        for start in 0..elems.len() {
            if cls[start] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(elems[start].clone());
            let mut queue = VecDeque::new();
            cls[start] = id;
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                for g in &self.generators {
                    let conj = elems[i].conjugate_by(g);
                    let j = index[&conj];
                    if cls[j] == usize::MAX {
                        cls[j] = id;
                        queue.push_back(j);
                    }
                }
            }
        }
        Ok(reps)
    }

    /// Abstract-group invariants used as a cheap isomorphism prefilter.
    pub fn invariants(&self, cap: usize) -> Result<GroupInvariants> {
        let elems = self.closure_elements(cap)?;
        let order = elems.len() as u64;
        let mut counts: HashMap<u64, u64> = HashMap::new();
        for e in &elems {
            *counts.entry(e.order()).or_insert(0) += 1;
        }
        let mut element_orders: Vec<(u64, u64)> = counts.into_iter().collect();
        element_orders.sort_unstable();

        let center_order = elems
            .iter()
            .filter(|e| {
                self.generators
                    .iter()
                    .all(|g| e.compose(g) == g.compose(e))
            })
            .count() as u64;

        // Derived subgroup: normal closure of generator commutators.
        let mut seeds: Vec<Permutation> = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.commutator(b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        let derived = loop {
            let closed = subgroup_closure(self.degree, &seeds);
            let mut missing: Vec<Permutation> = closed
                .iter()
                .flat_map(|d| self.generators.iter().map(move |g| d.conjugate_by(g)))
                .filter(|c| !closed.contains(c))
                .collect();
            if missing.is_empty() {
                break closed;
            }
            missing.sort_unstable();
            missing.dedup();
            seeds.extend(missing);
        };
        let derived_order = derived.len() as u64;

        // Exponent of the abelianization G / [G,G].
        let derived_sorted: Vec<Permutation> = {
            let mut v: Vec<Permutation> = derived.iter().cloned().collect();
            v.sort_unstable();
            v
        };
        let mut coset_of: HashMap<Permutation, u32> = HashMap::new();
        let mut coset_reps: Vec<Permutation> = Vec::new();
        for e in &elems {
            if coset_of.contains_key(e) {
                continue;
            }
            let cid = coset_reps.len() as u32;
            coset_reps.push(e.clone());
            for d in &derived_sorted {
                coset_of.insert(e.compose(d), cid);
            }
        }
        let id_coset = coset_of[&Permutation::identity(self.degree)];
        let mut abelian_exponent: u64 = 1;
        for rep in &coset_reps {
            let mut pw = rep.clone();
            let mut k: u64 = 1;
            while coset_of[&pw] != id_coset {
                pw = pw.compose(rep);
                k += 1;
            }
            abelian_exponent = lcm(abelian_exponent, k);
        }

        Ok(GroupInvariants {
            order,
            element_orders,
            center_order,
            derived_order,
            abelian_exponent,
        })
    }
}

/// Subgroup generated by `seeds`, as an element set, via breadth-first
/// closure under right multiplication by the seeds.
fn subgroup_closure(degree: usize, seeds: &[Permutation]) -> HashSet<Permutation> {
    let mut set = HashSet::new();
    let id = Permutation::identity(degree);
    set.insert(id.clone());
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for s in seeds {
            let y = x.compose(s);
            if set.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    set
}

/// Cheap abstract-group invariants (isomorphism prefilter).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order: u64,
    /// Sorted `(element order, multiplicity)` pairs.
    pub element_orders: Vec<(u64, u64)>,
    pub center_order: u64,
    pub derived_order: u64,
    pub abelian_exponent: u64,
}

/// Deterministic iterator over the elements of a group via its stabilizer
/// chain. The first digit of the odometer (level 0 transversal) moves
/// fastest, so each step costs one composition on average.
pub struct Elements<'a> {
    chain: &'a StabChain,
    degree: usize,
    digits: Vec<usize>,
    /// `suffix[i]` = product of transversal elements of levels `i..`.
    suffix: Vec<Permutation>,
    done: bool,
    fresh: bool,
}

impl<'a> Elements<'a> {
    fn new(chain: &'a StabChain, degree: usize) -> Self {
        let n = chain.levels.len();
        let mut it = Elements {
            chain,
            degree,
            digits: vec![0; n],
            suffix: vec![Permutation::identity(degree); n + 1],
            done: false,
            fresh: true,
        };
        it.recompute_from(n);
        it
    }

    /// Recompute `suffix[i]` for `i = from-1 .. 0` (suffix[n] is identity).
    fn recompute_from(&mut self, from: usize) {
        for i in (0..from).rev() {
            let lvl = &self.chain.levels[i];
            let point = lvl.orbit_sorted[self.digits[i]];
            let rep = &lvl.transversal[&point];
            self.suffix[i] = self.suffix[i + 1].compose(rep);
        }
    }
}

impl<'a> Iterator for Elements<'a> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.suffix.first().cloned().unwrap_or_else(|| {
                Permutation::identity(self.degree)
            }));
        }
        // Advance odometer, digit 0 fastest.
        let n = self.chain.levels.len();
        let mut i = 0;
        loop {
            if i == n {
                self.done = true;
                return None;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.chain.levels[i].orbit_sorted.len() {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        self.recompute_from(i + 1);
        Some(self.suffix[0].clone())
    }
}

// ---------------------------------------------------------------------------
// Conjugacy of subgroups
// ---------------------------------------------------------------------------

/// Size cap used when enumerating subgroup elements for prefilters.
const SUBGROUP_ENUM_CAP: usize = 1 << 20;

/// Find `g` in `ambient` with `h^g = k` (elementwise conjugation of the
/// subgroup), or `None` if the subgroups are not conjugate.
///
/// Both `h` and `k` must be subgroups of `ambient` (checked). The scan is
/// deterministic; when some `ambient`-orbit is acted on transitively by
/// `k`, the search is reduced to the stabilizer of that orbit's smallest
/// point (any conjugator can be corrected by an element of `k`).
pub fn find_conjugator(
    ambient: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
) -> Result<Option<Permutation>> {
    if h.degree() != ambient.degree() || k.degree() != ambient.degree() {
        return Err(Error::DegreeMismatch(h.degree(), ambient.degree()));
    }
    if !ambient.contains_group(h) {
        return Err(Error::NotSubgroup(
            "first subgroup not contained in ambient group".into(),
        ));
    }
    if !ambient.contains_group(k) {
        return Err(Error::NotSubgroup(
            "second subgroup not contained in ambient group".into(),
        ));
    }
    if h.order() != k.order() {
        return Ok(None);
    }
    if h.element_order_profile(SUBGROUP_ENUM_CAP)? != k.element_order_profile(SUBGROUP_ENUM_CAP)? {
        return Ok(None);
    }

    let check = |g: &Permutation| -> bool {
        h.generators().iter().all(|x| k.contains(&x.conjugate_by(g)))
    };

    // Reduction: if k acts transitively on some ambient orbit O, any
    // conjugator can be multiplied by an element of k to fix O's smallest
    // point, so it suffices to scan that point's stabilizer.
    for orbit in ambient.orbits() {
        if orbit.len() > 1 && k.is_transitive_on(&orbit) {
            let p = orbit[0];
            let stab = ambient.pointwise_stabilizer(&[p])?;
            for g in stab.elements() {
                if check(&g) {
                    return Ok(Some(g));
                }
            }
            return Ok(None);
        }
    }

    for g in ambient.elements() {
        if check(&g) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Generator-image searches
// ---------------------------------------------------------------------------

/// A witness isomorphism, recorded as the images of the source group's
/// generators (in source generator order), with the conjugating element
/// when the isomorphism arose from conjugation.
#[derive(Clone, Debug)]
pub struct GroupIso {
    pub images: Vec<Permutation>,
    pub conjugator: Option<Permutation>,
}

impl GroupIso {
    pub fn from_images(images: Vec<Permutation>) -> Self {
        GroupIso {
            images,
            conjugator: None,
        }
    }

    pub fn from_conjugation(source_gens: &[Permutation], g: Permutation) -> Self {
        GroupIso {
            images: source_gens.iter().map(|x| x.conjugate_by(&g)).collect(),
            conjugator: Some(g),
        }
    }
}

/// A relator word over source generators: `(generator index, exponent sign)`
/// letters.
pub type RelatorWord = Vec<(usize, i32)>;

/// Evaluate a word at the given generator images.
pub fn evaluate_word(word: &[(usize, i32)], images: &[Permutation], degree: usize) -> Permutation {
    let mut acc = Permutation::identity(degree);
    for &(g, e) in word {
        if e == 0 {
            continue;
        }
        let factor = if e > 0 {
            images[g].clone()
        } else {
            images[g].inverse()
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&factor);
        }
    }
    acc
}

/// Backtracking search for generator images defining an isomorphism.
///
/// `pools[i]` lists candidate images for source generator `i` (callers
/// pre-filter by element order and any side constraints). Source
/// generators are assigned in order of decreasing `src_orders` (stable on
/// ties); each relator is checked as soon as all its letters are
/// assigned; a full assignment must generate a group of order
/// `target_order`. Returns images in source generator order.
pub fn generator_image_search(
    relators: &[RelatorWord],
    src_orders: &[u64],
    pools: &[Vec<Permutation>],
    target_order: u64,
    degree: usize,
) -> Option<Vec<Permutation>> {
    let n = pools.len();
    assert_eq!(src_orders.len(), n);
    let mut order_idx: Vec<usize> = (0..n).collect();
    order_idx.sort_by_key(|&i| (std::cmp::Reverse(src_orders[i]), i));
    // position_of[i] = when generator i is assigned.
    let mut position_of = vec![0usize; n];
    for (pos, &i) in order_idx.iter().enumerate() {
        position_of[i] = pos;
    }
    // Schedule each relator at the position where its last letter appears.
    let mut scheduled: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (ri, rel) in relators.iter().enumerate() {
        let last = rel
            .iter()
            .map(|&(g, _)| position_of[g])
            .max()
            .unwrap_or(0);
        scheduled[last.min(n.saturating_sub(1))].push(ri);
    }

    struct Ctx<'a> {
        relators: &'a [RelatorWord],
        pools: &'a [Vec<Permutation>],
        order_idx: &'a [usize],
        scheduled: &'a [Vec<usize>],
        target_order: u64,
        degree: usize,
        src_orders: &'a [u64],
    }

    fn rec(ctx: &Ctx<'_>, pos: usize, images: &mut Vec<Option<Permutation>>) -> bool {
        let n = ctx.pools.len();
        if pos == n {
            let gens: Vec<Permutation> = images
                .iter()
                .map(|im| im.clone().expect("assigned"))
                .collect();
            let grp = match PermGroup::new(ctx.degree, gens) {
                Ok(g) => g,
                Err(_) => return false,
            };
            return grp.order() == ctx.target_order;
        }
        let gi = ctx.order_idx[pos];
        for cand in &ctx.pools[gi] {
            if cand.order() != ctx.src_orders[gi] {
                continue;
            }
            images[gi] = Some(cand.clone());
            let ok = ctx.scheduled[pos].iter().all(|&ri| {
                let rel = &ctx.relators[ri];
                let mut acc = Permutation::identity(ctx.degree);
                for &(g, e) in rel {
                    if e == 0 {
                        continue;
                    }
                    let base = images[g].as_ref().expect("scheduled after assignment");
                    let factor = if e > 0 { base.clone() } else { base.inverse() };
                    for _ in 0..e.unsigned_abs() {
                        acc = acc.compose(&factor);
                    }
                }
                acc.is_identity()
            });
            if ok && rec(ctx, pos + 1, images) {
                return true;
            }
            images[gi] = None;
        }
        false
    }

    let ctx = Ctx {
        relators,
        pools,
        order_idx: &order_idx,
        scheduled: &scheduled,
        target_order,
        degree,
        src_orders,
    };
    let mut images: Vec<Option<Permutation>> = vec![None; n];
    if n == 0 {
        return if target_order == 1 { Some(Vec::new()) } else { None };
    }
    if rec(&ctx, 0, &mut images) {
        Some(images.into_iter().map(|im| im.expect("assigned")).collect())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // x^(pq) = (x^p)^q
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 2, 1]);
        let ab = a.compose(&b);
        for x in 0..3u32 {
            assert_eq!(ab.image(x), b.image(a.image(x)));
        }
    }

    #[test]
    fn inverse_and_order() {
        let c = p(&[1, 2, 3, 0]);
        assert_eq!(c.order(), 4);
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(c.pow(2), c.compose(&c));
        assert_eq!(c.pow(-1), c.inverse());
    }

    #[test]
    fn cycle_string_roundtrip() {
        let c = Permutation::from_cycles(6, &[&[0, 1, 2], &[4, 5]]).unwrap();
        assert_eq!(c.cycle_string(), "(0 1 2)(4 5)");
        assert_eq!(Permutation::identity(4).cycle_string(), "()");
    }

    #[test]
    fn symmetric_group_order() {
        // Sym(5) generated by a transposition and a 5-cycle.
        let g = PermGroup::new(
            5,
            vec![p(&[1, 0, 2, 3, 4]), p(&[1, 2, 3, 4, 0])],
        )
        .unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.elements().count(), 120);
        let mut uniq: HashSet<Permutation> = HashSet::new();
        for e in g.elements() {
            assert!(uniq.insert(e));
        }
    }

    #[test]
    fn stabilizer_and_transporter() {
        let g = PermGroup::new(
            5,
            vec![p(&[1, 0, 2, 3, 4]), p(&[1, 2, 3, 4, 0])],
        )
        .unwrap();
        let stab = g.pointwise_stabilizer(&[0]).unwrap();
        assert_eq!(stab.order(), 24);
        assert!(stab.generators().iter().all(|x| x.image(0) == 0));
        let t = g.transporter(0, 3).unwrap();
        assert_eq!(t.image(0), 3);
        let stab2 = g.pointwise_stabilizer(&[0, 1]).unwrap();
        assert_eq!(stab2.order(), 6);
    }

    #[test]
    fn regular_detection() {
        let c4 = PermGroup::new(4, vec![p(&[1, 2, 3, 0])]).unwrap();
        assert!(c4.is_regular_on(&[0, 1, 2, 3]));
        let s3 = PermGroup::new(3, vec![p(&[1, 0, 2]), p(&[1, 2, 0])]).unwrap();
        assert!(!s3.is_regular_on(&[0, 1, 2]));
    }

    #[test]
    fn conjugator_found_and_refused() {
        // In Sym(4): <(0 1)> and <(2 3)> are conjugate; <(0 1)(2 3)> is not
        // conjugate to <(0 1 2 3)> (different element orders).
        let s4 = PermGroup::new(
            4,
            vec![p(&[1, 0, 2, 3]), p(&[1, 2, 3, 0])],
        )
        .unwrap();
        let h = PermGroup::new(4, vec![p(&[1, 0, 2, 3])]).unwrap();
        let k = PermGroup::new(4, vec![p(&[0, 1, 3, 2])]).unwrap();
        let g = find_conjugator(&s4, &h, &k).unwrap().unwrap();
        assert!(k.contains(&h.generators()[0].conjugate_by(&g)));

        let dbl = PermGroup::new(4, vec![p(&[1, 0, 3, 2])]).unwrap();
        let c4 = PermGroup::new(4, vec![p(&[1, 2, 3, 0])]).unwrap();
        assert!(find_conjugator(&s4, &dbl, &c4).unwrap().is_none());
    }

    #[test]
    fn invariants_distinguish_dihedral_from_quaternion_style() {
        // C4 x C2 vs D8: same order, different element-order profiles.
        let c4xc2 = PermGroup::new(6, vec![p(&[1, 2, 3, 0, 4, 5]), p(&[0, 1, 2, 3, 5, 4])])
            .unwrap();
        let d8 = PermGroup::new(
            4,
            vec![p(&[1, 2, 3, 0]), p(&[3, 2, 1, 0])],
        )
        .unwrap();
        let i1 = c4xc2.invariants(64).unwrap();
        let i2 = d8.invariants(64).unwrap();
        assert_eq!(i1.order, i2.order);
        assert_ne!(i1, i2);
    }

    #[test]
    fn image_search_finds_c4_in_sym4() {
        let s4 = PermGroup::new(
            4,
            vec![p(&[1, 0, 2, 3]), p(&[1, 2, 3, 0])],
        )
        .unwrap();
        let elems = s4.closure_elements(100).unwrap();
        let pool: Vec<Permutation> = elems.iter().filter(|e| e.order() == 4).cloned().collect();
        let relators: Vec<RelatorWord> = vec![vec![(0, 1), (0, 1), (0, 1), (0, 1)]];
        let found = generator_image_search(&relators, &[4], &[pool], 4, 4).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].order(), 4);
    }

    #[test]
    fn intransitive_product_chain_is_complete() {
        // Direct product of two copies of Sym(3) on disjoint triples. A
        // stabilizer chain that fails to propagate generators through
        // intermediate levels undercounts this group (24 instead of 36).
        let gens = vec![
            Permutation::from_cycles(6, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(6, &[&[0, 1, 2]]).unwrap(),
            Permutation::from_cycles(6, &[&[3, 4]]).unwrap(),
            Permutation::from_cycles(6, &[&[3, 4, 5]]).unwrap(),
        ];
        let g = PermGroup::new(6, gens).unwrap();
        assert_eq!(g.order(), 36);
        assert_eq!(g.elements().count(), 36);
        let distinct: HashSet<Permutation> = g.elements().collect();
        assert_eq!(distinct.len(), 36);
        // Stabilizer of the whole first triple is Sym(3) on the second.
        let stab = g.pointwise_stabilizer(&[0, 1, 2]).unwrap();
        assert_eq!(stab.order(), 6);
        // Stabilizer of one point per factor.
        let stab2 = g.pointwise_stabilizer(&[0, 3]).unwrap();
        assert_eq!(stab2.order(), 4);
        // Hint points the group does not move still produce a sound chain.
        let stab3 = g.pointwise_stabilizer(&[0]).unwrap();
        assert_eq!(stab3.order(), 12);
    }
}
