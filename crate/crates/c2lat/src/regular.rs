//! Exhaustive enumeration of subgroups of an ambient permutation group
//! that act regularly on a prescribed invariant point block, up to
//! ambient conjugacy.
//!
//! A regular subgroup contains, for every point `f` of the block,
//! exactly one element mapping the base point to `f`. The search grows
//! a candidate subgroup by repeatedly adjoining an element carrying the
//! base point to the least point not yet covered; the candidates for
//! that step form a coset of the base-point stabilizer, enumerated
//! explicitly. Branches die as soon as the generated subgroup grows
//! past the block size, fails Lagrange divisibility, or contains a
//! non-identity element with a fixed point in the block. At the first
//! adjoining step, candidates are reduced to orbit representatives
//! under conjugation by the two-point stabilizer, which permutes the
//! candidate coset and maps regular subgroups to conjugate ones.

use std::collections::{HashMap, HashSet};

use crate::perm::{find_conjugator, PermGroup, Permutation};
use crate::{Error, Result};

/// Result of [`enumerate_regular_subgroups`].
#[derive(Debug)]
pub struct RegularEnumeration {
    /// One representative per ambient-conjugacy class, ordered by the
    /// lexicographically least element list.
    pub classes: Vec<PermGroup>,
    /// Distinct regular subgroups encountered (before conjugacy
    /// reduction; not the total count of conjugates, which the search
    /// deliberately avoids visiting).
    pub subgroups_found: usize,
    /// Search tree nodes explored.
    pub nodes_explored: usize,
}

struct Search<'a> {
    ambient: &'a PermGroup,
    omega: Vec<u32>,
    in_omega: Vec<bool>,
    base: u32,
    stab0_elems: Vec<Permutation>,
    transporters: HashMap<u32, Permutation>,
    level1_reps: Vec<Permutation>,
    explored: HashSet<Vec<Permutation>>,
    found: Vec<(Vec<Permutation>, Vec<Permutation>)>,
    nodes: usize,
}

/// All subgroups of `ambient` acting regularly on `omega`, up to
/// conjugacy in `ambient`. `omega` must be a union of `ambient` orbits
/// (checked); the search is deterministic.
pub fn enumerate_regular_subgroups(
    ambient: &PermGroup,
    omega: &[u32],
) -> Result<RegularEnumeration> {
    if omega.is_empty() {
        return Err(Error::Geometry("regular enumeration needs a nonempty block".into()));
    }
    let mut omega: Vec<u32> = omega.to_vec();
    omega.sort_unstable();
    omega.dedup();
    let mut in_omega = vec![false; ambient.degree()];
    for &w in &omega {
        if w as usize >= ambient.degree() {
            return Err(Error::DegreeMismatch(w as usize, ambient.degree()));
        }
        in_omega[w as usize] = true;
    }
    for g in ambient.generators() {
        for &w in &omega {
            if !in_omega[g.image(w) as usize] {
                return Err(Error::Geometry(format!(
                    "block is not ambient-invariant: generator moves {w} out of it"
                )));
            }
        }
    }

    let base = omega[0];
    let stab0 = ambient.pointwise_stabilizer(&[base])?;
    let stab0_elems: Vec<Permutation> = stab0.elements().collect();

    // Transporters from the base to every other block point, read off a
    // chain based at the base point.
    let hinted = PermGroup::with_base_hint(
        ambient.degree(),
        ambient.generators().to_vec(),
        vec![base],
    )?;
    let mut transporters = HashMap::new();
    for &f in &omega[1..] {
        if let Some(t) = hinted.transporter(base, f) {
            transporters.insert(f, t);
        }
    }

    // First-step candidates: the coset carrying base to the least
    // uncovered point (omega[1]), reduced modulo conjugation by the
    // stabilizer of both points.
    let level1_reps = if omega.len() > 1 {
        match transporters.get(&omega[1]) {
            None => Vec::new(),
            Some(t_f) => {
                let stab01 = ambient.pointwise_stabilizer(&[base, omega[1]])?;
                let stab01_elems: Vec<Permutation> = stab01.elements().collect();
                let mut seen: HashSet<Permutation> = HashSet::new();
                let mut reps = Vec::new();
                for s in &stab0_elems {
                    let t = s.compose(t_f);
                    if seen.contains(&t) {
                        continue;
                    }
                    for c in &stab01_elems {
                        seen.insert(t.conjugate_by(c));
                    }
                    reps.push(t);
                }
                reps
            }
        }
    } else {
        Vec::new()
    };

    let mut search = Search {
        ambient,
        omega,
        in_omega,
        base,
        stab0_elems,
        transporters,
        level1_reps,
        explored: HashSet::new(),
        found: Vec::new(),
        nodes: 0,
    };

    let identity = Permutation::identity(ambient.degree());
    let mut gens: Vec<Permutation> = Vec::new();
    search.extend(&mut gens, &[identity])?;

    // Deduplicate and reduce modulo ambient conjugacy.
    search
        .found
        .sort_by(|a, b| a.1.cmp(&b.1));
    search.found.dedup_by(|a, b| a.1 == b.1);
    let subgroups_found = search.found.len();

    let mut class_groups: Vec<PermGroup> = Vec::new();
    for (gens, _elems) in &search.found {
        let candidate = PermGroup::new(ambient.degree(), gens.clone())?;
        let mut fresh = true;
        for rep in &class_groups {
            if find_conjugator(ambient, &candidate, rep)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            class_groups.push(candidate);
        }
    }

    Ok(RegularEnumeration {
        classes: class_groups,
        subgroups_found,
        nodes_explored: search.nodes,
    })
}

impl<'a> Search<'a> {
    /// Extend the partial subgroup with element list `elems` (sorted is
    /// not required; must contain the identity).
    fn extend(&mut self, gens: &mut Vec<Permutation>, elems: &[Permutation]) -> Result<()> {
        self.nodes += 1;
        // Covered block points: images of the base. Injective because
        // all non-identity elements are fixed-point-free on the block.
        let covered: HashSet<u32> = elems.iter().map(|e| e.image(self.base)).collect();
        debug_assert_eq!(covered.len(), elems.len());
        let target = match self.omega.iter().find(|f| !covered.contains(f)) {
            None => {
                debug_assert_eq!(elems.len(), self.omega.len());
                let mut canonical = elems.to_vec();
                canonical.sort_unstable();
                self.found.push((gens.clone(), canonical));
                return Ok(());
            }
            Some(&f) => f,
        };
        let Some(t_f) = self.transporters.get(&target).cloned() else {
            return Ok(());
        };

        let first_level = gens.is_empty();
        let candidates: Vec<Permutation> = if first_level {
            self.level1_reps.clone()
        } else {
            self.stab0_elems
                .iter()
                .map(|s| s.compose(&t_f))
                .collect()
        };

        for t in candidates {
            if !self.admissible(&t) {
                continue;
            }
            let closure = match PermGroup::new(self.ambient.degree(), {
                let mut g = gens.clone();
                g.push(t.clone());
                g
            })?
            .closure_elements(self.omega.len())
            {
                Ok(c) => c,
                Err(Error::BoundExceeded(_)) => continue,
                Err(e) => return Err(e),
            };
            if self.omega.len() % closure.len() != 0 {
                continue;
            }
            if !closure
                .iter()
                .all(|e| e.is_identity() || self.fixed_point_free(e))
            {
                continue;
            }
            let mut canonical = closure.clone();
            canonical.sort_unstable();
            if !self.explored.insert(canonical) {
                continue;
            }
            gens.push(t);
            self.extend(gens, &closure)?;
            gens.pop();
        }
        Ok(())
    }

    /// Quick per-candidate filters: order divides the block size and no
    /// fixed points on the block.
    fn admissible(&self, t: &Permutation) -> bool {
        let o = t.order();
        self.omega.len() as u64 % o == 0 && self.fixed_point_free(t)
    }

    fn fixed_point_free(&self, t: &Permutation) -> bool {
        self.omega.iter().all(|&w| t.image(w) != w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn sym(n: usize) -> PermGroup {
        let mut gens = vec![];
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
            let cycle: Vec<u32> = (0..n as u32).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    #[test]
    fn regular_subgroups_of_sym4_on_points() {
        // Transitive subgroups of S4 of order 4 acting regularly:
        // cyclic C4 and the Klein group V4 (the normal one); the other
        // Klein subgroups are not transitive. Two classes.
        let s4 = sym(4);
        let res = enumerate_regular_subgroups(&s4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(res.classes.len(), 2);
        let mut orders: Vec<Vec<u64>> = res
            .classes
            .iter()
            .map(|g| {
                let mut v: Vec<u64> = g
                    .closure_elements(8)
                    .unwrap()
                    .iter()
                    .map(|e| e.order())
                    .collect();
                v.sort_unstable();
                v
            })
            .collect();
        orders.sort();
        assert_eq!(orders, vec![vec![1, 2, 2, 2], vec![1, 2, 4, 4]]);
    }

    #[test]
    fn regular_subgroups_of_sym3() {
        // Only C3 acts regularly on three points.
        let s3 = sym(3);
        let res = enumerate_regular_subgroups(&s3, &[0, 1, 2]).unwrap();
        assert_eq!(res.classes.len(), 1);
        assert_eq!(res.classes[0].order(), 3);
    }

    #[test]
    fn sym5_has_only_cyclic_regular_subgroups() {
        let s5 = sym(5);
        let res = enumerate_regular_subgroups(&s5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(res.classes.len(), 1);
        assert_eq!(res.classes[0].order(), 5);
    }

    #[test]
    fn block_must_be_invariant() {
        let s4 = sym(4);
        assert!(enumerate_regular_subgroups(&s4, &[0, 1]).is_err());
    }
}
