//! Coset enumeration (HLT with coincidence handling), regular
//! representations, and the distinguished side subgroups of a two-sided
//! presentation.

use crate::perm::{evaluate_word, PermGroup, Permutation, RelatorWord};
use crate::presentation::{FinPresentation, Side};
use crate::{Error, Result};

/// Default table-size limit for coset enumeration.
pub const DEFAULT_MAX_COSETS: usize = 1 << 16;

/// A completed coset table: the action of each generator on the right
/// cosets of the chosen subgroup, with coset 0 the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// Number of cosets (the index of the subgroup).
    pub index: usize,
    /// One permutation of `0..index` per presentation generator.
    pub gen_action: Vec<Permutation>,
}

impl CosetTable {
    /// Check the defining properties: every generator column is a
    /// permutation (guaranteed by construction), every relator acts
    /// trivially on every coset, and every subgroup generator fixes
    /// coset 0.
    pub fn validate(&self, relators: &[RelatorWord], subgroup: &[RelatorWord]) -> Result<()> {
        for rel in relators {
            let act = evaluate_word(rel, &self.gen_action, self.index);
            if !act.is_identity() {
                return Err(Error::Classification(format!(
                    "relator does not act trivially on the coset space: {rel:?}"
                )));
            }
        }
        for w in subgroup {
            let act = evaluate_word(w, &self.gen_action, self.index);
            if act.image(0) != 0 {
                return Err(Error::Classification(format!(
                    "subgroup word moves coset 0: {w:?}"
                )));
            }
        }
        Ok(())
    }
}

/// Expand a word into single-step column indices: column `2g` is the
/// action of generator `g`, column `2g+1` its inverse.
fn word_to_cols(word: &[(usize, i32)]) -> Vec<usize> {
    let mut cols = Vec::new();
    for &(g, e) in word {
        let col = if e >= 0 { 2 * g } else { 2 * g + 1 };
        for _ in 0..e.unsigned_abs() {
            cols.push(col);
        }
    }
    cols
}

/// Enumerate the right cosets of the subgroup generated by `subgroup`
/// (words over the presentation's generators) in the presented group.
///
/// Deterministic: cosets are defined in discovery order and renumbered
/// by ascending survivor after coincidence processing, so the same input
/// always yields the same table.
pub fn todd_coxeter(
    pres: &FinPresentation,
    subgroup: &[RelatorWord],
    max_cosets: usize,
) -> Result<CosetTable> {
    let ngens = pres.gen_count();
    let ncols = 2 * ngens;
    let rel_cols: Vec<Vec<usize>> = pres.relators().iter().map(|w| word_to_cols(w)).collect();
    let sub_cols: Vec<Vec<usize>> = subgroup.iter().map(|w| word_to_cols(w)).collect();

    let mut table: Vec<Vec<Option<u32>>> = vec![vec![None; ncols]];
    let mut parent: Vec<u32> = vec![0];

    fn rep(parent: &mut [u32], k: u32) -> u32 {
        let mut lambda = k;
        while parent[lambda as usize] != lambda {
            lambda = parent[lambda as usize];
        }
        let mut mu = k;
        while parent[mu as usize] != lambda {
            let next = parent[mu as usize];
            parent[mu as usize] = lambda;
            mu = next;
        }
        lambda
    }

    struct St {
        table: Vec<Vec<Option<u32>>>,
        parent: Vec<u32>,
        max_cosets: usize,
        ncols: usize,
    }

    impl St {
        fn define(&mut self, alpha: u32, x: usize) -> Result<u32> {
            if self.table.len() >= self.max_cosets {
                return Err(Error::CosetOverflow(self.max_cosets));
            }
            let beta = self.table.len() as u32;
            self.table.push(vec![None; self.ncols]);
            self.parent.push(beta);
            self.table[alpha as usize][x] = Some(beta);
            self.table[beta as usize][x ^ 1] = Some(alpha);
            Ok(beta)
        }

        fn merge(&mut self, k: u32, lambda: u32, queue: &mut Vec<u32>) {
            let phi = rep(&mut self.parent, k);
            let psi = rep(&mut self.parent, lambda);
            if phi != psi {
                let mu = phi.min(psi);
                let nu = phi.max(psi);
                self.parent[nu as usize] = mu;
                queue.push(nu);
            }
        }

        fn coincidence(&mut self, alpha: u32, beta: u32) {
            let mut queue = Vec::new();
            self.merge(alpha, beta, &mut queue);
            let mut qi = 0;
            while qi < queue.len() {
                let gamma = queue[qi];
                qi += 1;
                for x in 0..self.ncols {
                    if let Some(delta) = self.table[gamma as usize][x] {
                        self.table[delta as usize][x ^ 1] = None;
                        let mu = rep(&mut self.parent, gamma);
                        let nu = rep(&mut self.parent, delta);
                        if let Some(t) = self.table[mu as usize][x] {
                            self.merge(nu, t, &mut queue);
                        } else if let Some(t) = self.table[nu as usize][x ^ 1] {
                            self.merge(mu, t, &mut queue);
                        } else {
                            self.table[mu as usize][x] = Some(nu);
                            self.table[nu as usize][x ^ 1] = Some(mu);
                        }
                    }
                }
            }
        }

        fn scan_and_fill(&mut self, alpha: u32, w: &[usize]) -> Result<()> {
            if w.is_empty() {
                return Ok(());
            }
            let mut f = alpha;
            let mut i: usize = 0;
            let mut b = alpha;
            let mut j: isize = w.len() as isize - 1;
            loop {
                while i as isize <= j {
                    match self.table[f as usize][w[i]] {
                        Some(next) => {
                            f = next;
                            i += 1;
                        }
                        None => break,
                    }
                }
                if i as isize > j {
                    if f != b {
                        self.coincidence(f, b);
                    }
                    return Ok(());
                }
                while j >= i as isize {
                    match self.table[b as usize][w[j as usize] ^ 1] {
                        Some(prev) => {
                            b = prev;
                            j -= 1;
                        }
                        None => break,
                    }
                }
                if j < i as isize {
                    self.coincidence(f, b);
                    return Ok(());
                }
                if j == i as isize {
                    self.table[f as usize][w[i]] = Some(b);
                    self.table[b as usize][w[i] ^ 1] = Some(f);
                    return Ok(());
                }
                f = self.define(f, w[i])?;
                i += 1;
            }
        }
    }

    let mut st = St {
        table: std::mem::take(&mut table),
        parent: std::mem::take(&mut parent),
        max_cosets,
        ncols,
    };

    for w in &sub_cols {
        st.scan_and_fill(0, w)?;
    }
    let mut alpha: u32 = 0;
    while (alpha as usize) < st.table.len() {
        if rep(&mut st.parent, alpha) != alpha {
            alpha += 1;
            continue;
        }
        let mut dead = false;
        for w in &rel_cols {
            st.scan_and_fill(alpha, w)?;
            if rep(&mut st.parent, alpha) != alpha {
                dead = true;
                break;
            }
        }
        if !dead {
            for x in 0..ncols {
                if rep(&mut st.parent, alpha) != alpha {
                    break;
                }
                if st.table[alpha as usize][x].is_none() {
                    st.define(alpha, x)?;
                }
            }
        }
        alpha += 1;
    }

    let live: Vec<u32> = (0..st.table.len() as u32)
        .filter(|&i| rep(&mut st.parent, i) == i)
        .collect();
    let renum: std::collections::HashMap<u32, u32> = live
        .iter()
        .enumerate()
        .map(|(k, &c)| (c, k as u32))
        .collect();
    let index = live.len();
    let mut gen_action = Vec::with_capacity(ngens);
    for g in 0..ngens {
        let mut images = Vec::with_capacity(index);
        for &c in &live {
            let raw = st.table[c as usize][2 * g].ok_or_else(|| {
                Error::Classification("incomplete coset table after enumeration".into())
            })?;
            let r = rep(&mut st.parent, raw);
            images.push(renum[&r]);
        }
        gen_action.push(Permutation::from_images(images)?);
    }

    let result = CosetTable { index, gen_action };
    result.validate(pres.relators(), subgroup)?;
    Ok(result)
}

/// The right regular representation of the presented group: the coset
/// table of the trivial subgroup, as a permutation group whose
/// generators correspond to the presentation's generators in order.
pub fn regular_representation(pres: &FinPresentation) -> Result<PermGroup> {
    regular_representation_with_limit(pres, DEFAULT_MAX_COSETS)
}

/// [`regular_representation`] with an explicit coset-table limit.
pub fn regular_representation_with_limit(
    pres: &FinPresentation,
    max_cosets: usize,
) -> Result<PermGroup> {
    let table = todd_coxeter(pres, &[], max_cosets)?;
    let group = PermGroup::new(table.index, table.gen_action.clone())?;
    // The regular representation must be, in fact, regular.
    let omega: Vec<u32> = (0..table.index as u32).collect();
    if !group.is_regular_on(&omega) {
        return Err(Error::Classification(format!(
            "regular representation of {} is not regular: order {} on {} points",
            pres.name(),
            group.order(),
            table.index
        )));
    }
    Ok(group)
}

/// The images in `group` of the a-side and b-side generators of `pres`,
/// as subgroups. `group` must be the regular representation of `pres`
/// (generators aligned with the presentation's generator list).
pub fn edge_subgroups(pres: &FinPresentation, group: &PermGroup) -> Result<(PermGroup, PermGroup)> {
    if group.generators().len() != pres.gen_count() {
        return Err(Error::Classification(format!(
            "group has {} generators but presentation {} declares {}",
            group.generators().len(),
            pres.name(),
            pres.gen_count()
        )));
    }
    for rel in pres.relators() {
        if !evaluate_word(rel, group.generators(), group.degree()).is_identity() {
            return Err(Error::Classification(format!(
                "group does not satisfy the relators of {}",
                pres.name()
            )));
        }
    }
    let pick = |side: Side| -> Result<PermGroup> {
        let gens: Vec<Permutation> = pres
            .side_gens(side)
            .into_iter()
            .map(|i| group.generators()[i].clone())
            .collect();
        PermGroup::new(group.degree(), gens)
    };
    Ok((pick(Side::A)?, pick(Side::B)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> FinPresentation {
        FinPresentation::parse("test", text).unwrap()
    }

    #[test]
    fn cyclic_group_of_order_six() {
        let p = pres("gens a:a\na a a a a a\n");
        let g = regular_representation(&p).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(), 6);
    }

    #[test]
    fn symmetric_group_on_three_letters() {
        let p = pres("gens x:a y:a\nx x\ny y y\nx y x y\n");
        let g = regular_representation(&p).unwrap();
        assert_eq!(g.order(), 6);
        // Non-abelian: xy != yx.
        let x = &g.generators()[0];
        let y = &g.generators()[1];
        assert_ne!(x.compose(y), y.compose(x));
    }

    #[test]
    fn coset_space_of_subgroup() {
        // Sym(3) over <x>: index 3.
        let p = pres("gens x:a y:a\nx x\ny y y\nx y x y\n");
        let t = todd_coxeter(&p, &[vec![(0, 1)]], 1000).unwrap();
        assert_eq!(t.index, 3);
        t.validate(p.relators(), &[vec![(0, 1)]]).unwrap();
    }

    #[test]
    fn collapsing_presentation() {
        // Adding y = x to Sym(3) collapses it to C2.
        let p = pres("gens x:a y:a\nx x\ny y y\nx y x y\nx y^-1\n");
        let g = regular_representation(&p).unwrap();
        assert_eq!(g.order(), 1); // x=y forces x order dividing 2 and 3
    }

    #[test]
    fn overflow_reported() {
        // A presentation of an infinite group must hit the limit.
        let p = pres("gens a:a b:b\n");
        match todd_coxeter(&p, &[], 64) {
            Err(Error::CosetOverflow(64)) => {}
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn edge_subgroups_split_by_side() {
        let p = pres("gens a:a b:b\na a\nb b b\na b a b^-1 a b a b^-1\n");
        let g = regular_representation(&p).unwrap();
        let (ea, eb) = edge_subgroups(&p, &g).unwrap();
        assert_eq!(ea.order(), 2);
        assert_eq!(eb.order(), 3);
    }
}
