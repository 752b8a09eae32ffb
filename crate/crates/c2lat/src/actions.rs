//! Edge-regular actions of the library groups on the three target
//! graphs (the quadrangle's incidence graph, K_{4,4}, K_{6,6}):
//! realization through coset graphs, isomorphism of actions, edge-group
//! swaps, and the exhaustive classification of edge-regular actions by
//! regular-subgroup enumeration.
//!
//! An action is stored as a faithful permutation group together with
//! its two edge subgroups (the stabilizers of the endpoints of a base
//! edge); "a" is the side whose vertices have degree equal to the
//! a-side edge-group order. Two actions are isomorphic when a group
//! isomorphism carries the edge-subgroup pair of one onto the pair of
//! the other (exactly — inner corrections are absorbed); when the
//! target has equal bipartition classes the comparison may also swap
//! the two sides.

use std::collections::HashMap;

use crate::autgraph::{automorphism_group, graphs_isomorphic};
use crate::geometry::{build_quadrangle, Graph};
use crate::library::{realization, Realized};
use crate::perm::{PermGroup, Permutation};
use crate::reference::{expected_target, Target, GROUP_COUNT};
use crate::regular::enumerate_regular_subgroups;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Targets
// ---------------------------------------------------------------------------

/// A target graph with its side classes and combined-domain layout.
#[derive(Debug)]
pub struct TargetData {
    pub target: Target,
    pub graph: Graph,
    /// Vertex colors: 0 on the a-class, 1 on the b-class.
    pub side_colors: Vec<u32>,
    /// Combined-domain indices of the edge block.
    pub edge_block: Vec<u32>,
}

impl TargetData {
    /// The a- and b-class endpoints of the lexicographically first edge.
    pub fn base_edge(&self) -> (u32, u32) {
        let (u, v) = self.graph.edges_lex()[0];
        if self.side_colors[u as usize] == 0 {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Whether the two vertex classes have equal sizes (which is when
    /// side-swapping comparisons are meaningful).
    pub fn equal_sides(&self) -> bool {
        let zeros = self.side_colors.iter().filter(|&&c| c == 0).count();
        zeros * 2 == self.side_colors.len()
    }
}

/// Build a target graph. For the quadrangle the a-class is the lines
/// (vertices 64..160, degree 4); for `K_{m,m}` it is the first block.
pub fn target_data(target: Target) -> Result<TargetData> {
    let (graph, side_colors) = match target {
        Target::Quadrangle => {
            let q = build_quadrangle()?;
            let mut colors = vec![1u32; 160];
            for c in colors.iter_mut().skip(64) {
                *c = 0;
            }
            (q.incidence_graph().clone(), colors)
        }
        Target::K44 | Target::K66 => {
            let (m, n) = target.bipartition();
            let mut colors = vec![1u32; m + n];
            for c in colors.iter_mut().take(m) {
                *c = 0;
            }
            (Graph::complete_bipartite(m, n), colors)
        }
    };
    let nv = graph.vertex_count() as u32;
    let edge_block: Vec<u32> = (nv..nv + graph.edge_count() as u32).collect();
    Ok(TargetData {
        target,
        graph,
        side_colors,
        edge_block,
    })
}

/// The bipartition-preserving automorphism group of the target, on the
/// combined domain (vertices then edges).
pub fn ambient_type_preserving(td: &TargetData) -> Result<PermGroup> {
    let vert_aut = automorphism_group(&td.graph, &td.side_colors)?;
    let combined: Result<Vec<Permutation>> = vert_aut
        .generators()
        .iter()
        .map(|g| td.graph.vertex_perm_to_combined(g))
        .collect();
    PermGroup::new(td.graph.combined_degree(), combined?)
}

/// Library ids whose groups act on the given target.
pub fn library_ids(target: Target) -> Vec<usize> {
    (1..=GROUP_COUNT)
        .filter(|&id| expected_target(id) == target)
        .collect()
}

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

/// A group acting edge-regularly, with its ordered edge-subgroup pair.
/// The permutation domain is any faithful one; comparisons are abstract.
#[derive(Clone, Debug)]
pub struct LocalAction {
    pub target: Target,
    pub library_id: Option<usize>,
    pub group: PermGroup,
    pub side_a: PermGroup,
    pub side_b: PermGroup,
}

/// The abstract action of library group `id` (right regular domain).
pub fn abstract_action(id: usize) -> Result<LocalAction> {
    let real = realization(id)?;
    Ok(LocalAction {
        target: expected_target(id),
        library_id: Some(id),
        group: real.group.clone(),
        side_a: real.side_a.clone(),
        side_b: real.side_b.clone(),
    })
}

/// A library action realized concretely on its target graph.
#[derive(Debug)]
pub struct TargetRealization {
    /// The action, with `group` living on the target's combined domain.
    pub action: LocalAction,
    /// Base edge endpoints (a-vertex, b-vertex) stabilized by the sides.
    pub base_edge: (u32, u32),
    /// Vertices of the coset graph (a-cosets then b-cosets).
    pub coset_vertices: usize,
}

/// The left-multiplication action of a realized group on the points of
/// its right regular representation: `index_of[x]` is the permutation
/// realizing element `x`, so left multiplication by `g` reads off as
/// `x -> index_of[x].image(g)`.
fn left_multiplications(real: &Realized) -> Result<Vec<Permutation>> {
    let n = real.group.degree();
    let mut elem_of_point: Vec<Option<Permutation>> = vec![None; n];
    for p in real.group.elements() {
        let pt = p.image(0) as usize;
        if elem_of_point[pt].replace(p).is_some() {
            return Err(Error::Library(
                "regular representation has colliding element points".into(),
            ));
        }
    }
    let elem_of_point: Vec<Permutation> = elem_of_point
        .into_iter()
        .map(|o| o.ok_or_else(|| Error::Library("regular representation misses a point".into())))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for gen in real.group.generators() {
        let g_pt = gen.image(0);
        let images: Vec<u32> = (0..n).map(|x| elem_of_point[x].image(g_pt)).collect();
        out.push(Permutation::from_images(images)?);
    }
    Ok(out)
}

/// Realize library group `id` on its target: build the coset graph on
/// the side-subgroup cosets, identify it with the target graph, and
/// transport the left-multiplication action. Verifies edge-regularity
/// and the stabilizer structure along the way.
pub fn library_action(id: usize) -> Result<TargetRealization> {
    let real = realization(id)?;
    let target = expected_target(id);
    let td = target_data(target)?;
    let n = real.group.degree();

    // Cosets of the side subgroups = orbits of their right action.
    let a_orbits = real.side_a.orbits();
    let b_orbits = real.side_b.orbits();
    let na = a_orbits.len();
    let nb = b_orbits.len();
    let mut a_of = vec![0u32; n];
    let mut b_of = vec![0u32; n];
    for (ci, orb) in a_orbits.iter().enumerate() {
        for &x in orb {
            a_of[x as usize] = ci as u32;
        }
    }
    for (ci, orb) in b_orbits.iter().enumerate() {
        for &x in orb {
            b_of[x as usize] = na as u32 + ci as u32;
        }
    }
    let edges: Vec<(u32, u32)> = (0..n).map(|x| (a_of[x], b_of[x])).collect();
    let coset_graph = Graph::from_edges(na + nb, &edges)?;
    if coset_graph.edge_count() != n {
        return Err(Error::Library(format!(
            "coset graph of group {id} collapses edges: {} of {n}",
            coset_graph.edge_count()
        )));
    }
    let mut coset_colors = vec![0u32; na + nb];
    for c in coset_colors.iter_mut().skip(na) {
        *c = 1;
    }

    // Identify with the target graph (this is the target-identity check).
    let iso = graphs_isomorphic(&coset_graph, &coset_colors, &td.graph, &td.side_colors)?
        .ok_or_else(|| {
            Error::Library(format!(
                "coset graph of group {id} is not isomorphic to {}",
                target.name()
            ))
        })?;
    let iso_combined = {
        // Map coset-graph edges to target edges through the vertex map.
        let mut images: Vec<u32> = iso.images().to_vec();
        let target_edge_ids: HashMap<(u32, u32), u32> = td
            .graph
            .edges_lex()
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        let nv = td.graph.vertex_count() as u32;
        for &(u, v) in coset_graph.edges_lex() {
            let (x, y) = (iso.image(u), iso.image(v));
            let key = (x.min(y), x.max(y));
            images.push(nv + target_edge_ids[&key]);
        }
        Permutation::from_images(images)?
    };

    // Left multiplication generators, lifted to the combined domain and
    // transported through the identification.
    let lams = left_multiplications(real)?;
    let mut transported = Vec::new();
    for lam in &lams {
        let vertex_images: Vec<u32> = (0..(na + nb) as u32)
            .map(|cv| {
                // Image of a coset under left multiplication: the coset
                // of the image of any member.
                let rep = if (cv as usize) < na {
                    a_orbits[cv as usize][0]
                } else {
                    b_orbits[cv as usize - na][0]
                };
                let img = lam.image(rep);
                if (cv as usize) < na {
                    a_of[img as usize]
                } else {
                    b_of[img as usize]
                }
            })
            .collect();
        let vperm = Permutation::from_images(vertex_images)?;
        let combined = coset_graph.vertex_perm_to_combined(&vperm)?;
        // Consistency: the edge part of the combined permutation must
        // agree with left multiplication on elements.
        for x in 0..n as u32 {
            let edge_of = |y: u32| {
                let (a, b) = (a_of[y as usize], b_of[y as usize]);
                coset_graph
                    .edges_lex()
                    .binary_search(&(a.min(b), a.max(b)))
                    .expect("element edge exists") as u32
                    + (na + nb) as u32
            };
            if combined.image(edge_of(x)) != edge_of(lam.image(x)) {
                return Err(Error::Library(format!(
                    "left action of group {id} disagrees with its coset graph"
                )));
            }
        }
        transported.push(combined.conjugate_by(&iso_combined));
    }
    let group = PermGroup::new(td.graph.combined_degree(), transported.clone())?;

    // Edge-regularity on the target.
    if group.order() != n as u64 || !group.is_regular_on(&td.edge_block) {
        return Err(Error::Library(format!(
            "transported action of group {id} is not regular on the edges of {}",
            target.name()
        )));
    }

    // Side subgroups: the transported side generators; they stabilize
    // the images of the identity's two cosets.
    let side_idx_a = real.pres.side_gens(crate::presentation::Side::A);
    let side_idx_b = real.pres.side_gens(crate::presentation::Side::B);
    let side_a = PermGroup::new(
        td.graph.combined_degree(),
        side_idx_a.iter().map(|&i| transported[i].clone()).collect(),
    )?;
    let side_b = PermGroup::new(
        td.graph.combined_degree(),
        side_idx_b.iter().map(|&i| transported[i].clone()).collect(),
    )?;
    let va = iso.image(a_of[0]);
    let vb = iso.image(b_of[0]);
    for (sub, v, label) in [(&side_a, va, "a"), (&side_b, vb, "b")] {
        let stab = group.pointwise_stabilizer(&[v])?;
        if stab.order() != sub.order() || !stab.contains_group(sub) {
            return Err(Error::Library(format!(
                "side {label} of group {id} is not the base-vertex stabilizer"
            )));
        }
    }

    Ok(TargetRealization {
        action: LocalAction {
            target,
            library_id: Some(id),
            group,
            side_a,
            side_b,
        },
        base_edge: (va, vb),
        coset_vertices: na + nb,
    })
}

/// Wrap an edge-regular subgroup of a target ambient as a
/// [`LocalAction`], reading the edge subgroups off the base edge.
pub fn action_from_subgroup(td: &TargetData, group: PermGroup) -> Result<LocalAction> {
    let (va, vb) = td.base_edge();
    let side_a = group.pointwise_stabilizer(&[va])?;
    let side_b = group.pointwise_stabilizer(&[vb])?;
    Ok(LocalAction {
        target: td.target,
        library_id: None,
        group,
        side_a,
        side_b,
    })
}

// ---------------------------------------------------------------------------
// Isomorphism of actions
// ---------------------------------------------------------------------------

/// Witness for an isomorphism of actions: images (in the second group)
/// of the first action's side-a generators followed by its side-b
/// generators, and whether the sides were exchanged.
#[derive(Clone, Debug)]
pub struct ActionIso {
    pub swapped: bool,
    pub gen_images: Vec<Permutation>,
}

/// Cap on element enumeration of the acting groups (largest is 384).
const ACTION_ELEMENT_CAP: usize = 1 << 12;

/// Search a group isomorphism carrying the edge-subgroup pair of `x`
/// onto that of `y` (side a to side a, side b to side b).
fn pair_iso(x: &LocalAction, y: &LocalAction, swap_target: bool) -> Result<Option<ActionIso>> {
    let (ya, yb) = if swap_target {
        (&y.side_b, &y.side_a)
    } else {
        (&y.side_a, &y.side_b)
    };
    if x.group.order() != y.group.order()
        || x.side_a.order() != ya.order()
        || x.side_b.order() != yb.order()
    {
        return Ok(None);
    }
    let src_gens: Vec<Permutation> = x
        .side_a
        .generators()
        .iter()
        .chain(x.side_b.generators())
        .cloned()
        .collect();
    // The side subgroups must generate the whole group (true for
    // edge-regular actions on connected targets; checked).
    {
        let gen_group = PermGroup::new(x.group.degree(), src_gens.clone())?;
        if gen_group.order() != x.group.order() {
            return Err(Error::Classification(
                "edge subgroups do not generate the acting group".into(),
            ));
        }
    }
    let na = x.side_a.generators().len();
    let ya_elems = ya.closure_elements(ACTION_ELEMENT_CAP)?;
    let yb_elems = yb.closure_elements(ACTION_ELEMENT_CAP)?;
    let pools: Vec<Vec<Permutation>> = src_gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let pool = if i < na { &ya_elems } else { &yb_elems };
            let mut v: Vec<Permutation> = pool
                .iter()
                .filter(|e| e.order() == g.order())
                .cloned()
                .collect();
            v.sort_unstable();
            v
        })
        .collect();

    let ya_sorted = {
        let mut v = ya_elems.clone();
        v.sort_unstable();
        v
    };
    let yb_sorted = {
        let mut v = yb_elems.clone();
        v.sort_unstable();
        v
    };

    let mut choice: Vec<usize> = Vec::new();
    let found = pair_iso_dfs(
        x,
        y,
        &src_gens,
        na,
        &pools,
        &ya_sorted,
        &yb_sorted,
        &mut choice,
    )?;
    Ok(found.map(|gen_images| ActionIso {
        swapped: swap_target,
        gen_images,
    }))
}

#[allow(clippy::too_many_arguments)]
fn pair_iso_dfs(
    x: &LocalAction,
    y: &LocalAction,
    src_gens: &[Permutation],
    na: usize,
    pools: &[Vec<Permutation>],
    ya_sorted: &[Permutation],
    yb_sorted: &[Permutation],
    choice: &mut Vec<usize>,
) -> Result<Option<Vec<Permutation>>> {
    if choice.len() == src_gens.len() {
        let images: Vec<Permutation> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| pools[i][c].clone())
            .collect();
        if extends_to_isomorphism(x, y, src_gens, &images)?
            && generates_exactly(y.group.degree(), &images[..na], ya_sorted)?
            && generates_exactly(y.group.degree(), &images[na..], yb_sorted)?
        {
            return Ok(Some(images));
        }
        return Ok(None);
    }
    let i = choice.len();
    for c in 0..pools[i].len() {
        choice.push(c);
        if let Some(found) =
            pair_iso_dfs(x, y, src_gens, na, pools, ya_sorted, yb_sorted, choice)?
        {
            choice.pop();
            return Ok(Some(found));
        }
        choice.pop();
    }
    Ok(None)
}

/// Does mapping `src_gens[i] -> images[i]` extend to an isomorphism of
/// the groups? Checked by closing the word map over all elements.
fn extends_to_isomorphism(
    x: &LocalAction,
    y: &LocalAction,
    src_gens: &[Permutation],
    images: &[Permutation],
) -> Result<bool> {
    let mut map: HashMap<Permutation, Permutation> = HashMap::new();
    let id_x = Permutation::identity(x.group.degree());
    let id_y = Permutation::identity(y.group.degree());
    map.insert(id_x.clone(), id_y);
    let mut queue = vec![id_x];
    while let Some(e) = queue.pop() {
        let e_img = map[&e].clone();
        for (g, img) in src_gens.iter().zip(images) {
            let eg = e.compose(g);
            let eg_img = e_img.compose(img);
            match map.get(&eg) {
                Some(prev) => {
                    if *prev != eg_img {
                        return Ok(false);
                    }
                }
                None => {
                    map.insert(eg, eg_img.clone());
                    queue.push(eg);
                }
            }
        }
    }
    if map.len() as u64 != x.group.order() {
        return Err(Error::Classification(
            "generator closure does not reach the whole group".into(),
        ));
    }
    let image_count = map.values().collect::<std::collections::HashSet<_>>().len();
    Ok(image_count as u64 == y.group.order())
}

/// Do `gens` generate exactly the subgroup with the given sorted
/// element list?
fn generates_exactly(
    degree: usize,
    gens: &[Permutation],
    target_sorted: &[Permutation],
) -> Result<bool> {
    let sub = PermGroup::new(degree, gens.to_vec())?;
    if sub.order() as usize != target_sorted.len() {
        return Ok(false);
    }
    Ok(sub
        .closure_elements(target_sorted.len())?
        .iter()
        .all(|e| target_sorted.binary_search(e).is_ok()))
}

/// Isomorphism of actions. With `type_preserving`, side a must map to
/// side a; otherwise the sides may also be exchanged (meaningful only
/// for equal-size bipartitions, and attempted only then).
pub fn actions_isomorphic(
    x: &LocalAction,
    y: &LocalAction,
    type_preserving: bool,
) -> Result<Option<ActionIso>> {
    if x.target != y.target {
        return Err(Error::Classification(
            "actions on different targets are never compared".into(),
        ));
    }
    if let Some(w) = pair_iso(x, y, false)? {
        return Ok(Some(w));
    }
    if !type_preserving {
        let (ma, mb) = x.target.bipartition();
        if ma == mb {
            if let Some(w) = pair_iso(x, y, true)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// A group automorphism exchanging the two edge subgroups, or `None`.
pub fn admits_edge_swap(x: &LocalAction) -> Result<Option<ActionIso>> {
    pair_iso(x, x, true)
}

/// Check the specific exchange witness that maps the i-th side-a
/// generator to the i-th side-b generator and back.
pub fn generator_exchange_extends(id: usize) -> Result<bool> {
    let x = abstract_action(id)?;
    let a_gens = x.side_a.generators();
    let b_gens = x.side_b.generators();
    if a_gens.len() != b_gens.len() {
        return Ok(false);
    }
    let src: Vec<Permutation> = a_gens.iter().chain(b_gens).cloned().collect();
    let img: Vec<Permutation> = b_gens.iter().chain(a_gens).cloned().collect();
    extends_to_isomorphism(&x, &x, &src, &img)
}

// ---------------------------------------------------------------------------
// Classification of edge-regular actions
// ---------------------------------------------------------------------------

/// Result of the exhaustive classification on one target.
#[derive(Debug)]
pub struct EdgeRegularClassification {
    pub target: Target,
    /// Conjugacy classes in the type-preserving ambient, before the
    /// action-isomorphism reduction.
    pub ambient_classes: usize,
    /// One representative per action-isomorphism class.
    pub classes: Vec<LocalAction>,
    /// `matching[k]` = library id realized by `classes[k]`.
    pub matching: Vec<usize>,
}

/// Exhaustively classify edge-regular actions on the target: enumerate
/// regular subgroups on the edge block inside the bipartition-
/// preserving automorphism group, reduce by action isomorphism, and
/// match every class to a library action (every id hit exactly once).
pub fn classify_edge_regular(target: Target) -> Result<EdgeRegularClassification> {
    let td = target_data(target)?;
    let ambient = ambient_type_preserving(&td)?;
    let enumeration = enumerate_regular_subgroups(&ambient, &td.edge_block)?;
    let ambient_classes = enumeration.classes.len();

    let mut classes: Vec<LocalAction> = Vec::new();
    let type_preserving = !td.equal_sides();
    for group in enumeration.classes {
        let action = action_from_subgroup(&td, group)?;
        let mut fresh = true;
        for seen in &classes {
            if actions_isomorphic(&action, seen, type_preserving)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            classes.push(action);
        }
    }

    let ids = library_ids(target);
    let mut matching = Vec::new();
    for class in &classes {
        let mut hits = Vec::new();
        for &id in &ids {
            let lib = abstract_action(id)?;
            if actions_isomorphic(class, &lib, type_preserving)?.is_some() {
                hits.push(id);
            }
        }
        match hits.as_slice() {
            [one] => matching.push(*one),
            [] => {
                return Err(Error::Classification(format!(
                    "an edge-regular class on {} matches no library action",
                    target.name()
                )))
            }
            many => {
                return Err(Error::Classification(format!(
                    "an edge-regular class on {} matches several library actions: {:?}",
                    target.name(),
                    many
                )))
            }
        }
    }
    let mut sorted = matching.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted != ids {
        return Err(Error::Classification(format!(
            "library actions on {} not hit exactly once: {:?}",
            target.name(),
            matching
        )));
    }
    Ok(EdgeRegularClassification {
        target,
        ambient_classes,
        classes,
        matching,
    })
}

/// Verify-mode enumeration: realize every library action on the target
/// and check the realizations are pairwise non-isomorphic as actions.
pub fn verify_library_actions(target: Target) -> Result<Vec<TargetRealization>> {
    let ids = library_ids(target);
    let mut out = Vec::new();
    for &id in &ids {
        out.push(library_action(id)?);
    }
    let td = target_data(target)?;
    let type_preserving = !td.equal_sides();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let x = abstract_action(ids[i])?;
            let y = abstract_action(ids[j])?;
            if actions_isomorphic(&x, &y, type_preserving)?.is_some() {
                return Err(Error::Classification(format!(
                    "library actions {} and {} are unexpectedly isomorphic",
                    ids[i], ids[j]
                )));
            }
        }
    }
    Ok(out)
}

/// Conjugacy classes of subgroups of the quadrangle's automorphism
/// group acting regularly on the points, or on the lines.
pub fn count_vertex_regular(on_lines: bool) -> Result<usize> {
    let td = target_data(Target::Quadrangle)?;
    let ambient = ambient_type_preserving(&td)?;
    let block: Vec<u32> = if on_lines {
        (64..160).collect()
    } else {
        (0..64).collect()
    };
    let res = enumerate_regular_subgroups(&ambient, &block)?;
    Ok(res.classes.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::SIDE_SWAP_MEMBERS;

    #[test]
    fn abstract_action_sides() {
        let a = abstract_action(1).unwrap();
        assert_eq!(a.side_a.order(), 4);
        assert_eq!(a.side_b.order(), 6);
        assert_eq!(a.group.order(), 384);
    }

    #[test]
    fn library_action_on_k44() {
        let r = library_action(20).unwrap();
        assert_eq!(r.action.group.order(), 16);
        assert_eq!(r.action.group.degree(), 24);
        assert_eq!(r.coset_vertices, 8);
        // Side a of group 20 is cyclic of order 4.
        assert_eq!(r.action.side_a.order(), 4);
        let orders: Vec<u64> = r
            .action
            .side_a
            .closure_elements(8)
            .unwrap()
            .iter()
            .map(|e| e.order())
            .collect();
        assert!(orders.contains(&4));
    }

    #[test]
    fn action_self_isomorphic() {
        let a = abstract_action(12).unwrap();
        let w = actions_isomorphic(&a, &a, true).unwrap().unwrap();
        assert!(!w.swapped);
    }

    #[test]
    fn isomorphic_groups_distinct_actions() {
        // Groups 13 and 18 are abstractly isomorphic but their actions
        // differ, even allowing a side swap.
        let x = abstract_action(13).unwrap();
        let y = abstract_action(18).unwrap();
        assert!(actions_isomorphic(&x, &y, false).unwrap().is_none());
        assert!(
            crate::library::isomorphic_groups(realization(13).unwrap().pres, &y.group)
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn swap_membership_small() {
        // 12 admits an edge swap; 14 does not.
        let x12 = abstract_action(12).unwrap();
        assert!(admits_edge_swap(&x12).unwrap().is_some());
        assert!(generator_exchange_extends(12).unwrap());
        let x14 = abstract_action(14).unwrap();
        assert!(admits_edge_swap(&x14).unwrap().is_none());
        assert!(SIDE_SWAP_MEMBERS.contains(&12) && !SIDE_SWAP_MEMBERS.contains(&14));
    }
}
