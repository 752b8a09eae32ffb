//! The bundled library: 35 two-sided presentations of edge-regular
//! groups, four edge-group model presentations, cached realizations,
//! and library self-verification.

use std::sync::LazyLock;

use crate::coset::{edge_subgroups, regular_representation, todd_coxeter};
use crate::perm::{
    generator_image_search, GroupIso, PermGroup, Permutation, RelatorWord,
};
use crate::presentation::FinPresentation;
use crate::reference::{
    expected_order, expected_side_types, EdgeModelKind, GROUP19_ALT_ORDER, GROUP_COUNT,
    ISO_PARTITION, STRUCTURE_MODELS,
};
use crate::{Error, Result};

/// Raw data files, embedded at compile time.
static GROUP_FILES: [(&str, &str); GROUP_COUNT] = [
    ("L01", include_str!("../../../data/presentations/L01.txt")),
    ("L02", include_str!("../../../data/presentations/L02.txt")),
    ("L03", include_str!("../../../data/presentations/L03.txt")),
    ("L04", include_str!("../../../data/presentations/L04.txt")),
    ("L05", include_str!("../../../data/presentations/L05.txt")),
    ("L06", include_str!("../../../data/presentations/L06.txt")),
    ("L07", include_str!("../../../data/presentations/L07.txt")),
    ("L08", include_str!("../../../data/presentations/L08.txt")),
    ("L09", include_str!("../../../data/presentations/L09.txt")),
    ("L10", include_str!("../../../data/presentations/L10.txt")),
    ("L11", include_str!("../../../data/presentations/L11.txt")),
    ("L12", include_str!("../../../data/presentations/L12.txt")),
    ("L13", include_str!("../../../data/presentations/L13.txt")),
    ("L14", include_str!("../../../data/presentations/L14.txt")),
    ("L15", include_str!("../../../data/presentations/L15.txt")),
    ("L16", include_str!("../../../data/presentations/L16.txt")),
    ("L17", include_str!("../../../data/presentations/L17.txt")),
    ("L18", include_str!("../../../data/presentations/L18.txt")),
    ("L19", include_str!("../../../data/presentations/L19.txt")),
    ("L20", include_str!("../../../data/presentations/L20.txt")),
    ("L21", include_str!("../../../data/presentations/L21.txt")),
    ("L22", include_str!("../../../data/presentations/L22.txt")),
    ("L23", include_str!("../../../data/presentations/L23.txt")),
    ("L24", include_str!("../../../data/presentations/L24.txt")),
    ("L25", include_str!("../../../data/presentations/L25.txt")),
    ("L26", include_str!("../../../data/presentations/L26.txt")),
    ("L27", include_str!("../../../data/presentations/L27.txt")),
    ("L28", include_str!("../../../data/presentations/L28.txt")),
    ("L29", include_str!("../../../data/presentations/L29.txt")),
    ("L30", include_str!("../../../data/presentations/L30.txt")),
    ("L31", include_str!("../../../data/presentations/L31.txt")),
    ("L32", include_str!("../../../data/presentations/L32.txt")),
    ("L33", include_str!("../../../data/presentations/L33.txt")),
    ("L34", include_str!("../../../data/presentations/L34.txt")),
    ("L35", include_str!("../../../data/presentations/L35.txt")),
];

static MODEL_FILES: [(&str, &str); 4] = [
    ("C4", include_str!("../../../data/presentations/C4.txt")),
    ("C2xC2", include_str!("../../../data/presentations/C2xC2.txt")),
    ("C6", include_str!("../../../data/presentations/C6.txt")),
    ("S3", include_str!("../../../data/presentations/S3.txt")),
];

static PRESENTATIONS: LazyLock<Vec<FinPresentation>> = LazyLock::new(|| {
    GROUP_FILES
        .iter()
        .map(|(name, text)| {
            FinPresentation::parse(name, text)
                .unwrap_or_else(|e| panic!("bundled data file {name} is invalid: {e}"))
        })
        .collect()
});

static MODEL_PRESENTATIONS: LazyLock<Vec<FinPresentation>> = LazyLock::new(|| {
    MODEL_FILES
        .iter()
        .map(|(name, text)| {
            FinPresentation::parse(name, text)
                .unwrap_or_else(|e| panic!("bundled data file {name} is invalid: {e}"))
        })
        .collect()
});

/// A realized library group: its presentation, the right regular
/// representation (generators aligned with the presentation), and the
/// two side subgroups.
#[derive(Debug)]
pub struct Realized {
    pub id: usize,
    pub pres: &'static FinPresentation,
    pub group: PermGroup,
    pub side_a: PermGroup,
    pub side_b: PermGroup,
}

static REALIZED: LazyLock<Vec<std::result::Result<Realized, String>>> = LazyLock::new(|| {
    (1..=GROUP_COUNT)
        .map(|id| {
            let pres = &PRESENTATIONS[id - 1];
            let group = regular_representation(pres).map_err(|e| e.to_string())?;
            let (side_a, side_b) = edge_subgroups(pres, &group).map_err(|e| e.to_string())?;
            Ok(Realized {
                id,
                pres,
                group,
                side_a,
                side_b,
            })
        })
        .collect()
});

/// The presentation of library group `id` (1-based).
pub fn presentation(id: usize) -> Result<&'static FinPresentation> {
    PRESENTATIONS
        .get(id.wrapping_sub(1))
        .ok_or_else(|| Error::Library(format!("library id {id} out of range 1..={GROUP_COUNT}")))
}

/// The presentation of an edge-group model.
pub fn model_presentation(kind: EdgeModelKind) -> &'static FinPresentation {
    let idx = match kind {
        EdgeModelKind::C4 => 0,
        EdgeModelKind::C2xC2 => 1,
        EdgeModelKind::C6 => 2,
        EdgeModelKind::S3 => 3,
    };
    &MODEL_PRESENTATIONS[idx]
}

/// The realized library group `id` (1-based), computed once and cached.
pub fn realization(id: usize) -> Result<&'static Realized> {
    if id == 0 || id > GROUP_COUNT {
        return Err(Error::Library(format!(
            "library id {id} out of range 1..={GROUP_COUNT}"
        )));
    }
    REALIZED[id - 1]
        .as_ref()
        .map_err(|msg| Error::Library(format!("realization of group {id} failed: {msg}")))
}

/// Search for an isomorphism from the group presented by `pres` onto
/// `target` by generator images. Returns `None` when the groups are not
/// isomorphic. Fails if `target` has more than 10^4 elements.
pub fn isomorphic_groups(pres: &FinPresentation, target: &PermGroup) -> Result<Option<GroupIso>> {
    const CAP: usize = 10_000;
    if target.order() > CAP as u64 {
        return Err(Error::BoundExceeded(format!(
            "isomorphism search target has order {} > {CAP}",
            target.order()
        )));
    }
    let source = regular_representation(pres)?;
    if source.order() != target.order() {
        return Ok(None);
    }
    if source.invariants(CAP)? != target.invariants(CAP)? {
        return Ok(None);
    }
    let src_orders: Vec<u64> = source.generators().iter().map(|g| g.order()).collect();
    let elems = target.closure_elements(CAP)?;
    let class_reps = target.conjugacy_class_reps(CAP)?;
    let rep_set: std::collections::HashSet<&Permutation> = class_reps.iter().collect();
    // Candidate pools: order-matched, conjugacy-class representatives
    // first, then the remaining elements, each part sorted.
    let pools: Vec<Vec<Permutation>> = src_orders
        .iter()
        .map(|&o| {
            let mut reps: Vec<Permutation> = elems
                .iter()
                .filter(|e| e.order() == o && rep_set.contains(e))
                .cloned()
                .collect();
            let mut rest: Vec<Permutation> = elems
                .iter()
                .filter(|e| e.order() == o && !rep_set.contains(e))
                .cloned()
                .collect();
            reps.sort_unstable();
            rest.sort_unstable();
            reps.extend(rest);
            reps
        })
        .collect();
    Ok(generator_image_search(
        pres.relators(),
        &src_orders,
        &pools,
        target.order(),
        target.degree(),
    )
    .map(GroupIso::from_images))
}

// ---------------------------------------------------------------------------
// Structure models (explicit groups for the isomorphism types)
// ---------------------------------------------------------------------------

/// Build the explicit comparison group for a structure label from
/// [`STRUCTURE_MODELS`].
pub fn structure_model(label: &str) -> Result<PermGroup> {
    fn cyc(parts: &[usize]) -> PermGroup {
        // Direct product of cyclic groups, one disjoint cycle each.
        let degree: usize = parts.iter().sum();
        let mut gens = Vec::new();
        let mut off = 0u32;
        for &k in parts {
            let cycle: Vec<u32> = (0..k as u32).map(|i| off + i).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
            off += k as u32;
        }
        PermGroup::new(degree, gens).unwrap()
    }
    fn from_presentation(text: &str) -> Result<PermGroup> {
        let p = FinPresentation::parse("model", text)?;
        regular_representation(&p)
    }
    match label {
        "C4 x C4" => Ok(cyc(&[4, 4])),
        "C4 x C2 x C2" => Ok(cyc(&[4, 2, 2])),
        "C6 x C6" => Ok(cyc(&[6, 6])),
        "C2^4" => Ok(cyc(&[2, 2, 2, 2])),
        "(C4 x C2) : C2" => {
            // a^4 = b^2 = c^2 = 1, [a,b] = 1, a^c = ab, b^c = b.
            from_presentation(
                "gens a:a b:a c:a\na a a a\nb b\nc c\na^-1 b^-1 a b\nc^-1 a c b^-1 a^-1\nc^-1 b c b^-1\n",
            )
        }
        "C4 : C4" => {
            // a^4 = b^4 = 1, b a b^-1 = a^-1.
            from_presentation("gens a:a b:a\na a a a\nb b b b\nb a b^-1 a\n")
        }
        "C2 x D8" => {
            // Central c of order 2; dihedral of order 8 on a square.
            let r = Permutation::from_cycles(6, &[&[0, 1, 2, 3]]).unwrap();
            let f = Permutation::from_cycles(6, &[&[1, 3]]).unwrap();
            let c = Permutation::from_cycles(6, &[&[4, 5]]).unwrap();
            Ok(PermGroup::new(6, vec![r, f, c]).unwrap())
        }
        "S3 x S3" => {
            let a1 = Permutation::from_cycles(6, &[&[0, 1]]).unwrap();
            let b1 = Permutation::from_cycles(6, &[&[0, 1, 2]]).unwrap();
            let a2 = Permutation::from_cycles(6, &[&[3, 4]]).unwrap();
            let b2 = Permutation::from_cycles(6, &[&[3, 4, 5]]).unwrap();
            Ok(PermGroup::new(6, vec![a1, b1, a2, b2]).unwrap())
        }
        "C6 x S3" => {
            let c = Permutation::from_cycles(9, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
            let a = Permutation::from_cycles(9, &[&[6, 7]]).unwrap();
            let b = Permutation::from_cycles(9, &[&[6, 7, 8]]).unwrap();
            Ok(PermGroup::new(9, vec![c, a, b]).unwrap())
        }
        "C2 x ((C3 x C3) : C2)" => {
            // Two 3-cycles inverted simultaneously by an involution, times
            // a central factor of order 2.
            let x = Permutation::from_cycles(8, &[&[0, 1, 2]]).unwrap();
            let y = Permutation::from_cycles(8, &[&[3, 4, 5]]).unwrap();
            let t = Permutation::from_cycles(8, &[&[1, 2], &[4, 5]]).unwrap();
            let z = Permutation::from_cycles(8, &[&[6, 7]]).unwrap();
            Ok(PermGroup::new(8, vec![x, y, t, z]).unwrap())
        }
        other => Err(Error::Library(format!("unknown structure label `{other}`"))),
    }
}

// ---------------------------------------------------------------------------
// Library verification
// ---------------------------------------------------------------------------

/// Result of one library check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Full report of [`verify_library`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct LibraryReport {
    pub checks: Vec<CheckLine>,
    pub iso_partition: Vec<Vec<usize>>,
    pub all_ok: bool,
}

impl LibraryReport {
    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let line = CheckLine {
            name: name.into(),
            ok,
            detail: detail.into(),
        };
        if !line.ok {
            self.all_ok = false;
        }
        self.checks.push(line);
    }
}

/// Verify the bundled library:
///
/// * every group realizes with its expected order and side-subgroup
///   orders, and each side subgroup is isomorphic to its declared model;
/// * the abstract isomorphism partition of the 35 groups matches
///   [`ISO_PARTITION`] (computed by invariants plus explicit isomorphism
///   search, not assumed);
/// * each isomorphism class of order 16 or 36 is isomorphic to its named
///   structure model, with a negative control;
/// * the alternative reading of the ambiguous relator in group 19
///   collapses to order [`GROUP19_ALT_ORDER`].
pub fn verify_library() -> Result<LibraryReport> {
    let mut report = LibraryReport {
        checks: Vec::new(),
        iso_partition: Vec::new(),
        all_ok: true,
    };

    // Orders and side subgroups.
    for id in 1..=GROUP_COUNT {
        let real = realization(id)?;
        let want = expected_order(id);
        let got = real.group.order();
        report.push(
            format!("group {id:02} order"),
            got == want,
            format!("expected {want}, got {got}"),
        );
        let (ka, kb) = expected_side_types(id);
        for (side_name, sub, kind) in [
            ("a", &real.side_a, ka),
            ("b", &real.side_b, kb),
        ] {
            let ok_order = sub.order() == kind.order() as u64;
            let iso = isomorphic_groups(model_presentation(kind), sub)?;
            report.push(
                format!("group {id:02} side {side_name}"),
                ok_order && iso.is_some(),
                format!(
                    "order {} (expected {}), model {} {}",
                    sub.order(),
                    kind.order(),
                    kind.name(),
                    if iso.is_some() { "matched" } else { "NOT matched" }
                ),
            );
        }
    }

    // Abstract isomorphism partition, computed.
    let mut remaining: Vec<usize> = (1..=GROUP_COUNT).collect();
    let mut partition: Vec<Vec<usize>> = Vec::new();
    while let Some(&head) = remaining.first() {
        let head_real = realization(head)?;
        let mut class = vec![head];
        let mut rest = Vec::new();
        for &other in &remaining[1..] {
            let other_real = realization(other)?;
            let iso = isomorphic_groups(head_real.pres, &other_real.group)?;
            if iso.is_some() {
                class.push(other);
            } else {
                rest.push(other);
            }
        }
        partition.push(class);
        remaining = rest;
    }
    let expected_partition: Vec<Vec<usize>> = {
        let mut v: Vec<Vec<usize>> = ISO_PARTITION.iter().map(|b| b.to_vec()).collect();
        v.sort();
        v
    };
    let mut computed_sorted = partition.clone();
    computed_sorted.sort();
    report.push(
        "isomorphism partition",
        computed_sorted == expected_partition,
        format!("computed {computed_sorted:?}"),
    );
    report.iso_partition = computed_sorted;

    // Structure models.
    for (label, members) in STRUCTURE_MODELS {
        let model = structure_model(label)?;
        let mut all = true;
        for &id in *members {
            let real = realization(id)?;
            let iso = isomorphic_groups(real.pres, &model)?;
            if iso.is_none() {
                all = false;
            }
        }
        report.push(
            format!("structure {label}"),
            all,
            format!("members {members:?}"),
        );
    }
    // Negative control: group 12 (C4 x C4) must NOT match C4 : C4.
    {
        let real = realization(12)?;
        let wrong = structure_model("C4 : C4")?;
        let iso = isomorphic_groups(real.pres, &wrong)?;
        report.push(
            "structure negative control",
            iso.is_none(),
            "group 12 vs C4 : C4 (must differ)",
        );
    }

    // Alternative reading of the ambiguous relator in group 19.
    {
        let pres = presentation(19)?;
        let alts = pres.alt_readings();
        if alts.len() != 1 {
            report.push(
                "group 19 alternative reading",
                false,
                format!("expected exactly one alt line, found {}", alts.len()),
            );
        } else {
            let alt = &alts[0];
            let alt_pres = pres.with_relator_replaced(alt.relator_index, alt.word.clone())?;
            let table = todd_coxeter(&alt_pres, &[], 1 << 16)?;
            report.push(
                "group 19 alternative reading",
                table.index as u64 == GROUP19_ALT_ORDER,
                format!(
                    "alternative reading collapses to order {} (primary gives 16)",
                    table.index
                ),
            );
        }
    }

    Ok(report)
}

/// Convenience: the relator words of a presentation as owned values
/// (used by callers assembling modified presentations).
pub fn relators_of(pres: &FinPresentation) -> Vec<RelatorWord> {
    pres.relators().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_groups_realize_with_expected_orders() {
        for id in 1..=GROUP_COUNT {
            let real = realization(id).unwrap();
            assert_eq!(real.group.order(), expected_order(id), "group {id}");
            let (ka, kb) = expected_side_types(id);
            assert_eq!(real.side_a.order(), ka.order() as u64, "group {id} side a");
            assert_eq!(real.side_b.order(), kb.order() as u64, "group {id} side b");
        }
    }

    #[test]
    fn model_presentations_have_right_orders() {
        for kind in [
            EdgeModelKind::C4,
            EdgeModelKind::C2xC2,
            EdgeModelKind::C6,
            EdgeModelKind::S3,
        ] {
            let g = regular_representation(model_presentation(kind)).unwrap();
            assert_eq!(g.order(), kind.order() as u64);
        }
    }

    #[test]
    fn structure_models_have_expected_orders() {
        for (label, members) in STRUCTURE_MODELS {
            let model = structure_model(label).unwrap();
            assert_eq!(
                model.order(),
                expected_order(members[0]),
                "structure {label}"
            );
        }
    }

    #[test]
    fn isomorphic_groups_respects_invariants() {
        // C4 x C4 vs C4 : C4 share order 16 but differ.
        let p12 = presentation(12).unwrap();
        let wrong = structure_model("C4 : C4").unwrap();
        assert!(isomorphic_groups(p12, &wrong).unwrap().is_none());
        let right = structure_model("C4 x C4").unwrap();
        assert!(isomorphic_groups(p12, &right).unwrap().is_some());
    }
}
