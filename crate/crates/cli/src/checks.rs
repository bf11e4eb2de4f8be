//! The per-graph invariant battery behind `verify` and the consistency
//! checks of `analyze`.

use eccspectra::{
    build_partition, build_tg, center_of_g, classify_decomposition, decompose, ecc_by_lemma,
    eigenvalues_float, inertia_exact, is_irreducible, is_spectrum_symmetric, oracle_distances,
    oracle_minor_sums, predicted_inertia_from, spectral, verify_block_structure, verify_tg,
    ClassKind, DistanceMatrix, EccProfile, Graph, Result,
};
use std::collections::VecDeque;

use crate::report::Check;

/// Summary of one verified case.
pub struct CaseOutcome {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub class_tag: String,
    /// Center case tag when the theorem battery ran.
    pub case_tag: Option<&'static str>,
    pub theorems_checked: bool,
    pub checks: Vec<Check>,
}

impl CaseOutcome {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn class_tag(kind: ClassKind, tree: bool) -> String {
    let base = match kind {
        ClassKind::Tree => "tree",
        ClassKind::ClassB => "class-b",
        ClassKind::BiBlockNotB => "bi-block-not-b",
        ClassKind::Other => "other",
    };
    if tree && kind == ClassKind::ClassB {
        format!("{base} (tree)")
    } else {
        base.to_string()
    }
}

/// Every diametrical path passes through the center: the central vertices
/// form a vertex cut of each diametrical pair's shortest-path DAG.
fn diametrical_paths_hit_center(g: &Graph, d: &DistanceMatrix, p: &EccProfile) -> Option<String> {
    let diam = p.diameter;
    for u in g.vertices() {
        for v in (u + 1)..=g.n() {
            if d.get(u, v) != diam || p.center.contains(&u) || p.center.contains(&v) {
                continue;
            }
            if !p.center.iter().any(|&w| d.get(u, w) + d.get(w, v) == diam) {
                return Some(format!("no central vertex on any {u}-{v} geodesic"));
            }
            let mut seen = vec![false; g.n() + 1];
            seen[u] = true;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                if x == v {
                    return Some(format!("a diametrical {u}-{v} path avoids the center"));
                }
                for &w in g.neighbors(x) {
                    let on_dag =
                        d.get(u, w) == d.get(u, x) + 1 && d.get(u, w) + d.get(w, v) == diam;
                    if on_dag && !seen[w] && !p.center.contains(&w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    None
}

/// Runs the full invariant suite on one connected graph. Theorem checks run
/// only when the graph is in class B with diameter at least four; otherwise
/// the base oracle checks run alone.
pub fn run_case(g: &Graph) -> Result<CaseOutcome> {
    let d = eccspectra::all_pairs_distances(g)?;
    let profile = eccspectra::ecc_profile(&d);
    let bd = decompose(g)?;
    let class = classify_decomposition(g, &bd);
    let e = eccspectra::eccentricity_matrix_from(&d, &profile);
    let mut checks = Vec::new();

    // Oracle and metric invariants.
    checks.push(Check::of(
        "distances-oracle",
        d == oracle_distances(g),
        None,
    ));
    let bounds_ok =
        profile.radius <= profile.diameter && profile.diameter <= 2 * profile.radius;
    checks.push(Check::of(
        "profile-bounds",
        bounds_ok,
        (!bounds_ok).then(|| {
            format!("radius {} diameter {}", profile.radius, profile.diameter)
        }),
    ));
    let mut matrix_note = None;
    'rows: for u in g.vertices() {
        if !e.row(u).contains(&e.ecc_of(u)) {
            matrix_note = Some(format!("row {u} misses its eccentricity"));
            break;
        }
        for v in g.vertices() {
            let x = e.get(u, v);
            if x != 0 && (x < profile.radius || x > profile.diameter) {
                matrix_note = Some(format!("entry ({u},{v}) = {x} out of range"));
                break 'rows;
            }
        }
    }
    checks.push(Check::of(
        "ecc-matrix-invariants",
        matrix_note.is_none(),
        matrix_note,
    ));

    let poly = spectral::char_poly_ecc(&e);
    let inertia = inertia_exact(&poly)?;
    let spectrum = eigenvalues_float(&e)?;
    let (fp, fm, fz) = spectrum.sign_counts(1e-8 * e.frobenius_norm());
    let counts_agree = (inertia.plus, inertia.minus, inertia.zero) == (fp, fm, fz);
    checks.push(Check::of(
        "sign-counts",
        counts_agree,
        (!counts_agree).then(|| format!("exact {inertia} float ({fp}, {fm}, {fz})")),
    ));

    if g.n() <= 8 {
        let big = spectral::big_matrix_of(&e);
        let mut note = None;
        for r in 1..=g.n() {
            let delta = oracle_minor_sums(&big, r)?;
            let signed = if r % 2 == 0 { delta.clone() } else { -delta };
            if poly.coeff(g.n() - r) != &signed {
                note = Some(format!("coefficient of order {r} differs from minor sums"));
                break;
            }
        }
        checks.push(Check::of("minor-sums-oracle", note.is_none(), note));
    }

    let theorem_ready = class.is_class_b() && profile.diameter >= 4;
    let mut case_tag = None;
    if theorem_ready {
        let tg = build_tg(g, &bd)?;
        let tg_report = verify_tg(g, &tg);
        for c in &tg_report.checks {
            checks.push(Check::of(
                &format!("tg-{}", c.name),
                c.pass,
                c.witness.clone(),
            ));
        }

        let center = center_of_g(g, &tg, &bd)?;
        case_tag = Some(center.case.tag());
        let center_ok = center.center_g == profile.center
            && center.center_tg.iter().all(|z| center.center_g.contains(z));
        checks.push(Check::of(
            "center-theorem",
            center_ok,
            (!center_ok).then(|| {
                format!(
                    "theorem {:?} brute-force {:?}",
                    center.center_g, profile.center
                )
            }),
        ));

        let mut lemma_note = None;
        'blocks: for (bi, block) in bd.blocks.iter().enumerate() {
            for &u in &block.vertices {
                if !bd.is_cut_vertex(u) {
                    let predicted = ecc_by_lemma(&profile, &bd, bi, u)?;
                    if predicted != profile.ecc_of(u) {
                        lemma_note = Some(format!(
                            "vertex {u}: lemma {predicted}, actual {}",
                            profile.ecc_of(u)
                        ));
                        break 'blocks;
                    }
                }
            }
        }
        checks.push(Check::of("ecc-lemma", lemma_note.is_none(), lemma_note));

        let path_note = diametrical_paths_hit_center(g, &d, &profile);
        checks.push(Check::of(
            "diametrical-center-cut",
            path_note.is_none(),
            path_note,
        ));

        let part = build_partition(g, &d, &profile, &bd, &center)?;
        let structure = verify_block_structure(&e, &part, &profile);
        let witness = structure.first_failure().map(|c| {
            let w = c.witness.as_ref();
            format!(
                "{}{}",
                c.name,
                w.map(|w| format!(
                    " at ({},{}): expected {}, found {}",
                    w.row, w.col, w.expected, w.found
                ))
                .unwrap_or_default()
            )
        });
        checks.push(Check::of(
            "block-structure",
            structure.all_pass(),
            witness,
        ));
        if let Some(r) = part.r {
            checks.push(Check::of(
                "even-cut-r-at-least-2",
                r >= 2,
                (r < 2).then(|| format!("r = {r}")),
            ));
        }

        let pred = predicted_inertia_from(g, &d, &profile, &center)?;
        checks.push(Check::of(
            "inertia-prediction",
            pred.inertia == inertia,
            (pred.inertia != inertia)
                .then(|| format!("predicted {} exact {inertia}", pred.inertia)),
        ));

        let odd = profile.diameter % 2 == 1;
        let symmetric = is_spectrum_symmetric(&poly);
        checks.push(Check::of(
            "symmetry-parity",
            symmetric == odd,
            (symmetric != odd).then(|| {
                format!("diameter {} but symmetric = {symmetric}", profile.diameter)
            }),
        ));

        checks.push(Check::of(
            "irreducibility",
            is_irreducible(&e),
            (!is_irreducible(&e)).then(|| "support graph disconnected".to_string()),
        ));
    }

    Ok(CaseOutcome {
        n: g.n(),
        m: g.edge_count(),
        diameter: profile.diameter,
        class_tag: class_tag(class.kind, class.is_tree),
        case_tag,
        theorems_checked: theorem_ready,
        checks,
    })
}
