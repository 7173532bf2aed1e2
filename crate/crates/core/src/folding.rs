//! Choice edges, choice trees and comprehensive folding results.

use std::collections::HashMap;

use crate::affine_weyl::{hyperplane_between, reflect, separates_from_base, Alcove, Hyperplane};
use crate::galleries::{Gallery, SuperpieceSpec};
use crate::root_data::RootSystem;

/// A gallery after some tail reflections; consecutive entries may coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedGallery {
    pub alcoves: Vec<Alcove>,
}

impl From<&Gallery> for FoldedGallery {
    fn from(g: &Gallery) -> Self {
        FoldedGallery {
            alcoves: g.alcoves.clone(),
        }
    }
}

/// One root-to-leaf path of a choice tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoldOutcome {
    pub final_alcove: Alcove,
    pub n_hard: usize,
    pub n_easy: usize,
    /// Edge indices where the tail was folded.
    pub fold_positions: Vec<usize>,
}

/// First edge at or after `from_index` that is not a stutter and whose
/// hyperplane separates `C_M` from the alcove before it.
pub fn next_choice_edge(
    rs: &RootSystem,
    g: &FoldedGallery,
    from_index: usize,
) -> Option<(usize, Hyperplane)> {
    first_choice_edge(rs, &g.alcoves, from_index)
}

fn first_choice_edge(rs: &RootSystem, g: &[Alcove], from: usize) -> Option<(usize, Hyperplane)> {
    (from..g.len().saturating_sub(1)).find_map(|j| {
        if g[j] == g[j + 1] {
            return None;
        }
        let h =
            hyperplane_between(rs, &g[j], &g[j + 1]).expect("folded gallery steps are adjacent");
        separates_from_base(rs, &h, &g[j]).then_some((j, h))
    })
}

/// Depth-first traversal of the choice tree of `omega`, hard branch first.
pub fn enumerate_outcomes(rs: &RootSystem, omega: &Gallery) -> Vec<FoldOutcome> {
    let mut out = Vec::new();
    let mut g = omega.alcoves.clone();
    let mut folds = Vec::new();
    walk(rs, &mut g, 0, 0, &mut folds, &mut out);
    out
}

fn walk(
    rs: &RootSystem,
    g: &mut [Alcove],
    from: usize,
    n_hard: usize,
    folds: &mut Vec<usize>,
    out: &mut Vec<FoldOutcome>,
) {
    let Some((j, h)) = first_choice_edge(rs, g, from) else {
        out.push(FoldOutcome {
            final_alcove: *g.last().expect("non-empty gallery"),
            n_hard,
            n_easy: folds.len(),
            fold_positions: folds.clone(),
        });
        return;
    };
    walk(rs, g, j + 1, n_hard + 1, folds, out);

    for a in g[j + 1..].iter_mut() {
        *a = reflect(rs, &h, a);
    }
    folds.push(j);
    walk(rs, g, j + 1, n_hard, folds, out);
    folds.pop();
    for a in g[j + 1..].iter_mut() {
        *a = reflect(rs, &h, a);
    }
}

/// `l(Gamma) + l(Gamma^c) - n_hard - 2`, lengths counting alcoves.
pub fn cf_dimension(o: &FoldOutcome, spec: &SuperpieceSpec) -> i64 {
    (spec.gamma.len() + spec.gamma_c.len()) as i64 - o.n_hard as i64 - 2
}

/// Piece dimensions of one superpiece, plus the finals reached with
/// differing cf-dimensions.
#[derive(Debug, Clone, Default)]
pub struct SuperpieceResult {
    pub dims: HashMap<Alcove, i64>,
    /// `(final, smaller, larger)` for every final reached with two values.
    pub collisions: Vec<(Alcove, i64, i64)>,
    pub outcomes: usize,
    pub max_easy: usize,
}

pub fn superpiece_result(rs: &RootSystem, spec: &SuperpieceSpec) -> SuperpieceResult {
    let outcomes = enumerate_outcomes(rs, &spec.omega);
    let mut values: HashMap<Alcove, (i64, i64)> = HashMap::new();
    for o in &outcomes {
        let d = cf_dimension(o, spec);
        values
            .entry(o.final_alcove)
            .and_modify(|(lo, hi)| {
                *lo = (*lo).min(d);
                *hi = (*hi).max(d);
            })
            .or_insert((d, d));
    }
    let mut collisions: Vec<(Alcove, i64, i64)> = values
        .iter()
        .filter(|(_, (lo, hi))| lo != hi)
        .map(|(a, (lo, hi))| (*a, *lo, *hi))
        .collect();
    collisions.sort_by_key(|(a, _, _)| a.sort_key(rs));
    SuperpieceResult {
        dims: values.into_iter().map(|(a, (_, hi))| (a, hi)).collect(),
        collisions,
        outcomes: outcomes.len(),
        max_easy: outcomes.iter().map(|o| o.n_easy).max().unwrap_or(0),
    }
}

/// Maximum cf-dimension per final alcove.
pub fn superpiece_map(rs: &RootSystem, spec: &SuperpieceSpec) -> HashMap<Alcove, i64> {
    superpiece_result(rs, spec).dims
}

/// Index of the first choice edge of the unfolded `Omega`, if any.
pub fn first_choice_index(rs: &RootSystem, omega: &Gallery) -> Option<usize> {
    first_choice_edge(rs, &omega.alcoves, 0).map(|(j, _)| j)
}
