//! Check suites behind `alcove-adlv check`.

use std::collections::{HashSet, VecDeque};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::adlv::{
    compute_map, disagreements, dominant_coweights, formula_eval, k_level_dimension,
    nonspecial_violations, DimensionMap, Entry, EnumerationMode, MuSpec,
};
use crate::affine_weyl::{base_alcove, cm_symmetries, in_shrunken, length, walls, Alcove};
use crate::cli::mapfile::GoldenRow;
use crate::error::Result;
use crate::galleries::{q1_of, star, vertices_in_ball, Vertex};
use crate::root_data::{RootSystem, RootSystemKind};

/// Outcome of one named check; `detail` names a counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub group: RootSystemKind,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(suite: &str, group: RootSystemKind, checks: Vec<CheckResult>) -> Report {
        Report {
            suite: suite.to_string(),
            group,
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }
}

fn describe(rs: &RootSystem, a: &Alcove) -> String {
    format!(
        "lambda={:?} w={} length={}",
        a.lambda,
        a.word(rs),
        length(rs, a)
    )
}

/// Pipeline against the closed formula on every shrunken alcove of the window.
pub fn formula_agreement(dm: &DimensionMap) -> CheckResult {
    let rs = &dm.rs;
    let mut total = 0;
    for (a, e) in dm.sorted() {
        if !in_shrunken(rs, &a) {
            continue;
        }
        total += 1;
        match formula_eval(rs, &a) {
            Ok(f) if f == e => {}
            other => {
                let detail = format!("{}: pipeline {e}, formula {other:?}", describe(rs, &a));
                return CheckResult::new("formula-agreement", false, detail);
            }
        }
    }
    CheckResult::new(
        "formula-agreement",
        true,
        format!("{total} shrunken alcoves agree"),
    )
}

pub fn stability(dm: &DimensionMap) -> CheckResult {
    let detail = format!(
        "radius {} vs {} on window {}",
        dm.radius,
        dm.radius - 1,
        dm.window
    );
    CheckResult::new("stability", dm.stability, detail)
}

/// `k_level_dimension(mu) = <mu, rho>` for every dominant `mu` up to `max_pairing`.
pub fn mu_rho(dm: &DimensionMap, max_pairing: i64) -> Result<Vec<CheckResult>> {
    let rs = &dm.rs;
    let mut out = Vec::new();
    for mu in dominant_coweights(rs, max_pairing) {
        let spec = MuSpec::new(rs, mu)?;
        let name = format!("mu={mu:?}");
        let r = match k_level_dimension(&spec, dm) {
            Ok(d) => CheckResult::new(
                &name,
                d == spec.pairing,
                format!("dimension {d}, <mu,rho> {}", spec.pairing),
            ),
            Err(e) => CheckResult::new(&name, false, e.to_string()),
        };
        out.push(r);
    }
    Ok(out)
}

/// Window needed to hold every coset up to `max_pairing`.
pub fn mu_rho_window(rs: &RootSystem, max_pairing: i64) -> i64 {
    2 * max_pairing + rs.delta() as i64
}

/// Compare a map with transcribed figure rows. Rows beyond the window are
/// counted but not compared.
pub fn golden(dm: &DimensionMap, rows: &[GoldenRow]) -> Result<CheckResult> {
    let rs = &dm.rs;
    let (mut compared, mut outside) = (0, 0);
    for row in rows {
        if row.group != rs.kind {
            continue;
        }
        let a = row.alcove(rs)?;
        let Some(got) = dm.get(&a) else {
            outside += 1;
            continue;
        };
        compared += 1;
        let want = Entry::from_dim(row.dim);
        if got != want {
            let detail = format!("{}: map {got}, golden {want}", describe(rs, &a));
            return Ok(CheckResult::new("golden", false, detail));
        }
    }
    Ok(CheckResult::new(
        "golden",
        true,
        format!("{compared} rows match, {outside} outside the window"),
    ))
}

/// `Q1` is the only minimal-length alcove at each sampled vertex, and a
/// breadth-first search from `C_M` with shuffled wall order always reaches it first.
pub fn q1_uniqueness(rs: &RootSystem, samples: usize, ball: i64, seed: u64) -> CheckResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let verts = vertices_in_ball(rs, ball);
    for _ in 0..samples {
        let v = verts[rng.gen_range(0..verts.len())];
        let st = star(rs, &v);
        let min = st
            .iter()
            .map(|a| length(rs, a))
            .min()
            .expect("stars are non-empty");
        let nearest = st.iter().filter(|a| length(rs, a) == min).count();
        let q1 = q1_of(rs, &v);
        let found = shuffled_bfs(rs, &v, &mut rng);
        if nearest != 1 || found != q1 {
            let detail = format!(
                "vertex {:?}: {nearest} nearest alcoves, search found {}",
                v.point,
                describe(rs, &found)
            );
            return CheckResult::new("q1-uniqueness", false, detail);
        }
    }
    CheckResult::new("q1-uniqueness", true, format!("{samples} random vertices"))
}

fn shuffled_bfs(rs: &RootSystem, v: &Vertex, rng: &mut StdRng) -> Alcove {
    let start = base_alcove(rs);
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        if a.contains_vertex(rs, v.point) {
            return a;
        }
        let mut next = walls(rs, &a);
        next.shuffle(rng);
        for (_, n) in next {
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    unreachable!("every vertex lies in some alcove")
}

/// `n_easy <= 3 - m` for A2 and `n_easy <= 4 - m` for C2.
pub fn easy_bounds(dm: &DimensionMap) -> CheckResult {
    let cap = match dm.rs.kind {
        RootSystemKind::A1 => return CheckResult::new("easy-bounds", true, "no bound for rank 1"),
        RootSystemKind::A2 => 3,
        RootSystemKind::C2 => 4,
    };
    for (m, e) in &dm.stats.max_easy_by_m {
        if *e as i64 > cap - *m as i64 {
            return CheckResult::new(
                "easy-bounds",
                false,
                format!("m={m} reached {e} easy choices"),
            );
        }
    }
    CheckResult::new(
        "easy-bounds",
        true,
        format!("max easy choices by m: {:?}", dm.stats.max_easy_by_m),
    )
}

pub fn mode_equivalence(dm: &DimensionMap) -> Result<CheckResult> {
    let other_mode = match dm.mode {
        EnumerationMode::AllVertices => EnumerationMode::FundamentalDomain,
        EnumerationMode::FundamentalDomain => EnumerationMode::AllVertices,
    };
    let other = compute_map(&dm.rs, dm.radius, dm.window, other_mode)?;
    for (a, e) in dm.sorted() {
        if other.get(&a) != Some(e) {
            let detail = format!("{}: {e} vs {:?}", describe(&dm.rs, &a), other.get(&a));
            return Ok(CheckResult::new("mode-equivalence", false, detail));
        }
    }
    Ok(CheckResult::new(
        "mode-equivalence",
        other.entries.len() == dm.entries.len(),
        "entries identical",
    ))
}

/// Entries are invariant under the symmetries of `C_M`.
pub fn symmetry_invariance(dm: &DimensionMap) -> CheckResult {
    let rs = &dm.rs;
    for s in cm_symmetries(rs) {
        for (a, e) in dm.sorted() {
            let b = s.apply(rs, &a);
            if dm.get(&b) != Some(e) {
                let detail = format!(
                    "{} has {e}, its image {} has {:?}",
                    describe(rs, &a),
                    describe(rs, &b),
                    dm.get(&b)
                );
                return CheckResult::new("symmetry-invariance", false, detail);
            }
        }
    }
    CheckResult::new("symmetry-invariance", true, "")
}

/// A2: no alcove receives two different piece dimensions.
pub fn no_collisions(dm: &DimensionMap) -> CheckResult {
    match disagreements(dm).first() {
        None => CheckResult::new("no-collisions", true, ""),
        Some((a, ps)) => {
            let dims: Vec<i64> = ps.iter().map(|p| p.dim).collect();
            CheckResult::new(
                "no-collisions",
                false,
                format!("{} receives {dims:?}", describe(&dm.rs, a)),
            )
        }
    }
}

/// C2: every disagreement pairs a smaller non-special piece with a special one.
pub fn nonspecial_audit(dm: &DimensionMap) -> CheckResult {
    let n = disagreements(dm).len();
    match nonspecial_violations(dm).first() {
        None => CheckResult::new(
            "nonspecial-audit",
            true,
            format!("{n} alcoves with differing pieces"),
        ),
        Some((a, lo, hi)) => {
            let detail = format!(
                "{}: {:?} gives {}, {:?} gives {}",
                describe(&dm.rs, a),
                lo.vertex.point,
                lo.dim,
                hi.vertex.point,
                hi.dim
            );
            CheckResult::new("nonspecial-audit", false, detail)
        }
    }
}

/// `(l(w) + l(eta2^{-1} eta1 eta2))` is even for every non-empty shrunken entry.
pub fn parity(dm: &DimensionMap) -> CheckResult {
    let rs = &dm.rs;
    for (a, e) in dm.sorted() {
        if in_shrunken(rs, &a) && e != Entry::Empty {
            let c = crate::adlv::conjugated_eta(rs, &a);
            if (length(rs, &a) + rs.length(c) as i64) % 2 != 0 {
                return CheckResult::new("parity", false, describe(rs, &a));
            }
        }
    }
    CheckResult::new("parity", true, "")
}

pub fn zero_only_at_base(dm: &DimensionMap) -> CheckResult {
    CheckResult::new("zero-only-at-base", crate::adlv::zero_only_at_base(dm), "")
}

/// The property suite on a computed map.
pub fn properties(dm: &DimensionMap, seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = vec![
        q1_uniqueness(&dm.rs, 500, 12, seed),
        easy_bounds(dm),
        mode_equivalence(dm)?,
        symmetry_invariance(dm),
        stability(dm),
        parity(dm),
        zero_only_at_base(dm),
    ];
    match dm.rs.kind {
        RootSystemKind::A2 => out.push(no_collisions(dm)),
        RootSystemKind::C2 => out.push(nonspecial_audit(dm)),
        RootSystemKind::A1 => {}
    }
    Ok(out)
}
