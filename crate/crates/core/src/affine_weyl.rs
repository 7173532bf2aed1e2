//! Alcoves of the standard apartment, affine root hyperplanes, reflections,
//! and the maps `eta1`, `eta2` used by the shrunken-chamber formula.
//!
//! Points are chart coordinates scaled by [`DENOM`], so every alcove
//! barycenter and every vertex has integer coordinates.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{mat_apply, mat_mul, Coords, Matrix, RootSystem, WeylId, IDENTITY};

/// Common denominator of all vertices and barycenters in the chart.
pub const DENOM: i64 = 6;

/// The affine hyperplane `<alpha, x> = k` for a positive root `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hyperplane {
    /// Index into [`RootSystem::positive_roots`].
    pub root: usize,
    pub k: i64,
}

impl Hyperplane {
    /// Sign of `<alpha, p> - k` for a point scaled by `den`.
    pub fn side(&self, rs: &RootSystem, p: Coords, den: i64) -> i64 {
        (rs.pairing(rs.positive_roots[self.root], p) - self.k * den).signum()
    }

    /// Whether the hyperplane strictly separates the interiors of two alcoves.
    pub fn separates(&self, rs: &RootSystem, a: &Alcove, b: &Alcove) -> bool {
        self.side(rs, a.barycenter, DENOM) != self.side(rs, b.barycenter, DENOM)
    }
}

/// The alcove `t_lambda w C_M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alcove {
    /// Translation part, in coroot coordinates.
    pub lambda: Coords,
    pub w: WeylId,
    /// Barycenter in chart coordinates, scaled by [`DENOM`].
    pub barycenter: Coords,
}

impl Alcove {
    pub fn new(rs: &RootSystem, lambda: Coords, w: WeylId) -> Alcove {
        let shift = rs.coroot_to_chart(lambda);
        let b0 = base_barycenter(rs);
        let moved = rs.act(w, b0);
        Alcove {
            lambda,
            w,
            barycenter: [DENOM * shift[0] + moved[0], DENOM * shift[1] + moved[1]],
        }
    }

    /// Exact barycenter in the pairing chart.
    pub fn barycenter_rational(&self) -> [Ratio<i64>; 2] {
        [
            Ratio::new(self.barycenter[0], DENOM),
            Ratio::new(self.barycenter[1], DENOM),
        ]
    }

    /// Vertices scaled by [`DENOM`], in the order of the vertices of `C_M`.
    pub fn vertices(&self, rs: &RootSystem) -> Vec<Coords> {
        let shift = rs.coroot_to_chart(self.lambda);
        base_vertices(rs)
            .into_iter()
            .map(|v| {
                let m = rs.act(self.w, v);
                [DENOM * shift[0] + m[0], DENOM * shift[1] + m[1]]
            })
            .collect()
    }

    pub fn contains_vertex(&self, rs: &RootSystem, v: Coords) -> bool {
        self.vertices(rs).contains(&v)
    }

    /// `floor(<alpha, x>)` on the interior, one entry per positive root.
    pub fn floors(&self, rs: &RootSystem) -> Vec<i64> {
        rs.positive_roots
            .iter()
            .map(|r| rs.pairing(*r, self.barycenter).div_euclid(DENOM))
            .collect()
    }

    pub fn word(&self, rs: &RootSystem) -> String {
        rs.element(self.w).word_string()
    }

    /// Canonical sort key: length, then `lambda`, then the Weyl element.
    pub fn sort_key(&self, rs: &RootSystem) -> (i64, Coords, WeylId) {
        (length(rs, self), self.lambda, self.w)
    }

    /// Translate by a coroot-lattice vector.
    pub fn translate(&self, rs: &RootSystem, mu: Coords) -> Alcove {
        Alcove::new(rs, [self.lambda[0] + mu[0], self.lambda[1] + mu[1]], self.w)
    }
}

/// Vertices of `C_M` scaled by [`DENOM`]: the origin, then one vertex per
/// simple root on the far wall `<theta, x> = 1`.
pub fn base_vertices(rs: &RootSystem) -> Vec<Coords> {
    let theta = rs.positive_roots[rs.highest_root_index()];
    let mut out = vec![[0, 0]];
    for i in 0..rs.rank {
        let mut v = [0i64; 2];
        v[i] = DENOM / theta[i];
        out.push(v);
    }
    out
}

pub fn base_barycenter(rs: &RootSystem) -> Coords {
    let verts = base_vertices(rs);
    let n = verts.len() as i64;
    let s = verts
        .iter()
        .fold([0, 0], |acc, v| [acc[0] + v[0], acc[1] + v[1]]);
    [s[0] / n, s[1] / n]
}

pub fn base_alcove(rs: &RootSystem) -> Alcove {
    Alcove::new(rs, [0, 0], WeylId::IDENTITY)
}

/// Number of affine hyperplanes separating `a` from `C_M`.
pub fn length(rs: &RootSystem, a: &Alcove) -> i64 {
    a.floors(rs)
        .iter()
        .map(|k| if *k >= 0 { *k } else { -*k })
        .sum()
}

/// Whether the hyperplane separates `C_M` from `a`.
pub fn separates_from_base(rs: &RootSystem, h: &Hyperplane, a: &Alcove) -> bool {
    let f = rs
        .pairing(rs.positive_roots[h.root], a.barycenter)
        .div_euclid(DENOM);
    (f < h.k) != (0 < h.k)
}

/// The neighbour of `a` across its wall of type `t` (0 is the affine wall).
pub fn neighbor(rs: &RootSystem, a: &Alcove, t: usize) -> Alcove {
    if t == 0 {
        let theta = rs.highest_root_index();
        let shift = rs.act(a.w, rs.coroot_chart[theta]);
        let shift = rs
            .chart_to_coroot(shift)
            .expect("image of a coroot is a coroot");
        let w = rs.mul(a.w, rs.root_reflection(theta));
        Alcove::new(rs, [a.lambda[0] + shift[0], a.lambda[1] + shift[1]], w)
    } else {
        Alcove::new(rs, a.lambda, rs.mul(a.w, rs.simple_reflection(t as u8)))
    }
}

/// The hyperplane containing the common wall of two adjacent alcoves.
pub fn hyperplane_between(rs: &RootSystem, a: &Alcove, b: &Alcove) -> Option<Hyperplane> {
    let fa = a.floors(rs);
    let fb = b.floors(rs);
    let mut differing = (0..fa.len()).filter(|&i| fa[i] != fb[i]);
    let root = differing.next()?;
    if differing.next().is_some() || (fa[root] - fb[root]).abs() != 1 {
        return None;
    }
    Some(Hyperplane {
        root,
        k: fa[root].max(fb[root]),
    })
}

pub fn adjacent(rs: &RootSystem, a: &Alcove, b: &Alcove) -> bool {
    hyperplane_between(rs, a, b).is_some()
}

/// The `rank + 1` walls of `a` with the neighbour across each, by wall type.
pub fn walls(rs: &RootSystem, a: &Alcove) -> Vec<(Hyperplane, Alcove)> {
    (0..=rs.rank)
        .map(|t| {
            let n = neighbor(rs, a, t);
            let h = hyperplane_between(rs, a, &n).expect("neighbours share a wall");
            (h, n)
        })
        .collect()
}

/// Image of `a` under the reflection `x -> x - (<alpha, x> - k) alpha^vee`.
pub fn reflect(rs: &RootSystem, h: &Hyperplane, a: &Alcove) -> Alcove {
    let root = rs.positive_roots[h.root];
    let co = rs.coroot_chart[h.root];
    let lam = rs.coroot_to_chart(a.lambda);
    let c = rs.pairing(root, lam) - h.k;
    let moved = [lam[0] - c * co[0], lam[1] - c * co[1]];
    let lambda = rs
        .chart_to_coroot(moved)
        .expect("reflection preserves the coroot lattice");
    Alcove::new(rs, lambda, rs.mul(rs.root_reflection(h.root), a.w))
}

pub fn eta1(_rs: &RootSystem, a: &Alcove) -> WeylId {
    a.w
}

/// The `u` with the barycenter of `a` in the open chamber `u D`.
pub fn eta2(rs: &RootSystem, a: &Alcove) -> WeylId {
    chamber_of(rs, a.barycenter)
}

fn chamber_of(rs: &RootSystem, p: Coords) -> WeylId {
    rs.weyl_elements()
        .iter()
        .find(|e| {
            let q = rs.act(rs.inv(e.id), p);
            (0..rs.rank).all(|i| q[i] > 0)
        })
        .map(|e| e.id)
        .expect("regular point lies in a chamber")
}

/// Locate the alcove containing the point `num / den` (chart coordinates).
pub fn locate(rs: &RootSystem, num: Coords, den: i64) -> Result<Alcove> {
    if rs
        .positive_roots
        .iter()
        .any(|r| rs.pairing(*r, num).rem_euclid(den) == 0)
    {
        return Err(Error::NotAnAlcove);
    }
    let k = [num[0].div_euclid(den), num[1].div_euclid(den)];
    let theta = rs.positive_roots[rs.highest_root_index()];
    let second: &[i64] = if rs.rank == 1 { &[0] } else { &[0, 1] };
    for dx in [0, 1] {
        for &dy in second {
            let corner = if rs.rank == 1 {
                [k[0] + dx, 0]
            } else {
                [k[0] + dx, k[1] + dy]
            };
            let Some(lambda) = rs.chart_to_coroot(corner) else {
                continue;
            };
            let rel = [num[0] - den * corner[0], num[1] - den * corner[1]];
            for e in rs.weyl_elements() {
                let q = rs.act(rs.inv(e.id), rel);
                if (0..rs.rank).all(|i| q[i] > 0) && rs.pairing(theta, q) < den {
                    return Ok(Alcove::new(rs, lambda, e.id));
                }
            }
        }
    }
    Err(Error::NotAnAlcove)
}

pub fn from_barycenter(rs: &RootSystem, p: Coords) -> Result<Alcove> {
    locate(rs, p, DENOM)
}

/// Strips removed to form the shrunken region, as `(lower, upper)` pairs.
///
/// Every positive root contributes the strip `0 < <alpha, x> < 1` containing
/// `C_M`. For A1 and A2 these are exactly the strips between each wall of
/// `C_M` and its nearest parallel beyond `C_M`; for C2 the root
/// `alpha_1 + alpha_2` adds a fourth strip, as drawn in the Sp4 result figure.
pub fn shrunken_strips(rs: &RootSystem) -> Vec<(Hyperplane, Hyperplane)> {
    (0..rs.positive_roots.len())
        .map(|root| (Hyperplane { root, k: 0 }, Hyperplane { root, k: 1 }))
        .collect()
}

/// Strips between each wall of `C_M` and its nearest parallel on the far side.
pub fn wall_strips(rs: &RootSystem) -> Vec<(Hyperplane, Hyperplane)> {
    let base = base_alcove(rs);
    base_walls(rs)
        .into_iter()
        .map(|h| {
            let f = rs
                .pairing(rs.positive_roots[h.root], base.barycenter)
                .div_euclid(DENOM);
            let partner = Hyperplane {
                root: h.root,
                k: if h.k == f { f + 1 } else { f },
            };
            if h.k < partner.k {
                (h, partner)
            } else {
                (partner, h)
            }
        })
        .collect()
}

fn outside_strips(rs: &RootSystem, strips: &[(Hyperplane, Hyperplane)], a: &Alcove) -> bool {
    strips.iter().all(|(lo, hi)| {
        let p = rs.pairing(rs.positive_roots[lo.root], a.barycenter);
        !(lo.k * DENOM < p && p < hi.k * DENOM)
    })
}

/// Wall hyperplanes of `C_M`: `<alpha_i, x> = 0` for simple roots, then `<theta, x> = 1`.
pub fn base_walls(rs: &RootSystem) -> Vec<Hyperplane> {
    let mut out: Vec<Hyperplane> = (0..rs.rank).map(|i| Hyperplane { root: i, k: 0 }).collect();
    out.push(Hyperplane {
        root: rs.highest_root_index(),
        k: 1,
    });
    out
}

/// Whether `a` lies in the union of shrunken Weyl chambers.
pub fn in_shrunken(rs: &RootSystem, a: &Alcove) -> bool {
    outside_strips(rs, &shrunken_strips(rs), a)
}

/// Whether `a` avoids every wall strip of `C_M`; see [`wall_strips`].
pub fn outside_wall_strips(rs: &RootSystem, a: &Alcove) -> bool {
    outside_strips(rs, &wall_strips(rs), a)
}

/// Whether `a` lies in the union over `w` of `w t_b w^{-1} D'_w`, where
/// `D'_w` is the shrunken part of the chamber `w D`.
pub fn b_shifted_region(rs: &RootSystem, b_lambda: Coords, a: &Alcove) -> bool {
    b_shift_witness(rs, b_lambda, a).is_some()
}

/// The chamber `w` witnessing membership in the `b`-shifted region.
pub fn b_shift_witness(rs: &RootSystem, b_lambda: Coords, a: &Alcove) -> Option<WeylId> {
    rs.weyl_elements().iter().map(|e| e.id).find(|&w| {
        let shift = rs
            .chart_to_coroot(rs.act(w, rs.coroot_to_chart(b_lambda)))
            .expect("coroot lattice is W-stable");
        let back = a.translate(rs, [-shift[0], -shift[1]]);
        in_shrunken(rs, &back) && eta2(rs, &back) == w
    })
}

/// An affine map `x -> linear x + translation` on the chart, with the
/// translation scaled by [`DENOM`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineIsometry {
    pub linear: Matrix,
    pub translation: Coords,
}

impl AffineIsometry {
    pub const IDENTITY: AffineIsometry = AffineIsometry {
        linear: IDENTITY,
        translation: [0, 0],
    };

    /// The reflection in `h`.
    pub fn reflection(rs: &RootSystem, h: &Hyperplane) -> AffineIsometry {
        let s = rs.element(rs.root_reflection(h.root)).matrix;
        let co = rs.coroot_chart[h.root];
        AffineIsometry {
            linear: s,
            translation: [h.k * DENOM * co[0], h.k * DENOM * co[1]],
        }
    }

    /// Apply to a point scaled by [`DENOM`].
    pub fn apply_point(&self, p: Coords) -> Coords {
        let m = mat_apply(&self.linear, p);
        [m[0] + self.translation[0], m[1] + self.translation[1]]
    }

    pub fn apply(&self, rs: &RootSystem, a: &Alcove) -> Alcove {
        from_barycenter(rs, self.apply_point(a.barycenter))
            .expect("isometry maps alcoves to alcoves")
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &AffineIsometry) -> AffineIsometry {
        let t = mat_apply(&self.linear, other.translation);
        AffineIsometry {
            linear: mat_mul(&self.linear, &other.linear),
            translation: [t[0] + self.translation[0], t[1] + self.translation[1]],
        }
    }

    pub fn inverse(&self) -> AffineIsometry {
        let m = &self.linear;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let inv = [
            [m[1][1] * det, -m[0][1] * det],
            [-m[1][0] * det, m[0][0] * det],
        ];
        let t = mat_apply(&inv, self.translation);
        AffineIsometry {
            linear: inv,
            translation: [-t[0], -t[1]],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineIsometry::IDENTITY
    }
}

/// Isometries with linear part in `W` that map `C_M` onto itself.
pub fn cm_symmetries(rs: &RootSystem) -> Vec<AffineIsometry> {
    let verts = base_vertices(rs);
    let target: BTreeSet<Coords> = verts.iter().copied().collect();
    let mut out = Vec::new();
    for e in rs.weyl_elements() {
        for v in &verts {
            let iso = AffineIsometry {
                linear: e.matrix,
                translation: *v,
            };
            let image: BTreeSet<Coords> = verts.iter().map(|p| iso.apply_point(*p)).collect();
            if image == target {
                out.push(iso);
            }
        }
    }
    out
}

/// All alcoves of length at most `max_len`, sorted canonically.
pub fn alcoves_up_to(rs: &RootSystem, max_len: i64) -> Vec<Alcove> {
    let start = base_alcove(rs);
    let mut seen: HashSet<Alcove> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(a) = queue.pop_front() {
        out.push(a);
        if length(rs, &a) == max_len {
            continue;
        }
        for t in 0..=rs.rank {
            let n = neighbor(rs, &a, t);
            if length(rs, &n) <= max_len && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    out.sort_by_key(|a| a.sort_key(rs));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{build_root_system, RootSystemKind};
    use std::collections::HashMap;

    fn systems() -> Vec<RootSystem> {
        RootSystemKind::ALL
            .iter()
            .map(|k| build_root_system(*k))
            .collect()
    }

    #[test]
    fn base_barycenters() {
        let a2 = build_root_system(RootSystemKind::A2);
        assert_eq!(
            base_alcove(&a2).barycenter_rational(),
            [Ratio::new(1, 3), Ratio::new(1, 3)]
        );
        let a1 = build_root_system(RootSystemKind::A1);
        assert_eq!(base_alcove(&a1).barycenter_rational()[0], Ratio::new(1, 2));
        let c2 = build_root_system(RootSystemKind::C2);
        let b = base_alcove(&c2).barycenter;
        for r in &c2.positive_roots {
            let p = c2.pairing(*r, b);
            assert!(0 < p && p < DENOM);
        }
    }

    #[test]
    fn base_has_length_zero_and_neighbours_length_one() {
        for rs in systems() {
            let c = base_alcove(&rs);
            assert_eq!(length(&rs, &c), 0);
            let ws = walls(&rs, &c);
            assert_eq!(ws.len(), rs.rank + 1);
            let distinct: HashSet<Alcove> = ws.iter().map(|(_, n)| *n).collect();
            assert_eq!(distinct.len(), rs.rank + 1);
            for (h, n) in &ws {
                assert_eq!(length(&rs, n), 1);
                assert_eq!(reflect(&rs, h, &c), *n);
            }
        }
    }

    #[test]
    fn a1_lengths_along_the_line() {
        let rs = build_root_system(RootSystemKind::A1);
        // interval (5,6): barycenter 11/2
        let a = locate(&rs, [11, 0], 2).unwrap();
        assert_eq!(length(&rs, &a), 5);
        let h = Hyperplane { root: 0, k: 1 };
        let img = reflect(&rs, &h, &base_alcove(&rs));
        assert_eq!(img.barycenter, [9, 0]);
    }

    #[test]
    fn reflect_is_an_involution() {
        for rs in systems() {
            for a in alcoves_up_to(&rs, 6) {
                for r in 0..rs.positive_roots.len() {
                    for k in -3..=3 {
                        let h = Hyperplane { root: r, k };
                        assert_eq!(reflect(&rs, &h, &reflect(&rs, &h, &a)), a);
                    }
                }
            }
        }
    }

    #[test]
    fn eta_maps_on_examples() {
        for rs in systems() {
            let c = base_alcove(&rs);
            assert_eq!(eta1(&rs, &c), WeylId::IDENTITY);
            assert_eq!(eta2(&rs, &c), WeylId::IDENTITY);
            let t = c.translate(&rs, [2, 1]);
            assert_eq!(eta1(&rs, &t), WeylId::IDENTITY);
            let across = reflect(&rs, &Hyperplane { root: 0, k: 0 }, &c);
            assert_eq!(eta1(&rs, &across), rs.simple_reflection(1));
            let anti = Alcove::new(&rs, [-3, -3], rs.longest());
            assert_eq!(eta2(&rs, &anti), rs.longest());
        }
        let a2 = build_root_system(RootSystemKind::A2);
        assert_eq!(
            eta2(&a2, &Alcove::new(&a2, [2, 2], WeylId::IDENTITY)),
            WeylId::IDENTITY
        );
    }

    #[test]
    fn shrunken_examples() {
        for rs in systems() {
            let c = base_alcove(&rs);
            assert!(!in_shrunken(&rs, &c));
            if rs.rank == 2 {
                for (_, n) in walls(&rs, &c) {
                    assert!(!in_shrunken(&rs, &n));
                }
            }
        }
        // for SL2 the complement of the shrunken region is C_M alone
        let a1 = build_root_system(RootSystemKind::A1);
        let outside: Vec<Alcove> = alcoves_up_to(&a1, 6)
            .into_iter()
            .filter(|a| !in_shrunken(&a1, a))
            .collect();
        assert_eq!(outside, vec![base_alcove(&a1)]);
        let a2 = build_root_system(RootSystemKind::A2);
        assert!(in_shrunken(
            &a2,
            &Alcove::new(&a2, [2, 2], WeylId::IDENTITY)
        ));
    }

    #[test]
    fn wall_strips_differ_from_root_strips_only_for_c2() {
        for rs in systems() {
            let strips: Vec<(i64, i64)> = wall_strips(&rs)
                .iter()
                .map(|(lo, hi)| (lo.k, hi.k))
                .collect();
            assert!(strips.iter().all(|s| *s == (0, 1)));
            let differ: Vec<Alcove> = alcoves_up_to(&rs, 12)
                .into_iter()
                .filter(|a| in_shrunken(&rs, a) != outside_wall_strips(&rs, a))
                .collect();
            if rs.kind == RootSystemKind::C2 {
                assert!(!differ.is_empty());
                for a in differ {
                    assert_eq!(a.floors(&rs)[2], 0);
                }
            } else {
                assert!(differ.is_empty());
            }
        }
    }

    #[test]
    fn zero_shift_is_the_shrunken_region() {
        for rs in systems() {
            for a in alcoves_up_to(&rs, 10) {
                assert_eq!(b_shifted_region(&rs, [0, 0], &a), in_shrunken(&rs, &a));
            }
        }
    }

    #[test]
    fn shifted_regions_examples() {
        let a2 = build_root_system(RootSystemKind::A2);
        let b = [1, 1];
        let a = Alcove::new(&a2, [2, 2], WeylId::IDENTITY);
        assert!(b_shifted_region(&a2, b, &a.translate(&a2, b)));
        for rs in systems() {
            for b in [[1, 0], [1, 1], [2, 1]] {
                let b = if rs.rank == 1 { [b[0], 0] } else { b };
                if rs.is_dominant(b) {
                    assert!(!b_shifted_region(&rs, b, &base_alcove(&rs)));
                }
            }
        }
    }

    #[test]
    fn symmetry_group_orders() {
        let orders: Vec<usize> = systems().iter().map(|rs| cm_symmetries(rs).len()).collect();
        assert_eq!(orders, vec![2, 3, 2]);
        for rs in systems() {
            let b = base_alcove(&rs);
            for s in cm_symmetries(&rs) {
                assert_eq!(s.apply_point(b.barycenter), b.barycenter);
                assert_eq!(s.compose(&s.inverse()), AffineIsometry::IDENTITY);
            }
        }
        let a2 = build_root_system(RootSystemKind::A2);
        let rot = cm_symmetries(&a2)
            .into_iter()
            .find(|s| !s.is_identity())
            .unwrap();
        assert!(rot.compose(&rot).compose(&rot).is_identity());
    }

    #[test]
    fn symmetries_preserve_adjacency_and_length() {
        for rs in systems() {
            let alcoves = alcoves_up_to(&rs, 8);
            for s in cm_symmetries(&rs) {
                for a in &alcoves {
                    let sa = s.apply(&rs, a);
                    assert_eq!(length(&rs, &sa), length(&rs, a));
                    for (_, n) in walls(&rs, a) {
                        assert!(adjacent(&rs, &sa, &s.apply(&rs, &n)));
                    }
                }
            }
        }
    }

    #[test]
    fn length_is_graph_distance() {
        for rs in systems() {
            let mut dist: HashMap<Alcove, i64> = HashMap::new();
            let start = base_alcove(&rs);
            dist.insert(start, 0);
            let mut queue = VecDeque::from([start]);
            while let Some(a) = queue.pop_front() {
                let d = dist[&a];
                if d == 10 {
                    continue;
                }
                for (_, n) in walls(&rs, &a) {
                    dist.entry(n).or_insert_with(|| {
                        queue.push_back(n);
                        d + 1
                    });
                }
            }
            for (a, d) in &dist {
                assert_eq!(length(&rs, a), *d);
            }
            assert_eq!(alcoves_up_to(&rs, 10).len(), dist.len());
        }
    }

    #[test]
    fn locate_round_trips() {
        for rs in systems() {
            for a in alcoves_up_to(&rs, 8) {
                assert_eq!(from_barycenter(&rs, a.barycenter).unwrap(), a);
            }
            assert!(from_barycenter(&rs, [0, 0]).is_err());
        }
    }
}
