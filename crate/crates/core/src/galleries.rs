//! Vertices, stars, minimal galleries and the model gallery `Omega`
//! attached to a vertex `v1` and a relative position `p_r`.

use std::collections::{BTreeSet, HashSet};

use crate::affine_weyl::{
    base_alcove, base_vertices, hyperplane_between, length, locate, neighbor, walls,
    AffineIsometry, Alcove, DENOM,
};
use crate::error::{Error, Result};
use crate::root_data::{Coords, RootSystem};

/// A vertex of the alcove tiling, scaled by [`DENOM`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub point: Coords,
    pub special: bool,
}

impl Vertex {
    pub fn new(rs: &RootSystem, point: Coords) -> Vertex {
        Vertex {
            point,
            special: is_special_point(rs, point),
        }
    }
}

fn is_special_point(rs: &RootSystem, p: Coords) -> bool {
    rs.positive_roots
        .iter()
        .all(|r| rs.pairing(*r, p) % DENOM == 0)
}

pub fn is_special(rs: &RootSystem, v: &Vertex) -> bool {
    is_special_point(rs, v.point)
}

/// Sequence of alcoves, consecutive entries adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gallery {
    pub alcoves: Vec<Alcove>,
}

impl Gallery {
    /// Number of alcoves.
    pub fn len(&self) -> usize {
        self.alcoves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alcoves.is_empty()
    }

    pub fn first(&self) -> Option<&Alcove> {
        self.alcoves.first()
    }

    pub fn last(&self) -> Option<&Alcove> {
        self.alcoves.last()
    }

    /// Consecutive alcoves are distinct and adjacent.
    pub fn is_connected(&self, rs: &RootSystem) -> bool {
        self.alcoves
            .windows(2)
            .all(|p| hyperplane_between(rs, &p[0], &p[1]).is_some())
    }

    pub fn is_injective(&self) -> bool {
        let set: HashSet<&Alcove> = self.alcoves.iter().collect();
        set.len() == self.alcoves.len()
    }
}

#[derive(Debug, Clone)]
pub struct SuperpieceSpec {
    pub v1: Vertex,
    pub q1: Alcove,
    pub q2prime: Alcove,
    pub z: AffineIsometry,
    pub gamma: Gallery,
    pub gamma_c: Gallery,
    pub omega: Gallery,
    pub m: usize,
}

/// Alcoves containing `v`, in cyclic order.
///
/// The cycle starts at the alcove of smallest length and runs towards
/// its smaller neighbour in canonical order.
pub fn star(rs: &RootSystem, v: &Vertex) -> Vec<Alcove> {
    const SCALE: i64 = 100;
    let probe = [
        v.point[0] * SCALE + 1,
        v.point[1] * SCALE + if rs.rank == 1 { 0 } else { 2 },
    ];
    let seed = locate(rs, probe, DENOM * SCALE).expect("perturbed vertex is interior");
    debug_assert!(seed.contains_vertex(rs, v.point));

    let around = |a: &Alcove| -> Vec<Alcove> {
        let mut n: Vec<Alcove> = (0..=rs.rank)
            .map(|t| neighbor(rs, a, t))
            .filter(|n| n.contains_vertex(rs, v.point))
            .collect();
        n.sort_by_key(|x| x.sort_key(rs));
        n
    };

    let mut members = vec![seed];
    let mut prev = seed;
    let mut cur = around(&seed)[0];
    if rs.rank == 1 {
        members.push(cur);
        cur = seed;
    }
    while cur != seed {
        members.push(cur);
        let next = around(&cur)
            .into_iter()
            .find(|n| *n != prev)
            .expect("star is a cycle");
        prev = cur;
        cur = next;
        if members.len() > 2 * rs.order() {
            unreachable!("star around a vertex is finite");
        }
    }

    let start = (0..members.len())
        .min_by_key(|&i| members[i].sort_key(rs))
        .unwrap();
    members.rotate_left(start);
    let n = members.len();
    if n > 2 && members[n - 1].sort_key(rs) < members[1].sort_key(rs) {
        members[1..].reverse();
    }
    members
}

/// Cyclic gap between positions `i` and `j` of a star of size `n`.
pub fn star_distance(n: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

/// The unique alcove of minimal length containing `v`.
pub fn q1_of(rs: &RootSystem, v: &Vertex) -> Alcove {
    star(rs, v)
        .into_iter()
        .min_by_key(|a| a.sort_key(rs))
        .unwrap()
}

/// Minimal gallery from `C_M` to the nearest alcove containing `v1`.
///
/// Each step crosses the first wall, in wall-type order, separating the
/// current alcove from `Q1`.
pub fn minimal_gallery_to_vertex(rs: &RootSystem, v1: &Vertex) -> Result<(Gallery, Alcove)> {
    if base_vertices(rs).contains(&v1.point) {
        return Err(Error::VertexInBaseAlcove(v1.point));
    }
    let q1 = q1_of(rs, v1);
    let gallery = greedy_gallery(rs, base_alcove(rs), q1);
    Ok((gallery, q1))
}

/// A minimal gallery from `from` to `to`, crossing walls in type order.
pub fn greedy_gallery(rs: &RootSystem, from: Alcove, to: Alcove) -> Gallery {
    let mut alcoves = vec![from];
    let mut cur = from;
    while cur != to {
        let (_, next) = walls(rs, &cur)
            .into_iter()
            .find(|(h, _)| h.separates(rs, &cur, &to))
            .expect("distinct alcoves are separated by a wall");
        alcoves.push(next);
        cur = next;
    }
    Gallery { alcoves }
}

/// Every minimal gallery from `from` to `to`, stopping after `limit` galleries.
pub fn all_minimal_galleries(
    rs: &RootSystem,
    from: Alcove,
    to: Alcove,
    limit: usize,
) -> Vec<Gallery> {
    fn go(
        rs: &RootSystem,
        path: &mut Vec<Alcove>,
        to: &Alcove,
        limit: usize,
        out: &mut Vec<Gallery>,
    ) {
        if out.len() >= limit {
            return;
        }
        let cur = *path.last().unwrap();
        if cur == *to {
            out.push(Gallery {
                alcoves: path.clone(),
            });
            return;
        }
        for (h, n) in walls(rs, &cur) {
            if h.separates(rs, &cur, to) {
                path.push(n);
                go(rs, path, to, limit, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(rs, &mut vec![from], &to, limit, &mut out);
    out
}

/// Members of `star(v1)` far enough from `q1` to form a relative position,
/// with their star distance `m`.
pub fn local_positions(rs: &RootSystem, v1: &Vertex, q1: &Alcove) -> Vec<(Alcove, usize)> {
    let st = star(rs, v1);
    let Some(i) = st.iter().position(|a| a == q1) else {
        return Vec::new();
    };
    st.iter()
        .enumerate()
        .map(|(j, a)| (*a, star_distance(st.len(), i, j)))
        .filter(|(_, m)| if rs.rank == 1 { *m == 1 } else { *m >= 2 })
        .collect()
}

/// Shortest path inside the star from position `i` to position `j`.
/// Ties go forward around the cycle.
fn star_path(st: &[Alcove], i: usize, j: usize) -> Vec<Alcove> {
    let n = st.len();
    let forward = (j + n - i) % n;
    let backward = (i + n - j) % n;
    if forward <= backward {
        (0..=forward).map(|s| st[(i + s) % n]).collect()
    } else {
        (0..=backward).map(|s| st[(i + n - s) % n]).collect()
    }
}

/// Minimal gallery from `q1` to `q2prime` inside `star(v1)`.
pub fn connecting_gallery(
    rs: &RootSystem,
    v1: &Vertex,
    q1: &Alcove,
    q2prime: &Alcove,
) -> Result<Gallery> {
    let st = star(rs, v1);
    let i = st
        .iter()
        .position(|a| a == q1)
        .ok_or(Error::NoSuchIsometry)?;
    let j = st
        .iter()
        .position(|a| a == q2prime)
        .ok_or(Error::NoSuchIsometry)?;
    Ok(Gallery {
        alcoves: star_path(&st, i, j),
    })
}

/// Product of the reflections in the walls crossed by a gallery, last wall leftmost.
pub fn reflection_product(rs: &RootSystem, g: &Gallery) -> AffineIsometry {
    g.alcoves
        .windows(2)
        .fold(AffineIsometry::IDENTITY, |acc, p| {
            let h = hyperplane_between(rs, &p[0], &p[1]).expect("gallery steps share a wall");
            AffineIsometry::reflection(rs, &h).compose(&acc)
        })
}

/// The element of the affine Weyl group fixing `v1` and sending `q1` to `q2prime`.
pub fn z_map(
    rs: &RootSystem,
    v1: &Vertex,
    q1: &Alcove,
    q2prime: &Alcove,
) -> Result<AffineIsometry> {
    let path = connecting_gallery(rs, v1, q1, q2prime)?;
    let z = reflection_product(rs, &path);
    debug_assert_eq!(z.apply_point(v1.point), v1.point);
    Ok(z)
}

/// Build `Omega = Gamma ++ Gamma^c ++ reverse(z Gamma)` for `(v1, q2prime)`.
pub fn assemble_omega(rs: &RootSystem, v1: &Vertex, q2prime: &Alcove) -> Result<SuperpieceSpec> {
    let (gamma, q1) = minimal_gallery_to_vertex(rs, v1)?;
    let gamma_c = connecting_gallery(rs, v1, &q1, q2prime)?;
    let z = reflection_product(rs, &gamma_c);
    let mut alcoves = gamma.alcoves.clone();
    alcoves.extend_from_slice(&gamma_c.alcoves[1..]);
    alcoves.extend(gamma.alcoves.iter().rev().skip(1).map(|a| z.apply(rs, a)));
    let omega = Gallery { alcoves };
    if !omega.is_injective() {
        return Err(Error::OmegaSelfIntersects { vertex: v1.point });
    }
    debug_assert!(omega.is_connected(rs));
    Ok(SuperpieceSpec {
        v1: *v1,
        q1,
        q2prime: *q2prime,
        z,
        m: gamma_c.len() - 1,
        gamma,
        gamma_c,
        omega,
    })
}

/// Vertices outside the closure of `C_M` whose `Q1` has length at most `radius`.
pub fn vertices_in_ball(rs: &RootSystem, radius: i64) -> Vec<Vertex> {
    let base: BTreeSet<Coords> = base_vertices(rs).into_iter().collect();
    let mut points = BTreeSet::new();
    for a in crate::affine_weyl::alcoves_up_to(rs, radius) {
        for v in a.vertices(rs) {
            if !base.contains(&v) {
                points.insert(v);
            }
        }
    }
    points.into_iter().map(|p| Vertex::new(rs, p)).collect()
}

/// Whether `v` is the lexicographically smallest point of its orbit under the
/// symmetries of `C_M`.
pub fn is_orbit_representative(v: &Vertex, symmetries: &[AffineIsometry]) -> bool {
    symmetries.iter().all(|s| s.apply_point(v.point) >= v.point)
}

/// Length of `Q1` for `v`.
pub fn vertex_radius(rs: &RootSystem, v: &Vertex) -> i64 {
    length(rs, &q1_of(rs, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_weyl::cm_symmetries;
    use crate::root_data::{build_root_system, RootSystemKind};

    fn sys(kind: RootSystemKind) -> RootSystem {
        build_root_system(kind)
    }

    #[test]
    fn special_vertices() {
        let a2 = sys(RootSystemKind::A2);
        assert!(is_special(&a2, &Vertex::new(&a2, [0, 0])));
        for v in vertices_in_ball(&a2, 6) {
            assert!(v.special);
        }
        let c2 = sys(RootSystemKind::C2);
        let mid = Vertex::new(&c2, [3, 0]);
        assert!(!mid.special);
        let specials: Vec<bool> = base_vertices(&c2)
            .iter()
            .map(|p| Vertex::new(&c2, *p).special)
            .collect();
        assert_eq!(specials, vec![true, false, true]);
    }

    #[test]
    fn star_sizes() {
        let a1 = sys(RootSystemKind::A1);
        let a2 = sys(RootSystemKind::A2);
        let c2 = sys(RootSystemKind::C2);
        assert_eq!(star(&a2, &Vertex::new(&a2, [0, 0])).len(), 6);
        assert_eq!(star(&c2, &Vertex::new(&c2, [0, 0])).len(), 8);
        assert_eq!(star(&c2, &Vertex::new(&c2, [3, 0])).len(), 4);
        assert_eq!(star(&a1, &Vertex::new(&a1, [0, 0])).len(), 2);
        for rs in [&a1, &a2, &c2] {
            for v in vertices_in_ball(rs, 6) {
                let expected = match (rs.kind, v.special) {
                    (RootSystemKind::A1, _) => 2,
                    (RootSystemKind::A2, _) => 6,
                    (RootSystemKind::C2, true) => 8,
                    (RootSystemKind::C2, false) => 4,
                };
                let st = star(rs, &v);
                assert_eq!(st.len(), expected);
                for (k, a) in st.iter().enumerate() {
                    assert!(a.contains_vertex(rs, v.point));
                    if rs.rank == 2 {
                        assert!(crate::affine_weyl::adjacent(rs, a, &st[(k + 1) % st.len()]));
                    }
                }
            }
        }
    }

    #[test]
    fn a1_gallery_and_omega() {
        let rs = sys(RootSystemKind::A1);
        let v1 = Vertex::new(&rs, [12, 0]);
        let (gamma, q1) = minimal_gallery_to_vertex(&rs, &v1).unwrap();
        assert_eq!(gamma.len(), 2);
        assert_eq!(q1.barycenter, [9, 0]);
        let pos = local_positions(&rs, &v1, &q1);
        assert_eq!(pos.len(), 1);
        let (q2, m) = pos[0];
        assert_eq!((q2.barycenter, m), ([15, 0], 1));
        let z = z_map(&rs, &v1, &q1, &q2).unwrap();
        assert_eq!(
            z,
            AffineIsometry::reflection(&rs, &crate::affine_weyl::Hyperplane { root: 0, k: 2 })
        );
        let spec = assemble_omega(&rs, &v1, &q2).unwrap();
        let bary: Vec<i64> = spec.omega.alcoves.iter().map(|a| a.barycenter[0]).collect();
        assert_eq!(bary, vec![3, 9, 15, 21]);
        assert_eq!(spec.gamma_c.len(), 2);
    }

    #[test]
    fn vertex_of_base_is_rejected() {
        for kind in RootSystemKind::ALL {
            let rs = sys(kind);
            for p in base_vertices(&rs) {
                assert_eq!(
                    minimal_gallery_to_vertex(&rs, &Vertex::new(&rs, p)).unwrap_err(),
                    Error::VertexInBaseAlcove(p)
                );
            }
        }
    }

    #[test]
    fn neighbour_vertices_need_one_step() {
        for kind in RootSystemKind::ALL {
            let rs = sys(kind);
            let base: Vec<Coords> = base_vertices(&rs);
            for (_, n) in walls(&rs, &base_alcove(&rs)) {
                for p in n.vertices(&rs) {
                    if !base.contains(&p) {
                        let (g, _) = minimal_gallery_to_vertex(&rs, &Vertex::new(&rs, p)).unwrap();
                        assert_eq!(g.len(), 2);
                    }
                }
            }
        }
    }

    #[test]
    fn local_position_counts() {
        let a2 = sys(RootSystemKind::A2);
        let v = Vertex::new(&a2, [6, 6]);
        let q1 = q1_of(&a2, &v);
        let ms: Vec<usize> = {
            let mut m: Vec<usize> = local_positions(&a2, &v, &q1).iter().map(|p| p.1).collect();
            m.sort();
            m
        };
        assert_eq!(ms, vec![2, 2, 3]);

        let c2 = sys(RootSystemKind::C2);
        for v in vertices_in_ball(&c2, 4) {
            let q1 = q1_of(&c2, &v);
            let mut ms: Vec<usize> = local_positions(&c2, &v, &q1).iter().map(|p| p.1).collect();
            ms.sort();
            if v.special {
                assert_eq!(ms, vec![2, 2, 3, 3, 4]);
            } else {
                assert_eq!(ms, vec![2]);
            }
        }
    }

    #[test]
    fn z_fixes_the_vertex_and_the_star() {
        for kind in RootSystemKind::ALL {
            let rs = sys(kind);
            for v in vertices_in_ball(&rs, 5) {
                let st = star(&rs, &v);
                let q1 = q1_of(&rs, &v);
                assert_eq!(z_map(&rs, &v, &q1, &q1).unwrap(), AffineIsometry::IDENTITY);
                let i = st.iter().position(|a| *a == q1).unwrap();
                for (q2, _) in local_positions(&rs, &v, &q1) {
                    let z = z_map(&rs, &v, &q1, &q2).unwrap();
                    assert_eq!(z.apply_point(v.point), v.point);
                    assert_eq!(z.apply(&rs, &q1), q2);
                    let image: BTreeSet<Coords> =
                        st.iter().map(|a| z.apply(&rs, a).barycenter).collect();
                    let orig: BTreeSet<Coords> = st.iter().map(|a| a.barycenter).collect();
                    assert_eq!(image, orig);
                    let k = st.iter().position(|a| *a == q2).unwrap();
                    for (j, a) in st.iter().enumerate() {
                        let za = z.apply(&rs, a);
                        let zj = st.iter().position(|b| *b == za).unwrap();
                        assert_eq!(
                            star_distance(st.len(), i, j),
                            star_distance(st.len(), k, zj)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn omega_length_and_minimality() {
        for kind in RootSystemKind::ALL {
            let rs = sys(kind);
            for v in vertices_in_ball(&rs, 6) {
                let q1 = q1_of(&rs, &v);
                for (q2, m) in local_positions(&rs, &v, &q1) {
                    let spec = assemble_omega(&rs, &v, &q2).unwrap();
                    assert_eq!(spec.m, m);
                    assert_eq!(spec.gamma_c.len(), m + 1);
                    assert_eq!(
                        spec.omega.len(),
                        2 * spec.gamma.len() + spec.gamma_c.len() - 2
                    );
                    assert!(spec.omega.is_connected(&rs));
                    let dist = length(&rs, &spec.q2prime) as usize;
                    assert_eq!(spec.gamma.len() + spec.gamma_c.len() - 1, dist + 1);
                }
            }
        }
    }

    #[test]
    fn orbit_representatives_cover_all_vertices() {
        for kind in RootSystemKind::ALL {
            let rs = sys(kind);
            let syms = cm_symmetries(&rs);
            let verts: BTreeSet<Coords> =
                vertices_in_ball(&rs, 6).iter().map(|v| v.point).collect();
            let mut covered = BTreeSet::new();
            for v in vertices_in_ball(&rs, 6) {
                if is_orbit_representative(&v, &syms) {
                    for s in &syms {
                        covered.insert(s.apply_point(v.point));
                    }
                }
            }
            assert!(verts.is_subset(&covered));
        }
    }
}
