//! Exact root data and finite Weyl groups for the rank-1 and rank-2 types
//! handled by the crate: `A1` (SL2), `A2` (SL3) and `C2` (Sp4).
//!
//! Points of the apartment are never embedded in Euclidean space. They are
//! stored in the *pairing chart*: a point `x` has coordinates
//! `x_i = <alpha_i, x>` for the simple roots. Every root is then a linear
//! functional with integer coefficients (its simple-root coordinates), every
//! coroot has integer chart coordinates, and all hyperplane tests are exact.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Integer vector of length `rank`, padded with zeros to two entries.
pub type Coords = [i64; 2];

/// 2x2 integer matrix acting on chart coordinates.
pub type Matrix = [[i64; 2]; 2];

pub(crate) const IDENTITY: Matrix = [[1, 0], [0, 1]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootSystemKind {
    A1,
    A2,
    C2,
}

impl RootSystemKind {
    pub const ALL: [RootSystemKind; 3] =
        [RootSystemKind::A1, RootSystemKind::A2, RootSystemKind::C2];

    pub fn as_str(self) -> &'static str {
        match self {
            RootSystemKind::A1 => "a1",
            RootSystemKind::A2 => "a2",
            RootSystemKind::C2 => "c2",
        }
    }

    /// The simply-connected group whose affine Weyl group this is.
    pub fn group_name(self) -> &'static str {
        match self {
            RootSystemKind::A1 => "SL2",
            RootSystemKind::A2 => "SL3",
            RootSystemKind::C2 => "Sp4",
        }
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RootSystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a1" | "sl2" => Ok(RootSystemKind::A1),
            "a2" | "sl3" => Ok(RootSystemKind::A2),
            "c2" | "sp4" => Ok(RootSystemKind::C2),
            other => Err(Error::InvalidConfig(format!("unknown group `{other}`"))),
        }
    }
}

/// Index of an element in [`RootSystem::weyl_elements`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylId(pub u8);

impl WeylId {
    pub const IDENTITY: WeylId = WeylId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An element of the finite Weyl group.
///
/// `word` is the lexicographically smallest reduced word over the simple
/// reflections (generator indices start at 1); the element is the product
/// `s_{word[0]} s_{word[1]} ...` acting on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWeylElement {
    pub id: WeylId,
    pub matrix: Matrix,
    pub word: Vec<u8>,
}

impl FiniteWeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Set of generators appearing in the reduced word, as a bitmask
    /// (bit `i - 1` for `s_i`).
    pub fn support(&self) -> u8 {
        self.word.iter().fold(0u8, |acc, &g| acc | (1 << (g - 1)))
    }

    /// `"e"` for the identity, otherwise e.g. `"s1s2s1"`.
    pub fn word_string(&self) -> String {
        word_to_string(&self.word)
    }
}

pub fn word_to_string(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|g| format!("s{g}")).collect()
}

/// Parses `"e"`, `""` or `"s1s2..."` into generator indices.
pub fn parse_word(s: &str) -> Result<Vec<u8>, Error> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let Some(tail) = rest.strip_prefix('s') else {
            return Err(Error::Parse(format!("bad Weyl word `{s}`")));
        };
        let digits = tail.chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return Err(Error::Parse(format!("bad Weyl word `{s}`")));
        }
        let g: u8 = tail[..digits]
            .parse()
            .map_err(|_| Error::Parse(format!("bad Weyl word `{s}`")))?;
        out.push(g);
        rest = &tail[digits..];
    }
    Ok(out)
}

/// Root datum of rank 1 or 2 with all data exact.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub kind: RootSystemKind,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Matrix,
    /// Positive roots in simple-root coordinates; the highest root is last.
    pub positive_roots: Vec<Coords>,
    /// Coroot of each positive root, in coroot coordinates.
    pub coroots: Vec<Coords>,
    /// Coroot of each positive root, in chart coordinates.
    pub coroot_chart: Vec<Coords>,
    /// Half the sum of the positive roots, in simple-root coordinates.
    pub rho: [Ratio<i64>; 2],
    elements: Vec<FiniteWeylElement>,
    mult: Vec<Vec<WeylId>>,
    inverse: Vec<WeylId>,
    root_reflection: Vec<WeylId>,
}

pub fn build_root_system(kind: RootSystemKind) -> RootSystem {
    RootSystem::new(kind)
}

impl RootSystem {
    pub fn new(kind: RootSystemKind) -> Self {
        let (rank, cartan, positive_roots): (usize, Matrix, Vec<Coords>) = match kind {
            RootSystemKind::A1 => (1, [[2, 0], [0, 0]], vec![[1, 0]]),
            RootSystemKind::A2 => (2, [[2, -1], [-1, 2]], vec![[1, 0], [0, 1], [1, 1]]),
            // alpha_1 short, alpha_2 long
            RootSystemKind::C2 => (2, [[2, -1], [-2, 2]], vec![[1, 0], [0, 1], [1, 1], [2, 1]]),
        };

        let mut rho = [Ratio::from_integer(0), Ratio::from_integer(0)];
        for root in &positive_roots {
            for i in 0..rank {
                rho[i] += Ratio::new(root[i], 2);
            }
        }

        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            positive_roots,
            coroots: Vec::new(),
            coroot_chart: Vec::new(),
            rho,
            elements: Vec::new(),
            mult: Vec::new(),
            inverse: Vec::new(),
            root_reflection: Vec::new(),
        };
        rs.coroot_chart = rs
            .positive_roots
            .iter()
            .map(|r| rs.compute_coroot_chart(*r))
            .collect();
        rs.coroots = rs
            .coroot_chart
            .iter()
            .map(|c| {
                rs.chart_to_coroot(*c)
                    .expect("coroot lies in the coroot lattice")
            })
            .collect();
        rs.enumerate_elements();
        rs.root_reflection = (0..rs.positive_roots.len())
            .map(|i| {
                let m = rs.reflection_matrix(i);
                rs.find_matrix(&m)
                    .expect("root reflection is a Weyl element")
            })
            .collect();
        rs
    }

    /// Chart coordinates of `beta^vee` for a positive root `beta`, from an
    /// invariant form in which `cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)`.
    fn compute_coroot_chart(&self, root: Coords) -> Coords {
        // Squared lengths of the simple roots, up to a common scale.
        let norms: [i64; 2] = match self.kind {
            RootSystemKind::A1 => [2, 0],
            RootSystemKind::A2 => [2, 2],
            RootSystemKind::C2 => [2, 4],
        };
        // (a_i, a_j) = cartan[i][j] * norms[j] / 2
        let form = |i: usize, j: usize| self.cartan[i][j] * norms[j] / 2;
        let mut inner_with_simple = [0i64; 2];
        for (i, slot) in inner_with_simple.iter_mut().enumerate().take(self.rank) {
            *slot = (0..self.rank).map(|j| root[j] * form(i, j)).sum();
        }
        let norm: i64 = (0..self.rank).map(|i| root[i] * inner_with_simple[i]).sum();
        let mut out = [0i64; 2];
        for (slot, inner) in out.iter_mut().zip(inner_with_simple).take(self.rank) {
            let num = 2 * inner;
            assert_eq!(num % norm, 0, "coroot pairing must be integral");
            *slot = num / norm;
        }
        out
    }

    fn reflection_matrix(&self, root_index: usize) -> Matrix {
        let root = self.positive_roots[root_index];
        let co = self.coroot_chart[root_index];
        // s(x) = x - <root, x> root^vee
        let mut m = IDENTITY;
        for i in 0..2 {
            for k in 0..2 {
                m[i][k] -= co[i] * root[k];
            }
        }
        if self.rank == 1 {
            m[1] = [0, 1];
        }
        m
    }

    fn simple_reflection_matrix(&self, j: usize) -> Matrix {
        let mut m = IDENTITY;
        for (row, cartan_row) in m.iter_mut().zip(self.cartan) {
            row[j] -= cartan_row[j];
        }
        m
    }

    fn enumerate_elements(&mut self) {
        let gens: Vec<Matrix> = (0..self.rank)
            .map(|j| self.simple_reflection_matrix(j))
            .collect();
        let mut found: Vec<(Vec<u8>, Matrix)> = vec![(Vec::new(), IDENTITY)];
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            // frontier is in lexicographic word order, so the first hit is lex-minimal
            for idx in frontier {
                for (j, g) in gens.iter().enumerate() {
                    let m = mat_mul(&found[idx].1, g);
                    if found.iter().all(|(_, other)| *other != m) {
                        let mut word = found[idx].0.clone();
                        word.push(j as u8 + 1);
                        found.push((word, m));
                        next.push(found.len() - 1);
                    }
                }
            }
            next.sort_by(|a, b| found[*a].0.cmp(&found[*b].0));
            frontier = next;
        }
        found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        self.elements = found
            .into_iter()
            .enumerate()
            .map(|(i, (word, matrix))| FiniteWeylElement {
                id: WeylId(i as u8),
                matrix,
                word,
            })
            .collect();
        let n = self.elements.len();
        self.mult = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let m = mat_mul(&self.elements[a].matrix, &self.elements[b].matrix);
                        self.find_matrix(&m).expect("group is closed")
                    })
                    .collect()
            })
            .collect();
        self.inverse = (0..n)
            .map(|a| {
                let b = (0..n)
                    .find(|&b| self.mult[a][b] == WeylId::IDENTITY)
                    .expect("inverse exists");
                WeylId(b as u8)
            })
            .collect();
    }

    fn find_matrix(&self, m: &Matrix) -> Option<WeylId> {
        self.elements.iter().find(|e| e.matrix == *m).map(|e| e.id)
    }

    pub fn weyl_elements(&self) -> &[FiniteWeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, id: WeylId) -> &FiniteWeylElement {
        &self.elements[id.index()]
    }

    pub fn mul(&self, a: WeylId, b: WeylId) -> WeylId {
        self.mult[a.index()][b.index()]
    }

    pub fn inv(&self, a: WeylId) -> WeylId {
        self.inverse[a.index()]
    }

    pub fn length(&self, w: WeylId) -> usize {
        self.elements[w.index()].length()
    }

    /// The longest element `w0`.
    pub fn longest(&self) -> WeylId {
        self.elements.last().expect("non-empty group").id
    }

    /// Length `delta` of the longest element.
    pub fn delta(&self) -> usize {
        self.length(self.longest())
    }

    pub fn simple_reflection(&self, generator: u8) -> WeylId {
        self.from_word(&[generator]).expect("valid generator")
    }

    /// Reflection `s_beta` for the positive root with the given index.
    pub fn root_reflection(&self, root_index: usize) -> WeylId {
        self.root_reflection[root_index]
    }

    pub fn from_word(&self, word: &[u8]) -> Result<WeylId, Error> {
        let mut acc = WeylId::IDENTITY;
        for &g in word {
            if g == 0 || g as usize > self.rank {
                return Err(Error::Parse(format!(
                    "generator s{g} out of range for {}",
                    self.kind
                )));
            }
            let gen = self
                .elements
                .iter()
                .find(|e| e.word == [g])
                .expect("simple reflections are enumerated")
                .id;
            acc = self.mul(acc, gen);
        }
        Ok(acc)
    }

    pub fn highest_root_index(&self) -> usize {
        self.positive_roots.len() - 1
    }

    /// Apply `w` to chart coordinates.
    pub fn act(&self, w: WeylId, x: Coords) -> Coords {
        mat_apply(&self.elements[w.index()].matrix, x)
    }

    /// Image `w(beta)` of a root given by simple-root coordinates.
    pub fn act_on_root(&self, w: WeylId, root: Coords) -> Coords {
        let m = &self.elements[self.inv(w).index()].matrix;
        let mut out = [0i64; 2];
        for k in 0..2 {
            out[k] = (0..2).map(|i| root[i] * m[i][k]).sum();
        }
        out
    }

    /// Index and sign of `root` among `+-` the positive roots.
    pub fn root_index(&self, root: Coords) -> Option<(usize, i64)> {
        self.positive_roots
            .iter()
            .position(|r| *r == root)
            .map(|i| (i, 1))
            .or_else(|| {
                self.positive_roots
                    .iter()
                    .position(|r| r[0] == -root[0] && r[1] == -root[1])
                    .map(|i| (i, -1))
            })
    }

    /// Length of `w` counted as the number of positive roots it sends negative.
    pub fn inversions(&self, w: WeylId) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| {
                let image = self.act_on_root(w, **r);
                image[0] < 0 || image[1] < 0
            })
            .count()
    }

    /// `<beta, x>` for a root in simple-root coordinates and a chart point.
    pub fn pairing(&self, root: Coords, x: Coords) -> i64 {
        root[0] * x[0] + root[1] * x[1]
    }

    /// Chart coordinates of a coroot-lattice vector.
    pub fn coroot_to_chart(&self, c: Coords) -> Coords {
        let mut out = [0i64; 2];
        for (slot, row) in out.iter_mut().zip(self.cartan).take(self.rank) {
            *slot = (0..self.rank).map(|j| row[j] * c[j]).sum();
        }
        out
    }

    /// Coroot coordinates of a chart vector, if it lies in the coroot lattice.
    pub fn chart_to_coroot(&self, x: Coords) -> Option<Coords> {
        match self.rank {
            1 => (x[0] % 2 == 0).then_some([x[0] / 2, 0]),
            _ => {
                let a = &self.cartan;
                let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
                let c0 = x[0] * a[1][1] - a[0][1] * x[1];
                let c1 = a[0][0] * x[1] - a[1][0] * x[0];
                (c0 % det == 0 && c1 % det == 0).then_some([c0 / det, c1 / det])
            }
        }
    }

    /// Whether a coroot-lattice vector is dominant.
    pub fn is_dominant(&self, mu: Coords) -> bool {
        let chart = self.coroot_to_chart(mu);
        (0..self.rank).all(|i| chart[i] >= 0)
    }

    pub fn simple_coroots(&self) -> Vec<Coords> {
        (0..self.rank)
            .map(|j| {
                let mut c = [0i64; 2];
                c[j] = 1;
                c
            })
            .collect()
    }
}

pub fn enumerate_finite_weyl(rs: &RootSystem) -> Vec<FiniteWeylElement> {
    rs.weyl_elements().to_vec()
}

/// Exact `<mu, rho>` for `mu` in coroot coordinates.
pub fn pair(rs: &RootSystem, mu: Coords) -> Ratio<i64> {
    let chart = rs.coroot_to_chart(mu);
    (0..rs.rank).map(|i| rs.rho[i] * chart[i]).sum()
}

/// Whether `w` lies in no proper standard parabolic subgroup.
pub fn is_full_support(rs: &RootSystem, w: WeylId) -> bool {
    let full = (1u8 << rs.rank) - 1;
    rs.element(w).support() == full
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub(crate) fn mat_apply(m: &Matrix, x: Coords) -> Coords {
    [
        m[0][0] * x[0] + m[0][1] * x[1],
        m[1][0] * x[0] + m[1][1] * x[1],
    ]
}
