//! Embedded planar multigraphs, Kasteleyn orientations and perfect-matching
//! counts via the Pfaffian.
//!
//! An embedding is a rotation system: for every vertex, its incident edges
//! in counterclockwise order. Faces are traced so that each face lies to
//! the left of its boundary darts, which makes bounded faces run
//! counterclockwise.

mod family;

pub use family::{family_params, family_signature, planar_family_eval, PlanarEvaluation};

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::linalg::det_bareiss;
use crate::arith::rat::int_sqrt_exact;
use crate::grid::{GridError, SignatureGrid};

pub const DEFAULT_PM_BRUTE_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("rotation system is not a planar embedding: component with V={v}, E={e}, F={f}")]
    EulerViolation { v: usize, e: usize, f: usize },
    #[error("malformed rotation system: {0}")]
    BadRotation(String),
    #[error("grid has no rotation system")]
    MissingRotation,
    #[error("face {face} has an even number of clockwise edges")]
    KasteleynViolation { face: usize },
    #[error("determinant {0} of the Kasteleyn matrix is not a perfect square")]
    NotASquare(BigInt),
    #[error("{edges} edges exceed the enumeration cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("LHS signature is not of the form [3a+b, -a-b, -a+b, 3a-b] for the given (a, b)")]
    FamilyMismatch,
    #[error("unexpected transformed signature: {0}")]
    UnexpectedTransform(String),
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Incident edge ids around each vertex, counterclockwise.
    pub rotation: Vec<Vec<usize>>,
}

/// A face as its boundary darts; dart `2e` runs `edges[e].0 → edges[e].1`, dart `2e + 1` the reverse.
pub type Face = Vec<usize>;

impl PlanarGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Result<Self, PlanarError> {
        let g = PlanarGraph { n, edges, rotation };
        g.check_rotation()?;
        Ok(g)
    }

    fn check_rotation(&self) -> Result<(), PlanarError> {
        if self.rotation.len() != self.n {
            return Err(PlanarError::BadRotation("one cyclic order per vertex required".into()));
        }
        let mut seen = vec![0usize; self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &e in rot {
                let (a, b) = *self
                    .edges
                    .get(e)
                    .ok_or_else(|| PlanarError::BadRotation(format!("unknown edge {e}")))?;
                if a == b {
                    return Err(PlanarError::BadRotation(format!("self-loop {e}")));
                }
                if a != v && b != v {
                    return Err(PlanarError::BadRotation(format!("edge {e} is not incident to {v}")));
                }
                seen[e] += 1;
            }
        }
        if let Some(e) = seen.iter().position(|&c| c != 2) {
            return Err(PlanarError::BadRotation(format!(
                "edge {e} must appear once around each endpoint"
            )));
        }
        Ok(())
    }

    /// The embedded graph underlying a grid: LHS vertices first, then RHS.
    pub fn from_grid(g: &SignatureGrid) -> Result<Self, PlanarError> {
        let rot = g.rotation.as_ref().ok_or(PlanarError::MissingRotation)?;
        let nl = g.lhs.len();
        let (lports, rports) = g.port_edges();
        let edges = g.edges.iter().map(|e| (e.l, nl + e.r)).collect();
        let mut rotation = Vec::with_capacity(nl + g.rhs.len());
        for (v, order) in rot.lhs.iter().enumerate() {
            rotation.push(order.iter().map(|&p| lports[v][p]).collect());
        }
        for (v, order) in rot.rhs.iter().enumerate() {
            rotation.push(order.iter().map(|&p| rports[v][p]).collect());
        }
        PlanarGraph::new(nl + g.rhs.len(), edges, rotation)
    }

    fn dart_tail(&self, d: usize) -> usize {
        let (a, b) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    fn dart_head(&self, d: usize) -> usize {
        self.dart_tail(d ^ 1)
    }

    /// Dart leaving `v` along edge `e`.
    fn dart_from(&self, v: usize, e: usize) -> usize {
        if self.edges[e].0 == v {
            2 * e
        } else {
            2 * e + 1
        }
    }

    /// Next dart of the face on the left: at the head, the edge preceding
    /// the reverse dart in counterclockwise order.
    fn next_dart(&self, d: usize) -> usize {
        let v = self.dart_head(d);
        let back = d / 2;
        let rot = &self.rotation[v];
        let pos = rot.iter().position(|&e| e == back).expect("edge at its endpoint");
        let prev = rot[(pos + rot.len() - 1) % rot.len()];
        self.dart_from(v, prev)
    }

    /// Connected components as vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut list = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        list.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(list);
        }
        out
    }

    /// Faces traced by the next-dart rule, with an Euler check per component.
    /// Isolated vertices contribute one empty face each.
    pub fn faces(&self) -> Result<Vec<Face>, PlanarError> {
        let mut face_of = vec![usize::MAX; 2 * self.edges.len()];
        let mut faces: Vec<Face> = Vec::new();
        for start in 0..2 * self.edges.len() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                face.push(d);
                d = self.next_dart(d);
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
        for comp in self.components() {
            let in_comp: std::collections::BTreeSet<usize> = comp.iter().copied().collect();
            let e = self
                .edges
                .iter()
                .filter(|(a, _)| in_comp.contains(a))
                .count();
            let f = if e == 0 {
                1
            } else {
                faces
                    .iter()
                    .filter(|face| in_comp.contains(&self.dart_tail(face[0])))
                    .count()
            };
            if comp.len() + f != e + 2 {
                return Err(PlanarError::EulerViolation {
                    v: comp.len(),
                    e,
                    f,
                });
            }
        }
        for v in 0..self.n {
            if self.rotation[v].is_empty() {
                faces.push(Vec::new());
            }
        }
        Ok(faces)
    }
}

/// `true` means edge `e` is oriented `edges[e].0 → edges[e].1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KasteleynOrientation {
    pub forward: Vec<bool>,
}

impl KasteleynOrientation {
    /// Number of edges on a face oriented clockwise, i.e. against the
    /// counterclockwise boundary walk.
    pub fn clockwise_count(&self, face: &Face) -> usize {
        face.iter()
            .filter(|&&d| {
                let along = (d % 2 == 0) == self.forward[d / 2];
                !along
            })
            .count()
    }
}

/// Spanning-tree edges oriented arbitrarily, then each face fixed in
/// post-order of the dual tree rooted at one face per component.
pub fn kasteleyn_orient(g: &PlanarGraph) -> Result<KasteleynOrientation, PlanarError> {
    let faces = g.faces()?;
    let m = g.edges.len();
    let mut forward = vec![true; m];
    let mut fixed = vec![false; m];

    // spanning forest by BFS
    let mut in_tree = vec![false; m];
    let mut seen = vec![false; g.n];
    for s in 0..g.n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &g.rotation[v] {
                let (a, b) = g.edges[e];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    fixed[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    // dual forest over non-tree edges
    let mut face_of_dart = vec![usize::MAX; 2 * m];
    for (fid, face) in faces.iter().enumerate() {
        for &d in face {
            face_of_dart[d] = fid;
        }
    }
    let mut dual_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces.len()];
    for e in (0..m).filter(|&e| !in_tree[e]) {
        let (f1, f2) = (face_of_dart[2 * e], face_of_dart[2 * e + 1]);
        dual_adj[f1].push((f2, e));
        dual_adj[f2].push((f1, e));
    }
    let mut parent_edge = vec![usize::MAX; faces.len()];
    let mut visited = vec![false; faces.len()];
    let mut order = Vec::new();
    let mut roots = Vec::new();
    for root in 0..faces.len() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        roots.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for &(h, e) in &dual_adj[f] {
                if !visited[h] {
                    visited[h] = true;
                    parent_edge[h] = e;
                    queue.push_back(h);
                }
            }
        }
    }
    for &f in order.iter().rev() {
        let e = parent_edge[f];
        if e == usize::MAX {
            continue;
        }
        let cw_others = faces[f]
            .iter()
            .filter(|&&d| d / 2 != e && (d % 2 == 0) != forward[d / 2])
            .count();
        // the dart of e on this face is clockwise iff the orientation opposes it
        let d = if face_of_dart[2 * e] == f { 2 * e } else { 2 * e + 1 };
        let want_cw = cw_others % 2 == 0;
        forward[e] = (d % 2 == 0) != want_cw;
        fixed[e] = true;
    }
    debug_assert!(fixed.iter().all(|&x| x));
    let orientation = KasteleynOrientation { forward };
    audit_orientation(&orientation, &faces, &roots)?;
    Ok(orientation)
}

/// Every face other than the dual-tree roots has an odd number of clockwise edges.
fn audit_orientation(
    o: &KasteleynOrientation,
    faces: &[Face],
    roots: &[usize],
) -> Result<(), PlanarError> {
    match faces
        .iter()
        .enumerate()
        .find(|(i, face)| !roots.contains(i) && !face.is_empty() && o.clockwise_count(face).is_multiple_of(2))
    {
        Some((face, _)) => Err(PlanarError::KasteleynViolation { face }),
        None => Ok(()),
    }
}

/// Skew-symmetric signed adjacency matrix under an orientation.
pub fn kasteleyn_matrix(g: &PlanarGraph, o: &KasteleynOrientation) -> Vec<Vec<BigInt>> {
    let mut a = vec![vec![BigInt::zero(); g.n]; g.n];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        let (s, t) = if o.forward[e] { (u, v) } else { (v, u) };
        a[s][t] += 1;
        a[t][s] -= 1;
    }
    a
}

/// Number of perfect matchings, as `√det(A)` for the Kasteleyn matrix `A`.
pub fn count_pm(g: &PlanarGraph) -> Result<BigInt, PlanarError> {
    let o = kasteleyn_orient(g)?;
    if g.n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let det = det_bareiss(&kasteleyn_matrix(g, &o));
    if det.is_negative() {
        return Err(PlanarError::NotASquare(det));
    }
    int_sqrt_exact(&det).ok_or(PlanarError::NotASquare(det))
}

/// Perfect matchings by enumeration; parallel edges count separately.
pub fn count_pm_brute(g: &PlanarGraph) -> Result<BigInt, PlanarError> {
    count_pm_brute_with_cap(g, DEFAULT_PM_BRUTE_CAP)
}

pub fn count_pm_brute_with_cap(g: &PlanarGraph, cap: usize) -> Result<BigInt, PlanarError> {
    if g.edges.len() > cap {
        return Err(PlanarError::CapExceeded {
            edges: g.edges.len(),
            cap,
        });
    }
    let mut incident = vec![Vec::new(); g.n];
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        incident[a].push(e);
        incident[b].push(e);
    }
    fn rec(g: &PlanarGraph, incident: &[Vec<usize>], matched: &mut [bool]) -> u64 {
        let Some(v) = matched.iter().position(|m| !m) else {
            return 1;
        };
        let mut total = 0;
        matched[v] = true;
        for &e in &incident[v] {
            let (a, b) = g.edges[e];
            let w = if a == v { b } else { a };
            if !matched[w] {
                matched[w] = true;
                total += rec(g, incident, matched);
                matched[w] = false;
            }
        }
        matched[v] = false;
        total
    }
    let mut matched = vec![false; g.n];
    Ok(BigInt::from(rec(g, &incident, &mut matched)))
}
