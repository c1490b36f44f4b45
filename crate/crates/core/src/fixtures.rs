//! Reference instances: small 3-regular bipartite grids (planar ones carry
//! an embedding), set systems, and seeded random multigraphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::grid::{Edge, Rotation, SetSystem, SignatureGrid};
use crate::planar::PlanarGraph;
use crate::signature::{DenseSig, Side, SymSig3};

/// A bipartite multigraph given by global vertex colors and, per vertex,
/// its incident edges in counterclockwise order.
struct Embedded {
    /// `true` for LHS.
    color: Vec<bool>,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
}

impl Embedded {
    fn into_grid(self, f: &SymSig3) -> SignatureGrid {
        let n = self.color.len();
        let mut side_index = vec![0usize; n];
        let (mut nl, mut nr) = (0, 0);
        for v in 0..n {
            if self.color[v] {
                side_index[v] = nl;
                nl += 1;
            } else {
                side_index[v] = nr;
                nr += 1;
            }
        }
        let port = |v: usize, e: usize| {
            self.rotation[v]
                .iter()
                .position(|&x| x == e)
                .expect("edge appears in the rotation of its endpoint")
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| {
                let (l, r) = if self.color[a] { (a, b) } else { (b, a) };
                assert!(self.color[l] && !self.color[r], "edge {k} is not bipartite");
                Edge {
                    l: side_index[l],
                    lport: port(l, k),
                    r: side_index[r],
                    rport: port(r, k),
                }
            })
            .collect();
        let identity = |count: usize, deg: usize| vec![(0..deg).collect::<Vec<_>>(); count];
        let g = SignatureGrid {
            lhs: vec![f.to_dense(Side::Lhs); nl],
            rhs: vec![DenseSig::equality(3, Side::Rhs); nr],
            edges,
            rotation: Some(Rotation {
                lhs: identity(nl, 3),
                rhs: identity(nr, 3),
            }),
        };
        g.validate().expect("fixture is well formed");
        g
    }
}

pub fn k33_edges() -> Vec<(usize, usize)> {
    (0..3).flat_map(|l| (0..3).map(move |r| (l, r))).collect()
}

pub fn k33_grid(f: &SymSig3) -> SignatureGrid {
    SignatureGrid::ternary(f, 3, 3, &k33_edges()).expect("K33 is 3-regular")
}

/// The prism `C_{2k} × K_2` drawn as two concentric cycles joined by spokes;
/// `k = 2` is the cube.
pub fn prism_grid(f: &SymSig3, k: usize) -> SignatureGrid {
    assert!(k >= 2);
    let m = 2 * k;
    let u = |i: usize| i % m;
    let v = |i: usize| m + i % m;
    let mut color = vec![false; 2 * m];
    for i in 0..m {
        color[u(i)] = i % 2 == 0;
        color[v(i)] = i % 2 == 1;
    }
    let outer = |i: usize| i % m;
    let inner = |i: usize| m + i % m;
    let spoke = |i: usize| 2 * m + i % m;
    let mut edges = vec![(0, 0); 3 * m];
    let mut rotation = vec![Vec::new(); 2 * m];
    for i in 0..m {
        edges[outer(i)] = (u(i), u(i + 1));
        edges[inner(i)] = (v(i), v(i + 1));
        edges[spoke(i)] = (u(i), v(i));
        rotation[u(i)] = vec![outer(i), spoke(i), outer(i + m - 1)];
        rotation[v(i)] = vec![spoke(i), inner(i), inner(i + m - 1)];
    }
    Embedded {
        color,
        edges,
        rotation,
    }
    .into_grid(f)
}

pub fn cube_grid(f: &SymSig3) -> SignatureGrid {
    prism_grid(f, 2)
}

/// A cycle on `2k` vertices whose edges alternate between double and single;
/// `k = 1` is the theta graph (three parallel edges).
pub fn doubled_cycle_grid(f: &SymSig3, k: usize) -> SignatureGrid {
    assert!(k >= 1);
    let n = 2 * k;
    let color: Vec<bool> = (0..n).map(|i| i % 2 == 0).collect();
    let outer = |i: usize| 3 * (i % k);
    let inner = |i: usize| 3 * (i % k) + 1;
    let single = |i: usize| 3 * (i % k) + 2;
    let mut edges = vec![(0, 0); 3 * k];
    let mut rotation = vec![Vec::new(); n];
    for i in 0..k {
        let (a, b, c) = (2 * i, 2 * i + 1, (2 * i + 2) % n);
        edges[outer(i)] = (a, b);
        edges[inner(i)] = (a, b);
        edges[single(i)] = (b, c);
        rotation[a] = vec![outer(i), inner(i), single(i + k - 1)];
        rotation[b] = vec![single(i), inner(i), outer(i)];
    }
    Embedded {
        color,
        edges,
        rotation,
    }
    .into_grid(f)
}

pub fn theta_grid(f: &SymSig3) -> SignatureGrid {
    doubled_cycle_grid(f, 1)
}

/// Union of three random perfect matchings between `n` LHS and `n` RHS vertices.
pub fn random_cubic_bipartite<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(3 * n);
    for _ in 0..3 {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        edges.extend(perm.into_iter().enumerate());
    }
    edges
}

pub fn random_grid<R: Rng + ?Sized>(rng: &mut R, f: &SymSig3, n: usize) -> SignatureGrid {
    SignatureGrid::ternary(f, n, n, &random_cubic_bipartite(rng, n)).expect("3-regular by construction")
}

/// Planar embedded fixtures with at most `max_edges` edges.
pub fn planar_grids(f: &SymSig3, max_edges: usize) -> Vec<(String, SignatureGrid)> {
    let mut out = Vec::new();
    for k in 1..=6 {
        if 3 * k <= max_edges {
            out.push((format!("doubled-cycle-{}", 2 * k), doubled_cycle_grid(f, k)));
        }
    }
    for k in 2..=6 {
        if 6 * k <= max_edges {
            out.push((format!("prism-{}", 2 * k), prism_grid(f, k)));
        }
    }
    let cube = cube_grid(f);
    let theta = theta_grid(f);
    if 15 <= max_edges {
        out.push(("cube+theta".into(), cube.disjoint_union(&theta)));
    }
    if 24 <= max_edges {
        out.push(("cube+cube".into(), cube.disjoint_union(&cube)));
    }
    out
}

/// The system with three copies of one triple; its cover value is 6.
pub fn triple_system() -> SetSystem {
    SetSystem::numbered(3, vec![[0, 1, 2]; 3]).expect("3-regular")
}

/// Set systems used as leafless-cover fixtures: the triple system, the
/// incidence systems of the planar fixtures, some with repeated elements,
/// and seeded random ones.
pub fn set_system_fixtures<R: Rng + ?Sized>(rng: &mut R, random: usize) -> Vec<(String, SetSystem)> {
    let f = SymSig3::from_ints([1, 0, -1, 2]);
    let mut out = vec![("triple".to_string(), triple_system())];
    out.push((
        "k33".into(),
        SetSystem::from_grid(&k33_grid(&f)).expect("grid incidence"),
    ));
    for (name, g) in planar_grids(&f, 24) {
        out.push((format!("planar-{name}"), SetSystem::from_grid(&g).expect("grid incidence")));
    }
    out.push((
        "repeated-elements".into(),
        SetSystem::numbered(3, vec![[0, 0, 1], [0, 1, 1], [2, 2, 2]]).expect("3-regular"),
    ));
    out.push((
        "singleton-triples".into(),
        SetSystem::numbered(2, vec![[0, 0, 0], [1, 1, 1]]).expect("3-regular"),
    ));
    for t in 0..random {
        let n = 2 + t % 6;
        let edges = random_cubic_bipartite(rng, n);
        let g = SignatureGrid::ternary(&f, n, n, &edges).expect("3-regular");
        out.push((format!("random-{t}-n{n}"), SetSystem::from_grid(&g).expect("grid incidence")));
    }
    out
}

pub fn cycle_graph(n: usize) -> PlanarGraph {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rotation = (0..n).map(|i| vec![i, (i + n - 1) % n]).collect();
    PlanarGraph::new(n, edges, rotation).expect("cycle embedding")
}

/// K4 drawn as the triangle 0, 1, 2 around vertex 3.
pub fn k4_graph() -> PlanarGraph {
    let edges = vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
    let rotation = vec![vec![0, 3, 2], vec![1, 4, 0], vec![2, 5, 1], vec![4, 5, 3]];
    PlanarGraph::new(4, edges, rotation).expect("K4 embedding")
}

/// Outer triangle 0, 1, 2, inner triangle 3, 4, 5, spokes i to i + 3.
pub fn triangular_prism_graph() -> PlanarGraph {
    let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
    let rotation = vec![
        vec![0, 6, 2],
        vec![1, 7, 0],
        vec![2, 8, 1],
        vec![6, 3, 5],
        vec![7, 4, 3],
        vec![8, 5, 4],
    ];
    PlanarGraph::new(6, edges, rotation).expect("prism embedding")
}

/// Embedded graphs for matching counts: cycles, K4, the triangular prism,
/// and the graphs underlying the planar grids with at most `max_edges` edges.
pub fn planar_graph_fixtures(max_edges: usize) -> Vec<(String, PlanarGraph)> {
    let mut out: Vec<(String, PlanarGraph)> = [4, 5, 6, 8]
        .into_iter()
        .map(|n| (format!("cycle-{n}"), cycle_graph(n)))
        .collect();
    out.push(("k4".into(), k4_graph()));
    out.push(("triangular-prism".into(), triangular_prism_graph()));
    for (name, g) in planar_grids(&SymSig3::equality(), max_edges) {
        out.push((name, PlanarGraph::from_grid(&g).expect("embedded fixture")));
    }
    out
}
