//! Versioned JSON instance files: signature grids and set systems.
//!
//! Rationals are written as `"p/q"` or integer strings; floats are rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rat;
use crate::grid::{from_set_system, GridError, Rotation, SetSystem, SignatureGrid};
use crate::signature::SymSig3;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema version {found} is not supported (expected {SCHEMA_VERSION})")]
    Version { found: u32 },
    #[error("'{0}' is not an exact rational; write an integer or p/q")]
    BadRational(String),
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// Parses `"p/q"` or an integer. Decimal points and exponents are refused.
pub fn parse_rat(s: &str) -> Result<Rat, IoError> {
    let t = s.trim();
    if t.contains(['.', 'e', 'E']) {
        return Err(IoError::BadRational(s.to_string()));
    }
    t.parse::<Rat>().map_err(|_| IoError::BadRational(s.to_string()))
}

pub fn parse_signature<S: AsRef<str>>(entries: &[S]) -> Result<SymSig3, IoError> {
    let v: Vec<Rat> = entries.iter().map(|e| parse_rat(e.as_ref())).collect::<Result<_, _>>()?;
    let [f0, f1, f2, f3] = <[Rat; 4]>::try_from(v)
        .map_err(|v| IoError::Schema(format!("a ternary signature has 4 entries, got {}", v.len())))?;
    Ok(SymSig3::new(f0, f1, f2, f3))
}

fn signature_strings(f: &SymSig3) -> [String; 4] {
    f.entries().clone().map(|r| r.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationFile {
    pub lhs: Vec<Vec<usize>>,
    pub rhs: Vec<Vec<usize>>,
}

/// A grid with one ternary signature on every LHS vertex and `=3` on every RHS vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridFile {
    pub version: u32,
    pub lhs_signature: [String; 4],
    /// `[l, r]` pairs; ports are numbered in order of appearance unless `ports` is given.
    pub edges: Vec<[usize; 2]>,
    /// `[lhs port, rhs port]` per edge.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ports: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<RotationFile>,
}

impl GridFile {
    pub fn new(f: &SymSig3, edges: &[(usize, usize)]) -> Self {
        GridFile {
            version: SCHEMA_VERSION,
            lhs_signature: signature_strings(f),
            edges: edges.iter().map(|&(l, r)| [l, r]).collect(),
            ports: None,
            lhs_count: None,
            rhs_count: None,
            rotation: None,
        }
    }

    /// The file of a grid built with [`SignatureGrid::ternary`].
    pub fn from_grid(f: &SymSig3, g: &SignatureGrid) -> Self {
        let edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e.l, e.r)).collect();
        let mut file = GridFile::new(f, &edges);
        let in_order = SignatureGrid::ternary(f, g.lhs.len(), g.rhs.len(), &edges)
            .is_ok_and(|h| h.edges == g.edges);
        if !in_order {
            file.ports = Some(g.edges.iter().map(|e| [e.lport, e.rport]).collect());
        }
        file.lhs_count = Some(g.lhs.len());
        file.rhs_count = Some(g.rhs.len());
        file.rotation = g.rotation.as_ref().map(|r| RotationFile {
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
        });
        file
    }

    pub fn signature(&self) -> Result<SymSig3, IoError> {
        parse_signature(&self.lhs_signature)
    }

    pub fn to_grid(&self) -> Result<(SymSig3, SignatureGrid), IoError> {
        check_version(self.version)?;
        let f = self.signature()?;
        let infer = |k: usize| self.edges.iter().map(|e| e[k] + 1).max().unwrap_or(0);
        let nl = self.lhs_count.unwrap_or_else(|| infer(0));
        let nr = self.rhs_count.unwrap_or_else(|| infer(1));
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut g = SignatureGrid::ternary(&f, nl, nr, &edges)?;
        if let Some(ports) = &self.ports {
            if ports.len() != edges.len() {
                return Err(IoError::Schema("ports must list one pair per edge".into()));
            }
            for (e, p) in g.edges.iter_mut().zip(ports) {
                e.lport = p[0];
                e.rport = p[1];
            }
            g.validate()?;
        }
        if let Some(r) = &self.rotation {
            g = g.with_rotation(Rotation {
                lhs: r.lhs.clone(),
                rhs: r.rhs.clone(),
            })?;
        }
        Ok((f, g))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, IoError> {
        let file: GridFile = serde_json::from_str(s)?;
        check_version(file.version)?;
        Ok(file)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSystemFile {
    pub version: u32,
    /// Element names; defaults to `0..n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    pub sets: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<RotationFile>,
}

impl SetSystemFile {
    pub fn from_system(s: &SetSystem) -> Self {
        SetSystemFile {
            version: SCHEMA_VERSION,
            elements: Some(s.elements.clone()),
            sets: s.sets.clone(),
            rotation: None,
        }
    }

    /// The incidence system of an embedded ternary grid, keeping the embedding.
    pub fn from_planar_grid(g: &SignatureGrid) -> Result<Self, IoError> {
        let system = SetSystem::from_grid(g)?;
        let mut file = SetSystemFile::from_system(&system);
        if let Some(rot) = &g.rotation {
            let h = from_set_system(&system)?;
            let (_, rports) = g.port_edges();
            // element port in `g` -> element port in the grid rebuilt from the file
            let mut lmap: Vec<Vec<usize>> = g.lhs.iter().map(|s| vec![0; s.arity]).collect();
            for (r, ports) in rports.iter().enumerate() {
                for (k, &e) in ports.iter().enumerate() {
                    let he = &h.edges[3 * r + k];
                    lmap[g.edges[e].l][g.edges[e].lport] = he.lport;
                }
            }
            file.rotation = Some(RotationFile {
                lhs: rot
                    .lhs
                    .iter()
                    .enumerate()
                    .map(|(v, order)| order.iter().map(|&p| lmap[v][p]).collect())
                    .collect(),
                rhs: rot.rhs.clone(),
            });
        }
        Ok(file)
    }

    /// The cover grid, embedded when the file carries a rotation.
    pub fn to_grid(&self) -> Result<SignatureGrid, IoError> {
        let g = from_set_system(&self.to_system()?)?;
        Ok(match &self.rotation {
            Some(r) => g.with_rotation(Rotation {
                lhs: r.lhs.clone(),
                rhs: r.rhs.clone(),
            })?,
            None => g,
        })
    }

    pub fn to_system(&self) -> Result<SetSystem, IoError> {
        check_version(self.version)?;
        let n = self.sets.iter().flatten().map(|&e| e + 1).max().unwrap_or(0);
        let elements = self
            .elements
            .clone()
            .unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        Ok(SetSystem::new(elements, self.sets.clone())?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("set system file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, IoError> {
        let file: SetSystemFile = serde_json::from_str(s)?;
        check_version(file.version)?;
        Ok(file)
    }
}

fn check_version(found: u32) -> Result<(), IoError> {
    if found == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(IoError::Version { found })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::fixtures;

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat(" 7 ").unwrap(), rat(7, 1));
        for bad in ["0.5", "1e3", "1/0", "x", ""] {
            assert!(parse_rat(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn grid_round_trip() {
        let f = SymSig3::new(rat(1, 2), rat(-3, 4), rat(0, 1), rat(5, 1));
        let g = fixtures::k33_grid(&f);
        let file = GridFile::from_grid(&f, &g);
        let back = GridFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        let (f2, g2) = back.to_grid().unwrap();
        assert_eq!((f2, g2), (f, g));
    }

    #[test]
    fn planar_grid_round_trip() {
        let f = SymSig3::from_ints([1, 0, -1, 2]);
        for (name, g) in fixtures::planar_grids(&f, 28) {
            let file = GridFile::from_grid(&f, &g);
            let (_, g2) = GridFile::from_json(&file.to_json()).unwrap().to_grid().unwrap();
            assert_eq!(g2, g, "{name}");
        }
    }

    #[test]
    fn set_system_round_trip() {
        let s = fixtures::triple_system();
        let file = SetSystemFile::from_system(&s);
        let back = SetSystemFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_system().unwrap(), s);
    }

    #[test]
    fn embedded_set_system_keeps_faces() {
        use crate::planar::PlanarGraph;
        let f = crate::grid::cover_signature();
        for (name, g) in fixtures::planar_grids(&f, 28) {
            let file = SetSystemFile::from_planar_grid(&g).unwrap();
            let h = SetSystemFile::from_json(&file.to_json()).unwrap().to_grid().unwrap();
            let faces = |g: &SignatureGrid| PlanarGraph::from_grid(g).unwrap().faces().unwrap().len();
            assert_eq!(faces(&h), faces(&g), "{name}");
        }
    }

    #[test]
    fn schema_errors() {
        let v2 = r#"{"version": 2, "lhs_signature": ["1","0","0","1"], "edges": []}"#;
        assert!(matches!(GridFile::from_json(v2), Err(IoError::Version { found: 2 })));
        let extra = r#"{"version": 1, "lhs_signature": ["1","0","0","1"], "edges": [], "weights": 3}"#;
        assert!(matches!(GridFile::from_json(extra), Err(IoError::Json(_))));
        let float = r#"{"version": 1, "lhs_signature": ["1","0.5","0","1"], "edges": [[0,0],[0,0],[0,0]]}"#;
        assert!(matches!(
            GridFile::from_json(float).unwrap().to_grid(),
            Err(IoError::BadRational(_))
        ));
        let short = r#"{"version": 1, "lhs_signature": ["1","0","0","1"], "edges": [[0,0]]}"#;
        assert!(matches!(GridFile::from_json(short).unwrap().to_grid(), Err(IoError::Grid(_))));
    }
}
