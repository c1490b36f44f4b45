//! 3-regular 3-uniform set systems and the weighted leafless partial cover.

use num_traits::{One, Zero};

use super::{GridError, SignatureGrid};
use crate::arith::{int, Rat};
use crate::signature::SymSig3;

pub const DEFAULT_SET_CAP: usize = 24;

/// Sets are multisets of three element indices; an element listed twice in
/// a set has two incidences with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    pub elements: Vec<String>,
    pub sets: Vec<[usize; 3]>,
}

impl SetSystem {
    pub fn new(elements: Vec<String>, sets: Vec<[usize; 3]>) -> Result<Self, GridError> {
        let s = SetSystem { elements, sets };
        s.validate()?;
        Ok(s)
    }

    /// Elements named `0..n`.
    pub fn numbered(n: usize, sets: Vec<[usize; 3]>) -> Result<Self, GridError> {
        Self::new((0..n).map(|i| i.to_string()).collect(), sets)
    }

    pub fn validate(&self) -> Result<(), GridError> {
        let mut count = vec![0usize; self.elements.len()];
        for (k, set) in self.sets.iter().enumerate() {
            for &e in set {
                *count.get_mut(e).ok_or_else(|| {
                    GridError::SetSystem(format!("set {k} mentions unknown element {e}"))
                })? += 1;
            }
        }
        for (e, c) in count.iter().enumerate() {
            if *c != 3 {
                return Err(GridError::SetSystem(format!(
                    "element {} occurs in {c} set slots, expected 3",
                    self.elements[e]
                )));
            }
        }
        Ok(())
    }

    /// The incidence structure of a grid: LHS vertices become elements, RHS vertices sets.
    pub fn from_grid(g: &SignatureGrid) -> Result<Self, GridError> {
        let (_, rports) = g.port_edges();
        let sets = rports
            .iter()
            .enumerate()
            .map(|(r, ports)| {
                <[usize; 3]>::try_from(ports.iter().map(|&e| g.edges[e].l).collect::<Vec<_>>())
                    .map_err(|_| GridError::SetSystem(format!("set {r} is not ternary")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::numbered(g.lhs.len(), sets)
    }
}

/// `[1, 0, -1, 2]`: weight of an element by the number of chosen incidences.
pub fn cover_signature() -> SymSig3 {
    SymSig3::from_ints([1, 0, -1, 2])
}

/// Elements become LHS vertices with `[1, 0, -1, 2]`, sets become `=3`, incidences edges.
pub fn from_set_system(s: &SetSystem) -> Result<SignatureGrid, GridError> {
    s.validate()?;
    let edges: Vec<(usize, usize)> = s
        .sets
        .iter()
        .enumerate()
        .flat_map(|(r, set)| set.iter().map(move |&e| (e, r)))
        .collect();
    SignatureGrid::ternary(&cover_signature(), s.elements.len(), s.sets.len(), &edges)
}

/// `Σ (−1)^l · 2^h` over leafless subfamilies, where `l` counts elements
/// covered exactly twice and `h` those covered three times.
pub fn cover_value(s: &SetSystem) -> Result<Rat, GridError> {
    cover_value_with_cap(s, DEFAULT_SET_CAP)
}

pub fn cover_value_with_cap(s: &SetSystem, cap: usize) -> Result<Rat, GridError> {
    s.validate()?;
    let m = s.sets.len();
    if m > cap {
        return Err(GridError::SetCapExceeded { count: m, cap });
    }
    let mut total = Rat::zero();
    let mut count = vec![0u8; s.elements.len()];
    for mask in 0u64..(1u64 << m) {
        count.iter_mut().for_each(|c| *c = 0);
        for (k, set) in s.sets.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for &e in set {
                    count[e] += 1;
                }
            }
        }
        if count.contains(&1) {
            continue;
        }
        let l = count.iter().filter(|&&c| c == 2).count();
        let h = count.iter().filter(|&&c| c == 3).count();
        let sign = if l % 2 == 0 { Rat::one() } else { -Rat::one() };
        total += sign * num_traits::pow(int(2), h);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QuadExt;
    use crate::grid::eval_brute;

    #[test]
    fn triple_system() {
        let s = SetSystem::numbered(3, vec![[0, 1, 2]; 3]).unwrap();
        assert_eq!(cover_value(&s).unwrap(), int(6));
        let g = from_set_system(&s).unwrap();
        assert_eq!(g.lhs.len(), 3);
        assert_eq!(g.edges.len(), 9);
        assert_eq!(eval_brute(&g).unwrap(), int(6).into());
    }

    #[test]
    fn irregular_system_is_rejected() {
        let err = SetSystem::numbered(3, vec![[0, 1, 2], [0, 1, 2]]);
        assert!(matches!(err, Err(GridError::SetSystem(_))));
    }

    #[test]
    fn repeated_elements_count_incidences() {
        // element 0 twice in set 0; sets: {0,0,1}, {0,1,1}, {2,2,2}
        let s = SetSystem::numbered(3, vec![[0, 0, 1], [0, 1, 1], [2, 2, 2]]).unwrap();
        let g = from_set_system(&s).unwrap();
        assert_eq!(QuadExt::from(cover_value(&s).unwrap()), eval_brute(&g).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let s = SetSystem::numbered(3, vec![[0, 1, 2]; 3]).unwrap();
        assert!(matches!(
            cover_value_with_cap(&s, 2),
            Err(GridError::SetCapExceeded { .. })
        ));
    }
}
