use std::collections::{BTreeSet, HashSet, VecDeque};

use super::matrix::ProjMatrix;
use super::point::ProjPoint;
use crate::error::{Error, Result};
use crate::field::FieldCtx;

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A finite subgroup of PGL(3), elements in canonical (sorted) order.
/// Equality compares elements only; generators are provenance.
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<ProjMatrix>,
    generators: Vec<ProjMatrix>,
}

impl PartialEq for AutGroup {
    fn eq(&self, o: &AutGroup) -> bool {
        self.elements == o.elements
    }
}

impl Eq for AutGroup {}

impl AutGroup {
    pub fn trivial(k: &FieldCtx) -> AutGroup {
        AutGroup { elements: vec![ProjMatrix::identity(k)], generators: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[ProjMatrix] {
        &self.generators
    }

    pub fn contains(&self, m: &ProjMatrix) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn non_identity<'a>(&'a self, k: &'a FieldCtx) -> impl Iterator<Item = &'a ProjMatrix> + 'a {
        self.elements.iter().filter(move |m| !m.is_identity(k))
    }

    /// `c G c⁻¹`.
    pub fn conjugate(&self, k: &FieldCtx, c: &ProjMatrix) -> AutGroup {
        let mut elements: Vec<ProjMatrix> = self.elements.iter().map(|g| c.conjugate(k, g)).collect();
        elements.sort();
        AutGroup { elements, generators: self.generators.iter().map(|g| c.conjugate(k, g)).collect() }
    }

    /// Elements common to both groups.
    pub fn intersection(&self, other: &AutGroup) -> Vec<ProjMatrix> {
        self.elements.iter().filter(|m| other.contains(m)).copied().collect()
    }

    /// Exhaustive closure check, used by tests and sanity assertions.
    pub fn is_closed(&self, k: &FieldCtx) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.compose(k, b)))
        })
    }
}

/// Breadth-first closure of `gens` under multiplication.
pub fn group_closure(k: &FieldCtx, gens: &[ProjMatrix], cap: usize) -> Result<AutGroup> {
    let id = ProjMatrix::identity(k);
    let mut seen: HashSet<ProjMatrix> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    let gens: Vec<ProjMatrix> = {
        let mut g: Vec<ProjMatrix> = gens.iter().copied().filter(|g| !g.is_identity(k)).collect();
        g.sort();
        g.dedup();
        g
    };
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.compose(k, g);
            if seen.insert(y) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<ProjMatrix> = seen.into_iter().collect();
    elements.sort();
    Ok(AutGroup { elements, generators: gens })
}

/// `{g(P) : g ∈ G}` in canonical order.
pub fn orbit(k: &FieldCtx, g: &AutGroup, p: &ProjPoint) -> Vec<ProjPoint> {
    let set: BTreeSet<ProjPoint> = g.elements().iter().map(|m| m.apply(k, p)).collect();
    set.into_iter().collect()
}
