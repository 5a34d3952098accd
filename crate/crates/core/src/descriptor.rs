//! Symbolic descriptions of defect groups and their comparison against
//! explicitly enumerated permutation groups.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{CheckedMul, FromPrimitive, One};
use serde::{Deserialize, Serialize};

use crate::perm::{ConcreteGroup, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    Trivial,
    Cyclic,
    Alternating,
    Symmetric,
    Pgl25,
}

/// One direct factor, annotated with the vertices it acts on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupFactor {
    pub kind: FactorKind,
    /// `m` in `Z_m`, `A_m`, `S_m`; 6 for `PGL2(5)`; 1 for the trivial group.
    pub degree: usize,
    #[serde(default)]
    pub support: Vec<String>,
}

impl GroupFactor {
    pub fn trivial(support: Vec<String>) -> Self {
        GroupFactor { kind: FactorKind::Trivial, degree: 1, support }
    }

    pub fn cyclic(m: usize, support: Vec<String>) -> Self {
        GroupFactor { kind: FactorKind::Cyclic, degree: m, support }
    }

    pub fn alternating(m: usize, support: Vec<String>) -> Self {
        GroupFactor { kind: FactorKind::Alternating, degree: m, support }
    }

    pub fn symmetric(m: usize, support: Vec<String>) -> Self {
        GroupFactor { kind: FactorKind::Symmetric, degree: m, support }
    }

    pub fn pgl25(support: Vec<String>) -> Self {
        GroupFactor { kind: FactorKind::Pgl25, degree: 6, support }
    }

    /// Collapses the small coincidences between families: `Z1`, `S1`, `A1`,
    /// `A2` become trivial, `Z2` becomes `S2` and `A3` becomes `Z3`.
    pub fn normalized(&self) -> GroupFactor {
        let support = self.support.clone();
        match (self.kind, self.degree) {
            (FactorKind::Cyclic, 0..=1) | (FactorKind::Symmetric, 0..=1) | (FactorKind::Alternating, 0..=2) => {
                GroupFactor::trivial(support)
            }
            (FactorKind::Cyclic, 2) => GroupFactor::symmetric(2, support),
            (FactorKind::Alternating, 3) => GroupFactor::cyclic(3, support),
            _ => self.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.normalized().kind == FactorKind::Trivial
    }

    /// Order as any integer type, `None` on overflow.
    pub fn order_as<T>(&self) -> Option<T>
    where
        T: One + CheckedMul + FromPrimitive,
    {
        let m = self.degree;
        match self.kind {
            FactorKind::Trivial => Some(T::one()),
            FactorKind::Cyclic => T::from_usize(m.max(1)),
            FactorKind::Symmetric => factorial(m),
            FactorKind::Alternating if m < 2 => Some(T::one()),
            FactorKind::Alternating => (3..=m).try_fold(T::one(), |acc, i| acc.checked_mul(&T::from_usize(i)?)),
            FactorKind::Pgl25 => T::from_u32(120),
        }
    }

    pub fn order(&self) -> BigUint {
        self.order_as().expect("arbitrary precision cannot overflow")
    }
}

fn factorial<T: One + CheckedMul + FromPrimitive>(m: usize) -> Option<T> {
    (2..=m).try_fold(T::one(), |acc, i| acc.checked_mul(&T::from_usize(i)?))
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Trivial => write!(f, "1"),
            FactorKind::Cyclic => write!(f, "Z{}", self.degree),
            FactorKind::Alternating => write!(f, "A{}", self.degree),
            FactorKind::Symmetric => write!(f, "S{}", self.degree),
            FactorKind::Pgl25 => write!(f, "PGL2(5)[6pts]"),
        }
    }
}

/// A direct product of factors. Trivial factors are kept so their supports
/// stay on record. Rendering uses the normal form of each factor, so `Z2`
/// prints as `S2` and `A3` as `Z3`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub factors: Vec<GroupFactor>,
}

impl GroupDescriptor {
    pub fn new(factors: Vec<GroupFactor>) -> Self {
        GroupDescriptor { factors }
    }

    pub fn trivial() -> Self {
        GroupDescriptor::default()
    }

    pub fn product(parts: impl IntoIterator<Item = GroupDescriptor>) -> Self {
        GroupDescriptor { factors: parts.into_iter().flat_map(|d| d.factors).collect() }
    }

    /// Nontrivial factors in normal form, sorted.
    pub fn normalized_factors(&self) -> Vec<GroupFactor> {
        let mut out: Vec<GroupFactor> = self
            .factors
            .iter()
            .map(GroupFactor::normalized)
            .filter(|f| f.kind != FactorKind::Trivial)
            .collect();
        out.sort();
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.iter().all(GroupFactor::is_trivial)
    }

    pub fn order_as<T>(&self) -> Option<T>
    where
        T: One + CheckedMul + FromPrimitive,
    {
        self.factors.iter().try_fold(T::one(), |acc, f| acc.checked_mul(&f.order_as::<T>()?))
    }

    pub fn order(&self) -> BigUint {
        self.factors.iter().map(GroupFactor::order).product()
    }

    /// True when the normal form is exactly one `S_m`, or trivial when `m <= 1`.
    pub fn is_full_symmetric(&self, m: usize) -> bool {
        let nontrivial = self.normalized_factors();
        if m <= 1 {
            nontrivial.is_empty()
        } else {
            nontrivial.len() == 1 && nontrivial[0].kind == FactorKind::Symmetric && nontrivial[0].degree == m
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let normal: Vec<GroupFactor> = self.factors.iter().map(GroupFactor::normalized).collect();
        let mut parts: Vec<String> = normal
            .iter()
            .filter(|x| x.kind != FactorKind::Trivial)
            .map(GroupFactor::to_string)
            .collect();
        if parts.is_empty() || normal.iter().any(|x| x.kind == FactorKind::Trivial) {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// How the group acts on one of its orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitAnalysis {
    pub points: Vec<String>,
    /// Order of the induced permutation group on this orbit.
    pub induced_order: u64,
    pub symmetric: bool,
    pub alternating: bool,
    pub cyclic: bool,
    pub sharply_3_transitive: bool,
    /// A transposition and a full cycle of the orbit, when present.
    pub transposition: Option<String>,
    pub full_cycle: Option<String>,
}

impl OrbitAnalysis {
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn label(&self) -> &'static str {
        if self.size() == 1 {
            "fixed"
        } else if self.symmetric {
            "symmetric"
        } else if self.alternating {
            "alternating"
        } else if self.sharply_3_transitive {
            "sharply 3-transitive"
        } else if self.cyclic {
            "cyclic"
        } else {
            "other"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAnalysis {
    pub order: u64,
    pub orbits: Vec<OrbitAnalysis>,
}

impl GroupAnalysis {
    pub fn nontrivial_orbits(&self) -> impl Iterator<Item = &OrbitAnalysis> {
        self.orbits.iter().filter(|o| o.size() > 1)
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits.iter().map(OrbitAnalysis::size).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Order, orbits and per-orbit action type of an enumerated group.
pub fn identify_concrete(group: &ConcreteGroup) -> GroupAnalysis {
    let orbits = group
        .orbits()
        .iter()
        .map(|orbit| {
            let induced = group.restrict_to(orbit);
            let m = orbit.len();
            let order = induced.order() as u64;
            let m_factorial: u64 = (2..=m as u64).product();
            let all_even = induced.generators.iter().all(Permutation::is_even);
            let transposition = induced.elements.iter().find(|g| g.is_transposition());
            let full_cycle = induced
                .elements
                .iter()
                .find(|g| m > 1 && g.cycles().first().is_some_and(|c| c.len() == m));
            OrbitAnalysis {
                points: induced.labels.clone(),
                induced_order: order,
                symmetric: order == m_factorial,
                alternating: m >= 3 && all_even && 2 * order == m_factorial,
                cyclic: induced.elements.iter().any(|g| g.order() == order),
                sharply_3_transitive: sharply_3_transitive(&induced),
                transposition: transposition.map(|g| induced.render(g)),
                full_cycle: full_cycle.map(|g| induced.render(g)),
            }
        })
        .collect();
    GroupAnalysis { order: group.order() as u64, orbits }
}

/// Exactly one element maps any ordered triple of distinct points to any other.
pub fn sharply_3_transitive(group: &ConcreteGroup) -> bool {
    let p = group.degree();
    if p < 3 {
        return false;
    }
    let triples = p * (p - 1) * (p - 2);
    if group.order() != triples {
        return false;
    }
    let images: BTreeSet<[usize; 3]> =
        group.elements.iter().map(|g| [g.apply(0), g.apply(1), g.apply(2)]).collect();
    images.len() == triples
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub matched: bool,
    pub descriptor: String,
    pub descriptor_order: String,
    pub group_order: u64,
    pub orbit_sizes: Vec<usize>,
    pub reason: Option<String>,
}

fn compatible(f: &GroupFactor, o: &OrbitAnalysis) -> bool {
    let m = f.degree;
    match f.kind {
        FactorKind::Trivial => o.size() == 1,
        FactorKind::Symmetric => o.size() == m && o.symmetric,
        FactorKind::Alternating => o.size() == m && o.alternating,
        FactorKind::Cyclic => o.cyclic && o.induced_order == m as u64,
        FactorKind::Pgl25 => o.size() == 6 && o.induced_order == 120 && o.sharply_3_transitive,
    }
}

/// Kuhn's augmenting-path matching; true when every factor finds its own orbit.
fn perfect_matching(factors: &[GroupFactor], orbits: &[&OrbitAnalysis]) -> bool {
    fn augment(
        f: usize,
        factors: &[GroupFactor],
        orbits: &[&OrbitAnalysis],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for o in 0..orbits.len() {
            if seen[o] || !compatible(&factors[f], orbits[o]) {
                continue;
            }
            seen[o] = true;
            if owner[o].is_none_or(|g| augment(g, factors, orbits, owner, seen)) {
                owner[o] = Some(f);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; orbits.len()];
    (0..factors.len()).all(|f| augment(f, factors, orbits, &mut owner, &mut vec![false; orbits.len()]))
}

/// Compares a descriptor with an enumerated group: orders must agree and the
/// nontrivial factors must pair off one-to-one with nontrivial orbits of the
/// matching action type. Supports are not compared.
pub fn matches(descriptor: &GroupDescriptor, group: &ConcreteGroup) -> (bool, MatchReport) {
    let analysis = identify_concrete(group);
    let factors = descriptor.normalized_factors();
    let orbits: Vec<&OrbitAnalysis> = analysis.nontrivial_orbits().collect();
    let d_order = descriptor.order();

    let reason = if d_order != BigUint::from(analysis.order) {
        Some(format!("order {} != {}", d_order, analysis.order))
    } else if factors.len() != orbits.len() {
        Some(format!("{} nontrivial factors but {} nontrivial orbits", factors.len(), orbits.len()))
    } else if !perfect_matching(&factors, &orbits) {
        let kinds: Vec<String> = orbits.iter().map(|o| format!("{}({})", o.label(), o.size())).collect();
        Some(format!("factors do not match orbit actions [{}]", kinds.join(", ")))
    } else {
        None
    };
    let matched = reason.is_none();
    let report = MatchReport {
        matched,
        descriptor: descriptor.to_string(),
        descriptor_order: d_order.to_string(),
        group_order: analysis.order,
        orbit_sizes: analysis.orbit_sizes(),
        reason,
    };
    (matched, report)
}
