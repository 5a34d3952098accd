//! Permutations of a small point set and explicitly enumerated groups.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{0, .., p-1}`; `map[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    map: Vec<u8>,
}

impl Permutation {
    pub fn identity(p: usize) -> Self {
        Permutation { map: (0..p as u8).collect() }
    }

    /// `None` unless `map` is a bijection of `0..map.len()`.
    pub fn from_map(map: &[usize]) -> Option<Self> {
        let mut seen = vec![false; map.len()];
        for &x in map {
            if x >= map.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation { map: map.iter().map(|&x| x as u8).collect() })
    }

    /// The cycle `c0 -> c1 -> ... -> c0` on `p` points.
    pub fn cycle(p: usize, cycle: &[usize]) -> Self {
        let mut map: Vec<usize> = (0..p).collect();
        for (i, &c) in cycle.iter().enumerate() {
            map[c] = cycle[(i + 1) % cycle.len()];
        }
        Permutation::from_map(&map).expect("cycle entries must be distinct")
    }

    pub fn transposition(p: usize, a: usize, b: usize) -> Self {
        Permutation::cycle(p, &[a, b])
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn as_map(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize).collect()
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Permutation { map: self.map.iter().map(|&x| other.map[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0u8; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x as usize] = i as u8;
        }
        Permutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Order of the permutation (lcm of its cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_transposition(&self) -> bool {
        let cs = self.cycles();
        cs.len() == 1 && cs[0].len() == 2
    }

    /// Restriction to `points` (which must be invariant), renumbered by position.
    pub fn restrict(&self, points: &[usize]) -> Permutation {
        let mut local = vec![usize::MAX; self.degree()];
        for (i, &p) in points.iter().enumerate() {
            local[p] = i;
        }
        let map: Vec<usize> = points.iter().map(|&p| local[self.apply(p)]).collect();
        Permutation::from_map(&map).expect("points must be an invariant set")
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// An explicitly enumerated permutation group on a named point set.
///
/// Permutations are stored on local indices `0..points.len()`; `points[i]`
/// is the vertex index of local point `i` and `labels[i]` its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteGroup {
    pub points: Vec<usize>,
    pub labels: Vec<String>,
    pub elements: BTreeSet<Permutation>,
    pub generators: Vec<Permutation>,
}

impl ConcreteGroup {
    /// The group generated by `generators`, enumerated by breadth-first closure.
    pub fn generate(points: Vec<usize>, labels: Vec<String>, generators: Vec<Permutation>) -> Self {
        let p = points.len();
        assert_eq!(labels.len(), p);
        let identity = Permutation::identity(p);
        let mut elements = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if elements.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        ConcreteGroup { points, labels, elements, generators }
    }

    /// Same as [`ConcreteGroup::generate`] with labels taken from the points.
    pub fn on_indices(p: usize, generators: Vec<Permutation>) -> Self {
        let points: Vec<usize> = (0..p).collect();
        let labels = points.iter().map(usize::to_string).collect();
        ConcreteGroup::generate(points, labels, generators)
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.contains(g)
    }

    /// Orbits on local points, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let p = self.degree();
        let mut orbit_of = vec![usize::MAX; p];
        let mut orbits = Vec::new();
        for s in 0..p {
            if orbit_of[s] != usize::MAX {
                continue;
            }
            let mut orbit = vec![s];
            orbit_of[s] = orbits.len();
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for g in &self.generators {
                    let y = g.apply(x);
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = orbits.len();
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Sorted multiset of orbit sizes.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Induced action on an orbit, as a group on that orbit's points.
    pub fn restrict_to(&self, orbit: &[usize]) -> ConcreteGroup {
        let elements: BTreeSet<Permutation> =
            self.elements.iter().map(|g| g.restrict(orbit)).collect();
        let generators = self.generators.iter().map(|g| g.restrict(orbit)).collect();
        ConcreteGroup {
            points: orbit.iter().map(|&i| self.points[i]).collect(),
            labels: orbit.iter().map(|&i| self.labels[i].clone()).collect(),
            elements,
            generators,
        }
    }

    /// Renders a permutation in cycle notation with this group's point labels.
    pub fn render(&self, g: &Permutation) -> String {
        let cycles = g.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c.iter().map(|&i| self.labels[i].as_str()).collect();
                format!("({})", parts.join(" "))
            })
            .collect()
    }
}
