//! Preference relations, preference-based teachers and their verification.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::concept::{pattern, ConceptClass, Sample};
use crate::dimensions::RtdCertificate;
use crate::error::{Error, Result};

/// A strict partial order on concept indices, stored transitively closed.
///
/// `prefers(i, j)` means concept `i` is preferred over concept `j`
/// (written `j ≺ i`).
#[derive(Clone, PartialEq, Eq)]
pub struct PreferenceRelation {
    n: usize,
    words: usize,
    // Row i holds every j with j ≺ i.
    below: Vec<u64>,
}

impl std::fmt::Debug for PreferenceRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PreferenceRelation")
            .field("n", &self.n)
            .field("pairs", &self.pairs())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Larger key is preferred.
    Higher,
    /// Smaller key is preferred.
    Lower,
}

impl PreferenceRelation {
    /// The empty relation on `n` concepts.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        PreferenceRelation {
            n,
            words,
            below: vec![0; n * words],
        }
    }

    /// Transitive closure of the given `(preferred, less_preferred)` pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut p = PreferenceRelation::empty(n);
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::ConceptOutOfRange {
                    index: i.max(j),
                    len: n,
                });
            }
            p.set(i, j);
        }
        p.close()?;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.below[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.below[i * self.words + j / 64] |= 1 << (j % 64);
    }

    /// True iff `i` is preferred over `j`.
    #[inline]
    pub fn prefers(&self, i: usize, j: usize) -> bool {
        (self.below[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.prefers(i, j) || self.prefers(j, i)
    }

    /// All `(preferred, less_preferred)` pairs, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for (w, &word) in self.row(i).iter().enumerate() {
                for b in BitSet::from_bits(word).iter() {
                    out.push((i, w * 64 + b));
                }
            }
        }
        out
    }

    pub fn pair_count(&self) -> usize {
        self.below.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn close(&mut self) -> Result<()> {
        let words = self.words;
        for k in 0..self.n {
            let row_k: Vec<u64> = self.row(k).to_vec();
            for i in 0..self.n {
                if self.prefers(i, k) {
                    let row_i = &mut self.below[i * words..(i + 1) * words];
                    for (a, b) in row_i.iter_mut().zip(&row_k) {
                        *a |= b;
                    }
                }
            }
        }
        for i in 0..self.n {
            if self.prefers(i, i) {
                let j = (0..self.n)
                    .find(|&j| j != i && self.prefers(i, j) && self.prefers(j, i))
                    .unwrap_or(i);
                return Err(Error::CyclicPreference(i.min(j), i.max(j)));
            }
        }
        Ok(())
    }

    /// Irreflexive and transitive; antisymmetry follows.
    pub fn is_strict_order(&self) -> bool {
        (0..self.n).all(|i| {
            !self.prefers(i, i)
                && (0..self.n).all(|j| {
                    !self.prefers(i, j)
                        || self
                            .row(j)
                            .iter()
                            .zip(self.row(i))
                            .all(|(a, b)| a & !b == 0)
                })
        })
    }

    /// Length of the longest chain of strictly more preferred concepts
    /// above each concept; maximal concepts get 0.
    pub fn levels(&self) -> Vec<usize> {
        let mut level = vec![0; self.n];
        // Concepts with fewer concepts above them come first in any
        // linear extension.
        let above: Vec<usize> = (0..self.n)
            .map(|j| (0..self.n).filter(|&i| self.prefers(i, j)).count())
            .collect();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&j| above[j]);
        for &j in &order {
            level[j] = (0..self.n)
                .filter(|&i| self.prefers(i, j))
                .map(|i| level[i] + 1)
                .max()
                .unwrap_or(0);
        }
        level
    }
}

/// Smaller sets are preferred: `i` over `j` iff concept i ⊂ concept j.
pub fn subset_preferences(cc: &ConceptClass) -> PreferenceRelation {
    inclusion_preferences(cc, false)
}

/// Larger sets are preferred: `i` over `j` iff concept i ⊃ concept j.
pub fn superset_preferences(cc: &ConceptClass) -> PreferenceRelation {
    inclusion_preferences(cc, true)
}

fn inclusion_preferences(cc: &ConceptClass, larger: bool) -> PreferenceRelation {
    let c = cc.concepts();
    let mut p = PreferenceRelation::empty(c.len());
    for i in 0..c.len() {
        for j in 0..c.len() {
            let hit = if larger {
                c[j].is_proper_subset(c[i])
            } else {
                c[i].is_proper_subset(c[j])
            };
            if hit {
                p.set(i, j);
            }
        }
    }
    // Inclusion is already transitive.
    p
}

/// Adds a preference between every pair that `p` leaves incomparable and
/// whose keys differ, then closes transitively. Fails if that creates a
/// cycle.
pub fn lex_refine(
    p: &PreferenceRelation,
    key: &[i64],
    direction: Direction,
) -> Result<PreferenceRelation> {
    if key.len() != p.n {
        return Err(Error::Precondition(format!(
            "key has {} entries for {} concepts",
            key.len(),
            p.n
        )));
    }
    let mut out = p.clone();
    for i in 0..p.n {
        for j in 0..p.n {
            let better = match direction {
                Direction::Higher => key[i] > key[j],
                Direction::Lower => key[i] < key[j],
            };
            if better && !p.comparable(i, j) {
                out.set(i, j);
            }
        }
    }
    out.close()?;
    Ok(out)
}

/// A teaching map `T` paired with a preference relation. Each concept is
/// taught by its own labels on `teaching_sets[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PBTeacher {
    pub teaching_sets: Vec<BitSet>,
    pub pref: PreferenceRelation,
}

impl PBTeacher {
    pub fn new(teaching_sets: Vec<BitSet>, pref: PreferenceRelation) -> Result<Self> {
        if teaching_sets.len() != pref.len() {
            return Err(Error::Precondition(format!(
                "{} teaching sets for a preference on {} concepts",
                teaching_sets.len(),
                pref.len()
            )));
        }
        Ok(PBTeacher {
            teaching_sets,
            pref,
        })
    }

    /// Largest teaching set.
    pub fn order(&self) -> usize {
        self.teaching_sets
            .iter()
            .map(|t| t.len())
            .max()
            .unwrap_or(0)
    }

    /// Largest teaching set over the concepts not in `skip`.
    pub fn order_without(&self, skip: &[usize]) -> usize {
        self.teaching_sets
            .iter()
            .enumerate()
            .filter(|(i, _)| !skip.contains(i))
            .map(|(_, t)| t.len())
            .max()
            .unwrap_or(0)
    }

    pub fn sample(&self, cc: &ConceptClass, i: usize) -> Sample {
        Sample::of_concept(cc.concepts()[i], self.teaching_sets[i])
    }
}

/// Why a teacher fails: `rival` survives in the version space of
/// `concept` without being less preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counterexample {
    pub concept: usize,
    pub rival: usize,
}

/// Checks that every concept is the unique most preferred concept in the
/// version space of its teaching sample. Returns the first violation in
/// (concept, rival) index order.
pub fn verify_pb_teacher(cc: &ConceptClass, t: &PBTeacher) -> Result<Option<Counterexample>> {
    if t.teaching_sets.len() != cc.len() {
        return Err(Error::Precondition(format!(
            "teacher covers {} concepts, class has {}",
            t.teaching_sets.len(),
            cc.len()
        )));
    }
    for i in 0..cc.len() {
        let sample = t.sample(cc, i);
        for j in cc.version_space(sample) {
            if j != i && !t.pref.prefers(i, j) {
                return Ok(Some(Counterexample {
                    concept: i,
                    rival: j,
                }));
            }
        }
    }
    Ok(None)
}

/// Classical teaching: every teaching sample must isolate its concept.
pub fn verify_smgk_teacher(cc: &ConceptClass, teaching_sets: &[BitSet]) -> Result<bool> {
    let t = PBTeacher::new(teaching_sets.to_vec(), PreferenceRelation::empty(cc.len()))?;
    Ok(verify_pb_teacher(cc, &t)?.is_none())
}

/// Turns an RTD peeling into a teacher: each concept keeps the teaching
/// set it had against its residual class, and later levels are preferred
/// over earlier ones so that concepts peeled before it never win.
pub fn plan_to_teacher(cert: &RtdCertificate, cc: &ConceptClass) -> Result<PBTeacher> {
    let level = cert.level_of(cc.len());
    if level.contains(&usize::MAX) {
        return Err(Error::Precondition(
            "certificate does not cover the class".into(),
        ));
    }
    let mut sets = vec![BitSet::EMPTY; cc.len()];
    for l in &cert.levels {
        for (&i, &d) in l.concepts.iter().zip(&l.teaching_sets) {
            sets[i] = d;
        }
    }
    let mut pref = PreferenceRelation::empty(cc.len());
    for i in 0..cc.len() {
        for j in 0..cc.len() {
            if level[i] > level[j] {
                pref.set(i, j);
            }
        }
    }
    PBTeacher::new(sets, pref)
}

/// One line per concept: bit pattern, labelled teaching set, preference
/// level (0 = most preferred).
pub fn dump_teacher(cc: &ConceptClass, t: &PBTeacher) -> String {
    let levels = t.pref.levels();
    let mut out = String::new();
    for i in 0..cc.len() {
        let _ = writeln!(
            out,
            "{}\t{}\t{}",
            pattern(cc.concepts()[i], cc.domain_size()),
            t.sample(cc, i),
            levels[i]
        );
    }
    out
}
