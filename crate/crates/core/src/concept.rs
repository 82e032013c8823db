//! Concepts, samples, version spaces and shattering over a finite domain
//! `{0, .., d-1}`.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::bitset::{BitSet, MAX_BITS};
use crate::error::{Error, Result};

/// A concept is the set of instances it labels `+`.
pub type Concept = BitSet;

/// Largest domain for [`powerset_class`].
pub const POWERSET_MAX: usize = 16;
/// Largest instance set accepted by [`ConceptClass::is_shattered`].
pub const SHATTER_MAX: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Pos,
    Neg,
}

impl Label {
    pub fn of(c: Concept, x: usize) -> Label {
        if c.contains(x) {
            Label::Pos
        } else {
            Label::Neg
        }
    }

    pub fn sign(self) -> char {
        match self {
            Label::Pos => '+',
            Label::Neg => '-',
        }
    }
}

/// Compares two concepts by their `0/1` pattern read from instance 0
/// upwards, which is the order used for every concept list.
pub fn cmp_pattern(a: Concept, b: Concept) -> Ordering {
    match (a ^ b).first() {
        None => Ordering::Equal,
        Some(i) if a.contains(i) => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

pub fn pattern(c: Concept, domain_size: usize) -> String {
    (0..domain_size)
        .map(|i| if c.contains(i) { '1' } else { '0' })
        .collect()
}

/// A consistent set of labelled examples, at most one per instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Sample {
    pos: BitSet,
    neg: BitSet,
}

impl Sample {
    pub const EMPTY: Sample = Sample {
        pos: BitSet::EMPTY,
        neg: BitSet::EMPTY,
    };

    pub fn new(examples: impl IntoIterator<Item = (usize, Label)>) -> Result<Self> {
        let mut s = Sample::EMPTY;
        for (x, b) in examples {
            if x >= MAX_BITS {
                return Err(Error::InstanceOutOfRange {
                    index: x,
                    domain: MAX_BITS,
                });
            }
            s = s.with(x, b)?;
        }
        Ok(s)
    }

    /// The sample `{(x, c(x)) : x ∈ instances}`.
    pub fn of_concept(c: Concept, instances: BitSet) -> Sample {
        Sample {
            pos: instances & c,
            neg: instances - c,
        }
    }

    pub fn from_parts(pos: BitSet, neg: BitSet) -> Result<Sample> {
        match (pos & neg).first() {
            Some(x) => Err(Error::ContradictorySample(x)),
            None => Ok(Sample { pos, neg }),
        }
    }

    pub fn with(self, x: usize, b: Label) -> Result<Sample> {
        let (mut pos, mut neg) = (self.pos, self.neg);
        match b {
            Label::Pos => pos.insert(x),
            Label::Neg => neg.insert(x),
        }
        Sample::from_parts(pos, neg)
    }

    pub fn union(self, other: Sample) -> Result<Sample> {
        Sample::from_parts(self.pos | other.pos, self.neg | other.neg)
    }

    pub fn positives(self) -> BitSet {
        self.pos
    }

    pub fn negatives(self) -> BitSet {
        self.neg
    }

    pub fn instances(self) -> BitSet {
        self.pos | self.neg
    }

    pub fn len(self) -> usize {
        self.instances().len()
    }

    pub fn is_empty(self) -> bool {
        self.instances().is_empty()
    }

    pub fn examples(self) -> impl Iterator<Item = (usize, Label)> {
        let pos = self.pos;
        self.instances().iter().map(move |x| (x, Label::of(pos, x)))
    }

    #[inline]
    pub fn is_consistent(self, c: Concept) -> bool {
        self.pos.is_subset(c) && !self.neg.intersects(c)
    }
}

impl std::fmt::Display for Sample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, (x, b)) in self.examples().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}{}", b.sign())?;
        }
        write!(f, "}}")
    }
}

#[inline]
pub fn is_consistent(c: Concept, s: Sample) -> bool {
    s.is_consistent(c)
}

/// A finite set of concepts over `{0, .., domain_size-1}`, kept sorted by
/// [`cmp_pattern`] with no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConceptClass {
    domain_size: usize,
    concepts: Vec<Concept>,
}

impl ConceptClass {
    /// Sorts and deduplicates `concepts`.
    pub fn new(domain_size: usize, mut concepts: Vec<Concept>) -> Result<Self> {
        if domain_size > MAX_BITS {
            return Err(Error::DomainTooLarge {
                size: domain_size,
                limit: MAX_BITS,
            });
        }
        let domain = BitSet::full(domain_size);
        if let Some(c) = concepts.iter().find(|c| !c.is_subset(domain)) {
            return Err(Error::InstanceOutOfRange {
                index: (*c - domain).first().unwrap_or(0),
                domain: domain_size,
            });
        }
        concepts.sort_unstable_by(|a, b| cmp_pattern(*a, *b));
        concepts.dedup();
        Ok(ConceptClass {
            domain_size,
            concepts,
        })
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn domain(&self) -> BitSet {
        BitSet::full(self.domain_size)
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, i: usize) -> Result<Concept> {
        self.concepts
            .get(i)
            .copied()
            .ok_or(Error::ConceptOutOfRange {
                index: i,
                len: self.len(),
            })
    }

    pub fn index_of(&self, c: Concept) -> Option<usize> {
        self.concepts
            .binary_search_by(|probe| cmp_pattern(*probe, c))
            .ok()
    }

    pub fn contains(&self, c: Concept) -> bool {
        self.index_of(c).is_some()
    }

    pub fn check_sample(&self, s: Sample) -> Result<()> {
        match (s.instances() - self.domain()).first() {
            Some(x) => Err(Error::InstanceOutOfRange {
                index: x,
                domain: self.domain_size,
            }),
            None => Ok(()),
        }
    }

    /// Indices of the concepts consistent with `s`, ascending.
    pub fn version_space(&self, s: Sample) -> Vec<usize> {
        self.concepts
            .iter()
            .enumerate()
            .filter(|(_, c)| s.is_consistent(**c))
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff every subset of `set` is cut out by some concept.
    pub fn is_shattered(&self, set: BitSet) -> Result<bool> {
        if !set.is_subset(self.domain()) {
            return Err(Error::InstanceOutOfRange {
                index: (set - self.domain()).first().unwrap_or(0),
                domain: self.domain_size,
            });
        }
        let k = set.len();
        if k > SHATTER_MAX {
            return Err(Error::DomainTooLarge {
                size: k,
                limit: SHATTER_MAX,
            });
        }
        Ok(shatters(&self.concepts, set))
    }

    /// The class with concepts projected onto `set`, renumbered
    /// `0..|set|` in increasing order.
    pub fn restrict(&self, set: BitSet) -> Result<ConceptClass> {
        if !set.is_subset(self.domain()) {
            return Err(Error::InstanceOutOfRange {
                index: (set - self.domain()).first().unwrap_or(0),
                domain: self.domain_size,
            });
        }
        let projected = self
            .concepts
            .iter()
            .map(|c| BitSet::from_bits(c.compress(set)))
            .collect();
        ConceptClass::new(set.len(), projected)
    }

    /// The subclass made of the given concept indices, over the same domain.
    pub fn subclass(&self, indices: &[usize]) -> Result<ConceptClass> {
        let concepts = indices
            .iter()
            .map(|&i| self.concept(i))
            .collect::<Result<Vec<_>>>()?;
        ConceptClass::new(self.domain_size, concepts)
    }

    /// Text format: header `m d`, then one line of `d` characters from
    /// `{0,1}` per concept, character `i` giving the label of instance `i`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.len(), self.domain_size);
        for &c in &self.concepts {
            let _ = writeln!(s, "{}", pattern(c, self.domain_size));
        }
        s
    }

    /// Parses the text format; duplicate concepts are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse {
                line: hline,
                msg: e.to_string(),
            })?;
        let [m, d] = nums[..] else {
            return Err(Error::Parse {
                line: hline,
                msg: "expected `m d`".into(),
            });
        };
        if d > MAX_BITS {
            return Err(Error::DomainTooLarge {
                size: d,
                limit: MAX_BITS,
            });
        }
        let mut concepts = Vec::with_capacity(m);
        for (line, l) in lines {
            if l.len() != d {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {d} characters, got {}", l.len()),
                });
            }
            let mut c = BitSet::EMPTY;
            for (i, ch) in l.chars().enumerate() {
                match ch {
                    '1' => c.insert(i),
                    '0' => {}
                    other => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("unexpected character {other:?}"),
                        })
                    }
                }
            }
            concepts.push(c);
        }
        if concepts.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header promises {m} concepts, found {}", concepts.len()),
            });
        }
        let class = ConceptClass::new(d, concepts)?;
        if class.len() != m {
            return Err(Error::DuplicateConcept(format!(
                "{} duplicate line(s)",
                m - class.len()
            )));
        }
        Ok(class)
    }
}

/// Shattering test on a raw concept list with early exit in both
/// directions.
pub(crate) fn shatters(concepts: &[Concept], set: BitSet) -> bool {
    let k = set.len();
    let need = 1usize << k;
    if concepts.len() < need {
        return false;
    }
    if k <= 6 {
        let mut seen = 0u64;
        let full = if need == 64 {
            u64::MAX
        } else {
            (1u64 << need) - 1
        };
        for &c in concepts {
            seen |= 1u64 << c.compress(set);
            if seen == full {
                return true;
            }
        }
        return false;
    }
    let mut seen = vec![0u64; need / 64];
    let mut count = 0;
    for (left, &c) in concepts.iter().enumerate() {
        let t = c.compress(set) as usize;
        let (w, b) = (t / 64, t % 64);
        if seen[w] >> b & 1 == 0 {
            seen[w] |= 1 << b;
            count += 1;
            if count == need {
                return true;
            }
        }
        if need - count > concepts.len() - left - 1 {
            return false;
        }
    }
    false
}

/// All `2^d` subsets of `{0, .., d-1}`.
pub fn powerset_class(domain_size: usize) -> Result<ConceptClass> {
    if domain_size > POWERSET_MAX {
        return Err(Error::DomainTooLarge {
            size: domain_size,
            limit: POWERSET_MAX,
        });
    }
    ConceptClass::new(domain_size, BitSet::full(domain_size).subsets().collect())
}

/// Union of classes over consecutive disjoint blocks of a combined domain.
/// Each concept is `-` outside its own block, so the all-negative concept
/// appears at most once.
pub fn disjoint_union(classes: &[ConceptClass]) -> Result<ConceptClass> {
    let total: usize = classes.iter().map(|c| c.domain_size).sum();
    if total > MAX_BITS {
        return Err(Error::DomainTooLarge {
            size: total,
            limit: MAX_BITS,
        });
    }
    let mut offset = 0;
    let mut concepts = Vec::new();
    for class in classes {
        concepts.extend(
            class
                .concepts
                .iter()
                .map(|c| BitSet::from_bits(c.bits() << offset)),
        );
        offset += class.domain_size;
    }
    ConceptClass::new(total, concepts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BitSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn powerset_sizes() {
        assert_eq!(powerset_class(0).unwrap().concepts(), &[BitSet::EMPTY]);
        assert_eq!(powerset_class(3).unwrap().len(), 8);
        assert!(powerset_class(17).is_err());
    }

    #[test]
    fn concepts_sorted_by_pattern() {
        let cc = powerset_class(2).unwrap();
        let pats: Vec<_> = cc.concepts().iter().map(|&c| pattern(c, 2)).collect();
        assert_eq!(pats, ["00", "01", "10", "11"]);
    }

    #[test]
    fn version_space_examples() {
        let cc = powerset_class(2).unwrap();
        assert_eq!(cc.version_space(Sample::EMPTY), vec![0, 1, 2, 3]);
        let s = Sample::new([(0, Label::Pos), (1, Label::Neg)]).unwrap();
        let vs = cc.version_space(s);
        assert_eq!(vs.len(), 1);
        assert_eq!(pattern(cc.concepts()[vs[0]], 2), "10");
    }

    #[test]
    fn samples_reject_contradictions() {
        assert!(matches!(
            Sample::new([(3, Label::Pos), (3, Label::Neg)]),
            Err(Error::ContradictorySample(3))
        ));
        let s = Sample::new([(3, Label::Pos), (3, Label::Pos), (1, Label::Neg)]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "{1-,3+}");
        assert!(is_consistent(set(&[3]), s));
        assert!(!is_consistent(set(&[1, 3]), s));
        assert!(is_consistent(BitSet::EMPTY, Sample::EMPTY));
    }

    #[test]
    fn shattering_basics() {
        let cc = powerset_class(3).unwrap();
        assert!(cc.is_shattered(set(&[0, 1, 2])).unwrap());
        assert!(cc.is_shattered(BitSet::EMPTY).unwrap());
        let singletons = ConceptClass::new(3, vec![set(&[0]), set(&[1]), set(&[2])]).unwrap();
        assert!(singletons.is_shattered(set(&[0])).unwrap());
        assert!(!singletons.is_shattered(set(&[0, 1])).unwrap());
        assert!(singletons.is_shattered(set(&[5])).is_err());
    }

    #[test]
    fn wide_shattering_uses_bitmap_path() {
        let cc = powerset_class(8).unwrap();
        assert!(cc.is_shattered(BitSet::full(8)).unwrap());
        let mut missing = cc.concepts().to_vec();
        missing.retain(|c| c.len() != 4);
        let cc = ConceptClass::new(8, missing).unwrap();
        assert!(!cc.is_shattered(BitSet::full(8)).unwrap());
        assert!(cc.is_shattered(BitSet::full(7)).is_ok());
    }

    #[test]
    fn restrict_and_union() {
        let cc = ConceptClass::new(3, vec![set(&[0, 2]), set(&[1]), set(&[2])]).unwrap();
        assert_eq!(cc.restrict(cc.domain()).unwrap(), cc);
        let r = cc.restrict(set(&[2])).unwrap();
        assert_eq!(r.domain_size(), 1);
        assert_eq!(r.len(), 2);

        let a = powerset_class(1).unwrap();
        let b = powerset_class(2).unwrap();
        let u = disjoint_union(&[a, b]).unwrap();
        assert_eq!(u.domain_size(), 3);
        // ∅ is shared: 2 + 4 - 1.
        assert_eq!(u.len(), 5);
    }

    #[test]
    fn text_roundtrip() {
        let cc = ConceptClass::new(3, vec![set(&[0, 2]), set(&[1]), BitSet::EMPTY]).unwrap();
        let text = cc.to_text();
        assert_eq!(text, "3 3\n000\n010\n101\n");
        assert_eq!(ConceptClass::parse(&text).unwrap(), cc);
        assert!(ConceptClass::parse("2 2\n01\n01\n").is_err());
        assert!(ConceptClass::parse("1 2\n012\n").is_err());
        assert!(ConceptClass::parse("1 2\n0x\n").is_err());
        assert!(ConceptClass::parse("2 2\n01\n").is_err());
    }
}
