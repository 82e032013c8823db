//! Exact VC dimension, teaching dimensions and the recursive teaching
//! dimension, plus Sauer-Shelah bounds.

use crate::bitset::BitSet;
use crate::concept::{shatters, Concept, ConceptClass};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Largest domain handled by the subset-bitmap teaching-set search; bigger
/// domains fall back to enumerating candidate sets by size.
const BITMAP_DOMAIN_MAX: usize = 16;

/// VC dimension together with the lexicographically smallest shattered set
/// of that size.
pub fn vcd(cc: &ConceptClass) -> Result<(usize, BitSet)> {
    if cc.is_empty() {
        return Err(Error::EmptyClass);
    }
    let concepts = cc.concepts();
    // A shattered set needs 2^k distinct traces.
    let bound = usize::BITS as usize - 1 - cc.len().leading_zeros() as usize;
    // Every shattered k-set extends a shattered (k-1)-set by an element
    // above its maximum, so levels can be grown incrementally.
    let mut level = vec![BitSet::EMPTY];
    let mut k = 0;
    while k < bound {
        let mut next = Vec::new();
        for &s in &level {
            let above = cc.domain() - BitSet::full(s.last().map_or(0, |m| m + 1));
            for x in above.iter() {
                let t = s | BitSet::singleton(x);
                if shatters(concepts, t) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
        k += 1;
    }
    let witness = level
        .into_iter()
        .min_by(|a, b| a.cmp_lex(*b))
        .expect("level is nonempty");
    Ok((k, witness))
}

/// Smallest instance set on which `target` disagrees with every concept in
/// `others`. `others` must not contain `target`.
pub fn min_teaching_set(
    target: Concept,
    others: &[Concept],
    domain_size: usize,
    cap: usize,
) -> Result<BitSet> {
    let found = if domain_size <= BITMAP_DOMAIN_MAX {
        teaching_set_bitmap(target, others, domain_size)
    } else {
        teaching_set_search(target, others, domain_size, cap)?
    };
    match found {
        Some(d) if d.len() <= cap => Ok(d),
        Some(_) => Err(Error::BudgetExceeded {
            what: "teaching-set search",
            budget: cap as u64,
        }),
        None => Err(Error::Precondition(format!(
            "concept {target} appears among the concepts it must be distinguished from"
        ))),
    }
}

// Masks selecting, inside one 64-bit word of the subset bitmap, the
// positions whose index has bit `i` set.
const IN_WORD_BIT: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

const fn popcount_masks() -> [u64; 7] {
    let mut out = [0u64; 7];
    let mut b = 0;
    while b < 64 {
        out[(b as u64).count_ones() as usize] |= 1 << b;
        b += 1;
    }
    out
}

// Positions inside one word grouped by popcount of the position.
const WORD_POPCOUNT: [u64; 7] = popcount_masks();

/// Marks every instance set that fails to separate `target` from some other
/// concept (the subsets of their agreement sets), then returns the smallest
/// unmarked set.
fn teaching_set_bitmap(target: Concept, others: &[Concept], n: usize) -> Option<BitSet> {
    let domain = BitSet::full(n);
    let words = if n <= 6 { 1 } else { 1usize << (n - 6) };
    let mut bad = vec![0u64; words];
    for &c in others {
        let agree = (domain - (c ^ target)).bits() as usize;
        bad[agree >> 6] |= 1 << (agree & 63);
    }
    for i in 0..n.min(6) {
        let shift = 1 << i;
        for w in bad.iter_mut() {
            *w |= (*w & IN_WORD_BIT[i]) >> shift;
        }
    }
    for i in 6..n {
        let step = 1 << (i - 6);
        for w in 0..words {
            if w & step != 0 {
                bad[w ^ step] |= bad[w];
            }
        }
    }
    let valid = if n < 6 {
        (1u64 << (1 << n)) - 1
    } else {
        u64::MAX
    };
    let mut best: Option<(usize, usize)> = None;
    for (w, &word) in bad.iter().enumerate() {
        let good = !word & valid;
        if good == 0 {
            continue;
        }
        let base = w.count_ones() as usize;
        if best.is_some_and(|(k, _)| base >= k) {
            continue;
        }
        for (k, mask) in WORD_POPCOUNT.iter().enumerate() {
            let hit = good & mask;
            if hit != 0 {
                let size = base + k;
                if best.is_none_or(|(b, _)| size < b) {
                    best = Some((size, (w << 6) | hit.trailing_zeros() as usize));
                }
                break;
            }
        }
    }
    best.map(|(_, idx)| BitSet::from_bits(idx as u64))
}

/// Size-ordered search over candidate instances; instances that alone
/// separate `target` from some concept are forced into every answer.
fn teaching_set_search(
    target: Concept,
    others: &[Concept],
    domain_size: usize,
    cap: usize,
) -> Result<Option<BitSet>> {
    let domain = BitSet::full(domain_size);
    let mut diffs: Vec<BitSet> = others.iter().map(|&c| (c ^ target) & domain).collect();
    if diffs.iter().any(|d| d.is_empty()) {
        return Ok(None);
    }
    let forced = diffs
        .iter()
        .filter(|d| d.len() == 1)
        .fold(BitSet::EMPTY, |acc, &d| acc | d);
    diffs.retain(|d| !d.intersects(forced));
    diffs.sort_unstable_by_key(|d| (d.len(), d.bits()));
    diffs.dedup();
    if diffs.is_empty() {
        return Ok(Some(forced));
    }
    let cand = diffs.iter().fold(BitSet::EMPTY, |acc, &d| acc | d);
    for k in 1..=cand.len() {
        if forced.len() + k > cap {
            return Err(Error::BudgetExceeded {
                what: "teaching-set search",
                budget: cap as u64,
            });
        }
        if let Some(extra) = cand
            .k_subsets(k)
            .find(|&d| diffs.iter().all(|&x| x.intersects(d)))
        {
            return Ok(Some(forced | extra));
        }
    }
    unreachable!("the union of all differences separates every concept")
}

fn others_of(concepts: &[Concept], skip: usize) -> Vec<Concept> {
    concepts
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != skip)
        .map(|(_, &c)| c)
        .collect()
}

/// TD(C, 𝒞) with a minimum teaching set.
pub fn td_of(cc: &ConceptClass, index: usize, limits: &Limits) -> Result<(usize, BitSet)> {
    let c = cc.concept(index)?;
    let others = others_of(cc.concepts(), index);
    let d = min_teaching_set(c, &others, cc.domain_size(), limits.teaching_set_cap)?;
    Ok((d.len(), d))
}

fn all_td(cc: &ConceptClass, limits: &Limits) -> Result<Vec<usize>> {
    if cc.is_empty() {
        return Err(Error::EmptyClass);
    }
    (0..cc.len())
        .map(|i| td_of(cc, i, limits).map(|(k, _)| k))
        .collect()
}

pub fn td_min(cc: &ConceptClass, limits: &Limits) -> Result<usize> {
    Ok(all_td(cc, limits)?.into_iter().min().expect("nonempty"))
}

/// TD(𝒞), the classical teaching dimension.
pub fn td_max(cc: &ConceptClass, limits: &Limits) -> Result<usize> {
    Ok(all_td(cc, limits)?.into_iter().max().expect("nonempty"))
}

/// One round of peeling: the concepts that were easiest to teach within the
/// residual class, and a minimum teaching set for each of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RtdLevel {
    /// Concept indices in the original class, ascending.
    pub concepts: Vec<usize>,
    pub td_min: usize,
    /// `teaching_sets[k]` teaches `concepts[k]` against this level's
    /// residual class.
    pub teaching_sets: Vec<BitSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RtdCertificate {
    pub levels: Vec<RtdLevel>,
    pub rtd: usize,
}

impl RtdCertificate {
    /// Level index of every concept.
    pub fn level_of(&self, class_len: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; class_len];
        for (l, level) in self.levels.iter().enumerate() {
            for &i in &level.concepts {
                out[i] = l;
            }
        }
        out
    }
}

/// Recursive teaching dimension by literal peeling: repeatedly remove every
/// concept whose TD within the remaining class is minimal.
pub fn rtd(cc: &ConceptClass, limits: &Limits) -> Result<RtdCertificate> {
    if cc.is_empty() {
        return Err(Error::EmptyClass);
    }
    let mut remaining: Vec<usize> = (0..cc.len()).collect();
    let mut levels = Vec::new();
    let mut buf = Vec::with_capacity(cc.len());
    while !remaining.is_empty() {
        let mut scored = Vec::with_capacity(remaining.len());
        for (pos, &i) in remaining.iter().enumerate() {
            buf.clear();
            buf.extend(
                remaining
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != pos)
                    .map(|(_, &j)| cc.concepts()[j]),
            );
            let d = min_teaching_set(
                cc.concepts()[i],
                &buf,
                cc.domain_size(),
                limits.teaching_set_cap,
            )?;
            scored.push((i, d));
        }
        let min = scored.iter().map(|(_, d)| d.len()).min().expect("nonempty");
        let (taken, kept): (Vec<_>, Vec<_>) = scored.into_iter().partition(|(_, d)| d.len() == min);
        levels.push(RtdLevel {
            concepts: taken.iter().map(|(i, _)| *i).collect(),
            td_min: min,
            teaching_sets: taken.iter().map(|(_, d)| *d).collect(),
        });
        remaining = kept.into_iter().map(|(i, _)| i).collect();
    }
    let rtd = levels.iter().map(|l| l.td_min).max().expect("nonempty");
    Ok(RtdCertificate { levels, rtd })
}

/// Recomputes every level of a certificate from scratch: the levels must
/// partition the class, each recorded teaching set must teach its concept
/// within the residual class, and each level must hold exactly the
/// minimisers.
pub fn check_rtd_certificate(
    cc: &ConceptClass,
    cert: &RtdCertificate,
    limits: &Limits,
) -> Result<bool> {
    let mut seen = vec![false; cc.len()];
    for level in &cert.levels {
        for &i in &level.concepts {
            if i >= cc.len() || std::mem::replace(&mut seen[i], true) {
                return Ok(false);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Ok(false);
    }
    let mut residual: Vec<usize> = (0..cc.len()).collect();
    for level in &cert.levels {
        let sub = cc.subclass(&residual)?;
        let tds = all_td(&sub, limits)?;
        let min = *tds.iter().min().expect("nonempty");
        if min != level.td_min {
            return Ok(false);
        }
        let minimisers: Vec<usize> = residual
            .iter()
            .zip(&tds)
            .filter(|(_, &t)| t == min)
            .map(|(&i, _)| i)
            .collect();
        if minimisers != level.concepts {
            return Ok(false);
        }
        for (&i, &d) in level.concepts.iter().zip(&level.teaching_sets) {
            let c = cc.concepts()[i];
            let sample = crate::concept::Sample::of_concept(c, d);
            let vs = sub.version_space(sample);
            if d.len() != min || vs.len() != 1 || sub.concepts()[vs[0]] != c {
                return Ok(false);
            }
        }
        residual.retain(|i| !level.concepts.contains(i));
    }
    Ok(cert.rtd == cert.levels.iter().map(|l| l.td_min).max().unwrap_or(0))
}

/// TD_min of a subclass, which lower-bounds RTD of the whole class.
pub fn rtd_subclass_lower_bound(
    cc: &ConceptClass,
    subclass: &[usize],
    limits: &Limits,
) -> Result<usize> {
    td_min(&cc.subclass(subclass)?, limits)
}

/// Largest class for which [`max_subclass_td_min`] enumerates all subclasses.
pub const FULL_SUBCLASS_MAX: usize = 12;

/// max over all nonempty subclasses of TD_min, by exhaustive enumeration.
/// Equal to RTD; limited to classes of at most [`FULL_SUBCLASS_MAX`] concepts.
pub fn max_subclass_td_min(cc: &ConceptClass, limits: &Limits) -> Result<usize> {
    let m = cc.len();
    if m == 0 {
        return Err(Error::EmptyClass);
    }
    if m > FULL_SUBCLASS_MAX {
        return Err(Error::DomainTooLarge {
            size: m,
            limit: FULL_SUBCLASS_MAX,
        });
    }
    let mut best = 0;
    let mut members = Vec::with_capacity(m);
    for mask in 1u64..(1u64 << m) {
        members.clear();
        members.extend(BitSet::from_bits(mask).iter().map(|i| cc.concepts()[i]));
        let mut sub_min = usize::MAX;
        for (p, &c) in members.iter().enumerate() {
            let others = others_of(&members, p);
            let d = min_teaching_set(c, &others, cc.domain_size(), limits.teaching_set_cap)?;
            sub_min = sub_min.min(d.len());
            if sub_min <= best {
                break;
            }
        }
        best = best.max(sub_min);
    }
    Ok(best)
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Σ_{i=0}^{d} C(domain_size, i).
pub fn sauer_bound(domain_size: usize, d: usize) -> u128 {
    (0..=d as u64)
        .map(|i| binomial(domain_size as u64, i))
        .sum()
}

/// The largest `d + 1` such that `|𝒞|` exceeds the Sauer bound for `d`,
/// i.e. a lower bound on both VCD and RTD. `None` when `|𝒞| <= 1`.
pub fn sauer_rtd_implication(cc: &ConceptClass) -> Option<usize> {
    let m = cc.len() as u128;
    (0..=cc.domain_size())
        .take_while(|&d| m > sauer_bound(cc.domain_size(), d))
        .last()
        .map(|d| d + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concept::powerset_class;

    fn set(xs: &[usize]) -> BitSet {
        xs.iter().copied().collect()
    }

    /// Brute-force minimum teaching set: every subset of the domain in
    /// order of size.
    fn brute_td(cc: &ConceptClass, i: usize) -> usize {
        let c = cc.concepts()[i];
        (0..=cc.domain_size())
            .find(|&k| {
                cc.domain().k_subsets(k).any(|d| {
                    cc.concepts()
                        .iter()
                        .enumerate()
                        .all(|(j, &o)| j == i || (o ^ c).intersects(d))
                })
            })
            .unwrap()
    }

    #[test]
    fn powerset_dimensions() {
        let limits = Limits::default();
        for n in 0..=4 {
            let cc = powerset_class(n).unwrap();
            assert_eq!(vcd(&cc).unwrap(), (n, BitSet::full(n)));
            assert_eq!(td_min(&cc, &limits).unwrap(), n);
            assert_eq!(rtd(&cc, &limits).unwrap().rtd, n);
        }
        let p3 = powerset_class(3).unwrap();
        for i in 0..p3.len() {
            assert_eq!(td_of(&p3, i, &limits).unwrap().0, 3);
        }
    }

    #[test]
    fn singleton_class_has_td_zero() {
        let cc = ConceptClass::new(3, vec![set(&[1])]).unwrap();
        assert_eq!(
            td_of(&cc, 0, &Limits::default()).unwrap(),
            (0, BitSet::EMPTY)
        );
        assert_eq!(vcd(&cc).unwrap().0, 0);
    }

    #[test]
    fn bitmap_and_search_agree_with_brute_force() {
        // Star concepts of the path 0-1-2: {0},{1},{2},{0,1},{1,2},{0,1,2}.
        let cc = ConceptClass::new(
            3,
            vec![
                set(&[0]),
                set(&[1]),
                set(&[2]),
                set(&[0, 1]),
                set(&[1, 2]),
                set(&[0, 1, 2]),
            ],
        )
        .unwrap();
        for i in 0..cc.len() {
            let c = cc.concepts()[i];
            let others = others_of(cc.concepts(), i);
            let a = teaching_set_bitmap(c, &others, 3).unwrap();
            let b = teaching_set_search(c, &others, 3, 12).unwrap().unwrap();
            assert_eq!(a.len(), brute_td(&cc, i));
            assert_eq!(b.len(), brute_td(&cc, i));
        }
        let full = cc.index_of(set(&[0, 1, 2])).unwrap();
        assert_eq!(td_of(&cc, full, &Limits::default()).unwrap().0, 2);
    }

    #[test]
    fn teaching_set_cap_is_enforced() {
        let limits = Limits {
            teaching_set_cap: 2,
            ..Limits::default()
        };
        let cc = powerset_class(3).unwrap();
        assert!(matches!(
            td_of(&cc, 0, &limits),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn sauer_values() {
        assert_eq!(sauer_bound(4, 2), 11);
        assert_eq!(sauer_bound(7, 0), 1);
        assert_eq!(sauer_bound(7, 7), 128);
        assert_eq!(sauer_bound(64, 64), 1u128 << 64);
        let p = powerset_class(3).unwrap();
        assert_eq!(sauer_rtd_implication(&p), Some(3));
        let one = ConceptClass::new(2, vec![set(&[0])]).unwrap();
        assert_eq!(sauer_rtd_implication(&one), None);
    }

    #[test]
    fn certificate_roundtrip() {
        let limits = Limits::default();
        let cc = ConceptClass::new(
            3,
            vec![
                BitSet::EMPTY,
                set(&[0]),
                set(&[0, 1]),
                set(&[0, 1, 2]),
                set(&[2]),
            ],
        )
        .unwrap();
        let cert = rtd(&cc, &limits).unwrap();
        assert!(check_rtd_certificate(&cc, &cert, &limits).unwrap());
        assert_eq!(cert.rtd, max_subclass_td_min(&cc, &limits).unwrap());
        let mut broken = cert.clone();
        broken.levels[0].td_min += 1;
        assert!(!check_rtd_certificate(&cc, &broken, &limits).unwrap());
    }

    #[test]
    fn empty_class_is_rejected() {
        let cc = ConceptClass::new(2, vec![]).unwrap();
        assert!(matches!(vcd(&cc), Err(Error::EmptyClass)));
        assert!(matches!(
            rtd(&cc, &Limits::default()),
            Err(Error::EmptyClass)
        ));
    }
}
