//! Classification of word pairs by the size of their single-deletion ball
//! intersection, with structural witnesses, and the closed-form read bounds
//! for `t >= 2` deletions.
//!
//! The brute-force intersection is always computed first; the structural
//! characterizations are then checked against it. A mandated witness that
//! cannot be found is reported as [`Error::Inconsistency`].

use num_bigint::BigUint;
use serde::Serialize;

use crate::balls::{ball_intersection, deletion_ball, dtn, nu_space, WordSet};
use crate::error::{Error, Result};
use crate::words::{hamming_distance, is_alternating, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PairKind {
    Disjoint,
    Hamming1,
    TypeB,
    TypeA,
}

/// `x = u a v`, `y = u ā v` with `a` alternating and `|a| >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeAWitness {
    pub u: Word,
    pub a: Word,
    pub v: Word,
}

impl TypeAWitness {
    pub fn recompose(&self) -> (Word, Word) {
        let x = self.u.concat(&self.a).and_then(|p| p.concat(&self.v)).expect("fits");
        let y = self.u.concat(&self.a.complement()).and_then(|p| p.concat(&self.v)).expect("fits");
        (x, y)
    }
}

/// Which word of the pair has the shape `u a ā v b w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    XFirst,
    YFirst,
}

/// `u a ā v b w` and `u ā v b b̄ w` for single symbols `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeBWitness {
    pub u: Word,
    pub a: u8,
    pub v: Word,
    pub b: u8,
    pub w: Word,
    pub orientation: Orientation,
}

impl TypeBWitness {
    /// The pair `(u a ā v b w, u ā v b b̄ w)`, i.e. the longer-prefix word first.
    pub fn shapes(&self) -> (Word, Word) {
        let bit = |b: u8| Word::from_raw(u64::from(b), 1);
        let join = |parts: &[Word]| parts.iter().fold(Word::EMPTY, |acc, p| acc.concat(p).expect("fits"));
        let first = join(&[self.u, bit(self.a), bit(1 - self.a), self.v, bit(self.b), self.w]);
        let second = join(&[self.u, bit(1 - self.a), self.v, bit(self.b), bit(1 - self.b), self.w]);
        (first, second)
    }

    /// `(x, y)` respecting the orientation.
    pub fn recompose(&self) -> (Word, Word) {
        let (first, second) = self.shapes();
        match self.orientation {
            Orientation::XFirst => (first, second),
            Orientation::YFirst => (second, first),
        }
    }

    /// The unique common single-deletion result `u ā v b w`.
    pub fn common_word(&self) -> Word {
        let bit = |b: u8| Word::from_raw(u64::from(b), 1);
        [self.u, bit(1 - self.a), self.v, bit(self.b), self.w]
            .iter()
            .fold(Word::EMPTY, |acc, p| acc.concat(p).expect("fits"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    TypeA(TypeAWitness),
    TypeB(TypeBWitness),
    /// 1-based position of the single differing symbol.
    Hamming1 { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    #[serde(rename = "size")]
    pub intersection_size_d1: usize,
    pub kind: PairKind,
    pub witness: Option<Witness>,
    pub intersection: WordSet,
}

fn check_pair(x: &Word, y: &Word) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    if x == y {
        return Err(Error::IdenticalWords);
    }
    Ok(())
}

/// Offsets `(first, last)` (0-based, inclusive) of the differing symbols.
fn differing_span(x: &Word, y: &Word) -> (usize, usize) {
    let n = x.len();
    let diff = x.bits() ^ y.bits();
    debug_assert!(diff != 0);
    let first = n - 1 - (63 - diff.leading_zeros() as usize);
    let last = n - 1 - diff.trailing_zeros() as usize;
    (first, last)
}

/// Finds `x = u a v`, `y = u ā v` with `a` alternating, `|a| >= 2`.
///
/// Since `a` and `ā` differ everywhere, `u` and `v` are forced to be the
/// common prefix and suffix, so the decomposition is unique when it exists.
pub fn type_a_decompose(x: &Word, y: &Word) -> Result<Option<TypeAWitness>> {
    check_pair(x, y)?;
    let (first, last) = differing_span(x, y);
    let span = last - first + 1;
    let diff = (x.bits() ^ y.bits()) >> (x.len() - 1 - last);
    if span < 2 || diff.count_ones() as usize != span {
        return Ok(None);
    }
    let a = x.subword(first, last + 1);
    if !is_alternating(&a) {
        return Ok(None);
    }
    Ok(Some(TypeAWitness { u: x.subword(0, first), a, v: x.subword(last + 1, x.len()) }))
}

fn common_prefix_len(x: &Word, y: &Word) -> usize {
    let diff = x.bits() ^ y.bits();
    if diff == 0 {
        x.len()
    } else {
        differing_span(x, y).0
    }
}

fn common_suffix_len(x: &Word, y: &Word) -> usize {
    let diff = x.bits() ^ y.bits();
    if diff == 0 {
        x.len()
    } else {
        x.len() - 1 - differing_span(x, y).1
    }
}

/// Finds `x = u a ā v b w`, `y = u ā v b b̄ w` (or the same with `x` and `y`
/// swapped). Ties are broken by shortest `u`, then shortest `v`, then
/// `x`-first before `y`-first.
pub fn type_b_decompose(x: &Word, y: &Word) -> Result<Option<TypeBWitness>> {
    check_pair(x, y)?;
    let n = x.len();
    if n < 3 {
        return Ok(None);
    }
    let prefix = common_prefix_len(x, y).min(n - 3);
    let suffix = common_suffix_len(x, y);
    for ulen in 0..=prefix {
        for vlen in 0..=n - 3 - ulen {
            let wlen = n - 3 - ulen - vlen;
            if wlen > suffix {
                continue;
            }
            let span = vlen + 3;
            for orientation in [Orientation::XFirst, Orientation::YFirst] {
                let (long, short) = match orientation {
                    Orientation::XFirst => (x, y),
                    Orientation::YFirst => (y, x),
                };
                let mx = long.subword(ulen, ulen + span);
                let my = short.subword(ulen, ulen + span);
                if mx.bit(1) != mx.bit(2)
                    && mx.subword(1, span) == my.subword(0, span - 1)
                    && my.bit(span) != my.bit(span - 1)
                {
                    return Ok(Some(TypeBWitness {
                        u: long.subword(0, ulen),
                        a: mx.bit(1),
                        v: mx.subword(2, span - 1),
                        b: mx.bit(span),
                        w: long.subword(ulen + span, n),
                        orientation,
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn hamming1_position(x: &Word, y: &Word) -> Option<usize> {
    let diff = x.bits() ^ y.bits();
    (diff.count_ones() == 1).then(|| x.len() - diff.trailing_zeros() as usize)
}

/// Classifies a pair from the exact single-deletion intersection, attaching
/// the witness its size implies.
pub fn classify_pair(x: &Word, y: &Word) -> Result<PairClassification> {
    check_pair(x, y)?;
    let intersection = ball_intersection(x, y, 1)?;
    let size = intersection.len();
    let inconsistency = |detail: &str| Error::Inconsistency { x: *x, y: *y, detail: detail.to_string() };
    let (kind, witness) = match size {
        0 => (PairKind::Disjoint, None),
        1 => {
            if let Some(position) = hamming1_position(x, y) {
                (PairKind::Hamming1, Some(Witness::Hamming1 { position }))
            } else {
                let wb = type_b_decompose(x, y)?
                    .ok_or_else(|| inconsistency("single common subsequence but no Hamming-1 or Type-B form"))?;
                (PairKind::TypeB, Some(Witness::TypeB(wb)))
            }
        }
        2 => {
            let wa = type_a_decompose(x, y)?
                .ok_or_else(|| inconsistency("two common subsequences but no Type-A form"))?;
            (PairKind::TypeA, Some(Witness::TypeA(wa)))
        }
        _ => return Err(inconsistency("single-deletion balls share more than two words")),
    };
    Ok(PairClassification { intersection_size_d1: size, kind, witness, intersection })
}

/// Classification from witness search alone, without materializing any ball.
/// The intersection is reconstructed from the witness.
pub fn classify_pair_structural(x: &Word, y: &Word) -> Result<PairClassification> {
    check_pair(x, y)?;
    let n = x.len();
    if let Some(wa) = type_a_decompose(x, y)? {
        // u a_1..a_{L-1} v and u a_2..a_L v
        let l = wa.a.len();
        let left = wa.u.concat(&wa.a.subword(0, l - 1))?.concat(&wa.v)?;
        let right = wa.u.concat(&wa.a.subword(1, l))?.concat(&wa.v)?;
        let intersection = WordSet::from_words(n - 1, [left, right])?;
        return Ok(PairClassification {
            intersection_size_d1: 2,
            kind: PairKind::TypeA,
            witness: Some(Witness::TypeA(wa)),
            intersection,
        });
    }
    if let Some(position) = hamming1_position(x, y) {
        let intersection = WordSet::from_words(n - 1, [x.delete(position)])?;
        return Ok(PairClassification {
            intersection_size_d1: 1,
            kind: PairKind::Hamming1,
            witness: Some(Witness::Hamming1 { position }),
            intersection,
        });
    }
    if let Some(wb) = type_b_decompose(x, y)? {
        let intersection = WordSet::from_words(n - 1, [wb.common_word()])?;
        return Ok(PairClassification {
            intersection_size_d1: 1,
            kind: PairKind::TypeB,
            witness: Some(Witness::TypeB(wb)),
            intersection,
        });
    }
    Ok(PairClassification {
        intersection_size_d1: 0,
        kind: PairKind::Disjoint,
        witness: None,
        intersection: WordSet::empty(n - 1),
    })
}

/// For a Hamming-distance-one pair `x = u c v`, `y = u c̄ v`, returns
/// `D_{t-1}(u v)`, which equals `D_t(x) ∩ D_t(y)`.
pub fn hamming1_intersection(x: &Word, y: &Word, t: usize) -> Result<WordSet> {
    if hamming_distance(x, y)? != 1 {
        return Err(Error::Precondition("words must have Hamming distance one".into()));
    }
    if t < 1 || t > x.len() {
        return Err(Error::DeletionsOutOfRange { deletions: t as i64, len: x.len() });
    }
    let position = hamming1_position(x, y).expect("distance one");
    deletion_ball(&x.delete(position), t - 1)
}

/// Decomposition `D_2(x) ∩ D_2(y) = D_1(z) ∪ T` for a Type-B pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T2Structure {
    pub z: Word,
    pub extra: WordSet,
    pub intersection: WordSet,
}

/// For a Type-B pair with single-deletion intersection `{z}`, returns `z` and
/// `T = (D_2(x) ∩ D_2(y)) \ D_1(z)`. Fails with [`Error::Inconsistency`] if
/// `|T| > 2` or `z` is alternating.
pub fn t2_structure(x: &Word, y: &Word) -> Result<T2Structure> {
    let class = classify_pair(x, y)?;
    if class.kind != PairKind::TypeB {
        return Err(Error::Precondition(format!("pair must be Type-B, got {:?}", class.kind)));
    }
    let z = class.intersection.as_slice()[0];
    let intersection = ball_intersection(x, y, 2)?;
    let extra = intersection.difference(&deletion_ball(&z, 1)?);
    if extra.len() > 2 {
        return Err(Error::Inconsistency { x: *x, y: *y, detail: format!("|T| = {} > 2", extra.len()) });
    }
    if is_alternating(&z) {
        return Err(Error::Inconsistency { x: *x, y: *y, detail: format!("common word {z} is alternating") });
    }
    Ok(T2Structure { z, extra, intersection })
}

/// `N_t^(1)(n)`: bound on `|D_t(x) ∩ D_t(y)|` when the single-deletion balls
/// are disjoint. Requires `n >= 7`, `t >= 2`.
pub fn n1_bound(n: i64, t: i64) -> Result<BigUint> {
    if n < 7 || t < 2 {
        return Err(Error::InvalidParameter(format!("N1 needs n >= 7 and t >= 2, got n={n} t={t}")));
    }
    let two = 2u32;
    Ok(dtn(n - 4, t - 2) * two
        + dtn(n - 5, t - 2) * two
        + dtn(n - 7, t - 2) * two
        + dtn(n - 6, t - 3)
        + dtn(n - 7, t - 3))
}

/// `N_t^(2)(n) = D_{t-1}(n-1) + ν_{t-1}(n-3)`: bound when the single-deletion
/// balls share exactly one word. Requires `n >= 6`, `t >= 2`.
pub fn n2_bound(n: i64, t: i64) -> Result<BigUint> {
    if n < 6 || t < 2 {
        return Err(Error::InvalidParameter(format!("N2 needs n >= 6 and t >= 2, got n={n} t={t}")));
    }
    Ok(dtn(n - 1, t - 1) + nu_space(n - 3, t - 1))
}

/// Reads sufficient for a constrained shifted VT code at two deletions:
/// `max{n - ceil((n-1)/P) + 3, 7}`. Requires `P` even with `0 < P <= n`.
pub fn np_bound(n: u64, p: u64) -> Result<u64> {
    if p == 0 || p % 2 == 1 || p > n {
        return Err(Error::InvalidParameter(format!("P must be even with 0 < P <= n, got P={p} n={n}")));
    }
    Ok((n - (n - 1).div_ceil(p) + 3).max(7))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionBounds {
    /// Absent when `n < 7`.
    #[serde(serialize_with = "crate::serde_big::option_as_string")]
    pub n1: Option<BigUint>,
    #[serde(serialize_with = "crate::serde_big::as_string")]
    pub n2: BigUint,
    /// Present only when `P` is given and `t = 2`.
    pub np: Option<u64>,
}

pub fn reconstruction_bounds(n: i64, t: i64, period: Option<u64>) -> Result<ReconstructionBounds> {
    let n2 = n2_bound(n, t)?;
    let n1 = if n >= 7 { Some(n1_bound(n, t)?) } else { None };
    let np = match period {
        Some(p) if t == 2 => Some(np_bound(n as u64, p)?),
        _ => None,
    };
    Ok(ReconstructionBounds { n1, n2, np })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::all_words;

    fn w(s: &str) -> Word {
        Word::parse_allow_empty(s).unwrap()
    }

    #[test]
    fn type_a_examples() {
        let wa = type_a_decompose(&w("0010"), &w("0100")).unwrap().unwrap();
        assert_eq!((wa.u, wa.a, wa.v), (w("0"), w("01"), w("0")));
        let wa = type_a_decompose(&w("01"), &w("10")).unwrap().unwrap();
        assert_eq!((wa.u, wa.a, wa.v), (w(""), w("01"), w("")));
        assert_eq!(type_a_decompose(&w("000"), &w("111")).unwrap(), None);
        assert_eq!(type_a_decompose(&w("01"), &w("01")), Err(Error::IdenticalWords));
        assert!(matches!(type_a_decompose(&w("01"), &w("011")), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn type_b_examples() {
        let wb = type_b_decompose(&w("011"), &w("110")).unwrap().unwrap();
        assert_eq!(
            wb,
            TypeBWitness { u: w(""), a: 0, v: w(""), b: 1, w: w(""), orientation: Orientation::XFirst }
        );
        assert_eq!(wb.recompose(), (w("011"), w("110")));
        let swapped = type_b_decompose(&w("110"), &w("011")).unwrap().unwrap();
        assert_eq!(swapped.orientation, Orientation::YFirst);
        assert_eq!(swapped.recompose(), (w("110"), w("011")));
        assert_eq!(type_b_decompose(&w("01"), &w("10")).unwrap(), None);
    }

    #[test]
    fn classify_examples() {
        let c = classify_pair(&w("0010"), &w("0100")).unwrap();
        assert_eq!((c.intersection_size_d1, c.kind), (2, PairKind::TypeA));
        let c = classify_pair(&w("011"), &w("110")).unwrap();
        assert_eq!((c.intersection_size_d1, c.kind), (1, PairKind::TypeB));
        assert_eq!(c.intersection.as_slice(), &[w("11")]);
        let c = classify_pair(&w("101"), &w("100")).unwrap();
        assert_eq!(c.kind, PairKind::Hamming1);
        assert_eq!(c.witness, Some(Witness::Hamming1 { position: 3 }));
        let c = classify_pair(&w("000"), &w("111")).unwrap();
        assert_eq!((c.intersection_size_d1, c.kind, c.witness), (0, PairKind::Disjoint, None));
    }

    #[test]
    fn hamming1_examples() {
        let s = |set: WordSet| set.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(s(hamming1_intersection(&w("101"), &w("100"), 1).unwrap()), ["10"]);
        assert_eq!(s(hamming1_intersection(&w("0110"), &w("0100"), 1).unwrap()), ["010"]);
        assert_eq!(s(hamming1_intersection(&w("0110"), &w("0100"), 2).unwrap()), ["00", "01", "10"]);
        assert!(matches!(hamming1_intersection(&w("011"), &w("110"), 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn t2_examples() {
        let s = t2_structure(&w("011"), &w("110")).unwrap();
        assert_eq!(s.z, w("11"));
        assert_eq!(s.extra.as_slice(), &[w("0")]);
        assert!(matches!(t2_structure(&w("101"), &w("100")), Err(Error::Precondition(_))));
    }

    #[test]
    fn t2_sweep_over_base_shapes() {
        // x = a ā v b, y = ā v b b̄ for all |v| <= 8
        for vlen in 0..=8 {
            for v in all_words(vlen) {
                for a in 0..=1u8 {
                    for b in 0..=1u8 {
                        let wb = TypeBWitness { u: Word::EMPTY, a, v, b, w: Word::EMPTY, orientation: Orientation::XFirst };
                        let (x, y) = wb.recompose();
                        if classify_pair(&x, &y).unwrap().kind == PairKind::TypeB {
                            let s = t2_structure(&x, &y).unwrap();
                            assert!(s.extra.len() <= 2);
                            assert!(s.extra.intersection(&deletion_ball(&s.z, 1).unwrap()).is_empty());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn structural_and_brute_force_agree() {
        for n in 1..=9 {
            let words: Vec<Word> = all_words(n).collect();
            for (i, x) in words.iter().enumerate() {
                for y in &words[i + 1..] {
                    let slow = classify_pair(x, y).unwrap();
                    let fast = classify_pair_structural(x, y).unwrap();
                    assert_eq!(slow, fast, "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn witnesses_recompose() {
        for n in 2..=8 {
            let words: Vec<Word> = all_words(n).collect();
            for (i, x) in words.iter().enumerate() {
                for y in &words[i + 1..] {
                    match classify_pair(x, y).unwrap().witness {
                        Some(Witness::TypeA(wa)) => assert_eq!(wa.recompose(), (*x, *y)),
                        Some(Witness::TypeB(wb)) => assert_eq!(wb.recompose(), (*x, *y)),
                        _ => {}
                    }
                }
            }
        }
    }

    #[test]
    fn bound_formulas() {
        for n in 7..40 {
            assert_eq!(n1_bound(n, 2).unwrap(), BigUint::from(6u32));
        }
        for n in 6..40 {
            assert_eq!(n2_bound(n, 2).unwrap(), BigUint::from((n + 1) as u64));
        }
        assert_eq!(np_bound(127, 6).unwrap(), 109);
        assert_eq!(np_bound(255, 10).unwrap(), 232);
        assert!(np_bound(10, 5).is_err());
        assert!(np_bound(10, 12).is_err());
        assert!(n1_bound(6, 2).is_err());
        assert!(n2_bound(5, 2).is_err());
        let b = reconstruction_bounds(127, 2, Some(6)).unwrap();
        assert_eq!(b.np, Some(109));
        assert_eq!(b.n1, Some(BigUint::from(6u32)));
        assert_eq!(b.n2, BigUint::from(128u32));
        assert_eq!(reconstruction_bounds(6, 3, Some(4)).unwrap().np, None);
        assert_eq!(reconstruction_bounds(6, 2, None).unwrap().n1, None);
    }
}
