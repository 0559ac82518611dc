use delrecon::balls::{deletion_ball, dtn, insertion_ball};
use delrecon::codes::{enumerate_code, Codebook, CodeFamily};
use delrecon::confusability::classify_pair;
use delrecon::reconstruct::{decode, ReadSet};
use delrecon::Word;
use num_bigint::BigUint;
use proptest::prelude::*;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    (0..=max_len).prop_flat_map(|n| prop::collection::vec(0u8..2, n)).prop_map(|bits| Word::from_bits(&bits).unwrap())
}

fn pair(max_len: usize) -> impl Strategy<Value = (Word, Word)> {
    (1..=max_len).prop_flat_map(|n| {
        let bits = prop::collection::vec(0u8..2, n);
        (bits.clone(), bits).prop_map(|(a, b)| (Word::from_bits(&a).unwrap(), Word::from_bits(&b).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn display_round_trips(x in word(40)) {
        let text = x.to_string();
        prop_assert_eq!(Word::parse_allow_empty(&text).unwrap(), x);
    }

    #[test]
    fn deletion_and_insertion_are_dual(x in word(12), t in 0usize..4) {
        prop_assume!(t <= x.len());
        let ball = deletion_ball(&x, t).unwrap();
        prop_assert!(ball.len() as u64 <= u64::try_from(dtn(x.len() as i64, t as i64)).unwrap());
        for y in ball.iter() {
            prop_assert!(y.is_subsequence_of(&x));
            prop_assert!(insertion_ball(y, t).unwrap().contains(&x));
        }
    }

    #[test]
    fn classification_is_symmetric((x, y) in pair(14)) {
        prop_assume!(x != y);
        let a = classify_pair(&x, &y).unwrap();
        let b = classify_pair(&y, &x).unwrap();
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.intersection, b.intersection);
        prop_assert!(a.intersection_size_d1 <= 2);
    }

    #[test]
    fn vt_corrects_one_deletion(n in 2usize..11, pick in any::<prop::sample::Index>(), pos in any::<prop::sample::Index>()) {
        let code = enumerate_code(CodeFamily::Vt { residue: 0 }, n).unwrap();
        let x = code.words()[pick.index(code.len())];
        let read = x.delete(pos.index(n) + 1);
        let reads = ReadSet::new(n, 1, vec![read]).unwrap();
        prop_assert_eq!(decode(&code, &reads).unwrap(), x);
    }

    #[test]
    fn codebook_file_round_trips(words in prop::collection::btree_set(prop::collection::vec(0u8..2, 9), 1..20)) {
        let words: Vec<Word> = words.iter().map(|b| Word::from_bits(b).unwrap()).collect();
        let code = Codebook::explicit(9, words).unwrap();
        let back = Codebook::parse(&code.to_file_string()).unwrap();
        prop_assert_eq!(back.words(), code.words());
    }
}

#[test]
fn dtn_is_zero_outside_range() {
    assert_eq!(dtn(3, 4), BigUint::from(0u8));
    assert_eq!(dtn(3, -1), BigUint::from(0u8));
}
