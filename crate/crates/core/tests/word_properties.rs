use pillar_core::{Basis, Letter, Word};
use proptest::prelude::*;

fn raw_letters(basis: Basis, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    let rank = basis.rank();
    prop::collection::vec((0..rank, any::<bool>()), 0..max_len)
        .prop_map(move |v| v.into_iter().map(|(p, inv)| Letter::new(basis.symbol(p), inv)).collect())
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![(1u32..4).prop_map(Basis::Xy), (1u32..4).prop_map(Basis::Yz), (1u32..5).prop_map(Basis::Abstract)]
}

fn words(n: usize) -> impl Strategy<Value = (Basis, Vec<Word>)> {
    basis().prop_flat_map(move |b| {
        prop::collection::vec(raw_letters(b, 30).prop_map(move |l| Word::reduce(b, l).unwrap()), n)
            .prop_map(move |ws| (b, ws))
    })
}

fn naive_reduce(mut letters: Vec<Letter>) -> Vec<Letter> {
    loop {
        let hit = (1..letters.len()).find(|&k| letters[k] == letters[k - 1].inverse());
        match hit {
            Some(k) => {
                letters.drain(k - 1..=k);
            }
            None => return letters,
        }
    }
}

proptest! {
    #[test]
    fn reduction_is_idempotent_and_reduced((b, raw) in basis().prop_flat_map(|b| (Just(b), raw_letters(b, 60)))) {
        let w = Word::reduce(b, raw.iter().copied()).unwrap();
        prop_assert!(w.letters().windows(2).all(|p| p[1] != p[0].inverse()));
        prop_assert_eq!(&Word::reduce(b, w.letters().iter().copied()).unwrap(), &w);
    }

    #[test]
    fn reduction_is_confluent((b, raw, seed) in basis().prop_flat_map(|b| (Just(b), raw_letters(b, 60), any::<u64>()))) {
        // Cancelling pairs in a different order reaches the same normal form.
        let stack = Word::reduce(b, raw.iter().copied()).unwrap();
        let mut letters = raw.clone();
        let mut s = seed;
        loop {
            let spots: Vec<usize> = (1..letters.len()).filter(|&k| letters[k] == letters[k - 1].inverse()).collect();
            if spots.is_empty() {
                break;
            }
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let k = spots[(s >> 33) as usize % spots.len()];
            letters.drain(k - 1..=k);
        }
        prop_assert_eq!(stack.letters(), &letters[..]);
        prop_assert_eq!(stack.letters(), &naive_reduce(raw)[..]);
    }

    #[test]
    fn group_laws((b, ws) in words(3)) {
        let (u, v, w) = (&ws[0], &ws[1], &ws[2]);
        let e = Word::identity(b);
        prop_assert_eq!(&u.multiply(&e).unwrap(), u);
        prop_assert_eq!(&e.multiply(u).unwrap(), u);
        prop_assert!(u.multiply(&u.inverse()).unwrap().is_identity());
        prop_assert!(u.inverse().multiply(u).unwrap().is_identity());
        prop_assert_eq!(&u.inverse().inverse(), u);
        prop_assert_eq!(
            u.multiply(v).unwrap().multiply(w).unwrap(),
            u.multiply(&v.multiply(w).unwrap()).unwrap()
        );
        prop_assert_eq!(u.multiply(v).unwrap().inverse(), v.inverse().multiply(&u.inverse()).unwrap());
    }

    #[test]
    fn length_is_subadditive((_, ws) in words(2)) {
        let (u, v) = (&ws[0], &ws[1]);
        let uv = u.multiply(v).unwrap();
        prop_assert!(uv.len() <= u.len() + v.len());
        prop_assert_eq!((u.len() + v.len() - uv.len()) % 2, 0);
        prop_assert_eq!(u.inverse().len(), u.len());
    }

    #[test]
    fn text_round_trip((b, ws) in words(1)) {
        let w = &ws[0];
        prop_assert_eq!(&Word::parse(&w.to_string(), b).unwrap(), w);
        let json = serde_json::to_string(w).unwrap();
        prop_assert_eq!(json, format!("\"{}\"", w));
    }

    #[test]
    fn pow_adds_exponents((_, ws) in words(1), m in -4i64..5, n in -4i64..5) {
        let w = &ws[0];
        prop_assert_eq!(w.pow(m).multiply(&w.pow(n)).unwrap(), w.pow(m + n));
    }
}
