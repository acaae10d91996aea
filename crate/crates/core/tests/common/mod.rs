use pillar_core::{BraidLetter, BraidWord};
use rand::Rng;

pub fn random_braid<R: Rng>(rng: &mut R, strands: u32, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| BraidLetter::new(rng.gen_range(1..strands), rng.gen_bool(0.5))).collect();
    BraidWord::new(strands, letters).unwrap()
}

fn relator(i: u32, e: bool) -> [BraidLetter; 6] {
    let (a, b) = (BraidLetter::new(i, e), BraidLetter::new(i + 1, e));
    [a, b, a, b.inverse(), a.inverse(), b.inverse()]
}

/// One move that preserves the braid: insert or delete a cancelling pair,
/// rewrite `s t s` as `t s t`, swap far letters, or insert a relation word.
/// Returns false when the chosen move found nowhere to apply.
pub fn apply_move<R: Rng>(rng: &mut R, strands: u32, letters: &mut Vec<BraidLetter>) -> bool {
    let n = letters.len();
    match rng.gen_range(0..5) {
        0 => {
            let l = BraidLetter::new(rng.gen_range(1..strands), rng.gen_bool(0.5));
            let at = rng.gen_range(0..=n);
            letters.splice(at..at, [l, l.inverse()]);
            true
        }
        1 => {
            let spots: Vec<usize> = (1..n).filter(|&k| letters[k] == letters[k - 1].inverse()).collect();
            if spots.is_empty() {
                return false;
            }
            let k = spots[rng.gen_range(0..spots.len())];
            letters.drain(k - 1..=k);
            true
        }
        2 => {
            let spots: Vec<usize> = (2..n)
                .filter(|&k| {
                    let (a, b, c) = (letters[k - 2], letters[k - 1], letters[k]);
                    a == c && a.inverse == b.inverse && a.index.abs_diff(b.index) == 1
                })
                .collect();
            if spots.is_empty() {
                return false;
            }
            let k = spots[rng.gen_range(0..spots.len())];
            let (a, b) = (letters[k - 2], letters[k - 1]);
            letters[k - 2] = b;
            letters[k - 1] = a;
            letters[k] = b;
            true
        }
        3 => {
            let spots: Vec<usize> = (1..n).filter(|&k| letters[k].index.abs_diff(letters[k - 1].index) >= 2).collect();
            if spots.is_empty() {
                return false;
            }
            let k = spots[rng.gen_range(0..spots.len())];
            letters.swap(k - 1, k);
            true
        }
        _ => {
            if strands < 3 {
                return false;
            }
            let i = rng.gen_range(1..strands - 1);
            let at = rng.gen_range(0..=n);
            letters.splice(at..at, relator(i, rng.gen_bool(0.5)));
            true
        }
    }
}

/// A random braid and a second word for the same braid reached by `moves`
/// successful equivalence moves.
pub fn equivalent_pair<R: Rng>(rng: &mut R, strands: u32, len: usize, moves: usize) -> (BraidWord, BraidWord) {
    let left = random_braid(rng, strands, len);
    let mut letters = left.letters().to_vec();
    let mut done = 0;
    let mut attempts = 0;
    while done < moves && attempts < moves * 20 {
        attempts += 1;
        if apply_move(rng, strands, &mut letters) {
            done += 1;
        }
    }
    (left, BraidWord::new(strands, letters).unwrap())
}
