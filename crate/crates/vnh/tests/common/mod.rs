#![allow(dead_code)]

//! Helpers shared by the integration test targets.

use std::sync::Arc;

use vnh::rng::Rng;
use vnh::{Alphabet, Perm, PermGroup, PrefixCode, Word};

pub fn ab(n: usize) -> Alphabet {
    Alphabet::new(n).unwrap()
}

pub fn w(s: &str, n: usize) -> Word {
    Word::parse(s, ab(n)).unwrap()
}

pub fn code(strs: &[&str], n: usize) -> PrefixCode {
    PrefixCode::new(ab(n), strs.iter().map(|s| w(s, n)).collect()).unwrap()
}

pub fn cyclic(n: usize, cycles: &[&[usize]]) -> PermGroup {
    let gen = Perm::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap();
    PermGroup::generate(n, vec![gen], vnh::perm::DEFAULT_CAP).unwrap()
}

pub fn sym(n: usize) -> Arc<PermGroup> {
    Arc::new(PermGroup::symmetric(n))
}

pub fn trivial(n: usize) -> Arc<PermGroup> {
    Arc::new(PermGroup::trivial(n))
}

/// Random complete prefix code under the anchor letter m-1, listed in
/// reverse dictionary order over the n-letter alphabet.
pub fn random_anchored_code(m: usize, n: usize, max_depth: usize, rng: &mut Rng) -> Vec<Word> {
    let small = ab(m);
    let mut inner = PrefixCode::root(small);
    for _ in 0..rng.below(6) {
        let expandable: Vec<usize> =
            (0..inner.len()).filter(|&i| inner.words()[i].len() < max_depth).collect();
        if expandable.is_empty() {
            break;
        }
        inner = inner.expand_at(expandable[rng.below(expandable.len())]);
    }
    let large = ab(n);
    let anchor = Word::from_letters(large, vec![m - 1]).unwrap();
    let mut out: Vec<Word> = inner
        .words()
        .iter()
        .map(|c| anchor.concat(&c.with_alphabet(large).unwrap()))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}
