//! Seeded random expressions, for property tests and exercises.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{render, RegexAst, ReservedSymbols};

/// Random tree of depth at most `max_depth` with leaves drawn from `alphabet`
/// (and occasionally epsilon or the empty language).
pub fn random_ast<R: Rng>(rng: &mut R, alphabet: &[char], max_depth: usize) -> RegexAst {
    if max_depth <= 1 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..20) {
            0 => RegexAst::EmptyLanguage,
            1 | 2 => RegexAst::Epsilon,
            _ => RegexAst::Symbol(alphabet[rng.gen_range(0..alphabet.len())]),
        };
    }
    let d = max_depth - 1;
    match rng.gen_range(0..20) {
        0..=6 => RegexAst::union(random_ast(rng, alphabet, d), random_ast(rng, alphabet, d)),
        7..=14 => RegexAst::concat(random_ast(rng, alphabet, d), random_ast(rng, alphabet, d)),
        _ => RegexAst::star(random_ast(rng, alphabet, d)),
    }
}

/// `count` rendered expressions, reproducible from `seed`.
pub fn random_corpus(seed: u64, count: usize, alphabet: &[char], max_depth: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reserved = ReservedSymbols::default();
    (0..count)
        .map(|_| render(&random_ast(&mut rng, alphabet, max_depth), &reserved))
        .collect()
}

/// Every string over `alphabet` of length at most `max_len`, shortlex order.
pub fn all_strings(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut level = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * alphabet.len());
        for w in &level {
            for &c in alphabet {
                let mut s = w.clone();
                s.push(c);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}
