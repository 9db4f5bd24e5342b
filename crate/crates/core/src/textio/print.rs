use num_traits::One;

use crate::frobenius::{FrobeniusSuperalgebra, TensorWord};
use crate::linear::{format_scalar, is_negative, Element};
use crate::symgroup::Permutation;

/// Renders a linear combination; `factors` lists the non-trivial factors of a
/// key in order, and the empty list stands for the unit.
pub fn format_linear<K: Ord + Clone>(e: &Element<K>, mut factors: impl FnMut(&K) -> Vec<String>) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (pos, (k, c)) in e.iter().enumerate() {
        let negative = is_negative(c);
        let abs = if negative { -c } else { c.clone() };
        match (pos, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let body = factors(k).join("*");
        if body.is_empty() {
            out.push_str(&format_scalar(&abs));
        } else if abs.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format_scalar(&abs));
            out.push('*');
            out.push_str(&body);
        }
    }
    out
}

/// Non-unit tokens of a pure tensor, leftmost strand first: `c[2]`, `c[1]`.
pub fn word_factors(alg: &FrobeniusSuperalgebra, word: &TensorWord) -> Vec<String> {
    (1..=word.len())
        .rev()
        .filter(|&s| word.get(s) != alg.unit())
        .map(|s| format!("{}[{s}]", alg.label(word.get(s))))
        .collect()
}

/// `x1*x2^3` style factors.
pub fn power_factors(symbol: &str, exps: &[u32]) -> Vec<String> {
    exps.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(j, &k)| if k == 1 { format!("{symbol}{}", j + 1) } else { format!("{symbol}{}^{k}", j + 1) })
        .collect()
}

/// Crossings along the canonical reduced word.
pub fn perm_factors(symbol: &str, w: &Permutation) -> Vec<String> {
    w.reduced_word().iter().map(|i| format!("{symbol}{i}")).collect()
}
