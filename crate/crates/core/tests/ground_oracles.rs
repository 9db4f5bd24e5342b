use std::collections::BTreeMap;

use oracle::*;
use frobnil::frobenius::{Builtin, FrobeniusSuperalgebra};
use frobnil::linear::{int, Element, Scalar};
use frobnil::nilcoxeter::NilCoxeter;
use frobnil::nilhecke::NilHecke;
use frobnil::polynomial::{exponent_vectors, Polynomial};
use frobnil::symgroup::Permutation;
use frobnil::textio;

mod oracle {
    use super::*;

    pub type Poly = BTreeMap<Vec<u32>, Scalar>;

    pub fn add(p: &mut Poly, k: Vec<u32>, c: Scalar) {
        let e = p.entry(k.clone()).or_insert_with(|| int(0));
        *e += c;
        if *e == int(0) {
            p.remove(&k);
        }
    }

    /// `(f - s_i f) / (x_{i+1} - x_i)` on commuting variables.
    pub fn ddiff(i: usize, f: &Poly) -> Poly {
        let mut out = Poly::new();
        for (k, c) in f {
            let (a, b) = (k[i - 1], k[i]);
            let (lo, hi, sign) = if a < b { (a, b, int(1)) } else { (b, a, int(-1)) };
            for j in 0..hi - lo {
                let mut m = k.clone();
                m[i - 1] = lo + (hi - lo - 1 - j);
                m[i] = lo + j;
                add(&mut out, m, c.clone() * sign.clone());
            }
        }
        out
    }

    pub fn inversions(w: &Permutation) -> usize {
        let l = w.one_line();
        (0..l.len()).flat_map(|i| (i + 1..l.len()).map(move |j| (i, j))).filter(|&(i, j)| l[i] > l[j]).count()
    }
}

fn ground_pol(n: usize) -> Polynomial {
    Polynomial::new(FrobeniusSuperalgebra::builtin(Builtin::Ground), n).unwrap()
}

fn as_poly(pol: &Polynomial, text: &str) -> Poly {
    let e = textio::read(pol, text).unwrap();
    let mut out = Poly::new();
    for (k, c) in &e {
        add(&mut out, k.exps.clone(), c.clone());
    }
    out
}

fn monomial_text(exps: &[u32]) -> String {
    let factors: Vec<String> = exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, e)| format!("x{}^{e}", j + 1)).collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

#[test]
fn length_is_inversion_count() {
    for n in 1..=5 {
        let all = Permutation::all(n);
        assert_eq!(all.len(), (1..=n).product::<usize>());
        for w in &all {
            assert_eq!(w.length(), inversions(w));
            assert_eq!(Permutation::from_word(n, &w.reduced_word()), *w);
            assert_eq!(w.reduced_word().len(), w.length());
        }
    }
}

#[test]
fn reduced_words_of_longest_element() {
    let counts: Vec<usize> = (1..=4).map(|n| Permutation::longest(n).all_reduced_words().unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 16]);
}

#[test]
fn nilcoxeter_products_follow_lengths() {
    let nc = NilCoxeter::new(FrobeniusSuperalgebra::builtin(Builtin::Ground), 3).unwrap();
    for w in Permutation::all(3) {
        for v in Permutation::all(3) {
            let wv = w.compose(&v).unwrap();
            let expected = if wv.length() == w.length() + v.length() { nc.u_of(&wv) } else { Element::zero() };
            assert_eq!(nc.mul(&nc.u_of(&w), &nc.u_of(&v)), expected, "{:?} {:?}", w.one_line(), v.one_line());
        }
    }
}

#[test]
fn divided_differences_match_commuting_oracle() {
    let pol = ground_pol(3);
    for exps in exponent_vectors(3, 4) {
        let text = monomial_text(&exps);
        let f = textio::read(&pol, &text).unwrap();
        let oracle = BTreeMap::from([(exps.clone(), int(1))]);
        for i in 1..=2 {
            let ours = pol.format(&pol.ddiff(i, &f).unwrap());
            assert_eq!(as_poly(&pol, &ours), ddiff(i, &oracle), "d{i}({text})");
        }
    }
}

#[test]
fn action_of_u_w_is_composite_divided_difference() {
    let nh = NilHecke::new(FrobeniusSuperalgebra::builtin(Builtin::Ground), 3).unwrap();
    let pol = nh.polynomial();
    let f_text = "x1^3*x2 + 2*x2^2*x3 - x1*x3^2";
    let f = textio::read(pol, f_text).unwrap();
    for w in Permutation::all(3) {
        let mut expected = as_poly(pol, f_text);
        for &i in w.reduced_word().iter().rev() {
            expected = ddiff(i, &expected);
        }
        let ours = pol.format(&nh.act_pol(&nh.u_of(&w), &f));
        assert_eq!(as_poly(pol, &ours), expected, "{:?}", w.one_line());
    }
}

#[test]
fn longest_divided_difference_of_staircase() {
    let pol = ground_pol(3);
    let f = textio::read(&pol, "x1^2*x2").unwrap();
    let mut g = f.clone();
    for i in [1, 2, 1] {
        g = pol.ddiff(i, &g).unwrap();
    }
    let sign = if Permutation::longest(3).length() % 2 == 1 { -1 } else { 1 };
    assert_eq!(pol.format(&g), format!("{sign}"));
}

#[test]
fn action_is_a_module_structure() {
    let nh = NilHecke::new(FrobeniusSuperalgebra::builtin(Builtin::DualNumbers), 3).unwrap();
    let a = textio::read(&nh, "u1*x2 + y[1]*u2").unwrap();
    let b = textio::read(&nh, "x3^2*u1*u2 - 3*y[2]").unwrap();
    let f = textio::read(nh.polynomial(), "x1^2*x3 + y[3]*x2").unwrap();
    assert_eq!(nh.act_pol(&nh.mul(&a, &b), &f), nh.act_pol(&a, &nh.act_pol(&b, &f)));
}
