use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::linear::{int, ratio};

fn alg(b: Builtin) -> FrobeniusSuperalgebra {
    FrobeniusSuperalgebra::builtin(b)
}

fn all_symmetric() -> Vec<FrobeniusSuperalgebra> {
    Builtin::standard().into_iter().map(alg).collect()
}

fn w(written: &[usize]) -> TensorElement {
    Element::basis(TensorWord::from_written(written))
}

#[test]
fn validate_examples() {
    let r = validate(&Builtin::Ground.data());
    assert!(r.checks.iter().all(|c| c.passed));

    let r = validate(&Builtin::CliffordEven.data());
    assert!(!r.is_symmetric());
    assert!(r.passed("gram-invertible"));
    assert!(r.usable());

    let mut bad = Builtin::DualNumbers.data();
    bad.trace = vec![int(1), int(0)];
    let r = validate(&bad);
    assert!(!r.passed("gram-invertible"));
    assert_eq!(FrobeniusSuperalgebra::new(bad), Err(Error::GramSingular));
}

#[test]
fn validate_rejects_broken_tables() {
    let mut d = Builtin::CyclicGroup(3).data();
    d.mult[1][1] = Element::basis(1);
    assert!(matches!(FrobeniusSuperalgebra::new(d), Err(Error::NotAssociative(..))));

    let mut d = Builtin::CyclicGroup(2).data();
    d.unit = 1;
    assert!(matches!(FrobeniusSuperalgebra::new(d), Err(Error::NotUnital(_))));

    let mut d = Builtin::CliffordOdd.data();
    d.trace = vec![int(1), int(1)];
    assert!(matches!(FrobeniusSuperalgebra::new(d), Err(Error::TraceNotHomogeneous(_))));
}

#[test]
fn dual_basis_examples() {
    let d = alg(Builtin::DualNumbers);
    assert_eq!(d.dual(0), &Element::basis(1));
    assert_eq!(d.dual(1), &Element::basis(0));
    let c = alg(Builtin::CliffordOdd);
    assert_eq!(c.dual(0), &Element::basis(1));
    assert_eq!(c.dual(1), &Element::basis(0));
    assert_eq!(alg(Builtin::Ground).dual(0), &Element::basis(0));
}

#[test]
fn dual_parity_and_pairing() {
    for a in all_symmetric() {
        for i in 0..a.dim() {
            assert_eq!(a.element_parity(a.dual(i)), Some(a.parity(i) + a.trace_parity()));
            for j in 0..a.dim() {
                let t = a.trace(&a.mul(a.dual(i), &Element::basis(j)));
                assert_eq!(t, int((i == j) as i64));
            }
        }
    }
}

#[test]
fn beam() {
    for a in all_symmetric() {
        for i in 0..a.dim() {
            let ea = Element::basis(i);
            let mut left = Element::zero();
            let mut right = Element::zero();
            for b in 0..a.dim() {
                left.add_term(b, a.trace(&a.mul(a.dual(b), &ea)));
                right.add_scaled(&a.trace(&a.mul(&ea, &Element::basis(b))), a.dual(b));
            }
            assert_eq!(left, ea, "{}", a.name());
            assert_eq!(right, ea, "{}", a.name());
        }
    }
}

#[test]
fn double_dual() {
    for a in all_symmetric() {
        let rows: Matrix = (0..a.dim()).map(|b| a.as_row(a.dual(b))).collect();
        let dd = a.dual_of_basis(&rows).unwrap();
        let p = a.trace_parity();
        for (b, ddb) in dd.iter().enumerate() {
            let neg = a.parity(b).is_odd() ^ p.koszul(a.parity(b));
            let expected = Element::basis(b).scale(&sign_scalar(neg));
            assert_eq!(a.as_element(ddb), expected, "{} b={b}", a.name());
        }
    }
}

#[test]
fn tau_examples() {
    assert_eq!(alg(Builtin::Ground).tau().unwrap(), w(&[0, 0]));
    assert_eq!(alg(Builtin::CliffordOdd).tau().unwrap(), &w(&[0, 1]) - &w(&[1, 0]));
    assert_eq!(alg(Builtin::DualNumbers).tau().unwrap(), &w(&[0, 1]) + &w(&[1, 0]));
    assert_eq!(alg(Builtin::CliffordEven).tau(), Err(Error::NotSymmetric));
}

#[test]
fn tau_has_trace_parity() {
    for a in all_symmetric() {
        let t = a.tau().unwrap();
        for (word, _) in &t {
            assert_eq!(a.word_parity(word), a.trace_parity());
        }
    }
}

#[test]
fn tau_at_places_strands() {
    let c = alg(Builtin::CliffordOdd);
    let t = c.tau_at(3, 2).unwrap();
    assert_eq!(t, &w(&[0, 1, 0]) - &w(&[1, 0, 0]));
    assert!(c.tau_at(3, 3).is_err());
}

#[test]
fn train() {
    for a in all_symmetric() {
        let tau = a.tau().unwrap();
        let p = a.trace_parity();
        for i in 0..a.dim() {
            let ea = Element::basis(i);
            let sign = sign_scalar(p.koszul(a.parity(i)));
            let top = a.on_strand(2, 2, &ea);
            let bottom = a.on_strand(2, 1, &ea);
            let l1 = a.tensor_mul(&top, &tau).unwrap();
            let r1 = a.tensor_mul(&tau, &bottom).unwrap().scale(&sign);
            assert_eq!(l1, r1, "{}", a.name());
            let l2 = a.tensor_mul(&bottom, &tau).unwrap();
            let r2 = a.tensor_mul(&tau, &top).unwrap().scale(&sign);
            assert_eq!(l2, r2, "{}", a.name());
        }
    }
}

#[test]
fn tensor_mul_signs() {
    let c = alg(Builtin::CliffordOdd);
    let one_c = w(&[0, 1]);
    let c_one = w(&[1, 0]);
    let cc = w(&[1, 1]);
    assert_eq!(c.tensor_mul(&one_c, &c_one).unwrap(), -&cc);
    assert_eq!(c.tensor_mul(&c_one, &one_c).unwrap(), cc);
    let unit = w(&[0, 0]);
    for x in [&one_c, &c_one, &cc] {
        assert_eq!(&c.tensor_mul(&unit, x).unwrap(), x);
        assert_eq!(&c.tensor_mul(x, &unit).unwrap(), x);
    }
    assert_eq!(
        c.tensor_mul(&unit, &w(&[0])),
        Err(Error::LengthMismatch { left: 2, right: 1 })
    );
}

#[test]
fn tensor_mul_is_associative() {
    let c = alg(Builtin::CliffordOdd);
    let words: Vec<TensorElement> = (0..8)
        .map(|m| w(&[(m >> 2) & 1, (m >> 1) & 1, m & 1]))
        .collect();
    for x in &words {
        for y in &words {
            for z in &words {
                let l = c.tensor_mul(&c.tensor_mul(x, y).unwrap(), z).unwrap();
                let r = c.tensor_mul(x, &c.tensor_mul(y, z).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn superpermute_examples() {
    let c = alg(Builtin::CliffordOdd);
    let s1 = Permutation::simple(2, 1);
    assert_eq!(c.superpermute(&s1, &w(&[1, 1])).unwrap(), -&w(&[1, 1]));
    assert_eq!(c.superpermute(&s1, &w(&[0, 1])).unwrap(), w(&[1, 0]));
    let e = &w(&[1, 0]) + &w(&[1, 1]);
    assert_eq!(c.superpermute(&Permutation::identity(2), &e).unwrap(), e);
    assert!(c.superpermute(&Permutation::identity(3), &e).is_err());
}

#[test]
fn superpermute_is_an_action_independent_of_reduced_word() {
    let c = alg(Builtin::CliffordOdd);
    for n in 1..=4 {
        for perm in Permutation::all(n) {
            let words = perm.all_reduced_words().unwrap();
            for m in 0..(1usize << n) {
                let written: Vec<usize> = (0..n).map(|k| (m >> k) & 1).collect();
                let u = w(&written);
                let direct = c.superpermute(&perm, &u).unwrap();
                for rw in &words {
                    assert_eq!(c.superpermute_along(rw, &u), direct);
                }
            }
        }
    }
}

#[test]
fn superpermute_is_multiplicative() {
    let c = alg(Builtin::CliffordOdd);
    let words: Vec<TensorElement> = (0..8)
        .map(|m| w(&[(m >> 2) & 1, (m >> 1) & 1, m & 1]))
        .collect();
    for perm in Permutation::all(3) {
        for x in &words {
            for y in &words {
                let lhs = c.superpermute(&perm, &c.tensor_mul(x, y).unwrap()).unwrap();
                let rhs = c
                    .tensor_mul(&c.superpermute(&perm, x).unwrap(), &c.superpermute(&perm, y).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn nakayama_of_symmetric_is_identity() {
    for a in all_symmetric() {
        let psi = a.nakayama().unwrap();
        for (i, img) in psi.iter().enumerate() {
            assert_eq!(img, &Element::basis(i), "{}", a.name());
        }
    }
}

// Brute force over small integer matrices for the map solving the Nakayama
// equation on the basis {1, c}.
#[test]
fn nakayama_clifford_even_by_search() {
    let a = alg(Builtin::CliffordEven);
    let range = -2i64..=2;
    let mut solutions = Vec::new();
    for p00 in range.clone() {
        for p01 in range.clone() {
            for p10 in range.clone() {
                for p11 in range.clone() {
                    let images: [AlgElement; 2] = [
                        [(0, int(p00)), (1, int(p01))].into_iter().collect(),
                        [(0, int(p10)), (1, int(p11))].into_iter().collect(),
                    ];
                    let ok = (0..2).all(|i| {
                        (0..2).all(|j| {
                            let lhs = a.trace(a.mul_basis(i, j));
                            let rhs = a.trace(&a.mul(&Element::basis(j), &images[i]));
                            lhs == signed(rhs, a.parity(i).koszul(a.parity(j)))
                        })
                    });
                    if ok {
                        solutions.push(images);
                    }
                }
            }
        }
    }
    assert_eq!(solutions.len(), 1);
    let psi = a.nakayama().unwrap();
    assert_eq!(psi[0], solutions[0][0]);
    assert_eq!(psi[1], solutions[0][1]);
    assert_eq!(psi[1], -&Element::basis(1));
    assert_eq!(psi[0], Element::basis(0));
}

#[test]
fn twisted_identities_hold_on_clifford_even() {
    let a = alg(Builtin::CliffordEven);
    let ids = twisted_teleporter_identities(&a).unwrap();
    assert_eq!(ids.len(), 8);
    for (name, ok) in ids {
        assert!(ok, "{name}");
    }
    for a in all_symmetric() {
        assert!(twisted_teleporter_identities(&a).unwrap().iter().all(|(_, ok)| *ok));
    }
}

#[test]
fn twisted_identities_need_the_twist() {
    // With ψ replaced by the identity the second identity fails on c.
    let a = alg(Builtin::CliffordEven);
    let upper = a.teleporter();
    let c = Element::basis(1);
    let lhs = a.tensor_mul(&upper, &a.on_strand(2, 2, &c)).unwrap();
    let rhs = a.tensor_mul(&a.on_strand(2, 1, &c), &upper).unwrap();
    assert_ne!(lhs, rhs);
}

#[test]
fn tau_is_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let small = |rng: &mut ChaCha8Rng| ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    for b in [Builtin::CyclicGroup(3), Builtin::CyclicGroup(2), Builtin::CliffordOdd, Builtin::DualNumbers] {
        let a = alg(b);
        let dim = a.dim();
        for _ in 0..10 {
            // Homogeneous change of basis fixing the unit.
            let rows: Matrix = (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| {
                            if i == a.unit() {
                                int((j == i) as i64)
                            } else if a.parity(i) != a.parity(j) {
                                int(0)
                            } else if i == j {
                                small(&mut rng) + int(5)
                            } else {
                                small(&mut rng)
                            }
                        })
                        .collect()
                })
                .collect();
            let Ok(moved) = a.change_basis(&rows) else { continue };
            let tau_new = moved.tau().unwrap();
            let back = tau_new.map_linear(|word| {
                let x = a.as_element(&rows[word.get(2)]);
                let y = a.as_element(&rows[word.get(1)]);
                a.tensor_mul(&a.on_strand(2, 2, &x), &a.on_strand(2, 1, &y)).unwrap()
            });
            assert_eq!(back, a.tau().unwrap(), "{}", a.name());
        }
    }
}

#[test]
fn builtin_shapes() {
    let g = alg(Builtin::Ground);
    assert_eq!((g.dim(), g.trace_parity()), (1, Parity::Even));
    let c = alg(Builtin::CliffordOdd);
    assert_eq!((c.dim(), c.trace_parity()), (2, Parity::Odd));
    assert_eq!(c.mul_basis(1, 1), &Element::basis(0));
    let z = alg(Builtin::CyclicGroup(3));
    assert_eq!((z.dim(), z.trace_parity()), (3, Parity::Even));
    assert!(z.is_supercommutative() && z.is_symmetric());
    assert!(!alg(Builtin::CliffordEven).is_symmetric());
    assert!(!c.is_supercommutative());
}

#[test]
fn builtin_names_parse() {
    for b in [
        Builtin::Ground,
        Builtin::CliffordOdd,
        Builtin::CliffordEven,
        Builtin::DualNumbers,
        Builtin::CyclicGroup(4),
    ] {
        assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
    }
    assert_eq!("cyclic_group:2".parse::<Builtin>().unwrap(), Builtin::CyclicGroup(2));
    assert!("cyclic_group(0)".parse::<Builtin>().is_err());
    assert!("octonions".parse::<Builtin>().is_err());
}

#[test]
fn format_elements() {
    let z = alg(Builtin::CyclicGroup(3));
    let e: AlgElement = [(0, ratio(1, 2)), (2, int(-3))].into_iter().collect();
    assert_eq!(z.format_element(&e), "1/2 - 3*g2");
    assert_eq!(z.format_element(&Element::zero()), "0");
}
