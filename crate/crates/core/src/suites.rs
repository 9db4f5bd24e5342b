//! Verification suites shared by the command line and the acceptance tests.
//! Every suite is deterministic given its seed.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cliffordodd::OddNilHecke;
use crate::frobenius::{twisted_teleporter_identities, validate, Builtin, FrobeniusSuperalgebra};
use crate::linear::{int, sign_scalar, Element, Matrix, Scalar};
use crate::nilcoxeter::NilCoxeter;
use crate::nilhecke::{NhElement, NilHecke, NilHeckeKey, PolNcElement};
use crate::polynomial::{PolElement, PolKey, Polynomial};
use crate::report::Report;
use crate::symgroup::Permutation;
use crate::Error;

/// Sizes of the sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Dot degree bound of exhaustive sweeps.
    pub degree_cap: u32,
    /// Dot degree bound of randomly drawn basis elements.
    pub sample_degree: u32,
    /// Number of random instances per randomized check.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            degree_cap: 3,
            sample_degree: 3,
            samples: 200,
            seed: 0,
        }
    }
}

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn pick<K: Clone>(keys: &[K], rng: &mut StdRng) -> K {
    keys[rng.gen_range(0..keys.len())].clone()
}

/// A short random combination of basis keys with small integer coefficients.
fn combo<K: Ord + Clone>(keys: &[K], rng: &mut StdRng) -> Element<K> {
    let mut out = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        out.add_term(pick(keys, rng), int(rng.gen_range(-3..=3)));
    }
    out
}

/// The Frobenius axioms, the dual basis identities and teleporter sliding;
/// for nonsymmetric algebras the Nakayama automorphism and the twisted
/// teleporter identities instead.
pub fn frobenius_axioms(a: &FrobeniusSuperalgebra) -> Report {
    let mut r = Report::new(format!("Frobenius axioms, A = {}", a.name()));
    for c in validate(a.data()).checks {
        let expected = c.name != "supersymmetry" || a.is_symmetric();
        r.record(&c.name, c.passed == expected, || c.detail.clone().unwrap_or_default());
    }
    let dim = a.dim();
    let p = a.trace_parity();
    for i in 0..dim {
        for j in 0..dim {
            let t = a.trace(&a.mul(a.dual(i), &Element::basis(j)));
            r.record("dual pairing tr(a^∨ b) = δ", t == int((i == j) as i64), || {
                format!("a = {}, b = {}", a.label(i), a.label(j))
            });
        }
    }
    for i in 0..dim {
        let ea = Element::basis(i);
        let mut left = Element::zero();
        let mut right = Element::zero();
        for b in 0..dim {
            left.add_term(b, a.trace(&a.mul(a.dual(b), &ea)));
            right.add_scaled(&a.trace(&a.mul(&ea, &Element::basis(b))), a.dual(b));
        }
        r.record("Σ tr(b^∨ a) b = a", left == ea, || format!("a = {}", a.label(i)));
        r.record("Σ tr(a b) b^∨ = a", right == ea, || format!("a = {}", a.label(i)));
    }
    if a.is_symmetric() {
        let rows: Matrix = (0..dim).map(|b| a.as_row(a.dual(b))).collect();
        match a.dual_of_basis(&rows) {
            Ok(dd) => {
                for (b, ddb) in dd.iter().enumerate() {
                    let negative = a.parity(b).is_odd() ^ p.koszul(a.parity(b));
                    let expected = Element::basis(b).scale(&sign_scalar(negative));
                    r.record("double dual", a.as_element(ddb) == expected, || format!("b = {}", a.label(b)));
                }
            }
            Err(e) => r.record("double dual", false, || e.to_string()),
        }
        let tau = a.tau().expect("symmetric");
        for i in 0..dim {
            let ea = Element::basis(i);
            let sign = sign_scalar(p.koszul(a.parity(i)));
            let top = a.on_strand(2, 2, &ea);
            let bottom = a.on_strand(2, 1, &ea);
            let m = |x: &_, y: &_| a.tensor_mul(x, y).expect("two strands");
            r.record("(a⊗1)τ = ±τ(1⊗a)", m(&top, &tau) == m(&tau, &bottom).scale(&sign), || format!("a = {}", a.label(i)));
            r.record("(1⊗a)τ = ±τ(a⊗1)", m(&bottom, &tau) == m(&tau, &top).scale(&sign), || format!("a = {}", a.label(i)));
        }
    } else {
        match a.nakayama() {
            Ok(psi) => {
                let closed = (0..dim).all(|i| (0..dim).all(|j| a.mul(&psi[i], &psi[j]) == {
                    let mut out = Element::zero();
                    for (k, c) in a.mul_basis(i, j) {
                        out.add_scaled(c, &psi[*k]);
                    }
                    out
                }));
                r.record("Nakayama map is multiplicative", closed, String::new);
            }
            Err(e) => r.record("Nakayama map is multiplicative", false, || e.to_string()),
        }
        match twisted_teleporter_identities(a) {
            Ok(ids) => {
                for (name, ok) in ids {
                    r.record("twisted teleporter identities", ok, || name.clone());
                }
            }
            Err(e) => r.record("twisted teleporter identities", false, || e.to_string()),
        }
    }
    r
}

/// Frobenius axioms over the standard built-ins, plus detection of the
/// nonsymmetric `clifford_even` with `ψ(c) = -c`.
pub fn frobenius_suite() -> Report {
    let mut r = Report::new("Frobenius axioms");
    for b in Builtin::standard() {
        r.absorb(frobenius_axioms(&FrobeniusSuperalgebra::builtin(b)));
    }
    let even = FrobeniusSuperalgebra::builtin(Builtin::CliffordEven);
    r.record("clifford_even is nonsymmetric", !even.is_symmetric(), String::new);
    let c = even.index_of("c").expect("label c");
    let psi = even.nakayama();
    r.record(
        "clifford_even: ψ(1) = 1, ψ(c) = -c",
        psi.as_ref().is_ok_and(|psi| psi[even.unit()] == Element::basis(even.unit()) && psi[c] == -&Element::basis(c)),
        || format!("{psi:?}"),
    );
    r.absorb(frobenius_axioms(&even));
    r
}

/// The defining relations of `N_n(A)`, `P_n(A)` and, for symmetric `A`,
/// `NH_n(A)`.
pub fn relation_suite(a: &FrobeniusSuperalgebra, n: usize) -> Result<Report, Error> {
    let mut r = Report::new(format!("defining relations, A = {}, n = {n}", a.name()));
    r.absorb(NilCoxeter::new(a.clone(), n)?.verify_relations());
    r.absorb(Polynomial::new(a.clone(), n)?.verify_relations());
    if a.is_symmetric() {
        r.absorb(NilHecke::new(a.clone(), n)?.verify_relations());
    }
    Ok(r)
}

/// Normal-form keys against `(monomial, permutation)` pairs, and
/// associativity on random basis triples.
pub fn basis_suite(nh: &NilHecke, opts: &SuiteOptions) -> Report {
    let n = nh.n();
    let mut r = Report::new(format!("basis theorem, A = {}, n = {n}, |k| <= {}", nh.algebra().name(), opts.degree_cap));
    let monomials = nh.polynomial().monomials(opts.degree_cap);
    let perms = Permutation::all(n);
    let keys = nh.basis(opts.degree_cap);
    let mut seen: BTreeSet<(PolKey, Permutation)> = BTreeSet::new();
    for key in &keys {
        let e = Element::basis(key.clone());
        let parts = nh.bt_factor(&e);
        let single = parts.len() == 1 && parts[0].0.len() == 1;
        r.record("normal form factors as f ⊗ u_w", single, || nh.format(&e));
        if single {
            let (f, w) = &parts[0];
            let m = f.keys().next().unwrap().clone();
            r.record("f u_w expands back to the key", nh.bt_expand(f, w) == e, || nh.format(&e));
            seen.insert((m, w.clone()));
        }
    }
    let expected = monomials.len() * perms.len();
    r.record("keys biject with (monomial, permutation)", seen.len() == expected && keys.len() == expected, || {
        format!("{} keys, {} distinct pairs, {expected} expected", keys.len(), seen.len())
    });
    let sample = nh.basis(opts.sample_degree);
    let mut g = rng(opts.seed);
    for _ in 0..opts.samples {
        let [x, y, z] = [0; 3].map(|_| Element::basis(pick(&sample, &mut g)));
        let ok = nh.mul(&nh.mul(&x, &y), &z) == nh.mul(&x, &nh.mul(&y, &z));
        r.record("associativity on basis triples", ok, || format!("({}) * ({}) * ({})", nh.format(&x), nh.format(&y), nh.format(&z)));
    }
    r
}

/// Width of the exhaustive closed-formula comparison.
pub const CLOSED_FORMULA_DEGREE: u32 = 6;

/// Twisted Leibniz rule, the closed even formula, `∂_i^2 = 0` and
/// `u_i f = s_i(f) u_i + ∂_i(f)`.
pub fn divided_difference_suite(nh: &NilHecke, opts: &SuiteOptions) -> Report {
    let n = nh.n();
    let p = nh.polynomial();
    let mut r = Report::new(format!("divided differences, A = {}, n = {n}", nh.algebra().name()));
    let sample = p.monomials(opts.sample_degree);
    let mut g = rng(opts.seed ^ 0x4c);
    if n >= 2 {
        for _ in 0..opts.samples {
            let f = combo(&sample, &mut g);
            let h = combo(&sample, &mut g);
            let i = g.gen_range(1..n);
            let lhs = p.ddiff(i, &p.mul(&f, &h)).expect("symmetric");
            let rhs = &p.mul(&p.ddiff(i, &f).expect("symmetric"), &h)
                + &p.mul(&p.s_action(i, &f).expect("in range"), &p.ddiff(i, &h).expect("symmetric"));
            r.record("twisted Leibniz", lhs == rhs, || format!("i = {i}, f = {}, g = {}", p.format(&f), p.format(&h)));
        }
    }
    if !nh.algebra().trace_parity().is_odd() {
        for key in p.monomials(CLOSED_FORMULA_DEGREE.max(opts.degree_cap)) {
            let f = Element::basis(key);
            for i in 1..n {
                let ok = p.ddiff(i, &f).ok() == p.ddiff_closed_even(i, &f).ok();
                r.record("peeling agrees with the closed formula", ok, || format!("i = {i}, f = {}", p.format(&f)));
            }
        }
    }
    for key in p.monomials(opts.degree_cap) {
        let f = Element::basis(key);
        let ef = nh.embed_pol(&f);
        for i in 1..n {
            let d = p.ddiff(i, &f).expect("symmetric");
            r.record("∂_i ∂_i = 0", p.ddiff(i, &d).expect("symmetric").is_zero(), || format!("i = {i}, f = {}", p.format(&f)));
            let lhs = nh.mul(&nh.u(i), &ef);
            let rhs = &nh.mul(&nh.embed_pol(&p.s_action(i, &f).expect("in range")), &nh.u(i)) + &nh.embed_pol(&d);
            r.record("u_i f = s_i(f) u_i + ∂_i(f)", lhs == rhs, || format!("u{i}*({}) - ({})", p.format(&f), nh.format(&rhs)));
        }
    }
    r
}

/// `(e₁e₂)·t = e₁·(e₂·t)` for both actions, and the polynomial action as the
/// counit image of the induced one.
pub fn module_suite(nh: &NilHecke, opts: &SuiteOptions) -> Report {
    let n = nh.n();
    let p = nh.polynomial();
    let mut r = Report::new(format!("module actions, A = {}, n = {n}", nh.algebra().name()));
    let keys = nh.basis(opts.sample_degree.min(2));
    let monomials = p.monomials(opts.sample_degree);
    let perms = Permutation::all(n);
    let id = Permutation::identity(n);
    let mut g = rng(opts.seed ^ 0x6d);
    for _ in 0..opts.samples {
        let x: NhElement = Element::basis(pick(&keys, &mut g));
        let y: NhElement = Element::basis(pick(&keys, &mut g));
        let m = pick(&monomials, &mut g);
        let t: PolNcElement = Element::basis((m.clone(), pick(&perms, &mut g)));
        let ok = nh.act_polnc(&nh.mul(&x, &y), &t) == nh.act_polnc(&x, &nh.act_polnc(&y, &t));
        r.record("induced module: (e1 e2)·t = e1·(e2·t)", ok, || format!("e1 = {}, e2 = {}", nh.format(&x), nh.format(&y)));
        let f: PolElement = Element::basis(m.clone());
        let ok = nh.act_pol(&nh.mul(&x, &y), &f) == nh.act_pol(&x, &nh.act_pol(&y, &f));
        r.record("polynomial module: (e1 e2)·f = e1·(e2·f)", ok, || {
            format!("e1 = {}, e2 = {}, f = {}", nh.format(&x), nh.format(&y), p.format(&f))
        });
        let induced: PolElement = nh
            .act_polnc(&x, &Element::basis((m, id.clone())))
            .iter()
            .filter(|((_, z), _)| *z == id)
            .map(|((h, _), c)| (h.clone(), c.clone()))
            .collect();
        r.record("polynomial action is the counit image", induced == nh.act_pol(&x, &f), || {
            format!("e = {}, f = {}", nh.format(&x), p.format(&f))
        });
    }
    r
}

/// `(y⊗y) u_1` in `NH_2(k[y]/y^2)` is nonzero and acts as zero on every
/// monomial of degree at most `degree`.
pub fn non_faithful_suite(degree: u32) -> Report {
    let mut r = Report::new(format!("non-faithful polynomial representation, degree <= {degree}"));
    let nh = NilHecke::new(FrobeniusSuperalgebra::builtin(Builtin::DualNumbers), 2).expect("symmetric");
    let y = nh.algebra().index_of("y").expect("label y");
    let e = nh.mul(&nh.mul(&nh.token(1, y), &nh.token(2, y)), &nh.u(1));
    r.record("(y⊗y)u_1 is a nonzero normal form", !e.is_zero() && e.len() == 1, || nh.format(&e));
    for m in nh.polynomial().monomials(degree) {
        let f = Element::basis(m);
        let image = nh.act_pol(&e, &f);
        r.record("(y⊗y)u_1 kills the monomial", image.is_zero(), || {
            format!("f = {}, image = {}", nh.polynomial().format(&f), nh.polynomial().format(&image))
        });
    }
    r
}

/// `ψ: NH_n(Cl) → ONH_n ⊗ Cl^{⊗n}` against its inverse, multiplicativity,
/// parity, ranks and the odd relations.
pub fn clifford_bridge_suite(n: usize, opts: &SuiteOptions) -> Result<Report, Error> {
    let onh = OddNilHecke::new(n)?;
    let nh = onh.clifford_nil_hecke();
    let mut r = Report::new(format!("Clifford bridge, n = {n}, |k| <= {}", opts.degree_cap));
    let nh_keys = nh.basis(opts.degree_cap);
    for k in &nh_keys {
        let e = Element::basis(k.clone());
        let image = onh.psi(&e);
        r.record("psi_inv ∘ psi = id", onh.psi_inv(&image) == e, || nh.format(&e));
        r.record("psi preserves parity", image.keys().all(|o| onh.parity(o) == nh.parity(k)), || nh.format(&e));
    }
    let onh_keys = onh.basis(opts.degree_cap);
    for k in &onh_keys {
        let e = Element::basis(k.clone());
        r.record("psi ∘ psi_inv = id", onh.psi(&onh.psi_inv(&e)) == e, || onh.format(&e));
    }
    r.record("ranks agree", nh_keys.len() == onh_keys.len() && nh_keys.len() == nh.rank(opts.degree_cap), || {
        format!("{} vs {}", nh_keys.len(), onh_keys.len())
    });
    let sample: Vec<NilHeckeKey> = nh.basis(opts.sample_degree.min(2));
    let mut g = rng(opts.seed ^ 0x70);
    for _ in 0..opts.samples {
        let x = Element::basis(pick(&sample, &mut g));
        let y = Element::basis(pick(&sample, &mut g));
        let ok = onh.psi(&nh.mul(&x, &y)) == onh.mul(&onh.psi(&x), &onh.psi(&y));
        r.record("psi is multiplicative", ok, || format!("{} ; {}", nh.format(&x), nh.format(&y)));
    }
    r.absorb(onh.verify_relations());
    Ok(r)
}

/// `ω↔` and `ω↕` contracts and additivity of the `Z`-degree, each on random
/// basis pairs; checks are skipped when they do not apply to `A`.
pub fn symmetry_suite(nh: &NilHecke, opts: &SuiteOptions) -> Report {
    let n = nh.n();
    let mut r = Report::new(format!("symmetries and grading, A = {}, n = {n}", nh.algebra().name()));
    let keys = nh.basis(opts.sample_degree.min(2));
    let mut g = rng(opts.seed ^ 0x77);
    let supercommutative = nh.algebra().is_supercommutative();
    let graded = nh.algebra().grading().is_some();
    for _ in 0..opts.samples {
        let (kx, ky) = (pick(&keys, &mut g), pick(&keys, &mut g));
        let (x, y) = (Element::basis(kx.clone()), Element::basis(ky.clone()));
        let xy = nh.mul(&x, &y);
        let ok = nh.omega_lr(&xy) == nh.mul(&nh.omega_lr(&x), &nh.omega_lr(&y));
        r.record("ω↔ is multiplicative", ok, || format!("{} ; {}", nh.format(&x), nh.format(&y)));
        r.record("ω↔ is an involution", nh.omega_lr(&nh.omega_lr(&x)) == x, || nh.format(&x));
        if supercommutative {
            let sign: Scalar = sign_scalar(nh.parity(&kx).koszul(nh.parity(&ky)));
            let lhs = nh.omega_ud(&xy).expect("supercommutative");
            let rhs = nh.mul(&nh.omega_ud(&y).expect("supercommutative"), &nh.omega_ud(&x).expect("supercommutative")).scale(&sign);
            r.record("ω↕ is a super anti-automorphism", lhs == rhs, || format!("{} ; {}", nh.format(&x), nh.format(&y)));
            r.record("ω↕ is an involution", nh.omega_ud(&nh.omega_ud(&x).unwrap()).unwrap() == x, || nh.format(&x));
        }
        if graded {
            let total = nh.z_degree(&kx).unwrap().z_degree + nh.z_degree(&ky).unwrap().z_degree;
            let ok = xy.keys().all(|k| nh.z_degree(k).unwrap().z_degree == total);
            r.record("Z-degree is additive", ok, || format!("{} ; {}", nh.format(&x), nh.format(&y)));
        }
    }
    r
}

/// Everything that applies to one algebra at `n` strands.
pub fn verify_all(a: &FrobeniusSuperalgebra, n: usize, opts: &SuiteOptions) -> Result<Vec<Report>, Error> {
    let mut out = vec![frobenius_axioms(a), relation_suite(a, n)?];
    if a.is_symmetric() {
        let nh = NilHecke::new(a.clone(), n)?;
        out.push(basis_suite(&nh, opts));
        out.push(divided_difference_suite(&nh, opts));
        out.push(module_suite(&nh, opts));
        out.push(symmetry_suite(&nh, opts));
    }
    Ok(out)
}
