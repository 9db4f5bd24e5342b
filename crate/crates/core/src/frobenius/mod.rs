//! Finite-dimensional Frobenius superalgebras, their tensor powers and the
//! superpermutation action.
//!
//! An algebra is given on a homogeneous basis `b_0, ..., b_{d-1}` by structure
//! constants, a trace vector and the parity of the trace. Construction runs the
//! full axiom check and computes the dual basis, so every
//! [`FrobeniusSuperalgebra`] value is known to be associative, unital,
//! parity-additive, with a homogeneous nondegenerate trace.

mod builtins;
mod tensor;

pub use builtins::Builtin;
pub use tensor::TensorWord;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linear::{self, format_scalar, sign_scalar, signed, Element, Matrix, Parity, Scalar};
use crate::symgroup::Permutation;
use crate::Error;

/// Element of `A`, indexed by basis position.
pub type AlgElement = Element<usize>;
/// Element of `A^{⊗n}`.
pub type TensorElement = Element<TensorWord>;

/// Optional Z-grading: a degree per basis element and the degree of the trace
/// map (`-d` when the trace is nonzero only in degree `d`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub degrees: Vec<i64>,
    pub trace_degree: i64,
}

impl Grading {
    /// The integer `d`.
    pub fn d(&self) -> i64 {
        -self.trace_degree
    }
}

/// Raw, unvalidated algebra data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub name: String,
    pub labels: Vec<String>,
    pub parities: Vec<Parity>,
    pub unit: usize,
    /// `mult[i][j] = b_i b_j`
    pub mult: Vec<Vec<AlgElement>>,
    pub trace: Vec<Scalar>,
    pub trace_parity: Parity,
    pub grading: Option<Grading>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationCheck {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Outcome of every axiom check on a piece of [`AlgebraData`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
    #[serde(skip)]
    first_error: Option<Error>,
}

impl ValidationReport {
    fn record(&mut self, name: &str, failure: Option<Error>) {
        let detail = failure.as_ref().map(|e| e.to_string());
        self.checks.push(ValidationCheck {
            name: name.to_string(),
            passed: failure.is_none(),
            detail,
        });
        // Supersymmetry failure is not fatal: such algebras remain usable for
        // Nakayama and nilCoxeter computations.
        if name != "supersymmetry" && self.first_error.is_none() {
            self.first_error = failure;
        }
    }

    pub fn passed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && c.passed)
    }

    /// True when the algebra may be constructed.
    pub fn usable(&self) -> bool {
        self.first_error.is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        self.passed("supersymmetry")
    }

    pub fn first_error(&self) -> Option<&Error> {
        self.first_error.as_ref()
    }
}

/// Checks the Frobenius superalgebra axioms on `data`.
pub fn validate(data: &AlgebraData) -> ValidationReport {
    let mut report = ValidationReport::default();
    if let Err(e) = check_shape(data) {
        report.record("well-formed", Some(e));
        return report;
    }
    report.record("well-formed", None);
    let dim = data.labels.len();
    let lab = |i: usize| data.labels[i].clone();
    let mul = |a: &AlgElement, b: &AlgElement| -> AlgElement {
        let mut out = Element::zero();
        for (i, ca) in a {
            for (j, cb) in b {
                out.add_scaled(&(ca * cb), &data.mult[*i][*j]);
            }
        }
        out
    };

    let mut failure = None;
    'assoc: for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let bi = Element::basis(i);
                let bk = Element::basis(k);
                let left = mul(&data.mult[i][j], &bk);
                let right = mul(&bi, &data.mult[j][k]);
                if left != right {
                    failure = Some(Error::NotAssociative(lab(i), lab(j), lab(k)));
                    break 'assoc;
                }
            }
        }
    }
    report.record("associativity", failure);

    let mut failure = None;
    for i in 0..dim {
        let bi = Element::basis(i);
        if data.mult[data.unit][i] != bi || data.mult[i][data.unit] != bi {
            failure = Some(Error::NotUnital(lab(data.unit)));
            break;
        }
    }
    report.record("unitality", failure);

    let mut failure = None;
    'par: for i in 0..dim {
        for j in 0..dim {
            let expected = data.parities[i] + data.parities[j];
            if data.mult[i][j].keys().any(|&k| data.parities[k] != expected) {
                failure = Some(Error::NotParityAdditive(lab(i), lab(j)));
                break 'par;
            }
        }
    }
    report.record("parity-additivity", failure);

    let failure = (0..dim)
        .find(|&i| !data.trace[i].is_zero() && data.parities[i] != data.trace_parity)
        .map(|i| Error::TraceNotHomogeneous(lab(i)));
    report.record("trace-homogeneity", failure);

    let trace = |e: &AlgElement| -> Scalar {
        let mut s = Scalar::zero();
        for (i, c) in e {
            s += c * &data.trace[*i];
        }
        s
    };
    let mut failure = None;
    'sym: for i in 0..dim {
        for j in 0..dim {
            let ab = trace(&data.mult[i][j]);
            let ba = trace(&data.mult[j][i]);
            if ab != signed(ba, data.parities[i].koszul(data.parities[j])) {
                failure = Some(Error::NotSymmetric);
                break 'sym;
            }
        }
    }
    report.record("supersymmetry", failure);

    let gram = gram_matrix(data);
    let failure = linear::invert(&gram).is_none().then_some(Error::GramSingular);
    report.record("gram-invertible", failure);

    if let Some(g) = &data.grading {
        let mut failure = None;
        'deg: for i in 0..dim {
            for j in 0..dim {
                let expected = g.degrees[i] + g.degrees[j];
                if data.mult[i][j].keys().any(|&k| g.degrees[k] != expected) {
                    failure = Some(Error::NotDegreeAdditive(lab(i), lab(j)));
                    break 'deg;
                }
            }
        }
        if failure.is_none() && g.degrees[data.unit] != 0 {
            failure = Some(Error::NotDegreeAdditive(lab(data.unit), lab(data.unit)));
        }
        report.record("degree-additivity", failure);
        let failure = (0..dim)
            .find(|&i| !data.trace[i].is_zero() && g.degrees[i] != g.d())
            .map(|i| Error::InvalidData(format!("trace nonzero on {} outside degree d", lab(i))));
        report.record("trace-degree", failure);
    }
    report
}

fn check_shape(data: &AlgebraData) -> Result<(), Error> {
    let dim = data.labels.len();
    let bad = |m: &str| Err(Error::InvalidData(m.to_string()));
    if dim == 0 {
        return bad("empty basis");
    }
    if data.parities.len() != dim || data.trace.len() != dim {
        return bad("parities and trace must have one entry per basis element");
    }
    if data.unit >= dim {
        return bad("unit index out of range");
    }
    if data.mult.len() != dim || data.mult.iter().any(|r| r.len() != dim) {
        return bad("multiplication table must be dim x dim");
    }
    if data.mult.iter().flatten().any(|e| e.keys().any(|&k| k >= dim)) {
        return bad("structure constant references an unknown basis element");
    }
    if let Some(g) = &data.grading {
        if g.degrees.len() != dim {
            return bad("grading must have one degree per basis element");
        }
    }
    let mut labels = data.labels.clone();
    labels.sort();
    labels.dedup();
    if labels.len() != dim {
        return bad("duplicate basis labels");
    }
    Ok(())
}

fn gram_matrix(data: &AlgebraData) -> Matrix {
    let dim = data.labels.len();
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let mut s = Scalar::zero();
                    for (k, c) in &data.mult[i][j] {
                        s += c * &data.trace[*k];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Dual basis `b^∨` for each basis element, with `tr(a^∨ b) = δ_{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    pub duals: Vec<AlgElement>,
}

/// A validated Frobenius superalgebra.
#[derive(Clone, Debug)]
pub struct FrobeniusSuperalgebra {
    data: AlgebraData,
    symmetric: bool,
    gram: Matrix,
    duals: Vec<AlgElement>,
}

impl PartialEq for FrobeniusSuperalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl FrobeniusSuperalgebra {
    /// Validates `data` and returns the first fatal axiom failure, if any.
    pub fn new(data: AlgebraData) -> Result<Self, Error> {
        let report = validate(&data);
        if let Some(e) = report.first_error() {
            return Err(e.clone());
        }
        let gram = gram_matrix(&data);
        let inv = linear::invert(&gram).ok_or(Error::GramSingular)?;
        let dim = data.labels.len();
        // a^∨ = Σ_c (G^{-1})[a][c] b_c, since tr(a^∨ b) = (G^{-1} G)[a][b].
        let duals = (0..dim)
            .map(|a| (0..dim).map(|c| (c, inv[a][c].clone())).collect())
            .collect();
        Ok(FrobeniusSuperalgebra {
            symmetric: report.is_symmetric(),
            data,
            gram,
            duals,
        })
    }

    pub fn builtin(b: Builtin) -> Self {
        builtins::build(b)
    }

    pub fn data(&self) -> &AlgebraData {
        &self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn dim(&self) -> usize {
        self.data.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.data.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.data.labels.iter().position(|l| l == label)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.data.parities[i]
    }

    pub fn unit(&self) -> usize {
        self.data.unit
    }

    pub fn trace_parity(&self) -> Parity {
        self.data.trace_parity
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.data.grading.as_ref()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// True when `ab = (-1)^{|a||b|} ba` on all basis pairs.
    pub fn is_supercommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let flip = self.parity(i).koszul(self.parity(j));
                self.data.mult[i][j] == self.data.mult[j][i].scale(&sign_scalar(flip))
            })
        })
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &AlgElement {
        &self.data.mult[i][j]
    }

    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut out = Element::zero();
        for (i, ca) in a {
            for (j, cb) in b {
                out.add_scaled(&(ca * cb), &self.data.mult[*i][*j]);
            }
        }
        out
    }

    pub fn trace(&self, a: &AlgElement) -> Scalar {
        let mut s = Scalar::zero();
        for (i, c) in a {
            s += c * &self.data.trace[*i];
        }
        s
    }

    pub fn trace_vector(&self) -> &[Scalar] {
        &self.data.trace
    }

    /// Parity of a homogeneous element; `None` for zero or inhomogeneous input.
    pub fn element_parity(&self, a: &AlgElement) -> Option<Parity> {
        let mut it = a.keys().map(|&k| self.parity(k));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn dual(&self, i: usize) -> &AlgElement {
        &self.duals[i]
    }

    pub fn dual_basis(&self) -> DualBasis {
        DualBasis {
            duals: self.duals.clone(),
        }
    }

    /// Dual basis of an arbitrary basis `rows` (coordinates in the stored
    /// basis), by a fresh linear solve against that basis' Gram matrix.
    /// Returns coordinates in the stored basis.
    pub fn dual_of_basis(&self, rows: &Matrix) -> Result<Matrix, Error> {
        let gram_new = linear::mat_mul(&linear::mat_mul(rows, &self.gram), &linear::transpose(rows));
        let inv = linear::invert(&gram_new).ok_or(Error::GramSingular)?;
        Ok(linear::mat_mul(&inv, rows))
    }

    pub fn as_element(&self, row: &[Scalar]) -> AlgElement {
        row.iter().cloned().enumerate().collect()
    }

    pub fn as_row(&self, a: &AlgElement) -> Vec<Scalar> {
        (0..self.dim()).map(|i| a.coeff(&i)).collect()
    }

    pub fn word_parity(&self, w: &TensorWord) -> Parity {
        w.entries()
            .iter()
            .fold(Parity::Even, |acc, &e| acc + self.parity(e))
    }

    /// Product of two pure tensors: `(a_n⊗…⊗a_1)(b_n⊗…⊗b_1)` carries the sign
    /// `(-1)^{Σ_{i<j} |a_i||b_j|}`.
    pub fn word_mul(&self, a: &TensorWord, b: &TensorWord) -> TensorElement {
        debug_assert_eq!(a.len(), b.len());
        let mut negative = false;
        let mut right_parity = Parity::Even;
        for (ai, bi) in a.entries().iter().zip(b.entries()) {
            negative ^= right_parity.koszul(self.parity(*bi));
            right_parity += self.parity(*ai);
        }
        // Expand the strandwise products.
        let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(a.len()), sign_scalar(negative))];
        for (ai, bi) in a.entries().iter().zip(b.entries()) {
            let prod = &self.data.mult[*ai][*bi];
            if prod.is_zero() {
                return Element::zero();
            }
            if prod.len() == 1 {
                let (k, c) = prod.iter().next().unwrap();
                for (w, coeff) in acc.iter_mut() {
                    w.push(*k);
                    if !c.is_one() {
                        *coeff *= c;
                    }
                }
            } else {
                let mut next = Vec::with_capacity(acc.len() * prod.len());
                for (w, coeff) in &acc {
                    for (k, c) in prod {
                        let mut w2 = w.clone();
                        w2.push(*k);
                        next.push((w2, coeff * c));
                    }
                }
                acc = next;
            }
        }
        acc.into_iter().map(|(w, c)| (TensorWord::new(w), c)).collect()
    }

    pub fn tensor_mul(&self, u: &TensorElement, v: &TensorElement) -> Result<TensorElement, Error> {
        for (a, _) in u {
            for (b, _) in v {
                if a.len() != b.len() {
                    return Err(Error::LengthMismatch {
                        left: a.len(),
                        right: b.len(),
                    });
                }
            }
        }
        Ok(self.tensor_mul_unchecked(u, v))
    }

    pub(crate) fn tensor_mul_unchecked(&self, u: &TensorElement, v: &TensorElement) -> TensorElement {
        let mut out = Element::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                out.add_scaled(&(ca * cb), &self.word_mul(a, b));
            }
        }
        out
    }

    /// `s_i` on a pure tensor: swap strands `i`, `i + 1` with the Koszul sign.
    /// Returns the new word and whether the sign is negative.
    pub fn swap_word(&self, i: usize, w: &TensorWord) -> (TensorWord, bool) {
        let (a, b) = (w.get(i), w.get(i + 1));
        let mut out = w.clone();
        out.set(i, b);
        out.set(i + 1, a);
        (out, self.parity(a).koszul(self.parity(b)))
    }

    /// Superpermutation by `w`: the factor on strand `j` moves to strand
    /// `w(j)`, with sign `(-1)^{Σ |a_j||a_k|}` over inverted pairs.
    pub fn permute_word(&self, w: &Permutation, word: &TensorWord) -> (TensorWord, bool) {
        let n = word.len();
        let mut out = vec![0usize; n];
        let mut negative = false;
        for j in 1..=n {
            out[w.image(j) - 1] = word.get(j);
            if self.parity(word.get(j)).is_odd() {
                for k in j + 1..=n {
                    if w.image(j) > w.image(k) && self.parity(word.get(k)).is_odd() {
                        negative = !negative;
                    }
                }
            }
        }
        (TensorWord::new(out), negative)
    }

    pub fn superpermute(&self, w: &Permutation, u: &TensorElement) -> Result<TensorElement, Error> {
        if let Some((word, _)) = u.iter().find(|(word, _)| word.len() != w.size()) {
            return Err(Error::LengthMismatch {
                left: w.size(),
                right: word.len(),
            });
        }
        Ok(u.map_keys_signed(|word| self.permute_word(w, word)))
    }

    /// Superpermutation computed by applying simple transpositions along
    /// `reduced`, rightmost letter first.
    pub fn superpermute_along(&self, reduced: &[usize], u: &TensorElement) -> TensorElement {
        let mut cur = u.clone();
        for &i in reduced.iter().rev() {
            cur = cur.map_keys_signed(|word| self.swap_word(i, word));
        }
        cur
    }

    /// `Σ_b (-1)^{p|b|} b ⊗ b^∨`, defined whether or not the algebra is
    /// symmetric.
    pub fn teleporter(&self) -> TensorElement {
        let p = self.trace_parity();
        let mut out = Element::zero();
        for b in 0..self.dim() {
            let sign = sign_scalar(p.koszul(self.parity(b)));
            for (d, c) in self.dual(b) {
                out.add_term(TensorWord::new(vec![*d, b]), &sign * c);
            }
        }
        out
    }

    /// The teleporter with `b^∨` on top: `Σ_b (-1)^{|b|} b^∨ ⊗ b` as a tensor.
    pub fn teleporter_lower(&self) -> TensorElement {
        let mut out = Element::zero();
        for b in 0..self.dim() {
            let sign = sign_scalar(self.parity(b).is_odd());
            for (d, c) in self.dual(b) {
                out.add_term(TensorWord::new(vec![b, *d]), &sign * c);
            }
        }
        out
    }

    /// `τ ∈ A^{⊗2}`.
    pub fn tau(&self) -> Result<TensorElement, Error> {
        if !self.symmetric {
            return Err(Error::NotSymmetric);
        }
        Ok(self.teleporter())
    }

    /// `τ_i = 1^{⊗(n-i-1)} ⊗ τ ⊗ 1^{⊗(i-1)}`.
    pub fn tau_at(&self, n: usize, i: usize) -> Result<TensorElement, Error> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let tau = self.tau()?;
        Ok(self.place(n, i, &tau))
    }

    /// Places a two-strand tensor on strands `i`, `i + 1` of `A^{⊗n}`.
    pub fn place(&self, n: usize, i: usize, t: &TensorElement) -> TensorElement {
        t.map_keys(|w| {
            let mut out = TensorWord::constant(n, self.unit());
            out.set(i, w.get(1));
            out.set(i + 1, w.get(2));
            out
        })
    }

    /// Places an element of `A` on one strand of `A^{⊗n}`.
    pub fn on_strand(&self, n: usize, strand: usize, a: &AlgElement) -> TensorElement {
        a.map_keys(|&k| TensorWord::single(n, self.unit(), strand, k))
    }

    /// The Nakayama automorphism `ψ`, with `tr(ab) = (-1)^{|a||b|} tr(b ψ(a))`,
    /// as images of the basis elements.
    pub fn nakayama(&self) -> Result<Vec<AlgElement>, Error> {
        let dim = self.dim();
        let inv = linear::invert(&self.gram).ok_or(Error::GramSingular)?;
        // Row i of ψ: G X_i^T = s_i with s_i[k] = (-1)^{|i||k|} G[i][k].
        let images: Vec<AlgElement> = (0..dim)
            .map(|i| {
                let rhs: Vec<Scalar> = (0..dim)
                    .map(|k| signed(self.gram[i][k].clone(), self.parity(i).koszul(self.parity(k))))
                    .collect();
                (0..dim)
                    .map(|j| {
                        let mut s = Scalar::zero();
                        for (k, r) in rhs.iter().enumerate() {
                            s += &inv[j][k] * r;
                        }
                        (j, s)
                    })
                    .collect()
            })
            .collect();
        let apply = |a: &AlgElement| a.map_linear(|&k| images[k].clone());
        for i in 0..dim {
            if self.element_parity(&images[i]).is_some_and(|p| p != self.parity(i)) || images[i].is_zero() {
                return Err(Error::NotAutomorphism);
            }
            for j in 0..dim {
                let lhs = apply(&self.data.mult[i][j]);
                let rhs = self.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotAutomorphism);
                }
            }
        }
        Ok(images)
    }

    /// Transports the structure to the basis `e_i = Σ_j rows[i][j] b_j`.
    /// The unit must be kept in place and each new vector must be homogeneous.
    pub fn change_basis(&self, rows: &Matrix) -> Result<Self, Error> {
        let dim = self.dim();
        let inv = linear::invert(rows).ok_or_else(|| Error::InvalidData("change of basis is singular".into()))?;
        let new_vecs: Vec<AlgElement> = rows.iter().map(|r| self.as_element(r)).collect();
        if new_vecs[self.unit()] != Element::basis(self.unit()) {
            return Err(Error::InvalidData("change of basis must fix the unit".into()));
        }
        let parities = new_vecs
            .iter()
            .map(|v| self.element_parity(v).ok_or_else(|| Error::InvalidData("inhomogeneous basis vector".into())))
            .collect::<Result<Vec<_>, _>>()?;
        // old b_m = Σ_r inv[m][r] e_r
        let to_new = |a: &AlgElement| -> AlgElement {
            let mut out = Element::zero();
            for (m, c) in a {
                for (r, x) in inv[*m].iter().enumerate() {
                    out.add_term(r, c * x);
                }
            }
            out
        };
        let mult = (0..dim)
            .map(|i| (0..dim).map(|j| to_new(&self.mul(&new_vecs[i], &new_vecs[j]))).collect())
            .collect();
        let trace = new_vecs.iter().map(|v| self.trace(v)).collect();
        let labels = (0..dim)
            .map(|i| if i == self.unit() { self.label(i).to_string() } else { format!("e{i}") })
            .collect();
        FrobeniusSuperalgebra::new(AlgebraData {
            name: format!("{}'", self.name()),
            labels,
            parities,
            unit: self.unit(),
            mult,
            trace,
            trace_parity: self.trace_parity(),
            grading: None,
        })
    }

    /// Renders an element of `A` with basis labels, e.g. `-c` or `1/2*g + 1`.
    pub fn format_element(&self, a: &AlgElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (k, c)) in a.iter().enumerate() {
            let negative = linear::is_negative(c);
            let abs = if negative { -c } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if *k == self.unit() && self.label(*k) == "1" {
                out.push_str(&format_scalar(&abs));
            } else if abs.is_one() {
                out.push_str(self.label(*k));
            } else {
                out.push_str(&format!("{}*{}", format_scalar(&abs), self.label(*k)));
            }
        }
        out
    }
}

impl Element<TensorWord> {
    /// Applies a signed key map `word -> ±word'`.
    pub fn map_keys_signed(&self, mut f: impl FnMut(&TensorWord) -> (TensorWord, bool)) -> Self {
        let mut out = Element::zero();
        for (w, c) in self {
            let (w2, neg) = f(w);
            out.add_term(w2, signed(c.clone(), neg));
        }
        out
    }
}

/// The four ψ-twisted teleporter identities; each entry is `(name, holds)`.
/// For symmetric algebras `ψ = id` and both teleporters agree up to sign.
pub fn twisted_teleporter_identities(alg: &FrobeniusSuperalgebra) -> Result<Vec<(String, bool)>, Error> {
    let psi = alg.nakayama()?;
    let p = alg.trace_parity();
    let upper = alg.teleporter();
    let lower = alg.teleporter_lower();
    let mut out = Vec::new();
    for (a, psi_a) in psi.iter().enumerate() {
        let sign = sign_scalar(p.koszul(alg.parity(a)));
        let left = |x: &AlgElement| alg.on_strand(2, 2, x);
        let right = |x: &AlgElement| alg.on_strand(2, 1, x);
        let ea = Element::basis(a);
        let m = |x: &TensorElement, y: &TensorElement| alg.tensor_mul_unchecked(x, y);
        let name = alg.label(a);
        // token above-left of the upper teleporter jumps below-right
        out.push((
            format!("upper: (a⊗1)T = ±T(1⊗a), a = {name}"),
            m(&left(&ea), &upper) == m(&upper, &right(&ea)).scale(&sign),
        ));
        out.push((
            format!("upper: T(ψ(a)⊗1) = ±(1⊗a)T, a = {name}"),
            m(&upper, &left(psi_a)) == m(&right(&ea), &upper).scale(&sign),
        ));
        out.push((
            format!("lower: T'(a⊗1) = ±(1⊗a)T', a = {name}"),
            m(&lower, &left(&ea)) == m(&right(&ea), &lower).scale(&sign),
        ));
        out.push((
            format!("lower: (a⊗1)T' = ±T'(1⊗ψ(a)), a = {name}"),
            m(&left(&ea), &lower) == m(&lower, &right(psi_a)).scale(&sign),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
