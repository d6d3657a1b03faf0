//! The polynomial invariants: writhe polynomial, the four double-sum
//! f polynomials, and the three derived intersection polynomials, plus
//! symmetry reports and crossing-number lower bounds.

use crate::diagram::{GaussDiagram, Sign};
use crate::intersect::{ArcKind, ArcRef, IntersectionData};
use crate::laurent::{LaurentClass, LaurentPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantSet {
    pub writhe: i64,
    pub w: LaurentPoly,
    pub wbar: LaurentPoly,
    pub f01: LaurentPoly,
    pub f10: LaurentPoly,
    pub f00: LaurentPoly,
    pub f11: LaurentPoly,
    pub first: LaurentPoly,
    pub second: LaurentPoly,
    /// Residue class of f00 modulo integer multiples of wbar.
    pub third: LaurentClass,
}

pub fn writhe(d: &GaussDiagram) -> i64 {
    d.signs().iter().map(|s| s.value()).sum()
}

pub fn writhe_polynomial(d: &GaussDiagram) -> LaurentPoly {
    invariants_from_parts(d.signs(), &IntersectionData::build(d)).w
}

pub fn f_polynomial(d: &GaussDiagram, p: ArcKind, q: ArcKind) -> LaurentPoly {
    f_from_parts(d.signs(), &IntersectionData::build(d), p, q)
}

pub fn first_intersection(d: &GaussDiagram) -> LaurentPoly {
    all_invariants(d).first
}

pub fn second_intersection(d: &GaussDiagram) -> LaurentPoly {
    all_invariants(d).second
}

pub fn third_intersection(d: &GaussDiagram) -> LaurentClass {
    all_invariants(d).third
}

pub fn all_invariants(d: &GaussDiagram) -> InvariantSet {
    invariants_from_parts(d.signs(), &IntersectionData::build(d))
}

fn f_from_parts(signs: &[Sign], data: &IntersectionData, p: ArcKind, q: ArcKind) -> LaurentPoly {
    let n = signs.len();
    let mut f = LaurentPoly::zero();
    for i in 0..n {
        for j in 0..n {
            let e = signs[i].value() * signs[j].value();
            let exp = data.pairing(ArcRef { chord: i, kind: p }, ArcRef { chord: j, kind: q });
            f = f + LaurentPoly::monomial_minus_one(exp).scale(e);
        }
    }
    f
}

/// Everything below the diagram level needs only the chord signs and the
/// pairing data, so precomputed tables can stand in for a diagram.
pub fn invariants_from_parts(signs: &[Sign], data: &IntersectionData) -> InvariantSet {
    assert_eq!(signs.len(), data.n(), "sign count must match chord count");
    let writhe: i64 = signs.iter().map(|s| s.value()).sum();
    let w: LaurentPoly = signs
        .iter()
        .zip(data.index())
        .map(|(s, &ni)| LaurentPoly::monomial_minus_one(ni).scale(s.value()))
        .sum();
    let wbar = &w + &w.substitute_inverse();
    let f01 = f_from_parts(signs, data, ArcKind::Gamma, ArcKind::GammaBar);
    let f10 = f_from_parts(signs, data, ArcKind::GammaBar, ArcKind::Gamma);
    let f00 = f_from_parts(signs, data, ArcKind::Gamma, ArcKind::Gamma);
    let f11 = f_from_parts(signs, data, ArcKind::GammaBar, ArcKind::GammaBar);
    let first = &f01 - &w.scale(writhe);
    let second = &(&f00 + &f11) - &wbar.scale(writhe);
    let third = LaurentClass::new(f00.clone(), wbar.clone());
    InvariantSet {
        writhe,
        w,
        wbar,
        f01,
        f10,
        f00,
        f11,
        first,
        second,
        third,
    }
}

fn positive_part(v: Option<i64>) -> Option<i64> {
    v.filter(|&x| x > 0)
}

/// (contributor, bound) pairs for the real crossing number, one per
/// invariant that carries information.
pub fn crossing_bound_candidates(s: &InvariantSet) -> Vec<(&'static str, i64)> {
    let mut out = Vec::new();
    for (name, deg) in [
        ("W", s.w.max_degree()),
        ("I", s.first.max_degree()),
        ("II", s.second.max_degree()),
        ("III", s.third.max_degree()),
    ] {
        if let Some(b) = positive_part(deg.map(|d| d + 1)) {
            out.push((name, b));
        }
    }
    out
}

/// Largest lower bound for the real crossing number; 0 when no invariant
/// carries information.
pub fn crossing_lower_bound(s: &InvariantSet) -> i64 {
    crossing_bound_candidates(s)
        .into_iter()
        .map(|(_, b)| b)
        .max()
        .unwrap_or(0)
}

pub fn virtual_crossing_bound_candidates(s: &InvariantSet) -> Vec<(&'static str, i64)> {
    let mut out = Vec::new();
    for (name, deg) in [
        ("W", s.w.max_degree()),
        ("I", s.first.max_degree()),
        ("II", s.second.max_degree()),
        ("III", s.third.max_degree()),
    ] {
        if let Some(b) = positive_part(deg) {
            out.push((name, b));
        }
    }
    out
}

pub fn virtual_crossing_lower_bound(s: &InvariantSet) -> i64 {
    virtual_crossing_bound_candidates(s)
        .into_iter()
        .map(|(_, b)| b)
        .max()
        .unwrap_or(0)
}

/// The three conditions that together make the eight symmetry variants of a
/// knot mutually distinct.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DistinctnessReport {
    /// 2 * III differs from II modulo wbar.
    pub doubled_third_differs_from_second: bool,
    /// W is not invariant under t -> 1/t.
    pub w_asymmetric: bool,
    /// W differs from -W(1/t), or I differs from I(1/t).
    pub mirror_detected: bool,
    pub distinct: bool,
}

pub fn symmetry_distinctness(s: &InvariantSet) -> DistinctnessReport {
    let doubled = LaurentClass::new(s.f00.scale(2), s.wbar.clone());
    let second_class = LaurentClass::new(s.second.clone(), s.wbar.clone());
    let c1 = !doubled.class_equal(&second_class);
    let c2 = s.w != s.w.substitute_inverse();
    let c3 = s.w != -&s.w.substitute_inverse() || s.first != s.first.substitute_inverse();
    DistinctnessReport {
        doubled_third_differs_from_second: c1,
        w_asymmetric: c2,
        mirror_detected: c3,
        distinct: c1 && c2 && c3,
    }
}

impl DistinctnessReport {
    pub fn conditions(&self) -> [(&'static str, bool); 3] {
        [
            (
                "2*III != II (mod Wbar)",
                self.doubled_third_differs_from_second,
            ),
            ("W(t) != W(1/t)", self.w_asymmetric),
            ("W(t) != -W(1/t) or I(t) != I(1/t)", self.mirror_detected),
        ]
    }
}

#[derive(Clone, Debug, Default)]
pub struct SymmetryCheck {
    pub failures: Vec<String>,
}

impl SymmetryCheck {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recomputes every invariant on the reversed, role-flipped and mirrored
/// diagrams and checks the full battery of internal identities relating
/// them. Any failed identity lands in the report by name.
pub fn symmetry_identity_check(d: &GaussDiagram) -> SymmetryCheck {
    let k = all_invariants(d);
    let r = all_invariants(&d.reverse());
    let v = all_invariants(&d.vertical_mirror());
    let h = all_invariants(&d.horizontal_mirror());
    let mut out = SymmetryCheck::default();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            out.failures.push(name.to_string());
        }
    };

    let w_inv = k.w.substitute_inverse();
    check("W(-K) = W(1/t)", r.w == w_inv);
    check("W(K#) = -W(1/t)", v.w == -&w_inv);
    check("W(K*) = -W(1/t)", h.w == -&w_inv);
    check("Wbar(-K) = Wbar", r.wbar == k.wbar);
    check("Wbar(K#) = -Wbar", v.wbar == -&k.wbar);
    check("Wbar(K*) = -Wbar", h.wbar == -&k.wbar);

    let first_inv = k.first.substitute_inverse();
    check("I(-K) = I(1/t)", r.first == first_inv);
    check("I(K#) = I(1/t)", v.first == first_inv);
    check("I(K*) = I(1/t)", h.first == first_inv);
    check("II(-K) = II", r.second == k.second);
    check("II(K#) = II", v.second == k.second);
    check("II(K*) = II", h.second == k.second);

    let complement = LaurentClass::new(&k.second - &k.f00, k.wbar.clone());
    check("III(-K) = II - III", r.third.class_equal(&complement));
    check("III(K#) = II - III", v.third.class_equal(&complement));
    check("III(K*) = III", h.third.class_equal(&k.third));

    check("f10(D) = f01(D#)", k.f10 == v.f01);
    check("f11(D) = f00(D#)", k.f11 == v.f00);
    check(
        "f10 - w*W(1/t) = I(1/t)",
        &k.f10 - &w_inv.scale(k.writhe) == first_inv,
    );
    check(
        "f11 = II - f00 (mod Wbar)",
        LaurentClass::new(k.f11.clone(), k.wbar.clone())
            .class_equal(&LaurentClass::new(&k.second - &k.f00, k.wbar.clone())),
    );

    check("Wbar reciprocal", k.wbar.is_reciprocal());
    check("f00 reciprocal", k.f00.is_reciprocal());
    check("f11 reciprocal", k.f11.is_reciprocal());
    check("II reciprocal", k.second.is_reciprocal());

    let n = d.n() as i64;
    if n >= 2 {
        for (name, f) in [
            ("f01 degree bound", &k.f01),
            ("f10 degree bound", &k.f10),
            ("f00 degree bound", &k.f00),
            ("f11 degree bound", &k.f11),
        ] {
            // exponents live strictly inside (-n, n)
            let hi = f.max_degree().unwrap_or(0) < n;
            let lo = f.min_degree().unwrap_or(0) > -n;
            check(name, hi && lo);
        }
    }
    out
}
