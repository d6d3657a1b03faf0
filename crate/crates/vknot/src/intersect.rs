//! Intersection numbers of the chord cycles on the supporting surface,
//! computed combinatorially from the Gauss diagram.
//!
//! Each chord `i` cuts the knot circle into the arc from its Over endpoint
//! forward to its Under endpoint (`Gamma`) and the complementary arc
//! (`GammaBar`). Everything downstream reduces to the index vector
//! `n_i = gamma_i . gammabar_i` and the antisymmetric matrix
//! `A[i][j] = gamma_i . gamma_j`.

use crate::diagram::{Endpoint, GaussDiagram, Role};
use std::fmt::Write;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArcKind {
    Gamma,
    GammaBar,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ArcRef {
    pub chord: usize,
    pub kind: ArcKind,
}

impl ArcRef {
    pub fn gamma(chord: usize) -> Self {
        Self {
            chord,
            kind: ArcKind::Gamma,
        }
    }

    pub fn gamma_bar(chord: usize) -> Self {
        Self {
            chord,
            kind: ArcKind::GammaBar,
        }
    }
}

/// Positions strictly inside the arc, in arc order.
fn interior_positions(d: &GaussDiagram, a: ArcRef) -> Vec<usize> {
    let o = d.over_position(a.chord);
    let u = d.under_position(a.chord);
    match a.kind {
        ArcKind::Gamma => d.positions_between(o, u),
        ArcKind::GammaBar => d.positions_between(u, o),
    }
}

pub fn interior_endpoints(d: &GaussDiagram, a: ArcRef) -> Vec<Endpoint> {
    interior_positions(d, a)
        .into_iter()
        .map(|p| d.endpoints()[p])
        .collect()
}

/// `n_i`: sum of endpoint signs strictly inside the forward arc of chord `i`.
pub fn index(d: &GaussDiagram, i: usize) -> i64 {
    interior_positions(d, ArcRef::gamma(i))
        .into_iter()
        .map(|p| d.endpoint_sign(p))
        .sum()
}

/// `S(a, b)`: sum of endpoint signs over interior endpoints of `a` whose
/// partner lies interior to `b`.
pub fn s_count(d: &GaussDiagram, a: ArcRef, b: ArcRef) -> i64 {
    assert_ne!(a.chord, b.chord, "s_count: arcs must be on distinct chords");
    let mut in_b = vec![false; d.endpoints().len()];
    for p in interior_positions(d, b) {
        in_b[p] = true;
    }
    interior_positions(d, a)
        .into_iter()
        .filter(|&p| in_b[d.partner_position(p)])
        .map(|p| d.endpoint_sign(p))
        .sum()
}

/// `A[i][j]`. For linked chords the half-integer correction enters with
/// sigma = +1 exactly when chord j's Under endpoint sits inside the forward
/// arc of chord i.
pub fn gamma_gamma(d: &GaussDiagram, i: usize, j: usize) -> i64 {
    gamma_gamma_signed(d, i, j, 1)
}

fn gamma_gamma_signed(d: &GaussDiagram, i: usize, j: usize, flip: i64) -> i64 {
    if i == j {
        return 0;
    }
    let s = s_count(d, ArcRef::gamma(i), ArcRef::gamma(j));
    if !d.linked(i, j) {
        return s;
    }
    let inside: Vec<Endpoint> = interior_endpoints(d, ArcRef::gamma(i))
        .into_iter()
        .filter(|e| e.chord == j)
        .collect();
    debug_assert_eq!(inside.len(), 1);
    let sigma = match inside[0].role {
        Role::Under => 1,
        Role::Over => -1,
    };
    s + flip * sigma * (d.sign(i).value() + d.sign(j).value()) / 2
}

/// Redundant direct evaluation of any off-diagonal pairing, bypassing the
/// linearity reduction: `S(a, b)` plus, for linked chords, half the
/// difference of the two trapped endpoint signs.
pub fn direct_pairing_oracle(d: &GaussDiagram, a: ArcRef, b: ArcRef) -> i64 {
    assert_ne!(
        a.chord, b.chord,
        "direct_pairing_oracle: arcs must be on distinct chords"
    );
    let s = s_count(d, a, b);
    if !d.linked(a.chord, b.chord) {
        return s;
    }
    let trapped = |arc: ArcRef, chord: usize| -> i64 {
        let hits: Vec<usize> = interior_positions(d, arc)
            .into_iter()
            .filter(|&p| d.endpoints()[p].chord == chord)
            .collect();
        debug_assert_eq!(hits.len(), 1);
        d.endpoint_sign(hits[0])
    };
    s + (trapped(a, b.chord) - trapped(b, a.chord)) / 2
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionData {
    index: Vec<i64>,
    a: Vec<Vec<i64>>,
}

impl IntersectionData {
    pub fn build(d: &GaussDiagram) -> Self {
        let n = d.n();
        Self {
            index: (0..n).map(|i| index(d, i)).collect(),
            a: (0..n)
                .map(|i| (0..n).map(|j| gamma_gamma(d, i, j)).collect())
                .collect(),
        }
    }

    /// Like `build` but with the linked-correction sign reversed. This is a
    /// deliberately wrong variant kept as a negative control: the move
    /// invariance suite must fail against it.
    pub fn build_flipped_sigma(d: &GaussDiagram) -> Self {
        let n = d.n();
        Self {
            index: (0..n).map(|i| index(d, i)).collect(),
            a: (0..n)
                .map(|i| (0..n).map(|j| gamma_gamma_signed(d, i, j, -1)).collect())
                .collect(),
        }
    }

    /// Assemble from a precomputed index vector and pairing matrix.
    /// Panics when the matrix is not square, antisymmetric, zero-diagonal
    /// and of matching size.
    pub fn from_parts(index: Vec<i64>, a: Vec<Vec<i64>>) -> Self {
        let n = index.len();
        assert_eq!(a.len(), n, "matrix rows");
        for (i, row) in a.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix columns");
            for j in 0..n {
                assert_eq!(row[j], -a[j][i], "antisymmetry at ({i},{j})");
            }
            assert_eq!(row[i], 0, "diagonal at {i}");
        }
        Self { index, a }
    }

    pub fn n(&self) -> usize {
        self.index.len()
    }

    pub fn index(&self) -> &[i64] {
        &self.index
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Any pairing of two chord arcs, via the linearity reduction. Valid for
    /// all chord pairs including equal chords.
    pub fn pairing(&self, a: ArcRef, b: ArcRef) -> i64 {
        use ArcKind::*;
        let (i, j) = (a.chord, b.chord);
        match (a.kind, b.kind) {
            (Gamma, Gamma) => self.a[i][j],
            (Gamma, GammaBar) => self.index[i] - self.a[i][j],
            (GammaBar, Gamma) => -self.index[j] - self.a[i][j],
            (GammaBar, GammaBar) => self.index[j] - self.index[i] + self.a[i][j],
        }
    }

    /// The three pairing tables as aligned integer grids.
    pub fn table_dump(&self) -> String {
        let n = self.n();
        let grid = |ka: ArcKind, kb: ArcKind| -> Vec<Vec<i64>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            self.pairing(
                                ArcRef { chord: i, kind: ka },
                                ArcRef { chord: j, kind: kb },
                            )
                        })
                        .collect()
                })
                .collect()
        };
        let sections = [
            ("gamma.gammabar", grid(ArcKind::Gamma, ArcKind::GammaBar)),
            ("gamma.gamma", grid(ArcKind::Gamma, ArcKind::Gamma)),
            (
                "gammabar.gammabar",
                grid(ArcKind::GammaBar, ArcKind::GammaBar),
            ),
        ];
        let width = sections
            .iter()
            .flat_map(|(_, g)| g.iter().flatten())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (name, g) in &sections {
            let _ = writeln!(out, "{name}:");
            for row in g {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                let _ = writeln!(out, "  {}", cells.join(" "));
            }
        }
        out
    }
}
