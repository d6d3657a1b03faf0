//! Reidemeister moves on Gauss diagrams: kink insertion/deletion, paired
//! insertion/deletion, and the triangle move. The engine is sound (every
//! move preserves the knot type) but makes no completeness claim.
//!
//! Gap convention: a diagram with L endpoints has gaps 0..max(L,1); gap g
//! inserts before stored position g. Gap L is the same place as gap 0 and
//! is rejected to keep parameters unique.

use crate::diagram::{DiagramError, Endpoint, GaussDiagram, Role, Sign};
use rand::Rng;
use std::fmt;

pub const DEFAULT_MAX_CHORDS: usize = 12;

/// Which side of the new kink chord is empty.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KinkType {
    /// Over then Under inserted consecutively: the forward arc is empty.
    GammaEmpty,
    /// Under then Over: the complementary arc is empty.
    GammaBarEmpty,
}

impl fmt::Display for KinkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KinkType::GammaEmpty => "gamma-empty",
            KinkType::GammaBarEmpty => "gammabar-empty",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum R2Variant {
    /// Both Over endpoints at one gap, both Under at the other, same
    /// chord order: the two chords end up linked.
    Parallel,
    /// Under pair in reversed chord order: nested, unlinked chords.
    Antiparallel,
}

impl fmt::Display for R2Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            R2Variant::Parallel => "parallel",
            R2Variant::Antiparallel => "antiparallel",
        })
    }
}

/// A triangle move site: the first positions of the three consecutive
/// endpoint pairs, by strand height.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct R3Spec {
    pub top: usize,
    pub middle: usize,
    pub bottom: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    R1Add {
        gap: usize,
        sign: Sign,
        kink: KinkType,
    },
    R1Remove {
        chord: usize,
    },
    R2Add {
        p: usize,
        q: usize,
        variant: R2Variant,
        sign: Sign,
    },
    R2Remove {
        a: usize,
        b: usize,
    },
    R3(R3Spec),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::R1Add { gap, sign, kink } => {
                write!(f, "r1-add(gap={gap}, sign={sign}, kink={kink})")
            }
            Move::R1Remove { chord } => write!(f, "r1-remove(chord={chord})"),
            Move::R2Add {
                p,
                q,
                variant,
                sign,
            } => {
                write!(f, "r2-add(p={p}, q={q}, {variant}, sign={sign})")
            }
            Move::R2Remove { a, b } => write!(f, "r2-remove(chords=({a},{b}))"),
            Move::R3(s) => write!(
                f,
                "r3(top={}, middle={}, bottom={})",
                s.top, s.middle, s.bottom
            ),
        }
    }
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("gap {0} out of range")]
    InvalidGap(usize),
    #[error("no chord {0}")]
    NoSuchChord(usize),
    #[error("chord {0} has no empty side")]
    NotIsolated(usize),
    #[error("chords {0} and {1} do not form a cancellable pair")]
    R2Pattern(usize, usize),
    #[error("triangle spec does not match the diagram")]
    StaleR3,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn gap_count(d: &GaussDiagram) -> usize {
    d.endpoints().len().max(1)
}

fn insert_pair(endpoints: &[Endpoint], gap: usize, pair: [Endpoint; 2]) -> Vec<Endpoint> {
    let mut out = Vec::with_capacity(endpoints.len() + 2);
    out.extend_from_slice(&endpoints[..gap.min(endpoints.len())]);
    out.extend_from_slice(&pair);
    out.extend_from_slice(&endpoints[gap.min(endpoints.len())..]);
    out
}

pub fn r1_add(
    d: &GaussDiagram,
    gap: usize,
    sign: Sign,
    kink: KinkType,
) -> Result<GaussDiagram, MoveError> {
    if gap >= gap_count(d) {
        return Err(MoveError::InvalidGap(gap));
    }
    let c = d.n();
    let over = Endpoint {
        chord: c,
        role: Role::Over,
    };
    let under = Endpoint {
        chord: c,
        role: Role::Under,
    };
    let pair = match kink {
        KinkType::GammaEmpty => [over, under],
        KinkType::GammaBarEmpty => [under, over],
    };
    let endpoints = insert_pair(d.endpoints(), gap, pair);
    let mut signs = d.signs().to_vec();
    signs.push(sign);
    Ok(GaussDiagram::new(endpoints, signs)?)
}

/// Chords whose two endpoints are cyclically adjacent.
pub fn isolated_chords(d: &GaussDiagram) -> Vec<usize> {
    let l = d.endpoints().len();
    (0..d.n())
        .filter(|&c| {
            let o = d.over_position(c);
            let u = d.under_position(c);
            (o + 1) % l == u || (u + 1) % l == o
        })
        .collect()
}

fn remove_chords(d: &GaussDiagram, gone: &[usize]) -> GaussDiagram {
    let endpoints: Vec<Endpoint> = d
        .endpoints()
        .iter()
        .filter(|e| !gone.contains(&e.chord))
        .map(|e| Endpoint {
            chord: e.chord - gone.iter().filter(|&&g| g < e.chord).count(),
            role: e.role,
        })
        .collect();
    let signs: Vec<Sign> = d
        .signs()
        .iter()
        .enumerate()
        .filter(|(c, _)| !gone.contains(c))
        .map(|(_, &s)| s)
        .collect();
    GaussDiagram::new(endpoints, signs).expect("chord removal keeps the pairing valid")
}

pub fn r1_remove(d: &GaussDiagram, chord: usize) -> Result<GaussDiagram, MoveError> {
    if chord >= d.n() {
        return Err(MoveError::NoSuchChord(chord));
    }
    if !isolated_chords(d).contains(&chord) {
        return Err(MoveError::NotIsolated(chord));
    }
    Ok(remove_chords(d, &[chord]))
}

pub fn r2_add(
    d: &GaussDiagram,
    p: usize,
    q: usize,
    variant: R2Variant,
    sign: Sign,
) -> Result<GaussDiagram, MoveError> {
    let gaps = gap_count(d);
    if p >= gaps {
        return Err(MoveError::InvalidGap(p));
    }
    if q >= gaps {
        return Err(MoveError::InvalidGap(q));
    }
    let a = d.n();
    let b = a + 1;
    let ep = |chord, role| Endpoint { chord, role };
    let p_pair = [ep(a, Role::Over), ep(b, Role::Over)];
    let q_pair = match variant {
        R2Variant::Parallel => [ep(a, Role::Under), ep(b, Role::Under)],
        R2Variant::Antiparallel => [ep(b, Role::Under), ep(a, Role::Under)],
    };
    // insert the later pair first so the earlier gap index stays valid;
    // for p == q the p pair comes first
    let endpoints = if p <= q {
        insert_pair(&insert_pair(d.endpoints(), q, q_pair), p, p_pair)
    } else {
        insert_pair(&insert_pair(d.endpoints(), p, p_pair), q, q_pair)
    };
    let mut signs = d.signs().to_vec();
    signs.push(sign);
    signs.push(sign.negated());
    Ok(GaussDiagram::new(endpoints, signs)?)
}

fn adjacent(l: usize, x: usize, y: usize) -> bool {
    (x + 1) % l == y || (y + 1) % l == x
}

/// Chord pairs (a < b) that cancel by a paired deletion: the two Over
/// endpoints sit side by side, the two Under endpoints sit side by side,
/// and the signs are opposite.
pub fn r2_removable_pairs(d: &GaussDiagram) -> Vec<(usize, usize)> {
    let l = d.endpoints().len();
    let mut out = Vec::new();
    for a in 0..d.n() {
        for b in a + 1..d.n() {
            if d.sign(a) == d.sign(b) {
                continue;
            }
            if adjacent(l, d.over_position(a), d.over_position(b))
                && adjacent(l, d.under_position(a), d.under_position(b))
            {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn r2_remove(d: &GaussDiagram, a: usize, b: usize) -> Result<GaussDiagram, MoveError> {
    if a >= d.n() {
        return Err(MoveError::NoSuchChord(a));
    }
    if b >= d.n() {
        return Err(MoveError::NoSuchChord(b));
    }
    let (lo, hi) = (a.min(b), a.max(b));
    if !r2_removable_pairs(d).contains(&(lo, hi)) {
        return Err(MoveError::R2Pattern(a, b));
    }
    Ok(remove_chords(d, &[lo, hi]))
}

/// All triangle move sites. A site is three disjoint pairs of consecutive
/// positions covering the six endpoints of three distinct chords, no pair
/// on a single chord, with roles forming a strand height order (one Over
/// pair on top, one Under pair at the bottom, one mixed pair in the middle
/// whose Over partners into the bottom pair and whose Under partners into
/// the top pair) and with strand orientations compatible with a planar
/// triangle. Height order alone is not enough: without the orientation
/// test some sites change the invariants.
pub fn r3_applicable(d: &GaussDiagram) -> Vec<R3Spec> {
    let l = d.endpoints().len();
    if d.n() < 3 {
        return Vec::new();
    }
    let eps = d.endpoints();
    let mut out = Vec::new();
    let pair_ok = |g: usize| eps[g].chord != eps[(g + 1) % l].chord;
    for g1 in 0..l {
        for g2 in g1 + 1..l {
            for g3 in g2 + 1..l {
                let starts = [g1, g2, g3];
                let mut positions = Vec::with_capacity(6);
                for &g in &starts {
                    positions.push(g);
                    positions.push((g + 1) % l);
                }
                let mut uniq = positions.clone();
                uniq.sort_unstable();
                uniq.dedup();
                if uniq.len() != 6 {
                    continue;
                }
                if !starts.iter().all(|&g| pair_ok(g)) {
                    continue;
                }
                let mut chords: Vec<usize> = positions.iter().map(|&p| eps[p].chord).collect();
                chords.sort_unstable();
                chords.dedup();
                if chords.len() != 3 {
                    continue;
                }
                if let Some(spec) = classify_triangle(d, starts) {
                    out.push(spec);
                }
            }
        }
    }
    out
}

fn classify_triangle(d: &GaussDiagram, starts: [usize; 3]) -> Option<R3Spec> {
    let l = d.endpoints().len();
    let eps = d.endpoints();
    let roles = |g: usize| (eps[g].role, eps[(g + 1) % l].role);
    let mut top = None;
    let mut middle = None;
    let mut bottom = None;
    for g in starts {
        match roles(g) {
            (Role::Over, Role::Over) => top = top.xor(Some(g)),
            (Role::Under, Role::Under) => bottom = bottom.xor(Some(g)),
            _ => middle = middle.xor(Some(g)),
        }
    }
    let (top, middle, bottom) = (top?, middle?, bottom?);
    let in_pair = |pos: usize, g: usize| pos == g || pos == (g + 1) % l;

    // the middle pair holds one Over and one Under endpoint
    let (m_over, m_under) = if eps[middle].role == Role::Over {
        (middle, (middle + 1) % l)
    } else {
        ((middle + 1) % l, middle)
    };
    // chord x runs top-middle, z runs middle-bottom, y runs top-bottom
    if !in_pair(d.partner_position(m_over), bottom) {
        return None;
    }
    if !in_pair(d.partner_position(m_under), top) {
        return None;
    }
    let x = eps[m_under].chord;
    let z = eps[m_over].chord;
    let y_candidates: Vec<usize> = [top, (top + 1) % l]
        .into_iter()
        .map(|p| eps[p].chord)
        .filter(|&c| c != x && c != z)
        .collect();
    if y_candidates.len() != 1 {
        return None;
    }
    let y = y_candidates[0];

    // orientation compatibility: each strand traverses its two pairs in a
    // direction; the three directions must admit a planar triangle
    let dir = |g: usize, c: usize| if eps[g].chord == c { 1 } else { -1 };
    let at = dir(top, y);
    let am = dir(middle, z);
    let ab = dir(bottom, z);
    let u = d.sign(x).value() * at * am;
    let v = d.sign(y).value() * at * ab;
    let w = d.sign(z).value() * am * ab;
    if u != v || v != w {
        return None;
    }
    Some(R3Spec {
        top,
        middle,
        bottom,
    })
}

pub fn r3_apply(d: &GaussDiagram, spec: R3Spec) -> Result<GaussDiagram, MoveError> {
    if !r3_applicable(d).contains(&spec) {
        return Err(MoveError::StaleR3);
    }
    let l = d.endpoints().len();
    let mut endpoints = d.endpoints().to_vec();
    for g in [spec.top, spec.middle, spec.bottom] {
        endpoints.swap(g, (g + 1) % l);
    }
    Ok(GaussDiagram::new(endpoints, d.signs().to_vec())?)
}

pub fn apply(d: &GaussDiagram, m: &Move) -> Result<GaussDiagram, MoveError> {
    match *m {
        Move::R1Add { gap, sign, kink } => r1_add(d, gap, sign, kink),
        Move::R1Remove { chord } => r1_remove(d, chord),
        Move::R2Add {
            p,
            q,
            variant,
            sign,
        } => r2_add(d, p, q, variant, sign),
        Move::R2Remove { a, b } => r2_remove(d, a, b),
        Move::R3(spec) => r3_apply(d, spec),
    }
}

/// Pick a uniformly random applicable move: first a kind among those with
/// at least one instance (insertions excluded when they would exceed
/// `max_chords`), then an instance of that kind. `None` when nothing
/// applies.
pub fn random_move<R: Rng>(d: &GaussDiagram, rng: &mut R, max_chords: usize) -> Option<Move> {
    let n = d.n();
    let gaps = gap_count(d);
    let isolated = isolated_chords(d);
    let pairs = r2_removable_pairs(d);
    let triangles = r3_applicable(d);

    #[derive(Clone, Copy)]
    enum Kind {
        R1Add,
        R1Remove,
        R2Add,
        R2Remove,
        R3,
    }
    let mut kinds = Vec::with_capacity(5);
    if n < max_chords {
        kinds.push(Kind::R1Add);
    }
    if !isolated.is_empty() {
        kinds.push(Kind::R1Remove);
    }
    if n + 2 <= max_chords {
        kinds.push(Kind::R2Add);
    }
    if !pairs.is_empty() {
        kinds.push(Kind::R2Remove);
    }
    if !triangles.is_empty() {
        kinds.push(Kind::R3);
    }
    if kinds.is_empty() {
        return None;
    }
    let sign = |rng: &mut R| {
        if rng.gen::<bool>() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    Some(match kinds[rng.gen_range(0..kinds.len())] {
        Kind::R1Add => Move::R1Add {
            gap: rng.gen_range(0..gaps),
            sign: sign(rng),
            kink: if rng.gen::<bool>() {
                KinkType::GammaEmpty
            } else {
                KinkType::GammaBarEmpty
            },
        },
        Kind::R1Remove => Move::R1Remove {
            chord: isolated[rng.gen_range(0..isolated.len())],
        },
        Kind::R2Add => Move::R2Add {
            p: rng.gen_range(0..gaps),
            q: rng.gen_range(0..gaps),
            variant: if rng.gen::<bool>() {
                R2Variant::Parallel
            } else {
                R2Variant::Antiparallel
            },
            sign: sign(rng),
        },
        Kind::R2Remove => {
            let (a, b) = pairs[rng.gen_range(0..pairs.len())];
            Move::R2Remove { a, b }
        }
        Kind::R3 => Move::R3(triangles[rng.gen_range(0..triangles.len())]),
    })
}

pub struct Walk {
    pub diagram: GaussDiagram,
    pub log: Vec<Move>,
}

/// Deterministic random move sequence from a seed. Stops early only if no
/// move applies.
pub fn random_walk(d: &GaussDiagram, steps: usize, seed: u64, max_chords: usize) -> Walk {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut current = d.clone();
    let mut log = Vec::new();
    for _ in 0..steps {
        let Some(m) = random_move(&current, &mut rng, max_chords) else {
            break;
        };
        current = apply(&current, &m).expect("generated moves always apply");
        log.push(m);
    }
    Walk {
        diagram: current,
        log,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{all_invariants, InvariantSet};
    use crate::laurent::LaurentPoly;

    fn d(s: &str) -> GaussDiagram {
        s.parse().unwrap()
    }

    fn same_knot_invariants(a: &InvariantSet, b: &InvariantSet) -> bool {
        a.w == b.w && a.first == b.first && a.second == b.second && a.third.class_equal(&b.third)
    }

    #[test]
    fn kink_insertion_on_the_unknot() {
        let u = GaussDiagram::unknot();
        let cases = [
            (Sign::Plus, KinkType::GammaEmpty, "O1+U1+"),
            (Sign::Minus, KinkType::GammaEmpty, "O1-U1-"),
            (Sign::Minus, KinkType::GammaBarEmpty, "U1-O1-"),
            (Sign::Plus, KinkType::GammaBarEmpty, "U1+O1+"),
        ];
        for (sign, kink, want) in cases {
            let k = r1_add(&u, 0, sign, kink).unwrap();
            assert_eq!(k.code_as_stored(), want);
        }
        assert_eq!(
            r1_add(&u, 1, Sign::Plus, KinkType::GammaEmpty).unwrap_err(),
            MoveError::InvalidGap(1)
        );
    }

    #[test]
    fn kink_roundtrip_restores_the_diagram() {
        for seed in 0..30 {
            let k = GaussDiagram::random_from_seed(3, seed);
            for gap in 0..6 {
                for kink in [KinkType::GammaEmpty, KinkType::GammaBarEmpty] {
                    let bigger = r1_add(&k, gap, Sign::Minus, kink).unwrap();
                    assert!(isolated_chords(&bigger).contains(&3));
                    let back = r1_remove(&bigger, 3).unwrap();
                    assert_eq!(back.code_as_stored(), k.code_as_stored());
                }
            }
        }
    }

    #[test]
    fn kink_removal_requires_an_empty_side() {
        let trefoil = d("O1+U2+O3+U1+O2+U3+");
        for c in 0..3 {
            assert_eq!(
                r1_remove(&trefoil, c).unwrap_err(),
                MoveError::NotIsolated(c)
            );
        }
        assert_eq!(
            r1_remove(&trefoil, 7).unwrap_err(),
            MoveError::NoSuchChord(7)
        );
    }

    #[test]
    fn paired_insertion_patterns() {
        let u = GaussDiagram::unknot();
        let anti = r2_add(&u, 0, 0, R2Variant::Antiparallel, Sign::Plus).unwrap();
        assert_eq!(anti.code_as_stored(), "O1+O2-U2-U1+");
        assert!(!anti.linked(0, 1));
        let par = r2_add(&u, 0, 0, R2Variant::Parallel, Sign::Plus).unwrap();
        assert_eq!(par.code_as_stored(), "O1+O2-U1+U2-");
        assert!(par.linked(0, 1));
    }

    #[test]
    fn paired_roundtrip_restores_the_diagram() {
        for seed in 0..40 {
            let k = GaussDiagram::random_from_seed(2 + seed as usize % 3, seed);
            let gaps = k.endpoints().len();
            let p = seed as usize % gaps;
            let q = (seed as usize * 3 + 1) % gaps;
            for variant in [R2Variant::Parallel, R2Variant::Antiparallel] {
                let bigger = r2_add(&k, p, q, variant, Sign::Minus).unwrap();
                let n = k.n();
                assert!(r2_removable_pairs(&bigger).contains(&(n, n + 1)));
                let back = r2_remove(&bigger, n, n + 1).unwrap();
                assert_eq!(back.code_as_stored(), k.code_as_stored());
            }
        }
    }

    #[test]
    fn paired_removal_rejects_bad_patterns() {
        // equal signs
        assert_eq!(
            r2_remove(&d("O1+O2+U2+U1+"), 0, 1).unwrap_err(),
            MoveError::R2Pattern(0, 1)
        );
        // endpoints not side by side
        assert_eq!(
            r2_remove(&d("O1+U2+O3+U1+O2+U3+"), 0, 1).unwrap_err(),
            MoveError::R2Pattern(0, 1)
        );
        // interloper between the Under endpoints
        assert_eq!(
            r2_remove(&d("O1+O2-U2-O3+U3+U1+"), 0, 1).unwrap_err(),
            MoveError::R2Pattern(0, 1)
        );
    }

    #[test]
    fn triangle_sites_absent_on_tiny_diagrams() {
        assert!(r3_applicable(&GaussDiagram::unknot()).is_empty());
        assert!(r3_applicable(&d("O1+O2-U1+U2-")).is_empty());
    }

    fn first_diagram_with_triangle() -> (GaussDiagram, Vec<R3Spec>) {
        for seed in 0..500 {
            let k = GaussDiagram::random_from_seed(4 + seed as usize % 3, seed);
            let specs = r3_applicable(&k);
            if !specs.is_empty() {
                return (k, specs);
            }
        }
        panic!("no triangle site found in the seed range");
    }

    #[test]
    fn triangle_move_is_an_involution_preserving_signs() {
        let (k, specs) = first_diagram_with_triangle();
        for spec in specs {
            let once = r3_apply(&k, spec).unwrap();
            assert_eq!(once.signs(), k.signs());
            assert_eq!(once.n(), k.n());
            let twice = r3_apply(&once, spec).unwrap();
            assert_eq!(twice.code_as_stored(), k.code_as_stored());
        }
    }

    #[test]
    fn triangle_spec_goes_stale_on_other_diagrams() {
        let (k, specs) = first_diagram_with_triangle();
        let other = r1_add(&k, 0, Sign::Plus, KinkType::GammaEmpty).unwrap();
        assert_eq!(r3_apply(&other, specs[0]).unwrap_err(), MoveError::StaleR3);
    }

    #[test]
    fn height_consistent_but_misoriented_triangle_is_rejected() {
        // swapping this site changes f00, so accepting it would break
        // invariance; the orientation test must filter it out
        let k = d("U1+U2-U3-O1+O3-U4-O5+U5+O2-O4-");
        let bad = R3Spec {
            top: 8,
            middle: 4,
            bottom: 1,
        };
        assert!(!r3_applicable(&k).contains(&bad));
        let swapped = d("U1+U3-U2-O1+U4-O3-O5+U5+O4-O2-");
        let before = all_invariants(&k);
        let after = all_invariants(&swapped);
        assert_ne!(before.f00, after.f00);
    }

    #[test]
    fn single_moves_preserve_the_invariants() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300 {
            let k = GaussDiagram::random_from_seed(trial % 7, trial as u64);
            let Some(m) = random_move(&k, &mut rng, DEFAULT_MAX_CHORDS) else {
                continue;
            };
            let moved = apply(&k, &m).unwrap();
            let a = all_invariants(&k);
            let b = all_invariants(&moved);
            assert!(
                same_knot_invariants(&a, &b),
                "trial {trial}: {m} on {}",
                k.code_as_stored()
            );
        }
    }

    #[test]
    fn kink_defects_match_the_defect_table() {
        for seed in 0..8 {
            let k = GaussDiagram::random_from_seed(3 + seed as usize % 3, seed * 11);
            let base = all_invariants(&k);
            let gaps = k.endpoints().len();
            for gap in 0..gaps {
                for sign in [Sign::Plus, Sign::Minus] {
                    for kink in [KinkType::GammaEmpty, KinkType::GammaBarEmpty] {
                        let kinked = all_invariants(&r1_add(&k, gap, sign, kink).unwrap());
                        let e = sign.value();
                        assert_eq!(&kinked.f01 - &base.f01, base.w.scale(e));
                        assert_eq!(
                            &kinked.f10 - &base.f10,
                            base.w.substitute_inverse().scale(e)
                        );
                        let (df00, df11) = match kink {
                            KinkType::GammaEmpty => (LaurentPoly::zero(), base.wbar.scale(e)),
                            KinkType::GammaBarEmpty => (base.wbar.scale(e), LaurentPoly::zero()),
                        };
                        assert_eq!(&kinked.f00 - &base.f00, df00);
                        assert_eq!(&kinked.f11 - &base.f11, df11);
                    }
                }
            }
        }
    }

    #[test]
    fn walks_are_deterministic_and_capped() {
        let start = d("O1+O2+U1+U2+");
        let w1 = random_walk(&start, 40, 5, 8);
        let w2 = random_walk(&start, 40, 5, 8);
        assert_eq!(w1.diagram.code_as_stored(), w2.diagram.code_as_stored());
        assert_eq!(w1.log, w2.log);
        assert!(!w1.log.is_empty() && w1.log.len() <= 40);
        assert!(w1.diagram.n() <= 8);
        let frozen = random_walk(&start, 0, 5, 8);
        assert_eq!(frozen.diagram.code_as_stored(), start.code_as_stored());
    }

    #[test]
    fn walks_preserve_the_invariants() {
        let start = d("O1-O2-O3-U4+U1-U3-O4+U2-");
        let base = all_invariants(&start);
        for seed in 0..10 {
            let walk = random_walk(&start, 25, seed, DEFAULT_MAX_CHORDS);
            let end = all_invariants(&walk.diagram);
            assert!(
                same_knot_invariants(&base, &end),
                "seed {seed}, log: {:?}",
                walk.log.iter().map(|m| m.to_string()).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn move_log_lines_are_readable() {
        let m = Move::R2Add {
            p: 1,
            q: 4,
            variant: R2Variant::Parallel,
            sign: Sign::Minus,
        };
        assert_eq!(m.to_string(), "r2-add(p=1, q=4, parallel, sign=-)");
        assert_eq!(
            Move::R1Remove { chord: 2 }.to_string(),
            "r1-remove(chord=2)"
        );
    }
}
