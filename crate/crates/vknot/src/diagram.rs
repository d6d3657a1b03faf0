//! Gauss diagram model: a based cyclic word of chord endpoints plus a sign
//! per chord. Equality quotients out the basepoint and chord labels.

use rand::Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flipped(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Over => "O",
            Role::Under => "U",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn negated(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One chord endpoint on the circle. `chord` is a 0-based internal id;
/// serialized codes use 1-based labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Endpoint {
    pub chord: usize,
    pub role: Role,
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("syntax error at byte {0}")]
    Syntax(usize),
    #[error("chord {0} appears more than once as {1}")]
    DuplicateRole(u64, Role),
    #[error("chord {0} is missing its {1} endpoint")]
    MissingRole(u64, Role),
    #[error("chord {0} has conflicting signs")]
    SignMismatch(u64),
}

/// Invariant: every chord id in `0..signs.len()` occurs exactly once with
/// role Over and once with role Under among `endpoints`.
#[derive(Clone)]
pub struct GaussDiagram {
    endpoints: Vec<Endpoint>,
    signs: Vec<Sign>,
}

type CanonToken = (Role, usize, Sign);

impl GaussDiagram {
    pub fn unknot() -> Self {
        Self {
            endpoints: Vec::new(),
            signs: Vec::new(),
        }
    }

    pub fn new(endpoints: Vec<Endpoint>, signs: Vec<Sign>) -> Result<Self, DiagramError> {
        let n = signs.len();
        let mut seen = vec![[false; 2]; n];
        for ep in &endpoints {
            let label = ep.chord as u64 + 1;
            if ep.chord >= n {
                return Err(DiagramError::MissingRole(label, ep.role));
            }
            let slot = &mut seen[ep.chord][(ep.role == Role::Under) as usize];
            if *slot {
                return Err(DiagramError::DuplicateRole(label, ep.role));
            }
            *slot = true;
        }
        for (c, s) in seen.iter().enumerate() {
            for (k, role) in [(0, Role::Over), (1, Role::Under)] {
                if !s[k] {
                    return Err(DiagramError::MissingRole(c as u64 + 1, role));
                }
            }
        }
        Ok(Self { endpoints, signs })
    }

    /// Chord count.
    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn endpoints(&self) -> &[Endpoint] {
        &self.endpoints
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, chord: usize) -> Sign {
        self.signs[chord]
    }

    pub fn over_position(&self, chord: usize) -> usize {
        self.position_of(chord, Role::Over)
    }

    pub fn under_position(&self, chord: usize) -> usize {
        self.position_of(chord, Role::Under)
    }

    fn position_of(&self, chord: usize, role: Role) -> usize {
        self.endpoints
            .iter()
            .position(|e| e.chord == chord && e.role == role)
            .expect("chord id out of range")
    }

    pub fn partner_position(&self, pos: usize) -> usize {
        let ep = self.endpoints[pos];
        self.position_of(ep.chord, ep.role.flipped())
    }

    /// Sign carried by the endpoint itself: an Over endpoint carries the
    /// negated chord sign, an Under endpoint the chord sign.
    pub fn endpoint_sign(&self, pos: usize) -> i64 {
        let ep = self.endpoints[pos];
        let v = self.signs[ep.chord].value();
        match ep.role {
            Role::Over => -v,
            Role::Under => v,
        }
    }

    /// Positions strictly between `a` and `b` walking forward (cyclically).
    pub fn positions_between(&self, a: usize, b: usize) -> Vec<usize> {
        let len = self.endpoints.len();
        let mut out = Vec::new();
        let mut p = (a + 1) % len;
        while p != b {
            out.push(p);
            p = (p + 1) % len;
        }
        out
    }

    /// True iff the endpoints of the two chords alternate around the circle.
    pub fn linked(&self, i: usize, j: usize) -> bool {
        assert_ne!(i, j, "linked: chords must be distinct");
        let a = self.over_position(i);
        let b = self.under_position(i);
        let inside = self
            .positions_between(a, b)
            .into_iter()
            .filter(|&p| self.endpoints[p].chord == j)
            .count();
        inside == 1
    }

    /// Move the basepoint: endpoint `k` becomes position 0.
    pub fn rotated(&self, k: usize) -> Self {
        if self.endpoints.is_empty() {
            return self.clone();
        }
        let k = k % self.endpoints.len();
        let mut endpoints = self.endpoints[k..].to_vec();
        endpoints.extend_from_slice(&self.endpoints[..k]);
        Self {
            endpoints,
            signs: self.signs.clone(),
        }
    }

    /// Orientation reversal of the knot: endpoint order reversed, roles and
    /// signs kept.
    pub fn reverse(&self) -> Self {
        let mut endpoints = self.endpoints.clone();
        endpoints.reverse();
        Self {
            endpoints,
            signs: self.signs.clone(),
        }
    }

    /// Over/under exchange at every crossing: roles flipped, signs negated,
    /// order kept.
    pub fn vertical_mirror(&self) -> Self {
        Self {
            endpoints: self
                .endpoints
                .iter()
                .map(|e| Endpoint {
                    chord: e.chord,
                    role: e.role.flipped(),
                })
                .collect(),
            signs: self.signs.iter().map(|s| s.negated()).collect(),
        }
    }

    /// Mirror image in the supporting surface: signs negated, order and
    /// roles kept. This is the realization under which every chord pairing
    /// number negates (checked by the invariants test suite).
    pub fn horizontal_mirror(&self) -> Self {
        Self {
            endpoints: self.endpoints.clone(),
            signs: self.signs.iter().map(|s| s.negated()).collect(),
        }
    }

    fn tokens_from(&self, start: usize) -> Vec<CanonToken> {
        let len = self.endpoints.len();
        let mut relabel: Vec<Option<usize>> = vec![None; self.signs.len()];
        let mut next = 0;
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let ep = self.endpoints[(start + k) % len];
            let id = *relabel[ep.chord].get_or_insert_with(|| {
                next += 1;
                next
            });
            out.push((ep.role, id, self.signs[ep.chord]));
        }
        out
    }

    fn canonical_tokens(&self) -> Vec<CanonToken> {
        (0..self.endpoints.len())
            .map(|r| self.tokens_from(r))
            .min()
            .unwrap_or_default()
    }

    /// Code of the stored rotation, labels renumbered by first appearance.
    pub fn code_as_stored(&self) -> String {
        render(&self.tokens_from(0))
    }

    /// Canonical code: least token sequence over all rotations.
    pub fn code(&self) -> String {
        render(&self.canonical_tokens())
    }

    /// Uniform random matching of `2n` positions, uniform roles and signs.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut endpoints = vec![
            Endpoint {
                chord: usize::MAX,
                role: Role::Over
            };
            2 * n
        ];
        let mut free: Vec<usize> = (0..2 * n).collect();
        let mut signs = Vec::with_capacity(n);
        for chord in 0..n {
            let a = free[0];
            let b = free.remove(rng.gen_range(1..free.len()));
            free.remove(0);
            let (over, under) = if rng.gen::<bool>() { (a, b) } else { (b, a) };
            endpoints[over] = Endpoint {
                chord,
                role: Role::Over,
            };
            endpoints[under] = Endpoint {
                chord,
                role: Role::Under,
            };
            signs.push(if rng.gen::<bool>() {
                Sign::Plus
            } else {
                Sign::Minus
            });
        }
        Self { endpoints, signs }
    }

    pub fn random_from_seed(n: usize, seed: u64) -> Self {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        Self::random(n, &mut rng)
    }
}

fn render(tokens: &[CanonToken]) -> String {
    use fmt::Write;
    let mut s = String::new();
    for (role, id, sign) in tokens {
        write!(s, "{role}{id}{sign}").unwrap();
    }
    s
}

impl PartialEq for GaussDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.endpoints.len() == other.endpoints.len()
            && self.canonical_tokens() == other.canonical_tokens()
    }
}

impl Eq for GaussDiagram {}

impl std::hash::Hash for GaussDiagram {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical_tokens().hash(state);
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl fmt::Debug for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussDiagram({})", self.code_as_stored())
    }
}

impl FromStr for GaussDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b = s.as_bytes();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < b.len() && b[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        struct Raw {
            role: Role,
            label: u64,
            sign: Sign,
        }
        let mut raw = Vec::new();
        loop {
            skip_ws(&mut i);
            if i == b.len() {
                break;
            }
            let role = match b[i] {
                b'O' | b'o' => Role::Over,
                b'U' | b'u' => Role::Under,
                _ => return Err(DiagramError::Syntax(i)),
            };
            i += 1;
            skip_ws(&mut i);
            let dstart = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            if i == dstart {
                return Err(DiagramError::Syntax(i));
            }
            let label: u64 = s[dstart..i]
                .parse()
                .map_err(|_| DiagramError::Syntax(dstart))?;
            skip_ws(&mut i);
            let sign = match b.get(i) {
                Some(b'+') => Sign::Plus,
                Some(b'-') => Sign::Minus,
                _ => return Err(DiagramError::Syntax(i)),
            };
            i += 1;
            raw.push(Raw { role, label, sign });
        }

        // renumber labels 0.. in order of first appearance
        let mut order: Vec<u64> = Vec::new();
        let mut endpoints = Vec::with_capacity(raw.len());
        let mut signs: Vec<Option<Sign>> = Vec::new();
        let mut have: Vec<[bool; 2]> = Vec::new();
        for tok in &raw {
            let chord = match order.iter().position(|&l| l == tok.label) {
                Some(c) => c,
                None => {
                    order.push(tok.label);
                    signs.push(None);
                    have.push([false, false]);
                    order.len() - 1
                }
            };
            let slot = &mut have[chord][(tok.role == Role::Under) as usize];
            if *slot {
                return Err(DiagramError::DuplicateRole(tok.label, tok.role));
            }
            *slot = true;
            match signs[chord] {
                None => signs[chord] = Some(tok.sign),
                Some(s) if s != tok.sign => return Err(DiagramError::SignMismatch(tok.label)),
                _ => {}
            }
            endpoints.push(Endpoint {
                chord,
                role: tok.role,
            });
        }
        for (c, h) in have.iter().enumerate() {
            for (k, role) in [(0, Role::Over), (1, Role::Under)] {
                if !h[k] {
                    return Err(DiagramError::MissingRole(order[c], role));
                }
            }
        }
        Ok(Self {
            endpoints,
            signs: signs.into_iter().map(|s| s.unwrap()).collect(),
        })
    }
}
