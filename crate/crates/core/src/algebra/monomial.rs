use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the three bosonic modes: signal `a`, idler `b`, pump `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    A,
    B,
    C,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::A, Mode::B, Mode::C];

    pub fn index(self) -> usize {
        match self {
            Mode::A => 0,
            Mode::B => 1,
            Mode::C => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Mode::A => "a",
            Mode::B => "b",
            Mode::C => "c",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" => Ok(Mode::A),
            "b" => Ok(Mode::B),
            "c" => Ok(Mode::C),
            other => Err(format!("unknown mode '{other}' (expected a, b or c)")),
        }
    }
}

/// A normal-ordered product `a†^p a^q b†^r b^s c†^t c^u`.
///
/// The exponent array is stored in that order, so the derived `Ord` is the
/// lexicographic order on `(p, q, r, s, t, u)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BosonMonomial {
    exps: [u32; 6],
}

impl BosonMonomial {
    pub const IDENTITY: BosonMonomial = BosonMonomial { exps: [0; 6] };

    pub fn new(exps: [u32; 6]) -> Self {
        Self { exps }
    }

    pub fn exponents(&self) -> [u32; 6] {
        self.exps
    }

    /// Single annihilation operator of `mode`.
    pub fn annihilator(mode: Mode) -> Self {
        let mut exps = [0; 6];
        exps[2 * mode.index() + 1] = 1;
        Self { exps }
    }

    /// Single creation operator of `mode`.
    pub fn creator(mode: Mode) -> Self {
        let mut exps = [0; 6];
        exps[2 * mode.index()] = 1;
        Self { exps }
    }

    /// `(creation, annihilation)` exponents of one mode.
    pub fn mode_exponents(&self, mode: Mode) -> (u32, u32) {
        let i = 2 * mode.index();
        (self.exps[i], self.exps[i + 1])
    }

    pub fn with_mode(mut self, mode: Mode, creation: u32, annihilation: u32) -> Self {
        let i = 2 * mode.index();
        self.exps[i] = creation;
        self.exps[i + 1] = annihilation;
        self
    }

    pub fn is_identity(&self) -> bool {
        self.exps == [0; 6]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Hermitian adjoint. Each mode factor `x†^p x^q` maps to `x†^q x^p`,
    /// which is already normal-ordered because different modes commute.
    pub fn dagger(&self) -> Self {
        let e = self.exps;
        Self { exps: [e[1], e[0], e[3], e[2], e[5], e[4]] }
    }

    /// Exchange the `a` and `b` exponents.
    pub fn swap_ab(&self) -> Self {
        let e = self.exps;
        Self { exps: [e[2], e[3], e[0], e[1], e[4], e[5]] }
    }

    /// Normal-ordered expansion of `self * rhs` as `(weight, monomial)`
    /// pairs with positive integer weights.
    ///
    /// Per mode, `(x†^p x^q)(x†^r x^s) = Σ_k C(q,k) C(r,k) k! x†^(p+r-k) x^(q+s-k)`.
    pub fn product(&self, rhs: &BosonMonomial) -> Vec<(u128, BosonMonomial)> {
        let mut out: Vec<(u128, BosonMonomial)> = vec![(1, BosonMonomial::IDENTITY)];
        for mode in Mode::ALL {
            let (p, q) = self.mode_exponents(mode);
            let (r, s) = rhs.mode_exponents(mode);
            let kmax = q.min(r);
            let mut next = Vec::with_capacity(out.len() * (kmax as usize + 1));
            for (w, m) in &out {
                for k in 0..=kmax {
                    let wk = contraction_weight(q, r, k);
                    let weight = w.checked_mul(wk).expect("normal-ordering weight overflow");
                    next.push((weight, m.with_mode(mode, p + r - k, q + s - k)));
                }
            }
            out = next;
        }
        out
    }
}

/// `C(q,k) C(r,k) k!`, the number of ways to contract `k` annihilators
/// against `k` creators.
fn contraction_weight(q: u32, r: u32, k: u32) -> u128 {
    binomial(q, k)
        .checked_mul(binomial(r, k))
        .and_then(|v| v.checked_mul(factorial(k)))
        .expect("normal-ordering weight overflow")
}

pub(crate) fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

impl fmt::Display for BosonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut first = true;
        for mode in Mode::ALL {
            let (cr, an) = self.mode_exponents(mode);
            for (exp, dag) in [(cr, "†"), (an, "")] {
                if exp == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}{}", mode.symbol(), dag)?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
        Ok(())
    }
}
