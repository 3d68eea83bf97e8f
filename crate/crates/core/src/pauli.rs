//! Exact algebra of phased multi-qubit Pauli operators and rotation angles.
//!
//! Phases are tracked as integer powers of `i` (mod 4), so products and
//! commutation checks are exact. Rotation angles distinguish exact dyadic
//! multiples of pi/4 from free real angles; dyadic angles stay exact through
//! every transformation.

use std::fmt;
use std::str::FromStr;

/// One-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn is_identity(self) -> bool {
        self == Pauli::I
    }

    /// Single-letter product `self * other` as (power of i, letter).
    fn mul(self, other: Pauli) -> (u8, Pauli) {
        use Pauli::*;
        match (self, other) {
            (I, p) | (p, I) => (0, p),
            (X, X) | (Y, Y) | (Z, Z) => (0, I),
            (X, Y) => (1, Z),
            (Y, X) => (3, Z),
            (Y, Z) => (1, X),
            (Z, Y) => (3, X),
            (Z, X) => (1, Y),
            (X, Z) => (3, Y),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Pauli> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Fourth root of unity, stored as a power of i (mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_i_power(k: i64) -> Phase {
        Phase(k.rem_euclid(4) as u8)
    }

    pub fn i_power(self) -> u8 {
        self.0
    }

    pub fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    /// True for +1 and -1 (the Hermitian phases).
    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_positive(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "+"),
            1 => write!(f, "+i"),
            2 => write!(f, "-"),
            _ => write!(f, "-i"),
        }
    }
}

/// An n-qubit Pauli string with a fourth-root-of-unity phase.
///
/// Textual form is `"±[i]XYZI…"`, e.g. `+XZ`, `-iY`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhasedPauli {
    pub phase: Phase,
    pub letters: Vec<Pauli>,
}

impl PhasedPauli {
    pub fn identity(n: usize) -> PhasedPauli {
        PhasedPauli {
            phase: Phase::ONE,
            letters: vec![Pauli::I; n],
        }
    }

    pub fn new(phase: Phase, letters: Vec<Pauli>) -> PhasedPauli {
        PhasedPauli { phase, letters }
    }

    /// Positive-phase string with `pauli` at `index` and identity elsewhere.
    pub fn single(index: usize, len: usize, pauli: Pauli) -> PhasedPauli {
        assert!(index < len, "qubit index {index} out of range for {len} qubits");
        let mut letters = vec![Pauli::I; len];
        letters[index] = pauli;
        PhasedPauli {
            phase: Phase::ONE,
            letters,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|p| p.is_identity())
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|p| !p.is_identity()).count()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_identity())
            .map(|(i, _)| i)
    }

    /// Group product `self * other` with exact phase accumulation.
    ///
    /// Panics on length mismatch; equal lengths are a caller invariant.
    pub fn multiply(&self, other: &PhasedPauli) -> PhasedPauli {
        assert_eq!(
            self.len(),
            other.len(),
            "Pauli length mismatch: {} vs {}",
            self.len(),
            other.len()
        );
        let mut k = self.phase.i_power() as u32 + other.phase.i_power() as u32;
        let letters = self
            .letters
            .iter()
            .zip(other.letters.iter())
            .map(|(&a, &b)| {
                let (dk, p) = a.mul(b);
                k += dk as u32;
                p
            })
            .collect();
        PhasedPauli {
            phase: Phase::from_i_power(k as i64),
            letters,
        }
    }

    /// True iff the strings commute: an even number of positions hold
    /// distinct non-identity letters.
    pub fn commutes(&self, other: &PhasedPauli) -> bool {
        assert_eq!(
            self.len(),
            other.len(),
            "Pauli length mismatch: {} vs {}",
            self.len(),
            other.len()
        );
        let anti = self
            .letters
            .iter()
            .zip(other.letters.iter())
            .filter(|(&a, &b)| !a.is_identity() && !b.is_identity() && a != b)
            .count();
        anti % 2 == 0
    }

    pub fn negated(&self) -> PhasedPauli {
        PhasedPauli {
            phase: self.phase.mul(Phase::MINUS_ONE),
            letters: self.letters.clone(),
        }
    }

    /// The same string with phase forced to +1.
    pub fn unsigned(&self) -> PhasedPauli {
        PhasedPauli {
            phase: Phase::ONE,
            letters: self.letters.clone(),
        }
    }
}

impl fmt::Display for PhasedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase)?;
        for p in &self.letters {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

/// Error parsing the textual `±[i]XYZI…` form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Pauli string {input:?}: {reason}")]
pub struct PauliParseError {
    pub input: String,
    pub reason: &'static str,
}

impl FromStr for PhasedPauli {
    type Err = PauliParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| PauliParseError {
            input: s.to_string(),
            reason,
        };
        let mut rest = s;
        let mut phase = Phase::ONE;
        if let Some(r) = rest.strip_prefix('-') {
            phase = Phase::MINUS_ONE;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        if let Some(r) = rest.strip_prefix('i') {
            phase = phase.mul(Phase::I);
            rest = r;
        }
        if rest.is_empty() {
            return Err(err("empty letter sequence"));
        }
        let mut letters = Vec::with_capacity(rest.len());
        for c in rest.chars() {
            letters.push(Pauli::from_char(c).ok_or_else(|| err("letter outside IXYZ"))?);
        }
        Ok(PhasedPauli { phase, letters })
    }
}

/// Rotation angle: an exact dyadic multiple of pi/4, or a free real angle.
///
/// Dyadic angles are reduced mod 8 (the 2*pi period of projective Pauli
/// rotations), so equality on them is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Angle {
    /// `Dyadic(k)` is the angle k*pi/4 with k in [0, 8).
    Dyadic(u8),
    /// Free angle in radians.
    Free(f64),
}

/// Tolerance used when comparing free angles.
pub const ANGLE_EQ_TOLERANCE: f64 = 1e-12;

impl Angle {
    pub const ZERO: Angle = Angle::Dyadic(0);
    pub const PI_OVER_4: Angle = Angle::Dyadic(1);
    pub const PI_OVER_2: Angle = Angle::Dyadic(2);
    pub const PI: Angle = Angle::Dyadic(4);
    pub const MINUS_PI_OVER_2: Angle = Angle::Dyadic(6);
    pub const MINUS_PI_OVER_4: Angle = Angle::Dyadic(7);

    pub fn dyadic(k: i64) -> Angle {
        Angle::Dyadic(k.rem_euclid(8) as u8)
    }

    /// Wraps a free angle, snapping to the dyadic lattice when it lands on it
    /// exactly (within [`ANGLE_EQ_TOLERANCE`]).
    pub fn free(theta: f64) -> Angle {
        let quarters = theta / std::f64::consts::FRAC_PI_4;
        let rounded = quarters.round();
        if (quarters - rounded).abs() * std::f64::consts::FRAC_PI_4 <= ANGLE_EQ_TOLERANCE {
            Angle::dyadic(rounded as i64)
        } else {
            Angle::Free(theta)
        }
    }

    pub fn radians(self) -> f64 {
        match self {
            Angle::Dyadic(k) => k as f64 * std::f64::consts::FRAC_PI_4,
            Angle::Free(t) => t,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Angle::Dyadic(0))
    }

    /// Multiples of pi/2 (and pi) are Clifford rotations.
    pub fn is_clifford(self) -> bool {
        matches!(self, Angle::Dyadic(k) if k % 2 == 0)
    }

    pub fn negated(self) -> Angle {
        match self {
            Angle::Dyadic(k) => Angle::dyadic(-(k as i64)),
            Angle::Free(t) => Angle::Free(-t),
        }
    }

    /// Sum of two angles, staying dyadic when both are.
    pub fn add(self, other: Angle) -> Angle {
        match (self, other) {
            (Angle::Dyadic(a), Angle::Dyadic(b)) => Angle::dyadic(a as i64 + b as i64),
            _ => Angle::free(self.radians() + other.radians()),
        }
    }

    pub fn approx_eq(self, other: Angle) -> bool {
        match (self, other) {
            (Angle::Dyadic(a), Angle::Dyadic(b)) => a == b,
            _ => (self.radians() - other.radians()).abs() <= ANGLE_EQ_TOLERANCE,
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Dyadic(0) => write!(f, "0"),
            Angle::Dyadic(1) => write!(f, "pi/4"),
            Angle::Dyadic(2) => write!(f, "pi/2"),
            Angle::Dyadic(3) => write!(f, "3*pi/4"),
            Angle::Dyadic(4) => write!(f, "pi"),
            Angle::Dyadic(5) => write!(f, "5*pi/4"),
            Angle::Dyadic(6) => write!(f, "3*pi/2"),
            Angle::Dyadic(7) => write!(f, "7*pi/4"),
            Angle::Dyadic(k) => write!(f, "{k}*pi/4"),
            Angle::Free(t) => write!(f, "{t}"),
        }
    }
}

/// A Pauli rotation R_P(theta) = exp(-i P theta / 2) with a positive-phase
/// Hermitian basis.
///
/// Signs are normalised into the angle: R_{-P}(theta) = R_P(-theta), so the
/// stored basis always carries phase +1.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliRotation {
    basis: PhasedPauli,
    angle: Angle,
}

impl PauliRotation {
    /// Builds a rotation, folding a -1 basis phase into the angle.
    ///
    /// Panics if the basis phase is ±i (not Hermitian).
    pub fn new(basis: PhasedPauli, angle: Angle) -> PauliRotation {
        assert!(
            basis.phase.is_real(),
            "rotation basis must be Hermitian (phase ±1), got {}",
            basis
        );
        if basis.phase == Phase::MINUS_ONE {
            PauliRotation {
                basis: basis.unsigned(),
                angle: angle.negated(),
            }
        } else {
            PauliRotation { basis, angle }
        }
    }

    pub fn basis(&self) -> &PhasedPauli {
        &self.basis
    }

    pub fn angle(&self) -> Angle {
        self.angle
    }

    pub fn is_clifford(&self) -> bool {
        self.angle.is_clifford()
    }
}

impl fmt::Display for PauliRotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R[{}]({})", self.basis, self.angle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::matrix::CMatrix;
    use proptest::prelude::*;

    fn pp(s: &str) -> PhasedPauli {
        s.parse().unwrap()
    }

    #[test]
    fn single_letter_products() {
        // X * Z = -i Y
        let r = pp("X").multiply(&pp("Z"));
        assert_eq!(r, pp("-iY"));
    }

    #[test]
    fn disjoint_supports_commute_in_product() {
        let r = pp("ZI").multiply(&pp("IZ"));
        assert_eq!(r, pp("ZZ"));
    }

    #[test]
    fn appendix_c_example_i_zx_times_iz() {
        // (Z⊗X)(I⊗Z) = -i Z⊗Y, so i (Z⊗X)(I⊗Z) = Z⊗Y.
        let prod = pp("ZX").multiply(&pp("IZ"));
        assert_eq!(prod, pp("-iZY"));
        let with_i = PhasedPauli::new(Phase::I, vec![Pauli::I, Pauli::I]).multiply(&prod);
        assert_eq!(with_i, pp("ZY"));
    }

    #[test]
    fn commutation_examples() {
        assert!(!pp("ZX").commutes(&pp("IZ")));
        assert!(pp("ZZ").commutes(&pp("XX")));
        for s in ["X", "ZZ", "IYX", "-iXYZ"] {
            assert!(pp(s).commutes(&pp(s)));
        }
    }

    #[test]
    #[should_panic(expected = "length mismatch")]
    fn multiply_length_mismatch_panics() {
        let _ = pp("X").multiply(&pp("XX"));
    }

    #[test]
    fn hermitian_square_has_real_phase() {
        for s in ["X", "Y", "ZZ", "XY", "-YZ", "-XX"] {
            let p = pp(s);
            let sq = p.multiply(&p);
            assert!(sq.phase.is_real(), "square of {p} has phase {}", sq.phase);
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["+XZ", "-iY", "+iIXYZ", "-ZZ", "+I"] {
            assert_eq!(pp(s).to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<PhasedPauli>().is_err());
        assert!("+i".parse::<PhasedPauli>().is_err());
        assert!("XQ".parse::<PhasedPauli>().is_err());
    }

    #[test]
    fn angle_normalisation() {
        assert_eq!(Angle::dyadic(9), Angle::Dyadic(1));
        assert_eq!(Angle::dyadic(-1), Angle::Dyadic(7));
        assert_eq!(Angle::free(std::f64::consts::PI), Angle::Dyadic(4));
        assert_eq!(Angle::free(-std::f64::consts::FRAC_PI_2), Angle::Dyadic(6));
        assert!(matches!(Angle::free(0.3), Angle::Free(_)));
    }

    #[test]
    fn rotation_folds_negative_basis_into_angle() {
        let r = PauliRotation::new(pp("-Z"), Angle::PI_OVER_4);
        assert_eq!(r.basis(), &pp("Z"));
        assert_eq!(r.angle(), Angle::MINUS_PI_OVER_4);
    }

    #[test]
    #[should_panic(expected = "Hermitian")]
    fn rotation_rejects_imaginary_phase() {
        let _ = PauliRotation::new(pp("+iZ"), Angle::PI_OVER_4);
    }

    // Brute-force oracle: dense matrix product for all pairs on <= 2 qubits.
    #[test]
    fn multiply_matches_matrix_product_on_two_qubits() {
        let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
        for &a0 in &letters {
            for &a1 in &letters {
                for &b0 in &letters {
                    for &b1 in &letters {
                        let a = PhasedPauli::new(Phase::ONE, vec![a0, a1]);
                        let b = PhasedPauli::new(Phase::ONE, vec![b0, b1]);
                        let prod = a.multiply(&b);
                        let ma = CMatrix::phased_pauli(&a);
                        let mb = CMatrix::phased_pauli(&b);
                        let expect = ma.mul(&mb);
                        let got = CMatrix::phased_pauli(&prod);
                        assert!(
                            got.approx_eq(&expect, 1e-12),
                            "{a} * {b} -> {prod} disagrees with matrices"
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn multiply_is_associative(
            ws in proptest::collection::vec(0usize..4, 3),
            xs in proptest::collection::vec(0usize..4, 3),
            ys in proptest::collection::vec(0usize..4, 3),
            pa in 0u8..4, pb in 0u8..4, pc in 0u8..4,
        ) {
            let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
            let a = PhasedPauli::new(Phase(pa), ws.iter().map(|&i| letters[i]).collect());
            let b = PhasedPauli::new(Phase(pb), xs.iter().map(|&i| letters[i]).collect());
            let c = PhasedPauli::new(Phase(pc), ys.iter().map(|&i| letters[i]).collect());
            prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        }

        #[test]
        fn commutes_iff_products_differ_by_sign(
            ws in proptest::collection::vec(0usize..4, 4),
            xs in proptest::collection::vec(0usize..4, 4),
        ) {
            let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
            let a = PhasedPauli::new(Phase::ONE, ws.iter().map(|&i| letters[i]).collect());
            let b = PhasedPauli::new(Phase::ONE, xs.iter().map(|&i| letters[i]).collect());
            let ab = a.multiply(&b);
            let ba = b.multiply(&a);
            if a.commutes(&b) {
                prop_assert_eq!(ab, ba);
            } else {
                prop_assert_eq!(ab, ba.negated());
            }
        }
    }
}
