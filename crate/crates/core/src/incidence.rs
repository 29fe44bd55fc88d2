//! Incidence matrices of a poset and the identities tying them to its Euler
//! characteristic.
//!
//! For a poset `P` on `n` elements:
//!
//! * `Z` is the zeta matrix, `z_ij = 1` iff `x_i ≤ x_j`;
//! * `Z̄ = J − Z` is the order-complement matrix;
//! * `N = Z − I` is the strict part, nilpotent;
//! * the Möbius matrix `Z⁻¹ = Σ_k (−N)^k` is integral.
//!
//! The chain census `c_k = 1ᵀ Nᵏ 1` drives both Euler characteristics and
//! the closed form of `det(Z̄ − λI)`:
//!
//! ```text
//! p(λ) = (−1)^n (λ+1)^n − Σ_{k<n} (−1)^{k+n} c_k (λ+1)^{n−1−k}
//! det Z̄ = p(0) = (−1)^{n+1} (χ(P) − 1)
//! ```
//!
//! [`verify_theorem`] recomputes every identity along independent routes
//! and records the outcome of each comparison instead of failing fast.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{ones_vector, IntMatrix, IntPolynomial};
use crate::oracle::{self, DEFAULT_SIZE_GUARD};
use crate::poset::Poset;

/// `c_k` for `k = 0..n`; `c_0 = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCensus {
    pub counts: Vec<BigInt>,
}

impl ChainCensus {
    pub fn alternating_sum(&self) -> BigInt {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Length of the longest chain plus one, i.e. the number of nonzero
    /// counts.
    pub fn height(&self) -> usize {
        self.counts.iter().take_while(|c| !c.is_zero()).count()
    }
}

fn sign(even: bool) -> BigInt {
    if even {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn zeta_matrix(p: &Poset) -> IntMatrix {
    let n = p.len();
    IntMatrix::from_fn(n, n, |i, j| u8::from(p.leq(i, j)))
}

/// `Z̄`, built entrywise: 0 where `x_i ≤ x_j`, 1 elsewhere.
pub fn complement_matrix(p: &Poset) -> IntMatrix {
    let n = p.len();
    IntMatrix::from_fn(n, n, |i, j| u8::from(!p.leq(i, j)))
}

/// `N = Z − I`.
pub fn strict_matrix(p: &Poset) -> IntMatrix {
    let n = p.len();
    IntMatrix::from_fn(n, n, |i, j| u8::from(p.lt(i, j)))
}

/// Inverse of the zeta matrix as the finite series `I − N + N² − …`,
/// stopping once a power of `N` vanishes.
pub fn mobius_matrix(p: &Poset) -> IntMatrix {
    let n = p.len();
    let minus_strict = strict_matrix(p).neg();
    let mut acc = IntMatrix::identity(n);
    let mut term = IntMatrix::identity(n);
    for _ in 1..n {
        term = term.matmul(&minus_strict).expect("square");
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term).expect("square");
    }
    acc
}

/// `c_k = 1ᵀ Nᵏ 1`, accumulated as the row vector `1ᵀ Nᵏ`.
pub fn chain_counts(p: &Poset) -> ChainCensus {
    let n = p.len();
    let strict = strict_matrix(p);
    let mut row = ones_vector(n);
    let mut counts = Vec::with_capacity(n);
    for k in 0..n {
        counts.push(row.iter().sum());
        if k + 1 < n {
            row = strict.left_mul_vec(&row).expect("square");
        }
    }
    ChainCensus { counts }
}

pub fn euler_char_chains(p: &Poset) -> BigInt {
    chain_counts(p).alternating_sum()
}

/// Sum of all entries of the Möbius matrix.
pub fn euler_char_mobius(p: &Poset) -> BigInt {
    mobius_matrix(p).sum_entries()
}

pub fn reduced_euler_char(p: &Poset) -> BigInt {
    euler_char_chains(p) - 1
}

/// Closed form of `det(Z̄ − λI)` assembled from the chain census, with the
/// powers of `λ + 1` expanded by binomial coefficients.
pub fn charpoly_formula(p: &Poset) -> IntPolynomial {
    charpoly_from_census(p.len(), &chain_counts(p))
}

pub fn charpoly_from_census(n: usize, census: &ChainCensus) -> IntPolynomial {
    let one = BigInt::one();
    let shifted = |e: usize| IntPolynomial::linear_power(&one, &one, e);
    let mut poly = shifted(n).scale(&sign(n.is_multiple_of(2)));
    for (k, c) in census.counts.iter().enumerate().take(n) {
        let coeff = sign((k + n).is_multiple_of(2)) * c;
        poly = poly.sub(&shifted(n - 1 - k).scale(&coeff));
    }
    poly
}

/// `det Z̄` by Bareiss elimination.
pub fn det_complement_direct(p: &Poset) -> BigInt {
    complement_matrix(p).determinant().expect("square")
}

/// `(−1)^{n+1} χ̃(P)`.
pub fn det_complement_via_theorem(p: &Poset) -> BigInt {
    sign((p.len() + 1).is_multiple_of(2)) * reduced_euler_char(p)
}

/// One exact comparison. Values are rendered as text so arbitrarily large
/// integers and polynomials survive serialization unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl IdentityRecord {
    pub fn compare<T: PartialEq + ToString>(name: &str, lhs: &T, rhs: &T) -> Self {
        IdentityRecord {
            name: name.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: lhs == rhs,
        }
    }

    fn polynomials(name: &str, lhs: &IntPolynomial, rhs: &IntPolynomial) -> Self {
        IdentityRecord {
            name: name.to_string(),
            lhs: lhs.coefficient_list(),
            rhs: rhs.coefficient_list(),
            pass: lhs == rhs,
        }
    }

    fn matrices(name: &str, lhs: &IntMatrix, rhs: &IntMatrix) -> Self {
        let render = |m: &IntMatrix| match m.rows() {
            0 => "[]".to_string(),
            _ => m.to_string().trim_end().replace('\n', "; "),
        };
        IdentityRecord {
            name: name.to_string(),
            lhs: render(lhs),
            rhs: render(rhs),
            pass: lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSummary {
    pub n: usize,
    pub name: String,
    pub chi: String,
    pub reduced_chi: String,
    pub det_complement: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub poset: PosetSummary,
    pub identities: Vec<IdentityRecord>,
    pub summary: Tally,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.identities.iter().filter(|r| !r.pass)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityRecord> {
        self.identities.iter().find(|r| r.name == name)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.poset.name = name.into();
        self
    }
}

/// `(−λ)^n`.
fn neg_lambda_power(n: usize) -> IntPolynomial {
    IntPolynomial::linear_power(&-BigInt::one(), &BigInt::zero(), n)
}

/// Trace, extremum and total-order statements about the spectrum of `Z̄`,
/// all checked on characteristic polynomials.
///
/// `charpoly` must be `det(Z̄ − λI)` for `p`.
pub fn spectral_checks(p: &Poset, charpoly: &IntPolynomial) -> Vec<IdentityRecord> {
    let n = p.len();
    let complement = complement_matrix(p);
    let mut out = vec![IdentityRecord::compare(
        "complement_trace_zero",
        &complement.trace().expect("square"),
        &BigInt::zero(),
    )];
    if n >= 1 {
        // coefficient of λ^{n−1} is (−1)^{n−1} tr Z̄
        out.push(IdentityRecord::compare(
            "complement_charpoly_subleading_zero",
            &charpoly.coeff(n - 1),
            &BigInt::zero(),
        ));
    }

    if let Some(x) = p.find_maximum().or_else(|| p.find_minimum()) {
        out.push(IdentityRecord::compare(
            "extremum_charpoly_constant_zero",
            &charpoly.coeff(0),
            &BigInt::zero(),
        ));
        let reduced = p.remove_element(x).expect("extremum index in range");
        let reduced_poly = complement_matrix(&reduced).charpoly().expect("square");
        out.push(IdentityRecord::polynomials(
            "extremum_deflation",
            charpoly,
            &IntPolynomial::linear(-1, 0).mul(&reduced_poly),
        ));
    }

    if p.is_total() {
        out.push(IdentityRecord::polynomials(
            "total_order_charpoly",
            charpoly,
            &neg_lambda_power(n),
        ));
    }
    out
}

pub fn verify_theorem(p: &Poset) -> VerificationReport {
    verify_theorem_with_guard(p, DEFAULT_SIZE_GUARD)
}

/// Checks every identity on `p`. The brute-force chain oracle runs only when
/// `p.len() <= size_guard`; above the guard its two comparisons are left out.
pub fn verify_theorem_with_guard(p: &Poset, size_guard: usize) -> VerificationReport {
    let n = p.len();
    let zeta = zeta_matrix(p);
    let complement = complement_matrix(p);
    let strict = strict_matrix(p);
    let mobius = mobius_matrix(p);
    let census = chain_counts(p);
    let one_minus_lambda_n = IntPolynomial::linear_power(&-BigInt::one(), &BigInt::one(), n);

    let mut ids = Vec::new();
    ids.push(IdentityRecord::compare(
        "zeta_determinant_one",
        &zeta.determinant().expect("square"),
        &BigInt::one(),
    ));
    ids.push(IdentityRecord::polynomials(
        "zeta_charpoly",
        &zeta.charpoly().expect("square"),
        &one_minus_lambda_n,
    ));
    let ones = ones_vector(n);
    ids.push(IdentityRecord::matrices(
        "complement_eq_ones_minus_zeta",
        &complement,
        &IntMatrix::outer(&ones, &ones).sub(&zeta).expect("square"),
    ));
    ids.push(IdentityRecord::compare(
        "strict_part_nilpotent",
        &strict.is_nilpotent().expect("square"),
        &true,
    ));
    ids.push(IdentityRecord::matrices(
        "zeta_times_mobius_identity",
        &zeta.matmul(&mobius).expect("square"),
        &IntMatrix::identity(n),
    ));

    let chi = census.alternating_sum();
    ids.push(IdentityRecord::compare(
        "chi_chains_eq_mobius",
        &chi,
        &mobius.sum_entries(),
    ));
    if let Ok(oracle) = oracle::enumerate_chains(p, size_guard) {
        let oracle_counts: Vec<BigInt> = oracle.counts.iter().map(|&c| BigInt::from(c)).collect();
        let render = |v: &[BigInt]| {
            let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("[{}]", parts.join(", "))
        };
        ids.push(IdentityRecord {
            name: "census_eq_oracle".into(),
            lhs: render(&census.counts),
            rhs: render(&oracle_counts),
            pass: census.counts == oracle_counts,
        });
        ids.push(IdentityRecord::compare(
            "chi_chains_eq_oracle",
            &chi,
            &BigInt::from(oracle.euler_characteristic()),
        ));
    }

    let charpoly = complement.charpoly().expect("square");
    ids.push(IdentityRecord::polynomials(
        "charpoly_formula_eq_berkowitz",
        &charpoly_from_census(n, &census),
        &charpoly,
    ));
    let det_direct = complement.determinant().expect("square");
    let reduced_chi: BigInt = &chi - 1;
    let det_theorem = sign((n + 1).is_multiple_of(2)) * &reduced_chi;
    ids.push(IdentityRecord::compare(
        "det_direct_eq_theorem",
        &det_direct,
        &det_theorem,
    ));
    ids.push(IdentityRecord::compare(
        "det_direct_eq_charpoly_at_zero",
        &det_direct,
        &charpoly.eval(&BigInt::zero()),
    ));
    ids.extend(spectral_checks(p, &charpoly));

    let passed = ids.iter().filter(|r| r.pass).count();
    VerificationReport {
        poset: PosetSummary {
            n,
            name: String::new(),
            chi: chi.to_string(),
            reduced_chi: reduced_chi.to_string(),
            det_complement: det_direct.to_string(),
        },
        summary: Tally {
            passed,
            failed: ids.len() - passed,
        },
        identities: ids,
    }
}
