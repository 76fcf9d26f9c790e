#pragma once

// Spherical analysis on a commutative double-coset quotient: the dual set of
// bounded spherical characters, the Plancherel weights, and the forward and
// inverse spherical Fourier transforms.

#include <cstdint>
#include <span>
#include <vector>

#include "hyper/core.hpp"
#include "hyper/gelfand.hpp"

namespace hyper {

/// A spherical character stored by block; extend to G with lift_blocks.
struct Character {
    std::vector<Complex> values;

    std::size_t size() const noexcept { return values.size(); }
    Complex operator[](Index block) const { return values[block]; }
};

struct DualData {
    /// Trivial character first, then lexicographic on values rounded to 9 decimals.
    std::vector<Character> characters;
    std::vector<double> plancherel;
    /// Seed of the attempt that produced a simple spectrum.
    std::uint64_t seed_used = 0;

    std::size_t size() const noexcept { return characters.size(); }
};

struct FourierCoefficients {
    std::vector<Complex> values;

    std::size_t size() const noexcept { return values.size(); }
    Complex operator[](Index i) const { return values[i]; }
};

struct DualOptions {
    std::uint64_t seed = 0xC0FFEE;
    int max_retries = 16;
    /// Two eigenvalues of the mixed translation operator closer than this
    /// count as a collision and trigger a reseed.
    double separation = 1e-8;
    double tol = kDefaultValidationTol;
};

namespace character_check {
inline constexpr std::string_view kBiInvariance = "bi_invariance";
inline constexpr std::string_view kIdentity = "identity";
inline constexpr std::string_view kMultiplicativity = "multiplicativity";
inline constexpr std::string_view kConjugation = "conjugation";
}  // namespace character_check

/// All characters of the commutative quotient, found as common eigenvectors
/// of the translation operators (A_a)[b][d] = c_q(a, b, d) through a random
/// real combination Σ r_a A_a.
///
/// Throws NotGelfandPairError when the quotient is not commutative,
/// DegenerateSpectrumError when every attempt hits an eigenvalue collision,
/// and ConsistencyError when a computed vector fails a dual-set condition.
DualData compute_dual(const GelfandPair& pair, const DualOptions& options = {});

/// Checks a function on G against the four dual-set conditions: constancy on
/// double cosets, φ(e) = 1, Σ_k ω_K(k) φ(x ∗ k ∗ y) = φ(x) φ(y), and
/// φ(x^⋄) = conj φ(x).
ValidationReport verify_character(const GelfandPair& pair, const PointFunction& phi,
                                  double tol = kDefaultValidationTol);
ValidationReport verify_character(const GelfandPair& pair, const Character& phi,
                                  double tol = kDefaultValidationTol);

/// π(φ) = (Σ_x h(x) |φ(x)|²)^{-1}.
std::vector<double> plancherel_weights(const GelfandPair& pair, std::span<const Character> characters);

struct FourierOptions {
    /// Replace a non-bi-invariant input by its projection instead of failing.
    bool project = false;
    double tol = kDefaultValidationTol;
};

/// f̂(φ) = Σ_x h(x) φ(x^⋄) f(x). Throws BiInvarianceError for an input that is
/// not K-bi-invariant unless projection is enabled.
FourierCoefficients fourier(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                            const FourierOptions& options = {});

/// f(x) = Σ_φ π(φ) φ(x) f̂(φ).
PointFunction inverse_fourier(const GelfandPair& pair, const DualData& dual, const FourierCoefficients& coeffs);

/// |‖f‖²_{L²} − ‖f̂‖²_{L²(π)}| / max(1, ‖f‖²_{L²}).
double plancherel_residual(const GelfandPair& pair, const DualData& dual, const PointFunction& f);

/// Σ_x h(x) |f(x)|².
double l2_norm_squared(const FiniteHypergroup& g, const PointFunction& f);

/// (f ∗ g)(x) = Σ_y h(y) f(y) g(y^⋄ ∗ x).
PointFunction convolve_functions(const FiniteHypergroup& g, const PointFunction& f1, const PointFunction& f2);

}  // namespace hyper
