#pragma once

// Finite hypergroups stored as dense structure-constant tensors.
//
// An element set {0..n-1} with c(x, y, z) = (δ_x ∗ δ_y)({z}), an involution,
// a neutral element and (once known) left Haar weights normalized so that
// h(e) = 1. Every integral against the Haar measure becomes a weighted sum.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/errors.hpp"

namespace hyper {

using Index = std::size_t;
using Complex = std::complex<double>;

inline constexpr double kDefaultValidationTol = 1e-9;
inline constexpr double kDefaultAlgebraicTol = 1e-12;

/// A complex-valued function on the elements of a hypergroup.
struct PointFunction {
    std::vector<Complex> values;

    std::size_t size() const noexcept { return values.size(); }
    Complex operator[](Index i) const { return values[i]; }
    Complex& operator[](Index i) { return values[i]; }
};

/// A finitely supported measure Σ_x masses[x] δ_x.
struct Measure {
    std::vector<Complex> masses;

    std::size_t size() const noexcept { return masses.size(); }
    Complex operator[](Index i) const { return masses[i]; }
    Complex& operator[](Index i) { return masses[i]; }

    static Measure point(std::size_t n, Index x);
};

class FiniteHypergroup {
public:
    /// `constants` is the flattened n×n×n tensor in (x, y, z) row-major order.
    /// `haar` may be empty when the weights are not yet known.
    /// Throws StructuralError on inconsistent dimensions or indices.
    FiniteHypergroup(std::vector<std::string> labels, std::vector<double> constants,
                     std::vector<Index> involution, Index identity,
                     std::vector<double> haar = {});

    std::size_t size() const noexcept { return labels_.size(); }

    double c(Index x, Index y, Index z) const noexcept { return constants_[(x * n_ + y) * n_ + z]; }
    /// The distribution c(x, y, ·).
    std::span<const double> product(Index x, Index y) const noexcept {
        return {constants_.data() + (x * n_ + y) * n_, n_};
    }
    std::span<const double> constants() const noexcept { return constants_; }

    Index inv(Index x) const noexcept { return involution_[x]; }
    std::span<const Index> involution() const noexcept { return involution_; }
    Index identity() const noexcept { return identity_; }

    bool has_haar() const noexcept { return !haar_.empty(); }
    /// Empty when the weights have not been computed or supplied.
    std::span<const double> haar() const noexcept { return haar_; }
    double haar(Index x) const { return haar_.at(x); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Index x) const { return labels_.at(x); }
    /// Throws StructuralError for an unknown label.
    Index index_of(std::string_view label) const;
    std::optional<Index> find(std::string_view label) const;

    FiniteHypergroup with_haar(std::vector<double> haar) const;
    FiniteHypergroup without_haar() const;

    /// Throws StructuralError if x is not an element index.
    void check_index(Index x) const;

    bool is_commutative(double tol = kDefaultAlgebraicTol) const;

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<double> constants_;
    std::vector<Index> involution_;
    Index identity_ = 0;
    std::vector<double> haar_;
};

/// Outcome of one named check inside a ValidationReport.
struct CheckResult {
    std::string name;
    bool evaluated = true;
    double residual = 0.0;
    bool passed = true;
    /// Up to a handful of offending index triples (unused slots are 0).
    std::vector<std::array<Index, 3>> offenders;
};

struct ValidationReport {
    double tolerance = kDefaultValidationTol;
    std::vector<CheckResult> checks;

    /// True iff every evaluated residual is within tolerance.
    bool passed() const;
    double max_residual() const;
    /// Names of the checks that were evaluated and failed.
    std::vector<std::string> failures() const;
    const CheckResult* find(std::string_view name) const;
};

/// A hypergroup that fails its axioms. Carries the report.
class AxiomError : public Error {
public:
    AxiomError(const std::string& message, ValidationReport report)
        : Error(message), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

namespace axiom {
inline constexpr std::string_view kProbability = "probability";
inline constexpr std::string_view kNeutrality = "neutrality";
inline constexpr std::string_view kInvolution = "involution";
inline constexpr std::string_view kSupportSymmetry = "support_symmetry";
inline constexpr std::string_view kAssociativity = "associativity";
inline constexpr std::string_view kHaarInvariance = "haar_invariance";
}  // namespace axiom

/// Checks the hypergroup axioms and, when weights are present, left Haar
/// invariance. Tolerance must be positive. Haar invariance is reported as not
/// evaluated when the hypergroup carries no weights.
ValidationReport validate_axioms(const FiniteHypergroup& h, double tol = kDefaultValidationTol);

/// Throws AxiomError unless every axiom except Haar invariance holds.
void require_structure_axioms(const FiniteHypergroup& h, double tol = kDefaultValidationTol);

Measure convolve_points(const FiniteHypergroup& h, Index x, Index y);
Measure convolve_measures(const FiniteHypergroup& h, const Measure& mu, const Measure& nu);

/// f(x ∗ y) = Σ_z c(x, y, z) f(z).
Complex translate_value(const FiniteHypergroup& h, const PointFunction& f, Index x, Index y);

/// (δ_a ∗ δ_x ∗ δ_b)(f), contracted left to right.
Complex translate_value(const FiniteHypergroup& h, const PointFunction& f, Index a, Index x, Index b);

/// Left Haar weights normalized to h(e) = 1, solved as the null space of the
/// stacked invariance system Σ_x h(x) c(y, x, z) = h(z).
/// Throws HaarError when no strictly positive solution exists or the solution
/// space is not one-dimensional.
std::vector<double> compute_haar(const FiniteHypergroup& h);

/// max_{y,z} |Σ_x h(x) c(y, x, z) − h(z)| for the given weights.
double haar_residual(const FiniteHypergroup& h, std::span<const double> weights);

/// S must be nonempty (ParameterError otherwise).
bool is_subhypergroup(const FiniteHypergroup& h, std::span<const Index> subset);

/// Union of supports, supp(δ_x ∗ δ_y) as a sorted index list.
std::vector<Index> support(const FiniteHypergroup& h, Index x, Index y, double threshold = 0.0);

}  // namespace hyper
