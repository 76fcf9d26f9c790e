#include "hyper/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include <Eigen/Dense>

namespace hyper {

namespace {

constexpr std::size_t kMaxOffenders = 8;

class CheckBuilder {
public:
    CheckBuilder(std::string_view name, double tol) : tol_(tol) { result_.name = name; }

    void observe(double residual, Index x, Index y, Index z) {
        if (!(residual <= result_.residual)) {
            result_.residual = std::isnan(residual) ? std::numeric_limits<double>::infinity() : residual;
        }
        if (!(residual <= tol_) && result_.offenders.size() < kMaxOffenders) {
            result_.offenders.push_back({x, y, z});
        }
    }

    CheckResult finish() && {
        result_.passed = result_.residual <= tol_;
        return std::move(result_);
    }

private:
    double tol_;
    CheckResult result_;
};

CheckResult probability_check(const FiniteHypergroup& h, double tol) {
    CheckBuilder check(axiom::kProbability, tol);
    const auto n = h.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            double sum = 0.0;
            for (Index z = 0; z < n; ++z) {
                const double m = h.c(x, y, z);
                sum += m;
                check.observe(m < 0.0 ? -m : 0.0, x, y, z);
            }
            check.observe(std::abs(sum - 1.0), x, y, 0);
        }
    }
    return std::move(check).finish();
}

CheckResult neutrality_check(const FiniteHypergroup& h, double tol) {
    CheckBuilder check(axiom::kNeutrality, tol);
    const auto n = h.size();
    const Index e = h.identity();
    for (Index x = 0; x < n; ++x) {
        for (Index z = 0; z < n; ++z) {
            const double expected = z == x ? 1.0 : 0.0;
            check.observe(std::abs(h.c(x, e, z) - expected), x, e, z);
            check.observe(std::abs(h.c(e, x, z) - expected), e, x, z);
        }
    }
    return std::move(check).finish();
}

CheckResult involution_check(const FiniteHypergroup& h, double tol) {
    CheckBuilder check(axiom::kInvolution, tol);
    const auto n = h.size();
    for (Index x = 0; x < n; ++x) {
        if (h.inv(h.inv(x)) != x) check.observe(1.0, x, h.inv(x), h.inv(h.inv(x)));
    }
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            for (Index z = 0; z < n; ++z) {
                check.observe(std::abs(h.c(x, y, z) - h.c(h.inv(y), h.inv(x), h.inv(z))), x, y, z);
            }
        }
    }
    return std::move(check).finish();
}

// Residual is the mass sitting on an entry whose mirror is outside the support.
CheckResult support_symmetry_check(const FiniteHypergroup& h, double tol) {
    CheckBuilder check(axiom::kSupportSymmetry, tol);
    const auto n = h.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            for (Index z = 0; z < n; ++z) {
                const double forward = h.c(x, y, z);
                const double mirror = h.c(z, h.inv(y), x);
                if ((forward > tol) != (mirror > tol)) {
                    check.observe(std::max(forward, mirror), x, y, z);
                }
            }
        }
    }
    return std::move(check).finish();
}

CheckResult associativity_check(const FiniteHypergroup& h, double tol) {
    CheckBuilder check(axiom::kAssociativity, tol);
    const auto n = h.size();
    std::vector<double> left(n);
    std::vector<double> right(n);
    for (Index w = 0; w < n; ++w) {
        for (Index x = 0; x < n; ++x) {
            const auto wx = h.product(w, x);
            for (Index y = 0; y < n; ++y) {
                std::fill(left.begin(), left.end(), 0.0);
                std::fill(right.begin(), right.end(), 0.0);
                // (δ_w ∗ δ_x) ∗ δ_y
                for (Index u = 0; u < n; ++u) {
                    if (wx[u] == 0.0) continue;
                    const auto uy = h.product(u, y);
                    for (Index z = 0; z < n; ++z) left[z] += wx[u] * uy[z];
                }
                // δ_w ∗ (δ_x ∗ δ_y)
                const auto xy = h.product(x, y);
                for (Index v = 0; v < n; ++v) {
                    if (xy[v] == 0.0) continue;
                    const auto wv = h.product(w, v);
                    for (Index z = 0; z < n; ++z) right[z] += xy[v] * wv[z];
                }
                double worst = 0.0;
                for (Index z = 0; z < n; ++z) worst = std::max(worst, std::abs(left[z] - right[z]));
                check.observe(worst, w, x, y);
            }
        }
    }
    return std::move(check).finish();
}

CheckResult haar_check(const FiniteHypergroup& h, double tol) {
    CheckBuilder check(axiom::kHaarInvariance, tol);
    if (!h.has_haar()) {
        auto result = std::move(check).finish();
        result.evaluated = false;
        return result;
    }
    const auto n = h.size();
    const auto weights = h.haar();
    check.observe(std::abs(weights[h.identity()] - 1.0), h.identity(), h.identity(), h.identity());
    for (Index x = 0; x < n; ++x) {
        if (!(weights[x] > 0.0)) check.observe(1.0 - weights[x], x, x, x);
    }
    for (Index y = 0; y < n; ++y) {
        for (Index z = 0; z < n; ++z) {
            double sum = 0.0;
            for (Index x = 0; x < n; ++x) sum += weights[x] * h.c(y, x, z);
            check.observe(std::abs(sum - weights[z]), y, z, 0);
        }
    }
    return std::move(check).finish();
}

// Smallest-denominator rational within machine precision, used to recover
// exact weights like 3 or 5/2 from a floating-point null-space vector.
std::optional<double> snap_rational(double value, long max_denominator = 1000) {
    if (!std::isfinite(value)) return std::nullopt;
    double x = value;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 40; ++iter) {
        const double a = std::floor(x);
        if (std::abs(a) > 1e12) break;
        const long ai = static_cast<long>(a);
        const long p2 = ai * p1 + p0;
        const long q2 = ai * q1 + q0;
        if (q2 > max_denominator) break;
        const double candidate = static_cast<double>(p2) / static_cast<double>(q2);
        if (std::abs(candidate - value) <= 1e-9 * std::max(1.0, std::abs(value))) return candidate;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = x - a;
        if (frac == 0.0) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace

Measure Measure::point(std::size_t n, Index x) {
    Measure m{std::vector<Complex>(n)};
    m.masses.at(x) = 1.0;
    return m;
}

FiniteHypergroup::FiniteHypergroup(std::vector<std::string> labels, std::vector<double> constants,
                                   std::vector<Index> involution, Index identity,
                                   std::vector<double> haar)
    : n_(labels.size()),
      labels_(std::move(labels)),
      constants_(std::move(constants)),
      involution_(std::move(involution)),
      identity_(identity),
      haar_(std::move(haar)) {
    if (n_ == 0) throw StructuralError("hypergroup must have at least one element");
    if (constants_.size() != n_ * n_ * n_) {
        throw StructuralError("structure constants have " + std::to_string(constants_.size()) +
                              " entries, expected n^3 = " + std::to_string(n_ * n_ * n_));
    }
    if (involution_.size() != n_) throw StructuralError("involution length does not match element count");
    std::vector<bool> seen(n_, false);
    for (Index x : involution_) {
        if (x >= n_) throw StructuralError("involution maps outside the element set");
        if (seen[x]) throw StructuralError("involution is not a permutation");
        seen[x] = true;
    }
    if (identity_ >= n_) throw StructuralError("identity index out of range");
    if (!haar_.empty() && haar_.size() != n_) throw StructuralError("haar weight count does not match element count");
    std::unordered_set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != n_) throw StructuralError("element labels are not distinct");
}

Index FiniteHypergroup::index_of(std::string_view label) const {
    if (auto idx = find(label)) return *idx;
    throw StructuralError("unknown element label '" + std::string(label) + "'");
}

std::optional<Index> FiniteHypergroup::find(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
}

FiniteHypergroup FiniteHypergroup::with_haar(std::vector<double> haar) const {
    return FiniteHypergroup(labels_, constants_, involution_, identity_, std::move(haar));
}

FiniteHypergroup FiniteHypergroup::without_haar() const {
    return FiniteHypergroup(labels_, constants_, involution_, identity_);
}

void FiniteHypergroup::check_index(Index x) const {
    if (x >= n_) {
        throw StructuralError("element index " + std::to_string(x) + " out of range for hypergroup of size " +
                              std::to_string(n_));
    }
}

bool FiniteHypergroup::is_commutative(double tol) const {
    for (Index x = 0; x < n_; ++x)
        for (Index y = x + 1; y < n_; ++y)
            for (Index z = 0; z < n_; ++z)
                if (std::abs(c(x, y, z) - c(y, x, z)) > tol) return false;
    return true;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return !c.evaluated || c.passed; });
}

double ValidationReport::max_residual() const {
    double worst = 0.0;
    for (const auto& c : checks)
        if (c.evaluated) worst = std::max(worst, c.residual);
    return worst;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> names;
    for (const auto& c : checks)
        if (c.evaluated && !c.passed) names.push_back(c.name);
    return names;
}

const CheckResult* ValidationReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ValidationReport validate_axioms(const FiniteHypergroup& h, double tol) {
    if (!(tol > 0.0)) throw ParameterError("validation tolerance must be positive");
    ValidationReport report;
    report.tolerance = tol;
    report.checks.push_back(probability_check(h, tol));
    report.checks.push_back(neutrality_check(h, tol));
    report.checks.push_back(involution_check(h, tol));
    report.checks.push_back(support_symmetry_check(h, tol));
    report.checks.push_back(associativity_check(h, tol));
    report.checks.push_back(haar_check(h, tol));
    return report;
}

void require_structure_axioms(const FiniteHypergroup& h, double tol) {
    auto report = validate_axioms(h.has_haar() ? h.without_haar() : h, tol);
    if (!report.passed()) {
        std::string names;
        for (const auto& f : report.failures()) names += (names.empty() ? "" : ", ") + f;
        throw AxiomError("hypergroup axioms violated: " + names, std::move(report));
    }
}

Measure convolve_points(const FiniteHypergroup& h, Index x, Index y) {
    h.check_index(x);
    h.check_index(y);
    const auto slice = h.product(x, y);
    return Measure{std::vector<Complex>(slice.begin(), slice.end())};
}

Measure convolve_measures(const FiniteHypergroup& h, const Measure& mu, const Measure& nu) {
    const auto n = h.size();
    if (mu.size() != n || nu.size() != n) throw StructuralError("measure length does not match hypergroup size");
    Measure out{std::vector<Complex>(n)};
    for (Index x = 0; x < n; ++x) {
        if (mu[x] == 0.0) continue;
        for (Index y = 0; y < n; ++y) {
            const Complex w = mu[x] * nu[y];
            if (w == 0.0) continue;
            const auto xy = h.product(x, y);
            for (Index z = 0; z < n; ++z) out[z] += w * xy[z];
        }
    }
    return out;
}

Complex translate_value(const FiniteHypergroup& h, const PointFunction& f, Index x, Index y) {
    h.check_index(x);
    h.check_index(y);
    if (f.size() != h.size()) throw StructuralError("function length does not match hypergroup size");
    const auto xy = h.product(x, y);
    Complex sum = 0.0;
    for (Index z = 0; z < h.size(); ++z) sum += xy[z] * f[z];
    return sum;
}

Complex translate_value(const FiniteHypergroup& h, const PointFunction& f, Index a, Index x, Index b) {
    h.check_index(a);
    h.check_index(x);
    h.check_index(b);
    if (f.size() != h.size()) throw StructuralError("function length does not match hypergroup size");
    const auto ax = h.product(a, x);
    Complex sum = 0.0;
    for (Index u = 0; u < h.size(); ++u) {
        if (ax[u] == 0.0) continue;
        const auto ub = h.product(u, b);
        Complex inner = 0.0;
        for (Index z = 0; z < h.size(); ++z) inner += ub[z] * f[z];
        sum += ax[u] * inner;
    }
    return sum;
}

double haar_residual(const FiniteHypergroup& h, std::span<const double> weights) {
    const auto n = h.size();
    if (weights.size() != n) throw StructuralError("haar weight count does not match element count");
    double worst = 0.0;
    for (Index y = 0; y < n; ++y) {
        for (Index z = 0; z < n; ++z) {
            double sum = 0.0;
            for (Index x = 0; x < n; ++x) sum += weights[x] * h.c(y, x, z);
            worst = std::max(worst, std::abs(sum - weights[z]));
        }
    }
    return worst;
}

std::vector<double> compute_haar(const FiniteHypergroup& h) {
    const auto n = static_cast<Eigen::Index>(h.size());
    // Row (y, z): Σ_x h(x) c(y, x, z) − h(z) = 0.
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(n * n, n);
    for (Eigen::Index y = 0; y < n; ++y) {
        for (Eigen::Index z = 0; z < n; ++z) {
            const auto row = y * n + z;
            for (Eigen::Index x = 0; x < n; ++x) system(row, x) = h.c(y, x, z);
            system(row, z) -= 1.0;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double scale = std::max(1.0, sigma.size() > 0 ? sigma(0) : 1.0);
    const double threshold = 1e-9 * scale;
    Eigen::Index nullity = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) <= threshold) ++nullity;
    if (nullity == 0) {
        throw HaarError(HaarError::Kind::NotUnimodularOrInvalid, "invariance system has only the zero solution");
    }
    if (nullity > 1) {
        throw HaarError(HaarError::Kind::Ambiguous,
                        "invariance solution space has dimension " + std::to_string(nullity));
    }
    Eigen::VectorXd v = svd.matrixV().col(n - 1);
    const auto e = static_cast<Eigen::Index>(h.identity());
    if (std::abs(v(e)) < 1e-14) {
        throw HaarError(HaarError::Kind::NotUnimodularOrInvalid, "invariant vector vanishes at the identity");
    }
    v /= v(e);
    std::vector<double> solved(v.data(), v.data() + n);
    for (double w : solved) {
        if (!(w > 0.0)) {
            throw HaarError(HaarError::Kind::NotUnimodularOrInvalid, "invariant vector is not strictly positive");
        }
    }
    solved[h.identity()] = 1.0;

    // Prefer an exactly representable candidate when it is at least as good.
    const double solved_residual = haar_residual(h, solved);
    const double accept = std::max(solved_residual, 1e-12);

    std::vector<double> snapped(solved.size());
    bool snapped_ok = true;
    for (std::size_t i = 0; i < solved.size() && snapped_ok; ++i) {
        const auto r = snap_rational(solved[i]);
        snapped_ok = r.has_value() && *r > 0.0;
        if (snapped_ok) snapped[i] = *r;
    }
    if (snapped_ok && haar_residual(h, snapped) <= accept) return snapped;

    std::vector<double> closed_form(solved.size());
    bool closed_ok = true;
    for (Index x = 0; x < h.size() && closed_ok; ++x) {
        const double back = h.c(x, h.inv(x), h.identity());
        closed_ok = back > 0.0;
        if (closed_ok) closed_form[x] = 1.0 / back;
    }
    if (closed_ok && haar_residual(h, closed_form) <= accept) return closed_form;

    return solved;
}

std::vector<Index> support(const FiniteHypergroup& h, Index x, Index y, double threshold) {
    h.check_index(x);
    h.check_index(y);
    std::vector<Index> out;
    const auto xy = h.product(x, y);
    for (Index z = 0; z < h.size(); ++z)
        if (xy[z] > threshold) out.push_back(z);
    return out;
}

bool is_subhypergroup(const FiniteHypergroup& h, std::span<const Index> subset) {
    if (subset.empty()) throw ParameterError("subhypergroup candidate must be nonempty");
    std::vector<bool> member(h.size(), false);
    for (Index x : subset) {
        h.check_index(x);
        member[x] = true;
    }
    for (Index x : subset) {
        if (!member[h.inv(x)]) return false;
        for (Index y : subset) {
            const auto xy = h.product(x, y);
            for (Index z = 0; z < h.size(); ++z)
                if (xy[z] > 0.0 && !member[z]) return false;
        }
    }
    return true;
}

}  // namespace hyper
