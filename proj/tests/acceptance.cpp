// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hyper/cli.hpp"
#include "hyper/constructors.hpp"
#include "hyper/io.hpp"
#include "hyper/sobolev.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Tally {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass_ = false;
            if (failures_.size() < 5) failures_.push_back(what);
        }
    }
    void worst(double& slot, double value) { slot = std::max(slot, value); }

    Outcome finish(std::string detail) const {
        for (const auto& f : failures_) detail += "; failed: " + f;
        return {pass_, std::move(detail)};
    }

private:
    bool pass_ = true;
    std::vector<std::string> failures_;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

const std::vector<std::string> kHypergroupFiles = {
    "cyclic2.json", "cyclic3.json", "cyclic4.json",  "cyclic5.json",  "cyclic6.json",  "cyclic7.json",    "cyclic8.json",
    "s3.json",      "s3_classes.json", "hamming2.json", "hamming3.json", "hamming4.json", "hamming5.json",
};

FiniteHypergroup load(const std::string& name) { return io::parse(io::load_json(oracle::data_path(name))); }

GelfandPair trivial_pair(FiniteHypergroup h) {
    const auto e = h.identity();
    return GelfandPair(std::move(h), {e});
}

struct PreparedPair {
    std::string name;
    GelfandPair pair;
    DualData dual;
};

std::vector<PreparedPair> prepared_pairs() {
    std::vector<PreparedPair> out;
    for (auto& [name, pair] : fixture::bundled_pairs()) {
        auto dual = compute_dual(pair);
        out.push_back({name, std::move(pair), std::move(dual)});
    }
    return out;
}

std::vector<double> preset(const PreparedPair& p, GammaPreset kind) { return gamma_preset(p.pair, p.dual, kind); }

// Random bi-invariant inputs per pair, shared by the embedding sweeps.
constexpr int kSweepTrials = 1000;
constexpr double kSlack = 1e-12;

Outcome axiom_suite() {
    Tally t;
    double worst = 0.0;
    std::vector<FiniteHypergroup> outputs;
    for (std::size_t n = 1; n <= 8; ++n) outputs.push_back(cyclic(n));
    for (std::size_t d = 1; d <= 6; ++d) outputs.push_back(hamming(d));
    outputs.push_back(from_cayley_table(s3_table()));
    outputs.push_back(conjugacy_class_hypergroup(s3_table()));
    for (const auto& name : kHypergroupFiles) outputs.push_back(load(name));
    for (const auto& h : outputs) {
        const auto r = validate_axioms(h, 1e-10);
        t.require(r.passed(), "constructor output of size " + std::to_string(h.size()));
        t.worst(worst, r.max_residual());
    }
    const std::vector<std::pair<std::string, std::string>> broken = {
        {"broken_prob.json", "probability"},       {"broken_neutral.json", "neutrality"},
        {"broken_involution.json", "involution"}, {"broken_support.json", "support_symmetry"},
        {"broken_assoc.json", "associativity"},   {"broken_haar.json", "haar_invariance"},
    };
    for (const auto& [file, axiom_name] : broken) {
        const auto h = io::parse_structure(io::load_json(oracle::data_path(file)));
        t.require(validate_axioms(h, 1e-10).failures() == std::vector<std::string>{axiom_name}, file);
    }
    return t.finish(std::to_string(outputs.size()) + " valid hypergroups, max residual " + sci(worst) + "; " +
                    std::to_string(broken.size()) + " corrupted files each fail exactly their axiom");
}

Outcome haar() {
    Tally t;
    double worst = 0.0;
    for (const auto& name : kHypergroupFiles) {
        const auto h = load(name);
        const auto w = compute_haar(h.without_haar());
        const double r = haar_residual(h, w);
        t.worst(worst, r);
        t.require(r <= 1e-10, name);
    }
    t.require(compute_haar(load("s3_classes.json").without_haar()) == std::vector<double>{1, 3, 2}, "s3 classes weights");
    t.require(compute_haar(load("hamming3.json").without_haar()) == std::vector<double>{1, 3, 3, 1}, "hamming3 weights");
    return t.finish("max invariance residual " + sci(worst) + "; exact (1,3,2) and (1,3,3,1)");
}

Outcome dual_correctness() {
    Tally t;
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto dual = compute_dual(trivial_pair(load("cyclic" + std::to_string(n) + ".json")));
        t.require(dual.size() == n, "cyclic dual size");
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Complex> expected;
            for (std::size_t x = 0; x < n; ++x) expected.push_back(oracle::dft(n, k, x));
            t.require(oracle::has_character(dual, expected, 1e-10), "cyclic" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    const auto classes = compute_dual(trivial_pair(load("s3_classes.json")));
    const auto table = oracle::s3_normalized_characters();
    for (std::size_t i = 0; i < table.size(); ++i)
        for (Index b = 0; b < 3; ++b)
            t.require(std::abs(classes.characters[i][b] - table[i][b]) <= 1e-10, "s3 class character " + std::to_string(i));

    const auto s3 = GelfandPair(load("s3.json"), {0, 1});
    const auto sph = compute_dual(s3);
    const auto spectrum = oracle::two_block_spectrum(
        oracle::return_probability(oracle::s3_double_cosets_mod_transposition(), 1));
    t.require(sph.size() == 2, "two spherical functions");
    for (std::size_t i = 0; i < 2 && i < sph.size(); ++i) {
        t.require(std::abs(sph.characters[i][0] - 1.0) <= 1e-10, "spherical value at K");
        t.require(std::abs(sph.characters[i][1] - spectrum[i]) <= 1e-10, "spherical value off K");
    }
    return t.finish("cyclic 2..8 vs DFT, S3 classes vs character table, (S3,S2) vs 2x2 solve");
}

Outcome plancherel(const std::vector<PreparedPair>& pairs) {
    Tally t;
    double worst = 0.0;
    Rng rng(1);
    for (const auto& p : pairs) {
        for (int i = 0; i < 100; ++i) {
            const double r = plancherel_residual(p.pair, p.dual, fixture::random_biinvariant(p.pair, rng));
            t.worst(worst, r);
            t.require(r <= 1e-10, p.name);
        }
    }
    const auto classes = compute_dual(trivial_pair(load("s3_classes.json")));
    const std::vector<double> expected{1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};
    double weight_err = 0.0;
    for (std::size_t i = 0; i < 3; ++i) t.worst(weight_err, std::abs(classes.plancherel[i] - expected[i]));
    t.require(weight_err <= 1e-12, "s3 class Plancherel weights");
    return t.finish("max relative residual " + sci(worst) + " over " + std::to_string(100 * pairs.size()) +
                    " functions; S3 class weight error " + sci(weight_err));
}

Outcome inversion(const std::vector<PreparedPair>& pairs) {
    Tally t;
    double worst_inv = 0.0, worst_conv = 0.0;
    Rng rng(2);
    for (const auto& p : pairs) {
        for (int i = 0; i < 100; ++i) {
            const auto f = fixture::random_biinvariant(p.pair, rng);
            const auto back = inverse_fourier(p.pair, p.dual, fourier(p.pair, p.dual, f));
            for (Index x = 0; x < f.size(); ++x) t.worst(worst_inv, std::abs(back[x] - f[x]));

            const auto g = fixture::random_biinvariant(p.pair, rng);
            const auto lhs = fourier(p.pair, p.dual, convolve_functions(p.pair.group(), f, g));
            const auto a = fourier(p.pair, p.dual, f);
            const auto b = fourier(p.pair, p.dual, g);
            for (std::size_t k = 0; k < p.dual.size(); ++k)
                t.worst(worst_conv, std::abs(lhs[k] - a[k] * b[k]) / std::max(1.0, std::abs(a[k] * b[k])));
        }
    }
    t.require(worst_inv <= 1e-9, "inversion");
    t.require(worst_conv <= 1e-9, "convolution theorem");
    return t.finish("max inversion error " + sci(worst_inv) + ", max convolution-theorem residual " + sci(worst_conv));
}

// Runs `check` on kSweepTrials seeded random functions per pair and setting.
template <typename Check>
void sweep(const std::vector<PreparedPair>& pairs, std::uint64_t seed, Check&& check) {
    Rng rng(seed);
    for (const auto& p : pairs)
        for (int i = 0; i < kSweepTrials; ++i) check(p, fixture::random_biinvariant(p.pair, rng));
}

const std::vector<double> kExponents{0.5, 1.0, 2.0};

Outcome l2_embedding(const std::vector<PreparedPair>& pairs) {
    Tally t;
    std::size_t checks = 0, violations = 0;
    double equality = 0.0;
    sweep(pairs, 6, [&](const PreparedPair& p, const PointFunction& f) {
        for (auto kind : {GammaPreset::Zero, GammaPreset::Index})
            for (double s : kExponents) {
                const auto r = check_l2_embedding(p.pair, p.dual, f, SobolevParams::make(s, preset(p, kind)), kSlack);
                ++checks;
                if (!r.pass) ++violations;
                if (kind == GammaPreset::Zero) t.worst(equality, std::abs(r.lhs - r.rhs) / std::max(1.0, r.rhs));
            }
    });
    t.require(violations == 0, std::to_string(violations) + " violations");
    t.require(equality <= 1e-12, "zero-gamma equality " + sci(equality));
    return t.finish(std::to_string(checks) + " checks, " + std::to_string(violations) +
                    " violations; zero-gamma max |lhs-rhs|/max(1,rhs) " + sci(equality));
}

Outcome monotone_embedding(const std::vector<PreparedPair>& pairs) {
    Tally t;
    std::size_t checks = 0, violations = 0;
    const std::vector<std::pair<double, double>> grid{{1.0, 0.5}, {2.0, 1.0}, {4.0, 2.0}};
    sweep(pairs, 7, [&](const PreparedPair& p, const PointFunction& f) {
        for (auto kind : {GammaPreset::Zero, GammaPreset::Index})
            for (const auto& [s, sigma] : grid) {
                ++checks;
                if (!check_monotone_embedding(p.pair, p.dual, f, s, sigma, preset(p, kind), kSlack).pass) ++violations;
            }
    });
    t.require(violations == 0, std::to_string(violations) + " violations");
    return t.finish(std::to_string(checks) + " checks, " + std::to_string(violations) + " violations");
}

Outcome supnorm_embedding(const std::vector<PreparedPair>& pairs) {
    Tally t;
    std::size_t checks = 0, violations = 0;
    sweep(pairs, 8, [&](const PreparedPair& p, const PointFunction& f) {
        for (auto kind : {GammaPreset::Zero, GammaPreset::Index})
            for (double s : kExponents) {
                ++checks;
                if (!check_supnorm_embedding(p.pair, p.dual, f, SobolevParams::make(s, preset(p, kind)), kSlack).pass)
                    ++violations;
            }
    });
    t.require(violations == 0, std::to_string(violations) + " violations");

    // Worked chain on ℤ₃ with γ = (0, 1, 2), s = 1, f = δ_0, summed directly:
    // f̂(φ) = Σ_x conj(φ(x)) δ_0(x) = 1 and π ≡ 1/3 for every character.
    const auto pair = trivial_pair(load("cyclic3.json"));
    const auto dual = compute_dual(pair);
    const auto params = SobolevParams::make(1.0, {0.0, 1.0, 2.0});
    double direct_norm2 = 0.0, direct_decay = 0.0;
    for (double g : params.gamma) {
        direct_norm2 += (1.0 / 3.0) * (1.0 + g * g);
        direct_decay += (1.0 / 3.0) / (1.0 + g * g);
    }
    double modulus = 0.0;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t x = 0; x < 3; ++x) modulus = std::max(modulus, std::abs(oracle::dft(3, k, x)));
    const PointFunction delta{{1.0, 0.0, 0.0}};
    const double norm = sobolev_norm(pair, dual, delta, params);
    const double constant = supnorm_constant(pair, dual, params);
    const double chain_err = std::max({std::abs(norm - std::sqrt(direct_norm2)), std::abs(norm - std::sqrt(8.0 / 3.0)),
                                       std::abs(constant - modulus * std::sqrt(direct_decay)),
                                       std::abs(constant - std::sqrt(17.0 / 30.0))});
    t.require(chain_err <= 1e-12, "cyclic3 value chain " + sci(chain_err));
    return t.finish(std::to_string(checks) + " checks, " + std::to_string(violations) +
                    " violations; cyclic3 norm sqrt(8/3), constant sqrt(17/30), error " + sci(chain_err));
}

Outcome modulus_embedding(const std::vector<PreparedPair>& pairs) {
    Tally t;
    std::size_t checks = 0, violations = 0;
    sweep(pairs, 9, [&](const PreparedPair& p, const PointFunction& f) {
        for (auto kind : {GammaPreset::Zero, GammaPreset::Index})
            for (double s : kExponents) {
                ++checks;
                if (!check_modulus_embedding(p.pair, p.dual, f, SobolevParams::make(s, preset(p, kind)), kSlack).pass)
                    ++violations;
            }
    });
    t.require(violations == 0, std::to_string(violations) + " violations");
    return t.finish(std::to_string(checks) + " checks, " + std::to_string(violations) + " violations");
}

Outcome determinism() {
    Tally t;
    const std::vector<std::string> args{"hgtool", "embed-report", oracle::data_path("s3.json"), "--k", "e,(12)",
                                        "--gamma", "index", "--s", "1", "--trials", "1000", "--seed", "7"};
    std::ostringstream out1, out2, err;
    const int c1 = cli::run(args, out1, err);
    const int c2 = cli::run(args, out2, err);
    t.require(c1 == cli::kExitOk && c2 == cli::kExitOk, "exit codes " + std::to_string(c1) + "," + std::to_string(c2));
    t.require(!out1.str().empty() && out1.str() == out2.str(), "outputs differ");
    return t.finish("two embed-report runs with seed 7, " + std::to_string(out1.str().size()) + " bytes each, identical");
}

}  // namespace

int main() {
    const auto pairs = prepared_pairs();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"axiom suite", axiom_suite},
        {"haar weights", haar},
        {"dual correctness", dual_correctness},
        {"plancherel", [&] { return plancherel(pairs); }},
        {"inversion", [&] { return inversion(pairs); }},
        {"l2 embedding", [&] { return l2_embedding(pairs); }},
        {"monotone embedding", [&] { return monotone_embedding(pairs); }},
        {"sup-norm embedding", [&] { return supnorm_embedding(pairs); }},
        {"modulus bound", [&] { return modulus_embedding(pairs); }},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
