#include "hyper/gelfand.hpp"

#include <algorithm>
#include <cmath>

namespace hyper {

namespace {

std::vector<Index> sorted_unique(std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<double> haar_on_k(const FiniteHypergroup& g, std::span<const Index> k) {
    std::vector<double> omega(g.size(), 0.0);
    double total = 0.0;
    for (Index x : k) total += g.haar(x);
    for (Index x : k) omega[x] = g.haar(x) / total;
    return omega;
}

}  // namespace

std::vector<Index> double_coset_of(const FiniteHypergroup& g, std::span<const Index> k, Index x) {
    g.check_index(x);
    std::vector<bool> hit(g.size(), false);
    for (Index k1 : k) {
        const auto left = g.product(k1, x);
        for (Index u = 0; u < g.size(); ++u) {
            if (left[u] <= 0.0) continue;
            for (Index k2 : k) {
                const auto right = g.product(u, k2);
                for (Index z = 0; z < g.size(); ++z)
                    if (right[z] > 0.0) hit[z] = true;
            }
        }
    }
    std::vector<Index> out;
    for (Index z = 0; z < g.size(); ++z)
        if (hit[z]) out.push_back(z);
    return out;
}

DoubleCosetPartition double_cosets(const FiniteHypergroup& g, std::span<const Index> k) {
    const auto members = sorted_unique({k.begin(), k.end()});
    for (Index x : members) g.check_index(x);
    if (members.empty() || !is_subhypergroup(g, members)) {
        throw NotSubhypergroupError("K is not a subhypergroup of G");
    }
    const auto n = g.size();
    constexpr Index kUnassigned = static_cast<Index>(-1);

    DoubleCosetPartition partition;
    partition.block_of.assign(n, kUnassigned);

    auto add_block = [&](Index rep) {
        auto block = double_coset_of(g, members, rep);
        const Index id = partition.blocks.size();
        for (Index z : block) {
            if (partition.block_of[z] != kUnassigned) {
                throw ConsistencyError("double cosets overlap at element " + g.label(z));
            }
            partition.block_of[z] = id;
        }
        partition.representatives.push_back(block.front());
        partition.blocks.push_back(std::move(block));
    };

    add_block(g.identity());
    for (Index x = 0; x < n; ++x)
        if (partition.block_of[x] == kUnassigned) add_block(x);

    // Closure: every member of a block must generate the same block.
    for (const auto& block : partition.blocks) {
        for (Index y : block) {
            if (double_coset_of(g, members, y) != block) {
                throw ConsistencyError("double coset of " + g.label(y) + " differs from its block");
            }
        }
    }
    return partition;
}

std::vector<double> block_measure(const GelfandPair& pair, Index block) {
    const auto& g = pair.group();
    std::vector<double> omega(g.size(), 0.0);
    const auto& members = pair.partition().blocks.at(block);
    for (Index x : members) omega[x] = g.haar(x) / pair.block_haar(block);
    return omega;
}

FiniteHypergroup quotient_hypergroup(const FiniteHypergroup& g, const DoubleCosetPartition& partition) {
    if (!g.has_haar()) throw StructuralError("quotient requires Haar weights on G");
    const auto m = partition.size();
    const auto n = g.size();

    std::vector<std::vector<double>> measures(m, std::vector<double>(n, 0.0));
    for (Index a = 0; a < m; ++a) {
        double total = 0.0;
        for (Index x : partition.blocks[a]) total += g.haar(x);
        for (Index x : partition.blocks[a]) measures[a][x] = g.haar(x) / total;
    }

    std::vector<double> constants(m * m * m, 0.0);
    for (Index a = 0; a < m; ++a) {
        for (Index b = 0; b < m; ++b) {
            double* row = constants.data() + (a * m + b) * m;
            for (Index x : partition.blocks[a]) {
                for (Index y : partition.blocks[b]) {
                    const double w = measures[a][x] * measures[b][y];
                    const auto xy = g.product(x, y);
                    for (Index z = 0; z < n; ++z) row[partition.block_of[z]] += w * xy[z];
                }
            }
        }
    }

    std::vector<std::string> labels;
    std::vector<Index> involution(m);
    for (Index a = 0; a < m; ++a) {
        labels.push_back(g.label(partition.representatives[a]));
        involution[a] = partition.block_of[g.inv(partition.representatives[a])];
    }

    FiniteHypergroup raw(std::move(labels), std::move(constants), std::move(involution),
                         partition.block_of[g.identity()]);
    auto report = validate_axioms(raw, kDefaultValidationTol);
    if (!report.passed()) {
        throw ConsistencyError("quotient hypergroup fails its axioms; the input hypergroup is inconsistent");
    }
    std::vector<double> haar;
    try {
        haar = compute_haar(raw);
    } catch (const HaarError& err) {
        throw ConsistencyError(std::string("quotient Haar weights: ") + err.what());
    }
    return raw.with_haar(std::move(haar));
}

GelfandPair::GelfandPair(FiniteHypergroup g, std::vector<Index> k)
    : g_(std::move(g)),
      k_(sorted_unique(std::move(k))),
      partition_(double_cosets(g_, k_)),
      omega_k_(g_.has_haar() ? haar_on_k(g_, k_) : std::vector<double>{}),
      quotient_(g_.has_haar() ? quotient_hypergroup(g_, partition_)
                              : throw StructuralError("Gelfand pair requires Haar weights on G")) {
    block_haar_.assign(partition_.size(), 0.0);
    for (Index x = 0; x < g_.size(); ++x) block_haar_[partition_.block_of[x]] += g_.haar(x);
}

PointFunction biinvariant_project(const GelfandPair& pair, const PointFunction& f) {
    const auto& g = pair.group();
    if (f.size() != g.size()) throw StructuralError("function length does not match hypergroup size");
    const auto omega = pair.omega_k();
    PointFunction out{std::vector<Complex>(g.size())};
    for (Index x = 0; x < g.size(); ++x) {
        Complex sum = 0.0;
        for (Index k1 : pair.subgroup()) {
            for (Index k2 : pair.subgroup()) {
                sum += omega[k1] * omega[k2] * translate_value(g, f, k1, x, k2);
            }
        }
        out[x] = sum;
    }
    return out;
}

double biinvariance_residual(const GelfandPair& pair, const PointFunction& f) {
    if (f.size() != pair.group().size()) throw StructuralError("function length does not match hypergroup size");
    double worst = 0.0;
    for (const auto& block : pair.partition().blocks) {
        const Complex anchor = f[block.front()];
        for (Index x : block) worst = std::max(worst, std::abs(f[x] - anchor));
    }
    return worst;
}

double commutativity_residual(const GelfandPair& pair) {
    const auto& q = pair.quotient();
    double worst = 0.0;
    for (Index a = 0; a < q.size(); ++a)
        for (Index b = 0; b < q.size(); ++b)
            for (Index d = 0; d < q.size(); ++d) worst = std::max(worst, std::abs(q.c(a, b, d) - q.c(b, a, d)));
    return worst;
}

bool is_gelfand_pair(const GelfandPair& pair, double tol) { return commutativity_residual(pair) <= tol; }

PointFunction lift_blocks(const GelfandPair& pair, std::span<const Complex> block_values) {
    if (block_values.size() != pair.blocks()) throw StructuralError("block value count does not match block count");
    PointFunction f{std::vector<Complex>(pair.group().size())};
    for (Index x = 0; x < f.size(); ++x) f[x] = block_values[pair.block_of(x)];
    return f;
}

std::vector<Complex> restrict_to_blocks(const GelfandPair& pair, const PointFunction& f) {
    if (f.size() != pair.group().size()) throw StructuralError("function length does not match hypergroup size");
    std::vector<Complex> out;
    out.reserve(pair.blocks());
    for (Index rep : pair.partition().representatives) out.push_back(f[rep]);
    return out;
}

}  // namespace hyper
