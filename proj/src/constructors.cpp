#include "hyper/constructors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

namespace hyper {

namespace {

Index find_identity(const CayleyTable& t) {
    const auto n = t.size();
    for (Index e = 0; e < n; ++e) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x) ok = t.table[e][x] == x && t.table[x][e] == x;
        if (ok) return e;
    }
    throw GroupAxiomError("table has no identity element", {0, 0, 0});
}

std::vector<Index> group_inverses(const CayleyTable& t, Index e) {
    const auto n = t.size();
    std::vector<Index> inv(n);
    for (Index x = 0; x < n; ++x) {
        bool found = false;
        for (Index y = 0; y < n && !found; ++y) {
            if (t.table[x][y] == e && t.table[y][x] == e) {
                inv[x] = y;
                found = true;
            }
        }
        if (!found) throw GroupAxiomError("element " + t.labels[x] + " has no inverse", {x, x, e});
    }
    return inv;
}

}  // namespace

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(r);
}

double krawtchouk(std::size_t d, std::size_t k, std::size_t j) {
    double sum = 0.0;
    for (std::size_t i = 0; i <= k; ++i) {
        const double term = binomial(j, i) * binomial(d - j, k - i);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

FiniteHypergroup cyclic(std::size_t n) {
    if (n == 0) throw ParameterError("cyclic group order must be positive");
    std::vector<std::string> labels;
    std::vector<double> constants(n * n * n, 0.0);
    std::vector<Index> inv(n);
    for (Index x = 0; x < n; ++x) {
        labels.push_back(std::to_string(x));
        inv[x] = (n - x) % n;
        for (Index y = 0; y < n; ++y) constants[(x * n + y) * n + (x + y) % n] = 1.0;
    }
    return FiniteHypergroup(std::move(labels), std::move(constants), std::move(inv), 0,
                            std::vector<double>(n, 1.0));
}

CayleyTable s3_table() {
    // Permutations of {1,2,3} in one-line notation; products compose right to left.
    const std::vector<std::array<int, 3>> perms = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
    CayleyTable t;
    t.labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    const auto n = perms.size();
    t.table.assign(n, std::vector<Index>(n));
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            std::array<int, 3> composed{};
            for (int i = 0; i < 3; ++i) composed[i] = perms[x][perms[y][i] - 1];
            t.table[x][y] = static_cast<Index>(std::find(perms.begin(), perms.end(), composed) - perms.begin());
        }
    }
    return t;
}

void check_group(const CayleyTable& t) {
    const auto n = t.size();
    if (n == 0) throw GroupAxiomError("empty group table", {0, 0, 0});
    if (t.table.size() != n) throw StructuralError("Cayley table row count does not match label count");
    for (const auto& row : t.table) {
        if (row.size() != n) throw StructuralError("Cayley table row length does not match label count");
        for (Index z : row)
            if (z >= n) throw StructuralError("Cayley table entry out of range");
    }
    std::unordered_set<std::string> distinct(t.labels.begin(), t.labels.end());
    if (distinct.size() != n) throw StructuralError("Cayley table labels are not distinct");

    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z) {
                if (t.table[t.table[x][y]][z] != t.table[x][t.table[y][z]]) {
                    throw GroupAxiomError("table is not associative at (" + t.labels[x] + ", " + t.labels[y] +
                                              ", " + t.labels[z] + ")",
                                          {x, y, z});
                }
            }
    const Index e = find_identity(t);
    group_inverses(t, e);
}

FiniteHypergroup from_cayley_table(const CayleyTable& t) {
    check_group(t);
    const auto n = t.size();
    const Index e = find_identity(t);
    auto inv = group_inverses(t, e);
    std::vector<double> constants(n * n * n, 0.0);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) constants[(x * n + y) * n + t.table[x][y]] = 1.0;
    return FiniteHypergroup(t.labels, std::move(constants), std::move(inv), e, std::vector<double>(n, 1.0));
}

FiniteHypergroup conjugacy_class_hypergroup(const CayleyTable& t) {
    check_group(t);
    const auto n = t.size();
    const Index e = find_identity(t);
    const auto inv = group_inverses(t, e);

    constexpr Index kNone = static_cast<Index>(-1);
    std::vector<Index> class_of(n, kNone);
    std::vector<std::vector<Index>> classes;
    for (Index x = 0; x < n; ++x) {
        if (class_of[x] != kNone) continue;
        const Index id = classes.size();
        classes.emplace_back();
        for (Index g = 0; g < n; ++g) {
            const Index conj = t.table[t.table[g][x]][inv[g]];
            if (class_of[conj] == kNone) {
                class_of[conj] = id;
                classes[id].push_back(conj);
            }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }

    const auto m = classes.size();
    std::vector<double> constants(m * m * m, 0.0);
    for (Index a = 0; a < m; ++a) {
        for (Index b = 0; b < m; ++b) {
            std::vector<std::size_t> counts(m, 0);
            for (Index x : classes[a])
                for (Index y : classes[b]) ++counts[class_of[t.table[x][y]]];
            const double pairs = static_cast<double>(classes[a].size() * classes[b].size());
            for (Index d = 0; d < m; ++d) constants[(a * m + b) * m + d] = static_cast<double>(counts[d]) / pairs;
        }
    }

    std::vector<std::string> labels;
    std::vector<Index> involution(m);
    std::vector<double> haar(m);
    for (Index a = 0; a < m; ++a) {
        labels.push_back(t.labels[classes[a].front()]);
        involution[a] = class_of[inv[classes[a].front()]];
        haar[a] = static_cast<double>(classes[a].size());
    }
    return FiniteHypergroup(std::move(labels), std::move(constants), std::move(involution), class_of[e],
                            std::move(haar));
}

GelfandPair double_coset_pair(const CayleyTable& t, std::vector<Index> subgroup) {
    return GelfandPair(from_cayley_table(t), std::move(subgroup));
}

FiniteHypergroup hamming(std::size_t d) {
    if (d == 0) throw ParameterError("Hamming dimension must be positive");
    const auto m = d + 1;
    std::vector<double> constants(m * m * m, 0.0);
    for (Index i = 0; i <= d; ++i) {
        for (Index j = 0; j <= d; ++j) {
            for (Index k = 0; k <= d; ++k) {
                // Fix u = 0 and w of weight k; count v with |v| = i and d(v, w) = j.
                // With a = |v ∩ w|: i + k − 2a = j.
                const long twice_a = static_cast<long>(i + k) - static_cast<long>(j);
                if (twice_a < 0 || twice_a % 2 != 0) continue;
                const auto a = static_cast<std::size_t>(twice_a / 2);
                if (a > i || a > k || i - a > d - k) continue;
                const double intersection = binomial(k, a) * binomial(d - k, i - a);
                const double numerator = intersection * binomial(d, k);
                const double denominator = binomial(d, i) * binomial(d, j);
                constants[(i * m + j) * m + k] = numerator / denominator;
            }
        }
    }
    std::vector<std::string> labels;
    std::vector<Index> involution(m);
    std::vector<double> haar(m);
    for (Index k = 0; k <= d; ++k) {
        labels.push_back(std::to_string(k));
        involution[k] = k;
        haar[k] = binomial(d, k);
    }
    return FiniteHypergroup(std::move(labels), std::move(constants), std::move(involution), 0, std::move(haar));
}

}  // namespace hyper
