#pragma once

#include <string>
#include <vector>

#include "hyper/core.hpp"
#include "hyper/gelfand.hpp"

namespace hyper {

/// Group multiplication table: table[x][y] is the index of x·y.
struct CayleyTable {
    std::vector<std::string> labels;
    std::vector<std::vector<Index>> table;

    std::size_t size() const noexcept { return labels.size(); }
};

/// ℤ_n with counting Haar measure. Throws ParameterError for n = 0.
FiniteHypergroup cyclic(std::size_t n);

/// Symmetric group on three letters, ordered e, (12), (13), (23), (123), (132).
CayleyTable s3_table();

/// Verifies the group axioms; throws GroupAxiomError with a witness triple.
void check_group(const CayleyTable& table);

/// Point-mass convolution of a group. Throws GroupAxiomError if not a group.
FiniteHypergroup from_cayley_table(const CayleyTable& table);

/// Conjugacy classes of a group with the normalized class-sum product.
/// Classes are ordered by their lowest-index member, which also names them.
FiniteHypergroup conjugacy_class_hypergroup(const CayleyTable& table);

/// Group hypergroup of the table with K = subgroup.
/// Throws NotSubhypergroupError if the index set is not a subgroup.
GelfandPair double_coset_pair(const CayleyTable& table, std::vector<Index> subgroup);

/// Distance classes 0..d of the binary d-cube: c(i, j, k) is the probability
/// that a step of length i followed by a uniform step of length j ends at
/// distance k. Throws ParameterError for d = 0.
FiniteHypergroup hamming(std::size_t d);

/// Binary Krawtchouk polynomial K_k(j) for the d-cube.
double krawtchouk(std::size_t d, std::size_t k, std::size_t j);

double binomial(std::size_t n, std::size_t k);

}  // namespace hyper
