#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyper/core.hpp"

namespace hyper {

/// Double cosets KxK. Block 0 is always K itself; the remaining blocks are
/// ordered by their lowest-index representative.
struct DoubleCosetPartition {
    std::vector<std::vector<Index>> blocks;
    std::vector<Index> representatives;
    std::vector<Index> block_of;

    std::size_t size() const noexcept { return blocks.size(); }
};

/// A hypergroup G with a subhypergroup K, its double-coset partition and the
/// hypergroup induced on the blocks.
class GelfandPair {
public:
    /// Throws NotSubhypergroupError if K is not a subhypergroup of G, and
    /// StructuralError if G carries no Haar weights.
    GelfandPair(FiniteHypergroup g, std::vector<Index> k);

    const FiniteHypergroup& group() const noexcept { return g_; }
    std::span<const Index> subgroup() const noexcept { return k_; }
    const DoubleCosetPartition& partition() const noexcept { return partition_; }
    const FiniteHypergroup& quotient() const noexcept { return quotient_; }
    /// Normalized Haar measure of K, stored on all of G (zero outside K).
    std::span<const double> omega_k() const noexcept { return omega_k_; }

    std::size_t blocks() const noexcept { return partition_.size(); }
    Index block_of(Index x) const { return partition_.block_of.at(x); }
    /// Σ_{x ∈ block} h(x).
    double block_haar(Index block) const { return block_haar_.at(block); }
    /// Block containing inv(x) for any x in the given block.
    Index block_inverse(Index block) const { return quotient_.inv(block); }

private:
    FiniteHypergroup g_;
    std::vector<Index> k_;
    DoubleCosetPartition partition_;
    std::vector<double> omega_k_;
    std::vector<double> block_haar_;
    FiniteHypergroup quotient_;
};

/// Throws NotSubhypergroupError when K is not a subhypergroup, and
/// ConsistencyError when the computed sets fail to partition G.
DoubleCosetPartition double_cosets(const FiniteHypergroup& g, std::span<const Index> k);

/// KxK as a sorted index list.
std::vector<Index> double_coset_of(const FiniteHypergroup& g, std::span<const Index> k, Index x);

/// f^♮(x) = Σ_{k1,k2 ∈ K} ω_K(k1) ω_K(k2) (δ_k1 ∗ δ_x ∗ δ_k2)(f).
PointFunction biinvariant_project(const GelfandPair& pair, const PointFunction& f);

/// Largest deviation of f from its block average.
double biinvariance_residual(const GelfandPair& pair, const PointFunction& f);

/// The probability measure used for block a when forming the quotient:
/// Haar-proportional on the block.
std::vector<double> block_measure(const GelfandPair& pair, Index block);

/// Structure constants on the blocks: c_q(a, b, d) is the mass that
/// ω_a ∗ ω_b assigns to block d. Haar weights are recomputed.
/// Throws ConsistencyError if the result fails the hypergroup axioms.
FiniteHypergroup quotient_hypergroup(const FiniteHypergroup& g, const DoubleCosetPartition& partition);

/// max_{a,b,d} |c_q(a,b,d) − c_q(b,a,d)|.
double commutativity_residual(const GelfandPair& pair);

bool is_gelfand_pair(const GelfandPair& pair, double tol = kDefaultAlgebraicTol);

/// Lift a per-block vector to a function on G.
PointFunction lift_blocks(const GelfandPair& pair, std::span<const Complex> block_values);
/// Restrict a bi-invariant function to its block values (reads the representative).
std::vector<Complex> restrict_to_blocks(const GelfandPair& pair, const PointFunction& f);

}  // namespace hyper
