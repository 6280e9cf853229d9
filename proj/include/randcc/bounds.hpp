#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "randcc/edge_table.hpp"

namespace randcc {

using Rational = boost::rational<long long>;

// Exhaustive labelling enumeration walks all n! orderings; beyond this vertex
// count the factorial is out of reach and the routines refuse to start.
inline constexpr std::uint32_t kExhaustiveCap = 10;

// A small directed graph over dense vertices 0..n-1 with set-semantics arcs.
// This is the analysis-side model: contraction-factor theory quantifies over
// closed out-neighbourhoods N+[v] = {v} u {w : (v, w) in arcs}.
class Digraph {
public:
    using Arc = std::pair<std::uint32_t, std::uint32_t>;

    Digraph(std::uint32_t n, std::vector<Arc> arcs);  // sorts, dedups, range-checks

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    // Closed out-neighbourhood of v as indices into a CSR layout.
    std::span<const std::uint32_t> closed_out(std::uint32_t v) const;

    // True when every vertex has at least one outgoing arc.
    bool all_out_nonempty() const;

private:
    std::uint32_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::uint32_t> offsets_;  // CSR over closed out-neighbourhoods
    std::vector<std::uint32_t> targets_;
};

// Representative of every vertex under an injective labelling: the member of
// the closed out-neighbourhood with the smallest label.  labels[v] must hold
// n pairwise-distinct values; throws std::invalid_argument otherwise.
std::vector<std::uint32_t> representatives_directed(const Digraph& g,
                                                    std::span<const std::uint64_t> labels);

// Expected number of distinct representatives under a uniformly random
// labelling, as an exact rational (exhaustive over all n! labellings).
// Throws capacity_error when n exceeds kExhaustiveCap.
Rational exact_expected_representatives(const Digraph& g);

// Per-vertex census over all n! labellings of how often each vertex is chosen
// as a representative by exactly zero, exactly one, or at least two vertices.
struct TypeCensus {
    struct PerVertex {
        std::uint64_t type0 = 0;      // labellings where nobody picks v
        std::uint64_t type1 = 0;      // exactly one vertex picks v
        std::uint64_t type2plus = 0;  // two or more pick v
    };

    std::vector<PerVertex> per_vertex;
    std::uint64_t labelling_count = 0;  // n!

    // Expected counts of each type, summed over vertices.
    Rational expected_type0() const;
    Rational expected_type1() const;
    Rational expected_type2plus() const;
};

TypeCensus type_census(const Digraph& g);  // throws capacity_error past the cap

// Check that no vertex is picked by exactly one vertex more often than it is
// picked by nobody.  Requires every out-neighbourhood non-empty (else the
// comparison is meaningless and std::invalid_argument is thrown).
struct Lemma1Result {
    struct Violation {
        std::uint32_t vertex = 0;
        std::uint64_t type1 = 0;
        std::uint64_t type0 = 0;
    };

    bool holds = true;
    std::optional<Violation> violation;
};

Lemma1Result lemma1_check(const Digraph& g);

// Which random-ordering model a Monte-Carlo estimate samples from.
enum class GammaMethod {
    full,    // uniformly random permutation of the vertex labels
    affine,  // fresh affine key over GF(2^64) per sample
    keyed,   // fresh Feistel permutation seed per sample
};

// Monte-Carlo estimate of the contraction factor: mean fraction of distinct
// representatives over `samples` independently drawn orderings of the
// symmetrized input.  The input must be loop-free with no isolated vertices
// after symmetrization; throws std::invalid_argument otherwise, and for
// samples == 0.  Deterministic for fixed (g, method, samples, seed).
struct GammaEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // 0 when samples < 2
    std::uint64_t samples = 0;
};

GammaEstimate monte_carlo_gamma(const EdgeTable& g, GammaMethod method,
                                std::uint64_t samples, std::uint64_t seed);

}  // namespace randcc
