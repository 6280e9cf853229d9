#include "randcc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "randcc/errors.hpp"
#include "randcc/gf64.hpp"
#include "randcc/ordering.hpp"
#include "randcc/rng.hpp"

namespace randcc {

Digraph::Digraph(std::uint32_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    for (const Arc& arc : arcs_)
        if (arc.first >= n_ || arc.second >= n_)
            throw std::invalid_argument("arc endpoint out of range");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

    // CSR over closed out-neighbourhoods: v itself plus its non-loop targets.
    offsets_.assign(n_ + 1, 0);
    for (const Arc& arc : arcs_)
        if (arc.first != arc.second) ++offsets_[arc.first + 1];
    for (std::uint32_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v] + 1;
    targets_.resize(offsets_[n_]);
    std::vector<std::uint32_t> cursor(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
        targets_[offsets_[v]] = v;
        cursor[v] = offsets_[v] + 1;
    }
    for (const Arc& arc : arcs_)
        if (arc.first != arc.second) targets_[cursor[arc.first]++] = arc.second;
    for (std::uint32_t v = 0; v < n_; ++v)
        std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
}

std::span<const std::uint32_t> Digraph::closed_out(std::uint32_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
}

bool Digraph::all_out_nonempty() const {
    for (std::uint32_t v = 0; v < n_; ++v)
        if (closed_out(v).size() < 2) return false;
    return true;
}

std::vector<std::uint32_t> representatives_directed(const Digraph& g,
                                                    std::span<const std::uint64_t> labels) {
    const std::uint32_t n = g.vertex_count();
    if (labels.size() != n)
        throw std::invalid_argument("need exactly one label per vertex");
    std::vector<std::uint64_t> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("labels must be pairwise distinct");

    std::vector<std::uint32_t> reps(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        const auto nb = g.closed_out(v);
        std::uint32_t best = nb[0];
        for (const std::uint32_t t : nb)
            if (labels[t] < labels[best]) best = t;
        reps[v] = best;
    }
    return reps;
}

namespace {

std::uint64_t factorial(std::uint32_t n) {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_within_cap(std::uint32_t n) {
    if (n > kExhaustiveCap)
        throw capacity_error("exhaustive enumeration over " + std::to_string(n) +
                             "! labellings refused (cap: " + std::to_string(kExhaustiveCap) +
                             " vertices)");
}

}  // namespace

TypeCensus type_census(const Digraph& g) {
    const std::uint32_t n = g.vertex_count();
    require_within_cap(n);

    TypeCensus census;
    census.per_vertex.assign(n, {});
    census.labelling_count = factorial(n);
    if (n == 0) return census;

    // Branch on the label of vertex 0; each branch walks the (n-1)! orders of
    // the remaining labels.  Counts are exact integers, so accumulation order
    // cannot change the result.
    std::vector<std::vector<TypeCensus::PerVertex>> branch(n);

#pragma omp parallel for schedule(dynamic)
    for (std::uint32_t f = 0; f < n; ++f) {
        std::vector<TypeCensus::PerVertex> local(n);
        std::vector<std::uint32_t> label(n);
        label[0] = f;
        std::vector<std::uint32_t> rest;
        rest.reserve(n - 1);
        for (std::uint32_t v = 0; v < n; ++v)
            if (v != f) rest.push_back(v);

        std::vector<std::uint32_t> picked(n);
        do {
            for (std::uint32_t i = 1; i < n; ++i) label[i] = rest[i - 1];
            std::fill(picked.begin(), picked.end(), 0);
            for (std::uint32_t v = 0; v < n; ++v) {
                const auto nb = g.closed_out(v);
                std::uint32_t best = nb[0];
                for (const std::uint32_t t : nb)
                    if (label[t] < label[best]) best = t;
                ++picked[best];
            }
            for (std::uint32_t v = 0; v < n; ++v) {
                if (picked[v] == 0)
                    ++local[v].type0;
                else if (picked[v] == 1)
                    ++local[v].type1;
                else
                    ++local[v].type2plus;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
        branch[f] = std::move(local);
    }

    for (std::uint32_t f = 0; f < n; ++f)
        for (std::uint32_t v = 0; v < n; ++v) {
            census.per_vertex[v].type0 += branch[f][v].type0;
            census.per_vertex[v].type1 += branch[f][v].type1;
            census.per_vertex[v].type2plus += branch[f][v].type2plus;
        }
    return census;
}

namespace {

Rational expected_sum(const TypeCensus& census,
                      std::uint64_t TypeCensus::PerVertex::* field) {
    long long sum = 0;
    for (const auto& pv : census.per_vertex) sum += static_cast<long long>(pv.*field);
    return Rational(sum, static_cast<long long>(census.labelling_count));
}

}  // namespace

Rational TypeCensus::expected_type0() const {
    return expected_sum(*this, &PerVertex::type0);
}

Rational TypeCensus::expected_type1() const {
    return expected_sum(*this, &PerVertex::type1);
}

Rational TypeCensus::expected_type2plus() const {
    return expected_sum(*this, &PerVertex::type2plus);
}

Rational exact_expected_representatives(const Digraph& g) {
    const TypeCensus census = type_census(g);
    // E[distinct representatives] = sum over v of Pr[somebody picks v].
    long long picked_at_least_once = 0;
    for (const auto& pv : census.per_vertex)
        picked_at_least_once += static_cast<long long>(pv.type1 + pv.type2plus);
    return Rational(picked_at_least_once, static_cast<long long>(census.labelling_count));
}

Lemma1Result lemma1_check(const Digraph& g) {
    if (!g.all_out_nonempty())
        throw std::invalid_argument(
            "every vertex needs an outgoing arc to another vertex for this comparison");
    const TypeCensus census = type_census(g);
    Lemma1Result result;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        const auto& pv = census.per_vertex[v];
        if (pv.type1 > pv.type0) {
            result.holds = false;
            result.violation = Lemma1Result::Violation{v, pv.type1, pv.type0};
            break;
        }
    }
    return result;
}

GammaEstimate monte_carlo_gamma(const EdgeTable& g, GammaMethod method,
                                std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    const EdgeTable sym = symmetrize(g);
    if (sym.empty()) throw std::invalid_argument("cannot estimate on an empty table");
    for (const Edge& e : sym.rows())
        if (e.v == e.w)
            throw std::invalid_argument(
                "loop rows are not allowed here: every vertex needs a real neighbour");

    // Dense CSR of neighbour indices; rows are sorted and loop-free, and the
    // symmetric closure makes every vertex a group key.
    const std::vector<VertexId> ids = sym.distinct_vertices();
    const std::size_t n = ids.size();
    auto index_of = [&](VertexId v) {
        return static_cast<std::uint32_t>(
            std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::vector<std::uint32_t> offsets(n + 1, 0);
    for (const Edge& e : sym.rows()) ++offsets[index_of(e.v) + 1];
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    std::vector<std::uint32_t> targets(sym.row_count());
    {
        std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
        for (const Edge& e : sym.rows()) targets[cursor[index_of(e.v)]++] = index_of(e.w);
    }

    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;

#pragma omp parallel
    {
        std::vector<std::uint64_t> keys(n);
        std::vector<std::uint32_t> mark(n, 0);
        std::uint32_t epoch = 0;

#pragma omp for reduction(+ : sum, sum_sq) schedule(static)
        for (std::uint64_t s = 0; s < samples; ++s) {
            switch (method) {
                case GammaMethod::full: {
                    // Uniform permutation of 0..n-1 as the label vector.
                    SplitMix64 gen(derive_seed(seed, s));
                    for (std::size_t i = 0; i < n; ++i) keys[i] = i;
                    for (std::size_t i = n; i > 1; --i)
                        std::swap(keys[i - 1], keys[gen.next_below(i)]);
                    break;
                }
                case GammaMethod::affine: {
                    const gf64::AffineKey key = gf64::sample_key(seed, s);
                    for (std::size_t i = 0; i < n; ++i) keys[i] = gf64::axb(key, ids[i]);
                    break;
                }
                case GammaMethod::keyed: {
                    const std::uint64_t sub = derive_seed(seed, s);
                    for (std::size_t i = 0; i < n; ++i)
                        keys[i] = feistel_permute(sub, ids[i]);
                    break;
                }
            }

            ++epoch;
            std::uint64_t distinct = 0;
            for (std::uint32_t v = 0; v < n; ++v) {
                std::uint32_t best = v;
                for (std::uint32_t t = offsets[v]; t < offsets[v + 1]; ++t)
                    if (keys[targets[t]] < keys[best]) best = targets[t];
                if (mark[best] != epoch) {
                    mark[best] = epoch;
                    ++distinct;
                }
            }
            sum += distinct;
            sum_sq += distinct * distinct;
        }
    }

    GammaEstimate estimate;
    estimate.samples = samples;
    const long double count = static_cast<long double>(samples);
    const long double mean_count = static_cast<long double>(sum) / count;
    estimate.mean = static_cast<double>(mean_count / static_cast<long double>(n));
    if (samples >= 2) {
        const long double var_count =
            (static_cast<long double>(sum_sq) - count * mean_count * mean_count) /
            (count - 1.0L);
        const long double var = var_count < 0 ? 0 : var_count;  // numeric floor
        estimate.std_error = static_cast<double>(
            std::sqrt(var / count) / static_cast<long double>(n));
    }
    return estimate;
}

}  // namespace randcc
