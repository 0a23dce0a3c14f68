#include "astopo/synth.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "astopo/errors.hpp"

namespace astopo {

std::uint64_t RandomState::next_below(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("next_below: bound must be positive");
    }
    // Mask rejection keeps the draw exactly uniform and platform-stable.
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        const std::uint64_t x = engine_() & mask;
        if (x < n) {
            return x;
        }
    }
}

DegreeSequence sample_degrees(const BoundedPowerLaw& d, std::int64_t n, RandomState& state) {
    if (n < 1) {
        throw DomainError("sample_degrees: sample count must be positive");
    }
    const std::vector<double> cdf = d.cumulative_table();
    DegreeSequence seq;
    seq.degrees.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const double u = state.next_uniform();
        // First table entry >= u; the last entry is exactly 1 and u < 1.
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        seq.degrees.push_back(d.k_min() + static_cast<int>(it - cdf.begin()));
    }
    return seq;
}

namespace {

// Unordered pair key; node ids in generated graphs are 0..n-1.
std::uint64_t edge_key(std::uint64_t n, NodeId u, NodeId v) {
    const auto a = static_cast<std::uint64_t>(std::min(u, v));
    const auto b = static_cast<std::uint64_t>(std::max(u, v));
    return a * n + b;
}

}  // namespace

GenerateResult configuration_model(const DegreeSequence& seq, RandomState& state, bool simple) {
    const std::size_t n = seq.degrees.size();
    if (n == 0) {
        throw DataError("configuration_model: empty degree sequence");
    }
    std::vector<int> degrees = seq.degrees;
    std::int64_t total = 0;
    for (int d : degrees) {
        if (d < 0) {
            throw DataError("configuration_model: negative degree " + std::to_string(d));
        }
        total += d;
    }

    GenerateResult out;
    if (total % 2 != 0) {
        const auto node = static_cast<std::size_t>(state.next_below(n));
        ++degrees[node];
        ++total;
        out.degree_adjusted = true;
        out.adjusted_node = static_cast<NodeId>(node);
    }
    if (total == 0) {
        return out;
    }

    if (simple) {
        const int d_max = *std::max_element(degrees.begin(), degrees.end());
        if (static_cast<std::int64_t>(d_max) > total - d_max) {
            throw DataError("configuration_model: degree " + std::to_string(d_max) +
                            " exceeds the " + std::to_string(total - d_max) +
                            " stubs available from other nodes");
        }
        if (static_cast<std::size_t>(d_max) > n - 1) {
            throw DataError("configuration_model: degree " + std::to_string(d_max) +
                            " exceeds the " + std::to_string(n - 1) +
                            " distinct possible neighbours");
        }
    }

    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(total));
    for (std::size_t node = 0; node < n; ++node) {
        stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[node]),
                     static_cast<NodeId>(node));
    }
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(state.next_below(i + 1));
        std::swap(stubs[i], stubs[j]);
    }

    auto& edges = out.edges.edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        edges.push_back(Edge{stubs[i], stubs[i + 1]});
    }
    if (!simple) {
        return out;
    }

    // Rewire self-loops and surplus duplicates by random stub swaps:
    // (a,b),(c,d) -> (a,d),(c,b). The partner edge stays valid, the bad edge
    // must become loop-free and new; bounded retries, leftovers removed.
    std::unordered_map<std::uint64_t, int> multiplicity;
    multiplicity.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        ++multiplicity[edge_key(n, e.u, e.v)];
    }
    const auto is_bad = [&](const Edge& e) {
        return e.u == e.v || multiplicity[edge_key(n, e.u, e.v)] > 1;
    };

    constexpr int kAttemptsPerEdge = 256;
    std::vector<std::size_t> failed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!is_bad(edges[i])) {
            continue;
        }
        bool fixed = false;
        for (int attempt = 0; attempt < kAttemptsPerEdge && !fixed; ++attempt) {
            const auto j = static_cast<std::size_t>(state.next_below(edges.size()));
            if (j == i) {
                continue;
            }
            const Edge bad = edges[i];
            const Edge other = edges[j];
            const Edge new_i{bad.u, other.v};
            const Edge new_j{other.u, bad.v};
            if (new_i.u == new_i.v || new_j.u == new_j.v) {
                continue;
            }
            const std::uint64_t key_i = edge_key(n, new_i.u, new_i.v);
            const std::uint64_t key_j = edge_key(n, new_j.u, new_j.v);
            if (key_i == key_j) {
                continue;
            }
            --multiplicity[edge_key(n, bad.u, bad.v)];
            --multiplicity[edge_key(n, other.u, other.v)];
            if (multiplicity[key_i] == 0 && multiplicity[key_j] == 0) {
                ++multiplicity[key_i];
                ++multiplicity[key_j];
                edges[i] = new_i;
                edges[j] = new_j;
                ++out.rewire_swaps;
                fixed = true;
            } else {
                ++multiplicity[edge_key(n, bad.u, bad.v)];
                ++multiplicity[edge_key(n, other.u, other.v)];
            }
        }
        if (!fixed) {
            failed.push_back(i);
        }
    }

    if (!failed.empty()) {
        std::vector<bool> drop(edges.size(), false);
        for (std::size_t i : failed) {
            if (!is_bad(edges[i])) {
                continue;  // a later swap repaired it
            }
            if (edges[i].u == edges[i].v) {
                ++out.residual_self_loops;
            } else {
                ++out.residual_duplicates;
            }
            --multiplicity[edge_key(n, edges[i].u, edges[i].v)];
            drop[i] = true;
        }
        std::size_t kept = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!drop[i]) {
                edges[kept++] = edges[i];
            }
        }
        edges.resize(kept);
    }
    return out;
}

}  // namespace astopo
