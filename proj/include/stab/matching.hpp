#pragma once

#include <optional>

#include "stab/interleave.hpp"

namespace stab {

// Bipartite graph on B(M) ⊔ B(N) with an edge between eps-interleaved pairs;
// the required sets are the 2eps-significant intervals, which any
// eps-matching must cover.
struct InterleavingGraph {
    Rat eps;
    std::vector<std::string> left, right;
    std::vector<std::vector<int>> adj;  // left index -> right indices
    std::vector<char> required_left, required_right;
};

struct MatchingResult {
    Rat eps;
    std::vector<std::pair<std::string, std::string>> pairs;
    // Unmatched ids with their significance thresholds (triviality evidence).
    std::vector<std::pair<std::string, DecoratedValue>> unmatched;
};

enum class Side { left, right };

// Either a matching covering the side's required set, or a Hall violator:
// a required set X with |X| > |neighbors(X)|.
struct CoverResult {
    std::optional<std::vector<std::pair<int, int>>> matching;  // (left, right) indices
    std::vector<int> violating;                                // indices on the given side
};

InterleavingGraph build_graph(const Barcode& M, const Barcode& N, const Rat& eps);

CoverResult cover_matching(const InterleavingGraph& G, Side side);

// Cantor–Bernstein style combination: per connected component of the union
// of sigma and tau, keeps whichever submatching covers that component's
// required vertices. sigma must cover required-left, tau required-right.
std::vector<std::pair<int, int>> combine_matchings(
    const std::vector<std::pair<int, int>>& sigma,
    const std::vector<std::pair<int, int>>& tau, const InterleavingGraph& G);

// An eps-matching, if one exists.
std::optional<MatchingResult> matching_feasible(const Barcode& M, const Barcode& N,
                                                const Rat& eps);

struct BottleneckResult {
    ExtRat value;
    bool attained = false;
    // Matching at the reported value if attained, otherwise at the nearest
    // probed feasible value above the infimum; absent when value is +inf.
    std::optional<MatchingResult> witness;
};

// Exact d_B over the critical set of endpoint gaps and triviality infima.
BottleneckResult bottleneck(const Barcode& M, const Barcode& N);

}  // namespace stab
