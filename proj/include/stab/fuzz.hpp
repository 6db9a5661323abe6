#pragma once

#include <cstdint>
#include <random>

#include "stab/examples.hpp"
#include "stab/matching.hpp"
#include "stab/oracle.hpp"

namespace stab {

// Deterministic instance generator. Values are kept on a coarse rational
// lattice (denominators 1 or 2) so the brute-force grids stay small.
class Fuzzer {
public:
    explicit Fuzzer(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int pick(int lo, int hi);  // uniform inclusive
    Rat half_rat(int lo2, int hi2);  // k/2 with k in [lo2, hi2]
    Rat random_eps();                // positive, halves

    Interval random_interval(Kind kind, int dim);
    Barcode random_barcode(Kind kind, int dim, int count);
    // Copy of b with every finite endpoint moved by at most delta
    // (moves are multiples of delta/2).
    Barcode perturb(const Barcode& b, const Rat& delta);

private:
    DecoratedValue random_min(bool allow_inf);
    std::mt19937_64 rng_;
};

struct SuiteResult {
    std::string name;
    int trials = 0;       // generated cases
    int conditioned = 0;  // cases meeting the property's hypotheses
    int failures = 0;
    std::vector<std::string> notes;
};

// Closed-form hom_nonzero, pair_interleaved, pair_distance (sampled around
// the reported infimum) and verify_witness against the grid oracle.
SuiteResult suite_oracle_agreement(std::uint64_t seed, Kind kind, int dim, int trials);

// bottleneck against the exhaustive oracle on instances with <= 5 per side.
SuiteResult suite_bottleneck_oracle(std::uint64_t seed, Kind kind, int dim, int trials);

// The lemma properties: type splitting, rectangle closeness (2n-1) and
// nonzero composite under (4n-2) eps-significance, free closeness (n-1),
// triangle closeness and composite (constant 1).
SuiteResult suite_type_splitting(std::uint64_t seed, int dim, int trials);
SuiteResult suite_rect_closeness(std::uint64_t seed, int dim, int trials);
SuiteResult suite_rect_composite(std::uint64_t seed, int dim, int trials);
SuiteResult suite_free_closeness(std::uint64_t seed, int dim, int trials);
SuiteResult suite_triangle_closeness(std::uint64_t seed, int trials);
SuiteResult suite_triangle_composite(std::uint64_t seed, int trials);

// Matching machinery: feasibility monotone in eps; combine_matchings covers
// both required sets on random graphs; witness_from_matching always verifies.
SuiteResult suite_matching(std::uint64_t seed, int trials);

// n = 1 algebraic stability smoke test: bottleneck(M, perturb(M, d)) <= d.
SuiteResult suite_stability_1d(std::uint64_t seed, int trials);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int scale);

}  // namespace stab
