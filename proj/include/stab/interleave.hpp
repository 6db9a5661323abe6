#pragma once

#include <map>
#include <utility>

#include "stab/homs.hpp"

namespace stab {

// Sparse scalar witness for a pair of delta-interleaving morphisms f, g.
// Every stored f-entry (I,J) must satisfy hom_nonzero(I, shift(J, delta)),
// every g-entry (J,I) hom_nonzero(J, shift(I, delta)); weights are nonzero.
struct WeightMatrix {
    Rat delta;
    std::map<std::pair<std::string, std::string>, Rat> f;  // (id in B(M), id in B(N))
    std::map<std::pair<std::string, std::string>, Rat> g;  // (id in B(N), id in B(M))
};

struct WitnessVerdict {
    bool valid = true;
    // Ordered pairs (X, X') whose composite constraint failed; side is "M" or "N".
    std::vector<std::tuple<std::string, std::string, std::string>> violations;
};

// Comparison-point certificate that M and N are NOT eps-interleaved:
// rank phi_N(a,b) > rank phi_M(a+eps, b-eps) contradicts the factorization of
// phi_N(a,b) through M that any eps-interleaving provides.
struct RankCertificate {
    Rat eps;
    std::vector<Rat> a, b;          // b >= a + 2 eps coordinatewise
    bool second_plays_n = true;     // which barcode takes the role of N above
};

struct PairDistance {
    ExtRat value;
    bool attained = false;
};

// eps-interleaving decision for a single pair of same-kind intervals.
bool pair_interleaved(const Interval& I, const Interval& J, const Rat& eps);

// Infimum of {eps | pair_interleaved(I, J, eps)} and whether it is attained.
PairDistance pair_distance(const Interval& I, const Interval& J);

// Checks the interleaving equations of W over both barcodes: for each ordered
// pair (X, X') on one side, the sum of two-step path scalars through stored
// weights must be 1 for X = X' (when Hom(X, X'(2 delta)) is nonzero) and 0
// otherwise. Throws on W-invariant violations.
WitnessVerdict verify_witness(const Barcode& M, const Barcode& N, const WeightMatrix& W);

// Weight-1 witness induced by an eps-matching; throws if sigma is not one.
WeightMatrix witness_from_matching(const Barcode& M, const Barcode& N,
                                   const std::vector<std::pair<std::string, std::string>>& sigma,
                                   const Rat& eps);

// Drops cross-type entries of a valid rectangle witness; the result is again
// a valid witness. Throws if W is invalid or kinds are not rectangle.
WeightMatrix restrict_witness_same_type(const WeightMatrix& W, const Barcode& M,
                                        const Barcode& N);

// rank phi(p,q) for interval decomposable modules: the number of barcode
// intervals containing both p and q. Requires p <= q coordinatewise.
int rank_invariant(const Barcode& B, const std::vector<Rat>& p, const std::vector<Rat>& q);

// True iff cert exhibits a rank violation, certifying that M and N are not
// cert.eps-interleaved.
bool check_not_interleaved(const Barcode& M, const Barcode& N, const RankCertificate& cert);

// Ids J in B with pair_interleaved(I, J, eps).
std::vector<std::string> mu_set(const Interval& I, const Barcode& B, const Rat& eps);

struct LemmaMatrix {
    std::vector<std::string> order;        // A sorted consistently with <=_alpha
    std::vector<std::vector<Rat>> matrix;  // entry (i, i') = path-scalar sum I_i -> I_i'
    bool pass = false;                     // unit diagonal, zero below it
};

// Replays the counting-lemma matrix argument: rows/columns indexed by A in
// <=_alpha order, entries summed over mu(A) at factor * delta. Requires a
// valid witness and every element of A (2 * factor * delta)-significant.
LemmaMatrix lemma_matrix_replay(const Barcode& M, const Barcode& N, const WeightMatrix& W,
                                const std::vector<std::string>& A, const Rat& factor);

}  // namespace stab
