#pragma once

#include "stab/interleave.hpp"

namespace stab {

// Finite product poset of per-axis sample values. Adequate for a set of
// intervals and shifts when every finite endpoint, every shifted copy of it,
// a midpoint between consecutive samples, and a point beyond each extreme are
// present; module structure in these interval classes is piecewise constant
// between such critical coordinates. Triangular instances use a uniform
// lattice instead, since their diagonal boundaries are not axis-aligned.
struct Grid {
    std::vector<std::vector<Rat>> axes;

    std::size_t size() const {
        std::size_t n = 1;
        for (const auto& a : axes) n *= a.size();
        return n;
    }
};

Grid build_grid(const std::vector<Interval>& intervals, const std::vector<Rat>& shifts);

// Ground truth by brute force: the scalar-1 candidate morphism on the overlap,
// checked for naturality on every covering pair of grid points (commuting
// squares paste, so adjacent pairs imply all pairs).
bool oracle_hom_nonzero(const Interval& I, const Interval& J, const Grid& grid);

// Tries the two normalized scalar assignments (f, g) in {(0,0), (1,1)} and
// checks the interleaving equations at every grid point. Complete because the
// Hom spaces involved are at most 1-dimensional and (f, g) -> (cf, g/c)
// preserves the equations, so any solution rescales to one of the two.
bool oracle_pair_interleaved(const Interval& I, const Interval& J, const Rat& eps,
                             const Grid& grid);

// Evaluates both composite equations of W pointwise on the grid as explicit
// rational sums. Throws if a stored weight is not a natural transformation.
WitnessVerdict oracle_verify_witness(const Barcode& M, const Barcode& N,
                                     const WeightMatrix& W, const Grid& grid);

// Exhaustive minimum over all partial bijections of the max of matched pair
// distances and unmatched triviality infima. Throws std::length_error beyond
// 6 intervals per side.
ExtRat oracle_bottleneck(const Barcode& M, const Barcode& N);

}  // namespace stab
