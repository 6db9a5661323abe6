#pragma once

#include <optional>

#include "stab/interleave.hpp"

namespace stab {

// A bundled instance with its published numbers: a witness valid at delta
// (so d_I <= delta), the bottleneck distance, and, when rank invariants can
// see it, a certificate that the modules are not eps-interleaved for some
// eps < delta (so d_I = delta).
struct ExampleInstance {
    std::string name;
    Barcode M, N;
    WeightMatrix witness;
    Rat expected_bottleneck;
    std::optional<RankCertificate> certificate;
};

// Three rectangles vs one square, d_I = 1, d_B = 2.
ExampleInstance example_square();

// Three-by-three rectangle instance with d_B = 3, 1-interleaved. Its d_I >= 1
// lower bound is invisible to rank invariants, so no certificate is bundled.
ExampleInstance example_threebythree();

// Coordinate-rearranged free version of the three-by-three instance in
// dimension 4: d_B = 3, d_I = 1.
ExampleInstance example_free4d();

ExampleInstance get_example(const std::string& name);
std::vector<std::string> example_names();

}  // namespace stab
