#pragma once

#include <stdexcept>
#include <string>

#include "stab/interleave.hpp"

namespace stab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Barcode documents are JSON with kind, dim, and interval records. Rationals
// are strings "p" or "p/q" (integers also accepted), infinities "inf"/"-inf".
// Rectangle endpoints carry per-coordinate flags "open"/"closed"; min open
// maps to decoration plus, min closed to minus; max open to minus, max closed
// to plus. Free intervals store undecorated minima and omit flags; triangles
// store the max pair. Round trips are lossless.
Barcode parse_barcode(const std::string& text);
std::string emit_barcode(const Barcode& b);

// Witness documents: delta plus lists of {from, to, weight} for f and g.
WeightMatrix parse_witness(const std::string& text);
std::string emit_witness(const WeightMatrix& w);

// SVG drawing of a 2-dimensional barcode, one shape per interval. Unbounded
// regions are clipped at the view box.
std::string render_svg(const Barcode& b);

}  // namespace stab
