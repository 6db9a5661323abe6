#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stab/decorated.hpp"

namespace stab {

// Product of n one-dimensional intervals, stored as decorated corner points.
// Nonempty by construction: min_i < max_i in the decorated order for every i.
struct Rectangle {
    DecoratedPoint min;
    DecoratedPoint max;
};

// Upset <p> = {q | q >= p} with finite undecorated minimum.
struct FreeInterval {
    std::vector<Rat> min;
};

// {(x,y) | x < a, y < b, x + y >= 0} with a + b > 0; a, b in Q ∪ {+inf}.
struct Triangle {
    ExtRat a, b;
};

// Shifted triangle {x < a, y < b, x + y >= diag} with a + b > diag.
// Internal representation only; never appears in barcodes.
struct GenTriangle {
    ExtRat a, b;
    Rat diag;
};

enum class Kind { rectangle, free_interval, triangle };

using Interval = std::variant<Rectangle, FreeInterval, Triangle, GenTriangle>;

Kind kind_of(const Interval& I);
int dim_of(const Interval& I);
bool same_shape(const Interval& I, const Interval& J);  // kind and dim agree

// Checked constructors; throw std::invalid_argument on invariant violation.
Rectangle make_rectangle(DecoratedPoint min, DecoratedPoint max);
FreeInterval make_free(std::vector<Rat> min);
Triangle make_triangle(ExtRat a, ExtRat b);
GenTriangle as_gen(const Triangle& t);

// Finite multiset of same-kind, same-dim intervals with stable unique ids.
struct Barcode {
    Kind kind = Kind::rectangle;
    int dim = 0;
    std::vector<std::pair<std::string, Interval>> intervals;

    const Interval* find(const std::string& id) const;
    const Interval& at(const std::string& id) const;
};

Barcode make_barcode(Kind kind, int dim,
                     std::vector<std::pair<std::string, Interval>> intervals);

// I(eps): translation of the underlying region by -eps. Triangles shift into
// GenTriangles. Requires eps >= 0.
Interval shift_interval(const Interval& I, const Rat& eps);

// Same-kind intersection. Rectangles and (generalized) triangles may be
// empty; free intersections never are. Triangle/GenTriangle mix is allowed.
std::optional<Interval> intersect(const Interval& I, const Interval& J);
std::optional<Interval> intersect3(const Interval& I, const Interval& J, const Interval& K);

// Rectangles R, S are of the same type if R_i \ S_i and S_i \ R_i are bounded
// for every i, i.e. matching boundedness patterns coordinatewise.
bool same_type(const Rectangle& R, const Rectangle& S);

// Decorated threshold t such that I is eps-significant iff eps < t.value
// (t decorated minus) or eps <= t.value (t decorated plus).
DecoratedValue significance_threshold(const Interval& I);

bool is_significant(const Interval& I, const Rat& eps);

// Infimum of {eps | I is 2 eps-trivial}: half the significance threshold
// value, +inf for free intervals.
ExtRat triviality_infimum(const Interval& I);

// alpha statistic and plus-decoration count driving the <=_alpha preorder.
AlphaStats alpha_interval(const Interval& I);

// The total preorder <=_alpha: alpha <, or alpha = and plus_count <=.
bool alpha_leq(const Interval& I, const Interval& J);

// Membership of an undecorated point, decoration-exact.
bool contains(const Interval& I, const std::vector<Rat>& p);

// Block interval {(x,y) | a < x, y < b} mapped to the triangle with
// max = (-a, b). Requires a < b; a in Q ∪ {-inf}, b in Q ∪ {+inf}.
Triangle block_to_triangle(const ExtRat& a, const ExtRat& b);

}  // namespace stab
