#pragma once

#include <vector>

#include "stab/rational.hpp"

namespace stab {

// Endpoint decoration: a^- is the closed side for minima, a^+ for maxima.
enum class Dec { minus, plus };

// A decorated extended rational a^- or a^+. Totally ordered: a^* < b^* for
// a < b, and a^- < a^+. The values -inf^- and inf^+ are never constructed.
struct DecoratedValue {
    ExtRat value;
    Dec dec = Dec::minus;

    DecoratedValue() = default;
    DecoratedValue(ExtRat v, Dec d) : value(std::move(v)), dec(d) {
        if (value.is_neg_inf() && dec == Dec::minus)
            throw std::invalid_argument("decorated value -inf^- is not allowed");
        if (value.is_pos_inf() && dec == Dec::plus)
            throw std::invalid_argument("decorated value inf^+ is not allowed");
    }

    DecoratedValue add(const Rat& t) const {
        DecoratedValue r;
        r.value = value + t;
        r.dec = dec;
        return r;
    }

    std::string str() const { return value.str() + (dec == Dec::plus ? "^+" : "^-"); }
};

inline int compare(const DecoratedValue& a, const DecoratedValue& b) {
    int c = compare(a.value, b.value);
    if (c != 0) return c;
    if (a.dec == b.dec) return 0;
    return a.dec == Dec::minus ? -1 : 1;
}
inline bool operator==(const DecoratedValue& a, const DecoratedValue& b) { return compare(a, b) == 0; }
inline bool operator!=(const DecoratedValue& a, const DecoratedValue& b) { return compare(a, b) != 0; }
inline bool operator<(const DecoratedValue& a, const DecoratedValue& b) { return compare(a, b) < 0; }
inline bool operator<=(const DecoratedValue& a, const DecoratedValue& b) { return compare(a, b) <= 0; }
inline bool operator>(const DecoratedValue& a, const DecoratedValue& b) { return compare(a, b) > 0; }
inline bool operator>=(const DecoratedValue& a, const DecoratedValue& b) { return compare(a, b) >= 0; }

inline DecoratedValue dv(ExtRat v, Dec d) { return DecoratedValue(std::move(v), d); }
inline DecoratedValue dminus(Rat v) { return DecoratedValue(ExtRat(std::move(v)), Dec::minus); }
inline DecoratedValue dplus(Rat v) { return DecoratedValue(ExtRat(std::move(v)), Dec::plus); }

// Coordinatewise-ordered tuple of decorated values.
using DecoratedPoint = std::vector<DecoratedValue>;

inline bool leq(const DecoratedPoint& a, const DecoratedPoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("decorated point dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (compare(a[i], b[i]) > 0) return false;
    return true;
}

inline DecoratedPoint add(const DecoratedPoint& p, const Rat& t) {
    DecoratedPoint r;
    r.reserve(p.size());
    for (const auto& x : p) r.push_back(x.add(t));
    return r;
}

struct AlphaStats {
    Rat alpha;       // sum of finite coordinate values (u(±inf) = 0)
    int plus_count;  // number of coordinates decorated with +
};

inline AlphaStats alpha_stats(const DecoratedPoint& p) {
    AlphaStats s{Rat(0), 0};
    for (const auto& x : p) {
        if (x.value.finite()) s.alpha += x.value.value();
        if (x.dec == Dec::plus) ++s.plus_count;
    }
    return s;
}

}  // namespace stab
