#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace stab {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Parses "p", "-p", or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

// Lowest-terms "p" or "p/q".
std::string to_string(const Rat& r);

struct bad_operation : std::logic_error {
    using std::logic_error::logic_error;
};

// Element of Q ∪ {-inf, +inf}. Finite additions are absorbed by the infinities.
class ExtRat {
public:
    ExtRat() = default;
    ExtRat(Rat v) : v_(std::move(v)) {}
    ExtRat(int v) : v_(v) {}
    ExtRat(long v) : v_(v) {}

    static ExtRat neg_inf() { ExtRat e; e.sign_ = -1; return e; }
    static ExtRat pos_inf() { ExtRat e; e.sign_ = +1; return e; }

    bool finite() const { return sign_ == 0; }
    bool is_neg_inf() const { return sign_ < 0; }
    bool is_pos_inf() const { return sign_ > 0; }

    const Rat& value() const {
        if (!finite()) throw bad_operation("ExtRat::value on infinite value");
        return v_;
    }

    friend int compare(const ExtRat& a, const ExtRat& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        if (a.sign_ != 0) return 0;
        return a.v_ < b.v_ ? -1 : (a.v_ == b.v_ ? 0 : 1);
    }
    friend bool operator==(const ExtRat& a, const ExtRat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return compare(a, b) != 0; }
    friend bool operator<(const ExtRat& a, const ExtRat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return compare(a, b) >= 0; }

    ExtRat operator+(const Rat& t) const {
        return finite() ? ExtRat(Rat(v_ + t)) : *this;
    }
    ExtRat operator-(const Rat& t) const {
        return finite() ? ExtRat(Rat(v_ - t)) : *this;
    }
    // Throws on inf + (-inf).
    ExtRat operator+(const ExtRat& o) const {
        if (finite() && o.finite()) return ExtRat(Rat(v_ + o.v_));
        if (finite()) return o;
        if (o.finite()) return *this;
        if (sign_ != o.sign_) throw bad_operation("ExtRat: inf + (-inf)");
        return *this;
    }
    ExtRat operator-() const {
        if (is_neg_inf()) return pos_inf();
        if (is_pos_inf()) return neg_inf();
        return ExtRat(Rat(-v_));
    }
    ExtRat operator-(const ExtRat& o) const { return *this + (-o); }

    ExtRat div(const Rat& d) const {
        if (!finite()) return *this;
        return ExtRat(Rat(v_ / d));
    }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "inf";
        return to_string(v_);
    }

private:
    int sign_ = 0;  // -1: -inf, 0: finite, +1: +inf
    Rat v_;
};

// |a - b| with matching infinities giving 0 and mismatched giving +inf.
inline ExtRat abs_gap(const ExtRat& a, const ExtRat& b) {
    if (a.finite() && b.finite()) {
        Rat d = a.value() - b.value();
        if (d < 0) d = -d;
        return ExtRat(d);
    }
    if (!a.finite() && !b.finite() && compare(a, b) == 0) return ExtRat(0);
    return ExtRat::pos_inf();
}

inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }
inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

// Parses "p/q", "inf", "-inf".
ExtRat parse_extended(const std::string& s);

}  // namespace stab
