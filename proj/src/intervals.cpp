#include "stab/intervals.hpp"

#include <algorithm>

namespace stab {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

ExtRat parse_extended(const std::string& s) {
    if (s == "inf" || s == "+inf") return ExtRat::pos_inf();
    if (s == "-inf") return ExtRat::neg_inf();
    return ExtRat(parse_rational(s));
}

Kind kind_of(const Interval& I) {
    switch (I.index()) {
    case 0: return Kind::rectangle;
    case 1: return Kind::free_interval;
    default: return Kind::triangle;
    }
}

int dim_of(const Interval& I) {
    if (auto* r = std::get_if<Rectangle>(&I)) return static_cast<int>(r->min.size());
    if (auto* f = std::get_if<FreeInterval>(&I)) return static_cast<int>(f->min.size());
    return 2;
}

bool same_shape(const Interval& I, const Interval& J) {
    return kind_of(I) == kind_of(J) && dim_of(I) == dim_of(J);
}

Rectangle make_rectangle(DecoratedPoint min, DecoratedPoint max) {
    if (min.empty() || min.size() != max.size())
        throw std::invalid_argument("rectangle corners must have equal positive dimension");
    for (std::size_t i = 0; i < min.size(); ++i)
        if (compare(min[i], max[i]) >= 0)
            throw std::invalid_argument("empty rectangle: min_i >= max_i in coordinate " +
                                        std::to_string(i));
    return Rectangle{std::move(min), std::move(max)};
}

FreeInterval make_free(std::vector<Rat> min) {
    if (min.empty()) throw std::invalid_argument("free interval needs positive dimension");
    return FreeInterval{std::move(min)};
}

Triangle make_triangle(ExtRat a, ExtRat b) {
    if (a.is_neg_inf() || b.is_neg_inf())
        throw std::invalid_argument("triangle max coordinates must be > -inf");
    if (!(compare(a + b, ExtRat(0)) > 0))
        throw std::invalid_argument("empty triangle: a + b <= 0");
    return Triangle{std::move(a), std::move(b)};
}

GenTriangle as_gen(const Triangle& t) { return GenTriangle{t.a, t.b, Rat(0)}; }

const Interval* Barcode::find(const std::string& id) const {
    for (const auto& [iid, I] : intervals)
        if (iid == id) return &I;
    return nullptr;
}

const Interval& Barcode::at(const std::string& id) const {
    const Interval* I = find(id);
    if (!I) throw std::invalid_argument("no interval with id '" + id + "'");
    return *I;
}

Barcode make_barcode(Kind kind, int dim,
                     std::vector<std::pair<std::string, Interval>> intervals) {
    Barcode b{kind, dim, std::move(intervals)};
    for (std::size_t i = 0; i < b.intervals.size(); ++i) {
        const auto& [id, I] = b.intervals[i];
        if (kind_of(I) != kind || dim_of(I) != dim)
            throw std::invalid_argument("interval '" + id + "' has wrong kind or dimension");
        if (std::holds_alternative<GenTriangle>(I))
            throw std::invalid_argument("barcodes may not contain shifted triangles");
        for (std::size_t j = i + 1; j < b.intervals.size(); ++j)
            if (b.intervals[j].first == id)
                throw std::invalid_argument("duplicate interval id '" + id + "'");
    }
    return b;
}

Interval shift_interval(const Interval& I, const Rat& eps) {
    if (eps < 0) throw std::invalid_argument("shift requires eps >= 0");
    Rat neg = -eps;
    if (auto* r = std::get_if<Rectangle>(&I))
        return Rectangle{add(r->min, neg), add(r->max, neg)};
    if (auto* f = std::get_if<FreeInterval>(&I)) {
        FreeInterval s = *f;
        for (auto& x : s.min) x -= eps;
        return s;
    }
    if (auto* t = std::get_if<Triangle>(&I))
        return GenTriangle{t->a - eps, t->b - eps, Rat(-2 * eps)};
    const auto& g = std::get<GenTriangle>(I);
    return GenTriangle{g.a - eps, g.b - eps, Rat(g.diag - 2 * eps)};
}

namespace {

GenTriangle gen_of(const Interval& I) {
    if (auto* t = std::get_if<Triangle>(&I)) return as_gen(*t);
    return std::get<GenTriangle>(I);
}

bool is_triangular(const Interval& I) {
    return std::holds_alternative<Triangle>(I) || std::holds_alternative<GenTriangle>(I);
}

void require_same_shape(const Interval& I, const Interval& J) {
    bool ok = is_triangular(I) ? is_triangular(J) : same_shape(I, J);
    if (!ok) throw std::invalid_argument("interval kind/dim mismatch");
}

}  // namespace

std::optional<Interval> intersect(const Interval& I, const Interval& J) {
    require_same_shape(I, J);
    if (auto* r = std::get_if<Rectangle>(&I)) {
        const auto& s = std::get<Rectangle>(J);
        Rectangle out;
        for (std::size_t i = 0; i < r->min.size(); ++i) {
            DecoratedValue lo = std::max(r->min[i], s.min[i]);
            DecoratedValue hi = std::min(r->max[i], s.max[i]);
            if (compare(lo, hi) >= 0) return std::nullopt;
            out.min.push_back(lo);
            out.max.push_back(hi);
        }
        return Interval(out);
    }
    if (auto* f = std::get_if<FreeInterval>(&I)) {
        const auto& g = std::get<FreeInterval>(J);
        FreeInterval out;
        for (std::size_t i = 0; i < f->min.size(); ++i)
            out.min.push_back(std::max(f->min[i], g.min[i]));
        return Interval(out);
    }
    GenTriangle a = gen_of(I), b = gen_of(J);
    GenTriangle out{min(a.a, b.a), min(a.b, b.b), std::max(a.diag, b.diag)};
    if (!(compare(out.a + out.b, ExtRat(out.diag)) > 0)) return std::nullopt;
    return Interval(out);
}

std::optional<Interval> intersect3(const Interval& I, const Interval& J, const Interval& K) {
    auto ij = intersect(I, J);
    if (!ij) return std::nullopt;
    return intersect(*ij, K);
}

bool same_type(const Rectangle& R, const Rectangle& S) {
    if (R.min.size() != S.min.size())
        throw std::invalid_argument("rectangle dimension mismatch");
    for (std::size_t i = 0; i < R.min.size(); ++i) {
        if (R.min[i].value.is_neg_inf() != S.min[i].value.is_neg_inf()) return false;
        if (R.max[i].value.is_pos_inf() != S.max[i].value.is_pos_inf()) return false;
    }
    return true;
}

DecoratedValue significance_threshold(const Interval& I) {
    if (auto* r = std::get_if<Rectangle>(&I)) {
        // Per coordinate: decorated length, decorated plus exactly when the
        // coordinate interval contains both of its endpoints.
        std::optional<DecoratedValue> best;
        for (std::size_t i = 0; i < r->min.size(); ++i) {
            DecoratedValue len;
            if (!r->min[i].value.finite() || !r->max[i].value.finite()) {
                len = dv(ExtRat::pos_inf(), Dec::minus);
            } else {
                bool closed = r->min[i].dec == Dec::minus && r->max[i].dec == Dec::plus;
                len = dv(r->max[i].value - r->min[i].value.value(),
                         closed ? Dec::plus : Dec::minus);
            }
            if (!best || compare(len, *best) < 0) best = len;
        }
        return *best;
    }
    if (std::holds_alternative<FreeInterval>(I)) return dv(ExtRat::pos_inf(), Dec::minus);
    GenTriangle g = gen_of(I);
    return dv((g.a + g.b - ExtRat(g.diag)).div(Rat(2)), Dec::minus);
}

bool is_significant(const Interval& I, const Rat& eps) {
    if (eps < 0) throw std::invalid_argument("is_significant requires eps >= 0");
    DecoratedValue t = significance_threshold(I);
    int c = compare(ExtRat(eps), t.value);
    return t.dec == Dec::plus ? c <= 0 : c < 0;
}

ExtRat triviality_infimum(const Interval& I) {
    return significance_threshold(I).value.div(Rat(2));
}

AlphaStats alpha_interval(const Interval& I) {
    if (auto* r = std::get_if<Rectangle>(&I)) {
        AlphaStats lo = alpha_stats(r->min), hi = alpha_stats(r->max);
        return {Rat(lo.alpha + hi.alpha), lo.plus_count + hi.plus_count};
    }
    if (auto* f = std::get_if<FreeInterval>(&I)) {
        AlphaStats s{Rat(0), 0};
        for (const auto& x : f->min) s.alpha += x;
        return s;
    }
    GenTriangle g = gen_of(I);
    AlphaStats s{Rat(0), 0};
    if (g.a.finite()) s.alpha += g.a.value();
    if (g.b.finite()) s.alpha += g.b.value();
    return s;
}

bool alpha_leq(const Interval& I, const Interval& J) {
    require_same_shape(I, J);
    AlphaStats a = alpha_interval(I), b = alpha_interval(J);
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.plus_count <= b.plus_count;
}

namespace {

bool above_min(const DecoratedValue& lo, const Rat& x) {
    if (lo.value.is_neg_inf()) return true;
    if (lo.value.is_pos_inf()) return false;
    return lo.dec == Dec::plus ? x > lo.value.value() : x >= lo.value.value();
}

bool below_max(const DecoratedValue& hi, const Rat& x) {
    if (hi.value.is_pos_inf()) return true;
    if (hi.value.is_neg_inf()) return false;
    return hi.dec == Dec::plus ? x <= hi.value.value() : x < hi.value.value();
}

}  // namespace

bool contains(const Interval& I, const std::vector<Rat>& p) {
    if (static_cast<int>(p.size()) != dim_of(I))
        throw std::invalid_argument("point dimension mismatch");
    if (auto* r = std::get_if<Rectangle>(&I)) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!above_min(r->min[i], p[i]) || !below_max(r->max[i], p[i])) return false;
        return true;
    }
    if (auto* f = std::get_if<FreeInterval>(&I)) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < f->min[i]) return false;
        return true;
    }
    GenTriangle g = gen_of(I);
    return compare(ExtRat(p[0]), g.a) < 0 && compare(ExtRat(p[1]), g.b) < 0 &&
           p[0] + p[1] >= g.diag;
}

Triangle block_to_triangle(const ExtRat& a, const ExtRat& b) {
    if (a.is_pos_inf() || b.is_neg_inf() || !(compare(a, b) < 0))
        throw std::invalid_argument("block interval requires a < b");
    return make_triangle(-a, b);
}

}  // namespace stab
