#include "stab/homs.hpp"

namespace stab {

namespace {

bool is_triangular(const Interval& I) {
    return std::holds_alternative<Triangle>(I) || std::holds_alternative<GenTriangle>(I);
}

GenTriangle gen_of(const Interval& I) {
    if (auto* t = std::get_if<Triangle>(&I)) return as_gen(*t);
    return std::get<GenTriangle>(I);
}

}  // namespace

bool hom_nonzero(const Interval& I, const Interval& J) {
    if (auto* r = std::get_if<Rectangle>(&I)) {
        const auto* s = std::get_if<Rectangle>(&J);
        if (!s || r->min.size() != s->min.size())
            throw std::invalid_argument("hom_nonzero: kind/dim mismatch");
        // min_J <= min_I, max_J <= max_I, and I ∩ J nonempty.
        if (!leq(s->min, r->min) || !leq(s->max, r->max)) return false;
        for (std::size_t i = 0; i < r->min.size(); ++i)
            if (compare(r->min[i], s->max[i]) >= 0) return false;
        return true;
    }
    if (auto* f = std::get_if<FreeInterval>(&I)) {
        const auto* g = std::get_if<FreeInterval>(&J);
        if (!g || f->min.size() != g->min.size())
            throw std::invalid_argument("hom_nonzero: kind/dim mismatch");
        for (std::size_t i = 0; i < f->min.size(); ++i)
            if (g->min[i] > f->min[i]) return false;
        return true;
    }
    if (!is_triangular(J)) throw std::invalid_argument("hom_nonzero: kind/dim mismatch");
    GenTriangle a = gen_of(I), b = gen_of(J);
    if (b.diag > a.diag) return false;
    if (compare(b.a, a.a) > 0 || compare(b.b, a.b) > 0) return false;
    return compare(b.a + b.b, ExtRat(a.diag)) > 0;
}

bool composite_nonzero(const Interval& I, const Interval& J, const Interval& K) {
    if (!hom_nonzero(I, J) || !hom_nonzero(J, K))
        throw std::invalid_argument("composite_nonzero requires a nonzero hom chain");
    return intersect3(I, J, K).has_value();
}

Rat path_scalar(const Rat& wf, const Rat& wg, const Interval& I, const Interval& J,
                const Interval& K) {
    if (wf != 0 && !hom_nonzero(I, J))
        throw std::invalid_argument("invalid witness: nonzero weight on vanishing Hom(I,J)");
    if (wg != 0 && !hom_nonzero(J, K))
        throw std::invalid_argument("invalid witness: nonzero weight on vanishing Hom(J,K)");
    if (wf == 0 || wg == 0) return Rat(0);
    return composite_nonzero(I, J, K) ? Rat(wf * wg) : Rat(0);
}

}  // namespace stab
