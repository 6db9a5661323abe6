#include "stab/interleave.hpp"

#include <algorithm>
#include <set>

namespace stab {

namespace {

bool both_trivial(const Interval& I, const Interval& J, const Rat& eps) {
    Rat two = 2 * eps;
    return !is_significant(I, two) && !is_significant(J, two);
}

void require_pair(const Interval& I, const Interval& J) {
    if (!same_shape(I, J)) throw std::invalid_argument("interval kind/dim mismatch");
    if (std::holds_alternative<GenTriangle>(I) || std::holds_alternative<GenTriangle>(J))
        throw std::invalid_argument("shifted triangles are not barcode intervals");
}

}  // namespace

bool pair_interleaved(const Interval& I, const Interval& J, const Rat& eps) {
    require_pair(I, J);
    if (eps < 0) throw std::invalid_argument("pair_interleaved requires eps >= 0");
    if (auto* r = std::get_if<Rectangle>(&I)) {
        const auto& s = std::get<Rectangle>(J);
        if (both_trivial(I, J, eps)) return true;
        DecoratedPoint re = add(r->min, eps), se = add(s.min, eps);
        if (!leq(s.min, re) || !leq(r->min, se)) return false;
        DecoratedPoint rx = add(r->max, eps), sx = add(s.max, eps);
        return leq(s.max, rx) && leq(r->max, sx);
    }
    if (auto* f = std::get_if<FreeInterval>(&I)) {
        const auto& g = std::get<FreeInterval>(J);
        for (std::size_t i = 0; i < f->min.size(); ++i) {
            Rat d = f->min[i] - g.min[i];
            if (d < 0) d = -d;
            if (d > eps) return false;
        }
        return true;
    }
    const auto& a = std::get<Triangle>(I);
    const auto& b = std::get<Triangle>(J);
    if (both_trivial(I, J, eps)) return true;
    return compare(abs_gap(a.a, b.a), ExtRat(eps)) <= 0 &&
           compare(abs_gap(a.b, b.b), ExtRat(eps)) <= 0;
}

PairDistance pair_distance(const Interval& I, const Interval& J) {
    require_pair(I, J);
    ExtRat shift_inf(0);  // infimum of the morphism route
    if (auto* r = std::get_if<Rectangle>(&I)) {
        const auto& s = std::get<Rectangle>(J);
        for (std::size_t i = 0; i < r->min.size(); ++i) {
            shift_inf = max(shift_inf, abs_gap(r->min[i].value, s.min[i].value));
            shift_inf = max(shift_inf, abs_gap(r->max[i].value, s.max[i].value));
        }
    } else if (auto* f = std::get_if<FreeInterval>(&I)) {
        const auto& g = std::get<FreeInterval>(J);
        for (std::size_t i = 0; i < f->min.size(); ++i)
            shift_inf = max(shift_inf, abs_gap(ExtRat(f->min[i]), ExtRat(g.min[i])));
    } else {
        const auto& a = std::get<Triangle>(I);
        const auto& b = std::get<Triangle>(J);
        shift_inf = max(abs_gap(a.a, b.a), abs_gap(a.b, b.b));
    }
    ExtRat trivial_inf = max(triviality_infimum(I), triviality_infimum(J));
    PairDistance out;
    out.value = min(shift_inf, trivial_inf);
    out.attained = out.value.finite() && pair_interleaved(I, J, out.value.value());
    return out;
}

namespace {

// One side of the witness check: for each ordered pair (X, X') in B(A)^2,
// sum path scalars through stored weights from A to B and back.
void check_side(const Barcode& A, const WeightMatrix& W,
                const std::map<std::pair<std::string, std::string>, Rat>& out,
                const std::map<std::pair<std::string, std::string>, Rat>& back,
                const Barcode& B, const char* side, WitnessVerdict& v) {
    Rat two_delta = 2 * W.delta;
    for (const auto& [xid, X] : A.intervals) {
        for (const auto& [xpid, Xp] : A.intervals) {
            Interval Xp2 = shift_interval(Xp, two_delta);
            Rat sum(0);
            for (const auto& [jid, J] : B.intervals) {
                auto fit = out.find({xid, jid});
                auto git = back.find({jid, xpid});
                if (fit == out.end() || git == back.end()) continue;
                sum += path_scalar(fit->second, git->second, X,
                                   shift_interval(J, W.delta), Xp2);
            }
            Rat want(0);
            if (xid == xpid && hom_nonzero(X, Xp2)) want = 1;
            if (sum != want) {
                v.valid = false;
                v.violations.emplace_back(side, xid, xpid);
            }
        }
    }
}

void check_invariants(const Barcode& M, const Barcode& N, const WeightMatrix& W) {
    if (W.delta < 0) throw std::invalid_argument("witness delta must be >= 0");
    for (const auto& [key, w] : W.f) {
        if (w == 0) throw std::invalid_argument("witness weights must be nonzero");
        if (!hom_nonzero(M.at(key.first), shift_interval(N.at(key.second), W.delta)))
            throw std::invalid_argument("witness invariant violated: f(" + key.first + "," +
                                        key.second + ") has vanishing Hom");
    }
    for (const auto& [key, w] : W.g) {
        if (w == 0) throw std::invalid_argument("witness weights must be nonzero");
        if (!hom_nonzero(N.at(key.first), shift_interval(M.at(key.second), W.delta)))
            throw std::invalid_argument("witness invariant violated: g(" + key.first + "," +
                                        key.second + ") has vanishing Hom");
    }
}

}  // namespace

WitnessVerdict verify_witness(const Barcode& M, const Barcode& N, const WeightMatrix& W) {
    if (M.kind != N.kind || M.dim != N.dim)
        throw std::invalid_argument("barcode kind/dim mismatch");
    check_invariants(M, N, W);
    WitnessVerdict v;
    check_side(M, W, W.f, W.g, N, "M", v);
    check_side(N, W, W.g, W.f, M, "N", v);
    return v;
}

WeightMatrix witness_from_matching(const Barcode& M, const Barcode& N,
                                   const std::vector<std::pair<std::string, std::string>>& sigma,
                                   const Rat& eps) {
    std::set<std::string> left, right;
    for (const auto& [i, j] : sigma) {
        if (!left.insert(i).second || !right.insert(j).second)
            throw std::invalid_argument("matching is not a partial bijection");
        if (!pair_interleaved(M.at(i), N.at(j), eps))
            throw std::invalid_argument("matched pair (" + i + "," + j +
                                        ") is not eps-interleaved");
    }
    Rat two = 2 * eps;
    for (const auto& [id, I] : M.intervals)
        if (!left.count(id) && is_significant(I, two))
            throw std::invalid_argument("unmatched interval " + id + " is not 2eps-trivial");
    for (const auto& [id, J] : N.intervals)
        if (!right.count(id) && is_significant(J, two))
            throw std::invalid_argument("unmatched interval " + id + " is not 2eps-trivial");

    WeightMatrix W;
    W.delta = eps;
    for (const auto& [i, j] : sigma) {
        const Interval &I = M.at(i), &J = N.at(j);
        if (hom_nonzero(I, shift_interval(J, eps))) W.f[{i, j}] = 1;
        if (hom_nonzero(J, shift_interval(I, eps))) W.g[{j, i}] = 1;
    }
    return W;
}

WeightMatrix restrict_witness_same_type(const WeightMatrix& W, const Barcode& M,
                                        const Barcode& N) {
    if (M.kind != Kind::rectangle)
        throw std::invalid_argument("same-type restriction applies to rectangle barcodes");
    if (!verify_witness(M, N, W).valid)
        throw std::invalid_argument("restrict_witness_same_type requires a valid witness");
    WeightMatrix out;
    out.delta = W.delta;
    auto keep = [&](const std::string& mid, const std::string& nid) {
        return same_type(std::get<Rectangle>(M.at(mid)), std::get<Rectangle>(N.at(nid)));
    };
    for (const auto& [key, w] : W.f)
        if (keep(key.first, key.second)) out.f[key] = w;
    for (const auto& [key, w] : W.g)
        if (keep(key.second, key.first)) out.g[key] = w;
    return out;
}

int rank_invariant(const Barcode& B, const std::vector<Rat>& p, const std::vector<Rat>& q) {
    if (p.size() != q.size() || static_cast<int>(p.size()) != B.dim)
        throw std::invalid_argument("rank_invariant: point dimension mismatch");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > q[i]) throw std::invalid_argument("rank_invariant requires p <= q");
    int rank = 0;
    for (const auto& [id, I] : B.intervals)
        if (contains(I, p) && contains(I, q)) ++rank;
    return rank;
}

bool check_not_interleaved(const Barcode& M, const Barcode& N, const RankCertificate& cert) {
    if (cert.eps < 0 || cert.a.size() != cert.b.size())
        throw std::invalid_argument("malformed certificate");
    Rat two = 2 * cert.eps;
    for (std::size_t i = 0; i < cert.a.size(); ++i)
        if (cert.b[i] < cert.a[i] + two)
            throw std::invalid_argument("certificate requires b >= a + 2 eps");
    const Barcode& target = cert.second_plays_n ? N : M;
    const Barcode& other = cert.second_plays_n ? M : N;
    std::vector<Rat> ae = cert.a, be = cert.b;
    for (auto& x : ae) x += cert.eps;
    for (auto& x : be) x -= cert.eps;
    return rank_invariant(target, cert.a, cert.b) > rank_invariant(other, ae, be);
}

std::vector<std::string> mu_set(const Interval& I, const Barcode& B, const Rat& eps) {
    std::vector<std::string> out;
    for (const auto& [id, J] : B.intervals)
        if (pair_interleaved(I, J, eps)) out.push_back(id);
    return out;
}

LemmaMatrix lemma_matrix_replay(const Barcode& M, const Barcode& N, const WeightMatrix& W,
                                const std::vector<std::string>& A, const Rat& factor) {
    if (!verify_witness(M, N, W).valid)
        throw std::invalid_argument("lemma replay requires a valid witness");
    Rat radius = factor * W.delta;
    for (const auto& id : A)
        if (!is_significant(M.at(id), 2 * radius))
            throw std::invalid_argument("interval " + id +
                                        " in A is trivial at twice the matching radius");

    LemmaMatrix out;
    out.order = A;
    // Stable sort refining <=_alpha; ties keep input order.
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](const std::string& x, const std::string& y) {
                         const Interval &X = M.at(x), &Y = M.at(y);
                         return alpha_leq(X, Y) && !alpha_leq(Y, X);
                     });

    std::set<std::string> mu;
    for (const auto& id : A)
        for (const auto& j : mu_set(M.at(id), N, radius)) mu.insert(j);

    std::size_t r = out.order.size();
    out.matrix.assign(r, std::vector<Rat>(r, Rat(0)));
    Rat two_delta = 2 * W.delta;
    // Row i is the composite's target I_i, column i' its source I_{i'}, as in
    // the matrix equation of the counting argument.
    for (std::size_t i = 0; i < r; ++i) {
        Interval tgt2 = shift_interval(M.at(out.order[i]), two_delta);
        for (std::size_t ip = 0; ip < r; ++ip) {
            const Interval& src = M.at(out.order[ip]);
            Rat sum(0);
            for (const auto& jid : mu) {
                auto fit = W.f.find({out.order[ip], jid});
                auto git = W.g.find({jid, out.order[i]});
                if (fit == W.f.end() || git == W.g.end()) continue;
                sum += path_scalar(fit->second, git->second, src,
                                   shift_interval(N.at(jid), W.delta), tgt2);
            }
            out.matrix[i][ip] = sum;
        }
    }
    out.pass = true;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t ip = 0; ip < r; ++ip) {
            if (i == ip && out.matrix[i][ip] != 1) out.pass = false;
            if (i > ip && out.matrix[i][ip] != 0) out.pass = false;
        }
    return out;
}

}  // namespace stab
