#include "stab/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace stab {

namespace {

bool triangular(const Interval& I) {
    return std::holds_alternative<Triangle>(I) || std::holds_alternative<GenTriangle>(I);
}

// Membership of p in I(shift), evaluated directly from the region definition.
bool member(const Interval& I, const Rat& shift, const std::vector<Rat>& p) {
    if (auto* r = std::get_if<Rectangle>(&I)) {
        for (std::size_t i = 0; i < r->min.size(); ++i) {
            Rat x = p[i] + shift;
            const auto& lo = r->min[i];
            if (lo.value.finite()) {
                if (lo.dec == Dec::minus ? x < lo.value.value() : x <= lo.value.value())
                    return false;
            }
            const auto& hi = r->max[i];
            if (hi.value.finite()) {
                if (hi.dec == Dec::plus ? x > hi.value.value() : x >= hi.value.value())
                    return false;
            }
        }
        return true;
    }
    if (auto* f = std::get_if<FreeInterval>(&I)) {
        for (std::size_t i = 0; i < f->min.size(); ++i)
            if (p[i] + shift < f->min[i]) return false;
        return true;
    }
    ExtRat a, b;
    Rat diag;
    if (auto* t = std::get_if<Triangle>(&I)) {
        a = t->a;
        b = t->b;
    } else {
        const auto& g = std::get<GenTriangle>(I);
        a = g.a;
        b = g.b;
        diag = g.diag;
    }
    Rat x = p[0] + shift, y = p[1] + shift;
    if (a.finite() && x >= a.value()) return false;
    if (b.finite() && y >= b.value()) return false;
    return x + y >= diag;
}

// Per-axis condition of a rectangle/free region; such regions are products,
// so full membership is the conjunction over axes.
bool axis_cond(const Interval& I, const Rat& shift, std::size_t axis, const Rat& sample) {
    Rat x = sample + shift;
    if (auto* r = std::get_if<Rectangle>(&I)) {
        const auto& lo = r->min[axis];
        if (lo.value.finite() &&
            (lo.dec == Dec::minus ? x < lo.value.value() : x <= lo.value.value()))
            return false;
        const auto& hi = r->max[axis];
        if (hi.value.finite() &&
            (hi.dec == Dec::plus ? x > hi.value.value() : x >= hi.value.value()))
            return false;
        return true;
    }
    return x >= std::get<FreeInterval>(I).min[axis];
}

using Region = std::pair<const Interval*, Rat>;  // interval and shift

// Membership bitmask (one bit per region, <= 64 regions) for every cell of
// the product grid, row-major.
struct CellTable {
    std::vector<std::size_t> sizes, strides;
    std::vector<std::uint64_t> words;

    bool has_next(std::size_t idx, std::size_t axis) const {
        return (idx / strides[axis]) % sizes[axis] + 1 < sizes[axis];
    }
    std::size_t next(std::size_t idx, std::size_t axis) const {
        return idx + strides[axis];
    }
};

CellTable build_cells(const Grid& g, const std::vector<Region>& regions) {
    if (regions.size() > 64) throw std::length_error("too many regions for the cell table");
    CellTable T;
    std::size_t n = g.axes.size();
    T.sizes.resize(n);
    T.strides.assign(n, 1);
    for (std::size_t k = 0; k < n; ++k) T.sizes[k] = g.axes[k].size();
    for (std::size_t k = n; k-- > 1;) T.strides[k - 1] = T.strides[k] * T.sizes[k];
    std::size_t total = g.size();
    T.words.assign(total, 0);

    bool factor = std::none_of(regions.begin(), regions.end(),
                               [](const Region& r) { return triangular(*r.first); });
    if (factor) {
        // rows[k][t] has region bit r set iff axis-k condition of region r
        // holds at sample t; the cell word is the AND across axes.
        std::vector<std::vector<std::uint64_t>> rows(n);
        for (std::size_t k = 0; k < n; ++k) {
            rows[k].assign(T.sizes[k], 0);
            for (std::size_t t = 0; t < T.sizes[k]; ++t)
                for (std::size_t r = 0; r < regions.size(); ++r)
                    if (axis_cond(*regions[r].first, regions[r].second, k, g.axes[k][t]))
                        rows[k][t] |= std::uint64_t(1) << r;
        }
        std::vector<std::size_t> ix(n, 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::uint64_t w = ~std::uint64_t(0);
            for (std::size_t k = 0; k < n; ++k) w &= rows[k][ix[k]];
            T.words[idx] = w;
            for (std::size_t k = n; k-- > 0;) {
                if (++ix[k] < T.sizes[k]) break;
                ix[k] = 0;
            }
        }
    } else if (n == 2 && T.sizes[0] > 1 && T.sizes[1] > 1 &&
               g.axes[0][1] - g.axes[0][0] == g.axes[1][1] - g.axes[1][0] &&
               std::all_of(regions.begin(), regions.end(),
                           [](const Region& r) { return triangular(*r.first); })) {
        // Uniform lattice: leg conditions factor per axis, and the diagonal
        // x + y >= d reduces to an integer cutoff on i + j.
        Rat step = g.axes[0][1] - g.axes[0][0];
        std::vector<std::vector<std::uint64_t>> rows(2);
        rows[0].assign(T.sizes[0], 0);
        rows[1].assign(T.sizes[1], 0);
        std::vector<std::uint64_t> diag_mask(T.sizes[0] + T.sizes[1] - 1, 0);
        for (std::size_t r = 0; r < regions.size(); ++r) {
            ExtRat a, b;
            Rat diag;
            if (auto* t = std::get_if<Triangle>(regions[r].first)) {
                a = t->a;
                b = t->b;
            } else {
                const auto& gt = std::get<GenTriangle>(*regions[r].first);
                a = gt.a;
                b = gt.b;
                diag = gt.diag;
            }
            const Rat& s = regions[r].second;
            std::uint64_t rb = std::uint64_t(1) << r;
            for (std::size_t i = 0; i < T.sizes[0]; ++i)
                if (!a.finite() || g.axes[0][i] + s < a.value()) rows[0][i] |= rb;
            for (std::size_t j = 0; j < T.sizes[1]; ++j)
                if (!b.finite() || g.axes[1][j] + s < b.value()) rows[1][j] |= rb;
            // i + j >= ceil((d - 2s - lo0 - lo1) / step)
            Rat q = Rat(diag - 2 * s - g.axes[0][0] - g.axes[1][0]) / step;
            Int cut = numerator(q) / denominator(q);
            if (cut * denominator(q) < numerator(q)) cut += 1;
            long long k0 = cut < 0 ? 0 : cut.convert_to<long long>();
            for (std::size_t d = static_cast<std::size_t>(k0); d < diag_mask.size(); ++d)
                diag_mask[d] |= rb;
        }
        for (std::size_t i = 0; i < T.sizes[0]; ++i)
            for (std::size_t j = 0; j < T.sizes[1]; ++j)
                T.words[i * T.strides[0] + j] = rows[0][i] & rows[1][j] & diag_mask[i + j];
    } else {
        std::vector<std::size_t> ix(n, 0);
        std::vector<Rat> p(n);
        for (std::size_t idx = 0; idx < total; ++idx) {
            for (std::size_t k = 0; k < n; ++k) p[k] = g.axes[k][ix[k]];
            std::uint64_t w = 0;
            for (std::size_t r = 0; r < regions.size(); ++r)
                if (member(*regions[r].first, regions[r].second, p))
                    w |= std::uint64_t(1) << r;
            T.words[idx] = w;
            for (std::size_t k = n; k-- > 0;) {
                if (++ix[k] < T.sizes[k]) break;
                ix[k] = 0;
            }
        }
    }
    return T;
}

bool bit(std::uint64_t w, int r) { return (w >> r) & 1; }

// Naturality of the scalar candidate from region src to region tgt over all
// covering pairs of grid cells; commuting squares paste, so this implies
// naturality over all comparable pairs.
bool natural(const CellTable& T, int src, int tgt) {
    for (std::size_t idx = 0; idx < T.words.size(); ++idx) {
        std::uint64_t wp = T.words[idx];
        for (std::size_t k = 0; k < T.sizes.size(); ++k) {
            if (!T.has_next(idx, k)) continue;
            std::uint64_t wq = T.words[T.next(idx, k)];
            bool lhs = bit(wp, src) && bit(wp, tgt) && bit(wq, tgt);
            bool rhs = bit(wp, src) && bit(wq, src) && bit(wq, tgt);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool any_bits(const CellTable& T, int r1, int r2) {
    for (std::uint64_t w : T.words)
        if (bit(w, r1) && bit(w, r2)) return true;
    return false;
}

}  // namespace

Grid build_grid(const std::vector<Interval>& intervals, const std::vector<Rat>& shifts) {
    Grid g;
    if (intervals.empty()) {
        g.axes = {{Rat(-1), Rat(0), Rat(1)}};
        return g;
    }
    std::vector<Rat> all_shifts = shifts;
    all_shifts.push_back(Rat(0));

    if (std::any_of(intervals.begin(), intervals.end(),
                    [](const Interval& I) { return triangular(I); })) {
        // Diagonal boundaries are not axis-aligned, so use a uniform lattice
        // fine enough that every boundary line passes through lattice
        // coordinates and every arrangement cell contains a lattice point.
        std::set<Rat> legs, diags;
        for (const Interval& I : intervals) {
            ExtRat a, b;
            Rat diag;
            if (auto* t = std::get_if<Triangle>(&I)) {
                a = t->a;
                b = t->b;
            } else {
                const auto& gt = std::get<GenTriangle>(I);
                a = gt.a;
                b = gt.b;
                diag = gt.diag;
            }
            for (const Rat& s : all_shifts) {
                if (a.finite()) legs.insert(a.value() - s);
                if (b.finite()) legs.insert(b.value() - s);
                diags.insert(diag - 2 * s);
            }
        }
        // Legs, diagonal offsets, and all triangle vertices (d - leg): with an
        // infinite leg the region lives near x = d - b, far from the finite
        // leg values themselves.
        std::set<Rat> pool;
        pool.insert(Rat(0));
        pool.insert(legs.begin(), legs.end());
        pool.insert(diags.begin(), diags.end());
        for (const Rat& d : diags)
            for (const Rat& l : legs) pool.insert(d - l);
        Int den(1);
        for (const Rat& v : pool) den = boost::multiprecision::lcm(den, denominator(v));
        Rat step(Int(1), 4 * den);
        Rat lo = *pool.begin() - 1, hi = *pool.rbegin() + 1;
        std::vector<Rat> axis;
        std::size_t count =
            numerator(Rat((hi - lo) / step)).convert_to<std::size_t>() + 1;
        if (count > 100000) throw std::length_error("lattice too fine");
        axis.reserve(count);
        for (std::size_t i = 0; i < count; ++i) axis.push_back(lo + step * i);
        g.axes = {axis, axis};
        return g;
    }

    std::size_t n = static_cast<std::size_t>(dim_of(intervals.front()));
    g.axes.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::set<Rat> pool;
        for (const Interval& I : intervals) {
            std::vector<Rat> vals;
            if (auto* r = std::get_if<Rectangle>(&I)) {
                if (r->min[k].value.finite()) vals.push_back(r->min[k].value.value());
                if (r->max[k].value.finite()) vals.push_back(r->max[k].value.value());
            } else {
                vals.push_back(std::get<FreeInterval>(I).min[k]);
            }
            for (const Rat& v : vals)
                for (const Rat& s : all_shifts) {
                    pool.insert(v - s);
                    pool.insert(v + s);
                }
        }
        if (pool.empty()) {
            g.axes[k] = {Rat(-1), Rat(0), Rat(1)};
            continue;
        }
        std::vector<Rat> base(pool.begin(), pool.end());
        std::vector<Rat> axis;
        axis.push_back(base.front() - 1);
        for (std::size_t i = 0; i < base.size(); ++i) {
            axis.push_back(base[i]);
            if (i + 1 < base.size()) axis.push_back((base[i] + base[i + 1]) / 2);
        }
        axis.push_back(base.back() + 1);
        g.axes[k] = std::move(axis);
    }
    return g;
}

bool oracle_hom_nonzero(const Interval& I, const Interval& J, const Grid& grid) {
    CellTable T = build_cells(grid, {{&I, Rat(0)}, {&J, Rat(0)}});
    return any_bits(T, 0, 1) && natural(T, 0, 1);
}

bool oracle_pair_interleaved(const Interval& I, const Interval& J, const Rat& eps,
                             const Grid& grid) {
    Rat two = 2 * eps;
    // bits: I, I(eps), I(2eps), J, J(eps), J(2eps)
    CellTable T = build_cells(grid, {{&I, Rat(0)},
                                     {&I, eps},
                                     {&I, two},
                                     {&J, Rat(0)},
                                     {&J, eps},
                                     {&J, two}});
    // zero morphisms: works iff both 2eps persistences vanish on the grid
    if (!any_bits(T, 0, 2) && !any_bits(T, 3, 5)) return true;
    // scalar-1 morphisms: both interleaving equations plus naturality
    for (std::uint64_t w : T.words) {
        if (bit(w, 0) && bit(w, 2) && !bit(w, 4)) return false;
        if (bit(w, 3) && bit(w, 5) && !bit(w, 1)) return false;
    }
    return natural(T, 0, 4) && natural(T, 3, 1);
}

WitnessVerdict oracle_verify_witness(const Barcode& M, const Barcode& N,
                                     const WeightMatrix& W, const Grid& grid) {
    Rat two = 2 * W.delta;
    std::size_t nm = M.intervals.size(), nn = N.intervals.size();
    // bits: [0, nm) M at 0, [nm, 2nm) M at delta, [2nm, 3nm) M at 2 delta,
    // then the same three blocks for N.
    std::vector<Region> regions;
    for (const auto& s : {Rat(0), W.delta, two})
        for (const auto& [id, I] : M.intervals) regions.emplace_back(&I, s);
    for (const auto& s : {Rat(0), W.delta, two})
        for (const auto& [id, J] : N.intervals) regions.emplace_back(&J, s);
    CellTable T = build_cells(grid, regions);
    auto m0 = [&](std::size_t i) { return static_cast<int>(i); };
    auto m1 = [&](std::size_t i) { return static_cast<int>(nm + i); };
    auto m2 = [&](std::size_t i) { return static_cast<int>(2 * nm + i); };
    auto n0 = [&](std::size_t j) { return static_cast<int>(3 * nm + j); };
    auto n1 = [&](std::size_t j) { return static_cast<int>(3 * nm + nn + j); };
    auto n2 = [&](std::size_t j) { return static_cast<int>(3 * nm + 2 * nn + j); };

    auto index_of = [](const Barcode& B, const std::string& id) {
        for (std::size_t i = 0; i < B.intervals.size(); ++i)
            if (B.intervals[i].first == id) return i;
        throw std::invalid_argument("unknown interval id " + id);
    };
    for (const auto& [key, w] : W.f) {
        if (w == 0) throw std::invalid_argument("witness weights must be nonzero");
        if (!natural(T, m0(index_of(M, key.first)), n1(index_of(N, key.second))))
            throw std::invalid_argument("witness invariant violated: f(" + key.first + "," +
                                        key.second + ") is not natural");
    }
    for (const auto& [key, w] : W.g) {
        if (w == 0) throw std::invalid_argument("witness weights must be nonzero");
        if (!natural(T, n0(index_of(N, key.first)), m1(index_of(M, key.second))))
            throw std::invalid_argument("witness invariant violated: g(" + key.first + "," +
                                        key.second + ") is not natural");
    }

    WitnessVerdict v;
    // side M: for each ordered (X, X'), pointwise sum over J of
    // wf(X,J) wg(J,X') [p in X][p in J(d)][p in X'(2d)] against the 2d map.
    for (std::size_t i = 0; i < nm; ++i) {
        for (std::size_t ip = 0; ip < nm; ++ip) {
            std::vector<std::pair<int, Rat>> terms;  // (J bit at delta, weight product)
            for (std::size_t j = 0; j < nn; ++j) {
                auto fit = W.f.find({M.intervals[i].first, N.intervals[j].first});
                auto git = W.g.find({N.intervals[j].first, M.intervals[ip].first});
                if (fit != W.f.end() && git != W.g.end())
                    terms.emplace_back(n1(j), Rat(fit->second * git->second));
            }
            bool ok = true;
            for (std::uint64_t w : T.words) {
                if (!bit(w, m0(i))) continue;
                Rat sum(0);
                if (bit(w, m2(ip)))
                    for (const auto& [rb, c] : terms)
                        if (bit(w, rb)) sum += c;
                Rat want = (i == ip && bit(w, m2(ip))) ? Rat(1) : Rat(0);
                if (sum != want) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                v.valid = false;
                v.violations.emplace_back("M", M.intervals[i].first, M.intervals[ip].first);
            }
        }
    }
    for (std::size_t j = 0; j < nn; ++j) {
        for (std::size_t jp = 0; jp < nn; ++jp) {
            std::vector<std::pair<int, Rat>> terms;
            for (std::size_t i = 0; i < nm; ++i) {
                auto git = W.g.find({N.intervals[j].first, M.intervals[i].first});
                auto fit = W.f.find({M.intervals[i].first, N.intervals[jp].first});
                if (git != W.g.end() && fit != W.f.end())
                    terms.emplace_back(m1(i), Rat(git->second * fit->second));
            }
            bool ok = true;
            for (std::uint64_t w : T.words) {
                if (!bit(w, n0(j))) continue;
                Rat sum(0);
                if (bit(w, n2(jp)))
                    for (const auto& [rb, c] : terms)
                        if (bit(w, rb)) sum += c;
                Rat want = (j == jp && bit(w, n2(jp))) ? Rat(1) : Rat(0);
                if (sum != want) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                v.valid = false;
                v.violations.emplace_back("N", N.intervals[j].first, N.intervals[jp].first);
            }
        }
    }
    return v;
}

namespace {

ExtRat best_assignment(const Barcode& M, const Barcode& N, std::size_t i,
                       std::vector<char>& used, const std::vector<std::vector<ExtRat>>& dist,
                       const std::vector<ExtRat>& mtriv, const std::vector<ExtRat>& ntriv) {
    if (i == M.intervals.size()) {
        ExtRat cost(0);
        for (std::size_t j = 0; j < used.size(); ++j)
            if (!used[j]) cost = max(cost, ntriv[j]);
        return cost;
    }
    ExtRat best = max(mtriv[i], best_assignment(M, N, i + 1, used, dist, mtriv, ntriv));
    for (std::size_t j = 0; j < used.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        ExtRat c = max(dist[i][j], best_assignment(M, N, i + 1, used, dist, mtriv, ntriv));
        used[j] = 0;
        best = min(best, c);
    }
    return best;
}

}  // namespace

ExtRat oracle_bottleneck(const Barcode& M, const Barcode& N) {
    if (M.intervals.size() > 6 || N.intervals.size() > 6)
        throw std::length_error("oracle_bottleneck: more than 6 intervals per side");
    std::vector<std::vector<ExtRat>> dist(M.intervals.size(),
                                          std::vector<ExtRat>(N.intervals.size()));
    for (std::size_t i = 0; i < M.intervals.size(); ++i)
        for (std::size_t j = 0; j < N.intervals.size(); ++j)
            dist[i][j] = pair_distance(M.intervals[i].second, N.intervals[j].second).value;
    std::vector<ExtRat> mtriv, ntriv;
    for (const auto& [id, I] : M.intervals) mtriv.push_back(triviality_infimum(I));
    for (const auto& [id, J] : N.intervals) ntriv.push_back(triviality_infimum(J));
    std::vector<char> used(N.intervals.size(), 0);
    return best_assignment(M, N, 0, used, dist, mtriv, ntriv);
}

}  // namespace stab
