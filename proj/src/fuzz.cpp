#include "stab/fuzz.hpp"

#include <algorithm>
#include <set>

namespace stab {

int Fuzzer::pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rat Fuzzer::half_rat(int lo2, int hi2) { return Rat(pick(lo2, hi2), 2); }

Rat Fuzzer::random_eps() { return Rat(pick(1, 4), 2); }

DecoratedValue Fuzzer::random_min(bool allow_inf) {
    if (allow_inf && pick(0, 5) == 0) return dv(ExtRat::neg_inf(), Dec::plus);
    return dv(ExtRat(half_rat(-8, 8)), pick(0, 1) ? Dec::plus : Dec::minus);
}

Interval Fuzzer::random_interval(Kind kind, int dim) {
    if (kind == Kind::rectangle) {
        DecoratedPoint lo, hi;
        for (int i = 0; i < dim; ++i) {
            DecoratedValue mn = random_min(true);
            DecoratedValue mx;
            if (pick(0, 5) == 0) {
                mx = dv(ExtRat::pos_inf(), Dec::minus);
            } else if (!mn.value.finite()) {
                mx = dv(ExtRat(half_rat(-8, 8)), pick(0, 1) ? Dec::plus : Dec::minus);
            } else {
                int len = pick(0, 8);
                if (len == 0) {
                    mn.dec = Dec::minus;  // degenerate [a, a]
                    mx = dv(mn.value, Dec::plus);
                } else {
                    mx = dv(mn.value + Rat(len, 2), pick(0, 1) ? Dec::plus : Dec::minus);
                }
            }
            lo.push_back(mn);
            hi.push_back(mx);
        }
        return make_rectangle(std::move(lo), std::move(hi));
    }
    if (kind == Kind::free_interval) {
        std::vector<Rat> lo;
        for (int i = 0; i < dim; ++i) lo.push_back(half_rat(-8, 8));
        return make_free(std::move(lo));
    }
    for (;;) {
        ExtRat a = pick(0, 4) == 0 ? ExtRat::pos_inf() : ExtRat(half_rat(-6, 8));
        ExtRat b = pick(0, 4) == 0 ? ExtRat::pos_inf() : ExtRat(half_rat(-6, 8));
        if (compare(a + b, ExtRat(0)) > 0) return make_triangle(a, b);
    }
}

Barcode Fuzzer::random_barcode(Kind kind, int dim, int count) {
    std::vector<std::pair<std::string, Interval>> intervals;
    for (int i = 0; i < count; ++i)
        intervals.emplace_back("a" + std::to_string(i), random_interval(kind, dim));
    return make_barcode(kind, dim, std::move(intervals));
}

Barcode Fuzzer::perturb(const Barcode& b, const Rat& delta) {
    Rat step = delta / 2;
    auto move = [&](const Rat& v) { return Rat(v + step * pick(-2, 2)); };
    Barcode out = b;
    for (auto& [id, I] : out.intervals) {
        if (auto* r = std::get_if<Rectangle>(&I)) {
            bool ok = false;
            for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
                Rectangle c = *r;
                for (std::size_t i = 0; i < c.min.size(); ++i) {
                    if (c.min[i].value.finite()) c.min[i].value = ExtRat(move(c.min[i].value.value()));
                    if (c.max[i].value.finite()) c.max[i].value = ExtRat(move(c.max[i].value.value()));
                }
                ok = true;
                for (std::size_t i = 0; i < c.min.size(); ++i)
                    if (compare(c.min[i], c.max[i]) >= 0) ok = false;
                if (ok) *r = c;
            }
            if (!ok) {
                // rigid translation always preserves validity
                Rat t = step * pick(-2, 2);
                for (std::size_t i = 0; i < r->min.size(); ++i) {
                    if (r->min[i].value.finite()) r->min[i].value = r->min[i].value + t;
                    if (r->max[i].value.finite()) r->max[i].value = r->max[i].value + t;
                }
            }
        } else if (auto* f = std::get_if<FreeInterval>(&I)) {
            for (Rat& x : f->min) x = move(x);
        } else {
            auto& t = std::get<Triangle>(I);
            ExtRat a = t.a.finite() ? ExtRat(move(t.a.value())) : t.a;
            ExtRat bb = t.b.finite() ? ExtRat(move(t.b.value())) : t.b;
            if (compare(a + bb, ExtRat(0)) > 0) t = Triangle{a, bb};
        }
    }
    return out;
}

namespace {

void fail(SuiteResult& r, const std::string& what) {
    ++r.failures;
    if (r.notes.size() < 10) r.notes.push_back(what);
}

std::vector<Interval> all_intervals(const Barcode& M, const Barcode& N) {
    std::vector<Interval> v;
    for (const auto& [id, I] : M.intervals) v.push_back(I);
    for (const auto& [id, I] : N.intervals) v.push_back(I);
    return v;
}

using Violations = std::set<std::tuple<std::string, std::string, std::string>>;

Violations violation_set(const WitnessVerdict& v) {
    return Violations(v.violations.begin(), v.violations.end());
}

}  // namespace

SuiteResult suite_oracle_agreement(std::uint64_t seed, Kind kind, int dim, int trials) {
    SuiteResult r;
    r.name = "oracle agreement";
    Fuzzer fz(seed);
    int per_side = dim <= 2 ? 2 : 1;
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        Barcode M = fz.random_barcode(kind, dim, per_side);
        Rat delta = fz.random_eps();
        bool twin = fz.pick(0, 1) == 0;
        Barcode N = twin ? fz.perturb(M, delta) : fz.random_barcode(kind, dim, per_side);
        const Interval& I = M.intervals[0].second;
        const Interval& J = N.intervals[0].second;

        // hom_nonzero, unshifted and shifted targets
        Interval Js = fz.pick(0, 1) ? J : shift_interval(J, delta);
        {
            Grid g = build_grid({I, Js}, {});
            if (hom_nonzero(I, Js) != oracle_hom_nonzero(I, Js, g))
                fail(r, "hom_nonzero disagreement");
        }

        // pair_interleaved at a random eps
        Rat eps = fz.random_eps();
        {
            Grid g = build_grid({I, J}, {eps, 2 * eps});
            if (pair_interleaved(I, J, eps) != oracle_pair_interleaved(I, J, eps, g))
                fail(r, "pair_interleaved disagreement");
        }

        // pair_distance via the predicate sampled around the reported infimum
        auto probe = [&](const Rat& e, int expect /* -1: none */) {
            Grid g = build_grid({I, J}, {e, 2 * e});
            bool o = oracle_pair_interleaved(I, J, e, g);
            if (o != pair_interleaved(I, J, e)) fail(r, "predicate disagreement at sample");
            if (expect >= 0 && o != (expect > 0)) fail(r, "pair_distance sample mismatch");
        };
        PairDistance d = pair_distance(I, J);
        if (d.value.finite()) {
            const Rat& v = d.value.value();
            probe(v, d.attained ? 1 : 0);
            probe(v + Rat(1, 2), 1);
            if (v > 0) {
                // largest half-integer strictly below v
                Int fl = numerator(Rat(2 * v)) / denominator(Rat(2 * v));
                Rat below(fl, 2);
                if (below == v) below -= Rat(1, 2);
                if (below >= 0) probe(below, 0);
            }
        } else {
            probe(Rat(10), 0);
        }

        // verify_witness on the induced matching witness (twin instances)
        if (twin) {
            std::vector<std::pair<std::string, std::string>> sigma;
            for (const auto& [id, X] : M.intervals) sigma.emplace_back(id, id);
            WeightMatrix W = witness_from_matching(M, N, sigma, delta);
            Grid g = build_grid(all_intervals(M, N), {delta, 2 * delta});
            WitnessVerdict a = verify_witness(M, N, W);
            WitnessVerdict b = oracle_verify_witness(M, N, W, g);
            if (a.valid != b.valid || violation_set(a) != violation_set(b))
                fail(r, "verify_witness disagreement");
            if (!a.valid) fail(r, "matching witness did not verify");
            if (!W.f.empty()) {
                WeightMatrix W2 = W;
                W2.f.begin()->second = -W2.f.begin()->second;
                WitnessVerdict a2 = verify_witness(M, N, W2);
                WitnessVerdict b2 = oracle_verify_witness(M, N, W2, g);
                if (a2.valid != b2.valid || violation_set(a2) != violation_set(b2))
                    fail(r, "verify_witness disagreement (tampered)");
            }
        }
        ++r.conditioned;
    }
    return r;
}

SuiteResult suite_bottleneck_oracle(std::uint64_t seed, Kind kind, int dim, int trials) {
    SuiteResult r;
    r.name = "bottleneck vs oracle";
    Fuzzer fz(seed);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        Barcode M = fz.random_barcode(kind, dim, fz.pick(0, 4));
        Barcode N = fz.pick(0, 1) && !M.intervals.empty()
                        ? fz.perturb(M, fz.random_eps())
                        : fz.random_barcode(kind, dim, fz.pick(0, 4));
        BottleneckResult b = bottleneck(M, N);
        ExtRat o = oracle_bottleneck(M, N);
        if (b.value != o) {
            fail(r, "bottleneck " + b.value.str() + " != oracle " + o.str());
            continue;
        }
        if (b.value.finite()) {
            auto feas = matching_feasible(M, N, b.value.value());
            if (b.attained != feas.has_value()) fail(r, "attainment mismatch");
        }
        ++r.conditioned;
    }
    return r;
}

namespace {

// Rectangle R with corners S +/- eps plus nonnegative slack, preserving S's
// boundedness pattern; slack in half-integers [0, 2].
Rectangle offset_rect(Fuzzer& fz, const Rectangle& S, const Rat& shift) {
    DecoratedPoint lo, hi;
    for (std::size_t i = 0; i < S.min.size(); ++i) {
        if (S.min[i].value.finite())
            lo.push_back(dv(S.min[i].value + Rat(shift + fz.half_rat(0, 4)),
                            fz.pick(0, 1) ? Dec::plus : Dec::minus));
        else
            lo.push_back(S.min[i]);
        if (S.max[i].value.finite())
            hi.push_back(dv(S.max[i].value + Rat(shift + fz.half_rat(0, 4)),
                            fz.pick(0, 1) ? Dec::plus : Dec::minus));
        else
            hi.push_back(S.max[i]);
    }
    return make_rectangle(std::move(lo), std::move(hi));
}

// Biased same-type triple with morphisms R -> S(eps) -> T(eps) likely.
struct RectChain {
    Rectangle R, S, T;
    Rat eps;
};

std::optional<RectChain> gen_rect_chain(Fuzzer& fz, int dim) {
    RectChain c;
    c.S = std::get<Rectangle>(fz.random_interval(Kind::rectangle, dim));
    c.eps = fz.random_eps();
    try {
        c.R = offset_rect(fz, c.S, Rat(-c.eps));  // min_S - eps <= min_R etc.
        // T needs min_T <= min_S + eps: reflect the slack downward
        DecoratedPoint lo, hi;
        for (std::size_t i = 0; i < c.S.min.size(); ++i) {
            if (c.S.min[i].value.finite())
                lo.push_back(dv(c.S.min[i].value + Rat(c.eps - fz.half_rat(0, 4)),
                                fz.pick(0, 1) ? Dec::plus : Dec::minus));
            else
                lo.push_back(c.S.min[i]);
            if (c.S.max[i].value.finite())
                hi.push_back(dv(c.S.max[i].value + Rat(c.eps - fz.half_rat(0, 4)),
                                fz.pick(0, 1) ? Dec::plus : Dec::minus));
            else
                hi.push_back(c.S.max[i]);
        }
        c.T = make_rectangle(std::move(lo), std::move(hi));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return c;
}

}  // namespace

SuiteResult suite_type_splitting(std::uint64_t seed, int dim, int trials) {
    SuiteResult r;
    r.name = "type splitting";
    Fuzzer fz(seed);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        Rectangle S = std::get<Rectangle>(fz.random_interval(Kind::rectangle, dim));
        // R above S (hom(R, S) plausible), same boundedness pattern except
        // where we deliberately break it
        auto pick_break = [&](Fuzzer& f) { return f.pick(0, 3) == 0; };
        DecoratedPoint rlo, rhi;
        for (int i = 0; i < dim; ++i) {
            if (S.min[i].value.finite())
                rlo.push_back(pick_break(fz) ? dv(ExtRat::neg_inf(), Dec::plus)
                                             : dv(S.min[i].value + Rat(fz.half_rat(0, 4)),
                                                  fz.pick(0, 1) ? Dec::plus : Dec::minus));
            else
                rlo.push_back(pick_break(fz)
                                  ? dv(ExtRat(fz.half_rat(-8, 8)),
                                       fz.pick(0, 1) ? Dec::plus : Dec::minus)
                                  : S.min[i]);
            if (S.max[i].value.finite())
                rhi.push_back(pick_break(fz) ? dv(ExtRat::pos_inf(), Dec::minus)
                                             : dv(S.max[i].value + Rat(fz.half_rat(0, 4)),
                                                  fz.pick(0, 1) ? Dec::plus : Dec::minus));
            else
                rhi.push_back(pick_break(fz)
                                  ? dv(ExtRat(fz.half_rat(-8, 8) + 10),
                                       fz.pick(0, 1) ? Dec::plus : Dec::minus)
                                  : S.max[i]);
        }
        Rectangle R, T;
        try {
            R = make_rectangle(rlo, rhi);
            // T below S with R's pattern
            DecoratedPoint tlo, thi;
            for (int i = 0; i < dim; ++i) {
                if (R.min[i].value.finite())
                    tlo.push_back(dv((S.min[i].value.finite() ? S.min[i].value
                                                              : R.min[i].value) -
                                         Rat(fz.half_rat(0, 4)),
                                     fz.pick(0, 1) ? Dec::plus : Dec::minus));
                else
                    tlo.push_back(R.min[i]);
                if (R.max[i].value.finite())
                    thi.push_back(dv((S.max[i].value.finite() ? S.max[i].value
                                                              : R.max[i].value) -
                                         Rat(fz.half_rat(0, 4)),
                                     fz.pick(0, 1) ? Dec::plus : Dec::minus));
                else
                    thi.push_back(R.max[i]);
            }
            T = make_rectangle(tlo, thi);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (same_type(R, S) || !same_type(R, T)) continue;
        ++r.conditioned;
        if (hom_nonzero(R, S) && hom_nonzero(S, T) && composite_nonzero(R, S, T))
            fail(r, "type-splitting composite is nonzero");
    }
    return r;
}

SuiteResult suite_rect_closeness(std::uint64_t seed, int dim, int trials) {
    SuiteResult r;
    r.name = "rectangle closeness";
    Fuzzer fz(seed);
    Rat constant(2 * dim - 1);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        auto c = gen_rect_chain(fz, dim);
        if (!c) continue;
        Interval R = c->R, S = c->S, T = c->T;
        if (!hom_nonzero(R, shift_interval(S, c->eps))) continue;
        if (!hom_nonzero(S, shift_interval(T, c->eps))) continue;
        if (!alpha_leq(R, T)) continue;
        ++r.conditioned;
        Rat bound = constant * c->eps;
        if (!pair_interleaved(S, R, bound) && !pair_interleaved(S, T, bound))
            fail(r, "closeness violated at eps " + to_string(c->eps));
    }
    return r;
}

SuiteResult suite_rect_composite(std::uint64_t seed, int dim, int trials) {
    SuiteResult r;
    r.name = "rectangle nonzero composite";
    Fuzzer fz(seed);
    Rat sig(4 * dim - 2);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        auto c = gen_rect_chain(fz, dim);
        if (!c) continue;
        Interval R = c->R, S = c->S, T = c->T;
        if (!hom_nonzero(R, shift_interval(S, c->eps))) continue;
        if (!hom_nonzero(S, shift_interval(T, c->eps))) continue;
        if (!alpha_leq(R, T)) continue;
        if (!is_significant(R, Rat(sig * c->eps)) || !is_significant(T, Rat(sig * c->eps)))
            continue;
        ++r.conditioned;
        if (!composite_nonzero(R, shift_interval(S, c->eps),
                               shift_interval(T, 2 * c->eps)))
            fail(r, "composite vanished at eps " + to_string(c->eps));
    }
    return r;
}

SuiteResult suite_free_closeness(std::uint64_t seed, int dim, int trials) {
    SuiteResult r;
    r.name = "free closeness";
    Fuzzer fz(seed);
    Rat constant(dim - 1);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        FreeInterval S = std::get<FreeInterval>(fz.random_interval(Kind::free_interval, dim));
        Rat eps = fz.random_eps();
        FreeInterval Rf, Tf;
        for (int i = 0; i < dim; ++i) {
            Rf.min.push_back(Rat(S.min[i] - eps + fz.half_rat(0, 4)));
            Tf.min.push_back(Rat(S.min[i] + eps - fz.half_rat(0, 4)));
        }
        Interval R = Rf, Ss = S, T = Tf;
        if (!alpha_leq(R, T)) continue;  // hom chain holds by construction
        ++r.conditioned;
        Rat bound = constant * eps;
        if (!pair_interleaved(Ss, R, bound) && !pair_interleaved(Ss, T, bound))
            fail(r, "free closeness violated at eps " + to_string(eps));
    }
    return r;
}

namespace {

struct TriChain {
    Interval R, S, T;
    Rat eps;
};

// The triangle lemmas are stated for bounded triangles only.
bool bounded_triangle(const Interval& I) {
    const auto& t = std::get<Triangle>(I);
    return t.a.finite() && t.b.finite();
}

std::optional<TriChain> gen_tri_chain(Fuzzer& fz) {
    TriChain c;
    Triangle S = std::get<Triangle>(fz.random_interval(Kind::triangle, 2));
    c.eps = fz.random_eps();
    auto above = [&](const ExtRat& v) {
        return v.finite() ? ExtRat(Rat(v.value() - c.eps + fz.half_rat(0, 4)))
                          : ExtRat::pos_inf();
    };
    auto below = [&](const ExtRat& v) {
        if (!v.finite())
            return fz.pick(0, 1) ? ExtRat::pos_inf() : ExtRat(fz.half_rat(-6, 8));
        return ExtRat(Rat(v.value() + c.eps - fz.half_rat(0, 4)));
    };
    ExtRat ra = above(S.a), rb = above(S.b);
    ExtRat ta = below(S.a), tb = below(S.b);
    if (!(compare(ra + rb, ExtRat(0)) > 0) || !(compare(ta + tb, ExtRat(0)) > 0))
        return std::nullopt;
    c.R = make_triangle(ra, rb);
    c.S = S;
    c.T = make_triangle(ta, tb);
    return c;
}

}  // namespace

SuiteResult suite_triangle_closeness(std::uint64_t seed, int trials) {
    SuiteResult r;
    r.name = "triangle closeness";
    Fuzzer fz(seed);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        auto c = gen_tri_chain(fz);
        if (!c) continue;
        if (!bounded_triangle(c->R) || !bounded_triangle(c->S) || !bounded_triangle(c->T))
            continue;
        if (!hom_nonzero(c->R, shift_interval(c->S, c->eps))) continue;
        if (!hom_nonzero(c->S, shift_interval(c->T, c->eps))) continue;
        if (!alpha_leq(c->R, c->T)) continue;
        if (!composite_nonzero(c->R, shift_interval(c->S, c->eps),
                               shift_interval(c->T, 2 * c->eps)))
            continue;
        ++r.conditioned;
        if (!pair_interleaved(c->S, c->R, c->eps) && !pair_interleaved(c->S, c->T, c->eps))
            fail(r, "triangle closeness violated at eps " + to_string(c->eps));
    }
    return r;
}

SuiteResult suite_triangle_composite(std::uint64_t seed, int trials) {
    SuiteResult r;
    r.name = "triangle nonzero composite";
    Fuzzer fz(seed);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        auto c = gen_tri_chain(fz);
        if (!c) continue;
        if (!bounded_triangle(c->R) || !bounded_triangle(c->S) || !bounded_triangle(c->T))
            continue;
        if (!hom_nonzero(c->R, shift_interval(c->S, c->eps))) continue;
        if (!hom_nonzero(c->S, shift_interval(c->T, c->eps))) continue;
        if (!alpha_leq(c->R, c->T)) continue;
        if (!is_significant(c->T, Rat(2 * c->eps))) continue;
        ++r.conditioned;
        if (!composite_nonzero(c->R, shift_interval(c->S, c->eps),
                               shift_interval(c->T, 2 * c->eps)))
            fail(r, "triangle composite vanished at eps " + to_string(c->eps));
    }
    return r;
}

SuiteResult suite_matching(std::uint64_t seed, int trials) {
    SuiteResult r;
    r.name = "matching machinery";
    Fuzzer fz(seed);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        // synthetic graphs for the cover/combine machinery
        InterleavingGraph G;
        G.eps = 0;
        int nl = fz.pick(0, 5), nr = fz.pick(0, 5);
        for (int i = 0; i < nl; ++i) {
            G.left.push_back("l" + std::to_string(i));
            G.required_left.push_back(fz.pick(0, 1));
        }
        for (int j = 0; j < nr; ++j) {
            G.right.push_back("r" + std::to_string(j));
            G.required_right.push_back(fz.pick(0, 1));
        }
        G.adj.resize(nl);
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nr; ++j)
                if (fz.pick(0, 4) < 2) G.adj[i].push_back(j);
        CoverResult lc = cover_matching(G, Side::left);
        CoverResult rc = cover_matching(G, Side::right);
        if (!lc.matching) {
            // Hall violator: a required subset with fewer neighbours
            std::set<int> nbrs;
            for (int u : lc.violating) {
                if (!G.required_left[u]) fail(r, "violating set leaves the required set");
                for (int v : G.adj[u]) nbrs.insert(v);
            }
            if (lc.violating.size() <= nbrs.size()) fail(r, "violating set is not a violator");
        }
        if (lc.matching && rc.matching) {
            auto comb = combine_matchings(*lc.matching, *rc.matching, G);
            std::set<int> ml, mr;
            for (const auto& [l, rr] : comb) {
                if (!ml.insert(l).second || !mr.insert(rr).second)
                    fail(r, "combined result is not a matching");
                if (!std::count(G.adj[l].begin(), G.adj[l].end(), rr))
                    fail(r, "combined result uses a non-edge");
            }
            for (int i = 0; i < nl; ++i)
                if (G.required_left[i] && !ml.count(i)) fail(r, "required-left uncovered");
            for (int j = 0; j < nr; ++j)
                if (G.required_right[j] && !mr.count(j)) fail(r, "required-right uncovered");
        }

        // feasibility monotonicity and witness construction on real barcodes
        Barcode M = fz.random_barcode(Kind::rectangle, 2, fz.pick(1, 3));
        Barcode N = fz.pick(0, 1) ? fz.perturb(M, fz.random_eps())
                                  : fz.random_barcode(Kind::rectangle, 2, fz.pick(1, 3));
        Rat e1 = fz.random_eps();
        Rat e2 = e1 + fz.random_eps();
        auto f1 = matching_feasible(M, N, e1);
        auto f2 = matching_feasible(M, N, e2);
        if (f1 && !f2) fail(r, "feasibility is not monotone");
        if (f1) {
            WeightMatrix W = witness_from_matching(M, N, f1->pairs, e1);
            if (!verify_witness(M, N, W).valid)
                fail(r, "matching-induced witness failed verification");
            ++r.conditioned;
        }
    }
    return r;
}

SuiteResult suite_stability_1d(std::uint64_t seed, int trials) {
    SuiteResult r;
    r.name = "1-d stability";
    Fuzzer fz(seed);
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        Barcode M = fz.random_barcode(Kind::rectangle, 1, fz.pick(1, 4));
        Rat delta = fz.random_eps();
        Barcode N = fz.perturb(M, delta);
        BottleneckResult b = bottleneck(M, N);
        ++r.conditioned;
        if (compare(b.value, ExtRat(delta)) > 0)
            fail(r, "bottleneck " + b.value.str() + " exceeds perturbation " +
                        to_string(delta));
    }
    return r;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int scale) {
    std::vector<SuiteResult> out;
    auto tag = [&](SuiteResult s, const std::string& ctx) {
        s.name += " (" + ctx + ")";
        out.push_back(std::move(s));
    };
    for (int dim : {1, 2, 3})
        tag(suite_oracle_agreement(seed + dim, Kind::rectangle, dim, 200 * scale),
            "rectangle n=" + std::to_string(dim));
    for (int dim : {2, 3, 4})
        tag(suite_oracle_agreement(seed + 10 + dim, Kind::free_interval, dim, 200 * scale),
            "free n=" + std::to_string(dim));
    tag(suite_oracle_agreement(seed + 20, Kind::triangle, 2, 200 * scale), "triangle n=2");

    tag(suite_bottleneck_oracle(seed + 30, Kind::rectangle, 2, 40 * scale), "rectangle n=2");
    tag(suite_bottleneck_oracle(seed + 31, Kind::free_interval, 3, 30 * scale), "free n=3");
    tag(suite_bottleneck_oracle(seed + 32, Kind::triangle, 2, 30 * scale), "triangle n=2");

    tag(suite_type_splitting(seed + 40, 2, 1000 * scale), "n=2");
    tag(suite_rect_closeness(seed + 41, 2, 1000 * scale), "n=2");
    tag(suite_rect_composite(seed + 42, 2, 1000 * scale), "n=2");
    tag(suite_free_closeness(seed + 43, 3, 1000 * scale), "n=3");
    tag(suite_triangle_closeness(seed + 44, 1000 * scale), "n=2");
    tag(suite_triangle_composite(seed + 45, 1000 * scale), "n=2");

    tag(suite_matching(seed + 50, 500 * scale), "");
    tag(suite_stability_1d(seed + 51, 200 * scale), "");
    return out;
}

}  // namespace stab
