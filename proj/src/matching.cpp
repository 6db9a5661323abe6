#include "stab/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace stab {

InterleavingGraph build_graph(const Barcode& M, const Barcode& N, const Rat& eps) {
    if (M.kind != N.kind || M.dim != N.dim)
        throw std::invalid_argument("barcode kind/dim mismatch");
    if (eps < 0) throw std::invalid_argument("build_graph requires eps >= 0");
    InterleavingGraph G;
    G.eps = eps;
    Rat two = 2 * eps;
    for (const auto& [id, I] : M.intervals) {
        G.left.push_back(id);
        G.required_left.push_back(is_significant(I, two));
    }
    for (const auto& [id, J] : N.intervals) {
        G.right.push_back(id);
        G.required_right.push_back(is_significant(J, two));
    }
    G.adj.resize(G.left.size());
    for (std::size_t i = 0; i < M.intervals.size(); ++i)
        for (std::size_t j = 0; j < N.intervals.size(); ++j)
            if (pair_interleaved(M.intervals[i].second, N.intervals[j].second, eps))
                G.adj[i].push_back(static_cast<int>(j));
    return G;
}

namespace {

constexpr int kNil = -1;

// Hopcroft-Karp on the subgraph induced by a subset of left vertices.
struct HopcroftKarp {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> lefts;  // active left vertices
    std::vector<int> match_l, match_r, dist;

    HopcroftKarp(const std::vector<std::vector<int>>& a, std::vector<int> ls, int n_right)
        : adj(a), lefts(std::move(ls)) {
        match_l.assign(adj.size(), kNil);
        match_r.assign(n_right, kNil);
    }

    bool bfs() {
        std::queue<int> q;
        dist.assign(adj.size(), std::numeric_limits<int>::max());
        for (int u : lefts)
            if (match_l[u] == kNil) {
                dist[u] = 0;
                q.push(u);
            }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w == kNil) {
                    found = true;
                } else if (dist[w] == std::numeric_limits<int>::max()) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w == kNil || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = std::numeric_limits<int>::max();
        return false;
    }

    int run() {
        int size = 0;
        while (bfs())
            for (int u : lefts)
                if (match_l[u] == kNil && dfs(u)) ++size;
        return size;
    }

    // Koenig-style Hall violator: left vertices reachable from unmatched left
    // vertices by alternating paths. |X| exceeds |N(X)| when the matching
    // does not cover all active vertices.
    std::vector<int> violating_set() const {
        std::vector<char> seen_l(adj.size(), 0), seen_r(match_r.size(), 0);
        std::queue<int> q;
        for (int u : lefts)
            if (match_l[u] == kNil) {
                seen_l[u] = 1;
                q.push(u);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (seen_r[v]) continue;
                seen_r[v] = 1;
                int w = match_r[v];
                if (w != kNil && !seen_l[w]) {
                    seen_l[w] = 1;
                    q.push(w);
                }
            }
        }
        std::vector<int> x;
        for (int u : lefts)
            if (seen_l[u]) x.push_back(u);
        return x;
    }
};

InterleavingGraph transpose(const InterleavingGraph& G) {
    InterleavingGraph T;
    T.eps = G.eps;
    T.left = G.right;
    T.right = G.left;
    T.required_left = G.required_right;
    T.required_right = G.required_left;
    T.adj.resize(T.left.size());
    for (std::size_t i = 0; i < G.adj.size(); ++i)
        for (int j : G.adj[i]) T.adj[j].push_back(static_cast<int>(i));
    return T;
}

}  // namespace

CoverResult cover_matching(const InterleavingGraph& G, Side side) {
    if (side == Side::right) {
        CoverResult r = cover_matching(transpose(G), Side::left);
        if (r.matching)
            for (auto& [a, b] : *r.matching) std::swap(a, b);
        return r;
    }
    std::vector<int> req;
    for (std::size_t i = 0; i < G.left.size(); ++i)
        if (G.required_left[i]) req.push_back(static_cast<int>(i));
    HopcroftKarp hk(G.adj, req, static_cast<int>(G.right.size()));
    int size = hk.run();
    CoverResult out;
    if (size == static_cast<int>(req.size())) {
        std::vector<std::pair<int, int>> m;
        for (int u : req) m.emplace_back(u, hk.match_l[u]);
        out.matching = std::move(m);
    } else {
        out.violating = hk.violating_set();
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_matching(const std::vector<std::pair<int, int>>& m, const InterleavingGraph& G,
                    const std::vector<char>& required, bool left_side) {
    std::set<int> ls, rs;
    for (const auto& [l, r] : m) {
        if (!ls.insert(l).second || !rs.insert(r).second)
            throw std::invalid_argument("combine_matchings: input is not a matching");
        if (!std::count(G.adj[l].begin(), G.adj[l].end(), r))
            throw std::invalid_argument("combine_matchings: edge outside the graph");
    }
    const auto& covered = left_side ? ls : rs;
    for (std::size_t i = 0; i < required.size(); ++i)
        if (required[i] && !covered.count(static_cast<int>(i)))
            throw std::invalid_argument("combine_matchings: input cover is incomplete");
}

}  // namespace

std::vector<std::pair<int, int>> combine_matchings(
    const std::vector<std::pair<int, int>>& sigma,
    const std::vector<std::pair<int, int>>& tau, const InterleavingGraph& G) {
    check_matching(sigma, G, G.required_left, true);
    check_matching(tau, G, G.required_right, false);

    int nl = static_cast<int>(G.left.size());
    int nr = static_cast<int>(G.right.size());
    UnionFind uf(nl + nr);
    for (const auto& [l, r] : sigma) uf.unite(l, nl + r);
    for (const auto& [l, r] : tau) uf.unite(l, nl + r);

    // Per component, sigma covers its required-left and tau its
    // required-right; the component walk shows at least one of them covers
    // both required sets.
    std::vector<std::pair<int, int>> out;
    std::set<int> roots;
    for (const auto& [l, r] : sigma) roots.insert(uf.find(l));
    for (const auto& [l, r] : tau) roots.insert(uf.find(l));
    for (int root : roots) {
        for (int pass = 0; pass < 2; ++pass) {
            const auto& m = pass == 0 ? sigma : tau;
            std::set<int> covered;
            for (const auto& [l, r] : m)
                if (uf.find(l) == root) {
                    covered.insert(l);
                    covered.insert(nl + r);
                }
            bool ok = true;
            for (int l = 0; l < nl && ok; ++l)
                if (G.required_left[l] && uf.find(l) == root && !covered.count(l)) ok = false;
            for (int r = 0; r < nr && ok; ++r)
                if (G.required_right[r] && uf.find(nl + r) == root && !covered.count(nl + r))
                    ok = false;
            if (ok) {
                for (const auto& e : m)
                    if (uf.find(e.first) == root) out.push_back(e);
                break;
            }
            if (pass == 1)
                throw std::logic_error("combine_matchings: no submatching covers a component");
        }
    }
    return out;
}

std::optional<MatchingResult> matching_feasible(const Barcode& M, const Barcode& N,
                                                const Rat& eps) {
    InterleavingGraph G = build_graph(M, N, eps);
    CoverResult lc = cover_matching(G, Side::left);
    if (!lc.matching) return std::nullopt;
    CoverResult rc = cover_matching(G, Side::right);
    if (!rc.matching) return std::nullopt;
    auto combined = combine_matchings(*lc.matching, *rc.matching, G);

    MatchingResult out;
    out.eps = eps;
    std::set<int> ml, mr;
    for (const auto& [l, r] : combined) {
        out.pairs.emplace_back(G.left[l], G.right[r]);
        ml.insert(l);
        mr.insert(r);
    }
    for (std::size_t i = 0; i < G.left.size(); ++i)
        if (!ml.count(static_cast<int>(i)))
            out.unmatched.emplace_back(G.left[i],
                                       significance_threshold(M.at(G.left[i])));
    for (std::size_t j = 0; j < G.right.size(); ++j)
        if (!mr.count(static_cast<int>(j)))
            out.unmatched.emplace_back(G.right[j],
                                       significance_threshold(N.at(G.right[j])));
    return out;
}

namespace {

void add_endpoint_gaps(const Interval& I, const Interval& J, std::set<Rat>& crit) {
    auto add = [&](const ExtRat& a, const ExtRat& b) {
        ExtRat g = abs_gap(a, b);
        if (g.finite()) crit.insert(g.value());
    };
    if (auto* r = std::get_if<Rectangle>(&I)) {
        const auto& s = std::get<Rectangle>(J);
        for (std::size_t i = 0; i < r->min.size(); ++i) {
            add(r->min[i].value, s.min[i].value);
            add(r->max[i].value, s.max[i].value);
        }
    } else if (auto* f = std::get_if<FreeInterval>(&I)) {
        const auto& g = std::get<FreeInterval>(J);
        for (std::size_t i = 0; i < f->min.size(); ++i)
            add(ExtRat(f->min[i]), ExtRat(g.min[i]));
    } else {
        const auto& a = std::get<Triangle>(I);
        const auto& b = std::get<Triangle>(J);
        add(a.a, b.a);
        add(a.b, b.b);
    }
}

}  // namespace

BottleneckResult bottleneck(const Barcode& M, const Barcode& N) {
    if (M.kind != N.kind || M.dim != N.dim)
        throw std::invalid_argument("barcode kind/dim mismatch");

    std::set<Rat> crit;
    crit.insert(Rat(0));
    for (const auto& [i, I] : M.intervals)
        for (const auto& [j, J] : N.intervals) add_endpoint_gaps(I, J, crit);
    for (const auto& [id, I] : M.intervals) {
        ExtRat t = triviality_infimum(I);
        if (t.finite()) crit.insert(t.value());
    }
    for (const auto& [id, J] : N.intervals) {
        ExtRat t = triviality_infimum(J);
        if (t.finite()) crit.insert(t.value());
    }

    // Feasibility is monotone in eps with breakpoints only at critical
    // values; scan for the smallest feasible one, then probe the open
    // interval below it to detect a non-attained infimum.
    std::vector<Rat> cs(crit.begin(), crit.end());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        auto feas = matching_feasible(M, N, cs[k]);
        if (!feas) continue;
        BottleneckResult out;
        if (k == 0) {
            out.value = ExtRat(cs[k]);
            out.attained = true;
            out.witness = std::move(feas);
            return out;
        }
        Rat mid = (cs[k - 1] + cs[k]) / 2;
        auto probe = matching_feasible(M, N, mid);
        if (probe) {
            out.value = ExtRat(cs[k - 1]);
            out.attained = false;
            out.witness = std::move(probe);
        } else {
            out.value = ExtRat(cs[k]);
            out.attained = true;
            out.witness = std::move(feas);
        }
        return out;
    }
    // Feasibility is constant above the last breakpoint; if it holds there,
    // the infimum is the largest critical value, not attained.
    auto above = matching_feasible(M, N, Rat(cs.back() + 1));
    if (above) return BottleneckResult{ExtRat(cs.back()), false, std::move(above)};
    return BottleneckResult{ExtRat::pos_inf(), false, std::nullopt};
}

}  // namespace stab
