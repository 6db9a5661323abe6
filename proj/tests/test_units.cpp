#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stab/fuzz.hpp"
#include "stab/io.hpp"

using namespace stab;

namespace {

Interval rect(std::vector<Rat> lo, std::vector<Rat> hi, bool closed = false) {
    DecoratedPoint mn, mx;
    for (auto& x : lo) mn.push_back(closed ? dminus(x) : dplus(x));
    for (auto& x : hi) mx.push_back(closed ? dplus(x) : dminus(x));
    return make_rectangle(std::move(mn), std::move(mx));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("rational strings") {
    CHECK(to_string(parse_rational("3/4")) == "3/4");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(parse_extended("inf").is_pos_inf());
    CHECK(parse_extended("-inf").is_neg_inf());
    CHECK(parse_extended("1/2") == ExtRat(Rat(1, 2)));
}

TEST_CASE("extended rationals absorb infinities") {
    ExtRat inf = ExtRat::pos_inf();
    CHECK(inf + Rat(5) == inf);
    CHECK((-inf) < ExtRat(0));
    CHECK_THROWS_AS(inf + ExtRat::neg_inf(), bad_operation);
    CHECK(abs_gap(inf, inf) == ExtRat(0));
    CHECK(abs_gap(inf, ExtRat(3)).is_pos_inf());
    CHECK(abs_gap(ExtRat(1), ExtRat(Rat(5, 2))) == ExtRat(Rat(3, 2)));
}

TEST_CASE("decorated order is total and strict between decorations") {
    DecoratedValue a = dminus(1), b = dplus(1), c = dminus(2);
    CHECK(a < b);
    CHECK(b < c);
    CHECK(compare(a, a) == 0);
    CHECK_THROWS_AS(dv(ExtRat::neg_inf(), Dec::minus), std::invalid_argument);
    CHECK_THROWS_AS(dv(ExtRat::pos_inf(), Dec::plus), std::invalid_argument);
    CHECK(a.add(Rat(1, 2)) == dminus(Rat(3, 2)));
}

TEST_CASE("interval constructors enforce invariants") {
    CHECK_THROWS_AS(make_rectangle({dplus(1)}, {dminus(1)}), std::invalid_argument);
    CHECK_NOTHROW(make_rectangle({dminus(1)}, {dplus(1)}));  // degenerate [1,1]
    CHECK_THROWS_AS(make_triangle(ExtRat(1), ExtRat(-1)), std::invalid_argument);
    CHECK_THROWS_AS(make_free({}), std::invalid_argument);
    CHECK_THROWS_AS(
        make_barcode(Kind::rectangle, 2,
                     {{"a", rect({0, 0}, {1, 1})}, {"a", rect({0, 0}, {2, 2})}}),
        std::invalid_argument);
}

TEST_CASE("shift composes additively") {
    Fuzzer fz(7);
    for (int t = 0; t < 50; ++t) {
        Kind k = t % 3 == 0 ? Kind::rectangle : t % 3 == 1 ? Kind::free_interval : Kind::triangle;
        Interval I = fz.random_interval(k, 2);
        Rat a = fz.random_eps(), b = fz.random_eps();
        Interval lhs = shift_interval(shift_interval(I, a), b);
        Interval rhs = shift_interval(I, Rat(a + b));
        Grid g = build_grid({I}, {a, b, Rat(a + b)});
        for (const Rat& x : g.axes[0])
            for (const Rat& y : g.axes[1 % g.axes.size()])
                CHECK(contains(lhs, {x, y}) == contains(rhs, {x, y}));
    }
}

TEST_CASE("significance thresholds") {
    DecoratedValue t = significance_threshold(rect({0, 0}, {1, 3}, true));
    CHECK(t == dplus(1));
    CHECK(is_significant(rect({0, 0}, {1, 3}, true), 1));
    CHECK(!is_significant(rect({0, 0}, {1, 3}, true), Rat(3, 2)));
    CHECK(significance_threshold(rect({0, 0}, {1, 3})) == dminus(1));
    CHECK(!is_significant(rect({0, 0}, {1, 3}), 1));
    CHECK(significance_threshold(make_free({1, 2})).value.is_pos_inf());
    CHECK(significance_threshold(make_triangle(ExtRat(1), ExtRat(2))) == dminus(Rat(3, 2)));
    CHECK(triviality_infimum(make_triangle(ExtRat(1), ExtRat(2))) == ExtRat(Rat(3, 4)));
}

TEST_CASE("alpha preorder is total and transitive") {
    Fuzzer fz(11);
    for (int t = 0; t < 100; ++t) {
        Interval a = fz.random_interval(Kind::rectangle, 2);
        Interval b = fz.random_interval(Kind::rectangle, 2);
        Interval c = fz.random_interval(Kind::rectangle, 2);
        CHECK((alpha_leq(a, b) || alpha_leq(b, a)));
        if (alpha_leq(a, b) && alpha_leq(b, c)) CHECK(alpha_leq(a, c));
    }
}

TEST_CASE("intersection matches pointwise membership") {
    Fuzzer fz(13);
    for (int t = 0; t < 60; ++t) {
        Kind k = t % 3 == 0 ? Kind::rectangle : t % 3 == 1 ? Kind::free_interval : Kind::triangle;
        Interval I = fz.random_interval(k, 2);
        Interval J = fz.random_interval(k, 2);
        auto X = intersect(I, J);
        Grid g = build_grid({I, J}, {});
        bool seen = false;
        for (const Rat& x : g.axes[0])
            for (const Rat& y : g.axes[1 % g.axes.size()]) {
                bool both = contains(I, {x, y}) && contains(J, {x, y});
                seen = seen || both;
                CHECK(both == (X && contains(*X, {x, y})));
            }
        if (seen) CHECK(X.has_value());
    }
}

TEST_CASE("hom closed form on fixed instances") {
    Interval A = rect({0, 0}, {1, 1}, true);
    Interval B = make_rectangle({dminus(0), dminus(0)},
                                {dv(ExtRat::pos_inf(), Dec::minus), dv(ExtRat::pos_inf(), Dec::minus)});
    CHECK(hom_nonzero(B, A));   // unbounded into bounded
    CHECK(!hom_nonzero(A, B));  // not the other way
    CHECK(hom_nonzero(A, A));
    CHECK(!hom_nonzero(rect({0, 0}, {1, 1}), rect({5, 5}, {6, 6})));  // disjoint
    CHECK(hom_nonzero(make_free({2, 3}), make_free({1, 1})));
    CHECK(!hom_nonzero(make_free({0, 3}), make_free({1, 1})));
    CHECK(hom_nonzero(make_triangle(ExtRat(2), ExtRat(2)), make_triangle(ExtRat(1), ExtRat(2))));
    CHECK_THROWS_AS(hom_nonzero(A, make_free({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(composite_nonzero(A, B, B), std::invalid_argument);
    CHECK_THROWS_AS(path_scalar(1, 1, A, B, B), std::invalid_argument);
    CHECK(path_scalar(Rat(2), Rat(3), B, A, A) == Rat(6));
}

TEST_CASE("pair distance basics") {
    Interval A = rect({0, 0}, {2, 2}, true);
    PairDistance self = pair_distance(A, A);
    CHECK(self.value == ExtRat(0));
    CHECK(self.attained);
    PairDistance d = pair_distance(A, rect({1, 1}, {3, 3}, true));
    CHECK(d.value == ExtRat(1));
    CHECK(d.attained);
    // closed vs open unit square: infimum 0, never attained
    PairDistance e = pair_distance(rect({0, 0}, {1, 1}, true), rect({0, 0}, {1, 1}));
    CHECK(e.value == ExtRat(0));
    CHECK(!e.attained);
    PairDistance f = pair_distance(make_free({0, 0}), make_free({3, -1}));
    CHECK(f.value == ExtRat(3));
    CHECK(f.attained);
}

TEST_CASE("square example numbers") {
    ExampleInstance e = example_square();
    CHECK(verify_witness(e.M, e.N, e.witness).valid);
    BottleneckResult b = bottleneck(e.M, e.N);
    CHECK(b.value == ExtRat(2));
    CHECK(b.attained);
    CHECK(check_not_interleaved(e.M, e.N, *e.certificate));
    // the certificate stops working at the interleaving distance
    RankCertificate at_one = *e.certificate;
    at_one.eps = 1;
    at_one.a = {-2, -2};
    at_one.b = {2, 2};
    CHECK(!check_not_interleaved(e.M, e.N, at_one));
    // tampering with one weight breaks the witness
    WeightMatrix W = e.witness;
    W.g[{"J", "I3"}] = 1;
    CHECK(!verify_witness(e.M, e.N, W).valid);
}

TEST_CASE("threebythree example and lemma replay") {
    ExampleInstance e = example_threebythree();
    CHECK(verify_witness(e.M, e.N, e.witness).valid);
    CHECK(bottleneck(e.M, e.N).value == ExtRat(3));
    LemmaMatrix L = lemma_matrix_replay(e.M, e.N, e.witness, {"I1", "I2", "I3"}, 3);
    CHECK(L.pass);
    CHECK(L.order.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(L.matrix[i][i] == Rat(1));
        for (std::size_t j = 0; j < i; ++j) CHECK(L.matrix[i][j] == Rat(0));
    }
}

TEST_CASE("free4d example numbers") {
    ExampleInstance e = example_free4d();
    CHECK(verify_witness(e.M, e.N, e.witness).valid);
    BottleneckResult b = bottleneck(e.M, e.N);
    CHECK(b.value == ExtRat(3));
    CHECK(b.attained);
    CHECK(check_not_interleaved(e.M, e.N, *e.certificate));
}

TEST_CASE("cross-type entries can be dropped from a valid witness") {
    Interval A = rect({0, 0}, {1, 1}, true);
    Interval B = make_rectangle({dminus(0), dminus(0)},
                                {dv(ExtRat::pos_inf(), Dec::minus), dv(ExtRat::pos_inf(), Dec::minus)});
    Barcode M = make_barcode(Kind::rectangle, 2, {{"A", A}, {"B", B}});
    Barcode N = make_barcode(Kind::rectangle, 2, {{"A2", A}, {"B2", B}});
    WeightMatrix W;
    W.delta = 0;
    W.f = {{{"A", "A2"}, 1}, {{"B", "B2"}, 1}, {{"B", "A2"}, 1}};
    W.g = {{{"A2", "A"}, 1}, {{"B2", "B"}, 1}, {{"B2", "A"}, -1}};
    CHECK(verify_witness(M, N, W).valid);
    WeightMatrix R = restrict_witness_same_type(W, M, N);
    CHECK(R.f.size() == 2);
    CHECK(R.g.size() == 2);
    CHECK(verify_witness(M, N, R).valid);
}

TEST_CASE("witness from matching and mu sets") {
    ExampleInstance e = example_square();
    Rat eps = e.expected_bottleneck;
    auto feas = matching_feasible(e.M, e.N, eps);
    REQUIRE(feas.has_value());
    WeightMatrix W = witness_from_matching(e.M, e.N, feas->pairs, eps);
    CHECK(verify_witness(e.M, e.N, W).valid);
    CHECK_THROWS_AS(witness_from_matching(e.M, e.N, {{"I1", "J"}, {"I2", "J"}}, eps),
                    std::invalid_argument);
    auto mu = mu_set(e.M.at("I3"), e.N, 1);
    CHECK(mu == std::vector<std::string>{"J"});
}

TEST_CASE("rank invariant counts containing intervals") {
    ExampleInstance e = example_square();
    CHECK(rank_invariant(e.M, {Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}) == 3);
    CHECK(rank_invariant(e.M, {Rat(-2), Rat(0)}, {Rat(0), Rat(2)}) == 1);
    CHECK(rank_invariant(e.N, {Rat(0), Rat(0)}, {Rat(3), Rat(3)}) == 0);
    CHECK_THROWS_AS(rank_invariant(e.M, {Rat(1), Rat(1)}, {Rat(0), Rat(0)}),
                    std::invalid_argument);
}

TEST_CASE("interleaving graph structure on the square instance") {
    ExampleInstance e = example_square();
    InterleavingGraph G = build_graph(e.M, e.N, 1);
    CHECK(G.left.size() == 3);
    CHECK(G.right.size() == 1);
    // at eps = 1, I3 (side 2) is exactly 2eps-trivial; I1, I2 stay required
    // and J can only pair with one of them
    int edges = 0;
    for (const auto& row : G.adj) edges += static_cast<int>(row.size());
    CHECK(std::count(G.required_left.begin(), G.required_left.end(), 1) == 2);
    CHECK(!matching_feasible(e.M, e.N, 1).has_value());
    CHECK(matching_feasible(e.M, e.N, 2).has_value());
    CHECK(edges >= 1);
}

TEST_CASE("barcode document round trip") {
    for (const auto& name : example_names()) {
        ExampleInstance e = get_example(name);
        std::string doc = emit_barcode(e.M);
        CHECK(emit_barcode(parse_barcode(doc)) == doc);
        std::string wdoc = emit_witness(e.witness);
        CHECK(emit_witness(parse_witness(wdoc)) == wdoc);
    }
    Barcode tri = make_barcode(
        Kind::triangle, 2,
        {{"t", make_triangle(ExtRat(Rat(1, 3)), ExtRat::pos_inf())}});
    CHECK(emit_barcode(parse_barcode(emit_barcode(tri))) == emit_barcode(tri));
    CHECK_THROWS_AS(parse_barcode("{"), ParseError);
    CHECK_THROWS_AS(parse_barcode(R"({"kind":"disk","dim":2,"intervals":[]})"), ParseError);
    CHECK_THROWS_AS(parse_witness(R"({"delta":"-1","f":[],"g":[]})"), ParseError);
}

TEST_CASE("bundled documents are bit-exact") {
    std::string dir = DATA_DIR;
    for (const auto& name : example_names()) {
        std::string doc = slurp(dir + "/" + name + "_m.json");
        CHECK(emit_barcode(parse_barcode(doc)) == doc);
        std::string ndoc = slurp(dir + "/" + name + "_n.json");
        CHECK(emit_barcode(parse_barcode(ndoc)) == ndoc);
        std::string wdoc = slurp(dir + "/" + name + "_witness.json");
        CHECK(emit_witness(parse_witness(wdoc)) == wdoc);
    }
}

TEST_CASE("svg rendering has one shape per interval") {
    ExampleInstance e = example_square();
    std::string svg = render_svg(e.M);
    CHECK(svg.find("<svg") != std::string::npos);
    std::size_t shapes = 0;
    for (std::size_t p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1))
        ++shapes;
    CHECK(shapes == e.M.intervals.size());
    Barcode tri = make_barcode(Kind::triangle, 2,
                               {{"t", make_triangle(ExtRat(2), ExtRat(3))}});
    CHECK(render_svg(tri).find("<polygon") != std::string::npos);
}

TEST_CASE("fuzzer is deterministic per seed") {
    Fuzzer a(42), b(42);
    Barcode x = a.random_barcode(Kind::rectangle, 2, 3);
    Barcode y = b.random_barcode(Kind::rectangle, 2, 3);
    CHECK(emit_barcode(x) == emit_barcode(y));
}

TEST_CASE("oracle spot agreement on tiny instances") {
    Interval A = rect({0, 0}, {2, 2}, true);
    Interval B = rect({1, 1}, {3, 3}, true);
    Grid g = build_grid({A, B}, {Rat(1), Rat(2)});
    CHECK(oracle_hom_nonzero(A, B, g) == hom_nonzero(A, B));
    CHECK(oracle_hom_nonzero(B, A, g) == hom_nonzero(B, A));
    CHECK(oracle_pair_interleaved(A, B, 1, g));
    CHECK(oracle_pair_interleaved(A, B, 1, g) == pair_interleaved(A, B, 1));
    Grid h = build_grid({A, B}, {Rat(1, 2), Rat(1)});
    CHECK(oracle_pair_interleaved(A, B, Rat(1, 2), h) == pair_interleaved(A, B, Rat(1, 2)));
    Barcode M = make_barcode(Kind::rectangle, 2, {{"A", A}});
    Barcode N = make_barcode(Kind::rectangle, 2, {{"B", B}});
    CHECK(oracle_bottleneck(M, N) == bottleneck(M, N).value);
}

TEST_CASE("oversize oracle instances are rejected") {
    Fuzzer fz(3);
    Barcode M = fz.random_barcode(Kind::rectangle, 2, 7);
    Barcode N = fz.random_barcode(Kind::rectangle, 2, 7);
    CHECK_THROWS_AS(oracle_bottleneck(M, N), std::length_error);
}
