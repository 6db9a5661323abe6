#include "stab/examples.hpp"

namespace stab {

namespace {

// open-by-open rectangle (a0,b0) x (a1,b1) ... from plain rationals
Interval open_rect(std::vector<Rat> lo, std::vector<Rat> hi) {
    DecoratedPoint mn, mx;
    for (auto& x : lo) mn.push_back(dplus(std::move(x)));
    for (auto& x : hi) mx.push_back(dminus(std::move(x)));
    return make_rectangle(std::move(mn), std::move(mx));
}

}  // namespace

ExampleInstance example_square() {
    ExampleInstance e;
    e.name = "square";
    e.M = make_barcode(Kind::rectangle, 2,
                       {{"I1", open_rect({-3, -1}, {1, 3})},
                        {"I2", open_rect({-1, -3}, {3, 1})},
                        {"I3", open_rect({-1, -1}, {1, 1})}});
    e.N = make_barcode(Kind::rectangle, 2, {{"J", open_rect({-2, -2}, {2, 2})}});
    e.witness.delta = 1;
    e.witness.f = {{{"I1", "J"}, 1}, {{"I2", "J"}, 1}, {{"I3", "J"}, 1}};
    e.witness.g = {{{"J", "I1"}, 1}, {{"J", "I2"}, 1}, {{"J", "I3"}, -1}};
    e.expected_bottleneck = 2;
    RankCertificate c;
    c.eps = Rat(9, 10);
    c.a = {Rat(-19, 10), Rat(-19, 10)};
    c.b = {Rat(19, 10), Rat(19, 10)};
    c.second_plays_n = true;
    e.certificate = c;
    return e;
}

ExampleInstance example_threebythree() {
    ExampleInstance e;
    e.name = "threebythree";
    e.M = make_barcode(Kind::rectangle, 2,
                       {{"I1", open_rect({0, 1}, {10, 11})},
                        {"I2", open_rect({0, -1}, {12, 11})},
                        {"I3", open_rect({2, 1}, {10, 9})}});
    e.N = make_barcode(Kind::rectangle, 2,
                       {{"J1", open_rect({1, 0}, {11, 10})},
                        {"J2", open_rect({1, 0}, {9, 12})},
                        {"J3", open_rect({-1, 2}, {11, 10})}});
    e.witness.delta = 1;
    // w(I_i, J_j) in row i, column j; w(J_j, I_i) in row j, column i
    e.witness.f = {{{"I1", "J1"}, 1}, {{"I1", "J2"}, 1}, {{"I1", "J3"}, 1},
                   {{"I2", "J1"}, 1}, {{"I2", "J2"}, 1},
                   {{"I3", "J1"}, 1}, {{"I3", "J3"}, 1}};
    e.witness.g = {{{"J1", "I1"}, -1}, {{"J1", "I2"}, 1},  {{"J1", "I3"}, 1},
                   {{"J2", "I1"}, 1},  {{"J2", "I3"}, -1},
                   {{"J3", "I1"}, 1},  {{"J3", "I2"}, -1}};
    e.expected_bottleneck = 3;
    // d_I >= 1 holds but rank invariants cannot witness it; no certificate.
    return e;
}

ExampleInstance example_free4d() {
    ExampleInstance e;
    e.name = "free4d";
    auto fr = [](std::vector<Rat> p) { return Interval(make_free(std::move(p))); };
    e.M = make_barcode(Kind::free_interval, 4,
                       {{"I1", fr({0, 1, 10, 11})},
                        {"I2", fr({0, -1, 12, 11})},
                        {"I3", fr({2, 1, 10, 9})}});
    e.N = make_barcode(Kind::free_interval, 4,
                       {{"J1", fr({1, 0, 11, 10})},
                        {"J2", fr({1, 0, 9, 12})},
                        {"J3", fr({-1, 2, 11, 10})}});
    e.witness.delta = 1;
    e.witness.f = {{{"I1", "J1"}, 1}, {{"I1", "J2"}, 1}, {{"I1", "J3"}, 1},
                   {{"I2", "J1"}, 1}, {{"I2", "J2"}, 1},
                   {{"I3", "J1"}, 1}, {{"I3", "J3"}, 1}};
    e.witness.g = {{{"J1", "I1"}, -1}, {{"J1", "I2"}, 1},  {{"J1", "I3"}, 1},
                   {{"J2", "I1"}, 1},  {{"J2", "I3"}, -1},
                   {{"J3", "I1"}, 1},  {{"J3", "I2"}, -1}};
    e.expected_bottleneck = 3;
    RankCertificate c;
    c.eps = Rat(9, 10);
    c.a = {1, 0, 11, 10};
    c.b = {3, 2, 13, 12};
    c.second_plays_n = true;
    e.certificate = c;
    return e;
}

ExampleInstance get_example(const std::string& name) {
    if (name == "square") return example_square();
    if (name == "threebythree") return example_threebythree();
    if (name == "free4d") return example_free4d();
    throw std::invalid_argument("unknown example '" + name + "'");
}

std::vector<std::string> example_names() { return {"square", "threebythree", "free4d"}; }

}  // namespace stab
