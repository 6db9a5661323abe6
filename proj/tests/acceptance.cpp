// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <iostream>

#include "stab/fuzz.hpp"

using namespace stab;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok) {
    std::cout << "criterion " << idx << " (" << what << "): " << (ok ? "PASS" : "FAIL")
              << std::endl;
    if (!ok) ++failures;
}

bool example_ok(const ExampleInstance& e) {
    if (!verify_witness(e.M, e.N, e.witness).valid) return false;
    BottleneckResult b = bottleneck(e.M, e.N);
    if (b.value != ExtRat(e.expected_bottleneck) || !b.attained) return false;
    if (e.certificate && !check_not_interleaved(e.M, e.N, *e.certificate)) return false;
    return true;
}

bool suites_clean(const std::vector<SuiteResult>& rs) {
    bool ok = true;
    for (const auto& r : rs) {
        if (r.failures > 0 || r.conditioned == 0) {
            ok = false;
            std::cout << "  " << r.name << ": " << r.failures << " failures, "
                      << r.conditioned << " conditioned of " << r.trials << std::endl;
            for (const auto& n : r.notes) std::cout << "    " << n << std::endl;
        }
    }
    return ok;
}

}  // namespace

int main() {
    report(1, "square example", example_ok(example_square()));

    {
        ExampleInstance e = example_threebythree();
        bool ok = example_ok(e);
        LemmaMatrix L = lemma_matrix_replay(e.M, e.N, e.witness, {"I1", "I2", "I3"}, 3);
        report(2, "threebythree example + lemma replay", ok && L.pass);
    }

    report(3, "free4d example", example_ok(example_free4d()));

    {
        std::vector<SuiteResult> rs;
        for (int dim : {1, 2, 3})
            rs.push_back(suite_oracle_agreement(100 + dim, Kind::rectangle, dim, 200));
        for (int dim : {2, 3, 4})
            rs.push_back(suite_oracle_agreement(110 + dim, Kind::free_interval, dim, 200));
        rs.push_back(suite_oracle_agreement(120, Kind::triangle, 2, 200));
        report(4, "oracle equivalence", suites_clean(rs));
    }

    {
        std::vector<SuiteResult> rs;
        rs.push_back(suite_bottleneck_oracle(130, Kind::rectangle, 2, 40));
        rs.push_back(suite_bottleneck_oracle(131, Kind::free_interval, 3, 30));
        rs.push_back(suite_bottleneck_oracle(132, Kind::triangle, 2, 30));
        report(5, "bottleneck exactness", suites_clean(rs));
    }

    {
        std::vector<SuiteResult> rs;
        rs.push_back(suite_type_splitting(140, 2, 1000));
        rs.push_back(suite_rect_closeness(141, 2, 1000));
        rs.push_back(suite_rect_composite(142, 2, 1000));
        rs.push_back(suite_free_closeness(143, 3, 1000));
        rs.push_back(suite_triangle_closeness(144, 1000));
        rs.push_back(suite_triangle_composite(145, 1000));
        report(6, "lemma property suites", suites_clean(rs));
    }

    report(7, "matching machinery", suites_clean({suite_matching(150, 500)}));
    report(8, "n=1 stability", suites_clean({suite_stability_1d(151, 200)}));

    {
        Interval closed = make_rectangle({dminus(0), dminus(0)}, {dplus(1), dplus(1)});
        Interval open = make_rectangle({dplus(0), dplus(0)}, {dminus(1), dminus(1)});
        PairDistance d = pair_distance(closed, open);
        bool ok = d.value == ExtRat(0) && !d.attained;
        Barcode M = make_barcode(Kind::rectangle, 2, {{"I", closed}});
        Barcode N = make_barcode(Kind::rectangle, 2, {{"J", open}});
        BottleneckResult b = bottleneck(M, N);
        ok = ok && b.value == ExtRat(0) && !b.attained;
        report(9, "non-attained infimum", ok);
    }

    return failures == 0 ? 0 : 1;
}
