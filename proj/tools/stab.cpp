// Command-line front end: pairwise distances, bottleneck, witness
// verification, rank certificates, lemma replay, bundled examples, fuzzing,
// and SVG rendering.
//
// Exit codes: 0 success/verified, 1 property falsified or invalid witness,
// 2 usage error, 3 parse error, 4 size limit exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stab/fuzz.hpp"
#include "stab/io.hpp"

using namespace stab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Barcode load_barcode(const std::string& path) { return parse_barcode(slurp(path)); }

WeightMatrix load_witness(const std::string& path) { return parse_witness(slurp(path)); }

std::vector<Rat> parse_point(const std::string& s) {
    std::vector<Rat> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(parse_rational(tok));
    if (p.empty()) throw ParseError("empty point '" + s + "'");
    return p;
}

int print_verdict(const WitnessVerdict& v) {
    if (v.valid) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid (" << v.violations.size() << " violated pairs)\n";
    for (const auto& [x, y, side] : v.violations)
        std::cout << "  " << side << ": " << x << " -> " << y << "\n";
    return 1;
}

int run_examples(const std::string& name) {
    ExampleInstance e = get_example(name);
    bool ok = true;
    WitnessVerdict v = verify_witness(e.M, e.N, e.witness);
    std::cout << "witness at delta " << to_string(e.witness.delta) << ": "
              << (v.valid ? "valid" : "INVALID") << "\n";
    ok = ok && v.valid;
    BottleneckResult b = bottleneck(e.M, e.N);
    std::cout << "bottleneck: " << b.value.str() << (b.attained ? " (attained)" : " (not attained)")
              << "\n";
    ok = ok && b.value == ExtRat(e.expected_bottleneck) && b.attained;
    if (e.certificate) {
        bool c = check_not_interleaved(e.M, e.N, *e.certificate);
        std::cout << "not " << to_string(e.certificate->eps) << "-interleaved: "
                  << (c ? "certified" : "NOT certified") << "\n";
        ok = ok && c;
    }
    return ok ? 0 : 1;
}

int run_fuzz(Kind kind, int dim, int count, std::uint64_t seed, bool all) {
    std::vector<SuiteResult> results;
    if (all) {
        results = run_all_suites(seed, std::max(1, count / 200));
    } else {
        results.push_back(suite_oracle_agreement(seed, kind, dim, count));
        results.push_back(suite_bottleneck_oracle(seed + 1, kind, dim, std::max(1, count / 4)));
    }
    int failures = 0;
    for (const auto& r : results) {
        std::cout << r.name << ": " << r.trials << " trials, " << r.conditioned
                  << " conditioned, " << r.failures << " failures\n";
        for (const auto& n : r.notes) std::cout << "  " << n << "\n";
        failures += r.failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact interleaving and bottleneck computations for "
                 "rectangle-, free-, and triangle-decomposable modules"};
    app.require_subcommand(1);

    std::string file_m, file_n, file_w, id_a, id_b, out_path, example_name, subset_csv,
        point_a, point_b;
    std::string eps_str = "0", factor_str = "1";
    bool oracle_check = false, swap_roles = false, fuzz_all = false;
    std::string kind_str = "rectangle";
    int dim = 2, count = 200;
    std::uint64_t seed = 1;

    auto* pd = app.add_subcommand("pairdist", "infimum interleaving distance of two intervals");
    pd->add_option("M", file_m, "barcode document")->required();
    pd->add_option("idM", id_a, "interval id in M")->required();
    pd->add_option("N", file_n, "barcode document")->required();
    pd->add_option("idN", id_b, "interval id in N")->required();

    auto* bn = app.add_subcommand("bottleneck", "exact bottleneck distance");
    bn->add_option("M", file_m)->required();
    bn->add_option("N", file_n)->required();

    auto* vf = app.add_subcommand("verify", "verify an interleaving witness");
    vf->add_option("M", file_m)->required();
    vf->add_option("N", file_n)->required();
    vf->add_option("W", file_w, "witness document")->required();
    vf->add_flag("--oracle", oracle_check, "cross-check against the grid oracle");

    auto* cf = app.add_subcommand("certify", "rank-invariant non-interleaving certificate");
    cf->add_option("M", file_m)->required();
    cf->add_option("N", file_n)->required();
    cf->add_option("--eps", eps_str, "certified eps")->required();
    cf->add_option("--a", point_a, "comma-separated comparison point a")->required();
    cf->add_option("--b", point_b, "comma-separated comparison point b")->required();
    cf->add_flag("--swap", swap_roles, "let the first barcode play the rank-excess role");

    auto* rl = app.add_subcommand("replay-lemma", "counting-lemma matrix replay");
    rl->add_option("M", file_m)->required();
    rl->add_option("N", file_n)->required();
    rl->add_option("W", file_w)->required();
    rl->add_option("--subset", subset_csv, "comma-separated ids from M")->required();
    rl->add_option("--factor", factor_str, "shift factor (in units of delta)")->required();

    auto* ex = app.add_subcommand("examples", "bundled instances with published numbers");
    ex->add_option("name", example_name)->required()->check(CLI::IsMember(example_names()));

    auto* dp = app.add_subcommand("dump", "write an example's documents to a directory");
    dp->add_option("name", example_name)->required()->check(CLI::IsMember(example_names()));
    dp->add_option("dir", out_path, "output directory")->required();

    auto* fz = app.add_subcommand("fuzz", "randomized property suites");
    fz->add_option("--kind", kind_str)->check(CLI::IsMember({"rectangle", "free", "triangle"}));
    fz->add_option("--dim", dim);
    fz->add_option("--count", count);
    fz->add_option("--seed", seed);
    fz->add_flag("--all", fuzz_all, "run every suite (count scales the minimums)");

    auto* rd = app.add_subcommand("render", "SVG rendering of a 2-d barcode");
    rd->add_option("M", file_m)->required();
    rd->add_option("--svg", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pd->parsed()) {
            Barcode M = load_barcode(file_m), N = load_barcode(file_n);
            PairDistance d = pair_distance(M.at(id_a), N.at(id_b));
            std::cout << d.value.str() << (d.attained ? " (attained)" : " (not attained)") << "\n";
            return 0;
        }
        if (bn->parsed()) {
            Barcode M = load_barcode(file_m), N = load_barcode(file_n);
            BottleneckResult b = bottleneck(M, N);
            std::cout << b.value.str() << (b.attained ? " (attained)" : " (not attained)") << "\n";
            if (b.witness) {
                for (const auto& [i, j] : b.witness->pairs)
                    std::cout << "  " << i << " -- " << j << "\n";
                for (const auto& [id, thr] : b.witness->unmatched)
                    std::cout << "  " << id << " unmatched (threshold " << thr.str() << ")\n";
            }
            return 0;
        }
        if (vf->parsed()) {
            Barcode M = load_barcode(file_m), N = load_barcode(file_n);
            WeightMatrix W = load_witness(file_w);
            WitnessVerdict v = verify_witness(M, N, W);
            if (oracle_check) {
                Grid g = build_grid(
                    [&] {
                        std::vector<Interval> all;
                        for (const auto& [id, I] : M.intervals) all.push_back(I);
                        for (const auto& [id, I] : N.intervals) all.push_back(I);
                        return all;
                    }(),
                    {W.delta, 2 * W.delta});
                WitnessVerdict o = oracle_verify_witness(M, N, W, g);
                if (o.valid != v.valid) {
                    std::cout << "oracle disagreement\n";
                    return 1;
                }
                std::cout << "oracle agrees\n";
            }
            return print_verdict(v);
        }
        if (cf->parsed()) {
            Barcode M = load_barcode(file_m), N = load_barcode(file_n);
            RankCertificate cert;
            cert.eps = parse_rational(eps_str);
            cert.a = parse_point(point_a);
            cert.b = parse_point(point_b);
            cert.second_plays_n = !swap_roles;
            bool ok = check_not_interleaved(M, N, cert);
            std::cout << (ok ? "certified: not " + to_string(cert.eps) + "-interleaved"
                             : "certificate does not apply")
                      << "\n";
            return ok ? 0 : 1;
        }
        if (rl->parsed()) {
            Barcode M = load_barcode(file_m), N = load_barcode(file_n);
            WeightMatrix W = load_witness(file_w);
            std::vector<std::string> A;
            std::stringstream ss(subset_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) A.push_back(tok);
            LemmaMatrix L = lemma_matrix_replay(M, N, W, A, parse_rational(factor_str));
            for (std::size_t i = 0; i < L.order.size(); ++i) {
                std::cout << L.order[i] << ":";
                for (const auto& x : L.matrix[i]) std::cout << " " << to_string(x);
                std::cout << "\n";
            }
            std::cout << (L.pass ? "pass" : "fail") << "\n";
            return L.pass ? 0 : 1;
        }
        if (ex->parsed()) return run_examples(example_name);
        if (dp->parsed()) {
            ExampleInstance e = get_example(example_name);
            auto put = [&](const std::string& leaf, const std::string& text) {
                std::string path = out_path + "/" + e.name + "_" + leaf;
                std::ofstream out(path);
                if (!out) throw std::runtime_error("cannot write '" + path + "'");
                out << text;
            };
            put("m.json", emit_barcode(e.M));
            put("n.json", emit_barcode(e.N));
            put("witness.json", emit_witness(e.witness));
            return 0;
        }
        if (fz->parsed()) {
            Kind k = kind_str == "free" ? Kind::free_interval
                                        : kind_str == "triangle" ? Kind::triangle
                                                                 : Kind::rectangle;
            return run_fuzz(k, dim, count, seed, fuzz_all);
        }
        if (rd->parsed()) {
            Barcode M = load_barcode(file_m);
            std::string svg = render_svg(M);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
                out << svg;
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::length_error& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
