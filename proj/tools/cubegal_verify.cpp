// cubegal-verify: command-line front end for the cube group / Galois checks.
//
// Exit status: 0 when no check failed, 1 when some check failed, 2 on
// usage or input errors.

#include "cubegal/cube.hpp"
#include "cubegal/galois.hpp"
#include "cubegal/poly_q.hpp"
#include "cubegal/report.hpp"
#include "cubegal/theorems.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace cubegal;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string report = "text";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = BuildOptions{}.seed;
    std::string out;
    bool timings = false;
};

StickerModel model_for(int cube)
{
    switch (cube) {
    case 3: return r3_model();
    case 4: return r4_model();
    case 5: return r5_model();
    }
    throw UsageError("--cube must be 3, 4 or 5");
}

PolyQ read_poly(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return poly_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int emit_checks(const Globals& g, const std::vector<CheckReport>& checks, std::ostream& os)
{
    if (g.report == "json")
        os << report_json(checks).dump(2) << "\n";
    else
        write_text_report(os, checks, g.timings);
    return summarize(checks).fail == 0 ? 0 : 1;
}

std::string histogram_text(const EvidenceProfile& prof)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, n] : prof.histogram()) {
        os << (first ? "" : " ") << t.str() << ":" << n;
        first = false;
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checks the cube group orders, Galois polynomial discriminants and Frobenius evidence"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--report", g.report, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", g.jobs, "worker threads for prime scans")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for random group elements");
    app.add_option("--out", g.out, "write output to FILE instead of stdout");
    app.add_flag("--timings", g.timings, "record wall time per check");

    int cube = 0;
    auto* order = app.add_subcommand("order", "order of a cube group from its sticker generators");
    order->add_option("--cube", cube, "cube size")->required()->check(CLI::IsMember({3, 4, 5}));

    std::string format = "cycles";
    auto* gens = app.add_subcommand("gens", "print the sticker generators");
    gens->add_option("--cube", cube, "cube size")->required()->check(CLI::IsMember({3, 4, 5}));
    gens->add_option("--format", format, "output format")->check(CLI::IsMember({"cycles", "json"}));

    std::string poly_path, class_vs;
    auto* disc = app.add_subcommand("disc", "discriminant of a polynomial file");
    disc->add_option("--poly", poly_path, "polynomial JSON file")->required();
    disc->add_option("--square-class-vs", class_vs, "compare the square class with this integer");

    std::size_t primes = 0;
    std::string certify;
    auto* frob = app.add_subcommand("frobenius", "Frobenius cycle types at good primes");
    frob->add_option("--poly", poly_path, "polynomial JSON file")->required();
    frob->add_option("--primes", primes, "number of good primes")->required()->check(CLI::PositiveNumber);
    frob->add_option("--certify", certify, "certificate to attempt")
        ->check(CLI::IsMember({"symmetric", "wreath-3-8", "wreath-2-12"}));

    std::string theorem;
    SuiteOptions suite_opts;
    auto* verify = app.add_subcommand("verify", "run a theorem's check suite");
    verify->add_option("--theorem", theorem, "theorem")
        ->required()
        ->check(CLI::IsMember({"rubik", "revenge", "professor"}));
    verify->add_option("--scan-primes", suite_opts.scan_primes, "good primes for type containment");
    verify->add_option("--linkage-primes", suite_opts.linkage_primes, "good primes for parity linkage");
    verify->add_option("--triple-linkage-primes", suite_opts.triple_linkage_primes,
                       "good primes for triple parity linkage");
    verify->add_option("--certify-primes", suite_opts.certify_primes, "prime budget for certification");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) {
            std::cerr << "error: cannot write " << g.out << "\n";
            return 2;
        }
    }
    std::ostream& os = g.out.empty() ? std::cout : file;

    try {
        if (*order) {
            BuildOptions bo;
            bo.seed = g.seed;
            os << to_string(build_group(model_for(cube), bo).order()) << "\n";
            return 0;
        }
        if (*gens) {
            const StickerModel m = model_for(cube);
            if (format == "json") {
                nlohmann::ordered_json j{{"cube", cube}, {"degree", m.degree()}};
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& ng : m.named_generators())
                    arr.push_back({{"name", ng.name}, {"cycles", print_cycles(ng.perm)}});
                j["generators"] = arr;
                os << j.dump(2) << "\n";
            } else {
                for (const auto& ng : m.named_generators())
                    os << ng.name << " = " << print_cycles(ng.perm) << "\n";
            }
            return 0;
        }
        if (*disc) {
            const PolyQ f = read_poly(poly_path);
            if (f.degree() < 1)
                throw UsageError("discriminant needs degree >= 1");
            const BigRational d = discriminant(f);
            if (class_vs.empty()) {
                os << d.str() << "\n";
                return 0;
            }
            BigInt other;
            try {
                other = parse_bigint(class_vs);
            } catch (const std::exception&) {
                throw UsageError("--square-class-vs needs an integer");
            }
            if (other == 0 || d.is_zero())
                throw UsageError("square classes are defined for nonzero values only");
            std::vector<CheckReport> checks{timed_check(
                "disc.square-class", "discriminant square class comparison", g.timings, [&](CheckReport& r) {
                    r.expected = "class of " + to_string(other);
                    r.actual = "disc = " + d.str();
                    r.status = square_class_equal(d, BigRational(other)) ? CheckStatus::pass : CheckStatus::fail;
                })};
            return emit_checks(g, checks, os);
        }
        if (*frob) {
            const PolyQ f = read_poly(poly_path);
            if (f.degree() < 1)
                throw UsageError("frobenius needs degree >= 1");
            const ScanOptions so{g.jobs};
            std::vector<CheckReport> checks;
            EvidenceProfile prof;
            checks.push_back(timed_check("frobenius.scan", "Frobenius cycle types at good primes", g.timings,
                                         [&](CheckReport& r) {
                                             prof = scan(f, primes, so, poly_path);
                                             r.expected = std::to_string(primes) + " good primes";
                                             r.actual = std::to_string(prof.good_primes.size()) + " good, " +
                                                        std::to_string(prof.bad_primes.size()) + " bad; " +
                                                        histogram_text(prof);
                                             r.status = prof.good_primes.size() == primes ? CheckStatus::pass
                                                                                          : CheckStatus::inconclusive;
                                         }));
            if (certify == "symmetric") {
                SuiteOptions o;
                o.certify_primes = primes;
                o.jobs = g.jobs;
                o.timings = g.timings;
                checks.push_back(suite::certify_check("frobenius.certify-symmetric", f, o));
            } else if (!certify.empty()) {
                const bool three = certify == "wreath-3-8";
                checks.push_back(timed_check("frobenius.certify-" + certify, suite::kStructure, g.timings,
                                             [&](CheckReport& r) {
                                                 if (f.degree() != 24)
                                                     throw std::invalid_argument("wreath evidence needs degree 24");
                                                 auto allowed = three ? predict_wreath_types(3, 8)
                                                                      : predict_wreath_types(2, 12);
                                                 std::string bad = suite::types_outside(prof, allowed);
                                                 r.expected = "all types in the restricted wreath product";
                                                 r.actual = bad.empty() ? "all inside" : "outside: " + bad;
                                                 r.status = bad.empty() ? CheckStatus::pass : CheckStatus::fail;
                                             }));
            }
            return emit_checks(g, checks, os);
        }
        if (*verify) {
            suite_opts.jobs = g.jobs;
            suite_opts.timings = g.timings;
            suite_opts.seed = g.seed;
            Theorem which = theorem == "rubik" ? Theorem::rubik
                            : theorem == "revenge" ? Theorem::revenge
                                                   : Theorem::professor;
            return emit_checks(g, verify_theorem(which, suite_opts), os);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
