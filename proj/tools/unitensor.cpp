// unitensor: tables of U, V, A; verification suites; brute-force oracle runs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unitensor/combinatorics.hpp"
#include "unitensor/kernel.hpp"
#include "unitensor/oracle_glfq.hpp"
#include "unitensor/quiver_roots.hpp"
#include "unitensor/suites.hpp"

using namespace unitensor;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json coeff_array(const TPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) {
        if (!is_integer(c)) throw std::logic_error("non-integral coefficient in output");
        a.push_back(json::parse(c.get_num().get_str()));
    }
    return a;
}

json poly_json(const TPoly& p) { return {{"coeffs", coeff_array(p)}}; }

std::string coeff_text(const TPoly& p) { return coeff_array(p).dump(); }

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

// ------------------------------------------------------------------- table

struct TableRow {
    MultiPartition mu;
    TPoly v, u, a;
    std::int64_t d, delta;
    std::string root;
};

TableRow make_row(const MultiPartition& mu, int g) {
    const auto [quiver, vec] = build_quiver(mu, g);
    return {mu, v_poly(mu, g), u_poly(mu, g), a_poly(mu, g), d_mu(mu, g), delta(mu, g),
            root_tag_name(classify_root(vec, quiver).tag)};
}

int cmd_table(int n, int k, int g, const std::string& mu_text, const std::string& format, bool force) {
    std::vector<MultiPartition> mus;
    if (!mu_text.empty()) {
        MultiPartition mu;
        try {
            mu = parse_multipartition(mu_text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad --mu: ") + e.what());
        }
        if (mu.size() != n || mu.arity() != k) throw UsageError("--mu must have size n and k components");
        mus.push_back(mu);
    } else {
        mus = multipartitions(n, k);
    }
    if (n > 6 && !force) throw UsageError("n > 6 is expensive; pass --force to run anyway");

    std::vector<TableRow> rows;
    for (const auto& mu : mus) rows.push_back(make_row(mu, g));

    if (format == "json") {
        json out{{"n", n}, {"k", k}, {"g", g}, {"rows", json::array()}};
        for (const auto& r : rows) {
            out["rows"].push_back({{"mu", format_multipartition(r.mu)},
                                   {"V", poly_json(r.v)},
                                   {"U", poly_json(r.u)},
                                   {"A", poly_json(r.a)},
                                   {"d", r.d},
                                   {"delta", r.delta},
                                   {"root", r.root}});
        }
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "mu,V,U,A,d,delta,root\n";
        for (const auto& r : rows) {
            std::cout << csv_quote(format_multipartition(r.mu)) << ',' << csv_quote(coeff_text(r.v)) << ','
                      << csv_quote(coeff_text(r.u)) << ',' << csv_quote(coeff_text(r.a)) << ',' << r.d << ','
                      << r.delta << ',' << r.root << '\n';
        }
    } else {
        std::size_t w_mu = 2, w_v = 1, w_u = 1, w_a = 1;
        for (const auto& r : rows) {
            w_mu = std::max(w_mu, format_multipartition(r.mu).size());
            w_v = std::max(w_v, r.v.to_string().size());
            w_u = std::max(w_u, r.u.to_string().size());
            w_a = std::max(w_a, r.a.to_string().size());
        }
        auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                        const std::string& e, const std::string& f, const std::string& h) {
            std::cout << std::left << std::setw(static_cast<int>(w_mu)) << a << "  " << std::setw(static_cast<int>(w_v))
                      << b << "  " << std::setw(static_cast<int>(w_u)) << c << "  " << std::setw(static_cast<int>(w_a))
                      << d << "  " << std::setw(4) << e << "  " << std::setw(5) << f << "  " << h << '\n';
        };
        line("mu", "V", "U", "A", "d", "delta", "root");
        for (const auto& r : rows) {
            line(format_multipartition(r.mu), r.v.to_string(), r.u.to_string(), r.a.to_string(), std::to_string(r.d),
                 std::to_string(r.delta), r.root);
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------------- check

int cmd_check(const std::string& suite, int max_n, int samples, std::uint64_t seed, const std::string& format) {
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& info : suite_catalog()) names.push_back(info.name);
    } else {
        bool known = false;
        for (const auto& info : suite_catalog()) known = known || info.name == suite;
        if (!known) throw UsageError("unknown suite '" + suite + "' (try --list)");
        names.push_back(suite);
    }
    SuiteOptions opts{max_n, samples, seed};
    bool all_ok = true;
    json out = json::array();
    for (const auto& name : names) {
        const auto r = run_suite(name, opts);
        all_ok = all_ok && r.ok();
        if (format == "json") {
            out.push_back({{"suite", r.name}, {"pass", r.ok()}, {"checked", r.checked}, {"failures", r.failures}});
            continue;
        }
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << "  (" << r.checked << " checks, " << std::fixed
                  << std::setprecision(2) << r.seconds << " s)\n";
        for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    }
    if (format == "json") std::cout << out.dump(2) << '\n';
    return all_ok ? kExitOk : kExitFail;
}

// ------------------------------------------------------------------ oracle

int cmd_oracle(int n, int k, int q, int g, bool generic, const std::string& twist_text, const std::string& format) {
    struct Row {
        MultiPartition mu;
        Rational pipeline;
        Integer oracle;
    };
    std::vector<Row> rows;
    std::vector<int> twists;
    if (generic) {
        if (n != 2 || (q != 3 && q != 5)) throw UsageError("--generic needs n = 2 and q in {3, 5}");
        if (twist_text.empty()) {
            twists.assign(k, 1);
            twists[0] = 2;
        } else {
            std::stringstream ss(twist_text);
            for (std::string tok; std::getline(ss, tok, ',');) {
                if (tok != "1" && tok != "2") throw UsageError("--twists entries must be 1 or 2");
                twists.push_back(tok == "2" ? 2 : 1);
            }
            if (static_cast<int>(twists.size()) != k) throw UsageError("--twists needs one entry per component");
        }
        for (const auto& mu : multipartitions(n, k)) {
            try {
                rows.push_back({mu, v_poly(mu, g).evaluate(Rational(q)), generic_inner_product(mu, twists, g, q)});
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    } else {
        if (n < 1 || n > 3 || (q != 2 && q != 3)) throw UsageError("oracle needs n <= 3 and q in {2, 3}");
        for (const auto& mu : multipartitions(n, k)) {
            rows.push_back({mu, u_poly(mu, g).evaluate(Rational(q)), tensor_inner_product(mu, g, q)});
        }
    }
    bool all_ok = true;
    json out{{"n", n}, {"k", k}, {"q", q}, {"g", g}, {"generic", generic}, {"rows", json::array()}};
    if (format == "text") std::cout << "mu  pipeline  oracle  match\n";
    for (const auto& r : rows) {
        const bool match = r.pipeline == Rational(r.oracle);
        all_ok = all_ok && match;
        if (format == "json") {
            out["rows"].push_back({{"n", n},
                                   {"q", q},
                                   {"g", g},
                                   {"mu", format_multipartition(r.mu)},
                                   {"value", json::parse(r.oracle.get_str())},
                                   {"pipeline", json::parse(r.pipeline.get_str())},
                                   {"match", match}});
        } else if (format == "csv") {
            std::cout << csv_quote(format_multipartition(r.mu)) << ',' << r.pipeline.get_str() << ','
                      << r.oracle.get_str() << ',' << (match ? "true" : "false") << '\n';
        } else {
            std::cout << format_multipartition(r.mu) << "  " << r.pipeline.get_str() << "  " << r.oracle.get_str()
                      << "  " << (match ? "ok" : "MISMATCH") << '\n';
        }
    }
    if (format == "json") std::cout << out.dump(2) << '\n';
    return all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unipotent tensor-product polynomials for GL_n(F_q)"};
    app.require_subcommand(1);

    int n = 0, k = 3, g = 0, q = 2, max_n = -1, samples = -1;
    std::uint64_t seed = SuiteOptions{}.seed;
    std::string format = "text", mu_text, suite, twist_text;
    bool force = false, generic = false, list = false;
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto* table = app.add_subcommand("table", "U, V, A, d, delta and root class for every mu of size n");
    table->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);
    table->add_option("--k", k, "number of components")->check(CLI::PositiveNumber);
    table->add_option("--g", g, "genus")->check(CLI::NonNegativeNumber);
    table->add_option("--mu", mu_text, "single multipartition, e.g. 1^3|2,1|1^3");
    table->add_option("--format", format)->check(CLI::IsMember(formats));
    table->add_flag("--force", force, "allow n > 6");

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "suite name or 'all'");
    check->add_option("--max-n", max_n, "size bound (suite default if omitted)");
    check->add_option("--samples", samples, "sample count for randomized suites");
    check->add_option("--seed", seed);
    check->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
    check->add_flag("--list", list, "list suites");

    auto* oracle = app.add_subcommand("oracle", "compare the pipeline with brute force over GL_n(F_q)");
    oracle->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    oracle->add_option("--k", k)->check(CLI::PositiveNumber);
    oracle->add_option("--q", q)->required();
    oracle->add_option("--g", g)->check(CLI::NonNegativeNumber);
    oracle->add_flag("--generic", generic, "twist by quadratic characters of det (n = 2)");
    oracle->add_option("--twists", twist_text, "comma list of 1 (trivial) or 2 (quadratic), one per component");
    oracle->add_option("--format", format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(n, k, g, mu_text, format, force);
        if (check->parsed()) {
            if (list) {
                for (const auto& info : suite_catalog()) std::cout << info.name << "  " << info.description << '\n';
                return kExitOk;
            }
            if (suite.empty()) throw UsageError("--suite is required");
            return cmd_check(suite, max_n, samples, seed, format);
        }
        if (oracle->parsed()) return cmd_oracle(n, k, q, g, generic, twist_text, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
