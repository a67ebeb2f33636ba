// rbell: r-Stirling / r-Bell values, tables, approximations with error
// bounds, and the identity verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rbell/analytic.hpp"
#include "rbell/oracle.hpp"
#include "rbell/rbell.hpp"
#include "rbell/record.hpp"
#include "rbell/stirling.hpp"
#include "rbell/transforms.hpp"
#include "rbell/verify.hpp"

namespace {

using namespace rbell;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { plain, csv, json };

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string plain_approx(const ApproxReal& a) { return fmt_double(a.value) + " +- " + fmt_double(a.err); }

std::string plain_poly(const IntPolynomial& p) {
    std::string out;
    for (const auto& c : p.coeffs()) out += (out.empty() ? "" : " ") + c.get_str();
    return out;
}

std::string plain_seq(const std::vector<ExactInt>& s) {
    std::string out;
    for (const auto& c : s) out += (out.empty() ? "" : " ") + c.get_str();
    return out;
}

/// Emits a record as JSON or as `plain` text; CSV falls back to a single
/// "op,value" row for scalar results.
void emit(const OutputRecord& rec, Format format, const std::string& plain) {
    switch (format) {
        case Format::json: std::cout << rec.dump() << '\n'; break;
        case Format::plain: std::cout << plain << '\n'; break;
        case Format::csv: std::cout << "op,value\n" << rec.op << ',' << plain << '\n'; break;
    }
}

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void emit_table(unsigned long nmax, unsigned long rmax, Format format) {
    const auto table = rbell_table(nmax, rmax);
    if (format == Format::json) {
        OutputRecord rec{"table", Json{{"nmax", nmax}, {"rmax", rmax}}, Json::array()};
        for (const auto& row : table) rec.value.push_back(to_json(row));
        std::cout << rec.dump() << '\n';
        return;
    }
    if (format == Format::csv) {
        std::cout << "r";
        for (unsigned long n = 0; n <= nmax; ++n) std::cout << ",n=" << n;
        std::cout << '\n';
        for (unsigned long r = 0; r <= rmax; ++r) {
            std::cout << r;
            for (const auto& v : table[r]) std::cout << ',' << v.get_str();
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(nmax + 1);
    for (unsigned long n = 0; n <= nmax; ++n) {
        width[n] = ("n=" + std::to_string(n)).size();
        for (const auto& row : table) width[n] = std::max(width[n], row[n].get_str().size());
    }
    const std::size_t lead = std::max<std::size_t>(("r=" + std::to_string(rmax)).size(), 1);
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    std::string header = std::string(lead, ' ') + " |";
    for (unsigned long n = 0; n <= nmax; ++n) header += " " + pad("n=" + std::to_string(n), width[n]);
    std::cout << header << '\n' << std::string(header.size(), '-') << '\n';
    for (unsigned long r = 0; r <= rmax; ++r) {
        std::string line = pad("r=" + std::to_string(r), lead) + " |";
        for (unsigned long n = 0; n <= nmax; ++n) line += " " + pad(table[r][n].get_str(), width[n]);
        std::cout << line << '\n';
    }
}

int emit_verify(const std::vector<verify::CheckResult>& results, Format format) {
    std::size_t passed = 0, failed = 0, errata = 0;
    for (const auto& r : results) {
        if (r.status == verify::Status::pass) ++passed;
        else if (r.status == verify::Status::fail) ++failed;
        else ++errata;
    }
    if (format == Format::json) {
        Json checks = Json::array();
        for (const auto& r : results)
            checks.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"status", verify::status_name(r.status)},
                                  {"cases", r.cases}, {"detail", r.detail}});
        OutputRecord rec{"verify", Json::object(), Json{{"checks", checks}, {"passed", passed}, {"failed", failed},
                                                        {"known_errata", errata}}};
        std::cout << rec.dump() << '\n';
    } else {
        for (const auto& r : results) {
            std::string line = std::string(verify::status_name(r.status)) + " " + r.suite + ": " + r.name + " [" +
                               std::to_string(r.cases) + " cases]";
            if (!r.detail.empty()) line += " -- " + r.detail;
            std::cout << line << '\n';
        }
        std::cout << "summary: " << passed << " passed, " << failed << " failed, " << errata << " known errata\n";
    }
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

ExactRational parse_x(const std::string& text) {
    return parse_rational(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-Stirling and r-Bell numbers with identity verification"};
    app.require_subcommand(1);

    Format format = Format::json;
    unsigned long n = 0, k = 0, r = 0, nmax = 0, rmax = 0;
    std::string x_text;
    double tol = 0;
    bool poly = false;

    auto require_n = [&](CLI::App* cmd) { cmd->add_option("-n", n, "Size index")->required(); };
    auto require_r = [&](CLI::App* cmd) { cmd->add_option("-r", r, "Number of separated elements")->required(); };

    Format table_format = Format::plain;
    auto* table = app.add_subcommand("table", "Table of B_{n,r}");
    table->add_option("--nmax", nmax, "Largest n")->required();
    table->add_option("--rmax", rmax, "Largest r")->required();
    add_format(table, table_format);

    auto* bell = app.add_subcommand("bell", "r-Bell number, value at x, or polynomial");
    require_n(bell);
    require_r(bell);
    bell->add_option("--x", x_text, "Evaluation point P/Q");
    bell->add_flag("--poly", poly, "Print coefficients, lowest degree first");
    add_format(bell, format);

    auto* stirling2 = app.add_subcommand("stirling2", "r-Stirling number of the second kind {n,k}_r");
    auto* stirling1 = app.add_subcommand("stirling1", "unsigned r-Stirling number of the first kind [n,k]_r");
    for (auto* cmd : {stirling2, stirling1}) {
        require_n(cmd);
        cmd->add_option("-k", k, "Number of blocks or cycles")->required();
        require_r(cmd);
        add_format(cmd, format);
    }

    auto* hankel = app.add_subcommand("hankel", "Hankel transform of (B_{m,r})_m");
    require_r(hankel);
    hankel->add_option("--nmax", nmax, "Last term index")->required();
    add_format(hankel, format);

    auto* dobinski = app.add_subcommand("dobinski", "B_{n,r}(x) from the Dobinski series");
    require_n(dobinski);
    require_r(dobinski);
    dobinski->add_option("--x", x_text, "Evaluation point P/Q (default 1)");
    dobinski->add_option("--tol", tol, "Tolerance, relative to max(1, |value|)")->required();
    add_format(dobinski, format);

    auto* integral = app.add_subcommand("integral", "B_{n,r} from the Cesaro-type integral");
    require_n(integral);
    require_r(integral);
    integral->add_option("--tol", tol, "Relative refinement tolerance")->required();
    add_format(integral, format);

    auto* roots = app.add_subcommand("roots", "Sturm root counts of B_{n,r}(x)");
    require_n(roots);
    require_r(roots);
    add_format(roots, format);

    auto* maxindex = app.add_subcommand("maxindex", "Maximizing index of {n+r,k}_r");
    require_n(maxindex);
    require_r(maxindex);
    add_format(maxindex, format);

    auto* oracle = app.add_subcommand("oracle", "Brute-force restricted partition counts");
    require_n(oracle);
    require_r(oracle);
    add_format(oracle, format);

    Format verify_format = Format::plain;
    std::string suite;
    std::optional<unsigned long> verify_nmax, verify_rmax;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity verification suites");
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
    verify_cmd->add_option("--nmax", verify_nmax, "Override n range");
    verify_cmd->add_option("--rmax", verify_rmax, "Override r range");
    add_format(verify_cmd, verify_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*table) {
            emit_table(nmax, rmax, table_format);
        } else if (*bell) {
            OutputRecord rec{"bell", Json{{"n", n}, {"r", r}}, nullptr};
            if (poly) {
                const IntPolynomial p = rbell_poly(n, r).poly;
                rec.value = to_json(p);
                emit(rec, format, plain_poly(p));
            } else if (!x_text.empty()) {
                const ExactRational x = parse_x(x_text);
                rec.params["x"] = to_string(x);
                const ExactRational v = rbell_poly(n, r).poly.evaluate(x);
                rec.value = to_json(v);
                emit(rec, format, to_string(v));
            } else {
                const ExactInt v = rbell_number(n, r);
                rec.value = to_json(v);
                emit(rec, format, v.get_str());
            }
        } else if (*stirling2 || *stirling1) {
            const bool second = static_cast<bool>(*stirling2);
            const ExactInt v = second ? stirling2r(n, k, r) : stirling1r(n, k, r);
            OutputRecord rec{second ? "stirling2" : "stirling1", Json{{"n", n}, {"k", k}, {"r", r}}, to_json(v)};
            emit(rec, format, v.get_str());
        } else if (*hankel) {
            const IntSequence h = hankel_transform_rbell(r, nmax);
            OutputRecord rec{"hankel", Json{{"r", r}, {"nmax", nmax}}, to_json(h)};
            emit(rec, format, plain_seq(h));
        } else if (*dobinski) {
            const ExactRational x = x_text.empty() ? ExactRational(1) : parse_x(x_text);
            const ApproxReal v = dobinski_eval(n, r, x, tol);
            OutputRecord rec{"dobinski", Json{{"n", n}, {"r", r}, {"x", to_string(x)}, {"tol", tol}}, to_json(v)};
            emit(rec, format, plain_approx(v));
        } else if (*integral) {
            const QuadratureResult q = cesaro_integral(n, r, tol);
            Json value = to_json(q.value);
            value["nodes_used"] = q.nodes_used;
            OutputRecord rec{"integral", Json{{"n", n}, {"r", r}, {"tol", tol}}, value};
            emit(rec, format, plain_approx(q.value) + " (" + std::to_string(q.nodes_used) + " subintervals)");
        } else if (*roots) {
            const RootReport rep = real_rootedness_report(n, r);
            OutputRecord rec{"roots", Json{{"n", n}, {"r", r}},
                             Json{{"degree", rep.degree}, {"distinct_neg_roots", rep.distinct_neg_roots},
                                  {"root_at_zero", rep.root_at_zero}, {"simple_roots", rep.simple_roots}}};
            emit(rec, format,
                 "degree " + std::to_string(rep.degree) + ", " + std::to_string(rep.distinct_neg_roots) +
                     " distinct negative roots, root at zero: " + (rep.root_at_zero ? "yes" : "no"));
        } else if (*maxindex) {
            const MaxIndexReport rep = max_index(n, r);
            Json maximizers = Json::array();
            std::string ks;
            for (unsigned long m : rep.maximizers) {
                maximizers.push_back(m);
                ks += (ks.empty() ? "" : " ") + std::to_string(m);
            }
            OutputRecord rec{"maxindex", Json{{"n", n}, {"r", r}},
                             Json{{"maximizers", maximizers}, {"ratio_estimate", to_string(rep.ratio_estimate)},
                                  {"bound_holds", rep.bound_holds}}};
            emit(rec, format,
                 "maximizers " + ks + ", estimate " + to_string(rep.ratio_estimate) + ", bound " +
                     (rep.bound_holds ? "holds" : "fails"));
        } else if (*oracle) {
            const PartitionCounts counts = enumerate_restricted_partitions(n, r);
            Json blocks = Json::object();
            std::string plain;
            for (const auto& [blocks_k, v] : counts.by_blocks) {
                blocks[std::to_string(blocks_k)] = v.get_str();
                plain += std::to_string(blocks_k) + ":" + v.get_str() + " ";
            }
            OutputRecord rec{"oracle", Json{{"n", n}, {"r", r}}, Json{{"by_blocks", blocks}, {"total", counts.total.get_str()}}};
            emit(rec, format, plain + "total " + counts.total.get_str());
        } else if (*verify_cmd) {
            const verify::Limits lim{verify_nmax, verify_rmax};
            return emit_verify(verify::run_suite(suite, lim), verify_format);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitOk;
}
