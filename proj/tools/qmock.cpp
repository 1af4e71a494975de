// qmock: expand, verify, enumerate and cross-check the q-series catalog.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmock/classical.hpp"
#include "qmock/mock.hpp"
#include "qmock/partitions.hpp"
#include "qmock/registry.hpp"
#include "qmock/series_io.hpp"

using json = nlohmann::json;
using namespace qmock;

namespace {

constexpr const char* kSchema = "qmock/1";

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSpec = 3;
constexpr int kExitAccuracy = 4;

int default_order(int fallback) {
    if (const char* env = std::getenv("QMOCK_DEFAULT_ORDER")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return fallback;
}

// monomial mini-grammar: [-][<int>][*]z[^i][*]a[^j][*]q[^k], factors in any
// order, e.g. "-z*a^-1*q^2", "2*q", "a"
Monomial parse_monomial(const std::string& text) {
    detail::TermScanner sc(text);
    Int c;
    std::vector<int> exps;
    sc.monomial("zaq", c, exps);
    if (!sc.done()) throw ParseError("trailing input in monomial '" + text + "'");
    if (c == 0) throw ParseError("monomial coefficient must be nonzero in '" + text + "'");
    return Monomial(c, exps[0], exps[1], exps[2]);
}

std::map<std::string, Monomial> parse_args(const std::string& list) {
    std::map<std::string, Monomial> out;
    size_t pos = 0;
    while (pos < list.size()) {
        size_t comma = list.find(',', pos);
        std::string piece = list.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t eq = piece.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected name=monomial in --args piece '" + piece + "'");
        out[piece.substr(0, eq)] = parse_monomial(piece.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

struct Output {
    std::string path;
    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        f << text;
    }
};

json mismatch_json(const std::optional<ComparisonReport::Mismatch>& m) {
    if (!m) return nullptr;
    return json{{"q_exp", m->q_exp}, {"lhs", m->lhs.str()}, {"rhs", m->rhs.str()}};
}

json report_json(const registry::VerifyReport& r, bool stable) {
    json j{{"id", r.id},
           {"anchor", r.anchor},
           {"quote", r.quote},
           {"order", r.order},
           {"status", registry::status_name(r.status)},
           {"first_mismatch", mismatch_json(r.first_mismatch)},
           {"elapsed_ms", stable ? 0 : r.elapsed_ms}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string report_text(const registry::VerifyReport& r, bool stable) {
    std::string line = std::string(registry::status_name(r.status)) + "  " + r.id +
                       "  order=" + std::to_string(r.order);
    if (r.first_mismatch)
        line += "  mismatch at q^" + std::to_string(r.first_mismatch->q_exp) + ": lhs=" +
                r.first_mismatch->lhs.str() + " rhs=" + r.first_mismatch->rhs.str();
    if (!r.error.empty()) line += "  error: " + r.error;
    if (!stable) line += "  (" + std::to_string(r.elapsed_ms) + " ms)";
    return line + "\n";
}

json item_json(const partitions::Item& it) {
    json arr = json::array();
    for (const auto& p : it) arr.push_back({{"value", p.value}, {"over", p.overlined}});
    return arr;
}

// generating functions for the enumerator cross-checks
QSeries family_gf(const std::string& family, int acc) {
    using mock::Family;
    auto q = [](int k) { return Monomial(1, 0, 0, k); };
    if (family == "p_omega") return mock::build(Family::omega, {}, +1, acc).scaled(q(1)).truncated(acc);
    if (family == "p_nu") return mock::build(Family::nu, {}, -1, acc);
    if (family == "overpartitions")
        return qkit::poch_inf(-q(1), qkit::QStep(1), acc) *
               qkit::poch_inf(q(1), qkit::QStep(1), acc).inverse();
    if (family == "p_star") {
        qkit::SumSpec s;
        s.lead = [](long n) { return Monomial(1, 0, 0, static_cast<int>(n)); };
        s.atoms = {
            qkit::inf_atom(Monomial(-1, 0, 0, 1), 1, [](long n) { return n; }, false),
            qkit::inf_atom(Monomial(1, 0, 0, 1), 2, [](long n) { return 2 * n; }, true),
        };
        return qkit::telescoped_sum(s, acc);
    }
    if (family == "p_substar") {
        qkit::SumSpec s;
        s.lead = [](long n) { return Monomial(1, 0, 0, static_cast<int>(2 * n + 1)); };
        s.atoms = {
            qkit::fin_atom(q(1), 2, [](long) { return 0; }, [](long n) { return n + 1; }, true),
            qkit::fin_atom(q(1), 2, [](long) { return 0; }, [](long n) { return n + 1; }, true),
        };
        return qkit::telescoped_sum(s, acc);
    }
    if (family == "p_prime") {
        qkit::SumSpec s;
        s.lead = [](long n) { return Monomial(1, 0, 0, static_cast<int>(n)); };
        s.atoms = {
            qkit::fin_atom(Monomial(-1, 0, 0, 0), 1, [](long n) { return n; },
                           [](long n) { return n; }, false),
            qkit::inf_atom(Monomial(-1, 0, 0, 1), 2, [](long n) { return 2 * n; }, false),
        };
        return qkit::telescoped_sum(s, acc);
    }
    throw UnknownName("unknown family '" + family + "'");
}

long long family_count(const std::string& family, long n) {
    if (family == "p_omega") return partitions::p_omega(n).count;
    if (family == "p_nu") return partitions::p_nu(n).count;
    if (family == "p_star") return partitions::p_star(n).count;
    if (family == "p_substar") return partitions::p_substar(n);
    if (family == "p_prime") return partitions::p_prime(n).count;
    if (family == "overpartitions") return partitions::overpartition_count(n).count;
    throw UnknownName("unknown family '" + family + "'");
}

long family_first_n(const std::string& family) {
    return (family == "p_nu" || family == "p_prime") ? 0 : 1;
}

long long series_coeff_int(const QSeries& s, int k) {
    LaurentPoly p = s.coeff(k);
    if (p.is_zero()) return 0;
    if (p.size() != 1 || !(p.terms()[0].e == VarExp{0, 0}))
        throw Error("series coefficient at q^" + std::to_string(k) + " is not constant");
    return p.terms()[0].c.get_si();
}

json catalog_json() {
    json j;
    j["schema"] = kSchema;
    j["command"] = "catalog";
    auto& entries = j["entries"] = json::array();
    for (const auto& row : registry::catalog())
        entries.push_back({{"id", row.id}, {"anchor", row.anchor}, {"quote", row.quote}});
    auto& classical = j["classical"] = json::array();
    for (const auto& info : qkit::classical_catalog())
        classical.push_back({{"name", info.name},
                             {"params", info.params},
                             {"step", info.has_step},
                             {"note", info.note}});
    auto& families = j["families"] = json::array();
    for (const auto& fi : mock::families()) {
        json slots = json::array();
        for (int i = 0; i < fi.arity; ++i) slots.push_back(fi.args[i]);
        families.push_back(
            {{"name", fi.name}, {"arity", fi.arity}, {"step", fi.has_step}, {"args", slots}});
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qmock: exact q-series engine for a catalog of mock theta function identities.\n"
        "Monomial grammar: [-][<int>][*]z[^i][*]a[^j][*]q[^k]  (e.g. -z*a^-1*q^2, 2*q, a).\n"
        "QMOCK_DEFAULT_ORDER overrides the default expansion order."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    bool stable = false;
    std::string output_path;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--stable", stable, "omit timings so output is byte-identical across runs");
    app.add_option("-o,--output", output_path, "write output to a file instead of stdout");

    // expand
    auto* expand = app.add_subcommand("expand", "expand a named series to a given order");
    std::string ex_name;
    std::string ex_args;
    int ex_order = -1;
    int ex_qsign = 1;
    int ex_step = 1;
    expand->add_option("name", ex_name, "family name (see `qmock catalog`)")->required();
    expand->add_option("--args", ex_args, "comma-separated slot=monomial list, e.g. a=a,z=z");
    expand->add_option("--order", ex_order, "truncation order (default 20 or QMOCK_DEFAULT_ORDER)")
        ->check(CLI::NonNegativeNumber);
    expand->add_option("--qsign", ex_qsign, "+1 or -1: evaluate at q or -q")
        ->check(CLI::IsMember({1, -1}));
    expand->add_option("--step", ex_step, "Pochhammer base step for bigG/rho3");

    // verify
    auto* verify = app.add_subcommand("verify", "verify catalog identities coefficientwise");
    std::string v_id;
    bool v_all = false;
    int v_order = 0;
    int v_workers = 1;
    verify->add_option("--id", v_id, "catalog entry id");
    verify->add_flag("--all", v_all, "verify the whole catalog");
    verify->add_option("--order", v_order, "comparison order (default: per-entry)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--workers", v_workers, "worker threads for --all")
        ->check(CLI::PositiveNumber);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "run a partition enumerator");
    std::string e_family;
    long e_n = 0;
    bool e_list = false;
    enumerate->add_option("family", e_family,
                          "p_omega|p_nu|p_star|p_substar|p_prime|overpartitions")
        ->required();
    enumerate->add_option("n", e_n, "target integer")->required();
    enumerate->add_flag("--list", e_list, "list the objects, not just the count");

    // crosscheck
    auto* crosscheck =
        app.add_subcommand("crosscheck", "compare an enumerator against its generating function");
    std::string c_family;
    int c_maxn = -1;
    crosscheck->add_option("family", c_family,
                           "p_omega|p_nu|p_star|p_substar|p_prime|overpartitions")
        ->required();
    crosscheck->add_option("--max-n", c_maxn, "check n up to this bound (default 20)");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "list identities, classical names, families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out{output_path};
    const bool as_json = format == "json";

    try {
        if (*expand) {
            int order = ex_order >= 0 ? ex_order : default_order(20);
            mock::Family fam = mock::family_from_name(ex_name);
            const auto& fi = mock::info(fam);
            auto named = parse_args(ex_args);
            std::vector<Monomial> args;
            for (int i = 0; i < fi.arity; ++i) {
                auto it = named.find(fi.args[i]);
                if (it != named.end()) {
                    args.push_back(it->second);
                    named.erase(it);
                } else {
                    // symbolic defaults per slot name
                    std::string slot = fi.args[i];
                    if (slot == "z") args.push_back(Monomial(1, 1, 0, 0));
                    else if (slot == "a" || slot == "y") args.push_back(Monomial(1, 0, 1, 0));
                    else if (slot == "x") args.push_back(Monomial(1, 1, 0, 0));
                    else if (slot == "b") args.push_back(Monomial(1, 1, 0, 0));
                    else if (slot == "c") args.push_back(Monomial(1, 1, 1, 1));
                    else throw UnknownName("no default for slot " + slot);
                }
            }
            if (!named.empty())
                throw UnknownName("unknown argument slot '" + named.begin()->first + "' for " +
                                  ex_name);
            QSeries s = mock::build(fam, args, ex_qsign, order, qkit::QStep(ex_step));
            if (as_json) {
                json j{{"schema", kSchema}, {"command", "expand"},     {"name", ex_name},
                       {"order", order},   {"qsign", ex_qsign},       {"step", ex_step},
                       {"series", series_to_json(s)}};
                out.emit(j.dump(2) + "\n");
            } else {
                out.emit(s.str() + "\n");
            }
            return kExitOk;
        }

        if (*verify) {
            if (v_all && !v_id.empty())
                throw UnknownId("verify: --id and --all are mutually exclusive");
            if (!v_all && v_id.empty())
                throw UnknownId("verify: pass --id <ID> or --all");
            int order = v_order > 0 ? v_order : default_order(0);  // 0: per-entry default
            std::vector<registry::VerifyReport> reports;
            if (v_all) {
                reports = registry::verify_all(order, v_workers);
            } else {
                reports.push_back(registry::verify(v_id, order));
            }
            bool all_ok = true;
            for (const auto& r : reports) all_ok = all_ok && r.ok();
            if (as_json) {
                json j{{"schema", kSchema}, {"command", "verify"}, {"reports", json::array()}};
                for (const auto& r : reports) j["reports"].push_back(report_json(r, stable));
                j["ok"] = all_ok;
                out.emit(j.dump(2) + "\n");
            } else {
                std::string text;
                int okc = 0;
                for (const auto& r : reports) {
                    text += report_text(r, stable);
                    okc += r.ok() ? 1 : 0;
                }
                text += std::to_string(okc) + "/" + std::to_string(reports.size()) + " ok\n";
                out.emit(text);
            }
            return all_ok ? kExitOk : kExitMismatch;
        }

        if (*enumerate) {
            long long count = 0;
            std::optional<std::vector<partitions::Item>> items;
            if (e_family == "p_substar") {
                count = partitions::p_substar(e_n);
            } else if (e_family == "p_omega") {
                auto r = partitions::p_omega(e_n, e_list);
                count = r.count;
                items = std::move(r.items);
            } else if (e_family == "p_nu") {
                auto r = partitions::p_nu(e_n, e_list);
                count = r.count;
                items = std::move(r.items);
            } else if (e_family == "p_star") {
                auto r = partitions::p_star(e_n, e_list);
                count = r.count;
                items = std::move(r.items);
            } else if (e_family == "p_prime") {
                auto r = partitions::p_prime(e_n, e_list);
                count = r.count;
                items = std::move(r.items);
            } else if (e_family == "overpartitions") {
                auto r = partitions::overpartition_count(e_n, e_list);
                count = r.count;
                items = std::move(r.items);
            } else {
                throw UnknownName("unknown family '" + e_family + "'");
            }
            if (as_json) {
                json j{{"schema", kSchema},
                       {"command", "enumerate"},
                       {"family", e_family},
                       {"n", e_n},
                       {"count", count}};
                if (items) {
                    j["items"] = json::array();
                    for (const auto& it : *items) j["items"].push_back(item_json(it));
                }
                out.emit(j.dump(2) + "\n");
            } else {
                std::string text = e_family + "(" + std::to_string(e_n) +
                                   ") = " + std::to_string(count) + "\n";
                if (items)
                    for (const auto& it : *items) text += partitions::render(it) + "\n";
                out.emit(text);
            }
            return kExitOk;
        }

        if (*crosscheck) {
            int maxn = c_maxn > 0 ? c_maxn : default_order(20);
            QSeries gf = family_gf(c_family, maxn);
            long first_bad = -1;
            long long want = 0, got = 0;
            for (long n = family_first_n(c_family); n <= maxn; ++n) {
                want = series_coeff_int(gf, static_cast<int>(n));
                got = family_count(c_family, n);
                if (want != got) {
                    first_bad = n;
                    break;
                }
            }
            bool ok = first_bad < 0;
            if (as_json) {
                json j{{"schema", kSchema}, {"command", "crosscheck"}, {"family", c_family},
                       {"max_n", maxn},     {"status", ok ? "pass" : "fail"}};
                j["first_mismatch"] =
                    ok ? json(nullptr)
                       : json{{"n", first_bad}, {"enumerator", got}, {"series", want}};
                out.emit(j.dump(2) + "\n");
            } else {
                std::string text = "crosscheck " + c_family + " through n=" +
                                   std::to_string(maxn) + ": " + (ok ? "pass" : "fail") + "\n";
                if (!ok)
                    text += "  first mismatch at n=" + std::to_string(first_bad) +
                            ": enumerator=" + std::to_string(got) +
                            " series=" + std::to_string(want) + "\n";
                out.emit(text);
            }
            return ok ? kExitOk : kExitMismatch;
        }

        if (*catalog_cmd) {
            if (as_json) {
                out.emit(catalog_json().dump(2) + "\n");
            } else {
                std::string text;
                for (const auto& row : registry::catalog())
                    text += row.id + "\t" + row.anchor + "\t" + row.quote + "\n";
                text += "--\nclassical identities:\n";
                for (const auto& info : qkit::classical_catalog()) {
                    text += "  " + info.name + "(";
                    for (size_t i = 0; i < info.params.size(); ++i)
                        text += (i ? ", " : "") + info.params[i];
                    text += ")\n";
                }
                text += "--\nexpandable families:\n";
                for (const auto& fi : mock::families()) {
                    text += "  " + std::string(fi.name) + "(";
                    for (int i = 0; i < fi.arity; ++i)
                        text += (i ? ", " : std::string()) + fi.args[i];
                    text += ")\n";
                }
                out.emit(text);
            }
            return kExitOk;
        }
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AccuracyTooLow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAccuracy;
    } catch (const InsufficientAccuracy& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAccuracy;
    } catch (const IllegalSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    }
    return kExitUsage;
}
