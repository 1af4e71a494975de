#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qmock/classical.hpp"
#include "qmock/mock.hpp"
#include "qmock/partitions.hpp"

namespace qmock::registry {

struct CatalogRow {
    std::string id;
    std::string anchor;
    std::string quote;
};

struct IdentityInstance {
    std::string id;
    QSeries lhs;
    QSeries rhs;
    std::string anchor;
    std::string quote;
    int default_acc = 30;
    bool expected_fail = false;
};

enum class Status { Pass, PassExpectedFail, UnexpectedPass, Fail, Errored };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::PassExpectedFail: return "pass-as-expected";
        case Status::UnexpectedPass: return "unexpected-pass";
        case Status::Fail: return "fail";
        case Status::Errored: return "error";
    }
    return "?";
}

struct VerifyReport {
    std::string id;
    std::string anchor;
    std::string quote;
    int order = 0;
    Status status = Status::Fail;
    std::optional<ComparisonReport::Mismatch> first_mismatch;
    std::string error;
    long long elapsed_ms = 0;

    bool ok() const { return status == Status::Pass || status == Status::PassExpectedFail; }
};

namespace detail {

using mock::Family;
using qkit::fin_atom;
using qkit::inf_atom;
using qkit::QStep;
using qkit::SumSpec;

inline Monomial mn(long c, int ez, int ea, int eq) { return Monomial(Int(c), ez, ea, eq); }
inline Monomial qp(int k) { return mn(1, 0, 0, k); }
inline const Monomial Z = mn(1, 1, 0, 0);
inline const Monomial A = mn(1, 0, 1, 0);
inline const Monomial I = mn(1, 0, 0, 0);

inline QSeries inf(const Monomial& a, int t, int acc, int sg = +1) {
    return qkit::poch_inf(a, QStep(t), acc, sg);
}
inline QSeries inf_i(const Monomial& a, int t, int acc, int sg = +1) {
    return inf(a, t, acc, sg).inverse();
}
inline QSeries mk(const Family f, std::vector<Monomial> args, int sg, int acc,
                  QStep step = QStep(1)) {
    return mock::build(f, std::move(args), sg, acc, step);
}
inline QSeries sum(const SumSpec& s, int acc, int sg = +1) {
    return qkit::telescoped_sum(s, acc, sg);
}

inline std::function<long(long)> cnt(long (*f)(long)) { return f; }

// ---- shared sub-builders -------------------------------------------------

// sum_{n>=1} q^n / ((zq^n;q)_{n+1} (zq^{2n+2};q^2)_inf), the two-variable
// smallest-part sum; subst chooses the z argument
inline QSeries ay_omega_lhs(const Monomial& z, int acc) {
    SumSpec s;
    s.n0 = 1;
    s.lead = [](long n) { return qp(static_cast<int>(n)); };
    s.atoms = {
        fin_atom(z, 1, [](long n) { return n; }, [](long n) { return n + 1; }, true),
        inf_atom(z * qp(2), 2, [](long n) { return 2 * n; }, true),
    };
    return sum(s, acc);
}

// sum_{n>=0} q^n (-zq^{n+1};q)_n (-zq^{2n+2};q^2)_inf
inline QSeries ay_nu_lhs(const Monomial& z, int acc) {
    SumSpec s;
    s.lead = [](long n) { return qp(static_cast<int>(n)); };
    s.atoms = {
        fin_atom(-z * qp(1), 1, [](long n) { return n; }, [](long n) { return n; }, false),
        inf_atom(-z * qp(2), 2, [](long n) { return 2 * n; }, false),
    };
    return sum(s, acc);
}

// both sides of the first main theorem at a given alpha argument
inline SidePair thm3_sides(const Monomial& ma, int acc) {
    QSeries lhs = mk(Family::G_def, {ma, Z}, +1, acc);
    QSeries rhs = mk(Family::H_def, {ma, Z}, +1, acc) + mk(Family::F_func, {ma, Z}, +1, acc);
    return {lhs, rhs};
}

// both sides of the second main theorem at a given alpha argument
inline SidePair thm4_sides(const Monomial& ma, int acc) {
    SumSpec l;
    l.lead = [](long n) { return qp(static_cast<int>(n)); };
    l.atoms = {
        fin_atom(-Z * qp(1), 1, [](long) { return 0; }, [](long n) { return 2 * n; }, false),
        inf_atom(-Z * qp(2), 2, [](long n) { return 2 * n; }, false),
        fin_atom(-Z * ma.inverse() * qp(1), 1, [](long) { return 0; }, [](long n) { return n; },
                 true),
    };
    QSeries lhs = sum(l, acc);

    const int w = acc + 2;
    Monomial nuarg = ma.pow(2) * Z.inverse();
    QSeries nu_part = inf(-Z * qp(1), 1, w) * inf_i(-Z * ma.inverse() * qp(1), 1, w) *
                      mk(Family::nu_tri, {nuarg, -nuarg}, -1, w);
    nu_part = nu_part.scaled(-(ma * Z.inverse()));

    SumSpec r;
    r.lead = [ma](long n) {
        return ma.pow(n) * qp(static_cast<int>(n * (n + 1) / 2));
    };
    r.atoms = {
        fin_atom(-ma * Z.inverse(), 1, [](long) { return 0; }, [](long n) { return n + 1; },
                 false),
        fin_atom(-ma.pow(2) * Z.inverse() * qp(1), 2, [](long) { return 0; },
                 [](long n) { return n + 1; }, true),
    };
    QSeries rhs = nu_part + inf(-Z * qp(2), 2, w) * sum(r, w);
    return {lhs.truncated(acc), rhs.truncated(acc)};
}

// sum_{n>=0} (-q^{n+1};q)_inf q^n / (-zq^{2n+1};q^2)_inf
inline QSeries smallest_part_overlined_sum(const Monomial& z, int acc) {
    SumSpec s;
    s.lead = [](long n) { return qp(static_cast<int>(n)); };
    s.atoms = {
        inf_atom(-qp(1), 1, [](long n) { return n; }, false),
        inf_atom(-z * qp(1), 2, [](long n) { return 2 * n; }, true),
    };
    return sum(s, acc);
}

// sum_{n>=0} (q^{n+1};q)_inf q^n / (-zq^{2n+1};q^2)_inf
inline QSeries smallest_part_plain_sum(const Monomial& z, int acc) {
    SumSpec s;
    s.lead = [](long n) { return qp(static_cast<int>(n)); };
    s.atoms = {
        inf_atom(qp(1), 1, [](long n) { return n; }, false),
        inf_atom(-z * qp(1), 2, [](long n) { return 2 * n; }, true),
    };
    return sum(s, acc);
}

// sum_{n>=0} q^{2n+1} / (q;q^2)_{n+1}^2
inline QSeries odd_parts_weighted_sum(int acc) {
    SumSpec s;
    s.lead = [](long n) { return qp(static_cast<int>(2 * n + 1)); };
    s.atoms = {
        fin_atom(qp(1), 2, [](long) { return 0; }, [](long n) { return n + 1; }, true),
        fin_atom(qp(1), 2, [](long) { return 0; }, [](long n) { return n + 1; }, true),
    };
    return sum(s, acc);
}

// the first smallest-part sum with both parameters doubled, used by the
// specialization-chain checks: sum q^{2n} / ((z^2 q^{2n};q^2)_{n+1} (z^2 q^{4n+4};q^4)_inf)
inline SidePair ay_omega_doubled(int acc) {
    SumSpec s;
    s.n0 = 1;
    s.lead = [](long n) { return qp(static_cast<int>(2 * n)); };
    s.atoms = {
        fin_atom(Z.pow(2), 2, [](long n) { return 2 * n; }, [](long n) { return n + 1; }, true),
        inf_atom(Z.pow(2) * qp(4), 4, [](long n) { return 4 * n; }, true),
    };
    QSeries lhs = sum(s, acc);
    QSeries rhs = mk(Family::omega_bi, {Z.pow(2)}, +1, acc / 2).q_power(2).scaled(qp(2));
    return {lhs, rhs.truncated(acc)};
}

}  // namespace detail

struct Entry {
    std::string id;
    std::string anchor;
    std::string quote;
    int default_acc;
    int min_acc;
    bool expected_fail;
    std::function<SidePair(int)> build;
};

const std::vector<Entry>& entries();

inline const Entry& find_entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.id == id) return e;
    throw UnknownId("registry: unknown id '" + id + "'");
}

inline std::vector<CatalogRow> catalog() {
    std::vector<CatalogRow> out;
    for (const auto& e : entries()) out.push_back({e.id, e.anchor, e.quote});
    return out;
}

inline IdentityInstance instantiate(const std::string& id, int acc) {
    const Entry& e = find_entry(id);
    if (acc < e.min_acc)
        throw AccuracyTooLow("registry: entry " + id + " needs order >= " +
                             std::to_string(e.min_acc) + ", got " + std::to_string(acc));
    SidePair sides = e.build(acc);
    if (sides.lhs.acc() < acc || sides.rhs.acc() < acc)
        throw Error("registry: entry " + id + " built below requested accuracy");
    return {id,      sides.lhs.truncated(acc), sides.rhs.truncated(acc), e.anchor,
            e.quote, e.default_acc,            e.expected_fail};
}

struct Perturbation {
    std::string id;
    int q_exp = 0;
};

// Throws UnknownId / AccuracyTooLow for usage errors; computation failures
// are captured in the report instead.
inline VerifyReport verify(const std::string& id, int acc = 0,
                           const Perturbation* perturb = nullptr) {
    const Entry& e = find_entry(id);
    if (acc <= 0) acc = e.default_acc;
    if (acc < e.min_acc)
        throw AccuracyTooLow("registry: entry " + id + " needs order >= " +
                             std::to_string(e.min_acc) + ", got " + std::to_string(acc));
    VerifyReport rep;
    rep.id = e.id;
    rep.anchor = e.anchor;
    rep.quote = e.quote;
    rep.order = acc;
    auto start = std::chrono::steady_clock::now();
    try {
        IdentityInstance inst = instantiate(id, acc);
        QSeries rhs = inst.rhs;
        if (perturb && perturb->id == id)
            rhs += QSeries::from_monomial(detail::mn(1, 1, 0, perturb->q_exp), rhs.acc());
        ComparisonReport cmp = series_compare(inst.lhs, rhs, acc);
        if (cmp.pass) {
            rep.status = e.expected_fail ? Status::UnexpectedPass : Status::Pass;
        } else {
            rep.status = e.expected_fail ? Status::PassExpectedFail : Status::Fail;
            rep.first_mismatch = cmp.first_mismatch;
        }
    } catch (const Error& err) {
        rep.status = Status::Errored;
        rep.error = err.what();
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

// Verifies every entry; reports come back in catalog order regardless of the
// worker count.  Per-entry computation errors are captured in the reports;
// an order below some entry's declared minimum is refused up front.
inline std::vector<VerifyReport> verify_all(int acc = 0, int workers = 1,
                                            const Perturbation* perturb = nullptr) {
    const auto& es = entries();
    if (acc > 0)
        for (const auto& e : es)
            if (acc < e.min_acc)
                throw AccuracyTooLow("registry: entry " + e.id + " needs order >= " +
                                     std::to_string(e.min_acc) + ", got " + std::to_string(acc));
    std::vector<VerifyReport> reports(es.size());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(es.size()));
    if (workers == 1) {
        for (size_t i = 0; i < es.size(); ++i) reports[i] = verify(es[i].id, acc, perturb);
        return reports;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < es.size(); i = next.fetch_add(1))
                reports[i] = verify(es[i].id, acc, perturb);
        });
    }
    for (auto& t : pool) t.join();
    return reports;
}


// ---------------------------------------------------------------------------
// The catalog.  Each entry is a closed recipe: which builders, which monomial
// arguments, which q-sign.  Entries whose sides pass through negative
// q-exponents declare min_acc 10.
// ---------------------------------------------------------------------------
inline const std::vector<Entry>& entries() {
    using namespace detail;
    using qkit::classical;
    using qkit::Params;
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        auto add = [&t](const char* id, const char* anchor, const char* quote, int dacc, int macc,
                        std::function<SidePair(int)> b) {
            t.push_back({id, anchor, quote, dacc, macc, false, std::move(b)});
        };
        auto addx = [&t](const char* id, const char* anchor, const char* quote, int dacc, int macc,
                         std::function<SidePair(int)> b) {
            t.push_back({id, anchor, quote, dacc, macc, true, std::move(b)});
        };
        auto from_classical = [](const char* name, Params p, int step) {
            return [name, p = std::move(p), step](int acc) -> SidePair {
                auto inst = classical(name, p, acc, step);
                return {inst.lhs, inst.rhs};
            };
        };

        add("PW", "Eq. (pwn)", "the number of partitions of", 40, 1, [](int acc) -> SidePair {
            SumSpec s;
            s.n0 = 1;
            s.lead = [](long n) { return qp(static_cast<int>(n)); };
            s.atoms = {
                fin_atom(I, 1, [](long n) { return n; }, [](long n) { return n + 1; }, true),
                inf_atom(qp(2), 2, [](long n) { return 2 * n; }, true),
            };
            return {sum(s, acc), mk(Family::omega, {}, +1, acc).scaled(qp(1)).truncated(acc)};
        });

        add("PN", "Eq. (pnn)", "distinct non-negative parts", 40, 1, [](int acc) -> SidePair {
            SumSpec s;
            s.lead = [](long n) { return qp(static_cast<int>(n)); };
            s.atoms = {
                fin_atom(-qp(1), 1, [](long n) { return n; }, [](long n) { return n; }, false),
                inf_atom(-qp(2), 2, [](long n) { return 2 * n; }, false),
            };
            return {sum(s, acc), mk(Family::nu, {}, -1, acc)};
        });

        add("EPNT1", "Eq. (epnt1)", "new analogues of Euler's pentagonal number theorem", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.n0 = 1;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(-I, 1, [](long n) { return n; }, [](long n) { return n + 1; }, true),
                    inf_atom(-qp(2), 2, [](long n) { return 2 * n; }, true),
                };
                SumSpec r;
                r.lead = [](long j) {
                    return mn((j % 2) ? -1 : 1, 0, 0, static_cast<int>(6 * j * j + 4 * j + 1));
                };
                r.atoms = {fin_atom(-I, 1, [](long j) { return 4 * j + 2; },
                                    [](long) { return 1; }, false)};
                return {sum(l, acc), sum(r, acc)};
            });

        add("EPNT2", "Eq. (epnt2)", "new analogues of Euler's pentagonal number theorem", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(qp(1), 1, [](long n) { return n; }, [](long n) { return n; }, false),
                    inf_atom(qp(2), 2, [](long n) { return 2 * n; }, false),
                };
                SumSpec r;
                r.lead = [](long j) {
                    return mn((j % 2) ? -1 : 1, 0, 0, static_cast<int>(j * (3 * j + 2)));
                };
                r.atoms = {fin_atom(-I, 1, [](long j) { return 2 * j + 1; },
                                    [](long) { return 1; }, false)};
                return {sum(l, acc), sum(r, acc)};
            });

        add("AY_OMEGA", "Eq. (pwnz)", "beautiful two-variable generalizations", 40, 1,
            [](int acc) -> SidePair {
                return {ay_omega_lhs(Z, acc),
                        mk(Family::omega_bi, {Z}, +1, acc).scaled(qp(1)).truncated(acc)};
            });

        add("AY_NU", "Eq. (pnnz)", "beautiful two-variable generalizations", 40, 1,
            [](int acc) -> SidePair {
                return {ay_nu_lhs(Z, acc), mk(Family::nu1, {Z}, -1, acc)};
            });

        add("OMEGA1_OMEGA", "Eq. (omega1omega)", "easily derived by using Andrews' identity", 40, 1,
            [](int acc) -> SidePair {
                QSeries rhs = mk(Family::omega_bi, {Z.pow(2)}, +1, acc / 2).q_power(2);
                return {mk(Family::omega1, {I, Z}, +1, acc), rhs.truncated(acc)};
            });

        add("FUNC_REL", "Theorem 1.1", "linked by a nice functional relation", 30, 1,
            [](int acc) -> SidePair {
                QSeries lhs = mk(Family::nu_tri, {A, Z}, +1, acc);
                QSeries rhs = inf_i(-Z * qp(1), 2, acc) * inf_i(Z * A.inverse() * qp(1), 2, acc) *
                                  qkit::partial_theta(A, 2, 2, acc) -
                              mk(Family::omega1, {A, Z}, +1, acc).scaled(Z * A.inverse() * qp(1));
                return {lhs, rhs.truncated(acc)};
            });

        add("RAM_Z", "Eq. (ramanujanomeganuz)", "functional relation obtained by Andrews", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = mk(Family::nu_bi, {Z}, +1, acc);
                QSeries rhs = inf(qp(2), 2, acc) * inf(-qp(2), 2, acc) * inf(-qp(2), 2, acc) *
                                  inf_i(Z.pow(2) * qp(2), 4, acc) -
                              mk(Family::omega_bi, {Z.pow(2)}, +1, acc / 2)
                                  .q_power(2)
                                  .scaled(Z * qp(1));
                return {lhs, rhs.truncated(acc)};
            });

        add("RAM", "Eq. (ramanujanomeganu)", "Ramanujan's relation between", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = mk(Family::nu, {}, +1, acc);
                QSeries rhs = inf(qp(2), 2, acc) * inf(-qp(2), 2, acc) * inf(-qp(2), 2, acc) *
                                  inf(-qp(2), 2, acc) -
                              mk(Family::omega, {}, +1, acc / 2).q_power(2).scaled(qp(1));
                return {lhs, rhs.truncated(acc)};
            });

        add("THM3", "Theorem 1.2, Eqs. (result1)+(F)", "Let omega_1(alpha,z;q) be defined", 30, 10,
            [](int acc) { return thm3_sides(A, acc); });

        add("THM4", "Theorem 1.3, Eq. (gsayeqn1)", "Let nu(alpha, z; q) be defined", 30, 1,
            [](int acc) { return thm4_sides(A, acc); });

        add("SUM_THETA", "Section 1 display", "easy consequence of the Jacobi triple product", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = qkit::partial_theta(I, 2, 2, acc);
                QSeries rhs = inf(qp(2), 2, acc) * inf(-qp(2), 2, acc) * inf(-qp(2), 2, acc);
                return {lhs, rhs};
            });

        add("JTP", "Eq. (jtpi), standard form", "the Jacobi triple product identity", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = qkit::theta_bilateral(Z, acc);
                QSeries rhs = inf(-Z * qp(1), 2, acc) * inf(-Z.inverse() * qp(1), 2, acc) *
                              inf(qp(2), 2, acc);
                return {lhs, rhs};
            });

        addx("JTP_PRINTED", "Eq. (jtpi), as printed",
             "the Jacobi triple product identity (final factor as printed; expected to fail)", 40,
             1, [](int acc) -> SidePair {
                 QSeries lhs = qkit::theta_bilateral(Z, acc);
                 QSeries rhs = inf(-Z * qp(1), 2, acc) * inf(-Z.inverse() * qp(1), 2, acc) *
                               inf(-qp(2), 2, acc);
                 return {lhs, rhs};
             });

        add("GEA90", "Eq. (gea90_thm1)", "a deep identity of Andrews", 30, 1,
            from_classical("andrews_deep",
                           {{"a", Z}, {"b", A * qp(1)}, {"A", A}, {"B", Z * qp(1)}}, 1));

        add("GAUSS2", "Eq. (gauss)", "q-analogue of Gauss's second theorem", 40, 1,
            from_classical("gauss_second", {{"a", qp(1)}, {"b", -Z.inverse() * qp(1)}}, 1));

        add("FINE", "Eq. (nfine)", "a corrected version of a formula", 30, 1,
            from_classical("fine_corrected", {{"b", -Z * qp(1)}, {"u", -Z * A.inverse() * qp(1)}},
                           1));

        add("LEM_1PSI1", "Lemma 4.1, Eq. (1psi1spleqn)", "For |zq|<1 and |q|<1", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                Monomial lead = Z * qp(1);
                l.lead = [lead](long m) { return lead.pow(m); };
                l.atoms = {
                    fin_atom(-Z.inverse() * qp(1), 2, [](long) { return 0; },
                             [](long m) { return m; }, false),
                    fin_atom(-Z * qp(3), 2, [](long) { return 0; }, [](long m) { return m; },
                             true),
                };
                QSeries rhs = (QSeries::one(acc) + QSeries::from_monomial(Z * qp(1), acc)) *
                              inf(Z.pow(2) * qp(4), 4, acc) * inf(qp(2), 2, acc) *
                              inf(-qp(2), 2, acc) * inf(-qp(2), 2, acc) *
                              inf_i(Z.pow(2) * qp(2), 4, acc);
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("HEINE_INST", "Section 4.1", "Heine's transformation (canned with y realized as zq)",
            40, 1,
            from_classical("heine",
                           {{"a", -Z.inverse()}, {"b", qp(1)}, {"c", -Z * qp(2)}, {"x", Z * qp(1)}},
                           1));

        add("QBINOM", "Eq. (6a)", "we apply the q-binomial theorem", 40, 1,
            from_classical("q_binomial", {{"a", Z.pow(2)}, {"x", qp(1)}}, 2));

        add("ONE_PSI_ONE", "Eq. (1psi1)", "Ramanujan's 1psi1 summation", 40, 1,
            from_classical("one_psi_one",
                           {{"a", -Z.inverse() * qp(1)}, {"b", -Z * qp(3)}, {"t", Z * qp(1)}}, 2));

        add("F_SYM", "Corollary 4.2, Eq. (frel)", "For F(alpha,z;q) defined by", 30, 10,
            [](int acc) -> SidePair {
                QSeries lhs = mk(Family::F_func, {A, Z}, +1, acc);
                QSeries rhs = mk(Family::F_func, {A.inverse(), -Z * A.inverse()}, +1, acc);
                return {lhs, rhs};
            });

        add("GH_SYM", "Eq. (relgh)", "It is straightforward to see (the G part)", 30, 1,
            [](int acc) -> SidePair {
                return {mk(Family::G_def, {A, Z}, +1, acc),
                        mk(Family::G_def, {A.inverse(), -Z * A.inverse()}, +1, acc)};
            });

        add("GH_SYM_H", "Eq. (relgh)", "It is straightforward to see (the H part)", 30, 1,
            [](int acc) -> SidePair {
                return {mk(Family::H_def, {A, Z}, +1, acc),
                        mk(Family::H_def, {A.inverse(), -Z * A.inverse()}, +1, acc)};
            });

        add("RAM_RECIP", "Theorem 4.3, Eq. (reciprocitytheorem)", "his reciprocity theorem", 30, 1,
            from_classical("ramanujan_reciprocity", {{"a", Z}, {"b", A}}, 1));

        add("KANG_SPECIAL", "Eq. (3varrt) at a=zq, b=-zq/alpha, c=z^2q^2/alpha",
            "special case a=zq", 30, 10,
            from_classical("kang_reciprocity",
                           {{"a", Z * qp(1)},
                            {"b", -Z * A.inverse() * qp(1)},
                            {"c", Z.pow(2) * A.inverse() * qp(2)}},
                           2));

        add("RHO3_LHS", "Eq. (app1)", "where rho_3(a, b, c)", 30, 10, [](int acc) -> SidePair {
            const int w = acc + 3;
            SumSpec l;
            Monomial lead = Z * qp(1);
            l.lead = [lead](long m) { return lead.pow(m); };
            l.atoms = {
                fin_atom(-A * Z.inverse() * qp(1), 2, [](long) { return 0; },
                         [](long m) { return m; }, false),
                fin_atom(-Z * qp(3), 2, [](long) { return 0; }, [](long m) { return m; }, true),
            };
            QSeries rho = mk(Family::rho3,
                             {Z * qp(1), -Z * A.inverse() * qp(1), Z.pow(2) * A.inverse() * qp(2)},
                             +1, w, QStep(2));
            QSeries rhs = qkit::geo_inverse(A * Z.inverse() * qp(-1), w) * rho;
            return {sum(l, acc), rhs.truncated(acc)};
        });

        add("RHO3_RHS", "Eq. (app2)", "where rho_3(a, b, c)", 30, 10, [](int acc) -> SidePair {
            const int w = acc + 3;
            SumSpec l;
            Monomial lead = -Z * A.inverse() * qp(1);
            l.lead = [lead](long m) { return lead.pow(m); };
            l.atoms = {
                fin_atom(Z.inverse() * qp(1), 2, [](long) { return 0; }, [](long m) { return m; },
                         false),
                fin_atom(Z * A.inverse() * qp(3), 2, [](long) { return 0; },
                         [](long m) { return m; }, true),
            };
            QSeries rho = mk(Family::rho3,
                             {-Z * A.inverse() * qp(1), Z * qp(1), Z.pow(2) * A.inverse() * qp(2)},
                             +1, w, QStep(2));
            QSeries rhs = qkit::geo_inverse(-Z.inverse() * qp(-1), w) * rho;
            return {sum(l, acc), rhs.truncated(acc)};
        });

        add("COV", "Eq. (cov)", "Replace n by -n-1", 40, 1, [](int acc) -> SidePair {
            QSeries lhs = qkit::partial_theta(A, 2, 2, acc).scaled(A);
            QSeries rhs = QSeries::zero(acc);
            for (long n = -1; n * n + n <= acc; --n)
                rhs += QSeries::from_monomial(
                    mn(1, 0, static_cast<int>(-n), static_cast<int>(n * n + n)), acc);
            return {lhs, rhs};
        });

        add("JAC", "Eq. (jac)", "The Jacobi triple product identity gives", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = qkit::theta_bilateral(A * qp(-1), acc);
                QSeries rhs = inf(-A, 2, acc) * inf(-A.inverse() * qp(2), 2, acc) *
                              inf(qp(2), 2, acc);
                return {lhs, rhs};
            });

        add("PFAFF", "Eq. (kum)", "q-analogue of Pfaff's transformation", 30, 1,
            from_classical("jackson_pfaff",
                           {{"a", qp(2)},
                            {"b", Z.pow(2) * A.inverse() * qp(2)},
                            {"c", -Z * qp(3)},
                            {"x", Z * qp(1)}},
                           2));

        add("EQ41", "Eq. (eq41)", "From [Equation (41)]", 40, 1,
            from_classical("eq41", {{"x", Z * qp(1)}}, 1));

        add("EX6", "Eq. (andrewsex6)", "p. 29, Exercise 6", 30, 1, [](int acc) -> SidePair {
            // sum (q;q^2)_m (-q a^2/z)^m = nu(a^2/z, -a^2/z; -q)
            SumSpec l;
            Monomial lead = -A.pow(2) * Z.inverse() * qp(1);
            l.lead = [lead](long m) { return lead.pow(m); };
            l.atoms = {fin_atom(qp(1), 2, [](long) { return 0; }, [](long m) { return m; },
                                false)};
            Monomial aa = A.pow(2) * Z.inverse();
            return {sum(l, acc), mk(Family::nu_tri, {aa, -aa}, -1, acc)};
        });

        add("NU_RECIP", "Eq. (fromreciprocity)", "Let nu(alpha, z; q) be defined in", 30, 1,
            [](int acc) -> SidePair {
                QSeries lhs = mk(Family::nu_tri, {A, Z}, +1, acc) +
                              mk(Family::nu_tri, {A.inverse(), -Z * A.inverse()}, +1, acc)
                                  .scaled(A.inverse());
                QSeries rhs = inf(-A * qp(2), 2, acc) * inf(-A.inverse(), 2, acc) *
                              inf(qp(2), 2, acc) * inf_i(-Z * qp(1), 2, acc) *
                              inf_i(Z * A.inverse() * qp(1), 2, acc);
                return {lhs.truncated(acc), rhs.truncated(acc)};
            });

        add("COR52", "Corollary 5.2, Eq. (newprrof1)",
            "For |q|<1 and z in Z (verified with symbolic z; the proof text cites the first "
            "main theorem but manifestly uses the second)",
            40, 1, [](int acc) -> SidePair {
                SumSpec r;
                r.lead = [](long n) {
                    return Z.pow(n) * qp(static_cast<int>(n * n + n));
                };
                r.atoms = {fin_atom(qp(1), 2, [](long) { return 0; },
                                    [](long n) { return n + 1; }, true)};
                return {ay_nu_lhs(Z, acc), sum(r, acc)};
            });

        add("SPAB", "Eq. (spab)", "replace z and q by -1/z and -q", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = mk(Family::nu_tri, {Z.inverse(), -Z.inverse()}, -1, acc);
                QSeries rhs = inf(-Z, 2, acc) * inf(-Z.inverse() * qp(2), 2, acc) *
                                  inf(qp(2), 2, acc) * inf_i(qp(1), 2, acc) *
                                  inf_i(-Z.inverse() * qp(1), 2, acc) -
                              mk(Family::nu1, {Z}, -1, acc).scaled(Z);
                return {lhs, rhs.truncated(acc)};
            });

        add("SPAC", "Eq. (spac)", "using (gauss) with a=q and b=-q/z", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n * (n + 1) / 2)); };
                l.atoms = {
                    fin_atom(-Z.inverse(), 1, [](long) { return 0; },
                             [](long n) { return n + 1; }, false),
                    fin_atom(-Z.inverse() * qp(1), 2, [](long) { return 0; },
                             [](long n) { return n + 1; }, true),
                };
                QSeries rhs = inf(qp(2), 2, acc) * inf(-Z.inverse(), 2, acc) *
                              inf_i(qp(1), 2, acc) * inf_i(-Z.inverse() * qp(1), 2, acc);
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("THM3_A1", "Theorem 1.2 at alpha=1", "Let alpha=1 in Theorem", 40, 10,
            [](int acc) { return thm3_sides(I, acc); });

        add("F_A1", "Section 4.1", "By Lemma 4.1, F(1,z,q)=0", 40, 1, [](int acc) -> SidePair {
            return {mk(Family::F_func, {I, Z}, +1, acc), QSeries::zero(acc)};
        });

        add("THM4_A1", "Theorem 1.3 at alpha=1, Eq. (spad)", "Let alpha=1 in Theorem", 40, 1,
            [](int acc) { return thm4_sides(I, acc); });

        add("THM_AZ", "Theorem 6.1, Eq. (a=zfunctionaleqn)", "The case alpha=z", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = mk(Family::nu_tri, {Z, -Z}, -1, acc) +
                              mk(Family::omega1, {Z, -Z}, -1, acc).scaled(mn(2, 0, 0, 1));
                return {lhs.truncated(acc), smallest_part_overlined_sum(Z, acc)};
            });

        add("P24", "Section 1 display", "using Andrews' identity", 40, 1,
            from_classical("lost_p24", {{"a", qp(-2)}, {"b", Z.pow(2) * qp(-2)}}, 4));

        add("P25", "Section 6.1 display", "use the identity", 40, 1,
            from_classical("lost_p25", {{"a", Z}}, 1));

        add("REL_MZ", "Eq. (relation-z)", "with z replaced by -z, q replaced by -q, and alpha=z",
            40, 1, [](int acc) -> SidePair {
                QSeries lhs = qkit::partial_theta(Z, 2, 2, acc);
                QSeries inner = mk(Family::nu_tri, {Z, -Z}, -1, acc) +
                                mk(Family::omega1, {Z, -Z}, -1, acc).scaled(qp(1));
                QSeries rhs = inf(-Z * qp(1), 2, acc) * inf(qp(1), 2, acc) * inner;
                return {lhs, rhs.truncated(acc)};
            });

        add("SOS_A", "Eq. (6.3.5)", "found in Ramanujan's lost notebook", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(-Z * qp(1), 2, [](long) { return 0; }, [](long n) { return n; },
                             false),
                    fin_atom(-qp(1), 1, [](long) { return 0; }, [](long n) { return n; }, true),
                };
                QSeries theta = qkit::partial_theta(Z, 2, 2, acc);
                QSeries rhs = theta + theta -
                              inf(qp(1), 2, acc) * inf(-Z * qp(1), 2, acc) *
                                  mk(Family::nu_tri, {Z, -Z}, -1, acc);
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("SOS_B", "Eq. (10.4b)", "the second identity is not given anywhere in the literature",
            40, 1, [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(-Z * qp(1), 2, [](long) { return 0; }, [](long n) { return n; },
                             false),
                    fin_atom(-qp(1), 1, [](long) { return 0; }, [](long n) { return n; }, true),
                };
                QSeries rhs = qkit::partial_theta(Z, 2, 2, acc) +
                              inf(qp(1), 2, acc) * inf(-Z * qp(1), 2, acc) *
                                  mk(Family::omega1, {Z, -Z}, -1, acc).scaled(qp(1));
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("RF2", "Eq. (rogers-fine2)", "special case of the Rogers-Fine identity", 40, 1,
            from_classical("rogers_fine_first", {{"a", qp(-1)}, {"x", -Z * qp(1)}}, 2));

        add("RF", "Eq. (rogers-fine)", "special case of the Rogers-Fine identity", 40, 1,
            from_classical("rogers_fine_second", {{"a", qp(-1)}, {"x", -Z * qp(1)}}, 2));

        add("COR_AZ", "Corollary 6.3, Eq. (a=zfunctionalcoro1eqn)",
            "substitute the far-right side", 40, 1, [](int acc) -> SidePair {
                QSeries lhs = smallest_part_overlined_sum(Z, acc) -
                              mk(Family::omega1, {Z, -Z}, -1, acc).scaled(mn(2, 0, 0, 1));
                SumSpec r;
                r.lead = [](long n) {
                    return mn((n % 2) ? -1 : 1, static_cast<int>(2 * n), 0,
                              static_cast<int>(3 * n * n + 2 * n));
                };
                r.atoms = {
                    fin_atom(qp(1), 2, [](long) { return 0; }, [](long n) { return n; }, false),
                    fin_atom(-Z * qp(2), 1, [](long n) { return 4 * n; }, [](long) { return 1; },
                             false),
                    fin_atom(-Z * qp(1), 2, [](long) { return 0; }, [](long n) { return n + 1; },
                             true),
                };
                return {lhs.truncated(acc), sum(r, acc)};
            });

        add("AZ_NEG1", "Corollary 6.5, Eq. (alphaagain)", "Put z=-1", 40, 1,
            [](int acc) -> SidePair {
                QSeries s2 = odd_parts_weighted_sum(acc);
                QSeries lhs = smallest_part_overlined_sum(-I, acc) - s2 - s2;
                SumSpec r;
                r.lead = [](long n) {
                    return mn((n % 2) ? -1 : 1, 0, 0, static_cast<int>(3 * n * n + 2 * n));
                };
                r.atoms = {fin_atom(-I, 1, [](long n) { return 2 * n + 1; },
                                    [](long) { return 1; }, false)};
                return {lhs.truncated(acc), sum(r, acc)};
            });

        add("EULER_DISG", "Section 6.1 displays", "disguised form of Euler's theorem", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {inf_atom(-qp(1), 1, [](long n) { return n; }, false)};
                SumSpec r;
                r.lead = [](long n) { return qp(static_cast<int>(2 * n + 1)); };
                r.atoms = {fin_atom(qp(1), 2, [](long) { return 0; },
                                    [](long n) { return n + 1; }, true)};
                QSeries rsum = sum(r, acc);
                return {sum(l, acc), (QSeries::one(acc) + rsum + rsum).truncated(acc)};
            });

        add("PSTAR_GF", "Eq. (p^*n)", "the number of overpartitions of", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = QSeries::one(acc);
                for (int n = 1; n <= acc; ++n)
                    lhs += QSeries::from_monomial(mn(partitions::p_star(n).count, 0, 0, n), acc);
                return {lhs, smallest_part_overlined_sum(-I, acc)};
            });

        add("PSUBSTAR_GF", "Eq. (p_*n)", "the weight of the partition is equal to", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = QSeries::zero(acc);
                for (int n = 1; n <= acc; ++n)
                    lhs += QSeries::from_monomial(mn(partitions::p_substar(n), 0, 0, n), acc);
                return {lhs, odd_parts_weighted_sum(acc)};
            });

        add("Z_NEG_QINV", "Section 6.2 corollary", "See also Kang's paper", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return A.pow(n) * qp(static_cast<int>(n * (n + 1) / 2)); };
                l.atoms = {fin_atom(-A * qp(1), 1, [](long) { return 0; },
                                    [](long n) { return n + 1; }, true)};
                return {sum(l, acc), QSeries::one(acc)};
            });

        add("ALPHA_NEG_Z", "Corollary 6.6, Eq. (alpha=-zeqn)",
            "the series on the extreme right-hand side vanishes", 40, 1,
            [](int acc) -> SidePair {
                return {mk(Family::nu_tri, {Z, -Z}, -1, acc), smallest_part_plain_sum(Z, acc)};
            });

        add("OMEGA_DIFF", "Section 6.3 second corollary",
            "omega(z,-z;-q) (two-argument omega read as omega_1; both sides scaled by 2q to stay "
            "over integer coefficients)",
            40, 1, [](int acc) -> SidePair {
                QSeries lhs = mk(Family::omega1, {Z, -Z}, -1, acc).scaled(mn(2, 0, 0, 1));
                QSeries rhs =
                    smallest_part_overlined_sum(Z, acc) - smallest_part_plain_sum(Z, acc);
                return {lhs.truncated(acc), rhs.truncated(acc)};
            });

        add("EULER_AT", "Corollary 6.8, Eq. (aplha=-z=-qeqn)", "Let z=-q", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.n0 = 1;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {inf_atom(-I, 1, [](long n) { return n; }, true)};
                QSeries rhs = QSeries::one(acc) - inf(qp(1), 2, acc);
                return {sum(l, acc), rhs};
            });

        add("EULER_THM", "Section 6.3 display", "Recall Euler's theorem", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) {
                    return mn((n % 2) ? -1 : 1, static_cast<int>(n), 0,
                              static_cast<int>(n * n - n));
                };
                l.atoms = {fin_atom(qp(2), 2, [](long) { return 0; }, [](long n) { return n; },
                                    true)};
                return {sum(l, acc), inf(Z, 2, acc)};
            });

        add("CORA", "Eq. (cora)", "Set z=q above to deduce", 40, 1, [](int acc) -> SidePair {
            QSeries lhs = inf(qp(1), 2, acc) - QSeries::one(acc);
            QSeries rhs = mk(Family::nu_tri, {-qp(1), qp(1)}, -1, acc + 1).scaled(-qp(1));
            return {lhs, rhs.truncated(acc)};
        });

        add("THM_AQ", "Theorem 6.9, Eq. (alpha=qeqn)", "For z in C and |q|<1", 40, 10,
            [](int acc) -> SidePair {
                const int w = acc + 2;
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(-Z, 1, [](long n) { return n; }, [](long n) { return n + 1; },
                             false),
                    inf_atom(-Z * qp(2), 2, [](long n) { return 2 * n; }, false),
                };
                Monomial arg = Z.inverse() * qp(2);
                QSeries part1 =
                    mk(Family::nu_tri, {arg, -arg}, -1, w).scaled(-Z.inverse() * qp(1));
                QSeries prod = inf(-qp(1), 1, w) * inf(qp(2), 2, w) *
                               inf(-Z.inverse() * qp(2), 2, w) *
                               inf_i(-Z.inverse() * qp(3), 2, w);
                QSeries part2 =
                    (inf(-Z, 2, w) * (prod - QSeries::one(w))).scaled(qp(-1));
                return {sum(l, acc), (part1 + part2).truncated(acc)};
            });

        add("PHI_COR", "Corollary 6.10, Eq. (phiqa)", "the corrected version of", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(-I, 1, [](long n) { return n; }, [](long n) { return n; }, false),
                    inf_atom(-qp(1), 2, [](long n) { return 2 * n; }, false),
                };
                QSeries rhs = QSeries::one(acc) - mk(Family::phi, {}, +1, acc) +
                              inf(qp(2), 2, acc) * inf(-qp(1), 2, acc) * inf(-qp(1), 2, acc) *
                                  inf(-qp(1), 2, acc);
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("COR_ZQ", "Corollary 6.11, Eq. (eqnz=qTh10.12)", "has the following companion", 40, 1,
            [](int acc) -> SidePair {
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(-I, 1, [](long n) { return n; }, [](long n) { return n; }, false),
                    inf_atom(-qp(1), 2, [](long n) { return 2 * n; }, false),
                };
                QSeries rhs = QSeries::one(acc) +
                              mk(Family::nu_tri, {qp(1), -I}, +1, acc).scaled(mn(2, 0, 0, 1));
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("PPRIME_GF", "Eq. (gfeven)", "smallest part can occur at most twice", 40, 1,
            [](int acc) -> SidePair {
                QSeries lhs = QSeries::zero(acc);
                for (int n = 0; n <= acc; ++n)
                    lhs += QSeries::from_monomial(mn(partitions::p_prime(n).count, 0, 0, n), acc);
                SumSpec r;
                r.lead = [](long n) { return qp(static_cast<int>(n)); };
                r.atoms = {
                    fin_atom(-I, 1, [](long n) { return n; }, [](long n) { return n; }, false),
                    inf_atom(-qp(1), 2, [](long n) { return 2 * n; }, false),
                };
                return {lhs, sum(r, acc)};
            });

        add("CORC", "Corollary 6.13", "nu(1/q,1;-q)", 40, 10, [](int acc) -> SidePair {
            QSeries lhs = mk(Family::nu_tri, {qp(-1), I}, -1, acc);
            QSeries rhs = QSeries::one(acc) +
                          mk(Family::nu_tri, {qp(1), -I}, +1, acc).scaled(mn(2, 0, 0, 1));
            return {lhs, rhs.truncated(acc)};
        });

        add("AQ_ZNEG1", "Eq. (alpha=q, z=-1)",
            "Let z=-1 in Theorem (the printed denominator (-q^3;q^2)_n disagrees with the "
            "theorem it specializes; the sign-corrected (q^3;q^2)_n is verified)",
            40, 10, [](int acc) -> SidePair {
                const int w = acc + 2;
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(I, 1, [](long n) { return n; }, [](long n) { return n + 1; },
                             false),
                    inf_atom(qp(2), 2, [](long n) { return 2 * n; }, false),
                };
                SumSpec r;
                r.n0 = 1;
                r.lead = [](long n) {
                    return mn((n % 2) ? -1 : 1, 0, 0, static_cast<int>(n * n + n));
                };
                r.atoms = {fin_atom(qp(3), 2, [](long) { return 0; }, [](long n) { return n; },
                                    true)};
                QSeries rhs = sum(r, w).scaled(-qp(-1));
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("FINAL_COR", "last Section 6 corollary", "Set z=-q^2 in Theorem", 40, 10,
            [](int acc) -> SidePair {
                const int w = acc + 2;
                SumSpec l;
                l.lead = [](long n) { return qp(static_cast<int>(n)); };
                l.atoms = {
                    fin_atom(qp(2), 1, [](long n) { return n; }, [](long n) { return n + 1; },
                             false),
                    inf_atom(qp(4), 2, [](long n) { return 2 * n; }, false),
                };
                SumSpec r;
                r.lead = [](long n) {
                    return mn((n % 2) ? -1 : 1, 0, 0, static_cast<int>(n * n + n));
                };
                r.atoms = {fin_atom(qp(1), 2, [](long) { return 0; },
                                    [](long n) { return n + 1; }, true)};
                QSeries rhs = (sum(r, w) - inf(qp(2), 2, w)).scaled(qp(-1));
                return {sum(l, acc), rhs.truncated(acc)};
            });

        add("EQUIV", "Eq. (equivalence)", "at the same level of generality", 30, 10,
            [](int acc) -> SidePair {
                auto pairs = mock::equivalence_choi(acc);
                return {pairs[0].lhs, pairs[0].rhs};
            });

        add("EQUIV_NU", "Eq. (equivalence)", "at the same level of generality", 30, 10,
            [](int acc) -> SidePair {
                auto pairs = mock::equivalence_choi(acc);
                return {pairs[1].lhs, pairs[1].rhs};
            });

        add("NU0_REL", "Section 1 display", "nu(alpha, z; q) = nu_0(-z,-alpha/z;q)", 30, 1,
            [](int acc) -> SidePair {
                return {mk(Family::nu_tri, {A, Z}, +1, acc),
                        mk(Family::nu0, {-Z, -A * Z.inverse()}, +1, acc)};
            });

        add("G_OMEGA", "Eq. (omegaG)", "written in terms of the function", 30, 1,
            [](int acc) -> SidePair {
                QSeries G = mk(Family::bigG, {A * qp(1), Z * qp(1)}, +1, acc, QStep(2));
                QSeries rhs = G * qkit::geo_inverse(A * qp(1), acc) *
                              qkit::geo_inverse(Z * qp(1), acc);
                return {mk(Family::omega0, {A, Z}, +1, acc), rhs.truncated(acc)};
            });

        add("G_G3", "Section 1 display", "universal mock theta function defined by", 40, 1,
            [](int acc) -> SidePair {
                return {mk(Family::bigG, {Z, Z.inverse() * qp(1)}, +1, acc, QStep(1)),
                        mk(Family::g3, {Z}, +1, acc)};
            });

        add("ANDREWS_ALT", "Section 1 display", "Andrews proved that (the omega form)", 40, 1,
            [](int acc) -> SidePair {
                auto p = mock::andrews_alt_forms(Family::omega_bi, Z, acc);
                return {p.lhs, p.rhs};
            });

        add("ANDREWS_ALT_NU", "Section 1 display", "Andrews proved that (the nu form)", 40, 1,
            [](int acc) -> SidePair {
                auto p = mock::andrews_alt_forms(Family::nu_bi, Z, acc);
                return {p.lhs, p.rhs};
            });

        return t;
    }();
    return table;
}

}  // namespace qmock::registry
