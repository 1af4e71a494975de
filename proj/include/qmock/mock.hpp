#pragma once

#include <string>
#include <vector>

#include "qmock/qkit.hpp"

namespace qmock::mock {

using qkit::QStep;

enum class Family {
    omega,
    nu,
    phi,
    omega_bi,
    nu_bi,
    nu1,
    g3,
    omega0,
    nu0,
    omega1,
    nu_tri,
    omega_star,
    nu_star,
    F_func,
    G_def,
    H_def,
    bigG,
    rho3,
};

struct FamilyInfo {
    Family family;
    const char* name;
    int arity;
    bool has_step;
    const char* args[3];  // argument slot names, nullptr-padded
};

inline const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> table = {
        {Family::omega, "omega", 0, false, {nullptr, nullptr, nullptr}},
        {Family::nu, "nu", 0, false, {nullptr, nullptr, nullptr}},
        {Family::phi, "phi", 0, false, {nullptr, nullptr, nullptr}},
        {Family::omega_bi, "omega_bi", 1, false, {"z", nullptr, nullptr}},
        {Family::nu_bi, "nu_bi", 1, false, {"z", nullptr, nullptr}},
        {Family::nu1, "nu1", 1, false, {"z", nullptr, nullptr}},
        {Family::g3, "g3", 1, false, {"x", nullptr, nullptr}},
        {Family::omega0, "omega0", 2, false, {"y", "z", nullptr}},
        {Family::nu0, "nu0", 2, false, {"y", "z", nullptr}},
        {Family::omega1, "omega1", 2, false, {"a", "z", nullptr}},
        {Family::nu_tri, "nu_tri", 2, false, {"a", "z", nullptr}},
        {Family::omega_star, "omega_star", 2, false, {"a", "z", nullptr}},
        {Family::nu_star, "nu_star", 2, false, {"a", "z", nullptr}},
        {Family::F_func, "F_func", 2, false, {"a", "z", nullptr}},
        {Family::G_def, "G_def", 2, false, {"a", "z", nullptr}},
        {Family::H_def, "H_def", 2, false, {"a", "z", nullptr}},
        {Family::bigG, "bigG", 2, true, {"a", "b", nullptr}},
        {Family::rho3, "rho3", 3, true, {"a", "b", "c"}},
    };
    return table;
}

inline const FamilyInfo& info(Family f) {
    for (const auto& fi : families())
        if (fi.family == f) return fi;
    throw Error("mock: unknown family enum");
}

inline Family family_from_name(const std::string& name) {
    for (const auto& fi : families())
        if (name == fi.name) return fi.family;
    throw UnknownName("mock: unknown family '" + name + "'");
}

struct MockSpec {
    Family family;
    std::vector<Monomial> args;
    int qsign = +1;
    QStep step{1};  // bigG and rho3 only
};

namespace detail {

using qkit::SumSpec;

inline Monomial mono(long c, int ez, int ea, int eq) { return Monomial(Int(c), ez, ea, eq); }

// atoms with argument bases: the base exponent never sign-flips, the shift is
// the template exponent
inline qkit::PochAtom afin(Monomial base, int t, std::function<long(long)> shift,
                           std::function<long(long)> count, bool inverted) {
    return qkit::fin_atom(std::move(base), t, std::move(shift), std::move(count), inverted, false);
}
inline qkit::PochAtom ainf(Monomial base, int t, std::function<long(long)> shift, bool inverted) {
    return qkit::inf_atom(std::move(base), t, std::move(shift), inverted, false);
}

inline Monomial require_unit(const Monomial& m, const char* family, const char* slot) {
    if (!m.is_unit())
        throw IllegalSpec(std::string(family) + ": argument '" + slot +
                          "' must have coefficient +-1 (it gets inverted)");
    return m;
}

inline void require_q_free_for_negation(const MockSpec& spec, const FamilyInfo& fi) {
    if (spec.qsign >= 0) return;
    for (const auto& a : spec.args)
        if (a.eq != 0)
            throw IllegalSpec(std::string(fi.name) +
                              ": q-sign -1 with q-carrying arguments is not supported for "
                              "families with closed-form prefactors");
}

inline QSeries run_sum(const SumSpec& spec, int acc, int qsign) {
    try {
        return qkit::telescoped_sum(spec, acc, qsign);
    } catch (const NonTerminating& e) {
        throw IllegalSpec(std::string("mock build: ") + e.what());
    }
}

// shared inner sum of F(a, z; q):
// sum_m (-a/(zq); q^2)_{m+1} (zq)^m / (-zq; q^2)_{m+1}
inline QSeries f_inner_sum(const Monomial& ma, const Monomial& mz, int acc, int qsign) {
    SumSpec s;
    s.lead = [mz](long m) { return mz.pow(m) * mono(1, 0, 0, static_cast<int>(m)); };
    s.lead_tpl = [](long m) { return m; };
    s.atoms = {
        afin(-ma * mz.inverse(), 2, [](long) { return -1; }, [](long m) { return m + 1; }, false),
        afin(-mz, 2, [](long) { return 1; }, [](long m) { return m + 1; }, true),
    };
    return run_sum(s, acc, qsign);
}

}  // namespace detail

// Truncated expansion of the family's defining series with arguments
// substituted before truncation.  The q-sign flips the defining template's
// q-powers; argument monomials pass through verbatim.
inline QSeries build(const MockSpec& spec, int acc) {
    using namespace detail;
    const FamilyInfo& fi = info(spec.family);
    if (static_cast<int>(spec.args.size()) != fi.arity)
        throw IllegalSpec(std::string(fi.name) + ": expected " + std::to_string(fi.arity) +
                          " argument(s), got " + std::to_string(spec.args.size()));
    const int sg = spec.qsign;

    switch (spec.family) {
        case Family::omega: {
            // sum q^{2n^2+2n} / (q;q^2)_{n+1}^2
            SumSpec s;
            s.lead = [](long n) { return mono(1, 0, 0, static_cast<int>(2 * n * n + 2 * n)); };
            s.atoms = {
                afin(mono(1, 0, 0, 0), 2, [](long) { return 1; }, [](long n) { return n + 1; },
                     true),
                afin(mono(1, 0, 0, 0), 2, [](long) { return 1; }, [](long n) { return n + 1; },
                     true),
            };
            return run_sum(s, acc, sg);
        }
        case Family::nu: {
            // sum q^{n^2+n} / (-q;q^2)_{n+1}
            SumSpec s;
            s.lead = [](long n) { return mono(1, 0, 0, static_cast<int>(n * n + n)); };
            s.atoms = {afin(mono(-1, 0, 0, 0), 2, [](long) { return 1; },
                            [](long n) { return n + 1; }, true)};
            return run_sum(s, acc, sg);
        }
        case Family::phi: {
            // sum q^{n^2} / (-q^2;q^2)_n
            SumSpec s;
            s.lead = [](long n) { return mono(1, 0, 0, static_cast<int>(n * n)); };
            s.atoms = {afin(mono(-1, 0, 0, 0), 2, [](long) { return 2; },
                            [](long n) { return n; }, true)};
            return run_sum(s, acc, sg);
        }
        case Family::omega_bi: {
            // sum z^n q^{2n^2+2n} / ((q;q^2)_{n+1} (zq;q^2)_{n+1})
            Monomial z = spec.args[0];
            SumSpec s;
            s.lead = [z](long n) {
                return z.pow(n) * mono(1, 0, 0, static_cast<int>(2 * n * n + 2 * n));
            };
            s.lead_tpl = [](long n) { return 2 * n * n + 2 * n; };
            s.atoms = {
                afin(mono(1, 0, 0, 0), 2, [](long) { return 1; }, [](long n) { return n + 1; },
                     true),
                afin(z, 2, [](long) { return 1; }, [](long n) { return n + 1; }, true),
            };
            return run_sum(s, acc, sg);
        }
        case Family::nu_bi: {
            // sum q^{n^2+n} / (-zq;q^2)_{n+1}
            Monomial z = spec.args[0];
            SumSpec s;
            s.lead = [](long n) { return mono(1, 0, 0, static_cast<int>(n * n + n)); };
            s.atoms = {afin(-z, 2, [](long) { return 1; }, [](long n) { return n + 1; }, true)};
            return run_sum(s, acc, sg);
        }
        case Family::nu1: {
            // sum z^n q^{n^2+n} / (-q;q^2)_{n+1}
            Monomial z = spec.args[0];
            SumSpec s;
            s.lead = [z](long n) { return z.pow(n) * mono(1, 0, 0, static_cast<int>(n * n + n)); };
            s.lead_tpl = [](long n) { return n * n + n; };
            s.atoms = {afin(mono(-1, 0, 0, 0), 2, [](long) { return 1; },
                            [](long n) { return n + 1; }, true)};
            return run_sum(s, acc, sg);
        }
        case Family::g3: {
            // (1-x)(1-q/x) g3(x, q), with the (1-x) factor cancelled into the
            // denominator: (1 - q/x) sum q^{n(n+1)} / ((xq;q)_n (q/x;q)_{n+1})
            require_q_free_for_negation(spec, fi);
            Monomial x = require_unit(spec.args[0], "g3", "x");
            SumSpec s;
            s.lead = [](long n) { return mono(1, 0, 0, static_cast<int>(n * n + n)); };
            s.atoms = {
                afin(x, 1, [](long) { return 1; }, [](long n) { return n; }, true),
                afin(x.inverse(), 1, [](long) { return 1; }, [](long n) { return n + 1; }, true),
            };
            QSeries sum = run_sum(s, acc, sg);
            Monomial pre_f = x.inverse() * mono(1, 0, 0, 1);
            if (sg < 0) pre_f.c = -pre_f.c;
            QSeries pre = QSeries::one(acc) - QSeries::from_monomial(pre_f, acc);
            return pre * sum;
        }
        case Family::omega0: {
            // sum y^n z^n q^{2n^2+2n} / ((yq;q^2)_{n+1} (zq;q^2)_{n+1})
            Monomial y = spec.args[0], z = spec.args[1];
            SumSpec s;
            s.lead = [y, z](long n) {
                return y.pow(n) * z.pow(n) * mono(1, 0, 0, static_cast<int>(2 * n * n + 2 * n));
            };
            s.lead_tpl = [](long n) { return 2 * n * n + 2 * n; };
            s.atoms = {
                afin(y, 2, [](long) { return 1; }, [](long n) { return n + 1; }, true),
                afin(z, 2, [](long) { return 1; }, [](long n) { return n + 1; }, true),
            };
            return run_sum(s, acc, sg);
        }
        case Family::nu0: {
            // sum y^n z^n q^{n^2+n} / (yq;q^2)_{n+1}
            Monomial y = spec.args[0], z = spec.args[1];
            SumSpec s;
            s.lead = [y, z](long n) {
                return y.pow(n) * z.pow(n) * mono(1, 0, 0, static_cast<int>(n * n + n));
            };
            s.lead_tpl = [](long n) { return n * n + n; };
            s.atoms = {afin(y, 2, [](long) { return 1; }, [](long n) { return n + 1; }, true)};
            return run_sum(s, acc, sg);
        }
        case Family::omega1: {
            // sum q^{2n} / ((-zq;q^2)_{n+1} (zq/a;q^2)_{n+1})
            Monomial a = require_unit(spec.args[0], "omega1", "a");
            Monomial z = spec.args[1];
            SumSpec s;
            s.lead = [](long n) { return mono(1, 0, 0, static_cast<int>(2 * n)); };
            s.atoms = {
                afin(-z, 2, [](long) { return 1; }, [](long n) { return n + 1; }, true),
                afin(z * a.inverse(), 2, [](long) { return 1; }, [](long n) { return n + 1; },
                     true),
            };
            return run_sum(s, acc, sg);
        }
        case Family::nu_tri: {
            // sum a^n q^{n^2+n} / (-zq;q^2)_{n+1}
            Monomial a = spec.args[0], z = spec.args[1];
            SumSpec s;
            s.lead = [a](long n) { return a.pow(n) * mono(1, 0, 0, static_cast<int>(n * n + n)); };
            s.lead_tpl = [](long n) { return n * n + n; };
            s.atoms = {afin(-z, 2, [](long) { return 1; }, [](long n) { return n + 1; }, true)};
            return run_sum(s, acc, sg);
        }
        case Family::omega_star: {
            // sum q^{2(n-1)^2 - 6} a^{2n} z^{4(n+1)} / ((z^2/q;q^2)_{n+1} (a^2 z^2/q^3;q^2)_{n+1})
            Monomial a = spec.args[0], z = spec.args[1];
            SumSpec s;
            s.lead = [a, z](long n) {
                return a.pow(2 * n) * z.pow(4 * (n + 1)) *
                       mono(1, 0, 0, static_cast<int>(2 * (n - 1) * (n - 1) - 6));
            };
            s.lead_tpl = [](long n) { return 2 * (n - 1) * (n - 1) - 6; };
            s.atoms = {
                afin(z.pow(2), 2, [](long) { return -1; }, [](long n) { return n + 1; }, true),
                afin(a.pow(2) * z.pow(2), 2, [](long) { return -3; },
                     [](long n) { return n + 1; }, true),
            };
            return run_sum(s, acc, sg);
        }
        case Family::nu_star: {
            // sum q^{n^2-n} z^{2n} / (-a^2 z^2/q^3;q^2)_{n+1}
            Monomial a = spec.args[0], z = spec.args[1];
            SumSpec s;
            s.lead = [z](long n) { return z.pow(2 * n) * mono(1, 0, 0, static_cast<int>(n * n - n)); };
            s.lead_tpl = [](long n) { return n * n - n; };
            s.atoms = {afin(-(a.pow(2) * z.pow(2)), 2, [](long) { return -3; },
                            [](long n) { return n + 1; }, true)};
            return run_sum(s, acc, sg);
        }
        case Family::F_func: {
            // (1/((-zq^2/a;q^2)_inf (zq^2;q^2)_inf)) *
            //   ( q^2/(1+zq/a) * sum_m (-a/(zq);q^2)_{m+1} (zq)^m / (-zq;q^2)_{m+1}
            //     - (aq/z) (z^2q^2/a;q^2)_inf / ((z^2q^2;q^4)_inf (z^2q^2/a^2;q^4)_inf)
            //       * sum_n a^n q^{n^2+n} )
            require_q_free_for_negation(spec, fi);
            Monomial a = require_unit(spec.args[0], "F_func", "a");
            Monomial z = require_unit(spec.args[1], "F_func", "z");
            const int w = acc + 4;
            auto q2 = mono(1, 0, 0, 2);
            QSeries s1 = f_inner_sum(a, z, w, sg);
            QSeries part1 =
                qkit::geo_inverse(-z * a.inverse() * mono(1, 0, 0, 1), w, sg).scaled(q2) * s1;
            QSeries theta = qkit::partial_theta(a, 2, 2, w, sg);
            QSeries ratio = qkit::poch_inf(z.pow(2) * a.inverse() * q2, QStep(2), w, sg) *
                            (qkit::poch_inf(z.pow(2) * q2, QStep(4), w, sg) *
                             qkit::poch_inf(z.pow(2) * a.pow(-2) * q2, QStep(4), w, sg))
                                .inverse();
            QSeries part2 = theta * ratio;
            Monomial pre2 = a * z.inverse() * mono(1, 0, 0, 1);
            if (sg < 0) pre2.c = -pre2.c;
            part2 = part2.scaled(pre2);
            QSeries pre = qkit::poch_inf(-z * a.inverse() * q2, QStep(2), w, sg) *
                          qkit::poch_inf(z * q2, QStep(2), w, sg);
            return ((part1 - part2) * pre.inverse()).truncated(acc);
        }
        case Family::G_def: {
            // sum_{m>=1} (z^2q^2/a;q^2)_{m-1} q^{2m} /
            //   ((-zq/a;q)_{2m} (zq;q)_{2m} (-zq^{2m+2}/a;q^2)_inf (zq^{2m+2};q^2)_inf)
            Monomial a = require_unit(spec.args[0], "G_def", "a");
            Monomial z = spec.args[1];
            SumSpec s;
            s.n0 = 1;
            s.lead = [](long m) { return mono(1, 0, 0, static_cast<int>(2 * m)); };
            s.atoms = {
                afin(z.pow(2) * a.inverse(), 2, [](long) { return 2; },
                     [](long m) { return m - 1; }, false),
                afin(-z * a.inverse(), 1, [](long) { return 1; }, [](long m) { return 2 * m; },
                     true),
                afin(z, 1, [](long) { return 1; }, [](long m) { return 2 * m; }, true),
                ainf(-z * a.inverse(), 2, [](long m) { return 2 * m + 2; }, true),
                ainf(z, 2, [](long m) { return 2 * m + 2; }, true),
            };
            return run_sum(s, acc, sg);
        }
        case Family::H_def: {
            // q^2 (z^2q^2/a;q^2)_inf / ((zq;q)_inf (-zq/a;q)_inf) * omega1(a, z; q)
            require_q_free_for_negation(spec, fi);
            Monomial a = require_unit(spec.args[0], "H_def", "a");
            Monomial z = spec.args[1];
            auto q1 = mono(1, 0, 0, 1);
            MockSpec w1{Family::omega1, {a, z}, sg, QStep(1)};
            QSeries pre = qkit::poch_inf(z.pow(2) * a.inverse() * mono(1, 0, 0, 2), QStep(2), acc,
                                         sg) *
                          (qkit::poch_inf(z * q1, QStep(1), acc, sg) *
                           qkit::poch_inf(-z * a.inverse() * q1, QStep(1), acc, sg))
                              .inverse();
            return (build(w1, acc) * pre).scaled(mono(1, 0, 0, 2)).truncated(acc);
        }
        case Family::bigG: {
            // G(a, b; Q) = sum a^n b^n Q^{n^2} / ((aQ;Q)_n (bQ;Q)_n), Q = q^t
            Monomial a = spec.args[0], b = spec.args[1];
            const int t = spec.step.t;
            SumSpec s;
            s.lead = [a, b, t](long n) {
                return a.pow(n) * b.pow(n) * mono(1, 0, 0, static_cast<int>(t * n * n));
            };
            s.lead_tpl = [t](long n) { return t * n * n; };
            s.atoms = {
                afin(a, t, [t](long) { return t; }, [](long n) { return n; }, true),
                afin(b, t, [t](long) { return t; }, [](long n) { return n; }, true),
            };
            return run_sum(s, acc, sg);
        }
        case Family::rho3: {
            // rho3(a, b, c; Q) = (1 + 1/b) sum (c;Q)_n (-1)^n Q^{n(n+1)/2} a^n b^{-n}
            //   / ((-aQ;Q)_n (-c/b;Q)_{n+1}), Q = q^t
            Monomial a = spec.args[0];
            Monomial b = require_unit(spec.args[1], "rho3", "b");
            Monomial c = spec.args[2];
            const int t = spec.step.t;
            Monomial ratio = a * b.inverse();
            SumSpec s;
            s.lead = [ratio, t](long n) {
                return ratio.pow(n) *
                       mono((n % 2) ? -1 : 1, 0, 0, static_cast<int>(t * (n * (n + 1) / 2)));
            };
            s.lead_tpl = [t](long n) { return t * (n * (n + 1) / 2); };
            s.atoms = {
                afin(c, t, [](long) { return 0; }, [](long n) { return n; }, false),
                afin(-a, t, [t](long) { return t; }, [](long n) { return n; }, true),
                afin(-c * b.inverse(), t, [](long) { return 0; }, [](long n) { return n + 1; },
                     true),
            };
            const int down = std::max(0, -b.inverse().eq);
            QSeries sum = run_sum(s, acc + down, sg);
            QSeries pre = QSeries::one(acc + down) +
                          QSeries::from_monomial(b.inverse(), acc + down);
            return (pre * sum).truncated(acc);
        }
    }
    throw Error("mock build: unreachable");
}

inline QSeries build(Family f, std::vector<Monomial> args, int qsign, int acc, QStep step = QStep(1)) {
    MockSpec s{f, std::move(args), qsign, step};
    return build(s, acc);
}

// defining series vs. alternative single-sum forms:
//   omega(z;q) = sum_{n>=1} z^{n-1} q^{n-1} / (q;q^2)_n
//   nu(z;q)    = sum_{n>=0} (q/z;q^2)_n (-zq)^n
inline SidePair andrews_alt_forms(Family which, const Monomial& arg, int acc, int qsign = +1) {
    using namespace detail;
    if (which == Family::omega_bi) {
        SumSpec s;
        s.n0 = 1;
        Monomial z = arg;
        s.lead = [z](long n) { return z.pow(n - 1) * mono(1, 0, 0, static_cast<int>(n - 1)); };
        s.lead_tpl = [](long n) { return n - 1; };
        s.atoms = {afin(mono(1, 0, 0, 0), 2, [](long) { return 1; }, [](long n) { return n; },
                        true)};
        return {build(Family::omega_bi, {arg}, qsign, acc), run_sum(s, acc, qsign)};
    }
    if (which == Family::nu_bi) {
        Monomial z = require_unit(arg, "andrews_alt_forms", "z");
        SumSpec s;
        s.lead = [z](long n) {
            return z.pow(n) * mono((n % 2) ? -1 : 1, 0, 0, static_cast<int>(n));
        };
        s.lead_tpl = [](long n) { return n; };
        s.atoms = {afin(z.inverse(), 2, [](long) { return 1; }, [](long n) { return n; }, false)};
        return {build(Family::nu_bi, {arg}, qsign, acc), run_sum(s, acc, qsign)};
    }
    throw IllegalSpec("andrews_alt_forms: only omega_bi and nu_bi have alternative forms");
}

// The two bridges between the trivariate generalizations:
//   omega0(z^2/q^2, a^2 z^2/q^4; q) = (q^4/z^4) omega_star(a, z; q)
//   nu0(-a^2 z^2/q^4, -q^2/a^2; q)  = nu_star(a, z; q)
inline std::vector<SidePair> equivalence_choi(int acc, int qsign = +1) {
    using detail::mono;
    Monomial a = mono(1, 0, 1, 0), z = mono(1, 1, 0, 0);
    std::vector<SidePair> out;
    {
        Monomial y1 = z.pow(2) * mono(1, 0, 0, -2);
        Monomial z1 = a.pow(2) * z.pow(2) * mono(1, 0, 0, -4);
        QSeries lhs = build(Family::omega0, {y1, z1}, qsign, acc);
        QSeries rhs = build(Family::omega_star, {a, z}, qsign, acc)
                          .scaled(mono(1, -4, 0, 4))
                          .truncated(acc);
        out.push_back({lhs, rhs});
    }
    {
        Monomial y2 = -(a.pow(2) * z.pow(2)) * mono(1, 0, 0, -4);
        Monomial z2 = -(a.pow(-2)) * mono(1, 0, 0, 2);
        QSeries lhs = build(Family::nu0, {y2, z2}, qsign, acc);
        QSeries rhs = build(Family::nu_star, {a, z}, qsign, acc);
        out.push_back({lhs, rhs});
    }
    return out;
}

}  // namespace qmock::mock
