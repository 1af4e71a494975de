#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmock/qkit.hpp"

namespace qmock::qkit {

using Params = std::map<std::string, Monomial>;

struct ClassicalInfo {
    std::string name;
    std::vector<std::string> params;
    bool has_step;
    std::string note;
};

namespace classical_detail {

inline Monomial mono(long c, int ez, int ea, int eq) { return Monomial(Int(c), ez, ea, eq); }
inline Monomial qq(int k) { return mono(1, 0, 0, k); }

inline const Monomial& arg(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw BadParams("classical: missing parameter '" + name + "'");
    return it->second;
}
inline Monomial unit_arg(const Params& p, const std::string& name) {
    Monomial m = arg(p, name);
    if (!m.is_unit())
        throw BadParams("classical: parameter '" + name + "' must have coefficient +-1");
    return m;
}

inline QSeries run(const SumSpec& s, int acc) {
    try {
        return telescoped_sum(s, acc);
    } catch (const NonTerminating& e) {
        throw BadParams(std::string("classical: side condition violated: ") + e.what());
    }
}

// (1 + m) as a series
inline QSeries one_plus(const Monomial& m, int acc) {
    return QSeries::one(acc) + QSeries::from_monomial(m, acc);
}

using Builder = SidePair (*)(const Params&, int, int);

struct Entry {
    ClassicalInfo info;
    Builder build;
};

// sum_{m>=0} (a;Q)_m x^m / (Q;Q)_m = (ax;Q)_inf / (x;Q)_inf
inline SidePair q_binomial(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a"), x = arg(p, "x");
    SumSpec s;
    s.lead = [x](long m) { return x.pow(m); };
    s.atoms = {
        fin_atom(a, t, [](long) { return 0; }, [](long m) { return m; }, false),
        fin_atom(qq(t), t, [](long) { return 0; }, [](long m) { return m; }, true),
    };
    QSeries lhs = run(s, acc);
    QSeries rhs = poch_inf(a * x, QStep(t), acc) * poch_inf(x, QStep(t), acc).inverse();
    return {lhs, rhs.truncated(acc)};
}

// 2phi1(a,b;c;Q,x) = (b;Q)inf (ax;Q)inf / ((c;Q)inf (x;Q)inf) 2phi1(c/b, x; ax; Q, b)
inline SidePair heine(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a"), b = unit_arg(p, "b"), c = arg(p, "c"), x = arg(p, "x");
    auto phi21 = [t, acc](const Monomial& pa, const Monomial& pb, const Monomial& pc,
                          const Monomial& px) {
        SumSpec s;
        s.lead = [px](long n) { return px.pow(n); };
        s.atoms = {
            fin_atom(pa, t, [](long) { return 0; }, [](long n) { return n; }, false),
            fin_atom(pb, t, [](long) { return 0; }, [](long n) { return n; }, false),
            fin_atom(pc, t, [](long) { return 0; }, [](long n) { return n; }, true),
            fin_atom(qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
        };
        return run(s, acc);
    };
    QSeries lhs = phi21(a, b, c, x);
    QSeries pre = poch_inf(b, QStep(t), acc) * poch_inf(a * x, QStep(t), acc) *
                  (poch_inf(c, QStep(t), acc) * poch_inf(x, QStep(t), acc)).inverse();
    QSeries rhs = pre * phi21(c * b.inverse(), x, a * x, b);
    return {lhs, rhs.truncated(acc)};
}

// sum (a;Q)_n (b;Q)_n Q^{n(n+1)/2} / ((Q;Q)_n (abQ;Q^2)_n)
//   = (-Q;Q)inf (aQ;Q^2)inf (bQ;Q^2)inf / (abQ;Q^2)inf
inline SidePair gauss_second(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a"), b = arg(p, "b");
    SumSpec s;
    s.lead = [t](long n) { return qq(static_cast<int>(t * (n * (n + 1) / 2))); };
    s.atoms = {
        fin_atom(a, t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(b, t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
        fin_atom(a * b * qq(t), 2 * t, [](long) { return 0; }, [](long n) { return n; }, true),
    };
    QSeries lhs = run(s, acc);
    QSeries rhs = poch_inf(-qq(t), QStep(t), acc) * poch_inf(a * qq(t), QStep(2 * t), acc) *
                  poch_inf(b * qq(t), QStep(2 * t), acc) *
                  poch_inf(a * b * qq(t), QStep(2 * t), acc).inverse();
    return {lhs, rhs.truncated(acc)};
}

// sum_{m>=0} (a;Q)_m t^m/(b;Q)_m + sum_{m>=1} (Q/b;Q)_m (b/(ax))^m/(Q/a;Q)_m
//   = (Q;Q)inf (b/a;Q)inf (ax;Q)inf (Q/(ax);Q)inf
//     / ((b;Q)inf (Q/a;Q)inf (x;Q)inf (b/(ax);Q)inf)
inline SidePair one_psi_one(const Params& p, int t, int acc) {
    Monomial a = unit_arg(p, "a"), b = unit_arg(p, "b"), x = unit_arg(p, "t");
    SumSpec s1;
    s1.lead = [x](long m) { return x.pow(m); };
    s1.atoms = {
        fin_atom(a, t, [](long) { return 0; }, [](long m) { return m; }, false),
        fin_atom(b, t, [](long) { return 0; }, [](long m) { return m; }, true),
    };
    Monomial back = b * (a * x).inverse();
    SumSpec s2;
    s2.n0 = 1;
    s2.lead = [back](long m) { return back.pow(m); };
    s2.atoms = {
        fin_atom(b.inverse() * qq(t), t, [](long) { return 0; }, [](long m) { return m; }, false),
        fin_atom(a.inverse() * qq(t), t, [](long) { return 0; }, [](long m) { return m; }, true),
    };
    const int w = acc + 2;
    QSeries lhs = run(s1, w) + run(s2, w);
    QSeries num = poch_inf(qq(t), QStep(t), w) * poch_inf(b * a.inverse(), QStep(t), w) *
                  poch_inf(a * x, QStep(t), w) * poch_inf((a * x).inverse() * qq(t), QStep(t), w);
    QSeries den = poch_inf(b, QStep(t), w) * poch_inf(a.inverse() * qq(t), QStep(t), w) *
                  poch_inf(x, QStep(t), w) * poch_inf(back, QStep(t), w);
    QSeries rhs = num * den.inverse();
    return {lhs.truncated(acc), rhs.truncated(acc)};
}

// sum (c/b;Q)_n (a;Q)_n x^n / ((Q;Q)_n (c;Q)_n) = ((ax;Q)inf/(x;Q)inf) *
//   sum (a;Q)_n (b;Q)_n (-1)^n Q^{n(n-1)/2} (xc/b)^n / ((Q;Q)_n (c;Q)_n (ax;Q)_n)
inline SidePair jackson_pfaff(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a"), b = unit_arg(p, "b"), c = arg(p, "c"), x = arg(p, "x");
    SumSpec s1;
    s1.lead = [x](long n) { return x.pow(n); };
    s1.atoms = {
        fin_atom(c * b.inverse(), t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(a, t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
        fin_atom(c, t, [](long) { return 0; }, [](long n) { return n; }, true),
    };
    QSeries lhs = run(s1, acc);
    Monomial xcb = x * c * b.inverse();
    SumSpec s2;
    s2.lead = [xcb, t](long n) {
        return xcb.pow(n) * mono((n % 2) ? -1 : 1, 0, 0, static_cast<int>(t * (n * (n - 1) / 2)));
    };
    s2.atoms = {
        fin_atom(a, t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(b, t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
        fin_atom(c, t, [](long) { return 0; }, [](long n) { return n; }, true),
        fin_atom(a * x, t, [](long) { return 0; }, [](long n) { return n; }, true),
    };
    QSeries pre = poch_inf(a * x, QStep(t), acc) * poch_inf(x, QStep(t), acc).inverse();
    QSeries rhs = pre * run(s2, acc);
    return {lhs, rhs.truncated(acc)};
}

// sum (B;Q)_n (-AbQ;Q)_n Q^n / ((-aQ;Q)_n (-bQ;Q)_n)
//   = -((B;Q)inf (-AbQ;Q)inf / (a (-bQ;Q)inf (-aQ;Q)inf))
//       * sum (1/A;Q)_m (AbQ/a)^m / (-B/a;Q)_{m+1}
//     + (1+b) sum (-1/a;Q)_{m+1} (-ABQ/a;Q)_m (-b)^m / ((-B/a;Q)_{m+1} (AbQ/a;Q)_{m+1})
inline SidePair andrews_deep(const Params& p, int t, int acc) {
    Monomial a = unit_arg(p, "a"), b = arg(p, "b");
    Monomial A = unit_arg(p, "A"), B = arg(p, "B");
    SumSpec lhs_s;
    lhs_s.lead = [t](long n) { return qq(static_cast<int>(t * n)); };
    lhs_s.atoms = {
        fin_atom(B, t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(-A * b * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(-a * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
        fin_atom(-b * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
    };
    QSeries lhs = run(lhs_s, acc);

    const int w = acc + 2;
    Monomial r1 = A * b * a.inverse() * qq(t);
    SumSpec s1;
    s1.lead = [r1](long m) { return r1.pow(m); };
    s1.atoms = {
        fin_atom(A.inverse(), t, [](long) { return 0; }, [](long m) { return m; }, false),
        fin_atom(-B * a.inverse(), t, [](long) { return 0; }, [](long m) { return m + 1; }, true),
    };
    QSeries pre1 = poch_inf(B, QStep(t), w) * poch_inf(-A * b * qq(t), QStep(t), w) *
                   (poch_inf(-b * qq(t), QStep(t), w) * poch_inf(-a * qq(t), QStep(t), w))
                       .inverse();
    QSeries part1 = (pre1 * run(s1, w)).scaled(-a.inverse());

    SumSpec s2;
    Monomial nb = -b;
    s2.lead = [nb](long m) { return nb.pow(m); };
    s2.atoms = {
        fin_atom(-a.inverse(), t, [](long) { return 0; }, [](long m) { return m + 1; }, false),
        fin_atom(-A * B * a.inverse() * qq(t), t, [](long) { return 0; },
                 [](long m) { return m; }, false),
        fin_atom(-B * a.inverse(), t, [](long) { return 0; }, [](long m) { return m + 1; }, true),
        fin_atom(A * b * a.inverse() * qq(t), t, [](long) { return 0; },
                 [](long m) { return m + 1; }, true),
    };
    QSeries part2 = one_plus(b, w) * run(s2, w);
    return {lhs, (part1 + part2).truncated(acc)};
}

// sum (b/u)^n Q^{n(n+1)/2} / (bQ;Q)_n - (u/(1+u)) sum Q^n / ((bQ;Q)_n (-uQ;Q)_n)
//   = (1/((bQ;Q)inf (-u;Q)inf)) sum (b/u)^n Q^{n(n+1)/2}
inline SidePair fine_corrected(const Params& p, int t, int acc) {
    Monomial b = arg(p, "b"), u = unit_arg(p, "u");
    Monomial bu = b * u.inverse();
    const int w = acc + 2;
    SumSpec s1;
    s1.lead = [bu, t](long n) { return bu.pow(n) * qq(static_cast<int>(t * (n * (n + 1) / 2))); };
    s1.atoms = {fin_atom(b * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true)};
    SumSpec s2;
    s2.lead = [t](long n) { return qq(static_cast<int>(t * n)); };
    s2.atoms = {
        fin_atom(b * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
        fin_atom(-u * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
    };
    QSeries theta = run(s1, w);
    QSeries lhs = theta - (geo_inverse(-u, w) * run(s2, w)).scaled(u);
    SumSpec s3;
    s3.lead = s1.lead;
    s3.atoms = {};
    QSeries rhs = (poch_inf(b * qq(t), QStep(t), w) * poch_inf(-u, QStep(t), w)).inverse() *
                  run(s3, w);
    return {lhs.truncated(acc), rhs.truncated(acc)};
}

// (1-x) F(a,0;x) = sum (-ax)^n Q^{n(n+1)/2} / (xQ;Q)_n, F(a,0;x) = sum (aQ;Q)_n x^n
inline SidePair rogers_fine_first(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a"), x = arg(p, "x");
    SumSpec f;
    f.lead = [x](long n) { return x.pow(n); };
    f.atoms = {fin_atom(a * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, false)};
    QSeries lhs = (QSeries::one(acc) - QSeries::from_monomial(x, acc)) * run(f, acc);
    Monomial nax = -(a * x);
    SumSpec r;
    r.lead = [nax, t](long n) { return nax.pow(n) * qq(static_cast<int>(t * (n * (n + 1) / 2))); };
    r.atoms = {fin_atom(x * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true)};
    return {lhs.truncated(acc), run(r, acc)};
}

// (1-x) F(a,0;x) = sum (aQ;Q)_n (-a x^2)^n (1 - a x Q^{2n+1}) Q^{(3n^2+n)/2} / (xQ;Q)_n
inline SidePair rogers_fine_second(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a"), x = arg(p, "x");
    SumSpec f;
    f.lead = [x](long n) { return x.pow(n); };
    f.atoms = {fin_atom(a * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, false)};
    QSeries lhs = (QSeries::one(acc) - QSeries::from_monomial(x, acc)) * run(f, acc);
    Monomial nax2 = -(a * x * x);
    SumSpec r;
    r.lead = [nax2, t](long n) {
        return nax2.pow(n) * qq(static_cast<int>(t * ((3 * n * n + n) / 2)));
    };
    Monomial ax = a * x;
    r.atoms = {
        fin_atom(a * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(ax * qq(t), 2 * t, [t](long n) { return 2 * t * n; }, [](long) { return 1; },
                 false),
        fin_atom(x * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
    };
    return {lhs.truncated(acc), run(r, acc)};
}

// sum x^m / (-x;Q)_{m+1} = sum (Q;Q^2)_m x^{2m}
inline SidePair eq41(const Params& p, int t, int acc) {
    Monomial x = arg(p, "x");
    SumSpec l;
    l.lead = [x](long m) { return x.pow(m); };
    l.atoms = {fin_atom(-x, t, [](long) { return 0; }, [](long m) { return m + 1; }, true)};
    SumSpec r;
    r.lead = [x](long m) { return x.pow(2 * m); };
    r.atoms = {fin_atom(qq(t), 2 * t, [](long) { return 0; }, [](long m) { return m; }, false)};
    return {run(l, acc), run(r, acc)};
}

// sum (-xQ/y;Q^2)_m y^m = sum Q^{m^2} x^m / (y;Q^2)_{m+1}
inline SidePair andrews_ex6(const Params& p, int t, int acc) {
    Monomial x = arg(p, "x"), y = unit_arg(p, "y");
    SumSpec l;
    l.lead = [y](long m) { return y.pow(m); };
    l.atoms = {fin_atom(-x * y.inverse() * qq(t), 2 * t, [](long) { return 0; },
                        [](long m) { return m; }, false)};
    SumSpec r;
    r.lead = [x, t](long m) { return x.pow(m) * qq(static_cast<int>(t * m * m)); };
    r.atoms = {fin_atom(y, 2 * t, [](long) { return 0; }, [](long m) { return m + 1; }, true)};
    return {run(l, acc), run(r, acc)};
}

// sum a^n b^n Q^{n^2+2n} / ((aQ;Q)_{n+1} (bQ;Q)_{n+1}) = sum a^n Q^n / (bQ;Q)_{n+1}
inline SidePair lost_p24(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a"), b = arg(p, "b");
    SumSpec l;
    l.lead = [a, b, t](long n) {
        return a.pow(n) * b.pow(n) * qq(static_cast<int>(t * (n * n + 2 * n)));
    };
    l.atoms = {
        fin_atom(a * qq(t), t, [](long) { return 0; }, [](long n) { return n + 1; }, true),
        fin_atom(b * qq(t), t, [](long) { return 0; }, [](long n) { return n + 1; }, true),
    };
    SumSpec r;
    r.lead = [a, t](long n) { return a.pow(n) * qq(static_cast<int>(t * n)); };
    r.atoms = {fin_atom(b * qq(t), t, [](long) { return 0; }, [](long n) { return n + 1; }, true)};
    return {run(l, acc), run(r, acc)};
}

// sum a^n Q^{n^2+2n} = sum (-Q;Q)_n a^n Q^{n(n+3)/2} / (-aQ^2;Q^2)_{n+1}
inline SidePair lost_p25(const Params& p, int t, int acc) {
    Monomial a = arg(p, "a");
    SumSpec l;
    l.lead = [a, t](long n) { return a.pow(n) * qq(static_cast<int>(t * (n * n + 2 * n))); };
    SumSpec r;
    r.lead = [a, t](long n) { return a.pow(n) * qq(static_cast<int>(t * (n * (n + 3) / 2))); };
    r.atoms = {
        fin_atom(-qq(t), t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(-a * qq(2 * t), 2 * t, [](long) { return 0; }, [](long n) { return n + 1; }, true),
    };
    return {run(l, acc), run(r, acc)};
}

// (1 + 1/b) sum (-1)^n Q^{n(n+1)/2} a^n b^{-n} / (-aQ;Q)_n
//   - (1 + 1/a) sum (-1)^n Q^{n(n+1)/2} a^{-n} b^n / (-bQ;Q)_n
//   = (1/b - 1/a) (aQ/b, bQ/a, Q; Q)inf / ((-aQ, -bQ; Q)inf)
inline SidePair ramanujan_reciprocity(const Params& p, int t, int acc) {
    Monomial a = unit_arg(p, "a"), b = unit_arg(p, "b");
    const int w = acc + std::max({0, -a.inverse().eq, -b.inverse().eq,
                                  -(a * b.inverse()).eq, -(b * a.inverse()).eq}) + 2;
    auto half = [t, w](const Monomial& u, const Monomial& v) {
        Monomial ratio = u * v.inverse();
        SumSpec s;
        s.lead = [ratio, t](long n) {
            return ratio.pow(n) * mono((n % 2) ? -1 : 1, 0, 0,
                                       static_cast<int>(t * (n * (n + 1) / 2)));
        };
        s.atoms = {fin_atom(-u * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true)};
        return run(s, w);
    };
    QSeries lhs = one_plus(b.inverse(), w) * half(a, b) - one_plus(a.inverse(), w) * half(b, a);
    QSeries scale = QSeries::from_monomial(b.inverse(), w) - QSeries::from_monomial(a.inverse(), w);
    QSeries rhs = scale * poch_inf(a * b.inverse() * qq(t), QStep(t), w) *
                  poch_inf(b * a.inverse() * qq(t), QStep(t), w) * poch_inf(qq(t), QStep(t), w) *
                  (poch_inf(-a * qq(t), QStep(t), w) * poch_inf(-b * qq(t), QStep(t), w)).inverse();
    return {lhs.truncated(acc), rhs.truncated(acc)};
}

// rho3(a,b,c;Q) = (1 + 1/b) sum (c;Q)_n (-1)^n Q^{n(n+1)/2} a^n b^{-n}
//                  / ((-aQ;Q)_n (-c/b;Q)_{n+1})
inline QSeries rho3(const Monomial& a, const Monomial& b, const Monomial& c, int t, int acc) {
    if (!b.is_unit()) throw BadParams("rho3: b must have coefficient +-1");
    const int w = acc + std::max(0, -b.inverse().eq) + 2;
    Monomial ratio = a * b.inverse();
    SumSpec s;
    s.lead = [ratio, t](long n) {
        return ratio.pow(n) * mono((n % 2) ? -1 : 1, 0, 0, static_cast<int>(t * (n * (n + 1) / 2)));
    };
    s.atoms = {
        fin_atom(c, t, [](long) { return 0; }, [](long n) { return n; }, false),
        fin_atom(-a * qq(t), t, [](long) { return 0; }, [](long n) { return n; }, true),
        fin_atom(-c * b.inverse(), t, [](long) { return 0; }, [](long n) { return n + 1; }, true),
    };
    return (one_plus(b.inverse(), w) * run(s, w)).truncated(acc);
}

// rho3(a,b,c;Q) - rho3(b,a,c;Q)
//   = (1/b - 1/a) (c, aQ/b, bQ/a, Q; Q)inf / ((-c/a, -c/b, -aQ, -bQ; Q)inf)
inline SidePair kang_reciprocity(const Params& p, int t, int acc) {
    Monomial a = unit_arg(p, "a"), b = unit_arg(p, "b"), c = arg(p, "c");
    const int w = acc + std::max({0, -a.inverse().eq, -b.inverse().eq}) + 2;
    QSeries lhs = rho3(a, b, c, t, w) - rho3(b, a, c, t, w);
    QSeries scale = QSeries::from_monomial(b.inverse(), w) - QSeries::from_monomial(a.inverse(), w);
    QSeries num = poch_inf(c, QStep(t), w) * poch_inf(a * b.inverse() * qq(t), QStep(t), w) *
                  poch_inf(b * a.inverse() * qq(t), QStep(t), w) * poch_inf(qq(t), QStep(t), w);
    QSeries den = poch_inf(-c * a.inverse(), QStep(t), w) * poch_inf(-c * b.inverse(), QStep(t), w) *
                  poch_inf(-a * qq(t), QStep(t), w) * poch_inf(-b * qq(t), QStep(t), w);
    QSeries rhs = scale * num * den.inverse();
    return {lhs.truncated(acc), rhs.truncated(acc)};
}

// sum_{n in Z} x^n Q^{n^2} = (-xQ;Q^2)inf (-Q/x;Q^2)inf (Q^2;Q^2)inf
inline SidePair jacobi_triple_product(const Params& p, int t, int acc) {
    Monomial x = unit_arg(p, "x");
    if (t != 1) throw BadParams("jacobi_triple_product: base step must be 1");
    QSeries lhs = theta_bilateral(x, acc);
    QSeries rhs = poch_inf(-x * qq(1), QStep(2), acc) * poch_inf(-x.inverse() * qq(1), QStep(2), acc) *
                  poch_inf(qq(2), QStep(2), acc);
    return {lhs, rhs};
}

inline const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"q_binomial", {"a", "x"}, true,
          "needs x with positive q-valuation; analytic |x|<1 replaced by formal check"},
         q_binomial},
        {{"heine", {"a", "b", "c", "x"}, true,
          "needs x and b with positive q-valuation; b gets inverted (coefficient +-1)"},
         heine},
        {{"gauss_second", {"a", "b"}, true, "formal-series reading of the analytic statement"},
         gauss_second},
        {{"one_psi_one", {"a", "b", "t"}, true,
          "bilateral sum realized as two unilateral sums; |b/a|<|t|<1 replaced by "
          "valuation-divergence checks; a, b, t get inverted"},
         one_psi_one},
        {{"jackson_pfaff", {"a", "b", "c", "x"}, true, "b gets inverted (coefficient +-1)"},
         jackson_pfaff},
        {{"andrews_deep", {"a", "b", "A", "B"}, true,
          "a, A nonzero and unit; needs b with positive q-valuation"},
         andrews_deep},
        {{"fine_corrected", {"b", "u"}, true,
          "corrected form: (ut), (u) factors carry the negative sign"},
         fine_corrected},
        {{"rogers_fine_first", {"a", "x"}, true, "F(a,0;x) with (1-x) cleared"},
         rogers_fine_first},
        {{"rogers_fine_second", {"a", "x"}, true, "F(a,0;x) with (1-x) cleared"},
         rogers_fine_second},
        {{"eq41", {"x"}, true, "needs x with positive q-valuation"}, eq41},
        {{"andrews_ex6", {"x", "y"}, true, "needs y with positive q-valuation; y gets inverted"},
         andrews_ex6},
        {{"lost_p24", {"a", "b"}, true, "two-variable lost-notebook identity"}, lost_p24},
        {{"lost_p25", {"a"}, true, "partial-theta lost-notebook identity"}, lost_p25},
        {{"ramanujan_reciprocity", {"a", "b"}, true, "a, b get inverted (coefficient +-1)"},
         ramanujan_reciprocity},
        {{"kang_reciprocity", {"a", "b", "c"}, true,
          "three-variable reciprocity; |c|<|a|,|b|<1 replaced by formal checks; a, b get inverted"},
         kang_reciprocity},
        {{"jacobi_triple_product", {"x"}, false, "bilateral theta form"}, jacobi_triple_product},
    };
    return table;
}

}  // namespace classical_detail

struct ClassicalInstance {
    std::string name;
    QSeries lhs;
    QSeries rhs;
    std::string note;
};

inline std::vector<ClassicalInfo> classical_catalog() {
    std::vector<ClassicalInfo> out;
    for (const auto& e : classical_detail::entries()) out.push_back(e.info);
    return out;
}

inline ClassicalInstance classical(const std::string& name, const Params& params, int acc,
                                   int step = 1) {
    for (const auto& e : classical_detail::entries()) {
        if (e.info.name != name) continue;
        if (step < 1) throw BadParams("classical: step must be >= 1");
        for (const auto& [k, v] : params) {
            (void)v;
            bool known = false;
            for (const auto& pn : e.info.params) known = known || pn == k;
            if (!known) throw BadParams("classical: unexpected parameter '" + k + "'");
        }
        SidePair sides = e.build(params, step, acc);
        return {name, std::move(sides.lhs), std::move(sides.rhs), e.info.note};
    }
    throw UnknownName("classical: unknown identity '" + name + "'");
}

}  // namespace qmock::qkit
