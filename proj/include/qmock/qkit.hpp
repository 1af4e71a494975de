#pragma once

#include <functional>
#include <vector>

#include "qmock/series.hpp"

namespace qmock::qkit {

// Pochhammer base step: (a; q^t)_n.  t in {1, 2, 4} covers everything here.
struct QStep {
    int t = 1;
    QStep() = default;
    explicit QStep(int tt) : t(tt) {
        if (t < 1) throw Error("QStep: t must be >= 1");
    }
};

// q -> -q is folded into generators by flipping the sign of every materialized
// monomial with odd q-exponent.
inline Monomial eff(Monomial m, int qsign) {
    if (qsign < 0 && (m.eq % 2) != 0) m.c = -m.c;
    return m;
}

// 1 / (1 - m) as an explicit geometric series through acc.
// m.eq > 0: sum m^k; m.eq < 0: -sum_{k>=1} m^-k (requires unit coefficient).
inline QSeries geo_inverse(const Monomial& m, int acc, int qsign = +1) {
    Monomial f = eff(m, qsign);
    if (f.eq == 0) throw NotInvertible("geo_inverse: factor has q-exponent 0");
    QSeries out = QSeries::zero(acc);
    if (f.eq > 0) {
        Monomial p(1, 0, 0, 0);
        while (p.eq <= acc) {
            out += QSeries::from_monomial(p, acc);
            p = p * f;
        }
    } else {
        if (!f.is_unit()) throw NotInvertible("geo_inverse: negative-exponent factor is not a unit");
        Monomial fi = f.inverse();
        Monomial p = fi;
        while (p.eq <= acc) {
            out += QSeries::from_monomial(-p, acc);
            p = p * fi;
        }
    }
    return out;
}

// sum over j in [0, count) of min(0, a.eq + shift + t j); the exact valuation
// of the finite Pochhammer product
inline long poch_val(const Monomial& a, int t, long shift, long count) {
    long v = 0;
    for (long j = 0; j < count; ++j) {
        long e = a.eq + shift + t * j;
        if (e >= 0) break;
        v += e;
    }
    return v;
}
inline long poch_inf_val(const Monomial& a, int t, long shift) {
    long v = 0;
    for (long j = 0;; ++j) {
        long e = a.eq + shift + t * j;
        if (e >= 0) break;
        v += e;
    }
    return v;
}

// (a; q^t)_n = prod_{j=0}^{n-1} (1 - a q^{t j}), exact through acc
inline QSeries poch_finite(const Monomial& a, QStep step, long n, int acc, int qsign = +1) {
    QSeries out = QSeries::one(acc);
    for (long j = 0; j < n; ++j) {
        Monomial f = eff(a * Monomial(1, 0, 0, static_cast<int>(step.t * j)), qsign);
        out -= out.scaled(f);
    }
    return out;
}

// (a; q^t)_inf truncated to acc; factors with q-exponent > acc contribute 1
inline QSeries poch_inf(const Monomial& a, QStep step, int acc, int qsign = +1) {
    QSeries out = QSeries::one(acc);
    for (long j = 0; a.eq + step.t * j <= acc; ++j) {
        Monomial f = eff(a * Monomial(1, 0, 0, static_cast<int>(step.t * j)), qsign);
        out -= out.scaled(f);
    }
    return out;
}

namespace detail {

// Scans indices n0, n0+1, ... and returns the last n whose valuation bound
// clears acc, tolerating early dips of a non-monotone bound.  Throws
// NonTerminating when the bound fails to stay above acc within the cap.
template <typename VB>
long last_live_index(long n0, VB&& vb, long acc, long cap) {
    long last_good = n0 - 1;
    int consec_bad = 0;
    for (long n = n0;; ++n) {
        if (n - n0 > cap)
            throw NonTerminating("sum index cap " + std::to_string(cap) +
                                 " exceeded; valuation bound does not clear the accuracy");
        if (vb(n) <= acc) {
            last_good = n;
            consec_bad = 0;
        } else if (++consec_bad >= 16) {
            return last_good;
        }
    }
}

}  // namespace detail

inline long default_cap(int acc) { return 10L * (std::max<long>(acc, 0) + 5); }

// One summand family: the n-th term at a stated accuracy plus a proven lower
// bound on its q-valuation.  Bilateral sums run n >= n0 and n <= -1.
struct TermFamily {
    std::function<QSeries(long n, int acc)> term;
    std::function<long(long n)> vbound;
    bool bilateral = false;
    long n0 = 0;
};

inline QSeries sum_family(const TermFamily& f, int acc, long cap = -1) {
    if (cap < 0) cap = default_cap(acc);
    QSeries out = QSeries::zero(acc);
    auto run = [&](long start, long dir) {
        auto vb_i = [&](long i) { return f.vbound(start + dir * i); };
        long last_i = detail::last_live_index(0, vb_i, acc, cap);
        for (long i = 0; i <= last_i; ++i) {
            long n = start + dir * i;
            if (f.vbound(n) > acc) continue;
            QSeries t = f.term(n, acc);
            if (t.acc() < acc)
                throw Error("sum_family: term accuracy " + std::to_string(t.acc()) +
                            " below requested " + std::to_string(acc));
            out += t.truncated(acc);
        }
    };
    run(f.n0, +1);
    if (f.bilateral) run(-1, -1);
    return out;
}

// sum_{n>=0} m^n q^{(P n^2 + Q n)/2} truncated to acc; the q -> -q fold flips
// the template exponent only, the argument m passes through verbatim
inline QSeries partial_theta(const Monomial& m, long P, long Q, int acc, int qsign = +1) {
    if (P <= 0) throw ParityViolation("partial_theta: P must be positive");
    if (((P - Q) % 2) != 0)
        throw ParityViolation("partial_theta: P and Q must have equal parity");
    QSeries out = QSeries::zero(acc);
    auto vb = [&](long n) { return (P * n * n + Q * n) / 2 + n * m.eq; };
    long last = detail::last_live_index(0, vb, acc, default_cap(acc));
    for (long n = 0; n <= last; ++n) {
        long tpl = (P * n * n + Q * n) / 2;
        Monomial t = m.pow(n) * Monomial(1, 0, 0, static_cast<int>(tpl));
        if (qsign < 0 && (tpl % 2) != 0) t.c = -t.c;
        out += QSeries::from_monomial(t, acc);
    }
    return out;
}

// sum_{n in Z} m^n q^{n^2} truncated to acc
inline QSeries theta_bilateral(const Monomial& m, int acc, int qsign = +1) {
    QSeries out = QSeries::zero(acc);
    auto add_side = [&](long start, long dir) {
        auto vb_i = [&](long i) {
            long n = start + dir * i;
            return n * n + n * m.eq;
        };
        long last_i = detail::last_live_index(0, vb_i, acc, default_cap(acc));
        for (long i = 0; i <= last_i; ++i) {
            long n = start + dir * i;
            Monomial t = m.pow(n) * Monomial(1, 0, 0, static_cast<int>(n * n));
            if (qsign < 0 && ((n * n) % 2) != 0) t.c = -t.c;
            out += QSeries::from_monomial(t, acc);
        }
    };
    add_side(0, +1);
    add_side(-1, -1);
    return out;
}

// ---------------------------------------------------------------------------
// Structured q-hypergeometric sums.
//
// A SumSpec describes sum_{n>=n0} lead(n) * prod_atoms (base q^{shift(n)}; q^t)
// with finite or infinite atom ranges, each possibly inverted.  Terms are
// assembled incrementally: stepping n -> n+1 multiplies the running product by
// the factors entering the atom ranges and by geometric inverses of the
// factors leaving them, so each step costs a handful of sparse multiplies.
// ---------------------------------------------------------------------------

// One Pochhammer factor block (base q^{shift(n)}; q^t) of finite or infinite
// length.  The q -> -q fold flips the sign of a factor whose template
// exponent shift(n) + t j (plus base.eq when base_eq_is_template) is odd;
// exponents contributed by substituted argument monomials never flip.
struct PochAtom {
    Monomial base;
    int t = 1;
    std::function<long(long)> shift;   // q-exponent offset added to base
    std::function<long(long)> count;   // factor count (finite atoms)
    bool infinite = false;
    bool inverted = false;
    bool base_eq_is_template = true;
};

inline PochAtom fin_atom(Monomial base, int t, std::function<long(long)> shift,
                         std::function<long(long)> count, bool inverted = false,
                         bool base_eq_is_template = true) {
    PochAtom a;
    a.base = std::move(base);
    a.t = t;
    a.shift = std::move(shift);
    a.count = std::move(count);
    a.infinite = false;
    a.inverted = inverted;
    a.base_eq_is_template = base_eq_is_template;
    return a;
}
inline PochAtom inf_atom(Monomial base, int t, std::function<long(long)> shift,
                         bool inverted = false, bool base_eq_is_template = true) {
    PochAtom a;
    a.base = std::move(base);
    a.t = t;
    a.shift = std::move(shift);
    a.count = nullptr;
    a.infinite = true;
    a.inverted = inverted;
    a.base_eq_is_template = base_eq_is_template;
    return a;
}

struct SumSpec {
    long n0 = 0;
    std::function<Monomial(long)> lead;
    // template part of the lead's q-exponent (for the q -> -q fold); when
    // absent the whole lead exponent is treated as template
    std::function<long(long)> lead_tpl;
    std::vector<PochAtom> atoms;
};

namespace detail {

inline Monomial materialize_factor(const PochAtom& a, long e, int qsign) {
    Monomial f = a.base * Monomial(1, 0, 0, static_cast<int>(e));
    long tpl = e + (a.base_eq_is_template ? a.base.eq : 0);
    if (qsign < 0 && (tpl % 2) != 0) f.c = -f.c;
    return f;
}

inline Monomial materialize_lead(const SumSpec& spec, long n, int qsign) {
    Monomial m = spec.lead(n);
    long tpl = spec.lead_tpl ? spec.lead_tpl(n) : m.eq;
    if (qsign < 0 && (tpl % 2) != 0) m.c = -m.c;
    return m;
}

}  // namespace detail

inline long term_vbound(const SumSpec& spec, long n) {
    long v = spec.lead(n).eq;
    for (const auto& a : spec.atoms) {
        long pv = a.infinite ? poch_inf_val(a.base, a.t, a.shift(n))
                             : poch_val(a.base, a.t, a.shift(n), a.count(n));
        v += a.inverted ? -pv : pv;
    }
    return v;
}

// Reference per-term construction: materialize every Pochhammer and divide via
// the generic series inverse.  Slow; used for cross-checks and audits.
inline QSeries term_naive(const SumSpec& spec, long n, int acc, int qsign = +1) {
    long slack = std::max(0L, -static_cast<long>(spec.lead(n).eq));
    for (const auto& a : spec.atoms) {
        if (a.inverted) continue;
        long pv = a.infinite ? poch_inf_val(a.base, a.t, a.shift(n))
                             : poch_val(a.base, a.t, a.shift(n), a.count(n));
        slack += std::max(0L, -pv);
    }
    const int work = clamp_acc(static_cast<long long>(acc) + slack);
    QSeries num = QSeries::one(work);
    QSeries den = QSeries::one(work);
    for (const auto& a : spec.atoms) {
        QSeries p = QSeries::one(work);
        long s = a.shift(n);
        long limit = a.infinite ? work : a.base.eq + s + a.t * (a.count(n) - 1);
        for (long j = 0;; ++j) {
            long e = a.base.eq + s + a.t * j;
            if (a.infinite ? e > work : e > limit) break;
            Monomial f = detail::materialize_factor(a, s + a.t * j, qsign);
            p -= p.scaled(f);
        }
        (a.inverted ? den : num) *= p;
    }
    return (num * den.inverse()).scaled(detail::materialize_lead(spec, n, qsign)).truncated(acc);
}

class RunningProduct {
  public:
    explicit RunningProduct(int acc) : acc_(acc), cur_(QSeries::one(acc)) {}

    void mul_factor(const Monomial& f) { cur_ -= cur_.scaled(f); }       // x (1 - f)
    void mul_geo(const Monomial& f) { cur_ *= geo_inverse(f, acc_); }    // x 1/(1 - f)
    void reset() { cur_ = QSeries::one(acc_); }
    const QSeries& value() const { return cur_; }

  private:
    int acc_;
    QSeries cur_;
};

namespace detail {

// exponents of an atom's factor range at index n, clipped to <= hi
inline void atom_exponents(const PochAtom& a, long n, long hi, std::vector<long>& out) {
    out.clear();
    long s = a.shift(n);
    if (a.infinite) {
        for (long j = 0; a.base.eq + s + a.t * j <= hi; ++j) out.push_back(s + a.t * j);
    } else {
        long c = a.count(n);
        for (long j = 0; j < c; ++j) {
            if (a.base.eq + s + a.t * j > hi) break;
            out.push_back(s + a.t * j);
        }
    }
}

}  // namespace detail

// Incremental evaluation of a SumSpec.
inline QSeries telescoped_sum(const SumSpec& spec, int acc, int qsign = +1, long cap = -1) {
    if (cap < 0) cap = default_cap(acc);
    auto vb = [&](long n) { return term_vbound(spec, n); };
    long last = detail::last_live_index(spec.n0, vb, acc, cap);
    QSeries out = QSeries::zero(acc);
    if (last < spec.n0) return out;

    // Working accuracy: leads with negative q-exponent shift terms down, and
    // numerator factors with negative exponents cost tracked accuracy when
    // later multiplications pair them against truncated tails.
    long slack = 0;
    for (long n = spec.n0; n <= last; ++n) {
        long s = std::max(0L, -static_cast<long>(spec.lead(n).eq));
        for (const auto& a : spec.atoms) {
            if (a.inverted) continue;
            long pv = a.infinite ? poch_inf_val(a.base, a.t, a.shift(n))
                                 : poch_val(a.base, a.t, a.shift(n), a.count(n));
            s += std::max(0L, -pv);
        }
        slack = std::max(slack, s);
    }
    const int work = clamp_acc(static_cast<long long>(acc) + slack);
    const long hi = work;

    RunningProduct P(work);
    std::vector<std::vector<long>> ranges(spec.atoms.size());
    std::vector<long> tmp;

    auto rebuild_at = [&](long n) {
        P.reset();
        for (size_t i = 0; i < spec.atoms.size(); ++i) {
            const auto& a = spec.atoms[i];
            detail::atom_exponents(a, n, hi, ranges[i]);
            for (long e : ranges[i]) {
                Monomial f = detail::materialize_factor(a, e, qsign);
                if (a.inverted)
                    P.mul_geo(f);
                else
                    P.mul_factor(f);
            }
        }
    };
    rebuild_at(spec.n0);

    for (long n = spec.n0;; ++n) {
        if (P.value().acc() + spec.lead(n).eq < acc)
            throw Error("telescoped_sum: internal accuracy shortfall");
        out.add_scaled(detail::materialize_lead(spec, n, qsign), P.value());
        if (n == last) break;

        // same-lattice diff per atom: multiply in what enters, divide out what
        // leaves.  Dividing out a factor with total q-exponent 0 is not
        // possible over this coefficient ring, so such steps rebuild instead.
        bool need_rebuild = false;
        for (size_t i = 0; i < spec.atoms.size() && !need_rebuild; ++i) {
            const auto& a = spec.atoms[i];
            detail::atom_exponents(a, n + 1, hi, tmp);
            auto in_new = [&](long e) {
                if (tmp.empty()) return false;
                return e >= tmp.front() && e <= tmp.back() && ((e - tmp.front()) % a.t) == 0;
            };
            for (long e : ranges[i]) {
                if (!in_new(e) && !a.inverted && a.base.eq + e == 0) {
                    need_rebuild = true;
                    break;
                }
            }
        }
        if (need_rebuild) {
            rebuild_at(n + 1);
            continue;
        }
        for (size_t i = 0; i < spec.atoms.size(); ++i) {
            const auto& a = spec.atoms[i];
            detail::atom_exponents(a, n + 1, hi, tmp);
            auto in_old = [&](long e) {
                if (ranges[i].empty()) return false;
                long lo = ranges[i].front(), hi2 = ranges[i].back();
                return e >= lo && e <= hi2 && ((e - lo) % a.t) == 0;
            };
            auto in_new = [&](long e) {
                if (tmp.empty()) return false;
                long lo = tmp.front(), hi2 = tmp.back();
                return e >= lo && e <= hi2 && ((e - lo) % a.t) == 0;
            };
            for (long e : tmp) {
                if (in_old(e)) continue;
                Monomial f = detail::materialize_factor(a, e, qsign);
                if (a.inverted)
                    P.mul_geo(f);
                else
                    P.mul_factor(f);
            }
            for (long e : ranges[i]) {
                if (in_new(e)) continue;
                Monomial f = detail::materialize_factor(a, e, qsign);
                if (a.inverted)
                    P.mul_factor(f);
                else
                    P.mul_geo(f);
            }
            ranges[i] = tmp;
        }
    }
    return out;
}

// Naive evaluation of the same SumSpec (shared semantics, independent path).
inline QSeries naive_sum(const SumSpec& spec, int acc, int qsign = +1, long cap = -1) {
    TermFamily f;
    f.n0 = spec.n0;
    f.term = [&spec, qsign](long n, int a) { return term_naive(spec, n, a, qsign); };
    f.vbound = [&spec](long n) { return term_vbound(spec, n); };
    return sum_family(f, acc, cap);
}

}  // namespace qmock::qkit
