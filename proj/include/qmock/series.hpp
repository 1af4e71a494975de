#pragma once

#include <map>
#include <optional>
#include <string>

#include "qmock/laurent.hpp"

namespace qmock {

// Sentinel accuracy for values that are exact polynomials.  Kept far from
// INT_MAX so that the min/shift bookkeeping cannot overflow.
inline constexpr int kExactAcc = 1 << 24;

inline int clamp_acc(long long a) {
    if (a > kExactAcc) return kExactAcc;
    if (a < -kExactAcc) return -kExactAcc;
    return static_cast<int>(a);
}

struct ComparisonReport {
    struct Mismatch {
        int q_exp;
        LaurentPoly lhs;
        LaurentPoly rhs;
    };
    bool pass = true;
    int compared_through = 0;
    std::optional<Mismatch> first_mismatch;
};

// Truncated Laurent series in q whose coefficients are LaurentPoly values.
//
//   val  lowest q-exponent that may carry a nonzero coefficient
//   acc  coefficients are complete for every exponent <= acc
//
// acc == val - 1 encodes "no reliable coefficients".  All operations track
// accuracy soundly and never fabricate coefficients beyond it.
class QSeries {
  public:
    QSeries() : val_(0), acc_(kExactAcc) {}

    static QSeries zero(int acc = kExactAcc) {
        QSeries s;
        s.acc_ = acc;
        s.val_ = acc + 1;
        return s;
    }
    static QSeries one(int acc = kExactAcc) { return from_monomial(Monomial(1, 0, 0, 0), acc); }

    static QSeries from_monomial(const Monomial& m, int acc = kExactAcc) {
        QSeries s;
        s.acc_ = acc;
        s.val_ = m.eq;
        if (m.eq <= acc) s.coeffs_[m.eq] = LaurentPoly::monomial(m.c, m.ez, m.ea);
        return s;
    }
    static QSeries from_poly(const LaurentPoly& p, int q_exp = 0, int acc = kExactAcc) {
        QSeries s;
        s.acc_ = acc;
        s.val_ = q_exp;
        if (q_exp <= acc && !p.is_zero()) s.coeffs_[q_exp] = p;
        return s;
    }

    int val() const { return val_; }
    int acc() const { return acc_; }
    const std::map<int, LaurentPoly>& coeffs() const { return coeffs_; }

    LaurentPoly coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? LaurentPoly() : it->second;
    }

    bool known_zero() const { return coeffs_.empty(); }

    // raise val to the lowest exponent actually present (exact: missing
    // coefficients in [val, first) are zero by construction)
    QSeries& tighten() {
        val_ = coeffs_.empty() ? acc_ + 1 : coeffs_.begin()->first;
        return *this;
    }

    QSeries truncated(int acc) const {
        QSeries out = *this;
        out.acc_ = std::min(acc_, acc);
        out.coeffs_.erase(out.coeffs_.upper_bound(out.acc_), out.coeffs_.end());
        if (out.val_ > out.acc_ + 1) out.val_ = out.acc_ + 1;
        return out;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries out;
        out.acc_ = std::min(a.acc_, b.acc_);
        out.val_ = std::min(a.val_, b.val_);
        out.coeffs_ = a.coeffs_;
        out.coeffs_.erase(out.coeffs_.upper_bound(out.acc_), out.coeffs_.end());
        for (const auto& [k, p] : b.coeffs_) {
            if (k > out.acc_) break;
            auto it = out.coeffs_.find(k);
            if (it == out.coeffs_.end()) {
                out.coeffs_[k] = p;
            } else {
                it->second += p;
                if (it->second.is_zero()) out.coeffs_.erase(it);
            }
        }
        if (out.val_ > out.acc_ + 1) out.val_ = out.acc_ + 1;
        return out;
    }

    QSeries& operator+=(const QSeries& b) {
        *this = *this + b;
        return *this;
    }

    friend QSeries operator-(const QSeries& s) {
        QSeries out = s;
        for (auto& [k, p] : out.coeffs_) p = -p;
        return out;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
    QSeries& operator-=(const QSeries& b) {
        *this = *this - b;
        return *this;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries ta = a, tb = b;
        ta.tighten();
        tb.tighten();
        QSeries out;
        out.val_ = clamp_acc(static_cast<long long>(ta.val_) + tb.val_);
        out.acc_ = clamp_acc(std::min(static_cast<long long>(ta.acc_) + tb.val_,
                                      static_cast<long long>(tb.acc_) + ta.val_));
        if (ta.coeffs_.empty() || tb.coeffs_.empty()) {
            out.val_ = out.acc_ + 1;
            return out;
        }
        // accumulate per output exponent
        for (const auto& [ka, pa] : ta.coeffs_) {
            if (ka + tb.val_ > out.acc_) break;
            for (const auto& [kb, pb] : tb.coeffs_) {
                int k = ka + kb;
                if (k > out.acc_) break;
                auto it = out.coeffs_.find(k);
                if (it == out.coeffs_.end()) {
                    out.coeffs_[k] = pa * pb;
                } else {
                    it->second += pa * pb;
                }
            }
        }
        for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
            it = it->second.is_zero() ? out.coeffs_.erase(it) : std::next(it);
        return out;
    }

    QSeries& operator*=(const QSeries& b) {
        *this = *this * b;
        return *this;
    }

    // multiply coefficients by c*z^ez*a^ea and shift q-exponents by eq
    QSeries scaled(const Monomial& m) const {
        QSeries out;
        out.val_ = clamp_acc(static_cast<long long>(val_) + m.eq);
        out.acc_ = clamp_acc(static_cast<long long>(acc_) + m.eq);
        for (const auto& [k, p] : coeffs_) out.coeffs_[k + m.eq] = p.scaled(m.c, m.ez, m.ea);
        return out;
    }

    // this += other scaled by m, in place
    void add_scaled(const Monomial& m, const QSeries& other) {
        int new_acc = std::min(acc_, clamp_acc(static_cast<long long>(other.acc_) + m.eq));
        val_ = std::min(val_, clamp_acc(static_cast<long long>(other.val_) + m.eq));
        acc_ = new_acc;
        coeffs_.erase(coeffs_.upper_bound(acc_), coeffs_.end());
        for (const auto& [k, p] : other.coeffs_) {
            int kk = k + m.eq;
            if (kk > acc_) break;
            auto it = coeffs_.find(kk);
            if (it == coeffs_.end()) {
                auto sp = p.scaled(m.c, m.ez, m.ea);
                if (!sp.is_zero()) coeffs_[kk] = std::move(sp);
            } else {
                it->second += p.scaled(m.c, m.ez, m.ea);
                if (it->second.is_zero()) coeffs_.erase(it);
            }
        }
        if (val_ > acc_ + 1) val_ = acc_ + 1;
    }

    // coefficient at q^k multiplied by (-1)^k
    QSeries q_negated() const {
        QSeries out = *this;
        for (auto& [k, p] : out.coeffs_)
            if (k % 2 != 0) p = -p;
        return out;
    }

    // q -> q^t
    QSeries q_power(int t) const {
        if (t < 1) throw Error("series_q_power: t must be >= 1");
        if (t == 1) return *this;
        QSeries out;
        out.val_ = clamp_acc(static_cast<long long>(t) * val_);
        out.acc_ = clamp_acc(static_cast<long long>(t) * acc_ + (t - 1));
        for (const auto& [k, p] : coeffs_) out.coeffs_[t * k] = p;
        return out;
    }

    // Multiplicative inverse.  Requires the lowest nonzero coefficient to be a
    // single term with coefficient +-1.
    QSeries inverse() const {
        QSeries s = *this;
        s.tighten();
        if (s.coeffs_.empty())
            throw NotInvertible("series_invert: series has no nonzero coefficient through accuracy");
        const int v = s.val_;
        const LaurentPoly& low = s.coeffs_.begin()->second;
        if (!low.is_unit_monomial())
            throw NotInvertible("series_invert: lowest coefficient '" + low.str() + "' is not a unit monomial");
        Monomial u = low.as_monomial();
        u.eq = v;
        Monomial ui = u.inverse();
        // d = s / (u q^v) has constant term 1; invert by recurrence
        QSeries d = s.scaled(ui);
        const int N = d.acc_;
        std::map<int, LaurentPoly> inv;
        inv[0] = LaurentPoly::constant(1);
        for (int k = 1; k <= N; ++k) {
            LaurentPoly ek;
            for (const auto& [j, dj] : d.coeffs_) {
                if (j < 1) continue;
                if (j > k) break;
                auto it = inv.find(k - j);
                if (it != inv.end()) ek += dj * it->second;
            }
            if (!ek.is_zero()) inv[k] = -ek;
        }
        QSeries e;
        e.val_ = 0;
        e.acc_ = N;
        for (auto& [k, p] : inv)
            if (!p.is_zero()) e.coeffs_[k] = std::move(p);
        return e.scaled(ui);
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.val_ == b.val_ && a.acc_ == b.acc_ && a.coeffs_ == b.coeffs_;
    }

    // Canonical text: "<poly>*q^<k>" terms joined by " + " in ascending k,
    // multi-term polys parenthesized, q^0 elided, q^1 written "q", and a
    // trailing "O(q^<acc+1>)" carrying the accuracy.  val is serialized
    // tightened (the lowest exponent actually present).
    std::string str() const {
        QSeries t = *this;
        t.tighten();
        std::string out;
        for (const auto& [k, p] : t.coeffs_) {
            if (!out.empty()) out += " + ";
            std::string ps = p.str();
            if (p.size() > 1) ps = "(" + ps + ")";
            if (k == 0) {
                out += ps;
            } else {
                out += ps + "*q";
                if (k != 1) out += "^" + std::to_string(k);
            }
        }
        if (out.empty()) out = "0";
        out += " + O(q^" + std::to_string(static_cast<long long>(t.acc_) + 1) + ")";
        return out;
    }

    static QSeries parse(const std::string& text);

    // deserialization hook; keys above acc are dropped, val is clamped sound
    static QSeries from_parts(int val, int acc, std::map<int, LaurentPoly> coeffs) {
        QSeries out;
        out.val_ = val;
        out.acc_ = acc;
        out.coeffs_ = std::move(coeffs);
        for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
            it = it->second.is_zero() ? out.coeffs_.erase(it) : std::next(it);
        out.coeffs_.erase(out.coeffs_.upper_bound(out.acc_), out.coeffs_.end());
        if (!out.coeffs_.empty()) out.val_ = std::min(out.val_, out.coeffs_.begin()->first);
        if (out.val_ > out.acc_ + 1) out.val_ = out.acc_ + 1;
        return out;
    }

  private:
    int val_;
    int acc_;
    std::map<int, LaurentPoly> coeffs_;
};

// Parses the canonical text form produced by str().
inline QSeries QSeries::parse(const std::string& text) {
    detail::TermScanner sc(text);
    QSeries out;
    out.coeffs_.clear();
    bool have_acc = false;
    bool first = true;
    while (!sc.done()) {
        if (!first && !sc.accept('+')) throw ParseError("expected '+' in series '" + text + "'");
        first = false;
        sc.skip_ws();
        if (sc.i < sc.s.size() && sc.s[sc.i] == 'O') {
            ++sc.i;
            if (!sc.accept('(')) throw ParseError("expected '(' after O");
            sc.skip_ws();
            if (sc.i >= sc.s.size() || sc.s[sc.i] != 'q') throw ParseError("expected q in O(...)");
            ++sc.i;
            long long n = sc.accept('^') ? sc.integer() : 1;
            if (!sc.accept(')')) throw ParseError("expected ')' after O(q^..)");
            out.acc_ = clamp_acc(n - 1);
            have_acc = true;
            if (!sc.done()) throw ParseError("trailing input after O(...) in '" + text + "'");
            break;
        }
        LaurentPoly p;
        long long k = 0;
        if (sc.accept('(')) {
            // parenthesized poly, then optional *q^k
            std::string inner;
            size_t depth = 1;
            while (sc.i < sc.s.size() && depth > 0) {
                char c = sc.s[sc.i];
                if (c == '(') ++depth;
                if (c == ')') {
                    --depth;
                    if (depth == 0) break;
                }
                inner += c;
                ++sc.i;
            }
            if (depth != 0) throw ParseError("unbalanced parens in '" + text + "'");
            ++sc.i;  // closing ')'
            p = LaurentPoly::parse(inner);
            if (sc.accept('*')) {
                sc.skip_ws();
                if (sc.i >= sc.s.size() || sc.s[sc.i] != 'q') throw ParseError("expected q factor");
                ++sc.i;
                k = sc.accept('^') ? sc.integer() : 1;
            }
        } else {
            Int c;
            std::vector<int> exps;
            sc.monomial("zaq", c, exps);
            p = LaurentPoly::monomial(c, exps[0], exps[1]);
            k = exps[2];
        }
        if (!p.is_zero()) {
            auto it = out.coeffs_.find(static_cast<int>(k));
            if (it == out.coeffs_.end())
                out.coeffs_[static_cast<int>(k)] = p;
            else {
                it->second += p;
                if (it->second.is_zero()) out.coeffs_.erase(it);
            }
        }
    }
    if (!have_acc) out.acc_ = kExactAcc;
    out.coeffs_.erase(out.coeffs_.upper_bound(out.acc_), out.coeffs_.end());
    out.tighten();
    return out;
}

// two sides of an identity, both at the same accuracy
struct SidePair {
    QSeries lhs;
    QSeries rhs;
};

inline QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries series_invert(const QSeries& s) { return s.inverse(); }
inline QSeries series_scale(const Monomial& m, const QSeries& s) { return s.scaled(m); }
inline QSeries series_q_negate(const QSeries& s) { return s.q_negated(); }
inline QSeries series_q_power(const QSeries& s, int t) { return s.q_power(t); }

inline ComparisonReport series_compare(const QSeries& a, const QSeries& b, int through) {
    if (through > a.acc() || through > b.acc())
        throw InsufficientAccuracy("series_compare: order " + std::to_string(through) +
                                   " exceeds accuracy (" + std::to_string(a.acc()) + ", " +
                                   std::to_string(b.acc()) + ")");
    ComparisonReport rep;
    rep.compared_through = through;
    for (int k = std::min(a.val(), b.val()); k <= through; ++k) {
        LaurentPoly pa = a.coeff(k), pb = b.coeff(k);
        if (!(pa == pb)) {
            rep.pass = false;
            rep.first_mismatch = ComparisonReport::Mismatch{k, std::move(pa), std::move(pb)};
            return rep;
        }
    }
    return rep;
}

}  // namespace qmock
