#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "qmock/errors.hpp"

namespace qmock {

using Int = mpz_class;

// One exponent pair (z-exponent, a-exponent).  "a" is the second generic
// variable; any text rendering uses the letter 'a' for it.
struct VarExp {
    int32_t ez = 0;
    int32_t ea = 0;

    friend bool operator==(const VarExp& l, const VarExp& r) = default;
    friend auto operator<=>(const VarExp& l, const VarExp& r) = default;
};

// A signed monomial c * z^ez * a^ea * q^eq with c != 0.  Used as the argument
// slot of every generator (Pochhammer bases, theta arguments, specializations).
struct Monomial {
    Int c = 1;
    int ez = 0;
    int ea = 0;
    int eq = 0;

    Monomial() = default;
    Monomial(Int cc, int z, int a, int qq) : c(std::move(cc)), ez(z), ea(a), eq(qq) {
        if (c == 0) throw Error("Monomial: zero coefficient");
    }

    bool is_unit() const { return c == 1 || c == -1; }

    Monomial inverse() const {
        if (!is_unit()) throw Error("Monomial: inverse of non-unit " + c.get_str());
        return Monomial(c, -ez, -ea, -eq);
    }

    friend Monomial operator*(const Monomial& l, const Monomial& r) {
        return Monomial(l.c * r.c, l.ez + r.ez, l.ea + r.ea, l.eq + r.eq);
    }
    friend Monomial operator-(const Monomial& m) { return Monomial(-m.c, m.ez, m.ea, m.eq); }

    // integer power; negative k requires a unit coefficient
    Monomial pow(long k) const {
        if (k == 0) return Monomial(1, 0, 0, 0);
        Int ck;
        if (k > 0) {
            mpz_pow_ui(ck.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
        } else {
            if (!is_unit()) throw Error("Monomial: negative power of non-unit");
            ck = (c == -1 && (k % 2) != 0) ? -1 : 1;
        }
        return Monomial(ck, static_cast<int>(ez * k), static_cast<int>(ea * k),
                        static_cast<int>(eq * k));
    }

    friend bool operator==(const Monomial& l, const Monomial& r) {
        return l.c == r.c && l.ez == r.ez && l.ea == r.ea && l.eq == r.eq;
    }
};

// Exact Laurent polynomial in z and a over arbitrary-precision integers.
// Terms are kept sorted ascending by (ez, ea); zero coefficients are never stored.
class LaurentPoly {
  public:
    struct Term {
        VarExp e;
        Int c;
    };

    LaurentPoly() = default;

    static LaurentPoly constant(Int c) {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({{0, 0}, std::move(c)});
        return p;
    }
    static LaurentPoly monomial(const Int& c, int ez, int ea) {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({{ez, ea}, c});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_[0].e == VarExp{0, 0} && terms_[0].c == 1;
    }
    // exactly one term with coefficient +-1
    bool is_unit_monomial() const { return terms_.size() == 1 && (terms_[0].c == 1 || terms_[0].c == -1); }

    Monomial as_monomial() const {
        if (terms_.size() != 1) throw Error("LaurentPoly: not a monomial");
        return Monomial(terms_[0].c, terms_[0].e.ez, terms_[0].e.ea, 0);
    }

    Int coeff(int ez, int ea) const {
        VarExp key{ez, ea};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, const VarExp& k) { return t.e < k; });
        if (it != terms_.end() && it->e == key) return it->c;
        return 0;
    }

    friend LaurentPoly operator+(const LaurentPoly& l, const LaurentPoly& r) {
        LaurentPoly out;
        out.terms_.reserve(l.terms_.size() + r.terms_.size());
        auto a = l.terms_.begin(), b = r.terms_.begin();
        while (a != l.terms_.end() && b != r.terms_.end()) {
            if (a->e < b->e) {
                out.terms_.push_back(*a++);
            } else if (b->e < a->e) {
                out.terms_.push_back(*b++);
            } else {
                Int s = a->c + b->c;
                if (s != 0) out.terms_.push_back({a->e, std::move(s)});
                ++a, ++b;
            }
        }
        out.terms_.insert(out.terms_.end(), a, l.terms_.end());
        out.terms_.insert(out.terms_.end(), b, r.terms_.end());
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& r) {
        *this = *this + r;
        return *this;
    }

    friend LaurentPoly operator-(const LaurentPoly& p) {
        LaurentPoly out = p;
        for (auto& t : out.terms_) t.c = -t.c;
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& l, const LaurentPoly& r) { return l + (-r); }

    friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        if (r.terms_.size() == 1) return l.scaled(r.terms_[0].c, r.terms_[0].e.ez, r.terms_[0].e.ea);
        if (l.terms_.size() == 1) return r.scaled(l.terms_[0].c, l.terms_[0].e.ez, l.terms_[0].e.ea);
        std::unordered_map<uint64_t, Int> acc;
        acc.reserve(l.terms_.size() * 2);
        for (const auto& a : l.terms_)
            for (const auto& b : r.terms_) {
                uint64_t key = pack(a.e.ez + b.e.ez, a.e.ea + b.e.ea);
                auto it = acc.try_emplace(key).first;
                mpz_addmul(it->second.get_mpz_t(), a.c.get_mpz_t(), b.c.get_mpz_t());
            }
        return from_accumulator(acc);
    }

    LaurentPoly& operator*=(const LaurentPoly& r) {
        *this = *this * r;
        return *this;
    }

    // multiply by c * z^dz * a^da
    LaurentPoly scaled(const Int& c, int dz, int da) const {
        if (c == 0) return {};
        LaurentPoly out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            out.terms_.push_back({{t.e.ez + dz, t.e.ea + da}, t.c * c});
        return out;
    }

    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) {
        if (l.terms_.size() != r.terms_.size()) return false;
        for (size_t i = 0; i < l.terms_.size(); ++i)
            if (!(l.terms_[i].e == r.terms_[i].e && l.terms_[i].c == r.terms_[i].c)) return false;
        return true;
    }

    // Canonical text: terms ascending by (ez, ea), "<int>*z^<ez>*a^<ea>" with
    // exponent 1 shortened to the bare variable and exponent 0 omitted.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (i) out += " + ";
            out += term_str(terms_[i]);
        }
        return out;
    }

    static LaurentPoly parse(const std::string& s);

  private:
    std::vector<Term> terms_;

    static uint64_t pack(int32_t ez, int32_t ea) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(ez)) << 32) |
               static_cast<uint64_t>(static_cast<uint32_t>(ea));
    }

    static LaurentPoly from_accumulator(std::unordered_map<uint64_t, Int>& acc) {
        LaurentPoly out;
        out.terms_.reserve(acc.size());
        for (auto& [key, c] : acc) {
            if (c == 0) continue;
            int32_t ez = static_cast<int32_t>(key >> 32);
            int32_t ea = static_cast<int32_t>(key & 0xffffffffu);
            out.terms_.push_back({{ez, ea}, std::move(c)});
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& a, const Term& b) { return a.e < b.e; });
        return out;
    }

    static std::string term_str(const Term& t) {
        std::string out = t.c.get_str();
        auto var = [&out](const char* name, int e) {
            if (e == 0) return;
            out += "*";
            out += name;
            if (e != 1) {
                out += "^";
                out += std::to_string(e);
            }
        };
        var("z", t.e.ez);
        var("a", t.e.ea);
        return out;
    }
};

namespace detail {

// shared by the poly parser and the CLI monomial grammar
struct TermScanner {
    const std::string& s;
    size_t i = 0;
    explicit TermScanner(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError("expected integer in '" + s + "' at " + std::to_string(start));
        return std::stoll(s.substr(start, i - start));
    }
    Int big_integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError("expected integer in '" + s + "' at " + std::to_string(start));
        return Int(s.substr(start, i - start));
    }

    // [-][<int>][*]var[^e][*var[^e]...] over variables drawn from `vars`;
    // returns coefficient and per-variable exponents.
    void monomial(const std::string& vars, Int& c, std::vector<int>& exps) {
        c = 1;
        exps.assign(vars.size(), 0);
        skip_ws();
        bool saw_factor = false;
        if (i < s.size() && s[i] == '-' &&
            !(i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            c = -1;
            ++i;
        }
        skip_ws();
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == '+')) {
            c *= big_integer();
            saw_factor = true;
        }
        while (true) {
            size_t save = i;
            skip_ws();
            if (saw_factor) {
                if (!accept('*')) {
                    // allow juxtaposition like "2z" as well
                    skip_ws();
                }
            }
            skip_ws();
            if (i >= s.size()) break;
            auto pos = vars.find(s[i]);
            if (pos == std::string::npos) {
                i = save;
                break;
            }
            ++i;
            long long e = 1;
            if (accept('^')) e = integer();
            exps[pos] += static_cast<int>(e);
            saw_factor = true;
        }
        if (!saw_factor) throw ParseError("expected monomial in '" + s + "'");
    }
};

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(const std::string& s) {
    detail::TermScanner sc(s);
    LaurentPoly out;
    bool first = true;
    while (!sc.done()) {
        if (!first && !sc.accept('+')) throw ParseError("expected '+' in poly '" + s + "'");
        first = false;
        if (sc.done()) throw ParseError("dangling '+' in poly '" + s + "'");
        Int c;
        std::vector<int> exps;
        sc.monomial("za", c, exps);
        if (c != 0) out += LaurentPoly::monomial(c, exps[0], exps[1]);
    }
    return out;
}

}  // namespace qmock
