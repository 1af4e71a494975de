#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qmock/errors.hpp"

namespace qmock::partitions {

struct Part {
    long value = 0;
    bool overlined = false;
};

using Item = std::vector<Part>;  // weakly decreasing by value

struct EnumResult {
    long n = 0;
    long long count = 0;
    std::optional<std::vector<Item>> items;
};

inline std::string render(const Item& item) {
    std::string out;
    for (size_t i = 0; i < item.size(); ++i) {
        if (i) out += "+";
        out += std::to_string(item[i].value);
        if (item[i].overlined) out += "~";
    }
    return out;
}

namespace detail {

// canonical item order: weakly decreasing values, overlined occurrence first
// among equal values; item lists sorted by rendered text
inline void finalize(std::vector<Item>& items) {
    for (auto& it : items)
        std::stable_sort(it.begin(), it.end(), [](const Part& a, const Part& b) {
            if (a.value != b.value) return a.value > b.value;
            return a.overlined && !b.overlined;
        });
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return render(a) < render(b);
    });
}

}  // namespace detail

// partitions of n (positive parts) with every odd part less than twice the
// smallest part
inline EnumResult p_omega(long n, bool list = false) {
    if (n <= 0) throw Error("p_omega: n must be >= 1");
    EnumResult res;
    res.n = n;
    if (list) res.items.emplace();
    std::vector<long> parts;
    auto rec = [&](auto&& self, long rem, long min_next, long smallest) -> void {
        if (rem == 0) {
            ++res.count;
            if (list) {
                Item it;
                for (auto v : parts) it.push_back({v, false});
                std::reverse(it.begin(), it.end());
                res.items->push_back(std::move(it));
            }
            return;
        }
        for (long p = min_next; p <= rem; ++p) {
            if ((p % 2) != 0 && p >= 2 * smallest) continue;
            parts.push_back(p);
            self(self, rem - p, p, smallest);
            parts.pop_back();
        }
    };
    for (long s = 1; s <= n; ++s) {
        parts.assign(1, s);
        rec(rec, n - s, s, s);
    }
    if (list) detail::finalize(*res.items);
    return res;
}

// partitions of n into distinct non-negative parts (0 allowed once) with every
// odd part less than twice the smallest part
inline EnumResult p_nu(long n, bool list = false) {
    if (n < 0) throw Error("p_nu: n must be >= 0");
    EnumResult res;
    res.n = n;
    if (list) res.items.emplace();
    std::vector<long> parts;
    auto rec = [&](auto&& self, long rem, long min_next, long smallest) -> void {
        if (rem == 0) {
            ++res.count;
            if (list) {
                Item it;
                for (auto v : parts) it.push_back({v, false});
                std::reverse(it.begin(), it.end());
                res.items->push_back(std::move(it));
            }
            return;
        }
        for (long p = min_next; p <= rem; ++p) {
            if ((p % 2) != 0 && p >= 2 * smallest) continue;
            parts.push_back(p);
            self(self, rem - p, p + 1, smallest);
            parts.pop_back();
        }
    };
    for (long s = 0; s <= n; ++s) {
        // smallest part s; for s = 0 the odd-part bound excludes all odd parts
        parts.assign(1, s);
        rec(rec, n - s, s + 1, s);
        parts.clear();
    }
    if (list) detail::finalize(*res.items);
    return res;
}

// overpartitions of n: the first occurrence of each part value may be overlined
inline EnumResult overpartition_count(long n, bool list = false) {
    if (n <= 0) throw Error("overpartition_count: n must be >= 1");
    EnumResult res;
    res.n = n;
    if (list) res.items.emplace();
    std::vector<std::pair<long, long>> vm;  // (value, multiplicity), ascending values
    auto emit = [&]() {
        long k = static_cast<long>(vm.size());
        res.count += 1LL << k;
        if (list) {
            for (long mask = 0; mask < (1L << k); ++mask) {
                Item it;
                for (long i = k - 1; i >= 0; --i) {
                    auto [v, mult] = vm[i];
                    it.push_back({v, (mask >> i & 1) != 0});
                    for (long j = 1; j < mult; ++j) it.push_back({v, false});
                }
                res.items->push_back(std::move(it));
            }
        }
    };
    auto rec = [&](auto&& self, long rem, long min_val) -> void {
        if (rem == 0) {
            emit();
            return;
        }
        for (long v = min_val; v <= rem; ++v) {
            for (long mult = 1; mult * v <= rem; ++mult) {
                vm.push_back({v, mult});
                self(self, rem - mult * v, v + 1);
                vm.pop_back();
            }
        }
    };
    rec(rec, n, 1);
    if (list) detail::finalize(*res.items);
    return res;
}

// Overpartitions counted by p_star: smallest part s >= 0 (always overlined,
// even parts and small odd parts are forced overlines), a block of distinct
// overlined parts in [s+1, 2s], distinct overlined even parts >= 2s+2, and odd
// parts >= 2s+1 whose first occurrence may be overlined.
inline EnumResult p_star(long n, bool list = false) {
    if (n <= 0) throw Error("p_star: n must be >= 1");
    EnumResult res;
    res.n = n;
    if (list) res.items.emplace();
    for (long s = 0; s <= n; ++s) {
        long rem_after_s = n - s;
        // enumerate A subset of [s+1, 2s], B subset of even >= 2s+2, C odd multiset
        std::vector<long> a_pick;
        auto forA = [&](auto&& self, long lo, long rem, auto&& inner) -> void {
            inner(a_pick, rem);
            for (long v = lo; v <= 2 * s && v <= rem; ++v) {
                a_pick.push_back(v);
                self(self, v + 1, rem - v, inner);
                a_pick.pop_back();
            }
        };
        std::vector<long> b_pick;
        auto forB = [&](auto&& self, long lo, long rem, auto&& inner) -> void {
            inner(b_pick, rem);
            for (long v = lo; v <= rem; v += 2) {
                b_pick.push_back(v);
                self(self, v + 2, rem - v, inner);
                b_pick.pop_back();
            }
        };
        std::vector<std::pair<long, long>> c_vm;
        auto forC = [&](auto&& self, long lo, long rem, auto&& inner) -> void {
            if (rem == 0) {
                inner(c_vm);
                return;
            }
            for (long v = lo; v <= rem; v += 2) {
                for (long mult = 1; mult * v <= rem; ++mult) {
                    c_vm.push_back({v, mult});
                    self(self, v + 2, rem - mult * v, inner);
                    c_vm.pop_back();
                }
            }
        };
        forA(forA, s + 1, rem_after_s, [&](std::vector<long>& A, long remA) {
            forB(forB, 2 * s + 2, remA, [&](std::vector<long>& B, long remB) {
                forC(forC, 2 * s + 1, remB, [&](std::vector<std::pair<long, long>>& C) {
                    long k = static_cast<long>(C.size());
                    res.count += 1LL << k;
                    if (list) {
                        for (long mask = 0; mask < (1L << k); ++mask) {
                            Item it;
                            it.push_back({s, true});
                            for (long v : A) it.push_back({v, true});
                            for (long v : B) it.push_back({v, true});
                            for (long i = 0; i < k; ++i) {
                                auto [v, mult] = C[i];
                                it.push_back({v, (mask >> i & 1) != 0});
                                for (long j = 1; j < mult; ++j) it.push_back({v, false});
                            }
                            res.items->push_back(std::move(it));
                        }
                    }
                });
            });
        });
    }
    if (list) detail::finalize(*res.items);
    return res;
}

// weighted count over partitions of n into odd parts: distinct values
// l_1 < ... < l_k, weight prod w(l_i) with w = multiplicity+1 except
// multiplicity for the largest value
inline long long p_substar(long n) {
    if (n <= 0) throw Error("p_substar: n must be >= 1");
    long long total = 0;
    std::vector<std::pair<long, long>> vm;  // ascending odd values
    auto rec = [&](auto&& self, long rem, long min_val) -> void {
        if (rem == 0) {
            long long w = 1;
            for (size_t i = 0; i < vm.size(); ++i) {
                long mult = vm[i].second;
                w *= (i + 1 == vm.size()) ? mult : mult + 1;
            }
            total += w;
            return;
        }
        for (long v = min_val; v <= rem; v += 2) {
            for (long mult = 1; mult * v <= rem; ++mult) {
                vm.push_back({v, mult});
                self(self, rem - mult * v, v + 2);
                vm.pop_back();
            }
        }
    };
    rec(rec, n, 1);
    return total;
}

// partitions of n into non-negative parts: the smallest part occurs at most
// twice (a zero part at most once), all other parts are distinct, and every
// even part other than the smallest is less than twice the smallest part
inline EnumResult p_prime(long n, bool list = false) {
    if (n < 0) throw Error("p_prime: n must be >= 0");
    EnumResult res;
    res.n = n;
    if (list) res.items.emplace();
    auto emit = [&](long s, long s_mult, const std::vector<long>& mid, const std::vector<long>& odd) {
        ++res.count;
        if (list) {
            Item it;
            for (auto i = odd.rbegin(); i != odd.rend(); ++i) it.push_back({*i, false});
            for (auto i = mid.rbegin(); i != mid.rend(); ++i) it.push_back({*i, false});
            for (long j = 0; j < s_mult; ++j) it.push_back({s, false});
            std::stable_sort(it.begin(), it.end(),
                             [](const Part& a, const Part& b) { return a.value > b.value; });
            res.items->push_back(std::move(it));
        }
    };
    for (long s = 0; s <= n; ++s) {
        for (long s_mult = 1; s_mult <= (s == 0 ? 1 : 2); ++s_mult) {
            long base = s * s_mult;
            if (base > n) break;
            long rem0 = n - base;
            // mid: distinct parts in [s+1, 2s-1]; odd: distinct odd parts >= 2s+1
            std::vector<long> mid;
            auto forMid = [&](auto&& self, long lo, long rem, auto&& inner) -> void {
                inner(mid, rem);
                for (long v = lo; v <= 2 * s - 1 && v <= rem; ++v) {
                    mid.push_back(v);
                    self(self, v + 1, rem - v, inner);
                    mid.pop_back();
                }
            };
            std::vector<long> odds;
            auto forOdd = [&](auto&& self, long lo, long rem, auto&& inner) -> void {
                if (rem == 0) {
                    inner(odds);
                    return;
                }
                for (long v = lo; v <= rem; v += 2) {
                    odds.push_back(v);
                    self(self, v + 2, rem - v, inner);
                    odds.pop_back();
                }
            };
            forMid(forMid, s + 1, rem0, [&](std::vector<long>& M, long remM) {
                forOdd(forOdd, 2 * s + 1, remM, [&](std::vector<long>& O) {
                    emit(s, s_mult, M, O);
                });
            });
        }
    }
    if (list) detail::finalize(*res.items);
    return res;
}

// n = 3j^2+2j or 3j^2+4j+1 patterns of the pentagonal-style theorem
inline int pnt_expected(long n) {
    for (long j = 0; 3 * j * j + 2 * j <= n; ++j) {
        if (3 * j * j + 2 * j == n) return (j % 2) ? -1 : 1;
        if (3 * j * j + 4 * j + 1 == n) return (j % 2) ? -1 : 1;
    }
    return 0;
}

struct PntRow {
    long n;
    long long diff;      // p*(n) - 2 p_*(n)
    int expected;        // (-1)^j at the pentagonal-style indices, else 0
    bool ok;
};

inline std::vector<PntRow> pnt_check(long upTo) {
    if (upTo < 1) throw Error("pnt_check: upTo must be >= 1");
    std::vector<PntRow> rows;
    for (long n = 1; n <= upTo; ++n) {
        long long diff = p_star(n).count - 2 * p_substar(n);
        int expect = pnt_expected(n);
        rows.push_back({n, diff, expect, diff == expect});
    }
    return rows;
}

struct ParityVerdict {
    bool ok = true;
    long first_bad = -1;
    std::string what;
};

// p'(0)=1 and p'(n) even for 1 <= n <= upTo; p*(n) odd exactly at the
// pentagonal-style indices
inline ParityVerdict parity_check(long upTo) {
    ParityVerdict v;
    if (p_prime(0).count != 1) return {false, 0, "p_prime(0) != 1"};
    for (long n = 1; n <= upTo; ++n) {
        if (p_prime(n).count % 2 != 0) return {false, n, "p_prime odd"};
        bool star_odd = (p_star(n).count % 2) != 0;
        bool should = pnt_expected(n) != 0;
        if (star_odd != should) return {false, n, "p_star parity off-pattern"};
    }
    return v;
}

}  // namespace qmock::partitions
