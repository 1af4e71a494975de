// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  All comparisons are exact coefficientwise equalities.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "qmock/registry.hpp"

using namespace qmock;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

long long coeffn(const QSeries& s, int k) {
    LaurentPoly p = s.coeff(k);
    if (p.is_zero()) return 0;
    if (p.size() != 1 || !(p.terms()[0].e == VarExp{0, 0})) return -999999;
    return p.terms()[0].c.get_si();
}

// 1. the identity suite at order 30
void criterion1() {
    auto start = std::chrono::steady_clock::now();
    auto reports = registry::verify_all(30, 1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = reports.size() >= 55;
    std::string detail;
    for (const auto& r : reports) {
        if (!r.ok()) {
            ok = false;
            detail += r.id + " " + registry::status_name(r.status) + "; ";
        }
    }
    for (const char* id : {"THM3", "THM4", "FUNC_REL", "AY_OMEGA", "AY_NU", "KANG_SPECIAL",
                           "THM_AZ", "COR_AZ", "AZ_NEG1", "EULER_DISG", "Z_NEG_QINV",
                           "ALPHA_NEG_Z", "OMEGA_DIFF", "EULER_AT", "THM_AQ", "PHI_COR", "COR_ZQ",
                           "CORC", "AQ_ZNEG1", "FINAL_COR"}) {
        bool found = false;
        for (const auto& r : reports) found = found || (r.id == id && r.status == registry::Status::Pass);
        if (!found) {
            ok = false;
            detail += std::string(id) + " missing/failing; ";
        }
    }
    bool printed_ok = false;
    for (const auto& r : reports)
        if (r.id == "JTP_PRINTED")
            printed_ok = r.status == registry::Status::PassExpectedFail && r.first_mismatch &&
                         r.first_mismatch->q_exp == 2;
    if (!printed_ok) {
        ok = false;
        detail += "JTP_PRINTED expected-fail contract broken; ";
    }
    if (secs > 120.0) {
        ok = false;
        detail += "single-threaded suite exceeded 120 s; ";
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu entries, %.1f s single-threaded", reports.size(), secs);
    report(1, "verify --all --order 30", ok, detail.empty() ? buf : detail + buf);
}

// 2. the worked numerics
void criterion2() {
    using namespace partitions;
    bool ok = true;
    std::string detail;
    auto need = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            detail += std::string(what) + "; ";
        }
    };
    need(p_star(5).count == 17, "p*(5)=17");
    need(p_substar(5) == 9, "p_*(5)=9");
    need(p_star(5).count - 2 * p_substar(5) == -1, "p*(5)-2p_*(5)=-1");
    need(p_star(6).count == 28, "p*(6)=28");
    need(p_substar(6) == 14, "p_*(6)=14");
    need(p_star(6).count - 2 * p_substar(6) == 0, "p*(6)-2p_*(6)=0");
    need(overpartition_count(3).count == 8, "overpartitions(3)=8");
    need(p_prime(5).count == 4, "p'(5)=4");
    const long long table[26] = {1, 2, 2, 2, 4, 4, 4, 6, 6, 8, 10, 10, 12,
                                 14, 16, 18, 22, 24, 26, 32, 34, 38, 44, 48, 54, 62};
    for (int n = 0; n <= 25; ++n)
        need(p_prime(n).count == table[n], "p'(0..25) table");
    for (const auto& row : pnt_check(30))
        need(row.ok, "p*(n)-2p_*(n) pattern through 30");
    report(2, "worked partition numerics reproduced exactly", ok, detail);
}

// 3. enumerators against their generating functions
void criterion3() {
    using mock::Family;
    bool ok = true;
    std::string detail;
    auto need = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += what + "; ";
        }
    };
    QSeries om = mock::build(Family::omega, {}, +1, 25);
    for (int n = 1; n <= 25; ++n)
        need(partitions::p_omega(n).count == coeffn(om, n - 1), "p_omega vs q*omega(q)");
    QSeries nuneg = mock::build(Family::nu, {}, -1, 25);
    for (int n = 0; n <= 25; ++n)
        need(partitions::p_nu(n).count == coeffn(nuneg, n), "p_nu vs nu(-q)");
    auto star = registry::instantiate("PSTAR_GF", 20);
    for (int n = 1; n <= 20; ++n)
        need(partitions::p_star(n).count == coeffn(star.rhs, n), "p_star vs its sum");
    auto sub = registry::instantiate("PSUBSTAR_GF", 20);
    for (int n = 1; n <= 20; ++n)
        need(partitions::p_substar(n) == coeffn(sub.rhs, n), "p_substar vs its sum");
    auto pr = registry::instantiate("PPRIME_GF", 25);
    for (int n = 0; n <= 25; ++n)
        need(partitions::p_prime(n).count == coeffn(pr.rhs, n), "p_prime vs its sum");
    report(3, "enumerator/series oracles exact", ok, detail);
}

// 4. pentagonal analogues through q^60
void criterion4() {
    bool ok = true;
    std::string detail;
    auto check_support = [&](const char* id, auto expected_exponents) {
        auto inst = registry::instantiate(id, 60);
        std::set<long> support;
        std::map<long, int> sign;
        for (long j = 0;; ++j) {
            auto [e1, e2] = expected_exponents(j);
            if (e1 > 60 && e2 > 60) break;
            int s = (j % 2) ? -1 : 1;
            if (e1 <= 60) support.insert(e1), sign[e1] = s;
            if (e2 <= 60) support.insert(e2), sign[e2] = s;
        }
        for (int k = 0; k <= 60; ++k) {
            long long c = coeffn(inst.lhs, k);
            if (support.count(k)) {
                if (c != sign[k]) {
                    ok = false;
                    detail += std::string(id) + " sign at q^" + std::to_string(k) + "; ";
                }
            } else if (c != 0) {
                ok = false;
                detail += std::string(id) + " stray coefficient at q^" + std::to_string(k) + "; ";
            }
        }
    };
    check_support("EPNT1", [](long j) {
        return std::pair<long, long>(6 * j * j + 4 * j + 1, 6 * j * j + 8 * j + 3);
    });
    check_support("EPNT2", [](long j) {
        return std::pair<long, long>(j * (3 * j + 2), (j + 1) * (3 * j + 1));
    });
    report(4, "pentagonal analogues: support and signs through q^60", ok, detail);
}

// 5. property suites
void criterion5() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(98123);
    std::uniform_int_distribution<int> nt(0, 4), ex(-3, 3), cf(-9, 9), sg(0, 1);
    auto rand_poly = [&] {
        LaurentPoly p;
        int n = nt(rng);
        for (int i = 0; i < n; ++i) {
            int c = cf(rng);
            p += LaurentPoly::monomial(c ? c : 1, ex(rng), ex(rng));
        }
        return p;
    };
    auto rand_series = [&] {
        int v = ex(rng);
        std::map<int, LaurentPoly> coeffs;
        for (int k = v; k <= v + 5; ++k) {
            auto p = rand_poly();
            if (!p.is_zero()) coeffs[k] = p;
        }
        return QSeries::from_parts(v, v + 5, std::move(coeffs));
    };
    auto agree = [](const QSeries& x, const QSeries& y) {
        return series_compare(x, y, std::min(x.acc(), y.acc())).pass;
    };
    for (int rep = 0; rep < 200 && ok; ++rep) {
        QSeries a = rand_series(), b = rand_series(), c = rand_series();
        if (!agree(a + b, b + a) || !agree((a + b) + c, a + (b + c)) || !agree(a * b, b * a) ||
            !agree((a * b) * c, a * (b * c)) || !agree(a * (b + c), a * b + a * c)) {
            ok = false;
            detail += "ring axiom failed at rep " + std::to_string(rep) + "; ";
        }
    }
    for (int rep = 0; rep < 40 && ok; ++rep) {
        QSeries base = rand_series();
        Monomial u(sg(rng) ? 1 : -1, ex(rng), ex(rng), ex(rng));
        QSeries s = QSeries::from_monomial(u, base.acc() + u.eq) +
                    base.scaled(Monomial(1, 0, 0, u.eq + 4));
        QSeries prod = s * s.inverse();
        if (!series_compare(prod, QSeries::one(prod.acc()), prod.acc()).pass) {
            ok = false;
            detail += "inversion contract failed; ";
        }
    }
    // accuracy stability on 10 randomly chosen entries re-verified at order 40
    std::vector<size_t> idx(registry::entries().size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < 10; ++i) {
        const auto& e = registry::entries()[idx[i]];
        auto lo = registry::instantiate(e.id, e.default_acc);
        auto hi = registry::instantiate(e.id, 40);
        auto r40 = registry::verify(e.id, 40);
        int thr = std::min(e.default_acc, 40);
        if (!r40.ok() || !series_compare(lo.lhs, hi.lhs.truncated(thr), thr).pass ||
            !series_compare(lo.rhs, hi.rhs.truncated(thr), thr).pass) {
            ok = false;
            detail += e.id + " accuracy instability; ";
        }
    }
    // fault injection flips exactly the perturbed entry
    registry::Perturbation p{"SUM_THETA", 9};
    auto reports = registry::verify_all(16, 4, &p);
    for (const auto& r : reports) {
        bool should_fail = r.id == "SUM_THETA";
        if (should_fail != !r.ok()) {
            ok = false;
            detail += "fault injection surprised at " + r.id + "; ";
        }
        if (should_fail && (!r.first_mismatch || r.first_mismatch->q_exp > 9)) {
            ok = false;
            detail += "fault injection mismatch bound; ";
        }
    }
    report(5, "ring axioms, inversion, accuracy stability, fault injection", ok, detail);
}

// 6. specialization chains at order 30
void criterion6() {
    bool ok = true;
    std::string detail;
    auto pass = [&](const char* id) {
        auto r = registry::verify(id, 30);
        if (!r.ok()) {
            ok = false;
            detail += std::string(id) + " failed; ";
        }
    };
    // first chain and its links
    pass("THM3");
    pass("LEM_1PSI1");
    pass("F_A1");
    pass("OMEGA1_OMEGA");
    pass("THM3_A1");
    pass("AY_OMEGA");
    auto t3 = registry::instantiate("THM3_A1", 30);
    auto doubled = registry::detail::ay_omega_doubled(30);
    if (!series_compare(t3.lhs, doubled.lhs, 30).pass ||
        !series_compare(t3.rhs, doubled.rhs, 30).pass) {
        ok = false;
        detail += "alpha=1 reduction does not match the doubled two-variable identity; ";
    }
    // second chain and its links
    pass("THM4");
    pass("NU_RECIP");
    pass("SPAB");
    pass("SPAC");
    pass("COR52");
    pass("THM4_A1");
    pass("AY_NU");
    auto t4 = registry::instantiate("THM4_A1", 30);
    auto aynu = registry::instantiate("AY_NU", 30);
    if (!series_compare(t4.lhs, aynu.lhs, 30).pass ||
        !series_compare(t4.rhs, aynu.rhs, 30).pass) {
        ok = false;
        detail += "alpha=1 reduction does not match the nu1(z;-q) identity; ";
    }
    report(6, "specialization chains, endpoints and links at order 30", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    if (failures == 0)
        std::printf("acceptance: all criteria pass\n");
    else
        std::printf("acceptance: %d criterion(s) failing\n", failures);
    return failures;
}
