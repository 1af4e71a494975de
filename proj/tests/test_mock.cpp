#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qmock/mock.hpp"

using namespace qmock;
using namespace qmock::mock;
using qkit::QStep;

namespace {

Monomial m(long c, int ez, int ea, int eq) { return Monomial(Int(c), ez, ea, eq); }
const Monomial Z = m(1, 1, 0, 0);
const Monomial A = m(1, 0, 1, 0);
const Monomial ONE = m(1, 0, 0, 0);

std::mt19937 rng(777);

long long coeffn(const QSeries& s, int k) {
    LaurentPoly p = s.coeff(k);
    if (p.is_zero()) return 0;
    REQUIRE(p.size() == 1);
    REQUIRE(p.terms()[0].e == VarExp{0, 0});
    return p.terms()[0].c.get_si();
}

bool same(const QSeries& a, const QSeries& b, int through) {
    return series_compare(a, b, through).pass;
}

}  // namespace

TEST_CASE("base mock theta functions against dense oracles") {
    QSeries om = build(Family::omega, {}, +1, 20);
    auto dom = oracle::omega(20);
    for (int k = 0; k <= 20; ++k) CHECK(coeffn(om, k) == dom[k]);
    // frozen prefix 1, 2, 3, 4, 6, 8, 10
    long long om_expect[7] = {1, 2, 3, 4, 6, 8, 10};
    for (int k = 0; k <= 6; ++k) CHECK(coeffn(om, k) == om_expect[k]);

    QSeries nu = build(Family::nu, {}, +1, 20);
    auto dnu = oracle::nu(20);
    for (int k = 0; k <= 20; ++k) CHECK(coeffn(nu, k) == dnu[k]);

    QSeries ph = build(Family::phi, {}, +1, 20);
    auto dph = oracle::phi(20);
    for (int k = 0; k <= 20; ++k) CHECK(coeffn(ph, k) == dph[k]);
    long long ph_expect[5] = {1, 1, 0, -1, 1};
    for (int k = 0; k <= 4; ++k) CHECK(coeffn(ph, k) == ph_expect[k]);

    // specializations at z = 1 recover the single-variable functions
    CHECK(same(build(Family::omega_bi, {ONE}, +1, 16), om, 16));
    CHECK(same(build(Family::nu_bi, {ONE}, +1, 16), nu, 16));
    CHECK(same(build(Family::nu1, {ONE}, +1, 16), nu, 16));
}

TEST_CASE("omega at q^2 via q_power equals the directly-substituted series") {
    // q -> q^2 on omega(q) against sum q^{4n^2+4n} / (q^2;q^4)_{n+1}^2
    QSeries via_power = build(Family::omega, {}, +1, 15).q_power(2);
    qkit::SumSpec direct;
    direct.lead = [](long n) { return m(1, 0, 0, static_cast<int>(4 * n * n + 4 * n)); };
    direct.atoms = {
        qkit::fin_atom(m(1, 0, 0, 2), 4, [](long) { return 0; }, [](long n) { return n + 1; },
                       true),
        qkit::fin_atom(m(1, 0, 0, 2), 4, [](long) { return 0; }, [](long n) { return n + 1; },
                       true),
    };
    QSeries expanded = qkit::telescoped_sum(direct, 30);
    CHECK(same(via_power, expanded.truncated(via_power.acc()), std::min(30, via_power.acc())));
}

TEST_CASE("trivariate specialization identities") {
    // omega1(1, z; q) = omega(z^2; q^2)
    QSeries lhs = build(Family::omega1, {ONE, Z}, +1, 24);
    QSeries rhs = build(Family::omega_bi, {Z.pow(2)}, +1, 12).q_power(2);
    CHECK(same(lhs, rhs, std::min(lhs.acc(), rhs.acc())));

    // nu(z, 1; q) = nu1(z; q) and nu(1, z; q) = nu(z; q)
    CHECK(same(build(Family::nu_tri, {Z, ONE}, +1, 20), build(Family::nu1, {Z}, +1, 20), 20));
    CHECK(same(build(Family::nu_tri, {ONE, Z}, +1, 20), build(Family::nu_bi, {Z}, +1, 20), 20));

    // nu(a^2/z, -a^2/z; -q) is a legal build
    Monomial aa = A.pow(2) * Z.inverse();
    QSeries tri = build(Family::nu_tri, {aa, -aa}, -1, 14);
    CHECK(tri.acc() >= 14);
}

TEST_CASE("omega0 is symmetric in its two arguments") {
    std::uniform_int_distribution<int> sgn(0, 1), ex(-1, 1), eq(0, 2);
    for (int rep = 0; rep < 8; ++rep) {
        Monomial m1 = m(sgn(rng) ? 1 : -1, ex(rng), ex(rng), eq(rng));
        Monomial m2 = m(sgn(rng) ? 1 : -1, ex(rng), ex(rng), eq(rng));
        QSeries a = build(Family::omega0, {m1, m2}, +1, 14);
        QSeries b = build(Family::omega0, {m2, m1}, +1, 14);
        CHECK(same(a, b, 14));
    }
}

TEST_CASE("G function bridges") {
    // omega0(y, z; q) = G(yq, zq; q^2) / ((1-yq)(1-zq)) with y -> a symbolic
    QSeries lhs = build(Family::omega0, {A, Z}, +1, 40);
    QSeries G = build(Family::bigG, {A * m(1, 0, 0, 1), Z * m(1, 0, 0, 1)}, +1, 40, QStep(2));
    QSeries rhs = G * qkit::geo_inverse(A * m(1, 0, 0, 1), 40) *
                  qkit::geo_inverse(Z * m(1, 0, 0, 1), 40);
    CHECK(same(lhs, rhs, 40));

    // G(z, z^-1 q; q) = (1-z)(1-q/z) g3(z, q)
    QSeries gl = build(Family::bigG, {Z, Z.inverse() * m(1, 0, 0, 1)}, +1, 40, QStep(1));
    QSeries gr = build(Family::g3, {Z}, +1, 40);
    CHECK(same(gl, gr, 40));
}

TEST_CASE("alternative single-sum forms") {
    auto om = andrews_alt_forms(Family::omega_bi, Z, 40);
    CHECK(same(om.lhs, om.rhs, 40));
    auto nu = andrews_alt_forms(Family::nu_bi, Z, 40);
    CHECK(same(nu.lhs, nu.rhs, 40));

    // at z=1 the alternative forms match omega(q) and nu(q)
    auto om1 = andrews_alt_forms(Family::omega_bi, ONE, 16);
    CHECK(same(om1.rhs, build(Family::omega, {}, +1, 16), 16));
    auto nu1a = andrews_alt_forms(Family::nu_bi, ONE, 16);
    CHECK(same(nu1a.rhs, build(Family::nu, {}, +1, 16), 16));
}

TEST_CASE("choi equivalence") {
    auto pairs = equivalence_choi(30);
    REQUIRE(pairs.size() == 2);
    for (const auto& pr : pairs) {
        CHECK(pr.lhs.acc() >= 30);
        CHECK(pr.rhs.acc() >= 30);
        CHECK(same(pr.lhs, pr.rhs, 30));
    }
    // finite valuations despite q^-4 arguments
    QSeries l0 = pairs[0].lhs;
    l0.tighten();
    CHECK(l0.val() >= 0);
}

TEST_CASE("qsign folding agrees with post-hoc q-negation") {
    QSeries nu_neg = build(Family::nu, {}, -1, 20);
    QSeries nu_post = build(Family::nu, {}, +1, 20).q_negated();
    CHECK(same(nu_neg, nu_post, 20));
    // and the folded nu(-q) has the nonnegative coefficients of the
    // partition-count expansion
    for (int k = 0; k <= 20; ++k) CHECK(coeffn(nu_neg, k) >= 0);

    QSeries f_neg = build(Family::F_func, {A, Z}, -1, 12);
    QSeries f_post = build(Family::F_func, {A, Z}, +1, 12).q_negated();
    CHECK(same(f_neg, f_post, 12));

    QSeries t_neg = build(Family::nu_tri, {A, Z}, -1, 16);
    QSeries t_post = build(Family::nu_tri, {A, Z}, +1, 16).q_negated();
    CHECK(same(t_neg, t_post, 16));
}

TEST_CASE("builders are deterministic and extension-stable") {
    QSeries a = build(Family::omega1, {A, Z}, +1, 12);
    QSeries b = build(Family::omega1, {A, Z}, +1, 12);
    CHECK(a == b);
    QSeries hi = build(Family::omega1, {A, Z}, +1, 22);
    CHECK(same(a, hi.truncated(12), 12));

    QSeries f_lo = build(Family::F_func, {A, Z}, +1, 10);
    QSeries f_hi = build(Family::F_func, {A, Z}, +1, 18);
    CHECK(same(f_lo, f_hi.truncated(10), 10));
}

TEST_CASE("illegal specs are rejected") {
    CHECK_THROWS_AS(build(Family::omega1, {A}, +1, 10), IllegalSpec);
    CHECK_THROWS_AS(build(Family::nu, {Z}, +1, 10), IllegalSpec);
    CHECK_THROWS_AS(build(Family::omega1, {m(2, 0, 1, 0), Z}, +1, 10), IllegalSpec);
    CHECK_THROWS_AS(family_from_name("omega_fourth"), UnknownName);
}

TEST_CASE("name table round trip") {
    for (const auto& fi : families()) {
        CHECK(family_from_name(fi.name) == fi.family);
        CHECK(info(fi.family).arity == fi.arity);
    }
}
