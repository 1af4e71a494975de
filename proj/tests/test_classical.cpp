#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/classical.hpp"
#include "qmock/mock.hpp"

using namespace qmock;
using namespace qmock::qkit;

namespace {

Monomial m(long c, int ez, int ea, int eq) { return Monomial(Int(c), ez, ea, eq); }
const Monomial Z = m(1, 1, 0, 0);
const Monomial A = m(1, 0, 1, 0);
const Monomial Q1 = m(1, 0, 0, 1);

void check_instance(const char* name, const Params& p, int step, int acc) {
    CAPTURE(name);
    ClassicalInstance inst = classical(name, p, acc, step);
    auto rep = series_compare(inst.lhs, inst.rhs, acc);
    CHECK(rep.pass);
    if (!rep.pass && rep.first_mismatch) {
        MESSAGE(name, " mismatch at q^", rep.first_mismatch->q_exp, ": ",
                rep.first_mismatch->lhs.str(), " vs ", rep.first_mismatch->rhs.str());
    }
}

}  // namespace

TEST_CASE("classical instances at their canonical parameters, order 40") {
    // the (7a)-style binomial instance
    check_instance("q_binomial", {{"a", Z.pow(2)}, {"x", Q1}}, 2, 40);
    check_instance("heine", {{"a", -Z.inverse()}, {"b", Q1}, {"c", -Z * m(1, 0, 0, 2)}, {"x", Z * Q1}},
                   1, 40);
    check_instance("gauss_second", {{"a", Q1}, {"b", -Z.inverse() * Q1}}, 1, 40);
    check_instance("one_psi_one",
                   {{"a", -Z.inverse() * Q1}, {"b", -Z * m(1, 0, 0, 3)}, {"t", Z * Q1}}, 2, 40);
    check_instance("jackson_pfaff",
                   {{"a", m(1, 0, 0, 2)},
                    {"b", Z.pow(2) * A.inverse() * m(1, 0, 0, 2)},
                    {"c", -Z * m(1, 0, 0, 3)},
                    {"x", Z * Q1}},
                   2, 40);
    check_instance("andrews_deep", {{"a", Z}, {"b", A * Q1}, {"A", A}, {"B", Z * Q1}}, 1, 40);
    check_instance("fine_corrected", {{"b", -Z * Q1}, {"u", -Z * A.inverse() * Q1}}, 1, 40);
    check_instance("rogers_fine_first", {{"a", m(1, 0, 0, -1)}, {"x", -Z * Q1}}, 2, 40);
    check_instance("rogers_fine_second", {{"a", m(1, 0, 0, -1)}, {"x", -Z * Q1}}, 2, 40);
    check_instance("eq41", {{"x", Z * Q1}}, 1, 40);
    check_instance("andrews_ex6", {{"x", A.pow(2) * Z.inverse() * Q1}, {"y", -(A.pow(2)) * Z.inverse() * Q1}},
                   2, 40);
    check_instance("lost_p24", {{"a", m(1, 0, 0, -2)}, {"b", Z.pow(2) * m(1, 0, 0, -2)}}, 4, 40);
    check_instance("lost_p25", {{"a", Z}}, 1, 40);
    check_instance("ramanujan_reciprocity", {{"a", Z}, {"b", A}}, 1, 40);
    check_instance("kang_reciprocity",
                   {{"a", Z * Q1}, {"b", -Z * A.inverse() * Q1}, {"c", Z.pow(2) * A.inverse() * m(1, 0, 0, 2)}},
                   2, 40);
    check_instance("jacobi_triple_product", {{"x", Z}}, 1, 40);
}

TEST_CASE("errors: unknown names and bad params") {
    CHECK_THROWS_AS(classical("warnaar_master", {}, 10), UnknownName);
    CHECK_THROWS_AS(classical("q_binomial", {{"a", Z}}, 10), BadParams);
    CHECK_THROWS_AS(classical("q_binomial", {{"a", Z}, {"x", Q1}, {"zz", Z}}, 10), BadParams);
    // x with q-valuation 0 violates the divergence side condition
    CHECK_THROWS_AS(classical("q_binomial", {{"a", Z}, {"x", A}}, 10), BadParams);
    // rho3-style b must be a unit
    CHECK_THROWS_AS(classical("kang_reciprocity", {{"a", Z * Q1}, {"b", m(2, 0, 0, 1)}, {"c", Z}}, 10),
                    BadParams);
}

TEST_CASE("catalog lists every identity with parameter schemas") {
    auto cat = classical_catalog();
    CHECK(cat.size() >= 16);
    for (const auto& info : cat) {
        CHECK(!info.name.empty());
        CHECK(!info.note.empty());
    }
}

TEST_CASE("one_psi_one instance reproduces the two-variable lemma shape") {
    // with a=-q/z, b=-zq^3, t=zq the two unilateral halves coincide, so the
    // bilateral sum is twice the single sum and the product side is twice
    // (1+zq)(z^2q^4;q^4)(q^2;q^2)(-q^2;q^2)^2/(z^2q^2;q^4)
    ClassicalInstance inst = classical(
        "one_psi_one", {{"a", -Z.inverse() * Q1}, {"b", -Z * m(1, 0, 0, 3)}, {"t", Z * Q1}}, 24, 2);
    QSeries lemma_rhs = (QSeries::one(24) + QSeries::from_monomial(Z * Q1, 24)) *
                        poch_inf(Z.pow(2) * m(1, 0, 0, 4), QStep(4), 24) *
                        poch_inf(m(1, 0, 0, 2), QStep(2), 24) *
                        poch_inf(m(-1, 0, 0, 2), QStep(2), 24) * poch_inf(m(-1, 0, 0, 2), QStep(2), 24) *
                        poch_inf(Z.pow(2) * m(1, 0, 0, 2), QStep(4), 24).inverse();
    QSeries doubled = lemma_rhs + lemma_rhs;
    CHECK(series_compare(inst.rhs, doubled.truncated(24), 24).pass);
    // and the first half alone is the lemma's left-hand side
    QSeries twice_lhs = inst.lhs;
    CHECK(series_compare(twice_lhs, doubled.truncated(24), 24).pass);
}

TEST_CASE("classical rho3 helper matches the mock family") {
    QSeries a = classical_detail::rho3(Z * Q1, -Z * A.inverse() * Q1,
                                       Z.pow(2) * A.inverse() * m(1, 0, 0, 2), 2, 20);
    QSeries b = mock::build(mock::Family::rho3,
                            {Z * Q1, -Z * A.inverse() * Q1, Z.pow(2) * A.inverse() * m(1, 0, 0, 2)},
                            +1, 20, QStep(2));
    CHECK(series_compare(a, b, 20).pass);
}
