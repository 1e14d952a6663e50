#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icayley/analysis.hpp"
#include "icayley/constructors.hpp"
#include "icayley/group.hpp"
#include "icayley/morphisms.hpp"
#include "oracles.hpp"

using namespace icayley;

TEST_CASE("two-generator condition holds where it should") {
    CHECK(has_property_p(cyclic(1)).holds);
    CHECK(has_property_p(cyclic(2)).holds);
    CHECK(has_property_p(cyclic(4)).holds);
    CHECK(has_property_p(cyclic(6)).holds);
    CHECK(has_property_p(elem_abelian(2, 3)).holds);
    CHECK(has_property_p(builtin_group("Q8")).holds);
    CHECK(has_property_p(builtin_group("A4")).holds);
    CHECK(has_property_p(direct_product(cyclic(2), cyclic(6))).holds);
    CHECK(has_property_p(cyclic(3)).holds);  // vacuous: no involutions
    CHECK(!has_property_p(cyclic(3)).even_order);
    CHECK(has_property_p(family_a(1, 1)).holds);
    auto r = has_property_p(builtin_group("A4"));
    CHECK(r.pairs_checked > 0);
    CHECK(r.distinct_subgroups > 0);
    CHECK(r.distinct_subgroups <= r.pairs_checked);
    CHECK(r.even_order);
    CHECK(!r.offender.has_value());
}

TEST_CASE("two-generator condition fails with a witness") {
    auto d8 = dihedral(4);
    auto r = has_property_p(d8);
    CHECK(!r.holds);
    REQUIRE(r.offender.has_value());
    CHECK(d8.order(r.offender->x) == 2);
    CHECK(!tag_allowed_pair(r.offender->tag));
    // the witness pair really generates something off the list
    auto sub = closure_nocap(d8, {r.offender->x, r.offender->y});
    CHECK(!tag_allowed_pair(identify_allowed(sub)));
    CHECK(r.offender->fp == fingerprint(sub));

    CHECK(!has_property_p(builtin_group("S4")).holds);
    CHECK(!has_property_p(cyclic(8)).holds);    // <4, 1> = Z8
    CHECK(!has_property_p(dihedral(6)).holds);  // dihedral of order 12

    // the exceptional classification member fails the pair condition too:
    // two reflections generate the whole order-6 dihedral group
    auto d6 = dihedral(3);
    auto rd6 = has_property_p(d6);
    CHECK(!rd6.holds);
    REQUIRE(rd6.offender.has_value());
    CHECK(rd6.offender->tag == AllowedTag::D6);

    // closure cap: a pair spanning a huge dihedral group is cut off early
    auto d32 = dihedral(16);
    auto big = has_property_p(d32);
    CHECK(!big.holds);
    REQUIRE(big.offender.has_value());
}

TEST_CASE("classification membership") {
    // the exceptional member: dihedral of order 6, in despite failing (P)
    auto d6 = in_a3_theorem(dihedral(3));
    CHECK(d6.is_d6);
    CHECK(d6.in_class);
    CHECK(!d6.pairs.holds);
    auto s3 = in_a3_theorem(perm_group({{1, 0, 2}, {1, 2, 0}}));
    CHECK(s3.is_d6);
    CHECK(s3.in_class);

    CHECK(in_a3_theorem(elem_abelian(2, 2)).in_class);
    CHECK(in_a3_theorem(cyclic(4)).in_class);
    CHECK(in_a3_theorem(cyclic(6)).in_class);
    CHECK(in_a3_theorem(builtin_group("Q8")).in_class);
    CHECK(in_a3_theorem(builtin_group("A4")).in_class);
    CHECK(in_a3_theorem(family_d("U(1)", 0)).in_class);
    CHECK(in_a3_theorem(family_a(1, 0)).in_class);
    CHECK(in_a3_theorem(family_c("H64")).in_class);

    // too small to carry a cubic connection set
    auto z2 = in_a3_theorem(cyclic(2));
    CHECK(!z2.in_class);
    CHECK(!z2.admits_cubic_set);
    CHECK(z2.pairs.holds);
    CHECK(!z2.reason.empty());

    // odd order
    CHECK(!in_a3_theorem(cyclic(3)).in_class);
    CHECK(!in_a3_theorem(builtin_group("Heis27")).in_class);

    // fails the two-generator condition
    CHECK(!in_a3_theorem(cyclic(8)).in_class);
    CHECK(!in_a3_theorem(builtin_group("S4")).in_class);
    CHECK(!in_a3_theorem(dihedral(4)).in_class);
    // a central involution joins a rotation into a too-large pair subgroup
    CHECK(!in_a3_theorem(direct_product(builtin_group("A4"), cyclic(2))).in_class);
    // the dihedral group of order 12 is not the exceptional one
    CHECK(!in_a3_theorem(dihedral(6)).in_class);
    CHECK(!in_a3_theorem(dihedral(6)).is_d6);
}

TEST_CASE("minimal nonabelian subgroups") {
    auto none = minimal_nonabelian_subgroups(elem_abelian(2, 3));
    CHECK(none.empty());

    auto q8 = minimal_nonabelian_subgroups(builtin_group("Q8"));
    REQUIRE(q8.size() == 1);
    CHECK(q8[0].tag == MinNonabTag::Q8);
    CHECK(q8[0].members.size() == 8);

    auto d8 = minimal_nonabelian_subgroups(dihedral(4));
    REQUIRE(d8.size() == 1);
    CHECK(d8[0].tag == MinNonabTag::Other);

    auto h16 = minimal_nonabelian_subgroups(builtin_group("H16"));
    REQUIRE(h16.size() == 1);
    CHECK(h16[0].tag == MinNonabTag::H16);

    // S4 has minimal nonabelian subgroups S3, D8 and A4, all tagged Other
    auto s4 = minimal_nonabelian_subgroups(builtin_group("S4"));
    CHECK(s4.size() == 8);  // 4 x S3, 3 x D8, 1 x A4
    for (const auto& e : s4) CHECK(e.tag == MinNonabTag::Other);

    // inside the order-64 kernel everything minimal is H16
    auto h64 = minimal_nonabelian_subgroups(builtin_group("H64"));
    CHECK(!h64.empty());
    for (const auto& e : h64) CHECK(e.tag == MinNonabTag::H16);

    CHECK(std::string(min_nonab_tag_name(MinNonabTag::H32)) == "H32");
}

TEST_CASE("quaternion subgroup exclusion") {
    auto bad = no_q8_check(builtin_group("Q8"));
    CHECK(!bad.ok);
    REQUIRE(bad.witness.has_value());
    auto [x, y] = *bad.witness;
    auto sub = closure_nocap(builtin_group("Q8"), {x, y});
    CHECK(sub.size() == 8);

    CHECK(!no_q8_check(direct_product(builtin_group("Q8"), cyclic(2))).ok);
    CHECK(!no_q8_check(u_group(2)).ok);  // quaternion blocks
    CHECK(no_q8_check(builtin_group("H64")).ok);
    CHECK(no_q8_check(builtin_group("H16")).ok);
    CHECK(no_q8_check(dihedral(4)).ok);
    CHECK(no_q8_check(elem_abelian(2, 4)).ok);
}

TEST_CASE("family a certificate") {
    CHECK(verify_family(family_a(1, 0), 'a').ok);
    CHECK(verify_family(family_a(1, 1), 'a').ok);
    CHECK(verify_family(family_a(2, 0), 'a').ok);
    CHECK(!verify_family(dihedral(4), 'a').ok);
    CHECK(!verify_family(builtin_group("A4"), 'a').ok);
    // every clause is named and reported
    auto cert = verify_family(family_a(1, 0), 'a');
    CHECK(cert.family == 'a');
    CHECK(!cert.clauses.empty());
    for (const auto& c : cert.clauses) CHECK(c.pass);
}

TEST_CASE("family b certificate") {
    CHECK(verify_family(builtin_group("A4"), 'b').ok);
    CHECK(verify_family(family_b(cyclic(3), std::nullopt, 1), 'b').ok);
    CHECK(verify_family(family_b(cyclic(1), std::nullopt, 2), 'b').ok);
    CHECK(verify_family(family_b(builtin_group("Heis27"), std::nullopt, 1), 'b').ok);
    CHECK(!verify_family(builtin_group("Q8"), 'b').ok);
    CHECK(!verify_family(family_a(1, 0), 'b').ok);
    CHECK(!verify_family(builtin_group("S4"), 'b').ok);
}

TEST_CASE("family c certificate") {
    CHECK(verify_family(family_c("H64"), 'c').ok);
    CHECK(verify_family(family_c("K256"), 'c').ok);
    CHECK(!verify_family(builtin_group("A4"), 'c').ok);       // kernel exponent 2
    CHECK(!verify_family(family_d("U(1)", 0), 'c').ok);       // not Frobenius
    CHECK(!verify_family(builtin_group("S4"), 'c').ok);
}

TEST_CASE("family d certificate") {
    CHECK(verify_family(family_d("U(1)", 0), 'd').ok);
    CHECK(verify_family(family_d("U(1)", 1), 'd').ok);
    CHECK(verify_family(family_d("U(2)", 0), 'd').ok);
    CHECK(!verify_family(direct_product(builtin_group("Q8"), cyclic(3)), 'd').ok);
    CHECK(!verify_family(family_c("H64"), 'd').ok);  // Frobenius core: C_U(z) = 1
    CHECK(!verify_family(builtin_group("A4"), 'd').ok);
}

TEST_CASE("family certificates reject unknown tags") {
    CHECK_THROWS_AS(verify_family(builtin_group("A4"), 'x'), UnknownTag);
}

TEST_CASE("structural lemma suite") {
    auto good = lemma_suite(family_c("H64"));
    CHECK(good.all);
    CHECK(good.checks.size() == 7);
    for (const auto& c : good.checks) CHECK(c.pass);

    CHECK(lemma_suite(family_a(1, 1)).all);
    CHECK(lemma_suite(family_d("U(1)", 0)).all);
    CHECK(lemma_suite(builtin_group("A4")).all);
    CHECK(lemma_suite(elem_abelian(2, 3)).all);
    CHECK(lemma_suite(family_b(cyclic(3), std::nullopt, 1)).all);
    CHECK(lemma_suite(family_c("K256")).all);

    // the suite is only claimed for groups passing the pair condition
    CHECK_THROWS_AS(lemma_suite(builtin_group("S4")), PreconditionViolated);
    CHECK_THROWS_AS(lemma_suite(dihedral(6)), PreconditionViolated);
    CHECK_THROWS_AS(lemma_suite(cyclic(8)), PreconditionViolated);
}
