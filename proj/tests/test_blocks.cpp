#include "doctest.h"
#include "joininv/blocks.hpp"

using namespace joininv;

namespace {

IntMatrix m22(long a, long b, long c, long d) {
    return IntMatrix::from_rows({{Int(a), Int(b)}, {Int(c), Int(d)}});
}

} // namespace

TEST_CASE("validate: canonical auxiliaries") {
    JoinParams p = JoinParams::validate(1, 2, 1, 2, 3);
    CHECK(p.r == 1);
    CHECK(p.s == 1);
    CHECK(p.d == 1);

    p = JoinParams::validate(1, 6, 1, 3, 4);
    CHECK(p.r == 1);
    CHECK(p.s == 1);
    CHECK(p.d == 2);

    p = JoinParams::validate(1, 1, 1, 1, 1);
    CHECK(p.r == 1);
    CHECK(p.s == 0);
    CHECK(p.d == 1);
    CHECK(p.l1 == 1);

    // Bezout and range invariants always established.
    for (long l2 : {1, 3, 7, 9}) {
        JoinParams q = JoinParams::validate(2, 4, 2, 5, l2);
        CHECK(q.r * q.l2 - q.s * q.w1 * q.w2 == 1);
        CHECK(q.u1 * q.w1 + q.u2 * q.r * q.w2 == 1);
        CHECK(q.s >= 0);
        CHECK(q.s < std::max<Int>(q.l2, 1));
    }
}

TEST_CASE("validate: rejections") {
    CHECK_THROWS_AS(JoinParams::validate(1, 2, 2, 4, 3), GcdViolation);
    CHECK_THROWS_AS(JoinParams::validate(1, 1, 2, 3, 6), GcdViolation);
    CHECK_THROWS_AS(JoinParams::validate(0, 1, 1, 1, 1), RangeViolation);
    CHECK_THROWS_AS(JoinParams::validate(1, 0, 1, 1, 1), RangeViolation);
    CHECK_THROWS_AS(JoinParams::validate(1, 1, 0, 1, 1), RangeViolation);
    CHECK_THROWS_AS(JoinParams::validate(1, 1, 1, 1, 0), RangeViolation);
}

TEST_CASE("validate_with_rs accepts Bezout pairs and rejects others") {
    JoinParams base = JoinParams::validate(1, 2, 1, 2, 3);
    JoinParams alt = JoinParams::validate_with_rs(1, 2, 1, 2, 3, base.r + 2, base.s + 3);
    CHECK(alt.r * alt.l2 - alt.s * alt.w1 * alt.w2 == 1);
    CHECK(alt.s == base.s + 3);
    CHECK_THROWS_AS(JoinParams::validate_with_rs(1, 2, 1, 2, 3, base.r, base.s + 1),
                    RangeViolation);
}

TEST_CASE("heegard exponent matrices") {
    JoinParams p = JoinParams::validate(1, 2, 1, 2, 3);  // r=1, s=1
    HeegardMatrices h = heegard_exponent_matrices(p);
    CHECK(h.e_g == m22(-1, 1, -4, 3));
    CHECK(det(h.e_g) == 1);
    CHECK(h.e_g * h.e_g_inv == IntMatrix::identity(2));
    CHECK(h.e_f1 == h.e_f12);
    CHECK(h.e_g * h.e_f12 == h.e_f2);
    CHECK(det(h.e_f12) == 3);
    CHECK(det(h.e_f2) == 3);

    JoinParams triv = JoinParams::validate(1, 1, 2, 3, 1);  // l2=1 -> s=0
    HeegardMatrices ht = heegard_exponent_matrices(triv);
    CHECK(ht.e_g == IntMatrix::identity(2));
    CHECK(det(ht.e_f12) == 1);

    CheckReport report = verify_heegard_identities(p);
    CHECK(report.ok);
    CHECK(report.failures.empty());
}

TEST_CASE("clutching exponents") {
    JoinParams p = JoinParams::validate(1, 2, 1, 2, 3);  // r=1
    CHECK(clutching_exponents(p, Block::B1) == std::pair<Int, Int>{-2, -4});
    CHECK(clutching_exponents(p, Block::B2) == std::pair<Int, Int>{-2, -4});
    CHECK(clutching_exponents(p, Block::B12) == clutching_exponents(p, Block::B1));

    JoinParams q = JoinParams::validate(1, 1, 1, 1, 1);
    CHECK(clutching_exponents(q, Block::B1).first == -1);
}

TEST_CASE("gluing action on degree-one classes") {
    JoinParams p = JoinParams::validate(1, 2, 1, 2, 3);  // s=1, w2=2, l2=3
    CHECK(g_on_h1(p) == std::pair<Int, Int>{-4, 3});
    CHECK(g_on_h1_cohomology(p) == std::pair<Int, Int>{-4, 3});

    JoinParams triv = JoinParams::validate(1, 1, 1, 1, 1);
    CHECK(g_on_h1(triv) == std::pair<Int, Int>{0, 1});
}

TEST_CASE("circle bundle cohomology") {
    CohomologyProfile c = circle_bundle_cohomology(6, 1);
    CHECK(c[0] == FgAbGroup::free(1));
    CHECK(c[1] == FgAbGroup::free(2));
    CHECK(c[2] == FgAbGroup::from_factors(2, {6}));
    CHECK(c[3] == FgAbGroup::free(1));
    CHECK(c.top_degree() == 3);

    CHECK(circle_bundle_cohomology(1, 3)[2] == FgAbGroup::free(6));

    // chi = 0 and duality in rank.
    for (long e : {1, 2, 5}) {
        for (long g : {1, 2}) {
            CohomologyProfile prof = circle_bundle_cohomology(e, g);
            long chi = prof[0].rank() - prof[1].rank() + prof[2].rank() - prof[3].rank();
            CHECK(chi == 0);
            CHECK(prof[3] == FgAbGroup::free(1));
            CHECK(prof[1].rank() == prof[2].rank());
        }
    }
}

TEST_CASE("boundary cohomology") {
    JoinParams p = JoinParams::validate(1, 2, 1, 2, 3);
    CohomologyProfile b = boundary_cohomology(p);
    CHECK(b[0] == FgAbGroup::free(1));
    CHECK(b[1] == FgAbGroup::free(3));
    CHECK(b[2] == FgAbGroup::from_factors(4, {2}));
    CHECK(b[3] == FgAbGroup::from_factors(3, {2}));
    CHECK(b[4] == FgAbGroup::free(1));

    JoinParams n1 = JoinParams::validate(2, 1, 1, 1, 1);
    CohomologyProfile t = boundary_cohomology(n1);
    for (std::size_t q = 0; q <= 4; ++q) CHECK(t[q].invariant_factors().empty());
    CHECK(t[1].rank() == t[3].rank());
}

TEST_CASE("h1 of the intersection region") {
    JoinParams p = JoinParams::validate(2, 6, 1, 3, 4);
    CHECK(h1_intersection(p) == FgAbGroup::from_factors(5, {6}));
}

TEST_CASE("torsion comparison maps Z/n -> Z/nw") {
    JoinParams p = JoinParams::validate(1, 2, 3, 5, 7);
    TorsionComparison cmp = h1_torsion_comparison(p);
    CHECK(cmp.h1_boundary == FgAbGroup::from_factors(3, {2}));

    // 1 -> w_i, injective with cokernel Z/w_i.
    CHECK(cmp.into_block1.map.at(0, 0) == 3);
    CHECK(cmp.into_block1.kernel.is_trivial());
    CHECK(cmp.into_block1.cokernel == FgAbGroup::cyclic(3));
    CHECK(cmp.into_block2.map.at(0, 0) == 5);
    CHECK(cmp.into_block2.kernel.is_trivial());
    CHECK(cmp.into_block2.cokernel == FgAbGroup::cyclic(5));

    // rho data satisfies u1 w1 + u2 r w2 = 1.
    CHECK((cmp.rho_m1 * p.w1 + cmp.rho_m2 * p.r * p.w2 - 1) % p.n == 0);

    JoinParams unit = JoinParams::validate(1, 2, 1, 3, 5);
    CHECK(h1_torsion_comparison(unit).into_block1.cokernel.is_trivial());
}

TEST_CASE("restriction of H^2 from block to boundary") {
    JoinParams p = JoinParams::validate(1, 2, 1, 2, 3);  // s=1, w2=2, l2=3
    H2Restriction r2 = restriction_h2_block_to_boundary(p, 2);
    REQUIRE(r2.free_block.rows() == 4);
    REQUIRE(r2.free_block.cols() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(r2.free_block.at(j, j) == -4);
        CHECK(r2.free_block.at(2 + j, j) == 3);
    }
    // Torsion part: reduction Z/nw2 -> Z/n, surjective with kernel Z/w2.
    CHECK(r2.torsion_kernel == FgAbGroup::cyclic(2));
    CHECK(r2.torsion_cokernel.is_trivial());

    H2Restriction r1 = restriction_h2_block_to_boundary(p, 1);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(r1.free_block.at(j, j) == 1);
        CHECK(r1.free_block.at(2 + j, j) == 0);
    }
    CHECK(r1.torsion_kernel.is_trivial());  // w1 = 1
}

TEST_CASE("disc bundle Euler elements") {
    JoinParams p = JoinParams::validate(1, 2, 3, 5, 7);
    DiscBundleEuler e1 = disc_bundle_euler(p, 1);
    CHECK(e1.torsion_component == 2);
    CHECK(e1.ambient_torsion == FgAbGroup::cyclic(6));
    CHECK(e1.order == 3);

    JoinParams q = JoinParams::validate(1, 3, 1, 2, 5);
    DiscBundleEuler e2 = disc_bundle_euler(q, 2);
    CHECK(e2.torsion_component == 3);
    CHECK(e2.ambient_torsion == FgAbGroup::cyclic(6));
    CHECK(e2.order == 2);
    CHECK(disc_bundle_euler(q, 1).order == 1);
}

TEST_CASE("congruence report") {
    for (auto [g, n, w1, w2, l2] :
         {std::tuple<long, long, long, long, long>{1, 2, 1, 2, 3},
          {1, 6, 1, 3, 4}, {3, 5, 2, 3, 7}, {1, 1, 1, 1, 1}}) {
        JoinParams p = JoinParams::validate(g, n, w1, w2, l2);
        CheckReport rep = verify_congruences(p);
        CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures.front()));
        Int sq = p.s * p.s * p.w1 * p.w1 * p.w2 * p.w2;
        CHECK((sq - 1) % p.l2 == 0);
        if (p.d > 1) CHECK((sq - 1) % p.d == 0);
    }
}
