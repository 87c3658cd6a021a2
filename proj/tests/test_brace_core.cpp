#include <doctest.h>

#include "skewbrace/brace.hpp"
#include "skewbrace/builders.hpp"
#include "skewbrace/errors.hpp"

using namespace skb;

namespace {

std::vector<int> table_of(const GroupTable& g) {
    return std::vector<int>(g.tab.begin(), g.tab.end());
}

} // namespace

TEST_CASE("validate_brace: trivial Z/3 and the brace on Z/4 with x∘y = x+y+2xy") {
    auto z3 = cyclic_group(3);
    SkewBrace t = validate_brace(table_of(z3), table_of(z3));
    CHECK(t.n() == 3);

    std::vector<int> add(16), circ(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            add[x * 4 + y] = (x + y) % 4;
            circ[x * 4 + y] = (x + y + 2 * x * y) % 4;
        }
    SkewBrace c42 = validate_brace(add, circ);
    CHECK(c42.circ.tab == make_c_nd(4, 2).circ.tab);

    // a non-associative Latin square (the smallest loop that is not a group
    // has order 5) fails as a group
    std::vector<int> z5(25), latin = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1,
                                      3, 4, 1, 2, 0, 4, 2, 0, 1, 3};
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) z5[x * 5 + y] = (x + y) % 5;
    try {
        validate_brace(z5, latin);
        FAIL("expected a validation error");
    } catch (const validation_error& e) {
        CHECK(e.kind() == "NotAGroup");
    }
}

TEST_CASE("validate_brace: brace law violations are caught with a witness") {
    // Z/6 addition paired with the canonical S3 table is not a brace
    auto z6 = cyclic_group(6);
    auto s3 = symmetric3_group();
    try {
        validate_brace(table_of(z6), table_of(s3));
        FAIL("expected a violation");
    } catch (const validation_error& e) {
        CHECK(e.kind() == "BraceLawViolation");
        CHECK(e.witness()[0] >= 0);
    }
    // Z/4 addition with the Klein table happens to be exactly C_(4,2)
    auto c = validate_brace(table_of(cyclic_group(4)), table_of(klein_group()));
    CHECK(c.circ.tab == make_c_nd(4, 2).circ.tab);
}

TEST_CASE("make_trivial / make_almost_trivial") {
    auto z2 = cyclic_group(2);
    SkewBrace t = make_trivial(z2);
    CHECK(t.add.tab == z2.tab);
    CHECK(t.circ.tab == z2.tab);

    auto s3 = symmetric3_group();
    SkewBrace at = make_almost_trivial(s3);
    CHECK(at.add.tab == s3.tab);
    CHECK(at.circ.tab == s3.opposite().tab);

    // for abelian groups the two constructions coincide
    auto z6 = cyclic_group(6);
    CHECK(make_almost_trivial(z6).circ.tab == make_trivial(z6).circ.tab);
}

TEST_CASE("make_c_nd examples") {
    SkewBrace c42 = make_c_nd(4, 2);
    CHECK(c42.circ.op(1, 1) == 0); // 1+1+2 mod 4
    SkewBrace c93 = make_c_nd(9, 3);
    CHECK(c93.circ.op(1, 1) == 5); // 1+1+3 mod 9
    SkewBrace c44 = make_c_nd(4, 4);
    CHECK(c44.circ.tab == c44.add.tab); // 4xy = 0 mod 4
    CHECK(c44.add.tab == make_trivial(cyclic_group(4)).add.tab);
    CHECK_THROWS_AS(make_c_nd(4, 1), validation_error);
    CHECK_THROWS_AS(make_c_nd(6, 2), validation_error); // 3 | 6 but 3 does not divide 2
}

TEST_CASE("make_b_p examples") {
    SkewBrace b3 = make_b_p(3);
    // (0,1)∘(0,1) = (1,2) with index a*p+b
    CHECK(b3.circ.op(1, 1) == 1 * 3 + 2);
    CHECK(b3.add.abelian());
    CHECK(abelian_structure(b3.add).group.factors == std::vector<i64>({3, 3}));
    SkewBrace b2 = make_b_p(2);
    CHECK(is_cyclic_group(b2.circ)); // multiplicative group Z/4
    CHECK(abelian_structure(b2.circ).group.factors == std::vector<i64>{4});
    CHECK_THROWS_AS(make_b_p(6), validation_error);
}

TEST_CASE("direct products") {
    auto z2 = cyclic_group(2);
    SkewBrace t2 = make_trivial(z2);
    SkewBrace p = direct_product(t2, t2);
    CHECK(p.n() == 4);
    CHECK(p.add.abelian());
    CHECK(p.circ.tab == p.add.tab);

    SkewBrace q = direct_product(make_c_nd(3, 3), make_c_nd(4, 2));
    CHECK(q.n() == 12);

    SkewBrace point = make_c_nd(1, 1);
    SkewBrace a = make_c_nd(4, 2);
    auto iso = find_isomorphism(share(direct_product(a, point)), share(a));
    CHECK(iso.has_value());
}

TEST_CASE("lambda and star") {
    SkewBrace c42 = make_c_nd(4, 2);
    // lambda_a(b) = b + dab: a=1 -> 3b mod 4
    for (int b = 0; b < 4; ++b) CHECK(c42.lambda(1, b) == (3 * b) % 4);
    CHECK(c42.star(1, 1) == 2);

    SkewBrace t = make_trivial(symmetric3_group());
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            CHECK(t.lambda(a, b) == b);
            CHECK(t.star(a, b) == 0);
        }

    SkewBrace b3 = make_b_p(3);
    int a = 0 * 3 + 1; // (0,1)
    for (int y1 = 0; y1 < 3; ++y1)
        for (int y2 = 0; y2 < 3; ++y2)
            CHECK(b3.lambda(a, y1 * 3 + y2) == ((y1 + y2) % 3) * 3 + y2);
    CHECK(b3.star(a, a) == 1 * 3 + 0);
}

TEST_CASE("lambda is a homomorphism into Aut(A,+) on a small corpus") {
    for (const char* spec : {"c:4,2", "c:9,3", "bp:3", "trivial:s3", "almosttrivial:s3",
                             "trivial:quaternion:8"}) {
        BraceRef A = share(build_brace(spec));
        int n = A->n();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                // automorphism property of lambda_a
                CHECK(A->lambda(a, A->add.op(b, b)) ==
                      A->add.op(A->lambda(a, b), A->lambda(a, b)));
                // lambda_{a∘b} = lambda_a ∘ lambda_b
                for (int x = 0; x < n; ++x)
                    CHECK(A->lambda(A->circ.op(a, b), x) == A->lambda(a, A->lambda(b, x)));
            }
    }
}

TEST_CASE("commutator ideal examples") {
    BraceRef ts3 = share(make_trivial(symmetric3_group()));
    Ideal d1 = commutator_ideal(ts3);
    CHECK(d1.members == group_commutator_subgroup(symmetric3_group()));

    BraceRef c42 = share(make_c_nd(4, 2));
    CHECK(commutator_ideal(c42).members == std::vector<int>({0, 2}));

    BraceRef b3 = share(make_b_p(3));
    CHECK(commutator_ideal(b3).members == std::vector<int>({0, 3, 6})); // {(c,0)}
}

TEST_CASE("socle and annihilator examples") {
    BraceRef c42 = share(make_c_nd(4, 2));
    CHECK(socle(c42).members == std::vector<int>({0, 2}));

    BraceRef ts3 = share(make_trivial(symmetric3_group()));
    CHECK(annihilator(ts3).members == group_center(symmetric3_group()));

    BraceRef b3 = share(make_b_p(3));
    CHECK(annihilator(b3).members == std::vector<int>({0, 3, 6}));
    CHECK(socle(share(make_c_nd(9, 3))).members == std::vector<int>({0, 3, 6}));
}

TEST_CASE("quotient braces") {
    BraceRef c93 = share(make_c_nd(9, 3));
    Ideal I = make_ideal(c93, {0, 3, 6});
    QuotientBrace q = quotient_brace(c93, I);
    CHECK(q.quotient->n() == 3);
    CHECK(find_isomorphism(q.quotient, share(make_trivial(cyclic_group(3)))).has_value());

    // A / A is the point brace, A / {0} is A
    Ideal full = make_ideal(c93, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(quotient_brace(c93, full).quotient->n() == 1);
    Ideal zero = make_ideal(c93, {0});
    auto qz = quotient_brace(c93, zero);
    CHECK(qz.quotient->add.tab == c93->add.tab);

    CHECK_THROWS_AS(make_ideal(c93, {0, 1}), validation_error);
}

TEST_CASE("abelianization examples") {
    CHECK(abelianization(share(make_trivial(symmetric3_group()))).group.factors ==
          std::vector<i64>{2});
    CHECK(abelianization(share(make_c_nd(9, 3))).group.factors == std::vector<i64>{3});
    CHECK(abelianization(share(make_b_p(3))).group.factors == std::vector<i64>{3});
}

TEST_CASE("bicyclic reports") {
    CHECK(is_bicyclic(make_c_nd(9, 3)).bicyclic);
    auto r = is_bicyclic(make_c_nd(4, 2));
    CHECK(!r.bicyclic);
    REQUIRE(r.circ_factors.has_value());
    CHECK(*r.circ_factors == std::vector<i64>({2, 2}));
    CHECK(is_bicyclic(make_c_nd(8, 4)).bicyclic);
}

TEST_CASE("find_isomorphism") {
    BraceRef a = share(make_c_nd(4, 4));
    BraceRef b = share(make_trivial(cyclic_group(4)));
    CHECK(find_isomorphism(a, b).has_value());

    BraceRef c42 = share(make_c_nd(4, 2));
    BraceRef b2 = share(make_b_p(2));
    CHECK(!find_isomorphism(c42, b2).has_value()); // circle groups [2,2] vs [4]

    auto self = find_isomorphism(b2, b2);
    REQUIRE(self.has_value());
    CHECK(self->map == std::vector<int>({0, 1, 2, 3})); // first-found is the identity
    // symmetric: an isomorphism back must exist as well
    CHECK(find_isomorphism(b2, b2).has_value());
    CHECK(find_isomorphism(share(make_b_p(3)), share(make_b_p(3))).has_value());
}

TEST_CASE("annihilator distributes over direct products on the corpus") {
    BraceRef a = share(make_c_nd(4, 2));
    BraceRef b = share(make_b_p(3));
    BraceRef p = share(direct_product(*a, *b));
    Ideal pa = annihilator(a), pb = annihilator(b), pp = annihilator(p);
    std::vector<int> expect;
    for (int x : pa.members)
        for (int y : pb.members) expect.push_back(x * b->n() + y);
    std::sort(expect.begin(), expect.end());
    CHECK(pp.members == expect);
}

TEST_CASE("builder specs") {
    CHECK(build_brace("c:9,3").n() == 9);
    CHECK(build_brace("bp:2").n() == 4);
    CHECK(build_brace("trivial:cyclic:5").n() == 5);
    CHECK(build_brace("almosttrivial:dihedral:8").n() == 8);
    CHECK(build_brace("prod:c:3,3|c:4,2").n() == 12);
    CHECK(build_brace("op:trivial:s3").n() == 6);
    CHECK_THROWS_AS(build_brace("nope:1"), parse_error);
    CHECK_THROWS_AS(build_brace("c:4"), parse_error);
    // the opposite of the almost trivial brace is the trivial brace on G^op
    SkewBrace x = build_brace("op:almosttrivial:s3");
    CHECK(x.add.tab == x.circ.tab);
}

TEST_CASE("socle and commutator distribute over direct products") {
    BraceRef a = share(make_c_nd(4, 2));
    BraceRef b = share(make_b_p(3));
    BraceRef p = share(direct_product(*a, *b));
    auto pairs = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
        std::vector<int> out;
        for (int x : xs)
            for (int y : ys) out.push_back(x * b->n() + y);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(socle(p).members == pairs(socle(a).members, socle(b).members));
    CHECK(commutator_ideal(p).members ==
          pairs(commutator_ideal(a).members, commutator_ideal(b).members));
}

TEST_CASE("find_isomorphism is symmetric") {
    BraceRef a = share(make_c_nd(4, 4));
    BraceRef b = share(make_trivial(cyclic_group(4)));
    CHECK(find_isomorphism(a, b).has_value());
    CHECK(find_isomorphism(b, a).has_value());
    BraceRef x = share(make_b_p(3));
    BraceRef y = share(make_c_nd(9, 3));
    CHECK(!find_isomorphism(x, y).has_value());
    CHECK(!find_isomorphism(y, x).has_value());
}
