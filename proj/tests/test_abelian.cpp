#include <doctest.h>

#include "skewbrace/abelian.hpp"
#include "skewbrace/errors.hpp"

#include <random>
#include <set>

using namespace skb;

namespace {

std::set<ivec> span_members(const std::vector<ivec>& gens, int N, i64 m) {
    std::set<ivec> seen;
    seen.insert(ivec(N, 0));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ivec> cur(seen.begin(), seen.end());
        for (const auto& v : cur)
            for (const auto& g : gens) {
                ivec w(N);
                for (int i = 0; i < N; ++i) w[i] = (v[i] + g[i]) % m;
                if (seen.insert(w).second) grew = true;
            }
    }
    return seen;
}

} // namespace

TEST_CASE("quotient structure: hand examples") {
    // <1> / <0> in Z/4
    auto q1 = quotient_structure(4, {{1}}, {}, 1);
    CHECK(q1.factors == std::vector<i64>{4});
    // <1> / <2> in Z/4
    auto q2 = quotient_structure(4, {{1}}, {{2}}, 1);
    CHECK(q2.factors == std::vector<i64>{2});
    // G = H: trivial quotient
    auto q3 = quotient_structure(4, {{1}}, {{1}}, 1);
    CHECK(q3.factors.empty());
}

TEST_CASE("quotient structure rejects H outside span(G)") {
    CHECK_THROWS_AS(quotient_structure(4, {{2, 0}}, {{1, 0}}, 2), validation_error);
}

TEST_CASE("quotient structure order matches exhaustive enumeration") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 100; ++iter) {
        std::uniform_int_distribution<i64> mdist(2, 9);
        std::uniform_int_distribution<int> ndist(1, 3), gdist(0, 3), hdist(0, 2);
        i64 m = mdist(rng);
        int N = ndist(rng);
        std::uniform_int_distribution<i64> val(0, m - 1);
        std::vector<ivec> G(gdist(rng), ivec(N)), Hsub;
        for (auto& g : G)
            for (auto& x : g) x = val(rng);
        auto gm = span_members(G, N, m);
        // choose H inside span(G)
        int hn = hdist(rng);
        std::vector<ivec> pool(gm.begin(), gm.end());
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < hn; ++i) Hsub.push_back(pool[pick(rng)]);
        auto hm = span_members(Hsub, N, m);
        FinAbGroup q = quotient_structure(m, G, Hsub, N);
        CHECK(q.order() == bigint(gm.size() / hm.size()));
        // generator witnesses have the right quotient coordinates
        for (int i = 0; i < q.rank(); ++i) {
            auto c = q.solver->coords(q.gens[i]);
            REQUIRE(c.has_value());
            for (int j = 0; j < q.rank(); ++j) CHECK((*c)[j] == (i == j ? 1 : 0));
        }
        // quotient coordinates are additive on random span elements
        if (!pool.empty() && q.rank() > 0) {
            ivec a = pool[pick(rng)], b = pool[pick(rng)], ab(N);
            for (int i = 0; i < N; ++i) ab[i] = (a[i] + b[i]) % m;
            auto ca = q.solver->coords(a), cb = q.solver->coords(b), cab = q.solver->coords(ab);
            REQUIRE(ca);
            REQUIRE(cb);
            REQUIRE(cab);
            for (int j = 0; j < q.rank(); ++j)
                CHECK((*cab)[j] == ((*ca)[j] + (*cb)[j]) % q.factors[j]);
        }
    }
}

TEST_CASE("subgroup span examples") {
    CHECK(subgroup_span(4, {{2}}, 1).factors == std::vector<i64>{2});
    CHECK(subgroup_span(4, {}, 1).factors.empty());
    CHECK(subgroup_span(2, {{1, 0}, {0, 1}}, 2).factors == std::vector<i64>({2, 2}));
}

TEST_CASE("hom groups: structure and counting") {
    auto z2 = FinAbGroup::from_factors({2});
    auto z3 = FinAbGroup::from_factors({3});
    auto z4 = FinAbGroup::from_factors({4});
    auto z22 = FinAbGroup::from_factors({2, 2});
    CHECK(hom_generators(z2, z2).structure.factors == std::vector<i64>{2});
    CHECK(hom_generators(z2, z3).structure.factors.empty());
    CHECK(hom_generators(z4, z22).structure.factors == std::vector<i64>({2, 2}));
}

TEST_CASE("hom group order is the product of gcds") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<i64> f(1, 12);
    for (int iter = 0; iter < 50; ++iter) {
        auto A = FinAbGroup::from_factors({f(rng), f(rng)});
        auto B = FinAbGroup::from_factors({f(rng), f(rng)});
        auto H = hom_generators(A, B);
        bigint expect = 1;
        for (i64 d : A.factors)
            for (i64 e : B.factors) expect *= detail::gcd_i64(d, e);
        CHECK(H.order() == expect);
        CHECK(H.structure.order() == expect);
    }
}

TEST_CASE("hom apply/coords round trip") {
    auto A = FinAbGroup::from_factors({2, 4});
    auto B = FinAbGroup::from_factors({8});
    auto H = hom_generators(A, B);
    REQUIRE(H.index.size() == 2);
    for (size_t t = 0; t < H.index.size(); ++t) {
        auto mat = H.generator_matrix(static_cast<int>(t));
        auto c = H.coords_of_matrix(mat);
        REQUIRE(c.has_value());
        for (size_t s = 0; s < H.index.size(); ++s) CHECK((*c)[s] == (s == t ? 1 : 0));
    }
}

TEST_CASE("tensor product of finite abelian groups") {
    auto a = FinAbGroup::from_factors({2, 4});
    auto b = FinAbGroup::from_factors({6});
    CHECK(tensor_product(a, b).factors == std::vector<i64>({2, 2}));
    CHECK(tensor_product(FinAbGroup::from_factors({3}), FinAbGroup::from_factors({2}))
              .factors.empty());
}

TEST_CASE("canonical invariant factors") {
    CHECK(canonical_invariant_factors({2, 2, 3}) == std::vector<i64>({2, 6}));
    CHECK(canonical_invariant_factors({1, 1}) == std::vector<i64>{});
    CHECK(canonical_invariant_factors({4, 6}) == std::vector<i64>({2, 12}));
}

TEST_CASE("subgroups of cyclic coordinate spaces") {
    // inside Z/2 x Z/4: the subgroup generated by (1, 2)
    Subgroup s = make_subgroup({2, 4}, {{1, 2}});
    CHECK(s.order() == 2);
    CHECK(s.contains({1, 2}));
    CHECK(s.contains({0, 0}));
    CHECK(!s.contains({1, 0}));
    Subgroup full = make_subgroup({2, 4}, {{1, 0}, {0, 1}});
    CHECK(full.order() == 8);
    CHECK(subgroup_contains(full, s));
    CHECK(!subgroup_contains(s, full));
    CHECK(!subgroup_equal(s, full));
}

TEST_CASE("kernel generators of a hom between coordinate spaces") {
    // f: Z/4 -> Z/4, x -> 2x; kernel = {0, 2}
    auto ker = kernel_generators({4}, {4}, {{2}});
    Subgroup k = make_subgroup({4}, ker);
    CHECK(k.order() == 2);
    CHECK(k.contains({2}));
    // zero map: kernel is everything
    auto ker2 = kernel_generators({4}, {4}, {{0}});
    CHECK(make_subgroup({4}, ker2).order() == 4);
}
