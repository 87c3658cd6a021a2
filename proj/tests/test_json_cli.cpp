#include <doctest.h>

#include "skewbrace/builders.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/json_io.hpp"

using namespace skb;

TEST_CASE("brace JSON round trip") {
    SkewBrace b = build_brace("c:9,3");
    json j = brace_to_json(b);
    CHECK(j["order"] == 9);
    SkewBrace back = brace_from_json(j);
    CHECK(back.add.tab == b.add.tab);
    CHECK(back.circ.tab == b.circ.tab);
    // canonical bytes: serializing twice gives identical output
    CHECK(j.dump() == brace_to_json(back).dump());
}

TEST_CASE("brace JSON rejects malformed input") {
    CHECK_THROWS_AS(brace_from_json(json::parse(R"({"order": 2})")), parse_error);
    CHECK_THROWS_AS(
        brace_from_json(json::parse(
            R"({"order": 2, "add": [[0,1],[1,0]], "circ": [[0,1]]})")),
        parse_error);
    // valid JSON, invalid table
    CHECK_THROWS_AS(
        brace_from_json(json::parse(
            R"({"order": 2, "add": [[0,1],[1,1]], "circ": [[0,1],[1,0]]})")),
        validation_error);
}

TEST_CASE("factor set JSON round trip") {
    BraceRef Q = share(build_brace("trivial:cyclic:3"));
    ivec h{0, 1, 2};
    BraceFactorSet fs = coboundary_pair(Q, 9, h);
    json j = factor_set_to_json(fs);
    BraceFactorSet back = factor_set_from_json(j, Q);
    CHECK(back.alpha == fs.alpha);
    CHECK(back.mu == fs.mu);
    CHECK(back.modulus == fs.modulus);
}

TEST_CASE("cohomology and multiplier serialization") {
    BraceRef Q = share(build_brace("c:4,2"));
    json h = cohomology_to_json(h2b(Q, 4));
    CHECK(h.contains("invariant_factors"));
    CHECK(h.contains("generators"));
    json m = multiplier_to_json(schur_multiplier(Q));
    CHECK(m["multiplier"] == json::array({2, 2}));
}

TEST_CASE("extension JSON round trip rebuilds an equivalent extension") {
    BraceRef Q = share(build_brace("trivial:cyclic:3"));
    MultiplierResult M = schur_multiplier(Q);
    FinAbGroup K = FinAbGroup::from_factors(M.group.factors);
    std::vector<BraceFactorSet> comps;
    for (size_t j = 0; j < K.factors.size(); ++j) {
        i64 s = M.modulus / K.factors[j];
        BraceFactorSet comp = zero_factor_set(Q, K.factors[j]);
        for (size_t t = 0; t < comp.alpha.size(); ++t) {
            comp.alpha[t] = M.generators[j].alpha[t] / s;
            comp.mu[t] = M.generators[j].mu[t] / s;
        }
        comps.push_back(std::move(comp));
    }
    AnnihilatorExtension ext = build_extension(K, comps, Q);
    json j = extension_to_json(ext);
    AnnihilatorExtension back = extension_from_json(j);
    CHECK(extension_equivalent(ext, back));
    CHECK(j.dump() == extension_to_json(back).dump());
}

TEST_CASE("info report fields") {
    json j = info_report(share(build_brace("c:4,2")));
    CHECK(j["soc_order"] == 2);
    CHECK(j["ann_order"] == 2);
    CHECK(j["derived_order"] == 2);
    CHECK(j["bicyclic"] == false);
    CHECK(j["circ_group"] == json::array({2, 2}));
    CHECK(info_report(share(build_brace("trivial:cyclic:2")))["derived_order"] == 1);
    CHECK(info_report(share(build_brace("bp:3")))["ann_order"] == 3);
}
