#include "skewbrace/json_io.hpp"
#include "skewbrace/errors.hpp"

namespace skb {

namespace {

json table_to_json(const std::vector<i64>& t, int n) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(t[static_cast<size_t>(i) * n + j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

json group_table_to_json(const GroupTable& g) {
    json rows = json::array();
    for (int i = 0; i < g.n; ++i) {
        json row = json::array();
        for (int j = 0; j < g.n; ++j) row.push_back(g.op(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<int> int_table_from_json(const json& j, int n, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw parse_error(std::string(what) + ": expected an n x n array");
    std::vector<int> t;
    t.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw parse_error(std::string(what) + ": ragged table row");
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw parse_error(std::string(what) + ": non-integer entry");
            t.push_back(v.get<int>());
        }
    }
    return t;
}

std::vector<i64> i64_table_from_json(const json& j, int n, const char* what) {
    std::vector<int> t = int_table_from_json(j, n, what);
    return std::vector<i64>(t.begin(), t.end());
}

json factors_to_json(const std::vector<i64>& fs) {
    json a = json::array();
    for (i64 d : fs) a.push_back(d);
    return a;
}

} // namespace

json brace_to_json(const SkewBrace& b) {
    json j;
    j["order"] = b.n();
    j["add"] = group_table_to_json(b.add);
    j["circ"] = group_table_to_json(b.circ);
    return j;
}

SkewBrace brace_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("add") || !j.contains("circ"))
        throw parse_error("brace JSON needs order, add, circ");
    int n = j["order"].get<int>();
    return validate_brace(int_table_from_json(j["add"], n, "add"),
                          int_table_from_json(j["circ"], n, "circ"));
}

json factor_set_to_json(const BraceFactorSet& fs) {
    json j;
    j["modulus"] = fs.modulus;
    j["alpha"] = table_to_json(fs.alpha, fs.n());
    j["mu"] = table_to_json(fs.mu, fs.n());
    return j;
}

BraceFactorSet factor_set_from_json(const json& j, BraceRef Q) {
    if (!j.is_object() || !j.contains("modulus") || !j.contains("alpha") || !j.contains("mu"))
        throw parse_error("factor-set JSON needs modulus, alpha, mu");
    int n = Q->n();
    BraceFactorSet fs;
    fs.modulus = j["modulus"].get<i64>();
    fs.alpha = i64_table_from_json(j["alpha"], n, "alpha");
    fs.mu = i64_table_from_json(j["mu"], n, "mu");
    fs.brace = std::move(Q);
    return fs;
}

json group_factor_set_to_json(const GroupFactorSet& fs) {
    json j;
    j["modulus"] = fs.modulus;
    j["f"] = table_to_json(fs.f, fs.n());
    return j;
}

json cohomology_to_json(const CohomologyGroup& H) {
    json j;
    j["invariant_factors"] = factors_to_json(H.factors());
    j["modulus"] = H.modulus;
    json gens = json::array();
    if (H.brace_kind)
        for (const auto& fs : H.generators) gens.push_back(factor_set_to_json(fs));
    else
        for (const auto& fs : H.group_generators) gens.push_back(group_factor_set_to_json(fs));
    j["generators"] = std::move(gens);
    return j;
}

json multiplier_to_json(const MultiplierResult& M) {
    json j;
    j["multiplier"] = factors_to_json(M.group.factors);
    j["modulus"] = M.modulus;
    json gens = json::array();
    for (const auto& fs : M.generators) gens.push_back(factor_set_to_json(fs));
    for (const auto& fs : M.group_generators) gens.push_back(group_factor_set_to_json(fs));
    j["generators"] = std::move(gens);
    return j;
}

json extension_to_json(const AnnihilatorExtension& ext) {
    json j;
    j["K"] = factors_to_json(ext.K.factors);
    j["Q"] = brace_to_json(*ext.Q);
    if (ext.cocycle.size() == 1) {
        j["cocycle"] = factor_set_to_json(ext.cocycle[0]);
    } else {
        json comps = json::array();
        for (const auto& fs : ext.cocycle) comps.push_back(factor_set_to_json(fs));
        j["cocycle"] = std::move(comps);
    }
    return j;
}

AnnihilatorExtension extension_from_json(const json& j) {
    if (!j.is_object() || !j.contains("K") || !j.contains("Q") || !j.contains("cocycle"))
        throw parse_error("extension JSON needs K, Q, cocycle");
    FinAbGroup K;
    for (const auto& d : j["K"]) K.factors.push_back(d.get<i64>());
    if (K.factors != canonical_invariant_factors(K.factors))
        throw parse_error("K must be listed as a divisibility chain");
    BraceRef Q = share(brace_from_json(j["Q"]));
    std::vector<BraceFactorSet> comps;
    if (j["cocycle"].is_array()) {
        for (const auto& c : j["cocycle"]) comps.push_back(factor_set_from_json(c, Q));
    } else {
        comps.push_back(factor_set_from_json(j["cocycle"], Q));
    }
    return build_extension(K, std::move(comps), Q);
}

json info_report(const BraceRef& b) {
    json j;
    j["order"] = b->n();
    Ideal soc = socle(b), ann = annihilator(b), der = commutator_ideal(b);
    j["soc_order"] = soc.members.size();
    j["soc"] = soc.members;
    j["ann_order"] = ann.members.size();
    j["ann"] = ann.members;
    j["derived_order"] = der.members.size();
    j["derived"] = der.members;
    Abelianization ab = abelianization(b);
    j["abelianization"] = factors_to_json(ab.group.factors);
    BicyclicReport bc = is_bicyclic(*b);
    j["bicyclic"] = bc.bicyclic;
    j["add_group"] = bc.add_factors ? factors_to_json(*bc.add_factors) : json();
    j["circ_group"] = bc.circ_factors ? factors_to_json(*bc.circ_factors) : json();
    return j;
}

} // namespace skb
