// Command-line surface for the skew-brace toolkit. All commands read a brace
// (builder spec or JSON file), compute, and print canonical JSON.
#include "skewbrace/builders.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/json_io.hpp"
#include "skewbrace/selftest.hpp"
#include "skewbrace/twisted.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace skb;

namespace {

struct Options {
    bool pretty = false;
    i64 max_classes = 1'000'000;
    int max_order = kMaxOrder;
    i64 modulus = 0;
    std::string out;
};

CohomologyBudget budget_of(const Options& opt) {
    CohomologyBudget b;
    b.max_classes = opt.max_classes;
    return b;
}

void emit(const json& j, const Options& opt) {
    std::string text = opt.pretty ? j.dump(2) : j.dump();
    if (opt.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(opt.out);
        f << text << "\n";
    }
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    return j;
}

BraceRef load_brace(const std::string& spec, const Options& opt) {
    SkewBrace b = std::filesystem::exists(spec) ? brace_from_json(load_json_file(spec))
                                                : build_brace(spec);
    if (b.n() > opt.max_order)
        throw too_large_error("brace order " + std::to_string(b.n()) +
                              " exceeds --max-order");
    return share(std::move(b));
}

// Extension specs: a JSON file, or one of
//   cnd:n,d            Z/d -> C_(nd,d) -> C_(n,d)
//   cover:<brace>      the constructed Schur cover extension
//   byann:<brace>      the brace over its annihilator
//   split:d1,d2,..|<brace>   zero cocycle with K = ⊕ Z/d_i
AnnihilatorExtension load_extension(const std::string& spec, const Options& opt) {
    if (std::filesystem::exists(spec)) return extension_from_json(load_json_file(spec));
    size_t colon = spec.find(':');
    std::string head = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "cnd") {
        size_t comma = rest.find(',');
        if (comma == std::string::npos) throw parse_error("cnd:n,d needs two parameters");
        int n = std::stoi(rest.substr(0, comma));
        int d = std::stoi(rest.substr(comma + 1));
        BraceRef E = load_brace("c:" + std::to_string(n * d) + "," + std::to_string(d), opt);
        std::vector<int> members;
        for (int k = 0; k < d; ++k) members.push_back(n * k);
        std::sort(members.begin(), members.end());
        std::vector<int> t(n);
        for (int x = 0; x < n; ++x) t[x] = x;
        return extension_from_ideal(E, members, t);
    }
    if (head == "cover") return build_schur_cover(load_brace(rest, opt), budget_of(opt));
    if (head == "byann") {
        BraceRef E = load_brace(rest, opt);
        return extension_from_ideal(E, annihilator(E).members);
    }
    if (head == "split") {
        size_t bar = rest.find('|');
        if (bar == std::string::npos) throw parse_error("split:d1,..|<brace>");
        std::vector<i64> ds;
        std::string list = rest.substr(0, bar);
        size_t start = 0;
        while (start <= list.size()) {
            size_t comma = list.find(',', start);
            std::string item = list.substr(start, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - start);
            if (!item.empty()) ds.push_back(std::stoll(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        BraceRef Q = load_brace(rest.substr(bar + 1), opt);
        FinAbGroup K = FinAbGroup::from_factors(ds);
        std::vector<BraceFactorSet> zeros;
        for (i64 d : K.factors) zeros.push_back(zero_factor_set(Q, d));
        return build_extension(K, std::move(zeros), Q);
    }
    throw parse_error("unknown extension spec '" + spec + "'");
}

json certificate_json(const CoverCertificate& cert) {
    json j;
    j["k_inside_derived"] = cert.k_inside_derived;
    j["order_matches"] = cert.order_matches;
    j["transgression_bijective"] = cert.transgression_bijective;
    json mult = json::array();
    for (i64 d : cert.multiplier) mult.push_back(d);
    j["multiplier"] = std::move(mult);
    return j;
}

int dispatch(CLI::App& app, const Options& opt, const std::string& verb,
             const std::vector<std::string>& args) {
    (void)app;
    if (verb == "info") {
        emit(info_report(load_brace(args.at(0), opt)), opt);
    } else if (verb == "validate") {
        BraceRef b = load_brace(args.at(0), opt);
        json j;
        j["valid"] = true;
        j["order"] = b->n();
        emit(j, opt);
    } else if (verb == "multiplier") {
        emit(multiplier_to_json(schur_multiplier(load_brace(args.at(0), opt), budget_of(opt))),
             opt);
    } else if (verb == "group-multiplier") {
        emit(multiplier_to_json(group_schur_multiplier(build_group(args.at(0)), budget_of(opt))),
             opt);
    } else if (verb == "h2b") {
        if (opt.modulus < 1) throw parse_error("h2b needs --modulus m >= 1");
        emit(cohomology_to_json(h2b(load_brace(args.at(0), opt), opt.modulus, budget_of(opt))),
             opt);
    } else if (verb == "cover") {
        AnnihilatorExtension cov = build_schur_cover(load_brace(args.at(0), opt), budget_of(opt));
        json j = extension_to_json(cov);
        CoverCertificate cert = is_schur_cover(cov, budget_of(opt));
        j["is_cover"] = cert.is_cover();
        j["certificate"] = certificate_json(cert);
        emit(j, opt);
    } else if (verb == "covers") {
        CoverList covers = enumerate_covers(load_brace(args.at(0), opt), budget_of(opt));
        json j;
        j["count"] = covers.covers.size();
        j["bound"] = static_cast<i64>(covers.bound);
        j["classes_scanned"] = static_cast<i64>(covers.classes_scanned);
        json list = json::array();
        for (const auto& E : covers.covers) list.push_back(brace_to_json(*E));
        j["covers"] = std::move(list);
        emit(j, opt);
    } else if (verb == "isoclinic") {
        auto w = isoclinism_test(load_brace(args.at(0), opt), load_brace(args.at(1), opt));
        json j;
        j["isoclinic"] = w.has_value();
        if (w) {
            j["xi"] = w->xi.map;
            j["theta"] = w->theta.map;
            j["derived_members_a"] = w->da_members;
            j["derived_members_b"] = w->db_members;
        }
        emit(j, opt);
    } else if (verb == "hs-check") {
        if (opt.modulus < 1) throw parse_error("hs-check needs --modulus m >= 1");
        HSReport r = hochschild_serre_check(load_extension(args.at(0), opt), opt.modulus,
                                            budget_of(opt));
        json j;
        j["exact"] = {r.exact_at_hom_q, r.exact_at_hom_b, r.exact_at_hom_k, r.exact_at_h2};
        j["orders"] = {{"hom_q", r.hom_q_order.str()},
                       {"hom_b", r.hom_b_order.str()},
                       {"hom_k", r.hom_k_order.str()},
                       {"h2", r.h2_order.str()},
                       {"im_inf", r.im_inf_order.str()},
                       {"ker_res", r.ker_res_order.str()},
                       {"im_res", r.im_res_order.str()},
                       {"ker_tra", r.ker_tra_order.str()},
                       {"im_tra", r.im_tra_order.str()},
                       {"ker_inf", r.ker_inf_order.str()}};
        emit(j, opt);
        return r.all_exact() ? 0 : 1;
    } else if (verb == "extension") {
        AnnihilatorExtension ext = load_extension(args.at(0), opt);
        json j = extension_to_json(ext);
        CoverCertificate cert = is_schur_cover(ext, budget_of(opt));
        j["is_cover"] = cert.is_cover();
        j["certificate"] = certificate_json(cert);
        j["lifting_property"] = lifting_property_check(ext, budget_of(opt));
        emit(j, opt);
    } else if (verb == "selftest") {
        std::string filter = args.empty() ? "" : args.at(0);
        auto results = skb::selftest::run(filter);
        bool all = !results.empty();
        for (const auto& r : results) {
            std::printf("%s  %-36s (%.2f s)%s%s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.seconds, r.detail.empty() ? "" : "  ",
                        r.detail.c_str());
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with finite skew braces: cohomology, Schur "
                 "multipliers, covers, isoclinism"};
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, std::vector<std::string>> verb_args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--pretty", opt.pretty, "indent the JSON output");
        sub->add_option("--out", opt.out, "write the JSON to a file");
        sub->add_option("--max-classes", opt.max_classes,
                        "budget for exhaustive class iteration");
        sub->add_option("--max-order", opt.max_order, "largest accepted brace order");
    };

    struct Spec {
        const char* verb;
        int positionals;
        const char* help;
        bool takes_modulus;
    };
    const Spec specs[] = {
        {"info", 1, "structural report: socle, annihilator, derived ideal, groups", false},
        {"validate", 1, "validate a brace given by tables or a builder spec", false},
        {"multiplier", 1, "Schur multiplier M_b with generator cocycles", false},
        {"group-multiplier", 1, "group Schur multiplier M(G)", false},
        {"h2b", 1, "second brace cohomology with Z/m coefficients", true},
        {"cover", 1, "construct and certify a Schur cover", false},
        {"covers", 1, "enumerate pairwise non-isomorphic Schur covers", false},
        {"isoclinic", 2, "test two braces for isoclinism", false},
        {"hs-check", 1, "Hochschild-Serre exactness report for an extension", true},
        {"extension", 1, "validate an extension and report its certificates", false},
        {"selftest", 0, "run the acceptance checks (optional filter argument)", false},
    };
    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.verb, s.help);
        add_common(sub);
        if (s.takes_modulus)
            sub->add_option("--modulus", opt.modulus, "coefficient modulus m")->required();
        if (s.verb == std::string("selftest")) {
            static std::string filter;
            sub->add_option("--filter", filter, "run only checks whose name contains this");
            sub->callback([&, sub] { verb_args["selftest"] = {filter}; });
            continue;
        }
        auto& slot = verb_args[s.verb];
        slot.resize(s.positionals);
        for (int i = 0; i < s.positionals; ++i)
            sub->add_option(i == 0 ? "spec" : "spec" + std::to_string(i + 1), slot[i],
                            "builder spec or JSON file")
                ->required();
    }

    CLI11_PARSE(app, argc, argv);
    std::string verb = app.get_subcommands().front()->get_name();

    try {
        return dispatch(app, opt, verb, verb_args[verb]);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const too_large_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        json j;
        j["valid"] = false;
        j["error"] = e.kind();
        j["message"] = e.what();
        if (e.witness()[0] >= 0) j["witness"] = e.witness();
        std::cout << (opt.pretty ? j.dump(2) : j.dump()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
