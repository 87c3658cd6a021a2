#include "skewbrace/builders.hpp"
#include "skewbrace/errors.hpp"

#include <charconv>

namespace skb {

namespace {

int parse_int(const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw parse_error("expected an integer, got '" + s + "'");
    return v;
}

std::pair<std::string, std::string> split_head(const std::string& spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos) return {spec, ""};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

} // namespace

GroupTable build_group(const std::string& spec) {
    auto [head, rest] = split_head(spec);
    if (head == "cyclic") return cyclic_group(parse_int(rest));
    if (head == "klein") {
        if (!rest.empty() && parse_int(rest) != 4) throw parse_error("klein has order 4");
        return klein_group();
    }
    if (head == "s3") return symmetric3_group();
    if (head == "quaternion") {
        if (!rest.empty() && parse_int(rest) != 8) throw parse_error("quaternion has order 8");
        return quaternion_group();
    }
    if (head == "dihedral") return dihedral_group(parse_int(rest));
    throw parse_error("unknown group spec '" + spec + "'");
}

SkewBrace build_brace(const std::string& spec) {
    auto [head, rest] = split_head(spec);
    if (head == "c") {
        size_t comma = rest.find(',');
        if (comma == std::string::npos) throw parse_error("c:n,d needs two parameters");
        return make_c_nd(parse_int(rest.substr(0, comma)), parse_int(rest.substr(comma + 1)));
    }
    if (head == "bp") return make_b_p(parse_int(rest));
    if (head == "trivial") return make_trivial(build_group(rest));
    if (head == "almosttrivial") return make_almost_trivial(build_group(rest));
    if (head == "op") return opposite_brace(build_brace(rest));
    if (head == "prod") {
        std::vector<std::string> parts;
        size_t start = 0;
        while (start <= rest.size()) {
            size_t bar = rest.find('|', start);
            if (bar == std::string::npos) {
                parts.push_back(rest.substr(start));
                break;
            }
            parts.push_back(rest.substr(start, bar - start));
            start = bar + 1;
        }
        if (parts.size() < 2) throw parse_error("prod needs at least two factors");
        SkewBrace acc = build_brace(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i)
            acc = direct_product(acc, build_brace(parts[i]));
        return acc;
    }
    throw parse_error("unknown brace spec '" + spec + "'");
}

} // namespace skb
