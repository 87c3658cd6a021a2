#include "skewbrace/twisted.hpp"
#include "skewbrace/errors.hpp"

namespace skb {

using detail::gcd_i64;
using detail::mod_reduce;

TwistedAlgebra make_twisted_algebra(BraceFactorSet cocycle) {
    if (!cocycle.brace)
        throw validation_error("InvalidParameters", "cocycle carries no brace");
    return TwistedAlgebra{std::move(cocycle)};
}

Monomial neutral_monomial() { return Monomial{0, 0}; }

Monomial monomial_product(const TwistedAlgebra& alg, const Monomial& x,
                          const Monomial& y, ProductMode mode) {
    const SkewBrace& A = alg.brace();
    i64 m = alg.modulus();
    if (mode == ProductMode::additive)
        return Monomial{mod_reduce(x.exponent + y.exponent + alg.cocycle.a(x.element, y.element), m),
                        A.add.op(x.element, y.element)};
    return Monomial{mod_reduce(x.exponent + y.exponent + alg.cocycle.u(x.element, y.element), m),
                    A.circ.op(x.element, y.element)};
}

Monomial monomial_inverse(const TwistedAlgebra& alg, const Monomial& x, ProductMode mode) {
    const SkewBrace& A = alg.brace();
    i64 m = alg.modulus();
    if (mode == ProductMode::additive) {
        int na = A.neg(x.element);
        return Monomial{mod_reduce(-x.exponent - alg.cocycle.a(x.element, na), m), na};
    }
    int ia = A.cinv(x.element);
    return Monomial{mod_reduce(-x.exponent - alg.cocycle.u(x.element, ia), m), ia};
}

RelationCheck brace_alg_relation_check(const TwistedAlgebra& alg) {
    const SkewBrace& A = alg.brace();
    int n = A.n();
    for (int a = 0; a < n; ++a) {
        Monomial ea{0, a};
        Monomial ea_inv = monomial_inverse(alg, ea, ProductMode::additive);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Monomial lhs = monomial_product(
                    alg, ea,
                    monomial_product(alg, Monomial{0, b}, Monomial{0, c},
                                     ProductMode::additive),
                    ProductMode::circle);
                Monomial rhs = monomial_product(
                    alg,
                    monomial_product(
                        alg,
                        monomial_product(alg, ea, Monomial{0, b}, ProductMode::circle),
                        ea_inv, ProductMode::additive),
                    monomial_product(alg, ea, Monomial{0, c}, ProductMode::circle),
                    ProductMode::additive);
                if (!(lhs == rhs)) return RelationCheck{false, a, b, c};
            }
    }
    return RelationCheck{};
}

RelationCheck monomial_associativity_check(const TwistedAlgebra& alg, ProductMode mode) {
    const SkewBrace& A = alg.brace();
    int n = A.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Monomial ea{0, a}, eb{0, b}, ec{0, c};
                Monomial lhs =
                    monomial_product(alg, monomial_product(alg, ea, eb, mode), ec, mode);
                Monomial rhs =
                    monomial_product(alg, ea, monomial_product(alg, eb, ec, mode), mode);
                if (!(lhs == rhs)) return RelationCheck{false, a, b, c};
            }
    return RelationCheck{};
}

bool linearizable(const TwistedAlgebra& alg, const CohomologyBudget& budget) {
    alg.cocycle.require_valid();
    CohomologyGroup H = h2b(alg.cocycle.brace, alg.modulus(), budget);
    for (i64 c : H.class_coords(alg.cocycle))
        if (c != 0) return false;
    return true;
}

bool lifting_property_check(const AnnihilatorExtension& ext,
                            const CohomologyBudget& budget) {
    MultiplierResult M = schur_multiplier(ext.Q, budget);
    if (M.group.trivial()) return true;
    std::vector<ivec> images;
    for (int i = 0; i < ext.K.rank(); ++i) {
        i64 g = gcd_i64(ext.K.factors[i], M.modulus);
        ivec phi(ext.K.rank(), 0);
        phi[i] = M.modulus / g;
        images.push_back(M.coords_from_h(transgression(ext, M.h, phi)));
    }
    Subgroup span = make_subgroup(M.group.factors, images);
    return span.order() == M.group.order();
}

} // namespace skb
