#pragma once

#include <map>

#include "crystal/lspath.hpp"
#include "crystal/monomial.hpp"

namespace crystal {

// Monomial with exact rational exponents: the accumulator behind the
// path-to-monomial map. The map's image is integral, so to_integral() must
// never fail on genuine inputs; failing loudly instead of rounding is the
// point of keeping the exponents exact.
class FracMonomial {
public:
    FracMonomial() = default;
    explicit FracMonomial(const LaurentMonomial& m);

    void multiply_pow(const LaurentMonomial& m, const Rational& power);
    const std::map<VarIndex, Rational>& exponents() const { return exps_; }
    bool empty() const { return exps_.empty(); }

    // Throws std::logic_error unless every exponent is an integer.
    LaurentMonomial to_integral() const;

private:
    std::map<VarIndex, Rational> exps_;
};

// M_s(v_{tau Lambda_i}), the extremal monomial of weight tau Lambda_i:
// closed form in the P coefficients, X^P/X^P with indices shifted by s.
LaurentMonomial extremal_monomial(const CartanData& cd, int i, long long shift, const Coset& tau);

// The crystal isomorphism: pi |-> prod_l M_s(v_{tau_l Lambda_i})^(a_l - a_{l-1}).
LaurentMonomial phi_map(const CartanData& cd, int i, long long shift, const LSPath& pi);

// Inverse by greedy factorization at the maximal double index. Throws
// not_in_image when X does not lie in the monomial crystal of X_{s,i}.
LSPath phi_inverse(const CartanData& cd, int i, long long shift, const LaurentMonomial& X);

}  // namespace crystal
