#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "crystal/cartan.hpp"

namespace crystal {

// Double index (s, node) of a variable X_{s,i}. The map ordering
// (s,1) < (s,2) < (s+1,1) < ... is the one the inverse map walks.
struct VarIndex {
    long long s = 0;
    int node = 1;

    auto operator<=>(const VarIndex&) const = default;
};

// Laurent monomial in the X_{s,i}: a finite-support exponent map with no
// stored zeros, so equality of maps is equality of monomials.
class LaurentMonomial {
public:
    LaurentMonomial() = default;

    static LaurentMonomial variable(long long s, int node, long long exp = 1);

    const std::map<VarIndex, long long>& exponents() const { return exps_; }
    long long exponent(const VarIndex& v) const;
    bool trivial() const { return exps_.empty(); }

    void multiply_by(const VarIndex& v, long long delta);
    LaurentMonomial times(const LaurentMonomial& o) const;
    LaurentMonomial inverse() const;
    LaurentMonomial pow(long long e) const;

    bool operator==(const LaurentMonomial&) const = default;

private:
    std::map<VarIndex, long long> exps_;
};

// wt(X) = sum_s zeta_{s,1} Lambda_1 + sum_s zeta_{s,2} Lambda_2.
ClWeight mono_wt(const LaurentMonomial& X);

// phi_i(X) = max over s (including the empty prefix) of sum_{k<=s} zeta_{k,i};
// eps_i(X) = phi_i(X) - <h_i, wt(X)>. Both are >= 0.
long long mono_phi(const LaurentMonomial& X, int i);
long long mono_eps(const LaurentMonomial& X, int i);

// A_{s,1} = X_{s,1} X_{s+1,1} X_{s,2}^{-b},  A_{s,2} = X_{s,2} X_{s+1,2} X_{s+1,1}^{-a}.
LaurentMonomial a_monomial(const CartanData& cd, long long s, int k);

// Kashiwara operators: multiply by A^{-1} at the least prefix-argmax (f) or
// by A at the greatest (e). Empty optional is the crystal's "0".
std::optional<LaurentMonomial> f_mono(const CartanData& cd, const LaurentMonomial& X, int i);
std::optional<LaurentMonomial> e_mono(const CartanData& cd, const LaurentMonomial& X, int i);

// Every first index shifted by delta.
LaurentMonomial shift_monomial(const LaurentMonomial& X, long long delta);

// Text form: "1", or factors "X[<s>,<i>]^<e>" joined by '*', "^1" omitted,
// sorted ascending by (s, i).
LaurentMonomial parse_monomial(const std::string& text);
std::string format_monomial(const LaurentMonomial& X);

}  // namespace crystal
