#include "crystal/iso.hpp"

#include <stdexcept>
#include <string>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

std::string var_str(const VarIndex& v) {
    return "X[" + std::to_string(v.s) + "," + std::to_string(v.node) + "]";
}

}  // namespace

FracMonomial::FracMonomial(const LaurentMonomial& m) {
    for (const auto& [v, e] : m.exponents()) exps_.emplace(v, Rational{e});
}

void FracMonomial::multiply_pow(const LaurentMonomial& m, const Rational& power) {
    if (power.is_zero()) return;
    for (const auto& [v, e] : m.exponents()) {
        auto [it, inserted] = exps_.try_emplace(v, Rational{0});
        it->second += Rational{e} * power;
        if (it->second.is_zero()) exps_.erase(it);
    }
}

LaurentMonomial FracMonomial::to_integral() const {
    LaurentMonomial m;
    for (const auto& [v, e] : exps_) {
        if (!e.is_integer())
            throw std::logic_error("non-integral exponent " + e.str() + " of " + var_str(v));
        m.multiply_by(v, e.as_integer());
    }
    return m;
}

LaurentMonomial extremal_monomial(const CartanData& cd, int i, long long shift, const Coset& tau) {
    check_node(i);
    if (tau.eps != chain_sign(i))
        throw std::invalid_argument("coset chain sign does not match the weight node");
    if (!cd.coset_in_range(tau.m))
        throw std::invalid_argument("coset length " + std::to_string(tau.m) + " out of range");
    LaurentMonomial out;
    if (tau.m % 2 == 0) {
        long long m = tau.m / 2;
        PCoeff p = p_coeff(cd, i, m);
        if (i == 1) {
            out.multiply_by(VarIndex{shift + m, 1}, p.p_i);
            out.multiply_by(VarIndex{shift + m, 2}, -p.p_other);
        } else {
            out.multiply_by(VarIndex{shift + m, 2}, p.p_i);
            out.multiply_by(VarIndex{shift + m + 1, 1}, -p.p_other);
        }
    } else {
        long long m = (tau.m - 1) / 2;
        PCoeff p = p_coeff(cd, i, m);
        // Numerator coefficient P_{m+1,i'}, taken as 0 past the chain top.
        long long pnext = cd.coset_in_range(2 * (m + 1)) ? p_coeff(cd, i, m + 1).p_other : 0;
        if (i == 1) {
            out.multiply_by(VarIndex{shift + m, 2}, pnext);
            out.multiply_by(VarIndex{shift + m + 1, 1}, -p.p_i);
        } else {
            out.multiply_by(VarIndex{shift + m + 1, 1}, pnext);
            out.multiply_by(VarIndex{shift + m + 1, 2}, -p.p_i);
        }
    }
    return out;
}

LaurentMonomial phi_map(const CartanData& cd, int i, long long shift, const LSPath& pi) {
    check_node(i);
    if (i != pi.i) throw std::invalid_argument("path shape does not match the weight node");
    FracMonomial acc;
    for (std::size_t l = 1; l <= pi.segments(); ++l)
        acc.multiply_pow(extremal_monomial(cd, i, shift, pi.taus[l - 1]), pi.a[l] - pi.a[l - 1]);
    // Heights are integral at every reflection point of the chain; these
    // are exactly the partial sums that make the exponents whole.
    for (int k = 1; k <= 2; ++k) {
        HeightProfile hp = height_profile(cd, pi, k);
        for (std::size_t j = 1; j + 1 <= pi.segments(); ++j)
            if (s_times_coset(cd, i, k, pi.taus[j - 1]) == pi.taus[j] && !hp.y[j].is_integer())
                throw std::logic_error("height " + hp.y[j].str() + " at reflection point " +
                                       std::to_string(j) + " is not integral");
    }
    return acc.to_integral();
}

namespace {

// Which coset's extremal monomial has its denominator at variable v?
// The denominator indices walk the order (s,1) < (s,2) < (s+1,1) < ...
// strictly as the coset length grows, so the answer is unique.
long long denominator_length(int i, long long shift, const VarIndex& v) {
    long long d = v.s - shift;
    if (i == 1) return v.node == 2 ? 2 * d : 2 * d - 1;
    return v.node == 1 ? 2 * d - 2 : 2 * d - 1;
}

}  // namespace

LSPath phi_inverse(const CartanData& cd, int i, long long shift, const LaurentMonomial& X) {
    check_node(i);
    FracMonomial residual{X};
    Rational mass_left{1};
    std::vector<Coset> taus;
    std::vector<Rational> widths;

    while (!residual.empty()) {
        const auto& [v, zeta] = *residual.exponents().rbegin();
        if (v == VarIndex{shift, i}) {
            // Only the identity coset contributes the highest-weight
            // variable, and only as the final full-mass segment.
            if (residual.exponents().size() != 1 || zeta != mass_left)
                throw not_in_image("leftover factor " + var_str(v) + "^" + zeta.str() +
                                   " does not close the path at the identity coset");
            taus.push_back(Coset{0, chain_sign(i)});
            widths.push_back(mass_left);
            mass_left = Rational{0};
            break;
        }
        long long len = denominator_length(i, shift, v);
        if (len < 1 || !cd.coset_in_range(len))
            throw not_in_image("variable " + var_str(v) + " is not an extremal denominator");
        Coset tau{len, chain_sign(i)};
        LaurentMonomial M = extremal_monomial(cd, i, shift, tau);
        long long pden = -M.exponent(v);
        if (pden <= 0) throw not_in_image("variable " + var_str(v) + " is not an extremal denominator");
        Rational a = -zeta / Rational{pden};
        if (!(a > Rational{0}) || a > mass_left)
            throw not_in_image("segment mass " + a.str() + " at " + var_str(v) + " out of range");
        taus.push_back(tau);
        widths.push_back(a);
        residual.multiply_pow(M, -a);
        mass_left -= a;
    }
    if (!mass_left.is_zero())
        throw not_in_image("factorization consumed mass " + (Rational{1} - mass_left).str() +
                           " instead of 1");

    std::vector<Rational> bp{Rational{0}};
    for (const Rational& w : widths) bp.push_back(bp.back() + w);
    LSPath pi = LSPath::make(i, std::move(taus), std::move(bp));
    if (!is_member(cd, pi))
        throw not_in_image("factorization " + format_path(pi) + " is not an LS path");
    if (phi_map(cd, i, shift, pi) != X)
        throw not_in_image("factorization does not reproduce the monomial");
    return pi;
}

}  // namespace crystal
