#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/rational.hpp"

namespace crystal {

// LS path of shape Lambda_i: a strictly decreasing coset chain
// tau_1 > ... > tau_r with breakpoints 0 = a_0 < a_1 < ... < a_r = 1.
// Segment l runs over [a_{l-1}, a_l] with direction tau_l Lambda_i.
//
// The factories validate shape only (monotone chain, monotone breakpoints,
// endpoints); full membership in B(Lambda_i) additionally needs the chain to
// be consecutive and the breakpoints to pass the d-integrality test, which is
// what is_member checks.
struct LSPath {
    int i = 1;
    std::vector<Coset> taus;
    std::vector<Rational> a;

    static LSPath make(int i, const std::vector<long long>& lengths, std::vector<Rational> breakpoints);
    static LSPath make(int i, std::vector<Coset> taus, std::vector<Rational> breakpoints);

    std::size_t segments() const { return taus.size(); }
    bool operator==(const LSPath&) const = default;
};

// Breakpoint values y_j = h_k(a_j) of the height function, with the minimum
// data driving the root operators: Q = min_j y_j (an integer for genuine LS
// paths), R = y_r - Q, and q/p the first/last index attaining Q.
struct HeightProfile {
    int k = 1;
    std::vector<Rational> y;
    long long Q = 0;
    long long R = 0;
    std::size_t p = 0;
    std::size_t q = 0;
};

// The straight path (e; 0, 1).
LSPath highest_path(int i);

// Throws std::logic_error when min h_k fails to be an integer, which signals
// a structurally fine but non-member path.
HeightProfile height_profile(const CartanData& cd, const LSPath& pi, int k);

// wt(pi) = pi(1); both coordinates must come out integral.
ClWeight wt(const CartanData& cd, const LSPath& pi);

long long epsilon(const CartanData& cd, const LSPath& pi, int k);
long long phi(const CartanData& cd, const LSPath& pi, int k);

// Littelmann root operators. Empty optional is the crystal's "0".
std::optional<LSPath> f_path(const CartanData& cd, const LSPath& pi, int k);
std::optional<LSPath> e_path(const CartanData& cd, const LSPath& pi, int k);

// Membership in B(Lambda_i): consecutive decreasing chain, m_2 < N in finite
// type, and a_l * d_m integral for every internal breakpoint a_l, where m is
// the coset length of the segment ending at a_l.
bool is_member(const CartanData& cd, const LSPath& pi);

// All members with top coset length m_2 <= m2_bound, ordered by m_2
// ascending, then m_1 descending, then breakpoints lexicographically.
// Requires m2_bound < N in finite type.
std::vector<LSPath> enumerate_paths(const CartanData& cd, int i, long long m2_bound);

// Text form "taus=<m2>,...,<m1>;a=<r0>,...,<rk>", rationals in lowest terms.
LSPath parse_path(const std::string& text, int i);
std::string format_path(const LSPath& pi);

}  // namespace crystal
