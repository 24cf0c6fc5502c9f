#pragma once

#include <optional>

#include "crystal/checked.hpp"

namespace crystal {

// Which of the two alternating coset chains of W/W_{Lambda_i} we are on:
// the '+' chain has words ending in s1 (stabilizer of Lambda_1 side), the
// '-' chain has words ending in s2.
enum class ChainSign { plus, minus };

// Throws std::invalid_argument unless i is 1 or 2; returns i.
int check_node(int i);

inline int other_node(int i) { return 3 - i; }
inline ChainSign chain_sign(int i) { return i == 1 ? ChainSign::plus : ChainSign::minus; }

// Rank-2 generalized Cartan matrix [[2,-a],[-b,2]] together with the order N
// of s2*s1. N is 2, 3, 4, 6 for ab = 0, 1, 2, 3 and infinite for ab >= 4.
struct CartanData {
    long long a;
    long long b;
    std::optional<long long> coxeter_order;

    CartanData(long long a, long long b);

    bool finite() const { return coxeter_order.has_value(); }

    // True when tau_m exists on either chain: m >= 0 and m < N in finite type.
    bool coset_in_range(long long m) const {
        return m >= 0 && (!finite() || m < *coxeter_order);
    }
};

// Weight in P_cl, stored as the pairing pair (<h_1,w>, <h_2,w>).
struct ClWeight {
    long long c1 = 0;
    long long c2 = 0;

    bool operator==(const ClWeight&) const = default;
    long long pairing(int k) const { return k == 1 ? c1 : c2; }
};

ClWeight fundamental_weight(int i);
ClWeight simple_root(const CartanData& cd, int k);

// s_k(w) = w - <h_k,w> alpha_k.
ClWeight reflect(const CartanData& cd, int k, const ClWeight& w);

// Coset tau_m in W/W_{Lambda_i}, identified by the length m of its minimal
// representative. The chain sign is stored alongside so that cosets from the
// two chains cannot be mixed up silently. On a fixed chain the Bruhat order
// is comparison of m.
struct Coset {
    long long m = 0;
    ChainSign eps = ChainSign::plus;

    bool operator==(const Coset&) const = default;
};

// [n] = xi^n + xi^(n-2) + ... + xi^(-n) where xi + 1/xi = ab - 2, computed by
// the integer recurrence [-1] = 0, [0] = 1, [n] = (ab-2)[n-1] - [n-2].
long long quantum_int(const CartanData& cd, long long n);

// d_j coefficients of the breakpoint integrality criterion:
//   d_{2n}^+ = -b[n-1],  d_{2n+1}^+ = -[n] - [n-1],
//   d_{2n}^- = -a[n-1],  d_{2n+1}^- = -[n] - [n-1].
// Requires 1 <= j, and j < N in finite type.
long long d_coeff(const CartanData& cd, long long j, ChainSign eps);

// tau_m Lambda_i, computed by applying the m letters of the alternating word
// right to left (the first reflection applied is s_i).
ClWeight coset_weight(const CartanData& cd, int i, const Coset& tau);

// Coset of s_k * tau_m. Moves down the chain when s_k is the leftmost letter
// of tau_m, up when it extends the alternating word, and fixes the coset
// otherwise (m = 0 with k = i', or the top coset in finite type).
Coset s_times_coset(const CartanData& cd, int i, int k, const Coset& tau);

// Coordinates of (s_{i'} s_i)^m Lambda_i = P_{m,i} Lambda_i - P_{m,i'} Lambda_{i'}.
struct PCoeff {
    long long p_i;
    long long p_other;
};

// Requires m >= 0 and 2m <= N-1 in finite type. Both entries are >= 0.
PCoeff p_coeff(const CartanData& cd, int i, long long m);

}  // namespace crystal
