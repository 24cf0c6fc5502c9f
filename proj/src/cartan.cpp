#include "crystal/cartan.hpp"

#include <stdexcept>
#include <string>

namespace crystal {

int check_node(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("node index must be 1 or 2, got " + std::to_string(i));
    return i;
}

CartanData::CartanData(long long a_, long long b_) : a(a_), b(b_) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("off-diagonal Cartan parameters must be non-negative");
    switch (checked_mul(a, b)) {
        case 0: coxeter_order = 2; break;
        case 1: coxeter_order = 3; break;
        case 2: coxeter_order = 4; break;
        case 3: coxeter_order = 6; break;
        default: coxeter_order = std::nullopt; break;
    }
}

ClWeight fundamental_weight(int i) {
    check_node(i);
    return i == 1 ? ClWeight{1, 0} : ClWeight{0, 1};
}

ClWeight simple_root(const CartanData& cd, int k) {
    check_node(k);
    return k == 1 ? ClWeight{2, -cd.b} : ClWeight{-cd.a, 2};
}

ClWeight reflect(const CartanData& cd, int k, const ClWeight& w) {
    ClWeight alpha = simple_root(cd, k);
    long long c = w.pairing(k);
    return ClWeight{checked_sub(w.c1, checked_mul(c, alpha.c1)),
                    checked_sub(w.c2, checked_mul(c, alpha.c2))};
}

long long quantum_int(const CartanData& cd, long long n) {
    if (n < -1) throw std::invalid_argument("quantum integer undefined for n < -1");
    if (n == -1) return 0;
    long long t = checked_sub(checked_mul(cd.a, cd.b), 2);  // xi + 1/xi
    long long prev = 0, cur = 1;                            // [-1], [0]
    for (long long s = 1; s <= n; ++s) {
        long long next = checked_sub(checked_mul(t, cur), prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

long long d_coeff(const CartanData& cd, long long j, ChainSign eps) {
    if (j < 1 || !cd.coset_in_range(j))
        throw std::invalid_argument("d coefficient index " + std::to_string(j) + " out of range");
    if (j % 2 == 0) {
        long long n = j / 2;
        long long side = (eps == ChainSign::plus) ? cd.b : cd.a;
        return checked_neg(checked_mul(side, quantum_int(cd, n - 1)));
    }
    long long n = (j - 1) / 2;
    return checked_neg(checked_add(quantum_int(cd, n), quantum_int(cd, n - 1)));
}

ClWeight coset_weight(const CartanData& cd, int i, const Coset& tau) {
    check_node(i);
    if (tau.eps != chain_sign(i))
        throw std::invalid_argument("coset chain sign does not match the weight node");
    if (!cd.coset_in_range(tau.m))
        throw std::invalid_argument("coset length " + std::to_string(tau.m) + " out of range");
    ClWeight w = fundamental_weight(i);
    for (long long t = 1; t <= tau.m; ++t) w = reflect(cd, t % 2 == 1 ? i : other_node(i), w);
    return w;
}

Coset s_times_coset(const CartanData& cd, int i, int k, const Coset& tau) {
    check_node(i);
    check_node(k);
    if (tau.eps != chain_sign(i))
        throw std::invalid_argument("coset chain sign does not match the weight node");
    if (!cd.coset_in_range(tau.m))
        throw std::invalid_argument("coset length " + std::to_string(tau.m) + " out of range");
    // Leftmost letter of tau_m is s_i for odd m, s_{i'} for even m >= 2.
    if (tau.m >= 1 && (tau.m % 2 == 1 ? i : other_node(i)) == k) return Coset{tau.m - 1, tau.eps};
    // s_k extends the word exactly when it alternates with the current
    // leftmost letter, i.e. when k is the leftmost letter of tau_{m+1}.
    if (((tau.m + 1) % 2 == 1 ? i : other_node(i)) == k && cd.coset_in_range(tau.m + 1))
        return Coset{tau.m + 1, tau.eps};
    // Fixed coset: m = 0 with k = i', or the top coset in finite type.
    return tau;
}

PCoeff p_coeff(const CartanData& cd, int i, long long m) {
    check_node(i);
    if (m < 0 || !cd.coset_in_range(checked_mul(2, m)))
        throw std::invalid_argument("p coefficient index " + std::to_string(m) + " out of range");
    ClWeight w = coset_weight(cd, i, Coset{2 * m, chain_sign(i)});
    PCoeff p{w.pairing(i), checked_neg(w.pairing(other_node(i)))};
    if (p.p_i < 0 || p.p_other < 0)
        throw std::logic_error("p coefficients must be non-negative in range");
    return p;
}

}  // namespace crystal
