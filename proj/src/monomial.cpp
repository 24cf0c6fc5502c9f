#include "crystal/monomial.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "crystal/errors.hpp"

namespace crystal {

LaurentMonomial LaurentMonomial::variable(long long s, int node, long long exp) {
    check_node(node);
    LaurentMonomial m;
    m.multiply_by(VarIndex{s, node}, exp);
    return m;
}

long long LaurentMonomial::exponent(const VarIndex& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

void LaurentMonomial::multiply_by(const VarIndex& v, long long delta) {
    if (delta == 0) return;
    auto [it, inserted] = exps_.try_emplace(v, 0);
    it->second = checked_add(it->second, delta);
    if (it->second == 0) exps_.erase(it);
}

LaurentMonomial LaurentMonomial::times(const LaurentMonomial& o) const {
    LaurentMonomial r = *this;
    for (const auto& [v, e] : o.exps_) r.multiply_by(v, e);
    return r;
}

LaurentMonomial LaurentMonomial::inverse() const { return pow(-1); }

LaurentMonomial LaurentMonomial::pow(long long e) const {
    LaurentMonomial r;
    if (e == 0) return r;
    for (const auto& [v, x] : exps_) r.exps_.emplace(v, checked_mul(x, e));
    return r;
}

ClWeight mono_wt(const LaurentMonomial& X) {
    ClWeight w;
    for (const auto& [v, e] : X.exponents()) {
        if (v.node == 1)
            w.c1 = checked_add(w.c1, e);
        else
            w.c2 = checked_add(w.c2, e);
    }
    return w;
}

namespace {

// Prefix sums of row i of the exponent map, evaluated at the row's support
// points t_1 < ... < t_v. S[j] is the sum up to and including t_j; S[0] = 0
// stands for every prefix ending left of the support.
struct RowPrefix {
    std::vector<long long> t;
    std::vector<long long> S;  // size t.size() + 1
    long long phi = 0;
};

RowPrefix row_prefix(const LaurentMonomial& X, int i) {
    RowPrefix r;
    r.S.push_back(0);
    for (const auto& [v, e] : X.exponents()) {
        if (v.node != i) continue;
        r.t.push_back(v.s);
        r.S.push_back(checked_add(r.S.back(), e));
    }
    for (long long s : r.S)
        if (s > r.phi) r.phi = s;
    return r;
}

}  // namespace

long long mono_phi(const LaurentMonomial& X, int i) {
    check_node(i);
    return row_prefix(X, i).phi;
}

long long mono_eps(const LaurentMonomial& X, int i) {
    check_node(i);
    return checked_sub(mono_phi(X, i), mono_wt(X).pairing(i));
}

LaurentMonomial a_monomial(const CartanData& cd, long long s, int k) {
    check_node(k);
    LaurentMonomial m;
    if (k == 1) {
        m.multiply_by(VarIndex{s, 1}, 1);
        m.multiply_by(VarIndex{s + 1, 1}, 1);
        m.multiply_by(VarIndex{s, 2}, -cd.b);
    } else {
        m.multiply_by(VarIndex{s, 2}, 1);
        m.multiply_by(VarIndex{s + 1, 2}, 1);
        m.multiply_by(VarIndex{s + 1, 1}, -cd.a);
    }
    return m;
}

std::optional<LaurentMonomial> f_mono(const CartanData& cd, const LaurentMonomial& X, int i) {
    check_node(i);
    RowPrefix r = row_prefix(X, i);
    if (r.phi == 0) return std::nullopt;
    // n_f: least index whose prefix sum attains phi. Since phi > 0 it is
    // reached at a jump, i.e. at a support point.
    std::size_t j = 1;
    while (r.S[j] != r.phi) ++j;
    return X.times(a_monomial(cd, r.t[j - 1], i).inverse());
}

std::optional<LaurentMonomial> e_mono(const CartanData& cd, const LaurentMonomial& X, int i) {
    check_node(i);
    RowPrefix r = row_prefix(X, i);
    long long eps = checked_sub(r.phi, mono_wt(X).pairing(i));
    if (eps == 0) return std::nullopt;
    // n_e: greatest index whose prefix sum attains phi. The prefix stays at
    // phi until the next support point drops it (eps > 0 guarantees a drop),
    // so n_e is that point minus one -- not itself a support point in general.
    std::size_t j = r.S.size() - 1;
    while (r.S[j] != r.phi) --j;
    return X.times(a_monomial(cd, r.t[j] - 1, i));
}

LaurentMonomial shift_monomial(const LaurentMonomial& X, long long delta) {
    LaurentMonomial r;
    for (const auto& [v, e] : X.exponents()) r.multiply_by(VarIndex{checked_add(v.s, delta), v.node}, e);
    return r;
}

LaurentMonomial parse_monomial(const std::string& text) {
    if (text == "1") return LaurentMonomial{};
    LaurentMonomial m;
    std::size_t pos = 0;
    auto integer = [&]() {
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits) throw parse_error("expected an integer", start);
        long long value = 0;
        auto res = std::from_chars(text.data() + start, text.data() + pos, value);
        if (res.ec != std::errc{}) throw parse_error("integer out of range", start);
        return value;
    };
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    while (true) {
        expect('X');
        expect('[');
        long long s = integer();
        expect(',');
        long long node = integer();
        if (node != 1 && node != 2) throw parse_error("node index must be 1 or 2", pos);
        expect(']');
        long long e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = integer();
        }
        m.multiply_by(VarIndex{s, static_cast<int>(node)}, e);
        if (pos == text.size()) break;
        expect('*');
    }
    return m;
}

std::string format_monomial(const LaurentMonomial& X) {
    if (X.trivial()) return "1";
    std::string out;
    for (const auto& [v, e] : X.exponents()) {
        if (!out.empty()) out += '*';
        out += "X[" + std::to_string(v.s) + "," + std::to_string(v.node) + "]";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace crystal
