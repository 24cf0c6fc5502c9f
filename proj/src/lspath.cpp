#include "crystal/lspath.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

// <h_k, tau_l Lambda_i>, the slope of segment l.
long long segment_slope(const CartanData& cd, const LSPath& pi, std::size_t l, int k) {
    return coset_weight(cd, pi.i, pi.taus[l]).pairing(k);
}

}  // namespace

LSPath LSPath::make(int i, const std::vector<long long>& lengths, std::vector<Rational> breakpoints) {
    std::vector<Coset> taus;
    taus.reserve(lengths.size());
    for (long long m : lengths) taus.push_back(Coset{m, chain_sign(i)});
    return make(i, std::move(taus), std::move(breakpoints));
}

LSPath LSPath::make(int i, std::vector<Coset> taus, std::vector<Rational> breakpoints) {
    check_node(i);
    if (taus.empty()) throw std::invalid_argument("path needs at least one segment");
    if (breakpoints.size() != taus.size() + 1)
        throw std::invalid_argument("path needs one more breakpoint than cosets");
    for (std::size_t l = 0; l < taus.size(); ++l) {
        if (taus[l].eps != chain_sign(i))
            throw std::invalid_argument("coset chain sign does not match the shape node");
        if (taus[l].m < 0) throw std::invalid_argument("coset length must be non-negative");
        if (l + 1 < taus.size() && taus[l].m <= taus[l + 1].m)
            throw std::invalid_argument("coset chain must be strictly decreasing");
    }
    if (!breakpoints.front().is_zero())
        throw std::invalid_argument("first breakpoint must be 0, got " + breakpoints.front().str());
    if (breakpoints.back() != Rational{1})
        throw std::invalid_argument("last breakpoint must be 1, got " + breakpoints.back().str());
    for (std::size_t l = 1; l < breakpoints.size(); ++l)
        if (!(breakpoints[l - 1] < breakpoints[l]))
            throw std::invalid_argument("breakpoint " + breakpoints[l].str() +
                                        " does not exceed its predecessor " + breakpoints[l - 1].str());
    LSPath pi;
    pi.i = i;
    pi.taus = std::move(taus);
    pi.a = std::move(breakpoints);
    return pi;
}

LSPath highest_path(int i) { return LSPath::make(i, std::vector<long long>{0}, {Rational{0}, Rational{1}}); }

HeightProfile height_profile(const CartanData& cd, const LSPath& pi, int k) {
    check_node(k);
    const std::size_t r = pi.segments();
    HeightProfile hp;
    hp.k = k;
    hp.y.resize(r + 1);
    hp.y[0] = Rational{0};
    for (std::size_t l = 1; l <= r; ++l)
        hp.y[l] = hp.y[l - 1] + Rational{segment_slope(cd, pi, l - 1, k)} * (pi.a[l] - pi.a[l - 1]);

    // Each segment is linear, so the minimum of h_k sits at a breakpoint.
    Rational qmin = hp.y[0];
    for (const Rational& v : hp.y)
        if (v < qmin) qmin = v;
    if (!qmin.is_integer())
        throw std::logic_error("height minimum " + qmin.str() + " is not an integer; not an LS path");
    hp.Q = qmin.as_integer();

    Rational rr = hp.y[r] - qmin;
    if (!rr.is_integer())
        throw std::logic_error("height endpoint " + hp.y[r].str() + " is not an integer; not an LS path");
    hp.R = rr.as_integer();

    hp.q = 0;
    while (hp.y[hp.q] != qmin) ++hp.q;
    hp.p = r;
    while (hp.y[hp.p] != qmin) --hp.p;
    return hp;
}

ClWeight wt(const CartanData& cd, const LSPath& pi) {
    Rational c1{0}, c2{0};
    for (std::size_t l = 1; l <= pi.segments(); ++l) {
        ClWeight w = coset_weight(cd, pi.i, pi.taus[l - 1]);
        Rational width = pi.a[l] - pi.a[l - 1];
        c1 += Rational{w.c1} * width;
        c2 += Rational{w.c2} * width;
    }
    if (!c1.is_integer() || !c2.is_integer())
        throw std::logic_error("path weight (" + c1.str() + "," + c2.str() + ") is not integral; not an LS path");
    return ClWeight{c1.as_integer(), c2.as_integer()};
}

long long epsilon(const CartanData& cd, const LSPath& pi, int k) { return -height_profile(cd, pi, k).Q; }

long long phi(const CartanData& cd, const LSPath& pi, int k) { return height_profile(cd, pi, k).R; }

std::optional<LSPath> f_path(const CartanData& cd, const LSPath& pi, int k) {
    check_node(k);
    HeightProfile hp = height_profile(cd, pi, k);
    if (hp.R == 0) return std::nullopt;
    const std::size_t r = pi.segments();
    const Rational q1{hp.Q + 1};

    // x = least s in [p, r] with h_k >= Q+1 on [a_s, 1]; by linearity this is
    // a suffix-minimum scan over breakpoint values. s = r qualifies since
    // y_r = Q + R >= Q+1, and s = p never does, so p < x <= r.
    std::size_t x = r;
    {
        Rational sufmin = hp.y[r];
        for (std::size_t j = r; j-- > hp.p;) {
            if (hp.y[j] < sufmin) sufmin = hp.y[j];
            if (sufmin >= q1)
                x = j;
            else
                break;
        }
    }
    const bool eq = hp.y[x] == q1;
    // Compare s_k tau_{p+1} with tau_p; for p = 0 it counts as strictly below.
    const Coset st = s_times_coset(cd, pi.i, k, pi.taus[hp.p]);
    const bool lift = hp.p >= 1 && st == pi.taus[hp.p - 1];

    std::vector<Coset> nt;
    std::vector<Rational> na;
    auto push_reflected = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) nt.push_back(s_times_coset(cd, pi.i, k, pi.taus[j]));
    };

    if (eq && lift) {
        // Drop tau_p; the reflected block starts with s_k tau_{p+1} = tau_p.
        nt.assign(pi.taus.begin(), pi.taus.begin() + (hp.p - 1));
        push_reflected(hp.p, x);
        nt.insert(nt.end(), pi.taus.begin() + x, pi.taus.end());
        na.assign(pi.a.begin(), pi.a.begin() + hp.p);
        na.insert(na.end(), pi.a.begin() + hp.p + 1, pi.a.end());
    } else if (eq && !lift) {
        nt.assign(pi.taus.begin(), pi.taus.begin() + hp.p);
        push_reflected(hp.p, x);
        nt.insert(nt.end(), pi.taus.begin() + x, pi.taus.end());
        na = pi.a;
    } else {
        // h_k crosses Q+1 inside segment x; split it at the crossing point.
        Rational slope{segment_slope(cd, pi, x - 1, k)};
        Rational anew = pi.a[x - 1] + (q1 - hp.y[x - 1]) / slope;
        if (lift) {
            nt.assign(pi.taus.begin(), pi.taus.begin() + (hp.p - 1));
            push_reflected(hp.p, x);
            nt.insert(nt.end(), pi.taus.begin() + (x - 1), pi.taus.end());
            na.assign(pi.a.begin(), pi.a.begin() + hp.p);
            na.insert(na.end(), pi.a.begin() + hp.p + 1, pi.a.begin() + x);
            na.push_back(anew);
            na.insert(na.end(), pi.a.begin() + x, pi.a.end());
        } else {
            nt.assign(pi.taus.begin(), pi.taus.begin() + hp.p);
            push_reflected(hp.p, x);
            nt.insert(nt.end(), pi.taus.begin() + (x - 1), pi.taus.end());
            na.assign(pi.a.begin(), pi.a.begin() + x);
            na.push_back(anew);
            na.insert(na.end(), pi.a.begin() + x, pi.a.end());
        }
    }
    return LSPath::make(pi.i, std::move(nt), std::move(na));
}

std::optional<LSPath> e_path(const CartanData& cd, const LSPath& pi, int k) {
    check_node(k);
    HeightProfile hp = height_profile(cd, pi, k);
    if (hp.Q == 0) return std::nullopt;
    const std::size_t r = pi.segments();
    const Rational q1{hp.Q + 1};

    // y = greatest s in [0, q] with h_k >= Q+1 on [0, a_s]; prefix-minimum
    // scan. s = 0 qualifies (y_0 = 0 >= Q+1 as Q <= -1) and s = q does not.
    std::size_t yb = 0;
    {
        Rational premin = hp.y[0];
        for (std::size_t j = 1; j <= hp.q; ++j) {
            if (hp.y[j] < premin) premin = hp.y[j];
            if (premin >= q1)
                yb = j;
            else
                break;
        }
    }
    const bool eq = hp.y[yb] == q1;
    // Compare s_k tau_q with tau_{q+1}; q >= 1 since y_0 = 0 > Q, and for
    // q = r it counts as strictly above.
    const Coset st = s_times_coset(cd, pi.i, k, pi.taus[hp.q - 1]);
    const bool drop = hp.q < r && st == pi.taus[hp.q];

    std::vector<Coset> nt;
    std::vector<Rational> na;
    auto push_reflected = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) nt.push_back(s_times_coset(cd, pi.i, k, pi.taus[j]));
    };

    if (eq && drop) {
        // The reflected block ends with s_k tau_q = tau_{q+1}, which absorbs
        // the following segment, so a_q goes away.
        nt.assign(pi.taus.begin(), pi.taus.begin() + yb);
        push_reflected(yb, hp.q);
        nt.insert(nt.end(), pi.taus.begin() + hp.q + 1, pi.taus.end());
        na.assign(pi.a.begin(), pi.a.begin() + hp.q);
        na.insert(na.end(), pi.a.begin() + hp.q + 1, pi.a.end());
    } else if (eq && !drop) {
        nt.assign(pi.taus.begin(), pi.taus.begin() + yb);
        push_reflected(yb, hp.q);
        nt.insert(nt.end(), pi.taus.begin() + hp.q, pi.taus.end());
        na = pi.a;
    } else {
        // h_k crosses Q+1 inside segment y+1; split at the crossing point.
        Rational slope{segment_slope(cd, pi, yb, k)};
        Rational anew = pi.a[yb] + (q1 - hp.y[yb]) / slope;
        if (drop) {
            nt.assign(pi.taus.begin(), pi.taus.begin() + yb + 1);
            push_reflected(yb, hp.q);
            nt.insert(nt.end(), pi.taus.begin() + hp.q + 1, pi.taus.end());
            na.assign(pi.a.begin(), pi.a.begin() + yb + 1);
            na.push_back(anew);
            na.insert(na.end(), pi.a.begin() + yb + 1, pi.a.begin() + hp.q);
            na.insert(na.end(), pi.a.begin() + hp.q + 1, pi.a.end());
        } else {
            nt.assign(pi.taus.begin(), pi.taus.begin() + yb + 1);
            push_reflected(yb, hp.q);
            nt.insert(nt.end(), pi.taus.begin() + hp.q, pi.taus.end());
            na.assign(pi.a.begin(), pi.a.begin() + yb + 1);
            na.push_back(anew);
            na.insert(na.end(), pi.a.begin() + yb + 1, pi.a.end());
        }
    }
    return LSPath::make(pi.i, std::move(nt), std::move(na));
}

bool is_member(const CartanData& cd, const LSPath& pi) {
    const std::size_t r = pi.segments();
    if (!cd.coset_in_range(pi.taus.front().m)) return false;
    for (std::size_t l = 0; l + 1 < r; ++l)
        if (pi.taus[l].m != pi.taus[l + 1].m + 1) return false;
    // Internal breakpoint a_l ends the segment of coset length taus[l-1].m
    // and must clear its d-coefficient to an integer.
    for (std::size_t l = 1; l < r; ++l) {
        long long m = pi.taus[l - 1].m;
        if (!(pi.a[l] * Rational{d_coeff(cd, m, pi.taus[l - 1].eps)}).is_integer()) return false;
    }
    return true;
}

namespace {

void enumerate_rec(const CartanData& cd, int i, long long m1, long long j,
                   std::vector<Rational>& chosen, std::vector<LSPath>& out) {
    if (j == m1) {
        std::vector<long long> lengths;
        long long m2 = m1 + static_cast<long long>(chosen.size());
        for (long long m = m2; m >= m1; --m) lengths.push_back(m);
        std::vector<Rational> bp;
        bp.reserve(chosen.size() + 2);
        bp.push_back(Rational{0});
        bp.insert(bp.end(), chosen.begin(), chosen.end());
        bp.push_back(Rational{1});
        out.push_back(LSPath::make(i, lengths, std::move(bp)));
        return;
    }
    long long d = d_coeff(cd, j, chain_sign(i));
    long long ad = d < 0 ? -d : d;
    if (ad <= 1) return;  // no rational in (0,1) clears this coefficient
    Rational low = chosen.empty() ? Rational{0} : chosen.back();
    for (long long c = 1; c < ad; ++c) {
        Rational v{c, ad};
        if (v > low) {
            chosen.push_back(v);
            enumerate_rec(cd, i, m1, j - 1, chosen, out);
            chosen.pop_back();
        }
    }
}

}  // namespace

std::vector<LSPath> enumerate_paths(const CartanData& cd, int i, long long m2_bound) {
    check_node(i);
    if (m2_bound < 0) throw std::invalid_argument("enumeration bound must be non-negative");
    if (!cd.coset_in_range(m2_bound))
        throw std::invalid_argument("enumeration bound " + std::to_string(m2_bound) +
                                    " must be below the Coxeter order");
    std::vector<LSPath> out;
    std::vector<Rational> chosen;
    for (long long m2 = 0; m2 <= m2_bound; ++m2)
        for (long long m1 = m2; m1 >= 0; --m1) enumerate_rec(cd, i, m1, m2, chosen, out);
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    void expect(char c) {
        if (done() || s[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    void expect(const char* lit) {
        for (const char* p = lit; *p; ++p) expect(*p);
    }

    long long integer() {
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        std::size_t digits = pos;
        while (!done() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == digits) throw parse_error("expected an integer", start);
        long long value = 0;
        auto res = std::from_chars(s.data() + start, s.data() + pos, value);
        if (res.ec != std::errc{}) throw parse_error("integer out of range", start);
        return value;
    }

    Rational rational() {
        std::size_t start = pos;
        long long num = integer();
        if (peek() != '/') return Rational{num};
        ++pos;
        long long den = integer();
        if (den <= 0) throw parse_error("denominator must be positive", start);
        return Rational{num, den};
    }
};

}  // namespace

LSPath parse_path(const std::string& text, int i) {
    Cursor c{text};
    c.expect("taus=");
    std::vector<long long> lengths{c.integer()};
    while (c.peek() == ',') {
        ++c.pos;
        lengths.push_back(c.integer());
    }
    c.expect(";a=");
    std::vector<Rational> bp{c.rational()};
    while (c.peek() == ',') {
        ++c.pos;
        bp.push_back(c.rational());
    }
    if (!c.done()) throw parse_error("unexpected trailing input", c.pos);
    if (bp.size() != lengths.size() + 1)
        throw parse_error("length mismatch: " + std::to_string(lengths.size()) + " cosets need " +
                              std::to_string(lengths.size() + 1) + " breakpoints",
                          c.pos);
    return LSPath::make(i, lengths, std::move(bp));
}

std::string format_path(const LSPath& pi) {
    std::string out = "taus=";
    for (std::size_t l = 0; l < pi.taus.size(); ++l) {
        if (l) out += ',';
        out += std::to_string(pi.taus[l].m);
    }
    out += ";a=";
    for (std::size_t l = 0; l < pi.a.size(); ++l) {
        if (l) out += ',';
        out += pi.a[l].str();
    }
    return out;
}

}  // namespace crystal
