#include "crystal/rational.hpp"

#include <limits>
#include <stdexcept>

#include "crystal/checked.hpp"

namespace crystal {

namespace {

__int128 gcd128(__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
}

}  // namespace

Rational Rational::reduce(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational{};
    __int128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
}

Rational::Rational(long long n, long long d) { *this = reduce(n, d); }

long long Rational::as_integer() const {
    if (!is_integer()) throw std::logic_error("rational " + str() + " is not an integer");
    return num_;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& x, const Rational& y) {
    // Intermediate products fit __int128; reduce() re-checks the final fit.
    return Rational::reduce(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                            static_cast<__int128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
    return Rational::reduce(static_cast<__int128>(x.num_) * y.den_ - static_cast<__int128>(y.num_) * x.den_,
                            static_cast<__int128>(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
    return Rational::reduce(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::invalid_argument("rational division by zero");
    return Rational::reduce(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace crystal
