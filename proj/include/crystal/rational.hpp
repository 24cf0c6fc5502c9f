#pragma once

#include <compare>
#include <string>

namespace crystal {

// Exact rational number, always in lowest terms with positive denominator.
// Arithmetic is exact; any result outside 64-bit range throws
// std::overflow_error.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT: implicit from integers is intended
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // Value as long long; requires is_integer().
    long long as_integer() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    // "p/q", or just "p" when integral.
    std::string str() const;

private:
    long long num_ = 0;
    long long den_ = 1;

    static Rational reduce(__int128 n, __int128 d);
};

}  // namespace crystal
