#pragma once

// Exact integers and rationals. Values that fit in a machine word stay in an
// int64 fast path; anything larger is promoted to a GMP integer and demoted
// again as soon as it fits.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace springer {

class Integer {
public:
    Integer() noexcept = default;
    Integer(int v) noexcept : small_(v) {}
    Integer(long v) noexcept : small_(v) {}
    Integer(long long v) noexcept : small_(static_cast<int64_t>(v)) {}
    Integer(unsigned v) noexcept : small_(v) {}
    Integer(unsigned long v);
    explicit Integer(const mpz_class& v);
    explicit Integer(std::string_view decimal);

    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o);
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    bool is_small() const noexcept { return !big_; }
    bool fits_int64() const noexcept { return !big_; }
    int64_t to_int64() const;  // throws std::overflow_error when not small
    mpz_class to_mpz() const;

    int sign() const noexcept;
    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_one() const noexcept { return !big_ && small_ == 1; }

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    // Truncating quotient and remainder (C semantics).
    friend Integer operator/(const Integer& a, const Integer& b);
    friend Integer operator%(const Integer& a, const Integer& b);
    // Exact division; b must divide a.
    static Integer divexact(const Integer& a, const Integer& b);
    // Floor division, used by the Smith form pivot steps.
    static Integer floor_div(const Integer& a, const Integer& b);

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

    std::string to_string() const;

private:
    void normalize();  // demote big values that fit in int64

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
Integer pow(const Integer& base, unsigned exp);
Integer factorial(unsigned n);

// Extended gcd: g = a*x + b*y with g >= 0.
struct ExtendedGcd {
    Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

// Always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v) : num_(v) {}
    Rational(long long v) : num_(v) {}
    Rational(unsigned long v) : num_(v) {}
    Rational(Integer v) : num_(std::move(v)) {}
    Rational(Integer num, Integer den);
    // Accepts "a" or "a/b".
    static Rational parse(std::string_view text);

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_.is_one(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string to_string() const;

private:
    void normalize();

    Integer num_{0};
    Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace springer
