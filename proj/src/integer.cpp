#include "springer/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace springer {

namespace {

mpz_class to_mpz_value(int64_t v) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

}  // namespace

Integer::Integer(unsigned long v) {
    if (v <= static_cast<unsigned long>(std::numeric_limits<int64_t>::max())) {
        small_ = static_cast<int64_t>(v);
    } else {
        big_ = std::make_unique<mpz_class>();
        mpz_set_ui(big_->get_mpz_t(), v);
    }
}

Integer::Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) { normalize(); }

Integer::Integer(std::string_view decimal) {
    std::string s(decimal);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    big_ = std::make_unique<mpz_class>();
    if (mpz_set_str(big_->get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed integer literal '" + s + "'");
    normalize();
}

Integer& Integer::operator=(const Integer& o) {
    if (this == &o) return *this;
    small_ = o.small_;
    if (o.big_) {
        if (big_) *big_ = *o.big_;
        else big_ = std::make_unique<mpz_class>(*o.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        big_.reset();
    }
}

int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : to_mpz_value(small_); }

int Integer::sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
}

Integer Integer::operator-() const {
    if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    mpz_class r = to_mpz() + o.to_mpz();
    big_ = std::make_unique<mpz_class>(std::move(r));
    normalize();
    return *this;
}

Integer& Integer::operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    mpz_class r = to_mpz() - o.to_mpz();
    big_ = std::make_unique<mpz_class>(std::move(r));
    normalize();
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    mpz_class r = to_mpz() * o.to_mpz();
    big_ = std::make_unique<mpz_class>(std::move(r));
    normalize();
    return *this;
}

Integer operator/(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1))
        return Integer(a.small_ / b.small_);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer operator%(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_) {
        if (b.small_ == -1) return Integer(0);
        return Integer(a.small_ % b.small_);
    }
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1))
        return Integer(a.small_ / b.small_);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer Integer::floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    // Canonical representation: a value is big only if it does not fit.
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = mpz_cmp(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) {
        int64_t x = a.to_int64(), y = b.to_int64();
        if (x != std::numeric_limits<int64_t>::min() && y != std::numeric_limits<int64_t>::min()) {
            uint64_t u = static_cast<uint64_t>(x < 0 ? -x : x);
            uint64_t v = static_cast<uint64_t>(y < 0 ? -y : y);
            while (v) {
                uint64_t t = u % v;
                u = v;
                v = t;
            }
            return Integer(static_cast<unsigned long>(u));
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer pow(const Integer& base, unsigned exp) {
    Integer result(1), b(base);
    while (exp) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return result;
}

Integer factorial(unsigned n) {
    Integer r(1);
    for (unsigned k = 2; k <= n; ++k) r *= Integer(k);
    return r;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (!r.is_zero()) {
        Integer q = Integer::floor_div(old_r, r);
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.is_one()) return;
    Integer g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = Integer::divexact(num_, g);
        den_ = Integer::divexact(den_, g);
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ -= o.num_;
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::inverse() const { return Rational(den_, num_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace springer
