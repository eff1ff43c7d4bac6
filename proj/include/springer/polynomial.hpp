#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "springer/integer.hpp"
#include "springer/monomial.hpp"
#include "springer/partition.hpp"

namespace springer {

struct Term {
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over Q in a fixed number of variables. Terms are kept
// sorted by descending degrevlex with no zero coefficients, so two equal
// polynomials have identical term vectors.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars);
    // Terms may be unsorted and may repeat monomials; they are combined.
    Polynomial(int nvars, std::vector<Term> terms);

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index1);  // 1-based

    int nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // -1 for the zero polynomial.
    int degree() const noexcept;
    // Lowest total degree among the terms, -1 for zero.
    int order() const noexcept;
    bool is_homogeneous() const noexcept;
    Rational coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned e) const;

    Rational evaluate(std::span<const Rational> point) const;
    // Sum of terms of total degree exactly d.
    Polynomial graded_component(int d) const;
    // Drop all terms of total degree > d.
    Polynomial truncate(int d) const;
    // Value at the all-ones point.
    Rational augmentation() const;
    // Replace every variable x by x + delta.
    Polynomial shift_variables(const Rational& delta) const;
    // Variable j (1-based) becomes variable image[j-1] (1-based).
    Polynomial rename_variables(std::span<const int> image) const;

    // "3*u1^2*u2 - u3 + 1"; the zero polynomial renders as "0".
    std::string to_string(std::string_view prefix = "x") const;
    static Polynomial parse(std::string_view text, std::string_view prefix, int nvars);

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const Polynomial& o) const;
    void canonicalize();

    int nvars_ = 0;
    std::vector<Term> terms_;
};

// Generalized binomial coefficient C(a, b) = a(a-1)...(a-b+1)/b! for b >= 0.
// Throws std::invalid_argument when b < 0.
Integer binomial(long a, long b);

// e_k of the variables selected by `vars` in an n-variable ring.
Polynomial elementary_symmetric(const IndexSubset& vars, int k, int n);

Polynomial shift_variables(const Polynomial& p, const Rational& delta);
Rational augmentation(const Polynomial& p);
Polynomial graded_component(const Polynomial& p, int d);

// 64-bit FNV-1a, used for stable content hashes of canonical text.
uint64_t fnv1a64(std::string_view data);
std::string hex64(uint64_t v);

}  // namespace springer
