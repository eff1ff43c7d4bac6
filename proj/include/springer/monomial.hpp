#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace springer {

inline constexpr int kMaxVariables = 16;

// Dense exponent vector of fixed capacity. Only the first `nvars` slots of a
// polynomial's ambient ring are ever nonzero; the rest stay zero, so equality
// and hashing can look at the whole array.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::vector<int>& exponents);

    static Monomial variable(int index0, int power = 1);  // 0-based

    int operator[](int i) const noexcept { return exp_[static_cast<std::size_t>(i)]; }
    void set(int i, int e);
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& o) const;
    // Caller guarantees o divides *this.
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b) noexcept;

    // Bit i set iff the exponent of variable i is positive.
    uint32_t support() const noexcept;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && a.exp_ == b.exp_;
    }

    std::size_t hash() const noexcept;

private:
    std::array<uint8_t, kMaxVariables> exp_{};
    uint16_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { degrevlex, deglex, lex };

// Total multiplicative monomial order. `priority` lists variable indices (0-based)
// from most to least significant; empty means the natural order x1 > x2 > ... .
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(OrderKind kind, std::vector<int> priority = {});

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<int>& priority() const noexcept { return priority_; }

    // <0, 0, >0 like strcmp, with >0 meaning a is larger.
    int compare(const Monomial& a, const Monomial& b, int nvars) const noexcept;

    std::string name() const;  // "degrevlex", "lex", ... with ":p1,p2" suffix for a custom priority
    static MonomialOrder parse(const std::string& text);

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    OrderKind kind_ = OrderKind::degrevlex;
    std::vector<int> priority_;
};

// The canonical storage order for polynomials (degrevlex, natural priority).
int canonical_compare(const Monomial& a, const Monomial& b, int nvars) noexcept;

// All monomials of total degree exactly d in nvars variables, in descending
// canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace springer
