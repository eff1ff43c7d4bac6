#include "springer/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

namespace springer {

namespace {

bool term_greater(const Term& a, const Term& b, int nvars) {
    return canonical_compare(a.monomial, b.monomial, nvars) > 0;
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVariables) throw std::invalid_argument("unsupported variable count");
}

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : Polynomial(nvars) {
    terms_ = std::move(terms);
    canonicalize();
}

void Polynomial::canonicalize() {
    for (const Term& t : terms_)
        for (int i = nvars_; i < kMaxVariables; ++i)
            if (t.monomial[i] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) { return term_greater(a, b, nvars_); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
}

Polynomial Polynomial::variable(int nvars, int index1) {
    if (index1 < 1 || index1 > nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    p.terms_.push_back({Monomial::variable(index1 - 1), Rational(1)});
    return p;
}

bool Polynomial::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

int Polynomial::degree() const noexcept { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

int Polynomial::order() const noexcept { return terms_.empty() ? -1 : terms_.back().monomial.degree(); }

bool Polynomial::is_homogeneous() const noexcept { return terms_.empty() || degree() == order(); }

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.monomial == m) return t.coeff;
    return Rational(0);
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial variable-count mismatch (" + std::to_string(nvars_) + " vs " +
                                    std::to_string(o.nvars_) + ")");
}

namespace {

template <bool Subtract>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int nvars) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = canonical_compare(a[i].monomial, b[j].monomial, nvars);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if constexpr (Subtract) out.back().coeff = -out.back().coeff;
        } else {
            Rational s = Subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    terms_ = merge_terms<false>(terms_, o.terms_, nvars_);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    terms_ = merge_terms<true>(terms_, o.terms_, nvars_);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const Term& x : a.terms_)
        for (const Term& y : b.terms_) acc[x.monomial * y.monomial] += x.coeff * y.coeff;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    Polynomial r(a.nvars_);
    std::sort(terms.begin(), terms.end(), [&](const Term& p, const Term& q) { return term_greater(p, q, a.nvars_); });
    r.terms_ = std::move(terms);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves degrevlex order.
    for (const Term& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, Rational(1)), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total(0);
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.monomial[i]; ++e) v *= point[static_cast<std::size_t>(i)];
        total += v;
    }
    return total;
}

Polynomial Polynomial::graded_component(int d) const {
    Polynomial r(nvars_);
    for (const Term& t : terms_)
        if (t.monomial.degree() == d) r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::truncate(int d) const {
    Polynomial r(nvars_);
    for (const Term& t : terms_)
        if (t.monomial.degree() <= d) r.terms_.push_back(t);
    return r;
}

Rational Polynomial::augmentation() const {
    Rational total(0);
    for (const Term& t : terms_) total += t.coeff;
    return total;
}

Polynomial Polynomial::shift_variables(const Rational& delta) const {
    if (delta.is_zero()) return *this;
    // (x_i + delta)^e, memoized per (variable, exponent).
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(nvars_));
    auto power_of = [&](int i, int e) -> const Polynomial& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        if (cache.empty()) cache.push_back(constant(nvars_, Rational(1)));
        Polynomial base = variable(nvars_, i + 1) + constant(nvars_, delta);
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };
    Polynomial result(nvars_);
    for (const Term& t : terms_) {
        Polynomial piece = constant(nvars_, t.coeff);
        for (int i = 0; i < nvars_; ++i)
            if (t.monomial[i]) piece *= power_of(i, t.monomial[i]);
        result += piece;
    }
    return result;
}

Polynomial Polynomial::rename_variables(std::span<const int> image) const {
    if (static_cast<int>(image.size()) != nvars_) throw std::invalid_argument("variable map has wrong length");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m;
        for (int i = 0; i < nvars_; ++i)
            if (t.monomial[i]) {
                int j = image[static_cast<std::size_t>(i)] - 1;
                if (j < 0 || j >= nvars_) throw std::out_of_range("variable map target out of range");
                m.set(j, m[j] + t.monomial[i]);
            }
        terms.push_back({m, t.coeff});
    }
    return Polynomial(nvars_, std::move(terms));
}

std::string Polynomial::to_string(std::string_view prefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        bool negative = c.sign() < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            int e = t.monomial[i];
            if (!e) continue;
            if (!mono.empty()) mono += '*';
            mono += prefix;
            mono += std::to_string(i + 1);
            if (e > 1) mono += '^' + std::to_string(e);
        }
        if (mono.empty()) out += c.to_string();
        else if (c.is_one()) out += mono;
        else out += c.to_string() + '*' + mono;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::string_view prefix, int nvars) : text_(text), prefix_(prefix), nvars_(nvars) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Term t = parse_term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip_ws();
        }
        return Polynomial(nvars_, std::move(terms));
    }

private:
    Term parse_term() {
        Term t{Monomial(), Rational(1)};
        while (true) {
            skip_ws();
            if (at_end()) fail("dangling operator");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string num = digits();
                skip_ws();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip_ws();
                    std::string den = digits();
                    t.coeff *= Rational(Integer(num), Integer(den));
                } else {
                    t.coeff *= Rational(Integer(num));
                }
            } else if (text_.substr(pos_, prefix_.size()) == prefix_) {
                pos_ += prefix_.size();
                std::string idx = digits();
                int var = std::stoi(idx);
                if (var < 1 || var > nvars_) fail("variable index " + idx + " out of range");
                int e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = std::stoi(digits());
                }
                t.monomial.set(var - 1, t.monomial[var - 1] + e);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return t;
        }
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_, prefix_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::string_view prefix, int nvars) {
    return PolyParser(text, prefix, nvars).parse();
}

Integer binomial(long a, long b) {
    if (b < 0) throw std::invalid_argument("binomial: negative lower index");
    if (a >= 0 && a < b) return Integer(0);
    // Symmetry keeps the product short when a is a large non-negative number.
    if (a >= 0 && b > a - b) b = a - b;
    Integer num(1), den(1);
    for (long k = 0; k < b; ++k) {
        num *= Integer(a - k);
        den *= Integer(k + 1);
    }
    return Integer::divexact(num, den);
}

Polynomial elementary_symmetric(const IndexSubset& vars, int k, int n) {
    if (k < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
    const auto& idx = vars.indices();
    const int s = vars.size();
    for (int i : idx)
        if (i < 1 || i > n) throw std::invalid_argument("elementary_symmetric: index outside the ring");
    Polynomial out(n);
    if (k > s) return out;
    // Walk the k-subsets of the chosen variables.
    std::vector<Term> terms;
    std::vector<int> choice(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) choice[static_cast<std::size_t>(j)] = j;
    while (true) {
        Monomial m;
        for (int j : choice) m.set(idx[static_cast<std::size_t>(j)] - 1, 1);
        terms.push_back({m, Rational(1)});
        int j = k - 1;
        while (j >= 0 && choice[static_cast<std::size_t>(j)] == s - k + j) --j;
        if (j < 0) break;
        ++choice[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l) choice[static_cast<std::size_t>(l)] = choice[static_cast<std::size_t>(l - 1)] + 1;
    }
    return Polynomial(n, std::move(terms));
}

Polynomial shift_variables(const Polynomial& p, const Rational& delta) { return p.shift_variables(delta); }
Rational augmentation(const Polynomial& p) { return p.augmentation(); }
Polynomial graded_component(const Polynomial& p, int d) { return p.graded_component(d); }

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace springer
