#include "springer/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace springer {

Monomial::Monomial(const std::vector<int>& exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
        throw std::invalid_argument("too many variables for a monomial");
    for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

Monomial Monomial::variable(int index0, int power) {
    Monomial m;
    m.set(index0, power);
    return m;
}

void Monomial::set(int i, int e) {
    if (i < 0 || i >= kMaxVariables) throw std::out_of_range("monomial variable index out of range");
    if (e < 0 || e > 255) throw std::overflow_error("monomial exponent out of range");
    degree_ = static_cast<uint16_t>(degree_ - exp_[static_cast<std::size_t>(i)] + e);
    exp_[static_cast<std::size_t>(i)] = static_cast<uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        unsigned e = unsigned(exp_[i]) + o.exp_[i];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        r.exp_[i] = static_cast<uint8_t>(e);
    }
    r.degree_ = static_cast<uint16_t>(degree_ + o.degree_);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = static_cast<uint8_t>(exp_[i] - o.exp_[i]);
    r.degree_ = static_cast<uint16_t>(degree_ - o.degree_);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned deg = 0;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
        r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        deg += r.exp_[i];
    }
    r.degree_ = static_cast<uint16_t>(deg);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept { return (a.support() & b.support()) == 0; }

uint32_t Monomial::support() const noexcept {
    uint32_t mask = 0;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i]) mask |= (1u << i);
    return mask;
}

std::size_t Monomial::hash() const noexcept {
    // FNV-1a over the exponent bytes.
    uint64_t h = 1469598103934665603ull;
    for (uint8_t e : exp_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> priority) : kind_(kind), priority_(std::move(priority)) {
    if (!priority_.empty()) {
        std::vector<int> sorted = priority_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("variable priority is not a permutation");
        std::vector<int> identity(priority_.size());
        std::iota(identity.begin(), identity.end(), 0);
        if (priority_ == identity) priority_.clear();
    }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, int nvars) const noexcept {
    auto var = [&](int rank) { return priority_.empty() ? rank : priority_[static_cast<std::size_t>(rank)]; };
    if (kind_ != OrderKind::lex && a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    if (kind_ == OrderKind::degrevlex) {
        for (int r = nvars - 1; r >= 0; --r) {
            int i = var(r);
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    for (int r = 0; r < nvars; ++r) {
        int i = var(r);
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

std::string MonomialOrder::name() const {
    std::string s = kind_ == OrderKind::degrevlex ? "degrevlex" : kind_ == OrderKind::deglex ? "deglex" : "lex";
    if (!priority_.empty()) {
        s += ':';
        for (std::size_t i = 0; i < priority_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(priority_[i] + 1);
        }
    }
    return s;
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    OrderKind k;
    if (kind == "degrevlex") k = OrderKind::degrevlex;
    else if (kind == "deglex") k = OrderKind::deglex;
    else if (kind == "lex") k = OrderKind::lex;
    else throw std::invalid_argument("unknown monomial order '" + kind + "'");
    std::vector<int> priority;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string field = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            priority.push_back(std::stoi(field) - 1);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return MonomialOrder(k, std::move(priority));
}

int canonical_compare(const Monomial& a, const Monomial& b, int nvars) noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = nvars - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

namespace {

void degree_rec(int var, int nvars, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.set(var, remaining);
        out.push_back(cur);
        cur.set(var, 0);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set(var, e);
        degree_rec(var + 1, nvars, remaining - e, cur, out);
    }
    cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Monomial cur;
    degree_rec(0, nvars, d, cur, out);
    std::sort(out.begin(), out.end(),
              [nvars](const Monomial& a, const Monomial& b) { return canonical_compare(a, b, nvars) > 0; });
    return out;
}

}  // namespace springer
