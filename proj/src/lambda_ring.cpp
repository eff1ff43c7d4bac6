#include "springer/lambda_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

VirtualClass::VirtualClass(int n, std::vector<int> lines, long shift) : n_(n), lines_(std::move(lines)), shift_(shift) {
    if (n < 1 || n > kMaxVariables) throw std::invalid_argument("VirtualClass: ambient size out of range");
    for (int i : lines_)
        if (i < 1 || i > n) throw std::invalid_argument("VirtualClass: line index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    std::sort(lines_.begin(), lines_.end());
}

VirtualClass VirtualClass::of_subset(const IndexSubset& subset, long shift) {
    return VirtualClass(subset.ambient(), subset.indices(), shift);
}

Polynomial VirtualClass::to_polynomial() const {
    Polynomial p = Polynomial::constant(n_, Rational(shift_));
    for (int i : lines_) p += Polynomial::variable(n_, i);
    return p;
}

VirtualClass VirtualClass::shifted(long k) const { return VirtualClass(n_, lines_, shift_ + k); }

std::string VirtualClass::to_string() const {
    std::string out;
    for (int i : lines_) {
        if (!out.empty()) out += " + ";
        out += "[L" + std::to_string(i) + "]";
    }
    if (shift_ != 0 || out.empty()) {
        if (out.empty()) out = std::to_string(shift_);
        else out += (shift_ < 0 ? " - " : " + ") + std::to_string(shift_ < 0 ? -shift_ : shift_);
    }
    return out;
}

VirtualClass operator+(const VirtualClass& a, const VirtualClass& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("VirtualClass: ambient mismatch");
    std::vector<int> lines = a.lines_;
    lines.insert(lines.end(), b.lines_.begin(), b.lines_.end());
    return VirtualClass(a.n_, std::move(lines), a.shift_ + b.shift_);
}

std::vector<Polynomial> lambda_series(const VirtualClass& x, int truncation) {
    if (truncation < 0) throw std::invalid_argument("lambda_series: negative truncation");
    const int n = x.n();
    const auto len = static_cast<std::size_t>(truncation) + 1;
    std::vector<Polynomial> prod(len, Polynomial(n));
    prod[0] = Polynomial::constant(n, Rational(1));
    for (int i : x.lines()) {
        Polynomial u = Polynomial::variable(n, i);
        for (std::size_t k = len - 1; k >= 1; --k) prod[k] += prod[k - 1] * u;
    }
    std::vector<Polynomial> out(len, Polynomial(n));
    for (std::size_t k = 0; k < len; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            Integer c = binomial(x.shift(), static_cast<long>(j));
            if (!c.is_zero() && !prod[k - j].is_zero()) out[k] += prod[k - j] * Rational(c);
        }
    return out;
}

Polynomial lambda_op(const VirtualClass& x, int d) {
    if (d < 0) throw std::invalid_argument("lambda_op: negative degree");
    return lambda_series(x, d).back();
}

Polynomial gamma_sum_form(const VirtualClass& x, int d) {
    if (d < 0) throw std::invalid_argument("gamma: negative degree");
    if (d == 0) return Polynomial::constant(x.n(), Rational(1));
    auto series = lambda_series(x, d);
    Polynomial out(x.n());
    for (int k = 1; k <= d; ++k) {
        Integer c = binomial(d - 1, k - 1);
        out += series[static_cast<std::size_t>(k)] * Rational(c);
    }
    return out;
}

Polynomial gamma_shift_form(const VirtualClass& x, int d) {
    if (d < 0) throw std::invalid_argument("gamma: negative degree");
    if (d == 0) return Polynomial::constant(x.n(), Rational(1));
    return lambda_op(x.shifted(d - 1), d);
}

Polynomial gamma_op(const VirtualClass& x, int d) {
    Polynomial a = gamma_sum_form(x, d);
    Polynomial b = gamma_shift_form(x, d);
    if (!(a == b))
        throw std::logic_error("gamma forms disagree for x = " + x.to_string() + ", d = " + std::to_string(d) + ": " +
                               a.to_string("u") + " vs " + b.to_string("u"));
    return a;
}

const RelationRow* RelationReport::first_failure() const {
    for (const RelationRow& r : rows)
        if (!r.vanishes()) return &r;
    return nullptr;
}

namespace {

template <class Element>
RelationReport relations(const Partition& lambda, const GroebnerBasis& gb, Convention convention, Element element) {
    const int n = lambda.n();
    if (gb.nvars() != n) throw std::invalid_argument("basis lives in a ring with the wrong number of variables");
    if (convention == Convention::y) throw std::invalid_argument("relations are checked against a K-theoretic basis (u or v)");
    const Partition eta = dual(lambda);
    RelationReport rep;
    rep.lambda = lambda;
    rep.pass = true;
    for (int s = 1; s <= n; ++s) {
        const int q = p_function(eta, s);
        for (const IndexSubset& subset : enumerate_subsets(n, s)) {
            for (int d = s + 1 - q; d <= s + 2; ++d) {
                RelationRow row;
                row.subset = subset;
                row.d = d;
                row.q = q;
                row.element = element(subset, s, q, d);
                Polynomial local = convention == Convention::v ? row.element.shift_variables(Rational(1)) : row.element;
                row.normal_form = normal_form(local, gb);
                if (!row.vanishes()) rep.pass = false;
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

}  // namespace

RelationReport verify_gamma_relations(const Partition& lambda, const GroebnerBasis& gb, Convention convention) {
    return relations(lambda, gb, convention, [](const IndexSubset& subset, int s, int, int d) {
        return gamma_op(VirtualClass::of_subset(subset, -s), d);
    });
}

RelationReport equivalent_lambda_relations(const Partition& lambda, const GroebnerBasis& gb, Convention convention) {
    return relations(lambda, gb, convention, [](const IndexSubset& subset, int, int q, int d) {
        return lambda_op(VirtualClass::of_subset(subset, -q), d);
    });
}

}  // namespace springer
