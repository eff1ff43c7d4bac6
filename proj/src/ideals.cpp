#include "springer/ideals.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace springer {

std::string to_string(Flavor f) { return f == Flavor::cohomology ? "cohomology" : "ktheory"; }

std::string to_string(Convention c) {
    switch (c) {
        case Convention::y: return "y";
        case Convention::u: return "u";
        case Convention::v: return "v";
    }
    return "?";
}

Flavor parse_flavor(const std::string& text) {
    if (text == "cohomology") return Flavor::cohomology;
    if (text == "ktheory") return Flavor::ktheory;
    throw std::invalid_argument("unknown flavor '" + text + "'");
}

Convention parse_convention(const std::string& text) {
    if (text == "y") return Convention::y;
    if (text == "u") return Convention::u;
    if (text == "v") return Convention::v;
    throw std::invalid_argument("unknown convention '" + text + "'");
}

std::vector<Polynomial> IdealPresentation::polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.poly);
    return out;
}

std::vector<std::string> IdealPresentation::variable_names() const {
    std::vector<std::string> names;
    for (int i = 1; i <= n(); ++i) names.push_back(prefix() + std::to_string(i));
    return names;
}

int lowest_relation_degree(int s, int q) { return std::max(1, s + 1 - q); }

namespace {

// Walks every admissible (subset, d) pair in (s, subset, d) order and keeps the
// first witness of each distinct polynomial.
template <class Make>
IdealPresentation build(const Partition& lambda, Flavor flavor, Convention convention, Make make) {
    IdealPresentation out;
    out.lambda = lambda;
    out.dual_partition = dual(lambda);
    out.flavor = flavor;
    out.convention = convention;
    const int n = lambda.n();
    std::unordered_set<std::string> seen;
    for (int s = 1; s <= n; ++s) {
        const int q = p_function(out.dual_partition, s);
        const int lo = lowest_relation_degree(s, q);
        if (lo > s) continue;
        for (const IndexSubset& subset : enumerate_subsets(n, s)) {
            for (int d = lo; d <= s; ++d) {
                Polynomial p = make(subset, d, q);
                if (!seen.insert(p.to_string()).second) continue;
                out.generators.push_back({std::move(p), subset, d, q, flavor});
            }
        }
    }
    return out;
}

}  // namespace

IdealPresentation tanisaki_generators(const Partition& lambda) {
    const int n = lambda.n();
    return build(lambda, Flavor::cohomology, Convention::y,
                 [n](const IndexSubset& subset, int d, int) { return elementary_symmetric(subset, d, n); });
}

Polynomial h_polynomial(const IndexSubset& subset, int d, int q) {
    if (d < 1) throw std::invalid_argument("h_polynomial: d must be positive");
    if (q < 0) throw std::invalid_argument("h_polynomial: q must be non-negative");
    const int n = subset.ambient();
    Polynomial h(n);
    for (int k = 0; k <= d; ++k) {
        // Coefficient of t^(d-k) in (1+t)^(-q).
        Integer c = binomial(q + d - k - 1, d - k);
        if ((d - k) % 2) c = -c;
        if (c.is_zero()) continue;
        h += elementary_symmetric(subset, k, n) * Rational(c);
    }
    return h;
}

IdealPresentation k_tanisaki_generators(const Partition& lambda, Convention convention) {
    if (convention == Convention::y) throw std::invalid_argument("K-theoretic presentation uses the u or v convention");
    const bool shifted = convention == Convention::v;
    return build(lambda, Flavor::ktheory, convention, [shifted](const IndexSubset& subset, int d, int q) {
        Polynomial h = h_polynomial(subset, d, q);
        // u_j = v_j + 1
        return shifted ? h.shift_variables(Rational(1)) : h;
    });
}

TruncationCertificate truncation_certificate(const Partition& lambda, const IndexSubset& subset) {
    const int n = lambda.n();
    if (subset.ambient() != n) throw std::invalid_argument("subset does not live in [1,n]");
    const int s = subset.size();
    const int q = p_function(dual(lambda), s);
    const int lo = lowest_relation_degree(s, q);

    TruncationCertificate cert;
    cert.subset = subset;
    cert.q = q;

    // coeffs[m] expresses h_m over the kept range [lo, s]; index d - lo.
    const int width = std::max(0, s - lo + 1);
    std::vector<std::vector<Integer>> coeffs(static_cast<std::size_t>(s + 3));
    for (int d = lo; d <= s; ++d) {
        coeffs[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(width), Integer(0));
        coeffs[static_cast<std::size_t>(d)][static_cast<std::size_t>(d - lo)] = 1;
    }
    std::vector<Polynomial> kept;
    for (int d = lo; d <= s; ++d) kept.push_back(h_polynomial(subset, d, q));

    for (int m = s + 1; m <= s + 2; ++m) {
        auto& row = coeffs[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(width), Integer(0));
        for (int k = 1; k <= q; ++k) {
            const auto& prev = coeffs[static_cast<std::size_t>(m - k)];
            Integer c = binomial(q, k);
            for (int j = 0; j < width; ++j) row[static_cast<std::size_t>(j)] -= c * prev[static_cast<std::size_t>(j)];
        }
        TruncationCertificate::Entry e;
        e.m = m;
        e.h = h_polynomial(subset, m, q);
        e.combined = Polynomial(n);
        for (int j = 0; j < width; ++j) {
            const Integer& c = row[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            e.combination.emplace_back(lo + j, c);
            e.combined += kept[static_cast<std::size_t>(j)] * Rational(c);
        }
        cert.entries.push_back(std::move(e));
    }
    return cert;
}

Polynomial apply_permutation(const Polynomial& p, const std::vector<int>& sigma) {
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("apply_permutation: not a permutation of [1,n]");
    return p.rename_variables(sigma);
}

}  // namespace springer
