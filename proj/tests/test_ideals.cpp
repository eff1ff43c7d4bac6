#include <doctest.h>

#include <set>

#include "springer/groebner.hpp"
#include "springer/ideals.hpp"
#include "support.hpp"

using namespace springer;

namespace {

Polynomial P(const char* text, int n, const char* prefix) { return Polynomial::parse(text, prefix, n); }

std::set<std::string> texts(const IdealPresentation& p) {
    std::set<std::string> out;
    for (const auto& g : p.generators) out.insert(g.poly.to_string(p.prefix()));
    return out;
}

// coefficient of t^d in prod (1 + u_i t) (1 + t)^(-q), via the test-side series
oracle::Poly h_oracle(int n, const std::vector<int>& vars, int d, int q) {
    return oracle::lambda_t(n, vars, -q, static_cast<std::size_t>(d) + 1)[static_cast<std::size_t>(d)];
}

}  // namespace

TEST_SUITE("ideals") {

TEST_CASE("cohomology generators for (2,1)") {
    IdealPresentation p = tanisaki_generators(Partition({2, 1}));
    CHECK(texts(p) == std::set<std::string>{"y1*y2", "y1*y3", "y2*y3", "y1 + y2 + y3", "y1*y2 + y1*y3 + y2*y3", "y1*y2*y3"});
    for (const auto& g : p.generators) {
        CHECK(g.flavor == Flavor::cohomology);
        CHECK(g.q == p_function(dual(p.lambda), g.subset.size()));
    }
}

TEST_CASE("the one-row partition contains every variable") {
    for (int n = 1; n <= 5; ++n) {
        IdealPresentation p = tanisaki_generators(Partition({n}));
        auto t = texts(p);
        for (int i = 1; i <= n; ++i) CHECK(t.count("y" + std::to_string(i)));
        IdealPresentation k = k_tanisaki_generators(Partition({n}), Convention::u);
        auto kt = texts(k);
        for (int i = 1; i <= n; ++i) CHECK(kt.count("u" + std::to_string(i) + " - 1"));
    }
}

TEST_CASE("generator invariants and counts") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : enumerate_partitions(n)) {
            IdealPresentation coh = tanisaki_generators(lambda);
            IdealPresentation kth = k_tanisaki_generators(lambda, Convention::u);
            IdealPresentation kv = k_tanisaki_generators(lambda, Convention::v);
            REQUIRE(coh.generators.size() == kth.generators.size());
            REQUIRE(kv.generators.size() == kth.generators.size());
            long expected = 0;
            for (int s = 1; s <= n; ++s) {
                int q = oracle::brute_p(oracle::brute_dual(lambda.parts()), n, s);
                expected += oracle::pascal(n, s).get_si() * (s - std::max(0, s - q));
            }
            CHECK(static_cast<long>(coh.generators.size()) == expected);
            for (std::size_t i = 0; i < coh.generators.size(); ++i) {
                const auto& c = coh.generators[i];
                const auto& k = kth.generators[i];
                const int s = c.subset.size();
                CHECK(c.d >= std::max(1, s + 1 - c.q));
                CHECK(c.d <= s);
                CHECK(c.poly.is_homogeneous());
                CHECK(c.poly == elementary_symmetric(c.subset, c.d, n));
                CHECK(k.subset == c.subset);
                CHECK(k.d == c.d);
                CHECK(augmentation(k.poly).is_zero());
                CHECK(graded_component(k.poly, k.d) == elementary_symmetric(k.subset, k.d, n));
                CHECK(kv.generators[i].poly == k.poly.shift_variables(Rational(1)));
            }
        }
}

TEST_CASE("h polynomials match the series expansion") {
    const int n = 3;
    CHECK(h_polynomial(IndexSubset({1, 2}, n), 2, 1) == P("u1*u2 - u1 - u2 + 1", n, "u"));
    CHECK(h_polynomial(IndexSubset({1, 2, 3}, n), 1, 3) == P("u1 + u2 + u3 - 3", n, "u"));
    Polynomial h3 = h_polynomial(IndexSubset({1, 2, 3}, n), 3, 3);
    IndexSubset all({1, 2, 3}, n);
    Polynomial by_e = elementary_symmetric(all, 3, n) - Rational(3) * elementary_symmetric(all, 2, n) +
                      Rational(6) * elementary_symmetric(all, 1, n) - Polynomial::constant(n, 10);
    CHECK(h3 == by_e);
    CHECK(augmentation(h3).is_zero());
    // q = 0 gives back e_d
    CHECK(h_polynomial(IndexSubset({1, 3}, n), 2, 0) == elementary_symmetric(IndexSubset({1, 3}, n), 2, n));
    for (int m = 1; m <= 5; ++m)
        for (int s = 1; s <= m; ++s)
            for (const IndexSubset& sub : enumerate_subsets(m, s))
                for (int q = 0; q <= s; ++q)
                    for (int d = 1; d <= s + 2; ++d)
                        CHECK(oracle::from_library(h_polynomial(sub, d, q)) == h_oracle(m, sub.indices(), d, q));
}

TEST_CASE("K-theoretic generators for (2,1)") {
    const int n = 3;
    IdealPresentation u = k_tanisaki_generators(Partition({2, 1}), Convention::u);
    std::set<std::string> expected;
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        Polynomial g = (Polynomial::variable(n, i) - Polynomial::constant(n, 1)) * (Polynomial::variable(n, j) - Polynomial::constant(n, 1));
        expected.insert(g.to_string("u"));
    }
    IndexSubset all({1, 2, 3}, n);
    Polynomial e1 = elementary_symmetric(all, 1, n), e2 = elementary_symmetric(all, 2, n), e3 = elementary_symmetric(all, 3, n);
    expected.insert((e1 - Polynomial::constant(n, 3)).to_string("u"));
    expected.insert((e2 - Rational(3) * e1 + Polynomial::constant(n, 6)).to_string("u"));
    expected.insert((e3 - Rational(3) * e2 + Rational(6) * e1 - Polynomial::constant(n, 10)).to_string("u"));
    CHECK(texts(u) == expected);
    IdealPresentation v = k_tanisaki_generators(Partition({2, 1}), Convention::v);
    auto vt = texts(v);
    CHECK(vt.count("v1*v2"));
    CHECK(vt.count("v1*v3"));
    CHECK(vt.count("v2*v3"));
    CHECK(v.prefix() == "v");
}

TEST_CASE("truncation certificates") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (int s = 1; s <= n; ++s)
                for (const IndexSubset& sub : enumerate_subsets(n, s)) {
                    TruncationCertificate c = truncation_certificate(lambda, sub);
                    REQUIRE(c.entries.size() == 2);
                    CHECK(c.entries[0].m == s + 1);
                    CHECK(c.entries[1].m == s + 2);
                    for (const auto& e : c.entries) {
                        CHECK(oracle::from_library(e.h) == h_oracle(n, sub.indices(), e.m, c.q));
                        Polynomial sum(n);
                        for (const auto& [d, coeff] : e.combination) {
                            CHECK(d >= lowest_relation_degree(s, c.q));
                            CHECK(d <= s);
                            sum += h_polynomial(sub, d, c.q) * Rational(coeff);
                        }
                        CHECK(sum == e.combined);
                        CHECK(e.combined == e.h);
                        if (c.q == 0) CHECK(e.h.is_zero());
                    }
                }
}

TEST_CASE("permutation action") {
    const int n = 3;
    Polynomial p = P("y1*y3", n, "y");
    CHECK(apply_permutation(p, {2, 1, 3}) == P("y2*y3", n, "y"));
    CHECK(apply_permutation(p, {1, 2, 3}) == p);
    IndexSubset all({1, 2, 3}, n);
    for (int k = 1; k <= 3; ++k)
        for (auto sigma : std::vector<std::vector<int>>{{2, 3, 1}, {3, 2, 1}, {1, 3, 2}})
            CHECK(apply_permutation(elementary_symmetric(all, k, n), sigma) == elementary_symmetric(all, k, n));
    CHECK_THROWS(apply_permutation(p, {1, 1, 2}));
    CHECK_THROWS(apply_permutation(p, {1, 2}));
}

TEST_CASE("full-subset generators lie in the ideal of e_k(u) - C(n,k)") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<Polynomial> flag;
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        IndexSubset all(idx, n);
        for (int k = 1; k <= n; ++k)
            flag.push_back(elementary_symmetric(all, k, n) - Polynomial::constant(n, Rational(binomial(n, k))));
        GroebnerBasis gb = buchberger(flag, MonomialOrder());
        for (const Partition& lambda : enumerate_partitions(n))
            for (const auto& g : k_tanisaki_generators(lambda, Convention::u).generators)
                if (g.subset.size() == n) {
                    CHECK(g.q == n);
                    CHECK(normal_form(g.poly, gb).is_zero());
                }
    }
}

TEST_CASE("names and parsing of flavors and conventions") {
    CHECK(parse_flavor("ktheory") == Flavor::ktheory);
    CHECK(parse_convention("v") == Convention::v);
    CHECK_THROWS(parse_flavor("homology"));
    CHECK_THROWS(parse_convention("w"));
    CHECK(lowest_relation_degree(3, 0) == 4);
    CHECK(lowest_relation_degree(3, 5) == 1);
    CHECK_THROWS(k_tanisaki_generators(Partition({2, 1}), Convention::y));
}

}
