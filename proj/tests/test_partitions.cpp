#include <doctest.h>

#include <stdexcept>

#include "springer/partition.hpp"
#include "support.hpp"

using namespace springer;

TEST_SUITE("partitions") {

TEST_CASE("dual of the worked example") {
    CHECK(dual(Partition({5, 4, 4, 2, 2, 2, 1})) == Partition({7, 6, 3, 3, 1}));
    CHECK(dual(Partition({2, 1})) == Partition({2, 1}));
    for (int n = 1; n <= 8; ++n) CHECK(dual(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == Partition({n}));
}

TEST_CASE("dual agrees with counting and is an involution up to n = 10") {
    for (int n = 1; n <= 10; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(dual(p).parts() == oracle::brute_dual(p.parts()));
            CHECK(dual(dual(p)) == p);
        }
}

TEST_CASE("p-function table of the worked example") {
    const Partition eta = dual(Partition({5, 4, 4, 2, 2, 2, 1}));
    REQUIRE(eta.n() == 20);
    for (int s = 1; s <= 15; ++s) CHECK(p_function(eta, s) == 0);
    const int expected[] = {1, 4, 7, 13, 20};
    for (int s = 16; s <= 20; ++s) CHECK(p_function(eta, s) == expected[s - 16]);
}

TEST_CASE("p-function: padding, monotonicity and telescoping") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(p_function(p, n) == n);
            for (int s = 1; s <= n; ++s) {
                CHECK(p_function(p, s) == oracle::brute_p(p.parts(), n, s));
                if (s > 1) {
                    CHECK(p_function(p, s) >= p_function(p, s - 1));
                    CHECK(p_function(p, s) - p_function(p, s - 1) == p.part(n - s + 1));
                }
            }
        }
    CHECK_THROWS_AS(p_function(Partition({2, 1}), 0), std::out_of_range);
    CHECK_THROWS_AS(p_function(Partition({2, 1}), 4), std::out_of_range);
}

TEST_CASE("multinomial rank") {
    CHECK(multinomial_rank(Partition({4})) == Integer(1));
    CHECK(multinomial_rank(Partition({2, 1})) == Integer(3));
    CHECK(multinomial_rank(Partition({1, 1, 1})) == Integer(6));
    for (int n = 1; n <= 9; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            mpz_class prod = multinomial_rank(p).to_mpz();
            for (int part : p.parts()) prod *= oracle::factorial(part);
            CHECK(prod == oracle::factorial(n));
        }
    // 20! / (5! 4! 4! 2! 2! 2! 1!) needs more than 64 bits of intermediate room
    mpz_class big = oracle::factorial(20) / (oracle::factorial(5) * oracle::factorial(4) * oracle::factorial(4) * 8);
    CHECK(multinomial_rank(Partition({5, 4, 4, 2, 2, 2, 1})).to_mpz() == big);
}

TEST_CASE("springer dimension") {
    CHECK(springer_dimension(Partition({5})) == 0);
    CHECK(springer_dimension(Partition({1, 1, 1})) == 3);
    CHECK(springer_dimension(Partition({2, 1})) == 1);
    for (int n = 1; n <= 10; ++n) CHECK(springer_dimension(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == n * (n - 1) / 2);
}

TEST_CASE("subset enumeration") {
    std::vector<std::string> seen;
    for (const IndexSubset& s : enumerate_subsets(3, 2)) seen.push_back(s.to_string());
    CHECK(seen == std::vector<std::string>{"(1,2)", "(1,3)", "(2,3)"});
    long count = 0;
    for (const IndexSubset& s : enumerate_subsets(6, 3)) {
        (void)s;
        ++count;
    }
    CHECK(count == 20);
    for (int n = 1; n <= 7; ++n)
        for (int s = 1; s <= n; ++s) {
            long c = 0;
            IndexSubset prev;
            for (const IndexSubset& x : enumerate_subsets(n, s)) {
                CHECK(x.size() == s);
                if (c) CHECK(prev < x);
                prev = x;
                ++c;
            }
            CHECK(mpz_class(c) == oracle::pascal(n, s));
        }
    CHECK_THROWS_AS(enumerate_subsets(3, 0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_subsets(3, 4), std::out_of_range);
    CHECK_THROWS_AS(IndexSubset({2, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(IndexSubset({1, 4}, 3), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
    auto three = enumerate_partitions(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == Partition({3}));
    CHECK(three[1] == Partition({2, 1}));
    CHECK(three[2] == Partition({1, 1, 1}));
    for (int n = 1; n <= 12; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(static_cast<long>(all.size()) == oracle::partition_count(n));
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts() > all[i].parts());
    }
    CHECK(enumerate_partitions(7).size() == 15);
}

TEST_CASE("parsing and diagnostics") {
    CHECK(Partition::parse("5,4,4,2,2,2,1") == Partition({5, 4, 4, 2, 2, 2, 1}));
    CHECK(Partition::parse("2,1").to_string() == "2,1");
    auto message = [](const char* text) {
        try {
            Partition::parse(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("2,3").find("position 2") != std::string::npos);
    CHECK(message("3,2,x").find("position 3") != std::string::npos);
    CHECK(message("3,0,1").find("2") != std::string::npos);
    CHECK_FALSE(message("").empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
}

}
