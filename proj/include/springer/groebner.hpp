#pragma once

// Buchberger completion over Q with the Gebauer-Moeller criteria, normal
// forms, standard monomials and Hilbert functions of zero-dimensional ideals.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/ideals.hpp"
#include "springer/monomial.hpp"
#include "springer/polynomial.hpp"

namespace springer {

class InfiniteQuotient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

struct BuchbergerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
};

class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(int nvars, MonomialOrder order, std::vector<Polynomial> reduced_basis, std::string source_hash = {});

    int nvars() const noexcept { return nvars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    // Monic, auto-reduced, sorted by ascending leading monomial.
    const std::vector<Polynomial>& basis() const noexcept { return basis_; }
    const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
    const std::string& source_hash() const noexcept { return source_hash_; }
    const BuchbergerStats& stats() const noexcept { return stats_; }
    void set_stats(BuchbergerStats s) { stats_ = s; }

    bool is_unit_ideal() const noexcept;

private:
    int nvars_ = 0;
    MonomialOrder order_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> leading_;
    std::string source_hash_;
    BuchbergerStats stats_;
};

// Content hash of a generator list together with the order name.
std::string source_hash(const std::vector<Polynomial>& gens, const MonomialOrder& order, std::string_view prefix);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);
GroebnerBasis buchberger(const IdealPresentation& gens, const MonomialOrder& order);

// Full reduction. With an rng, each step picks a uniformly random applicable
// reducer instead of the first one; the result must not depend on the choice.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, std::mt19937_64* rng = nullptr);

// True iff every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);
// True iff no term of any element is divisible by another element's leading monomial.
bool is_auto_reduced(const GroebnerBasis& gb);

// Throws InfiniteQuotient if the quotient is not finite-dimensional or the
// staircase reaches past degree_cap.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree_cap);

// Number of standard monomials in each degree 0, 1, ..., top.
std::vector<long> hilbert_series(const GroebnerBasis& gb, int degree_cap);

// Degree-d dimension of S/I for a homogeneous presentation; throws
// std::invalid_argument on non-homogeneous generators.
long hilbert_function(const IdealPresentation& gens, int d, const MonomialOrder& order = MonomialOrder());

// Generous cap on the staircase scan: n * dim + n + 1.
int default_degree_cap(const Partition& lambda);

}  // namespace springer
