#pragma once

// Verification by plain linear algebra, independent of Groebner bases.

#include <optional>
#include <vector>

#include "springer/ideals.hpp"
#include "springer/linalg.hpp"
#include "springer/partition.hpp"

namespace springer {

// Number of monomials of degree d in n variables.
long monomial_count(int n, int d);

// Dimension of the degree-d part of the ideal spanned by the homogeneous
// generators. Throws std::invalid_argument on a non-homogeneous generator.
long ideal_degree_rank(const IdealPresentation& gens, int d);

// dim S_d - ideal_degree_rank(gens, d) for d = 0..max_degree.
std::vector<long> quotient_dimensions(const IdealPresentation& gens, int max_degree);

struct FiltrationRow {
    int degree = 0;
    long graded_dim = 0;   // dim gr_d of the K-theoretic ideal (v-convention)
    long ideal_dim = 0;    // dim of I_lambda in degree d
    long ambient_dim = 0;  // dim S_d
    bool matches() const noexcept { return graded_dim == ideal_dim; }
};

// The K-theoretic ideal is m-primary in the v-convention, so it is read off
// inside the truncation R / m^(window+1). The window is springer_dimension +
// escalation_depth - 1, and the truncation is certified sound when the
// colength does not change between window and window + 1. Degrees past the
// certified window lie entirely in the ideal.
struct FiltrationReport {
    Partition lambda;
    int escalation_depth = 0;
    int window = 0;
    long colength_window = 0;
    long colength_next = 0;
    bool certificate_stable = false;
    int certified_window = 0;  // least k <= window with m^(k+1) inside the ideal
    std::vector<FiltrationRow> rows;  // degrees 0 .. springer_dimension + 1
    Integer quotient_rank;            // sum of (ambient_dim - ideal_dim)
    Integer expected_rank;            // multinomial_rank(lambda)
    std::optional<int> mismatch_degree;
    bool pass = false;
};

FiltrationReport filtration_check(const Partition& lambda, int escalation_depth = 2);

struct FreenessRow {
    int degree = 0;
    long columns = 0;
    long rank = 0;
    std::vector<Integer> nontrivial_factors;  // invariant factors other than 1
};

struct FreenessReport {
    Partition lambda;
    std::vector<FreenessRow> rows;  // degrees 0 .. springer_dimension + 1
    bool pass = false;
};

// Integer span of {m * e_d(y_subset)} in each degree, checked for unit
// invariant factors.
FreenessReport integral_freeness_check(const Partition& lambda);

ExactMatrix jordan_matrix(const Partition& lambda);

struct RankLemmaRow {
    int s = 0;
    int p = 0;      // p_{dual}(s)
    long rank = 0;  // rank of J^(n-s)
};

struct RankLemmaReport {
    Partition lambda;
    std::vector<RankLemmaRow> rows;
    bool pass = false;
};

RankLemmaReport verify_rank_lemma(const Partition& lambda);

}  // namespace springer
