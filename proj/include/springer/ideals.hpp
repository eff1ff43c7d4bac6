#pragma once

// Explicit generating sets for the cohomological Tanisaki ideal I_lambda in
// Z[y_1..y_n] and its K-theoretic counterpart in Z[u_1..u_n] (optionally
// rewritten in v_j = u_j - 1), with per-generator provenance.

#include <string>
#include <vector>

#include "springer/partition.hpp"
#include "springer/polynomial.hpp"

namespace springer {

enum class Flavor { cohomology, ktheory };
enum class Convention { y, u, v };

std::string to_string(Flavor f);
std::string to_string(Convention c);
Flavor parse_flavor(const std::string& text);
Convention parse_convention(const std::string& text);

struct GeneratorRecord {
    Polynomial poly;
    IndexSubset subset;
    int d = 0;
    int q = 0;  // p_{dual}(s) for s = |subset|
    Flavor flavor = Flavor::cohomology;
};

struct IdealPresentation {
    Partition lambda;
    Partition dual_partition;
    Flavor flavor = Flavor::cohomology;
    Convention convention = Convention::y;
    std::vector<GeneratorRecord> generators;

    int n() const noexcept { return lambda.n(); }
    std::string prefix() const { return to_string(convention); }
    std::vector<Polynomial> polynomials() const;
    std::vector<std::string> variable_names() const;
};

// Lowest admissible d for subsets of size s: max(1, s + 1 - q).
int lowest_relation_degree(int s, int q);

IdealPresentation tanisaki_generators(const Partition& lambda);

// sum_{k=0}^{d} (-1)^{d-k} e_k(u_subset) C(q+d-k-1, d-k): the t^d coefficient of
// prod_j (1 + u_{i_j} t) (1 + t)^{-q}.
Polynomial h_polynomial(const IndexSubset& subset, int d, int q);

IdealPresentation k_tanisaki_generators(const Partition& lambda, Convention convention = Convention::u);

// Expresses h_m (m = s+1, s+2) as an integer combination of the kept
// generators h_d, lowest_relation_degree(s,q) <= d <= s, via
// sum_{k=0}^{q} C(q,k) h_{m-k} = [t^m] prod (1 + u_i t) = 0 for m > s.
struct TruncationCertificate {
    struct Entry {
        int m = 0;
        Polynomial h;                        // h_m computed from its defining sum
        std::vector<std::pair<int, Integer>> combination;  // (d, coefficient)
        Polynomial combined;                 // sum of coefficient * h_d
    };
    IndexSubset subset;
    int q = 0;
    std::vector<Entry> entries;
};

TruncationCertificate truncation_certificate(const Partition& lambda, const IndexSubset& subset);

// sigma is given 1-based as sigma[j-1] = sigma(j); variable j maps to sigma(j).
Polynomial apply_permutation(const Polynomial& p, const std::vector<int>& sigma);

}  // namespace springer
