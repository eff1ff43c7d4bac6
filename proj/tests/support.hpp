#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: polynomials are plain maps over mpq_class, binomials come from
// Pascal's triangle, ranks from textbook Gauss-Jordan elimination.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "springer/integer.hpp"
#include "springer/partition.hpp"
#include "springer/polynomial.hpp"

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, mpq_class>;

inline void add_term(Poly& p, const Exps& e, const mpq_class& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b) add_term(out, e, c);
    return out;
}

inline Poly scale(const Poly& a, const mpq_class& k) {
    Poly out;
    for (const auto& [e, c] : a) add_term(out, e, c * k);
    return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(out, e, ca * cb);
        }
    return out;
}

inline Poly constant(int n, const mpq_class& c) {
    Poly p;
    add_term(p, Exps(static_cast<std::size_t>(n), 0), c);
    return p;
}

// 1-based index
inline Poly var(int n, int i) {
    Exps e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return Poly{{e, 1}};
}

inline mpq_class to_mpq(const springer::Rational& r) {
    mpq_class q(r.num().to_mpz(), r.den().to_mpz());
    q.canonicalize();
    return q;
}

inline Poly from_library(const springer::Polynomial& p) {
    Poly out;
    for (const auto& t : p.terms()) {
        Exps e(static_cast<std::size_t>(p.nvars()));
        for (int i = 0; i < p.nvars(); ++i) e[static_cast<std::size_t>(i)] = t.monomial[i];
        add_term(out, e, to_mpq(t.coeff));
    }
    return out;
}

inline mpz_class pascal(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    std::vector<mpz_class> row{1};
    for (int r = 1; r <= a; ++r) {
        std::vector<mpz_class> next(static_cast<std::size_t>(r) + 1, 1);
        for (int k = 1; k < r; ++k) next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(k)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(b)];
}

inline mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// e_k over the variables listed (1-based), by enumerating k-subsets as bitmasks.
inline Poly elementary(int n, const std::vector<int>& vars, int k) {
    Poly out;
    const int s = static_cast<int>(vars.size());
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Exps e(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < s; ++j)
            if (mask & (1u << j)) e[static_cast<std::size_t>(vars[static_cast<std::size_t>(j)] - 1)] = 1;
        add_term(out, e, 1);
    }
    return out;
}

// Power series in t with polynomial coefficients, truncated at `len` terms.
using Series = std::vector<Poly>;

inline Series series_mul(const Series& a, const Series& b, std::size_t len) {
    Series out(len);
    for (std::size_t i = 0; i < std::min(len, a.size()); ++i)
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    return out;
}

// prod_{i in lines} (1 + u_i t) * (1 + t)^shift, as repeated series products.
inline Series lambda_t(int n, const std::vector<int>& lines, long shift, std::size_t len) {
    Series out(len);
    out[0] = constant(n, 1);
    for (int i : lines) out = series_mul(out, Series{constant(n, 1), var(n, i)}, len);
    Series step(len);
    if (shift >= 0) {
        step = {constant(n, 1), constant(n, 1)};
    } else {
        for (std::size_t k = 0; k < len; ++k) step[k] = constant(n, k % 2 ? -1 : 1);
    }
    for (long r = 0; r < (shift >= 0 ? shift : -shift); ++r) out = series_mul(out, step, len);
    out.resize(len);
    return out;
}

// gamma_t(x) = lambda_{t/(1-t)}(x): substitute the series t/(1-t) for t.
inline Series gamma_t(int n, const std::vector<int>& lines, long shift, std::size_t len) {
    Series lam = lambda_t(n, lines, shift, len);
    Series sub(len);
    for (std::size_t k = 1; k < len; ++k) sub[k] = constant(n, 1);
    Series power(len);
    power[0] = constant(n, 1);
    Series out(len);
    for (std::size_t k = 0; k < len; ++k) {
        for (std::size_t j = 0; j < len; ++j) out[j] = add(out[j], mul(lam[k], power[j]));
        power = series_mul(power, sub, len);
    }
    return out;
}

// x_i -> x_i + delta by expanding the substitution.
inline Poly shift(const Poly& p, int n, const mpq_class& delta) {
    Poly out;
    for (const auto& [e, c] : p) {
        Poly term = constant(n, c);
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < e[static_cast<std::size_t>(i)]; ++r) term = mul(term, add(var(n, i + 1), constant(n, delta)));
        out = add(out, term);
    }
    return out;
}

inline std::vector<Exps> monomials(int n, int d) {
    std::vector<Exps> out;
    Exps cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            cur[static_cast<std::size_t>(i)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(i)] = e;
            self(self, i + 1, left - e);
        }
    };
    if (n > 0) rec(rec, 0, d);
    return out;
}

// Gauss-Jordan over Q.
inline long rank(std::vector<std::vector<mpq_class>> rows) {
    long r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < static_cast<long>(rows.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(r);
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
        auto& pr = rows[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<std::size_t>(r) || rows[i][c] == 0) continue;
            mpq_class f = rows[i][c] / pr[c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * pr[k];
        }
        ++r;
    }
    return r;
}

// Degree-d dimension of Q[y]/(e_d(y_S) : d >= s+1-q) computed by spanning.
inline long cohomology_quotient_dim(const springer::Partition& lambda, int d) {
    const int n = lambda.n();
    std::vector<int> parts = lambda.parts();
    std::vector<int> eta;
    for (int j = 1; j <= parts.front(); ++j) {
        int c = 0;
        for (int p : parts) c += p >= j;
        eta.push_back(c);
    }
    eta.resize(static_cast<std::size_t>(n), 0);
    auto basis = monomials(n, d);
    std::map<Exps, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) vars.push_back(i + 1);
        const int s = static_cast<int>(vars.size());
        int q = 0;
        for (int j = n - s; j < n; ++j) q += eta[static_cast<std::size_t>(j)];
        for (int e = std::max(1, s + 1 - q); e <= std::min(s, d); ++e) {
            Poly g = elementary(n, vars, e);
            for (const Exps& m : monomials(n, d - e)) {
                Poly prod = mul(g, Poly{{m, 1}});
                std::vector<mpq_class> row(basis.size(), 0);
                for (const auto& [ex, c] : prod) row[col.at(ex)] = c;
                rows.push_back(std::move(row));
            }
        }
    }
    return static_cast<long>(basis.size()) - rank(std::move(rows));
}

// Coefficients of prod_{i=1}^{n} (1 + t + ... + t^(i-1)).
inline std::vector<long> coinvariant_series(int n) {
    std::vector<long> out{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> next(out.size() + static_cast<std::size_t>(i) - 1, 0);
        for (std::size_t a = 0; a < out.size(); ++a)
            for (int b = 0; b < i; ++b) next[a + static_cast<std::size_t>(b)] += out[a];
        out = std::move(next);
    }
    return out;
}

// Number of partitions of n by the standard coin-change recurrence.
inline long partition_count(int n) {
    std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int t = part; t <= n; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - part)];
    return ways[static_cast<std::size_t>(n)];
}

inline std::vector<int> brute_dual(const std::vector<int>& parts) {
    std::vector<int> out;
    for (int j = 1;; ++j) {
        int c = 0;
        for (int p : parts) c += p >= j;
        if (c == 0) break;
        out.push_back(c);
    }
    return out;
}

inline int brute_p(const std::vector<int>& parts, int n, int s) {
    std::vector<int> padded = parts;
    padded.resize(static_cast<std::size_t>(n), 0);
    int sum = 0;
    for (int j = n - s; j < n; ++j) sum += padded[static_cast<std::size_t>(j)];
    return sum;
}

// Hand-rolled generators for the property suites.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    springer::Rational rational(int span = 5) {
        int num = uniform(-span, span);
        int den = uniform(1, 3);
        return springer::Rational(springer::Integer(num), springer::Integer(den));
    }

    springer::Polynomial polynomial(int n, int max_terms = 5, int max_deg = 3) {
        std::vector<springer::Term> terms;
        const int count = uniform(0, max_terms);
        for (int t = 0; t < count; ++t) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            int budget = uniform(0, max_deg);
            for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(0, n - 1))];
            terms.push_back({springer::Monomial(e), rational()});
        }
        return springer::Polynomial(n, std::move(terms));
    }

    springer::Partition partition(int n) {
        std::vector<int> parts;
        int left = n, cap = n;
        while (left > 0) {
            int p = uniform(1, std::min(left, cap));
            parts.push_back(p);
            left -= p;
            cap = p;
        }
        return springer::Partition(parts);
    }

    springer::IndexSubset subset(int n) {
        std::vector<int> idx;
        while (idx.empty())
            for (int i = 1; i <= n; ++i)
                if (uniform(0, 1)) idx.push_back(i);
        return springer::IndexSubset(idx, n);
    }

    std::vector<int> lines(int n, int max_count) {
        std::vector<int> out;
        const int count = uniform(0, max_count);
        for (int k = 0; k < count; ++k) out.push_back(uniform(1, n));
        return out;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> sigma(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        return sigma;
    }
};

}  // namespace oracle
