#include "springer/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace springer {

namespace {

using ColumnMap = std::unordered_map<Monomial, int, MonomialHash>;

// Monomials of degree lo..hi with column numbers laid out degree block by
// degree block, in ascending or descending degree.
struct Window {
    std::vector<std::vector<Monomial>> by_degree;  // index = degree
    ColumnMap column;
    std::vector<int> degree_of_column;
    int cols = 0;

    Window(int n, int hi, bool ascending) {
        for (int d = 0; d <= hi; ++d) by_degree.push_back(monomials_of_degree(n, d));
        for (int k = 0; k <= hi; ++k) {
            int d = ascending ? k : hi - k;
            for (const Monomial& m : by_degree[static_cast<std::size_t>(d)]) {
                column.emplace(m, cols++);
                degree_of_column.push_back(d);
            }
        }
    }
};

SparseVector row_of(const Polynomial& g, const Monomial& m, int max_degree, const ColumnMap& column) {
    SparseVector row;
    row.reserve(g.size());
    for (const Term& t : g.terms()) {
        if (t.monomial.degree() + m.degree() > max_degree) continue;
        row.emplace_back(column.at(t.monomial * m), t.coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

void require_homogeneous(const IdealPresentation& gens) {
    for (const auto& g : gens.generators)
        if (!g.poly.is_homogeneous()) throw std::invalid_argument("non-homogeneous generator " + g.poly.to_string(gens.prefix()));
}

long degree_rank(const IdealPresentation& gens, int d) {
    const int n = gens.n();
    if (d < 0) throw std::invalid_argument("negative degree");
    auto basis = monomials_of_degree(n, d);
    ColumnMap column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], static_cast<int>(i));
    SparseEchelon ech(static_cast<int>(basis.size()));
    std::vector<std::vector<Monomial>> multipliers(static_cast<std::size_t>(d) + 1);
    for (const auto& g : gens.generators) {
        const int e = g.poly.degree();
        if (e < 0 || e > d) continue;
        auto& ms = multipliers[static_cast<std::size_t>(d - e)];
        if (ms.empty()) ms = monomials_of_degree(n, d - e);
        for (const Monomial& m : ms) {
            ech.insert(row_of(g.poly, m, d, column));
            if (ech.full()) return ech.rank();
        }
    }
    return ech.rank();
}

}  // namespace

long monomial_count(int n, int d) {
    if (d < 0) return 0;
    return binomial(n + d - 1, d).to_int64();
}

long ideal_degree_rank(const IdealPresentation& gens, int d) {
    require_homogeneous(gens);
    return degree_rank(gens, d);
}

std::vector<long> quotient_dimensions(const IdealPresentation& gens, int max_degree) {
    require_homogeneous(gens);
    std::vector<long> out;
    for (int d = 0; d <= max_degree; ++d) out.push_back(monomial_count(gens.n(), d) - degree_rank(gens, d));
    return out;
}

FiltrationReport filtration_check(const Partition& lambda, int escalation_depth) {
    if (escalation_depth < 1) throw std::invalid_argument("escalation depth must be at least 1");
    const int n = lambda.n();
    const int top = springer_dimension(lambda);
    FiltrationReport rep;
    rep.lambda = lambda;
    rep.escalation_depth = escalation_depth;
    rep.window = top + escalation_depth - 1;
    rep.expected_rank = multinomial_rank(lambda);
    const int w = rep.window;

    const std::vector<Polynomial> gens = k_tanisaki_generators(lambda, Convention::v).polynomials();

    // Colengths of the ideal inside R / m^(k+1) for k <= w + 1. With
    // low-degree columns eliminated first, the pivots in degree <= k span the
    // projection to R / m^(k+1). Once two consecutive colengths agree,
    // Nakayama puts m^(k+1) inside the (m-primary) ideal, and they stay equal.
    std::vector<long> colength(static_cast<std::size_t>(w) + 2, 0);
    {
        Window win(n, w + 1, true);
        SparseEchelon ech(win.cols);
        for (int e = 0; e <= w + 1; ++e)
            for (const Polynomial& g : gens)
                if (e + g.order() <= w + 1)
                    for (const Monomial& m : win.by_degree[static_cast<std::size_t>(e)]) ech.insert(row_of(g, m, w + 1, win.column));
        std::vector<long> pivots(static_cast<std::size_t>(w) + 2, 0);
        for (int c : ech.pivot_columns()) ++pivots[static_cast<std::size_t>(win.degree_of_column[static_cast<std::size_t>(c)])];
        long acc = 0;
        for (int k = 0; k <= w + 1; ++k) {
            acc += monomial_count(n, k) - pivots[static_cast<std::size_t>(k)];
            colength[static_cast<std::size_t>(k)] = acc;
        }
    }
    rep.colength_window = colength[static_cast<std::size_t>(w)];
    rep.colength_next = colength[static_cast<std::size_t>(w) + 1];
    rep.certificate_stable = rep.colength_window == rep.colength_next;
    rep.certified_window = w;
    for (int k = w - 1; k >= 0 && colength[static_cast<std::size_t>(k)] == colength[static_cast<std::size_t>(k) + 1]; --k)
        rep.certified_window = k;
    const int cw = rep.certified_window;

    // With high-degree columns first, the pivots of degree <= d span the
    // ideal elements of degree <= d, so pivots in degree d count gr_d.
    std::vector<long> graded(static_cast<std::size_t>(cw) + 1, 0);
    {
        Window win(n, cw, false);
        SparseEchelon ech(win.cols);
        for (const Polynomial& g : gens)
            for (int e = 0; e + g.order() <= cw; ++e)
                for (const Monomial& m : win.by_degree[static_cast<std::size_t>(e)]) ech.insert(row_of(g, m, cw, win.column));
        for (int c : ech.pivot_columns()) ++graded[static_cast<std::size_t>(win.degree_of_column[static_cast<std::size_t>(c)])];
    }

    const IdealPresentation coh = tanisaki_generators(lambda);
    Integer quotient = 0;
    for (int d = 0; d <= top + 1; ++d) {
        FiltrationRow row;
        row.degree = d;
        row.ambient_dim = monomial_count(n, d);
        // Past the window the certificate puts all of R_d in the ideal.
        row.graded_dim = d <= cw ? graded[static_cast<std::size_t>(d)] : row.ambient_dim;
        row.ideal_dim = degree_rank(coh, d);
        quotient += Integer(row.ambient_dim - row.ideal_dim);
        if (!row.matches() && !rep.mismatch_degree) rep.mismatch_degree = d;
        rep.rows.push_back(row);
    }
    rep.quotient_rank = quotient;
    rep.pass = rep.certificate_stable && !rep.mismatch_degree && rep.quotient_rank == rep.expected_rank;
    return rep;
}

FreenessReport integral_freeness_check(const Partition& lambda) {
    const int n = lambda.n();
    const int top = springer_dimension(lambda);
    const IdealPresentation coh = tanisaki_generators(lambda);
    FreenessReport rep;
    rep.lambda = lambda;
    rep.pass = true;
    for (int d = 0; d <= top + 1; ++d) {
        auto basis = monomials_of_degree(n, d);
        ColumnMap column;
        for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], static_cast<int>(i));
        IntegerEchelon ech(static_cast<int>(basis.size()));
        bool saturated = false;
        for (const auto& g : coh.generators) {
            const int e = g.poly.degree();
            if (e > d || saturated) continue;
            for (const Monomial& m : monomials_of_degree(n, d - e)) {
                IntSparseVector row;
                for (const Term& t : g.poly.terms()) row.emplace_back(column.at(t.monomial * m), t.coeff.num());
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                ech.insert(std::move(row));
                if (ech.rank() == ech.cols() && ech.unit_pivots()) {
                    saturated = true;
                    break;
                }
            }
        }
        FreenessRow row;
        row.degree = d;
        row.columns = ech.cols();
        row.rank = ech.rank();
        for (Integer& f : ech.invariant_factors())
            if (!f.is_one()) row.nontrivial_factors.push_back(std::move(f));
        if (!row.nontrivial_factors.empty()) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ExactMatrix jordan_matrix(const Partition& lambda) {
    const int n = lambda.n();
    ExactMatrix j(n, n);
    int start = 0;
    for (int part : lambda.parts()) {
        for (int i = 0; i + 1 < part; ++i) j.at(start + i, start + i + 1) = 1;
        start += part;
    }
    return j;
}

RankLemmaReport verify_rank_lemma(const Partition& lambda) {
    const int n = lambda.n();
    const Partition eta = dual(lambda);
    const ExactMatrix j = jordan_matrix(lambda);
    RankLemmaReport rep;
    rep.lambda = lambda;
    rep.pass = true;
    // Walk s downward so each power is one multiplication away from the last.
    ExactMatrix power = ExactMatrix::identity(n);
    std::vector<RankLemmaRow> rows;
    for (int s = n; s >= 1; --s) {
        if (s < n) power = power * j;
        RankLemmaRow row{s, p_function(eta, s), rank_rational(power)};
        if (row.rank != row.p) rep.pass = false;
        rows.push_back(row);
    }
    std::reverse(rows.begin(), rows.end());
    rep.rows = std::move(rows);
    return rep;
}

}  // namespace springer
