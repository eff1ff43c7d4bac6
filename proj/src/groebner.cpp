#include "springer/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace springer {

namespace {

using OPoly = std::vector<Term>;

struct Ordering {
    const MonomialOrder& order;
    int nvars;
    int cmp(const Monomial& a, const Monomial& b) const noexcept { return order.compare(a, b, nvars); }
};

OPoly to_ordered(const Polynomial& p, const Ordering& ord) {
    OPoly terms = p.terms();
    if (ord.order.kind() != OrderKind::degrevlex || !ord.order.priority().empty())
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return ord.cmp(a.monomial, b.monomial) > 0; });
    return terms;
}

void make_monic(OPoly& p) {
    if (p.empty() || p.front().coeff.is_one()) return;
    Rational inv = p.front().coeff.inverse();
    for (Term& t : p) t.coeff *= inv;
}

// a[ai..] - c * m * b[bi..], all inputs sorted descending.
OPoly sub_scaled(const OPoly& a, std::size_t ai, const Rational& c, const Monomial& m, const OPoly& b, std::size_t bi,
                 const Ordering& ord) {
    OPoly out;
    out.reserve((a.size() - ai) + (b.size() - bi));
    while (ai < a.size() && bi < b.size()) {
        Monomial bm = b[bi].monomial * m;
        int k = ord.cmp(a[ai].monomial, bm);
        if (k > 0) {
            out.push_back(a[ai++]);
        } else if (k < 0) {
            out.push_back({bm, -(c * b[bi].coeff)});
            ++bi;
        } else {
            Rational v = a[ai].coeff - c * b[bi].coeff;
            if (!v.is_zero()) out.push_back({bm, std::move(v)});
            ++ai;
            ++bi;
        }
    }
    for (; ai < a.size(); ++ai) out.push_back(a[ai]);
    for (; bi < b.size(); ++bi) out.push_back({b[bi].monomial * m, -(c * b[bi].coeff)});
    return out;
}

struct Reducer {
    const OPoly* poly;
    Monomial lm;
    uint32_t mask;
};

// Full reduction of f by monic reducers.
OPoly reduce_full(OPoly f, const std::vector<Reducer>& reducers, const Ordering& ord, std::mt19937_64* rng) {
    OPoly rem;
    std::size_t i = 0;
    std::vector<std::size_t> candidates;
    while (i < f.size()) {
        const Term& lt = f[i];
        const uint32_t mask = lt.monomial.support();
        const Reducer* chosen = nullptr;
        if (rng) {
            candidates.clear();
            for (std::size_t r = 0; r < reducers.size(); ++r)
                if ((reducers[r].mask & ~mask) == 0 && reducers[r].lm.divides(lt.monomial)) candidates.push_back(r);
            if (!candidates.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
                chosen = &reducers[candidates[pick(*rng)]];
            }
        } else {
            for (const Reducer& r : reducers)
                if ((r.mask & ~mask) == 0 && r.lm.divides(lt.monomial)) {
                    chosen = &r;
                    break;
                }
        }
        if (!chosen) {
            rem.push_back(lt);
            ++i;
            continue;
        }
        Rational c = lt.coeff;
        Monomial m = lt.monomial / chosen->lm;
        f = sub_scaled(f, i + 1, c, m, *chosen->poly, 1, ord);
        i = 0;
    }
    return rem;
}

Polynomial to_canonical(int nvars, OPoly terms) { return Polynomial(nvars, std::move(terms)); }

struct Pair {
    int i, j;
    Monomial lcm;
};

class Completion {
public:
    Completion(int nvars, const MonomialOrder& order) : ord_{order, nvars}, nvars_(nvars) {}

    void add_input(std::vector<OPoly> inputs) {
        std::sort(inputs.begin(), inputs.end(),
                  [&](const OPoly& a, const OPoly& b) { return ord_.cmp(a.front().monomial, b.front().monomial) < 0; });
        for (OPoly& p : inputs) {
            OPoly r = reduce_full(std::move(p), active_reducers(), ord_, nullptr);
            if (r.empty()) continue;
            make_monic(r);
            update(std::move(r));
        }
    }

    void run() {
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (pair_less(pairs_[k], pairs_[best])) best = k;
            Pair p = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            ++stats_.pairs_reduced;
            OPoly s = spoly(p);
            OPoly r = reduce_full(std::move(s), active_reducers(), ord_, nullptr);
            if (r.empty()) {
                ++stats_.zero_reductions;
                continue;
            }
            make_monic(r);
            update(std::move(r));
        }
    }

    std::vector<Polynomial> reduced_basis() {
        std::vector<std::size_t> act;
        for (std::size_t k = 0; k < elems_.size(); ++k)
            if (elems_[k].active) act.push_back(k);
        std::sort(act.begin(), act.end(),
                  [&](std::size_t a, std::size_t b) { return ord_.cmp(elems_[a].lm, elems_[b].lm) < 0; });
        std::vector<OPoly> out;
        for (std::size_t k : act) {
            std::vector<Reducer> others;
            for (std::size_t o : act)
                if (o != k) others.push_back({&elems_[o].poly, elems_[o].lm, elems_[o].mask});
            const OPoly& g = elems_[k].poly;
            OPoly tail(g.begin() + 1, g.end());
            OPoly reduced = reduce_full(std::move(tail), others, ord_, nullptr);
            OPoly full;
            full.reserve(reduced.size() + 1);
            full.push_back(g.front());
            full.insert(full.end(), reduced.begin(), reduced.end());
            out.push_back(std::move(full));
        }
        // Write the reduced polynomials back only after all tails are done so
        // every tail was reduced against the same leading-term set.
        std::vector<Polynomial> result;
        for (OPoly& p : out) result.push_back(to_canonical(nvars_, std::move(p)));
        return result;
    }

    const BuchbergerStats& stats() const { return stats_; }

private:
    struct Elem {
        OPoly poly;
        Monomial lm;
        uint32_t mask;
        bool active;
    };

    std::vector<Reducer> active_reducers() const {
        std::vector<Reducer> rs;
        for (const Elem& e : elems_)
            if (e.active) rs.push_back({&e.poly, e.lm, e.mask});
        return rs;
    }

    bool pair_less(const Pair& a, const Pair& b) const {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = ord_.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    }

    OPoly spoly(const Pair& p) const {
        const Elem& a = elems_[static_cast<std::size_t>(p.i)];
        const Elem& b = elems_[static_cast<std::size_t>(p.j)];
        Monomial ma = p.lcm / a.lm, mb = p.lcm / b.lm;
        OPoly left;
        left.reserve(a.poly.size());
        for (std::size_t k = 1; k < a.poly.size(); ++k) left.push_back({a.poly[k].monomial * ma, a.poly[k].coeff});
        return sub_scaled(left, 0, Rational(1), mb, b.poly, 1, ord_);
    }

    // Gebauer-Moeller installation of a new basis element.
    void update(OPoly h) {
        ++stats_.pairs_considered;
        const int hi = static_cast<int>(elems_.size());
        Monomial hlm = h.front().monomial;
        elems_.push_back({std::move(h), hlm, hlm.support(), true});

        std::vector<Pair> candidates;
        for (int g = 0; g < hi; ++g)
            if (elems_[static_cast<std::size_t>(g)].active)
                candidates.push_back({g, hi, Monomial::lcm(elems_[static_cast<std::size_t>(g)].lm, hlm)});

        // Chain criterion among the new pairs.
        std::vector<Pair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const Pair& c = candidates[k];
            bool disjoint = Monomial::coprime(elems_[static_cast<std::size_t>(c.i)].lm, hlm);
            bool dominated = false;
            if (!disjoint) {
                for (std::size_t l = k + 1; l < candidates.size() && !dominated; ++l)
                    dominated = candidates[l].lcm.divides(c.lcm);
                for (std::size_t l = 0; l < kept.size() && !dominated; ++l) dominated = kept[l].lcm.divides(c.lcm);
            }
            if (disjoint || !dominated) kept.push_back(c);
        }
        // Product criterion.
        std::vector<Pair> fresh;
        for (const Pair& c : kept)
            if (!Monomial::coprime(elems_[static_cast<std::size_t>(c.i)].lm, hlm)) fresh.push_back(c);

        // Drop old pairs made redundant by h.
        std::vector<Pair> survivors;
        for (const Pair& p : pairs_) {
            bool drop = hlm.divides(p.lcm) &&
                        !(Monomial::lcm(elems_[static_cast<std::size_t>(p.i)].lm, hlm) == p.lcm) &&
                        !(Monomial::lcm(elems_[static_cast<std::size_t>(p.j)].lm, hlm) == p.lcm);
            if (!drop) survivors.push_back(p);
        }
        survivors.insert(survivors.end(), fresh.begin(), fresh.end());
        pairs_ = std::move(survivors);

        for (int g = 0; g < hi; ++g) {
            Elem& e = elems_[static_cast<std::size_t>(g)];
            if (e.active && hlm.divides(e.lm)) e.active = false;
        }
    }

    Ordering ord_;
    int nvars_;
    std::vector<Elem> elems_;
    std::vector<Pair> pairs_;
    BuchbergerStats stats_;
};

}  // namespace

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
    const Monomial* best = &p.terms().front().monomial;
    for (const Term& t : p.terms())
        if (order.compare(t.monomial, *best, p.nvars()) > 0) best = &t.monomial;
    return *best;
}

GroebnerBasis::GroebnerBasis(int nvars, MonomialOrder order, std::vector<Polynomial> reduced_basis, std::string source_hash)
    : nvars_(nvars), order_(std::move(order)), source_hash_(std::move(source_hash)) {
    std::vector<std::pair<Monomial, Polynomial>> keyed;
    for (Polynomial& p : reduced_basis) {
        if (p.is_zero()) continue;
        if (p.nvars() != nvars_) throw std::invalid_argument("basis element has the wrong variable count");
        keyed.emplace_back(leading_monomial(p, order_), std::move(p));
    }
    std::sort(keyed.begin(), keyed.end(),
              [&](const auto& a, const auto& b) { return order_.compare(a.first, b.first, nvars_) < 0; });
    for (auto& [m, p] : keyed) {
        Rational lc = p.coefficient(m);
        if (!lc.is_one()) p *= lc.inverse();
        leading_.push_back(m);
        basis_.push_back(std::move(p));
    }
}

bool GroebnerBasis::is_unit_ideal() const noexcept {
    return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
}

std::string source_hash(const std::vector<Polynomial>& gens, const MonomialOrder& order, std::string_view prefix) {
    std::string blob = order.name();
    for (const Polynomial& g : gens) {
        blob += '\n';
        blob += g.to_string(prefix);
    }
    return hex64(fnv1a64(blob));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    const int nvars = gens.front().nvars();
    Ordering ord{order, nvars};
    std::vector<OPoly> inputs;
    for (const Polynomial& g : gens) {
        if (g.nvars() != nvars) throw std::invalid_argument("buchberger: generators live in different rings");
        if (g.is_zero()) continue;
        OPoly p = to_ordered(g, ord);
        make_monic(p);
        inputs.push_back(std::move(p));
    }
    Completion c(nvars, order);
    if (!inputs.empty()) {
        c.add_input(std::move(inputs));
        c.run();
    }
    GroebnerBasis gb(nvars, order, c.reduced_basis(), source_hash(gens, order, "x"));
    gb.set_stats(c.stats());
    return gb;
}

GroebnerBasis buchberger(const IdealPresentation& gens, const MonomialOrder& order) {
    std::vector<Polynomial> polys = gens.polynomials();
    if (polys.empty()) throw std::invalid_argument("buchberger: empty generator list");
    GroebnerBasis gb = buchberger(polys, order);
    return GroebnerBasis(gb.nvars(), order, gb.basis(), source_hash(polys, order, gens.prefix()));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, std::mt19937_64* rng) {
    if (p.nvars() != gb.nvars()) throw std::invalid_argument("normal_form: variable-count mismatch");
    Ordering ord{gb.order(), gb.nvars()};
    std::vector<OPoly> ordered;
    ordered.reserve(gb.basis().size());
    for (const Polynomial& g : gb.basis()) ordered.push_back(to_ordered(g, ord));
    std::vector<Reducer> reducers;
    for (std::size_t k = 0; k < ordered.size(); ++k)
        reducers.push_back({&ordered[k], gb.leading_monomials()[k], gb.leading_monomials()[k].support()});
    return to_canonical(p.nvars(), reduce_full(to_ordered(p, ord), reducers, ord, rng));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& basis = gb.basis();
    const auto& lms = gb.leading_monomials();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Monomial l = Monomial::lcm(lms[i], lms[j]);
            Polynomial s = basis[i].mul_monomial(l / lms[i], Rational(1)) - basis[j].mul_monomial(l / lms[j], Rational(1));
            if (!normal_form(s, gb).is_zero()) return false;
        }
    return true;
}

bool is_auto_reduced(const GroebnerBasis& gb) {
    const auto& basis = gb.basis();
    const auto& lms = gb.leading_monomials();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const Term& t : basis[i].terms())
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j && t.monomial == lms[i]) continue;
                if (lms[j].divides(t.monomial)) return false;
            }
    return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree_cap) {
    const int n = gb.nvars();
    if (gb.is_unit_ideal()) return {};
    const auto& lms = gb.leading_monomials();
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const Monomial& m : lms)
            if (m.support() == (1u << i) && m.degree() <= degree_cap) found = true;
        if (!found)
            throw InfiniteQuotient("variable " + std::to_string(i + 1) +
                                   " has no pure-power leading term; quotient is not finite-dimensional");
    }
    auto standard = [&](const Monomial& m) {
        return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> all, level{Monomial()};
    int degree = 0;
    while (!level.empty()) {
        if (degree > degree_cap) throw InfiniteQuotient("staircase exceeds degree cap " + std::to_string(degree_cap));
        all.insert(all.end(), level.begin(), level.end());
        std::vector<Monomial> next;
        for (const Monomial& m : level) {
            int last = 0;
            for (int i = 0; i < n; ++i)
                if (m[i]) last = i;
            for (int i = last; i < n; ++i) {
                Monomial c = m * Monomial::variable(i);
                if (standard(c)) next.push_back(c);
            }
        }
        level = std::move(next);
        ++degree;
    }
    std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) { return canonical_compare(a, b, n) < 0; });
    return all;
}

std::vector<long> hilbert_series(const GroebnerBasis& gb, int degree_cap) {
    std::vector<long> series;
    for (const Monomial& m : standard_monomials(gb, degree_cap)) {
        if (static_cast<int>(series.size()) <= m.degree()) series.resize(static_cast<std::size_t>(m.degree()) + 1, 0);
        ++series[static_cast<std::size_t>(m.degree())];
    }
    return series;
}

long hilbert_function(const IdealPresentation& gens, int d, const MonomialOrder& order) {
    if (d < 0) throw std::invalid_argument("hilbert_function: negative degree");
    for (const auto& g : gens.generators)
        if (!g.poly.is_homogeneous()) throw std::invalid_argument("hilbert_function: non-homogeneous generator");
    GroebnerBasis gb = buchberger(gens, order);
    auto series = hilbert_series(gb, default_degree_cap(gens.lambda));
    return d < static_cast<int>(series.size()) ? series[static_cast<std::size_t>(d)] : 0;
}

int default_degree_cap(const Partition& lambda) { return lambda.n() * springer_dimension(lambda) + lambda.n() + 1; }

}  // namespace springer
