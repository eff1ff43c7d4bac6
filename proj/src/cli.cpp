#include "springer/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "springer/groebner.hpp"
#include "springer/serialize.hpp"

namespace springer {

using nlohmann::json;

namespace {

constexpr int kDefaultSweepBound = 7;
constexpr int kDefaultVerifyBound = 5;
constexpr int kDefaultRankLemmaBound = 12;

std::string monomial_text(const Monomial& m, int n, std::string_view prefix) {
    return Polynomial(n, {{m, Rational(1)}}).to_string(prefix);
}

std::vector<std::string> texts(const std::vector<Polynomial>& ps, std::string_view prefix) {
    std::vector<std::string> out;
    for (const Polynomial& p : ps) out.push_back(p.to_string(prefix));
    return out;
}

std::vector<Partition> targets(const RunConfig& cfg) {
    if (cfg.n) return enumerate_partitions(*cfg.n);
    return cfg.partitions;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto width = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(width, count); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// Lazily built presentations and bases for one partition.
class Context {
public:
    Context(const RunConfig& cfg, Partition lambda, const GroebnerCache* cache)
        : cfg_(cfg), lambda_(std::move(lambda)), cache_(cache) {}

    const Partition& lambda() const { return lambda_; }
    int cap() const { return cfg_.degree_cap.value_or(default_degree_cap(lambda_)); }

    const IdealPresentation& presentation(Flavor f) {
        auto& slot = f == Flavor::cohomology ? coh_ : kth_;
        if (!slot) slot = f == Flavor::cohomology ? tanisaki_generators(lambda_) : k_tanisaki_generators(lambda_, cfg_.convention);
        return *slot;
    }

    const GroebnerBasis& basis(Flavor f) {
        auto& slot = f == Flavor::cohomology ? gb_coh_ : gb_kth_;
        if (!slot) {
            CacheOutcome outcome = CacheOutcome::disabled;
            slot = cached_buchberger(presentation(f), cfg_.order, cache_, &outcome);
            if (cache_) notes.push_back("cache " + to_string(outcome) + ": " + lambda_.to_string() + " " + to_string(f));
        }
        return *slot;
    }

    std::vector<std::string> notes;

private:
    const RunConfig& cfg_;
    Partition lambda_;
    const GroebnerCache* cache_;
    std::optional<IdealPresentation> coh_, kth_;
    std::optional<GroebnerBasis> gb_coh_, gb_kth_;
};

std::unique_ptr<GroebnerCache> open_cache(const RunConfig& cfg) {
    if (cfg.cache_dir.empty()) return nullptr;
    return std::make_unique<GroebnerCache>(cfg.cache_dir);
}

std::vector<Flavor> flavors(const RunConfig& cfg) {
    if (cfg.flavor == "cohomology") return {Flavor::cohomology};
    if (cfg.flavor == "ktheory") return {Flavor::ktheory};
    return {Flavor::cohomology, Flavor::ktheory};
}

json generators_json(const IdealPresentation& p) {
    json out = json::array();
    for (const auto& g : p.generators)
        out.push_back({{"subset", g.subset.indices()}, {"d", g.d}, {"q", g.q}, {"poly", g.poly.to_string(p.prefix())}});
    return out;
}

std::vector<long> degree_counts(const std::vector<Monomial>& sm) {
    std::vector<long> counts;
    for (const Monomial& m : sm) {
        if (static_cast<int>(counts.size()) <= m.degree()) counts.resize(static_cast<std::size_t>(m.degree()) + 1, 0);
        ++counts[static_cast<std::size_t>(m.degree())];
    }
    return counts;
}

json flavor_presentation(Context& ctx, Flavor f, bool full) {
    const IdealPresentation& p = ctx.presentation(f);
    const GroebnerBasis& gb = ctx.basis(f);
    const auto sm = standard_monomials(gb, ctx.cap());
    const auto counts = degree_counts(sm);
    const Integer expected = multinomial_rank(ctx.lambda());
    const bool rank_ok = Integer(static_cast<long>(sm.size())) == expected;
    const int top = counts.empty() ? -1 : static_cast<int>(counts.size()) - 1;
    json j = {{"flavor", to_string(f)},
              {"convention", to_string(p.convention)},
              {"generator_count", p.generators.size()},
              {"basis_size", gb.basis().size()},
              {"rank", sm.size()},
              {"expected_rank", expected.to_string()},
              {"rank_matches", rank_ok},
              {"degree_counts", counts}};
    bool pass = rank_ok;
    if (f == Flavor::cohomology) {
        j["top_degree"] = top;
        j["top_degree_matches"] = top == springer_dimension(ctx.lambda());
        pass = pass && top == springer_dimension(ctx.lambda());
    }
    j["pass"] = pass;
    if (full) {
        j["generators"] = generators_json(p);
        j["basis"] = texts(gb.basis(), p.prefix());
        std::vector<std::string> mono;
        for (const Monomial& m : sm) mono.push_back(monomial_text(m, p.n(), p.prefix()));
        j["standard_monomials"] = mono;
        if (f == Flavor::cohomology) j["hilbert_series"] = counts;
    }
    return j;
}

struct SuiteOutcome {
    bool pass = true;
    long checks = 0;
    json counterexample = nullptr;
    json detail = json::object();
};

json suite_json(const std::string& name, const SuiteOutcome& o) {
    json j = {{"suite", name}, {"pass", o.pass}, {"checks", o.checks}, {"counterexample", o.counterexample}};
    for (auto it = o.detail.begin(); it != o.detail.end(); ++it) j[it.key()] = it.value();
    return j;
}

SuiteOutcome suite_rank_lemma(Context& ctx) {
    SuiteOutcome o;
    RankLemmaReport r = verify_rank_lemma(ctx.lambda());
    o.pass = r.pass;
    o.checks = static_cast<long>(r.rows.size());
    for (const auto& row : r.rows)
        if (row.rank != row.p && o.counterexample.is_null())
            o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"s", row.s}, {"p", row.p}, {"rank", row.rank}};
    o.detail["rows"] = report_json(r)["rows"];
    return o;
}

SuiteOutcome suite_presentation(Context& ctx) {
    SuiteOutcome o;
    json flav = json::array();
    for (Flavor f : {Flavor::cohomology, Flavor::ktheory}) {
        json j = flavor_presentation(ctx, f, false);
        ++o.checks;
        if (!j["pass"].get<bool>()) {
            o.pass = false;
            if (o.counterexample.is_null())
                o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"flavor", to_string(f)},
                                    {"rank", j["rank"]}, {"expected_rank", j["expected_rank"]}};
        }
        flav.push_back(std::move(j));
    }
    o.detail["flavors"] = std::move(flav);
    return o;
}

SuiteOutcome suite_gamma(Context& ctx, Convention convention) {
    SuiteOutcome o;
    const GroebnerBasis& gb = ctx.basis(Flavor::ktheory);
    RelationReport g = verify_gamma_relations(ctx.lambda(), gb, convention);
    RelationReport l = equivalent_lambda_relations(ctx.lambda(), gb, convention);
    bool agree = g.rows.size() == l.rows.size();
    for (std::size_t i = 0; agree && i < g.rows.size(); ++i) agree = g.rows[i].vanishes() == l.rows[i].vanishes();
    o.pass = g.pass && l.pass && agree;
    o.checks = static_cast<long>(g.rows.size() + l.rows.size());
    const RelationRow* bad = g.first_failure() ? g.first_failure() : l.first_failure();
    if (bad)
        o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"subset", bad->subset.indices()}, {"d", bad->d},
                            {"relation", g.first_failure() ? "gamma" : "lambda"}};
    else if (!agree)
        o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"relation", "verdicts disagree"}};
    o.detail["forms_agree"] = agree;
    o.detail["gamma_rows"] = report_json(g, "u")["rows"];
    o.detail["lambda_rows"] = report_json(l, "u")["rows"];
    return o;
}

SuiteOutcome suite_filtration(Context& ctx, int depth) {
    SuiteOutcome o;
    FiltrationReport r = filtration_check(ctx.lambda(), depth);
    o.pass = r.pass;
    o.checks = static_cast<long>(r.rows.size()) + 1;
    o.detail["report"] = report_json(r);
    if (!r.pass) {
        json ce = {{"partition", partition_json(ctx.lambda())}};
        if (r.mismatch_degree) ce["degree"] = *r.mismatch_degree;
        if (!r.certificate_stable) ce["certificate"] = "unstable";
        o.counterexample = ce;
        FiltrationReport deeper = filtration_check(ctx.lambda(), depth + 1);
        if (deeper.pass)
            o.detail["finding"] = "fails at escalation depth " + std::to_string(depth) + " but passes at depth " +
                                  std::to_string(depth + 1) + "; recorded as a finding, not a pass";
    }
    return o;
}

SuiteOutcome suite_freeness(Context& ctx) {
    SuiteOutcome o;
    FreenessReport r = integral_freeness_check(ctx.lambda());
    o.pass = r.pass;
    o.checks = static_cast<long>(r.rows.size());
    for (const auto& row : r.rows)
        if (!row.nontrivial_factors.empty() && o.counterexample.is_null()) {
            std::vector<std::string> f;
            for (const auto& x : row.nontrivial_factors) f.push_back(x.to_string());
            o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"degree", row.degree}, {"factors", f}};
        }
    o.detail["rows"] = report_json(r)["rows"];
    return o;
}

SuiteOutcome suite_stability(Context& ctx) {
    SuiteOutcome o;
    const int n = ctx.lambda().n();
    for (Flavor f : {Flavor::cohomology, Flavor::ktheory}) {
        const IdealPresentation& p = ctx.presentation(f);
        const GroebnerBasis& gb = ctx.basis(f);
        std::set<std::string> members;
        for (const auto& g : p.generators) members.insert(g.poly.to_string());
        for (const auto& g : p.generators)
            for (int i = 1; i < n; ++i) {
                std::vector<int> sigma(static_cast<std::size_t>(n));
                std::iota(sigma.begin(), sigma.end(), 1);
                std::swap(sigma[static_cast<std::size_t>(i - 1)], sigma[static_cast<std::size_t>(i)]);
                Polynomial moved = apply_permutation(g.poly, sigma);
                ++o.checks;
                bool ok = members.count(moved.to_string()) && normal_form(moved, gb).is_zero();
                if (!ok && o.pass) {
                    o.pass = false;
                    o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"flavor", to_string(f)},
                                        {"subset", g.subset.indices()}, {"d", g.d}, {"transposition", {i, i + 1}}};
                }
            }
    }
    return o;
}

SuiteOutcome suite_truncation(Context& ctx, Convention convention) {
    SuiteOutcome o;
    const int n = ctx.lambda().n();
    const GroebnerBasis& gb = ctx.basis(Flavor::ktheory);
    for (int s = 1; s <= n; ++s)
        for (const IndexSubset& subset : enumerate_subsets(n, s)) {
            TruncationCertificate cert = truncation_certificate(ctx.lambda(), subset);
            for (const auto& e : cert.entries) {
                ++o.checks;
                Polynomial local = convention == Convention::v ? e.h.shift_variables(Rational(1)) : e.h;
                bool ok = e.combined == e.h && normal_form(local, gb).is_zero();
                if (!ok && o.pass) {
                    o.pass = false;
                    o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"subset", subset.indices()}, {"m", e.m}};
                }
            }
        }
    return o;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

std::string join_ints(const json& arr, char sep = ',') {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += sep;
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

json envelope(const RunConfig& cfg) {
    return {{"schema_version", kReportSchemaVersion}, {"command", cfg.command}, {"config", cfg.to_json()}};
}

}  // namespace

json RunConfig::to_json() const {
    json j = {{"flavor", flavor},
              {"convention", springer::to_string(convention)},
              {"order", order.name()},
              {"degree_cap", degree_cap ? json(*degree_cap) : json(nullptr)},
              {"escalation_depth", escalation_depth},
              {"format", format},
              {"jobs", jobs}};
    std::vector<std::string> parts;
    for (const Partition& p : partitions) parts.push_back(p.to_string());
    j["partitions"] = parts;
    j["n"] = n ? json(*n) : json(nullptr);
    if (command == "verify") j["suites"] = suites;
    if (command == "gamma") {
        j["subset"] = subset;
        j["d"] = d;
    }
    if (command == "sweep") j["timings"] = timings;
    return j;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s = {"rank-lemma", "presentation", "gamma", "filtration",
                                               "freeness", "stability", "truncation"};
    return s;
}

void validate(RunConfig& cfg) {
    static const std::set<std::string> formats = {"json", "csv", "text"};
    static const std::set<std::string> flav = {"cohomology", "ktheory", "both"};
    if (!formats.count(cfg.format)) throw UsageError("--format must be json, csv or text");
    if (!flav.count(cfg.flavor)) throw UsageError("--flavor must be cohomology, ktheory or both");
    if (cfg.convention == Convention::y) throw UsageError("--convention must be u or v");
    if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (cfg.escalation_depth < 1) throw UsageError("--escalation-depth must be at least 1");
    if (cfg.degree_cap && *cfg.degree_cap < 0) throw UsageError("--degree-cap must be non-negative");

    const bool one_partition = cfg.command == "presentation" || cfg.command == "gamma";
    const bool needs_n = cfg.command == "sweep";
    if (cfg.n && !cfg.partitions.empty()) throw UsageError("give either --partition or --n, not both");
    if (needs_n && !cfg.n) throw UsageError("sweep requires --n");
    if (one_partition && cfg.partitions.size() != 1) throw UsageError(cfg.command + " requires exactly one --partition");
    if (!cfg.n && cfg.partitions.empty()) throw UsageError(cfg.command + " requires --partition or --n");
    if (cfg.n && *cfg.n < 1) throw UsageError("--n must be at least 1");

    if (cfg.command == "verify") {
        if (cfg.suites.empty() || (cfg.suites.size() == 1 && cfg.suites[0] == "all")) cfg.suites = verify_suites();
        for (const auto& s : cfg.suites)
            if (std::find(verify_suites().begin(), verify_suites().end(), s) == verify_suites().end())
                throw UsageError("unknown suite '" + s + "'");
        std::vector<std::string> ordered;
        for (const auto& s : verify_suites())
            if (std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end()) ordered.push_back(s);
        cfg.suites = ordered;
    }

    int bound = kMaxVariables;
    if (cfg.command == "sweep") bound = kDefaultSweepBound;
    if (cfg.command == "verify" && cfg.n) bound = kDefaultVerifyBound;
    if (cfg.command == "rank-lemma") bound = kDefaultRankLemmaBound;
    if (cfg.max_n) bound = *cfg.max_n;
    if (cfg.n && *cfg.n > bound)
        throw UsageError("--n " + std::to_string(*cfg.n) + " exceeds the bound " + std::to_string(bound) + " (raise it with --max-n)");

    const bool polynomial_free = cfg.command == "rank-lemma" ||
                                 (cfg.command == "verify" && cfg.suites == std::vector<std::string>{"rank-lemma"});
    for (const Partition& p : targets(cfg)) {
        if (!polynomial_free && p.n() > kMaxVariables)
            throw UsageError("partition " + p.to_string() + " needs " + std::to_string(p.n()) + " variables; at most " +
                             std::to_string(kMaxVariables) + " are supported");
        if (!cfg.order.priority().empty() && static_cast<int>(cfg.order.priority().size()) != p.n())
            throw UsageError("--order priority lists " + std::to_string(cfg.order.priority().size()) +
                             " variables but partition " + p.to_string() + " has " + std::to_string(p.n()));
    }
    if (!cfg.order.priority().empty()) {
        std::vector<int> sorted = cfg.order.priority();
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i)) throw UsageError("--order priority is not a permutation");
    }
    if (cfg.command == "gamma") {
        if (cfg.d < 0) throw UsageError("--d must be non-negative");
        try {
            IndexSubset(cfg.subset, cfg.partitions.front().n());
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--subset: ") + e.what());
        }
        if (cfg.subset.empty()) throw UsageError("--subset must not be empty");
    }
}

json partition_header(const Partition& lambda) {
    const Partition eta = dual(lambda);
    std::vector<int> table;
    for (int s = 1; s <= lambda.n(); ++s) table.push_back(p_function(eta, s));
    return {{"partition", partition_json(lambda)},
            {"n", lambda.n()},
            {"dual", partition_json(eta)},
            {"p_table", table},
            {"rank", multinomial_rank(lambda).to_string()},
            {"dimension", springer_dimension(lambda)}};
}

json report_json(const FiltrationReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"degree", row.degree},
                        {"graded_dim", row.graded_dim},
                        {"ideal_dim", row.ideal_dim},
                        {"ambient_dim", row.ambient_dim},
                        {"match", row.matches()}});
    return {{"escalation_depth", r.escalation_depth},
            {"window", r.window},
            {"certified_window", r.certified_window},
            {"colength_window", r.colength_window},
            {"colength_next", r.colength_next},
            {"certificate_stable", r.certificate_stable},
            {"rows", rows},
            {"quotient_rank", r.quotient_rank.to_string()},
            {"expected_rank", r.expected_rank.to_string()},
            {"mismatch_degree", r.mismatch_degree ? json(*r.mismatch_degree) : json(nullptr)},
            {"pass", r.pass}};
}

json report_json(const FreenessReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        std::vector<std::string> f;
        for (const auto& x : row.nontrivial_factors) f.push_back(x.to_string());
        rows.push_back({{"degree", row.degree}, {"columns", row.columns}, {"rank", row.rank}, {"nontrivial_factors", f}});
    }
    return {{"rows", rows}, {"pass", r.pass}};
}

json report_json(const RankLemmaReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back({{"s", row.s}, {"p", row.p}, {"rank", row.rank}, {"match", row.rank == row.p}});
    return {{"rows", rows}, {"pass", r.pass}};
}

json report_json(const RelationReport& r, std::string_view prefix) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"subset", row.subset.indices()},
                        {"d", row.d},
                        {"q", row.q},
                        {"element", row.element.to_string(prefix)},
                        {"vanishes", row.vanishes()}});
    return {{"rows", rows}, {"pass", r.pass}};
}

std::string filtration_csv(const FiltrationReport& r) {
    std::string out = csv_line({"degree", "graded_dim", "ideal_dim", "ambient_dim", "match"});
    for (const auto& row : r.rows)
        out += csv_line({std::to_string(row.degree), std::to_string(row.graded_dim), std::to_string(row.ideal_dim),
                         std::to_string(row.ambient_dim), row.matches() ? "true" : "false"});
    return out;
}

namespace {

CommandResult finish(const RunConfig& cfg, json results) {
    CommandResult res;
    res.report = envelope(cfg);
    bool pass = true;
    for (const auto& r : results) pass = pass && r.at("pass").get<bool>();
    res.report["results"] = std::move(results);
    res.report["pass"] = pass;
    res.pass = pass;
    return res;
}

// Every per-partition job returns its entry plus cache notes.
struct Entry {
    json body;
    std::vector<std::string> notes;
};

json collect(const std::vector<Entry>& entries, std::vector<std::string>* notes) {
    json out = json::array();
    for (const Entry& e : entries) {
        out.push_back(e.body);
        if (notes) notes->insert(notes->end(), e.notes.begin(), e.notes.end());
    }
    return out;
}

thread_local std::vector<std::string>* g_notes = nullptr;

}  // namespace

CommandResult cmd_presentation(const RunConfig& cfg) {
    auto cache = open_cache(cfg);
    Context ctx(cfg, cfg.partitions.front(), cache.get());
    json entry = partition_header(ctx.lambda());
    json flav = json::array();
    bool pass = true;
    try {
        for (Flavor f : flavors(cfg)) {
            json j = flavor_presentation(ctx, f, true);
            pass = pass && j["pass"].get<bool>();
            flav.push_back(std::move(j));
        }
    } catch (const InfiniteQuotient& e) {
        pass = false;
        entry["error"] = std::string("infinite quotient: ") + e.what();
    }
    entry["flavors"] = std::move(flav);
    entry["pass"] = pass;
    if (g_notes) g_notes->insert(g_notes->end(), ctx.notes.begin(), ctx.notes.end());
    return finish(cfg, json::array({entry}));
}

CommandResult cmd_verify(const RunConfig& cfg) {
    auto cache = open_cache(cfg);
    const auto parts = targets(cfg);
    auto entries = parallel_map<Entry>(parts.size(), cfg.jobs, [&](std::size_t i) {
        Context ctx(cfg, parts[i], cache.get());
        json entry = partition_header(ctx.lambda());
        json suites = json::array();
        bool pass = true;
        for (const auto& name : cfg.suites) {
            SuiteOutcome o;
            try {
                if (name == "rank-lemma") o = suite_rank_lemma(ctx);
                else if (name == "presentation") o = suite_presentation(ctx);
                else if (name == "gamma") o = suite_gamma(ctx, cfg.convention);
                else if (name == "filtration") o = suite_filtration(ctx, cfg.escalation_depth);
                else if (name == "freeness") o = suite_freeness(ctx);
                else if (name == "stability") o = suite_stability(ctx);
                else if (name == "truncation") o = suite_truncation(ctx, cfg.convention);
            } catch (const InfiniteQuotient& e) {
                o.pass = false;
                o.counterexample = {{"partition", partition_json(ctx.lambda())}, {"error", e.what()}};
            }
            pass = pass && o.pass;
            suites.push_back(suite_json(name, o));
        }
        entry["suites"] = std::move(suites);
        entry["pass"] = pass;
        return Entry{std::move(entry), std::move(ctx.notes)};
    });
    return finish(cfg, collect(entries, g_notes));
}

CommandResult cmd_sweep(const RunConfig& cfg) {
    auto cache = open_cache(cfg);
    const auto parts = targets(cfg);
    auto entries = parallel_map<Entry>(parts.size(), cfg.jobs, [&](std::size_t i) {
        Context ctx(cfg, parts[i], cache.get());
        json entry = partition_header(ctx.lambda());
        json flav = json::array();
        bool pass = true;
        for (Flavor f : flavors(cfg)) {
            auto t0 = std::chrono::steady_clock::now();
            json j;
            try {
                json full = flavor_presentation(ctx, f, false);
                j = {{"flavor", full["flavor"]},
                     {"convention", full["convention"]},
                     {"generator_count", full["generator_count"]},
                     {"basis_size", full["basis_size"]},
                     {"standard_monomials", full["rank"]},
                     {"rank_matches", full["rank_matches"]},
                     {"pass", full["pass"]}};
            } catch (const InfiniteQuotient& e) {
                j = {{"flavor", to_string(f)}, {"error", e.what()}, {"pass", false}};
            }
            if (cfg.timings)
                j["time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            pass = pass && j["pass"].get<bool>();
            flav.push_back(std::move(j));
        }
        entry["flavors"] = std::move(flav);
        entry["pass"] = pass;
        return Entry{std::move(entry), std::move(ctx.notes)};
    });
    return finish(cfg, collect(entries, g_notes));
}

CommandResult cmd_gamma(const RunConfig& cfg) {
    auto cache = open_cache(cfg);
    Context ctx(cfg, cfg.partitions.front(), cache.get());
    const int n = ctx.lambda().n();
    IndexSubset subset(cfg.subset, n);
    const int s = subset.size();
    const int q = p_function(dual(ctx.lambda()), s);
    Polynomial element = gamma_op(VirtualClass::of_subset(subset, -s), cfg.d);
    const GroebnerBasis& gb = ctx.basis(Flavor::ktheory);
    Polynomial local = cfg.convention == Convention::v ? element.shift_variables(Rational(1)) : element;
    Polynomial nf = normal_form(local, gb);
    const bool expected = cfg.d >= s + 1 - q;
    const bool member = nf.is_zero();
    json entry = partition_header(ctx.lambda());
    entry["subset"] = subset.indices();
    entry["s"] = s;
    entry["q"] = q;
    entry["d"] = cfg.d;
    entry["class"] = VirtualClass::of_subset(subset, -s).to_string();
    entry["polynomial"] = element.to_string("u");
    entry["normal_form"] = nf.to_string(to_string(cfg.convention));
    entry["in_ideal"] = member;
    entry["expected_in_ideal"] = expected;
    entry["pass"] = !expected || member;
    if (g_notes) g_notes->insert(g_notes->end(), ctx.notes.begin(), ctx.notes.end());
    return finish(cfg, json::array({entry}));
}

CommandResult cmd_rank_lemma(const RunConfig& cfg) {
    const auto parts = targets(cfg);
    auto entries = parallel_map<Entry>(parts.size(), cfg.jobs, [&](std::size_t i) {
        json entry = partition_header(parts[i]);
        json r = report_json(verify_rank_lemma(parts[i]));
        entry["rows"] = r["rows"];
        entry["pass"] = r["pass"];
        return Entry{std::move(entry), {}};
    });
    return finish(cfg, collect(entries, nullptr));
}

std::string render(const RunConfig& cfg, const json& report) {
    if (cfg.format == "json") return report.dump(2) + "\n";
    const json& results = report.at("results");
    std::ostringstream out;
    const bool csv = cfg.format == "csv";
    auto verdict = [](const json& j) { return j.at("pass").get<bool>() ? "PASS" : "FAIL"; };
    auto part = [](const json& e) { return join_ints(e.at("partition")); };

    if (cfg.command == "presentation") {
        if (csv) out << csv_line({"flavor", "kind", "subset", "d", "q", "text"});
        for (const auto& e : results) {
            if (!csv)
                out << "partition " << part(e) << " (n=" << e["n"] << ", dual " << join_ints(e["dual"]) << ", p "
                    << join_ints(e["p_table"]) << ")\n";
            if (e.contains("error") && !csv) out << "error: " << scalar(e["error"]) << "\n";
            for (const auto& f : e["flavors"]) {
                const std::string fl = scalar(f["flavor"]);
                if (csv) {
                    for (const auto& g : f["generators"])
                        out << csv_line({fl, "generator", join_ints(g["subset"]), scalar(g["d"]), scalar(g["q"]), scalar(g["poly"])});
                    for (const auto& b : f["basis"]) out << csv_line({fl, "basis", "", "", "", scalar(b)});
                    for (const auto& m : f["standard_monomials"]) out << csv_line({fl, "standard", "", "", "", scalar(m)});
                    continue;
                }
                out << "[" << fl << ", " << scalar(f["convention"]) << "] " << f["generator_count"] << " generators, basis of "
                    << f["basis_size"] << ", rank " << f["rank"] << " (expected " << scalar(f["expected_rank"]) << ") "
                    << verdict(f) << "\n";
                out << "  generators:\n";
                for (const auto& g : f["generators"])
                    out << "    (" << join_ints(g["subset"]) << ") d=" << g["d"] << " q=" << g["q"] << ": " << scalar(g["poly"]) << "\n";
                out << "  basis:\n";
                for (const auto& b : f["basis"]) out << "    " << scalar(b) << "\n";
                out << "  standard monomials: " << join_ints(f["standard_monomials"], ' ') << "\n";
                if (f.contains("hilbert_series")) out << "  hilbert series: " << join_ints(f["hilbert_series"], ' ') << "\n";
            }
        }
    } else if (cfg.command == "verify") {
        if (csv) out << csv_line({"partition", "suite", "pass", "checks", "counterexample"});
        for (const auto& e : results) {
            for (const auto& s : e["suites"]) {
                std::string ce = s["counterexample"].is_null() ? "" : s["counterexample"].dump();
                if (csv) out << csv_line({part(e), scalar(s["suite"]), s["pass"].get<bool>() ? "true" : "false", scalar(s["checks"]), ce});
                else {
                    out << part(e) << "  " << scalar(s["suite"]) << ": " << verdict(s) << " (" << s["checks"] << " checks)";
                    if (!ce.empty()) out << " counterexample " << ce;
                    if (s.contains("finding")) out << " finding: " << scalar(s["finding"]);
                    out << "\n";
                }
            }
        }
    } else if (cfg.command == "sweep") {
        if (csv) out << csv_line({"partition", "rank", "dimension", "flavor", "gb_size", "standard_monomials", "rank_ok", "time_ms"});
        for (const auto& e : results)
            for (const auto& f : e["flavors"]) {
                std::string gb = f.contains("basis_size") ? scalar(f["basis_size"]) : "";
                std::string sm = f.contains("standard_monomials") ? scalar(f["standard_monomials"]) : "";
                std::string ok = f.contains("rank_matches") ? (f["rank_matches"].get<bool>() ? "true" : "false") : "false";
                std::string ms = f.contains("time_ms") ? scalar(f["time_ms"]) : "";
                if (csv) out << csv_line({part(e), scalar(e["rank"]), scalar(e["dimension"]), scalar(f["flavor"]), gb, sm, ok, ms});
                else {
                    out << part(e) << "  rank " << scalar(e["rank"]) << "  dim " << e["dimension"] << "  " << scalar(f["flavor"])
                        << ": basis " << gb << ", standard monomials " << sm << " " << verdict(f);
                    if (!ms.empty()) out << " (" << ms << " ms)";
                    out << "\n";
                }
            }
    } else if (cfg.command == "gamma") {
        if (csv) out << csv_line({"partition", "subset", "d", "q", "polynomial", "normal_form", "in_ideal", "expected_in_ideal"});
        for (const auto& e : results) {
            if (csv)
                out << csv_line({part(e), join_ints(e["subset"]), scalar(e["d"]), scalar(e["q"]), scalar(e["polynomial"]),
                                 scalar(e["normal_form"]), e["in_ideal"].get<bool>() ? "true" : "false",
                                 e["expected_in_ideal"].get<bool>() ? "true" : "false"});
            else
                out << "gamma^" << e["d"] << "(" << scalar(e["class"]) << ") = " << scalar(e["polynomial"]) << "\n"
                    << "normal form: " << scalar(e["normal_form"]) << "\n"
                    << "in ideal: " << (e["in_ideal"].get<bool>() ? "yes" : "no") << " (relation expected: "
                    << (e["expected_in_ideal"].get<bool>() ? "yes" : "no") << ") " << verdict(e) << "\n";
        }
    } else if (cfg.command == "rank-lemma") {
        if (csv) out << csv_line({"partition", "s", "p", "rank", "match"});
        for (const auto& e : results) {
            if (!csv) out << part(e) << ": " << verdict(e) << "\n";
            for (const auto& r : e["rows"]) {
                if (csv) out << csv_line({part(e), scalar(r["s"]), scalar(r["p"]), scalar(r["rank"]), r["match"].get<bool>() ? "true" : "false"});
                else out << "  s=" << r["s"] << " p=" << r["p"] << " rank=" << r["rank"] << "\n";
            }
        }
    }
    if (!csv) out << "overall: " << verdict(report) << "\n";
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Presentations and verification suites for Springer variety cohomology and K-theory rings", "springer"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<std::string> partition_texts, suite_texts;
    std::string order_text = "degrevlex", convention_text = "v", subset_text;
    constexpr int unset = std::numeric_limits<int>::min();
    int n = unset, degree_cap = unset, max_n = unset;
    bool no_timings = false;

    auto add_partition = [&](CLI::App* sub) {
        sub->add_option("--partition,-p", partition_texts, "Partition as comma-separated parts, e.g. 5,4,4,2,2,2,1");
    };
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Use every partition of n"); };
    auto add_format = [&](CLI::App* sub) { sub->add_option("--format", cfg.format, "json | csv | text")->capture_default_str(); };
    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--convention", convention_text, "Variables of the K-theoretic ideal: u or v")->capture_default_str();
        sub->add_option("--order", order_text, "degrevlex | deglex | lex, optionally :p1,p2,... for variable priority")
            ->capture_default_str();
        sub->add_option("--cache-dir", cfg.cache_dir, "Directory for cached Groebner bases");
    };
    auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs,-j", cfg.jobs, "Partitions processed in parallel")->capture_default_str(); };
    auto add_max_n = [&](CLI::App* sub) { sub->add_option("--max-n", max_n, "Override the bound on --n"); };

    auto* presentation = app.add_subcommand("presentation", "Generators, Groebner basis, standard monomials and rank");
    add_partition(presentation);
    presentation->add_option("--flavor", cfg.flavor, "cohomology | ktheory | both")->capture_default_str();
    add_algebra(presentation);
    presentation->add_option("--degree-cap", degree_cap, "Cap on the staircase scan");
    add_format(presentation);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_partition(verify);
    add_n(verify);
    verify->add_option("--suite", suite_texts, "Suites to run (default all)")->delimiter(',');
    add_algebra(verify);
    verify->add_option("--degree-cap", degree_cap, "Cap on the staircase scan");
    verify->add_option("--escalation-depth", cfg.escalation_depth, "Filtration check truncation depth")->capture_default_str();
    add_format(verify);
    add_jobs(verify);
    add_max_n(verify);

    auto* sweep = app.add_subcommand("sweep", "Rank, dimension and basis size over all partitions of n");
    add_n(sweep);
    sweep->add_option("--flavor", cfg.flavor, "cohomology | ktheory | both")->capture_default_str();
    add_algebra(sweep);
    sweep->add_option("--degree-cap", degree_cap, "Cap on the staircase scan");
    add_format(sweep);
    add_jobs(sweep);
    add_max_n(sweep);
    sweep->add_flag("--no-timings", no_timings, "Omit timings so output is byte-stable");

    auto* gamma = app.add_subcommand("gamma", "gamma^d of a sum of line classes minus s, and its normal form");
    add_partition(gamma);
    gamma->add_option("--subset", subset_text, "Index subset, e.g. 1,2")->required();
    gamma->add_option("--d", cfg.d, "Degree of the gamma operation")->required();
    add_algebra(gamma);
    add_format(gamma);

    auto* rank = app.add_subcommand("rank-lemma", "Ranks of powers of the Jordan matrix against the p-function");
    add_partition(rank);
    add_n(rank);
    add_format(rank);
    add_jobs(rank);
    add_max_n(rank);

    std::vector<std::string> argv_store = args;
    std::reverse(argv_store.begin(), argv_store.end());
    try {
        app.parse(argv_store);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::pass);
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return static_cast<int>(ExitCode::pass);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }

    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    try {
        for (const auto& t : partition_texts) {
            try {
                Partition p = Partition::parse(t);
                if (p.n() == 0) throw std::invalid_argument("the empty partition is not accepted");
                cfg.partitions.push_back(p);
            } catch (const std::invalid_argument& e) {
                throw UsageError("--partition '" + t + "': " + e.what());
            }
        }
        if (n != unset) cfg.n = n;
        if (degree_cap != unset) cfg.degree_cap = degree_cap;
        if (max_n != unset) {
            if (max_n < 1) throw UsageError("--max-n must be at least 1");
            cfg.max_n = max_n;
        }
        cfg.timings = !no_timings;
        cfg.suites = suite_texts;
        try {
            cfg.convention = parse_convention(convention_text);
            cfg.order = MonomialOrder::parse(order_text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--order: ") + e.what());
        }
        // An identity priority is normalised away by the order, so check the text.
        if (auto colon = order_text.find(':'); colon != std::string::npos) {
            const auto listed = static_cast<int>(std::count(order_text.begin() + static_cast<long>(colon), order_text.end(), ',')) + 1;
            for (const Partition& p : cfg.partitions)
                if (listed != p.n())
                    throw UsageError("--order priority lists " + std::to_string(listed) + " variables but partition " +
                                     p.to_string() + " has " + std::to_string(p.n()));
            if (cfg.n && listed != *cfg.n)
                throw UsageError("--order priority lists " + std::to_string(listed) + " variables but --n is " + std::to_string(*cfg.n));
        }
        if (cfg.command == "gamma") {
            std::stringstream ss(subset_text);
            std::string field;
            while (std::getline(ss, field, ',')) {
                try {
                    std::size_t used = 0;
                    cfg.subset.push_back(std::stoi(field, &used));
                    if (used != field.size()) throw std::invalid_argument(field);
                } catch (const std::exception&) {
                    throw UsageError("--subset: '" + field + "' is not an integer");
                }
            }
        }
        validate(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }

    std::vector<std::string> notes;
    g_notes = &notes;
    CommandResult res;
    try {
        if (cfg.command == "presentation") res = cmd_presentation(cfg);
        else if (cfg.command == "verify") res = cmd_verify(cfg);
        else if (cfg.command == "sweep") res = cmd_sweep(cfg);
        else if (cfg.command == "gamma") res = cmd_gamma(cfg);
        else res = cmd_rank_lemma(cfg);
    } catch (const std::exception& e) {
        g_notes = nullptr;
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::failure);
    }
    g_notes = nullptr;
    for (const auto& note : notes) err << note << "\n";
    out << render(cfg, res.report);
    return static_cast<int>(res.pass ? ExitCode::pass : ExitCode::failure);
}

}  // namespace springer
