#include "springer/serialize.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace springer {

using nlohmann::json;

json partition_json(const Partition& lambda) { return json(lambda.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array of parts");
    return Partition(j.get<std::vector<int>>());
}

json to_json(const IdealPresentation& p) {
    json gens = json::array();
    for (const auto& g : p.generators)
        gens.push_back({{"subset", g.subset.indices()}, {"d", g.d}, {"q", g.q}, {"poly", g.poly.to_string(p.prefix())}});
    return {{"schema_version", kPresentationSchemaVersion},
            {"partition", partition_json(p.lambda)},
            {"dual", partition_json(p.dual_partition)},
            {"flavor", to_string(p.flavor)},
            {"convention", to_string(p.convention)},
            {"variables", p.variable_names()},
            {"generators", std::move(gens)}};
}

IdealPresentation presentation_from_json(const json& j) {
    try {
        if (j.at("schema_version").get<int>() != kPresentationSchemaVersion)
            throw std::invalid_argument("unsupported presentation schema version");
        IdealPresentation p;
        p.lambda = partition_from_json(j.at("partition"));
        p.dual_partition = partition_from_json(j.at("dual"));
        if (!(p.dual_partition == dual(p.lambda))) throw std::invalid_argument("dual partition does not match partition");
        p.flavor = parse_flavor(j.at("flavor").get<std::string>());
        p.convention = parse_convention(j.at("convention").get<std::string>());
        if ((p.flavor == Flavor::cohomology) != (p.convention == Convention::y))
            throw std::invalid_argument("flavor and convention disagree");
        if (j.at("variables").get<std::vector<std::string>>() != p.variable_names())
            throw std::invalid_argument("variable list does not match partition size");
        const int n = p.n();
        for (const auto& g : j.at("generators")) {
            GeneratorRecord r;
            r.subset = IndexSubset(g.at("subset").get<std::vector<int>>(), n);
            r.d = g.at("d").get<int>();
            r.q = g.at("q").get<int>();
            r.flavor = p.flavor;
            const int s = r.subset.size();
            if (r.q != p_function(p.dual_partition, s)) throw std::invalid_argument("generator q does not match the partition");
            if (r.d < lowest_relation_degree(s, r.q) || r.d > s) throw std::invalid_argument("generator degree outside its range");
            r.poly = Polynomial::parse(g.at("poly").get<std::string>(), p.prefix(), n);
            p.generators.push_back(std::move(r));
        }
        return p;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed presentation document: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("malformed presentation document: ") + e.what());
    }
}

std::string basis_hash(const GroebnerBasis& gb, std::string_view prefix) {
    std::string blob = gb.order().name();
    for (const Polynomial& g : gb.basis()) {
        blob += '\n';
        blob += g.to_string(prefix);
    }
    return hex64(fnv1a64(blob));
}

std::string to_string(CacheOutcome o) {
    switch (o) {
        case CacheOutcome::disabled: return "disabled";
        case CacheOutcome::hit: return "hit";
        case CacheOutcome::miss: return "miss";
        case CacheOutcome::stale: return "stale";
    }
    return "?";
}

GroebnerCache::GroebnerCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path GroebnerCache::entry_path(const IdealPresentation& gens, const MonomialOrder& order) const {
    std::string part = gens.lambda.to_string();
    for (char& c : part)
        if (c == ',') c = '-';
    std::string ord = order.name();
    for (char& c : ord)
        if (c == ':' || c == ',') c = '_';
    return dir_ / ("gb_" + part + "_" + to_string(gens.flavor) + "_" + to_string(gens.convention) + "_" + ord + ".json");
}

std::optional<GroebnerBasis> GroebnerCache::load(const IdealPresentation& gens, const MonomialOrder& order,
                                                 CacheOutcome& outcome) const {
    const auto path = entry_path(gens, order);
    std::ifstream in(path);
    if (!in) {
        outcome = CacheOutcome::miss;
        return std::nullopt;
    }
    outcome = CacheOutcome::stale;
    try {
        json j = json::parse(in);
        const std::string expected = source_hash(gens.polynomials(), order, gens.prefix());
        if (j.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
        if (j.at("source_hash").get<std::string>() != expected) return std::nullopt;
        if (j.at("order").get<std::string>() != order.name()) return std::nullopt;
        std::vector<Polynomial> basis;
        for (const auto& t : j.at("basis")) basis.push_back(Polynomial::parse(t.get<std::string>(), gens.prefix(), gens.n()));
        GroebnerBasis gb(gens.n(), order, std::move(basis), expected);
        if (j.at("basis_hash").get<std::string>() != basis_hash(gb, gens.prefix())) return std::nullopt;
        outcome = CacheOutcome::hit;
        return gb;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void GroebnerCache::store(const IdealPresentation& gens, const GroebnerBasis& gb) const {
    json basis = json::array();
    for (const Polynomial& g : gb.basis()) basis.push_back(g.to_string(gens.prefix()));
    json j = {{"schema_version", kCacheSchemaVersion},
              {"partition", partition_json(gens.lambda)},
              {"flavor", to_string(gens.flavor)},
              {"convention", to_string(gens.convention)},
              {"order", gb.order().name()},
              {"source_hash", source_hash(gens.polynomials(), gb.order(), gens.prefix())},
              {"basis", std::move(basis)},
              {"basis_hash", basis_hash(gb, gens.prefix())}};
    static std::atomic<unsigned long> counter{0};
    const auto target = entry_path(gens, gb.order());
    std::ostringstream suffix;
    suffix << ".tmp." << std::this_thread::get_id() << "." << counter++;
    auto tmp = target;
    tmp += suffix.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump(1) << '\n';
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

GroebnerBasis cached_buchberger(const IdealPresentation& gens, const MonomialOrder& order, const GroebnerCache* cache,
                                CacheOutcome* outcome) {
    CacheOutcome local = CacheOutcome::disabled;
    if (cache) {
        if (auto gb = cache->load(gens, order, local)) {
            if (outcome) *outcome = local;
            return *gb;
        }
    }
    GroebnerBasis gb = buchberger(gens, order);
    if (cache) cache->store(gens, gb);
    if (outcome) *outcome = local;
    return gb;
}

}  // namespace springer
