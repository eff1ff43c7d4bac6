#pragma once

// Versioned JSON documents for presentations, and an on-disk Groebner basis
// cache keyed by (partition, flavor, convention, order) and validated by
// content hashes.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "springer/groebner.hpp"
#include "springer/ideals.hpp"

namespace springer {

inline constexpr int kPresentationSchemaVersion = 1;
inline constexpr int kCacheSchemaVersion = 1;

nlohmann::json partition_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdealPresentation& p);
// Throws std::invalid_argument on a malformed or inconsistent document.
IdealPresentation presentation_from_json(const nlohmann::json& j);

// Hash of the canonical basis text, stored next to the basis.
std::string basis_hash(const GroebnerBasis& gb, std::string_view prefix);

enum class CacheOutcome { disabled, hit, miss, stale };
std::string to_string(CacheOutcome o);

class GroebnerCache {
public:
    explicit GroebnerCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path entry_path(const IdealPresentation& gens, const MonomialOrder& order) const;

    // nullopt with outcome miss (no file) or stale (unreadable, wrong hash).
    std::optional<GroebnerBasis> load(const IdealPresentation& gens, const MonomialOrder& order, CacheOutcome& outcome) const;
    // Writes to a temporary file and renames it into place.
    void store(const IdealPresentation& gens, const GroebnerBasis& gb) const;

private:
    std::filesystem::path dir_;
};

// buchberger() behind an optional cache; outcome reports what happened.
GroebnerBasis cached_buchberger(const IdealPresentation& gens, const MonomialOrder& order, const GroebnerCache* cache,
                                CacheOutcome* outcome = nullptr);

}  // namespace springer
