// Built-in fixture rings and seeded random module presentations.
#pragma once

#include <optional>

#include "modcx/module.hpp"

namespace modcx {

struct FixtureInfo {
    std::string name;
    std::string description;
    AlgebraSpec spec;
    std::optional<int> ci_codim;  // user-asserted, never inferred
    int expected_length = 0;      // cross-checked against the built algebra
    int expected_socle = 0;
};

// Tags recomputed from the built algebra (except "ci", which is asserted).
std::vector<std::string> fixture_tags(const ArtinAlgebra& r);

class FixtureCatalog {
  public:
    static const std::vector<FixtureInfo>& entries();
    static std::vector<std::string> names();
    static bool has(const std::string& name);
    // Builds the ring (at the requested prime), re-verifies the frozen
    // metadata and attaches the asserted complete intersection flag.
    static ArtinAlgebra load(const std::string& name, std::uint32_t prime = 101);
};

// Deterministic random presentation with entries drawn from the maximal
// ideal, so the presentation is automatically minimal (nu = gens).
ModulePresentation random_module(const ArtinAlgebra& r, std::uint64_t seed,
                                 int max_gens = 4, int max_rels = 6);

}  // namespace modcx
