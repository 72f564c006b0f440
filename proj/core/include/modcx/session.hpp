// Session configuration, the session JSON document, the resolution disk
// cache and report rendering. JSON handling stays inside the .cpp.
#pragma once

#include <optional>

#include "modcx/checks.hpp"

namespace modcx {

struct SessionConfig {
    std::uint32_t prime = 101;
    int steps = 20;
    std::uint64_t seed = 42;
    GrowthConfig growth;
    ResolutionLimits res_limits;
    HomologyLimits hom_limits;
    std::string cache_dir = ".modcx-cache";
    bool use_cache = true;
    std::string format = "text";  // text | json | csv
};

struct ModuleSpecText {
    std::string name;
    int gens = 0;
    std::vector<std::vector<std::string>> relations;  // rows of polynomial strings
};

// One experiment document: a ring plus named module presentations.
struct SessionDoc {
    AlgebraSpec spec;
    std::optional<std::string> catalog_name;  // set when loaded from the catalog
    std::optional<int> ci_codim;
    std::vector<ModuleSpecText> modules;
};

// `ring_arg` is a catalog name or a path to a session JSON file
// ({"field": p, "vars": [...], "relations": [...], "cap": n, "modules": {...}}).
SessionDoc load_session(const std::string& ring_arg, const SessionConfig& cfg);

ModulePresentation make_presentation(const ArtinAlgebra& r, const ModuleSpecText& text);

// --- resolution cache -------------------------------------------------------
std::string resolution_cache_key(const ArtinAlgebra& r, const std::string& module_uid,
                                 int steps);
std::optional<FreeResolution> cache_load_resolution(const std::string& dir,
                                                    const std::string& key,
                                                    const ArtinAlgebra& r);
void cache_store_resolution(const std::string& dir, const std::string& key,
                            const FreeResolution& res);

// --- rendering ---------------------------------------------------------------
std::string report_to_json(const CheckReport& report);
std::string report_to_text(const CheckReport& report);
std::string report_to_csv(const CheckReport& report);
// re-render a persisted JSON report
std::string render_report_file(const std::string& json_text, const std::string& format);

std::string table_to_json(const HomologyTable& t);
std::string table_to_text(const HomologyTable& t);
std::string table_to_csv(const HomologyTable& t);

std::string growth_to_json(const GrowthClass& g);
std::string growth_summary(const GrowthClass& g);

std::string resolve_to_json(const std::string& module_name,
                            const std::vector<long long>& betti, bool truncated,
                            const GrowthClass& cls);

std::string ring_info_text(const ArtinAlgebra& r, const std::string& label);
std::string ring_info_json(const ArtinAlgebra& r, const std::string& label);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace modcx
