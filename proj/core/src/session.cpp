#include "modcx/session.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>  // vendored nlohmann/json

#include "modcx/sha256.hpp"

namespace modcx {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

SessionDoc load_session(const std::string& ring_arg, const SessionConfig& cfg) {
    SessionDoc doc;
    if (FixtureCatalog::has(ring_arg)) {
        for (const auto& e : FixtureCatalog::entries()) {
            if (e.name == ring_arg) {
                doc.spec = e.spec;
                doc.spec.prime = cfg.prime;
                doc.catalog_name = e.name;
                doc.ci_codim = e.ci_codim;
                return doc;
            }
        }
    }
    ordered_json j;
    try {
        j = ordered_json::parse(read_file(ring_arg));
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("session file " + ring_arg + ": " + e.what());
    }
    if (!j.is_object()) throw input_error("session file must hold a JSON object");
    doc.spec.prime = j.value("field", cfg.prime);
    if (!j.contains("vars") || !j["vars"].is_array())
        throw input_error("session file needs a \"vars\" array");
    for (const auto& v : j["vars"]) doc.spec.vars.push_back(v.get<std::string>());
    if (j.contains("relations"))
        for (const auto& rel : j["relations"])
            doc.spec.relations.push_back(rel.get<std::string>());
    doc.spec.cap = j.value("cap", 1);
    if (j.contains("ci_codim")) doc.ci_codim = j["ci_codim"].get<int>();
    if (j.contains("modules")) {
        if (!j["modules"].is_object())
            throw input_error("\"modules\" must map names to presentations");
        for (const auto& [name, mj] : j["modules"].items()) {
            ModuleSpecText mt;
            mt.name = name;
            mt.gens = mj.value("gens", 0);
            if (mj.contains("relations"))
                for (const auto& row : mj["relations"]) {
                    std::vector<std::string> r;
                    for (const auto& entry : row) r.push_back(entry.get<std::string>());
                    mt.relations.push_back(std::move(r));
                }
            doc.modules.push_back(std::move(mt));
        }
    }
    return doc;
}

ModulePresentation make_presentation(const ArtinAlgebra& r, const ModuleSpecText& text) {
    ModulePresentation p;
    p.name = text.name;
    p.gens = text.gens;
    for (const auto& row : text.relations) {
        if (static_cast<int>(row.size()) != text.gens)
            throw input_error("module '" + text.name + "': relation row has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(text.gens));
        std::vector<RingElement> rel;
        for (const auto& s : row) rel.push_back(parse_ring_element(r, s));
        p.relations.push_back(std::move(rel));
    }
    return p;
}

// --- resolution cache --------------------------------------------------------

std::string resolution_cache_key(const ArtinAlgebra& r, const std::string& module_uid,
                                 int steps) {
    ordered_json j;
    j["spec"] = r.spec().canonical();
    j["module"] = module_uid;
    j["steps"] = steps;
    j["p"] = r.field().modulus();
    return sha256_hex(j.dump());
}

namespace {

ordered_json rmatrix_to_json(const RMatrix& d) {
    ordered_json out;
    out["rows"] = d.rows;
    out["cols"] = d.cols;
    ordered_json entries = ordered_json::array();
    for (const RingElement& e : d.entries) entries.push_back(e.coeffs);
    out["entries"] = std::move(entries);
    return out;
}

RMatrix rmatrix_from_json(const ordered_json& j, const ArtinAlgebra& r) {
    RMatrix d(r, j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& entries = j.at("entries");
    if (entries.size() != d.entries.size())
        throw input_error("cached differential has wrong entry count");
    for (std::size_t i = 0; i < d.entries.size(); ++i)
        d.entries[i].coeffs = entries[i].get<Vec>();
    return d;
}

}  // namespace

void cache_store_resolution(const std::string& dir, const std::string& key,
                            const FreeResolution& res) {
    ordered_json j;
    j["schema"] = "modcx/1";
    j["module"] = res.module_uid;
    j["betti"] = res.betti;
    j["syzygy_dims"] = res.syzygy_dims;
    ordered_json diffs = ordered_json::array();
    for (const RMatrix& d : res.diffs) diffs.push_back(rmatrix_to_json(d));
    j["diffs"] = std::move(diffs);
    j["has_tail"] = res.has_tail;
    j["tail_start"] = res.tail_start;
    j["tail_dim"] = res.tail_dim;
    j["finite"] = res.finite;
    j["truncated"] = res.truncated;
    j["overflowed"] = res.overflowed;
    write_file(dir + "/" + key + ".json", j.dump(2) + "\n");
}

std::optional<FreeResolution> cache_load_resolution(const std::string& dir,
                                                    const std::string& key,
                                                    const ArtinAlgebra& r) {
    std::string path = dir + "/" + key + ".json";
    if (!std::filesystem::exists(path)) return std::nullopt;
    ordered_json j;
    try {
        j = ordered_json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error&) {
        return std::nullopt;  // corrupt cache entries are ignored, not fatal
    }
    if (j.value("schema", "") != "modcx/1") return std::nullopt;
    FreeResolution res;
    res.algebra = &r;
    res.module_uid = j.value("module", "");
    res.betti = j.at("betti").get<std::vector<long long>>();
    res.syzygy_dims = j.at("syzygy_dims").get<std::vector<int>>();
    for (const auto& dj : j.at("diffs")) res.diffs.push_back(rmatrix_from_json(dj, r));
    res.has_tail = j.value("has_tail", false);
    res.tail_start = j.value("tail_start", 0);
    res.tail_dim = j.value("tail_dim", 0ll);
    res.finite = j.value("finite", false);
    res.truncated = j.value("truncated", false);
    res.overflowed = j.value("overflowed", false);
    return res;
}

// --- rendering ---------------------------------------------------------------

namespace {

ordered_json verdict_to_json(const CheckVerdict& v) {
    ordered_json j;
    j["check"] = v.check_id;
    j["verdict"] = verdict_name(v.verdict);
    j["instance"] = v.instance;
    j["witness"] = v.witness;
    return j;
}

}  // namespace

std::string report_to_json(const CheckReport& report) {
    ordered_json j;
    j["schema"] = "modcx/1";
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["steps"] = report.steps;
    j["prime"] = report.prime;
    j["rings"] = report.rings;
    j["instances"] = report.instances;
    ordered_json checks = ordered_json::array();
    for (const auto& [id, c] : report.counts) {
        ordered_json cj;
        cj["id"] = id;
        cj["holds"] = c.holds;
        cj["violated"] = c.violated;
        cj["inconclusive"] = c.inconclusive;
        cj["not_applicable"] = c.not_applicable;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    ordered_json viols = ordered_json::array();
    for (const auto& v : report.violations) viols.push_back(verdict_to_json(v));
    j["violations"] = std::move(viols);
    ordered_json incs = ordered_json::array();
    for (const auto& v : report.inconclusives) incs.push_back(verdict_to_json(v));
    j["inconclusives"] = std::move(incs);
    j["total_violated"] = report.total_violated();
    return j.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " (seed " << report.seed << ", steps "
        << report.steps << ", GF(" << report.prime << "))\n";
    out << "rings:";
    for (const auto& r : report.rings) out << " " << r;
    out << "\nmodules examined: " << report.instances << "\n\n";
    out << "  check                    holds violated inconcl   n/a\n";
    for (const auto& [id, c] : report.counts) {
        out << "  " << id;
        for (std::size_t i = id.size(); i < 24; ++i) out << ' ';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%6d %8d %7d %5d", c.holds, c.violated,
                      c.inconclusive, c.not_applicable);
        out << buf << "\n";
    }
    out << "\n";
    if (report.violations.empty()) {
        out << "no violations\n";
    } else {
        out << report.violations.size() << " violation(s):\n";
        for (const auto& v : report.violations)
            out << "  [" << v.check_id << "] " << v.instance << ": " << v.witness << "\n";
    }
    return out.str();
}

std::string report_to_csv(const CheckReport& report) {
    std::ostringstream out;
    out << "check,holds,violated,inconclusive,not_applicable\n";
    for (const auto& [id, c] : report.counts)
        out << id << "," << c.holds << "," << c.violated << "," << c.inconclusive << ","
            << c.not_applicable << "\n";
    return out.str();
}

std::string render_report_file(const std::string& json_text, const std::string& format) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("report parse error: ") + e.what());
    }
    if (j.value("schema", "") != "modcx/1")
        throw input_error("unsupported report schema");
    if (format == "json") return j.dump(2) + "\n";
    CheckReport report;
    report.suite = j.value("suite", "");
    report.seed = j.value("seed", 0ull);
    report.steps = j.value("steps", 0);
    report.prime = j.value("prime", 101u);
    report.rings = j.value("rings", std::vector<std::string>{});
    report.instances = j.value("instances", 0);
    for (const auto& cj : j.at("checks")) {
        CheckCounts c;
        c.holds = cj.value("holds", 0);
        c.violated = cj.value("violated", 0);
        c.inconclusive = cj.value("inconclusive", 0);
        c.not_applicable = cj.value("not_applicable", 0);
        report.counts.emplace_back(cj.value("id", ""), c);
    }
    if (j.contains("violations"))
        for (const auto& vj : j["violations"]) {
            CheckVerdict v;
            v.check_id = vj.value("check", "");
            v.verdict = Verdict::Violated;
            v.instance = vj.value("instance", "");
            v.witness = vj.value("witness", "");
            report.violations.push_back(std::move(v));
        }
    return format == "csv" ? report_to_csv(report) : report_to_text(report);
}

std::string table_to_json(const HomologyTable& t) {
    ordered_json j;
    j["schema"] = "modcx/1";
    j["kind"] = t.kind == HomKind::Ext ? "ext" : "tor";
    j["M"] = t.m_uid;
    j["N"] = t.n_uid;
    j["steps"] = t.requested_steps;
    j["lengths"] = t.lengths;
    j["gens"] = t.gens;
    j["truncated"] = t.truncated;
    return j.dump(2) + "\n";
}

std::string table_to_text(const HomologyTable& t) {
    std::ostringstream out;
    const char* label = t.kind == HomKind::Ext ? "Ext^i" : "Tor_i";
    out << "  i  l(" << label << ")  nu(" << label << ")\n";
    for (int i = 0; i <= t.available(); ++i) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "%3d  %8lld  %9lld\n", i,
                      static_cast<long long>(t.lengths[i]),
                      static_cast<long long>(t.gens[i]));
        out << buf;
    }
    if (t.truncated)
        out << "  (truncated at degree " << t.available() << " by the work budget)\n";
    return out.str();
}

std::string table_to_csv(const HomologyTable& t) {
    std::ostringstream out;
    out << "i,ext_length,ext_gens\n";
    for (int i = 0; i <= t.available(); ++i)
        out << i << "," << t.lengths[i] << "," << t.gens[i] << "\n";
    return out.str();
}

namespace {

ordered_json growth_json_value(const GrowthClass& g) {
    ordered_json j;
    j["class"] = g.to_string();
    ordered_json e;
    if (g.evidence.recurrence) {
        ordered_json r;
        r["order"] = g.evidence.recurrence->order;
        r["coeffs"] = g.evidence.recurrence->coeffs;
        r["tail_start"] = g.evidence.recurrence->tail_start;
        e["recurrence"] = std::move(r);
    }
    e["diff_order"] = g.evidence.diff_order;
    e["ratio_geometric"] = g.evidence.ratio_geometric;
    e["terms_used"] = g.evidence.terms_used;
    e["input_truncated"] = g.evidence.input_truncated;
    e["source"] = g.evidence.source;
    e["note"] = g.evidence.note;
    j["evidence"] = std::move(e);
    return j;
}

}  // namespace

std::string growth_to_json(const GrowthClass& g) {
    return growth_json_value(g).dump(2) + "\n";
}

std::string resolve_to_json(const std::string& module_name,
                            const std::vector<long long>& betti, bool truncated,
                            const GrowthClass& cls) {
    ordered_json j;
    j["schema"] = "modcx/1";
    j["module"] = module_name;
    j["betti"] = betti;
    j["truncated"] = truncated;
    j["growth"] = growth_json_value(cls);
    return j.dump(2) + "\n";
}

std::string growth_summary(const GrowthClass& g) {
    std::string s = g.to_string();
    if (g.evidence.recurrence) {
        s += " (recurrence order " + std::to_string(g.evidence.recurrence->order) + ": c =";
        for (long long c : g.evidence.recurrence->coeffs) s += " " + std::to_string(c);
        s += ")";
    } else if (!g.evidence.note.empty()) {
        s += " (" + g.evidence.note + ")";
    }
    return s;
}

std::string ring_info_text(const ArtinAlgebra& r, const std::string& label) {
    std::ostringstream out;
    out << "ring " << label << " over GF(" << r.field().modulus() << ")\n";
    out << "  length l(R)      = " << r.dim() << "\n";
    out << "  edim             = " << r.edim() << "\n";
    out << "  socle length r   = " << r.socle_length() << "\n";
    out << "  gorenstein       = " << (r.gorenstein() ? "yes" : "no") << "\n";
    if (r.ci_codim)
        out << "  complete int.    = asserted, codim " << *r.ci_codim << "\n";
    out << "  radical ladder   =";
    for (int v : r.m_power_lengths()) out << " " << v;
    out << "  (l(m^j), j = 0..)\n";
    out << "  basis            =";
    std::vector<std::string> vars = r.spec().vars;
    for (int i = 0; i < r.dim(); ++i) {
        RingElement e = r.zero();
        e.coeffs[i] = 1;
        out << " " << r.format(e);
    }
    out << "\n  tags             =";
    for (const auto& t : fixture_tags(r)) out << " " << t;
    out << "\n";
    return out.str();
}

std::string ring_info_json(const ArtinAlgebra& r, const std::string& label) {
    ordered_json j;
    j["schema"] = "modcx/1";
    j["ring"] = label;
    j["prime"] = r.field().modulus();
    j["length"] = r.dim();
    j["edim"] = r.edim();
    j["socle_length"] = r.socle_length();
    j["gorenstein"] = r.gorenstein();
    if (r.ci_codim) j["ci_codim"] = *r.ci_codim;
    j["radical_lengths"] = r.m_power_lengths();
    j["tags"] = fixture_tags(r);
    return j.dump(2) + "\n";
}

}  // namespace modcx
