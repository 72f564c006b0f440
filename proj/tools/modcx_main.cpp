// modcx command line: exact homological invariants over artinian local
// algebras. Commands: ring-info, resolve, ext, cx, check, report.
// Exit codes: 0 ok, 1 violation found, 2 input error, 3 internal failure.
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>  // vendored CLI11

#include "modcx/session.hpp"

namespace {

using namespace modcx;

struct Cli {
    SessionConfig cfg;
    std::string ring_arg;
    std::string module_m = "k";
    std::string module_n;
    std::string suite = "paper";
    std::string report_file;
    std::string out_path;
    int corpus_modules = 50;
    bool want_tor = false;
    bool dual_check = false;
    bool corrupt_ext_hook = false;
    bool no_audit = false;
};

struct LoadedRing {
    SessionDoc doc;
    ArtinAlgebra ring;
    std::string label;
};

LoadedRing load_ring(const Cli& cli) {
    SessionDoc doc = load_session(cli.ring_arg, cli.cfg);
    AlgebraSpec spec = doc.spec;
    ArtinAlgebra ring = ArtinAlgebra::build(spec);
    ring.ci_codim = doc.ci_codim;
    std::string label = doc.catalog_name ? *doc.catalog_name : cli.ring_arg;
    return {std::move(doc), std::move(ring), std::move(label)};
}

const ModuleRep& named_module(Lab& lab, const LoadedRing& lr, const std::string& name) {
    if (name == "k") return lab.k();
    if (name == "R") return lab.R();
    if (name == "E") return lab.E();
    for (const auto& mt : lr.doc.modules) {
        if (mt.name != name) continue;
        ModulePresentation p = make_presentation(lr.ring, mt);
        return lab.add(ModuleRep::realize(lr.ring, p), name);
    }
    throw input_error("unknown module '" + name + "' (use k, R, E or a session module)");
}

int cmd_ring_info(const Cli& cli) {
    LoadedRing lr = load_ring(cli);
    if (cli.cfg.format == "json")
        std::cout << ring_info_json(lr.ring, lr.label);
    else
        std::cout << ring_info_text(lr.ring, lr.label);
    return 0;
}

int cmd_resolve(const Cli& cli) {
    LoadedRing lr = load_ring(cli);
    Lab lab(lr.ring, cli.cfg.growth, cli.cfg.res_limits, cli.cfg.hom_limits);
    const ModuleRep& m = named_module(lab, lr, cli.module_m);

    std::vector<long long> betti;
    bool truncated = false;
    std::string key = resolution_cache_key(lr.ring, m.uid(), cli.cfg.steps);
    bool from_cache = false;
    if (cli.cfg.use_cache) {
        if (auto cached = cache_load_resolution(cli.cfg.cache_dir, key, lr.ring)) {
            for (int i = 0; i <= cli.cfg.steps; ++i) {
                auto b = cached->betti_at(i);
                if (!b) break;
                betti.push_back(*b);
            }
            truncated = cached->truncated;
            from_cache = true;
        }
    }
    if (!from_cache) {
        const FreeResolution& res = lab.resolutions().resolve(m, cli.cfg.steps);
        betti = lab.betti(m, cli.cfg.steps);
        truncated = res.truncated;
        if (cli.cfg.use_cache) cache_store_resolution(cli.cfg.cache_dir, key, res);
    }

    GrowthClass cls = classify(Sequence(betti.begin(), betti.end()), cli.cfg.growth);
    if (cli.cfg.format == "json") {
        std::cout << resolve_to_json(cli.module_m, betti, truncated, cls);
    } else if (cli.cfg.format == "csv") {
        std::cout << "i,betti\n";
        for (std::size_t i = 0; i < betti.size(); ++i)
            std::cout << i << "," << betti[i] << "\n";
    } else {
        std::cout << "betti(" << cli.module_m << "):";
        for (long long b : betti) std::cout << " " << b;
        if (truncated) std::cout << "  (truncated)";
        std::cout << "\nclass: " << growth_summary(cls) << "\n";
    }
    return 0;
}

int cmd_ext(const Cli& cli) {
    LoadedRing lr = load_ring(cli);
    Lab lab(lr.ring, cli.cfg.growth, cli.cfg.res_limits, cli.cfg.hom_limits);
    const ModuleRep& m = named_module(lab, lr, cli.module_m);
    const ModuleRep& n = named_module(lab, lr, cli.module_n.empty() ? "k" : cli.module_n);
    const HomologyTable& t = cli.want_tor ? lab.tor(m, n, cli.cfg.steps)
                                          : lab.ext(m, n, cli.cfg.steps);
    if (cli.cfg.format == "json")
        std::cout << table_to_json(t);
    else if (cli.cfg.format == "csv")
        std::cout << table_to_csv(t);
    else
        std::cout << table_to_text(t);

    if (cli.dual_check) {
        const HomologyTable& e = lab.ext(m, n, cli.cfg.steps);
        const HomologyTable& td = lab.tor(m, lab.dual(n), cli.cfg.steps);
        int upto = std::min(e.available(), td.available());
        int mismatches = 0;
        for (int i = 0; i <= upto; ++i)
            if (e.lengths[i] != td.lengths[i]) ++mismatches;
        std::cout << mismatches << " mismatches (Ext vs Tor against the dual, degrees 0.."
                  << upto << ")\n";
        if (mismatches > 0) return 1;
    }
    return 0;
}

int cmd_cx(const Cli& cli) {
    LoadedRing lr = load_ring(cli);
    Lab lab(lr.ring, cli.cfg.growth, cli.cfg.res_limits, cli.cfg.hom_limits);
    const ModuleRep& m = named_module(lab, lr, cli.module_m);
    const ModuleRep& n = named_module(lab, lr, cli.module_n.empty() ? "k" : cli.module_n);
    GrowthClass g = lab.cx_pair(m, n, cli.cfg.steps);
    if (cli.cfg.format == "json")
        std::cout << growth_to_json(g);
    else
        std::cout << "cx(" << cli.module_m << ", "
                  << (cli.module_n.empty() ? "k" : cli.module_n)
                  << ") = " << growth_summary(g) << "\n";
    return 0;
}

int cmd_check(const Cli& cli) {
    SuiteConfig scfg;
    scfg.suite = cli.suite;
    scfg.seed = cli.cfg.seed;
    scfg.steps = cli.cfg.steps;
    scfg.prime = cli.cfg.prime;
    scfg.growth = cli.cfg.growth;
    scfg.res_limits = cli.cfg.res_limits;
    scfg.hom_limits = cli.cfg.hom_limits;
    scfg.corpus_modules = cli.corpus_modules;
    scfg.corrupt_ext_hook = cli.corrupt_ext_hook;
    scfg.audit_resolutions = !cli.no_audit;

    CheckReport report;
    if (cli.suite == "paper") {
        report = run_suite(scfg);
    } else {
        if (cli.ring_arg.empty()) throw input_error("corpus suite needs a ring argument");
        LoadedRing lr = load_ring(cli);
        SuiteRing sr{lr.label, std::move(lr.ring), {}};
        for (const auto& mt : lr.doc.modules)
            sr.named_modules.emplace_back(mt.name, make_presentation(sr.ring, mt));
        scfg.corpus_ring = lr.label;
        std::vector<SuiteRing> rings;
        rings.push_back(std::move(sr));
        report = run_suite(scfg, rings);
    }

    std::string json = report_to_json(report);
    std::string path = cli.out_path.empty()
                           ? cli.cfg.cache_dir + "/reports/" + report.suite + "-seed" +
                                 std::to_string(report.seed) + ".json"
                           : cli.out_path;
    write_file(path, json);

    if (cli.cfg.format == "json")
        std::cout << json;
    else if (cli.cfg.format == "csv")
        std::cout << report_to_csv(report);
    else
        std::cout << report_to_text(report);
    std::cerr << "report written to " << path << "\n";
    return report.total_violated() > 0 ? 1 : 0;
}

int cmd_report(const Cli& cli) {
    std::string text = read_file(cli.report_file);
    std::cout << render_report_file(text, cli.cfg.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"modcx: exact Ext/Tor growth laboratory over artinian local algebras"};
    app.require_subcommand(1);

    app.add_option("--prime", cli.cfg.prime, "prime field modulus")->capture_default_str();
    app.add_option("--steps", cli.cfg.steps, "truncation degree")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cli.cfg.seed, "random corpus seed")->capture_default_str();
    app.add_option("--format", cli.cfg.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cli.cfg.cache_dir, "resolution cache directory")
        ->capture_default_str();
    app.add_flag_callback("--no-cache", [&cli] { cli.cfg.use_cache = false; },
                          "bypass the resolution cache");
    app.add_option("--max-order", cli.cfg.growth.max_order,
                   "largest recurrence order the classifier tries")
        ->capture_default_str();

    auto* info = app.add_subcommand("ring-info", "print ring invariants");
    info->fallthrough();
    info->add_option("ring", cli.ring_arg, "catalog name or session file")->required();

    auto* resolve = app.add_subcommand("resolve", "Betti numbers and growth class");
    resolve->fallthrough();
    resolve->add_option("ring", cli.ring_arg)->required();
    resolve->add_option("module", cli.module_m, "k, R, E or a session module name")
        ->required();

    auto* ext = app.add_subcommand("ext", "Ext (or Tor) table of a pair");
    ext->fallthrough();
    ext->add_option("ring", cli.ring_arg)->required();
    ext->add_option("M", cli.module_m)->required();
    ext->add_option("N", cli.module_n)->required();
    ext->add_flag("--tor", cli.want_tor, "compute Tor instead of Ext");
    ext->add_flag("--dual-check", cli.dual_check,
                  "also compute Tor(M, dual N) and report mismatches");

    auto* cx = app.add_subcommand("cx", "growth class of a pair (N defaults to k)");
    cx->fallthrough();
    cx->add_option("ring", cli.ring_arg)->required();
    cx->add_option("M", cli.module_m)->required();
    cx->add_option("N", cli.module_n);

    auto* check = app.add_subcommand("check", "run a check suite, exit 1 on violations");
    check->fallthrough();
    check->add_option("ring", cli.ring_arg, "ring for the corpus suite");
    check->add_option("--suite", cli.suite, "paper|corpus")->capture_default_str();
    check->add_option("--modules", cli.corpus_modules, "corpus size")
        ->capture_default_str();
    check->add_option("--out", cli.out_path, "report path (default under cache dir)");
    check->add_flag("--corrupt-ext-hook", cli.corrupt_ext_hook,
                    "testing hook: corrupt one Ext length to force a violation");
    check->add_flag("--no-audit", cli.no_audit,
                    "skip the per-resolution minimality/exactness audit");

    auto* rep = app.add_subcommand("report", "render a persisted JSON report");
    rep->fallthrough();
    rep->add_option("file", cli.report_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_ring_info(cli);
        if (*resolve) return cmd_resolve(cli);
        if (*ext) return cmd_ext(cli);
        if (*cx) return cmd_cx(cli);
        if (*check) {
            if (!cli.ring_arg.empty() && cli.suite == "paper" && !check->count("--suite"))
                cli.suite = "corpus";
            return cmd_check(cli);
        }
        if (*rep) return cmd_report(cli);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
