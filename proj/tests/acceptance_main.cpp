// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria 10 and 11 drive the installed CLI binary (MODCX_BIN or argv[1]).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "modcx/session.hpp"

using namespace modcx;

namespace {

int failures = 0;
double elapsed_total = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report_line(int num, const std::string& name, bool pass, const std::string& detail,
                 double secs) {
    std::printf("[%s] %2d %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", num, name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
    elapsed_total += secs;
}

std::string cli_binary;

int run_cli(const std::string& args) {
    std::string cmd = cli_binary + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// module representations hold a pointer to their algebra, so each corpus
// entry lives at a stable heap address
struct Corpus {
    std::string ring_name;
    ArtinAlgebra ring;
    std::vector<std::pair<std::string, ModuleRep>> modules;
};

// shared audit corpus: every fixture ring with k, R, E and seeded randoms
std::vector<std::unique_ptr<Corpus>> build_corpus(int randoms, std::uint64_t seed) {
    std::vector<std::unique_ptr<Corpus>> out;
    for (const auto& name : FixtureCatalog::names()) {
        auto c = std::make_unique<Corpus>(Corpus{name, FixtureCatalog::load(name), {}});
        const ArtinAlgebra& r = c->ring;
        c->modules.emplace_back("k", ModuleRep::residue_field(r));
        c->modules.emplace_back("R", ModuleRep::free_module(r, 1));
        c->modules.emplace_back("E", matlis_dual(ModuleRep::free_module(r, 1)));
        for (int i = 0; i < randoms; ++i) {
            std::uint64_t s =
                seed * 1000003 + i * 7919 + std::hash<std::string>{}(name) % 1024;
            c->modules.emplace_back("rand" + std::to_string(i),
                                    ModuleRep::realize(r, random_module(r, s, 3, 5)));
        }
        out.push_back(std::move(c));
    }
    return out;
}

void criterion_1() {
    Timer t;
    std::string detail;
    bool pass = true;
    {
        ArtinAlgebra r = FixtureCatalog::load("m2_e2");
        ResolutionEngine eng(r);
        auto b = eng.betti(eng.residue_field(), 15);
        pass = pass && b.size() == 16;
        long long expect = 1;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] != expect) pass = false;
            expect *= 2;
        }
    }
    {
        ArtinAlgebra r = FixtureCatalog::load("x_cubed");
        ResolutionEngine eng(r);
        auto b = eng.betti(eng.residue_field(), 30);
        pass = pass && b.size() == 31;
        for (long long v : b)
            if (v != 1) pass = false;
    }
    {
        ArtinAlgebra r = FixtureCatalog::load("ci_x2y2");
        ResolutionEngine eng(r);
        auto b = eng.betti(eng.residue_field(), 20);
        pass = pass && b.size() == 21;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != static_cast<long long>(i) + 1) pass = false;
    }
    double secs = t.seconds();
    if (secs >= 5.0) {
        pass = false;
        detail = "over the 5 s budget";
    } else {
        detail = "2^i, constant, i+1 sequences all exact";
    }
    report_line(1, "resolution-correctness", pass, detail, secs);
}

void criterion_2_and_3(const std::vector<std::unique_ptr<Corpus>>& corpus) {
    Timer t;
    int audited = 0, verify_failures = 0, cross_mismatches = 0;
    const int steps = 12;
    for (const auto& cp : corpus) {
        const Corpus& c = *cp;
        ResolutionEngine eng(c.ring);
        HomologyEngine hom(eng);
        for (const auto& [name, m] : c.modules) {
            const FreeResolution& res = eng.resolve(m, steps + 1);
            ResolutionVerdict v = verify_resolution(res, m);
            ++audited;
            if (!v.pass) {
                ++verify_failures;
                std::fprintf(stderr, "  verify failed: %s/%s: %s\n", c.ring_name.c_str(),
                             name.c_str(), v.failure.c_str());
            }
            // cross-oracle: Ext and Tor against k both reproduce the Betti numbers
            const ModuleRep& k = eng.residue_field();
            const HomologyTable& e = hom.ext(m, k, steps);
            const HomologyTable& to = hom.tor(m, k, steps);
            int upto = std::min(e.available(), to.available());
            for (int i = 0; i <= upto; ++i) {
                auto b = res.betti_at(i);
                if (!b || e.lengths[i] != *b || to.lengths[i] != *b) ++cross_mismatches;
            }
        }
    }
    double secs = t.seconds();
    report_line(2, "minimality-exactness-audit", verify_failures == 0,
                std::to_string(audited) + " resolutions audited, " +
                    std::to_string(verify_failures) + " failures",
                secs);
    report_line(3, "homology-cross-oracle", cross_mismatches == 0,
                std::to_string(cross_mismatches) + " mismatches against Betti numbers", 0.0);
}

// tame rings carry the deep per-degree corpus of criteria 4-6
const std::vector<std::string> kTameRings = {"dual_numbers", "x_cubed", "x_pow4", "x_pow5",
                                             "ci_x2y2"};

void criteria_4_5_6() {
    Timer t;
    int pairs = 0, dual_mismatch = 0, upper_viol = 0, lower_viol = 0;
    const int steps = 15;
    for (const std::string& name : kTameRings) {
        ArtinAlgebra ring = FixtureCatalog::load(name);
        Lab lab(ring);
        std::vector<const ModuleRep*> mods;
        for (int i = 0; i < 10; ++i) {
            std::uint64_t s = 31337 + 101 * i + std::hash<std::string>{}(name) % 4096;
            mods.push_back(&lab.add(ModuleRep::realize(ring, random_module(ring, s, 3, 5)),
                                    "c" + std::to_string(i)));
        }
        for (int i = 0; i < 10; ++i) {
            const ModuleRep& m = *mods[i];
            const ModuleRep& n = *mods[(i + 3) % mods.size()];
            ++pairs;
            if (check_duality(lab, m, n, steps).verdict != Verdict::Holds) ++dual_mismatch;
            if (check_upper_bound(lab, m, n, steps).verdict == Verdict::Violated)
                ++upper_viol;
            if (check_lower_bound(lab, m, n, steps).verdict == Verdict::Violated)
                ++lower_viol;
        }
    }
    // hand-checked instance: (m2_e2, M=k, N=R), bound 3 * 2^(i-1)
    bool hand_ok = true;
    {
        ArtinAlgebra ring = FixtureCatalog::load("m2_e2");
        Lab lab(ring);
        const HomologyTable& e = lab.ext(lab.k(), lab.R(), steps);
        long long expect = 3;
        for (int i = 1; i <= std::min(15, e.available()); ++i) {
            if (e.lengths[i] < expect) hand_ok = false;
            if (e.lengths[i] != expect) hand_ok = false;  // equality is forced here
            expect *= 2;
        }
        if (check_lower_bound(lab, lab.k(), lab.R(), steps).verdict != Verdict::Holds)
            hand_ok = false;
    }
    double secs = t.seconds();
    bool in_budget = secs < 60.0;
    report_line(4, "matlis-duality-corpus", dual_mismatch == 0 && in_budget,
                std::to_string(pairs) + " pairs across " +
                    std::to_string(kTameRings.size()) + " rings, " +
                    std::to_string(dual_mismatch) + " mismatches",
                secs);
    report_line(5, "upper-bound-corpus", upper_viol == 0,
                std::to_string(upper_viol) + " violations", 0.0);
    report_line(6, "lower-bound-corpus", lower_viol == 0 && hand_ok,
                std::to_string(lower_viol) + " violations; hand-checked instance " +
                    (hand_ok ? "matches 3*2^(i-1)" : "FAILED"),
                0.0);
}

void criterion_7(const std::vector<std::unique_ptr<Corpus>>& corpus) {
    Timer t;
    int violations = 0, modules = 0;
    for (const auto& cp : corpus) {
        const Corpus& c = *cp;
        for (const auto& [name, m] : c.modules) {
            ++modules;
            ModuleRep d = matlis_dual(m);
            ModuleRep dd = matlis_dual(d);
            if (d.length() != m.length()) ++violations;
            if (d.min_gens() != socle_submodule(m).dim()) ++violations;
            if (socle_submodule(d).dim() != m.min_gens()) ++violations;
            if (dd.length() != m.length() || dd.min_gens() != m.min_gens()) ++violations;
            if (dd.radical_power_lengths() != m.radical_power_lengths()) ++violations;
        }
    }
    report_line(7, "matlis-numerics", violations == 0,
                std::to_string(modules) + " modules, " + std::to_string(violations) +
                    " violations",
                t.seconds());
}

void criterion_8() {
    Timer t;
    int misclassified = 0, bad_inconclusive = 0, instances = 0;

    auto expect_class = [&](const Sequence& s, GrowthClass::Tag tag, int degree) {
        ++instances;
        GrowthClass g = classify(s);
        if (!g.conclusive()) {
            ++bad_inconclusive;
            return;
        }
        if (g.tag != tag || (tag == GrowthClass::Tag::Polynomial && g.degree != degree))
            ++misclassified;
    };

    expect_class({0, 0, 0, 0, 0, 0, 0}, GrowthClass::Tag::Zero, 0);
    expect_class({5, 0, 0, 0, 0, 0, 0}, GrowthClass::Tag::Zero, 0);
    expect_class({3, 3, 3, 3, 3, 3, 3, 3, 3, 3}, GrowthClass::Tag::Polynomial, 1);
    expect_class({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, GrowthClass::Tag::Polynomial, 2);
    expect_class({1, 2, 4, 8, 16, 32, 64, 128, 256, 512}, GrowthClass::Tag::Infinite, 0);

    // recurrence-generated families up to order 4
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = static_cast<int>(rng() % 4);  // polynomial degree 0..3
        std::vector<long long> coeffs(deg + 1);
        for (auto& c : coeffs) c = 1 + rng() % 4;
        Sequence s;
        for (int i = 0; i < 20; ++i) {
            long long v = 0, p = 1;
            for (long long c : coeffs) {
                v += c * p;
                p *= i;
            }
            s.push_back(v);
        }
        expect_class(s, GrowthClass::Tag::Polynomial, deg + 1);

        long long base = 2 + static_cast<long long>(rng() % 3);
        Sequence geo;
        long long v = 1 + rng() % 3;
        for (int i = 0; i < 18; ++i) {
            geo.push_back(v);
            v *= base;
        }
        expect_class(geo, GrowthClass::Tag::Infinite, 0);
    }

    // transform invariance Prop-2.2-style on >= 100 instances
    int transform_instances = 0, transform_failures = 0;
    std::mt19937_64 rng2(777);
    while (transform_instances < 100) {
        Sequence s;
        if (rng2() % 2 == 0) {
            long long base = 2 + static_cast<long long>(rng2() % 3);
            long long w = 1;
            for (int i = 0; i < 15; ++i) {
                s.push_back(w);
                w *= base;
            }
        } else {
            long long lead = 1 + static_cast<long long>(rng2() % 3);
            for (int i = 0; i < 16; ++i) s.push_back(lead * i * i + i + 1);
        }
        GrowthClass base_class = classify(s);
        if (!base_class.conclusive()) {
            ++bad_inconclusive;
            ++transform_instances;
            continue;
        }
        long long cscale = 2 + static_cast<long long>(rng2() % 4);
        Sequence scaled;
        for (long long x : s) scaled.push_back(cscale * x);
        if (classify(scaled).rank() != base_class.rank()) ++transform_failures;

        long long a = 1 + static_cast<long long>(rng2() % 3);
        long long b = 1 + static_cast<long long>(rng2() % 3);
        if (classify(combine(s, a, b, CombineMode::Sum)).rank() != base_class.rank())
            ++transform_failures;
        try {
            Sequence d = combine(s, std::max(a, b) + 1, std::min(a, b), CombineMode::Diff);
            GrowthClass g = classify(d);
            if (g.conclusive() && g.rank() != base_class.rank()) ++transform_failures;
        } catch (const input_error&) {
            // negativity: instance skipped per the contract
        }
        ++transform_instances;
    }

    bool pass = misclassified == 0 && bad_inconclusive == 0 && transform_failures == 0;
    report_line(8, "growth-classifier-suite", pass,
                std::to_string(instances) + " classifications + " +
                    std::to_string(transform_instances) + " transform instances, " +
                    std::to_string(misclassified + transform_failures) + " wrong, " +
                    std::to_string(bad_inconclusive) + " inconclusive",
                t.seconds());
}

void criterion_9() {
    Timer t;
    int ratio_violations = 0, class_violations = 0, inconclusive = 0, instances = 0;
    const int steps = 20;
    for (const char* name : {"m2_e2", "m2_e3", "m2_e4"}) {
        ArtinAlgebra ring = FixtureCatalog::load(name);
        Lab lab(ring);
        std::vector<const ModuleRep*> mods{&lab.k(), &lab.R(), &lab.E()};
        for (int i = 0; i < 20; ++i) {
            std::uint64_t s = 555000 + 17 * i + std::hash<std::string>{}(name) % 2048;
            mods.push_back(&lab.add(ModuleRep::realize(ring, random_module(ring, s, 3, 5)),
                                    "h" + std::to_string(i)));
        }
        for (const ModuleRep* m : mods) {
            ++instances;
            CheckVerdict v = check_socle_heavy(lab, *m, steps);
            if (v.verdict == Verdict::Violated) {
                if (v.witness.find("b_") != std::string::npos)
                    ++ratio_violations;
                else
                    ++class_violations;
            } else if (v.verdict == Verdict::Inconclusive) {
                ++inconclusive;
            }
        }
    }
    bool pass = ratio_violations == 0 && class_violations == 0 && inconclusive == 0;
    report_line(9, "socle-heavy-suite", pass,
                std::to_string(instances) + " modules over 3 rings, " +
                    std::to_string(ratio_violations + class_violations) + " violations, " +
                    std::to_string(inconclusive) + " inconclusive",
                t.seconds());
}

void criteria_10_11() {
    if (cli_binary.empty()) {
        report_line(10, "paper-suite-via-cli", false, "no CLI binary provided", 0.0);
        report_line(11, "determinism", false, "no CLI binary provided", 0.0);
        return;
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("modcx-acc-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string a = (dir / "a.json").string();
    std::string b = (dir / "b.json").string();
    std::string base = "check --suite paper --seed 42 --steps 20 --cache-dir " +
                       (dir / "cache").string();

    Timer t;
    int rc1 = run_cli(base + " --out " + a);
    double first = t.seconds();
    bool pass10 = rc1 == 0 && first < 300.0;
    std::string detail10 = "exit " + std::to_string(rc1);
    if (rc1 == 0) {
        std::string json = read_file(a);
        if (json.find("\"total_violated\": 0") == std::string::npos) {
            pass10 = false;
            detail10 += ", violations present";
        } else {
            detail10 += ", zero violated verdicts";
        }
    }
    if (first >= 300.0) detail10 += ", over the 5 min budget";
    report_line(10, "paper-suite-via-cli", pass10, detail10, first);

    Timer t2;
    int rc2 = run_cli(base + " --out " + b);
    bool pass11 = rc2 == rc1;
    std::string detail11;
    if (pass11) {
        std::string ja = read_file(a), jb = read_file(b);
        pass11 = ja == jb && !ja.empty();
        detail11 = pass11 ? "byte-identical JSON reports"
                          : "reports differ between runs";
    } else {
        detail11 = "exit codes differ";
    }
    report_line(11, "determinism", pass11, detail11, t2.seconds());
    fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        cli_binary = argv[1];
    } else if (const char* env = std::getenv("MODCX_BIN")) {
        cli_binary = env;
    }

    std::printf("modcx acceptance suite\n");
    criterion_1();
    auto corpus = build_corpus(8, 2024);
    criterion_2_and_3(corpus);
    criteria_4_5_6();
    criterion_7(corpus);
    criterion_8();
    criterion_9();
    criteria_10_11();

    std::printf("%s (%d failure%s, %.1fs total)\n", failures == 0 ? "ALL PASS" : "FAILED",
                failures, failures == 1 ? "" : "s", elapsed_total);
    return failures == 0 ? 0 : 1;
}
