// Executable checks: every in-scope statement becomes a verdict over a
// (ring, modules, steps) instance, with a concrete witness when violated.
// Exact per-degree surrogates are always asserted; class-level equalities
// are asserted only when every classification involved is conclusive.
#pragma once

#include <functional>
#include <map>

#include "modcx/fixtures.hpp"
#include "modcx/growth.hpp"
#include "modcx/homology.hpp"

namespace modcx {

enum class Verdict { Holds, Violated, Inconclusive, NotApplicable };

std::string verdict_name(Verdict v);

struct CheckVerdict {
    std::string check_id;
    Verdict verdict = Verdict::NotApplicable;
    std::string instance;  // replayable descriptor
    std::string witness;   // degree + numbers or classifier evidence
};

// Shared computation context for one ring: engines, memoized tables and
// growth classifications, the named modules of a suite run.
class Lab {
  public:
    Lab(const ArtinAlgebra& r, GrowthConfig growth = {}, ResolutionLimits rlim = {},
        HomologyLimits hlim = {});

    const ArtinAlgebra& ring() const { return *r_; }
    const GrowthConfig& growth_config() const { return growth_; }

    const ModuleRep& k();
    const ModuleRep& R();
    const ModuleRep& E();
    const ModuleRep& add(ModuleRep m, const std::string& display_name);
    const ModuleRep& dual(const ModuleRep& m);
    std::string display_name(const ModuleRep& m) const;
    const ModuleRep* find_by_uid(const std::string& uid) const;

    // re-verify every resolution the engines materialized in this lab
    std::vector<CheckVerdict> audit_resolutions(int steps);

    ResolutionEngine& resolutions() { return res_; }
    HomologyEngine& homology() { return hom_; }

    std::vector<long long> betti(const ModuleRep& m, int steps);
    const HomologyTable& ext(const ModuleRep& m, const ModuleRep& n, int steps);
    const HomologyTable& tor(const ModuleRep& m, const ModuleRep& n, int steps);

    // Def. of pair complexity: class of the nu-sequence of Ext(M,N), with the
    // length-sequence class required to agree whenever both are conclusive.
    GrowthClass cx_pair(const ModuleRep& m, const ModuleRep& n, int steps);
    GrowthClass cx_mod(const ModuleRep& m, int steps);  // cx M = cx(M, k)
    GrowthClass px_mod(const ModuleRep& n, int steps);  // px N = cx(k, N)

    // test hook: adds 1 to one Ext length of the next table served
    void arm_ext_corruption() { corrupt_ext_ = true; }

  private:
    const ArtinAlgebra* r_;
    GrowthConfig growth_;
    ResolutionEngine res_;
    HomologyEngine hom_;
    std::map<std::string, ModuleRep> store_;
    std::map<std::string, std::string> names_;
    std::map<std::string, HomologyTable> corrupted_;
    bool corrupt_ext_ = false;
};

// Per-degree bounds between homology lengths and Betti numbers.
CheckVerdict check_upper_bound(Lab& lab, const ModuleRep& m, const ModuleRep& n, int steps);
CheckVerdict check_lower_bound(Lab& lab, const ModuleRep& m, const ModuleRep& n, int steps,
                               const std::vector<RingElement>* user_ideal_gens = nullptr);
// Annihilator-margin transfer of classes between cxx(M,N) / cx M and the
// dual branch cxx(N,M) / px M.
CheckVerdict check_margin_transfer(Lab& lab, const ModuleRep& m, const ModuleRep& n,
                                   int steps);
// m^2 N = 0 transfer.
CheckVerdict check_square_zero_transfer(Lab& lab, const ModuleRep& m, const ModuleRep& n,
                                        int steps);
// m^2 N = 0 and self-orthogonal => free or injective.
CheckVerdict check_free_or_injective(Lab& lab, const ModuleRep& n, int steps);
// Rings with 2*socle > length: Betti ratio bound + class dichotomy.
CheckVerdict check_socle_heavy(Lab& lab, const ModuleRep& m, int steps);
// Non-Gorenstein rings with m^2 = 0, or m^3 = 0 and 2*socle > length - 2.
CheckVerdict check_non_gorenstein_small(Lab& lab, const ModuleRep& m, int steps);
// Gorenstein rings with m^3 = 0: cxx(M,M) = cx M.
CheckVerdict check_gorenstein_cube_self(Lab& lab, const ModuleRep& m, int steps);
// m^3 = 0 != m^2 and cxx(M,M) = 0: cxx(M,R) = cx M in {0,1,Infinite}.
CheckVerdict check_cube_self_orthogonal(Lab& lab, const ModuleRep& m, int steps);
// Matlis duality: Ext(M,N) lengths = Tor(M, dual N) lengths; cx M = px(dual M).
CheckVerdict check_duality(Lab& lab, const ModuleRep& m, const ModuleRep& n, int steps);
// Vanishing Ext(M,R) and Ext(M,M) must leave a free module.
CheckVerdict check_aar_witness(Lab& lab, const ModuleRep& m, int steps);
// Complete intersection metadata: symmetric classes bounded by the codimension.
CheckVerdict check_complete_intersection(Lab& lab, const ModuleRep& m, const ModuleRep& n,
                                         int steps);

struct CheckCounts {
    int holds = 0, violated = 0, inconclusive = 0, not_applicable = 0;
    int total() const { return holds + violated + inconclusive + not_applicable; }
};

struct CheckReport {
    std::string suite;
    std::uint64_t seed = 0;
    int steps = 0;
    std::uint32_t prime = 101;
    std::vector<std::string> rings;
    int instances = 0;
    // per check id, in registry order
    std::vector<std::pair<std::string, CheckCounts>> counts;
    std::vector<CheckVerdict> violations;
    std::vector<CheckVerdict> inconclusives;
    int total_violated() const;
};

struct SuiteConfig {
    std::string suite = "paper";  // "paper" or "corpus"
    std::uint64_t seed = 42;
    int steps = 20;
    std::uint32_t prime = 101;
    std::string corpus_ring;      // corpus suite: catalog name
    int corpus_modules = 50;
    int random_per_ring = 20;     // paper suite
    int pair_samples = 10;
    GrowthConfig growth;
    ResolutionLimits res_limits;
    HomologyLimits hom_limits;
    // re-verify every materialized resolution at the end of each ring
    bool audit_resolutions = true;
    bool corrupt_ext_hook = false;
};

const std::vector<std::string>& check_registry();

// A ring participating in a suite run, with optional named modules that are
// examined alongside the canonical k, R, E and the seeded random corpus.
struct SuiteRing {
    std::string name;
    ArtinAlgebra ring;
    std::vector<std::pair<std::string, ModulePresentation>> named_modules;
};

CheckReport run_suite(const SuiteConfig& cfg);
CheckReport run_suite(const SuiteConfig& cfg, const std::vector<SuiteRing>& rings);

}  // namespace modcx
