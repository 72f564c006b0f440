// Ext and Tor tables computed from minimal free resolutions: per degree the
// length and the minimal generator count of the homology subquotient, the
// latter carrying the induced module structure (not just a dimension count).
#pragma once

#include <map>

#include "modcx/resolution.hpp"

namespace modcx {

enum class HomKind { Ext, Tor };

struct HomologyTable {
    HomKind kind = HomKind::Ext;
    std::string m_uid, n_uid;
    int requested_steps = 0;
    std::vector<long long> lengths;  // degree 0 .. available()
    std::vector<long long> gens;
    bool truncated = false;   // stopped early (work budget or truncated resolution)
    bool overflowed = false;

    int available() const { return static_cast<int>(lengths.size()) - 1; }
    bool complete() const { return available() >= requested_steps; }
};

struct HomologyLimits {
    long long map_work_limit = 2'000'000'000;
};

class HomologyEngine {
  public:
    explicit HomologyEngine(ResolutionEngine& res, HomologyLimits limits = {});

    const HomologyTable& ext(const ModuleRep& m, const ModuleRep& n, int steps);
    const HomologyTable& tor(const ModuleRep& m, const ModuleRep& n, int steps);
    // Bass numbers mu^i(M), housed as lengths of Ext^i(k, M).
    std::vector<long long> bass_numbers(const ModuleRep& m, int steps);

    ResolutionEngine& resolutions() { return *eng_; }

  private:
    const HomologyTable& table(HomKind kind, const ModuleRep& m, const ModuleRep& n,
                               int steps);
    HomologyTable compute(HomKind kind, const ModuleRep& m, const ModuleRep& n, int steps);

    ResolutionEngine* eng_;
    HomologyLimits limits_;
    std::map<std::string, HomologyTable> memo_;
};

}  // namespace modcx
