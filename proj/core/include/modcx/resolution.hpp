// Truncated minimal free resolutions. Each step covers the current syzygy by
// a minimal free module and realizes the kernel as the next syzygy. Two exits
// short of the requested depth:
//   - semisimple tail: once m * (syzygy) = 0 the syzygy is a sum of copies of
//     k and the remaining Betti numbers are exact multiples of the Betti
//     numbers of k (certified per run, not assumed);
//   - work budget: a step whose elimination would exceed the configured work
//     limit truncates the resolution honestly (flagged, never padded).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modcx/module.hpp"

namespace modcx {

// rows x cols matrix with RingElement entries (row-major).
struct RMatrix {
    int rows = 0, cols = 0;
    std::vector<RingElement> entries;

    RMatrix() = default;
    RMatrix(const ArtinAlgebra& r, int rows_, int cols_)
        : rows(rows_), cols(cols_),
          entries(static_cast<std::size_t>(rows_) * cols_, r.zero()) {}
    const RingElement& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
    RingElement& at(int r, int c) {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
};

struct ResolutionLimits {
    // projected elimination cost (dim^2 * columns) allowed for one step
    long long step_work_limit = 2'000'000'000;
    // hard cap on the dimension of a materialized syzygy
    int max_syzygy_dim = 6000;
};

struct FreeResolution {
    const ArtinAlgebra* algebra = nullptr;
    std::string module_uid;
    std::vector<long long> betti;       // b_0 .. b_(betti.size()-1)
    std::vector<int> syzygy_dims;       // dim of Omega^j for materialized j
    std::vector<RMatrix> diffs;         // d_1 .. d_m (minimal differentials)
    bool has_tail = false;              // Omega^tail_start is semisimple
    int tail_start = 0;
    long long tail_dim = 0;
    bool finite = false;                // hit a zero syzygy: free tail of zeros
    bool truncated = false;             // stopped by the work budget
    bool overflowed = false;            // tail Betti numbers left int64 range

    int materialized_steps() const { return static_cast<int>(diffs.size()); }
    int max_betti_index() const { return static_cast<int>(betti.size()) - 1; }
    std::optional<long long> betti_at(int i) const;
};

struct ResolutionVerdict {
    bool pass = true;
    std::string failure;  // first violated condition
    int rank_checks_done = 0;
};

class ResolutionEngine {
  public:
    explicit ResolutionEngine(const ArtinAlgebra& r, ResolutionLimits limits = {});

    // Resolve (or extend a memoized resolution of) M to `steps` steps.
    const FreeResolution& resolve(const ModuleRep& m, int steps);
    // Betti numbers b_0..b_steps; shorter when truncated.
    std::vector<long long> betti(const ModuleRep& m, int steps);
    // Omega^j(M) as a standalone module (j = 0 returns a copy of M).
    ModuleRep syzygy(const ModuleRep& m, int j);

    const ModuleRep& residue_field();
    const ArtinAlgebra& algebra() const { return *r_; }
    const ResolutionLimits& limits() const { return limits_; }

    // every resolution this engine has materialized, keyed by module uid
    std::vector<std::pair<std::string, const FreeResolution*>> all_resolutions() const;

  private:
    struct State {
        FreeResolution res;
        ModuleRep cur;        // Omega^m in its own coordinates
        bool done = false;
    };
    void extend(State& st, int steps);
    void extend_tail_numbers(State& st, int steps);
    // One resolution step. `allow_tail` lets a semisimple syzygy switch the
    // state into tail mode; syzygy extraction forces honest steps instead.
    bool step(State& st, bool allow_tail = true);

    const ArtinAlgebra* r_;
    ResolutionLimits limits_;
    std::map<std::string, State> memo_;
    std::optional<ModuleRep> k_;
};

// Re-checks minimality, the complex property on module generators, b_0 = nu(M)
// and rank-exactness at every materialized step.
ResolutionVerdict verify_resolution(const FreeResolution& f, const ModuleRep& m);

}  // namespace modcx
