// Finitely presented modules over an ArtinAlgebra, realized as k-spaces with
// one commuting nilpotent action matrix per algebra variable.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modcx/algebra.hpp"

namespace modcx {

struct ModulePresentation {
    std::string name;
    int gens = 0;                                      // t
    std::vector<std::vector<RingElement>> relations;   // s rows of length t

    std::string canonical(const ArtinAlgebra& r) const;
};

class ModuleRep {
  public:
    ModuleRep() = default;  // empty shell; use the factories below

    static ModuleRep realize(const ArtinAlgebra& r, const ModulePresentation& p);
    static ModuleRep free_module(const ArtinAlgebra& r, int rank);
    static ModuleRep residue_field(const ArtinAlgebra& r);
    static ModuleRep zero_module(const ArtinAlgebra& r);
    // Internal constructor for duals, syzygies, sums and subquotients.
    // `validate` re-checks commutativity and relation annihilation (cubic in
    // the dimension); engine-built syzygies skip it, their structure is
    // inherited from an invariant subspace.
    static ModuleRep from_actions(const ArtinAlgebra& r, std::vector<Mat> actions,
                                  std::string uid, bool validate = true);

    const ArtinAlgebra& algebra() const { return *algebra_; }
    const std::string& uid() const { return uid_; }
    int length() const { return dim_; }  // ℓ(M)
    int min_gens() const { ensure_gens(); return gens_->min_gens; }  // ν(M)
    const Mat& action(int j) const { return actions_[j]; }
    const std::vector<Mat>& actions() const { return actions_; }

    const Mat& radical_basis() const { ensure_gens(); return gens_->radical; }  // mM
    Mat socle_basis() const;  // Soc M, columns
    // ℓ(m^j M) for j = 0.. until zero (inclusive).
    std::vector<int> radical_power_lengths() const;

    // Deterministic minimal generating set: standard basis vectors lifting
    // a basis of M/mM, as columns.
    const Mat& minimal_generators() const { ensure_gens(); return gens_->lifts; }

    // v -> (monomial e) * v using the variable actions.
    Vec apply_monomial(const Exponents& e, Vec v) const;
    // The ℓ(M) x ℓ(M) operator of a ring element (lazy per-module monomial cache).
    Mat ring_operator(const RingElement& a) const;
    const std::vector<Mat>& basis_actions() const;

    bool same_algebra(const ModuleRep& o) const { return algebra_->id() == o.algebra_->id(); }

  private:
    void validate_actions() const;
    void ensure_gens() const;

    struct GenData {
        Mat radical;
        Mat lifts;
        int min_gens = 0;
    };

    const ArtinAlgebra* algebra_ = nullptr;
    std::string uid_;
    int dim_ = 0;
    std::vector<Mat> actions_;
    mutable std::shared_ptr<GenData> gens_;
    mutable std::shared_ptr<std::vector<Mat>> basis_actions_cache_;
};

struct Submodule {
    const ModuleRep* parent = nullptr;
    Mat basis;  // columns in the parent's coordinates
    int dim() const { return basis.cols(); }
};

Submodule radical_submodule(const ModuleRep& m);
Submodule socle_submodule(const ModuleRep& m);

// Matlis dual: transposed actions on the dual space. ℓ is preserved,
// ν(M^) = ℓ(Soc M) and ℓ(Soc M^) = ν(M).
ModuleRep matlis_dual(const ModuleRep& m);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

// Largest ideal I with I*S = 0 (S a submodule of M).
IdealSubspace annihilator_ideal(const Submodule& s);

bool is_free(const ModuleRep& m);
bool is_injective(const ModuleRep& m);

}  // namespace modcx
