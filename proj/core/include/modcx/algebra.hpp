// Artinian local algebras R = k[x_1..x_n]/(I + m^cap) realized as finite
// dimensional GF(p)-algebras with one multiplication matrix per variable.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modcx/matrix.hpp"
#include "modcx/polynomial.hpp"

namespace modcx {

struct AlgebraSpec {
    std::uint32_t prime = 101;
    std::vector<std::string> vars;
    std::vector<std::string> relations;  // polynomial strings, zero constant term
    int cap = 1;                         // truncation degree: m^cap = 0 is enforced

    // Canonical single-line form used for hashing and algebra identity.
    std::string canonical() const;
};

// Coefficient vector in the fixed monomial basis of an algebra.
struct RingElement {
    Vec coeffs;
};

class ArtinAlgebra;

// A k-subspace of R that is closed under multiplication by every variable.
struct IdealSubspace {
    const ArtinAlgebra* algebra = nullptr;
    Mat basis;  // columns
    int dim() const { return basis.cols(); }
    int quotient_length() const;  // ℓ(R/I)
};

class ArtinAlgebra {
  public:
    // Builds the quotient and certifies m^cap ⊆ I by rebuilding at cap+1.
    // Throws input_error("cap too small ...") when the dimensions disagree.
    static ArtinAlgebra build(const AlgebraSpec& spec);

    const AlgebraSpec& spec() const { return spec_; }
    const PrimeField& field() const { return field_; }
    const std::string& id() const { return id_; }
    int dim() const { return dim_; }  // ℓ(R)
    int nvars() const { return static_cast<int>(spec_.vars.size()); }
    const std::vector<Exponents>& basis_monomials() const { return basis_; }
    int unit_index() const { return unit_index_; }
    bool is_field() const { return dim_ == 1; }

    const Mat& var_action(int j) const { return var_actions_[j]; }
    const std::vector<Mat>& var_actions() const { return var_actions_; }
    // Multiplication by the k-th basis monomial.
    const Mat& basis_action(int k) const { return basis_actions_[k]; }
    // For basis monomial k != 1: (parent index, variable j) with
    // monomial_k = x_j * monomial_parent; (-1,-1) at the unit.
    const std::vector<std::pair<int, int>>& monomial_ladder() const { return ladder_; }

    int edim() const { return edim_; }
    int socle_length() const { return socle_length_; }  // r
    bool gorenstein() const { return socle_length_ == 1; }
    // ℓ(m^j) for j = 0..cap (always reaches 0 at index cap).
    const std::vector<int>& m_power_lengths() const { return m_power_lengths_; }
    int radical_nilpotency() const;  // least j with m^j = 0

    // User-asserted complete intersection metadata (never inferred).
    std::optional<int> ci_codim;

    RingElement zero() const { return {Vec(dim_, 0)}; }
    RingElement one() const;
    RingElement from_polynomial(const Polynomial& p) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    bool is_in_radical(const RingElement& a) const { return a.coeffs[unit_index_] == 0; }
    // The ℓ(R) x ℓ(R) matrix of multiplication by a.
    Mat mul_operator(const RingElement& a) const;
    std::string format(const RingElement& a) const;

    IdealSubspace radical_power(int j) const;
    IdealSubspace socle_ideal() const;
    IdealSubspace ideal_closure(const std::vector<RingElement>& gens) const;

  private:
    ArtinAlgebra() = default;

    AlgebraSpec spec_;
    PrimeField field_;
    std::string id_;
    int dim_ = 0;
    int unit_index_ = 0;
    std::vector<Exponents> basis_;
    std::vector<Mat> var_actions_;
    std::vector<Mat> basis_actions_;
    std::vector<std::pair<int, int>> ladder_;
    std::vector<Mat> m_power_bases_;  // bases of m^j, j = 0..cap
    std::vector<int> m_power_lengths_;
    Mat socle_basis_;
    int socle_length_ = 0;
    int edim_ = 0;
};

RingElement parse_ring_element(const ArtinAlgebra& r, const std::string& text);

}  // namespace modcx
