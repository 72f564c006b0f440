#include "modcx/fixtures.hpp"

#include <random>

namespace modcx {

std::vector<std::string> fixture_tags(const ArtinAlgebra& r) {
    std::vector<std::string> tags;
    const auto& ml = r.m_power_lengths();
    auto mlen = [&](int j) { return j < static_cast<int>(ml.size()) ? ml[j] : 0; };
    if (mlen(2) == 0) tags.push_back("m2-zero");
    if (mlen(3) == 0) tags.push_back("m3-zero");
    int l = r.dim(), soc = r.socle_length();
    if (2 * soc > l) tags.push_back("2r>l");
    if (2 * soc > l - 2) tags.push_back("2r>l-2");
    if (r.gorenstein()) tags.push_back("gorenstein");
    if (r.ci_codim) tags.push_back("ci");
    return tags;
}

const std::vector<FixtureInfo>& FixtureCatalog::entries() {
    static const std::vector<FixtureInfo> table = {
        {"dual_numbers", "k[x]/(x^2)", {101, {"x"}, {"x^2"}, 2}, 1, 2, 1},
        {"x_cubed", "k[x]/(x^3)", {101, {"x"}, {"x^3"}, 3}, 1, 3, 1},
        {"x_pow4", "k[x]/(x^4)", {101, {"x"}, {"x^4"}, 4}, 1, 4, 1},
        {"x_pow5", "k[x]/(x^5)", {101, {"x"}, {"x^5"}, 5}, 1, 5, 1},
        {"m2_e2", "k[x,y]/m^2", {101, {"x", "y"}, {"x^2", "x*y", "y^2"}, 2}, std::nullopt, 3,
         2},
        {"m2_e3", "k[x,y,z]/m^2 (S/n^2 at embedding dimension 3)",
         {101, {"x", "y", "z"}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}, 2}, std::nullopt,
         4, 3},
        {"m2_e4", "k[x1..x4]/m^2",
         {101,
          {"x1", "x2", "x3", "x4"},
          {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4",
           "x4^2"},
          2},
         std::nullopt, 5, 4},
        {"ci_x2y2", "k[x,y]/(x^2,y^2)", {101, {"x", "y"}, {"x^2", "y^2"}, 3}, 2, 4, 1},
        {"gor_m3", "k[x,y,z]/(xy,xz,yz,x^2-y^2,y^2-z^2)",
         {101, {"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^2-y^2", "y^2-z^2"}, 3}, std::nullopt,
         5, 1},
        {"nongor_m3", "k[x,y]/(x^2,xy,y^3)",
         {101, {"x", "y"}, {"x^2", "x*y", "y^3"}, 3}, std::nullopt, 4, 2},
    };
    return table;
}

std::vector<std::string> FixtureCatalog::names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

bool FixtureCatalog::has(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return true;
    return false;
}

ArtinAlgebra FixtureCatalog::load(const std::string& name, std::uint32_t prime) {
    for (const auto& e : entries()) {
        if (e.name != name) continue;
        AlgebraSpec spec = e.spec;
        spec.prime = prime;
        ArtinAlgebra r = ArtinAlgebra::build(spec);
        if (r.dim() != e.expected_length || r.socle_length() != e.expected_socle)
            throw internal_error("fixture '" + name + "' metadata mismatch: got length " +
                                 std::to_string(r.dim()) + ", socle " +
                                 std::to_string(r.socle_length()));
        r.ci_codim = e.ci_codim;
        return r;
    }
    throw input_error("unknown fixture ring '" + name + "'");
}

ModulePresentation random_module(const ArtinAlgebra& r, std::uint64_t seed, int max_gens,
                                 int max_rels) {
    if (max_gens < 1 || max_rels < 1) throw input_error("random_module bounds must be >= 1");
    std::mt19937_64 rng(seed);
    const PrimeField& f = r.field();
    for (int attempt = 0; attempt < 64; ++attempt) {
        ModulePresentation p;
        p.name = "rand" + std::to_string(seed);
        p.gens = 1 + static_cast<int>(rng() % max_gens);
        int s = 1 + static_cast<int>(rng() % max_rels);
        for (int row = 0; row < s; ++row) {
            std::vector<RingElement> rel;
            for (int g = 0; g < p.gens; ++g) {
                RingElement e = r.zero();
                if (rng() % 2 == 0) {
                    int picks = 1 + static_cast<int>(rng() % 2);
                    for (int t = 0; t < picks; ++t) {
                        int idx = static_cast<int>(rng() % r.dim());
                        if (idx == r.unit_index()) continue;  // stay inside m
                        std::uint32_t c = 1 + static_cast<std::uint32_t>(
                                                  rng() % (f.modulus() - 1));
                        e.coeffs[idx] = f.add(e.coeffs[idx], c);
                    }
                }
                rel.push_back(std::move(e));
            }
            p.relations.push_back(std::move(rel));
        }
        ModuleRep m = ModuleRep::realize(r, p);
        if (m.length() == 0) continue;  // cannot happen with entries in m; kept as a guard
        if (m.min_gens() != p.gens)
            throw internal_error("random presentation is not minimal");
        return p;
    }
    throw internal_error("random_module failed to produce a nonzero module");
}

}  // namespace modcx
