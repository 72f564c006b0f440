#include "modcx/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modcx {

std::string AlgebraSpec::canonical() const {
    std::string s = "p=" + std::to_string(prime) + ";cap=" + std::to_string(cap) + ";vars=";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
    }
    s += ";rels=";
    for (std::size_t i = 0; i < relations.size(); ++i) {
        if (i) s += ",";
        s += relations[i];
    }
    return s;
}

int IdealSubspace::quotient_length() const {
    return algebra->dim() - basis.cols();
}

namespace {

// Monomials of total degree < cap, ordered by degree then lexicographically.
std::vector<Exponents> truncated_monomials(int nvars, int cap) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    // enumerate all exponent vectors with sum < cap
    std::vector<std::vector<Exponents>> by_degree(cap);
    std::vector<Exponents> frontier{Exponents(static_cast<std::size_t>(nvars), 0)};
    by_degree[0] = frontier;
    for (int d = 1; d < cap; ++d) {
        std::set<Exponents> next;
        for (const auto& e : by_degree[d - 1]) {
            for (int j = 0; j < nvars; ++j) {
                Exponents f = e;
                ++f[j];
                next.insert(f);
            }
        }
        by_degree[d].assign(next.begin(), next.end());
    }
    for (int d = 0; d < cap; ++d)
        for (const auto& e : by_degree[d]) out.push_back(e);
    return out;
}

struct QuotientBuild {
    std::vector<Exponents> basis;
    int unit_index = -1;
    std::vector<Mat> var_actions;
    std::vector<int> basis_degree;
};

// Core construction inside the truncated polynomial algebra T = k[x]/m^cap.
QuotientBuild build_quotient(const PrimeField& field, int nvars, int cap,
                             const std::vector<Polynomial>& rels) {
    std::vector<Exponents> monos = truncated_monomials(nvars, cap);
    const int tdim = static_cast<int>(monos.size());
    std::map<Exponents, int> index;
    for (int i = 0; i < tdim; ++i) index[monos[i]] = i;

    // action of x_j on T; monomials of degree >= cap truncate to zero
    std::vector<std::vector<int>> shift(nvars, std::vector<int>(tdim, -1));
    for (int i = 0; i < tdim; ++i) {
        for (int j = 0; j < nvars; ++j) {
            Exponents e = monos[i];
            ++e[j];
            auto it = index.find(e);
            shift[j][i] = it == index.end() ? -1 : it->second;
        }
    }

    auto poly_to_vec = [&](const Polynomial& p) {
        Vec v(tdim, 0);
        for (const auto& [e, c] : p.terms()) {
            auto it = index.find(e);
            if (it == index.end()) continue;  // degree >= cap, truncated away
            v[it->second] = field.add(v[it->second], field.from_int(c));
        }
        return v;
    };

    // Ideal closure of the relation images under the variable actions.
    SpanBuilder ideal(field, tdim);
    std::vector<Vec> queue;
    for (const auto& p : rels) {
        Vec v = poly_to_vec(p);
        if (ideal.add(v)) queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        for (int j = 0; j < nvars; ++j) {
            Vec w(tdim, 0);
            for (int i = 0; i < tdim; ++i) {
                if (v[i] == 0 || shift[j][i] < 0) continue;
                w[shift[j][i]] = field.add(w[shift[j][i]], v[i]);
            }
            if (ideal.add(w)) queue.push_back(std::move(w));
        }
    }

    // Standard monomials: coordinates without a pivot in the ideal span.
    std::vector<bool> is_pivot(tdim, false);
    for (int p : ideal.pivot_columns()) is_pivot[p] = true;

    QuotientBuild out;
    std::vector<int> coord_of;  // T index -> quotient index (-1 if pivot)
    coord_of.assign(tdim, -1);
    for (int i = 0; i < tdim; ++i) {
        if (!is_pivot[i]) {
            coord_of[i] = static_cast<int>(out.basis.size());
            out.basis.push_back(monos[i]);
        }
    }
    const int qdim = static_cast<int>(out.basis.size());
    if (qdim == 0) throw internal_error("quotient algebra collapsed to zero");
    for (int i = 0; i < qdim; ++i) {
        int deg = 0;
        for (auto v : out.basis[i]) deg += v;
        out.basis_degree.push_back(deg);
        if (deg == 0) out.unit_index = i;
    }
    if (out.unit_index < 0)
        throw internal_error("unit monomial not in quotient basis");

    auto project = [&](const Vec& v) {
        Vec res = ideal.reduce(v);
        Vec q(qdim, 0);
        for (int i = 0; i < tdim; ++i)
            if (coord_of[i] >= 0) q[coord_of[i]] = res[i];
        return q;
    };

    for (int j = 0; j < nvars; ++j) {
        Mat a(field, qdim, qdim);
        for (int c = 0; c < qdim; ++c) {
            // x_j * basis monomial c, computed in T then projected
            auto it = index.find(out.basis[c]);
            int t = shift[j][it->second];
            if (t < 0) continue;
            Vec v(tdim, 0);
            v[t] = 1;
            Vec q = project(v);
            for (int r = 0; r < qdim; ++r) a.set(r, c, q[r]);
        }
        out.var_actions.push_back(std::move(a));
    }
    return out;
}

std::vector<int> per_degree_counts(const QuotientBuild& q, int cap) {
    std::vector<int> counts(cap + 1, 0);
    for (int d : q.basis_degree)
        if (d <= cap) ++counts[d];
    return counts;
}

}  // namespace

ArtinAlgebra ArtinAlgebra::build(const AlgebraSpec& spec) {
    if (spec.cap < 1) throw input_error("cap must be >= 1");
    PrimeField field(spec.prime);
    {
        std::set<std::string> seen;
        for (const auto& v : spec.vars) {
            if (v.empty()) throw input_error("empty variable name");
            if (!seen.insert(v).second)
                throw input_error("duplicate variable name '" + v + "'");
        }
    }
    std::vector<Polynomial> rels;
    for (const auto& text : spec.relations) {
        Polynomial p = Polynomial::parse(text, spec.vars);
        if (field.from_int(p.constant_term()) != 0)
            throw input_error("relation \"" + text + "\" has nonzero constant term");
        rels.push_back(std::move(p));
    }
    const int nvars = static_cast<int>(spec.vars.size());

    QuotientBuild q = build_quotient(field, nvars, spec.cap, rels);
    QuotientBuild q1 = build_quotient(field, nvars, spec.cap + 1, rels);
    if (q.basis.size() != q1.basis.size()) {
        std::vector<int> c0 = per_degree_counts(q, spec.cap + 1);
        std::vector<int> c1 = per_degree_counts(q1, spec.cap + 1);
        int bad = spec.cap;
        for (int d = 0; d <= spec.cap + 1 && d < static_cast<int>(c0.size()); ++d)
            if (c0[d] != c1[d]) { bad = d; break; }
        throw input_error("cap too small: quotient dimension changes when rebuilding at cap+1"
                          " (first failing degree " + std::to_string(bad) + ")");
    }

    ArtinAlgebra r;
    r.spec_ = spec;
    r.field_ = field;
    r.id_ = spec.canonical();
    r.basis_ = std::move(q.basis);
    r.dim_ = static_cast<int>(r.basis_.size());
    r.unit_index_ = q.unit_index;
    r.var_actions_ = std::move(q.var_actions);

    // consistency: actions commute and are nilpotent
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            if (!(r.var_actions_[i].mul(r.var_actions_[j]) ==
                  r.var_actions_[j].mul(r.var_actions_[i])))
                throw internal_error("variable actions do not commute");
    for (int j = 0; j < nvars; ++j) {
        Mat power = Mat::identity(field, r.dim_);
        for (int c = 0; c < spec.cap; ++c) power = power.mul(r.var_actions_[j]);
        if (!power.is_zero()) throw internal_error("variable action is not nilpotent at cap");
    }

    // multiplication by each basis monomial
    for (int k = 0; k < r.dim_; ++k) {
        Mat b = Mat::identity(field, r.dim_);
        for (int j = 0; j < nvars; ++j)
            for (int e = 0; e < r.basis_[k][j]; ++e) b = r.var_actions_[j].mul(b);
        r.basis_actions_.push_back(std::move(b));
    }

    // divisor ladder: standard monomials of a degree-compatible order are
    // closed under division, so every non-unit basis monomial has a parent
    {
        std::map<Exponents, int> basis_index;
        for (int k = 0; k < r.dim_; ++k) basis_index[r.basis_[k]] = k;
        for (int k = 0; k < r.dim_; ++k) {
            if (k == r.unit_index_) {
                r.ladder_.emplace_back(-1, -1);
                continue;
            }
            int j = 0;
            while (r.basis_[k][j] == 0) ++j;
            Exponents parent = r.basis_[k];
            --parent[j];
            auto it = basis_index.find(parent);
            if (it == basis_index.end())
                throw internal_error("basis monomials are not divisor-closed");
            r.ladder_.emplace_back(it->second, j);
        }
    }

    // radical filtration m^j
    {
        SpanBuilder whole(field, r.dim_);
        for (int i = 0; i < r.dim_; ++i) {
            Vec e(r.dim_, 0);
            e[i] = 1;
            whole.add(e);
        }
        r.m_power_bases_.push_back(whole.basis_cols());
        r.m_power_lengths_.push_back(r.dim_);

        Mat cur(field, r.dim_, 0);
        {
            SpanBuilder m1(field, r.dim_);
            for (int i = 0; i < r.dim_; ++i) {
                if (i == r.unit_index_) continue;
                Vec e(r.dim_, 0);
                e[i] = 1;
                m1.add(e);
            }
            cur = m1.basis_cols();
        }
        for (int j = 1; j <= spec.cap; ++j) {
            r.m_power_bases_.push_back(cur);
            r.m_power_lengths_.push_back(cur.cols());
            SpanBuilder next(field, r.dim_);
            for (int jv = 0; jv < nvars; ++jv) {
                for (int c = 0; c < cur.cols(); ++c)
                    next.add(r.var_actions_[jv].apply(cur.col(c)));
            }
            cur = next.basis_cols();
        }
        if (r.m_power_lengths_.back() != 0)
            throw internal_error("m^cap is nonzero after saturation check");
    }

    // socle = intersection of the kernels of all variable actions
    if (nvars == 0) {
        r.socle_basis_ = Mat::identity(field, r.dim_);
    } else {
        Mat stacked(field, nvars * r.dim_, r.dim_);
        for (int j = 0; j < nvars; ++j)
            for (int a = 0; a < r.dim_; ++a)
                for (int b = 0; b < r.dim_; ++b)
                    stacked.set(j * r.dim_ + a, b, r.var_actions_[j].at(a, b));
        r.socle_basis_ = kernel_basis(stacked);
    }
    r.socle_length_ = r.socle_basis_.cols();
    r.edim_ = r.m_power_lengths_[1] - (spec.cap >= 2 ? r.m_power_lengths_[2] : 0);
    return r;
}

int ArtinAlgebra::radical_nilpotency() const {
    for (int j = 0; j < static_cast<int>(m_power_lengths_.size()); ++j)
        if (m_power_lengths_[j] == 0) return j;
    return spec_.cap;
}

RingElement ArtinAlgebra::one() const {
    RingElement e{Vec(dim_, 0)};
    e.coeffs[unit_index_] = 1;
    return e;
}

RingElement ArtinAlgebra::from_polynomial(const Polynomial& p) const {
    if (p.nvars() != spec_.vars.size() && !p.is_zero())
        throw input_error("polynomial over wrong variable set");
    RingElement out = zero();
    for (const auto& [e, c] : p.terms()) {
        // image of the monomial: apply variable actions to 1
        Vec v(dim_, 0);
        v[unit_index_] = 1;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int t = 0; t < e[j]; ++t) v = var_actions_[j].apply(v);
        std::uint32_t coeff = field_.from_int(c);
        for (int i = 0; i < dim_; ++i)
            out.coeffs[i] = field_.add(out.coeffs[i], field_.mul(coeff, v[i]));
    }
    return out;
}

RingElement ArtinAlgebra::mul(const RingElement& a, const RingElement& b) const {
    if (static_cast<int>(a.coeffs.size()) != dim_ || static_cast<int>(b.coeffs.size()) != dim_)
        throw input_error("ring element has wrong length");
    Vec out(dim_, 0);
    for (int k = 0; k < dim_; ++k) {
        if (a.coeffs[k] == 0) continue;
        Vec t = basis_actions_[k].apply(b.coeffs);
        for (int i = 0; i < dim_; ++i)
            out[i] = field_.add(out[i], field_.mul(a.coeffs[k], t[i]));
    }
    return {out};
}

Mat ArtinAlgebra::mul_operator(const RingElement& a) const {
    Mat op(field_, dim_, dim_);
    for (int k = 0; k < dim_; ++k) {
        if (a.coeffs[k] == 0) continue;
        const Mat& b = basis_actions_[k];
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                op.set(i, j, field_.add(op.at(i, j), field_.mul(a.coeffs[k], b.at(i, j))));
    }
    return op;
}

std::string ArtinAlgebra::format(const RingElement& a) const {
    std::string out;
    for (int k = 0; k < dim_; ++k) {
        if (a.coeffs[k] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t j = 0; j < spec_.vars.size(); ++j) {
            if (basis_[k][j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += spec_.vars[j];
            if (basis_[k][j] > 1) mono += "^" + std::to_string(static_cast<int>(basis_[k][j]));
        }
        if (mono.empty()) {
            out += std::to_string(a.coeffs[k]);
        } else {
            if (a.coeffs[k] != 1) out += std::to_string(a.coeffs[k]) + "*";
            out += mono;
        }
    }
    return out.empty() ? "0" : out;
}

IdealSubspace ArtinAlgebra::radical_power(int j) const {
    if (j < 0) throw input_error("radical power index must be >= 0");
    if (j >= static_cast<int>(m_power_bases_.size()))
        return {this, Mat(field_, dim_, 0)};
    return {this, m_power_bases_[j]};
}

IdealSubspace ArtinAlgebra::socle_ideal() const {
    return {this, socle_basis_};
}

IdealSubspace ArtinAlgebra::ideal_closure(const std::vector<RingElement>& gens) const {
    SpanBuilder span(field_, dim_);
    std::vector<Vec> queue;
    for (const auto& g : gens) {
        if (static_cast<int>(g.coeffs.size()) != dim_)
            throw input_error("generator has wrong length");
        if (span.add(g.coeffs)) queue.push_back(g.coeffs);
    }
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        for (const Mat& a : var_actions_) {
            Vec w = a.apply(v);
            if (span.add(w)) queue.push_back(std::move(w));
        }
    }
    return {this, span.basis_cols()};
}

RingElement parse_ring_element(const ArtinAlgebra& r, const std::string& text) {
    return r.from_polynomial(Polynomial::parse(text, r.spec().vars));
}

}  // namespace modcx
