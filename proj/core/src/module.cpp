#include "modcx/module.hpp"

#include <algorithm>

namespace modcx {

std::string ModulePresentation::canonical(const ArtinAlgebra& r) const {
    std::string s = "t=" + std::to_string(gens) + ";rels=";
    for (const auto& row : relations) {
        s += "[";
        for (const auto& e : row) {
            for (auto c : e.coeffs) s += std::to_string(c) + ".";
            s += "|";
        }
        s += "]";
    }
    s += ";ring=" + r.id();
    return s;
}

void ModuleRep::validate_actions() const {
    const PrimeField& f = algebra_->field();
    const int n = algebra_->nvars();
    for (int i = 0; i < n; ++i) {
        if (actions_[i].rows() != dim_ || actions_[i].cols() != dim_)
            throw internal_error("module action has wrong shape");
        for (int j = i + 1; j < n; ++j)
            if (!(actions_[i].mul(actions_[j]) == actions_[j].mul(actions_[i])))
                throw internal_error("module actions do not commute");
    }
    // every algebra relation must act as zero
    for (const auto& text : algebra_->spec().relations) {
        Polynomial p = Polynomial::parse(text, algebra_->spec().vars);
        Mat op(f, dim_, dim_);
        for (const auto& [e, c] : p.terms()) {
            std::uint32_t coeff = f.from_int(c);
            for (int col = 0; col < dim_; ++col) {
                Vec v(dim_, 0);
                v[col] = 1;
                v = apply_monomial(e, std::move(v));
                for (int row = 0; row < dim_; ++row)
                    op.set(row, col, f.add(op.at(row, col), f.mul(coeff, v[row])));
            }
        }
        if (!op.is_zero())
            throw internal_error("algebra relation does not annihilate module");
    }
}

void ModuleRep::ensure_gens() const {
    if (gens_) return;
    const PrimeField& f = algebra_->field();
    const int n = algebra_->nvars();
    auto data = std::make_shared<GenData>();
    if (dim_ == 0) {
        data->radical = Mat(f, 0, 0);
        data->lifts = Mat(f, 0, 0);
        gens_ = std::move(data);
        return;
    }
    // mM = column space of [A_1 | ... | A_n]
    Mat stack(f, dim_, n * dim_);
    for (int j = 0; j < n; ++j)
        for (int rrow = 0; rrow < dim_; ++rrow)
            for (int c = 0; c < dim_; ++c)
                stack.set(rrow, j * dim_ + c, actions_[j].at(rrow, c));
    data->radical = column_space(stack);
    data->min_gens = dim_ - data->radical.cols();
    // extend the radical basis to a full basis with identity columns; the
    // appended pivots are the deterministic generator lifts
    Mat ext = data->radical.hstack(Mat::identity(f, dim_));
    RrefResult rr = rref(ext);
    std::vector<Vec> lifts;
    for (int p : rr.pivots) {
        if (p < data->radical.cols()) continue;
        Vec e(dim_, 0);
        e[p - data->radical.cols()] = 1;
        lifts.push_back(std::move(e));
    }
    if (static_cast<int>(lifts.size()) != data->min_gens)
        throw internal_error("generator lift count mismatch");
    data->lifts = Mat::from_cols(f, lifts, dim_);
    gens_ = std::move(data);
}

ModuleRep ModuleRep::from_actions(const ArtinAlgebra& r, std::vector<Mat> actions,
                                  std::string uid, bool validate) {
    ModuleRep m;
    m.algebra_ = &r;
    m.uid_ = std::move(uid);
    if (actions.empty() && r.nvars() > 0)
        throw internal_error("from_actions: missing actions");
    m.dim_ = actions.empty() ? 0 : actions[0].rows();
    m.actions_ = std::move(actions);
    if (validate) m.validate_actions();
    return m;
}

ModuleRep ModuleRep::free_module(const ArtinAlgebra& r, int rank) {
    const PrimeField& f = r.field();
    const int d = r.dim() * rank;
    std::vector<Mat> acts;
    for (int j = 0; j < r.nvars(); ++j) {
        Mat a(f, d, d);
        const Mat& block = r.var_action(j);
        for (int g = 0; g < rank; ++g)
            for (int x = 0; x < r.dim(); ++x)
                for (int y = 0; y < r.dim(); ++y)
                    a.set(g * r.dim() + x, g * r.dim() + y, block.at(x, y));
        acts.push_back(std::move(a));
    }
    ModuleRep m;
    m.algebra_ = &r;
    m.uid_ = "free:" + std::to_string(rank) + ":" + r.id();
    m.dim_ = d;
    m.actions_ = std::move(acts);
    m.validate_actions();
    return m;
}

ModuleRep ModuleRep::residue_field(const ArtinAlgebra& r) {
    std::vector<Mat> acts(r.nvars(), Mat(r.field(), 1, 1));
    ModuleRep m;
    m.algebra_ = &r;
    m.uid_ = "k:" + r.id();
    m.dim_ = 1;
    m.actions_ = std::move(acts);
    m.validate_actions();
    return m;
}

ModuleRep ModuleRep::zero_module(const ArtinAlgebra& r) {
    std::vector<Mat> acts(r.nvars(), Mat(r.field(), 0, 0));
    ModuleRep m;
    m.algebra_ = &r;
    m.uid_ = "zero:" + r.id();
    m.dim_ = 0;
    m.actions_ = std::move(acts);
    m.validate_actions();
    return m;
}

ModuleRep ModuleRep::realize(const ArtinAlgebra& r, const ModulePresentation& p) {
    const PrimeField& f = r.field();
    const int lr = r.dim();
    const int fdim = p.gens * lr;
    if (p.gens < 0) throw input_error("negative generator count");
    for (const auto& row : p.relations) {
        if (static_cast<int>(row.size()) != p.gens)
            throw input_error("presentation row has wrong length");
        for (const auto& e : row)
            if (static_cast<int>(e.coeffs.size()) != lr)
                throw input_error("presentation entry has wrong coefficient length");
    }

    // free cover F = R^t; coordinate (g, i) = g*ℓ(R) + i
    auto apply_var_free = [&](int j, const Vec& v) {
        Vec out(fdim, 0);
        for (int g = 0; g < p.gens; ++g) {
            Vec part(v.begin() + g * lr, v.begin() + (g + 1) * lr);
            Vec w = r.var_action(j).apply(part);
            std::copy(w.begin(), w.end(), out.begin() + g * lr);
        }
        return out;
    };

    SpanBuilder rel_span(f, std::max(fdim, 1));
    std::vector<Vec> queue;
    for (const auto& row : p.relations) {
        Vec v(fdim, 0);
        for (int g = 0; g < p.gens; ++g)
            std::copy(row[g].coeffs.begin(), row[g].coeffs.end(), v.begin() + g * lr);
        if (fdim > 0 && rel_span.add(v)) queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        for (int j = 0; j < r.nvars(); ++j) {
            Vec w = apply_var_free(j, v);
            if (rel_span.add(w)) queue.push_back(std::move(w));
        }
    }

    std::vector<bool> is_pivot(fdim, false);
    if (fdim > 0)
        for (int c : rel_span.pivot_columns()) is_pivot[c] = true;
    std::vector<int> coord_of(fdim, -1);
    int qdim = 0;
    for (int i = 0; i < fdim; ++i)
        if (!is_pivot[i]) coord_of[i] = qdim++;

    auto project = [&](const Vec& v) {
        Vec res = fdim > 0 ? rel_span.reduce(v) : v;
        Vec q(qdim, 0);
        for (int i = 0; i < fdim; ++i)
            if (coord_of[i] >= 0) q[coord_of[i]] = res[i];
        return q;
    };

    std::vector<Mat> acts;
    for (int j = 0; j < r.nvars(); ++j) {
        Mat a(f, qdim, qdim);
        for (int i = 0; i < fdim; ++i) {
            if (coord_of[i] < 0) continue;
            Vec e(fdim, 0);
            e[i] = 1;
            Vec q = project(apply_var_free(j, e));
            for (int row = 0; row < qdim; ++row) a.set(row, coord_of[i], q[row]);
        }
        acts.push_back(std::move(a));
    }

    ModuleRep m;
    m.algebra_ = &r;
    m.uid_ = "pres:" + (p.name.empty() ? p.canonical(r) : p.name + ":" + p.canonical(r));
    m.dim_ = qdim;
    m.actions_ = std::move(acts);
    m.validate_actions();
    return m;
}

Vec ModuleRep::apply_monomial(const Exponents& e, Vec v) const {
    for (std::size_t j = 0; j < e.size(); ++j)
        for (int t = 0; t < e[j]; ++t) v = actions_[j].apply(v);
    return v;
}

const std::vector<Mat>& ModuleRep::basis_actions() const {
    if (!basis_actions_cache_) {
        auto cache = std::make_shared<std::vector<Mat>>();
        const auto& monos = algebra_->basis_monomials();
        for (const auto& m : monos) {
            Mat op(algebra_->field(), dim_, dim_);
            for (int c = 0; c < dim_; ++c) {
                Vec e(dim_, 0);
                e[c] = 1;
                Vec w = apply_monomial(m, std::move(e));
                for (int row = 0; row < dim_; ++row) op.set(row, c, w[row]);
            }
            cache->push_back(std::move(op));
        }
        basis_actions_cache_ = std::move(cache);
    }
    return *basis_actions_cache_;
}

Mat ModuleRep::ring_operator(const RingElement& a) const {
    const PrimeField& f = algebra_->field();
    const auto& acts = basis_actions();
    Mat op(f, dim_, dim_);
    for (int k = 0; k < algebra_->dim(); ++k) {
        if (a.coeffs[k] == 0) continue;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                op.set(i, j, f.add(op.at(i, j), f.mul(a.coeffs[k], acts[k].at(i, j))));
    }
    return op;
}

Mat ModuleRep::socle_basis() const {
    const PrimeField& f = algebra_->field();
    const int n = algebra_->nvars();
    if (n == 0 || dim_ == 0) return Mat::identity(f, dim_);
    Mat stacked(f, n * dim_, dim_);
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b)
                stacked.set(j * dim_ + a, b, actions_[j].at(a, b));
    return kernel_basis(stacked);
}

std::vector<int> ModuleRep::radical_power_lengths() const {
    const PrimeField& f = algebra_->field();
    std::vector<int> lengths{dim_};
    Mat cur = radical_basis();
    while (true) {
        lengths.push_back(cur.cols());
        if (cur.cols() == 0) break;
        SpanBuilder next(f, dim_);
        for (const Mat& a : actions_)
            for (int c = 0; c < cur.cols(); ++c) next.add(a.apply(cur.col(c)));
        cur = next.basis_cols();
    }
    return lengths;
}

Submodule radical_submodule(const ModuleRep& m) { return {&m, m.radical_basis()}; }

Submodule socle_submodule(const ModuleRep& m) { return {&m, m.socle_basis()}; }

ModuleRep matlis_dual(const ModuleRep& m) {
    std::vector<Mat> acts;
    for (const Mat& a : m.actions()) acts.push_back(a.transpose());
    return ModuleRep::from_actions(m.algebra(), std::move(acts), "dual(" + m.uid() + ")");
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    if (!a.same_algebra(b)) throw input_error("direct_sum: algebra mismatch");
    const PrimeField& f = a.algebra().field();
    const int d = a.length() + b.length();
    std::vector<Mat> acts;
    for (int j = 0; j < a.algebra().nvars(); ++j) {
        Mat m(f, d, d);
        for (int x = 0; x < a.length(); ++x)
            for (int y = 0; y < a.length(); ++y) m.set(x, y, a.action(j).at(x, y));
        for (int x = 0; x < b.length(); ++x)
            for (int y = 0; y < b.length(); ++y)
                m.set(a.length() + x, a.length() + y, b.action(j).at(x, y));
        acts.push_back(std::move(m));
    }
    return ModuleRep::from_actions(a.algebra(), std::move(acts),
                                   "sum(" + a.uid() + "," + b.uid() + ")");
}

IdealSubspace annihilator_ideal(const Submodule& s) {
    const ModuleRep& m = *s.parent;
    const ArtinAlgebra& r = m.algebra();
    const PrimeField& f = r.field();
    if (s.dim() == 0) {
        // ann(0) = R
        SpanBuilder whole(f, r.dim());
        for (int i = 0; i < r.dim(); ++i) {
            Vec e(r.dim(), 0);
            e[i] = 1;
            whole.add(e);
        }
        return {&r, whole.basis_cols()};
    }
    // rows: one block of ℓ(M) constraints per submodule basis vector,
    // columns: coefficients of a in the algebra basis
    Mat c(f, m.length() * s.dim(), r.dim());
    for (int sc = 0; sc < s.dim(); ++sc) {
        Vec v = s.basis.col(sc);
        for (int k = 0; k < r.dim(); ++k) {
            Vec w = m.apply_monomial(r.basis_monomials()[k], v);
            for (int i = 0; i < m.length(); ++i)
                c.set(sc * m.length() + i, k, w[i]);
        }
    }
    return {&r, kernel_basis(c)};
}

bool is_free(const ModuleRep& m) {
    const ArtinAlgebra& r = m.algebra();
    if (m.length() != m.min_gens() * r.dim()) return false;
    if (m.length() == 0) return true;
    // canonical cover R^ν -> M on the minimal generators must be injective
    Mat cover(r.field(), m.length(), m.min_gens() * r.dim());
    for (int g = 0; g < m.min_gens(); ++g) {
        Vec gen = m.minimal_generators().col(g);
        for (int k = 0; k < r.dim(); ++k) {
            Vec w = m.apply_monomial(r.basis_monomials()[k], gen);
            for (int i = 0; i < m.length(); ++i)
                cover.set(i, g * r.dim() + k, w[i]);
        }
    }
    return rank(cover) == m.min_gens() * r.dim();
}

bool is_injective(const ModuleRep& m) { return is_free(matlis_dual(m)); }

}  // namespace modcx
