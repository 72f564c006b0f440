#include "modcx/resolution.hpp"

#include <algorithm>

namespace modcx {

namespace {

bool mul_ll(long long a, long long b, long long& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

}  // namespace

std::optional<long long> FreeResolution::betti_at(int i) const {
    if (i < 0) return 0;
    if (i < static_cast<int>(betti.size())) return betti[i];
    if (finite) return 0;
    return std::nullopt;
}

ResolutionEngine::ResolutionEngine(const ArtinAlgebra& r, ResolutionLimits limits)
    : r_(&r), limits_(limits) {}

const ModuleRep& ResolutionEngine::residue_field() {
    if (!k_) k_ = ModuleRep::residue_field(*r_);
    return *k_;
}

const FreeResolution& ResolutionEngine::resolve(const ModuleRep& m, int steps) {
    if (steps < 0) throw input_error("steps must be >= 0");
    auto it = memo_.find(m.uid());
    if (it == memo_.end()) {
        State st;
        st.res.algebra = r_;
        st.res.module_uid = m.uid();
        st.res.betti.push_back(m.min_gens());
        st.res.syzygy_dims.push_back(m.length());
        st.cur = m;
        if (m.length() == 0) {
            st.res.finite = true;
            st.done = true;
        }
        it = memo_.emplace(m.uid(), std::move(st)).first;
    }
    extend(it->second, steps);
    return it->second.res;
}

void ResolutionEngine::extend(State& st, int steps) {
    while (!st.done && st.res.materialized_steps() < steps) {
        if (!step(st)) break;
    }
    extend_tail_numbers(st, steps);
}

// Fill betti numbers past the materialized range using the semisimple tail
// b_{t+j} = tail_dim * b_j(k) (j >= 1), or zeros past a finite resolution.
void ResolutionEngine::extend_tail_numbers(State& st, int steps) {
    FreeResolution& res = st.res;
    if (res.finite) {
        while (static_cast<int>(res.betti.size()) <= steps) res.betti.push_back(0);
        return;
    }
    if (!res.has_tail || res.overflowed) return;
    const bool self = res.module_uid == residue_field().uid();
    const FreeResolution* kres = nullptr;
    if (!self && static_cast<int>(res.betti.size()) <= steps)
        kres = &resolve(residue_field(), steps - res.tail_start);
    while (static_cast<int>(res.betti.size()) <= steps) {
        int i = static_cast<int>(res.betti.size());
        int j = i - res.tail_start;
        std::optional<long long> bk;
        if (self) {
            // forward self-reference: j < i, already filled
            bk = res.betti[j];
        } else {
            bk = kres->betti_at(j);
        }
        if (!bk) {
            res.truncated = true;
            return;
        }
        long long v;
        if (!mul_ll(res.tail_dim, *bk, v)) {
            res.overflowed = true;
            res.truncated = true;
            return;
        }
        res.betti.push_back(v);
    }
}

bool ResolutionEngine::step(State& st, bool allow_tail) {
    const PrimeField& f = r_->field();
    const int lr = r_->dim();
    const int nv = r_->nvars();
    FreeResolution& res = st.res;
    const ModuleRep& s = st.cur;
    const int d = s.length();
    const int m = res.materialized_steps();

    if (d == 0) {
        res.finite = true;
        st.done = true;
        return true;
    }

    // analyzing the syzygy (radical + generator lift) costs ~ nvars * d^3;
    // gate before triggering it
    if (d > limits_.max_syzygy_dim ||
        static_cast<long long>(std::max(nv, 1)) * d * d * d > limits_.step_work_limit) {
        res.truncated = true;
        st.done = true;
        return true;
    }

    const int t = s.min_gens();  // = b_m, recorded already
    const bool semisimple = s.radical_basis().cols() == 0;
    const bool resolving_k = res.module_uid == residue_field().uid();
    if (allow_tail && semisimple && !(resolving_k && m == 0)) {
        // Omega^m = k^d: record the tail and materialize the next
        // differential, whose columns are the syzygy basis itself.
        res.has_tail = true;
        res.tail_start = m;
        res.tail_dim = d;
        // cover R^t -> k^d with t = d; kernel = m^(+d), generators x_j e_g
        RMatrix diff(*r_, t, d * r_->edim());
        // minimal generators of the maximal ideal: degree-1 part of a basis
        std::vector<int> m_gens;
        {
            // deterministic: basis monomials of degree 1 that minimally
            // generate m (lift of m/m^2)
            SpanBuilder span(f, lr);
            IdealSubspace m2 = r_->radical_power(2);
            for (int c = 0; c < m2.basis.cols(); ++c) span.add(m2.basis.col(c));
            for (int k = 0; k < lr && static_cast<int>(m_gens.size()) < r_->edim(); ++k) {
                if (k == r_->unit_index()) continue;
                Vec e(lr, 0);
                e[k] = 1;
                if (span.add(e)) m_gens.push_back(k);
            }
        }
        if (static_cast<int>(m_gens.size()) != r_->edim())
            throw internal_error("maximal ideal generator count mismatch");
        for (int g = 0; g < d; ++g)
            for (int j = 0; j < r_->edim(); ++j) {
                RingElement e = r_->zero();
                e.coeffs[m_gens[j]] = 1;
                diff.at(g, g * r_->edim() + j) = e;
            }
        res.diffs.push_back(std::move(diff));
        res.betti.push_back(static_cast<long long>(d) * r_->edim());
        res.syzygy_dims.push_back(d * (r_->m_power_lengths()[1]));
        st.done = true;
        return true;
    }

    // projected elimination cost for the kernel of the cover
    long long cols = static_cast<long long>(t) * lr;
    long long cost = static_cast<long long>(d) * d * cols;
    if (cost > limits_.step_work_limit) {
        res.truncated = true;
        st.done = true;
        return true;
    }

    // cover map R^t -> S on the minimal generators, columns built along the
    // monomial divisor ladder (each column is one matvec from its parent)
    Mat cover(f, d, t * lr);
    const auto& ladder = r_->monomial_ladder();
    for (int g = 0; g < t; ++g) {
        std::vector<Vec> cols_of(lr);
        cols_of[r_->unit_index()] = s.minimal_generators().col(g);
        for (int k = 0; k < lr; ++k) {
            if (k == r_->unit_index()) continue;
            const auto& [parent, var] = ladder[k];
            cols_of[k] = s.action(var).apply(cols_of[parent]);
        }
        for (int k = 0; k < lr; ++k)
            for (int row = 0; row < d; ++row) cover.set(row, g * lr + k, cols_of[k][row]);
    }

    KernelResult ker = kernel_with_free(cover);
    if (ker.rank != d)
        throw internal_error("minimal cover is not surjective");
    const int kd = ker.basis.cols();

    // next differential: columns are the minimal generators of the kernel
    // expressed in the free cover (their entries lie in m by minimality)
    auto block_apply = [&](int var, const Vec& v) {
        Vec out(t * lr, 0);
        for (int g = 0; g < t; ++g) {
            Vec part(v.begin() + g * lr, v.begin() + (g + 1) * lr);
            Vec w = r_->var_action(var).apply(part);
            std::copy(w.begin(), w.end(), out.begin() + g * lr);
        }
        return out;
    };

    // induced actions in kernel coordinates (values at the free positions)
    std::vector<Mat> acts;
    for (int j = 0; j < nv; ++j) {
        Mat a(f, kd, kd);
        for (int c = 0; c < kd; ++c) {
            Vec w = block_apply(j, ker.basis.col(c));
            for (int rrow = 0; rrow < kd; ++rrow) a.set(rrow, c, w[ker.free_cols[rrow]]);
        }
        acts.push_back(std::move(a));
    }
    ModuleRep next =
        ModuleRep::from_actions(*r_, std::move(acts),
                                "syz:" + std::to_string(m + 1) + ":" + res.module_uid,
                                /*validate=*/false);

    const int b_next = next.min_gens();
    RMatrix diff(*r_, t, b_next);
    for (int g = 0; g < b_next; ++g) {
        // minimal generators of the kernel module are standard basis vectors
        // in kernel coordinates; their free-module form is a kernel column
        int coord = -1;
        const Mat& gens = next.minimal_generators();
        for (int rrow = 0; rrow < kd; ++rrow)
            if (gens.at(rrow, g) != 0) {
                if (coord >= 0) throw internal_error("generator lift is not a unit vector");
                coord = rrow;
                if (gens.at(rrow, g) != 1)
                    throw internal_error("generator lift is not normalized");
            }
        Vec v = ker.basis.col(coord);
        for (int grow = 0; grow < t; ++grow) {
            RingElement e = r_->zero();
            std::copy(v.begin() + grow * lr, v.begin() + (grow + 1) * lr, e.coeffs.begin());
            if (e.coeffs[r_->unit_index()] != 0)
                throw internal_error("differential entry outside the maximal ideal");
            diff.at(grow, g) = std::move(e);
        }
    }

    res.diffs.push_back(std::move(diff));
    res.betti.push_back(b_next);
    res.syzygy_dims.push_back(kd);
    st.cur = std::move(next);
    return true;
}

std::vector<std::pair<std::string, const FreeResolution*>>
ResolutionEngine::all_resolutions() const {
    std::vector<std::pair<std::string, const FreeResolution*>> out;
    for (const auto& [uid, st] : memo_) out.emplace_back(uid, &st.res);
    return out;
}

std::vector<long long> ResolutionEngine::betti(const ModuleRep& m, int steps) {
    const FreeResolution& res = resolve(m, steps);
    std::vector<long long> out;
    for (int i = 0; i <= steps; ++i) {
        auto b = res.betti_at(i);
        if (!b) break;
        out.push_back(*b);
    }
    return out;
}

ModuleRep ResolutionEngine::syzygy(const ModuleRep& m, int j) {
    if (j < 0) throw input_error("syzygy index must be >= 0");
    if (j == 0) return m;
    const FreeResolution& res = resolve(m, j);
    if (res.finite && j > res.materialized_steps())
        return ModuleRep::zero_module(*r_);
    if (res.has_tail && j > res.tail_start) {
        // Omega^j = k^dim with dim = tail_dim * dim Omega^(j - tail_start)(k)
        const FreeResolution& kres = resolve(residue_field(), j - res.tail_start);
        int jj = j - res.tail_start;
        if (jj >= static_cast<int>(kres.syzygy_dims.size()))
            throw input_error("syzygy exceeds materialization budget");
        long long dim;
        if (!mul_ll(res.tail_dim, kres.syzygy_dims[jj], dim) || dim > (1 << 22))
            throw input_error("syzygy too large to materialize");
        std::vector<Mat> acts(r_->nvars(),
                              Mat(r_->field(), static_cast<int>(dim), static_cast<int>(dim)));
        return ModuleRep::from_actions(*r_, std::move(acts),
                                       "syz:" + std::to_string(j) + ":" + m.uid());
    }
    if (j > res.materialized_steps())
        throw input_error("syzygy exceeds materialization budget");
    // recompute the chain up to j (states only keep the last syzygy)
    State st;
    st.res.algebra = r_;
    st.res.module_uid = "tmp:" + m.uid();
    st.res.betti.push_back(m.min_gens());
    st.res.syzygy_dims.push_back(m.length());
    st.cur = m;
    if (m.length() == 0) return ModuleRep::zero_module(*r_);
    for (int i = 0; i < j; ++i) {
        if (st.done || !step(st, /*allow_tail=*/false))
            throw input_error("syzygy exceeds materialization budget");
        if (st.res.truncated) throw input_error("syzygy exceeds materialization budget");
        if (st.res.finite) return ModuleRep::zero_module(*r_);
    }
    ModuleRep out = st.cur;
    return ModuleRep::from_actions(*r_, std::vector<Mat>(out.actions()),
                                   "syz:" + std::to_string(j) + ":" + m.uid());
}

ResolutionVerdict verify_resolution(const FreeResolution& f, const ModuleRep& m) {
    ResolutionVerdict v;
    const ArtinAlgebra& r = *f.algebra;
    const PrimeField& field = r.field();
    const int lr = r.dim();
    auto fail = [&](const std::string& why) {
        v.pass = false;
        v.failure = why;
        return v;
    };

    if (f.betti.empty() || f.betti[0] != m.min_gens())
        return fail("b_0 != nu(M)");

    // minimality: every differential entry lies in m
    for (std::size_t i = 0; i < f.diffs.size(); ++i)
        for (const RingElement& e : f.diffs[i].entries)
            if (e.coeffs[r.unit_index()] != 0)
                return fail("entry of d_" + std::to_string(i + 1) + " outside m");

    // d_i . d_{i+1} = 0, checked on the module generators of the source
    for (std::size_t i = 0; i + 1 < f.diffs.size(); ++i) {
        const RMatrix& a = f.diffs[i];
        const RMatrix& b = f.diffs[i + 1];
        for (int g = 0; g < b.cols; ++g) {
            for (int row = 0; row < a.rows; ++row) {
                RingElement acc = r.zero();
                for (int mid = 0; mid < a.cols; ++mid) {
                    const RingElement& x = b.at(mid, g);
                    bool zero = true;
                    for (auto c : x.coeffs)
                        if (c) { zero = false; break; }
                    if (zero) continue;
                    RingElement prod = r.mul(a.at(row, mid), x);
                    for (int c = 0; c < lr; ++c)
                        acc.coeffs[c] = field.add(acc.coeffs[c], prod.coeffs[c]);
                }
                for (auto c : acc.coeffs)
                    if (c) return fail("d_" + std::to_string(i + 1) + " . d_" +
                                       std::to_string(i + 2) + " != 0");
            }
        }
    }

    // rank-exactness: build each k-linear map and compare ranks
    std::vector<int> ranks;
    for (std::size_t i = 0; i < f.diffs.size(); ++i) {
        const RMatrix& d = f.diffs[i];
        Mat phi(field, d.rows * lr, d.cols * lr);
        for (int br = 0; br < d.rows; ++br)
            for (int bc = 0; bc < d.cols; ++bc) {
                Mat op = r.mul_operator(d.at(br, bc));
                if (op.is_zero()) continue;
                for (int x = 0; x < lr; ++x)
                    for (int y = 0; y < lr; ++y)
                        phi.set(br * lr + x, bc * lr + y, op.at(x, y));
            }
        ranks.push_back(rank(phi));
        ++v.rank_checks_done;
    }
    if (!f.diffs.empty()) {
        if (ranks[0] != lr * static_cast<int>(f.betti[0]) - m.length())
            return fail("rank d_1 does not match coker M");
        for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
            if (ranks[i] + ranks[i + 1] != lr * static_cast<int>(f.betti[i + 1]))
                return fail("exactness fails at step " + std::to_string(i + 1));
    }
    return v;
}

}  // namespace modcx
