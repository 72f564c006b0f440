#include "modcx/homology.hpp"

#include <algorithm>

namespace modcx {

namespace {

bool mul_ll(long long a, long long b, long long& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

// N^blocks with the diagonal action of variable j.
Vec diag_apply(const ModuleRep& n, int var, const Vec& v, int blocks) {
    const int ln = n.length();
    Vec out(v.size(), 0);
    for (int b = 0; b < blocks; ++b) {
        Vec part(v.begin() + b * ln, v.begin() + (b + 1) * ln);
        Vec w = n.action(var).apply(part);
        std::copy(w.begin(), w.end(), out.begin() + b * ln);
    }
    return out;
}

// nu of ker/im inside N^blocks, with kernel basis K (free-coordinate form)
// and image vectors (independent columns, contained in the kernel).
long long subquotient_gens(const ModuleRep& n, int blocks, const KernelResult& ker,
                           const Mat& im_cols) {
    const ArtinAlgebra& r = n.algebra();
    const PrimeField& f = r.field();
    const int kd = ker.basis.cols();
    const int h = kd - im_cols.cols();
    if (h == 0) return 0;
    if (r.nvars() == 0) return h;

    // image vectors in kernel coordinates
    SpanBuilder im_span(f, std::max(kd, 1));
    for (int c = 0; c < im_cols.cols(); ++c) {
        Vec v(kd);
        for (int i = 0; i < kd; ++i) v[i] = im_cols.at(ker.free_cols[i], c);
        im_span.add(v);
    }
    if (im_span.dim() != im_cols.cols())
        throw internal_error("image basis dependent in kernel coordinates");

    std::vector<bool> is_pivot(kd, false);
    for (int p : im_span.pivot_columns()) is_pivot[p] = true;
    std::vector<int> coord_of(kd, -1);
    int hd = 0;
    for (int i = 0; i < kd; ++i)
        if (!is_pivot[i]) coord_of[i] = hd++;
    if (hd != h) throw internal_error("subquotient dimension mismatch");

    std::vector<Mat> acts;
    for (int j = 0; j < r.nvars(); ++j) {
        Mat a(f, h, h);
        for (int c = 0; c < kd; ++c) {
            if (coord_of[c] < 0) continue;
            Vec w = diag_apply(n, j, ker.basis.col(c), blocks);
            Vec kc(kd);
            for (int i = 0; i < kd; ++i) kc[i] = w[ker.free_cols[i]];
            Vec res = im_span.reduce(kc);
            for (int i = 0; i < kd; ++i)
                if (coord_of[i] >= 0) a.set(coord_of[i], coord_of[c], res[i]);
        }
        acts.push_back(std::move(a));
    }
    ModuleRep hmod = ModuleRep::from_actions(r, std::move(acts), "subquotient",
                                             /*validate=*/false);
    return hmod.min_gens();
}

}  // namespace

HomologyEngine::HomologyEngine(ResolutionEngine& res, HomologyLimits limits)
    : eng_(&res), limits_(limits) {}

const HomologyTable& HomologyEngine::ext(const ModuleRep& m, const ModuleRep& n, int steps) {
    return table(HomKind::Ext, m, n, steps);
}

const HomologyTable& HomologyEngine::tor(const ModuleRep& m, const ModuleRep& n, int steps) {
    return table(HomKind::Tor, m, n, steps);
}

std::vector<long long> HomologyEngine::bass_numbers(const ModuleRep& m, int steps) {
    return ext(eng_->residue_field(), m, steps).lengths;
}

const HomologyTable& HomologyEngine::table(HomKind kind, const ModuleRep& m,
                                           const ModuleRep& n, int steps) {
    std::string key = (kind == HomKind::Ext ? "E|" : "T|") + m.uid() + "|" + n.uid();
    auto it = memo_.find(key);
    if (it != memo_.end() && it->second.requested_steps >= steps) return it->second;
    HomologyTable t = compute(kind, m, n, steps);
    return memo_.insert_or_assign(key, std::move(t)).first->second;
}

HomologyTable HomologyEngine::compute(HomKind kind, const ModuleRep& m, const ModuleRep& n,
                                      int steps) {
    if (!m.same_algebra(n)) throw input_error("homology: algebra mismatch");
    if (steps < 0) throw input_error("steps must be >= 0");
    const ArtinAlgebra& r = m.algebra();
    const PrimeField& f = r.field();
    const int ln = n.length();

    HomologyTable out;
    out.kind = kind;
    out.m_uid = m.uid();
    out.n_uid = n.uid();
    out.requested_steps = steps;

    if (m.length() == 0 || ln == 0) {
        out.lengths.assign(steps + 1, 0);
        out.gens.assign(steps + 1, 0);
        return out;
    }

    const FreeResolution& res = eng_->resolve(m, steps + 1);
    const int mat = res.materialized_steps();

    // k-linear maps of the Hom / tensor complex, built degree by degree.
    // maps[i] corresponds to the differential d_i of the resolution.
    struct MapData {
        KernelResult ker;
        Mat im_cols;
        bool built = false;
    };
    std::vector<MapData> maps(static_cast<std::size_t>(mat) + 1);

    auto operator_of = [&](const RingElement& e) { return n.ring_operator(e); };

    // one rref per map: kernel_with_free yields the kernel and its free
    // coordinates; the complementary (pivot) columns give an image basis
    auto build_map = [&](int i) -> bool {
        const RMatrix& d = res.diffs[i - 1];
        long long rows = kind == HomKind::Ext ? static_cast<long long>(ln) * d.cols
                                              : static_cast<long long>(ln) * d.rows;
        long long cols = kind == HomKind::Ext ? static_cast<long long>(ln) * d.rows
                                              : static_cast<long long>(ln) * d.cols;
        long long small = std::min(rows, cols), big = std::max(rows, cols);
        if (small * small * big > limits_.map_work_limit) return false;
        Mat phi(f, static_cast<int>(rows), static_cast<int>(cols));
        for (int br = 0; br < d.rows; ++br)
            for (int bc = 0; bc < d.cols; ++bc) {
                Mat op = operator_of(d.at(br, bc));
                if (op.is_zero()) continue;
                // Hom(-, N): transposed block placement; tensor: direct
                int prow = kind == HomKind::Ext ? bc : br;
                int pcol = kind == HomKind::Ext ? br : bc;
                for (int x = 0; x < ln; ++x)
                    for (int y = 0; y < ln; ++y)
                        phi.set(prow * ln + x, pcol * ln + y, op.at(x, y));
            }
        MapData md;
        md.ker = kernel_with_free(phi);
        std::vector<int> pivots;
        {
            std::vector<bool> free_mark(phi.cols(), false);
            for (int c : md.ker.free_cols) free_mark[c] = true;
            for (int c = 0; c < phi.cols(); ++c)
                if (!free_mark[c]) pivots.push_back(c);
        }
        md.im_cols = phi.select_cols(pivots);
        md.built = true;
        maps[i] = std::move(md);
        return true;
    };

    int max_honest = std::min(steps, mat - 1);
    bool budget_hit = false;
    for (int i = 0; i <= max_honest; ++i) {
        // ensure maps i and i+1 exist (map 0 is conceptually zero)
        if (i >= 1 && !maps[i].built) { budget_hit = true; break; }
        if (!maps[i + 1].built && !build_map(i + 1)) { budget_hit = true; break; }

        long long b_i = *res.betti_at(i);
        long long t_dim = b_i * ln;
        const MapData& up = maps[i + 1];  // d_{i+1}
        long long len, gen;
        if (kind == HomKind::Ext) {
            // H^i = ker(hom d_{i+1}) / im(hom d_i); ker(hom d_{i+1}) lives on T_i
            const KernelResult& K = up.ker;
            const Mat empty(f, static_cast<int>(t_dim), 0);
            const Mat& I = i >= 1 ? maps[i].im_cols : empty;
            len = K.basis.cols() - I.cols();
            gen = len == 0 ? 0 : subquotient_gens(n, static_cast<int>(b_i), K, I);
        } else {
            // Tor_i = ker(d_i ⊗ N) / im(d_{i+1} ⊗ N); ker lives on T_i
            KernelResult whole;
            const KernelResult* K;
            if (i >= 1) {
                K = &maps[i].ker;
            } else {
                whole.basis = Mat::identity(f, static_cast<int>(t_dim));
                whole.free_cols.resize(t_dim);
                for (int c = 0; c < t_dim; ++c) whole.free_cols[c] = c;
                whole.rank = 0;
                K = &whole;
            }
            const Mat& I = up.im_cols;
            len = K->basis.cols() - I.cols();
            gen = len == 0 ? 0 : subquotient_gens(n, static_cast<int>(b_i), *K, I);
        }
        if (len < 0) throw internal_error("negative homology length");
        out.lengths.push_back(len);
        out.gens.push_back(gen);
    }
    if (budget_hit) {
        out.truncated = true;
        return out;
    }

    if (static_cast<int>(out.lengths.size()) > steps) return out;

    // free tail: everything beyond a finite resolution vanishes
    if (res.finite) {
        while (static_cast<int>(out.lengths.size()) <= steps) {
            out.lengths.push_back(0);
            out.gens.push_back(0);
        }
        return out;
    }

    if (!res.has_tail) {
        out.truncated = true;
        return out;
    }

    // semisimple tail: degrees tail_start + j (j >= 1) are tail_dim copies of
    // the degree-j value over the residue field
    const int t0 = res.tail_start;
    const bool self = m.uid() == eng_->residue_field().uid();
    const HomologyTable* ktab = nullptr;
    if (!self) {
        ktab = &table(kind, eng_->residue_field(), n, steps - t0);
        // re-find our memo slot is unnecessary; ktab stays valid within call
    }
    while (static_cast<int>(out.lengths.size()) <= steps) {
        int i = static_cast<int>(out.lengths.size());
        int j = i - t0;
        long long kl, kg;
        if (self) {
            if (j >= static_cast<int>(out.lengths.size())) { out.truncated = true; break; }
            kl = out.lengths[j];
            kg = out.gens[j];
        } else {
            if (j > ktab->available()) { out.truncated = true; break; }
            kl = ktab->lengths[j];
            kg = ktab->gens[j];
        }
        long long len, gen;
        if (!mul_ll(res.tail_dim, kl, len) || !mul_ll(res.tail_dim, kg, gen)) {
            out.overflowed = true;
            out.truncated = true;
            break;
        }
        out.lengths.push_back(len);
        out.gens.push_back(gen);
    }
    return out;
}

}  // namespace modcx
