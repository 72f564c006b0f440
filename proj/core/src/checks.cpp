#include "modcx/checks.hpp"

#include <algorithm>

namespace modcx {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

Lab::Lab(const ArtinAlgebra& r, GrowthConfig growth, ResolutionLimits rlim,
         HomologyLimits hlim)
    : r_(&r), growth_(growth), res_(r, rlim), hom_(res_, hlim) {}

const ModuleRep& Lab::k() {
    auto it = store_.find("__k");
    if (it == store_.end())
        it = store_.emplace("__k", ModuleRep::residue_field(*r_)).first;
    names_[it->second.uid()] = "k";
    return it->second;
}

const ModuleRep& Lab::R() {
    auto it = store_.find("__R");
    if (it == store_.end()) it = store_.emplace("__R", ModuleRep::free_module(*r_, 1)).first;
    names_[it->second.uid()] = "R";
    return it->second;
}

const ModuleRep& Lab::E() {
    auto it = store_.find("__E");
    if (it == store_.end()) it = store_.emplace("__E", matlis_dual(R())).first;
    names_[it->second.uid()] = "E";
    return it->second;
}

const ModuleRep& Lab::add(ModuleRep m, const std::string& display_name) {
    std::string key = m.uid();
    auto it = store_.emplace(key, std::move(m)).first;
    names_[key] = display_name;
    return it->second;
}

const ModuleRep& Lab::dual(const ModuleRep& m) {
    std::string key = "dual(" + m.uid() + ")";
    auto it = store_.find(key);
    if (it == store_.end()) {
        it = store_.emplace(key, matlis_dual(m)).first;
        names_[it->second.uid()] = display_name(m) + "^";
    }
    return it->second;
}

std::string Lab::display_name(const ModuleRep& m) const {
    auto it = names_.find(m.uid());
    return it != names_.end() ? it->second : m.uid().substr(0, 24);
}

const ModuleRep* Lab::find_by_uid(const std::string& uid) const {
    for (const auto& [key, m] : store_)
        if (m.uid() == uid) return &m;
    return nullptr;
}

std::vector<CheckVerdict> Lab::audit_resolutions(int steps) {
    std::vector<CheckVerdict> out;
    for (const auto& [uid, res] : res_.all_resolutions()) {
        const ModuleRep* m = uid == res_.residue_field().uid() ? &res_.residue_field()
                                                               : find_by_uid(uid);
        if (!m) continue;  // internal helper modules are not part of the audit
        ResolutionVerdict rv = verify_resolution(*res, *m);
        CheckVerdict v{"resolution-audit",
                       rv.pass ? Verdict::Holds : Verdict::Violated,
                       "M=" + display_name(*m) + " steps=" + std::to_string(steps) +
                           " materialized=" + std::to_string(res->materialized_steps()),
                       rv.pass ? std::to_string(rv.rank_checks_done) + " rank checks"
                               : rv.failure};
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<long long> Lab::betti(const ModuleRep& m, int steps) {
    return res_.betti(m, steps);
}

const HomologyTable& Lab::ext(const ModuleRep& m, const ModuleRep& n, int steps) {
    const HomologyTable& t = hom_.ext(m, n, steps);
    if (corrupt_ext_) {
        corrupt_ext_ = false;
        HomologyTable bad = t;
        if (!bad.lengths.empty()) bad.lengths[bad.lengths.size() / 2] += 1;
        std::string key = "E|" + m.uid() + "|" + n.uid();
        return corrupted_.insert_or_assign(key, std::move(bad)).first->second;
    }
    std::string key = "E|" + m.uid() + "|" + n.uid();
    auto it = corrupted_.find(key);
    return it != corrupted_.end() ? it->second : t;
}

const HomologyTable& Lab::tor(const ModuleRep& m, const ModuleRep& n, int steps) {
    return hom_.tor(m, n, steps);
}

GrowthClass Lab::cx_pair(const ModuleRep& m, const ModuleRep& n, int steps) {
    const HomologyTable& t = ext(m, n, steps);
    Sequence nu(t.gens.begin(), t.gens.end());
    Sequence len(t.lengths.begin(), t.lengths.end());
    GrowthClass cnu = classify(nu, growth_);
    GrowthClass clen = classify(len, growth_);
    if (cnu.conclusive() && clen.conclusive() && cnu.rank() != clen.rank())
        throw internal_error("generator/length growth classes disagree on Ext(" +
                             display_name(m) + "," + display_name(n) + "): " +
                             cnu.to_string() + " vs " + clen.to_string());
    GrowthClass out = cnu.conclusive() ? cnu : clen;
    out.evidence.source = cnu.conclusive() ? "nu" : "len";
    out.evidence.input_truncated = t.truncated;
    return out;
}

GrowthClass Lab::cx_mod(const ModuleRep& m, int steps) { return cx_pair(m, k(), steps); }
GrowthClass Lab::px_mod(const ModuleRep& n, int steps) { return cx_pair(k(), n, steps); }

namespace {

// ring identity is prefixed by the suite runner; instances stay compact
std::string inst(Lab& lab, const ModuleRep& m, const ModuleRep* n, int steps) {
    std::string s = "M=" + lab.display_name(m);
    if (n) s += " N=" + lab.display_name(*n);
    s += " steps=" + std::to_string(steps);
    return s;
}

long long rad_len(const ModuleRep& m, int j) {
    std::vector<int> lens = m.radical_power_lengths();
    return j < static_cast<int>(lens.size()) ? lens[j] : 0;
}

bool table_vanishes_positive(const HomologyTable& t, int* nonzero_at) {
    for (int i = 1; i <= t.available(); ++i)
        if (t.lengths[i] != 0) {
            if (nonzero_at) *nonzero_at = i;
            return false;
        }
    return true;
}

std::string class_note(const char* label, const GrowthClass& g) {
    return std::string(label) + "=" + g.to_string();
}

}  // namespace

CheckVerdict check_upper_bound(Lab& lab, const ModuleRep& m, const ModuleRep& n, int steps) {
    CheckVerdict v{"upper-bound", Verdict::Holds, inst(lab, m, &n, steps), ""};
    const HomologyTable& t = lab.ext(m, n, steps);
    const FreeResolution& res = lab.resolutions().resolve(m, steps + 1);
    long long ln = n.length();
    for (int i = 0; i <= t.available(); ++i) {
        long long b = *res.betti_at(i);
        if (t.lengths[i] > ln * b) {
            v.verdict = Verdict::Violated;
            v.witness = "i=" + std::to_string(i) + ": ext=" + std::to_string(t.lengths[i]) +
                        " > l(N)*b_i=" + std::to_string(ln * b);
            return v;
        }
    }
    GrowthClass cxx = lab.cx_pair(m, n, steps);
    GrowthClass cx = lab.cx_mod(m, steps);
    GrowthClass px = lab.px_mod(n, steps);
    if (cxx.conclusive() && cx.conclusive() && px.conclusive()) {
        if (cxx.rank() > std::min(cx.rank(), px.rank())) {
            v.verdict = Verdict::Violated;
            v.witness = class_note("cxx", cxx) + " exceeds min(" + class_note("cx", cx) +
                        ", " + class_note("px", px) + ")";
            return v;
        }
    }
    v.witness = "degrees 0.." + std::to_string(t.available());
    return v;
}

CheckVerdict check_lower_bound(Lab& lab, const ModuleRep& m, const ModuleRep& n, int steps,
                               const std::vector<RingElement>* user_ideal_gens) {
    CheckVerdict v{"lower-bound", Verdict::Holds, inst(lab, m, &n, steps), ""};
    const ArtinAlgebra& r = lab.ring();
    IdealSubspace ideal = user_ideal_gens ? r.ideal_closure(*user_ideal_gens)
                                          : annihilator_ideal(radical_submodule(n));
    // the hypothesis (I*m)N = 0
    for (int c = 0; c < ideal.basis.cols(); ++c) {
        RingElement a{ideal.basis.col(c)};
        for (int j = 0; j < r.nvars(); ++j) {
            RingElement xa{r.var_action(j).apply(a.coeffs)};
            if (!n.ring_operator(xa).is_zero()) {
                v.verdict = Verdict::NotApplicable;
                v.witness = "supplied ideal fails (I*m)N = 0";
                return v;
            }
        }
    }
    long long q = ideal.quotient_length();
    long long ln = n.length(), nu = n.min_gens();
    const HomologyTable& t = lab.ext(m, n, steps);
    const FreeResolution& res = lab.resolutions().resolve(m, steps + 1);
    for (int i = 0; i <= t.available(); ++i) {
        long long bi = *res.betti_at(i);
        long long bprev = i == 0 ? 0 : *res.betti_at(i - 1);
        long long bound = ln * bi - q * nu * (bprev + bi);
        if (t.lengths[i] < bound) {
            v.verdict = Verdict::Violated;
            v.witness = "i=" + std::to_string(i) + ": ext=" + std::to_string(t.lengths[i]) +
                        " < bound=" + std::to_string(bound) + " (l(R/I)=" +
                        std::to_string(q) + ")";
            return v;
        }
    }
    v.witness = "degrees 0.." + std::to_string(t.available()) + ", l(R/I)=" +
                std::to_string(q);
    return v;
}

namespace {

// shared branch logic: class transfer with optional one-step slack
Verdict class_transfer(const GrowthClass& cxx, const GrowthClass& target, bool slack,
                       std::string& note) {
    if (!target.conclusive() || !cxx.conclusive()) {
        note = class_note("cxx", cxx) + ", " + class_note("target", target);
        return Verdict::Inconclusive;
    }
    if (slack) {
        if (target.tag == GrowthClass::Tag::Infinite) {
            // one-step slack below an infinite class is not testable from data
            note = "equality margin with infinite class";
            return Verdict::Inconclusive;
        }
        long long lo = std::max(0ll, target.rank() - 1);
        if (cxx.rank() == target.rank() || cxx.rank() == lo) return Verdict::Holds;
        note = class_note("cxx", cxx) + " not in {" + std::to_string(lo) + "," +
               std::to_string(target.rank()) + "}";
        return Verdict::Violated;
    }
    if (cxx.rank() == target.rank()) return Verdict::Holds;
    note = class_note("cxx", cxx) + " != " + class_note("target", target);
    return Verdict::Violated;
}

Verdict combine_branches(const std::vector<Verdict>& parts) {
    bool any_viol = false, any_holds = false, any_inc = false;
    for (Verdict p : parts) {
        if (p == Verdict::Violated) any_viol = true;
        if (p == Verdict::Holds) any_holds = true;
        if (p == Verdict::Inconclusive) any_inc = true;
    }
    if (any_viol) return Verdict::Violated;
    if (any_inc) return Verdict::Inconclusive;
    if (any_holds) return Verdict::Holds;
    return Verdict::NotApplicable;
}

}  // namespace

CheckVerdict check_margin_transfer(Lab& lab, const ModuleRep& m, const ModuleRep& n,
                                   int steps) {
    CheckVerdict v{"margin-transfer", Verdict::NotApplicable, inst(lab, m, &n, steps), ""};
    if (n.length() == 0) return v;
    IdealSubspace ideal = annihilator_ideal(radical_submodule(n));
    long long q = ideal.quotient_length();
    long long ln = n.length();
    std::vector<Verdict> parts;
    std::string notes;

    long long margin1 = 2 * q * n.min_gens();
    if (ln >= margin1) {
        GrowthClass cxx = lab.cx_pair(m, n, steps);
        GrowthClass cx = lab.cx_mod(m, steps);
        std::string note;
        parts.push_back(class_transfer(cxx, cx, ln == margin1, note));
        if (!note.empty()) notes += "[1] " + note + " ";
    }
    long long margin2 = 2 * q * lab.dual(n).min_gens();
    if (ln >= margin2) {
        GrowthClass cxx = lab.cx_pair(n, m, steps);
        GrowthClass px = lab.px_mod(m, steps);
        std::string note;
        parts.push_back(class_transfer(cxx, px, ln == margin2, note));
        if (!note.empty()) notes += "[2] " + note;
    }
    v.verdict = combine_branches(parts);
    v.witness = notes.empty() ? "l(N)=" + std::to_string(ln) + " l(R/I)=" + std::to_string(q)
                              : notes;
    return v;
}

CheckVerdict check_square_zero_transfer(Lab& lab, const ModuleRep& m, const ModuleRep& n,
                                        int steps) {
    CheckVerdict v{"square-zero-transfer", Verdict::NotApplicable, inst(lab, m, &n, steps),
                   ""};
    if (n.length() == 0 || rad_len(n, 2) != 0) return v;
    long long a = n.min_gens(), b = rad_len(n, 1);
    std::vector<Verdict> parts;
    std::string notes;
    if (b >= a) {
        GrowthClass cxx = lab.cx_pair(m, n, steps);
        GrowthClass cx = lab.cx_mod(m, steps);
        std::string note;
        parts.push_back(class_transfer(cxx, cx, b == a, note));
        if (!note.empty()) notes += "[MN] " + note + " ";
    }
    if (b <= a) {
        GrowthClass cxx = lab.cx_pair(n, m, steps);
        GrowthClass px = lab.px_mod(m, steps);
        std::string note;
        parts.push_back(class_transfer(cxx, px, b == a, note));
        if (!note.empty()) notes += "[NM] " + note;
    }
    v.verdict = combine_branches(parts);
    if (v.witness.empty())
        v.witness = "l(mN)=" + std::to_string(b) + " nu(N)=" + std::to_string(a) +
                    (notes.empty() ? "" : " " + notes);
    return v;
}

CheckVerdict check_free_or_injective(Lab& lab, const ModuleRep& n, int steps) {
    CheckVerdict v{"free-or-injective", Verdict::NotApplicable, inst(lab, n, nullptr, steps),
                   ""};
    if (n.length() == 0 || rad_len(n, 2) != 0) return v;
    const HomologyTable& t = lab.ext(n, n, steps);
    int bad = -1;
    if (!table_vanishes_positive(t, &bad)) {
        v.witness = "Ext^" + std::to_string(bad) + "(N,N) != 0";
        return v;
    }
    if (t.available() < 1) {
        v.verdict = Verdict::Inconclusive;
        v.witness = "no positive degrees available";
        return v;
    }
    bool free = is_free(n), inj = is_injective(n);
    if (free || inj) {
        v.verdict = Verdict::Holds;
        v.witness = free ? "free" : "injective";
        if (t.truncated) v.witness += " (vanishing observed to degree " +
                                      std::to_string(t.available()) + ")";
    } else {
        v.verdict = Verdict::Violated;
        v.witness = "self-orthogonal module is neither free nor injective";
    }
    return v;
}

CheckVerdict check_socle_heavy(Lab& lab, const ModuleRep& m, int steps) {
    CheckVerdict v{"socle-heavy", Verdict::NotApplicable, inst(lab, m, nullptr, steps), ""};
    const ArtinAlgebra& r = lab.ring();
    long long soc = r.socle_length(), l = r.dim();
    if (2 * soc <= l) return v;
    const FreeResolution& res = lab.resolutions().resolve(m, steps);
    for (int i = 1; i + 1 <= res.max_betti_index(); ++i) {
        long long bi = *res.betti_at(i), bnext = *res.betti_at(i + 1);
        if ((l - soc) * bnext < soc * bi) {
            v.verdict = Verdict::Violated;
            v.witness = "i=" + std::to_string(i) + ": (l-r)*b_{i+1}=" +
                        std::to_string((l - soc) * bnext) + " < r*b_i=" +
                        std::to_string(soc * bi);
            return v;
        }
    }
    GrowthClass cxx = lab.cx_pair(m, lab.R(), steps);
    GrowthClass cx = lab.cx_mod(m, steps);
    if (!cxx.conclusive() || !cx.conclusive()) {
        v.verdict = Verdict::Inconclusive;
        v.witness = class_note("cxx(M,R)", cxx) + ", " + class_note("cx", cx);
        return v;
    }
    bool allowed = cx.tag == GrowthClass::Tag::Zero || cx.tag == GrowthClass::Tag::Infinite;
    if (cxx.rank() == cx.rank() && allowed) {
        v.verdict = Verdict::Holds;
        v.witness = class_note("class", cx);
    } else {
        v.verdict = Verdict::Violated;
        v.witness = class_note("cxx(M,R)", cxx) + " vs " + class_note("cx", cx) +
                    (allowed ? "" : " (class outside {Zero, Infinite})");
    }
    return v;
}

CheckVerdict check_non_gorenstein_small(Lab& lab, const ModuleRep& m, int steps) {
    CheckVerdict v{"nongor-small", Verdict::NotApplicable, inst(lab, m, nullptr, steps), ""};
    const ArtinAlgebra& r = lab.ring();
    if (r.gorenstein()) return v;
    const auto& ml = r.m_power_lengths();
    auto mlen = [&](int j) { return j < static_cast<int>(ml.size()) ? ml[j] : 0; };
    bool part1 = mlen(2) == 0;
    bool part2 = !part1 && mlen(3) == 0 && 2 * r.socle_length() > r.dim() - 2;
    if (!part1 && !part2) return v;
    GrowthClass cxx = lab.cx_pair(m, lab.R(), steps);
    GrowthClass cx = lab.cx_mod(m, steps);
    if (!cxx.conclusive() || !cx.conclusive()) {
        v.verdict = Verdict::Inconclusive;
        v.witness = class_note("cxx(M,R)", cxx) + ", " + class_note("cx", cx);
        return v;
    }
    bool allowed = cx.tag == GrowthClass::Tag::Zero ||
                   cx.tag == GrowthClass::Tag::Infinite ||
                   (part2 && cx.tag == GrowthClass::Tag::Polynomial && cx.degree == 1);
    if (cxx.rank() == cx.rank() && allowed) {
        v.verdict = Verdict::Holds;
        v.witness = class_note("class", cx) + (part1 ? " (m^2=0)" : " (m^3=0)");
    } else {
        v.verdict = Verdict::Violated;
        v.witness = class_note("cxx(M,R)", cxx) + " vs " + class_note("cx", cx) +
                    (allowed ? "" : " (class outside the allowed set)");
    }
    return v;
}

CheckVerdict check_gorenstein_cube_self(Lab& lab, const ModuleRep& m, int steps) {
    CheckVerdict v{"gor-cube-self", Verdict::NotApplicable, inst(lab, m, nullptr, steps), ""};
    const ArtinAlgebra& r = lab.ring();
    const auto& ml = r.m_power_lengths();
    bool m3_zero = 3 >= static_cast<int>(ml.size()) ? true : ml[3] == 0;
    if (!r.gorenstein() || !m3_zero) return v;
    GrowthClass cxx = lab.cx_pair(m, m, steps);
    GrowthClass cx = lab.cx_mod(m, steps);
    if (!cxx.conclusive() || !cx.conclusive()) {
        v.verdict = Verdict::Inconclusive;
        v.witness = class_note("cxx(M,M)", cxx) + ", " + class_note("cx", cx);
        return v;
    }
    if (cxx.rank() == cx.rank()) {
        v.verdict = Verdict::Holds;
        v.witness = class_note("class", cx);
    } else {
        v.verdict = Verdict::Violated;
        v.witness = class_note("cxx(M,M)", cxx) + " != " + class_note("cx", cx);
    }
    return v;
}

CheckVerdict check_cube_self_orthogonal(Lab& lab, const ModuleRep& m, int steps) {
    CheckVerdict v{"cube-self-orthogonal", Verdict::NotApplicable,
                   inst(lab, m, nullptr, steps), ""};
    const ArtinAlgebra& r = lab.ring();
    const auto& ml = r.m_power_lengths();
    auto mlen = [&](int j) { return j < static_cast<int>(ml.size()) ? ml[j] : 0; };
    if (!(mlen(3) == 0 && mlen(2) != 0)) return v;
    const HomologyTable& t = lab.ext(m, m, steps);
    int bad = -1;
    if (!table_vanishes_positive(t, &bad)) {
        v.witness = "Ext^" + std::to_string(bad) + "(M,M) != 0";
        return v;
    }
    if (t.available() < 1) {
        v.verdict = Verdict::Inconclusive;
        v.witness = "no positive degrees available";
        return v;
    }
    GrowthClass cxx = lab.cx_pair(m, lab.R(), steps);
    GrowthClass cx = lab.cx_mod(m, steps);
    if (!cxx.conclusive() || !cx.conclusive()) {
        v.verdict = Verdict::Inconclusive;
        v.witness = class_note("cxx(M,R)", cxx) + ", " + class_note("cx", cx);
        return v;
    }
    bool allowed = cx.tag == GrowthClass::Tag::Zero ||
                   cx.tag == GrowthClass::Tag::Infinite ||
                   (cx.tag == GrowthClass::Tag::Polynomial && cx.degree == 1);
    if (cxx.rank() == cx.rank() && allowed) {
        v.verdict = Verdict::Holds;
        v.witness = class_note("class", cx);
    } else {
        v.verdict = Verdict::Violated;
        v.witness = class_note("cxx(M,R)", cxx) + " vs " + class_note("cx", cx);
    }
    return v;
}

CheckVerdict check_duality(Lab& lab, const ModuleRep& m, const ModuleRep& n, int steps) {
    CheckVerdict v{"duality", Verdict::Holds, inst(lab, m, &n, steps), ""};
    const HomologyTable& e = lab.ext(m, n, steps);
    const HomologyTable& t = lab.tor(m, lab.dual(n), steps);
    int upto = std::min(e.available(), t.available());
    if (upto < 0) {
        v.verdict = Verdict::Inconclusive;
        v.witness = "no common degrees";
        return v;
    }
    for (int i = 0; i <= upto; ++i) {
        if (e.lengths[i] != t.lengths[i]) {
            v.verdict = Verdict::Violated;
            v.witness = "i=" + std::to_string(i) + ": l(Ext)=" +
                        std::to_string(e.lengths[i]) + " != l(Tor dual)=" +
                        std::to_string(t.lengths[i]);
            return v;
        }
    }
    GrowthClass cx = lab.cx_mod(m, steps);
    GrowthClass px = lab.px_mod(lab.dual(m), steps);
    if (cx.conclusive() && px.conclusive() && cx.rank() != px.rank()) {
        v.verdict = Verdict::Violated;
        v.witness = class_note("cx M", cx) + " != " + class_note("px M^", px);
        return v;
    }
    v.witness = "degrees 0.." + std::to_string(upto);
    return v;
}

CheckVerdict check_aar_witness(Lab& lab, const ModuleRep& m, int steps) {
    CheckVerdict v{"aar", Verdict::NotApplicable, inst(lab, m, nullptr, steps), ""};
    if (m.length() == 0) return v;
    const HomologyTable& tr = lab.ext(m, lab.R(), steps);
    int bad = -1;
    if (!table_vanishes_positive(tr, &bad)) {
        v.witness = "Ext^" + std::to_string(bad) + "(M,R) != 0";
        return v;
    }
    const HomologyTable& tm = lab.ext(m, m, steps);
    if (!table_vanishes_positive(tm, &bad)) {
        v.witness = "Ext^" + std::to_string(bad) + "(M,M) != 0";
        return v;
    }
    if (tr.available() < 1 || tm.available() < 1) {
        v.verdict = Verdict::Inconclusive;
        v.witness = "no positive degrees available";
        return v;
    }
    if (is_free(m)) {
        v.verdict = Verdict::Holds;
        v.witness = "free";
    } else {
        // never silently dropped: a non-free module passing the vanishing
        // gates at this truncation is flagged for review
        v.verdict = Verdict::Violated;
        v.witness = "vanishing Ext(M,R) and Ext(M,M) up to degree " +
                    std::to_string(std::min(tr.available(), tm.available())) +
                    " but M is not free";
    }
    return v;
}

CheckVerdict check_complete_intersection(Lab& lab, const ModuleRep& m, const ModuleRep& n,
                                         int steps) {
    CheckVerdict v{"complete-intersection", Verdict::NotApplicable,
                   inst(lab, m, &n, steps), ""};
    const ArtinAlgebra& r = lab.ring();
    if (!r.ci_codim) return v;
    long long codim = *r.ci_codim;
    GrowthClass cxmm = lab.cx_pair(m, m, steps);
    GrowthClass cx = lab.cx_mod(m, steps);
    GrowthClass px = lab.px_mod(m, steps);
    std::vector<Verdict> parts;
    std::string notes;
    if (cxmm.conclusive() && cx.conclusive() && px.conclusive()) {
        bool ok = cxmm.rank() == cx.rank() && cx.rank() == px.rank() && cx.rank() <= codim;
        parts.push_back(ok ? Verdict::Holds : Verdict::Violated);
        if (!ok)
            notes += class_note("cxx(M,M)", cxmm) + " " + class_note("cx", cx) + " " +
                     class_note("px", px) + " codim=" + std::to_string(codim) + " ";
    } else {
        parts.push_back(Verdict::Inconclusive);
    }
    GrowthClass cxmn = lab.cx_pair(m, n, steps);
    GrowthClass cxnm = lab.cx_pair(n, m, steps);
    GrowthClass cxn = lab.cx_mod(n, steps);
    if (cxmn.conclusive() && cxnm.conclusive() && cx.conclusive() && cxn.conclusive()) {
        bool ok = cxmn.rank() == cxnm.rank() &&
                  cxmn.rank() <= std::min(cx.rank(), cxn.rank());
        parts.push_back(ok ? Verdict::Holds : Verdict::Violated);
        if (!ok)
            notes += class_note("cxx(M,N)", cxmn) + " " + class_note("cxx(N,M)", cxnm);
    } else {
        parts.push_back(Verdict::Inconclusive);
    }
    v.verdict = combine_branches(parts);
    v.witness = notes;
    return v;
}

const std::vector<std::string>& check_registry() {
    static const std::vector<std::string> ids = {
        "upper-bound",       "lower-bound",        "margin-transfer",
        "square-zero-transfer", "free-or-injective", "socle-heavy",
        "nongor-small",      "gor-cube-self",      "cube-self-orthogonal",
        "duality",           "aar",                "complete-intersection",
        "resolution-audit",
    };
    return ids;
}

int CheckReport::total_violated() const {
    int n = 0;
    for (const auto& [id, c] : counts) n += c.violated;
    return n;
}

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) {
    std::uint64_t h = 14695981039346656037ull ^ seed;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

struct Tally {
    CheckReport* report;
    std::map<std::string, CheckCounts> counts;
    std::string ring;

    void record(CheckVerdict v) {
        v.instance = "ring=" + ring + " " + v.instance;
        CheckCounts& c = counts[v.check_id];
        switch (v.verdict) {
            case Verdict::Holds: ++c.holds; break;
            case Verdict::Violated:
                ++c.violated;
                report->violations.push_back(v);
                break;
            case Verdict::Inconclusive:
                ++c.inconclusive;
                report->inconclusives.push_back(v);
                break;
            case Verdict::NotApplicable: ++c.not_applicable; break;
        }
    }
};

void run_ring_instances(Lab& lab, Tally& tally, const std::vector<const ModuleRep*>& mods,
                        const std::vector<std::pair<const ModuleRep*, const ModuleRep*>>& pairs,
                        int steps) {
    for (const ModuleRep* m : mods) {
        tally.record(check_socle_heavy(lab, *m, steps));
        tally.record(check_non_gorenstein_small(lab, *m, steps));
        tally.record(check_gorenstein_cube_self(lab, *m, steps));
        tally.record(check_cube_self_orthogonal(lab, *m, steps));
        tally.record(check_aar_witness(lab, *m, steps));
        tally.record(check_free_or_injective(lab, *m, steps));
    }
    for (const auto& [m, n] : pairs) {
        tally.record(check_upper_bound(lab, *m, *n, steps));
        tally.record(check_lower_bound(lab, *m, *n, steps));
        tally.record(check_margin_transfer(lab, *m, *n, steps));
        tally.record(check_square_zero_transfer(lab, *m, *n, steps));
        tally.record(check_duality(lab, *m, *n, steps));
        tally.record(check_complete_intersection(lab, *m, *n, steps));
    }
}

}  // namespace

CheckReport run_suite(const SuiteConfig& cfg) {
    std::vector<SuiteRing> rings;
    if (cfg.suite == "paper") {
        for (const std::string& name : FixtureCatalog::names())
            rings.push_back({name, FixtureCatalog::load(name, cfg.prime), {}});
    } else if (cfg.suite == "corpus") {
        if (cfg.corpus_ring.empty()) throw input_error("corpus suite needs a ring name");
        rings.push_back(
            {cfg.corpus_ring, FixtureCatalog::load(cfg.corpus_ring, cfg.prime), {}});
    } else {
        throw input_error("unknown suite '" + cfg.suite + "'");
    }
    return run_suite(cfg, rings);
}

CheckReport run_suite(const SuiteConfig& cfg, const std::vector<SuiteRing>& rings) {
    CheckReport report;
    report.suite = cfg.suite;
    report.seed = cfg.seed;
    report.steps = cfg.steps;
    report.prime = cfg.prime;
    for (const SuiteRing& sr : rings) report.rings.push_back(sr.name);

    Tally tally{&report, {}, ""};
    for (const std::string& id : check_registry()) tally.counts[id] = CheckCounts{};

    bool corruption_pending = cfg.corrupt_ext_hook;
    for (const SuiteRing& sr : rings) {
        Lab lab(sr.ring, cfg.growth, cfg.res_limits, cfg.hom_limits);
        if (corruption_pending) {
            lab.arm_ext_corruption();
            corruption_pending = false;
        }
        tally.ring = sr.name;

        std::vector<const ModuleRep*> mods{&lab.k(), &lab.R(), &lab.E()};
        for (const auto& [mname, pres] : sr.named_modules)
            mods.push_back(&lab.add(ModuleRep::realize(sr.ring, pres), mname));
        int count = cfg.suite == "paper" ? cfg.random_per_ring : cfg.corpus_modules;
        std::uint64_t ring_seed = fnv1a(sr.name, cfg.seed);
        std::vector<const ModuleRep*> randoms;
        for (int i = 0; i < count; ++i) {
            std::uint64_t mseed = fnv1a("module" + std::to_string(i), ring_seed);
            ModulePresentation p = random_module(sr.ring, mseed, 3, 5);
            const ModuleRep& m = lab.add(ModuleRep::realize(sr.ring, p),
                                         "rand" + std::to_string(i));
            randoms.push_back(&m);
            mods.push_back(&m);
        }
        report.instances += static_cast<int>(mods.size());

        std::vector<std::pair<const ModuleRep*, const ModuleRep*>> pairs;
        for (const ModuleRep* m : mods) {
            pairs.emplace_back(m, &lab.k());
            pairs.emplace_back(m, &lab.R());
            pairs.emplace_back(m, m);
        }
        int samples = std::min<int>(cfg.pair_samples, static_cast<int>(randoms.size()));
        for (int i = 0; i < samples; ++i)
            pairs.emplace_back(randoms[i], randoms[(i + 1) % randoms.size()]);

        run_ring_instances(lab, tally, mods, pairs, cfg.steps);
        if (cfg.audit_resolutions)
            for (CheckVerdict& v : lab.audit_resolutions(cfg.steps))
                tally.record(std::move(v));
    }

    for (const std::string& id : check_registry())
        report.counts.emplace_back(id, tally.counts[id]);
    return report;
}

}  // namespace modcx
