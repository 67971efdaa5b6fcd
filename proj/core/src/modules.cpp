#include "modinv/modules.hpp"

#include <algorithm>
#include <list>

namespace modinv {

int modterm_cmp(const ModTerm& a, const ModTerm& b, const Ambient& R) {
    if (a.comp != b.comp) return a.comp < b.comp ? +1 : -1;
    return mono_cmp(a.mono, b.mono, R);
}

ModuleElement ModuleElement::make(const FreeModule& F, std::vector<ModTerm> terms) {
    const Ambient& R = *F.ring;
    std::sort(terms.begin(), terms.end(), [&](const ModTerm& x, const ModTerm& y) {
        return modterm_cmp(x, y, R) > 0;
    });
    std::vector<ModTerm> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        fp_t c = R.field.reduce(t.coeff);
        if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
            out.back().coeff = R.field.add(out.back().coeff, c);
            if (out.back().coeff == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back({t.comp, t.mono, c});
        }
    }
    ModuleElement e;
    e.t_ = std::move(out);
    return e;
}

ModuleElement ModuleElement::from_sorted(std::vector<ModTerm> terms) {
    ModuleElement e;
    e.t_ = std::move(terms);
    return e;
}

ModuleElement ModuleElement::basis(const FreeModule& F, int comp) {
    ModuleElement e;
    e.t_.push_back({comp, Monomial::one(*F.ring), 1});
    return e;
}

const ModTerm& ModuleElement::leading_term() const {
    if (t_.empty()) throw InternalError("leading term of zero module element");
    return t_.front();
}

ModuleElement ModuleElement::minus_term_times(fp_t c, const Monomial& m,
                                              const ModuleElement& g, const Ambient& R) const {
    c = R.field.reduce(c);
    std::vector<ModTerm> out;
    out.reserve(t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
        ModTerm gt{g.t_[j].comp, g.t_[j].mono.times(m, R), 0};
        int cc = modterm_cmp(t_[i], gt, R);
        if (cc > 0) {
            out.push_back(t_[i++]);
        } else if (cc < 0) {
            fp_t v = R.field.neg(R.field.mul(c, g.t_[j].coeff));
            if (v != 0) out.push_back({gt.comp, std::move(gt.mono), v});
            ++j;
        } else {
            fp_t v = R.field.sub(t_[i].coeff, R.field.mul(c, g.t_[j].coeff));
            if (v != 0) out.push_back({t_[i].comp, t_[i].mono, v});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) out.push_back(t_[i]);
    for (; j < g.t_.size(); ++j) {
        fp_t v = R.field.neg(R.field.mul(c, g.t_[j].coeff));
        if (v != 0) out.push_back({g.t_[j].comp, g.t_[j].mono.times(m, R), v});
    }
    return from_sorted(std::move(out));
}

ModuleElement ModuleElement::times_term(const Monomial& m, fp_t c, const Ambient& R) const {
    c = R.field.reduce(c);
    if (c == 0) return ModuleElement();
    std::vector<ModTerm> out;
    out.reserve(t_.size());
    for (auto& t : t_) out.push_back({t.comp, t.mono.times(m, R), R.field.mul(t.coeff, c)});
    return from_sorted(std::move(out));
}

ModuleElement ModuleElement::plus(const ModuleElement& g, const Ambient& R) const {
    return minus_term_times(R.field.neg(1), Monomial::one(R), g, R);
}

ModuleElement ModuleElement::scaled(fp_t c, const Ambient& R) const {
    c = R.field.reduce(c);
    if (c == 0) return ModuleElement();
    std::vector<ModTerm> out = t_;
    for (auto& t : out) t.coeff = R.field.mul(t.coeff, c);
    return from_sorted(std::move(out));
}

ModuleElement ModuleElement::monic(const Ambient& R) const {
    if (t_.empty()) return *this;
    return scaled(R.field.inv(t_.front().coeff), R);
}

long ModuleElement::degree(const FreeModule& F) const {
    const ModTerm& lt = leading_term();
    return lt.mono.degree() + F.degrees[static_cast<size_t>(lt.comp)];
}

bool ModuleElement::is_homogeneous(const FreeModule& F) const {
    if (t_.empty()) return true;
    long d = t_.front().mono.degree() + F.degrees[static_cast<size_t>(t_.front().comp)];
    for (auto& t : t_)
        if (t.mono.degree() + F.degrees[static_cast<size_t>(t.comp)] != d) return false;
    return true;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].comp != o.t_[i].comp || !(t_[i].mono == o.t_[i].mono) ||
            t_[i].coeff != o.t_[i].coeff)
            return false;
    return true;
}

namespace {

ModuleElement reduce_full_mod(const ModuleElement& v, const std::vector<ModuleElement>& G,
                              const Ambient& R) {
    ModuleElement work = v;
    std::vector<ModTerm> remainder;
    while (!work.is_zero()) {
        const ModTerm& lt = work.leading_term();
        const ModuleElement* divisor = nullptr;
        std::optional<Monomial> q;
        for (auto& g : G) {
            if (g.is_zero()) continue;
            const ModTerm& glt = g.leading_term();
            if (glt.comp != lt.comp) continue;
            q = lt.mono.divided_by(glt.mono, R);
            if (q) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            fp_t c = R.field.div(lt.coeff, divisor->leading_term().coeff);
            work = work.minus_term_times(c, *q, *divisor, R);
        } else {
            remainder.push_back(lt);
            std::vector<ModTerm> rest(work.terms().begin() + 1, work.terms().end());
            work = ModuleElement::from_sorted(std::move(rest));
        }
    }
    return ModuleElement::from_sorted(std::move(remainder));
}

struct MPair {
    size_t i, j;
    int comp;
    Monomial lcm;
    long deg;  // lcm degree + component degree
};

bool mpair_before(const MPair& a, const MPair& b, const Ambient& R) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.comp != b.comp) return a.comp < b.comp;
    int c = mono_cmp(a.lcm, b.lcm, R);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

std::vector<ModuleElement> interreduce_module(std::vector<ModuleElement> G, const Ambient& R) {
    std::sort(G.begin(), G.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        return modterm_cmp(a.leading_term(), b.leading_term(), R) < 0;
    });
    std::vector<ModuleElement> kept;
    for (auto& g : G) {
        bool dom = false;
        for (auto& h : kept) {
            const ModTerm& hl = h.leading_term();
            const ModTerm& gl = g.leading_term();
            if (hl.comp == gl.comp && hl.mono.divides(gl.mono)) {
                dom = true;
                break;
            }
        }
        if (!dom) kept.push_back(std::move(g));
    }
    std::vector<ModuleElement> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModuleElement> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        ModuleElement r = reduce_full_mod(kept[i], others, R);
        if (!r.is_zero()) out.push_back(r.monic(R));
    }
    std::sort(out.begin(), out.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        return modterm_cmp(a.leading_term(), b.leading_term(), R) < 0;
    });
    return out;
}

}  // namespace

ModuleGB module_groebner(const FreeModule& F, std::vector<ModuleElement> gens, const Caps& caps) {
    const Ambient& R = *F.ring;

    std::vector<ModuleElement> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous(F))
            throw ValidationError("module generators must be homogeneous");
        G.push_back(g.monic(R));
    }

    std::list<MPair> pairs;
    auto lcm_of = [&](size_t i, size_t j) {
        return G[i].leading_term().mono.lcm(G[j].leading_term().mono, R);
    };

    // Gebauer-Moeller update, componentwise; no coprimality criterion (it is
    // unsound for module S-pairs).
    auto update_pairs = [&](size_t t) {
        const ModTerm& ltt = G[t].leading_term();
        std::vector<MPair> cand;
        for (size_t i = 0; i < t; ++i) {
            if (G[i].leading_term().comp != ltt.comp) continue;
            Monomial l = lcm_of(i, t);
            long deg = l.degree() + F.degrees[static_cast<size_t>(ltt.comp)];
            cand.push_back({i, t, ltt.comp, std::move(l), deg});
        }
        std::vector<bool> keep(cand.size(), true);
        for (size_t a = 0; a < cand.size(); ++a) {
            for (size_t b = 0; b < cand.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (!(cand[b].lcm == cand[a].lcm) && cand[b].lcm.divides(cand[a].lcm))
                    keep[a] = false;
            }
        }
        for (size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = a + 1; b < cand.size(); ++b)
                if (keep[b] && cand[b].lcm == cand[a].lcm) keep[b] = false;
        }
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (it->comp == ltt.comp && ltt.mono.divides(it->lcm) &&
                !(lcm_of(it->i, t) == it->lcm) && !(lcm_of(it->j, t) == it->lcm)) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
        for (size_t a = 0; a < cand.size(); ++a)
            if (keep[a]) pairs.push_back(std::move(cand[a]));
    };

    for (size_t t = 0; t < G.size(); ++t) update_pairs(t);

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
            if (mpair_before(*it, *best, R)) best = it;
        MPair p = *best;
        pairs.erase(best);

        const ModuleElement& f = G[p.i];
        const ModuleElement& g = G[p.j];
        Monomial qf = *p.lcm.divided_by(f.leading_term().mono, R);
        Monomial qg = *p.lcm.divided_by(g.leading_term().mono, R);
        ModuleElement s = f.times_term(qf, R.field.inv(f.leading_term().coeff), R)
                              .minus_term_times(R.field.inv(g.leading_term().coeff), qg, g, R);
        s = reduce_full_mod(s, G, R);
        if (s.is_zero()) continue;
        if (s.degree(F) > caps.max_degree)
            throw ResourceLimit("module basis degree " + std::to_string(s.degree(F)) +
                                " exceeds cap");
        G.push_back(s.monic(R));
        if (G.size() > caps.max_basis)
            throw ResourceLimit("module basis size exceeds cap");
        update_pairs(G.size() - 1);
    }

    return ModuleGB{F, interreduce_module(std::move(G), R)};
}

ModuleElement module_normal_form(const ModuleElement& v, const ModuleGB& G) {
    return reduce_full_mod(v, G.elements, *G.F.ring);
}

bool in_module(const ModuleElement& v, const ModuleGB& G) {
    return module_normal_form(v, G).is_zero();
}

ColumnSpan::ColumnSpan(FreeModule target, std::vector<ModuleElement> columns, const Caps& caps,
                       std::vector<long> source_degrees)
    : target_(std::move(target)) {
    const Ambient& R = *target_.ring;
    source_.ring = target_.ring;
    if (source_degrees.empty()) {
        for (auto& c : columns) {
            if (c.is_zero())
                throw InternalError("ColumnSpan: zero column without explicit degree");
            source_.degrees.push_back(c.degree(target_));
        }
    } else {
        if (source_degrees.size() != columns.size())
            throw InternalError("ColumnSpan: source degree count mismatch");
        source_.degrees = std::move(source_degrees);
    }
    aug_.ring = target_.ring;
    aug_.degrees = target_.degrees;
    aug_.degrees.insert(aug_.degrees.end(), source_.degrees.begin(), source_.degrees.end());
    const int r = target_.rank();

    std::vector<ModuleElement> gens;
    gens.reserve(columns.size());
    for (size_t j = 0; j < columns.size(); ++j) {
        std::vector<ModTerm> terms = columns[j].terms();
        terms.push_back({r + static_cast<int>(j), Monomial::one(R), 1});
        gens.push_back(ModuleElement::make(aug_, std::move(terms)));
    }
    aug_gb_ = module_groebner(aug_, std::move(gens), caps).elements;

    for (auto& g : aug_gb_) {
        if (g.leading_term().comp < r) continue;  // image part; POT keeps F-block on top
        std::vector<ModTerm> terms;
        for (auto& t : g.terms()) terms.push_back({t.comp - r, t.mono, t.coeff});
        syz_.push_back(ModuleElement::from_sorted(std::move(terms)));
    }
}

std::optional<ModuleElement> ColumnSpan::lift(const ModuleElement& v) const {
    const Ambient& R = *target_.ring;
    const int r = target_.rank();
    // Reduce (v, 0) against the augmented basis; the invariant
    // (F-part) - (tracking part) * columns stays equal to v throughout.
    ModuleElement cur = ModuleElement::from_sorted(v.terms());
    std::vector<ModTerm> remainder;
    while (!cur.is_zero()) {
        const ModTerm& lt = cur.leading_term();
        const ModuleElement* divisor = nullptr;
        std::optional<Monomial> q;
        for (auto& g : aug_gb_) {
            const ModTerm& glt = g.leading_term();
            if (glt.comp != lt.comp) continue;
            q = lt.mono.divided_by(glt.mono, R);
            if (q) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            fp_t c = R.field.div(lt.coeff, divisor->leading_term().coeff);
            cur = cur.minus_term_times(c, *q, *divisor, R);
        } else {
            remainder.push_back(lt);
            std::vector<ModTerm> rest(cur.terms().begin() + 1, cur.terms().end());
            cur = ModuleElement::from_sorted(std::move(rest));
        }
    }
    // remainder holds the normal form of (v, 0); F-block terms mean v is not
    // in the span, pure tracking terms encode -1 * the lift coefficients.
    std::vector<ModTerm> coeffs;
    for (auto& t : remainder) {
        if (t.comp < r) return std::nullopt;
        coeffs.push_back({t.comp - r, t.mono, R.field.neg(t.coeff)});
    }
    return ModuleElement::from_sorted(std::move(coeffs));
}

std::vector<ModuleElement> syzygies(const FreeModule& target,
                                    const std::vector<ModuleElement>& columns,
                                    const Caps& caps, std::vector<long> source_degrees) {
    if (columns.empty()) return {};
    return ColumnSpan(target, columns, caps, std::move(source_degrees)).syzygy_gb();
}

std::vector<ModuleElement> kernel_mod_ideal(const FreeModule& target,
                                            const std::vector<ModuleElement>& columns,
                                            const std::vector<Polynomial>& ideal_gens,
                                            const Caps& caps, std::vector<long> source_degrees) {
    std::vector<ModuleElement> all = columns;
    std::vector<long> degs = source_degrees;
    if (degs.empty())
        for (auto& c : columns) degs.push_back(c.degree(target));
    for (auto& g : ideal_gens) {
        if (g.is_zero()) continue;
        for (int r = 0; r < target.rank(); ++r) {
            std::vector<ModTerm> terms;
            for (auto& tm : g.terms()) terms.push_back({r, tm.mono, tm.coeff});
            all.push_back(ModuleElement::make(target, std::move(terms)));
            degs.push_back(g.degree() + target.degrees[static_cast<size_t>(r)]);
        }
    }
    const size_t a = columns.size();
    if (all.empty()) return {};
    std::vector<ModuleElement> syz = syzygies(target, all, caps, std::move(degs));
    std::vector<ModuleElement> out;
    for (auto& s : syz) {
        std::vector<ModTerm> proj;
        for (auto& t : s.terms())
            if (t.comp < static_cast<int>(a)) proj.push_back(t);
        if (!proj.empty()) out.push_back(ModuleElement::from_sorted(std::move(proj)));
    }
    return out;
}

}  // namespace modinv
