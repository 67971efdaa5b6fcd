#include "modinv/groebner.hpp"

#include <algorithm>
#include <list>

namespace modinv {

IdealSpec::IdealSpec(AmbientPtr R, std::vector<Polynomial> gens)
    : ring(std::move(R)), generators(std::move(gens)) {
    for (auto& g : generators) {
        if (!g.ring() || !g.ring()->same_ring(*ring)) throw AmbientMismatch();
        if (!g.is_homogeneous())
            throw ValidationError("ideal generators must be homogeneous: " + render(g));
    }
}

bool GroebnerBasis::is_unit_ideal() const {
    return els_.size() == 1 && els_[0].leading_monomial().is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> lm;
    lm.reserve(els_.size());
    for (auto& g : els_) lm.push_back(g.leading_monomial());
    return lm;
}

GroebnerBasis GroebnerBasis::from_reduced(AmbientPtr R, std::vector<Polynomial> els) {
    GroebnerBasis G;
    G.R_ = std::move(R);
    G.els_ = std::move(els);
    std::sort(G.els_.begin(), G.els_.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), *G.R_) < 0;
    });
    return G;
}

namespace {

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G) {
    const Ambient& R = *f.ring();
    Polynomial work = f;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        const Polynomial* divisor = nullptr;
        std::optional<Monomial> q;
        for (auto& g : G) {
            if (g.is_zero()) continue;
            q = lt.mono.divided_by(g.leading_monomial(), R);
            if (q) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            fp_t c = R.field.div(lt.coeff, divisor->leading_term().coeff);
            work = work.minus_term_times(c, *q, *divisor);
        } else {
            remainder.push_back(lt);
            std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
            work = Polynomial::from_sorted(f.ring(), std::move(rest));
        }
    }
    return Polynomial::from_sorted(f.ring(), std::move(remainder));
}

struct Pair {
    size_t i, j;      // i < j
    Monomial lcm;
    long deg;
};

// Normal strategy: minimal lcm degree, then the monomial order on the lcm,
// then indices. Deterministic.
bool pair_before(const Pair& a, const Pair& b, const Ambient& R) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = mono_cmp(a.lcm, b.lcm, R);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

}  // namespace

GroebnerBasis buchberger(const IdealSpec& I, MonomialOrder order, const Caps& caps) {
    AmbientPtr R = std::make_shared<Ambient>(I.ring->field, I.ring->nvars, I.ring->weights, order);
    const Ambient& A = *R;

    std::vector<Polynomial> G;
    for (auto& g : I.generators) {
        if (g.is_zero()) continue;
        G.push_back(g.with_ambient(R).monic());
    }

    std::list<Pair> pairs;
    auto lcm_of = [&](size_t i, size_t j) {
        return G[i].leading_monomial().lcm(G[j].leading_monomial(), A);
    };

    // Gebauer-Moeller update: add pairs (i, t) for the new element t, pruning
    // with the M/F/B criteria and Buchberger's coprimality criterion.
    auto update_pairs = [&](size_t t) {
        std::vector<Pair> cand;
        cand.reserve(t);
        for (size_t i = 0; i < t; ++i) {
            Monomial l = lcm_of(i, t);
            cand.push_back({i, t, l, l.degree()});
        }
        // criterion M: drop (i,t) when some other lcm(j,t) properly divides lcm(i,t)
        std::vector<bool> keep(cand.size(), true);
        for (size_t a = 0; a < cand.size(); ++a) {
            for (size_t b = 0; b < cand.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (!(cand[b].lcm == cand[a].lcm) && cand[b].lcm.divides(cand[a].lcm))
                    keep[a] = false;
            }
        }
        // criterion F: among equal lcms keep the first
        for (size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = a + 1; b < cand.size(); ++b) {
                if (keep[b] && cand[b].lcm == cand[a].lcm) keep[b] = false;
            }
        }
        // coprimality criterion
        for (size_t a = 0; a < cand.size(); ++a) {
            if (keep[a] &&
                G[cand[a].i].leading_monomial().coprime(G[t].leading_monomial()))
                keep[a] = false;
        }
        // criterion B: prune old pairs strictly divisible by the new lead
        const Monomial& ltt = G[t].leading_monomial();
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (ltt.divides(it->lcm) && !(lcm_of(it->i, t) == it->lcm) &&
                !(lcm_of(it->j, t) == it->lcm)) {
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
            if (pair_before(*it, *best, A)) best = it;
        Pair p = *best;
        pairs.erase(best);

        const Polynomial& f = G[p.i];
        const Polynomial& g = G[p.j];
        Monomial qf = *p.lcm.divided_by(f.leading_monomial(), A);
        Monomial qg = *p.lcm.divided_by(g.leading_monomial(), A);
        Polynomial s = f.times_term(qf, A.field.inv(f.leading_term().coeff))
                           .minus_term_times(A.field.inv(g.leading_term().coeff), qg, g);
        s = reduce_full(s, G);
        if (s.is_zero()) continue;
        if (s.degree() > caps.max_degree)
            throw ResourceLimit("basis element degree " + std::to_string(s.degree()) +
                                " exceeds cap " + std::to_string(caps.max_degree));
        G.push_back(s.monic());
        if (G.size() > caps.max_basis)
            throw ResourceLimit("basis size exceeds cap " + std::to_string(caps.max_basis));
        update_pairs(G.size() - 1);
    }

    // Interreduce to the unique reduced basis.
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), A) < 0;
    });
    std::vector<Polynomial> kept;
    for (auto& g : G) {
        bool dominated = false;
        for (auto& h : kept) {
            if (h.leading_monomial().divides(g.leading_monomial())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(g);
    }
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Polynomial r = reduce_full(kept[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }

    GroebnerBasis out;
    out.R_ = R;
    out.els_ = std::move(reduced);
    std::sort(out.els_.begin(), out.els_.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), A) < 0;
    });
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!f.ring()->same_ring(*G.ring())) throw AmbientMismatch();
    return reduce_full(f.with_ambient(G.ring()), G.elements());
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    return reduce_full(f, G);
}

IdealSpec eliminate(const IdealSpec& I, int first_k, const Caps& caps) {
    const Ambient& A = *I.ring;
    if (first_k < 1 || first_k >= A.nvars)
        throw ValidationError("eliminate: block size must be in [1, nvars)");
    GroebnerBasis G = buchberger(I, MonomialOrder::elimination(first_k), caps);

    std::vector<int> tail_weights(A.weights.begin() + first_k, A.weights.end());
    AmbientPtr T = make_ambient(A.field.characteristic(), tail_weights);
    std::vector<Polynomial> gens;
    for (auto& g : G.elements()) {
        bool xfree = true;
        for (auto& tm : g.terms()) {
            for (int i = 0; i < first_k && xfree; ++i)
                if (tm.mono.exp(i) != 0) xfree = false;
            if (!xfree) break;
        }
        if (!xfree) continue;
        std::vector<Term> terms;
        for (auto& tm : g.terms()) {
            std::vector<std::uint16_t> e(tm.mono.exponents().begin() + first_k,
                                         tm.mono.exponents().end());
            terms.push_back({Monomial(std::move(e), *T), tm.coeff});
        }
        gens.push_back(Polynomial(T, std::move(terms)));
    }
    return IdealSpec(T, std::move(gens));
}

}  // namespace modinv
