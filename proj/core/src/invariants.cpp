#include "modinv/invariants.hpp"

#include <algorithm>

namespace modinv {

int default_degree_bound(int nvars, size_t group_order) {
    long b = static_cast<long>(nvars) * (static_cast<long>(group_order) - 1);
    return static_cast<int>(std::max(1L, b));
}

FundamentalSet fundamental_invariants(const MatrixGroup& G, int bound) {
    if (bound < 1) throw ValidationError("degree bound must be at least 1");
    AmbientPtr xring = make_xring(G.field().characteristic(), G.dim());
    const Ambient& R = *xring;
    const PrimeField& F = R.field;

    FundamentalSet out{G, xring, {}, {}, bound,
                       bound >= default_degree_bound(G.dim(), G.order()), {}};
    out.invariant_dims.push_back(1);  // constants

    // invariant slices double as subalgebra slices for processed degrees:
    // after the complement step every degree-d invariant is a polynomial in
    // the generators chosen so far
    std::vector<std::vector<Polynomial>> inv_slice(static_cast<size_t>(bound) + 1);
    inv_slice[0] = {Polynomial::constant(xring, 1)};

    for (int d = 1; d <= bound; ++d) {
        InvariantBasis inv = invariant_basis(G, xring, d);
        out.invariant_dims.push_back(inv.dimension());
        std::vector<Monomial> monos = monomials_of_degree(R, d);
        std::map<Monomial, size_t> index;
        for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
        auto to_vec = [&](const Polynomial& f) {
            std::vector<fp_t> v(monos.size(), 0);
            for (auto& tm : f.terms()) v[index.at(tm.mono)] = tm.coeff;
            return v;
        };

        // span of (lower-degree invariant slice) * (generator)
        std::vector<std::vector<fp_t>> products;
        for (size_t gi = 0; gi < out.generators.size(); ++gi) {
            int gd = out.degrees[gi];
            if (gd > d) continue;
            for (auto& b : inv_slice[static_cast<size_t>(d - gd)])
                products.push_back(to_vec(b * out.generators[gi]));
        }
        std::vector<std::vector<fp_t>> sub = rref_rows(F, std::move(products));

        std::vector<std::vector<fp_t>> fresh;
        for (auto& f : inv.basis) {
            std::vector<fp_t> v = to_vec(f);
            reduce_against(F, v, sub);
            if (std::any_of(v.begin(), v.end(), [](fp_t x) { return x != 0; }))
                fresh.push_back(std::move(v));
        }
        fresh = rref_rows(F, std::move(fresh));
        for (auto& v : fresh) {
            std::vector<Term> terms;
            for (size_t j = 0; j < monos.size(); ++j)
                if (v[j] != 0) terms.push_back({monos[j], v[j]});
            out.generators.push_back(Polynomial(xring, std::move(terms)));
            out.degrees.push_back(d);
        }
        inv_slice[static_cast<size_t>(d)] = inv.basis;
    }
    return out;
}

Presentation presentation(const FundamentalSet& F, const Caps& caps) {
    if (F.generators.empty())
        throw ValidationError("presentation requires at least one fundamental invariant");
    const int n = F.xring->nvars;
    const int m = static_cast<int>(F.count());
    const std::uint32_t p = F.xring->field.characteristic();

    std::vector<int> weights(static_cast<size_t>(n), 1);
    for (int d : F.degrees) weights.push_back(d);
    AmbientPtr combined = make_ambient(p, weights, MonomialOrder::elimination(n));
    AmbientPtr sprime = make_ambient(p, std::vector<int>(F.degrees.begin(), F.degrees.end()));

    std::vector<Polynomial> gens;
    for (int i = 0; i < m; ++i) {
        std::vector<Term> terms;
        for (auto& tm : F.generators[static_cast<size_t>(i)].terms()) {
            std::vector<std::uint16_t> e = tm.mono.exponents();
            e.resize(static_cast<size_t>(n + m), 0);
            terms.push_back({Monomial(std::move(e), *combined), tm.coeff});
        }
        std::vector<std::uint16_t> ye(static_cast<size_t>(n + m), 0);
        ye[static_cast<size_t>(n + i)] = 1;
        terms.push_back({Monomial(std::move(ye), *combined), combined->field.neg(1)});
        gens.push_back(Polynomial(combined, std::move(terms)));
    }
    GroebnerBasis gb =
        buchberger(IdealSpec(combined, std::move(gens)), MonomialOrder::elimination(n), caps);

    std::vector<Polynomial> rel;
    for (auto& g : gb.elements()) {
        bool xfree = true;
        for (auto& tm : g.terms()) {
            for (int i = 0; i < n && xfree; ++i)
                if (tm.mono.exp(i) != 0) xfree = false;
            if (!xfree) break;
        }
        if (!xfree) continue;
        std::vector<Term> terms;
        for (auto& tm : g.terms()) {
            std::vector<std::uint16_t> e(tm.mono.exponents().begin() + n,
                                         tm.mono.exponents().end());
            terms.push_back({Monomial(std::move(e), *sprime), tm.coeff});
        }
        rel.push_back(Polynomial(sprime, std::move(terms)));
    }

    Presentation P{F, sprime, gb.ring(), std::move(gb),
                   GroebnerBasis::from_reduced(sprime, std::move(rel)),
                   false, 0};
    return P;
}

Polynomial embed_in_combined(const Polynomial& f, const Presentation& P) {
    const int n = P.fset.xring->nvars;
    const int nm = P.combined->nvars;
    std::vector<Term> terms;
    for (auto& tm : f.terms()) {
        std::vector<std::uint16_t> e = tm.mono.exponents();
        if (static_cast<int>(e.size()) != n) throw AmbientMismatch();
        e.resize(static_cast<size_t>(nm), 0);
        terms.push_back({Monomial(std::move(e), *P.combined), tm.coeff});
    }
    return Polynomial(P.combined, std::move(terms));
}

Polynomial embed_sprime_in_combined(const Polynomial& q, const Presentation& P) {
    const int n = P.fset.xring->nvars;
    const int nm = P.combined->nvars;
    std::vector<Term> terms;
    for (auto& tm : q.terms()) {
        std::vector<std::uint16_t> e(static_cast<size_t>(nm), 0);
        for (int i = 0; i + n < nm; ++i) e[static_cast<size_t>(n + i)] = tm.mono.exp(i);
        terms.push_back({Monomial(std::move(e), *P.combined), tm.coeff});
    }
    return Polynomial(P.combined, std::move(terms));
}

Polynomial express_in_generators(const Polynomial& f, const Presentation& P) {
    if (!f.is_homogeneous()) throw ValidationError("express expects homogeneous input");
    const int n = P.fset.xring->nvars;
    Polynomial nf = normal_form(embed_in_combined(f, P), P.combined_gb);
    for (auto& tm : nf.terms()) {
        for (int i = 0; i < n; ++i) {
            if (tm.mono.exp(i) != 0)
                throw NotInSubalgebra(
                    "invariant not reached by the computed generators (raise the degree "
                    "bound): " + render(f));
        }
    }
    std::vector<Term> terms;
    for (auto& tm : nf.terms()) {
        std::vector<std::uint16_t> e(tm.mono.exponents().begin() + n,
                                     tm.mono.exponents().end());
        terms.push_back({Monomial(std::move(e), *P.sprime), tm.coeff});
    }
    return Polynomial(P.sprime, std::move(terms));
}

bool hilbert_certificate(Presentation& P, int bound) {
    HilbertSeries H = hilbert_series(P.relations);
    std::vector<long long> dims = H.expand(bound);
    for (int d = 0; d <= bound; ++d) {
        size_t expect;
        if (d < static_cast<int>(P.fset.invariant_dims.size())) {
            expect = P.fset.invariant_dims[static_cast<size_t>(d)];
        } else {
            expect = invariant_basis(P.group(), P.fset.xring, d).dimension();
        }
        if (dims[static_cast<size_t>(d)] != static_cast<long long>(expect)) return false;
    }
    P.certified = true;
    P.certificate_bound = bound;
    return true;
}

}  // namespace modinv
