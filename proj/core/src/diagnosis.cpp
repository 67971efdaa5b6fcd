#include "modinv/diagnosis.hpp"

#include <algorithm>
#include <set>

namespace modinv {

DepthDim depth_dim(const Presentation& P, const FreeResolution& res) {
    if (!res.minimal) throw ValidationError("depth_dim needs a minimal resolution");
    const int m = P.num_generators();
    int dim = krull_dimension(P.relations);
    int pd = res.pd();
    int depth = m - pd;
    return DepthDim{dim, depth, pd, dim - depth};
}

int depth_oracle(const Presentation& P, const Caps& caps) {
    return depth_via_koszul(P.sprime, P.relations, caps);
}

namespace {

GroebnerBasis sum_with_relations(const IdealSpec& a, const Presentation& P, const Caps& caps) {
    if (!a.ring->same_ring(*P.sprime)) throw AmbientMismatch("ideal must live over S'");
    std::vector<Polynomial> gens = P.relations.elements();
    for (auto& g : a.generators)
        if (!g.is_zero()) gens.push_back(g.with_ambient(P.sprime));
    GroebnerBasis gb = buchberger(IdealSpec(P.sprime, std::move(gens)),
                                  P.sprime->order, caps);
    return gb;
}

}  // namespace

int grade_of_ideal(const IdealSpec& a, const Presentation& P, const Caps& caps) {
    GroebnerBasis sum = sum_with_relations(a, P, caps);
    if (sum.is_unit_ideal()) throw UnitIdeal();
    return grade_via_ext(P.sprime, sum, P.relations, caps);
}

int height_of_ideal(const IdealSpec& a, const Presentation& P, const Caps& caps) {
    GroebnerBasis sum = sum_with_relations(a, P, caps);
    if (sum.is_unit_ideal()) throw UnitIdeal();
    return krull_dimension(P.relations) - krull_dimension(sum);
}

bool serre_condition(const Presentation& P, const ExtTable& ET, int dimR, int k) {
    const int m = P.num_generators();
    for (int j = m - dimR + 1; j <= m; ++j) {
        const ExtEntry& e = ET.entries[static_cast<size_t>(j)];
        if (e.zero) continue;
        if (e.dim > m - j - k) return false;
    }
    return true;
}

int cm_defect_locus_dim(const ExtTable& ET, int codim, int t) {
    int best = kDimEmpty;
    for (int j = codim + t + 1; j < static_cast<int>(ET.entries.size()); ++j)
        best = std::max(best, ET.entries[static_cast<size_t>(j)].dim);
    return best;
}

std::vector<InferenceLine> lc_inference(int grade, int height, int dimR, bool m_primary) {
    std::vector<InferenceLine> out;
    out.push_back({"H^i_\xF0\x9D\x94\x9E(R) = 0 for all i < " + std::to_string(grade),
                   "definition of grade"});
    if (grade == height) {
        out.push_back({"H^i_\xF0\x9D\x94\x9E(R) = 0 for all i < " + std::to_string(height) +
                           " = Ht(\xF0\x9D\x94\x9E)",
                       "Prop 3.6"});
    }
    if (dimR == 4) {
        // any nonzero local cohomology of a 4-dimensional invariant ring has
        // infinite length; H^grade is nonzero by definition
        out.push_back({"\xE2\x84\x93(H^" + std::to_string(grade) +
                           "_\xF0\x9D\x94\x9E(R)) = \xE2\x88\x9E",
                       "Cor 3.8"});
    } else if (grade < height) {
        out.push_back({"\xE2\x84\x93(H^i_\xF0\x9D\x94\x9E(R)) = \xE2\x88\x9E for some i < cd(\xF0\x9D\x94\x9E)",
                       "Prop 3.6"});
    }
    if (m_primary) {
        out.push_back({"cd(\xF0\x9D\x94\x9E) = " + std::to_string(dimR), "Fact 2.1(i)"});
    } else {
        out.push_back({"cd(\xF0\x9D\x94\x9E) lies in [" + std::to_string(std::max(grade, height)) +
                           ", " + std::to_string(dimR) + "]; not computed",
                       "Fact 2.1(iii) cited, out of computational scope"});
    }
    return out;
}

TransferIdealResult transfer_ideal_height(const Presentation& P, int bound, const Caps& caps) {
    const MatrixGroup& G = P.group();
    if (!G.is_modular()) throw NonModular();
    const AmbientPtr& xring = P.fset.xring;
    const Ambient& R = *xring;

    // tr(g.f) = tr(f), so when every element maps monomials to scalar
    // multiples of monomials one representative per orbit suffices
    bool monomial_group = true;
    for (auto& g : G.elements()) {
        for (size_t r = 0; r < g.rows() && monomial_group; ++r) {
            int nz = 0;
            for (size_t c = 0; c < g.cols(); ++c)
                if (g.at(r, c) != 0) ++nz;
            if (nz != 1) monomial_group = false;
        }
    }

    TransferIdealResult out{};
    std::set<Monomial> seen;
    std::vector<Polynomial> images;
    std::set<std::vector<std::pair<Monomial, fp_t>>> image_keys;

    for (int d = 1; d <= bound; ++d) {
        for (auto& mono : monomials_of_degree(R, d)) {
            if (monomial_group && seen.count(mono)) continue;
            Polynomial f = Polynomial::monomial(xring, mono, 1);
            Polynomial tr = Polynomial::zero(xring);
            for (auto& g : G.elements()) {
                Polynomial img = apply_matrix(g, f);
                if (monomial_group) seen.insert(img.leading_monomial());
                tr = tr + img;
            }
            ++out.monomials_transferred;
            if (tr.is_zero()) continue;
            ++out.nonzero_images;
            Polynomial q = express_in_generators(tr, P);
            std::vector<std::pair<Monomial, fp_t>> key;
            for (auto& tm : q.terms()) key.emplace_back(tm.mono, tm.coeff);
            if (image_keys.insert(std::move(key)).second) images.push_back(std::move(q));
        }
    }

    std::vector<Polynomial> gens = P.relations.elements();
    gens.insert(gens.end(), images.begin(), images.end());
    GroebnerBasis sum = buchberger(IdealSpec(P.sprime, std::move(gens)), P.sprime->order, caps);
    int dimR = krull_dimension(P.relations);
    out.height = dimR - krull_dimension(sum);
    out.feshbach_strict = out.height < dimR;
    out.ideal_gb = sum.elements();
    return out;
}

DiagnosisReport diagnose(const Presentation& P, const Caps& caps) {
    if (!P.certified)
        throw ValidationError("diagnose requires a presentation with a passing certificate");
    const int m = P.num_generators();

    FreeResolution res = resolve_quotient(P.sprime, P.relations, caps);
    DepthDim dd = depth_dim(P, res);
    ExtTable ET = ext_table_of(res, caps);

    DiagnosisReport rep{};
    rep.dim = dd.dim;
    rep.depth = dd.depth;
    rep.pd = dd.pd;
    rep.cmdef = dd.cmdef;
    rep.is_cm = dd.cmdef == 0;

    rep.depth_oracle_value = depth_oracle(P, caps);
    rep.consistency.depth_routes_agree = rep.depth_oracle_value == rep.depth;

    for (auto& F : res.modules) rep.resolution_ranks.push_back(F.rank());
    for (auto& e : ET.entries) rep.ext_dims.push_back(e.dim);

    // local cohomology table via graded duality: H^i carries E_{m-i}'s flags
    for (int i = 0; i <= rep.dim; ++i) {
        const ExtEntry& e = ET.entries[static_cast<size_t>(m - i)];
        rep.lc_table.push_back({e.zero, e.finite_length, e.irrelevant_annihilated});
    }

    rep.is_generalized_cm = true;
    rep.is_quasi_buchsbaum = true;
    for (int i = 0; i < rep.dim; ++i) {
        if (!rep.lc_table[static_cast<size_t>(i)].finite_length) rep.is_generalized_cm = false;
        if (!rep.lc_table[static_cast<size_t>(i)].irrelevant_annihilated)
            rep.is_quasi_buchsbaum = false;
    }
    bool vanish_outside = true;
    for (int i = 0; i <= rep.dim; ++i) {
        if (i == rep.depth || i == rep.dim) continue;
        if (!rep.lc_table[static_cast<size_t>(i)].zero) vanish_outside = false;
    }
    rep.buchsbaum_by_fact_2_2 = rep.is_quasi_buchsbaum && vanish_outside;

    rep.f_irrelevant = rep.dim;
    for (int i = 0; i <= rep.dim; ++i) {
        if (!rep.lc_table[static_cast<size_t>(i)].finite_length) {
            rep.f_irrelevant = i;
            break;
        }
    }
    rep.chain = {rep.depth, rep.f_irrelevant, rep.dim, rep.dim, rep.dim};

    for (int k = 1; k <= rep.dim; ++k) rep.serre[k] = serre_condition(P, ET, rep.dim, k);

    for (int t = 0; t <= rep.cmdef; ++t)
        rep.locus_dims[t] = cm_defect_locus_dim(ET, m - rep.dim, t);

    // consistency: Prop 3.2 five-way collapse on invariant rings
    rep.consistency.prop32_collapse =
        rep.is_generalized_cm == rep.is_cm && rep.is_quasi_buchsbaum == rep.is_cm;
    rep.consistency.depth_floor = rep.depth >= std::min(3, rep.dim);
    rep.consistency.dim4_almost_cm = rep.dim != 4 || rep.cmdef <= 1;
    rep.consistency.chain_monotone = rep.depth <= rep.f_irrelevant &&
                                     rep.f_irrelevant <= rep.dim;
    // Ext window: E_j = 0 outside [m-dim, pd], nonzero at m-dim, dim >= 1 there
    rep.consistency.ext_window = true;
    for (int j = 0; j <= m; ++j) {
        const ExtEntry& e = ET.entries[static_cast<size_t>(j)];
        if ((j < m - rep.dim || j > rep.pd) && !e.zero) rep.consistency.ext_window = false;
    }
    if (ET.entries[static_cast<size_t>(m - rep.dim)].zero ||
        ET.entries[static_cast<size_t>(m - rep.dim)].dim < 1)
        rep.consistency.ext_window = false;

    std::vector<long long> euler = euler_numerator(res);
    std::vector<long long> hn = hilbert_numerator(P.relations.leading_monomials(), *P.sprime);
    poly_t_trim(euler);
    poly_t_trim(hn);
    rep.consistency.euler_identity = euler == hn;

    for (int t = 0; t <= rep.cmdef; ++t) {
        if (rep.cmdef > t) {
            int v = rep.locus_dims[t];
            // 0 < v < dim(V) - t - 1 whenever cmdef > t
            if (!(0 < v && v < P.fset.xring->nvars - t - 1))
                rep.consistency.kemper_bounds = false;
        }
    }

    if (P.group().is_modular()) {
        rep.transfer = transfer_ideal_height(P, P.fset.bound, caps);
        rep.consistency.feshbach = rep.transfer->feshbach_strict;
    }

    // inference lines for the irrelevant ideal
    if (rep.f_irrelevant < rep.dim) {
        rep.inferences.push_back(
            {"\xE2\x84\x93(H^" + std::to_string(rep.f_irrelevant) +
                 "_\xF0\x9D\x94\xAA(R)) = \xE2\x88\x9E",
             rep.dim == 4 ? "Cor 3.8" : "\xC2\xA7" "2.A definition of f"});
    }
    rep.inferences.push_back({"cd(\xF0\x9D\x94\xAA) = dim R = " + std::to_string(rep.dim),
                              "Fact 2.1(i)"});

    return rep;
}

}  // namespace modinv
