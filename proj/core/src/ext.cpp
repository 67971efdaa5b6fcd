#include "modinv/ext.hpp"

#include <algorithm>

namespace modinv {

namespace {

/// Per-component leading ideals of the relation basis.
std::vector<std::vector<Monomial>> component_leads(const PresentedModule& M) {
    std::vector<std::vector<Monomial>> J(static_cast<size_t>(M.gens.rank()));
    for (auto& g : M.relations.elements) {
        const ModTerm& lt = g.leading_term();
        J[static_cast<size_t>(lt.comp)].push_back(lt.mono);
    }
    return J;
}

}  // namespace

int PresentedModule::dimension() const {
    const int n = gens.ring->nvars;
    auto J = component_leads(*this);
    int best = kDimEmpty;
    for (auto& leads : J) {
        int d = krull_dimension_leads(leads, n);
        best = std::max(best, d);
    }
    return best;
}

bool PresentedModule::is_zero() const { return dimension() == kDimEmpty; }

bool PresentedModule::irrelevant_annihilated() const {
    const Ambient& R = *gens.ring;
    for (int i = 0; i < gens.rank(); ++i) {
        for (int v = 0; v < R.nvars; ++v) {
            ModuleElement e = ModuleElement::basis(gens, i).times_term(
                Monomial::variable(v, R), 1, R);
            if (!in_module(e, relations)) return false;
        }
    }
    return true;
}

ExtTable ext_table_of(const FreeResolution& res, const Caps& caps) {
    const AmbientPtr& R = res.ring;
    const int m = R->nvars;
    const int len = res.length();
    ExtTable table;

    for (int j = 0; j <= m; ++j) {
        if (j > len) {
            table.entries.push_back({true, kDimEmpty, true, true});
            continue;
        }
        const FreeModule& Fj = res.modules[static_cast<size_t>(j)];
        FreeModule dualFj = dual_module(Fj);

        // kernel of D_{j+1}^T inside the dual of F_j
        std::vector<ModuleElement> kernel_gens;
        if (j < len) {
            const FreeModule& Fj1 = res.modules[static_cast<size_t>(j + 1)];
            std::vector<ModuleElement> cols = transpose_differential(
                Fj, Fj1, res.diffs[static_cast<size_t>(j)]);
            // columns of D_{j+1}^T live in the dual of F_{j+1}
            FreeModule dualFj1 = dual_module(Fj1);
            kernel_gens = syzygies(dualFj1, cols, caps, dualFj.degrees);
        } else {
            for (int i = 0; i < dualFj.rank(); ++i)
                kernel_gens.push_back(ModuleElement::basis(dualFj, i));
        }
        if (kernel_gens.empty()) {
            table.entries.push_back({true, kDimEmpty, true, true});
            continue;
        }

        // relations: image of D_j^T lifted through the kernel generators,
        // plus the syzygies of the kernel generators themselves
        ColumnSpan span(dualFj, kernel_gens, caps);
        std::vector<ModuleElement> relations = span.syzygy_gb();
        if (j >= 1) {
            const FreeModule& Fjm1 = res.modules[static_cast<size_t>(j - 1)];
            std::vector<ModuleElement> img = transpose_differential(
                Fjm1, Fj, res.diffs[static_cast<size_t>(j - 1)]);
            for (auto& b : img) {
                if (b.is_zero()) continue;
                auto lifted = span.lift(b);
                if (!lifted)
                    throw InternalError("image column escapes the kernel: not a complex");
                if (!lifted->is_zero()) relations.push_back(*lifted);
            }
        }
        PresentedModule E{span.source(), module_groebner(span.source(), relations, caps)};
        int dim = E.dimension();
        bool zero = dim == kDimEmpty;
        table.entries.push_back(
            {zero, dim, dim <= 0, zero ? true : E.irrelevant_annihilated()});
    }
    return table;
}

namespace {

/// H^j(Hom(F_., ring/I)) != 0 for the resolution prefix around j.
bool hom_homology_nonzero(const FreeResolution& prefix, int j, const GroebnerBasis& I,
                          const Caps& caps) {
    const int len = prefix.length();
    const FreeModule& Fj = prefix.modules[static_cast<size_t>(j)];
    FreeModule dualFj = dual_module(Fj);
    const std::vector<Polynomial>& ideal = I.elements();

    std::vector<ModuleElement> kernel_gens;
    if (j < len) {
        const FreeModule& Fj1 = prefix.modules[static_cast<size_t>(j + 1)];
        std::vector<ModuleElement> cols =
            transpose_differential(Fj, Fj1, prefix.diffs[static_cast<size_t>(j)]);
        FreeModule dualFj1 = dual_module(Fj1);
        kernel_gens = kernel_mod_ideal(dualFj1, cols, ideal, caps, dualFj.degrees);
    } else {
        for (int i = 0; i < dualFj.rank(); ++i)
            kernel_gens.push_back(ModuleElement::basis(dualFj, i));
    }
    if (kernel_gens.empty()) return false;

    // membership target: im(D_j^T) + I * dual(F_j)
    std::vector<ModuleElement> img;
    if (j >= 1) {
        const FreeModule& Fjm1 = prefix.modules[static_cast<size_t>(j - 1)];
        for (auto& b : transpose_differential(Fjm1, Fj, prefix.diffs[static_cast<size_t>(j - 1)]))
            if (!b.is_zero()) img.push_back(b);
    }
    for (auto& g : ideal) {
        for (int r = 0; r < dualFj.rank(); ++r) {
            std::vector<ModTerm> terms;
            for (auto& tm : g.terms()) terms.push_back({r, tm.mono, tm.coeff});
            img.push_back(ModuleElement::make(dualFj, std::move(terms)));
        }
    }
    ModuleGB img_gb = module_groebner(dualFj, img, caps);
    for (auto& k : kernel_gens)
        if (!in_module(k, img_gb)) return true;
    return false;
}

}  // namespace

int grade_via_ext(AmbientPtr R, const GroebnerBasis& J, const GroebnerBasis& I,
                  const Caps& caps) {
    QuotientResolver resolver(R, J, caps);
    for (int j = 0; j <= R->nvars; ++j) {
        resolver.ensure(j + 1);
        // after ensure: either D_{j+1} exists or the resolution ended at pd <= j
        if (resolver.complete() && j > resolver.current().length()) break;
        if (hom_homology_nonzero(resolver.current(), j, I, caps)) return j;
    }
    throw InternalError("grade computation found no nonvanishing Ext");
}

int depth_via_koszul(AmbientPtr R, const GroebnerBasis& I, const Caps& caps) {
    FreeResolution K = koszul_complex(R);
    for (int j = 0; j <= R->nvars; ++j) {
        if (hom_homology_nonzero(K, j, I, caps)) return j;
    }
    throw InternalError("depth scan found no nonvanishing Ext");
}

}  // namespace modinv
