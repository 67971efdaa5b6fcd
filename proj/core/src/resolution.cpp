#include "modinv/resolution.hpp"

#include <algorithm>

#include "modinv/hilbert.hpp"

namespace modinv {

QuotientResolver::QuotientResolver(AmbientPtr R, const GroebnerBasis& J, Caps caps)
    : caps_(caps) {
    if (J.is_unit_ideal()) throw UnitIdeal();
    res_.ring = R;
    res_.modules.push_back(FreeModule{R, {0}});
    std::vector<ModuleElement> cols;
    std::vector<long> degs;
    for (auto& g : J.elements()) {
        std::vector<ModTerm> terms;
        for (auto& tm : g.terms()) terms.push_back({0, tm.mono, tm.coeff});
        cols.push_back(ModuleElement::from_sorted(std::move(terms)));
        degs.push_back(g.degree());
    }
    if (!cols.empty()) {
        res_.diffs.push_back(std::move(cols));
        res_.modules.push_back(FreeModule{R, std::move(degs)});
    } else {
        complete_ = true;  // the zero ideal: the ring itself is free
        res_.minimal = true;
    }
}

void QuotientResolver::step() {
    if (complete_) return;
    const int k = static_cast<int>(res_.diffs.size());  // computing D_{k+1}
    const FreeModule& target = res_.modules[static_cast<size_t>(k - 1)];
    std::vector<ModuleElement> syz = syzygies(target, res_.diffs.back(), caps_);
    if (syz.empty()) {
        complete_ = true;
        res_.minimal = true;
        return;
    }
    FreeModule next{res_.ring, {}};
    const FreeModule& src = res_.modules.back();
    for (auto& s : syz) next.degrees.push_back(s.degree(src));
    res_.diffs.push_back(std::move(syz));
    res_.modules.push_back(std::move(next));
    split_units_in_last();
    if (res_.diffs.back().empty()) {
        // everything split away: the previous step was already final
        res_.diffs.pop_back();
        res_.modules.pop_back();
        complete_ = true;
        res_.minimal = true;
    }
    if (static_cast<int>(res_.diffs.size()) > res_.ring->nvars + 1)
        throw InternalError("resolution exceeds the syzygy-theorem bound");
}

void QuotientResolver::split_units_in_last() {
    const Ambient& R = *res_.ring;
    const size_t kk = res_.diffs.size() - 1;       // D_{kk+1} being split
    auto& D = res_.diffs[kk];                      // columns in modules[kk]
    auto& Fk = res_.modules[kk];
    auto& Fk1 = res_.modules[kk + 1];
    auto& Dprev = res_.diffs[kk - 1];               // columns of D_kk, indexed by Fk basis

    while (true) {
        // find a unit entry: a term with monomial 1
        int uc = -1, ur = -1;
        fp_t uval = 0;
        for (size_t c = 0; c < D.size() && uc < 0; ++c) {
            for (auto& t : D[c].terms()) {
                if (t.mono.is_one()) {
                    uc = static_cast<int>(c);
                    ur = t.comp;
                    uval = t.coeff;
                    break;
                }
            }
        }
        if (uc < 0) break;

        // clear row ur from all other columns
        for (size_t c = 0; c < D.size(); ++c) {
            if (static_cast<int>(c) == uc) continue;
            std::vector<ModTerm> entry;
            for (auto& t : D[c].terms())
                if (t.comp == ur) entry.push_back(t);
            if (entry.empty()) continue;
            fp_t uinv = R.field.inv(uval);
            for (auto& t : entry)
                D[c] = D[c].minus_term_times(R.field.mul(t.coeff, uinv), t.mono, D[uc], R);
        }

        // drop column uc (source basis vector) and row ur (target basis vector)
        D.erase(D.begin() + uc);
        Fk1.degrees.erase(Fk1.degrees.begin() + uc);
        for (auto& col : D) {
            std::vector<ModTerm> terms;
            for (auto& t : col.terms()) {
                if (t.comp == ur) continue;  // only the removed column held row ur
                ModTerm nt = t;
                if (nt.comp > ur) --nt.comp;
                terms.push_back(std::move(nt));
            }
            col = ModuleElement::from_sorted(std::move(terms));
        }
        Fk.degrees.erase(Fk.degrees.begin() + ur);
        Dprev.erase(Dprev.begin() + ur);
    }
}

int QuotientResolver::ensure(int k) {
    while (!complete_ && static_cast<int>(res_.diffs.size()) < k) step();
    return static_cast<int>(res_.diffs.size());
}

FreeResolution QuotientResolver::take() {
    while (!complete_) step();
    verify_complex(res_);
    if (!is_minimal_complex(res_))
        throw InternalError("resolution failed to minimalize");
    return std::move(res_);
}

FreeResolution resolve_quotient(AmbientPtr R, const GroebnerBasis& J, const Caps& caps) {
    QuotientResolver resolver(std::move(R), J, caps);
    return resolver.take();
}

namespace {

// lexicographic rank of a sorted index subset within all size-j subsets
std::vector<std::vector<int>> subsets_of(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == j) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

FreeResolution koszul_complex(AmbientPtr R) {
    const int m = R->nvars;
    FreeResolution res;
    res.ring = R;
    res.minimal = true;

    std::vector<std::vector<std::vector<int>>> levels;
    for (int j = 0; j <= m; ++j) levels.push_back(subsets_of(m, j));

    for (int j = 0; j <= m; ++j) {
        FreeModule F{R, {}};
        for (auto& S : levels[static_cast<size_t>(j)]) {
            long d = 0;
            for (int i : S) d += R->weights[static_cast<size_t>(i)];
            F.degrees.push_back(d);
        }
        res.modules.push_back(std::move(F));
    }
    for (int j = 1; j <= m; ++j) {
        auto& lower = levels[static_cast<size_t>(j - 1)];
        std::vector<ModuleElement> cols;
        for (auto& S : levels[static_cast<size_t>(j)]) {
            std::vector<ModTerm> terms;
            for (size_t t = 0; t < S.size(); ++t) {
                std::vector<int> sub;
                for (size_t u = 0; u < S.size(); ++u)
                    if (u != t) sub.push_back(S[u]);
                int comp = static_cast<int>(
                    std::lower_bound(lower.begin(), lower.end(), sub) - lower.begin());
                fp_t sign = (t % 2 == 0) ? 1 : R->field.neg(1);
                terms.push_back({comp, Monomial::variable(S[t], *R), sign});
            }
            cols.push_back(ModuleElement::make(res.modules[static_cast<size_t>(j - 1)],
                                               std::move(terms)));
        }
        res.diffs.push_back(std::move(cols));
    }
    return res;
}

FreeModule dual_module(const FreeModule& F) {
    FreeModule D{F.ring, F.degrees};
    for (auto& d : D.degrees) d = -d;
    return D;
}

std::vector<ModuleElement> transpose_differential(const FreeModule& target,
                                                  const FreeModule& source,
                                                  const std::vector<ModuleElement>& cols) {
    std::vector<std::vector<ModTerm>> rows(static_cast<size_t>(target.rank()));
    for (size_t c = 0; c < cols.size(); ++c) {
        for (auto& t : cols[c].terms())
            rows[static_cast<size_t>(t.comp)].push_back({static_cast<int>(c), t.mono, t.coeff});
    }
    FreeModule dual_src = dual_module(source);
    std::vector<ModuleElement> out;
    out.reserve(rows.size());
    for (auto& terms : rows)
        out.push_back(ModuleElement::make(dual_src, std::move(terms)));
    return out;
}

void verify_complex(const FreeResolution& res) {
    const Ambient& R = *res.ring;
    for (size_t k = 0; k + 1 < res.diffs.size(); ++k) {
        const auto& D = res.diffs[k];
        for (auto& col : res.diffs[k + 1]) {
            ModuleElement acc;
            for (auto& t : col.terms()) {
                acc = acc.minus_term_times(R.field.neg(t.coeff), t.mono,
                                           D[static_cast<size_t>(t.comp)], R);
            }
            if (!acc.is_zero()) throw InternalError("differential composition is nonzero");
        }
    }
}

bool is_minimal_complex(const FreeResolution& res) {
    for (auto& D : res.diffs)
        for (auto& col : D)
            for (auto& t : col.terms())
                if (t.mono.is_one()) return false;
    return true;
}

std::vector<long long> euler_numerator(const FreeResolution& res) {
    std::vector<long long> acc;
    long long sign = 1;
    for (auto& F : res.modules) {
        std::vector<long long> level;
        for (long d : F.degrees) {
            if (d < 0) throw InternalError("euler_numerator expects non-negative degrees");
            if (static_cast<size_t>(d) >= level.size()) level.resize(static_cast<size_t>(d) + 1, 0);
            level[static_cast<size_t>(d)] += 1;
        }
        acc = poly_t_add(std::move(acc), level, sign);
        sign = -sign;
    }
    return acc;
}

}  // namespace modinv
