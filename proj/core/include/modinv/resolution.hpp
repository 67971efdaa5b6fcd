#pragma once

#include "modinv/modules.hpp"

namespace modinv {

/// Graded complex of free modules F_0 <- F_1 <- ... ; diffs[k] holds the
/// columns of D_{k+1} (elements of modules[k], one per basis vector of
/// modules[k+1]).
struct FreeResolution {
    AmbientPtr ring;
    std::vector<FreeModule> modules;
    std::vector<std::vector<ModuleElement>> diffs;
    bool minimal = false;

    int length() const { return static_cast<int>(diffs.size()); }
    /// Projective dimension: index of the last nonzero module.
    int pd() const { return length(); }
};

/// Step-by-step minimal free resolution of ring/J by iterated syzygies with
/// unit splitting after every step. D_1..D_k are final once ensure(k+1) has
/// run (splits at step k+1 can still delete columns of D_k).
class QuotientResolver {
public:
    QuotientResolver(AmbientPtr R, const GroebnerBasis& J, Caps caps = {});

    /// Computes differentials up to D_k (or to the end); returns how many
    /// exist now.
    int ensure(int k);
    bool complete() const { return complete_; }
    const FreeResolution& current() const { return res_; }
    /// Runs to completion and returns the minimal resolution.
    FreeResolution take();

private:
    Caps caps_;
    FreeResolution res_;
    bool complete_ = false;

    void step();
    void split_units_in_last();
};

/// Minimal graded free resolution of ring/J.
FreeResolution resolve_quotient(AmbientPtr R, const GroebnerBasis& J, const Caps& caps = {});

/// Koszul complex on the variables: the minimal resolution of the residue
/// field. Used as the independent depth route.
FreeResolution koszul_complex(AmbientPtr R);

/// Columns of the transpose of D (columns `cols` in `target`, source degrees
/// from `source`); the result lives in the dual of `source`.
std::vector<ModuleElement> transpose_differential(const FreeModule& target,
                                                  const FreeModule& source,
                                                  const std::vector<ModuleElement>& cols);
FreeModule dual_module(const FreeModule& F);

/// D_k . D_{k+1} == 0 for all k; throws InternalError on failure.
void verify_complex(const FreeResolution& res);

/// True when no differential entry has a constant term.
bool is_minimal_complex(const FreeResolution& res);

/// Graded Euler characteristic: sum_k (-1)^k sum_{c in F_k} t^{deg c}.
std::vector<long long> euler_numerator(const FreeResolution& res);

}  // namespace modinv
