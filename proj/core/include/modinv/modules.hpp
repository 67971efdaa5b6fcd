#pragma once

#include <optional>
#include <vector>

#include "modinv/groebner.hpp"

namespace modinv {

/// Graded free module over the ambient ring: a rank and one degree per basis
/// element (degrees may be negative for duals).
struct FreeModule {
    AmbientPtr ring;
    std::vector<long> degrees;

    int rank() const { return static_cast<int>(degrees.size()); }
};

struct ModTerm {
    int comp;
    Monomial mono;
    fp_t coeff;
};

/// Position-over-term: lower component wins, ties by the ring order.
int modterm_cmp(const ModTerm& a, const ModTerm& b, const Ambient& R);

/// Element of a graded free module; terms sorted descending in POT order.
class ModuleElement {
public:
    ModuleElement() = default;

    static ModuleElement make(const FreeModule& F, std::vector<ModTerm> terms);
    static ModuleElement from_sorted(std::vector<ModTerm> terms);
    static ModuleElement basis(const FreeModule& F, int comp);

    bool is_zero() const { return t_.empty(); }
    const std::vector<ModTerm>& terms() const { return t_; }
    const ModTerm& leading_term() const;

    ModuleElement minus_term_times(fp_t c, const Monomial& m, const ModuleElement& g,
                                   const Ambient& R) const;
    ModuleElement times_term(const Monomial& m, fp_t c, const Ambient& R) const;
    ModuleElement plus(const ModuleElement& g, const Ambient& R) const;
    ModuleElement scaled(fp_t c, const Ambient& R) const;
    ModuleElement monic(const Ambient& R) const;

    /// Degree of the (homogeneous) element; asserts nonzero.
    long degree(const FreeModule& F) const;
    bool is_homogeneous(const FreeModule& F) const;

    bool operator==(const ModuleElement& o) const;

private:
    std::vector<ModTerm> t_;
};

/// Reduced module Groebner basis under POT; elements monic, sorted ascending
/// by leading term.
struct ModuleGB {
    FreeModule F;
    std::vector<ModuleElement> elements;
};

ModuleGB module_groebner(const FreeModule& F, std::vector<ModuleElement> gens,
                         const Caps& caps = {});
ModuleElement module_normal_form(const ModuleElement& v, const ModuleGB& G);
bool in_module(const ModuleElement& v, const ModuleGB& G);

/// Augmented-basis machinery over the columns of a map into `target`:
/// computes a Groebner basis of {(c_j, e_j)} under component elimination, from
/// which it reads off the syzygies of the columns and lifts through the map.
/// Zero columns are allowed when source degrees are supplied explicitly.
class ColumnSpan {
public:
    ColumnSpan(FreeModule target, std::vector<ModuleElement> columns, const Caps& caps = {},
               std::vector<long> source_degrees = {});

    const FreeModule& source() const { return source_; }
    /// Generators (a POT Groebner basis) of the syzygy module of the columns.
    const std::vector<ModuleElement>& syzygy_gb() const { return syz_; }
    /// Express v as a combination of the columns; nullopt if v is outside the
    /// column span.
    std::optional<ModuleElement> lift(const ModuleElement& v) const;

private:
    FreeModule target_, source_, aug_;
    std::vector<ModuleElement> aug_gb_;
    std::vector<ModuleElement> syz_;
};

/// Generators of the first syzygy module of the given columns.
std::vector<ModuleElement> syzygies(const FreeModule& target,
                                    const std::vector<ModuleElement>& columns,
                                    const Caps& caps = {},
                                    std::vector<long> source_degrees = {});

/// Generators of {v : sum v_j columns[j] lies in ideal * target}; the kernel
/// of the induced map into (target tensored down to ambient/ideal).
std::vector<ModuleElement> kernel_mod_ideal(const FreeModule& target,
                                            const std::vector<ModuleElement>& columns,
                                            const std::vector<Polynomial>& ideal_gens,
                                            const Caps& caps = {},
                                            std::vector<long> source_degrees = {});

}  // namespace modinv
