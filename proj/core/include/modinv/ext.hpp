#pragma once

#include "modinv/hilbert.hpp"
#include "modinv/resolution.hpp"

namespace modinv {

/// One graded module presented as F/N: generators with degrees, plus a module
/// Groebner basis of the relation submodule.
struct PresentedModule {
    FreeModule gens;
    ModuleGB relations;

    bool is_zero() const;
    /// Krull dimension; kDimEmpty for the zero module.
    int dimension() const;
    /// Every variable annihilates every generator.
    bool irrelevant_annihilated() const;
};

struct ExtEntry {
    bool zero;
    int dim;                      // kDimEmpty when zero
    bool finite_length;           // dim <= 0
    bool irrelevant_annihilated;  // the irrelevant ideal kills the module
};

/// Ext^j(ring/J, ring) for j = 0..nvars, computed from the dualized minimal
/// resolution. Under graded duality entry j carries the flags of local
/// cohomology in degree nvars - j.
struct ExtTable {
    std::vector<ExtEntry> entries;
};

ExtTable ext_table_of(const FreeResolution& res, const Caps& caps = {});

/// min{ j : Ext^j(ring/(quotient_gb + ideal incorporated), ring/I) != 0 }:
/// the grade of the quotient ideal on ring/I, scanned lazily along a minimal
/// resolution of ring/J.
int grade_via_ext(AmbientPtr R, const GroebnerBasis& J, const GroebnerBasis& I,
                  const Caps& caps = {});

/// Depth of ring/I via the Koszul resolution of the residue field; the
/// independent oracle for Auslander-Buchsbaum.
int depth_via_koszul(AmbientPtr R, const GroebnerBasis& I, const Caps& caps = {});

}  // namespace modinv
