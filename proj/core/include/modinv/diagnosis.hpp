#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "modinv/ext.hpp"
#include "modinv/invariants.hpp"

namespace modinv {

struct LcEntry {
    bool zero;
    bool finite_length;
    bool irrelevant_annihilated;
};

/// One report line licensed by a stated result rather than a computation.
struct InferenceLine {
    std::string statement;
    std::string cite;
};

struct TransferIdealResult {
    std::vector<Polynomial> ideal_gb;  // reduced basis of (T + I) over S'
    int height;
    bool feshbach_strict;              // height < dim R
    size_t monomials_transferred;
    size_t nonzero_images;
};

/// Consistency assertions; a false entry is surfaced, never reconciled.
struct ConsistencyFlags {
    bool depth_routes_agree = false;
    bool prop32_collapse = false;      // gCM == quasi-Buchsbaum == CM
    bool depth_floor = false;          // depth >= min{3, dim}
    bool dim4_almost_cm = true;        // dim 4 => cmdef <= 1
    bool chain_monotone = false;
    bool ext_window = false;           // E_j = 0 outside [m - dim, pd], edge nonzero
    bool euler_identity = false;
    bool kemper_bounds = true;         // locus dims inside the open interval
    bool feshbach = true;

    bool all() const {
        return depth_routes_agree && prop32_collapse && depth_floor && dim4_almost_cm &&
               chain_monotone && ext_window && euler_identity && kemper_bounds && feshbach;
    }
};

struct DiagnosisReport {
    int dim;
    int depth;
    int pd;
    int cmdef;
    int depth_oracle_value;
    bool is_cm;
    bool is_generalized_cm;
    bool is_quasi_buchsbaum;
    bool buchsbaum_by_fact_2_2;
    std::map<int, bool> serre;            // k = 1..dim
    std::vector<LcEntry> lc_table;        // i = 0..dim
    std::map<int, int> locus_dims;        // t = 0..cmdef; kDimEmpty encodes empty
    int f_irrelevant;
    std::array<int, 5> chain;             // grade(m), f_m, Ht(m), cd(m), dim
    std::vector<int> ext_dims;            // dim E_j, j = 0..m (kDimEmpty when zero)
    std::vector<long> resolution_ranks;   // rank F_0..F_pd
    std::optional<TransferIdealResult> transfer;
    std::vector<InferenceLine> inferences;
    ConsistencyFlags consistency;
};

struct DepthDim {
    int dim, depth, pd, cmdef;
};

/// Auslander-Buchsbaum bookkeeping from the minimal resolution.
DepthDim depth_dim(const Presentation& P, const FreeResolution& res);

/// Independent depth route: least nonvanishing Ext against the residue field.
int depth_oracle(const Presentation& P, const Caps& caps = {});

/// grade(a, R) via Ext^j(S'/(a+I), S'/I); `a` lives over S'. Throws UnitIdeal
/// when a + I is the unit ideal.
int grade_of_ideal(const IdealSpec& a, const Presentation& P, const Caps& caps = {});

/// Ht(a) = dim R - dim(S'/(a + I)) on the equidimensional catenary R.
int height_of_ideal(const IdealSpec& a, const Presentation& P, const Caps& caps = {});

/// Ext-codimension criterion for Serre's S(k) over the presentation ring.
bool serre_condition(const Presentation& P, const ExtTable& ET, int dimR, int k);

/// dim loc(cmdef > t) = max{dim E_j : j > codim + t}; kDimEmpty when empty.
int cm_defect_locus_dim(const ExtTable& ET, int codim, int t);

/// Statements licensed for a proper homogeneous ideal with the given grade
/// and height; citations name results, dim-4 rings get the length statement.
std::vector<InferenceLine> lc_inference(int grade, int height, int dimR, bool m_primary);

/// Transfers of all x-monomials of degree <= bound, rewritten into S'; the
/// ideal they generate and its height. Requires a modular action.
TransferIdealResult transfer_ideal_height(const Presentation& P, int bound,
                                          const Caps& caps = {});

/// The full scorecard. Requires a certified presentation.
DiagnosisReport diagnose(const Presentation& P, const Caps& caps = {});

}  // namespace modinv
