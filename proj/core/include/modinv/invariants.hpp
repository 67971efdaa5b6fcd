#pragma once

#include "modinv/group.hpp"
#include "modinv/groebner.hpp"
#include "modinv/hilbert.hpp"

namespace modinv {

/// Homogeneous invariants f_1..f_m extracted degree by degree; at each degree
/// the new generators complement the span of products of earlier ones inside
/// the invariant slice (echelonized, deterministic).
struct FundamentalSet {
    MatrixGroup group;
    AmbientPtr xring;
    std::vector<Polynomial> generators;   // degrees non-decreasing
    std::vector<int> degrees;
    int bound;
    bool complete;
    std::vector<size_t> invariant_dims;   // dim R_d for d = 0..bound

    size_t count() const { return generators.size(); }
};

/// Degree bound that certifies completeness: n(|G|-1), clamped to >= 1.
int default_degree_bound(int nvars, size_t group_order);

FundamentalSet fundamental_invariants(const MatrixGroup& G, int bound);

/// R = F[V]^G presented as S'/I: S' weighted on the generator degrees, I the
/// relation ideal obtained by eliminating the x-block from (f_i - y_i).
struct Presentation {
    FundamentalSet fset;
    AmbientPtr sprime;        // F_p[y_1..y_m], weights = generator degrees
    AmbientPtr combined;      // x-block then y-block, elimination order
    GroebnerBasis combined_gb;
    GroebnerBasis relations;  // reduced basis of I over sprime
    bool certified = false;
    int certificate_bound = 0;

    int num_generators() const { return static_cast<int>(fset.count()); }
    const MatrixGroup& group() const { return fset.group; }
    /// y_i -> f_i as polynomials over the x-ring.
    const std::vector<Polynomial>& lift_map() const { return fset.generators; }
};

Presentation presentation(const FundamentalSet& F, const Caps& caps = {});

/// Rewrite an invariant in the generators: q(y) with q(f_1..f_m) = f. Throws
/// NotInSubalgebra when x-variables survive the normal form.
Polynomial express_in_generators(const Polynomial& f, const Presentation& P);

/// Embed an x-ring polynomial into the combined ring (x-block coordinates).
Polynomial embed_in_combined(const Polynomial& f, const Presentation& P);
/// Inject a y-ring polynomial into the combined ring (y-block coordinates).
Polynomial embed_sprime_in_combined(const Polynomial& q, const Presentation& P);

/// Checks dim_t S'/I == dim invariant_basis(G, t) for all t <= bound and
/// stamps the presentation on success.
bool hilbert_certificate(Presentation& P, int bound);

}  // namespace modinv
