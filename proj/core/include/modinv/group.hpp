#pragma once

#include <vector>

#include "modinv/linalg.hpp"

namespace modinv {

/// Finite subgroup of GL(n, F_p): explicit element list, closed under product
/// and inverse, identity first; breadth-first deterministic enumeration.
class MatrixGroup {
public:
    static MatrixGroup closure(PrimeField F, int n, std::vector<FpMatrix> generators,
                               size_t cap = 10000);

    const PrimeField& field() const { return F_; }
    int dim() const { return n_; }
    size_t order() const { return elements_.size(); }
    const std::vector<FpMatrix>& elements() const { return elements_; }
    const std::vector<size_t>& generator_indices() const { return gen_idx_; }
    std::vector<FpMatrix> generators() const;

    /// p divides |G|: no Reynolds averaging.
    bool is_modular() const { return order() % F_.characteristic() == 0; }

private:
    MatrixGroup(PrimeField F, int n) : F_(F), n_(n) {}
    PrimeField F_;
    int n_;
    std::vector<FpMatrix> elements_;
    std::vector<size_t> gen_idx_;
};

/// Orbit sum over the group. Always invariant; |G| * f for invariant f.
Polynomial transfer(const Polynomial& f, const MatrixGroup& G);

/// Orbit product; invariant of degree |G| * deg f.
Polynomial norm(const Polynomial& f, const MatrixGroup& G);

/// |G|^{-1} transfer; the invariant projection. Throws ModularAction when
/// p | |G|.
Polynomial reynolds(const Polynomial& f, const MatrixGroup& G);

/// Echelonized basis of the degree-d invariants, computed as the common fixed
/// space of the generators on the monomial coordinate slice.
struct InvariantBasis {
    int degree;
    std::vector<Polynomial> basis;
    size_t ambient_dim;

    size_t dimension() const { return basis.size(); }
};

InvariantBasis invariant_basis(const MatrixGroup& G, const AmbientPtr& xring, int degree);

/// A finite-dimensional module over a cyclic group, given by the matrix of a
/// chosen generator and the declared group order (which may exceed the matrix
/// order when the action is not faithful).
struct CyclicModule {
    FpMatrix generator;
    size_t order;

    CyclicModule(FpMatrix g, size_t declared_order);
};

struct CohomologyGroup {
    size_t dimension;
    std::vector<std::vector<fp_t>> representatives;
};

/// H^i of the cyclic group on the module: kernel/image linear algebra from
/// the norm element tr = 1 + g + ... + g^{order-1}.
CohomologyGroup cyclic_cohomology(const CyclicModule& M, int i);

}  // namespace modinv
