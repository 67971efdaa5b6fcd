#pragma once

#include <cstddef>
#include <vector>

#include "modinv/poly.hpp"

namespace modinv {

/// Resource caps for basis computations. Exceeding either throws
/// ResourceLimit; the CLI maps that to exit code 2.
struct Caps {
    size_t max_basis = 20000;
    long max_degree = 200;
};

/// A list of homogeneous generators over a shared ambient.
struct IdealSpec {
    AmbientPtr ring;
    std::vector<Polynomial> generators;

    IdealSpec(AmbientPtr R, std::vector<Polynomial> gens);
};

/// Reduced Groebner basis: monic elements, no leading term divides another,
/// tails fully reduced; sorted ascending by leading monomial.
class GroebnerBasis {
public:
    const AmbientPtr& ring() const { return R_; }
    const std::vector<Polynomial>& elements() const { return els_; }
    bool is_unit_ideal() const;
    std::vector<Monomial> leading_monomials() const;

    /// Wraps elements already known to form a reduced basis (e.g. the x-free
    /// part of an elimination basis, or test fixtures).
    static GroebnerBasis from_reduced(AmbientPtr R, std::vector<Polynomial> els);

private:
    friend GroebnerBasis buchberger(const IdealSpec&, MonomialOrder, const Caps&);
    AmbientPtr R_;
    std::vector<Polynomial> els_;
};

/// Buchberger with normal pair selection (minimal lcm degree, ties broken by
/// the order on the lcm, then indices) and Gebauer-Moeller pair elimination.
/// Deterministic for fixed input.
GroebnerBasis buchberger(const IdealSpec& I, MonomialOrder order, const Caps& caps = {});

/// Fully tail-reduced remainder of f modulo G; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

/// Generators of I intersected with the subring on the last n-k variables.
/// The input ambient must list the k variables to eliminate first; the result
/// lives in a fresh grevlex ambient on the remaining variables.
IdealSpec eliminate(const IdealSpec& I, int first_k, const Caps& caps = {});

}  // namespace modinv
