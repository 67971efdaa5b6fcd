#pragma once

#include <vector>

#include "modinv/groebner.hpp"

namespace modinv {

/// Krull dimension sentinel for the zero module / unit ideal.
inline constexpr int kDimEmpty = -1;

/// Hilbert series as numerator over prod_i (1 - t^{d_i}). The numerator comes
/// from the leading ideal (Bayer-Stillman style variable splitting), so the
/// reduced form is not enforced; expansion coefficients are the graded
/// dimensions and must be non-negative.
struct HilbertSeries {
    std::vector<long long> numerator;       // coefficient of t^k at index k
    std::vector<int> denominator_weights;   // multiset {d_i}

    /// Power-series coefficients for degrees 0..upto.
    std::vector<long long> expand(long upto) const;
    /// Pole order at t = 1; equals the Krull dimension. kDimEmpty when the
    /// numerator is identically zero.
    int pole_order() const;
};

/// Numerator of the Hilbert series of ambient/(monomial ideal).
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, const Ambient& R);

/// Hilbert series of ambient/ideal from a Groebner basis.
HilbertSeries hilbert_series(const GroebnerBasis& G);

/// Krull dimension of ambient/ideal via maximal independent variable sets on
/// the leading ideal. Returns kDimEmpty for the unit ideal.
int krull_dimension(const GroebnerBasis& G);
int krull_dimension_leads(const std::vector<Monomial>& leads, int nvars);

/// Polynomial-in-t helpers shared with the resolution Euler check.
std::vector<long long> poly_t_mul_one_minus(std::vector<long long> a, int w);
std::vector<long long> poly_t_add(std::vector<long long> a, const std::vector<long long>& b,
                                  long long scale = 1);
void poly_t_trim(std::vector<long long>& a);

}  // namespace modinv
