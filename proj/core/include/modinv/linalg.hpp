#pragma once

#include <vector>

#include "modinv/field.hpp"
#include "modinv/poly.hpp"

namespace modinv {

/// Dense row-major matrix over F_p. Used for group elements and for all
/// degree-slice computations (fixed spaces, echelon forms, cohomology).
class FpMatrix {
public:
    FpMatrix(PrimeField F, size_t rows, size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMatrix identity(PrimeField F, size_t n);

    const PrimeField& field() const { return F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    fp_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    fp_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

    FpMatrix operator*(const FpMatrix& o) const;
    bool operator==(const FpMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    /// Flattened entries; canonical key for dedup and ordering.
    const std::vector<fp_t>& flat() const { return a_; }

    fp_t det() const;
    FpMatrix inverse() const;  // throws SingularMatrix
    FpMatrix transpose() const;

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref();
    size_t rank() const;
    /// Basis of the right kernel {v : Av = 0}, rows in RREF.
    std::vector<std::vector<fp_t>> kernel_basis() const;

private:
    PrimeField F_;
    size_t rows_, cols_;
    std::vector<fp_t> a_;
};

/// Row space helper: reduced row echelon basis of a span, dropping zero rows.
std::vector<std::vector<fp_t>> rref_rows(PrimeField F, std::vector<std::vector<fp_t>> rows);

/// Reduce v against RREF rows (pivot columns assumed normalized); in place.
void reduce_against(PrimeField F, std::vector<fp_t>& v,
                    const std::vector<std::vector<fp_t>>& rref);

/// Degree-preserving substitution x_i -> sum_j M[i][j] x_j. Requires an
/// unweighted ambient and an invertible matrix.
Polynomial apply_matrix(const FpMatrix& M, const Polynomial& f);

}  // namespace modinv
