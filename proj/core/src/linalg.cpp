#include "modinv/linalg.hpp"

#include <algorithm>

namespace modinv {

FpMatrix FpMatrix::identity(PrimeField F, size_t n) {
    FpMatrix I(F, n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
    FpMatrix r(F_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            fp_t v = at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = F_.add(r.at(i, j), F_.mul(v, o.at(k, j)));
        }
    }
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<size_t> FpMatrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t piv = r;
        while (piv < rows_ && at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
        fp_t inv = F_.inv(at(r, c));
        for (size_t j = c; j < cols_; ++j) at(r, j) = F_.mul(at(r, j), inv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            fp_t f = at(i, c);
            for (size_t j = c; j < cols_; ++j)
                at(i, j) = F_.sub(at(i, j), F_.mul(f, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t FpMatrix::rank() const {
    FpMatrix tmp = *this;
    return tmp.rref().size();
}

fp_t FpMatrix::det() const {
    if (rows_ != cols_) throw InternalError("det of non-square matrix");
    FpMatrix tmp = *this;
    fp_t d = 1;
    for (size_t c = 0; c < cols_; ++c) {
        size_t piv = c;
        while (piv < rows_ && tmp.at(piv, c) == 0) ++piv;
        if (piv == rows_) return 0;
        if (piv != c) {
            for (size_t j = 0; j < cols_; ++j) std::swap(tmp.at(piv, j), tmp.at(c, j));
            d = F_.neg(d);
        }
        d = F_.mul(d, tmp.at(c, c));
        fp_t inv = F_.inv(tmp.at(c, c));
        for (size_t i = c + 1; i < rows_; ++i) {
            fp_t f = F_.mul(tmp.at(i, c), inv);
            if (f == 0) continue;
            for (size_t j = c; j < cols_; ++j)
                tmp.at(i, j) = F_.sub(tmp.at(i, j), F_.mul(f, tmp.at(c, j)));
        }
    }
    return d;
}

FpMatrix FpMatrix::inverse() const {
    if (rows_ != cols_) throw SingularMatrix("inverse of non-square matrix");
    FpMatrix aug(F_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto piv = aug.rref();
    if (piv.size() != rows_ || piv.back() >= cols_) throw SingularMatrix();
    FpMatrix r(F_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

std::vector<std::vector<fp_t>> FpMatrix::kernel_basis() const {
    FpMatrix tmp = *this;
    auto pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<fp_t>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<fp_t> v(cols_, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F_.neg(tmp.at(r, c));
        basis.push_back(std::move(v));
    }
    return rref_rows(F_, std::move(basis));
}

std::vector<std::vector<fp_t>> rref_rows(PrimeField F, std::vector<std::vector<fp_t>> rows) {
    if (rows.empty()) return rows;
    size_t cols = rows[0].size();
    FpMatrix M(F, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) M.at(i, j) = rows[i][j];
    auto piv = M.rref();
    std::vector<std::vector<fp_t>> out;
    for (size_t i = 0; i < piv.size(); ++i) {
        std::vector<fp_t> v(cols);
        for (size_t j = 0; j < cols; ++j) v[j] = M.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

void reduce_against(PrimeField F, std::vector<fp_t>& v,
                    const std::vector<std::vector<fp_t>>& rref) {
    for (auto& row : rref) {
        size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        fp_t c = v[p];
        if (c == 0) continue;
        for (size_t j = p; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, row[j]));
    }
}

Polynomial apply_matrix(const FpMatrix& M, const Polynomial& f) {
    const AmbientPtr& R = f.ring();
    for (int w : R->weights)
        if (w != 1) throw AmbientMismatch("apply_matrix requires the unweighted ring");
    if (M.rows() != static_cast<size_t>(R->nvars) || M.rows() != M.cols())
        throw AmbientMismatch("matrix size does not match variable count");
    if (M.det() == 0) throw SingularMatrix();
    std::vector<Polynomial> images;
    images.reserve(M.rows());
    for (size_t i = 0; i < M.rows(); ++i) {
        std::vector<Term> terms;
        for (size_t j = 0; j < M.cols(); ++j) {
            if (M.at(i, j) != 0)
                terms.push_back({Monomial::variable(static_cast<int>(j), *R), M.at(i, j)});
        }
        images.push_back(Polynomial(R, std::move(terms)));
    }
    return substitute(f, images);
}

}  // namespace modinv
