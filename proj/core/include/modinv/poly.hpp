#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modinv/field.hpp"

namespace modinv {

/// Monomial order tag. elimination(k) is lex on the first k variables
/// refined by weighted grevlex on the rest; it makes the first k variables
/// largest, which is what eliminate() relies on.
struct MonomialOrder {
    enum class Tag { grevlex, lex, elimination };
    Tag tag = Tag::grevlex;
    int elim_k = 0;

    static MonomialOrder grevlex() { return {Tag::grevlex, 0}; }
    static MonomialOrder lex() { return {Tag::lex, 0}; }
    static MonomialOrder elimination(int k) { return {Tag::elimination, k}; }

    bool operator==(const MonomialOrder&) const = default;
};

/// The ambient ring data shared by monomials and polynomials: F_p, variable
/// count, positive integer weights, and the monomial order.
struct Ambient {
    PrimeField field;
    int nvars;
    std::vector<int> weights;
    MonomialOrder order;

    Ambient(PrimeField f, int n, std::vector<int> w, MonomialOrder o);

    bool same_ring(const Ambient& o) const {
        return field == o.field && nvars == o.nvars && weights == o.weights;
    }
    bool operator==(const Ambient& o) const {
        return same_ring(o) && order == o.order;
    }
};

using AmbientPtr = std::shared_ptr<const Ambient>;

/// F_p[x1..xn] with all weights 1 and grevlex; the ring the group acts on.
AmbientPtr make_xring(std::uint32_t p, int nvars);
AmbientPtr make_ambient(std::uint32_t p, std::vector<int> weights,
                        MonomialOrder order = MonomialOrder::grevlex());

/// Exponent vector with cached weighted degree.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint16_t> exps, const Ambient& R);

    static Monomial one(const Ambient& R);
    static Monomial variable(int i, const Ambient& R);

    int nvars() const { return static_cast<int>(e_.size()); }
    std::uint16_t exp(int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<std::uint16_t>& exponents() const { return e_; }
    long degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m, const Ambient& R) const;
    /// Componentwise quotient; nullopt unless other | this.
    std::optional<Monomial> divided_by(const Monomial& m, const Ambient& R) const;
    Monomial lcm(const Monomial& m, const Ambient& R) const;
    bool coprime(const Monomial& m) const;

    bool operator==(const Monomial& m) const { return e_ == m.e_; }
    /// Plain lexicographic on exponent vectors; only for canonical set keys,
    /// not a monomial order.
    bool operator<(const Monomial& m) const { return e_ < m.e_; }

private:
    std::vector<std::uint16_t> e_;
    long deg_ = 0;
};

/// Three-way comparison in the ambient's monomial order: +1 if a > b.
int mono_cmp(const Monomial& a, const Monomial& b, const Ambient& R);

struct Term {
    Monomial mono;
    fp_t coeff;
};

/// Sparse multivariate polynomial; terms sorted descending in the ambient
/// order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(AmbientPtr R) : R_(std::move(R)) {}
    /// Canonicalizes: merges duplicates, drops zeros, sorts.
    Polynomial(AmbientPtr R, std::vector<Term> terms);

    static Polynomial zero(AmbientPtr R) { return Polynomial(std::move(R)); }
    /// Trusted: terms already canonical (sorted descending, nonzero, distinct).
    static Polynomial from_sorted(AmbientPtr R, std::vector<Term> terms);
    static Polynomial constant(AmbientPtr R, fp_t c);
    static Polynomial monomial(AmbientPtr R, Monomial m, fp_t c);
    static Polynomial variable(AmbientPtr R, int i);

    const AmbientPtr& ring() const { return R_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }

    bool is_homogeneous() const;
    /// Weighted degree of the leading term; -1 for the zero polynomial.
    long degree() const { return t_.empty() ? -1 : t_.front().mono.degree(); }

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    bool operator==(const Polynomial& g) const;

    Polynomial scaled(fp_t c) const;
    Polynomial monic() const;
    Polynomial times_term(const Monomial& m, fp_t c) const;
    /// this - c * x^m * g; the reduction workhorse.
    Polynomial minus_term_times(fp_t c, const Monomial& m, const Polynomial& g) const;

    /// Re-sorts the same terms under a different order on the same ring.
    Polynomial with_ambient(AmbientPtr R2) const;

private:
    AmbientPtr R_;
    std::vector<Term> t_;

    void canonicalize();
};

void check_same_ring(const Polynomial& f, const Polynomial& g);

/// Ring homomorphism determined by x_i -> images[i]; images live in a common
/// target ring (which may differ from f's).
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// Canonical text form: descending terms, `x1^2*x3 + 2*x2`, unit coefficients
/// and unit exponents omitted, zero polynomial rendered "0".
std::string render(const Polynomial& f, const std::string& var_prefix = "x");

/// Parses the rendered syntax: ints, variables `<prefix><k>`, `^`, `*`, `+`,
/// `-`. Throws ParseError (line number 1-based from `line_offset`).
Polynomial parse_polynomial(const std::string& text, const AmbientPtr& R,
                            const std::string& var_prefix = "x", int line_offset = 1);

/// All monomials of the given weighted degree, descending in the ring order.
std::vector<Monomial> monomials_of_degree(const Ambient& R, long degree);

}  // namespace modinv
