#include "modinv/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace modinv {

MatrixGroup MatrixGroup::closure(PrimeField F, int n, std::vector<FpMatrix> generators,
                                 size_t cap) {
    if (generators.empty()) throw ValidationError("group needs at least one generator");
    for (auto& g : generators) {
        if (g.rows() != static_cast<size_t>(n) || g.cols() != static_cast<size_t>(n))
            throw ValidationError("generator size does not match the dimension");
        if (g.det() == 0) throw SingularMatrix();
    }
    if (cap < 1) throw ValidationError("closure cap must be positive");

    MatrixGroup G(F, n);
    FpMatrix id = FpMatrix::identity(F, static_cast<size_t>(n));
    std::set<std::vector<fp_t>> seen;
    std::deque<size_t> frontier;

    auto add = [&](const FpMatrix& m) -> bool {
        if (!seen.insert(m.flat()).second) return false;
        G.elements_.push_back(m);
        if (G.elements_.size() > cap)
            throw GroupTooLarge("group closure exceeds cap " + std::to_string(cap));
        frontier.push_back(G.elements_.size() - 1);
        return true;
    };

    add(id);
    for (auto& g : generators) {
        bool fresh = add(g);
        // generator index points at the element equal to it
        for (size_t i = 0; i < G.elements_.size(); ++i) {
            if (G.elements_[i] == g) {
                G.gen_idx_.push_back(i);
                break;
            }
        }
        (void)fresh;
    }
    while (!frontier.empty()) {
        size_t idx = frontier.front();
        frontier.pop_front();
        for (auto& g : generators) {
            FpMatrix prod = G.elements_[idx] * g;
            add(prod);
        }
    }
    return G;
}

std::vector<FpMatrix> MatrixGroup::generators() const {
    std::vector<FpMatrix> out;
    out.reserve(gen_idx_.size());
    for (size_t i : gen_idx_) out.push_back(elements_[i]);
    return out;
}

Polynomial transfer(const Polynomial& f, const MatrixGroup& G) {
    Polynomial acc = Polynomial::zero(f.ring());
    for (auto& g : G.elements()) acc = acc + apply_matrix(g, f);
    return acc;
}

Polynomial norm(const Polynomial& f, const MatrixGroup& G) {
    if (!f.is_homogeneous()) throw ValidationError("norm expects a homogeneous input");
    Polynomial acc = Polynomial::constant(f.ring(), 1);
    for (auto& g : G.elements()) acc = acc * apply_matrix(g, f);
    return acc;
}

Polynomial reynolds(const Polynomial& f, const MatrixGroup& G) {
    if (G.is_modular()) throw ModularAction();
    const PrimeField& F = G.field();
    fp_t inv_order = F.inv(F.reduce(G.order()));
    return transfer(f, G).scaled(inv_order);
}

InvariantBasis invariant_basis(const MatrixGroup& G, const AmbientPtr& xring, int degree) {
    if (degree < 0) throw ValidationError("degree must be non-negative");
    const Ambient& R = *xring;
    const PrimeField& F = G.field();
    std::vector<Monomial> monos = monomials_of_degree(R, degree);
    const size_t N = monos.size();

    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < N; ++i) index.emplace(monos[i], i);

    // stack (action(g) - id) over the generators; kernel = fixed space
    auto gens = G.generators();
    FpMatrix stacked(F, gens.size() * N, N);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (size_t j = 0; j < N; ++j) {
            Polynomial img = apply_matrix(gens[gi], Polynomial::monomial(xring, monos[j], 1));
            for (auto& tm : img.terms()) {
                size_t row = gi * N + index.at(tm.mono);
                stacked.at(row, j) = F.add(stacked.at(row, j), tm.coeff);
            }
            size_t diag = gi * N + j;
            stacked.at(diag, j) = F.sub(stacked.at(diag, j), 1);
        }
    }
    std::vector<std::vector<fp_t>> kernel = stacked.kernel_basis();

    InvariantBasis out;
    out.degree = degree;
    out.ambient_dim = N;
    for (auto& v : kernel) {
        std::vector<Term> terms;
        for (size_t j = 0; j < N; ++j)
            if (v[j] != 0) terms.push_back({monos[j], v[j]});
        out.basis.push_back(Polynomial(xring, std::move(terms)));
    }
    return out;
}

CyclicModule::CyclicModule(FpMatrix g, size_t declared_order)
    : generator(std::move(g)), order(declared_order) {
    if (generator.rows() != generator.cols())
        throw ValidationError("cyclic module generator must be square");
    if (order < 1) throw ValidationError("declared order must be positive");
    FpMatrix p = FpMatrix::identity(generator.field(), generator.rows());
    for (size_t i = 0; i < order; ++i) p = p * generator;
    if (!(p == FpMatrix::identity(generator.field(), generator.rows())))
        throw ValidationError("generator_matrix^order must be the identity");
}

CohomologyGroup cyclic_cohomology(const CyclicModule& M, int i) {
    if (i < 0) throw ValidationError("cohomological degree must be non-negative");
    const PrimeField& F = M.generator.field();
    const size_t k = M.generator.rows();
    FpMatrix id = FpMatrix::identity(F, k);

    FpMatrix g_minus_id(F, k, k);
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < k; ++c)
            g_minus_id.at(r, c) = F.sub(M.generator.at(r, c), id.at(r, c));

    FpMatrix tr(F, k, k);
    FpMatrix pw = id;
    for (size_t j = 0; j < M.order; ++j) {
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) tr.at(r, c) = F.add(tr.at(r, c), pw.at(r, c));
        pw = pw * M.generator;
    }

    auto quotient = [&](const FpMatrix& ker_of, const FpMatrix& im_of) -> CohomologyGroup {
        std::vector<std::vector<fp_t>> ker = ker_of.kernel_basis();
        // image basis: row space of the transpose
        std::vector<std::vector<fp_t>> imrows;
        FpMatrix t = im_of.transpose();
        for (size_t r = 0; r < t.rows(); ++r) {
            std::vector<fp_t> row(k);
            for (size_t c = 0; c < k; ++c) row[c] = t.at(r, c);
            imrows.push_back(std::move(row));
        }
        std::vector<std::vector<fp_t>> im = rref_rows(F, std::move(imrows));
        std::vector<std::vector<fp_t>> reps;
        for (auto& v : ker) {
            std::vector<fp_t> w = v;
            reduce_against(F, w, im);
            if (std::any_of(w.begin(), w.end(), [](fp_t x) { return x != 0; }))
                reps.push_back(std::move(w));
        }
        reps = rref_rows(F, std::move(reps));
        return CohomologyGroup{reps.size(), std::move(reps)};
    };

    if (i == 0) {
        std::vector<std::vector<fp_t>> ker = g_minus_id.kernel_basis();
        return CohomologyGroup{ker.size(), std::move(ker)};
    }
    if (i % 2 == 1) return quotient(tr, g_minus_id);
    return quotient(g_minus_id, tr);
}

}  // namespace modinv
