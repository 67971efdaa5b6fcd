#include "modinv/hilbert.hpp"

#include <algorithm>
#include <map>

namespace modinv {

void poly_t_trim(std::vector<long long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<long long> poly_t_add(std::vector<long long> a, const std::vector<long long>& b,
                                  long long scale) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
    poly_t_trim(a);
    return a;
}

std::vector<long long> poly_t_mul_one_minus(std::vector<long long> a, int w) {
    // a(t) * (1 - t^w)
    std::vector<long long> r(a.size() + static_cast<size_t>(w), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        r[i + static_cast<size_t>(w)] -= a[i];
    }
    poly_t_trim(r);
    return r;
}

namespace {

std::vector<long long> shift_t(std::vector<long long> a, long k) {
    if (a.empty()) return a;
    std::vector<long long> r(a.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

// remove generators divisible by another; dedupe
void interreduce_monomials(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    std::vector<Monomial> kept;
    for (auto& m : gens) {
        bool dom = false;
        for (auto& k : kept)
            if (k.divides(m)) {
                dom = true;
                break;
            }
        if (!dom) kept.push_back(m);
    }
    gens = std::move(kept);
}

std::vector<long long> numerator_rec(std::vector<Monomial> gens, const Ambient& R) {
    interreduce_monomials(gens);
    if (gens.empty()) return {1};
    if (gens.size() == 1 && gens[0].is_one()) return {};  // unit ideal: zero module

    // pivot on the variable most shared among the mixed (support >= 2)
    // generators; splitting on a variable that only occurs as a pure power
    // would reproduce the same generator set
    std::vector<int> freq(static_cast<size_t>(R.nvars), 0);
    bool all_pure = true;
    for (auto& m : gens) {
        int support = 0;
        for (int i = 0; i < R.nvars; ++i)
            if (m.exp(i) > 0) ++support;
        if (support > 1) {
            all_pure = false;
            for (int i = 0; i < R.nvars; ++i)
                if (m.exp(i) > 0) ++freq[static_cast<size_t>(i)];
        }
    }
    if (all_pure) {
        // pairwise coprime after interreduction: a regular sequence
        std::vector<long long> num = {1};
        for (auto& m : gens) num = poly_t_mul_one_minus(std::move(num), static_cast<int>(m.degree()));
        return num;
    }
    int var = 0;
    for (int i = 1; i < R.nvars; ++i)
        if (freq[static_cast<size_t>(i)] > freq[static_cast<size_t>(var)]) var = i;

    // split on var: HN(I) = HN(I + (x)) + t^w * HN(I : x)
    std::vector<Monomial> plus, colon;
    plus.push_back(Monomial::variable(var, R));
    for (auto& m : gens) {
        if (m.exp(var) == 0) plus.push_back(m);
        auto e = m.exponents();
        if (e[static_cast<size_t>(var)] > 0) e[static_cast<size_t>(var)] -= 1;
        colon.emplace_back(std::move(e), R);
    }
    std::vector<long long> a = numerator_rec(std::move(plus), R);
    std::vector<long long> b = numerator_rec(std::move(colon), R);
    return poly_t_add(std::move(a), shift_t(std::move(b), R.weights[static_cast<size_t>(var)]));
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, const Ambient& R) {
    return numerator_rec(std::move(gens), R);
}

HilbertSeries hilbert_series(const GroebnerBasis& G) {
    const Ambient& R = *G.ring();
    HilbertSeries H;
    H.numerator = hilbert_numerator(G.leading_monomials(), R);
    H.denominator_weights = R.weights;
    return H;
}

std::vector<long long> HilbertSeries::expand(long upto) const {
    std::vector<long long> c(static_cast<size_t>(upto) + 1, 0);
    for (size_t i = 0; i < numerator.size() && i <= static_cast<size_t>(upto); ++i)
        c[i] = numerator[i];
    // divide by (1 - t^w): partial sums with stride w
    for (int w : denominator_weights)
        for (size_t d = static_cast<size_t>(w); d <= static_cast<size_t>(upto); ++d)
            c[d] += c[d - static_cast<size_t>(w)];
    return c;
}

int HilbertSeries::pole_order() const {
    std::vector<long long> num = numerator;
    poly_t_trim(num);
    if (num.empty()) return kDimEmpty;
    int mult = 0;
    while (true) {
        long long at_one = 0;
        for (long long v : num) at_one += v;
        if (at_one != 0) break;
        // synthetic division by (1 - t): q(t) = num(t) / (1 - t)
        std::vector<long long> q(num.size() - 1, 0);
        long long carry = 0;
        for (size_t i = 0; i + 1 < num.size(); ++i) {
            carry += num[i];
            q[i] = carry;
        }
        num = std::move(q);
        poly_t_trim(num);
        ++mult;
        if (num.empty()) throw InternalError("hilbert numerator vanished during deflation");
    }
    return static_cast<int>(denominator_weights.size()) - mult;
}

namespace {

struct IndepContext {
    std::vector<std::uint64_t> supports;
    std::map<std::uint64_t, int> memo;

    int best(std::uint64_t allowed) {
        auto it = memo.find(allowed);
        if (it != memo.end()) return it->second;
        // find a support contained in allowed
        std::uint64_t bad = 0;
        for (auto s : supports) {
            if ((s & ~allowed) == 0) {
                bad = s;
                break;
            }
        }
        int result;
        if (bad == 0) {
            result = static_cast<int>(__builtin_popcountll(allowed));
        } else {
            result = 0;
            std::uint64_t rest = bad;
            while (rest) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                result = std::max(result, best(allowed & ~bit));
            }
        }
        memo[allowed] = result;
        return result;
    }
};

}  // namespace

int krull_dimension_leads(const std::vector<Monomial>& leads, int nvars) {
    IndepContext ctx;
    for (auto& m : leads) {
        if (m.is_one()) return kDimEmpty;  // unit ideal
        std::uint64_t s = 0;
        for (int i = 0; i < m.nvars(); ++i)
            if (m.exp(i) > 0) s |= (1ull << i);
        ctx.supports.push_back(s);
    }
    std::uint64_t all = nvars == 64 ? ~0ull : ((1ull << nvars) - 1);
    return ctx.best(all);
}

int krull_dimension(const GroebnerBasis& G) {
    return krull_dimension_leads(G.leading_monomials(), G.ring()->nvars);
}

}  // namespace modinv
