#include "modinv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace modinv {

Ambient::Ambient(PrimeField f, int n, std::vector<int> w, MonomialOrder o)
    : field(f), nvars(n), weights(std::move(w)), order(o) {
    if (n < 1 || n > 64) throw ValidationError("variable count must be in [1, 64]");
    if (static_cast<int>(weights.size()) != n)
        throw ValidationError("weight vector length must equal variable count");
    for (int wi : weights)
        if (wi <= 0) throw ValidationError("weights must be positive");
    if (order.tag == MonomialOrder::Tag::elimination &&
        (order.elim_k < 1 || order.elim_k > n))
        throw ValidationError("elimination block size out of range");
}

AmbientPtr make_xring(std::uint32_t p, int nvars) {
    return std::make_shared<Ambient>(PrimeField(p), nvars,
                                     std::vector<int>(static_cast<size_t>(nvars), 1),
                                     MonomialOrder::grevlex());
}

AmbientPtr make_ambient(std::uint32_t p, std::vector<int> weights, MonomialOrder order) {
    int n = static_cast<int>(weights.size());
    return std::make_shared<Ambient>(PrimeField(p), n, std::move(weights), order);
}

Monomial::Monomial(std::vector<std::uint16_t> exps, const Ambient& R) : e_(std::move(exps)) {
    if (static_cast<int>(e_.size()) != R.nvars)
        throw AmbientMismatch("exponent vector length mismatch");
    deg_ = 0;
    for (size_t i = 0; i < e_.size(); ++i) deg_ += static_cast<long>(e_[i]) * R.weights[i];
}

Monomial Monomial::one(const Ambient& R) {
    return Monomial(std::vector<std::uint16_t>(static_cast<size_t>(R.nvars), 0), R);
}

Monomial Monomial::variable(int i, const Ambient& R) {
    std::vector<std::uint16_t> e(static_cast<size_t>(R.nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    return Monomial(std::move(e), R);
}

bool Monomial::divides(const Monomial& m) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m, const Ambient&) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = static_cast<std::uint16_t>(e_[i] + m.e_[i]);
    r.deg_ = deg_ + m.deg_;
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& m, const Ambient&) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < m.e_[i]) return std::nullopt;
        r.e_[i] = static_cast<std::uint16_t>(e_[i] - m.e_[i]);
    }
    r.deg_ = deg_ - m.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& m, const Ambient& R) const {
    std::vector<std::uint16_t> e(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], m.e_[i]);
    return Monomial(std::move(e), R);
}

bool Monomial::coprime(const Monomial& m) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0 && m.e_[i] != 0) return false;
    return true;
}

namespace {

// grevlex tie-break on [lo, hi): of two distinct monomials with equal weighted
// degree, the one with the smaller exponent at the last differing index wins.
int grevlex_tie(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? +1 : -1;
    }
    return 0;
}

long partial_deg(const Monomial& a, const Ambient& R, int lo, int hi) {
    long d = 0;
    for (int i = lo; i < hi; ++i) d += static_cast<long>(a.exp(i)) * R.weights[static_cast<size_t>(i)];
    return d;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const Ambient& R) {
    const int n = R.nvars;
    switch (R.order.tag) {
        case MonomialOrder::Tag::grevlex: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? +1 : -1;
            return grevlex_tie(a, b, 0, n);
        }
        case MonomialOrder::Tag::lex: {
            for (int i = 0; i < n; ++i)
                if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? +1 : -1;
            return 0;
        }
        case MonomialOrder::Tag::elimination: {
            const int k = R.order.elim_k;
            for (int i = 0; i < k; ++i)
                if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? +1 : -1;
            long da = partial_deg(a, R, k, n), db = partial_deg(b, R, k, n);
            if (da != db) return da > db ? +1 : -1;
            return grevlex_tie(a, b, k, n);
        }
    }
    return 0;
}

Polynomial::Polynomial(AmbientPtr R, std::vector<Term> terms)
    : R_(std::move(R)), t_(std::move(terms)) {
    canonicalize();
}

void Polynomial::canonicalize() {
    const Ambient& R = *R_;
    std::sort(t_.begin(), t_.end(), [&](const Term& x, const Term& y) {
        return mono_cmp(x.mono, y.mono, R) > 0;
    });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& tm : t_) {
        fp_t c = R.field.reduce(tm.coeff);
        if (!out.empty() && out.back().mono == tm.mono) {
            out.back().coeff = R.field.add(out.back().coeff, c);
            if (out.back().coeff == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back({tm.mono, c});
        }
    }
    t_ = std::move(out);
}

Polynomial Polynomial::from_sorted(AmbientPtr R, std::vector<Term> terms) {
    Polynomial f(std::move(R));
    f.t_ = std::move(terms);
    return f;
}

Polynomial Polynomial::constant(AmbientPtr R, fp_t c) {
    Polynomial f(R);
    c = R->field.reduce(c);
    if (c != 0) f.t_.push_back({Monomial::one(*R), c});
    return f;
}

Polynomial Polynomial::monomial(AmbientPtr R, Monomial m, fp_t c) {
    Polynomial f(R);
    c = R->field.reduce(c);
    if (c != 0) f.t_.push_back({std::move(m), c});
    return f;
}

Polynomial Polynomial::variable(AmbientPtr R, int i) {
    return monomial(R, Monomial::variable(i, *R), 1);
}

const Term& Polynomial::leading_term() const {
    if (t_.empty()) throw InternalError("leading term of zero polynomial");
    return t_.front();
}

bool Polynomial::is_homogeneous() const {
    if (t_.empty()) return true;
    long d = t_.front().mono.degree();
    for (auto& tm : t_)
        if (tm.mono.degree() != d) return false;
    return true;
}

void check_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!f.ring() || !g.ring() || !f.ring()->same_ring(*g.ring()))
        throw AmbientMismatch();
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    check_same_ring(*this, g);
    const Ambient& R = *R_;
    std::vector<Term> out;
    out.reserve(t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
        int c = mono_cmp(t_[i].mono, g.t_[j].mono, R);
        if (c > 0) {
            out.push_back(t_[i++]);
        } else if (c < 0) {
            out.push_back(g.t_[j++]);
        } else {
            fp_t s = R.field.add(t_[i].coeff, g.t_[j].coeff);
            if (s != 0) out.push_back({t_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) out.push_back(t_[i]);
    for (; j < g.t_.size(); ++j) out.push_back(g.t_[j]);
    Polynomial r(R_);
    r.t_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    return *this + g.scaled(R_->field.neg(1));
}

Polynomial Polynomial::scaled(fp_t c) const {
    c = R_->field.reduce(c);
    Polynomial r(R_);
    if (c == 0) return r;
    r.t_ = t_;
    for (auto& tm : r.t_) tm.coeff = R_->field.mul(tm.coeff, c);
    return r;
}

Polynomial Polynomial::monic() const {
    if (t_.empty()) return *this;
    return scaled(R_->field.inv(t_.front().coeff));
}

Polynomial Polynomial::times_term(const Monomial& m, fp_t c) const {
    c = R_->field.reduce(c);
    Polynomial r(R_);
    if (c == 0) return r;
    r.t_.reserve(t_.size());
    for (auto& tm : t_)
        r.t_.push_back({tm.mono.times(m, *R_), R_->field.mul(tm.coeff, c)});
    return r;  // multiplicative order: sortedness is preserved
}

Polynomial Polynomial::minus_term_times(fp_t c, const Monomial& m, const Polynomial& g) const {
    const Ambient& R = *R_;
    c = R.field.reduce(c);
    std::vector<Term> out;
    out.reserve(t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
        Monomial gm = g.t_[j].mono.times(m, R);
        int cc = mono_cmp(t_[i].mono, gm, R);
        if (cc > 0) {
            out.push_back(t_[i++]);
        } else if (cc < 0) {
            fp_t v = R.field.neg(R.field.mul(c, g.t_[j].coeff));
            if (v != 0) out.push_back({std::move(gm), v});
            ++j;
        } else {
            fp_t v = R.field.sub(t_[i].coeff, R.field.mul(c, g.t_[j].coeff));
            if (v != 0) out.push_back({t_[i].mono, v});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) out.push_back(t_[i]);
    for (; j < g.t_.size(); ++j) {
        fp_t v = R.field.neg(R.field.mul(c, g.t_[j].coeff));
        if (v != 0) out.push_back({g.t_[j].mono.times(m, R), v});
    }
    Polynomial r(R_);
    r.t_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_same_ring(*this, g);
    const Ambient& R = *R_;
    // accumulate into an order-keyed map, shorter factor outside
    const Polynomial& a = t_.size() <= g.t_.size() ? *this : g;
    const Polynomial& b = t_.size() <= g.t_.size() ? g : *this;
    auto cmp = [&R](const Monomial& x, const Monomial& y) { return mono_cmp(x, y, R) > 0; };
    std::map<Monomial, fp_t, decltype(cmp)> acc(cmp);
    for (auto& ta : a.terms()) {
        for (auto& tb : b.terms()) {
            Monomial m = ta.mono.times(tb.mono, R);
            fp_t v = R.field.mul(ta.coeff, tb.coeff);
            auto [it, fresh] = acc.try_emplace(std::move(m), v);
            if (!fresh) {
                it->second = R.field.add(it->second, v);
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    Polynomial r(R_);
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc) r.t_.push_back({m, c});
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (!R_ || !g.R_) return t_.empty() && g.t_.empty();
    if (!R_->same_ring(*g.R_)) return false;
    if (t_.size() != g.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].mono == g.t_[i].mono) || t_[i].coeff != g.t_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::with_ambient(AmbientPtr R2) const {
    if (!R_->same_ring(*R2)) throw AmbientMismatch("with_ambient requires the same ring");
    Polynomial r(R2, t_);
    return r;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
    if (images.empty()) throw ValidationError("substitute: no images");
    const AmbientPtr& T = images.front().ring();
    for (auto& im : images)
        if (!im.ring()->same_ring(*T)) throw AmbientMismatch("substitute images disagree");
    if (static_cast<int>(images.size()) != f.ring()->nvars)
        throw AmbientMismatch("substitute map must cover all variables");

    // memoized powers of each image
    std::vector<std::vector<Polynomial>> pows(images.size());
    for (size_t i = 0; i < images.size(); ++i) pows[i].push_back(Polynomial::constant(T, 1));
    auto power = [&](size_t i, int e) -> const Polynomial& {
        while (static_cast<int>(pows[i].size()) <= e)
            pows[i].push_back(pows[i].back() * images[i]);
        return pows[i][static_cast<size_t>(e)];
    };

    Polynomial acc = Polynomial::zero(T);
    for (auto& tm : f.terms()) {
        Polynomial prod = Polynomial::constant(T, tm.coeff);
        for (int i = 0; i < f.ring()->nvars; ++i) {
            int e = tm.mono.exp(i);
            if (e > 0) prod = prod * power(static_cast<size_t>(i), e);
        }
        acc = acc + prod;
    }
    return acc;
}

std::string render(const Polynomial& f, const std::string& var_prefix) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& tm : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (tm.coeff != 1 || tm.mono.is_one()) {
            os << tm.coeff;
            printed = true;
        }
        for (int i = 0; i < tm.mono.nvars(); ++i) {
            int e = tm.mono.exp(i);
            if (e == 0) continue;
            if (printed) os << "*";
            os << var_prefix << (i + 1);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, msg); }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const AmbientPtr& R,
                            const std::string& var_prefix, int line_offset) {
    PolyLexer lx{text, 0, line_offset};
    const PrimeField& F = R->field;

    auto parse_factor = [&](fp_t& coeff, std::vector<std::uint16_t>& exps) {
        lx.skip_ws();
        if (lx.pos < lx.s.size() && lx.s.compare(lx.pos, var_prefix.size(), var_prefix) == 0 &&
            lx.pos + var_prefix.size() < lx.s.size() &&
            std::isdigit(static_cast<unsigned char>(lx.s[lx.pos + var_prefix.size()]))) {
            lx.pos += var_prefix.size();
            long long idx = lx.integer();
            if (idx < 1 || idx > R->nvars)
                lx.fail("variable index out of range: " + var_prefix + std::to_string(idx));
            int e = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                long long ee = lx.integer();
                if (ee < 0 || ee > 60000) lx.fail("exponent out of range");
                e = static_cast<int>(ee);
            }
            exps[static_cast<size_t>(idx - 1)] =
                static_cast<std::uint16_t>(exps[static_cast<size_t>(idx - 1)] + e);
        } else if (lx.pos < lx.s.size() &&
                   (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))) {
            long long v = lx.integer();
            coeff = F.mul(coeff, F.from_int(v));
        } else {
            lx.fail("expected variable or integer");
        }
    };

    std::vector<Term> terms;
    bool negate = false;
    if (lx.peek() == '-') {
        negate = true;
        ++lx.pos;
    } else if (lx.peek() == '+') {
        ++lx.pos;
    }
    while (true) {
        fp_t coeff = negate ? F.neg(1) : 1;
        std::vector<std::uint16_t> exps(static_cast<size_t>(R->nvars), 0);
        parse_factor(coeff, exps);
        while (lx.peek() == '*') {
            ++lx.pos;
            parse_factor(coeff, exps);
        }
        terms.push_back({Monomial(std::move(exps), *R), coeff});
        if (lx.eof()) break;
        char c = lx.peek();
        if (c == '+') {
            negate = false;
            ++lx.pos;
        } else if (c == '-') {
            negate = true;
            ++lx.pos;
        } else {
            lx.fail(std::string("unexpected character '") + c + "'");
        }
    }
    return Polynomial(R, std::move(terms));
}

namespace {

void enumerate_rec(const Ambient& R, int var, long remaining,
                   std::vector<std::uint16_t>& cur, std::vector<Monomial>& out) {
    if (var == R.nvars - 1) {
        int w = R.weights[static_cast<size_t>(var)];
        if (remaining % w == 0 && remaining / w <= 60000) {
            cur[static_cast<size_t>(var)] = static_cast<std::uint16_t>(remaining / w);
            out.emplace_back(cur, R);
            cur[static_cast<size_t>(var)] = 0;
        }
        return;
    }
    int w = R.weights[static_cast<size_t>(var)];
    for (long e = 0; e * w <= remaining; ++e) {
        cur[static_cast<size_t>(var)] = static_cast<std::uint16_t>(e);
        enumerate_rec(R, var + 1, remaining - e * w, cur, out);
    }
    cur[static_cast<size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ambient& R, long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<std::uint16_t> cur(static_cast<size_t>(R.nvars), 0);
    enumerate_rec(R, 0, degree, cur, out);
    std::sort(out.begin(), out.end(),
              [&R](const Monomial& a, const Monomial& b) { return mono_cmp(a, b, R) > 0; });
    return out;
}

}  // namespace modinv
