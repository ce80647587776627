#pragma once

// Bigraded polynomial ring S = k[x_1..x_n, y_1..y_p], deg x_i = (1,0),
// deg y_j = (0,1). Polynomials are sparse maps from monomials to nonzero
// coefficients; dense vectors only appear per bidegree piece.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "resint/combinatorics.hpp"
#include "resint/field.hpp"

namespace resint {

struct Bidegree {
    int a = 0;  // x-degree
    int b = 0;  // y-degree

    friend Bidegree operator+(Bidegree l, Bidegree r) { return {l.a + r.a, l.b + r.b}; }
    friend Bidegree operator-(Bidegree l, Bidegree r) { return {l.a - r.a, l.b - r.b}; }
    friend Bidegree operator-(Bidegree d) { return {-d.a, -d.b}; }
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;

    bool nonnegative() const { return a >= 0 && b >= 0; }
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <CoefficientField F>
struct RingSpec {
    int n = 1;  // x-variables
    int p = 1;  // y-variables
    F field{};

    RingSpec() = default;
    RingSpec(int n_, int p_, F field_ = F{}) : n(n_), p(p_), field(std::move(field_)) {
        if (n < 1 || p < 1) throw RingError("ring needs n >= 1 and p >= 1");
    }

    int nvars() const { return n + p; }
    bool operator==(const RingSpec&) const = default;
};

enum class Block { X, Y };

struct Var {
    Block block = Block::X;
    int index = 0;  // 0-based within the block

    static Var x(int i) { return {Block::X, i}; }
    static Var y(int j) { return {Block::Y, j}; }
    std::string str() const { return (block == Block::X ? "x" : "y") + std::to_string(index + 1); }
    bool operator==(const Var&) const = default;
};

/// Exponent vector over the concatenated variables x_1..x_n, y_1..y_p.
struct Monomial {
    std::vector<int> exps;
    int nx = 0;

    Monomial() = default;
    Monomial(int n, int p) : exps(static_cast<std::size_t>(n + p), 0), nx(n) {}
    Monomial(std::vector<int> e, int n) : exps(std::move(e)), nx(n) {}

    static Monomial one(int n, int p) { return Monomial(n, p); }
    static Monomial variable(int n, int p, Var v) {
        Monomial m(n, p);
        m.exps[static_cast<std::size_t>(v.block == Block::X ? v.index : n + v.index)] = 1;
        return m;
    }

    int xdeg() const {
        int s = 0;
        for (int i = 0; i < nx; ++i) s += exps[static_cast<std::size_t>(i)];
        return s;
    }
    int ydeg() const {
        int s = 0;
        for (std::size_t i = static_cast<std::size_t>(nx); i < exps.size(); ++i) s += exps[i];
        return s;
    }
    Bidegree bidegree() const { return {xdeg(), ydeg()}; }
    int total() const {
        int s = 0;
        for (int e : exps) s += e;
        return s;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
        return r;
    }
    Monomial x_part() const {
        Monomial r = *this;
        std::fill(r.exps.begin() + nx, r.exps.end(), 0);
        return r;
    }
    Monomial y_part() const {
        Monomial r = *this;
        std::fill(r.exps.begin(), r.exps.begin() + nx, 0);
        return r;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!s.empty()) s += "*";
            const bool is_x = static_cast<int>(i) < nx;
            s += (is_x ? "x" : "y") + std::to_string(is_x ? i + 1 : i - static_cast<std::size_t>(nx) + 1);
            if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Degree-reverse-lexicographic comparison on the concatenated exponent vector.
/// Returns true when `l` is strictly larger than `r`.
inline bool drl_greater(const Monomial& l, const Monomial& r) {
    const int tl = l.total(), tr = r.total();
    if (tl != tr) return tl > tr;
    for (std::size_t i = l.exps.size(); i-- > 0;) {
        if (l.exps[i] != r.exps[i]) return l.exps[i] < r.exps[i];
    }
    return false;
}

struct DrlDescending {
    bool operator()(const Monomial& l, const Monomial& r) const { return drl_greater(l, r); }
};

/// Number of monomials of bidegree d in n x- and p y-variables:
/// C(a+n-1, n-1) * C(b+p-1, p-1).
inline std::int64_t piece_dim(int n, int p, Bidegree d) {
    if (!d.nonnegative()) return 0;
    return binomial(d.a + n - 1, n - 1) * binomial(d.b + p - 1, p - 1);
}

template <CoefficientField F>
std::int64_t bidegree_piece_dim(const RingSpec<F>& ring, Bidegree d) {
    return piece_dim(ring.n, ring.p, d);
}

namespace detail {

inline void compositions(int nvars, int degree, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, degree);
}

}  // namespace detail

/// All monomials of bidegree d, in descending degrevlex order.
template <CoefficientField F>
std::vector<Monomial> monomial_basis(const RingSpec<F>& ring, Bidegree d) {
    std::vector<Monomial> out;
    if (!d.nonnegative()) return out;
    std::vector<std::vector<int>> xs, ys;
    detail::compositions(ring.n, d.a, xs);
    detail::compositions(ring.p, d.b, ys);
    out.reserve(xs.size() * ys.size());
    for (const auto& xe : xs) {
        for (const auto& ye : ys) {
            std::vector<int> e = xe;
            e.insert(e.end(), ye.begin(), ye.end());
            out.emplace_back(std::move(e), ring.n);
        }
    }
    std::sort(out.begin(), out.end(), DrlDescending{});
    return out;
}

template <CoefficientField F>
class BiPoly {
public:
    using value_type = typename F::value_type;
    using TermMap = std::map<Monomial, value_type, DrlDescending>;

    BiPoly() = default;
    explicit BiPoly(RingSpec<F> ring) : ring_(std::move(ring)) {}

    static BiPoly zero(const RingSpec<F>& ring) { return BiPoly(ring); }
    static BiPoly constant(const RingSpec<F>& ring, const value_type& c) {
        BiPoly f(ring);
        f.add_term(Monomial::one(ring.n, ring.p), c);
        return f;
    }
    static BiPoly variable(const RingSpec<F>& ring, Var v) {
        check_var(ring, v);
        BiPoly f(ring);
        f.add_term(Monomial::variable(ring.n, ring.p, v), ring.field.one());
        return f;
    }
    static BiPoly term(const RingSpec<F>& ring, Monomial m, const value_type& c) {
        BiPoly f(ring);
        f.add_term(std::move(m), c);
        return f;
    }

    const RingSpec<F>& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    value_type coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_.field.zero() : it->second;
    }

    /// Adds c * m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const value_type& c) {
        const F& k = ring_.field;
        if (k.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = k.add(it->second, c);
            if (k.is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Common bidegree of all terms; nullopt for zero or inhomogeneous f.
    std::optional<Bidegree> bidegree() const {
        if (terms_.empty()) return std::nullopt;
        const Bidegree d = terms_.begin()->first.bidegree();
        for (const auto& [m, c] : terms_)
            if (m.bidegree() != d) return std::nullopt;
        return d;
    }
    bool is_bihomogeneous() const { return terms_.empty() || bidegree().has_value(); }

    BiPoly operator+(const BiPoly& g) const {
        check_same_ring(g);
        BiPoly r = *this;
        for (const auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_.field.neg(c));
        return r;
    }
    BiPoly operator-(const BiPoly& g) const { return *this + (-g); }
    BiPoly operator*(const BiPoly& g) const {
        check_same_ring(g);
        BiPoly r(ring_);
        const F& k = ring_.field;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : g.terms_) r.add_term(m1 * m2, k.mul(c1, c2));
        return r;
    }
    BiPoly scaled(const value_type& c) const {
        BiPoly r(ring_);
        if (ring_.field.is_zero(c)) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, ring_.field.mul(v, c));
        return r;
    }
    BiPoly times_monomial(const Monomial& mu) const {
        BiPoly r(ring_);
        for (const auto& [m, v] : terms_) r.terms_.emplace(m * mu, v);
        return r;
    }
    BiPoly& operator+=(const BiPoly& g) { return *this = *this + g; }
    BiPoly& operator-=(const BiPoly& g) { return *this = *this - g; }

    bool operator==(const BiPoly& g) const {
        if (!(ring_ == g.ring_) || terms_.size() != g.terms_.size()) return false;
        auto it = g.terms_.begin();
        for (const auto& [m, c] : terms_) {
            if (!(m == it->first) || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = ring_.field.to_string(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs.erase(0, 1);
            if (first) {
                if (negative) os << "-";
            } else {
                os << (negative ? " - " : " + ");
            }
            const bool unit = cs == "1";
            const bool constant = m.total() == 0;
            if (constant) {
                os << cs;
            } else {
                if (!unit) os << cs << "*";
                os << m.str();
            }
            first = false;
        }
        return os.str();
    }

    static void check_var(const RingSpec<F>& ring, Var v) {
        const int bound = v.block == Block::X ? ring.n : ring.p;
        if (v.index < 0 || v.index >= bound) throw RingError("variable " + v.str() + " not in ring");
    }

private:
    void check_same_ring(const BiPoly& g) const {
        if (!(ring_ == g.ring_)) throw RingError("polynomials belong to different rings");
    }

    RingSpec<F> ring_{};
    TermMap terms_;
};

template <CoefficientField F>
BiPoly<F> poly_mul(const BiPoly<F>& f, const BiPoly<F>& g) {
    return f * g;
}

/// Coefficient of `var` in f, where f is linear in var's block
/// (every term has block-degree exactly one). f = sum_var var * coeff.
template <CoefficientField F>
BiPoly<F> coeff_of_variable(const BiPoly<F>& f, Var var) {
    const auto& ring = f.ring();
    BiPoly<F>::check_var(ring, var);
    const std::size_t slot = static_cast<std::size_t>(var.block == Block::X ? var.index : ring.n + var.index);
    BiPoly<F> out(ring);
    for (const auto& [m, c] : f.terms()) {
        const int block_deg = var.block == Block::X ? m.xdeg() : m.ydeg();
        if (block_deg != 1)
            throw RingError("coeff_of_variable: " + f.str() + " is not linear in the " +
                            (var.block == Block::X ? "x" : "y") + "-block");
        if (m.exps[slot] == 1) {
            Monomial rest = m;
            rest.exps[slot] = 0;
            out.add_term(rest, c);
        }
    }
    return out;
}

/// Determinant of a square polynomial matrix by cofactor expansion.
template <CoefficientField F>
BiPoly<F> determinant(const RingSpec<F>& ring, const std::vector<std::vector<BiPoly<F>>>& m) {
    const std::size_t k = m.size();
    if (k == 0) return BiPoly<F>::constant(ring, ring.field.one());
    for (const auto& row : m)
        if (row.size() != k) throw RingError("determinant of a non-square matrix");
    if (k == 1) return m[0][0];
    BiPoly<F> det(ring);
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<BiPoly<F>>> minor;
        minor.reserve(k - 1);
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<BiPoly<F>> row;
            row.reserve(k - 1);
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        BiPoly<F> t = m[0][c] * determinant(ring, minor);
        if (c % 2 == 0)
            det += t;
        else
            det -= t;
    }
    return det;
}

// ---------------------------------------------------------------------------
// Parsing. Grammar (whitespace ignored):
//   polynomial = ["-"|"+"] term (("+"|"-") term)*
//   term       = coefficient | [coefficient "*"] factor ("*" factor)*
//   factor     = ("x"|"y") index ["^" exponent]
// Coefficients are integers; over Q also "num/den". "0" is the zero polynomial.

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <CoefficientField F>
class PolyParser {
public:
    PolyParser(const RingSpec<F>& ring, const std::string& text) : ring_(ring) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    BiPoly<F> parse() {
        if (s_.empty()) fail("empty polynomial");
        BiPoly<F> out(ring_);
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [mono, coeff] = term();
            if (negative) coeff = ring_.field.neg(coeff);
            out.add_term(mono, coeff);
            first = false;
        }
        return out;
    }

private:
    using value_type = typename F::value_type;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse polynomial '" + s_ + "' at position " + std::to_string(pos_) + ": " +
                         what);
    }

    bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    std::string digits() {
        std::string d;
        while (at_digit()) d += s_[pos_++];
        if (d.empty()) fail("expected a number");
        return d;
    }

    value_type coefficient() {
        std::string num = digits();
        std::string den;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            den = digits();
        }
        if constexpr (std::is_same_v<F, RationalField>) {
            return ring_.field.from_fraction(num, den.empty() ? "1" : den);
        } else {
            if (!den.empty()) {
                auto d = reduce(den);
                if (ring_.field.is_zero(d)) fail("zero denominator");
                return ring_.field.mul(reduce(num), ring_.field.inv(d));
            }
            return reduce(num);
        }
    }

    // Reduces a decimal string into the field without overflowing.
    value_type reduce(const std::string& d) const {
        const F& k = ring_.field;
        value_type acc = k.zero();
        const value_type ten = k.from_int(10);
        for (char ch : d) acc = k.add(k.mul(acc, ten), k.from_int(ch - '0'));
        return acc;
    }

    std::pair<Monomial, value_type> term() {
        Monomial m = Monomial::one(ring_.n, ring_.p);
        value_type c = ring_.field.one();
        bool need_factor = true;
        if (at_digit()) {
            c = coefficient();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
            } else {
                need_factor = false;  // bare constant
            }
        }
        if (need_factor) {
            factor(m);
            while (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                factor(m);
            }
        }
        return {m, c};
    }

    void factor(Monomial& m) {
        if (pos_ >= s_.size() || (s_[pos_] != 'x' && s_[pos_] != 'y')) fail("expected a variable x<i> or y<j>");
        const Block block = s_[pos_] == 'x' ? Block::X : Block::Y;
        ++pos_;
        const int index = std::stoi(digits()) - 1;
        const Var v{block, index};
        try {
            BiPoly<F>::check_var(ring_, v);
        } catch (const RingError& e) {
            fail(e.what());
        }
        int exponent = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            exponent = std::stoi(digits());
            if (exponent < 1) fail("exponents must be positive");
        }
        m.exps[static_cast<std::size_t>(block == Block::X ? index : ring_.n + index)] += exponent;
    }

    const RingSpec<F>& ring_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField F>
BiPoly<F> parse_poly(const RingSpec<F>& ring, const std::string& text) {
    return detail::PolyParser<F>(ring, text).parse();
}

}  // namespace resint
