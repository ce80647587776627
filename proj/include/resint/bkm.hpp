#pragma once

// Closed-form bigraded data of the Bruns-Kustin-Miller resolution of S/J for
// J = <z> + I_n(phi): shifts, Betti numbers and regularities. Pure
// combinatorics; the oracle is the only consumer of actual generators.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "resint/bipoly.hpp"
#include "resint/combinatorics.hpp"
#include "resint/exactla.hpp"
#include "resint/freecomplex.hpp"

namespace resint {

/// A numerical hypothesis (m >= n, an index range, p > m, ...) does not hold.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BettiKey {
    int i = 0;
    Bidegree deg;

    friend auto operator<=>(const BettiKey&, const BettiKey&) = default;
};

struct BettiEntry {
    int i = 0;
    Bidegree deg;
    std::int64_t mult = 0;

    bool operator==(const BettiEntry&) const = default;
};

/// (i, (a,b)) -> beta_{i,(a,b)}, zero entries omitted.
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(int n, int m) : n_(n), m_(m) {}

    void insert_unique(int i, Bidegree d, std::int64_t mult) {
        if (mult <= 0) throw std::invalid_argument("Betti multiplicities must be positive");
        if (!entries_.emplace(BettiKey{i, d}, mult).second)
            throw std::logic_error("duplicate Betti key i=" + std::to_string(i) + " " + d.str());
    }

    std::int64_t at(int i, Bidegree d) const {
        auto it = entries_.find({i, d});
        return it == entries_.end() ? 0 : it->second;
    }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Entries sorted by (i, a, b).
    std::vector<BettiEntry> rows() const {
        std::vector<BettiEntry> out;
        for (const auto& [k, v] : entries_) out.push_back({k.i, k.deg, v});
        return out;
    }

    std::optional<int> n() const { return n_; }
    std::optional<int> m() const { return m_; }
    bool field_independent() const { return field_independent_; }
    void set_field_independent(bool v) { field_independent_ = v; }

    /// Same nonzero entries (metadata ignored).
    bool same_entries(const BettiTable& o) const { return entries_ == o.entries_; }

    /// Keys whose values differ, each as (key, this value, other value).
    std::vector<std::tuple<BettiKey, std::int64_t, std::int64_t>> diff(const BettiTable& o) const {
        std::map<BettiKey, std::pair<std::int64_t, std::int64_t>> all;
        for (const auto& [k, v] : entries_) all[k].first = v;
        for (const auto& [k, v] : o.entries_) all[k].second = v;
        std::vector<std::tuple<BettiKey, std::int64_t, std::int64_t>> out;
        for (const auto& [k, v] : all)
            if (v.first != v.second) out.emplace_back(k, v.first, v.second);
        return out;
    }

    /// Entries with i <= i_max, a <= a_max, b <= b_max.
    BettiTable restricted(int i_max, int a_max, int b_max) const {
        BettiTable t = *this;
        std::erase_if(t.entries_, [&](const auto& kv) {
            return kv.first.i > i_max || kv.first.deg.a > a_max || kv.first.deg.b > b_max;
        });
        return t;
    }

private:
    std::optional<int> n_;
    std::optional<int> m_;
    bool field_independent_ = false;
    std::map<BettiKey, std::int64_t> entries_;
};

/// Per homological index, the shifts (a,b) of the summands S(-a,-b) of F_i.
struct ShiftMultiset {
    int n = 0;
    int m = 0;
    std::vector<std::map<Bidegree, std::int64_t>> by_index;

    std::int64_t rank(int i) const {
        std::int64_t r = 0;
        for (const auto& [d, k] : by_index.at(static_cast<std::size_t>(i))) r += k;
        return r;
    }
    int length() const { return static_cast<int>(by_index.size()) - 1; }
};

inline void check_nm(int n, int m) {
    if (n < 1) throw HypothesisError("need n >= 1, got n = " + std::to_string(n));
    if (m < n) throw HypothesisError("need m >= n, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
}

/// rank of K_a^b over R_y, computed as the kernel dimension of the scalar map
/// (psi^{n-b+1}_{a+n-b})^* from the Koszul complex on x, alongside the
/// closed form C(n+a-1-b, a) * C(n+a, b).
struct KabRank {
    int n = 0;
    int a = 0;
    int b = 0;
    std::int64_t strand_rank = 0;
    std::int64_t formula_rank = 0;

    bool agree() const { return strand_rank == formula_rank; }
};

inline std::int64_t kab_formula_rank(int n, int a, int b) {
    return binomial(n + a - 1 - b, a) * binomial(n + a, b);
}

template <CoefficientField F = PrimeField>
KabRank kab_rank(int n, int a, int b, const F& field = F{}) {
    if (n < 1 || a < 0 || b < 0 || b > n - 1)
        throw HypothesisError("kab_rank needs a >= 0 and 0 <= b <= n-1, got n=" + std::to_string(n) +
                              " a=" + std::to_string(a) + " b=" + std::to_string(b));
    const RingSpec<F> ring(n, 1, field);
    std::vector<BiPoly<F>> xs;
    for (int i = 0; i < n; ++i) xs.push_back(BiPoly<F>::variable(ring, Var::x(i)));
    const auto koszul = koszul_complex(ring, xs);
    const int d = a + n - b;
    const std::size_t k = static_cast<std::size_t>(n - b + 1);  // psi^k : K_k -> K_{k-1}
    // psi^k_d as a scalar matrix: the (d,0) strand of d_k. For b = 0 the
    // source K_{n+1} vanishes and the dual map is zero.
    const auto domain = PieceLayout<F>(ring, BaseRing::S, koszul.term(k - 1), Bidegree{d, 0});
    FieldMatrix<F> dual_map(ring.field, 0, domain.dim());
    if (k <= koszul.length()) dual_map = strand_matrix(koszul.d(k), BaseRing::S, Bidegree{d, 0}).transpose();
    KabRank r{n, a, b, 0, kab_formula_rank(n, a, b)};
    r.strand_rank = static_cast<std::int64_t>(kernel_basis(dual_map).size());
    return r;
}

/// r(i,j) = C(n+i-2j-2, i-1-j) C(n+i-1-j, j) C(m, n+i-1-j) on
/// 1 <= i <= m, max(0, i-(m-n+1)) <= j <= min(i-1, n-1).
inline std::int64_t r_multiplicity(int i, int j, int n, int m) {
    check_nm(n, m);
    if (i < 1 || i > m || j < std::max(0, i - (m - n + 1)) || j > std::min(i - 1, n - 1))
        throw HypothesisError("r(i,j) is defined only for 1 <= i <= m and max(0, i-(m-n+1)) <= j <= min(i-1, n-1); got i=" +
                              std::to_string(i) + " j=" + std::to_string(j));
    return binomial(n + i - 2 * j - 2, i - 1 - j) * binomial(n + i - 1 - j, j) * binomial(m, n + i - 1 - j);
}

inline ShiftMultiset bkm_shifts(int n, int m) {
    check_nm(n, m);
    ShiftMultiset s{n, m, std::vector<std::map<Bidegree, std::int64_t>>(static_cast<std::size_t>(m + 1))};
    s.by_index[0][{0, 0}] = 1;
    for (int i = 1; i <= m; ++i) {
        auto& fi = s.by_index[static_cast<std::size_t>(i)];
        if (i <= n - 1) fi[{i, i}] += binomial(m, i);
        for (int j = std::max(0, i - (m - n + 1)); j <= std::min(i - 1, n - 1); ++j) {
            const auto r = r_multiplicity(i, j, n, m);
            if (r > 0) fi[{j, n + i - 1 - j}] += r;
        }
    }
    return s;
}

inline BettiTable bkm_betti_table(int n, int m) {
    check_nm(n, m);
    BettiTable t(n, m);
    t.set_field_independent(true);
    for (int i = 0; i <= n - 1; ++i) t.insert_unique(i, {i, i}, binomial(m, i));
    for (int i = 1; i <= m; ++i)
        for (int a = std::max(0, i - (m - n + 1)); a <= std::min(i - 1, n - 1); ++a) {
            const auto r = r_multiplicity(i, a, n, m);
            if (r > 0) t.insert_unique(i, {a, n + i - 1 - a}, r);
        }
    return t;
}

struct RegXY {
    int reg_x = 0;
    int reg_y = 0;
    bool operator==(const RegXY&) const = default;
};

/// (max(a - i), max(b - i)) over the nonzero entries.
inline RegXY reg_xy_from_table(const BettiTable& t) {
    if (t.empty()) throw std::invalid_argument("regularity of an empty Betti table");
    RegXY r{INT32_MIN, INT32_MIN};
    for (const auto& e : t.rows()) {
        r.reg_x = std::max(r.reg_x, e.deg.a - e.i);
        r.reg_y = std::max(r.reg_y, e.deg.b - e.i);
    }
    return r;
}

struct AbMax {
    std::vector<int> a_max;
    std::vector<int> b_max;
};

/// Per homological index, the largest a and the largest b among the shifts.
inline AbMax ab_max_sequences(const ShiftMultiset& s) {
    AbMax out;
    for (const auto& fi : s.by_index) {
        int am = 0, bm = 0;
        for (const auto& [d, k] : fi) {
            am = std::max(am, d.a);
            bm = std::max(bm, d.b);
        }
        out.a_max.push_back(am);
        out.b_max.push_back(bm);
    }
    return out;
}

/// Regroups a Betti table as per-index shifts.
inline ShiftMultiset shifts_from_table(const BettiTable& t) {
    ShiftMultiset s;
    s.n = t.n().value_or(0);
    s.m = t.m().value_or(0);
    for (const auto& e : t.rows()) {
        if (static_cast<int>(s.by_index.size()) <= e.i) s.by_index.resize(static_cast<std::size_t>(e.i + 1));
        s.by_index[static_cast<std::size_t>(e.i)][e.deg] += e.mult;
    }
    return s;
}

/// sum_i (-1)^i sum_{(a,b) in F_i} dim S_{(u-a, v-b)}: the Hilbert function of
/// the module resolved by a complex with these shifts.
inline std::int64_t hilbert_from_shifts(const ShiftMultiset& s, int n, int p, Bidegree uv) {
    std::int64_t h = 0;
    for (std::size_t i = 0; i < s.by_index.size(); ++i)
        for (const auto& [d, k] : s.by_index[i]) h += (i % 2 == 0 ? 1 : -1) * k * piece_dim(n, p, uv - d);
    return h;
}

}  // namespace resint
