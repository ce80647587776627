#pragma once

// Brute-force ground truth for quotients S/J by bihomogeneous ideals:
// bases of bidegree pieces, and Tor_i(S/J, k) as the homology of the Koszul
// complex on the variables tensored with S/J, one bidegree at a time.
// Results are certified inside the requested window only.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "resint/bipoly.hpp"
#include "resint/bkm.hpp"
#include "resint/combinatorics.hpp"
#include "resint/exactla.hpp"

namespace resint {

template <CoefficientField F>
struct IdealSpec {
    RingSpec<F> ring;
    std::vector<BiPoly<F>> generators;

    IdealSpec(RingSpec<F> r, std::vector<BiPoly<F>> gens) : ring(std::move(r)), generators(std::move(gens)) {
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (!(generators[i].ring() == ring)) throw RingError("ideal generator from a different ring");
            if (!generators[i].is_bihomogeneous())
                throw RingError("ideal generator " + std::to_string(i + 1) + " (" + generators[i].str() +
                                ") is not bihomogeneous");
        }
    }
};

/// One bidegree piece of S, split into the ideal piece (reduced echelon form in
/// monomial coordinates) and a standard-monomial basis of the quotient piece.
template <CoefficientField F>
class PieceBasis {
public:
    using value_type = typename F::value_type;

    PieceBasis(const IdealSpec<F>& ideal, Bidegree deg) : deg_(deg), field_(ideal.ring.field) {
        const auto& ring = ideal.ring;
        monomials_ = monomial_basis(ring, deg);
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].exps, i);

        std::vector<std::pair<const BiPoly<F>*, std::vector<Monomial>>> products;
        std::size_t nrows = 0;
        for (const auto& g : ideal.generators) {
            if (g.is_zero()) continue;
            auto mults = monomial_basis(ring, deg - *g.bidegree());
            nrows += mults.size();
            products.emplace_back(&g, std::move(mults));
        }
        FieldMatrix<F> span(field_, nrows, monomials_.size());
        std::size_t row = 0;
        for (const auto& [g, mults] : products)
            for (const auto& mu : mults) {
                for (const auto& [mono, c] : g->terms()) span(row, index_.at((mono * mu).exps)) = c;
                ++row;
            }
        echelon_ = echelon(std::move(span));

        pivot_row_.assign(monomials_.size(), npos);
        for (std::size_t r = 0; r < echelon_.pivots.size(); ++r) pivot_row_[echelon_.pivots[r]] = r;
        quotient_index_.assign(monomials_.size(), npos);
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            if (pivot_row_[i] == npos) {
                quotient_index_[i] = standard_.size();
                standard_.push_back(i);
            }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bidegree degree() const { return deg_; }
    std::size_t dim() const { return monomials_.size(); }
    std::size_t ideal_dim() const { return echelon_.rank(); }
    std::size_t quotient_dim() const { return standard_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    const EchelonForm<F>& ideal_echelon() const { return echelon_; }

    /// Standard monomials, i.e. those that are not leading monomials of the
    /// ideal piece under the degrevlex order.
    std::vector<Monomial> standard_monomials() const {
        std::vector<Monomial> out;
        for (auto i : standard_) out.push_back(monomials_[i]);
        return out;
    }
    const Monomial& standard_monomial(std::size_t q) const { return monomials_[standard_[q]]; }

    std::optional<std::size_t> find(const Monomial& m) const {
        auto it = index_.find(m.exps);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// out += c * (normal form of monomial #idx) in quotient coordinates.
    void accumulate_normal_form(std::size_t idx, const value_type& c, std::vector<value_type>& out,
                                std::size_t offset = 0) const {
        if (quotient_index_[idx] != npos) {
            auto& slot = out[offset + quotient_index_[idx]];
            slot = field_.add(slot, c);
            return;
        }
        // pivot monomial: m_p = -sum_{non-pivot} row(r, j) m_j modulo the ideal
        const std::size_t r = pivot_row_[idx];
        for (std::size_t q = 0; q < standard_.size(); ++q) {
            const auto& v = echelon_.rows(r, standard_[q]);
            if (field_.is_zero(v)) continue;
            auto& slot = out[offset + q];
            slot = field_.sub(slot, field_.mul(c, v));
        }
    }

    /// Reduces f (bihomogeneous of this bidegree) to quotient coordinates.
    std::vector<value_type> normal_form(const BiPoly<F>& f) const {
        std::vector<value_type> out(quotient_dim(), field_.zero());
        for (const auto& [m, c] : f.terms()) {
            auto idx = find(m);
            if (!idx) throw RingError("normal_form: " + f.str() + " has a term outside bidegree " + deg_.str());
            accumulate_normal_form(*idx, c, out);
        }
        return out;
    }

private:
    Bidegree deg_;
    F field_;
    std::vector<Monomial> monomials_;
    std::map<std::vector<int>, std::size_t> index_;
    EchelonForm<F> echelon_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::size_t> quotient_index_;
    std::vector<std::size_t> standard_;
};

template <CoefficientField F>
PieceBasis<F> ideal_piece(const IdealSpec<F>& ideal, int u, int v) {
    if (u < 0 || v < 0) throw std::invalid_argument("ideal_piece needs a nonnegative bidegree");
    return PieceBasis<F>(ideal, Bidegree{u, v});
}

/// x- and y-regularity read off a Betti window. Window-limited: entries
/// outside the window are not seen.
struct RegWindow {
    int reg_x = 0;
    int reg_y = 0;
    bool window_limited = true;
};

inline RegWindow reg_window_of(const BettiTable& t) {
    const auto r = reg_xy_from_table(t);
    return {r.reg_x, r.reg_y, true};
}

/// Memoizing Tor engine for one ideal. Pieces are computed in a sequential
/// pass; the per-bidegree homology computations then run in parallel over
/// the shared read-only pieces.
template <CoefficientField F>
class TorOracle {
public:
    using value_type = typename F::value_type;

    /// Koszul complex on all n+p variables (bigraded Tor over S).
    explicit TorOracle(IdealSpec<F> ideal) : ideal_(std::move(ideal)) {
        for (int v = 0; v < ideal_.ring.nvars(); ++v) vars_.push_back(v);
    }
    /// Koszul complex on a chosen subset of variables (0-based global indices).
    TorOracle(IdealSpec<F> ideal, std::vector<int> vars) : ideal_(std::move(ideal)), vars_(std::move(vars)) {}

    const IdealSpec<F>& ideal() const { return ideal_; }

    const PieceBasis<F>& piece(Bidegree d) {
        auto it = pieces_.find(d);
        if (it == pieces_.end()) it = pieces_.emplace(d, PieceBasis<F>(ideal_, d)).first;
        return it->second;
    }

    std::size_t quotient_dim(Bidegree d) {
        if (!d.nonnegative()) return 0;
        return piece(d).quotient_dim();
    }

    /// beta_i at each bidegree; values for positions 0..i_max.
    std::vector<std::size_t> betti_column(Bidegree deg, int i_max) {
        prepare(deg);
        return betti_column_prepared(deg, i_max);
    }

    std::size_t tor_betti(int i, Bidegree deg) {
        if (i < 0) return 0;
        return betti_column(deg, i)[static_cast<std::size_t>(i)];
    }

    /// All nonzero beta_{i,(a,b)} with i <= i_max, 0 <= a <= a_max, 0 <= b <= b_max.
    BettiTable betti_window(int i_max, int a_max, int b_max, unsigned threads = 0) {
        if (i_max < 0 || a_max < 0 || b_max < 0) throw std::invalid_argument("window bounds must be >= 0");
        std::vector<Bidegree> degs;
        for (int a = 0; a <= a_max; ++a)
            for (int b = 0; b <= b_max; ++b) degs.push_back({a, b});
        for (const auto& d : degs) prepare(d);

        std::vector<std::vector<std::size_t>> columns(degs.size());
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, static_cast<unsigned>(degs.size()));
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    for (std::size_t k = t; k < degs.size(); k += threads)
                        columns[k] = betti_column_prepared(degs[k], i_max);
                });
        }
        BettiTable table;
        for (std::size_t k = 0; k < degs.size(); ++k)
            for (int i = 0; i <= i_max; ++i) {
                const auto b = columns[k][static_cast<std::size_t>(i)];
                if (b > 0) table.insert_unique(i, degs[k], static_cast<std::int64_t>(b));
            }
        return table;
    }

private:
    Bidegree var_degree(int v) const { return v < ideal_.ring.n ? Bidegree{1, 0} : Bidegree{0, 1}; }

    void prepare(Bidegree deg) {
        for (int u = 0; u <= deg.a; ++u)
            for (int v = 0; v <= deg.b; ++v) piece({u, v});
    }

    const PieceBasis<F>* find_piece(Bidegree d) const {
        auto it = pieces_.find(d);
        return it == pieces_.end() ? nullptr : &it->second;
    }

    struct Position {
        std::vector<Subset> subsets;  // into vars_
        std::vector<std::size_t> offsets;
        std::map<Subset, std::size_t> index;
        std::size_t dim = 0;
    };

    Bidegree subset_degree(const Subset& t) const {
        Bidegree d{};
        for (int j : t) d = d + var_degree(vars_[static_cast<std::size_t>(j)]);
        return d;
    }

    Position position(Bidegree deg, int k) const {
        Position pos;
        for (auto& t : subsets(static_cast<int>(vars_.size()), k)) {
            const Bidegree rest = deg - subset_degree(t);
            if (!rest.nonnegative()) continue;
            const auto* pc = find_piece(rest);
            pos.index.emplace(t, pos.subsets.size());
            pos.offsets.push_back(pos.dim);
            pos.dim += pc->quotient_dim();
            pos.subsets.push_back(std::move(t));
        }
        return pos;
    }

    // Matrix of d_k : C_k -> C_{k-1} at bidegree deg.
    FieldMatrix<F> koszul_map(Bidegree deg, const Position& src, const Position& tgt) const {
        const F& k = ideal_.ring.field;
        FieldMatrix<F> m(k, tgt.dim, src.dim);
        std::vector<value_type> col(tgt.dim, k.zero());
        const int n = ideal_.ring.n, p = ideal_.ring.p;
        for (std::size_t s = 0; s < src.subsets.size(); ++s) {
            const auto& t = src.subsets[s];
            const auto* from = find_piece(deg - subset_degree(t));
            for (std::size_t q = 0; q < from->quotient_dim(); ++q) {
                std::fill(col.begin(), col.end(), k.zero());
                const Monomial& mono = from->standard_monomial(q);
                for (std::size_t j = 0; j < t.size(); ++j) {
                    Subset rest = t;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
                    const std::size_t ti = tgt.index.at(rest);
                    const int var = vars_[static_cast<std::size_t>(t[j])];
                    const Var v = var < n ? Var::x(var) : Var::y(var - n);
                    const Monomial image = mono * Monomial::variable(n, p, v);
                    const auto* to = find_piece(deg - subset_degree(rest));
                    const auto idx = to->find(image);
                    const value_type sign = j % 2 == 0 ? k.one() : k.neg(k.one());
                    to->accumulate_normal_form(*idx, sign, col, tgt.offsets[ti]);
                }
                const std::size_t c = src.offsets[s] + q;
                for (std::size_t r = 0; r < tgt.dim; ++r) m(r, c) = col[r];
            }
        }
        return m;
    }

    std::vector<std::size_t> betti_column_prepared(Bidegree deg, int i_max) const {
        const int nv = static_cast<int>(vars_.size());
        const int top = std::min(i_max + 1, nv);
        std::vector<Position> positions;
        for (int k = 0; k <= top; ++k) positions.push_back(position(deg, k));
        std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[k] = rank d_k
        for (int k = 1; k <= top; ++k) {
            const auto& src = positions[static_cast<std::size_t>(k)];
            const auto& tgt = positions[static_cast<std::size_t>(k - 1)];
            if (src.dim == 0 || tgt.dim == 0) continue;
            ranks[static_cast<std::size_t>(k)] = rank(koszul_map(deg, src, tgt));
        }
        std::vector<std::size_t> out(static_cast<std::size_t>(i_max + 1), 0);
        for (int i = 0; i <= std::min(i_max, nv); ++i) {
            const auto ui = static_cast<std::size_t>(i);
            out[ui] = positions[ui].dim - ranks[ui] - ranks[ui + 1];
        }
        return out;
    }

    IdealSpec<F> ideal_;
    std::vector<int> vars_;
    std::map<Bidegree, PieceBasis<F>> pieces_;
};

template <CoefficientField F>
std::size_t tor_betti(const IdealSpec<F>& ideal, int i, int a, int b) {
    TorOracle<F> oracle(ideal);
    return oracle.tor_betti(i, Bidegree{a, b});
}

template <CoefficientField F>
BettiTable betti_window(const IdealSpec<F>& ideal, int i_max, int a_max, int b_max) {
    TorOracle<F> oracle(ideal);
    return oracle.betti_window(i_max, a_max, b_max);
}

template <CoefficientField F>
RegWindow reg_window(const IdealSpec<F>& ideal, int i_max, int a_max, int b_max) {
    return reg_window_of(betti_window(ideal, i_max, a_max, b_max));
}

namespace detail {

template <CoefficientField F>
void require_x_only(const IdealSpec<F>& ideal) {
    for (const auto& g : ideal.generators)
        for (const auto& [m, c] : g.terms())
            if (m.ydeg() != 0) throw RingError("graded_betti_x: generator " + g.str() + " involves y-variables");
}

template <CoefficientField F>
std::vector<int> x_vars(const IdealSpec<F>& ideal) {
    std::vector<int> xs;
    for (int i = 0; i < ideal.ring.n; ++i) xs.push_back(i);
    return xs;
}

}  // namespace detail

/// Single-graded beta_{i,t}^{R_x}(R_x / G) for an ideal generated in x alone.
template <CoefficientField F>
std::size_t graded_betti_x(const IdealSpec<F>& ideal, int i, int t) {
    detail::require_x_only(ideal);
    TorOracle<F> oracle(ideal, detail::x_vars(ideal));
    return oracle.tor_betti(i, Bidegree{t, 0});
}

/// All nonzero beta_{i,t}^{R_x}(R_x / G) for i <= i_max, t <= t_max, stored
/// with bidegree (t, 0).
template <CoefficientField F>
BettiTable graded_betti_x_window(const IdealSpec<F>& ideal, int i_max, int t_max) {
    detail::require_x_only(ideal);
    TorOracle<F> oracle(ideal, detail::x_vars(ideal));
    return oracle.betti_window(i_max, t_max, 0);
}

/// Regularity of the ideal G (not the quotient) seen in a single-graded
/// window: max over i >= 1 of t - i + 1 with beta_{i,t}(R/G) != 0.
inline std::optional<int> ideal_reg_in_window(const BettiTable& quotient_table) {
    std::optional<int> r;
    for (const auto& e : quotient_table.rows())
        if (e.i >= 1) r = std::max(r.value_or(INT32_MIN), e.deg.a - e.i + 1);
    return r;
}

/// True iff beta_{i,t}(R/G) = 0 for every i >= 1 and t != i + d - 1 in the table.
inline bool linear_in_window(const BettiTable& quotient_table, int d) {
    for (const auto& e : quotient_table.rows())
        if (e.i >= 1 && e.deg.a != e.i + d - 1) return false;
    return true;
}

/// Membership of a bihomogeneous f in the ideal's piece of f's bidegree.
template <CoefficientField F>
bool ideal_contains(const IdealSpec<F>& ideal, const BiPoly<F>& f) {
    if (f.is_zero()) return true;
    const auto d = f.bidegree();
    if (!d) throw RingError("ideal_contains: " + f.str() + " is not bihomogeneous");
    const PieceBasis<F> piece(ideal, *d);
    const auto nf = piece.normal_form(f);
    return std::all_of(nf.begin(), nf.end(), [&](const auto& v) { return ideal.ring.field.is_zero(v); });
}

}  // namespace resint
