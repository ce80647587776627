#pragma once

// Eagon-Northcott complex of an n x m matrix with y-linear entries, built as
// the dual of the (m-n)-th x-strand of the Koszul complex on z = x * phi,
// augmented by the signed maximal minors.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "resint/bipoly.hpp"
#include "resint/combinatorics.hpp"
#include "resint/exactla.hpp"
#include "resint/freecomplex.hpp"

namespace resint {

/// n x m matrix over R_y whose entries are zero or of bidegree (0,1), with
/// n equal to the number of x-variables of the ring.
template <CoefficientField F>
class LinearMatrixY {
public:
    using Grid = std::vector<std::vector<BiPoly<F>>>;

    LinearMatrixY(RingSpec<F> ring, Grid entries) : ring_(std::move(ring)), entries_(std::move(entries)) {
        const std::size_t n = entries_.size();
        if (n == 0) throw ShapeError("phi needs at least one row");
        if (static_cast<int>(n) != ring_.n)
            throw ShapeError("phi has " + std::to_string(n) + " rows but the ring has n = " + std::to_string(ring_.n));
        const std::size_t m = entries_[0].size();
        if (m < n) throw ShapeError("phi must have m >= n columns, got " + std::to_string(m));
        for (std::size_t i = 0; i < n; ++i) {
            if (entries_[i].size() != m) throw ShapeError("phi has ragged rows");
            for (std::size_t k = 0; k < m; ++k) {
                const auto& f = entries_[i][k];
                if (!(f.ring() == ring_)) throw RingError("phi entry from a different ring");
                if (!f.is_zero() && f.bidegree() != Bidegree{0, 1})
                    throw ShapeError("phi entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") = " +
                                     f.str() + " is not a linear form in y");
            }
        }
    }

    const RingSpec<F>& ring() const { return ring_; }
    int n() const { return static_cast<int>(entries_.size()); }
    int m() const { return static_cast<int>(entries_[0].size()); }
    const BiPoly<F>& operator()(int i, int k) const {
        return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    const Grid& entries() const { return entries_; }

    /// z_k = sum_i x_i phi_{ik}, each zero or of bidegree (1,1).
    std::vector<BiPoly<F>> z() const {
        std::vector<BiPoly<F>> out;
        for (int k = 0; k < m(); ++k) {
            BiPoly<F> zk(ring_);
            for (int i = 0; i < n(); ++i) zk += BiPoly<F>::variable(ring_, Var::x(i)) * (*this)(i, k);
            out.push_back(std::move(zk));
        }
        return out;
    }

    /// det of the n x n submatrix on the given columns.
    BiPoly<F> minor(const Subset& cols) const {
        std::vector<std::vector<BiPoly<F>>> sub(static_cast<std::size_t>(n()));
        for (int i = 0; i < n(); ++i)
            for (int c : cols) sub[static_cast<std::size_t>(i)].push_back((*this)(i, c));
        return determinant(ring_, sub);
    }

private:
    RingSpec<F> ring_;
    Grid entries_;
};

/// Maximal minors, one per n-subset C of columns in lex order, each times
/// the sign of the shuffle ([m] - C, C).
template <CoefficientField F>
std::vector<BiPoly<F>> signed_maximal_minors(const LinearMatrixY<F>& phi) {
    std::vector<BiPoly<F>> out;
    for (const auto& cols : subsets(phi.m(), phi.n())) {
        Subset rest;
        for (int k = 0, j = 0; k < phi.m(); ++k) {
            if (j < static_cast<int>(cols.size()) && cols[static_cast<std::size_t>(j)] == k)
                ++j;
            else
                rest.push_back(k);
        }
        BiPoly<F> d = phi.minor(cols);
        out.push_back(shuffle_sign(rest) > 0 ? d : -d);
    }
    return out;
}

template <CoefficientField F>
struct ENComplex {
    /// Terms 0..m-n+1 over R_y; term 0 is R_y and d_1 is the augmentation.
    FreeComplex<F> complex;
    /// Signed maximal minors in n-subset lex order.
    std::vector<BiPoly<F>> minors;

    const PolyMatrix<F>& epsilon() const { return complex.d(1); }
};

template <CoefficientField F>
ENComplex<F> eagon_northcott(const LinearMatrixY<F>& phi) {
    const auto& ring = phi.ring();
    const int n = phi.n(), m = phi.m();
    const auto z = phi.z();
    const auto koszul = koszul_complex(ring, z, std::vector<Bidegree>(z.size(), Bidegree{1, 1}));
    const auto strand = truncate(x_strand(koszul, m - n), static_cast<std::size_t>(m - n));
    const auto dual = twist(dualize_y(strand), Bidegree{0, m});

    // epsilon: the dual basis element of e_T (T an (m-n)-subset) goes to the
    // shuffle-signed minor on the complementary columns.
    ShiftedFreeModule base;
    base.shifts.push_back({0, 0});
    base.labels.push_back("1");
    const auto& top = dual.term(0);
    typename PolyMatrix<F>::Entries eps(1);
    for (const auto& t : subsets(m, m - n)) {
        Subset comp;
        for (int k = 0, j = 0; k < m; ++k) {
            if (j < static_cast<int>(t.size()) && t[static_cast<std::size_t>(j)] == k)
                ++j;
            else
                comp.push_back(k);
        }
        BiPoly<F> d = phi.minor(comp);
        eps[0].push_back(shuffle_sign(t) > 0 ? d : -d);
    }
    std::vector<ShiftedFreeModule> terms{base};
    std::vector<PolyMatrix<F>> diffs;
    diffs.emplace_back(ring, top, base, std::move(eps));
    for (std::size_t h = 0; h <= dual.length(); ++h) terms.push_back(dual.term(h));
    for (std::size_t h = 1; h <= dual.length(); ++h) diffs.push_back(dual.d(h));
    return {FreeComplex<F>(ring, BaseRing::Ry, std::move(terms), std::move(diffs)), signed_maximal_minors(phi)};
}

/// dim (R_y / I_n(phi))_t for t = 0..through.
template <CoefficientField F>
std::vector<std::size_t> en_h0_dims(const LinearMatrixY<F>& phi, int through) {
    const auto& ring = phi.ring();
    const auto minors = signed_maximal_minors(phi);
    std::vector<std::size_t> out;
    for (int t = 0; t <= through; ++t) {
        const auto basis = monomial_basis(ring, Bidegree{0, t});
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exps, i);
        const auto multipliers = monomial_basis(ring, Bidegree{0, t - phi.n()});
        FieldMatrix<F> span(ring.field, minors.size() * multipliers.size(), basis.size());
        std::size_t row = 0;
        for (const auto& f : minors)
            for (const auto& mu : multipliers) {
                for (const auto& [mono, c] : f.terms()) span(row, index.at((mono * mu).exps)) = c;
                ++row;
            }
        out.push_back(basis.size() - rank(span));
    }
    return out;
}

/// Random n x m matrix of y-linear forms with small integer coefficients.
template <CoefficientField F>
LinearMatrixY<F> random_linear_matrix_y(const RingSpec<F>& ring, int m, std::uint64_t seed, int coeff_bound = 3) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    typename LinearMatrixY<F>::Grid g(static_cast<std::size_t>(ring.n));
    for (auto& row : g)
        for (int k = 0; k < m; ++k) {
            BiPoly<F> f(ring);
            for (int j = 0; j < ring.p; ++j) f += BiPoly<F>::variable(ring, Var::y(j)).scaled(ring.field.from_int(coeff(rng)));
            row.push_back(std::move(f));
        }
    return LinearMatrixY<F>(ring, std::move(g));
}

}  // namespace resint
