#pragma once

// Shared fixtures and hand-rolled random generators for the test suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "resint/resint.hpp"

namespace resint::testing {

using P = PrimeField;
using Q = RationalField;

template <CoefficientField F = P>
RingSpec<F> ring(int n, int p, F field = F{}) {
    return RingSpec<F>(n, p, field);
}

template <CoefficientField F>
BiPoly<F> poly(const RingSpec<F>& r, const std::string& s) {
    return parse_poly(r, s);
}

template <CoefficientField F>
typename LinearMatrixY<F>::Grid grid(const RingSpec<F>& r, const std::vector<std::vector<std::string>>& cells) {
    typename LinearMatrixY<F>::Grid g;
    for (const auto& row : cells) {
        std::vector<BiPoly<F>> out;
        for (const auto& c : row) out.push_back(parse_poly(r, c));
        g.push_back(std::move(out));
    }
    return g;
}

/// The 3 x 4 matrix of y-linear forms of the worked n=3, p=5 example.
template <CoefficientField F = P>
LinearMatrixY<F> example_phi(F field = F{}) {
    const auto r = ring<F>(3, 5, field);
    return LinearMatrixY<F>(r, grid(r, {{"y1", "y2", "y3", "y4"}, {"y2", "y3", "y4", "y5"}, {"y3", "y4", "y5", "0"}}));
}

/// Its 5 x 4 banded presentation matrix in x.
template <CoefficientField F = P>
PresentationMatrix<F> example_Phi(F field = F{}) {
    const auto r = ring<F>(3, 5, field);
    return PresentationMatrix<F>(r, grid(r, {{"x1", "0", "0", "0"},
                                             {"x2", "x1", "0", "0"},
                                             {"x3", "x2", "x1", "0"},
                                             {"0", "x3", "x2", "x1"},
                                             {"0", "0", "x3", "x2"}}));
}

template <CoefficientField F = P>
IdealSpec<F> example_J(F field = F{}) {
    const auto phi = example_phi(field);
    return IdealSpec<F>(phi.ring(), residual_intersection_generators(phi));
}

/// n = 2, p = 4 instance with phi = [[y1, y3], [y2, y4]].
template <CoefficientField F = P>
LinearMatrixY<F> small_phi(F field = F{}) {
    const auto r = ring<F>(2, 4, field);
    return LinearMatrixY<F>(r, grid(r, {{"y1", "y3"}, {"y2", "y4"}}));
}

template <CoefficientField F = P>
IdealSpec<F> small_J(F field = F{}) {
    const auto phi = small_phi(field);
    return IdealSpec<F>(phi.ring(), residual_intersection_generators(phi));
}

/// Random generators driven by an explicit seed so failures reproduce.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Random bihomogeneous polynomial of bidegree d with up to `terms` terms.
    template <CoefficientField F>
    BiPoly<F> bihomogeneous(const RingSpec<F>& r, Bidegree d, int terms) {
        const auto basis = monomial_basis(r, d);
        BiPoly<F> f(r);
        if (basis.empty()) return f;
        for (int t = 0; t < terms; ++t) {
            const auto& m = basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
            f.add_term(m, r.field.from_int(uniform(-5, 5)));
        }
        return f;
    }

    /// Random polynomial, not necessarily bihomogeneous.
    template <CoefficientField F>
    BiPoly<F> mixed(const RingSpec<F>& r, int max_deg, int terms) {
        BiPoly<F> f(r);
        for (int t = 0; t < terms; ++t) f += bihomogeneous(r, {uniform(0, max_deg), uniform(0, max_deg)}, 1);
        return f;
    }

    template <CoefficientField F>
    FieldMatrix<F> matrix(const F& field, std::size_t rows, std::size_t cols, int bound = 3) {
        FieldMatrix<F> m(field, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(uniform(-bound, bound));
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace resint::testing
