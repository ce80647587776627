#pragma once

// Rees algebra pipeline for an ideal I of R_x with a linear p x (p-1)
// presentation matrix Phi: transpose Phi to the y-linear matrix phi, form the
// residual intersection J = <z> + I_n(phi), and attach certificates whose
// unverified hypotheses are carried in an assumption ledger.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "resint/bipoly.hpp"
#include "resint/bkm.hpp"
#include "resint/combinatorics.hpp"
#include "resint/diagonal.hpp"
#include "resint/en.hpp"
#include "resint/exactla.hpp"
#include "resint/freecomplex.hpp"
#include "resint/oracle.hpp"

namespace resint {

/// p x m matrix over R_x with entries zero or of bidegree (1,0); rows are
/// indexed by the y-variables, so the ring has exactly p of them.
template <CoefficientField F>
class PresentationMatrix {
public:
    using Grid = std::vector<std::vector<BiPoly<F>>>;

    PresentationMatrix(RingSpec<F> ring, Grid entries) : ring_(std::move(ring)), entries_(std::move(entries)) {
        if (entries_.empty() || entries_[0].empty()) throw ShapeError("presentation matrix is empty");
        if (static_cast<int>(entries_.size()) != ring_.p)
            throw ShapeError("presentation matrix has " + std::to_string(entries_.size()) +
                             " rows but the ring has p = " + std::to_string(ring_.p));
        const std::size_t m = entries_[0].size();
        for (std::size_t j = 0; j < entries_.size(); ++j) {
            if (entries_[j].size() != m) throw ShapeError("presentation matrix has ragged rows");
            for (std::size_t k = 0; k < m; ++k) {
                const auto& f = entries_[j][k];
                if (!(f.ring() == ring_)) throw RingError("presentation entry from a different ring");
                if (!f.is_zero() && f.bidegree() != Bidegree{1, 0})
                    throw HypothesisError("presentation matrix is not linear: entry (" + std::to_string(j + 1) + "," +
                                          std::to_string(k + 1) + ") = " + f.str() + " is not a linear form in x");
            }
        }
    }

    const RingSpec<F>& ring() const { return ring_; }
    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return static_cast<int>(entries_[0].size()); }
    const BiPoly<F>& operator()(int j, int k) const {
        return entries_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    const Grid& entries() const { return entries_; }

private:
    RingSpec<F> ring_;
    Grid entries_;
};

enum class AssumptionStatus { Validated, Evidence, Assumed, Failed };

inline std::string to_string(AssumptionStatus s) {
    switch (s) {
        case AssumptionStatus::Validated: return "validated";
        case AssumptionStatus::Evidence: return "evidence";
        case AssumptionStatus::Assumed: return "assumed";
        case AssumptionStatus::Failed: return "failed";
    }
    return "?";
}

struct AssumptionItem {
    std::string name;
    AssumptionStatus status = AssumptionStatus::Assumed;
    std::string detail;
};

struct AssumptionLedger {
    std::vector<AssumptionItem> items;

    bool any_failed() const {
        return std::any_of(items.begin(), items.end(),
                           [](const auto& a) { return a.status == AssumptionStatus::Failed; });
    }
    std::vector<std::string> unverified() const {
        std::vector<std::string> out;
        for (const auto& a : items)
            if (a.status != AssumptionStatus::Validated) out.push_back(a.name);
        return out;
    }
};

template <CoefficientField F>
struct SetupOptions {
    /// EN exactness is checked in internal degrees <= en_through.
    int en_through = 6;
    /// Hilbert-Burch exactness is checked in x-degrees <= hb_through.
    int hb_through = 12;
    /// Elements claimed to lie in I = I_{p-1}(Phi); checked by membership only.
    std::vector<BiPoly<F>> witnesses;
};

/// phi_{ik} = sum_j coeff(Phi_{jk}, x_i) y_j, so that [y] Phi = [x] phi.
template <CoefficientField F>
LinearMatrixY<F> transpose_to_phi(const PresentationMatrix<F>& Phi) {
    const auto& ring = Phi.ring();
    typename LinearMatrixY<F>::Grid g(static_cast<std::size_t>(ring.n));
    for (int i = 0; i < ring.n; ++i)
        for (int k = 0; k < Phi.cols(); ++k) {
            BiPoly<F> e(ring);
            for (int j = 0; j < Phi.rows(); ++j) {
                if (Phi(j, k).is_zero()) continue;
                e += coeff_of_variable(Phi(j, k), Var::x(i)) * BiPoly<F>::variable(ring, Var::y(j));
            }
            g[static_cast<std::size_t>(i)].push_back(std::move(e));
        }
    LinearMatrixY<F> phi(ring, std::move(g));
    for (int k = 0; k < Phi.cols(); ++k) {
        BiPoly<F> lhs(ring), rhs(ring);
        for (int j = 0; j < Phi.rows(); ++j) lhs += BiPoly<F>::variable(ring, Var::y(j)) * Phi(j, k);
        for (int i = 0; i < ring.n; ++i) rhs += BiPoly<F>::variable(ring, Var::x(i)) * phi(i, k);
        if (!(lhs == rhs))
            throw std::logic_error("transpose_to_phi: [y]Phi != [x]phi in column " + std::to_string(k + 1));
    }
    return phi;
}

/// f_j = (-1)^{j+1} det(Phi without row j), j = 1..p, checked against [f] Phi = 0.
template <CoefficientField F>
std::vector<BiPoly<F>> hilbert_burch_generators(const PresentationMatrix<F>& Phi) {
    const auto& ring = Phi.ring();
    const int p = Phi.rows();
    if (Phi.cols() != p - 1)
        throw ShapeError("Hilbert-Burch needs a p x (p-1) matrix, got " + std::to_string(p) + "x" +
                         std::to_string(Phi.cols()));
    std::vector<BiPoly<F>> f;
    for (int j = 0; j < p; ++j) {
        std::vector<std::vector<BiPoly<F>>> sub;
        for (int r = 0; r < p; ++r)
            if (r != j) sub.push_back(Phi.entries()[static_cast<std::size_t>(r)]);
        BiPoly<F> d = determinant(ring, sub);
        f.push_back(j % 2 == 0 ? d : -d);
    }
    for (int k = 0; k < Phi.cols(); ++k) {
        BiPoly<F> s(ring);
        for (int j = 0; j < p; ++j) s += f[static_cast<std::size_t>(j)] * Phi(j, k);
        if (!s.is_zero())
            throw std::logic_error("Hilbert-Burch syzygy fails in column " + std::to_string(k + 1) + ": " + s.str());
    }
    return f;
}

/// z's of phi followed by its signed maximal minors.
template <CoefficientField F>
std::vector<BiPoly<F>> residual_intersection_generators(const LinearMatrixY<F>& phi) {
    auto gens = phi.z();
    for (auto& m : signed_maximal_minors(phi)) gens.push_back(std::move(m));
    return gens;
}

/// 0 -> R_x^{p-1} --Phi--> R_x^p --[f]--> R_x over S, degrees (t,0).
template <CoefficientField F>
FreeComplex<F> hilbert_burch_complex(const PresentationMatrix<F>& Phi) {
    const auto& ring = Phi.ring();
    const int p = Phi.rows();
    const auto f = hilbert_burch_generators(Phi);
    ShiftedFreeModule f0{{Bidegree{0, 0}}, {}}, f1, f2;
    for (int j = 0; j < p; ++j) f1.shifts.push_back({p - 1, 0});
    for (int k = 0; k < p - 1; ++k) f2.shifts.push_back({p, 0});
    typename PolyMatrix<F>::Entries d1{f};
    PolyMatrix<F> m1(ring, f1, f0, std::move(d1));
    PolyMatrix<F> m2(ring, f2, f1, Phi.entries());
    return FreeComplex<F>(ring, BaseRing::S, {f0, f1, f2}, {m1, m2});
}

/// Homology of the Hilbert-Burch complex vanishes at positions 1, 2 in
/// degrees (t,0), t <= through.
template <CoefficientField F>
bool hilbert_burch_exactness(const PresentationMatrix<F>& Phi, int through) {
    const auto cx = hilbert_burch_complex(Phi);
    if (!compose_zero_check(cx).ok) return false;
    for (int t = 0; t <= through; ++t) {
        const auto s = strand_at(cx, Bidegree{t, 0});
        if (s.homology(1) != 0 || s.homology(2) != 0) return false;
    }
    return true;
}

template <CoefficientField F>
struct ReesModel {
    PresentationMatrix<F> Phi;
    LinearMatrixY<F> phi;
    std::vector<BiPoly<F>> z;
    std::vector<BiPoly<F>> f;
    std::vector<BiPoly<F>> J;
    AssumptionLedger ledger;

    const RingSpec<F>& ring() const { return Phi.ring(); }
    int n() const { return ring().n; }
    int p() const { return ring().p; }
    int m() const { return p() - 1; }
    int d() const { return p() - 1; }
};

/// Hard checks (shape p x (p-1), linearity, p > n) throw; height conditions
/// become ledger items, with EN exactness and witness membership as evidence.
template <CoefficientField F>
AssumptionLedger validate_setup(const PresentationMatrix<F>& Phi, const SetupOptions<F>& opts = {}) {
    const auto& ring = Phi.ring();
    const int n = ring.n, p = Phi.rows();
    if (Phi.cols() != p - 1)
        throw HypothesisError("presentation matrix must be p x (p-1), got " + std::to_string(p) + "x" +
                              std::to_string(Phi.cols()));
    if (p <= n)
        throw HypothesisError("need mu(I) = p > n, got p = " + std::to_string(p) + ", n = " + std::to_string(n));

    AssumptionLedger ledger;
    ledger.items.push_back({"Phi is p x (p-1)", AssumptionStatus::Validated,
                            std::to_string(p) + "x" + std::to_string(p - 1)});
    ledger.items.push_back({"Phi is linear", AssumptionStatus::Validated, "all entries are zero or linear forms in x"});
    ledger.items.push_back({"p > n", AssumptionStatus::Validated,
                            "p = " + std::to_string(p) + ", n = " + std::to_string(n)});

    // Fitting-ideal form of the local generation condition: hgt I_{p-i}(Phi) > i, 1 <= i <= n-1.
    for (int i = 1; i <= n - 1; ++i) {
        AssumptionItem item{"hgt(I_" + std::to_string(p - i) + "(Phi)) >= " + std::to_string(i + 1),
                            AssumptionStatus::Assumed, "not certified; no height computation is performed"};
        if (i == 1) {
            // Exactness of 0 -> R^{p-1} --Phi--> R^p --f--> R forces grade I_{p-1}(Phi) >= 2;
            // it is checked in x-degrees <= hb_through only.
            const auto hb = hilbert_burch_exactness(Phi, opts.hb_through);
            if (hb) {
                item.status = AssumptionStatus::Evidence;
                item.detail = "Hilbert-Burch complex exact at positions >= 1 in x-degrees <= " +
                              std::to_string(opts.hb_through);
            } else {
                item.status = AssumptionStatus::Failed;
                item.detail = "Hilbert-Burch complex not exact in x-degree window <= " + std::to_string(opts.hb_through);
            }
            if (item.status != AssumptionStatus::Failed && !opts.witnesses.empty()) {
                const IdealSpec<F> I(ring, hilbert_burch_generators(Phi));
                std::string missing;
                for (const auto& w : opts.witnesses)
                    if (!w.bidegree() || w.bidegree()->b != 0 || !ideal_contains(I, w))
                        missing += (missing.empty() ? "" : ", ") + w.str();
                if (missing.empty()) {
                    item.detail += "; witness membership in I verified for " + std::to_string(opts.witnesses.size()) +
                                   " element(s) (membership alone does not certify height)";
                } else {
                    item.status = AssumptionStatus::Failed;
                    item.detail = "witness not in I: " + missing;
                }
            }
        }
        ledger.items.push_back(std::move(item));
    }

    const auto phi = transpose_to_phi(Phi);
    const int m = p - 1;
    const auto en = eagon_northcott(phi);
    const auto cz = compose_zero_check(en.complex);
    const auto rep = exactness_report(en.complex, opts.en_through, positions_from(en.complex, 1));
    AssumptionItem grade{"hgt(I_" + std::to_string(n) + "(phi)) >= " + std::to_string(m - n + 1),
                         AssumptionStatus::Evidence,
                         "Eagon-Northcott complex of phi exact at positions >= 1 in internal degrees <= " +
                             std::to_string(opts.en_through)};
    if (!cz.ok) {
        grade.status = AssumptionStatus::Failed;
        grade.detail = "Eagon-Northcott differentials d_" + std::to_string(*cz.first_failure) + " d_" +
                       std::to_string(*cz.first_failure + 1) + " do not compose to zero";
    } else if (!rep.exact()) {
        const auto bad = *rep.first_nonzero();
        grade.status = AssumptionStatus::Failed;
        grade.detail = "Eagon-Northcott homology nonzero at position " + std::to_string(bad.position) +
                       ", degree " + bad.degree.str();
    }
    ledger.items.push_back(std::move(grade));
    ledger.items.push_back({"J is a geometric " + std::to_string(m) + "-residual intersection of <x>",
                            AssumptionStatus::Assumed, "consequence of the height conditions above"});
    return ledger;
}

template <CoefficientField F>
ReesModel<F> build_rees_model(const PresentationMatrix<F>& Phi, const SetupOptions<F>& opts = {}) {
    auto ledger = validate_setup(Phi, opts);
    auto phi = transpose_to_phi(Phi);
    auto z = phi.z();
    auto f = hilbert_burch_generators(Phi);
    auto J = residual_intersection_generators(phi);
    return {Phi, std::move(phi), std::move(z), std::move(f), std::move(J), std::move(ledger)};
}

template <CoefficientField F>
IdealSpec<F> build_J(const ReesModel<F>& model) {
    return IdealSpec<F>(model.ring(), model.J);
}

/// I = <f_1, ..., f_p> inside R_x (embedded in S).
template <CoefficientField F>
IdealSpec<F> build_I(const ReesModel<F>& model) {
    return IdealSpec<F>(model.ring(), model.f);
}

/// Generators of I^s: all s-fold products of the f's (s = 0 gives the unit ideal).
template <CoefficientField F>
IdealSpec<F> power_ideal(const ReesModel<F>& model, int s) {
    if (s < 0) throw std::invalid_argument("power_ideal needs s >= 0");
    const auto& ring = model.ring();
    std::vector<BiPoly<F>> gens;
    const int p = static_cast<int>(model.f.size());
    // multisets of size s from {0..p-1} as nondecreasing index vectors
    std::vector<int> idx(static_cast<std::size_t>(s), 0);
    while (true) {
        BiPoly<F> g = BiPoly<F>::constant(ring, ring.field.one());
        for (int i : idx) g = g * model.f[static_cast<std::size_t>(i)];
        gens.push_back(std::move(g));
        int k = s - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == p - 1) --k;
        if (k < 0) break;
        const int v = idx[static_cast<std::size_t>(k)] + 1;
        for (int j = k; j < s; ++j) idx[static_cast<std::size_t>(j)] = v;
    }
    return IdealSpec<F>(ring, std::move(gens));
}

/// dim (I^s)_t.
template <CoefficientField F>
std::size_t power_piece_dim(const ReesModel<F>& model, int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("power_piece_dim needs s, t >= 0");
    return PieceBasis<F>(power_ideal(model, s), Bidegree{t, 0}).ideal_dim();
}

struct RomerBound {
    int s = 0;
    int bound = 0;
    std::string verdict;
};

/// reg(I^s) <= s d + reg_x(S/J) with reg_x(S/J) = 0 from the closed-form table.
template <CoefficientField F>
RomerBound romer_bound(const ReesModel<F>& model, int s) {
    if (s < 0) throw std::invalid_argument("romer_bound needs s >= 0");
    const int reg_x = reg_xy_from_table(bkm_betti_table(model.n(), model.m())).reg_x;
    return {s, s * model.d() + reg_x, "linear resolution for all s, conditional on the assumption ledger"};
}

struct PowerRegCheck {
    int s = 0;
    int bound = 0;
    int i_max = 0;
    int t_max = 0;
    BettiTable table;  // beta_{i,t}(R_x / I^s), t stored as bidegree (t,0)
    std::optional<int> reg;
    bool linear = false;

    bool confirmed() const { return linear && reg && *reg == bound; }
};

/// Window check of reg(I^s) = s d: the resolution of R_x/I^s seen for i <= i_max, t <= t_max.
template <CoefficientField F>
PowerRegCheck power_regularity_check(const ReesModel<F>& model, int s, int i_max, int t_max) {
    if (s < 1) throw std::invalid_argument("power_regularity_check needs s >= 1");
    PowerRegCheck c;
    c.s = s;
    c.bound = romer_bound(model, s).bound;
    c.i_max = i_max;
    c.t_max = t_max;
    c.table = graded_betti_x_window(power_ideal(model, s), i_max, t_max);
    c.reg = ideal_reg_in_window(c.table);
    c.linear = linear_in_window(c.table, s * model.d());
    return c;
}

struct ReesCertificates {
    DiagonalSpec delta;
    int dim = 0;
    Verdict cm = Verdict::Inconclusive;
    std::string cm_reason;
    std::optional<CmCertificate> cm_detail;
    KoszulCertificate koszul;
    std::optional<int> depth_bound;
    std::vector<AssumptionItem> assumptions;
};

/// CM certified iff c > (p-1)e (through the shift criterion with dim = n) or
/// c = e = 1; Koszul through the a/b-max bound.
template <CoefficientField F>
ReesCertificates rees_certificates(const ReesModel<F>& model, DiagonalSpec delta) {
    ReesCertificates out;
    out.delta = delta;
    out.dim = model.n();
    out.assumptions = model.ledger.items;
    const auto shifts = bkm_shifts(model.n(), model.m());
    const auto depth = depth_lower_bound(shifts, delta, model.p());
    out.depth_bound = depth.bound;
    if (delta.c > model.d() * delta.e) {
        auto cert = cm_certificate(model.n(), shifts, delta, model.p());
        out.cm = cert.verdict;
        out.cm_reason = "c > (p-1)e: " + cert.reason;
        out.cm_detail = std::move(cert);
    } else if (delta.c == 1 && delta.e == 1) {
        out.cm = Verdict::Certified;
        out.cm_reason = "c = e = 1";
    } else {
        out.cm_reason = "neither c > (p-1)e nor c = e = 1";
    }
    out.koszul = koszul_certificate(shifts, delta);
    return out;
}

}  // namespace resint
