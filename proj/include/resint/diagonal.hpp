#pragma once

// Numerics and one-sided certificates for diagonal subalgebras (S/J)_Δ along
// Δ = {(ci, ei)}. A failed sufficient criterion is reported as
// "inconclusive", never as a negative claim.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resint/bipoly.hpp"
#include "resint/bkm.hpp"
#include "resint/combinatorics.hpp"

namespace resint {

struct DiagonalSpec {
    int c = 1;
    int e = 1;

    DiagonalSpec() = default;
    DiagonalSpec(int c_, int e_) : c(c_), e(e_) {
        if (c < 1 || e < 1)
            throw HypothesisError("diagonal needs c >= 1 and e >= 1, got (" + std::to_string(c) + "," +
                                  std::to_string(e) + ")");
    }
    Bidegree at(int i) const { return {c * i, e * i}; }
    bool operator==(const DiagonalSpec&) const = default;
};

enum class Verdict { Certified, Inconclusive };

inline std::string to_string(Verdict v) { return v == Verdict::Certified ? "certified" : "inconclusive"; }

struct Hypothesis {
    std::string name;
    bool holds = false;
};

/// Hilbert function of S(-a,-b)_Δ: i -> dim S_{(ci-a, ei-b)}.
struct ShiftedDiagonalHilbert {
    Bidegree shift;
    DiagonalSpec delta;
    int n = 1;
    int p = 1;

    std::int64_t at(int i) const { return piece_dim(n, p, delta.at(i) - shift); }
    int krull_dim() const { return p + n - 1; }
};

inline ShiftedDiagonalHilbert shifted_diag_hilbert(int a, int b, DiagonalSpec delta, int n, int p) {
    return {{a, b}, delta, n, p};
}

/// Cohen-Macaulayness of S(-a,-b)_Δ:
///   floor((a-n)/c) < b/e  and  floor((b-p)/e) < a/c,
/// compared exactly by cross-multiplication.
inline bool shifted_diag_is_cm(int a, int b, DiagonalSpec delta, int n, int p) {
    if (a < 0 || b < 0) throw HypothesisError("shifted_diag_is_cm needs a, b >= 0");
    const bool first = floor_div(a - n, delta.c) * delta.e < b;
    const bool second = floor_div(b - p, delta.e) * delta.c < a;
    return first && second;
}

/// reg of S(-a,-b)_Δ over S_Δ: max(ceil(a/c), ceil(b/e)).
inline std::int64_t shifted_diag_reg(int a, int b, DiagonalSpec delta) {
    if (a < 0 || b < 0) throw HypothesisError("shifted_diag_reg needs a, b >= 0");
    return std::max(ceil_div(a, delta.c), ceil_div(b, delta.e));
}

struct ShiftVerdict {
    int i = 0;
    Bidegree shift;
    bool cm = false;
};

struct DepthBoundReport {
    std::optional<int> bound;
    std::vector<ShiftVerdict> per_shift;
    std::vector<Hypothesis> hypotheses;
};

inline Hypothesis depth_hypothesis(int n, int m, int p) {
    return {"p > m >= n (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", p=" + std::to_string(p) + ")",
            p > m && m >= n};
}

/// depth (S/J)_Δ >= (p+n-1) - m whenever every shift gives a Cohen-Macaulay
/// S(-a,-b)_Δ and p > m >= n. Otherwise the bound is withheld.
inline DepthBoundReport depth_lower_bound(const ShiftMultiset& s, DiagonalSpec delta, int p) {
    DepthBoundReport rep;
    rep.hypotheses.push_back(depth_hypothesis(s.n, s.m, p));
    bool all_cm = true;
    for (std::size_t i = 0; i < s.by_index.size(); ++i)
        for (const auto& [d, k] : s.by_index[i]) {
            const bool cm = shifted_diag_is_cm(d.a, d.b, delta, s.n, p);
            all_cm = all_cm && cm;
            rep.per_shift.push_back({static_cast<int>(i), d, cm});
        }
    if (rep.hypotheses[0].holds && all_cm) rep.bound = p + s.n - (s.m + 1);
    return rep;
}

struct CmCertificate {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<int> bound;
    std::optional<int> dim;
    std::vector<Hypothesis> hypotheses;
    std::vector<ShiftVerdict> per_shift;
    std::string reason;
};

/// Certified Cohen-Macaulay iff the depth bound exists and the caller-supplied
/// Krull dimension does not exceed it.
inline CmCertificate cm_certificate(int dim_value, const ShiftMultiset& s, DiagonalSpec delta, int p) {
    const auto depth = depth_lower_bound(s, delta, p);
    CmCertificate cert;
    cert.bound = depth.bound;
    cert.dim = dim_value;
    cert.hypotheses = depth.hypotheses;
    cert.per_shift = depth.per_shift;
    if (!depth.bound) {
        cert.reason = depth.hypotheses[0].holds ? "some shifted diagonal module fails the Cohen-Macaulay criterion"
                                                : "hypothesis p > m >= n does not hold";
    } else if (dim_value <= *depth.bound) {
        cert.verdict = Verdict::Certified;
        cert.reason = "dim " + std::to_string(dim_value) + " <= depth bound " + std::to_string(*depth.bound);
    } else {
        cert.reason = "dim " + std::to_string(dim_value) + " exceeds depth bound " + std::to_string(*depth.bound);
    }
    return cert;
}

struct KoszulCertificate {
    std::int64_t reg_bound = 0;
    Verdict verdict = Verdict::Inconclusive;
    bool e_threshold = false;  // e >= ceil(n/2)
    std::vector<std::int64_t> per_index;  // max(ceil(a_i/c), ceil(b_i/e)) - i
};

/// reg (S/J)_Δ <= max_i { ceil(a_i^max/c) - i, ceil(b_i^max/e) - i }; a bound
/// of at most 1 certifies Koszulness since S_Δ is Koszul.
inline KoszulCertificate koszul_certificate(const ShiftMultiset& s, DiagonalSpec delta) {
    KoszulCertificate cert;
    const auto ab = ab_max_sequences(s);
    cert.reg_bound = INT64_MIN;
    for (std::size_t i = 0; i < ab.a_max.size(); ++i) {
        const std::int64_t ii = static_cast<std::int64_t>(i);
        const auto v = std::max(ceil_div(ab.a_max[i], delta.c) - ii, ceil_div(ab.b_max[i], delta.e) - ii);
        cert.per_index.push_back(v);
        cert.reg_bound = std::max(cert.reg_bound, v);
    }
    cert.verdict = cert.reg_bound <= 1 ? Verdict::Certified : Verdict::Inconclusive;
    cert.e_threshold = delta.e >= ceil_div(s.n, 2);
    return cert;
}

class InconsistentTable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// HF(i) = sum_j (-1)^j sum_{(a,b) in F_j} dim S_{(ci-a, ei-b)} for i = 0..through.
inline std::vector<std::int64_t> quotient_diag_hilbert(const ShiftMultiset& s, DiagonalSpec delta, int n, int p,
                                                       int through) {
    std::vector<std::int64_t> out;
    for (int i = 0; i <= through; ++i) {
        const auto h = hilbert_from_shifts(s, n, p, delta.at(i));
        if (h < 0)
            throw InconsistentTable("negative Hilbert function value " + std::to_string(h) + " at i = " +
                                    std::to_string(i));
        out.push_back(h);
    }
    return out;
}

inline std::vector<std::int64_t> quotient_diag_hilbert(const BettiTable& t, DiagonalSpec delta, int n, int p,
                                                       int through) {
    return quotient_diag_hilbert(shifts_from_table(t), delta, n, p, through);
}

}  // namespace resint
