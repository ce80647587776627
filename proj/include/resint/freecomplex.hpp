#pragma once

// Complexes of shifted free bigraded modules with polynomial-matrix
// differentials, their degree strands, duals and exactness checks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resint/bipoly.hpp"
#include "resint/combinatorics.hpp"
#include "resint/exactla.hpp"

namespace resint {

/// Over S every summand is S(-a,-b); over R_y the x-component of every shift
/// is zero and the summands are R_y(-b).
enum class BaseRing { S, Ry };

inline std::string to_string(BaseRing b) { return b == BaseRing::S ? "S" : "Ry"; }

/// Direct sum of S(-a,-b) for each listed (a,b).
struct ShiftedFreeModule {
    std::vector<Bidegree> shifts;
    std::vector<std::string> labels;  // optional, one per summand

    std::size_t rank() const { return shifts.size(); }
    std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : "g" + std::to_string(i + 1); }
};

/// A degree-(0,0) map of shifted free modules. Entry (r,c) is zero or
/// bihomogeneous of bidegree source.shifts[c] - target.shifts[r].
template <CoefficientField F>
class PolyMatrix {
public:
    using Entries = std::vector<std::vector<BiPoly<F>>>;

    PolyMatrix() = default;
    PolyMatrix(RingSpec<F> ring, ShiftedFreeModule source, ShiftedFreeModule target, Entries entries)
        : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
        validate();
    }

    static PolyMatrix zero(const RingSpec<F>& ring, ShiftedFreeModule source, ShiftedFreeModule target) {
        Entries e(target.rank(), std::vector<BiPoly<F>>(source.rank(), BiPoly<F>(ring)));
        return PolyMatrix(ring, std::move(source), std::move(target), std::move(e));
    }

    const RingSpec<F>& ring() const { return ring_; }
    const ShiftedFreeModule& source() const { return source_; }
    const ShiftedFreeModule& target() const { return target_; }
    const Entries& entries() const { return entries_; }
    const BiPoly<F>& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }
    std::size_t rows() const { return target_.rank(); }
    std::size_t cols() const { return source_.rank(); }

    bool is_zero() const {
        for (const auto& row : entries_)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }

    /// this ∘ other
    PolyMatrix compose(const PolyMatrix& other) const {
        if (cols() != other.rows()) throw ShapeError("composition of incompatible polynomial matrices");
        Entries e(rows(), std::vector<BiPoly<F>>(other.cols(), BiPoly<F>(ring_)));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t k = 0; k < cols(); ++k) {
                if (entries_[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < other.cols(); ++j)
                    if (!other(k, j).is_zero()) e[i][j] += entries_[i][k] * other(k, j);
            }
        return PolyMatrix(ring_, other.source_, target_, std::move(e));
    }

private:
    void validate() const {
        if (entries_.size() != target_.rank())
            throw ComplexError("polynomial matrix has " + std::to_string(entries_.size()) + " rows, target rank is " +
                               std::to_string(target_.rank()));
        for (std::size_t r = 0; r < entries_.size(); ++r) {
            if (entries_[r].size() != source_.rank())
                throw ComplexError("polynomial matrix row " + std::to_string(r) + " has wrong length");
            for (std::size_t c = 0; c < entries_[r].size(); ++c) {
                const auto& f = entries_[r][c];
                if (!(f.ring() == ring_)) throw RingError("matrix entry from a different ring");
                if (f.is_zero()) continue;
                const Bidegree want = source_.shifts[c] - target_.shifts[r];
                const auto got = f.bidegree();
                if (!got || *got != want)
                    throw ComplexError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + f.str() +
                                       " is not bihomogeneous of bidegree " + want.str());
            }
        }
    }

    RingSpec<F> ring_{};
    ShiftedFreeModule source_;
    ShiftedFreeModule target_;
    Entries entries_;
};

/// terms[0..L] with differentials d_i : terms[i] -> terms[i-1] for i = 1..L.
template <CoefficientField F>
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(RingSpec<F> ring, BaseRing base, std::vector<ShiftedFreeModule> terms,
                std::vector<PolyMatrix<F>> differentials)
        : ring_(std::move(ring)), base_(base), terms_(std::move(terms)), diffs_(std::move(differentials)) {
        if (terms_.empty()) throw ComplexError("a complex needs at least one term");
        if (diffs_.size() + 1 != terms_.size())
            throw ComplexError("a complex of length L needs L differentials");
        for (std::size_t i = 1; i < terms_.size(); ++i) {
            const auto& d = diffs_[i - 1];
            if (d.cols() != terms_[i].rank() || d.rows() != terms_[i - 1].rank() ||
                d.source().shifts != terms_[i].shifts || d.target().shifts != terms_[i - 1].shifts)
                throw ComplexError("differential d_" + std::to_string(i) + " does not chain with its terms");
        }
        if (base_ == BaseRing::Ry)
            for (const auto& t : terms_)
                for (const auto& s : t.shifts)
                    if (s.a != 0) throw ComplexError("R_y-complexes carry y-shifts only");
    }

    const RingSpec<F>& ring() const { return ring_; }
    BaseRing base() const { return base_; }
    std::size_t length() const { return terms_.size() - 1; }
    const std::vector<ShiftedFreeModule>& terms() const { return terms_; }
    const ShiftedFreeModule& term(std::size_t i) const { return terms_.at(i); }
    /// d_i for 1 <= i <= length().
    const PolyMatrix<F>& d(std::size_t i) const { return diffs_.at(i - 1); }
    const std::vector<PolyMatrix<F>>& differentials() const { return diffs_; }

private:
    RingSpec<F> ring_{};
    BaseRing base_ = BaseRing::S;
    std::vector<ShiftedFreeModule> terms_;
    std::vector<PolyMatrix<F>> diffs_;
};

inline std::string subset_label(const Subset& t) {
    std::string s = "e{";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
    return s + "}";
}

/// Koszul complex on a sequence of nonzero bihomogeneous polynomials, with
/// d(e_T) = sum_j (-1)^(j-1) seq[t_j] e_{T - t_j} and subsets in lex order.
/// Elements may be zero here; each nonzero one must have its declared bidegree.
template <CoefficientField F>
FreeComplex<F> koszul_complex(const RingSpec<F>& ring, const std::vector<BiPoly<F>>& seq,
                              const std::vector<Bidegree>& degs) {
    if (degs.size() != seq.size()) throw ComplexError("koszul_complex: one bidegree per element required");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!(seq[i].ring() == ring)) throw RingError("koszul_complex: element from a different ring");
        if (seq[i].is_zero()) continue;
        const auto d = seq[i].bidegree();
        if (!d || *d != degs[i])
            throw ComplexError("koszul_complex: element " + std::to_string(i + 1) + " (" + seq[i].str() +
                               ") is not bihomogeneous of bidegree " + degs[i].str());
    }
    const int m = static_cast<int>(seq.size());
    std::vector<ShiftedFreeModule> terms;
    std::vector<std::vector<Subset>> bases;
    for (int k = 0; k <= m; ++k) {
        ShiftedFreeModule mod;
        auto subs = subsets(m, k);
        for (const auto& t : subs) {
            Bidegree s{};
            for (int j : t) s = s + degs[static_cast<std::size_t>(j)];
            mod.shifts.push_back(s);
            mod.labels.push_back(subset_label(t));
        }
        terms.push_back(std::move(mod));
        bases.push_back(std::move(subs));
    }
    std::vector<PolyMatrix<F>> diffs;
    for (int k = 1; k <= m; ++k) {
        const auto& src = bases[static_cast<std::size_t>(k)];
        const auto& tgt = bases[static_cast<std::size_t>(k - 1)];
        std::map<Subset, std::size_t> tgt_index;
        for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index[tgt[i]] = i;
        typename PolyMatrix<F>::Entries e(tgt.size(), std::vector<BiPoly<F>>(src.size(), BiPoly<F>(ring)));
        for (std::size_t c = 0; c < src.size(); ++c) {
            const auto& t = src[c];
            for (std::size_t j = 0; j < t.size(); ++j) {
                Subset rest = t;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
                const auto& f = seq[static_cast<std::size_t>(t[j])];
                e[tgt_index.at(rest)][c] = (j % 2 == 0) ? f : -f;
            }
        }
        diffs.emplace_back(ring, terms[static_cast<std::size_t>(k)], terms[static_cast<std::size_t>(k - 1)],
                           std::move(e));
    }
    return FreeComplex<F>(ring, BaseRing::S, std::move(terms), std::move(diffs));
}

template <CoefficientField F>
FreeComplex<F> koszul_complex(const RingSpec<F>& ring, const std::vector<BiPoly<F>>& seq) {
    std::vector<Bidegree> degs;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto d = seq[i].bidegree();
        if (!d)
            throw ComplexError("koszul_complex: element " + std::to_string(i + 1) + " (" + seq[i].str() +
                               ") is zero or not bihomogeneous");
        degs.push_back(*d);
    }
    return koszul_complex(ring, seq, degs);
}

/// Terms 0..len of cx.
template <CoefficientField F>
FreeComplex<F> truncate(const FreeComplex<F>& cx, std::size_t len) {
    if (len > cx.length()) throw ComplexError("truncate: complex is shorter than requested length");
    std::vector<ShiftedFreeModule> terms(cx.terms().begin(), cx.terms().begin() + static_cast<std::ptrdiff_t>(len + 1));
    std::vector<PolyMatrix<F>> diffs(cx.differentials().begin(),
                                     cx.differentials().begin() + static_cast<std::ptrdiff_t>(len));
    return FreeComplex<F>(cx.ring(), cx.base(), std::move(terms), std::move(diffs));
}

/// Adds `by` to every shift: the complex C(-by).
template <CoefficientField F>
FreeComplex<F> twist(const FreeComplex<F>& cx, Bidegree by) {
    std::vector<ShiftedFreeModule> terms = cx.terms();
    for (auto& t : terms)
        for (auto& s : t.shifts) s = s + by;
    std::vector<PolyMatrix<F>> diffs;
    for (std::size_t i = 1; i <= cx.length(); ++i)
        diffs.emplace_back(cx.ring(), terms[i], terms[i - 1], cx.d(i).entries());
    return FreeComplex<F>(cx.ring(), cx.base(), std::move(terms), std::move(diffs));
}

/// Hom(-, base): terms reversed, matrices transposed, shifts negated.
template <CoefficientField F>
FreeComplex<F> dualize_y(const FreeComplex<F>& cx) {
    const std::size_t len = cx.length();
    std::vector<ShiftedFreeModule> terms;
    for (std::size_t h = 0; h <= len; ++h) {
        ShiftedFreeModule t = cx.term(len - h);
        for (auto& s : t.shifts) s = -s;
        for (auto& l : t.labels) l += "*";
        terms.push_back(std::move(t));
    }
    std::vector<PolyMatrix<F>> diffs;
    for (std::size_t h = 1; h <= len; ++h) {
        // new d_h : C_{len-h}^* -> C_{len-h+1}^*, the transpose of old d_{len-h+1}
        const auto& old = cx.d(len - h + 1);
        typename PolyMatrix<F>::Entries e(old.cols(), std::vector<BiPoly<F>>(old.rows(), BiPoly<F>(cx.ring())));
        for (std::size_t r = 0; r < old.rows(); ++r)
            for (std::size_t c = 0; c < old.cols(); ++c) e[c][r] = old(r, c);
        diffs.emplace_back(cx.ring(), terms[h], terms[h - 1], std::move(e));
    }
    return FreeComplex<F>(cx.ring(), cx.base(), std::move(terms), std::move(diffs));
}

/// Degree-d strand with respect to the x-grading, as a complex of free
/// R_y-modules: one summand per (basis element, x-monomial of degree d - a).
template <CoefficientField F>
FreeComplex<F> x_strand(const FreeComplex<F>& cx, int d) {
    if (cx.base() != BaseRing::S) throw ComplexError("x_strand needs a complex over S");
    const auto& ring = cx.ring();
    for (std::size_t i = 1; i <= cx.length(); ++i)
        for (const auto& row : cx.d(i).entries())
            for (const auto& f : row) {
                if (f.is_zero()) continue;
                const int xd = f.bidegree()->a;
                if (xd != 0 && xd != 1)
                    throw ComplexError("x_strand: differential entry " + f.str() + " has x-degree " +
                                       std::to_string(xd) + ", expected 0 or 1");
            }

    struct Label {
        std::size_t basis;
        Monomial mono;
    };
    std::vector<ShiftedFreeModule> terms;
    std::vector<std::vector<Label>> labels;
    std::vector<std::map<std::pair<std::size_t, std::vector<int>>, std::size_t>> index;
    for (std::size_t k = 0; k <= cx.length(); ++k) {
        ShiftedFreeModule mod;
        std::vector<Label> lab;
        std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> idx;
        const auto& t = cx.term(k);
        for (std::size_t c = 0; c < t.rank(); ++c) {
            for (auto& mu : monomial_basis(ring, Bidegree{d - t.shifts[c].a, 0})) {
                idx[{c, mu.exps}] = lab.size();
                mod.shifts.push_back({0, t.shifts[c].b});
                mod.labels.push_back(mu.str() + "*" + t.label(c));
                lab.push_back({c, std::move(mu)});
            }
        }
        terms.push_back(std::move(mod));
        labels.push_back(std::move(lab));
        index.push_back(std::move(idx));
    }
    std::vector<PolyMatrix<F>> diffs;
    for (std::size_t k = 1; k <= cx.length(); ++k) {
        const auto& dk = cx.d(k);
        const auto& src = labels[k];
        typename PolyMatrix<F>::Entries e(labels[k - 1].size(), std::vector<BiPoly<F>>(src.size(), BiPoly<F>(ring)));
        for (std::size_t col = 0; col < src.size(); ++col) {
            for (std::size_t r = 0; r < dk.rows(); ++r) {
                const auto& f = dk(r, src[col].basis);
                if (f.is_zero()) continue;
                for (const auto& [m, coeff] : f.terms()) {
                    const Monomial full = m * src[col].mono;
                    const auto row = index[k - 1].at({r, full.x_part().exps});
                    e[row][col].add_term(full.y_part(), coeff);
                }
            }
        }
        diffs.emplace_back(ring, terms[k], terms[k - 1], std::move(e));
    }
    return FreeComplex<F>(ring, BaseRing::Ry, std::move(terms), std::move(diffs));
}

struct ComposeCheck {
    bool ok = true;
    std::optional<std::size_t> first_failure;  // i with d_i ∘ d_{i+1} != 0
};

template <CoefficientField F>
ComposeCheck compose_zero_check(const FreeComplex<F>& cx) {
    for (std::size_t i = 1; i < cx.length(); ++i)
        if (!cx.d(i).compose(cx.d(i + 1)).is_zero()) return {false, i};
    return {};
}

// ---------------------------------------------------------------------------
// Strands at a fixed bidegree: complexes of finite-dimensional vector spaces.

/// Basis of a shifted free module in one bidegree: for each summand in order,
/// the monomials of the complementary bidegree.
template <CoefficientField F>
class PieceLayout {
public:
    PieceLayout(const RingSpec<F>& ring, BaseRing base, const ShiftedFreeModule& mod, Bidegree deg) {
        offsets_.reserve(mod.rank() + 1);
        for (std::size_t c = 0; c < mod.rank(); ++c) {
            offsets_.push_back(dim_);
            const Bidegree rest = deg - mod.shifts[c];
            std::vector<Monomial> basis;
            if (base == BaseRing::S || rest.a == 0) basis = monomial_basis(ring, rest);
            std::map<std::vector<int>, std::size_t> idx;
            for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i].exps, i);
            dim_ += basis.size();
            monos_.push_back(std::move(basis));
            index_.push_back(std::move(idx));
        }
        offsets_.push_back(dim_);
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Monomial>& monomials(std::size_t summand) const { return monos_[summand]; }
    std::size_t offset(std::size_t summand) const { return offsets_[summand]; }
    std::optional<std::size_t> find(std::size_t summand, const Monomial& m) const {
        auto it = index_[summand].find(m.exps);
        if (it == index_[summand].end()) return std::nullopt;
        return offsets_[summand] + it->second;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<std::vector<Monomial>> monos_;
    std::vector<std::map<std::vector<int>, std::size_t>> index_;
};

template <CoefficientField F>
FieldMatrix<F> strand_matrix(const PolyMatrix<F>& d, BaseRing base, Bidegree deg) {
    const auto& ring = d.ring();
    PieceLayout<F> src(ring, base, d.source(), deg), tgt(ring, base, d.target(), deg);
    FieldMatrix<F> m(ring.field, tgt.dim(), src.dim());
    for (std::size_t c = 0; c < d.cols(); ++c) {
        const auto& monos = src.monomials(c);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            const std::size_t col = src.offset(c) + j;
            for (std::size_t r = 0; r < d.rows(); ++r) {
                const auto& f = d(r, c);
                for (const auto& [mono, coeff] : f.terms()) {
                    const auto row = tgt.find(r, mono * monos[j]);
                    if (!row) throw ComplexError("strand_matrix: image monomial outside target piece");
                    m(*row, col) = ring.field.add(m(*row, col), coeff);
                }
            }
        }
    }
    return m;
}

template <CoefficientField F>
struct Strand {
    Bidegree degree;
    std::vector<std::size_t> dims;     // dims[i] = dim of term i in this degree
    std::vector<FieldMatrix<F>> maps;  // maps[i-1] = strand of d_i
    std::vector<std::size_t> ranks;    // ranks[i-1] = rank of maps[i-1]

    std::size_t homology(std::size_t i) const {
        const std::size_t rank_out = i >= 1 ? ranks[i - 1] : 0;
        const std::size_t rank_in = i < ranks.size() ? ranks[i] : 0;
        return dims[i] - rank_out - rank_in;
    }
    long long euler_characteristic() const {
        long long s = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i]);
        return s;
    }
};

template <CoefficientField F>
Strand<F> strand_at(const FreeComplex<F>& cx, Bidegree deg) {
    Strand<F> s;
    s.degree = deg;
    for (const auto& t : cx.terms()) s.dims.push_back(PieceLayout<F>(cx.ring(), cx.base(), t, deg).dim());
    for (std::size_t i = 1; i <= cx.length(); ++i) {
        s.maps.push_back(strand_matrix(cx.d(i), cx.base(), deg));
        s.ranks.push_back(rank(s.maps.back()));
    }
    return s;
}

struct HomologyEntry {
    std::size_t position = 0;
    Bidegree degree;
    std::size_t dim = 0;
};

/// Homology dimensions inside a finite degree window. This is evidence about
/// the requested window only, never a certificate of exactness in general.
struct ExactnessReport {
    int through_degree = 0;
    std::vector<std::size_t> positions;
    std::vector<HomologyEntry> entries;

    bool exact() const {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.dim == 0; });
    }
    std::optional<HomologyEntry> first_nonzero() const {
        for (const auto& e : entries)
            if (e.dim != 0) return e;
        return std::nullopt;
    }
};

/// Internal degrees visited by exactness_report: bidegrees with u + v <= D over
/// S, and (0, t) with t <= D over R_y, starting at the lowest shift.
template <CoefficientField F>
std::vector<Bidegree> degree_window(const FreeComplex<F>& cx, int through) {
    int amin = 0, bmin = 0;
    for (const auto& t : cx.terms())
        for (const auto& s : t.shifts) {
            amin = std::min(amin, s.a);
            bmin = std::min(bmin, s.b);
        }
    std::vector<Bidegree> out;
    if (cx.base() == BaseRing::Ry) {
        for (int t = bmin; t <= through; ++t) out.push_back({0, t});
    } else {
        for (int total = amin + bmin; total <= through; ++total)
            for (int u = amin; u <= total - bmin; ++u) out.push_back({u, total - u});
    }
    return out;
}

template <CoefficientField F>
ExactnessReport exactness_report(const FreeComplex<F>& cx, int through, const std::vector<std::size_t>& positions) {
    const auto check = compose_zero_check(cx);
    if (!check.ok)
        throw ComplexError("exactness_report: d_" + std::to_string(*check.first_failure) + " ∘ d_" +
                           std::to_string(*check.first_failure + 1) + " is nonzero");
    ExactnessReport rep;
    rep.through_degree = through;
    rep.positions = positions;
    for (const auto& deg : degree_window(cx, through)) {
        const auto s = strand_at(cx, deg);
        for (auto i : positions) {
            if (i > cx.length()) throw ComplexError("exactness_report: position beyond complex length");
            rep.entries.push_back({i, deg, s.homology(i)});
        }
    }
    return rep;
}

/// Positions first..length() of the complex.
template <CoefficientField F>
std::vector<std::size_t> positions_from(const FreeComplex<F>& cx, std::size_t first) {
    std::vector<std::size_t> out;
    for (std::size_t i = first; i <= cx.length(); ++i) out.push_back(i);
    return out;
}

}  // namespace resint
