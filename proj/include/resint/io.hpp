#pragma once

// JSON file formats and serializers.
//
//   ideal:        {"ring": {"n", "p", "field"}, "generators": [poly strings]}
//   matrix:       {"n", "p", "field", "matrix": {"rows", "cols", "entries": [[poly strings]]}}
//   Betti table:  [{"i", "a", "b", "mult"}] sorted by (i, a, b)
//
// "field" is either a prime (number or decimal string) or "Q".

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "resint/bipoly.hpp"
#include "resint/bkm.hpp"
#include "resint/diagonal.hpp"
#include "resint/en.hpp"
#include "resint/field.hpp"
#include "resint/freecomplex.hpp"
#include "resint/oracle.hpp"
#include "resint/rees.hpp"

namespace resint::io {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FieldChoice {
    bool rational = false;
    std::uint32_t prime = kDefaultPrime;

    std::string str() const { return rational ? "Q" : std::to_string(prime); }
    bool operator==(const FieldChoice&) const = default;
};

inline FieldChoice parse_field_choice(const std::string& s) {
    if (s == "Q" || s == "q" || s == "QQ") return {true, 0};
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("field must be a prime or \"Q\", got \"" + s + "\"");
    const auto v = std::stoull(s);
    if (v >= (1ull << 31) || !is_prime(static_cast<std::uint32_t>(v)))
        throw InputError("field characteristic " + s + " is not a prime below 2^31");
    return {false, static_cast<std::uint32_t>(v)};
}

inline FieldChoice parse_field_choice(const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) return parse_field_choice(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_field_choice(j.get<std::string>());
    throw InputError("field must be a prime or \"Q\"");
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

namespace detail {

inline int get_int(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InputError(where + ": missing integer field \"" + key + "\"");
    return j[key].get<int>();
}

inline std::string poly_text(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError(where + ": polynomial entries must be strings");
}

}  // namespace detail

/// Ring dimensions and optional field of an ideal or matrix document.
struct Header {
    int n = 0;
    int p = 0;
    std::optional<FieldChoice> field;
};

inline Header ideal_header(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j["ring"].is_object())
        throw InputError("ideal file: missing \"ring\" object");
    const auto& r = j["ring"];
    Header h{detail::get_int(r, "n", "ring"), detail::get_int(r, "p", "ring"), std::nullopt};
    if (r.contains("field")) h.field = parse_field_choice(r["field"]);
    return h;
}

inline Header matrix_header(const json& j) {
    if (!j.is_object()) throw InputError("matrix file: expected an object");
    Header h{detail::get_int(j, "n", "matrix file"), detail::get_int(j, "p", "matrix file"), std::nullopt};
    if (j.contains("field")) h.field = parse_field_choice(j["field"]);
    return h;
}

template <CoefficientField F>
IdealSpec<F> ideal_from_json(const json& j, const F& field) {
    const auto h = ideal_header(j);
    const RingSpec<F> ring(h.n, h.p, field);
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InputError("ideal file: missing \"generators\" array");
    std::vector<BiPoly<F>> gens;
    for (const auto& g : j["generators"]) gens.push_back(parse_poly(ring, detail::poly_text(g, "generators")));
    return IdealSpec<F>(ring, std::move(gens));
}

template <CoefficientField F>
std::vector<std::vector<BiPoly<F>>> matrix_from_json(const json& j, const RingSpec<F>& ring) {
    if (!j.contains("matrix") || !j["matrix"].is_object()) throw InputError("matrix file: missing \"matrix\" object");
    const auto& m = j["matrix"];
    const int rows = detail::get_int(m, "rows", "matrix"), cols = detail::get_int(m, "cols", "matrix");
    if (!m.contains("entries") || !m["entries"].is_array()) throw InputError("matrix: missing \"entries\" array");
    const auto& e = m["entries"];
    if (static_cast<int>(e.size()) != rows)
        throw InputError("matrix: declared " + std::to_string(rows) + " rows, found " + std::to_string(e.size()));
    std::vector<std::vector<BiPoly<F>>> grid;
    for (const auto& row : e) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError("matrix: every row must have " + std::to_string(cols) + " entries");
        std::vector<BiPoly<F>> r;
        for (const auto& x : row) r.push_back(parse_poly(ring, detail::poly_text(x, "matrix entries")));
        grid.push_back(std::move(r));
    }
    return grid;
}

template <CoefficientField F>
json to_json(const RingSpec<F>& ring) {
    return {{"n", ring.n}, {"p", ring.p}, {"field", ring.field.name()}};
}

template <CoefficientField F>
json polys_to_json(const std::vector<BiPoly<F>>& v) {
    json a = json::array();
    for (const auto& f : v) a.push_back(f.str());
    return a;
}

template <CoefficientField F>
json grid_to_json(const std::vector<std::vector<BiPoly<F>>>& g) {
    json rows = json::array();
    for (const auto& r : g) rows.push_back(polys_to_json(r));
    return rows;
}

template <CoefficientField F>
json ideal_to_json(const IdealSpec<F>& ideal) {
    return {{"ring", to_json(ideal.ring)}, {"generators", polys_to_json(ideal.generators)}};
}

template <CoefficientField F>
json matrix_to_json(const RingSpec<F>& ring, const std::vector<std::vector<BiPoly<F>>>& g) {
    return {{"n", ring.n},
            {"p", ring.p},
            {"field", ring.field.name()},
            {"matrix",
             {{"rows", g.size()}, {"cols", g.empty() ? 0 : g[0].size()}, {"entries", grid_to_json(g)}}}};
}

inline json to_json(Bidegree d) { return json::array({d.a, d.b}); }

inline json to_json(const BettiTable& t) {
    json a = json::array();
    for (const auto& e : t.rows()) a.push_back({{"i", e.i}, {"a", e.deg.a}, {"b", e.deg.b}, {"mult", e.mult}});
    return a;
}

inline BettiTable betti_from_json(const json& a) {
    BettiTable t;
    for (const auto& e : a)
        t.insert_unique(e.at("i").get<int>(), {e.at("a").get<int>(), e.at("b").get<int>()},
                        e.at("mult").get<std::int64_t>());
    return t;
}

inline json to_json(const ShiftMultiset& s) {
    json a = json::array();
    for (std::size_t i = 0; i < s.by_index.size(); ++i) {
        json shifts = json::array();
        for (const auto& [d, k] : s.by_index[i]) shifts.push_back({{"a", d.a}, {"b", d.b}, {"mult", k}});
        a.push_back({{"i", i}, {"rank", s.rank(static_cast<int>(i))}, {"shifts", shifts}});
    }
    return a;
}

inline json to_json(const ShiftedFreeModule& m) {
    json a = json::array();
    for (const auto& d : m.shifts) a.push_back(to_json(d));
    return a;
}

template <CoefficientField F>
json to_json(const FreeComplex<F>& cx) {
    json terms = json::array(), diffs = json::array();
    for (std::size_t i = 0; i <= cx.length(); ++i) terms.push_back(to_json(cx.term(i)));
    for (std::size_t i = 1; i <= cx.length(); ++i) {
        const auto& d = cx.d(i);
        json rows = json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c).str());
            rows.push_back(row);
        }
        diffs.push_back(rows);
    }
    return {{"base", to_string(cx.base())}, {"terms", terms}, {"differentials", diffs}};
}

inline json to_json(const ExactnessReport& r) {
    json nonzero = json::array();
    for (const auto& e : r.entries)
        if (e.dim != 0) nonzero.push_back({{"position", e.position}, {"degree", to_json(e.degree)}, {"dim", e.dim}});
    json out = {{"through_degree", r.through_degree},
                {"positions", r.positions},
                {"checked", r.entries.size()},
                {"exact_in_window", r.exact()},
                {"nonzero", nonzero}};
    if (auto f = r.first_nonzero())
        out["first_failure"] = {{"position", f->position}, {"degree", to_json(f->degree)}, {"dim", f->dim}};
    return out;
}

inline json to_json(const std::vector<Hypothesis>& hs) {
    json a = json::array();
    for (const auto& h : hs) a.push_back({{"name", h.name}, {"holds", h.holds}});
    return a;
}

inline json to_json(const std::vector<ShiftVerdict>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back({{"i", s.i}, {"a", s.shift.a}, {"b", s.shift.b}, {"cm", s.cm}});
    return a;
}

inline json to_json(const CmCertificate& c) {
    return {{"verdict", to_string(c.verdict)},
            {"bound", c.bound ? json(*c.bound) : json(nullptr)},
            {"dim", c.dim ? json(*c.dim) : json(nullptr)},
            {"hypotheses", to_json(c.hypotheses)},
            {"per_shift", to_json(c.per_shift)},
            {"reason", c.reason}};
}

inline json to_json(const DepthBoundReport& r) {
    return {{"verdict", r.bound ? "certified" : "inconclusive"},
            {"bound", r.bound ? json(*r.bound) : json(nullptr)},
            {"hypotheses", to_json(r.hypotheses)},
            {"per_shift", to_json(r.per_shift)}};
}

inline json to_json(const KoszulCertificate& k) {
    return {{"verdict", to_string(k.verdict)},
            {"bound", k.reg_bound},
            {"hypotheses", json::array({{{"name", "S_delta is Koszul"}, {"holds", true}}})},
            {"per_shift", json::array()},
            {"per_index", k.per_index},
            {"e_at_least_half_n", k.e_threshold}};
}

inline json to_json(const AssumptionLedger& l) {
    json a = json::array();
    for (const auto& it : l.items) a.push_back({{"name", it.name}, {"status", to_string(it.status)}, {"detail", it.detail}});
    return a;
}

inline json to_json(const ReesCertificates& c) {
    json cm = {{"verdict", to_string(c.cm)},
               {"bound", c.depth_bound ? json(*c.depth_bound) : json(nullptr)},
               {"dim", c.dim},
               {"reason", c.cm_reason},
               {"hypotheses", c.cm_detail ? to_json(c.cm_detail->hypotheses) : json::array()},
               {"per_shift", c.cm_detail ? to_json(c.cm_detail->per_shift) : json::array()}};
    return {{"delta", {{"c", c.delta.c}, {"e", c.delta.e}}},
            {"cm", cm},
            {"koszul", to_json(c.koszul)},
            {"assumptions", to_json(AssumptionLedger{c.assumptions})}};
}

}  // namespace resint::io
