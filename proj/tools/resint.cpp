// resint: command-line front end.
//
// Exit codes: 0 success, 1 input or hypothesis failure, 2 mathematical
// mismatch or failed evidence check.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resint/io.hpp"
#include "resint/resint.hpp"

namespace {

using namespace resint;
using io::json;

constexpr int kOk = 0;
constexpr int kInputFailure = 1;
constexpr int kMismatch = 2;

struct Globals {
    std::string field = std::to_string(kDefaultPrime);
    bool field_given = false;
    std::string format = "json";
    std::uint64_t seed = 1;
};

// Outcome of a subcommand: document to print plus exit code.
struct Result {
    json doc;
    int code = kOk;
    std::string diagnostic;
};

std::vector<int> parse_int_list(const std::string& s, std::size_t want, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw io::InputError(flag + ": \"" + s + "\" is not a comma-separated list of integers");
        }
    }
    if (want != 0 && out.size() != want)
        throw io::InputError(flag + " expects " + std::to_string(want) + " comma-separated integers, got \"" + s + "\"");
    return out;
}

io::FieldChoice resolve_field(const Globals& g, const std::optional<io::FieldChoice>& from_file) {
    if (g.field_given || !from_file) return io::parse_field_choice(g.field);
    return *from_file;
}

template <class Fn>
Result with_field(const io::FieldChoice& fc, Fn&& fn) {
    if (fc.rational) return fn(RationalField{});
    return fn(PrimeField(fc.prime));
}

// ---------------------------------------------------------------------------
// table rendering of the JSON documents

bool flat_object(const json& j) {
    if (!j.is_object()) return false;
    for (const auto& [k, v] : j.items())
        if (v.is_structured() && !(v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
                                       return x.is_primitive();
                                   })))
            return false;
    return true;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::ostream& os, const json& j, const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
                                         return x.is_primitive();
                                     }))) {
                os << indent << k << ": " << scalar(v) << "\n";
            } else {
                os << indent << k << ":\n";
                render(os, v, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        if (!j.empty() && std::all_of(j.begin(), j.end(), flat_object)) {
            std::vector<std::string> cols;
            for (const auto& [k, v] : j[0].items()) cols.push_back(k);
            os << indent;
            for (const auto& c : cols) os << c << "\t";
            os << "\n";
            for (const auto& row : j) {
                os << indent;
                for (const auto& c : cols) os << (row.contains(c) ? scalar(row[c]) : "") << "\t";
                os << "\n";
            }
        } else {
            for (const auto& v : j) {
                if (v.is_primitive()) {
                    os << indent << "- " << scalar(v) << "\n";
                } else {
                    os << indent << "-\n";
                    render(os, v, indent + "  ");
                }
            }
        }
    } else {
        os << indent << scalar(j) << "\n";
    }
}

// ---------------------------------------------------------------------------
// bkm

struct BkmArgs {
    int n = 0;
    int m = 0;
    std::optional<int> p, c, e, dim;
};

Result cmd_bkm(const BkmArgs& a) {
    check_nm(a.n, a.m);
    const auto shifts = bkm_shifts(a.n, a.m);
    const auto table = bkm_betti_table(a.n, a.m);
    const auto reg = reg_xy_from_table(table);
    const auto ab = ab_max_sequences(shifts);
    json doc = {{"n", a.n},
                {"m", a.m},
                {"shifts", io::to_json(shifts)},
                {"betti", io::to_json(table)},
                {"reg", {{"reg_x", reg.reg_x}, {"reg_y", reg.reg_y}}},
                {"ab_max", {{"a", ab.a_max}, {"b", ab.b_max}}}};
    const bool any_cert = a.p || a.c || a.e;
    if (any_cert) {
        if (!a.p || !a.c || !a.e) throw HypothesisError("certificates need all of --p, --c, --e");
        if (*a.p <= a.m)
            throw HypothesisError("certificates need p > m, got p = " + std::to_string(*a.p) +
                                  ", m = " + std::to_string(a.m));
        const DiagonalSpec delta(*a.c, *a.e);
        json certs = {{"depth", io::to_json(depth_lower_bound(shifts, delta, *a.p))},
                      {"koszul", io::to_json(koszul_certificate(shifts, delta))}};
        if (a.dim) certs["cm"] = io::to_json(cm_certificate(*a.dim, shifts, delta, *a.p));
        doc["certificates"] = certs;
    }
    return {doc};
}

// ---------------------------------------------------------------------------
// en

struct EnArgs {
    std::string phi_file;
    std::string random_phi;
    std::optional<int> p;
    int through = 6;
};

Result cmd_en(const Globals& g, const EnArgs& a) {
    std::optional<io::json> file;
    std::optional<io::FieldChoice> file_field;
    if (!a.phi_file.empty()) {
        file = io::read_json_file(a.phi_file);
        file_field = io::matrix_header(*file).field;
    } else if (a.random_phi.empty()) {
        throw io::InputError("en needs --phi FILE or --random-phi n,m");
    }
    return with_field(resolve_field(g, file_field), [&](auto field) -> Result {
        using F = decltype(field);
        std::optional<LinearMatrixY<F>> phi;
        if (file) {
            const auto h = io::matrix_header(*file);
            const RingSpec<F> ring(h.n, h.p, field);
            phi.emplace(ring, io::matrix_from_json(*file, ring));
        } else {
            const auto nm = parse_int_list(a.random_phi, 2, "--random-phi");
            const RingSpec<F> ring(nm[0], a.p.value_or(nm[1] + 1), field);
            phi = random_linear_matrix_y(ring, nm[1], g.seed);
        }
        const auto en = eagon_northcott(*phi);
        const auto& cx = en.complex;
        const auto cz = compose_zero_check(cx);
        const auto rep = exactness_report(cx, a.through, positions_from(cx, 1));
        const auto h0 = en_h0_dims(*phi, a.through);
        std::vector<std::size_t> h0_complex;
        bool h0_match = true;
        for (int t = 0; t <= a.through; ++t) {
            const auto s = strand_at(cx, Bidegree{0, t});
            h0_complex.push_back(s.homology(0));
            h0_match = h0_match && h0_complex.back() == h0[static_cast<std::size_t>(t)];
        }
        json ranks = json::array();
        for (std::size_t i = 0; i <= cx.length(); ++i) ranks.push_back(cx.term(i).rank());
        Result r;
        r.doc = {{"phi", io::matrix_to_json(phi->ring(), phi->entries())},
                 {"n", phi->n()},
                 {"m", phi->m()},
                 {"ranks", ranks},
                 {"complex", io::to_json(cx)},
                 {"minors", io::polys_to_json(en.minors)},
                 {"compose_zero", cz.ok},
                 {"exactness", io::to_json(rep)},
                 {"h0", {{"from_complex", h0_complex}, {"from_minors", h0}, {"match", h0_match}}},
                 {"assumption", "grade I_n(phi) = m-n+1 is an input assumption; exactness is checked in the window only"}};
        if (!cz.ok) {
            r.code = kMismatch;
            r.diagnostic = "differentials d_" + std::to_string(*cz.first_failure) + " and d_" +
                           std::to_string(*cz.first_failure + 1) + " do not compose to zero";
        } else if (!rep.exact()) {
            const auto f = *rep.first_nonzero();
            r.code = kMismatch;
            r.diagnostic = "homology nonzero: position " + std::to_string(f.position) + ", first failing degree " +
                           std::to_string(f.degree.b) + " (dim " + std::to_string(f.dim) + ")";
        } else if (!h0_match) {
            r.code = kMismatch;
            r.diagnostic = "H_0 of the complex differs from the quotient by the minors";
        }
        return r;
    });
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
    std::string ideal_file;
    std::string window;
    std::string expect_bkm;
    unsigned threads = 0;
};

json diff_to_json(const std::vector<std::tuple<BettiKey, std::int64_t, std::int64_t>>& d) {
    json a = json::array();
    for (const auto& [k, got, want] : d)
        a.push_back({{"i", k.i}, {"a", k.deg.a}, {"b", k.deg.b}, {"oracle", got}, {"expected", want}});
    return a;
}

Result cmd_oracle(const Globals& g, const OracleArgs& a) {
    const auto file = io::read_json_file(a.ideal_file);
    const auto header = io::ideal_header(file);
    std::optional<std::pair<int, int>> expect;
    if (!a.expect_bkm.empty()) {
        const auto nm = parse_int_list(a.expect_bkm, 2, "--expect-bkm");
        check_nm(nm[0], nm[1]);
        expect = {nm[0], nm[1]};
    }
    int i_max = 3, a_max = 3, b_max = 3;
    if (!a.window.empty()) {
        const auto w = parse_int_list(a.window, 3, "--window");
        i_max = w[0], a_max = w[1], b_max = w[2];
    } else if (expect) {
        i_max = expect->second, a_max = expect->first - 1, b_max = expect->second;
    }
    return with_field(resolve_field(g, header.field), [&](auto field) -> Result {
        using F = decltype(field);
        const auto ideal = io::ideal_from_json(file, field);
        TorOracle<F> oracle(ideal);
        const auto table = oracle.betti_window(i_max, a_max, b_max, a.threads);
        Result r;
        r.doc = {{"ideal", io::ideal_to_json(ideal)},
                 {"window", {{"i_max", i_max}, {"a_max", a_max}, {"b_max", b_max}}},
                 {"betti", io::to_json(table)}};
        if (!table.empty()) {
            const auto reg = reg_window_of(table);
            r.doc["reg_window"] = {{"reg_x", reg.reg_x}, {"reg_y", reg.reg_y}, {"window_limited", true}};
        }
        if (expect) {
            const auto closed = bkm_betti_table(expect->first, expect->second).restricted(i_max, a_max, b_max);
            const auto d = table.diff(closed);
            r.doc["comparison"] = {{"n", expect->first},
                                   {"m", expect->second},
                                   {"match", d.empty()},
                                   {"diff", diff_to_json(d)}};
            if (!d.empty()) {
                const auto& [k, got, want] = d.front();
                r.code = kMismatch;
                r.diagnostic = "first differing entry: i=" + std::to_string(k.i) + " " + k.deg.str() + " oracle " +
                               std::to_string(got) + ", closed form " + std::to_string(want);
            }
        }
        return r;
    });
}

// ---------------------------------------------------------------------------
// rees

struct ReesArgs {
    std::string presentation_file;
    int c = 1;
    int e = 1;
    int powers = 0;
    std::string power_window;
    std::vector<std::string> witnesses;
    int en_through = 6;
    int hb_through = 12;
    std::string hilbert;
};

Result cmd_rees(const Globals& g, const ReesArgs& a) {
    const auto file = io::read_json_file(a.presentation_file);
    const auto header = io::matrix_header(file);
    const DiagonalSpec delta(a.c, a.e);
    return with_field(resolve_field(g, header.field), [&](auto field) -> Result {
        using F = decltype(field);
        const RingSpec<F> ring(header.n, header.p, field);
        const PresentationMatrix<F> Phi(ring, io::matrix_from_json(file, ring));
        SetupOptions<F> opts;
        opts.en_through = a.en_through;
        opts.hb_through = a.hb_through;
        for (const auto& w : a.witnesses) opts.witnesses.push_back(parse_poly(ring, w));
        const auto model = build_rees_model(Phi, opts);
        Result r;
        r.doc = {{"ring", io::to_json(ring)},
                 {"model",
                  {{"n", model.n()},
                   {"p", model.p()},
                   {"m", model.m()},
                   {"d", model.d()},
                   {"Phi", io::grid_to_json(Phi.entries())},
                   {"phi", io::grid_to_json(model.phi.entries())},
                   {"z", io::polys_to_json(model.z)},
                   {"f", io::polys_to_json(model.f)},
                   {"J", io::polys_to_json(model.J)}}},
                 {"assumptions", io::to_json(model.ledger)},
                 {"certificates", io::to_json(rees_certificates(model, delta))}};
        json romer = json::array();
        for (int s = 0; s <= std::max(a.powers, 1); ++s) {
            const auto b = romer_bound(model, s);
            romer.push_back({{"s", s}, {"bound", b.bound}, {"verdict", b.verdict}});
        }
        r.doc["romer"] = romer;
        if (model.ledger.any_failed()) {
            r.code = kMismatch;
            for (const auto& it : model.ledger.items)
                if (it.status == AssumptionStatus::Failed) {
                    r.diagnostic = it.name + ": " + it.detail;
                    break;
                }
        }
        if (a.powers > 0) {
            int i_max = model.n(), t_extra = model.n();
            std::optional<int> t_fixed;
            if (!a.power_window.empty()) {
                const auto w = parse_int_list(a.power_window, 2, "--power-window");
                i_max = w[0];
                t_fixed = w[1];
            }
            json checks = json::array();
            for (int s = 1; s <= a.powers; ++s) {
                const int t_max = t_fixed.value_or(s * model.d() + t_extra);
                const auto c = power_regularity_check(model, s, i_max, t_max);
                checks.push_back({{"s", s},
                                  {"bound", c.bound},
                                  {"window", {{"i_max", i_max}, {"t_max", t_max}}},
                                  {"betti", io::to_json(c.table)},
                                  {"reg_in_window", c.reg ? json(*c.reg) : json(nullptr)},
                                  {"linear_in_window", c.linear},
                                  {"confirmed", c.confirmed()}});
                if (!c.confirmed() && r.code == kOk) {
                    r.code = kMismatch;
                    r.diagnostic = "reg(I^" + std::to_string(s) + ") = " + std::to_string(c.bound) +
                                   " not confirmed in window";
                }
            }
            r.doc["powers"] = checks;
        }
        if (!a.hilbert.empty()) {
            const auto uv = parse_int_list(a.hilbert, 2, "--hilbert");
            TorOracle<F> oracle(build_J(model));
            const auto shifts = bkm_shifts(model.n(), model.m());
            json rows = json::array();
            bool ok = true;
            for (int u = 0; u <= uv[0]; ++u)
                for (int v = 0; v <= uv[1]; ++v) {
                    const auto q = static_cast<std::int64_t>(oracle.quotient_dim({u, v}));
                    const auto pw = static_cast<std::int64_t>(power_piece_dim(model, v, u + model.d() * v));
                    const auto h = hilbert_from_shifts(shifts, model.n(), model.p(), {u, v});
                    ok = ok && q == pw && q == h;
                    rows.push_back({{"u", u}, {"v", v}, {"quotient", q}, {"power_piece", pw}, {"closed_form", h}});
                }
            r.doc["hilbert"] = {{"match", ok}, {"rows", rows}};
            if (!ok && r.code == kOk) {
                r.code = kMismatch;
                r.diagnostic = "bigraded Hilbert function mismatch";
            }
        }
        return r;
    });
}

// ---------------------------------------------------------------------------
// diag

struct DiagArgs {
    int n = 0;
    int p = 0;
    int c = 1;
    int e = 1;
    std::string shift;
    std::optional<int> m;
    std::optional<int> dim;
    int through = 5;
};

Result cmd_diag(const DiagArgs& a) {
    const DiagonalSpec delta(a.c, a.e);
    if (a.n < 1 || a.p < 1) throw HypothesisError("diag needs n, p >= 1");
    if (a.shift.empty() == !a.m.has_value()) throw io::InputError("diag needs exactly one of --shift a,b or --m M");
    json doc = {{"n", a.n}, {"p", a.p}, {"delta", {{"c", a.c}, {"e", a.e}}}};
    if (!a.shift.empty()) {
        const auto ab = parse_int_list(a.shift, 2, "--shift");
        const auto h = shifted_diag_hilbert(ab[0], ab[1], delta, a.n, a.p);
        std::vector<std::int64_t> values;
        for (int i = 0; i <= a.through; ++i) values.push_back(h.at(i));
        doc["shift"] = {{"a", ab[0]}, {"b", ab[1]}};
        doc["hilbert"] = values;
        doc["krull_dim"] = h.krull_dim();
        doc["cohen_macaulay"] = shifted_diag_is_cm(ab[0], ab[1], delta, a.n, a.p);
        doc["reg"] = shifted_diag_reg(ab[0], ab[1], delta);
        return {doc};
    }
    check_nm(a.n, *a.m);
    const auto shifts = bkm_shifts(a.n, *a.m);
    doc["m"] = *a.m;
    doc["hilbert"] = quotient_diag_hilbert(shifts, delta, a.n, a.p, a.through);
    doc["depth"] = io::to_json(depth_lower_bound(shifts, delta, a.p));
    doc["koszul"] = io::to_json(koszul_certificate(shifts, delta));
    if (a.dim) doc["cm"] = io::to_json(cm_certificate(*a.dim, shifts, delta, a.p));
    return {doc};
}

// ---------------------------------------------------------------------------
// strand

struct StrandArgs {
    std::string ring;
    std::string seq;
    std::string bidegree;
    std::optional<int> x_degree;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        if (!part.empty()) out.push_back(part);
    return out;
}

Result cmd_strand(const Globals& g, const StrandArgs& a) {
    const auto np = parse_int_list(a.ring, 2, "--ring");
    if (a.bidegree.empty() == !a.x_degree.has_value())
        throw io::InputError("strand needs exactly one of --bidegree u,v or --x-degree d");
    return with_field(resolve_field(g, std::nullopt), [&](auto field) -> Result {
        using F = decltype(field);
        const RingSpec<F> ring(np[0], np[1], field);
        std::vector<BiPoly<F>> seq;
        for (const auto& t : split(a.seq, ';')) seq.push_back(parse_poly(ring, t));
        if (seq.empty()) throw io::InputError("--seq needs at least one polynomial");
        const auto cx = koszul_complex(ring, seq);
        json doc = {{"ring", io::to_json(ring)}, {"seq", io::polys_to_json(seq)}, {"compose_zero", compose_zero_check(cx).ok}};
        if (a.x_degree) {
            doc["x_strand"] = io::to_json(x_strand(cx, *a.x_degree));
            return {doc};
        }
        const auto uv = parse_int_list(a.bidegree, 2, "--bidegree");
        const auto s = strand_at(cx, Bidegree{uv[0], uv[1]});
        std::vector<std::size_t> homology;
        for (std::size_t i = 0; i < s.dims.size(); ++i) homology.push_back(s.homology(i));
        doc["strand"] = {{"degree", io::to_json(s.degree)},
                         {"dims", s.dims},
                         {"ranks", s.ranks},
                         {"homology", homology},
                         {"euler_characteristic", s.euler_characteristic()}};
        return {doc};
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bigraded resolutions of residual intersections"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals g;
    app.add_option("--field", g.field, "prime characteristic or Q")->each([&](const std::string&) {
        g.field_given = true;
    });
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", g.seed, "seed for random instances");

    BkmArgs bkm;
    auto* bkm_cmd = app.add_subcommand("bkm", "closed-form shifts, Betti table and regularity");
    bkm_cmd->add_option("--n", bkm.n)->required();
    bkm_cmd->add_option("--m", bkm.m)->required();
    bkm_cmd->add_option("--p", bkm.p);
    bkm_cmd->add_option("--c", bkm.c);
    bkm_cmd->add_option("--e", bkm.e);
    bkm_cmd->add_option("--dim", bkm.dim, "Krull dimension for the Cohen-Macaulay certificate");

    EnArgs en;
    auto* en_cmd = app.add_subcommand("en", "Eagon-Northcott complex and exactness window");
    en_cmd->add_option("--phi", en.phi_file, "matrix file");
    en_cmd->add_option("--random-phi", en.random_phi, "n,m for a random y-linear matrix");
    en_cmd->add_option("--p", en.p, "number of y-variables for --random-phi");
    en_cmd->add_option("--check-through", en.through, "largest internal degree checked");

    OracleArgs orc;
    auto* orc_cmd = app.add_subcommand("oracle", "Betti numbers from the Koszul complex on the variables");
    orc_cmd->add_option("--ideal", orc.ideal_file)->required();
    orc_cmd->add_option("--window", orc.window, "i_max,a_max,b_max");
    orc_cmd->add_option("--expect-bkm", orc.expect_bkm, "n,m of the closed form to compare against");
    orc_cmd->add_option("--threads", orc.threads);

    ReesArgs rees;
    auto* rees_cmd = app.add_subcommand("rees", "Rees algebra pipeline from a presentation matrix");
    rees_cmd->add_option("--presentation", rees.presentation_file)->required();
    rees_cmd->add_option("--c", rees.c)->required();
    rees_cmd->add_option("--e", rees.e)->required();
    rees_cmd->add_option("--powers", rees.powers, "check reg(I^s) for s <= S");
    rees_cmd->add_option("--power-window", rees.power_window, "i_max,t_max");
    rees_cmd->add_option("--witness", rees.witnesses, "element expected in I");
    rees_cmd->add_option("--en-through", rees.en_through);
    rees_cmd->add_option("--hb-through", rees.hb_through);
    rees_cmd->add_option("--hilbert", rees.hilbert, "U,V: compare Hilbert functions for u <= U, v <= V");

    DiagArgs diag;
    auto* diag_cmd = app.add_subcommand("diag", "diagonal subalgebra numerics");
    diag_cmd->add_option("--n", diag.n)->required();
    diag_cmd->add_option("--p", diag.p)->required();
    diag_cmd->add_option("--c", diag.c)->required();
    diag_cmd->add_option("--e", diag.e)->required();
    diag_cmd->add_option("--shift", diag.shift, "a,b");
    diag_cmd->add_option("--m", diag.m);
    diag_cmd->add_option("--dim", diag.dim);
    diag_cmd->add_option("--through", diag.through);

    StrandArgs strand;
    auto* strand_cmd = app.add_subcommand("strand", "strands of a Koszul complex");
    strand_cmd->add_option("--ring", strand.ring, "n,p")->required();
    strand_cmd->add_option("--seq", strand.seq, "polynomials separated by ;")->required();
    strand_cmd->add_option("--bidegree", strand.bidegree, "u,v");
    strand_cmd->add_option("--x-degree", strand.x_degree);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kInputFailure;
    }

    Result r;
    try {
        if (*bkm_cmd)
            r = cmd_bkm(bkm);
        else if (*en_cmd)
            r = cmd_en(g, en);
        else if (*orc_cmd)
            r = cmd_oracle(g, orc);
        else if (*rees_cmd)
            r = cmd_rees(g, rees);
        else if (*diag_cmd)
            r = cmd_diag(diag);
        else
            r = cmd_strand(g, strand);
    } catch (const std::invalid_argument& e) {  // includes HypothesisError
        std::cerr << "error: " << e.what() << "\n";
        return kInputFailure;
    } catch (const std::logic_error& e) {  // an identity that must hold did not
        std::cerr << "internal mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::exception& e) {  // parse, shape, ring, input errors
        std::cerr << "error: " << e.what() << "\n";
        return kInputFailure;
    }

    if (g.format == "json")
        std::cout << r.doc.dump(2) << "\n";
    else
        render(std::cout, r.doc, "");
    if (!r.diagnostic.empty()) std::cerr << (r.code == kMismatch ? "mismatch: " : "error: ") << r.diagnostic << "\n";
    return r.code;
}
