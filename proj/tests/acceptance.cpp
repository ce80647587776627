// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "support.hpp"

using namespace resint;
using namespace resint::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int k, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o{false, {}};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s > budget_s) {
        o.ok = false;
        o.detail += " (over time budget " + std::to_string(budget_s) + " s)";
    }
    if (!o.ok) ++failures;
    std::printf("%s %d %s [%.3f s]%s%s\n", o.ok ? "PASS" : "FAIL", k, name.c_str(), s, o.detail.empty() ? "" : " ",
                o.detail.c_str());
    std::fflush(stdout);
}

ShiftMultiset display() {
    ShiftMultiset s;
    s.by_index = {{{{0, 0}, 1}},
                  {{{0, 3}, 4}, {{1, 1}, 4}},
                  {{{1, 3}, 12}, {{0, 4}, 3}, {{2, 2}, 6}},
                  {{{2, 3}, 12}, {{1, 4}, 8}},
                  {{{2, 4}, 6}}};
    return s;
}

}  // namespace

int main() {
    criterion(1, "golden resolution n=3 m=4", 0.001, [] {
        const bool ok = bkm_shifts(3, 4).by_index == display().by_index;
        return Outcome{ok, ok ? "" : "shift multisets differ"};
    });

    criterion(2, "oracle equals closed form n=3 m=4 over F_32003 and F_101", 300.0, [] {
        const auto want = bkm_betti_table(3, 4);
        const auto a = betti_window(example_J(), 4, 2, 4);
        const auto b = betti_window(example_J(PrimeField(101)), 4, 2, 4);
        if (!a.same_entries(want)) return Outcome{false, "F_32003 table differs"};
        if (!b.same_entries(a)) return Outcome{false, "F_101 table differs"};
        return Outcome{true, {}};
    });

    criterion(3, "oracle equals closed form n=2 m=2", 1.0, [] {
        const bool ok = betti_window(small_J(), 2, 1, 2).same_entries(bkm_betti_table(2, 2));
        return Outcome{ok, ok ? "" : "table differs"};
    });

    criterion(4, "K_a^b strand ranks equal closed form", 60.0, [] {
        int cases = 0;
        for (int n = 1; n <= 4; ++n)
            for (int a = 0; a <= 3; ++a)
                for (int b = 0; b <= n - 1; ++b) {
                    const auto r = kab_rank(n, a, b);
                    if (!r.agree())
                        return Outcome{false, "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                                  " b=" + std::to_string(b)};
                    ++cases;
                }
        return Outcome{true, std::to_string(cases) + " cases"};
    });

    criterion(5, "regularity (0,2) for n=3", 300.0, [] {
        const auto r = reg_window(example_J(), 4, 2, 4);
        const bool ok = r.reg_x == 0 && r.reg_y == 2;
        return Outcome{ok, "(" + std::to_string(r.reg_x) + "," + std::to_string(r.reg_y) + ")"};
    });

    criterion(6, "Eagon-Northcott exactness through degree 6", 30.0, [] {
        const auto phi = example_phi();
        const auto en = eagon_northcott(phi);
        if (!compose_zero_check(en.complex).ok) return Outcome{false, "d^2 != 0"};
        if (!exactness_report(en.complex, 6, positions_from(en.complex, 1)).exact())
            return Outcome{false, "nonzero homology"};
        const auto h0 = en_h0_dims(phi, 6);
        for (int t = 0; t <= 6; ++t)
            if (strand_at(en.complex, Bidegree{0, t}).homology(0) != h0[static_cast<std::size_t>(t)])
                return Outcome{false, "H_0 differs at degree " + std::to_string(t)};
        return Outcome{true, {}};
    });

    criterion(7, "Hilbert function via Rees pieces and closed form", 300.0, [] {
        const auto model = build_rees_model(example_Phi());
        TorOracle<P> oracle(build_J(model));
        const auto shifts = bkm_shifts(3, 4);
        for (int u = 0; u <= 4; ++u)
            for (int v = 0; v <= 2; ++v) {
                const auto q = oracle.quotient_dim({u, v});
                const auto r = power_piece_dim(model, v, u + 4 * v);
                const auto h = hilbert_from_shifts(shifts, 3, 5, {u, v});
                if (q != r || static_cast<std::int64_t>(q) != h)
                    return Outcome{false, "(" + std::to_string(u) + "," + std::to_string(v) + ")"};
            }
        return Outcome{true, {}};
    });

    criterion(8, "linear powers reg(I)=4 reg(I^2)=8 in window i<=6 t<=12", 300.0, [] {
        const auto model = build_rees_model(example_Phi());
        for (int s = 1; s <= 2; ++s) {
            const auto c = power_regularity_check(model, s, 6, 12);
            if (!c.confirmed()) return Outcome{false, "s=" + std::to_string(s)};
        }
        return Outcome{true, {}};
    });

    criterion(9, "diagonal criterion property suites", 10.0, [] {
        for (int n = 1; n <= 8; ++n)
            for (int p = 1; p <= 8; ++p)
                for (int c = 1; c <= 6; ++c)
                    for (int e = 1; e <= 6; ++e)
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < p; ++b)
                                if (!shifted_diag_is_cm(a, b, {c, e}, n, p)) return Outcome{false, "(i)"};
        for (int n = 1; n <= 8; ++n)
            for (int m = n; m <= 8; ++m)
                for (int c = 1; c <= 8; ++c)
                    for (int e = static_cast<int>(ceil_div(n, 2)); e <= 8; ++e)
                        if (koszul_certificate(bkm_shifts(n, m), {c, e}).reg_bound > 1) return Outcome{false, "(ii)"};
        for (int m = 2; m <= 8; ++m)
            for (int c = 1; c <= 8; ++c)
                for (int e = 1; e <= 8; ++e)
                    if (koszul_certificate(bkm_shifts(2, m), {c, e}).verdict != Verdict::Certified)
                        return Outcome{false, "(iii)"};
        return Outcome{true, {}};
    });

    criterion(10, "negative control: corrupted generator exits 2", 300.0, [] {
        const std::string cmd = std::string(RESINT_CLI) + " oracle --ideal " + RESINT_SAMPLES +
                                "/n3m4_ideal_corrupted.json --expect-bkm 3,4 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (pipe == nullptr) return Outcome{false, "popen failed"};
        std::string out;
        char buf[4096];
        std::size_t n = 0;
        while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        const int status = pclose(pipe);
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        const bool diff = out.find("\"diff\": [\n") != std::string::npos;
        return Outcome{code == 2 && diff, "exit " + std::to_string(code)};
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
