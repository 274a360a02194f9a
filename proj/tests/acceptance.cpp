// Acceptance suite: runs every contract check at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dilogeq/dilog.hpp"
#include "dilogeq/reduction.hpp"
#include "dilogeq/relations.hpp"
#include "support/li2_oracle.hpp"

using namespace dilogeq;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
    return r;
}

}  // namespace

int main() {
    constexpr int kSamples = 100;
    constexpr double kMargin = 1e-3;

    // 1. The n-gon identity at 1e-10 for n = 4..12, 100 samples each, and
    // 2. the crossing/rectangle relations on the same samples.
    {
        auto t0 = std::chrono::steady_clock::now();
        double worst_eqn = 0.0, worst_chord = 0.0;
        for (int n = 4; n <= 12; ++n) {
            auto rep = verify_eqn(n, kSamples, 0, kMargin);
            worst_eqn = std::max(worst_eqn, rep.max_residual);
            worst_chord = std::max(worst_chord, rep.max_chord_residual);
        }
        bool constants = eqn_constant(5) == 3 && eqn_constant(6) == 6;
        double dt = seconds_since(t0);
        report(1, worst_eqn <= 1e-10 && constants && dt < 5.0,
               "Eq_n for n=4..12, 100 samples: max residual " + fmt(worst_eqn) +
                   " (tol 1e-10), constants 3 L(1) / 6 L(1) at n=5/6, " + fmt(dt) + "s");

        double worst_block = 0.0;
        for (int n = 4; n <= 7; ++n)
            for (int s = 0; s < kSamples; ++s) {
                auto m = dihedral_coords(sample_cell(n, static_cast<std::uint64_t>(s), kMargin));
                for (const auto& [a, b, c, d] : enumerate_block_rectangles(n))
                    worst_block = std::max(worst_block,
                                           std::fabs(check_block_relation(a, b, c, d, m)));
            }
        report(2, worst_chord <= 1e-12 && worst_block <= 1e-11,
               "chord relations max " + fmt(worst_chord) + " (tol 1e-12); rectangle relations " +
                   "n<=7 max " + fmt(worst_block) + " (tol 1e-11)");
    }

    // 3. Exact wedge cancellation for n = 4..20.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool all_zero = true;
        for (int n = 4; n <= 20; ++n) all_zero = all_zero && wedge_sum(n).is_zero();
        double dt = seconds_since(t0);
        report(3, all_zero && dt < 1.0,
               std::string("wedge sum is the zero formal sum for n=4..20, ") + fmt(dt) + "s");
    }

    // 4. Certificates: structural + numeric for n = 6, 7, 8, 10, 12, 14,
    // plus the binomial columns and the signed constant identity.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool certs_ok = true;
        std::string detail;
        for (int n : {6, 7, 8, 10, 12, 14}) {
            auto rep = verify_certificate(build_certificate(n), 50, 1e-10, 0, kMargin);
            certs_ok = certs_ok && rep.ok();
            if (!rep.ok()) detail += " n=" + std::to_string(n) + " failed;";
        }
        bool columns_ok = true;
        for (int k = 4; k <= 7; ++k) {
            long long dd = 0, mid = 0;
            for (int l = 2; l <= k; ++l) dd += (l % 2 == 0 ? 1 : -1) * binom(k - 2, l - 2);
            for (int l = 1; l <= k; ++l) mid += (l % 2 == 0 ? 1 : -1) * binom(k - 1, l - 1);
            columns_ok = columns_ok && dd == 0 && mid == 0;
        }
        bool consts_ok = true;
        for (int n : {8, 10, 12, 14}) {
            long long sum = 0;
            for (int l = 0; l <= n / 2; ++l)
                sum += (l % 2 == 0 ? 1 : -1) * binom(n / 2, l) *
                       (static_cast<long long>(n - l - 3) * (n - l - 2) / 2);
            consts_ok = consts_ok && sum == 0;
        }
        double dt = seconds_since(t0);
        report(4, certs_ok && columns_ok && consts_ok && dt < 10.0,
               "certificates n=6,7,8,10,12,14 structural+numeric (tol 1e-10, 50 samples)" +
                   detail + ", binomial columns k=4..7 and constant identity zero, " + fmt(dt) +
                   "s");
    }

    // 5. Degeneration: forced set, split sizes, and the numeric star-path
    // limit.
    {
        auto d = degenerate(Chord(1, 4, 5));
        bool forced_ok = d.forced_one == std::vector<Chord>{Chord(2, 5, 5), Chord(3, 5, 5)} &&
                         d.side1_chords == std::vector<Chord>{Chord(1, 3, 5), Chord(2, 4, 5)};
        bool sizes_ok = true;
        for (int n = 4; n <= 12; ++n)
            for (const Chord& c : enumerate_chords(n)) {
                auto r = degenerate(c);
                sizes_ok = sizes_ok && r.n1 + r.n2 == n + 2;
            }
        auto m = degeneration_endpoint(Chord(1, 4, 5), 1e-8);
        double dev = std::max(std::fabs(m.at(2, 5) - 1.0), std::fabs(m.at(3, 5) - 1.0));
        double residual = std::fabs(m.at(1, 3) + m.at(2, 4) - 1.0);
        report(5, forced_ok && sizes_ok && dev <= 1e-6 && residual <= 1e-6,
               "degenerate({1,4}, 5) forces u{2,5}, u{3,5} (limit deviation " + fmt(dev) +
                   "), leaves u{1,3}+u{2,4}=1 (residual " + fmt(residual) +
                   "); n1+n2=n+2 for all chords, n<=12");
    }

    // 6. Dilogarithm kernel.
    {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst_refl = 0.0, worst_five = 0.0;
        for (int it = 0; it < 1000; ++it) {
            double x = u(rng), y = u(rng);
            worst_refl = std::max(worst_refl, std::fabs(rogers_l(x) + rogers_l(1 - x) - L1));
            double five = rogers_l(x) + rogers_l((1 - x) / (1 - x * y)) +
                          rogers_l((1 - y) / (1 - x * y)) + rogers_l(y) + rogers_l(1 - x * y);
            worst_five = std::max(worst_five, std::fabs(five - 3.0 * L1));
        }
        double worst_series = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            double x = static_cast<double>(i) / 1000.0;
            double want = static_cast<double>(li2_series_oracle(static_cast<long double>(x)));
            worst_series = std::max(
                worst_series, std::fabs(li2(x) - want) / std::max(1.0, std::fabs(want)));
        }
        double mid = std::fabs(rogers_l(0.5) - L1 / 2.0);
        report(6,
               worst_refl <= 1e-12 && worst_five <= 1e-11 && worst_series <= 1e-13 &&
                   mid <= 1e-13,
               "reflection " + fmt(worst_refl) + " (tol 1e-12), five-term " + fmt(worst_five) +
                   " (tol 1e-11), series oracle " + fmt(worst_series) +
                   " (tol 1e-13, 1001 points), |L(1/2)-pi^2/12| = " + fmt(mid));
    }

    // 7. Star reconstruction reproduces the five-term arguments.
    {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> u(1e-3, 1.0 - 1e-3);
        double worst = 0.0;
        for (int it = 0; it < 100; ++it) {
            double x = u(rng), y = u(rng);
            auto m = dihedral_coords(config_from_star(StarCoords(5, {x, y})));
            double args[5][2] = {{m.at(1, 3), x},
                                 {m.at(2, 4), (1 - x) / (1 - x * y)},
                                 {m.at(3, 5), (1 - y) / (1 - x * y)},
                                 {m.at(1, 4), y},
                                 {m.at(2, 5), 1 - x * y}};
            for (const auto& [got, want] : args) worst = std::max(worst, std::fabs(got - want));
        }
        report(7, worst <= 1e-13,
               "five-term arguments from star coordinates, 100 draws: max deviation " +
                   fmt(worst) + " (tol 1e-13)");
    }

    return failures;
}
