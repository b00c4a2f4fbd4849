// Acceptance suite: runs every top-level claim the library is built around,
// one line per criterion, exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ballotope/checks.hpp"
#include "ballotope/geometry.hpp"
#include "ballotope/linalg.hpp"
#include "ballotope/sequence.hpp"
#include "ballotope/vertex.hpp"

using namespace ballotope;

namespace {

constexpr std::uint64_t kSeed = 2018;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail, double ms) {
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d (%s): %s (%.0f ms)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str(), ms);
    std::fflush(stdout);
}

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        std::tie(pass, detail) = fn();
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report(id, name, pass, detail, ms);
}

using Verdict = std::pair<bool, std::string>;

Verdict vertex_counts() {
    std::ostringstream os;
    for (int n = 1; n <= 6; ++n) {
        auto q = enumerate_vertices(n);
        BigInt dp = count_bbs(2 * n + 3);
        BigInt brute = count_bbs_brute(2 * n + 3);
        if (dp != brute) return {false, "DP/brute disagree at length " + std::to_string(2 * n + 3)};
        if (BigInt(q.size()) != dp)
            return {false, "|Q_" + std::to_string(n) + "| = " + std::to_string(q.size()) +
                               " but B = " + dp.str()};
        os << "|Q_" << n << "|=" << q.size() << " ";
    }
    auto q1 = enumerate_vertices(1);
    auto q2 = enumerate_vertices(2);
    if (q1.size() != 2 || q2.size() != 5) return {false, "anchor values missing"};
    return {true, os.str()};
}

Verdict interior_counts() {
    std::ostringstream os;
    for (int n = 2; n <= 6; ++n) {
        auto q = enumerate_vertices(n);
        BigInt expected = count_bbs(2 * n - 1);
        if (BigInt(q.interior_count()) != expected)
            return {false, "|T_" + std::to_string(n) + "| = " + std::to_string(q.interior_count()) +
                               " but B = " + expected.str()};
        os << "|T_" << n << "|=" << q.interior_count() << " ";
    }
    if (enumerate_vertices(2).interior_count() != 1) return {false, "anchor |T_2| != 1"};
    return {true, os.str()};
}

Verdict roundtrips() {
    if (vertex_to_bbs(GapVector({0, 0, 1, 0, 0})).str() != "110111011")
        return {false, "worked pair forward map broke"};
    if (bbs_to_vertex(BitSequence("110111011")) != GapVector({0, 0, 1, 0, 0}))
        return {false, "worked pair inverse map broke"};
    auto r = checks::bijection_roundtrips(5);
    return {r.pass, r.pass ? "worked pair plus exhaustive n <= 5" : r.detail};
}

Verdict volume() {
    auto r = checks::volume_within_tolerance(
        {{2, 1000000}, {3, 1000000}, {4, 1000000}, {5, 1000000}}, kSeed, 2, /*analytic_n2=*/true);
    return {r.pass, r.detail};
}

Verdict partition() {
    auto [cover, disjoint] = checks::partition_cover_disjoint(100000, kSeed, 5);
    bool pass = cover.pass && disjoint.pass;
    return {pass, pass ? cover.detail : cover.detail + " / " + disjoint.detail};
}

Verdict necklace() {
    GapVector fig({parse_rational("1.78"), parse_rational("1.55"), parse_rational("0.76"),
                   parse_rational("2.06"), parse_rational("3.21")});
    auto cut = cut_necklace(fig);
    GapVector expected({parse_rational("3.21"), parse_rational("1.78"), parse_rational("1.55"),
                        parse_rational("0.76"), parse_rational("2.06")});
    if (!cut.unique || cut.rotation != expected || cut.canonical != 4)
        return {false, "five-bead regression broke"};
    auto [unique, argmin] = checks::necklace_checks(10000, kSeed, 11);
    bool pass = unique.pass && argmin.pass;
    return {pass, pass ? "regression exact; " + unique.detail : unique.detail + " / " + argmin.detail};
}

Verdict unimodularity() {
    struct Expect {
        int n;
        std::uint64_t subsets, invertible;
    };
    std::ostringstream os;
    for (Expect e : {Expect{2, 56, 30}, Expect{3, 2002, 594}, Expect{4, 77520, 11782}}) {
        auto rep = verify_unimodularity(e.n, 2);
        if (rep.submatrices_tested != e.subsets)
            return {false, "subset count off at n=" + std::to_string(e.n)};
        if (rep.invertible_count != e.invertible)
            return {false, "invertible count off at n=" + std::to_string(e.n)};
        if (!rep.all_unimodular) return {false, "non-unimodular submatrix at n=" + std::to_string(e.n)};
        if (!rep.all_flat) return {false, "non-flat trace at n=" + std::to_string(e.n)};
        os << "n=" << e.n << ": " << e.subsets << "/" << e.invertible << " ok; ";
    }

    IntMatrix a0 = {{0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 1},
                    {1, -1, 0, 0, 0},
                    {0, -1, 1, -1, 1},
                    {0, 0, 0, -1, 1}};
    auto trace = flat_elimination(a0);
    IntMatrix a5 = {{0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 1},
                    {1, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0},
                    {0, 0, 0, 1, 0}};
    if (!trace.all_flat || trace.singular || (trace.determinant != 1 && trace.determinant != -1))
        return {false, "worked 5x5 elimination not unimodular-flat"};
    if (trace.steps.size() != 6 || trace.steps.back() != a5)
        return {false, "worked 5x5 trace does not reproduce"};
    return {true, os.str() + "worked 5x5 trace reproduces"};
}

Verdict vertex_cross_check() {
    for (int n = 1; n <= 3; ++n) {
        auto direct = enumerate_vertices(n).materialize();
        auto bfs = basic_feasible_solutions(n);
        if (direct.size() != bfs.size()) return {false, "size mismatch at n=" + std::to_string(n)};
        for (size_t i = 0; i < bfs.size(); ++i) {
            if (bfs[i] != direct[i]) return {false, "vertex mismatch at n=" + std::to_string(n)};
            for (int j = 0; j < bfs[i].size(); ++j)
                if (bfs[i][j] != 0 && bfs[i][j] != 1)
                    return {false, "non-binary coordinate at n=" + std::to_string(n)};
        }
    }
    return {true, "basic feasible solutions equal the vertex scan for n <= 3, all coordinates 0/1"};
}

Verdict bounds() {
    auto rows = verify_bounds(5, 29);
    std::ostringstream os;
    for (const auto& row : rows) {
        if (!row.pass) return {false, "bound fails at l=" + std::to_string(row.ell)};
        os << "B_" << row.ell << "=" << row.count.str() << " ";
    }
    return {true, os.str()};
}

Verdict counting() {
    auto consistency = checks::count_consistency(18);
    if (!consistency.pass) return {false, consistency.detail};
    auto monotone = checks::count_monotone(200);
    if (!monotone.pass) return {false, monotone.detail};
    return {true, "DP equals brute force for n <= 18; counts monotone for n <= 200"};
}

Verdict ratio_trend() {
    Rational r100 = bbs_ratio(100);
    if (r100 < Rational(18, 100) || r100 > Rational(32, 100))
        return {false, "ratio(100) outside the coarse band: " + rational_str(r100)};
    // Calibrated band around the exact DP value 0.251682...
    if (r100 < Rational(245, 1000) || r100 > Rational(258, 1000))
        return {false, "ratio(100) outside the calibrated band: " + rational_str(r100)};
    auto table = count_bbs_table(200);
    double lo = 1, hi = 0;
    for (int n = 10; n <= 200; ++n) {
        double v = to_double(Rational(BigInt(n) * table[static_cast<size_t>(n)], BigInt(1) << n));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::ostringstream os;
    os << "ratio(100) ~ " << to_double(r100) << "; over n=10..200 the ratio stays in [" << lo << ", "
       << hi << "]";
    return {lo >= 0.24 && hi <= 0.28, os.str()};
}

Verdict sumsets() {
    auto r = checks::sumset_fullness_all(14);
    return {r.pass, r.detail};
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_s = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    criterion(1, "vertex bijection counts", [] {
        const auto start = std::chrono::steady_clock::now();
        auto v = vertex_counts();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s >= 30) return Verdict{false, "runtime " + std::to_string(s) + " s exceeds 30 s"};
        return v;
    });
    criterion(2, "interior bijection counts", interior_counts);
    criterion(3, "bijection round trips", roundtrips);
    criterion(4, "polytope volume", [] {
        const auto start = std::chrono::steady_clock::now();
        auto v = volume();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s >= 60) return Verdict{false, "runtime " + std::to_string(s) + " s exceeds 60 s"};
        return v;
    });
    criterion(5, "cube partition", partition);
    criterion(6, "necklace cuts", necklace);
    criterion(7, "unimodularity and flatness", [] {
        const auto start = std::chrono::steady_clock::now();
        auto v = unimodularity();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s >= 300) return Verdict{false, "runtime " + std::to_string(s) + " s exceeds 5 min"};
        return v;
    });
    criterion(8, "vertex cross-check", vertex_cross_check);
    criterion(9, "counting bounds", bounds);
    criterion(10, "DP soundness", counting);
    criterion(11, "asymptotic trend", ratio_trend);
    criterion(12, "sumset fullness", sumsets);

    std::printf("%d/12 criteria passed in %.1f s\n", 12 - failures, elapsed_s());
    return failures;
}
