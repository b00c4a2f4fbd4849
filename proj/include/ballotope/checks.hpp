#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ballotope/geometry.hpp"
#include "ballotope/linalg.hpp"
#include "ballotope/rational.hpp"
#include "ballotope/sequence.hpp"
#include "ballotope/vertex.hpp"

namespace ballotope {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace checks {

// Deterministic source of random rationals for the property suites.
// Draws use plain modulo so results do not depend on the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t k) { return gen_() % k; }

    Rational unit_rational(int max_den = 16) {
        std::uint64_t den = 1 + below(static_cast<std::uint64_t>(max_den));
        return Rational(below(den + 1), den);
    }

    GapVector unit_vector(int m, int max_den = 16) {
        std::vector<Rational> v;
        v.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) v.push_back(unit_rational(max_den));
        return GapVector(std::move(v));
    }

    // Non-negative entries in [0, top], small denominators, frequent zeros.
    GapVector nonneg_vector(int m, int top = 8) {
        std::vector<Rational> v;
        v.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            v.push_back(Rational(below(static_cast<std::uint64_t>(top) + 1), 1 + below(8)));
        return GapVector(std::move(v));
    }

  private:
    std::mt19937_64 gen_;
};

inline CheckResult result(std::string name, bool pass, std::string detail = "") {
    return CheckResult{std::move(name), pass, std::move(detail)};
}

// --- ballot sequences ------------------------------------------------------

inline CheckResult count_consistency(int max_n = 18) {
    auto table = count_bbs_table(max_n);
    for (int n = 1; n <= max_n; ++n)
        if (table[static_cast<size_t>(n)] != count_bbs_brute(n))
            return result("seq/dp-matches-brute", false, "mismatch at n=" + std::to_string(n));
    return result("seq/dp-matches-brute", true, "n <= " + std::to_string(max_n));
}

inline CheckResult count_monotone(int max_n = 200) {
    auto table = count_bbs_table(max_n + 1);
    for (int n = 1; n <= max_n; ++n)
        if (table[static_cast<size_t>(n) + 1] < table[static_cast<size_t>(n)])
            return result("seq/monotone-counts", false, "drop at n=" + std::to_string(n));
    return result("seq/monotone-counts", true, "n <= " + std::to_string(max_n));
}

inline bool path_has_unique_extremes(const HeightPath& p) {
    const int last = static_cast<int>(p.heights.size()) - 1;
    for (int t = 1; t <= last; ++t)
        if (p.heights[static_cast<size_t>(t)] <= p.heights[0]) return false;
    for (int t = 0; t < last; ++t)
        if (p.heights[static_cast<size_t>(t)] >= p.heights[static_cast<size_t>(last)]) return false;
    return true;
}

inline CheckResult path_characterization(int max_n = 14) {
    for (int n = 1; n <= max_n; ++n)
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            std::vector<std::uint8_t> bits(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) bits[static_cast<size_t>(j)] = (mask >> (n - 1 - j)) & 1;
            BitSequence b = BitSequence::from_bits(std::move(bits));
            if (is_bbs(b) != path_has_unique_extremes(bbs_to_path(b)))
                return result("seq/path-characterization", false, "word " + b.str());
        }
    return result("seq/path-characterization", true, "all words of length <= " + std::to_string(max_n));
}

inline CheckResult first_last_one(int max_n = 14) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& b : enumerate_bbs(n))
            if (b.bit(1) != 1 || b.bit(b.size()) != 1)
                return result("seq/starts-ends-one", false, b.str());
    return result("seq/starts-ends-one", true, "n <= " + std::to_string(max_n));
}

inline CheckResult sumset_fullness_all(int max_n = 14) {
    std::uint64_t checked = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& b : enumerate_bbs(n)) {
            auto rep = sumset_fullness(b);
            ++checked;
            if (!rep.sumset_full || !rep.diffset_full)
                return result("seq/sumset-fullness", false, b.str());
        }
    return result("seq/sumset-fullness", true, std::to_string(checked) + " sequences, n <= " + std::to_string(max_n));
}

inline CheckResult ratio_band(int n = 100, const Rational& lo = Rational(6, 25),
                              const Rational& hi = Rational(7, 25)) {
    Rational r = bbs_ratio(n);
    std::ostringstream os;
    os << "n*B_n/2^n at n=" << n << " is " << rational_str(r) << " ~ " << to_double(r);
    return result("seq/ratio-band", r >= lo && r <= hi, os.str());
}

// --- cone, polytope, partition ---------------------------------------------

inline CheckResult measure_equivalence(int families_per_n, std::uint64_t seed) {
    Rng rng(seed ^ 0x6d656173u);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < families_per_n; ++trial) {
            GapVector v = rng.nonneg_vector(2 * n - 1);
            IntervalFamily fam = intervals_from_gaps(v);
            if (is_gerrymander_measure(fam) != membership(gaps_from_intervals(fam)).in_cone)
                return result("geom/measure-equivalence", false, "family with gap vector of n=" + std::to_string(n));
        }
    return result("geom/measure-equivalence", true,
                  std::to_string(families_per_n) + " random families per n in 2..6");
}

inline std::pair<CheckResult, CheckResult> partition_cover_disjoint(int samples_per_n,
                                                                    std::uint64_t seed,
                                                                    int max_cube_n = 5) {
    Rng rng(seed ^ 0x636f7665u);
    std::uint64_t points = 0;
    for (int n = 2; n <= 5; ++n) {
        const int m = 2 * n - 1;
        for (int trial = 0; trial < samples_per_n; ++trial) {
            GapVector v = rng.unit_vector(m);
            ++points;
            int regions = 0, strict = 0;
            for (int k = 0; k < m; ++k) {
                auto rep = membership(rotate(v, k));
                if (rep.in_cone) ++regions;
                if (rep.in_cone_interior) ++strict;
            }
            if (regions < 1)
                return {result("geom/partition-cover", false, "uncovered point, n=" + std::to_string(n)),
                        result("geom/disjoint-interiors", true, "")};
            if (strict > 1)
                return {result("geom/partition-cover", true, ""),
                        result("geom/disjoint-interiors", false,
                               std::to_string(strict) + " strict regions, n=" + std::to_string(n))};
        }
    }
    for (int n = 1; n <= max_cube_n; ++n) {
        const int m = 2 * n - 1;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
            std::vector<Rational> e;
            e.reserve(static_cast<size_t>(m));
            for (int j = 0; j < m; ++j) e.emplace_back((mask >> j) & 1);
            ++points;
            if (classify_partition(GapVector(std::move(e))).regions.empty())
                return {result("geom/partition-cover", false, "uncovered cube vertex, n=" + std::to_string(n)),
                        result("geom/disjoint-interiors", true, "")};
        }
    }
    std::string detail = std::to_string(points) + " points (random + all cube vertices)";
    return {result("geom/partition-cover", true, detail), result("geom/disjoint-interiors", true, detail)};
}

// Random necklaces with three-decimal beads. Returns {unique-cut check,
// argmin-agreement check}; cut_necklace itself throws if the argmin
// construction ever leaves the scanned cut set.
inline std::pair<CheckResult, CheckResult> necklace_checks(int per_m, std::uint64_t seed,
                                                           int max_m = 11) {
    Rng rng(seed ^ 0x6e65636bu);
    std::uint64_t generic = 0, regenerated = 0;
    for (int m = 3; m <= max_m; m += 2) {
        int done = 0;
        while (done < per_m) {
            std::vector<Rational> e;
            e.reserve(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) e.push_back(Rational(rng.below(4000), 1000));
            GapVector v(std::move(e));
            std::optional<NecklaceCut> cut;
            try {
                cut = cut_necklace(v);
            } catch (const std::logic_error& ex) {
                return {result("geom/necklace-unique-generic", false, ex.what()),
                        result("geom/necklace-argmin-agrees", false, ex.what())};
            }
            if (!membership(cut->rotation).in_cone_interior) {
                ++regenerated;  // non-generic draw; uniqueness is not promised
                continue;
            }
            ++generic;
            ++done;
            if (!cut->unique)
                return {result("geom/necklace-unique-generic", false,
                               "generic necklace with " + std::to_string(cut->cuts.size()) + " cuts"),
                        result("geom/necklace-argmin-agrees", true, "")};
        }
    }
    std::string detail = std::to_string(generic) + " generic necklaces (odd m <= " +
                         std::to_string(max_m) + ", " + std::to_string(regenerated) + " non-generic redraws)";
    return {result("geom/necklace-unique-generic", true, detail),
            result("geom/necklace-argmin-agrees", true, detail)};
}

inline CheckResult scaling_invariance(int samples, std::uint64_t seed) {
    Rng rng(seed ^ 0x7363616cu);
    for (int trial = 0; trial < samples; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const int m = 2 * n - 1;
        std::vector<Rational> e;
        e.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            e.push_back(Rational(static_cast<std::int64_t>(rng.below(17)) - 8, 1 + rng.below(6)));
        GapVector v(e);
        Rational alpha(1 + rng.below(40), 1 + rng.below(40));
        for (auto& x : e) x *= alpha;
        if (membership(v).in_cone != membership(GapVector(e)).in_cone)
            return result("geom/scaling-invariance", false, "alpha=" + rational_str(alpha));
    }
    return result("geom/scaling-invariance", true, std::to_string(samples) + " random (v, alpha) pairs");
}

inline CheckResult gaps_roundtrip(int samples, std::uint64_t seed) {
    Rng rng(seed ^ 0x67617073u);
    for (int trial = 0; trial < samples; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        GapVector v = rng.nonneg_vector(2 * n - 1);
        if (gaps_from_intervals(intervals_from_gaps(v)) != v)
            return result("geom/gaps-intervals-roundtrip", false, "n=" + std::to_string(n));
    }
    return result("geom/gaps-intervals-roundtrip", true, std::to_string(samples) + " random vectors");
}

struct VolumeCase {
    int n;
    std::uint64_t samples;
};

inline CheckResult volume_within_tolerance(const std::vector<VolumeCase>& cases, std::uint64_t seed,
                                           int threads, bool analytic_n2 = false) {
    std::ostringstream os;
    bool pass = true;
    for (const auto& c : cases) {
        auto est = mc_volume(c.n, c.samples, seed, threads);
        const double target = 1.0 / (2 * c.n - 1);
        const double err = std::abs(est.estimate - target);
        if (err > 4 * est.stderr_) pass = false;
        if (analytic_n2 && c.n == 2 && std::abs(est.estimate - 1.0 / 3.0) >= 0.005) pass = false;
        os << "n=" << c.n << ": " << est.estimate << " vs " << target << " (err " << err
           << ", 4*se " << 4 * est.stderr_ << "); ";
    }
    return result("geom/volume", pass, os.str());
}

// --- vertices and bijections ------------------------------------------------

inline CheckResult shift_identity(int samples, std::uint64_t seed) {
    Rng rng(seed ^ 0x73686966u);
    for (int trial = 0; trial < samples; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const int m = 2 * n - 1;
        GapVector v = rng.unit_vector(m);
        SlopePath inner = slope_vector(v);
        SlopePath padded = slope_vector(pad_alpha(v));
        for (int k = 0; k <= m; ++k)
            if (padded.values[static_cast<size_t>(k) + 2] != inner.values[static_cast<size_t>(k)] + 2)
                return result("vertex/shift-identity", false, "k=" + std::to_string(k));
    }
    return result("vertex/shift-identity", true, std::to_string(samples) + " random vectors");
}

inline CheckResult bijection_counts(int max_n = 6) {
    for (int n = 1; n <= max_n; ++n) {
        auto q = enumerate_vertices(n);
        BigInt expected = count_bbs(2 * n + 3);
        if (BigInt(q.size()) != expected)
            return result("vertex/bijection-counts", false,
                          "|Q_" + std::to_string(n) + "| = " + std::to_string(q.size()) + " != B_" +
                              std::to_string(2 * n + 3) + " = " + expected.str());
        if (2 * n + 3 <= kDefaultBruteCap && expected != count_bbs_brute(2 * n + 3))
            return result("vertex/bijection-counts", false, "DP/brute mismatch at " + std::to_string(2 * n + 3));
    }
    return result("vertex/bijection-counts", true, "|Q_n| = B_{2n+3} for n in 1.." + std::to_string(max_n));
}

inline CheckResult interior_bijection_counts(int max_n = 6) {
    for (int n = 2; n <= max_n; ++n) {
        auto q = enumerate_vertices(n);
        BigInt expected = count_bbs(2 * n - 1);
        if (BigInt(q.interior_count()) != expected)
            return result("vertex/interior-bijection-counts", false,
                          "|T_" + std::to_string(n) + "| = " + std::to_string(q.interior_count()) +
                              " != B_" + std::to_string(2 * n - 1) + " = " + expected.str());
    }
    return result("vertex/interior-bijection-counts", true,
                  "|T_n| = B_{2n-1} for n in 2.." + std::to_string(max_n));
}

inline CheckResult bijection_roundtrips(int max_n = 5) {
    for (int n = 1; n <= max_n; ++n) {
        auto q = enumerate_vertices(n);
        std::set<std::string> images;
        for (size_t i = 0; i < q.size(); ++i) {
            GapVector v = q.vertex(i);
            BitSequence b = vertex_to_bbs(v);
            if (bbs_to_vertex(b) != v)
                return result("vertex/roundtrips", false, "vertex roundtrip failed, n=" + std::to_string(n));
            images.insert(b.str());
        }
        std::set<std::string> all;
        for (const auto& b : enumerate_bbs(2 * n + 3)) all.insert(b.str());
        if (images != all)
            return result("vertex/roundtrips", false, "image set mismatch at n=" + std::to_string(n));
        for (const auto& s : all) {
            BitSequence b(s);
            if (vertex_to_bbs(bbs_to_vertex(b)) != b)
                return result("vertex/roundtrips", false, "sequence roundtrip failed: " + s);
        }
        if (n >= 2) {
            std::set<std::string> timages;
            for (size_t i = 0; i < q.size(); ++i)
                if (q.is_interior(i)) timages.insert(interior_vertex_to_bbs(q.vertex(i)).str());
            std::set<std::string> tall;
            for (const auto& b : enumerate_bbs(2 * n - 1)) tall.insert(b.str());
            if (timages != tall)
                return result("vertex/roundtrips", false, "interior image mismatch at n=" + std::to_string(n));
        }
    }
    return result("vertex/roundtrips", true, "exhaustive for n <= " + std::to_string(max_n));
}

inline CheckResult vertices_match_basic_solutions(int max_n = 3) {
    for (int n = 1; n <= max_n; ++n) {
        auto direct = enumerate_vertices(n).materialize();
        auto bfs = basic_feasible_solutions(n);
        if (direct.size() != bfs.size())
            return result("vertex/matches-basic-solutions", false,
                          "size mismatch at n=" + std::to_string(n));
        for (size_t i = 0; i < direct.size(); ++i)
            if (direct[i] != bfs[i])
                return result("vertex/matches-basic-solutions", false, "entry mismatch at n=" + std::to_string(n));
    }
    return result("vertex/matches-basic-solutions", true, "sets equal for n <= " + std::to_string(max_n));
}

inline CheckResult extremes_within_one(int max_n = 6) {
    for (int n = 1; n <= max_n; ++n) {
        auto q = enumerate_vertices(n);
        const int m = 2 * n - 1;
        for (size_t i = 0; i < q.size(); ++i) {
            SlopePath p = slope_vector(q.vertex(i));
            for (int t = 1; t < m; ++t) {
                if (p.values[static_cast<size_t>(t)] < p.values.front() - 1 ||
                    p.values[static_cast<size_t>(t)] > p.values.back() + 1)
                    return result("vertex/extremes-within-one", false, "n=" + std::to_string(n));
            }
        }
    }
    return result("vertex/extremes-within-one", true, "all vertices, n <= " + std::to_string(max_n));
}

// --- constraint system -------------------------------------------------------

inline CheckResult constraint_membership_consistency(int samples, std::uint64_t seed) {
    Rng rng(seed ^ 0x636f6e73u);
    for (int n = 2; n <= 4; ++n) {
        ConstraintSystem cs = constraint_system(n);
        for (const auto& row : cs.rows)
            for (int x : row)
                if (x < -1 || x > 1) return result("linalg/rows-flat-membership", false, "non-flat row");
        for (int trial = 0; trial < samples; ++trial) {
            std::vector<Rational> x;
            x.reserve(static_cast<size_t>(cs.m));
            for (int i = 0; i < cs.m; ++i)
                x.push_back(Rational(static_cast<std::int64_t>(rng.below(33)) - 8, 16));
            if (satisfies(cs, x) != membership(GapVector(x)).in_polytope)
                return result("linalg/rows-flat-membership", false, "disagreement at n=" + std::to_string(n));
        }
    }
    return result("linalg/rows-flat-membership", true,
                  std::to_string(samples) + " random points per n in 2..4");
}

inline CheckResult unimodular_flat(int max_n, int threads, const ProgressFn& progress = nullptr) {
    std::ostringstream os;
    for (int n = 2; n <= max_n; ++n) {
        auto rep = verify_unimodularity(n, threads, progress);
        os << "n=" << n << ": " << rep.submatrices_tested << " subsets, " << rep.invertible_count
           << " invertible; ";
        if (!rep.all_unimodular || !rep.all_flat)
            return result("linalg/unimodular-flat", false, os.str());
    }
    return result("linalg/unimodular-flat", true, os.str());
}

inline CheckResult integer_basic_solutions(int max_n = 3) {
    for (int n = 1; n <= max_n; ++n) {
        ConstraintSystem cs = constraint_system(n);
        bool ok = true;
        detail::for_each_combination(static_cast<int>(cs.rows.size()), cs.m,
                                     [&](const std::vector<int>& idx) {
                                         if (!ok) return;
                                         std::vector<std::vector<int>> rows;
                                         std::vector<int> rhs;
                                         for (int r : idx) {
                                             rows.push_back(cs.rows[static_cast<size_t>(r)]);
                                             rhs.push_back(cs.rhs[static_cast<size_t>(r)]);
                                         }
                                         auto x = solve_linear_system(rows, rhs);
                                         if (!x) return;
                                         for (const auto& coord : *x)
                                             if (denominator(coord) != 1) ok = false;
                                     });
        if (!ok) return result("linalg/integer-basic-solutions", false, "fractional solution at n=" + std::to_string(n));
    }
    return result("linalg/integer-basic-solutions", true, "all invertible subsets, n <= " + std::to_string(max_n));
}

inline CheckResult bounds_check(int l_min = 5, int l_max = 29) {
    for (const auto& row : verify_bounds(l_min, l_max))
        if (!row.pass)
            return result("vertex/bounds", false, "l=" + std::to_string(row.ell));
    return result("vertex/bounds", true,
                  "odd l in " + std::to_string(l_min) + ".." + std::to_string(l_max));
}

}  // namespace checks

enum class VerifyLevel { quick, full };

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::pair<int, Rational>> ratios;  // populated at full level
    bool all_pass = true;
};

using CheckCallback = std::function<void(const CheckResult&)>;

/// The one-shot invariant suite behind `verify`. quick: reduced sample
/// counts, exhaustive work up to n=3. full: acceptance-scale samples,
/// exhaustive unimodularity at n=4 and million-sample volumes.
inline VerifyReport run_verify_suite(VerifyLevel level, std::uint64_t seed, int threads = 1,
                                     const ProgressFn& progress = nullptr,
                                     const CheckCallback& on_check = nullptr) {
    const bool full = level == VerifyLevel::full;
    VerifyReport report;
    auto add = [&](CheckResult r) {
        report.all_pass = report.all_pass && r.pass;
        if (on_check) on_check(r);
        report.checks.push_back(std::move(r));
    };

    add(checks::count_consistency(18));
    add(checks::count_monotone(200));
    add(checks::path_characterization(full ? 16 : 14));
    add(checks::first_last_one(14));
    add(checks::sumset_fullness_all(14));
    add(checks::ratio_band());

    add(checks::measure_equivalence(full ? 10000 : 2000, seed));
    auto [cover, disjoint] = checks::partition_cover_disjoint(full ? 100000 : 10000, seed);
    add(cover);
    add(disjoint);
    auto [unique, argmin] = checks::necklace_checks(full ? 10000 : 1000, seed);
    add(unique);
    add(argmin);
    add(checks::scaling_invariance(full ? 5000 : 1000, seed));
    add(checks::gaps_roundtrip(full ? 5000 : 1000, seed));
    add(checks::volume_within_tolerance(
        full ? std::vector<checks::VolumeCase>{{2, 1000000}, {3, 1000000}, {4, 1000000}, {5, 1000000}}
             : std::vector<checks::VolumeCase>{{2, 200000}, {3, 200000}},
        seed, threads, /*analytic_n2=*/full));

    add(checks::shift_identity(full ? 5000 : 1000, seed));
    add(checks::bijection_counts(6));
    add(checks::interior_bijection_counts(6));
    add(checks::bijection_roundtrips(5));
    add(checks::vertices_match_basic_solutions(3));
    add(checks::extremes_within_one(full ? 6 : 5));

    add(checks::constraint_membership_consistency(full ? 2000 : 500, seed));
    add(checks::unimodular_flat(full ? 4 : 3, threads, progress));
    add(checks::integer_basic_solutions(3));
    add(checks::bounds_check(5, 29));

    if (full) {
        auto table = count_bbs_table(200);
        for (int n = 10; n <= 200; ++n)
            report.ratios.emplace_back(n, Rational(BigInt(n) * table[static_cast<size_t>(n)], BigInt(1) << n));
    }
    return report;
}

}  // namespace ballotope
