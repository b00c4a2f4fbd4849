#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ballotope/rational.hpp"

namespace ballotope {

/// Gap parametrization of an interval family: odd-length vector
/// [len_1, gap_1, len_2, gap_2, ..., len_n]. Entries are exact rationals;
/// no sign or range restriction is imposed by the type itself (cone
/// membership queries are meaningful on arbitrary vectors).
class GapVector {
  public:
    explicit GapVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        if (entries_.empty() || entries_.size() % 2 == 0)
            throw std::invalid_argument("gap vector length must be odd and >= 1, got " +
                                        std::to_string(entries_.size()));
    }

    int size() const { return static_cast<int>(entries_.size()); }            // m = 2n-1
    int pairs() const { return (size() + 1) / 2; }                            // n
    const Rational& entry(int i) const { return entries_[static_cast<size_t>(i) - 1]; }  // 1-based
    const Rational& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool nonnegative() const {
        for (const auto& x : entries_)
            if (x < 0) return false;
        return true;
    }

    bool in_unit_cube() const {
        for (const auto& x : entries_)
            if (x < 0 || x > 1) return false;
        return true;
    }

    bool operator==(const GapVector&) const = default;

  private:
    std::vector<Rational> entries_;
};

/// n ordered, possibly degenerate intervals (a_1,b_1),...,(a_n,b_n) with
/// a_1 = 0 and weakly increasing endpoints.
class IntervalFamily {
  public:
    explicit IntervalFamily(std::vector<Rational> endpoints) : endpoints_(std::move(endpoints)) {
        if (endpoints_.empty() || endpoints_.size() % 2 != 0)
            throw std::invalid_argument("interval family needs 2n endpoints, got " +
                                        std::to_string(endpoints_.size()));
        if (endpoints_.front() != 0)
            throw std::invalid_argument("leftmost interval must start at 0");
        for (size_t i = 1; i < endpoints_.size(); ++i)
            if (endpoints_[i - 1] > endpoints_[i])
                throw std::invalid_argument("interval endpoints must be weakly increasing");
    }

    int count() const { return static_cast<int>(endpoints_.size()) / 2; }           // n
    const Rational& left(int j) const { return endpoints_[2 * static_cast<size_t>(j) - 2]; }   // a_j
    const Rational& right(int j) const { return endpoints_[2 * static_cast<size_t>(j) - 1]; }  // b_j
    const std::vector<Rational>& endpoints() const { return endpoints_; }

    bool operator==(const IntervalFamily&) const = default;

  private:
    std::vector<Rational> endpoints_;
};

/// A ballot vector: the left family starts with k pairs (1,-1) then zeros,
/// the right family ends with k pairs (-1,1) read leftwards, 1 <= k <= n-1.
struct BallotVector {
    enum class Kind { left, right };
    Kind kind;
    int depth;
    std::vector<int> entries;
};

/// All 2(n-1) ballot vectors in R^{2n-1}: left vectors by depth, then right
/// vectors by depth. Empty for n = 1.
inline std::vector<BallotVector> ballot_vectors(int n) {
    if (n < 1) throw std::domain_error("ballot_vectors: n must be >= 1");
    const int m = 2 * n - 1;
    std::vector<BallotVector> out;
    out.reserve(2 * (n - 1));
    for (int k = 1; k < n; ++k) {
        BallotVector v{BallotVector::Kind::left, k, std::vector<int>(m, 0)};
        for (int i = 0; i < k; ++i) {
            v.entries[2 * i] = 1;
            v.entries[2 * i + 1] = -1;
        }
        out.push_back(std::move(v));
    }
    for (int k = 1; k < n; ++k) {
        BallotVector v{BallotVector::Kind::right, k, std::vector<int>(m, 0)};
        for (int i = 0; i < k; ++i) {
            v.entries[m - 1 - 2 * i] = 1;
            v.entries[m - 2 - 2 * i] = -1;
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline GapVector gaps_from_intervals(const IntervalFamily& a) {
    std::vector<Rational> v;
    v.reserve(2 * a.count() - 1);
    for (int j = 1; j <= a.count(); ++j) {
        v.push_back(a.right(j) - a.left(j));
        if (j < a.count()) v.push_back(a.left(j + 1) - a.right(j));
    }
    return GapVector(std::move(v));
}

inline IntervalFamily intervals_from_gaps(const GapVector& v) {
    if (!v.nonnegative())
        throw std::domain_error("intervals_from_gaps: entries must be non-negative");
    std::vector<Rational> endpoints;
    endpoints.reserve(v.size() + 1);
    Rational pos = 0;
    endpoints.push_back(pos);
    for (int i = 1; i <= v.size(); ++i) {
        pos += v.entry(i);
        endpoints.push_back(pos);
    }
    return IntervalFamily(std::move(endpoints));
}

struct MembershipReport {
    bool in_cone = false;
    bool in_polytope = false;
    bool in_cone_interior = false;
    std::optional<Rational> min_ballot_dot;  // empty when there are no ballot vectors (n = 1)
    std::vector<BallotVector> violated;
};

/// Exact evaluation of every ballot dot product. The left dot of depth k is
/// the alternating prefix sum through entry 2k; the right dot of depth k is
/// the alternating suffix sum through the last 2k entries.
inline MembershipReport membership(const GapVector& v) {
    const int n = v.pairs();
    const int m = v.size();
    MembershipReport r;
    r.in_cone = true;
    r.in_cone_interior = true;

    Rational s = 0;
    for (int k = 1; k < n; ++k) {
        s += v.entry(2 * k - 1) - v.entry(2 * k);
        if (!r.min_ballot_dot || s < *r.min_ballot_dot) r.min_ballot_dot = s;
        if (s < 0) r.in_cone = false;
        if (s <= 0) r.in_cone_interior = false;
        if (s < 0) {
            BallotVector w{BallotVector::Kind::left, k, std::vector<int>(m, 0)};
            for (int i = 0; i < k; ++i) {
                w.entries[2 * i] = 1;
                w.entries[2 * i + 1] = -1;
            }
            r.violated.push_back(std::move(w));
        }
    }
    s = 0;
    for (int k = 1; k < n; ++k) {
        s += v.entry(m + 2 - 2 * k) - v.entry(m + 1 - 2 * k);
        if (!r.min_ballot_dot || s < *r.min_ballot_dot) r.min_ballot_dot = s;
        if (s < 0) r.in_cone = false;
        if (s <= 0) r.in_cone_interior = false;
        if (s < 0) {
            BallotVector w{BallotVector::Kind::right, k, std::vector<int>(m, 0)};
            for (int i = 0; i < k; ++i) {
                w.entries[m - 1 - 2 * i] = 1;
                w.entries[m - 2 - 2 * i] = -1;
            }
            r.violated.push_back(std::move(w));
        }
    }
    r.in_polytope = r.in_cone && v.in_unit_cube();
    return r;
}

/// Direct measure-theoretic test: with b the right end of the family, is
/// mu(A cap [0,t]) >= t/2 and mu(A cap [b-t,b]) >= t/2 for every t in [0,b]?
/// Both balance functions are piecewise linear with slopes +-1, so their
/// minima land on interval endpoints; only those finitely many t are checked,
/// exactly.
inline bool is_gerrymander_measure(const IntervalFamily& a) {
    const int n = a.count();
    Rational covered = 0;  // total interval length left of the current endpoint
    for (int j = 2; j <= n; ++j) {
        covered += a.right(j - 1) - a.left(j - 1);
        if (2 * covered < a.left(j)) return false;
    }
    const Rational b = a.right(n);
    covered = 0;
    for (int j = n - 1; j >= 1; --j) {
        covered += a.right(j + 1) - a.left(j + 1);
        if (2 * covered < b - a.right(j)) return false;
    }
    return true;
}

/// Left-rotation by k places (k is reduced mod the length).
inline GapVector rotate(const GapVector& v, int k) {
    const int m = v.size();
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) out.push_back(v[(i + k) % m]);
    return GapVector(std::move(out));
}

struct NecklaceCut {
    std::vector<int> cuts;       // all k with rotate(v, k) in the cone
    int canonical = 0;           // smallest such k
    bool unique = false;
    GapVector rotation;          // rotate(v, canonical)
    int argmin_cut = 0;          // the cut produced by the prefix-sum argmin construction
};

namespace detail {

// Rotation amount k such that rotate(v, k) lies in the cone, found without
// scanning rotations: build w_l = sum_{i=0..l} tau^i([1,-1,0,...,0]) where
// tau rotates right by two, take the l minimizing v . w_l, and cut at
// k = 2(l+1) mod m.
inline int argmin_construction_cut(const GapVector& v) {
    const int m = v.size();
    if (m == 1) return 0;
    std::vector<Rational> acc(static_cast<size_t>(m), Rational(0));
    // tau^i(w) has its +1 at index 2i and -1 at index 2i+1 (mod m).
    Rational best;
    int best_l = -1;
    for (int l = 0; l < m; ++l) {
        acc[(2 * l) % m] += 1;
        acc[(2 * l + 1) % m] += -1;
        Rational dot = 0;
        for (int i = 0; i < m; ++i)
            if (acc[i] != 0) dot += acc[i] * v[i];
        if (best_l < 0 || dot < best) {
            best = dot;
            best_l = l;
        }
    }
    return (2 * (best_l + 1)) % m;
}

}  // namespace detail

/// Every odd necklace of non-negative numbers can be cut somewhere so that
/// the laid-out vector is in the ballot cone; with strict inequalities the
/// cut is unique. Cuts are found by scanning all rotations and cross-checked
/// against the prefix-sum argmin construction.
inline NecklaceCut cut_necklace(const GapVector& v) {
    if (!v.nonnegative()) throw std::domain_error("cut_necklace: entries must be non-negative");
    const int m = v.size();
    std::vector<int> cuts;
    for (int k = 0; k < m; ++k)
        if (membership(rotate(v, k)).in_cone) cuts.push_back(k);
    if (cuts.empty()) throw std::logic_error("cut_necklace: no rotation lies in the cone");
    const int argmin_k = detail::argmin_construction_cut(v);
    if (std::find(cuts.begin(), cuts.end(), argmin_k) == cuts.end())
        throw std::logic_error("cut_necklace: argmin construction disagrees with rotation scan");
    NecklaceCut r{cuts, cuts.front(), cuts.size() == 1, rotate(v, cuts.front()), argmin_k};
    return r;
}

struct PartitionReport {
    std::vector<int> regions;  // all k with rotate(v, k) in the cone
    bool generic = false;      // exactly one region, entered strictly
};

/// Which rotated copies of the ballot polytope contain v? Always at least
/// one; at most one may be entered strictly.
inline PartitionReport classify_partition(const GapVector& v) {
    if (!v.in_unit_cube())
        throw std::domain_error("classify_partition: entries must lie in [0,1]");
    PartitionReport r;
    int strict = 0;
    for (int k = 0; k < v.size(); ++k) {
        auto rep = membership(rotate(v, k));
        if (rep.in_cone) r.regions.push_back(k);
        if (rep.in_cone_interior) ++strict;
    }
    r.generic = (r.regions.size() == 1 && strict == 1);
    return r;
}

// ---------------------------------------------------------------------------
// Monte-Carlo volume of the ballot polytope inside the unit cube.

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Counter-based uniform double in [0,1): a pure function of
// (seed, sample, coordinate), so sharding cannot change the stream.
inline double u01(std::uint64_t seed, std::uint64_t sample, std::uint64_t coord) {
    std::uint64_t h = mix64(seed ^ 0x243F6A8885A308D3ull);
    h = mix64(h ^ sample);
    h = mix64(h ^ coord);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline bool float_point_in_cone(const double* v, int m) {
    double s = 0;
    for (int t = 0; t < m - 1; t += 2) {
        s += v[t] - v[t + 1];
        if (s < 0) return false;
    }
    s = 0;
    for (int t = m - 1; t >= 1; t -= 2) {
        s += v[t] - v[t - 1];
        if (s < 0) return false;
    }
    return true;
}

}  // namespace detail

struct VolumeEstimate {
    double estimate = 0;
    double stderr_ = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Hit-or-miss estimate of Vol(P_n) from `samples` uniform points of
/// [0,1]^{2n-1}. Deterministic in (n, samples, seed) whatever the thread
/// count, because sample j is generated from its own counter.
inline VolumeEstimate mc_volume(int n, std::uint64_t samples, std::uint64_t seed,
                                int threads = 1) {
    if (n < 1) throw std::domain_error("mc_volume: n must be >= 1");
    if (samples < 1) throw std::domain_error("mc_volume: need at least one sample");
    const int m = 2 * n - 1;
    if (threads < 1) threads = 1;

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        std::vector<double> pt(static_cast<size_t>(m));
        for (std::uint64_t j = begin; j < end; ++j) {
            for (int c = 0; c < m; ++c) pt[static_cast<size_t>(c)] = detail::u01(seed, j, static_cast<std::uint64_t>(c));
            if (detail::float_point_in_cone(pt.data(), m)) ++hits;
        }
        return hits;
    };

    std::uint64_t hits = 0;
    if (threads == 1 || samples < 1024) {
        hits = count_range(0, samples);
    } else {
        std::vector<std::uint64_t> partial(static_cast<size_t>(threads), 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = samples / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
            std::uint64_t end = (t == threads - 1) ? samples : begin + chunk;
            pool.emplace_back([&, t, begin, end] { partial[static_cast<size_t>(t)] = count_range(begin, end); });
        }
        for (auto& th : pool) th.join();
        for (auto h : partial) hits += h;
    }

    VolumeEstimate est;
    est.hits = hits;
    est.samples = samples;
    est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

}  // namespace ballotope
