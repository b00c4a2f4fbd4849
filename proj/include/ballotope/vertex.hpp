#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballotope/geometry.hpp"
#include "ballotope/rational.hpp"
#include "ballotope/sequence.hpp"

namespace ballotope {

constexpr int kDefaultVertexCap = 10;  // 2^19 cube-vertex candidates

/// Slopes lambda_1..lambda_m together with the nodes of the piecewise linear
/// function they integrate to: values[0] = 0, values[t] - values[t-1] =
/// slopes[t-1].
struct SlopePath {
    std::vector<Rational> slopes;
    std::vector<Rational> values;
};

/// [1, 0, v_1, ..., v_m, 0, 1]: buffers both ends of the vector so the
/// resulting path starts with two rises and ends with two rises.
inline GapVector pad_alpha(const GapVector& v) {
    std::vector<Rational> out;
    out.reserve(v.size() + 4);
    out.push_back(1);
    out.push_back(0);
    for (const auto& x : v.entries()) out.push_back(x);
    out.push_back(0);
    out.push_back(1);
    return GapVector(std::move(out));
}

/// lambda_i = (-1)^{i-1} (2 v_i - 1), plus its prefix sums.
inline SlopePath slope_vector(const GapVector& v) {
    SlopePath p;
    p.slopes.reserve(v.size());
    p.values.reserve(v.size() + 1);
    p.values.push_back(0);
    for (int i = 1; i <= v.size(); ++i) {
        Rational s = 2 * v.entry(i) - 1;
        if (i % 2 == 0) s = -s;
        p.values.push_back(p.values.back() + s);
        p.slopes.push_back(std::move(s));
    }
    return p;
}

/// The 0/1 vertices of the ballot polytope P_n, in lexicographic order, with
/// an interiority flag for each (all ballot dots strictly positive). Stored
/// as bit masks; vertex(i) materializes the gap vector.
class VertexSet {
  public:
    VertexSet(int n, std::vector<std::uint32_t> masks, std::vector<std::uint8_t> interior)
        : n_(n), masks_(std::move(masks)), interior_(std::move(interior)) {}

    int n() const { return n_; }
    int dimension() const { return 2 * n_ - 1; }
    size_t size() const { return masks_.size(); }

    bool is_interior(size_t i) const { return interior_[i] != 0; }

    size_t interior_count() const {
        size_t c = 0;
        for (auto f : interior_) c += f;
        return c;
    }

    GapVector vertex(size_t i) const {
        const int m = dimension();
        std::vector<Rational> entries;
        entries.reserve(m);
        for (int j = 0; j < m; ++j)
            entries.emplace_back((masks_[i] >> (m - 1 - j)) & 1);  // MSB first = coordinate 1
        return GapVector(std::move(entries));
    }

    std::vector<GapVector> materialize() const {
        std::vector<GapVector> out;
        out.reserve(size());
        for (size_t i = 0; i < size(); ++i) out.push_back(vertex(i));
        return out;
    }

  private:
    int n_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::uint8_t> interior_;
};

namespace detail {

// Ballot dots of a 0/1 vector given as an MSB-first mask; returns
// {in_cone, strictly_interior}.
inline std::pair<bool, bool> mask_cone_status(std::uint32_t mask, int m) {
    auto coord = [&](int i) { return static_cast<int>((mask >> (m - 1 - i)) & 1); };  // 0-based
    bool interior = true;
    int s = 0;
    for (int t = 0; t < m - 1; t += 2) {
        s += coord(t) - coord(t + 1);
        if (s < 0) return {false, false};
        if (s == 0) interior = false;
    }
    s = 0;
    for (int t = m - 1; t >= 1; t -= 2) {
        s += coord(t) - coord(t - 1);
        if (s < 0) return {false, false};
        if (s == 0) interior = false;
    }
    return {true, interior};
}

}  // namespace detail

/// Scan all 2^{2n-1} cube vertices and keep those inside P_n (every vertex
/// of P_n is a cube vertex, so this is exhaustive).
inline VertexSet enumerate_vertices(int n, int cap = kDefaultVertexCap) {
    if (n < 1) throw std::domain_error("enumerate_vertices: n must be >= 1");
    if (n > cap || n > 15)
        throw std::domain_error("enumerate_vertices: n=" + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(std::min(cap, 15)));
    const int m = 2 * n - 1;
    std::vector<std::uint32_t> masks;
    std::vector<std::uint8_t> interior;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        auto [in_cone, strict] = detail::mask_cone_status(mask, m);
        if (in_cone) {
            masks.push_back(mask);
            interior.push_back(strict ? 1 : 0);
        }
    }
    return VertexSet(n, std::move(masks), std::move(interior));
}

namespace detail {

inline void require_binary_vertex(const GapVector& v, const char* op) {
    for (const auto& x : v.entries())
        if (x != 0 && x != 1)
            throw std::invalid_argument(std::string(op) + ": not a cube vertex (entry " +
                                        rational_str(x) + ")");
}

}  // namespace detail

/// Vertex of P_n -> ballot sequence of length 2n+3: the signs of the slopes
/// of the buffered vector, '1' for rise and '0' for fall.
inline BitSequence vertex_to_bbs(const GapVector& v) {
    detail::require_binary_vertex(v, "vertex_to_bbs");
    auto rep = membership(v);
    if (!rep.in_cone) {
        std::string msg = "vertex_to_bbs: membership failed, min ballot dot ";
        msg += rep.min_ballot_dot ? rational_str(*rep.min_ballot_dot) : std::string("n/a");
        throw std::invalid_argument(msg);
    }
    SlopePath path = slope_vector(pad_alpha(v));
    std::vector<std::uint8_t> bits;
    bits.reserve(path.slopes.size());
    for (const auto& s : path.slopes) bits.push_back(s > 0 ? 1 : 0);
    BitSequence b = BitSequence::from_bits(std::move(bits));
    if (!is_bbs(b))
        throw std::logic_error("vertex_to_bbs: image is not a bidirectional ballot sequence");
    return b;
}

/// Inverse map: w_j = 1 iff j and b_{j+2} have the same parity, j = 1..2n-1,
/// for a ballot sequence of odd length 2n+3.
inline GapVector bbs_to_vertex(const BitSequence& b) {
    if (b.size() % 2 == 0 || b.size() < 5)
        throw std::invalid_argument("bbs_to_vertex: length must be odd and >= 5, got " +
                                    std::to_string(b.size()));
    if (!is_bbs(b))
        throw std::invalid_argument("bbs_to_vertex: input is not a bidirectional ballot sequence");
    const int m = b.size() - 4;  // 2n-1
    std::vector<Rational> w;
    w.reserve(m);
    for (int j = 1; j <= m; ++j) w.emplace_back((j - b.bit(j + 2)) % 2 == 0 ? 1 : 0);
    return GapVector(std::move(w));
}

/// Cone-interior vertex of P_n (n >= 2) -> ballot sequence of length 2n-1:
/// the slope signs of the vector itself, no buffering needed.
inline BitSequence interior_vertex_to_bbs(const GapVector& v) {
    detail::require_binary_vertex(v, "interior_vertex_to_bbs");
    if (v.pairs() < 2)
        throw std::domain_error("interior_vertex_to_bbs: defined for n >= 2 only");
    if (!membership(v).in_cone_interior)
        throw std::invalid_argument(
            "interior_vertex_to_bbs: vertex is not interior (some ballot dot is <= 0)");
    SlopePath path = slope_vector(v);
    std::vector<std::uint8_t> bits;
    bits.reserve(path.slopes.size());
    for (const auto& s : path.slopes) bits.push_back(s > 0 ? 1 : 0);
    BitSequence b = BitSequence::from_bits(std::move(bits));
    if (!is_bbs(b))
        throw std::logic_error("interior_vertex_to_bbs: image is not a bidirectional ballot sequence");
    return b;
}

struct BoundRow {
    int ell = 0;
    BigCount count;
    std::optional<Rational> lower;  // 2^l / (16(l-4)); skipped for l in {1,3}
    Rational upper;                 // 2^l / l
    bool pass = false;
};

/// Exact comparison of B_l against 2^l/(16(l-4)) <= B_l <= 2^l/l over the
/// odd l in [l_min, l_max].
inline std::vector<BoundRow> verify_bounds(int l_min, int l_max) {
    if (l_min < 1 || l_max < l_min) throw std::domain_error("verify_bounds: need 1 <= l_min <= l_max");
    auto counts = count_bbs_table(l_max);
    std::vector<BoundRow> rows;
    for (int ell = l_min % 2 == 1 ? l_min : l_min + 1; ell <= l_max; ell += 2) {
        BoundRow row;
        row.ell = ell;
        row.count = counts[static_cast<size_t>(ell)];
        BigInt pow2 = BigInt(1) << ell;
        row.upper = Rational(pow2, ell);
        bool ok = Rational(row.count) <= row.upper;
        if (ell >= 5) {
            row.lower = Rational(pow2, 16 * (ell - 4));
            ok = ok && Rational(row.count) >= *row.lower;
        }
        row.pass = ok;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ballotope
