#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ballotope/rational.hpp"

namespace ballotope {

using BigCount = BigInt;  // arbitrary-precision non-negative count

constexpr int kDefaultBruteCap = 22;  // 2^22 words is still a sub-second scan

/// A finite 0/1 word. Indexing is 1-based (bit(1) is the first digit) to
/// mirror the usual b_1...b_n notation for ballot sequences.
class BitSequence {
  public:
    explicit BitSequence(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty bit sequence");
        bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("bit sequence may contain only '0' and '1', got '" +
                                            std::string(1, c) + "'");
            bits_.push_back(c == '1' ? 1 : 0);
        }
    }

    static BitSequence from_bits(std::vector<std::uint8_t> bits) {
        BitSequence b;
        if (bits.empty()) throw std::invalid_argument("empty bit sequence");
        for (auto v : bits)
            if (v > 1) throw std::invalid_argument("bit values must be 0 or 1");
        b.bits_ = std::move(bits);
        return b;
    }

    int size() const { return static_cast<int>(bits_.size()); }
    int bit(int j) const { return bits_[static_cast<size_t>(j) - 1]; }  // 1-based
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

    bool operator==(const BitSequence&) const = default;

  private:
    BitSequence() = default;
    std::vector<std::uint8_t> bits_;
};

/// Lattice path of the word: heights[t] = (#ones - #zeros) among the first
/// t digits, so heights[0] = 0 and steps are +-1.
struct HeightPath {
    std::vector<int> heights;
};

inline HeightPath bbs_to_path(const BitSequence& b) {
    HeightPath p;
    p.heights.reserve(b.size() + 1);
    p.heights.push_back(0);
    for (int j = 1; j <= b.size(); ++j) p.heights.push_back(p.heights.back() + (b.bit(j) ? 1 : -1));
    return p;
}

/// True iff every prefix and every suffix contains strictly more ones than
/// zeros. Equivalently the height path has its unique minimum at index 0
/// and its unique maximum at the last index.
inline bool is_bbs(const BitSequence& b) {
    int c = 0;
    for (int j = 1; j <= b.size(); ++j) {
        c += b.bit(j) ? 1 : -1;
        if (c <= 0) return false;
    }
    c = 0;
    for (int j = b.size(); j >= 1; --j) {
        c += b.bit(j) ? 1 : -1;
        if (c <= 0) return false;
    }
    return true;
}

namespace detail {

// Word from a mask, MSB first, so increasing mask = lexicographic order.
inline bool mask_is_bbs(std::uint32_t mask, int n) {
    int c = 0;
    for (int j = n - 1; j >= 0; --j) {
        c += (mask >> j) & 1 ? 1 : -1;
        if (c <= 0) return false;
    }
    c = 0;
    for (int j = 0; j < n; ++j) {
        c += (mask >> j) & 1 ? 1 : -1;
        if (c <= 0) return false;
    }
    return true;
}

inline void require_brute_cap(int n, int cap, const char* op) {
    if (n < 1) throw std::domain_error(std::string(op) + ": n must be >= 1");
    if (n > cap || n > 30)
        throw std::domain_error(std::string(op) + ": n=" + std::to_string(n) +
                                " exceeds the brute-force cap " + std::to_string(std::min(cap, 30)));
}

}  // namespace detail

/// All bidirectional ballot sequences of length n in lexicographic order.
/// Brute force over all 2^n words; refuses n beyond the cap.
inline std::vector<BitSequence> enumerate_bbs(int n, int cap = kDefaultBruteCap) {
    detail::require_brute_cap(n, cap, "enumerate_bbs");
    std::vector<BitSequence> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (!detail::mask_is_bbs(mask, n)) continue;
        std::vector<std::uint8_t> bits(n);
        for (int j = 0; j < n; ++j) bits[j] = (mask >> (n - 1 - j)) & 1;
        out.push_back(BitSequence::from_bits(std::move(bits)));
    }
    return out;
}

inline BigCount count_bbs_brute(int n, int cap = kDefaultBruteCap) {
    detail::require_brute_cap(n, cap, "count_bbs_brute");
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (detail::mask_is_bbs(mask, n)) ++count;
    return BigCount(count);
}

/// Exact counts B_1..B_max_n in one pass (index 0 unused).
///
/// A word of length n qualifies iff its path goes 0 -> h with every interior
/// height strictly between 0 and h. Splitting on the final height h, the
/// first and last steps are forced, leaving paths of n-2 steps from height 1
/// to h-1 confined to [1, h-1]. Those are counted by a banded DP per h; each
/// DP front at t steps contributes to B_{t+2} whenever t and h share parity.
inline std::vector<BigCount> count_bbs_table(int max_n) {
    if (max_n < 1) throw std::domain_error("count_bbs_table: n must be >= 1");
    std::vector<BigCount> counts(static_cast<size_t>(max_n) + 1, BigInt(0));
    counts[1] = 1;  // "1" ends at height 1 with no interior
    for (int h = 2; h <= max_n; ++h) {
        const int width = h - 1;
        std::vector<BigInt> front(static_cast<size_t>(width) + 2, BigInt(0));
        std::vector<BigInt> next(front.size(), BigInt(0));
        front[1] = 1;
        if (h == 2) counts[2] += front[width];
        for (int t = 1; t <= max_n - 2; ++t) {
            for (int y = 1; y <= width; ++y) next[y] = front[y - 1] + front[y + 1];
            front.swap(next);
            const int n = t + 2;
            if (n <= max_n && (n - h) % 2 == 0) counts[n] += front[width];
        }
    }
    return counts;
}

/// Exact B_n via the banded DP; valid for any n >= 1 (big-integer result).
inline BigCount count_bbs(int n) {
    return count_bbs_table(n)[static_cast<size_t>(n)];
}

struct SumsetReport {
    bool sumset_full = false;
    bool diffset_full = false;
    std::vector<int> sumset;
    std::vector<int> diffset;
};

/// For A = {positions of ones}: is A+A all of {2..2n} and A-A all of
/// {-(n-1)..n-1}?
inline SumsetReport sumset_fullness(const BitSequence& b) {
    const int n = b.size();
    std::vector<int> a;
    for (int j = 1; j <= n; ++j)
        if (b.bit(j)) a.push_back(j);
    std::set<int> sums, diffs;
    for (int x : a)
        for (int y : a) {
            sums.insert(x + y);
            diffs.insert(x - y);
        }
    SumsetReport r;
    r.sumset.assign(sums.begin(), sums.end());
    r.diffset.assign(diffs.begin(), diffs.end());
    r.sumset_full = static_cast<int>(sums.size()) == 2 * n - 1 && !a.empty() &&
                    *sums.begin() == 2 && *sums.rbegin() == 2 * n;
    r.diffset_full = static_cast<int>(diffs.size()) == 2 * n - 1 && !a.empty() &&
                     *diffs.begin() == -(n - 1) && *diffs.rbegin() == n - 1;
    return r;
}

/// n * B_n / 2^n as an exact rational.
inline Rational bbs_ratio(int n) {
    if (n < 1) throw std::domain_error("bbs_ratio: n must be >= 1");
    BigInt pow2 = BigInt(1) << n;
    return Rational(BigInt(n) * count_bbs(n), pow2);
}

}  // namespace ballotope
