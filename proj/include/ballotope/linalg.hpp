#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ballotope/geometry.hpp"
#include "ballotope/rational.hpp"

namespace ballotope {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// H-representation of P_n: for each coordinate the rows +e_i (rhs 0) and
/// -e_i (rhs -1), then the left ballot rows by depth, then the right ballot
/// rows by depth (rhs 0). A point is in P_n iff rows . x >= rhs holds.
struct ConstraintSystem {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
};

inline ConstraintSystem constraint_system(int n) {
    if (n < 1) throw std::domain_error("constraint_system: n must be >= 1");
    ConstraintSystem cs;
    cs.n = n;
    cs.m = 2 * n - 1;
    for (int i = 0; i < cs.m; ++i) {
        std::vector<int> up(cs.m, 0), down(cs.m, 0);
        up[i] = 1;
        down[i] = -1;
        cs.rows.push_back(std::move(up));
        cs.rhs.push_back(0);
        cs.rows.push_back(std::move(down));
        cs.rhs.push_back(-1);
    }
    for (const auto& w : ballot_vectors(n)) {
        cs.rows.push_back(w.entries);
        cs.rhs.push_back(0);
    }
    return cs;
}

inline bool satisfies(const ConstraintSystem& cs, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != cs.m)
        throw std::invalid_argument("satisfies: dimension mismatch");
    for (size_t r = 0; r < cs.rows.size(); ++r) {
        Rational dot = 0;
        for (int j = 0; j < cs.m; ++j)
            if (cs.rows[r][j] != 0) dot += cs.rows[r][j] * x[static_cast<size_t>(j)];
        if (dot < cs.rhs[r]) return false;
    }
    return true;
}

namespace detail {

inline bool matrix_is_flat(const IntMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x > 1 || x < -1) return false;
    return true;
}

inline int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
/// Serves as the independent cross-check for the elimination-based route.
inline BigInt det_bareiss(IntMatrix a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det_bareiss: matrix must be square");
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Record of a Gauss-Jordan elimination done by hand rules: rows are only
/// negated, added or subtracted, never scaled. steps[k] is the matrix after
/// clearing column k (steps[0] is the input). A pivot is the first unused row
/// holding +-1 in the target column; every other row with a non-zero entry
/// there is cleared in place, so the row order never changes.
struct EliminationTrace {
    std::vector<IntMatrix> steps;
    bool all_flat = true;
    BigInt determinant;
    bool singular = false;
};

inline EliminationTrace flat_elimination(const IntMatrix& input, bool record_steps = true) {
    const size_t n = input.size();
    for (const auto& row : input)
        if (row.size() != n) throw std::invalid_argument("flat_elimination: matrix must be square");
    if (n == 0) throw std::invalid_argument("flat_elimination: empty matrix");

    EliminationTrace trace;
    IntMatrix w = input;
    if (record_steps) trace.steps.push_back(w);
    trace.all_flat = detail::matrix_is_flat(w);

    std::vector<int> pivot_row_of_col(n, -1);
    std::vector<bool> used(n, false);
    int negations = 0;

    for (size_t col = 0; col < n && !trace.singular; ++col) {
        size_t pivot = n;
        for (size_t r = 0; r < n; ++r)
            if (!used[r] && (w[r][col] == 1 || w[r][col] == -1)) {
                pivot = r;
                break;
            }
        if (pivot == n) {
            // No unit pivot. Reduce the column among unused rows by repeated
            // subtraction until a single non-zero entry (the gcd) remains.
            auto nonzero_rows = [&]() {
                std::vector<size_t> rows;
                for (size_t r = 0; r < n; ++r)
                    if (!used[r] && w[r][col] != 0) rows.push_back(r);
                return rows;
            };
            auto rows = nonzero_rows();
            if (rows.empty()) {
                trace.singular = true;
                break;
            }
            while (rows.size() > 1) {
                size_t a = rows[0];
                for (size_t r : rows)
                    if (abs(w[r][col]) < abs(w[a][col])) a = r;
                for (size_t r : rows) {
                    if (r == a) continue;
                    BigInt q = w[r][col] / w[a][col];
                    if (q != 0)
                        for (size_t j = 0; j < n; ++j) w[r][j] -= q * w[a][j];
                }
                rows = nonzero_rows();
            }
            pivot = rows[0];
        }
        if (w[pivot][col] < 0) {
            for (size_t j = 0; j < n; ++j) w[pivot][j] = -w[pivot][j];
            ++negations;
        }
        const BigInt p = w[pivot][col];
        for (size_t r = 0; r < n; ++r) {
            if (r == pivot || w[r][col] == 0) continue;
            if (w[r][col] % p != 0) continue;  // only reachable when p > 1 (already non-flat)
            BigInt q = w[r][col] / p;
            for (size_t j = 0; j < n; ++j) w[r][j] -= q * w[pivot][j];
        }
        used[pivot] = true;
        pivot_row_of_col[col] = static_cast<int>(pivot);
        if (record_steps) trace.steps.push_back(w);
        trace.all_flat = trace.all_flat && detail::matrix_is_flat(w);
    }

    if (trace.singular) {
        trace.determinant = 0;
    } else {
        BigInt prod = 1;
        for (size_t col = 0; col < n; ++col)
            prod *= w[static_cast<size_t>(pivot_row_of_col[col])][col];
        trace.determinant = detail::permutation_sign(pivot_row_of_col) * prod;
        if (negations % 2 != 0) trace.determinant = -trace.determinant;
    }

    // Independent fraction-free route must agree, always.
    if (det_bareiss(input) != trace.determinant)
        throw std::logic_error("flat_elimination: determinant disagrees with Bareiss cross-check");
    return trace;
}

namespace detail {

template <typename Fn>
void for_each_combination(int total, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == total - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

inline IntMatrix submatrix(const ConstraintSystem& cs, const std::vector<int>& rows) {
    IntMatrix a;
    a.reserve(rows.size());
    for (int r : rows) {
        std::vector<BigInt> row;
        row.reserve(static_cast<size_t>(cs.m));
        for (int x : cs.rows[static_cast<size_t>(r)]) row.emplace_back(x);
        a.push_back(std::move(row));
    }
    return a;
}

}  // namespace detail

struct UnimodularityReport {
    std::uint64_t submatrices_tested = 0;
    std::uint64_t invertible_count = 0;
    bool all_unimodular = true;
    bool all_flat = true;  // over the invertible submatrices
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Exhaustively runs flat_elimination over every m-row submatrix of the
/// constraint system. Every invertible one must come out with |det| = 1 and
/// a flat trace; the report says whether that held.
inline UnimodularityReport verify_unimodularity(int n, int threads = 1,
                                                const ProgressFn& progress = nullptr) {
    if (n < 1 || n > 4)
        throw std::domain_error("verify_unimodularity: n=" + std::to_string(n) +
                                " outside the exhaustive range 1..4");
    const ConstraintSystem cs = constraint_system(n);
    const int total_rows = static_cast<int>(cs.rows.size());

    std::vector<std::vector<int>> combos;
    detail::for_each_combination(total_rows, cs.m,
                                 [&](const std::vector<int>& idx) { combos.push_back(idx); });
    const std::uint64_t total = combos.size();

    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, 16);
    std::atomic<std::uint64_t> done{0};
    std::vector<UnimodularityReport> partial(static_cast<size_t>(threads));

    auto worker = [&](int t) {
        UnimodularityReport& rep = partial[static_cast<size_t>(t)];
        for (size_t i = static_cast<size_t>(t); i < combos.size(); i += static_cast<size_t>(threads)) {
            auto trace = flat_elimination(detail::submatrix(cs, combos[i]), /*record_steps=*/false);
            ++rep.submatrices_tested;
            if (!trace.singular) {
                ++rep.invertible_count;
                if (trace.determinant != 1 && trace.determinant != -1) rep.all_unimodular = false;
                if (!trace.all_flat) rep.all_flat = false;
            }
            std::uint64_t d = ++done;
            if (progress && d % 4096 == 0 && t == 0) progress(d, total);
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    UnimodularityReport rep;
    for (const auto& p : partial) {
        rep.submatrices_tested += p.submatrices_tested;
        rep.invertible_count += p.invertible_count;
        rep.all_unimodular = rep.all_unimodular && p.all_unimodular;
        rep.all_flat = rep.all_flat && p.all_flat;
    }
    if (progress) progress(total, total);
    return rep;
}

/// Exact solve of rows . x = rhs over the rationals; empty when singular.
inline std::optional<std::vector<Rational>> solve_linear_system(
    const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs) {
    const size_t n = rows.size();
    if (rhs.size() != n) throw std::invalid_argument("solve_linear_system: shape mismatch");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("solve_linear_system: matrix must be square");
        for (size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
        a[i][n] = rhs[i];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational q = a[r][col] / a[col][col];
            for (size_t j = col; j <= n; ++j) a[r][j] -= q * a[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

/// All basic feasible solutions of the constraint system: for every
/// invertible m-row subset, solve the active system exactly and keep the
/// solutions satisfying every constraint. Deduplicated, lexicographic.
inline std::vector<GapVector> basic_feasible_solutions(int n) {
    if (n < 1 || n > 3)
        throw std::domain_error("basic_feasible_solutions: n=" + std::to_string(n) +
                                " outside the exhaustive range 1..3");
    const ConstraintSystem cs = constraint_system(n);
    std::set<std::vector<Rational>> found;
    detail::for_each_combination(static_cast<int>(cs.rows.size()), cs.m,
                                 [&](const std::vector<int>& idx) {
                                     std::vector<std::vector<int>> rows;
                                     std::vector<int> rhs;
                                     for (int r : idx) {
                                         rows.push_back(cs.rows[static_cast<size_t>(r)]);
                                         rhs.push_back(cs.rhs[static_cast<size_t>(r)]);
                                     }
                                     auto x = solve_linear_system(rows, rhs);
                                     if (x && satisfies(cs, *x)) found.insert(*x);
                                 });
    std::vector<GapVector> out;
    out.reserve(found.size());
    for (const auto& x : found) out.push_back(GapVector(x));
    return out;
}

}  // namespace ballotope
