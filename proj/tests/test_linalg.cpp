#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "ballotope/linalg.hpp"
#include "ballotope/vertex.hpp"

using namespace ballotope;

namespace {

IntMatrix im(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        std::vector<BigInt> row;
        for (int x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

TEST_CASE("constraint_system layout") {
    ConstraintSystem c2 = constraint_system(2);
    REQUIRE(c2.rows.size() == 8);
    CHECK(c2.rhs == std::vector<int>{0, -1, 0, -1, 0, -1, 0, 0});
    CHECK(c2.rows[0] == std::vector<int>{1, 0, 0});
    CHECK(c2.rows[1] == std::vector<int>{-1, 0, 0});
    CHECK(c2.rows[2] == std::vector<int>{0, 1, 0});
    CHECK(c2.rows[5] == std::vector<int>{0, 0, -1});
    CHECK(c2.rows[6] == std::vector<int>{1, -1, 0});
    CHECK(c2.rows[7] == std::vector<int>{0, -1, 1});

    CHECK(constraint_system(3).rows.size() == 14);
    CHECK(constraint_system(1).rows.size() == 2);

    for (int n = 1; n <= 4; ++n)
        for (const auto& row : constraint_system(n).rows)
            for (int x : row) CHECK((x >= -1 && x <= 1));
}

TEST_CASE("satisfies") {
    ConstraintSystem c2 = constraint_system(2);
    CHECK(satisfies(c2, {1, 0, 1}));
    CHECK(satisfies(c2, {1, 1, 1}));
    CHECK_FALSE(satisfies(c2, {0, 1, 0}));
    CHECK_FALSE(satisfies(c2, {Rational(3, 2), 0, 1}));
    CHECK_THROWS_AS(satisfies(c2, {1, 0}), std::invalid_argument);
}

TEST_CASE("flat_elimination reproduces the worked 5x5 trace") {
    IntMatrix a0 = im({{0, 1, 0, 0, 0},
                       {0, 0, 0, 0, 1},
                       {1, -1, 0, 0, 0},
                       {0, -1, 1, -1, 1},
                       {0, 0, 0, -1, 1}});
    auto trace = flat_elimination(a0);
    CHECK(trace.all_flat);
    CHECK_FALSE(trace.singular);
    CHECK(trace.determinant == -1);

    REQUIRE(trace.steps.size() == 6);
    CHECK(trace.steps[0] == a0);
    CHECK(trace.steps[1] == a0);  // clearing column 1 touches nothing else
    CHECK(trace.steps[2] == im({{0, 1, 0, 0, 0},
                                {0, 0, 0, 0, 1},
                                {1, 0, 0, 0, 0},
                                {0, 0, 1, -1, 1},
                                {0, 0, 0, -1, 1}}));
    CHECK(trace.steps[3] == trace.steps[2]);
    CHECK(trace.steps[4] == im({{0, 1, 0, 0, 0},
                                {0, 0, 0, 0, 1},
                                {1, 0, 0, 0, 0},
                                {0, 0, 1, 0, 0},
                                {0, 0, 0, 1, -1}}));
    CHECK(trace.steps[5] == im({{0, 1, 0, 0, 0},
                                {0, 0, 0, 0, 1},
                                {1, 0, 0, 0, 0},
                                {0, 0, 1, 0, 0},
                                {0, 0, 0, 1, 0}}));
}

TEST_CASE("flat_elimination basics") {
    auto identity = flat_elimination(im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(identity.determinant == 1);
    CHECK(identity.all_flat);

    auto singular = flat_elimination(im({{1, -1}, {1, -1}}));
    CHECK(singular.singular);
    CHECK(singular.determinant == 0);

    // A flat matrix whose elimination leaves the flat world.
    auto hadamard = flat_elimination(im({{1, 1}, {1, -1}}));
    CHECK(hadamard.determinant == -2);
    CHECK_FALSE(hadamard.all_flat);
    CHECK_FALSE(hadamard.singular);

    CHECK_THROWS_AS(flat_elimination(im({{1, 2}})), std::invalid_argument);  // not square
}

TEST_CASE("det_bareiss basics") {
    CHECK(det_bareiss(im({{3}})) == 3);
    CHECK(det_bareiss(im({{0, 1}, {1, 0}})) == -1);
    CHECK(det_bareiss(im({{2, 0}, {0, 3}})) == 6);
    CHECK(det_bareiss(im({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("elimination determinant equals Bareiss on random matrices") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 400; ++trial) {
        const size_t n = 2 + rng() % 4;
        IntMatrix m(n, std::vector<BigInt>(n));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long>(rng() % 7) - 3;
        // flat_elimination cross-checks against det_bareiss internally and
        // throws on any disagreement.
        CHECK_NOTHROW(flat_elimination(m, /*record_steps=*/false));
    }
}

TEST_CASE("every invertible submatrix is unimodular with a flat trace") {
    auto r2 = verify_unimodularity(2);
    CHECK(r2.submatrices_tested == 56);
    CHECK(r2.invertible_count == 30);
    CHECK(r2.all_unimodular);
    CHECK(r2.all_flat);

    auto r3 = verify_unimodularity(3);
    CHECK(r3.submatrices_tested == 2002);
    CHECK(r3.invertible_count == 594);
    CHECK(r3.all_unimodular);
    CHECK(r3.all_flat);

    auto r3t = verify_unimodularity(3, 4);
    CHECK(r3t.submatrices_tested == r3.submatrices_tested);
    CHECK(r3t.invertible_count == r3.invertible_count);

    CHECK_THROWS_AS(verify_unimodularity(5), std::domain_error);
}

TEST_CASE("solve_linear_system") {
    auto x = solve_linear_system({{1, 1}, {1, -1}}, {3, 1});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve_linear_system({{1, 1}, {2, 2}}, {1, 1}).has_value());
}

TEST_CASE("basic feasible solutions equal the enumerated vertices") {
    auto b1 = basic_feasible_solutions(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == GapVector({0}));
    CHECK(b1[1] == GapVector({1}));

    for (int n = 1; n <= 3; ++n) {
        auto direct = enumerate_vertices(n).materialize();
        auto bfs = basic_feasible_solutions(n);
        REQUIRE(bfs.size() == direct.size());
        for (size_t i = 0; i < bfs.size(); ++i) {
            REQUIRE(bfs[i] == direct[i]);
            for (int j = 0; j < bfs[i].size(); ++j)
                REQUIRE((bfs[i][j] == 0 || bfs[i][j] == 1));
        }
    }

    CHECK_THROWS_AS(basic_feasible_solutions(4), std::domain_error);
}
