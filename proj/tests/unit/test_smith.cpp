#include "doctest.h"

#include "gcoh/smith.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace gcoh;

namespace {

void check_postconditions(const IntegerMatrix& a, const SNFResult& r) {
    CHECK(r.U * a * r.V == r.S);
    CHECK((r.U * r.Uinv).is_identity());
    CHECK((r.V * r.Vinv).is_identity());
    Integer du = determinant(r.U), dv = determinant(r.V);
    CHECK(abs(du) == 1);
    CHECK(abs(dv) == 1);
    for (int i = 0; i < r.S.rows(); ++i)
        for (int j = 0; j < r.S.cols(); ++j)
            if (i != j) CHECK(r.S(i, j) == 0);
    auto inv = r.invariants();
    for (std::size_t i = 0; i < inv.size(); ++i) {
        CHECK(inv[i] > 0);
        if (i + 1 < inv.size()) CHECK(inv[i + 1] % inv[i] == 0);
    }
    for (int i = r.rank; i < std::min(r.S.rows(), r.S.cols()); ++i) CHECK(r.S(i, i) == 0);
}

}  // namespace

TEST_SUITE("smith") {

TEST_CASE("zero matrix has identity transforms") {
    IntegerMatrix z(3, 2);
    auto r = snf(z);
    CHECK(r.rank == 0);
    CHECK(r.U.is_identity());
    CHECK(r.V.is_identity());
    CHECK(r.S.is_zero());
}

TEST_CASE("diag(2,3) normalizes to diag(1,6)") {
    auto a = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
    auto r = snf(a);
    check_postconditions(a, r);
    CHECK(r.S(0, 0) == 1);
    CHECK(r.S(1, 1) == 6);
}

TEST_CASE("1x1 zero") {
    auto r = snf(IntegerMatrix::from_rows({{0}}));
    CHECK(r.S(0, 0) == 0);
    CHECK(r.rank == 0);
}

TEST_CASE("randomized matrices satisfy the postconditions and match the oracle") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> entry(-9, 9), size(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        int m = size(rng), n = size(rng);
        IntegerMatrix a(m, n);
        oracle::Dense dense(m, std::vector<Integer>(n));
        bool sparse = trial % 3 == 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                int v = entry(rng);
                if (sparse && v % 3 != 0) v = 0;
                a(i, j) = v;
                dense[i][j] = v;
            }
        auto r = snf(a);
        check_postconditions(a, r);
        CHECK(r.invariants() == oracle::elementary_divisors(dense));
    }
}

TEST_CASE("determinant by elimination") {
    CHECK(determinant(IntegerMatrix::from_rows({{2, 1}, {7, 4}})) == 1);
    CHECK(determinant(IntegerMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(IntegerMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(IntegerMatrix::from_rows({{0, 2, 1}, {3, 0, 0}, {1, 1, 1}})) == -3);
}

}
