#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "z4/algebra.hpp"

#include <random>

using namespace z4;

TEST_CASE("lex order on vectors, 0 < 1 < 2 < 3") {
    CHECK(lex_compare({0, 3, 1}, {1, 0, 0}) == -1); // first entry decides
    CHECK(lex_compare({2, 1}, {2, 1}) == 0);
    CHECK(lex_compare({1, 0, 2}, {1, 0, 3}) == -1); // decided at the last entry
    CHECK(lex_compare({3}, {0}) == 1);
    CHECK(lex_compare(Vec{}, Vec{}) == 0);
    CHECK_THROWS_AS(lex_compare({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("lex order is a total order") {
    std::mt19937 rng(7);
    auto rand_vec = [&](int n) {
        Vec v(n);
        for (auto& x : v) x = rng() & 3;
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 1 + rng() % 5;
        const Vec a = rand_vec(n), b = rand_vec(n), c = rand_vec(n);
        // trichotomy + antisymmetry
        CHECK(lex_compare(a, b) == -lex_compare(b, a));
        if (lex_compare(a, b) == 0) CHECK(a == b);
        // transitivity
        if (lex_compare(a, b) <= 0 && lex_compare(b, c) <= 0)
            CHECK(lex_compare(a, c) <= 0);
    }
}

TEST_CASE("negation is an involution") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        Vec v(1 + rng() % 7);
        for (auto& x : v) x = rng() & 3;
        CHECK(negate(negate(v)) == v);
    }
    CHECK(negate({0, 1, 2, 3}) == Vec{0, 3, 2, 1});
}

TEST_CASE("matrix product basics") {
    const Mat i2 = identity(2);
    Mat m(2, 3);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = (r + 2 * c) & 3;
    CHECK(mat_mul(i2, m) == m);

    Mat two(1, 1);
    two.at(0, 0) = 2;
    CHECK(mat_mul(two, two).at(0, 0) == 0); // 4 = 0

    Mat row(1, 2), col(2, 1);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    col.at(0, 0) = 1;
    col.at(1, 0) = 3;
    CHECK(mat_mul(row, col).at(0, 0) == 0); // 1 + 3 = 0

    CHECK_THROWS_AS(mat_mul(m, m), std::invalid_argument);
}

TEST_CASE("matrix product associates and distributes") {
    std::mt19937 rng(13);
    auto rand_mat = [&](int r, int c) {
        Mat m(r, c);
        for (auto& x : m.a) x = rng() & 3;
        return m;
    };
    for (int iter = 0; iter < 100; ++iter) {
        const int a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3,
                  d = 1 + rng() % 3;
        const Mat m = rand_mat(a, b), n = rand_mat(b, c), p = rand_mat(c, d);
        CHECK(mat_mul(mat_mul(m, n), p) == mat_mul(m, mat_mul(n, p)));

        Mat n2 = rand_mat(b, c), sum(b, c);
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] = add(n.a[i], n2.a[i]);
        Mat lhs = mat_mul(m, sum);
        Mat r1 = mat_mul(m, n), r2 = mat_mul(m, n2), rhs(a, c);
        for (std::size_t i = 0; i < rhs.a.size(); ++i) rhs.a[i] = add(r1.a[i], r2.a[i]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("inner products") {
    CHECK(inner_product({1, 2, 3}, {1, 0, 1}) == 0);
    CHECK(inner_product({0, 0, 0}, {3, 2, 1}) == 0);
    CHECK(inner_product({2, 2}, {1, 1}) == 0);
    CHECK(inner_product({1, 1}, {1, 2}) == 3);
    CHECK_THROWS_AS(inner_product({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("transpose is an involution") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        Mat m(1 + rng() % 4, 1 + rng() % 4);
        for (auto& x : m.a) x = rng() & 3;
        CHECK(transpose(transpose(m)) == m);
    }
}

TEST_CASE("row and column sortedness") {
    CHECK(is_row_sorted(mat_from_rows({{0, 1}, {1, 0}})));
    CHECK_FALSE(is_row_sorted(mat_from_rows({{1, 0}, {0, 1}})));
    CHECK(is_row_sorted(mat_from_rows({{3, 2, 1}}))); // single row
    CHECK(is_col_sorted(mat_from_rows({{0, 1}, {2, 2}})));
    CHECK_FALSE(is_col_sorted(mat_from_rows({{1, 0}, {2, 2}})));
    CHECK(is_col_sorted(transpose(mat_from_rows({{0, 1}, {1, 0}}))));
}

TEST_CASE("packed words agree with vector arithmetic") {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + rng() % kMaxLen;
        Vec a(n), b(n);
        for (auto& x : a) x = rng() & 3;
        for (auto& x : b) x = rng() & 3;
        const Word wa = pack(a), wb = pack(b);
        CHECK(unpack(wa, n) == a);
        CHECK(unpack(word_add(wa, wb), n) == vec_add(a, b));
        CHECK(unpack(word_neg(wa), n) == negate(a));
        for (Scalar s = 0; s < 4; ++s)
            CHECK(unpack(word_scale(s, wa), n) == scalar_mul(s, a));
        // packed comparison is the lex order
        const int cmp = lex_compare(a, b);
        CHECK((wa < wb ? -1 : wa == wb ? 0 : 1) == cmp);
    }
}
