#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modcx/matrix.hpp"

using namespace modcx;

namespace {

Mat random_matrix(PrimeField f, int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Mat m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, rng() % f.modulus());
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f(101);
    CHECK(f.add(100, 5) == 4);
    CHECK(f.sub(3, 7) == 97);
    CHECK(f.mul(50, 50) == 2500 % 101);
    CHECK(f.mul(f.inv(37), 37) == 1);
    CHECK(f.from_int(-1) == 100);
    CHECK_THROWS_AS(PrimeField(100), input_error);
    CHECK_THROWS_AS(PrimeField(1 << 21), input_error);
}

TEST_CASE("rref identity and zero") {
    PrimeField f(101);
    Mat id = Mat::identity(f, 3);
    RrefResult rr = rref(id);
    CHECK(rr.m == id);
    CHECK(rr.pivots == std::vector<int>{0, 1, 2});

    Mat z(f, 2, 3);
    RrefResult rz = rref(z);
    CHECK(rz.m.is_zero());
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref hand example over GF(5)") {
    PrimeField f(5);
    Mat a(f, 2, 2);
    a.set(0, 0, 2); a.set(0, 1, 4);
    a.set(1, 0, 1); a.set(1, 1, 2);
    RrefResult rr = rref(a);
    CHECK(rr.pivots == std::vector<int>{0});
    CHECK(rr.m.at(0, 0) == 1);
    CHECK(rr.m.at(0, 1) == 2);
    CHECK(rr.m.at(1, 0) == 0);
    CHECK(rr.m.at(1, 1) == 0);
}

TEST_CASE("rank examples") {
    PrimeField f(7);
    CHECK(rank(Mat::identity(f, 4)) == 4);
    CHECK(rank(Mat(f, 3, 5)) == 0);
    Mat a(f, 3, 2);
    a.set(0, 0, 1); a.set(0, 1, 1);
    a.set(1, 0, 1); a.set(1, 1, 1);
    a.set(2, 0, 0); a.set(2, 1, 1);
    CHECK(rank(a) == 2);
}

TEST_CASE("kernel examples") {
    PrimeField f(3);
    CHECK(kernel_basis(Mat::identity(f, 4)).cols() == 0);
    CHECK(kernel_basis(Mat(f, 2, 5)).cols() == 5);

    Mat a(f, 1, 3);
    a.set(0, 0, 1); a.set(0, 1, 1); a.set(0, 2, 0);
    Mat k = kernel_basis(a);
    CHECK(k.cols() == 2);
    // contains (1,2,0) and (0,0,1)
    SpanBuilder span(f, 3);
    for (int c = 0; c < k.cols(); ++c) span.add(k.col(c));
    CHECK(span.contains(Vec{1, 2, 0}));
    CHECK(span.contains(Vec{0, 0, 1}));
}

TEST_CASE("solve examples") {
    PrimeField f(5);
    Mat id = Mat::identity(f, 3);
    Vec b{2, 0, 4};
    auto x = solve(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    Mat z(f, 2, 2);
    CHECK_FALSE(solve(z, Vec{1, 0}));

    Mat a(f, 2, 2);
    a.set(0, 0, 1); a.set(0, 1, 2);
    a.set(1, 0, 0); a.set(1, 1, 1);
    auto y = solve(a, Vec{0, 1});
    REQUIRE(y);
    CHECK(*y == Vec{3, 1});

    CHECK_THROWS_AS(solve(a, Vec{1, 2, 3}), input_error);
}

TEST_CASE("subspace intersection") {
    PrimeField f(5);
    // two distinct planes in GF(5)^3 meet in a line
    Mat u(f, 3, 2), v(f, 3, 2);
    u.set(0, 0, 1); u.set(1, 1, 1);                  // span{e0, e1}
    v.set(1, 0, 1); v.set(2, 1, 1);                  // span{e1, e2}
    Mat w = subspace_intersection(u, v);
    CHECK(w.cols() == 1);
    SpanBuilder span(f, 3);
    span.add(w.col(0));
    CHECK(span.contains(Vec{0, 1, 0}));

    // U = V returns U up to basis
    Mat same = subspace_intersection(u, u);
    CHECK(same.cols() == 2);
    // complementary lines meet in zero
    Mat l1(f, 2, 1), l2(f, 2, 1);
    l1.set(0, 0, 1);
    l2.set(1, 0, 1);
    CHECK(subspace_intersection(l1, l2).cols() == 0);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
    PrimeField f(101);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        int rows = 1 + static_cast<int>(seed % 7);
        int cols = 1 + static_cast<int>((3 * seed) % 9);
        Mat a = random_matrix(f, rows, cols, seed);
        int rk = rank(a);
        Mat k = kernel_basis(a);
        CHECK(rk + k.cols() == cols);
        for (int c = 0; c < k.cols(); ++c) {
            Vec img = a.apply(k.col(c));
            for (auto x : img) CHECK(x == 0);
        }
        RrefResult rr = rref(a);
        RrefResult rr2 = rref(rr.m);
        CHECK(rr.m == rr2.m);
        CHECK(rr.pivots == rr2.pivots);
        // solve returns an exact solution whenever b is in the column space
        Vec b = a.apply(Vec(cols, 1));
        auto x = solve(a, b);
        REQUIRE(x);
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("solve absent means rank increase") {
    PrimeField f(101);
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        Mat a = random_matrix(f, 4, 2, seed);
        Vec b = random_matrix(f, 4, 1, seed + 100).col(0);
        auto x = solve(a, b);
        Mat aug = a.hstack(Mat::from_cols(f, {b}, 4));
        if (x)
            CHECK(rank(aug) == rank(a));
        else
            CHECK(rank(aug) == rank(a) + 1);
    }
}

TEST_CASE("span builder") {
    PrimeField f(7);
    SpanBuilder s(f, 3);
    CHECK(s.add(Vec{1, 2, 3}));
    CHECK_FALSE(s.add(Vec{2, 4, 6}));
    CHECK(s.add(Vec{0, 1, 0}));
    CHECK(s.dim() == 2);
    CHECK(s.contains(Vec{1, 0, 3}));
    CHECK_FALSE(s.contains(Vec{0, 0, 1}));
    Mat basis = s.basis_cols();
    CHECK(basis.cols() == 2);
}
