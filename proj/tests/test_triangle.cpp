#include <gradim/triangle.hpp>

#include <doctest.h>

using namespace gradim;

TEST_CASE("binomial table") {
    const BinomialTable b(12);
    CHECK(b(0, 0) == 1);
    CHECK(b(4, 2) == 6);
    CHECK(b(12, 6) == 924);
    CHECK(b(5, 7) == 0);
    CHECK(b(5, -1) == 0);
}

TEST_CASE("triangle reproduces the known small values") {
    const AlphaTriangle t = AlphaTriangle::compute(6);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == 5);
    CHECK(t.at(2, 1) == 16);
    CHECK(t.at(2, 2) == 127);
    CHECK(t.at(3, 2) == 715);
    CHECK(t.at(3, 3) == 7723);
    CHECK(t.at(6, 0) == 1);
}

TEST_CASE("row sums match the direct sigma recursion") {
    const int n = 40;
    const AlphaTriangle t = AlphaTriangle::compute(n);
    const SigmaSequence s = compute_sigma(n);
    const auto sums = t.row_sums();
    REQUIRE(static_cast<int>(sums.size()) == n + 1);
    for (int i = 0; i <= n; ++i) CHECK(sums[static_cast<size_t>(i)] == s.at(i));
}

TEST_CASE("sigma small values") {
    const SigmaSequence s = compute_sigma(6);
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == 2);
    CHECK(s.at(2) == 7);
    CHECK(s.at(3) == 34);
    CHECK(s.at(4) == 213);
    CHECK(s.at(5) == 1630);
    CHECK(s.at(6) == 14747);
}

TEST_CASE("symmetry") {
    CHECK(check_symmetry(AlphaTriangle::compute(0)));
    CHECK(check_symmetry(AlphaTriangle::compute(6)));
    CHECK(check_symmetry(AlphaTriangle::compute(30)));
}

TEST_CASE("positivity") {
    const AlphaTriangle t = AlphaTriangle::compute(20);
    for (int n = 0; n <= 20; ++n)
        for (const auto& v : t.row(n)) CHECK(v > 0);
}

TEST_CASE("serial and openmp kernels agree exactly") {
    const int n = 24;
    const AlphaTriangle a = AlphaTriangle::compute(n, Exec::serial);
    const AlphaTriangle b = AlphaTriangle::compute(n, Exec::openmp);
    for (int i = 0; i <= n; ++i) CHECK(a.row(i) == b.row(i));
    const SigmaSequence sa = compute_sigma(150, Exec::serial);
    const SigmaSequence sb = compute_sigma(150, Exec::openmp);
    CHECK(sa.values == sb.values);
}

TEST_CASE("out-of-range access throws") {
    const AlphaTriangle t = AlphaTriangle::compute(4);
    CHECK_THROWS_AS(t.at(3, 2), std::out_of_range);
    CHECK_THROWS_AS(t.at(-1, 0), std::out_of_range);
}
