#include <random>

#include "doctest.h"
#include "m3p/partitions.hpp"
#include "m3p/qseries.hpp"

using namespace m3p;

namespace {

QSeries from_coeffs(std::initializer_list<long> cs, int trunc) {
    QSeries s(trunc);
    long d = 0;
    for (long c : cs) {
        if (c != 0) s.set_coeff(d, c);
        ++d;
    }
    return s;
}

// partition counting by dynamic programming, independent of the series code
std::vector<Int> partition_counts(int order) {
    std::vector<Int> dp(order, 0);
    dp[0] = 1;
    for (int part = 1; part < order; ++part)
        for (int w = part; w < order; ++w) dp[w] += dp[w - part];
    return dp;
}

QSeries random_series(std::mt19937& rng, int trunc) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    QSeries s(trunc);
    for (int d = 0; d < trunc; ++d) {
        int c = coeff(rng);
        if (c != 0) s.set_coeff(d, c);
    }
    return s;
}

}  // namespace

TEST_CASE("addition") {
    QSeries one_q = from_coeffs({1, 1}, 8);
    QSeries q = from_coeffs({0, 1}, 8);
    CHECK(one_q + q == from_coeffs({1, 2}, 8));

    QSeries x = from_coeffs({3, 0, -2, 5}, 9);
    CHECK(x + QSeries(9) == x);

    QSeries a = from_coeffs({1, 0, 1}, 3);
    QSeries b = QSeries::monomial(3, 1, 4);
    CHECK(a + b == from_coeffs({1, 0, 1}, 3));  // truncation is the min
}

TEST_CASE("multiplication") {
    QSeries one_q = from_coeffs({1, 1}, 8);
    CHECK(one_q * one_q == from_coeffs({1, 2, 1}, 8));

    QSeries num(7);
    num.set_coeff(2, 1);
    num.set_coeff(3, 1);
    num.set_coeff(5, -1);
    QSeries prod = num * pochhammer_inverse(3, 7);
    CHECK(prod == from_coeffs({0, 0, 1, 2, 3, 4, 6}, 7));

    CHECK((one_q * QSeries(8)).is_zero());
}

TEST_CASE("gauss binomial") {
    CHECK(gauss_binomial(0, 5) == QSeries::one());
    CHECK(gauss_binomial(1, 1) == from_coeffs({1, 1}, QSeries::kExact));
    CHECK(gauss_binomial(2, 2) == from_coeffs({1, 1, 2, 1, 1}, QSeries::kExact));
    CHECK(gauss_binomial(-1, 0) == QSeries::one());  // empty box partition
    CHECK(gauss_binomial(-3, 4).is_zero());
    CHECK(gauss_binomial(-1, 1).is_zero());
    CHECK_THROWS_AS(gauss_binomial(2, -1), std::domain_error);
}

TEST_CASE("gauss binomial properties") {
    for (long M = 0; M <= 12; ++M)
        for (long m = 0; m <= 12; ++m) {
            QSeries g = gauss_binomial(M, m);
            CHECK(g.degree() == M * m);
            for (long d = 0; d <= M * m; ++d) CHECK(g.coeff(d) == g.coeff(M * m - d));
            if (M >= 1 && m >= 1)
                CHECK(g == gauss_binomial(M, m - 1) + gauss_binomial(M - 1, m).shifted(m));
        }
}

TEST_CASE("gauss binomial counts box partitions") {
    for (int M = 0; M <= 8; ++M)
        for (int m = 0; m <= 8; ++m) {
            QSeries expect(QSeries::kExact);
            for (const auto& mu : bounded_partitions(M, m)) {
                long w = 0;
                for (int v : mu) w += v;
                expect.add_coeff(w, 1);
            }
            CHECK(gauss_binomial(M, m) == expect);
        }
}

TEST_CASE("pochhammer inverse") {
    CHECK(pochhammer_inverse(1, 4) == from_coeffs({1, 1, 1, 1}, 4));
    CHECK(pochhammer_inverse(0, 5) == QSeries::one(5));
    QSeries inf = pochhammer_inverse(kInfinity, 6);
    std::vector<Int> expect = partition_counts(6);
    for (int d = 0; d < 6; ++d) CHECK(inf.coeff(d) == expect[d]);

    for (int m = 0; m <= 10; ++m)
        CHECK(pochhammer_inverse(m, 20) * pochhammer(m, 20) == QSeries::one(20));
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(20240811);
    for (int round = 0; round < 50; ++round) {
        QSeries a = random_series(rng, 10);
        QSeries b = random_series(rng, 10);
        QSeries c = random_series(rng, 10);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == QSeries(10));
    }
}

TEST_CASE("truncation propagates as min") {
    std::mt19937 rng(7);
    QSeries a = random_series(rng, 6);
    QSeries b = random_series(rng, 9);
    CHECK((a * b).trunc() == 6);
    CHECK((a + b).trunc() == 6);
    QSeries exact = gauss_binomial(3, 3);
    CHECK((exact * b).trunc() == 9);
}

TEST_CASE("qz regrade") {
    QZSeries z(8);
    z.add_term(0, 1, 1);
    QZSeries r = regrade_z_to_qz(z);
    CHECK(r.coeff(1, 1) == 1);
    CHECK(r.coeff(0, 1) == 0);

    QZSeries one(8);
    one.add_term(0, 0, 1);
    CHECK(regrade_z_to_qz(one) == one);

    QZSeries t(8);
    t.add_term(2, 3, 5);
    CHECK(regrade_z_to_qz(t).coeff(5, 3) == 5);
}

TEST_CASE("qz scalar, series and z-grading operations") {
    QZSeries a(6);
    a.add_term(1, 0, 2);
    a.add_term(0, 2, 1);

    QZSeries doubled = a;
    doubled *= Int(3);
    CHECK(doubled.coeff(1, 0) == 6);
    CHECK(doubled.coeff(0, 2) == 3);

    QZSeries scaled = a;
    scaled *= QSeries::monomial(1, 2, 6);  // multiply by 2q
    CHECK(scaled.coeff(2, 0) == 4);
    CHECK(scaled.coeff(1, 2) == 2);
    CHECK(scaled.coeff(0, 2) == 0);

    QZSeries shifted = a.z_shifted(-3);
    CHECK(shifted.coeff(1, -3) == 2);
    CHECK(shifted.coeff(0, -1) == 1);

    QZSeries sum = a;
    sum += a;
    CHECK(sum.coeff(1, 0) == 4);
}

TEST_CASE("qz comparison") {
    QZSeries a(5), b(5);
    a.add_term(1, 0, 1);
    b.add_term(1, 0, 2);
    CHECK(leq(a, b));
    CHECK(!leq(b, a));
    CHECK(leq(a, a));
    QZSeries other(6);
    CHECK_THROWS_AS(leq(a, other), std::domain_error);
}

TEST_CASE("coefficient access is guarded at the truncation order") {
    QSeries s = from_coeffs({1, 2}, 3);
    CHECK(s.coeff(2) == 0);
    CHECK_THROWS_AS(s.coeff(3), std::domain_error);
    CHECK_THROWS_AS(s.truncated(4), std::domain_error);
}
