#include "doctest.h"
#include "m3p/characters.hpp"
#include "m3p/linalg.hpp"
#include "m3p/sympoly.hpp"
#include "m3p/verify.hpp"

using namespace m3p;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Rat R2(long num, long den) { return make_rat(num, den); }

}  // namespace

TEST_CASE("hypergeometric coefficients terminate") {
    // p = 4: g(z) = 1 - z + z^2
    auto g4 = hypergeometric_coeffs(R2(-1, 3), Rat(-2), R2(-2, 3), 2);
    REQUIRE(g4.size() == 3);
    CHECK(g4[0] == 1);
    CHECK(g4[1] == -1);
    CHECK(g4[2] == 1);

    // p = 5: 1 - (3/2)z - (3/2)z^2 + z^3
    auto g5 = hypergeometric_coeffs(R2(-2, 3), Rat(-3), R2(-4, 3), 3);
    REQUIRE(g5.size() == 4);
    CHECK(g5[0] == 1);
    CHECK(g5[1] == R2(-3, 2));
    CHECK(g5[2] == R2(-3, 2));
    CHECK(g5[3] == 1);
}

TEST_CASE("phi3 expansions") {
    SymPoly3 p4 = phi3(4);
    SymPoly3 expect = SymPoly3::msym({2, 0, 0}) - SymPoly3::msym({1, 1, 0});
    CHECK(p4 == expect);

    SymPoly3 p5 = phi3(5);
    CHECK(p5.homogeneous_degree() == 3);
    CHECK(leading_monomial(p5) == Exp3{3, 0, 0});
    CHECK(p5.coeff({3, 0, 0}) == 1);  // g(0) = 1 normalisation

    CHECK(phi3(1) == SymPoly3::one());
    CHECK(phi3(2) == SymPoly3::one());
    CHECK_THROWS_AS(phi3(6), std::domain_error);

    for (int p : {4, 5, 7, 8, 10, 11}) {
        SymPoly3 f = phi3(p);  // from_expanded throws if not symmetric
        CHECK(f.homogeneous_degree() == p - 2);
        CHECK(f.coeff({p - 2, 0, 0}) == 1);
    }
}

TEST_CASE("ward operators") {
    SymPoly3 f = phi3(5);
    CHECK(l_op(0, f) == f * Rat(3));  // Euler operator on degree 3
    CHECK(l_op(-1, phi3(4)).is_zero());
    CHECK(l_op(-1, phi3(7)).is_zero());
    CHECK(l_op(0, phi3(7)) == phi3(7) * Rat(5));
    CHECK(power_sum(0) == SymPoly3::msym({0, 0, 0}, Rat(3)));
    CHECK(power_sum(2) == SymPoly3::msym({2, 0, 0}));
}

TEST_CASE("hypergeometric ODE annihilation") {
    for (int p : {4, 5, 7, 8, 10, 11, 13, 14}) CHECK(hyp_ode_check(p));
}

TEST_CASE("f_j leading monomials and x3 = 0 specialisation") {
    for (int p : {4, 5, 7}) {
        for (int j = 0; j <= p - 2; ++j) {
            SymPoly3 fj = f_j(p, j);
            CHECK(leading_monomial(fj) == Exp3{p - 2, j, 0});

            // f_j(x1, x2, 0) = c_j x1^{p-2} x2^j F(1-p/3, 2-p+j, 2-2p/3+j; x2/x1)
            // with c_j = (1-p/3)_j (2-p)_j / (2-2p/3)_j, by iterating
            // ((z-1)d/dz + beta)F(a,b,c;z) = ((c-a)b/c) F(a,b+1,c+1;z);
            // the i-th step contributes (1-p/3+i)(2-p+i)/(2-2p/3+i)
            MonoPoly3 lhs = fj.to_expanded().at_x3_zero();
            Rat front(1);
            for (int i = 0; i < j; ++i)
                front *= (make_rat(3 - p, 3) + i) * Rat(2 - p + i) /
                         (make_rat(2 * (3 - p), 3) + i);
            auto series = hypergeometric_coeffs(make_rat(3 - p, 3), Rat(2 - p + j),
                                                make_rat(2 * (3 - p), 3) + j, p - 2 - j);
            MonoPoly3 rhs;
            for (int k = 0; k < static_cast<int>(series.size()); ++k)
                rhs.add_term({p - 2 - k, j + k, 0}, front * series[k]);
            CHECK(lhs == rhs);
        }
    }
    CHECK(f_j(4, 0) == phi3(4));
    CHECK_THROWS_AS(f_j(4, 3), std::domain_error);
}

TEST_CASE("leading monomial order") {
    SymPoly3 f = SymPoly3::msym({3, 1, 0}) + SymPoly3::msym({2, 2, 0});
    CHECK(leading_monomial(f) == Exp3{3, 1, 0});
    CHECK_THROWS_AS(leading_monomial(SymPoly3()), std::domain_error);
}

TEST_CASE("pi restriction") {
    for (int p : {4, 5, 7}) {
        Poly2 xy;
        for (int t = 0; t <= p - 2; ++t) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), p - 2, t);
            if ((p - 2 - t) % 2 != 0) b = -b;
            xy.add_term(t, p - 2 - t, Rat(b));
        }
        CHECK(specialize_pi(phi3(p)) == xy);
        Poly2 xpy;
        xpy.add_term(1, 0, Rat(p - 2));
        xpy.add_term(0, 1, Rat(p - 2));
        CHECK(specialize_pi(l_op(1, phi3(p))) == xpy * xy);
    }
    CHECK(specialize_pi(discriminant3() * phi3(4)).is_zero());
}

TEST_CASE("qr reduction") {
    QRReduction qr2 = qr_reduction(4, 2);
    CHECK(qr2.q == SymPoly3::msym({1, 0, 0}));  // the full degree-1 sum
    CHECK(qr2.r == SymPoly3::msym({1, 1, 0}, Rat(-1)));
    CHECK(qr2.identity_holds);

    for (int p : {4, 5, 7})
        for (int m = 2; m <= 5; ++m) {
            QRReduction qr = qr_reduction(p, m);
            CHECK(qr.identity_holds);
            // Q_{m-1} is the complete homogeneous sum of degree m-1
            SymPoly3 h;
            for (const Exp3& lam : partitions3(m - 1)) h += SymPoly3::msym(lam);
            CHECK(qr.q == h);
        }
}

TEST_CASE("l1 square reduction") {
    for (int p : {4, 5, 7}) {
        L1SquareReduction red = l1_square_reduction(p);
        REQUIRE(red.ok);
        // closed forms recovered by the solver
        CHECK(red.a1 == make_rat(4 * p - 6, 3));
        CHECK(red.b20 == make_rat(-(p - 2) * (p - 3), 3));
        CHECK(red.b11 == Rat(-(p - 2) * (p - 1)));
    }
}

TEST_CASE("nested identity") {
    for (int p : {4, 5, 7, 8, 10, 11}) CHECK(nested_identity_check(p));
}

TEST_CASE("squarefree hypergeometric factors") {
    for (int p : {4, 5, 7, 8, 10, 11, 13, 14}) CHECK(squarefree_check(p));
}

TEST_CASE("coupling") {
    CHECK(coupling(phi3(4), P({3, 1, 1})) == 1);
    CHECK(coupling(phi3(4), P({2, 2, 1})) == -1);
    CHECK(coupling(SymPoly3::one(), P({1, 1, 1})) == 1);
    CHECK(coupling(phi3(4), P({4, 1, 1})) == 0);  // degree mismatch, lax mode
    CHECK_THROWS_AS(coupling(phi3(4), P({4, 1, 1}), true), std::domain_error);
}

TEST_CASE("ideal dimensions match the closed-form character") {
    for (int p : {4, 5, 7, 8}) {
        Ideal3 ideal = Ideal3::make(p);
        QSeries ic = ideal3_char(p, 2 * p + 1);
        for (int d = 0; d <= 2 * p; ++d)
            CHECK(Int(ideal.graded_dim(d)) == ic.coeff(d));
    }
}

TEST_CASE("ideal basis edge cases") {
    CHECK(ideal3_basis(4, 1).empty());
    auto b = ideal3_basis(4, 2);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == phi3(4));
}

TEST_CASE("admissible leading monomials realise the ideal basis") {
    // triangular set: for every admissible triple of weight d there is
    // an ideal element with that leading monomial
    for (int p : {4, 5, 7})
        for (int d = 0; d <= 2 * p; ++d) {
            long triples = 0;
            for (const Exp3& lam : partitions3(d)) {
                if (lam[0] - lam[2] < p - 2) continue;
                ++triples;
                int j_lo = std::max(0, (p - 2) + lam[1] - lam[0]);
                int j_hi = std::min(p - 2, lam[1] - lam[2]);
                REQUIRE(j_lo <= j_hi);
                int j = j_lo;
                int m = lam[2];
                int lft = lam[1] - j - m;
                int k = lam[0] - (p - 2) - lam[1] + j;
                REQUIRE(lft >= 0);
                REQUIRE(k >= 0);
                SymPoly3 g = f_j(p, j);
                for (int t = 0; t < k; ++t) g = g * elementary(1);
                for (int t = 0; t < lft; ++t) g = g * elementary(2);
                for (int t = 0; t < m; ++t) g = g * elementary(3);
                CHECK(leading_monomial(g) == lam);
            }
            CHECK(Int(triples) == admissible_triple_count(p, d));
            CHECK(Int(static_cast<long>(ideal3_basis(p, d).size())) ==
                  admissible_triple_count(p, d));
        }
}

TEST_CASE("exact sequences") {
    CHECK(exactness_check(4, 8));
    CHECK(exactness_check(5, 10));
    CHECK(exactness_check(7, 14));
    CHECK(finitized_exactness_check(4, 5));
    CHECK(finitized_exactness_check(5, 6));
    CHECK(finitized_exactness_check(7, 8));
}

TEST_CASE("exact linear algebra") {
    RatMatrix a{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}};
    CHECK(rank(a) == 2);
    auto rows = independent_rows(a);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == 0);
    CHECK(rows[1] == 2);

    auto ns = nullspace(RatMatrix{{Rat(1), Rat(1), Rat(0)}});
    CHECK(ns.size() == 2);

    auto sol = solve(RatMatrix{{Rat(2), Rat(0)}, {Rat(0), Rat(4)}},
                     {Rat(1), Rat(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == make_rat(1, 2));
    CHECK((*sol)[1] == make_rat(1, 4));
    CHECK(!solve(RatMatrix{{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(2)}).has_value());
}
