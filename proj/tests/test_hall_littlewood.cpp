#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitensor/hall_littlewood.hpp"

using namespace unitensor;

namespace {

const TPoly t = TPoly::monomial(1);

TPoly one_minus_t_pow(int e) { return TPoly(1) - TPoly::monomial(e); }

// K_{λ,(1^n)}(t) = t^{n(λ')} Π_{i≤n}(1−t^i) / Π_{x∈λ}(1−t^{h(x)}).
TPoly fake_degree(const Partition& lambda) {
    const int n = lambda.size();
    TPoly num = TPoly::monomial(lambda.conjugate().n_stat());
    for (int i = 1; i <= n; ++i) num = num * one_minus_t_pow(i);
    TPoly den(1);
    const Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            den = den * one_minus_t_pow(lambda.part(i) - j + conj.part(j) - i + 1);
        }
    }
    return TPoly::divide_exact(num, den);
}

// a_λ(q) = q^{⟨λ,λ⟩} Π_i Π_{j≤m_i} (1 − q^{−j}), evaluated numerically.
Rational centralizer_at(const Partition& lambda, long q) {
    Rational v = 1;
    for (int e = 0; e < lambda.norm(); ++e) v *= q;
    for (int i = 1; i <= lambda.size(); ++i) {
        Rational qj = 1;
        for (int j = 1; j <= lambda.multiplicity(i); ++j) {
            qj *= q;
            v *= Rational(1) - Rational(1) / qj;
        }
    }
    return v;
}

}  // namespace

TEST_CASE("charge") {
    CHECK(charge({1, 2}) == 1);
    CHECK(charge({2, 1}) == 0);
    CHECK(charge({1}) == 0);
    CHECK(charge({3, 2, 1}) == 0);
    CHECK(charge({1, 2, 3}) == 3);
}

TEST_CASE("kostka_poly examples") {
    CHECK(kostka_poly({2}, {1, 1}) == t);
    CHECK(kostka_poly({2, 1}, {1, 1, 1}) == TPoly({0, 1, 1}));
    CHECK(kostka_poly({3}, {1, 1, 1}) == TPoly::monomial(3));
    CHECK(kostka_poly({1, 1, 1}, {1, 1, 1}) == TPoly(1));
    CHECK(kostka_poly({3, 1}, {2, 2}) == t);
    CHECK(kostka_poly({4}, {2, 2}) == TPoly::monomial(2));
    CHECK(kostka_poly({3, 1, 1}, {2, 2, 1}) == t);
    CHECK(kostka_poly({3, 2, 1}, {2, 2, 2}) == TPoly({0, 1, 1}));
    CHECK(kostka_poly({2, 2}, {2, 1, 1}) == t);
    CHECK(kostka_poly({1, 1}, {2}).is_zero());
    CHECK_THROWS(kostka_poly({2}, {1}));
}

TEST_CASE("kostka_poly properties") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& nu : partitions(n)) {
            CHECK(kostka_poly(nu, nu) == TPoly(1));
            CHECK(kostka_poly(nu, Partition::column(n)) == fake_degree(nu));
            for (const auto& lam : partitions(n)) {
                const TPoly k = kostka_poly(nu, lam);
                CHECK(k.evaluate(Rational(1)) == kostka_number(nu, lam));
                CHECK(k.has_nonnegative_coeffs());
                CHECK(k.is_zero() == !dominance_leq(lam, nu));
                if (!k.is_zero()) CHECK(k.degree() == lam.n_stat() - nu.n_stat());
                const TPoly mk = modified_kostka(nu, lam);
                CHECK(mk.evaluate(Rational(1)) == kostka_number(nu, lam));
                if (!k.is_zero()) CHECK(mk.degree() <= lam.n_stat());
            }
        }
    }
}

TEST_CASE("modified_kostka") {
    CHECK(modified_kostka({1, 1}, {1, 1}) == t);
    CHECK(modified_kostka({2}, {1, 1}) == TPoly(1));
    CHECK(modified_kostka({2, 1}, {1, 1, 1}) == TPoly({0, 1, 1}));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lam : partitions(n)) {
            CHECK(modified_kostka(Partition::row(n), lam) == TPoly(1));
            const TPoly top = lam == Partition::column(n) ? TPoly::monomial(n * (n - 1) / 2) : TPoly();
            CHECK(modified_kostka(Partition::column(n), lam) == top);
        }
        CHECK(hl_table(n).n == n);
    }
}

TEST_CASE("htilde") {
    // H̃_(2) = s_2 = (p_11 + p_2)/2, H̃_(11) = s_2 + t s_11.
    const auto h2 = htilde({2}, 2);
    CHECK(h2.coefficient(MultiPartition{{1, 1}}) == TRat(Rational(1, 2)));
    CHECK(h2.coefficient(MultiPartition{{2}}) == TRat(Rational(1, 2)));
    const auto h11 = htilde({1, 1}, 2);
    CHECK(h11.coefficient(MultiPartition{{1, 1}}) == TRat(TPoly({Rational(1, 2), Rational(1, 2)})));
    CHECK(h11.coefficient(MultiPartition{{2}}) == TRat(TPoly({Rational(1, 2), Rational(-1, 2)})));
    CHECK_THROWS(htilde({2, 1}, 2));

    for (int n = 1; n <= 5; ++n) {
        for (const auto& lam : partitions(n)) {
            const auto h = htilde(lam, n);
            // ⟨H̃_λ, s_(n)⟩ = 1 and ⟨H̃_λ, s_ν⟩ = K̃_{νλ}.
            for (const auto& nu : partitions(n)) {
                TRat pair;
                for (const auto& rho : partitions(n)) {
                    pair += h.coefficient(MultiPartition{rho}) * TRat(Rational(sn_character(nu, rho)));
                }
                CHECK(pair == TRat(modified_kostka(nu, lam)));
            }
        }
    }
}

TEST_CASE("centralizer_order") {
    CHECK(centralizer_order({1}) == TPoly({-1, 1}));
    CHECK(centralizer_order({1, 1}) == TPoly({-1, 0, 1}) * TPoly({0, -1, 1}));
    CHECK(centralizer_order({2}) == TPoly({0, -1, 1}));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lam : partitions(n)) {
            for (long q : {2L, 3L, 5L}) CHECK(centralizer_order(lam).evaluate(Rational(q)) == centralizer_at(lam, q));
        }
    }
}

TEST_CASE("h_weight and omega_series") {
    CHECK(h_weight({1}, 0) == TRat(TPoly(1), TPoly({-1, 1})));
    CHECK(h_weight({1}, 1) == TRat(t, TPoly({-1, 1})));
    CHECK(h_weight({1, 1}, 1) == TRat(TPoly::monomial(4), centralizer_order({1, 1})));

    const auto om = omega_series(3, 2, 0);
    CHECK(om.constant_term() == TRat(1));
    CHECK(om.coefficient(MultiPartition::ones(2)) == h_weight({1}, 0));
    CHECK(om.truncation() == 3);
    CHECK(om.arity() == 2);
    for (int n = 0; n <= 3; ++n) {
        for (const auto& [mu, c] : om.grade(n)) CHECK(mu.size() == n);
    }
    // Grade 1 of the arity-1 kernel is p_1/(t−1).
    const auto om1 = omega_series(2, 1, 0);
    CHECK(om1.coefficient(MultiPartition{{1}}) == TRat(TPoly(1), TPoly({-1, 1})));
}
