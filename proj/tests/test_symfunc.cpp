#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unitensor/symfunc.hpp"

using namespace unitensor;

namespace {

using Expansion = std::map<MultiPartition, Rational>;

MultiPartition m1(std::initializer_list<int> parts) { return MultiPartition{Partition(parts)}; }

SymFunc<Rational> schur1(std::initializer_list<int> parts, int N) {
    return from_basis(Basis::schur, Expansion{{m1(parts), Rational(1)}}, 1, N);
}

SymFunc<TRat> random_series(int k, int N, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-2, 2), e(0, 2);
    SymFunc<TRat> f(k, N);
    for (int n = 1; n <= N; ++n) {
        for (const auto& mu : multipartitions(n, k)) {
            f.add_term(mu, TRat(TPoly::monomial(e(rng), Rational(c(rng)))));
        }
    }
    return f;
}

}  // namespace

TEST_CASE("basis conversion") {
    const auto s11 = to_basis(schur1({1, 1}, 2), Basis::power);
    CHECK(s11 == Expansion{{m1({1, 1}), Rational(1, 2)}, {m1({2}), Rational(-1, 2)}});

    const auto h2 = basis_convert(Expansion{{m1({2}), Rational(1)}}, Basis::complete, Basis::schur, 1, 2);
    CHECK(h2 == Expansion{{m1({2}), Rational(1)}});

    const auto p2 = basis_convert(Expansion{{m1({2}), Rational(1)}}, Basis::power, Basis::schur, 1, 2);
    CHECK(p2 == Expansion{{m1({2}), Rational(1)}, {m1({1, 1}), Rational(-1)}});

    // s_{(2,1)} = m_{(2,1)} + 2 m_{(1^3)}.
    const auto m = to_basis(schur1({2, 1}, 3), Basis::monomial);
    CHECK(m == Expansion{{m1({2, 1}), Rational(1)}, {m1({1, 1, 1}), Rational(2)}});

    CHECK_THROWS(from_basis(Basis::monomial, Expansion{{m1({1}), Rational(1)}}, 1, 1));

    // Round trips through every supported pair.
    for (int n = 1; n <= 4; ++n) {
        for (const auto& mu : multipartitions(n, 2)) {
            const Expansion e{{mu, Rational(1)}};
            for (Basis b : {Basis::schur, Basis::power, Basis::complete}) {
                for (Basis c : {Basis::schur, Basis::power, Basis::complete}) {
                    CHECK(basis_convert(basis_convert(e, b, c, 2, n), c, b, 2, n) == e);
                }
            }
        }
    }
}

TEST_CASE("multiply") {
    const auto p1 = SymFunc<Rational>::power_sum(m1({1}), 3);
    CHECK(multiply(p1, p1) == SymFunc<Rational>::power_sum(m1({1, 1}), 3));
    const auto s1 = schur1({1}, 2);
    CHECK(to_basis(multiply(s1, s1), Basis::schur) == Expansion{{m1({2}), Rational(1)}, {m1({1, 1}), Rational(1)}});
    const auto one = SymFunc<Rational>::constant(1, 3, Rational(1));
    const auto f = schur1({2, 1}, 3);
    CHECK(multiply(f, one) == f);
    CHECK_THROWS(multiply(SymFunc<Rational>(1, 2), SymFunc<Rational>(2, 2)));
    // Truncation: degree 4 terms vanish at N = 3.
    CHECK(multiply(schur1({2}, 3), schur1({2}, 3)).is_zero());
}

TEST_CASE("hall pairing") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& a : partitions(n)) {
            for (const auto& b : partitions(n)) {
                const auto sa = from_basis(Basis::schur, Expansion{{MultiPartition{a}, Rational(1)}}, 1, n);
                const auto sb = from_basis(Basis::schur, Expansion{{MultiPartition{b}, Rational(1)}}, 1, n);
                CHECK(hall_pairing(sa, sb) == Rational(a == b ? 1 : 0));
                // ⟨h_a, m_b⟩ = δ: pair h_a against the monomial-dual through Schur.
                const auto ha = from_basis(Basis::complete, Expansion{{MultiPartition{a}, Rational(1)}}, 1, n);
                CHECK(hall_pairing(ha, sb) == Rational(kostka_number(b, a)));
            }
        }
    }
    const auto p2 = SymFunc<Rational>::power_sum(m1({2}), 2);
    const auto p11 = SymFunc<Rational>::power_sum(m1({1, 1}), 2);
    CHECK(hall_pairing(p2, p2) == 2);
    CHECK(hall_pairing(p2, p11) == 0);
}

TEST_CASE("adams") {
    const auto p1 = SymFunc<Rational>::power_sum(m1({1}), 4);
    CHECK(adams(p1, 2) == SymFunc<Rational>::power_sum(m1({2}), 4));
    CHECK(to_basis(adams(schur1({1}, 2), 2), Basis::schur) ==
          Expansion{{m1({2}), Rational(1)}, {m1({1, 1}), Rational(-1)}});
    const auto f = schur1({2, 1}, 6);
    CHECK(adams(f, 1) == f);

    std::mt19937_64 rng(1);
    const auto g = random_series(2, 6, rng);
    for (int d = 1; d <= 3; ++d) {
        for (int e = 1; e <= 2; ++e) CHECK(adams(adams(g, d), e) == adams(g, d * e));
    }
    // Coefficients see t ↦ t^d.
    const auto tp = SymFunc<TRat>::power_sum(m1({1}), 2, TRat::t());
    CHECK(adams(tp, 2).coefficient(m1({2})) == TRat(TPoly::monomial(2)));
}

TEST_CASE("plethystic exp and log") {
    // Exp(p_1) = Σ h_n.
    const auto e = plethystic_exp(SymFunc<Rational>::power_sum(m1({1}), 3));
    Expansion expected{{MultiPartition::zero(1), Rational(1)}};
    for (int n = 1; n <= 3; ++n) expected[m1({n})] = 1;
    CHECK(to_basis(e, Basis::complete) == expected);

    CHECK(plethystic_exp(SymFunc<Rational>(1, 3)) == SymFunc<Rational>::constant(1, 3, Rational(1)));
    CHECK_THROWS(plethystic_exp(SymFunc<Rational>::constant(1, 3, Rational(1))));
    CHECK_THROWS(plethystic_log(SymFunc<Rational>(1, 3)));

    std::mt19937_64 rng(2);
    for (int k = 1; k <= 2; ++k) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto f = random_series(k, 3, rng), g = random_series(k, 3, rng);
            CHECK(plethystic_log(plethystic_exp(f)) == f);
            CHECK(plethystic_exp(f + g) == multiply(plethystic_exp(f), plethystic_exp(g)));
        }
    }
}

TEST_CASE("family_type_value") {
    std::map<MultiPartition, SymFunc<Rational>> schur;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& lam : partitions(n)) {
            schur.emplace(MultiPartition{lam}, from_basis(Basis::schur, Expansion{{MultiPartition{lam}, Rational(1)}}, 1, 3));
        }
    }
    const MultiType single({{{1, m1({2, 1})}, 1}});
    CHECK(family_type_value(schur, single, 1, 3) == schur1({2, 1}, 3));
    const MultiType frob({{{2, m1({1})}, 1}});
    CHECK(to_basis(family_type_value(schur, frob, 1, 3), Basis::schur) ==
          Expansion{{m1({2}), Rational(1)}, {m1({1, 1}), Rational(-1)}});
    const MultiType missing({{{1, m1({4})}, 1}});
    CHECK_THROWS_AS(family_type_value(schur, missing, 1, 4), std::out_of_range);

    const MultiPartition alpha{{1}, {1}, {1}};
    std::map<MultiPartition, TPoly> v{{alpha, TPoly({1, 1})}};
    CHECK(family_type_value(v, MultiType({{{2, alpha}, 1}})) == TPoly({1, 0, 1}));
    CHECK(family_type_value(v, MultiType({{{1, alpha}, 2}})) == TPoly({1, 2, 1}));
}

TEST_CASE("dump") {
    std::ostringstream os;
    dump(os, SymFunc<Rational>::power_sum(MultiPartition{{2, 1}, {1, 1, 1}}, 3, Rational(1, 2)));
    CHECK(os.str() == "2,1|1^3\t1/2\n");
}
