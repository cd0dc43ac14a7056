#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitensor/kernel.hpp"
#include "unitensor/oracle_glfq.hpp"
#include "unitensor/quiver_roots.hpp"

using namespace unitensor;

namespace {

MultiPartition mp(const char* s) { return parse_multipartition(s); }

const TPoly t = TPoly::monomial(1);

}  // namespace

TEST_CASE("n = 1") {
    for (int k = 1; k <= 4; ++k) {
        const auto mu = MultiPartition::ones(k);
        CAPTURE(k);
        // Every (1)^k is a real root at g = 0.
        CHECK(v_poly(mu, 0) == TPoly(1));
        CHECK(u_poly(mu, 0) == TPoly(1));
        CHECK(a_poly(mu, 0) == v_poly(mu, 0));
    }
    CHECK(v_poly(mp("1|1|1"), 0) == TPoly(1));
    CHECK(v_poly(mp("1|1|1"), 1) == t);
    CHECK(v_poly(mp("1|1"), 2) == TPoly::monomial(2));
}

TEST_CASE("n = 2, k = 3 table") {
    struct Row {
        const char* mu;
        TPoly v, u, a;
    };
    const std::vector<Row> g0{
        {"2|2|2", 0, 1, 0},       {"2|2|1^2", 0, 0, 0},     {"2|1^2|1^2", 0, 1, 0},
        {"1^2|1^2|1^2", 1, 1, 1},
    };
    for (const auto& r : g0) {
        CAPTURE(r.mu);
        CHECK(v_poly(mp(r.mu), 0) == r.v);
        CHECK(u_poly(mp(r.mu), 0) == r.u);
        CHECK(a_poly(mp(r.mu), 0) == r.a);
        CHECK(a_poly_kostka(mp(r.mu), 0) == r.a);
    }
    const std::vector<Row> g1{
        {"2|2|2", TPoly({0, 1}), TPoly({0, 1, 1}), TPoly({0, 1})},
        {"2|2|1^2", TPoly::monomial(2), TPoly::monomial(2), TPoly({0, 1, 1})},
        {"2|1^2|1^2", TPoly::monomial(3), TPoly({0, 0, 1, 1}), TPoly({0, 1, 2, 1})},
        {"1^2|1^2|1^2", TPoly({0, 0, 1, 0, 1}), TPoly({0, 0, 1, 0, 1}), TPoly({0, 1, 4, 3, 1})},
    };
    for (const auto& r : g1) {
        CAPTURE(r.mu);
        CHECK(v_poly(mp(r.mu), 1) == r.v);
        CHECK(u_poly(mp(r.mu), 1) == r.u);
        CHECK(a_poly(mp(r.mu), 1) == r.a);
        CHECK(a_poly_kostka(mp(r.mu), 1) == r.a);
    }
}

TEST_CASE("U(q) agrees with brute force") {
    for (int n = 1; n <= 2; ++n) {
        for (int g = 0; g <= 1; ++g) {
            for (int q : {2, 3}) {
                for (const auto& mu : multipartitions(n, 3)) {
                    CAPTURE(format_multipartition(mu));
                    CHECK(u_poly(mu, g).evaluate(Rational(q)) == Rational(tensor_inner_product(mu, g, q)));
                }
            }
        }
    }
}

TEST_CASE("V shape") {
    for (int n = 1; n <= 3; ++n) {
        for (int g = 0; g <= 1; ++g) {
            for (const auto& mu : multipartitions(n, 3)) {
                const TPoly v = v_poly(mu, g);
                const auto [q, vec] = build_quiver(mu, g);
                const auto tag = classify_root(vec, q).tag;
                CAPTURE(format_multipartition(mu));
                CHECK(v.is_zero() == (tag == RootTag::not_root));
                if (!v.is_zero()) {
                    CHECK(v.is_monic());
                    CHECK(2 * v.degree() == d_mu(mu, g));
                }
                CHECK((v == TPoly(1)) == (tag == RootTag::real));
            }
        }
    }
}

TEST_CASE("w_poly and decomposition") {
    CHECK(d_split(SplitType({{mp("1^3|1^3|1^3"), 2}}), 0) == 4);
    CHECK(w_poly(SplitType({{mp("1|1|1"), 2}}), mp("2|2|2"), 0) == TPoly(1));
    CHECK(w_poly(SplitType({{mp("1|1|1"), 2}}), mp("2|2|1^2"), 0).is_zero());
    CHECK(w_poly(SplitType({{mp("1^2|1^2|1^2"), 1}}), mp("1^2|1^2|1^2"), 0) == TPoly(1));
    for (int n = 1; n <= 2; ++n) {
        for (int g = 0; g <= 1; ++g) {
            for (const auto& mu : multipartitions(n, 3)) {
                const auto rep = decomposition_check(mu, g);
                CAPTURE(format_multipartition(mu));
                CHECK(rep.ok());
                CHECK(rep.sum == rep.u);
                CHECK(rep.u == u_poly(mu, g));
            }
        }
    }
}

TEST_CASE("phi_count") {
    CHECK(phi_count(1, 2) == 1);
    CHECK(phi_count(1, 5) == 4);
    CHECK(phi_count(2, 2) == 1);
    CHECK(phi_count(2, 3) == 3);
    CHECK(phi_count(3, 2) == 2);
    CHECK(phi_count(4, 2) == 3);
    CHECK_THROWS(phi_count(0, 2));
    // Σ_{d|n} d φ_d(q) = q^n − 1.
    for (long q : {2L, 3L, 4L}) {
        for (int n = 1; n <= 6; ++n) {
            Integer s = 0, qn = 1;
            for (int d = 1; d <= n; ++d) {
                if (n % d == 0) s += d * phi_count(d, q);
            }
            for (int i = 0; i < n; ++i) qn *= q;
            CHECK(s == qn - 1);
        }
    }
}

TEST_CASE("product identity and point evaluation") {
    CHECK(product_identity_check(2, 3, 0, 2));
    CHECK(product_identity_check(2, 2, 1, 3));
    CHECK_THROWS(product_identity_check(2, 2, 0, 1));
    for (const auto& mu : multipartitions(2, 3)) {
        CHECK(u_poly_interpolated(mu, 0) == u_poly(mu, 0));
        CHECK(u_poly_interpolated(mu, 1) == u_poly(mu, 1));
    }
    const auto vals = u_values_at(2, 3, 0, 3);
    for (const auto& mu : multipartitions(2, 3)) CHECK(vals.at(mu) == u_poly(mu, 0).evaluate(Rational(3)));
}

TEST_CASE("kernel context") {
    const auto ctx = kernel_context(2, 3, 0);
    CHECK(ctx->n >= 2);
    CHECK(ctx->omega.constant_term() == TRat(1));
    CHECK(ctx->v_series.constant_term().is_zero());
    CHECK(schur_coefficient(ctx->v_series, mp("1^2|1^2|1^2")) == TRat(1));
    CHECK(complete_coefficient(ctx->v_series, mp("1^2|1^2|1^2")) == TRat(1));
    CHECK(schur_coefficient(ctx->u_series, mp("2|2|2")) == TRat(1));
}
