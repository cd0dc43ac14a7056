#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "unitensor/quiver_roots.hpp"

using namespace unitensor;

namespace {

MultiPartition mp(const char* s) { return parse_multipartition(s); }

}  // namespace

TEST_CASE("build_quiver") {
    const auto [q, v] = build_quiver(mp("2,1|1^3|1^3"), 0);
    CHECK(q.leg_lengths() == std::vector<int>{1, 2, 2});
    CHECK(q.vertex_count() == 6);
    CHECK(v == DimVector{3, 1, 2, 1, 2, 1});
    CHECK(q.vertex(1, 1) == 1);
    CHECK(q.vertex(2, 2) == 3);
    CHECK(q.neighbours(0).size() == 3);
    CHECK_THROWS(q.vertex(1, 2));

    const auto [q1, v1] = build_quiver(mp("1|1|1"), 2);
    CHECK(q1.vertex_count() == 1);
    CHECK(v1 == DimVector{1});
    CHECK(q1.has_loops(0));
    CHECK(q1.cartan()[0][0] == 2 - 2 * 2);

    // Cartan matrix is symmetric with 2 on loopless diagonal entries.
    const auto [q2, v2] = build_quiver(mp("1^3|2,1|3"), 1);
    for (int i = 0; i < q2.vertex_count(); ++i) {
        for (int j = 0; j < q2.vertex_count(); ++j) CHECK(q2.cartan()[i][j] == q2.cartan()[j][i]);
        if (!q2.has_loops(i)) CHECK(q2.cartan()[i][i] == 2);
    }
}

TEST_CASE("d_mu and delta") {
    CHECK(d_mu(mp("1^3|1^3|1^3"), 0) == 2);
    CHECK(d_mu(mp("2,1|1^3|1^3"), 0) == 0);
    CHECK(d_mu(mp("2^3|2^3|2^3"), 0) == 2);
    CHECK(d_mu(mp("1|1|1"), 0) == 0);
    CHECK(d_mu(mp("1|1"), 1) == 2);
    CHECK(delta(mp("1^3|1^3|1^3"), 0) == 0);
    CHECK(delta(mp("3|3|3"), 0) == -6);
    CHECK(delta(mp("1^2|1^2|1^2|1^2"), 0) == 0);
    CHECK(delta(mp("1|1"), 1) == 0);

    for (int n = 1; n <= 5; ++n) {
        for (int g = 0; g <= 1; ++g) {
            for (const auto& mu : multipartitions(n, 3)) {
                const auto [q, v] = build_quiver(mu, g);
                CHECK(d_mu(mu, g) == 2 - q.form(v, v));
                CHECK(d_mu(mu, g) % 2 == 0);
            }
        }
    }
}

TEST_CASE("fundamental set") {
    const auto [q, v] = build_quiver(mp("1^3|1^3|1^3"), 0);
    CHECK(in_fundamental_set(v, q));
    const auto [q2, v2] = build_quiver(mp("2,1|1^3|1^3"), 0);
    CHECK_FALSE(in_fundamental_set(v2, q2));
    // Disconnected support.
    CHECK_FALSE(in_fundamental_set(DimVector{0, 1, 0, 0, 1, 0, 0}, q));
    CHECK_THROWS(in_fundamental_set(DimVector(7, 0), q));
}

TEST_CASE("classify_root examples") {
    struct Case {
        const char* mu;
        int g;
        RootTag tag;
    };
    const std::vector<Case> cases{
        {"1^3|1^3|1^3", 0, RootTag::imaginary}, {"2,1|1^3|1^3", 0, RootTag::real},
        {"1^2|1^2|1^2", 0, RootTag::real},      {"1|1|1", 0, RootTag::real},
        {"3|3|3", 0, RootTag::not_root},        {"3|2,1|1^3", 0, RootTag::not_root},
        {"2^3|2^3|2^3", 0, RootTag::imaginary}, {"1|1|1", 1, RootTag::imaginary},
        {"2|2|2", 1, RootTag::imaginary},        {"1^2|1^2|1^2|1^2", 0, RootTag::imaginary},
    };
    for (const auto& c : cases) {
        const auto [q, v] = build_quiver(mp(c.mu), c.g);
        CAPTURE(c.mu);
        CHECK(classify_root(v, q).tag == c.tag);
    }
    CHECK(root_tag_name(RootTag::real) == "real");
    CHECK(root_tag_name(RootTag::imaginary) == "imaginary");
}

TEST_CASE("root invariants") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 5; ++n) {
        for (int g = 0; g <= 1; ++g) {
            for (const auto& mu : multipartitions(n, 3)) {
                const auto [q, v] = build_quiver(mu, g);
                const auto rc = classify_root(v, q);
                CAPTURE(format_multipartition(mu));
                CHECK(replay_witness(rc, q) == v);
                CHECK(classify_root_random(v, q, rng).tag == rc.tag);
                const auto form = q.form(v, v);
                if (rc.tag == RootTag::real) CHECK(form == 2);
                if (rc.tag == RootTag::imaginary) CHECK(form <= 0);
                if (in_fundamental_set(v, q)) CHECK(rc.tag == RootTag::imaginary);
                for (int i = 0; i < q.vertex_count(); ++i) {
                    if (q.has_loops(i)) continue;
                    const auto r = q.reflect(v, i);
                    CHECK(q.form(r, r) == form);
                    CHECK(q.reflect(r, i) == v);
                }
            }
        }
    }
}
