#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitensor/kernel.hpp"
#include "unitensor/sn_modules.hpp"

using namespace unitensor;

namespace {

MultiPartition mp(const char* s) { return parse_multipartition(s); }

MultiType type(std::initializer_list<std::pair<std::pair<int, const char*>, int>> entries) {
    std::map<MultiType::Key, int> m;
    for (const auto& [key, mult] : entries) m[{key.first, mp(key.second)}] = mult;
    return MultiType(m);
}

}  // namespace

TEST_CASE("c_omega_mu examples") {
    CHECK(c_omega_mu(type({{{1, "2,1"}, 1}}), mp("2,1")) == 1);
    CHECK(c_omega_mu(type({{{1, "2,1"}, 1}}), mp("3")) == 0);
    // ψ_2 s_1 = s_2 − s_11.
    CHECK(c_omega_mu(type({{{2, "1"}, 1}}), mp("2")) == 1);
    CHECK(c_omega_mu(type({{{2, "1"}, 1}}), mp("1^2")) == -1);
    // s_1² = s_2 + s_11.
    CHECK(c_omega_mu(type({{{1, "1"}, 2}}), mp("2")) == 1);
    CHECK(c_omega_mu(type({{{1, "1"}, 2}}), mp("1^2")) == 1);
    // s_1³ = s_3 + 2 s_21 + s_111, componentwise for k = 2.
    CHECK(c_omega_mu(type({{{1, "1|1"}, 3}}), mp("2,1|2,1")) == 4);
    CHECK(c_omega_mu(type({{{1, "1"}, 1}}), mp("2")) == 0);
}

TEST_CASE("decompose_module examples") {
    const SplitType one_squared({{mp("1"), 2}});
    const auto triv = decompose_module(one_squared, mp("2"));
    CHECK(triv.multiplicities == std::map<std::vector<Partition>, Integer>{{{Partition{2}}, 1}});
    CHECK(triv.trivial_multiplicity() == 1);
    CHECK(triv.dimension() == 1);
    const auto sign = decompose_module(one_squared, mp("1^2"));
    CHECK(sign.multiplicities == std::map<std::vector<Partition>, Integer>{{{Partition{1, 1}}, 1}});
    CHECK(sign.trivial_multiplicity() == 0);
    CHECK(sign.character({Partition{2}}) == -1);

    // (1)^3: ℂ^{(2,1)} is the reflection representation of 𝔖_3.
    const auto refl = decompose_module(SplitType({{mp("1"), 3}}), mp("2,1"));
    CHECK(refl.multiplicities == std::map<std::vector<Partition>, Integer>{{{Partition{2, 1}}, 1}});
    CHECK(refl.dimension() == 2);
    CHECK(r_set(SplitType({{mp("1"), 3}}), mp("2,1")) == std::set<std::vector<Partition>>{{Partition{2, 1}}});
}

TEST_CASE("decompose_module character matches c_omega_mu") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& split : split_types(n, 2)) {
            for (const auto& mu : multipartitions(n, 2)) {
                const auto dec = decompose_module(split, mu);
                for (const auto& labels : split.fiber_labels()) {
                    CHECK(dec.character(labels) == c_omega_mu(split.fiber_element(labels), mu));
                }
                std::set<std::vector<Partition>> keys;
                for (const auto& [k, m] : dec.multiplicities) {
                    CHECK(m > 0);
                    keys.insert(k);
                }
                CHECK(r_set(split, mu) == keys);
            }
        }
    }
}

TEST_CASE("nonzero_criterion") {
    CHECK(nonzero_criterion(mp("3|3|3"), 0));
    CHECK_FALSE(nonzero_criterion(mp("3|3|2,1"), 0));
    CHECK(nonzero_criterion(mp("1^3|1^3|1^3"), 0));
    CHECK_FALSE(nonzero_criterion(mp("3|2,1|1^3"), 0));
    // A constant V(1) = 0 makes everything vanish.
    CHECK_FALSE(nonzero_criterion(mp("1|1|1"), [](const MultiPartition&) { return Integer(0); }));
    for (int n = 1; n <= 3; ++n) {
        for (int g = 0; g <= 1; ++g) {
            for (const auto& mu : multipartitions(n, 3)) {
                CHECK(nonzero_criterion(mu, g) == !u_poly(mu, g).is_zero());
            }
        }
    }
}

TEST_CASE("sigma and harcos") {
    CHECK(sigma({2, 1}, {2, 1}) == 3);
    CHECK(sigma({2, 1}, {1, 1}) == 2);
    CHECK(sigma({2, 1}, {1, 0}) == -1);
    CHECK(sigma({1, 1, 1}, {1, 1, 1}) == 0);
    std::mt19937_64 rng(99);
    const auto r = harcos_verify(200, rng);
    CHECK(r.ok());
    CHECK(r.checked > 0);
}
