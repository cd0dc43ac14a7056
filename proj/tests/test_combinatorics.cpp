#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "unitensor/combinatorics.hpp"

using namespace unitensor;

namespace {

// Frobenius formula by brute-force expansion in n variables: χ^λ_ρ is the
// coefficient of x^{λ+δ} in a_δ·p_ρ.
std::int64_t frobenius_character(const Partition& lambda, const Partition& rho) {
    const int n = lambda.size();
    const int vars = n;
    using Mono = std::vector<int>;
    std::map<Mono, std::int64_t> poly;
    // a_δ = Σ_σ sgn(σ) x^{σ(δ)}, δ = (n−1, …, 0).
    std::vector<int> perm(vars);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < vars; ++i) {
            for (int j = i + 1; j < vars; ++j) inv += perm[i] > perm[j];
        }
        Mono m(vars);
        for (int i = 0; i < vars; ++i) m[perm[i]] = vars - 1 - i;
        poly[m] += inv % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int r : rho.parts()) {
        std::map<Mono, std::int64_t> next;
        for (const auto& [m, c] : poly) {
            for (int i = 0; i < vars; ++i) {
                Mono e = m;
                e[i] += r;
                next[e] += c;
            }
        }
        poly = std::move(next);
    }
    Mono target(vars);
    for (int i = 0; i < vars; ++i) target[i] = lambda.part(i + 1) + vars - 1 - i;
    auto it = poly.find(target);
    return it == poly.end() ? 0 : it->second;
}

// SSYT count by filling cells in reading order with every admissible value.
std::int64_t brute_kostka(const Partition& shape, const Partition& content) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i) {
        for (int j = 0; j < shape.parts()[i]; ++j) cells.emplace_back(i, j);
    }
    const int m = content.length();
    std::vector<std::vector<int>> t(shape.length());
    for (int i = 0; i < shape.length(); ++i) t[i].assign(shape.parts()[i], 0);
    std::vector<int> used(m + 1, 0);
    std::int64_t count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t c) {
        if (c == cells.size()) {
            for (int v = 1; v <= m; ++v) {
                if (used[v] != content.part(v)) return;
            }
            ++count;
            return;
        }
        const auto [i, j] = cells[c];
        for (int v = 1; v <= m; ++v) {
            if (j > 0 && t[i][j - 1] > v) continue;
            if (i > 0 && t[i - 1][j] >= v) continue;
            if (used[v] == content.part(v)) continue;
            t[i][j] = v;
            ++used[v];
            go(c + 1);
            --used[v];
        }
        t[i][j] = 0;
    };
    go(0);
    return count;
}

}  // namespace

TEST_CASE("conjugate") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition{2, 2, 1}.conjugate() == Partition{3, 2});
    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : partitions(n)) CHECK(lam.conjugate().conjugate() == lam);
    }
}

TEST_CASE("partition_stats") {
    // Frozen from the defining formulas evaluated by hand-rolled loops below.
    CHECK(partition_stats(Partition{2, 1}) == PartitionStats{3, 2, 1, 5, 2});
    CHECK(partition_stats(Partition{1, 1}) == PartitionStats{2, 2, 1, 4, 2});
    CHECK(partition_stats(Partition()) == PartitionStats{0, 0, 0, 0, 1});

    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : partitions(n)) {
            const auto s = partition_stats(lam);
            int nstat = 0;
            for (int i = 1; i <= lam.length(); ++i) nstat += (i - 1) * lam.part(i);
            int norm = 0;
            const Partition conj = lam.conjugate();
            for (int c : conj.parts()) norm += c * c;
            std::int64_t z = 1;
            for (int i = 1; i <= n; ++i) {
                const int m = lam.multiplicity(i);
                for (int j = 1; j <= m; ++j) z *= static_cast<std::int64_t>(i) * j;
            }
            CHECK(s.size == n);
            CHECK(s.n_stat == nstat);
            CHECK(s.norm == norm);
            CHECK(s.norm == n + 2 * nstat);
            CHECK(s.z == z);
        }
    }
}

TEST_CASE("partition construction and text syntax") {
    CHECK(Partition({1, 3, 0, 2}) == Partition{3, 2, 1});
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(parse_partition("3,1^2") == Partition{3, 1, 1});
    CHECK(parse_partition("0") == Partition());
    CHECK(parse_partition("") == Partition());
    CHECK(format_partition(Partition{2, 2, 2}) == "2^3");
    CHECK(format_partition(Partition{3, 1, 1}) == "3,1^2");
    const auto mu = parse_multipartition("1^3|2,1|1^3");
    CHECK(mu.arity() == 3);
    CHECK(mu[1] == Partition{2, 1});
    CHECK(format_multipartition(mu) == "1^3|2,1|1^3");
    CHECK_THROWS(parse_multipartition("2|1"));
    CHECK_THROWS(parse_partition("2,x"));
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lam : partitions(n)) CHECK(parse_partition(format_partition(lam)) == lam);
    }
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
    CHECK(dominance_leq(Partition{2, 1}, Partition{2, 1}));
    CHECK_FALSE(dominance_leq(Partition{3}, Partition{2, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{2, 1}), std::invalid_argument);

    for (int n = 1; n <= 8; ++n) {
        const auto& ps = partitions(n);
        for (const auto& a : ps) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : ps) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                if (!dominance_leq(a, b)) continue;
                for (const auto& c : ps) {
                    if (dominance_leq(b, c)) CHECK(dominance_leq(a, c));
                }
            }
        }
    }
}

TEST_CASE("enumeration") {
    CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    const auto m22 = multipartitions(2, 2);
    CHECK(m22.size() == 4);
    CHECK(std::set<MultiPartition>(m22.begin(), m22.end()).size() == 4);
    CHECK(m22.front() == MultiPartition{{2}, {2}});
    CHECK(m22.back() == MultiPartition{{1, 1}, {1, 1}});

    const auto t21 = multitypes(2, 1);
    const std::set<MultiType> expected{
        MultiType({{{1, MultiPartition{{2}}}, 1}}),
        MultiType({{{1, MultiPartition{{1, 1}}}, 1}}),
        MultiType({{{1, MultiPartition{{1}}}, 2}}),
        MultiType({{{2, MultiPartition{{1}}}, 1}}),
    };
    CHECK(std::set<MultiType>(t21.begin(), t21.end()) == expected);
    CHECK(t21.size() == 4);

    // Partition counts p(n).
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions(n).size() == p[n]);

    // k = 1 multi-types are the class types of GL_n(F_q): 1, 4, 8, 22.
    CHECK(multitypes(1, 1).size() == 1);
    CHECK(multitypes(3, 1).size() == 8);
    CHECK(multitypes(4, 1).size() == 22);

    // Split types of size n are multisets of nonzero multipartitions.
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; n <= 4; ++n) {
            const auto st = split_types(n, k);
            for (const auto& s : st) CHECK(s.size() == n);
            CHECK(std::set<SplitType>(st.begin(), st.end()).size() == st.size());
            const auto mt = multitypes(n, k);
            std::set<SplitType> images;
            for (const auto& w : mt) {
                CHECK(w.size() == n);
                CHECK(w.plus_partition().size() == n);
                images.insert(SplitType::flatten(w));
            }
            CHECK(images == std::set<SplitType>(st.begin(), st.end()));
        }
    }
    // Sizes at k = 3 used for cost estimates.
    CHECK(split_types(3, 3).size() == 36);
}

TEST_CASE("fiber bijection") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& s : split_types(n, 2)) {
            const auto labels = s.fiber_labels();
            std::set<MultiType> fiber;
            for (const auto& lab : labels) {
                const auto w = s.fiber_element(lab);
                CHECK(SplitType::flatten(w) == s);
                fiber.insert(w);
            }
            CHECK(fiber.size() == labels.size());
            std::size_t count = 0;
            for (const auto& w : multitypes(n, 2)) count += SplitType::flatten(w) == s;
            CHECK(count == labels.size());
        }
    }
}

TEST_CASE("sn_character") {
    CHECK(sn_character(Partition{4}, Partition{2, 1, 1}) == 1);
    CHECK(sn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(sn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(frobenius_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK_THROWS(sn_character(Partition{2}, Partition{1}));

    for (int n = 1; n <= 5; ++n) {
        for (const auto& lam : partitions(n)) {
            for (const auto& rho : partitions(n)) {
                CHECK(sn_character(lam, rho) == frobenius_character(lam, rho));
            }
        }
    }
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        const auto& ps = partitions(n);
        const auto& table = character_table(n);
        for (std::size_t a = 0; a < ps.size(); ++a) {
            for (std::size_t b = 0; b < ps.size(); ++b) {
                Rational s = 0;
                for (std::size_t r = 0; r < ps.size(); ++r) {
                    s += Rational(table[a][r] * table[b][r]) / Rational(static_cast<long>(ps[r].z()));
                }
                CHECK(s == Rational(a == b ? 1 : 0));
            }
        }
    }
}

TEST_CASE("kostka numbers") {
    CHECK(kostka_number(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(brute_kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka_number(Partition{1, 1}, Partition{2}) == 0);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lam : partitions(n)) {
            CHECK(kostka_number(lam, lam) == 1);
            for (const auto& mu : partitions(n)) {
                const auto k = kostka_number(lam, mu);
                CHECK(k == brute_kostka(lam, mu));
                CHECK((k != 0) == dominance_leq(mu, lam));
            }
        }
    }
}

TEST_CASE("inverse kostka") {
    CHECK(inverse_kostka_row(Partition{3}) == std::map<Partition, std::int64_t>{{Partition{3}, 1}});
    CHECK(inverse_kostka_row(Partition{1, 1}) ==
          std::map<Partition, std::int64_t>{{Partition{1, 1}, 1}, {Partition{2}, -1}});
    CHECK(inverse_kostka_row(Partition{1, 1, 1}) ==
          std::map<Partition, std::int64_t>{{Partition{1, 1, 1}, 1}, {Partition{2, 1}, -2}, {Partition{3}, 1}});

    // s_μ = Σ_λ K*_{μλ} h_λ and h_λ = Σ_ν K_{νλ} s_ν give K* Kᵀ = 1.
    for (int n = 1; n <= 8; ++n) {
        for (const auto& mu : partitions(n)) {
            const auto row = inverse_kostka_row(mu);
            for (const auto& nu : partitions(n)) {
                std::int64_t s = 0;
                for (const auto& [lam, c] : row) s += c * kostka_number(nu, lam);
                CHECK(s == (nu == mu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("type coefficients") {
    const MultiPartition mu{{2, 1}};
    auto one = type_coeffs(MultiType({{{1, mu}, 1}}));
    CHECK(one.log_coeff == 1);
    CHECK(one.exp_coeff == 1);
    auto d2 = type_coeffs(MultiType({{{2, mu}, 1}}));
    CHECK(d2.log_coeff == Rational(-1, 2));
    CHECK(d2.exp_coeff == Rational(1, 2));
    auto m2 = type_coeffs(MultiType({{{1, mu}, 2}}));
    CHECK(m2.log_coeff == Rational(-1, 2));
    CHECK(m2.exp_coeff == Rational(1, 2));
    // Mixed degrees have no Log coefficient.
    CHECK(type_coeffs(MultiType({{{1, mu}, 1}, {{2, mu}, 1}})).log_coeff == 0);
    CHECK_THROWS_AS(type_coeffs(MultiType()), std::invalid_argument);

    // Fiber sums of A are 1, and A equals 1/Π z_{λ^i} along the bijection.
    for (int n = 1; n <= 4; ++n) {
        for (const auto& s : split_types(n, 2)) {
            Rational total = 0;
            for (const auto& lab : s.fiber_labels()) {
                const Rational a = type_coeffs(s.fiber_element(lab)).exp_coeff;
                Integer z = 1;
                for (const auto& l : lab) z *= static_cast<long>(l.z());
                CHECK(a == Rational(1) / Rational(z));
                total += a;
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("multi-type invariants") {
    CHECK_THROWS(MultiType({{{0, MultiPartition{{1}}}, 1}}));
    CHECK_THROWS(MultiType({{{1, MultiPartition::zero(1)}, 1}}));
    CHECK_THROWS(MultiType({{{1, MultiPartition{{1}}}, 0}}));
    const MultiType w({{{2, MultiPartition{{1}, {1}}}, 1}, {{1, MultiPartition{{2}, {1, 1}}}, 1}});
    CHECK(w.size() == 4);
    CHECK(w.total_multiplicity() == 2);
    CHECK_FALSE(w.is_split());
    CHECK(w.plus_partition() == MultiPartition{{4}, {3, 1}});
    CHECK(w.coordinate(1).arity() == 1);
    CHECK(w.coordinate(1).size() == 4);
}
