#include "unitensor/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "unitensor/hall_littlewood.hpp"
#include "unitensor/kernel.hpp"
#include "unitensor/oracle_glfq.hpp"
#include "unitensor/quiver_roots.hpp"
#include "unitensor/sn_modules.hpp"
#include "unitensor/symfunc.hpp"

namespace unitensor {

namespace {

constexpr std::size_t kMaxMessages = 40;

class Recorder {
public:
    explicit Recorder(SuiteResult& r) : r_(r) {}

    void expect(bool ok, const std::function<std::string()>& what) {
        ++r_.checked;
        if (ok) return;
        if (r_.failures.size() < kMaxMessages) {
            r_.failures.push_back(what());
        } else {
            ++dropped_;
        }
    }

    void finish() {
        if (dropped_ > 0) r_.failures.push_back("(" + std::to_string(dropped_) + " further failures)");
    }

private:
    SuiteResult& r_;
    std::int64_t dropped_ = 0;
};

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

std::string at(const MultiPartition& mu, int g) { return format_multipartition(mu) + " g=" + std::to_string(g); }

std::string poly(const TPoly& p) { return p.to_string(); }

bool is_root(const MultiPartition& mu, int g) {
    const auto [quiver, v] = build_quiver(mu, g);
    return classify_root(v, quiver).tag != RootTag::not_root;
}

RootTag root_tag(const MultiPartition& mu, int g) {
    const auto [quiver, v] = build_quiver(mu, g);
    return classify_root(v, quiver).tag;
}

// ------------------------------------------------------------------ suites

void thm332(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 4);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) {
                const TPoly v = v_poly(mu, g);
                const RootTag tag = root_tag(mu, g);
                const bool root = tag != RootTag::not_root;
                rec.expect(!v.is_zero() == root, [&] { return "V≠0 ⇔ root fails at " + at(mu, g); });
                if (!root) continue;
                const auto d = d_mu(mu, g);
                rec.expect(v.is_monic() && d % 2 == 0 && v.degree() == d / 2, [&] {
                    return "V=" + poly(v) + " not monic of degree d/2=" + std::to_string(d) + "/2 at " + at(mu, g);
                });
                rec.expect(v.is_one() == (tag == RootTag::real), [&] { return "V=1 ⇔ real fails at " + at(mu, g); });
            }
        }
    }
}

void thm342(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 4);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) {
                const bool crit = nonzero_criterion(mu, g);
                const bool nonzero = !u_poly(mu, g).is_zero();
                rec.expect(crit == nonzero, [&] {
                    return std::string("criterion=") + (crit ? "true" : "false") + " but U" + (nonzero ? "≠" : "=") +
                           "0 at " + at(mu, g);
                });
            }
        }
    }
}

void check_347(Recorder& rec, const MultiPartition& mu, int g) {
    const TPoly u = u_poly(mu, g);
    const auto d = d_mu(mu, g);
    const auto dl = delta(mu, g);
    if (is_root(mu, g)) {
        rec.expect(u.degree() >= d / 2, [&] { return "deg U < d/2 at " + at(mu, g); });
    }
    if (dl >= 2) {
        rec.expect(u.degree() == d / 2, [&] { return "deg U=" + std::to_string(u.degree()) + " ≠ d/2 at " + at(mu, g); });
    }
    if (dl >= 3 || (g == 0 && mu.arity() == 3 && dl == 2)) {
        rec.expect(u.is_monic(), [&] { return "U=" + poly(u) + " not monic at " + at(mu, g); });
    }
}

void thm347(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 4);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) check_347(rec, mu, g);
        }
    }
    // Spot checks one size up.
    const int spots = pick(o.samples, 30);
    if (spots == 0) return;
    std::mt19937_64 rng(o.seed);
    const auto pool = multipartitions(max_n + 1, 3);
    std::uniform_int_distribution<std::size_t> pick_mu(0, pool.size() - 1);
    for (int s = 0; s < spots; ++s) check_347(rec, pool[pick_mu(rng)], s % 2);
}

void eq333(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 4);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            const auto all = multipartitions(n, 3);
            std::map<MultiPartition, TPoly> a;
            for (const auto& mu : all) {
                a[mu] = a_poly(mu, g);
                const TPoly ak = a_poly_kostka(mu, g);
                rec.expect(a[mu] == ak, [&] {
                    return "A direct " + poly(a[mu]) + " ≠ A via Kostka " + poly(ak) + " at " + at(mu, g);
                });
            }
            // Inverse direction: V_μ = Σ_λ Π K*_{μ^i λ^i} A_λ.
            for (const auto& mu : all) {
                TPoly v;
                std::vector<std::pair<std::vector<Partition>, Integer>> terms{{{}, Integer(1)}};
                for (int i = 0; i < 3; ++i) {
                    std::vector<std::pair<std::vector<Partition>, Integer>> next;
                    for (const auto& [parts, w] : terms) {
                        for (const auto& [lam, c] : inverse_kostka_row(mu[i])) {
                            auto p = parts;
                            p.push_back(lam);
                            next.emplace_back(std::move(p), w * static_cast<long>(c));
                        }
                    }
                    terms = std::move(next);
                }
                for (const auto& [parts, w] : terms) v += a.at(MultiPartition(parts)) * Rational(w);
                const TPoly expected = v_poly(mu, g);
                rec.expect(v == expected, [&] { return "Σ K* A ≠ V at " + at(mu, g); });
            }
        }
    }
}

void eq344(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 3);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) {
                const auto report = decomposition_check(mu, g);
                rec.expect(report.ok(), [&] {
                    std::string msg = "decomposition fails at " + at(mu, g);
                    for (const auto& f : report.failures) msg += "; " + f;
                    return msg;
                });
                bool some_trivial = false;
                for (const auto& split : split_types(n, 3)) {
                    bool all_root = true, all_real = true;
                    for (const auto& [alpha, m] : split.factors()) {
                        const RootTag tag = root_tag(alpha, g);
                        all_root = all_root && tag != RootTag::not_root;
                        all_real = all_real && tag == RootTag::real;
                    }
                    if (!all_root) continue;
                    const Integer triv = decompose_module(split, mu).trivial_multiplicity();
                    const TPoly w = w_poly(split, mu, g);
                    const auto d = d_split(split, g);
                    const auto where = [&] { return format_split_type(split) + " at " + at(mu, g); };
                    if (triv != 0) {
                        some_trivial = true;
                        rec.expect(w.degree() == d / 2 && w.leading() == Rational(triv),
                                   [&] { return "leading term of W=" + poly(w) + " is not ⟨ℂ,1⟩t^{d/2} for " + where(); });
                    }
                    if (all_real) {
                        rec.expect(w == TPoly(Rational(triv)), [&] { return "W=" + poly(w) + " ≠ ⟨ℂ,1⟩ for " + where(); });
                    }
                    const auto factors = split.factors();
                    if (factors.size() == 1 && factors[0].second == 1) {
                        rec.expect(triv == (factors[0].first == mu ? 1 : 0),
                                   [&] { return "⟨ℂ,1⟩ ≠ δ for singleton " + where(); });
                    }
                }
                if (some_trivial) {
                    rec.expect(!u_poly(mu, g).is_zero(), [&] { return "U=0 despite a nonzero ⟨ℂ,1⟩ at " + at(mu, g); });
                }
            }
        }
    }
}

void eq342(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 4);
    for (int g = 0; g <= 1; ++g) {
        std::map<MultiPartition, TRat> v_expansion;
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) v_expansion.emplace(mu, TRat(v_poly(mu, g)));
        }
        const auto u = plethystic_exp(from_basis(Basis::schur, v_expansion, 3, max_n));
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) {
                const TRat got = schur_coefficient(u, mu);
                const TPoly expected = u_poly(mu, g);
                rec.expect(got == TRat(expected), [&] { return "Exp Σ V s gives " + got.to_string() + " ≠ U at " + at(mu, g); });
            }
        }
    }
}

void lemma333(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 6);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            const auto& parts = partitions(n);
            const std::size_t p = parts.size();
            std::vector<char> leq(p * p);
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t j = 0; j < p; ++j) leq[i * p + j] = dominance_leq(parts[i], parts[j]);
            }
            const auto all = multipartitions(n, 3);
            std::vector<std::array<std::size_t, 3>> idx;
            std::vector<std::int64_t> d;
            for (const auto& mu : all) {
                idx.push_back({partition_index(mu[0]), partition_index(mu[1]), partition_index(mu[2])});
                d.push_back(d_mu(mu, g));
            }
            for (std::size_t a = 0; a < all.size(); ++a) {
                for (std::size_t b = 0; b < all.size(); ++b) {
                    if (a == b) continue;
                    bool below = true;
                    for (int i = 0; i < 3 && below; ++i) below = leq[idx[a][i] * p + idx[b][i]];
                    if (!below) continue;
                    rec.expect(d[a] > d[b], [&] {
                        return format_multipartition(all[a]) + " ◁ " + format_multipartition(all[b]) +
                               " but d does not drop, g=" + std::to_string(g);
                    });
                }
            }
        }
    }
}

void prop321(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 5);
    for (int k = 1; k <= 3; ++k) {
        for (int g = 0; g <= 1; ++g) {
            for (int n = 1; n <= max_n; ++n) {
                for (const auto& mu : multipartitions(n, k)) {
                    const auto [quiver, v] = build_quiver(mu, g);
                    const bool fundamental = in_fundamental_set(v, quiver);
                    rec.expect(fundamental == (delta(mu, g) >= 0),
                               [&] { return "fundamental set ⇔ δ≥0 fails at " + at(mu, g); });
                }
            }
        }
    }
}

void roots(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 5);
    std::mt19937_64 rng(o.seed);
    for (int k = 1; k <= 3; ++k) {
        for (int g = 0; g <= 1; ++g) {
            for (int n = 1; n <= max_n; ++n) {
                for (const auto& mu : multipartitions(n, k)) {
                    const auto [quiver, v] = build_quiver(mu, g);
                    const auto rc = classify_root(v, quiver);
                    rec.expect(replay_witness(rc, quiver) == v, [&] { return "witness does not replay at " + at(mu, g); });
                    rec.expect(classify_root_random(v, quiver, rng).tag == rc.tag,
                               [&] { return "random descent disagrees at " + at(mu, g); });
                    const auto d = d_mu(mu, g);
                    if (rc.tag == RootTag::real) rec.expect(d == 0, [&] { return "real root with d≠0 at " + at(mu, g); });
                    if (in_fundamental_set(v, quiver)) {
                        rec.expect(d >= 2 && d % 2 == 0, [&] { return "fundamental element with odd or small d at " + at(mu, g); });
                    }
                    for (int i = 0; i < quiver.vertex_count(); ++i) {
                        if (quiver.has_loops(i)) continue;
                        const DimVector r = quiver.reflect(v, i);
                        rec.expect(quiver.reflect(r, i) == v && quiver.form(r, r) == quiver.form(v, v),
                                   [&] { return "reflection not an isometric involution at " + at(mu, g); });
                    }
                }
            }
        }
    }
}

MultiPartition random_multipartition(int n, int k, std::mt19937_64& rng) {
    std::vector<Partition> comps;
    const auto& parts = partitions(n);
    std::uniform_int_distribution<std::size_t> d(0, parts.size() - 1);
    for (int i = 0; i < k; ++i) comps.push_back(parts[d(rng)]);
    return MultiPartition(comps);
}

void prop349(Recorder& rec, const SuiteOptions& o) {
    const int samples = pick(o.samples, 500);
    std::mt19937_64 rng(o.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int s = 0; s < samples; ++s) {
        const int g = uniform(0, 1);
        const int count = uniform(1, 4);
        std::vector<MultiPartition> alphas;
        for (int i = 0; i < count; ++i) alphas.push_back(random_multipartition(uniform(1, 3), 3, rng));
        MultiPartition total = alphas[0];
        for (int i = 1; i < count; ++i) total = total.plus(alphas[i]);
        // μ uniformly among the multipartitions below Σ α_i.
        std::vector<Partition> comps;
        for (int i = 0; i < 3; ++i) {
            std::vector<Partition> below;
            for (const auto& lam : partitions(total.size())) {
                if (dominance_leq(lam, total[i])) below.push_back(lam);
            }
            comps.push_back(below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)]);
        }
        const MultiPartition mu(comps);
        const auto dl = delta(mu, g);
        bool hyp = true, strict_hyp = false;
        std::int64_t sum = 0;
        for (const auto& a : alphas) {
            hyp = hyp && dl * a.size() >= 2;
            strict_hyp = strict_hyp || dl * a.size() > 2;
            sum += d_mu(a, g);
        }
        if (!hyp) continue;
        const auto d = d_mu(mu, g);
        const auto where = [&] {
            std::string msg = at(mu, g) + " with α =";
            for (const auto& a : alphas) msg += " " + format_multipartition(a);
            return msg;
        };
        rec.expect(d >= sum, [&] { return "d_μ < Σ d_α for " + where(); });
        if (count >= 2 && (strict_hyp || (g == 0 && dl >= 2))) {
            rec.expect(d > sum, [&] { return "d_μ = Σ d_α (expected strict) for " + where(); });
        }
    }
}

void prop233(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 4);
    std::map<MultiPartition, SymFunc<Rational>> schur;
    auto s = [&](const MultiPartition& a) -> const SymFunc<Rational>& {
        auto it = schur.find(a);
        if (it == schur.end()) {
            it = schur.emplace(a, from_basis(Basis::schur, std::map<MultiPartition, Rational>{{a, Rational(1)}}, 3, max_n))
                     .first;
        }
        return it->second;
    };
    for (int n = 1; n <= max_n; ++n) {
        const auto all = multipartitions(n, 3);
        for (const auto& split : split_types(n, 3)) {
            const auto labels = split.fiber_labels();
            bool multiplicity_free = true;
            for (const auto& [alpha, m] : split.factors()) multiplicity_free = multiplicity_free && m == 1;
            std::map<MultiPartition, Rational> lr;
            if (multiplicity_free) {
                SymFunc<Rational> prod = SymFunc<Rational>::constant(3, max_n, Rational(1));
                for (const auto& [alpha, m] : split.factors()) prod = multiply(prod, s(alpha));
                lr = to_basis(prod, Basis::schur);
            }
            for (const auto& mu : all) {
                const auto dec = decompose_module(split, mu);
                const auto where = [&] { return format_split_type(split) + " at " + format_multipartition(mu); };
                Rational triv = 0;
                for (const auto& lab : labels) {
                    const MultiType omega = split.fiber_element(lab);
                    const Integer c = c_omega_mu(omega, mu);
                    rec.expect(dec.character(lab) == c, [&] { return "character ≠ c_ω^μ on a fiber class for " + where(); });
                    triv += type_coeffs(omega).exp_coeff * Rational(c);
                }
                rec.expect(triv == Rational(dec.trivial_multiplicity()),
                           [&] { return "Σ A_ω c_ω^μ ≠ ⟨ℂ,1⟩ for " + where(); });
                if (multiplicity_free) {
                    auto it = lr.find(mu);
                    const Rational expected = it == lr.end() ? Rational(0) : it->second;
                    rec.expect(Rational(dec.dimension()) == expected,
                               [&] { return "dim ℂ ≠ Littlewood–Richardson product for " + where(); });
                }
            }
        }
    }
}

void harcos(Recorder& rec, const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    const auto report = harcos_verify(pick(o.samples, 500), rng);
    for (int i = 0; i < report.checked; ++i) rec.expect(true, [] { return std::string(); });
    for (const auto& f : report.failures) rec.expect(false, [&] { return f; });
}

// Random monomial family a_μ = c_μ t^{e_μ} p_μ, a_0 = 1.
std::map<MultiPartition, SymFunc<TRat>> monomial_family(int k, int N, std::mt19937_64& rng) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::map<MultiPartition, SymFunc<TRat>> family;
    for (int m = 1; m <= N; ++m) {
        for (const auto& mu : multipartitions(m, k)) {
            const TRat c(TPoly::monomial(uniform(0, 2), Rational(uniform(-3, 3))));
            family.emplace(mu, SymFunc<TRat>::power_sum(mu, N, c));
        }
    }
    return family;
}

void lemma22x(Recorder& rec, const SuiteOptions& o, bool log_side) {
    const int N = pick(o.max_n, 3);
    const int trials = pick(o.samples, 4);
    std::mt19937_64 rng(o.seed);
    for (int k = 1; k <= 2; ++k) {
        for (int trial = 0; trial < trials; ++trial) {
            const auto family = monomial_family(k, N, rng);
            SymFunc<TRat> sum(k, N);
            for (const auto& [mu, a] : family) sum += a;
            SymFunc<TRat> lhs = log_side ? plethystic_log(sum + SymFunc<TRat>::constant(k, N, TRat(1)))
                                         : plethystic_exp(sum);
            SymFunc<TRat> rhs = log_side ? SymFunc<TRat>(k, N) : SymFunc<TRat>::constant(k, N, TRat(1));
            for (int m = 1; m <= N; ++m) {
                for (const auto& omega : multitypes(m, k)) {
                    const auto coeffs = type_coeffs(omega);
                    const Rational c = log_side ? coeffs.log_coeff : coeffs.exp_coeff;
                    if (c == 0) continue;
                    rhs += family_type_value(family, omega, k, N).scale(c);
                }
            }
            rec.expect(lhs == rhs, [&] {
                return std::string(log_side ? "Log" : "Exp") + " expansion mismatch for k=" + std::to_string(k) +
                       " trial " + std::to_string(trial);
            });
        }
    }
}

void product(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 3);
    for (int k = 1; k <= 3; ++k) {
        for (int g = 0; g <= 1; ++g) {
            for (long q : {2L, 3L}) {
                rec.expect(product_identity_check(max_n, k, g, q), [&] {
                    return "product identity fails at n=" + std::to_string(max_n) + " k=" + std::to_string(k) +
                           " g=" + std::to_string(g) + " q=" + std::to_string(q);
                });
            }
        }
    }
}

void symmetry(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 4);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) {
                std::vector<int> perm{0, 1, 2};
                const TPoly u = u_poly(mu, g), v = v_poly(mu, g);
                while (std::next_permutation(perm.begin(), perm.end())) {
                    const MultiPartition p({mu[perm[0]], mu[perm[1]], mu[perm[2]]});
                    rec.expect(u_poly(p, g) == u && v_poly(p, g) == v,
                               [&] { return "not invariant under permuting " + at(mu, g); });
                }
            }
        }
    }
}

void interp(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 3);
    for (int g = 0; g <= 1; ++g) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& mu : multipartitions(n, 3)) {
                const TPoly a = u_poly_interpolated(mu, g), b = u_poly(mu, g);
                rec.expect(a == b, [&] { return "interpolated " + poly(a) + " ≠ " + poly(b) + " at " + at(mu, g); });
            }
        }
    }
}

std::string group(int n, int q) { return "GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")"; }

void oracle(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 3);
    for (int q : {2, 3}) {
        for (int n = 1; n <= max_n; ++n) {
            for (int k = 1; k <= 3; ++k) {
                for (int g = 0; g <= 1; ++g) {
                    for (const auto& mu : multipartitions(n, k)) {
                        const Integer brute = tensor_inner_product(mu, g, q);
                        const Rational pipe = u_poly(mu, g).evaluate(Rational(q));
                        rec.expect(Rational(brute) == pipe, [&] {
                            return "oracle " + brute.get_str() + " ≠ U(q)=" + pipe.get_str() + " at " + at(mu, g) +
                                   " over " + group(n, q);
                        });
                    }
                }
            }
        }
    }
}

void generic(Recorder& rec, const SuiteOptions&) {
    for (int q : {3, 5}) {
        for (int g = 0; g <= 1; ++g) {
            for (int k = 1; k <= 3; ++k) {
                for (const auto& mu : multipartitions(2, k)) {
                    // Any odd number of quadratic twists has generic product.
                    for (int twisted = 1; twisted <= k; twisted += 2) {
                        std::vector<int> twists(k, 1);
                        for (int i = 0; i < twisted; ++i) twists[i] = 2;
                        const Integer brute = generic_inner_product(mu, twists, g, q);
                        const Rational pipe = v_poly(mu, g).evaluate(Rational(q));
                        rec.expect(Rational(brute) == pipe, [&] {
                            return "generic oracle " + brute.get_str() + " ≠ V(q)=" + pipe.get_str() + " at " + at(mu, g) +
                                   " q=" + std::to_string(q);
                        });
                    }
                }
            }
        }
    }
}

void locks(Recorder& rec, const SuiteOptions& o) {
    const int max_n = pick(o.max_n, 3);
    for (int n = 1; n <= 6; ++n) {
        const TPoly st = modified_kostka(Partition::column(n), Partition::column(n));
        rec.expect(st == TPoly::monomial(n * (n - 1) / 2), [&] { return "K̃_{1^n,1^n} ≠ t^{n(n-1)/2} for n=" + std::to_string(n); });
    }
    for (int q : {2, 3}) {
        for (int n = 1; n <= max_n; ++n) {
            const auto& G = enumerate_classes(n, q);
            std::map<MultiPartition, SymFunc<TRat>> ht;
            std::map<MultiPartition, TRat> hw0, hw1;
            for (int m = 1; m <= n; ++m) {
                for (const auto& lam : partitions(m)) {
                    ht.emplace(MultiPartition({lam}), htilde(lam, n));
                    hw0.emplace(MultiPartition({lam}), h_weight(lam, 0));
                    hw1.emplace(MultiPartition({lam}), h_weight(lam, 1));
                }
            }
            for (const auto& cls : G.classes) {
                const auto h = family_type_value(ht, cls.class_type, 1, n);
                const auto where = [&] { return format_multitype(cls.class_type) + " in " + group(n, q); };
                for (const auto& mu : partitions(n)) {
                    const Rational lhs = schur_coefficient(h, MultiPartition({mu})).evaluate(Rational(q));
                    rec.expect(lhs == Rational(cls.char_values.at(mu)), [&] {
                        return "⟨H̃_ω(q), s_" + format_partition(mu) + "⟩ ≠ character value on " + where();
                    });
                }
                for (int g = 0; g <= 1; ++g) {
                    const Rational lhs = family_type_value(g == 0 ? hw0 : hw1, cls.class_type).evaluate(Rational(q));
                    Integer e = 1;
                    for (int j = 0; j < g * cls.centralizer_dim; ++j) e *= q;
                    const Rational rhs = Rational(e * cls.size) / Rational(Integer(G.order));
                    rec.expect(lhs == rhs, [&] { return "ℋ_ω(q) ≠ ℰ/a_C at g=" + std::to_string(g) + " on " + where(); });
                }
                if (cls.representative == FqMatrix::identity(n, q)) {
                    Integer e = 1;
                    for (int j = 0; j < n * (n - 1) / 2; ++j) e *= q;
                    rec.expect(cls.char_values.at(Partition::column(n)) == e,
                               [&] { return "St(1) ≠ q^{n(n-1)/2} in " + group(n, q); });
                }
            }
        }
    }
}

using SuiteFn = std::function<void(Recorder&, const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"thm332", thm332},
        {"thm342", thm342},
        {"thm347", thm347},
        {"eq333", eq333},
        {"eq342", eq342},
        {"eq344", eq344},
        {"lemma333", lemma333},
        {"prop321", prop321},
        {"roots", roots},
        {"prop233", prop233},
        {"prop349", prop349},
        {"harcos", harcos},
        {"lemma221", [](Recorder& r, const SuiteOptions& o) { lemma22x(r, o, true); }},
        {"lemma222", [](Recorder& r, const SuiteOptions& o) { lemma22x(r, o, false); }},
        {"product", product},
        {"symmetry", symmetry},
        {"interp", interp},
        {"oracle", oracle},
        {"generic", generic},
        {"locks", locks},
    };
    return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> c{
        {"thm332", "V ≠ 0 iff v_μ is a root; V monic of degree d_μ/2; V = 1 iff real (n ≤ 4, k = 3, g ≤ 1)"},
        {"thm342", "nonzero criterion iff U ≠ 0 (n ≤ 4)"},
        {"thm347", "degree and monicity of U from δ(μ) (n ≤ 4, plus random n = 5)"},
        {"eq333", "A via ⟨𝕍, h_μ⟩ equals the Kostka transform of V, and back (n ≤ 4)"},
        {"eq342", "Exp of Σ V_μ s_μ reproduces U (n ≤ 4)"},
        {"eq344", "U = Σ W over split types, leading terms and real-root constants (n ≤ 3)"},
        {"lemma333", "strict dominance strictly lowers d (n ≤ 6)"},
        {"prop321", "fundamental set iff δ ≥ 0 (n ≤ 5)"},
        {"roots", "descent witnesses, random descent, reflection sanity (n ≤ 5)"},
        {"prop233", "module characters match c_ω^μ; Littlewood–Richardson dimensions (sizes ≤ 4)"},
        {"prop349", "d_μ ≥ Σ d_α under dominance (random)"},
        {"harcos", "σ inequality, vector and partition forms (random)"},
        {"lemma221", "Log expansion over multi-types vs Ψ-based Log (k ≤ 2, N ≤ 3)"},
        {"lemma222", "Exp expansion over multi-types vs Ψ-based Exp (k ≤ 2, N ≤ 3)"},
        {"product", "U at t = q from the Euler product over F_q-orbits (n ≤ 3, q ∈ {2,3})"},
        {"symmetry", "U and V invariant under permuting components (n ≤ 4)"},
        {"interp", "point-evaluated pipeline plus interpolation equals the symbolic U (n ≤ 3)"},
        {"oracle", "brute-force GL_n(F_q) multiplicities equal U(q) (n ≤ 3, q ∈ {2,3})"},
        {"generic", "brute-force generic multiplicities equal V(q) (n = 2, q ∈ {3,5})"},
        {"locks", "Hall–Littlewood and centralizer conventions against GL_n(F_q) classes (n ≤ 3)"},
    };
    return c;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    const auto& r = registry();
    auto it = r.find(name);
    if (it == r.end()) throw std::invalid_argument("unknown suite: " + name);
    SuiteResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    Recorder rec(result);
    try {
        it->second(rec, options);
    } catch (const std::exception& e) {
        result.failures.push_back(std::string("exception: ") + e.what());
    }
    rec.finish();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace unitensor
