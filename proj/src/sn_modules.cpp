#include "unitensor/sn_modules.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "unitensor/kernel.hpp"
#include "unitensor/symfunc.hpp"

namespace unitensor {

namespace {

std::mutex& c_mutex() {
    static std::mutex m;
    return m;
}

// Schur expansion of s_τ for a one-set multi-type τ.
const std::map<Partition, Integer>& single_schur(const MultiType& tau) {
    static std::map<MultiType, std::map<Partition, Integer>> cache;
    {
        std::lock_guard lock(c_mutex());
        auto it = cache.find(tau);
        if (it != cache.end()) return it->second;
    }
    std::map<Partition, Rational> power{{Partition(), Rational(1)}};
    for (const auto& [key, mult] : tau.entries()) {
        const auto& [d, nu] = key;
        for (int j = 0; j < mult; ++j) {
            std::map<Partition, Rational> next;
            for (const auto& [left, c] : power) {
                for (const auto& [rho, w] : schur_in_power(nu[0])) next[left.join(rho.scaled(d))] += c * w;
            }
            power = std::move(next);
        }
    }
    std::map<Partition, Integer> out;
    for (const auto& lambda : partitions(tau.size())) {
        Rational v = 0;
        for (const auto& [rho, c] : power) {
            if (c != 0) v += c * Rational(static_cast<long>(sn_character(lambda, rho)));
        }
        if (!is_integer(v)) throw std::logic_error("c_omega_mu: non-integral Schur coefficient");
        if (v != 0) out.emplace(lambda, v.get_num());
    }
    std::lock_guard lock(c_mutex());
    return cache.emplace(tau, std::move(out)).first->second;
}

Integer labels_product(const std::vector<Partition>& taus, const std::vector<Partition>& labels) {
    Integer p = 1;
    for (std::size_t i = 0; i < taus.size() && p != 0; ++i) p *= static_cast<long>(sn_character(taus[i], labels[i]));
    return p;
}

}  // namespace

Integer c_omega_mu(const MultiType& omega, const MultiPartition& mu) {
    if (omega.size() != mu.size()) return 0;
    if (omega.empty()) return 1;
    if (omega.arity() != mu.arity()) throw std::invalid_argument("c_omega_mu: arity mismatch");
    Integer out = 1;
    for (int i = 0; i < mu.arity() && out != 0; ++i) {
        const auto& table = single_schur(omega.coordinate(i));
        auto it = table.find(mu[i]);
        out *= it == table.end() ? Integer(0) : it->second;
    }
    return out;
}

Integer ModuleDecomposition::trivial_multiplicity() const {
    std::vector<Partition> key;
    for (const auto& [alpha, n] : split.factors()) key.push_back(Partition::row(n));
    auto it = multiplicities.find(key);
    return it == multiplicities.end() ? Integer(0) : it->second;
}

Integer ModuleDecomposition::character(const std::vector<Partition>& labels) const {
    Integer v = 0;
    for (const auto& [taus, m] : multiplicities) v += m * labels_product(taus, labels);
    return v;
}

Integer ModuleDecomposition::dimension() const {
    std::vector<Partition> labels;
    for (const auto& [alpha, n] : split.factors()) labels.push_back(Partition::column(n));
    return character(labels);
}

ModuleDecomposition decompose_module(const SplitType& split, const MultiPartition& mu) {
    if (split.size() != mu.size()) throw std::invalid_argument("decompose_module: size mismatch");
    ModuleDecomposition out{split, {}};
    const auto labels = split.fiber_labels();
    std::vector<Integer> trace;
    std::vector<Rational> inv_z;
    for (const auto& lab : labels) {
        trace.push_back(c_omega_mu(split.fiber_element(lab), mu));
        Integer z = 1;
        for (const auto& p : lab) z *= static_cast<long>(p.z());
        inv_z.push_back(Rational(1) / Rational(z));
    }
    // Class-sum inner product: m_τ = Σ_classes (1/z_λ) χ(λ) Π χ^{τ^i}_{λ^i}.
    for (const auto& taus : labels) {
        Rational m = 0;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (trace[j] == 0) continue;
            m += inv_z[j] * Rational(trace[j] * labels_product(taus, labels[j]));
        }
        if (!is_integer(m) || m < 0) {
            throw std::logic_error("decompose_module: multiplicity " + m.get_str() + " for " +
                                   format_split_type(split) + " at " + format_multipartition(mu));
        }
        if (m != 0) out.multiplicities.emplace(taus, m.get_num());
    }
    return out;
}

std::set<std::vector<Partition>> r_set(const SplitType& split, const MultiPartition& mu) {
    std::set<std::vector<Partition>> out;
    for (const auto& [taus, m] : decompose_module(split, mu).multiplicities) out.insert(taus);
    return out;
}

bool nonzero_criterion(const MultiPartition& mu, const VAtOne& v_at_one) {
    if (mu.size() < 1) throw std::invalid_argument("nonzero_criterion: |μ| must be positive");
    std::map<MultiPartition, Integer> v1;
    auto lookup = [&](const MultiPartition& a) {
        auto it = v1.find(a);
        if (it == v1.end()) it = v1.emplace(a, v_at_one(a)).first;
        return it->second;
    };
    for (const auto& split : split_types(mu.size(), mu.arity())) {
        const auto factors = split.factors();
        bool positive = true;
        for (const auto& [alpha, n] : factors) {
            if (lookup(alpha) <= 0) {
                positive = false;
                break;
            }
        }
        if (!positive) continue;
        for (const auto& [taus, m] : decompose_module(split, mu).multiplicities) {
            bool fits = true;
            for (std::size_t i = 0; i < factors.size() && fits; ++i) fits = taus[i].length() <= lookup(factors[i].first);
            if (fits) return true;
        }
    }
    return false;
}

bool nonzero_criterion(const MultiPartition& mu, int genus) {
    return nonzero_criterion(mu, [genus](const MultiPartition& a) {
        return v_poly(a, genus).evaluate(Rational(1)).get_num();
    });
}

Integer sigma(const std::vector<long>& c, const std::vector<long>& x) {
    long cmax = 0;
    Integer csum = 0;
    for (long v : c) {
        if (v < 0) throw std::invalid_argument("sigma: negative entry");
        cmax = std::max(cmax, v);
        csum += v;
    }
    Integer xsum = 0, xsq = 0;
    for (long v : x) {
        if (v < 0) throw std::invalid_argument("sigma: negative entry");
        xsum += v;
        xsq += Integer(v) * v;
    }
    return Integer(cmax) * xsum * xsum - csum * xsq;
}

HarcosReport harcos_verify(int samples, std::mt19937_64& rng) {
    HarcosReport report;
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto describe = [](const std::vector<long>& v) {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ')';
        return os.str();
    };
    for (int s = 0; s < samples; ++s) {
        // Vector form.
        const int len = uniform(1, 5);
        const int pieces = uniform(1, 4);
        std::vector<std::vector<long>> xs(pieces, std::vector<long>(len));
        std::vector<long> c(len, 0);
        for (auto& x : xs) {
            for (int j = 0; j < len; ++j) {
                x[j] = uniform(0, 5);
                c[j] += x[j];
            }
        }
        Integer rhs = 0;
        for (const auto& x : xs) rhs += sigma(c, x);
        if (sigma(c, c) < rhs) report.failures.push_back("vector form fails at c=" + describe(c));
        ++report.checked;

        // Partition form with μ ⊴ Σ α^i.
        std::vector<Partition> alphas;
        Partition total;
        for (int i = 0; i < pieces; ++i) {
            std::vector<int> parts;
            for (int j = uniform(1, 4); j > 0; --j) parts.push_back(uniform(1, 4));
            alphas.emplace_back(parts);
            total = total.plus(alphas.back());
        }
        std::vector<int> mu_parts = total.parts();
        for (int moves = uniform(0, 6); moves > 0; --moves) {
            const int a = uniform(0, static_cast<int>(mu_parts.size()) - 1);
            const int b = uniform(a + 1, static_cast<int>(mu_parts.size()));
            if (mu_parts[a] == 0) continue;
            if (b == static_cast<int>(mu_parts.size())) mu_parts.push_back(0);
            --mu_parts[a];
            ++mu_parts[b];
            Partition candidate(mu_parts);
            if (!dominance_leq(candidate, total)) {
                ++mu_parts[a];
                --mu_parts[b];
            }
            mu_parts = Partition(mu_parts).parts();
        }
        const Partition mu(mu_parts);
        if (!dominance_leq(mu, total)) continue;
        std::vector<long> mu_vec(mu.parts().begin(), mu.parts().end());
        Integer sum = 0;
        for (const auto& a : alphas) sum += sigma(mu_vec, std::vector<long>(a.parts().begin(), a.parts().end()));
        if (sigma(mu_vec, mu_vec) < sum) report.failures.push_back("partition form fails at μ=" + format_partition(mu));
        ++report.checked;
    }
    return report;
}

}  // namespace unitensor
