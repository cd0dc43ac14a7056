#include "unitensor/symfunc.hpp"

#include <mutex>

namespace unitensor {

namespace {

using Expansion = std::vector<std::pair<Partition, Rational>>;

std::mutex& expansion_mutex() {
    static std::mutex m;
    return m;
}

Expansion compute_schur(const Partition& lambda) {
    Expansion out;
    for (const auto& rho : partitions(lambda.size())) {
        const auto chi = sn_character(lambda, rho);
        if (chi == 0) continue;
        out.emplace_back(rho, make_rational(static_cast<long>(chi), static_cast<long>(rho.z())));
    }
    return out;
}

Expansion compute_complete(const Partition& lambda) {
    std::map<Partition, Rational> acc{{Partition(), Rational(1)}};
    for (int part : lambda.parts()) {
        std::map<Partition, Rational> next;
        for (const auto& [left, c] : acc) {
            for (const auto& rho : partitions(part)) {
                next[left.join(rho)] += c * make_rational(1, static_cast<long>(rho.z()));
            }
        }
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

const Expansion& cached(std::map<Partition, Expansion>& cache, const Partition& lambda,
                        Expansion (*compute)(const Partition&)) {
    {
        std::lock_guard lock(expansion_mutex());
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    Expansion e = compute(lambda);
    std::lock_guard lock(expansion_mutex());
    return cache.emplace(lambda, std::move(e)).first->second;
}

}  // namespace

const std::vector<std::pair<Partition, Rational>>& schur_in_power(const Partition& lambda) {
    static std::map<Partition, Expansion> cache;
    return cached(cache, lambda, &compute_schur);
}

const std::vector<std::pair<Partition, Rational>>& complete_in_power(const Partition& lambda) {
    static std::map<Partition, Expansion> cache;
    return cached(cache, lambda, &compute_complete);
}

namespace detail {

std::vector<std::pair<MultiPartition, Rational>> expand_multi(const MultiPartition& mu, Basis basis) {
    std::vector<std::pair<std::vector<Partition>, Rational>> acc{{{}, Rational(1)}};
    for (const auto& comp : mu.components()) {
        const Expansion* single = nullptr;
        Expansion power_only;
        switch (basis) {
            case Basis::schur: single = &schur_in_power(comp); break;
            case Basis::complete: single = &complete_in_power(comp); break;
            case Basis::power:
                power_only = {{comp, Rational(1)}};
                single = &power_only;
                break;
            case Basis::monomial: throw std::invalid_argument("expand_multi: monomial basis is target-only");
        }
        std::vector<std::pair<std::vector<Partition>, Rational>> next;
        next.reserve(acc.size() * single->size());
        for (const auto& [prefix, c] : acc) {
            for (const auto& [rho, w] : *single) {
                auto v = prefix;
                v.push_back(rho);
                next.emplace_back(std::move(v), c * w);
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<MultiPartition, Rational>> out;
    out.reserve(acc.size());
    for (auto& [parts, c] : acc) out.emplace_back(MultiPartition(std::move(parts)), std::move(c));
    return out;
}

}  // namespace detail

}  // namespace unitensor
