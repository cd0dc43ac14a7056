#include "unitensor/kernel.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "unitensor/hall_littlewood.hpp"
#include "unitensor/point_values.hpp"
#include "unitensor/quiver_roots.hpp"
#include "unitensor/sn_modules.hpp"

namespace unitensor {

namespace {

TPoly certify_integer(const TRat& f, bool nonnegative, const char* what, const MultiPartition& mu) {
    TPoly p;
    try {
        p = certify_polynomial(f);
    } catch (const NonPolynomialError&) {
        throw NonPolynomialError(std::string(what) + " at " + format_multipartition(mu) + " is not a polynomial: " +
                                 f.to_string());
    }
    if (!p.has_integer_coeffs() || (nonnegative && !p.has_nonnegative_coeffs())) {
        throw NonPolynomialError(std::string(what) + " at " + format_multipartition(mu) +
                                 " has bad coefficients: " + p.to_string());
    }
    return p;
}

Integer chi_product(const MultiPartition& mu, const MultiPartition& rho) {
    Integer p = 1;
    for (int i = 0; i < mu.arity() && p != 0; ++i) p *= static_cast<long>(sn_character(mu[i], rho[i]));
    return p;
}

bool is_root(const MultiPartition& alpha, int genus) {
    static std::mutex m;
    static std::map<std::pair<MultiPartition, int>, bool> cache;
    std::lock_guard lock(m);
    auto it = cache.find({alpha, genus});
    if (it != cache.end()) return it->second;
    const auto [q, v] = build_quiver(alpha, genus);
    const bool root = classify_root(v, q).tag != RootTag::not_root;
    cache.emplace(std::pair(alpha, genus), root);
    return root;
}

Rational power(long base, long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return Rational(r);
}

// f^N for a series with constant term 1 and an integer N ≥ 0.
SymFunc<Rational> series_power(const SymFunc<Rational>& f, const Integer& exponent) {
    SymFunc<Rational> l = formal_log(f);
    l.scale(Rational(exponent));
    return formal_exp(l);
}

SymFunc<Rational> evaluate_series(const SymFunc<TRat>& f, const Rational& t) {
    SymFunc<Rational> out(f.arity(), f.truncation());
    for (int n = 0; n <= f.truncation(); ++n) {
        SymFunc<Rational>::Grade g;
        for (const auto& [mu, c] : f.grade(n)) g.emplace(mu, c.evaluate(t));
        out.set_grade(n, std::move(g));
    }
    return out;
}

}  // namespace

KernelContext build_kernel(int n, int arity, int genus) {
    if (n < 0 || arity < 1 || genus < 0) throw std::invalid_argument("build_kernel: bad parameters");
    SymFunc<TRat> omega = omega_series(n, arity, genus);
    SymFunc<TRat> v = plethystic_log(omega);
    v *= TRat(TPoly::linear(Rational(1)));
    SymFunc<TRat> u = plethystic_exp(v);
    return KernelContext{n, arity, genus, std::move(omega), std::move(v), std::move(u)};
}

std::shared_ptr<const KernelContext> kernel_context(int n, int arity, int genus) {
    static std::mutex m;
    static std::map<std::pair<int, int>, std::shared_ptr<const KernelContext>> cache;
    std::lock_guard lock(m);
    auto& slot = cache[{arity, genus}];
    if (!slot || slot->n < n) slot = std::make_shared<const KernelContext>(build_kernel(n, arity, genus));
    return slot;
}

TRat schur_coefficient(const SymFunc<TRat>& f, const MultiPartition& mu) {
    if (mu.arity() != f.arity()) throw std::invalid_argument("schur_coefficient: arity mismatch");
    if (mu.size() > f.truncation()) throw std::out_of_range("schur_coefficient: beyond truncation");
    CoeffSum<TRat> acc;
    for (const auto& [rho, c] : f.grade(mu.size())) {
        const Integer chi = chi_product(mu, rho);
        if (chi != 0) acc.add(c, Rational(chi));
    }
    return acc.value();
}

TRat complete_coefficient(const SymFunc<TRat>& f, const MultiPartition& mu) {
    if (mu.arity() != f.arity()) throw std::invalid_argument("complete_coefficient: arity mismatch");
    if (mu.size() > f.truncation()) throw std::out_of_range("complete_coefficient: beyond truncation");
    const auto& grade = f.grade(mu.size());
    CoeffSum<TRat> acc;
    for (const auto& [rho, w] : detail::expand_multi(mu, Basis::complete)) {
        auto it = grade.find(rho);
        if (it == grade.end()) continue;
        Integer z = 1;
        for (const auto& p : rho.components()) z *= static_cast<long>(p.z());
        acc.add(it->second, w * Rational(z));
    }
    return acc.value();
}

TPoly v_poly(const MultiPartition& mu, int genus) {
    if (mu.size() < 1) throw std::invalid_argument("v_poly: |μ| must be positive");
    const auto ctx = kernel_context(mu.size(), mu.arity(), genus);
    return certify_integer(schur_coefficient(ctx->v_series, mu), true, "V", mu);
}

TPoly u_poly(const MultiPartition& mu, int genus) {
    if (mu.size() < 1) return TPoly(1);
    const auto ctx = kernel_context(mu.size(), mu.arity(), genus);
    return certify_integer(schur_coefficient(ctx->u_series, mu), true, "U", mu);
}

TPoly a_poly(const MultiPartition& mu, int genus) {
    if (mu.size() < 1) throw std::invalid_argument("a_poly: |μ| must be positive");
    const auto ctx = kernel_context(mu.size(), mu.arity(), genus);
    return certify_integer(complete_coefficient(ctx->v_series, mu), false, "A", mu);
}

TPoly a_poly_kostka(const MultiPartition& mu, int genus) {
    if (mu.size() < 1) throw std::invalid_argument("a_poly_kostka: |μ| must be positive");
    TPoly out;
    for (const auto& nu : multipartitions(mu.size(), mu.arity())) {
        Integer k = 1;
        for (int i = 0; i < mu.arity() && k != 0; ++i) k *= static_cast<long>(kostka_number(nu[i], mu[i]));
        if (k != 0) out += v_poly(nu, genus) * Rational(k);
    }
    return out;
}

TPoly w_poly(const SplitType& split, const MultiPartition& mu, int genus) {
    if (split.size() != mu.size()) throw std::invalid_argument("w_poly: size mismatch");
    std::map<MultiPartition, TPoly> family;
    for (const auto& [alpha, n] : split.factors()) family.emplace(alpha, v_poly(alpha, genus));
    TPoly out;
    for (const auto& labels : split.fiber_labels()) {
        const MultiType omega = split.fiber_element(labels);
        const Integer c = c_omega_mu(omega, mu);
        if (c == 0) continue;
        const Rational a = type_coeffs(omega).exp_coeff;
        out += family_type_value(family, omega) * (a * Rational(c));
    }
    if (!out.has_integer_coeffs() || !out.has_nonnegative_coeffs()) {
        throw NonPolynomialError("W at " + format_split_type(split) + ", " + format_multipartition(mu) +
                                 " has bad coefficients: " + out.to_string());
    }
    return out;
}

std::int64_t d_split(const SplitType& split, int genus) {
    std::int64_t d = 0;
    for (const auto& [alpha, n] : split.factors()) d += n * d_mu(alpha, genus);
    return d;
}

DecompositionReport decomposition_check(const MultiPartition& mu, int genus) {
    DecompositionReport report;
    report.u = u_poly(mu, genus);
    for (const auto& split : split_types(mu.size(), mu.arity())) {
        TPoly w = w_poly(split, mu, genus);
        bool all_roots = true;
        for (const auto& [alpha, n] : split.factors()) all_roots = all_roots && is_root(alpha, genus);
        if (!all_roots && !w.is_zero()) {
            report.failures.push_back("W nonzero at non-root split type " + format_split_type(split));
        }
        report.sum += w;
        if (!w.is_zero()) report.terms.emplace(split, std::move(w));
    }
    if (report.sum != report.u) {
        report.failures.push_back("Σ W = " + report.sum.to_string() + " but U = " + report.u.to_string());
    }
    return report;
}

Integer phi_count(int n, long q) {
    if (n < 1) throw std::invalid_argument("phi_count: n must be positive");
    Rational s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int m = moebius(d);
        if (m != 0) s += Rational(m) * (power(q, n / d) - 1);
    }
    s /= n;
    if (!is_integer(s)) throw std::logic_error("phi_count: non-integral count");
    return s.get_num();
}

bool product_identity_check(int n, int arity, int genus, long q) {
    if (q < 2) throw std::invalid_argument("product_identity_check: q must be at least 2");
    const auto ctx = kernel_context(n, arity, genus);
    const Rational tq(q);
    const SymFunc<Rational> lhs = evaluate_series(ctx->u_series.truncated(n), tq);
    const SymFunc<TRat> omega = ctx->omega.truncated(n);
    SymFunc<Rational> rhs = SymFunc<Rational>::constant(arity, n, Rational(1));
    for (int d = 1; d <= n; ++d) {
        rhs = multiply(rhs, series_power(evaluate_series(adams(omega, d), tq), phi_count(d, q)));
    }
    return lhs == rhs;
}

std::map<MultiPartition, Rational> u_values_at(int n, int arity, int genus, long q) {
    if (n < 1) throw std::invalid_argument("u_values_at: n must be positive");
    // Slot j carries t = q^{j+1}; slot n−1 is the deepest any ψ_d reaches.
    std::vector<Rational> tvals;
    for (int j = 1; j <= n; ++j) tvals.push_back(power(q, j));
    SymFunc<PointValues> omega = SymFunc<PointValues>::constant(arity, n, PointValues(1));
    for (int m = 1; m <= n; ++m) {
        const auto& rhos = partitions(m);
        std::vector<std::vector<Rational>> weight;
        std::vector<std::map<Partition, std::vector<Rational>>> coeff;
        for (const auto& lam : partitions(m)) {
            const TPoly a = centralizer_order(lam);
            std::vector<Rational> w(tvals.size());
            for (std::size_t j = 0; j < tvals.size(); ++j) {
                w[j] = Rational(1);
                for (int e = 0; e < genus * lam.norm(); ++e) w[j] *= tvals[j];
                w[j] /= a.evaluate(tvals[j]);
            }
            weight.push_back(std::move(w));
            std::map<Partition, std::vector<Rational>> cl;
            for (const auto& [rho, poly] : htilde_power(lam)) {
                std::vector<Rational> vals;
                for (const auto& t : tvals) vals.push_back(poly.evaluate(t));
                cl.emplace(rho, std::move(vals));
            }
            coeff.push_back(std::move(cl));
        }
        std::vector<std::size_t> idx(arity, 0);
        SymFunc<PointValues>::Grade grade;
        while (true) {
            std::vector<Rational> sum(tvals.size());
            for (std::size_t l = 0; l < weight.size(); ++l) {
                std::vector<Rational> term = weight[l];
                bool zero = false;
                for (int i = 0; i < arity && !zero; ++i) {
                    auto it = coeff[l].find(rhos[idx[i]]);
                    if (it == coeff[l].end()) {
                        zero = true;
                    } else {
                        for (std::size_t j = 0; j < term.size(); ++j) term[j] *= it->second[j];
                    }
                }
                if (zero) continue;
                for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += term[j];
            }
            std::vector<Partition> key;
            for (int i = 0; i < arity; ++i) key.push_back(rhos[idx[i]]);
            grade.emplace(MultiPartition(std::move(key)), PointValues(std::move(sum)));
            int pos = arity - 1;
            while (pos >= 0 && ++idx[pos] == rhos.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
        omega.set_grade(m, std::move(grade));
    }
    SymFunc<PointValues> v = plethystic_log(omega);
    std::vector<Rational> t_minus_one;
    for (const auto& t : tvals) t_minus_one.push_back(t - 1);
    v *= PointValues(std::move(t_minus_one));
    const SymFunc<PointValues> u = plethystic_exp(v);
    std::map<MultiPartition, Rational> out;
    for (const auto& mu : multipartitions(n, arity)) {
        Rational s = 0;
        for (const auto& [rho, c] : u.grade(n)) {
            const Integer chi = chi_product(mu, rho);
            if (chi != 0) s += c.at(0) * Rational(chi);
        }
        out.emplace(mu, s);
    }
    return out;
}

TPoly u_poly_interpolated(const MultiPartition& mu, int genus) {
    const int n = mu.size();
    const int k = mu.arity();
    std::int64_t bound = -1;
    for (const auto& split : split_types(n, k)) {
        bool all_roots = true;
        for (const auto& [alpha, m] : split.factors()) all_roots = all_roots && is_root(alpha, genus);
        if (all_roots) bound = std::max(bound, d_split(split, genus) / 2);
    }
    if (bound < 0) bound = (static_cast<std::int64_t>(n) * n * (2 * genus - 2 + k) + 2) / 2;
    bound = std::max<std::int64_t>(bound, 0);

    static std::mutex m;
    static std::map<std::tuple<int, int, int, long>, std::map<MultiPartition, Rational>> cache;
    std::vector<std::pair<Rational, Rational>> points;
    for (long q = 2; q <= 2 + bound + 1; ++q) {
        std::map<MultiPartition, Rational> values;
        {
            std::lock_guard lock(m);
            auto it = cache.find({n, k, genus, q});
            if (it == cache.end()) it = cache.emplace(std::tuple(n, k, genus, q), u_values_at(n, k, genus, q)).first;
            values = it->second;
        }
        points.emplace_back(Rational(q), values.at(mu));
    }
    return interpolate(points, static_cast<int>(bound));
}

}  // namespace unitensor
