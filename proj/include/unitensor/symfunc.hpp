#pragma once

// Graded ring of functions separately symmetric in k variable sets, stored
// in the power-sum basis p_μ = p_{μ¹}(x₁)⋯p_{μᵏ}(x_k), truncated at a
// fixed degree. Only the diagonal subring (all components of equal size) is
// represented: grade n holds multipartitions in 𝒫̄_n.
//
// Coefficients are either Rational (pure symmetric-function computations)
// or TRat (rational functions in t, on which Adams operations act by t ↦ t^d).

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unitensor/combinatorics.hpp"
#include "unitensor/exactalg.hpp"

namespace unitensor {

// ------------------------------------------------------- coefficient traits

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const TRat& c) { return c.is_zero(); }
inline Rational coeff_adams(const Rational& c, int) { return c; }
inline TRat coeff_adams(const TRat& c, int d) { return adams_scalar(c, d); }

template <class Coeff>
class CoeffSum;

template <>
class CoeffSum<Rational> {
public:
    void add(const Rational& c) { value_ += c; }
    void add(const Rational& c, const Rational& w) { value_ += c * w; }
    Rational value() const { return value_; }

private:
    Rational value_ = 0;
};

template <>
class CoeffSum<TRat> {
public:
    void add(const TRat& c) { sum_.add(c); }
    void add(const TRat& c, const Rational& w) { sum_.add(c, w); }
    TRat value() const { return sum_.value(); }

private:
    TRatSum sum_;
};

enum class Basis { schur, power, complete, monomial };

template <class Coeff>
class SymFunc {
public:
    using Grade = std::map<MultiPartition, Coeff>;

    /// The zero function.
    SymFunc(int arity, int truncation) : arity_(arity), grades_(truncation + 1) {
        if (arity < 1) throw std::invalid_argument("SymFunc: arity must be positive");
        if (truncation < 0) throw std::invalid_argument("SymFunc: negative truncation");
    }

    static SymFunc constant(int arity, int truncation, Coeff c) {
        SymFunc f(arity, truncation);
        f.add_term(MultiPartition::zero(arity), std::move(c));
        return f;
    }

    static SymFunc power_sum(const MultiPartition& mu, int truncation, Coeff c = Coeff(1)) {
        SymFunc f(mu.arity(), truncation);
        f.add_term(mu, std::move(c));
        return f;
    }

    int arity() const { return arity_; }
    int truncation() const { return static_cast<int>(grades_.size()) - 1; }
    const Grade& grade(int n) const { return grades_.at(n); }
    Grade& grade_mut(int n) { return grades_.at(n); }

    /// Adds c·p_μ. Terms above the truncation are dropped.
    void add_term(const MultiPartition& mu, const Coeff& c) {
        if (mu.arity() != arity_) throw std::invalid_argument("SymFunc::add_term: arity mismatch");
        const int n = mu.size();
        if (n > truncation() || coeff_is_zero(c)) return;
        auto& g = grades_[n];
        auto it = g.find(mu);
        if (it == g.end()) {
            g.emplace(mu, c);
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) g.erase(it);
        }
    }

    /// Replaces grade n wholesale; zero coefficients are dropped.
    void set_grade(int n, Grade g) {
        std::erase_if(g, [](const auto& kv) { return coeff_is_zero(kv.second); });
        for (const auto& [mu, c] : g) {
            if (mu.size() != n || mu.arity() != arity_) throw std::invalid_argument("SymFunc::set_grade: bad key");
        }
        grades_.at(n) = std::move(g);
    }

    Coeff coefficient(const MultiPartition& mu) const {
        if (mu.size() > truncation()) return Coeff(0);
        const auto& g = grades_[mu.size()];
        auto it = g.find(mu);
        return it == g.end() ? Coeff(0) : it->second;
    }

    Coeff constant_term() const { return coefficient(MultiPartition::zero(arity_)); }

    bool is_zero() const {
        for (const auto& g : grades_) {
            if (!g.empty()) return false;
        }
        return true;
    }

    SymFunc truncated(int n) const {
        SymFunc out(arity_, n);
        for (int m = 0; m <= std::min(n, truncation()); ++m) out.grades_[m] = grades_[m];
        return out;
    }

    SymFunc& operator+=(const SymFunc& o) {
        check_compatible(o);
        resize_to_min(o);
        for (int n = 0; n <= truncation(); ++n) {
            for (const auto& [mu, c] : o.grades_[n]) add_term(mu, c);
        }
        return *this;
    }

    SymFunc& operator-=(const SymFunc& o) {
        check_compatible(o);
        resize_to_min(o);
        for (int n = 0; n <= truncation(); ++n) {
            for (const auto& [mu, c] : o.grades_[n]) add_term(mu, -c);
        }
        return *this;
    }

    SymFunc& operator*=(const Coeff& c) {
        for (auto& g : grades_) {
            for (auto& [mu, v] : g) v *= c;
            std::erase_if(g, [](const auto& kv) { return coeff_is_zero(kv.second); });
        }
        return *this;
    }

    SymFunc& scale(const Rational& c) {
        for (auto& g : grades_) {
            for (auto& [mu, v] : g) v *= c;
            std::erase_if(g, [](const auto& kv) { return coeff_is_zero(kv.second); });
        }
        return *this;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    void check_compatible(const SymFunc& o) const {
        if (o.arity_ != arity_) throw std::invalid_argument("SymFunc: arity mismatch");
    }
    void resize_to_min(const SymFunc& o) {
        if (o.truncation() < truncation()) grades_.resize(o.truncation() + 1);
    }

    int arity_;
    std::vector<Grade> grades_;
};

// ----------------------------------------------------- single-set expansions

/// s_λ in the power-sum basis: Σ_ρ χ^λ_ρ / z_ρ · p_ρ.
const std::vector<std::pair<Partition, Rational>>& schur_in_power(const Partition& lambda);
/// h_λ = Π_j h_{λ_j} in the power-sum basis, with h_n = Σ_ρ p_ρ / z_ρ.
const std::vector<std::pair<Partition, Rational>>& complete_in_power(const Partition& lambda);

namespace detail {

template <class Coeff>
void multiply_grades(const typename SymFunc<Coeff>::Grade& a, const typename SymFunc<Coeff>::Grade& b,
                     std::map<MultiPartition, CoeffSum<Coeff>>& out, const Rational& weight) {
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            Coeff prod = ca * cb;
            out[ka.join(kb)].add(prod, weight);
        }
    }
}

template <class Coeff>
typename SymFunc<Coeff>::Grade finish(std::map<MultiPartition, CoeffSum<Coeff>>& acc) {
    typename SymFunc<Coeff>::Grade g;
    for (auto& [mu, s] : acc) {
        Coeff v = s.value();
        if (!coeff_is_zero(v)) g.emplace(mu, std::move(v));
    }
    return g;
}

// Expansion of a multipartition-indexed basis element in the p-basis: the
// tensor product of single-set expansions.
std::vector<std::pair<MultiPartition, Rational>> expand_multi(const MultiPartition& mu, Basis basis);

}  // namespace detail

// ------------------------------------------------------------------ algebra

/// Graded product truncated at the smaller truncation; p_λ p_μ = p_{λ∪μ}.
template <class Coeff>
SymFunc<Coeff> multiply(const SymFunc<Coeff>& f, const SymFunc<Coeff>& g) {
    if (f.arity() != g.arity()) throw std::invalid_argument("multiply: arity mismatch");
    const int n = std::min(f.truncation(), g.truncation());
    SymFunc<Coeff> out(f.arity(), n);
    for (int total = 0; total <= n; ++total) {
        std::map<MultiPartition, CoeffSum<Coeff>> acc;
        for (int a = 0; a <= total; ++a) {
            if (f.grade(a).empty() || g.grade(total - a).empty()) continue;
            detail::multiply_grades<Coeff>(f.grade(a), g.grade(total - a), acc, Rational(1));
        }
        out.set_grade(total, detail::finish<Coeff>(acc));
    }
    return out;
}

/// Hall pairing Σ_λ z_λ f_λ g_λ with z_λ = Π z_{λ^i}.
template <class Coeff>
Coeff hall_pairing(const SymFunc<Coeff>& f, const SymFunc<Coeff>& g) {
    if (f.arity() != g.arity()) throw std::invalid_argument("hall_pairing: arity mismatch");
    CoeffSum<Coeff> acc;
    const int n = std::min(f.truncation(), g.truncation());
    for (int m = 0; m <= n; ++m) {
        const auto& gf = f.grade(m);
        const auto& gg = g.grade(m);
        for (const auto& [mu, c] : gf) {
            auto it = gg.find(mu);
            if (it == gg.end()) continue;
            Integer z = 1;
            for (const auto& p : mu.components()) z *= static_cast<long>(p.z());
            acc.add(c * it->second, Rational(z));
        }
    }
    return acc.value();
}

/// Adams operation ψ_d: p_λ ↦ p_{d·λ} and t ↦ t^d on coefficients.
template <class Coeff>
SymFunc<Coeff> adams(const SymFunc<Coeff>& f, int d) {
    if (d < 1) throw std::invalid_argument("adams: d must be positive");
    if (d == 1) return f;
    SymFunc<Coeff> out(f.arity(), f.truncation());
    for (int n = 0; n * d <= f.truncation(); ++n) {
        typename SymFunc<Coeff>::Grade g;
        for (const auto& [mu, c] : f.grade(n)) g.emplace(mu.scaled(d), coeff_adams(c, d));
        out.set_grade(n * d, std::move(g));
    }
    return out;
}

/// Ψ(f) = Σ_{d≥1} ψ_d(f)/d. Requires zero constant term.
template <class Coeff>
SymFunc<Coeff> psi_forward(const SymFunc<Coeff>& f) {
    if (!coeff_is_zero(f.constant_term())) throw std::invalid_argument("psi_forward: nonzero constant term");
    SymFunc<Coeff> out(f.arity(), f.truncation());
    for (int d = 1; d <= f.truncation(); ++d) {
        SymFunc<Coeff> term = adams(f, d);
        term.scale(make_rational(1, d));
        out += term;
    }
    return out;
}

/// Ψ⁻¹(f) = Σ_{d≥1} μ(d) ψ_d(f)/d. Requires zero constant term.
template <class Coeff>
SymFunc<Coeff> psi_inverse(const SymFunc<Coeff>& f) {
    if (!coeff_is_zero(f.constant_term())) throw std::invalid_argument("psi_inverse: nonzero constant term");
    SymFunc<Coeff> out(f.arity(), f.truncation());
    for (int d = 1; d <= f.truncation(); ++d) {
        const int m = moebius(d);
        if (m == 0) continue;
        SymFunc<Coeff> term = adams(f, d);
        term.scale(make_rational(m, d));
        out += term;
    }
    return out;
}

/// Formal logarithm of a series with constant term 1.
template <class Coeff>
SymFunc<Coeff> formal_log(const SymFunc<Coeff>& f) {
    if (f.constant_term() != Coeff(1)) throw std::invalid_argument("formal_log: constant term must be 1");
    const int n = f.truncation();
    SymFunc<Coeff> out(f.arity(), n);
    // n L_n = n G_n − Σ_{m<n} m L_m G_{n−m}, with G = f − 1.
    for (int total = 1; total <= n; ++total) {
        std::map<MultiPartition, CoeffSum<Coeff>> acc;
        for (const auto& [mu, c] : f.grade(total)) acc[mu].add(c);
        for (int m = 1; m < total; ++m) {
            if (out.grade(m).empty() || f.grade(total - m).empty()) continue;
            detail::multiply_grades<Coeff>(out.grade(m), f.grade(total - m), acc, make_rational(-m, total));
        }
        out.set_grade(total, detail::finish<Coeff>(acc));
    }
    return out;
}

/// Formal exponential of a series with zero constant term.
template <class Coeff>
SymFunc<Coeff> formal_exp(const SymFunc<Coeff>& f) {
    if (!coeff_is_zero(f.constant_term())) throw std::invalid_argument("formal_exp: constant term must be 0");
    const int n = f.truncation();
    SymFunc<Coeff> out = SymFunc<Coeff>::constant(f.arity(), n, Coeff(1));
    // n E_n = Σ_{m=1}^{n} m F_m E_{n−m}.
    for (int total = 1; total <= n; ++total) {
        std::map<MultiPartition, CoeffSum<Coeff>> acc;
        for (int m = 1; m <= total; ++m) {
            if (f.grade(m).empty() || out.grade(total - m).empty()) continue;
            detail::multiply_grades<Coeff>(f.grade(m), out.grade(total - m), acc, make_rational(m, total));
        }
        out.set_grade(total, detail::finish<Coeff>(acc));
    }
    return out;
}

/// Log(f) = Ψ⁻¹(log f); requires constant term 1.
template <class Coeff>
SymFunc<Coeff> plethystic_log(const SymFunc<Coeff>& f) {
    return psi_inverse(formal_log(f));
}

/// Exp(f) = exp(Ψ f); requires constant term 0.
template <class Coeff>
SymFunc<Coeff> plethystic_exp(const SymFunc<Coeff>& f) {
    if (!coeff_is_zero(f.constant_term())) throw std::invalid_argument("plethystic_exp: constant term must be 0");
    return formal_exp(psi_forward(f));
}

// ------------------------------------------------------------------- bases

/// Builds the function Σ c_μ b_μ for an expansion in the given basis.
/// The monomial basis is only supported as a target.
template <class Coeff>
SymFunc<Coeff> from_basis(Basis basis, const std::map<MultiPartition, Coeff>& expansion, int arity,
                          int truncation) {
    if (basis == Basis::monomial) throw std::invalid_argument("from_basis: monomial basis is target-only");
    SymFunc<Coeff> out(arity, truncation);
    for (int n = 0; n <= truncation; ++n) {
        std::map<MultiPartition, CoeffSum<Coeff>> acc;
        bool any = false;
        for (const auto& [mu, c] : expansion) {
            if (mu.arity() != arity) throw std::invalid_argument("from_basis: arity mismatch");
            if (mu.size() != n) continue;
            any = true;
            if (basis == Basis::power) {
                acc[mu].add(c);
                continue;
            }
            for (const auto& [rho, w] : detail::expand_multi(mu, basis)) acc[rho].add(c, w);
        }
        if (any) out.set_grade(n, detail::finish<Coeff>(acc));
    }
    return out;
}

/// Expansion of f in the requested basis.
template <class Coeff>
std::map<MultiPartition, Coeff> to_basis(const SymFunc<Coeff>& f, Basis basis) {
    std::map<MultiPartition, Coeff> out;
    if (basis == Basis::power) {
        for (int n = 0; n <= f.truncation(); ++n) {
            for (const auto& [mu, c] : f.grade(n)) out.emplace(mu, c);
        }
        return out;
    }
    for (int n = 0; n <= f.truncation(); ++n) {
        if (f.grade(n).empty()) continue;
        // Schur coefficients first: ⟨f, s_μ⟩ = Σ_ρ f_ρ Π χ^{μ^i}_{ρ^i}.
        std::map<MultiPartition, Coeff> schur;
        for (const auto& mu : multipartitions(n, f.arity())) {
            CoeffSum<Coeff> acc;
            for (const auto& [rho, c] : f.grade(n)) {
                Integer chi = 1;
                for (int i = 0; i < f.arity(); ++i) chi *= static_cast<long>(sn_character(mu[i], rho[i]));
                if (chi != 0) acc.add(c, Rational(chi));
            }
            Coeff v = acc.value();
            if (!coeff_is_zero(v)) schur.emplace(mu, std::move(v));
        }
        if (basis == Basis::schur) {
            out.insert(schur.begin(), schur.end());
            continue;
        }
        // s_ν = Σ_λ K*_{νλ} h_λ (complete), s_ν = Σ_λ K_{νλ} m_λ (monomial).
        std::map<MultiPartition, CoeffSum<Coeff>> acc;
        for (const auto& [nu, c] : schur) {
            std::vector<std::vector<Partition>> parts{{}};
            std::vector<Integer> weights{1};
            for (int i = 0; i < f.arity(); ++i) {
                std::vector<std::pair<Partition, std::int64_t>> comp;
                if (basis == Basis::complete) {
                    for (const auto& [lam, k] : inverse_kostka_row(nu[i])) comp.emplace_back(lam, k);
                } else {
                    for (const auto& lam : partitions(n)) {
                        const auto k = kostka_number(nu[i], lam);
                        if (k != 0) comp.emplace_back(lam, k);
                    }
                }
                std::vector<std::vector<Partition>> next_parts;
                std::vector<Integer> next_weights;
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    for (const auto& [lam, k] : comp) {
                        auto v = parts[j];
                        v.push_back(lam);
                        next_parts.push_back(std::move(v));
                        next_weights.push_back(weights[j] * static_cast<long>(k));
                    }
                }
                parts = std::move(next_parts);
                weights = std::move(next_weights);
            }
            for (std::size_t j = 0; j < parts.size(); ++j) acc[MultiPartition(parts[j])].add(c, Rational(weights[j]));
        }
        auto g = detail::finish<Coeff>(acc);
        out.insert(g.begin(), g.end());
    }
    return out;
}

/// Change of basis on an explicit expansion.
template <class Coeff>
std::map<MultiPartition, Coeff> basis_convert(const std::map<MultiPartition, Coeff>& expansion, Basis from,
                                              Basis to, int arity, int truncation) {
    return to_basis(from_basis(from, expansion, arity, truncation), to);
}

// ---------------------------------------------------------- type families

/// a_ω = Π_{(d,μ)} ψ_d(a_μ)^{ω(d,μ)} for a family of symmetric functions.
/// Throws std::out_of_range when a family member is missing.
template <class Coeff>
SymFunc<Coeff> family_type_value(const std::map<MultiPartition, SymFunc<Coeff>>& family, const MultiType& omega,
                                 int arity, int truncation) {
    SymFunc<Coeff> out = SymFunc<Coeff>::constant(arity, truncation, Coeff(1));
    for (const auto& [key, mult] : omega.entries()) {
        auto it = family.find(key.second);
        if (it == family.end()) {
            throw std::out_of_range("family_type_value: missing family member " + format_multipartition(key.second));
        }
        const SymFunc<Coeff> factor = adams(it->second, key.first);
        for (int j = 0; j < mult; ++j) out = multiply(out, factor);
    }
    return out;
}

/// Scalar version: V_ω(t) = Π V_μ(t^d)^{ω(d,μ)}.
template <class Scalar>
Scalar family_type_value(const std::map<MultiPartition, Scalar>& family, const MultiType& omega) {
    Scalar out(1);
    for (const auto& [key, mult] : omega.entries()) {
        auto it = family.find(key.second);
        if (it == family.end()) {
            throw std::out_of_range("family_type_value: missing family member " + format_multipartition(key.second));
        }
        const Scalar factor = adams_scalar(it->second, key.first);
        for (int j = 0; j < mult; ++j) out *= factor;
    }
    return out;
}

/// One line per (multipartition, coefficient); not a stable format.
template <class Coeff>
void dump(std::ostream& os, const SymFunc<Coeff>& f) {
    for (int n = 0; n <= f.truncation(); ++n) {
        for (const auto& [mu, c] : f.grade(n)) os << format_multipartition(mu) << '\t' << c << '\n';
    }
}

}  // namespace unitensor
