#pragma once

// Schur coefficients c_ω^μ of s_ω = Π ψ_d(s_ν)^{ω(d,ν)}, the W_{ω°}-modules
// they are characters of, and the nonzero criterion for U_μ.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unitensor/combinatorics.hpp"
#include "unitensor/exactalg.hpp"

namespace unitensor {

/// Coefficient of s_μ in s_ω. Zero when |ω| ≠ |μ|.
Integer c_omega_mu(const MultiType& omega, const MultiPartition& mu);

/// Irreducible multiplicities of the W_{ω°}-module ℂ^μ_{ω°},
/// W_{ω°} = 𝔖_{n₁}×⋯×𝔖_{n_s}. Keys are label tuples (τ¹,…,τˢ), τ^i ⊢ n_i.
struct ModuleDecomposition {
    SplitType split;
    std::map<std::vector<Partition>, Integer> multiplicities;

    /// Multiplicity of the trivial character.
    Integer trivial_multiplicity() const;
    /// Character value on the class labelled (λ¹,…,λˢ).
    Integer character(const std::vector<Partition>& labels) const;
    /// Value at the identity class.
    Integer dimension() const;
};

/// Throws std::logic_error on a negative or non-integral multiplicity.
ModuleDecomposition decompose_module(const SplitType& split, const MultiPartition& mu);

/// Support of decompose_module.
std::set<std::vector<Partition>> r_set(const SplitType& split, const MultiPartition& mu);

/// V_α(1) for each α that may appear; returns 0 when v_α is not a root.
using VAtOne = std::function<Integer(const MultiPartition&)>;

/// True iff some ω° = α₁^{n₁}⋯α_s^{n_s} and (τ¹,…,τˢ) ∈ ℛ_{ω°,μ} have
/// ℓ(τ^i) ≤ V_{α_i}(1) for every i.
bool nonzero_criterion(const MultiPartition& mu, const VAtOne& v_at_one);
/// Same, with V taken from the kernel pipeline at genus g.
bool nonzero_criterion(const MultiPartition& mu, int genus);

/// σ_c(x) = (max c)·|x|² − |c|·Σ x_j².
Integer sigma(const std::vector<long>& c, const std::vector<long>& x);

struct HarcosReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// σ_c(c) ≥ Σ σ_c(x^i) for c = Σ x^i, and σ_μ(μ) ≥ Σ σ_μ(α^i) when
/// μ ⊴ Σ α^i, on random instances.
HarcosReport harcos_verify(int samples, std::mt19937_64& rng);

}  // namespace unitensor
