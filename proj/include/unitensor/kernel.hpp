#pragma once

// 𝕍(t) = (t−1) Log Ω(t), 𝕌(t) = Exp 𝕍(t), and the polynomials read off them:
//   V_μ = ⟨𝕍, s_μ⟩,  U_μ = ⟨𝕌, s_μ⟩,  A_μ = ⟨𝕍, h_μ⟩.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "unitensor/combinatorics.hpp"
#include "unitensor/exactalg.hpp"
#include "unitensor/symfunc.hpp"

namespace unitensor {

struct KernelContext {
    int n;
    int k;
    int g;
    SymFunc<TRat> omega;
    SymFunc<TRat> v_series;
    SymFunc<TRat> u_series;
};

/// Builds Ω, 𝕍 and 𝕌 through grade n.
KernelContext build_kernel(int n, int arity, int genus);

/// Shared context covering at least grade n; reused across calls.
std::shared_ptr<const KernelContext> kernel_context(int n, int arity, int genus);

/// ⟨f, s_μ⟩ and ⟨f, h_μ⟩ for a series in the p-basis.
TRat schur_coefficient(const SymFunc<TRat>& f, const MultiPartition& mu);
TRat complete_coefficient(const SymFunc<TRat>& f, const MultiPartition& mu);

// The extractors below throw NonPolynomialError when the result is not a
// polynomial with integer coefficients (non-negative for V and U).
TPoly v_poly(const MultiPartition& mu, int genus);
TPoly u_poly(const MultiPartition& mu, int genus);
/// ⟨𝕍, h_μ⟩ directly.
TPoly a_poly(const MultiPartition& mu, int genus);
/// Σ_ν Π K_{ν^i μ^i} V_ν.
TPoly a_poly_kostka(const MultiPartition& mu, int genus);

/// W^{ω°}_μ = Σ_{ω over the fiber} A_ω° V_ω(t) c_ω^μ.
TPoly w_poly(const SplitType& split, const MultiPartition& mu, int genus);

/// d_{ω°} = Σ n_i d_{α_i}.
std::int64_t d_split(const SplitType& split, int genus);

struct DecompositionReport {
    TPoly u;
    TPoly sum;
    std::map<SplitType, TPoly> terms;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// U_μ = Σ_{ω°} W^{ω°}_μ, and W vanishes whenever some α_i is not a root.
DecompositionReport decomposition_check(const MultiPartition& mu, int genus);

/// 1 + Σ U_μ(q) s_μ = Π_{d≤n} ψ_d(Ω)|_{t=q}^{φ_d(q)} through grade n.
bool product_identity_check(int n, int arity, int genus, long q);

/// φ_n(q) = (1/n) Σ_{d|n} μ(d)(q^{n/d} − 1).
Integer phi_count(int n, long q);

/// U_μ(t) rebuilt from the pipeline run at integer points t = 2, 3, …
/// with Log/Exp done on values, then interpolated.
TPoly u_poly_interpolated(const MultiPartition& mu, int genus);

/// All U_μ(q) for |μ| = n from the point-evaluated pipeline at t = q.
std::map<MultiPartition, Rational> u_values_at(int n, int arity, int genus, long q);

}  // namespace unitensor
