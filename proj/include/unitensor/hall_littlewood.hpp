#pragma once

// Kostka–Foulkes polynomials, modified Hall–Littlewood functions H̃_λ(x;t),
// centralizer orders a_λ(t) and the Cauchy kernel
//   Ω = Σ_λ ℋ_λ(t) Π_i H̃_λ(x_i; t),   ℋ_λ = t^{g⟨λ,λ⟩} / a_λ(t).

#include <map>
#include <utility>
#include <vector>

#include "unitensor/combinatorics.hpp"
#include "unitensor/exactalg.hpp"
#include "unitensor/symfunc.hpp"

namespace unitensor {

/// Charge of a word whose content is a partition (letters 1..m).
int charge(const std::vector<int>& word);

/// K_{νλ}(t) = Σ_{T ∈ SSYT(ν,λ)} t^{charge(T)}.
TPoly kostka_poly(const Partition& nu, const Partition& lambda);

/// K̃_{νλ}(t) = t^{n(λ)} K_{νλ}(1/t).
TPoly modified_kostka(const Partition& nu, const Partition& lambda);

struct HLTable {
    int n = 0;
    std::map<std::pair<Partition, Partition>, TPoly> kostka;
    std::map<std::pair<Partition, Partition>, TPoly> modified;
};

/// All K and K̃ for partitions of n; built once per n.
const HLTable& hl_table(int n);

/// H̃_λ(x;t) = Σ_ρ c_ρ(t) p_ρ(x), c_ρ = Σ_ν K̃_{νλ}(t) χ^ν_ρ / z_ρ. Cached.
const std::vector<std::pair<Partition, TPoly>>& htilde_power(const Partition& lambda);

/// H̃_λ as a one-variable-set function truncated at N ≥ |λ|.
SymFunc<TRat> htilde(const Partition& lambda, int truncation);

/// a_λ(t) = t^{⟨λ,λ⟩} Π_i φ_{m_i(λ)}(1/t), cleared of negative powers.
TPoly centralizer_order(const Partition& lambda);

/// ℋ_λ(t) = t^{g⟨λ,λ⟩} / a_λ(t).
TRat h_weight(const Partition& lambda, int genus);

/// Ω truncated at grade n, arity k.
SymFunc<TRat> omega_series(int n, int arity, int genus);

}  // namespace unitensor
