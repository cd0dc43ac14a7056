#pragma once

// Partitions, multipartitions, multi-types and the integer-valued
// combinatorics built on them (symmetric group characters, Kostka numbers).

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitensor/numeric.hpp"

namespace unitensor {

/// Integer partition, stored dense: strictly positive, weakly decreasing parts.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Sorts and drops zero parts; throws on negative parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (1^n), i.e. the column partition.
    static Partition column(int n);
    /// (n), the row partition (empty for n = 0).
    static Partition row(int n);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// λ_i with 1-based i; zero past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    /// n(λ) = Σ (i-1) λ_i.
    int n_stat() const;
    /// ⟨λ,λ⟩ = |λ| + 2 n(λ) = Σ (λ'_i)².
    int norm() const;
    /// z_λ = Π i^{m_i} m_i!. Fits in 64 bits for |λ| ≤ 20.
    std::int64_t z() const;
    /// m_i(λ), the multiplicity of the part i.
    int multiplicity(int i) const;
    Partition conjugate() const;
    /// d·λ.
    Partition scaled(int d) const;
    /// λ + μ, added part by part.
    Partition plus(const Partition& other) const;
    /// λ ∪ μ, the multiset union of parts.
    Partition join(const Partition& other) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct PartitionStats {
    int size;
    int length;
    int n_stat;
    int norm;
    std::int64_t z;
    friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

PartitionStats partition_stats(const Partition& lambda);

/// k-tuple of partitions of a common size.
class MultiPartition {
public:
    MultiPartition() = default;
    /// Throws std::invalid_argument when component sizes differ.
    explicit MultiPartition(std::vector<Partition> components);
    MultiPartition(std::initializer_list<Partition> components)
        : MultiPartition(std::vector<Partition>(components)) {}

    /// The zero multipartition (0,…,0) of arity k.
    static MultiPartition zero(int arity);
    /// ((1),…,(1)).
    static MultiPartition ones(int arity);

    const std::vector<Partition>& components() const { return components_; }
    const Partition& operator[](std::size_t i) const { return components_[i]; }
    int arity() const { return static_cast<int>(components_.size()); }
    int size() const { return components_.empty() ? 0 : components_.front().size(); }
    bool is_zero() const { return size() == 0; }

    MultiPartition conjugate() const;
    MultiPartition scaled(int d) const;
    MultiPartition plus(const MultiPartition& other) const;
    /// Componentwise multiset union; this is the p-basis product p_λ p_μ = p_{λ∪μ}.
    MultiPartition join(const MultiPartition& other) const;

    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

private:
    std::vector<Partition> components_;
};

/// Dominance order λ ⊴ μ; throws std::invalid_argument on size mismatch.
bool dominance_leq(const Partition& lambda, const Partition& mu);
/// Componentwise dominance on multipartitions of equal arity and size.
bool dominance_leq(const MultiPartition& lambda, const MultiPartition& mu);

/// Multi-type: finite map (degree d ≥ 1, nonzero multipartition) → multiplicity ≥ 1.
class MultiType {
public:
    using Key = std::pair<int, MultiPartition>;

    MultiType() = default;
    /// Throws on d < 1, zero multipartitions, or non-positive multiplicities.
    explicit MultiType(std::map<Key, int> entries);

    const std::map<Key, int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int size() const;
    /// r_ω = Σ ω(d, μ).
    int total_multiplicity() const;
    bool is_split() const;
    /// ω_+ = Σ (d ω(d,μ))·μ.
    MultiPartition plus_partition() const;
    /// The i-th coordinate, a multi-type with k = 1.
    MultiType coordinate(int i) const;
    /// Arity of the multipartitions in the support (0 when empty).
    int arity() const;

    friend auto operator<=>(const MultiType&, const MultiType&) = default;
    friend bool operator==(const MultiType&, const MultiType&) = default;

private:
    std::map<Key, int> entries_;
};

/// Split type ω° written α₁^{n₁}⋯α_s^{n_s}: nonzero multipartition → multiplicity.
/// The map order is the fixed total order on multipartitions.
class SplitType {
public:
    SplitType() = default;
    explicit SplitType(std::map<MultiPartition, int> entries);

    const std::map<MultiPartition, int>& entries() const { return entries_; }
    int size() const;
    /// (α_i, n_i) pairs in the fixed order.
    std::vector<std::pair<MultiPartition, int>> factors() const;
    /// The fiber element of the flattening map indexed by (λ¹,…,λˢ), λ^i ⊢ n_i.
    MultiType fiber_element(const std::vector<Partition>& labels) const;
    /// All label tuples (λ¹,…,λˢ) ∈ P_{n₁}×…×P_{n_s}, i.e. the classes of W_{ω°}.
    std::vector<std::vector<Partition>> fiber_labels() const;
    /// The split type 𝔖̄(ω) of a multi-type: ω°(μ) = Σ_d d ω(d,μ).
    static SplitType flatten(const MultiType& omega);

    friend auto operator<=>(const SplitType&, const SplitType&) = default;
    friend bool operator==(const SplitType&, const SplitType&) = default;

private:
    std::map<MultiPartition, int> entries_;
};

// Enumeration. All results are complete, duplicate-free and sorted.

/// Partitions of n, largest first in lexicographic order: (n), …, (1^n).
const std::vector<Partition>& partitions(int n);
/// 𝒫̄_n for arity k, in lexicographic order of the component sequences
/// (each component ordered as in partitions(n)).
std::vector<MultiPartition> multipartitions(int n, int arity);
/// 𝕋̄_n.
std::vector<MultiType> multitypes(int n, int arity);
/// 𝕋̄°_n.
std::vector<SplitType> split_types(int n, int arity);

/// Murnaghan–Nakayama χ^λ_ρ; χ^{(n)} is trivial. Throws on size mismatch.
std::int64_t sn_character(const Partition& lambda, const Partition& rho);

/// Character table of 𝔖_n indexed by partitions(n) on both axes:
/// table[i][j] = χ^{λ_i}_{ρ_j}. Built once, immutable afterwards.
const std::vector<std::vector<std::int64_t>>& character_table(int n);

/// Index of λ in partitions(|λ|).
std::size_t partition_index(const Partition& lambda);

/// Semistandard tableau as rows of entries.
using Tableau = std::vector<std::vector<int>>;

/// Calls visit on every SSYT of the given shape and content (weight).
void for_each_ssyt(const Partition& shape, const std::vector<int>& content,
                   const std::function<void(const Tableau&)>& visit);

/// K_{λμ}, the number of SSYT of shape λ and content μ. Throws on size mismatch.
std::int64_t kostka_number(const Partition& lambda, const Partition& mu);

/// Kostka matrix for size n: K[i][j] = K_{λ_i λ_j} over partitions(n).
const std::vector<std::vector<std::int64_t>>& kostka_matrix(int n);

/// Row μ of the transpose-inverse Kostka matrix: s_μ = Σ_λ K*_{μλ} h_λ.
/// Zero entries are omitted.
std::map<Partition, std::int64_t> inverse_kostka_row(const Partition& mu);

struct TypeCoefficients {
    Rational log_coeff;  // C_ω°
    Rational exp_coeff;  // A_ω°
};

/// The coefficients of a_ω in the plethystic Log and Exp expansions.
/// Throws std::invalid_argument for ω = 0.
TypeCoefficients type_coeffs(const MultiType& omega);

// Text syntax: "2,1", "1^3", "3,1^2"; the empty partition is "0" or "".
// Multipartition components are joined with '|'.
Partition parse_partition(std::string_view text);
MultiPartition parse_multipartition(std::string_view text);
std::string format_partition(const Partition& lambda);
std::string format_multipartition(const MultiPartition& mu);
std::string format_multitype(const MultiType& omega);
std::string format_split_type(const SplitType& omega);

}  // namespace unitensor
