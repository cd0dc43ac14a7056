#pragma once

// Brute-force GL_n(F_q) for a prime q and tiny n: conjugacy classes by orbit
// computation, unipotent characters from flag-variety fixed points, and the
// tensor-product multiplicities computed as class sums.

#include <cstdint>
#include <map>
#include <vector>

#include "unitensor/combinatorics.hpp"
#include "unitensor/numeric.hpp"

namespace unitensor {

/// Square matrix over F_q, row-major entries in [0, q).
struct FqMatrix {
    int n = 0;
    int q = 2;
    std::vector<int> a;

    int at(int i, int j) const { return a[i * n + j]; }
    int& at(int i, int j) { return a[i * n + j]; }
    static FqMatrix identity(int n, int q);
    friend FqMatrix operator*(const FqMatrix& x, const FqMatrix& y);
    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

int fq_rank(std::vector<std::vector<int>> rows, int q);
int fq_det(const FqMatrix& x);

struct ClassData {
    FqMatrix representative;
    std::int64_t size = 0;
    int centralizer_dim = 0;
    MultiType class_type;
    std::map<Partition, Integer> char_values;
};

struct GroupClasses {
    int n = 0;
    int q = 0;
    std::int64_t order = 0;
    std::vector<ClassData> classes;
};

/// Throws std::domain_error when |GL_n(F_q)| exceeds 10^6 or q is not prime.
const GroupClasses& enumerate_classes(int n, int q);

/// Number of partial flags of the given composition type fixed by x.
std::int64_t flag_fixed_points(const FqMatrix& x, const std::vector<int>& composition);

/// 𝒰_μ for μ ⊢ n as value vectors over enumerate_classes(n, q).classes.
std::map<Partition, std::vector<Integer>> unipotent_character_table(int n, int q);

/// ⟨ℰ ⊗ 𝒰_{μ¹} ⊗ ⋯ ⊗ 𝒰_{μᵏ}, 1⟩ with ℰ(x) = q^{g dim C(x)}.
Integer tensor_inner_product(const MultiPartition& mu, int genus, int q);

/// Same with 𝒰_{μ^i} twisted by (α_i∘det), α_i the quadratic character when
/// twists[i] = 2 and trivial when twists[i] = 1. The product of the α_i must
/// have order exactly n. Only n = 2 with q ∈ {3, 5} is supported.
Integer generic_inner_product(const MultiPartition& mu, const std::vector<int>& twists, int genus, int q);

/// ω_C for the class of x: (degree of each irreducible factor of the
/// characteristic polynomial, Jordan type on its primary component).
MultiType class_type(const FqMatrix& x);

}  // namespace unitensor
