#pragma once

// Comet-shaped quivers Γ_μ: a central vertex 0 carrying g loops and k legs
// of lengths ℓ(μ^i) − 1. Vertices are numbered 0, then leg 1 outwards,
// then leg 2, and so on.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "unitensor/combinatorics.hpp"

namespace unitensor {

using DimVector = std::vector<std::int64_t>;

class CometQuiver {
public:
    CometQuiver(int genus, std::vector<int> leg_lengths);

    int genus() const { return genus_; }
    const std::vector<int>& leg_lengths() const { return legs_; }
    int vertex_count() const { return vertices_; }
    /// Vertex index of [leg, j], both 1-based.
    int vertex(int leg, int j) const;
    bool has_loops(int v) const { return v == 0 && genus_ > 0; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<int>& neighbours(int v) const { return adjacency_[v]; }

    /// (a, b) = ᵗa C b.
    std::int64_t form(const DimVector& a, const DimVector& b) const;
    /// (v, e_i).
    std::int64_t pairing(const DimVector& v, int i) const;
    /// s_i(v) = v − (v, e_i) e_i; only for loopless i.
    DimVector reflect(const DimVector& v, int i) const;

private:
    int genus_;
    std::vector<int> legs_;
    int vertices_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> adjacency_;
};

/// Γ_μ and v_μ = (n; n − μ^i_1, n − μ^i_1 − μ^i_2, …).
std::pair<CometQuiver, DimVector> build_quiver(const MultiPartition& mu, int genus);

/// n²(2g−2+k) − Σ (μ^i_j)² + 2, checked against 2 − ᵗv C v.
std::int64_t d_mu(const MultiPartition& mu, int genus);
/// (2g−2+k)n − Σ_i μ^i_1.
std::int64_t delta(const MultiPartition& mu, int genus);

/// (v, e_i) ≤ 0 at every loopless vertex and connected support.
bool in_fundamental_set(const DimVector& v, const CometQuiver& q);

enum class RootTag { not_root, real, imaginary };

struct RootClass {
    RootTag tag;
    /// Reflections applied in order during descent.
    std::vector<int> word;
    /// Where the descent stopped: a simple root, a fundamental-set element,
    /// or a vector with a negative coordinate.
    DimVector terminal;
};

RootClass classify_root(const DimVector& v, const CometQuiver& q);
/// Same descent with a random eligible vertex at each step.
RootClass classify_root_random(const DimVector& v, const CometQuiver& q, std::mt19937_64& rng);
/// Applies the witness word backwards to the terminal vector.
DimVector replay_witness(const RootClass& rc, const CometQuiver& q);

std::string root_tag_name(RootTag tag);

}  // namespace unitensor
