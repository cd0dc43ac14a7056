#include "unitensor/quiver_roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unitensor {

CometQuiver::CometQuiver(int genus, std::vector<int> leg_lengths) : genus_(genus), legs_(std::move(leg_lengths)) {
    if (genus < 0) throw std::invalid_argument("CometQuiver: negative genus");
    for (int s : legs_) {
        if (s < 0) throw std::invalid_argument("CometQuiver: negative leg length");
    }
    vertices_ = 1 + std::accumulate(legs_.begin(), legs_.end(), 0);
    cartan_.assign(vertices_, std::vector<int>(vertices_, 0));
    adjacency_.assign(vertices_, {});
    cartan_[0][0] = 2 - 2 * genus_;
    auto link = [&](int a, int b) {
        cartan_[a][b] -= 1;
        cartan_[b][a] -= 1;
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    };
    for (std::size_t leg = 0; leg < legs_.size(); ++leg) {
        int prev = 0;
        for (int j = 1; j <= legs_[leg]; ++j) {
            const int v = vertex(static_cast<int>(leg) + 1, j);
            cartan_[v][v] = 2;
            link(prev, v);
            prev = v;
        }
    }
}

int CometQuiver::vertex(int leg, int j) const {
    if (leg < 1 || leg > static_cast<int>(legs_.size()) || j < 1 || j > legs_[leg - 1]) {
        throw std::out_of_range("CometQuiver::vertex");
    }
    int v = 1;
    for (int l = 1; l < leg; ++l) v += legs_[l - 1];
    return v + j - 1;
}

std::int64_t CometQuiver::form(const DimVector& a, const DimVector& b) const {
    std::int64_t s = 0;
    for (int i = 0; i < vertices_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < vertices_; ++j) s += a[i] * cartan_[i][j] * b[j];
    }
    return s;
}

std::int64_t CometQuiver::pairing(const DimVector& v, int i) const {
    std::int64_t s = 0;
    for (int j = 0; j < vertices_; ++j) s += static_cast<std::int64_t>(cartan_[i][j]) * v[j];
    return s;
}

DimVector CometQuiver::reflect(const DimVector& v, int i) const {
    if (has_loops(i)) throw std::invalid_argument("CometQuiver::reflect: vertex has loops");
    DimVector out = v;
    out[i] -= pairing(v, i);
    return out;
}

std::pair<CometQuiver, DimVector> build_quiver(const MultiPartition& mu, int genus) {
    const int n = mu.size();
    if (n < 1) throw std::invalid_argument("build_quiver: |μ| must be positive");
    std::vector<int> legs;
    for (const auto& p : mu.components()) legs.push_back(p.length() - 1);
    CometQuiver q(genus, legs);
    DimVector v(q.vertex_count(), 0);
    v[0] = n;
    for (int i = 0; i < mu.arity(); ++i) {
        int remaining = n;
        for (int j = 1; j <= legs[i]; ++j) {
            remaining -= mu[i].part(j);
            v[q.vertex(i + 1, j)] = remaining;
        }
    }
    return {std::move(q), std::move(v)};
}

std::int64_t d_mu(const MultiPartition& mu, int genus) {
    const std::int64_t n = mu.size();
    std::int64_t squares = 0;
    for (const auto& p : mu.components()) {
        for (int part : p.parts()) squares += static_cast<std::int64_t>(part) * part;
    }
    const std::int64_t closed = n * n * (2 * genus - 2 + mu.arity()) - squares + 2;
    const auto [q, v] = build_quiver(mu, genus);
    const std::int64_t from_form = 2 - q.form(v, v);
    if (closed != from_form) throw std::logic_error("d_mu: closed form and Cartan form disagree");
    return closed;
}

std::int64_t delta(const MultiPartition& mu, int genus) {
    std::int64_t firsts = 0;
    for (const auto& p : mu.components()) firsts += p.part(1);
    return static_cast<std::int64_t>(2 * genus - 2 + mu.arity()) * mu.size() - firsts;
}

bool in_fundamental_set(const DimVector& v, const CometQuiver& q) {
    const int nv = q.vertex_count();
    if (static_cast<int>(v.size()) != nv) throw std::invalid_argument("in_fundamental_set: dimension mismatch");
    int start = -1;
    for (int i = 0; i < nv; ++i) {
        if (v[i] < 0) throw std::invalid_argument("in_fundamental_set: negative coordinate");
        if (v[i] > 0 && start < 0) start = i;
    }
    if (start < 0) throw std::invalid_argument("in_fundamental_set: zero vector");
    for (int i = 0; i < nv; ++i) {
        if (!q.has_loops(i) && q.pairing(v, i) > 0) return false;
    }
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        for (int b : q.neighbours(a)) {
            if (!seen[b] && v[b] > 0) {
                seen[b] = true;
                stack.push_back(b);
            }
        }
    }
    for (int i = 0; i < nv; ++i) {
        if (v[i] > 0 && !seen[i]) return false;
    }
    return true;
}

namespace {

bool is_simple_root(const DimVector& v, const CometQuiver& q) {
    int where = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != 1 || where >= 0) return false;
        where = static_cast<int>(i);
    }
    return where >= 0 && !q.has_loops(where);
}

template <class Pick>
RootClass descend(DimVector v, const CometQuiver& q, Pick pick) {
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
        throw std::invalid_argument("classify_root: zero vector");
    }
    RootClass rc{RootTag::not_root, {}, {}};
    while (true) {
        if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) {
            rc.tag = RootTag::not_root;
            break;
        }
        if (is_simple_root(v, q)) {
            rc.tag = RootTag::real;
            break;
        }
        if (in_fundamental_set(v, q)) {
            rc.tag = RootTag::imaginary;
            break;
        }
        std::vector<int> eligible;
        for (int i = 0; i < q.vertex_count(); ++i) {
            if (!q.has_loops(i) && q.pairing(v, i) > 0) eligible.push_back(i);
        }
        // Disconnected support with nothing to reflect.
        if (eligible.empty()) {
            rc.tag = RootTag::not_root;
            break;
        }
        const int i = pick(eligible);
        v = q.reflect(v, i);
        rc.word.push_back(i);
    }
    rc.terminal = std::move(v);
    return rc;
}

}  // namespace

RootClass classify_root(const DimVector& v, const CometQuiver& q) {
    return descend(v, q, [](const std::vector<int>& e) { return e.front(); });
}

RootClass classify_root_random(const DimVector& v, const CometQuiver& q, std::mt19937_64& rng) {
    return descend(v, q, [&rng](const std::vector<int>& e) {
        return e[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng)];
    });
}

DimVector replay_witness(const RootClass& rc, const CometQuiver& q) {
    DimVector v = rc.terminal;
    for (auto it = rc.word.rbegin(); it != rc.word.rend(); ++it) v = q.reflect(v, *it);
    return v;
}

std::string root_tag_name(RootTag tag) {
    switch (tag) {
        case RootTag::real: return "real";
        case RootTag::imaginary: return "imaginary";
        case RootTag::not_root: return "none";
    }
    return "none";
}

}  // namespace unitensor
