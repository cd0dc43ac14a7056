#include "unitensor/oracle_glfq.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace unitensor {

namespace {

using Poly = std::vector<int>;  // ascending coefficients mod q

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

int mod(long v, int q) {
    const long r = v % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
    for (int b = 1; b < q; ++b) {
        if (a * b % q == 1) return b;
    }
    throw std::domain_error("inverse_mod: not invertible");
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int q) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
    }
    trim(out);
    return out;
}

Poly poly_sub(Poly a, const Poly& b, int q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], q);
    trim(a);
    return a;
}

// Remainder of a modulo a monic b; quotient written to quot if given.
Poly poly_divmod(Poly a, const Poly& b, int q, Poly* quot) {
    const int db = static_cast<int>(b.size()) - 1;
    Poly qt(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    trim(a);
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int c = a.back();
        qt[shift] = c;
        for (int i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], q);
        trim(a);
    }
    if (quot) {
        trim(qt);
        *quot = std::move(qt);
    }
    return a;
}

std::vector<Poly> monic_polys(int degree, int q) {
    std::vector<Poly> out;
    long count = 1;
    for (int i = 0; i < degree; ++i) count *= q;
    for (long code = 0; code < count; ++code) {
        Poly p(degree + 1, 0);
        long c = code;
        for (int i = 0; i < degree; ++i) {
            p[i] = static_cast<int>(c % q);
            c /= q;
        }
        p[degree] = 1;
        out.push_back(std::move(p));
    }
    return out;
}

bool irreducible(const Poly& p, int q) {
    const int d = static_cast<int>(p.size()) - 1;
    for (int e = 1; 2 * e <= d; ++e) {
        for (const auto& f : monic_polys(e, q)) {
            if (poly_divmod(p, f, q, nullptr).empty()) return false;
        }
    }
    return true;
}

FqMatrix poly_at(const Poly& p, const FqMatrix& x) {
    FqMatrix out{x.n, x.q, std::vector<int>(x.n * x.n, 0)};
    FqMatrix pw = FqMatrix::identity(x.n, x.q);
    for (int c : p) {
        for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = (out.a[i] + c * pw.a[i]) % x.q;
        pw = pw * x;
    }
    return out;
}

std::vector<std::vector<int>> rows_of(const FqMatrix& x) {
    std::vector<std::vector<int>> rows(x.n);
    for (int i = 0; i < x.n; ++i) rows[i].assign(x.a.begin() + i * x.n, x.a.begin() + (i + 1) * x.n);
    return rows;
}

// det(tI − X) by cofactor expansion over F_q[t].
Poly char_poly(const FqMatrix& x) {
    const int n = x.n;
    const int q = x.q;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Poly e{mod(-x.at(i, j), q)};
            if (i == j) e = {mod(-x.at(i, j), q), 1};
            trim(e);
            m[i][j] = e;
        }
    }
    std::function<Poly(const std::vector<int>&, int)> det = [&](const std::vector<int>& cols, int row) -> Poly {
        if (row == n) return {1};
        Poly acc;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> rest = cols;
            rest.erase(rest.begin() + static_cast<long>(c));
            Poly term = poly_mul(m[row][cols[c]], det(rest, row + 1), q);
            acc = c % 2 == 0 ? poly_sub(acc, poly_sub({}, term, q), q) : poly_sub(acc, term, q);
        }
        return acc;
    };
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    return det(cols, 0);
}

// Subspaces of F_q^n as membership masks over vector codes.
using Subspace = std::vector<char>;

int vec_code(const std::vector<int>& v, int q) {
    int c = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) c = c * q + *it;
    return c;
}

std::vector<int> code_vec(int c, int n, int q) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = c % q;
        c /= q;
    }
    return v;
}

struct SubspaceLattice {
    int n;
    int q;
    int points;
    std::vector<std::vector<Subspace>> by_dim;
};

const SubspaceLattice& lattice(int n, int q) {
    static std::mutex m;
    static std::map<std::pair<int, int>, SubspaceLattice> cache;
    std::lock_guard lock(m);
    auto it = cache.find({n, q});
    if (it != cache.end()) return it->second;
    int points = 1;
    for (int i = 0; i < n; ++i) points *= q;
    SubspaceLattice lat{n, q, points, std::vector<std::vector<Subspace>>(n + 1)};
    Subspace zero(points, 0);
    zero[0] = 1;
    lat.by_dim[0].push_back(zero);
    for (int d = 0; d < n; ++d) {
        std::set<Subspace> next;
        for (const auto& s : lat.by_dim[d]) {
            for (int v = 1; v < points; ++v) {
                if (s[v]) continue;
                Subspace t(points, 0);
                const auto vv = code_vec(v, n, q);
                for (int u = 0; u < points; ++u) {
                    if (!s[u]) continue;
                    const auto uu = code_vec(u, n, q);
                    for (int c = 0; c < q; ++c) {
                        std::vector<int> w(n);
                        for (int i = 0; i < n; ++i) w[i] = (uu[i] + c * vv[i]) % q;
                        t[vec_code(w, q)] = 1;
                    }
                }
                next.insert(std::move(t));
            }
        }
        lat.by_dim[d + 1].assign(next.begin(), next.end());
    }
    return cache.emplace(std::pair(n, q), std::move(lat)).first->second;
}

bool stable(const Subspace& s, const FqMatrix& x) {
    const int n = x.n;
    for (int u = 0; u < static_cast<int>(s.size()); ++u) {
        if (!s[u]) continue;
        const auto uu = code_vec(u, n, x.q);
        std::vector<int> w(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) w[i] = (w[i] + x.at(i, j) * uu[j]) % x.q;
        }
        if (!s[vec_code(w, x.q)]) return false;
    }
    return true;
}

bool contained(const Subspace& a, const Subspace& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) return false;
    }
    return true;
}

std::int64_t group_order(int n, int q) {
    std::int64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    std::int64_t order = 1;
    std::int64_t qj = 1;
    for (int j = 0; j < n; ++j) {
        order *= qn - qj;
        qj *= q;
        if (order > 1'000'000) return order;
    }
    return order;
}

FqMatrix decode(std::int64_t code, int n, int q) {
    FqMatrix x{n, q, std::vector<int>(n * n)};
    for (auto& e : x.a) {
        e = static_cast<int>(code % q);
        code /= q;
    }
    return x;
}

std::int64_t encode(const FqMatrix& x) {
    std::int64_t c = 0;
    for (auto it = x.a.rbegin(); it != x.a.rend(); ++it) c = c * x.q + *it;
    return c;
}

FqMatrix inverse(const FqMatrix& x) {
    const int n = x.n;
    const int q = x.q;
    std::vector<std::vector<int>> aug(n, std::vector<int>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = x.at(i, j);
        aug[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        std::swap(aug[p], aug[c]);
        const int inv = inverse_mod(aug[c][c], q);
        for (auto& e : aug[c]) e = e * inv % q;
        for (int r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            const int f = aug[r][c];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] = mod(aug[r][j] - f * aug[c][j], q);
        }
    }
    FqMatrix out{n, q, std::vector<int>(n * n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.at(i, j) = aug[i][n + j];
    }
    return out;
}

int primitive_root(int q) {
    for (int g = 1; g < q; ++g) {
        int x = 1;
        int ord = 0;
        do {
            x = x * g % q;
            ++ord;
        } while (x != 1);
        if (ord == q - 1) return g;
    }
    return 1;
}

int legendre(int a, int q) {
    int r = 1;
    for (int i = 0; i < (q - 1) / 2; ++i) r = r * a % q;
    return r == 1 ? 1 : -1;
}

std::int64_t count_flags(const std::vector<std::vector<Subspace>>& stable_by_dim, const std::vector<int>& composition) {
    // Chains V_1 ⊂ ⋯ ⊂ V_{r−1} through the partial sums; V_r is everything.
    std::vector<int> dims;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < composition.size(); ++i) {
        acc += composition[i];
        dims.push_back(acc);
    }
    if (dims.empty()) return 1;
    std::vector<std::int64_t> ways(stable_by_dim[dims[0]].size(), 1);
    for (std::size_t level = 1; level < dims.size(); ++level) {
        const auto& lower = stable_by_dim[dims[level - 1]];
        const auto& upper = stable_by_dim[dims[level]];
        std::vector<std::int64_t> next(upper.size(), 0);
        for (std::size_t u = 0; u < upper.size(); ++u) {
            for (std::size_t l = 0; l < lower.size(); ++l) {
                if (contained(lower[l], upper[u])) next[u] += ways[l];
            }
        }
        ways = std::move(next);
    }
    return std::accumulate(ways.begin(), ways.end(), std::int64_t{0});
}

std::vector<std::vector<Subspace>> stable_subspaces(const FqMatrix& x) {
    const auto& lat = lattice(x.n, x.q);
    std::vector<std::vector<Subspace>> out(x.n + 1);
    for (int d = 0; d <= x.n; ++d) {
        for (const auto& s : lat.by_dim[d]) {
            if (stable(s, x)) out[d].push_back(s);
        }
    }
    return out;
}

}  // namespace

FqMatrix FqMatrix::identity(int n, int q) {
    FqMatrix x{n, q, std::vector<int>(n * n, 0)};
    for (int i = 0; i < n; ++i) x.at(i, i) = 1;
    return x;
}

FqMatrix operator*(const FqMatrix& x, const FqMatrix& y) {
    const int n = x.n;
    FqMatrix out{n, x.q, std::vector<int>(n * n, 0)};
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const int a = x.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) = (out.at(i, j) + a * y.at(k, j)) % x.q;
        }
    }
    return out;
}

int fq_rank(std::vector<std::vector<int>> rows, int q) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int p = rank;
        while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
        if (p == static_cast<int>(rows.size())) continue;
        std::swap(rows[p], rows[rank]);
        const int inv = inverse_mod(rows[rank][c], q);
        for (auto& e : rows[rank]) e = e * inv % q;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
            const int f = rows[r][c];
            for (int j = 0; j < cols; ++j) rows[r][j] = mod(rows[r][j] - f * rows[rank][j], q);
        }
        ++rank;
    }
    return rank;
}

int fq_det(const FqMatrix& x) {
    // det X = (−1)^n χ_X(0).
    const Poly p = char_poly(x);
    const int c0 = p.empty() ? 0 : p[0];
    return x.n % 2 == 0 ? c0 : mod(-c0, x.q);
}

MultiType class_type(const FqMatrix& x) {
    const int n = x.n;
    const int q = x.q;
    Poly p = char_poly(x);
    std::map<MultiType::Key, int> entries;
    for (int d = 1; d <= n && p.size() > 1; ++d) {
        for (const auto& f : monic_polys(d, q)) {
            if (!irreducible(f, q)) continue;
            int e = 0;
            Poly quot;
            while (p.size() > 1 && poly_divmod(p, f, q, &quot).empty()) {
                p = quot;
                ++e;
            }
            if (e == 0) continue;
            // dim ker f(X)^j = d (λ'_1 + ⋯ + λ'_j).
            const FqMatrix fx = poly_at(f, x);
            FqMatrix pw = FqMatrix::identity(n, q);
            std::vector<int> conj;
            int prev = 0;
            for (int j = 1; j <= e; ++j) {
                pw = pw * fx;
                const int ker = n - fq_rank(rows_of(pw), q);
                if ((ker - prev) % d != 0) throw std::logic_error("class_type: kernel dimension not divisible");
                if (ker > prev) conj.push_back((ker - prev) / d);
                prev = ker;
            }
            const Partition lambda = Partition(conj).conjugate();
            entries[{d, MultiPartition{lambda}}] += 1;
        }
    }
    return MultiType(std::move(entries));
}

std::int64_t flag_fixed_points(const FqMatrix& x, const std::vector<int>& composition) {
    int total = 0;
    for (int c : composition) {
        if (c <= 0) throw std::invalid_argument("flag_fixed_points: composition parts must be positive");
        total += c;
    }
    if (total != x.n) throw std::invalid_argument("flag_fixed_points: composition does not sum to n");
    return count_flags(stable_subspaces(x), composition);
}

const GroupClasses& enumerate_classes(int n, int q) {
    static std::mutex m;
    static std::map<std::pair<int, int>, GroupClasses> cache;
    {
        std::lock_guard lock(m);
        auto it = cache.find({n, q});
        if (it != cache.end()) return it->second;
    }
    if (n < 1) throw std::invalid_argument("enumerate_classes: n must be positive");
    if (!is_prime(q)) throw std::domain_error("enumerate_classes: q must be prime");
    const std::int64_t order = group_order(n, q);
    if (order > 1'000'000) throw std::domain_error("enumerate_classes: group too large");

    std::int64_t codes = 1;
    for (int i = 0; i < n * n; ++i) codes *= q;

    std::vector<FqMatrix> gens;
    std::vector<FqMatrix> gens_inv;
    FqMatrix diag = FqMatrix::identity(n, q);
    diag.at(0, 0) = primitive_root(q);
    if (q > 2) gens.push_back(diag);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FqMatrix t = FqMatrix::identity(n, q);
            t.at(i, j) = 1;
            gens.push_back(t);
        }
    }
    for (const auto& g : gens) gens_inv.push_back(inverse(g));

    GroupClasses out{n, q, order, {}};
    std::vector<int> class_of(codes, -1);
    std::int64_t seen = 0;
    for (std::int64_t code = 0; code < codes; ++code) {
        if (class_of[code] >= 0) continue;
        const FqMatrix x = decode(code, n, q);
        if (fq_det(x) == 0) continue;
        const int id = static_cast<int>(out.classes.size());
        ClassData cd;
        cd.representative = x;
        std::deque<std::int64_t> queue{code};
        class_of[code] = id;
        while (!queue.empty()) {
            const FqMatrix y = decode(queue.front(), n, q);
            queue.pop_front();
            ++cd.size;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                const std::int64_t c = encode(gens[g] * y * gens_inv[g]);
                if (class_of[c] < 0) {
                    class_of[c] = id;
                    queue.push_back(c);
                }
            }
        }
        seen += cd.size;
        // Commutant: kernel of Y ↦ XY − YX.
        std::vector<std::vector<int>> rows;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                FqMatrix e{n, q, std::vector<int>(n * n, 0)};
                e.at(a, b) = 1;
                const FqMatrix xe = x * e;
                const FqMatrix ex = e * x;
                std::vector<int> row(n * n);
                for (int i = 0; i < n * n; ++i) row[i] = mod(xe.a[i] - ex.a[i], q);
                rows.push_back(std::move(row));
            }
        }
        cd.centralizer_dim = n * n - fq_rank(std::move(rows), q);
        cd.class_type = class_type(x);
        out.classes.push_back(std::move(cd));
    }
    if (seen != order) throw std::logic_error("enumerate_classes: class sizes do not sum to the group order");

    // Unipotent character values: 𝒰_μ = Σ_λ K*_{μλ} π_λ.
    for (auto& cd : out.classes) {
        const auto st = stable_subspaces(cd.representative);
        std::map<Partition, std::int64_t> perm;
        for (const auto& lam : partitions(n)) perm[lam] = count_flags(st, lam.parts());
        for (const auto& mu : partitions(n)) {
            Integer v = 0;
            for (const auto& [lam, k] : inverse_kostka_row(mu)) v += Integer(static_cast<long>(k)) * perm[lam];
            cd.char_values[mu] = v;
        }
    }
    // Each 𝒰_μ must be irreducible with positive degree.
    const auto identity = std::find_if(out.classes.begin(), out.classes.end(), [&](const ClassData& cd) {
        return cd.representative == FqMatrix::identity(n, q);
    });
    for (const auto& mu : partitions(n)) {
        Integer norm = 0;
        for (const auto& cd : out.classes) norm += cd.char_values.at(mu) * cd.char_values.at(mu) * cd.size;
        if (norm != order || identity->char_values.at(mu) <= 0) {
            throw std::logic_error("enumerate_classes: unipotent character " + format_partition(mu) +
                                   " of GL_" + std::to_string(n) + "(F_" + std::to_string(q) +
                                   ") is not irreducible");
        }
    }

    std::lock_guard lock(m);
    return cache.emplace(std::pair(n, q), std::move(out)).first->second;
}

std::map<Partition, std::vector<Integer>> unipotent_character_table(int n, int q) {
    const auto& g = enumerate_classes(n, q);
    std::map<Partition, std::vector<Integer>> out;
    for (const auto& mu : partitions(n)) {
        auto& row = out[mu];
        for (const auto& cd : g.classes) row.push_back(cd.char_values.at(mu));
    }
    return out;
}

namespace {

Integer class_sum(const MultiPartition& mu, int genus, int q, const std::vector<int>* twists) {
    const int n = mu.size();
    const auto& g = enumerate_classes(n, q);
    Integer total = 0;
    for (const auto& cd : g.classes) {
        Integer v = cd.size;
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(genus * cd.centralizer_dim));
        v *= e;
        for (int i = 0; i < mu.arity() && v != 0; ++i) v *= cd.char_values.at(mu[i]);
        if (twists) {
            const int sign = legendre(fq_det(cd.representative), q);
            for (int t : *twists) {
                if (t == 2) v *= sign;
            }
        }
        total += v;
    }
    if (total % g.order != 0 || total < 0) {
        throw std::logic_error("oracle inner product is not a non-negative integer at " + format_multipartition(mu));
    }
    return total / g.order;
}

}  // namespace

Integer tensor_inner_product(const MultiPartition& mu, int genus, int q) {
    if (mu.size() < 1) throw std::invalid_argument("tensor_inner_product: |μ| must be positive");
    if (genus < 0) throw std::invalid_argument("tensor_inner_product: negative genus");
    return class_sum(mu, genus, q, nullptr);
}

Integer generic_inner_product(const MultiPartition& mu, const std::vector<int>& twists, int genus, int q) {
    if (mu.size() != 2 || (q != 3 && q != 5)) {
        throw std::domain_error("generic_inner_product: only n = 2 with q in {3, 5} is supported");
    }
    if (static_cast<int>(twists.size()) != mu.arity()) {
        throw std::invalid_argument("generic_inner_product: one twist per component");
    }
    int odd = 0;
    for (int t : twists) {
        if (t != 1 && t != 2) throw std::domain_error("generic_inner_product: twist orders must be 1 or 2");
        odd += t == 2;
    }
    if (odd % 2 == 0) throw std::invalid_argument("generic_inner_product: twist product is not generic");
    return class_sum(mu, genus, q, &twists);
}

}  // namespace unitensor
