#include "unitensor/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace unitensor {

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius: argument must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
}

Partition Partition::column(int n) { return Partition(std::vector<int>(n, 1)); }

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::n_stat() const {
    int s = 0;
    for (int i = 0; i < length(); ++i) s += i * parts_[i];
    return s;
}

int Partition::norm() const { return size() + 2 * n_stat(); }

std::int64_t Partition::z() const {
    std::int64_t z = 1;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        const auto m = static_cast<std::int64_t>(j - i);
        for (std::int64_t r = 1; r <= m; ++r) z *= parts_[i] * r;
        i = j;
    }
    return z;
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_.front(), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++c[j];
    }
    return Partition(std::move(c));
}

Partition Partition::scaled(int d) const {
    if (d < 0) throw std::invalid_argument("Partition::scaled: negative factor");
    std::vector<int> p = parts_;
    for (int& x : p) x *= d;
    return Partition(std::move(p));
}

Partition Partition::plus(const Partition& other) const {
    std::vector<int> p(std::max(length(), other.length()), 0);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) p[i] = part(i + 1) + other.part(i + 1);
    return Partition(std::move(p));
}

Partition Partition::join(const Partition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(p));
}

PartitionStats partition_stats(const Partition& lambda) {
    return {lambda.size(), lambda.length(), lambda.n_stat(), lambda.norm(), lambda.z()};
}

// ----------------------------------------------------------- MultiPartition

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    for (const auto& c : components_) {
        if (c.size() != components_.front().size()) {
            throw std::invalid_argument("MultiPartition: components of unequal size");
        }
    }
}

MultiPartition MultiPartition::zero(int arity) {
    return MultiPartition(std::vector<Partition>(arity));
}

MultiPartition MultiPartition::ones(int arity) {
    return MultiPartition(std::vector<Partition>(arity, Partition({1})));
}

MultiPartition MultiPartition::conjugate() const {
    std::vector<Partition> c;
    for (const auto& p : components_) c.push_back(p.conjugate());
    return MultiPartition(std::move(c));
}

MultiPartition MultiPartition::scaled(int d) const {
    std::vector<Partition> c;
    for (const auto& p : components_) c.push_back(p.scaled(d));
    return MultiPartition(std::move(c));
}

MultiPartition MultiPartition::plus(const MultiPartition& other) const {
    if (other.arity() != arity()) throw std::invalid_argument("MultiPartition::plus: arity mismatch");
    std::vector<Partition> c;
    for (int i = 0; i < arity(); ++i) c.push_back(components_[i].plus(other.components_[i]));
    return MultiPartition(std::move(c));
}

MultiPartition MultiPartition::join(const MultiPartition& other) const {
    if (other.arity() != arity()) throw std::invalid_argument("MultiPartition::join: arity mismatch");
    std::vector<Partition> c;
    for (int i = 0; i < arity(); ++i) c.push_back(components_[i].join(other.components_[i]));
    return MultiPartition(std::move(c));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("dominance_leq: size mismatch");
    int a = 0, b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a > b) return false;
    }
    return true;
}

bool dominance_leq(const MultiPartition& lambda, const MultiPartition& mu) {
    if (lambda.arity() != mu.arity()) throw std::invalid_argument("dominance_leq: arity mismatch");
    for (int i = 0; i < lambda.arity(); ++i) {
        if (!dominance_leq(lambda[i], mu[i])) return false;
    }
    return true;
}

// ---------------------------------------------------------------- MultiType

MultiType::MultiType(std::map<Key, int> entries) : entries_(std::move(entries)) {
    int arity = -1;
    for (const auto& [key, mult] : entries_) {
        if (key.first < 1) throw std::invalid_argument("MultiType: degree must be positive");
        if (key.second.is_zero()) throw std::invalid_argument("MultiType: zero multipartition in support");
        if (mult < 1) throw std::invalid_argument("MultiType: multiplicity must be positive");
        if (arity >= 0 && key.second.arity() != arity) throw std::invalid_argument("MultiType: mixed arity");
        arity = key.second.arity();
    }
}

int MultiType::size() const {
    int s = 0;
    for (const auto& [key, mult] : entries_) s += key.first * key.second.size() * mult;
    return s;
}

int MultiType::total_multiplicity() const {
    int r = 0;
    for (const auto& [key, mult] : entries_) r += mult;
    return r;
}

bool MultiType::is_split() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.first.first == 1; });
}

int MultiType::arity() const { return entries_.empty() ? 0 : entries_.begin()->first.second.arity(); }

MultiPartition MultiType::plus_partition() const {
    MultiPartition acc = MultiPartition::zero(arity());
    for (const auto& [key, mult] : entries_) acc = acc.plus(key.second.scaled(key.first * mult));
    return acc;
}

MultiType MultiType::coordinate(int i) const {
    std::map<Key, int> out;
    for (const auto& [key, mult] : entries_) {
        out[{key.first, MultiPartition({key.second[i]})}] += mult;
    }
    return MultiType(std::move(out));
}

// ---------------------------------------------------------------- SplitType

SplitType::SplitType(std::map<MultiPartition, int> entries) : entries_(std::move(entries)) {
    for (const auto& [alpha, mult] : entries_) {
        if (alpha.is_zero()) throw std::invalid_argument("SplitType: zero multipartition in support");
        if (mult < 1) throw std::invalid_argument("SplitType: multiplicity must be positive");
    }
}

int SplitType::size() const {
    int s = 0;
    for (const auto& [alpha, mult] : entries_) s += alpha.size() * mult;
    return s;
}

std::vector<std::pair<MultiPartition, int>> SplitType::factors() const {
    return {entries_.begin(), entries_.end()};
}

MultiType SplitType::fiber_element(const std::vector<Partition>& labels) const {
    if (labels.size() != entries_.size()) throw std::invalid_argument("SplitType::fiber_element: wrong label count");
    std::map<MultiType::Key, int> out;
    std::size_t i = 0;
    for (const auto& [alpha, mult] : entries_) {
        const Partition& lambda = labels[i++];
        if (lambda.size() != mult) throw std::invalid_argument("SplitType::fiber_element: label size mismatch");
        for (int part : lambda.parts()) out[{part, alpha}] += 1;
    }
    return MultiType(std::move(out));
}

std::vector<std::vector<Partition>> SplitType::fiber_labels() const {
    std::vector<std::vector<Partition>> result{{}};
    for (const auto& [alpha, mult] : entries_) {
        std::vector<std::vector<Partition>> next;
        for (const auto& prefix : result) {
            for (const auto& lambda : partitions(mult)) {
                auto v = prefix;
                v.push_back(lambda);
                next.push_back(std::move(v));
            }
        }
        result = std::move(next);
    }
    return result;
}

SplitType SplitType::flatten(const MultiType& omega) {
    std::map<MultiPartition, int> out;
    for (const auto& [key, mult] : omega.entries()) out[key.second] += key.first * mult;
    return SplitType(std::move(out));
}

// -------------------------------------------------------------- Enumeration

namespace {

void generate_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        generate_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: negative size");
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(table_mutex());
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> prefix;
        generate_partitions(n, n, prefix, out);
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

std::size_t partition_index(const Partition& lambda) {
    const auto& ps = partitions(lambda.size());
    // partitions(n) is sorted in decreasing lexicographic order.
    auto it = std::lower_bound(ps.begin(), ps.end(), lambda, std::greater<>());
    if (it == ps.end() || *it != lambda) throw std::logic_error("partition_index: not found");
    return static_cast<std::size_t>(it - ps.begin());
}

std::vector<MultiPartition> multipartitions(int n, int arity) {
    if (arity < 1) throw std::invalid_argument("multipartitions: arity must be positive");
    const auto& ps = partitions(n);
    std::vector<std::vector<Partition>> tuples{{}};
    for (int i = 0; i < arity; ++i) {
        std::vector<std::vector<Partition>> next;
        next.reserve(tuples.size() * ps.size());
        for (const auto& t : tuples) {
            for (const auto& p : ps) {
                auto v = t;
                v.push_back(p);
                next.push_back(std::move(v));
            }
        }
        tuples = std::move(next);
    }
    std::vector<MultiPartition> out;
    out.reserve(tuples.size());
    for (auto& t : tuples) out.emplace_back(std::move(t));
    return out;
}

namespace {

template <class Atom, class Weight, class Emit>
void choose_multiplicities(const std::vector<Atom>& atoms, const Weight& weight, std::size_t index,
                           int remaining, std::vector<std::pair<Atom, int>>& chosen, const Emit& emit) {
    if (remaining == 0) {
        emit(chosen);
        return;
    }
    if (index == atoms.size()) return;
    const int w = weight(atoms[index]);
    for (int m = remaining / w; m >= 0; --m) {
        if (m > 0) chosen.emplace_back(atoms[index], m);
        choose_multiplicities(atoms, weight, index + 1, remaining - m * w, chosen, emit);
        if (m > 0) chosen.pop_back();
    }
}

}  // namespace

std::vector<MultiType> multitypes(int n, int arity) {
    using Atom = MultiType::Key;
    std::vector<Atom> atoms;
    for (int m = 1; m <= n; ++m) {
        for (const auto& mu : multipartitions(m, arity)) {
            for (int d = 1; d * m <= n; ++d) atoms.emplace_back(d, mu);
        }
    }
    std::vector<MultiType> out;
    std::vector<std::pair<Atom, int>> chosen;
    choose_multiplicities(
        atoms, [](const Atom& a) { return a.first * a.second.size(); }, 0, n, chosen,
        [&](const auto& picked) { out.emplace_back(std::map<Atom, int>(picked.begin(), picked.end())); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SplitType> split_types(int n, int arity) {
    std::vector<MultiPartition> atoms;
    for (int m = 1; m <= n; ++m) {
        for (auto& mu : multipartitions(m, arity)) atoms.push_back(std::move(mu));
    }
    std::vector<SplitType> out;
    std::vector<std::pair<MultiPartition, int>> chosen;
    choose_multiplicities(
        atoms, [](const MultiPartition& a) { return a.size(); }, 0, n, chosen,
        [&](const auto& picked) { out.emplace_back(std::map<MultiPartition, int>(picked.begin(), picked.end())); });
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------ Murnaghan–Nakayama

namespace {

// χ on a beta-set (distinct non-negative integers, descending) for the cycle
// type given by rho[from..].
std::int64_t mn_recursive(std::vector<int>& beta, const std::vector<int>& rho, std::size_t from) {
    if (from == rho.size()) return 1;
    const int r = rho[from];
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        const int target = b - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // Height of the rim hook: beads strictly between target and b.
        int between = 0;
        for (int x : beta) {
            if (x > target && x < b) ++between;
        }
        beta[i] = target;
        const std::int64_t sub = mn_recursive(beta, rho, from + 1);
        beta[i] = b;
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

std::int64_t sn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("sn_character: size mismatch");
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.part(i + 1) + (len - 1 - i);
    return mn_recursive(beta, rho.parts(), 0);
}

const std::vector<std::vector<std::int64_t>>& character_table(int n) {
    static std::map<int, std::vector<std::vector<std::int64_t>>> cache;
    const auto& ps = partitions(n);
    std::lock_guard lock(table_mutex());
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::vector<std::int64_t>> table(ps.size(), std::vector<std::int64_t>(ps.size()));
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = 0; j < ps.size(); ++j) table[i][j] = sn_character(ps[i], ps[j]);
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

// ------------------------------------------------------------------- Kostka

namespace {

void ssyt_fill(const std::vector<int>& shape, const std::vector<int>& content, std::size_t letter,
               std::vector<int>& filled, Tableau& tableau, const std::function<void(const Tableau&)>& visit) {
    if (letter == content.size()) {
        if (filled == shape) visit(tableau);
        return;
    }
    const std::vector<int> before = filled;
    // Distribute content[letter] boxes as a horizontal strip over the rows.
    std::function<void(std::size_t, int)> place = [&](std::size_t row, int left) {
        if (row == shape.size()) {
            if (left == 0) ssyt_fill(shape, content, letter + 1, filled, tableau, visit);
            return;
        }
        const int cap = row == 0 ? shape[0] : std::min(shape[row], before[row - 1]);
        const int room = cap - before[row];
        for (int take = std::min(room, left); take >= 0; --take) {
            filled[row] = before[row] + take;
            for (int j = 0; j < take; ++j) tableau[row].push_back(static_cast<int>(letter) + 1);
            place(row + 1, left - take);
            tableau[row].resize(before[row]);
            filled[row] = before[row];
        }
    };
    place(0, content[letter]);
}

}  // namespace

void for_each_ssyt(const Partition& shape, const std::vector<int>& content,
                   const std::function<void(const Tableau&)>& visit) {
    const int total = std::accumulate(content.begin(), content.end(), 0);
    if (total != shape.size()) return;
    std::vector<int> filled(shape.length(), 0);
    Tableau tableau(shape.length());
    ssyt_fill(shape.parts(), content, 0, filled, tableau, visit);
}

std::int64_t kostka_number(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("kostka_number: size mismatch");
    std::int64_t count = 0;
    for_each_ssyt(lambda, mu.parts(), [&](const Tableau&) { ++count; });
    return count;
}

const std::vector<std::vector<std::int64_t>>& kostka_matrix(int n) {
    static std::map<int, std::vector<std::vector<std::int64_t>>> cache;
    const auto& ps = partitions(n);
    {
        std::lock_guard lock(table_mutex());
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::vector<std::int64_t>> k(ps.size(), std::vector<std::int64_t>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = 0; j < ps.size(); ++j) k[i][j] = kostka_number(ps[i], ps[j]);
    }
    std::lock_guard lock(table_mutex());
    return cache.emplace(n, std::move(k)).first->second;
}

std::map<Partition, std::int64_t> inverse_kostka_row(const Partition& mu) {
    // K is upper unitriangular in the order of partitions(n) (larger in
    // dominance comes first). Solve x·Kᵀ-inverse row by back substitution:
    // s_μ = Σ_λ K*_{μλ} h_λ with h_λ = Σ_ν K_{νλ} s_ν, so
    // Σ_λ K*_{μλ} K_{νλ} = δ_{μν}.
    const int n = mu.size();
    const auto& ps = partitions(n);
    const auto& k = kostka_matrix(n);
    const std::size_t m = ps.size();
    const std::size_t row = partition_index(mu);
    // x_λ = K*_{μλ}; equations: for each ν, Σ_λ K_{νλ} x_λ = δ_{μν}.
    // K_{νλ} ≠ 0 only when λ ⊴ ν, i.e. index(λ) ≥ index(ν) in our order.
    std::vector<std::int64_t> x(m, 0);
    for (std::size_t nu = m; nu-- > 0;) {
        std::int64_t rhs = (nu == row) ? 1 : 0;
        for (std::size_t lam = nu + 1; lam < m; ++lam) rhs -= k[nu][lam] * x[lam];
        x[nu] = rhs;  // K_{νν} = 1
    }
    std::map<Partition, std::int64_t> out;
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i] != 0) out[ps[i]] = x[i];
    }
    return out;
}

TypeCoefficients type_coeffs(const MultiType& omega) {
    if (omega.empty()) throw std::invalid_argument("type_coeffs: zero multi-type");
    TypeCoefficients out;
    std::set<int> degrees;
    for (const auto& [key, mult] : omega.entries()) degrees.insert(key.first);
    if (degrees.size() == 1) {
        const int d = *degrees.begin();
        const int r = omega.total_multiplicity();
        Integer num = moebius(d);
        if ((r - 1) % 2 == 1) num = -num;
        Integer fact = 1;
        for (int i = 2; i <= r - 1; ++i) fact *= i;
        Integer den = d;
        for (const auto& [key, mult] : omega.entries()) {
            for (int i = 2; i <= mult; ++i) den *= i;
        }
        out.log_coeff = Rational(num * fact, den);
        out.log_coeff.canonicalize();
    } else {
        out.log_coeff = 0;
    }
    Integer den = 1;
    for (const auto& [key, mult] : omega.entries()) {
        for (int i = 1; i <= mult; ++i) den *= key.first * i;
    }
    out.exp_coeff = Rational(1, den);
    out.exp_coeff.canonicalize();
    return out;
}

// --------------------------------------------------------------------- Text

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("cannot parse integer '" + std::string(s) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(' )) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (text.empty() || text == "0") return {};
    std::vector<int> parts;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view token = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto caret = token.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_int(token));
        } else {
            const int part = parse_int(trim(token.substr(0, caret)));
            const int exponent = parse_int(trim(token.substr(caret + 1)));
            if (exponent < 0) throw std::invalid_argument("negative exponent in partition");
            parts.insert(parts.end(), exponent, part);
        }
    }
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("negative part in partition");
    }
    return Partition(std::move(parts));
}

MultiPartition parse_multipartition(std::string_view text) {
    std::vector<Partition> comps;
    while (true) {
        const auto bar = text.find('|');
        comps.push_back(parse_partition(text.substr(0, bar)));
        if (bar == std::string_view::npos) break;
        text = text.substr(bar + 1);
    }
    return MultiPartition(std::move(comps));
}

std::string format_partition(const Partition& lambda) {
    if (lambda.empty()) return "0";
    std::ostringstream os;
    const auto& p = lambda.parts();
    bool first = true;
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (!first) os << ',';
        first = false;
        os << p[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::string format_multipartition(const MultiPartition& mu) {
    std::string out;
    for (int i = 0; i < mu.arity(); ++i) {
        if (i > 0) out += '|';
        out += format_partition(mu[i]);
    }
    return out;
}

std::string format_multitype(const MultiType& omega) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [key, mult] : omega.entries()) {
        if (!first) os << ", ";
        first = false;
        os << '(' << key.first << ',' << format_multipartition(key.second) << "):" << mult;
    }
    os << '}';
    return os.str();
}

std::string format_split_type(const SplitType& omega) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, mult] : omega.entries()) {
        if (!first) os << ' ';
        first = false;
        os << '[' << format_multipartition(alpha) << ']';
        if (mult > 1) os << '^' << mult;
    }
    return os.str();
}

}  // namespace unitensor
