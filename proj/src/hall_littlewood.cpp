#include "unitensor/hall_littlewood.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace unitensor {

namespace {

std::mutex& hl_mutex() {
    static std::mutex m;
    return m;
}

// Charge of a standard subword given by the positions of 1, 2, …, r: the
// index goes up each time r+1 sits to the right of r.
int standard_charge(const std::vector<std::size_t>& pos) {
    int index = 0;
    int total = 0;
    for (std::size_t r = 1; r < pos.size(); ++r) {
        if (pos[r] > pos[r - 1]) ++index;
        total += index;
    }
    return total;
}

// Reading word: rows bottom to top, each row left to right.
std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto row = t.rbegin(); row != t.rend(); ++row) w.insert(w.end(), row->begin(), row->end());
    return w;
}

}  // namespace

int charge(const std::vector<int>& word) {
    const std::size_t len = word.size();
    std::vector<bool> used(len, false);
    std::size_t remaining = len;
    int total = 0;
    while (remaining > 0) {
        std::vector<std::size_t> pos;
        // Start just past the right end; scan leftwards cyclically for 1, 2, …
        std::size_t cursor = len;
        for (int letter = 1;; ++letter) {
            bool found = false;
            for (std::size_t step = 1; step <= len; ++step) {
                const std::size_t p = (cursor + len - step) % len;
                if (!used[p] && word[p] == letter) {
                    used[p] = true;
                    pos.push_back(p);
                    cursor = p;
                    found = true;
                    break;
                }
            }
            if (!found) break;
        }
        if (pos.empty()) throw std::invalid_argument("charge: content is not a partition");
        remaining -= pos.size();
        total += standard_charge(pos);
    }
    return total;
}

TPoly kostka_poly(const Partition& nu, const Partition& lambda) {
    if (nu.size() != lambda.size()) throw std::invalid_argument("kostka_poly: size mismatch");
    std::vector<Rational> coeffs;
    for_each_ssyt(nu, lambda.parts(), [&](const Tableau& t) {
        const int c = charge(reading_word(t));
        if (static_cast<int>(coeffs.size()) <= c) coeffs.resize(c + 1);
        coeffs[c] += 1;
    });
    return TPoly(std::move(coeffs));
}

TPoly modified_kostka(const Partition& nu, const Partition& lambda) {
    const TPoly k = kostka_poly(nu, lambda);
    const int shift = lambda.n_stat();
    std::vector<Rational> out(shift + 1);
    for (int i = 0; i <= k.degree(); ++i) {
        if (i > shift) throw NonPolynomialError("modified_kostka: charge exceeds n(λ)");
        out[shift - i] = k.coeff(i);
    }
    return TPoly(std::move(out));
}

const HLTable& hl_table(int n) {
    static std::map<int, HLTable> cache;
    {
        std::lock_guard lock(hl_mutex());
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    HLTable table;
    table.n = n;
    for (const auto& nu : partitions(n)) {
        for (const auto& lam : partitions(n)) {
            TPoly k = kostka_poly(nu, lam);
            if (k.is_zero()) continue;
            table.modified.emplace(std::pair(nu, lam), modified_kostka(nu, lam));
            table.kostka.emplace(std::pair(nu, lam), std::move(k));
        }
    }
    std::lock_guard lock(hl_mutex());
    return cache.emplace(n, std::move(table)).first->second;
}

const std::vector<std::pair<Partition, TPoly>>& htilde_power(const Partition& lambda) {
    static std::map<Partition, std::vector<std::pair<Partition, TPoly>>> cache;
    {
        std::lock_guard lock(hl_mutex());
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    const int n = lambda.size();
    const HLTable& table = hl_table(n);
    std::vector<std::pair<Partition, TPoly>> out;
    for (const auto& rho : partitions(n)) {
        TPoly c;
        for (const auto& nu : partitions(n)) {
            auto it = table.modified.find({nu, lambda});
            if (it == table.modified.end()) continue;
            const auto chi = sn_character(nu, rho);
            if (chi != 0) c += it->second * make_rational(static_cast<long>(chi), static_cast<long>(rho.z()));
        }
        if (!c.is_zero()) out.emplace_back(rho, std::move(c));
    }
    std::lock_guard lock(hl_mutex());
    return cache.emplace(lambda, std::move(out)).first->second;
}

SymFunc<TRat> htilde(const Partition& lambda, int truncation) {
    if (lambda.size() > truncation) throw std::invalid_argument("htilde: |λ| exceeds truncation");
    SymFunc<TRat> f(1, truncation);
    for (const auto& [rho, c] : htilde_power(lambda)) f.add_term(MultiPartition{rho}, TRat(c));
    return f;
}

TPoly centralizer_order(const Partition& lambda) {
    // t^{⟨λ,λ⟩} Π_i Π_{j≤m_i} (1 − t^{-j}) = t^{⟨λ,λ⟩ − Σ j} Π (t^j − 1).
    int shift = lambda.norm();
    TPoly out(1);
    const int top = lambda.empty() ? 0 : lambda.part(1);
    for (int i = 1; i <= top; ++i) {
        for (int j = 1; j <= lambda.multiplicity(i); ++j) {
            out *= TPoly::monomial(j) - TPoly(1);
            shift -= j;
        }
    }
    return out.shift_up(shift);
}

TRat h_weight(const Partition& lambda, int genus) {
    if (genus < 0) throw std::invalid_argument("h_weight: negative genus");
    return TRat(TPoly::monomial(genus * lambda.norm()), centralizer_order(lambda));
}

SymFunc<TRat> omega_series(int n, int arity, int genus) {
    if (n < 0) throw std::invalid_argument("omega_series: negative truncation");
    if (genus < 0) throw std::invalid_argument("omega_series: negative genus");
    SymFunc<TRat> out = SymFunc<TRat>::constant(arity, n, TRat(1));
    for (int m = 1; m <= n; ++m) {
        const auto& lambdas = partitions(m);
        // Put every ℋ_λ over the common denominator D = lcm a_λ.
        TPoly den(1);
        for (const auto& lam : lambdas) {
            const TPoly a = centralizer_order(lam);
            den = TPoly::divide_exact(den * a, TPoly::gcd(den, a));
        }
        std::vector<TPoly> weight;
        std::vector<std::map<Partition, TPoly>> coeff;
        for (const auto& lam : lambdas) {
            weight.push_back(TPoly::divide_exact(den, centralizer_order(lam)).shift_up(genus * lam.norm()));
            const auto& hp = htilde_power(lam);
            coeff.emplace_back(hp.begin(), hp.end());
        }
        const auto& rhos = partitions(m);
        std::vector<std::size_t> idx(arity, 0);
        SymFunc<TRat>::Grade grade;
        while (true) {
            TPoly num;
            for (std::size_t l = 0; l < lambdas.size(); ++l) {
                TPoly term = weight[l];
                for (int i = 0; i < arity && !term.is_zero(); ++i) {
                    auto it = coeff[l].find(rhos[idx[i]]);
                    if (it == coeff[l].end()) {
                        term = TPoly();
                    } else {
                        term *= it->second;
                    }
                }
                num += term;
            }
            if (!num.is_zero()) {
                std::vector<Partition> key;
                for (int i = 0; i < arity; ++i) key.push_back(rhos[idx[i]]);
                grade.emplace(MultiPartition(std::move(key)), TRat(std::move(num), den));
            }
            int pos = arity - 1;
            while (pos >= 0 && ++idx[pos] == rhos.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
        out.set_grade(m, std::move(grade));
    }
    return out;
}

}  // namespace unitensor
