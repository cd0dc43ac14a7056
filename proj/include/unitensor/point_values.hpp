#pragma once

// Coefficient type for running the plethystic pipeline with t specialised:
// slot j holds the value at t = q^{j+1}. ψ_d moves slot (j+1)d−1 into slot
// j; slots past the end become 0 and must never be read back into slot 0.
// A value built from a plain scalar is constant across all slots.

#include <vector>

#include "unitensor/numeric.hpp"
#include "unitensor/symfunc.hpp"

namespace unitensor {

class PointValues {
public:
    PointValues() = default;
    PointValues(int c) : scalar_(c) {}
    PointValues(Rational c) : scalar_(std::move(c)) {}
    explicit PointValues(std::vector<Rational> slots) : slots_(std::move(slots)), constant_(false) {}

    bool is_constant() const { return constant_; }
    std::size_t slot_count() const { return slots_.size(); }
    Rational at(std::size_t j) const { return constant_ ? scalar_ : slots_.at(j); }

    bool is_zero() const {
        if (constant_) return scalar_ == 0;
        for (const auto& v : slots_) {
            if (v != 0) return false;
        }
        return true;
    }

    PointValues adams(int d) const {
        if (constant_ || d == 1) return *this;
        std::vector<Rational> out(slots_.size());
        for (std::size_t j = 0; j < out.size(); ++j) {
            const std::size_t src = (j + 1) * d - 1;
            if (src < slots_.size()) out[j] = slots_[src];
        }
        return PointValues(std::move(out));
    }

    PointValues& operator+=(const PointValues& o) { return combine(o, [](Rational& a, const Rational& b) { a += b; }); }
    PointValues& operator-=(const PointValues& o) { return combine(o, [](Rational& a, const Rational& b) { a -= b; }); }
    PointValues& operator*=(const PointValues& o) { return combine(o, [](Rational& a, const Rational& b) { a *= b; }); }
    PointValues& operator*=(const Rational& c) {
        if (constant_) {
            scalar_ *= c;
        } else {
            for (auto& v : slots_) v *= c;
        }
        return *this;
    }
    friend PointValues operator+(PointValues a, const PointValues& b) { return a += b; }
    friend PointValues operator-(PointValues a, const PointValues& b) { return a -= b; }
    friend PointValues operator*(PointValues a, const PointValues& b) { return a *= b; }
    PointValues operator-() const {
        PointValues out = *this;
        out *= Rational(-1);
        return out;
    }

    friend bool operator==(const PointValues& a, const PointValues& b) {
        const std::size_t n = std::max(a.slots_.size(), b.slots_.size());
        if (n == 0) return a.scalar_ == b.scalar_;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(j) != b.at(j)) return false;
        }
        return true;
    }

private:
    template <class Op>
    PointValues& combine(const PointValues& o, Op op) {
        if (constant_ && o.constant_) {
            op(scalar_, o.scalar_);
            return *this;
        }
        if (constant_) {
            slots_.assign(o.slots_.size(), scalar_);
            constant_ = false;
        }
        for (std::size_t j = 0; j < slots_.size(); ++j) op(slots_[j], o.at(j));
        return *this;
    }

    Rational scalar_ = 0;
    std::vector<Rational> slots_;
    bool constant_ = true;
};

inline bool coeff_is_zero(const PointValues& c) { return c.is_zero(); }
inline PointValues coeff_adams(const PointValues& c, int d) { return c.adams(d); }

template <>
class CoeffSum<PointValues> {
public:
    void add(const PointValues& c) { value_ += c; }
    void add(const PointValues& c, const Rational& w) {
        PointValues t = c;
        t *= w;
        value_ += t;
    }
    PointValues value() const { return value_; }

private:
    PointValues value_;
};

}  // namespace unitensor
