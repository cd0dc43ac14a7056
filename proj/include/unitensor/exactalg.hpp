#pragma once

// Exact univariate polynomials and rational functions in t over ℚ.

#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unitensor/numeric.hpp"

namespace unitensor {

/// Thrown when a quantity that must be a polynomial (or an integer
/// polynomial) is not. Always indicates a convention bug upstream.
class NonPolynomialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomial in t with rational coefficients, ascending. No trailing zeros;
/// the zero polynomial has no coefficients.
class TPoly {
public:
    TPoly() = default;
    TPoly(int c) : TPoly(Rational(c)) {}
    TPoly(Rational c);
    explicit TPoly(std::vector<Rational> coeffs);
    TPoly(std::initializer_list<long> coeffs);

    static TPoly monomial(int degree, Rational c = 1);
    /// t − c.
    static TPoly linear(const Rational& c);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// −1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool has_integer_coeffs() const;
    bool has_nonnegative_coeffs() const;
    /// Lowest power of t with nonzero coefficient (0 for the zero polynomial).
    int valuation() const;

    Rational evaluate(const Rational& t) const;
    /// f(t^d).
    TPoly substitute_power(int d) const;
    TPoly monic() const;
    /// f / t^v for v ≤ valuation().
    TPoly shift_down(int v) const;
    TPoly shift_up(int v) const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o);
    TPoly& operator*=(const Rational& c);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
    TPoly operator-() const;
    friend bool operator==(const TPoly&, const TPoly&) = default;

    /// Euclidean division; throws std::domain_error for a zero divisor.
    static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
    /// Exact division; throws std::logic_error if b does not divide a.
    static TPoly divide_exact(const TPoly& a, const TPoly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static TPoly gcd(const TPoly& a, const TPoly& b);

    /// Human-readable form such as "t^3+2t+1".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

/// Reduced rational function num/den with den monic and gcd(num, den) = 1.
/// Equality is structural on this canonical form.
class TRat {
public:
    TRat() : den_(1) {}
    TRat(int c) : TRat(Rational(c)) {}
    TRat(Rational c) : num_(std::move(c)), den_(1) {}
    TRat(TPoly p) : num_(std::move(p)), den_(1) {}
    /// Reduces to canonical form; throws std::domain_error on zero denominator.
    TRat(TPoly num, TPoly den);

    /// t.
    static TRat t() { return TRat(TPoly::monomial(1)); }

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// Throws std::domain_error if t is a pole.
    Rational evaluate(const Rational& t) const;

    TRat& operator+=(const TRat& o);
    TRat& operator-=(const TRat& o);
    TRat& operator*=(const TRat& o);
    TRat& operator/=(const TRat& o);
    TRat& operator*=(const Rational& c);
    friend TRat operator+(TRat a, const TRat& b) { return a += b; }
    friend TRat operator-(TRat a, const TRat& b) { return a -= b; }
    friend TRat operator*(TRat a, const TRat& b) { return a *= b; }
    friend TRat operator/(TRat a, const TRat& b) { return a /= b; }
    friend TRat operator*(TRat a, const Rational& c) { return a *= c; }
    TRat operator-() const;
    friend bool operator==(const TRat&, const TRat&) = default;

    std::string to_string() const;

private:
    struct Raw {};
    TRat(TPoly num, TPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    TPoly num_;
    TPoly den_;
};

std::ostream& operator<<(std::ostream& os, const TRat& r);

enum class ArithOp { add, sub, mul, div };

/// Exact a ∘ b in canonical form; div by zero throws std::domain_error.
TRat ratfunc_arith(const TRat& a, const TRat& b, ArithOp op);

/// ψ_d on scalars: t ↦ t^d.
TPoly adams_scalar(const TPoly& f, int d);
TRat adams_scalar(const TRat& f, int d);

/// The numerator of f when its reduced denominator is 1; otherwise throws
/// NonPolynomialError.
TPoly certify_polynomial(const TRat& f);

/// Lagrange interpolation through (q, value) points with distinct abscissae.
/// Uses the first degree_bound + 1 points and checks the remainder; throws
/// std::invalid_argument on too few points and std::domain_error on
/// inconsistent data.
TPoly interpolate(std::span<const std::pair<Rational, Rational>> points, int degree_bound);

/// Running sum of rational functions that defers gcd reduction to the end.
/// Terms sharing the current denominator cost one polynomial addition.
class TRatSum {
public:
    void add(const TRat& term);
    void add(const TRat& term, const Rational& weight);
    TRat value() const;

private:
    TPoly num_;
    TPoly den_ = TPoly(1);
};

}  // namespace unitensor
