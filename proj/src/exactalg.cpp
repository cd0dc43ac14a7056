#include "unitensor/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace unitensor {

// -------------------------------------------------------------------- TPoly

TPoly::TPoly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

TPoly::TPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly::TPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

TPoly TPoly::monomial(int degree, Rational c) {
    if (degree < 0) throw std::invalid_argument("TPoly::monomial: negative degree");
    TPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_.back() = std::move(c);
    return p;
}

TPoly TPoly::linear(const Rational& c) { return TPoly(std::vector<Rational>{-c, Rational(1)}); }

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

const Rational& TPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("TPoly::leading: zero polynomial");
    return coeffs_.back();
}

bool TPoly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

bool TPoly::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

int TPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return 0;
}

Rational TPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

TPoly TPoly::substitute_power(int d) const {
    if (d < 1) throw std::invalid_argument("TPoly::substitute_power: exponent must be positive");
    if (d == 1 || coeffs_.empty()) return *this;
    TPoly out;
    out.coeffs_.assign((coeffs_.size() - 1) * d + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * d] = coeffs_[i];
    return out;
}

TPoly TPoly::monic() const {
    if (coeffs_.empty()) return *this;
    TPoly out = *this;
    out *= Rational(1) / leading();
    return out;
}

TPoly TPoly::shift_down(int v) const {
    if (v > valuation() && !is_zero()) throw std::logic_error("TPoly::shift_down: not divisible");
    if (v <= 0 || is_zero()) return *this;
    return TPoly(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

TPoly TPoly::shift_up(int v) const {
    if (v <= 0 || is_zero()) return *this;
    std::vector<Rational> c(v, Rational(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return TPoly(std::move(c));
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TPoly(std::move(c));
}

TPoly& TPoly::operator*=(const TPoly& o) {
    *this = *this * o;
    return *this;
}

TPoly& TPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("TPoly::divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {TPoly(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
    const Rational inv_lead = Rational(1) / b.leading();
    const int db = b.degree();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        const Rational q = rem[k + db] * inv_lead;
        if (q == 0) continue;
        quo[k] = q;
        for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
    }
    rem.resize(db);
    return {TPoly(std::move(quo)), TPoly(std::move(rem))};
}

TPoly TPoly::divide_exact(const TPoly& a, const TPoly& b) {
    if (b.is_one()) return a;
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("TPoly::divide_exact: nonzero remainder");
    return q;
}

namespace {

using ZPoly = std::vector<Integer>;

// Primitive integer polynomial with positive leading coefficient, same roots as p.
ZPoly primitive_part(const TPoly& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (z.back() < 0) content = -content;
    if (content != 1) {
        for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
    return z;
}

void make_primitive(ZPoly& z) {
    while (!z.empty() && z.back() == 0) z.pop_back();
    if (z.empty()) return;
    Integer content = 0;
    for (const auto& v : z) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        if (content == 1) break;
    }
    if (z.back() < 0) content = -content;
    if (content != 1) {
        for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
}

// Pseudo-remainder of a by b (both nonzero, deg a ≥ deg b).
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        // a ← lb·a − la·t^shift·b, dropping the (now zero) leading term.
        for (auto& v : a) v *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        make_primitive(a);
    }
    return a;
}

TPoly from_zpoly(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& v : z) c.emplace_back(v);
    return TPoly(std::move(c));
}

}  // namespace

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return TPoly(1);
    // Split off the power of t, then run a primitive remainder sequence.
    const int va = a.valuation();
    const int vb = b.valuation();
    const int v = std::min(va, vb);
    TPoly ar = a.shift_down(va);
    TPoly br = b.shift_down(vb);
    if (ar.is_constant() || br.is_constant()) return TPoly::monomial(v);
    ZPoly x = primitive_part(ar);
    ZPoly y = primitive_part(br);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = std::move(r);
        if (x.size() == 1) break;
    }
    TPoly g = from_zpoly(x).monic();
    if (g.degree() == 0) g = TPoly(1);
    return v > 0 ? g.shift_up(v) : g;
}

std::string TPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (c < 0) {
            os << (first ? "-" : "-");
        } else if (!first) {
            os << '+';
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || i == 0) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

// --------------------------------------------------------------------- TRat

TRat::TRat(TPoly num, TPoly den) {
    if (den.is_zero()) throw std::domain_error("TRat: zero denominator");
    if (num.is_zero()) {
        den_ = TPoly(1);
        return;
    }
    const TPoly g = TPoly::gcd(num, den);
    if (!g.is_one()) {
        num = TPoly::divide_exact(num, g);
        den = TPoly::divide_exact(den, g);
    }
    const Rational lead = den.leading();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num *= inv;
        den *= inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Rational TRat::evaluate(const Rational& t) const {
    const Rational d = den_.evaluate(t);
    if (d == 0) throw std::domain_error("TRat::evaluate: pole");
    return num_.evaluate(t) / d;
}

TRat& TRat::operator+=(const TRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        *this = TRat(num_ + o.num_, den_);
        return *this;
    }
    const TPoly g = TPoly::gcd(den_, o.den_);
    if (g.is_one()) {
        // Coprime denominators: the sum is already reduced.
        TPoly num = num_ * o.den_ + o.num_ * den_;
        TPoly den = den_ * o.den_;
        if (num.is_zero()) return *this = TRat();
        *this = TRat(std::move(num), std::move(den), Raw{});
        return *this;
    }
    const TPoly b1 = TPoly::divide_exact(den_, g);
    const TPoly d1 = TPoly::divide_exact(o.den_, g);
    TPoly num = num_ * d1 + o.num_ * b1;
    if (num.is_zero()) return *this = TRat();
    const TPoly g2 = TPoly::gcd(num, g);
    if (!g2.is_one()) {
        num = TPoly::divide_exact(num, g2);
        *this = TRat(std::move(num), b1 * TPoly::divide_exact(o.den_, g2), Raw{});
    } else {
        *this = TRat(std::move(num), b1 * o.den_, Raw{});
    }
    return *this;
}

TRat& TRat::operator-=(const TRat& o) { return *this += -o; }

TRat& TRat::operator*=(const TRat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = TRat();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    const TPoly g1 = TPoly::gcd(num_, o.den_);
    const TPoly g2 = TPoly::gcd(o.num_, den_);
    TPoly num = TPoly::divide_exact(num_, g1) * TPoly::divide_exact(o.num_, g2);
    TPoly den = TPoly::divide_exact(den_, g2) * TPoly::divide_exact(o.den_, g1);
    // Denominators stay monic; numerator absorbs nothing else.
    *this = TRat(std::move(num), std::move(den), Raw{});
    return *this;
}

TRat& TRat::operator/=(const TRat& o) {
    if (o.is_zero()) throw std::domain_error("TRat: division by zero");
    const Rational lead = o.num_.leading();
    TRat inv(o.den_ * (Rational(1) / lead), o.num_ * (Rational(1) / lead), Raw{});
    return *this *= inv;
}

TRat& TRat::operator*=(const Rational& c) {
    if (c == 0) return *this = TRat();
    num_ *= c;
    return *this;
}

TRat TRat::operator-() const { return TRat(-num_, den_, Raw{}); }

std::string TRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const TRat& r) { return os << r.to_string(); }

TRat ratfunc_arith(const TRat& a, const TRat& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("ratfunc_arith: unknown op");
}

TPoly adams_scalar(const TPoly& f, int d) { return f.substitute_power(d); }

TRat adams_scalar(const TRat& f, int d) {
    if (d < 1) throw std::invalid_argument("adams_scalar: d must be positive");
    if (d == 1) return f;
    // Substitution t ↦ t^d preserves coprimality and monicity.
    return TRat(f.num().substitute_power(d), f.den().substitute_power(d));
}

TPoly certify_polynomial(const TRat& f) {
    if (!f.is_polynomial()) throw NonPolynomialError("not a polynomial: " + f.to_string());
    return f.num();
}

TPoly interpolate(std::span<const std::pair<Rational, Rational>> points, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("interpolate: negative degree bound");
    const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
    if (points.size() < need) throw std::invalid_argument("interpolate: too few points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) throw std::invalid_argument("interpolate: repeated abscissa");
        }
    }
    // Newton divided differences on the first `need` points.
    std::vector<Rational> dd(need);
    for (std::size_t i = 0; i < need; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < need; ++level) {
        for (std::size_t i = need - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
        }
    }
    TPoly result = TPoly(dd[need - 1]);
    for (std::size_t i = need - 1; i-- > 0;) {
        result = result * TPoly::linear(points[i].first) + TPoly(dd[i]);
    }
    for (std::size_t i = need; i < points.size(); ++i) {
        if (result.evaluate(points[i].first) != points[i].second) {
            throw std::domain_error("interpolate: inconsistent data for the degree bound");
        }
    }
    return result;
}

// ------------------------------------------------------------------ TRatSum

void TRatSum::add(const TRat& term) {
    if (term.is_zero()) return;
    if (term.den() == den_) {
        num_ += term.num();
        return;
    }
    const TPoly g = TPoly::gcd(den_, term.den());
    const TPoly mine = TPoly::divide_exact(term.den(), g);
    const TPoly theirs = TPoly::divide_exact(den_, g);
    num_ = num_ * mine + term.num() * theirs;
    den_ = den_ * mine;
}

void TRatSum::add(const TRat& term, const Rational& weight) {
    if (weight == 0 || term.is_zero()) return;
    if (term.den() == den_) {
        num_ += term.num() * weight;
        return;
    }
    TRat scaled = term;
    scaled *= weight;
    add(scaled);
}

TRat TRatSum::value() const { return TRat(num_, den_); }

}  // namespace unitensor
