#pragma once

#include "lmodl/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace lmodl {

// Customization points for coefficient types that carry a runtime field
// handle (CycloElement, FFElement). The Rat overloads are here; the others
// sit next to their types.
inline bool is_zero_coeff(const Rat& x) { return sgn(x) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inv_coeff(const Rat& x) { return Rat(1) / x; }
inline Rat mul_by_uint(const Rat& x, unsigned long n) { return x * Rat(n); }

/// Dense univariate polynomial over a field. The zero polynomial is the
/// empty coefficient vector; otherwise the leading coefficient is nonzero.
/// Coefficients carrying runtime field handles are supported: operations
/// never materialize a zero out of thin air, they derive one from an
/// operand via zero_like().
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const T& a, std::size_t k) {
        if (is_zero_coeff(a)) return Poly();
        std::vector<T> c(k + 1, zero_like(a));
        c[k] = a;
        return Poly(std::move(c));
    }
    static Poly constant(const T& a) { return monomial(a, 0); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& leading() const { return c_.back(); }

    T coeff_or(std::size_t i, const T& dflt) const {
        return i < c_.size() ? c_[i] : dflt;
    }

    /// Horner evaluation; the zero polynomial evaluates to zero_like(x).
    T eval(const T& x) const {
        if (is_zero()) return zero_like(x);
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    void trim() {
        while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    std::vector<T> c_;
};

template <typename T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const T z = zero_like(a[0]);
    std::vector<T> c(std::max(a.coeffs().size(), b.coeffs().size()), z);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] = c[i] + b[i];
    return Poly<T>(std::move(c));
}

template <typename T>
Poly<T> negated(const Poly<T>& a) {
    std::vector<T> c = a.coeffs();
    for (auto& x : c) x = zero_like(x) - x;
    return Poly<T>(std::move(c));
}

template <typename T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
    return a + negated(b);
}

template <typename T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<T>();
    const T z = zero_like(a[0]);
    std::vector<T> c(a.coeffs().size() + b.coeffs().size() - 1, z);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a[i] * b[j];
    return Poly<T>(std::move(c));
}

template <typename T>
Poly<T> scaled(const Poly<T>& a, const T& s) {
    if (a.is_zero() || is_zero_coeff(s)) return Poly<T>();
    std::vector<T> c = a.coeffs();
    for (auto& x : c) x = x * s;
    return Poly<T>(std::move(c));
}

/// Multiply by Z^k.
template <typename T>
Poly<T> shifted(const Poly<T>& a, std::size_t k) {
    if (a.is_zero() || k == 0) return a;
    std::vector<T> c(a.coeffs().size() + k, zero_like(a[0]));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i + k] = a[i];
    return Poly<T>(std::move(c));
}

/// Coefficient reversal: Z^deg * a(1/Z).
template <typename T>
Poly<T> reversed(const Poly<T>& a) {
    std::vector<T> c(a.coeffs().rbegin(), a.coeffs().rend());
    return Poly<T>(std::move(c));
}

template <typename T>
Poly<T> derivative(const Poly<T>& a) {
    if (a.degree() < 1) return Poly<T>();
    std::vector<T> c;
    c.reserve(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) c.push_back(mul_by_uint(a[i], i));
    return Poly<T>(std::move(c));
}

template <typename T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::invalid_argument("Poly divmod: division by zero");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly<T>(), a};
    const T z = zero_like(b.leading());
    const T lc_inv = inv_coeff(b.leading());
    std::vector<T> rem = a.coeffs();
    std::vector<T> quo(a.degree() - b.degree() + 1, z);
    for (int i = a.degree(); i >= b.degree(); --i) {
        T q = rem[i] * lc_inv;
        if (is_zero_coeff(q)) continue;
        quo[i - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] = rem[i - b.degree() + j] - q * b[j];
    }
    return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

template <typename T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).first;
}

template <typename T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).second;
}

template <typename T>
Poly<T> monic(const Poly<T>& a) {
    if (a.is_zero()) return a;
    return scaled(a, inv_coeff(a.leading()));
}

/// Monic gcd via the Euclidean algorithm. Remainders are re-normalized each
/// step to keep rational coefficient growth in check.
template <typename T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = a % b;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <typename T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> extended_gcd(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() && b.is_zero()) return {Poly<T>(), Poly<T>(), Poly<T>()};
    const T one = one_like(a.is_zero() ? b[0] : a[0]);
    Poly<T> r0 = a, r1 = b;
    Poly<T> s0 = Poly<T>::constant(one), s1;
    Poly<T> t0, t1 = Poly<T>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<T> s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        Poly<T> t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    const T lead = r0.leading();
    const T li = inv_coeff(lead);
    return {scaled(r0, li), scaled(s0, li), scaled(t0, li)};
}

} // namespace lmodl
