#pragma once

#include "lmodl/errors.hpp"
#include "lmodl/poly.hpp"

#include <utility>

namespace lmodl {

/// Reduced fraction of two polynomials over a field. Canonical form:
/// gcd(num, den) = 1 and den monic, so equality is componentwise.
template <typename T>
class RationalFunction {
public:
    RationalFunction() = default; // the zero function with den = 1 is only
                                  // constructible from a nonzero sample; the
                                  // default is a zero/zero sentinel usable
                                  // solely as an assignment target

    RationalFunction(Poly<T> num, Poly<T> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
        reduce();
    }

    static RationalFunction from_poly(Poly<T> num, const T& sample) {
        return RationalFunction(std::move(num), Poly<T>::constant(one_like(sample)));
    }

    const Poly<T>& num() const { return num_; }
    const Poly<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }

    /// Value at a field point; the denominator must not vanish there.
    T eval(const T& x) const {
        T d = den_.eval(x);
        if (is_zero_coeff(d)) raise("PoleAtPoint", "denominator vanishes at evaluation point");
        return num_.eval(x) * inv_coeff(d);
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<T>::constant(one_like(den_[0]));
            return;
        }
        Poly<T> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const T lead = den_.leading();
        const T li = inv_coeff(lead);
        num_ = scaled(num_, li);
        den_ = scaled(den_, li);
    }

    Poly<T> num_;
    Poly<T> den_;
};

/// The operator Z d/dZ.
template <typename T>
RationalFunction<T> z_d_dz(const RationalFunction<T>& r) {
    if (r.is_zero()) return r;
    Poly<T> top = derivative(r.num()) * r.den() - r.num() * derivative(r.den());
    return RationalFunction<T>(shifted(top, 1), r.den() * r.den());
}

/// Exact division by (Z - 1); requires a(1) = 0.
template <typename T>
Poly<T> divide_by_z_minus_one(const Poly<T>& a) {
    // synthetic division at 1: a(Z) = (Z - 1) q(Z) + a(1)
    const T z = zero_like(a.leading());
    std::vector<T> q(a.coeffs().size() - 1, z);
    T carry = z;
    for (std::size_t i = a.coeffs().size(); i-- > 1;) {
        carry = carry + a[i];
        q[i - 1] = carry;
    }
    return Poly<T>(std::move(q));
}

/// Value at Z = 1 after cancelling every common factor (Z - 1) by exact
/// synthetic division. Throws DomainError("PoleAtOne") when a pole remains.
template <typename T>
T eval_at_one(const RationalFunction<T>& r) {
    if (r.is_zero()) return zero_like(r.den()[0]);
    Poly<T> n = r.num();
    Poly<T> d = r.den();
    const T one = one_like(d[0]);
    while (true) {
        T dv = d.eval(one);
        if (!is_zero_coeff(dv)) return n.eval(one) * inv_coeff(dv);
        if (!is_zero_coeff(n.eval(one))) raise("PoleAtOne", "pole at Z = 1");
        n = divide_by_z_minus_one(n);
        d = divide_by_z_minus_one(d);
    }
}

/// R(Z^{-1}) written as a reduced ratio of polynomials: both entries are
/// multiplied by Z^max(deg num, deg den) to clear negative powers.
template <typename T>
RationalFunction<T> substitute_inverse(const RationalFunction<T>& r) {
    if (r.is_zero()) return r;
    const std::size_t a = static_cast<std::size_t>(r.num().degree());
    const std::size_t b = static_cast<std::size_t>(r.den().degree());
    const std::size_t d = std::max(a, b);
    return RationalFunction<T>(shifted(reversed(r.num()), d - a),
                               shifted(reversed(r.den()), d - b));
}

/// R(Z) + R(Z^{-1}) in reduced form.
template <typename T>
RationalFunction<T> symmetrized(const RationalFunction<T>& r) {
    return r + substitute_inverse(r);
}

/// Coefficient of Z^j in the Taylor expansion at Z = 0. Requires den(0) != 0
/// (else DomainError("PoleAtZero")).
template <typename T>
T taylor_coefficient(const RationalFunction<T>& r, std::size_t j) {
    const T zero = zero_like(r.den()[0]);
    if (r.is_zero()) return zero;
    const T d0 = r.den()[0];
    if (is_zero_coeff(d0)) raise("PoleAtZero", "denominator vanishes at Z = 0");
    const T d0_inv = inv_coeff(d0);
    std::vector<T> t(j + 1, zero);
    for (std::size_t i = 0; i <= j; ++i) {
        T acc = r.num().coeff_or(i, zero);
        for (std::size_t s = 1; s <= i; ++s)
            acc = acc - r.den().coeff_or(s, zero) * t[i - s];
        t[i] = acc * d0_inv;
    }
    return t[j];
}

} // namespace lmodl
