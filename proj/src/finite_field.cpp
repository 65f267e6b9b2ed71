#include "lmodl/finite_field.hpp"

#include <stdexcept>

namespace lmodl {

std::shared_ptr<const FiniteField> FiniteField::make(std::uint64_t ell, unsigned degree) {
    if (!is_prime(ell)) throw std::invalid_argument("FiniteField: characteristic must be prime");
    return with_modulus(fp::smallest_irreducible(ell, degree));
}

std::shared_ptr<const FiniteField> FiniteField::with_modulus(FpPoly modulus) {
    if (modulus.degree() < 1 || modulus.c.back() != 1)
        throw std::invalid_argument("FiniteField: modulus must be monic of degree >= 1");
    return std::shared_ptr<const FiniteField>(new FiniteField(std::move(modulus)));
}

FFElement FFElement::zero(std::shared_ptr<const FiniteField> F) {
    std::vector<std::uint64_t> c(F->degree(), 0);
    return FFElement(std::move(F), std::move(c));
}

FFElement FFElement::one(std::shared_ptr<const FiniteField> F) {
    return from_int(std::move(F), Int(1));
}

FFElement FFElement::from_int(std::shared_ptr<const FiniteField> F, const Int& v) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), F->ell());
    std::vector<std::uint64_t> c(F->degree(), 0);
    c[0] = r.get_ui();
    return FFElement(std::move(F), std::move(c));
}

FFElement FFElement::generator(std::shared_ptr<const FiniteField> F) {
    if (F->degree() == 1) {
        // x == -modulus[0] in the residue field
        std::vector<std::uint64_t> c{(F->ell() - F->modulus().c[0] % F->ell()) % F->ell()};
        return FFElement(std::move(F), std::move(c));
    }
    std::vector<std::uint64_t> c(F->degree(), 0);
    c[1] = 1;
    return FFElement(std::move(F), std::move(c));
}

FFElement FFElement::by_index(std::shared_ptr<const FiniteField> F, const Int& v) {
    std::vector<std::uint64_t> c(F->degree(), 0);
    Int t = v;
    for (unsigned i = 0; i < F->degree() && sgn(t) != 0; ++i) {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), F->ell());
        c[i] = r.get_ui();
        t = q;
    }
    if (sgn(t) != 0) throw std::invalid_argument("FFElement::by_index: index out of range");
    return FFElement(std::move(F), std::move(c));
}

FFElement FFElement::from_coords(std::shared_ptr<const FiniteField> F,
                                 std::vector<std::uint64_t> coords) {
    coords.resize(F->degree(), 0);
    for (auto& v : coords) v %= F->ell();
    return FFElement(std::move(F), std::move(coords));
}

bool FFElement::is_zero() const {
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

bool FFElement::operator==(const FFElement& o) const {
    return field_->modulus() == o.field_->modulus() && c_ == o.c_;
}

namespace {
void check_same(const FFElement& a, const FFElement& b) {
    if (!(a.field()->modulus() == b.field()->modulus()))
        throw std::invalid_argument("FFElement: mixed fields");
}
} // namespace

FFElement FFElement::operator+(const FFElement& o) const {
    check_same(*this, o);
    const std::uint64_t p = field_->ell();
    std::vector<std::uint64_t> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + o.c_[i]) % p;
    return FFElement(field_, std::move(c));
}

FFElement FFElement::operator-(const FFElement& o) const {
    check_same(*this, o);
    const std::uint64_t p = field_->ell();
    std::vector<std::uint64_t> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + p - o.c_[i]) % p;
    return FFElement(field_, std::move(c));
}

FFElement FFElement::operator-() const {
    const std::uint64_t p = field_->ell();
    std::vector<std::uint64_t> c(c_);
    for (auto& v : c) v = (p - v) % p;
    return FFElement(field_, std::move(c));
}

FFElement FFElement::operator*(const FFElement& o) const {
    check_same(*this, o);
    FpPoly prod = fp::rem(fp::mul(FpPoly{field_->ell(), c_}, FpPoly{field_->ell(), o.c_}),
                          field_->modulus());
    prod.c.resize(field_->degree(), 0);
    return FFElement(field_, std::move(prod.c));
}

FFElement FFElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("FFElement: inverse of zero");
    // extended Euclid over F_ell[x]; invariant r_i == s_i * self (mod modulus)
    FpPoly r0 = field_->modulus();
    FpPoly r1{field_->ell(), c_};
    while (!r1.c.empty() && r1.c.back() == 0) r1.c.pop_back();
    FpPoly s0 = fp::zero(field_->ell());
    FpPoly s1 = fp::one(field_->ell());
    while (!r1.is_zero()) {
        auto [q, r] = fp::divmod(r0, r1);
        FpPoly s = fp::sub(s0, fp::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw std::logic_error("FFElement: modulus not irreducible?");
    FpPoly inv = fp::rem(fp::scale(s0, inv_mod(r0.c[0], field_->ell())), field_->modulus());
    inv.c.resize(field_->degree(), 0);
    return FFElement(field_, std::move(inv.c));
}

FFElement FFElement::operator/(const FFElement& o) const { return *this * o.inverse(); }

FFElement FFElement::pow(const Int& e) const {
    if (sgn(e) < 0) return inverse().pow(-e);
    FFElement r = one(field_);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

Int FFElement::order_dividing(const Int& bound) const {
    if (is_zero()) throw std::invalid_argument("FFElement: order of zero");
    if (pow(bound) != one(field_))
        throw std::invalid_argument("FFElement: bound is not a multiple of the order");
    Int order = bound;
    Int n = bound;
    for (Int d(2); d * d <= n; ++d) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            while (mpz_divisible_p(order.get_mpz_t(), d.get_mpz_t()) &&
                   pow(order / d) == one(field_))
                order /= d;
        }
    }
    if (n > 1) {
        while (mpz_divisible_p(order.get_mpz_t(), n.get_mpz_t()) && pow(order / n) == one(field_))
            order /= n;
    }
    return order;
}

} // namespace lmodl
