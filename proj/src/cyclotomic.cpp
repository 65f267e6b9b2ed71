#include "lmodl/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lmodl {

namespace {

std::mutex registry_mutex;
std::map<unsigned long, std::shared_ptr<const CyclotomicField>>& registry() {
    static std::map<unsigned long, std::shared_ptr<const CyclotomicField>> r;
    return r;
}

Poly<Rat> z_pow_minus_one(unsigned long n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[0] = Rat(-1);
    c[n] = Rat(1);
    return Poly<Rat>(std::move(c));
}

// Phi_M = (Z^M - 1) / prod_{d | M, d < M} Phi_d, computed by exact division.
Poly<Rat> compute_cyclotomic(unsigned long M, std::map<unsigned long, Poly<Rat>>& cache) {
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    Poly<Rat> num = z_pow_minus_one(M);
    for (unsigned long d : divisors(M)) {
        if (d == M) continue;
        auto [q, r] = divmod(num, compute_cyclotomic(d, cache));
        if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
        num = std::move(q);
    }
    cache.emplace(M, num);
    return num;
}

} // namespace

Poly<Rat> cyclotomic_polynomial(unsigned long M) {
    if (M < 1) throw std::invalid_argument("cyclotomic_polynomial: M must be positive");
    return CyclotomicField::get(M)->minpoly();
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned long M) {
    if (M < 1) throw std::invalid_argument("CyclotomicField: M must be positive");
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find(M);
    if (it != registry().end()) return it->second;
    std::map<unsigned long, Poly<Rat>> cache;
    for (const auto& [m, F] : registry()) cache.emplace(m, F->minpoly());
    Poly<Rat> phi = compute_cyclotomic(M, cache);
    // keep intermediate divisors too; they come for free
    for (auto& [m, p] : cache) {
        if (!registry().count(m))
            registry().emplace(m, std::shared_ptr<const CyclotomicField>(
                                      new CyclotomicField(m, std::move(p))));
    }
    return registry().at(M);
}

CycloElement CycloElement::zero(std::shared_ptr<const CyclotomicField> F) {
    std::vector<Rat> c(F->degree(), Rat(0));
    return CycloElement(std::move(F), std::move(c));
}

CycloElement CycloElement::one(std::shared_ptr<const CyclotomicField> F) {
    return from_rat(std::move(F), Rat(1));
}

CycloElement CycloElement::from_rat(std::shared_ptr<const CyclotomicField> F, const Rat& r) {
    std::vector<Rat> c(F->degree(), Rat(0));
    c[0] = r;
    return CycloElement(std::move(F), std::move(c));
}

CycloElement CycloElement::from_poly(std::shared_ptr<const CyclotomicField> F, const Poly<Rat>& p) {
    Poly<Rat> r = p % F->minpoly();
    std::vector<Rat> c(F->degree(), Rat(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r[i];
    return CycloElement(std::move(F), std::move(c));
}

CycloElement CycloElement::root_power(std::shared_ptr<const CyclotomicField> F, unsigned long e) {
    e %= F->order();
    return from_poly(F, Poly<Rat>::monomial(Rat(1), e));
}

bool CycloElement::is_zero() const {
    for (const auto& x : coords_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

Rat CycloElement::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("CycloElement: not rational");
    return coords_.empty() ? Rat(0) : coords_[0];
}

CycloElement CycloElement::embedded(unsigned long M2) const {
    const unsigned long M = order();
    if (M2 % M != 0) throw std::invalid_argument("CycloElement::embedded: order does not divide target");
    if (M2 == M) return *this;
    auto F2 = CyclotomicField::get(M2);
    const std::size_t step = M2 / M;
    std::vector<Rat> c((coords_.size() - 1) * step + 1, Rat(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) c[i * step] = coords_[i];
    return from_poly(std::move(F2), Poly<Rat>(std::move(c)));
}

namespace {
void check_same(const CycloElement& a, const CycloElement& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("CycloElement: mixed orders; embed explicitly");
}
} // namespace

CycloElement CycloElement::operator+(const CycloElement& o) const {
    check_same(*this, o);
    std::vector<Rat> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return CycloElement(field_, std::move(c));
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
    check_same(*this, o);
    std::vector<Rat> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return CycloElement(field_, std::move(c));
}

CycloElement CycloElement::operator-() const {
    std::vector<Rat> c(coords_);
    for (auto& x : c) x = -x;
    return CycloElement(field_, std::move(c));
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
    check_same(*this, o);
    return from_poly(field_, Poly<Rat>(std::vector<Rat>(coords_)) *
                                 Poly<Rat>(std::vector<Rat>(o.coords_)));
}

CycloElement CycloElement::operator*(const Rat& s) const {
    std::vector<Rat> c(coords_);
    for (auto& x : c) x *= s;
    return CycloElement(field_, std::move(c));
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("CycloElement: inverse of zero");
    const Poly<Rat> self(std::vector<Rat>(coords_));
    auto [g, u, v] = extended_gcd(self, field_->minpoly());
    (void)v;
    if (g.degree() != 0) throw std::logic_error("CycloElement: gcd with minimal polynomial not 1");
    // g is monic constant 1, so u * self == 1 mod Phi
    return from_poly(field_, u);
}

CycloElement CycloElement::operator/(const CycloElement& o) const { return *this * o.inverse(); }

bool CycloElement::operator==(const CycloElement& o) const {
    return order() == o.order() && coords_ == o.coords_;
}

} // namespace lmodl
