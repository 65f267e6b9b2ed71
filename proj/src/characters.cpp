#include "lmodl/characters.hpp"

#include "lmodl/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lmodl {

namespace {

std::uint64_t compute_conductor(std::uint64_t f, const std::vector<std::int64_t>& exp) {
    // smallest divisor d of f such that every unit a == 1 (mod d) has chi(a) = 1
    for (std::uint64_t d : divisors(f)) {
        bool factors = true;
        for (std::uint64_t a = 1; a < f && factors; ++a) {
            if (exp[a] < 0) continue;
            if (a % d == 1 && exp[a] != 0) factors = false;
        }
        if (f == 1) return 1;
        if (factors) return d;
    }
    return f;
}

std::uint64_t exact_order(std::uint64_t group_exponent, const std::vector<std::int64_t>& exp) {
    std::uint64_t g = group_exponent;
    for (auto e : exp)
        if (e > 0) g = gcd_u64(g, static_cast<std::uint64_t>(e));
    return group_exponent / g;
}

} // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint64_t order,
                                       std::vector<std::int64_t> exponents)
    : modulus_(modulus), order_(order), exp_(std::move(exponents)) {
    if (modulus_ == 0 || exp_.size() != modulus_)
        throw std::invalid_argument("DirichletCharacter: bad exponent table");
    conductor_ = compute_conductor(modulus_, exp_);
}

bool DirichletCharacter::is_even() const {
    if (modulus_ <= 2) return true;
    return exp_[modulus_ - 1] == 0;
}

CycloElement DirichletCharacter::value(std::uint64_t a) const {
    auto F = CyclotomicField::get(order_);
    const std::int64_t e = exponent(a);
    if (e < 0) return CycloElement::zero(F);
    return CycloElement::root_power(F, static_cast<std::uint64_t>(e));
}

DirichletCharacter DirichletCharacter::inverse() const {
    std::vector<std::int64_t> exp(exp_);
    for (auto& e : exp)
        if (e > 0) e = static_cast<std::int64_t>(order_) - e;
    return DirichletCharacter(modulus_, order_, std::move(exp));
}

std::vector<UnitGroupFactor> unit_group_decomposition(std::uint64_t f) {
    std::vector<std::pair<std::uint64_t, std::vector<UnitGroupFactor>>> parts;
    for (const auto& [p, e] : factorize(f)) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        std::vector<UnitGroupFactor> local;
        if (p == 2) {
            if (q == 4) local.push_back({3, 2});
            if (q >= 8) {
                local.push_back({5, q / 4});
                local.push_back({q - 1, 2});
            }
        } else {
            local.push_back({smallest_primitive_root(q), euler_phi(q)});
        }
        parts.emplace_back(q, std::move(local));
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // lift generators mod q to generators mod f that are 1 at the other factors
    std::vector<UnitGroupFactor> out;
    for (const auto& [q, local] : parts) {
        const std::uint64_t rest = f / q;
        for (const auto& gf : local) {
            std::uint64_t g = gf.generator % q;
            if (rest > 1) {
                // CRT: x == g (mod q), x == 1 (mod rest)
                const std::uint64_t inv = inv_mod(rest % q, q);
                const std::uint64_t t = mul_mod((g + q - 1 % q) % q, inv, q);
                std::uint64_t x = (1 + t * rest) % f;
                g = x;
            }
            out.push_back({g, gf.order});
        }
    }
    return out;
}

namespace {

struct UnitGroupData {
    std::vector<UnitGroupFactor> factors;
    std::uint64_t group_exponent;                  // lcm of factor orders
    std::vector<std::vector<std::uint64_t>> dlogs; // per factor: a -> exponent of g_t
};

UnitGroupData unit_group_data(std::uint64_t f) {
    UnitGroupData d;
    d.factors = unit_group_decomposition(f);
    d.group_exponent = 1;
    for (const auto& g : d.factors) d.group_exponent = lcm_u64(d.group_exponent, g.order);

    // brute-force discrete logs: enumerate the whole group once
    d.dlogs.assign(d.factors.size(), std::vector<std::uint64_t>(f, 0));
    std::vector<std::uint64_t> idx(d.factors.size(), 0);
    // enumerate all exponent tuples; total is phi(f)
    const std::uint64_t phi = euler_phi(f);
    std::vector<std::uint64_t> powers(d.factors.size(), 1);
    for (std::uint64_t count = 0; count < phi; ++count) {
        std::uint64_t a = 1;
        for (std::size_t t = 0; t < d.factors.size(); ++t) a = mul_mod(a, powers[t], f);
        for (std::size_t t = 0; t < d.factors.size(); ++t) d.dlogs[t][a] = idx[t];
        // increment mixed-radix tuple
        for (std::size_t t = 0; t < d.factors.size(); ++t) {
            idx[t]++;
            powers[t] = mul_mod(powers[t], d.factors[t].generator, f);
            if (idx[t] < d.factors[t].order) break;
            idx[t] = 0;
            powers[t] = 1;
        }
    }
    return d;
}

DirichletCharacter character_from_tuple(std::uint64_t f, const UnitGroupData& d,
                                        const std::vector<std::uint64_t>& j) {
    std::vector<std::int64_t> exp(f, -1);
    const std::uint64_t m_hat = d.group_exponent;
    for (std::uint64_t a = (f == 1 ? 0 : 1); a < std::max<std::uint64_t>(f, 1); ++a) {
        if (f > 1 && gcd_u64(a, f) != 1) continue;
        std::uint64_t e = 0;
        for (std::size_t t = 0; t < d.factors.size(); ++t) {
            const std::uint64_t contrib =
                mul_mod(mul_mod(m_hat / d.factors[t].order, j[t], m_hat), d.dlogs[t][a], m_hat);
            e = (e + contrib) % m_hat;
        }
        exp[a] = static_cast<std::int64_t>(e);
    }
    if (f == 1) exp[0] = 0; // the unique residue class mod 1 is a unit
    const std::uint64_t order = exact_order(m_hat, exp);
    const std::uint64_t shrink = m_hat / order;
    for (auto& e : exp)
        if (e > 0) e /= static_cast<std::int64_t>(shrink);
    return DirichletCharacter(f, order, std::move(exp));
}

} // namespace

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t f) {
    if (f == 0) throw std::invalid_argument("enumerate_characters: f must be positive");
    const UnitGroupData d = unit_group_data(f);
    const std::uint64_t phi = euler_phi(f);
    std::vector<DirichletCharacter> out;
    out.reserve(phi);
    std::vector<std::uint64_t> j(d.factors.size(), 0);
    for (std::uint64_t count = 0; count < phi; ++count) {
        out.push_back(character_from_tuple(f, d, j));
        for (std::size_t t = 0; t < d.factors.size(); ++t) {
            j[t]++;
            if (j[t] < d.factors[t].order) break;
            j[t] = 0;
        }
    }
    return out;
}

DirichletCharacter character_by_index(std::uint64_t f, std::uint64_t index) {
    const UnitGroupData d = unit_group_data(f);
    if (index >= euler_phi(f)) raise("BadIndex", "character index out of range");
    std::vector<std::uint64_t> j(d.factors.size(), 0);
    std::uint64_t rest = index;
    for (std::size_t t = 0; t < d.factors.size(); ++t) {
        j[t] = rest % d.factors[t].order;
        rest /= d.factors[t].order;
    }
    return character_from_tuple(f, d, j);
}

std::uint64_t character_index(const DirichletCharacter& chi) {
    const auto all = enumerate_characters(chi.modulus());
    for (std::uint64_t i = 0; i < all.size(); ++i)
        if (all[i] == chi) return i;
    throw std::logic_error("character_index: character not found in its own modulus");
}

Parity parity(const DirichletCharacter& chi) {
    return chi.is_even() ? Parity::even : Parity::odd;
}

DirichletCharacter primitivize(const DirichletCharacter& chi) {
    const std::uint64_t c = chi.conductor();
    if (c == chi.modulus()) return chi;
    std::vector<std::int64_t> exp(c, -1);
    for (std::uint64_t a = 0; a < c; ++a) {
        if (c > 1 && gcd_u64(a, c) != 1) continue;
        if (c == 1 && a != 0) continue;
        // lift to a residue coprime to the original modulus
        std::uint64_t lift = a;
        while (gcd_u64(lift % chi.modulus(), chi.modulus()) != 1) lift += c;
        exp[a] = chi.exponent(lift);
    }
    if (c == 1) exp[0] = 0;
    return DirichletCharacter(c, chi.order(), std::move(exp));
}

DirichletCharacter product(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
    const std::uint64_t L = lcm_u64(chi1.modulus(), chi2.modulus());
    const std::uint64_t m_hat = lcm_u64(chi1.order(), chi2.order());
    std::vector<std::int64_t> exp(L, -1);
    for (std::uint64_t a = 0; a < L; ++a) {
        if (L > 1 && gcd_u64(a, L) != 1) continue;
        if (L == 1 && a != 0) continue;
        const std::int64_t e1 = chi1.exponent(a);
        const std::int64_t e2 = chi2.exponent(a);
        const std::uint64_t e = (static_cast<std::uint64_t>(e1) * (m_hat / chi1.order()) +
                                 static_cast<std::uint64_t>(e2) * (m_hat / chi2.order())) %
                                m_hat;
        exp[a] = static_cast<std::int64_t>(e);
    }
    if (L == 1) exp[0] = 0;
    const std::uint64_t order = exact_order(m_hat, exp);
    const std::uint64_t shrink = m_hat / order;
    for (auto& e : exp)
        if (e > 0) e /= static_cast<std::int64_t>(shrink);
    return primitivize(DirichletCharacter(L, order, std::move(exp)));
}

DirichletCharacter wild_character(std::uint64_t p, unsigned m, std::uint64_t j) {
    if (!is_prime(p)) throw std::invalid_argument("wild_character: p must be prime");
    if (m < 1) throw std::invalid_argument("wild_character: m must be >= 1");
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    if (j == 0 || j >= pm || j % p == 0)
        raise("InvalidIndex", "wild character index must satisfy 1 <= j < p^m, p not dividing j");

    if (p == 2) {
        const std::uint64_t mod = 4 * pm; // conductor 2^{m+2}
        std::vector<std::int64_t> exp(mod, -1);
        std::uint64_t five = 1;
        for (std::uint64_t t = 0; t < mod / 4; ++t) {
            const std::int64_t e = static_cast<std::int64_t>(mul_mod(j, t, pm) % pm);
            exp[five] = e;
            exp[mod - five] = e; // trivial on -1
            five = mul_mod(five, 5, mod);
        }
        return DirichletCharacter(mod, pm, std::move(exp));
    }

    const std::uint64_t mod = p * pm; // conductor p^{m+1}
    const std::uint64_t g = smallest_primitive_root(mod);
    const std::uint64_t phi = euler_phi(mod);
    // discrete log of 1 + p in base g
    std::uint64_t s = 0;
    {
        std::uint64_t pw = 1;
        while (pw != (1 + p) % mod) {
            pw = mul_mod(pw, g, mod);
            ++s;
            if (s > phi) throw std::logic_error("wild_character: dlog failed");
        }
    }
    const std::uint64_t c = inv_mod(s % pm, pm); // chi_can(g) = zeta_{p^m}^c
    std::vector<std::int64_t> exp(mod, -1);
    std::uint64_t pw = 1;
    for (std::uint64_t t = 0; t < phi; ++t) {
        exp[pw] = static_cast<std::int64_t>(mul_mod(mul_mod(c, j, pm), t, pm) % pm);
        pw = mul_mod(pw, g, mod);
    }
    const std::uint64_t order = exact_order(pm, exp);
    const std::uint64_t shrink = pm / order;
    for (auto& e : exp)
        if (e > 0) e /= static_cast<std::int64_t>(shrink);
    DirichletCharacter psi(mod, order, std::move(exp));
    if (psi.order() != pm || psi.conductor() != mod)
        throw std::logic_error("wild_character: order/conductor check failed");
    return psi;
}

CharacterGroup field_character_group(const std::vector<DirichletCharacter>& gens) {
    std::vector<DirichletCharacter> members;
    auto contains = [&members](const DirichletCharacter& c) {
        return std::any_of(members.begin(), members.end(),
                           [&c](const DirichletCharacter& m) { return m == c; });
    };
    members.push_back(primitivize(character_by_index(1, 0)));
    for (const auto& g : gens) {
        const DirichletCharacter pg = primitivize(g);
        if (!contains(pg)) members.push_back(pg);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = members.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                DirichletCharacter prod = product(members[i], members[k]);
                if (!contains(prod)) {
                    members.push_back(prod);
                    grew = true;
                }
            }
    }
    std::sort(members.begin(), members.end(),
              [](const DirichletCharacter& a, const DirichletCharacter& b) {
                  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
                  if (a.order() != b.order()) return a.order() < b.order();
                  for (std::uint64_t x = 0; x < a.conductor(); ++x) {
                      if (a.exponent(x) != b.exponent(x)) return a.exponent(x) < b.exponent(x);
                  }
                  return false;
              });
    CharacterGroup grp;
    for (const auto& m : members) grp.modulus = lcm_u64(grp.modulus, m.conductor());
    grp.members = std::move(members);
    return grp;
}

DirichletCharacter character_from_address(const std::string& address) {
    const auto colon = address.find(':');
    if (colon == std::string::npos)
        raise("BadAddress", "character address must be \"modulus:index\"");
    std::uint64_t f = 0, index = 0;
    try {
        f = std::stoull(address.substr(0, colon));
        index = std::stoull(address.substr(colon + 1));
    } catch (const std::exception&) {
        raise("BadAddress", "character address must be \"modulus:index\"");
    }
    if (f == 0) raise("BadAddress", "modulus must be positive");
    return character_by_index(f, index);
}

std::string address_of(const DirichletCharacter& chi) {
    return std::to_string(chi.modulus()) + ":" + std::to_string(character_index(chi));
}

} // namespace lmodl
