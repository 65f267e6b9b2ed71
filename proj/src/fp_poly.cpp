#include "lmodl/fp_poly.hpp"

#include "lmodl/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmodl::fp {

namespace {

void trim(FpPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

void check_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::invalid_argument("FpPoly: mixed characteristics");
}

} // namespace

FpPoly make(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
    FpPoly f{p, std::move(coeffs)};
    for (auto& v : f.c) v %= p;
    trim(f);
    return f;
}

FpPoly zero(std::uint64_t p) { return FpPoly{p, {}}; }
FpPoly one(std::uint64_t p) { return make(p, {1}); }
FpPoly x(std::uint64_t p) { return make(p, {0, 1}); }

FpPoly add(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    FpPoly r{a.p, a.c};
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    FpPoly r{a.p, a.c};
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return zero(a.p);
    FpPoly r{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mul_mod(a.c[i], b.c[j], a.p)) % a.p;
    }
    trim(r);
    return r;
}

FpPoly scale(const FpPoly& a, std::uint64_t s) {
    FpPoly r{a.p, a.c};
    s %= a.p;
    for (auto& v : r.c) v = mul_mod(v, s, a.p);
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("FpPoly divmod: division by zero");
    if (a.degree() < b.degree()) return {zero(a.p), a};
    const std::uint64_t p = a.p;
    const std::uint64_t lc_inv = inv_mod(b.c.back(), p);
    FpPoly remp{p, a.c};
    FpPoly quo{p, std::vector<std::uint64_t>(a.c.size() - b.c.size() + 1, 0)};
    for (int i = a.degree(); i >= b.degree(); --i) {
        const std::uint64_t q = mul_mod(remp.c[i], lc_inv, p);
        if (q == 0) continue;
        quo.c[i - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            auto& slot = remp.c[i - b.degree() + j];
            slot = (slot + p - mul_mod(q, b.c[j], p)) % p;
        }
    }
    trim(quo);
    trim(remp);
    return {std::move(quo), std::move(remp)};
}

FpPoly rem(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly monic(const FpPoly& a) {
    if (a.is_zero() || a.c.back() == 1) return a;
    return scale(a, inv_mod(a.c.back(), a.p));
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FpPoly derivative(const FpPoly& a) {
    if (a.degree() < 1) return zero(a.p);
    FpPoly r{a.p, std::vector<std::uint64_t>(a.c.size() - 1, 0)};
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mul_mod(a.c[i], i % a.p, a.p);
    trim(r);
    return r;
}

std::uint64_t eval(const FpPoly& a, std::uint64_t v) {
    std::uint64_t acc = 0;
    v %= a.p;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = (mul_mod(acc, v, a.p) + a.c[i]) % a.p;
    return acc;
}

FpPoly pow_mod(const FpPoly& base, const Int& e, const FpPoly& mod) {
    FpPoly r = one(base.p);
    FpPoly b = rem(base, mod);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b), mod);
    }
    return r;
}

bool less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

FpPoly monic_by_counter(std::uint64_t p, unsigned d, const Int& v) {
    std::vector<std::uint64_t> c(d + 1, 0);
    c[d] = 1;
    Int t = v;
    for (unsigned i = 0; i < d && sgn(t) != 0; ++i) {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), p);
        c[i] = r.get_ui();
        t = q;
    }
    if (sgn(t) != 0) throw std::invalid_argument("monic_by_counter: counter out of range");
    return FpPoly{p, std::move(c)};
}

bool is_irreducible(const FpPoly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    // x^{p^k} mod f accumulated across k; reducible iff some gcd is nontrivial
    // for k <= d/2, irreducible iff additionally x^{p^d} == x mod f.
    const FpPoly xp = x(f.p);
    FpPoly h = xp;
    for (int k = 1; k <= d / 2; ++k) {
        h = pow_mod(h, Int(static_cast<unsigned long>(f.p)), f);
        FpPoly g = gcd(f, sub(h, xp));
        if (g.degree() > 0) return false;
    }
    for (int k = d / 2 + 1; k <= d; ++k) h = pow_mod(h, Int(static_cast<unsigned long>(f.p)), f);
    return sub(h, xp).is_zero();
}

FpPoly smallest_irreducible(std::uint64_t p, unsigned degree) {
    if (degree == 0) throw std::invalid_argument("smallest_irreducible: degree 0");
    const Int limit = int_pow(Int(static_cast<unsigned long>(p)), degree);
    for (Int v(0); v < limit; ++v) {
        FpPoly cand = monic_by_counter(p, degree, v);
        if (is_irreducible(cand)) return cand;
    }
    throw std::logic_error("smallest_irreducible: search exhausted"); // unreachable
}

namespace {

// Deterministic equal-degree splitting: every irreducible factor of g has
// degree d. Trial elements come from the monic-by-counter enumeration, so
// two runs always pick the same factors.
// Non-monic counterpart of monic_by_counter: all coefficients are base-p
// digits of v. Enumerating v walks every polynomial of degree < deg bound.
FpPoly from_counter(std::uint64_t p, const Int& v) {
    std::vector<std::uint64_t> c;
    Int t = v;
    while (sgn(t) != 0) {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), p);
        c.push_back(r.get_ui());
        t = q;
    }
    return FpPoly{p, std::move(c)};
}

void split_equal_degree(const FpPoly& g, unsigned d, std::vector<FpPoly>& out) {
    if (static_cast<unsigned>(g.degree()) == d) {
        out.push_back(monic(g));
        return;
    }
    const std::uint64_t p = g.p;
    const Int q = int_pow(Int(static_cast<unsigned long>(p)), d);
    const Int span = int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned>(g.degree()));
    for (Int v(static_cast<unsigned long>(p));; ++v) {
        if (v >= span) throw std::logic_error("split_equal_degree: enumeration exhausted");
        FpPoly u = from_counter(p, v);
        FpPoly s = gcd(g, u);
        if (s.degree() > 0 && s.degree() < g.degree()) {
            split_equal_degree(s, d, out);
            split_equal_degree(divmod(g, s).first, d, out);
            return;
        }
        if (p == 2) {
            // trace map u + u^2 + ... + u^{2^{d-1}} mod g
            FpPoly t = rem(u, g);
            FpPoly acc = t;
            for (unsigned i = 1; i < d; ++i) {
                t = rem(mul(t, t), g);
                acc = add(acc, t);
            }
            s = gcd(g, acc);
        } else {
            FpPoly w = pow_mod(u, (q - 1) / 2, g);
            s = gcd(g, sub(w, one(p)));
        }
        if (s.degree() > 0 && s.degree() < g.degree()) {
            split_equal_degree(s, d, out);
            split_equal_degree(divmod(g, s).first, d, out);
            return;
        }
    }
}

} // namespace

std::vector<FpPoly> factor_squarefree(const FpPoly& f) {
    if (f.degree() < 1) return {};
    FpPoly d = gcd(f, derivative(f));
    if (d.degree() != 0)
        raise("NotSquarefree", "polynomial is not squarefree mod " + std::to_string(f.p));

    std::vector<FpPoly> factors;
    FpPoly w = monic(f);
    const FpPoly xp = x(f.p);
    FpPoly h = xp;
    for (unsigned deg = 1; 2 * deg <= static_cast<unsigned>(w.degree()); ++deg) {
        h = pow_mod(h, Int(static_cast<unsigned long>(f.p)), w);
        FpPoly g = gcd(w, sub(h, xp));
        if (g.degree() > 0) {
            split_equal_degree(g, deg, factors);
            w = divmod(w, g).first;
            h = rem(h, w);
        }
    }
    if (w.degree() > 0) factors.push_back(w);
    std::sort(factors.begin(), factors.end(), less);
    return factors;
}

} // namespace lmodl::fp
