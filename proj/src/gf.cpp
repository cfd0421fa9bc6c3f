#include "planeswitch/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace planeswitch {
namespace {

// Coefficient vectors are little-endian: v[i] is the coefficient of x^i.
using Poly = std::vector<unsigned>;

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

// Remainder of a modulo the monic divisor d.
Poly poly_mod(Poly a, const Poly& d, unsigned p) {
    while (a.size() >= d.size()) {
        const unsigned lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - d.size();
            for (std::size_t i = 0; i < d.size(); ++i)
                a[shift + i] = (a[shift + i] + (p - lead % p) * d[i]) % p;
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Monic poly of degree deg whose low coefficients are the base-p digits of
// idx with c0 as the MOST significant digit, matching lexicographic order
// on (c0, c1, ..., c_{deg-1}).
Poly nth_monic(unsigned long idx, unsigned deg, unsigned p) {
    Poly out(deg + 1, 0);
    out[deg] = 1;
    unsigned long r = idx;
    unsigned long place = 1;
    for (unsigned i = 1; i < deg; ++i) place *= p;
    for (unsigned i = 0; i < deg; ++i) {
        out[i] = static_cast<unsigned>(r / place);
        r %= place;
        place /= p;
    }
    return out;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; d <= deg / 2; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long idx = 0; idx < count; ++idx) {
            if (poly_is_zero(poly_mod(f, nth_monic(idx, d, p), p))) return false;
        }
    }
    return true;
}

Poly find_modulus(unsigned p, unsigned k) {
    if (k == 1) return {0, 1};
    unsigned long count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (unsigned long idx = 0; idx < count; ++idx) {
        Poly f = nth_monic(idx, k, p);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Poly digits_of(unsigned e, unsigned p, unsigned k) {
    Poly d(k);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = e % p;
        e /= p;
    }
    return d;
}

unsigned element_of(const Poly& d, unsigned p, unsigned k) {
    unsigned e = 0, place = 1;
    for (unsigned i = 0; i < k; ++i) {
        e += (i < d.size() ? d[i] : 0) * place;
        place *= p;
    }
    return e;
}

}  // namespace

bool FiniteField::is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("extension degree must be >= 1");
    unsigned long q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("field order " + std::to_string(p) + "^" +
                                        std::to_string(k) + " exceeds cap " +
                                        std::to_string(kMaxOrder));
    }
    q_ = static_cast<unsigned>(q);
    modulus_ = find_modulus(p, k);

    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        const Poly da = digits_of(a, p, k);
        for (unsigned b = 0; b < q_; ++b) {
            const Poly db = digits_of(b, p, k);
            Poly sum(k);
            for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
            add_table_[a * q_ + b] = static_cast<std::uint8_t>(element_of(sum, p, k));
            const Poly prod = poly_mod(poly_mul(da, db, p), modulus_, p);
            mul_table_[a * q_ + b] = static_cast<std::uint8_t>(element_of(prod, p, k));
        }
        Poly na(k);
        for (unsigned i = 0; i < k; ++i) na[i] = (p - da[i]) % p;
        neg_table_[a] = static_cast<std::uint8_t>(element_of(na, p, k));
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_table_[a * q_ + b] == 1) {
                inv_table_[a] = static_cast<std::uint8_t>(b);
                break;
            }
}

void FiniteField::check_element(unsigned a) const {
    if (a >= q_)
        throw std::out_of_range("element " + std::to_string(a) + " not in GF(" +
                                std::to_string(q_) + ")");
}

unsigned FiniteField::add(unsigned a, unsigned b) const {
    check_element(a);
    check_element(b);
    return add_table_[a * q_ + b];
}

unsigned FiniteField::mul(unsigned a, unsigned b) const {
    check_element(a);
    check_element(b);
    return mul_table_[a * q_ + b];
}

unsigned FiniteField::neg(unsigned a) const {
    check_element(a);
    return neg_table_[a];
}

unsigned FiniteField::inv(unsigned a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("0 has no multiplicative inverse");
    return inv_table_[a];
}

}  // namespace planeswitch
