#pragma once

#include <cstdint>
#include <vector>

namespace planeswitch {

/// Finite field GF(p^k) with dense lookup tables, for prime powers up to 64.
///
/// Elements are the indices 0..q-1; index e encodes the polynomial whose
/// coefficient of x^i is the i-th base-p digit of e. 0 and 1 are the additive
/// and multiplicative identities. Construction is deterministic: the modulus
/// is the lexicographically first monic irreducible polynomial of degree k
/// (coefficients compared constant term first).
class FiniteField {
public:
    FiniteField(unsigned p, unsigned k);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }

    /// Modulus polynomial coefficients c0..ck (ck = 1); {0, 1} when k = 1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    unsigned add(unsigned a, unsigned b) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned inv(unsigned a) const;

    static bool is_prime(unsigned n);

    static constexpr unsigned kMaxOrder = 64;

private:
    void check_element(unsigned a) const;

    unsigned p_, k_, q_;
    std::vector<unsigned> modulus_;
    std::vector<std::uint8_t> add_table_;  // q*q, row-major
    std::vector<std::uint8_t> mul_table_;
    std::vector<std::uint8_t> inv_table_;  // index 0 unused
    std::vector<std::uint8_t> neg_table_;
};

}  // namespace planeswitch
