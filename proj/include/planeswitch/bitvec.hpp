#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace planeswitch {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
///
/// Bit i lives in word i/64 at position i%64. Unused high bits of the last
/// word are kept zero, so whole-word equality, XOR and popcount are valid.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BitVec from_indices(std::size_t n, const std::vector<std::uint32_t>& idx) {
        BitVec v(n);
        for (auto i : idx) v.set(i);
        return v;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    BitVec& operator^=(const BitVec& other) {
        if (other.size_ != size_) throw std::invalid_argument("BitVec size mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec& other) const = default;

    /// Lexicographic order on the ascending sequence of set indices: at the
    /// first differing index, the vector holding the bit is the smaller one.
    /// Within a fixed weight this compares support tuples, so {0,1,5} comes
    /// before {0,1,6} and before {0,2,3}.
    bool lex_less(const BitVec& other) const {
        if (other.size_ != size_) throw std::invalid_argument("BitVec size mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const std::uint64_t d = words_[i] ^ other.words_[i];
            if (d) {
                const int j = std::countr_zero(d);
                return ((words_[i] >> j) & 1u) == 1;
            }
        }
        return false;
    }

    /// Index of the lowest set bit, or -1 when empty.
    std::int64_t find_first() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi])
                return static_cast<std::int64_t>(wi * 64 + std::countr_zero(words_[wi]));
        return -1;
    }

    std::vector<std::uint32_t> set_indices() const {
        std::vector<std::uint32_t> out;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int j = std::countr_zero(w);
                out.push_back(static_cast<std::uint32_t>(wi * 64 + j));
                w &= w - 1;
            }
        }
        return out;
    }

    std::uint64_t word(std::size_t i) const { return words_[i]; }
    std::size_t num_words() const { return words_.size(); }

    /// Little-endian hex: bit i goes to byte i/8, position i%8; each byte is
    /// two lowercase hex digits, bytes in increasing order.
    std::string to_hex() const {
        static const char digits[] = "0123456789abcdef";
        const std::size_t nbytes = (size_ + 7) / 8;
        std::string out;
        out.reserve(2 * nbytes);
        for (std::size_t b = 0; b < nbytes; ++b) {
            const unsigned byte =
                static_cast<unsigned>((words_[b / 8] >> (8 * (b % 8))) & 0xFF);
            out.push_back(digits[byte >> 4]);
            out.push_back(digits[byte & 0xF]);
        }
        return out;
    }

    static BitVec from_hex(const std::string& hex, std::size_t n) {
        const std::size_t nbytes = (n + 7) / 8;
        if (hex.size() != 2 * nbytes)
            throw std::invalid_argument("hex string has wrong length for " +
                                        std::to_string(n) + " bits");
        BitVec v(n);
        for (std::size_t b = 0; b < nbytes; ++b) {
            const int hi = hex_digit(hex[2 * b]);
            const int lo = hex_digit(hex[2 * b + 1]);
            const auto byte = static_cast<std::uint64_t>((hi << 4) | lo);
            v.words_[b / 8] |= byte << (8 * (b % 8));
        }
        // bits beyond n must be zero, otherwise the string lies about length
        if (n % 64 != 0 && !v.words_.empty()) {
            const std::uint64_t tail = v.words_.back() >> (n % 64 == 0 ? 0 : n % 64);
            if ((n % 64) && (v.words_.back() >> (n % 64)) != 0)
                throw std::invalid_argument("hex string sets bits beyond length");
            (void)tail;
        }
        return v;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("BitVec index " + std::to_string(i));
    }

    static int hex_digit(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace planeswitch
