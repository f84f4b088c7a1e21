// Dense polynomials over GF(2), packed one coefficient per bit.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2x {

#if defined(GF2X_WORD32)
using Word = std::uint32_t;
using DWord = std::uint64_t;
#else
using Word = std::uint64_t;
using DWord = unsigned __int128;
#endif

inline constexpr std::size_t word_bits = sizeof(Word) * 8;

/// Polynomial over GF(2), little-endian by coefficient index: bit i of
/// word j is the coefficient of x^(j*word_bits + i).
///
/// Canonical form: the highest word is nonzero; the zero polynomial is the
/// empty word sequence. All operations return canonical values.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly x() { return monomial(1); }
    static Gf2Poly monomial(std::size_t e);

    /// Lowercase hex of the coefficient bitstring (x^0 = least significant
    /// bit), no leading zeros, "0" for the zero polynomial. x^3+x+1 <-> "b".
    static Gf2Poly from_hex(std::string_view hex);
    std::string to_hex() const;

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

    /// Degree of the polynomial; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// degree + 1, or 0 for the zero polynomial. Handy for loop bounds.
    std::size_t bit_length() const;

    bool coefficient(std::size_t i) const;
    void set_coefficient(std::size_t i, bool value);
    void flip_coefficient(std::size_t i);

    std::size_t word_count() const { return words_.size(); }
    std::span<const Word> words() const { return words_; }
    Word word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

    std::size_t popcount() const;

    // Coefficientwise addition (XOR); every element is its own inverse.
    Gf2Poly& operator+=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) {
        lhs += rhs;
        return lhs;
    }

    Gf2Poly& operator<<=(std::size_t n);
    friend Gf2Poly operator<<(Gf2Poly a, std::size_t n) {
        a <<= n;
        return a;
    }
    /// Quotient by x^n (low coefficients dropped).
    friend Gf2Poly operator>>(const Gf2Poly& a, std::size_t n);

    /// Bits [pos, pos+len), i.e. (a >> pos) mod x^len.
    Gf2Poly slice(std::size_t pos, std::size_t len) const;
    /// a mod x^n.
    Gf2Poly low_bits(std::size_t n) const { return slice(0, n); }

    /// In-place *this += src << bit_offset.
    void xor_shifted(const Gf2Poly& src, std::size_t bit_offset);

    bool operator==(const Gf2Poly&) const = default;

    /// Total order: the coefficient bitstring read as an integer with x^0 as
    /// the least significant bit. Under this order x^3+x+1 < x^3+x^2+1,
    /// which is the tie-break used when reporting factors.
    std::strong_ordering operator<=>(const Gf2Poly& rhs) const;

    /// Word-granular split helpers for divide-and-conquer multiplication.
    Gf2Poly low_words(std::size_t k) const;
    Gf2Poly high_words(std::size_t k) const;

private:
    void trim();
    std::vector<Word> words_;
};

/// Schoolbook carryless product.
Gf2Poly mul_classical(const Gf2Poly& a, const Gf2Poly& b);

/// a^2: coefficient i moves to coefficient 2i (Frobenius in char 2).
Gf2Poly square(const Gf2Poly& a);

/// Euclidean division: a = q*b + r with deg r < deg b. Throws
/// std::invalid_argument when b is zero.
std::pair<Gf2Poly, Gf2Poly> divrem(const Gf2Poly& a, const Gf2Poly& b);

/// Uniformly random polynomial of degree < degree_bound.
Gf2Poly random_poly(std::mt19937_64& rng, std::size_t degree_bound);

}  // namespace gf2x
