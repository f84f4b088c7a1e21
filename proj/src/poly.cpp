#include "gf2x/poly.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace gf2x {

namespace {

// spread_byte[b] has bit 2i set iff bit i of b is set.
constexpr std::array<std::uint16_t, 256> make_spread_table() {
    std::array<std::uint16_t, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        std::uint16_t v = 0;
        for (unsigned i = 0; i < 8; ++i)
            if (b & (1u << i)) v |= static_cast<std::uint16_t>(1u << (2 * i));
        t[b] = v;
    }
    return t;
}

constexpr auto spread_byte = make_spread_table();

}  // namespace

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(std::size_t e) {
    Gf2Poly p;
    p.words_.resize(e / word_bits + 1, 0);
    p.words_.back() = Word{1} << (e % word_bits);
    return p;
}

std::optional<std::size_t> Gf2Poly::degree() const {
    if (words_.empty()) return std::nullopt;
    const std::size_t top = words_.size() - 1;
    return top * word_bits + (word_bits - 1 - std::countl_zero(words_[top]));
}

std::size_t Gf2Poly::bit_length() const {
    if (words_.empty()) return 0;
    const std::size_t top = words_.size() - 1;
    return top * word_bits + (word_bits - std::countl_zero(words_[top]));
}

bool Gf2Poly::coefficient(std::size_t i) const {
    const std::size_t j = i / word_bits;
    if (j >= words_.size()) return false;
    return (words_[j] >> (i % word_bits)) & 1u;
}

void Gf2Poly::set_coefficient(std::size_t i, bool value) {
    const std::size_t j = i / word_bits;
    if (j >= words_.size()) {
        if (!value) return;
        words_.resize(j + 1, 0);
    }
    const Word mask = Word{1} << (i % word_bits);
    if (value)
        words_[j] |= mask;
    else
        words_[j] &= ~mask;
    trim();
}

void Gf2Poly::flip_coefficient(std::size_t i) {
    const std::size_t j = i / word_bits;
    if (j >= words_.size()) words_.resize(j + 1, 0);
    words_[j] ^= Word{1} << (i % word_bits);
    trim();
}

std::size_t Gf2Poly::popcount() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

Gf2Poly& Gf2Poly::operator<<=(std::size_t n) {
    if (words_.empty() || n == 0) return *this;
    const std::size_t word_shift = n / word_bits;
    const std::size_t bit_shift = n % word_bits;
    const std::size_t old_size = words_.size();
    words_.resize(old_size + word_shift + (bit_shift ? 1 : 0), 0);
    if (bit_shift == 0) {
        for (std::size_t i = old_size; i-- > 0;) words_[i + word_shift] = words_[i];
    } else {
        for (std::size_t i = old_size; i-- > 0;) {
            const Word w = words_[i];
            words_[i + word_shift + 1] |= w >> (word_bits - bit_shift);
            words_[i + word_shift] = w << bit_shift;
        }
    }
    for (std::size_t i = 0; i < word_shift && i < words_.size(); ++i) words_[i] = 0;
    trim();
    return *this;
}

Gf2Poly operator>>(const Gf2Poly& a, std::size_t n) {
    const std::size_t len = a.bit_length();
    if (len <= n) return {};
    return a.slice(n, len - n);
}

Gf2Poly Gf2Poly::slice(std::size_t pos, std::size_t len) const {
    if (len == 0) return {};
    const std::size_t total = bit_length();
    if (pos >= total) return {};
    if (len > total - pos) len = total - pos;

    const std::size_t word_off = pos / word_bits;
    const std::size_t bit_off = pos % word_bits;
    const std::size_t out_words = (len + word_bits - 1) / word_bits;
    std::vector<Word> out(out_words, 0);
    for (std::size_t i = 0; i < out_words; ++i) {
        Word w = word(word_off + i) >> bit_off;
        if (bit_off != 0) w |= word(word_off + i + 1) << (word_bits - bit_off);
        out[i] = w;
    }
    const std::size_t tail = len % word_bits;
    if (tail != 0) out.back() &= (Word{1} << tail) - 1;
    return Gf2Poly(std::move(out));
}

void Gf2Poly::xor_shifted(const Gf2Poly& src, std::size_t bit_offset) {
    if (src.words_.empty()) return;
    const std::size_t word_off = bit_offset / word_bits;
    const std::size_t bit_off = bit_offset % word_bits;
    const std::size_t need = word_off + src.words_.size() + (bit_off ? 1 : 0);
    if (words_.size() < need) words_.resize(need, 0);
    if (bit_off == 0) {
        for (std::size_t i = 0; i < src.words_.size(); ++i)
            words_[word_off + i] ^= src.words_[i];
    } else {
        Word carry = 0;
        for (std::size_t i = 0; i < src.words_.size(); ++i) {
            const Word w = src.words_[i];
            words_[word_off + i] ^= (w << bit_off) | carry;
            carry = w >> (word_bits - bit_off);
        }
        words_[word_off + src.words_.size()] ^= carry;
    }
    trim();
}

std::strong_ordering Gf2Poly::operator<=>(const Gf2Poly& rhs) const {
    if (words_.size() != rhs.words_.size())
        return words_.size() <=> rhs.words_.size();
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != rhs.words_[i]) return words_[i] <=> rhs.words_[i];
    }
    return std::strong_ordering::equal;
}

Gf2Poly Gf2Poly::low_words(std::size_t k) const {
    if (k >= words_.size()) return *this;
    return Gf2Poly(std::vector<Word>(words_.begin(), words_.begin() + k));
}

Gf2Poly Gf2Poly::high_words(std::size_t k) const {
    if (k >= words_.size()) return {};
    return Gf2Poly(std::vector<Word>(words_.begin() + k, words_.end()));
}

Gf2Poly Gf2Poly::from_hex(std::string_view hex) {
    if (hex.empty()) throw std::invalid_argument("Gf2Poly::from_hex: empty input");
    constexpr std::size_t nibbles_per_word = word_bits / 4;
    std::vector<Word> out((hex.size() + nibbles_per_word - 1) / nibbles_per_word, 0);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char c = hex[hex.size() - 1 - i];
        Word v;
        if (c >= '0' && c <= '9')
            v = static_cast<Word>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<Word>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v = static_cast<Word>(c - 'A' + 10);
        else
            throw std::invalid_argument("Gf2Poly::from_hex: invalid character");
        out[i / nibbles_per_word] |= v << (4 * (i % nibbles_per_word));
    }
    return Gf2Poly(std::move(out));
}

std::string Gf2Poly::to_hex() const {
    if (words_.empty()) return "0";
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    bool leading = true;
    for (std::size_t i = words_.size(); i-- > 0;) {
        for (std::size_t nib = word_bits / 4; nib-- > 0;) {
            const unsigned v = static_cast<unsigned>((words_[i] >> (4 * nib)) & 0xF);
            if (leading && v == 0) continue;
            leading = false;
            s.push_back(digits[v]);
        }
    }
    return s;
}

Gf2Poly mul_classical(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto aw = a.words();
    const auto bw = b.words();
    std::vector<Word> out(aw.size() + bw.size(), 0);
    // 4-bit window per a-word; the table cost amortizes over all b-words.
    DWord table[16];
    for (std::size_t i = 0; i < aw.size(); ++i) {
        table[0] = 0;
        table[1] = static_cast<DWord>(aw[i]);
        for (std::size_t j = 2; j < 16; j += 2) {
            table[j] = table[j / 2] << 1;
            table[j + 1] = table[j] ^ table[1];
        }
        for (std::size_t j = 0; j < bw.size(); ++j) {
            DWord acc = 0;
            const Word bv = bw[j];
            for (std::size_t nib = 0; nib < word_bits; nib += 4)
                acc ^= table[(bv >> nib) & 0xF] << nib;
            out[i + j] ^= static_cast<Word>(acc);
            out[i + j + 1] ^= static_cast<Word>(acc >> word_bits);
        }
    }
    return Gf2Poly(std::move(out));
}

Gf2Poly square(const Gf2Poly& a) {
    if (a.is_zero()) return {};
    const auto aw = a.words();
    constexpr std::size_t bytes_per_half = word_bits / 16;
    std::vector<Word> out(2 * aw.size(), 0);
    for (std::size_t i = 0; i < aw.size(); ++i) {
        const Word w = aw[i];
        Word lo = 0, hi = 0;
        for (std::size_t k = 0; k < bytes_per_half; ++k) {
            lo |= static_cast<Word>(spread_byte[(w >> (8 * k)) & 0xFF]) << (16 * k);
            hi |= static_cast<Word>(spread_byte[(w >> (8 * (k + bytes_per_half))) & 0xFF])
                  << (16 * k);
        }
        out[2 * i] = lo;
        out[2 * i + 1] = hi;
    }
    return Gf2Poly(std::move(out));
}

std::pair<Gf2Poly, Gf2Poly> divrem(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
    const std::size_t db = *b.degree();
    Gf2Poly rem = a;
    Gf2Poly quot;
    while (!rem.is_zero()) {
        const std::size_t dr = *rem.degree();
        if (dr < db) break;
        const std::size_t shift = dr - db;
        quot.flip_coefficient(shift);
        rem.xor_shifted(b, shift);
    }
    return {std::move(quot), std::move(rem)};
}

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t degree_bound) {
    if (degree_bound == 0) return {};
    const std::size_t nwords = (degree_bound + word_bits - 1) / word_bits;
    std::vector<Word> out(nwords);
    for (auto& w : out) w = static_cast<Word>(rng());
    const std::size_t tail = degree_bound % word_bits;
    if (tail != 0) out.back() &= (Word{1} << tail) - 1;
    return Gf2Poly(std::move(out));
}

}  // namespace gf2x
