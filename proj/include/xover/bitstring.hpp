#pragma once

/// @file bitstring.hpp
/// @brief Fixed-length packed bit strings, the genome type of every algorithm here.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xover {

class RngStream;

/// A genome over {0,1}^n stored in 64-bit words. The length is fixed at
/// construction; bits past n in the last word are always zero.
class BitString {
public:
    BitString() = default;
    /// All-zeros string of length n.
    explicit BitString(std::size_t n);

    /// Parses a string of '0'/'1' characters, first character is position 0.
    static BitString from_string(std::string_view bits);
    static BitString ones(std::size_t n);
    static BitString zeros(std::size_t n) { return BitString(n); }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// Complements every bit in place.
    void flip_all() noexcept;

    [[nodiscard]] std::size_t count_ones() const noexcept;
    [[nodiscard]] std::size_t count_zeros() const noexcept { return size_ - count_ones(); }
    [[nodiscard]] bool all_ones() const noexcept { return count_ones() == size_; }
    [[nodiscard]] bool all_zeros() const noexcept { return count_ones() == 0; }

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() noexcept { return words_; }
    [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }

    /// Mask of valid bits in the final word.
    [[nodiscard]] std::uint64_t tail_mask() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

[[nodiscard]] inline std::size_t count_ones(const BitString& x) noexcept { return x.count_ones(); }
[[nodiscard]] inline std::size_t count_zeros(const BitString& x) noexcept { return x.count_zeros(); }

/// Number of positions where x and y differ. Throws std::invalid_argument on
/// a length mismatch.
[[nodiscard]] std::size_t hamming(const BitString& x, const BitString& y);

/// Bitwise exclusive or. Throws std::invalid_argument on a length mismatch.
[[nodiscard]] BitString bit_xor(const BitString& x, const BitString& y);

/// Each bit independently 1 with probability 1/2. Rejects n == 0.
[[nodiscard]] BitString sample_uniform(std::size_t n, RngStream& rng);

}  // namespace xover
