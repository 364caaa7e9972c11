#include "xover/bitstring.hpp"

#include <bit>
#include <stdexcept>

#include "xover/rng.hpp"

namespace xover {

BitString::BitString(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

BitString BitString::from_string(std::string_view bits) {
    BitString x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            x.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitString::from_string: invalid character");
        }
    }
    return x;
}

BitString BitString::ones(std::size_t n) {
    BitString x(n);
    x.flip_all();
    return x;
}

std::uint64_t BitString::tail_mask() const noexcept {
    const std::size_t rem = size_ & 63;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void BitString::flip_all() noexcept {
    for (auto& w : words_) w = ~w;
    if (!words_.empty()) words_.back() &= tail_mask();
}

std::size_t BitString::count_ones() const noexcept {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::string BitString::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t hamming(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming: length mismatch");
    const auto a = x.words();
    const auto b = y.words();
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
    }
    return total;
}

BitString bit_xor(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw std::invalid_argument("bit_xor: length mismatch");
    BitString out(x.size());
    auto o = out.words();
    const auto a = x.words();
    const auto b = y.words();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = a[i] ^ b[i];
    return out;
}

BitString sample_uniform(std::size_t n, RngStream& rng) {
    if (n == 0) throw std::invalid_argument("sample_uniform: length must be positive");
    BitString x(n);
    auto w = x.words();
    for (auto& word : w) word = rng.next_u64();
    w.back() &= x.tail_mask();
    return x;
}

}  // namespace xover
