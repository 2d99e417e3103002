#ifndef RSH_BITSET_HPP
#define RSH_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace rsh {

// Fixed-size bitset sized at runtime. Used for edge subsets, vertex
// selections and matroid ground sets, all of which are small (< 10^3 bits)
// but hammered inside hot mutation/evaluation loops.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    void clear() { for (auto& w : words_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    std::size_t hamming(const Bitset& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] ^ other.words_[i]);
        return c;
    }

    std::vector<int> ones() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

    // lexicographic on words; gives a stable total order for map keys
    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
        return a.words_ < b.words_;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rsh

#endif
