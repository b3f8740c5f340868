#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stabsets {

/// Fixed-size dynamic bitset over word storage, tuned for the dense
/// intersect-and-scan loops of the exact graph searches.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;

    explicit Bitset(std::size_t size) :
        size_(size),
        words_((size + 63) / 64, 0)
    {
    }

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return words_[i >> 6] >> (i & 63) & 1U; }

    void set_all()
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    bool none() const { return ! any(); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t intersection_count(const Bitset & other) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    Bitset & operator&=(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    Bitset & operator|=(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// this &= ~other
    Bitset & subtract(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    std::size_t find_first() const { return scan_from_word(0); }

    std::size_t find_next(std::size_t i) const
    {
        ++i;
        if (i >= size_)
            return npos;
        std::size_t w = i >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
        if (bits)
            return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
        return scan_from_word(w + 1);
    }

    std::vector<std::size_t> to_vector() const
    {
        std::vector<std::size_t> out;
        for (auto i = find_first(); i != npos; i = find_next(i))
            out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset &, const Bitset &) = default;

private:
    std::size_t scan_from_word(std::size_t w) const
    {
        for (; w < words_.size(); ++w)
            if (words_[w])
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return npos;
    }

    void trim()
    {
        if (size_ & 63)
            words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace stabsets
