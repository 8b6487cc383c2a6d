#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace vrlab {

/// Fixed-width bit array with word-level set operations.
class DynamicBitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t wordCount() const noexcept { return words_.size(); }
    const Word* data() const noexcept { return words_.data(); }
    Word* data() noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

    void setAll() noexcept
    {
        std::fill(words_.begin(), words_.end(), ~Word{0});
        trim();
    }

    bool any() const noexcept
    {
        for (Word w : words_)
            if (w) return true;
        return false;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return size_;
    }

    /// Index of the lowest set bit strictly after i, or size().
    std::size_t next(std::size_t i) const noexcept
    {
        ++i;
        if (i >= size_) return size_;
        std::size_t k = i / kWordBits;
        Word w = words_[k] & (~Word{0} << (i % kWordBits));
        while (true) {
            if (w) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return size_;
            w = words_[k];
        }
    }

    template <typename F>
    void forEach(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            Word w = words_[k];
            while (w) {
                f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    /// this ⊆ other
    bool isSubsetOf(const DynamicBitset& other) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    /// (this ∩ mask) ⊆ other
    bool isSubsetOf(const DynamicBitset& other, const DynamicBitset& mask) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & mask.words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const DynamicBitset& other) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    DynamicBitset& operator&=(const DynamicBitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    DynamicBitset& operator|=(const DynamicBitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    DynamicBitset& operator^=(const DynamicBitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    /// this ∖ other
    DynamicBitset& subtract(const DynamicBitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) noexcept { return a &= b; }

    bool operator==(const DynamicBitset&) const = default;

private:
    void trim() noexcept
    {
        if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace vrlab
