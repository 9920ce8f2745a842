#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliquelab {

// Fixed-width dynamic bitset used by the search kernels. Width is set once at
// construction; binary operations assume equal widths.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const { return width_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    std::size_t and_count(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // this &= ~o
    Bits& subtract(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend bool operator==(const Bits& a, const Bits& b) { return a.words_ == b.words_; }

    // Index of the first set bit at or after `from`, or width() if none.
    std::size_t next(std::size_t from) const {
        if (from >= width_) return width_;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return width_;
            w = words_[k];
        }
    }
    std::size_t first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

private:
    void trim() {
        if (width_ & 63) words_.back() &= (std::uint64_t{1} << (width_ & 63)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cliquelab
