#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "ktb/errors.hpp"

namespace ktb {

/// Fixed-width bit-vector over the vertex set of one frame (at most 128 vertices).
///
/// Every binary operation requires both operands to have the same width; complement
/// is taken relative to that width.
class Subset {
public:
    static constexpr std::size_t kMaxWidth = 128;

    Subset() = default;
    explicit Subset(std::size_t width) : width_(static_cast<std::uint32_t>(width))
    {
        if (width > kMaxWidth)
            throw Error(Errc::tier_exceeded, "subset width " + std::to_string(width) + " exceeds 128");
    }

    static Subset full(std::size_t width)
    {
        Subset s(width);
        s.words_ = s.mask();
        return s;
    }

    static Subset of(std::size_t width, std::initializer_list<std::size_t> members)
    {
        Subset s(width);
        for (auto v : members)
            s.set(v);
        return s;
    }

    /// Builds a subset whose bit i is bit i of the 128-bit number (hi:lo).
    static Subset from_words(std::size_t width, std::uint64_t lo, std::uint64_t hi = 0)
    {
        Subset s(width);
        s.words_ = {lo, hi};
        s.words_[0] &= s.mask()[0];
        s.words_[1] &= s.mask()[1];
        return s;
    }

    std::size_t width() const noexcept { return width_; }
    const std::array<std::uint64_t, 2>& words() const noexcept { return words_; }

    bool test(std::size_t v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(std::size_t v)
    {
        check_index(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(std::size_t v)
    {
        check_index(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    bool empty() const noexcept { return (words_[0] | words_[1]) == 0; }
    bool is_full() const noexcept { return words_ == mask(); }
    std::size_t count() const noexcept
    {
        return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
    }

    Subset& operator|=(const Subset& o)
    {
        same_width(o);
        words_[0] |= o.words_[0];
        words_[1] |= o.words_[1];
        return *this;
    }
    Subset& operator&=(const Subset& o)
    {
        same_width(o);
        words_[0] &= o.words_[0];
        words_[1] &= o.words_[1];
        return *this;
    }
    Subset& operator^=(const Subset& o)
    {
        same_width(o);
        words_[0] ^= o.words_[0];
        words_[1] ^= o.words_[1];
        return *this;
    }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator^(Subset a, const Subset& b) { return a ^= b; }

    /// Complement relative to the width.
    Subset operator~() const
    {
        Subset r = *this;
        auto m = mask();
        r.words_[0] = ~r.words_[0] & m[0];
        r.words_[1] = ~r.words_[1] & m[1];
        return r;
    }

    Subset minus(const Subset& o) const { return *this & ~o; }
    bool intersects(const Subset& o) const
    {
        same_width(o);
        return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
    }
    bool subset_of(const Subset& o) const
    {
        same_width(o);
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    /// Lowest member; width() when empty.
    std::size_t first() const noexcept
    {
        if (words_[0])
            return static_cast<std::size_t>(std::countr_zero(words_[0]));
        if (words_[1])
            return 64 + static_cast<std::size_t>(std::countr_zero(words_[1]));
        return width_;
    }

    friend bool operator==(const Subset&, const Subset&) = default;
    /// Orders by width, then by the 128-bit value.
    friend std::strong_ordering operator<=>(const Subset& a, const Subset& b)
    {
        if (auto c = a.width_ <=> b.width_; c != 0)
            return c;
        if (auto c = a.words_[1] <=> b.words_[1]; c != 0)
            return c;
        return a.words_[0] <=> b.words_[0];
    }

    std::size_t hash() const noexcept
    {
        std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ull;
        h ^= (words_[1] + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
        h ^= width_;
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint64_t, 2> mask() const noexcept
    {
        if (width_ >= 128)
            return {~std::uint64_t{0}, ~std::uint64_t{0}};
        if (width_ >= 64)
            return {~std::uint64_t{0}, width_ == 64 ? 0 : (~std::uint64_t{0} >> (128 - width_))};
        return {width_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - width_)), 0};
    }
    void check_index(std::size_t v) const
    {
        if (v >= width_)
            throw Error(Errc::out_of_range, "vertex index " + std::to_string(v) + " outside width " +
                                                std::to_string(width_));
    }
    void same_width(const Subset& o) const
    {
        if (o.width_ != width_)
            throw Error(Errc::width_mismatch, "subset width mismatch: " + std::to_string(width_) + " vs " +
                                                  std::to_string(o.width_));
    }

    std::array<std::uint64_t, 2> words_{0, 0};
    std::uint32_t width_ = 0;
};

struct SubsetHash {
    std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

} // namespace ktb
