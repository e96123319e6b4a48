#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wod/error.hpp"

namespace wod {

/// Fixed-universe vertex set backed by machine words. All bits at positions
/// >= universe() stay zero, so popcount-style queries never need masking.
class VertexSet {
  public:
    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(check_universe(universe)), words_(word_count(universe_), 0) {}

    static VertexSet from_indices(int universe, const std::vector<int>& indices);
    static VertexSet from_indices(int universe, std::initializer_list<int> indices);
    static VertexSet full(int universe);

    int universe() const { return universe_; }

    bool test(int v) const { return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u; }

    void set(int v) { words_[static_cast<std::size_t>(v) >> 6] |= word(1) << (v & 63); }
    void reset(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(word(1) << (v & 63)); }
    void flip(int v) { words_[static_cast<std::size_t>(v) >> 6] ^= word(1) << (v & 63); }

    bool empty() const;
    int count() const;

    /// Smallest member, or -1 when empty.
    int lowest() const;

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    /// Parity of |this ∩ other|. This is the hot query behind every odd
    /// neighborhood computation, so it stays a single pass over the words.
    bool parity_of_and(const VertexSet& other) const {
        word acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
        return std::popcount(acc) & 1;
    }

    int count_and(const VertexSet& other) const {
        int total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += std::popcount(words_[i] & other.words_[i]);
        return total;
    }

    VertexSet& operator^=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    /// this := this \ other
    VertexSet& subtract(const VertexSet& other);

    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    VertexSet complement() const;

    bool operator==(const VertexSet& other) const = default;

    std::vector<int> to_indices() const;

    /// Render as "{0, 2, 5}" ("{}" when empty), for logs and CLI output.
    std::string to_string() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            word w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                fn(static_cast<int>(i * 64) + bit);
                w &= w - 1;
            }
        }
    }

    /// Order on sets viewed as sorted index sequences ({} < {0} < {0, 1} <
    /// {0, 2} < {1}). This is the tie-break order for solver witnesses.
    static bool lex_less(const VertexSet& a, const VertexSet& b);

  private:
    using word = std::uint64_t;

    static int check_universe(int universe) {
        if (universe < 0) raise(Errc::MemberOutOfRange, "vertex set universe must be non-negative");
        return universe;
    }

    static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

    int universe_ = 0;
    std::vector<word> words_;
};

}  // namespace wod
