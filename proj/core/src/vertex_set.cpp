#include "wod/vertex_set.hpp"

#include <algorithm>

namespace wod {

namespace {

void require_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe())
        raise(Errc::MemberOutOfRange, "vertex sets have different universes (" +
                                          std::to_string(a.universe()) + " vs " +
                                          std::to_string(b.universe()) + ")");
}

}  // namespace

VertexSet VertexSet::from_indices(int universe, const std::vector<int>& indices) {
    VertexSet s(universe);
    for (int v : indices) {
        if (v < 0 || v >= universe)
            raise(Errc::MemberOutOfRange,
                  "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe));
        s.set(v);
    }
    return s;
}

VertexSet VertexSet::from_indices(int universe, std::initializer_list<int> indices) {
    return from_indices(universe, std::vector<int>(indices));
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~word(0);
    int spare = static_cast<int>(s.words_.size() * 64) - universe;
    if (spare > 0 && !s.words_.empty()) s.words_.back() >>= spare;
    return s;
}

bool VertexSet::empty() const {
    for (word w : words_)
        if (w) return false;
    return true;
}

int VertexSet::count() const {
    int total = 0;
    for (word w : words_) total += std::popcount(w);
    return total;
}

int VertexSet::lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
    require_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    require_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    require_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
    require_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(universe_);
    out.subtract(*this);
    return out;
}

std::vector<int> VertexSet::to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    });
    out += "}";
    return out;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    std::vector<int> av = a.to_indices();
    std::vector<int> bv = b.to_indices();
    return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

}  // namespace wod
