#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace wildtree {

// Fixed-universe bit vector, 0-based indices. The universe size is set at
// construction and never changes; all binary operations require equal sizes.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    BitVec& operator|=(const BitVec& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // this \ o
    BitVec& subtract(const BitVec& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const BitVec& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const BitVec& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const BitVec& o) const = default;

    // Index of the first set bit at or after `from`, or size() if none.
    std::size_t next_set(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
            if (++w == words_.size()) return size_;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t i = next_set(0); i < size_; i = next_set(i + 1)) f(i);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// A set of 1-based edge labels drawn from {1..m}. Thin wrapper around BitVec
// keeping the label convention in one place.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int m) : bits_(static_cast<std::size_t>(m)) {}
    EdgeSet(int m, std::initializer_list<int> labels) : EdgeSet(m) {
        for (int l : labels) add(l);
    }

    int universe() const { return static_cast<int>(bits_.size()); }
    bool contains(int label) const { return bits_.test(static_cast<std::size_t>(label - 1)); }
    void add(int label) {
        assert(label >= 1 && label <= universe());
        bits_.set(static_cast<std::size_t>(label - 1));
    }
    void remove(int label) { bits_.reset(static_cast<std::size_t>(label - 1)); }

    int count() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    bool intersects(const EdgeSet& o) const { return bits_.intersects(o.bits_); }
    bool subset_of(const EdgeSet& o) const { return bits_.subset_of(o.bits_); }

    EdgeSet& operator|=(const EdgeSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        bits_ &= o.bits_;
        return *this;
    }
    EdgeSet& subtract(const EdgeSet& o) {
        bits_.subtract(o.bits_);
        return *this;
    }

    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet minus(EdgeSet a, const EdgeSet& b) { return a.subtract(b); }

    bool operator==(const EdgeSet& o) const = default;

    int first() const {
        std::size_t i = bits_.next_set(0);
        return i == bits_.size() ? 0 : static_cast<int>(i) + 1;
    }

    template <typename F>
    void for_each(F&& f) const {
        bits_.for_each_set([&](std::size_t i) { f(static_cast<int>(i) + 1); });
    }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int l) { out.push_back(l); });
        return out;
    }

    const BitVec& bits() const { return bits_; }

private:
    BitVec bits_;
};

// Order by the lexicographic order of the sorted label sequences: the set
// containing the smallest label where the two sets differ comes first.
// ({1,4} < {1,4,6} < {1,5} < {2}.)
inline bool lex_less(const EdgeSet& a, const EdgeSet& b) {
    assert(a.universe() == b.universe());
    const auto& wa = a.bits().words();
    const auto& wb = b.bits().words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        std::uint64_t diff = wa[i] ^ wb[i];
        if (diff) {
            std::uint64_t lowest = diff & (~diff + 1);
            return (wa[i] & lowest) != 0;
        }
    }
    return false;
}

}  // namespace wildtree
