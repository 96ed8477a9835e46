#pragma once

// Symbolic words over the side alphabet {1,2,3,4}. A billiard trajectory in a
// convex table never hits the same side twice in a row, so consecutive
// letters always differ. Partition refinement stores words as shared-prefix
// chains (one node per extension) to keep refinement linear in cell count.

#include <cassert>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kite {

class SymbolicWord {
public:
    SymbolicWord() = default;
    explicit SymbolicWord(std::vector<uint8_t> letters) : letters_(std::move(letters)) {}

    void push(uint8_t side) {
        assert(side >= 1 && side <= 4);
        assert(letters_.empty() || letters_.back() != side);
        letters_.push_back(side);
    }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    uint8_t operator[](size_t i) const { return letters_[i]; }
    const std::vector<uint8_t>& letters() const { return letters_; }

    SymbolicWord prefix(size_t n) const {
        n = n < letters_.size() ? n : letters_.size();
        return SymbolicWord(std::vector<uint8_t>(letters_.begin(), letters_.begin() + n));
    }

    // Index of the first differing letter (1-based); 0 if one is a prefix of
    // the other or they are equal.
    static size_t first_divergence(const SymbolicWord& x, const SymbolicWord& y) {
        size_t n = x.size() < y.size() ? x.size() : y.size();
        for (size_t i = 0; i < n; ++i)
            if (x[i] != y[i]) return i + 1;
        return 0;
    }

    std::string str() const {
        std::string s;
        s.reserve(letters_.size());
        for (uint8_t l : letters_) s.push_back(char('0' + l));
        return s;
    }
    static SymbolicWord from_str(const std::string& s) {
        std::vector<uint8_t> v;
        v.reserve(s.size());
        for (char c : s) v.push_back(uint8_t(c - '0'));
        return SymbolicWord(std::move(v));
    }

    friend bool operator==(const SymbolicWord& a, const SymbolicWord& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const SymbolicWord& a, const SymbolicWord& b) {
        return a.letters_ < b.letters_;
    }

private:
    std::vector<uint8_t> letters_;
};

struct WordNode {
    uint8_t letter;
    int depth;
    std::shared_ptr<const WordNode> parent;
};
using WordRef = std::shared_ptr<const WordNode>;

inline WordRef word_extend(const WordRef& w, uint8_t letter) {
    return std::make_shared<const WordNode>(WordNode{letter, w ? w->depth + 1 : 1, w});
}

inline SymbolicWord word_materialize(const WordRef& w) {
    std::vector<uint8_t> out(w ? w->depth : 0);
    const WordNode* n = w.get();
    for (size_t i = out.size(); n; n = n->parent.get()) out[--i] = n->letter;
    return SymbolicWord(std::move(out));
}

}  // namespace kite
