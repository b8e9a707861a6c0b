#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "opcount/exact.hpp"

namespace opcount {

// A permutation pattern in one-line notation over {1..m}. Entries are
// 1-based values; positions are 1-based in the public accessors to match
// the usual combinatorics conventions.
class Permutation {
public:
    explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
        const int m = static_cast<int>(entries_.size());
        if (m == 0) throw std::invalid_argument("Permutation: empty");
        std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
        for (int v : entries_) {
            if (v < 1 || v > m || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("Permutation: not a rearrangement of 1..m");
            seen[static_cast<size_t>(v)] = true;
        }
    }

    int size() const { return static_cast<int>(entries_.size()); }

    // Value at 1-based position i.
    int at(int i) const { return entries_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& entries() const { return entries_; }

    Permutation inverse() const {
        std::vector<int> inv(entries_.size());
        for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(at(i)) - 1] = i;
        return Permutation(std::move(inv));
    }

    bool operator==(const Permutation& o) const { return entries_ == o.entries_; }
    bool operator<(const Permutation& o) const { return entries_ < o.entries_; }

    // Accepts both compact digit form ("321") and separated form ("3 2 1").
    static Permutation parse(const std::string& text) {
        std::vector<int> vals;
        if (text.find_first_of(" ,") != std::string::npos) {
            std::string t = text;
            std::replace(t.begin(), t.end(), ',', ' ');
            std::istringstream in(t);
            int v;
            while (in >> v) vals.push_back(v);
        } else {
            for (char ch : text) {
                if (ch < '1' || ch > '9')
                    throw std::invalid_argument("Permutation: bad character in pattern");
                vals.push_back(ch - '0');
            }
        }
        return Permutation(std::move(vals));
    }

    std::string str() const {
        std::ostringstream out;
        bool compact = size() <= 9;
        for (int i = 1; i <= size(); ++i) {
            if (!compact && i > 1) out << ' ';
            out << at(i);
        }
        return out.str();
    }

private:
    std::vector<int> entries_;
};

inline std::vector<Permutation> all_permutations(int m) {
    std::vector<int> v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// A word over the alphabet {1..k}; may be empty.
class Word {
public:
    Word(std::vector<int> letters, int alphabet)
        : letters_(std::move(letters)), alphabet_(alphabet) {
        if (alphabet_ < 0) throw std::invalid_argument("Word: negative alphabet");
        for (int a : letters_)
            if (a < 1 || a > alphabet_)
                throw std::invalid_argument("Word: letter outside alphabet");
    }

    int size() const { return static_cast<int>(letters_.size()); }
    int alphabet() const { return alphabet_; }
    int at(int i) const { return letters_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& letters() const { return letters_; }

    bool surjective() const {
        std::vector<bool> seen(static_cast<size_t>(alphabet_) + 1, false);
        int distinct = 0;
        for (int a : letters_)
            if (!seen[static_cast<size_t>(a)]) {
                seen[static_cast<size_t>(a)] = true;
                ++distinct;
            }
        return distinct == alphabet_;
    }

    bool operator==(const Word& o) const {
        return alphabet_ == o.alphabet_ && letters_ == o.letters_;
    }

    // Space-separated letters, e.g. "3 1 2 3 4 4 1 3".
    static Word parse(const std::string& text, int alphabet) {
        std::istringstream in(text);
        std::vector<int> vals;
        int v;
        while (in >> v) vals.push_back(v);
        return Word(std::move(vals), alphabet);
    }

    std::string str() const {
        std::ostringstream out;
        for (int i = 1; i <= size(); ++i) {
            if (i > 1) out << ' ';
            out << at(i);
        }
        return out.str();
    }

private:
    std::vector<int> letters_;
    int alphabet_;
};

// An ordered partition of {1..n} into nonempty blocks. Blocks are kept with
// elements in increasing order; equality is by block sequence.
class OrderedSetPartition {
public:
    OrderedSetPartition(std::vector<std::vector<int>> blocks, int ground)
        : blocks_(std::move(blocks)), ground_(ground) {
        if (ground_ < 0) throw std::invalid_argument("OrderedSetPartition: negative ground");
        std::vector<bool> seen(static_cast<size_t>(ground_) + 1, false);
        int covered = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("OrderedSetPartition: empty block");
            std::sort(b.begin(), b.end());
            for (int e : b) {
                if (e < 1 || e > ground_ || seen[static_cast<size_t>(e)])
                    throw std::invalid_argument(
                        "OrderedSetPartition: blocks must partition 1..n");
                seen[static_cast<size_t>(e)] = true;
                ++covered;
            }
        }
        if (covered != ground_)
            throw std::invalid_argument("OrderedSetPartition: blocks do not cover 1..n");
    }

    int ground_size() const { return ground_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<int>& block(int j) const { return blocks_[static_cast<size_t>(j) - 1]; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const OrderedSetPartition& o) const {
        return ground_ == o.ground_ && blocks_ == o.blocks_;
    }

    // Slash notation with space-separated elements, e.g. "2 7/3/1 4 8/5 6".
    static OrderedSetPartition parse(const std::string& text) {
        std::vector<std::vector<int>> blocks;
        std::string chunk;
        std::istringstream in(text);
        int max_elem = 0;
        while (std::getline(in, chunk, '/')) {
            std::istringstream bs(chunk);
            std::vector<int> b;
            int v;
            while (bs >> v) {
                b.push_back(v);
                max_elem = std::max(max_elem, v);
            }
            if (!b.empty()) blocks.push_back(std::move(b));
        }
        return OrderedSetPartition(std::move(blocks), max_elem);
    }

    std::string str() const {
        std::ostringstream out;
        for (int j = 1; j <= block_count(); ++j) {
            if (j > 1) out << '/';
            const auto& b = block(j);
            for (size_t i = 0; i < b.size(); ++i) {
                if (i > 0) out << ' ';
                out << b[i];
            }
        }
        return out.str();
    }

private:
    std::vector<std::vector<int>> blocks_;
    int ground_;
};

// w(pi): letter at position i is the index of the block containing i.
inline Word word_of_partition(const OrderedSetPartition& pi) {
    std::vector<int> letters(static_cast<size_t>(pi.ground_size()), 0);
    for (int j = 1; j <= pi.block_count(); ++j)
        for (int e : pi.block(j)) letters[static_cast<size_t>(e) - 1] = j;
    return Word(std::move(letters), pi.block_count());
}

// Inverse of word_of_partition; the word must use every letter of its
// alphabet at least once.
inline OrderedSetPartition partition_of_word(const Word& w) {
    if (!w.surjective())
        throw std::invalid_argument("partition_of_word: word is not surjective");
    std::vector<std::vector<int>> blocks(static_cast<size_t>(w.alphabet()));
    for (int i = 1; i <= w.size(); ++i)
        blocks[static_cast<size_t>(w.at(i)) - 1].push_back(i);
    return OrderedSetPartition(std::move(blocks), w.size());
}

namespace detail {

// Backtracking matcher for an occurrence of p in w restricted to positions
// > `from`, with `chosen` holding the already-fixed letters for pattern
// slots 1..slot-1. Strict order isomorphism: compared letters must be
// distinct and ordered exactly as the pattern entries.
inline bool word_occurrence_search(const std::vector<int>& w, const Permutation& p,
                                   int slot, int from, std::vector<int>& chosen) {
    const int m = p.size();
    if (slot > m) return true;
    for (int pos = from + 1; pos <= static_cast<int>(w.size()); ++pos) {
        int letter = w[static_cast<size_t>(pos) - 1];
        bool ok = true;
        for (int s = 1; s < slot; ++s) {
            int cmp_pattern = p.at(s) < p.at(slot) ? -1 : 1;
            int prev = chosen[static_cast<size_t>(s) - 1];
            int cmp_word = prev < letter ? -1 : (prev > letter ? 1 : 0);
            if (cmp_word != cmp_pattern) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen[static_cast<size_t>(slot) - 1] = letter;
        if (word_occurrence_search(w, p, slot + 1, pos, chosen)) return true;
    }
    return false;
}

}  // namespace detail

inline bool word_contains(const Word& w, const Permutation& p) {
    if (w.size() < p.size()) return false;
    std::vector<int> chosen(static_cast<size_t>(p.size()));
    return detail::word_occurrence_search(w.letters(), p, 1, 0, chosen);
}

namespace detail {

// Occurrence search over a partition: choose blocks with increasing indices
// and one element per chosen block, order-isomorphic to p.
inline bool partition_occurrence_search(const OrderedSetPartition& pi, const Permutation& p,
                                        int slot, int from_block, std::vector<int>& chosen) {
    const int m = p.size();
    if (slot > m) return true;
    for (int j = from_block + 1; j <= pi.block_count(); ++j) {
        for (int elem : pi.block(j)) {
            bool ok = true;
            for (int s = 1; s < slot; ++s) {
                int cmp_pattern = p.at(s) < p.at(slot) ? -1 : 1;
                int prev = chosen[static_cast<size_t>(s) - 1];
                int cmp_val = prev < elem ? -1 : 1;  // elements are distinct
                if (cmp_val != cmp_pattern) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[static_cast<size_t>(slot) - 1] = elem;
            if (partition_occurrence_search(pi, p, slot + 1, j, chosen)) return true;
        }
    }
    return false;
}

}  // namespace detail

inline bool partition_contains(const OrderedSetPartition& pi, const Permutation& p) {
    if (pi.block_count() < p.size()) return false;
    std::vector<int> chosen(static_cast<size_t>(p.size()));
    return detail::partition_occurrence_search(pi, p, 1, 0, chosen);
}

}  // namespace opcount
