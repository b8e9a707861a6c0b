#pragma once

#include <stdexcept>
#include <vector>

#include "opcount/exact.hpp"
#include "opcount/patterns.hpp"

namespace opcount {
namespace detail {

// Matcher for occurrences of p that end at a freshly appended letter. The
// last pattern slot is pinned to the new letter; the remaining slots are
// searched over the existing prefix. Containment of a prefix is monotone
// under extension, so during a pruned enumeration only such occurrences can
// be new.
class WordEndMatcher {
public:
    WordEndMatcher(const std::vector<int>& prefix, int new_letter, const Permutation& p)
        : w_(prefix), p_(p), m_(p.size()), chosen_(static_cast<size_t>(p.size())) {
        chosen_[static_cast<size_t>(m_) - 1] = new_letter;
    }

    bool found() { return search(1, 0); }

private:
    bool consistent(int slot, int letter) const {
        // Compare against already-fixed slots: 1..slot-1 and the pinned last.
        for (int s = 1; s < slot; ++s)
            if (!pair_ok(s, slot, chosen_[static_cast<size_t>(s) - 1], letter)) return false;
        return pair_ok(slot, m_, letter, chosen_[static_cast<size_t>(m_) - 1]);
    }

    bool pair_ok(int s_lo, int s_hi, int v_lo, int v_hi) const {
        if (v_lo == v_hi) return false;  // strict order isomorphism
        return (v_lo < v_hi) == (p_.at(s_lo) < p_.at(s_hi));
    }

    bool search(int slot, int from) {
        if (slot == m_) return true;
        const int t = static_cast<int>(w_.size());
        for (int pos = from + 1; pos <= t; ++pos) {
            if (t - pos < m_ - 1 - slot) break;  // not enough positions left
            int letter = w_[static_cast<size_t>(pos) - 1];
            if (!consistent(slot, letter)) continue;
            chosen_[static_cast<size_t>(slot) - 1] = letter;
            if (search(slot + 1, pos)) return true;
        }
        return false;
    }

    const std::vector<int>& w_;
    const Permutation& p_;
    int m_;
    std::vector<int> chosen_;
};

// Matcher for occurrences of p in a partial partition that must use the
// newest element. Elements are inserted in increasing order, so the new
// element is the maximum and can only fill the slot holding the pattern's
// largest entry; that slot is pinned to (block c, element e).
class PartitionEndMatcher {
public:
    PartitionEndMatcher(const std::vector<std::vector<int>>& blocks, int c, int e,
                        const Permutation& p)
        : blocks_(blocks), p_(p), m_(p.size()), c_(c),
          chosen_(static_cast<size_t>(p.size())) {
        mu_ = 1;
        for (int s = 1; s <= m_; ++s)
            if (p.at(s) == m_) mu_ = s;
        chosen_[static_cast<size_t>(mu_) - 1] = e;
    }

    bool found() { return search(1, 0); }

private:
    bool consistent(int slot, int elem) const {
        for (int s = 1; s < slot; ++s)
            if (!pair_ok(s, slot, chosen_[static_cast<size_t>(s) - 1], elem)) return false;
        if (mu_ > slot)
            return pair_ok(slot, mu_, elem, chosen_[static_cast<size_t>(mu_) - 1]);
        return true;
    }

    bool pair_ok(int s_lo, int s_hi, int v_lo, int v_hi) const {
        return (v_lo < v_hi) == (p_.at(s_lo) < p_.at(s_hi));  // elements are distinct
    }

    bool search(int slot, int last_block) {
        if (slot > m_) return true;
        if (slot == mu_) {
            if (last_block >= c_) return false;
            return search(slot + 1, c_);
        }
        const int k = static_cast<int>(blocks_.size()) - 1;  // blocks_ is 1-based
        for (int j = last_block + 1; j <= k; ++j) {
            if (slot < mu_ && j >= c_) break;
            if (k - j < m_ - slot) break;  // not enough blocks left
            for (int elem : blocks_[static_cast<size_t>(j)]) {
                if (!consistent(slot, elem)) continue;
                chosen_[static_cast<size_t>(slot) - 1] = elem;
                if (search(slot + 1, j)) return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& blocks_;
    const Permutation& p_;
    int m_;
    int c_;
    int mu_;
    std::vector<int> chosen_;
};

}  // namespace detail

// |[k]^n(p)|: words of length n over {1..k} avoiding p, counted by
// depth-first prefix extension. A prefix that already contains p is never
// extended, which is sound because containment is monotone in prefixes.
inline Int count_words_avoiding(long n, long k, const Permutation& p) {
    if (n < 0 || k < 0) throw std::invalid_argument("count_words_avoiding: negative size");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    Int count = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<long>(w.size()) == n) {
            ++count;
            return;
        }
        for (int a = 1; a <= k; ++a) {
            if (detail::WordEndMatcher(w, a, p).found()) continue;
            w.push_back(a);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
    return count;
}

// |SW_{n,[k]}(p)|: as above with a surjectivity requirement; prefixes that
// cannot reach all k letters in the remaining positions are cut.
inline Int count_surjective_words_avoiding(long n, long k, const Permutation& p) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("count_surjective_words_avoiding: negative size");
    if (k > n) return 0;
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    std::vector<int> mult(static_cast<size_t>(k) + 1, 0);
    long distinct = 0;
    Int count = 0;
    auto rec = [&](auto&& self) -> void {
        const long t = static_cast<long>(w.size());
        if (t == n) {
            ++count;  // the missing-letter cut guarantees surjectivity here
            return;
        }
        for (int a = 1; a <= k; ++a) {
            bool fresh = mult[static_cast<size_t>(a)] == 0;
            if ((k - distinct - (fresh ? 1 : 0)) > n - t - 1) continue;
            if (detail::WordEndMatcher(w, a, p).found()) continue;
            w.push_back(a);
            ++mult[static_cast<size_t>(a)];
            if (fresh) ++distinct;
            self(self);
            if (fresh) --distinct;
            --mult[static_cast<size_t>(a)];
            w.pop_back();
        }
    };
    rec(rec);
    return count;
}

// op_{n,k}(p): ordered partitions of {1..n} into k blocks avoiding p,
// enumerated by assigning elements 1..n to blocks in order. Avoidance is
// tested with the block-index containment definition directly (not through
// the word correspondence), so this count is an oracle independent of
// count_surjective_words_avoiding.
inline Int count_partitions_avoiding(long n, long k, const Permutation& p) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("count_partitions_avoiding: negative size");
    if (k > n) return 0;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(k) + 1);
    long nonempty = 0;
    Int count = 0;
    auto rec = [&](auto&& self, long next_elem) -> void {
        if (next_elem > n) {
            ++count;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool fresh = blocks[static_cast<size_t>(c)].empty();
            if ((k - nonempty - (fresh ? 1 : 0)) > n - next_elem) continue;
            if (detail::PartitionEndMatcher(blocks, c, static_cast<int>(next_elem), p).found())
                continue;
            blocks[static_cast<size_t>(c)].push_back(static_cast<int>(next_elem));
            if (fresh) ++nonempty;
            self(self, next_elem + 1);
            if (fresh) --nonempty;
            blocks[static_cast<size_t>(c)].pop_back();
        }
    };
    rec(rec, 1);
    return count;
}

// s_n(p): permutations of {1..n} avoiding p.
inline Int count_permutations_avoiding(long n, const Permutation& p) {
    if (n < 0) throw std::invalid_argument("count_permutations_avoiding: negative size");
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    Int count = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<long>(w.size()) == n) {
            ++count;
            return;
        }
        for (int a = 1; a <= static_cast<int>(n); ++a) {
            if (used[static_cast<size_t>(a)]) continue;
            if (detail::WordEndMatcher(w, a, p).found()) continue;
            w.push_back(a);
            used[static_cast<size_t>(a)] = true;
            self(self);
            used[static_cast<size_t>(a)] = false;
            w.pop_back();
        }
    };
    rec(rec);
    return count;
}

}  // namespace opcount
