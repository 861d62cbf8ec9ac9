#pragma once

#include <set>
#include <string>
#include <vector>

namespace cthecke {

// Element of the symmetric group S_n in one-line notation. Composition is
// (sigma * tau)(x) = sigma(tau(x)); consequently left multiplication by the
// adjacent transposition s_i swaps the VALUES i and i+1 in the one-line word.
// This is the convention under which pi_i acting on a tableau matches
// s_i acting on its column word.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(word_.size()); }
    int operator()(int x) const { return word_[x - 1]; }
    const std::vector<int>& one_line() const { return word_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    // Lexicographic on one-line words; used only as a canonical order.
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.word_ < b.word_; }

    std::string to_string() const;  // digits concatenated, e.g. "16857423"

private:
    std::vector<int> word_;
};

// A word is a vector (j_k, ..., j_1) standing for the product
// s_{j_k} ... s_{j_1}; the LAST element acts first. reduced_words and
// apply_word share this convention.
using Word = std::vector<int>;

// Coxeter length = inversion count of the one-line word.
int length(const Permutation& p);

// s_i * p (swap values i and i+1 in the one-line word).
Permutation simple_times(int i, const Permutation& p);

// All reduced words of p, in a deterministic order.
std::vector<Word> reduced_words(const Permutation& p);

// Indices appearing in every reduced word of p (computed from one word).
std::set<int> support(const Permutation& p);

// Left weak Bruhat order: p <=_L q iff length(q p^-1) = length(q) - length(p).
bool left_weak_leq(const Permutation& p, const Permutation& q);

// The interval [lo, hi] in left weak order, materialized with its covers.
// Elements are sorted by (rank, one-line word), so the layout is canonical.
class WeakInterval {
public:
    struct Cover {
        int from;   // index of the lower element
        int label;  // hi = s_label * lo
        int to;     // index of the upper element
    };

    WeakInterval(const Permutation& lo, const Permutation& hi);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Cover>& covers() const { return covers_; }

    int index_of(const Permutation& p) const;  // -1 if absent
    int rank(int idx) const { return ranks_[idx]; }
    bool leq(int a, int b) const;  // order relation inside the interval

    // Every pair has a unique meet and a unique join.
    bool is_lattice() const;
    // Every cover raises rank by one and rank(idx) = length(elt * lo^-1).
    bool is_graded() const;

private:
    std::vector<Permutation> elements_;
    std::vector<int> ranks_;
    std::vector<Cover> covers_;
    std::vector<std::vector<bool>> reach_;  // reach_[a][b] : a <= b
};

WeakInterval weak_interval(const Permutation& lo, const Permutation& hi);

// All saturated chains from lo to hi, each given by its cover labels read
// bottom to top.
std::vector<std::vector<int>> saturated_chains(const Permutation& lo, const Permutation& hi);

// The chain <-> reduced word correspondence: labels (i_1, ..., i_k) read
// bottom to top match the word (i_k, ..., i_1), i.e. one is the reverse of
// the other.
Word word_of_chain(const std::vector<int>& labels_bottom_to_top);
std::vector<int> chain_of_word(const Word& word);

}  // namespace cthecke
