#include "cthecke/permutation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cthecke {

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection on [1,n]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 0; i < static_cast<int>(word_.size()); ++i) w[word_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> w(a.degree());
    for (int x = 1; x <= a.degree(); ++x) w[x - 1] = a(b(x));
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    std::string s;
    for (int v : word_) s += std::to_string(v);
    return s;
}

int length(const Permutation& p) {
    const auto& w = p.one_line();
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Permutation simple_times(int i, const Permutation& p) {
    if (i < 1 || i >= p.degree()) throw std::out_of_range("simple_times: index out of range");
    std::vector<int> w = p.one_line();
    auto pi = std::find(w.begin(), w.end(), i);
    auto pj = std::find(w.begin(), w.end(), i + 1);
    std::iter_swap(pi, pj);
    return Permutation(std::move(w));
}

namespace {

// Left descents: i with length(s_i p) < length(p), i.e. i appears after i+1.
std::vector<int> left_descents(const Permutation& p) {
    std::vector<int> pos(p.degree() + 1);
    const auto& w = p.one_line();
    for (int k = 0; k < p.degree(); ++k) pos[w[k]] = k;
    std::vector<int> out;
    for (int i = 1; i < p.degree(); ++i)
        if (pos[i] > pos[i + 1]) out.push_back(i);
    return out;
}

void reduced_words_rec(const Permutation& p,
                       std::map<std::vector<int>, std::vector<Word>>& memo,
                       std::vector<Word>& out) {
    auto it = memo.find(p.one_line());
    if (it != memo.end()) { out = it->second; return; }
    std::vector<Word> words;
    std::vector<int> descents = left_descents(p);
    if (descents.empty()) {
        words.push_back({});
    } else {
        for (int i : descents) {
            std::vector<Word> rest;
            reduced_words_rec(simple_times(i, p), memo, rest);
            for (auto& w : rest) {
                Word full;
                full.reserve(w.size() + 1);
                full.push_back(i);
                full.insert(full.end(), w.begin(), w.end());
                words.push_back(std::move(full));
            }
        }
    }
    memo[p.one_line()] = words;
    out = std::move(words);
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& p) {
    std::map<std::vector<int>, std::vector<Word>> memo;
    std::vector<Word> out;
    reduced_words_rec(p, memo, out);
    return out;
}

std::set<int> support(const Permutation& p) {
    std::set<int> s;
    Permutation cur = p;
    while (true) {
        std::vector<int> d = left_descents(cur);
        if (d.empty()) break;
        s.insert(d.front());
        cur = simple_times(d.front(), cur);
    }
    return s;
}

bool left_weak_leq(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("left_weak_leq: degree mismatch");
    return length(q * p.inverse()) == length(q) - length(p);
}

WeakInterval::WeakInterval(const Permutation& lo, const Permutation& hi) {
    if (!left_weak_leq(lo, hi)) throw std::invalid_argument("weak_interval: lo is not below hi");
    const int n = lo.degree();
    const int base = length(lo);

    // Breadth-first by rank; every element of the interval is reachable from
    // lo through covers that stay below hi.
    std::map<std::vector<int>, int> rank_of;
    rank_of[lo.one_line()] = 0;
    std::vector<Permutation> frontier{lo};
    std::vector<Permutation> all{lo};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (int i = 1; i < n; ++i) {
                Permutation q = simple_times(i, p);
                if (length(q) != length(p) + 1 || rank_of.count(q.one_line())) continue;
                if (!left_weak_leq(q, hi)) continue;
                rank_of[q.one_line()] = length(q) - base;
                next.push_back(q);
                all.push_back(q);
            }
        }
        frontier = std::move(next);
    }

    std::sort(all.begin(), all.end(), [&](const Permutation& a, const Permutation& b) {
        int ra = rank_of[a.one_line()], rb = rank_of[b.one_line()];
        return ra != rb ? ra < rb : a < b;
    });
    elements_ = std::move(all);
    ranks_.resize(elements_.size());
    std::map<std::vector<int>, int> index;
    for (int k = 0; k < size(); ++k) {
        ranks_[k] = rank_of[elements_[k].one_line()];
        index[elements_[k].one_line()] = k;
    }

    for (int k = 0; k < size(); ++k) {
        for (int i = 1; i < n; ++i) {
            Permutation q = simple_times(i, elements_[k]);
            auto it = index.find(q.one_line());
            if (it != index.end() && ranks_[it->second] == ranks_[k] + 1)
                covers_.push_back({k, i, it->second});
        }
    }

    // Transitive closure over covers; elements are rank-sorted, so a single
    // reverse sweep suffices.
    reach_.assign(size(), std::vector<bool>(size(), false));
    for (int k = 0; k < size(); ++k) reach_[k][k] = true;
    for (int k = size() - 1; k >= 0; --k)
        for (const Cover& c : covers_)
            if (c.from == k)
                for (int t = 0; t < size(); ++t)
                    if (reach_[c.to][t]) reach_[k][t] = true;
}

int WeakInterval::index_of(const Permutation& p) const {
    for (int k = 0; k < size(); ++k)
        if (elements_[k] == p) return k;
    return -1;
}

bool WeakInterval::leq(int a, int b) const { return reach_[a][b]; }

bool WeakInterval::is_lattice() const {
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            // meet: unique maximum among common lower bounds
            std::vector<int> lower, upper;
            for (int c = 0; c < size(); ++c) {
                if (leq(c, a) && leq(c, b)) lower.push_back(c);
                if (leq(a, c) && leq(b, c)) upper.push_back(c);
            }
            int meets = 0, joins = 0;
            for (int c : lower) {
                bool maximal = true;
                for (int d : lower)
                    if (!leq(d, c)) { maximal = false; break; }
                if (maximal) ++meets;
            }
            for (int c : upper) {
                bool minimal = true;
                for (int d : upper)
                    if (!leq(c, d)) { minimal = false; break; }
                if (minimal) ++joins;
            }
            if (meets != 1 || joins != 1) return false;
        }
    return true;
}

bool WeakInterval::is_graded() const {
    const Permutation lo_inv = elements_[0].inverse();
    for (int k = 0; k < size(); ++k)
        if (ranks_[k] != length(elements_[k] * lo_inv)) return false;
    for (const Cover& c : covers_)
        if (ranks_[c.to] != ranks_[c.from] + 1) return false;
    return true;
}

WeakInterval weak_interval(const Permutation& lo, const Permutation& hi) {
    return WeakInterval(lo, hi);
}

namespace {

void chains_rec(const Permutation& cur, const Permutation& hi, std::vector<int>& labels,
                std::vector<std::vector<int>>& out) {
    if (cur == hi) {
        out.push_back(labels);
        return;
    }
    for (int i = 1; i < cur.degree(); ++i) {
        Permutation q = simple_times(i, cur);
        if (length(q) == length(cur) + 1 && left_weak_leq(q, hi)) {
            labels.push_back(i);
            chains_rec(q, hi, labels, out);
            labels.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<int>> saturated_chains(const Permutation& lo, const Permutation& hi) {
    if (!left_weak_leq(lo, hi)) throw std::invalid_argument("saturated_chains: lo is not below hi");
    std::vector<std::vector<int>> out;
    std::vector<int> labels;
    chains_rec(lo, hi, labels, out);
    return out;
}

Word word_of_chain(const std::vector<int>& labels_bottom_to_top) {
    return Word(labels_bottom_to_top.rbegin(), labels_bottom_to_top.rend());
}

std::vector<int> chain_of_word(const Word& word) {
    return std::vector<int>(word.rbegin(), word.rend());
}

}  // namespace cthecke
