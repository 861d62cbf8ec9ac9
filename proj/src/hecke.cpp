#include "cthecke/hecke.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cthecke {

std::optional<Tableau> apply_pi(int i, const Tableau& t) {
    if (i < 1 || i >= t.size()) throw std::out_of_range("apply_pi: generator index out of range");
    const Cell a = t.cell_of(i), b = t.cell_of(i + 1);
    if (a.col > b.col) return t;                 // ascent
    if (attacks(a, b)) return std::nullopt;      // attacking descent
    std::vector<Cell> cells = t.cells_by_entry();
    std::swap(cells[i - 1], cells[i]);
    return Tableau(t.shape(), std::move(cells));  // construction re-checks the SCT rules
}

std::optional<Tableau> apply_word(const Word& w, const Tableau& t) {
    std::optional<Tableau> cur = t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        cur = apply_pi(*it, *cur);
        if (!cur) return std::nullopt;
    }
    return cur;
}

namespace {

Word a_reduced_word(const Permutation& sigma) {
    Word w;
    Permutation cur = sigma;
    while (true) {
        const auto& line = cur.one_line();
        std::vector<int> pos(cur.degree() + 1);
        for (int k = 0; k < cur.degree(); ++k) pos[line[k]] = k;
        int d = 0;
        for (int i = 1; i < cur.degree(); ++i)
            if (pos[i] > pos[i + 1]) { d = i; break; }
        if (d == 0) break;
        w.push_back(d);
        cur = simple_times(d, cur);
    }
    return w;
}

}  // namespace

std::optional<Tableau> apply_perm(const Permutation& sigma, const Tableau& t) {
    return apply_word(a_reduced_word(sigma), t);
}

EquivalenceKey equivalence_key(const Tableau& t) {
    // cells() is (row, col)-sorted, so each column collects top to bottom
    std::map<int, std::vector<int>> columns;
    for (const Cell& c : t.shape().cells()) columns[c.col].push_back(t.entry_at(c));

    EquivalenceKey key;
    for (auto& [col, entries] : columns) {
        std::vector<int> sorted = entries;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ranks(entries.size());
        for (size_t k = 0; k < entries.size(); ++k)
            ranks[k] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), entries[k]) - sorted.begin());
        key.push_back(std::move(ranks));
    }
    return key;
}

ClassPoset::ClassPoset(SkewShape shape, std::vector<Tableau> members)
    : shape_(std::move(shape)), members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("ClassPoset: empty member set");
    std::sort(members_.begin(), members_.end(), [](const Tableau& a, const Tableau& b) {
        return column_word(a).one_line() < column_word(b).one_line();
    });

    const EquivalenceKey key = equivalence_key(members_.front());
    for (const Tableau& t : members_)
        if (!(t.shape() == shape_) || equivalence_key(t) != key)
            throw std::invalid_argument("ClassPoset: members are not one equivalence class");

    const int d = size();
    const int n = members_.front().size();

    // Closure of the action and the labeled Hasse diagram in one sweep.
    for (int s = 0; s < d; ++s) {
        for (int i = 1; i < n; ++i) {
            auto r = apply_pi(i, members_[s]);
            if (!r) continue;
            int to = index_of(*r);
            if (to < 0) throw std::logic_error("ClassPoset: action leaves the member set");
            if (to != s) covers_.push_back({s, i, to});
        }
    }

    for (int s = 0; s < d; ++s) {
        DescentData dd = descent_data(members_[s]);
        if (dd.ascents == dd.neighborly_ascents) {
            if (source_ >= 0) throw std::logic_error("ClassPoset: source tableau is not unique");
            source_ = s;
        }
        if (dd.descents == dd.attacking_descents) {
            if (sink_ >= 0) throw std::logic_error("ClassPoset: sink tableau is not unique");
            sink_ = s;
        }
    }
    if (source_ < 0 || sink_ < 0) throw std::logic_error("ClassPoset: missing source or sink tableau");

    const Permutation src_inv = column_word(members_[source_]).inverse();
    ranks_.resize(d);
    for (int s = 0; s < d; ++s) ranks_[s] = length(column_word(members_[s]) * src_inv);

    reach_.assign(d, std::vector<bool>(d, false));
    for (int s = 0; s < d; ++s) reach_[s][s] = true;
    // covers only go up in rank, so one sweep from the top rank down closes
    // the relation
    std::vector<int> order(d);
    for (int s = 0; s < d; ++s) order[s] = s;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ranks_[a] > ranks_[b]; });
    for (int s : order)
        for (const Cover& c : covers_)
            if (c.from == s)
                for (int t = 0; t < d; ++t)
                    if (reach_[c.to][t]) reach_[s][t] = true;
}

int ClassPoset::index_of(const Tableau& t) const {
    for (int s = 0; s < size(); ++s)
        if (members_[s] == t) return s;
    return -1;
}

std::string ClassPoset::to_dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=BT;\n  node [shape=box];\n";
    for (int s = 0; s < size(); ++s)
        os << "  t" << s << " [label=\"" << members_[s].to_string() << "\"];\n";
    std::vector<Cover> es = covers_;
    std::sort(es.begin(), es.end(), [](const Cover& a, const Cover& b) {
        return a.from != b.from ? a.from < b.from : a.label < b.label;
    });
    for (const Cover& c : es)
        os << "  t" << c.from << " -> t" << c.to << " [label=\"pi_" << c.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::vector<ClassPoset> partition_classes(const SkewShape& shape) {
    std::map<EquivalenceKey, std::vector<Tableau>> groups;
    for (const Tableau& t : enumerate_sct(shape)) groups[equivalence_key(t)].push_back(t);
    std::vector<ClassPoset> classes;
    classes.reserve(groups.size());
    for (auto& [key, members] : groups) classes.emplace_back(shape, std::move(members));
    std::sort(classes.begin(), classes.end(), [](const ClassPoset& a, const ClassPoset& b) {
        return column_word(a.member(0)).one_line() < column_word(b.member(0)).one_line();
    });
    return classes;
}

namespace {

// Unique meet and join for every pair, over an explicit reachability matrix.
bool reachability_is_lattice(const std::vector<std::vector<bool>>& reach) {
    const int d = static_cast<int>(reach.size());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            int meets = 0, joins = 0;
            for (int c = 0; c < d; ++c) {
                if (reach[c][a] && reach[c][b]) {
                    bool maximal = true;
                    for (int e = 0; e < d; ++e)
                        if (reach[e][a] && reach[e][b] && !reach[e][c]) { maximal = false; break; }
                    if (maximal) ++meets;
                }
                if (reach[a][c] && reach[b][c]) {
                    bool minimal = true;
                    for (int e = 0; e < d; ++e)
                        if (reach[a][e] && reach[b][e] && !reach[c][e]) { minimal = false; break; }
                    if (minimal) ++joins;
                }
            }
            if (meets != 1 || joins != 1) return false;
        }
    return true;
}

}  // namespace

bool class_iso_check(const ClassPoset& e) {
    const int d = e.size();
    WeakInterval iv = weak_interval(column_word(e.source()), column_word(e.sink()));
    if (iv.size() != d) return false;

    std::vector<int> iv_index(d);
    for (int s = 0; s < d; ++s) {
        iv_index[s] = iv.index_of(column_word(e.member(s)));
        if (iv_index[s] < 0) return false;
    }
    // injective (column words of distinct members differ)
    std::vector<int> sorted = iv_index;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    const Permutation src_inv = column_word(e.source()).inverse();
    std::vector<std::vector<bool>> reach(d, std::vector<bool>(d));
    for (int a = 0; a < d; ++a) {
        if (e.rank(a) != iv.rank(iv_index[a])) return false;
        if (e.rank(a) != length(column_word(e.member(a)) * src_inv)) return false;
        for (int b = 0; b < d; ++b) {
            if (e.leq(a, b) != iv.leq(iv_index[a], iv_index[b])) return false;
            reach[a][b] = e.leq(a, b);
        }
    }
    for (const ClassPoset::Cover& c : e.covers())
        if (e.rank(c.to) != e.rank(c.from) + 1) return false;

    return reachability_is_lattice(reach) && iv.is_graded() && iv.is_lattice();
}

NormalizedWord normalize_word(const Word& w, const Tableau& t) {
    std::optional<Tableau> cur = t;
    std::vector<char> keep(w.size(), 0);
    for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
        auto next = apply_pi(w[k], *cur);
        if (!next) throw std::invalid_argument("normalize_word: the word annihilates the tableau");
        if (!(*next == *cur)) keep[k] = 1;
        cur = std::move(next);
    }
    Word sub;
    for (size_t k = 0; k < w.size(); ++k)
        if (keep[k]) sub.push_back(w[k]);

    Permutation perm = column_word(*cur) * column_word(t).inverse();
    // every kept letter raises the column word by one cover, so the subword
    // must come out reduced; anything else is a bug
    Permutation prod = Permutation::identity(t.size());
    for (auto it = sub.rbegin(); it != sub.rend(); ++it) prod = simple_times(*it, prod);
    if (!(prod == perm) || static_cast<int>(sub.size()) != length(perm))
        throw std::logic_error("normalize_word: subword is not a reduced word of the column quotient");
    return {std::move(sub), std::move(perm)};
}

Tableau multi_flip(const Tableau& t, int i, int j) {
    if (i < 1 || j <= i || j > t.size()) throw std::invalid_argument("multi_flip: need 1 <= i < j <= n");
    const Cell ci = t.cell_of(i);
    for (int k = i + 1; k <= j; ++k) {
        const Cell ck = t.cell_of(k);
        if (!(ci.col < ck.col) || attacks(ci, ck))
            throw std::invalid_argument("multi_flip: entry i must sit strictly left of and not attack i+1..j");
    }
    Tableau cur = t;
    for (int k = i; k < j; ++k) {
        auto next = apply_pi(k, cur);
        if (!next || *next == cur) throw std::logic_error("multi_flip: step is not a non-attacking descent");
        cur = std::move(*next);
    }
    return cur;
}

SupportCriterion support_criterion(const Tableau& t1, const Tableau& t2) {
    if (!(t1.shape() == t2.shape()) || equivalence_key(t1) != equivalence_key(t2))
        throw std::invalid_argument("support_criterion: tableaux are not in one equivalence class");
    const Permutation c1 = column_word(t1), c2 = column_word(t2);
    if (!left_weak_leq(c1, c2))
        throw std::invalid_argument("support_criterion: first tableau is not below the second");

    SupportCriterion out;
    out.support = support(c2 * c1.inverse());
    const int n = t1.size();
    out.shape_differs.resize(n > 0 ? n - 1 : 0, 0);
    bool agree = true;
    for (int i = 1; i < n; ++i) {
        bool differs = restrict_above(t2, i).shape().outer() != restrict_above(t1, i).shape().outer();
        out.shape_differs[i - 1] = differs ? 1 : 0;
        if (differs != (out.support.count(i) > 0)) agree = false;
    }
    out.consistent = agree;
    return out;
}

AnnihilatorWord annihilator_word(const ClassPoset& e, const Tableau& t) {
    const int idx = e.index_of(t);
    if (idx < 0) throw std::invalid_argument("annihilator_word: tableau is not a member of the class");
    if (idx == e.source_index()) throw std::invalid_argument("annihilator_word: tableau is the source");
    const Tableau& t0 = e.source();
    const DescentData dt = descent_data(t), d0 = descent_data(t0);
    if (!std::includes(d0.descents.begin(), d0.descents.end(), dt.descents.begin(), dt.descents.end()))
        throw std::invalid_argument("annihilator_word: descent set is not contained in the source's");

    const int n = t.size();
    AnnihilatorWord out;
    for (int k = n; k >= 1; --k)
        if (t.cell_of(k) != t0.cell_of(k)) { out.i = k; break; }

    for (int k = out.i + 1; k <= n; ++k)
        if (attacks(t0.cell_of(out.i), t0.cell_of(k))) { out.j = k; out.j_found = true; break; }
    if (!out.j_found) return out;

    for (int k = out.j - 1; k >= out.i; --k) out.word.push_back(k);

    // re-verify the construction's guarantees; a failure here is a bug
    if (apply_word(out.word, t0)) throw std::logic_error("annihilator_word: word does not annihilate the source");
    auto image = apply_word(out.word, t);
    if (!image || e.index_of(*image) < 0)
        throw std::logic_error("annihilator_word: word does not map the tableau into the class");
    Permutation sigma = Permutation::identity(n);
    for (auto it = out.word.rbegin(); it != out.word.rend(); ++it) sigma = simple_times(*it, sigma);
    if (!(sigma == column_word(*image) * column_word(t).inverse()))
        throw std::logic_error("annihilator_word: word is not the column quotient");
    return out;
}

}  // namespace cthecke
