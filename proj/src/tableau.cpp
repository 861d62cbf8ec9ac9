#include "cthecke/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cthecke {

namespace {

// Shared by Tableau's constructor and is_valid_sct: bijectivity check plus
// the three SCT rules. Inner cells count as infinity in the triple rule.
bool check_rules(const SkewShape& shape, const std::vector<Cell>& cell_of_entry, bool throw_on_bad_filling) {
    const int n = shape.size();
    if (static_cast<int>(cell_of_entry.size()) != n) {
        if (throw_on_bad_filling) throw std::invalid_argument("tableau filling: wrong number of entries");
        return false;
    }
    std::map<Cell, int> entry_of;
    for (int k = 1; k <= n; ++k) {
        const Cell& c = cell_of_entry[k - 1];
        if (!shape.contains(c) || !entry_of.emplace(c, k).second) {
            if (throw_on_bad_filling) throw std::invalid_argument("tableau filling: not a bijection onto the skew cells");
            return false;
        }
    }

    const Composition& outer = shape.outer();
    const long long INF = 1LL << 40;
    auto value = [&](const Cell& c) -> long long {
        if (shape.in_inner(c)) return INF;
        return entry_of.at(c);
    };

    // rows strictly decrease left to right over skew cells
    for (const auto& [c, e] : entry_of) {
        Cell right{c.row, c.col + 1};
        if (shape.contains(right) && e <= entry_of.at(right)) return false;
    }
    // first column of the skew cells increases top to bottom
    {
        int prev = 0;
        for (int i = 1; i <= outer.length(); ++i) {
            Cell c{i, 1};
            if (!shape.contains(c)) continue;
            int e = entry_of.at(c);
            if (e <= prev) return false;
            prev = e;
        }
    }
    // triple rule
    for (const auto& [c, e] : entry_of) {
        const int j = c.row, k = c.col;
        if (k < 2) continue;
        for (int i = 1; i < j; ++i) {
            Cell left{i, k - 1};
            if (!shape.in_outer(left)) continue;
            if (e < value(left)) {
                Cell above{i, k};
                if (!shape.in_outer(above) || e >= value(above)) return false;
            }
        }
    }
    return true;
}

}  // namespace

Tableau::Tableau(SkewShape shape, std::vector<Cell> cell_of_entry)
    : shape_(std::move(shape)), cell_of_entry_(std::move(cell_of_entry)) {
    if (!check_rules(shape_, cell_of_entry_, /*throw_on_bad_filling=*/true))
        throw std::invalid_argument("Tableau: filling violates the SCT rules");
    grid_.assign(shape_.outer().length(), {});
    for (int i = 1; i <= shape_.outer().length(); ++i) grid_[i - 1].assign(shape_.outer().part(i), 0);
    for (int k = 1; k <= size(); ++k) {
        const Cell& c = cell_of_entry_[k - 1];
        grid_[c.row - 1][c.col - 1] = k;
    }
}

int Tableau::entry_at(const Cell& c) const {
    if (c.row < 1 || c.row > static_cast<int>(grid_.size())) return 0;
    const auto& row = grid_[c.row - 1];
    if (c.col < 1 || c.col > static_cast<int>(row.size())) return 0;
    return row[c.col - 1];
}

std::string Tableau::to_string() const {
    std::string out;
    for (int i = 1; i <= shape_.outer().length(); ++i) {
        if (i > 1) out += " | ";
        for (int j = 1; j <= shape_.outer().part(i); ++j) {
            if (j > 1) out += " ";
            int e = entry_at({i, j});
            out += e == 0 ? "." : std::to_string(e);
        }
    }
    return out;
}

std::optional<Tableau> Tableau::parse(std::string_view s) {
    std::vector<std::vector<std::string>> rows(1);
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        if (tok == "|")
            rows.emplace_back();
        else
            rows.back().push_back(tok);
    }
    std::vector<int> outer, inner_rows;
    std::vector<std::pair<int, Cell>> entries;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) return std::nullopt;
        outer.push_back(static_cast<int>(rows[i].size()));
        int dots = 0;
        for (size_t j = 0; j < rows[i].size(); ++j) {
            const std::string& t = rows[i][j];
            if (t == ".") {
                if (static_cast<int>(j) != dots) return std::nullopt;  // dots must be a prefix
                ++dots;
            } else {
                if (t.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
                entries.push_back({std::stoi(t), {static_cast<int>(i) + 1, static_cast<int>(j) + 1}});
            }
        }
        inner_rows.push_back(dots);
    }
    // inner rows must be the bottom-aligned block
    std::vector<int> inner;
    for (size_t i = 0; i < inner_rows.size(); ++i) {
        if (inner_rows[i] > 0)
            inner.push_back(inner_rows[i]);
        else if (!inner.empty())
            return std::nullopt;
    }
    std::vector<Cell> cell_of_entry(entries.size());
    for (auto& [e, c] : entries) {
        if (e < 1 || e > static_cast<int>(entries.size())) return std::nullopt;
        cell_of_entry[e - 1] = c;
    }
    try {
        SkewShape shape = inner.empty() ? SkewShape(Composition(outer))
                                        : SkewShape(Composition(outer), Composition(inner));
        return Tableau(std::move(shape), std::move(cell_of_entry));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

bool attacks(const Cell& a, const Cell& b) {
    return (a.col == b.col && a.row != b.row) || (b.col == a.col + 1 && a.row < b.row);
}

bool attacks_in(const Tableau& t, int i, int j) { return attacks(t.cell_of(i), t.cell_of(j)); }

DescentData descent_data(const Tableau& t) {
    DescentData d;
    for (int i = 1; i < t.size(); ++i) {
        const Cell a = t.cell_of(i), b = t.cell_of(i + 1);
        if (a.col <= b.col) {
            d.descents.insert(i);
            if (attacks(a, b))
                d.attacking_descents.insert(i);
            else
                d.nonattacking_descents.insert(i);
        } else {
            d.ascents.insert(i);
            if (b.row == a.row && b.col == a.col - 1) d.neighborly_ascents.insert(i);
        }
    }
    return d;
}

bool is_valid_sct(const SkewShape& shape, const std::vector<Cell>& cell_of_entry) {
    return check_rules(shape, cell_of_entry, /*throw_on_bad_filling=*/false);
}

namespace {

// Enumeration state: walk down from the outer shape removing one box per
// step; the box removed at step k receives entry k. Survivors are exactly
// the saturated chains from inner to outer, i.e. the SCT of the shape.
struct Enumerator {
    const SkewShape& shape;
    int n;
    std::vector<Cell> cell_of_entry;
    std::vector<Tableau> out;
    std::map<std::pair<std::vector<int>, std::vector<int>>, bool> leq_memo;

    bool reachable(const Composition& gamma) {
        auto key = std::make_pair(shape.inner().parts(), gamma.parts());
        auto it = leq_memo.find(key);
        if (it != leq_memo.end()) return it->second;
        bool v = leq_c(shape.inner(), gamma);
        leq_memo[key] = v;
        return v;
    }

    void rec(const Composition& gamma, int k) {
        if (k > n) {
            if (gamma == shape.inner()) out.emplace_back(shape, cell_of_entry);
            return;
        }
        const int frame_offset = shape.outer().length() - gamma.length();
        for (auto& [removed, delta] : covers_down(gamma)) {
            if (!reachable(delta)) continue;
            cell_of_entry[k - 1] = {frame_offset + removed.row, removed.col};
            rec(delta, k + 1);
        }
    }
};

}  // namespace

std::vector<Tableau> enumerate_sct(const SkewShape& shape) {
    Enumerator e{shape, shape.size(), std::vector<Cell>(shape.size()), {}, {}};
    e.rec(shape.outer(), 1);
    std::sort(e.out.begin(), e.out.end(),
              [](const Tableau& a, const Tableau& b) { return a.cells_by_entry() < b.cells_by_entry(); });
    return e.out;
}

std::vector<Composition> chain_of(const Tableau& t) {
    const int n = t.size();
    std::vector<Composition> chain;
    chain.reserve(n + 1);
    for (int m = n; m >= 0; --m) chain.push_back(restrict_above(t, m).shape().outer());
    return chain;
}

Tableau tableau_of_chain(const std::vector<Composition>& chain) {
    if (chain.empty()) throw std::invalid_argument("tableau_of_chain: empty chain");
    const Composition& inner = chain.front();
    const Composition& outer = chain.back();
    const int n = static_cast<int>(chain.size()) - 1;
    const int frame_rows = outer.length();

    auto frame_cells = [&](const Composition& c) {
        std::vector<Cell> cells;
        const int off = frame_rows - c.length();
        for (int i = 1; i <= c.length(); ++i)
            for (int j = 1; j <= c.part(i); ++j) cells.push_back({off + i, j});
        std::sort(cells.begin(), cells.end());
        return cells;
    };

    std::vector<Cell> cell_of_entry(n);
    std::vector<Cell> prev = frame_cells(chain[0]);
    for (int step = 1; step <= n; ++step) {
        const auto ups = covers_up(chain[step - 1]);
        if (std::find(ups.begin(), ups.end(), chain[step]) == ups.end())
            throw std::invalid_argument("tableau_of_chain: step is not a cover in the composition poset");
        std::vector<Cell> cur = frame_cells(chain[step]);
        std::vector<Cell> added;
        std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(), std::back_inserter(added));
        if (added.size() != 1)
            throw std::invalid_argument("tableau_of_chain: step is not a cover in the composition poset");
        // Step `step` up from the inner shape adds the cell holding n-step+1.
        cell_of_entry[n - step] = added.front();
        prev = std::move(cur);
    }
    SkewShape shape = inner.length() == 0 ? SkewShape(outer) : SkewShape(outer, inner);
    return Tableau(std::move(shape), std::move(cell_of_entry));
}

Tableau restrict_above(const Tableau& t, int m) {
    const int n = t.size();
    if (m < 0 || m > n) throw std::out_of_range("restrict_above: m out of range");
    const SkewShape& sh = t.shape();

    // Occupied frame rows: inner rows plus rows holding an entry > m.
    const int frame_rows = sh.outer().length();
    std::vector<int> row_len(frame_rows + 1, 0);
    for (int i = 1; i <= sh.inner().length(); ++i)
        row_len[sh.row_offset() + i] = sh.inner().part(i);
    for (int k = m + 1; k <= n; ++k) {
        Cell c = t.cell_of(k);
        row_len[c.row] = std::max(row_len[c.row], c.col);
    }

    std::vector<int> outer_parts;
    std::vector<int> row_map(frame_rows + 1, 0);
    for (int i = 1; i <= frame_rows; ++i) {
        if (row_len[i] == 0) continue;
        outer_parts.push_back(row_len[i]);
        row_map[i] = static_cast<int>(outer_parts.size());
    }

    std::vector<Cell> cell_of_entry(n - m);
    for (int k = m + 1; k <= n; ++k) {
        Cell c = t.cell_of(k);
        cell_of_entry[k - m - 1] = {row_map[c.row], c.col};
    }
    Composition outer{outer_parts};
    SkewShape shape = sh.inner().length() == 0 ? SkewShape(std::move(outer))
                                               : SkewShape(std::move(outer), sh.inner());
    return Tableau(std::move(shape), std::move(cell_of_entry));
}

Permutation column_word(const Tableau& t) {
    std::vector<Cell> cells = t.shape().cells();
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
    std::vector<int> word;
    word.reserve(cells.size());
    for (const Cell& c : cells) word.push_back(t.entry_at(c));
    return Permutation(std::move(word));
}

}  // namespace cthecke
