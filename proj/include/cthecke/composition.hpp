#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cthecke {

// Finite sequence of positive integers; doubles as its left-justified diagram
// (row i holds parts()[i-1] boxes, top row first, matrix coordinates).
class Composition {
public:
    Composition() = default;  // the empty composition
    explicit Composition(std::vector<int> parts);

    int size() const;                                   // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i - 1]; }     // 1-based

    bool is_partition() const;
    Composition partition_rearrangement() const;        // parts sorted decreasingly

    std::string to_string() const;                      // "(1,4,3)", "()" when empty
    static std::optional<Composition> parse(std::string_view s);

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
    friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// Covers of beta in the composition poset: prepend a new first part 1, or
// increment part k when no earlier part already has that value (the row is
// the topmost of its length).
std::vector<Composition> covers_up(const Composition& beta);

// Down-covers of alpha together with the removed box, as (row, col) within
// alpha's own diagram: drop the first row when it has one box, or shorten
// row k by one when no earlier row has length alpha_k - 1.
struct RemovedCell {
    int row, col;     // 1-based within alpha
    bool whole_row;   // true when the first row was removed
};
std::vector<std::pair<RemovedCell, Composition>> covers_down(const Composition& alpha);

// lo <=_c hi : a saturated cover chain from lo to hi exists.
bool leq_c(const Composition& lo, const Composition& hi);

// Column heights |alpha|_j for j = 1 .. max part (number of boxes per column).
std::vector<int> column_heights(const Composition& alpha);

// Dominance preorder on compositions of equal size: a is dominated by b when
// every prefix sum of b's column heights is <= the matching prefix sum of
// a's. Not antisymmetric: both directions hold iff the parts rearrange
// equally.
bool dominance_leq(const Composition& a, const Composition& b);
bool dominance_lt(const Composition& a, const Composition& b);  // and a != b

// All 2^(n-1) compositions of n in a deterministic order.
std::vector<Composition> compositions_of(int n);

// Matrix-coordinate box, top row = 1.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

// Pair of nested compositions; the inner diagram sits bottom-aligned inside
// the outer one, so inner row i occupies outer row length(outer) -
// length(inner) + i. The shape's cells are the outer boxes not covered by the
// inner diagram.
class SkewShape {
public:
    explicit SkewShape(Composition outer);                  // straight shape
    SkewShape(Composition outer, Composition inner);        // requires inner <=_c outer

    const Composition& outer() const { return outer_; }
    const Composition& inner() const { return inner_; }
    bool straight() const { return inner_.length() == 0; }
    int size() const { return outer_.size() - inner_.size(); }
    int row_offset() const { return outer_.length() - inner_.length(); }

    std::vector<Cell> cells() const;          // skew cells, sorted (row, col)
    bool in_outer(const Cell& c) const;
    bool in_inner(const Cell& c) const;       // inner cell in outer coordinates
    bool contains(const Cell& c) const { return in_outer(c) && !in_inner(c); }

    std::string to_string() const;            // "(1,4,3)/(1,2)" or "(1,4,3)"
    static std::optional<SkewShape> parse(std::string_view s);

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer_ == b.outer_ && a.inner_ == b.inner_;
    }
    friend bool operator!=(const SkewShape& a, const SkewShape& b) { return !(a == b); }

private:
    Composition outer_;
    Composition inner_;
};

}  // namespace cthecke
