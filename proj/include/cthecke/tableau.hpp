#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cthecke/composition.hpp"
#include "cthecke/permutation.hpp"

namespace cthecke {

// Standard composition tableau: a bijective filling of a skew shape with
// 1..n such that rows decrease left to right, the first-column entries of
// the skew cells increase top to bottom, and the triple rule holds with
// inner cells read as infinity. The constructor rejects fillings violating
// any of these, so a Tableau value always is a valid SCT.
//
// Both directions of the filling are stored: cell_of(entry) is an array
// lookup and entry_at(cell) a grid lookup. Identity and ordering are by
// (shape, cell-of-entry array).
class Tableau {
public:
    Tableau(SkewShape shape, std::vector<Cell> cell_of_entry);

    int size() const { return static_cast<int>(cell_of_entry_.size()); }
    const SkewShape& shape() const { return shape_; }

    Cell cell_of(int entry) const { return cell_of_entry_[entry - 1]; }
    const std::vector<Cell>& cells_by_entry() const { return cell_of_entry_; }
    int row_of(int entry) const { return cell_of(entry).row; }
    int col_of(int entry) const { return cell_of(entry).col; }

    // Entry in a skew cell; 0 for inner cells or cells outside the shape.
    int entry_at(const Cell& c) const;

    // "2 | . 5 4 1 | . . 3" : rows top to bottom, inner cells as dots.
    std::string to_string() const;
    // Parse the row format above, inferring outer and inner shape.
    static std::optional<Tableau> parse(std::string_view s);

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shape_ == b.shape_ && a.cell_of_entry_ == b.cell_of_entry_;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
    friend bool operator<(const Tableau& a, const Tableau& b) {
        if (!(a.shape_ == b.shape_)) return a.shape_.to_string() < b.shape_.to_string();
        return a.cell_of_entry_ < b.cell_of_entry_;
    }

private:
    SkewShape shape_;
    std::vector<Cell> cell_of_entry_;      // entry k at index k-1
    std::vector<std::vector<int>> grid_;   // grid_[row-1][col-1], 0 = no entry
};

// Cell a attacks cell b: same column and different rows, or b one column to
// the right and strictly below.
bool attacks(const Cell& a, const Cell& b);
// Entry i attacks entry j within t.
bool attacks_in(const Tableau& t, int i, int j);

struct DescentData {
    std::set<int> descents;                // c(i) <= c(i+1)
    std::set<int> attacking_descents;      // descents with i attacking i+1
    std::set<int> nonattacking_descents;
    std::set<int> ascents;                 // complement of descents in [1,n-1]
    std::set<int> neighborly_ascents;      // ascents with i+1 the left neighbor of i
};

DescentData descent_data(const Tableau& t);

// Check the three SCT rules for a raw filling (entry k at cell_of_entry[k-1])
// of the given shape. Throws if the filling is not a bijection onto the skew
// cells.
bool is_valid_sct(const SkewShape& shape, const std::vector<Cell>& cell_of_entry);

// All SCT of the shape, built by recursive box removal along the composition
// poset (the removal at step k receives entry k). Output is sorted by the
// cell-of-entry array.
std::vector<Tableau> enumerate_sct(const SkewShape& shape);

// The saturated chain inner = alpha^n <c ... <c alpha^0 = outer encoded by t;
// returned bottom-up, chain[m] = osh(t restricted above n-m).
std::vector<Composition> chain_of(const Tableau& t);

// Inverse of chain_of: rebuild the tableau from a bottom-up saturated chain.
Tableau tableau_of_chain(const std::vector<Composition>& chain);

// Remove entries 1..m and lower the rest by m. The result's outer shape is
// the m-th composition of t's chain; the inner shape is unchanged.
Tableau restrict_above(const Tableau& t, int m);

// Entries of the filled cells read down each column, left to right, as a
// permutation in one-line notation. Inner cells are skipped, so for skew
// shapes this reads only the filled cells.
Permutation column_word(const Tableau& t);

}  // namespace cthecke
