#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cthecke/composition.hpp"
#include "cthecke/permutation.hpp"
#include "cthecke/tableau.hpp"

namespace cthecke {

// pi_i T: T itself on an ascent, empty (the module's zero) on an attacking
// descent, and the entry swap s_i T on a non-attacking descent. Zero is a
// genuine result value of the module action, hence optional rather than an
// error.
std::optional<Tableau> apply_pi(int i, const Tableau& t);

// pi_{j_k} ... pi_{j_1} T for the word (j_k, ..., j_1); the last letter acts
// first and zero absorbs.
std::optional<Tableau> apply_word(const Word& w, const Tableau& t);

// pi_sigma T, computed along a reduced word of sigma.
std::optional<Tableau> apply_perm(const Permutation& sigma, const Tableau& t);

// Per-column rank vectors (entries of each column read top to bottom,
// replaced by their rank within the column). Two tableaux of one shape are
// equivalent iff their keys agree.
using EquivalenceKey = std::vector<std::vector<int>>;
EquivalenceKey equivalence_key(const Tableau& t);

// An equivalence class of SCT(shape) materialized with its full order
// structure: members in canonical order (column word, lexicographic), the
// labeled Hasse diagram of the partial order T1 <= T2 iff pi_sigma T1 = T2
// for some sigma, the unique source and sink tableaux, the rank function
// delta(T) = length(col_T col_source^-1), and the reachability relation.
//
// Construction verifies closure of the action on the member set and
// uniqueness of source and sink; violations throw std::logic_error since
// they indicate a bug rather than a data condition.
class ClassPoset {
public:
    struct Cover {
        int from;
        int label;  // the generator index realizing the cover
        int to;
    };

    ClassPoset(SkewShape shape, std::vector<Tableau> members);

    const SkewShape& shape() const { return shape_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Tableau>& members() const { return members_; }
    const Tableau& member(int idx) const { return members_[idx]; }
    int index_of(const Tableau& t) const;  // -1 if absent

    const Tableau& source() const { return members_[source_]; }
    const Tableau& sink() const { return members_[sink_]; }
    int source_index() const { return source_; }
    int sink_index() const { return sink_; }

    int rank(int idx) const { return ranks_[idx]; }
    bool leq(int a, int b) const { return reach_[a][b]; }
    const std::vector<Cover>& covers() const { return covers_; }

    // Hasse diagram in DOT form, nodes in canonical order, edges labeled
    // with the realizing generator.
    std::string to_dot(const std::string& graph_name = "class_poset") const;

private:
    SkewShape shape_;
    std::vector<Tableau> members_;
    std::vector<Cover> covers_;
    std::vector<int> ranks_;
    std::vector<std::vector<bool>> reach_;
    int source_ = -1;
    int sink_ = -1;
};

// Group SCT(shape) into its equivalence classes. Classes are ordered by the
// column word of their first member, members within a class by column word.
std::vector<ClassPoset> partition_classes(const SkewShape& shape);

// Certify that T -> col_T is a rank-preserving poset isomorphism from the
// class onto the weak Bruhat interval [col_source, col_sink] and that the
// class is a graded lattice. Returns false on any violation.
bool class_iso_check(const ClassPoset& e);

// Subword of w that acts identically on t, keeping exactly the letters that
// move the tableau. The subword (in the shared word convention) is a reduced
// word of col_{T2} col_{T1}^{-1}, which is returned alongside.
struct NormalizedWord {
    Word subword;
    Permutation perm;
};
NormalizedWord normalize_word(const Word& w, const Tableau& t);

// pi_{j-1} ... pi_i T for entries i < j when i sits strictly left of the
// entries i+1..j and attacks none of them. Each step is a non-attacking
// descent flip; the entry j ends up in the cell that held i.
Tableau multi_flip(const Tableau& t, int i, int j);

// Both characterizations of supp(col_{T2} col_{T1}^{-1}) for comparable
// members of one class: via reduced words, and via the indices where the
// restricted shapes differ. `consistent` records their agreement.
struct SupportCriterion {
    std::set<int> support;
    std::vector<char> shape_differs;  // index i-1 for i in [1, n-1]
    bool consistent = false;
};
SupportCriterion support_criterion(const Tableau& t1, const Tableau& t2);

// The annihilating operator construction: i is the greatest entry placed
// differently in t and in the source, j the least entry above i attacked by
// i in the source; the word is (j-1, ..., i+1, i). When it exists, the word
// kills the source, maps t back into the class and is a reduced word for the
// column-word quotient. j can fail to exist for skew shapes; that outcome is
// reported via j_found = false, never as success.
struct AnnihilatorWord {
    int i = 0;
    int j = 0;
    bool j_found = false;
    Word word;
};
AnnihilatorWord annihilator_word(const ClassPoset& e, const Tableau& t);

}  // namespace cthecke
