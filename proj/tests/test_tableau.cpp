#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

#include "cthecke/tableau.hpp"

using namespace cthecke;

namespace {

Tableau parse(const std::string& s) {
    auto t = Tableau::parse(s);
    REQUIRE(t.has_value());
    return *t;
}

// All bijective fillings of the shape that satisfy the SCT rules, found by
// filtering; the independent oracle for the chain-based enumeration.
std::vector<std::vector<Cell>> brute_force_fillings(const SkewShape& shape) {
    std::vector<Cell> cells = shape.cells();
    std::vector<int> perm(cells.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::vector<std::vector<Cell>> out;
    do {
        std::vector<Cell> cell_of_entry(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) cell_of_entry[perm[i]] = cells[i];
        if (is_valid_sct(shape, cell_of_entry)) out.push_back(cell_of_entry);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// every skew shape with the given outer size bound: straight shapes plus all
// nested inner shapes
std::vector<SkewShape> shapes_up_to(int max_outer) {
    std::vector<SkewShape> out;
    for (int n = 1; n <= max_outer; ++n)
        for (const Composition& outer : compositions_of(n)) {
            out.emplace_back(outer);
            for (int m = 1; m < n; ++m)
                for (const Composition& inner : compositions_of(m))
                    if (leq_c(inner, outer)) out.emplace_back(outer, inner);
        }
    return out;
}

}  // namespace

TEST_CASE("SCT validity") {
    // the worked skew tableau
    Tableau t = parse("2 | . 5 4 1 | . . 3");
    CHECK(t.shape().outer() == Composition({1, 4, 3}));
    CHECK(t.shape().inner() == Composition({1, 2}));
    CHECK(is_valid_sct(t.shape(), t.cells_by_entry()));

    // single row is forced
    CHECK(is_valid_sct(SkewShape(Composition({3})), {{1, 3}, {1, 2}, {1, 1}}));

    // swapping 4 and 3 breaks the rules
    std::vector<Cell> swapped = t.cells_by_entry();
    std::swap(swapped[2], swapped[3]);
    CHECK_FALSE(is_valid_sct(t.shape(), swapped));
    CHECK_THROWS_AS(Tableau(t.shape(), swapped), std::invalid_argument);
}

TEST_CASE("attack relation") {
    Tableau t = parse("2 | . 5 4 1 | . . 3");
    CHECK_FALSE(attacks_in(t, 2, 3));
    CHECK(attacks_in(t, 2, 5));
    CHECK(attacks_in(t, 3, 4));
    for (int i = 1; i <= 5; ++i) CHECK_FALSE(attacks_in(t, i, i));
    // set form: 2 attacks {3,5} means some member is attacked
    CHECK((attacks_in(t, 2, 3) || attacks_in(t, 2, 5)));
}

TEST_CASE("descent data") {
    DescentData d = descent_data(parse("2 | . 5 4 1 | . . 3"));
    CHECK(d.descents == std::set<int>{2, 3});
    CHECK(d.attacking_descents == std::set<int>{3});
    CHECK(d.nonattacking_descents == std::set<int>{2});
    CHECK(d.ascents == std::set<int>{1, 4});
    CHECK(d.neighborly_ascents == std::set<int>{4});

    CHECK(descent_data(parse("1 | 6 5 4 3 | 8 7 2")).descents == std::set<int>{1, 2, 6});

    CHECK(descent_data(parse("4 3 2 1")).descents.empty());
}

TEST_CASE("descent data partitions the index range") {
    for (const std::string s : {"2 | . 5 4 1 | . . 3", "1 | 6 5 4 3 | 8 7 2", "4 | 6 5 3 1 | 8 7 2"}) {
        Tableau t = parse(s);
        DescentData d = descent_data(t);
        std::set<int> all;
        for (int i = 1; i < t.size(); ++i) all.insert(i);
        std::set<int> ds_union = d.descents;
        ds_union.insert(d.ascents.begin(), d.ascents.end());
        CHECK(ds_union == all);
        std::set<int> ad_union = d.attacking_descents;
        ad_union.insert(d.nonattacking_descents.begin(), d.nonattacking_descents.end());
        CHECK(ad_union == d.descents);
        CHECK(std::includes(d.ascents.begin(), d.ascents.end(), d.neighborly_ascents.begin(),
                            d.neighborly_ascents.end()));
    }
}

TEST_CASE("enumeration of small shapes") {
    CHECK(enumerate_sct(SkewShape(Composition({4}))).size() == 1);

    auto skew = enumerate_sct(SkewShape(Composition({1, 3}), Composition({2})));
    REQUIRE(skew.size() == 2);
    std::set<std::string> strs{skew[0].to_string(), skew[1].to_string()};
    CHECK(strs == std::set<std::string>{"1 | . . 2", "2 | . . 1"});
}

TEST_CASE("enumeration agrees with brute force at size 8") {
    SkewShape shape{Composition({1, 4, 3})};
    auto enumerated = enumerate_sct(shape);
    auto filtered = brute_force_fillings(shape);
    CHECK(enumerated.size() == filtered.size());
    CHECK(enumerated.size() == 30);
}

TEST_CASE("enumeration agrees with brute force on all shapes up to size 5") {
    for (const SkewShape& shape : shapes_up_to(5)) {
        auto enumerated = enumerate_sct(shape);
        auto filtered = brute_force_fillings(shape);
        REQUIRE(enumerated.size() == filtered.size());
        std::set<std::vector<Cell>> got;
        for (const Tableau& t : enumerated) got.insert(t.cells_by_entry());
        for (const auto& f : filtered) CHECK(got.count(f) == 1);
    }
}

TEST_CASE("chains of tableaux") {
    Tableau t = parse("2 | . 5 4 1 | . . 3");
    std::vector<Composition> expected{Composition({1, 2}), Composition({2, 2}),    Composition({3, 2}),
                                      Composition({3, 3}), Composition({1, 3, 3}), Composition({1, 4, 3})};
    CHECK(chain_of(t) == expected);
    CHECK(tableau_of_chain(expected) == t);

    Tableau cell = parse("1");
    CHECK(chain_of(cell) == std::vector<Composition>{Composition(), Composition({1})});
}

TEST_CASE("chain encoding is a bijection onto saturated chains (size up to 5)") {
    // count chains from inner to outer independently, walking covers upward
    for (const SkewShape& shape : shapes_up_to(5)) {
        std::vector<std::vector<Composition>> chains;
        std::vector<Composition> cur{shape.inner()};
        auto rec = [&](auto&& self, const Composition& at) -> void {
            if (at == shape.outer()) {
                chains.push_back(cur);
                return;
            }
            if (at.size() >= shape.outer().size()) return;
            for (const Composition& up : covers_up(at)) {
                if (!leq_c(up, shape.outer())) continue;
                cur.push_back(up);
                self(self, up);
                cur.pop_back();
            }
        };
        rec(rec, shape.inner());

        auto tableaux = enumerate_sct(shape);
        REQUIRE(tableaux.size() == chains.size());
        std::set<std::vector<Composition>> image;
        for (const Tableau& t : tableaux) {
            auto ch = chain_of(t);
            CHECK(tableau_of_chain(ch) == t);  // mutually inverse
            image.insert(ch);
        }
        // injective with full image
        CHECK(image.size() == chains.size());
        for (const auto& ch : chains) CHECK(image.count(ch) == 1);
    }
}

TEST_CASE("restriction") {
    // the worked example: outer (1,3,2), inner (2,1)
    Tableau t = parse("1 | . . 3 | . 2");
    Tableau r = restrict_above(t, 2);
    CHECK(r.shape().outer() == Composition({3, 1}));
    CHECK(r.shape().inner() == Composition({2, 1}));
    CHECK(r.cell_of(1) == Cell{1, 3});
    CHECK(r.to_string() == ". . 1 | .");

    CHECK(restrict_above(t, 0) == t);
    Tableau empty = restrict_above(t, 3);
    CHECK(empty.size() == 0);
    CHECK(empty.shape().outer() == Composition({2, 1}));
    CHECK(empty.shape().inner() == Composition({2, 1}));

    CHECK_THROWS_AS(restrict_above(t, 4), std::out_of_range);
}

TEST_CASE("restriction is valid and tracks the chain (size up to 5)") {
    for (const SkewShape& shape : shapes_up_to(5))
        for (const Tableau& t : enumerate_sct(shape)) {
            const auto chain = chain_of(t);
            const int n = t.size();
            for (int m = 0; m <= n; ++m) {
                Tableau r = restrict_above(t, m);  // construction re-checks validity
                CHECK(r.size() == n - m);
                CHECK(r.shape().outer() == chain[n - m]);
            }
        }
}

TEST_CASE("largest entry of a straight tableau sits at the bottom of column one") {
    for (int n = 1; n <= 6; ++n)
        for (const Composition& alpha : compositions_of(n))
            for (const Tableau& t : enumerate_sct(SkewShape(alpha)))
                CHECK(t.cell_of(n) == Cell{alpha.length(), 1});
}

TEST_CASE("column words") {
    CHECK(column_word(parse("1 | 6 5 4 3 | 8 7 2")).to_string() == fixtures::kWorkedClassColumnWord);
    CHECK(column_word(parse("1")) == Permutation::identity(1));
    CHECK(column_word(parse("1 | 2 | 3")) == Permutation({1, 2, 3}));
}

TEST_CASE("tableau text form round trips") {
    for (const std::string s : {"2 | . 5 4 1 | . . 3", "1 | 6 5 4 3 | 8 7 2", "1 | . . 2"}) {
        Tableau t = parse(s);
        CHECK(t.to_string() == s);
        CHECK(Tableau::parse(t.to_string()) == t);
    }
    CHECK_FALSE(Tableau::parse("2 | 1 .").has_value());   // dots not a prefix
    CHECK_FALSE(Tableau::parse(". 1 | 2").has_value());   // inner not bottom-aligned
    CHECK_FALSE(Tableau::parse("1 2").has_value());       // row increases
}
