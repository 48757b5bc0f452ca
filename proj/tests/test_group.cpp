#include <catch_amalgamated.hpp>

#include <set>

#include "gsq/builtin_groups.hpp"
#include "gsq/perm_squares.hpp"
#include "gsq/width.hpp"

using namespace gsq;

namespace {

std::set<Perm> element_set(const GroupTable& g, const std::vector<std::uint32_t>& ids) {
    std::set<Perm> out;
    for (std::uint32_t i : ids) out.insert(g.element(i));
    return out;
}

}  // namespace

TEST_CASE("enumeration of small groups") {
    GroupTable s3 = GroupTable::enumerate({Perm::parse("(1,2,3)"), Perm::parse("(1,2)", 3)});
    CHECK(s3.order() == 6);
    GroupTable a5 = GroupTable::enumerate(alternating_generators(5));
    CHECK(a5.order() == 60);
    CHECK(alternating_generators(5)[1] == Perm::parse("(3,4,5)", 5));
    GroupTable a4 = GroupTable::enumerate(alternating_generators(4));
    CHECK(a4.order() == 12);
    CHECK_THROWS_AS(GroupTable::enumerate(symmetric_generators(6), 100), std::runtime_error);
    CHECK_THROWS_AS(GroupTable::enumerate({Perm::identity(3), Perm::identity(4)}),
                    std::invalid_argument);
}

TEST_CASE("element order and lookup") {
    GroupTable s4 = GroupTable::enumerate(symmetric_generators(4));
    CHECK(s4.element(0) == Perm::identity(4));  // identity is discovered first
    for (std::uint32_t i = 0; i < s4.order(); ++i) CHECK(s4.index_of(s4.element(i)) == i);
    CHECK_FALSE(s4.contains(Perm::parse("(1,2,3,4,5)").inverse()) );
}

TEST_CASE("squares sets of small groups") {
    GroupTable a4 = GroupTable::enumerate(alternating_generators(4));
    auto sq = element_set(a4, squares_set(a4));
    CHECK(sq.size() == 9);
    CHECK(sq.count(Perm::identity(4)) == 1);
    CHECK(sq.count(Perm::parse("(1,3)(2,4)")) == 0);  // double transpositions excluded
    for (const Perm& p : sq)
        if (!p.is_identity()) CHECK(CycleType(p) == CycleType(4, {{3, 1}, {1, 1}}));

    GroupTable s3 = GroupTable::enumerate(symmetric_generators(3));
    CHECK(element_set(s3, squares_set(s3)) ==
          std::set<Perm>{Perm::identity(3), Perm::parse("(1,2,3)"), Perm::parse("(1,3,2)")});

    GroupTable c2 = GroupTable::enumerate({Perm::parse("(1,2)")});
    CHECK(element_set(c2, squares_set(c2)) == std::set<Perm>{Perm::identity(2)});
}

TEST_CASE("width of alternating groups") {
    for (int n = 4; n <= 7; ++n) {
        GroupTable g = GroupTable::enumerate(alternating_generators(n));
        WidthReport r = width_by_squares(g);
        CHECK(r.generates);
        CHECK(r.width == 2);
        CHECK(r.diameter == 2);
        CHECK(r.squares_subgroup == g.order());
    }
}

TEST_CASE("squares of S_n generate only A_n") {
    GroupTable s5 = GroupTable::enumerate(symmetric_generators(5));
    WidthReport r = width_by_squares(s5);
    CHECK_FALSE(r.generates);
    CHECK(r.squares_subgroup == 60);
    CHECK_FALSE(r.diameter.has_value());
}

TEST_CASE("square set is closed under conjugation") {
    for (int n = 4; n <= 6; ++n) {
        GroupTable g = GroupTable::enumerate(alternating_generators(n));
        std::vector<std::uint32_t> sq = squares_set(g);
        std::vector<bool> is_sq(g.order(), false);
        for (std::uint32_t s : sq) is_sq[s] = true;
        for (std::uint32_t i = 0; i < g.order(); ++i) {
            Perm h = g.element(i);
            Perm hinv = h.inverse();
            for (std::uint32_t s : sq)
                CHECK(is_sq[g.index_of(compose(hinv, compose(g.element(s), h)))]);
        }
    }
}

TEST_CASE("iterated squaring chain decreases to a fixpoint") {
    for (const char* name : {"A5", "A6", "S5", "M8"}) {
        BuiltinGroup bg = builtin_group(name, GSQ_DATA_DIR);
        GroupTable g = GroupTable::enumerate(bg.generators);
        auto chain = iterated_squares_chain(g);
        CHECK(chain.front() == g.order());
        CHECK(chain.size() <= g.order());
        for (std::size_t i = 1; i < chain.size(); ++i) CHECK(chain[i] < chain[i - 1]);
    }
}

TEST_CASE("builtin group catalogue") {
    CHECK(builtin_group("A5").order == 60);
    CHECK(builtin_group("a5").order == 60);
    CHECK(builtin_group("S7").order == 5040);
    CHECK(builtin_group("M11", GSQ_DATA_DIR).degree == 11);
    CHECK_THROWS_AS(builtin_group("M13"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_group("B2"), std::invalid_argument);
    CHECK(builtin_group_names().size() == 23);
    CHECK(builtin_group_names(true).back() == "M23");
}

TEST_CASE("Mathieu groups from shipped data") {
    for (const char* name : {"M8", "M9", "M10", "M11"}) {
        BuiltinGroup bg = builtin_group(name, GSQ_DATA_DIR);
        GroupTable g = GroupTable::enumerate(bg.generators);
        CHECK(g.order() == bg.order);
    }
    BuiltinGroup m9 = builtin_group("M9", GSQ_DATA_DIR);
    GroupTable g9 = GroupTable::enumerate(m9.generators);
    WidthReport r9 = width_by_squares(g9);
    CHECK(g9.order() == 72);
    CHECK_FALSE(r9.generates);
    CHECK(r9.squares_subgroup == 18);
    CHECK_FALSE(r9.diameter.has_value());

    BuiltinGroup m11 = builtin_group("M11", GSQ_DATA_DIR);
    WidthReport r11 = width_by_squares(GroupTable::enumerate(m11.generators));
    CHECK(r11.generates);
    CHECK(r11.width == 2);
}

TEST_CASE("generator file parsing") {
    CHECK_THROWS_AS(load_generator_file("/nonexistent/file.gens"), std::runtime_error);
    BuiltinGroup m8 = load_generator_file(std::string(GSQ_DATA_DIR) + "/m8.gens");
    CHECK(m8.name == "M8");
    CHECK(m8.order == 8);
    CHECK(m8.degree == 8);
    CHECK(m8.generators.size() == 2);
}
