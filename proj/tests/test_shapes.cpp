#include <doctest.h>

#include <random>

#include "syt/periodic.hpp"
#include "syt/shape.hpp"

using namespace syt;

namespace {

Shape sh(std::initializer_list<Cell> cells) { return Shape(std::vector<Cell>(cells)); }

Shape row_shape(int len) {
    std::vector<Cell> cells;
    for (int c = 1; c <= len; ++c) cells.push_back({1, c});
    return Shape(std::move(cells));
}

const Shape kExample4 = sh({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}});
const Shape kFivePeriod = sh({{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}});

} // namespace

TEST_CASE("from_skew reproduces the two-row trimmed shape") {
    CHECK(from_skew({4, 4}, {1}) == kExample4);
    CHECK(from_skew({3}, {}) == row_shape(3));
    CHECK(from_skew({3, 3}, {2}) == sh({{1, 1}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(from_skew({3, 3}, {1}) == kFivePeriod);
}

TEST_CASE("from_skew rejects malformed partitions") {
    CHECK_THROWS_WITH_AS(from_skew({2, 3}, {}), doctest::Contains("lambda"), error);
    CHECK_THROWS_WITH_AS(from_skew({3, 3}, {1, 2}), doctest::Contains("mu"), error);
    CHECK_THROWS_AS(from_skew({3, 3}, {3}), error);         // EmptyRow
    CHECK_THROWS_AS(from_skew({2, 2}, {1, 1}), error);      // trims (1,1) away
    try {
        from_skew({3, 3}, {3});
        FAIL("expected EmptyRow");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_row);
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(kExample4));
    CHECK(is_connected(sh({{1, 1}})));
    CHECK_FALSE(is_connected(sh({{1, 1}, {3, 3}})));
    CHECK_THROWS_AS(is_connected(Shape{}), error);
}

TEST_CASE("validate_periodic accepts the worked shapes and anchors them") {
    auto p = validate_periodic(kExample4);
    CHECK(p.a == Cell{1, 1});
    CHECK(p.b == Cell{2, 2});

    auto one_row = validate_periodic(row_shape(3));
    CHECK(one_row.a == Cell{1, 1});
    CHECK(one_row.b == Cell{1, 1});

    auto five = validate_periodic(kFivePeriod);
    CHECK(five.b == Cell{2, 2});
}

TEST_CASE("validate_periodic names the failing condition") {
    try {
        validate_periodic(sh({{1, 2}, {2, 2}}));
        FAIL("expected MissingOrigin");
    } catch (const error& e) {
        CHECK(e.code() == errc::missing_origin);
    }
    try {
        validate_periodic(sh({{1, 1}, {1, 3}}));
        FAIL("expected RowNotContiguous");
    } catch (const error& e) {
        CHECK(e.code() == errc::row_not_contiguous);
    }
    try {
        // rows contiguous and staircase-ordered but vertically detached
        validate_periodic(sh({{1, 1}, {1, 2}, {2, 4}, {2, 5}}));
        FAIL("expected Disconnected");
    } catch (const error& e) {
        CHECK(e.code() == errc::disconnected);
    }
    try {
        // column 3 is occupied only by cells lacking a horizontal neighbor pair
        validate_periodic(sh({{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}}));
        FAIL("expected InteriorColumnViolation");
    } catch (const error& e) {
        CHECK(e.code() == errc::interior_column_violation);
    }
}

TEST_CASE("the 4-cell trimmed shape validates but refuses every tiling with w=0") {
    // Each cell of its only interior column has both horizontal neighbors, so
    // the shape itself passes; the defect appears in the 2-copy union.
    auto p = validate_periodic(sh({{1, 1}, {1, 2}, {1, 3}, {2, 3}}));
    auto compat = is_compatible(p, 0);
    CHECK_FALSE(compat.compatible);
    CHECK(compat.reason.find("2-copy") != std::string::npos);
}

TEST_CASE("shift vector") {
    CHECK(shift_vector(validate_periodic(kExample4), 0) == Cell{2, 1});
    CHECK(shift_vector(validate_periodic(row_shape(6)), 2) == Cell{1, 2});
    CHECK(shift_vector(validate_periodic(sh({{1, 1}})), 0) == Cell{1, 0});
}

TEST_CASE("generate_shifted matches the worked 14-cell union") {
    auto p = validate_periodic(kExample4);
    Shape expect = sh({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4},
                       {3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 3}, {4, 4}, {4, 5}});
    CHECK(generate_shifted(p, 0, 2) == expect);
    CHECK(generate_shifted(p, 0, 1) == kExample4);
    CHECK(generate_shifted(validate_periodic(row_shape(6)), 2, 3).size() == 18);
}

TEST_CASE("generate_shifted size and nesting invariants") {
    std::vector<std::pair<Shape, int>> corpus = {
        {kExample4, 0}, {kExample4, 1}, {kFivePeriod, 0}, {row_shape(3), 1}, {row_shape(6), 2}};
    for (const auto& [shape, w] : corpus) {
        auto p = validate_periodic(shape);
        for (int m = 1; m <= 4; ++m) {
            Shape cur = generate_shifted(p, w, m);
            CHECK(cur.size() == shape.size() * static_cast<size_t>(m));
            CHECK(cur.subset_of(generate_shifted(p, w, m + 1)));
        }
    }
}

TEST_CASE("generate_shifted rejects a forged wrapper whose copies collide") {
    PeriodicShape forged;
    forged.shape = row_shape(3);
    forged.a = {1, 1};
    forged.b = {0, 1};  // step (1,w) - impossible for a validated period
    CHECK_THROWS_AS(generate_shifted(forged, 0, 2), error);
}

TEST_CASE("compatibility verdicts") {
    CHECK(is_compatible(validate_periodic(row_shape(3)), 1).compatible);
    CHECK(is_compatible(validate_periodic(kFivePeriod), 0).compatible);
    CHECK(is_compatible(validate_periodic(kExample4), 0).compatible);

    auto single_row = is_compatible(validate_periodic(row_shape(4)), 0);
    CHECK_FALSE(single_row.compatible);
    CHECK(single_row.reason.find("unbounded columns") != std::string::npos);

    CHECK_FALSE(is_compatible(validate_periodic(sh({{1, 1}})), 1).compatible);
}

TEST_CASE("normalize") {
    CHECK(normalize(sh({{1, 3}, {2, 2}, {2, 3}})) == sh({{1, 2}, {2, 1}, {2, 2}}));
    CHECK(normalize(sh({{1, 1}})) == sh({{1, 1}}));
    CHECK(normalize(sh({{3, 5}, {4, 5}})) == sh({{1, 1}, {2, 1}}));
    CHECK_THROWS_AS(normalize(Shape{}), error);

    std::mt19937 rng(3);
    for (int round = 0; round < 50; ++round) {
        std::vector<Cell> cells;
        for (int i = 0; i < 8; ++i)
            cells.push_back({static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4});
        Shape s(std::move(cells));
        CHECK(normalize(normalize(s)) == normalize(s));
        CHECK(normalize(s).min_row() == 1);
        CHECK(normalize(s).min_col() == 1);
    }
}

TEST_CASE("corner comprehension") {
    CHECK(corner(kExample4, {2, 2}) == sh({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK(corner(kExample4, {9, 9}).empty());
    CHECK(corner(row_shape(6), {1, 4}) == sh({{1, 5}, {1, 6}}));

    std::mt19937 rng(5);
    for (int round = 0; round < 50; ++round) {
        std::vector<Cell> cells;
        for (int i = 0; i < 10; ++i)
            cells.push_back({static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)});
        Shape s(std::move(cells));
        Cell v{static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)};
        Shape c = corner(s, v);
        CHECK(c.subset_of(s));
        Shape bigger = s.united(sh({{0, 5}, {5, 5}}));
        CHECK(c.subset_of(corner(bigger, v)));
        for (Cell x : c.cells()) {
            CHECK(x.row <= v.row);
            CHECK(x.col > v.col);
        }
    }
}

TEST_CASE("index and coefficient shapes for the single rows") {
    auto geom61 = index_shapes(validate_periodic(row_shape(6)), 1);
    CHECK(geom61.index ==
          sh({{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4},
              {4, 1}, {4, 2}, {4, 3}, {4, 4}, {4, 5}}));
    CHECK(geom61.coefficient.size() == 17);
    CHECK(geom61.coefficient.row_cells(5).size() == 6);

    auto geom62 = index_shapes(validate_periodic(row_shape(6)), 2);
    CHECK(geom62.index == sh({{1, 2}, {2, 1}, {2, 2}, {2, 3}, {2, 4}}));
    CHECK(geom62.coefficient ==
          sh({{1, 2}, {2, 1}, {2, 2}, {2, 3}, {2, 4},
              {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}}));
}

TEST_CASE("index and coefficient shapes for the 5-cell period") {
    auto p = validate_periodic(kFivePeriod);
    auto geom = index_shapes(p, 0);
    CHECK(geom.index == sh({{1, 2}, {2, 1}, {2, 2}}));
    CHECK(geom.coefficient == sh({{1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 3}}));
    CHECK(index_shape(p, 0) == geom.index);
    CHECK(coefficient_shape(p, 0) == geom.coefficient);
}

TEST_CASE("both index translates live inside the coefficient shape") {
    std::vector<std::pair<Shape, int>> corpus = {
        {row_shape(3), 1}, {row_shape(4), 1}, {row_shape(5), 1}, {row_shape(6), 1},
        {row_shape(6), 2}, {kFivePeriod, 0},  {kExample4, 0},    {kExample4, 1}};
    for (const auto& [shape, w] : corpus) {
        auto p = validate_periodic(shape);
        auto geom = index_shapes(p, w);
        CHECK(geom.index.translated(geom.t_top).subset_of(geom.coefficient));
        CHECK(geom.index.translated(geom.t_bot).subset_of(geom.coefficient));
        CHECK(p.shape.translated(geom.t_period).subset_of(geom.coefficient));
        CHECK(geom.t_bot - geom.t_top == geom.step);
        // the three pieces exhaust the coefficient shape
        Shape unioned = geom.index.translated(geom.t_top)
                            .united(geom.index.translated(geom.t_bot))
                            .united(p.shape.translated(geom.t_period));
        CHECK(unioned == geom.coefficient);
    }
}

TEST_CASE("start index is the smallest copy count containing the anchored boundary") {
    auto p3 = validate_periodic(row_shape(3));
    CHECK(n_min(p3, 1) == 1);

    auto p4 = validate_periodic(row_shape(4));
    CHECK(n_min(p4, 1) == 2);

    auto pex4 = validate_periodic(kExample4);
    CHECK(n_min(pex4, 0) == 2);

    // The boundary shape spans four copies here, and its anchored translate
    // already fits in the 4-copy union.
    auto p6 = validate_periodic(row_shape(6));
    auto geom = index_shapes(p6, 1);
    int n0 = n_min(p6, 1, geom);
    CHECK(n0 == 4);
    CHECK(geom.index.translated(index_anchor(p6, geom, n0))
              .subset_of(generate_shifted(p6, 1, n0)));
    CHECK_FALSE(geom.index.translated(index_anchor(p6, geom, n0 - 1))
                    .subset_of(generate_shifted(p6, 1, n0 - 1)));
}
