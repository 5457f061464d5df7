#include <doctest.h>

#include "syt/symmetry.hpp"

using namespace syt;

namespace {

Shape sh(std::initializer_list<Cell> cells) { return Shape(std::vector<Cell>(cells)); }

Shape row_shape(int len) {
    std::vector<Cell> cells;
    for (int c = 1; c <= len; ++c) cells.push_back({1, c});
    return Shape(std::move(cells));
}

Shape bottom_suffix(const Shape& index, size_t len) {
    auto bottom = index.row_cells(index.max_row());
    return Shape(std::vector<Cell>(bottom.end() - static_cast<long>(len), bottom.end()));
}

const Shape kExample4 = sh({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}});
const Shape kFivePeriod = sh({{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}});

std::vector<BigInt> terms_of(const TransferSystem& ts, int count) {
    std::vector<BigInt> terms;
    Vector v = ts.v0;
    for (int k = 0; k < count; ++k) {
        terms.push_back(dot(ts.weights, v));
        v = mat_vec(ts.matrix, v);
    }
    return terms;
}

} // namespace

TEST_CASE("the empty subset is always redundant and induces the discrete partition") {
    auto ts = build_transfer_system(validate_periodic(row_shape(4)), 1);
    CHECK(is_redundant_subset(ts.period, 1, Shape{}));
    auto part = equivalence_partition(ts, Shape{});
    CHECK(part.classes.size() == ts.dim());
    for (const auto& cls : part.classes) CHECK(cls.size() == 1);
    CHECK(verify_row_identity(ts, part));

    auto same = compress(ts, part);
    CHECK(same.matrix == ts.matrix);
    CHECK(same.v0 == ts.v0);
    CHECK(same.n0 == ts.n0);
    CHECK(same.weights == ts.weights);
}

TEST_CASE("the worked 13-cell row with shift 4 admits its bottom-row suffix") {
    auto p = validate_periodic(row_shape(13));
    auto geom = index_shapes(p, 4);
    REQUIRE(geom.index.size() == 13);
    REQUIRE(geom.index.row_cells(geom.index.max_row()).size() == 9);
    Shape suffix = bottom_suffix(geom.index, 8);
    CHECK(check_redundant_subset(p, 4, suffix, geom).redundant);

    // kept cells: one bottom cell plus the 4-cell top row
    Shape kept = geom.index.minus(suffix);
    CHECK(kept.size() == 5);
    CHECK(enumerate_syt(kept).size() == 5);  // class count bound n - 2w
}

TEST_CASE("subsets that break the certificate are rejected with a named clause") {
    auto p4 = validate_periodic(row_shape(4));
    auto geom = index_shapes(p4, 1);

    auto whole_row = check_redundant_subset(p4, 1, bottom_suffix(geom.index, 3), geom);
    CHECK_FALSE(whole_row.redundant);
    CHECK(whole_row.failed_clause.find("bridge") != std::string::npos);

    auto everything = check_redundant_subset(p4, 1, geom.index, geom);
    CHECK_FALSE(everything.redundant);
    CHECK(everything.failed_clause.find("position") != std::string::npos);

    auto top_cell = check_redundant_subset(p4, 1, sh({{1, 2}}), geom);
    CHECK_FALSE(top_cell.redundant);

    CHECK_THROWS_AS(check_redundant_subset(p4, 1, sh({{9, 9}}), geom), error);
}

TEST_CASE("two-row period with shift 1: unsound subsets are rejected") {
    // Both rejected subsets would merge the two boundary states whose matrix
    // rows differ, so the certificate must refuse them.
    auto p = validate_periodic(kExample4);
    auto geom = index_shapes(p, 1);
    REQUIRE(geom.index == sh({{1, 2}, {2, 1}, {2, 2}}));

    auto whole_bottom = check_redundant_subset(p, 1, sh({{2, 1}, {2, 2}}), geom);
    CHECK_FALSE(whole_bottom.redundant);
    CHECK(whole_bottom.failed_clause.find("bridge") != std::string::npos);

    auto right_column = check_redundant_subset(p, 1, sh({{1, 2}, {2, 2}}), geom);
    CHECK_FALSE(right_column.redundant);
    CHECK(right_column.failed_clause.find("interface") != std::string::npos);

    auto ts = build_transfer_system(p, 1);
    auto found = find_redundant_subsets(ts);
    CHECK(found.size() == 2);  // the empty set and the rightmost bottom cell
    for (const auto& sub : found) {
        auto part = equivalence_partition(ts, sub.cells);
        CHECK(part.classes.size() == ts.dim());
        CHECK(verify_row_identity(ts, part));
    }
}

TEST_CASE("partition construction refuses non-redundant subsets") {
    auto ts = build_transfer_system(validate_periodic(row_shape(4)), 1);
    CHECK_THROWS_AS(equivalence_partition(ts, bottom_suffix(ts.geom.index, 3)), error);
}

TEST_CASE("row identity check is non-vacuous") {
    auto ts = build_transfer_system(validate_periodic(row_shape(4)), 1);
    EquivalencePartition grouping;
    grouping.classes = {{0, 1}};
    grouping.representative = {0};
    CHECK_FALSE(verify_row_identity(ts, grouping));  // [3,4] vs [2,3]

    EquivalencePartition bad;
    bad.classes = {{0}};
    bad.representative = {0};
    CHECK_THROWS_AS(verify_row_identity(ts, bad), error);  // does not cover the basis
}

TEST_CASE("row identity holds for every certified subset on the pair corpus") {
    std::vector<std::pair<Shape, int>> corpus = {{row_shape(3), 1}, {row_shape(4), 1},
                                                 {row_shape(5), 1},
                                                 {row_shape(6), 2}, {row_shape(7), 2},
                                                 {kFivePeriod, 0},  {kExample4, 0},
                                                 {kExample4, 1}};
    for (const auto& [shape, w] : corpus) {
        auto ts = build_transfer_system(validate_periodic(shape), w);
        auto found = find_redundant_subsets(ts);
        REQUIRE(!found.empty());
        bool empty_included = std::any_of(found.begin(), found.end(),
                                          [](const RedundantSubset& r) { return r.cells.empty(); });
        CHECK(empty_included);
        for (const auto& sub : found) {
            auto part = equivalence_partition(ts, sub.cells);
            CHECK(verify_row_identity(ts, part));
            CHECK(part.classes.size() == sub.class_count);
        }
    }
}

TEST_CASE("the 7-cell row with shift 2 compresses to at most 3 states") {
    auto ts = build_transfer_system(validate_periodic(row_shape(7)), 2);
    REQUIRE(ts.geom.index.row_cells(ts.geom.index.max_row()).size() == 5);
    Shape suffix = bottom_suffix(ts.geom.index, 4);
    REQUIRE(is_redundant_subset(ts.period, 2, suffix));
    auto part = equivalence_partition(ts, suffix);
    CHECK(part.classes.size() <= 3);
    CHECK(part.classes.size() < ts.dim());
    REQUIRE(verify_row_identity(ts, part));

    auto packed = compress(ts, part);
    CHECK(packed.dim() == part.classes.size());
    auto full_terms = terms_of(ts, 12);
    Vector v = packed.v0;
    for (int n = packed.n0; n < ts.n0 + 12; ++n) {
        CHECK(dot(packed.weights, v) == full_terms[static_cast<size_t>(n - ts.n0)]);
        v = mat_vec(packed.matrix, v);
    }
}

TEST_CASE("compression preserves the sequence for every certified subset") {
    std::vector<std::pair<Shape, int>> corpus = {{row_shape(4), 1}, {row_shape(7), 2},
                                                 {kFivePeriod, 0}};
    for (const auto& [shape, w] : corpus) {
        auto ts = build_transfer_system(validate_periodic(shape), w);
        for (const auto& sub : find_redundant_subsets(ts)) {
            auto part = equivalence_partition(ts, sub.cells);
            auto packed = compress(ts, part);
            for (int n = packed.n0; n <= ts.n0 + 10; ++n)
                CHECK(count_via_transfer(packed, n) == count_via_transfer(ts, n));
        }
    }
}

TEST_CASE("subset search includes the guaranteed suffix for short rows") {
    auto ts = build_transfer_system(validate_periodic(row_shape(4)), 1);
    auto found = find_redundant_subsets(ts);
    Shape guaranteed = bottom_suffix(ts.geom.index, 2);  // rightmost |R| - w - 1 cells
    CHECK(std::any_of(found.begin(), found.end(),
                      [&](const RedundantSubset& r) { return r.cells == guaranteed; }));
    for (size_t i = 1; i < found.size(); ++i)
        CHECK(found[i - 1].class_count <= found[i].class_count);
}

TEST_CASE("the 13-cell row with shift 4 compresses from 42 to 5 states") {
    TransferLimits lim;
    lim.max_cells = 40;
    lim.max_dim = 1000;
    auto ts = build_transfer_system(validate_periodic(row_shape(13)), 4, lim);
    REQUIRE(ts.dim() == 42);
    Shape suffix = bottom_suffix(ts.geom.index, 8);  // rightmost |R| - w - 1 cells
    REQUIRE(is_redundant_subset(ts.period, 4, suffix));
    auto part = equivalence_partition(ts, suffix);
    CHECK(part.classes.size() == 5);  // = |R| - 2w
    REQUIRE(verify_row_identity(ts, part));
    auto packed = compress(ts, part);
    CHECK(packed.dim() == 5);
    for (int n = packed.n0; n < packed.n0 + 10; ++n)
        CHECK(count_via_transfer(packed, n) == count_via_transfer(ts, n));
}

TEST_CASE("short single rows compress within the guaranteed state bound") {
    struct Case { int len, w, bound; };
    for (auto c : {Case{4, 1, 2}, Case{7, 2, 3}, Case{10, 3, 4}}) {
        auto ts = build_transfer_system(validate_periodic(row_shape(c.len)), c.w);
        auto found = find_redundant_subsets(ts);
        REQUIRE(!found.empty());
        CHECK(found.front().class_count <= static_cast<size_t>(c.bound));
    }
}

TEST_CASE("compress refuses partitions whose rows differ") {
    auto ts = build_transfer_system(validate_periodic(row_shape(4)), 1);
    EquivalencePartition grouping;
    grouping.classes = {{0, 1}};
    grouping.representative = {0};
    CHECK_THROWS_AS(compress(ts, grouping), error);
}
