#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "xorclique/affine.hpp"
#include "xorclique/errors.hpp"
#include "xorclique/field.hpp"

using namespace xorclique;

TEST_CASE("class and line counts") {
    Field f2 = field_new(2);
    std::vector<ParallelClass> cls = parallel_classes(f2);
    REQUIRE(cls.size() == 3);
    std::set<int> covered;
    for (const auto& c : cls) {
        REQUIRE(c.lines.size() == 2);
        for (const auto& line : c.lines) {
            CHECK(line.points.size() == 2);
            for (int pt : line.points) covered.insert(pt);
        }
    }
    CHECK(covered.size() == 4);
}

TEST_CASE("every class partitions the plane") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        Field f = field_new(q);
        std::vector<ParallelClass> cls = parallel_classes(f);
        REQUIRE(static_cast<int>(cls.size()) == q + 1);
        for (const auto& c : cls) {
            REQUIRE(static_cast<int>(c.lines.size()) == q);
            std::set<int> covered;
            for (const auto& line : c.lines) {
                REQUIRE(static_cast<int>(line.points.size()) == q);
                for (int pt : line.points) {
                    CHECK(pt >= 0);
                    CHECK(pt < q * q);
                    CHECK(covered.insert(pt).second);  // disjoint within the class
                }
            }
            CHECK(static_cast<int>(covered.size()) == q * q);
        }
    }
}

TEST_CASE("lines from distinct classes meet in exactly one point") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        Field f = field_new(q);
        std::vector<ParallelClass> cls = parallel_classes(f);
        for (size_t ci = 0; ci < cls.size(); ++ci) {
            for (size_t cj = ci + 1; cj < cls.size(); ++cj) {
                for (const auto& a : cls[ci].lines) {
                    for (const auto& b : cls[cj].lines) {
                        CHECK(line_intersect(a, b).size() == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("parallel lines are disjoint, a line meets itself fully") {
    Field f = field_new(5);
    std::vector<ParallelClass> cls = parallel_classes(f);
    for (const auto& c : cls) {
        for (size_t i = 0; i < c.lines.size(); ++i) {
            CHECK(line_intersect(c.lines[i], c.lines[i]).size() == 5);
            for (size_t j = i + 1; j < c.lines.size(); ++j) {
                CHECK(line_intersect(c.lines[i], c.lines[j]).empty());
            }
        }
    }
}

TEST_CASE("slope zero line crossed with a vertical line") {
    Field f = field_new(3);
    std::vector<ParallelClass> cls = parallel_classes(f);
    // y = 0x + 0 is class 0 offset 0; x = 1 is the vertical class (index q)
    // at offset 1. They share exactly (1,0), flat index 1*3+0.
    const AffineLine& horizontal = cls[0].lines[0];
    const AffineLine& vertical = cls[3].lines[1];
    std::vector<int> common = line_intersect(horizontal, vertical);
    REQUIRE(common.size() == 1);
    CHECK(common[0] == 3);
}

TEST_CASE("every point lies on exactly q+1 lines, one per class") {
    for (int q : {2, 3, 4, 5, 7, 9}) {
        CAPTURE(q);
        std::vector<ParallelClass> cls = parallel_classes(field_new(q));
        std::vector<int> incident(q * q, 0);
        for (const auto& c : cls) {
            for (const auto& line : c.lines) {
                for (int pt : line.points) ++incident[pt];
            }
        }
        for (int pt = 0; pt < q * q; ++pt) CHECK(incident[pt] == q + 1);
    }
}

TEST_CASE("mixed fields are rejected") {
    std::vector<ParallelClass> c2 = parallel_classes(field_new(2));
    std::vector<ParallelClass> c3 = parallel_classes(field_new(3));
    CHECK_THROWS_AS(line_intersect(c2[0].lines[0], c3[0].lines[0]), Error);
    try {
        line_intersect(c2[0].lines[0], c3[0].lines[0]);
    } catch (const Error& e) {
        CHECK(e.code() == "MixedFields");
    }
}

TEST_CASE("points are sorted flat indices") {
    std::vector<ParallelClass> cls = parallel_classes(field_new(4));
    for (const auto& c : cls) {
        for (const auto& line : c.lines) {
            CHECK(std::is_sorted(line.points.begin(), line.points.end()));
        }
    }
}
