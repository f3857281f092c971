#include "doctest.h"

#include "cabinet/archive.hpp"
#include "cabinet/rng.hpp"

using namespace cabinet;

namespace {

Layout tag(ComponentIndex i) { return Layout{{i}}; }

// Pairwise check written independently of ParetoArchive::is_consistent.
bool mutually_nondominated(const std::vector<ArchiveEntry>& entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (i == j) continue;
            const auto& a = entries[i].objectives;
            const auto& b = entries[j].objectives;
            if (a.heat <= b.heat && a.wire_mm <= b.wire_mm && (a.heat < b.heat || a.wire_mm < b.wire_mm)) {
                return false;
            }
            if (std::abs(a.heat - b.heat) <= 1e-9 && std::abs(a.wire_mm - b.wire_mm) <= 1e-9) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("archive insertion examples") {
    ParetoArchive m;
    CHECK(m.insert(tag(1), {5, 100}));
    CHECK(m.size() == 1);

    SUBCASE("dominating candidate replaces") {
        CHECK(m.insert(tag(2), {4, 90}));
        REQUIRE(m.size() == 1);
        CHECK(m.entries()[0].objectives == ObjectiveVector{4, 90});
    }
    SUBCASE("incomparable candidate coexists") {
        CHECK(m.insert(tag(2), {6, 90}));
        CHECK(m.size() == 2);
    }
    SUBCASE("dominated candidate is rejected") {
        CHECK_FALSE(m.insert(tag(2), {6, 100}));
        CHECK(m.size() == 1);
    }
    SUBCASE("equal objectives keep the first layout") {
        CHECK_FALSE(m.insert(tag(2), {5, 100}));
        CHECK_FALSE(m.insert(tag(3), {5 + 1e-12, 100 - 1e-12}));
        REQUIRE(m.size() == 1);
        CHECK(m.entries()[0].layout == tag(1));
    }
}

TEST_CASE("a candidate can evict several entries") {
    ParetoArchive m;
    m.insert(tag(1), {1, 10});
    m.insert(tag(2), {2, 8});
    m.insert(tag(3), {3, 6});
    m.insert(tag(4), {0.5, 20});
    CHECK(m.insert(tag(5), {1.5, 5}));
    REQUIRE(m.size() == 3);
    CHECK(m.entries()[0].layout == tag(1));
    CHECK(m.entries()[1].layout == tag(4));
    CHECK(m.entries()[2].layout == tag(5));
}

TEST_CASE("select_recommended") {
    ParetoArchive m;
    m.insert(tag(1), {1.0, 500});
    m.insert(tag(2), {2.0, 100});
    m.insert(tag(3), {1.0, 450});
    CHECK(select_recommended(m).objectives == ObjectiveVector{1.0, 450});

    ParetoArchive single;
    single.insert(tag(7), {3, 3});
    CHECK(select_recommended(single).layout == tag(7));

    CHECK_THROWS_AS(select_recommended(ParetoArchive{}), EmptyArchive);

    // Heat ties within tolerance fall through to wire, then insertion order.
    std::vector<ArchiveEntry> entries{{tag(1), {1.0 + 5e-10, 300}, 0},
                                      {tag(2), {1.0, 300}, 1},
                                      {tag(3), {1.0 + 2e-10, 200}, 2}};
    CHECK(select_recommended(entries).layout == tag(3));
    entries.pop_back();
    CHECK(select_recommended(entries).layout == tag(1));
}

TEST_CASE("archive fuzz keeps the invariant") {
    Rng rng(2);
    ParetoArchive m;
    for (int i = 0; i < 20000; ++i) {
        // Mix a coarse grid (ties, near duplicates) with continuous values.
        ObjectiveVector v = (i % 2 == 0)
                                ? ObjectiveVector{static_cast<double>(rng.below(40)), static_cast<double>(rng.below(40))}
                                : ObjectiveVector{rng.uniform(0, 40), rng.uniform(0, 40)};
        if (i % 7 == 0) v.heat += 1e-10;
        const auto before = m.entries();
        const bool inserted = m.insert(tag(static_cast<ComponentIndex>(i)), v);
        bool blocked = false;
        for (const auto& e : before) {
            blocked = blocked || dominates(e.objectives, v) || nearly_equal(e.objectives, v);
        }
        CHECK(inserted == !blocked);
    }
    CHECK(mutually_nondominated(m.entries()));
    CHECK(m.is_consistent());
}
