#include <numeric>

#include "doctest.h"
#include "evtail/weights.hpp"

using namespace evtail;

TEST_CASE("uniform grid has the documented shape") {
    const auto w = WeightGrid::uniform(50);
    REQUIRE(w.points.size() == 50);
    REQUIRE(w.masses.size() == 50);
    CHECK(w.points.front() == 0.0);
    CHECK(w.points.back() == doctest::Approx(0.99).epsilon(1e-15));
    for (double m : w.masses) CHECK(m == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(std::accumulate(w.masses.begin(), w.masses.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_NOTHROW(w.validate());
    // Equal spacing.
    const double step = w.points[1] - w.points[0];
    for (std::size_t i = 1; i < w.points.size(); ++i) {
        CHECK(w.points[i] - w.points[i - 1] == doctest::Approx(step).epsilon(1e-10));
    }
}

TEST_CASE("grid validation rejects malformed weights") {
    WeightGrid bad;
    bad.points = {0.0, 0.5};
    bad.masses = {0.5};
    CHECK_THROWS(bad.validate());  // length mismatch

    bad.masses = {1.5, -0.5};
    CHECK_THROWS(bad.validate());  // negative mass

    bad.points = {0.5, 0.0};
    bad.masses = {0.5, 0.5};
    CHECK_THROWS(bad.validate());  // not ascending

    bad.points = {0.0, 0.5};
    bad.masses = {0.4, 0.4};
    CHECK_THROWS(bad.validate());  // does not sum to one
}

TEST_CASE("uniform alternative pairs cover exactly the ordered pairs") {
    const auto w2 = JointWeight::uniform_alternative({0.0, 0.2, 0.4, 0.6, 0.8});
    CHECK(w2.entries.size() == 10);  // C(5,2)
    double total = 0.0;
    for (const auto& e : w2.entries) {
        CHECK(w2.points[static_cast<std::size_t>(e.plus_index)] <
              w2.points[static_cast<std::size_t>(e.minus_index)]);
        CHECK(e.mass == doctest::Approx(0.1).epsilon(1e-12));
        total += e.mass;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}
