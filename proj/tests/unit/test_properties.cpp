#include <doctest.h>

#include "properties.hpp"

using namespace mmbug::testing;

TEST_CASE("discrete identities hold on random instances") {
  for (const PropertyReport& report : run_property_suite(200, 424242)) {
    CAPTURE(report.name);
    CAPTURE(report.worst);
    CAPTURE(report.tolerance);
    CHECK(report.instances >= 200);
    CHECK(report.passed());
  }
}
