#include "doctest.h"
#include "properties.hpp"

TEST_SUITE_BEGIN("properties");

TEST_CASE("property bundle") {
    for (const auto& prop : recog::test::all_properties()) {
        CAPTURE(prop.name);
        const auto failures = prop.run();
        for (const auto& f : failures) {
            FAIL_CHECK(prop.name << ": " << f);
        }
        CHECK(failures.empty());
    }
}

TEST_SUITE_END();
