#include "doctest.h"
#include "mmt/transforms.hpp"
#include "test_helpers.hpp"

using namespace mmt;

TEST_CASE("shipped decomposition files match the built-in generators and are valid") {
    for (const std::string& name : mmt_test::bundled_names()) {
        CAPTURE(name);
        const RatFact from_file = load_rational(mmt_test::data_path(name));
        const RatFact from_gen = generator(name);
        CHECK(from_file == from_gen);
        CHECK(brent_residual(from_file) == 0);
    }
}
