// Full identity sweep for the Klein four-group base, the largest
// configuration the property suite covers. Slow; kept out of test_spectral.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "wreathlab/spectral.hpp"

using namespace wreathlab;

TEST_CASE("Klein four-group base: complete identity suite through n = 5") {
    auto U = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{2, 2});
    SpectralSetup s = average_setup(U);
    REQUIRE(s.W == 4);

    for (int n = 2; n <= 5; ++n) {
        WreathRingQ q = interval_projection(s, n);
        CHECK(q.is_projection());
        CHECK(q.trace() == (s.W - 1) * (s.W - 1) / rational_pow(s.W, static_cast<unsigned long>(n)));
        CHECK(check_shift_action(s, n));
    }

    CHECK(check_interval_orthogonality(s, 5));
    CHECK(check_eigen_orthogonality(s, 5));

    for (int n = 2; n <= 5; ++n) {
        Rational expected_trace = (s.W - 1) * (s.W - 1) /
                                  rational_pow(s.W, static_cast<unsigned long>(n));
        for (int m = 1; m < n; ++m) {
            WreathRingC p = eigenspace_projection(s, m, n);
            CHECK(promote(s.T) * p == p.scaled(two_cos_exact(m, n)));
            CHECK(p.trace() == CyclotomicNumber(expected_trace));
        }
    }
}
