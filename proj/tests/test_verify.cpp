#include <doctest.h>

#include <stdexcept>

#include "barrett/verify.hpp"

using namespace barrett;

TEST_CASE("verify_range finds nothing on correct inputs")
{
    const SieveOracle s(10'000);
    CHECK(verify_range(s, 5, 10'000).empty());
    CHECK(verify_range(s, 5, 5).empty());
    CHECK(verify_range(s, 9'000, 10'000, 4).empty());
}

TEST_CASE("verify_range range errors")
{
    const SieveOracle s(100);
    CHECK_THROWS_AS(verify_range(s, 4, 10), std::domain_error);
    CHECK_THROWS_AS(verify_range(s, 10, 9), std::domain_error);
    CHECK_THROWS_AS(verify_range(s, 5, 101), std::domain_error);
}

TEST_CASE("verify_all counts and is thread-count independent")
{
    const SieveOracle s(10'000);
    const auto one = verify_all(s, 10'000, 1);
    CHECK(one.ok());
    CHECK(one.terms_checked == 9'996);
    CHECK(one.wilson_checked == 9'999);
    CHECK(one.primes == 1229 - 2);
    CHECK(one.composites == one.terms_checked - one.primes);
    CHECK(one.composite_m_zero + one.composite_m_k == one.composites);
    CHECK(one.absorption_checked == one.composites);
    CHECK(one.k4_exception_holds);

    const auto many = verify_all(s, 10'000, 5);
    CHECK(many.terms_checked == one.terms_checked);
    CHECK(many.composite_m_zero == one.composite_m_zero);
    CHECK(many.mismatches == one.mismatches);

    const auto tiny = verify_all(s, 5);
    CHECK(tiny.ok());
    CHECK(tiny.terms_checked == 1);
    CHECK(tiny.primes == 1);
}
