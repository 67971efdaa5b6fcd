#include <doctest.h>

TEST_SUITE("groebner") {}
