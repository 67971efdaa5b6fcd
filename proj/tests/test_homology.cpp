#include <doctest.h>

TEST_SUITE("homology") {}
