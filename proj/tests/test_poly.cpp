#include <doctest.h>

TEST_SUITE("poly") {}
