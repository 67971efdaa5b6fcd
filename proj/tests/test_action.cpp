#include <doctest.h>

TEST_SUITE("action") {}
