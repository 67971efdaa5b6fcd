#include <doctest.h>

TEST_SUITE("field") {}
