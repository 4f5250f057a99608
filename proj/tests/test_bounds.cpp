#include <doctest.h>
TEST_SUITE_BEGIN("bounds");
TEST_SUITE_END();
