#include <doctest.h>
TEST_SUITE_BEGIN("reduction");
TEST_SUITE_END();
