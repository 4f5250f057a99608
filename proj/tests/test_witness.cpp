#include <doctest.h>
TEST_SUITE_BEGIN("witness");
TEST_SUITE_END();
