#include <doctest.h>
TEST_SUITE_BEGIN("strategies");
TEST_SUITE_END();
