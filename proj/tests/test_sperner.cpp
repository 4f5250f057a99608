#include <doctest.h>
TEST_SUITE_BEGIN("sperner");
TEST_SUITE_END();
