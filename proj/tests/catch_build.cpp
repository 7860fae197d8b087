// Compiles the amalgamated Catch2 implementation once for all test targets.
#include <catch2/catch_amalgamated.cpp>
