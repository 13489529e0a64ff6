// Runs the twelve-point verification suite; one pass/fail line per criterion.

#include <cstdio>
#include <iostream>

#include "latzeta/acceptance.hpp"

int main() {
    bool ok = latzeta::run_acceptance_suite(
        [](const std::string& line) { std::cout << line << std::endl; });
    return ok ? 0 : 1;
}
