#include <iostream>

#include "lpb/cli/app.hpp"

int main(int argc, char** argv) { return lpb::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr); }
