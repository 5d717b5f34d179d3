#include <string>
#include <vector>

#include "hc3/cli.hpp"

int main(int argc, char** argv) { return hc3::cli::run(std::vector<std::string>(argv, argv + argc)); }
