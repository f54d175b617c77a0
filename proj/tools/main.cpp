#include <iostream>
#include <string>
#include <vector>

#include "crossratio/cli.hpp"

int main(int argc, char** argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	return crossratio::run_cli(args, std::cout, std::cerr);
}
