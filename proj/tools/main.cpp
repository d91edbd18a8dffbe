#include <iostream>
#include <string>
#include <vector>

#include "chainsaw/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return chainsaw::run_cli(args, std::cout, std::cerr);
}
