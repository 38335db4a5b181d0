#include <iostream>
#include <string>
#include <vector>

#include "maass/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return maass::cli::main(args, std::cout, std::cerr);
}
