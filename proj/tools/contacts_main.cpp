#include <iostream>
#include <string>
#include <vector>

#include "contacts/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return contacts::run_cli(args, std::cout, std::cerr);
}
