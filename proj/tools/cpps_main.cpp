#include <iostream>

#include "cpps/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return cpps::cli::main(argc, argv, std::cout, std::cerr);
}
