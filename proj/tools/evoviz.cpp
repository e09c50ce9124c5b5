#include <iostream>

#include "evoviz/cli.hpp"

int main(int argc, char** argv)
{
    return evoviz::cli::main(argc, argv, std::cout, std::cerr);
}
