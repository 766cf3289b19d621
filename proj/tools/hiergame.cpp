#include <iostream>

#include "hiergame/commands.hpp"

int main(int argc, char** argv)
{
    return hiergame::run_cli(argc, argv, std::cout, std::cerr);
}
