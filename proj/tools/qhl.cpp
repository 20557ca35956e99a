#include "qhl/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return qhl::run_cli(argc, argv, std::cout, std::cerr);
}
