#include <iostream>

#include <schwarz/cli.hpp>

int main(int argc, char **argv)
{
    return schwarz::run_cli(argc, argv, std::cout, std::cerr);
}
