#include <iostream>

#include "diracspec/cli.hpp"

int main(int argc, char **argv)
{
  return diracspec::cli_main(argc, argv, std::cout, std::cerr);
}
