#include <iostream>

#include "scamtext_cli/app.hpp"

int main(int argc, char** argv) {
  scamtext::cli::Cli cli(std::cout, std::cerr);
  return cli.run(argc, argv);
}
