#include "semiband/cli.hpp"

int main(int argc, char** argv) {
  return semiband::run_cli(argc, argv);
}
