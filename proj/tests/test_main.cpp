#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "support.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::cout << "property seed: " << testing_support::seed() << " (set SINGPOLY_SEED to override)\n";
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
