// Writes the deterministic 256x256 benchmark image as binary PGM.
#include <iostream>

#include "impulse/error.hpp"
#include "impulse/pgm.hpp"
#include "impulse/synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_test_image <out.pgm>\n";
    return 1;
  }
  try {
    impulse::save_pgm(argv[1], impulse::make_test_image());
  } catch (const impulse::IoError& e) {
    std::cerr << "make_test_image: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
