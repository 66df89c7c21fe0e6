#include "ncnn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return ncnn::cli::run(argc, argv, std::cout, std::cerr);
}
