#include <vector>

#include "abcv/cli.hpp"

int main(int argc, char** argv) {
  return abcv::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
