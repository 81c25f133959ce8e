#include <string>
#include <vector>

#include "rkp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rkp::cli::run(args);
}
