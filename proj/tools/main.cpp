#include <string>
#include <vector>

#include "tracespeed/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tracespeed::cli::run(args);
}
