#include <iostream>
#include <string>
#include <vector>

#include <p7cover/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return p7cover::cli::run(args, std::cout, std::cerr);
}
