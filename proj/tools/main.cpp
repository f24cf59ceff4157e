#include <iostream>
#include <string>
#include <vector>

#include "quatpoly/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return quatpoly::run_cli(args, std::cout, std::cerr);
}
