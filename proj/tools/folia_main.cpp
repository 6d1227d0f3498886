#include "folia/cli_args.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return folia::run_cli(args, std::cout, std::cerr);
}
