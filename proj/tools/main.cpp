#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() == 1 && args[0] == "--batch")
        return cutseq::cli::run_batch(std::cin, std::cout, std::cerr);
    return cutseq::cli::run(args, std::cout, std::cerr);
}
