#include <string>
#include <vector>

#include "sincgap/cli.hpp"

int main(int argc, char** argv) {
    return sincgap::cli::run(std::vector<std::string>(argv, argv + argc));
}
