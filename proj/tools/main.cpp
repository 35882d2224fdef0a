#include <string>
#include <vector>

#include "sedge/cli.hpp"

int main(int argc, char** argv) {
    return sedge::run_cli(std::vector<std::string>(argv, argv + argc));
}
