#include <vector>

#include "zetascope/cli.hpp"

int main(int argc, char** argv) {
    return zetascope::cli_dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
