#include <cstring>
#include <string>
#include <vector>

#include "lctlab/cli.hpp"

// The binary also answers to the names lct, seq, and explore (symlinks), in
// which case the basename acts as the command group.
int main(int argc, char** argv) {
    std::string name = argv[0];
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);

    std::vector<const char*> args;
    args.push_back(argv[0]);
    if (name == "lct" || name == "seq" || name == "explore") args.push_back(name.c_str());
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return lctlab::cli_main(static_cast<int>(args.size()), args.data());
}
