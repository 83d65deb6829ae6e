#ifndef LCTLAB_CLI_HPP
#define LCTLAB_CLI_HPP

namespace lctlab {

// Dispatches the lct/seq/explore command groups. Exit codes: 0 success,
// 2 input or usage error, 3 budget exceeded, 1 internal failure.
int cli_main(int argc, const char* const* argv);

}  // namespace lctlab

#endif
