#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>

// Path of the boxdim binary, forwarded by ctest for the end-to-end cases.
std::string g_cli_path;

int main(int argc, char** argv) {
    doctest::Context context;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli-path") g_cli_path = argv[i + 1];
    }
    context.applyCommandLine(argc, argv);
    return context.run();
}
