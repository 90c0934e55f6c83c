// Runs the full acceptance suite and prints one line per criterion.
// Exit status is the number of failed criteria (0 means all green).

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "gdw/acceptance.hpp"

int main(int argc, char** argv) {
    gdw::AcceptanceOptions opt;
    opt.progress = true;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            const char* s = argv[++i];
            while (*s) {
                char* end = nullptr;
                opt.only.push_back(int(std::strtol(s, &end, 10)));
                s = (end && *end == ',') ? end + 1 : end;
            }
        } else if (std::strcmp(argv[i], "--quiet") == 0) {
            opt.progress = false;
        } else {
            std::fprintf(stderr, "usage: %s [--seed N] [--only 1,2,...] [--quiet]\n", argv[0]);
            return 64;
        }
    }

    const auto results = gdw::run_acceptance(opt);
    std::fputs(gdw::acceptance_table(results).c_str(), stdout);

    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    return failed;
}
