// Runs the full acceptance suite and prints one line per criterion.
// Exit status 0 only when every criterion passes.

#include "qhgr/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    qhgr::VerifyOptions opts;
    opts.max_n = qhgr::verify_depth_from_env(opts.max_n);
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc) {
            opts.max_n = std::atoll(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--max-n N]\n", argv[0]);
            return 2;
        }
    }
    bool all = true;
    qhgr::run_acceptance(opts, [&all](const qhgr::CriterionResult& r) {
        all = all && r.pass;
        std::printf("[%s] %-26s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
