// Prints one PASS/FAIL line per acceptance criterion. Criterion 10 runs the
// `rebit selftest` executable given with --cli and checks time and exit code.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "rebit/selftest.hpp"

using namespace rebit;

int main(int argc, char** argv) {
    std::string cli;
    for (int k = 1; k + 1 < argc; ++k)
        if (std::strcmp(argv[k], "--cli") == 0) cli = argv[k + 1];

    int failed = 0;
    SelftestOptions opt;
    opt.on_result = [&](const CriterionResult& r) {
        std::printf("%s criterion %d (%s, %.1fs): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    };
    run_selftest(opt);

    if (cli.empty()) {
        std::printf("FAIL criterion 10 (end-to-end): no --cli executable given\n");
        return 1;
    }
    auto t0 = std::chrono::steady_clock::now();
    int status = std::system((cli + " selftest > /dev/null 2>&1").c_str());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    bool pass = code == 0 && secs < 600;
    std::printf("%s criterion 10 (end-to-end, %.1fs): selftest exit code %d\n", pass ? "PASS" : "FAIL", secs, code);
    if (!pass) ++failed;
    return failed == 0 ? 0 : 1;
}
