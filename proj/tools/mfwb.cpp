// Command-line front end; all functionality lives behind the C API.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "mfwb.h"

namespace {

const char* usage =
    "usage: mfwb <command> <problem.json> [args...] [flags]\n"
    "       mfwb corpus [flags]\n"
    "\n"
    "commands:\n"
    "  validate                 check every factorization in the file\n"
    "  milnor                   Milnor number and monomial basis\n"
    "  residue <expr>           Grothendieck residue of an expression\n"
    "  cohom <X> <Y>            cohomology of Hom(X, Y)\n"
    "  pair <F> <G>             duality pairing of two morphisms\n"
    "  gram <X> <Y>             pairing matrix on cohomology, with verdict\n"
    "  chern <X>                Chern character in the Milnor algebra\n"
    "  bb <F>                   boundary-bulk image of an endomorphism\n"
    "  hrr <X> <Y>              Euler characteristic vs. character pairing\n"
    "  koszul-check             homotopy property suite over the file's ring\n"
    "  eta-check <X>            top-form identity for the canonical homotopy\n"
    "  bpl-check                perturbed retract identities per factorization\n"
    "  corpus                   run the built-in acceptance battery\n"
    "\n"
    "flags: --format text|json  --trunc <D>  --cap <N>  --count <N>  --oracle\n";

bool needs_problem(const std::string& cmd)
{
    return cmd != "corpus";
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::fputs(usage, stdout);
        return args.empty() ? 3 : 0;
    }
    if (args[0] == "--version") {
        std::printf("%s\n", mfwb_version());
        return 0;
    }

    std::string command = args[0];
    std::vector<const char*> pass;
    pass.push_back(command.c_str());

    mfwb_problem* problem = nullptr;
    size_t rest_from = 1;
    if (needs_problem(command)) {
        if (args.size() < 2) {
            std::fprintf(stderr, "error: missing problem file\n%s", usage);
            return 3;
        }
        char* err = nullptr;
        mfwb_status st = mfwb_problem_open(args[1].c_str(), &problem, &err);
        if (st != MFWB_OK) {
            std::fprintf(stderr, "error: %s\n", err ? err : "failed to load problem");
            mfwb_string_free(err);
            return static_cast<int>(st);
        }
        rest_from = 2;
    }
    for (size_t i = rest_from; i < args.size(); ++i)
        pass.push_back(args[i].c_str());

    char* report = nullptr;
    mfwb_status st;
    if (problem)
        st = mfwb_run(problem, static_cast<int>(pass.size()), pass.data(), &report);
    else
        st = mfwb_run_standalone(static_cast<int>(pass.size()), pass.data(), &report);
    if (report) {
        std::fputs(report, stdout);
        mfwb_string_free(report);
    }
    mfwb_problem_free(problem);
    return static_cast<int>(st);
}
