#include "mfwb.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "commands.hpp"
#include "error.hpp"
#include "problem.hpp"

struct mfwb_problem {
    mfwb::ProblemFile rep;
};

namespace {

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
mfwb_status open_impl(Fn load, mfwb_problem** out, char** error_out)
{
    if (error_out)
        *error_out = nullptr;
    if (!out)
        return MFWB_E_IO;
    *out = nullptr;
    try {
        auto* p = new mfwb_problem{load()};
        *out = p;
        return MFWB_OK;
    } catch (const mfwb::Error& e) {
        if (error_out)
            *error_out = dup_string(e.what());
        return static_cast<mfwb_status>(static_cast<int>(e.kind()));
    } catch (const std::exception& e) {
        if (error_out)
            *error_out = dup_string(e.what());
        return MFWB_E_IO;
    }
}

mfwb_status run_impl(const mfwb::ProblemFile* pf, int argc, const char* const* argv,
                     char** report_out)
{
    if (report_out)
        *report_out = nullptr;
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i)
        args.emplace_back(argv[i] ? argv[i] : "");
    try {
        mfwb::CommandResult res = mfwb::run_command(pf, args);
        if (report_out)
            *report_out = dup_string(res.output);
        return static_cast<mfwb_status>(res.exit_code);
    } catch (const std::exception& e) {
        if (report_out)
            *report_out = dup_string(std::string("internal error: ") + e.what() + "\n");
        return MFWB_E_COMPUTE;
    }
}

} // namespace

extern "C" {

mfwb_status mfwb_problem_open(const char* path, mfwb_problem** out, char** error_out)
{
    if (!path)
        return MFWB_E_IO;
    return open_impl([&] { return mfwb::load_problem_file(path); }, out, error_out);
}

mfwb_status mfwb_problem_from_json(const char* json_text, mfwb_problem** out,
                                   char** error_out)
{
    if (!json_text)
        return MFWB_E_IO;
    return open_impl([&] { return mfwb::load_problem_text(json_text); }, out, error_out);
}

void mfwb_problem_free(mfwb_problem* p)
{
    delete p;
}

mfwb_status mfwb_run(mfwb_problem* p, int argc, const char* const* argv, char** report_out)
{
    if (!p)
        return MFWB_E_IO;
    return run_impl(&p->rep, argc, argv, report_out);
}

mfwb_status mfwb_run_standalone(int argc, const char* const* argv, char** report_out)
{
    return run_impl(nullptr, argc, argv, report_out);
}

void mfwb_string_free(char* s)
{
    std::free(s);
}

const char* mfwb_version(void)
{
    return "mfwb 1.0.0";
}

} // extern "C"
