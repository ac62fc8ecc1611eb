// Exercises the shared-library C surface end to end.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "mfwb.h"

#define CHECK(cond)                                                                      \
    do {                                                                                 \
        if (!(cond)) {                                                                   \
            std::fprintf(stderr, "FAILED at %s:%d: %s\n", __FILE__, __LINE__, #cond);    \
            return 1;                                                                    \
        }                                                                                \
    } while (0)

static const char* problem_json = R"({
  "ring": { "variables": ["x"], "potential": "x^3" },
  "factorizations": { "E": { "phi": [["x"]], "psi": [["x^2"]] } }
})";

int main()
{
    CHECK(std::strlen(mfwb_version()) > 0);

    mfwb_problem* p = nullptr;
    char* err = nullptr;
    CHECK(mfwb_problem_from_json(problem_json, &p, &err) == MFWB_OK);
    CHECK(p != nullptr);
    CHECK(err == nullptr);

    {
        const char* argv[] = {"milnor", "--format", "json"};
        char* report = nullptr;
        CHECK(mfwb_run(p, 3, argv, &report) == MFWB_OK);
        CHECK(report != nullptr);
        CHECK(std::strstr(report, "\"mu\": 2") != nullptr);
        CHECK(std::strstr(report, "\"schema\": \"mfwb/1\"") != nullptr);
        mfwb_string_free(report);
    }
    {
        const char* argv[] = {"residue", "3*x", "--format", "json"};
        char* report = nullptr;
        CHECK(mfwb_run(p, 4, argv, &report) == MFWB_OK);
        CHECK(std::strstr(report, "\"residue\": \"1\"") != nullptr);
        mfwb_string_free(report);
    }
    {
        const char* argv[] = {"cohom", "E", "missing"};
        char* report = nullptr;
        CHECK(mfwb_run(p, 3, argv, &report) == MFWB_E_IO);
        CHECK(std::strstr(report, "unknown factorization") != nullptr);
        mfwb_string_free(report);
    }
    mfwb_problem_free(p);

    // Validation failure surfaces as MFWB_E_VALIDATION with a message.
    {
        const char* bad = R"({
          "ring": { "variables": ["x"], "potential": "x^3" },
          "factorizations": { "B": { "phi": [["x"]], "psi": [["x"]] } }
        })";
        mfwb_problem* q = nullptr;
        char* msg = nullptr;
        CHECK(mfwb_problem_from_json(bad, &q, &msg) == MFWB_E_VALIDATION);
        CHECK(q == nullptr);
        CHECK(msg != nullptr);
        CHECK(std::strstr(msg, "B") != nullptr);
        mfwb_string_free(msg);
    }
    // Unreadable path -> IO.
    {
        mfwb_problem* q = nullptr;
        CHECK(mfwb_problem_open("/nonexistent/problem.json", &q, nullptr) == MFWB_E_IO);
        CHECK(q == nullptr);
    }

    std::puts("capi: all checks passed");
    return 0;
}
