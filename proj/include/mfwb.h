/* mfwb: matrix factorization workbench, C API.
 *
 * All functions are thread-compatible: distinct problem handles may be used
 * from distinct threads; a single handle must not be shared without external
 * synchronization. Strings returned through out-parameters are heap
 * allocated and must be released with mfwb_string_free().
 */
#ifndef MFWB_H
#define MFWB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status doubles as the CLI exit code contract. */
typedef enum {
    MFWB_OK = 0,
    MFWB_E_VALIDATION = 1, /* e.g. phi*psi != w*I */
    MFWB_E_COMPUTE = 2,    /* non-isolated singularity, cap exceeded, ...   */
    MFWB_E_IO = 3          /* file, JSON or expression-syntax errors        */
} mfwb_status;

typedef struct mfwb_problem mfwb_problem;

/* Loads and validates a problem file (JSON). On failure returns the error
 * kind and, when error_out is non-NULL, a human-readable message. */
mfwb_status mfwb_problem_open(const char* path, mfwb_problem** out, char** error_out);
mfwb_status mfwb_problem_from_json(const char* json_text, mfwb_problem** out,
                                   char** error_out);
void mfwb_problem_free(mfwb_problem* p);

/* Runs one subcommand (argv style: command name, positionals, flags) against
 * a loaded problem. report_out always receives the rendered report; on error
 * it carries a machine-readable error object. */
mfwb_status mfwb_run(mfwb_problem* p, int argc, const char* const* argv,
                     char** report_out);

/* Commands that need no problem file (e.g. "corpus"). */
mfwb_status mfwb_run_standalone(int argc, const char* const* argv, char** report_out);

void mfwb_string_free(char* s);

const char* mfwb_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MFWB_H */
