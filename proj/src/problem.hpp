#pragma once

#include <map>
#include <string>

#include "mfcore.hpp"

namespace mfwb {

// Parsed problem file: one ring, named factorizations and named morphisms.
// Every expression is parsed and every factorization validated on load.
struct ProblemFile {
    RingContext ring;
    std::map<std::string, MatrixFactorization> factorizations;
    std::map<std::string, Morphism> morphisms;

    const MatrixFactorization& factorization(const std::string& name) const;
    const Morphism& morphism(const std::string& name) const;
};

ProblemFile load_problem_text(const std::string& json_text);
ProblemFile load_problem_file(const std::string& path);

} // namespace mfwb
