#include "problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace mfwb {

using nlohmann::json;

namespace {

PolyMat parse_matrix(const json& rows, const VarsPtr& vars, const std::string& what)
{
    if (!rows.is_array() || rows.empty())
        fail(Errc::io, what + ": expected a non-empty array of rows");
    int r = static_cast<int>(rows.size());
    int c = -1;
    for (const auto& row : rows) {
        if (!row.is_array())
            fail(Errc::io, what + ": expected rows to be arrays");
        if (c < 0)
            c = static_cast<int>(row.size());
        else if (c != static_cast<int>(row.size()))
            fail(Errc::io, what + ": ragged matrix");
    }
    PolyMat m(vars, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            const auto& cell = rows[i][j];
            if (!cell.is_string())
                fail(Errc::io, what + ": entries must be expression strings");
            m.at(i, j) = parse_polynomial(cell.get<std::string>(), vars);
        }
    return m;
}

} // namespace

const MatrixFactorization& ProblemFile::factorization(const std::string& name) const
{
    auto it = factorizations.find(name);
    if (it == factorizations.end())
        fail(Errc::io, "unknown factorization '" + name + "'");
    return it->second;
}

const Morphism& ProblemFile::morphism(const std::string& name) const
{
    auto it = morphisms.find(name);
    if (it == morphisms.end())
        fail(Errc::io, "unknown morphism '" + name + "'");
    return it->second;
}

ProblemFile load_problem_text(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(Errc::io, std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("ring"))
        fail(Errc::io, "problem file must be an object with a 'ring' section");

    const json& ring = doc["ring"];
    if (!ring.contains("variables") || !ring["variables"].is_array() ||
        !ring.contains("potential") || !ring["potential"].is_string())
        fail(Errc::io, "'ring' needs 'variables' (array) and 'potential' (string)");
    Vars names;
    for (const auto& v : ring["variables"]) {
        if (!v.is_string())
            fail(Errc::io, "ring variables must be strings");
        names.push_back(v.get<std::string>());
    }

    ProblemFile pf;
    pf.ring = make_ring(std::move(names), ring["potential"].get<std::string>());

    if (doc.contains("factorizations")) {
        if (!doc["factorizations"].is_object())
            fail(Errc::io, "'factorizations' must be an object");
        for (const auto& [name, body] : doc["factorizations"].items()) {
            if (!body.contains("phi") || !body.contains("psi"))
                fail(Errc::io, "factorization '" + name + "' needs 'phi' and 'psi'");
            PolyMat phi = parse_matrix(body["phi"], pf.ring.vars, "'" + name + "'.phi");
            PolyMat psi = parse_matrix(body["psi"], pf.ring.vars, "'" + name + "'.psi");
            pf.factorizations.emplace(
                name, validate_mf(pf.ring, std::move(phi), std::move(psi), name));
        }
    }

    if (doc.contains("morphisms")) {
        if (!doc["morphisms"].is_object())
            fail(Errc::io, "'morphisms' must be an object");
        for (const auto& [name, body] : doc["morphisms"].items()) {
            for (const char* key : {"source", "target", "parity", "matrix"})
                if (!body.contains(key))
                    fail(Errc::io, "morphism '" + name + "' needs '" + key + "'");
            const MatrixFactorization& src =
                pf.factorization(body["source"].get<std::string>());
            const MatrixFactorization& tgt =
                pf.factorization(body["target"].get<std::string>());
            std::string parity_name = body["parity"].get<std::string>();
            Parity parity;
            if (parity_name == "even")
                parity = Parity::Even;
            else if (parity_name == "odd")
                parity = Parity::Odd;
            else
                fail(Errc::io, "morphism '" + name + "': parity must be 'even' or 'odd'");
            PolyMat grid = parse_matrix(body["matrix"], pf.ring.vars, "'" + name + "'.matrix");
            SuperMatrix mat = SuperMatrix::from_entries(std::move(grid), tgt.rank, tgt.rank,
                                                        src.rank, src.rank, parity);
            pf.morphisms.emplace(name, make_morphism(src, tgt, std::move(mat)));
        }
    }
    return pf;
}

ProblemFile load_problem_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::io, "cannot open problem file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_problem_text(buf.str());
}

} // namespace mfwb
