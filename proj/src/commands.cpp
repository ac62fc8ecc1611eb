#include "commands.hpp"

#include <json.hpp>

#include "acceptance.hpp"
#include "bulk.hpp"
#include "error.hpp"
#include "koszul.hpp"

namespace mfwb {

using nlohmann::json;

namespace {

struct Options {
    std::string command;
    std::vector<std::string> positional;
    std::string format = "text";
    int trunc = 0;
    int cap = 0;
    int count = 200;
    bool oracle = false;
};

Options parse_args(const std::vector<std::string>& args)
{
    if (args.empty())
        fail(Errc::io, "missing command");
    Options o;
    o.command = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto int_value = [&](const char* flag) {
            if (++i >= args.size())
                fail(Errc::io, std::string(flag) + " needs a value");
            try {
                return std::stoi(args[i]);
            } catch (...) {
                fail(Errc::io, std::string(flag) + " needs an integer value");
            }
        };
        if (a == "--format") {
            if (++i >= args.size() || (args[i] != "text" && args[i] != "json"))
                fail(Errc::io, "--format needs 'text' or 'json'");
            o.format = args[i];
        } else if (a == "--trunc") {
            o.trunc = int_value("--trunc");
        } else if (a == "--cap") {
            o.cap = int_value("--cap");
        } else if (a == "--count") {
            o.count = int_value("--count");
        } else if (a == "--oracle") {
            o.oracle = true;
        } else if (a.rfind("--", 0) == 0) {
            fail(Errc::io, "unknown flag '" + a + "'");
        } else {
            o.positional.push_back(a);
        }
    }
    return o;
}

const ProblemFile& need_problem(const ProblemFile* p)
{
    if (!p)
        fail(Errc::io, "this command needs a problem file");
    return *p;
}

const std::string& positional(const Options& o, size_t k, const char* what)
{
    if (k >= o.positional.size())
        fail(Errc::io, std::string("missing argument: ") + what);
    return o.positional[k];
}

json matrix_json(const PolyMat& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const SuperMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json milnor_element_json(const MilnorElement& v, const MilnorContext& mc)
{
    json out = json::object();
    for (size_t k = 0; k < v.coords.size(); ++k)
        out[mc.basis_monomial(static_cast<int>(k)).to_string()] = v.coords[k].to_string();
    return out;
}

json cohomology_json(const CohomologyReport& rep)
{
    json out;
    out["h0"] = rep.h0;
    out["h1"] = rep.h1;
    json evens = json::array(), odds = json::array();
    for (const Morphism& m : rep.reps_even)
        evens.push_back(matrix_json(m.mat));
    for (const Morphism& m : rep.reps_odd)
        odds.push_back(matrix_json(m.mat));
    out["representatives"] = {{"even", evens}, {"odd", odds}};
    json traj = json::array();
    for (const auto& [d, hs] : rep.trajectory)
        traj.push_back({{"trunc", d}, {"h0", hs.first}, {"h1", hs.second}});
    out["stabilization"] = {{"trunc", rep.trunc_used}, {"trajectory", traj}};
    return out;
}

void render_text(const json& v, const std::string& key, int indent, std::string& out)
{
    std::string pad(indent, ' ');
    if (v.is_object()) {
        if (!key.empty())
            out += pad + key + ":\n";
        for (const auto& [k, sub] : v.items())
            render_text(sub, k, key.empty() ? indent : indent + 2, out);
    } else if (v.is_array()) {
        bool flat = true;
        for (const auto& e : v)
            if (e.is_object() || e.is_array())
                flat = false;
        if (flat) {
            out += pad + key + ": " + v.dump() + "\n";
        } else {
            out += pad + key + ":\n";
            std::string pad2(indent + 2, ' ');
            for (const auto& e : v) {
                if (e.is_object()) {
                    out += pad2 + "-\n";
                    for (const auto& [k, sub] : e.items())
                        render_text(sub, k, indent + 4, out);
                } else {
                    out += pad2 + "- " + e.dump() + "\n";
                }
            }
        }
    } else {
        out += pad + key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
}

CommandResult render(const json& report, const Options& o, int code)
{
    CommandResult res;
    res.exit_code = code;
    if (o.format == "json") {
        res.output = report.dump(2) + "\n";
    } else {
        std::string out;
        render_text(report, "", 0, out);
        res.output = out;
    }
    return res;
}

json command_report(const std::string& command)
{
    json report;
    report["schema"] = "mfwb/1";
    report["command"] = command;
    return report;
}

} // namespace

CommandResult run_command(const ProblemFile* problem, const std::vector<std::string>& args)
{
    Options o;
    try {
        o = parse_args(args);
    } catch (const Error& e) {
        json report = command_report(args.empty() ? "" : args[0]);
        report["error"] = {{"kind", "io"}, {"message", e.what()}};
        CommandResult res;
        res.exit_code = static_cast<int>(e.kind());
        res.output = report.dump(2) + "\n";
        return res;
    }

    json report = command_report(o.command);
    try {
        if (o.command == "validate") {
            const ProblemFile& pf = need_problem(problem);
            // Everything validated on load; report what is in the file.
            json facts = json::object();
            for (const auto& [name, mf] : pf.factorizations)
                facts[name] = {{"rank", mf.rank}, {"valid", true}};
            report["result"] = {{"ok", true},
                                {"potential", pf.ring.w.to_string()},
                                {"factorizations", facts},
                                {"morphisms", static_cast<int>(pf.morphisms.size())}};
        } else if (o.command == "milnor") {
            const ProblemFile& pf = need_problem(problem);
            MilnorContext mc = MilnorContext::build(pf.ring, o.cap > 0 ? o.cap : 50);
            json basis = json::array();
            for (int k = 0; k < mc.mu(); ++k)
                basis.push_back(mc.basis_monomial(k).to_string());
            report["result"] = {{"mu", mc.mu()}, {"basis", basis}};
            json diag = {{"stabilized_degree", mc.stabilized_degree()}};
            if (mc.smooth())
                diag["warning"] = "potential has a nonzero linear part (smooth point)";
            report["diagnostics"] = diag;
        } else if (o.command == "residue") {
            const ProblemFile& pf = need_problem(problem);
            Polynomial g = parse_polynomial(positional(o, 0, "expression"), pf.ring.vars);
            MilnorContext mc = MilnorContext::build(pf.ring, o.cap > 0 ? o.cap : 50);
            PowerWitness w = o.cap > 0 ? power_witness(mc, o.cap) : power_witness(mc);
            report["inputs"] = {{"g", g.to_string()}};
            report["result"] = {{"N", w.N},
                                {"residue", residue_with_witness(g, mc, w).to_string()}};
        } else if (o.command == "cohom") {
            const ProblemFile& pf = need_problem(problem);
            const MatrixFactorization& x = pf.factorization(positional(o, 0, "X"));
            const MatrixFactorization& y = pf.factorization(positional(o, 1, "Y"));
            MilnorContext mc = MilnorContext::build(pf.ring);
            CohomologyReport rep =
                hom_cohomology(x, y, mc, o.trunc, o.cap > 0 ? o.cap : 40);
            report["inputs"] = {{"X", positional(o, 0, "X")}, {"Y", positional(o, 1, "Y")}};
            report["result"] = cohomology_json(rep);
        } else if (o.command == "pair") {
            const ProblemFile& pf = need_problem(problem);
            const Morphism& f = pf.morphism(positional(o, 0, "F"));
            const Morphism& g = pf.morphism(positional(o, 1, "G"));
            MilnorContext mc = MilnorContext::build(pf.ring);
            report["inputs"] = {{"F", positional(o, 0, "F")}, {"G", positional(o, 1, "G")}};
            report["result"] = {{"value", kl_pairing(f, g, mc, o.oracle).to_string()}};
        } else if (o.command == "gram") {
            const ProblemFile& pf = need_problem(problem);
            const MatrixFactorization& x = pf.factorization(positional(o, 0, "X"));
            const MatrixFactorization& y = pf.factorization(positional(o, 1, "Y"));
            MilnorContext mc = MilnorContext::build(pf.ring);
            GramReport rep =
                gram_matrix(x, y, mc, o.trunc, o.cap > 0 ? o.cap : 40, o.oracle);
            json rows = json::array();
            for (int i = 0; i < rep.matrix.rows(); ++i) {
                json row = json::array();
                for (int j = 0; j < rep.matrix.cols(); ++j)
                    row.push_back(rep.matrix.at(i, j).to_string());
                rows.push_back(std::move(row));
            }
            json rp = json::array(), cp = json::array();
            for (Parity p : rep.row_parities)
                rp.push_back(parity_name(p));
            for (Parity p : rep.col_parities)
                cp.push_back(parity_name(p));
            report["inputs"] = {{"X", positional(o, 0, "X")}, {"Y", positional(o, 1, "Y")}};
            report["result"] = {{"matrix", rows},
                                {"det", rep.determinant.to_string()},
                                {"nondegenerate", rep.nondegenerate},
                                {"row_parities", rp},
                                {"col_parities", cp}};
        } else if (o.command == "chern") {
            const ProblemFile& pf = need_problem(problem);
            const MatrixFactorization& x = pf.factorization(positional(o, 0, "X"));
            MilnorContext mc = MilnorContext::build(pf.ring);
            MilnorElement ch = chern(x, mc, o.oracle);
            report["inputs"] = {{"X", positional(o, 0, "X")}};
            report["result"] = {{"coordinates", milnor_element_json(ch, mc)}};
        } else if (o.command == "bb") {
            const ProblemFile& pf = need_problem(problem);
            const Morphism& f = pf.morphism(positional(o, 0, "F"));
            MilnorContext mc = MilnorContext::build(pf.ring);
            MilnorElement v = boundary_bulk(f, mc, o.oracle);
            bool closed = is_closed(f);
            report["inputs"] = {{"F", positional(o, 0, "F")}};
            report["result"] = {{"coordinates", milnor_element_json(v, mc)},
                                {"closed", closed}};
            if (!closed)
                report["diagnostics"] = {
                    {"warning", "morphism is not closed; the value is not a class"}};
        } else if (o.command == "hrr") {
            const ProblemFile& pf = need_problem(problem);
            const MatrixFactorization& x = pf.factorization(positional(o, 0, "X"));
            const MatrixFactorization& y = pf.factorization(positional(o, 1, "Y"));
            MilnorContext mc = MilnorContext::build(pf.ring);
            HrrReport rep =
                hrr_check(x, y, mc, o.trunc, o.cap > 0 ? o.cap : 40, o.oracle);
            report["inputs"] = {{"X", positional(o, 0, "X")}, {"Y", positional(o, 1, "Y")}};
            report["result"] = {{"chi", rep.chi},
                                {"pairing", rep.pairing.to_string()},
                                {"match", rep.match}};
        } else if (o.command == "koszul-check") {
            const ProblemFile& pf = need_problem(problem);
            KoszulSuiteResult res = koszul_property_suite(pf.ring, o.count, 1234);
            report["result"] = {{"n", res.n},
                                {"forms", res.forms},
                                {"all_passed", res.all()},
                                {"checks",
                                 {{"anticommute", res.anticommute},
                                  {"taylor", res.taylor},
                                  {"commute_with_p", res.commute_with_p},
                                  {"projection", res.projection},
                                  {"contraction", res.contraction},
                                  {"recursion_matches_explicit",
                                   res.recursion_matches_explicit},
                                  {"pr_chain_map", res.pr_chain_map},
                                  {"delta_stab", res.delta_stab_ok}}}};
            if (!res.all())
                return render(report, o, 2);
        } else if (o.command == "eta-check") {
            const ProblemFile& pf = need_problem(problem);
            const MatrixFactorization& x = pf.factorization(positional(o, 0, "X"));
            EtaReport rep = eta_check(x, o.oracle);
            report["inputs"] = {{"X", positional(o, 0, "X")}};
            report["result"] = {{"verdict", rep.pass ? "pass" : "fail"},
                                {"eta_top_mod_delta", matrix_json(rep.eta_top_reduced)},
                                {"reference", matrix_json(rep.reference)}};
            if (!rep.pass)
                return render(report, o, 2);
        } else if (o.command == "bpl-check") {
            const ProblemFile& pf = need_problem(problem);
            int trunc = o.trunc > 0 ? o.trunc : 4;
            json facts = json::object();
            for (const auto& [name, mf] : pf.factorizations) {
                DeltaStabRetract r = make_delta_stab_retract(mf, trunc);
                bpl_perturb(r.datum, r.delta);
                facts[name] = "ok";
            }
            report["result"] = {{"trunc", trunc}, {"factorizations", facts}};
        } else if (o.command == "corpus") {
            std::vector<CriterionResult> results = run_acceptance();
            json lines = json::array();
            bool all = true;
            for (const CriterionResult& r : results) {
                lines.push_back({{"id", r.id},
                                 {"name", r.name},
                                 {"pass", r.pass},
                                 {"seconds", r.seconds},
                                 {"budget_seconds", r.budget_seconds},
                                 {"detail", r.detail}});
                all = all && r.pass;
            }
            report["result"] = {{"criteria", lines}, {"all_passed", all}};
            if (!all)
                return render(report, o, 2);
        } else {
            fail(Errc::io, "unknown command '" + o.command + "'");
        }
        return render(report, o, 0);
    } catch (const Error& e) {
        const char* kind = e.kind() == Errc::validation ? "validation"
                           : e.kind() == Errc::compute  ? "compute"
                                                        : "io";
        report["error"] = {{"kind", kind}, {"message", e.what()}};
        return render(report, o, static_cast<int>(e.kind()));
    } catch (const std::exception& e) {
        report["error"] = {{"kind", "compute"}, {"message", e.what()}};
        return render(report, o, 2);
    }
}

} // namespace mfwb
