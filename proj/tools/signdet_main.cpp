#include "signdet/coredet.hpp"
#include "signdet/detsign.hpp"
#include "signdet/jacobian.hpp"
#include "signdet/json_io.hpp"
#include "signdet/symexpand.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotSquare = 2;
constexpr int kExitOracleMismatch = 3;

struct CommonOpts {
    std::string file;
    std::string format = "auto";
    std::int64_t limit = signdet::kEnumerationCap;
    bool pretty = false;
    bool json = true;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("file", o.file, "matrix file (CSV or JSON)")->required();
    cmd->add_option("--format", o.format, "input format: csv or json")
        ->check(CLI::IsMember({"auto", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--limit", o.limit, "enumeration cap for graph searches")
        ->envname("SIGNDET_LIMIT")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json, "emit the report as JSON (default)");
    cmd->add_flag("--pretty", o.pretty, "indent the JSON report");
}

signdet::RationalMatrix load_matrix(const CommonOpts& o) {
    std::ifstream in(o.file);
    if (!in) throw signdet::ParseError("cannot open " + o.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    signdet::MatrixFormat format = signdet::MatrixFormat::Csv;
    if (o.format == "json") format = signdet::MatrixFormat::Json;
    else if (o.format == "auto" && o.file.size() > 5 &&
             o.file.substr(o.file.size() - 5) == ".json") {
        format = signdet::MatrixFormat::Json;
    }
    return signdet::parse_matrix(buf.str(), format);
}

int run_detsign(const CommonOpts& o, bool oracle) {
    signdet::RationalMatrix m = load_matrix(o);
    signdet::SignPattern p = signdet::sign_pattern_of(m);
    if (p.rows() != p.cols()) {
        throw signdet::NotSquare("determinant census needs a square matrix");
    }
    signdet::Classification c = signdet::classify(p);
    std::cout << signdet::detsign_report_json(c, o.pretty) << "\n";
    if (oracle) {
        signdet::SignCounts direct = signdet::sign_counts(signdet::det_expansion(p));
        if (!(direct == c.counts)) {
            std::cerr << "oracle mismatch: expansion gives t=" << direct.t
                      << " m_plus=" << direct.m_plus
                      << " m_minus=" << direct.m_minus << "\n";
            return kExitOracleMismatch;
        }
    }
    return kExitOk;
}

signdet::DependencePattern load_dependence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw signdet::ParseError("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw signdet::ParseError(std::string("invalid dependence JSON: ") + e.what());
    }
    if (!doc.is_array()) throw signdet::ParseError("dependence must be an array of rows");
    signdet::DependencePattern d;
    for (const auto& row : doc) {
        if (!row.is_array()) throw signdet::ParseError("dependence rows must be arrays");
        std::vector<bool> r;
        for (const auto& cell : row) {
            if (cell.is_boolean()) r.push_back(cell.get<bool>());
            else if (cell.is_number_integer()) r.push_back(cell.get<int>() != 0);
            else throw signdet::ParseError("dependence cells must be booleans or 0/1");
        }
        d.push_back(std::move(r));
    }
    return d;
}

int run_jacobian(const CommonOpts& o, const std::string& dependence_file) {
    signdet::RationalMatrix s = load_matrix(o);
    signdet::DependencePattern d = dependence_file.empty()
                                       ? signdet::canonical_dependence(s)
                                       : load_dependence(dependence_file);
    signdet::ReactionFormResult rf = signdet::classify_reaction_form(s, d);
    signdet::JacobianSignResult js = signdet::jacobian_sign_pattern(s);
    std::cout << signdet::jacobian_report_json(rf, js, o.pretty) << "\n";
    return kExitOk;
}

int run_coredet(const CommonOpts& o, const signdet::CoreDetOptions& opts, bool oracle) {
    signdet::RationalMatrix s = load_matrix(o);
    signdet::CoreDetReport report = signdet::core_det_report(s, opts);
    std::cout << signdet::coredet_report_json(report, o.pretty) << "\n";
    if (oracle) {
        signdet::MultilinearPoly direct = signdet::core_determinant_oracle(s);
        if (!(direct == report.cd)) {
            std::cerr << "oracle mismatch: characteristic extraction gives "
                      << signdet::poly_to_json(direct) << "\n";
            return kExitOracleMismatch;
        }
    }
    return kExitOk;
}

int run_graph(const CommonOpts& o, const std::string& dot_file) {
    signdet::RationalMatrix m = load_matrix(o);
    signdet::SignedBipartiteGraph g = signdet::build_graph(m);
    std::cout << signdet::graph_report_json(g, o.limit, o.pretty) << "\n";
    if (!dot_file.empty()) {
        std::ofstream out(dot_file);
        if (!out) throw signdet::ParseError("cannot write " + dot_file);
        out << signdet::to_dot(g);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign pattern and network determinant analyzer"};
    app.require_subcommand(1);

    CommonOpts detsign_opts;
    bool detsign_oracle = false;
    CLI::App* detsign = app.add_subcommand(
        "detsign", "term-sign census and class of a square matrix determinant");
    add_common(detsign, detsign_opts);
    detsign->add_flag("--oracle", detsign_oracle,
                      "cross-check against full symbolic expansion");

    CommonOpts jacobian_opts;
    std::string dependence_file;
    CLI::App* jacobian = app.add_subcommand(
        "jacobian", "reaction form and Jacobian sign pattern of a stoichiometry");
    add_common(jacobian, jacobian_opts);
    jacobian->add_option("--dependence", dependence_file,
                         "JSON file with the rate dependence pattern "
                         "(defaults to dependence on consumed species)");

    CommonOpts coredet_opts;
    signdet::CoreDetOptions coredet_sections;
    coredet_sections.with_bounds = false;
    coredet_sections.with_zero_one = false;
    bool coredet_oracle = false;
    CLI::App* coredet = app.add_subcommand(
        "coredet", "core determinant analysis of a stoichiometric matrix");
    add_common(coredet, coredet_opts);
    coredet->add_flag("--cfd", coredet_sections.with_cfd,
                      "include the full minor-sum determinant at t=1");
    coredet->add_flag("--bounds", coredet_sections.with_bounds,
                      "include anomalous term bounds");
    coredet->add_flag("--zero-one", coredet_sections.with_zero_one,
                      "include the anomalous-count verdict");
    coredet->add_flag("--oracle", coredet_oracle,
                      "cross-check against characteristic extraction");

    CommonOpts graph_opts;
    std::string dot_file;
    CLI::App* graph = app.add_subcommand(
        "graph", "bipartite graph summary of a matrix");
    add_common(graph, graph_opts);
    graph->add_option("--dot", dot_file, "write a Graphviz rendering here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (detsign->parsed()) return run_detsign(detsign_opts, detsign_oracle);
        if (jacobian->parsed()) return run_jacobian(jacobian_opts, dependence_file);
        if (coredet->parsed())
            return run_coredet(coredet_opts, coredet_sections, coredet_oracle);
        if (graph->parsed()) return run_graph(graph_opts, dot_file);
    } catch (const signdet::NotSquare& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotSquare;
    } catch (const signdet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
