#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ngsemi/constructions.hpp"
#include "ngsemi/enumeration.hpp"
#include "ngsemi/error.hpp"
#include "ngsemi/ideals.hpp"
#include "ngsemi/nearly.hpp"
#include "ngsemi/rfmat.hpp"
#include "ngsemi/semigroup.hpp"
#include "ngsemi/serialize.hpp"

namespace ngsemi::cli {

using nlohmann::json;

std::vector<long long> parse_generator_tokens(const std::vector<std::string>& tokens) {
    std::vector<long long> out;
    for (const auto& token : tokens) {
        std::stringstream pieces(token);
        std::string piece;
        while (std::getline(pieces, piece, ',')) {
            piece.erase(std::remove_if(piece.begin(), piece.end(), [](unsigned char c) { return std::isspace(c); }),
                        piece.end());
            if (piece.empty()) continue;
            long long value = 0;
            const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (ec != std::errc{} || end != piece.data() + piece.size())
                throw Error(ErrorCode::InvalidArgument, "not an integer: '" + piece + "'");
            out.push_back(value);
        }
    }
    if (out.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
    return out;
}

namespace {

struct Envelope {
    std::string command;
    json input = json::object();
    json result = nullptr;
    std::vector<std::string> warnings;
    std::optional<Error> error;
};

std::string join(const std::vector<Int>& values, const char* sep = ",") {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
    return out.str();
}

NumericalSemigroup semigroup_from(const std::vector<std::string>& tokens) {
    const auto raw = parse_generator_tokens(tokens);
    const std::vector<Int> gens(raw.begin(), raw.end());
    return NumericalSemigroup::from_generators(gens);
}

json hierarchy_flags(const HierarchyReport& h) {
    return {{"symmetric", h.symmetric},
            {"almost_symmetric", h.almost_symmetric},
            {"nearly_gorenstein", h.nearly_gorenstein},
            {"canonical_reduction", h.canonical_reduction}};
}

std::string flag_line(const HierarchyReport& h) {
    std::ostringstream out;
    out << "symmetric=" << h.symmetric << " almost_symmetric=" << h.almost_symmetric
        << " nearly_gorenstein=" << h.nearly_gorenstein << " canonical_reduction=" << h.canonical_reduction;
    return out.str();
}

// ---- analyze ---------------------------------------------------------------

int analyze(const std::vector<std::string>& tokens, Envelope& env, std::ostream& text) {
    const auto s = semigroup_from(tokens);
    env.input = {{"generators", parse_generator_tokens(tokens)}};
    const auto h = hierarchy(s);
    const auto wilf = wilf_check(s);
    const bool by_trace = ng_by_trace(s);
    env.result = {{"generators", s.generators()},
                  {"embedding_dimension", s.embedding_dimension()},
                  {"multiplicity", s.multiplicity()},
                  {"frobenius", s.frobenius()},
                  {"genus", s.genus()},
                  {"conductor", s.conductor()},
                  {"gaps", gaps(s)},
                  {"apery", s.apery()},
                  {"pseudo_frobenius", s.pseudo_frobenius()},
                  {"type", h.type},
                  {"hierarchy", hierarchy_flags(h)},
                  {"nearly_gorenstein_by_trace", by_trace},
                  {"ng_vector_count", h.ng_vector_count},
                  {"wilf", wilf}};
    if (h.ng_vector_count == std::numeric_limits<std::size_t>::max())
        env.warnings.push_back("ng_vector_count saturated");

    text << "semigroup            " << to_string(s) << '\n'
         << "embedding dimension  " << s.embedding_dimension() << '\n'
         << "multiplicity         " << s.multiplicity() << '\n'
         << "frobenius            " << s.frobenius() << '\n'
         << "genus                " << s.genus() << '\n'
         << "gaps                 [" << join(gaps(s)) << "]\n"
         << "pseudo-frobenius     [" << join(s.pseudo_frobenius()) << "]\n"
         << "type                 " << h.type << '\n'
         << "flags                " << flag_line(h) << '\n'
         << "ng by trace          " << by_trace << '\n'
         << "ng-vector count      " << h.ng_vector_count << '\n'
         << "wilf                 n=" << wilf.n_count << " holds_fgh=" << wilf.holds_fgh
         << " holds_wilf=" << wilf.holds_wilf << '\n';

    const bool consistent = h.consistent() && by_trace == h.nearly_gorenstein;
    if (!consistent) env.warnings.push_back("hierarchy implications violated");
    return consistent ? exit_ok : exit_violation;
}

// ---- ng-vectors ------------------------------------------------------------

json structure_json(const NGVectorStructure& st) {
    json j = {{"first_entry_is_frobenius", st.starts_with_frobenius},
              {"all_equal_frobenius", st.all_equal_frobenius()},
              {"conforms", st.conforms()}};
    j["i"] = st.first_deviation ? json(*st.first_deviation + 1) : json(nullptr);
    j["l"] = st.witness ? json(*st.witness + 1) : json(nullptr);
    return j;
}

int ng_vectors_cmd(const std::vector<std::string>& tokens, std::size_t limit, Envelope& env, std::ostream& text) {
    const auto s = semigroup_from(tokens);
    env.input = {{"generators", parse_generator_tokens(tokens)}, {"limit", limit}};
    Limits limits;
    limits.max_ng_vectors = limit;
    const auto vectors = ng_vectors(s, limits);
    const auto h = hierarchy(s);

    json list = json::array();
    bool all_conform = true;
    text << "semigroup " << to_string(s) << "  PF=[" << join(s.pseudo_frobenius()) << "]\n"
         << "flags " << flag_line(h) << '\n'
         << vectors.size() << " NG-vector(s)\n";
    for (const auto& v : vectors) {
        const auto st = verify_ng_vector_structure(s, v);
        all_conform = all_conform && st.conforms();
        list.push_back({{"entries", v.entries}, {"structure", structure_json(st)}});
        text << "  (" << join(v.entries) << ")  ";
        if (st.all_equal_frobenius()) text << "all entries equal F";
        else if (st.witness)
            text << "f_" << *st.first_deviation + 1 << " = F - n_" << *st.first_deviation + 1 << " + n_"
                 << *st.witness + 1;
        else text << "no witness for f_" << *st.first_deviation + 1;
        text << '\n';
    }
    env.result = {{"generators", s.generators()},
                  {"pseudo_frobenius", s.pseudo_frobenius()},
                  {"nearly_gorenstein", h.nearly_gorenstein},
                  {"hierarchy", hierarchy_flags(h)},
                  {"count", vectors.size()},
                  {"vectors", list}};
    return all_conform ? exit_ok : exit_violation;
}

// ---- rf --------------------------------------------------------------------

void print_matrix(std::ostream& text, const RFMatrix& m) {
    for (const auto& row : m.entries) text << "    [" << join(row, " ") << "]\n";
}

int rf_cmd(const std::vector<std::string>& tokens, Int f, bool minus, const std::vector<Int>& vector_entries,
           Envelope& env, std::ostream& text) {
    const auto s = semigroup_from(tokens);
    env.input = {{"generators", parse_generator_tokens(tokens)}, {"f", f}, {"minus", minus}};
    if (!vector_entries.empty()) env.input["ng_vector"] = vector_entries;

    const auto plus = rf_plus_matrices(s, f);
    text << "semigroup " << to_string(s) << "  f=" << f << '\n';

    if (!minus) {
        text << plus.size() << " RF+ matrix(es)\n";
        for (const auto& m : plus) {
            print_matrix(text, m);
            text << '\n';
        }
        json coppie = nullptr;
        bool pass = true;
        if (is_nearly_gorenstein(s)) {
            const auto violation = find_coppie_violation(s);
            pass = !violation;
            coppie = {{"scope", "all NG-vectors"}, {"pass", pass}};
            text << "coppie (all NG-vectors): " << (pass ? "pass" : "FAIL") << '\n';
        }
        env.result = {{"kind", "plus"}, {"f", f}, {"count", plus.size()}, {"matrices", plus}, {"coppie", coppie}};
        return pass ? exit_ok : exit_violation;
    }

    if (vector_entries.empty()) throw Error(ErrorCode::InvalidArgument, "--minus requires --ng-vector");
    const NGVector v{vector_entries};
    const auto minus_matrices = rf_minus_matrices(s, v, f);
    std::size_t pairs = 0;
    bool pass = true;
    for (const auto& a : plus)
        for (const auto& b : minus_matrices) {
            ++pairs;
            pass = pass && check_coppie(a, b);
        }
    text << minus_matrices.size() << " RF- matrix(es) for NG-vector (" << join(vector_entries) << ")\n";
    for (const auto& m : minus_matrices) {
        print_matrix(text, m);
        text << '\n';
    }
    text << "coppie over " << pairs << " pair(s): " << (pass ? "pass" : "FAIL") << '\n';
    env.result = {{"kind", "minus"},
                  {"f", f},
                  {"ng_vector", vector_entries},
                  {"count", minus_matrices.size()},
                  {"matrices", minus_matrices},
                  {"plus_count", plus.size()},
                  {"coppie", {{"scope", "given NG-vector"}, {"pairs", pairs}, {"pass", pass}}}};
    return pass ? exit_ok : exit_violation;
}

// ---- construct ---------------------------------------------------------------

int report_construction(const Construction& c, Envelope& env, std::ostream& text) {
    const auto& s = c.semigroup;
    const auto h = hierarchy(s);
    const bool agree = c.formula_pseudo_frobenius == s.pseudo_frobenius();
    env.result = {{"generators", s.generators()},
                  {"frobenius", s.frobenius()},
                  {"pseudo_frobenius", s.pseudo_frobenius()},
                  {"formula_pseudo_frobenius", c.formula_pseudo_frobenius},
                  {"formula_matches", agree},
                  {"type", h.type},
                  {"hierarchy", hierarchy_flags(h)}};
    text << "semigroup    " << to_string(s) << '\n'
         << "PF direct    [" << join(s.pseudo_frobenius()) << "]\n"
         << "PF formula   [" << join(c.formula_pseudo_frobenius) << "]  " << (agree ? "agree" : "DISAGREE") << '\n'
         << "flags        " << flag_line(h) << '\n';
    return agree ? exit_ok : exit_violation;
}

int gas_cmd(const GASSpec& spec, Envelope& env, std::ostream& text) {
    env.input = {{"a", spec.a}, {"s", spec.s}, {"d", spec.d}, {"n", spec.n}};
    const auto s = gas(spec);
    const bool predicted = gas_ng_predicted(spec);
    const auto h = hierarchy(s);
    const bool agree = predicted == h.nearly_gorenstein;
    env.result = {{"generators", s.generators()},
                  {"frobenius", s.frobenius()},
                  {"pseudo_frobenius", s.pseudo_frobenius()},
                  {"type", h.type},
                  {"hierarchy", hierarchy_flags(h)},
                  {"predicted_nearly_gorenstein", predicted},
                  {"actual_nearly_gorenstein", h.nearly_gorenstein},
                  {"prediction_matches", agree}};
    text << "semigroup     " << to_string(s) << '\n'
         << "PF            [" << join(s.pseudo_frobenius()) << "]\n"
         << "predicted NG  " << predicted << '\n'
         << "actual NG     " << h.nearly_gorenstein << "  " << (agree ? "agree" : "DISAGREE") << '\n'
         << "flags         " << flag_line(h) << '\n';
    return agree ? exit_ok : exit_violation;
}

// ---- verify ------------------------------------------------------------------

int verify_cmd(const std::string& id_text, std::optional<int> max_genus, unsigned threads,
               const std::string& csv_path, Envelope& env, std::ostream& text) {
    const auto id = parse_theorem_id(id_text);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown theorem id '" + id_text + "'");
    const int genus = max_genus.value_or(default_max_genus(*id));
    env.input = {{"theorem_id", id_text}, {"max_genus", genus}, {"threads", threads}};
    if (!csv_path.empty()) env.input["witness_csv"] = csv_path;

    const auto report = verify(*id, genus, threads);
    env.result = report;
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw Error(ErrorCode::InvalidArgument, "cannot write " + csv_path);
        write_witness_csv(csv, report);
    }

    text << "theorem             " << id_text << '\n'
         << "max genus           " << genus << '\n'
         << "scanned             " << report.scanned << '\n'
         << "matched hypothesis  " << report.matched_hypothesis << '\n'
         << "violations          " << report.violations.size() << '\n'
         << "notable             " << report.notable.size() << '\n';
    for (const auto& [key, count] : report.tallies) text << "  " << key << " = " << count << '\n';
    for (const auto& w : report.violations) text << "  violation <" << join(w.generators) << ">: " << w.reason << '\n';
    for (const auto& w : report.notable) text << "  notable <" << join(w.generators) << ">: " << w.reason << '\n';
    text << "elapsed             " << report.elapsed.count() << " s\n";
    return report.violations.empty() ? exit_ok : exit_violation;
}

json envelope_json(const Envelope& env) {
    json j = {{"schema", schema_version},
              {"command", env.command},
              {"input_echo", env.input},
              {"result", env.result},
              {"warnings", env.warnings}};
    if (env.error)
        j["error"] = {{"code", std::string(to_string(env.error->code()))}, {"message", env.error->what()}};
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical semigroup analysis: nearly Gorenstein checks, RF-matrices, constructions, sweeps",
                 "ngsemi"};
    app.require_subcommand(1);

    bool json_output = false;
    std::vector<std::string> gens;
    std::size_t limit = Limits{}.max_ng_vectors;
    Int f = 0;
    bool minus = false;
    std::vector<Int> ng_vector;
    std::string s1_text, s2_text;
    Int glue_x = 0, glue_y = 0, dilation = 1;
    GASSpec gas_spec;
    std::string theorem;
    std::optional<int> max_genus;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string csv_path;

    const auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", json_output, "Emit the versioned JSON envelope")->envname("NGSEMI_JSON");
    };

    auto* analyze_app = app.add_subcommand("analyze", "Invariants and hierarchy flags of <gens>");
    analyze_app->add_option("generators", gens, "Generators (space or comma separated)")->required();
    add_json(analyze_app);

    auto* ng_app = app.add_subcommand("ng-vectors", "All NG-vectors with their structure annotation");
    ng_app->add_option("generators", gens)->required();
    ng_app->add_option("--limit", limit, "Maximum number of vectors")->envname("NGSEMI_LIMIT");
    add_json(ng_app);

    auto* rf_app = app.add_subcommand("rf", "RF+ / RF- matrices for a pseudo-Frobenius number");
    rf_app->add_option("generators", gens)->required();
    rf_app->add_option("--f", f, "Pseudo-Frobenius number")->required();
    rf_app->add_flag("--minus", minus, "Print RF- matrices for --ng-vector");
    rf_app->add_option("--ng-vector", ng_vector, "NG-vector entries")->expected(1, -1);
    add_json(rf_app);

    auto* construct_app = app.add_subcommand("construct", "Gluing, dilation and generalized arithmetic sequences");
    construct_app->require_subcommand(1);
    add_json(construct_app);
    auto* glue_app = construct_app->add_subcommand("glue", "<x S1, y S2>");
    glue_app->add_option("--s1", s1_text, "Generators of S1, comma separated")->required();
    glue_app->add_option("--s2", s2_text, "Generators of S2, comma separated")->required();
    glue_app->add_option("--x", glue_x, "Element of S2 (not a minimal generator) multiplying S1")->required();
    glue_app->add_option("--y", glue_y, "Element of S1 (not a minimal generator) multiplying S2")->required();
    add_json(glue_app);
    auto* dilate_app = construct_app->add_subcommand("dilate", "<d n_1, ..., d n_{v-1}, n_v>");
    dilate_app->add_option("generators", gens)->required();
    dilate_app->add_option("--d", dilation, "Factor applied to every generator except the largest")->required();
    add_json(dilate_app);
    auto* gas_app = construct_app->add_subcommand("gas", "<a, sa+d, ..., sa+nd>");
    gas_app->add_option("--a", gas_spec.a, "First term")->required();
    gas_app->add_option("--s", gas_spec.s, "Multiplier of a in the later terms")->required();
    gas_app->add_option("--d", gas_spec.d, "Common difference")->required();
    gas_app->add_option("--n", gas_spec.n, "Index of the last term")->required();
    add_json(gas_app);

    auto* verify_app = app.add_subcommand("verify", "Exhaustive sweep over the semigroup tree");
    verify_app->add_option("theorem", theorem,
                           "type-bound-dim4 | coprimality | hierarchy | distinct-corollary | "
                           "type-bound-dim5 | type-vs-embdim | canonical-reduction-dim4")
        ->required();
    verify_app->add_option("--max-genus", max_genus, "Genus budget")->envname("NGSEMI_MAX_GENUS");
    verify_app->add_option("--threads", threads, "Worker threads")->envname("NGSEMI_THREADS");
    verify_app->add_option("--witness-csv", csv_path, "Write witnesses as CSV")->envname("NGSEMI_WITNESS_CSV");
    add_json(verify_app);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "ngsemi: " << e.what() << '\n';
        return exit_usage;
    }

    Envelope env;
    std::ostringstream text;
    int code = exit_ok;
    try {
        if (analyze_app->parsed()) {
            env.command = "analyze";
            code = analyze(gens, env, text);
        } else if (ng_app->parsed()) {
            env.command = "ng-vectors";
            code = ng_vectors_cmd(gens, limit, env, text);
        } else if (rf_app->parsed()) {
            env.command = "rf";
            code = rf_cmd(gens, f, minus, ng_vector, env, text);
        } else if (glue_app->parsed()) {
            env.command = "construct glue";
            env.input = {{"s1", s1_text}, {"s2", s2_text}, {"x", glue_x}, {"y", glue_y}};
            const auto a = semigroup_from({s1_text});
            const auto b = semigroup_from({s2_text});
            code = report_construction(glue(GluingSpec{a, b, glue_x, glue_y}), env, text);
        } else if (dilate_app->parsed()) {
            env.command = "construct dilate";
            env.input = {{"generators", parse_generator_tokens(gens)}, {"d", dilation}};
            code = report_construction(dilate(semigroup_from(gens), dilation), env, text);
        } else if (gas_app->parsed()) {
            env.command = "construct gas";
            code = gas_cmd(gas_spec, env, text);
        } else if (verify_app->parsed()) {
            env.command = "verify";
            code = verify_cmd(theorem, max_genus, std::max(1u, threads), csv_path, env, text);
        }
    } catch (const Error& e) {
        env.error = e;
        env.result = nullptr;
        err << "ngsemi: " << e.what() << '\n';
        code = exit_usage;
    }

    if (json_output) out << envelope_json(env).dump(2) << '\n';
    else if (!env.error) {
        out << text.str();
        for (const auto& w : env.warnings) out << "warning: " << w << '\n';
    }
    return code;
}

} // namespace ngsemi::cli
