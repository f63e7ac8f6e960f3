// flagforge: construct flag complexes with prescribed face vectors, verify
// them by brute-force clique counting, and probe the associated bounds.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagforge/bounds.hpp"
#include "flagforge/complex.hpp"
#include "flagforge/construct.hpp"
#include "flagforge/decompose.hpp"
#include "flagforge/io.hpp"
#include "flagforge/verify.hpp"

namespace {

using flagforge::Int;
using flagforge::Real;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathNegative = 2;
constexpr int kExitInternal = 3;

int g_precision = 50;

std::vector<Int> parse_int_vector(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("empty entry in vector: " + text);
        out.emplace_back(item);
    }
    if (out.empty()) throw CLI::ValidationError("empty vector");
    return out;
}

std::string format_real(const Real& v) {
    std::ostringstream os;
    os.precision(g_precision);
    os << v;
    return os.str();
}

json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void write_graph(const flagforge::VertexColoredGraph& g, const std::string& path,
                 const std::string& format) {
    if (format == "edgelist")
        flagforge::write_text_file(path, flagforge::graph_to_edgelist(g));
    else
        flagforge::write_text_file(path, flagforge::graph_to_json(g));
}

int run_decompose(const Int& m, int k, int r, const std::string& flavor) {
    using namespace flagforge;
    json out;
    if (flavor == "plain" || flavor == "colored") {
        CascadeRep rep = (flavor == "plain") ? kk_rep(m, k) : color_rep(m, k, r);
        out["flavor"] = flavor;
        out["m"] = int_json(m);
        out["k"] = k;
        if (flavor == "colored") out["r"] = r;
        json terms = json::array();
        for (const CascadeTerm& t : rep.terms)
            terms.push_back(json::array({int_json(t.top), t.bottom}));
        out["terms"] = terms;
    } else if (flavor == "two-term") {
        TwoTermRep rep = (r > 0) ? dim_two_term_rep(m, k, r) : two_term_rep(m, k);
        out["flavor"] = "two-term";
        out["m"] = int_json(m);
        out["k"] = k;
        if (r > 0) out["r"] = r;
        out["a"] = int_json(rep.a);
        out["b"] = int_json(rep.b);
        out["remainder"] = int_json(rep.m);
    } else if (flavor == "flag") {
        FlagRep rep = flag_rep(m, k);
        out["flavor"] = "flag";
        out["m"] = int_json(m);
        out["k"] = k;
        out["n_k"] = int_json(rep.n_k);
        if (rep.n_k1)
            out["n_k1"] = int_json(*rep.n_k1);
        else
            out["n_k1"] = nullptr;
        json terms = json::array();
        for (const CascadeTerm& t : rep.a_terms)
            terms.push_back(json::array({int_json(t.top), t.bottom}));
        out["a_terms"] = terms;
    } else {
        throw CLI::ValidationError("unknown flavor: " + flavor);
    }
    emit(out);
    return kExitOk;
}

int run_construct(const std::string& fvec, const std::string& alloc_spec,
                  const std::string& out_path, const std::string& format,
                  const std::string& plan_path) {
    using namespace flagforge;
    std::vector<Int> entries = parse_int_vector(fvec);
    if (entries[0] != 1)
        throw CLI::ValidationError("--f-vector must start with the leading 1");
    if (entries.size() < 2) throw CLI::ValidationError("--f-vector needs at least c_1");
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i] < 1) throw CLI::ValidationError("face numbers must be positive");
    FaceVector target{entries};

    Allocation alloc;
    if (alloc_spec == "auto") {
        alloc = allocate_parts(target);
    } else if (alloc_spec == "balanced") {
        alloc = balanced_allocation(target.dim_plus_one());
    } else {
        std::vector<Int> parts = parse_int_vector(alloc_spec);
        if (static_cast<int>(parts.size()) != target.dim_plus_one())
            throw CLI::ValidationError("--alloc needs one part per dimension level");
        for (const Int& v : parts)
            if (v < 0) throw CLI::ValidationError("parts must be nonnegative");
        alloc = explicit_allocation(parts);
    }

    ConstructionResult res = construct_main(target, alloc);
    std::string plan_json = plan_to_json(res.plan);
    if (!plan_path.empty()) write_text_file(plan_path, plan_json);
    std::cout << plan_json << "\n";
    if (!res.plan.success()) return kExitMathNegative;
    if (!out_path.empty()) write_graph(res.graph, out_path, format);
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& expect) {
    using namespace flagforge;
    VertexColoredGraph g = load_graph_file(graph_path);
    std::vector<Int> entries = parse_int_vector(expect);
    if (entries[0] != 1) throw CLI::ValidationError("--expect must start with 1");
    FaceVector want{entries};
    auto mismatch = verify_graph(g, want);
    json out;
    out["pass"] = !mismatch.has_value();
    if (mismatch) {
        out["index"] = mismatch->index;
        out["got"] = int_json(mismatch->got);
        out["want"] = int_json(mismatch->want);
    }
    emit(out);
    return mismatch ? kExitMathNegative : kExitOk;
}

int run_bound(const std::string& kind, const Int& m, int k, int p, int r, int d) {
    using namespace flagforge;
    json out;
    out["kind"] = kind;
    out["m"] = int_json(m);
    if (kind == "kk") {
        out["value"] = int_json(kk_shadow(m, k, p));
    } else if (kind == "ffk") {
        if (r < k) throw CLI::ValidationError("ffk needs --r >= k");
        out["value"] = int_json(ffk_bound(m, k, p, r));
    } else if (kind == "flag") {
        auto rep = flag_lower_bound(m, k, p);
        if (!rep) {
            // flag_rep needs k >= 3; fall back to the plain shadow bound
            out["value"] = int_json(kk_shadow(m, k, p));
            out["branch"] = "kk_fallback";
        } else {
            out["value"] = int_json(rep->value);
            out["branch"] = rep->branch_taken == FlagBranch::simplex_branch
                                ? "simplex_branch"
                                : "colored_branch";
            out["simplex_value"] = int_json(rep->simplex_value);
            if (rep->colored_value)
                out["colored_value"] = int_json(*rep->colored_value);
        }
    } else if (kind == "cost") {
        if (r > 0) {
            out["value"] = int_json(d_cost(m, k, p, r));
            if (p > 1) out["upper"] = format_real(d_cost_upper(m, k, p, r));
        } else {
            out["value"] = int_json(c_cost(m, k, p));
            if (p > 1) out["upper"] = format_real(c_cost_upper(m, k, p));
        }
    } else if (kind == "equal") {
        if (d < k) throw CLI::ValidationError("equal needs --d >= k");
        out["value"] = format_real(equal_vertices_bound(d, k, p, m));
    } else {
        throw CLI::ValidationError("unknown bound kind: " + kind);
    }
    emit(out);
    return kExitOk;
}

int run_search(int fix_card, const Int& fix_count, int report_card, int max_vertices,
               const std::string& out_path) {
    using namespace flagforge;
    SearchReport rep = search_flag_profiles(fix_card, fix_count, report_card, max_vertices);
    std::string text = search_report_to_json(rep);
    if (!out_path.empty()) write_text_file(out_path, text);
    std::cout << text << "\n";
    return kExitOk;
}

int run_hvec(const std::string& hvec, const std::string& out_path,
             const std::string& format, const std::string& plan_path) {
    using namespace flagforge;
    std::vector<Int> entries = parse_int_vector(hvec);
    if (entries[0] != 1) throw CLI::ValidationError("--h-vector must start with h_0 = 1");
    for (const Int& v : entries)
        if (v < 0) throw CLI::ValidationError("h-vector entries must be nonnegative");
    HVector target{entries};
    HvecResult res = construct_hvec(target);
    std::string plan_json = plan_to_json(res.plan);
    if (!plan_path.empty()) write_text_file(plan_path, plan_json);
    std::cout << plan_json << "\n";
    if (!res.plan.success()) return kExitMathNegative;
    if (!out_path.empty()) write_graph(res.graph, out_path, format);
    return kExitOk;
}

int run_limits(int k, int p, int r, long long upto) {
    using namespace flagforge;
    Real limit = (r > 0) ? limit_constant_dim(r, k, p) : limit_constant_two(k, p);
    Real expo = Real(p - 1) / Real(k - 1);
    for (long long m = 10; m <= upto; m *= 10) {
        Int cost = (r > 0) ? d_cost(m, k, p, r) : c_cost(m, k, p);
        Real ratio = flagforge::to_real(cost) /
                     boost::multiprecision::pow(Real(m), expo);
        json out;
        out["m"] = m;
        out["value"] = int_json(cost);
        out["ratio"] = format_real(ratio);
        out["limit"] = format_real(limit);
        emit(out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag-complex construction toolkit"};
    app.require_subcommand(1);

    int threads = 0;
    int precision = 50;
    app.add_option("--threads", threads, "worker threads (default: FLAGFORGE_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", precision, "significant digits for real-valued bounds")
        ->check(CLI::Range(50, 100));

    // decompose
    std::string dm, flavor = "plain";
    int dk = 0, dr = 0;
    auto* cmd_decompose = app.add_subcommand("decompose", "canonical cascade representations");
    cmd_decompose->add_option("--m", dm, "integer to decompose")->required();
    cmd_decompose->add_option("--k", dk, "cascade level")->required()->check(CLI::PositiveNumber);
    cmd_decompose->add_option("--r", dr, "colors (colored flavors)");
    cmd_decompose->add_option("--flavor", flavor)
        ->check(CLI::IsMember({"plain", "colored", "two-term", "flag"}));

    // construct
    std::string fvec, alloc_spec = "auto", out_path, format = "json", plan_path;
    auto* cmd_construct = app.add_subcommand("construct", "build a flag complex with a given face vector");
    cmd_construct->add_option("--f-vector", fvec, "target face vector 1,c1,...,cd")->required();
    cmd_construct->add_option("--alloc", alloc_spec, "auto | balanced | p1,p2,...,pd");
    cmd_construct->add_option("--out", out_path, "write the graph here");
    cmd_construct->add_option("--format", format)->check(CLI::IsMember({"json", "edgelist"}));
    cmd_construct->add_option("--plan-out", plan_path, "write the plan JSON here");

    // verify
    std::string graph_path, expect;
    auto* cmd_verify = app.add_subcommand("verify", "brute-force check a graph's face vector");
    cmd_verify->add_option("graph", graph_path, "graph file (JSON or edge list)")->required();
    cmd_verify->add_option("--expect", expect, "expected face vector 1,c1,...,cd")->required();

    // bound
    std::string bkind;
    std::string bm;
    int bk = 0, bp = 0, br = 0, bd = 0;
    auto* cmd_bound = app.add_subcommand("bound", "evaluate a lower bound or cost function");
    cmd_bound->add_option("--kind", bkind)->required()
        ->check(CLI::IsMember({"kk", "ffk", "flag", "cost", "equal"}));
    cmd_bound->add_option("--m", bm, "face count")->required();
    cmd_bound->add_option("--k", bk)->required()->check(CLI::PositiveNumber);
    cmd_bound->add_option("--p", bp)->required()->check(CLI::PositiveNumber);
    cmd_bound->add_option("--r", br);
    cmd_bound->add_option("--d", bd);

    // search
    int fix_card = 0, report_card = 0, max_vertices = 0;
    std::string fix_count, search_out;
    auto* cmd_search = app.add_subcommand("search", "exhaustive small-graph profile search");
    cmd_search->add_option("--fix-card", fix_card)->required()->check(CLI::PositiveNumber);
    cmd_search->add_option("--fix-count", fix_count)->required();
    cmd_search->add_option("--report-card", report_card)->required()->check(CLI::PositiveNumber);
    cmd_search->add_option("--max-vertices", max_vertices)->required()->check(CLI::Range(0, 9));
    cmd_search->add_option("--out", search_out, "write the report here");

    // hvec
    std::string hvec, hout, hformat = "json", hplan;
    auto* cmd_hvec = app.add_subcommand("hvec", "vertex-decomposable flag complex with a given h-vector");
    cmd_hvec->add_option("--h-vector", hvec, "target h-vector 1,h1,...,hd")->required();
    cmd_hvec->add_option("--out", hout, "write the graph here");
    cmd_hvec->add_option("--format", hformat)->check(CLI::IsMember({"json", "edgelist"}));
    cmd_hvec->add_option("--plan-out", hplan, "write the plan JSON here");

    // limits
    int lk = 0, lp = 0, lr = 0;
    long long upto = 1000000;
    auto* cmd_limits = app.add_subcommand("limits", "cost-function convergence ladder");
    cmd_limits->add_option("--k", lk)->required()->check(CLI::PositiveNumber);
    cmd_limits->add_option("--p", lp)->required()->check(CLI::PositiveNumber);
    cmd_limits->add_option("--r", lr);
    cmd_limits->add_option("--upto", upto)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (threads > 0) flagforge::set_default_thread_count(threads);
    g_precision = precision;

    try {
        if (*cmd_decompose) return run_decompose(Int(dm), dk, dr, flavor);
        if (*cmd_construct) return run_construct(fvec, alloc_spec, out_path, format, plan_path);
        if (*cmd_verify) return run_verify(graph_path, expect);
        if (*cmd_bound) return run_bound(bkind, Int(bm), bk, bp, br, bd);
        if (*cmd_search) return run_search(fix_card, Int(fix_count), report_card,
                                           max_vertices, search_out);
        if (*cmd_hvec) return run_hvec(hvec, hout, hformat, hplan);
        if (*cmd_limits) return run_limits(lk, lp, lr, upto);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
