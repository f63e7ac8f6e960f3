#include "flagforge/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace flagforge {

namespace {

using nlohmann::json;

// Ints that fit in 64 bits serialize as numbers, anything larger as a
// decimal string; re-serialization is byte-stable either way.
json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

json ints_to_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

std::vector<Int> ints_from_json(const json& arr) {
    std::vector<Int> out;
    for (const auto& x : arr) out.push_back(int_from_json(x));
    return out;
}

json face_vector_to_json(const FaceVector& f) { return ints_to_json(f.entries); }

FaceVector face_vector_from_json(const json& arr) {
    return FaceVector{ints_from_json(arr)};
}

}  // namespace

std::string graph_to_json(const VertexColoredGraph& g) {
    json j;
    j["colors"] = g.colors();
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    return j.dump();
}

VertexColoredGraph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    VertexColoredGraph g;
    for (int c : j.at("colors").get<std::vector<int>>()) g.add_vertex(c);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::string graph_to_edgelist(const VertexColoredGraph& g) {
    std::ostringstream os;
    os << "#colors";
    for (int c : g.colors()) os << ' ' << c;
    os << '\n';
    for (auto [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
    return os.str();
}

VertexColoredGraph graph_from_edgelist(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    VertexColoredGraph g;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("#colors", 0) == 0) {
            std::istringstream hs(line.substr(7));
            int c;
            while (hs >> c) g.add_vertex(c);
            have_header = true;
            continue;
        }
        if (line[0] == '#') continue;
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
        if (!have_header) throw std::invalid_argument("edge list lacks a #colors header");
        g.add_edge(u, v);
    }
    return g;
}

VertexColoredGraph load_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return graph_from_json(text);
    return graph_from_edgelist(text);
}

namespace {

json stage_to_json(const StageTrace& st) {
    json j;
    j["level"] = st.level;
    j["parts"] = ints_to_json(st.parts);
    j["n0"] = int_to_json(st.n0);
    j["target_m"] = int_to_json(st.target_m);
    j["m0"] = int_to_json(st.m0);
    json extras = json::array();
    for (const StageExtraTrace& e : st.extras) {
        json je;
        je["n"] = int_to_json(e.n);
        je["q"] = int_to_json(e.q);
        je["p"] = int_to_json(e.p);
        if (e.middle_zone) je["middle_zone"] = true;
        extras.push_back(je);
    }
    j["extras"] = extras;
    j["glue_parts"] = ints_to_json(st.glue_parts);
    j["glue_faces"] = int_to_json(st.glue_faces);
    j["gamma_f"] = face_vector_to_json(st.gamma_f);
    j["delta_f"] = face_vector_to_json(st.delta_f);
    j["new_vertices"] = int_to_json(st.new_vertices);
    return j;
}

StageTrace stage_from_json(const json& j) {
    StageTrace st;
    st.level = j.at("level").get<int>();
    st.parts = ints_from_json(j.at("parts"));
    st.n0 = int_from_json(j.at("n0"));
    st.target_m = int_from_json(j.at("target_m"));
    st.m0 = int_from_json(j.at("m0"));
    for (const auto& je : j.at("extras")) {
        StageExtraTrace e;
        e.n = int_from_json(je.at("n"));
        e.q = int_from_json(je.at("q"));
        e.p = int_from_json(je.at("p"));
        e.middle_zone = je.value("middle_zone", false);
        st.extras.push_back(e);
    }
    st.glue_parts = ints_from_json(j.at("glue_parts"));
    st.glue_faces = int_from_json(j.at("glue_faces"));
    st.gamma_f = face_vector_from_json(j.at("gamma_f"));
    st.delta_f = face_vector_from_json(j.at("delta_f"));
    st.new_vertices = int_from_json(j.at("new_vertices"));
    return st;
}

}  // namespace

std::string plan_to_json(const ConstructionPlan& plan) {
    json j;
    j["kind"] = plan.kind;
    if (plan.k) j["k"] = plan.k;
    if (plan.p) j["p"] = plan.p;
    if (plan.r) j["r"] = plan.r;
    if (plan.kind == "two_face" || plan.kind == "dim") {
        j["m"] = int_to_json(plan.m);
        j["q"] = int_to_json(plan.q);
    }
    if (!plan.target.empty()) j["target"] = ints_to_json(plan.target);
    if (!plan.alloc_mode.empty()) j["alloc_mode"] = plan.alloc_mode;
    j["pairing"] = plan.pairing;
    json stages = json::array();
    for (const StageTrace& st : plan.stages) stages.push_back(stage_to_json(st));
    j["stages"] = stages;
    j["pendant_vertices"] = int_to_json(plan.pendant_vertices);
    if (plan.failure) {
        json f;
        f["face_card"] = plan.failure->face_card;
        f["required"] = int_to_json(plan.failure->required);
        f["allowed"] = int_to_json(plan.failure->allowed);
        f["at_stage"] = plan.failure->at_stage;
        f["reason"] = plan.failure->reason;
        j["failure"] = f;
    }
    j["success"] = plan.success();
    return j.dump();
}

ConstructionPlan plan_from_json(const std::string& text) {
    json j = json::parse(text);
    ConstructionPlan plan;
    plan.kind = j.value("kind", "");
    plan.k = j.value("k", 0);
    plan.p = j.value("p", 0);
    plan.r = j.value("r", 0);
    if (j.contains("m")) plan.m = int_from_json(j.at("m"));
    if (j.contains("q")) plan.q = int_from_json(j.at("q"));
    if (j.contains("target")) plan.target = ints_from_json(j.at("target"));
    plan.alloc_mode = j.value("alloc_mode", "");
    plan.pairing = j.value("pairing", false);
    for (const auto& js : j.at("stages")) plan.stages.push_back(stage_from_json(js));
    plan.pendant_vertices = int_from_json(j.at("pendant_vertices"));
    if (j.contains("failure")) {
        ConstructionFailure f;
        f.face_card = j["failure"].at("face_card").get<int>();
        f.required = int_from_json(j["failure"].at("required"));
        f.allowed = int_from_json(j["failure"].at("allowed"));
        f.at_stage = j["failure"].at("at_stage").get<int>();
        f.reason = j["failure"].at("reason").get<std::string>();
        plan.failure = f;
    }
    return plan;
}

std::string search_report_to_json(const SearchReport& rep) {
    json j;
    json constraint;
    constraint["fix_card"] = rep.fix_card;
    constraint["fix_count"] = int_to_json(rep.fix_count);
    constraint["report_card"] = rep.report_card;
    j["constraint"] = constraint;
    j["domain_max_vertices"] = rep.max_vertices;
    json attained = json::array();
    for (const auto& [value, w] : rep.attained) {
        json ja;
        ja["value"] = int_to_json(value);
        json jw;
        jw["vertices"] = w.vertices;
        json edges = json::array();
        for (auto [u, v] : w.edges) edges.push_back(json::array({u, v}));
        jw["edges"] = edges;
        ja["witness"] = jw;
        attained.push_back(ja);
    }
    j["attained"] = attained;
    j["excluded_in_domain"] = ints_to_json(rep.excluded_in_domain);
    return j.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace flagforge
