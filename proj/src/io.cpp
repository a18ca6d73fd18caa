#include "tsc/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tsc/error.hpp"

namespace tsc::io {

namespace {

template <typename T>
T field_as(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad field '") + key + "': " + e.what());
    }
}

} // namespace

json to_json(const LabeledGraph& g)
{
    json edges = json::array();
    for (const Edge& e : g.graph.edges())
        edges.push_back({e.u, e.v});
    json labels = json::object();
    for (int v = 1; v <= g.graph.vertex_count(); ++v)
        labels["v" + std::to_string(v)] = g.labels.of_vertex(v);
    for (int k = 1; k <= static_cast<int>(g.graph.edge_count()); ++k)
        labels["e" + std::to_string(k)] = g.labels.of_edge(k);
    return {{"m", g.graph.vertex_count()}, {"edges", edges}, {"labels", labels}};
}

LabeledGraph graph_from_json(const json& j)
{
    const int m = field_as<int>(j, "m");
    const auto pairs = field_as<std::vector<std::pair<int, int>>>(j, "edges");
    Graph g = Graph::from_edges(m, pairs);
    if (!j.contains("labels"))
        return {g, default_labeling(g)};

    const auto labels = field_as<std::map<std::string, int>>(j, "labels");
    std::vector<int> vl, el;
    auto lookup = [&](const std::string& key) {
        auto it = labels.find(key);
        if (it == labels.end())
            throw InputError("labels: missing '" + key + "'");
        return it->second;
    };
    for (int v = 1; v <= m; ++v)
        vl.push_back(lookup("v" + std::to_string(v)));
    for (int k = 1; k <= static_cast<int>(g.edge_count()); ++k)
        el.push_back(lookup("e" + std::to_string(k)));
    if (labels.size() != vl.size() + el.size())
        throw InputError("labels: unexpected keys");
    return {g, TotalLabeling(std::move(vl), std::move(el))};
}

json to_json(const SimplicialComplex& c)
{
    const int n = c.vertices().empty() ? 0 : c.vertices().back();
    return {{"n", n}, {"facets", c.facets()}};
}

SimplicialComplex complex_from_json(const json& j)
{
    const int n = field_as<int>(j, "n");
    auto facets = field_as<std::vector<Face>>(j, "facets");
    for (const Face& f : facets)
        for (int v : f)
            if (v < 1 || v > n)
                throw InputError("facet label " + std::to_string(v) + " outside [1," +
                                 std::to_string(n) + "]");
    return SimplicialComplex::from_facets(std::move(facets));
}

json to_json(const HomologySummary& h)
{
    return {{"field", h.field.to_string()},     {"alpha", h.alpha},
            {"rank_im", h.rank_im},             {"rank_ker", h.rank_ker},
            {"betti", h.betti},                 {"reduced_betti", h.reduced_betti}};
}

json to_json(const CmReport& r)
{
    json witness = nullptr;
    if (r.witness)
        witness = {{"face", r.witness->face}, {"r", r.witness->r}, {"betti", r.witness->betti}};
    return {{"verdict", r.verdict},
            {"field", r.field.to_string()},
            {"witness", witness},
            {"purity_ok", r.purity_ok}};
}

json decomposition_json(const CoverReport& covers)
{
    return {{"components", covers.covers},
            {"unmixed", covers.unmixed},
            {"cardinalities", covers.cardinalities}};
}

std::string dump(const json& j) { return j.dump() + "\n"; }

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << contents;
}

} // namespace tsc::io
