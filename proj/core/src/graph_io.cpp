#include "bnsl/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "bnsl/errors.hpp"

namespace bnsl {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

void write_graph(const std::string& path, const Dag& dag, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != dag.node_count())
        throw Error("name count does not match graph");
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "nodes:";
    for (int i = 0; i < dag.node_count(); ++i) out << (i ? "," : " ") << names[static_cast<std::size_t>(i)];
    out << "\n";
    for (int child = 0; child < dag.node_count(); ++child)
        dag.parents(child).for_each([&](int parent) {
            out << names[static_cast<std::size_t>(parent)] << " -> "
                << names[static_cast<std::size_t>(child)] << "\n";
        });
    if (!out) throw Error("failed writing " + path);
}

ParsedGraph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    std::string line;
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    std::vector<NodeSet> parents;
    bool have_header = false;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;

        if (!have_header) {
            if (t.rfind("nodes:", 0) != 0)
                throw ParseError(path + ": expected 'nodes:' header on line " + std::to_string(lineno));
            std::stringstream ss(t.substr(6));
            std::string name;
            while (std::getline(ss, name, ',')) {
                name = trim(name);
                if (name.empty()) throw ParseError(path + ": empty node name in header");
                index.emplace(name, static_cast<int>(names.size()));
                names.push_back(name);
            }
            if (names.size() < 1) throw ParseError(path + ": no nodes declared");
            parents.resize(names.size());
            have_header = true;
            continue;
        }

        std::size_t arrow = t.find("->");
        if (arrow == std::string::npos)
            throw ParseError(path + ": line " + std::to_string(lineno) + ": expected 'parent -> child'");
        std::string from = trim(t.substr(0, arrow));
        std::string to = trim(t.substr(arrow + 2));
        auto fi = index.find(from);
        auto ti = index.find(to);
        if (fi == index.end() || ti == index.end())
            throw ParseError(path + ": line " + std::to_string(lineno) + ": unknown node name");
        parents[static_cast<std::size_t>(ti->second)] =
            parents[static_cast<std::size_t>(ti->second)].with(fi->second);
    }
    if (!have_header) throw ParseError(path + ": missing 'nodes:' header");

    return ParsedGraph{std::move(names), Dag::make(std::move(parents))};
}

}  // namespace bnsl
