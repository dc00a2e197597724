#include "jetcover/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jetcover {

json clutterToJson(const Clutter& c) {
    json edges = json::array();
    for (VertexSet e : c.edges()) edges.push_back(labelsOf(c.universe(), e));
    return json{{"vertices", c.universe().labels()}, {"edges", edges}};
}

Clutter clutterFromJson(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw DomainError("clutter JSON needs 'vertices' and 'edges'");
    try {
        std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::vector<std::string>> edges =
            j.at("edges").get<std::vector<std::vector<std::string>>>();
        return canonicalClutter(std::move(labels), edges);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad clutter JSON: ") + e.what());
    }
}

Graph graphFromJson(const json& j) { return Graph::make(clutterFromJson(j)); }

json idealToJson(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
    return json{{"variables", ideal.universe().labels()}, {"generators", gens}};
}

MonomialIdeal idealFromJson(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw DomainError("ideal JSON needs 'variables' and 'generators'");
    try {
        auto universe = Universe::make(j.at("variables").get<std::vector<std::string>>());
        std::vector<Monomial> gens;
        for (const auto& text : j.at("generators"))
            gens.push_back(parseMonomial(universe, text.get<std::string>()));
        return MonomialIdeal::make(universe, std::move(gens));
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad ideal JSON: ") + e.what());
    }
}

json coverListToJson(const Universe& u, const std::vector<VertexSet>& covers) {
    json out = json::array();
    for (VertexSet w : covers) out.push_back(labelsOf(u, w));
    return out;
}

json kCoverToJson(const Universe& u, const KCover& cover) {
    json weights = json::object();
    for (int v = 0; v < u.size(); ++v)
        if (cover.weights[v] != 0) weights[u.label(v)] = cover.weights[v];
    return json{{"k", cover.k}, {"weights", weights}};
}

json fVectorToJson(const FVector& f) { return json(f.entries); }

json hilbertToJson(const HilbertSeries& h) {
    return json{{"numerator", h.numerator}, {"denomExp", h.denomExponent}};
}

json bettiToJson(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [key, value] : t.entries())
        entries.push_back(json{{"i", key.first}, {"j", key.second}, {"value", value}});
    return json{{"field", t.field().name()}, {"entries", entries}};
}

std::string bettiDiagram(const BettiTable& t) {
    const int cols = t.maxHomological() + 1;
    const int rows = t.maxRow() + 1;
    auto totals = t.totals();
    // Cell text: column header, total, then beta_{i,i+r} per stratum row.
    std::vector<std::vector<std::string>> cells(rows + 2, std::vector<std::string>(cols));
    for (int i = 0; i < cols; ++i) {
        cells[0][i] = std::to_string(i);
        cells[1][i] = std::to_string(i < static_cast<int>(totals.size()) ? totals[i] : 0);
        for (int r = 0; r < rows; ++r) {
            long long v = t.entry(i, i + r);
            cells[r + 2][i] = v == 0 ? "." : std::to_string(v);
        }
    }
    std::vector<std::size_t> width(cols, 0);
    for (const auto& row : cells)
        for (int i = 0; i < cols; ++i) width[i] = std::max(width[i], row[i].size());

    std::vector<std::string> labels{"", "total:"};
    for (int r = 0; r < rows; ++r) labels.push_back(std::to_string(r) + ":");
    std::size_t labelWidth = 0;
    for (const auto& l : labels) labelWidth = std::max(labelWidth, l.size());

    std::ostringstream out;
    for (std::size_t row = 0; row < cells.size(); ++row) {
        out << std::string(labelWidth - labels[row].size(), ' ') << labels[row];
        for (int i = 0; i < cols; ++i)
            out << ' ' << std::string(width[i] - cells[row][i].size(), ' ') << cells[row][i];
        out << '\n';
    }
    return out.str();
}

json liftingMatrixToJson(const LiftingMatrix& m) { return json(m.entries); }

std::string liftingMatrixText(const LiftingMatrix& m) {
    std::vector<std::size_t> width;
    for (const auto& row : m.entries) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (width.size() <= k) width.push_back(0);
            width[k] = std::max(width[k], std::to_string(row[k]).size());
        }
    }
    std::ostringstream out;
    for (const auto& row : m.entries) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string cell = std::to_string(row[k]);
            out << (k ? " " : "") << std::string(width[k] - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

bool parseEdgeToken(const std::string& token, std::string& a, std::string& b) {
    auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= token.size()) return false;
    a = token.substr(0, dash);
    b = token.substr(dash + 1);
    return a != b;
}

} // namespace

CorpusResult ingestGraphCorpus(std::istream& in) {
    CorpusResult result;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream tokens(line);
        std::vector<std::vector<std::string>> edges;
        std::vector<std::string> labels;
        std::string token;
        bool bad = false;
        while (tokens >> token) {
            std::string a, b;
            if (!parseEdgeToken(token, a, b)) {
                result.warnings.push_back("line " + std::to_string(lineNo) +
                                          ": bad edge token '" + token + "'");
                bad = true;
                break;
            }
            for (const auto& l : {a, b})
                if (std::find(labels.begin(), labels.end(), l) == labels.end())
                    labels.push_back(l);
            edges.push_back({a, b});
        }
        if (bad || edges.empty()) {
            if (!bad && !line.empty() && line.find_first_not_of(" \t") != std::string::npos)
                result.warnings.push_back("line " + std::to_string(lineNo) + ": no edges");
            continue;
        }
        try {
            result.graphs.push_back(Graph::make(canonicalClutter(labels, edges)));
        } catch (const DomainError& e) {
            result.warnings.push_back("line " + std::to_string(lineNo) + ": " + e.what());
        }
    }
    if (result.graphs.empty() && result.warnings.empty())
        result.warnings.push_back("empty corpus");
    return result;
}

CorpusResult ingestGraphCorpusFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read corpus file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();
    auto firstChar = content.find_first_not_of(" \t\r\n");
    if (firstChar != std::string::npos &&
        (content[firstChar] == '{' || content[firstChar] == '[')) {
        json j = json::parse(content);
        CorpusResult result;
        if (j.is_object()) {
            result.graphs.push_back(graphFromJson(j));
        } else {
            for (const auto& item : j) result.graphs.push_back(graphFromJson(item));
        }
        return result;
    }
    std::istringstream lines(content);
    return ingestGraphCorpus(lines);
}

} // namespace jetcover
