#include "wod/graph.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace wod {

Graph Graph::from_edge_list(int order, const std::vector<std::pair<int, int>>& edges) {
    if (order < 1) raise(Errc::ZeroOrder, "graph order must be at least 1, got " + std::to_string(order));
    Graph g(order);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            raise(Errc::EndpointOutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                ") outside order " + std::to_string(order));
        if (u == v) raise(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
        if (!g.rows_[static_cast<std::size_t>(u)].test(v)) {
            g.rows_[static_cast<std::size_t>(u)].set(v);
            g.rows_[static_cast<std::size_t>(v)].set(u);
            ++g.edge_count_;
        }
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order_; ++u) {
        rows_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph disjoint_copies(const Graph& g, int copies) {
    if (copies < 1) raise(Errc::ZeroCopies, "need at least one copy, got " + std::to_string(copies));
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() * static_cast<std::size_t>(copies));
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges()) edges.emplace_back(c * n + u, c * n + v);
    return Graph::from_edge_list(n * copies, edges);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.set(v);
    return out;
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.set(v);
    return out;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            bool odd_edge = false;
            g.neighbors(u).for_each([&](int v) {
                int& c = color[static_cast<std::size_t>(v)];
                if (c == -1) {
                    c = 1 - color[static_cast<std::size_t>(u)];
                    queue.push(v);
                } else if (c == color[static_cast<std::size_t>(u)]) {
                    odd_edge = true;
                }
            });
            if (odd_edge) return std::nullopt;
        }
    }
    VertexSet side0(n), side1(n);
    for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? side0 : side1).set(v);
    return std::make_pair(side0, side1);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.order())
        raise(Errc::MemberOutOfRange, "keep set universe does not match graph order");
    if (keep.empty()) raise(Errc::ZeroOrder, "induced subgraph would be empty");
    std::vector<int> old_to_new(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> new_to_old;
    keep.for_each([&](int v) {
        old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(new_to_old.size());
        new_to_old.push_back(v);
    });
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (keep.test(u) && keep.test(v))
            edges.emplace_back(old_to_new[static_cast<std::size_t>(u)], old_to_new[static_cast<std::size_t>(v)]);
    return InducedSubgraph{Graph::from_edge_list(static_cast<int>(new_to_old.size()), edges),
                           std::move(old_to_new), std::move(new_to_old)};
}

InducedSubgraph strip_isolated(const Graph& g) {
    VertexSet keep = isolated_vertices(g).complement();
    if (keep.empty()) raise(Errc::AllIsolated, "every vertex is isolated");
    return induced_subgraph(g, keep);
}

namespace {

bool is_blank_or_comment(std::string_view line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::vector<long long> parse_ints(std::string_view line, std::size_t expected, int line_no) {
    std::vector<long long> out;
    const char* cur = line.data();
    const char* end = line.data() + line.size();
    while (cur != end) {
        while (cur != end && std::isspace(static_cast<unsigned char>(*cur))) ++cur;
        if (cur == end) break;
        long long value = 0;
        auto [next, ec] = std::from_chars(cur, end, value);
        if (ec != std::errc())
            raise(Errc::ParseError, "expected an integer on line " + std::to_string(line_no));
        out.push_back(value);
        cur = next;
    }
    if (out.size() != expected)
        raise(Errc::ParseError, "expected " + std::to_string(expected) + " integers on line " +
                                    std::to_string(line_no) + ", got " + std::to_string(out.size()));
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<std::pair<std::string_view, int>> data_lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (!is_blank_or_comment(line)) data_lines.emplace_back(line, line_no);
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    if (data_lines.empty()) raise(Errc::ParseError, "no header line found");
    auto header = parse_ints(data_lines[0].first, 2, data_lines[0].second);
    long long n = header[0];
    long long m = header[1];
    if (n < 1) raise(Errc::ZeroOrder, "graph order must be at least 1, got " + std::to_string(n));
    if (m < 0 || static_cast<std::size_t>(m) != data_lines.size() - 1)
        raise(Errc::ParseError, "header announces " + std::to_string(m) + " edges but " +
                                    std::to_string(data_lines.size() - 1) + " edge lines follow");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < data_lines.size(); ++i) {
        auto pair = parse_ints(data_lines[i].first, 2, data_lines[i].second);
        edges.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::ParseError, "cannot open " + path + " for writing");
    out << contents;
    if (!out) raise(Errc::ParseError, "failed while writing " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::ParseError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace wod
