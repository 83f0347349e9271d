#include "amix/graph.hpp"

#include <charconv>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "amix/errors.hpp"

namespace amix {

Graph::Graph(Eigen::MatrixXd adjacency, std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels))
{
    const auto n = adjacency_.rows();
    if (n < 1 || adjacency_.cols() != n)
        throw InvalidParameter("adjacency must be a non-empty square matrix");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (adjacency_(i, i) != 0.0)
            throw InvalidParameter("adjacency diagonal must be zero (no self-loops)");
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = adjacency_(i, j);
            if (v != 0.0 && v != 1.0)
                throw InvalidParameter("adjacency entries must be 0 or 1 (weighted graphs are not supported)");
            if (v != adjacency_(j, i))
                throw InvalidParameter("adjacency must be symmetric");
        }
    }
    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    } else if (static_cast<Eigen::Index>(labels_.size()) != n) {
        throw InvalidParameter("label count does not match vertex count");
    }
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> out(static_cast<std::size_t>(order()));
    for (int i = 0; i < order(); ++i)
        out[static_cast<std::size_t>(i)] = static_cast<int>(adjacency_.row(i).sum());
    return out;
}

int Graph::edge_count() const
{
    return static_cast<int>(adjacency_.sum() / 2.0);
}

std::string Graph::hash() const
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    const auto n = static_cast<std::uint32_t>(order());
    for (int k = 0; k < 4; ++k) mix(static_cast<std::uint8_t>(n >> (8 * k)));
    for (Eigen::Index i = 0; i < adjacency_.rows(); ++i)
        for (Eigen::Index j = 0; j < adjacency_.cols(); ++j)
            mix(adjacency_(i, j) != 0.0 ? 1 : 0);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

void require(bool ok, const char* what)
{
    if (!ok) throw InvalidParameter(what);
}

}  // namespace

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
    return Graph(std::move(a));
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
    a.diagonal().setZero();
    return Graph(std::move(a));
}

Graph complete_bipartite_graph(int m, int n)
{
    require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + n, m + n);
    a.topRightCorner(m, n).setOnes();
    a.bottomLeftCorner(n, m).setOnes();
    return Graph(std::move(a));
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        a(i, j) = a(j, i) = 1.0;
    }
    return Graph(std::move(a));
}

Graph make_family(Family kind, const std::vector<int>& params)
{
    switch (kind) {
    case Family::path:
        require(params.size() == 1, "path takes exactly one size parameter");
        return path_graph(params[0]);
    case Family::complete:
        require(params.size() == 1, "complete takes exactly one size parameter");
        return complete_graph(params[0]);
    case Family::cycle:
        require(params.size() == 1, "cycle takes exactly one size parameter");
        return cycle_graph(params[0]);
    case Family::complete_bipartite:
        require(params.size() == 2, "complete_bipartite takes exactly two size parameters");
        return complete_bipartite_graph(params[0], params[1]);
    }
    throw InvalidParameter("unknown graph family");
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    const int n = g.order();
    const int m = h.order();
    const Eigen::MatrixXd& ag = g.adjacency();
    const Eigen::MatrixXd& ah = h.adjacency();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n * m, n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ag(i, j) != 0.0)
                for (int b = 0; b < m; ++b) a(i * m + b, j * m + b) = 1.0;
    for (int i = 0; i < n; ++i)
        a.block(i * m, i * m, m, m) += ah;

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n * m));
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            labels.push_back(std::to_string(i) + "," + std::to_string(b));
    return Graph(std::move(a), std::move(labels));
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line_no)
{
    long long v = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                         std::string(tok) + "'");
    return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    long long n = -1;
    Eigen::MatrixXd a;
    std::set<std::pair<long long, long long>> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto toks = split_ws(line);

        if (n < 0) {
            if (toks.size() != 1)
                throw ParseError("line " + std::to_string(line_no) + ": first line must be the vertex count");
            n = parse_int(toks[0], line_no);
            if (n < 1) throw RangeError("vertex count must be positive");
            if (n > 1024) throw SizeError("graphs beyond 1024 vertices are not supported");
            a = Eigen::MatrixXd::Zero(n, n);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        long long u = parse_int(toks[0], line_no);
        long long v = parse_int(toks[1], line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw RangeError("line " + std::to_string(line_no) + ": vertex index out of range [0, " +
                             std::to_string(n) + ")");
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) +
                             " " + std::to_string(v));
        a(u, v) = a(v, u) = 1.0;
    }
    if (n < 0) throw ParseError("empty edge list: missing vertex count");
    return Graph(std::move(a));
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed)
{
    require(n >= 1, "random graph needs n >= 1");
    require(edge_probability >= 0.0 && edge_probability <= 1.0, "edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) a(i, j) = a(j, i) = 1.0;
    return Graph(std::move(a));
}

}  // namespace amix
