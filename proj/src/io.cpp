#include "amix/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "amix/errors.hpp"

namespace amix {

using ojson = nlohmann::ordered_json;

std::string format_double(double x)
{
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) return "0";  // folds −0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void write(std::ostringstream& os, const ojson& j, int indent, int level)
{
    const bool pretty = indent >= 0;
    auto newline = [&](int lvl) {
        if (pretty) os << '\n' << std::string(static_cast<std::size_t>(indent * lvl), ' ');
    };
    switch (j.type()) {
    case ojson::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) os << ',';
            first = false;
            newline(level + 1);
            os << ojson(it.key()).dump() << (pretty ? ": " : ":");
            write(os, it.value(), indent, level + 1);
        }
        newline(level);
        os << '}';
        return;
    }
    case ojson::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        // Arrays of scalars stay on one line so matrix rows read naturally.
        bool flat = true;
        for (const auto& v : j)
            if (v.is_structured()) flat = false;
        os << '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first) os << (flat && pretty ? ", " : ",");
            first = false;
            if (!flat) newline(level + 1);
            write(os, v, indent, level + 1);
        }
        if (!flat) newline(level);
        os << ']';
        return;
    }
    case ojson::value_t::number_float:
        os << format_double(j.get<double>());
        return;
    default:
        os << j.dump();
        return;
    }
}

}  // namespace

std::string dump_json(const ojson& j, int indent)
{
    std::ostringstream os;
    write(os, j, indent, 0);
    return os.str();
}

ojson matrix_json(const Eigen::MatrixXd& m)
{
    ojson data = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ojson matrix_json(const Eigen::MatrixXcd& m)
{
    ojson re = ojson::array(), im = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ojson rr = ojson::array(), ri = ojson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rr.push_back(m(i, j).real());
            ri.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

std::string matrix_csv(const Eigen::MatrixXd& m)
{
    std::ostringstream os;
    os << "i,j,value\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << i << ',' << j << ',' << format_double(m(i, j)) << '\n';
    return os.str();
}

std::string matrix_csv(const Eigen::MatrixXcd& m)
{
    std::ostringstream os;
    os << "i,j,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << i << ',' << j << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag())
               << '\n';
    return os.str();
}

namespace {

std::vector<int> parse_sizes(std::string_view body, std::string_view spec)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto comma = body.find(',', pos);
        const auto tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos || tok.size() > 6)
            throw ParseError("bad size list in graph spec '" + std::string(spec) + "'");
        out.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Returns the index one past the ')' matching the '(' at `open`.
std::size_t match_paren(std::string_view s, std::size_t open)
{
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i + 1;
    }
    throw ParseError("unbalanced parentheses in graph spec '" + std::string(s) + "'");
}

}  // namespace

Graph parse_graph_spec(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("graph spec '" + std::string(spec) + "' must look like kind:args");
    const auto kind = spec.substr(0, colon);
    const auto body = spec.substr(colon + 1);

    if (kind == "path") return make_family(Family::path, parse_sizes(body, spec));
    if (kind == "complete") return make_family(Family::complete, parse_sizes(body, spec));
    if (kind == "cycle") return make_family(Family::cycle, parse_sizes(body, spec));
    if (kind == "bipartite") return make_family(Family::complete_bipartite, parse_sizes(body, spec));
    if (kind == "file") {
        std::ifstream in{std::string(body)};
        if (!in) throw ParseError("cannot open edge-list file '" + std::string(body) + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return parse_edge_list(text.str());
    }
    if (kind == "product") {
        if (body.empty() || body.front() != '(') throw ParseError("product spec must be (SPEC)x(SPEC)");
        const auto left_end = match_paren(body, 0);
        if (left_end + 1 >= body.size() || body[left_end] != 'x' || body[left_end + 1] != '(')
            throw ParseError("product spec must be (SPEC)x(SPEC)");
        const auto right_end = match_paren(body, left_end + 1);
        if (right_end != body.size()) throw ParseError("trailing text after product spec");
        const Graph g = parse_graph_spec(body.substr(1, left_end - 2));
        const Graph h = parse_graph_spec(body.substr(left_end + 2, right_end - left_end - 3));
        return cartesian_product(g, h);
    }
    throw ParseError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace amix
