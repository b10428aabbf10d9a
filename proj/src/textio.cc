#include <ecmod/error.hh>
#include <ecmod/textio.hh>

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace ecmod
{
    namespace
    {
        struct Line
        {
            int number;
            vector<string_view> words;
        };

        auto split_lines(string_view text) -> vector<Line>
        {
            vector<Line> result;
            int number = 0;
            while (! text.empty()) {
                auto end = text.find('\n');
                auto line = text.substr(0, end);
                text = end == string_view::npos ? string_view{} : text.substr(end + 1);
                ++number;

                if (auto hash = line.find('#'); hash != string_view::npos)
                    line = line.substr(0, hash);
                Line l{ number, {} };
                size_t i = 0;
                while (i < line.size()) {
                    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                        ++i;
                    size_t j = i;
                    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                        ++j;
                    if (j > i)
                        l.words.push_back(line.substr(i, j - i));
                    i = j;
                }
                if (! l.words.empty())
                    result.push_back(std::move(l));
            }
            return result;
        }

        [[noreturn]] auto fail(const Line & l, const string & message) -> void
        {
            throw ParseError{ "line " + std::to_string(l.number) + ": " + message };
        }

        auto number(const Line & l, string_view word, const char * what) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0)
                fail(l, string{ "bad " } + what + " '" + string{ word } + "'");
            return value;
        }

        auto vertex(const Line & l, string_view word, int n) -> int
        {
            int v = number(l, word, "vertex");
            if (v >= n)
                fail(l, "vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
            return v;
        }

        auto expect_words(const Line & l, size_t count) -> void
        {
            if (l.words.size() != count)
                fail(l, "'" + string{ l.words[0] } + "' takes " + std::to_string(count - 1) + " arguments");
        }
    }

    auto parse_graph_file(string_view text) -> GraphFile
    {
        GraphFile result;
        optional<int> n;
        bool have_colours = false;
        std::set<string> declared;

        for (auto & l : split_lines(text)) {
            auto keyword = l.words[0];
            if (keyword == "colours") {
                if (have_colours)
                    fail(l, "repeated colours line");
                if (n)
                    fail(l, "colours must come before vertices");
                if (l.words.size() < 2)
                    fail(l, "colours needs at least one colour");
                for (size_t i = 1; i < l.words.size(); ++i) {
                    string name{ l.words[i] };
                    if (! Colour::is_valid_token(name))
                        fail(l, "bad colour '" + name + "'");
                    if (! declared.insert(name).second)
                        fail(l, "colour '" + name + "' declared twice");
                    result.colours.emplace_back(name);
                }
                have_colours = true;
            }
            else if (keyword == "vertices") {
                if (! have_colours)
                    fail(l, "vertices before colours");
                if (n)
                    fail(l, "repeated vertices line");
                expect_words(l, 2);
                n = number(l, l.words[1], "vertex count");
                result.graph = ColouredGraph(*n);
            }
            else if (keyword == "edge") {
                if (! n)
                    fail(l, "edge before vertices");
                expect_words(l, 4);
                int u = vertex(l, l.words[1], *n), v = vertex(l, l.words[2], *n);
                string c{ l.words[3] };
                if (! declared.contains(c))
                    fail(l, "undeclared colour '" + c + "'");
                result.graph.add_edge(u, v, Colour{ c });
            }
            else
                fail(l, "unknown keyword '" + string{ keyword } + "'");
        }

        if (! have_colours)
            throw ParseError{ "line 1: missing colours line" };
        if (! n)
            throw ParseError{ "line 1: missing vertices line" };
        return result;
    }

    auto to_graph_file(const ColouredGraph & g) -> GraphFile
    {
        auto colours = g.colours();
        if (colours.empty())
            colours = { Colour::red(), Colour::blue() };
        return GraphFile{ colours, g };
    }

    auto write_graph_file(const GraphFile & f) -> string
    {
        std::ostringstream out;
        out << "colours";
        for (auto & c : f.colours)
            out << ' ' << c.name();
        out << "\nvertices " << f.graph.order() << '\n';
        for (auto & e : f.graph.edges())
            out << "edge " << e.u << ' ' << e.v << ' ' << e.colour.name() << '\n';
        return out.str();
    }

    auto parse_source_instance(string_view text) -> SourceInstance
    {
        SourceInstance result;
        optional<int> n;
        bool have_budget = false;
        for (auto & l : split_lines(text)) {
            auto keyword = l.words[0];
            if (keyword == "vertices") {
                if (n)
                    fail(l, "repeated vertices line");
                expect_words(l, 2);
                n = number(l, l.words[1], "vertex count");
                result.graph.n = *n;
            }
            else if (keyword == "edge") {
                if (! n)
                    fail(l, "edge before vertices");
                expect_words(l, 3);
                result.graph.edges.emplace_back(vertex(l, l.words[1], *n), vertex(l, l.words[2], *n));
            }
            else if (keyword == "part") {
                if (! n)
                    fail(l, "part before vertices");
                result.parts.emplace_back();
                for (size_t i = 1; i < l.words.size(); ++i)
                    result.parts.back().push_back(vertex(l, l.words[i], *n));
            }
            else if (keyword == "budget") {
                if (have_budget)
                    fail(l, "repeated budget line");
                expect_words(l, 2);
                result.budget = number(l, l.words[1], "budget");
                have_budget = true;
            }
            else
                fail(l, "unknown keyword '" + string{ keyword } + "'");
        }
        if (! n)
            throw ParseError{ "line 1: missing vertices line" };
        return result;
    }

    auto write_reduced_instance(const ReducedInstance & r) -> string
    {
        std::ostringstream out;
        out << "# problem: " << to_string(r.problem) << '\n';
        out << "# target: " << target_name(r.target).value_or("custom") << '\n';
        out << "# budget: " << r.budget << '\n';
        for (Vertex v = 0; v < r.instance.order(); ++v)
            out << "# vertex " << v << ": " << r.vertex_label[v] << '\n';
        auto text = write_graph_file(to_graph_file(r.instance));

        // Edge lines carry their origin as a trailing comment.
        std::istringstream lines(text);
        string line;
        size_t edge = 0;
        while (std::getline(lines, line)) {
            out << line;
            if (line.starts_with("edge ") && edge < r.edge_label.size())
                out << " # " << r.edge_label[edge++];
            out << '\n';
        }
        return out.str();
    }
}
