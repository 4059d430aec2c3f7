#include "lohg/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lohg {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

bool is_skippable(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        return ch == 'c';
    }
    return true; // blank
}

long long to_int(const std::string& tok, int line_no, const char* what) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
    return v;
}

// next content line; returns false at EOF
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_skippable(line)) return true;
    }
    return false;
}

} // namespace

std::string serialize(const Hypergraph& h) {
    std::string out = "p lohg " + std::to_string(h.r) + " " + std::to_string(h.n) + " " +
                      std::to_string(h.edge_count()) + "\n";
    const std::size_t m = h.edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        out += 'e';
        for (Vertex v : h.edge(i)) {
            out += ' ';
            out += std::to_string(v + 1);
        }
        out += '\n';
    }
    return out;
}

std::string serialize(const Colouring& c) {
    std::string out = "s lo " + std::to_string(c.k) + " " + std::to_string(c.assignment.size()) + "\n";
    for (std::size_t i = 0; i < c.assignment.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c.assignment[i]);
    }
    out += '\n';
    return out;
}

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError("missing 'p lohg' header");
    auto head = tokens_of(line);
    if (head.size() != 5 || head[0] != "p" || head[1] != "lohg")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p lohg <r> <n> <m>'");
    long long r = to_int(head[2], line_no, "uniformity");
    long long n = to_int(head[3], line_no, "vertex count");
    long long m = to_int(head[4], line_no, "edge count");
    if (r < 2 || n < 0 || m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad header values");

    Hypergraph h(static_cast<int>(r), static_cast<int>(n));
    h.edge_data.reserve(static_cast<std::size_t>(m) * r);
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(m) + " edges, file ended after " +
                             std::to_string(i));
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] != "e")
            throw ParseError("line " + std::to_string(line_no) + ": expected an 'e' line");
        if (static_cast<long long>(toks.size()) != r + 1)
            throw ParseError("line " + std::to_string(line_no) + ": edge has " +
                             std::to_string(toks.size() - 1) + " slots, expected " +
                             std::to_string(r));
        std::vector<Vertex> e;
        e.reserve(r);
        for (long long j = 1; j <= r; ++j) {
            long long v = to_int(toks[j], line_no, "vertex id");
            if (v < 1 || v > n)
                throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                                 std::to_string(v) + " out of range [1, " + std::to_string(n) + "]");
            e.push_back(static_cast<Vertex>(v - 1));
        }
        try {
            h.add_edge(e);
        } catch (const std::invalid_argument& ex) {
            throw ParseError("line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    if (next_line(in, line, line_no))
        throw ParseError("line " + std::to_string(line_no) + ": trailing content after edges");
    return h;
}

Colouring parse_colouring(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError("missing 's lo' header");
    auto head = tokens_of(line);
    if (head.size() != 4 || head[0] != "s" || head[1] != "lo")
        throw ParseError("line " + std::to_string(line_no) + ": expected 's lo <k> <n>'");
    long long k = to_int(head[2], line_no, "colour count");
    long long n = to_int(head[3], line_no, "vertex count");
    if (k < 1 || n < 0) throw ParseError("line " + std::to_string(line_no) + ": bad header values");

    Colouring c;
    c.k = static_cast<int>(k);
    if (n > 0) {
        if (!next_line(in, line, line_no)) throw ParseError("missing colour values line");
        auto toks = tokens_of(line);
        if (static_cast<long long>(toks.size()) != n)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                             " colours, got " + std::to_string(toks.size()));
        c.assignment.reserve(n);
        for (const auto& t : toks) {
            long long v = to_int(t, line_no, "colour");
            if (v < 1 || v > k)
                throw ParseError("line " + std::to_string(line_no) + ": colour " + std::to_string(v) +
                                 " out of range [1, " + std::to_string(k) + "]");
            c.assignment.push_back(static_cast<int>(v));
        }
    }
    if (next_line(in, line, line_no))
        throw ParseError("line " + std::to_string(line_no) + ": trailing content after colours");
    return c;
}

Hypergraph parse_hypergraph_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_hypergraph(ss);
}

Colouring parse_colouring_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_colouring(ss);
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_hypergraph(in);
}

Colouring load_colouring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_colouring(in);
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw std::runtime_error("short write to '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace lohg
