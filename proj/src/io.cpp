#include "hhr/io.hpp"

#include "hhr/combinadic.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hhr {

namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

class TokenReader {
public:
    explicit TokenReader(std::istream& in) : tokens_(tokenize(in)) {}

    const std::string& word(const char* what) {
        if (at_ >= tokens_.size())
            throw std::runtime_error(std::string("unexpected end of file, expected ") + what);
        return tokens_[at_++];
    }

    long long number(const char* what) {
        const auto& tok = word(what);
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size())
            throw std::runtime_error(std::string("expected ") + what + ", got '" + tok + "'");
        return value;
    }

    int vertex(const char* what, long long n) {
        const long long v = number(what);
        if (v < 0 || v >= n)
            throw std::runtime_error(std::string(what) + " out of range: " + std::to_string(v));
        return static_cast<int>(v);
    }

    void expect(const std::string& literal) {
        const auto& tok = word(literal.c_str());
        if (tok != literal)
            throw std::runtime_error("expected '" + literal + "', got '" + tok + "'");
    }

    bool exhausted() const { return at_ == tokens_.size(); }

private:
    std::vector<std::string> tokens_;
    std::size_t at_ = 0;
};

void expect_done(const TokenReader& r, const char* format) {
    if (!r.exhausted())
        throw std::runtime_error(std::string("trailing content in ") + format + " file");
}

} // namespace

Graph2 read_graph2(std::istream& in) {
    TokenReader r(in);
    r.expect("graph");
    const long long n = r.number("vertex count");
    const long long m = r.number("edge count");
    if (n < 0 || m < 0) throw std::runtime_error("graph file: negative counts");
    Graph2 g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        const int u = r.vertex("edge endpoint", n);
        const int v = r.vertex("edge endpoint", n);
        if (u >= v) throw std::runtime_error("graph file: edges must satisfy u < v");
        g.add_edge(u, v);
    }
    expect_done(r, "graph");
    return g;
}

void write_graph2(std::ostream& out, const Graph2& g) {
    out << "graph " << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Hypergraph3 read_hypergraph3(std::istream& in) {
    TokenReader r(in);
    r.expect("h3");
    const long long n = r.number("vertex count");
    const long long m = r.number("edge count");
    if (n < 0 || m < 0) throw std::runtime_error("h3 file: negative counts");
    std::vector<Edge3> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        const int u = r.vertex("edge vertex", n);
        const int v = r.vertex("edge vertex", n);
        const int w = r.vertex("edge vertex", n);
        if (!(u < v && v < w))
            throw std::runtime_error("h3 file: triples must be strictly increasing");
        edges.push_back({u, v, w});
    }
    expect_done(r, "h3");
    return Hypergraph3(static_cast<int>(n), std::move(edges));
}

void write_hypergraph3(std::ostream& out, const Hypergraph3& h) {
    out << "h3 " << h.n() << ' ' << h.m() << '\n';
    for (const auto& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

Hedgehog read_hedgehog(std::istream& in) {
    TokenReader r(in);
    r.expect("hedgehog");
    const long long b = r.number("body size");
    const long long s = r.number("spike count");
    const long long n_total = r.number("total vertex count");
    if (b < 0 || s < 0 || n_total < b + s)
        throw std::runtime_error("hedgehog file: inconsistent counts");
    std::vector<int> body(static_cast<std::size_t>(b));
    for (long long v = 0; v < b; ++v) body[static_cast<std::size_t>(v)] = static_cast<int>(v);
    std::vector<Spike> spikes;
    spikes.reserve(static_cast<std::size_t>(s));
    for (long long i = 0; i < s; ++i) {
        const int u = r.vertex("body pair vertex", b);
        const int v = r.vertex("body pair vertex", b);
        if (u >= v) throw std::runtime_error("hedgehog file: body pairs must satisfy u < v");
        spikes.push_back({static_cast<int>(b + i), u, v});
    }
    expect_done(r, "hedgehog");
    return Hedgehog(std::move(body), std::move(spikes), static_cast<int>(n_total));
}

void write_hedgehog(std::ostream& out, const Hedgehog& h) {
    const int b = h.body_size();
    for (int i = 0; i < b; ++i)
        if (h.body()[static_cast<std::size_t>(i)] != i)
            throw std::invalid_argument("write_hedgehog: body ids must be 0..b-1");
    for (int i = 0; i < h.spike_count(); ++i)
        if (h.spikes()[static_cast<std::size_t>(i)].vertex != b + i)
            throw std::invalid_argument("write_hedgehog: spike ids must be b..b+s-1");
    out << "hedgehog " << b << ' ' << h.spike_count() << ' ' << h.n_total() << '\n';
    for (const auto& s : h.spikes()) out << s.u << ' ' << s.v << '\n';
}

void write_colouring(std::ostream& out, const TripleColouring& c, const std::string& graph_path) {
    if (c.is_derived()) {
        if (graph_path.empty())
            throw std::invalid_argument(
                "write_colouring: derived colouring needs its graph file path");
        out << "color3 " << c.n() << " derived " << graph_path << '\n';
        return;
    }
    out << "color3 " << c.n() << " explicit\n";
    const std::uint64_t bytes = (c.triple_count() + 7) / 8;
    const auto& words = c.words();
    static const char* digits = "0123456789abcdef";
    std::string hex;
    hex.reserve(2 * bytes);
    for (std::uint64_t q = 0; q < bytes; ++q) {
        const unsigned byte = static_cast<unsigned>((words[q / 8] >> (8 * (q % 8))) & 0xFFu);
        hex.push_back(digits[byte >> 4]);
        hex.push_back(digits[byte & 0xF]);
    }
    out << hex << '\n';
}

namespace {

int hex_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw std::runtime_error(std::string("colour file: bad hex digit '") + ch + "'");
}

} // namespace

TripleColouring read_colouring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open colour file: " + path);
    TokenReader r(in);
    r.expect("color3");
    const long long n = r.number("host size");
    if (n < 0) throw std::runtime_error("colour file: negative host size");
    const auto& form = r.word("colouring form");
    if (form == "derived") {
        std::filesystem::path graph_path(r.word("graph file path"));
        expect_done(r, "colour");
        if (graph_path.is_relative())
            graph_path = std::filesystem::path(path).parent_path() / graph_path;
        const Graph2 gamma = read_graph2_file(graph_path.string());
        if (gamma.n() != n)
            throw std::runtime_error("colour file: host size does not match the graph");
        return TripleColouring::derived(gamma);
    }
    if (form != "explicit")
        throw std::runtime_error("colour file: form must be 'explicit' or 'derived'");
    const std::uint64_t bytes = (n_triples(static_cast<std::uint64_t>(n)) + 7) / 8;
    std::string hex;
    if (bytes > 0) hex = r.word("hex payload");
    expect_done(r, "colour");
    if (hex.size() != 2 * bytes)
        throw std::runtime_error("colour file: hex payload has wrong length");
    std::vector<std::uint64_t> words((bytes + 7) / 8, 0ull);
    for (std::uint64_t q = 0; q < bytes; ++q) {
        const auto byte = static_cast<std::uint64_t>(16 * hex_value(hex[2 * q]) +
                                                     hex_value(hex[2 * q + 1]));
        words[q / 8] |= byte << (8 * (q % 8));
    }
    // from_bits wants exactly ceil(C(n,3)/64) words
    words.resize((n_triples(static_cast<std::uint64_t>(n)) + 63) / 64, 0ull);
    return TripleColouring::from_bits(static_cast<int>(n), std::move(words));
}

namespace {

template <typename Reader>
auto read_file(const std::string& path, Reader reader, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open ") + what + " file: " + path);
    return reader(in);
}

} // namespace

Graph2 read_graph2_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_graph2(in); }, "graph");
}

Hypergraph3 read_hypergraph3_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_hypergraph3(in); }, "h3");
}

Hedgehog read_hedgehog_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_hedgehog(in); }, "hedgehog");
}

} // namespace hhr
