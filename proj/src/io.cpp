#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rainbow {

namespace {

// Splits the stream into whitespace tokens, dropping everything after '#'.
// Comment bodies are collected when `comments` is non-null.
class Tokens {
public:
    explicit Tokens(std::istream& in, std::vector<std::string>* comments = nullptr) {
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) {
                if (comments) {
                    auto body = line.substr(hash + 1);
                    if (!body.empty() && body.front() == ' ') body.erase(0, 1);
                    comments->push_back(body);
                }
                line.resize(hash);
            }
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) tokens_.push_back(tok);
        }
    }

    bool done() const { return pos_ == tokens_.size(); }

    template <typename T>
    T next(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of input while reading ") + what);
        const std::string& tok = tokens_[pos_++];
        T value{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(std::string("malformed ") + what + " '" + tok + "'");
        return value;
    }

    void expect_end(const char* what) const {
        if (!done()) throw ParseError(std::string("trailing data after ") + what + ": '" + tokens_[pos_] + "'");
    }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

template <typename T, typename Writer>
void save_with(const std::string& path, const T& value, Writer write) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write(out, value);
    if (!out) throw ParseError("write failed for '" + path + "'");
}

}  // namespace

DistributionSequence read_sequence(std::istream& in) {
    Tokens tok(in);
    const int n = tok.next<int>("n");
    const int k = tok.next<int>("k");
    if (n < 1 || k < 1) throw ParseError("sequence header needs n >= 1 and k >= 1");
    std::vector<Count> e(k);
    for (auto& x : e) x = tok.next<Count>("edge count");
    tok.expect_end("sequence");
    return DistributionSequence(n, std::move(e));
}

void write_sequence(std::ostream& out, const DistributionSequence& seq) {
    out << seq.n() << ' ' << seq.k() << '\n';
    for (int i = 0; i < seq.k(); ++i) out << (i ? " " : "") << seq.counts()[i];
    out << '\n';
}

Colouring read_colouring(std::istream& in) {
    Tokens tok(in);
    const int n = tok.next<int>("n");
    const int k = tok.next<int>("k");
    if (n < 1 || k < 1) throw ParseError("colouring header needs n >= 1 and k >= 1");
    Colouring col(n, k);
    for (Vertex u = 1; u < n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            const int c = tok.next<int>("colour");
            if (c < 1 || c > k)
                throw ParseError("colour " + std::to_string(c) + " of edge (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") outside [1.." + std::to_string(k) + "]");
            col.set(u, v, c);
        }
    }
    tok.expect_end("colouring");
    return col;
}

void write_colouring(std::ostream& out, const Colouring& col) {
    out << col.n() << ' ' << col.k() << '\n';
    std::string row;
    for (Vertex u = 1; u < col.n(); ++u) {
        row.clear();
        for (Vertex v = u + 1; v <= col.n(); ++v) {
            if (v > u + 1) row.push_back(' ');
            row += std::to_string(col.at(u, v));
        }
        out << row << '\n';
    }
}

TargetGraph read_target(std::istream& in) {
    Tokens tok(in);
    const int m = tok.next<int>("m");
    std::vector<Edge> edges;
    while (!tok.done()) {
        const int u = tok.next<int>("edge endpoint");
        const int v = tok.next<int>("edge endpoint");
        edges.push_back({u, v});
    }
    try {
        return TargetGraph(m, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid target graph: ") + e.what());
    }
}

void write_target(std::ostream& out, const TargetGraph& h) {
    out << h.vertex_count() << '\n';
    for (const Edge& e : h.edges()) out << e.u << ' ' << e.v << '\n';
}

SplitCertificate read_certificate(std::istream& in) {
    SplitCertificate cert;
    Tokens tok(in, &cert.metadata);
    cert.n = tok.next<int>("n");
    cert.k = tok.next<int>("k");
    if (cert.n < 1 || cert.k < 1) throw ParseError("certificate header needs n >= 1 and k >= 1");
    while (!tok.done()) {
        Step s;
        s.lo = tok.next<int>("step lo");
        s.hi = tok.next<int>("step hi");
        s.t = tok.next<int>("step t");
        s.colour = tok.next<int>("step colour");
        cert.steps.push_back(s);
    }
    return cert;
}

void write_certificate(std::ostream& out, const SplitCertificate& cert) {
    out << cert.n << ' ' << cert.k << '\n';
    for (const Step& s : cert.steps) out << s.lo << ' ' << s.hi << ' ' << s.t << ' ' << s.colour << '\n';
    for (const auto& line : cert.metadata) out << "# " << line << '\n';
}

DistributionSequence load_sequence(const std::string& path) {
    auto in = open_in(path);
    return read_sequence(in);
}

Colouring load_colouring(const std::string& path) {
    auto in = open_in(path);
    return read_colouring(in);
}

TargetGraph load_target(const std::string& path) {
    auto in = open_in(path);
    return read_target(in);
}

SplitCertificate load_certificate(const std::string& path) {
    auto in = open_in(path);
    return read_certificate(in);
}

void save(const std::string& path, const DistributionSequence& seq) { save_with(path, seq, write_sequence); }
void save(const std::string& path, const Colouring& col) { save_with(path, col, write_colouring); }
void save(const std::string& path, const TargetGraph& h) { save_with(path, h, write_target); }
void save(const std::string& path, const SplitCertificate& cert) { save_with(path, cert, write_certificate); }

}  // namespace rainbow
