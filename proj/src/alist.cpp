#include "vfap/alist.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace vfap {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Returns the next line as a token stream; blank lines are skipped.
    bool next(std::istringstream& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            out = std::istringstream(line);
            return true;
        }
        return false;
    }
};

std::vector<long> parse_ints(std::istringstream& s, int line_no) {
    std::vector<long> vals;
    std::string tok;
    while (s >> tok) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw AlistParseError(line_no, "expected integer, got '" + tok + "'");
        }
    }
    return vals;
}

}  // namespace

ParityCheckMatrix read_alist(std::istream& in) {
    LineReader rd{in};
    std::istringstream s;

    if (!rd.next(s)) throw AlistParseError(rd.line_no, "missing size line");
    auto sizes = parse_ints(s, rd.line_no);
    if (sizes.size() != 2) throw AlistParseError(rd.line_no, "size line must be 'n m'");
    long n = sizes[0], m = sizes[1];
    if (n <= 0 || m <= 0) throw AlistParseError(rd.line_no, "dimensions must be positive");

    if (!rd.next(s)) throw AlistParseError(rd.line_no, "missing max-degree line");
    auto maxdeg = parse_ints(s, rd.line_no);
    if (maxdeg.size() != 2)
        throw AlistParseError(rd.line_no, "expected 'max_col_degree max_row_degree'");

    if (!rd.next(s)) throw AlistParseError(rd.line_no, "missing column-degree line");
    auto col_deg = parse_ints(s, rd.line_no);
    if (static_cast<long>(col_deg.size()) != n)
        throw AlistParseError(rd.line_no, "expected " + std::to_string(n) + " column degrees");

    if (!rd.next(s)) throw AlistParseError(rd.line_no, "missing row-degree line");
    auto row_deg = parse_ints(s, rd.line_no);
    if (static_cast<long>(row_deg.size()) != m)
        throw AlistParseError(rd.line_no, "expected " + std::to_string(m) + " row degrees");

    for (long j = 0; j < n; ++j)
        if (col_deg[j] < 1 || col_deg[j] > maxdeg[0])
            throw AlistParseError(rd.line_no, "column degree out of range at node " +
                                                  std::to_string(j));
    for (long i = 0; i < m; ++i)
        if (row_deg[i] < 1 || row_deg[i] > maxdeg[1])
            throw AlistParseError(rd.line_no,
                                  "row degree out of range at node " + std::to_string(i));

    auto read_adjacency = [&](long count, const std::vector<long>& degs, long other_dim,
                              const char* what) {
        std::vector<std::vector<int>> adj(count);
        for (long k = 0; k < count; ++k) {
            if (!rd.next(s))
                throw AlistParseError(rd.line_no, std::string("missing ") + what + " list " +
                                                      std::to_string(k));
            auto vals = parse_ints(s, rd.line_no);
            // zero padding to the max degree is tolerated
            while (!vals.empty() && vals.back() == 0) vals.pop_back();
            if (static_cast<long>(vals.size()) != degs[k])
                throw AlistParseError(rd.line_no, std::string(what) + " " + std::to_string(k) +
                                                      " lists " + std::to_string(vals.size()) +
                                                      " entries but declares degree " +
                                                      std::to_string(degs[k]));
            adj[k].reserve(vals.size());
            for (long v : vals) {
                if (v < 1 || v > other_dim)
                    throw AlistParseError(rd.line_no, "index " + std::to_string(v) +
                                                          " out of range in " + what + " " +
                                                          std::to_string(k));
                adj[k].push_back(static_cast<int>(v - 1));
            }
            std::sort(adj[k].begin(), adj[k].end());
            if (std::adjacent_find(adj[k].begin(), adj[k].end()) != adj[k].end())
                throw AlistParseError(rd.line_no,
                                      std::string("duplicate index in ") + what + " " +
                                          std::to_string(k));
        }
        return adj;
    };

    auto cols = read_adjacency(n, col_deg, m, "variable");
    auto rows = read_adjacency(m, row_deg, n, "check");

    // cross-check the two adjacency sections
    for (long j = 0; j < n; ++j)
        for (int i : cols[j])
            if (!std::binary_search(rows[i].begin(), rows[i].end(), static_cast<int>(j)))
                throw AlistParseError(rd.line_no,
                                      "variable " + std::to_string(j) + " lists check " +
                                          std::to_string(i) + " but not vice versa");
    long col_edges = 0, row_edges = 0;
    for (const auto& c : cols) col_edges += static_cast<long>(c.size());
    for (const auto& r : rows) row_edges += static_cast<long>(r.size());
    if (col_edges != row_edges)
        throw AlistParseError(rd.line_no, "row/column sections disagree on edge count");

    try {
        return ParityCheckMatrix(static_cast<int>(m), static_cast<int>(n), std::move(rows));
    } catch (const std::exception& e) {
        throw AlistParseError(rd.line_no, e.what());
    }
}

ParityCheckMatrix read_alist(const std::string& text) {
    std::istringstream in(text);
    return read_alist(in);
}

ParityCheckMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open alist file: " + path);
    return read_alist(in);
}

void write_alist(const ParityCheckMatrix& h, std::ostream& out) {
    size_t max_col = 0, max_row = 0;
    for (int j = 0; j < h.n(); ++j) max_col = std::max(max_col, h.col(j).size());
    for (int i = 0; i < h.m(); ++i) max_row = std::max(max_row, h.row(i).size());

    out << h.n() << ' ' << h.m() << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (int j = 0; j < h.n(); ++j) out << h.col(j).size() << (j + 1 < h.n() ? ' ' : '\n');
    for (int i = 0; i < h.m(); ++i) out << h.row(i).size() << (i + 1 < h.m() ? ' ' : '\n');
    for (int j = 0; j < h.n(); ++j) {
        const auto& c = h.col(j);
        for (size_t k = 0; k < c.size(); ++k) out << c[k] + 1 << (k + 1 < c.size() ? ' ' : '\n');
    }
    for (int i = 0; i < h.m(); ++i) {
        const auto& r = h.row(i);
        for (size_t k = 0; k < r.size(); ++k) out << r[k] + 1 << (k + 1 < r.size() ? ' ' : '\n');
    }
}

std::string write_alist(const ParityCheckMatrix& h) {
    std::ostringstream out;
    write_alist(h, out);
    return out.str();
}

}  // namespace vfap
