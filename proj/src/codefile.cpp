#include "rmc/codefile.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace rmc {

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message : source + ": " + message),
      line_(line) {}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line l{number, {}};
        for (std::string tok; ss >> tok;) l.tokens.push_back(tok);
        if (!l.tokens.empty()) lines.push_back(std::move(l));
    }
    return lines;
}

std::uint64_t to_uint(const std::string& source, const Line& line, const std::string& tok) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(source, line.number, "expected a non-negative integer, got '" + tok + "'");
    return v;
}

}  // namespace

CodeFile parse_code_file(std::istream& in, const std::string& source) {
    const auto lines = tokenize(in);
    std::size_t at = 0;
    auto header = [&](const std::string& key) -> const Line& {
        if (at >= lines.size()) throw ParseError(source, 0, "missing '" + key + "' line");
        const Line& l = lines[at++];
        if (l.tokens.size() != 2 || l.tokens[0] != key)
            throw ParseError(source, l.number, "expected '" + key + " <value>'");
        return l;
    };

    const Line& magic = header("rmc");
    if (magic.tokens[1] != "1") throw ParseError(source, magic.number, "unsupported format version " + magic.tokens[1]);

    CodeFile file;
    const Line& ql = header("q");
    file.q = to_uint(source, ql, ql.tokens[1]);
    Field field;
    try {
        field = field_of_order(file.q);
    } catch (const std::exception& e) {
        throw ParseError(source, ql.number, e.what());
    }
    const Line& kl = header("k");
    const Line& ml = header("m");
    const auto k = to_uint(source, kl, kl.tokens[1]);
    const auto m = to_uint(source, ml, ml.tokens[1]);
    if (k < 1 || k > 64) throw ParseError(source, kl.number, "k must lie in [1, 64]");
    if (m < 1 || m > 64) throw ParseError(source, ml.number, "m must lie in [1, 64]");
    if (k > m) throw ParseError(source, kl.number, "k must not exceed m");
    file.k = static_cast<int>(k);
    file.m = static_cast<int>(m);
    const Line& kind = header("kind");
    if (kind.tokens[1] == "linear")
        file.kind = CodeKind::linear;
    else if (kind.tokens[1] == "set")
        file.kind = CodeKind::set;
    else
        throw ParseError(source, kind.number, "kind must be 'linear' or 'set'");
    const Line& cl = header("count");
    const auto count = to_uint(source, cl, cl.tokens[1]);
    if (file.kind == CodeKind::set && count == 0) throw ParseError(source, cl.number, "a set code needs at least one matrix");

    const std::size_t body = lines.size() - at;
    if (count > body / k + 1 || body != count * k) {
        const int where = at < lines.size() ? lines.back().number : cl.number;
        throw ParseError(source, where,
                         "expected " + std::to_string(count) + " blocks of " + std::to_string(k) + " rows, found " +
                             std::to_string(body) + " matrix rows");
    }
    std::set<Vec> seen;
    for (std::uint64_t b = 0; b < count; ++b) {
        Mat M(field, file.k, file.m);
        const int first = lines[at].number;
        for (int i = 0; i < file.k; ++i) {
            const Line& row = lines[at++];
            if (static_cast<int>(row.tokens.size()) != file.m)
                throw ParseError(source, row.number,
                                 "expected " + std::to_string(file.m) + " entries, found " + std::to_string(row.tokens.size()));
            for (int j = 0; j < file.m; ++j) {
                const auto v = to_uint(source, row, row.tokens[j]);
                if (v >= file.q) throw ParseError(source, row.number, "entry " + row.tokens[j] + " outside [0, q)");
                M.set(i, j, static_cast<Elem>(v));
            }
        }
        if (file.kind == CodeKind::set && !seen.insert(vectorize(M)).second)
            throw ParseError(source, first, "duplicate codeword");
        file.matrices.push_back(std::move(M));
    }
    return file;
}

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_code_file(in, path);
}

RankCode to_code(const CodeFile& file) {
    const CodeParams params(field_of_order(file.q), file.k, file.m);
    if (file.kind == CodeKind::linear) return RankCode::from_generators(params, file.matrices);
    return RankCode::from_set(params, file.matrices);
}

RankCode parse_code(std::istream& in, const std::string& source) { return to_code(parse_code_file(in, source)); }

RankCode read_code(const std::string& path) { return to_code(read_code_file(path)); }

std::string serialize(const CodeFile& file) {
    std::ostringstream out;
    out << "rmc 1\nq " << file.q << "\nk " << file.k << "\nm " << file.m << "\nkind "
        << (file.kind == CodeKind::linear ? "linear" : "set") << "\ncount " << file.matrices.size() << "\n";
    for (std::size_t b = 0; b < file.matrices.size(); ++b) {
        if (b > 0) out << "\n";
        const Mat& M = file.matrices[b];
        for (int i = 0; i < M.rows(); ++i) {
            for (int j = 0; j < M.cols(); ++j) out << (j ? " " : "") << M(i, j);
            out << "\n";
        }
    }
    return out.str();
}

std::string serialize(const RankCode& code) {
    CodeFile file{code.field().q(), code.k(), code.m(), code.kind(), {}};
    if (code.is_linear())
        file.matrices = code.basis();
    else
        for (const auto& w : code.words()) file.matrices.push_back(devectorize(code.field(), w, code.k(), code.m()));
    return serialize(file);
}

}  // namespace rmc
