#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmc/codes.hpp"

namespace rmc {

/// Malformed code file; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// Raw contents of an rmc file.
struct CodeFile {
    std::uint64_t q = 0;
    int k = 0;
    int m = 0;
    CodeKind kind = CodeKind::set;
    std::vector<Mat> matrices;
};

CodeFile parse_code_file(std::istream& in, const std::string& source = "<input>");
CodeFile read_code_file(const std::string& path);

/// Linear files list generators, set files the exact codewords.
RankCode to_code(const CodeFile& file);
RankCode parse_code(std::istream& in, const std::string& source = "<input>");
RankCode read_code(const std::string& path);

/// Canonical file text: the reduced basis for linear codes, the sorted word
/// list otherwise.
std::string serialize(const RankCode& code);
std::string serialize(const CodeFile& file);

}  // namespace rmc
