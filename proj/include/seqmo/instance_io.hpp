#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmo/problems.hpp"

namespace seqmo {

// Malformed instance file; carries the offending line number and context.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what_)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what_),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

// %.17g survives a strtod round trip bit-exactly for IEEE doubles
inline std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void write_matrix_block(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << format_full(m(i, j));
        }
        os << '\n';
    }
}

class LineReader {
public:
    LineReader(std::istream& in, std::string path) : in_(in), path_(std::move(path)) {}

    // next non-empty line, stripped of comments; false at EOF
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto first = line.find_first_not_of(" \t\r\n");
            if (first == std::string::npos) continue;
            const auto last = line.find_last_not_of(" \t\r\n");
            out = line.substr(first, last - first + 1);
            return true;
        }
        return false;
    }

    std::string require(const std::string& section) {
        std::string line;
        if (!next(line))
            throw ParseError(path_, lineno_, "unexpected end of file: missing " + section);
        return line;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_, lineno_, what); }

    std::size_t lineno() const { return lineno_; }
    const std::string& path() const { return path_; }

private:
    std::istream& in_;
    std::string path_;
    std::size_t lineno_ = 0;
};

inline Matrix read_matrix_block(LineReader& reader, std::size_t n, const std::string& name) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string line = reader.require("row " + std::to_string(i + 1) + " of " + name);
        std::istringstream row(line);
        std::vector<double> values;
        std::string tok;
        while (row >> tok) {
            char* endp = nullptr;
            const double v = std::strtod(tok.c_str(), &endp);
            if (endp == tok.c_str() || *endp != '\0')
                reader.fail("bad numeric value '" + tok + "' in " + name);
            values.push_back(v);
        }
        if (values.size() != n)
            reader.fail(name + " row has " + std::to_string(values.size()) +
                        " values, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = values[j];
    }
    return m;
}

inline std::string expect_keyword_line(LineReader& reader, const std::string& keyword) {
    const std::string line = reader.require("'" + keyword + "' line");
    std::istringstream ss(line);
    std::string key, rest;
    ss >> key;
    if (key != keyword) reader.fail("expected '" + keyword + "', found '" + key + "'");
    std::getline(ss, rest);
    const auto first = rest.find_first_not_of(" \t");
    return first == std::string::npos ? std::string() : rest.substr(first);
}

inline std::uint64_t parse_u64(LineReader& reader, const std::string& text, const std::string& field) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        reader.fail("bad " + field + " value '" + text + "'");
    }
}

}  // namespace detail

inline constexpr const char* kInstanceFormatTag = "seqmo instance v1";

inline void save_instance(const ProblemInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_instance: cannot open " + path + " for writing");
    out << kInstanceFormatTag << '\n';
    if (const auto* motsp = std::get_if<MotspInstance>(&inst)) {
        out << "problem motsp\n";
        out << "n " << motsp->n_cities << '\n';
        out << "k " << motsp->num_objectives() << '\n';
        out << "seed " << motsp->seed << '\n';
        for (std::size_t k = 0; k < motsp->num_objectives(); ++k) {
            out << "matrix " << (k + 1) << '\n';
            detail::write_matrix_block(out, motsp->distance_matrices[k]);
        }
    } else {
        const auto& qap = std::get<MoqapInstance>(inst);
        out << "problem moqap\n";
        out << "n " << qap.n_facilities << '\n';
        out << "k " << qap.num_objectives() << '\n';
        out << "seed " << qap.seed << '\n';
        out << "distance\n";
        detail::write_matrix_block(out, qap.distance_matrix);
        for (std::size_t k = 0; k < qap.num_objectives(); ++k) {
            out << "flow " << (k + 1) << '\n';
            detail::write_matrix_block(out, qap.flow_matrices[k]);
        }
    }
    out << "end\n";
    if (!out) throw std::runtime_error("save_instance: write failed for " + path);
}

inline ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_instance: cannot open " + path);
    detail::LineReader reader(in, path);

    const std::string tag = reader.require("format tag");
    if (tag != kInstanceFormatTag) reader.fail("unrecognized format tag '" + tag + "'");

    const std::string kind = detail::expect_keyword_line(reader, "problem");
    if (kind != "motsp" && kind != "moqap") reader.fail("unknown problem kind '" + kind + "'");

    const std::size_t n =
        static_cast<std::size_t>(detail::parse_u64(reader, detail::expect_keyword_line(reader, "n"), "n"));
    const std::size_t k =
        static_cast<std::size_t>(detail::parse_u64(reader, detail::expect_keyword_line(reader, "k"), "k"));
    const std::uint64_t seed = detail::parse_u64(reader, detail::expect_keyword_line(reader, "seed"), "seed");
    if (n == 0) reader.fail("n must be positive");
    if (k < 2) reader.fail("k must be at least 2");

    ProblemInstance result;
    if (kind == "motsp") {
        MotspInstance inst;
        inst.n_cities = n;
        inst.seed = seed;
        for (std::size_t i = 0; i < k; ++i) {
            const std::string header = detail::expect_keyword_line(reader, "matrix");
            if (header != std::to_string(i + 1))
                reader.fail("expected 'matrix " + std::to_string(i + 1) + "'");
            inst.distance_matrices.push_back(
                detail::read_matrix_block(reader, n, "matrix " + std::to_string(i + 1)));
        }
        result = std::move(inst);
    } else {
        MoqapInstance inst;
        inst.n_facilities = n;
        inst.seed = seed;
        detail::expect_keyword_line(reader, "distance");
        inst.distance_matrix = detail::read_matrix_block(reader, n, "distance");
        for (std::size_t i = 0; i < k; ++i) {
            const std::string header = detail::expect_keyword_line(reader, "flow");
            if (header != std::to_string(i + 1))
                reader.fail("expected 'flow " + std::to_string(i + 1) + "'");
            inst.flow_matrices.push_back(
                detail::read_matrix_block(reader, n, "flow " + std::to_string(i + 1)));
        }
        result = std::move(inst);
    }
    const std::string trailer = reader.require("'end' trailer");
    if (trailer != "end") reader.fail("expected 'end', found '" + trailer + "'");
    return result;
}

}  // namespace seqmo
