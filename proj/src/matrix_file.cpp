/*
   Copyright 2026 The gfjnf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "matrix_file.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace gfjnf {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) l.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::uint32_t number(const Line& l, std::string_view tok) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v > 0xFFFFFFFFull)
        parse_error(l.number, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    std::size_t at = 0;
    if (lines.empty()) fail(ErrorCode::Parse, "empty matrix file");
    const Line& head = lines[at++];
    if (head.tokens.size() != 3 || head.tokens[0] != "gfmat") parse_error(head.number, "expected 'gfmat <p> <k>'");
    const std::uint32_t p = number(head, head.tokens[1]);
    const std::uint32_t k = number(head, head.tokens[2]);

    std::optional<std::vector<std::uint32_t>> modulus;
    if (at < lines.size() && lines[at].tokens[0] == "modulus") {
        const Line& ml = lines[at++];
        if (k <= 1) parse_error(ml.number, "modulus line is only allowed for k > 1");
        std::vector<std::uint32_t> m;
        for (std::size_t i = 1; i < ml.tokens.size(); ++i) m.push_back(number(ml, ml.tokens[i]));
        modulus = std::move(m);
    }
    Field F = Field::make(p, k, std::move(modulus));

    if (at >= lines.size()) fail(ErrorCode::Parse, "missing dimension line");
    const Line& dl = lines[at++];
    if (dl.tokens.size() != 1) parse_error(dl.number, "expected the dimension n");
    const std::uint32_t n = number(dl, dl.tokens[0]);
    if (n == 0) parse_error(dl.number, "dimension must be positive");
    if (lines.size() - at != n)
        fail(ErrorCode::Parse, "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - at));

    Mat a(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const Line& row = lines[at + i];
        if (row.tokens.size() != n)
            parse_error(row.number, "row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(n));
        for (std::uint32_t j = 0; j < n; ++j) {
            const std::uint32_t v = number(row, row.tokens[j]);
            if (v >= F.q()) parse_error(row.number, "entry " + std::to_string(v) + " is not below q = " + std::to_string(F.q()));
            a(i, j) = v;
        }
    }
    return MatrixFile{std::move(F), std::move(a)};
}

std::string serialize_matrix_file(const Field& F, const Mat& a) {
    std::ostringstream os;
    os << "gfmat " << F.p() << ' ' << F.k() << '\n';
    if (F.k() > 1) {
        os << "modulus";
        for (auto c : F.modulus()) os << ' ' << c;
        os << '\n';
    }
    os << a.rows() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
        os << '\n';
    }
    return os.str();
}

}  // namespace gfjnf
