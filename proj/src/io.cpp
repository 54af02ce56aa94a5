#include "saa/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace saa {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

namespace {

std::vector<std::string_view> split_words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::size_t line, std::string_view tok, const char* what)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected an integer ") + what + ", got '" + std::string(tok) + "'");
    return v;
}

struct Line {
    std::size_t number;
    std::vector<std::string_view> words;
};

}  // namespace

Presentation parse_presentation(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        auto raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        auto words = split_words(raw);
        if (words.empty() || words.front().front() == '#')
            continue;
        lines.push_back({number, std::move(words)});
    }

    auto header = [&](std::size_t idx, std::string_view key) -> const Line& {
        if (idx >= lines.size())
            throw ParseError(0, "missing '" + std::string(key) + "' line");
        const auto& l = lines[idx];
        if (l.words.size() != 2 || l.words[0] != key)
            throw ParseError(l.number, "expected '" + std::string(key) + " <value>'");
        return l;
    };

    if (lines.empty())
        throw ParseError(0, "empty input");
    if (lines[0].words.size() != 2 || lines[0].words[0] != "saa-presentation" || lines[0].words[1] != "v1")
        throw ParseError(lines[0].number, "expected header 'saa-presentation v1'");

    const auto& nl = header(1, "n");
    auto n = parse_int(nl.number, nl.words[1], "for n");
    if (n < 1 || n > 1'000'000)
        throw ParseError(nl.number, "n must be a positive integer");

    const auto& pl = header(2, "p");
    auto p = parse_int(pl.number, pl.words[1], "for p");
    if (p < 2 || static_cast<std::uint64_t>(p) > PrimeField::max_modulus || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParseError(pl.number, "p = " + std::string(pl.words[1]) + " is not a supported prime");
    PrimeField field(static_cast<std::uint64_t>(p));

    const auto& kl = header(3, "kind");
    bool nilpotent = false;
    if (kl.words[1] == "nilpotent")
        nilpotent = true;
    else if (kl.words[1] != "general")
        throw ParseError(kl.number, "kind must be 'general' or 'nilpotent'");

    std::vector<Triple> triples;
    std::set<std::array<std::size_t, 3>> seen;
    for (std::size_t idx = 4; idx < lines.size(); ++idx) {
        const auto& l = lines[idx];
        if (l.words[0] != "triple" || l.words.size() != 5)
            throw ParseError(l.number, "expected 'triple <b> <b> <b> <value>'");
        std::array<BasisVector, 3> b{BasisVector::x(1), BasisVector::x(1), BasisVector::x(1)};
        for (std::size_t t = 0; t < 3; ++t) {
            try {
                b[t] = parse_basis_vector(l.words[1 + t]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(l.number, e.what());
            }
            if (b[t].index > n)
                throw ParseError(l.number, "index out of range in '" + std::string(l.words[1 + t]) + "' (n = " +
                                               std::to_string(n) + ")");
        }
        if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2])
            throw ParseError(l.number, "repeated basis vector in triple");
        auto v = parse_int(l.number, l.words[4], "value");
        if (v < 1 || v >= p)
            throw ParseError(l.number, "value must lie in [1, p)");
        std::array<std::size_t, 3> key{b[0].coordinate(), b[1].coordinate(), b[2].coordinate()};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            throw ParseError(l.number, "duplicate triple");
        Triple tr{b[0], b[1], b[2], FieldElement(field, v)};
        if (nilpotent && !validate_nilpotent_presentation(Presentation(static_cast<int>(n), field, {tr})))
            throw ParseError(l.number, "triple is not of nilpotent shape (x_i y_j y_k or y_i y_j y_k, i < j < k)");
        triples.push_back(tr);
    }
    return Presentation(static_cast<int>(n), field, std::move(triples));
}

std::string emit_presentation(const Presentation& p)
{
    auto c = p.canonical();
    std::ostringstream os;
    os << "saa-presentation v1\n";
    os << "n " << c.n() << "\n";
    os << "p " << c.field().p() << "\n";
    os << "kind " << (validate_nilpotent_presentation(c) ? "nilpotent" : "general") << "\n";
    for (const auto& t : c.triples())
        os << "triple " << t.a.to_string() << ' ' << t.b.to_string() << ' ' << t.c.to_string() << ' '
           << t.value.residue() << "\n";
    return os.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << text;
    if (!out)
        throw IoError("write failed for " + path.string());
}

}  // namespace saa
