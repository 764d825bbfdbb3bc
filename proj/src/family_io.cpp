#include "crossfam/family_io.hpp"

#include <cerrno>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_set>

namespace crossfam {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, std::size_t line, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    return value;
}

}  // namespace

SetFamily parse_family_text(std::string_view text) {
    std::size_t line_no = 0;
    int n = -1;
    std::vector<Word> members;
    std::unordered_set<Word> seen;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (n < 0) {
            if (!line.starts_with("n="))
                throw ParseError(line_no, "expected header 'n=<int>'");
            n = parse_int(trim(line.substr(2)), line_no, "ground size");
            if (n < 0 || n > kMaxGround)
                throw ParseError(line_no, "ground size must be in [0, " +
                                              std::to_string(kMaxGround) + "]");
            continue;
        }

        Word w = 0;
        if (line != "-") {
            int previous = 0;
            std::string_view rest = line;
            while (true) {
                const std::size_t comma = rest.find(',');
                const int x = parse_int(trim(rest.substr(0, comma)), line_no, "element");
                if (x < 1 || x > n)
                    throw ParameterError("line " + std::to_string(line_no) + ": element " +
                                         std::to_string(x) + " outside [1, " + std::to_string(n) +
                                         "]");
                if (x <= previous)
                    throw ParseError(line_no, "elements must be strictly increasing");
                previous = x;
                w |= element_bit(x);
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
            }
        }
        if (!seen.insert(w).second) throw ParseError(line_no, "duplicate member");
        members.push_back(w);
    }
    if (n < 0) throw ParseError(0, "missing header 'n=<int>'");
    return SetFamily(n, std::move(members));
}

SetFamily parse_family_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family_text(buf.str());
}

std::string format_family(const SetFamily& f) {
    std::string out = "n=" + std::to_string(f.ground_n()) + "\n";
    for (const auto& s : f.members()) out += s.to_string() + "\n";
    return out;
}

void write_family_file(const std::filesystem::path& path, const SetFamily& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
    out << format_family(f);
}

}  // namespace crossfam
