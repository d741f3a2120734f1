#include "vlrs/codespec.hpp"

#include <algorithm>
#include <sstream>

#include "vlrs/errors.hpp"

namespace vlrs {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        if (tok.starts_with('#')) break;
        tokens.push_back(tok);
    }
    return tokens;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Vlrs parse_code_spec_raw(std::string_view text) {
    Vlrs code;
    bool saw_alphabet = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& head = tokens[0];
        if (head == "alphabet:") {
            if (saw_alphabet) fail(line_no, "duplicate alphabet line");
            if (tokens.size() < 2) fail(line_no, "alphabet line needs at least one label");
            code.labels.assign(tokens.begin() + 1, tokens.end());
            for (std::size_t i = 0; i < code.labels.size(); ++i)
                for (std::size_t j = i + 1; j < code.labels.size(); ++j)
                    if (code.labels[i] == code.labels[j])
                        fail(line_no, "duplicate label " + code.labels[i]);
            saw_alphabet = true;
        } else if (head == "termination:") {
            if (tokens.size() != 2 || (tokens[1] != "0" && tokens[1] != "1"))
                fail(line_no, "termination line must be 'termination: 0|1'");
            code.termination_fill = tokens[1] == "1";
        } else if (head == "rule:") {
            if (!saw_alphabet) fail(line_no, "rule before alphabet line");
            if (tokens.size() != 5 || tokens[3] != "->")
                fail(line_no, "expected 'rule: <label> <bits|-> -> <bits>'");
            auto it = std::find(code.labels.begin(), code.labels.end(), tokens[1]);
            if (it == code.labels.end()) fail(line_no, "unknown symbol " + tokens[1]);
            Rule r;
            r.symbol = static_cast<int>(it - code.labels.begin());
            try {
                r.input = BitString::parse(tokens[2]);
                r.output = BitString::parse(tokens[4]);
            } catch (const std::invalid_argument& e) {
                fail(line_no, e.what());
            }
            code.rules.push_back(std::move(r));
        } else {
            fail(line_no, "unknown directive " + head);
        }
    }
    if (!saw_alphabet) throw ParseError("missing alphabet line");
    std::stable_sort(code.rules.begin(), code.rules.end(),
                     [](const Rule& a, const Rule& b) { return a.symbol < b.symbol; });
    return code;
}

Vlrs parse_code_spec(std::string_view text) {
    Vlrs code = parse_code_spec_raw(text);
    auto report = validate(code);
    if (!report.valid()) {
        std::string msg = "code spec failed validation";
        for (const auto& d : report.diagnostics) msg += "\n  " + d;
        throw InvalidCodeError(msg);
    }
    return code;
}

std::string render_code_spec(const Vlrs& code) {
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& l : code.labels) out << ' ' << l;
    out << '\n';
    out << "termination: " << code.termination_fill << '\n';
    std::vector<Rule> rules = code.rules;
    std::stable_sort(rules.begin(), rules.end(),
                     [](const Rule& a, const Rule& b) { return a.symbol < b.symbol; });
    for (const auto& r : rules)
        out << "rule: " << code.labels[static_cast<std::size_t>(r.symbol)] << ' '
            << r.input.str() << " -> " << r.output.str() << '\n';
    return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t code_spec_hash(const Vlrs& code) { return fnv1a64(render_code_spec(code)); }

}  // namespace vlrs
