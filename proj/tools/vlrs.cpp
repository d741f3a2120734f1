// Command-line front end for the VLRS toolkit.
//
// Exit codes: 0 ok, 1 usage, 2 validation / wrong code, 3 I/O or corruption.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "vlrs/analysis.hpp"
#include "vlrs/codec.hpp"
#include "vlrs/codespec.hpp"
#include "vlrs/constructors.hpp"
#include "vlrs/container.hpp"
#include "vlrs/errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct IoError : vlrs::Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    const std::string s = read_file(path);
    return {s.begin(), s.end()};
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw IoError("write failed: " + path);
}

vlrs::SourceModel parse_pdf(const std::string& csv) {
    vlrs::SourceModel source;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) source.p.push_back(std::stod(item));
    vlrs::check_source(source);
    return source;
}

std::vector<std::string> parse_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) labels.push_back(item);
    return labels;
}

vlrs::Vlrs load_code(const std::string& path) {
    return vlrs::parse_code_spec(read_file(path));
}

std::vector<std::string> byte_labels() {
    std::vector<std::string> labels;
    labels.reserve(256);
    for (int b = 0; b < 256; ++b) {
        std::ostringstream s;
        s << 'b' << std::hex << std::setw(2) << std::setfill('0') << b;
        labels.push_back(s.str());
    }
    return labels;
}

std::string fixed3(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << x;
    return s.str();
}

int cmd_validate(const std::string& spec_path) {
    const auto code = vlrs::parse_code_spec_raw(read_file(spec_path));
    const auto report = vlrs::validate(code);
    auto line = [](const char* name, bool ok) {
        std::cout << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    };
    line("condition-1 (rule per symbol)", report.cond1);
    line("condition-2 (outputs prefix code)", report.cond2);
    line("condition-3 (inputs full prefix code or {eps})", report.cond3);
    line("condition-4 (outputs never truncate foreign inputs)", report.cond4);
    line("decodable", report.decodable);
    for (const auto& d : report.diagnostics) std::cout << "  - " << d << '\n';
    std::cout << (report.valid() ? "valid" : "invalid") << '\n';
    return report.valid() ? 0 : 2;
}

std::vector<int> read_symbols(const vlrs::Vlrs& code, const std::string& path,
                              bool byte_alphabet) {
    std::vector<int> symbols;
    if (byte_alphabet) {
        if (code.symbol_count() != 256)
            throw vlrs::Error("--byte-alphabet needs a 256-symbol code");
        for (unsigned char b : read_file(path)) symbols.push_back(b);
        return symbols;
    }
    std::istringstream in(read_file(path));
    std::string tok;
    while (in >> tok) {
        auto it = std::find(code.labels.begin(), code.labels.end(), tok);
        if (it == code.labels.end()) throw vlrs::Error("unknown symbol label " + tok);
        symbols.push_back(static_cast<int>(it - code.labels.begin()));
    }
    return symbols;
}

int cmd_encode(const std::string& code_path, const std::string& input,
               const std::string& output, bool byte_alphabet, bool strip) {
    const auto code = load_code(code_path);
    const auto symbols = read_symbols(code, input, byte_alphabet);
    vlrs::Codec codec(code);
    vlrs::EncodedBlock block = codec.encode(symbols);
    if (strip) {
        if (!vlrs::is_suffix_constrained(code))
            throw vlrs::Error("--strip-termination requires a suffix-constrained code");
        for (unsigned k = 0; k < block.termination_len; ++k)
            if (block.payload.bit(block.payload.size() - 1 - k) != code.termination_fill)
                throw vlrs::Error("termination bits are not the fill value; cannot strip");
        block.payload = block.payload.slice(0, block.payload.size() - block.termination_len);
        block.termination_stripped = true;
    }
    const auto bytes = vlrs::write_container(vlrs::code_spec_hash(code), block);
    write_file(output, bytes.data(), bytes.size());
    std::cout << "payload-bits: " << block.payload.size() << '\n'
              << "symbols: " << block.symbol_count << '\n'
              << "termination-bits: " << block.termination_len
              << (block.termination_stripped ? " (stripped)" : "") << '\n';
    return 0;
}

int cmd_decode(const std::string& code_path, const std::string& input,
               const std::string& output, bool byte_alphabet) {
    const auto code = load_code(code_path);
    auto data = vlrs::read_container(read_bytes(input), vlrs::code_spec_hash(code));
    if (data.block.termination_stripped) {
        for (unsigned k = 0; k < data.block.termination_len; ++k)
            data.block.payload.push_back(code.termination_fill);
        data.block.termination_stripped = false;
    }
    const auto symbols = vlrs::Codec(code).decode(data.block);
    if (byte_alphabet) {
        std::vector<std::uint8_t> bytes(symbols.begin(), symbols.end());
        write_file(output, bytes.data(), bytes.size());
    } else {
        std::string text;
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (i) text += ' ';
            text += code.labels[static_cast<std::size_t>(symbols[i])];
        }
        if (!text.empty()) text += '\n';
        write_file(output, text.data(), text.size());
    }
    return 0;
}

int cmd_construct(const std::string& method, const std::string& pdf_csv,
                  const std::string& labels_csv, bool do_simplify) {
    const auto source = parse_pdf(pdf_csv);
    auto labels = labels_csv.empty() ? std::vector<std::string>{} : parse_labels(labels_csv);
    if (!labels.empty() && static_cast<int>(labels.size()) != source.symbol_count())
        throw vlrs::Error("label count does not match pdf length");
    vlrs::Vlrs code;
    if (method == "huffman")
        code = vlrs::from_vlc(vlrs::huffman(source).codewords, labels);
    else if (method == "hutucker")
        code = vlrs::from_vlc(vlrs::hu_tucker(source).codewords, labels);
    else if (method == "lex")
        code = vlrs::lexicographic_vlrs(vlrs::huffman(source), labels);
    else if (method == "mirror")
        code = vlrs::mirror_vlrs(vlrs::huffman(source), labels);
    else
        throw vlrs::Error("unknown construction " + method);
    if (do_simplify) code = vlrs::simplify(code);
    std::cout << vlrs::render_code_spec(code);
    std::cout << "# mdl: " << fixed3(vlrs::asymptotic_mdl(code, source)) << '\n';
    return 0;
}

int cmd_analyze(const std::string& code_path, const std::string& pdf_csv, int length,
                bool as_json) {
    const auto code = load_code(code_path);
    const auto source = parse_pdf(pdf_csv);
    if (source.symbol_count() != code.symbol_count())
        throw vlrs::Error("pdf length does not match code alphabet");
    auto model = vlrs::rule_transition_matrix(code, source);
    model.stationary = vlrs::stationary_rule_distribution(model);
    const double h = vlrs::entropy(source);
    const double amdl = vlrs::asymptotic_mdl(code, source);
    std::vector<std::string> rule_names;
    for (const auto& r : model.rules)
        rule_names.push_back(code.labels[static_cast<std::size_t>(r.symbol)] + " " +
                             r.input.str() + " -> " + r.output.str());
    if (as_json) {
        json out;
        out["entropy"] = h;
        out["rules"] = rule_names;
        out["transition"] = json::array();
        for (Eigen::Index r = 0; r < model.transition.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < model.transition.cols(); ++c)
                row.push_back(model.transition(r, c));
            out["transition"].push_back(row);
        }
        out["stationary"] = std::vector<double>(
            model.stationary.data(), model.stationary.data() + model.stationary.size());
        out["asymptotic_mdl"] = amdl;
        if (length > 0) out["exact_mdl_total_bits"] = vlrs::exact_mdl(code, source, length);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "entropy: " << fixed3(h) << '\n';
    std::cout << "rules:";
    for (const auto& n : rule_names) std::cout << "  [" << n << "]";
    std::cout << '\n' << "transition-matrix:" << '\n';
    for (Eigen::Index r = 0; r < model.transition.rows(); ++r) {
        for (Eigen::Index c = 0; c < model.transition.cols(); ++c)
            std::cout << (c ? " " : "  ") << fixed3(model.transition(r, c));
        std::cout << '\n';
    }
    std::cout << "stationary:";
    for (Eigen::Index r = 0; r < model.stationary.size(); ++r)
        std::cout << ' ' << fixed3(model.stationary(r));
    std::cout << '\n' << "asymptotic-mdl: " << fixed3(amdl) << '\n';
    if (length > 0) {
        const double total = vlrs::exact_mdl(code, source, length);
        std::cout << "exact-mdl-total[n=" << length << "]: " << fixed3(total) << '\n'
                  << "exact-mdl-per-symbol[n=" << length
                  << "]: " << fixed3(total / length) << '\n';
    }
    return 0;
}

int cmd_bitstats(const std::string& code_path, const std::string& encode_pdf_csv,
                 const std::string& pdf_csv, int length, int trials, std::uint64_t seed,
                 bool as_json) {
    vlrs::Vlrs code;
    if (!code_path.empty() && encode_pdf_csv.empty())
        code = load_code(code_path);
    else if (code_path.empty() && !encode_pdf_csv.empty())
        code = vlrs::mirror_vlrs(vlrs::huffman(parse_pdf(encode_pdf_csv)));
    else
        throw vlrs::Error("give exactly one of --code and --encode-pdf");
    const auto source = parse_pdf(pdf_csv);
    const auto stats = vlrs::empirical_bit_stats(code, source, length, trials, seed);
    if (as_json) {
        json out;
        out["zero_fraction"] = stats.zero_fraction;
        out["per_position"] = stats.per_position;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "zero-fraction: " << fixed3(stats.zero_fraction) << '\n';
    std::cout << "per-position (first " << std::min<std::size_t>(stats.per_position.size(), 32)
              << " of " << stats.per_position.size() << "):";
    for (std::size_t i = 0; i < stats.per_position.size() && i < 32; ++i)
        std::cout << ' ' << fixed3(stats.per_position[i]);
    std::cout << '\n';
    return 0;
}

int cmd_bench(const std::string& corpus, const std::string& pdf_mode, bool as_json) {
    if (pdf_mode != "empirical") throw vlrs::Error("only --pdf-mode empirical is supported");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    json rows = json::array();
    for (const auto& path : files) {
        const auto bytes = read_bytes(path.string());
        if (bytes.empty()) continue;
        vlrs::SourceModel source;
        source.p.assign(256, 0.0);
        for (auto b : bytes) source.p[b] += 1.0;
        // Add-one smoothing keeps every byte representable.
        const double total = static_cast<double>(bytes.size()) + 256.0;
        for (auto& p : source.p) p = (p + 1.0) / total;
        std::vector<int> symbols(bytes.begin(), bytes.end());
        const double h = vlrs::entropy(source);
        const auto assignment = vlrs::huffman(source);
        json row;
        row["file"] = path.filename().string();
        row["bytes"] = bytes.size();
        row["entropy_bits_per_symbol"] = h;
        auto measure = [&](const std::string& name, vlrs::Vlrs code) {
            vlrs::Codec codec(code);
            const auto block = codec.encode(symbols);
            const auto container = vlrs::write_container(vlrs::code_spec_hash(code), block);
            row[name] = {{"container_bytes", container.size()},
                         {"bits_per_symbol",
                          static_cast<double>(block.payload.size()) /
                              static_cast<double>(symbols.size())}};
        };
        measure("huffman", vlrs::from_vlc(assignment.codewords, byte_labels()));
        try {
            measure("lex", vlrs::lexicographic_vlrs(assignment, byte_labels()));
        } catch (const vlrs::Error& e) {
            row["lex"] = {{"error", e.what()}};
        }
        measure("mirror", vlrs::mirror_vlrs(assignment, byte_labels()));
        rows.push_back(row);
    }
    if (as_json) {
        std::cout << rows.dump(2) << '\n';
        return 0;
    }
    for (const auto& row : rows) {
        std::cout << row["file"].get<std::string>() << " (" << row["bytes"].get<std::uint64_t>()
                  << " bytes, entropy " << fixed3(row["entropy_bits_per_symbol"].get<double>())
                  << " b/sym)\n";
        for (const char* name : {"huffman", "lex", "mirror"}) {
            std::cout << "  " << std::left << std::setw(8) << name;
            if (row[name].contains("error"))
                std::cout << "skipped: " << row[name]["error"].get<std::string>() << '\n';
            else
                std::cout << row[name]["container_bytes"].get<std::uint64_t>() << " bytes, "
                          << fixed3(row[name]["bits_per_symbol"].get<double>()) << " b/sym\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variable Length Re-writing System entropy-coding toolkit"};
    app.require_subcommand(1);

    std::string spec_path, code_path, input, output, pdf, encode_pdf, labels, method,
        corpus, pdf_mode = "empirical";
    bool byte_alphabet = false, strip = false, do_simplify = false, as_json = false;
    int length = 0, trials = 1;
    std::uint64_t seed = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check a code spec");
    validate_cmd->add_option("spec", spec_path, "code-spec file")->required();

    auto* encode_cmd = app.add_subcommand("encode", "encode symbols to a container");
    encode_cmd->add_option("--code", code_path)->required();
    encode_cmd->add_option("--input", input)->required();
    encode_cmd->add_option("--output", output)->required();
    encode_cmd->add_flag("--byte-alphabet", byte_alphabet);
    encode_cmd->add_flag("--strip-termination", strip);

    auto* decode_cmd = app.add_subcommand("decode", "decode a container");
    decode_cmd->add_option("--code", code_path)->required();
    decode_cmd->add_option("--input", input)->required();
    decode_cmd->add_option("--output", output)->required();
    decode_cmd->add_flag("--byte-alphabet", byte_alphabet);

    auto* construct_cmd = app.add_subcommand("construct", "build a code from a pdf");
    construct_cmd->add_option("method", method, "huffman|hutucker|lex|mirror")->required();
    construct_cmd->add_option("--pdf", pdf)->required();
    construct_cmd->add_option("--labels", labels);
    construct_cmd->add_flag("--simplify", do_simplify);

    auto* analyze_cmd = app.add_subcommand("analyze", "rate analysis of a code");
    analyze_cmd->add_option("--code", code_path)->required();
    analyze_cmd->add_option("--pdf", pdf)->required();
    analyze_cmd->add_option("--length", length);
    analyze_cmd->add_flag("--json", as_json);

    auto* bitstats_cmd = app.add_subcommand("bitstats", "empirical bit statistics");
    bitstats_cmd->add_option("--code", code_path);
    bitstats_cmd->add_option("--encode-pdf", encode_pdf);
    bitstats_cmd->add_option("--pdf", pdf)->required();
    bitstats_cmd->add_option("--length", length)->required();
    bitstats_cmd->add_option("--trials", trials)->required();
    bitstats_cmd->add_option("--seed", seed);
    bitstats_cmd->add_flag("--json", as_json);

    auto* bench_cmd = app.add_subcommand("bench", "compare codes on a corpus");
    bench_cmd->add_option("--corpus", corpus)->required();
    bench_cmd->add_option("--pdf-mode", pdf_mode);
    bench_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(spec_path);
        if (app.got_subcommand(encode_cmd))
            return cmd_encode(code_path, input, output, byte_alphabet, strip);
        if (app.got_subcommand(decode_cmd))
            return cmd_decode(code_path, input, output, byte_alphabet);
        if (app.got_subcommand(construct_cmd))
            return cmd_construct(method, pdf, labels, do_simplify);
        if (app.got_subcommand(analyze_cmd))
            return cmd_analyze(code_path, pdf, length, as_json);
        if (app.got_subcommand(bitstats_cmd))
            return cmd_bitstats(code_path, encode_pdf, pdf, length, trials, seed, as_json);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(corpus, pdf_mode, as_json);
    } catch (const vlrs::ContainerError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.fault == vlrs::ContainerFault::HashMismatch ? 2 : 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const vlrs::CodecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const vlrs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
