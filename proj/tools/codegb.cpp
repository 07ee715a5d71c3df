#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <codegb/codegb.hpp>

namespace {

struct CommonArgs {
    std::string code_path;
    std::string ordering = "degrevlex";
    bool transposed = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("code", args.code_path, "code file: `n r` header, then the parity-check matrix")
        ->required();
    cmd->add_option("--ordering", args.ordering, "term ordering")
        ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}))
        ->capture_default_str();
    cmd->add_flag("--transposed", args.transposed,
                  "matrix block holds H^T ((n-k) x n) instead of H");
}

codegb::BinaryCode load_code(const CommonArgs& args) {
    std::ifstream in(args.code_path);
    if (!in) throw codegb::ParseError("cannot open " + args.code_path);
    return codegb::parse_code(in, args.transposed);
}

codegb::TermOrdering ordering_of(const CommonArgs& args) {
    return *codegb::TermOrdering::from_name(args.ordering);
}

int cmd_gb(const CommonArgs& args, const std::string& output) {
    codegb::FglmOptions options;
    options.want_matphi = output == "matphi" || output == "all";
    options.want_border = output == "border" || output == "all";
    const codegb::BinaryCode code = load_code(args);
    const codegb::FglmResult result = codegb::run_fglm(code, ordering_of(args), options);

    if (output == "gb") {
        std::cout << codegb::format_gb(result.gb);
    } else if (output == "normal-set") {
        std::cout << codegb::format_normal_set(result.normal_set);
    } else if (output == "border") {
        std::cout << codegb::format_gb(*result.border);
    } else if (output == "matphi") {
        std::cout << codegb::format_matphi(*result.matphi);
    } else {
        std::cout << "[gb]\n" << codegb::format_gb(result.gb);
        std::cout << "[normal-set]\n" << codegb::format_normal_set(result.normal_set);
        std::cout << "[border]\n" << codegb::format_gb(*result.border);
        std::cout << "[matphi]\n" << codegb::format_matphi(*result.matphi);
    }
    return 0;
}

int cmd_decode(const CommonArgs& args, const std::string& received) {
    const codegb::BinaryCode code = load_code(args);
    const codegb::BitVector y = codegb::BitVector::from_string(received);
    if (y.size() != code.n())
        throw codegb::ParseError("received vector must have length " + std::to_string(code.n()));
    const codegb::FglmResult result = codegb::run_fglm(code, ordering_of(args));
    const codegb::DecodeResult res = codegb::decode(y, result);
    std::cout << codegb::format_decode(code.syndrome(y), res);
    return 0;
}

int cmd_info(const CommonArgs& args) {
    const codegb::BinaryCode code = load_code(args);
    std::cout << "n=" << code.n() << " k=" << code.k() << " r=" << code.r();
    if (code.k() == 0) {
        std::cout << " d=undefined t=undefined";
    } else {
        const unsigned d = code.min_distance();
        std::cout << " d=" << d << " t=" << (d - 1) / 2;
    }
    const codegb::FglmResult result = codegb::run_fglm(code, ordering_of(args));
    std::cout << " t_detected=";
    if (result.t_detected)
        std::cout << *result.t_detected;
    else if (result.t_degenerate)
        std::cout << "degenerate";
    else
        std::cout << "unavailable";
    std::cout << '\n';
    return 0;
}

int cmd_verify(const CommonArgs& args) {
    const codegb::BinaryCode code = load_code(args);
    codegb::FglmOptions options;
    options.want_border = true;
    options.cross_check_step4 = true;
    const codegb::FglmResult result = codegb::run_fglm(code, ordering_of(args), options);

    codegb::Report report = codegb::verify_gb(result);
    for (std::string& line : codegb::verify_decoding(code, result))
        report.push_back(std::move(line));
    for (const std::string& line : report) std::cout << line << '\n';
    std::cout << (report.empty() ? "PASS" : "FAIL") << '\n';
    return report.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner structures and complete syndrome decoding for binary linear codes"};
    app.require_subcommand(1);

    CommonArgs gb_args;
    std::string gb_output = "gb";
    CLI::App* gb = app.add_subcommand("gb", "compute Groebner structures of the code ideal");
    add_common(gb, gb_args);
    gb->add_option("--output", gb_output, "which structure to print")
        ->check(CLI::IsMember({"gb", "border", "matphi", "normal-set", "all"}))
        ->capture_default_str();

    CommonArgs decode_args;
    std::string received;
    CLI::App* decode = app.add_subcommand("decode", "decode a received vector");
    add_common(decode, decode_args);
    decode->add_option("vector", received, "received vector as a contiguous bit string")
        ->required();

    CommonArgs info_args;
    CLI::App* info = app.add_subcommand("info", "print code parameters");
    add_common(info, info_args);

    CommonArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "audit the run against brute force");
    add_common(verify, verify_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gb->parsed()) return cmd_gb(gb_args, gb_output);
        if (decode->parsed()) return cmd_decode(decode_args, received);
        if (info->parsed()) return cmd_info(info_args);
        if (verify->parsed()) return cmd_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
