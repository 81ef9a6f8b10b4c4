#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cgflz/encoder.hpp"
#include "cgflz/errors.hpp"
#include "cgflz/generate.hpp"
#include "cgflz/lz78.hpp"
#include "cgflz/report.hpp"
#include "cgflz/sideinfo.hpp"
#include "cgflz/verify.hpp"

namespace {

using cgflz::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    auto text = read_file(path);
    return std::vector<std::uint8_t>(text.begin(), text.end());
}

/// Shared input flags: a sequence file plus its alphabet declaration.
struct SequenceArgs {
    std::string path;
    std::string alphabet_path;
    std::size_t alpha = 2;
    bool raw = false;

    cgflz::Alphabet alphabet() const {
        return alphabet_path.empty() ? cgflz::Alphabet::indexed(alpha)
                                     : cgflz::load_alphabet(read_file(alphabet_path));
    }
    cgflz::SymbolSequence load() const {
        return cgflz::load_sequence(read_file(path), alphabet(),
                                    raw ? cgflz::SequenceFormat::RawBytes
                                        : cgflz::SequenceFormat::TokenText);
    }
};

void add_sequence_flags(CLI::App* cmd, SequenceArgs& args, const char* what) {
    cmd->add_option("input", args.path, std::string("sequence file (") + what + ")")
        ->required();
    cmd->add_option("--alphabet", args.alphabet_path,
                    "alphabet declaration file (one token per line)");
    cmd->add_option("--alpha", args.alpha,
                    "alphabet size for the canonical 0-9a-z alphabet (default 2)");
    cmd->add_flag("--raw", args.raw, "input bytes are symbol indices");
}

std::vector<cgflz::Rational> parse_lambdas(const std::string& list) {
    auto lambdas = cgflz::parse_rational_list(list);
    for (const auto& l : lambdas)
        if (l.value() < 0.0)
            throw std::invalid_argument("lambda must be nonnegative, got " + l.str());
    return lambdas;
}

void emit(const Json& report, const std::string& format, const std::string& out_path) {
    std::string text =
        format == "csv" ? cgflz::report_to_csv(report) : report.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

std::string phrase_string(const cgflz::Alphabet& alphabet,
                          const std::vector<cgflz::Symbol>& phrase) {
    std::string out;
    for (std::size_t i = 0; i < phrase.size(); ++i) {
        if (i > 0 && !alphabet.single_char_labels()) out += ' ';
        out += alphabet.label(phrase[i]);
    }
    return out;
}

cgflz::EncoderSpec load_encoder(const std::string& path) {
    return cgflz::parse_encoder_spec(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"empirical cumulant generating functions of code lengths:\n"
                 "incremental-parsing coders, finite-state tables, tilted block codes,\n"
                 "and machine checks of the bounds that sandwich them"};
    app.require_subcommand(1);

    std::string format = "json", out_path;
    auto add_report_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "report format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };

    // ---- analyze-fv ----------------------------------------------------
    SequenceArgs fv_in;
    std::string fv_lambda = "0.25,0.5,1,2,4";
    std::string fv_coder = "tilted-block", fv_encoder_path;
    cgflz::AnalyzeFvOptions fv_opt;
    auto* fv = app.add_subcommand(
        "analyze-fv", "block-coder CGF with Renyi and phrase-count converses");
    add_sequence_flags(fv, fv_in, "fixed-to-variable analysis");
    fv->add_option("--ell", fv_opt.ell, "block length")->required();
    fv->add_option("--lambda", fv_lambda, "comma-separated tilt grid");
    auto* fv_states = fv->add_option("--states", fv_opt.states,
                                     "encoder state count for the converses (default 1)");
    fv->add_option("--coder", fv_coder, "tilted-block | encoder-table | block-lz")
        ->check(CLI::IsMember({"tilted-block", "encoder-table", "block-lz"}));
    fv->add_option("--encoder", fv_encoder_path, "table file for coder=encoder-table");
    fv->add_option("--z1", fv_opt.z1, "start state for coder=encoder-table");
    fv->add_flag("--truncate", fv_opt.truncate, "drop the trailing partial block");
    add_report_flags(fv);

    // ---- analyze-vv ----------------------------------------------------
    SequenceArgs vv_in;
    std::string vv_lambda = "0.25,0.5,1,2,4", vv_parsing_path;
    cgflz::AnalyzeVvOptions vv_opt;
    auto* vv = app.add_subcommand(
        "analyze-vv", "per-phrase CGF of the incremental code with its sandwich");
    add_sequence_flags(vv, vv_in, "variable-to-variable analysis");
    vv->add_option("--lambda", vv_lambda, "comma-separated tilt grid");
    vv->add_option("--states", vv_opt.states,
                   "encoder state count for the converses (default 1)");
    vv->add_option("--parsing", vv_parsing_path,
                   "parsing file (cumulative boundaries); default: incremental");
    add_report_flags(vv);

    // ---- sideinfo ------------------------------------------------------
    SequenceArgs si_x;
    std::string si_side_path, si_side_alphabet_path, si_lambda = "0.25,0.5,1,2,4";
    std::size_t si_side_alpha = 2;
    std::string si_encoder_path;
    cgflz::AnalyzeSideinfoOptions si_opt;
    std::size_t si_ell = 0;
    auto* si = app.add_subcommand(
        "sideinfo", "conditional CGF under joint parsing with side information");
    add_sequence_flags(si, si_x, "sequence to compress");
    si->add_option("side", si_side_path, "side-information sequence file")->required();
    si->add_option("--side-alphabet", si_side_alphabet_path,
                   "alphabet declaration for the side sequence");
    si->add_option("--side-alpha", si_side_alpha,
                   "canonical side alphabet size (default 2)");
    si->add_option("--lambda", si_lambda, "comma-separated tilt grid");
    si->add_option("--states", si_opt.states,
                   "encoder state count for the converses (default 1)");
    auto* si_ell_opt =
        si->add_option("--ell", si_ell, "block length for the block converse row");
    si->add_option("--encoder", si_encoder_path,
                   "side-input table to measure against the block converse");
    si->add_option("--z1", si_opt.z1, "start state for --encoder");
    si->add_flag("--truncate", si_opt.truncate, "drop the trailing partial block");
    add_report_flags(si);

    // ---- lz ------------------------------------------------------------
    auto* lz = app.add_subcommand("lz", "incremental parsing and its codec");
    lz->require_subcommand(1);
    SequenceArgs lzp_in;
    bool lzp_max_distinct = false;
    auto* lzp = lz->add_subcommand("parse", "incremental (or max-distinct) parsing");
    add_sequence_flags(lzp, lzp_in, "to parse");
    lzp->add_flag("--max-distinct", lzp_max_distinct,
                  "largest distinct parsing instead of incremental");
    SequenceArgs lze_in;
    std::string lze_out;
    auto* lze = lz->add_subcommand("encode", "serialize the incremental-parsing code");
    add_sequence_flags(lze, lze_in, "to encode");
    lze->add_option("--out", lze_out, "stream output file")->required();
    std::string lzd_in, lzd_out;
    auto* lzd = lz->add_subcommand("decode", "decode a serialized stream");
    lzd->add_option("stream", lzd_in, "stream file")->required();
    lzd->add_option("--out", lzd_out, "decoded token-text output file");

    // ---- encoder -------------------------------------------------------
    auto* enc = app.add_subcommand("encoder", "finite-state table tools");
    enc->require_subcommand(1);
    std::string encr_table;
    SequenceArgs encr_in;
    std::string encr_side_path, encr_side_alphabet_path;
    std::size_t encr_side_alpha = 2, encr_z1 = 0;
    auto* encr = enc->add_subcommand("run", "run a table over a sequence");
    encr->add_option("table", encr_table, "encoder table file")->required();
    add_sequence_flags(encr, encr_in, "to encode");
    encr->add_option("--side", encr_side_path, "side-information sequence file");
    encr->add_option("--side-alphabet", encr_side_alphabet_path,
                     "alphabet declaration for the side sequence");
    encr->add_option("--side-alpha", encr_side_alpha,
                     "canonical side alphabet size (default 2)");
    encr->add_option("--z1", encr_z1, "start state (default 0)");
    std::string encc_table;
    std::size_t encc_depth = 8;
    auto* encc = enc->add_subcommand("check-il", "bounded-depth information-losslessness");
    encc->add_option("table", encc_table, "encoder table file")->required();
    encc->add_option("--depth", encc_depth, "certification depth (default 8)");
    std::size_t ene_states = 1, ene_alpha = 2, ene_maxlen = 1, ene_depth = 6;
    bool ene_count_only = false;
    std::string ene_out;
    auto* ene = enc->add_subcommand("enumerate", "all small certified tables");
    ene->add_option("--states", ene_states, "maximum state count (default 1)");
    ene->add_option("--alpha", ene_alpha, "input alphabet size (default 2)");
    ene->add_option("--max-output-len", ene_maxlen, "maximum output word bits (default 1)");
    ene->add_option("--depth", ene_depth, "certification depth (default 6)");
    ene->add_flag("--count-only", ene_count_only, "print only the table count");
    ene->add_option("--out", ene_out, "write the listing to a file");

    // ---- gen -----------------------------------------------------------
    std::string gen_kind = "uniform", gen_out;
    std::size_t gen_n = 0, gen_alpha = 2;
    std::uint64_t gen_seed = 42;
    double gen_persistence = 0.9;
    auto* gen = app.add_subcommand("gen", "deterministic sequence generator");
    gen->add_option("--kind", gen_kind,
                    "uniform | markov | periodic | constant (default uniform)");
    gen->add_option("--n", gen_n, "sequence length")->required();
    gen->add_option("--alpha", gen_alpha, "alphabet size (default 2)");
    gen->add_option("--seed", gen_seed, "generator seed (default 42)");
    gen->add_option("--persistence", gen_persistence,
                    "markov stay probability (default 0.9)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // ---- verify --------------------------------------------------------
    cgflz::VerifyOptions verify_opt;
    std::string verify_lambda, verify_sizes, verify_alphas;
    auto* ver = app.add_subcommand("verify", "run every invariant suite");
    ver->add_option("--seed", verify_opt.seed, "suite seed (default 42)");
    ver->add_option("--trials", verify_opt.trials, "trials per suite (default 50)");
    ver->add_option("--sizes", verify_sizes, "comma-separated sequence lengths");
    ver->add_option("--alphas", verify_alphas, "comma-separated alphabet sizes");
    ver->add_option("--lambda", verify_lambda, "comma-separated tilt grid");
    ver->add_option("--depth", verify_opt.depth,
                    "enumeration certification depth (default 6)");
    ver->add_option("--enum-states", verify_opt.enum_states,
                    "enumeration state cap (default 2)");
    ver->add_option("--enum-max-output-len", verify_opt.enum_max_output_len,
                    "enumeration output-word cap (default 1)");
    ver->add_option("--enum-x-trials", verify_opt.enum_x_trials,
                    "inputs per enumerated table (default 8)");
    ver->add_option("--enum-x-len", verify_opt.enum_x_len,
                    "input length for enumerated tables (default 32)");
    add_report_flags(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fv->parsed()) {
            fv_opt.lambdas = parse_lambdas(fv_lambda);
            fv_opt.input_path = fv_in.path;
            if (fv_coder == "tilted-block") fv_opt.coder = cgflz::FvCoder::TiltedBlock;
            if (fv_coder == "block-lz") fv_opt.coder = cgflz::FvCoder::BlockLz;
            if (fv_coder == "encoder-table") {
                fv_opt.coder = cgflz::FvCoder::EncoderTable;
                if (fv_encoder_path.empty())
                    throw std::invalid_argument("coder=encoder-table needs --encoder");
                fv_opt.encoder = load_encoder(fv_encoder_path);
                if (fv_states->count() == 0) fv_opt.states = fv_opt.encoder->states;
            }
            auto res = cgflz::analyze_fv(fv_in.load(), fv_opt);
            emit(res.report, format, out_path);
            return res.violations == 0 ? 0 : 1;
        }
        if (vv->parsed()) {
            vv_opt.lambdas = parse_lambdas(vv_lambda);
            vv_opt.input_path = vv_in.path;
            auto x = vv_in.load();
            if (!vv_parsing_path.empty()) {
                vv_opt.parsing = cgflz::load_parsing(read_file(vv_parsing_path), x);
                vv_opt.parsing_path = vv_parsing_path;
            }
            auto res = cgflz::analyze_vv(x, vv_opt);
            emit(res.report, format, out_path);
            return res.violations == 0 ? 0 : 1;
        }
        if (si->parsed()) {
            si_opt.lambdas = parse_lambdas(si_lambda);
            si_opt.input_path = si_x.path;
            si_opt.side_path = si_side_path;
            if (si_ell_opt->count() > 0) si_opt.ell = si_ell;
            if (!si_encoder_path.empty()) si_opt.encoder = load_encoder(si_encoder_path);
            auto x = si_x.load();
            auto side_alphabet = si_side_alphabet_path.empty()
                                     ? cgflz::Alphabet::indexed(si_side_alpha)
                                     : cgflz::load_alphabet(
                                           read_file(si_side_alphabet_path));
            auto u = cgflz::load_sequence(read_file(si_side_path), side_alphabet,
                                          si_x.raw ? cgflz::SequenceFormat::RawBytes
                                                   : cgflz::SequenceFormat::TokenText);
            auto res = cgflz::analyze_sideinfo(x, u, si_opt);
            emit(res.report, format, out_path);
            return res.violations == 0 ? 0 : 1;
        }
        if (lzp->parsed()) {
            auto x = lzp_in.load();
            Json j;
            std::vector<std::size_t> boundaries;
            if (lzp_max_distinct) {
                auto res = cgflz::max_distinct_parse(x);
                j["method"] = "max-distinct";
                j["exact"] = res.exact;
                j["c"] = res.count;
                j["c_distinct"] = res.distinct_count;
                boundaries = res.parsing.boundaries;
                j["last_incomplete"] = res.parsing.last_incomplete;
                auto phrases = cgflz::split_phrases(x, res.parsing);
                Json pj = Json::array();
                for (const auto& p : phrases) pj.push_back(phrase_string(x.alphabet, p));
                j["phrases"] = std::move(pj);
            } else {
                auto res = cgflz::incremental_parse(x);
                j["method"] = "incremental";
                j["c"] = res.c();
                boundaries = res.parsing.boundaries;
                j["last_incomplete"] = res.parsing.last_incomplete;
                auto phrases = cgflz::split_phrases(x, res.parsing);
                Json pj = Json::array();
                for (const auto& p : phrases) pj.push_back(phrase_string(x.alphabet, p));
                j["phrases"] = std::move(pj);
                j["phrase_lengths"] = cgflz::lz_phrase_lengths(res.c(), x.alpha());
            }
            j["boundaries"] = boundaries;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (lze->parsed()) {
            auto x = lze_in.load();
            auto enc_res = cgflz::lz_encode(x);
            write_file(lze_out, std::string_view(
                                    reinterpret_cast<const char*>(enc_res.stream.data()),
                                    enc_res.stream.size()));
            Json j;
            j["c"] = enc_res.parsing.phrase_count();
            j["payload_bits"] = enc_res.payload_bits;
            j["stream_bytes"] = enc_res.stream.size();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (lzd->parsed()) {
            auto x = cgflz::lz_decode(read_bytes(lzd_in));
            auto text = cgflz::format_tokens(x) + "\n";
            if (lzd_out.empty())
                std::cout << text;
            else {
                write_file(lzd_out, text);
                Json j;
                j["n"] = x.size();
                j["alpha"] = x.alpha();
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
        if (encr->parsed()) {
            auto spec = load_encoder(encr_table);
            auto x = encr_in.load();
            std::optional<cgflz::SymbolSequence> side;
            if (!encr_side_path.empty()) {
                auto side_alphabet = encr_side_alphabet_path.empty()
                                         ? cgflz::Alphabet::indexed(encr_side_alpha)
                                         : cgflz::load_alphabet(
                                               read_file(encr_side_alphabet_path));
                side = cgflz::load_sequence(read_file(encr_side_path), side_alphabet,
                                            encr_in.raw
                                                ? cgflz::SequenceFormat::RawBytes
                                                : cgflz::SequenceFormat::TokenText);
            }
            auto run = cgflz::run_encoder(spec, x, encr_z1, side ? &*side : nullptr);
            Json j;
            j["states"] = run.states;
            j["outputs"] = run.outputs;
            j["lengths"] = run.lengths;
            j["total_bits"] = run.total_bits;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (encc->parsed()) {
            auto spec = load_encoder(encc_table);
            auto il = cgflz::check_il(spec, encc_depth);
            Json j;
            j["certified"] = il.certified;
            j["depth"] = il.depth;
            if (!il.certified) {
                j["z1"] = il.z1;
                j["refuted_length"] = il.refuted_length;
                auto word = [](const std::vector<cgflz::Symbol>& v) {
                    std::string s;
                    for (auto a : v) s += std::to_string(a) + " ";
                    if (!s.empty()) s.pop_back();
                    return s;
                };
                j["witness_a"] = word(il.witness_a);
                j["witness_b"] = word(il.witness_b);
                if (spec.has_side()) j["witness_side"] = word(il.witness_side);
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (ene->parsed()) {
            std::size_t count = 0;
            Json tables = Json::array();
            cgflz::enumerate_small_il_encoders(
                ene_states, ene_alpha, ene_maxlen, ene_depth,
                [&](const cgflz::EncoderSpec& spec) {
                    ++count;
                    if (!ene_count_only) tables.push_back(cgflz::format_encoder_spec(spec));
                });
            Json j;
            j["count"] = count;
            if (!ene_count_only) j["tables"] = std::move(tables);
            std::string text = j.dump(2) + "\n";
            if (ene_out.empty())
                std::cout << text;
            else
                write_file(ene_out, text);
            return 0;
        }
        if (gen->parsed()) {
            auto kind = cgflz::parse_gen_kind(
                gen_kind == "uniform-random" ? "uniform" : gen_kind);
            auto x = cgflz::generate_sequence(kind, gen_n, gen_alpha, gen_seed,
                                              gen_persistence);
            auto text = cgflz::format_tokens(x) + "\n";
            if (gen_out.empty())
                std::cout << text;
            else {
                write_file(gen_out, text);
                Json j;
                j["kind"] = cgflz::gen_kind_name(kind);
                j["n"] = x.size();
                j["alpha"] = x.alpha();
                j["seed"] = gen_seed;
                j["rng"] = cgflz::Rng::name();
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
        if (ver->parsed()) {
            if (!verify_lambda.empty()) verify_opt.lambdas = parse_lambdas(verify_lambda);
            auto parse_sizes = [](const std::string& list) {
                std::vector<std::size_t> out;
                std::stringstream ss{list};
                std::string item;
                while (std::getline(ss, item, ','))
                    out.push_back(std::stoull(item));
                if (out.empty()) throw std::invalid_argument("empty list");
                return out;
            };
            if (!verify_sizes.empty()) verify_opt.sizes = parse_sizes(verify_sizes);
            if (!verify_alphas.empty()) verify_opt.alphas = parse_sizes(verify_alphas);
            auto results = cgflz::run_verify_suites(verify_opt);
            auto res = cgflz::verify_report(verify_opt, results);
            emit(res.report, format, out_path);
            return res.violations == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
