#include "cgflz/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cgflz/cgf.hpp"
#include "cgflz/empirical.hpp"
#include "cgflz/errors.hpp"
#include "cgflz/lz78.hpp"
#include "cgflz/sideinfo.hpp"
#include "cgflz/tilted_code.hpp"

namespace cgflz {
namespace {

Json measured_json(const std::string& name, double value, const char* scale,
                   const std::string& annotation = "") {
    Json j;
    j["name"] = name;
    j["value"] = value;
    j["scale"] = scale;
    if (!annotation.empty()) j["annotation"] = annotation;
    return j;
}

Json inequality_json(const SlackPolicy& slack, const std::string& name,
                     const char* scale, const std::string& lhs_name, double lhs,
                     const std::string& rhs_name, double rhs, std::size_t& violations,
                     const std::string& note = "") {
    bool pass = slack.leq(lhs, rhs);
    if (!pass) ++violations;
    Json j;
    j["name"] = name;
    j["scale"] = scale;
    j["lhs_name"] = lhs_name;
    j["lhs"] = lhs;
    j["rhs_name"] = rhs_name;
    j["rhs"] = rhs;
    j["pass"] = pass;
    if (!note.empty()) j["note"] = note;
    return j;
}

Json input_json(const SymbolSequence& x, const std::string& path) {
    Json j;
    j["file"] = path.empty() ? "-" : path;
    j["alpha"] = x.alpha();
    j["n"] = x.size();
    return j;
}

Json lambda_grid_json(const std::vector<Rational>& lambdas) {
    Json grid = Json::array();
    for (const auto& l : lambdas) grid.push_back(l.str());
    return grid;
}

Json slack_json(const SlackPolicy& s) {
    Json j;
    j["abs"] = s.abs_slack;
    j["rel"] = s.rel_slack;
    return j;
}

Json report_skeleton(const char* command) {
    Json r;
    r["format_version"] = kReportFormatVersion;
    r["command"] = command;
    return r;
}

const char* fv_coder_name(FvCoder c) {
    switch (c) {
        case FvCoder::TiltedBlock: return "tilted-block";
        case FvCoder::EncoderTable: return "encoder-table";
        case FvCoder::BlockLz: return "block-lz";
    }
    return "?";
}

std::vector<std::vector<Symbol>> blocks_of(const SymbolSequence& x, std::size_t ell) {
    std::vector<std::vector<Symbol>> out;
    out.reserve(x.size() / ell);
    for (std::size_t start = 0; start + ell <= x.size(); start += ell)
        out.emplace_back(x.symbols.begin() + static_cast<std::ptrdiff_t>(start),
                         x.symbols.begin() + static_cast<std::ptrdiff_t>(start + ell));
    return out;
}

std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_number(const Json& v) {
    if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    return v.dump();
}

void csv_row(std::string& out, const std::string& section, const std::string& lambda,
             const std::string& name, const std::string& value, const std::string& scale,
             const std::string& pass, const std::string& note) {
    out += csv_quote(section) + ',' + csv_quote(lambda) + ',' + csv_quote(name) + ',' +
           csv_quote(value) + ',' + csv_quote(scale) + ',' + csv_quote(pass) + ',' +
           csv_quote(note) + '\n';
}

}  // namespace

bool SlackPolicy::leq(double lhs, double rhs) const {
    return lhs <= rhs + abs_slack + rel_slack * std::max(std::fabs(lhs), std::fabs(rhs));
}

Json bound_to_json(const BoundReport& b) {
    Json j;
    j["name"] = b.name;
    j["value"] = b.value;
    j["scale"] = scale_name(b.scale);
    j["vacuous"] = b.vacuous;
    j["bounds_what"] = b.bounds_what;
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

AnalysisResult analyze_fv(const SymbolSequence& x, const AnalyzeFvOptions& opt) {
    if (opt.ell == 0) throw std::invalid_argument("block length must be positive");
    if (opt.lambdas.empty()) throw std::invalid_argument("empty lambda grid");
    if (opt.coder == FvCoder::EncoderTable) {
        if (!opt.encoder) throw std::invalid_argument("encoder-table coder needs a table");
        if (opt.encoder->has_side())
            throw std::invalid_argument("this analysis takes no side input; use the "
                                        "side-information command for side tables");
    }

    SymbolSequence work = x;
    bool truncated = false;
    if (work.size() % opt.ell != 0) {
        if (!opt.truncate) throw DivisibilityError(work.size(), opt.ell);
        work.symbols.resize(work.size() - work.size() % opt.ell);
        truncated = true;
    }
    if (work.size() == 0)
        throw std::invalid_argument("no complete block to analyze");

    const std::size_t ell = opt.ell;
    const std::uint64_t n = work.size();
    auto stats = block_stats(work, ell);
    auto phrase_counts = block_restarted_counts(work, ell, PhraseCountMethod::Incremental);
    auto blocks = blocks_of(work, ell);

    // Lambda-independent coder profiles; the tilted code is rebuilt per cell.
    LengthProfile shared;
    shared.granularity = Granularity::PerBlock;
    if (opt.coder == FvCoder::EncoderTable) {
        auto run = run_encoder(*opt.encoder, work, opt.z1);
        shared.source = "encoder-table";
        for (std::size_t t = 0; t < blocks.size(); ++t) {
            std::uint64_t sum = 0;
            for (std::size_t k = 0; k < ell; ++k) sum += run.lengths[t * ell + k];
            shared.lengths.push_back(sum);
        }
    } else if (opt.coder == FvCoder::BlockLz) {
        shared.source = "block-lz";
        for (const auto& block : blocks) {
            SymbolSequence b{work.alphabet, block};
            auto parse = incremental_parse(b);
            std::uint64_t sum = 0;
            for (auto len : lz_phrase_lengths(parse.c(), work.alpha())) sum += len;
            shared.lengths.push_back(sum);
        }
    }

    SlackPolicy slack;
    AnalysisResult res;
    res.report = report_skeleton("analyze-fv");
    auto input = input_json(x, opt.input_path);
    if (truncated) {
        input["n_analyzed"] = n;
        input["truncated"] = true;
    }
    res.report["input"] = std::move(input);
    Json params;
    params["ell"] = ell;
    params["states"] = opt.states;
    params["coder"] = fv_coder_name(opt.coder);
    if (opt.coder == FvCoder::EncoderTable) params["z1"] = opt.z1;
    params["lambda_grid"] = lambda_grid_json(opt.lambdas);
    res.report["params"] = std::move(params);
    res.report["slack"] = slack_json(slack);
    Json coder;
    coder["block_count"] = stats.block_count;
    coder["distinct_blocks"] = stats.counts.size();
    coder["block_phrase_counts"] = phrase_counts.counts;
    res.report["coder"] = std::move(coder);

    Json cells = Json::array();
    for (const auto& lam : opt.lambdas) {
        const double lv = lam.value();
        Json cell;
        cell["lambda"] = lam.str();
        cell["lambda_value"] = lv;

        const LengthProfile* prof = &shared;
        LengthProfile tilted_prof;
        if (opt.coder == FvCoder::TiltedBlock) {
            auto code = build_tilted_code(stats, lam);
            tilted_prof.granularity = Granularity::PerBlock;
            tilted_prof.source = "tilted-block";
            for (const auto& block : blocks)
                tilted_prof.lengths.push_back(code.entries[code.index.at(block)].length);
            prof = &tilted_prof;
            Json cc;
            cc["kraft_sum"] = code.kraft_sum;
            cc["header_bits"] = code.header_bits;
            cell["coder"] = std::move(cc);
            cell["inequalities_extra"] = Json::array(
                {inequality_json(slack, "kraft", "mass", "kraft_sum", code.kraft_sum,
                                 "one", 1.0, res.violations)});
        }

        auto lengths_d = prof->as_doubles();
        auto fv = fv_cgf(lengths_d, ell, lv);
        double renyi = renyi_entropy(stats, lv);
        Json measured = Json::array();
        measured.push_back(
            measured_json("fv_cgf", fv.value, scale_name(Scale::BitsPerSymbol),
                          fv.annotation));
        measured.push_back(measured_json(
            "renyi_block_entropy", renyi, scale_name(Scale::BitsPerSymbol),
            lv == 0.0 ? "lambda=0: Shannon block entropy" : ""));
        cell["measured"] = std::move(measured);

        Json bounds = Json::array(), ineqs = Json::array();
        if (lv > 0.0) {
            auto b_renyi = fv_renyi_lower_bound(stats, lv, opt.states);
            auto b_lz = fv_block_lz_lower_bound(phrase_counts, n, lv, opt.states);
            bounds.push_back(bound_to_json(b_renyi));
            bounds.push_back(bound_to_json(b_lz));
            ineqs.push_back(inequality_json(
                slack, "fv_cgf_above_renyi_floor", scale_name(Scale::BitsPerSymbol),
                b_renyi.name, b_renyi.value, "fv_cgf", fv.value, res.violations));
            ineqs.push_back(inequality_json(
                slack, "fv_cgf_above_block_lz_floor", scale_name(Scale::BitsPerSymbol),
                b_lz.name, b_lz.value, "fv_cgf", fv.value, res.violations));
            if (opt.coder == FvCoder::TiltedBlock)
                ineqs.push_back(inequality_json(
                    slack, "tilted_achievability", scale_name(Scale::BitsPerSymbol),
                    "fv_cgf", fv.value, "renyi_block_entropy_plus_1_over_ell",
                    renyi + 1.0 / static_cast<double>(ell), res.violations));
        } else {
            cell["note"] = "lambda = 0: converse bounds need lambda > 0";
        }
        if (cell.contains("inequalities_extra")) {
            for (auto& e : cell["inequalities_extra"]) ineqs.push_back(std::move(e));
            cell.erase("inequalities_extra");
        }
        cell["bounds"] = std::move(bounds);
        cell["inequalities"] = std::move(ineqs);
        cells.push_back(std::move(cell));
    }
    res.report["cells"] = std::move(cells);
    res.report["violations"] = res.violations;
    return res;
}

AnalysisResult analyze_vv(const SymbolSequence& x, const AnalyzeVvOptions& opt) {
    if (opt.lambdas.empty()) throw std::invalid_argument("empty lambda grid");
    Parsing parsing;
    if (opt.parsing) {
        parsing = *opt.parsing;
        auto check = verify_parsing(x, parsing);
        if (!check.ok) throw std::invalid_argument("invalid parsing: " + check.violation);
        if (!parsing.distinct)
            throw std::invalid_argument("analysis needs a distinct parsing");
    } else {
        parsing = incremental_parse(x).parsing;
    }
    const std::uint64_t c = parsing.phrase_count();
    const std::uint64_t n = x.size();
    auto lengths = lz_phrase_lengths(c, x.alpha());
    std::vector<double> lengths_d(lengths.begin(), lengths.end());

    SlackPolicy slack;
    AnalysisResult res;
    res.report = report_skeleton("analyze-vv");
    res.report["input"] = input_json(x, opt.input_path);
    Json params;
    params["states"] = opt.states;
    params["parsing"] = opt.parsing ? (opt.parsing_path.empty() ? "file" : opt.parsing_path)
                                    : "incremental";
    params["lambda_grid"] = lambda_grid_json(opt.lambdas);
    res.report["params"] = std::move(params);
    res.report["slack"] = slack_json(slack);
    const std::uint64_t c_distinct = parsing.distinct_phrase_count();
    Json coder;
    coder["c"] = c;
    coder["c_distinct"] = c_distinct;
    coder["last_incomplete"] = parsing.last_incomplete;
    coder["lz_complexity"] =
        c * std::log2(static_cast<double>(c)) / static_cast<double>(n);
    res.report["coder"] = std::move(coder);

    Json cells = Json::array();
    for (const auto& lam : opt.lambdas) {
        const double lv = lam.value();
        Json cell;
        cell["lambda"] = lam.str();
        cell["lambda_value"] = lv;
        auto vv = vv_cgf(lengths_d, n, lv);
        Json measured = Json::array();
        measured.push_back(measured_json("vv_cgf", vv.value,
                                         scale_name(Scale::BitsPerSymbol), vv.annotation));
        Json bounds = Json::array(), ineqs = Json::array();
        if (lv > 0.0) {
            double sum = exp_sum(lengths_d, lv);
            measured.push_back(
                measured_json("vv_exp_sum", sum, scale_name(Scale::ExpSum)));
            auto b_pack = vv_packing_lower_bound(c_distinct, opt.states, lv);
            auto b_up = vv_lz_upper_bound(c, x.alpha(), lv);
            bounds.push_back(bound_to_json(b_pack));
            ineqs.push_back(inequality_json(slack, "exp_sum_above_packing_floor",
                                            scale_name(Scale::ExpSum), b_pack.name,
                                            b_pack.value, "vv_exp_sum", sum,
                                            res.violations));
            if (c_distinct >= 2) {
                auto b_kraft = vv_kraft_lower_bound(c_distinct, opt.states, lv, x.alpha());
                bounds.push_back(bound_to_json(b_kraft));
                ineqs.push_back(inequality_json(slack, "exp_sum_above_kraft_floor",
                                                scale_name(Scale::ExpSum), b_kraft.name,
                                                b_kraft.value, "vv_exp_sum", sum,
                                                res.violations));
            }
            bounds.push_back(bound_to_json(b_up));
            ineqs.push_back(inequality_json(slack, "exp_sum_below_lz_ceiling",
                                            scale_name(Scale::ExpSum), "vv_exp_sum", sum,
                                            b_up.name, b_up.value, res.violations));
        } else {
            cell["note"] = "lambda = 0: converse bounds need lambda > 0";
        }
        cell["measured"] = std::move(measured);
        cell["bounds"] = std::move(bounds);
        cell["inequalities"] = std::move(ineqs);
        cells.push_back(std::move(cell));
    }
    res.report["cells"] = std::move(cells);
    res.report["violations"] = res.violations;
    return res;
}

AnalysisResult analyze_sideinfo(const SymbolSequence& x, const SymbolSequence& u,
                                const AnalyzeSideinfoOptions& opt) {
    if (opt.lambdas.empty()) throw std::invalid_argument("empty lambda grid");
    if (opt.encoder && !opt.encoder->has_side())
        throw std::invalid_argument("side-information analysis needs a side-input table");

    auto jp = joint_incremental_parse(x, u);
    auto profile = conditional_lz_lengths(jp, x.alpha());
    auto lengths_d = profile.as_doubles();
    const std::uint64_t n = x.size();

    std::optional<JointBlockStats> joint;
    std::optional<LengthProfile> fv_profile;
    std::size_t block_count = 0;
    if (opt.ell) {
        if (*opt.ell == 0) throw std::invalid_argument("block length must be positive");
        std::size_t usable = x.size() - x.size() % *opt.ell;
        if (x.size() % *opt.ell != 0 && !opt.truncate)
            throw DivisibilityError(x.size(), *opt.ell);
        if (usable == 0) throw std::invalid_argument("no complete block to analyze");
        SymbolSequence xw = x, uw = u;
        xw.symbols.resize(usable);
        uw.symbols.resize(usable);
        joint = joint_block_stats(xw, uw, *opt.ell);
        block_count = usable / *opt.ell;
        if (opt.encoder) {
            auto run = run_encoder(*opt.encoder, xw, opt.z1, &uw);
            LengthProfile p;
            p.granularity = Granularity::PerBlock;
            p.source = "encoder-table";
            for (std::size_t t = 0; t < block_count; ++t) {
                std::uint64_t sum = 0;
                for (std::size_t k = 0; k < *opt.ell; ++k)
                    sum += run.lengths[t * *opt.ell + k];
                p.lengths.push_back(sum);
            }
            fv_profile = std::move(p);
        }
    }

    SlackPolicy slack;
    AnalysisResult res;
    res.report = report_skeleton("sideinfo");
    auto input = input_json(x, opt.input_path);
    input["side_file"] = opt.side_path.empty() ? "-" : opt.side_path;
    input["side_alpha"] = u.alpha();
    res.report["input"] = std::move(input);
    Json params;
    params["states"] = opt.states;
    if (opt.ell) params["ell"] = *opt.ell;
    if (opt.encoder) params["z1"] = opt.z1;
    params["lambda_grid"] = lambda_grid_json(opt.lambdas);
    res.report["params"] = std::move(params);
    res.report["slack"] = slack_json(slack);
    const auto floor_counts = jp.distinct_context_counts();
    Json coder;
    coder["c"] = jp.c();
    coder["last_incomplete"] = jp.parsing.last_incomplete;
    coder["context_count"] = jp.context_count();
    coder["context_counts"] = jp.context_counts;
    coder["conditional_compressibility"] =
        conditional_compressibility(jp.context_counts, n);
    res.report["coder"] = std::move(coder);

    Json cells = Json::array();
    for (const auto& lam : opt.lambdas) {
        const double lv = lam.value();
        Json cell;
        cell["lambda"] = lam.str();
        cell["lambda_value"] = lv;
        auto cgf = conditional_vv_cgf(lengths_d, jp.context_of_phrase, n, lv);
        Json measured = Json::array();
        measured.push_back(measured_json("cond_vv_cgf", cgf.value,
                                         scale_name(Scale::BitsPerSymbol),
                                         cgf.annotation));
        Json bounds = Json::array(), ineqs = Json::array();
        if (lv > 0.0) {
            double sum = exp_sum(lengths_d, lv);
            measured.push_back(
                measured_json("cond_vv_exp_sum", sum, scale_name(Scale::ExpSum)));
            auto b_pack = cond_vv_packing_lower_bound(floor_counts, opt.states, lv);
            auto b_kraft =
                cond_vv_kraft_lower_bound(floor_counts, opt.states, lv, x.alpha());
            auto b_up = cond_vv_lz_upper_bound(jp.context_counts, x.alpha(), lv);
            bounds.push_back(bound_to_json(b_pack));
            bounds.push_back(bound_to_json(b_kraft));
            bounds.push_back(bound_to_json(b_up));
            ineqs.push_back(inequality_json(slack, "cond_exp_sum_above_packing_floor",
                                            scale_name(Scale::ExpSum), b_pack.name,
                                            b_pack.value, "cond_vv_exp_sum", sum,
                                            res.violations));
            ineqs.push_back(inequality_json(slack, "cond_exp_sum_above_kraft_floor",
                                            scale_name(Scale::ExpSum), b_kraft.name,
                                            b_kraft.value, "cond_vv_exp_sum", sum,
                                            res.violations));
            ineqs.push_back(inequality_json(slack, "cond_exp_sum_below_lz_ceiling",
                                            scale_name(Scale::ExpSum), "cond_vv_exp_sum",
                                            sum, b_up.name, b_up.value, res.violations));
            if (joint) {
                auto b_fv = cond_fv_renyi_lower_bound(*joint, lv, opt.states);
                bounds.push_back(bound_to_json(b_fv));
                if (fv_profile) {
                    auto fv_d = fv_profile->as_doubles();
                    double mean =
                        exp_sum(fv_d, lv) / static_cast<double>(block_count);
                    measured.push_back(measured_json("cond_fv_exp_mean", mean,
                                                     scale_name(Scale::ExpSum)));
                    ineqs.push_back(inequality_json(
                        slack, "cond_fv_mean_above_renyi_floor",
                        scale_name(Scale::ExpSum), b_fv.name, b_fv.value,
                        "cond_fv_exp_mean", mean, res.violations));
                }
            }
        } else {
            cell["note"] = "lambda = 0: converse bounds need lambda > 0";
        }
        cell["measured"] = std::move(measured);
        cell["bounds"] = std::move(bounds);
        cell["inequalities"] = std::move(ineqs);
        cells.push_back(std::move(cell));
    }
    res.report["cells"] = std::move(cells);
    res.report["violations"] = res.violations;
    return res;
}

std::string report_to_csv(const Json& report) {
    std::string out = "section,lambda,name,value,scale,pass,note\n";
    if (report.contains("coder")) {
        for (const auto& [key, value] : report["coder"].items())
            if (value.is_number())
                csv_row(out, "summary", "", key, csv_number(value), "", "", "");
    }
    if (report.contains("cells")) {
        for (const auto& cell : report["cells"]) {
            std::string lam = cell["lambda"].get<std::string>();
            for (const auto& m : cell.value("measured", Json::array()))
                csv_row(out, "measured", lam, m["name"].get<std::string>(),
                        csv_number(m["value"]), m.value("scale", ""), "",
                        m.value("annotation", ""));
            for (const auto& b : cell.value("bounds", Json::array())) {
                std::string note = b.value("note", "");
                if (b.value("vacuous", false))
                    note = note.empty() ? "vacuous" : note + "; vacuous";
                csv_row(out, "bound", lam, b["name"].get<std::string>(),
                        csv_number(b["value"]), b.value("scale", ""), "", note);
            }
            for (const auto& q : cell.value("inequalities", Json::array())) {
                double margin = q["rhs"].get<double>() - q["lhs"].get<double>();
                csv_row(out, "inequality", lam, q["name"].get<std::string>(),
                        csv_number(Json(margin)), q.value("scale", ""),
                        q["pass"].get<bool>() ? "true" : "false",
                        q["lhs_name"].get<std::string>() + " <= " +
                            q["rhs_name"].get<std::string>());
            }
        }
    }
    if (report.contains("checks")) {
        for (const auto& ch : report["checks"]) {
            csv_row(out, "check", "", ch["name"].get<std::string>(),
                    csv_number(ch["violations"]), "",
                    ch["violations"].get<std::uint64_t>() == 0 ? "true" : "false",
                    ch.value("first_violation", ""));
        }
    }
    return out;
}

}  // namespace cgflz
