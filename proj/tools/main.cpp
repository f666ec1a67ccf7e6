#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mullreg/core_quotient.hpp"
#include "mullreg/ladder.hpp"
#include "mullreg/mullineux.hpp"
#include "mullreg/render.hpp"
#include "mullreg/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace mullreg;

enum class Format { Text, Json, Csv };

struct Options {
    Format format = Format::Text;
    int jobs = 1;
};

int default_jobs() {
    if (const char* env = std::getenv("MULLREG_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    return 1;
}

PairList parse_pairs(const std::string& text) {
    PairList pairs;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        auto colon = token.find(':');
        if (colon == std::string::npos)
            throw BadParameters("pair '" + token + "' must look like a:b");
        pairs.emplace_back(std::stoi(token.substr(0, colon)), std::stoi(token.substr(colon + 1)));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ')
            flush();
        else
            token.push_back(c);
    }
    flush();
    if (pairs.empty())
        throw BadParameters("empty pair list");
    return pairs;
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
    if (opt.format == Format::Json)
        std::cout << j.dump() << '\n';
    else
        std::cout << text << '\n';
}

int emit_report(const Options& opt, const VerificationReport& rep, bool fail_on_violation) {
    switch (opt.format) {
    case Format::Json:
        std::cout << rep.to_json().dump() << '\n';
        break;
    case Format::Csv:
        std::cout << rep.to_csv();
        break;
    case Format::Text:
        std::cout << rep.summary();
        break;
    }
    return fail_on_violation && !rep.violations.empty() ? 1 : 0;
}

std::string quotient_text(const QuotientTuple& q) {
    std::string out;
    for (std::size_t i = 0; i < q.components.size(); ++i) {
        if (i)
            out += " | ";
        out += q.components[i].str();
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition combinatorics: Mullineux transpose, generalized column "
                 "regularization, cores/quotients, and exhaustive scanners"};
    app.require_subcommand(1);

    Options opt;
    opt.jobs = default_jobs();
    std::map<std::string, Format> fmt_map{
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case))
        ->default_val("text");

    std::string part_text, pairs_text, overlay_text = "none";
    int a = 0, b = 0, n_max = 0, b_max = 0;
    bool allow_non_coprime = false;

    auto add_partition_arg = [&](CLI::App* sub) {
        sub->add_option("partition", part_text, "comma-separated parts; \"\" or \"0\" is empty")
            ->required();
    };
    auto add_b = [&](CLI::App* sub) { sub->add_option("--b", b, "modulus b")->required(); };
    auto add_ab = [&](CLI::App* sub) {
        sub->add_option("--a", a, "slope parameter a")->required();
        add_b(sub);
    };
    auto add_scan_opts = [&](CLI::App* sub) {
        sub->add_option("--n", n_max, "largest partition size")->required();
        sub->add_option("--pairs", pairs_text, "explicit pairs a:b[,a:b...]");
        sub->add_option("--b-max", b_max, "generate all admissible pairs with b <= b-max");
        sub->add_option("--jobs", opt.jobs, "worker threads (default $MULLREG_JOBS or 1)");
    };

    auto* c_transpose = app.add_subcommand("transpose", "transpose a partition");
    add_partition_arg(c_transpose);
    auto* c_mull = app.add_subcommand("mullineux", "the Mullineux map");
    add_partition_arg(c_mull);
    add_b(c_mull);
    auto* c_mulltr = app.add_subcommand("mullineux-tr", "the Mullineux transpose");
    add_partition_arg(c_mulltr);
    add_b(c_mulltr);
    auto* c_jb = app.add_subcommand("jb", "one truncated-rim removal step");
    add_partition_arg(c_jb);
    add_b(c_jb);
    auto* c_brim = app.add_subcommand("brim", "the b-rim and its pieces and segments");
    add_partition_arg(c_brim);
    add_b(c_brim);
    auto* c_rect = app.add_subcommand("rect", "rectangular decomposition dimensions");
    add_partition_arg(c_rect);
    add_b(c_rect);
    auto* c_omega = app.add_subcommand("omega-psi", "rectangle statistics for (a,b)");
    add_partition_arg(c_omega);
    add_ab(c_omega);
    auto* c_colreg = app.add_subcommand("colreg", "column regularization");
    add_partition_arg(c_colreg);
    add_ab(c_colreg);
    auto* c_reg = app.add_subcommand("reg", "regularization");
    add_partition_arg(c_reg);
    add_ab(c_reg);
    auto* c_semireg = app.add_subcommand("semireg", "column semi-regularization");
    add_partition_arg(c_semireg);
    add_ab(c_semireg);
    auto* c_valid = app.add_subcommand("valid", "validity and regularity predicates");
    add_partition_arg(c_valid);
    add_ab(c_valid);
    auto* c_core = app.add_subcommand("core", "b-core");
    add_partition_arg(c_core);
    add_b(c_core);
    auto* c_quot = app.add_subcommand("quotient", "b-quotient");
    add_partition_arg(c_quot);
    add_b(c_quot);
    auto* c_weight = app.add_subcommand("weight", "b-weight");
    add_partition_arg(c_weight);
    add_b(c_weight);
    auto* c_hooks = app.add_subcommand("hooks", "per-box hook table with hook classes");
    add_partition_arg(c_hooks);
    add_ab(c_hooks);
    auto* c_render = app.add_subcommand("render", "ASCII Young diagram");
    add_partition_arg(c_render);
    c_render->add_option("--b", b, "modulus b (required for overlays)");
    c_render->add_option("--overlay", overlay_text, "none|brim|rect|ladders")
        ->check(CLI::IsMember({"none", "brim", "rect", "ladders"}));

    auto* c_scan_thm = app.add_subcommand("scan-theorem", "exhaustive theorem verification");
    add_scan_opts(c_scan_thm);
    auto* c_scan_rev =
        app.add_subcommand("scan-conj-reverse", "counterexample hunt, reverse direction");
    add_scan_opts(c_scan_rev);
    c_scan_rev->add_flag("--allow-non-coprime", allow_non_coprime,
                         "lift the coprimality filter (exploration only)");
    auto* c_scan_fay =
        app.add_subcommand("scan-conj-fayers", "counterexample hunt, regularized analogue");
    add_scan_opts(c_scan_fay);
    int selftest_n = 10, selftest_bmax = 5;
    auto* c_selftest = app.add_subcommand("selftest", "cross-module consistency sweep");
    c_selftest->add_option("--n", selftest_n, "largest partition size");
    c_selftest->add_option("--b-max", selftest_bmax, "largest modulus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_transpose) {
            Partition p = Partition::parse(part_text);
            Partition t = p.transposed();
            emit(opt, {{"op", "transpose"}, {"input", p.str()}, {"result", t.str()}}, t.str());
        } else if (*c_mull) {
            Partition p = Partition::parse(part_text);
            Partition m = mullineux(p, b);
            emit(opt, {{"op", "mullineux"}, {"input", p.str()}, {"b", b}, {"result", m.str()}},
                 m.str());
        } else if (*c_mulltr) {
            Partition p = Partition::parse(part_text);
            Partition m = mullineux_transpose(p, b);
            emit(opt, {{"op", "mullineux-tr"}, {"input", p.str()}, {"b", b}, {"result", m.str()}},
                 m.str());
        } else if (*c_jb) {
            Partition p = Partition::parse(part_text);
            Partition j = remove_truncated_b_rim(p, b);
            emit(opt, {{"op", "jb"}, {"input", p.str()}, {"b", b}, {"result", j.str()}}, j.str());
        } else if (*c_brim) {
            Partition p = Partition::parse(part_text);
            RimDecomposition d = b_rim(p, b);
            ordered_json pieces = ordered_json::array();
            std::string text;
            for (int k = 0; k < d.piece_count(); ++k) {
                auto [pb, pe] = d.piece_span(k);
                ordered_json boxes = ordered_json::array();
                text += "piece " + std::to_string(k + 1) + ":";
                for (int i = pb; i < pe; ++i) {
                    boxes.push_back({d.brim_boxes[i].row, d.brim_boxes[i].col});
                    text += " (" + std::to_string(d.brim_boxes[i].row) + "," +
                            std::to_string(d.brim_boxes[i].col) + ")";
                }
                text += "\n";
                pieces.push_back(boxes);
            }
            ordered_json segs = ordered_json::array();
            for (const RimSegment& s : d.segments) {
                segs.push_back({{"first", s.begin + 1},
                                {"last", s.end},
                                {"b_segment", s.is_b_segment}});
                text += "boxes " + std::to_string(s.begin + 1) + "-" + std::to_string(s.end) +
                        (s.is_b_segment ? " b-segment" : " b'-segment") + "\n";
            }
            if (!text.empty())
                text.pop_back();
            emit(opt,
                 {{"op", "brim"}, {"input", p.str()}, {"b", b}, {"pieces", pieces},
                  {"segments", segs}},
                 text);
        } else if (*c_rect) {
            Partition p = Partition::parse(part_text);
            RimDecomposition d = b_rim(p, b);
            ordered_json dims = ordered_json::array();
            std::string text;
            for (const RimRect& r : d.rectangles) {
                dims.push_back({r.height(), r.width()});
                if (!text.empty())
                    text += ' ';
                text += "(" + std::to_string(r.height()) + "," + std::to_string(r.width()) + ")";
            }
            emit(opt, {{"op", "rect"}, {"input", p.str()}, {"b", b}, {"dims", dims}}, text);
        } else if (*c_omega) {
            Partition p = Partition::parse(part_text);
            RectStats s = omega_psi(p, a, b);
            emit(opt,
                 {{"op", "omega-psi"}, {"input", p.str()}, {"a", a}, {"b", b},
                  {"omega", s.omega}, {"psi", s.psi}},
                 "omega=" + std::to_string(s.omega) + " psi=" + std::to_string(s.psi));
        } else if (*c_colreg || *c_reg) {
            Partition p = Partition::parse(part_text);
            BoxComposition c = *c_colreg ? colreg(p, a, b) : reg(p, a, b);
            bool partition = c.is_partition();
            ordered_json j{{"op", *c_colreg ? "colreg" : "reg"},
                           {"input", p.str()},
                           {"a", a},
                           {"b", b},
                           {"rows", c.row_lengths_str()},
                           {"not_a_partition", !partition}};
            if (partition)
                j["result"] = c.to_partition().str();
            emit(opt, j, c.row_lengths_str() + (partition ? "" : " not_a_partition"));
        } else if (*c_semireg) {
            Partition p = Partition::parse(part_text);
            Partition s = semireg(p, a, b);
            emit(opt,
                 {{"op", "semireg"}, {"input", p.str()}, {"a", a}, {"b", b},
                  {"result", s.str()}},
                 s.str());
        } else if (*c_valid) {
            Partition p = Partition::parse(part_text);
            bool cr = is_cr_valid(p, a, b);
            bool crl = is_cr_valid_lemma(p, a, b);
            bool rv = is_reg_valid(p, a, b);
            bool abr = is_ab_regular(p, a, b);
            emit(opt,
                 {{"op", "valid"}, {"input", p.str()}, {"a", a}, {"b", b}, {"cr_valid", cr},
                  {"cr_valid_lemma", crl}, {"reg_valid", rv}, {"ab_regular", abr}},
                 std::string("cr_valid=") + (cr ? "true" : "false") +
                     " cr_valid_lemma=" + (crl ? "true" : "false") +
                     " reg_valid=" + (rv ? "true" : "false") +
                     " ab_regular=" + (abr ? "true" : "false"));
        } else if (*c_core) {
            Partition p = Partition::parse(part_text);
            Partition c = core_b(p, b);
            emit(opt, {{"op", "core"}, {"input", p.str()}, {"b", b}, {"result", c.str()}},
                 c.str());
        } else if (*c_quot) {
            Partition p = Partition::parse(part_text);
            QuotientTuple q = quotient_b(p, b);
            ordered_json comps = ordered_json::array();
            for (const Partition& c : q.components)
                comps.push_back(c.str());
            emit(opt,
                 {{"op", "quotient"}, {"input", p.str()}, {"b", b}, {"components", comps},
                  {"weight", q.total_size()}},
                 quotient_text(q));
        } else if (*c_weight) {
            Partition p = Partition::parse(part_text);
            int w = b_weight(p, b);
            emit(opt, {{"op", "weight"}, {"input", p.str()}, {"b", b}, {"result", w}},
                 std::to_string(w));
        } else if (*c_hooks) {
            Partition p = Partition::parse(part_text);
            detail::require_ab(a, b);
            ordered_json rows = ordered_json::array();
            std::string text = "row col arm leg hook divisible shallow steep critical";
            for_each_hook(p, [&](Box box, int, int) {
                HookStats h = hook_stats(p, box);
                HookClass c = classify_hook(h, a, b);
                bool div = h.hook % b == 0;
                rows.push_back({{"row", box.row}, {"col", box.col}, {"arm", h.arm},
                                {"leg", h.leg}, {"hook", h.hook}, {"divisible", div},
                                {"shallow", c.shallow}, {"steep", c.steep},
                                {"critical", c.critical}});
                text += "\n" + std::to_string(box.row) + " " + std::to_string(box.col) + " " +
                        std::to_string(h.arm) + " " + std::to_string(h.leg) + " " +
                        std::to_string(h.hook) + " " + (div ? "1" : "0") + " " +
                        (c.shallow ? "1" : "0") + " " + (c.steep ? "1" : "0") + " " +
                        (c.critical ? "1" : "0");
            });
            emit(opt, {{"op", "hooks"}, {"input", p.str()}, {"a", a}, {"b", b}, {"boxes", rows}},
                 text);
        } else if (*c_render) {
            Partition p = Partition::parse(part_text);
            Overlay ov = Overlay::None;
            if (overlay_text == "brim")
                ov = Overlay::BRim;
            else if (overlay_text == "rect")
                ov = Overlay::Rects;
            else if (overlay_text == "ladders")
                ov = Overlay::Ladders;
            std::string grid = render_diagram(p, b, ov);
            emit(opt, {{"op", "render"}, {"input", p.str()}, {"b", b},
                       {"overlay", overlay_text}, {"grid", grid}},
                 grid.empty() ? std::string() : grid.substr(0, grid.size() - 1));
        } else if (*c_scan_thm || *c_scan_rev || *c_scan_fay) {
            PairList pairs;
            if (!pairs_text.empty()) {
                pairs = parse_pairs(pairs_text);
            } else if (b_max >= 2) {
                for (const auto& [pa, pb] : all_pairs(b_max)) {
                    if (*c_scan_rev && std::gcd(pa, pb) != 1 && !allow_non_coprime)
                        continue;
                    if (*c_scan_fay && 2 * pa >= pb)
                        continue;
                    pairs.emplace_back(pa, pb);
                }
            } else {
                throw BadParameters("provide --pairs or --b-max");
            }
            std::cerr << "scan starting: n_max=" << n_max << " pairs=" << pairs.size()
                      << " jobs=" << opt.jobs << '\n';
            VerificationReport rep;
            bool fail_on_violation = false;
            if (*c_scan_thm) {
                rep = scan_theorem(n_max, pairs, opt.jobs);
                fail_on_violation = true;
            } else if (*c_scan_rev) {
                rep = scan_conjecture_reverse(n_max, pairs, opt.jobs, allow_non_coprime);
            } else {
                rep = scan_conjecture_fayers(n_max, pairs, opt.jobs);
            }
            std::cerr << "scan finished in " << rep.duration_ms << " ms\n";
            return emit_report(opt, rep, fail_on_violation);
        } else if (*c_selftest) {
            std::cerr << "selftest starting: n_max=" << selftest_n << " b_max=" << selftest_bmax
                      << '\n';
            VerificationReport rep = brute_force_cross_checks(selftest_n, selftest_bmax);
            std::cerr << "selftest finished in " << rep.duration_ms << " ms\n";
            return emit_report(opt, rep, true);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
