// Command-line front end for the wordwalk library: apply walks, compute
// primitive generators, run the decision predicates, expand the k-bonacci
// families, plot walks as SVG, and drive the verification suites.
//
// Exit codes: 0 success/true, 1 property-false or suite failure,
// 2 invalid input, 3 I/O failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordwalk/wordwalk.hpp"

namespace ww = wordwalk;
using nlohmann::json;

namespace {

struct Output {
    bool as_json = false;
    json doc;

    explicit Output(const std::string& command) { doc["command"] = command; }

    void input(const std::string& key, const json& value) { doc["inputs"][key] = value; }
    void result(const json& value) { doc["result"] = value; }
    void diagnostic(const std::string& note) { doc["diagnostics"].push_back(note); }

    // Plain-text lines are collected next to the JSON document so both modes
    // stay in lockstep.
    std::vector<std::string> lines;
    void line(const std::string& text) { lines.push_back(text); }

    void flush() const {
        if (as_json) {
            json out = doc;
            if (!out.contains("inputs")) out["inputs"] = json::object();
            if (!out.contains("result")) out["result"] = nullptr;
            if (!out.contains("diagnostics")) out["diagnostics"] = json::array();
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
    }
};

int exit_code_for(const ww::Error&) {
    return 2; // every library error surfaced through argv is an input problem
}

ww::WordFormat format_of(bool tokens) {
    return tokens ? ww::WordFormat::tokens : ww::WordFormat::chars;
}

std::string render_word(const ww::Word& w, bool tokens) {
    return ww::print_word(w, format_of(tokens));
}

std::size_t enumeration_budget() {
    if (const char* env = std::getenv("WORDWALK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return ww::kDefaultEnumerationBudget;
}

ww::Walk parse_walk_for(const ww::Word& u, const std::string& text) {
    std::vector<int> course = ww::parse_course(text);
    if (auto issue = ww::walk_issue(course, u.size()))
        ww::raise(ww::Error::Code::invalid_input, issue->describe());
    return ww::Walk(std::move(course), u.size());
}

void print_suite(Output& out, const ww::SuiteReport& r) {
    std::string line = r.name + ": " + (r.pass ? "pass" : "FAIL") + ", " +
                       std::to_string(r.cases_checked) + " cases checked, " +
                       std::to_string(static_cast<long long>(r.millis)) + " ms";
    out.line(line);
    for (const auto& d : r.details) out.line("  " + d);
    json entry{{"name", r.name},
               {"pass", r.pass},
               {"cases_checked", r.cases_checked},
               {"millis", r.millis},
               {"details", r.details}};
    if (!out.doc.contains("result") || !out.doc["result"].is_array())
        out.doc["result"] = json::array();
    out.doc["result"].push_back(entry);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"walk-generated words: primitive generators, palindromic defects, "
                 "and k-bonacci families"};
    app.require_subcommand(1);
    app.fallthrough();

    bool tokens = false;
    bool as_json = false;
    app.add_flag("--tokens", tokens, "read and write words as whitespace-separated letter codes");
    app.add_flag("--json", as_json, "emit one JSON object per command");

    // ---- apply -----------------------------------------------------------
    std::string apply_word, apply_walk;
    auto* cmd_apply = app.add_subcommand("apply", "print u^f for a word u and walk f");
    cmd_apply->add_option("word", apply_word, "the generating word")->required();
    cmd_apply->add_option("walk", apply_walk, "comma-separated 1-based course of values")
        ->required();

    // ---- generator -------------------------------------------------------
    std::string gen_word;
    bool gen_both = false, gen_trace = false, gen_certificate = false;
    auto* cmd_generator =
        app.add_subcommand("generator", "compute the canonical primitive generator");
    cmd_generator->add_option("word", gen_word, "the word to reduce")->required();
    cmd_generator->add_flag("--both", gen_both, "print both orientations");
    cmd_generator->add_flag("--trace", gen_trace, "print the reduction steps");
    cmd_generator->add_flag("--certificate", gen_certificate,
                            "print the witness walk and replay it");

    // ---- check -----------------------------------------------------------
    auto* cmd_check = app.add_subcommand("check", "decision predicates");
    cmd_check->require_subcommand(1);
    std::string chk_a, chk_b, chk_c;
    auto* chk_primitive = cmd_check->add_subcommand("primitive", "is the word primitive?");
    chk_primitive->add_option("word", chk_a)->required();
    auto* chk_perfect = cmd_check->add_subcommand("perfect", "is the word perfect?");
    chk_perfect->add_option("word", chk_a)->required();
    auto* chk_generates = cmd_check->add_subcommand("generates", "does u generate w?");
    chk_generates->add_option("u", chk_a)->required();
    chk_generates->add_option("w", chk_b)->required();
    auto* chk_agree = cmd_check->add_subcommand("agree", "do two walks on u yield the same word?");
    chk_agree->add_option("u", chk_a)->required();
    chk_agree->add_option("f", chk_b)->required();
    chk_agree->add_option("g", chk_c)->required();
    auto* chk_defects = cmd_check->add_subcommand("defects", "list defects and their closure");
    chk_defects->add_option("word", chk_a)->required();

    // ---- kbonacci --------------------------------------------------------
    auto* cmd_kb = app.add_subcommand("kbonacci", "the k-bonacci word families");
    cmd_kb->require_subcommand(1);
    int kb_k = 0, kb_n = 0, kb_h = 0;
    auto* kb_alpha = cmd_kb->add_subcommand("alpha", "the n-th k-bonacci word");
    kb_alpha->add_option("k", kb_k)->required();
    kb_alpha->add_option("n", kb_n)->required();
    auto* kb_gamma = cmd_kb->add_subcommand("gamma", "the common primitive generator");
    kb_gamma->add_option("k", kb_k)->required();
    auto* kb_verify = cmd_kb->add_subcommand("verify", "generator check for alpha(k,n)");
    kb_verify->add_option("k", kb_k)->required();
    kb_verify->add_option("n", kb_n)->required();
    auto* kb_walk = cmd_kb->add_subcommand("walk-from", "generating walk starting at position h");
    kb_walk->add_option("k", kb_k)->required();
    kb_walk->add_option("n", kb_n)->required();
    kb_walk->add_option("start", kb_h, "the start position h")->required();

    // ---- plot ------------------------------------------------------------
    std::string plot_word, plot_walk, plot_path;
    auto* cmd_plot = app.add_subcommand("plot", "write an SVG diagram of a walk");
    cmd_plot->add_option("word", plot_word)->required();
    cmd_plot->add_option("walk", plot_walk)->required();
    cmd_plot->add_option("output", plot_path, "output SVG path")->required();

    // ---- verify ----------------------------------------------------------
    std::string suite;
    int vf_max_len = -1, vf_count = 1000, vf_orders = 20, vf_alphabet = 4;
    int vf_k = 0, vf_n_max = -1;
    std::uint64_t vf_seed = 20240913;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify
        ->add_option("suite", suite,
                     "one of: lemma, theorem1, theorem2, theorem3, theorem4, regex, "
                     "binary-alphabet")
        ->required();
    cmd_verify->add_option("--max-len", vf_max_len, "word-length bound for the sweep");
    cmd_verify->add_option("--count", vf_count, "random words to draw (theorem1)");
    cmd_verify->add_option("--orders", vf_orders, "random reduction orders per word (theorem1)");
    cmd_verify->add_option("--alphabet", vf_alphabet, "alphabet bound for random words (theorem1)");
    cmd_verify->add_option("--seed", vf_seed, "PRNG seed (theorem1)");
    cmd_verify->add_option("--k", vf_k, "restrict theorem4 to one k");
    cmd_verify->add_option("--n-max", vf_n_max, "largest n for theorem4");

    CLI11_PARSE(app, argc, argv);

    try {
        std::size_t budget = enumeration_budget();

        if (*cmd_apply) {
            Output out("apply");
            out.as_json = as_json;
            out.input("word", apply_word);
            out.input("walk", apply_walk);
            try {
                ww::Word u = ww::parse_word(apply_word, format_of(tokens));
                ww::Walk f = parse_walk_for(u, apply_walk);
                std::string rendered = render_word(ww::apply(u, f), tokens);
                out.result(rendered);
                out.line(rendered);
                out.flush();
                return 0;
            } catch (const ww::Error& e) {
                out.diagnostic(e.what());
                out.flush();
                std::cerr << e.what() << "\n";
                return exit_code_for(e);
            }
        }

        if (*cmd_generator) {
            Output out("generator");
            out.as_json = as_json;
            out.input("word", gen_word);
            try {
                ww::Word w = ww::parse_word(gen_word, format_of(tokens));
                ww::GeneratorCertificate cert = ww::primitive_generator(w);
                std::string canonical = render_word(cert.generator, tokens);
                out.result(canonical);
                out.line(canonical);
                if (gen_both && ww::reverse(cert.generator) != cert.generator) {
                    std::string other = render_word(ww::reverse(cert.generator), tokens);
                    out.doc["result"] = json::array({canonical, other});
                    out.line(other);
                }
                if (gen_trace) {
                    json steps = json::array();
                    for (const auto& step : cert.trace) {
                        std::string desc = ww::to_string(step.kind) +
                                           " p=" + std::to_string(step.position) +
                                           " k=" + std::to_string(step.radius);
                        out.line("step: " + desc);
                        steps.push_back({{"kind", ww::to_string(step.kind)},
                                         {"position", step.position},
                                         {"radius", step.radius},
                                         {"witness", ww::print_course(step.witness)}});
                    }
                    out.doc["trace"] = steps;
                }
                if (gen_certificate) {
                    bool ok = ww::apply(cert.oriented_generator(), cert.walk) == w;
                    out.line("witness: " + ww::print_course(cert.walk) +
                             (cert.reversed ? " (on the reversed orientation)" : ""));
                    out.line(std::string("replay: ") + (ok ? "ok" : "FAILED"));
                    out.doc["certificate"] = {{"walk", ww::print_course(cert.walk)},
                                              {"reversed", cert.reversed},
                                              {"replay_ok", ok}};
                    if (!ok) {
                        out.flush();
                        return 1;
                    }
                }
                out.flush();
                return 0;
            } catch (const ww::Error& e) {
                out.diagnostic(e.what());
                out.flush();
                std::cerr << e.what() << "\n";
                return exit_code_for(e);
            }
        }

        if (*cmd_check) {
            Output out("check");
            out.as_json = as_json;
            try {
                if (*chk_primitive || *chk_perfect) {
                    ww::Word w = ww::parse_word(chk_a, format_of(tokens));
                    out.input("word", chk_a);
                    bool value = *chk_primitive ? ww::is_primitive(w) : ww::is_perfect(w);
                    out.doc["command"] = *chk_primitive ? "check primitive" : "check perfect";
                    out.result(value);
                    out.line(value ? "true" : "false");
                    out.flush();
                    return value ? 0 : 1;
                }
                if (*chk_generates) {
                    out.doc["command"] = "check generates";
                    out.input("u", chk_a);
                    out.input("w", chk_b);
                    ww::Word u = ww::parse_word(chk_a, format_of(tokens));
                    ww::Word w = ww::parse_word(chk_b, format_of(tokens));
                    bool value = ww::generates(u, w);
                    out.result(value);
                    out.line(value ? "true" : "false");
                    out.flush();
                    return value ? 0 : 1;
                }
                if (*chk_agree) {
                    out.doc["command"] = "check agree";
                    out.input("u", chk_a);
                    out.input("f", chk_b);
                    out.input("g", chk_c);
                    ww::Word u = ww::parse_word(chk_a, format_of(tokens));
                    ww::Walk f = parse_walk_for(u, chk_b);
                    ww::Walk g = parse_walk_for(u, chk_c);
                    bool value = ww::walks_agree(u, f, g);
                    out.result(value);
                    out.line(value ? "true" : "false");
                    out.flush();
                    return value ? 0 : 1;
                }
                // defects
                out.doc["command"] = "check defects";
                out.input("word", chk_a);
                ww::Word w = ww::parse_word(chk_a, format_of(tokens));
                ww::DefectSet d = ww::defects(w);
                std::string pairs;
                json jpairs = json::array();
                for (auto [i, j] : d.pairs) {
                    if (!pairs.empty()) pairs += " ";
                    pairs += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    jpairs.push_back({i, j});
                }
                if (pairs.empty()) pairs = "none";
                std::string classes;
                json jclasses = json::array();
                for (const auto& cls : ww::defect_classes(w).classes()) {
                    if (cls.size() < 2) continue;
                    std::string c = "{";
                    for (std::size_t t = 0; t < cls.size(); ++t)
                        c += (t ? "," : "") + std::to_string(cls[t]);
                    c += "}";
                    if (!classes.empty()) classes += " ";
                    classes += c;
                    jclasses.push_back(cls);
                }
                if (classes.empty()) classes = "all singleton";
                out.result({{"defects", jpairs}, {"classes", jclasses}});
                out.line(pairs + "; classes: " + classes);
                out.flush();
                return 0;
            } catch (const ww::Error& e) {
                out.diagnostic(e.what());
                out.flush();
                std::cerr << e.what() << "\n";
                return exit_code_for(e);
            }
        }

        if (*cmd_kb) {
            Output out("kbonacci");
            out.as_json = as_json;
            try {
                if (*kb_alpha) {
                    out.doc["command"] = "kbonacci alpha";
                    out.input("k", kb_k);
                    out.input("n", kb_n);
                    std::string rendered = render_word(ww::alpha(kb_k, kb_n), tokens);
                    out.result(rendered);
                    out.line(rendered);
                    out.flush();
                    return 0;
                }
                if (*kb_gamma) {
                    out.doc["command"] = "kbonacci gamma";
                    out.input("k", kb_k);
                    std::string rendered = render_word(ww::gamma(kb_k), tokens);
                    out.result(rendered);
                    out.line(rendered);
                    out.flush();
                    return 0;
                }
                if (*kb_verify) {
                    out.doc["command"] = "kbonacci verify";
                    out.input("k", kb_k);
                    out.input("n", kb_n);
                    bool ok = ww::verify_theorem4(kb_k, kb_n);
                    out.result(ok ? "pass" : "fail");
                    out.line(ok ? "pass" : "fail");
                    out.flush();
                    return ok ? 0 : 1;
                }
                out.doc["command"] = "kbonacci walk-from";
                out.input("k", kb_k);
                out.input("n", kb_n);
                out.input("h", kb_h);
                auto walk = ww::find_generating_walk_from(kb_k, kb_n, kb_h);
                if (walk) {
                    out.result(ww::print_course(*walk));
                    out.line(ww::print_course(*walk));
                    out.flush();
                    return 0;
                }
                out.result(nullptr);
                out.line("none");
                out.flush();
                return 1;
            } catch (const ww::Error& e) {
                out.diagnostic(e.what());
                out.flush();
                std::cerr << e.what() << "\n";
                return exit_code_for(e);
            }
        }

        if (*cmd_plot) {
            Output out("plot");
            out.as_json = as_json;
            out.input("word", plot_word);
            out.input("walk", plot_walk);
            out.input("output", plot_path);
            try {
                ww::Word u = ww::parse_word(plot_word, format_of(tokens));
                ww::Walk f = parse_walk_for(u, plot_walk);
                std::string svg = ww::render_walk_svg(u, f);
                std::ofstream file(plot_path, std::ios::binary);
                if (!file || !(file << svg) || !file.flush()) {
                    out.diagnostic("cannot write " + plot_path);
                    out.flush();
                    std::cerr << "cannot write " << plot_path << "\n";
                    return 3;
                }
                out.result(plot_path);
                out.line("wrote " + plot_path);
                out.flush();
                return 0;
            } catch (const ww::Error& e) {
                out.diagnostic(e.what());
                out.flush();
                std::cerr << e.what() << "\n";
                return exit_code_for(e);
            }
        }

        if (*cmd_verify) {
            Output out("verify");
            out.as_json = as_json;
            out.input("suite", suite);
            std::vector<ww::SuiteReport> reports;
            if (suite == "lemma") {
                reports.push_back(ww::verify_lemma_oracle(vf_max_len < 0 ? 7 : vf_max_len, budget));
                reports.push_back(ww::verify_series_decomposition(5, 2, budget));
            } else if (suite == "theorem1") {
                reports.push_back(ww::verify_confluence(vf_count, vf_max_len < 0 ? 12 : vf_max_len,
                                                        vf_alphabet, vf_orders, vf_seed));
                reports.push_back(ww::verify_certificates(vf_count, vf_max_len < 0 ? 12 : vf_max_len,
                                                          vf_alphabet, vf_seed));
            } else if (suite == "theorem2") {
                reports.push_back(ww::verify_theorem2(vf_max_len < 0 ? 5 : vf_max_len, 2, budget));
            } else if (suite == "theorem3") {
                reports.push_back(ww::verify_theorem3(vf_max_len < 0 ? 5 : vf_max_len, 2, budget));
            } else if (suite == "theorem4") {
                std::vector<int> ks = vf_k > 0 ? std::vector<int>{vf_k} : std::vector<int>{2, 3, 4};
                int extra = 5;
                if (vf_n_max > 0) {
                    extra = 0;
                    for (int k : ks) extra = std::max(extra, vf_n_max - k);
                }
                reports.push_back(ww::verify_theorem4_suite(ks, extra));
                reports.push_back(ww::verify_claim7());
            } else if (suite == "regex") {
                reports.push_back(ww::verify_regex(vf_max_len < 0 ? 10 : vf_max_len));
            } else if (suite == "binary-alphabet") {
                reports.push_back(ww::verify_binary_alphabet(vf_max_len < 0 ? 8 : vf_max_len));
            } else {
                out.diagnostic("unknown suite: " + suite);
                out.flush();
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            bool all_pass = true;
            for (const auto& r : reports) {
                print_suite(out, r);
                all_pass = all_pass && r.pass;
            }
            out.flush();
            return all_pass ? 0 : 1;
        }
    } catch (const ww::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
