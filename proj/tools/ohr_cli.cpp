#include <omp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohr/bounds.hpp"
#include "ohr/constructions.hpp"
#include "ohr/containment.hpp"
#include "ohr/density.hpp"
#include "ohr/embedding.hpp"
#include "ohr/json_io.hpp"
#include "ohr/ramsey.hpp"

using nlohmann::json;

namespace {

// exit codes: 0 success / positive answer, 1 negative answer, 2 usage or IO
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + path);
    out << content;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

ohr::Rational parse_rational(const std::string& s) {
    try {
        return ohr::Rational(s);
    } catch (const std::exception&) {
        throw UsageError("not a rational (expected p/q or integer): " + s);
    }
}

std::string rational_str(const ohr::Rational& q) {
    std::ostringstream ss;
    ss << q;
    return ss.str();
}

std::string float_str(const ohr::Float& f) { return f.str(25); }

json log2_json(const ohr::Log2Value& v) {
    json j;
    j["log2"] = float_str(v.value);
    j["err"] = float_str(v.err);
    if (v.overflow) j["overflow"] = true;
    return j;
}

ohr::OrderedHypergraph load_hypergraph(const std::string& path) {
    return ohr::parse_hypergraph(read_file(path));
}

ohr::HyperedgeColoring load_coloring(const std::string& path) {
    try {
        return ohr::HyperedgeColoring::parse(read_file(path));
    } catch (const ohr::InvalidParameter& e) {
        throw UsageError(std::string("bad coloring file: ") + e.what());
    }
}

ohr::Color parse_color(const std::string& s) {
    if (s == "red") return ohr::Color::Red;
    if (s == "blue") return ohr::Color::Blue;
    throw UsageError("color must be red or blue");
}

// host selection shared by contains/count/embed: either a hypergraph file or
// one color class of a coloring file
struct HostArgs {
    std::string host_path;
    std::string coloring_path;
    std::string color = "blue";

    void attach(CLI::App* cmd) {
        cmd->add_option("--host", host_path, "host hypergraph JSON");
        cmd->add_option("--coloring", coloring_path, "ORC coloring file used as host");
        cmd->add_option("--color", color, "color class when --coloring is given (red|blue)");
    }
};

int run_with_host(const HostArgs& args,
                  const std::function<int(const ohr::HostRef&)>& body) {
    if (args.host_path.empty() == args.coloring_path.empty())
        throw UsageError("give exactly one of --host or --coloring");
    if (!args.host_path.empty()) {
        auto h = load_hypergraph(args.host_path);
        return body(ohr::HostRef(h));
    }
    auto col = load_coloring(args.coloring_path);
    ohr::ColorView view(col, parse_color(args.color));
    return body(ohr::HostRef(view));
}

json witness_json(const ohr::BipartiteGraph& g, const ohr::DensityWitness& w) {
    json j;
    json xs = json::array(), ys = json::array();
    for (auto i : w.xs) xs.push_back(g.left()[i]);
    for (auto i : w.ys) ys.push_back(g.right()[i]);
    j["X"] = xs;
    j["Y"] = ys;
    j["density"] = rational_str(w.density);
    return j;
}

json bipartite_json(const ohr::BipartiteGraph& g) {
    json j;
    j["left"] = g.left();
    j["right"] = g.right();
    json edges = json::array();
    for (std::size_t li = 0; li < g.nl(); ++li)
        for (std::size_t ri : g.neighborhood(li))
            edges.push_back(json::array({g.left()[li], g.right()[ri]}));
    j["edges"] = edges;
    return j;
}

ohr::BipartiteGraph parse_bipartite(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("left") || !j.contains("right") || !j.contains("edges"))
        throw UsageError("graph JSON needs left, right, edges");
    std::vector<int> left = j["left"].get<std::vector<int>>();
    std::vector<int> right = j["right"].get<std::vector<int>>();
    ohr::BipartiteGraph g(left, right);
    for (const auto& je : j["edges"]) {
        auto pr = je.get<std::vector<int>>();
        if (pr.size() != 2) throw UsageError("graph edge must be a pair");
        auto li = std::find(left.begin(), left.end(), pr[0]);
        auto ri = std::find(right.begin(), right.end(), pr[1]);
        if (li == left.end() || ri == right.end())
            throw UsageError("graph edge endpoint not on its side");
        g.set_edge(static_cast<std::size_t>(li - left.begin()),
                   static_cast<std::size_t>(ri - right.begin()));
    }
    return g;
}

const char* failure_name(ohr::EmbedFailure f) {
    switch (f) {
        case ohr::EmbedFailure::WEmpty: return "w-empty";
        case ohr::EmbedFailure::AllCandidatesFiltered: return "all-candidates-filtered";
        case ohr::EmbedFailure::SizeGuaranteeViolated: return "size-guarantee-violated";
    }
    return "?";
}

json trace_json(const std::vector<ohr::EmbedStepTrace>& trace) {
    json out = json::array();
    for (const auto& st : trace) {
        json j;
        j["step"] = st.step;
        j["u_size"] = st.u_size;
        j["w_size"] = st.w_size;
        j["chosen"] = st.chosen;
        json filt = json::object();
        for (const auto& [jk, sz] : st.filtered)
            filt[std::to_string(jk.first) + "," + std::to_string(jk.second)] = sz;
        j["filtered"] = filt;
        out.push_back(j);
    }
    return out;
}

std::map<std::string, std::string> parse_params(const std::string& spec) {
    std::map<std::string, std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("params must be k=v pairs: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::string need(const std::map<std::string, std::string>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw UsageError("missing param: " + key);
    return it->second;
}

long need_long(const std::map<std::string, std::string>& p, const std::string& key) {
    try {
        return std::stol(need(p, key));
    } catch (const std::exception&) {
        throw UsageError("param is not an integer: " + key);
    }
}

int run_bound(const std::string& name, const std::map<std::string, std::string>& p) {
    if (name == "tow") {
        emit(log2_json(ohr::tow(static_cast<int>(need_long(p, "h")), ohr::Float(need(p, "x")))));
    } else if (name == "thm-precise") {
        ohr::PreciseConstants c;
        if (p.count("c_block")) c.c_block = ohr::Float(p.at("c_block"));
        if (p.count("c_log")) c.c_log = ohr::Float(p.at("c_log"));
        emit(log2_json(ohr::thm_precise_upper_log2(
            need_long(p, "t"), static_cast<int>(need_long(p, "d")), need_long(p, "s"),
            parse_rational(need(p, "rho")), c)));
    } else if (name == "thm-main") {
        // s may be given directly or as log2_s for the theorem's huge regime
        ohr::Float s = p.count("log2_s")
                           ? boost::multiprecision::pow(ohr::Float(2), ohr::Float(p.at("log2_s")))
                           : ohr::Float(need(p, "s"));
        auto r = ohr::thm_main_upper_log2(need_long(p, "t"), static_cast<int>(need_long(p, "d")),
                                          s);
        json j;
        j["direct"] = log2_json(r.direct);
        j["simplified"] = log2_json(r.simplified);
        j["exponent"] = rational_str(r.exponent);
        j["below_threshold"] = r.below_threshold;
        emit(j);
    } else if (name == "tripartite-feasible") {
        auto variant = p.count("variant") && p.at("variant") == "statement"
                           ? ohr::TripartiteVariant::Statement
                           : ohr::TripartiteVariant::Proof;
        ohr::Log2Value m{ohr::Float(need(p, "m_log2")), 0, false};
        bool ok = ohr::lemma_tripartite_feasible(parse_rational(need(p, "delta")),
                                                 parse_rational(need(p, "eta")),
                                                 need_long(p, "s"), m, variant);
        emit(json{{"feasible", ok}});
        return ok ? kOk : kNegative;
    } else if (name == "term-split") {
        auto r = ohr::thm_precise_term_split(static_cast<int>(need_long(p, "d")),
                                             need_long(p, "s"), parse_rational(need(p, "rho")));
        json j;
        j["term_exp"] = log2_json(r.term_exp);
        j["term_eta"] = log2_json(r.term_eta);
        j["term_factor"] = log2_json(r.term_factor);
        j["target"] = log2_json(r.target);
        emit(j);
    } else if (name == "stepup-lower") {
        auto r = ohr::stepup_lowerbound_log2(need_long(p, "n"), ohr::Float(need(p, "log2_R")),
                                             parse_rational(need(p, "alpha")));
        json j = log2_json(r.log2_N);
        j["valid"] = r.valid;
        emit(j);
    } else if (name == "lizang") {
        auto base = p.count("base") && p.at("base") == "natural" ? ohr::LogBase::Natural
                                                                 : ohr::LogBase::Two;
        emit(log2_json(ohr::lizang_lower_log2(need_long(p, "t"), need_long(p, "m"),
                                              parse_rational(need(p, "c")), base)));
    } else if (name == "prop-upper") {
        emit(log2_json(ohr::prop_upper_log2(static_cast<int>(need_long(p, "chi")),
                                            static_cast<int>(need_long(p, "k")),
                                            need_long(p, "n"), need_long(p, "R"))));
    } else if (name == "cor-upper") {
        emit(log2_json(ohr::cor_upper_log2(static_cast<int>(need_long(p, "chi")),
                                           need_long(p, "n"), need_long(p, "R"))));
    } else {
        throw UsageError("unknown bound: " + name);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered hypergraph Ramsey toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global --seed/--threads may follow the subcommand

    int threads = 0;
    std::uint64_t seed = 0;
    app.add_option("--threads", threads, "thread cap (0 = all cores)");
    app.add_option("--seed", seed, "seed for randomized paths (default 0)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a hypergraph");
    std::string gen_type, gen_out;
    int gen_k = 3, gen_N = 0, gen_chi = 0, gen_n = 0;
    gen->add_option("--type", gen_type, "complete | multipartite | path")->required();
    gen->add_option("--k", gen_k, "uniformity");
    gen->add_option("--N", gen_N, "vertex count (complete)");
    gen->add_option("--chi", gen_chi, "part count (multipartite)");
    gen->add_option("--n", gen_n, "part size (multipartite) / vertices (path)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // contains / count
    auto* contains = app.add_subcommand("contains", "order-preserving containment");
    auto* count = app.add_subcommand("count", "count order-preserving copies");
    HostArgs contains_host, count_host;
    std::string contains_pattern, count_pattern;
    contains_host.attach(contains);
    contains->add_option("--pattern", contains_pattern)->required();
    count_host.attach(count);
    count->add_option("--pattern", count_pattern)->required();

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "exact ordered Ramsey search");
    std::string ram_blue, ram_red, ram_cert;
    int ram_cap = 0, ram_split = 0;
    std::uint64_t ram_bits = 40;
    ramsey->add_option("--blue", ram_blue)->required();
    ramsey->add_option("--red", ram_red)->required();
    ramsey->add_option("--cap", ram_cap, "largest N probed")->required();
    ramsey->add_option("--max-bits", ram_bits, "decision-bit cap");
    ramsey->add_option("--split-bits", ram_split, "parallel split depth (0 = serial)");
    ramsey->add_option("--certificate", ram_cert, "write avoiding coloring here");

    // stepup
    auto* stepup = app.add_subcommand("stepup", "step-up 3-uniform coloring");
    std::string su_chi1, su_labels, su_out;
    int su_N = 0, su_R = 0;
    stepup->add_option("--chi1", su_chi1, "ORC graph coloring (k = 2)")->required();
    stepup->add_option("--labels", su_labels, "ORL labeling file");
    stepup->add_option("--random-N", su_N, "generate random labels on N vertices");
    stepup->add_option("--random-R", su_R, "label range for --random-N");
    stepup->add_option("--out", su_out, "output ORC file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "scan a coloring for a blue clique");
    std::string ver_col;
    int ver_q = 0;
    verify->add_option("--coloring", ver_col)->required();
    verify->add_option("--clique", ver_q, "clique size t+1")->required();

    // expected
    auto* expected = app.add_subcommand("expected", "expected red-copy bound, log2");
    std::string ex_log2N, ex_log2R, ex_alpha;
    long ex_R = 0, ex_n = 0, ex_m = 0, ex_l = 0;
    bool ex_terminal = false;
    expected->add_option("--log2-N", ex_log2N)->required();
    expected->add_option("--R", ex_R);
    expected->add_option("--log2-R", ex_log2R);
    expected->add_option("--n", ex_n)->required();
    expected->add_option("--m", ex_m);
    expected->add_option("--l", ex_l);
    expected->add_option("--alpha", ex_alpha, "rational, switches to the terminal chain");
    expected->add_flag("--terminal", ex_terminal, "evaluate the terminal chain value");

    // density
    auto* density = app.add_subcommand("density", "density checks");
    density->require_subcommand(1);
    auto* dbi = density->add_subcommand("bi", "bi-density of a bipartite graph");
    std::string bi_graph, bi_eps1, bi_eps2, bi_rho;
    int bi_trials = 0;
    std::size_t bi_cap = 16;
    dbi->add_option("--graph", bi_graph, "bipartite graph JSON")->required();
    dbi->add_option("--eps1", bi_eps1)->required();
    dbi->add_option("--eps2", bi_eps2)->required();
    dbi->add_option("--rho", bi_rho)->required();
    dbi->add_option("--trials", bi_trials, "sample instead of exact enumeration");
    dbi->add_option("--cap", bi_cap, "exact-mode side cap");
    auto* dtri = density->add_subcommand("tri", "search for a tri-density violation");
    HostArgs tri_host;
    std::string tri_eps, tri_rho, tri_strategy = "induced";
    long tri_m = 0;
    std::uint64_t tri_budget = 100000;
    tri_host.attach(dtri);
    dtri->add_option("--eps", tri_eps)->required();
    dtri->add_option("--rho", tri_rho)->required();
    dtri->add_option("--m", tri_m)->required();
    dtri->add_option("--strategy", tri_strategy, "exhaustive-tiny | induced | random");
    dtri->add_option("--budget", tri_budget);

    // embed
    auto* embed = app.add_subcommand("embed", "greedy density embedding");
    HostArgs embed_host;
    std::string em_pattern, em_rho, em_mode = "exact", em_trace;
    int em_d = 0, em_trials = 64;
    std::size_t em_cap = 16;
    embed_host.attach(embed);
    embed->add_option("--pattern", em_pattern)->required();
    embed->add_option("--rho", em_rho)->required();
    embed->add_option("--d", em_d, "degree override (0 = max degree of pattern)");
    embed->add_option("--mode", em_mode, "exact | sampled");
    embed->add_option("--trials", em_trials, "samples per check in sampled mode");
    embed->add_option("--cap", em_cap, "exact bi-density side cap");
    embed->add_option("--trace", em_trace, "write per-step trace JSON here");

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate a bound formula in log2");
    std::string bound_name, bound_params;
    bound->add_option("name", bound_name, "formula name")->required();
    bound->add_option("--params", bound_params, "comma-separated k=v pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*gen) {
            ohr::OrderedHypergraph h = [&] {
                if (gen_type == "complete") return ohr::complete_hypergraph(gen_k, gen_N);
                if (gen_type == "multipartite")
                    return ohr::complete_multipartite(gen_k, gen_chi, gen_n);
                if (gen_type == "path") return ohr::monotone_hyperpath(gen_k, gen_n);
                throw UsageError("unknown --type: " + gen_type);
            }();
            std::string out = ohr::serialize_hypergraph(h);
            if (gen_out.empty())
                std::cout << out;
            else
                write_file(gen_out, out);
            return kOk;
        }

        if (*contains) {
            auto pattern = load_hypergraph(contains_pattern);
            return run_with_host(contains_host, [&](const ohr::HostRef& host) {
                auto emb = ohr::find_embedding(host, pattern);
                if (!emb) {
                    emit(json{{"found", false}});
                    return kNegative;
                }
                emit(json{{"found", true}, {"embedding", *emb}});
                return kOk;
            });
        }

        if (*count) {
            auto pattern = load_hypergraph(count_pattern);
            return run_with_host(count_host, [&](const ohr::HostRef& host) {
                emit(json{{"count", ohr::count_embeddings(host, pattern).str()}});
                return kOk;
            });
        }

        if (*ramsey) {
            ohr::RamseyOptions opts;
            opts.max_decision_bits = ram_bits;
            opts.threads = threads;
            opts.split_bits = ram_split;
            auto blue = load_hypergraph(ram_blue);
            auto red = load_hypergraph(ram_red);
            auto r = ohr::ordered_ramsey_exact(blue, red, ram_cap, opts);
            json j;
            if (r.closed)
                j["value"] = r.value;
            else
                j["lower_bound"] = r.value + 1;  // R > N_cap
            if (!ram_cert.empty() && r.certificate) {
                write_file(ram_cert, r.certificate->serialize());
                j["certificate_file"] = ram_cert;
            }
            emit(j);
            return r.closed ? kOk : kNegative;
        }

        if (*stepup) {
            auto chi1 = load_coloring(su_chi1);
            ohr::EdgeLabeling labels = [&] {
                if (!su_labels.empty()) return ohr::EdgeLabeling::parse(read_file(su_labels));
                if (su_N > 0 && su_R > 0) return ohr::random_labeling(su_N, su_R, seed);
                throw UsageError("give --labels or both --random-N and --random-R");
            }();
            auto out = ohr::stepup_coloring(chi1, labels);
            write_file(su_out, out.serialize());
            emit(json{{"N", out.N()}, {"file", su_out}});
            return kOk;
        }

        if (*verify) {
            auto col = load_coloring(ver_col);
            auto hit = ohr::verify_no_blue_clique(col, ver_q);
            if (!hit) {
                emit(json{{"clean", true}});
                return kOk;
            }
            emit(json{{"clean", false}, {"counterexample", *hit}});
            return kNegative;
        }

        if (*expected) {
            if (ex_terminal || !ex_alpha.empty()) {
                if (ex_alpha.empty() || ex_log2R.empty())
                    throw UsageError("terminal chain needs --alpha and --log2-R");
                emit(log2_json(ohr::expected_red_terminal_log2(
                    ohr::Float(ex_log2N), ohr::Float(ex_log2R), ex_n,
                    parse_rational(ex_alpha))));
            } else {
                if (ex_R <= 0 || ex_m <= 0 || ex_l <= 0)
                    throw UsageError("bound chain needs --R, --m, --l");
                emit(log2_json(ohr::expected_red_copies_log2(ohr::Float(ex_log2N), ex_R, ex_n,
                                                             ex_m, ex_l)));
            }
            return kOk;
        }

        if (*dbi) {
            auto g = parse_bipartite(read_file(bi_graph));
            auto e1 = parse_rational(bi_eps1), e2 = parse_rational(bi_eps2),
                 rho = parse_rational(bi_rho);
            ohr::BiDenseResult r = bi_trials > 0
                                       ? ohr::sample_bi_dense(g, e1, e2, rho, bi_trials, seed)
                                       : ohr::is_bi_dense(g, e1, e2, rho, bi_cap);
            if (r.dense) {
                emit(json{{"dense", true}, {"exact", bi_trials == 0}});
                return kOk;
            }
            emit(json{{"dense", false}, {"witness", witness_json(g, *r.witness)}});
            return kNegative;
        }

        if (*dtri) {
            ohr::TriStrategy strat;
            if (tri_strategy == "exhaustive-tiny")
                strat = ohr::TriStrategy::ExhaustiveTiny;
            else if (tri_strategy == "induced")
                strat = ohr::TriStrategy::Induced;
            else if (tri_strategy == "random")
                strat = ohr::TriStrategy::Random;
            else
                throw UsageError("unknown strategy: " + tri_strategy);
            auto eps = parse_rational(tri_eps);
            auto rho = parse_rational(tri_rho);
            return run_with_host(tri_host, [&](const ohr::HostRef& host) {
                auto w = ohr::falsify_tri_density(host, eps, rho, tri_m, strat, tri_budget, seed);
                if (!w) {
                    emit(json{{"witness_found", false}});
                    return kNegative;
                }
                json j;
                j["witness_found"] = true;
                j["g12"] = bipartite_json(w->g12);
                j["g13"] = bipartite_json(w->g13);
                j["g23"] = bipartite_json(w->g23);
                j["triangles"] = w->triangles.str();
                j["hyperedge_triangles"] = w->hyperedge_triangles.str();
                emit(j);
                return kOk;
            });
        }

        if (*embed) {
            auto pattern = load_hypergraph(em_pattern);
            ohr::EmbeddingParams params;
            params.rho = parse_rational(em_rho);
            params.d = em_d;
            ohr::EmbedMode mode;
            if (em_mode == "exact")
                mode = ohr::EmbedMode::Exact;
            else if (em_mode == "sampled")
                mode = ohr::EmbedMode::Sampled;
            else
                throw UsageError("mode must be exact or sampled");
            return run_with_host(embed_host, [&](const ohr::HostRef& host) {
                auto r = ohr::greedy_embed(pattern, host, params, mode, seed, em_trials, em_cap);
                if (!em_trace.empty()) write_file(em_trace, trace_json(r.trace).dump() + "\n");
                if (r.success()) {
                    emit(json{{"success", true}, {"embedding", *r.embedding}});
                    return kOk;
                }
                emit(json{{"success", false},
                          {"failure", failure_name(*r.failure)},
                          {"step", r.failure_step}});
                return kNegative;
            });
        }

        if (*bound) return run_bound(bound_name, parse_params(bound_params));

        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ohr::HypergraphParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ohr::InvalidParameter& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return kUsage;
    } catch (const ohr::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
