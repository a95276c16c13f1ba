// symq: experiment workbench over the sampling, chopping, adversary,
// simulation and influence modules. Every randomized subcommand requires an
// explicit --seed; per-trial streams derive from (seed, trial index).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symq/serialization.hpp"
#include "symq/derand.hpp"
#include "symq/verify.hpp"

namespace {

using namespace symq;

constexpr const char* kVersion = "0.1.0";

json run_record(const std::string& command, const json& config) {
    return json{{"schema", 1},
                {"tool", "symq"},
                {"version", kVersion},
                {"command", command},
                {"config", config},
                {"rows", json::array()},
                {"summary", json::object()}};
}

void emit(const json& record, const std::string& out_path, const std::string& format) {
    if (format == "csv") {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            os = &file;
        }
        const auto& rows = record.at("rows");
        if (!rows.empty()) {
            bool first = true;
            for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
                *os << (first ? "" : ",") << it.key();
                first = false;
            }
            *os << "\n";
            for (const auto& row : rows) {
                first = true;
                for (auto it = row.begin(); it != row.end(); ++it) {
                    *os << (first ? "" : ",") << it.value().dump();
                    first = false;
                }
                *os << "\n";
            }
        }
        return;
    }
    if (out_path.empty()) {
        std::cout << record.dump(2) << "\n";
    } else {
        save_json(out_path, record);
    }
}

SymmetricFunction load_function(const std::string& path, const std::string& named, int n) {
    if (!named.empty()) {
        if (named == "collision") return collision_function(n, n);
        if (named == "balanced") return balanced_function(n);
        throw CLI::ValidationError("--named must be collision or balanced");
    }
    return function_from_json(load_json(path));
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

ChopInstance chop_instance_from_profiles(const TypeProfile& prev, const TypeProfile& next,
                                         long long chop_size, int m) {
    std::multiset<int> removed;
    {
        std::multiset<int> p(prev.parts.begin(), prev.parts.end());
        std::multiset<int> q(next.parts.begin(), next.parts.end());
        for (int v : p) {
            auto it = q.find(v);
            if (it != q.end()) {
                q.erase(it);
            } else {
                removed.insert(v);
            }
        }
    }
    std::vector<int> rows;
    std::vector<bool> used(prev.parts.size(), false);
    for (int len : removed) {
        for (size_t i = 0; i < prev.parts.size(); ++i) {
            if (!used[i] && prev.parts[i] == len) {
                used[i] = true;
                rows.push_back(static_cast<int>(i));
                break;
            }
        }
    }
    std::sort(rows.begin(), rows.end());
    ChopInstance inst{prev, rows, chop_size, m};
    if (inst.next() != next)
        throw std::invalid_argument("level does not describe a single chop move between the profiles");
    return inst;
}

json sensitivity_json(const SensitivityReport& s) {
    return json{{"value", s.value}, {"reference_2T_over_N", s.reference}, {"within_reference", s.within}};
}

json poly_json(const BoundedPolynomial& p, double tol = 1e-12) {
    json coeffs = json::object();
    for (size_t mask = 0; mask < p.cube(); ++mask) {
        if (std::abs(p.coeffs[mask]) <= tol) continue;
        std::string key;
        for (int i = 0; i < p.n; ++i)
            if (mask & (size_t{1} << i)) key += (key.empty() ? "" : ",") + std::to_string(i + 1);
        coeffs[key.empty() ? "const" : key] = p.coeffs[mask];
    }
    return coeffs;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace symq;
    CLI::App app{"workbench for permutation-invariant query problems"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, format = "json";
    long long budget = 1000000;
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--budget", budget, "enumeration budget for relation building");

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "run the multiplicity sampler");
    std::string s_func, s_named, s_word, s_c = "2/7";
    long long s_t = 16;
    int s_n = 0, s_trials = 1;
    std::optional<uint64_t> s_seed;
    sample->add_option("--func", s_func, "symmetric function JSON (optional)");
    sample->add_option("--named", s_named, "built-in function: collision|balanced");
    sample->add_option("--N", s_n, "N for --named");
    sample->add_option("--word", s_word, "input word JSON")->required();
    sample->add_option("--T", s_t, "query parameter T")->required();
    sample->add_option("--c", s_c, "exponent c as a fraction");
    sample->add_option("--seed", s_seed, "master seed (required)");
    sample->add_option("--trials", s_trials, "number of trials");

    // ---- decide ----
    auto* dec = app.add_subcommand("decide", "run the sampling decision algorithm");
    std::string d_func, d_named, d_word, d_c = "2/7";
    long long d_t = 16;
    int d_n = 0, d_trials = 1;
    std::optional<uint64_t> d_seed;
    dec->add_option("--func", d_func, "symmetric function JSON");
    dec->add_option("--named", d_named, "built-in function: collision|balanced");
    dec->add_option("--N", d_n, "N for --named");
    dec->add_option("--word", d_word, "input word JSON")->required();
    dec->add_option("--T", d_t, "query parameter T")->required();
    dec->add_option("--c", d_c, "exponent c as a fraction");
    dec->add_option("--seed", d_seed, "master seed (required)");
    dec->add_option("--trials", d_trials, "number of trials");

    // ---- hardcore ----
    auto* hc = app.add_subcommand("hardcore", "find the hard-core type pair");
    std::string h_func, h_named, h_c = "2/7";
    int h_n = 0;
    hc->add_option("--func", h_func, "symmetric function JSON");
    hc->add_option("--named", h_named, "built-in function: collision|balanced");
    hc->add_option("--N", h_n, "N for --named");
    hc->add_option("--c", h_c, "exponent c as a fraction");

    // ---- chop ----
    auto* chop = app.add_subcommand("chop", "hard core plus both hybrid chop sequences");
    std::string c_func, c_named, c_c = "2/7";
    int c_n = 0;
    chop->add_option("--func", c_func, "symmetric function JSON");
    chop->add_option("--named", c_named, "built-in function: collision|balanced");
    chop->add_option("--N", c_n, "N for --named");
    chop->add_option("--c", c_c, "exponent c as a fraction");

    // ---- adversary ----
    auto* adv = app.add_subcommand("adversary", "exact adversary bound of a relation");
    std::string a_relation, a_seq, a_side = "a";
    int a_n = 0, a_a = 0, a_b = 1, a_level = 1, a_m = 0;
    adv->add_option("--relation", a_relation, "weight|chop")->required();
    adv->add_option("--N", a_n, "N for the weight relation");
    adv->add_option("--a", a_a, "low weight");
    adv->add_option("--b", a_b, "high weight");
    adv->add_option("--seq", a_seq, "seq JSON from the chop subcommand");
    adv->add_option("--level", a_level, "chop level (1-based)");
    adv->add_option("--side", a_side, "which sequence: a|b");
    adv->add_option("--M", a_m, "alphabet size (default: symbols needed plus fresh)");

    // ---- setequality ----
    auto* se = app.add_subcommand("setequality", "embed a Set Equality instance into a chop move");
    std::string e_prev, e_rows, e_y, e_z, e_fresh;
    long long e_chop = 1;
    se->add_option("--prev", e_prev, "previous profile as JSON array, e.g. [4]")->required();
    se->add_option("--rows", e_rows, "chopped row indices, comma separated")->required();
    se->add_option("--chop", e_chop, "chop size")->required();
    se->add_option("--Y", e_y, "first sequence, comma separated")->required();
    se->add_option("--Z", e_z, "second sequence, comma separated")->required();
    se->add_option("--fresh", e_fresh, "fresh symbols for unchopped rows, comma separated");

    // ---- qsim ----
    auto* qs = app.add_subcommand("qsim", "simulate a query circuit");
    std::string q_circuit, q_report = "poly,inf,sens", q_make_deutsch;
    qs->add_option("--circuit", q_circuit, "circuit JSON");
    qs->add_option("--report", q_report, "comma list from poly,inf,sens,values");
    qs->add_option("--make-deutsch", q_make_deutsch, "write the two-bit Deutsch circuit and exit");

    // ---- derand ----
    auto* dr = app.add_subcommand("derand", "classical simulation by influential variables");
    std::string r_circuit, r_bits;
    double r_eps = 0.2, r_delta = 0.2;
    int r_k = 3, r_rounds = 0;
    bool r_enumerate = false;
    dr->add_option("--circuit", r_circuit, "circuit JSON")->required();
    dr->add_option("--eps", r_eps, "epsilon");
    dr->add_option("--delta", r_delta, "delta");
    dr->add_option("--k", r_k, "threshold exponent");
    dr->add_option("--max-rounds", r_rounds, "round cap (default N)");
    dr->add_flag("--enumerate", r_enumerate, "simulate every input");
    dr->add_option("--bits", r_bits, "single input as a bit string, e.g. 0110");

    // ---- junta ----
    auto* ju = app.add_subcommand("junta", "best junta of the acceptance polynomial");
    std::string j_circuit;
    int j_k = 2;
    double j_alpha = 0.2, j_delta = 0.2;
    ju->add_option("--circuit", j_circuit, "circuit JSON")->required();
    ju->add_option("--K", j_k, "junta size");
    ju->add_option("--alpha", j_alpha, "approximation target");
    ju->add_option("--delta", j_delta, "bad-fraction target");

    // ---- probe ----
    auto* pr = app.add_subcommand("probe", "influence probe of a bounded polynomial");
    std::string p_circuit;
    int p_d = 0;
    double p_floor = 1.0;
    pr->add_option("--circuit", p_circuit, "circuit JSON")->required();
    pr->add_option("--d", p_d, "degree to normalize by (default: measured)");
    pr->add_option("--floor", p_floor, "flag ratios below this floor");

    // ---- boolean ----
    auto* bo = app.add_subcommand("boolean", "appendix algorithm for symmetric Boolean functions");
    std::string b_spec, b_word;
    int b_weight = -1, b_trials = 1;
    double b_ct = 9.0;
    std::optional<uint64_t> b_seed;
    bo->add_option("--spec", b_spec, "Hamming spec JSON")->required();
    bo->add_option("--word", b_word, "word JSON with a bits array");
    bo->add_option("--weight", b_weight, "use the canonical word of this Hamming weight");
    bo->add_option("--seed", b_seed, "master seed (required)");
    bo->add_option("--trials", b_trials, "number of trials");
    bo->add_option("--C_T", b_ct, "sample-count constant");

    // ---- verify ----
    auto* ve = app.add_subcommand("verify", "run the acceptance battery");
    std::string v_level = "fast";
    uint64_t v_seed = 1;
    ve->add_option("--level", v_level, "fast|full")->check(CLI::IsMember({"fast", "full"}));
    ve->add_option("--seed", v_seed, "master seed (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sample) {
            if (!s_seed) throw CLI::ValidationError("sample: --seed is required");
            InputWord word = word_from_json(load_json(s_word));
            if (!s_func.empty() || !s_named.empty()) {
                SymmetricFunction f = load_function(s_func, s_named, s_n ? s_n : word.n());
                if (f.n != word.n()) throw CLI::ValidationError("word length disagrees with function N");
            }
            EstimatorParams params(s_t, parse_cexp(s_c));
            auto kappa = multiplicity_counts(word);
            json rec = run_record("sample", json{{"T", s_t}, {"c", s_c}, {"seed", *s_seed},
                                                 {"trials", s_trials}, {"U", params.u()},
                                                 {"N", word.n()}, {"M", word.m}});
            long long bad_total = 0;
            for (int trial = 0; trial < s_trials; ++trial) {
                Rng rng = Rng::stream(*s_seed, static_cast<uint64_t>(trial));
                MultiplicityEstimate est = run_sampler(word, params, rng);
                bool bad = false;
                double worst = -1.0;
                int worst_row = 0;
                for (int j = 0; j < word.m; ++j) {
                    if (!within_one_type_band(word.n() * est.sample_counts[j],
                                              static_cast<long long>(est.u), kappa[j], word.n(),
                                              params.t, params.c))
                        bad = true;
                    double dev = std::abs(static_cast<double>(word.n()) * est.sample_counts[j] /
                                              static_cast<double>(est.u) -
                                          static_cast<double>(kappa[j]));
                    if (dev > worst) {
                        worst = dev;
                        worst_row = j + 1;
                    }
                }
                if (bad) ++bad_total;
                rec["rows"].push_back(json{{"trial", trial}, {"bad_event", bad ? 1 : 0},
                                           {"max_deviation_row", worst_row}});
            }
            rec["summary"] = json{{"bad_events", bad_total},
                                  {"bad_frequency", static_cast<double>(bad_total) / s_trials}};
            emit(rec, out_path, format);
        } else if (*dec) {
            if (!d_seed) throw CLI::ValidationError("decide: --seed is required");
            InputWord word = word_from_json(load_json(d_word));
            SymmetricFunction f = load_function(d_func, d_named, d_n ? d_n : word.n());
            EstimatorParams params(d_t, parse_cexp(d_c));
            auto truth = f.value(word);
            json rec = run_record("decide", json{{"T", d_t}, {"c", d_c}, {"seed", *d_seed},
                                                 {"trials", d_trials}, {"U", params.u()}});
            long long ones = 0, errors = 0;
            for (int trial = 0; trial < d_trials; ++trial) {
                Rng rng = Rng::stream(*d_seed, static_cast<uint64_t>(trial));
                int got = decide(f, word, params, rng);
                ones += got;
                if (truth && got != *truth) ++errors;
                rec["rows"].push_back(json{{"trial", trial}, {"output", got}});
            }
            rec["summary"] = json{{"ones", ones}, {"trials", d_trials}};
            if (truth) {
                rec["summary"]["truth"] = *truth;
                rec["summary"]["error_rate"] = static_cast<double>(errors) / d_trials;
            } else {
                rec["summary"]["truth"] = "undefined";
            }
            emit(rec, out_path, format);
        } else if (*hc) {
            SymmetricFunction f = load_function(h_func, h_named, h_n);
            HardCore core = find_hard_core(f, parse_cexp(h_c));
            json rec = run_record("hardcore", json{{"c", h_c}});
            rec["summary"] = json{{"T", core.t},
                                  {"one_type", profile_to_json(core.one_type)},
                                  {"zero_type", profile_to_json(core.zero_type)}};
            emit(rec, out_path, format);
        } else if (*chop) {
            CExp cexp = parse_cexp(c_c);
            SymmetricFunction f = load_function(c_func, c_named, c_n);
            HardCore core = find_hard_core(f, cexp);
            json rec = run_record("chop", json{{"c", c_c}, {"T", core.t}});
            json sides = json::object();
            TypeProfile fin = final_configuration(core.one_type, core.zero_type);
            bool meet = true;
            for (auto [tag, start, base] :
                 {std::tuple{"a", core.one_type, core.zero_type}, std::tuple{"b", core.zero_type, core.one_type}}) {
                HybridSequence seq = chop_sequence(start, base);
                json side = hybrid_sequence_to_json(seq);
                json chopub = json::array();
                for (const auto& e : chopub_check(seq, core.t, cexp))
                    chopub.push_back(json{{"level", e.level}, {"distance", e.distance},
                                          {"qualifies", e.qualifies}, {"ok", e.ok},
                                          {"margin", e.margin}});
                side["chopub"] = chopub;
                json table = json::array();
                for (const auto& row : bound_profile(seq, core.t, cexp))
                    table.push_back(json{{"level", row.level},
                                         {"rows_chopped", row.rows_chopped},
                                         {"distance", row.distance},
                                         {"sqrt_N_over_d", row.sqrt_n_over_d},
                                         {"set_equality_term", row.set_equality_term},
                                         {"level_target", row.level_target},
                                         {"sqrt_Tc", row.sqrt_tc},
                                         {"beta", row.beta},
                                         {"case_small_level", row.case_small_level},
                                         {"case_large_level", row.case_large_level}});
                side["bound_table"] = table;
                meet = meet && seq.profiles.back() == fin;
                sides[tag] = std::move(side);
            }
            rec["summary"] = json{{"hardcore_T", core.t},
                                  {"one_type", profile_to_json(core.one_type)},
                                  {"zero_type", profile_to_json(core.zero_type)},
                                  {"final", profile_to_json(fin)},
                                  {"a_equals_b_at_L", meet},
                                  {"sides", sides}};
            emit(rec, out_path, format);
        } else if (*adv) {
            InputRelation rel;
            json config;
            if (a_relation == "weight") {
                rel = weight_relation(a_n, a_a, a_b);
                config = json{{"relation", "weight"}, {"N", a_n}, {"a", a_a}, {"b", a_b}};
            } else if (a_relation == "chop") {
                json seq = load_json(a_seq);
                const json& side = seq.at("summary").at("sides").at(a_side);
                const auto& profiles = side.at("profiles");
                if (a_level < 1 || a_level >= static_cast<int>(profiles.size()))
                    throw CLI::ValidationError("--level out of range for the sequence");
                TypeProfile prev = profile_from_json(profiles[a_level - 1]);
                TypeProfile next = profile_from_json(profiles[a_level]);
                long long chop_size = side.at("steps")[a_level - 1].at("chop_size").get<long long>();
                int m = a_m;
                ChopInstance probe{prev, {}, chop_size, 0};
                if (m == 0) {
                    // minimum alphabet hosting the fresh rows
                    ChopInstance tmp = chop_instance_from_profiles(prev, next, chop_size, 1 << 20);
                    m = prev.size() + tmp.r();
                }
                ChopInstance inst = chop_instance_from_profiles(prev, next, chop_size, m);
                rel = chop_relation(inst, budget);
                config = json{{"relation", "chop"}, {"level", a_level}, {"side", a_side},
                              {"M", m}, {"prev", profile_to_json(prev)}, {"next", profile_to_json(next)},
                              {"d", inst.d()}};
            } else {
                throw CLI::ValidationError("--relation must be weight or chop");
            }
            AdversaryBound ab = adversary_bound(rel);
            json rec = run_record("adversary", config);
            rec["summary"] = json{{"alpha", json{{"num", ab.alpha.num}, {"den", ab.alpha.den}}},
                                  {"bound", ab.bound},
                                  {"side_a", rel.side_a.size()},
                                  {"side_b", rel.side_b.size()},
                                  {"pairs", rel.pairs.size()}};
            emit(rec, out_path, format);
        } else if (*se) {
            TypeProfile prev = profile_from_json(json::parse(e_prev));
            InputWord x = embed_set_equality(parse_int_list(e_y), parse_int_list(e_z), prev,
                                             parse_int_list(e_rows), e_chop,
                                             parse_int_list(e_fresh));
            json rec = run_record("setequality", json{{"prev", json::parse(e_prev)},
                                                      {"rows", parse_int_list(e_rows)},
                                                      {"chop", e_chop}});
            rec["summary"] = json{{"word", x.entries}, {"type", profile_to_json(type_of(x))},
                                  {"equals_prev", type_of(x) == prev}};
            emit(rec, out_path, format);
        } else if (*qs) {
            if (!q_make_deutsch.empty()) {
                save_json(q_make_deutsch, circuit_to_json(deutsch_circuit()));
                return 0;
            }
            if (q_circuit.empty()) throw CLI::ValidationError("qsim: --circuit is required");
            QueryCircuit circ = circuit_from_json(load_json(q_circuit));
            json rec = run_record("qsim", json{{"N", circ.n}, {"T", circ.t}, {"W", circ.w},
                                               {"report", q_report}});
            BoundedPolynomial p = extract_polynomial(circ);
            if (q_report.find("poly") != std::string::npos) {
                rec["summary"]["coefficients"] = poly_json(p);
                rec["summary"]["degree"] = p.degree();
                rec["summary"]["max_coeff_above_2T"] = p.max_coeff_above_degree(2 * circ.t);
            }
            if (q_report.find("inf") != std::string::npos) {
                rec["summary"]["influences"] = influences(p);
                rec["summary"]["sum_influence"] = sum_influence(p);
                rec["summary"]["variance_l1"] = variance_l1(p);
                rec["summary"]["l2_norm_sq"] = l2_norm_sq(p);
            }
            if (q_report.find("sens") != std::string::npos)
                rec["summary"]["state_sensitivity"] = sensitivity_json(state_sensitivity(circ));
            if (q_report.find("values") != std::string::npos) rec["summary"]["values"] = p.values;
            emit(rec, out_path, format);
        } else if (*dr) {
            QueryCircuit circ = circuit_from_json(load_json(r_circuit));
            BoundedPolynomial p = extract_polynomial(circ);
            SimulationParams params;
            params.epsilon = r_eps;
            params.delta = r_delta;
            params.k = r_k;
            params.max_rounds = r_rounds;
            json rec = run_record("derand", json{{"eps", r_eps}, {"delta", r_delta}, {"k", r_k},
                                                 {"N", circ.n}, {"T", circ.t}});
            std::vector<uint32_t> inputs;
            if (r_enumerate) {
                for (uint32_t x = 0; x < p.cube(); ++x) inputs.push_back(x);
            } else {
                if (r_bits.size() != static_cast<size_t>(circ.n))
                    throw CLI::ValidationError("--bits must have length N (or use --enumerate)");
                uint32_t x = 0;
                for (int i = 0; i < circ.n; ++i)
                    if (r_bits[static_cast<size_t>(i)] == '1') x |= uint32_t{1} << i;
                inputs.push_back(x);
            }
            long long failures = 0;
            std::vector<long long> halt_hist(3, 0);
            for (uint32_t x : inputs) {
                auto [estimate, trace] = classical_simulate(p, x, params, circ.t);
                bool fail = std::abs(estimate - p.values[x]) > params.epsilon;
                if (fail) ++failures;
                ++halt_hist[static_cast<int>(trace.halted_by)];
                rec["rows"].push_back(json{{"x", x}, {"p", p.values[x]}, {"estimate", estimate},
                                           {"queries", trace.queries()},
                                           {"halted_by", halt_name(trace.halted_by)},
                                           {"influences_met", trace.all_influences_met()}});
            }
            rec["summary"] = json{{"inputs", inputs.size()},
                                  {"failure_fraction",
                                   static_cast<double>(failures) / static_cast<double>(inputs.size())},
                                  {"halted_by", json{{"variance-threshold", halt_hist[0]},
                                                     {"round-cap", halt_hist[1]},
                                                     {"influence-shortfall", halt_hist[2]}}}};
            emit(rec, out_path, format);
        } else if (*ju) {
            QueryCircuit circ = circuit_from_json(load_json(j_circuit));
            BoundedPolynomial p = extract_polynomial(circ);
            JuntaResult best = junta_search(p, j_k);
            MarkovReport markov = markov_check(p, best, j_alpha, j_delta);
            std::vector<int> support;
            for (int i = 0; i < p.n; ++i)
                if (best.support & (uint32_t{1} << i)) support.push_back(i + 1);
            json rec = run_record("junta", json{{"K", j_k}, {"alpha", j_alpha}, {"delta", j_delta}});
            rec["summary"] = json{{"support", support},
                                  {"l2_error", best.l2_error},
                                  {"markov", json{{"condition_holds", markov.condition_holds},
                                                  {"bad_fraction", markov.bad_fraction},
                                                  {"pass", markov.pass}}}};
            emit(rec, out_path, format);
        } else if (*pr) {
            QueryCircuit circ = circuit_from_json(load_json(p_circuit));
            BoundedPolynomial p = extract_polynomial(circ);
            ProbeReport rep = conjecture_probe(p, p_d, p_floor);
            json rec = run_record("probe", json{{"d", p_d}, {"floor", p_floor}});
            rec["summary"] = json{{"max_influence", rep.max_influence},
                                  {"argmax", rep.argmax + 1},
                                  {"variance_l1", rep.vr},
                                  {"vacuous", rep.vacuous},
                                  {"ratios", json::array({rep.ratios[0], rep.ratios[1], rep.ratios[2]})},
                                  {"flagged", rep.flagged}};
            emit(rec, out_path, format);
        } else if (*bo) {
            if (!b_seed) throw CLI::ValidationError("boolean: --seed is required");
            HammingSpec spec = hamming_spec_from_json(load_json(b_spec));
            std::vector<int> bits;
            if (b_weight >= 0) {
                bits.assign(static_cast<size_t>(spec.n), 0);
                for (int i = 0; i < b_weight; ++i) bits[static_cast<size_t>(i)] = 1;
            } else if (!b_word.empty()) {
                bits = load_json(b_word).at("bits").get<std::vector<int>>();
            } else {
                throw CLI::ValidationError("boolean: need --word or --weight");
            }
            GammaResult g = gamma(spec);
            int weight = 0;
            for (int v : bits) weight += v;
            auto truth = spec.values.count(weight) ? std::optional<int>(spec.values.at(weight))
                                                   : std::nullopt;
            json rec = run_record("boolean", json{{"seed", *b_seed}, {"trials", b_trials},
                                                  {"C_T", b_ct}, {"weight", weight}});
            long long ones = 0, errors = 0;
            for (int trial = 0; trial < b_trials; ++trial) {
                Rng rng = Rng::stream(*b_seed, static_cast<uint64_t>(trial));
                int got = appendix_decide(spec, bits, rng, b_ct);
                ones += got;
                if (truth && got != *truth) ++errors;
                rec["rows"].push_back(json{{"trial", trial}, {"output", got}});
            }
            rec["summary"] = json{{"gamma", g.gamma},
                                  {"gamma_pair", json::array({g.a, g.b})},
                                  {"transform", g.transform},
                                  {"ones", ones}};
            if (truth) rec["summary"]["error_rate"] = static_cast<double>(errors) / b_trials;
            emit(rec, out_path, format);
        } else if (*ve) {
            verify::Options opt{v_level == "fast", v_seed};
            auto results = verify::run_all(opt);
            bool all = true;
            json rec = run_record("verify", json{{"level", v_level}, {"seed", v_seed}});
            for (const auto& r : results) {
                std::printf("%s criterion %2d %-28s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.seconds, r.detail.c_str());
                all = all && r.pass;
                rec["rows"].push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                                           {"detail", r.detail}});
            }
            rec["summary"] = json{{"pass", all}};
            if (!out_path.empty()) save_json(out_path, rec);
            std::printf("%s\n", all ? "verify: PASS" : "verify: FAIL");
            return all ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
