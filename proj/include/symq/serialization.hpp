#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "symq/adversary.hpp"
#include "symq/boolean_symmetric.hpp"
#include "symq/chopper.hpp"
#include "symq/qsim.hpp"
#include "symq/types.hpp"

namespace symq {

using json = nlohmann::ordered_json;

inline json profile_to_json(const TypeProfile& t) { return json(t.parts); }

inline TypeProfile profile_from_json(const json& j) {
    return TypeProfile(j.get<std::vector<int>>());
}

inline json function_to_json(const SymmetricFunction& f) {
    json ones = json::array(), zeros = json::array();
    for (const auto& t : f.ones) ones.push_back(profile_to_json(t));
    for (const auto& t : f.zeros) zeros.push_back(profile_to_json(t));
    return json{{"N", f.n}, {"M", f.m}, {"ones", ones}, {"zeros", zeros}};
}

inline SymmetricFunction function_from_json(const json& j) {
    std::vector<TypeProfile> ones, zeros;
    for (const auto& t : j.at("ones")) ones.push_back(profile_from_json(t));
    for (const auto& t : j.at("zeros")) zeros.push_back(profile_from_json(t));
    return SymmetricFunction(j.at("N").get<long long>(), j.at("M").get<int>(), std::move(ones),
                             std::move(zeros));
}

inline json word_to_json(const InputWord& w) {
    return json{{"M", w.m}, {"entries", w.entries}};
}

inline InputWord word_from_json(const json& j) {
    return InputWord(j.at("entries").get<std::vector<int>>(), j.at("M").get<int>());
}

inline json hamming_spec_to_json(const HammingSpec& s) {
    json ones = json::array(), zeros = json::array();
    for (auto& [k, b] : s.values) (b ? ones : zeros).push_back(k);
    return json{{"N", s.n}, {"ones", ones}, {"zeros", zeros}};
}

inline HammingSpec hamming_spec_from_json(const json& j) {
    std::map<int, int> v;
    for (auto k : j.at("ones")) v[k.get<int>()] = 1;
    for (auto k : j.at("zeros")) v[k.get<int>()] = 0;
    return HammingSpec(j.at("N").get<int>(), std::move(v));
}

inline json circuit_to_json(const QueryCircuit& c) {
    json us = json::array();
    for (const auto& u : c.unitaries) {
        json m = json::array();
        for (const auto& e : u.a) m.push_back(json::array({e.real(), e.imag()}));
        us.push_back(std::move(m));
    }
    return json{{"N", c.n}, {"T", c.t}, {"W", c.w}, {"accept", c.accept}, {"unitaries", us}};
}

inline QueryCircuit circuit_from_json(const json& j) {
    QueryCircuit c;
    c.n = j.at("N").get<int>();
    c.t = j.at("T").get<int>();
    c.w = j.at("W").get<int>();
    c.accept = j.at("accept").get<std::vector<int>>();
    for (const auto& m : j.at("unitaries")) {
        CMatrix u(c.dim());
        if (m.size() != u.a.size())
            throw std::invalid_argument("circuit: unitary entry count does not match (N+1)W squared");
        for (size_t i = 0; i < u.a.size(); ++i)
            u.a[i] = cdouble(m[i][0].get<double>(), m[i][1].get<double>());
        c.unitaries.push_back(std::move(u));
    }
    c.validate();
    return c;
}

inline json hybrid_sequence_to_json(const HybridSequence& seq) {
    json profiles = json::array();
    for (const auto& p : seq.profiles) profiles.push_back(profile_to_json(p));
    json steps = json::array();
    for (const auto& s : seq.steps) {
        steps.push_back(json{{"level", s.level},
                             {"chop_size", s.chop_size},
                             {"rows_chopped", s.rows_chopped},
                             {"distance", s.distance},
                             {"chopped_row_indices", s.chopped_row_indices}});
    }
    return json{{"N", seq.params.n}, {"P", seq.params.p},     {"L", seq.params.l},
                {"start", profile_to_json(seq.start)},        {"baseline", profile_to_json(seq.baseline)},
                {"profiles", profiles},                       {"steps", steps}};
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace symq
