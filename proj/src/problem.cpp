// Copyright 2026 The betheprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "betheprep/problem.hpp"

#include "json.hpp"

namespace betheprep {

namespace {

using nlohmann::json;

Complex parse_complex(const json &j, const std::string &what) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() &&
        j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw DomainError(what + " must be a number or [re, im], got " + j.dump());
}

int require_count(const json &doc, const char *key) {
    if (!doc.contains(key)) {
        throw DomainError(std::string("problem is missing \"") + key + "\"");
    }
    const json &v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw DomainError(std::string("\"") + key +
                          "\" must be a non-negative integer");
    }
    return v.get<int>();
}

double require_real(const json &doc, const char *key) {
    if (!doc.contains(key)) {
        throw DomainError(std::string("problem is missing \"") + key + "\"");
    }
    if (!doc.at(key).is_number()) {
        throw DomainError(std::string("\"") + key + "\" must be a number");
    }
    return doc.at(key).get<double>();
}

Problem parse_bethe(const json &doc) {
    ChainSpec chain;
    const std::string boundary = doc.value("boundary", std::string());
    if (boundary == "closed") {
        chain.boundary = Boundary::Closed;
        if (doc.contains("h") || doc.contains("h_prime")) {
            throw DomainError("boundary fields h, h_prime are only allowed for "
                              "open chains");
        }
    } else if (boundary == "open") {
        chain.boundary = Boundary::Open;
        chain.h = require_real(doc, "h");
        chain.h_prime = require_real(doc, "h_prime");
    } else {
        throw DomainError("\"boundary\" must be \"closed\" or \"open\"");
    }
    chain.delta = require_real(doc, "delta");

    if (!doc.contains("roots") || !doc.at("roots").is_array()) {
        throw DomainError("Bethe problems need a \"roots\" array");
    }
    BetheRoots roots;
    for (std::size_t i = 0; i < doc.at("roots").size(); ++i) {
        roots.k.push_back(
            parse_complex(doc.at("roots")[i], "root " + std::to_string(i)));
    }

    Problem p;
    p.L = require_count(doc, "L");
    p.M = doc.contains("M") ? require_count(doc, "M") : roots.size();
    if (p.M != roots.size()) {
        throw DomainError("\"M\" = " + std::to_string(p.M) + " but " +
                          std::to_string(roots.size()) + " roots were given");
    }
    if (chain.boundary == Boundary::Open) {
        p.source = source::Open{chain, std::move(roots)};
    } else {
        p.source = source::Closed{chain, std::move(roots)};
    }
    return p;
}

Problem parse_custom(const json &doc) {
    if (!doc.contains("amplitudes") || !doc.at("amplitudes").is_object()) {
        throw DomainError("custom problems need an \"amplitudes\" object");
    }
    source::Custom custom;
    std::optional<int> length;
    std::optional<int> weight;
    for (const auto &[key, value] : doc.at("amplitudes").items()) {
        const BitString w = BitString::parse(key);
        if (length && (*length != w.length() || *weight != w.weight())) {
            throw DomainError("custom amplitude keys mix lengths or weights");
        }
        length = w.length();
        weight = w.weight();
        custom.amplitudes.emplace(w,
                                  parse_complex(value, "amplitude " + key));
    }
    Problem p;
    p.L = doc.contains("L") ? require_count(doc, "L") : length.value_or(0);
    p.M = doc.contains("M") ? require_count(doc, "M") : weight.value_or(0);
    if (length && (*length != p.L || *weight != p.M)) {
        throw DomainError("custom amplitude keys do not match L and M");
    }
    if (!length) {
        throw DomainError("custom table is empty");
    }
    p.source = std::move(custom);
    return p;
}

} // namespace

std::optional<ChainSpec> Problem::chain() const {
    if (const auto *c = std::get_if<source::Closed>(&source)) {
        return c->chain;
    }
    if (const auto *o = std::get_if<source::Open>(&source)) {
        return o->chain;
    }
    return std::nullopt;
}

std::optional<BetheRoots> Problem::roots() const {
    if (const auto *c = std::get_if<source::Closed>(&source)) {
        return c->roots;
    }
    if (const auto *o = std::get_if<source::Open>(&source)) {
        return o->roots;
    }
    return std::nullopt;
}

AmplitudeTable Problem::table() const { return build_table(L, M, source); }

Problem parse_problem(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw DomainError(std::string("malformed problem JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw DomainError("problem JSON must be an object");
    }
    try {
        const std::string src = doc.value("source", std::string("bethe"));
        if (src == "bethe") {
            return parse_bethe(doc);
        }
        if (src == "dicke") {
            Problem p;
            p.L = require_count(doc, "L");
            p.M = require_count(doc, "M");
            p.source = source::Dicke{};
            return p;
        }
        if (src == "custom") {
            return parse_custom(doc);
        }
        throw DomainError("unknown \"source\" '" + src + "'");
    } catch (const json::exception &e) {
        throw DomainError(std::string("invalid problem JSON: ") + e.what());
    }
}

std::string table_to_json(const AmplitudeTable &table) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.words().size(); ++i) {
        const Complex v = table.values()[i];
        doc[table.words()[i].str()] = {v.real(), v.imag()};
    }
    return doc.dump(2) + "\n";
}

std::string state_to_json(const StateVector &state) {
    json doc = json::array();
    for (const Complex &a : state.amps()) {
        doc.push_back({a.real(), a.imag()});
    }
    return doc.dump() + "\n";
}

} // namespace betheprep
