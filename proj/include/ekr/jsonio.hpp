#pragma once

#include <string>

#include "json.hpp"

#include "ekr/oracle.hpp"
#include "ekr/pipeline.hpp"
#include "ekr/shadow.hpp"

namespace ekr {

// All reports use insertion-ordered JSON with a fixed key order so that
// byte-for-byte diffs are meaningful.
using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const Subset& s) { return OrderedJson(s.elements()); }

inline OrderedJson to_json(const KatonaReport& r) {
    OrderedJson j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["family_size"] = r.family_size;
    j["shadow_size"] = r.shadow_size;
    j["holds"] = r.holds;
    j["extremal_class"] = to_string(r.extremal_class);
    return j;
}

inline OrderedJson to_json(const ChainReport& r) {
    OrderedJson j;
    j["f1_size"] = r.f1_size;
    j["f0_size"] = r.f0_size;
    j["g1_size"] = r.g1_size;
    j["g0_size"] = r.g0_size;
    j["shadow_g0_size"] = r.shadow_g0_size;
    j["disjoint"] = r.disjoint;
    j["katona_step"] = r.katona_step;
    j["packing_step"] = r.packing_step;
    j["final_bound"] = r.final_bound;
    j["family_size"] = r.family_size;
    j["bound"] = r.bound;
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

// `elapsed` is intentionally not serialized: reports are byte-deterministic
// for identical inputs, and wall time is not.
inline OrderedJson to_json(const OracleResult& r) {
    OrderedJson j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["t"] = r.t;
    j["max_size"] = r.max_size;
    j["num_maximum_families"] =
        r.num_maximum_families ? OrderedJson(*r.num_maximum_families) : OrderedJson(nullptr);
    j["all_maximum_are_stars"] =
        r.all_maximum_are_stars ? OrderedJson(*r.all_maximum_are_stars) : OrderedJson(nullptr);
    return j;
}

inline std::string render_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

// Flat CSV rendering of a one-level report object: fixed header from the
// key order, arrays joined by spaces, nested arrays by " | ".
inline std::string render_csv(const OrderedJson& j) {
    std::string header, row;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (!first) {
            header += ',';
            row += ',';
        }
        first = false;
        header += key;
        if (value.is_array()) {
            std::string flat;
            for (const auto& item : value) {
                if (!flat.empty()) flat += item.is_array() ? " | " : " ";
                if (item.is_array()) {
                    std::string inner;
                    for (const auto& x : item) {
                        if (!inner.empty()) inner += ' ';
                        inner += x.dump();
                    }
                    flat += inner;
                } else {
                    flat += item.dump();
                }
            }
            row += '"' + flat + '"';
        } else if (value.is_string()) {
            row += value.get<std::string>();
        } else {
            row += value.dump();
        }
    }
    return header + "\n" + row + "\n";
}

}  // namespace ekr
