#include "xorclique/json_io.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "xorclique/errors.hpp"

namespace xorclique {

namespace {

Json big_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<long long>::max()) {
        return static_cast<long long>(v);
    }
    return v.str();
}

std::vector<long long> int_array(const Json& j, const char* where) {
    if (!j.is_array()) raise("BadInput", std::string(where) + " must be an array");
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            raise("BadInput", std::string(where) + " must contain integers");
        }
        out.push_back(e.get<long long>());
    }
    return out;
}

} // namespace

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) raise("BadInput", "malformed JSON");
    return j;
}

Json family_to_json(const SetFamily& fam) {
    Json sets = Json::array();
    for (const auto& m : fam.members) {
        Json a = Json::array();
        for (int x : m.a.to_indices()) a.push_back(x);
        Json b = Json::array();
        for (int x : m.b.to_indices()) b.push_back(fam.params.N + x);
        sets.push_back(Json{{"A", a}, {"B", b}});
    }
    return Json{
        {"k", fam.params.k},
        {"N", fam.params.N},
        {"provenance", fam.provenance},
        {"sets", sets},
    };
}

SetFamily family_from_json(const Json& j) {
    if (!j.is_object()) raise("BadInput", "family must be a JSON object");
    if (!j.contains("k") || !j["k"].is_number_integer()) {
        raise("BadInput", "missing integer field \"k\"");
    }
    if (!j.contains("N") || !j["N"].is_number_integer()) {
        raise("BadInput", "missing integer field \"N\"");
    }
    SetFamily fam;
    fam.params.k = j["k"].get<int>();
    fam.params.N = j["N"].get<long long>();
    if (fam.params.k < 1) raise("BadInput", "k must be at least 1");
    if (fam.params.N < fam.params.k) raise("BadInput", "N must be at least k");
    if (j.contains("provenance")) {
        if (!j["provenance"].is_string()) raise("BadInput", "provenance must be a string");
        fam.provenance = j["provenance"].get<std::string>();
    }
    if (!j.contains("sets")) raise("BadInput", "missing field \"sets\"");
    const Json& sets = j["sets"];
    if (!sets.is_array()) raise("BadInput", "\"sets\" must be an array");

    const long long N = fam.params.N;
    for (const auto& s : sets) {
        if (!s.is_object() || !s.contains("A") || !s.contains("B")) {
            raise("BadInput", "each set needs \"A\" and \"B\" arrays");
        }
        std::vector<long long> av = int_array(s["A"], "\"A\"");
        std::vector<long long> bv = int_array(s["B"], "\"B\"");
        MemberSet m;
        m.a = Bitset(static_cast<int>(N));
        m.b = Bitset(static_cast<int>(N));
        for (long long x : av) {
            if (x < 0 || x >= N) raise("BadInput", "A-element out of [0,N)");
            if (m.a.test(static_cast<int>(x))) raise("BadInput", "duplicate A-element");
            m.a.set(static_cast<int>(x));
        }
        for (long long x : bv) {
            if (x < N || x >= 2 * N) raise("BadInput", "B-element out of [N,2N)");
            if (m.b.test(static_cast<int>(x - N))) raise("BadInput", "duplicate B-element");
            m.b.set(static_cast<int>(x - N));
        }
        fam.members.push_back(std::move(m));
    }
    return fam;
}

Json verification_to_json(const VerificationReport& rep) {
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
        Json item{{"i", v.i}, {"kind", violation_kind_name(v.kind)}};
        if (v.j < 0) {
            item["j"] = nullptr;
        } else {
            item["j"] = v.j;
        }
        violations.push_back(item);
    }
    return Json{{"valid", rep.valid}, {"violations", violations}};
}

Json bound_report_to_json(const BoundReport& rep) {
    Json uppers = Json::array();
    for (const auto& u : rep.uppers) {
        uppers.push_back(Json{{"value", big_to_json(u.value)}, {"rule", u.rule}});
    }
    Json j{
        {"k", rep.k},
        {"N", rep.N},
        {"lower", Json{{"value", rep.lower}, {"provenance", rep.lower_provenance}}},
        {"uppers", uppers},
    };
    if (rep.exact) {
        j["exact"] = *rep.exact;
    } else {
        j["exact"] = nullptr;
    }
    return j;
}

Json clique_result_to_json(const CliqueResult& res, const SetFamily& family) {
    Json witness = Json::array();
    for (long long v : res.witness) witness.push_back(v);
    return Json{
        {"size", res.size},
        {"status", res.status == CliqueStatus::Exact ? "exact" : "lower-bound-only"},
        {"witness", witness},
        {"family", family_to_json(family)},
        {"nodes", res.nodes},
        {"ms", res.ms},
    };
}

Json solve_outcome_to_json(const SolveOutcome& out) {
    Json j{
        {"k", out.bounds.k},
        {"N", out.bounds.N},
        {"status", solve_status_name(out.status)},
        {"lower", out.lower},
        {"family", family_to_json(out.family)},
        {"bounds", bound_report_to_json(out.bounds)},
    };
    if (!out.bounds.uppers.empty()) {
        j["upper"] = big_to_json(out.bounds.min_upper().value);
    } else {
        j["upper"] = nullptr;
    }
    if (out.exact) {
        j["exact"] = *out.exact;
    } else {
        j["exact"] = nullptr;
    }
    if (out.clique) {
        j["search"] = clique_result_to_json(*out.clique, out.family);
    } else {
        j["search"] = nullptr;
    }
    return j;
}

} // namespace xorclique
