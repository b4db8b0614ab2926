#include "cuboid/record_io.hpp"

#include <stdexcept>

namespace cuboid {

namespace {

nlohmann::json rational_list(const auto& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& r : values) arr.push_back(to_string(r));
    return arr;
}

std::vector<Rational> parse_list(const nlohmann::json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

Degeneracy degeneracy_from_string(const std::string& s) {
    for (Degeneracy d : {Degeneracy::D1, Degeneracy::D2, Degeneracy::D3, Degeneracy::D4,
                         Degeneracy::EAxis}) {
        if (s == to_string(d)) return d;
    }
    throw ParseError("unknown degeneracy flag '" + s + "'");
}

}  // namespace

nlohmann::json record_to_json(const SearchRecord& rec) {
    nlohmann::json j;
    j["b"] = to_string(rec.param.b);
    j["c"] = to_string(rec.param.c);
    j["outcome"] = to_string(rec.outcome);
    if (rec.outcome == Outcome::Degenerate && !rec.degeneracy.empty()) {
        j["flag"] = to_string(rec.degeneracy.primary());
        nlohmann::json flags = nlohmann::json::array();
        for (Degeneracy d : rec.degeneracy.members()) flags.push_back(to_string(d));
        j["flags"] = std::move(flags);
    }
    if (rec.x_roots) j["x"] = rational_list(*rec.x_roots);
    if (rec.d_roots) j["d"] = rational_list(*rec.d_roots);
    if (rec.permutation) j["perm"] = *rec.permutation;
    if (rec.candidate) {
        j["candidate"] = {{"x", rational_list(rec.candidate->x)},
                          {"d", rational_list(rec.candidate->d)},
                          {"L", to_string(rec.candidate->L)}};
    }
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

SearchRecord record_from_json(const nlohmann::json& j) {
    SearchRecord rec;
    rec.param.b = parse_rational(j.at("b").get<std::string>());
    rec.param.c = parse_rational(j.at("c").get<std::string>());
    const auto outcome = outcome_from_string(j.at("outcome").get<std::string>());
    if (!outcome) throw ParseError("unknown outcome in record");
    rec.outcome = *outcome;
    if (j.contains("flags")) {
        for (const auto& f : j["flags"]) rec.degeneracy.insert(degeneracy_from_string(f.get<std::string>()));
    }
    if (j.contains("x")) rec.x_roots = parse_list(j["x"]);
    if (j.contains("d")) rec.d_roots = parse_list(j["d"]);
    if (j.contains("perm")) rec.permutation = j["perm"].get<int>();
    if (j.contains("candidate")) {
        const auto& cj = j["candidate"];
        const auto xs = parse_list(cj.at("x"));
        const auto ds = parse_list(cj.at("d"));
        if (xs.size() != 3 || ds.size() != 3) throw ParseError("candidate needs three edges and diagonals");
        CuboidCandidate cand;
        std::copy(xs.begin(), xs.end(), cand.x.begin());
        std::copy(ds.begin(), ds.end(), cand.d.begin());
        cand.L = parse_rational(cj.at("L").get<std::string>());
        rec.candidate = std::move(cand);
    }
    if (j.contains("note")) rec.note = j["note"].get<std::string>();
    return rec;
}

std::string format_record_line(const SearchRecord& rec) { return record_to_json(rec).dump(); }

}  // namespace cuboid
