/**
 * JSON serialization of Delta-sets, groups, homology groups and space
 * reports, plus file load/save.
 *
 * Delta-set format: { "counts": [c0, c1, ...],
 *                     "faces": [ [d0, d1], [d0, d1, d2], ... ] }
 * with one face-table block per dimension >= 1; round trips are
 * bit-exact on the arrays.
 *
 * Group format:     { "order": n, "mult": [[...], ...] }
 * Homology format:  { "dim": k, "betti": b, "torsion": [d1, ...] }
 */

#ifndef TOPO_JSON_IO_HPP
#define TOPO_JSON_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "topo/chain_complex.hpp"
#include "topo/delta_set.hpp"
#include "topo/finite_group.hpp"
#include "topo/spaces.hpp"

namespace topo {

using nlohmann::json;

inline json to_json(const DeltaSet& d) {
    json faces = json::array();
    for (int k = 1; k <= d.dimension(); ++k) {
        json tables = json::array();
        for (int i = 0; i <= k; ++i)
            tables.push_back(d.face_tables()[static_cast<std::size_t>(k)]
                                            [static_cast<std::size_t>(i)]);
        faces.push_back(std::move(tables));
    }
    return json{{"counts", d.counts()}, {"faces", std::move(faces)}};
}

inline DeltaSet delta_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("counts") || !j.contains("faces"))
        throw IoError("Delta-set JSON needs \"counts\" and \"faces\"");
    std::vector<std::size_t> counts = j.at("counts").get<std::vector<std::size_t>>();
    DeltaSet::FaceTables faces(counts.size());
    const json& jf = j.at("faces");
    if (!jf.is_array() || (!counts.empty() && jf.size() + 1 != counts.size()))
        throw IoError("Delta-set JSON: \"faces\" needs one block per dimension >= 1");
    for (std::size_t k = 1; k < counts.size(); ++k)
        faces[k] = jf.at(k - 1).get<std::vector<std::vector<std::size_t>>>();
    return DeltaSet::from_parts(std::move(counts), std::move(faces));
}

inline json to_json(const FiniteGroup& g) {
    return json{{"order", g.order()}, {"mult", g.table()}};
}

inline FiniteGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("mult"))
        throw IoError("group JSON needs \"order\" and \"mult\"");
    auto mult = j.at("mult").get<std::vector<std::vector<std::size_t>>>();
    if (mult.size() != j.at("order").get<std::size_t>())
        throw IoError("group JSON: order does not match table size");
    return FiniteGroup(std::move(mult));
}

inline json torsion_to_json(const std::vector<Integer>& torsion) {
    json out = json::array();
    for (const auto& t : torsion) {
        // numbers while they fit, decimal strings beyond that
        if (t <= Integer(std::numeric_limits<long long>::max()))
            out.push_back(t.convert_to<long long>());
        else
            out.push_back(t.str());
    }
    return out;
}

inline json to_json(const HomologyGroup& h, int dim) {
    return json{{"dim", dim}, {"betti", h.betti}, {"torsion", torsion_to_json(h.torsion)}};
}

inline json to_json(const SpaceReport& r) {
    json homology = json::array();
    for (std::size_t k = 0; k < r.homology.size(); ++k)
        homology.push_back(to_json(r.homology[k], static_cast<int>(k)));
    json j{{"name", r.name},
           {"expression", r.expression},
           {"f_vector", r.f_vector},
           {"euler", r.euler},
           {"homology", std::move(homology)}};
    if (r.connectivity == kInfiniteConnectivity)
        j["connectivity"] = nullptr;
    else
        j["connectivity"] = r.connectivity;
    if (r.reduced) j["reduced"] = true;
    return j;
}

inline json to_json(const CellCountReport& r) {
    return json{{"m", r.m},
                {"n", r.n},
                {"minimal_ranks", r.minimal_ranks},
                {"lens_counts", r.lens_counts},
                {"milnor_counts", r.milnor_counts},
                {"counts_monotone", r.counts_monotone},
                {"milnor_top_reduced_betti", r.milnor_top_reduced_betti},
                {"expected_wedge_rank", r.expected_wedge_rank},
                {"wedge_rank_ok", r.wedge_rank_ok}};
}

inline json error_to_json(const Error& e) {
    json detail{{"type", e.code()}, {"message", e.what()}};
    if (const auto* nf = dynamic_cast<const NotFreeError*>(&e)) {
        detail["element"] = nf->element();
        detail["dim"] = nf->dim();
        detail["simplex"] = nf->simplex();
    } else if (const auto* np = dynamic_cast<const NonPrimeParameterError*>(&e)) {
        detail["index"] = np->index();
        detail["gcd"] = np->gcd();
    } else if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
        detail["line"] = se->line();
        detail["col"] = se->col();
        detail["expected"] = se->expected();
    } else if (const auto* be = dynamic_cast<const BudgetExceededError*>(&e)) {
        detail["requested"] = be->requested();
        detail["budget"] = be->budget();
    }
    return json{{"error", std::move(detail)}};
}

inline void save_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path);
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline DeltaSet load_delta_set(const std::string& path) {
    return delta_set_from_json(load_json_file(path));
}

inline void save_delta_set(const DeltaSet& d, const std::string& path) {
    save_json_file(to_json(d), path);
}

} // namespace topo

#endif // TOPO_JSON_IO_HPP
