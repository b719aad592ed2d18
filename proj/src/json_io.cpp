// Tiling file format implementation: hand-written canonical serializer
// (byte stability matters more than convenience here) and an importer
// built on a general JSON parser plus strict cross-checks.

#include "a3b/json_io.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include <json.hpp>

#include "a3b/errors.hpp"
#include "a3b/format.hpp"

namespace a3b {

namespace {

void append_vec3(std::string& s, const Vec3& v) {
    s += '[';
    s += format_double(v.x);
    s += ',';
    s += format_double(v.y);
    s += ',';
    s += format_double(v.z);
    s += ']';
}

std::array<int, 4> corner_vector(const Tiling& t, int vid) {
    std::array<int, 4> n{0, 0, 0, 0};
    for (const auto& [tile, corner] : t.incidences(vid)) {
        (void)tile;
        ++n[corner];
    }
    return n;
}

} // namespace

std::string export_json(const Tiling& t, const Quadrilateral& q) {
    std::string s = "{\"angles\":{\"alpha\":";
    s += format_double(q.alpha);
    s += ",\"beta\":";
    s += format_double(q.beta);
    s += ",\"delta\":";
    s += format_double(q.delta);
    s += ",\"gamma\":";
    s += format_double(q.gamma);
    s += "},\"edges\":{\"a\":";
    s += format_double(q.a);
    s += ",\"b\":";
    s += format_double(q.b);
    s += "},\"f\":";
    s += std::to_string(t.f());
    s += ",\"mesh\":";
    if (t.mesh()) {
        const Mesh& m = *t.mesh();
        s += "{\"discrepancy\":";
        s += format_double(m.discrepancy);
        s += ",\"positions\":{";
        std::vector<std::pair<std::string, const Vec3*>> entries;
        entries.reserve(m.positions.size());
        for (const auto& [vid, p] : m.positions) entries.push_back({std::to_string(vid), &p});
        std::sort(entries.begin(), entries.end()); // canonical order: key strings sorted
        bool first = true;
        for (const auto& [key, p] : entries) {
            if (!first) s += ',';
            first = false;
            s += '"';
            s += key;
            s += "\":";
            append_vec3(s, *p);
        }
        s += "}}";
    } else {
        s += "null";
    }
    s += ",\"tiles\":[";
    for (size_t i = 0; i < t.tiles().size(); ++i) {
        if (i) s += ',';
        const Tile& tile = t.tiles()[i];
        s += "{\"chirality\":\"";
        s += tile.chirality;
        s += "\",\"corners\":[";
        for (int k = 0; k < 4; ++k) {
            if (k) s += ',';
            s += std::to_string(tile.corners[k]);
        }
        s += "],\"id\":";
        s += std::to_string(i);
        s += '}';
    }
    s += "],\"type\":\"a3b\",\"vertices\":[";
    bool first = true;
    for (int vid : t.vertex_ids()) {
        if (!first) s += ',';
        first = false;
        s += "{\"id\":";
        s += std::to_string(vid);
        s += ",\"vector\":[";
        auto n = corner_vector(t, vid);
        for (int k = 0; k < 4; ++k) {
            if (k) s += ',';
            s += std::to_string(n[k]);
        }
        s += "]}";
    }
    s += "]}\n";
    return s;
}

ImportedTiling import_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw validation_error("tiling file is not valid JSON");
    try {
        if (j.at("type").get<std::string>() != "a3b")
            throw validation_error("tiling file type is not a3b");
        const int f = j.at("f").get<int>();
        Quadrilateral q;
        q.alpha = j.at("angles").at("alpha").get<double>();
        q.beta = j.at("angles").at("beta").get<double>();
        q.gamma = j.at("angles").at("gamma").get<double>();
        q.delta = j.at("angles").at("delta").get<double>();
        q.a = j.at("edges").at("a").get<double>();
        q.b = j.at("edges").at("b").get<double>();

        const auto& jt = j.at("tiles");
        if (!jt.is_array() || static_cast<int>(jt.size()) != f)
            throw validation_error("tiling file declares f = " + std::to_string(f) + " but holds " +
                                   std::to_string(jt.size()) + " tiles");
        std::vector<Tile> tiles(jt.size());
        std::vector<std::array<int, 4>> corners(jt.size());
        std::vector<char> seen(jt.size(), 0);
        for (const auto& e : jt) {
            const size_t id = e.at("id").get<size_t>();
            if (id >= tiles.size() || seen[id])
                throw validation_error("tile ids must cover 0..f-1 exactly once");
            seen[id] = 1;
            const std::string ch = e.at("chirality").get<std::string>();
            if (ch != "+" && ch != "-") throw validation_error("chirality must be '+' or '-'");
            tiles[id].chirality = ch[0];
            const auto& cs = e.at("corners");
            if (!cs.is_array() || cs.size() != 4)
                throw validation_error("a tile must have exactly 4 corners");
            for (int k = 0; k < 4; ++k) tiles[id].corners[k] = cs[k].get<int>();
            corners[id] = tiles[id].corners;
        }

        // Re-derive orientations from the corner arrays; the declared
        // chirality must agree, up to mirroring the whole tiling.
        Tiling derived = Tiling::from_corners(f, corners);
        bool all_same = true, all_opposite = true;
        for (size_t i = 0; i < tiles.size(); ++i) {
            if (tiles[i].chirality == derived.tiles()[i].chirality)
                all_opposite = false;
            else
                all_same = false;
        }
        if (!all_same && !all_opposite)
            throw validation_error("declared chirality disagrees with the corner arrays");

        Tiling result = Tiling::raw(f, std::move(tiles));

        // The stored corner-count vectors must match the corner arrays.
        const auto& jv = j.at("vertices");
        if (!jv.is_array()) throw validation_error("vertices must be an array");
        std::vector<int> listed_ids;
        for (const auto& e : jv) {
            const int vid = e.at("id").get<int>();
            listed_ids.push_back(vid);
            const auto& vec = e.at("vector");
            if (!vec.is_array() || vec.size() != 4)
                throw validation_error("a vertex vector must have 4 entries");
            auto expect = corner_vector(result, vid);
            for (int k = 0; k < 4; ++k)
                if (vec[k].get<int>() != expect[k])
                    throw validation_error("vertex vector disagrees with the corner arrays at "
                                           "vertex " +
                                           std::to_string(vid));
        }
        std::sort(listed_ids.begin(), listed_ids.end());
        if (listed_ids != result.vertex_ids())
            throw validation_error("vertex list does not cover the tiling's vertices");

        const auto& jm = j.at("mesh");
        if (!jm.is_null()) {
            Mesh mesh;
            mesh.discrepancy = jm.at("discrepancy").get<double>();
            for (const auto& [key, val] : jm.at("positions").items()) {
                if (!val.is_array() || val.size() != 3)
                    throw validation_error("mesh positions must be 3-vectors");
                mesh.positions[std::stoi(key)] =
                    Vec3{val[0].get<double>(), val[1].get<double>(), val[2].get<double>()};
            }
            std::vector<int> mesh_ids;
            for (const auto& [vid, p] : mesh.positions) {
                (void)p;
                mesh_ids.push_back(vid);
            }
            if (mesh_ids != result.vertex_ids())
                throw validation_error("mesh positions do not cover the tiling's vertices");
            result = result.with_mesh(std::move(mesh));
        }
        return {std::move(result), q};
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("malformed tiling file: ") + e.what());
    } catch (const std::invalid_argument& e) { // std::stoi on a non-numeric key
        throw validation_error(std::string("malformed tiling file: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw validation_error(std::string("malformed tiling file: ") + e.what());
    }
}

} // namespace a3b
