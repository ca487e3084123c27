// Copyright 2026 The colorz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colorz/colex.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "colorz/errors.h"

namespace colorz {

namespace {

uint64_t pair_key(uint32_t a, uint32_t b) {
    if (a > b) {
        std::swap(a, b);
    }
    return (uint64_t{a} << 32) | b;
}

std::string join_indices(const std::vector<size_t> &xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); i++) {
        if (i) {
            s += ", ";
        }
        s += std::to_string(xs[i]);
    }
    return s;
}

class ReportBuilder {
   public:
    void add(ViolationKind kind, std::string message, std::vector<size_t> indices = {}) {
        report_.violations.push_back({kind, std::move(message), std::move(indices)});
    }
    ValidationReport take() { return std::move(report_); }
    bool ok() const { return report_.ok(); }

   private:
    ValidationReport report_;
};

size_t floor_mod(long a, long m) {
    long r = a % m;
    return static_cast<size_t>(r < 0 ? r + m : r);
}

/// Assigns colors by forcing: the three faces at vertex 0 get 0, 1, 2, and
/// any vertex with two colored faces fixes its third. Leftover or
/// conflicting faces are left for validate() to report.
std::vector<uint8_t> propagate_coloring(size_t vertex_count, const std::vector<std::vector<uint32_t>> &faces) {
    std::vector<std::vector<uint32_t>> at(vertex_count);
    for (uint32_t f = 0; f < faces.size(); f++) {
        for (uint32_t v : faces[f]) {
            at[v].push_back(f);
        }
    }
    constexpr uint8_t kUnset = 255;
    std::vector<uint8_t> color(faces.size(), kUnset);
    if (vertex_count == 0 || at[0].size() != 3) {
        std::fill(color.begin(), color.end(), 0);
        return color;
    }
    for (uint8_t k = 0; k < 3; k++) {
        color[at[0][k]] = k;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &fs : at) {
            if (fs.size() != 3) {
                continue;
            }
            int unset = -1;
            int unset_count = 0;
            int color_sum = 0;
            for (int k = 0; k < 3; k++) {
                if (color[fs[k]] == kUnset) {
                    unset = k;
                    unset_count++;
                } else {
                    color_sum += color[fs[k]];
                }
            }
            if (unset_count == 1) {
                int forced = 3 - color_sum;
                color[fs[unset]] = static_cast<uint8_t>(forced >= 0 && forced <= 2 ? forced : 0);
                changed = true;
            }
        }
    }
    for (auto &c : color) {
        if (c == kUnset) {
            c = 0;
        }
    }
    return color;
}

Colex finish_generated(const char *name, size_t rows, size_t cols, size_t vertex_count,
                       std::vector<std::vector<uint32_t>> faces) {
    Colex c;
    c.vertex_count = vertex_count;
    c.face_colors = propagate_coloring(vertex_count, faces);
    c.faces = std::move(faces);
    ValidationReport report = validate(c);
    if (!report.ok()) {
        throw InvalidDimensionsError(std::string(name) + " " + std::to_string(rows) + "x" + std::to_string(cols) +
                                     " is not a valid colex:\n" + report.to_string());
    }
    return c;
}

}  // namespace

std::vector<std::pair<uint32_t, uint32_t>> Colex::edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (const auto &f : faces) {
        for (size_t i = 0; i < f.size(); i++) {
            uint32_t a = f[i];
            uint32_t b = f[(i + 1) % f.size()];
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string_view violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::kFaceColorCount:
            return "face-color-count";
        case ViolationKind::kVertexOutOfRange:
            return "vertex-out-of-range";
        case ViolationKind::kRepeatedVertex:
            return "repeated-vertex";
        case ViolationKind::kOddFace:
            return "odd-face";
        case ViolationKind::kSmallFace:
            return "small-face";
        case ViolationKind::kVertexFaceCount:
            return "vertex-face-count";
        case ViolationKind::kVertexDegree:
            return "vertex-degree";
        case ViolationKind::kEdgeFaceCount:
            return "edge-face-count";
        case ViolationKind::kFaceOverlap:
            return "face-overlap";
        case ViolationKind::kColorRange:
            return "color-range";
        case ViolationKind::kAdjacentSameColor:
            return "adjacent-same-color";
        case ViolationKind::kVertexColors:
            return "vertex-colors";
        case ViolationKind::kOddVertexCount:
            return "odd-vertex-count";
        case ViolationKind::kEdgeCount:
            return "edge-count";
        case ViolationKind::kEulerCharacteristic:
            return "euler-characteristic";
        case ViolationKind::kDisconnected:
            return "disconnected";
    }
    return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation &v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
    std::string s;
    for (const auto &v : violations) {
        s += violation_name(v.kind);
        s += ": ";
        s += v.message;
        s += '\n';
    }
    return s;
}

ValidationReport validate(const Colex &c) {
    ReportBuilder report;
    const size_t V = c.vertex_count;
    const size_t F = c.faces.size();

    if (c.face_colors.size() != F) {
        report.add(ViolationKind::kFaceColorCount, "face_colors has " + std::to_string(c.face_colors.size()) +
                                                       " entries for " + std::to_string(F) + " faces");
    }
    for (size_t f = 0; f < F; f++) {
        std::vector<uint32_t> sorted = c.faces[f];
        for (uint32_t v : sorted) {
            if (v >= V) {
                report.add(ViolationKind::kVertexOutOfRange,
                           "face " + std::to_string(f) + " references vertex " + std::to_string(v) +
                               " but vertex_count is " + std::to_string(V),
                           {f, v});
            }
        }
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            report.add(ViolationKind::kRepeatedVertex,
                       "face " + std::to_string(f) + " lists vertex " + std::to_string(*dup) + " more than once",
                       {f, *dup});
        }
    }
    if (!report.ok()) {
        return report.take();
    }

    for (size_t f = 0; f < F; f++) {
        size_t n = c.faces[f].size();
        if (n % 2 != 0) {
            report.add(ViolationKind::kOddFace,
                       "face " + std::to_string(f) + " has an odd vertex count (" + std::to_string(n) + ")", {f});
        } else if (n < 4) {
            report.add(ViolationKind::kSmallFace,
                       "face " + std::to_string(f) + " has " + std::to_string(n) + " vertices (need >= 4)", {f});
        }
        if (c.face_colors[f] > 2) {
            report.add(ViolationKind::kColorRange,
                       "face " + std::to_string(f) + " has color " + std::to_string(c.face_colors[f]) +
                           " (must be 0, 1 or 2)",
                       {f});
        }
    }

    std::vector<std::vector<uint32_t>> faces_at(V);
    for (uint32_t f = 0; f < F; f++) {
        for (uint32_t v : c.faces[f]) {
            faces_at[v].push_back(f);
        }
    }
    for (size_t v = 0; v < V; v++) {
        if (faces_at[v].size() != 3) {
            report.add(ViolationKind::kVertexFaceCount,
                       "vertex " + std::to_string(v) + " lies on " + std::to_string(faces_at[v].size()) +
                           " faces (must be 3)",
                       {v});
        }
    }

    std::map<uint64_t, std::vector<uint32_t>> edge_faces;
    for (uint32_t f = 0; f < F; f++) {
        const auto &face = c.faces[f];
        for (size_t i = 0; i < face.size(); i++) {
            edge_faces[pair_key(face[i], face[(i + 1) % face.size()])].push_back(f);
        }
    }
    std::vector<std::vector<uint32_t>> neighbors(V);
    for (const auto &[key, fs] : edge_faces) {
        uint32_t a = static_cast<uint32_t>(key >> 32);
        uint32_t b = static_cast<uint32_t>(key & 0xFFFFFFFFu);
        neighbors[a].push_back(b);
        neighbors[b].push_back(a);
        if (fs.size() != 2) {
            report.add(ViolationKind::kEdgeFaceCount,
                       "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") borders " +
                           std::to_string(fs.size()) + " face(s) (must be 2)",
                       {a, b});
        } else if (fs[0] != fs[1] && c.face_colors[fs[0]] == c.face_colors[fs[1]]) {
            report.add(ViolationKind::kAdjacentSameColor,
                       "faces " + std::to_string(fs[0]) + " and " + std::to_string(fs[1]) +
                           " share edge (" + std::to_string(a) + ", " + std::to_string(b) + ") and both have color " +
                           std::to_string(c.face_colors[fs[0]]),
                       {fs[0], fs[1]});
        }
    }
    for (size_t v = 0; v < V; v++) {
        if (neighbors[v].size() != 3) {
            report.add(ViolationKind::kVertexDegree,
                       "vertex " + std::to_string(v) + " has degree " + std::to_string(neighbors[v].size()) +
                           " (must be 3)",
                       {v});
        }
    }

    std::unordered_map<uint64_t, size_t> overlap;
    for (size_t v = 0; v < V; v++) {
        const auto &fs = faces_at[v];
        for (size_t i = 0; i < fs.size(); i++) {
            for (size_t j = i + 1; j < fs.size(); j++) {
                overlap[pair_key(fs[i], fs[j])]++;
            }
        }
    }
    std::vector<std::pair<uint64_t, size_t>> bad_overlaps;
    for (const auto &[key, n] : overlap) {
        if (n != 2) {
            bad_overlaps.emplace_back(key, n);
        }
    }
    std::sort(bad_overlaps.begin(), bad_overlaps.end());
    for (const auto &[key, n] : bad_overlaps) {
        size_t f = key >> 32;
        size_t g = key & 0xFFFFFFFFu;
        report.add(ViolationKind::kFaceOverlap,
                   "faces " + std::to_string(f) + " and " + std::to_string(g) + " have face overlap size " +
                       std::to_string(n) + " (must be 0 or 2)",
                   {f, g});
    }

    for (size_t v = 0; v < V; v++) {
        const auto &fs = faces_at[v];
        if (fs.size() != 3) {
            continue;
        }
        unsigned seen = 0;
        for (uint32_t f : fs) {
            if (c.face_colors[f] <= 2) {
                seen |= 1u << c.face_colors[f];
            }
        }
        if (seen != 0b111) {
            report.add(ViolationKind::kVertexColors,
                       "the faces around vertex " + std::to_string(v) + " do not carry all three colors", {v});
        }
    }

    if (V % 2 != 0) {
        report.add(ViolationKind::kOddVertexCount, "vertex_count " + std::to_string(V) + " is odd");
    }
    const size_t E = edge_faces.size();
    if (2 * E != 3 * V) {
        report.add(ViolationKind::kEdgeCount,
                   "E = " + std::to_string(E) + " but a trivalent lattice needs E = 3V/2 = " +
                       std::to_string(3 * V / 2));
    }

    if (V > 0) {
        std::vector<bool> reached(V, false);
        std::vector<uint32_t> stack{0};
        reached[0] = true;
        size_t count = 1;
        while (!stack.empty()) {
            uint32_t v = stack.back();
            stack.pop_back();
            for (uint32_t w : neighbors[v]) {
                if (!reached[w]) {
                    reached[w] = true;
                    count++;
                    stack.push_back(w);
                }
            }
        }
        if (count != V) {
            std::vector<size_t> missing;
            for (size_t v = 0; v < V && missing.size() < 8; v++) {
                if (!reached[v]) {
                    missing.push_back(v);
                }
            }
            report.add(ViolationKind::kDisconnected,
                       "lattice is disconnected: " + std::to_string(V - count) +
                           " vertices unreachable from vertex 0 (first: " + join_indices(missing) + ")",
                       missing);
        }
    } else {
        report.add(ViolationKind::kDisconnected, "lattice has no vertices");
    }

    long chi = static_cast<long>(V) - static_cast<long>(E) + static_cast<long>(F);
    if (chi > 2 || chi % 2 != 0) {
        report.add(ViolationKind::kEulerCharacteristic,
                   "Euler characteristic V - E + F = " + std::to_string(chi) + " must be even and <= 2");
    }
    return report.take();
}

Colex generate_hexagonal(size_t rows, size_t cols) {
    if (rows == 0 || cols == 0) {
        throw InvalidDimensionsError("hexagonal " + std::to_string(rows) + "x" + std::to_string(cols) +
                                     ": dimensions must be positive");
    }
    const size_t width = 2 * cols;
    auto vid = [&](size_t x, size_t y) { return static_cast<uint32_t>((y % rows) * width + (x % width)); };
    std::vector<std::vector<uint32_t>> faces;
    faces.reserve(rows * cols);
    for (size_t y = 0; y < rows; y++) {
        for (size_t k = 0; k < cols; k++) {
            size_t x = 2 * k + (y % 2);
            faces.push_back({vid(x, y), vid(x + 1, y), vid(x + 2, y), vid(x + 2, y + 1), vid(x + 1, y + 1),
                             vid(x, y + 1)});
        }
    }
    return finish_generated("hexagonal", rows, cols, 2 * rows * cols, std::move(faces));
}

Colex generate_square_octagon(size_t rows, size_t cols) {
    if (rows == 0 || cols == 0) {
        throw InvalidDimensionsError("square-octagon " + std::to_string(rows) + "x" + std::to_string(cols) +
                                     ": dimensions must be positive");
    }
    enum Corner : uint32_t { kE = 0, kN = 1, kW = 2, kS = 3 };
    const long R = static_cast<long>(rows);
    const long C = static_cast<long>(cols);
    // Square (i, j) sits at grid point (i + 1/2, j + 1/2); the torus periods
    // are rows*(1, 1) and cols*(1, -1).
    auto square = [&](long i, long j) -> uint32_t {
        long k = floor_mod(i + j, 2);
        long i0 = i - k;
        size_t r = floor_mod((i0 + j) / 2, R);
        size_t c = floor_mod((i0 - j) / 2, C);
        return static_cast<uint32_t>((r * cols + c) * 2 + k);
    };
    auto v = [&](long i, long j, Corner d) { return square(i, j) * 4 + d; };
    std::vector<std::vector<uint32_t>> faces;
    faces.reserve(4 * rows * cols);
    for (long r = 0; r < R; r++) {
        for (long c = 0; c < C; c++) {
            for (long k = 0; k < 2; k++) {
                long i = r + c + k;
                long j = r - c;
                faces.push_back({v(i, j, kE), v(i, j, kN), v(i, j, kW), v(i, j, kS)});
                faces.push_back({v(i, j, kE), v(i + 1, j, kW), v(i + 1, j, kN), v(i + 1, j + 1, kS),
                                 v(i + 1, j + 1, kW), v(i, j + 1, kE), v(i, j + 1, kS), v(i, j, kN)});
            }
        }
    }
    return finish_generated("square-octagon", rows, cols, 8 * rows * cols, std::move(faces));
}

BitMatrix incidence_matrix(const Colex &c) {
    BitMatrix b(c.vertex_count, c.faces.size());
    for (size_t f = 0; f < c.faces.size(); f++) {
        for (uint32_t v : c.faces[f]) {
            b.set(v, f, true);
        }
    }
    return b;
}

DerivedQuantities derived_quantities(const Colex &c) {
    DerivedQuantities d;
    d.vertices = c.vertex_count;
    d.edges = c.edges().size();
    d.faces = c.faces.size();
    d.chi = static_cast<long>(d.vertices) - static_cast<long>(d.edges) + static_cast<long>(d.faces);
    d.genus = static_cast<size_t>((2 - d.chi) / 2);
    d.encoded_qubits = 4 * d.genus;
    return d;
}

std::vector<FaceTriple> vertex_face_triples(const Colex &c) {
    std::vector<FaceTriple> out(c.vertex_count);
    std::vector<uint8_t> filled(c.vertex_count, 0);
    for (uint32_t f = 0; f < c.faces.size(); f++) {
        for (uint32_t v : c.faces[f]) {
            if (filled[v] >= 3) {
                throw ValidationError("vertex " + std::to_string(v) + " lies on more than 3 faces");
            }
            out[v][filled[v]++] = f;
        }
    }
    for (size_t v = 0; v < c.vertex_count; v++) {
        if (filled[v] != 3) {
            throw ValidationError("vertex " + std::to_string(v) + " lies on fewer than 3 faces");
        }
        std::sort(out[v].begin(), out[v].end());
    }
    return out;
}

Colex colex_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("colex JSON: ") + e.what());
    }
    try {
        Colex c;
        c.vertex_count = doc.at("vertex_count").get<size_t>();
        c.faces = doc.at("faces").get<std::vector<std::vector<uint32_t>>>();
        for (int color : doc.at("face_colors").get<std::vector<int>>()) {
            if (color < 0 || color > 255) {
                throw ParseError("colex JSON: face color " + std::to_string(color) + " out of range");
            }
            c.face_colors.push_back(static_cast<uint8_t>(color));
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("colex JSON: ") + e.what());
    }
}

std::string colex_to_json(const Colex &c) {
    nlohmann::json doc;
    doc["vertex_count"] = c.vertex_count;
    doc["faces"] = c.faces;
    std::vector<int> colors(c.face_colors.begin(), c.face_colors.end());
    doc["face_colors"] = colors;
    return doc.dump() + "\n";
}

Colex load_colex(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open lattice file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    Colex c = colex_from_json(buffer.str());
    ValidationReport report = validate(c);
    if (!report.ok()) {
        throw ValidationError(path.string() + " is not a valid colex:\n" + report.to_string());
    }
    return c;
}

void save_colex(const Colex &c, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write lattice file " + path.string());
    }
    out << colex_to_json(c);
}

}  // namespace colorz
