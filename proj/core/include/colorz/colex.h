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

#ifndef COLORZ_COLEX_H
#define COLORZ_COLEX_H

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colorz/bit_matrix.h"

namespace colorz {

/// A 2-colex: a trivalent lattice on a closed orientable surface whose faces
/// carry a proper 3-coloring. One qubit per vertex, one Ising spin per face.
///
/// Faces list their vertices in cyclic boundary order, so the edge set is
/// implied (consecutive pairs, wrapping around). Colors are part of the data
/// and are checked by validate(), never inferred from a file.
struct Colex {
    size_t vertex_count = 0;
    std::vector<std::vector<uint32_t>> faces;
    std::vector<uint8_t> face_colors;

    size_t face_count() const { return faces.size(); }
    /// Distinct undirected edges as (low, high) pairs, sorted.
    std::vector<std::pair<uint32_t, uint32_t>> edges() const;

    bool operator==(const Colex &other) const = default;
};

enum class ViolationKind {
    kFaceColorCount,
    kVertexOutOfRange,
    kRepeatedVertex,
    kOddFace,
    kSmallFace,
    kVertexFaceCount,
    kVertexDegree,
    kEdgeFaceCount,
    kFaceOverlap,
    kColorRange,
    kAdjacentSameColor,
    kVertexColors,
    kOddVertexCount,
    kEdgeCount,
    kEulerCharacteristic,
    kDisconnected,
};

/// Stable kebab-case name, e.g. "face-overlap".
std::string_view violation_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
    /// Offending vertex or face indices, as named in the message.
    std::vector<size_t> indices;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    /// One line per violation: "<name>: <message>".
    std::string to_string() const;
};

/// Checks every 2-colex invariant: index ranges, even faces of size >= 4,
/// three faces and three edges per vertex, every edge on exactly two faces,
/// pairwise face overlaps of 0 or 2, proper coloring with all three colors
/// at each vertex, V even, E = 3V/2, connectivity, and an even Euler
/// characteristic <= 2. Structural errors (bad indices, wrong color count)
/// short-circuit the remaining checks.
ValidationReport validate(const Colex &c);

/// Periodic honeycomb ("brick wall") on a torus: `rows` rows of `cols`
/// hexagons, V = 2*rows*cols, F = rows*cols. Vertex (x, y), x < 2*cols,
/// y < rows, has index y*2*cols + x; the hexagon in row y starting at x has
/// vertices (x,y) (x+1,y) (x+2,y) (x+2,y+1) (x+1,y+1) (x,y+1). Faces are
/// ordered row-major. Throws InvalidDimensionsError when the result fails
/// validation (in practice rows must be even and >= 4, cols a multiple of 3).
Colex generate_hexagonal(size_t rows, size_t cols);

/// Truncated square (4-8) tiling on a torus whose periods run along the
/// diagonals of the square grid: rows*cols unit cells, each with two squares
/// and two octagons, so V = 8*rows*cols and F = 4*rows*cols. Cell (r, c)
/// holds faces [square 0, octagon 0, square 1, octagon 1] and vertices
/// ((r*cols + c)*2 + k)*4 + d for square k and corner d in E, N, W, S order.
/// Throws InvalidDimensionsError when the result fails validation.
Colex generate_square_octagon(size_t rows, size_t cols);

/// V x F vertex-face incidence matrix, columns in face order.
BitMatrix incidence_matrix(const Colex &c);

struct DerivedQuantities {
    size_t vertices = 0;
    size_t edges = 0;
    size_t faces = 0;
    long chi = 0;
    size_t genus = 0;
    size_t encoded_qubits = 0;
};

/// Counts and topology of a valid colex; genus comes from Euler's formula.
DerivedQuantities derived_quantities(const Colex &c);

using FaceTriple = std::array<uint32_t, 3>;

/// For each vertex, its three faces in ascending face-index order.
std::vector<FaceTriple> vertex_face_triples(const Colex &c);

/// JSON: {"vertex_count": V, "faces": [[...], ...], "face_colors": [...]}.
/// Parsing checks shape only; load_colex additionally validates.
Colex colex_from_json(std::string_view text);
std::string colex_to_json(const Colex &c);

/// Reads and validates a colex file. Throws IoError, ParseError, or
/// ValidationError (whose message is the itemized report).
Colex load_colex(const std::filesystem::path &path);
void save_colex(const Colex &c, const std::filesystem::path &path);

}  // namespace colorz

#endif
