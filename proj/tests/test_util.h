// Copyright 2026 The colorz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLORZ_TESTS_TEST_UTIL_H
#define COLORZ_TESTS_TEST_UTIL_H

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "colorz/bit_matrix.h"
#include "colorz/colex.h"
#include "colorz/random.h"

namespace colorz::testing {

inline std::filesystem::path data_path(const std::string &name) {
    return std::filesystem::path(COLORZ_TEST_DATA_DIR) / name;
}

struct NamedColex {
    std::string name;
    Colex colex;
};

// Lattices small enough for every exact oracle (F <= 22).
inline std::vector<NamedColex> small_lattices() {
    std::vector<NamedColex> out;
    out.push_back({"hex_4x3", generate_hexagonal(4, 3)});
    out.push_back({"hex_6x3", generate_hexagonal(6, 3)});
    out.push_back({"square_octagon_2x2", generate_square_octagon(2, 2)});
    for (const char *f : {"cube", "hexagonal_prism", "octagonal_prism", "hex_torus_18", "square_octagon_20"}) {
        out.push_back({f, load_colex(data_path(std::string(f) + ".json"))});
    }
    return out;
}

// Lattices with V <= 20, within reach of a dense statevector.
inline std::vector<NamedColex> tiny_lattices() {
    std::vector<NamedColex> out;
    for (const char *f : {"cube", "hexagonal_prism", "octagonal_prism", "hex_torus_18"}) {
        out.push_back({f, load_colex(data_path(std::string(f) + ".json"))});
    }
    return out;
}

inline BitMatrix random_matrix(size_t rows, size_t cols, Rng &rng, double density = 0.5) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            m.set(r, c, uniform_unit(rng) < density);
        }
    }
    return m;
}

inline BitVector random_vector(size_t len, Rng &rng) {
    BitVector v(len);
    for (size_t i = 0; i < len; ++i) {
        v.set(i, rng() & 1);
    }
    return v;
}

inline double relative_error(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace colorz::testing

#endif  // COLORZ_TESTS_TEST_UTIL_H
