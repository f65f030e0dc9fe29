#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rankrange/affine.hpp"

namespace rankrange {

/// Text format: first line "m n p", then m lines of n decimal residues
/// separated by single spaces.
Mat read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Mat& A);

Mat read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Mat& A);

/// JSON schema: {"p": int, "m": int, "n": int, "ambient": "full"|"skew",
/// "offset": [[int]], "basis": [[[int]]]}. Written in canonical form.
nlohmann::json space_to_json(const AffineSpace& S);
AffineSpace space_from_json(const nlohmann::json& j);

AffineSpace read_space_file(const std::string& path);
void write_space_file(const std::string& path, const AffineSpace& S);

}  // namespace rankrange
