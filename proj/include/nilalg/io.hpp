#pragma once

// JSON input files and the JSON encodings shared by reports.
//
// One document may carry an algebra ("dim" with "brackets" or "dforms"), a
// complex structure ("J" or "oneforms"), a 2-form ("twoform") and a torus
// ("tau", "X" or "J4").  Indices in files are 1-based.  Scalars are strings
// in the scalar grammar, integers, or {"re", "im"} objects for complex
// values; floating-point numbers are rejected.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "nilalg/hermitian.hpp"
#include "nilalg/torus.hpp"

namespace nilalg::io {

using nlohmann::json;

struct TorusInput {
  enum class Kind { Tau, X, J4 };
  Kind kind = Kind::Tau;
  Mat<CScalar> matrix;  // tau or X
  Mat<RealAlg> j4;
};

struct Document {
  std::optional<NilpotentLieAlgebra> algebra;
  std::optional<ComplexStructure> J;
  std::optional<TwoForm> twoform;
  std::optional<TorusInput> torus;
};

/// Error(Parse) with line and column on malformed JSON.
json parse_json(std::string_view text, const std::string& source);

/// Error(Parse) naming the offending field; structural failures of the
/// decoded objects keep their own kind.
Document load_document(const json& j);

/// Reads and loads a file; Error(Parse) if it cannot be read.
Document read_document(const std::string& path);
std::string read_text(const std::string& path);

RealAlg parse_real(const json& j, const std::string& field);
CScalar parse_complex(const json& j, const std::string& field);
Mat<CScalar> parse_complex_matrix(const json& j, const std::string& field, std::size_t rows, std::size_t cols);

json encode(const RealAlg& x);
json encode(const CScalar& z);
json encode(const Mat<RealAlg>& m);
json encode(const Mat<CScalar>& m);
json encode(const Vec<RealAlg>& v);
json encode_ints(const Vec<Int>& v);
json encode_rats(const Mat<Rat>& m);

/// Basis rows of the echelon form.
json encode_basis(const Subspace<RealAlg>& s);
json encode_basis(const Subspace<Rat>& s);

/// {"dim", "brackets"} with i < j and nonzero c, in index order.
json encode_algebra(const NilpotentLieAlgebra& g);
json encode_twoform(const TwoForm& f);

}  // namespace nilalg::io
