#pragma once

// The nilalg command line.  Every command builds a JSON report
//   {"command", "input_digest", "results", "warnings", "errors"}
// which is printed as JSON with --json and as indented text otherwise.

#include <iosfwd>
#include <string>
#include <vector>

#include "nilalg/io.hpp"

namespace nilalg::cli {

using io::json;

struct Report {
  json payload;
  bool ok = true;
};

/// SHA-256 of the bytes, as lowercase hex.
std::string sha256_hex(const std::string& bytes);

Report cmd_check(const std::string& file);
Report cmd_invariants(const std::string& file);
Report cmd_cohomology(const std::string& file, std::optional<std::size_t> max_degree);
Report cmd_torus_adim(const std::string& file, std::size_t radius);
Report cmd_iwasawa_adim(const std::string& x_file, std::size_t radius);

/// The entry as a loadable document; `params` is inline JSON or a file.
json catalog_document(const std::string& name, const std::string& params);

/// Stable plain-text rendering of a JSON value.
std::string render_text(const json& j);

/// Full command line including the program name.  Returns the exit code:
/// 0 on success, 1 when the report carries errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilalg::cli
