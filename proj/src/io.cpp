#include "nilalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nilalg::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::Parse, field + ": " + msg);
}

const json& member(const json& obj, const char* key, const std::string& field) {
  if (!obj.is_object()) fail(field, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(field, std::string("missing key \"") + key + "\"");
  return *it;
}

const json& array(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

std::size_t index(const json& obj, const char* key, const std::string& field, std::size_t n) {
  const auto& v = member(obj, key, field);
  const std::string f = field + "." + key;
  if (!v.is_number_integer()) fail(f, "expected an integer index");
  const auto x = v.get<long long>();
  if (x < 1 || static_cast<unsigned long long>(x) > n) fail(f, "index " + std::to_string(x) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(x - 1);
}

Rat parse_rational(const json& j, const std::string& field) {
  const auto q = parse_real(j, field).as_rational();
  if (!q) fail(field, "structure constants must be rational");
  return *q;
}

// Largest 1-based index mentioned in an algebra section.
std::size_t max_index(const json& items, std::initializer_list<const char*> keys) {
  long long m = 0;
  auto scan = [&](const json& o) {
    if (!o.is_object()) return;
    for (const char* k : keys) {
      const auto it = o.find(k);
      if (it != o.end() && it->is_number_integer()) m = std::max(m, it->get<long long>());
    }
  };
  if (!items.is_array()) return 0;
  for (const auto& it : items) {
    scan(it);
    if (it.is_object() && it.contains("terms") && it["terms"].is_array())
      for (const auto& t : it["terms"]) scan(t);
  }
  return m > 0 ? static_cast<std::size_t>(m) : 0;
}

NilpotentLieAlgebra load_algebra(const json& doc, std::size_t n) {
  NilpotentLieAlgebra g(n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rat& c, const std::string& field) {
    if (i == j) fail(field, "i and j must differ");
    const auto key = std::make_tuple(std::min(i, j), std::max(i, j), k);
    if (!seen.insert(key).second) fail(field, "duplicate entry");
    g.set_bracket(i, j, k, c);
  };
  if (doc.contains("brackets")) {
    const auto& b = array(doc["brackets"], "brackets");
    for (std::size_t t = 0; t < b.size(); ++t) {
      const std::string f = "brackets[" + std::to_string(t) + "]";
      const auto i = index(b[t], "i", f, n), j = index(b[t], "j", f, n), k = index(b[t], "k", f, n);
      put(i, j, k, parse_rational(member(b[t], "c", f), f + ".c"), f);
    }
  } else {
    const auto& d = array(doc["dforms"], "dforms");
    for (std::size_t t = 0; t < d.size(); ++t) {
      const std::string f = "dforms[" + std::to_string(t) + "]";
      const auto k = index(d[t], "k", f, n);
      const auto& terms = array(member(d[t], "terms", f), f + ".terms");
      for (std::size_t s = 0; s < terms.size(); ++s) {
        const std::string ft = f + ".terms[" + std::to_string(s) + "]";
        const auto i = index(terms[s], "i", ft, n), j = index(terms[s], "j", ft, n);
        // de^k has coefficient c on e^i ^ e^j, so [e_i, e_j] has -c on e_k.
        put(i, j, k, -parse_rational(member(terms[s], "c", ft), ft + ".c"), ft);
      }
    }
  }
  return g;
}

Mat<RealAlg> parse_real_matrix(const json& j, const std::string& field) {
  const auto& rows = array(j, field);
  const std::size_t r = rows.size();
  if (r == 0) fail(field, "empty matrix");
  Mat<RealAlg> m(r, array(rows[0], field + "[0]").size());
  for (std::size_t a = 0; a < r; ++a) {
    const std::string fr = field + "[" + std::to_string(a) + "]";
    const auto& row = array(rows[a], fr);
    if (row.size() != m.cols()) fail(fr, "rows have different lengths");
    for (std::size_t b = 0; b < row.size(); ++b) m(a, b) = parse_real(row[b], fr + "[" + std::to_string(b) + "]");
  }
  return m;
}

template <class F>
auto with_context(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    throw Error(e.kind(), field + ": " + e.what());
  }
}

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t p = 0; p < upto; ++p) {
      if (text[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

RealAlg parse_real(const json& j, const std::string& field) {
  if (j.is_number_integer()) return RealAlg(Rat(j.dump()));
  if (j.is_number_float()) fail(field, "floating-point numbers are not accepted; write the scalar as a string");
  if (!j.is_string()) fail(field, "expected a scalar string");
  try {
    return RealAlg::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

CScalar parse_complex(const json& j, const std::string& field) {
  if (!j.is_object()) return CScalar(parse_real(j, field));
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (k != "re" && k != "im") fail(field, "unexpected key \"" + k + "\" in complex scalar");
  }
  const RealAlg re = j.contains("re") ? parse_real(j["re"], field + ".re") : RealAlg(0);
  const RealAlg im = j.contains("im") ? parse_real(j["im"], field + ".im") : RealAlg(0);
  return CScalar(re, im);
}

Mat<CScalar> parse_complex_matrix(const json& j, const std::string& field, std::size_t rows, std::size_t cols) {
  const auto& rs = array(j, field);
  if (rs.size() != rows) fail(field, "expected " + std::to_string(rows) + " rows");
  Mat<CScalar> m(rows, cols);
  for (std::size_t a = 0; a < rows; ++a) {
    const std::string fr = field + "[" + std::to_string(a) + "]";
    const auto& row = array(rs[a], fr);
    if (row.size() != cols) fail(fr, "expected " + std::to_string(cols) + " entries");
    for (std::size_t b = 0; b < cols; ++b) m(a, b) = parse_complex(row[b], fr + "[" + std::to_string(b) + "]");
  }
  return m;
}

Document load_document(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  static const std::set<std::string> known{"dim",     "brackets", "dforms", "J",  "oneforms",
                                           "twoform", "tau",      "X",      "J4", "catalog"};
  for (const auto& [k, v] : doc.items()) {
    (void)v;
    if (!known.count(k)) fail("document", "unknown key \"" + k + "\"");
  }
  Document out;
  if (doc.contains("brackets") && doc.contains("dforms")) fail("document", "give either \"brackets\" or \"dforms\", not both");
  if (doc.contains("J") && doc.contains("oneforms")) fail("document", "give either \"J\" or \"oneforms\", not both");

  if (doc.contains("J")) {
    const auto m = parse_real_matrix(doc["J"], "J");
    out.J = with_context("J", [&] { return ComplexStructure(m); });
  } else if (doc.contains("oneforms")) {
    const auto& rows = array(doc["oneforms"], "oneforms");
    if (rows.empty()) fail("oneforms", "empty list");
    const std::size_t n = array(rows[0], "oneforms[0]").size();
    const auto m = parse_complex_matrix(rows, "oneforms", rows.size(), n);
    std::vector<Vec<CScalar>> forms;
    for (std::size_t a = 0; a < m.rows(); ++a) forms.push_back(m.row(a));
    out.J = with_context("oneforms", [&] { return ComplexStructure::from_oneforms(forms); });
  }

  std::size_t n = 0;
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) fail("dim", "expected a positive integer");
    n = doc["dim"].get<std::size_t>();
    if (n > kMaxLieDim) fail("dim", "at most " + std::to_string(kMaxLieDim) + " supported");
  }
  if (doc.contains("brackets") || doc.contains("dforms")) {
    if (n == 0 && out.J) n = out.J->dim();
    if (n == 0)
      n = doc.contains("brackets") ? max_index(doc["brackets"], {"i", "j", "k"}) : max_index(doc["dforms"], {"k", "i", "j"});
    if (n == 0) fail("document", "cannot determine the dimension; give \"dim\"");
    out.algebra = load_algebra(doc, n);
  } else if (n > 0) {
    out.algebra = NilpotentLieAlgebra(n);
  }
  if (out.algebra && out.J && out.algebra->dim() != out.J->dim())
    throw Error(ErrorKind::Dimension, "J is " + std::to_string(out.J->dim()) + "x" + std::to_string(out.J->dim()) +
                                          " but the algebra has dimension " + std::to_string(out.algebra->dim()));

  if (doc.contains("twoform")) {
    const std::size_t m = out.algebra ? out.algebra->dim() : out.J ? out.J->dim() : 0;
    if (m == 0) fail("twoform", "needs an algebra or complex structure to fix the dimension");
    TwoForm f(m);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const auto& terms = array(doc["twoform"], "twoform");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string ft = "twoform[" + std::to_string(t) + "]";
      const auto i = index(terms[t], "i", ft, m), j = index(terms[t], "j", ft, m);
      if (i == j) fail(ft, "i and j must differ");
      if (!seen.insert({std::min(i, j), std::max(i, j)}).second) fail(ft, "duplicate entry");
      f.set(i, j, parse_real(member(terms[t], "c", ft), ft + ".c"));
    }
    out.twoform = f;
  }

  const int torus_keys = static_cast<int>(doc.contains("tau")) + doc.contains("X") + doc.contains("J4");
  if (torus_keys > 1) fail("document", "give exactly one of \"tau\", \"X\", \"J4\"");
  if (doc.contains("tau")) {
    const auto m = parse_complex_matrix(doc["tau"], "tau", 2, 2);
    out.torus = TorusInput{TorusInput::Kind::Tau, with_context("tau", [&] { return PeriodTau(m).matrix(); }), {}};
  } else if (doc.contains("X")) {
    out.torus = TorusInput{TorusInput::Kind::X, parse_complex_matrix(doc["X"], "X", 2, 2), {}};
  } else if (doc.contains("J4")) {
    const auto m = parse_real_matrix(doc["J4"], "J4");
    out.torus = TorusInput{TorusInput::Kind::J4, {}, with_context("J4", [&] { return TorusJ(m).matrix(); })};
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document read_document(const std::string& path) {
  const auto text = read_text(path);
  return load_document(parse_json(text, path));
}

json encode(const RealAlg& x) { return x.str(); }

json encode(const CScalar& z) { return json{{"re", z.re().str()}, {"im", z.im().str()}}; }

json encode(const Mat<RealAlg>& m) {
  json rows = json::array();
  for (std::size_t a = 0; a < m.rows(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(m(a, b).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const Mat<CScalar>& m) {
  json rows = json::array();
  for (std::size_t a = 0; a < m.rows(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(encode(m(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const Vec<RealAlg>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json encode_ints(const Vec<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json encode_rats(const Mat<Rat>& m) {
  json rows = json::array();
  for (std::size_t a = 0; a < m.rows(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(to_string(m(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode_basis(const Subspace<RealAlg>& s) {
  json out = json::array();
  for (const auto& v : s.vectors()) out.push_back(encode(v));
  return out;
}

json encode_basis(const Subspace<Rat>& s) { return encode_basis(convert<RealAlg>(s)); }

json encode_algebra(const NilpotentLieAlgebra& g) {
  json br = json::array();
  for (const auto& t : g.entries())
    br.push_back(json{{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}, {"c", to_string(t.c)}});
  return json{{"dim", g.dim()}, {"brackets", std::move(br)}};
}

json encode_twoform(const TwoForm& f) {
  json terms = json::array();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = i + 1; j < f.dim(); ++j)
      if (!f.matrix()(i, j).is_zero()) terms.push_back(json{{"i", i + 1}, {"j", j + 1}, {"c", f.matrix()(i, j).str()}});
  return terms;
}

}  // namespace nilalg::io
