#include "nilalg/cli.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilalg/catalog.hpp"

namespace nilalg::cli {

namespace {

json one_based(std::initializer_list<std::size_t> idx) {
  json a = json::array();
  for (auto i : idx) a.push_back(i + 1);
  return a;
}

json inertia_json(const Inertia& in) { return json{{"plus", in.plus}, {"minus", in.minus}, {"zero", in.zero}}; }

json error_json(const Error& e) { return json{{"kind", to_string(e.kind())}, {"message", e.what()}}; }

Report start(const std::string& command, const std::string& digest_source) {
  Report r;
  r.payload = json{{"command", command},
                   {"input_digest", "sha256:" + sha256_hex(digest_source)},
                   {"results", json::object()},
                   {"warnings", json::array()},
                   {"errors", json::array()}};
  return r;
}

void add_error(Report& r, json e) {
  r.payload["errors"].push_back(std::move(e));
  r.ok = false;
}

void warn(Report& r, const std::string& msg) { r.payload["warnings"].push_back(msg); }

// Runs body, turning library errors into report entries.
template <class F>
Report guarded(const std::string& command, const std::string& file, F&& body) {
  std::string text;
  try {
    text = io::read_text(file);
  } catch (const Error& e) {
    Report r = start(command, "");
    add_error(r, error_json(e));
    return r;
  }
  Report r = start(command, text);
  try {
    body(r, io::load_document(io::parse_json(text, file)));
  } catch (const Error& e) {
    add_error(r, error_json(e));
  }
  return r;
}

const NilpotentLieAlgebra& need_algebra(const io::Document& d) {
  if (!d.algebra) throw Error(ErrorKind::Parse, "document: no algebra (\"brackets\" or \"dforms\") given");
  return *d.algebra;
}

const ComplexStructure& need_J(const io::Document& d) {
  if (!d.J) throw Error(ErrorKind::Parse, "document: no complex structure (\"J\" or \"oneforms\") given");
  return *d.J;
}

json validation_json(const ValidationReport& v) {
  json j{{"valid", v.ok}};
  if (!v.jacobi_failure) j["nilpotent"] = v.nilpotent;
  if (v.jacobi_failure) {
    const auto& t = *v.jacobi_failure;
    j["jacobi"] = json{{"ok", false}, {"triple", one_based({t[0], t[1], t[2]})}};
  } else {
    j["jacobi"] = json{{"ok", true}};
  }
  if (v.nilpotent && !v.jacobi_failure) j["step"] = v.step;
  if (v.stabilized) j["stabilized"] = io::encode_basis(*v.stabilized);
  return j;
}

json adim_json(const AlgebraicDimension& a) {
  json ns{{"rank", a.ns.lattice.rank()}, {"constraints", io::encode_rats(a.ns.constraints)}};
  json basis = json::array();
  for (const auto& v : a.ns.lattice.basis) basis.push_back(io::encode_ints(v));
  ns["basis"] = std::move(basis);
  json j{{"a", a.value},
         {"status", a.exact ? "exact" : "lower bound"},
         {"upper_bound", a.upper_bound},
         {"radius", a.radius},
         {"pfaffian_inertia", inertia_json(a.pfaffian_inertia)},
         {"ns", std::move(ns)}};
  if (a.certificate_coords) {
    j["certificate"] = json{{"coords", io::encode_ints(*a.certificate_coords)},
                            {"E", io::encode_rats(*a.certificate)}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

json torus_json(const PeriodTau& tau, const TorusJ& j, const AlgebraicDimension& a) {
  json out{{"tau", io::encode(tau.matrix())}, {"J", io::encode(j.matrix())}};
  out["algebraic_dimension"] = adim_json(a);
  return out;
}

void render(std::ostringstream& os, const json& j, int indent);

bool is_flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
  }
  // Complex scalars print in a single line.
  if (j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im") && j["re"].is_string()) {
    const auto re = j["re"].get<std::string>(), im = j["im"].get<std::string>();
    if (im == "0") return re;
    const std::string ipart = im == "1" ? "i" : "i*(" + im + ")";
    return re == "0" ? ipart : re + " + " + ipart;
  }
  return j.dump();
}

bool is_complex(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im") && j["re"].is_string();
}

bool is_flat_object(const json& j) {
  if (!j.is_object() || j.empty()) return false;
  for (const auto& [k, v] : j.items()) {
    (void)k;
    if (v.is_array() || v.is_object()) return false;
  }
  return true;
}

std::string object_text(const json& j) {
  std::string s;
  for (const auto& [k, v] : j.items()) s += (s.empty() ? "" : ", ") + k + ": " + scalar_text(v);
  return s;
}

bool is_complex_row(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!is_complex(x) && (x.is_array() || x.is_object())) return false;
  return true;
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v) || is_complex(v) || (v.is_array() && is_complex_row(v))) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else if ((v.is_array() || v.is_object()) && v.empty()) {
        os << pad << k << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v) || is_complex(v) || is_complex_row(v)) {
        os << pad << "- " << scalar_text(v) << "\n";
      } else if (is_flat_object(v)) {
        os << pad << "- " << object_text(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

CatalogParams parse_params(const std::string& text) {
  CatalogParams p;
  if (text.empty()) return p;
  const std::string source = text.find('{') != std::string::npos ? text : io::read_text(text);
  const auto j = io::parse_json(source, "--params");
  if (!j.is_object()) throw Error(ErrorKind::Parse, "--params: expected a JSON object");
  for (const auto& [k, v] : j.items()) p[k] = io::parse_complex(v, "--params." + k);
  return p;
}

json expected_json(const ExpectedInvariants& x) {
  json j = json::object();
  if (x.h1_dim) j["h1Dim"] = *x.h1_dim;
  if (x.alg_dim_upper_bound) j["algDimUpperBound"] = *x.alg_dim_upper_bound;
  if (x.albanese_dim) j["albaneseDim"] = *x.albanese_dim;
  if (x.h) j["h"] = io::encode_basis(*x.h);
  if (x.rational_J) j["rationalJ"] = *x.rational_J;
  return j;
}

json params_json(const CatalogParams& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = io::encode(v);
  return j;
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << r.payload.dump(2) << "\n";
  } else {
    out << render_text(r.payload);
  }
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Validation, "SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Report cmd_check(const std::string& file) {
  return guarded("check", file, [](Report& r, const io::Document& d) {
    const auto& g = need_algebra(d);
    const auto v = validate(g);
    r.payload["results"]["algebra"] = validation_json(v);
    r.payload["results"]["algebra"]["dim"] = g.dim();
    if (!v.ok) {
      add_error(r, json{{"kind", "validation"},
                        {"message", v.jacobi_failure ? "Jacobi identity fails" : "algebra is not nilpotent"}});
    }
    if (d.J) {
      if (d.J->dim() != g.dim()) throw Error(ErrorKind::Dimension, "J and algebra dimensions differ");
      const auto ir = is_integrable(g, *d.J);
      json js{{"integrable", ir.integrable}};
      if (ir.witness) {
        js["witness"] = one_based({ir.witness->first, ir.witness->second});
        js["nijenhuis"] = io::encode(ir.nijenhuis);
        add_error(r, json{{"kind", "validation"}, {"message", "complex structure is not integrable"}});
      }
      r.payload["results"]["complex_structure"] = js;
    } else {
      warn(r, "no complex structure given; only the algebra was checked");
    }
  });
}

Report cmd_invariants(const std::string& file) {
  return guarded("invariants", file, [](Report& r, const io::Document& d) {
    const auto& g = need_algebra(d);
    const auto& j = need_J(d);
    const auto rep = invariant_report(g, j);
    auto& res = r.payload["results"];
    res["dim"] = g.dim();
    res["h1Dim"] = rep.h1_dim;
    res["algDimUpperBound"] = rep.alg_dim_upper_bound;
    res["kahlerRank"] = rep.kahler_rank;
    res["albaneseDim"] = rep.albanese_dim;
    res["rationalJ"] = rep.rational_J;
    res["sigma"] = io::encode_basis(rep.sigma);
    res["h"] = io::encode_basis(rep.h);
    res["h1"] = io::encode_basis(rep.h1);
    if (!rep.rational_J) warn(r, "J is not rational; h1 is the rational J-invariant hull of h");

    // Semipositive closed (1,1)-form of rank 2 h1Dim whose null-space is h.
    const auto w = kahler_rank_witness(g, j);
    const auto t = verify_nullspace_contains_h(g, j, w);
    res["witness"] = json{{"twoform", io::encode_twoform(w)},
                          {"inertia", inertia_json(semipositivity(w, j))},
                          {"nullspace_contains_h", t.contains},
                          {"nullspace_equals_h", t.equal}};
    if (!t.contains) add_error(r, json{{"kind", "validation"}, {"message", "witness null-space misses h"}});

    if (d.twoform) {
      const auto& f = *d.twoform;
      json jf{{"closed", is_closed(g, f)}, {"type_1_1", is_one_one(f, j)}};
      if (is_one_one(f, j)) {
        const auto in = semipositivity(f, j);
        jf["inertia"] = inertia_json(in);
        if (in.minus == 0) jf["nullspace"] = io::encode_basis(nullspace_hermitian(f, j));
      }
      try {
        const auto tf = verify_nullspace_contains_h(g, j, f);
        jf["nullspace_contains_h"] = tf.contains;
        jf["nullspace_equals_h"] = tf.equal;
        const auto c2 = condad2_check(g, j, f, tf.nullspace);
        jf["ad_identity"] = c2.holds;
        if (!tf.contains || !c2.holds)
          add_error(r, json{{"kind", "validation"}, {"message", "null-space identities fail for the given form"}});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Precondition) throw;
        jf["theorem_check"] = std::string("skipped: ") + e.what();
        warn(r, std::string("given twoform: ") + e.what());
      }
      res["twoform"] = jf;
    }
  });
}

Report cmd_cohomology(const std::string& file, std::optional<std::size_t> max_degree) {
  return guarded("cohomology", file, [&](Report& r, const io::Document& d) {
    const auto& g = need_algebra(d);
    const auto v = validate(g);
    if (!v.ok) throw Error(ErrorKind::Precondition, v.jacobi_failure ? "Jacobi identity fails" : "algebra is not nilpotent");
    const std::size_t k = std::min(max_degree.value_or(g.dim()), g.dim());
    if (max_degree && *max_degree > g.dim()) warn(r, "max degree clipped to the dimension");
    r.payload["results"]["dim"] = g.dim();
    r.payload["results"]["max_degree"] = k;
    r.payload["results"]["betti"] = cohomology_dims(g, k);
  });
}

Report cmd_torus_adim(const std::string& file, std::size_t radius) {
  return guarded("torus-adim", file, [&](Report& r, const io::Document& d) {
    if (!d.torus) throw Error(ErrorKind::Parse, "document: no torus (\"tau\", \"X\" or \"J4\") given");
    const auto& t = *d.torus;
    PeriodTau tau;
    switch (t.kind) {
      case io::TorusInput::Kind::Tau: tau = PeriodTau(t.matrix); break;
      case io::TorusInput::Kind::X: tau = tau_from_J(J_from_X(t.matrix)); break;
      case io::TorusInput::Kind::J4: tau = tau_from_J(TorusJ(t.j4)); break;
    }
    const auto a = algebraic_dimension(tau, radius);
    r.payload["results"] = torus_json(tau, J_from_tau(tau), a);
    if (!a.exact) warn(r, "no certificate reaching the upper bound within the radius; a is a lower bound");
  });
}

Report cmd_iwasawa_adim(const std::string& x_file, std::size_t radius) {
  return guarded("iwasawa-adim", x_file, [&](Report& r, const io::Document& d) {
    if (!d.torus || d.torus->kind != io::TorusInput::Kind::X) throw Error(ErrorKind::Parse, "document: no \"X\" given");
    const auto res = iwasawa_algebraic_dimension(d.torus->matrix, radius);
    const auto entry = iwasawa();
    const auto bound = invariant_report(entry.algebra, entry.J).alg_dim_upper_bound;
    r.payload["results"] = torus_json(res.tau, res.base, res.adim);
    r.payload["results"]["X"] = io::encode(d.torus->matrix);
    r.payload["results"]["iwasawa_bound"] = bound;
    r.payload["results"]["strictly_below_bound"] = res.adim.value < bound;
    if (!res.admissible) warn(r, "X is not of the form (0, *; 0, 0); the base torus is computed from the general recipe");
    if (!res.adim.exact) warn(r, "no certificate reaching the upper bound within the radius; a is a lower bound");
  });
}

json catalog_document(const std::string& name, const std::string& params) {
  const auto p = parse_params(params);
  for (const auto& preset : torus_presets()) {
    if (preset.name != name) continue;
    if (!p.empty()) throw Error(ErrorKind::Parameter, "torus presets take no parameters");
    return json{{"X", io::encode(preset.X)},
                {"catalog", json{{"name", name}, {"expected", json{{"a", preset.expected_a}}}}}};
  }
  const auto e = lookup(name, p);
  json doc = io::encode_algebra(e.algebra);
  doc["J"] = io::encode(e.J.matrix());
  json meta{{"name", e.name},
            {"family", family_name(e.family)},
            {"params", params_json(p)},
            {"expected", expected_json(e.expected)}};
  json w = json::array();
  for (const auto& s : e.warnings) w.push_back(s);
  meta["warnings"] = std::move(w);
  doc["catalog"] = std::move(meta);
  return doc;
}

std::string render_text(const json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of nilmanifolds with invariant complex structures"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print the report as JSON");

  std::string file;
  auto* check = app.add_subcommand("check", "validate an algebra and complex structure");
  check->add_option("FILE", file, "input document")->required();
  auto* inv = app.add_subcommand("invariants", "h1Dim, bounds, Albanese data and witness forms");
  inv->add_option("FILE", file, "input document")->required();
  std::optional<std::size_t> max_degree;
  auto* coh = app.add_subcommand("cohomology", "Betti numbers of the Chevalley complex");
  coh->add_option("FILE", file, "input document")->required();
  coh->add_option("--max-degree", max_degree, "highest degree");
  std::size_t radius = 5;
  auto* tor = app.add_subcommand("torus-adim", "algebraic dimension of a complex 2-torus");
  tor->add_option("FILE", file, "torus document")->required();
  tor->add_option("--radius", radius, "coordinate bound for the NS search")->capture_default_str();
  auto* iwa = app.add_subcommand("iwasawa-adim", "algebraic dimension of a deformed Iwasawa manifold");
  iwa->add_option("--x", file, "document with the 2x2 matrix X")->required();
  iwa->add_option("--radius", radius, "coordinate bound for the NS search")->capture_default_str();
  std::string name, params;
  auto* cat = app.add_subcommand("catalog", "print a built-in example ('list' for names)");
  cat->add_option("NAME", name, "entry name")->required();
  cat->add_option("--params", params, "JSON object or file with parameters");
  for (auto* sub : {check, inv, coh, tor, iwa, cat}) sub->add_flag("--json", as_json, "print the report as JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }

  Report r;
  if (*check) r = cmd_check(file);
  if (*inv) r = cmd_invariants(file);
  if (*coh) r = cmd_cohomology(file, max_degree);
  if (*tor) r = cmd_torus_adim(file, radius);
  if (*iwa) r = cmd_iwasawa_adim(file, radius);
  if (*cat) {
    if (name == "list") {
      json names = catalog_names();
      for (const auto& p : torus_presets()) names.push_back(p.name);
      if (as_json) {
        out << json{{"entries", names}}.dump(2) << "\n";
      } else {
        for (const auto& n : names) out << n.get<std::string>() << "\n";
      }
      return 0;
    }
    try {
      const auto doc = catalog_document(name, params);
      if (doc.contains("catalog") && doc["catalog"].contains("warnings"))
        for (const auto& w : doc["catalog"]["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
      out << (as_json ? doc.dump(2) + "\n" : render_text(doc));
      return 0;
    } catch (const Error& e) {
      err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
      return 1;
    }
  }
  emit(r, as_json, out);
  return r.ok ? 0 : 1;
}

}  // namespace nilalg::cli
