// Command-line front end: verify, analyze, extend, decompose, derivations,
// catalog, classify, search. Exit codes: 0 all checks pass, 1 verification
// failure, 2 bad input, 3 internal inconsistency.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "oddq/catalog.hpp"
#include "oddq/classify.hpp"
#include "oddq/extension.hpp"
#include "oddq/json_io.hpp"
#include "oddq/search.hpp"

using nlohmann::json;
using namespace oddq;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text << "\n";
}

json fingerprint_json(const Fingerprint& fp) {
  json j;
  j["center"] = {{"total", fp.center_total}, {"even", fp.center_even}, {"odd", fp.center_odd}};
  j["series"] = fp.series_full;
  j["series_even"] = fp.series_even;
  j["odd_odd_rank"] = fp.odd_odd_rank;
  j["chain_dims"] = fp.chain_dims;
  return j;
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(json::parse(scalar_to_json(m.at(i, j))));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const SuperAlgebra& alg, const Vec& v) {
  json out = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[alg.name(k)] = json::parse(scalar_to_json(v[k]));
  return out;
}

json witness_json(const SuperAlgebra& ambient, const ExtensionWitness& w) {
  json j;
  j["embedding"] = matrix_json(w.embedding);
  j["e"] = vector_json(ambient, w.e_image);
  j["e_star"] = vector_json(ambient, w.estar_image);
  return j;
}

int run_verify(const std::string& path, bool emit_json) {
  Document doc = load_document(read_file(path));
  auto violations = doc.algebra.super_jacobi_violations();
  bool jacobi_ok = violations.empty();
  bool quadratic_ok = true;
  std::optional<QuadraticCertificate> cert;
  if (doc.form) {
    cert = verify_odd_quadratic(doc.algebra, *doc.form);
    quadratic_ok = cert->passed();
  }
  if (emit_json) {
    json j;
    j["jacobi"] = {{"ok", jacobi_ok}, {"violations", violations.size()}};
    if (cert) {
      j["odd_quadratic"] = {{"ok", cert->passed()},
                            {"invariant", cert->invariant},
                            {"nondegenerate", cert->nondegenerate},
                            {"violations", cert->violation_count}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "jacobi: " << (jacobi_ok ? "ok" : "FAIL") << "\n";
    if (!jacobi_ok)
      for (const auto& v : violations) {
        std::cout << "  triple (" << doc.algebra.name(v.triple[0]) << ","
                  << doc.algebra.name(v.triple[1]) << "," << doc.algebra.name(v.triple[2])
                  << "): residual " << doc.algebra.format_vector(v.residual) << "\n";
        break;
      }
    if (cert) {
      std::cout << "odd-quadratic: " << (cert->passed() ? "ok" : "FAIL");
      if (!cert->invariant) std::cout << " (invariance violated " << cert->violation_count << "x)";
      if (!cert->nondegenerate) std::cout << " (degenerate pairing)";
      std::cout << "\n";
    } else {
      std::cout << "odd-quadratic: no form in document, skipped\n";
    }
  }
  return (jacobi_ok && quadratic_ok) ? 0 : 1;
}

int run_analyze(const std::string& path, bool emit_json) {
  Document doc = load_document(read_file(path));
  const SuperAlgebra& alg = doc.algebra;
  Subspace z = alg.center();
  auto [ze, zo] = alg.graded_parts(z);
  Fingerprint fp = fingerprint(alg);
  WeakFiliformResult wf = alg.m_odd() > 0 ? detect_weak_filiform(alg) : WeakFiliformResult{};

  if (emit_json) {
    json j;
    j["dims"] = {{"even", alg.n_even()}, {"odd", alg.m_odd()}};
    j["fingerprint"] = fingerprint_json(fp);
    j["nilpotent"] = {{"full", alg.is_nilpotent(false)}, {"even", alg.is_nilpotent(true)}};
    j["weak_filiform"] = wf.found();
    if (wf.found()) {
      json flag;
      flag["m"] = wf.flag->m;
      flag["u2"] = alg.format_vector(lift_odd(alg, wf.flag->u2));
      flag["v2"] = alg.format_vector(lift_odd(alg, wf.flag->v2));
      json reps = json::array();
      for (std::size_t i = 3; i <= wf.flag->m; ++i)
        reps.push_back(alg.format_vector(lift_odd(alg, wf.flag->rep(i))));
      flag["representatives"] = reps;
      j["flag"] = flag;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dimensions: " << alg.n_even() << " even + " << alg.m_odd() << " odd\n";
  std::cout << "center: " << z.dim() << " (" << ze.dim() << " even, " << zo.dim() << " odd)\n";
  auto dims = [](const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
  };
  std::cout << "lower central series: " << dims(fp.series_full) << ", even part "
            << dims(fp.series_even) << "\n";
  std::cout << "nilpotent: " << (alg.is_nilpotent(false) ? "yes" : "no") << " (even part "
            << (alg.is_nilpotent(true) ? "yes" : "no") << ")\n";
  if (alg.m_odd() > 0) std::cout << "bracket chain dims: " << dims(fp.chain_dims) << "\n";
  std::cout << "odd-odd bracket rank: " << fp.odd_odd_rank << "\n";
  if (wf.found()) {
    std::cout << "weak filiform: yes, m = " << wf.flag->m << "\n";
    std::cout << "  u2 = " << alg.format_vector(lift_odd(alg, wf.flag->u2)) << ", v2 = "
              << alg.format_vector(lift_odd(alg, wf.flag->v2)) << "\n";
    for (std::size_t i = 3; i <= wf.flag->m; ++i)
      std::cout << "  e" << i << " = " << alg.format_vector(lift_odd(alg, wf.flag->rep(i)))
                << "\n";
  } else {
    std::cout << "weak filiform: no\n";
  }
  if (doc.form) {
    auto cert = verify_odd_quadratic(alg, *doc.form);
    std::cout << "odd-quadratic: " << (cert.passed() ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_extend(const std::string& path, const std::string& data_path, const std::string& out) {
  Document doc = load_document(read_file(path));
  if (!doc.form) throw ParseError("extension requires a form in the document");
  ExtensionData data = load_extension_data(read_file(data_path), doc.algebra);
  ExtensionResult res = generalized_odd_double_extension(doc.algebra, *doc.form, data);
  write_output(out, save_document(res.algebra, &res.form));
  std::cerr << "extended to dimension " << res.algebra.dim() << "; e -> "
            << res.algebra.format_vector(res.witness.e_image) << ", e* -> "
            << res.algebra.format_vector(res.witness.estar_image) << "\n";
  return 0;
}

int run_decompose(const std::string& path, const std::string& out_base,
                  const std::string& out_data) {
  Document doc = load_document(read_file(path));
  if (!doc.form) throw ParseError("decomposition requires a form in the document");
  auto wf = detect_weak_filiform(doc.algebra);
  if (!wf.found()) {
    std::cerr << "input is not of weak filiform type\n";
    return 1;
  }
  DecompositionResult res = decompose_weak_filiform(doc.algebra, *doc.form, *wf.flag);
  write_output(out_base, save_document(res.base, &res.base_form));
  write_output(out_data, save_extension_data(res.base, res.data));
  std::cerr << "base dimension " << res.base.dim() << "; e = "
            << doc.algebra.format_vector(res.witness.e_image) << ", e* = "
            << doc.algebra.format_vector(res.witness.estar_image) << "\n";
  return 0;
}

int run_derivations(const std::string& path, bool emit_json) {
  Document doc = load_document(read_file(path));
  if (!doc.form) throw ParseError("the derivation solver requires a form in the document");
  auto basis = solve_odd_skew_derivations(doc.algebra, *doc.form);
  if (emit_json) {
    json j = json::array();
    for (const auto& D : basis) {
      json entry = json::object();
      for (std::size_t i = 0; i < doc.algebra.dim(); ++i) {
        Vec img = D.apply_basis(i);
        json row = json::object();
        for (std::size_t k = 0; k < img.size(); ++k)
          if (!img[k].is_zero()) row[doc.algebra.name(k)] = scalar_to_json(img[k]);
        if (!row.empty()) entry[doc.algebra.name(i)] = row;
      }
      j.push_back(entry);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "odd skew derivation space dimension: " << basis.size() << "\n";
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::cout << "D" << b + 1 << ":";
    bool any = false;
    for (std::size_t i = 0; i < doc.algebra.dim(); ++i) {
      Vec img = basis[b].apply_basis(i);
      if (is_zero(img)) continue;
      std::cout << (any ? ", " : " ") << doc.algebra.name(i) << " -> "
                << doc.algebra.format_vector(img);
      any = true;
    }
    std::cout << (any ? "" : " 0") << "\n";
  }
  return 0;
}

int run_catalog(const std::string& action, const std::string& key_text, const std::string& out) {
  if (action == "list") {
    for (const auto& k : catalog_keys()) std::cout << k << "\n";
    return 0;
  }
  CatalogEntry entry = build(CatalogKey::parse(key_text));
  write_output(out, save_document(entry.algebra, entry.form ? &*entry.form : nullptr));
  return 0;
}

int run_classify(int dim, bool emit_json) {
  ClassifyResult res = classify_dimension(dim);
  if (emit_json) {
    json j;
    j["classes"] = json::array();
    for (const auto& c : res.classes) {
      json e;
      e["label"] = c.label;
      e["algebra"] = json::parse(save_document(c.algebra, &c.form));
      e["fingerprint"] = fingerprint_json(c.fp);
      j["classes"].push_back(e);
    }
    auto rows_json = [&](const std::vector<AuditRow>& rows) {
      json arr = json::array();
      for (const auto& r : rows) {
        json e;
        e["triple"] = {r.triple[0], r.triple[1], r.triple[2]};
        json cs = json::array();
        for (const auto& p : r.constraints) cs.push_back(p.str(res.var_names));
        e["constraints"] = cs;
        arr.push_back(e);
      }
      return arr;
    };
    j["jacobi_table"] = rows_json(res.jacobi_rows);
    j["invariance_table"] = rows_json(res.invariance_rows);
    j["log"] = res.log;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "classification in total dimension " << dim << "\n\n";
  for (const auto& line : res.log) std::cout << "  . " << line << "\n";
  auto print_rows = [&](const char* title, const std::vector<AuditRow>& rows) {
    std::cout << "\n" << title << "\n";
    for (const auto& r : rows) {
      std::cout << "  {" << r.triple[0] << "," << r.triple[1] << "," << r.triple[2] << "}  |  ";
      for (std::size_t i = 0; i < r.constraints.size(); ++i)
        std::cout << (i ? ";  " : "") << r.constraints[i].str(res.var_names) << " = 0";
      std::cout << "\n";
    }
  };
  print_rows("bracket constraint table (triple | consequence)", res.jacobi_rows);
  print_rows("invariance constraint table (triple | relationship)", res.invariance_rows);
  std::cout << "\nclasses: " << res.classes.size() << "\n";
  for (const auto& c : res.classes)
    std::cout << "  " << c.label << ": " << c.fp.str() << "\n";
  return 0;
}

int run_search(std::size_t n_even, const std::string& grid_text, bool include_odd_odd,
               bool emit_json) {
  std::vector<Rational> grid;
  std::string cur;
  for (char c : grid_text + ",") {
    if (c == ',') {
      if (!cur.empty()) grid.push_back(parse_rational(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  SearchReport report = small_search_nonexistence(n_even, grid, include_odd_odd);
  if (emit_json) {
    json j;
    j["assignments_scanned"] = report.assignments_scanned;
    j["action_survivors"] = report.action_survivors;
    j["hits"] = json::array();
    for (const auto& h : report.hits) {
      json e;
      e["abelian"] = h.abelian;
      e["description"] = h.description;
      e["algebra"] = json::parse(save_document(h.algebra, &h.form));
      j["hits"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "scanned " << report.assignments_scanned << " assignments, "
              << report.action_survivors << " action survivors, " << report.hits.size()
              << " hits\n";
    for (const auto& h : report.hits)
      std::cout << "  " << (h.abelian ? "[abelian] " : "[non-abelian] ") << h.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant computations for Lie superalgebras with odd "
               "invariant pairings"};
  app.require_subcommand(1);

  std::string path, data_path, out = "-", out_base = "-", out_data = "-";
  std::string key_text, catalog_action, grid = "-1,0,1";
  bool emit_json = false;
  int dim = 6;
  std::size_t n_even = 1;
  bool include_odd_odd = false;

  auto* verify = app.add_subcommand("verify", "graded Jacobi + odd-quadratic certificates");
  verify->add_option("input", path)->required();
  verify->add_flag("--emit-json", emit_json);

  auto* analyze = app.add_subcommand("analyze", "center, series, chain, flag, fingerprint");
  analyze->add_option("input", path)->required();
  analyze->add_flag("--emit-json", emit_json);

  auto* extend = app.add_subcommand("extend", "generalized odd double extension");
  extend->add_option("input", path)->required();
  extend->add_option("--data", data_path, "extension datum JSON")->required();
  extend->add_option("--out", out);

  auto* decompose = app.add_subcommand("decompose", "inverse double extension");
  decompose->add_option("input", path)->required();
  decompose->add_option("--out-base", out_base);
  decompose->add_option("--out-data", out_data);

  auto* derivations = app.add_subcommand("derivations", "odd skew derivation space");
  derivations->add_option("input", path)->required();
  derivations->add_flag("--emit-json", emit_json);

  auto* catalog = app.add_subcommand("catalog", "built-in fixtures");
  catalog->add_option("action", catalog_action, "list | emit")->required();
  catalog->add_option("key", key_text);
  catalog->add_option("--out", out);

  auto* classify = app.add_subcommand("classify", "constraint-table classification");
  classify->add_option("--dim", dim)->check(CLI::IsMember({6, 8}))->required();
  classify->add_flag("--emit-json", emit_json);

  auto* search = app.add_subcommand("search", "grid search for filiform odd-quadratic structures");
  search->add_option("--n-even", n_even)->check(CLI::IsMember({1, 2, 3}))->required();
  search->add_option("--grid", grid);
  search->add_flag("--include-odd-odd", include_odd_odd);
  search->add_flag("--emit-json", emit_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(path, emit_json);
    if (*analyze) return run_analyze(path, emit_json);
    if (*extend) return run_extend(path, data_path, out);
    if (*decompose) return run_decompose(path, out_base, out_data);
    if (*derivations) return run_derivations(path, emit_json);
    if (*catalog) {
      if (catalog_action == "emit" && key_text.empty())
        throw ParseError("catalog emit needs a key");
      return run_catalog(catalog_action, key_text, out);
    }
    if (*classify) return run_classify(dim, emit_json);
    if (*search) return run_search(n_even, grid, include_odd_odd, emit_json);
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
