#include "oddq/json_io.hpp"

#include <json.hpp>

namespace oddq {

using nlohmann::json;

namespace {

json scalar_json(const Scalar& s) {
  if (s.is_rational()) return to_string(s.base());
  json out;
  out["a"] = to_string(s.base());
  out["b"] = to_string(s.rad());
  out["d"] = to_string(s.radicand());
  return out;
}

Scalar scalar_from(const json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (j.is_object()) {
    auto field = [&](const char* k) {
      if (!j.contains(k)) throw ParseError("quadratic scalar needs fields a, b, d");
      return parse_rational(j.at(k).get<std::string>());
    };
    return Scalar(field("a"), field("b"), field("d"));
  }
  throw ParseError("scalar must be a string or an {a,b,d} object");
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

}  // namespace

std::string scalar_to_json(const Scalar& s) { return scalar_json(s).dump(); }

Scalar scalar_from_json(const std::string& text) { return scalar_from(parse_text(text)); }

Document load_document(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("even") || !j.contains("odd"))
    throw ParseError("document needs 'even' and 'odd' name lists");
  std::vector<std::string> even = j.at("even").get<std::vector<std::string>>();
  std::vector<std::string> odd = j.at("odd").get<std::vector<std::string>>();
  SuperAlgebra alg(even, odd);
  if (j.contains("brackets")) {
    for (const json& entry : j.at("brackets")) {
      std::string x = entry.at("x").get<std::string>();
      std::string y = entry.at("y").get<std::string>();
      std::vector<std::pair<std::string, Scalar>> value;
      for (auto it = entry.at("value").begin(); it != entry.at("value").end(); ++it)
        value.emplace_back(it.key(), scalar_from(it.value()));
      try {
        alg.set_bracket(x, y, value);
      } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " (bracket [" + x + "," + y + "])");
      }
    }
  }
  Document doc{std::move(alg), std::nullopt};
  if (j.contains("form")) {
    OddForm B(doc.algebra.n_even(), doc.algebra.m_odd());
    for (const json& entry : j.at("form")) {
      std::string x = entry.at("even").get<std::string>();
      std::string o = entry.at("odd").get<std::string>();
      auto i = doc.algebra.index_of(x);
      auto jdx = doc.algebra.index_of(o);
      if (!i || *i >= doc.algebra.n_even())
        throw ParseError("form entry names unknown even vector '" + x + "'");
      if (!jdx || *jdx < doc.algebra.n_even())
        throw ParseError("form entry names unknown odd vector '" + o + "'");
      B.pairing().at(*i, *jdx - doc.algebra.n_even()) = scalar_from(entry.at("value"));
    }
    doc.form = std::move(B);
  }
  return doc;
}

std::string save_document(const SuperAlgebra& alg, const OddForm* form) {
  json j;
  j["even"] = json::array();
  j["odd"] = json::array();
  for (std::size_t i = 0; i < alg.n_even(); ++i) j["even"].push_back(alg.name(i));
  for (std::size_t i = alg.n_even(); i < alg.dim(); ++i) j["odd"].push_back(alg.name(i));
  j["brackets"] = json::array();
  for (const auto& [pair, value] : alg.table()) {
    json entry;
    entry["x"] = alg.name(pair.first);
    entry["y"] = alg.name(pair.second);
    json val = json::object();
    for (std::size_t k = 0; k < value.size(); ++k)
      if (!value[k].is_zero()) val[alg.name(k)] = scalar_json(value[k]);
    entry["value"] = val;
    j["brackets"].push_back(entry);
  }
  if (form) {
    j["form"] = json::array();
    for (std::size_t i = 0; i < alg.n_even(); ++i)
      for (std::size_t o = 0; o < alg.m_odd(); ++o) {
        const Scalar& v = form->pairing().at(i, o);
        if (v.is_zero()) continue;
        json entry;
        entry["even"] = alg.name(i);
        entry["odd"] = alg.name(alg.n_even() + o);
        entry["value"] = scalar_json(v);
        j["form"].push_back(entry);
      }
  }
  return j.dump(2);
}

ExtensionData load_extension_data(const std::string& text, const SuperAlgebra& alg) {
  json j = parse_text(text);
  std::size_t n = alg.n_even(), m = alg.m_odd();
  ExtensionData data{OddDerivation(n, m), Vec(alg.dim()), Scalar(0)};
  if (j.contains("D")) {
    for (auto it = j.at("D").begin(); it != j.at("D").end(); ++it) {
      auto in = alg.index_of(it.key());
      if (!in) throw ParseError("derivation names unknown vector '" + it.key() + "'");
      for (auto out = it.value().begin(); out != it.value().end(); ++out) {
        auto oidx = alg.index_of(out.key());
        if (!oidx) throw ParseError("derivation names unknown vector '" + out.key() + "'");
        Scalar v = scalar_from(out.value());
        bool in_even = *in < n, out_even = *oidx < n;
        if (in_even == out_even)
          throw ParseError("derivation entry does not reverse parity: " + it.key() + " -> " +
                           out.key());
        if (in_even)
          data.D.even_to_odd().at(*oidx - n, *in) = v;
        else
          data.D.odd_to_even().at(*oidx, *in - n) = v;
      }
    }
  }
  if (j.contains("X0"))
    for (auto it = j.at("X0").begin(); it != j.at("X0").end(); ++it) {
      auto idx = alg.index_of(it.key());
      if (!idx) throw ParseError("X0 names unknown vector '" + it.key() + "'");
      data.X0[*idx] = scalar_from(it.value());
    }
  if (j.contains("lambda0")) data.lambda0 = scalar_from(j.at("lambda0"));
  return data;
}

std::string save_extension_data(const SuperAlgebra& alg, const ExtensionData& data) {
  json j;
  json D = json::object();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Vec img = data.D.apply_basis(i);
    json row = json::object();
    for (std::size_t k = 0; k < img.size(); ++k)
      if (!img[k].is_zero()) row[alg.name(k)] = scalar_json(img[k]);
    if (!row.empty()) D[alg.name(i)] = row;
  }
  j["D"] = D;
  json X0 = json::object();
  for (std::size_t k = 0; k < data.X0.size(); ++k)
    if (!data.X0[k].is_zero()) X0[alg.name(k)] = scalar_json(data.X0[k]);
  j["X0"] = X0;
  j["lambda0"] = scalar_json(data.lambda0);
  return j.dump(2);
}

}  // namespace oddq
