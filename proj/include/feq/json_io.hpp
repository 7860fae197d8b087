#pragma once

#include <fstream>

#include <json.hpp>

#include "feq/classify.hpp"

namespace feq {

using nlohmann::json;

/// Malformed or inconsistent input file; maps to exit code 2 in the CLI.
struct BadInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- scalars -----------------------------------------------------------

inline json scalar_to_json(const Scalar& v) {
  if (v.is_zero()) return json("zero");
  if (v.is_rational_complex())
    return json{{"re", rat_to_string(v.re_rational())}, {"im", rat_to_string(v.im_rational())}};
  json terms = json::array();
  for (const auto& t : v.terms())
    terms.push_back(json{{"coef", json::array({rat_to_string(t.coef), "0"})}, {"exp", t.exp.str()}});
  return json{{"rou", std::move(terms)}};
}

inline Frac frac_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Frac(std::stoll(s), 1);
    return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw BadInputError("bad exponent fraction: '" + s + "'");
  }
}

/// Exact scalar forms: "zero" | {"re","im" as strings} | {"rou": [...]}.
inline Scalar scalar_from_json(const json& j) {
  try {
    if (j.is_string()) {
      if (j.get<std::string>() == "zero") return Scalar::zero();
      throw BadInputError("unknown scalar keyword: " + j.get<std::string>());
    }
    if (j.is_number_integer()) return Scalar::from_int(j.get<long long>());
    if (j.is_object() && j.contains("rou")) {
      Scalar v;
      for (const auto& t : j.at("rou")) {
        const auto& coef = t.at("coef");
        const Frac e = frac_from_string(t.at("exp").get<std::string>());
        v += Scalar::rou_term(rat_from_string(coef.at(0).get<std::string>()),
                              rat_from_string(coef.at(1).get<std::string>()), e.num, e.den);
      }
      return v;
    }
    if (j.is_object() && j.contains("re")) {
      const auto part = [&](const char* key) -> Rat {
        if (!j.contains(key)) return Rat(0);
        const auto& p = j.at(key);
        if (p.is_string()) return rat_from_string(p.get<std::string>());
        if (p.is_number_integer()) return Rat(p.get<long long>());
        throw BadInputError(std::string("exact scalar parts must be strings: ") + key);
      };
      return Scalar::rational(part("re"), part("im"));
    }
  } catch (const BadInputError&) {
    throw;
  } catch (const std::exception& e) {
    throw BadInputError(std::string("bad scalar: ") + e.what());
  }
  throw BadInputError("unrecognized scalar encoding: " + j.dump());
}

/// Accepts exact scalar forms and, additionally, {"re","im"} with JSON
/// numbers for float-only data such as oracle output.
struct ParsedValue {
  std::optional<Scalar> exact;
  Cx value;
};

inline ParsedValue value_from_json(const json& j) {
  if (j.is_object() && j.contains("re") && j.at("re").is_number_float()) {
    return {std::nullopt,
            Cx{j.at("re").get<double>(), j.contains("im") ? j.at("im").get<double>() : 0.0}};
  }
  if (j.is_object() && j.contains("im") && j.at("im").is_number_float()) {
    return {std::nullopt,
            Cx{j.contains("re") ? j.at("re").get<double>() : 0.0, j.at("im").get<double>()}};
  }
  Scalar s = scalar_from_json(j);
  return {s, s.to_complex()};
}

inline json cx_to_json(const Cx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// --- functions ----------------------------------------------------------

inline json cfun_to_json(const CFun& f) {
  json a = json::array();
  for (const auto& v : f) a.push_back(scalar_to_json(v));
  return a;
}

inline CFun cfun_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw BadInputError("function array must have one scalar per element");
  CFun f;
  for (const auto& v : j) f.push_back(scalar_from_json(v));
  return f;
}

inline json vecc_to_json(const VecC& f) {
  json a = json::array();
  for (const auto& v : f) a.push_back(cx_to_json(v));
  return a;
}

struct ParsedFun {
  std::optional<CFun> exact;
  VecC values;
};

inline ParsedFun fun_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw BadInputError("function array must have one value per element");
  ParsedFun r;
  CFun exact;
  bool all_exact = true;
  for (const auto& v : j) {
    ParsedValue p = value_from_json(v);
    r.values.push_back(p.value);
    if (p.exact && all_exact)
      exact.push_back(*p.exact);
    else
      all_exact = false;
  }
  if (all_exact) r.exact = std::move(exact);
  return r;
}

// --- semigroups, contexts ------------------------------------------------

inline json semigroup_to_json(const FiniteSemigroup& s) {
  json j{{"name", s.name()}, {"order", s.order()}, {"table", s.table()}};
  if (!s.labels().empty()) j["labels"] = s.labels();
  return j;
}

inline FiniteSemigroup semigroup_from_json(const json& j) {
  try {
    const int n = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n) throw BadInputError("table size does not match order");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::string name = j.value("name", std::string{});
    return FiniteSemigroup(std::move(table), std::move(labels), std::move(name));
  } catch (const NonAssociativeError&) {
    throw;  // keeps the witness triple in the message
  } catch (const BadInputError&) {
    throw;
  } catch (const std::exception& e) {
    throw BadInputError(std::string("bad semigroup: ") + e.what());
  }
}

inline json context_to_json(const Context& ctx) {
  return json{{"schema", 1},
              {"semigroup", semigroup_to_json(ctx.s)},
              {"sigma", ctx.sigma.perm},
              {"mu", cfun_to_json(ctx.mu.values)}};
}

inline Context context_from_json(const json& j) {
  try {
    FiniteSemigroup s = semigroup_from_json(j.at("semigroup"));
    auto perm = j.at("sigma").get<std::vector<int>>();
    CFun mu = j.contains("mu") ? cfun_from_json(j.at("mu"), s.order())
                               : cfun_const(s.order(), Scalar::one());
    return Context(std::move(s), {std::move(perm)}, {std::move(mu)});
  } catch (const NonAssociativeError&) {
    throw;
  } catch (const BadInputError&) {
    throw;
  } catch (const std::exception& e) {
    throw BadInputError(std::string("bad context: ") + e.what());
  }
}

// --- sets and reports -----------------------------------------------------

inline json elementset_to_json(const ElementSet& s) { return json(s.to_vector()); }

inline json chi_structure_to_json(const ChiIdealStructure& st) {
  return json{{"i_chi", elementset_to_json(st.i_chi)},
              {"i_chi_sq", elementset_to_json(st.i_chi_sq)},
              {"i_minus_sq", elementset_to_json(st.i_minus_sq)},
              {"p_chi", elementset_to_json(st.p_chi)}};
}

inline json compat_report_to_json(const FiniteSemigroup& s, const CompatibilityReport& rep) {
  json ideals = json::array();
  for (const auto& entry : rep.prime_ideal_entries) {
    json witnesses = json::object();
    for (const auto& [q, w] : entry.witnesses)
      witnesses[s.label(q)] = w ? json(s.label(*w)) : json(nullptr);
    ideals.push_back(json{{"ideal", elementset_to_json(entry.ideal)},
                          {"witnesses", std::move(witnesses)},
                          {"satisfied", entry.satisfied}});
  }
  return json{{"s2_equals_s", rep.s2_equals_s},
              {"prime_ideals", std::move(ideals)},
              {"compatible", rep.compatible}};
}

// --- descriptors ------------------------------------------------------------

struct ParsedDescriptor {
  std::optional<DescriptorE1> e1;
  std::optional<DescriptorE2> e2;
};

inline ParsedDescriptor descriptor_from_json(const json& j, int n) {
  try {
    const std::string fam = j.at("family").get<std::string>();
    const auto fun = [&](const char* key) { return cfun_from_json(j.at(key), n); };
    const auto fun_or_zero = [&](const char* key) {
      return j.contains(key) ? cfun_from_json(j.at(key), n) : cfun_zero(n);
    };
    const auto scalar_or = [&](const char* key, Scalar dflt) {
      return j.contains(key) ? scalar_from_json(j.at(key)) : dflt;
    };
    ParsedDescriptor out;
    if (fam == "G1" || fam == "G2") {
      DescriptorE1 d{fam == "G1" ? E1Tag::G1 : E1Tag::G2};
      d.theta = fun_or_zero("theta");
      if (j.contains(fam == "G1" ? "h" : "g")) d.free_fn = fun(fam == "G1" ? "h" : "g");
      out.e1 = std::move(d);
    } else if (fam == "G3") {
      DescriptorE1 d{E1Tag::G3};
      d.theta = fun_or_zero("theta");
      d.chi = fun("chi");
      d.alpha = scalar_or("alpha", Scalar::zero());
      d.beta = scalar_or("beta", Scalar::zero());
      out.e1 = std::move(d);
    } else if (fam == "G4") {
      DescriptorE1 d{E1Tag::G4};
      d.theta = fun_or_zero("theta");
      d.chi = fun("chi");
      d.alpha = scalar_or("alpha", Scalar::zero());
      d.beta = scalar_or("beta", Scalar::zero());
      d.a_fn = fun("A");
      out.e1 = std::move(d);
    } else if (fam == "F1") {
      DescriptorE2 d{E2Tag::F1};
      d.k = fun("k");
      d.c = scalar_or("c", Scalar::zero());
      out.e2 = std::move(d);
    } else if (fam == "F2") {
      DescriptorE2 d{E2Tag::F2};
      d.chi = fun("chi");
      d.c1 = scalar_or("c1", Scalar::one());
      d.c2 = scalar_or("c2", Scalar::zero());
      out.e2 = std::move(d);
    } else if (fam == "F3") {
      DescriptorE2 d{E2Tag::F3};
      d.chi = fun("chi");
      d.a_fn = fun("A");
      d.rho = fun_or_zero("rho");
      d.c = scalar_or("c", Scalar::zero());
      out.e2 = std::move(d);
    } else {
      throw BadInputError("unknown family tag: " + fam);
    }
    return out;
  } catch (const BadInputError&) {
    throw;
  } catch (const std::exception& e) {
    throw BadInputError(std::string("bad descriptor: ") + e.what());
  }
}

// --- files -------------------------------------------------------------------

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw BadInputError(path + ": " + e.what());
  }
}

/// Writes via a temp file + rename so readers never observe partial output.
inline void write_json_atomic(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << j.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename to " + path);
}

}  // namespace feq
