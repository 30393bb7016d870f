#include "downup/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "downup/json_io.hpp"
#include "downup/parser.hpp"

namespace downup::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep = ',') {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

NumberField parse_field_option(const std::string& spec) {
  if (spec.empty()) return NumberField();
  std::string minpoly, name = "t";
  for (const auto& part : split_top(spec)) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--field: expected key=value, got '" + part + "'");
    std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "minpoly")
      minpoly = value;
    else if (key == "name")
      name = value;
    else
      throw UsageError("--field: unknown key '" + key + "'");
  }
  if (minpoly.empty()) throw UsageError("--field: missing minpoly=...");
  return NumberField::make(parse_qpoly(minpoly, name), name);
}

Params parse_params_option(const NumberField& K, const std::string& flag, const std::string& text) {
  auto parts = split_top(text);
  if (parts.size() != 3) throw UsageError(flag + ": expected alpha,beta,gamma");
  return Params::make(parse_field_element(K, parts[0]), parse_field_element(K, parts[1]),
                      parse_field_element(K, parts[2]));
}

Point parse_point(const NumberField& K, const std::string& flag, const std::string& text) {
  auto parts = split_top(text);
  if (parts.size() != 2) throw UsageError(flag + ": expected a,b");
  return {parse_field_element(K, parts[0]), parse_field_element(K, parts[1])};
}

std::string read_source(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

FDModule read_module(const std::string& path, std::istream& in) {
  return module_from_json(Json::parse(read_source(path, in)));
}

// simple:L | verma:L:n | orbit:a,b | file:PATH
FDModule module_from_spec(const Params& p, const std::string& flag, const std::string& spec, int bound,
                          std::istream& in) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError(flag + ": expected simple:L, verma:L:n, orbit:a,b or file:PATH");
  std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  const NumberField& K = p.field();
  if (kind == "simple") return simple_module(p, parse_field_element(K, rest), bound);
  if (kind == "verma") {
    auto last = rest.rfind(':');
    if (last == std::string::npos) throw UsageError(flag + ": expected verma:L:n");
    int n = 0;
    try {
      n = std::stoi(rest.substr(last + 1));
    } catch (const std::exception&) {
      throw UsageError(flag + ": bad dimension in '" + spec + "'");
    }
    return verma_quotient(p, parse_field_element(K, rest.substr(0, last)), n);
  }
  if (kind == "orbit") {
    Point pt = parse_point(K, flag, rest);
    auto orbit = orbit_iterate(p, pt, bound);
    if (!orbit)
      throw Error(ErrorKind::NotAnOrbit, "the point does not return within " + std::to_string(bound) + " steps");
    return orbit_module(p, pt, *orbit);
  }
  if (kind == "file") {
    FDModule m = read_module(rest, in);
    require_same(m.params, p);
    return m;
  }
  throw UsageError(flag + ": unknown module kind '" + kind + "'");
}

// Indented key: value rendering of a JSON report.
void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_array())) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !flat(v))) {
        out << pad << k << ":\n";
        render(v, out, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render(v, out, indent + 2);
      } else {
        out << pad << "- " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

Json error_json(const Error& e) {
  Json j{{"error", std::string(kind_name(e.kind()))}, {"message", e.what()}};
  if (auto* ns = dynamic_cast<const FieldNotSplit*>(&e)) {
    Json poly = Json::array();
    for (const auto& c : ns->poly()) poly.push_back(to_json(c));
    j["adjoin"] = poly;
  } else if (auto* r = dynamic_cast<const Reducible*>(&e)) {
    j["factor"] = r->factor().to_string();
  } else if (auto* ev = dynamic_cast<const EigenvaluesNotInField*>(&e)) {
    j["factor"] = ev->factor().to_string();
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Noetherian down-up algebras A(alpha, beta, gamma)", "downup"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_spec;
  bool pretty = false;
  app.add_option("--field", field_spec, "Ground field, e.g. \"minpoly=t^2+t+1\" or \"minpoly=z^2+z+1,name=z\"")
      ->capture_default_str();
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::string params_text, expr, spelling = "xy", lambda_text, point_text, left, right, spec, input;
  int dim = 0, bound = 0, dim_bound = 5;
  bool dual = false;

  auto* nf = app.add_subcommand("nf", "Reduce an expression in d, u to graded normal form");
  nf->add_option("--params", params_text, "alpha,beta,gamma")->required();
  nf->add_option("--expr", expr, "Expression, or - to read stdin")->required();
  nf->add_option("--spelling", spelling, "Coefficient variables: xy or ud")->check(CLI::IsMember({"xy", "ud"}));

  auto* simples = app.add_subcommand("simples", "Highest weights of the simple modules of a given dimension");
  simples->add_option("--params", params_text, "alpha,beta,gamma")->required();
  simples->add_option("--dim", dim, "Dimension")->required()->check(CLI::PositiveNumber);

  auto* verma = app.add_subcommand("verma", "Zero indices of lambda_n, or a finite Verma quotient with --dim");
  verma->add_option("--params", params_text, "alpha,beta,gamma")->required();
  verma->add_option("--lambda", lambda_text, "Highest weight")->required();
  verma->add_option("--dim", dim, "Emit the quotient of this dimension")->check(CLI::PositiveNumber);
  verma->add_option("--bound", bound, "Search bound (default 64)")->check(CLI::PositiveNumber);

  auto* orbit = app.add_subcommand("orbit", "Orbit of a point under sigma, with the closed-form period");
  orbit->add_option("--params", params_text, "alpha,beta,gamma")->required();
  orbit->add_option("--point", point_text, "a,b for the ideal (x - a, y - b)")->required();
  orbit->add_option("--bound", bound, "Iteration bound (default 24)")->check(CLI::PositiveNumber);

  auto* module = app.add_subcommand("module", "Construct a module: simple:L, verma:L:n, orbit:a,b or file:PATH");
  module->add_option("--params", params_text, "alpha,beta,gamma")->required();
  module->add_option("--spec", spec, "Module description")->required();
  module->add_flag("--dual", dual, "Emit the dual module");
  module->add_option("--bound", bound, "Search bound (default 64)")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check a module JSON: relations, simplicity, weights, filtrations");
  verify->add_option("--input", input, "Module JSON file, or - for stdin")->required();

  auto* iso = app.add_subcommand("iso", "Decide whether two algebras are isomorphic");
  iso->add_option("--left", left, "alpha,beta,gamma")->required();
  iso->add_option("--right", right, "alpha,beta,gamma")->required();

  auto* type = app.add_subcommand("type", "Type (a)-(d), Jordan case and invariants of the parameters");
  type->add_option("--params", params_text, "alpha,beta,gamma")->required();

  auto* semisimple = app.add_subcommand("semisimple", "Semisimplicity verdict for a type (d) algebra");
  semisimple->add_option("--params", params_text, "alpha,beta,gamma")->required();
  semisimple->add_option("--bound", bound, "X_{m,n} search bound (default 64)")->check(CLI::PositiveNumber);

  auto* ext = app.add_subcommand("ext", "Hom and Ext^1 dimensions; --left is the submodule side");
  ext->add_option("--params", params_text, "alpha,beta,gamma")->required();
  ext->add_option("--left", left, "Module description")->required();
  ext->add_option("--right", right, "Module description")->required();
  ext->add_option("--bound", bound, "Search bound (default 64)")->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe", "Ext^1 between all simples up to a dimension");
  probe->add_option("--params", params_text, "alpha,beta,gamma")->required();
  probe->add_option("--dim-bound", dim_bound, "Largest dimension (default 5)")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const NumberField K = parse_field_option(field_spec);
    auto params = [&]() { return parse_params_option(K, "--params", params_text); };
    Json result;
    std::string text;  // pretty form when it is not the rendered JSON

    if (*nf) {
      Params p = params();
      std::string src = expr == "-" ? read_source("-", in) : expr;
      while (!src.empty() && std::isspace(static_cast<unsigned char>(src.back()))) src.pop_back();
      AlgebraElement a = parse_expression(p, src);
      if (a.is_zero()) {
        result = Json{{"zero", true}};
      } else {
        result = Json{{"zero", false}, {"terms", to_json(a)}, {"text", a.to_string(spelling)}};
      }
      text = a.to_string(spelling) + "\n";
    } else if (*simples) {
      result = to_json(simples_of_dim(params(), dim));
    } else if (*verma) {
      Params p = params();
      FieldElement lambda = parse_field_element(K, lambda_text);
      if (dim > 0)
        result = to_json(verma_quotient(p, lambda, dim));
      else
        result = to_json(verma_structure(p, lambda, bound > 0 ? bound : kDefaultZeroBound));
    } else if (*orbit) {
      Params p = params();
      Point pt = parse_point(K, "--point", point_text);
      const int b = bound > 0 ? bound : kDefaultOrbitBound;
      auto orb = orbit_iterate(p, pt, b);
      Json pts = Json();
      if (orb) {
        pts = Json::array();
        for (const auto& [a, c] : *orb) pts.push_back(Json::array({to_json(a), to_json(c)}));
      }
      Json w = Json(), predicted = Json();
      try {
        Point wc = w_coordinates(canonical_w_pair(p), pt);
        w = Json::array({to_json(wc.first), to_json(wc.second)});
        if (auto n = orbit_finite_condition(p, wc.first, wc.second)) predicted = *n;
      } catch (const FieldNotSplit&) {
      }
      result = Json{{"period", orb ? Json(static_cast<int>(orb->size())) : Json()},
                    {"orbit", pts},
                    {"bound", b},
                    {"w", w},
                    {"predicted_period", predicted}};
    } else if (*module) {
      Params p = params();
      FDModule m = module_from_spec(p, "--spec", spec, bound > 0 ? bound : kDefaultZeroBound, in);
      result = to_json(dual ? dual_module(m) : m);
    } else if (*verify) {
      FDModule m = read_module(input, in);
      RelationReport rel = verify_relations(m);
      result = Json{{"dim", m.dim}, {"relations", to_json(rel)}, {"is_simple", is_simple(m)}};
      try {
        result["weights"] = to_json(weight_decomposition(m));
      } catch (const EigenvaluesNotInField& e) {
        result["weights"] = error_json(e);
      }
      const int top = m.dim > 0 ? m.dim - 1 : 0;
      result["filtration"] = to_json(torsion_filtration(m, top, top));
    } else if (*iso) {
      IsoVerdict v = are_isomorphic(parse_params_option(K, "--left", left), parse_params_option(K, "--right", right));
      result = Json{{"isomorphic", v.answer}, {"branch", to_string(v.branch)}};
    } else if (*type) {
      Params p = params();
      Json roots = Json();
      if (p.roots()) roots = Json::array({to_json(p.roots()->first), to_json(p.roots()->second)});
      result = Json{{"type", to_string(p.type())}, {"case", to_string(p.case_tag())}, {"eta", to_json(p.eta())},
                    {"roots", roots}};
      if (p.type() == AlgebraType::c) {
        TypeCInvariant inv = typec_invariant(p);
        result["invariant"] = to_json(inv.matrix);
        result["w1"] = inv.w1.to_string();
        result["w2"] = inv.w2.to_string();
      }
    } else if (*semisimple) {
      result = to_json(semisimplicity_verdict(params(), bound > 0 ? bound : kDefaultXmnBound));
    } else if (*ext) {
      Params p = params();
      const int b = bound > 0 ? bound : kDefaultZeroBound;
      FDModule l = module_from_spec(p, "--left", left, b, in);
      FDModule r = module_from_spec(p, "--right", right, b, in);
      Ext1Data e = ext1_data(l, r);
      result = Json{{"left_dim", l.dim}, {"right_dim", r.dim}, {"hom", hom_dim(l, r)}, {"ext1", e.dim()},
                    {"cocycles", e.cocycle_dim}, {"coboundaries", e.coboundary_dim}};
    } else if (*probe) {
      result = to_json(semisimplicity_probe(params(), dim_bound));
    }

    if (!pretty)
      out << result.dump() << "\n";
    else if (!text.empty())
      out << text;
    else
      render(result, out, 0);
    return 0;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_json(e).dump() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    out << Json{{"error", std::string(kind_name(ErrorKind::InvalidInput))}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace downup::cli
