#include "toric/cli.hpp"

#include "toric/generators.hpp"
#include "toric/io.hpp"
#include "toric/product.hpp"
#include "toric/todd.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

namespace toric {

namespace {

using Index = Eigen::Index;

struct Options {
  std::uint64_t seed = 0;
  std::string displacement;
  bool json = false;
  bool pretty = false;
  bool rational = false;
};

// State collected while a command runs; becomes the manifest.
struct Run {
  Options opt;
  Json inputs = Json::array();
  Json displacements = Json::array();

  Json load(const std::string& path) {
    std::string text = read_file(path);
    inputs.push_back({{"path", path}, {"fnv1a", fnv1a_hex(text)}});
    return parse_json(text);
  }

  Fan load_fan(const std::string& path) { return make_fan(fan_data_from_json(load(path))); }

  Displacement displacement() const {
    if (opt.displacement.empty()) return Displacement::automatic(opt.seed);
    std::vector<long long> entries;
    std::stringstream ss(opt.displacement);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        entries.push_back(std::stoll(item, &used));
        if (used != item.size()) throw InvalidInput("bad displacement entry " + item);
      } catch (const std::logic_error&) {
        throw InvalidInput("bad displacement entry \"" + item + "\"");
      }
    }
    return Displacement::explicit_vector(make_vector(entries));
  }

  void record(const IntVector& v) { displacements.push_back(to_json(v)); }
};

IntVector parse_csv_vector(const std::string& text) {
  std::vector<long long> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoll(item, &used));
      if (used != item.size()) throw InvalidInput("bad entry \"" + item + "\"");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad entry \"" + item + "\"");
    }
  }
  return make_vector(entries);
}

MinkowskiWeight integral_weight(const RationalWeight& w) {
  for (Index i = 0; i < w.values.size(); ++i)
    if (!is_integral(w.values(i))) throw InvalidInput("weight has non-integral values; pass --rational");
  return to_integer(w);
}

CycleClass integral_cycle(const Cycle<Rational>& z) {
  CycleClass out{z.codim, IntVector(z.coefficients.size())};
  for (Index i = 0; i < z.coefficients.size(); ++i) {
    if (!is_integral(z.coefficients(i))) throw InvalidInput("cycle has non-integral coefficients; pass --rational");
    out.coefficients(i) = numerator(z.coefficients(i));
  }
  return out;
}

Json pair_json(const Fan& source, const Fan& target, const DisplacementPair& p) {
  return {{"sigma", source.cone_label(p.sigma)},
          {"tau", target.cone_label(p.tau)},
          {"point", to_json(p.point)},
          {"multiplicity", to_json(p.multiplicity)}};
}

// Certificates over the given cones, keeping the pairs accepted by `keep`.
Json certificates_json(DisplacementRule& rule, const std::vector<int>& gammas,
                       const std::function<bool(const DisplacementPair&)>& keep) {
  const ToricMorphism& f = rule.morphism();
  Json out = Json::array();
  for (int gamma : gammas) {
    const DisplacementCertificate& c = rule.certificate(gamma);
    Json pairs = Json::array();
    for (const auto& p : c.pairs)
      if (keep(p)) pairs.push_back(pair_json(f.source, f.target, p));
    out.push_back({{"gamma", f.source.cone_label(gamma)}, {"v", to_json(c.v)}, {"pairs", pairs}});
  }
  return out;
}

FanData fan_data_of(const Fan& fan) {
  FanData d;
  d.rank = fan.rank();
  d.rays = fan.rays();
  for (int m : fan.maximal_cones()) d.max_cones.push_back(fan.cone(m).rays);
  return d;
}

Json polynomial_json(const Polynomial& p, const std::string& prefix) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_json(c)}});
  return {{"text", p.to_string(prefix)}, {"terms", terms}};
}

// ---- commands -------------------------------------------------------------

Json cmd_validate(Run& run, const std::string& path) { return describe(run.load_fan(path)); }

Json cmd_betti(Run& run, const std::string& path) {
  Fan fan = run.load_fan(path);
  Json rows = Json::array();
  Json betti = Json::array();
  for (int k = 0; k <= fan.rank(); ++k) {
    GroupStructure g = chow_group(fan, k);
    Json row = {{"k", k}, {"chow_rank", g.rank}};
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(to_json(t));
    row["torsion"] = torsion;
    if (fan.is_complete()) {
      std::size_t r = weight_basis(fan, k).size();
      row["weight_rank"] = r;
      betti.push_back(r);
    } else {
      row["weight_rank"] = nullptr;
    }
    rows.push_back(row);
  }
  Json out = {{"table", rows}};
  out["betti"] = fan.is_complete() ? betti : Json(nullptr);
  return out;
}

Json cmd_weights_basis(Run& run, const std::string& path, int codim) {
  Fan fan = run.load_fan(path);
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
  Json out = Json::array();
  for (int k = 0; k <= fan.rank(); ++k) {
    if (codim >= 0 && k != codim) continue;
    Json basis = Json::array();
    for (const auto& w : weight_basis(fan, k)) basis.push_back(weight_to_json(fan, w));
    out.push_back({{"codim", k}, {"rank", basis.size()}, {"basis", basis}});
  }
  if (codim > fan.rank()) throw InvalidInput("codimension out of range");
  return {{"bases", out}};
}

Json cmd_weights_check(Run& run, const std::string& fan_path, const std::string& weight_path) {
  Fan fan = run.load_fan(fan_path);
  RationalWeight w = weight_from_json(fan, run.load(weight_path));
  if (!run.opt.rational) integral_weight(w);
  WeightCheck check = is_weight(fan, w);
  Json violations = Json::array();
  for (const auto& v : check.violations) violations.push_back({{"tau", fan.cone_label(v.tau)}, {"u", to_json(v.u)}});
  return {{"codim", w.codim}, {"balanced", check.balanced}, {"violations", violations}};
}

template <typename Scalar>
Weight<Scalar> convert(const RationalWeight& w) {
  if constexpr (std::is_same_v<Scalar, Rational>) return w;
  else return integral_weight(w);
}

template <typename Scalar>
Cycle<Scalar> convert(const Cycle<Rational>& z) {
  if constexpr (std::is_same_v<Scalar, Rational>) return z;
  else return integral_cycle(z);
}

template <typename Scalar>
Json cup_as(Run& run, const Fan& fan, const RationalWeight& a, const RationalWeight& b) {
  DisplacementRule rule(fan, run.displacement());
  Weight<Scalar> c = convert<Scalar>(a), d = convert<Scalar>(b);
  Weight<Scalar> result = cup(rule, c, d);
  run.record(rule.displacement());
  Json certs = certificates_json(rule, fan.cones_of_codim(result.codim),
                                 [&](const DisplacementPair& p) { return fan.codim(p.sigma) == c.codim; });
  return {{"weight", weight_to_json(fan, result)},
          {"balanced", is_weight(fan, result).balanced},
          {"displacement", to_json(rule.displacement())},
          {"certificates", certs}};
}

Json cmd_cup(Run& run, const std::string& fan_path, const std::string& a_path, const std::string& b_path) {
  Fan fan = run.load_fan(fan_path);
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
  RationalWeight a = weight_from_json(fan, run.load(a_path));
  RationalWeight b = weight_from_json(fan, run.load(b_path));
  return run.opt.rational ? cup_as<Rational>(run, fan, a, b) : cup_as<Integer>(run, fan, a, b);
}

template <typename Scalar>
Json cap_as(Run& run, const Fan& fan, const RationalWeight& a, const Cycle<Rational>& z) {
  DisplacementRule rule(fan, run.displacement());
  Weight<Scalar> c = convert<Scalar>(a);
  Cycle<Scalar> cycle = convert<Scalar>(z);
  Cycle<Scalar> result = cap(rule, c, cycle);
  run.record(rule.displacement());
  std::vector<int> gammas;
  for (int g : fan.cones_of_codim(cycle.codim))
    if (cycle.coefficients(fan.position_in_codim(g)) != 0) gammas.push_back(g);
  Json certs = certificates_json(rule, gammas, [&](const DisplacementPair& p) { return fan.codim(p.sigma) == c.codim; });
  return {{"cycle", cycle_to_json(fan, result)}, {"displacement", to_json(rule.displacement())}, {"certificates", certs}};
}

Json cmd_cap(Run& run, const std::string& fan_path, const std::string& w_path, const std::string& z_path) {
  Fan fan = run.load_fan(fan_path);
  if (!fan.is_complete()) throw PreconditionError("fan not complete");
  RationalWeight w = weight_from_json(fan, run.load(w_path));
  Cycle<Rational> z = cycle_from_json(fan, run.load(z_path));
  return run.opt.rational ? cap_as<Rational>(run, fan, w, z) : cap_as<Integer>(run, fan, w, z);
}

Json cmd_pullback(Run& run, const std::string& source_path, const std::string& target_path, const std::string& map_path,
                  const std::string& weight_path) {
  Fan source = run.load_fan(source_path);
  Fan target = run.load_fan(target_path);
  Json m = run.load(map_path);
  IntMatrix psi = int_matrix_from_json(m.is_object() ? m.at("matrix") : m);
  ToricMorphism f = make_morphism(psi, source, target);
  MinkowskiWeight c = integral_weight(weight_from_json(target, run.load(weight_path)));
  DisplacementRule rule(f, run.displacement());
  MinkowskiWeight result = pullback(rule, c);
  run.record(rule.displacement());
  Json out = {{"weight", weight_to_json(source, result)}, {"displacement", to_json(rule.displacement())}};
  out["dominant"] = f.is_dominant();
  if (f.is_dominant()) out["closed_form_agrees"] = pullback_dominant(f, c) == result;
  if (c.codim <= source.rank()) {
    out["certificates"] = certificates_json(rule, source.cones_of_codim(c.codim), [&](const DisplacementPair& p) {
      return source.codim(p.sigma) == 0 && target.codim(p.tau) == c.codim;
    });
  }
  return out;
}

Json cmd_closure(Run& run, const std::string& fan_path, const std::string& lattice_path) {
  Fan fan = run.load_fan(fan_path);
  Json l = run.load(lattice_path);
  IntMatrix rows = int_matrix_from_json(l.is_object() ? l.at("generators") : l);
  TorusClosure t = torus_closure_class(fan, IntMatrix(rows.transpose()), run.displacement());
  run.record(t.v);
  Json meeting = Json::array();
  for (const auto& m : t.meeting) meeting.push_back({{"cone", fan.cone_label(m.cone)}, {"point", to_json(m.point)}});
  return {{"cycle", cycle_to_json(fan, t.cycle)}, {"displacement", to_json(t.v)}, {"meeting", meeting},
          {"warnings", t.warnings}};
}

Json cmd_todd_weight(Run& run, const std::string& path) {
  IntersectionRing ring(run.load_fan(path), run.opt.seed);
  Json weights = Json::array();
  for (const auto& w : ring.todd_weight()) weights.push_back(weight_to_json(ring.fan(), w));
  return {{"todd_class", polynomial_json(ring.todd_class(), "x")}, {"weights", weights}};
}

Json cmd_todd_ehrhart(Run& run, const std::string& path) {
  IntersectionRing ring(run.load_fan(path), run.opt.seed);
  CoefficientReport report = coefficient_extraction_check(ring);
  return {{"polynomial", polynomial_json(ring.ehrhart_polynomial(), "a")}, {"square_free_matches_todd", report.all_equal}};
}

Json cmd_todd_count(Run& run, const std::string& path, const std::string& a_text) {
  IntersectionRing ring(run.load_fan(path), run.opt.seed);
  IntVector a = parse_csv_vector(a_text);
  if (a.size() != ring.variables()) throw InvalidInput("need one entry of a per ray");
  ToddCount c = count_via_todd(ring, a);
  return {{"a", to_json(a)}, {"phi", to_json(c.phi)}, {"count", to_json(c.count)}};
}

Json cmd_todd_obstruction(Run& run, const std::string& path) {
  Fan fan = run.load_fan(path);
  ToddObstruction o = todd_obstruction(fan);
  Json out = {{"obstructed", o.obstructed}};
  if (o.obstructed) {
    out["cone"] = fan.cone_label(*o.cone);
    out["witness_rays"] = o.witness_rays;
    out["determinant"] = to_json(o.determinant);
  }
  return out;
}

Json cmd_points_count(Run& run, const std::string& path) {
  Polytope p = polytope_from_json(run.load(path));
  return {{"count", to_json(count_lattice_points(p))}};
}

Json cmd_polytope_normalfan(Run& run, const std::string& path) {
  Polytope p = polytope_from_json(run.load(path));
  NormalFan nf = normal_fan(p);
  Json faces = Json::object();
  for (int id = 0; id < nf.fan.cone_count(); ++id) faces[nf.fan.cone_label(id)] = nf.face_vertices[static_cast<std::size_t>(id)];
  return {{"fan", to_json(fan_data_of(nf.fan))}, {"summary", describe(nf.fan)}, {"face_vertices", faces}};
}

// ---- output ---------------------------------------------------------------

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return !y.is_structured(); })))
      return false;
  return true;
}

std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat_text(j[i]);
  return s + ")";
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_flat(value)) {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      } else {
        out << pad << key << ": " << flat_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_structured() && !is_flat(x)) {
        out << pad << "-\n";
        render(x, out, indent + 2);
      } else {
        out << pad << "- " << flat_text(x) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidInput*>(&e)) return 2;
  if (dynamic_cast<const PreconditionError*>(&e)) return 3;
  if (dynamic_cast<const GenericityError*>(&e)) return 4;
  return 1;
}

int replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string stored_text = read_file(path);
  Json stored = parse_json(stored_text);
  if (!stored.is_object() || !stored.contains("args") || !stored.contains("output"))
    throw InvalidInput("not a run manifest");
  bool digests_match = true;
  for (const auto& in : stored.at("inputs")) {
    std::string text = read_file(in.at("path").get<std::string>());
    if (fnv1a_hex(text) != in.at("fnv1a").get<std::string>()) digests_match = false;
  }
  std::vector<std::string> args = stored.at("args").get<std::vector<std::string>>();
  std::ostringstream fresh, fresh_err;
  int code = run_cli(args, fresh, fresh_err);
  if (code != 0) {
    err << fresh_err.str();
    return code;
  }
  const bool identical = fresh.str() == stored_text;
  const bool same_output = parse_json(fresh.str()).at("output") == stored.at("output");
  Json report = {{"manifest", path}, {"inputs_unchanged", digests_match}, {"output_identical", same_output},
                 {"bytes_identical", identical}};
  out << report.dump(2) << "\n";
  return identical ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection theory on toric fans", "toric"};
  app.fallthrough();
  app.require_subcommand(1);
  Run run;
  app.add_option("--seed", run.opt.seed, "Seed for sampling displacement vectors");
  app.add_option("--displacement", run.opt.displacement, "Explicit displacement vector, comma separated");
  auto* json_flag = app.add_flag("--json", run.opt.json, "JSON manifest output (default)");
  auto* pretty_flag = app.add_flag("--pretty", run.opt.pretty, "Human readable output");
  json_flag->excludes(pretty_flag);
  app.add_flag("--rational", run.opt.rational, "Accept rational weights");

  std::function<Json()> action;
  std::string p1, p2, p3, p4, a_text;
  int codim = -1;
  std::string gen_name;
  std::vector<int> gen_params;
  bool raw = false;  // gen and replay print their own format

  auto* validate = app.add_subcommand("validate", "Check fan axioms and report the fan type");
  validate->add_option("fan", p1)->required();
  validate->callback([&] { action = [&] { return cmd_validate(run, p1); }; });

  auto* betti = app.add_subcommand("betti", "Chow groups A_k and ranks of A^k");
  betti->add_option("fan", p1)->required();
  betti->callback([&] { action = [&] { return cmd_betti(run, p1); }; });

  auto* weights = app.add_subcommand("weights", "Minkowski weights");
  weights->require_subcommand(1);
  auto* basis = weights->add_subcommand("basis", "Basis of the weights of each codimension");
  basis->add_option("fan", p1)->required();
  basis->add_option("--codim", codim, "Only this codimension");
  basis->callback([&] { action = [&] { return cmd_weights_basis(run, p1, codim); }; });
  auto* check = weights->add_subcommand("check", "Balancing test");
  check->add_option("fan", p1)->required();
  check->add_option("weight", p2)->required();
  check->callback([&] { action = [&] { return cmd_weights_check(run, p1, p2); }; });

  auto* cup_cmd = app.add_subcommand("cup", "Cup product of two weights");
  cup_cmd->add_option("fan", p1)->required();
  cup_cmd->add_option("weight1", p2)->required();
  cup_cmd->add_option("weight2", p3)->required();
  cup_cmd->callback([&] { action = [&] { return cmd_cup(run, p1, p2, p3); }; });

  auto* cap_cmd = app.add_subcommand("cap", "Cap product of a weight with a cycle");
  cap_cmd->add_option("fan", p1)->required();
  cap_cmd->add_option("weight", p2)->required();
  cap_cmd->add_option("cycle", p3)->required();
  cap_cmd->callback([&] { action = [&] { return cmd_cap(run, p1, p2, p3); }; });

  auto* pull = app.add_subcommand("pullback", "Pullback of a weight along a toric morphism");
  pull->add_option("source", p1)->required();
  pull->add_option("target", p2)->required();
  pull->add_option("map", p3, "Lattice map as a list of rows")->required();
  pull->add_option("weight", p4)->required();
  pull->callback([&] { action = [&] { return cmd_pullback(run, p1, p2, p3, p4); }; });

  auto* closure = app.add_subcommand("closure", "Class of the closure of a subtorus");
  closure->add_option("fan", p1)->required();
  closure->add_option("lattice", p2, "Generators of the sublattice")->required();
  closure->callback([&] { action = [&] { return cmd_closure(run, p1, p2); }; });

  auto* todd = app.add_subcommand("todd", "Todd weight and lattice point polynomial");
  todd->require_subcommand(1);
  auto* tw = todd->add_subcommand("weight", "Todd class and Todd weight of a smooth complete fan");
  tw->add_option("fan", p1)->required();
  tw->callback([&] { action = [&] { return cmd_todd_weight(run, p1); }; });
  auto* te = todd->add_subcommand("ehrhart", "Lattice point polynomial in the divisor coefficients");
  te->add_option("fan", p1)->required();
  te->callback([&] { action = [&] { return cmd_todd_ehrhart(run, p1); }; });
  auto* tc = todd->add_subcommand("count", "Lattice points of P_a from the polynomial, checked by enumeration");
  tc->add_option("fan", p1)->required();
  tc->add_option("--a", a_text, "Divisor coefficients, comma separated")->required();
  tc->callback([&] { action = [&] { return cmd_todd_count(run, p1, a_text); }; });
  auto* to = todd->add_subcommand("obstruction", "Test for a Todd weight on a complete fan");
  to->add_option("fan", p1)->required();
  to->callback([&] { action = [&] { return cmd_todd_obstruction(run, p1); }; });

  auto* points = app.add_subcommand("points", "Lattice points of a polytope");
  points->require_subcommand(1);
  auto* pc = points->add_subcommand("count", "Count lattice points");
  pc->add_option("polytope", p1)->required();
  pc->callback([&] { action = [&] { return cmd_points_count(run, p1); }; });

  auto* polytope = app.add_subcommand("polytope", "Polytope operations");
  polytope->require_subcommand(1);
  auto* nf = polytope->add_subcommand("normalfan", "Normal fan of a full-dimensional polytope");
  nf->add_option("polytope", p1)->required();
  nf->callback([&] { action = [&] { return cmd_polytope_normalfan(run, p1); }; });

  auto* gen = app.add_subcommand("gen", "Print a built-in fan");
  gen->add_option("name", gen_name,
                  "p1, p2, pn, p1xp1, p1-power, hirzebruch, hypersimplex, example13, example56, blowup-p2")
      ->required();
  gen->add_option("params", gen_params, "Integer parameters");
  gen->callback([&] {
    raw = true;
    action = [&] {
      FanData d = generate(gen_name, gen_params);
      make_fan(d);  // validate before printing
      return to_json(d);
    };
  });

  auto* rep = app.add_subcommand("replay", "Re-run a manifest and compare the output bytes");
  rep->add_option("manifest", p1)->required();
  rep->callback([&] { raw = true; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (rep->parsed()) return replay(p1, out, err);
    Json output = action();
    if (raw) {
      out << output.dump(2) << "\n";
      return 0;
    }
    if (run.opt.pretty) {
      render(output, out, 0);
      return 0;
    }
    Json manifest = Json::object();
    manifest["tool"] = kToolVersion;
    manifest["command"] = app.get_subcommands().front()->get_name();
    manifest["args"] = args;
    manifest["inputs"] = run.inputs;
    manifest["seed"] = std::to_string(run.opt.seed);
    manifest["displacements"] = run.displacements;
    manifest["output"] = output;
    out << manifest.dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace toric
