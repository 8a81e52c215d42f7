#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "gerbal/algebra.hpp"
#include "gerbal/character.hpp"
#include "gerbal/cohomology.hpp"
#include "gerbal/error.hpp"
#include "gerbal/inertia.hpp"
#include "gerbal/io.hpp"
#include "gerbal/modcat.hpp"
#include "gerbal/two_group.hpp"

namespace gerbal::cli {

namespace {

struct Options {
  std::string format = "text";
  Int modulus = 0;
  Int lift_factor = 0;
  Int prime = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out;
  int degree = 0;
  long long expected = -1;
  bool module = false;
  std::vector<std::string> inputs;
};

// A finished command: the JSON report, whether it is a verdict, and units
// for the text rendering of counters.
struct Result {
  Json report;
  bool verdict = false;
  std::map<std::string, std::string> units;
};

Json witness_list(const std::vector<std::vector<Element>>& w) {
  Json j = Json::array();
  for (const auto& x : w) j.push_back(x);
  return j;
}

std::string render_text(const Json& report, const std::map<std::string, std::string>& units) {
  std::string s;
  for (const auto& [k, v] : report.items()) {
    std::string value;
    if (v.is_string())
      value = v.get<std::string>();
    else
      value = v.dump();
    s += k + ": " + value;
    if (auto it = units.find(k); it != units.end()) s += " " + it->second;
    s += "\n";
  }
  return s;
}

struct Context {
  Options opt;
  Decoder dec;

  Jobs jobs() const { return Jobs{std::max(1u, opt.jobs)}; }

  const std::string& input(std::size_t i, const char* what) const {
    if (i >= opt.inputs.size()) throw ValidationError(std::string("missing input: ") + what);
    return opt.inputs[i];
  }

  Json load(std::size_t i, const char* what) { return read_json_file(input(i, what)); }

  Cochain load_cochain(std::size_t i) { return dec.cochain(load(i, "cochain file")); }

  GroupPtr load_group(std::size_t i) {
    const auto& s = input(i, "group spec or file");
    if (std::filesystem::exists(s)) {
      const auto j = read_json_file(s);
      return dec.group(j.contains("group") ? j["group"] : j);
    }
    return dec.group(Json(s));
  }
};

Result cmd_group(Context& c) {
  const auto g = c.load_group(0);
  Json classes = Json::array();
  for (const auto& cls : conjugacy_classes(*g)) classes.push_back(cls);
  const auto subs = enumerate_subgroups(g);
  std::size_t count = 0;
  Json sub_classes = Json::array();
  for (const auto& cls : subs) {
    count += cls.size();
    sub_classes.push_back({{"order", cls.front().order()},
                           {"size", cls.size()},
                           {"representative", cls.front().members()}});
  }
  Json r = {{"name", g->name()},
            {"order", g->order()},
            {"abelian", g->is_abelian()},
            {"center", center(*g)},
            {"conjugacy_classes", classes},
            {"subgroups", count},
            {"subgroup_classes", sub_classes},
            {"table", g->table()}};
  return {r, false, {}};
}

Result cmd_cocycle_check(Context& c) {
  const auto z = c.load_cochain(0);
  const auto v = is_cocycle(z, c.jobs());
  Json r = {{"valid", v.cocycle},
            {"cocycle", v.cocycle},
            {"normalized", z.normalized()},
            {"degree", z.degree()},
            {"modulus", z.modulus()},
            {"checked", v.checked},
            {"witnesses", v.witness ? Json::array({*v.witness}) : Json::array()}};
  return {r, true, {{"checked", "tuples"}}};
}

Result cmd_cocycle_solve(Context& c) {
  const auto z = c.load_cochain(0);
  const Int q = c.opt.lift_factor ? c.opt.lift_factor : static_cast<Int>(z.group().order());
  const auto theta = solve_coboundary(z, q);
  Json r = {{"valid", theta.has_value()}, {"lift_factor", q}};
  if (theta)
    r["theta"] = cochain_to_json(*theta);
  else
    r["message"] = "no coboundary witness";
  return {r, true, {}};
}

Result cmd_cohomology(Context& c) {
  const auto g = c.load_group(0);
  if (c.opt.modulus < 1) throw ValidationError("cohomology needs --modulus N (N >= 1)");
  Json r = {{"group", group_reference(*g)}, {"modulus", c.opt.modulus}};
  const int lo = c.opt.degree ? c.opt.degree : 1;
  const int hi = c.opt.degree ? c.opt.degree : 3;
  if (lo < 1 || hi > 3) throw ValidationError("--degree must be 1, 2 or 3");
  for (int k = lo; k <= hi; ++k) {
    const auto inv = cohomology_invariants(*g, c.opt.modulus, k);
    Int order = 1;
    for (Int x : inv) order *= x;
    r["H" + std::to_string(k)] = {{"invariants", inv}, {"order", order}};
  }
  return {r, false, {}};
}

Result cmd_transgress(Context& c) {
  const auto z = c.load_cochain(0);
  if (z.degree() == 2) {
    const auto xi = transgress2(z);
    const auto d = groupoid_coboundary(xi);
    return {{{"transgression", groupoid_cochain_to_json(xi)},
             {"coboundary", groupoid_cochain_to_json(d)}},
            false,
            {}};
  }
  const auto psi = transgress3(z, c.jobs());
  const auto v = is_groupoid_2cocycle(psi, c.jobs());
  Json r = {{"valid", v.cocycle},
            {"groupoid_cocycle", v.cocycle},
            {"checked", v.checked},
            {"witnesses", v.witness ? Json::array({*v.witness}) : Json::array()},
            {"transgression", groupoid_cochain_to_json(psi)}};
  return {r, true, {{"checked", "triples"}}};
}

Json center_json(const CenterReport& rep) {
  Json per = Json::array();
  for (const auto& [p, d] : rep.per_prime) per.push_back({{"prime", p}, {"dimension", d}});
  return {{"dimension", rep.dimension}, {"per_prime", per}, {"consistent", rep.consistent}};
}

Result cmd_double(Context& c) {
  const auto alpha = c.load_cochain(0);
  const auto d = twisted_drinfeld_double(alpha, c.jobs());
  const auto a = check_associativity(d, c.jobs());
  const bool unit = check_unit(d);
  Json r = {{"valid", a.associative && unit},
            {"dimension", d.dim()},
            {"associative", a.associative},
            {"unit", unit},
            {"checked", a.checked},
            {"witness", a.witness ? Json(*a.witness) : Json()},
            {"center", center_json(center_dimension_multi(d))},
            {"structure_constants", structure_constants_to_json(d)}};
  return {r, true, {{"checked", "triples"}}};
}

Result cmd_double_center(Context& c) {
  const auto alpha = c.load_cochain(0);
  const auto d = twisted_drinfeld_double(alpha, c.jobs());
  CenterReport rep;
  if (c.opt.prime) {
    const auto emb = make_modular_embedding(d.modulus(), c.opt.prime);
    if (c.opt.prime <= static_cast<Int>(d.dim()) * d.modulus())
      throw ValidationError("--prime must exceed dim * N");
    rep.dimension = center_dimension(d, emb);
    rep.per_prime.push_back({c.opt.prime, rep.dimension});
  } else {
    rep = center_dimension_multi(d);
  }
  Json r = center_json(rep);
  r["algebra_dimension"] = d.dim();
  return {r, false, {}};
}

Result cmd_character_basic(Context& c) {
  return {character_to_json(basic_character(c.load_cochain(0))), false, {}};
}

Result cmd_character_verify(Context& c) {
  const auto ch = c.dec.character(c.load(0, "character file"));
  const auto alpha = c.dec.cochain(c.load(1, "alpha file"), ch.group);
  const auto v = verify_character(ch, alpha, c.jobs());
  Json r = {{"valid", v.valid},
            {"checked", v.checked},
            {"exact", ch.exact()},
            {"witnesses", witness_list(v.witnesses)},
            {"problems", v.problems}};
  if (c.opt.module) {
    const auto m = character_to_module(ch, twisted_drinfeld_double(alpha, c.jobs()), c.jobs());
    r["module"] = {{"valid", m.valid},
                   {"total_dimension", m.total_dimension},
                   {"unit", m.unit_ok},
                   {"witnesses", witness_list(m.witnesses)}};
    r["valid"] = v.valid && m.valid;
  }
  return {r, true, {{"checked", "triples"}}};
}

Result cmd_joint_trace(Context& c) {
  return {two_character_to_json(joint_trace(c.dec.character(c.load(0, "character file")))), false,
          {}};
}

Json two_group_report(const TwoGroupReport& t) {
  return {{"valid", t.valid},
          {"checked", t.checked},
          {"witnesses", witness_list(t.witnesses)},
          {"problems", t.problems},
          {"unit", t.unit_ok}};
}

Result cmd_twogroup_verify(Context& c) {
  const auto j = c.load(0, "two-group file");
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("two-group file needs \"kind\": hom, transformation or modification");
  const auto kind = j["kind"].get<std::string>();
  Json r;
  if (kind == "hom") {
    const auto h = c.dec.two_group_hom(j.at("hom"));
    r = two_group_report(verify_hom(h, c.jobs()));
  } else if (kind == "transformation") {
    const auto from = c.dec.two_group_hom(j.at("from"));
    const auto to = c.dec.two_group_hom(j.at("to"));
    const auto t = c.dec.transformation(j.at("transformation"), from);
    r = two_group_report(verify_transformation(t, from, to, c.jobs()));
  } else if (kind == "modification") {
    const auto from = c.dec.two_group_hom(j.at("from"));
    const auto to = c.dec.two_group_hom(j.at("to"));
    const auto t1 = c.dec.transformation(j.at("t1"), from);
    const auto t2 = c.dec.transformation(j.at("t2"), from);
    if (!j.contains("omega") || !j["omega"].is_number_integer())
      throw ValidationError("modification needs an integer \"omega\"");
    r = two_group_report(verify_modification({j["omega"].get<Int>()}, t1, t2, to));
  } else {
    throw ValidationError("unknown two-group kind \"" + kind + "\"");
  }
  r["kind"] = kind;
  return {r, true, {}};
}

Result cmd_modcat_enumerate(Context& c) {
  const auto alpha = c.load_cochain(0);
  const Int q = c.opt.lift_factor ? c.opt.lift_factor : default_lift_factor(alpha.group());
  const auto labels = enumerate_indecomposables(alpha, q, c.jobs());
  Json list = Json::array();
  for (const auto& l : labels) {
    Json x = label_to_json(l);
    x["simple_count"] = alpha.group().order() / l.subgroup.order();
    list.push_back(x);
  }
  Json r = {{"group", group_reference(alpha.group())},
            {"lift_factor", q},
            {"count", labels.size()},
            {"labels", list},
            {"note",
             "theta classes are compared after lifting by the lift factor; this detects "
             "U(1)-triviality only heuristically"}};
  return {r, false, {}};
}

Result cmd_modcat_induce(Context& c) {
  const auto lj = c.load(0, "label file");
  const auto alpha = c.load_cochain(1);
  const auto label = c.dec.label(lj, alpha.group_ptr());
  const auto d = induce(label, alpha);
  return {{{"label", label_to_json(d.label)},
           {"subgroup_order", d.label.subgroup.order()},
           {"simple_count", d.simple_count}},
          false,
          {}};
}

Result cmd_modcat_verify(Context& c) {
  const auto rj = c.load(0, "decomposition file");
  const auto alpha = c.load_cochain(1);
  const auto rep = c.dec.decomposition(rj, alpha.group_ptr());
  std::size_t expected = 0;
  if (c.opt.expected >= 0)
    expected = static_cast<std::size_t>(c.opt.expected);
  else if (rj.contains("expected_total") && rj["expected_total"].is_number_unsigned())
    expected = rj["expected_total"].get<std::size_t>();
  else
    throw ValidationError("give --expected or \"expected_total\" in the decomposition file");
  const auto v = verify_decomposition(rep, alpha, expected);
  return {{{"valid", v.valid},
           {"total", v.total},
           {"expected_total", expected},
           {"problems", v.problems}},
          true,
          {}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  Options& o = ctx.opt;
  CLI::App app{"Cocycles, transgression, twisted doubles and categorical characters"};
  app.name("gerbal");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--modulus", o.modulus, "Coefficient modulus N");
  app.add_option("--lift-factor", o.lift_factor, "Lift factor Q (default |G|)");
  app.add_option("--prime", o.prime, "Prime for the modular embedding");
  app.add_option("--seed", o.seed, "Seed for random cochain specs without one");
  app.add_option("--jobs", o.jobs, "Worker threads");
  app.add_option("--out", o.out, "Also write the JSON report to this file");

  using Handler = std::function<Result(Context&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, const char* inputs, Handler h) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("inputs", o.inputs, inputs)->required();
    commands.emplace_back(s, std::move(h));
    return s;
  };
  sub("group", "Describe a group", "constructor spec or group JSON file", cmd_group);
  sub("cocycle-check", "Check the cocycle identity", "cochain file", cmd_cocycle_check);
  sub("cocycle-solve", "Find theta with d theta = Q z", "cochain file", cmd_cocycle_solve);
  sub("cohomology", "Invariant factors of H^k(G, Z/N)", "group", cmd_cohomology)
      ->add_option("--degree", o.degree, "Only this degree");
  sub("transgress", "Transgression to the inertia groupoid", "cochain file", cmd_transgress);
  sub("double", "Twisted Drinfeld double", "3-cocycle file", cmd_double);
  sub("double-center", "Centre dimension of the double", "3-cocycle file", cmd_double_center);
  sub("character-basic", "Basic character of a 2-cochain", "theta file", cmd_character_basic);
  sub("character-verify", "Check the character identity", "character file, alpha file",
      cmd_character_verify)
      ->add_flag("--module", o.module, "Also check the module over the double");
  sub("joint-trace", "Joint trace on commuting pairs", "character file", cmd_joint_trace);
  sub("twogroup-verify", "Verify a 2-group hom, transformation or modification",
      "two-group file", cmd_twogroup_verify);
  sub("modcat-enumerate", "Module category labels up to equivalence", "alpha file",
      cmd_modcat_enumerate);
  sub("modcat-induce", "Simple count of an induced module category", "label file, alpha file",
      cmd_modcat_induce);
  sub("modcat-verify", "Check a decomposition report", "report file, alpha file",
      cmd_modcat_verify)
      ->add_option("--expected", o.expected, "Expected total simple count");

  std::vector<const char*> argv{"gerbal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  ctx.dec.default_seed = o.seed;
  try {
    for (auto& [s, h] : commands) {
      if (!s->parsed()) continue;
      Result r = h(ctx);
      if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw ValidationError("cannot write " + o.out);
        f << r.report.dump(2) << "\n";
      }
      if (o.format == "json")
        out << r.report.dump(2) << "\n";
      else
        out << render_text(r.report, r.units);
      if (!r.verdict) return 0;
      return r.report.at("valid").get<bool>() ? 0 : 1;
    }
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace gerbal::cli
