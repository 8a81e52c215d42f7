#include "gerbal/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gerbal/error.hpp"

namespace gerbal {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

Int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<Int>();
}

std::size_t as_size(const Json& j, const std::string& where) {
  const Int v = as_int(j, where);
  if (v < 0) fail(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Int as_modulus(const Json& j, const std::string& where) {
  const Int v = as_int(j, where);
  if (v < 1) fail(where + ": modulus must be positive");
  return v;
}

std::vector<Element> parse_key(const std::string& key, std::size_t arity, std::size_t order,
                               const std::string& where) {
  std::vector<Element> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      fail(where + ": bad tuple key \"" + key + "\"");
    const unsigned long v = std::stoul(part);
    if (v >= order) fail(where + ": element " + part + " out of range in \"" + key + "\"");
    out.push_back(static_cast<Element>(v));
  }
  if (!key.empty() && key.back() == ',') fail(where + ": bad tuple key \"" + key + "\"");
  if (out.size() != arity)
    fail(where + ": key \"" + key + "\" needs " + std::to_string(arity) + " elements");
  return out;
}

std::string make_key(std::span<const Element> t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

std::vector<Element> element_list(const Json& j, std::size_t order, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  std::vector<Element> out;
  for (const auto& x : j) {
    const std::size_t v = as_size(x, where);
    if (v >= order) fail(where + ": element " + std::to_string(v) + " out of range");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

Json float_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// An exact or float matrix entry; exact entries are relative to zeta_n.
std::variant<Cyclotomic, std::complex<double>> parse_entry(const Json& j, Int n,
                                                           const std::string& where) {
  if (j.is_number_integer()) {
    if (j.get<Int>() != 0) fail(where + ": bare numbers must be 0; use {\"e\": k}");
    return Cyclotomic(n);
  }
  if (!j.is_object()) fail(where + ": bad matrix entry");
  const bool exact = j.contains("e") || j.contains("coefficients");
  if (!exact && (j.contains("re") || j.contains("im"))) {
    const auto& re = field(j, "re", where);
    const auto& im = field(j, "im", where);
    if (!re.is_number() || !im.is_number()) fail(where + ": re/im must be numbers");
    return std::complex<double>(re.get<double>(), im.get<double>());
  }
  const Int order = j.contains("order") ? as_modulus(j["order"], where + ".order") : n;
  if (j.contains("coefficients")) {
    Cyclotomic z(order);
    Int e = 0;
    for (const auto& c : field(j, "coefficients", where))
      z = z + Cyclotomic::integer(order, as_int(c, where + ".coefficients")) *
                  Cyclotomic::root(order, e++);
    return z;
  }
  const Int e = as_int(field(j, "e", where), where + ".e");
  const Int c = j.contains("c") ? as_int(j["c"], where + ".c") : 1;
  return Cyclotomic::integer(order, c) * Cyclotomic::root(order, e);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

Json group_to_json(const FiniteGroup& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
}

Json group_reference(const FiniteGroup& g) {
  try {
    if (parse_group_spec(g.name())->table() == g.table()) return g.name();
  } catch (const Error&) {
  }
  return group_to_json(g);
}

Json cochain_to_json(const Cochain& c, bool with_group) {
  Json entries = Json::object();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.at_index(i) != 0) entries[make_key(c.tuple(i))] = c.at_index(i);
  Json j = {{"degree", c.degree()}, {"modulus", c.modulus()}, {"entries", entries}};
  if (with_group) j["group"] = group_reference(c.group());
  return j;
}

Json groupoid_cochain_to_json(const GroupoidCochain1& c) {
  const std::size_t n = c.group().order();
  Json entries = Json::object();
  for (Element g = 0; g < n; ++g)
    for (Element s = 0; s < n; ++s)
      if (c(g, s) != 0) entries[std::to_string(g) + "," + std::to_string(s)] = c(g, s);
  return {{"group", group_reference(c.group())},
          {"degree", 1},
          {"modulus", c.modulus()},
          {"entries", entries}};
}

Json groupoid_cochain_to_json(const GroupoidCochain2& c) {
  const std::size_t n = c.group().order();
  Json entries = Json::object();
  for (Element g = 0; g < n; ++g)
    for (Element s = 0; s < n; ++s)
      for (Element t = 0; t < n; ++t)
        if (c(g, s, t) != 0)
          entries[std::to_string(g) + "," + std::to_string(s) + "," + std::to_string(t)] =
              c(g, s, t);
  return {{"group", group_reference(c.group())},
          {"degree", 2},
          {"modulus", c.modulus()},
          {"entries", entries}};
}

Json structure_constants_to_json(const StructureConstants& s) {
  Json products = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const auto& p = s.product(i, j);
      if (p)
        products.push_back({i, j, p->k, p->e});
      else
        products.push_back({i, j, "zero"});
    }
  return {{"basis", s.labels()}, {"modulus", s.modulus()}, {"products", products},
          {"unit", s.unit()}};
}

Json cyclotomic_to_json(const Cyclotomic& z) {
  if (z.is_zero()) return 0;
  const Int n = z.order();
  // plain roots of unity first, then integer multiples of one
  for (const bool unit : {true, false})
    for (Int e = 0; e < n; ++e) {
      const auto w = z * Cyclotomic::root(n, -e);
      const auto& c = w.coefficients();
      if (!std::all_of(c.begin() + 1, c.end(), [](Int x) { return x == 0; })) continue;
      if (unit && c[0] != 1) continue;
      Json j = {{"e", e}, {"order", n}};
      if (c[0] != 1) j["c"] = c[0];
      return j;
    }
  const auto f = z.to_complex();
  return {{"order", n}, {"coefficients", z.coefficients()}, {"re", f.real()}, {"im", f.imag()}};
}

Json character_to_json(const CategoricalCharacter& c) {
  const std::size_t n = c.group->order();
  Json dims = Json::object();
  for (std::size_t g = 0; g < n; ++g) dims[std::to_string(g)] = c.dims[g];
  Json beta = Json::object();
  auto emit = [&](const auto& mats, auto entry) {
    for (std::size_t i = 0; i < mats.size(); ++i) {
      Json rows = Json::array();
      for (std::size_t r = 0; r < mats[i].rows; ++r) {
        Json row = Json::array();
        for (std::size_t k = 0; k < mats[i].cols; ++k) row.push_back(entry(mats[i](r, k)));
        rows.push_back(row);
      }
      beta[std::to_string(i / n) + "," + std::to_string(i % n)] = rows;
    }
  };
  if (c.exact()) {
    emit(std::get<0>(c.beta), [&](const Cyclotomic& z) {
      // exponents relative to the character's modulus when possible
      Json j = cyclotomic_to_json(c.modulus % z.order() == 0 ? z.lift_to(c.modulus) : z);
      if (j.is_object() && j.contains("order") && j["order"] == c.modulus && !j.contains("coefficients"))
        j.erase("order");
      return j;
    });
  } else {
    emit(std::get<1>(c.beta), float_json);
  }
  Json j = {{"group", group_reference(*c.group)},
            {"modulus", c.modulus},
            {"dims", dims},
            {"beta", beta}};
  if (!c.exact()) j["tolerance"] = c.tolerance;
  return j;
}

Json two_character_to_json(const TwoCharacter& t) {
  const std::size_t n = t.group->order();
  Json values = Json::object();
  std::visit(
      [&](const auto& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!v[i]) continue;
          Json x;
          if constexpr (std::is_same_v<std::decay_t<decltype(*v[i])>, Cyclotomic>) {
            x = cyclotomic_to_json(*v[i]);
            const auto f = v[i]->to_complex();
            if (x.is_object() && !x.contains("re")) {
              x["re"] = f.real();
              x["im"] = f.imag();
            }
          } else {
            x = float_json(*v[i]);
          }
          values[std::to_string(i / n) + "," + std::to_string(i % n)] = x;
        }
      },
      t.values);
  return {{"group", group_reference(*t.group)}, {"values", values}};
}

Json label_to_json(const ModuleCategoryLabel& l) {
  return {{"subgroup", l.subgroup.members()}, {"theta", cochain_to_json(l.theta, false)}};
}

GroupPtr Decoder::group(const Json& j) {
  std::string key;
  if (j.is_string()) {
    key = j.get<std::string>();
  } else if (j.is_object()) {
    key = j.dump();
  } else {
    fail("group: expected a constructor string or a group object");
  }
  if (auto it = groups_.find(key); it != groups_.end()) return it->second;
  GroupPtr g;
  if (j.is_string()) {
    g = parse_group_spec(key);
  } else {
    const auto& t = field(j, "table", "group");
    std::vector<std::vector<Element>> table;
    if (!t.is_array()) fail("group.table: expected an array of rows");
    for (const auto& row : t) table.push_back(element_list(row, t.size(), "group.table"));
    if (j.contains("order") && as_size(j["order"], "group.order") != table.size())
      fail("group: order does not match the table");
    const std::string name =
        j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "table";
    g = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(name, std::move(table)));
  }
  groups_.emplace(key, g);
  return g;
}

Cochain Decoder::cochain(const Json& j, GroupPtr context) {
  if (!j.is_object()) fail("cochain: expected an object");
  auto group_of = [&](const char* where) {
    if (j.contains("group")) return group(j["group"]);
    if (!context) fail(std::string(where) + ": missing \"group\"");
    return context;
  };
  const std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "table";
  if (kind == "standard_cyclic") {
    const std::size_t n = as_size(field(j, "n", "standard_cyclic"), "standard_cyclic.n");
    if (n == 0) fail("standard_cyclic.n must be positive");
    const Int k = as_int(field(j, "k", "standard_cyclic"), "standard_cyclic.k");
    return standard_cyclic_3cocycle(group("cyclic:" + std::to_string(n)), k);
  }
  if (kind == "inflate") {
    const auto inner = cochain(field(j, "cochain", "inflate"));
    const auto g = group_of("inflate");
    const auto phi = element_list(field(j, "map", "inflate"), inner.group().order(), "inflate.map");
    auto out = inflate(inner, g, phi);
    if (is_cocycle(inner).cocycle && !is_cocycle(out).cocycle)
      throw Error("inflation of a cocycle is not a cocycle");
    return out;
  }
  if (kind == "product") {
    const auto a = cochain(field(j, "left", "product"));
    const auto b = cochain(field(j, "right", "product"));
    GroupPtr g;
    if (j.contains("group")) {
      g = group(j["group"]);
    } else {
      const std::string name = "product:(" + a.group().name() + "," + b.group().name() + ")";
      if (auto it = groups_.find(name); it != groups_.end()) {
        g = it->second;
      } else {
        g = make_direct_product(a.group(), b.group());
        groups_.emplace(name, g);
      }
    }
    auto out = external_product(a, b, g);
    if (is_cocycle(a).cocycle && is_cocycle(b).cocycle && !is_cocycle(out).cocycle)
      throw Error("product of cocycles is not a cocycle");
    return out;
  }
  if (kind == "random") {
    const auto g = group_of("random");
    const int degree = static_cast<int>(as_int(field(j, "degree", "random"), "random.degree"));
    const Int modulus = as_modulus(field(j, "modulus", "random"), "random.modulus");
    const std::uint64_t seed =
        j.contains("seed") ? static_cast<std::uint64_t>(as_size(j["seed"], "random.seed"))
                           : default_seed;
    return random_cochain(g, degree, modulus, seed);
  }
  if (kind == "coboundary") return coboundary(cochain(field(j, "cochain", "coboundary"), context));
  if (kind != "table") fail("cochain: unknown kind \"" + kind + "\"");

  const auto g = group_of("cochain");
  const Int degree = as_int(field(j, "degree", "cochain"), "cochain.degree");
  if (degree < 0 || degree > 4) fail("cochain.degree must be between 0 and 4");
  const Int modulus = as_modulus(field(j, "modulus", "cochain"), "cochain.modulus");
  Cochain c(g, static_cast<int>(degree), modulus);
  if (j.contains("entries")) {
    const auto& e = j["entries"];
    if (!e.is_object()) fail("cochain.entries: expected an object");
    for (const auto& [k, v] : e.items()) {
      const Int x = as_int(v, "cochain.entries[" + k + "]");
      if (x < 0 || x >= modulus)
        fail("cochain.entries[" + k + "]: entry " + std::to_string(x) + " not in 0.." +
             std::to_string(modulus - 1));
      c.set(parse_key(k, static_cast<std::size_t>(degree), g->order(), "cochain.entries"), x);
    }
  }
  return c;
}

GroupoidCochain2 Decoder::groupoid_cochain2(const Json& j, GroupPtr context) {
  if (!j.is_object()) fail("groupoid cochain: expected an object");
  const auto g = j.contains("group") ? group(j["group"]) : context;
  if (!g) fail("groupoid cochain: missing \"group\"");
  if (j.contains("degree") && as_int(j["degree"], "groupoid cochain.degree") != 2)
    fail("groupoid cochain: expected degree 2");
  const Int modulus = as_modulus(field(j, "modulus", "groupoid cochain"), "groupoid cochain.modulus");
  GroupoidCochain2 c(g, modulus);
  std::vector<Int> entries(c.entries());
  const std::size_t n = g->order();
  if (j.contains("entries")) {
    for (const auto& [k, v] : j["entries"].items()) {
      const auto t = parse_key(k, 3, n, "groupoid cochain.entries");
      const Int x = as_int(v, "groupoid cochain.entries[" + k + "]");
      if (x < 0 || x >= modulus) fail("groupoid cochain.entries[" + k + "]: entry out of range");
      entries[(t[0] * n + t[1]) * n + t[2]] = x;
    }
  }
  return GroupoidCochain2(g, modulus, std::move(entries));
}

CategoricalCharacter Decoder::character(const Json& j, GroupPtr context) {
  if (!j.is_object()) fail("character: expected an object");
  const auto g = j.contains("group") ? group(j["group"]) : context;
  if (!g) fail("character: missing \"group\"");
  const std::size_t n = g->order();
  const Int modulus = as_modulus(field(j, "modulus", "character"), "character.modulus");
  std::vector<std::size_t> dims(n, 1);
  if (j.contains("dims")) {
    if (!j["dims"].is_object()) fail("character.dims: expected an object");
    for (const auto& [k, v] : j["dims"].items())
      dims[parse_key(k, 1, n, "character.dims")[0]] = as_size(v, "character.dims[" + k + "]");
  }
  const auto& bj = field(j, "beta", "character");
  if (!bj.is_object()) fail("character.beta: expected an object");
  std::vector<Matrix<std::variant<Cyclotomic, std::complex<double>>>> raw(n * n);
  std::vector<bool> seen(n * n, false);
  bool any_float = false;
  for (const auto& [k, v] : bj.items()) {
    const auto t = parse_key(k, 2, n, "character.beta");
    const std::string where = "character.beta[" + k + "]";
    if (!v.is_array()) fail(where + ": expected a list of rows");
    const std::size_t rows = v.size();
    const std::size_t cols = rows ? v[0].size() : dims[t[0]];
    Matrix<std::variant<Cyclotomic, std::complex<double>>> m(rows, cols, Cyclotomic(modulus));
    for (std::size_t r = 0; r < rows; ++r) {
      if (!v[r].is_array() || v[r].size() != cols) fail(where + ": ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = parse_entry(v[r][c], modulus, where);
        any_float |= m(r, c).index() == 1;
      }
    }
    raw[t[0] * n + t[1]] = std::move(m);
    seen[t[0] * n + t[1]] = true;
  }
  for (std::size_t i = 0; i < n * n; ++i)
    if (!seen[i])
      fail("character.beta: missing \"" + std::to_string(i / n) + "," + std::to_string(i % n) +
           "\"");
  CategoricalCharacter out{g, modulus, dims, std::vector<ExactMatrix>{}};
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number()) fail("character.tolerance: expected a number");
    out.tolerance = j["tolerance"].get<double>();
  }
  if (any_float) {
    std::vector<FloatMatrix> beta;
    for (const auto& m : raw) {
      FloatMatrix f(m.rows, m.cols, 0);
      for (std::size_t i = 0; i < m.data.size(); ++i)
        f.data[i] = m.data[i].index() == 0 ? std::get<0>(m.data[i]).to_complex()
                                           : std::get<1>(m.data[i]);
      beta.push_back(std::move(f));
    }
    out.beta = std::move(beta);
  } else {
    std::vector<ExactMatrix> beta;
    for (const auto& m : raw) {
      ExactMatrix e(m.rows, m.cols, Cyclotomic(modulus));
      for (std::size_t i = 0; i < m.data.size(); ++i) e.data[i] = std::get<0>(m.data[i]);
      beta.push_back(std::move(e));
    }
    out.beta = std::move(beta);
  }
  return out;
}

SkeletalTwoGroup Decoder::two_group(const Json& j) {
  auto alpha = cochain(field(j, "alpha", "two-group"));
  if (!j.contains("action")) return SkeletalTwoGroup(std::move(alpha));
  const auto& a = j["action"];
  if (!a.is_array()) fail("two-group.action: expected an array");
  std::vector<Int> action;
  for (const auto& x : a) action.push_back(as_int(x, "two-group.action"));
  return SkeletalTwoGroup(std::move(alpha), std::move(action));
}

TwoGroupHom Decoder::two_group_hom(const Json& j) {
  auto source = two_group(field(j, "source", "hom"));
  auto target = two_group(field(j, "target", "hom"));
  auto rho = element_list(field(j, "rho", "hom"), target.group().order(), "hom.rho");
  const Int f = as_int(field(j, "f", "hom"), "hom.f");
  auto gamma = cochain(field(j, "gamma", "hom"), source.group_ptr());
  return {std::move(source), std::move(target), std::move(rho), f, std::move(gamma)};
}

TwoGroupTransformation Decoder::transformation(const Json& j, const TwoGroupHom& from) {
  const std::size_t s = as_size(field(j, "s", "transformation"), "transformation.s");
  if (s >= from.target.group().order()) fail("transformation.s out of range");
  return {static_cast<Element>(s), cochain(field(j, "eta", "transformation"),
                                           from.source.group_ptr())};
}

ModuleCategoryLabel Decoder::label(const Json& j, const GroupPtr& g) {
  auto members = element_list(field(j, "subgroup", "label"), g->order(), "label.subgroup");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubgroupRef h(g, std::move(members));
  const auto hg = h.as_group();
  const auto& tj = field(j, "theta", "label");
  Cochain theta = cochain(tj, hg);
  if (theta.group().table() != hg->table()) fail("label.theta: not a cochain on the subgroup");
  return {std::move(h), Cochain(hg, theta.degree(), theta.modulus(), theta.entries())};
}

DecompositionReport Decoder::decomposition(const Json& j, const GroupPtr& g) {
  const auto& e = field(j, "entries", "decomposition");
  if (!e.is_array()) fail("decomposition.entries: expected an array");
  DecompositionReport r;
  for (const auto& x : e) {
    const std::size_t m = x.contains("multiplicity")
                              ? as_size(x["multiplicity"], "decomposition.multiplicity")
                              : 1;
    r.entries.push_back({label(x, g), m});
  }
  return r;
}

}  // namespace gerbal
