#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "gerbal/algebra.hpp"
#include "gerbal/character.hpp"
#include "gerbal/cochain.hpp"
#include "gerbal/group.hpp"
#include "gerbal/inertia.hpp"
#include "gerbal/modcat.hpp"
#include "gerbal/two_group.hpp"

namespace gerbal {

using Json = nlohmann::json;

/// Reads and parses a JSON file; throws ValidationError on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// Group JSON: {"name": s, "order": n, "table": [[...]]}.
Json group_to_json(const FiniteGroup& g);
/// The constructor spec string when it rebuilds the same table, else inline JSON.
Json group_reference(const FiniteGroup& g);

/// Sparse cochain JSON; entries are sorted by tuple and zeros are omitted.
Json cochain_to_json(const Cochain& c, bool with_group = true);
Json groupoid_cochain_to_json(const GroupoidCochain1& c);
Json groupoid_cochain_to_json(const GroupoidCochain2& c);
Json structure_constants_to_json(const StructureConstants& s);
Json character_to_json(const CategoricalCharacter& c);
Json two_character_to_json(const TwoCharacter& t);
Json cyclotomic_to_json(const Cyclotomic& z);
Json label_to_json(const ModuleCategoryLabel& l);

/// Parses everything that refers to groups, so that objects read through one
/// decoder share group pointers (the library compares groups by pointer).
/// All errors are ValidationError naming the offending field.
class Decoder {
 public:
  /// A spec string ("cyclic:4", ...) or inline group JSON.
  GroupPtr group(const Json& j);

  /// Explicit table {"group", "degree", "modulus", "entries"} or one of the
  /// constructors selected by "kind":
  ///   "standard_cyclic" {"n", "k"}
  ///   "inflate" {"group", "map": [phi(g)], "cochain"}
  ///   "product" {"group": A x B (optional), "left", "right"}
  ///   "random" {"group", "degree", "modulus", "seed"}
  ///   "coboundary" {"cochain"}
  /// `context` is used when "group" is missing. Inflations and products of
  /// cocycles are checked to be cocycles again.
  Cochain cochain(const Json& j, GroupPtr context = nullptr);
  GroupoidCochain2 groupoid_cochain2(const Json& j, GroupPtr context = nullptr);

  CategoricalCharacter character(const Json& j, GroupPtr context = nullptr);

  /// {"alpha": cochain, "action": [units]} (action optional).
  SkeletalTwoGroup two_group(const Json& j);
  /// {"source", "target", "rho", "f", "gamma"}.
  TwoGroupHom two_group_hom(const Json& j);
  /// {"s", "eta"} with eta a degree-1 cochain on the source group.
  TwoGroupTransformation transformation(const Json& j, const TwoGroupHom& from);

  /// {"subgroup": [members], "theta": cochain on the subgroup}.
  ModuleCategoryLabel label(const Json& j, const GroupPtr& g);
  /// {"entries": [{"subgroup", "theta", "multiplicity"}]}.
  DecompositionReport decomposition(const Json& j, const GroupPtr& g);

  /// Seed applied to "random" cochain specs that carry none.
  std::uint64_t default_seed = 0;

 private:
  std::map<std::string, GroupPtr> groups_;
};

}  // namespace gerbal
