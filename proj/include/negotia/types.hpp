#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "negotia/errors.hpp"
#include "negotia/money.hpp"

namespace negotia {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Enums
// ---------------------------------------------------------------------------

enum class ScenarioKind { PriceBargaining, JobNegotiation };
enum class Trait { Agreeableness, Conscientiousness, Extraversion, Neuroticism, Openness };
enum class TraitLevel { Unset, Low, High };
enum class BinaryLevel { Low, High };
enum class TurnAction { Speak, Leave, None };
enum class Termination { Agreement, Walkaway, TurnLimit };
enum class Provenance { Judge, Metric, Lexical, Questionnaire };

inline constexpr std::array<Trait, 5> kAllTraits = {
    Trait::Agreeableness, Trait::Conscientiousness, Trait::Extraversion,
    Trait::Neuroticism, Trait::Openness};

inline const char* to_string(ScenarioKind k) {
  return k == ScenarioKind::PriceBargaining ? "price_bargaining" : "job_negotiation";
}
inline const char* to_string(Trait t) {
  switch (t) {
    case Trait::Agreeableness: return "agreeableness";
    case Trait::Conscientiousness: return "conscientiousness";
    case Trait::Extraversion: return "extraversion";
    case Trait::Neuroticism: return "neuroticism";
    case Trait::Openness: return "openness";
  }
  return "?";
}
inline const char* to_string(TraitLevel l) {
  switch (l) {
    case TraitLevel::Unset: return "Unset";
    case TraitLevel::Low: return "Low";
    case TraitLevel::High: return "High";
  }
  return "?";
}
inline const char* to_string(BinaryLevel l) { return l == BinaryLevel::Low ? "Low" : "High"; }
inline const char* to_string(TurnAction a) {
  switch (a) {
    case TurnAction::Speak: return "speak";
    case TurnAction::Leave: return "leave";
    case TurnAction::None: return "none";
  }
  return "?";
}
inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::Agreement: return "agreement";
    case Termination::Walkaway: return "walkaway";
    case Termination::TurnLimit: return "turn_limit";
  }
  return "?";
}
inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Judge: return "judge";
    case Provenance::Metric: return "metric";
    case Provenance::Lexical: return "lexical";
    case Provenance::Questionnaire: return "questionnaire";
  }
  return "?";
}

// Closed-enum parsers. Unknown values are parse errors naming the field.
inline ScenarioKind scenario_kind_from_string(const std::string& s, const std::string& field) {
  if (s == "price_bargaining") return ScenarioKind::PriceBargaining;
  if (s == "job_negotiation") return ScenarioKind::JobNegotiation;
  throw ParseError("unknown scenario kind '" + s + "'", field);
}
inline Trait trait_from_string(const std::string& s, const std::string& field) {
  for (Trait t : kAllTraits)
    if (s == to_string(t)) return t;
  throw ParseError("unknown trait '" + s + "'", field);
}
inline TraitLevel trait_level_from_string(const std::string& s, const std::string& field) {
  if (s == "Unset") return TraitLevel::Unset;
  if (s == "Low") return TraitLevel::Low;
  if (s == "High") return TraitLevel::High;
  throw ParseError("unknown trait level '" + s + "'", field);
}
inline BinaryLevel binary_level_from_string(const std::string& s, const std::string& field) {
  if (s == "Low") return BinaryLevel::Low;
  if (s == "High") return BinaryLevel::High;
  throw ParseError("unknown level '" + s + "' (expected Low|High)", field);
}
inline TurnAction turn_action_from_string(const std::string& s, const std::string& field) {
  if (s == "speak") return TurnAction::Speak;
  if (s == "leave") return TurnAction::Leave;
  if (s == "none") return TurnAction::None;
  throw ParseError("unknown action '" + s + "'", field);
}
inline Termination termination_from_string(const std::string& s, const std::string& field) {
  if (s == "agreement") return Termination::Agreement;
  if (s == "walkaway") return Termination::Walkaway;
  if (s == "turn_limit") return Termination::TurnLimit;
  throw ParseError("unknown termination '" + s + "'", field);
}
inline Provenance provenance_from_string(const std::string& s, const std::string& field) {
  if (s == "judge") return Provenance::Judge;
  if (s == "metric") return Provenance::Metric;
  if (s == "lexical") return Provenance::Lexical;
  if (s == "questionnaire") return Provenance::Questionnaire;
  throw ParseError("unknown provenance '" + s + "'", field);
}

namespace detail {

template <typename T>
T require_field(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) throw ParseError("missing field", field);
  try {
    return j.at(field).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad value: ") + e.what(), field);
  }
}

template <typename T>
T field_or(const Json& j, const std::string& field, T fallback) {
  if (!j.is_object() || !j.contains(field)) return fallback;
  try {
    return j.at(field).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad value: ") + e.what(), field);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

struct ItemListing {
  std::string title;
  std::string description;
  Cents list_price = 0;
  Cents buyer_target = 0;
  Cents seller_target = 0;

  bool operator==(const ItemListing&) const = default;
};

/// One negotiable issue with five evenly spaced options; points for the two
/// sides sum to the same constant at every option.
struct Issue {
  std::string name;
  std::array<std::string, 5> options{};
  std::array<int, 5> points_a{};  // manager side
  std::array<int, 5> points_b{};  // candidate side

  bool operator==(const Issue&) const = default;
};

struct ScenarioSpec {
  std::string id;
  ScenarioKind kind = ScenarioKind::PriceBargaining;
  std::string shared_context;
  std::map<std::string, std::string> constraints;  // e.g. relationship=strangers
  std::vector<Issue> issue_set;                    // JobNegotiation only
  std::optional<ItemListing> item;                 // PriceBargaining only

  bool operator==(const ScenarioSpec&) const = default;
};

struct PersonaSpec {
  std::string name;
  int age = 0;
  std::string occupation;
  std::map<Trait, TraitLevel> trait_levels;
  std::optional<std::string> secret;
  std::string social_goal;

  TraitLevel level(Trait t) const {
    auto it = trait_levels.find(t);
    return it == trait_levels.end() ? TraitLevel::Unset : it->second;
  }

  bool operator==(const PersonaSpec&) const = default;
};

struct AICharacteristicSpec {
  BinaryLevel transparency = BinaryLevel::Low;
  BinaryLevel competence = BinaryLevel::Low;
  BinaryLevel adaptability = BinaryLevel::Low;
  std::string social_goal;

  /// Canonical card key, e.g. "High_Transparency-Low_Competence-High_Adaptability".
  std::string card_key() const {
    return std::string(to_string(transparency)) + "_Transparency-" + to_string(competence) +
           "_Competence-" + to_string(adaptability) + "_Adaptability";
  }

  bool operator==(const AICharacteristicSpec&) const = default;
};

using ParticipantSpec = std::variant<PersonaSpec, AICharacteristicSpec>;

inline const std::string& social_goal_of(const ParticipantSpec& p) {
  if (std::holds_alternative<PersonaSpec>(p)) return std::get<PersonaSpec>(p).social_goal;
  return std::get<AICharacteristicSpec>(p).social_goal;
}

struct Turn {
  int index = 0;
  std::string speaker;  // agent id, "a" or "b"
  TurnAction action = TurnAction::None;
  std::string utterance;  // empty unless action == Speak
  std::uint64_t timestamp = 0;

  bool operator==(const Turn&) const = default;
};

struct AgreementOutcome {
  std::optional<Cents> final_price;  // PriceBargaining
  std::vector<int> option_indices;   // JobNegotiation, one per issue

  bool operator==(const AgreementOutcome&) const = default;
};

struct EpisodeRecord {
  std::string episode_id;
  ScenarioSpec scenario;
  ParticipantSpec agent_a;
  ParticipantSpec agent_b;
  std::vector<Turn> turns;
  Termination termination = Termination::TurnLimit;
  std::optional<AgreementOutcome> agreement;
  std::int64_t seed = 0;
  std::string backend_tag;

  bool operator==(const EpisodeRecord&) const = default;
};

/// Flat named-score mapping for one agent in one episode.
struct MeasureVector {
  std::string episode_id;
  std::string agent_id;
  std::map<std::string, double> scores;
  std::map<std::string, Provenance> provenance;
};

// ---------------------------------------------------------------------------
// JSON serialization (stable lower_snake_case field names)
// ---------------------------------------------------------------------------

inline void to_json(Json& j, const ItemListing& x) {
  j = Json{{"title", x.title},
           {"description", x.description},
           {"list_price_cents", x.list_price},
           {"buyer_target_cents", x.buyer_target},
           {"seller_target_cents", x.seller_target}};
}
inline void from_json(const Json& j, ItemListing& x) {
  x.title = detail::require_field<std::string>(j, "title");
  x.description = detail::require_field<std::string>(j, "description");
  x.list_price = detail::require_field<Cents>(j, "list_price_cents");
  x.buyer_target = detail::require_field<Cents>(j, "buyer_target_cents");
  x.seller_target = detail::require_field<Cents>(j, "seller_target_cents");
}

inline void to_json(Json& j, const Issue& x) {
  j = Json{{"name", x.name},
           {"options", x.options},
           {"points_a", x.points_a},
           {"points_b", x.points_b}};
}
inline void from_json(const Json& j, Issue& x) {
  x.name = detail::require_field<std::string>(j, "name");
  auto opts = detail::require_field<std::vector<std::string>>(j, "options");
  auto pa = detail::require_field<std::vector<int>>(j, "points_a");
  auto pb = detail::require_field<std::vector<int>>(j, "points_b");
  if (opts.size() != 5) throw ParseError("issue must have exactly 5 options", "options");
  if (pa.size() != 5 || pb.size() != 5) throw ParseError("points lists must have 5 entries", "points_a/points_b");
  std::copy(opts.begin(), opts.end(), x.options.begin());
  std::copy(pa.begin(), pa.end(), x.points_a.begin());
  std::copy(pb.begin(), pb.end(), x.points_b.begin());
}

inline void to_json(Json& j, const ScenarioSpec& x) {
  j = Json{{"id", x.id},
           {"kind", to_string(x.kind)},
           {"shared_context", x.shared_context},
           {"constraints", x.constraints}};
  if (!x.issue_set.empty()) j["issue_set"] = x.issue_set;
  if (x.item) j["item"] = *x.item;
}
inline void from_json(const Json& j, ScenarioSpec& x) {
  x.id = detail::require_field<std::string>(j, "id");
  x.kind = scenario_kind_from_string(detail::require_field<std::string>(j, "kind"), "kind");
  x.shared_context = detail::require_field<std::string>(j, "shared_context");
  x.constraints = detail::field_or<std::map<std::string, std::string>>(j, "constraints", {});
  x.issue_set = detail::field_or<std::vector<Issue>>(j, "issue_set", {});
  x.item.reset();
  if (j.contains("item")) x.item = detail::require_field<ItemListing>(j, "item");
}

inline void to_json(Json& j, const PersonaSpec& x) {
  Json levels = Json::object();
  for (const auto& [t, l] : x.trait_levels)
    if (l != TraitLevel::Unset) levels[to_string(t)] = to_string(l);
  j = Json{{"name", x.name},
           {"age", x.age},
           {"occupation", x.occupation},
           {"trait_levels", levels},
           {"social_goal", x.social_goal}};
  if (x.secret) j["secret"] = *x.secret;
}
inline void from_json(const Json& j, PersonaSpec& x) {
  x.name = detail::require_field<std::string>(j, "name");
  x.age = detail::require_field<int>(j, "age");
  x.occupation = detail::require_field<std::string>(j, "occupation");
  x.trait_levels.clear();
  if (j.contains("trait_levels")) {
    for (const auto& [k, v] : j.at("trait_levels").items()) {
      Trait t = trait_from_string(k, "trait_levels");
      x.trait_levels[t] = trait_level_from_string(v.get<std::string>(), "trait_levels." + k);
    }
  }
  x.secret.reset();
  if (j.contains("secret")) x.secret = detail::require_field<std::string>(j, "secret");
  x.social_goal = detail::require_field<std::string>(j, "social_goal");
}

inline void to_json(Json& j, const AICharacteristicSpec& x) {
  j = Json{{"transparency", to_string(x.transparency)},
           {"competence", to_string(x.competence)},
           {"adaptability", to_string(x.adaptability)},
           {"social_goal", x.social_goal}};
}
inline void from_json(const Json& j, AICharacteristicSpec& x) {
  x.transparency = binary_level_from_string(detail::require_field<std::string>(j, "transparency"), "transparency");
  x.competence = binary_level_from_string(detail::require_field<std::string>(j, "competence"), "competence");
  x.adaptability = binary_level_from_string(detail::require_field<std::string>(j, "adaptability"), "adaptability");
  x.social_goal = detail::require_field<std::string>(j, "social_goal");
}

inline Json participant_to_json(const ParticipantSpec& p) {
  Json j;
  if (std::holds_alternative<PersonaSpec>(p)) {
    j = std::get<PersonaSpec>(p);
    j["type"] = "persona";
  } else {
    j = std::get<AICharacteristicSpec>(p);
    j["type"] = "ai";
  }
  return j;
}
inline ParticipantSpec participant_from_json(const Json& j) {
  const std::string type = detail::require_field<std::string>(j, "type");
  if (type == "persona") return j.get<PersonaSpec>();
  if (type == "ai") return j.get<AICharacteristicSpec>();
  throw ParseError("unknown participant type '" + type + "'", "type");
}

inline void to_json(Json& j, const Turn& x) {
  j = Json{{"index", x.index},
           {"speaker", x.speaker},
           {"action", to_string(x.action)},
           {"utterance", x.utterance},
           {"timestamp", x.timestamp}};
}
inline void from_json(const Json& j, Turn& x) {
  x.index = detail::require_field<int>(j, "index");
  x.speaker = detail::require_field<std::string>(j, "speaker");
  x.action = turn_action_from_string(detail::require_field<std::string>(j, "action"), "action");
  x.utterance = detail::require_field<std::string>(j, "utterance");
  x.timestamp = detail::require_field<std::uint64_t>(j, "timestamp");
}

inline void to_json(Json& j, const AgreementOutcome& x) {
  j = Json::object();
  if (x.final_price) j["final_price_cents"] = *x.final_price;
  if (!x.option_indices.empty()) j["option_indices"] = x.option_indices;
}
inline void from_json(const Json& j, AgreementOutcome& x) {
  x.final_price.reset();
  if (j.contains("final_price_cents"))
    x.final_price = detail::require_field<Cents>(j, "final_price_cents");
  x.option_indices = detail::field_or<std::vector<int>>(j, "option_indices", {});
}

inline void to_json(Json& j, const EpisodeRecord& x) {
  j = Json{{"episode_id", x.episode_id},
           {"scenario", x.scenario},
           {"agent_a", participant_to_json(x.agent_a)},
           {"agent_b", participant_to_json(x.agent_b)},
           {"turns", x.turns},
           {"termination", to_string(x.termination)},
           {"seed", x.seed},
           {"backend_tag", x.backend_tag}};
  if (x.agreement) j["agreement"] = *x.agreement;
}
inline void from_json(const Json& j, EpisodeRecord& x) {
  x.episode_id = detail::require_field<std::string>(j, "episode_id");
  x.scenario = detail::require_field<ScenarioSpec>(j, "scenario");
  x.agent_a = participant_from_json(j.contains("agent_a") ? j.at("agent_a") : Json{});
  x.agent_b = participant_from_json(j.contains("agent_b") ? j.at("agent_b") : Json{});
  x.turns = detail::require_field<std::vector<Turn>>(j, "turns");
  x.termination = termination_from_string(detail::require_field<std::string>(j, "termination"), "termination");
  x.agreement.reset();
  if (j.contains("agreement")) x.agreement = detail::require_field<AgreementOutcome>(j, "agreement");
  x.seed = detail::require_field<std::int64_t>(j, "seed");
  x.backend_tag = detail::require_field<std::string>(j, "backend_tag");
}

}  // namespace negotia
