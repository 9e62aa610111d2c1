#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "negotia/types.hpp"

namespace negotia {

namespace fs = std::filesystem;

/// Fixed facet order shared by persona and AI cards.
inline constexpr std::array<const char*, 6> kFacetKeys = {
    "Task_Assignment", "Interaction", "Communication",
    "Planning",        "Leadership",  "Individual_Role"};

/// Facet header as rendered into prompts ("Task_Assignment" -> "Task Assignment").
inline std::string facet_heading(std::string key) {
  std::replace(key.begin(), key.end(), '_', ' ');
  return key;
}

struct TraitVariationCard {
  std::string key;  // e.g. "High_Transparency-High_Competence-High_Adaptability"
  std::map<std::string, std::string> facets;
};

struct PersonaCard {
  Trait trait = Trait::Extraversion;
  TraitLevel level = TraitLevel::Low;
  std::string label;  // e.g. "Introversion"
  std::map<std::string, std::string> facets;
};

struct ItemFixture {
  std::string id;
  ItemListing listing;
};

/// Resolution order: explicit path > NEGOTIA_ASSETS > compiled-in default.
inline fs::path default_asset_root() {
  if (const char* env = std::getenv("NEGOTIA_ASSETS")) return env;
#ifdef NEGOTIA_DEFAULT_ASSET_DIR
  return NEGOTIA_DEFAULT_ASSET_DIR;
#else
  return "assets";
#endif
}

namespace detail {

inline Json load_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open asset file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed asset JSON: ") + e.what(), path.string(), e.byte);
  }
}

inline std::map<std::string, std::string> load_facets(const Json& j, const std::string& where) {
  std::map<std::string, std::string> facets = require_field<std::map<std::string, std::string>>(j, "facets");
  for (const char* key : kFacetKeys) {
    auto it = facets.find(key);
    if (it == facets.end() || it->second.empty())
      throw ConfigError(where + ": facet '" + std::string(key) + "' missing or empty");
  }
  return facets;
}

inline std::vector<fs::path> sorted_json_files(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::exists(dir)) throw ConfigError("asset directory missing: " + dir.string());
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace detail

// Default target ratios taken from the reference listing
// (15200/34900 and 17250/34900); applied when a fixture omits targets.
inline Cents default_buyer_target(Cents list_price) {
  return static_cast<Cents>((list_price * 15200 + 17450) / 34900);
}
inline Cents default_seller_target(Cents list_price) {
  return static_cast<Cents>((list_price * 17250 + 17450) / 34900);
}

/// Read-only library of persona cards, AI characteristic cards, and
/// bargaining item fixtures. Loaded once, shared across workers.
class CardLibrary {
public:
  static CardLibrary load(const fs::path& root = default_asset_root()) {
    CardLibrary lib;

    for (const auto& path : detail::sorted_json_files(root / "ai_cards")) {
      Json j = detail::load_json_file(path);
      TraitVariationCard card;
      card.key = detail::require_field<std::string>(j, "key");
      card.facets = detail::load_facets(j, path.string());
      if (lib.ai_cards_.count(card.key))
        throw ConfigError("duplicate AI card key: " + card.key);
      lib.ai_cards_[card.key] = std::move(card);
    }
    // The AI card library is the full 2^3 grid, nothing more or less.
    if (lib.ai_cards_.size() != 8)
      throw ConfigError("AI card library must hold exactly 8 cards, found " +
                        std::to_string(lib.ai_cards_.size()));
    for (BinaryLevel t : {BinaryLevel::High, BinaryLevel::Low})
      for (BinaryLevel c : {BinaryLevel::High, BinaryLevel::Low})
        for (BinaryLevel a : {BinaryLevel::High, BinaryLevel::Low}) {
          AICharacteristicSpec probe{t, c, a, "-"};
          if (!lib.ai_cards_.count(probe.card_key()))
            throw ConfigError("AI card library missing key: " + probe.card_key());
        }

    for (const auto& path : detail::sorted_json_files(root / "personas")) {
      Json j = detail::load_json_file(path);
      PersonaCard card;
      card.trait = trait_from_string(detail::require_field<std::string>(j, "trait"), path.string());
      card.level =
          trait_level_from_string(detail::require_field<std::string>(j, "level"), path.string());
      card.label = detail::require_field<std::string>(j, "label");
      card.facets = detail::load_facets(j, path.string());
      lib.persona_cards_[{card.trait, card.level}] = std::move(card);
    }

    for (const auto& path : detail::sorted_json_files(root / "items")) {
      Json j = detail::load_json_file(path);
      ItemFixture fixture;
      fixture.id = detail::require_field<std::string>(j, "id");
      fixture.listing.title = detail::require_field<std::string>(j, "title");
      fixture.listing.description = detail::require_field<std::string>(j, "description");
      fixture.listing.list_price = detail::require_field<Cents>(j, "list_price_cents");
      fixture.listing.buyer_target = detail::field_or<Cents>(
          j, "buyer_target_cents", default_buyer_target(fixture.listing.list_price));
      fixture.listing.seller_target = detail::field_or<Cents>(
          j, "seller_target_cents", default_seller_target(fixture.listing.list_price));
      lib.items_.push_back(std::move(fixture));
    }
    std::sort(lib.items_.begin(), lib.items_.end(),
              [](const ItemFixture& a, const ItemFixture& b) { return a.id < b.id; });

    return lib;
  }

  const TraitVariationCard& ai_card(const std::string& key) const {
    auto it = ai_cards_.find(key);
    if (it == ai_cards_.end()) throw ConfigError("no AI card for key: " + key);
    return it->second;
  }

  const PersonaCard& persona_card(Trait trait, TraitLevel level) const {
    auto it = persona_cards_.find({trait, level});
    if (it == persona_cards_.end())
      throw ConfigError(std::string("no persona card for ") + to_string(trait) + "/" +
                        to_string(level));
    return it->second;
  }

  const std::vector<ItemFixture>& items() const { return items_; }

  const ItemFixture& item(const std::string& id) const {
    for (const auto& fixture : items_)
      if (fixture.id == id) return fixture;
    throw ConfigError("no item fixture with id: " + id);
  }

  const std::map<std::string, TraitVariationCard>& ai_cards() const { return ai_cards_; }

private:
  std::map<std::string, TraitVariationCard> ai_cards_;
  std::map<std::pair<Trait, TraitLevel>, PersonaCard> persona_cards_;
  std::vector<ItemFixture> items_;
};

}  // namespace negotia
