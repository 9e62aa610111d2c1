#pragma once

#include <string>

#include "negotia/assets.hpp"
#include "negotia/types.hpp"

namespace negotia {

/// Everything one agent is conditioned on. goal_prompt and private_notes
/// are visible only to the owning agent.
struct PromptBundle {
  std::string system_prompt;
  std::string goal_prompt;
  std::string private_notes;
};

/// Renders an Appendix-style character sheet: identity lines, then one
/// six-facet block per set trait. Unset traits contribute no text, so an
/// all-Unset persona reduces to name/age/occupation plus the goal.
inline PromptBundle render_persona_prompt(const PersonaSpec& p, const CardLibrary& cards,
                                          const std::string& extra_private_notes = "") {
  std::string s;
  s += "You are playing the following character in a social simulation. Stay in character at "
       "every turn and pursue your private goal.\n";
  s += "Name: " + p.name + "\n";
  s += "Age: " + std::to_string(p.age) + "\n";
  s += "Occupation: " + p.occupation + "\n";

  bool any_trait = false;
  for (Trait trait : kAllTraits) {
    const TraitLevel level = p.level(trait);
    if (level == TraitLevel::Unset) continue;
    const PersonaCard& card = cards.persona_card(trait, level);
    if (!any_trait) {
      s += "Personality Model: Big 5 Personality\n";
      any_trait = true;
    }
    s += "Personality Trait: " + card.label + "\n";
    for (const char* key : kFacetKeys)
      s += facet_heading(key) + ": " + card.facets.at(key) + "\n";
  }

  PromptBundle bundle;
  bundle.system_prompt = s;
  bundle.goal_prompt = p.social_goal;
  bundle.private_notes = p.secret.value_or("");
  if (!extra_private_notes.empty()) {
    if (!bundle.private_notes.empty()) bundle.private_notes += "\n";
    bundle.private_notes += extra_private_notes;
  }
  return bundle;
}

/// Embeds the six facet texts of the matching trait-variation card,
/// verbatim from the card library.
inline PromptBundle render_ai_prompt(const AICharacteristicSpec& a, const CardLibrary& cards,
                                     const std::string& extra_private_notes = "") {
  const TraitVariationCard& card = cards.ai_card(a.card_key());

  std::string s;
  s += "You are playing an AI assistant agent in a social simulation. Act according to the "
       "interaction profile below and pursue your private goal.\n";
  s += "AI Characteristic Profile: " + card.key + "\n";
  for (const char* key : kFacetKeys)
    s += facet_heading(key) + ": " + card.facets.at(key) + "\n";

  PromptBundle bundle;
  bundle.system_prompt = s;
  bundle.goal_prompt = a.social_goal;
  bundle.private_notes = extra_private_notes;
  return bundle;
}

inline PromptBundle render_prompt(const ParticipantSpec& p, const CardLibrary& cards,
                                  const std::string& extra_private_notes = "") {
  if (std::holds_alternative<PersonaSpec>(p))
    return render_persona_prompt(std::get<PersonaSpec>(p), cards, extra_private_notes);
  return render_ai_prompt(std::get<AICharacteristicSpec>(p), cards, extra_private_notes);
}

}  // namespace negotia
