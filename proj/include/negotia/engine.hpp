#pragma once

#include <memory>
#include <string>
#include <vector>

#include "negotia/actions.hpp"
#include "negotia/chat.hpp"
#include "negotia/prompts.hpp"
#include "negotia/scenarios.hpp"
#include "negotia/types.hpp"

namespace negotia {

/// A recorded turn together with the structured action behind it. The
/// action carries offer data that the persisted Turn deliberately omits.
struct Exchange {
  Turn turn;
  AgentAction action;
};

class Agent {
public:
  virtual ~Agent() = default;
  /// Next move given the dialogue so far. May throw BackendError.
  virtual AgentAction act(const std::vector<Exchange>& history) = 0;
};

struct EngineOptions {
  std::string episode_id;
  int max_turns = 20;
  std::int64_t seed = 0;
  std::string backend_tag;
};

/// Turn-taking loop. agent_a opens; the loop ends on matching structured
/// offers (Agreement), any Leave (Walkaway), or the turn cap (TurnLimit).
inline EpisodeRecord run_episode_core(const ScenarioBundle& scenario,
                                      const ParticipantSpec& participant_a,
                                      const ParticipantSpec& participant_b, Agent& agent_a,
                                      Agent& agent_b, const EngineOptions& options) {
  if (options.max_turns < 2) throw ConfigError("max_turns must be at least 2");

  EpisodeRecord record;
  record.episode_id = options.episode_id;
  record.scenario = scenario.spec;
  record.agent_a = participant_a;
  record.agent_b = participant_b;
  record.seed = options.seed;
  record.backend_tag = options.backend_tag;
  record.termination = Termination::TurnLimit;

  std::vector<Exchange> history;
  AgentAction standing_a;  // last offer-bearing action per side
  AgentAction standing_b;

  for (int t = 0; t < options.max_turns; ++t) {
    const bool is_a = (t % 2 == 0);
    Agent& current = is_a ? agent_a : agent_b;
    const std::string speaker = is_a ? "a" : "b";

    AgentAction action = current.act(history);

    Turn turn;
    turn.index = t;
    turn.speaker = speaker;
    turn.action = action.action;
    turn.utterance = action.action == TurnAction::Speak ? action.utterance : "";
    turn.timestamp = static_cast<std::uint64_t>(t) + 1;
    record.turns.push_back(turn);
    history.push_back(Exchange{turn, action});

    if (action.action == TurnAction::Leave) {
      record.termination = Termination::Walkaway;
      return record;
    }
    if (action.action != TurnAction::Speak) continue;

    if (action.has_offer()) {
      const AgentAction& opponent_standing = is_a ? standing_b : standing_a;
      if (action.same_offer(opponent_standing)) {
        record.termination = Termination::Agreement;
        AgreementOutcome outcome;
        outcome.final_price = action.offer_price;
        outcome.option_indices = action.offer_options;
        record.agreement = outcome;
        return record;
      }
      (is_a ? standing_a : standing_b) = action;
    }
  }
  return record;
}

// ---------------------------------------------------------------------------
// LLM-backed agent
// ---------------------------------------------------------------------------

inline std::string offer_format_instructions(ScenarioKind kind) {
  if (kind == ScenarioKind::PriceBargaining)
    return "Whenever you state or accept a price, end your message with a structured block on "
           "its own line, exactly like: {action: speak, offer_price: 160.0}. To accept the "
           "other side's offer, repeat their exact price in the block. Reply with just LEAVE "
           "to walk away.";
  return "Whenever you state or accept terms, end your message with a structured block on its "
         "own line, exactly like: {action: speak, offer_options: [2, 3]} where the numbers are "
         "the option indices (0-4) for starting date and salary, in that order. To accept the "
         "other side's offer, repeat their exact option indices in the block. Reply with just "
         "LEAVE to walk away.";
}

/// One independent conversation context per agent: own system prompt plus
/// the shared dialogue replayed as user/assistant messages.
class LlmAgent : public Agent {
public:
  LlmAgent(std::string self_id, const ScenarioBundle& scenario, const PromptBundle& bundle,
           std::shared_ptr<ChatBackend> backend, std::string model, double temperature)
      : self_id_(std::move(self_id)),
        backend_(std::move(backend)),
        model_(std::move(model)),
        temperature_(temperature) {
    system_ = bundle.system_prompt;
    system_ += "\nScenario: " + scenario.spec.shared_context;
    system_ += "\nYour private goal: " + bundle.goal_prompt;
    if (!bundle.private_notes.empty()) system_ += "\n" + bundle.private_notes;
    system_ += "\n" + offer_format_instructions(scenario.spec.kind);
  }

  AgentAction act(const std::vector<Exchange>& history) override {
    ChatRequest request;
    request.model = model_;
    request.temperature = temperature_;
    request.messages.push_back({"system", system_});
    for (const Exchange& e : history) {
      std::string content = e.turn.utterance;
      if (e.action.has_offer()) content += "\n" + format_offer_block(e.action);
      request.messages.push_back({e.turn.speaker == self_id_ ? "assistant" : "user", content});
    }
    if (request.messages.size() == 1)
      request.messages.push_back({"user", "You open the negotiation."});

    AgentAction action = parse_action(backend_->complete(request).content);
    if (action.action != TurnAction::None) return action;

    // One re-prompt with a format reminder, then failure.
    request.messages.push_back(
        {"user", "Your last reply was empty or unusable. Respond with your next message, "
                 "optionally ending with the structured offer block, or reply LEAVE."});
    action = parse_action(backend_->complete(request).content);
    if (action.action == TurnAction::None)
      throw BackendError("agent '" + self_id_ + "' produced no usable reply after re-prompt");
    return action;
  }

private:
  std::string self_id_;
  std::string system_;
  std::shared_ptr<ChatBackend> backend_;
  std::string model_;
  double temperature_;
};

}  // namespace negotia
