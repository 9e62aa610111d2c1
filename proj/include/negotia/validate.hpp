#pragma once

#include <string>
#include <vector>

#include "negotia/types.hpp"

namespace negotia {

namespace detail {

inline void validate_item(const ItemListing& item, std::vector<std::string>& out) {
  if (item.list_price <= 0 || item.buyer_target <= 0 || item.seller_target <= 0)
    out.push_back("item prices must be positive");
  if (item.buyer_target > item.seller_target)
    out.push_back("buyer_target exceeds seller_target");
  if (item.seller_target > item.list_price)
    out.push_back("seller_target exceeds list_price");
}

inline void validate_issue(const Issue& issue, std::vector<std::string>& out) {
  const int total = issue.points_a[0] + issue.points_b[0];
  bool a_up = issue.points_a[4] >= issue.points_a[0];
  for (int i = 0; i < 5; ++i) {
    if (issue.points_a[i] + issue.points_b[i] != total) {
      out.push_back("issue '" + issue.name + "': zero-sum violated at option " + std::to_string(i));
      break;
    }
  }
  for (int i = 1; i < 5; ++i) {
    bool a_ok = a_up ? issue.points_a[i] >= issue.points_a[i - 1]
                     : issue.points_a[i] <= issue.points_a[i - 1];
    bool b_ok = a_up ? issue.points_b[i] <= issue.points_b[i - 1]
                     : issue.points_b[i] >= issue.points_b[i - 1];
    if (!a_ok || !b_ok) {
      out.push_back("issue '" + issue.name + "': points not monotone in opposite directions");
      break;
    }
  }
  for (const auto& opt : issue.options)
    if (opt.empty()) {
      out.push_back("issue '" + issue.name + "': empty option label");
      break;
    }
}

inline void validate_participant(const ParticipantSpec& p, const char* which,
                                 std::vector<std::string>& out) {
  if (social_goal_of(p).empty())
    out.push_back(std::string(which) + ": social_goal empty");
}

}  // namespace detail

/// Checks every domain invariant. Violations are returned as data, never
/// thrown; an empty list means the record is well formed.
inline std::vector<std::string> validate_episode(const EpisodeRecord& r) {
  std::vector<std::string> out;

  // Scenario shape
  const auto& sc = r.scenario;
  if (sc.kind == ScenarioKind::PriceBargaining) {
    if (!sc.item) out.push_back("price bargaining scenario missing item");
    if (!sc.issue_set.empty()) out.push_back("price bargaining scenario must not carry issues");
  } else {
    if (sc.issue_set.empty()) out.push_back("job negotiation scenario missing issue_set");
    if (sc.item) out.push_back("job negotiation scenario must not carry an item");
  }
  if (auto it = sc.constraints.find("relationship");
      it == sc.constraints.end() || it->second != "strangers")
    out.push_back("relationship constraint must be 'strangers'");
  if (sc.item) detail::validate_item(*sc.item, out);
  for (const auto& issue : sc.issue_set) detail::validate_issue(issue, out);

  detail::validate_participant(r.agent_a, "agent_a", out);
  detail::validate_participant(r.agent_b, "agent_b", out);

  // Turn contiguity and alternation
  std::uint64_t prev_ts = 0;
  for (std::size_t i = 0; i < r.turns.size(); ++i) {
    const Turn& t = r.turns[i];
    if (t.index != static_cast<int>(i)) {
      out.push_back("turn indices not contiguous from 0");
      break;
    }
    if (i > 0 && t.speaker == r.turns[i - 1].speaker) {
      out.push_back("speakers do not alternate at turn " + std::to_string(i));
      break;
    }
    if ((t.action == TurnAction::Speak) != !t.utterance.empty()) {
      out.push_back("turn " + std::to_string(i) + ": utterance must be non-empty iff action is speak");
      break;
    }
    if (i > 0 && t.timestamp <= prev_ts) {
      out.push_back("turn timestamps not strictly increasing");
      break;
    }
    prev_ts = t.timestamp;
  }

  // Agreement payload
  if (r.termination == Termination::Agreement && !r.agreement)
    out.push_back("agreement missing");
  if (r.termination != Termination::Agreement && r.agreement)
    out.push_back("agreement present without agreement termination");
  if (r.agreement) {
    if (sc.kind == ScenarioKind::PriceBargaining) {
      if (!r.agreement->final_price)
        out.push_back("agreement missing final price");
      else if (sc.item &&
               (*r.agreement->final_price < 0 || *r.agreement->final_price > 2 * sc.item->list_price))
        out.push_back("final price outside [0, 2*list_price]");
    } else {
      if (r.agreement->option_indices.size() != sc.issue_set.size())
        out.push_back("agreement option count does not match issue count");
      for (int idx : r.agreement->option_indices)
        if (idx < 0 || idx > 4) {
          out.push_back("agreement option index outside [0,4]");
          break;
        }
    }
  }

  return out;
}

}  // namespace negotia
