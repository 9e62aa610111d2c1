#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "negotia/engine.hpp"
#include "negotia/scenarios.hpp"

namespace negotia {

// ---------------------------------------------------------------------------
// Price bargaining policy
// ---------------------------------------------------------------------------

struct PricePolicy {
  std::string role;  // buyer | seller
  Cents target = 0;
  double concession_fraction = 0.25;
  std::int64_t seed = 0;
};

namespace detail {

inline std::string price_utterance(std::uint64_t pick, Cents price, bool accepting) {
  const std::string dollars = format_dollars(price);
  if (accepting) {
    static const std::array<const char*, 3> accept_templates = {
        "Deal, $%s works for me.", "Alright, I accept $%s.", "You have a deal at $%s."};
    char buf[128];
    std::snprintf(buf, sizeof(buf), accept_templates[pick % accept_templates.size()],
                  dollars.c_str());
    return buf;
  }
  static const std::array<const char*, 4> offer_templates = {
      "I can do $%s.", "How about $%s?", "Let's say $%s.", "My best right now is $%s."};
  char buf[128];
  std::snprintf(buf, sizeof(buf), offer_templates[pick % offer_templates.size()], dollars.c_str());
  return buf;
}

inline void last_offers(const std::vector<Exchange>& history, const std::string& self_id,
                        const AgentAction** mine, const AgentAction** theirs) {
  *mine = nullptr;
  *theirs = nullptr;
  for (const Exchange& e : history) {
    if (!e.action.has_offer()) continue;
    if (e.turn.speaker == self_id) *mine = &e.action;
    else *theirs = &e.action;
  }
}

}  // namespace detail

/// Deterministic concession policy: opens at its own target, concedes a
/// fixed fraction of the remaining gap per turn (always at least one cent
/// when the fraction is positive, so integer offers must cross), and
/// accepts any standing offer at least as good as its target or as good
/// as its own next planned offer.
inline AgentAction scripted_concession_policy(const PricePolicy& policy,
                                              const std::vector<Exchange>& history,
                                              const std::string& self_id) {
  const bool buyer = policy.role == "buyer";
  const AgentAction* mine = nullptr;
  const AgentAction* theirs = nullptr;
  detail::last_offers(history, self_id, &mine, &theirs);

  const std::uint64_t pick =
      fnv1a64(self_id + ":" + std::to_string(history.size()),
              static_cast<std::uint64_t>(policy.seed) ^ 14695981039346656037ull);

  AgentAction out;
  out.action = TurnAction::Speak;

  if (theirs && theirs->offer_price) {
    const Cents offered = *theirs->offer_price;
    const bool good_enough = buyer ? offered <= policy.target : offered >= policy.target;
    if (good_enough) {
      out.offer_price = offered;
      out.utterance = detail::price_utterance(pick, offered, true);
      return out;
    }
  }

  Cents next;
  if (!mine || !mine->offer_price) {
    next = policy.target;  // open at own anchor
  } else if (!theirs || !theirs->offer_price) {
    next = *mine->offer_price;  // nothing to concede toward; hold
  } else {
    const Cents own = *mine->offer_price;
    const Cents other = *theirs->offer_price;
    const Cents gap = buyer ? other - own : own - other;
    Cents step = 0;
    if (policy.concession_fraction > 0.0 && gap > 0)
      step = std::max<Cents>(
          1, static_cast<Cents>(std::llround(policy.concession_fraction * static_cast<double>(gap))));
    next = buyer ? std::min(own + step, other) : std::max(own - step, other);
    if (next == other) {  // concession meets their offer: accept it
      out.offer_price = other;
      out.utterance = detail::price_utterance(pick, other, true);
      return out;
    }
  }
  out.offer_price = next;
  out.utterance = detail::price_utterance(pick, next, false);
  return out;
}

// ---------------------------------------------------------------------------
// Job negotiation policy
// ---------------------------------------------------------------------------

struct JobPolicy {
  std::string role;  // manager | candidate
  std::vector<Issue> issues;
  std::int64_t seed = 0;
};

namespace detail {

inline int own_points(const JobPolicy& policy, const std::vector<int>& offer) {
  int total = 0;
  for (std::size_t i = 0; i < policy.issues.size(); ++i) {
    const Issue& issue = policy.issues[i];
    const int idx = offer[i];
    total += policy.role == "manager" ? issue.points_a[idx] : issue.points_b[idx];
  }
  return total;
}

inline int best_option(const Issue& issue, bool manager) {
  const auto& points = manager ? issue.points_a : issue.points_b;
  return static_cast<int>(std::max_element(points.begin(), points.end()) - points.begin());
}

/// Concession ladder: starts at the side's best tuple and repeatedly moves
/// one option step on the issue whose step costs the fewest own points.
inline std::vector<std::vector<int>> concession_ladder(const JobPolicy& policy) {
  const bool manager = policy.role == "manager";
  std::vector<int> current;
  std::vector<int> goal;
  for (const Issue& issue : policy.issues) {
    current.push_back(best_option(issue, manager));
    goal.push_back(best_option(issue, !manager));
  }
  std::vector<std::vector<int>> ladder{current};
  while (current != goal) {
    int best_issue = -1;
    int best_loss = 0;
    for (std::size_t i = 0; i < policy.issues.size(); ++i) {
      if (current[i] == goal[i]) continue;
      const int dir = goal[i] > current[i] ? 1 : -1;
      std::vector<int> probe = current;
      probe[i] += dir;
      const int loss = own_points(policy, current) - own_points(policy, probe);
      if (best_issue < 0 || loss < best_loss) {
        best_issue = static_cast<int>(i);
        best_loss = loss;
      }
    }
    current[best_issue] += goal[best_issue] > current[best_issue] ? 1 : -1;
    ladder.push_back(current);
  }
  return ladder;
}

inline std::string job_utterance(const JobPolicy& policy, std::uint64_t pick,
                                 const std::vector<int>& offer, bool accepting) {
  std::string terms;
  for (std::size_t i = 0; i < policy.issues.size(); ++i) {
    if (i) terms += " and ";
    terms += policy.issues[i].name == "start_date" ? "starting " : "";
    terms += policy.issues[i].options[offer[i]];
  }
  if (accepting) {
    static const std::array<const char*, 3> accept_templates = {
        "Agreed, %s works on my end.", "I accept: %s.", "Deal, let's settle on %s."};
    char buf[192];
    std::snprintf(buf, sizeof(buf), accept_templates[pick % accept_templates.size()],
                  terms.c_str());
    return buf;
  }
  static const std::array<const char*, 3> offer_templates = {
      "How about %s?", "I could agree to %s.", "My proposal is %s."};
  char buf[192];
  std::snprintf(buf, sizeof(buf), offer_templates[pick % offer_templates.size()], terms.c_str());
  return buf;
}

}  // namespace detail

/// Job-side counterpart of the price policy: walks its concession ladder
/// one step per own turn and accepts the standing offer once it is worth
/// at least as much as the next planned own offer.
inline AgentAction scripted_job_policy(const JobPolicy& policy,
                                       const std::vector<Exchange>& history,
                                       const std::string& self_id) {
  const auto ladder = detail::concession_ladder(policy);

  std::size_t own_offers = 0;
  const AgentAction* theirs = nullptr;
  for (const Exchange& e : history) {
    if (!e.action.has_offer() || e.action.offer_options.empty()) continue;
    if (e.turn.speaker == self_id) ++own_offers;
    else theirs = &e.action;
  }

  const std::vector<int>& next =
      ladder[std::min(own_offers, ladder.size() - 1)];

  const std::uint64_t pick =
      fnv1a64(self_id + ":" + std::to_string(history.size()),
              static_cast<std::uint64_t>(policy.seed) ^ 1099511628211ull);

  AgentAction out;
  out.action = TurnAction::Speak;

  if (theirs && theirs->offer_options.size() == policy.issues.size()) {
    const int theirs_worth = detail::own_points(policy, theirs->offer_options);
    const int next_worth = detail::own_points(policy, next);
    if (theirs_worth >= next_worth) {
      out.offer_options = theirs->offer_options;
      out.utterance = detail::job_utterance(policy, pick, out.offer_options, true);
      return out;
    }
  }

  out.offer_options = next;
  out.utterance = detail::job_utterance(policy, pick, next, false);
  return out;
}

// ---------------------------------------------------------------------------
// Agent wrapper
// ---------------------------------------------------------------------------

class ScriptedAgent : public Agent {
public:
  ScriptedAgent(std::string self_id, PricePolicy policy)
      : self_id_(std::move(self_id)), price_policy_(std::move(policy)), is_price_(true) {}
  ScriptedAgent(std::string self_id, JobPolicy policy)
      : self_id_(std::move(self_id)), job_policy_(std::move(policy)), is_price_(false) {}

  AgentAction act(const std::vector<Exchange>& history) override {
    return is_price_ ? scripted_concession_policy(price_policy_, history, self_id_)
                     : scripted_job_policy(job_policy_, history, self_id_);
  }

private:
  std::string self_id_;
  PricePolicy price_policy_;
  JobPolicy job_policy_;
  bool is_price_;
};

/// Builds the scripted agent matching a scenario role.
inline std::unique_ptr<Agent> make_scripted_agent(const ScenarioBundle& scenario,
                                                  const std::string& self_id,
                                                  const std::string& role, std::int64_t seed,
                                                  double concession_fraction) {
  if (scenario.spec.kind == ScenarioKind::PriceBargaining) {
    if (!scenario.spec.item) throw DataError("bargaining scenario without item");
    PricePolicy policy;
    policy.role = role;
    policy.target = role == "buyer" ? scenario.spec.item->buyer_target
                                    : scenario.spec.item->seller_target;
    policy.concession_fraction = concession_fraction;
    policy.seed = seed;
    return std::make_unique<ScriptedAgent>(self_id, policy);
  }
  JobPolicy policy;
  policy.role = role;
  policy.issues = scenario.spec.issue_set;
  policy.seed = seed;
  return std::make_unique<ScriptedAgent>(self_id, policy);
}

}  // namespace negotia
