#pragma once

#include <string>

#include "negotia/assets.hpp"
#include "negotia/money.hpp"
#include "negotia/types.hpp"

namespace negotia {

/// A scenario plus the per-side goal prompts and private notes derived
/// from it. Goals are private; each side's notes carry only its own
/// targets or point column.
struct ScenarioBundle {
  ScenarioSpec spec;
  std::string role_a;  // buyer/seller or manager/candidate, agent_a speaks first
  std::string role_b;
  std::string goal_a;
  std::string goal_b;
  std::string notes_a;
  std::string notes_b;
};

/// Craigslist-style price bargaining. agent_a is the buyer unless
/// buyer_opens is false.
inline ScenarioBundle make_bargaining_scenario(const ItemListing& item, const std::string& id,
                                               bool buyer_opens = true) {
  if (item.list_price <= 0 || item.buyer_target <= 0 || item.seller_target <= 0)
    throw DataError("item prices must be positive");
  if (item.buyer_target > item.seller_target || item.seller_target > item.list_price)
    throw DataError("item targets must satisfy buyer_target <= seller_target <= list_price");

  ScenarioBundle bundle;
  bundle.spec.id = id.empty() ? "bargain" : id;
  bundle.spec.kind = ScenarioKind::PriceBargaining;
  bundle.spec.constraints["relationship"] = "strangers";
  bundle.spec.item = item;
  bundle.spec.shared_context =
      "One person is offering a " + item.title + " for a price of $" +
      format_dollars(item.list_price) +
      ", while another person is showing interest in purchasing it. Here is a description of "
      "the item: " +
      item.description;

  const std::string buyer_goal =
      "You are the buyer for this item and your target price is $" +
      format_dollars(item.buyer_target) +
      ". You will be penalized if you purchase it at a significantly higher price than the "
      "target. However, if you manage to buy it for less than the target price, you'll receive "
      "a bonus.";
  const std::string seller_goal =
      "As the seller of this item, your target price is set at $" +
      format_dollars(item.seller_target) +
      ". Please be aware that you will face a penalty if the item is sold for a significantly "
      "lower price than the target. However, if you manage to sell it for more than the target "
      "price, you will receive a bonus.";
  const std::string buyer_notes =
      "Private: your buyer target price is $" + format_dollars(item.buyer_target) + ".";
  const std::string seller_notes =
      "Private: your seller target price is $" + format_dollars(item.seller_target) + ".";

  if (buyer_opens) {
    bundle.role_a = "buyer";
    bundle.role_b = "seller";
    bundle.goal_a = buyer_goal;
    bundle.goal_b = seller_goal;
    bundle.notes_a = buyer_notes;
    bundle.notes_b = seller_notes;
  } else {
    bundle.role_a = "seller";
    bundle.role_b = "buyer";
    bundle.goal_a = seller_goal;
    bundle.goal_b = buyer_goal;
    bundle.notes_a = seller_notes;
    bundle.notes_b = buyer_notes;
  }
  return bundle;
}

/// The two fixed job-negotiation issues: five evenly spaced options each,
/// zero-sum points (2400 per starting-date cell, 6000 per salary cell).
inline std::vector<Issue> job_negotiation_issues() {
  Issue start_date;
  start_date.name = "start_date";
  start_date.options = {"6.1", "6.15", "7.1", "7.15", "8.1"};
  start_date.points_a = {0, 600, 1200, 1800, 2400};      // manager
  start_date.points_b = {2400, 1800, 1200, 600, 0};      // candidate

  Issue salary;
  salary.name = "salary";
  salary.options = {"$100k", "$105k", "$110k", "$115k", "$120k"};
  salary.points_a = {6000, 4500, 3000, 1500, 0};
  salary.points_b = {0, 1500, 3000, 4500, 6000};

  return {start_date, salary};
}

namespace detail {

inline std::string point_column_text(const Issue& issue, bool manager_side) {
  std::string s = issue.name + ":";
  for (int i = 0; i < 5; ++i) {
    s += " " + issue.options[i] + "=" +
         std::to_string(manager_side ? issue.points_a[i] : issue.points_b[i]);
    if (i < 4) s += ",";
  }
  return s;
}

inline std::string framing_sentence(const std::string& goal_framing) {
  if (goal_framing == "competitive")
    return " Treat this as a competitive negotiation and maximize your own point total.";
  if (goal_framing == "collaborative")
    return " Aim for an agreement both sides can feel good about while protecting your point "
           "total.";
  if (goal_framing.empty() || goal_framing == "balanced") return "";
  throw ConfigError("unknown goal framing: " + goal_framing);
}

}  // namespace detail

/// Human-AI job negotiation over starting date and salary. agent_a is the
/// AI hiring manager unless manager_opens is false.
inline ScenarioBundle make_job_scenario(const std::string& goal_framing = "balanced",
                                        bool manager_opens = true) {
  ScenarioBundle bundle;
  bundle.spec.id = goal_framing == "balanced" || goal_framing.empty()
                       ? "job_negotiation"
                       : "job_negotiation." + goal_framing;
  bundle.spec.kind = ScenarioKind::JobNegotiation;
  bundle.spec.constraints["relationship"] = "strangers";
  bundle.spec.issue_set = job_negotiation_issues();
  bundle.spec.shared_context =
      "An AI hiring manager and a job candidate are negotiating the final terms of a job "
      "offer. Two terms are open: the starting date (6.1, 6.15, 7.1, 7.15, or 8.1) and the "
      "salary ($100k, $105k, $110k, $115k, or $120k). The candidate has verbally accepted the "
      "role; both sides want to settle the remaining terms.";

  std::string manager_points;
  std::string candidate_points;
  for (const Issue& issue : bundle.spec.issue_set) {
    manager_points += "  " + detail::point_column_text(issue, true) + "\n";
    candidate_points += "  " + detail::point_column_text(issue, false) + "\n";
  }

  const std::string framing = detail::framing_sentence(goal_framing);
  const std::string manager_goal =
      "You are the hiring manager negotiating the starting date and salary of a job offer. "
      "Reach an agreement worth as many points to you as possible. Your private point "
      "schedule:\n" +
      manager_points + "No agreement earns you zero points." + framing;
  const std::string candidate_goal =
      "You are the job candidate negotiating the starting date and salary of your offer. Reach "
      "an agreement worth as many points to you as possible. Your private point schedule:\n" +
      candidate_points + "No agreement earns you zero points." + framing;
  const std::string manager_notes = "Private point schedule (manager):\n" + manager_points;
  const std::string candidate_notes = "Private point schedule (candidate):\n" + candidate_points;

  if (manager_opens) {
    bundle.role_a = "manager";
    bundle.role_b = "candidate";
    bundle.goal_a = manager_goal;
    bundle.goal_b = candidate_goal;
    bundle.notes_a = manager_notes;
    bundle.notes_b = candidate_notes;
  } else {
    bundle.role_a = "candidate";
    bundle.role_b = "manager";
    bundle.goal_a = candidate_goal;
    bundle.goal_b = manager_goal;
    bundle.notes_a = candidate_notes;
    bundle.notes_b = manager_notes;
  }
  return bundle;
}

}  // namespace negotia
