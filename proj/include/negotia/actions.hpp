#pragma once

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "negotia/money.hpp"
#include "negotia/types.hpp"
#include "negotia/util.hpp"

namespace negotia {

/// One agent move: what was said plus any machine-readable offer.
/// Agreement detection works on structured offers only, never prose.
struct AgentAction {
  TurnAction action = TurnAction::None;
  std::string utterance;
  std::optional<Cents> offer_price;
  std::vector<int> offer_options;  // one option index per issue

  bool has_offer() const { return offer_price.has_value() || !offer_options.empty(); }

  bool same_offer(const AgentAction& other) const {
    if (offer_price && other.offer_price) return *offer_price == *other.offer_price;
    if (!offer_options.empty() && !other.offer_options.empty())
      return offer_options == other.offer_options;
    return false;
  }
};

/// Canonical structured block, e.g. "{action: speak, offer_price: 160.0}".
inline std::string format_offer_block(const AgentAction& a) {
  std::string block = "{action: " + std::string(to_string(a.action));
  if (a.offer_price) block += ", offer_price: " + format_dollars(*a.offer_price);
  if (!a.offer_options.empty()) {
    block += ", offer_options: [";
    for (std::size_t i = 0; i < a.offer_options.size(); ++i) {
      if (i) block += ", ";
      block += std::to_string(a.offer_options[i]);
    }
    block += "]";
  }
  return block + "}";
}

namespace detail {

inline std::optional<Cents> parse_price_token(const std::string& s) {
  static const std::regex price_re(R"(\$?\s*(-?\d+(?:\.\d+)?))");
  std::smatch m;
  if (!std::regex_search(s, m, price_re)) return std::nullopt;
  return cents_from_dollars(std::stod(m[1]));
}

}  // namespace detail

/// Classifies a raw backend reply. A trailing fenced block carrying an
/// "action" key is authoritative when present; otherwise any non-empty
/// text is a plain Speak and a bare LEAVE token is a walkaway.
inline AgentAction parse_action(const std::string& raw) {
  AgentAction out;
  const std::string text(trim(raw));
  if (text.empty()) return out;  // None

  if (to_lower_ascii(text) == "leave") {
    out.action = TurnAction::Leave;
    return out;
  }

  // Last {...} block that mentions an action key.
  std::size_t open = std::string::npos;
  std::size_t close = std::string::npos;
  for (std::size_t pos = text.rfind('{'); pos != std::string::npos;
       pos = pos == 0 ? std::string::npos : text.rfind('{', pos - 1)) {
    std::size_t end = text.find('}', pos);
    if (end == std::string::npos) continue;
    if (text.find("action", pos) < end) {
      open = pos;
      close = end;
      break;
    }
  }

  if (open == std::string::npos) {
    out.action = TurnAction::Speak;
    out.utterance = text;
    return out;
  }

  const std::string block = text.substr(open + 1, close - open - 1);

  static const std::regex action_re(R"("?action"?\s*:\s*"?([A-Za-z]+)"?)");
  static const std::regex price_re(R"("?offer_price"?\s*:\s*"?\$?\s*(-?\d+(?:\.\d+)?))");
  static const std::regex options_re(R"("?offer_options"?\s*:\s*\[([^\]]*)\])");

  std::smatch m;
  if (std::regex_search(block, m, action_re)) {
    const std::string verb = to_lower_ascii(m[1]);
    if (verb == "speak") out.action = TurnAction::Speak;
    else if (verb == "leave") out.action = TurnAction::Leave;
    else out.action = TurnAction::None;
  }
  if (std::regex_search(block, m, price_re)) out.offer_price = cents_from_dollars(std::stod(m[1]));
  if (std::regex_search(block, m, options_re)) {
    const std::string list = m[1];
    static const std::regex int_re(R"(-?\d+)");
    for (auto it = std::sregex_iterator(list.begin(), list.end(), int_re);
         it != std::sregex_iterator(); ++it)
      out.offer_options.push_back(std::stoi(it->str()));
  }

  // Prose is everything outside the block; a bare offer block still reads
  // as speech, so synthesize a minimal utterance for the transcript.
  std::string prose = text.substr(0, open) + text.substr(close + 1);
  prose = std::string(trim(prose));
  if (out.action == TurnAction::Speak) {
    if (!prose.empty()) {
      out.utterance = prose;
    } else if (out.offer_price) {
      out.utterance = "My offer is $" + format_dollars(*out.offer_price) + ".";
    } else if (!out.offer_options.empty()) {
      out.utterance = "Here is my offer.";
    } else {
      out.action = TurnAction::None;
    }
  }
  return out;
}

}  // namespace negotia
