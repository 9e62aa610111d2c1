#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "negotia/types.hpp"

namespace negotia {

namespace fs = std::filesystem;

/// Writes one JSON document per episode, named by episode id.
/// Returns the file path.
inline fs::path save_episode(const EpisodeRecord& record, const fs::path& episodes_dir) {
  fs::create_directories(episodes_dir);
  const fs::path path = episodes_dir / (record.episode_id + ".json");
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path.string());
  out << Json(record).dump(2) << "\n";
  if (!out) throw DataError("write failed: " + path.string());
  return path;
}

inline EpisodeRecord load_episode(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open episode file", path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed episode JSON: ") + e.what(), path.string(), e.byte);
  }
  try {
    return j.get<EpisodeRecord>();
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad episode document: ") + e.what(), path.string());
  }
}

// ---------------------------------------------------------------------------
// Run-level JSONL index: one line per episode.
// ---------------------------------------------------------------------------

struct IndexEntry {
  std::string episode_id;
  std::string scenario_id;
  std::string cell;  // canonical treatment label, e.g. "agr=High|ext=Low|ai=HHL"
  std::string termination;  // empty for failed episodes
  std::string status = "ok";  // ok | failed
  std::string cause;  // populated when status == failed
};

inline void to_json(Json& j, const IndexEntry& x) {
  j = Json{{"episode_id", x.episode_id},
           {"scenario_id", x.scenario_id},
           {"cell", x.cell},
           {"termination", x.termination},
           {"status", x.status}};
  if (!x.cause.empty()) j["cause"] = x.cause;
}
inline void from_json(const Json& j, IndexEntry& x) {
  x.episode_id = detail::require_field<std::string>(j, "episode_id");
  x.scenario_id = detail::require_field<std::string>(j, "scenario_id");
  x.cell = detail::require_field<std::string>(j, "cell");
  x.termination = detail::field_or<std::string>(j, "termination", "");
  x.status = detail::field_or<std::string>(j, "status", "ok");
  x.cause = detail::field_or<std::string>(j, "cause", "");
}

/// Append-only JSONL ledger owned by a single logical writer.
class RunIndex {
public:
  static std::vector<IndexEntry> load(const fs::path& path) {
    std::vector<IndexEntry> entries;
    std::ifstream in(path);
    if (!in) return entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        entries.push_back(Json::parse(line).get<IndexEntry>());
      } catch (const Json::exception& e) {
        throw ParseError(std::string("bad index line: ") + e.what(),
                         path.string() + ":" + std::to_string(lineno));
      }
    }
    return entries;
  }

  static void rewrite(const fs::path& path, const std::vector<IndexEntry>& entries) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw DataError("cannot open index for writing: " + path.string());
    for (const auto& e : entries) out << Json(e).dump() << "\n";
  }

  static void append(const fs::path& path, const IndexEntry& entry) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::app);
    if (!out) throw DataError("cannot open index for appending: " + path.string());
    out << Json(entry).dump() << "\n";
  }
};

}  // namespace negotia
