// Copyright 2026 The entrench Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entrench/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "entrench/error.hpp"

namespace entrench {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    std::size_t k = s.find(sep);
    out.push_back(s.substr(0, k));
    if (k == std::string_view::npos) return out;
    s.remove_prefix(k + 1);
  }
}

bool skippable(std::string_view line) {
  return line.empty() || line.front() == '#' ||
         line.find_first_not_of(" \t") == std::string_view::npos;
}

[[noreturn]] void fail(const Line& line, const std::string& message) {
  throw ParseError::at_line(message, line.number);
}

// Re-raises errors from nested parsers with the line number attached.
template <typename F>
auto at_line(const Line& line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    fail(line, e.what());
  } catch (const PreconditionError& e) {
    fail(line, e.what());
  }
}

std::uint64_t parse_count(const Line& line, std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(line, "invalid count '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(const Line& line, std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(line, "invalid number '" + std::string(s) + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

const char* flag(bool is_protected) { return is_protected ? "P" : "-"; }

bool parse_flag(const Line& line, std::string_view s) {
  if (s == "P") return true;
  if (s == "-" || s.empty()) return false;
  fail(line, "unknown flag '" + std::string(s) + "'");
}

// Accumulates belief-base lines.
class BeliefBaseReader {
 public:
  void consume(const Line& line) {
    if (skippable(line.text)) return;
    if (line.text.starts_with("@constants")) {
      auto fields = split(line.text, '\t');
      saw_constants_ = true;
      if (fields.size() > 1) {
        for (auto c : split(fields[1], ',')) {
          if (!c.empty()) constants_.insert(to_lower_ascii(c));
        }
      }
      return;
    }
    Rank rank = Rank::top();
    bool is_protected = true;
    std::string_view text = line.text;
    if (line.text.find('\t') != std::string_view::npos) {
      auto fields = split(line.text, '\t');
      if (fields.size() != 3) fail(line, "expected rank<TAB>flags<TAB>formula");
      rank = at_line(line, [&] { return Rank::parse(fields[0]); });
      is_protected = parse_flag(line, fields[1]);
      text = fields[2];
    }
    Statement s = at_line(line, [&] { return parse_statement(text); });
    if (rank.is_zero()) return;
    if (auto* f = std::get_if<Formula>(&s)) {
      ranking_.set(*f, rank, is_protected);
    } else {
      ranking_.add_schema(std::get<Schema>(s), rank, is_protected, false);
    }
  }

  EntrenchmentRanking finish() {
    if (saw_constants_) {
      ranking_.mark_grounded(constants_);
    } else {
      ranking_.ground_new_constants();
    }
    return std::move(ranking_);
  }

 private:
  EntrenchmentRanking ranking_;
  std::set<std::string> constants_;
  bool saw_constants_ = false;
};

void write_belief_lines(std::ostringstream& out, const EntrenchmentRanking& ranking) {
  for (const Belief& b : ranking.sorted()) {
    out << b.rank.to_string() << '\t' << flag(b.is_protected) << '\t'
        << b.formula.to_string() << '\n';
  }
  for (const RankedSchema& s : ranking.schemas()) {
    out << s.rank.to_string() << '\t' << flag(s.is_protected) << '\t'
        << s.schema.to_string() << '\n';
  }
  if (!ranking.schemas().empty()) {
    out << "@constants\t";
    bool first = true;
    for (const auto& c : ranking.constants()) {
      if (!first) out << ',';
      out << c;
      first = false;
    }
    out << '\n';
  }
}

}  // namespace

EntrenchmentRanking read_belief_base(std::string_view text) {
  BeliefBaseReader reader;
  for (const Line& line : split_lines(text)) reader.consume(line);
  return reader.finish();
}

std::string write_belief_base(const EntrenchmentRanking& ranking) {
  std::ostringstream out;
  write_belief_lines(out, ranking);
  return out.str();
}

std::vector<Document> read_corpus(std::string_view text) {
  std::vector<Document> out;
  std::set<std::string> ids;
  for (const Line& line : split_lines(text)) {
    if (skippable(line.text)) continue;
    auto fields = split(line.text, '\t');
    if (fields.size() != 3) fail(line, "expected id<TAB>label<TAB>keywords");
    std::optional<Judgment> label;
    if (fields[1] == "R") {
      label = Judgment::kRelevant;
    } else if (fields[1] == "N") {
      label = Judgment::kNonRelevant;
    } else if (fields[1] != "?") {
      fail(line, "label must be R, N or ?");
    }
    std::string id(fields[0]);
    if (id.empty()) fail(line, "empty document id");
    if (!ids.insert(id).second) fail(line, "duplicate document id '" + id + "'");
    std::vector<std::string> keywords;
    for (auto k : split(fields[2], ',')) keywords.emplace_back(k);
    out.push_back(at_line(line, [&] { return make_document(id, keywords, label); }));
  }
  return out;
}

std::string write_corpus(std::span<const Document> corpus) {
  std::ostringstream out;
  for (const Document& d : corpus) {
    out << d.id << '\t';
    if (!d.label) {
      out << '?';
    } else {
      out << (*d.label == Judgment::kRelevant ? 'R' : 'N');
    }
    out << '\t';
    bool first = true;
    for (const auto& k : d.keywords) {
      if (!first) out << ',';
      out << k;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string write_report(const AdjustmentReport& report) {
  std::ostringstream out;
  out << "@report\t" << report.operation << '\t' << report.target.to_string() << '\t'
      << report.formula << '\n';
  for (const RankChange& c : report.changes) {
    out << "~\t" << c.before.to_string() << '\t' << c.after.to_string() << '\t'
        << flag(c.is_protected) << '\t' << c.formula << '\n';
  }
  for (const auto& c : report.grounded_constants) out << "+\t" << c << '\n';
  for (const auto& n : report.notes) out << ";\t" << n << '\n';
  return out.str();
}

std::string write_profile(const AgentProfile& profile) {
  std::ostringstream out;
  out << "# entrench profile\n";
  out << "[config]\n";
  out << "mode\t" << to_string(profile.mode) << '\n';
  out << "epsilon\t" << format_double(profile.config.epsilon) << '\n';
  out << "lambda\t" << format_double(profile.config.lambda) << '\n';
  out << "prel\t" << format_double(profile.config.p_rel) << '\n';
  out << "[stats]\n";
  out << "@documents\t" << profile.stats.relevant_documents << '\t'
      << profile.stats.non_relevant_documents << '\n';
  for (const auto& [k, c] : profile.stats.keywords) {
    out << k << '\t' << c.relevant << '\t' << c.non_relevant << '\n';
  }
  out << "[genesis]\n";
  write_belief_lines(out, profile.genesis);
  out << "[beliefs]\n";
  write_belief_lines(out, profile.ranking);
  out << "[history]\n";
  for (const auto& r : profile.history) out << write_report(r);
  return out.str();
}

AgentProfile read_profile(std::string_view text) {
  AgentProfile p;
  enum class Section { kNone, kConfig, kStats, kGenesis, kBeliefs, kHistory };
  Section section = Section::kNone;
  BeliefBaseReader genesis;
  BeliefBaseReader beliefs;
  std::set<std::string> seen;

  for (const Line& line : split_lines(text)) {
    if (skippable(line.text)) continue;
    if (line.text.front() == '[') {
      std::string name(line.text);
      if (!seen.insert(name).second) fail(line, "duplicate section " + name);
      if (name == "[config]") {
        section = Section::kConfig;
      } else if (name == "[stats]") {
        section = Section::kStats;
      } else if (name == "[genesis]") {
        section = Section::kGenesis;
      } else if (name == "[beliefs]") {
        section = Section::kBeliefs;
      } else if (name == "[history]") {
        section = Section::kHistory;
      } else {
        fail(line, "unknown section " + name);
      }
      continue;
    }
    auto fields = split(line.text, '\t');
    switch (section) {
      case Section::kNone:
        fail(line, "record outside any section");
      case Section::kConfig: {
        if (fields.size() != 2) fail(line, "expected key<TAB>value");
        if (fields[0] == "mode") {
          p.mode = at_line(line, [&] { return parse_mode(fields[1]); });
        } else if (fields[0] == "epsilon") {
          p.config.epsilon = parse_double(line, fields[1]);
        } else if (fields[0] == "lambda") {
          p.config.lambda = parse_double(line, fields[1]);
        } else if (fields[0] == "prel") {
          p.config.p_rel = parse_double(line, fields[1]);
        } else {
          fail(line, "unknown config key '" + std::string(fields[0]) + "'");
        }
        break;
      }
      case Section::kStats: {
        if (fields.size() != 3) fail(line, "expected keyword<TAB>df_rel<TAB>df_nrel");
        if (fields[0] == "@documents") {
          p.stats.relevant_documents = parse_count(line, fields[1]);
          p.stats.non_relevant_documents = parse_count(line, fields[2]);
        } else {
          std::string k = at_line(line, [&] { return canonical_keyword(fields[0]); });
          p.stats.keywords[k] = {parse_count(line, fields[1]),
                                 parse_count(line, fields[2])};
        }
        break;
      }
      case Section::kGenesis:
        genesis.consume(line);
        break;
      case Section::kBeliefs:
        beliefs.consume(line);
        break;
      case Section::kHistory: {
        if (fields[0] == "@report") {
          if (fields.size() != 4) fail(line, "expected @report<TAB>op<TAB>rank<TAB>formula");
          AdjustmentReport r;
          r.operation = std::string(fields[1]);
          r.target = at_line(line, [&] { return Rank::parse(fields[2]); });
          r.formula = std::string(fields[3]);
          p.history.push_back(std::move(r));
          break;
        }
        if (p.history.empty()) fail(line, "history record before any @report");
        AdjustmentReport& r = p.history.back();
        if (fields[0] == "~") {
          if (fields.size() != 5) fail(line, "expected ~<TAB>before<TAB>after<TAB>flags<TAB>formula");
          Formula f = at_line(line, [&] { return parse_formula(fields[4]); });
          r.changes.push_back({f.to_string(),
                               at_line(line, [&] { return Rank::parse(fields[1]); }),
                               at_line(line, [&] { return Rank::parse(fields[2]); }),
                               parse_flag(line, fields[3])});
        } else if (fields[0] == "+") {
          if (fields.size() != 2) fail(line, "expected +<TAB>constant");
          r.grounded_constants.emplace_back(fields[1]);
        } else if (fields[0] == ";") {
          std::string note(line.text.substr(2));
          r.notes.push_back(std::move(note));
        } else {
          fail(line, "unknown history record '" + std::string(fields[0]) + "'");
        }
        break;
      }
    }
  }
  p.config.check();
  p.genesis = genesis.finish();
  p.ranking = beliefs.finish();
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace " + path.string() + ": " + ec.message());
}

}  // namespace entrench
