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

// entrench: command-line front end. Exit codes: 0 ok, 1 usage, 2 parse or
// validation failure, 3 I/O failure.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "entrench/error.hpp"
#include "entrench/io.hpp"
#include "entrench/logic.hpp"
#include "entrench_tools/api.hpp"
#include "entrench_tools/json_codec.hpp"

namespace fs = std::filesystem;
using namespace entrench;
using entrench::tools::Json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

// Raised when a command finishes with a non-zero status it already reported.
struct Exit {
  int code;
};

struct Options {
  std::string profile;
  std::string mode;
  std::optional<double> epsilon;
  std::optional<double> lambda;
  std::optional<double> p_rel;
  bool json = false;
};

fs::path home() {
  if (const char* env = std::getenv("ENTRENCH_HOME"); env != nullptr && *env != '\0') {
    return env;
  }
  if (const char* user = std::getenv("HOME"); user != nullptr && *user != '\0') {
    return fs::path(user) / ".entrench";
  }
  return ".entrench";
}

fs::path profile_dir(const Options& o) {
  return o.profile.empty() ? home() / "default" : fs::path(o.profile);
}

fs::path profile_file(const Options& o) { return profile_dir(o) / "profile.tsv"; }
fs::path queue_file(const Options& o) { return profile_dir(o) / "queue.tsv"; }

AgentProfile load(const Options& o) { return read_profile(read_file(profile_file(o))); }

void save(const Options& o, const AgentProfile& p) {
  write_file(profile_file(o), write_profile(p));
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + "  " : s + std::string(width - s.size() + 2, ' ');
}

void print_table(const EntrenchmentRanking& r) {
  std::size_t width = std::string("Formula").size();
  for (const auto& b : r.sorted()) width = std::max(width, b.formula.to_string().size());
  for (const auto& s : r.schemas()) width = std::max(width, s.schema.to_string().size());
  std::cout << pad("Formula", width) << "B\n";
  for (const auto& b : r.sorted()) {
    std::cout << pad(b.formula.to_string(), width) << b.rank.to_string()
              << (b.is_protected ? "  P" : "") << '\n';
  }
  for (const auto& s : r.schemas()) {
    std::cout << pad(s.schema.to_string(), width) << s.rank.to_string()
              << (s.is_protected ? "  P" : "") << '\n';
  }
}

void print_transition(const EntrenchmentRanking& before, const EntrenchmentRanking& after) {
  std::map<std::string, std::pair<std::string, std::string>> rows;
  for (const auto& [text, b] : before.beliefs()) rows[text].first = b.rank.to_string();
  for (const auto& [text, b] : after.beliefs()) rows[text].second = b.rank.to_string();
  std::size_t width = std::string("Formula").size();
  for (const auto& [text, r] : rows) width = std::max(width, text.size());
  std::cout << pad("Formula", width) << "Before  After\n";
  for (const auto& [text, r] : rows) {
    const std::string b = r.first.empty() ? "0.000" : r.first;
    const std::string a = r.second.empty() ? "0.000" : r.second;
    std::cout << pad(text, width) << b << "   " << a << (a != b ? "  *" : "") << '\n';
  }
}

void print_report(const AdjustmentReport& r) {
  std::cout << r.operation << ' ' << r.formula << ' ' << r.target.to_string() << '\n';
  for (const auto& n : r.notes) std::cout << "  ; " << n << '\n';
  for (const auto& c : r.changes) {
    std::cout << "  " << c.formula << ": " << c.before.to_string() << " -> "
              << c.after.to_string() << '\n';
  }
  for (const auto& c : r.grounded_constants) std::cout << "  + grounded " << c << '\n';
}

ClassifierConfig config_from(const Options& o) {
  ClassifierConfig c;
  if (o.epsilon) c.epsilon = *o.epsilon;
  if (o.lambda) c.lambda = *o.lambda;
  if (o.p_rel) c.p_rel = *o.p_rel;
  return c;
}

Mode mode_from(const Options& o, Mode fallback) {
  return o.mode.empty() ? fallback : parse_mode(o.mode);
}

std::vector<Document> load_corpus(const std::string& path) {
  return read_corpus(read_file(path));
}

// --- commands ----------------------------------------------------------------

void cmd_init(const Options& o, const std::string& domain, const std::string& constants,
              bool force) {
  if (fs::exists(profile_file(o)) && !force) {
    throw IoError(profile_file(o).string() + " exists; pass --force to replace it");
  }
  EntrenchmentRanking r = domain.empty() ? EntrenchmentRanking{} : read_belief_base(read_file(domain));
  std::set<std::string> extra;
  for (const auto& c : split_list(constants)) extra.insert(to_lower_ascii(c));
  if (!extra.empty()) r.ground_new_constants(extra);
  const AgentProfile p = make_profile(std::move(r), config_from(o), mode_from(o, Mode::kPaper));
  save(o, p);
  if (o.json) {
    emit({{"profile", profile_dir(o).string()}, {"beliefs", p.ranking.size()}});
  } else {
    std::cout << "initialised " << profile_dir(o).string() << " with " << p.ranking.size()
              << " beliefs\n";
  }
}

void cmd_learn(const Options& o, const std::string& corpus, bool table) {
  const AgentProfile before = load(o);
  const LearnResult result = replay(before, load_corpus(corpus));
  save(o, result.profile);
  if (o.json) {
    Json reports = Json::array();
    for (const auto& r : result.reports) reports.push_back(tools::to_json(r));
    emit({{"reports", reports}, {"history_length", result.profile.history.size()}});
    return;
  }
  for (const auto& r : result.reports) print_report(r);
  if (table) print_transition(before.ranking, result.profile.ranking);
}

void cmd_filter(const Options& o, const std::string& corpus, bool all) {
  const AgentProfile p = load(o);
  Json out = Json::array();
  for (const Document& d : load_corpus(corpus)) {
    if (d.label && !all) continue;
    const Verdict v = filter(p, d);
    if (o.json) {
      Json j = tools::to_json(v);
      j["id"] = d.id;
      out.push_back(j);
    } else {
      std::cout << d.id << '\t' << (v.relevant ? "relevant" : "not-relevant") << '\t'
                << v.degree.to_string() << '\n';
    }
  }
  if (o.json) emit(out);
}

void cmd_show(const Options& o) {
  const AgentProfile p = load(o);
  if (o.json) {
    Json j = tools::beliefs_json(p.ranking);
    j["mode"] = to_string(p.mode);
    emit(j);
    return;
  }
  print_table(p.ranking);
}

void cmd_explain(const Options& o, const std::string& doc_id, const std::string& corpus,
                 const std::string& keywords, const std::string& formula) {
  const AgentProfile p = load(o);
  Explanation e;
  if (!formula.empty()) {
    e = explain(p, parse_formula(formula));
  } else if (!keywords.empty()) {
    e = explain(p, make_document(doc_id.empty() ? "query" : doc_id, split_list(keywords)));
  } else {
    if (corpus.empty() || doc_id.empty()) {
      throw PreconditionError("explain needs --formula, --keywords, or a document id with --corpus");
    }
    const auto docs = load_corpus(corpus);
    auto it = std::find_if(docs.begin(), docs.end(),
                           [&](const Document& d) { return d.id == doc_id; });
    if (it == docs.end()) throw PreconditionError("no document '" + doc_id + "' in " + corpus);
    e = explain(p, *it);
  }
  if (o.json) {
    emit(tools::to_json(e));
    return;
  }
  std::cout << "query: " << e.query << '\n'
            << "verdict: " << (e.verdict.relevant ? "relevant" : "not-relevant") << '\n'
            << "degree: " << e.verdict.degree.to_string() << '\n'
            << "incons: " << e.inconsistency.to_string() << '\n';
  for (const auto& f : e.verdict.premises) std::cout << "premise: " << f.to_string() << '\n';
}

void cmd_validate(const Options& o, const std::string& file) {
  EntrenchmentRanking r;
  Mode mode = mode_from(o, Mode::kPaper);
  if (file.empty()) {
    const AgentProfile p = load(o);
    r = p.ranking;
    mode = mode_from(o, p.mode);
  } else {
    r = read_belief_base(read_file(file));
  }
  const auto violations = validate(r, mode);
  if (o.json) {
    Json list = Json::array();
    for (const auto& v : violations) list.push_back(tools::to_json(v));
    emit({{"mode", to_string(mode)}, {"valid", !has_errors(violations)}, {"violations", list}});
  } else {
    for (const auto& v : violations) {
      std::cout << (v.severity == Violation::Severity::kError ? "error" : "warning") << ' '
                << v.condition << ": " << v.message << '\n';
    }
    if (!has_errors(violations)) std::cout << "valid (" << to_string(mode) << " mode)\n";
  }
  if (has_errors(violations)) throw Exit{kExitInvalid};
}

void cmd_export(const Options& o, const std::string& output) {
  const std::string text = write_profile(load(o));
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_file(output, text);
  }
}

void cmd_import(const Options& o, const std::string& input, bool force) {
  if (fs::exists(profile_file(o)) && !force) {
    throw IoError(profile_file(o).string() + " exists; pass --force to replace it");
  }
  const AgentProfile p = read_profile(read_file(input));
  if (!(replay_history(p) == p.ranking)) {
    throw PreconditionError("history does not reproduce the stored ranking");
  }
  save(o, p);
  if (!o.json) std::cout << "imported " << input << " into " << profile_dir(o).string() << '\n';
}

void cmd_adjust(const Options& o, const std::string& formula, const std::string& rank) {
  AgentProfile p = load(o);
  Adjustment a = maxi_adjust(p.ranking, parse_formula(formula), Rank::parse(rank));
  a.report.notes.insert(a.report.notes.begin(), "manual adjustment");
  p.ranking = std::move(a.ranking);
  p.history.push_back(a.report);
  save(o, p);
  if (o.json) {
    emit(tools::to_json(a.report));
  } else {
    print_report(a.report);
  }
}

void cmd_degree(const Options& o, const std::string& formula) {
  const AgentProfile p = load(o);
  const Formula f = parse_formula(formula);
  EntrenchmentRanking r = p.ranking;
  r.ground_new_constants(constants_of(f));
  const Rank d = degree(r, f);
  if (o.json) {
    emit({{"formula", f.to_string()}, {"degree", d.to_string()}});
  } else {
    std::cout << d.to_string() << '\n';
  }
}

void cmd_enqueue(const Options& o, const std::string& corpus) {
  std::vector<Document> pending;
  if (fs::exists(queue_file(o))) pending = read_corpus(read_file(queue_file(o)));
  std::set<std::string> ids;
  for (const auto& d : pending) ids.insert(d.id);
  std::size_t added = 0;
  for (Document d : load_corpus(corpus)) {
    if (!ids.insert(d.id).second) continue;
    d.label.reset();
    pending.push_back(std::move(d));
    ++added;
  }
  write_file(queue_file(o), write_corpus(pending));
  if (!o.json) std::cout << "queued " << added << " documents\n";
}

void cmd_serve(const Options& o, const std::string& listen, std::string token,
               const std::string& root) {
  if (token.empty()) {
    if (const char* env = std::getenv("ENTRENCH_TOKEN"); env != nullptr) token = env;
  }
  if (token.empty()) throw PreconditionError("serve needs --token or ENTRENCH_TOKEN");
  const std::size_t colon = listen.rfind(':');
  if (colon == std::string::npos) throw PreconditionError("--listen expects host:port");
  const std::string host = listen.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(listen.substr(colon + 1));
  } catch (const std::exception&) {
    throw PreconditionError("invalid port in '" + listen + "'");
  }
  tools::ProfileStore store(root.empty() ? home() : fs::path(root));
  tools::Api api(store, token);
  if (!o.json) std::cerr << "serving " << store.root().string() << " on " << listen << '\n';
  tools::serve(api, host, port);
}

int report_error(const Options& o, int code, const char* kind, const std::string& message) {
  if (o.json) {
    emit({{"error", {{"code", code}, {"kind", kind}, {"message", message}}}});
  } else {
    std::cerr << "entrench: " << kind << " error: " << message << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Belief-revision filtering agent"};
  app.require_subcommand(1);
  app.add_option("--profile", o.profile, "Profile directory (default $ENTRENCH_HOME/default)");
  app.add_option("--mode", o.mode, "Ranking mode: strict or paper")
      ->check(CLI::IsMember({"strict", "paper"}));
  app.add_option("--epsilon", o.epsilon, "Preference amplitude (init)");
  app.add_option("--lambda", o.lambda, "Neutrality threshold (init)");
  app.add_option("--prel", o.p_rel, "Prior relevance probability (init)");
  app.add_flag("--json", o.json, "Machine-readable output");

  std::string domain, constants, corpus, file, doc_id, keywords, formula, rank, output;
  std::string listen = "127.0.0.1:8080", token, root;
  bool force = false, table = false, all = false;

  auto* init = app.add_subcommand("init", "Create a profile");
  init->add_option("--domain", domain, "Belief-base file of domain knowledge")
      ->check(CLI::ExistingFile);
  init->add_option("--constants", constants, "Comma-separated constants to ground schemas over");
  init->add_flag("--force", force, "Replace an existing profile");

  auto* learn_cmd = app.add_subcommand("learn", "Replay a labelled corpus");
  learn_cmd->add_option("corpus", corpus, "Corpus file")->required();
  learn_cmd->add_flag("--table", table, "Print a before/after table");

  auto* filter_cmd = app.add_subcommand("filter", "Verdict for each unlabelled document");
  filter_cmd->add_option("corpus", corpus, "Corpus file")->required();
  filter_cmd->add_flag("--all", all, "Include labelled documents");

  auto* show = app.add_subcommand("show", "Print the ranking");

  auto* explain_cmd = app.add_subcommand("explain", "Explain one verdict");
  explain_cmd->add_option("doc-id", doc_id, "Document id");
  explain_cmd->add_option("--corpus", corpus, "Corpus holding the document");
  explain_cmd->add_option("--keywords", keywords, "Comma-separated keywords");
  explain_cmd->add_option("--formula", formula, "Query formula");

  auto* validate_cmd = app.add_subcommand("validate", "Check the ranking conditions");
  validate_cmd->add_option("--file", file, "Validate a belief-base file instead");

  auto* export_cmd = app.add_subcommand("export", "Write the profile text");
  export_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* import_cmd = app.add_subcommand("import", "Load a profile text");
  import_cmd->add_option("file", file, "Profile file")->required();
  import_cmd->add_flag("--force", force, "Replace an existing profile");

  auto* adjust = app.add_subcommand("adjust", "Apply one maxi-adjustment");
  adjust->add_option("formula", formula, "Formula")->required();
  adjust->add_option("rank", rank, "Target rank")->required();

  auto* degree_cmd = app.add_subcommand("degree", "Degree of acceptance of a formula");
  degree_cmd->add_option("formula", formula, "Formula")->required();

  auto* enqueue = app.add_subcommand("enqueue", "Queue documents for judgment");
  enqueue->add_option("corpus", corpus, "Corpus file")->required();

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
  serve_cmd->add_option("--listen", listen, "host:port");
  serve_cmd->add_option("--token", token, "Bearer token (or ENTRENCH_TOKEN)");
  serve_cmd->add_option("--root", root, "Profile root (default $ENTRENCH_HOME)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (init->parsed()) cmd_init(o, domain, constants, force);
    if (learn_cmd->parsed()) cmd_learn(o, corpus, table);
    if (filter_cmd->parsed()) cmd_filter(o, corpus, all);
    if (show->parsed()) cmd_show(o);
    if (explain_cmd->parsed()) cmd_explain(o, doc_id, corpus, keywords, formula);
    if (validate_cmd->parsed()) cmd_validate(o, file);
    if (export_cmd->parsed()) cmd_export(o, output);
    if (import_cmd->parsed()) cmd_import(o, file, force);
    if (adjust->parsed()) cmd_adjust(o, formula, rank);
    if (degree_cmd->parsed()) cmd_degree(o, formula);
    if (enqueue->parsed()) cmd_enqueue(o, corpus);
    if (serve_cmd->parsed()) cmd_serve(o, listen, token, root);
  } catch (const Exit& e) {
    return e.code;
  } catch (const IoError& e) {
    return report_error(o, kExitIo, "io", e.what());
  } catch (const ParseError& e) {
    return report_error(o, kExitInvalid, "parse", e.what());
  } catch (const PreconditionError& e) {
    return report_error(o, kExitInvalid, "precondition", e.what());
  } catch (const std::exception& e) {
    return report_error(o, kExitIo, "internal", e.what());
  }
  return 0;
}
