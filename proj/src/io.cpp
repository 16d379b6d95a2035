// Copyright 2026 The RECOL Authors
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

#include "recol/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "json.hpp"

#include "recol/errors.hpp"

namespace recol::io {
namespace {

using nlohmann::json;

// Splits a line into whitespace-separated tokens without allocating.
class Tokens {
 public:
  explicit Tokens(std::string_view line) : rest_(line) {}

  std::optional<std::string_view> next() {
    const auto begin = rest_.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return std::nullopt;
    rest_.remove_prefix(begin);
    const auto end = std::min(rest_.find_first_of(" \t\r"), rest_.size());
    const auto token = rest_.substr(0, end);
    rest_.remove_prefix(end);
    return token;
  }

 private:
  std::string_view rest_;
};

template <typename Int>
std::optional<Int> to_int(std::optional<std::string_view> token) {
  if (!token) return std::nullopt;
  Int value{};
  const auto* last = token->data() + token->size();
  const auto [ptr, ec] = std::from_chars(token->data(), last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::string_view first_token(std::string_view line) {
  Tokens tokens(line);
  return tokens.next().value_or(std::string_view{});
}

Graph build_or_throw(std::size_t n, const std::vector<Edge>& edges, std::size_t line) {
  try {
    return build_graph(n, edges);
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

LabelMap LabelMap::one_based(std::size_t n) {
  LabelMap map;
  map.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.labels_[i] = static_cast<std::int64_t>(i) + 1;
  // ids_ stays empty: find() falls back to arithmetic for this layout.
  return map;
}

Vertex LabelMap::intern(std::int64_t label) {
  const auto [it, inserted] = ids_.try_emplace(label, static_cast<Vertex>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::optional<Vertex> LabelMap::find(std::int64_t label) const {
  if (ids_.empty()) {
    if (label >= 1 && static_cast<std::size_t>(label) <= labels_.size()) {
      return static_cast<Vertex>(label - 1);
    }
    return std::nullopt;
  }
  const auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

ParsedGraph parse_dimacs_col(std::istream& in) {
  ParsedGraph parsed;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    Tokens tokens(line);
    const auto kind = tokens.next();
    if (!kind || *kind == "c") continue;
    if (*kind == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      const auto format = tokens.next();
      const auto vertices = to_int<std::size_t>(tokens.next());
      const auto count = to_int<std::size_t>(tokens.next());
      if (!format || (*format != "edge" && *format != "col") || !vertices || !count) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      if (*vertices >= kNoVertex) throw ParseError(line_no, "vertex count too large");
      n = *vertices;
      declared_m = *count;
      edges.reserve(declared_m);
    } else if (*kind == "e") {
      if (!n) throw ParseError(line_no, "edge line before the problem line");
      const auto u = to_int<std::int64_t>(tokens.next());
      const auto v = to_int<std::int64_t>(tokens.next());
      if (!u || !v) throw ParseError(line_no, "expected 'e <u> <v>'");
      const auto limit = static_cast<std::int64_t>(*n);
      if (*u < 1 || *u > limit || *v < 1 || *v > limit) {
        throw ParseError(line_no, "endpoint outside [1, " + std::to_string(*n) + "]");
      }
      edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
    } else {
      throw ParseError(line_no, "unrecognized line type '" + std::string(*kind) + "'");
    }
  }
  if (!n) throw ParseError(std::max<std::size_t>(line_no, 1), "missing 'p edge <n> <m>' line");

  parsed.graph = build_or_throw(*n, edges, line_no);
  parsed.labels = LabelMap::one_based(*n);
  if (edges.size() != declared_m || parsed.graph.num_edges() != declared_m) {
    parsed.warnings.push_back("problem line declares " + std::to_string(declared_m) +
                              " edges, found " + std::to_string(edges.size()) + " edge lines (" +
                              std::to_string(parsed.graph.num_edges()) + " distinct)");
  }
  return parsed;
}

ParsedGraph parse_edge_list(std::istream& in) {
  ParsedGraph parsed;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    Tokens tokens(line);
    const auto first = tokens.next();
    if (!first || first->front() == '#') continue;
    const auto a = to_int<std::int64_t>(first);
    const auto b = to_int<std::int64_t>(tokens.next());
    if (!a || !b) throw ParseError(line_no, "expected two integer vertex labels");
    const Vertex u = parsed.labels.intern(*a);
    const Vertex v = parsed.labels.intern(*b);
    edges.emplace_back(u, v);
  }
  parsed.graph = build_or_throw(parsed.labels.size(), edges, line_no);
  return parsed;
}

Format detect_format(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    const auto token = first_token(line);
    if (token.empty() || token.front() == '#' || token.front() == '%' || token == "c") continue;
    return token == "p" ? Format::kDimacs : Format::kEdgeList;
  }
  return Format::kEdgeList;
}

ParsedGraph load_graph(const std::string& path, Format format) {
  std::vector<char> buffer(1 << 20);
  std::ifstream in;
  in.rdbuf()->pubsetbuf(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  in.open(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  if (format == Format::kAuto) {
    format = detect_format(in);
    in.clear();
    in.seekg(0);
  }
  return format == Format::kDimacs ? parse_dimacs_col(in) : parse_edge_list(in);
}

void write_dimacs(const Graph& graph, std::ostream& out) {
  out << "p edge " << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (Vertex u = 0; u < graph.num_vertices(); ++u) {
    for (Vertex v : graph.neighbors(u)) {
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
  }
}

void write_edge_list(const Graph& graph, const LabelMap& labels, std::ostream& out) {
  for (Vertex u = 0; u < graph.num_vertices(); ++u) {
    // A self-loop keeps an isolated vertex; the parser drops the loop itself.
    if (graph.degree(u) == 0) out << labels.label_of(u) << ' ' << labels.label_of(u) << '\n';
    for (Vertex v : graph.neighbors(u)) {
      if (u < v) out << labels.label_of(u) << ' ' << labels.label_of(v) << '\n';
    }
  }
}

void write_coloring(const Coloring& coloring, const LabelMap& labels, std::ostream& out) {
  if (coloring.size() == 0) throw InputError("write_coloring: empty coloring");
  if (coloring.num_colored() != coloring.size()) {
    throw InputError("write_coloring: coloring leaves vertices uncolored");
  }
  if (labels.size() != coloring.size()) {
    throw InputError("write_coloring: label map size does not match the coloring");
  }
  out << "s " << coloring.num_colors() << '\n';
  for (Vertex v = 0; v < coloring.size(); ++v) {
    out << labels.label_of(v) << ' ' << coloring.color_of(v) << '\n';
  }
}

RunStats make_run_stats(const std::string& instance, const Graph& graph, const SolverConfig& config,
                        const SolveResult& result) {
  RunStats stats;
  stats.instance = instance;
  stats.n = graph.num_vertices();
  stats.m = graph.num_edges();
  stats.seed = result.seed;
  stats.time_limit_seconds = config.time_limit_seconds;
  stats.ans = result.ans;
  stats.proven_lower_bound = result.proven_lower_bound;
  stats.optimal = result.optimal;
  stats.time_to_best_seconds = result.time_to_best_seconds;
  stats.elapsed_seconds = result.elapsed_seconds;
  stats.rounds = result.rounds;
  stats.trajectory = result.trajectory;
  for (const auto& record : result.trajectory) {
    for (std::size_t r = 0; r < kRuleCount; ++r) stats.removed_total[r] += record.removed[r];
  }
  return stats;
}

namespace {

json counters_json(const RuleCounters& counters) {
  json out = json::object();
  for (std::size_t r = 0; r < kRuleCount; ++r) out[rule_name(static_cast<Rule>(r))] = counters[r];
  return out;
}

}  // namespace

void emit_stats(const RunStats& stats, std::ostream& out, const StatsOptions& options) {
  json doc;
  doc["type"] = "run";
  doc["instance"] = stats.instance;
  doc["n"] = stats.n;
  doc["m"] = stats.m;
  doc["seed"] = stats.seed;
  doc["ans"] = stats.ans;
  doc["lower_bound"] = stats.proven_lower_bound;
  doc["optimal"] = stats.optimal;
  doc["rounds"] = stats.rounds;
  doc["removed"] = counters_json(stats.removed_total);
  if (options.include_timing) {
    doc["time_limit"] = stats.time_limit_seconds;
    doc["time_to_best"] = stats.time_to_best_seconds;
    doc["elapsed"] = stats.elapsed_seconds;
  }
  json rounds = json::array();
  for (const auto& record : stats.trajectory) {
    json r;
    r["round"] = record.round;
    r["lb"] = record.lb;
    r["ub"] = record.ub;
    r["kernel_size"] = record.kernel_size;
    r["colors"] = record.colors;
    r["extractions"] = record.extractions;
    r["upper_bound_method"] = record.used_dsatur ? "dsatur" : "degeneracy";
    r["removed"] = counters_json(record.removed);
    if (options.include_timing) r["elapsed"] = record.elapsed_seconds;
    rounds.push_back(std::move(r));
  }
  doc["trajectory"] = std::move(rounds);
  out << doc.dump() << '\n';
}

BatchSummary summarize(const std::vector<RunStats>& runs) {
  BatchSummary summary;
  if (runs.empty()) return summary;
  summary.instance = runs.front().instance;
  summary.n = runs.front().n;
  summary.m = runs.front().m;
  summary.min = runs.front().ans;
  double total = 0;
  for (const auto& run : runs) {
    summary.seeds.push_back(run.seed);
    summary.min = std::min(summary.min, run.ans);
    total += static_cast<double>(run.ans);
  }
  summary.avg = total / static_cast<double>(runs.size());
  for (const auto& run : runs) summary.hits += run.ans == summary.min ? 1 : 0;
  return summary;
}

void emit_summary(const BatchSummary& summary, std::ostream& out) {
  json doc;
  doc["type"] = "summary";
  doc["instance"] = summary.instance;
  doc["n"] = summary.n;
  doc["m"] = summary.m;
  doc["seeds"] = summary.seeds;
  doc["min"] = summary.min;
  doc["avg"] = summary.avg;
  doc["hits"] = summary.hits;
  out << doc.dump() << '\n';
}

std::string summary_row(const BatchSummary& summary) {
  std::ostringstream row;
  row << summary.instance << '\t' << summary.n << '\t' << summary.m << '\t' << summary.min << '\t'
      << std::fixed << std::setprecision(1) << summary.avg << '\t' << summary.hits;
  return row.str();
}

}  // namespace recol::io
