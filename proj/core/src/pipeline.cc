// Copyright 2026 The hamconn Authors.
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

#include "hamconn/pipeline.h"

#include <condition_variable>
#include <deque>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hamconn/graph6.h"
#include "hamconn/ham_connect.h"

namespace hamconn {
namespace {

struct WorkItem {
  std::uint64_t sequence;
  std::string graph6;
  Graph graph;
};

struct Batch {
  std::uint64_t index = 0;
  std::vector<WorkItem> items;
};

struct BatchResult {
  std::vector<WorkItem> items;
  std::vector<GraphVerdict> verdicts;
};

// Bounded queue of batches between the reader and the workers, plus the
// index-keyed result table drained in order by the reducer.
class Exchange {
 public:
  explicit Exchange(std::size_t capacity) : capacity_(capacity) {}

  void push(Batch batch) {
    std::unique_lock lock(mu_);
    not_full_.wait(lock, [&] { return queue_.size() < capacity_; });
    queue_.push_back(std::move(batch));
    not_empty_.notify_one();
  }

  void close_input() {
    std::lock_guard lock(mu_);
    input_closed_ = true;
    not_empty_.notify_all();
  }

  std::optional<Batch> pop() {
    std::unique_lock lock(mu_);
    not_empty_.wait(lock, [&] { return !queue_.empty() || input_closed_; });
    if (queue_.empty()) return std::nullopt;
    Batch b = std::move(queue_.front());
    queue_.pop_front();
    not_full_.notify_one();
    return b;
  }

  void deliver(std::uint64_t index, BatchResult result) {
    std::lock_guard lock(mu_);
    results_.emplace(index, std::move(result));
    ready_.notify_all();
  }

  // Waits for batch `index`; nullopt once `total` batches were handed out and
  // index is past the end.
  std::optional<BatchResult> take(std::uint64_t index) {
    std::unique_lock lock(mu_);
    ready_.wait(lock, [&] {
      return results_.count(index) != 0 || (total_ && index >= *total_);
    });
    auto it = results_.find(index);
    if (it == results_.end()) return std::nullopt;
    BatchResult r = std::move(it->second);
    results_.erase(it);
    return r;
  }

  void set_total(std::uint64_t total) {
    std::lock_guard lock(mu_);
    total_ = total;
    ready_.notify_all();
  }

 private:
  const std::size_t capacity_;
  std::mutex mu_;
  std::condition_variable not_full_;
  std::condition_variable not_empty_;
  std::condition_variable ready_;
  std::deque<Batch> queue_;
  bool input_closed_ = false;
  std::map<std::uint64_t, BatchResult> results_;
  std::optional<std::uint64_t> total_;
};

void fold(FilterReport& report, const FilterOptions& options, WorkItem& item,
          const GraphVerdict& verdict) {
  report.graphs_seen += 1;
  const bool stage1_only = options.stage == Stage::kOne;
  if (options.stage == Stage::kTwo || verdict.ham_connected) {
    report.ham_connected += 1;
  }
  const bool survived = stage1_only ? verdict.ham_connected : verdict.passed;
  if (!survived) return;
  if (!stage1_only) report.counterexamples += 1;
  if (options.max_flagged && report.flagged.size() >= *options.max_flagged) {
    return;
  }
  FlaggedGraph f;
  f.sequence = item.sequence;
  f.graph6 = std::move(item.graph6);
  f.failing_k = verdict.failing_k;
  f.failing_pair = verdict.failing_pair;
  report.flagged.push_back(std::move(f));
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kOne:
      return "1";
    case Stage::kTwo:
      return "2";
    case Stage::kBoth:
      return "both";
  }
  return "?";
}

Stage parse_stage(std::string_view text) {
  if (text == "1") return Stage::kOne;
  if (text == "2") return Stage::kTwo;
  if (text == "both") return Stage::kBoth;
  throw std::invalid_argument("unknown stage '" + std::string(text) +
                              "' (expected 1, 2 or both)");
}

FilterInputError::FilterInputError(std::uint64_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

GraphVerdict evaluate_graph(const Graph& g, const FilterOptions& options) {
  GraphVerdict v;
  const int n = g.order();
  bool run_stage2 = options.stage != Stage::kOne;
  if (options.stage != Stage::kTwo) {
    v.ham_connected = n >= 2 && is_hamiltonian_connected(g);
    if (options.stage == Stage::kOne) return v;
    run_stage2 = v.ham_connected;
  }
  if (!run_stage2 || n < 3) return v;
  const bool witness = options.mode != FilterMode::kAll;
  const Stage2Outcome out = evaluate_stage2(g, options.mode, witness,
                                            options.stage == Stage::kBoth);
  v.passed = out.passes;
  v.failing_k = out.failing_k;
  v.failing_pair = out.failing_pair;
  return v;
}

FilterReport run_filter(std::istream& input, const FilterOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (options.batch_size == 0) throw std::invalid_argument("batch size must be >= 1");

  Exchange exchange(2 * static_cast<std::size_t>(options.workers) + 2);
  std::vector<std::thread> workers;
  workers.reserve(options.workers);
  for (int w = 0; w < options.workers; ++w) {
    workers.emplace_back([&] {
      while (auto batch = exchange.pop()) {
        BatchResult result;
        result.verdicts.reserve(batch->items.size());
        for (const WorkItem& item : batch->items) {
          result.verdicts.push_back(evaluate_graph(item.graph, options));
        }
        result.items = std::move(batch->items);
        exchange.deliver(batch->index, std::move(result));
      }
    });
  }

  FilterReport report;
  std::thread reducer([&] {
    for (std::uint64_t index = 0;; ++index) {
      auto result = exchange.take(index);
      if (!result) break;
      for (std::size_t i = 0; i < result->items.size(); ++i) {
        fold(report, options, result->items[i], result->verdicts[i]);
      }
    }
  });

  std::optional<FilterInputError> failure;
  std::uint64_t line_number = 0;
  std::uint64_t sequence = 0;
  std::uint64_t batches = 0;
  std::uint64_t skipped = 0;
  Batch current;
  std::string line;
  while (std::getline(input, line)) {
    ++line_number;
    const std::string_view payload = graph6_payload(line);
    if (payload.empty()) continue;
    try {
      Graph g = decode_graph6(payload);
      current.items.push_back(WorkItem{++sequence, std::string(payload), std::move(g)});
    } catch (const Graph6Error& e) {
      if (options.lenient) {
        ++skipped;
        continue;
      }
      failure.emplace(line_number, e.what());
      break;
    }
    if (current.items.size() == options.batch_size) {
      current.index = batches++;
      exchange.push(std::move(current));
      current = Batch{};
    }
  }
  if (!failure && !current.items.empty()) {
    current.index = batches++;
    exchange.push(std::move(current));
  }
  exchange.close_input();
  for (auto& t : workers) t.join();
  exchange.set_total(batches);
  reducer.join();

  if (failure) throw *failure;
  report.skipped = skipped;
  return report;
}

std::string format_summary(const FilterReport& report) {
  std::ostringstream out;
  out << "summary\t" << report.graphs_seen << '\t' << report.ham_connected << '\t'
      << report.counterexamples << '\t' << report.skipped;
  return out.str();
}

namespace {

std::string witness_text(const FlaggedGraph& f, char sep) {
  std::string out;
  out += f.failing_k ? std::to_string(*f.failing_k) : "-";
  out += sep;
  if (f.failing_pair) {
    out += std::to_string(f.failing_pair->u()) + "," +
           std::to_string(f.failing_pair->v());
  } else {
    out += "-";
  }
  return out;
}

}  // namespace

std::string format_table(const FilterReport& report, const FilterOptions& options) {
  std::ostringstream out;
  out << "mode             " << to_string(options.mode) << '\n'
      << "stage            " << to_string(options.stage) << '\n'
      << "graphs           " << report.graphs_seen << '\n'
      << "ham-connected    " << report.ham_connected << '\n'
      << "counterexamples  " << report.counterexamples << '\n'
      << "skipped          " << report.skipped << '\n';
  if (!report.flagged.empty()) {
    out << "flagged (sequence, graph6, k, pair):\n";
    for (const FlaggedGraph& f : report.flagged) {
      out << "  " << f.sequence << "  " << f.graph6 << "  " << witness_text(f, ' ')
          << '\n';
    }
  }
  out << format_summary(report) << '\n';
  return out.str();
}

std::string format_records(const FilterReport& report) {
  std::ostringstream out;
  for (const FlaggedGraph& f : report.flagged) {
    out << "flagged\t" << f.sequence << '\t' << f.graph6 << '\t'
        << witness_text(f, '\t') << '\n';
  }
  out << format_summary(report) << '\n';
  return out.str();
}

}  // namespace hamconn
