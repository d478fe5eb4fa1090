// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entcolor {

// 0 means uncolored; real colors are 1..kappa (or list entries in list mode).
using Color = int;
using ColoredSet = std::vector<char>;

struct EventTypeMeta {
  std::string label;
  double cost = 1.0;  // C_j as a real number
  int size = 1;       // s_j

  // Largest admissible class index: max(1, ceil(cost)), saturated at 2^62.
  long long class_bound() const;
};

// Bad event of type `type` and class `cls`, both 1-based.
struct EventId {
  int type = 0;
  long long cls = 0;
  friend bool operator==(const EventId&, const EventId&) = default;
};

// The pluggable part of the engine. Objects are vertices or edges, numbered
// 0..object_count()-1. Implementations must be deterministic and thread-safe for
// concurrent const use.
class BadEventFamily {
 public:
  virtual ~BadEventFamily() = default;

  virtual std::string name() const = 0;
  virtual int object_count() const = 0;
  virtual const std::vector<EventTypeMeta>& metas() const = 0;

  // NUV. nullopt means the target colored set has been reached.
  // Default: the smallest uncolored object in object_order().
  virtual std::optional<int> next_uncolored(const ColoredSet& colored) const;

  // BET and ONBE fused: the first bad event anchored at the just-colored object v.
  virtual std::optional<EventId> detect(const std::vector<Color>& phi, int v) const = 0;

  // USBE. `X` is the colored set including v. Must not depend on colors.
  virtual std::vector<int> uncolor_set(const EventId& ev, int v, const ColoredSet& X) const = 0;

  // RBE. On entry phi holds the colors after uncoloring (zero on the uncolored set);
  // on exit it must hold the bad coloring on all of X.
  virtual void reconstruct(const EventId& ev, int v, const ColoredSet& X,
                           std::vector<Color>& phi) const = 0;

  // Whether phi lies in F(v): some bad event anchored at v that is fully colored.
  virtual bool in_forbidden(const std::vector<Color>& phi, int v) const {
    return detect(phi, v).has_value();
  }

  const std::vector<int>& object_order() const { return order_; }

 protected:
  std::vector<int> order_;
};

enum class RunStatus { Completed, BudgetExhausted };
std::string_view to_string(RunStatus s);

class Record {
 public:
  // One entry per Color line; a present EventId means the Color line was followed by
  // "Uncolor, Bad Event j, k".
  std::vector<std::optional<EventId>> steps;

  std::string to_text() const;
  // '#' lines are ignored. Throws ParseError.
  static Record parse(std::string_view text);
  friend bool operator==(const Record&, const Record&) = default;
};

struct RunManifest {
  std::uint64_t seed = 0;
  int kappa = 0;
  long long budget = 0;
  std::string family;
  std::uint64_t graph_hash = 0;
  bool list_mode = false;

  std::string to_text() const;  // "# key: value" lines
  static RunManifest parse(std::string_view text);
};

struct EngineInput {
  int kappa = 1;
  long long budget = 0;                     // ignored when `values` is set
  std::optional<std::vector<int>> values;  // explicit V, entries in 1..kappa
  std::uint64_t seed = 0;                   // used when `values` is empty
  std::optional<std::vector<std::vector<Color>>> lists;  // list mode
  bool check_reconstruction = false;  // run RBE after every event and compare
};

struct StepInfo {
  long long step = 0;  // 1-based
  int object = -1;
  int value = 0;  // the consumed entry of V
  std::optional<EventId> event;
  const std::vector<Color>* phi = nullptr;  // coloring after the step
  const ColoredSet* colored = nullptr;
};

struct RunResult {
  std::vector<Color> phi;
  std::vector<int> slots;  // list mode: the index drawn for each colored object, else empty
  Record record;
  RunStatus status = RunStatus::BudgetExhausted;
  std::vector<int> values;  // the prefix of V that was consumed
  // Step (1-based) at which each colored object was last colored, 0 if uncolored.
  std::vector<long long> colored_at;
};

// The stream of color values used when no explicit V is given:
// mt19937_64(seed), value = 1 + draw % kappa.
std::vector<int> prng_values(std::uint64_t seed, int kappa, long long count);

// Throws InputError on bad input and ContractViolation when the family breaks its contract.
RunResult run(const BadEventFamily& fam, const EngineInput& input,
              const std::function<void(const StepInfo&)>& observer = {});

struct ReplayStep {
  int object = -1;
  ColoredSet before_uncolor;  // X = previous set plus object
  ColoredSet after;
  std::optional<EventId> event;
};

// Forward pass on colored sets only (NUV and USBE). Throws DecodeError.
std::vector<ReplayStep> replay_colored_sets(const BadEventFamily& fam, const Record& record);

// Backward pass recovering V from the final coloring and the record. In list mode
// pass the lists and the slots recorded by run (slots may be empty). Throws DecodeError.
std::vector<int> decode(const BadEventFamily& fam, const std::vector<Color>& final_phi,
                        const Record& record,
                        const std::vector<std::vector<Color>>* lists = nullptr,
                        const std::vector<int>* slots = nullptr);

// Recolors the colored objects one by one in increasing colored_at order and
// returns the first object that lands in its forbidden set, if any.
std::optional<int> allowedness_violation(const BadEventFamily& fam, const std::vector<Color>& phi,
                                         const std::vector<long long>& colored_at);

// Dyck levels after each step (|colored set|). Throws DecodeError if a descent would
// go below zero or above `object_count`.
std::vector<int> record_levels(const Record& record, const std::vector<EventTypeMeta>& metas,
                               int object_count);

}  // namespace entcolor
