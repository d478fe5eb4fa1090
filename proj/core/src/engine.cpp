// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#include "entcolor/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "entcolor/errors.hpp"

namespace entcolor {

long long EventTypeMeta::class_bound() const {
  constexpr double kSat = 4.6116860184273879e18;  // 2^62
  double c = std::ceil(cost - 1e-9);
  if (!(c < kSat)) return 1LL << 62;
  return std::max(1LL, static_cast<long long>(c));
}

std::optional<int> BadEventFamily::next_uncolored(const ColoredSet& colored) const {
  for (int v : order_)
    if (!colored[v]) return v;
  return std::nullopt;
}

std::string_view to_string(RunStatus s) {
  return s == RunStatus::Completed ? "Completed" : "BudgetExhausted";
}

std::vector<int> prng_values(std::uint64_t seed, int kappa, long long count) {
  std::mt19937_64 gen(seed);
  std::vector<int> out(static_cast<std::size_t>(std::max(0LL, count)));
  for (auto& x : out) x = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(kappa));
  return out;
}

namespace {

std::string event_text(const BadEventFamily& fam, const EventId& ev) {
  return fam.name() + " event (" + std::to_string(ev.type) + ", " + std::to_string(ev.cls) + ")";
}

void check_event_range(const BadEventFamily& fam, const EventId& ev) {
  const auto& metas = fam.metas();
  if (ev.type < 1 || ev.type > static_cast<int>(metas.size()))
    throw ContractViolation(event_text(fam, ev) + ": type out of range");
  if (ev.cls < 1 || ev.cls > metas[ev.type - 1].class_bound())
    throw ContractViolation(event_text(fam, ev) + ": class exceeds C_j = " +
                            std::to_string(metas[ev.type - 1].cost));
}

void check_uncolor_set(const BadEventFamily& fam, const EventId& ev, int v, const ColoredSet& X,
                       const std::vector<int>& S) {
  const auto& meta = fam.metas()[ev.type - 1];
  if (static_cast<int>(S.size()) != meta.size)
    throw ContractViolation(event_text(fam, ev) + ": uncolor set has " + std::to_string(S.size()) +
                            " objects, expected " + std::to_string(meta.size));
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractViolation(event_text(fam, ev) + ": uncolor set repeats an object");
  for (int u : S)
    if (u < 0 || u >= static_cast<int>(X.size()) || !X[u])
      throw ContractViolation(event_text(fam, ev) + ": uncolor set leaves the colored set");
  if (!std::binary_search(sorted.begin(), sorted.end(), v))
    throw ContractViolation(event_text(fam, ev) + ": uncolor set misses the anchor");
}

}  // namespace

RunResult run(const BadEventFamily& fam, const EngineInput& input,
              const std::function<void(const StepInfo&)>& observer) {
  const int n = fam.object_count();
  if (input.kappa < 1) throw InputError("kappa must be at least 1");
  const bool list_mode = input.lists.has_value();
  if (list_mode) {
    if (static_cast<int>(input.lists->size()) != n) throw InputError("need one list per object");
    for (int v = 0; v < n; ++v)
      if (static_cast<int>((*input.lists)[v].size()) < input.kappa)
        throw InputError("list of object " + std::to_string(v + 1) + " is shorter than kappa");
  }
  std::vector<int> values;
  if (input.values) {
    values = *input.values;
    for (int x : values)
      if (x < 1 || x > input.kappa) throw InputError("entry of V outside 1..kappa");
  } else {
    if (input.budget < 0) throw InputError("negative budget");
    values = prng_values(input.seed, input.kappa, input.budget);
  }

  RunResult res;
  res.phi.assign(n, 0);
  if (list_mode) res.slots.assign(n, 0);
  res.colored_at.assign(n, 0);
  ColoredSet colored(n, 0);
  std::vector<Color> scratch;

  long long i = 0;
  for (; i < static_cast<long long>(values.size()); ++i) {
    auto next = fam.next_uncolored(colored);
    if (!next) break;
    const int v = *next;
    if (v < 0 || v >= n || colored[v])
      throw ContractViolation(fam.name() + ": next_uncolored returned an invalid object");
    const int value = values[i];
    res.phi[v] = list_mode ? (*input.lists)[v][value - 1] : value;
    if (list_mode) res.slots[v] = value;
    colored[v] = 1;
    res.colored_at[v] = i + 1;
    res.values.push_back(value);

    auto ev = fam.detect(res.phi, v);
    if (ev) {
      check_event_range(fam, *ev);
      auto S = fam.uncolor_set(*ev, v, colored);
      check_uncolor_set(fam, *ev, v, colored, S);
      std::vector<Color> before;
      if (input.check_reconstruction) before = res.phi;
      for (int u : S) {
        res.phi[u] = 0;
        colored[u] = 0;
        res.colored_at[u] = 0;
        if (list_mode) res.slots[u] = 0;
      }
      if (input.check_reconstruction) {
        ColoredSet X = colored;
        for (int u : S) X[u] = 1;
        scratch = res.phi;
        fam.reconstruct(*ev, v, X, scratch);
        if (scratch != before)
          throw ContractViolation(event_text(fam, *ev) + ": reconstruction does not invert the step");
      }
    }
    res.record.steps.push_back(ev);
    if (observer) observer(StepInfo{i + 1, v, value, ev, &res.phi, &colored});
  }
  res.status = fam.next_uncolored(colored) ? RunStatus::BudgetExhausted : RunStatus::Completed;
  return res;
}

std::vector<ReplayStep> replay_colored_sets(const BadEventFamily& fam, const Record& record) {
  const int n = fam.object_count();
  std::vector<ReplayStep> out;
  out.reserve(record.steps.size());
  ColoredSet colored(n, 0);
  for (std::size_t i = 0; i < record.steps.size(); ++i) {
    auto next = fam.next_uncolored(colored);
    if (!next) throw DecodeError("record continues after the target was reached (step " +
                                 std::to_string(i + 1) + ")");
    ReplayStep st;
    st.object = *next;
    colored[st.object] = 1;
    st.before_uncolor = colored;
    st.event = record.steps[i];
    if (st.event) {
      try {
        check_event_range(fam, *st.event);
        auto S = fam.uncolor_set(*st.event, st.object, colored);
        check_uncolor_set(fam, *st.event, st.object, colored, S);
        for (int u : S) colored[u] = 0;
      } catch (const ContractViolation& e) {
        throw DecodeError("step " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    st.after = colored;
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<int> decode(const BadEventFamily& fam, const std::vector<Color>& final_phi,
                        const Record& record, const std::vector<std::vector<Color>>* lists,
                        const std::vector<int>* slots) {
  const int n = fam.object_count();
  if (static_cast<int>(final_phi.size()) != n) throw DecodeError("coloring has wrong length");
  auto replay = replay_colored_sets(fam, record);

  std::vector<Color> phi = final_phi;
  std::vector<int> slot(n, 0);
  if (lists && slots && static_cast<int>(slots->size()) == n) slot = *slots;

  auto position = [&](int v, Color c, std::size_t step) {
    const auto& L = (*lists)[v];
    int found = 0;
    for (std::size_t p = 0; p < L.size(); ++p)
      if (L[p] == c) {
        if (found) throw DecodeError("step " + std::to_string(step) + ": color " +
                                     std::to_string(c) + " occurs twice in the list of object " +
                                     std::to_string(v + 1));
        found = static_cast<int>(p) + 1;
      }
    if (!found) throw DecodeError("step " + std::to_string(step) + ": color not in list");
    return found;
  };

  std::vector<int> V(replay.size(), 0);
  for (std::size_t i = replay.size(); i-- > 0;) {
    const ReplayStep& st = replay[i];
    for (int u = 0; u < n; ++u)
      if ((phi[u] != 0) != (st.after[u] != 0))
        throw DecodeError("step " + std::to_string(i + 1) +
                          ": coloring disagrees with the replayed colored set");
    const int v = st.object;
    if (!st.event) {
      if (lists) {
        V[i] = slot[v] ? slot[v] : position(v, phi[v], i + 1);
      } else {
        V[i] = phi[v];
      }
    } else {
      std::vector<Color> bad = phi;
      try {
        fam.reconstruct(*st.event, v, st.before_uncolor, bad);
      } catch (const ContractViolation& e) {
        throw DecodeError("step " + std::to_string(i + 1) + ": " + e.what());
      }
      for (int u = 0; u < n; ++u) {
        if ((bad[u] != 0) != (st.before_uncolor[u] != 0))
          throw DecodeError("step " + std::to_string(i + 1) +
                            ": reconstruction does not cover the uncolored set");
        if (phi[u] != 0 && bad[u] != phi[u])
          throw DecodeError("step " + std::to_string(i + 1) +
                            ": reconstruction changed a color that stayed");
      }
      for (int u = 0; u < n; ++u)
        if (phi[u] == 0 && bad[u] != 0) slot[u] = 0;
      phi = std::move(bad);
      V[i] = lists ? position(v, phi[v], i + 1) : phi[v];
    }
    phi[v] = 0;
    slot[v] = 0;
  }
  for (Color c : phi)
    if (c != 0) throw DecodeError("backward pass did not end at the empty coloring");
  return V;
}

std::optional<int> allowedness_violation(const BadEventFamily& fam, const std::vector<Color>& phi,
                                         const std::vector<long long>& colored_at) {
  const int n = fam.object_count();
  std::vector<int> objs;
  for (int v = 0; v < n; ++v)
    if (phi[v] != 0) objs.push_back(v);
  std::sort(objs.begin(), objs.end(),
            [&](int a, int b) { return colored_at[a] < colored_at[b]; });
  std::vector<Color> psi(n, 0);
  for (int v : objs) {
    psi[v] = phi[v];
    if (fam.in_forbidden(psi, v)) return v;
  }
  return std::nullopt;
}

std::vector<int> record_levels(const Record& record, const std::vector<EventTypeMeta>& metas,
                               int object_count) {
  std::vector<int> levels;
  int level = 0;
  for (std::size_t i = 0; i < record.steps.size(); ++i) {
    ++level;
    if (level > object_count)
      throw DecodeError("level exceeds the object count at step " + std::to_string(i + 1));
    if (const auto& ev = record.steps[i]) {
      if (ev->type < 1 || ev->type > static_cast<int>(metas.size()))
        throw DecodeError("unknown event type at step " + std::to_string(i + 1));
      level -= metas[ev->type - 1].size;
      if (level < 0) throw DecodeError("level below zero at step " + std::to_string(i + 1));
    }
    levels.push_back(level);
  }
  return levels;
}

}  // namespace entcolor
