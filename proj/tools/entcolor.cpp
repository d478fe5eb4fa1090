// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "entcolor/engine.hpp"
#include "entcolor/errors.hpp"
#include "entcolor/families.hpp"
#include "entcolor/plane_graph.hpp"
#include "entcolor/presets.hpp"
#include "entcolor/records.hpp"
#include "entcolor/text.hpp"
#include "entcolor/validators.hpp"

namespace ec = entcolor;

namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kContract = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ec::InputError("cannot write " + path);
  out << text;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

// ---- bound / table --------------------------------------------------------

struct BoundOpts {
  std::string problem;
  int delta = 0;
  int gamma = 1;
  double alpha = 0.5;
  int r = 4;
  std::string family_file;
  std::string chi2f_mode = "general";
  bool optimize_alpha = false;
  std::optional<int> exact_n;
};

ec::PresetParams preset_params(const BoundOpts& o) {
  ec::PresetParams p;
  p.delta = o.delta;
  p.gamma = o.gamma;
  p.alpha = o.alpha;
  p.r = o.r;
  p.exact_n = o.exact_n;
  p.chi2f_mode = o.chi2f_mode;
  if (!o.family_file.empty()) p.family = ec::parse_forbidden_family(ec::read_file(o.family_file));
  if (o.optimize_alpha) {
    if (o.problem != "acyclic-v1") throw ec::InputError("--optimize-alpha applies to acyclic-v1 only");
    p.alpha = ec::optimal_alpha(o.delta).alpha;
  }
  return p;
}

int cmd_bound(const BoundOpts& o) {
  auto p = preset_params(o);
  auto r = ec::kappa_preset(o.problem, p);
  std::cout << "problem\t" << r.problem << '\n'
            << "mode\t" << (r.exact ? "exact" : "closed-form") << '\n'
            << "alpha\t" << fmt(p.alpha) << '\n'
            << "pinned_X\t" << fmt(r.pinned.X) << '\n'
            << "pinned_ratio\t" << fmt(r.pinned.ratio) << '\n'
            << "pinned_kappa\t" << r.pinned.kappa << '\n'
            << "optimized_X\t" << fmt(r.optimized.X) << '\n'
            << "optimized_ratio\t" << fmt(r.optimized.ratio) << '\n'
            << "optimized_kappa\t" << r.optimized.kappa << '\n'
            << "root_residual\t" << fmt(r.optimized.residual) << '\n'
            << "boundary\t" << (r.optimized.boundary ? "yes" : "no") << '\n';
  if (r.stated) std::cout << "stated\t" << fmt(*r.stated) << '\n';
  if (r.asymptotic) std::cout << "asymptotic\t" << fmt(*r.asymptotic) << '\n';
  std::cout << "kappa\t" << r.kappa << '\n';
  if (r.kappa_total) std::cout << "kappa_total\t" << *r.kappa_total << '\n';
  for (const auto& ref : r.references) std::cout << "ref\t" << ref.name << '\t' << fmt(ref.value) << '\n';

  std::cerr << r.problem << ": kappa " << r.kappa;
  if (r.kappa_total) std::cerr << " (+1 reserve = " << *r.kappa_total << ")";
  std::cerr << ", optimized root gives " << r.optimized.kappa;
  for (const auto& ref : r.references) std::cerr << "; " << ref.name << ' ' << fmt(ref.value);
  std::cerr << '\n';
  return kOk;
}

int cmd_table(const std::string& name) {
  if (name != "cs" && name != "alpha") throw ec::InputError("unknown table '" + name + "' (known: cs)");
  std::cout << "delta\talpha\talpha_raw\tvalue\n";
  for (double d : {27.0, 28.0, 29.0, 30.0, 100.0, 1e3, 1e4, 1e5, 1e6}) {
    auto a = ec::optimal_alpha(d);
    std::cout << std::setprecision(10) << d << '\t' << std::fixed << std::setprecision(3) << a.rounded
              << std::defaultfloat << '\t' << fmt(a.alpha) << '\t' << fmt(a.value) << '\n';
  }
  return kOk;
}

// ---- engine commands ------------------------------------------------------

struct RunOpts {
  std::string graph;
  std::string embedding;
  std::string family;
  int kappa = 0;
  std::uint64_t seed = 0;
  long long budget = 0;
  std::string values;
  std::string lists;
  int estar = 0;  // 1-based on the command line, 0 = first edge
  double alpha = 0.5;
  int gamma = 0;
  bool reserve = false;
  bool check = false;
  std::string out_coloring, out_record, out_manifest;
};

struct Instance {
  ec::Graph g;
  std::optional<ec::PlaneGraph> pg;
  std::unique_ptr<ec::BadEventFamily> fam;
  std::optional<std::vector<std::vector<ec::Color>>> lists;
  bool edges = false;
  int e_star = 0;
};

std::vector<std::vector<ec::Color>> parse_lists(std::string_view text, int objects) {
  std::vector<std::vector<ec::Color>> lists(objects);
  std::vector<char> seen(objects, 0);
  ec::LineReader lines(text);
  while (auto line = lines.next()) {
    auto colon = line->find(':');
    if (colon == std::string_view::npos) throw ec::ParseError(lines.line_no(), "expected 'object: c1 c2 ...'");
    auto head = ec::parse_ints(line->substr(0, colon), lines.line_no());
    if (head.size() != 1 || head[0] < 1 || head[0] > objects)
      throw ec::ParseError(lines.line_no(), "object out of range");
    int obj = static_cast<int>(head[0] - 1);
    if (seen[obj]) throw ec::ParseError(lines.line_no(), "object listed twice");
    seen[obj] = 1;
    for (long long c : ec::parse_ints(line->substr(colon + 1), lines.line_no())) {
      if (c < 1 || c > 1'000'000'000) throw ec::ParseError(lines.line_no(), "colour out of range");
      lists[obj].push_back(static_cast<ec::Color>(c));
    }
  }
  return lists;
}

std::vector<int> parse_values(const std::string& spec) {
  std::vector<int> out;
  std::string s = spec;
  for (char& c : s)
    if (c == ',') c = ' ';
  for (long long v : ec::parse_ints(s, 1)) out.push_back(static_cast<int>(v));
  return out;
}

Instance load_instance(const RunOpts& o) {
  Instance in;
  if (ec::family_needs_embedding(o.family)) {
    if (o.embedding.empty()) throw ec::InputError("family " + o.family + " needs --embedding");
    in.pg = ec::load_plane_graph(o.embedding);
    in.g = in.pg->graph();
  } else {
    if (o.graph.empty()) throw ec::InputError("--graph is required");
    in.g = ec::load_graph(o.graph);
  }
  in.edges = ec::family_colors_edges(o.family);
  in.e_star = o.estar > 0 ? o.estar - 1 : 0;
  ec::FamilyParams fp;
  fp.alpha = o.alpha;
  fp.gamma = o.gamma;
  fp.e_star = in.e_star;
  in.fam = ec::make_family(o.family, in.g, in.pg ? &*in.pg : nullptr, fp);
  if (!o.lists.empty()) in.lists = parse_lists(ec::read_file(o.lists), in.fam->object_count());
  return in;
}

ec::EngineInput engine_input(const RunOpts& o, const Instance& in) {
  ec::EngineInput e;
  e.kappa = o.kappa;
  e.budget = o.budget;
  e.seed = o.seed;
  e.check_reconstruction = o.check;
  if (!o.values.empty()) e.values = parse_values(o.values);
  e.lists = in.lists;
  return e;
}

std::string coloring_text(const Instance& in, const std::vector<ec::Color>& phi) {
  if (!in.edges) return ec::format_coloring(phi);
  std::ostringstream out;
  for (std::size_t e = 0; e < phi.size(); ++e) {
    auto [u, v] = in.g.edges()[e];
    out << (u + 1) << ' ' << (v + 1) << ' ' << phi[e] << '\n';
  }
  return out.str();
}

int cmd_color(const RunOpts& o) {
  auto in = load_instance(o);
  std::optional<ec::Color> reserved;
  if (o.reserve) {
    if (o.family != "facial-thue-edge") throw ec::InputError("--reserve applies to facial-thue-edge only");
    if (in.lists) reserved = ec::reserve_color(*in.lists, in.e_star);
    else reserved = o.kappa + 1;
  }
  auto input = engine_input(o, in);
  auto res = ec::run(*in.fam, input);
  auto phi = res.phi;
  if (reserved && res.status == ec::RunStatus::Completed) phi[in.e_star] = *reserved;

  ec::RunManifest m;
  m.seed = o.seed;
  m.kappa = o.kappa;
  m.budget = input.values ? static_cast<long long>(input.values->size()) : o.budget;
  m.family = o.family;
  m.graph_hash = in.g.hash();
  m.list_mode = in.lists.has_value();

  std::string colors = coloring_text(in, phi);
  if (o.out_coloring.empty()) std::cout << colors;
  else write_file(o.out_coloring, colors);
  if (!o.out_record.empty()) write_file(o.out_record, m.to_text() + res.record.to_text());
  if (!o.out_manifest.empty()) write_file(o.out_manifest, m.to_text());

  long long events = 0;
  for (const auto& s : res.record.steps) events += s.has_value();
  std::cerr << o.family << ": " << ec::to_string(res.status) << " after " << res.record.steps.size()
            << " steps, " << events << " bad events";
  if (reserved) std::cerr << ", e* coloured " << *reserved;
  std::cerr << '\n';
  return res.status == ec::RunStatus::Completed ? kOk : kReject;
}

int cmd_roundtrip(const RunOpts& o) {
  auto in = load_instance(o);
  auto input = engine_input(o, in);
  auto res = ec::run(*in.fam, input);
  const auto* lists = in.lists ? &*in.lists : nullptr;
  auto decoded = ec::decode(*in.fam, res.phi, res.record, lists, lists ? &res.slots : nullptr);
  std::size_t n = std::min(decoded.size(), res.values.size());
  for (std::size_t i = 0; i < n; ++i)
    if (decoded[i] != res.values[i]) {
      std::cout << "fail\t" << i << '\n';
      std::cerr << "first divergence at index " << i << ": ran " << res.values[i] << ", decoded " << decoded[i]
                << '\n';
      return kReject;
    }
  if (decoded.size() != res.values.size()) {
    std::cout << "fail\t" << n << '\n';
    std::cerr << "length mismatch: ran " << res.values.size() << ", decoded " << decoded.size() << '\n';
    return kReject;
  }
  std::cout << "pass\t" << decoded.size() << '\n';
  std::cerr << "roundtrip ok over " << decoded.size() << " values (" << ec::to_string(res.status) << ")\n";
  return kOk;
}

int cmd_decode(const RunOpts& o, const std::string& coloring, const std::string& record) {
  auto in = load_instance(o);
  auto phi = ec::parse_coloring(ec::read_file(coloring), in.g, in.edges);
  auto rec = ec::Record::parse(ec::read_file(record));
  const auto* lists = in.lists ? &*in.lists : nullptr;
  auto values = ec::decode(*in.fam, phi, rec, lists);
  for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << values[i];
  std::cout << '\n';
  std::cerr << "decoded " << values.size() << " values\n";
  return kOk;
}

// ---- count-records --------------------------------------------------------

int cmd_count(const std::string& terms_spec, const BoundOpts& bo, int n, int tmax, bool brute) {
  std::vector<ec::CountTerm> terms;
  if (!terms_spec.empty()) {
    terms = ec::parse_count_terms(terms_spec);
  } else if (!bo.problem.empty()) {
    auto r = ec::kappa_preset(bo.problem, preset_params(bo));
    if (r.q.tail()) throw ec::InputError("preset uses a closed-form tail; pass --exact-n to get finite terms");
    for (const auto& t : r.q.terms()) {
      ec::EventTypeMeta meta{"", t.cost, t.size};
      terms.push_back({meta.class_bound(), t.size});
    }
  } else {
    throw ec::InputError("give --terms or --problem");
  }
  if (tmax < 0 || n < 0) throw ec::InputError("--tmax and --n must be non-negative");
  auto b = ec::count_b(terms, tmax);
  auto r = ec::count_r(terms, n, tmax);

  bool linear = true;
  std::vector<ec::Term> real;
  for (const auto& t : terms) {
    linear = linear && t.size == 1;
    real.push_back({static_cast<double>(t.cost), t.size});
  }
  double log_scale = 0, log_ratio = 0;
  ec::QPolynomial q(real);
  if (linear) {
    log_ratio = std::log(q.q(1.0));
  } else {
    auto cs = ec::characteristic_system(q);
    log_scale = std::log(cs.s + 1);
    log_ratio = std::log(q.q(cs.X) / cs.X);
  }

  std::cout << "t\tb_t\tr_t\tbound" << (brute ? "\tbrute_r\tagree" : "") << '\n';
  bool all_agree = true;
  for (int t = 0; t <= tmax; ++t) {
    std::cout << t << '\t' << b[t] << '\t' << r[t] << '\t' << fmt(std::exp(log_scale + t * log_ratio));
    if (brute) {
      if (t <= 12) {
        auto c = ec::brute_count(terms, n, t);
        bool ok = c == r[t];
        all_agree = all_agree && ok;
        std::cout << '\t' << c << '\t' << (ok ? "yes" : "no");
      } else {
        std::cout << "\t-\t-";
      }
    }
    std::cout << '\n';
  }
  if (brute) std::cerr << (all_agree ? "enumeration agrees with the series" : "enumeration DISAGREES") << '\n';
  return all_agree ? kOk : kReject;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& graph, const std::string& embedding, const std::string& coloring,
               const std::string& property, int r, const std::string& pattern) {
  std::optional<ec::PlaneGraph> pg;
  ec::Graph g;
  if (!embedding.empty()) {
    pg = ec::load_plane_graph(embedding);
    g = pg->graph();
  } else if (!graph.empty()) {
    g = ec::load_graph(graph);
  } else {
    throw ec::InputError("--graph or --embedding is required");
  }
  bool edges = property == "nonrep-edge" || property == "facial-edge";
  auto phi = ec::parse_coloring(ec::read_file(coloring), g, edges);
  const ec::PlaneGraph* p = pg ? &*pg : nullptr;
  ec::Verdict v;
  if (property == "proper") v = ec::check_proper(g, phi);
  else if (property == "acyclic") v = ec::check_acyclic(g, phi);
  else if (property == "nonrep") v = ec::check_nonrepetitive(g, phi, ec::NonrepScope::AllPaths);
  else if (property == "nonrep-edge") v = ec::check_nonrepetitive(g, phi, ec::NonrepScope::Edges);
  else if (property == "facial-vertex") v = ec::check_nonrepetitive(g, phi, ec::NonrepScope::FacialVertices, p);
  else if (property == "facial-edge") v = ec::check_nonrepetitive(g, phi, ec::NonrepScope::FacialEdges, p);
  else if (property == "r-acyclic") v = ec::check_r_acyclic(g, phi, r);
  else if (property == "star") v = ec::check_star(g, phi);
  else if (property == "pair") {
    if (pattern.empty()) throw ec::InputError("--pattern is required for the pair property");
    v = ec::check_pair_forbidden(g, phi, ec::load_graph(pattern));
  } else {
    throw ec::InputError("unknown property '" + property + "'");
  }
  std::cout << (v.accepted ? "accept" : "reject");
  if (!v.accepted) {
    std::cout << '\t';
    for (std::size_t i = 0; i < v.witness.size(); ++i) std::cout << (i ? " " : "") << v.witness[i] + 1;
  }
  std::cout << '\n';
  if (!v.accepted) std::cerr << property << ": " << v.reason << '\n';
  return v.accepted ? kOk : kReject;
}

void add_run_options(CLI::App* c, RunOpts& o, bool needs_kappa) {
  c->add_option("--graph", o.graph, "graph file ('n m' then 'u v' lines)");
  c->add_option("--embedding", o.embedding, "rotation-system file for facial families");
  c->add_option("--family", o.family, "bad-event family")->required();
  auto* k = c->add_option("--kappa", o.kappa, "number of colours");
  if (needs_kappa) k->required();
  c->add_option("--seed", o.seed, "PRNG seed");
  c->add_option("--budget", o.budget, "number of values to draw");
  c->add_option("--values", o.values, "explicit value sequence, comma separated");
  c->add_option("--lists", o.lists, "list file ('object: c1 c2 ...')");
  c->add_option("--estar", o.estar, "reserved edge e* (1-based edge index)");
  c->add_option("--alpha", o.alpha, "special-set parameter of the acyclic-v1/v2 families");
  c->add_option("--gamma", o.gamma, "gamma of acyclic-gamma (0: from the graph)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entcolor: entropy-compression colourings, bounds and record counting"};
  app.require_subcommand(1);

  BoundOpts bo;
  auto* bound = app.add_subcommand("bound", "bound calculator for a named problem");
  bound->add_option("--problem", bo.problem, "one of: acyclic-gamma acyclic-v1 acyclic-v2 nonrep-vertex "
                                             "nonrep-edge facial-thue-vertex facial-thue-edge r-acyclic chi2f star")
      ->required();
  bound->add_option("--delta", bo.delta, "maximum degree");
  bound->add_option("--gamma", bo.gamma, "gamma for acyclic-gamma");
  bound->add_option("--alpha", bo.alpha, "alpha for acyclic-v1/v2");
  bound->add_option("--r", bo.r, "r for r-acyclic");
  bound->add_option("--family-file", bo.family_file, "forbidden family for chi2f ('n m [u v ...]' lines)");
  bound->add_option("--chi2f-mode", bo.chi2f_mode, "general, edges or direct");
  bound->add_flag("--optimize-alpha", bo.optimize_alpha, "use the optimal alpha (acyclic-v1)");
  bound->add_option("--exact-n", bo.exact_n, "exact finite sums for n objects");

  std::string table_name = "cs";
  auto* table = app.add_subcommand("table", "optimal alpha table");
  table->add_option("--name", table_name, "table name (cs)");

  RunOpts ro;
  auto* color = app.add_subcommand("color", "run the randomized colouring engine");
  add_run_options(color, ro, true);
  color->add_flag("--reserve", ro.reserve, "facial-thue-edge: colour e* with a reserved colour");
  color->add_flag("--check-reconstruction", ro.check, "verify every reconstruction during the run");
  color->add_option("--out-coloring", ro.out_coloring, "coloring file (default: stdout)");
  color->add_option("--out-record", ro.out_record, "record file (with manifest header)");
  color->add_option("--out-manifest", ro.out_manifest, "manifest file");

  RunOpts rt;
  auto* roundtrip = app.add_subcommand("roundtrip", "run, decode and compare the value sequence");
  add_run_options(roundtrip, rt, true);

  RunOpts dc;
  std::string dc_coloring, dc_record;
  auto* dec = app.add_subcommand("decode", "recover the value sequence from a coloring and a record");
  add_run_options(dec, dc, false);
  dec->add_option("--coloring", dc_coloring, "final coloring")->required();
  dec->add_option("--record", dc_record, "record file")->required();

  std::string terms;
  int cn = 0, tmax = 12;
  bool brute = false;
  BoundOpts cbo;
  auto* count = app.add_subcommand("count-records", "count records b_t, r_t");
  count->add_option("--terms", terms, "term system 'C:s,C:s,...'");
  count->add_option("--problem", cbo.problem, "take the terms of a bound preset (needs finite terms)");
  count->add_option("--delta", cbo.delta, "maximum degree for --problem");
  count->add_option("--gamma", cbo.gamma, "gamma for --problem");
  count->add_option("--alpha", cbo.alpha, "alpha for --problem");
  count->add_option("--r", cbo.r, "r for --problem");
  count->add_option("--exact-n", cbo.exact_n, "exact finite sums for --problem");
  count->add_option("--n", cn, "level cap");
  count->add_option("--tmax", tmax, "largest t");
  count->add_flag("--brute", brute, "cross-check r_t by enumeration for t <= 12");

  std::string vg, ve, vc, vp = "proper", vpat;
  int vr = 3;
  auto* verify = app.add_subcommand("verify", "check a coloring");
  verify->add_option("--graph", vg, "graph file");
  verify->add_option("--embedding", ve, "rotation-system file (facial properties)");
  verify->add_option("--coloring", vc, "coloring file ('v c' or 'u v c' lines)")->required();
  verify->add_option("--property", vp,
                     "proper acyclic nonrep nonrep-edge facial-vertex facial-edge r-acyclic star pair");
  verify->add_option("--r", vr, "r for r-acyclic");
  verify->add_option("--pattern", vpat, "pattern graph for the pair property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*bound) return cmd_bound(bo);
    if (*table) return cmd_table(table_name);
    if (*color) return cmd_color(ro);
    if (*roundtrip) return cmd_roundtrip(rt);
    if (*dec) return cmd_decode(dc, dc_coloring, dc_record);
    if (*count) return cmd_count(terms, cbo, cn, tmax, brute);
    if (*verify) return cmd_verify(vg, ve, vc, vp, vr, vpat);
  } catch (const ec::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kContract;
  } catch (const ec::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kContract;
  } catch (const ec::DecodeError& e) {
    std::cerr << "decode error: " << e.what() << '\n';
    return kReject;
  } catch (const ec::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
