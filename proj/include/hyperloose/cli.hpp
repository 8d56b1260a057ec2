#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "absorption.hpp"
#include "io.hpp"
#include "lab.hpp"

namespace hyperloose {

enum ExitCode { exit_ok = 0, exit_false = 1, exit_usage = 2, exit_failure = 3 };

namespace cli {

inline int error_exit(std::ostream& err, std::string_view kind, const std::string& message, int code) {
  err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  return code;
}

inline int exit_for(ErrorKind kind) { return kind == ErrorKind::invalid_query ? exit_usage : exit_failure; }

inline Json girth_json(const Girth& g) { return g.length ? Json(*g.length) : Json(nullptr); }

inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorKind::invalid_query, "cannot write " + path);
  f << text;
}

// "0,1,2;3,4;5" -> {{0,1,2},{3,4},{5}}
inline std::vector<VertexList> parse_parts(const std::string& s) {
  std::vector<VertexList> parts(1);
  std::string num;
  auto flush = [&] {
    if (num.empty()) return;
    try {
      parts.back().push_back(static_cast<Vertex>(std::stoul(num)));
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_query, "bad vertex \"" + num + "\" in --parts");
    }
    num.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (c == ';') {
      flush();
      parts.emplace_back();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      num += c;
    }
  }
  flush();
  return parts;
}

struct Options {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string output;
  // gen
  std::string model;
  std::size_t n = 0, k = 3, m = 2;
  double p = 0.5;
  VertexList roots;
  // verify / find / probe
  std::string kind, mode, input, graph;
  std::size_t k_spread = 0, girth = 0;
  bool hamilton = false;
  // gadget
  std::size_t q = 0, ell = 2, r = 2, z = 4, big_l = 3;
  std::string tmpl = "six-cycle";
  // sweep
  std::vector<std::size_t> ns;
  std::vector<double> ps;
  std::size_t trials = 10, jobs = 1, d = 1;
  double delta = 1.0;
  std::string adversary = "random";
  // probe
  std::size_t u_size = 50, m_size = 400, samples = 100;
  double eta = 0.2, lambda = 0.1, big_d = 1.5, eps = 0.25;
  std::string parts;
};

// A gadget file works as a host graph too.
inline Hypergraph load_graph(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && !j.contains("n") && j.contains("host")) return hypergraph_from_json(j.at("host"));
  return hypergraph_from_json(j);
}

inline int cmd_gen(const Options& o, std::ostream& out) {
  Hypergraph g;
  if (o.model == "complete") {
    g = complete(o.n, o.k);
  } else if (o.model == "two-cliques") {
    g = two_cliques(o.n, o.k);
  } else if (o.model == "random") {
    g = random_hypergraph(o.n, o.k, o.p, o.seed);
  } else {
    require(!o.input.empty(), ErrorKind::invalid_query, "blow-up needs --input");
    g = blow_up(load_graph(o.input), o.m, o.roots).graph;
  }
  emit(out, o.output, to_json(g).dump() + "\n");
  return exit_ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  Json obj = read_json_file(o.input);
  Json rep{{"kind", o.kind}};
  std::optional<std::string> why;
  auto host = [&] {
    require(!o.graph.empty(), ErrorKind::invalid_query, "--graph is required for --kind " + o.kind);
    return load_graph(o.graph);
  };
  if (o.kind == "path") {
    auto g = host();
    auto p = path_from_json(obj);
    why = diagnose_loose_path(g, p);
    rep["order"] = p.order();
  } else if (o.kind == "cycle" || o.kind == "spread") {
    auto g = host();
    auto c = cycle_from_json(obj);
    why = diagnose_loose_cycle(g, c);
    bool ham = !why && is_hamilton(g, c);
    rep["hamilton"] = ham;
    if (!why && (o.hamilton || o.kind == "spread") && !ham) why = "cycle does not span the graph";
    if (o.kind == "spread") {
      require(!o.roots.empty(), ErrorKind::invalid_query, "--roots is required for --kind spread");
      bool spread = !why && is_K_spread(c, o.roots, o.k_spread);
      bool joints = !why;
      for (Vertex x : o.roots)
        if (joints) joints = cycle_vertex_degree(c, x) == 2;
      rep["spread"] = spread;
      rep["roots_at_joints"] = joints;
      if (!why && !spread) why = "roots are not K-spread";
      if (!why && !joints) why = "a root has cycle degree 1";
    }
  } else if (o.kind == "absorber") {
    auto g = host();
    auto a = absorber_from_json(obj);
    why = diagnose_absorber(g, a);
    rep["order"] = a.order();
    if (!why) rep["girth"] = girth_json(absorber_girth(a));
  } else if (o.kind == "template") {
    auto t = template_from_json(obj);
    auto tr = check_template(t);
    rep["checked"] = tr.checked;
    rep["skipped"] = tr.skipped;
    if (!tr.ok) {
      rep["counterexample"] = *tr.counterexample;
      why = "template minus the counterexample has no perfect matching";
    }
  } else {
    auto d = double_strip_from_json(obj);
    why = diagnose_double_strip(d);
    if (!why) {
      auto gl = double_strip_girth(d);
      rep["girth"] = girth_json(gl);
      if (o.girth && !gl.at_least(o.girth)) why = "girth below " + std::to_string(o.girth);
    }
  }
  rep["valid"] = !why;
  rep["reason"] = why ? Json(*why) : Json(nullptr);
  out << rep.dump() << "\n";
  return why ? exit_false : exit_ok;
}

inline int cmd_find(const Options& o, std::ostream& out) {
  auto g = load_graph(o.input);
  Json res{{"mode", o.mode}, {"seed", o.seed}};
  std::optional<LooseCycle> c;
  int code = exit_ok;
  if (o.mode == "oracle") {
    auto r = o.budget ? hamilton_oracle(g, *o.budget) : hamilton_oracle(g);
    res["status"] = to_string(r.status);
    res["nodes"] = r.nodes;
    if (r.value) c = *r.value;
    if (r.status == SearchStatus::unknown) code = exit_failure;
  } else {
    auto cfg = EngineConfig::toy(g.k());
    cfg.seed = o.seed;
    if (o.budget) cfg.node_budget = *o.budget;
    c = o.mode == "absorption" ? find_hamilton_absorption(g, cfg) : spread_hamilton(g, o.roots, o.k_spread, cfg);
    res["status"] = "found";
  }
  res["hamiltonian"] = c.has_value();
  if (c) {
    res["cycle"] = to_json(*c);
    Json rep{{"valid", validate_loose_cycle(g, *c)}, {"hamilton", is_hamilton(g, *c)}};
    if (o.mode == "spread") {
      rep["spread"] = is_K_spread(*c, o.roots, o.k_spread);
      bool joints = true;
      for (Vertex x : o.roots) joints = joints && cycle_vertex_degree(*c, x) == 2;
      rep["roots_at_joints"] = joints;
    }
    res["report"] = rep;
  }
  emit(out, o.output, res.dump() + "\n");
  return code;
}

inline int cmd_gadget(const Options& o, std::ostream& out) {
  Json res{{"kind", o.kind}};
  if (o.kind == "absorber-dense") {
    std::size_t q = o.q ? o.q : default_absorber_q(o.k);
    auto cyc = spread_rooted_cycles(q, o.k);
    auto t = complete(q + o.k - 1, o.k);
    auto h = simple_dense_absorber(t, cyc.root, cyc.c1, cyc.c2);
    res["reduced"] = to_json(t);
    res["host"] = to_json(h.host);
    res["absorber"] = to_json(h.absorber);
    res["order"] = h.absorber.order();
  } else if (o.kind == "absorber-allocate") {
    DoubleStrip d;
    if (o.girth) {
      DoubleStripOptions opt;
      opt.ell = o.ell;
      opt.girth_target = o.girth;
      opt.seed = o.seed;
      opt.block_multiple = o.k - 1;
      if (o.budget) opt.budget = *o.budget;
      d = build_double_strip(o.m, opt);
    } else {
      require(o.q > 0, ErrorKind::invalid_query, "--q or --girth is required");
      d = o.budget ? random_double_strip(o.m, o.q, o.seed, *o.budget) : random_double_strip(o.m, o.q, o.seed);
    }
    auto cyc = spread_rooted_cycles(d.blocks(), o.k);
    auto h = allocate_absorber(cyc.c1, cyc.c2, cyc.root, d);
    res["double_strip"] = to_json(d);
    res["host"] = to_json(h.host);
    res["absorber"] = to_json(h.absorber);
    res["order"] = h.absorber.order();
    res["girth"] = girth_json(absorber_girth(h.absorber));
  } else if (o.kind == "template") {
    Template t = o.tmpl == "six-cycle" ? six_cycle_template()
                 : o.tmpl == "matching"
                     ? matching_template(o.r)
                     : (o.budget ? find_small_template(o.r, o.z, o.big_l, o.seed, *o.budget)
                                 : find_small_template(o.r, o.z, o.big_l, o.seed));
    auto tr = check_template(t);
    res["template"] = to_json(t);
    res["host"] = to_json(t.t);
    res["report"] = {{"ok", tr.ok}, {"checked", tr.checked}, {"skipped", tr.skipped}};
  } else {
    DoubleStripOptions opt;
    opt.ell = o.ell;
    opt.girth_target = o.girth ? o.girth : 4;
    opt.seed = o.seed;
    if (o.budget) opt.budget = *o.budget;
    auto d = build_double_strip(o.m, opt);
    res["double_strip"] = to_json(d);
    res["blocks"] = d.blocks();
    res["girth"] = girth_json(double_strip_girth(d));
  }
  emit(out, o.output, res.dump() + "\n");
  return exit_ok;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  SweepSpec s;
  s.k = o.k;
  s.ns = o.ns;
  s.ps = o.ps;
  s.trials = o.trials;
  s.seed = o.seed;
  s.d = o.d;
  s.delta_fraction = o.delta;
  s.adversary = o.adversary == "split" ? AdversaryKind::split : AdversaryKind::random;
  s.jobs = o.jobs;
  if (o.budget) s.budget = *o.budget;
  auto t = o.mode == "threshold" ? threshold_sweep(s) : resilience_sweep(s);
  std::ostringstream os;
  write_csv(os, t);
  emit(out, o.output, os.str());
  return exit_ok;
}

inline int cmd_probe(const Options& o, std::ostream& out) {
  Json res{{"kind", o.kind}};
  int code = exit_ok;
  if (o.kind == "concentration") {
    ProbeConfig cfg;
    cfg.u_size = o.u_size;
    cfg.m_size = o.m_size;
    cfg.eta = o.eta;
    auto r = concentration_probe(o.k, o.n, o.p, o.trials, o.seed, cfg);
    res["within"] = r.within;
    res["min"] = r.min;
    res["max"] = r.max;
    res["counts"] = r.counts;
  } else if (o.kind == "uniformity") {
    auto r = upper_uniformity_probe(load_graph(o.input), o.p, o.lambda, o.big_d, o.samples, o.seed);
    res["passed"] = r.passed;
    res["max_ratio"] = r.max_ratio;
    res["samples"] = r.samples;
    if (!r.passed) code = exit_false;
  } else {
    auto g = load_graph(o.input);
    bool ok = o.budget ? regular_tuple_check(g, parse_parts(o.parts), o.eps, o.p, *o.budget)
                       : regular_tuple_check(g, parse_parts(o.parts), o.eps, o.p);
    res["regular"] = ok;
    if (!ok) code = exit_false;
  }
  emit(out, o.output, res.dump() + "\n");
  return code;
}

}  // namespace cli

// Exit codes: 0 success, 1 a check came out false, 2 usage error, 3 budget or
// construction failure. Errors go to `err` as one JSON object.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli;
  CLI::App app{"Loose Hamilton cycles, absorbers and random hypergraph experiments", "hyperloose"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "RNG seed")->envname("HYPERLOOSE_SEED");
    sub->add_option("--budget", o.budget, "search node budget")->envname("HYPERLOOSE_BUDGET");
    sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };

  auto* gen = app.add_subcommand("gen", "generate a hypergraph");
  gen->add_option("--model", o.model)->required()->check(CLI::IsMember({"complete", "two-cliques", "random", "blow-up"}));
  gen->add_option("--n", o.n);
  gen->add_option("--k", o.k);
  gen->add_option("--p", o.p);
  gen->add_option("--input", o.input, "reduced graph for blow-up");
  gen->add_option("--m", o.m, "blow-up factor");
  gen->add_option("--roots", o.roots)->delimiter(',');
  common(gen);

  auto* verify = app.add_subcommand("verify", "check an object against its definition");
  verify->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "absorber", "template", "strip", "spread"}));
  verify->add_option("--input", o.input)->required();
  verify->add_option("--graph", o.graph, "host graph");
  verify->add_flag("--hamilton", o.hamilton, "cycles must span the host");
  verify->add_option("--k-spread", o.k_spread);
  verify->add_option("--roots", o.roots)->delimiter(',');
  verify->add_option("--girth", o.girth, "minimum girth for strips");
  common(verify);

  auto* find = app.add_subcommand("find", "search for a loose Hamilton cycle");
  find->add_option("--input", o.input)->required();
  find->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"oracle", "absorption", "spread"}));
  find->add_option("--k-spread", o.k_spread);
  find->add_option("--roots", o.roots)->delimiter(',');
  common(find);

  auto* gadget = app.add_subcommand("gadget", "build a gadget and its host");
  gadget->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"absorber-dense", "absorber-allocate", "template", "double-strip"}));
  gadget->add_option("--k", o.k);
  gadget->add_option("--q", o.q, "cycle length C2");
  gadget->add_option("--m", o.m, "strip block size");
  gadget->add_option("--ell", o.ell);
  gadget->add_option("--girth", o.girth);
  gadget->add_option("--template", o.tmpl)->check(CLI::IsMember({"six-cycle", "matching", "search"}));
  gadget->add_option("--r", o.r);
  gadget->add_option("--z", o.z);
  gadget->add_option("--L", o.big_l);
  common(gadget);

  auto* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep, CSV output");
  sweep->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"threshold", "resilience"}));
  sweep->add_option("--k", o.k);
  sweep->add_option("--n", o.ns)->required()->delimiter(',');
  sweep->add_option("--p", o.ps)->required()->delimiter(',');
  sweep->add_option("--trials", o.trials);
  sweep->add_option("--d", o.d);
  sweep->add_option("--delta", o.delta, "degree floor as a fraction of p C(n-d, k-d)");
  sweep->add_option("--adversary", o.adversary)->check(CLI::IsMember({"random", "split"}));
  sweep->add_option("--jobs", o.jobs)->envname("HYPERLOOSE_JOBS");
  common(sweep);

  auto* probe = app.add_subcommand("probe", "sampled or exact density probes");
  probe->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"concentration", "uniformity", "regularity"}));
  probe->add_option("--input", o.input);
  probe->add_option("--k", o.k);
  probe->add_option("--n", o.n);
  probe->add_option("--p", o.p);
  probe->add_option("--trials", o.trials);
  probe->add_option("--u-size", o.u_size);
  probe->add_option("--m-size", o.m_size);
  probe->add_option("--eta", o.eta);
  probe->add_option("--lambda", o.lambda);
  probe->add_option("--D", o.big_d);
  probe->add_option("--samples", o.samples);
  probe->add_option("--eps", o.eps);
  probe->add_option("--parts", o.parts, "parts as 0,1,2;3,4,5;...");
  common(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return error_exit(err, "usage", e.what(), exit_usage);
  }
  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (find->parsed()) return cmd_find(o, out);
    if (gadget->parsed()) return cmd_gadget(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    return cmd_probe(o, out);
  } catch (const Error& e) {
    return error_exit(err, to_string(e.kind()), e.what(), exit_for(e.kind()));
  }
}

}  // namespace hyperloose
