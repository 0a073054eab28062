#include "cx2/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cx2/complex.hpp"
#include "cx2/families.hpp"
#include "cx2/io.hpp"
#include "cx2/links.hpp"
#include "cx2/splitting.hpp"
#include "cx2/wordproblem.hpp"

namespace cx2 {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Input selection shared by most subcommands.
struct InputOpts {
  std::string desc;
  std::string pres;
  std::string family;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--desc", in.desc,
                  "Combinatorial description file (one boundary word per "
                  "line)");
  cmd->add_option("--pres", in.pres,
                  "Presentation file (gens: header, one relator per line)");
  cmd->add_option("--family", in.family,
                  "Built-in family: tor:M,N | bs:K | bsgen:M,N | art:M");
}

LoadedInput resolve_input(const InputOpts& in) {
  int given = (!in.desc.empty()) + (!in.pres.empty()) + (!in.family.empty());
  if (given != 1) {
    throw std::invalid_argument(
        "exactly one of --desc, --pres, --family is required");
  }
  if (!in.desc.empty()) {
    return LoadedInput{load_description_file(in.desc), in.desc};
  }
  if (!in.pres.empty()) {
    return LoadedInput{load_presentation_file(in.pres), in.pres};
  }
  return family_input(parse_family(in.family));
}

TwoComplex complex_of(const LoadedInput& input) {
  return input.is_presentation() ? standard_complex(input.presentation())
                                 : description_complex(input.description());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string skeleton_dot(const TwoComplex& x) {
  std::ostringstream s;
  s << "digraph skeleton {\n";
  for (int v = 0; v < x.vertex_count; ++v) s << "  v" << v << ";\n";
  for (const TwoComplex::Edge& e : x.edges) {
    s << "  v" << e.tail << " -> v" << e.head << " [label=\"" << e.label
      << "\"];\n";
  }
  s << "}\n";
  return s.str();
}

ordered_json words_json(const std::vector<Word>& words) {
  ordered_json arr = ordered_json::array();
  for (const Word& w : words) arr.push_back(to_string(w));
  return arr;
}

ordered_json trace_json(const std::vector<TraceStep>& trace) {
  ordered_json arr = ordered_json::array();
  for (const TraceStep& s : trace) {
    const char* kind =
        s.rule == -1 ? "reduce" : (s.rule == -2 ? "pinch" : "swap");
    arr.push_back({{"kind", kind},
                   {"rule", s.rule},
                   {"position", s.position},
                   {"result", to_string(s.result)}});
  }
  return arr;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["method"] = v.method;
  j["isIdentity"] = v.is_identity;
  j["certificate"] = v.certificate;
  j["image"] = v.image ? ordered_json(to_string(*v.image)) : ordered_json();
  j["trace"] = trace_json(v.trace);
  return j;
}

ordered_json wedge_json(const WedgeDecomposition& d) {
  ordered_json pieces = ordered_json::array();
  for (const WedgePiece& p : d.pieces) {
    std::string labels;
    for (const TwoComplex::Edge& e : p.complex.edges) labels += e.label;
    pieces.push_back({{"vertices", p.complex.vertex_count},
                      {"edges", p.complex.edges.size()},
                      {"faces", p.complex.faces.size()},
                      {"eulerCharacteristic",
                       euler_characteristic(p.complex)},
                      {"labels", labels}});
  }
  return {{"linkComponents", d.link_components},
          {"minusVertexComponents", d.minus_vertex_components},
          {"circles", d.circles},
          {"pieces", pieces}};
}

void emit(std::ostream& out, const ordered_json& j) {
  out << j.dump(2) << "\n";
}

int cmd_build(const InputOpts& in, const std::string& dot,
              std::ostream& out) {
  LoadedInput input = resolve_input(in);
  TwoComplex x = complex_of(input);
  if (!dot.empty()) write_file(dot, skeleton_dot(x));
  emit(out, to_json(x));
  return 0;
}

int cmd_analyze(const InputOpts& in, bool json, bool with_wedge,
                const std::string& dot, std::ostream& out) {
  LoadedInput input = resolve_input(in);
  TwoComplex x = complex_of(input);
  if (!dot.empty()) write_file(dot, skeleton_dot(x));

  ordered_json link_components = ordered_json::array();
  bool link_connected = true;
  for (int v = 0; v < x.vertex_count; ++v) {
    int count = vertex_link(x, v).component_count;
    link_components.push_back(count);
    if (count != 1) link_connected = false;
  }
  ordered_json closed = input.is_presentation()
                            ? ordered_json()
                            : ordered_json(is_closed_surface(
                                  input.description()));
  ordered_json wedge =
      with_wedge ? wedge_json(wedge_split(x)) : ordered_json();

  ordered_json rep;
  rep["schema"] = "cx2/analyze/1";
  rep["source"] = input.source;
  rep["vertices"] = x.vertex_count;
  rep["edges"] = x.edges.size();
  rep["faces"] = x.faces.size();
  rep["eulerCharacteristic"] = euler_characteristic(x);
  rep["polygonQuotient"] = is_polygon_quotient(x);
  rep["linkComponents"] = link_components;
  rep["linkConnected"] = link_connected;
  rep["closedSurface"] = closed;
  rep["wedge"] = wedge;

  if (json) {
    emit(out, rep);
  } else {
    out << input.source << ": V=" << x.vertex_count << " E=" << x.edges.size()
        << " F=" << x.faces.size()
        << " chi=" << euler_characteristic(x)
        << " linkConnected=" << (link_connected ? "true" : "false")
        << " closedSurface="
        << (closed.is_null() ? "n/a" : (closed.get<bool>() ? "true" : "false"))
        << "\n";
    if (with_wedge) {
      const ordered_json& w = rep["wedge"];
      out << "wedge: circles=" << w["circles"]
          << " pieces=" << w["pieces"].size() << "\n";
    }
  }
  return 0;
}

int cmd_links(const InputOpts& in, bool json, int vertex,
              const std::string& dot, std::ostream& out) {
  LoadedInput input = resolve_input(in);
  TwoComplex x = complex_of(input);
  if (vertex >= x.vertex_count) {
    throw std::invalid_argument("no vertex " + std::to_string(vertex) +
                                ": the complex has " +
                                std::to_string(x.vertex_count) + " vertices");
  }
  std::vector<int> selected;
  if (vertex >= 0) {
    selected.push_back(vertex);
  } else {
    for (int v = 0; v < x.vertex_count; ++v) selected.push_back(v);
  }

  ordered_json links = ordered_json::array();
  std::string dots;
  bool all_connected = true;
  for (int v : selected) {
    LinkGraph link = vertex_link(x, v);
    links.push_back({{"vertex", v},
                     {"ends", link.ends.size()},
                     {"corners", link.corners.size()},
                     {"components", link.component_count}});
    if (!link.connected()) all_connected = false;
    dots += to_dot(link);
  }
  if (!dot.empty()) write_file(dot, dots);

  if (json) {
    ordered_json rep;
    rep["schema"] = "cx2/links/1";
    rep["source"] = input.source;
    rep["linkConnected"] = all_connected;
    rep["links"] = links;
    emit(out, rep);
  } else {
    for (const auto& l : links) {
      out << "vertex " << l["vertex"] << ": ends=" << l["ends"]
          << " corners=" << l["corners"]
          << " components=" << l["components"] << "\n";
    }
  }
  return 0;
}

int cmd_split(const InputOpts& in, bool json, std::ostream& out) {
  LoadedInput input = resolve_input(in);
  TwoComplex x = complex_of(input);
  WedgeDecomposition d = wedge_split(x);
  if (json) {
    ordered_json rep;
    rep["schema"] = "cx2/split/1";
    rep["source"] = input.source;
    ordered_json body = wedge_json(d);
    for (auto& [key, value] : body.items()) rep[key] = value;
    emit(out, rep);
  } else {
    out << "circles=" << d.circles << " pieces=" << d.pieces.size() << "\n";
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      const TwoComplex& p = d.pieces[i].complex;
      std::string labels;
      for (const TwoComplex::Edge& e : p.edges) labels += e.label;
      out << "piece " << i << ": V=" << p.vertex_count
          << " E=" << p.edges.size() << " F=" << p.faces.size()
          << " chi=" << euler_characteristic(p) << " labels=" << labels
          << "\n";
    }
  }
  return 0;
}

int cmd_wp(const std::string& family_spec, const std::string& word_text,
           const std::string& method, bool json, std::ostream& out) {
  FamilyId family = parse_family(family_spec);
  Word w = parse_word(word_text);

  std::vector<Verdict> verdicts;
  if (method == "normal-form" || method == "all") {
    verdicts.push_back(family_is_identity(w, family));
  }
  if (method == "rewrite" ||
      (method == "all" && family.kind != FamilyKind::BS)) {
    verdicts.push_back(rewrite_is_identity(w, family));
  }
  bool agree = true;
  for (const Verdict& v : verdicts) {
    if (v.is_identity != verdicts.front().is_identity) agree = false;
  }

  if (json) {
    ordered_json rep;
    rep["schema"] = "cx2/wp/1";
    rep["family"] = family.to_string();
    rep["word"] = to_string(w);
    ordered_json arr = ordered_json::array();
    for (const Verdict& v : verdicts) arr.push_back(verdict_json(v));
    rep["verdicts"] = arr;
    rep["agree"] = agree;
    emit(out, rep);
  } else {
    for (const Verdict& v : verdicts) {
      out << v.method << ": "
          << (v.is_identity ? "identity" : "not the identity") << " ("
          << v.certificate << ")\n";
    }
    if (method == "all") {
      out << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }
  }
  return agree ? 0 : 1;
}

int cmd_verify(const std::string& property, const std::string& family_spec,
               const ScanOptions& opts, bool json, std::ostream& out) {
  FamilyId family = parse_family(family_spec);
  auto started = std::chrono::steady_clock::now();

  ordered_json rep;
  rep["schema"] = "cx2/verify/1";
  rep["property"] = property;
  rep["family"] = family.to_string();
  int code = 0;
  std::string human;

  if (property == "subword") {
    if (family.kind != FamilyKind::Tor) {
      throw std::invalid_argument("--property subword needs a tor family");
    }
    SubwordReport r = check_subword_property(family.m, family.n, opts);
    rep["maxLen"] = r.max_len;
    rep["wordsScanned"] = r.words_scanned;
    rep["identityWords"] = r.identity_words;
    rep["weakFailures"] = r.weak_failures;
    rep["divisibilityFailures"] = r.divisibility_failures;
    rep["counterexamples"] = words_json(r.counterexamples);
    code = (r.weak_failures || r.divisibility_failures) ? 1 : 0;
    human = "scanned=" + std::to_string(r.words_scanned) +
            " identity=" + std::to_string(r.identity_words) +
            " weakFailures=" + std::to_string(r.weak_failures) +
            " divisibilityFailures=" +
            std::to_string(r.divisibility_failures);
  } else if (property == "syllables") {
    if (family.kind != FamilyKind::Art) {
      throw std::invalid_argument("--property syllables needs an art family");
    }
    SyllableReport r = check_syllable_bound(family.m, opts);
    rep["maxLen"] = r.max_len;
    rep["wordsScanned"] = r.words_scanned;
    rep["identityWords"] = r.identity_words;
    rep["minCyclicSyllables"] = r.min_cyclic_syllables;
    rep["minLinearSyllables"] = r.min_linear_syllables;
    rep["counterexamples"] = words_json(r.counterexamples);
    code = r.counterexamples.empty() ? 0 : 1;
    human = "scanned=" + std::to_string(r.words_scanned) +
            " identity=" + std::to_string(r.identity_words) +
            " minCyclic=" + std::to_string(r.min_cyclic_syllables) +
            " minLinear=" + std::to_string(r.min_linear_syllables);
  } else if (property == "center") {
    CenterReport r = check_center(family, opts);
    rep["maxLen"] = r.max_len;
    rep["centralGenerator"] = to_string(r.central_generator);
    rep["abelianSpecialCase"] = r.abelian_special_case;
    rep["generatorIsCentral"] = r.generator_is_central;
    bool odd_art =
        family.kind == FamilyKind::Art && family.m % 2 == 1;
    rep["halfPowerNoncentral"] = odd_art
                                     ? ordered_json(r.half_power_noncentral)
                                     : ordered_json();
    rep["wordsScanned"] = r.words_scanned;
    rep["centralCount"] = r.central_count;
    rep["violations"] = words_json(r.violations);
    bool bad = !r.violations.empty() || !r.generator_is_central ||
               (odd_art && !r.half_power_noncentral);
    code = bad ? 1 : 0;
    human = "scanned=" + std::to_string(r.words_scanned) +
            " central=" + std::to_string(r.central_count) +
            " generatorIsCentral=" +
            (r.generator_is_central ? "true" : "false") +
            " violations=" + std::to_string(r.violations.size());
  } else if (property == "agreement") {
    AgreementReport r = check_solver_agreement(family, opts);
    rep["maxLen"] = r.max_len;
    rep["wordsScanned"] = r.words_scanned;
    rep["identityWords"] = r.identity_words;
    rep["disagreements"] = words_json(r.disagreements);
    code = r.disagreements.empty() ? 0 : 1;
    human = "scanned=" + std::to_string(r.words_scanned) +
            " identity=" + std::to_string(r.identity_words) +
            " disagreements=" + std::to_string(r.disagreements.size());
  } else {  // iso
    if (family.kind != FamilyKind::Art) {
      throw std::invalid_argument("--property iso needs an art family");
    }
    IsoReport r = verify_artin_isomorphism(family.m);
    rep["target"] = r.target.to_string();
    ordered_json checks = ordered_json::array();
    for (const auto& [name, ok] : r.checks) {
      checks.push_back({{"name", name}, {"ok", ok}});
    }
    rep["checks"] = checks;
    rep["verified"] = r.verified;
    code = r.verified ? 0 : 1;
    human = "target=" + r.target.to_string() +
            " checks=" + std::to_string(r.checks.size()) +
            " verified=" + (r.verified ? "true" : "false");
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  rep["elapsedMs"] = elapsed;

  if (json) {
    emit(out, rep);
  } else {
    out << property << " " << family.to_string() << ": " << human << " "
        << (code == 0 ? "PASS" : "FAIL") << "\n";
  }
  return code;
}

int cmd_export(const InputOpts& in, int vertex, const std::string& dot,
               std::ostream& out) {
  LoadedInput input = resolve_input(in);
  TwoComplex x = complex_of(input);
  if (vertex >= x.vertex_count) {
    throw std::invalid_argument("no vertex " + std::to_string(vertex) +
                                ": the complex has " +
                                std::to_string(x.vertex_count) + " vertices");
  }
  std::string text =
      vertex < 0 ? skeleton_dot(x) : to_dot(vertex_link(x, vertex));
  if (dot.empty()) {
    out << text;
  } else {
    write_file(dot, text);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Combinatorial 2-complexes: construction, vertex links, wedge "
      "splitting, and word-problem solvers"};
  app.require_subcommand(1);

  InputOpts build_in, analyze_in, links_in, split_in, export_in;
  std::string build_dot, analyze_dot, links_dot, export_dot_path;
  bool analyze_json = false, links_json = false, split_json = false;
  bool analyze_wedge = false;
  int links_vertex = -1, export_vertex = -1;
  std::string wp_family, wp_word, wp_method = "normal-form";
  bool wp_json = false;
  std::string verify_property, verify_family;
  ScanOptions verify_opts;
  bool verify_json = false;

  CLI::App* build = app.add_subcommand(
      "build", "Construct the complex and print it as JSON");
  add_input_flags(build, build_in);
  build->add_option("--dot", build_dot, "Also write the 1-skeleton as DOT");
  bool build_json = false;  // build always emits JSON; accepted for symmetry
  build->add_flag("--json", build_json, "Emit JSON (the default here)");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Cell counts, Euler characteristic, link connectivity");
  add_input_flags(analyze, analyze_in);
  analyze->add_flag("--json", analyze_json, "Emit the JSON report");
  analyze->add_flag("--wedge", analyze_wedge,
                    "Include a wedge-decomposition summary");
  analyze->add_option("--dot", analyze_dot,
                      "Also write the 1-skeleton as DOT");

  CLI::App* links = app.add_subcommand(
      "links", "Per-vertex link graphs: sizes and connectivity");
  add_input_flags(links, links_in);
  links->add_flag("--json", links_json, "Emit the JSON report");
  links->add_option("--vertex", links_vertex, "Only this vertex");
  links->add_option("--dot", links_dot, "Write the link graphs as DOT");

  CLI::App* split = app.add_subcommand(
      "split", "Wedge decomposition into circles and link-connected pieces");
  add_input_flags(split, split_in);
  split->add_flag("--json", split_json, "Emit the JSON report");

  CLI::App* wp = app.add_subcommand(
      "wp", "Decide whether a word is the identity in a family group");
  wp->add_option("--family", wp_family, "tor:M,N | bs:K | art:M")
      ->required();
  wp->add_option("--word", wp_word, "Word over the family's generators")
      ->required();
  wp->add_option("--method", wp_method, "Decision procedure(s) to run")
      ->check(CLI::IsMember({"normal-form", "rewrite", "all"}));
  wp->add_flag("--json", wp_json, "Emit the JSON verdict");

  CLI::App* verify = app.add_subcommand(
      "verify", "Exhaustive property checks over bounded word lengths");
  verify->add_option("--property", verify_property, "Which property")
      ->required()
      ->check(CLI::IsMember(
          {"subword", "syllables", "center", "agreement", "iso"}));
  verify->add_option("--family", verify_family, "tor:M,N | bs:K | art:M")
      ->required();
  verify->add_option("--max-len", verify_opts.max_len,
                     "Scan words up to this length");
  verify->add_option("--budget", verify_opts.budget_cap,
                     "Refuse scans past this length");
  verify->add_option("--jobs", verify_opts.jobs,
                     "Shard the scan across this many threads");
  verify->add_flag("--json", verify_json, "Emit the JSON report");

  CLI::App* exp = app.add_subcommand(
      "export-dot", "Write the 1-skeleton (or one vertex link) as DOT");
  add_input_flags(exp, export_in);
  exp->add_option("--vertex", export_vertex,
                  "Export this vertex's link instead of the skeleton");
  exp->add_option("--dot", export_dot_path,
                  "Output file (standard output when omitted)");

  std::vector<const char*> argv;
  argv.push_back("cx2");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(build)) return cmd_build(build_in, build_dot, out);
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(analyze_in, analyze_json, analyze_wedge, analyze_dot,
                         out);
    }
    if (app.got_subcommand(links)) {
      return cmd_links(links_in, links_json, links_vertex, links_dot, out);
    }
    if (app.got_subcommand(split)) return cmd_split(split_in, split_json, out);
    if (app.got_subcommand(wp)) {
      return cmd_wp(wp_family, wp_word, wp_method, wp_json, out);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(verify_property, verify_family, verify_opts,
                        verify_json, out);
    }
    if (app.got_subcommand(exp)) {
      return cmd_export(export_in, export_vertex, export_dot_path, out);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const FileParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at offset " << e.offset << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cx2
