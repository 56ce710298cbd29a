#include "fibword/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibword/fibonacci.hpp"
#include "fibword/fractal.hpp"
#include "fibword/legality.hpp"
#include "fibword/spectral.hpp"
#include "fibword/svg.hpp"
#include "fibword/turtle.hpp"
#include "fibword/wordstruct.hpp"

namespace fibword {

namespace {

using json = nlohmann::ordered_json;

struct CommonOpts {
  int n = -1;
  std::string word;
  std::string rule = "to-and-fro";
  bool as_json = false;
  bool whole_word = false;
  bool identify_reversal = false;
  int parity_base = 0;
  std::string out_file;
  std::string svg_file;
};

json conventions(const CommonOpts& opts) {
  json c;
  c["plane"] = "y-up";
  c["initial_heading"] = {0, -1};
  c["right_turn"] = "clockwise";
  c["turn_sign"] = "counterclockwise-positive";
  c["parity_base"] = opts.parity_base;
  c["excursion_identity"] = opts.identify_reversal ? "sign+reversal" : "sign";
  return c;
}

json report_envelope(const std::string& command, const CommonOpts& opts) {
  json r;
  r["command"] = command;
  r["inputs"] = json::object();
  r["outputs"] = json::object();
  r["provenance"] = {{"version", kToolVersion}, {"conventions", conventions(opts)}};
  return r;
}

void emit(const CommonOpts& opts, const json& report, const std::string& text, std::ostream& out) {
  std::string payload = opts.as_json ? report.dump(2) + "\n" : text;
  if (!opts.out_file.empty()) {
    std::ofstream f(opts.out_file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + opts.out_file);
    f << payload;
  } else {
    out << payload;
  }
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << bytes;
}

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Word selection: --word wins; otherwise --n picks F_n, except that
// digram rules analyse W_n (the even-length word every displacement table
// is about) unless --whole-word is given.
Word select_word(const CommonOpts& opts, const DrawingRule& rule) {
  if (!opts.word.empty()) {
    return Word(rule.alphabet, opts.word);
  }
  if (opts.n < 0) throw CLI::ValidationError("--n or --word is required");
  if (rule.scheme == TokenScheme::PerDigram && !opts.whole_word) {
    return trim_last_two(opts.n);
  }
  return fib_word(opts.n);
}

json path_json(const Path& p, const CommonOpts& opts) {
  json j;
  j["rule"] = p.rule_name;
  if (opts.word.empty() && opts.n >= 0) j["n"] = opts.n;
  else j["n"] = nullptr;
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back({v.x, v.y});
  j["vertices"] = std::move(verts);
  if (p.exact()) {
    json exact = json::array();
    for (const auto& v : p.exact_vertices) {
      long long mx = 0, kx = 0, my = 0, ky = 0;
      if (v.x.ring_pair(mx, kx) && v.y.ring_pair(my, ky)) {
        exact.push_back({{mx, kx}, {my, ky}});
      }
    }
    j["exact_vertices"] = std::move(exact);
  }
  j["tokens"] = p.tokens;
  const Vec2 d = displacement(p);
  j["displacement"] = {d.x, d.y};
  const BBox box = bounding_box(p);
  j["bbox"] = {box.min_x, box.min_y, box.max_x, box.max_y};
  return j;
}

std::string displacement_text(const Path& p) {
  if (auto exact = displacement_exact(p)) {
    const Golden& x = exact->x;
    const Golden& y = exact->y;
    const bool ints = x.phi_half_units() == 0 && y.phi_half_units() == 0 &&
                      x.rational_half_units() % 2 == 0 && y.rational_half_units() % 2 == 0;
    if (ints) {
      return "(" + std::to_string(x.rational_half_units() / 2) + ", " +
             std::to_string(y.rational_half_units() / 2) + ")";
    }
    return "(" + x.str() + ", " + y.str() + ")";
  }
  const Vec2 d = displacement(p);
  return "(" + fmt_double(d.x) + ", " + fmt_double(d.y) + ")";
}

std::string displacement_class_text(const DisplacementClass& c) {
  std::string mag = c.phi_units == 0 ? "0" : (c.phi_units > 0 ? "+phi" : "-phi");
  return mag + ", " + parity_name(c.parity);
}

int cmd_check(const CommonOpts& opts, bool closed_left, bool closed_right, std::ostream& out) {
  BoundedFactor factor{Word::ab(opts.word), !closed_left, !closed_right};
  const LegalityReport rep = check_legality(factor);

  json r = report_envelope("check", opts);
  r["inputs"] = {{"word", opts.word}, {"left_open", factor.left_open}, {"right_open", factor.right_open}};
  r["outputs"]["legal"] = rep.legal;
  r["outputs"]["rounds"] = rep.rounds;
  if (rep.base_witness) r["outputs"]["base_witness"] = rep.base_witness->letters();

  std::string text = std::string(rep.legal ? "legal" : "illegal") + " (rounds=" +
                     std::to_string(rep.rounds) + ")\n";
  emit(opts, r, text, out);
  return rep.legal ? 0 : 1;
}

void cmd_spectral(const CommonOpts& opts, const std::string& subst_name, int power, std::ostream& out) {
  const Substitution& subst = subst_name == "omega" ? omega_substitution() : theta();
  const IncidenceMatrix m = incidence(subst);
  const PrimitivityResult prim = is_primitive(m.counts);

  json r = report_envelope("spectral", opts);
  r["inputs"] = {{"substitution", subst.name()}, {"power", power}};
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.counts.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.counts.cols(); ++j) row.push_back(m.counts(i, j));
    rows.push_back(std::move(row));
  }
  r["outputs"]["incidence"] = rows;
  std::ostringstream text;
  text << "alphabet: " << subst.alphabet().symbols() << "\n";
  text << "incidence:";
  for (Eigen::Index i = 0; i < m.counts.rows(); ++i) {
    text << " [";
    for (Eigen::Index j = 0; j < m.counts.cols(); ++j) {
      if (j) text << ",";
      text << m.counts(i, j);
    }
    text << "]";
  }
  text << "\n";

  if (power > 0) {
    const IntMatrix mp = matrix_power(m.counts, power);
    json prow = json::array();
    for (Eigen::Index i = 0; i < mp.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < mp.cols(); ++j) row.push_back(mp(i, j));
      prow.push_back(std::move(row));
    }
    r["outputs"]["power"] = {{"exponent", power}, {"matrix", prow}};
    text << "power " << power << ":";
    for (Eigen::Index i = 0; i < mp.rows(); ++i) {
      text << " [";
      for (Eigen::Index j = 0; j < mp.cols(); ++j) {
        if (j) text << ",";
        text << mp(i, j);
      }
      text << "]";
    }
    text << "\n";
  }

  r["outputs"]["primitive"] = prim.primitive;
  if (prim.primitive) {
    r["outputs"]["primitivity_witness_exponent"] = prim.witness_exponent;
    const PerronData pd = perron(m);
    r["outputs"]["lambda_pf"] = pd.lambda_pf;
    json freqs = json::object();
    json tiles = json::object();
    for (Eigen::Index i = 0; i < pd.right_vector.size(); ++i) {
      const std::string letter(1, m.alphabet.letter(static_cast<std::size_t>(i)));
      freqs[letter] = pd.right_vector(i);
      tiles[letter] = pd.left_vector(i);
    }
    r["outputs"]["letter_frequencies"] = freqs;
    r["outputs"]["tile_lengths"] = tiles;
    text << "primitive: yes (witness exponent " << prim.witness_exponent << ")\n";
    text << "lambda_pf = " << fmt_double(pd.lambda_pf) << "\n";
    text << "frequencies:";
    for (Eigen::Index i = 0; i < pd.right_vector.size(); ++i) {
      text << " " << m.alphabet.letter(static_cast<std::size_t>(i)) << "="
           << fmt_double(pd.right_vector(i));
    }
    text << "\ntile lengths:";
    for (Eigen::Index i = 0; i < pd.left_vector.size(); ++i) {
      text << " " << m.alphabet.letter(static_cast<std::size_t>(i)) << "="
           << fmt_double(pd.left_vector(i));
    }
    text << "\n";
  } else {
    text << "primitive: no\n";
  }
  emit(opts, r, text.str(), out);
}

void cmd_factorize(const CommonOpts& opts, const std::string& scheme, std::ostream& out) {
  json r = report_envelope("factorize", opts);
  std::ostringstream text;
  if (scheme == "aba-baaba") {
    const Word w = opts.word.empty() ? fib_word(opts.n) : Word::ab(opts.word);
    const Factorization f = factorize_aba_baaba(w);
    json factors = json::array();
    for (const auto& factor : f.factors) {
      factors.push_back(factor.letters());
      text << "(" << factor.letters() << ")";
    }
    r["inputs"] = {{"scheme", scheme}, {"length", w.size()}};
    r["outputs"]["factors"] = factors;
    r["outputs"]["remainder"] = f.remainder.letters();
    if (!f.remainder.empty()) text << " remainder=" << f.remainder.letters();
    text << "\n";
  } else if (scheme == "digram") {
    const Word w = opts.word.empty() ? fib_word(opts.n) : Word::ab(opts.word);
    const auto pairs = digram_pairs(w);
    json names = json::array();
    long long ab = 0, aa = 0, ba = 0;
    for (Digram d : pairs) {
      names.push_back(digram_name(d));
      text << "(" << digram_name(d) << ")";
      if (d == Digram::ab) ++ab;
      else if (d == Digram::aa) ++aa;
      else ++ba;
    }
    r["inputs"] = {{"scheme", scheme}, {"length", w.size()}};
    r["outputs"]["pairs"] = names;
    r["outputs"]["counts"] = {{"ab", ab}, {"aa", aa}, {"ba", ba}};
    if (w.size() >= 2) {
      text << "\ncounts: ab=" << ab << " aa=" << aa << " ba=" << ba;
      const long long total = ab + aa + ba;
      text << " freq: " << fmt_double(double(ab) / total) << " " << fmt_double(double(aa) / total)
           << " " << fmt_double(double(ba) / total);
    }
    text << "\n";
  } else if (scheme == "nested") {
    if (opts.n < 3 || opts.n % 3 != 0) {
      throw CLI::ValidationError("--n must be a positive multiple of 3 for nested");
    }
    const auto components = nested_embedding(opts.n / 3);
    json comps = json::array();
    for (int c : components) {
      comps.push_back(c);
      text << "F_" << c << " ";
    }
    r["inputs"] = {{"scheme", scheme}, {"n", opts.n}};
    r["outputs"]["components"] = comps;
    text << "\n";
  } else if (scheme == "theorem31") {
    const Theorem31Parts parts = decompose_theorem31(opts.n);
    json pj = json::array();
    json jj = json::array();
    for (const auto& p : parts.parts) pj.push_back(p.letters());
    for (const auto& j : parts.joints) jj.push_back(j.letters());
    r["inputs"] = {{"scheme", scheme}, {"n", opts.n}};
    r["outputs"]["parts"] = pj;
    r["outputs"]["joints"] = jj;
    r["outputs"]["holds"] = parts.concatenated() == trim_last_two(opts.n);
    for (std::size_t i = 0; i < parts.parts.size(); ++i) {
      text << "[" << parts.parts[i].letters() << "]";
      if (i < parts.joints.size() && !parts.joints[i].empty()) {
        text << "(" << parts.joints[i].letters() << ")";
      }
    }
    text << "\n";
  } else {
    throw CLI::ValidationError("unknown factorize scheme: " + scheme);
  }
  emit(opts, r, text.str(), out);
}

void cmd_classify(const CommonOpts& opts, const std::string& what, std::ostream& out) {
  json r = report_envelope("classify", opts);
  r["inputs"] = {{"what", what}, {"n", opts.n}};
  std::string text;
  if (what == "parity") {
    const Parity p = direction_parity(opts.n);
    r["outputs"]["parity"] = parity_name(p);
    text = std::string(parity_name(p)) + "\n";
  } else if (what == "displacement") {
    const DisplacementClass c = displacement_class(opts.n);
    r["outputs"]["phi_units"] = c.phi_units;
    r["outputs"]["parity"] = parity_name(c.parity);
    text = displacement_class_text(c) + "\n";
  } else if (what == "central-letter") {
    const CentralLetter c = central_letter(opts.n);
    const char* name = c == CentralLetter::Empty ? "empty" : (c == CentralLetter::A ? "a" : "b");
    r["outputs"]["central_letter"] = name;
    text = std::string(name) + "\n";
  } else {
    throw CLI::ValidationError("unknown classify target: " + what);
  }
  emit(opts, r, text, out);
}

void cmd_analyze(const CommonOpts& opts, const std::string& what,
                 const std::vector<double>& box_sizes, std::ostream& out) {
  json r = report_envelope("analyze " + what, opts);
  std::ostringstream text;
  if (what == "displacement" || what == "bbox" || what == "intersections" || what == "symmetry" ||
      what == "dimension") {
    const DrawingRule rule = rule_by_name(opts.rule, opts.parity_base);
    const Word w = select_word(opts, rule);
    const Path path = trace(w, rule);
    r["inputs"] = {{"rule", rule.name}, {"n", opts.n}, {"letters", w.size()}};
    if (what == "displacement") {
      const Vec2 d = displacement(path);
      r["outputs"]["displacement"] = {d.x, d.y};
      r["outputs"]["tiles"] = path.tokens.size();
      text << displacement_text(path) << "\n";
    } else if (what == "bbox") {
      const BBox box = bounding_box(path);
      r["outputs"]["bbox"] = {box.min_x, box.min_y, box.max_x, box.max_y};
      r["outputs"]["width"] = box.width();
      r["outputs"]["height"] = box.height();
      if (box.width() > 0) r["outputs"]["height_over_width"] = box.height() / box.width();
      text << "width=" << fmt_double(box.width()) << " height=" << fmt_double(box.height());
      if (box.width() > 0) text << " height/width=" << fmt_double(box.height() / box.width());
      text << "\n";
    } else if (what == "intersections") {
      const IntersectionReport rep = self_intersections(path);
      r["outputs"]["proper_crossings"] = rep.proper_crossings;
      r["outputs"]["collinear_overlaps"] = rep.collinear_overlaps;
      r["outputs"]["vertex_touches"] = rep.vertex_touches;
      r["outputs"]["exact"] = rep.exact;
      text << "proper=" << rep.proper_crossings << " overlaps=" << rep.collinear_overlaps
           << " touches=" << rep.vertex_touches << (rep.exact ? " (exact)" : " (float)") << "\n";
    } else if (what == "symmetry") {
      const SymmetryResult sym = half_turn_symmetry(path);
      r["outputs"]["half_turn_symmetric"] = sym.symmetric;
      r["outputs"]["center"] = {sym.center.x, sym.center.y};
      text << (sym.symmetric ? "half-turn symmetric" : "not symmetric") << " center=("
           << fmt_double(sym.center.x) << ", " << fmt_double(sym.center.y) << ")\n";
    } else {
      const BoxCountResult bc = box_count_dimension(path, box_sizes);
      r["outputs"]["dimension"] = bc.dimension;
      r["outputs"]["fit_residual"] = bc.fit_residual;
      r["outputs"]["anchor"] = {bc.anchor[0], bc.anchor[1]};
      json scales = json::array();
      for (const auto& s : bc.scales) scales.push_back({{"box_size", s.box_size}, {"boxes", s.boxes}});
      r["outputs"]["scales"] = scales;
      text << "dimension=" << fmt_double(bc.dimension) << " residual="
           << fmt_double(bc.fit_residual) << "\n";
    }
  } else if (what == "structures") {
    const Word w = opts.word.empty() ? fib_word(opts.n) : Word::ab(opts.word);
    const ExcursionScan scan = zero_excursions(w, opts.identify_reversal);
    std::size_t closed = 0;
    for (const auto& e : scan.excursions) closed += e.closed ? 1 : 0;
    r["inputs"] = {{"n", opts.n}, {"letters", w.size()}};
    r["outputs"]["excursions"] = scan.excursions.size();
    r["outputs"]["closed_excursions"] = closed;
    r["outputs"]["distinct_structures"] = scan.distinct_closed.size();
    r["outputs"]["structure_keys"] = scan.distinct_closed;
    text << "excursions=" << scan.excursions.size() << " closed=" << closed
         << " distinct=" << scan.distinct_closed.size() << "\n";
  } else if (what == "max-deviation") {
    const Golden dev = max_deviation(opts.n);
    r["inputs"] = {{"n", opts.n}};
    r["outputs"]["max_deviation"] = dev.to_double();
    r["outputs"]["max_deviation_exact"] = dev.str();
    text << dev.str() << " = " << fmt_double(dev.to_double()) << "\n";
  } else if (what == "track") {
    const auto rows = track_components(opts.n);
    r["inputs"] = {{"n", opts.n}};
    json rows_json = json::array();
    for (const auto& row : rows) {
      rows_json.push_back({{"component", row.component_n},
                           {"initial_direction", row.initial_direction},
                           {"relative_phi", row.relative_phi},
                           {"final_direction", row.final_direction},
                           {"running_phi", row.running_phi}});
      text << "F_" << row.component_n << " init=" << (row.initial_direction > 0 ? ">" : "<")
           << " rel=" << (row.relative_phi > 0 ? "+phi" : "-phi")
           << " final=" << (row.final_direction > 0 ? ">" : "<") << " running=" << row.running_phi
           << "phi\n";
    }
    r["outputs"]["rows"] = rows_json;
  } else {
    throw CLI::ValidationError("unknown analyze target: " + what);
  }
  emit(opts, r, text.str(), out);
}

void cmd_trace(const CommonOpts& opts, std::ostream& out) {
  const DrawingRule rule = rule_by_name(opts.rule, opts.parity_base);
  const Word w = select_word(opts, rule);
  const Path path = trace(w, rule);

  json r = report_envelope("trace", opts);
  r["inputs"] = {{"rule", rule.name}, {"n", opts.n}, {"letters", w.size()}};
  r["outputs"] = path_json(path, opts);

  std::ostringstream text;
  const Vec2 d = displacement(path);
  text << "tokens=" << path.tokens.size() << " vertices=" << path.vertices.size()
       << " displacement=" << displacement_text(path) << " exact=" << (path.exact() ? "yes" : "no")
       << "\n";
  (void)d;
  if (!opts.svg_file.empty()) write_file(opts.svg_file, render_path_svg(path));
  emit(opts, r, text.str(), out);
}

void cmd_growth(const CommonOpts& opts, int max_tiles, std::ostream& out) {
  const GrowthChart chart = growth_chart(max_tiles);
  json r = report_envelope("growth", opts);
  r["inputs"] = {{"max_tiles", max_tiles}};
  json nodes = json::array();
  std::ostringstream text;
  std::set<std::string> structures;
  for (std::size_t i = 0; i < chart.nodes.size(); ++i) {
    const auto& node = chart.nodes[i];
    const ExcursionScan scan = zero_excursions(node.word, opts.identify_reversal);
    for (const auto& key : scan.distinct_closed) structures.insert(key);
    json nj;
    nj["index"] = i;
    nj["word"] = node.word.letters();
    nj["tiles"] = node.word.size();
    nj["depth"] = node.depth;
    nj["parent"] = node.parent;
    nj["legal_extensions"] = node.legal_extensions;
    nj["children"] = node.children;
    nodes.push_back(std::move(nj));
    text << "#" << i << " depth=" << node.depth << " tiles=" << node.word.size() << " "
         << node.word.letters() << " extensions=";
    for (const auto& e : node.legal_extensions) text << "(" << e << ")";
    text << "\n";
  }
  r["outputs"]["nodes"] = nodes;
  r["outputs"]["first_branch_node"] = chart.first_branch_node;
  r["outputs"]["distinct_structures"] = structures.size();
  text << "nodes=" << chart.nodes.size() << " first_branch=" << chart.first_branch_node
       << " distinct_structures=" << structures.size() << "\n";
  if (!opts.svg_file.empty()) write_file(opts.svg_file, render_growth_svg(chart));
  emit(opts, r, text.str(), out);
}

void cmd_search_angle(const CommonOpts& opts, double lo, double hi, std::ostream& out) {
  const double angle = find_firehose_angle(opts.n, lo, hi);
  const double drift_lo = net_heading_drift(fib_word(opts.n), lo);
  const double drift_hi = net_heading_drift(fib_word(opts.n), hi);
  json r = report_envelope("search-angle", opts);
  r["inputs"] = {{"n", opts.n}, {"lo", lo}, {"hi", hi}};
  r["outputs"]["angle"] = angle;
  r["outputs"]["drift_at_lo"] = drift_lo;
  r["outputs"]["drift_at_hi"] = drift_hi;
  r["outputs"]["drift_metric"] = "rotation of the displacement vector between path halves";
  emit(opts, r, fmt_double(angle) + "\n", out);
}

void cmd_render(const CommonOpts& opts, const std::string& what, bool bbox, bool diagonal,
                bool center, bool mirror, bool no_fills, int max_tiles, std::ostream& out) {
  if (opts.svg_file.empty()) throw CLI::ValidationError("render requires --svg <file>");
  std::string svg;
  if (what == "path") {
    const DrawingRule rule = rule_by_name(opts.rule, opts.parity_base);
    const Word w = select_word(opts, rule);
    const Path path = trace(w, rule);
    PathOverlays overlays;
    overlays.bounding_box = bbox;
    overlays.entrance_exit_diagonal = diagonal;
    if (center) {
      const SymmetryResult sym = half_turn_symmetry(path);
      if (sym.symmetric) overlays.center_mark = sym.center;
    }
    svg = render_path_svg(path, RenderStyle{}, overlays);
  } else if (what == "deviation") {
    const Word w = opts.word.empty() ? fib_word(opts.n) : Word::ab(opts.word);
    svg = render_deviation_svg(w, RenderStyle{}, !no_fills, mirror);
  } else if (what == "growth") {
    svg = render_growth_svg(growth_chart(max_tiles));
  } else {
    throw CLI::ValidationError("unknown render target: " + what);
  }
  write_file(opts.svg_file, svg);
  json r = report_envelope("render", opts);
  r["inputs"] = {{"what", what}};
  r["outputs"]["svg"] = opts.svg_file;
  r["outputs"]["bytes"] = svg.size();
  emit(opts, r, "wrote " + opts.svg_file + " (" + std::to_string(svg.size()) + " bytes)\n", out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci substitution word toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  int exit_code = 0;

  auto add_common = [&](CLI::App* cmd, bool with_rule = false) {
    cmd->add_option("--n", opts.n, "word index n");
    cmd->add_option("--word", opts.word, "explicit word (letters)");
    cmd->add_flag("--json", opts.as_json, "emit a JSON report");
    cmd->add_option("--out", opts.out_file, "write the report to a file");
    if (with_rule) {
      cmd->add_option("--rule", opts.rule,
                      "drawing rule: identity|to-and-fro|double-letter|odd-even|omega|angle:<deg>");
      cmd->add_flag("--whole-word", opts.whole_word, "use F_n rather than W_n under digram rules");
      cmd->add_option("--parity-base", opts.parity_base, "first even index for the odd-even rule")
          ->check(CLI::Range(0, 1));
      cmd->add_option("--svg", opts.svg_file, "also write an SVG rendering");
    }
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate the Fibonacci word F_n");
  add_common(gen);
  bool use_concat = false;
  gen->add_flag("--concat", use_concat, "build by concatenation instead of substitution");
  gen->callback([&] {
    if (opts.n < 0) throw CLI::ValidationError("gen requires --n");
    const Word w = use_concat ? fib_word_concat(opts.n) : fib_word(opts.n);
    json r = report_envelope("gen", opts);
    r["inputs"] = {{"n", opts.n}, {"construction", use_concat ? "concat" : "substitution"}};
    r["outputs"]["word"] = w.letters();
    r["outputs"]["length"] = w.size();
    emit(opts, r, w.letters() + "\n", out);
  });

  // check
  auto* check = app.add_subcommand("check", "decide factor legality by desubstitution");
  add_common(check);
  bool closed_left = false, closed_right = false;
  check->add_flag("--closed-left", closed_left, "treat the left end as an exact boundary");
  check->add_flag("--closed-right", closed_right, "treat the right end as an exact boundary");
  check->callback([&] {
    if (opts.word.empty()) throw CLI::ValidationError("check requires --word");
    exit_code = cmd_check(opts, closed_left, closed_right, out);
  });

  // stats
  auto* stats = app.add_subcommand("stats", "letter counts of F_n or a word");
  add_common(stats);
  stats->callback([&] {
    const Word w = opts.word.empty() ? fib_word(opts.n) : Word::ab(opts.word);
    const WordStats s = word_stats(w);
    json r = report_envelope("stats", opts);
    r["inputs"] = {{"n", opts.n}};
    r["outputs"] = {{"count_a", s.count_a}, {"count_b", s.count_b}, {"length", s.length}};
    std::ostringstream text;
    text << "a=" << s.count_a << " b=" << s.count_b << " length=" << s.length << "\n";
    emit(opts, r, text.str(), out);
  });

  // factorize
  auto* factorize = app.add_subcommand("factorize", "structural factorizations");
  add_common(factorize);
  std::string scheme = "aba-baaba";
  factorize->add_option("--scheme", scheme, "aba-baaba|digram|nested|theorem31");
  factorize->callback([&] { cmd_factorize(opts, scheme, out); });

  // spectral
  auto* spectral = app.add_subcommand("spectral", "incidence matrix and Perron-Frobenius data");
  add_common(spectral);
  std::string subst_name = "theta";
  int power = 0;
  spectral->add_option("--subst", subst_name, "theta|omega");
  spectral->add_option("--power", power, "also print this matrix power");
  spectral->callback([&] { cmd_spectral(opts, subst_name, power, out); });

  // classify
  auto* classify = app.add_subcommand("classify", "parity / displacement / central-letter classes");
  add_common(classify);
  std::string what = "parity";
  classify->add_option("--what", what, "parity|displacement|central-letter");
  classify->callback([&] { cmd_classify(opts, what, out); });

  // trace
  auto* trace_cmd = app.add_subcommand("trace", "trace a drawing rule into a path");
  add_common(trace_cmd, true);
  trace_cmd->callback([&] { cmd_trace(opts, out); });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "measure a traced path or 1-D structure");
  add_common(analyze, true);
  std::string target;
  std::vector<double> box_sizes = {8.0, 4.0, 2.0, 1.0, 0.5};
  analyze->add_option("what", target,
                      "displacement|bbox|intersections|symmetry|dimension|structures|max-deviation|track")
      ->required();
  analyze->add_option("--box-sizes", box_sizes, "box sizes for dimension estimates");
  analyze->add_flag("--identify-reversal", opts.identify_reversal,
                    "identify time-reversed excursion structures");
  analyze->callback([&] { cmd_analyze(opts, target, box_sizes, out); });

  // growth
  auto* growth = app.add_subcommand("growth", "legal aba/baaba growth chart");
  add_common(growth);
  int max_tiles = 30;
  growth->add_option("--max-tiles", max_tiles, "tile budget");
  growth->add_flag("--identify-reversal", opts.identify_reversal,
                   "identify time-reversed excursion structures");
  growth->add_option("--svg", opts.svg_file, "write the chart as an SVG sheet");
  growth->callback([&] { cmd_growth(opts, max_tiles, out); });

  // search-angle
  auto* search = app.add_subcommand("search-angle", "bisect for the straight-projection angle");
  add_common(search);
  double lo = 130.0, hi = 145.0;
  search->add_option("--lo", lo, "bracket low (degrees)");
  search->add_option("--hi", hi, "bracket high (degrees)");
  search->callback([&] {
    if (opts.n < 0) throw CLI::ValidationError("search-angle requires --n");
    cmd_search_angle(opts, lo, hi, out);
  });

  // render
  auto* render = app.add_subcommand("render", "write an SVG figure");
  add_common(render, true);
  std::string render_what = "path";
  bool overlay_bbox = false, overlay_diag = false, overlay_center = false, overlay_mirror = false;
  bool no_fills = false;
  int render_tiles = 30;
  render->add_option("--what", render_what, "path|deviation|growth");
  render->add_flag("--bbox", overlay_bbox, "draw the bounding rectangle");
  render->add_flag("--diagonal", overlay_diag, "draw the entrance-exit chord");
  render->add_flag("--center", overlay_center, "mark the half-turn centre");
  render->add_flag("--mirror", overlay_mirror, "draw the palindrome mirror line");
  render->add_flag("--no-fills", no_fills, "skip excursion fills");
  render->add_option("--max-tiles", render_tiles, "tile budget for growth sheets");
  render->callback([&] {
    cmd_render(opts, render_what, overlay_bbox, overlay_diag, overlay_center, overlay_mirror,
               no_fills, render_tiles, out);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace fibword
